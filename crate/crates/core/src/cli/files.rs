//! Input file formats and the bundled demo corpus.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::growth::AlgebraPresentation;
use crate::linalg::{ExactMatrix, FieldSpec};
use crate::monomial::{parse_letters, MonomialPresentation};

/// A matrix presentation as stored on disk. Scalars are strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub field: FieldSpec,
    pub n: usize,
    #[serde(default = "default_true")]
    pub include_unit: bool,
    pub generators: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

fn default_true() -> bool {
    true
}

impl PresentationFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("presentation file: {e}")))
    }

    /// Validate into a presentation. Errors name the offending generator,
    /// row and column.
    pub fn to_presentation(&self) -> Result<AlgebraPresentation> {
        let field = match self.field {
            FieldSpec::PrimeField(p) => FieldSpec::prime(p)?,
            f => f,
        };
        let n = self.n;
        let mut gens = Vec::with_capacity(self.generators.len());
        for (g, rows) in self.generators.iter().enumerate() {
            if rows.len() != n {
                return Err(Error::Input(format!("generator {g}: expected {n} rows, found {}", rows.len())));
            }
            let mut entries = Vec::with_capacity(n * n);
            for (i, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(Error::Input(format!(
                        "generator {g}, row {i}: expected {n} entries, found {}",
                        row.len()
                    )));
                }
                for (j, s) in row.iter().enumerate() {
                    let v = field
                        .parse_scalar(s)
                        .map_err(|e| Error::Input(format!("generator {g}, entry ({i},{j}): {e}")))?;
                    entries.push(v);
                }
            }
            gens.push(ExactMatrix::from_entries(field, n, n, entries)?);
        }
        let pres = AlgebraPresentation::new(field, n, gens, self.include_unit)?;
        match &self.names {
            Some(names) => {
                for (i, a) in names.iter().enumerate() {
                    if a.is_empty() || names[..i].contains(a) {
                        return Err(Error::Input(format!("generator name {a:?} is empty or repeated")));
                    }
                }
                pres.with_names(names.clone())
            }
            None => Ok(pres),
        }
    }

    /// The canonical file for a presentation.
    pub fn from_presentation(pres: &AlgebraPresentation) -> Self {
        let n = pres.n();
        PresentationFile {
            field: pres.field(),
            n,
            include_unit: pres.include_unit(),
            generators: pres
                .generators()
                .iter()
                .map(|g| (0..n).map(|i| g.row(i).iter().map(|s| s.to_canonical_string()).collect()).collect())
                .collect(),
            names: pres.names().map(<[String]>::to_vec),
        }
    }
}

/// A monomial presentation as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialFile {
    pub alphabet: Vec<String>,
    pub forbidden: Vec<String>,
}

impl MonomialFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("monomial file: {e}")))
    }

    pub fn to_presentation(&self) -> Result<MonomialPresentation> {
        let words = self
            .forbidden
            .iter()
            .enumerate()
            .map(|(i, s)| {
                if s.is_empty() {
                    return Err(Error::Input(format!("forbidden word {i} is empty")));
                }
                parse_letters(&self.alphabet, s).map_err(|e| Error::Input(format!("forbidden word {i}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialPresentation::new(self.alphabet.clone(), words)
    }
}

/// The bundled corpus, addressable as `demo:<name>`.
pub const DEMOS: &[(&str, &str)] = &[
    ("e12-e21", include_str!("../../demo/e12-e21.json")),
    ("e12-e21-f2", include_str!("../../demo/e12-e21-f2.json")),
    ("zero", include_str!("../../demo/zero.json")),
    ("upper-triangular", include_str!("../../demo/upper-triangular.json")),
    ("unipotent", include_str!("../../demo/unipotent.json")),
    ("block-m2-m1", include_str!("../../demo/block-m2-m1.json")),
    ("monomial-yx-yy", include_str!("../../demo/monomial-yx-yy.json")),
    ("free-2", include_str!("../../demo/free-2.json")),
];

pub fn demo_source(name: &str) -> Option<&'static str> {
    let name = name.strip_suffix(".json").unwrap_or(name);
    DEMOS.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// Read `path`, or a corpus entry when it is written `demo:<name>`.
pub fn read_source(path: &str) -> Result<String> {
    match path.strip_prefix("demo:") {
        Some(name) => demo_source(name)
            .map(str::to_owned)
            .ok_or_else(|| Error::Input(format!("no demo named {name:?}"))),
        None => std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}"))),
    }
}

pub fn load_presentation(path: &str) -> Result<AlgebraPresentation> {
    PresentationFile::parse(&read_source(path)?)?.to_presentation()
}

pub fn load_monomial(path: &str) -> Result<MonomialPresentation> {
    MonomialFile::parse(&read_source(path)?)?.to_presentation()
}
