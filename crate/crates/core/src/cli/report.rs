//! Serialized report shapes. Scalars are always strings and integers are
//! plain JSON integers, so reports are byte-identical across platforms.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::growth::AlgebraPresentation;
use crate::linalg::{ExactMatrix, FieldSpec, Scalar};
use crate::reduction::{CertificateCheck, ReductionCertificate, RewriteStep, StepDetail, StepKind, Term};
use crate::words::Word;

pub const CERT_SCHEMA: &str = "cert-v1";
pub const BOUND_SCHEMA: &str = "bound-v1";

/// A letter on disk: an index, or a generator name when the presentation
/// has names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LetterDoc {
    Index(usize),
    Name(String),
}

/// Converts words to and from their serialized and printed forms.
#[derive(Clone, Copy, Debug)]
pub struct WordCodec<'a> {
    names: Option<&'a [String]>,
    alphabet_size: usize,
}

impl<'a> WordCodec<'a> {
    pub fn new(pres: &'a AlgebraPresentation) -> Self {
        WordCodec { names: pres.names(), alphabet_size: pres.alphabet_size() }
    }

    pub fn encode(&self, w: &Word) -> Vec<LetterDoc> {
        w.letters()
            .iter()
            .map(|&l| match self.names {
                Some(names) => LetterDoc::Name(names[l].clone()),
                None => LetterDoc::Index(l),
            })
            .collect()
    }

    fn letter(&self, token: &str) -> Result<usize> {
        if let Some(i) = self.names.and_then(|names| names.iter().position(|n| n == token)) {
            return Ok(i);
        }
        token
            .parse::<usize>()
            .map_err(|_| Error::Input(format!("unknown letter {token:?}")))
    }

    pub fn decode(&self, letters: &[LetterDoc]) -> Result<Word> {
        let idx = letters
            .iter()
            .map(|l| match l {
                LetterDoc::Index(i) => Ok(*i),
                LetterDoc::Name(s) => self.letter(s),
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(idx, self.alphabet_size)
    }

    /// Parse `"0,1,0"` or `"a,b,a"`; whitespace around letters is ignored.
    pub fn parse(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() {
            return Word::new(Vec::new(), self.alphabet_size);
        }
        let idx = text.split(',').map(|t| self.letter(t.trim())).collect::<Result<Vec<_>>>()?;
        Word::new(idx, self.alphabet_size)
    }

    /// `(0,1,0)`, or `a·b·a` with names; the empty word is `1`.
    pub fn show(&self, w: &Word) -> String {
        match self.names {
            Some(_) if w.is_empty() => "1".into(),
            Some(names) => w.letters().iter().map(|&l| names[l].as_str()).collect::<Vec<_>>().join("·"),
            None => w.to_string(),
        }
    }

    pub fn show_terms(&self, terms: &[Term]) -> String {
        if terms.is_empty() {
            return "0".into();
        }
        terms
            .iter()
            .map(|t| format!("{}·{}", t.coefficient, self.show(&t.word)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub fn matrix_json(m: &ExactMatrix) -> Value {
    json!((0..m.rows())
        .map(|i| m.row(i).iter().map(Scalar::to_canonical_string).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

pub fn field_json(f: FieldSpec) -> Value {
    serde_json::to_value(f).expect("field serializes")
}

pub fn scalars(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_canonical_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coefficient: String,
    pub word: Vec<LetterDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum DetailDoc {
    InSpan,
    Dependence { position: usize, factors: Vec<Vec<LetterDoc>>, alphas: Vec<String>, residual: Vec<TermDoc> },
    Respelling { p: usize, q: usize, replaced_at: usize, replacement: Vec<LetterDoc> },
    CayleyHamilton {
        p: usize,
        q: usize,
        prefix: Vec<LetterDoc>,
        base: Vec<LetterDoc>,
        exponent: usize,
        suffix: Vec<LetterDoc>,
        charpoly: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepDoc {
    pub kind: String,
    pub input_word: Vec<LetterDoc>,
    pub output_terms: Vec<TermDoc>,
    pub detail: DetailDoc,
}

/// A reduction certificate on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertDoc {
    pub schema: String,
    pub field: FieldSpec,
    pub ell: usize,
    pub word: Vec<LetterDoc>,
    pub terms: Vec<TermDoc>,
    pub trace: Vec<StepDoc>,
    /// Verification status at emission time; ignored on input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
}

fn terms_doc(codec: &WordCodec, terms: &[Term]) -> Vec<TermDoc> {
    terms
        .iter()
        .map(|t| TermDoc { coefficient: t.coefficient.to_canonical_string(), word: codec.encode(&t.word) })
        .collect()
}

fn detail_doc(codec: &WordCodec, d: &StepDetail) -> DetailDoc {
    match d {
        StepDetail::InSpan => DetailDoc::InSpan,
        StepDetail::Dependence { position, factors, alphas, residual } => DetailDoc::Dependence {
            position: *position,
            factors: factors.iter().map(|f| codec.encode(f)).collect(),
            alphas: scalars(alphas),
            residual: terms_doc(codec, residual),
        },
        StepDetail::Respelling { p, q, replaced_at, replacement } => DetailDoc::Respelling {
            p: *p,
            q: *q,
            replaced_at: *replaced_at,
            replacement: codec.encode(replacement),
        },
        StepDetail::CayleyHamilton { p, q, prefix, base, exponent, suffix, charpoly } => DetailDoc::CayleyHamilton {
            p: *p,
            q: *q,
            prefix: codec.encode(prefix),
            base: codec.encode(base),
            exponent: *exponent,
            suffix: codec.encode(suffix),
            charpoly: scalars(charpoly),
        },
    }
}

pub fn cert_doc(
    pres: &AlgebraPresentation,
    ell: usize,
    cert: &ReductionCertificate,
    check: Option<&CertificateCheck>,
) -> CertDoc {
    let codec = WordCodec::new(pres);
    CertDoc {
        schema: CERT_SCHEMA.into(),
        field: pres.field(),
        ell,
        word: codec.encode(&cert.word),
        terms: terms_doc(&codec, &cert.terms),
        trace: cert
            .trace
            .iter()
            .map(|s| StepDoc {
                kind: s.kind.as_str().into(),
                input_word: codec.encode(&s.input_word),
                output_terms: terms_doc(&codec, &s.output_terms),
                detail: detail_doc(&codec, &s.detail),
            })
            .collect(),
        check: check.map(|c| c.reason().to_owned()),
    }
}

fn parse_kind(s: &str) -> Result<StepKind> {
    [StepKind::InSpan, StepKind::DependenceSubstitution, StepKind::CayleyHamilton]
        .into_iter()
        .find(|k| k.as_str() == s)
        .ok_or_else(|| Error::Input(format!("unknown step kind {s:?}")))
}

fn parse_terms(field: FieldSpec, codec: &WordCodec, docs: &[TermDoc]) -> Result<Vec<Term>> {
    docs.iter()
        .map(|t| Ok(Term { coefficient: field.parse_scalar(&t.coefficient)?, word: codec.decode(&t.word)? }))
        .collect()
}

fn parse_detail(field: FieldSpec, codec: &WordCodec, d: &DetailDoc) -> Result<StepDetail> {
    let parse_scalars =
        |v: &[String]| v.iter().map(|s| field.parse_scalar(s)).collect::<Result<Vec<_>>>();
    Ok(match d {
        DetailDoc::InSpan => StepDetail::InSpan,
        DetailDoc::Dependence { position, factors, alphas, residual } => StepDetail::Dependence {
            position: *position,
            factors: factors.iter().map(|f| codec.decode(f)).collect::<Result<_>>()?,
            alphas: parse_scalars(alphas)?,
            residual: parse_terms(field, codec, residual)?,
        },
        DetailDoc::Respelling { p, q, replaced_at, replacement } => StepDetail::Respelling {
            p: *p,
            q: *q,
            replaced_at: *replaced_at,
            replacement: codec.decode(replacement)?,
        },
        DetailDoc::CayleyHamilton { p, q, prefix, base, exponent, suffix, charpoly } => StepDetail::CayleyHamilton {
            p: *p,
            q: *q,
            prefix: codec.decode(prefix)?,
            base: codec.decode(base)?,
            exponent: *exponent,
            suffix: codec.decode(suffix)?,
            charpoly: parse_scalars(charpoly)?,
        },
    })
}

/// Parse a `cert-v1` document against the presentation it refers to.
pub fn parse_cert(pres: &AlgebraPresentation, text: &str) -> Result<ReductionCertificate> {
    let doc: CertDoc = serde_json::from_str(text).map_err(|e| Error::Input(format!("certificate: {e}")))?;
    if doc.schema != CERT_SCHEMA {
        return Err(Error::Input(format!("certificate schema {:?}, expected {CERT_SCHEMA:?}", doc.schema)));
    }
    if doc.field != pres.field() {
        return Err(Error::FieldMismatch(format!("certificate over {}, presentation over {}", doc.field, pres.field())));
    }
    let field = pres.field();
    let codec = WordCodec::new(pres);
    let trace = doc
        .trace
        .iter()
        .map(|s| {
            Ok(RewriteStep {
                kind: parse_kind(&s.kind)?,
                input_word: codec.decode(&s.input_word)?,
                output_terms: parse_terms(field, &codec, &s.output_terms)?,
                detail: parse_detail(field, &codec, &s.detail)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ReductionCertificate {
        word: codec.decode(&doc.word)?,
        terms: parse_terms(field, &codec, &doc.terms)?,
        trace,
    })
}
