//! Matrix presentations and the growth filtration `d_i = dim kSⁱ`.
//!
//! `kSⁱ` is the span of the images of all words of length at most `i` in the
//! generators (the empty word maps to the identity when `include_unit` is
//! set). Levels are built incrementally: only words that added a new
//! dimension at level `i` are extended on the right to form candidates for
//! level `i + 1`, which is enough because any other word of length `i` is a
//! combination of those basis words and shorter ones.

use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, ExactMatrix, FieldSpec, Scalar};
use crate::words::Word;

/// Default cap on candidate words per level.
pub const DEFAULT_LEVEL_CAP: usize = 1 << 20;

/// A finite generating set `S ⊂ M_n(k)`. The list order is the generator
/// order `s_1 < s_2 < …` that every word ordering refers to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    field: FieldSpec,
    n: usize,
    generators: Vec<ExactMatrix>,
    include_unit: bool,
    names: Option<Vec<String>>,
}

impl AlgebraPresentation {
    pub fn new(field: FieldSpec, n: usize, generators: Vec<ExactMatrix>, include_unit: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("matrix size n must be positive".into()));
        }
        if generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        for (i, g) in generators.iter().enumerate() {
            if g.field() != field {
                return Err(Error::FieldMismatch(format!("generator {i} is over {}, expected {field}", g.field())));
            }
            if g.rows() != n || g.cols() != n {
                return Err(Error::SizeMismatch(format!(
                    "generator {i} is {}x{}, expected {n}x{n}",
                    g.rows(),
                    g.cols()
                )));
            }
        }
        Ok(AlgebraPresentation { field, n, generators, include_unit, names: None })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.generators.len() {
            return Err(Error::Input(format!(
                "{} names for {} generators",
                names.len(),
                self.generators.len()
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExactMatrix] {
        &self.generators
    }

    pub fn include_unit(&self) -> bool {
        self.include_unit
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn alphabet_size(&self) -> usize {
        self.generators.len()
    }

    /// The matrix of a word; the empty word maps to the identity.
    pub fn image(&self, w: &Word) -> ExactMatrix {
        let mut acc = ExactMatrix::identity(self.field, self.n);
        for &l in w.letters() {
            acc = &acc * &self.generators[l];
        }
        acc
    }

    pub fn word(&self, letters: &[usize]) -> Result<Word> {
        Word::new(letters.to_vec(), self.alphabet_size())
    }
}

/// The measured filtration of one presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthProfile {
    /// `d_0, …, d_H`.
    pub dims: Vec<usize>,
    pub horizon: usize,
    /// `d_i − d_{i−1}` for `i = 1..=H`.
    pub differences: Vec<usize>,
    /// Per level, the words (in length-lex order) that raised the dimension.
    pub basis_words: Vec<Vec<Word>>,
    /// First `i ≥ 1` with `d_i = d_{i−1}`.
    pub stabilized_at: Option<usize>,
}

impl GrowthProfile {
    /// Build a profile from the dimension sequence alone (no basis words).
    pub fn from_dims(dims: Vec<usize>) -> Self {
        let horizon = dims.len().saturating_sub(1);
        let differences = dims.windows(2).map(|p| p[1].saturating_sub(p[0])).collect();
        let stabilized_at = (1..dims.len()).find(|&i| dims[i] == dims[i - 1]);
        GrowthProfile { basis_words: vec![Vec::new(); dims.len()], dims, horizon, differences, stabilized_at }
    }

    pub fn max_difference(&self) -> usize {
        self.differences.iter().copied().max().unwrap_or(0)
    }

    /// All basis words of length at most `level`, in discovery order.
    pub fn basis_words_up_to(&self, level: usize) -> impl Iterator<Item = &Word> {
        self.basis_words.iter().take(level + 1).flatten()
    }

    /// Dimension at `level`, extending a stabilized profile past its horizon.
    pub fn dim_at(&self, level: usize) -> Option<usize> {
        match self.dims.get(level) {
            Some(&d) => Some(d),
            None if self.stabilized_at.is_some() => self.dims.last().copied(),
            None => None,
        }
    }
}

/// The Bergman bound measured over the profile's window: `max_i (d_i − d_{i−1})`.
/// Exact once the profile has stabilized, a lower estimate otherwise.
pub fn measured_bergman_bound(profile: &GrowthProfile) -> usize {
    profile.max_difference()
}

/// Compute `d_0, …, d_horizon` by incremental spanning.
pub fn span_filtration(pres: &AlgebraPresentation, horizon: usize) -> Result<GrowthProfile> {
    span_filtration_capped(pres, horizon, DEFAULT_LEVEL_CAP)
}

pub fn span_filtration_capped(pres: &AlgebraPresentation, horizon: usize, level_cap: usize) -> Result<GrowthProfile> {
    if horizon == 0 {
        return Err(Error::HorizonZero);
    }
    let t = pres.alphabet_size();
    let mut basis = EchelonBasis::new(pres.field, pres.n * pres.n);
    let mut dims = Vec::with_capacity(horizon + 1);
    let mut basis_words: Vec<Vec<Word>> = Vec::with_capacity(horizon + 1);
    let unit = Word::empty(t);
    let mut frontier: Vec<(Word, ExactMatrix)> = Vec::new();
    let mut level0 = Vec::new();
    if pres.include_unit {
        let id = pres.image(&unit);
        if basis.insert(&id.to_vector()) {
            level0.push(unit.clone());
        }
    }
    // Level 1 always starts from the unit word, whether or not it is counted.
    frontier.push((unit, ExactMatrix::identity(pres.field, pres.n)));
    dims.push(basis.rank());
    basis_words.push(level0);

    let mut stabilized_at = None;
    for level in 1..=horizon {
        if stabilized_at.is_some() {
            dims.push(basis.rank());
            basis_words.push(Vec::new());
            continue;
        }
        let candidates = frontier.len() * t;
        if candidates > level_cap {
            return Err(Error::BudgetExceeded(format!(
                "level {level} needs {candidates} candidate words (cap {level_cap})"
            )));
        }
        let mut next = Vec::new();
        for (w, m) in &frontier {
            for (letter, g) in pres.generators.iter().enumerate() {
                let img = m * g;
                if basis.insert(&img.to_vector()) {
                    next.push((w.push(letter), img));
                }
            }
        }
        dims.push(basis.rank());
        basis_words.push(next.iter().map(|(w, _)| w.clone()).collect());
        if next.is_empty() {
            stabilized_at = Some(level);
        }
        frontier = next;
    }
    let differences = dims.windows(2).map(|p| p[1] - p[0]).collect();
    Ok(GrowthProfile { dims, horizon, differences, basis_words, stabilized_at })
}

/// Decide whether `S` generates all of `M_n` (after extending scalars to the
/// algebraic closure). Returns the verdict and `dim_k` of the unital algebra
/// generated by `S`. Rank does not change under field extension, so the
/// closure is never needed: the test is `dim_k A = n²`.
pub fn is_irreducible(pres: &AlgebraPresentation) -> Result<(bool, usize)> {
    let dim = algebra_dimension(pres)?;
    Ok((dim == pres.n * pres.n, dim))
}

/// `dim_k` of the unital algebra generated by the presentation.
pub fn algebra_dimension(pres: &AlgebraPresentation) -> Result<usize> {
    let unital = AlgebraPresentation { include_unit: true, ..pres.clone() };
    let profile = stabilized_profile(&unital)?;
    Ok(*profile.dims.last().expect("profile has level 0"))
}

/// Run the filtration until it stabilizes. For matrices this happens by level
/// `n² + 1` at the latest, since every earlier level adds a dimension.
pub fn stabilized_profile(pres: &AlgebraPresentation) -> Result<GrowthProfile> {
    let horizon = pres.n * pres.n + 1;
    let profile = span_filtration(pres, horizon)?;
    debug_assert!(profile.stabilized_at.is_some());
    Ok(profile)
}

/// A basis of the algebra generated by the presentation: the rows of the
/// reduced row-echelon form of the span, reshaped into matrices. For an
/// irreducible presentation this is `E_11, E_12, …, E_nn` in row-major order.
pub fn algebra_basis(pres: &AlgebraPresentation) -> Result<Vec<ExactMatrix>> {
    let unital = AlgebraPresentation { include_unit: true, ..pres.clone() };
    let profile = stabilized_profile(&unital)?;
    let vectors: Vec<Vec<Scalar>> = profile
        .basis_words_up_to(profile.horizon)
        .map(|w| unital.image(w).to_vector())
        .collect();
    let n = pres.n;
    let stacked = ExactMatrix::from_rows(pres.field, vectors)?;
    let r = crate::linalg::rref(&stacked);
    (0..r.rank)
        .map(|i| ExactMatrix::from_entries(pres.field, n, n, r.reduced.row(i).to_vec()))
        .collect()
}

/// Block-diagonal (subdirect product) presentation: the `i`-th generator is
/// `diag(part_1[i], part_2[i], …)`.
pub fn block_diagonal(parts: &[AlgebraPresentation]) -> Result<AlgebraPresentation> {
    let first = parts.first().ok_or_else(|| Error::Input("block_diagonal needs at least one part".into()))?;
    let field = first.field;
    let t = first.alphabet_size();
    for p in &parts[1..] {
        if p.field != field {
            return Err(Error::FieldMismatch(format!("{} vs {field}", p.field)));
        }
        if p.alphabet_size() != t {
            return Err(Error::GeneratorCountMismatch(t, p.alphabet_size()));
        }
    }
    let n = parts.iter().map(|p| p.n).sum();
    let generators = (0..t)
        .map(|i| {
            let blocks: Vec<&ExactMatrix> = parts.iter().map(|p| &p.generators[i]).collect();
            ExactMatrix::block_diagonal(&blocks)
        })
        .collect::<Result<Vec<_>>>()?;
    let include_unit = parts.iter().all(|p| p.include_unit);
    let mut out = AlgebraPresentation::new(field, n, generators, include_unit)?;
    out.names = first.names.clone();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank_of;
    use crate::words::enumerate_words;

    fn e(n: usize, i: usize, j: usize) -> ExactMatrix {
        ExactMatrix::unit(FieldSpec::Rationals, n, i, j)
    }

    fn pres(gens: Vec<ExactMatrix>) -> AlgebraPresentation {
        let n = gens[0].rows();
        AlgebraPresentation::new(gens[0].field(), n, gens, true).unwrap()
    }

    /// Brute force: rank of all words of length ≤ i, for each i.
    fn oracle_dims(p: &AlgebraPresentation, horizon: usize) -> Vec<usize> {
        let mut vectors = Vec::new();
        let mut out = Vec::new();
        for len in 0..=horizon {
            if len > 0 || p.include_unit() {
                for w in enumerate_words(p.alphabet_size(), len, 1 << 16).unwrap() {
                    vectors.push(p.image(&w).to_vector());
                }
            }
            out.push(rank_of(p.field(), &vectors));
        }
        out
    }

    #[test]
    fn e12_e21_profile() {
        let p = pres(vec![e(2, 0, 1), e(2, 1, 0)]);
        let prof = span_filtration(&p, 4).unwrap();
        assert_eq!(prof.dims, vec![1, 3, 4, 4, 4]);
        assert_eq!(prof.stabilized_at, Some(3));
        assert_eq!(measured_bergman_bound(&prof), 2);
        assert_eq!(prof.dims, oracle_dims(&p, 4));
        assert_eq!(is_irreducible(&p).unwrap(), (true, 4));
    }

    #[test]
    fn zero_generator_profile() {
        let p = pres(vec![ExactMatrix::zeros(FieldSpec::Rationals, 1, 1)]);
        let prof = span_filtration(&p, 3).unwrap();
        assert_eq!(prof.dims, vec![1, 1, 1, 1]);
        assert_eq!(prof.stabilized_at, Some(1));
        assert_eq!(measured_bergman_bound(&prof), 0);
    }

    #[test]
    fn upper_triangular_profile() {
        let p = pres(vec![e(2, 0, 0), e(2, 0, 1)]);
        let prof = span_filtration(&p, 3).unwrap();
        assert_eq!(prof.dims, vec![1, 3, 3, 3]);
        assert_eq!(prof.dims, oracle_dims(&p, 3));
        assert_eq!(is_irreducible(&p).unwrap(), (false, 3));
    }

    #[test]
    fn scalar_unit_is_irreducible() {
        let p = pres(vec![ExactMatrix::identity(FieldSpec::Rationals, 1)]);
        assert_eq!(is_irreducible(&p).unwrap(), (true, 1));
    }

    #[test]
    fn horizon_zero_rejected() {
        let p = pres(vec![e(2, 0, 1)]);
        assert_eq!(span_filtration(&p, 0), Err(Error::HorizonZero));
    }

    #[test]
    fn level_cap_enforced() {
        let p = pres(vec![e(2, 0, 1), e(2, 1, 0)]);
        assert!(matches!(span_filtration_capped(&p, 3, 1), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn without_unit() {
        let p = AlgebraPresentation::new(FieldSpec::Rationals, 2, vec![e(2, 0, 1), e(2, 1, 0)], false).unwrap();
        let prof = span_filtration(&p, 4).unwrap();
        assert_eq!(prof.dims, oracle_dims(&p, 4));
        assert_eq!(prof.dims[0], 0);
    }

    #[test]
    fn basis_words_are_independent() {
        let p = pres(vec![e(3, 0, 1), e(3, 1, 2), e(3, 2, 0)]);
        let prof = span_filtration(&p, 6).unwrap();
        for level in 0..=6 {
            let v: Vec<_> = prof.basis_words_up_to(level).map(|w| p.image(w).to_vector()).collect();
            assert_eq!(rank_of(p.field(), &v), prof.dims[level]);
            assert_eq!(v.len(), prof.dims[level]);
        }
        assert_eq!(prof.dims, oracle_dims(&p, 6));
        assert_eq!(*prof.dims.last().unwrap(), 9);
    }

    #[test]
    fn block_examples() {
        let q = FieldSpec::Rationals;
        let m2 = pres(vec![e(2, 0, 1), e(2, 1, 0)]);
        let m1 = pres(vec![ExactMatrix::identity(q, 1), ExactMatrix::identity(q, 1)]);
        let b = block_diagonal(&[m2.clone(), m1.clone()]).unwrap();
        assert_eq!(b.n(), 3);
        let want0 = ExactMatrix::from_i64(q, &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(b.generators()[0], want0);

        assert_eq!(block_diagonal(&[m2.clone()]).unwrap(), m2);

        let diag = block_diagonal(&[m2.clone(), m2.clone()]).unwrap();
        assert_eq!(algebra_dimension(&diag).unwrap(), 4);

        let one_gen = pres(vec![e(2, 0, 1)]);
        assert_eq!(
            block_diagonal(&[m2.clone(), one_gen]),
            Err(Error::GeneratorCountMismatch(2, 1))
        );
        let f5 = FieldSpec::prime(5).unwrap();
        let other = pres(vec![ExactMatrix::identity(f5, 1), ExactMatrix::identity(f5, 1)]);
        assert!(matches!(block_diagonal(&[m2, other]), Err(Error::FieldMismatch(_))));
    }

    #[test]
    fn basis_of_full_matrix_algebra_is_matrix_units() {
        let p = pres(vec![e(2, 0, 1), e(2, 1, 0)]);
        let b = algebra_basis(&p).unwrap();
        assert_eq!(b, vec![e(2, 0, 0), e(2, 0, 1), e(2, 1, 0), e(2, 1, 1)]);
    }
}
