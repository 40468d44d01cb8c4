//! Constructive word reduction in a matrix algebra of bounded growth.
//!
//! Let `S ⊂ M_n(k)` satisfy `dim kSⁱ − dim kS^{i−1} ≤ ℓ` for every `i`, and
//! put `m = ℓ(n+1)`. Every word of length `m` is then a linear combination of
//! strictly shorter words. [`Reducer::step`] performs one rewrite of a
//! length-`m` word `w = a_1 … a_m`, looking at its `ℓ+1` factors
//! `ṽ_j = a_j … a_{ℓn+j−1}` of length `ℓn`:
//!
//! * all factors have distinct matrices: `ℓ+1` elements of `kS^{ℓn}` are
//!   dependent modulo `kS^{ℓn−1}`, so the lex-largest factor with a nonzero
//!   coefficient is solved for and substituted back into `w`. Every
//!   resulting word of length `m` is lex-smaller than `w`;
//! * two factors `ṽ_p`, `ṽ_q` (`p < q`) have the same matrix but differ as
//!   sequences: the larger spelling is replaced by the smaller one, which
//!   gives a lex-smaller word with the same matrix;
//! * two factors coincide as sequences: the overlap gives
//!   `w = prefix · uⁿ · suffix` with `u = a_p … a_{q−1}`, and Cayley–Hamilton
//!   for the matrix of `u` rewrites `uⁿ` in lower powers.
//!
//! Words of length `m` only ever move down in lex order, so
//! [`Reducer::reduce`] terminates. Each step checks its matrix identity
//! before it is returned.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::growth::{is_irreducible, measured_bergman_bound, span_filtration, stabilized_profile, AlgebraPresentation, GrowthProfile};
use crate::linalg::{charpoly, solve_dependence, EchelonBasis, ExactMatrix, FieldSpec, Scalar};
use crate::words::{compare_lex, consecutive_subwords, enumerate_words, power_decompose, word_count, Word};

/// Default limit on rewrite steps per word.
pub const DEFAULT_STEP_BUDGET: usize = 200_000;
pub const DEFAULT_FACTOR_STEP_LIMIT: usize = 1_000;

/// `coefficient · word`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coefficient: Scalar,
    pub word: Word,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    InSpan,
    DependenceSubstitution,
    CayleyHamilton,
}

impl StepKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            StepKind::InSpan => "InSpan",
            StepKind::DependenceSubstitution => "DependenceSubstitution",
            StepKind::CayleyHamilton => "CayleyHamilton",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepDetail {
    /// The word's matrix was solved directly against shorter basis words.
    InSpan,
    /// `Σ_j α_j v_j + u = 0` among the factors (1-based positions), solved
    /// for the factor at `position`; `residual` is `u` over basis words of
    /// length `< ℓn`.
    Dependence {
        position: usize,
        factors: Vec<Word>,
        alphas: Vec<Scalar>,
        residual: Vec<Term>,
    },
    /// Factors at `p < q` share a matrix; the factor at `replaced_at` was
    /// overwritten with `replacement`.
    Respelling { p: usize, q: usize, replaced_at: usize, replacement: Word },
    /// `w = prefix · baseᵉ · suffix`, with `charpoly` the non-leading
    /// coefficients of the base matrix's characteristic polynomial.
    CayleyHamilton {
        p: usize,
        q: usize,
        prefix: Word,
        base: Word,
        exponent: usize,
        suffix: Word,
        charpoly: Vec<Scalar>,
    },
}

/// One rewrite `input_word = Σ output_terms`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub kind: StepKind,
    pub input_word: Word,
    pub output_terms: Vec<Term>,
    pub detail: StepDetail,
}

/// `word = Σ terms`, every term strictly shorter than `word`, together with
/// the derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub word: Word,
    pub terms: Vec<Term>,
    pub trace: Vec<RewriteStep>,
}

/// Why a certificate failed to verify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateCheck {
    Valid,
    AlphabetMismatch,
    /// Term at this index is not strictly shorter than the word.
    LengthViolation(usize),
    /// Coefficient over the wrong field.
    FieldMismatch(usize),
    MatrixMismatch,
    /// Trace step at this index does not hold or does not chain.
    TraceMismatch(usize),
}

impl CertificateCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, CertificateCheck::Valid)
    }

    pub fn reason(&self) -> &'static str {
        match self {
            CertificateCheck::Valid => "valid",
            CertificateCheck::AlphabetMismatch => "alphabet-mismatch",
            CertificateCheck::LengthViolation(_) => "length-violation",
            CertificateCheck::FieldMismatch(_) => "field-mismatch",
            CertificateCheck::MatrixMismatch => "matrix-mismatch",
            CertificateCheck::TraceMismatch(_) => "trace-mismatch",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReduceOptions {
    /// Solve every word directly against shorter basis words instead of
    /// running the factor analysis.
    pub direct_span: bool,
    /// Factor-analysis steps allowed in one [`Reducer::reduce`] call. The
    /// factor procedure terminates but may visit exponentially many words of
    /// the same length; past this limit the remaining words are solved
    /// directly.
    pub factor_step_limit: usize,
    pub step_budget: usize,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions { direct_span: false, factor_step_limit: DEFAULT_FACTOR_STEP_LIMIT, step_budget: DEFAULT_STEP_BUDGET }
    }
}

/// Sparse linear combination keyed in length-lex order.
type Combination = BTreeMap<Word, Scalar>;

fn accumulate(expr: &mut Combination, word: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match expr.get_mut(&word) {
        Some(existing) => {
            let sum = &*existing + &c;
            if sum.is_zero() {
                expr.remove(&word);
            } else {
                *existing = sum;
            }
        }
        None => {
            expr.insert(word, c);
        }
    }
}

fn to_terms(expr: Combination) -> Vec<Term> {
    expr.into_iter().map(|(word, coefficient)| Term { coefficient, word }).collect()
}

/// `Σ c_i · image(w_i)`.
pub fn evaluate_terms(pres: &AlgebraPresentation, terms: &[Term]) -> ExactMatrix {
    let mut acc = ExactMatrix::zeros(pres.field(), pres.n(), pres.n());
    for t in terms {
        acc.add_scaled(&t.coefficient, &pres.image(&t.word));
    }
    acc
}

/// Words together with an echelon basis of their images.
struct WordSpan {
    words: Vec<Word>,
    basis: EchelonBasis,
}

impl WordSpan {
    fn new(pres: &AlgebraPresentation, words: Vec<Word>) -> Self {
        let mut basis = EchelonBasis::new(pres.field(), pres.n() * pres.n());
        for w in &words {
            let accepted = basis.insert(&pres.image(w).to_vector());
            debug_assert!(accepted, "profile basis words are independent");
        }
        WordSpan { words, basis }
    }

    fn express(&self, v: &[Scalar]) -> Option<Vec<Term>> {
        let coords = self.basis.express(v)?;
        Some(
            coords
                .into_iter()
                .zip(&self.words)
                .filter(|(c, _)| !c.is_zero())
                .map(|(coefficient, w)| Term { coefficient, word: w.clone() })
                .collect(),
        )
    }
}

/// Reduction context for one presentation and one ℓ.
pub struct Reducer<'a> {
    pres: &'a AlgebraPresentation,
    ell: usize,
    m: usize,
    profile: GrowthProfile,
    /// Basis of `kS^{ℓn−1}`.
    below_factor: WordSpan,
    /// Basis of `kS^{m−1}`.
    below_word: WordSpan,
    options: ReduceOptions,
}

impl<'a> Reducer<'a> {
    /// Check the growth hypothesis `d_i − d_{i−1} ≤ ℓ` for `i ≤ ℓ(n+1)` and
    /// prepare the shorter-word bases.
    pub fn new(pres: &'a AlgebraPresentation, ell: usize) -> Result<Self> {
        Self::with_options(pres, ell, ReduceOptions::default())
    }

    pub fn with_options(pres: &'a AlgebraPresentation, ell: usize, options: ReduceOptions) -> Result<Self> {
        if ell == 0 {
            return Err(Error::Input("ell must be a positive integer".into()));
        }
        let n = pres.n();
        let m = ell * (n + 1);
        let profile = span_filtration(pres, m)?;
        if let Some((i, d)) = profile.differences.iter().enumerate().find(|(_, &d)| d > ell) {
            return Err(Error::GrowthHypothesisViolated(format!(
                "d_{} - d_{} = {d} exceeds ell = {ell}",
                i + 1,
                i
            )));
        }
        let below_factor = WordSpan::new(pres, profile.basis_words_up_to(ell * n - 1).cloned().collect());
        let below_word = WordSpan::new(pres, profile.basis_words_up_to(m - 1).cloned().collect());
        Ok(Reducer { pres, ell, m, profile, below_factor, below_word, options })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Word length `ℓ(n+1)` handled by this reducer.
    pub fn word_length(&self) -> usize {
        self.m
    }

    pub fn profile(&self) -> &GrowthProfile {
        &self.profile
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        if w.alphabet_size() != self.pres.alphabet_size() {
            return Err(Error::Input(format!(
                "word over {} letters, presentation has {} generators",
                w.alphabet_size(),
                self.pres.alphabet_size()
            )));
        }
        if w.len() != self.m {
            return Err(Error::WrongLength { expected: self.m, found: w.len() });
        }
        Ok(())
    }

    /// One rewrite of a word of length `ℓ(n+1)`.
    pub fn step(&self, w: &Word) -> Result<RewriteStep> {
        self.step_with(w, self.options.direct_span)
    }

    fn step_with(&self, w: &Word, direct: bool) -> Result<RewriteStep> {
        self.check_word(w)?;
        let img = self.pres.image(w);
        let step = if img.is_zero() {
            RewriteStep { kind: StepKind::InSpan, input_word: w.clone(), output_terms: Vec::new(), detail: StepDetail::InSpan }
        } else if direct {
            self.in_span(w, &img)?
        } else {
            self.factor_step(w)?
        };
        self.check_step(&step, &img)?;
        Ok(step)
    }

    fn in_span(&self, w: &Word, img: &ExactMatrix) -> Result<RewriteStep> {
        let terms = self.below_word.express(&img.to_vector()).ok_or_else(|| {
            Error::GrowthHypothesisViolated(format!("{w} is not in the span of shorter words"))
        })?;
        Ok(RewriteStep { kind: StepKind::InSpan, input_word: w.clone(), output_terms: terms, detail: StepDetail::InSpan })
    }

    fn factor_step(&self, w: &Word) -> Result<RewriteStep> {
        let n = self.pres.n();
        let sub = self.ell * n;
        let factors: Vec<Word> = consecutive_subwords(w, sub)?.into_iter().map(|(_, f)| f).collect();
        let images: Vec<ExactMatrix> = factors.iter().map(|f| self.pres.image(f)).collect();

        // first coinciding pair p < q (0-based here)
        let pair = (0..factors.len())
            .flat_map(|q| (0..q).map(move |p| (p, q)))
            .find(|&(p, q)| images[p] == images[q]);

        if let Some((p, q)) = pair {
            if factors[p] == factors[q] {
                return self.cayley_hamilton(w, p + 1, q + 1);
            }
            let (replaced_at, replacement) = if compare_lex(&factors[q], &factors[p])?.is_lt() {
                (p, factors[q].clone())
            } else {
                (q, factors[p].clone())
            };
            let respelled = w.splice(replaced_at, &replacement);
            return Ok(RewriteStep {
                kind: StepKind::DependenceSubstitution,
                input_word: w.clone(),
                output_terms: vec![Term { coefficient: self.pres.field().one(), word: respelled }],
                detail: StepDetail::Respelling { p: p + 1, q: q + 1, replaced_at: replaced_at + 1, replacement },
            });
        }

        // all factor matrices distinct, hence all spellings distinct
        let mut order: Vec<usize> = (0..factors.len()).collect();
        order.sort_by(|&a, &b| factors[a].letters().cmp(factors[b].letters()));
        let targets: Vec<Vec<Scalar>> = order.iter().map(|&j| images[j].to_vector()).collect();
        let modulo: Vec<Vec<Scalar>> =
            self.below_factor.words.iter().map(|b| self.pres.image(b).to_vector()).collect();
        let dep = solve_dependence(self.pres.field(), &targets, &modulo)?.ok_or_else(|| {
            Error::GrowthHypothesisViolated(format!(
                "the {} factors of length {sub} of {w} are independent modulo words of length < {sub}",
                factors.len()
            ))
        })?;
        let field = self.pres.field();
        let p = order[dep.top];
        let mut alphas = vec![field.zero(); factors.len()];
        for (rank, &j) in order.iter().enumerate() {
            alphas[j] = dep.coefficients[rank].clone();
        }
        let residual: Vec<Term> = dep
            .residual_coords
            .iter()
            .zip(&self.below_factor.words)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, b)| Term { coefficient: c.clone(), word: b.clone() })
            .collect();

        // v_p = Σ_{j≠p} α_j v_j + u, substituted at position p
        let prefix = w.slice(0, p);
        let suffix = w.slice(p + sub, w.len());
        let mut expr = Combination::new();
        for (j, a) in alphas.iter().enumerate() {
            if j != p {
                accumulate(&mut expr, prefix.concat(&factors[j]).concat(&suffix), a.clone());
            }
        }
        for t in &residual {
            accumulate(&mut expr, prefix.concat(&t.word).concat(&suffix), t.coefficient.clone());
        }
        Ok(RewriteStep {
            kind: StepKind::DependenceSubstitution,
            input_word: w.clone(),
            output_terms: to_terms(expr),
            detail: StepDetail::Dependence { position: p + 1, factors, alphas, residual },
        })
    }

    /// `p < q` are 1-based positions of identical factors.
    fn cayley_hamilton(&self, w: &Word, p: usize, q: usize) -> Result<RewriteStep> {
        let n = self.pres.n();
        let dec = power_decompose(w, p, q, n, self.ell * n)?;
        let cp = charpoly(&self.pres.image(&dec.base))?;
        // uⁿ = −Σ_{k<n} c_k u^k
        let mut expr = Combination::new();
        for (k, c) in cp.iter().enumerate() {
            let word = dec.prefix.concat(&dec.base.power(k)).concat(&dec.suffix);
            accumulate(&mut expr, word, -c);
        }
        Ok(RewriteStep {
            kind: StepKind::CayleyHamilton,
            input_word: w.clone(),
            output_terms: to_terms(expr),
            detail: StepDetail::CayleyHamilton {
                p,
                q,
                prefix: dec.prefix,
                base: dec.base,
                exponent: dec.exponent,
                suffix: dec.suffix,
                charpoly: cp,
            },
        })
    }

    fn check_step(&self, step: &RewriteStep, img: &ExactMatrix) -> Result<()> {
        let w = &step.input_word;
        for t in &step.output_terms {
            let descends = t.word.len() < w.len()
                || (t.word.len() == w.len() && t.word.letters() < w.letters());
            if !descends {
                return Err(Error::InvariantViolated(format!("step on {w} produced {} which does not descend", t.word)));
            }
        }
        if &evaluate_terms(self.pres, &step.output_terms) != img {
            return Err(Error::InvariantViolated(format!("{} step on {w} breaks the matrix identity", step.kind.as_str())));
        }
        Ok(())
    }

    /// Rewrite `w` until every term is strictly shorter than `w`.
    pub fn reduce(&self, w: &Word) -> Result<ReductionCertificate> {
        self.check_word(w)?;
        let field = self.pres.field();
        let mut expr = Combination::new();
        expr.insert(w.clone(), field.one());
        let mut trace = Vec::new();
        let mut factor_steps = 0;
        loop {
            let Some((top, coeff)) = expr.pop_last() else { break };
            if top.len() < self.m {
                expr.insert(top, coeff);
                break;
            }
            if trace.len() >= self.options.step_budget {
                return Err(Error::StepBudgetExceeded(self.options.step_budget));
            }
            let direct = self.options.direct_span || factor_steps >= self.options.factor_step_limit;
            let step = self.step_with(&top, direct)?;
            if !matches!(step.detail, StepDetail::InSpan) {
                factor_steps += 1;
            }
            for t in &step.output_terms {
                accumulate(&mut expr, t.word.clone(), &coeff * &t.coefficient);
            }
            trace.push(step);
        }
        Ok(ReductionCertificate { word: w.clone(), terms: to_terms(expr), trace })
    }
}

/// One rewrite step; see [`Reducer::step`].
pub fn lemma_step(pres: &AlgebraPresentation, w: &Word, ell: usize) -> Result<RewriteStep> {
    Reducer::new(pres, ell)?.step(w)
}

/// Reduce a word of length `ℓ(n+1)` to strictly shorter words.
pub fn reduce_word(pres: &AlgebraPresentation, w: &Word, ell: usize) -> Result<ReductionCertificate> {
    Reducer::new(pres, ell)?.reduce(w)
}

/// Check a certificate by exact matrix arithmetic.
pub fn verify_certificate(pres: &AlgebraPresentation, cert: &ReductionCertificate) -> CertificateCheck {
    let t = pres.alphabet_size();
    let field = pres.field();
    let words_ok = |w: &Word| w.alphabet_size() == t;
    if !words_ok(&cert.word)
        || !cert.terms.iter().all(|x| words_ok(&x.word))
        || !cert.trace.iter().all(|s| words_ok(&s.input_word) && s.output_terms.iter().all(|x| words_ok(&x.word)))
    {
        return CertificateCheck::AlphabetMismatch;
    }
    for (i, term) in cert.terms.iter().enumerate() {
        if term.word.len() >= cert.word.len() {
            return CertificateCheck::LengthViolation(i);
        }
        if term.coefficient.field() != field {
            return CertificateCheck::FieldMismatch(i);
        }
    }
    if pres.image(&cert.word) != evaluate_terms(pres, &cert.terms) {
        return CertificateCheck::MatrixMismatch;
    }
    if !cert.trace.is_empty() {
        // replay the derivation from `word`
        let mut expr = Combination::new();
        expr.insert(cert.word.clone(), field.one());
        for (i, step) in cert.trace.iter().enumerate() {
            if step.output_terms.iter().any(|x| x.coefficient.field() != field) {
                return CertificateCheck::TraceMismatch(i);
            }
            let Some(coeff) = expr.remove(&step.input_word) else {
                return CertificateCheck::TraceMismatch(i);
            };
            if pres.image(&step.input_word) != evaluate_terms(pres, &step.output_terms) {
                return CertificateCheck::TraceMismatch(i);
            }
            for x in &step.output_terms {
                accumulate(&mut expr, x.word.clone(), &coeff * &x.coefficient);
            }
        }
        if to_terms(expr) != cert.terms {
            return CertificateCheck::TraceMismatch(cert.trace.len());
        }
    }
    CertificateCheck::Valid
}

/// Options for [`verify_comb_lemma`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaOptions {
    /// Number of length-m words to reduce and certify.
    pub certificates: usize,
    pub seed: u64,
}

impl Default for LemmaOptions {
    fn default() -> Self {
        LemmaOptions { certificates: 8, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedWord {
    pub certificate: ReductionCertificate,
    pub check: CertificateCheck,
}

/// Outcome of checking the word-reduction statement on one presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub n: usize,
    pub field: FieldSpec,
    pub measured_bound: usize,
    pub ell: usize,
    /// Set when a measured bound of 0 was raised to ℓ = 1.
    pub ell_clamped: bool,
    /// `m = ℓ(n+1)`.
    pub word_length: usize,
    pub dims: Vec<usize>,
    pub irreducible: bool,
    pub algebra_dim: usize,
    /// `d_{m−1} = n²`; only checked for irreducible presentations.
    pub span_claim: Option<bool>,
    /// `d_m = d_{m−1}`: every word of length m lies in `kS^{m−1}`.
    pub length_m_reducible: bool,
    /// `n²` and `ℓ²(n+1) − ℓ + 1`. The inequality is only claimed for
    /// irreducible presentations.
    pub inequality_lhs: u128,
    pub inequality_rhs: u128,
    pub inequality_holds: bool,
    pub seed: u64,
    pub certified: Vec<CertifiedWord>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.span_claim.unwrap_or(true)
            && self.length_m_reducible
            && (self.inequality_holds || !self.irreducible)
            && self.certified.iter().all(|c| c.check.is_valid())
    }
}

/// Sample of length-`len` words: the lex-first half, then uniform random
/// words from a seeded generator. All words when there are at most `k`.
pub fn sample_words(alphabet_size: usize, len: usize, k: usize, seed: u64) -> Vec<Word> {
    if word_count(alphabet_size, len).is_some_and(|c| c <= k as u64) {
        return enumerate_words(alphabet_size, len, k as u64).map(Iterator::collect).unwrap_or_default();
    }
    let first = k.div_ceil(2);
    let mut out: Vec<Word> = enumerate_words(alphabet_size, len, u64::MAX)
        .map(|e| e.take(first).collect())
        .unwrap_or_default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < k {
        let letters = (0..len).map(|_| rng.gen_range(0..alphabet_size)).collect();
        out.push(Word::new(letters, alphabet_size).expect("letters in range"));
    }
    out
}

/// Check that words of length `ℓ(n+1)` reduce, that the words of length
/// `ℓ(n+1) − 1` span `M_n` when the presentation is irreducible, and the
/// dimension count `n² ≤ ℓ²(n+1) − ℓ + 1`. `ell` defaults to the measured
/// Bergman bound (a bound of 0 is raised to 1).
pub fn verify_comb_lemma(pres: &AlgebraPresentation, ell: Option<usize>, options: LemmaOptions) -> Result<LemmaReport> {
    let full = stabilized_profile(pres)?;
    let measured = measured_bergman_bound(&full);
    let (ell, ell_clamped) = match ell {
        Some(l) if l < measured.max(1) => {
            return Err(Error::Input(format!(
                "ell = {l} is below the measured Bergman bound {measured} of this generating set"
            )))
        }
        Some(l) => (l, false),
        None if measured == 0 => (1, true),
        None => (measured, false),
    };
    let n = pres.n();
    let reducer = Reducer::new(pres, ell)?;
    let m = reducer.word_length();
    let profile = reducer.profile();
    let (irreducible, algebra_dim) = is_irreducible(pres)?;
    let d = |i: usize| profile.dims[i];
    let span_claim = irreducible.then(|| d(m - 1) == n * n);
    let length_m_reducible = d(m) == d(m - 1);
    let (nn, l) = (n as u128, ell as u128);
    let inequality_lhs = nn * nn;
    let inequality_rhs = l * l * (nn + 1) - l + 1;

    let mut certified = Vec::new();
    for w in sample_words(pres.alphabet_size(), m, options.certificates, options.seed) {
        let certificate = reducer.reduce(&w)?;
        let check = verify_certificate(pres, &certificate);
        certified.push(CertifiedWord { certificate, check });
    }
    Ok(LemmaReport {
        n,
        field: pres.field(),
        measured_bound: measured,
        ell,
        ell_clamped,
        word_length: m,
        dims: profile.dims.clone(),
        irreducible,
        algebra_dim,
        span_claim,
        length_m_reducible,
        inequality_lhs,
        inequality_rhs,
        inequality_holds: inequality_lhs <= inequality_rhs,
        seed: options.seed,
        certified,
    })
}
