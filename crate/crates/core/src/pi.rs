//! Standard identities and the pi-degree bound derived from growth.
//!
//! An irreducible representation `R → M_n` of an algebra whose generating
//! set has Bergman bound `c` satisfies `n² ≤ c²(n+1) − c + 1`, so
//! `n ≤ N(c) = ½(c² + √(c⁴ + 4c² − 4c + 4))`, and the algebra has pi degree
//! at most `N(c)`. A cruder bound is `c² + 1`. "pi degree at most N" is
//! tested here through the standard identity `S_{2N}`, which vanishes on
//! `M_N` (Amitsur–Levitzki).

use num_bigint::BigUint;
use num_integer::Roots;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::growth::{algebra_basis, measured_bergman_bound, AlgebraPresentation, GrowthProfile};
use crate::linalg::{ExactMatrix, FieldSpec, Scalar};

/// Largest standard polynomial evaluated without an explicit override.
pub const DEFAULT_DEGREE_CAP: usize = 12;
/// Default cap on argument tuples per identity test.
pub const DEFAULT_TUPLE_BUDGET: u64 = 1_000_000;
/// Digits after the decimal point in rendered closed-form bounds.
pub const N_REAL_DIGITS: u32 = 12;

/// `S_m(x_1, …, x_m) = Σ_σ sgn(σ) x_{σ(1)} ⋯ x_{σ(m)}` with the default cap.
pub fn standard_polynomial_eval(args: &[ExactMatrix]) -> Result<ExactMatrix> {
    standard_polynomial_eval_capped(args, DEFAULT_DEGREE_CAP)
}

/// Permutations are walked as a prefix tree: every node multiplies its
/// parent's cached prefix product by one argument, so each of the `m!`
/// terms costs a single matrix product.
pub fn standard_polynomial_eval_capped(args: &[ExactMatrix], cap: usize) -> Result<ExactMatrix> {
    let first = args.first().ok_or_else(|| Error::Input("standard polynomial needs m >= 1".into()))?;
    if args.len() > cap {
        return Err(Error::BudgetExceeded(format!("S_{} exceeds the degree cap {cap}", args.len())));
    }
    first.require_square()?;
    for a in args {
        if a.field() != first.field() || a.rows() != first.rows() || a.cols() != first.cols() {
            return Err(Error::SizeMismatch("standard polynomial arguments must share size and field".into()));
        }
    }
    let field = first.field();
    let n = first.rows();
    let mut acc = ExactMatrix::zeros(field, n, n);
    let mut used = vec![false; args.len()];
    let minus = -&field.one();
    let plus = field.one();
    walk(args, &mut used, None, false, &mut acc, &plus, &minus);
    Ok(acc)
}

fn walk(
    args: &[ExactMatrix],
    used: &mut [bool],
    prefix: Option<&ExactMatrix>,
    odd: bool,
    acc: &mut ExactMatrix,
    plus: &Scalar,
    minus: &Scalar,
) {
    let mut smaller_unused = 0;
    let mut any = false;
    for i in 0..args.len() {
        if used[i] {
            continue;
        }
        any = true;
        // choosing i first among the remaining creates one inversion per
        // smaller unused index
        let parity = odd ^ (smaller_unused % 2 == 1);
        smaller_unused += 1;
        let product = match prefix {
            Some(p) => p * &args[i],
            None => args[i].clone(),
        };
        used[i] = true;
        walk(args, used, Some(&product), parity, acc, plus, minus);
        used[i] = false;
    }
    if !any {
        if let Some(p) = prefix {
            acc.add_scaled(if odd { minus } else { plus }, p);
        }
    }
}

/// How tuples are chosen in [`test_identity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityMode {
    /// Strictly increasing index tuples from a basis of the algebra. Since
    /// `S_m` is multilinear and alternating this decides vanishing on the
    /// whole algebra.
    Basis,
    /// Every m-tuple of matrices in `M_n(𝔽_p)`.
    FieldExhaustive,
    /// Random elements of the algebra; trial `i` uses stream `i` of a ChaCha
    /// generator keyed by `seed`.
    Random { trials: u64, seed: u64 },
}

impl IdentityMode {
    pub fn label(&self) -> &'static str {
        match self {
            IdentityMode::Basis => "basis",
            IdentityMode::FieldExhaustive => "field-exhaustive",
            IdentityMode::Random { .. } => "random",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityVerdict {
    Vanishes,
    Counterexample { tuple_index: u64, args: Vec<ExactMatrix>, value: ExactMatrix },
}

impl IdentityVerdict {
    pub fn vanishes(&self) -> bool {
        matches!(self, IdentityVerdict::Vanishes)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub degree: usize,
    pub mode: IdentityMode,
    /// Size of the spanning set the tuples were drawn from (basis and random
    /// modes) or the number of matrices in `M_n(𝔽_p)`.
    pub pool_size: u64,
    pub tuples_tested: u64,
    pub verdict: IdentityVerdict,
}

/// Test whether `S_m` vanishes on the algebra generated by `pres`.
pub fn test_identity(pres: &AlgebraPresentation, m: usize, mode: IdentityMode) -> Result<IdentityOutcome> {
    test_identity_budgeted(pres, m, mode, DEFAULT_TUPLE_BUDGET)
}

pub fn test_identity_budgeted(
    pres: &AlgebraPresentation,
    m: usize,
    mode: IdentityMode,
    budget: u64,
) -> Result<IdentityOutcome> {
    if m == 0 {
        return Err(Error::Input("identity degree must be at least 1".into()));
    }
    if m > DEFAULT_DEGREE_CAP {
        return Err(Error::BudgetExceeded(format!("S_{m} exceeds the degree cap {DEFAULT_DEGREE_CAP}")));
    }
    match mode {
        IdentityMode::Basis => {
            let basis = algebra_basis(pres)?;
            let total = binomial(basis.len() as u64, m as u64);
            if total.is_none_or(|t| t > budget) {
                return Err(Error::BudgetExceeded(format!(
                    "C({}, {m}) basis tuples exceeds the budget {budget}",
                    basis.len()
                )));
            }
            let mut tested = 0;
            let mut verdict = IdentityVerdict::Vanishes;
            for idx in Combinations::new(basis.len(), m) {
                let args: Vec<ExactMatrix> = idx.iter().map(|&i| basis[i].clone()).collect();
                let value = standard_polynomial_eval(&args)?;
                tested += 1;
                if !value.is_zero() {
                    verdict = IdentityVerdict::Counterexample { tuple_index: tested - 1, args, value };
                    break;
                }
            }
            Ok(IdentityOutcome { degree: m, mode, pool_size: basis.len() as u64, tuples_tested: tested, verdict })
        }
        IdentityMode::FieldExhaustive => {
            let FieldSpec::PrimeField(p) = pres.field() else {
                return Err(Error::Input("field-exhaustive testing needs a prime field".into()));
            };
            let n = pres.n();
            let pool = p.checked_pow((n * n) as u32);
            let total = pool.and_then(|q| q.checked_pow(m as u32));
            let (Some(pool), Some(total)) = (pool, total) else {
                return Err(Error::BudgetExceeded("field-exhaustive tuple count overflows".into()));
            };
            if total > budget {
                return Err(Error::BudgetExceeded(format!("{total} tuples exceeds the budget {budget}")));
            }
            let matrices: Vec<ExactMatrix> = (0..pool).map(|i| matrix_from_index(pres.field(), n, i)).collect();
            let mut digits = vec![0usize; m];
            let mut verdict = IdentityVerdict::Vanishes;
            let mut tested = 0;
            for index in 0..total {
                let args: Vec<ExactMatrix> = digits.iter().map(|&d| matrices[d].clone()).collect();
                let value = standard_polynomial_eval(&args)?;
                tested += 1;
                if !value.is_zero() {
                    verdict = IdentityVerdict::Counterexample { tuple_index: index, args, value };
                    break;
                }
                for d in digits.iter_mut().rev() {
                    *d += 1;
                    if (*d as u64) < pool {
                        break;
                    }
                    *d = 0;
                }
            }
            Ok(IdentityOutcome { degree: m, mode, pool_size: pool, tuples_tested: tested, verdict })
        }
        IdentityMode::Random { trials, seed } => {
            if trials == 0 {
                return Err(Error::Input("random identity testing needs at least one trial".into()));
            }
            if trials > budget {
                return Err(Error::BudgetExceeded(format!("{trials} trials exceeds the budget {budget}")));
            }
            let basis = algebra_basis(pres)?;
            let mut verdict = IdentityVerdict::Vanishes;
            let mut tested = 0;
            for trial in 0..trials {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(trial);
                let args: Vec<ExactMatrix> = (0..m).map(|_| random_element(&basis, pres, &mut rng)).collect();
                let value = standard_polynomial_eval(&args)?;
                tested += 1;
                if !value.is_zero() {
                    verdict = IdentityVerdict::Counterexample { tuple_index: trial, args, value };
                    break;
                }
            }
            Ok(IdentityOutcome { degree: m, mode, pool_size: basis.len() as u64, tuples_tested: tested, verdict })
        }
    }
}

/// A random scalar: uniform over 𝔽_p, or an integer in `[-5, 5]` over ℚ.
pub fn random_scalar(field: FieldSpec, rng: &mut impl Rng) -> Scalar {
    match field {
        FieldSpec::Rationals => field.from_i64(rng.gen_range(-5..=5)),
        FieldSpec::PrimeField(p) => Scalar::Residue { value: rng.gen_range(0..p), modulus: p },
    }
}

fn random_element(basis: &[ExactMatrix], pres: &AlgebraPresentation, rng: &mut impl Rng) -> ExactMatrix {
    let mut acc = ExactMatrix::zeros(pres.field(), pres.n(), pres.n());
    for b in basis {
        acc.add_scaled(&random_scalar(pres.field(), rng), b);
    }
    acc
}

/// The `index`-th matrix of `M_n(𝔽_p)`, reading base-p digits row-major
/// with the last entry fastest.
pub fn matrix_from_index(field: FieldSpec, n: usize, mut index: u64) -> ExactMatrix {
    let p = field.order().expect("finite field");
    let mut entries = vec![field.zero(); n * n];
    for e in entries.iter_mut().rev() {
        *e = Scalar::Residue { value: index % p, modulus: p };
        index /= p;
    }
    ExactMatrix::from_entries(field, n, n, entries).expect("n*n entries")
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Strictly increasing k-subsets of `0..n` in lex order.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, current: (k <= n).then(|| (0..k).collect()) }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        self.current = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                break Some(next);
            }
        };
        Some(out)
    }
}

/// Largest `c` accepted by the bound functions; keeps `c⁴` and `n²` inside
/// `u128`.
pub const MAX_C: i64 = i32::MAX as i64;

fn check_c(c: i64) -> Result<u128> {
    if c < 1 {
        return Err(Error::InvalidBound(c));
    }
    if c > MAX_C {
        return Err(Error::Input(format!("c = {c} exceeds the supported maximum {MAX_C}")));
    }
    Ok(c as u128)
}

/// Largest `n ≥ 1` with `n² ≤ c²(n+1) − c + 1`, by exact integer search.
pub fn max_irrep_dim(c: i64) -> Result<u128> {
    let c = check_c(c)?;
    let c2 = c * c;
    let fits = |n: u128| n * n <= c2 * (n + 1) - c + 1;
    // fits(1) always holds and fits(c² + 2) never does
    let (mut lo, mut hi) = (1u128, c2 + 2);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// The discriminant `c⁴ + 4c² − 4c + 4`.
pub fn discriminant(c: u128) -> u128 {
    c.pow(4) + 4 * c * c - 4 * c + 4
}

/// `c² + 1`.
pub fn remark_bound(c: i64) -> Result<u128> {
    let c = check_c(c)?;
    Ok(c * c + 1)
}

/// `N(c)` truncated to `digits` decimals, computed from the integer square
/// root of `D·10^{2·digits}`. Since `⌊(a + x)/2⌋ = ⌊(a + ⌊x⌋)/2⌋` for an
/// integer `a`, the rendering is exact (truncated, not rounded).
pub fn closed_form_decimal(c: i64, digits: u32) -> Result<String> {
    let c = check_c(c)?;
    let scale = BigUint::from(10u32).pow(digits);
    let d = BigUint::from(discriminant(c)) * &scale * &scale;
    let root = d.sqrt();
    let scaled = (BigUint::from(c * c) * &scale + root) / 2u32;
    let int_part = &scaled / &scale;
    let frac = &scaled % &scale;
    if digits == 0 {
        return Ok(int_part.to_string());
    }
    Ok(format!("{int_part}.{:0>width$}", frac.to_string(), width = digits as usize))
}

/// `⌊N(c)⌋` from the integer square root of the discriminant.
pub fn closed_form_floor(c: i64) -> Result<u128> {
    let c = check_c(c)?;
    Ok((c * c + discriminant(c).sqrt()) / 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    /// Bergman bound measured on the supplied generating set.
    pub measured_c: usize,
    /// `c` used in the formulas (`max(measured_c, 1)`).
    pub c_used: usize,
    /// Whether the profile stabilized, making `measured_c` exact for this set.
    pub exact_for_generating_set: bool,
    pub field: Option<FieldSpec>,
    pub n: Option<usize>,
    pub n_int: u128,
    pub n_real: String,
    pub remark_bound: u128,
    pub pi_degree_claim: u128,
    pub empirical: Option<IdentityOutcome>,
}

impl BoundReport {
    pub fn verdict_positive(&self) -> bool {
        self.empirical.as_ref().is_none_or(|e| e.verdict.vanishes())
    }
}

/// How [`pi_degree_bound`] runs its identity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundOptions {
    pub mode: IdentityMode,
    /// Overrides the default degree `2·min(N_int, n)`.
    pub degree: Option<usize>,
    pub budget: u64,
}

impl Default for BoundOptions {
    fn default() -> Self {
        BoundOptions { mode: IdentityMode::Basis, degree: None, budget: DEFAULT_TUPLE_BUDGET }
    }
}

/// Assemble the bound report for a profile. With a presentation, also test
/// `S_m` at `m = 2·min(N_int, n)` (or the requested degree).
pub fn pi_degree_bound(
    profile: &GrowthProfile,
    pres: Option<&AlgebraPresentation>,
    options: BoundOptions,
) -> Result<BoundReport> {
    let measured_c = measured_bergman_bound(profile);
    let c_used = measured_c.max(1);
    let c = i64::try_from(c_used).map_err(|_| Error::InvalidBound(i64::MAX))?;
    let n_int = max_irrep_dim(c)?;
    let empirical = match pres {
        Some(p) => {
            let m = options.degree.unwrap_or_else(|| 2 * (n_int.min(p.n() as u128) as usize));
            Some(test_identity_budgeted(p, m, options.mode, options.budget)?)
        }
        None => None,
    };
    Ok(BoundReport {
        measured_c,
        c_used,
        exact_for_generating_set: profile.stabilized_at.is_some(),
        field: pres.map(AlgebraPresentation::field),
        n: pres.map(AlgebraPresentation::n),
        n_int,
        n_real: closed_form_decimal(c, N_REAL_DIGITS)?,
        remark_bound: remark_bound(c)?,
        pi_degree_claim: n_int,
        empirical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::stabilized_profile;
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn e(n: usize, i: usize, j: usize) -> ExactMatrix {
        ExactMatrix::unit(q(), n, i, j)
    }

    /// Direct sum over all permutations with signs from inversion counts.
    fn naive_standard(args: &[ExactMatrix]) -> ExactMatrix {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for pos in 0..=p.len() {
                    let mut x = p.clone();
                    x.insert(pos, k - 1);
                    out.push(x);
                }
            }
            out
        }
        let f = args[0].field();
        let n = args[0].rows();
        let mut acc = ExactMatrix::zeros(f, n, n);
        for p in perms(args.len()) {
            let inv = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let mut prod = ExactMatrix::identity(f, n);
            for &i in &p {
                prod = &prod * &args[i];
            }
            acc.add_scaled(&f.from_i64(if inv % 2 == 0 { 1 } else { -1 }), &prod);
        }
        acc
    }

    #[test]
    fn s2_on_scalars_vanishes() {
        let a = ExactMatrix::from_i64(q(), &[&[3]]).unwrap();
        let b = ExactMatrix::from_i64(q(), &[&[-7]]).unwrap();
        assert!(standard_polynomial_eval(&[a, b]).unwrap().is_zero());
    }

    #[test]
    fn s3_witness() {
        let v = standard_polynomial_eval(&[e(2, 0, 0), e(2, 0, 1), e(2, 1, 0)]).unwrap();
        let want = ExactMatrix::from_i64(q(), &[&[2, 0], &[0, 1]]).unwrap();
        assert_eq!(v, want);
        assert_eq!(v, naive_standard(&[e(2, 0, 0), e(2, 0, 1), e(2, 1, 0)]));
    }

    #[test]
    fn s2_is_the_commutator() {
        let a = ExactMatrix::from_i64(q(), &[&[1, 2], &[3, 4]]).unwrap();
        let b = ExactMatrix::from_i64(q(), &[&[0, 1], &[5, -1]]).unwrap();
        let comm = (&a * &b).try_sub(&(&b * &a)).unwrap();
        assert_eq!(standard_polynomial_eval(&[a, b]).unwrap(), comm);
    }

    #[test]
    fn degree_cap_and_shapes() {
        let a = e(2, 0, 0);
        let many = vec![a.clone(); 13];
        assert!(matches!(standard_polynomial_eval(&many), Err(Error::BudgetExceeded(_))));
        assert!(matches!(
            standard_polynomial_eval(&[a, e(3, 0, 0)]),
            Err(Error::SizeMismatch(_))
        ));
        assert!(standard_polynomial_eval(&[]).is_err());
    }

    #[test]
    fn identity_examples() {
        let p = AlgebraPresentation::new(q(), 2, vec![e(2, 0, 1), e(2, 1, 0)], true).unwrap();
        let out = test_identity(&p, 4, IdentityMode::Basis).unwrap();
        assert!(out.verdict.vanishes());
        assert_eq!(out.pool_size, 4);
        match test_identity(&p, 3, IdentityMode::Basis).unwrap().verdict {
            IdentityVerdict::Counterexample { args, value, tuple_index } => {
                assert_eq!(args, vec![e(2, 0, 0), e(2, 0, 1), e(2, 1, 0)]);
                assert_eq!(value, ExactMatrix::from_i64(q(), &[&[2, 0], &[0, 1]]).unwrap());
                assert_eq!(tuple_index, 0);
            }
            IdentityVerdict::Vanishes => panic!("S_3 does not vanish on M_2"),
        }
        let one = AlgebraPresentation::new(q(), 1, vec![ExactMatrix::identity(q(), 1)], true).unwrap();
        assert!(test_identity(&one, 2, IdentityMode::Basis).unwrap().verdict.vanishes());
        assert!(matches!(
            test_identity(&p, 4, IdentityMode::Random { trials: 0, seed: 1 }),
            Err(Error::Input(_))
        ));
        assert!(test_identity(&p, 4, IdentityMode::FieldExhaustive).is_err());
    }

    #[test]
    fn random_mode_is_reproducible() {
        let f = FieldSpec::prime(5).unwrap();
        let p = AlgebraPresentation::new(
            f,
            2,
            vec![ExactMatrix::unit(f, 2, 0, 1), ExactMatrix::unit(f, 2, 1, 0)],
            true,
        )
        .unwrap();
        let mode = IdentityMode::Random { trials: 20, seed: 42 };
        let a = test_identity(&p, 3, mode).unwrap();
        let b = test_identity(&p, 3, mode).unwrap();
        assert_eq!(a, b);
        assert!(!a.verdict.vanishes());
        assert!(test_identity(&p, 4, mode).unwrap().verdict.vanishes());
    }

    #[test]
    fn irrep_bound_examples() {
        assert_eq!(max_irrep_dim(1).unwrap(), 1);
        assert_eq!(max_irrep_dim(2).unwrap(), 4);
        assert_eq!(max_irrep_dim(3).unwrap(), 9);
        assert_eq!(max_irrep_dim(0), Err(Error::InvalidBound(0)));
        assert_eq!(max_irrep_dim(MAX_C).unwrap(), closed_form_floor(MAX_C).unwrap());
        assert!(max_irrep_dim(MAX_C + 1).is_err());
        assert_eq!(remark_bound(2).unwrap(), 5);
    }

    #[test]
    fn irrep_bound_matches_scan() {
        for c in 1..=30i64 {
            let cc = c as u128;
            let scan = (1..=cc * cc + 2).take_while(|&n| n * n <= cc * cc * (n + 1) - cc + 1).last().unwrap();
            assert_eq!(max_irrep_dim(c).unwrap(), scan, "c = {c}");
        }
    }

    #[test]
    fn decimal_rendering() {
        // c = 2: N = (4 + √28)/2 = 2 + √7 = 4.645751311064...
        assert_eq!(closed_form_decimal(2, 12).unwrap(), "4.645751311064");
        // c = 1: √5 → (1 + 2.2360679...)/2
        assert_eq!(closed_form_decimal(1, 6).unwrap(), "1.618033");
        assert_eq!(closed_form_decimal(3, 0).unwrap(), "9");
    }

    #[test]
    fn bound_report_for_e12_e21() {
        let p = AlgebraPresentation::new(q(), 2, vec![e(2, 0, 1), e(2, 1, 0)], true).unwrap();
        let prof = stabilized_profile(&p).unwrap();
        let r = pi_degree_bound(&prof, Some(&p), BoundOptions::default()).unwrap();
        assert_eq!((r.measured_c, r.n_int, r.remark_bound), (2, 4, 5));
        let emp = r.empirical.as_ref().unwrap();
        assert_eq!(emp.degree, 4);
        assert!(r.verdict_positive());
    }

    #[test]
    fn combinations_in_lex_order() {
        let all: Vec<Vec<usize>> = Combinations::new(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(Combinations::new(2, 3).count(), 0);
        assert_eq!(Combinations::new(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(binomial(9, 6), Some(84));
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = ExactMatrix> {
        prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
            ExactMatrix::from_entries(q(), n, n, v.into_iter().map(|x| q().from_i64(x)).collect()).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn prefix_tree_matches_naive_sum(args in prop::collection::vec(small_matrix(2), 1..5)) {
            prop_assert_eq!(standard_polynomial_eval(&args).unwrap(), naive_standard(&args));
        }

        #[test]
        fn repeated_argument_gives_zero(mut args in prop::collection::vec(small_matrix(2), 2..5), i in 0usize..4, j in 0usize..4) {
            let k = args.len();
            let (i, j) = (i % k, j % k);
            prop_assume!(i != j);
            args[j] = args[i].clone();
            prop_assert!(standard_polynomial_eval(&args).unwrap().is_zero());
        }
    }
}
