//! Independent oracles shared by the integration tests and the acceptance
//! harness. Nothing here reuses the library's algorithms: dimensions come
//! from full word enumeration, characteristic polynomials from the Leibniz
//! expansion, ranks from minors and normal-word counts from enumeration.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lingrowth::growth::{is_irreducible, AlgebraPresentation};
use lingrowth::linalg::{ExactMatrix, FieldSpec, Scalar};
use lingrowth::monomial::MonomialPresentation;
use lingrowth::words::{enumerate_words, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_scalar(field: FieldSpec, rng: &mut impl Rng) -> Scalar {
    match field {
        FieldSpec::Rationals => field.from_i64(rng.gen_range(-4..=4)),
        FieldSpec::PrimeField(p) => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

pub fn random_matrix(field: FieldSpec, n: usize, rng: &mut impl Rng) -> ExactMatrix {
    let entries = (0..n * n).map(|_| random_scalar(field, rng)).collect();
    ExactMatrix::from_entries(field, n, n, entries).unwrap()
}

/// Irreducible presentations over 𝔽_5 cycling through n ∈ {1,2,3} and
/// t ∈ {1,2,3}; a single generator never spans M_n for n ≥ 2, so those
/// slots get two generators.
pub fn irreducible_corpus(count: usize, seed: u64) -> Vec<AlgebraPresentation> {
    let f5 = FieldSpec::prime(5).unwrap();
    let mut r = rng(seed);
    let mut out = Vec::new();
    let shapes = [(1, 1), (1, 2), (2, 2), (2, 3), (3, 2), (3, 3), (2, 1), (3, 1), (1, 3)];
    let mut k = 0;
    while out.len() < count {
        let (n, mut t) = shapes[k % shapes.len()];
        k += 1;
        if n >= 2 && t == 1 {
            t = 2;
        }
        loop {
            let gens = (0..t).map(|_| random_matrix(f5, n, &mut r)).collect();
            let p = AlgebraPresentation::new(f5, n, gens, true).unwrap();
            if is_irreducible(&p).unwrap().0 {
                out.push(p);
                break;
            }
        }
    }
    out
}

/// Rank of a list of vectors by Gaussian elimination written from scratch.
fn rank_by_elimination(mut rows: Vec<Vec<Scalar>>) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][c].inv().unwrap();
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = &rows[i][c] * &inv;
                for j in 0..cols {
                    let sub = &f * &rows[rank][j];
                    rows[i][j] = &rows[i][j] - &sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim kS^i` for `i = 0..=horizon` from every word of every length.
pub fn oracle_dims(p: &AlgebraPresentation, horizon: usize) -> Vec<usize> {
    let mut vectors: Vec<Vec<Scalar>> = Vec::new();
    let mut dims = Vec::new();
    for len in 0..=horizon {
        if len == 0 {
            if p.include_unit() {
                vectors.push(ExactMatrix::identity(p.field(), p.n()).to_vector());
            }
        } else {
            for w in enumerate_words(p.alphabet_size(), len, u64::MAX).unwrap() {
                vectors.push(p.image(&w).to_vector());
            }
        }
        dims.push(if vectors.is_empty() { 0 } else { rank_by_elimination(vectors.clone()) });
    }
    dims
}

type Poly = Vec<Scalar>;

fn poly_mul(a: &Poly, b: &Poly, zero: &Scalar) -> Poly {
    let mut out = vec![zero.clone(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<(Vec<usize>, bool)>) {
        if prefix.len() == n {
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| prefix[i] > prefix[j]).count();
            out.push((prefix.clone(), inv % 2 == 1));
            return;
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Coefficients `c_0..c_{n−1}` of `det(λI − A) = λⁿ + … + c_0` by the
/// Leibniz expansion over polynomial entries.
pub fn leibniz_charpoly(a: &ExactMatrix) -> Vec<Scalar> {
    let n = a.rows();
    let f = a.field();
    let zero = f.zero();
    let entry = |i: usize, j: usize| -> Poly {
        let c = -a.get(i, j);
        if i == j {
            vec![c, f.one()]
        } else {
            vec![c]
        }
    };
    let mut total: Poly = vec![zero.clone(); n + 1];
    for (perm, odd) in permutations(n) {
        let mut prod: Poly = vec![f.one()];
        for (i, &j) in perm.iter().enumerate() {
            prod = poly_mul(&prod, &entry(i, j), &zero);
        }
        for (k, c) in prod.iter().enumerate() {
            total[k] = if odd { &total[k] - c } else { &total[k] + c };
        }
    }
    assert!(total[n].is_one());
    total.truncate(n);
    total
}

pub fn leibniz_det(a: &ExactMatrix) -> Scalar {
    let n = a.rows();
    let f = a.field();
    let mut total = f.zero();
    for (perm, odd) in permutations(n) {
        let mut prod = f.one();
        for (i, &j) in perm.iter().enumerate() {
            prod = &prod * a.get(i, j);
        }
        total = if odd { &total - &prod } else { &total + &prod };
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Rank as the size of the largest nonzero minor.
pub fn minor_rank(a: &ExactMatrix) -> usize {
    let f = a.field();
    for k in (1..=a.rows().min(a.cols())).rev() {
        for rows in subsets(a.rows(), k) {
            for cols in subsets(a.cols(), k) {
                let entries = rows.iter().flat_map(|&i| cols.iter().map(move |&j| a.get(i, j).clone())).collect();
                let m = ExactMatrix::from_entries(f, k, k, entries).unwrap();
                if !leibniz_det(&m).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// Normal words of length `len` by enumeration.
pub fn brute_force_normal_count(mp: &MonomialPresentation, len: usize) -> u64 {
    enumerate_words(mp.alphabet_size(), len, u64::MAX)
        .unwrap()
        .filter(|w: &Word| !mp.forbidden().iter().any(|f| w.contains_factor(f)))
        .count() as u64
}

/// `⌊½(c² + √D)⌋` certified by bracketing `√D` between consecutive integers
/// and comparing rationals: with `s² ≤ D < (s+1)²`, `N` lies in
/// `[(c² + s)/2, (c² + s + 1)/2)` and both ends share a floor.
pub fn bracketed_floor(c: u64) -> u128 {
    let c = c as u128;
    let d = c.pow(4) + 4 * c * c - 4 * c + 4;
    // integer square root by bisection, independent of the library's
    let (mut lo, mut hi) = (0u128, c * c + 3);
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if mid * mid <= d {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let s = lo;
    assert!(s * s <= d && d < (s + 1) * (s + 1));
    let big = |x: u128| BigRational::from_integer(BigInt::from(x));
    let lower = (big(c * c) + big(s)) / big(2);
    let upper = (big(c * c) + big(s + 1)) / big(2);
    let fl = lower.floor();
    assert!(upper <= &fl + big(1), "bracket straddles an integer");
    fl.to_integer().try_into().unwrap()
}

/// Enumerate every `n × n` matrix over `𝔽_p`.
pub fn all_matrices(field: FieldSpec, n: usize) -> Vec<ExactMatrix> {
    let p = field.order().unwrap();
    let total = p.pow((n * n) as u32);
    (0..total)
        .map(|mut idx| {
            let mut entries = Vec::with_capacity(n * n);
            for _ in 0..n * n {
                entries.push(field.from_i64((idx % p) as i64));
                idx /= p;
            }
            ExactMatrix::from_entries(field, n, n, entries).unwrap()
        })
        .collect()
}

/// Every presentation over 𝔽_2 with n ≤ 2 and t ≤ 2 generators, with and
/// without the unit.
pub fn all_small_f2_presentations() -> Vec<AlgebraPresentation> {
    let f2 = FieldSpec::prime(2).unwrap();
    let mut out = Vec::new();
    for n in 1..=2 {
        let all = all_matrices(f2, n);
        for i in 0..all.len() {
            for unit in [true, false] {
                out.push(AlgebraPresentation::new(f2, n, vec![all[i].clone()], unit).unwrap());
                for j in 0..all.len() {
                    let gens = vec![all[i].clone(), all[j].clone()];
                    out.push(AlgebraPresentation::new(f2, n, gens, unit).unwrap());
                }
            }
        }
    }
    out
}
