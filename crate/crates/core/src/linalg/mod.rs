//! Exact field arithmetic and the dense linear algebra the rest of the crate
//! is built on.
//!
//! Everything here is exact: rationals are arbitrary precision and prime
//! fields use canonical residues. The characteristic polynomial is computed
//! with Berkowitz's division-free recurrence so it is valid verbatim in any
//! characteristic.

mod field;
mod matrix;

pub use field::{is_negative, is_prime, FieldSpec, Scalar};
pub use matrix::ExactMatrix;

use crate::error::{Error, Result};

/// Result of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduction {
    pub reduced: ExactMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

/// Reduced row-echelon form by Gauss–Jordan elimination. Pivots are chosen as
/// the leftmost column with a nonzero entry at or below the current row, using
/// the first such row, so the output is reproducible bit for bit.
pub fn rref(m: &ExactMatrix) -> RowReduction {
    let field = m.field();
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<Scalar>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("pivot is nonzero");
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let reduced = ExactMatrix::from_rows(field, a).unwrap_or_else(|_| ExactMatrix::zeros(field, rows, cols));
    RowReduction { reduced, rank: pivot_cols.len(), pivot_cols }
}

/// Rank of a list of equal-length vectors.
pub fn rank_of(field: FieldSpec, vectors: &[Vec<Scalar>]) -> usize {
    let mut basis = EchelonBasis::new(field, vectors.first().map_or(0, Vec::len));
    vectors.iter().filter(|v| basis.insert(v)).count()
}

#[derive(Clone, Debug)]
struct EchelonRow {
    pivot: usize,
    row: Vec<Scalar>,
    /// Coefficients of `row` over the accepted input vectors.
    combo: Vec<Scalar>,
}

/// Incrementally maintained echelon basis of a subspace of k^dim.
///
/// Every accepted vector is remembered by position so membership queries can
/// return coordinates over the accepted inputs rather than over the echelon
/// rows.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: FieldSpec,
    dim: usize,
    rows: Vec<EchelonRow>,
}

impl EchelonBasis {
    pub fn new(field: FieldSpec, dim: usize) -> Self {
        EchelonBasis { field, dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduce `v` against the basis. Returns the residual and the
    /// coefficients (over accepted inputs) of the subtracted part.
    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut residual = v.to_vec();
        let mut combo = vec![self.field.zero(); self.rows.len()];
        for r in &self.rows {
            let f = residual[r.pivot].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in residual.iter_mut().zip(&r.row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
            for (x, y) in combo.iter_mut().zip(&r.combo) {
                if !y.is_zero() {
                    *x = &*x + &(&f * y);
                }
            }
        }
        (residual, combo)
    }

    /// Insert `v`; returns true when it was independent of the current span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        let (residual, combo) = self.reduce(v);
        let Some(pivot) = residual.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = residual[pivot].inv().expect("pivot is nonzero");
        let row: Vec<Scalar> = residual.iter().map(|x| x * &inv).collect();
        // row = (v - combo·inputs) / pivot
        let mut new_combo: Vec<Scalar> = combo.iter().map(|c| -&(c * &inv)).collect();
        new_combo.push(inv);
        for r in &mut self.rows {
            r.combo.push(self.field.zero());
        }
        self.rows.push(EchelonRow { pivot, row, combo: new_combo });
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).0.iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` over the accepted inputs, or `None` if `v` is not
    /// in the span.
    pub fn express(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.dim, "vector length");
        let (residual, combo) = self.reduce(v);
        residual.iter().all(Scalar::is_zero).then_some(combo)
    }
}

/// A linear dependence `Σ α_j v_j + u = 0` among targets modulo a subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dependence {
    /// One coefficient per target; the last nonzero one is −1.
    pub coefficients: Vec<Scalar>,
    /// The subspace element `u`.
    pub residual: Vec<Scalar>,
    /// Coordinates of `u` over the `modulo` vectors.
    pub residual_coords: Vec<Scalar>,
    /// Index of the last target with nonzero coefficient.
    pub top: usize,
}

/// Find a dependence among `targets` modulo span(`modulo`), choosing the one
/// whose highest-index nonzero coefficient is as far right as possible. That
/// coefficient is normalised to −1, so
/// `targets[top] = Σ_{j<top} α_j targets[j] + u`.
pub fn solve_dependence(
    field: FieldSpec,
    targets: &[Vec<Scalar>],
    modulo: &[Vec<Scalar>],
) -> Result<Option<Dependence>> {
    let Some(len) = targets.first().or(modulo.first()).map(Vec::len) else {
        return Ok(None);
    };
    if let Some(bad) = targets.iter().chain(modulo).find(|v| v.len() != len) {
        return Err(Error::DimensionMismatch { expected: len, found: bad.len() });
    }
    for top in (0..targets.len()).rev() {
        let mut basis = EchelonBasis::new(field, len);
        // (is_target, index) of each accepted vector
        let mut accepted = Vec::new();
        for (j, t) in targets[..top].iter().enumerate() {
            if basis.insert(t) {
                accepted.push((true, j));
            }
        }
        for (i, m) in modulo.iter().enumerate() {
            if basis.insert(m) {
                accepted.push((false, i));
            }
        }
        let Some(coords) = basis.express(&targets[top]) else {
            continue;
        };
        let mut coefficients = vec![field.zero(); targets.len()];
        let mut residual_coords = vec![field.zero(); modulo.len()];
        for (&(is_target, idx), c) in accepted.iter().zip(coords) {
            if is_target {
                coefficients[idx] = c;
            } else {
                residual_coords[idx] = c;
            }
        }
        coefficients[top] = -&field.one();
        let mut residual = vec![field.zero(); len];
        for (c, m) in residual_coords.iter().zip(modulo) {
            for (x, y) in residual.iter_mut().zip(m) {
                *x = &*x + &(c * y);
            }
        }
        return Ok(Some(Dependence { coefficients, residual, residual_coords, top }));
    }
    Ok(None)
}

/// Characteristic polynomial `det(λI − m)` by Berkowitz's algorithm, returned
/// as the non-leading coefficients `c_0, …, c_{n−1}` (ascending).
pub fn charpoly(m: &ExactMatrix) -> Result<Vec<Scalar>> {
    m.require_square()?;
    let n = m.rows();
    let field = m.field();
    if n == 0 {
        return Ok(Vec::new());
    }
    // descending coefficients of the leading r×r block's polynomial
    let mut poly = vec![field.one(), -m.get(0, 0)];
    for r in 1..n {
        // block [[M, C], [R, a]] with M the leading r×r part
        let a = m.get(r, r);
        let col: Vec<Scalar> = (0..r).map(|i| m.get(i, r).clone()).collect();
        let row: Vec<Scalar> = (0..r).map(|j| m.get(r, j).clone()).collect();
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(field.one());
        toeplitz.push(-a);
        let mut mc = col; // M^k C
        for _ in 0..r {
            let dot = row.iter().zip(&mc).fold(field.zero(), |acc, (x, y)| &acc + &(x * y));
            toeplitz.push(-&dot);
            mc = (0..r)
                .map(|i| (0..r).fold(field.zero(), |acc, k| &acc + &(m.get(i, k) * &mc[k])))
                .collect();
        }
        let next: Vec<Scalar> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r))
                    .fold(field.zero(), |acc, j| &acc + &(&toeplitz[i - j] * &poly[j]))
            })
            .collect();
        poly = next;
    }
    Ok(poly[1..].iter().rev().cloned().collect())
}

/// Evaluate the monic polynomial `λⁿ + c_{n−1}λ^{n−1} + … + c_0` at `m`,
/// where `n = coeffs.len()`.
pub fn eval_poly_at_matrix(coeffs: &[Scalar], m: &ExactMatrix) -> Result<ExactMatrix> {
    m.require_square()?;
    let field = m.field();
    let id = ExactMatrix::identity(field, m.rows());
    let mut acc = id.clone();
    for c in coeffs.iter().rev() {
        acc = acc.try_mul(m)?;
        acc.add_scaled(c, &id);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn vecq(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| q().from_i64(x)).collect()
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = ExactMatrix::identity(q(), 2);
        let r = rref(&id);
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_cols, vec![0, 1]);

        let z = ExactMatrix::zeros(q(), 2, 2);
        let r = rref(&z);
        assert_eq!(r.reduced, z);
        assert_eq!(r.rank, 0);
        assert!(r.pivot_cols.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let m = ExactMatrix::from_i64(q(), &[&[1, 2], &[2, 4]]).unwrap();
        let r = rref(&m);
        assert_eq!(r.reduced, ExactMatrix::from_i64(q(), &[&[1, 2], &[0, 0]]).unwrap());
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);
    }

    #[test]
    fn dependence_examples() {
        let e1 = vecq(&[1, 0]);
        let e2 = vecq(&[0, 1]);

        let d = solve_dependence(q(), &[e1.clone(), e1.clone()], &[]).unwrap().unwrap();
        assert_eq!(d.coefficients, vecq(&[1, -1]));
        assert_eq!(d.residual, vecq(&[0, 0]));

        assert_eq!(solve_dependence(q(), &[e1.clone(), e2.clone()], &[]).unwrap(), None);

        let d = solve_dependence(q(), &[vecq(&[1, 1]), e2.clone()], &[e1.clone()]).unwrap().unwrap();
        assert_eq!(d.coefficients, vecq(&[1, -1]));
        assert_eq!(d.residual, vecq(&[-1, 0]));
    }

    #[test]
    fn dependence_prefers_rightmost_top() {
        // t0 = t1 and t2 = e1 ∈ modulo: the top must be index 2, not 1
        let e1 = vecq(&[1, 0, 0]);
        let t0 = vecq(&[0, 1, 0]);
        let d = solve_dependence(q(), &[t0.clone(), t0, e1.clone()], &[e1]).unwrap().unwrap();
        assert_eq!(d.top, 2);
        assert_eq!(d.coefficients, vecq(&[0, 0, -1]));
        assert_eq!(d.residual, vecq(&[1, 0, 0]));
    }

    #[test]
    fn dependence_length_mismatch() {
        let r = solve_dependence(q(), &[vecq(&[1, 0]), vecq(&[1])], &[]);
        assert!(matches!(r, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn charpoly_examples() {
        let nil = ExactMatrix::from_i64(q(), &[&[0, 1], &[0, 0]]).unwrap();
        assert_eq!(charpoly(&nil).unwrap(), vecq(&[0, 0]));
        let id = ExactMatrix::identity(q(), 2);
        assert_eq!(charpoly(&id).unwrap(), vecq(&[1, -2]));
        let j = ExactMatrix::from_i64(q(), &[&[1, 1], &[0, 1]]).unwrap();
        let c = charpoly(&j).unwrap();
        assert_eq!(c, vecq(&[1, -2]));
        assert_eq!(c[1], -&j.trace().unwrap());
        assert!(matches!(
            charpoly(&ExactMatrix::zeros(q(), 2, 3)),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn eval_examples() {
        let j = ExactMatrix::from_i64(q(), &[&[1, 1], &[0, 1]]).unwrap();
        assert!(eval_poly_at_matrix(&charpoly(&j).unwrap(), &j).unwrap().is_zero());
        let id = ExactMatrix::identity(q(), 2);
        assert_eq!(eval_poly_at_matrix(&vecq(&[0, 0]), &id).unwrap(), id);
        let d = ExactMatrix::from_i64(q(), &[&[2, 0], &[0, 3]]).unwrap();
        assert_eq!(
            eval_poly_at_matrix(&vecq(&[1, -2]), &d).unwrap(),
            ExactMatrix::from_i64(q(), &[&[1, 0], &[0, 4]]).unwrap()
        );
    }

    #[test]
    fn express_returns_input_coordinates() {
        let mut b = EchelonBasis::new(q(), 3);
        assert!(b.insert(&vecq(&[1, 1, 0])));
        assert!(b.insert(&vecq(&[0, 1, 1])));
        assert!(!b.insert(&vecq(&[1, 2, 1])));
        assert_eq!(b.express(&vecq(&[2, 3, 1])), Some(vecq(&[2, 1])));
        assert_eq!(b.express(&vecq(&[0, 0, 1])), None);
    }
}
