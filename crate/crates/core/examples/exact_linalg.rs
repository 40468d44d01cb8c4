//! Exact row reduction, dependence solving and Cayley–Hamilton over ℚ and 𝔽_p.
//!
//! ```bash
//! cargo run --example exact_linalg
//! ```

use lingrowth::linalg::{charpoly, eval_poly_at_matrix, rref, solve_dependence, ExactMatrix, FieldSpec};
use lingrowth::Result;

fn main() -> Result<()> {
    let q = FieldSpec::Rationals;
    let a = ExactMatrix::from_i64(q, &[&[2, 4, 1], &[1, 2, 0], &[3, 6, 1]])?;
    let r = rref(&a);
    println!("A = {a}");
    println!("rref(A) = {}  rank {}  pivots {:?}", r.reduced, r.rank, r.pivot_cols);

    // charpoly returns c_0..c_{n-1} of λⁿ + c_{n-1}λⁿ⁻¹ + … + c_0
    let m = ExactMatrix::from_i64(q, &[&[1, 2], &[3, 4]])?;
    let c = charpoly(&m)?;
    println!("charpoly of {m}: {:?}", c.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("p(M) = {}", eval_poly_at_matrix(&c, &m)?);

    // v1 − v2 = 0 up to the modulo vector e1
    let targets = vec![vec![q.from_i64(1), q.from_i64(1)], vec![q.from_i64(2), q.from_i64(1)]];
    let modulo = vec![vec![q.from_i64(1), q.zero()]];
    if let Some(d) = solve_dependence(q, &targets, &modulo)? {
        println!(
            "dependence: alphas {:?}, top index {}",
            d.coefficients.iter().map(ToString::to_string).collect::<Vec<_>>(),
            d.top
        );
    }

    let f7 = FieldSpec::prime(7)?;
    let b = ExactMatrix::from_i64(f7, &[&[3, 5], &[6, 2]])?;
    let cb = charpoly(&b)?;
    println!("over {f7}: charpoly {:?}, p(B) zero: {}", cb.iter().map(ToString::to_string).collect::<Vec<_>>(), eval_poly_at_matrix(&cb, &b)?.is_zero());
    println!("half in {f7} = {}", f7.parse_scalar("1/2")?);
    Ok(())
}
