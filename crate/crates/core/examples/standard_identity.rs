//! The standard polynomial S_m and identity testing in three modes.
//!
//! ```bash
//! cargo run --release --example standard_identity
//! ```

use lingrowth::growth::AlgebraPresentation;
use lingrowth::linalg::{ExactMatrix, FieldSpec};
use lingrowth::pi::{standard_polynomial_eval, test_identity, IdentityMode, IdentityVerdict};
use lingrowth::Result;

fn main() -> Result<()> {
    let q = FieldSpec::Rationals;
    let e = |i, j| ExactMatrix::unit(q, 2, i, j);
    println!("S_3(E11, E12, E21) = {}", standard_polynomial_eval(&[e(0, 0), e(0, 1), e(1, 0)])?);

    let m2 = AlgebraPresentation::new(q, 2, vec![e(0, 1), e(1, 0)], true)?;
    for m in [3, 4] {
        let out = test_identity(&m2, m, IdentityMode::Basis)?;
        match out.verdict {
            IdentityVerdict::Vanishes => println!("S_{m} vanishes on M_2 ({} basis tuples)", out.tuples_tested),
            IdentityVerdict::Counterexample { args, value, .. } => {
                let a: Vec<String> = args.iter().map(ToString::to_string).collect();
                println!("S_{m} fails on M_2: S({}) = {value}", a.join(", "));
            }
        }
    }

    let f2 = FieldSpec::prime(2)?;
    let m2f2 = AlgebraPresentation::new(f2, 2, vec![ExactMatrix::unit(f2, 2, 0, 1), ExactMatrix::unit(f2, 2, 1, 0)], true)?;
    let out = test_identity(&m2f2, 4, IdentityMode::FieldExhaustive)?;
    println!("S_4 over all of M_2(F_2): {} tuples, vanishes {}", out.tuples_tested, out.verdict.vanishes());

    let f5 = FieldSpec::prime(5)?;
    let gens = vec![
        ExactMatrix::from_i64(f5, &[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])?,
        ExactMatrix::from_i64(f5, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]])?,
    ];
    let m3 = AlgebraPresentation::new(f5, 3, gens, true)?;
    let out = test_identity(&m3, 6, IdentityMode::Basis)?;
    println!("S_6 on M_3(F_5): {} basis tuples, vanishes {}", out.tuples_tested, out.verdict.vanishes());
    let out = test_identity(&m3, 5, IdentityMode::Random { trials: 50, seed: 1 })?;
    println!("S_5 on M_3(F_5), random: vanishes {} after {} trial(s)", out.verdict.vanishes(), out.tuples_tested);
    Ok(())
}
