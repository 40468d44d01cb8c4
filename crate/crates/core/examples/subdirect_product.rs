//! Block-diagonal presentations: M_2 ⊕ M_1 satisfies S_4 but not S_3.
//!
//! ```bash
//! cargo run --example subdirect_product
//! ```

use lingrowth::growth::{algebra_dimension, block_diagonal, stabilized_profile, AlgebraPresentation};
use lingrowth::linalg::{ExactMatrix, FieldSpec};
use lingrowth::pi::{pi_degree_bound, test_identity, BoundOptions, IdentityMode};
use lingrowth::Result;

fn main() -> Result<()> {
    let q = FieldSpec::Rationals;
    let m2 = AlgebraPresentation::new(q, 2, vec![ExactMatrix::unit(q, 2, 0, 1), ExactMatrix::unit(q, 2, 1, 0)], true)?;
    let m1 = AlgebraPresentation::new(q, 1, vec![ExactMatrix::identity(q, 1), ExactMatrix::zeros(q, 1, 1)], true)?;
    let block = block_diagonal(&[m2, m1])?;
    for (i, g) in block.generators().iter().enumerate() {
        println!("generator {i}: {g}");
    }
    println!("algebra dimension {}", algebra_dimension(&block)?);
    for m in [3, 4] {
        let out = test_identity(&block, m, IdentityMode::Basis)?;
        println!("S_{m}: vanishes {} ({} basis tuples)", out.verdict.vanishes(), out.tuples_tested);
    }
    let report = pi_degree_bound(&stabilized_profile(&block)?, Some(&block), BoundOptions::default())?;
    println!("measured c = {}, pi degree at most {}", report.measured_c, report.pi_degree_claim);
    Ok(())
}
