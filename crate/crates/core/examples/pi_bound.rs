//! Irreducible-representation and pi-degree bounds from a Bergman bound c.
//!
//! ```bash
//! cargo run --example pi_bound
//! ```

use lingrowth::growth::{stabilized_profile, AlgebraPresentation};
use lingrowth::linalg::{ExactMatrix, FieldSpec};
use lingrowth::pi::{closed_form_decimal, max_irrep_dim, pi_degree_bound, remark_bound, BoundOptions};
use lingrowth::Result;

fn main() -> Result<()> {
    println!("{:>4} {:>6} {:>20} {:>8}", "c", "N_int", "N", "c²+1");
    for c in 1..=10 {
        println!("{c:>4} {:>6} {:>20} {:>8}", max_irrep_dim(c)?, closed_form_decimal(c, 12)?, remark_bound(c)?);
    }

    let q = FieldSpec::Rationals;
    let pres = AlgebraPresentation::new(q, 2, vec![ExactMatrix::unit(q, 2, 0, 1), ExactMatrix::unit(q, 2, 1, 0)], true)?;
    let profile = stabilized_profile(&pres)?;
    let report = pi_degree_bound(&profile, Some(&pres), BoundOptions::default())?;
    let emp = report.empirical.as_ref().expect("presentation given");
    println!(
        "{{E12, E21}}: c = {}, N_int = {}, S_{} vanishes: {}",
        report.measured_c,
        report.n_int,
        emp.degree,
        emp.verdict.vanishes()
    );
    Ok(())
}
