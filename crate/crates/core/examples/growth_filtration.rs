//! Growth filtrations d_i = dim kSⁱ, Bergman bounds and the irreducibility test.
//!
//! ```bash
//! cargo run --example growth_filtration
//! ```

use lingrowth::growth::{
    algebra_basis, is_irreducible, measured_bergman_bound, span_filtration, AlgebraPresentation,
};
use lingrowth::linalg::{ExactMatrix, FieldSpec};
use lingrowth::Result;

fn show(label: &str, pres: &AlgebraPresentation, horizon: usize) -> Result<()> {
    let profile = span_filtration(pres, horizon)?;
    let (irreducible, dim) = is_irreducible(pres)?;
    println!("{label}");
    println!("  dims {:?}  differences {:?}", profile.dims, profile.differences);
    println!("  Bergman bound {}  stabilized at {:?}", measured_bergman_bound(&profile), profile.stabilized_at);
    println!("  irreducible {irreducible} (algebra dimension {dim})");
    for (level, words) in profile.basis_words.iter().enumerate() {
        if !words.is_empty() {
            let ws: Vec<String> = words.iter().map(ToString::to_string).collect();
            println!("  new at level {level}: {}", ws.join(" "));
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    let q = FieldSpec::Rationals;
    let e = |i, j| ExactMatrix::unit(q, 2, i, j);

    let full = AlgebraPresentation::new(q, 2, vec![e(0, 1), e(1, 0)], true)?;
    show("{E12, E21}", &full, 4)?;
    let basis = algebra_basis(&full)?;
    println!("  basis: {}", basis.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));

    let tri = AlgebraPresentation::new(q, 2, vec![e(0, 0), e(0, 1)], true)?;
    show("{E11, E12}", &tri, 3)?;

    let f3 = FieldSpec::prime(3)?;
    let g = ExactMatrix::from_i64(f3, &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]])?;
    let h = ExactMatrix::from_i64(f3, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 0]])?;
    show("two generators of M_3(F_3)", &AlgebraPresentation::new(f3, 3, vec![g, h], true)?, 10)?;
    Ok(())
}
