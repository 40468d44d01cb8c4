//! Rewriting a word of length ℓ(n+1) into shorter words, with a certificate
//! that is checked by exact matrix arithmetic.
//!
//! ```bash
//! cargo run --example word_reduction
//! ```

use lingrowth::growth::AlgebraPresentation;
use lingrowth::linalg::{ExactMatrix, FieldSpec};
use lingrowth::reduction::{verify_certificate, verify_comb_lemma, LemmaOptions, Reducer, Term};
use lingrowth::Result;

fn terms(ts: &[Term]) -> String {
    if ts.is_empty() {
        return "0".into();
    }
    ts.iter().map(|t| format!("{}·{}", t.coefficient, t.word)).collect::<Vec<_>>().join(" + ")
}

fn main() -> Result<()> {
    let q = FieldSpec::Rationals;
    let pres = AlgebraPresentation::new(q, 2, vec![ExactMatrix::unit(q, 2, 0, 1), ExactMatrix::unit(q, 2, 1, 0)], true)?;
    let reducer = Reducer::new(&pres, 2)?;
    println!("ell = {}, word length m = {}", reducer.ell(), reducer.word_length());

    for letters in [[0, 1, 0, 1, 0, 1], [1, 0, 0, 1, 1, 0], [0, 1, 1, 0, 0, 1]] {
        let w = pres.word(&letters)?;
        let cert = reducer.reduce(&w)?;
        println!("{w} = {}", terms(&cert.terms));
        for step in &cert.trace {
            println!("    {} = {}  [{}]", step.input_word, terms(&step.output_terms), step.kind.as_str());
        }
        println!("    certificate: {}", verify_certificate(&pres, &cert).reason());
    }

    let f5 = FieldSpec::prime(5)?;
    let a = ExactMatrix::from_i64(f5, &[&[1, 2, 0], &[0, 3, 1], &[4, 0, 0]])?;
    let b = ExactMatrix::from_i64(f5, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 2]])?;
    let p3 = AlgebraPresentation::new(f5, 3, vec![a, b], true)?;
    let report = verify_comb_lemma(&p3, None, LemmaOptions { certificates: 6, seed: 7 })?;
    println!(
        "M_3(F_5) pair: bound {}, m = {}, span claim {:?}, {} ≤ {}, all passed {}",
        report.measured_bound,
        report.word_length,
        report.span_claim,
        report.inequality_lhs,
        report.inequality_rhs,
        report.all_passed()
    );
    Ok(())
}
