//! Normal-word counts and growth classes of monomial algebras.
//!
//! ```bash
//! cargo run --example monomial_growth
//! ```

use lingrowth::growth::measured_bergman_bound;
use lingrowth::monomial::{classify_growth, count_normal_words, growth_profile_monomial, MonomialPresentation};
use lingrowth::Result;

fn main() -> Result<()> {
    let xy = || vec!["x".to_string(), "y".to_string()];
    let cases: [(&str, Vec<String>, &[&str]); 5] = [
        ("forbid yx, yy", xy(), &["yx", "yy"]),
        ("forbid yx", xy(), &["yx"]),
        ("free on x, y", xy(), &[]),
        ("forbid x, yy", xy(), &["x", "yy"]),
        ("forbid ba, cb, ca", vec!["a".into(), "b".into(), "c".into()], &["ba", "cb", "ca"]),
    ];
    for (label, alphabet, forbidden) in cases {
        let mp = MonomialPresentation::from_strings(alphabet, forbidden)?;
        let counts: Vec<String> = (0..=10).map(|l| count_normal_words(&mp, l).to_string()).collect();
        let profile = growth_profile_monomial(&mp, 10)?;
        println!("{label}");
        println!("  words per length: {}", counts.join(" "));
        println!("  Bergman bound up to 10: {}", measured_bergman_bound(&profile));
        println!("  growth: {}", classify_growth(&mp).label());
    }
    Ok(())
}
