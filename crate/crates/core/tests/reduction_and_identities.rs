mod common;

use common::*;
use lingrowth::growth::{measured_bergman_bound, stabilized_profile, AlgebraPresentation};
use lingrowth::linalg::{ExactMatrix, FieldSpec, Scalar};
use lingrowth::pi::{standard_polynomial_eval, test_identity, IdentityMode};
use lingrowth::reduction::{
    evaluate_terms, sample_words, verify_certificate, verify_comb_lemma, LemmaOptions, Reducer,
};
use lingrowth::words::enumerate_words;
use proptest::prelude::*;
use rand::Rng;

fn e12_e21() -> AlgebraPresentation {
    let q = FieldSpec::Rationals;
    AlgebraPresentation::new(q, 2, vec![ExactMatrix::unit(q, 2, 0, 1), ExactMatrix::unit(q, 2, 1, 0)], true).unwrap()
}

#[test]
fn every_length_six_word_is_certified() {
    let p = e12_e21();
    let reducer = Reducer::new(&p, 2).unwrap();
    assert_eq!(reducer.profile().dims[5], 4);
    let mut count = 0;
    for w in enumerate_words(2, 6, 64).unwrap() {
        let cert = reducer.reduce(&w).unwrap();
        assert!(cert.terms.iter().all(|t| t.word.len() < 6));
        assert!(verify_certificate(&p, &cert).is_valid(), "{w}");
        assert_eq!(p.image(&w), evaluate_terms(&p, &cert.terms));
        count += 1;
    }
    assert_eq!(count, 64);
}

#[test]
fn random_irreducible_presentations_reduce() {
    for (i, p) in irreducible_corpus(50, 3).into_iter().enumerate() {
        let report = verify_comb_lemma(&p, None, LemmaOptions { certificates: 4, seed: i as u64 }).unwrap();
        assert_eq!(report.span_claim, Some(true));
        assert!(report.all_passed(), "presentation {i}");
    }
}

#[test]
fn small_presentations_are_exhaustively_certified() {
    // every length-m word when t^m ≤ 2·10⁴
    let mut covered = 0;
    for (i, p) in irreducible_corpus(18, 9).into_iter().enumerate() {
        let ell = measured_bergman_bound(&stabilized_profile(&p).unwrap()).max(1);
        let reducer = Reducer::new(&p, ell).unwrap();
        let m = reducer.word_length();
        let Some(total) = (p.alphabet_size() as u64).checked_pow(m as u32).filter(|&t| t <= 20_000) else {
            continue;
        };
        for w in enumerate_words(p.alphabet_size(), m, total).unwrap() {
            let cert = reducer.reduce(&w).unwrap();
            assert!(verify_certificate(&p, &cert).is_valid(), "presentation {i}, {w}");
        }
        covered += 1;
    }
    assert!(covered >= 10, "{covered}");
}

#[test]
fn mutated_certificates_are_rejected() {
    let p = e12_e21();
    let reducer = Reducer::new(&p, 2).unwrap();
    let mut checked = 0;
    for w in sample_words(2, 6, 64, 1) {
        let cert = reducer.reduce(&w).unwrap();
        if cert.terms.is_empty() {
            continue;
        }
        for i in 0..cert.terms.len() {
            let mut bad = cert.clone();
            let c = &bad.terms[i].coefficient + &p.field().one();
            bad.terms[i].coefficient = c;
            assert!(!verify_certificate(&p, &bad).is_valid());
            let mut bad = cert.clone();
            bad.terms.remove(i);
            assert!(!verify_certificate(&p, &bad).is_valid());
        }
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn witness_and_vanishing_on_m2() {
    let p = e12_e21();
    let out = test_identity(&p, 3, IdentityMode::Basis).unwrap();
    assert!(out.tuples_tested <= 1000);
    assert!(!out.verdict.vanishes());
    assert!(test_identity(&p, 4, IdentityMode::Basis).unwrap().verdict.vanishes());
}

fn m3_f5() -> AlgebraPresentation {
    let f5 = FieldSpec::prime(5).unwrap();
    let a = ExactMatrix::from_i64(f5, &[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]).unwrap();
    let b = ExactMatrix::from_i64(f5, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]).unwrap();
    AlgebraPresentation::new(f5, 3, vec![a, b], true).unwrap()
}

#[test]
fn amitsur_levitzki_n3_basis_proof() {
    let out = test_identity(&m3_f5(), 6, IdentityMode::Basis).unwrap();
    assert_eq!(out.tuples_tested, 84);
    assert!(out.verdict.vanishes());
    assert!(!test_identity(&m3_f5(), 5, IdentityMode::Basis).unwrap().verdict.vanishes());
}

fn random_sextuples(field: FieldSpec, count: usize, seed: u64) {
    let mut r = rng(seed);
    for _ in 0..count {
        let args: Vec<ExactMatrix> = (0..6).map(|_| random_matrix(field, 3, &mut r)).collect();
        assert!(standard_polynomial_eval(&args).unwrap().is_zero());
    }
}

#[test]
fn amitsur_levitzki_n3_random_sample() {
    random_sextuples(FieldSpec::prime(5).unwrap(), 30, 1);
    random_sextuples(FieldSpec::Rationals, 10, 2);
}

#[test]
#[ignore = "10⁴ sextuples per field; run with --ignored --release"]
fn amitsur_levitzki_n3_random_full() {
    random_sextuples(FieldSpec::prime(5).unwrap(), 10_000, 1);
    random_sextuples(FieldSpec::Rationals, 10_000, 2);
}

fn args_strategy() -> impl Strategy<Value = (FieldSpec, Vec<ExactMatrix>, u64)> {
    (prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::PrimeField(7))], 1usize..=3, 1usize..=5, any::<u64>())
        .prop_map(|(f, n, m, seed)| {
            let mut r = rng(seed);
            let args = (0..m).map(|_| random_matrix(f, n, &mut r)).collect();
            (f, args, seed)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn standard_polynomial_is_multilinear((f, args, seed) in args_strategy()) {
        let mut r = rng(seed ^ 0x5eed);
        let n = args[0].rows();
        let slot = r.gen_range(0..args.len());
        let y = random_matrix(f, n, &mut r);
        let (a, b): (Scalar, Scalar) = (random_scalar(f, &mut r), random_scalar(f, &mut r));
        let mut combo = args[slot].scale(&a);
        combo.add_scaled(&b, &y);
        let mut mixed = args.clone();
        mixed[slot] = combo;
        let mut with_y = args.clone();
        with_y[slot] = y;
        let mut rhs = standard_polynomial_eval(&args).unwrap().scale(&a);
        rhs.add_scaled(&b, &standard_polynomial_eval(&with_y).unwrap());
        prop_assert_eq!(standard_polynomial_eval(&mixed).unwrap(), rhs);
    }

    #[test]
    fn standard_polynomial_alternates((_f, mut args, seed) in args_strategy()) {
        prop_assume!(args.len() >= 2);
        let mut r = rng(seed);
        let i = r.gen_range(0..args.len());
        let j = (i + 1 + r.gen_range(0..args.len() - 1)) % args.len();
        args[j] = args[i].clone();
        prop_assert!(standard_polynomial_eval(&args).unwrap().is_zero());
    }

    #[test]
    fn cayley_hamilton_random(m in (prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::PrimeField(3)), Just(FieldSpec::PrimeField(97))], 1usize..=5, any::<u64>())
        .prop_map(|(f, n, s)| random_matrix(f, n, &mut rng(s)))) {
        let c = lingrowth::linalg::charpoly(&m).unwrap();
        prop_assert!(lingrowth::linalg::eval_poly_at_matrix(&c, &m).unwrap().is_zero());
    }
}
