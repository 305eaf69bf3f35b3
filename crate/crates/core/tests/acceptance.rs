//! Acceptance suite: one test per criterion, exact arithmetic throughout
//! (zero tolerance). Each test prints a `[PASS]` line with its timing;
//! run with `cargo test --test acceptance -- --nocapture` to see them.

use std::time::Instant;

use wittcode::codes::{
    builtin_code, right_length_factorization, sardinas_patterson, witt_code_series,
};
use wittcode::combi::dyck::{dyck_phi, pair_alphabet};
use wittcode::combi::lattice::{lambda_series, lattice_paths, s_series, LatticeSpec};
use wittcode::combi::shuffle::shuffle_witt;
use wittcode::freealg::{Alphabet, NcSeries, Word};
use wittcode::ncsf::{ribbon_positivity_check, witt_q_sequence, Basis, Composition, SymElement};
use wittcode::rational::{binomial, rat, ratio, Rational};
use wittcode::verify::checks::{
    check_ba_star_series, check_catalan_tables, check_dyck_phi, check_dyck_phi_forest,
    check_dyck_series, check_factorization_identity, check_fibonacci_series, check_fuss_catalan,
    check_lambda_letters_agreement, check_lattice_counts, check_lattice_tables, check_q_table,
    check_ribbon_positivity, check_shuffle_analogue, check_star_products, check_star_tables,
    check_witt_diagram, CheckOutcome,
};
use wittcode::witt::{e_map, ghost, star_factorial, star_multinomial, unghost, GhostVector};

use num_bigint::BigInt;
use num_traits::Zero;

fn report(criterion: &str, started: Instant, outcomes: &[CheckOutcome]) {
    for outcome in outcomes {
        assert!(
            outcome.passed,
            "criterion {criterion}: check `{}` failed:\n{}",
            outcome.name, outcome.detail
        );
    }
    println!(
        "[PASS] criterion {criterion} — {} ms",
        started.elapsed().as_millis()
    );
}

fn words(alphabet: &std::sync::Arc<Alphabet>, texts: &[&str], truncation: u32) -> NcSeries {
    let parsed: Vec<Word> = texts
        .iter()
        .map(|t| alphabet.parse_word(t).unwrap())
        .collect();
    NcSeries::characteristic(alphabet.clone(), parsed, truncation).unwrap()
}

#[test]
fn criterion_01_q_on_lambda_table() {
    let started = Instant::now();
    // Spot-pin the stated Q_6 expansion before the full table comparison.
    let q6 = &witt_q_sequence(7).unwrap()[5];
    let mut expected = SymElement::zero(Basis::Lambda, 6);
    for (sign, parts) in [
        (-1i64, vec![2u32, 1, 1, 1, 1]),
        (1, vec![5, 1]),
        (1, vec![2, 1, 1, 2]),
        (-1, vec![6]),
        (1, vec![3, 1, 1, 1]),
        (-1, vec![3, 1, 2]),
        (1, vec![4, 2]),
        (-1, vec![4, 1, 1]),
    ] {
        expected
            .add_term(Composition::new(parts).unwrap(), rat(sign))
            .unwrap();
    }
    assert_eq!(q6, &expected, "Q_6 expansion");
    report(
        "01 (Q-table on Λ through Q_7)",
        started,
        &[check_q_table(7)],
    );
}

#[test]
fn criterion_02_fibonacci_code() {
    let started = Instant::now();
    // Q_7[{b,ab}] = ab⁶ + ab²(ab)² + ab⁴ab + ab³ab².
    let code = builtin_code("fib", 7).unwrap();
    let q7 = witt_code_series(&code, 7).unwrap();
    let expected = words(
        code.alphabet(),
        &["abbbbbb", "abbabab", "abbbbab", "abbbabb"],
        7,
    );
    assert_eq!(q7.with_truncation(7), expected, "Q_7 of the Fibonacci code");
    report(
        "02 (Fibonacci code Q_1…Q_7)",
        started,
        &[check_fibonacci_series(7)],
    );
}

#[test]
fn criterion_03_ba_star_code() {
    let started = Instant::now();
    // Corrected degree-5 row: the duplicate ba²b² is replaced by ba³b.
    let code = builtin_code("ba-star", 6).unwrap();
    let q5 = witt_code_series(&code, 5).unwrap();
    let expected = words(
        code.alphabet(),
        &["babba", "babbb", "baabb", "baaab", "baaaa", "baaba"],
        5,
    );
    assert_eq!(q5.with_truncation(5), expected, "Q_5 of ba*");
    report(
        "03 (ba* code with erratum + morphism onto integers)",
        started,
        &[check_ba_star_series(6)],
    );
}

#[test]
fn criterion_04_dyck_code() {
    let started = Instant::now();
    let code = builtin_code("dyck-len", 8).unwrap();
    for odd in [1u32, 3, 5, 7] {
        assert!(
            witt_code_series(&code, odd).unwrap().is_zero(),
            "Q_{odd} of the Dyck code should vanish"
        );
    }
    let q8 = witt_code_series(&code, 8).unwrap();
    assert_eq!(q8.terms().count(), 8, "Q_8 of the Dyck code has 8 words");
    report("04 (Dyck code Q_1…Q_8)", started, &[check_dyck_series(8)]);
}

#[test]
fn criterion_05_factorization_identity() {
    let started = Instant::now();
    report(
        "05 (ordered product identity + unique factorization, N = 8)",
        started,
        &[check_factorization_identity(8)],
    );
}

#[test]
fn criterion_06_lambda_letter_factorization() {
    let started = Instant::now();
    report(
        "06 (word-level Λ̃ factorization matches the symbolic Q-table, N = 7)",
        started,
        &[check_lambda_letters_agreement(7)],
    );
}

#[test]
fn criterion_07_ribbon_positivity() {
    let started = Instant::now();
    // -Q_2 = R(1,1) and -Q_3 = R(1,2) pin the transition.
    assert_eq!(
        ribbon_positivity_check(2).unwrap(),
        vec![Composition::new(vec![1, 1]).unwrap()]
    );
    assert_eq!(
        ribbon_positivity_check(3).unwrap(),
        vec![Composition::new(vec![1, 2]).unwrap()]
    );
    report(
        "07 (ribbon positivity of -Q_n, 2 ≤ n ≤ 8)",
        started,
        &[check_ribbon_positivity(8)],
    );
}

#[test]
fn criterion_08_witt_diagram() {
    let started = Instant::now();
    report(
        "08 (ghost round trips, ring laws, ∂∘e = ι∘ghost on 100 random vectors)",
        started,
        &[check_witt_diagram(10)],
    );
}

#[test]
fn criterion_09_catalan_fuss_catalan() {
    let started = Instant::now();
    let e = e_map(&star_factorial(2, 6).unwrap());
    let catalan: Vec<Rational> = [1, 1, 2, 5, 14, 42, 132].iter().map(|&c| rat(c)).collect();
    assert_eq!(e.coeffs(), &catalan[..], "e(*2!/2!) through order 6");
    report(
        "09 (Catalan table, Fuss–Catalan functional equation, log identity)",
        started,
        &[check_catalan_tables(6), check_fuss_catalan(10)],
    );
}

#[test]
fn criterion_10_star_binomial_tables() {
    let started = Instant::now();
    let e = e_map(&star_multinomial(&[3, 9], 3).unwrap());
    let expected: Vec<Rational> = [1i64, 220, 91498, 47961320]
        .iter()
        .map(|&c| rat(c))
        .collect();
    assert_eq!(e.coeffs(), &expected[..], "e(*(12,3)) table");
    report(
        "10 (star-binomial tables + multisection product checks)",
        started,
        &[check_star_tables(6), check_star_products(6)],
    );
}

#[test]
fn criterion_11_lattice_paths() {
    let started = Instant::now();
    let spec = LatticeSpec::new(2, 2, 2).unwrap();
    assert_eq!(lattice_paths(&spec, 1).len(), 6);
    assert_eq!(lattice_paths(&spec, 2).len(), 53);
    // Λ_2 of the (4,2) analogue: 17 corner-avoiding paths, signed.
    let lambda2 = lambda_series(&spec, 2).unwrap();
    assert_eq!(lambda2.terms().count(), 17);
    assert!(lambda2.terms().all(|(_, _, c)| c == &rat(-1)));
    // S_1 of the (2,1) analogue: both unit staircases.
    let spec21 = LatticeSpec::new(2, 1, 1).unwrap();
    let s1 = s_series(&spec21, 1).unwrap();
    assert_eq!(s1.to_text(), "1*RU + 1*UR");
    report(
        "11 (lattice path counts and word tables)",
        started,
        &[check_lattice_counts(4), check_lattice_tables(4)],
    );
}

#[test]
fn criterion_12_dyck_phi() {
    let started = Instant::now();
    // Φ_3 carries the stated fractional coefficients 3/2.
    let pairs = pair_alphabet();
    let phi3 = dyck_phi(3).unwrap();
    assert_eq!(
        phi3.coefficient(&pairs.parse_word("aabbab").unwrap()).unwrap(),
        ratio(3, 2)
    );
    assert_eq!(
        phi3.coefficient(&pairs.parse_word("abaabb").unwrap()).unwrap(),
        ratio(3, 2)
    );
    // Φ_4 carries 4/3, and π(Φ_4) = 35.
    let phi4 = dyck_phi(4).unwrap();
    assert_eq!(
        phi4.coefficient(&pairs.parse_word("aabbabab").unwrap()).unwrap(),
        ratio(4, 3)
    );
    assert_eq!(phi4.pi().coeff(4).unwrap(), &rat(35));
    report(
        "12 (Dyck Φ table with fractional coefficients, π images)",
        started,
        &[check_dyck_phi(6), check_dyck_phi_forest(4)],
    );
}

#[test]
fn criterion_13_shuffle_analogue() {
    let started = Instant::now();
    // The a ↦ 1 images for parts [2,1]: unghost of binom(3p, p).
    let ghosts = GhostVector::new(
        (1..=5u64)
            .map(|p| Rational::from_integer(binomial(3 * p, p)))
            .collect(),
    )
    .unwrap();
    let expected = unghost(&ghosts);
    let alphabet = Alphabet::new([("a", 1)]).unwrap();
    let input = [Word::from_ids(vec![0, 0]), Word::from_ids(vec![0])];
    let qs = shuffle_witt(&alphabet, &input, 5).unwrap();
    for (i, q) in qs.iter().enumerate() {
        let image = q
            .terms()
            .map(|(_, _, c)| c.clone())
            .fold(Rational::zero(), |acc, c| acc + c);
        assert_eq!(image, *expected.coord(i as u32 + 1), "coordinate {}", i + 1);
    }
    report(
        "13 (shuffle analogue recovers star-multinomial coordinates)",
        started,
        &[check_shuffle_analogue(5)],
    );
}

#[test]
fn sanity_ghost_example_values() {
    // Supporting frozen values used across criteria: ghosts of *(2,1) and
    // the star-factorial coordinates, plus a small Sardinas–Patterson case.
    let star = star_multinomial(&[1, 1], 3).unwrap();
    assert_eq!(ghost(&star).values(), &[rat(2), rat(6), rat(20)]);
    assert_eq!(star.coords(), &[rat(2), rat(1), rat(4)]);
    let fact = star_factorial(2, 3).unwrap();
    assert_eq!(fact.coords(), &[rat(1), rat(1), rat(3)]);
    let ab = Alphabet::binary();
    let bad: Vec<Word> = ["a", "ab", "ba"]
        .iter()
        .map(|t| ab.parse_word(t).unwrap())
        .collect();
    assert!(!sardinas_patterson(&bad).unwrap());
    // The stated factorization components at degree 4 of the integers code.
    let ints = builtin_code("integers", 4).unwrap();
    let f = right_length_factorization(&ints, 4).unwrap();
    let rendered: Vec<String> = f
        .component(4)
        .unwrap()
        .words
        .iter()
        .map(|w| ints.alphabet().render_word(w))
        .collect();
    assert_eq!(rendered, ["211", "31", "4"]);
    // Blocks of bab over the Fibonacci factorization.
    let fib = builtin_code("fib", 5).unwrap();
    let ff = right_length_factorization(&fib, 5).unwrap();
    let blocks = ff
        .decompose(&fib.alphabet().parse_word("bab").unwrap())
        .unwrap();
    let rendered: Vec<(u32, String)> = blocks
        .iter()
        .map(|(d, w)| (*d, fib.alphabet().render_word(w)))
        .collect();
    assert_eq!(
        rendered,
        [(1, "b".to_string()), (2, "ab".to_string())]
    );
    let _ = BigInt::from(0);
}
