//! End-to-end acceptance checks. Each criterion runs under a wall-clock
//! limit and reports a single PASS/FAIL line; the test fails if any does.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use ans::ans::AnsSystem;
use ans::automata::OrderedAlphabet;
use ans::congruence::{congruence_dfa, deterministic_bound, CongruenceSpec};
use ans::decision::{is_enumerating_series, is_zero, nonzero_word, subtract, Rejection, Verdict};
use ans::exactalg::{Scalar, Semiring, Vector};
use ans::series::LinearRepresentation;
use ans::systems;
use num_bigint::BigUint;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{all_words, language, random_rational_rep, single_word_rep, sum};

fn ab() -> OrderedAlphabet {
    OrderedAlphabet::parse("ab").unwrap()
}

fn l1() -> AnsSystem {
    AnsSystem::from_regex("a*(ba*ba*)*", &ab()).unwrap()
}

fn row(entries: &[i64]) -> Vector {
    Vector::row_i64(Semiring::N, entries).unwrap()
}

fn criterion_1() {
    let sys = l1();
    assert_eq!(sys.value("bbabb").unwrap(), BigUint::from(29u8));
    assert_eq!(sys.representation_u64(18).unwrap(), "aabab");
    let first = sys.enumerate(&BigUint::from(0u8), 7).unwrap();
    assert_eq!(first, ["", "a", "aa", "bb", "aaa", "abb", "bab"]);
}

fn criterion_2() {
    let trace = l1().value_trace("bbabb").unwrap();
    let table: [(&[i64], &[i64], &[i64]); 6] = [
        (&[1, 0], &[1, 0], &[0, 0]),
        (&[0, 1], &[1, 0], &[2, 0]),
        (&[1, 0], &[0, 1], &[3, 3]),
        (&[1, 0], &[0, 0], &[7, 6]),
        (&[0, 1], &[1, 0], &[15, 13]),
        (&[1, 0], &[0, 1], &[29, 29]),
    ];
    assert_eq!(trace.steps.len(), table.len());
    for (i, (step, (alpha, beta, gamma))) in trace.steps.iter().zip(table).enumerate() {
        assert_eq!(step.index, i);
        assert_eq!(
            step.letter,
            "bbabb".chars().nth(i.wrapping_sub(1)).filter(|_| i > 0)
        );
        assert_eq!(step.alpha, row(alpha), "alpha at {i}");
        assert_eq!(step.beta, row(beta), "beta at {i}");
        assert_eq!(step.gamma, row(gamma), "gamma at {i}");
    }
    assert_eq!(trace.value, Some(BigUint::from(29u8)));
}

fn criterion_3() {
    let sys = l1();
    let k = sys.dimension();
    let e = sys.enumerating_series().unwrap();
    assert_eq!(e.pre_trim_dimension(), 2 * k * k + k);
    assert_eq!(e.pre_trim_dimension(), 10);
    let s = &e.final_rep;
    let words = language(&['a', 'b'], 9, common::even_b);
    assert!(words.len() >= 500);
    for (n, w) in words.iter().take(500).enumerate() {
        let c = s.coefficient(w).unwrap().to_biguint().unwrap();
        assert_eq!(c, BigUint::from(n + 1), "coefficient of {w:?}");
        assert_eq!(c, sys.value(w).unwrap() + 1u8);
    }
    let mut rng = StdRng::seed_from_u64(3);
    let mut checked = 0;
    while checked < 100 {
        let len = rng.gen_range(0..=10);
        let w: String = (0..len)
            .map(|_| if rng.gen_bool(0.5) { 'a' } else { 'b' })
            .collect();
        if common::even_b(&w) {
            continue;
        }
        assert!(s.coefficient(&w).unwrap().is_zero(), "non-member {w:?}");
        checked += 1;
    }
}

fn criterion_4() {
    let sys = l1();
    let dfa = congruence_dfa(&sys, CongruenceSpec::new(3, 1).unwrap()).unwrap();
    assert!(dfa.states() as u64 <= deterministic_bound(sys.dimension(), 3));
    assert_eq!(deterministic_bound(sys.dimension(), 3), 18);
    assert_eq!(dfa.states(), 12);
    assert_eq!(dfa.minimize().states(), 8);
    let words = language(&['a', 'b'], 11, common::even_b);
    assert!(words.len() >= 1000);
    for (n, w) in words.iter().take(1000).enumerate() {
        assert_eq!(
            dfa.accepts_str(w).unwrap(),
            n % 3 == 1,
            "n = {n}, word {w:?}"
        );
    }
    for w in all_words(&['a', 'b'], 10) {
        if !common::even_b(&w) {
            assert!(!dfa.accepts_str(&w).unwrap(), "non-member {w:?} accepted");
        }
    }
}

fn criterion_5() {
    let cases: [(AnsSystem, common::Member, usize, &[&str]); 3] = [
        (
            l1(),
            common::even_b,
            12,
            &["", "a", "aa", "bb", "aaa", "abb", "bab"],
        ),
        (
            systems::binary(),
            common::binary,
            11,
            &["0", "1", "10", "11", "100", "101", "110"],
        ),
        (
            systems::fibonacci(),
            common::fibonacci,
            16,
            &["0", "1", "10", "100", "101", "1000", "1001", "1010"],
        ),
    ];
    for (sys, member, max_len, prefix) in cases {
        let letters = sys.alphabet().letters().to_vec();
        let words = language(&letters, max_len, member);
        assert!(words.len() >= 2000);
        assert_eq!(&words[..prefix.len()], prefix);
        for (n, w) in words.iter().take(2000).enumerate() {
            let r = sys.representation_u64(n as u64).unwrap();
            assert_eq!(&r, w, "representation({n})");
            assert_eq!(
                sys.value(&r).unwrap(),
                BigUint::from(n),
                "value(representation({n}))"
            );
            assert_eq!(sys.representation(&sys.value(w).unwrap()).unwrap(), *w);
        }
    }
}

fn criterion_6() {
    let sys = l1();
    let letters = ['a', 'b'];
    let universe = all_words(&letters, 6);
    // P(u) computed with the library's radix comparison.
    let smaller = |u: &str| -> BTreeSet<String> {
        universe
            .iter()
            .filter(|w| sys.radix_cmp(w, u).unwrap().is_lt())
            .cloned()
            .collect()
    };
    for u in all_words(&letters, 5) {
        let pu = smaller(&u);
        let oracle: BTreeSet<String> = universe
            .iter()
            .filter(|w| common::radix_less(w, &u, &letters))
            .cloned()
            .collect();
        assert_eq!(pu, oracle);
        for (i, &a) in letters.iter().enumerate() {
            let ua = format!("{u}{a}");
            let lhs = smaller(&ua);
            let eps: BTreeSet<String> = [String::new()].into();
            let below_a: BTreeSet<String> =
                letters[..i].iter().map(|b| format!("{u}{b}")).collect();
            let shifted: BTreeSet<String> = pu
                .iter()
                .flat_map(|w| letters.iter().map(move |c| format!("{w}{c}")))
                .collect();
            assert!(
                eps.is_disjoint(&below_a)
                    && eps.is_disjoint(&shifted)
                    && below_a.is_disjoint(&shifted)
            );
            assert_eq!(
                lhs.len(),
                1 + below_a.len() + shifted.len(),
                "sizes for {ua:?}"
            );
            let rhs: BTreeSet<String> = eps.into_iter().chain(below_a).chain(shifted).collect();
            assert_eq!(lhs, rhs, "P({ua:?})");
            let in_language = lhs.iter().filter(|w| common::even_b(w)).count();
            assert_eq!(sys.count_below(&ua).unwrap(), BigUint::from(in_language));
        }
    }
}

fn criterion_7() {
    for b in systems::Bundled::ALL {
        let e = b.system().enumerating_series().unwrap().final_rep;
        assert_eq!(
            is_enumerating_series(&e, 12).unwrap(),
            Verdict::Yes,
            "{}",
            b.name()
        );
    }
    let sys = l1();
    let check_witness = |s: &LinearRepresentation, verdict: Verdict| -> String {
        let Verdict::No(Rejection::Mismatch {
            word,
            expected,
            actual,
        }) = verdict
        else {
            panic!("expected a witness, got {verdict:?}");
        };
        let oracle = language(&['a', 'b'], word.len(), common::even_b)
            .iter()
            .position(|w| *w == word)
            .map_or(0, |n| n + 1);
        assert_eq!(expected, Scalar::natural(oracle as u64));
        assert_eq!(actual, s.coefficient(&word).unwrap());
        assert_ne!(expected, actual);
        word
    };

    let chi = sys.linear_representation();
    let verdict = is_enumerating_series(chi, 12).unwrap();
    assert_eq!(
        verdict,
        Verdict::No(Rejection::Mismatch {
            word: "a".into(),
            expected: Scalar::natural(2u8),
            actual: Scalar::natural(1u8),
        })
    );
    check_witness(chi, verdict);

    let e = sys.enumerating_series().unwrap().final_rep;
    let doubled = e
        .with_initial(e.initial().scale(&Scalar::natural(2u8)).unwrap())
        .unwrap();
    let verdict = is_enumerating_series(&doubled, 12).unwrap();
    assert_eq!(check_witness(&doubled, verdict.clone()), "");
    assert_eq!(
        verdict,
        Verdict::No(Rejection::Mismatch {
            word: String::new(),
            expected: Scalar::natural(1u8),
            actual: Scalar::natural(2u8),
        })
    );

    // Coefficient 1 on "ab" only.
    let finite = single_word_rep(
        &ab(),
        &[0, 1],
        Semiring::N,
        BigRational::from_integer(1.into()),
    );
    assert_eq!(
        is_enumerating_series(&finite, 12).unwrap(),
        Verdict::No(Rejection::FiniteSupport)
    );
}

fn criterion_8() {
    let mut rng = StdRng::seed_from_u64(8);
    let alphabet = ab();
    for _ in 0..20 {
        let dim = rng.gen_range(1..=5);
        let s = random_rational_rep(&mut rng, &alphabet, dim);
        assert!(is_zero(&subtract(&s, &s).unwrap()).unwrap());

        let len = rng.gen_range(0..=4);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..2)).collect();
        let c = BigRational::new(rng.gen_range(1..=9).into(), rng.gen_range(1..=5).into());
        let c = if rng.gen_bool(0.5) { -c } else { c };
        let planted = sum(
            &s,
            &single_word_rep(&alphabet, &word, Semiring::Q, c.clone()),
        );
        let d = subtract(&s, &planted).unwrap();
        assert!(!is_zero(&d).unwrap());
        assert_eq!(nonzero_word(&d).unwrap(), Some(word.clone()));
        assert_eq!(d.coefficient_of(&word).value(), &-c);
        for w in ans::automata::words_up_to(2, 5) {
            let expected_zero = w != word;
            assert_eq!(d.coefficient_of(&w).is_zero(), expected_zero);
        }
    }
}

fn main() {
    let criteria: [(u32, fn(), u64); 8] = [
        (1, criterion_1, 1),
        (2, criterion_2, 1),
        (3, criterion_3, 10),
        (4, criterion_4, 5),
        (5, criterion_5, 30),
        (6, criterion_6, 5),
        (7, criterion_7, 10),
        (8, criterion_8, 5),
    ];
    let mut failures = Vec::new();
    for (n, check, limit) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let within = elapsed < Duration::from_secs(limit);
        let pass = outcome.is_ok() && within;
        let status = if pass { "PASS" } else { "FAIL" };
        let note = match (&outcome, within) {
            (Err(_), _) => " (assertion failed)",
            (Ok(_), false) => " (too slow)",
            _ => "",
        };
        println!(
            "criterion {n}: {status} in {:.3}s, limit {limit}s{note}",
            elapsed.as_secs_f64()
        );
        if !pass {
            failures.push(n);
        }
    }
    if !failures.is_empty() {
        eprintln!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
}
