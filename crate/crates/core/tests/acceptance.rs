//! Full desk-scale sweep of every check the workbench ships, one test
//! per acceptance criterion. Each test prints a single summary line on
//! success; a failure panics with the offending report's table line.

use supercong::arith::{legendre, make_residue, primes_in, Integer, Modulus, Rational, Residue};
use supercong::combinat::{abelian_square_count, abelian_square_oracle, binomial_exact};
use supercong::congruences::{
    check_cc, check_harmonic_congruence, check_lemma_congruence, CcId, HarmonicCongruenceId,
    LemmaId,
};
use supercong::identities::{check_identity, IdentityId};
use supercong::report::{params_from, CheckReport, Params, Value};
use supercong::runner::{all_passed, run_suite, SuiteConfig};
use supercong::theorems::{
    decomposition_check, decomposition_completeness, decomposition_triple, multi_sum_lhs,
    theorem1_fast_lhs, verify_section5_step, verify_section6, verify_theorem1, verify_theorem_tt,
    Section5Id, Section6Id, SumSpec, DEFAULT_TERM_BUDGET,
};
use supercong::wz::{verify_wz, WzPairId};
use supercong::Error;

fn must(report: &CheckReport) {
    assert!(report.passed(), "failing check: {}", report.table_line());
}

fn pass(n: u32, msg: &str) {
    println!("criterion {n:>2} PASS: {msg}");
}

fn residue_value(v: &Value) -> u64 {
    match v {
        Value::Residue(r) => r.to_u64(),
        Value::Exact(x) => panic!("expected a residue, got exact value {x}"),
    }
}

#[test]
fn criterion_01_plain_box_sums_mod_p_cubed() {
    let mut checked = 0u32;
    for p in primes_in(3, 37) {
        for r in 1..=3 {
            for s in 1..=3 {
                for t in 1..=3 {
                    // a fast/oracle mismatch fails the report before the
                    // closed form is even consulted
                    must(&verify_theorem1(p, r, s, t, DEFAULT_TERM_BUDGET).unwrap());
                    checked += 1;
                }
            }
        }
    }
    pass(
        1,
        &format!(
            "{checked} plain box sums over primes 3..=37, radii (1..3)^3, match their \
             closed form mod p^3, with the reduced route equal to the oracle on each"
        ),
    );
}

#[test]
fn criterion_02_squared_box_sums_mod_p_squared() {
    let mut checked = 0u32;
    for p in primes_in(3, 23) {
        for r in 1..=2 {
            for s in 1..=2 {
                for t in 1..=2 {
                    must(&verify_theorem_tt(p, r, s, t, DEFAULT_TERM_BUDGET).unwrap());
                    checked += 1;
                }
            }
        }
    }
    pass(
        2,
        &format!("{checked} squared box sums over primes 3..=23, radii (1..2)^3, mod p^2"),
    );
}

#[test]
fn criterion_03_simplex_squares_and_their_counting_form() {
    let primes = primes_in(3, 97);
    for &p in &primes {
        must(&verify_section5_step(Section5Id::News1, p, None).unwrap());
    }

    // the simplex sum counts abelian squares over three letters, so its
    // tail past n = 0 must vanish mod p^2 as well
    let f3: Vec<Integer> = (0..97).map(|n| abelian_square_count(3, n)).collect();
    for &p in &primes {
        let tail: Integer = f3[1..p as usize].iter().sum();
        let residue = Residue::new(tail, Modulus::new(p, 2));
        assert!(residue.is_zero(), "tail sum mod {p}^2 is {residue}");
    }

    // both counting routes agree before the values are trusted as pins
    let pinned: [u64; 5] = [1, 3, 15, 93, 639];
    for n in 0..=4u64 {
        let fast = abelian_square_count(3, n);
        let oracle = abelian_square_oracle(3, n, 1 << 24).unwrap();
        assert_eq!(fast, oracle, "counting routes split at n = {n}");
        assert_eq!(fast, Integer::from(pinned[n as usize]));
    }

    pass(
        3,
        &format!(
            "simplex square sums are 1 mod p^2 on {} primes up to 97, their tails vanish \
             mod p^2, and the first five three-letter counts match the string oracle",
            primes.len()
        ),
    );
}

#[test]
fn criterion_04_harmonic_congruence_catalog() {
    let mut checked = 0u32;
    for id in HarmonicCongruenceId::ALL {
        for p in primes_in(5, 199) {
            must(&check_harmonic_congruence(id, p).unwrap());
            checked += 1;
        }
    }
    for id in [LemmaId::B2, LemmaId::C7] {
        for p in primes_in(3, 199) {
            must(&check_lemma_congruence(id, p, &Params::new()).unwrap());
            checked += 1;
        }
    }
    for p in primes_in(5, 199) {
        must(&check_lemma_congruence(LemmaId::B1, p, &Params::new()).unwrap());
        checked += 1;
    }

    // the B1 floor is 5, not 3: at p = 3 the double sum collapses to a
    // single term, 1/(2*4) * 2 = 1/4, and 1/4 is 1 mod 3, not 0
    let mut inner = Rational::new(Integer::from(0), Integer::from(1));
    let mut total = inner.clone();
    let mut pow = Integer::from(1);
    for k in 1..3u64 {
        total += Rational::new(Integer::from(1), Integer::from(k) * (&pow * 2u64)) * &inner;
        pow *= 2;
        inner += Rational::new(pow.clone(), Integer::from(k));
    }
    assert_eq!(total, Rational::new(Integer::from(1), Integer::from(4)));
    let bad = make_residue(&total, Modulus::new(3, 1)).unwrap();
    assert_eq!(bad.to_u64(), 1);
    assert!(matches!(
        check_lemma_congruence(LemmaId::B1, 3, &Params::new()),
        Err(Error::PrimeTooSmall { .. })
    ));

    pass(
        4,
        &format!(
            "{checked} harmonic congruences: the ten-entry catalog on primes 5..=199, B2 \
             and C7 from 3, B1 from 5 with its p = 3 counterexample pinned (sum = 1/4, a \
             unit mod 3)"
        ),
    );
}

#[test]
fn criterion_05_binomial_expansions_at_shifted_arguments() {
    let mut checked = 0u32;
    for p in [5u64, 7, 11, 13] {
        for i in 0..=3u64 {
            for j in 0..=3u64 {
                must(&check_cc(CcId::Cc2, p, i, j, &Params::new()).unwrap());
                checked += 1;
                for r in 1..p {
                    must(&check_cc(CcId::Cc22, p, i, j, &params_from(&[("r", r as i64)])).unwrap());
                    checked += 1;
                }
                for k in 0..p {
                    must(&check_cc(CcId::Cc11, p, i, j, &params_from(&[("k", k as i64)])).unwrap());
                    checked += 1;
                    for m in 0..=k {
                        let extra = params_from(&[("k", k as i64), ("m", m as i64)]);
                        must(&check_cc(CcId::Cc1, p, i, j, &extra).unwrap());
                        checked += 1;
                    }
                }
            }
        }
    }
    pass(
        5,
        &format!(
            "{checked} expansions of binomials at p-shifted arguments (CC22, CC2 mod p^3; \
             CC1, CC11 mod p^2) over p in (5,7,11,13), i,j <= 3, every admissible r, k, m; \
             zero failures"
        ),
    );
}

#[test]
fn criterion_06_three_block_decomposition() {
    let mut checked = 0u32;
    for p in [5u64, 7, 11] {
        for i in 0..=2u64 {
            for j in 0..=2u64 {
                for t in 1..=2u64 {
                    // construction alone proves p-integrality of each block
                    decomposition_triple(p, i, j, t).unwrap();
                    must(&decomposition_check(p, i, j, t).unwrap());
                    checked += 1;
                }
            }
        }
        for r in 1..=2u64 {
            for s in 1..=2u64 {
                for t in 1..=2u64 {
                    must(&decomposition_completeness(p, r, s, t, DEFAULT_TERM_BUDGET).unwrap());
                    checked += 1;
                }
            }
        }
    }
    pass(
        6,
        &format!(
            "{checked} block decompositions over p in (5,7,11): A, B, C are p-integral, \
             B + C vanishes mod p^3, A hits its closed form, and the blocks resum to the \
             exact box value for radii up to (2,2) with t <= 2"
        ),
    );
}

#[test]
fn criterion_07_squared_sum_step_congruences() {
    let mut checked = 0u32;
    for p in primes_in(3, 61) {
        for id in [Section5Id::News2, Section5Id::S1, Section5Id::S2, Section5Id::Ch1] {
            must(&verify_section5_step(id, p, None).unwrap());
            checked += 1;
        }
        for b in 0..=(p - 1) / 2 {
            must(&verify_section5_step(Section5Id::News22, p, Some(b)).unwrap());
            checked += 1;
        }
    }
    pass(
        7,
        &format!(
            "{checked} step congruences (NEWS2, S1, S2, CH1, and NEWS2_2 at every b up to \
             (p-1)/2) over primes 3..=61 at their stated exponents"
        ),
    );
}

#[test]
fn criterion_08_double_sum_closing_family() {
    let mut checked = 0u32;

    // the two box double sums need p > 3: the plain one restates the
    // binom(ap,bp) strengthening that fails at 3, and the squared one
    // fails with it (62 is not 0 mod 9)
    for p in primes_in(5, 61) {
        for r in 1..=3i64 {
            for s in 1..=3i64 {
                let ps = params_from(&[("r", r), ("s", s)]);
                for id in [Section6Id::PlainDouble, Section6Id::Super5] {
                    for rep in verify_section6(id, p, &ps, DEFAULT_TERM_BUDGET).unwrap() {
                        must(&rep);
                        checked += 1;
                    }
                }
            }
        }
    }

    for p in primes_in(3, 499) {
        for rep in verify_section6(Section6Id::Kernel, p, &Params::new(), DEFAULT_TERM_BUDGET).unwrap() {
            if p == 5 {
                // hand-checkable pin: 1 + 2 + 6 + 20 + 70 = 99 = 4*25 - 1
                let raw: Integer = (0..5u64).map(|k| binomial_exact(2 * k, k as i64)).sum();
                assert_eq!(raw, Integer::from(99));
                assert_eq!(residue_value(&rep.lhs), 24);
                assert_eq!(legendre(&Integer::from(5), 3), -1);
            }
            must(&rep);
            checked += 1;
        }
        must(&check_lemma_congruence(LemmaId::CentralSum, p, &Params::new()).unwrap());
        checked += 1;
    }

    for p in primes_in(5, 13) {
        for n in [4usize, 5] {
            for twos in 0..=n {
                let mut ps = params_from(&[("n", n as i64)]);
                for idx in 1..=n {
                    ps.insert(format!("r{idx}"), if idx <= n - twos { 1 } else { 2 });
                }
                for rep in verify_section6(Section6Id::Prop7, p, &ps, DEFAULT_TERM_BUDGET).unwrap() {
                    must(&rep);
                    checked += 1;
                }
            }
        }
    }

    for p in primes_in(3, 61) {
        for id in [Section6Id::CtPiece1, Section6Id::CtPiece2, Section6Id::CtTotal] {
            for rep in verify_section6(id, p, &Params::new(), DEFAULT_TERM_BUDGET).unwrap() {
                must(&rep);
                checked += 1;
            }
        }
    }

    pass(
        8,
        &format!(
            "{checked} closing congruences: box double sums mod p^3 and their squared form \
             mod p^2 on primes 5..=61 (floor raised past 3 where the plain sum restates the \
             mod p^3 binomial strengthening), the central kernel and central binomial sum \
             through 499 with the p = 5 value 99 = -1 mod 25 pinned, four- and \
             five-dimensional boxes with unit and doubled radii on primes 5..=13, and the \
             constant-term pieces through 61"
        ),
    );
}

#[test]
fn criterion_09_identity_suite_at_desk_scale() {
    let mut checked = 0u32;
    let n_ids = [
        IdentityId::H1,
        IdentityId::H2,
        IdentityId::T1,
        IdentityId::T2,
        IdentityId::T4,
        IdentityId::T4A,
        IdentityId::T4B,
    ];
    for id in n_ids {
        for n in 0..=200i64 {
            must(&check_identity(id, &params_from(&[("n", n)])).unwrap());
            checked += 1;
        }
    }
    for k in 0..=200i64 {
        must(&check_identity(IdentityId::InvBinom, &params_from(&[("k", k)])).unwrap());
        checked += 1;
    }
    for p in primes_in(3, 199) {
        must(&check_identity(IdentityId::DoubleBinom, &params_from(&[("p", p as i64)])).unwrap());
        checked += 1;
    }
    for m in 0..=200i64 {
        for n in 0..=200i64 {
            must(&check_identity(IdentityId::Hockey, &params_from(&[("m", m), ("n", n)])).unwrap());
            checked += 1;
        }
    }
    for b in 0..=200i64 {
        must(&check_identity(IdentityId::Vandermonde, &params_from(&[("b", b)])).unwrap());
        checked += 1;
    }
    pass(
        9,
        &format!("{checked} exact identities, every id over its full grid with sizes up to 200"),
    );
}

#[test]
fn criterion_10_difference_certificates() {
    let mut instances = Vec::new();
    for pair in WzPairId::ALL {
        let rep = verify_wz(pair, 200);
        must(&rep);
        instances.push(format!("{}={}", rep.check_id, residue_exact(&rep.lhs)));
    }
    pass(
        10,
        &format!(
            "both difference certificates hold exactly on the full grid n <= 200, parity \
             row sums included ({})",
            instances.join(", ")
        ),
    );
}

fn residue_exact(v: &Value) -> String {
    match v {
        Value::Exact(x) => x.to_string(),
        Value::Residue(r) => r.to_string(),
    }
}

#[test]
fn criterion_11_runner_infrastructure() {
    // the reduced route must agree with the oracle away from the sweep grid
    let spec = SumSpec::new(vec![3, 2, 1], 17, false, 3).unwrap();
    let oracle = multi_sum_lhs(&spec, DEFAULT_TERM_BUDGET).unwrap();
    assert_eq!(oracle, theorem1_fast_lhs(17, 3, 2, 1, 3));
    for n in 0..=6u64 {
        assert_eq!(
            abelian_square_count(2, n),
            abelian_square_oracle(2, n, 1 << 24).unwrap()
        );
    }

    // byte-identical reports whether one worker runs or eight
    let mut cfg = SuiteConfig::default();
    cfg.prime_lo = 3;
    cfg.prime_hi = 7;
    cfg.n_max = 6;
    cfg.rst_lo = 1;
    cfg.rst_max = 2;
    cfg.ij_lo = 0;
    cfg.ij_max = 1;
    cfg.jobs = 1;
    let serial = run_suite(&cfg).unwrap();
    cfg.jobs = 8;
    let parallel = run_suite(&cfg).unwrap();
    let serial_bytes: Vec<String> = serial.iter().map(|r| r.json_line()).collect();
    let parallel_bytes: Vec<String> = parallel.iter().map(|r| r.json_line()).collect();
    assert_eq!(serial_bytes, parallel_bytes);
    assert!(!serial.is_empty() && all_passed(&serial));

    // exit codes ride on this predicate: all pass maps to 0, any fail to
    // 1, config errors to 2 (the CLI tests drive 0 and 2 end to end)
    let good = CheckReport::comparing(
        supercong::Suite::Identities,
        "SYNTHETIC",
        None,
        Params::new(),
        None,
        Value::Exact(Rational::new(Integer::from(1), Integer::from(1))),
        Value::Exact(Rational::new(Integer::from(1), Integer::from(1))),
    );
    let bad = CheckReport::comparing(
        supercong::Suite::Identities,
        "SYNTHETIC",
        None,
        Params::new(),
        None,
        Value::Exact(Rational::new(Integer::from(1), Integer::from(1))),
        Value::Exact(Rational::new(Integer::from(2), Integer::from(1))),
    );
    assert!(all_passed(&[good.clone()]));
    assert!(!all_passed(&[good, bad]));

    pass(
        11,
        &format!(
            "oracle and reduced routes agree off-grid, {} reports come out byte-identical \
             with 1 and 8 workers, and the pass/fail predicate behind the exit codes \
             distinguishes synthetic failures",
            serial_bytes.len()
        ),
    );
}
