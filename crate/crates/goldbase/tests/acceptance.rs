//! Acceptance gate: eleven criteria, one test and one printed pass line
//! each. Every scan bound, window, and tolerance is pinned here as a
//! constant; a failing criterion fails its test with the offending data.

use std::time::{Duration, Instant};

use goldbase::digits::{DigitString, RadixGlyph};
use goldbase::quad::{sigma_pow, Base, QuadInt};
use goldbase::report::{
    run_conjecture, run_suite, ConjectureId, ReportEnvelope, SuiteId, Verdict,
};
use goldbase::representation::{
    bergman_of, brute_force_reps, canonical_of, expansion_of, normalize_with_trace, type_code,
    Scheme, TypeCode,
};
use goldbase::scan;
use goldbase::silver::{silver_canonical_of, silver_standard_of};
use goldbase::table::{phi_rows, render_phi_table, TableFormat};

const TABLE_BUDGET: Duration = Duration::from_secs(1);
const MISMATCH_BUDGET: Duration = Duration::from_secs(30);
const UNIQUENESS_BUDGET: Duration = Duration::from_secs(60);
const RUN_SCAN_BUDGET: Duration = Duration::from_secs(60);

const FULL_SCAN_MAX: u64 = 100_000;
const RECURSION_MAX: u64 = 20_000;
const SILVER_SCAN_MAX: u64 = 20_000;
const UNIQUENESS_MAX: u64 = 500;
const UNIQUENESS_WINDOW: (i32, i32) = (14, -14);

fn announce(id: u32, started: Instant, budget: Option<Duration>, summary: &str) {
    let elapsed = started.elapsed();
    if let Some(budget) = budget {
        assert!(
            elapsed <= budget,
            "criterion {id:02} took {elapsed:?}, over its {budget:?} budget"
        );
    }
    println!(
        "acceptance criterion {id:02}: PASS — {summary} ({} ms)",
        elapsed.as_millis()
    );
}

fn assert_envelope(envelope: &ReportEnvelope, want: Verdict) {
    assert_eq!(
        envelope.verdict, want,
        "suite {} ended {:?}:\n{:#?}",
        envelope.suite, envelope.verdict, envelope.details
    );
}

/// Reference table, N = 1..12: Bergman and canonical expansions.
const PHI_TABLE_12: [(&str, &str); 12] = [
    ("1·0", "1·0"),
    ("10·01", "10·01"),
    ("100·01", "11·01"),
    ("101·01", "101·01"),
    ("1000·1001", "1000·1001"),
    ("1010·0001", "1010·0001"),
    ("10000·0001", "1011·0001"),
    ("10001·0001", "10001·0001"),
    ("10010·0101", "10010·0101"),
    ("10100·0101", "10011·0101"),
    ("10101·0101", "10101·0101"),
    ("100000·101001", "100000·101001"),
];

/// Reference table, N = 1..24: Bergman expansion and type code.
const TYPE_TABLE_24: [(&str, TypeCode); 24] = [
    ("1·0", TypeCode::C),
    ("10·01", TypeCode::A),
    ("100·01", TypeCode::B),
    ("101·01", TypeCode::C),
    ("1000·1001", TypeCode::D),
    ("1010·0001", TypeCode::A),
    ("10000·0001", TypeCode::B),
    ("10001·0001", TypeCode::C),
    ("10010·0101", TypeCode::A),
    ("10100·0101", TypeCode::B),
    ("10101·0101", TypeCode::C),
    ("100000·101001", TypeCode::D),
    ("100010·001001", TypeCode::A),
    ("100100·001001", TypeCode::B),
    ("100101·001001", TypeCode::C),
    ("101000·100001", TypeCode::D),
    ("101010·000001", TypeCode::A),
    ("1000000·000001", TypeCode::B),
    ("1000001·000001", TypeCode::C),
    ("1000010·010001", TypeCode::A),
    ("1000100·010001", TypeCode::B),
    ("1000101·010001", TypeCode::C),
    ("1001000·100101", TypeCode::D),
    ("1001010·000101", TypeCode::A),
];

/// Reference table, N = 1..18: standard and canonical base-σ expansions.
const SILVER_TABLE_18: [(&str, &str); 18] = [
    ("1·0", "1·0"),
    ("2·0", "2·0"),
    ("10·11", "10·11"),
    ("11·11", "11·11"),
    ("20·01", "20·01"),
    ("100·01", "21·01"),
    ("101·01", "101·01"),
    ("102·01", "102·01"),
    ("110·12", "110·12"),
    ("111·12", "111·12"),
    ("120·02", "120·02"),
    ("200·02", "121·02"),
    ("201·02", "201·02"),
    ("202·02", "202·02"),
    ("1000·2011", "1000·2011"),
    ("1001·2011", "1001·2011"),
    ("1010·1011", "1010·1011"),
    ("1011·1011", "1011·1011"),
];

#[test]
fn criterion_01_paper_tables_exact() {
    let t0 = Instant::now();

    // Expansion table rows, rendered the same way the CLI renders them,
    // against the reference strings, byte for byte.
    let golden_12: String = PHI_TABLE_12
        .iter()
        .zip(TYPE_TABLE_24.iter())
        .enumerate()
        .map(|(k, ((beta, gamma), (_, code)))| format!("{}\t{beta}\t{gamma}\t{code}\n", k + 1))
        .collect();
    let rendered = render_phi_table(&phi_rows(1, 12, RadixGlyph::MiddleDot), TableFormat::Text);
    assert_eq!(rendered, golden_12, "N = 1..12 expansion table");

    for (k, (beta, code)) in TYPE_TABLE_24.iter().enumerate() {
        let n = k as u64 + 1;
        assert_eq!(bergman_of(n).render(RadixGlyph::MiddleDot), *beta, "β({n})");
        assert_eq!(type_code(n), *code, "T({n})");
    }

    for (k, (std_want, can_want)) in SILVER_TABLE_18.iter().enumerate() {
        let n = k as u64 + 1;
        assert_eq!(
            silver_standard_of(n).render(RadixGlyph::MiddleDot),
            *std_want,
            "standard σ-expansion of {n}"
        );
        assert_eq!(
            silver_canonical_of(n).render(RadixGlyph::MiddleDot),
            *can_want,
            "canonical σ-expansion of {n}"
        );
    }

    announce(1, t0, Some(TABLE_BUDGET), "three reference tables reproduced byte-for-byte");
}

#[test]
fn criterion_02_mismatch_set_and_density() {
    let t0 = Instant::now();
    let envelope = run_suite(SuiteId::Prop32, Some(FULL_SCAN_MAX));
    assert_envelope(&envelope, Verdict::Pass);
    announce(
        2,
        t0,
        Some(MISMATCH_BUDGET),
        "{γ≠β} = ⌊(φ+2)n⌋ to 100000; density within 0.001 of 1/(φ+2)",
    );
}

#[test]
fn criterion_03_uniqueness_by_brute_force() {
    let t0 = Instant::now();
    let (l_max, r_min) = UNIQUENESS_WINDOW;
    let bad: Vec<u64> = scan::map_range(1, UNIQUENESS_MAX, |n| {
        let found = brute_force_reps(n, l_max, r_min, Scheme::Bergman);
        let bergman_ok = found.len() == 1 && found[0] == bergman_of(n);

        // Canonical admissibility with the pair made mandatory: among the
        // locally admissible strings, the 11-pair form wins when present.
        let all = brute_force_reps(n, l_max, r_min, Scheme::Canonical);
        let with_pair: Vec<&DigitString> = all
            .iter()
            .filter(|r| r.digit(1) == 1 && r.digit(0) == 1)
            .collect();
        let canonical_ok = match with_pair.as_slice() {
            [] => all.len() == 1 && all[0] == canonical_of(n),
            [pair] => all.len() == 2 && **pair == canonical_of(n),
            _ => false,
        };
        (!(bergman_ok && canonical_ok)).then_some(n)
    })
    .into_iter()
    .flatten()
    .collect();
    assert!(bad.is_empty(), "uniqueness fails at N = {bad:?}");
    announce(
        3,
        t0,
        Some(UNIQUENESS_BUDGET),
        "exactly one admissible string per scheme on [−14, 14], N ≤ 500",
    );
}

#[test]
fn criterion_04_lucas_closed_forms() {
    let t0 = Instant::now();
    let envelope = run_suite(SuiteId::Lemma41, Some(15));
    assert_envelope(&envelope, Verdict::Pass);
    announce(
        4,
        t0,
        None,
        "closed forms match direct computation for n = 1..15; doubled form for n = 2..15",
    );
}

#[test]
fn criterion_05_width_laws() {
    let t0 = Instant::now();
    for id in [SuiteId::Prop41, SuiteId::Prop42] {
        let envelope = run_suite(id, Some(FULL_SCAN_MAX));
        assert_envelope(&envelope, Verdict::Pass);
    }
    announce(5, t0, None, "(L, R) width laws hold for 2 ≤ N ≤ 100000, both schemes");
}

#[test]
fn criterion_06_recursions_match_direct() {
    let t0 = Instant::now();
    for id in [SuiteId::Thm51, SuiteId::Thm52] {
        let envelope = run_suite(id, Some(RECURSION_MAX));
        assert_envelope(&envelope, Verdict::Pass);
    }
    announce(6, t0, None, "interval recursions equal greedy construction for N ≤ 20000");
}

#[test]
fn criterion_07_tail_digits_and_orthogonality() {
    let t0 = Instant::now();
    let envelope = run_suite(SuiteId::Lemma51, Some(10));
    assert_envelope(&envelope, Verdict::Pass);
    let envelope = run_suite(SuiteId::Lemma61, Some(12));
    assert_envelope(&envelope, Verdict::Pass);
    announce(7, t0, None, "tail-digit laws for n = 2..10; orthogonality for n = 1..12");
}

#[test]
fn criterion_08_run_lengths() {
    let t0 = Instant::now();
    let envelope = run_suite(SuiteId::Thm61, Some(FULL_SCAN_MAX));
    assert_envelope(&envelope, Verdict::Pass);
    assert!(
        envelope.details.iter().all(|c| !c.exploratory),
        "the Bergman variety check must be enforced at this scale"
    );
    announce(
        8,
        t0,
        Some(RUN_SCAN_BUDGET),
        "canonical runs have Lucas lengths on columns −14..14, N ≤ 100000; Bergman shows lengths 1..7",
    );
}

#[test]
fn criterion_09_worked_addition_trace() {
    let t0 = Instant::now();
    let lhs = expansion_of(4, Scheme::Canonical);
    let rhs = expansion_of(1, Scheme::Canonical);
    let sum = lhs.add_digitwise(&rhs);
    assert_eq!(sum.render(RadixGlyph::MiddleDot), "102·01");

    let trace = normalize_with_trace(&sum, Scheme::Canonical).expect("5 normalizes");
    let five = QuadInt::from_int(Base::Phi, 5);
    assert_eq!(sum.value(), five, "digit-wise sum must already hold the value");
    for step in &trace.steps {
        assert_eq!(
            step.after.value(),
            five,
            "value changed at the {:?} step at exponent {}",
            step.rule,
            step.exponent
        );
    }
    let seen: Vec<String> = trace
        .steps
        .iter()
        .map(|s| s.after.render(RadixGlyph::MiddleDot))
        .collect();
    assert!(seen.contains(&"110·02".to_string()), "double carry missing: {seen:?}");
    assert_eq!(trace.result.render(RadixGlyph::MiddleDot), "1000·1001");
    announce(9, t0, None, "4+1 trace passes 102·01 and 110·02, ends 1000·1001, value-exact");
}

#[test]
fn criterion_10_silver_scans() {
    let t0 = Instant::now();
    for id in [
        ConjectureId::SilverMismatch,
        ConjectureId::SilverIntervals,
        ConjectureId::SilverRuns,
    ] {
        let envelope = run_conjecture(id, Some(SILVER_SCAN_MAX));
        assert_envelope(&envelope, Verdict::Consistent);
    }
    announce(
        10,
        t0,
        None,
        "silver mismatch/interval/run scans consistent to N = 20000, columns −6..6",
    );
}

#[test]
fn criterion_11_module_invariants() {
    let t0 = Instant::now();

    // Quadratic-ring identities, exactly.
    let phi = QuadInt::new(Base::Phi, 0, 1);
    let one_phi = QuadInt::one(Base::Phi);
    assert_eq!(phi.clone() * phi.clone(), phi.clone() + one_phi.clone(), "φ² = φ + 1");
    assert_eq!(
        phi.clone() * (phi.clone() - one_phi.clone()),
        one_phi.clone(),
        "φ(φ−1) = 1"
    );
    let sigma = QuadInt::new(Base::Silver, 1, 1);
    let one_sigma = QuadInt::one(Base::Silver);
    assert_eq!(
        sigma.clone() * sigma.clone(),
        sigma.clone().scale(2) + one_sigma.clone(),
        "σ² = 2σ + 1"
    );
    assert_eq!(
        sigma.clone() * QuadInt::new(Base::Silver, -1, 1),
        one_sigma.clone(),
        "σ(√2 − 1) = 1"
    );
    assert_eq!(sigma_pow(7) * sigma_pow(-7), one_sigma, "σ⁷σ⁻⁷ = 1");

    // Render/parse round trips for both bases.
    for n in 1..=2_000u64 {
        let rep = bergman_of(n);
        let text = rep.render(RadixGlyph::MiddleDot);
        assert_eq!(DigitString::parse(&text, Base::Phi).unwrap(), rep, "N={n}");
    }
    for n in 1..=500u64 {
        let rep = silver_standard_of(n);
        let text = rep.render(RadixGlyph::AsciiDot);
        assert_eq!(DigitString::parse(&text, Base::Silver).unwrap(), rep, "N={n}");
    }

    // Digit-wise sums evaluate additively and normalize to the expansion
    // of the sum.
    for n in (1..=60u64).step_by(7) {
        for m in 1..=60u64 {
            let sum = bergman_of(n).add_digitwise(&canonical_of(m));
            assert_eq!(sum.value(), QuadInt::from_int(Base::Phi, n + m), "{n}+{m}");
            let normalized = goldbase::normalize(&sum, Scheme::Bergman).unwrap();
            assert_eq!(normalized, bergman_of(n + m), "{n}+{m}");
        }
    }

    // Type-code succession and the forbidden pattern, on a direct scan.
    let codes = scan::map_range(1, RECURSION_MAX, type_code);
    assert!(
        codes.windows(2).all(|w| w[0] != TypeCode::A || w[1] == TypeCode::B),
        "type A must be followed by type B"
    );
    let forbidden = scan::map_range(1, RECURSION_MAX, |n| {
        let b = bergman_of(n);
        b.digit(1) == 1 && b.digit(0) == 0 && b.digit(-1) == 1
    });
    assert!(forbidden.iter().all(|&f| !f), "10·1 must never occur");

    // Exact golden-ratio floors against an arbitrary-precision oracle.
    use goldbase::beatty::{floor_mul, AlphaKind};
    use num_bigint::BigInt;
    let bad = scan::map_range(1, FULL_SCAN_MAX, |n| {
        let big = BigInt::from(n);
        let oracle = u64::try_from((&big + (5u32 * &big * &big).sqrt()) / 2).unwrap();
        (floor_mul(AlphaKind::Phi, n) != oracle).then_some(n)
    })
    .into_iter()
    .flatten()
    .next();
    assert_eq!(bad, None, "⌊nφ⌋ disagrees with the big-integer oracle");

    announce(
        11,
        t0,
        None,
        "ring identities, round trips, additivity, type succession, floor oracle",
    );
}
