//! The silver-mean analog: expansions of the naturals in base
//! `σ = 1 + √2` with digits `{0, 1, 2}`, where a digit 2 must be followed
//! by a 0 (the pairs 21 and 22 are inadmissible). The standard expansion
//! bans those pairs outright; the canonical expansion additionally
//! requires the digit pair `c₁c₀ = 21` whenever the number admits it.
//! Pell-Lucas numbers play the role the Lucas numbers play in base φ.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::beatty::{gbs_terms_up_to, AlphaKind, GbsParams};
use crate::digits::DigitString;
use crate::quad::{sigma_pow, Base, QuadInt};
use crate::representation::Scheme;
use crate::scan;
use crate::structure::Interval;

/// Largest index whose Pell-Lucas number fits in a `u64`.
pub const MAX_PELL_LUCAS_INDEX: u32 = 50;

/// Pell-Lucas numbers 2, 2, 6, 14, 34, 82, … with
/// `Q̄_{n+2} = 2·Q̄_{n+1} + Q̄_n`.
pub fn pell_lucas(n: u32) -> u64 {
    assert!(
        n <= MAX_PELL_LUCAS_INDEX,
        "pell_lucas({n}) does not fit in a u64"
    );
    let (mut a, mut b) = (2u64, 2u64);
    if n == 0 {
        return a;
    }
    for _ in 1..n {
        let next = 2 * b + a;
        a = b;
        b = next;
    }
    b
}

/// Hard cap on how far below the radix point the greedy descent may run.
/// Base-σ expansions of naturals are finite, so this is a tripwire for
/// arithmetic bugs, not a working limit.
const MAX_FRACTIONAL_DEPTH: i32 = 512;

/// The standard (greedy) base-σ expansion of `n ≥ 1`.
///
/// Greedy choice keeps the remainder below `σ^{i+1}` at every step, which
/// both caps the digits at 2 and forces a 0 after every 2, so the result
/// is admissible by construction.
pub fn silver_standard_of(n: u64) -> DigitString {
    assert!(n >= 1, "only positive naturals have base-σ expansions");
    let target = QuadInt::from_int(Base::Silver, n);
    let mut top = 0i32;
    while sigma_pow(top + 1).cmp_exact(&target) != Ordering::Greater {
        top += 1;
    }
    let mut rep = DigitString::new(Base::Silver);
    let mut rem = target;
    let mut i = top;
    while !rem.is_zero() {
        assert!(
            i > -MAX_FRACTIONAL_DEPTH,
            "greedy expansion of {n} failed to terminate"
        );
        let pw = sigma_pow(i);
        for d in (1u8..=2).rev() {
            if pw.scale(d).cmp_exact(&rem) != Ordering::Greater {
                rep.set_digit(i, d);
                rem -= pw.scale(d);
                break;
            }
        }
        i -= 1;
    }
    debug_assert!(is_silver_admissible(&rep, Scheme::Bergman));
    rep
}

/// The canonical base-σ expansion of `n ≥ 1`: identical to the standard
/// one except that the digit pair `c₁c₀ = 21` is mandatory whenever `n`
/// admits it, which happens exactly when the standard expansion of
/// `n − 1` ends in `d₁d₀ = 20`; bumping that 0 to 1 adds one and changes
/// nothing else.
pub fn silver_canonical_of(n: u64) -> DigitString {
    assert!(n >= 1, "only positive naturals have base-σ expansions");
    if n > 1 {
        let prev = silver_standard_of(n - 1);
        if prev.digit(1) == 2 && prev.digit(0) == 0 {
            let mut rep = prev;
            rep.set_digit(0, 1);
            debug_assert_eq!(
                rep.value()
                    .cmp_exact(&QuadInt::from_int(Base::Silver, n)),
                Ordering::Equal
            );
            return rep;
        }
    }
    silver_standard_of(n)
}

/// The expansion of `n` under the given scheme; `Scheme::Bergman` selects
/// the standard expansion, mirroring the base-φ pairing of schemes.
pub fn silver_expansion_of(n: u64, scheme: Scheme) -> DigitString {
    match scheme {
        Scheme::Bergman => silver_standard_of(n),
        Scheme::Canonical => silver_canonical_of(n),
    }
}

/// Whether a base-σ digit string is admissible under the given scheme:
/// digits at most 2, and every 2 followed by a 0, except that the
/// canonical scheme tolerates the pair `c₁c₀ = 21`.
pub fn is_silver_admissible(rep: &DigitString, scheme: Scheme) -> bool {
    for (i, d) in rep.iter() {
        if d > 2 {
            return false;
        }
        if d == 2 {
            let below = rep.digit(i - 1);
            let canonical_pair = scheme == Scheme::Canonical && i == 1 && below == 1;
            if below != 0 && !canonical_pair {
                return false;
            }
        }
    }
    true
}

/// Every admissible base-σ digit string supported on `[r_min, l_max]`
/// whose value is exactly `n` — an oracle for uniqueness checks. Exact
/// interval pruning keeps the search tractable.
pub fn silver_brute_force(n: u64, l_max: i32, r_min: i32, scheme: Scheme) -> Vec<DigitString> {
    assert!(r_min <= l_max);
    let target = QuadInt::from_int(Base::Silver, n);
    // tail_max[pos - r_min] = 2·Σ_{j = r_min..=pos} σ^j, the largest value
    // the positions from `pos` down can still contribute.
    let mut tail_max = Vec::with_capacity((l_max - r_min + 1) as usize);
    let mut acc = QuadInt::zero(Base::Silver);
    for pos in r_min..=l_max {
        acc += sigma_pow(pos).scale(2);
        tail_max.push(acc.clone());
    }

    fn dfs(
        pos: i32,
        rem: &QuadInt,
        prev: u8,
        rep: &mut DigitString,
        out: &mut Vec<DigitString>,
        tail_max: &[QuadInt],
        r_min: i32,
        scheme: Scheme,
    ) {
        if pos < r_min {
            if rem.is_zero() {
                out.push(rep.clone());
            }
            return;
        }
        if rem.signum() < 0 {
            return;
        }
        if rem.cmp_exact(&tail_max[(pos - r_min) as usize]) == Ordering::Greater {
            return;
        }
        let max_d = if prev == 2 {
            if scheme == Scheme::Canonical && pos == 0 { 1 } else { 0 }
        } else {
            2
        };
        let pw = sigma_pow(pos);
        for d in 0..=max_d {
            let next = rem.clone() - pw.scale(d);
            if next.signum() < 0 {
                break;
            }
            rep.set_digit(pos, d);
            dfs(pos - 1, &next, d, rep, out, tail_max, r_min, scheme);
            rep.set_digit(pos, 0);
        }
    }

    let mut out = Vec::new();
    let mut rep = DigitString::new(Base::Silver);
    dfs(l_max, &target, 0, &mut rep, &mut out, &tail_max, r_min, scheme);
    out
}

/// Pell-Lucas interval `ΛP_m`, conjecturally the `m`-th interval of
/// constant expansion width for the standard scheme: `ΛP_0 = {1, 2}`,
/// `ΛP_{2n} = [Q̄_{2n}, Q̄_{2n+1}]`, `ΛP_{2n+1} = [Q̄_{2n+1}+1, Q̄_{2n+2}−1]`.
pub fn pl_lambda_interval(m: u32) -> Interval {
    if m == 0 {
        Interval::new(1, 2)
    } else if m % 2 == 0 {
        Interval::new(pell_lucas(m), pell_lucas(m + 1))
    } else {
        Interval::new(pell_lucas(m) + 1, pell_lucas(m + 1) - 1)
    }
}

/// Canonical Pell-Lucas interval `ΓP_m`: `ΓP_0 = {1, 2}` and
/// `ΓP_m = [Q̄_m + 1, Q̄_{m+1}]` for `m ≥ 1`.
pub fn pl_gamma_interval(m: u32) -> Interval {
    if m == 0 {
        Interval::new(1, 2)
    } else {
        Interval::new(pell_lucas(m) + 1, pell_lucas(m + 1))
    }
}

/// The width law shared by both silver interval families: numbers in the
/// `m`-th interval run from exponent `m` down to `−m` when `m` is even
/// and down to `−(m+1)` when `m` is odd.
fn lr_law(m: u32) -> (i32, i32) {
    let m = m as i32;
    if m % 2 == 0 {
        (m, -m)
    } else {
        (m, -(m + 1))
    }
}

/// Index of the interval (ΛP for the standard scheme, ΓP for the
/// canonical one) containing `n`.
pub fn silver_interval_index(n: u64, scheme: Scheme) -> u32 {
    assert!(n >= 1);
    let mut m = 0;
    loop {
        let interval = match scheme {
            Scheme::Bergman => pl_lambda_interval(m),
            Scheme::Canonical => pl_gamma_interval(m),
        };
        if interval.contains(n) {
            return m;
        }
        m += 1;
    }
}

/// Conjectured `(L, R)` exponent extremes of the expansion of `n` under
/// the given scheme, looked up through the interval families.
pub fn silver_expected_lr(n: u64, scheme: Scheme) -> (i32, i32) {
    lr_law(silver_interval_index(n, scheme))
}

/// Verdict on the conjecture that standard and canonical expansions
/// disagree exactly on the generalized Beatty sequence `V(2,2,0)` with
/// `α = σ` — equivalently `(2⌊n(σ+1)⌋)`, since `2⌊nσ⌋ + 2n = 2⌊n(σ+1)⌋`.
#[derive(Clone, Debug, Serialize)]
pub struct SilverMismatchReport {
    pub n_max: u64,
    pub mismatches: Vec<u64>,
    pub expected: Vec<u64>,
    pub spellings: Vec<GbsParams>,
    pub spellings_agree: bool,
    pub pass: bool,
}

pub fn silver_mismatch_scan(n_max: u64) -> SilverMismatchReport {
    let differs = scan::map_range(1, n_max, |n| {
        silver_standard_of(n) != silver_canonical_of(n)
    });
    let mismatches: Vec<u64> = differs
        .iter()
        .enumerate()
        .filter_map(|(k, &d)| d.then_some(k as u64 + 1))
        .collect();
    let spellings = vec![
        GbsParams::new(2, 2, 0, AlphaKind::Sigma),
        GbsParams::new(2, 0, 0, AlphaKind::SigmaPlus1),
    ];
    let expected = gbs_terms_up_to(spellings[0], n_max);
    let spellings_agree = gbs_terms_up_to(spellings[1], n_max) == expected;
    let pass = spellings_agree && mismatches == expected;
    SilverMismatchReport {
        n_max,
        mismatches,
        expected,
        spellings,
        spellings_agree,
        pass,
    }
}

/// One interval of the ΛP/ΓP families checked against the width law.
#[derive(Clone, Debug, Serialize)]
pub struct IntervalCheck {
    pub scheme: Scheme,
    pub index: u32,
    pub interval: Interval,
    pub clipped: bool,
    pub expected: (i32, i32),
    pub pass: bool,
}

/// Verdict on the conjecture that the ΛP/ΓP intervals are exactly the
/// intervals of constant expansion width.
#[derive(Clone, Debug, Serialize)]
pub struct SilverIntervalReport {
    pub n_max: u64,
    pub checks: Vec<IntervalCheck>,
    pub pass: bool,
}

pub fn silver_interval_scan(n_max: u64) -> SilverIntervalReport {
    let mut checks = Vec::new();
    for scheme in [Scheme::Bergman, Scheme::Canonical] {
        let mut m = 0;
        loop {
            let interval = match scheme {
                Scheme::Bergman => pl_lambda_interval(m),
                Scheme::Canonical => pl_gamma_interval(m),
            };
            if interval.lo > n_max {
                break;
            }
            let clipped = interval.hi > n_max;
            let hi = interval.hi.min(n_max);
            let expected = lr_law(m);
            let pass = scan::map_range(interval.lo, hi, |n| {
                let rep = silver_expansion_of(n, scheme);
                (rep.l_index(), rep.r_index()) == expected
            })
            .into_iter()
            .all(|ok| ok);
            checks.push(IntervalCheck {
                scheme,
                index: m,
                interval,
                clipped,
                expected,
                pass,
            });
            m += 1;
        }
    }
    let pass = checks.iter().all(|c| c.pass);
    SilverIntervalReport { n_max, checks, pass }
}

/// A maximal block of nonzero digits in one column of the canonical
/// base-σ table, decomposed into runs: `lengths` lists `(digit, run
/// length)` pairs in row order. `complete` means the block ended before
/// the scan did, so its shape is fully observed.
#[derive(Clone, Debug, Serialize)]
pub struct SilverBlock {
    pub start: u64,
    pub lengths: Vec<(u8, u64)>,
    pub complete: bool,
}

impl SilverBlock {
    /// Pattern notation such as `1^6 2^6`.
    pub fn pattern(&self) -> String {
        let parts: Vec<String> = self
            .lengths
            .iter()
            .map(|(d, l)| format!("{d}^{l}"))
            .collect();
        parts.join(" ")
    }
}

/// Verdict on the silver-mean vertical-run conjecture for one column of
/// the canonical table.
///
/// For columns `i ≥ 1` the claim (asserted) is that every complete block
/// is `1^{Q̄_i} 2^{Q̄_{i−1}}`. For `i = −1` the claim (asserted) is that
/// every complete block is `1^2` or `2^2 1^2`. Columns `i ≤ −2` carry the
/// predicted vocabulary — 1-runs of length `Q̄_{−i}` alone or joined by
/// 2-runs of the same length, order reversed in odd columns — as an
/// observation only (`asserted = false`), and column 0 has no prediction.
#[derive(Clone, Debug, Serialize)]
pub struct SilverRunReport {
    pub column: i32,
    pub n_max: u64,
    pub blocks: Vec<SilverBlock>,
    pub vocabulary: Vec<String>,
    pub expected_vocabulary: Option<Vec<String>>,
    pub asserted: bool,
    pub pass: bool,
}

pub fn silver_run_scan(column: i32, n_max: u64) -> SilverRunReport {
    assert!(n_max >= 1);
    let digits = scan::map_range(1, n_max, |n| silver_canonical_of(n).digit(column));

    let mut blocks: Vec<SilverBlock> = Vec::new();
    let mut current: Option<SilverBlock> = None;
    for (k, &d) in digits.iter().enumerate() {
        let n = k as u64 + 1;
        if d == 0 {
            if let Some(mut b) = current.take() {
                b.complete = true;
                blocks.push(b);
            }
            continue;
        }
        let block = current.get_or_insert_with(|| SilverBlock {
            start: n,
            lengths: Vec::new(),
            complete: false,
        });
        match block.lengths.last_mut() {
            Some((digit, len)) if *digit == d => *len += 1,
            _ => block.lengths.push((d, 1)),
        }
    }
    if let Some(b) = current.take() {
        blocks.push(b); // still open at n_max: shape not fully observed
    }

    let vocabulary: Vec<String> = blocks
        .iter()
        .filter(|b| b.complete)
        .map(SilverBlock::pattern)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let (expected_vocabulary, asserted) = if column >= 1 {
        let i = column as u32;
        let pattern = format!("1^{} 2^{}", pell_lucas(i), pell_lucas(i - 1));
        (Some(vec![pattern]), true)
    } else if column == 0 {
        (None, false)
    } else {
        let q = pell_lucas((-column) as u32);
        let lone = format!("1^{q}");
        let joined = if (-column) % 2 == 0 {
            format!("1^{q} 2^{q}")
        } else {
            format!("2^{q} 1^{q}")
        };
        let mut expected = vec![lone, joined];
        expected.sort();
        (Some(expected), column == -1)
    };

    let pass = if asserted {
        let expected = expected_vocabulary.as_ref().unwrap();
        vocabulary.iter().all(|p| expected.contains(p))
    } else {
        true
    };

    SilverRunReport {
        column,
        n_max,
        blocks,
        vocabulary,
        expected_vocabulary,
        asserted,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digits::RadixGlyph;

    #[test]
    fn pell_lucas_values() {
        let prefix: Vec<u64> = (0..8).map(pell_lucas).collect();
        assert_eq!(prefix, vec![2, 2, 6, 14, 34, 82, 198, 478]);
        for n in 0..=48 {
            assert_eq!(pell_lucas(n + 2), 2 * pell_lucas(n + 1) + pell_lucas(n));
        }
    }

    #[test]
    #[should_panic(expected = "does not fit")]
    fn pell_lucas_overflow_guard() {
        pell_lucas(51);
    }

    #[test]
    fn expansion_table_up_to_18() {
        let standard = [
            "1·0", "2·0", "10·11", "11·11", "20·01", "100·01", "101·01", "102·01", "110·12",
            "111·12", "120·02", "200·02", "201·02", "202·02", "1000·2011", "1001·2011",
            "1010·1011", "1011·1011",
        ];
        let canonical = [
            "1·0", "2·0", "10·11", "11·11", "20·01", "21·01", "101·01", "102·01", "110·12",
            "111·12", "120·02", "121·02", "201·02", "202·02", "1000·2011", "1001·2011",
            "1010·1011", "1011·1011",
        ];
        for (k, (std_want, can_want)) in standard.iter().zip(&canonical).enumerate() {
            let n = k as u64 + 1;
            assert_eq!(
                silver_standard_of(n).render(RadixGlyph::MiddleDot),
                *std_want,
                "standard N={n}"
            );
            assert_eq!(
                silver_canonical_of(n).render(RadixGlyph::MiddleDot),
                *can_want,
                "canonical N={n}"
            );
        }
    }

    #[test]
    fn expansions_round_trip_and_stay_admissible() {
        for n in 1..=500 {
            for scheme in [Scheme::Bergman, Scheme::Canonical] {
                let rep = silver_expansion_of(n, scheme);
                assert!(is_silver_admissible(&rep, scheme), "N={n} {scheme:?}");
                assert_eq!(
                    rep.value()
                        .cmp_exact(&QuadInt::from_int(Base::Silver, n)),
                    Ordering::Equal,
                    "N={n} {scheme:?}"
                );
            }
        }
    }

    #[test]
    fn admissibility_rules() {
        let no21 = DigitString::parse("21·0", Base::Silver).unwrap();
        assert!(!is_silver_admissible(&no21, Scheme::Bergman));
        assert!(is_silver_admissible(&no21, Scheme::Canonical));
        let no22 = DigitString::parse("22·0", Base::Silver).unwrap();
        assert!(!is_silver_admissible(&no22, Scheme::Bergman));
        assert!(!is_silver_admissible(&no22, Scheme::Canonical));
        let high21 = DigitString::parse("210·0", Base::Silver).unwrap();
        assert!(!is_silver_admissible(&high21, Scheme::Canonical));
        let no3 = DigitString::parse("3·0", Base::Silver).unwrap();
        assert!(!is_silver_admissible(&no3, Scheme::Bergman));
        let fine = DigitString::parse("202·02", Base::Silver).unwrap();
        assert!(is_silver_admissible(&fine, Scheme::Bergman));
    }

    #[test]
    fn expansions_are_unique_in_a_window() {
        for n in 1..=60u64 {
            let std_all = silver_brute_force(n, 8, -8, Scheme::Bergman);
            assert_eq!(std_all.len(), 1, "N={n} standard: {std_all:?}");
            assert_eq!(std_all[0], silver_standard_of(n), "N={n} standard");

            // The canonical local rule also admits the pair-free standard
            // string, so the window holds at most one extra string — the
            // 21-pair form — and the canonical expansion takes the pair
            // whenever it exists (mandatory, not optional).
            let can_all = silver_brute_force(n, 8, -8, Scheme::Canonical);
            let pairs: Vec<&DigitString> = can_all
                .iter()
                .filter(|r| r.digit(1) == 2 && r.digit(0) == 1)
                .collect();
            match pairs.as_slice() {
                [] => {
                    assert_eq!(can_all.len(), 1, "N={n}: {can_all:?}");
                    assert_eq!(can_all[0], silver_canonical_of(n), "N={n}");
                }
                [pair] => {
                    assert_eq!(can_all.len(), 2, "N={n}: {can_all:?}");
                    assert_eq!(**pair, silver_canonical_of(n), "N={n}");
                }
                _ => panic!("N={n}: several 21-pair strings: {can_all:?}"),
            }
        }
    }

    #[test]
    fn interval_families_tile_the_naturals() {
        assert_eq!(pl_lambda_interval(0), Interval::new(1, 2));
        assert_eq!(pl_lambda_interval(1), Interval::new(3, 5));
        assert_eq!(pl_lambda_interval(2), Interval::new(6, 14));
        assert_eq!(pl_lambda_interval(3), Interval::new(15, 33));
        assert_eq!(pl_lambda_interval(4), Interval::new(34, 82));
        assert_eq!(pl_gamma_interval(1), Interval::new(3, 6));
        assert_eq!(pl_gamma_interval(3), Interval::new(15, 34));
        for family in [pl_lambda_interval as fn(u32) -> Interval, pl_gamma_interval] {
            let mut next = 1;
            for m in 0..=12 {
                let interval = family(m);
                assert_eq!(interval.lo, next, "gap before interval {m}");
                next = interval.hi + 1;
            }
        }
    }

    #[test]
    fn width_laws_on_small_numbers() {
        assert_eq!(silver_expected_lr(1, Scheme::Bergman), (0, 0));
        assert_eq!(silver_expected_lr(2, Scheme::Canonical), (0, 0));
        assert_eq!(silver_expected_lr(3, Scheme::Bergman), (1, -2));
        assert_eq!(silver_expected_lr(6, Scheme::Bergman), (2, -2));
        assert_eq!(silver_expected_lr(6, Scheme::Canonical), (1, -2));
        assert_eq!(silver_expected_lr(15, Scheme::Bergman), (3, -4));
        for n in 1..=200 {
            for scheme in [Scheme::Bergman, Scheme::Canonical] {
                let rep = silver_expansion_of(n, scheme);
                assert_eq!(
                    (rep.l_index(), rep.r_index()),
                    silver_expected_lr(n, scheme),
                    "N={n} {scheme:?}"
                );
            }
        }
    }

    #[test]
    fn mismatch_scan_agrees_with_the_beatty_spelling() {
        let report = silver_mismatch_scan(40);
        assert!(report.pass);
        assert!(report.spellings_agree);
        assert_eq!(report.mismatches, vec![6, 12, 20, 26, 34, 40]);
    }

    #[test]
    fn interval_scan_passes_and_clips() {
        let report = silver_interval_scan(100);
        assert!(report.pass);
        let last_lambda = report
            .checks
            .iter()
            .rev()
            .find(|c| c.scheme == Scheme::Bergman)
            .unwrap();
        assert!(last_lambda.clipped);
        assert_eq!(last_lambda.interval, Interval::new(83, 197));
    }

    #[test]
    fn run_scan_columns() {
        let col1 = silver_run_scan(1, 30);
        assert!(col1.asserted && col1.pass);
        assert_eq!(col1.blocks[0].start, 3);
        assert_eq!(col1.blocks[0].lengths, vec![(1, 2), (2, 2)]);
        assert_eq!(col1.vocabulary, vec!["1^2 2^2".to_string()]);

        let col_m1 = silver_run_scan(-1, 20);
        assert!(col_m1.asserted && col_m1.pass);
        assert_eq!(
            col_m1.expected_vocabulary,
            Some(vec!["1^2".to_string(), "2^2 1^2".to_string()])
        );
        assert_eq!(col_m1.blocks[0].lengths, vec![(1, 2)]);

        let col0 = silver_run_scan(0, 6);
        assert!(!col0.asserted && col0.pass);
        assert_eq!(col0.expected_vocabulary, None);
        assert_eq!(col0.blocks[0].start, 1);
        assert_eq!(col0.blocks[0].lengths, vec![(1, 1), (2, 1)]);
        assert!(!col0.blocks.last().unwrap().complete);

        let col_m2 = silver_run_scan(-2, 100);
        assert!(!col_m2.asserted && col_m2.pass);
        let expected = col_m2.expected_vocabulary.unwrap();
        assert_eq!(expected, vec!["1^6".to_string(), "1^6 2^6".to_string()]);
        assert!(col_m2.vocabulary.iter().all(|p| expected.contains(p)));
        assert_eq!(col_m2.blocks[0].start, 3);
        assert_eq!(col_m2.blocks[0].lengths, vec![(1, 6), (2, 6)]);
    }
}
