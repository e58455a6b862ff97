//! Generalized Beatty sequences `V(p,q,r): n ↦ p⌊nα⌋ + qn + r` over the
//! golden and silver irrationals: exact floor evaluation, set matching
//! against observed digit-position sets, and a bounded exact-cover search
//! for unions of such sequences fitting a column of 1-positions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Roots;
use serde::Serialize;

use crate::quad::{Base, QuadInt};

/// The irrational multiplying `n` inside the floor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AlphaKind {
    #[serde(rename = "phi")]
    Phi,
    #[serde(rename = "sigma")]
    Sigma,
    #[serde(rename = "sigma_plus_1")]
    SigmaPlus1,
}

impl fmt::Display for AlphaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            AlphaKind::Phi => "phi",
            AlphaKind::Sigma => "sigma",
            AlphaKind::SigmaPlus1 => "sigma_plus_1",
        };
        f.write_str(name)
    }
}

impl AlphaKind {
    /// `nα − m` as an exact element of the ring that houses `α`.
    fn excess(self, n: u64, m: u64) -> QuadInt {
        let (n_i, m_i) = (n as i128, m as i128);
        match self {
            AlphaKind::Phi => QuadInt::new(Base::Phi, -m_i, n_i),
            AlphaKind::Sigma => QuadInt::new(Base::Silver, n_i - m_i, n_i),
            AlphaKind::SigmaPlus1 => QuadInt::new(Base::Silver, 2 * n_i - m_i, n_i),
        }
    }
}

/// Exact `⌊nα⌋`. An integer-square-root closed form provides the seed
/// (`⌊nφ⌋ = ⌊(n + ⌊√(5n²)⌋)/2⌋`, `⌊nσ⌋ = n + ⌊√(2n²)⌋`), and exact sign
/// tests in the quadratic ring then pin the result as the largest `m`
/// with `nα − m ≥ 0`.
pub fn floor_mul(alpha: AlphaKind, n: u64) -> u64 {
    assert!(n < 1 << 62, "⌊nα⌋ would overflow u64");
    if n == 0 {
        return 0;
    }
    let nn = n as u128;
    let mut m = match alpha {
        AlphaKind::Phi => ((nn + (5 * nn * nn).sqrt()) / 2) as u64,
        AlphaKind::Sigma => n + (2 * nn * nn).sqrt() as u64,
        AlphaKind::SigmaPlus1 => 2 * n + (2 * nn * nn).sqrt() as u64,
    };
    while alpha.excess(n, m).signum() < 0 {
        m -= 1;
    }
    while alpha.excess(n, m + 1).signum() >= 0 {
        m += 1;
    }
    m
}

/// Parameters of one generalized Beatty sequence
/// `V(p,q,r): n ↦ p⌊nα⌋ + qn + r`, indexed from `n = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GbsParams {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub alpha: AlphaKind,
}

impl GbsParams {
    pub fn new(p: i64, q: i64, r: i64, alpha: AlphaKind) -> GbsParams {
        GbsParams { p, q, r, alpha }
    }
}

impl fmt::Display for GbsParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V({},{},{})@{}", self.p, self.q, self.r, self.alpha)
    }
}

/// The `n`-th term `p⌊nα⌋ + qn + r`, exactly.
pub fn gbs_term(params: GbsParams, n: u64) -> i64 {
    assert!(n >= 1, "generalized Beatty sequences are indexed from 1");
    let f = floor_mul(params.alpha, n) as i128;
    let v = params.p as i128 * f + params.q as i128 * n as i128 + params.r as i128;
    i64::try_from(v).expect("GBS term overflows i64")
}

/// Whether the mean slope `p·α + q` is positive (exact sign test). A
/// positive mean slope sends the sequence to infinity, which is what
/// makes enumeration up to a bound finite; the per-step monotonicity of
/// any candidate the fitter emits is checked on its generated terms.
pub fn has_positive_mean_slope(params: GbsParams) -> bool {
    let (p, q) = (params.p as i128, params.q as i128);
    let slope = match params.alpha {
        AlphaKind::Phi => QuadInt::new(Base::Phi, q, p),
        AlphaKind::Sigma => QuadInt::new(Base::Silver, p + q, p),
        AlphaKind::SigmaPlus1 => QuadInt::new(Base::Silver, 2 * p + q, p),
    };
    slope.signum() > 0
}

/// True once `n` is large enough that `V_m > n_max` for every `m ≥ n`,
/// via the exact lower bound `V_n ≥ n(pα+q) + r − max(p,0)`.
fn tail_exceeds(params: GbsParams, n: u64, n_max: u64) -> bool {
    let (p, q) = (params.p as i128, params.q as i128);
    let (rational_slope, irrational_slope, base) = match params.alpha {
        AlphaKind::Phi => (q, p, Base::Phi),
        AlphaKind::Sigma => (p + q, p, Base::Silver),
        AlphaKind::SigmaPlus1 => (2 * p + q, p, Base::Silver),
    };
    let slack = BigInt::from(params.r as i128 - p.max(0) - n_max as i128);
    let n = BigInt::from(n);
    let bound = QuadInt::new(base, &n * rational_slope + slack, &n * irrational_slope);
    bound.signum() > 0
}

/// All terms of the sequence (for `n = 1, 2, …`) that land in
/// `[1, n_max]`, in the order generated. Requires a positive mean slope
/// so that the enumeration terminates.
pub fn gbs_terms_up_to(params: GbsParams, n_max: u64) -> Vec<u64> {
    assert!(
        has_positive_mean_slope(params),
        "{params} does not grow; cannot enumerate its terms"
    );
    (1..stop_index(params, n_max))
        .filter_map(|n| {
            let v = gbs_term(params, n);
            (1..=n_max as i64).contains(&v).then_some(v as u64)
        })
        .collect()
}

/// True iff `positions` equals the union of the listed sequences' terms
/// inside `[1, n_max]`. `positions` must be strictly sorted.
pub fn gbs_prefix_match(positions: &[u64], params_list: &[GbsParams], n_max: u64) -> bool {
    debug_assert!(positions.windows(2).all(|w| w[0] < w[1]));
    let mut union = BTreeSet::new();
    for &params in params_list {
        union.extend(gbs_terms_up_to(params, n_max));
    }
    union.iter().copied().eq(positions.iter().copied())
}

/// Search budgets for [`fit_gbs`]; generous for the desk-scale scans this
/// library runs, and deterministic — the traversal order is fixed, so a
/// budgeted run always returns the same prefix of the full answer.
const FIT_NODE_BUDGET: u64 = 250_000;
const FIT_RESULT_CAP: usize = 60;

/// Memoized `⌊nφ⌋`, grown on demand. Candidate enumeration in the fitter
/// touches the same indices thousands of times; one exact evaluation per
/// index, then plain integer arithmetic.
struct FloorTable {
    values: Vec<u64>,
}

impl FloorTable {
    fn new() -> FloorTable {
        FloorTable { values: vec![0] }
    }

    fn get(&mut self, n: u64) -> u64 {
        while self.values.len() <= n as usize {
            let k = self.values.len() as u64;
            self.values.push(floor_mul(AlphaKind::Phi, k));
        }
        self.values[n as usize]
    }
}

/// Smallest `n` from which every later term exceeds `n_max`, found by
/// exponential then binary search on the exact tail bound (which is
/// monotone in `n`).
fn stop_index(params: GbsParams, n_max: u64) -> u64 {
    let mut hi = 1u64;
    while !tail_exceeds(params, hi, n_max) {
        hi *= 2;
        assert!(hi < 1 << 40, "runaway enumeration for {params}");
    }
    let mut lo = hi / 2;
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        if tail_exceeds(params, mid, n_max) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Finds unions of at most `max_union` generalized Beatty sequences with
/// `α = φ` whose terms inside `[1, n_max]` exactly cover `positions`.
///
/// The search enumerates all `(p, q, r)` in the given ranges with
/// positive mean slope and strictly increasing terms, keeps those whose
/// terms are a subset of `positions` (a necessary condition for exact
/// cover), deduplicates parameter triples that generate identical term
/// sets, and then runs a depth-first exact-cover search driven by the
/// smallest uncovered position. Results come back sorted by union size,
/// then lexicographically. The empty position set is covered by the
/// empty union.
pub fn fit_gbs(
    positions: &[u64],
    n_max: u64,
    p_range: RangeInclusive<i64>,
    q_range: RangeInclusive<i64>,
    r_range: RangeInclusive<i64>,
    max_union: usize,
) -> Vec<Vec<GbsParams>> {
    assert!(
        positions.windows(2).all(|w| w[0] < w[1]),
        "positions must be strictly sorted"
    );
    assert!(
        positions.iter().all(|&p| (1..=n_max).contains(&p)),
        "positions must lie in [1, n_max]"
    );
    if positions.is_empty() {
        return vec![Vec::new()];
    }

    // Rank positions and build a membership table over [1, n_max].
    let rank: BTreeMap<u64, usize> =
        positions.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut is_position = vec![false; n_max as usize + 1];
    for &p in positions {
        is_position[p as usize] = true;
    }

    // Enumerate viable candidate sequences.
    struct Candidate {
        params: GbsParams,
        ranks: Vec<usize>,
    }
    let mut by_terms: BTreeMap<Vec<u64>, GbsParams> = BTreeMap::new();
    let mut floors = FloorTable::new();
    for p in p_range.clone() {
        for q in q_range.clone() {
            for r in r_range.clone() {
                let params = GbsParams::new(p, q, r, AlphaKind::Phi);
                if !has_positive_mean_slope(params) {
                    continue;
                }
                let stop = stop_index(params, n_max);
                let mut terms = Vec::new();
                let mut viable = true;
                for n in 1..stop {
                    let f = floors.get(n) as i128;
                    let v = p as i128 * f + q as i128 * n as i128 + r as i128;
                    if v < 1 || v > n_max as i128 {
                        continue;
                    }
                    let v = v as u64;
                    // Reject as soon as a term escapes the target set or
                    // the kept terms stop increasing.
                    if !is_position[v as usize] || terms.last().is_some_and(|&t| t >= v) {
                        viable = false;
                        break;
                    }
                    terms.push(v);
                }
                if !viable || terms.is_empty() {
                    continue;
                }
                // Identical term sets: keep the lexicographically
                // smallest parameter triple as the representative.
                by_terms.entry(terms).or_insert(params);
            }
        }
    }
    let candidates: Vec<Candidate> = by_terms
        .into_iter()
        .map(|(terms, params)| Candidate {
            params,
            ranks: terms.iter().map(|t| rank[t]).collect(),
        })
        .collect();
    let mut cand_by_rank: Vec<Vec<usize>> = vec![Vec::new(); positions.len()];
    for (ci, cand) in candidates.iter().enumerate() {
        for &rk in &cand.ranks {
            cand_by_rank[rk].push(ci);
        }
    }

    struct Search<'a> {
        candidates: &'a [Candidate],
        cand_by_rank: &'a [Vec<usize>],
        covered: Vec<u32>,
        chosen: Vec<usize>,
        max_union: usize,
        results: BTreeSet<Vec<GbsParams>>,
        nodes_left: u64,
    }

    impl Search<'_> {
        fn run(&mut self) {
            if self.nodes_left == 0 || self.results.len() >= FIT_RESULT_CAP {
                return;
            }
            self.nodes_left -= 1;
            let Some(first) = self.covered.iter().position(|&c| c == 0) else {
                let mut union: Vec<GbsParams> =
                    self.chosen.iter().map(|&ci| self.candidates[ci].params).collect();
                union.sort();
                self.results.insert(union);
                return;
            };
            if self.chosen.len() == self.max_union {
                return;
            }
            for &ci in &self.cand_by_rank[first] {
                if self.chosen.contains(&ci) {
                    continue;
                }
                self.chosen.push(ci);
                for &rk in &self.candidates[ci].ranks {
                    self.covered[rk] += 1;
                }
                self.run();
                for &rk in &self.candidates[ci].ranks {
                    self.covered[rk] -= 1;
                }
                self.chosen.pop();
            }
        }
    }

    let mut search = Search {
        candidates: &candidates,
        cand_by_rank: &cand_by_rank,
        covered: vec![0; positions.len()],
        chosen: Vec::new(),
        max_union,
        results: BTreeSet::new(),
        nodes_left: FIT_NODE_BUDGET,
    };
    search.run();
    let mut out: Vec<Vec<GbsParams>> = search.results.into_iter().collect();
    out.sort_by_key(|u| (u.len(), u.clone()));
    out
}

/// [`fit_gbs`] with the default bounds `p, q ∈ [−6, 6]`, `r ∈ [−12, 12]`,
/// unions of at most 4 sequences.
pub fn fit_gbs_default(positions: &[u64], n_max: u64) -> Vec<Vec<GbsParams>> {
    fit_gbs(positions, n_max, -6..=6, -6..=6, -12..=12, 4)
}
