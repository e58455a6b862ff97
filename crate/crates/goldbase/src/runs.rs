//! Vertical analysis of expansion tables: reading digit columns, maximal
//! run extraction, the run-length law for canonical columns, the
//! orthogonality of expansions around Lucas numbers, and the exploratory
//! chain report linking runs across adjacent columns.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::digits::DigitString;
use crate::quad::Base;
use crate::representation::{canonical_of, expansion_of, Scheme};
use crate::scan;
use crate::silver::silver_expansion_of;
use crate::structure::lucas;

/// The digit at one position for every `N` in `1..=n_max`, with implied
/// zeros outside each expansion's support.
pub fn digit_column(i: i32, n_max: u64, scheme: Scheme, base: Base) -> Vec<u8> {
    scan::map_range(1, n_max, |n| match base {
        Base::Phi => expansion_of(n, scheme).digit(i),
        Base::Silver => silver_expansion_of(n, scheme).digit(i),
    })
}

/// Several columns of the same table, sharing one expansion pass per row.
/// Returns the columns in the order requested.
pub fn digit_columns(columns: &[i32], n_max: u64, scheme: Scheme, base: Base) -> Vec<Vec<u8>> {
    let rows: Vec<Vec<u8>> = scan::map_range(1, n_max, |n| {
        let rep = match base {
            Base::Phi => expansion_of(n, scheme),
            Base::Silver => silver_expansion_of(n, scheme),
        };
        columns.iter().map(|&i| rep.digit(i)).collect()
    });
    let mut out: Vec<Vec<u8>> = (0..columns.len())
        .map(|_| Vec::with_capacity(rows.len()))
        .collect();
    for row in &rows {
        for (k, &d) in row.iter().enumerate() {
            out[k].push(d);
        }
    }
    out
}

/// Maximal runs of `symbol` in `seq`, as `(start, length)` pairs with
/// 1-based starts (so a start is directly a row number `N`).
pub fn extract_runs(seq: &[u8], symbol: u8) -> Vec<(u64, u64)> {
    let mut out: Vec<(u64, u64)> = Vec::new();
    let mut open = false;
    for (k, &d) in seq.iter().enumerate() {
        if d == symbol {
            if open {
                out.last_mut().unwrap().1 += 1;
            } else {
                out.push((k as u64 + 1, 1));
                open = true;
            }
        } else {
            open = false;
        }
    }
    out
}

/// Verdict on the run-length law for one canonical base-φ column:
/// every complete run of 1's in column `i` has length `L_{i−1}` when
/// `i ≥ 1` and `L_{−i}` when `i ≤ 0`, except that the very first run of
/// column 0 (starting at `N = 1`) has length 1.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub column: i32,
    pub n_max: u64,
    pub runs: Vec<(u64, u64)>,
    pub predicted_length: u64,
    pub complete_flags: Vec<bool>,
    pub verdict: bool,
}

impl RunReport {
    /// Predicted length of the run at index `k`, honoring the column-0
    /// first-run exception.
    pub fn predicted_for(&self, k: usize) -> u64 {
        if self.column == 0 && self.runs[k].0 == 1 {
            1
        } else {
            self.predicted_length
        }
    }

    /// Whether the run at index `k` upholds the law. Incomplete runs
    /// pass vacuously; they are cut off by the scan boundary, not by the
    /// table.
    pub fn run_passes(&self, k: usize) -> bool {
        !self.complete_flags[k] || self.runs[k].1 == self.predicted_for(k)
    }

    /// CSV rendering, one row per run.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("column,startN,length,complete,predicted,pass\n");
        for (k, &(start, len)) in self.runs.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                self.column,
                start,
                len,
                self.complete_flags[k],
                self.predicted_for(k),
                self.run_passes(k)
            ));
        }
        out
    }
}

/// Predicted run length for canonical column `i`.
pub fn predicted_run_length(i: i32) -> u64 {
    if i >= 1 {
        lucas((i - 1) as u32)
    } else {
        lucas((-i) as u32)
    }
}

fn report_from_column(i: i32, n_max: u64, column: &[u8]) -> RunReport {
    let runs = extract_runs(column, 1);
    let complete_flags: Vec<bool> = runs
        .iter()
        .map(|&(start, len)| start + len - 1 < n_max)
        .collect();
    let mut report = RunReport {
        column: i,
        n_max,
        runs,
        predicted_length: predicted_run_length(i),
        complete_flags,
        verdict: true,
    };
    report.verdict = (0..report.runs.len()).all(|k| report.run_passes(k));
    report
}

/// Scans canonical base-φ column `i` for `N ≤ n_max` and checks the
/// run-length law.
pub fn verify_run_theorem(i: i32, n_max: u64) -> RunReport {
    let column = digit_column(i, n_max, Scheme::Canonical, Base::Phi);
    report_from_column(i, n_max, &column)
}

/// [`verify_run_theorem`] over many columns, sharing a single expansion
/// pass.
pub fn run_reports(columns: &[i32], n_max: u64) -> Vec<RunReport> {
    digit_columns(columns, n_max, Scheme::Canonical, Base::Phi)
        .iter()
        .zip(columns)
        .map(|(column, &i)| report_from_column(i, n_max, column))
        .collect()
}

/// The set of complete run lengths of 1's observed across the given
/// Bergman base-φ columns — the contrast to the canonical law, where a
/// single length per column is the rule.
pub fn bergman_run_lengths(columns: &[i32], n_max: u64) -> BTreeSet<u64> {
    digit_columns(columns, n_max, Scheme::Bergman, Base::Phi)
        .iter()
        .flat_map(|column| {
            extract_runs(column, 1)
                .into_iter()
                .filter(|&(start, len)| start + len - 1 < n_max)
                .map(|(_, len)| len)
        })
        .collect()
}

/// Orthogonality of canonical expansions at Lucas boundaries; returns
/// the two verdicts `(odd_even, even_odd)`:
///
/// * `odd_even`: the 1-positions shared by `γ(L_{2n})` and `γ(L_{2n}+1)`
///   are exactly `{0, −2n}`;
/// * `even_odd`: `γ(L_{2n+1})` and `γ(L_{2n+1}+1)` share no 1-position
///   in `[−2n−2, 2n+2]`.
pub fn ortho_check(n: u32) -> (bool, bool) {
    let two_n = 2 * n as i32;
    let even = canonical_of(lucas(2 * n));
    let even_next = canonical_of(lucas(2 * n) + 1);
    let shared: BTreeSet<i32> = even
        .exponents()
        .filter(|&i| even_next.digit(i) == 1)
        .collect();
    let odd_even = shared == BTreeSet::from([0, -two_n]);

    let odd = canonical_of(lucas(2 * n + 1));
    let odd_next = canonical_of(lucas(2 * n + 1) + 1);
    let even_odd = (-(two_n + 2)..=two_n + 2)
        .all(|i| !(odd.digit(i) == 1 && odd_next.digit(i) == 1));
    (odd_even, even_odd)
}

/// Which side of the radix point a chain lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainSide {
    Left,
    Right,
}

/// One run participating in a chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChainLink {
    pub column: i32,
    pub start: u64,
    pub len: u64,
}

/// A chain of runs in adjacent columns of the canonical table whose row
/// intervals are contiguous. Left chains climb from column 1 away from
/// the radix point, each link starting on the row after the previous one
/// ended. Right chains fan out from an anchor run in column 0 ending at
/// row `B`: the link in column `−j` starts at row `B + 1` when `j` is
/// odd (reported with negative sign — the run grows away from the
/// anchor) and ends at row `B` when `j` is even (positive sign).
/// `truncated` marks chains cut short by the scan boundary or the link
/// cap rather than by the table itself.
#[derive(Clone, Debug, Serialize)]
pub struct Chain {
    pub side: ChainSide,
    pub links: Vec<ChainLink>,
    pub signed_lengths: Vec<i64>,
    pub truncated: bool,
}

struct ColumnRuns {
    by_start: BTreeMap<u64, (u64, u64, bool)>,
    by_end: BTreeMap<u64, (u64, u64, bool)>,
}

impl ColumnRuns {
    fn from_column(column: &[u8], n_max: u64) -> ColumnRuns {
        let mut by_start = BTreeMap::new();
        let mut by_end = BTreeMap::new();
        for (start, len) in extract_runs(column, 1) {
            let end = start + len - 1;
            let complete = end < n_max;
            by_start.insert(start, (start, len, complete));
            by_end.insert(end, (start, len, complete));
        }
        ColumnRuns { by_start, by_end }
    }
}

/// Builds the chain report for the canonical base-φ table with rows
/// `1..=n_max`. Only chains of at least two links are reported.
pub fn chain_report(n_max: u64, max_links: usize) -> Vec<Chain> {
    let table: Vec<DigitString> =
        scan::map_range(1, n_max, |n| expansion_of(n, Scheme::Canonical));
    let lo_col = table.iter().map(|rep| rep.r_index()).min().unwrap_or(0);
    let hi_col = table.iter().map(|rep| rep.l_index()).max().unwrap_or(0);
    let runs_by_col: BTreeMap<i32, ColumnRuns> = (lo_col..=hi_col)
        .map(|i| {
            let column: Vec<u8> = table.iter().map(|rep| rep.digit(i)).collect();
            (i, ColumnRuns::from_column(&column, n_max))
        })
        .collect();
    let runs_at = |i: i32| runs_by_col.get(&i);

    let mut chains = Vec::new();

    // Left chains: seeded by runs with no predecessor ending on the row
    // just above them one column closer to the radix point.
    for i in 1..=hi_col {
        let Some(col) = runs_at(i) else { continue };
        for &(start, len, complete) in col.by_start.values() {
            let has_predecessor = start > 1
                && runs_at(i - 1).is_some_and(|prev| prev.by_end.contains_key(&(start - 1)));
            if i > 1 && has_predecessor {
                continue;
            }
            if !complete {
                continue;
            }
            let mut links = vec![ChainLink { column: i, start, len }];
            let mut truncated = false;
            let mut cursor = (start, len);
            let mut j = i;
            loop {
                if links.len() >= max_links {
                    truncated = true;
                    break;
                }
                let next_start = cursor.0 + cursor.1;
                let Some(&(s, l, c)) =
                    runs_at(j + 1).and_then(|col| col.by_start.get(&next_start))
                else {
                    break;
                };
                if !c {
                    truncated = true;
                    break;
                }
                links.push(ChainLink { column: j + 1, start: s, len: l });
                cursor = (s, l);
                j += 1;
            }
            if links.len() >= 2 {
                let signed_lengths = links.iter().map(|l| l.len as i64).collect();
                chains.push(Chain { side: ChainSide::Left, links, signed_lengths, truncated });
            }
        }
    }

    // Right chains: fans anchored at complete runs in column 0.
    if let Some(col0) = runs_at(0) {
        for &(start, len, complete) in col0.by_start.values() {
            if !complete {
                continue;
            }
            let anchor_end = start + len - 1;
            let mut links = vec![ChainLink { column: 0, start, len }];
            let mut signed_lengths: Vec<i64> = vec![len as i64];
            let mut truncated = false;
            let mut j = 1;
            loop {
                if links.len() >= max_links {
                    truncated = true;
                    break;
                }
                let found = runs_at(-j as i32).and_then(|col| {
                    if j % 2 == 1 {
                        col.by_start.get(&(anchor_end + 1))
                    } else {
                        col.by_end.get(&anchor_end)
                    }
                });
                let Some(&(s, l, c)) = found else { break };
                if !c {
                    truncated = true;
                    break;
                }
                links.push(ChainLink { column: -j as i32, start: s, len: l });
                signed_lengths.push(if j % 2 == 1 { -(l as i64) } else { l as i64 });
                j += 1;
            }
            if links.len() >= 2 {
                chains.push(Chain { side: ChainSide::Right, links, signed_lengths, truncated });
            }
        }
    }

    chains
}
