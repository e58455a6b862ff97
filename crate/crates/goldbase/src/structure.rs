//! Lucas numbers, the interval systems they induce on the naturals, closed
//! forms for the expansions of Lucas-adjacent numbers, expansion-length
//! laws, and a recursive construction of both expansion schemes that is
//! fully independent of the greedy algorithm in [`crate::representation`].
//!
//! The two implementations cross-check each other: the greedy algorithm
//! works one digit at a time from the top, while the recursion here builds
//! an expansion for `N` out of the expansion of a much smaller number by
//! digit-set wrapping (even intervals) or affix surgery (odd intervals).

use std::fmt;

use serde::Serialize;

use crate::digits::DigitString;
use crate::quad::Base;
use crate::representation::Scheme;

/// Largest index whose Lucas number fits in a `u64`.
pub const MAX_LUCAS_INDEX: u32 = 92;

/// The `n`-th Lucas number: `L(0) = 2`, `L(1) = 1`,
/// `L(n) = L(n-1) + L(n-2)`.
///
/// Panics when `n > 92`; `L(93)` overflows a `u64`.
pub fn lucas(n: u32) -> u64 {
    assert!(
        n <= MAX_LUCAS_INDEX,
        "lucas({n}) does not fit in a u64 (max index {MAX_LUCAS_INDEX})"
    );
    if n == 0 {
        return 2;
    }
    let (mut a, mut b) = (2u64, 1u64); // L(0), L(1)
    for _ in 1..n {
        let next = a + b;
        a = b;
        b = next;
    }
    b
}

/// A closed integer interval `[lo, hi]` of positive naturals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lo: u64,
    pub hi: u64,
}

impl Interval {
    pub fn new(lo: u64, hi: u64) -> Interval {
        assert!(lo >= 1, "intervals live on the positive naturals");
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn contains(&self, n: u64) -> bool {
        self.lo <= n && n <= self.hi
    }

    /// Number of integers in the interval.
    pub fn len(&self) -> u64 {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false // `new` rejects lo > hi, so an Interval is never empty
    }

    /// The translate `[lo + x, hi + x]`.
    pub fn shift(&self, x: u64) -> Interval {
        Interval::new(self.lo + x, self.hi + x)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// The `n`-th canonical Lucas interval: `Γ(0) = {1}` and
/// `Γ(n) = [L(n)+1, L(n+1)]` for `n ≥ 1`.
///
/// These tile the naturals: `Γ(0) ∪ … ∪ Γ(m) = [1, L(m+1)]`, and `Γ(n)`
/// is exactly the set of `N` whose canonical expansion has a given width.
pub fn gamma_interval(n: u32) -> Interval {
    if n == 0 {
        Interval::new(1, 1)
    } else {
        Interval::new(lucas(n) + 1, lucas(n + 1))
    }
}

/// The `n`-th Lucas interval (`n ≥ 1`): `Λ(2m) = [L(2m), L(2m+1)]` and
/// `Λ(2m+1) = [L(2m+1)+1, L(2m+2)−1]`.
///
/// These tile `[2, ∞)` and are the constant-width intervals of the
/// Bergman expansion.
pub fn lambda_interval(n: u32) -> Interval {
    assert!(n >= 1, "Lucas intervals are indexed from 1");
    if n % 2 == 0 {
        Interval::new(lucas(n), lucas(n + 1))
    } else {
        Interval::new(lucas(n) + 1, lucas(n + 1) - 1)
    }
}

/// The ordered split of the odd canonical interval `Γ(2n+1)` into the
/// three pieces used by the canonical recursion (`n ≥ 2`):
///
/// ```text
/// I(n) = [L(2n+1)+1,          L(2n+1)+L(2n−2)]
/// J(n) = [L(2n+1)+L(2n−2)+1,  L(2n+1)+L(2n−1)]
/// K(n) = [L(2n+1)+L(2n−1)+1,  L(2n+2)]
/// ```
///
/// They are translates of earlier canonical intervals:
/// `I(n) = Γ(2n−1) + L(2n)`, `J(n) = Γ(2n−2) + L(2n+1)`, and
/// `K(n) = Γ(2n−1) + L(2n+1)`.
pub fn sub_intervals(n: u32) -> (Interval, Interval, Interval) {
    assert!(n >= 2, "the interval split needs n ≥ 2");
    let base = lucas(2 * n + 1);
    let i = Interval::new(base + 1, base + lucas(2 * n - 2));
    let j = Interval::new(base + lucas(2 * n - 2) + 1, base + lucas(2 * n - 1));
    let k = Interval::new(base + lucas(2 * n - 1) + 1, lucas(2 * n + 2));
    debug_assert_eq!(i.hi + 1, j.lo);
    debug_assert_eq!(j.hi + 1, k.lo);
    debug_assert_eq!(
        (i.lo, k.hi),
        (gamma_interval(2 * n + 1).lo, gamma_interval(2 * n + 1).hi),
        "I ∪ J ∪ K must partition Γ(2n+1)"
    );
    (i, j, k)
}

/// The closed-form expansions of the numbers adjacent to the Lucas pair
/// `L(2n)`, `L(2n+1)`, built directly from digit patterns (never by
/// running an expansion algorithm).
#[derive(Clone, Debug)]
pub struct LucasForms {
    /// `β(L(2n)) = 1 0^{2n} · 0^{2n−1} 1` — support `{2n, −2n}`.
    pub beta_even: DigitString,
    /// `γ(L(2n)) = [10]^{n−1} 11 · 0^{2n−1} 1` — the one place where the
    /// two schemes give different widths.
    pub gamma_even: DigitString,
    /// `β(L(2n+1)) = γ(L(2n+1)) = 1 [01]^n · [01]^n`.
    pub odd: DigitString,
    /// `β(L(2n)+1) = γ(L(2n)+1) = 1 0^{2n−1} 1 · 0^{2n−1} 1`.
    pub even_plus_one: DigitString,
    /// `β(L(2n+1)+1) = γ(L(2n+1)+1) = 1 0^{2n+1} · [10]^n 01`.
    pub odd_plus_one: DigitString,
}

/// Constructs all five closed forms for a given `n ≥ 1`.
pub fn lucas_closed_forms(n: u32) -> LucasForms {
    assert!(n >= 1);
    let t = 2 * n as i32;
    let beta_even = DigitString::from_ones(Base::Phi, [t, -t]);
    let gamma_even = DigitString::from_ones(
        Base::Phi,
        (1..=t).step_by(2).chain([0, -t]),
    );
    let odd = DigitString::from_ones(
        Base::Phi,
        (0..=t).step_by(2).chain((-t..=-2).step_by(2)),
    );
    let even_plus_one = DigitString::from_ones(Base::Phi, [t, 0, -t]);
    let odd_plus_one = DigitString::from_ones(
        Base::Phi,
        [t + 1, -t - 2].into_iter().chain((-t + 1..=-1).step_by(2)),
    );
    LucasForms { beta_even, gamma_even, odd, even_plus_one, odd_plus_one }
}

/// The closed form `γ(2·L(2n)) = 1000 [10]^{n−2} 11 · 0^{2n−2} 1001` for
/// `n ≥ 2`, again built purely from the digit pattern.
pub fn double_lucas_gamma(n: u32) -> DigitString {
    assert!(n >= 2);
    let t = 2 * n as i32;
    DigitString::from_ones(
        Base::Phi,
        [t + 1, 1, 0, -t + 1, -t - 2]
            .into_iter()
            .chain((3..=t - 3).step_by(2)),
    )
}

/// Leftmost and rightmost digit positions of the expansion of `N` under
/// the requested scheme, computed from the actual expansion.
pub fn lr_indices(n: u64, scheme: Scheme) -> (i32, i32) {
    let rep = crate::representation::expansion_of(n, scheme);
    (rep.l_index(), rep.r_index())
}

/// The `(L, R)` pair predicted by the constant-width interval laws, or
/// `None` where the laws make no claim.
///
/// For the Bergman scheme, `N ∈ Λ(2n)` forces `(L, R) = (2n, −2n)` and
/// `N ∈ Λ(2n+1)` forces `(2n+1, −(2n+2))`; `N = 1` precedes `Λ(1)`. For
/// the canonical scheme the same laws hold over `Γ(2n)` / `Γ(2n+1)` with
/// `n ≥ 1`, leaving `Γ(0) = {1}` out of scope.
pub fn expected_lr(n: u64, scheme: Scheme) -> Option<(i32, i32)> {
    if n < 2 {
        return None;
    }
    let m = match scheme {
        Scheme::Bergman => locate_lambda(n),
        Scheme::Canonical => locate_gamma(n),
    } as i32;
    if m % 2 == 0 {
        Some((m, -m))
    } else {
        Some((m, -(m + 1)))
    }
}

/// Index `m ≥ 1` with `N ∈ Γ(m)`; needs `N ≥ 2`.
fn locate_gamma(n: u64) -> u32 {
    debug_assert!(n >= 2);
    let mut m = 1;
    while lucas(m + 1) < n {
        m += 1;
    }
    m
}

/// Index `m ≥ 1` with `N ∈ Λ(m)`; needs `N ≥ 2`.
fn locate_lambda(n: u64) -> u32 {
    debug_assert!(n >= 2);
    let mut m = 1;
    while !lambda_interval(m).contains(n) {
        m += 1;
    }
    m
}

/// Bergman expansion of `N` via the recursive interval construction.
/// Always equals [`crate::representation::bergman_of`]; the equality is
/// what the verification suites check.
pub fn recursive_beta(n: u64) -> DigitString {
    recursive_expansion(n, Scheme::Bergman)
}

/// Canonical expansion of `N` via the recursive interval construction.
/// Always equals [`crate::representation::canonical_of`].
pub fn recursive_gamma(n: u64) -> DigitString {
    recursive_expansion(n, Scheme::Canonical)
}

fn recursive_expansion(n: u64, scheme: Scheme) -> DigitString {
    assert!(n >= 1, "expansions are defined for N ≥ 1");
    if n <= 7 {
        return base_case(n, scheme);
    }
    match scheme {
        Scheme::Bergman => {
            let m = locate_lambda(n);
            if m % 2 == 0 {
                // Λ(2j) = [L(2j), L(2j+1)]: wrap β(k) for k = N − L(2j),
                // which may be zero (N = L(2j) itself).
                wrap_in_outer_pair(n - lucas(m), m as i32, scheme)
            } else {
                let j = (m - 1) / 2; // N ≥ 8 puts us in Λ(5) or later, so j ≥ 2
                let k1 = n - lucas(m);
                let (body_n, affix) = if k1 < lucas(2 * j - 2) {
                    (lucas(2 * j - 1) + k1, AffixKind::I)
                } else if k1 <= lucas(2 * j - 1) {
                    // k counted from 0 here: the first body is L(2j−2) itself.
                    (lucas(2 * j - 2) + (k1 - lucas(2 * j - 2)), AffixKind::J)
                } else {
                    (lucas(2 * j - 1) + (k1 - lucas(2 * j - 1)), AffixKind::K)
                };
                affix_surgery(&recursive_expansion(body_n, scheme), affix, j as i32)
            }
        }
        Scheme::Canonical => {
            let m = locate_gamma(n);
            if m % 2 == 0 {
                // Γ(2j) = [L(2j)+1, L(2j+1)]: wrap γ(k) for k = N − L(2j) ≥ 1.
                wrap_in_outer_pair(n - lucas(m), m as i32, scheme)
            } else {
                let j = (m - 1) / 2; // N ≥ 8 puts us in Γ(5) or later, so j ≥ 2
                let k1 = n - lucas(m);
                let (body_n, affix) = if k1 <= lucas(2 * j - 2) {
                    (lucas(2 * j - 1) + k1, AffixKind::I)
                } else if k1 <= lucas(2 * j - 1) {
                    (lucas(2 * j - 2) + (k1 - lucas(2 * j - 2)), AffixKind::J)
                } else {
                    (lucas(2 * j - 1) + (k1 - lucas(2 * j - 1)), AffixKind::K)
                };
                affix_surgery(&recursive_expansion(body_n, scheme), affix, j as i32)
            }
        }
    }
}

/// Direct table of the expansions of `N ≤ 7`, the recursion's floor:
/// the odd-interval construction needs interval index ≥ 5, so everything
/// below `Γ(4) = [8, 11]` is pinned here.
fn base_case(n: u64, scheme: Scheme) -> DigitString {
    let beta: &[i32] = match n {
        1 => &[0],
        2 => &[1, -2],
        3 => &[2, -2],
        4 => &[2, 0, -2],
        5 => &[3, -1, -4],
        6 => &[3, 1, -4],
        7 => &[4, -4],
        _ => unreachable!("base cases stop at 7"),
    };
    let exps: &[i32] = match (scheme, n) {
        (Scheme::Canonical, 3) => &[1, 0, -2],
        (Scheme::Canonical, 7) => &[3, 1, 0, -4],
        _ => beta,
    };
    DigitString::from_ones(Base::Phi, exps.iter().copied())
}

/// Even-interval step shared by both schemes: the expansion of
/// `L(2n) + k` is the expansion of `k` with an extra 1 at each of the
/// positions `2n` and `−2n`. With `k = 0` this degenerates to the
/// two-digit closed form of `L(2n)` itself.
fn wrap_in_outer_pair(k: u64, two_n: i32, scheme: Scheme) -> DigitString {
    let mut out = if k == 0 {
        DigitString::new(Base::Phi)
    } else {
        recursive_expansion(k, scheme)
    };
    assert!(
        out.is_zero() || (out.l_index() <= two_n - 2 && out.r_index() >= -(two_n - 2)),
        "inner expansion must fit strictly inside the new outer digits"
    );
    out.set_digit(two_n, 1);
    out.set_digit(-two_n, 1);
    out
}

/// Which odd-interval replacement to apply. In free-group notation the
/// three rules are
///
/// ```text
/// I:  1000(10)⁻¹  body  (01)⁻¹1001
/// J:  10010(10)⁻¹ body  (01)⁻¹001001
/// K:  1010(10)⁻¹  body  (01)⁻¹0001
/// ```
///
/// where the body is an expansion of width `2n−1 ·· −2n` (I, K) or
/// `2n−2 ·· −(2n−2)` (J).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum AffixKind {
    I,
    J,
    K,
}

impl AffixKind {
    /// (new prefix, new suffix, body L, body R) for interval index n.
    fn layout(self, n: i32) -> (&'static str, &'static str, i32, i32) {
        let t = 2 * n;
        match self {
            AffixKind::I => ("1000", "1001", t - 1, -t),
            AffixKind::J => ("10010", "001001", t - 2, -(t - 2)),
            AffixKind::K => ("1010", "0001", t - 1, -t),
        }
    }
}

/// Literal affix replacement with free-group cancellation: verify the
/// body starts with `10` and ends with `01`, strike those digits, and lay
/// the new prefix/suffix over the vacated positions. Any mismatch is a
/// hard error — the construction guarantees the anchors are present, so a
/// failure here means the construction (or its caller) is wrong.
fn affix_surgery(body: &DigitString, kind: AffixKind, n: i32) -> DigitString {
    let (prefix, suffix, l, r) = kind.layout(n);
    assert_eq!(body.l_index(), l, "body top must sit at {l}");
    assert_eq!(body.r_index(), r, "body bottom must sit at {r}");
    assert_eq!(body.digit(l), 1, "body must start with the digits 10");
    assert_eq!(body.digit(l - 1), 0, "body must start with the digits 10");
    assert_eq!(body.digit(r + 1), 0, "body must end with the digits 01");
    assert_eq!(body.digit(r), 1, "body must end with the digits 01");
    let mut out = body.clone();
    out.set_digit(l, 0);
    out.set_digit(r, 0);
    // The new prefix ends where the cancelled `10` began; the new suffix
    // starts where the cancelled `01` began.
    let pre_top = l - 2 + prefix.len() as i32;
    for (offset, ch) in prefix.chars().enumerate() {
        if ch == '1' {
            out.set_digit(pre_top - offset as i32, 1);
        }
    }
    let suf_top = r + 1;
    for (offset, ch) in suffix.chars().enumerate() {
        if ch == '1' {
            out.set_digit(suf_top - offset as i32, 1);
        }
    }
    out
}
