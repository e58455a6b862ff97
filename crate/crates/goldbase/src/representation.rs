//! Base-φ representations of the natural numbers.
//!
//! Every `N ≥ 1` has exactly one *Bergman* representation: a digit string
//! over `{0, 1}` with no two adjacent 1s whose value is `N`. The
//! *canonical* representation relaxes the adjacency ban in one spot — the
//! digit pair at exponents `(1, 0)` may be `11`, and must be whenever some
//! admissible string for `N` realizes it. The two coincide unless `N` is
//! of type [`TypeCode::B`], in which case the canonical form is obtained
//! from the Bergman form of `N − 1` by turning its unit digit into a 1.
//!
//! Digits are classified by a four-letter type code read off the Bergman
//! digits `d₁ d₀ · d₋₁`, which drives the canonical construction and most
//! of the structure theory downstream.

use std::cmp::Ordering;
use std::error::Error;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::digits::DigitString;
use crate::quad::{phi_pow, Base, QuadInt};

/// Which admissibility discipline a base-φ string follows.
///
/// For the silver system the `Bergman` variant doubles as the *standard*
/// expansion (the greedy one); `Canonical` is the variant with the
/// mandatory exceptional digit pair at exponents `(1, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    Bergman,
    Canonical,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scheme::Bergman => write!(f, "bergman"),
            Scheme::Canonical => write!(f, "canonical"),
        }
    }
}

/// Classification of `N` by the low-order Bergman digits `d₁ d₀ · d₋₁`.
///
/// * `A`: `d₁d₀ = 10`
/// * `B`: `d₁d₀ = 00` and `d₋₁ = 0`
/// * `C`: `d₀ = 1`
/// * `D`: `d₁d₀ = 00` and `d₋₁ = 1`
///
/// The four cases are exhaustive and mutually exclusive because an
/// admissible Bergman string never has `d₁d₀ = 11`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeCode {
    A,
    B,
    C,
    D,
}

impl fmt::Display for TypeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeCode::A => write!(f, "A"),
            TypeCode::B => write!(f, "B"),
            TypeCode::C => write!(f, "C"),
            TypeCode::D => write!(f, "D"),
        }
    }
}

/// The Bergman (base-φ, no adjacent 1s) representation of `N ≥ 1`.
///
/// Greedy construction: repeatedly subtract the largest power `φⁱ` not
/// exceeding the remainder. After placing a 1 at exponent `i` the
/// remainder is below `φ^{i-1}`, so the next 1 lands at exponent `≤ i−2`
/// and the adjacency ban holds by construction. All comparisons are exact
/// sign tests in `Z[φ]`.
pub fn bergman_of(n: u64) -> DigitString {
    assert!(n >= 1, "bergman_of is defined for N ≥ 1, got {n}");
    bergman_of_value(&QuadInt::from_int(Base::Phi, n))
}

/// Greedy Bergman expansion of a non-negative rational-integer value.
///
/// Shared by [`bergman_of`] and the canonical adjustment inside
/// [`normalize`], which needs the expansion of `value − 1`.
fn bergman_of_value(v: &QuadInt) -> DigitString {
    debug_assert_eq!(v.base(), Base::Phi);
    debug_assert!(v.is_rational() && v.signum() >= 0, "not a natural number: {v}");
    let mut out = DigitString::new(Base::Phi);
    if v.is_zero() {
        return out;
    }
    let phi = phi_pow(1);
    let phi_inv = phi_pow(-1);
    // Largest exponent: grow pow = φⁱ while φ^{i+1} still fits below v.
    let mut exp = 0i32;
    let mut pow = QuadInt::one(Base::Phi);
    loop {
        let next = pow.clone() * phi.clone();
        if next.cmp_exact(v) == Ordering::Greater {
            break;
        }
        pow = next;
        exp += 1;
    }
    let top = exp;
    let mut rem = v.clone();
    while !rem.is_zero() {
        if pow.cmp_exact(&rem) != Ordering::Greater {
            rem -= pow.clone();
            out.set_digit(exp, 1);
        }
        exp -= 1;
        pow = pow * phi_inv.clone();
        debug_assert!(exp >= -top - 64, "greedy expansion failed to terminate");
    }
    out
}

/// The canonical representation of `N ≥ 1`.
///
/// Equal to the Bergman representation unless `N` is of type `B`; in that
/// case it is the Bergman representation of `N − 1` (necessarily of type
/// `A`, so with `d₁d₀ = 10`) with the unit digit set to 1, producing the
/// mandatory `11` pair at exponents `(1, 0)`.
pub fn canonical_of(n: u64) -> DigitString {
    assert!(n >= 1, "canonical_of is defined for N ≥ 1, got {n}");
    let beta = bergman_of(n);
    if type_of_bergman(&beta) != TypeCode::B {
        return beta;
    }
    let mut gamma = bergman_of(n - 1);
    debug_assert_eq!(
        type_of_bergman(&gamma),
        TypeCode::A,
        "type-B N must be preceded by a type-A number"
    );
    debug_assert_eq!(gamma.digit(0), 0);
    gamma.set_digit(0, 1);
    debug_assert_eq!(gamma.value(), QuadInt::from_int(Base::Phi, n));
    gamma
}

/// Builds the representation of `N` under the given scheme.
pub fn expansion_of(n: u64, scheme: Scheme) -> DigitString {
    match scheme {
        Scheme::Bergman => bergman_of(n),
        Scheme::Canonical => canonical_of(n),
    }
}

/// Type code of a Bergman string (see [`TypeCode`]).
///
/// The input must be an admissible Bergman string; `d₁d₀ = 11` is
/// unreachable there and panics if presented.
pub fn type_of_bergman(beta: &DigitString) -> TypeCode {
    match (beta.digit(1), beta.digit(0), beta.digit(-1)) {
        (1, 0, _) => TypeCode::A,
        (0, 1, _) => TypeCode::C,
        (0, 0, 0) => TypeCode::B,
        (0, 0, _) => TypeCode::D,
        (d1, d0, _) => panic!("not an admissible Bergman string: d1 d0 = {d1}{d0}"),
    }
}

/// Type code of `N ≥ 1`, read off its Bergman representation.
pub fn type_code(n: u64) -> TypeCode {
    type_of_bergman(&bergman_of(n))
}

/// True iff the canonical and Bergman representations of `N` differ.
///
/// Computed by direct comparison; the equivalence with `type_code(N) = B`
/// is a theorem checked by the verification suites, not assumed here.
pub fn gamma_ne_beta(n: u64) -> bool {
    canonical_of(n) != bergman_of(n)
}

/// Whether `rep` is an admissible string of the given scheme.
///
/// Digits must lie in `{0, 1}` and no two adjacent exponents may both
/// carry a 1 — except that the canonical scheme permits (without
/// requiring) the single pair at exponents `(1, 0)`.
pub fn is_admissible(rep: &DigitString, scheme: Scheme) -> bool {
    if rep.base() != Base::Phi {
        return false;
    }
    for (i, d) in rep.iter() {
        if d > 1 {
            return false;
        }
        if rep.digit(i + 1) == 1 {
            let exempt = scheme == Scheme::Canonical && i == 0;
            if !exempt {
                return false;
            }
        }
    }
    true
}

/// One rewrite applied by the normalizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RewriteRule {
    /// `2·φⁱ = φ^{i+1} + φ^{i-2}`: digit `≥ 2` at `i` loses 2, neighbors
    /// at `i+1` and `i-2` each gain 1.
    Carry,
    /// Golden mean shift `011 → 100`: the pair of 1s at `(i+1, i)` is
    /// cleared and `i+2` gains 1 (`φ^{i+2} = φ^{i+1} + φⁱ`).
    Shift,
    /// Final canonical adjustment: the whole string is replaced by the
    /// canonical form (Bergman form of `N − 1` with `d₀` set to 1).
    Canonical,
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteRule::Carry => write!(f, "carry"),
            RewriteRule::Shift => write!(f, "shift"),
            RewriteRule::Canonical => write!(f, "canonical"),
        }
    }
}

/// A single step of a normalization trace: which rule fired, at which
/// exponent, and the full digit string after the rewrite.
#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    pub rule: RewriteRule,
    pub exponent: i32,
    pub after: DigitString,
}

/// A complete normalization run: the input, every intermediate string,
/// and the admissible result. Each step preserves the exact value; the
/// verification suites re-evaluate every `after` string to confirm.
#[derive(Clone, Debug, Serialize)]
pub struct NormalizeTrace {
    pub input: DigitString,
    pub steps: Vec<TraceStep>,
    pub result: DigitString,
}

/// Why a string could not be normalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalizeError {
    /// Normalization is defined on base-φ strings only.
    WrongBase(Base),
    /// The string's value is not a positive natural number (it is
    /// irrational, zero, or negative).
    NotANatural(String),
    /// The rewrite loop exceeded its step budget — this indicates a bug,
    /// since the rewrite system terminates on every valid input.
    StepLimitExceeded { steps: u64, limit: u64 },
}

impl fmt::Display for NormalizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalizeError::WrongBase(b) => {
                write!(f, "normalization works on base-phi strings, got base {b}")
            }
            NormalizeError::NotANatural(v) => {
                write!(f, "string value {v} is not a positive natural number")
            }
            NormalizeError::StepLimitExceeded { steps, limit } => {
                write!(f, "normalization exceeded {limit} rewrite steps (took {steps})")
            }
        }
    }
}

impl Error for NormalizeError {}

/// Rewrites an arbitrary base-φ digit string whose value is a positive
/// natural number into the unique admissible form of the requested
/// scheme, recording every step.
///
/// Strategy: repeatedly fire the *highest-exponent* applicable rule,
/// preferring carries (`2φⁱ = φ^{i+1} + φ^{i-2}`) over golden mean shifts
/// (`011 → 100`) so that shifts only ever see digits in `{0, 1}`. The
/// loop is a terminating rewrite system; a step budget of `10·width²`
/// (recomputed as the window grows) guards against implementation bugs.
/// For the canonical scheme a final adjustment step replaces the Bergman
/// fixed point by the canonical form when the value is of type `B`.
pub fn normalize_with_trace(
    rep: &DigitString,
    scheme: Scheme,
) -> Result<NormalizeTrace, NormalizeError> {
    if rep.base() != Base::Phi {
        return Err(NormalizeError::WrongBase(rep.base()));
    }
    let target = rep.value();
    if !target.is_rational() || target.signum() <= 0 {
        return Err(NormalizeError::NotANatural(target.to_string()));
    }
    let mut cur = rep.clone();
    let mut steps: Vec<TraceStep> = Vec::new();
    let mut count: u64 = 0;
    loop {
        let limit = 10 * u64::from(cur.width()) * u64::from(cur.width());
        if count > limit {
            return Err(NormalizeError::StepLimitExceeded { steps: count, limit });
        }
        if let Some(i) = cur.iter().filter(|&(_, d)| d >= 2).map(|(i, _)| i).max() {
            cur.set_digit(i, cur.digit(i) - 2);
            cur.bump_digit(i + 1, 1);
            cur.bump_digit(i - 2, 1);
            debug_assert_eq!(cur.value(), target, "carry changed the value");
            steps.push(TraceStep { rule: RewriteRule::Carry, exponent: i, after: cur.clone() });
            count += 1;
            continue;
        }
        if let Some(i) = highest_adjacent_pair(&cur) {
            cur.set_digit(i + 1, 0);
            cur.set_digit(i, 0);
            cur.bump_digit(i + 2, 1);
            debug_assert_eq!(cur.value(), target, "shift changed the value");
            steps.push(TraceStep { rule: RewriteRule::Shift, exponent: i, after: cur.clone() });
            count += 1;
            continue;
        }
        break;
    }
    debug_assert!(is_admissible(&cur, Scheme::Bergman));
    if scheme == Scheme::Canonical
        && !cur.is_zero()
        && type_of_bergman(&cur) == TypeCode::B
    {
        let mut gamma = bergman_of_value(&(target.clone() - QuadInt::one(Base::Phi)));
        debug_assert_eq!(type_of_bergman(&gamma), TypeCode::A);
        gamma.set_digit(0, 1);
        debug_assert_eq!(gamma.value(), target, "canonical adjustment changed the value");
        cur = gamma;
        steps.push(TraceStep {
            rule: RewriteRule::Canonical,
            exponent: 0,
            after: cur.clone(),
        });
    }
    debug_assert!(is_admissible(&cur, scheme));
    Ok(NormalizeTrace { input: rep.clone(), steps, result: cur })
}

/// Normalizes a string, discarding the trace.
pub fn normalize(rep: &DigitString, scheme: Scheme) -> Result<DigitString, NormalizeError> {
    normalize_with_trace(rep, scheme).map(|t| t.result)
}

/// The lower exponent `i` of the highest pair `d_{i+1} = d_i = 1`, if any.
fn highest_adjacent_pair(s: &DigitString) -> Option<i32> {
    let exponents: Vec<i32> = s.exponents().collect();
    for &j in exponents.iter().rev() {
        if s.digit(j) == 1 && s.digit(j - 1) == 1 {
            return Some(j - 1);
        }
    }
    None
}

/// Exhaustively enumerates the admissible strings of value `N` whose
/// support lies within exponents `[r_min, l_max]`.
///
/// Depth-first search over digits `{0, 1}` from the top exponent down,
/// pruned by two exact bounds: a partial sum already exceeding `N`, and a
/// partial sum that cannot reach `N` even with every remaining digit set.
/// This is the independent oracle the uniqueness checks are measured
/// against, so it deliberately shares no code with [`bergman_of`].
pub fn brute_force_reps(n: u64, l_max: i32, r_min: i32, scheme: Scheme) -> Vec<DigitString> {
    assert!(l_max >= r_min, "empty exponent window");
    let target = QuadInt::from_int(Base::Phi, n);
    // all_below[k] = Σ φ^j over j = r_min ..= r_min + k: the loosest upper
    // bound on what the exponents ≤ r_min + k can still contribute.
    let mut all_below: Vec<QuadInt> = Vec::with_capacity((l_max - r_min + 1) as usize);
    let mut acc = QuadInt::zero(Base::Phi);
    for j in r_min..=l_max {
        acc += phi_pow(j);
        all_below.push(acc.clone());
    }
    let mut results = Vec::new();
    let mut chosen: Vec<i32> = Vec::new();
    search(
        &SearchCtx { target: &target, all_below: &all_below, r_min, scheme },
        l_max,
        0,
        QuadInt::zero(Base::Phi),
        &mut chosen,
        &mut results,
    );
    results
}

struct SearchCtx<'a> {
    target: &'a QuadInt,
    all_below: &'a [QuadInt],
    r_min: i32,
    scheme: Scheme,
}

fn search(
    ctx: &SearchCtx<'_>,
    i: i32,
    prev_digit: u8,
    partial: QuadInt,
    chosen: &mut Vec<i32>,
    results: &mut Vec<DigitString>,
) {
    match partial.cmp_exact(ctx.target) {
        Ordering::Greater => return,
        Ordering::Equal if i < ctx.r_min => {
            results.push(DigitString::from_ones(Base::Phi, chosen.iter().copied()));
            return;
        }
        _ if i < ctx.r_min => return,
        _ => {}
    }
    let headroom = &ctx.all_below[(i - ctx.r_min) as usize];
    if (partial.clone() + headroom.clone()).cmp_exact(ctx.target) == Ordering::Less {
        return;
    }
    // digit 0
    search(ctx, i - 1, 0, partial.clone(), chosen, results);
    // digit 1, unless blocked by the adjacency ban
    let blocked =
        prev_digit == 1 && !(ctx.scheme == Scheme::Canonical && i == 0);
    if !blocked {
        chosen.push(i);
        search(ctx, i - 1, 1, partial + phi_pow(i), chosen, results);
        chosen.pop();
    }
}
