//! Exact arithmetic in the quadratic rings `Z[φ]` and `Z[√2]`.
//!
//! Everything downstream — digit-string evaluation, greedy expansions,
//! rewrite-step value checks, Beatty floors — reduces to ring arithmetic
//! and *exact* sign tests on numbers of the form `a + b·θ`, where `θ` is
//! either the golden mean `φ = (1+√5)/2` (so `θ² = θ + 1`) or `√2`
//! (so `θ² = 2`). Coordinates are arbitrary-precision integers, so no
//! floating point ever enters a comparison.
//!
//! The silver mean `σ = 1 + √2` is a unit of `Z[√2]` (its norm is `−1`),
//! so all integer powers of `σ`, positive and negative, live in the ring;
//! [`sigma_pow`] walks the recurrence `σ^{n+1} = 2σⁿ + σ^{n-1}` in both
//! directions. Likewise `φ` is a unit of `Z[φ]` and [`phi_pow`] produces
//! `φⁿ = F_{n-1} + F_n·φ` with Fibonacci numbers extended to negative
//! indices.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Which quadratic ring a value lives in.
///
/// `Phi` selects `Z[φ]` with `θ = φ`, `Silver` selects `Z[√2]` with
/// `θ = √2`. Digit strings tagged `Silver` are nevertheless evaluated
/// against powers of `σ = 1 + √2`; the tag names the *ring*, and `σ` is
/// a unit of that ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Base {
    /// `Z[φ]`, `θ = φ = (1+√5)/2`, `θ² = θ + 1`.
    Phi,
    /// `Z[√2]`, `θ = √2`, `θ² = 2`.
    Silver,
}

impl Base {
    /// Squared generator expressed on the `(1, θ)` basis: `θ² = c0 + c1·θ`.
    fn theta_squared(self) -> (i8, i8) {
        match self {
            Base::Phi => (1, 1),
            Base::Silver => (2, 0),
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Phi => write!(f, "phi"),
            Base::Silver => write!(f, "silver"),
        }
    }
}

/// An exact element `a + b·θ` of `Z[φ]` or `Z[√2]`.
///
/// Mixed-base arithmetic is a programming error and panics; the two rings
/// share no values worth conflating besides the rational integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    base: Base,
    a: BigInt,
    b: BigInt,
}

impl QuadInt {
    /// Builds `a + b·θ` in the given ring.
    pub fn new(base: Base, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt { base, a: a.into(), b: b.into() }
    }

    /// Embeds a rational integer.
    pub fn from_int(base: Base, n: impl Into<BigInt>) -> Self {
        QuadInt::new(base, n, 0)
    }

    /// The additive identity of the ring.
    pub fn zero(base: Base) -> Self {
        QuadInt::from_int(base, 0)
    }

    /// The multiplicative identity of the ring.
    pub fn one(base: Base) -> Self {
        QuadInt::from_int(base, 1)
    }

    /// Rational coordinate `a` of `a + b·θ`.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// Irrational coordinate `b` of `a + b·θ`.
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// The ring this value lives in.
    pub fn base(&self) -> Base {
        self.base
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True iff the value is a rational integer (irrational coordinate 0).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign of the real number `a + b·θ`: `-1`, `0` or `1`.
    ///
    /// `a + b·√d` is compared against zero by integer case analysis: when
    /// the coordinates disagree in sign the comparison reduces to
    /// `a² ⋛ d·b²`, which never leaves `Z`. For the `Phi` base the value
    /// is first rewritten as `((2a+b) + b·√5)/2`.
    pub fn signum(&self) -> i8 {
        let (u, v, d) = match self.base {
            Base::Phi => (2 * &self.a + &self.b, self.b.clone(), 5u32),
            Base::Silver => (self.a.clone(), self.b.clone(), 2u32),
        };
        sign_of_u_plus_v_sqrt_d(&u, &v, d)
    }

    /// Exact comparison with another value of the same ring.
    ///
    /// Panics on a base mismatch, like all mixed-base operations.
    pub fn cmp_exact(&self, other: &QuadInt) -> Ordering {
        assert_eq!(self.base, other.base, "cannot compare across rings");
        match (self.clone() - other.clone()).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    /// Multiplies by a rational integer.
    pub fn scale(&self, k: impl Into<BigInt>) -> QuadInt {
        let k = k.into();
        QuadInt::new(self.base, &self.a * &k, &self.b * &k)
    }
}

/// Sign of `u + v·√d` for non-square `d > 0`, by pure integer reasoning.
fn sign_of_u_plus_v_sqrt_d(u: &BigInt, v: &BigInt, d: u32) -> i8 {
    let d = BigInt::from(d);
    match (u.sign(), v.sign()) {
        (num_bigint::Sign::NoSign, num_bigint::Sign::NoSign) => 0,
        // Same sign (or one side zero): the nonzero side decides.
        (num_bigint::Sign::Plus | num_bigint::Sign::NoSign, num_bigint::Sign::Plus)
        | (num_bigint::Sign::Plus, num_bigint::Sign::NoSign) => 1,
        (num_bigint::Sign::Minus | num_bigint::Sign::NoSign, num_bigint::Sign::Minus)
        | (num_bigint::Sign::Minus, num_bigint::Sign::NoSign) => -1,
        // u > 0 > v: sign of u² − d·v².
        (num_bigint::Sign::Plus, num_bigint::Sign::Minus) => {
            match (u * u).cmp(&(&d * v * v)) {
                Ordering::Greater => 1,
                Ordering::Equal => 0,
                Ordering::Less => -1,
            }
        }
        // v > 0 > u: sign of d·v² − u².
        (num_bigint::Sign::Minus, num_bigint::Sign::Plus) => {
            match (&d * v * v).cmp(&(u * u)) {
                Ordering::Greater => 1,
                Ordering::Equal => 0,
                Ordering::Less => -1,
            }
        }
    }
}

impl Add for QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: QuadInt) -> QuadInt {
        assert_eq!(self.base, rhs.base, "cannot add across rings");
        QuadInt::new(self.base, self.a + rhs.a, self.b + rhs.b)
    }
}

impl AddAssign for QuadInt {
    fn add_assign(&mut self, rhs: QuadInt) {
        assert_eq!(self.base, rhs.base, "cannot add across rings");
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

impl Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: QuadInt) -> QuadInt {
        assert_eq!(self.base, rhs.base, "cannot subtract across rings");
        QuadInt::new(self.base, self.a - rhs.a, self.b - rhs.b)
    }
}

impl SubAssign for QuadInt {
    fn sub_assign(&mut self, rhs: QuadInt) {
        assert_eq!(self.base, rhs.base, "cannot subtract across rings");
        self.a -= rhs.a;
        self.b -= rhs.b;
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt::new(self.base, -self.a, -self.b)
    }
}

impl Mul for QuadInt {
    type Output = QuadInt;
    /// `(a + bθ)(c + dθ) = ac + bd·θ² + (ad + bc)θ`, reduced via
    /// `θ² = c0 + c1·θ`.
    fn mul(self, rhs: QuadInt) -> QuadInt {
        assert_eq!(self.base, rhs.base, "cannot multiply across rings");
        let (c0, c1) = self.base.theta_squared();
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let cross = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadInt::new(self.base, ac + &bd * BigInt::from(c0), cross + bd * BigInt::from(c1))
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let theta = match self.base {
            Base::Phi => "φ",
            Base::Silver => "√2",
        };
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}·{}", self.b, theta);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}·{}", self.a, -&self.b, theta)
        } else {
            write!(f, "{} + {}·{}", self.a, self.b, theta)
        }
    }
}

/// Exact `φⁿ = F_{n-1} + F_n·φ` for any integer `n`.
///
/// The Fibonacci pair is walked up via `φ^{i+1} = φⁱ·φ` — i.e.
/// `(a, b) ↦ (b, a+b)` — and down via the inverse `(a, b) ↦ (b−a, a)`,
/// which realizes `F_{-n} = (−1)^{n+1} F_n` without special cases.
pub fn phi_pow(n: i32) -> QuadInt {
    let mut a = BigInt::one();
    let mut b = BigInt::zero();
    if n >= 0 {
        for _ in 0..n {
            let next_b = &a + &b;
            a = std::mem::replace(&mut b, next_b);
        }
    } else {
        for _ in 0..(-n) {
            let prev_a = &b - &a;
            b = std::mem::replace(&mut a, prev_a);
        }
    }
    QuadInt::new(Base::Phi, a, b)
}

/// Exact `σⁿ` (σ = 1 + √2) as an element of `Z[√2]`, for any integer `n`.
///
/// Upward step `(a, b) ↦ (a + 2b, a + b)` multiplies by `σ`; downward step
/// `(a, b) ↦ (2b − a, a − b)` multiplies by `σ⁻¹ = −1 + √2`.
pub fn sigma_pow(n: i32) -> QuadInt {
    let mut a = BigInt::one();
    let mut b = BigInt::zero();
    if n >= 0 {
        for _ in 0..n {
            let next_a = &a + 2 * &b;
            let next_b = &a + &b;
            a = next_a;
            b = next_b;
        }
    } else {
        for _ in 0..(-n) {
            let prev_a = 2 * &b - &a;
            let prev_b = &a - &b;
            a = prev_a;
            b = prev_b;
        }
    }
    QuadInt::new(Base::Silver, a, b)
}

/// `θⁱ`-analog used for digit weights: `φⁱ` in the `Phi` ring, `σⁱ` in the
/// `Silver` ring.
pub fn weight_pow(base: Base, n: i32) -> QuadInt {
    match base {
        Base::Phi => phi_pow(n),
        Base::Silver => sigma_pow(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi() -> QuadInt {
        QuadInt::new(Base::Phi, 0, 1)
    }

    fn sigma() -> QuadInt {
        QuadInt::new(Base::Silver, 1, 1)
    }

    #[test]
    fn phi_pow_small_values() {
        assert_eq!(phi_pow(0), QuadInt::new(Base::Phi, 1, 0));
        assert_eq!(phi_pow(1), QuadInt::new(Base::Phi, 0, 1));
        assert_eq!(phi_pow(2), QuadInt::new(Base::Phi, 1, 1));
        assert_eq!(phi_pow(4), QuadInt::new(Base::Phi, 2, 3));
        assert_eq!(phi_pow(-1), QuadInt::new(Base::Phi, -1, 1));
        assert_eq!(phi_pow(-2), QuadInt::new(Base::Phi, 2, -1));
    }

    #[test]
    fn sigma_pow_small_values() {
        assert_eq!(sigma_pow(0), QuadInt::new(Base::Silver, 1, 0));
        assert_eq!(sigma_pow(1), QuadInt::new(Base::Silver, 1, 1));
        assert_eq!(sigma_pow(2), QuadInt::new(Base::Silver, 3, 2));
        assert_eq!(sigma_pow(-1), QuadInt::new(Base::Silver, -1, 1));
    }

    #[test]
    fn phi_pow_satisfies_recurrence() {
        // φ^{n+1} = φⁿ + φ^{n-1} across positive and negative indices.
        for n in -60..=60 {
            let sum = phi_pow(n) + phi_pow(n - 1);
            assert_eq!(phi_pow(n + 1), sum, "recurrence fails at n = {n}");
        }
    }

    #[test]
    fn sigma_pow_satisfies_recurrence() {
        // σ^{n+1} = 2σⁿ + σ^{n-1} across positive and negative indices.
        for n in -60..=60 {
            let sum = sigma_pow(n).scale(2) + sigma_pow(n - 1);
            assert_eq!(sigma_pow(n + 1), sum, "recurrence fails at n = {n}");
        }
    }

    #[test]
    fn powers_multiply_to_one() {
        for n in -40..=40 {
            assert_eq!(phi_pow(n) * phi_pow(-n), QuadInt::one(Base::Phi));
            assert_eq!(sigma_pow(n) * sigma_pow(-n), QuadInt::one(Base::Silver));
        }
    }

    #[test]
    fn powers_are_products_of_the_generator() {
        let mut p = QuadInt::one(Base::Phi);
        let mut s = QuadInt::one(Base::Silver);
        for n in 0..=30 {
            assert_eq!(phi_pow(n), p);
            assert_eq!(sigma_pow(n), s);
            p = p * phi();
            s = s * sigma();
        }
    }

    #[test]
    fn sign_case_analysis() {
        // 2 − φ > 0 (φ ≈ 1.618).
        assert_eq!(QuadInt::new(Base::Phi, 2, -1).signum(), 1);
        // 1 − φ < 0.
        assert_eq!(QuadInt::new(Base::Phi, 1, -1).signum(), -1);
        // 3 − 2√2 > 0 (2√2 ≈ 2.828).
        assert_eq!(QuadInt::new(Base::Silver, 3, -2).signum(), 1);
        // √2 − 2 < 0.
        assert_eq!(QuadInt::new(Base::Silver, -2, 1).signum(), -1);
        // −3 + 2√2 < 0.
        assert_eq!(QuadInt::new(Base::Silver, -3, 2).signum(), -1);
        assert_eq!(QuadInt::zero(Base::Phi).signum(), 0);
        // Pure irrational parts.
        assert_eq!(QuadInt::new(Base::Phi, 0, 3).signum(), 1);
        assert_eq!(QuadInt::new(Base::Phi, 0, -3).signum(), -1);
    }

    #[test]
    fn ordering_matches_numeric_value() {
        // φ² = φ + 1 exactly.
        assert_eq!(phi_pow(2).cmp_exact(&(phi() + QuadInt::one(Base::Phi))), Ordering::Equal);
        // σ² = 2σ + 1 exactly.
        assert_eq!(
            sigma_pow(2).cmp_exact(&(sigma().scale(2) + QuadInt::one(Base::Silver))),
            Ordering::Equal
        );
        // φ³ < 5 < φ⁴ (4.236… < 5 < 6.854…).
        let five = QuadInt::from_int(Base::Phi, 5);
        assert_eq!(phi_pow(3).cmp_exact(&five), Ordering::Less);
        assert_eq!(phi_pow(4).cmp_exact(&five), Ordering::Greater);
    }

    #[test]
    #[should_panic(expected = "cannot add across rings")]
    fn mixed_base_addition_panics() {
        let _ = QuadInt::one(Base::Phi) + QuadInt::one(Base::Silver);
    }
}
