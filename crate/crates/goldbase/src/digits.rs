//! Sparse digit strings over an irrational base.
//!
//! A [`DigitString`] assigns a small digit to each integer exponent, with
//! all unmentioned exponents holding 0. The string `d_L … d_1 d_0 · d_{-1}
//! … d_R` denotes `Σᵢ dᵢ·ωⁱ` where the weight `ω` is `φ` for the `Phi`
//! base and `σ = 1 + √2` for the `Silver` base. Exponent 0 sits just left
//! of the radix point.
//!
//! The type is deliberately permissive: it holds *any* digits `0..=9`,
//! admissible or not, because the normalizer must be able to represent
//! intermediate strings such as `110·02` that arise during carrying.
//! Admissibility predicates live with the expansion algorithms.

use std::collections::BTreeMap;
use std::error::Error;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::quad::{weight_pow, Base, QuadInt};

/// Which glyph to use for the radix point when rendering.
///
/// The default is the middle dot `·`; an ASCII fallback is available for
/// plain terminals (and via the `GOLDBASE_RADIX` environment variable in
/// the CLI). Parsing always accepts either glyph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RadixGlyph {
    #[default]
    MiddleDot,
    AsciiDot,
}

impl RadixGlyph {
    pub fn as_char(self) -> char {
        match self {
            RadixGlyph::MiddleDot => '·',
            RadixGlyph::AsciiDot => '.',
        }
    }
}

/// A malformed digit-string literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseDigitsError {
    /// The input contained no digits at all.
    Empty,
    /// No radix point was present.
    MissingPoint,
    /// More than one radix point was present.
    MultiplePoints,
    /// A character other than `0..=9`, `·` or `.` appeared.
    InvalidChar(char),
}

impl fmt::Display for ParseDigitsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseDigitsError::Empty => write!(f, "digit string contains no digits"),
            ParseDigitsError::MissingPoint => {
                write!(f, "digit string must contain a radix point ('·' or '.')")
            }
            ParseDigitsError::MultiplePoints => {
                write!(f, "digit string contains more than one radix point")
            }
            ParseDigitsError::InvalidChar(c) => {
                write!(f, "invalid character {c:?} in digit string")
            }
        }
    }
}

impl Error for ParseDigitsError {}

/// A finite digit assignment `exponent ↦ digit` over base `φ` or `σ`.
///
/// Only nonzero digits are stored; the map is kept free of explicit
/// zeros so that structural equality coincides with digitwise equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "DigitStringRepr", into = "DigitStringRepr")]
pub struct DigitString {
    base: Base,
    digits: BTreeMap<i32, u8>,
}

/// Wire form of [`DigitString`]: `{"base":"phi","digits":{"1":1,"-2":1}}`.
///
/// Conversion normalizes away any explicit zero digits so that
/// deserialized values uphold the sparseness invariant.
#[derive(Serialize, Deserialize)]
struct DigitStringRepr {
    base: Base,
    digits: BTreeMap<i32, u8>,
}

impl From<DigitString> for DigitStringRepr {
    fn from(d: DigitString) -> Self {
        DigitStringRepr { base: d.base, digits: d.digits }
    }
}

impl From<DigitStringRepr> for DigitString {
    fn from(r: DigitStringRepr) -> Self {
        DigitString::from_digits(r.base, r.digits)
    }
}

impl DigitString {
    /// The empty string (all digits zero; value 0).
    pub fn new(base: Base) -> Self {
        DigitString { base, digits: BTreeMap::new() }
    }

    /// Builds a string from `(exponent, digit)` pairs, dropping zeros.
    ///
    /// Later pairs overwrite earlier ones at the same exponent.
    pub fn from_digits(base: Base, digits: impl IntoIterator<Item = (i32, u8)>) -> Self {
        let mut s = DigitString::new(base);
        for (i, d) in digits {
            s.set_digit(i, d);
        }
        s
    }

    /// Builds a string with digit 1 at each given exponent.
    pub fn from_ones(base: Base, exponents: impl IntoIterator<Item = i32>) -> Self {
        DigitString::from_digits(base, exponents.into_iter().map(|i| (i, 1)))
    }

    pub fn base(&self) -> Base {
        self.base
    }

    /// The digit at exponent `i` (0 if unset).
    pub fn digit(&self, i: i32) -> u8 {
        self.digits.get(&i).copied().unwrap_or(0)
    }

    /// Sets the digit at exponent `i`, removing the entry when `d = 0`.
    pub fn set_digit(&mut self, i: i32, d: u8) {
        if d == 0 {
            self.digits.remove(&i);
        } else {
            self.digits.insert(i, d);
        }
    }

    /// Adds `amount` to the digit at exponent `i`.
    pub fn bump_digit(&mut self, i: i32, amount: u8) {
        self.set_digit(i, self.digit(i) + amount);
    }

    /// True iff every digit is zero.
    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    /// Number of nonzero digits.
    pub fn support_len(&self) -> usize {
        self.digits.len()
    }

    /// Exponents carrying nonzero digits, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = i32> + '_ {
        self.digits.keys().copied()
    }

    /// `(exponent, digit)` pairs for the nonzero digits, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (i32, u8)> + '_ {
        self.digits.iter().map(|(&i, &d)| (i, d))
    }

    /// Leftmost index `L(N)`: the highest exponent with a nonzero digit,
    /// clamped to at least 0 (an integer-valued string such as `1·0` has
    /// `L = 0`, never negative).
    pub fn l_index(&self) -> i32 {
        self.digits.keys().next_back().map_or(0, |&i| i.max(0))
    }

    /// Rightmost index `R(N)`: the lowest exponent with a nonzero digit,
    /// clamped to at most 0, so integer-valued strings report `R = 0`.
    pub fn r_index(&self) -> i32 {
        self.digits.keys().next().map_or(0, |&i| i.min(0))
    }

    /// Window width `L − R + 1` in digit positions.
    pub fn width(&self) -> u32 {
        (self.l_index() - self.r_index() + 1) as u32
    }

    /// Exact value `Σᵢ dᵢ·ωⁱ` as an element of the underlying ring.
    pub fn value(&self) -> QuadInt {
        let mut total = QuadInt::zero(self.base);
        for (&i, &d) in &self.digits {
            total += weight_pow(self.base, i).scale(d);
        }
        total
    }

    /// Digitwise sum of two strings over the same base (no carrying).
    ///
    /// The result is usually inadmissible — e.g. `101·01 + 1·0 = 102·01` —
    /// and exists to feed the normalizer.
    pub fn add_digitwise(&self, other: &DigitString) -> DigitString {
        assert_eq!(self.base, other.base, "cannot add digit strings across bases");
        let mut out = self.clone();
        for (i, d) in other.iter() {
            out.bump_digit(i, d);
        }
        out
    }

    /// Parses a literal such as `10·01`, `100.01`, or `1·0`.
    ///
    /// Exactly one radix point (`·` or `.`) is required; digits are
    /// `0..=9`; either side of the point may be empty. Integer-side
    /// characters map to exponents `len-1 … 0`, fractional-side characters
    /// to `-1, -2, …`.
    pub fn parse(input: &str, base: Base) -> Result<DigitString, ParseDigitsError> {
        let mut int_side: Vec<u8> = Vec::new();
        let mut frac_side: Vec<u8> = Vec::new();
        let mut seen_point = false;
        for c in input.chars() {
            match c {
                '·' | '.' => {
                    if seen_point {
                        return Err(ParseDigitsError::MultiplePoints);
                    }
                    seen_point = true;
                }
                '0'..='9' => {
                    let d = c as u8 - b'0';
                    if seen_point {
                        frac_side.push(d);
                    } else {
                        int_side.push(d);
                    }
                }
                other => return Err(ParseDigitsError::InvalidChar(other)),
            }
        }
        if !seen_point {
            return Err(ParseDigitsError::MissingPoint);
        }
        if int_side.is_empty() && frac_side.is_empty() {
            return Err(ParseDigitsError::Empty);
        }
        let mut s = DigitString::new(base);
        let top = int_side.len() as i32 - 1;
        for (k, &d) in int_side.iter().enumerate() {
            s.set_digit(top - k as i32, d);
        }
        for (k, &d) in frac_side.iter().enumerate() {
            s.set_digit(-(k as i32) - 1, d);
        }
        Ok(s)
    }

    /// Renders the string with the given radix glyph.
    ///
    /// At least one digit is emitted on each side of the point, so the
    /// integer 1 renders as `1·0` and the zero string as `0·0`.
    pub fn render(&self, glyph: RadixGlyph) -> String {
        let mut out = String::new();
        for i in (0..=self.l_index()).rev() {
            out.push((b'0' + self.digit(i)) as char);
        }
        out.push(glyph.as_char());
        let r = self.r_index();
        if r == 0 {
            out.push('0');
        } else {
            for i in 1..=(-r) {
                out.push((b'0' + self.digit(-i)) as char);
            }
        }
        out
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(RadixGlyph::MiddleDot))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple_string() {
        let s = DigitString::parse("10·01", Base::Phi).unwrap();
        assert_eq!(s, DigitString::from_ones(Base::Phi, [1, -2]));
        assert_eq!(s.digit(1), 1);
        assert_eq!(s.digit(0), 0);
        assert_eq!(s.digit(-2), 1);
    }

    #[test]
    fn parse_accepts_ascii_point_and_empty_sides() {
        assert_eq!(
            DigitString::parse("100.01", Base::Phi).unwrap(),
            DigitString::parse("100·01", Base::Phi).unwrap()
        );
        // "1·" is how γ(1) appears inside worked additions.
        let one = DigitString::parse("1·", Base::Phi).unwrap();
        assert_eq!(one, DigitString::from_ones(Base::Phi, [0]));
        let frac = DigitString::parse("·01", Base::Phi).unwrap();
        assert_eq!(frac, DigitString::from_ones(Base::Phi, [-2]));
    }

    #[test]
    fn parse_rejects_malformed_strings() {
        assert_eq!(DigitString::parse("1··0", Base::Phi), Err(ParseDigitsError::MultiplePoints));
        assert_eq!(DigitString::parse("10", Base::Phi), Err(ParseDigitsError::MissingPoint));
        assert_eq!(DigitString::parse("·", Base::Phi), Err(ParseDigitsError::Empty));
        assert_eq!(
            DigitString::parse("1x·0", Base::Phi),
            Err(ParseDigitsError::InvalidChar('x'))
        );
        assert_eq!(
            DigitString::parse("-1·0", Base::Phi),
            Err(ParseDigitsError::InvalidChar('-'))
        );
    }

    #[test]
    fn render_pads_both_sides() {
        let s = DigitString::from_ones(Base::Phi, [0]);
        assert_eq!(s.render(RadixGlyph::MiddleDot), "1·0");
        assert_eq!(s.render(RadixGlyph::AsciiDot), "1.0");
        assert_eq!(DigitString::new(Base::Phi).render(RadixGlyph::MiddleDot), "0·0");
        let t = DigitString::from_ones(Base::Phi, [2, -2]);
        assert_eq!(t.render(RadixGlyph::MiddleDot), "100·01");
    }

    #[test]
    fn render_parse_round_trip() {
        for s in ["10·01", "1000·1001", "102·01", "0·11", "21·01", "120·02"] {
            let parsed = DigitString::parse(s, Base::Phi).unwrap();
            // Re-parse of the canonical rendering gives the same digits
            // (leading zeros are not preserved, values are).
            let rendered = parsed.render(RadixGlyph::MiddleDot);
            assert_eq!(DigitString::parse(&rendered, Base::Phi).unwrap(), parsed);
        }
    }

    #[test]
    fn value_of_phi_strings() {
        // 10·01 = φ + φ⁻² = 2.
        let two = DigitString::parse("10·01", Base::Phi).unwrap();
        assert_eq!(two.value(), QuadInt::from_int(Base::Phi, 2));
        // 1000·1001 = φ³ + φ⁻¹ + φ⁻⁴ = 5.
        let five = DigitString::parse("1000·1001", Base::Phi).unwrap();
        assert_eq!(five.value(), QuadInt::from_int(Base::Phi, 5));
        // The inadmissible carry intermediate 102·01 also equals 5.
        let five_raw = DigitString::parse("102·01", Base::Phi).unwrap();
        assert_eq!(five_raw.value(), QuadInt::from_int(Base::Phi, 5));
    }

    #[test]
    fn value_of_silver_strings() {
        // 21·01 = 2σ + 1 + σ⁻² = 6 (canonical silver form of 6).
        let six = DigitString::parse("21·01", Base::Silver).unwrap();
        assert_eq!(six.value(), QuadInt::from_int(Base::Silver, 6));
        // 100·02 = σ² + 2σ⁻² = 9? No: σ² = 3+2√2, 2σ⁻² = 6−4√2 ⇒ 9−2√2.
        let s = DigitString::parse("100·02", Base::Silver).unwrap();
        assert_eq!(s.value(), QuadInt::new(Base::Silver, 9, -2));
    }

    #[test]
    fn l_and_r_indices_clamp_to_zero() {
        let one = DigitString::from_ones(Base::Phi, [0]);
        assert_eq!((one.l_index(), one.r_index()), (0, 0));
        let four = DigitString::parse("101·01", Base::Phi).unwrap();
        assert_eq!((four.l_index(), four.r_index()), (2, -2));
        let frac_only = DigitString::from_ones(Base::Phi, [-2]);
        assert_eq!((frac_only.l_index(), frac_only.r_index()), (0, -2));
    }

    #[test]
    fn digitwise_addition_is_value_additive() {
        let a = DigitString::parse("101·01", Base::Phi).unwrap(); // β(4)
        let b = DigitString::parse("1·0", Base::Phi).unwrap(); // β(1)
        let sum = a.add_digitwise(&b);
        assert_eq!(sum, DigitString::parse("102·01", Base::Phi).unwrap());
        assert_eq!(sum.value(), QuadInt::from_int(Base::Phi, 5));
        let av = a.value();
        let bv = b.value();
        assert_eq!(sum.value(), av + bv);
    }

    #[test]
    fn json_round_trip_matches_wire_format() {
        let s = DigitString::parse("10·01", Base::Phi).unwrap();
        let json = serde_json::to_value(&s).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"base": "phi", "digits": {"1": 1, "-2": 1}})
        );
        let back: DigitString = serde_json::from_value(json).unwrap();
        assert_eq!(back, s);
        // Explicit zeros on the wire are normalized away.
        let with_zero: DigitString =
            serde_json::from_str(r#"{"base":"phi","digits":{"1":1,"0":0,"-2":1}}"#).unwrap();
        assert_eq!(with_zero, s);
    }

    #[test]
    fn value_uses_sigma_weights_for_silver() {
        // 10·0 in silver is σ = 1 + √2, not √2.
        let s = DigitString::from_ones(Base::Silver, [1]);
        assert_eq!(s.value(), QuadInt::new(Base::Silver, 1, 1));
    }
}
