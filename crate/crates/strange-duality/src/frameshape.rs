//! Frame shapes `π = ∏ m^{χ_m}` with an attached order `h`, and their algebra:
//! characteristic polynomials, Saito duality, concatenation, traces, and the
//! discriminant value `φ(1)`.
//!
//! Grammar (bit-exact, also used for canonical printing):
//! `shape := prod ('/' prod)? ('@' h)?`, `prod := term ('*' term)*`,
//! `term := m ('^' e)?` with decimal integers. The denominator carries the
//! negative exponents. Printing sorts keys ascending, omits `^1`, and appends
//! `@h` only when `h` differs from the largest key.

use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrameError {
    #[error("malformed frame shape: {0}")]
    Parse(String),
    #[error("frame shape has an empty exponent map")]
    EmptyShape,
    #[error("key {key} does not divide order {order}")]
    InvalidOrder { key: u64, order: u64 },
    #[error("the exponent map does not define a polynomial (division leaves a remainder)")]
    NonPolynomial,
    #[error("the polynomial is not a product of cyclotomic factors for this order")]
    NotCyclotomicProduct,
    #[error("the rational function has a pole at 1")]
    PoleAtOne,
}

/// The sorted divisors of `n`.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub(crate) fn euler_phi(mut n: u64) -> u64 {
    assert!(n >= 1);
    let mut phi = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            phi -= phi / p;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

pub(crate) fn moebius(mut n: u64) -> i64 {
    assert!(n >= 1);
    let mut factors = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            factors += 1;
        }
        p += 1;
    }
    if n > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A Frame shape: finite map `m ↦ χ_m` with nonzero values, every key dividing
/// the order `h`. Equality is map equality plus equal order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrameShape {
    exponents: BTreeMap<u64, i64>,
    order: u64,
}

impl FrameShape {
    /// Canonicalizes (strips zero exponents) and validates keys and order.
    /// An empty map is allowed: it is the degree-0 identity of concatenation.
    pub fn new(exponents: BTreeMap<u64, i64>, order: u64) -> Result<Self, FrameError> {
        if order == 0 {
            return Err(FrameError::InvalidOrder { key: 0, order });
        }
        let mut map = BTreeMap::new();
        for (m, chi) in exponents {
            if m == 0 {
                return Err(FrameError::Parse("base 0 is not allowed".into()));
            }
            if chi == 0 {
                continue;
            }
            if order % m != 0 {
                return Err(FrameError::InvalidOrder { key: m, order });
            }
            map.insert(m, chi);
        }
        Ok(FrameShape {
            exponents: map,
            order,
        })
    }

    /// The degree-0 empty shape, the identity of concatenation.
    pub fn empty() -> Self {
        FrameShape {
            exponents: BTreeMap::new(),
            order: 1,
        }
    }

    /// Parses the grammar above. The order defaults to the largest key unless
    /// an `@h` suffix overrides it. An input whose canonical form is empty
    /// (e.g. `"1^0"`) is rejected.
    pub fn parse(text: &str) -> Result<Self, FrameError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(FrameError::Parse("empty input".into()));
        }
        let (shape_part, order_part) = match text.split_once('@') {
            Some((s, h)) => (s, Some(h)),
            None => (text, None),
        };
        if shape_part.is_empty() {
            return Err(FrameError::Parse("missing shape before '@'".into()));
        }
        let (num_part, den_part) = match shape_part.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (shape_part, None),
        };
        let mut exponents: BTreeMap<u64, i64> = BTreeMap::new();
        let mut accumulate = |product: &str, sign: i64| -> Result<(), FrameError> {
            for term in product.split('*') {
                let (base, exp) = match term.split_once('^') {
                    Some((b, e)) => (b, e),
                    None => (term, "1"),
                };
                let m = parse_decimal(base)?;
                if m == 0 {
                    return Err(FrameError::Parse(format!("zero base in term '{term}'")));
                }
                let e = parse_decimal(exp)?;
                let e = i64::try_from(e)
                    .map_err(|_| FrameError::Parse(format!("exponent too large in '{term}'")))?;
                let entry = exponents.entry(m).or_insert(0);
                *entry = entry
                    .checked_add(sign * e)
                    .ok_or_else(|| FrameError::Parse("exponent overflow".into()))?;
            }
            Ok(())
        };
        accumulate(num_part, 1)?;
        if let Some(den) = den_part {
            accumulate(den, -1)?;
        }
        exponents.retain(|_, chi| *chi != 0);
        if exponents.is_empty() {
            return Err(FrameError::EmptyShape);
        }
        let order = match order_part {
            Some(h) => {
                let h = parse_decimal(h)?;
                if h == 0 {
                    return Err(FrameError::InvalidOrder { key: 0, order: 0 });
                }
                h
            }
            None => *exponents.keys().next_back().expect("nonempty"),
        };
        FrameShape::new(exponents, order)
    }

    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exponents
    }

    pub fn exponent(&self, m: u64) -> i64 {
        self.exponents.get(&m).copied().unwrap_or(0)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// The same exponent map with a different order `h`.
    pub fn with_order(&self, order: u64) -> Result<Self, FrameError> {
        FrameShape::new(self.exponents.clone(), order)
    }

    /// `deg π = Σ m·χ_m`.
    pub fn degree(&self) -> BigInt {
        let mut sum = BigInt::zero();
        for (&m, &chi) in &self.exponents {
            sum += BigInt::from(m) * BigInt::from(chi);
        }
        sum
    }

    /// `Σ χ_m`, the net multiplicity of the eigenvalue 1.
    pub fn exponent_sum(&self) -> i128 {
        self.exponents.values().map(|&chi| i128::from(chi)).sum()
    }

    /// `φ(λ) = ∏ (λ^m − 1)^{χ_m}`, when it is a polynomial.
    pub fn to_char_poly(&self) -> Result<IntPolynomial, FrameError> {
        let mut num = IntPolynomial::one();
        let mut den = IntPolynomial::one();
        for (&m, &chi) in &self.exponents {
            let e = u32::try_from(chi.unsigned_abs()).map_err(|_| FrameError::NonPolynomial)?;
            let factor = IntPolynomial::lambda_pow_minus_one(m).pow(e);
            if chi > 0 {
                num = num.mul(&factor);
            } else {
                den = den.mul(&factor);
            }
        }
        num.div_exact(&den).ok_or(FrameError::NonPolynomial)
    }

    /// Inverse of [`to_char_poly`](Self::to_char_poly) for a given order `h`:
    /// deconvolution over the divisor lattice of `h`. The cyclotomic
    /// multiplicities `a_d` are extracted by exact division and must factor
    /// `φ` completely; Möbius inversion then yields `χ_m = Σ μ(k/m) a_k`.
    pub fn from_char_poly(phi: &IntPolynomial, h: u64) -> Result<Self, FrameError> {
        if h == 0 {
            return Err(FrameError::InvalidOrder { key: 0, order: 0 });
        }
        if phi.is_zero() {
            return Err(FrameError::NotCyclotomicProduct);
        }
        let divs = divisors(h);
        let mut remaining = phi.clone();
        let mut mult: BTreeMap<u64, i64> = BTreeMap::new();
        for &d in &divs {
            let cyc = IntPolynomial::cyclotomic(d);
            let mut count = 0i64;
            while let Some(q) = remaining.div_exact(&cyc) {
                remaining = q;
                count += 1;
                if remaining.is_one() {
                    break;
                }
            }
            mult.insert(d, count);
        }
        if !remaining.is_one() {
            return Err(FrameError::NotCyclotomicProduct);
        }
        let mut exponents = BTreeMap::new();
        for &m in &divs {
            let mut chi = 0i64;
            for &k in &divs {
                if k % m == 0 {
                    chi += moebius(k / m) * mult[&k];
                }
            }
            if chi != 0 {
                exponents.insert(m, chi);
            }
        }
        let shape = FrameShape::new(exponents, h)?;
        debug_assert_eq!(shape.to_char_poly().as_ref(), Ok(phi));
        Ok(shape)
    }

    /// [`from_char_poly`](Self::from_char_poly) with the order inferred as the
    /// lcm of the cyclotomic indices present in `φ`. Complete because
    /// `φ(d) ≥ √(d/2)` bounds every candidate index by `2·deg²`.
    pub fn from_char_poly_auto(phi: &IntPolynomial) -> Result<Self, FrameError> {
        if phi.is_zero() {
            return Err(FrameError::NotCyclotomicProduct);
        }
        if phi.is_one() {
            return Ok(FrameShape::empty());
        }
        let deg = phi.degree().expect("nonzero") as u64;
        let bound = 2 * deg * deg;
        let mut remaining = phi.clone();
        let mut order = 1u64;
        for d in 1..=bound {
            if remaining.is_one() {
                break;
            }
            if euler_phi(d) > remaining.degree().expect("nonzero") as u64 {
                continue;
            }
            let cyc = IntPolynomial::cyclotomic(d);
            let mut present = false;
            while let Some(q) = remaining.div_exact(&cyc) {
                remaining = q;
                present = true;
                if remaining.is_one() {
                    break;
                }
            }
            if present {
                order = order.lcm(&d);
            }
        }
        if !remaining.is_one() {
            return Err(FrameError::NotCyclotomicProduct);
        }
        FrameShape::from_char_poly(phi, order)
    }

    /// Saito dual: `χ*_k = −χ_{h/k}` for `k | h`; the order is preserved.
    pub fn saito_dual(&self) -> Self {
        let exponents = self
            .exponents
            .iter()
            .map(|(&m, &chi)| (self.order / m, -chi))
            .collect();
        FrameShape {
            exponents,
            order: self.order,
        }
    }

    /// Exponentwise sum; the order is the lcm of the orders. Degrees add.
    pub fn concatenate(&self, other: &Self) -> Self {
        let mut exponents = self.exponents.clone();
        for (&m, &chi) in &other.exponents {
            let entry = exponents.entry(m).or_insert(0);
            *entry += chi;
        }
        exponents.retain(|_, chi| *chi != 0);
        FrameShape {
            exponents,
            order: self.order.lcm(&other.order),
        }
    }

    /// `tr c^k = Σ_{m|k} m·χ_m`.
    pub fn trace_power(&self, k: u64) -> BigInt {
        assert!(k >= 1, "power must be positive");
        let mut sum = BigInt::zero();
        for (&m, &chi) in &self.exponents {
            if k % m == 0 {
                sum += BigInt::from(m) * BigInt::from(chi);
            }
        }
        sum
    }

    /// `φ(1)` exactly: 0 when the net multiplicity `Σχ_m` of the root 1 is
    /// positive, `∏ m^{χ_m}` when it is zero, and a pole error when negative.
    pub fn value_at_one(&self) -> Result<BigRational, FrameError> {
        let s = self.exponent_sum();
        if s > 0 {
            return Ok(BigRational::zero());
        }
        if s < 0 {
            return Err(FrameError::PoleAtOne);
        }
        Ok(self.discriminant_product())
    }

    /// `∏ m^{χ_m}` as a positive exact rational.
    pub fn discriminant_product(&self) -> BigRational {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (&m, &chi) in &self.exponents {
            let p = BigInt::from(m).pow(u32::try_from(chi.unsigned_abs()).expect("small"));
            if chi > 0 {
                num *= p;
            } else {
                den *= p;
            }
        }
        BigRational::new(num, den)
    }

    pub fn is_self_dual(&self) -> bool {
        *self == self.saito_dual()
    }
}

fn parse_decimal(text: &str) -> Result<u64, FrameError> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(FrameError::Parse(format!("expected a decimal integer, got '{text}'")));
    }
    text.parse::<u64>()
        .map_err(|_| FrameError::Parse(format!("integer out of range: '{text}'")))
}

impl fmt::Display for FrameShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            write!(f, "1^0")?;
            if self.order != 1 {
                write!(f, "@{}", self.order)?;
            }
            return Ok(());
        }
        let side = |f: &mut fmt::Formatter<'_>, positive: bool| -> fmt::Result {
            let mut first = true;
            for (&m, &chi) in &self.exponents {
                if (chi > 0) != positive {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                let e = chi.unsigned_abs();
                if e == 1 {
                    write!(f, "{m}")?;
                } else {
                    write!(f, "{m}^{e}")?;
                }
            }
            Ok(())
        };
        let has_num = self.exponents.values().any(|&chi| chi > 0);
        let has_den = self.exponents.values().any(|&chi| chi < 0);
        if has_num {
            side(f, true)?;
        } else {
            write!(f, "1^0")?;
        }
        if has_den {
            write!(f, "/")?;
            side(f, false)?;
        }
        let max_key = *self.exponents.keys().next_back().expect("nonempty");
        if self.order != max_key {
            write!(f, "@{}", self.order)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for FrameShape {
    type Err = FrameError;

    fn from_str(text: &str) -> Result<Self, FrameError> {
        FrameShape::parse(text)
    }
}

impl serde::Serialize for FrameShape {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for FrameShape {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        FrameShape::parse(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> FrameShape {
        FrameShape::parse(s).unwrap()
    }

    #[test]
    fn parse_and_canonical_print() {
        let e12 = shape("2*3*7*42/1*6*14*21");
        assert_eq!(e12.order(), 42);
        assert_eq!(e12.exponent(2), 1);
        assert_eq!(e12.exponent(21), -1);
        assert_eq!(e12.to_string(), "2*3*7*42/1*6*14*21");

        let s12 = shape("13/1");
        assert_eq!(s12.order(), 13);
        assert_eq!(s12.to_string(), "13/1");

        let flat = shape("2^2*3*18/1^2*6*9");
        assert_eq!(flat.exponent(2), 2);
        assert_eq!(flat.degree(), BigInt::from(8));

        // Repeated bases accumulate; exponent zero is legal syntax that strips.
        assert_eq!(shape("2*2*3/3").to_string(), "2^2");
        assert_eq!(shape("5^2/5@10").to_string(), "5@10");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            FrameShape::parse("1^0"),
            Err(FrameError::EmptyShape)
        ));
        assert!(matches!(
            FrameShape::parse("2/2"),
            Err(FrameError::EmptyShape)
        ));
        assert!(matches!(FrameShape::parse(""), Err(FrameError::Parse(_))));
        assert!(matches!(FrameShape::parse("2**3"), Err(FrameError::Parse(_))));
        assert!(matches!(FrameShape::parse("0*2"), Err(FrameError::Parse(_))));
        assert!(matches!(FrameShape::parse("-3"), Err(FrameError::Parse(_))));
        assert!(matches!(FrameShape::parse("2^x"), Err(FrameError::Parse(_))));
        assert!(matches!(
            FrameShape::parse("3@7"),
            Err(FrameError::InvalidOrder { key: 3, order: 7 })
        ));
        assert!(FrameShape::parse("3@6").is_ok());
    }

    #[test]
    fn degrees_and_traces() {
        let e12 = shape("2*3*7*42/1*6*14*21");
        assert_eq!(e12.degree(), BigInt::from(12));
        assert_eq!(e12.trace_power(1), BigInt::from(-1));
        assert_eq!(e12.trace_power(6), BigInt::from(-2));
        assert_eq!(e12.trace_power(42), BigInt::from(12));
    }

    #[test]
    fn char_poly_round_trip() {
        let q = shape("3/1").to_char_poly().unwrap();
        assert_eq!(q, IntPolynomial::from_i64_coeffs(&[1, 1, 1]));

        let s12 = shape("13/1").to_char_poly().unwrap();
        assert_eq!(s12, IntPolynomial::from_i64_coeffs(&[1; 13]));

        let e12 = shape("2*3*7*42/1*6*14*21");
        let phi = e12.to_char_poly().unwrap();
        assert_eq!(
            phi,
            IntPolynomial::from_i64_coeffs(&[1, 1, 0, -1, -1, 0, 1, 0, -1, -1, 0, 1, 1])
        );
        assert_eq!(FrameShape::from_char_poly(&phi, 42).unwrap(), e12);

        let e14 = shape("2*3*24/1*6*8");
        let phi14 = e14.to_char_poly().unwrap();
        assert_eq!(FrameShape::from_char_poly(&phi14, 24).unwrap(), e14);

        assert!(matches!(
            shape("1/2").to_char_poly(),
            Err(FrameError::NonPolynomial)
        ));
        assert!(matches!(
            FrameShape::from_char_poly(&IntPolynomial::from_i64_coeffs(&[-2, 0, 1]), 12),
            Err(FrameError::NotCyclotomicProduct)
        ));
        // Cyclotomic product, but not for this order: Φ_5 with h = 4.
        assert!(matches!(
            FrameShape::from_char_poly(&IntPolynomial::from_i64_coeffs(&[1, 1, 1, 1, 1]), 4),
            Err(FrameError::NotCyclotomicProduct)
        ));
    }

    #[test]
    fn auto_order_decomposition() {
        let phi = shape("2*3*24/1*6*8").to_char_poly().unwrap();
        let rec = FrameShape::from_char_poly_auto(&phi).unwrap();
        assert_eq!(rec, shape("2*3*24/1*6*8"));
        assert_eq!(rec.order(), 24);
        assert_eq!(
            FrameShape::from_char_poly_auto(&IntPolynomial::one()).unwrap(),
            FrameShape::empty()
        );
    }

    #[test]
    fn saito_duality() {
        let e13 = shape("2*3*30/1*6*15");
        assert_eq!(e13.saito_dual(), shape("2*5*30/1*10*15"));
        assert_eq!(e13.saito_dual().saito_dual(), e13);
        assert!(!e13.is_self_dual());

        let j30 = shape("2*3*18^2/1*6*9^2");
        assert_eq!(j30.saito_dual(), shape("2^2*3*18/1^2*6*9"));

        assert!(shape("13^2/1^2").is_self_dual());
        assert!(shape("2^2*3^2*7^2*42^2/1^2*6^2*14^2*21^2").is_self_dual());
    }

    #[test]
    fn concatenation() {
        let e12 = shape("2*3*7*42/1*6*14*21");
        let pair = e12.concatenate(&e12.saito_dual());
        assert_eq!(pair, shape("2^2*3^2*7^2*42^2/1^2*6^2*14^2*21^2"));
        assert_eq!(pair.degree(), BigInt::from(24));
        assert_eq!(e12.concatenate(&FrameShape::empty()), e12);
        // Cancellation may empty the map entirely.
        let inv = shape("1*6*14*21/2*3*7*42");
        assert!(e12.concatenate(&inv).is_empty());
    }

    #[test]
    fn value_at_one_cases() {
        let one = BigRational::from_integer(BigInt::one());
        assert_eq!(shape("2*3*7*42/1*6*14*21").value_at_one().unwrap(), one);
        assert_eq!(
            shape("2*3*30/1*6*15").value_at_one().unwrap(),
            BigRational::from_integer(BigInt::from(2))
        );
        assert_eq!(
            shape("6^3/1*2^2").value_at_one().unwrap(),
            BigRational::from_integer(BigInt::from(54))
        );
        // Positive net multiplicity of the root 1.
        assert_eq!(shape("3").value_at_one().unwrap(), BigRational::zero());
        assert!(matches!(
            shape("2/1^2").value_at_one(),
            Err(FrameError::PoleAtOne)
        ));
    }

    #[test]
    fn serde_round_trip() {
        let e12 = shape("2*3*7*42/1*6*14*21");
        let json = serde_json::to_string(&e12).unwrap();
        assert_eq!(json, "\"2*3*7*42/1*6*14*21\"");
        let back: FrameShape = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e12);
    }
}
