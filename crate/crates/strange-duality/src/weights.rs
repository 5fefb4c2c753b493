//! Weight systems `(w₁,…,w_k; N)` or `(w₁,…,w₄; N₁,N₂)`, Milnor numbers, and
//! monodromy Frame shapes for weighted homogeneous hypersurfaces in three
//! variables via the Milnor–Orlik divisor expansion.

use crate::catalog::{Family, SingularityRecord};
use crate::frameshape::{FrameError, FrameShape};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("invalid weight system: {0}")]
    Invalid(String),
    #[error("Milnor number ∏(N−w_i)/w_i is not a positive integer")]
    NonIntegerMilnorNumber,
    #[error("divisor expansion leaves a non-integer exponent")]
    NonIntegralExponent,
    #[error("divisor expansion is identically zero (degenerate weight system)")]
    Degenerate,
    #[error("operation requires a different singularity class")]
    WrongClass,
    #[error(transparent)]
    Frame(#[from] FrameError),
}

/// `true` when `n ∈ ℕw₁ + … + ℕw_k` (coin-problem dynamic program).
pub(crate) fn semigroup_contains(weights: &[u64], n: u64) -> bool {
    let target = n as usize;
    let mut reachable = vec![false; target + 1];
    reachable[0] = true;
    for value in 1..=target {
        for &w in weights {
            let w = w as usize;
            if w <= value && reachable[value - w] {
                reachable[value] = true;
                break;
            }
        }
    }
    reachable[target]
}

/// Weights `(w₁,…,w_k)` with `k ∈ {3,4}` and one degree `N` (hypersurface,
/// `k = 3`) or two degrees `N₁,N₂` (complete intersection, `k = 4`). Each
/// degree lies in the numerical semigroup generated by the weights.
///
/// Prints and parses as `w1,w2,w3;N` or `w1,w2,w3,w4;N1,N2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    weights: Vec<u64>,
    degrees: Vec<u64>,
}

impl WeightSystem {
    pub fn new(weights: Vec<u64>, degrees: Vec<u64>) -> Result<Self, WeightError> {
        match (weights.len(), degrees.len()) {
            (3, 1) | (4, 2) => {}
            (w, d) => {
                return Err(WeightError::Invalid(format!(
                    "need 3 weights with 1 degree or 4 weights with 2 degrees, got {w} weights with {d} degrees"
                )))
            }
        }
        if weights.iter().chain(&degrees).any(|&x| x == 0) {
            return Err(WeightError::Invalid("weights and degrees must be positive".into()));
        }
        for &n in &degrees {
            if !semigroup_contains(&weights, n) {
                return Err(WeightError::Invalid(format!(
                    "degree {n} is not in the semigroup of the weights"
                )));
            }
        }
        Ok(WeightSystem { weights, degrees })
    }

    pub fn hypersurface(w1: u64, w2: u64, w3: u64, n: u64) -> Result<Self, WeightError> {
        WeightSystem::new(vec![w1, w2, w3], vec![n])
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn is_hypersurface(&self) -> bool {
        self.degrees.len() == 1
    }

    /// gcd(w₁,…,w_k) = 1.
    pub fn is_reduced(&self) -> bool {
        self.weights.iter().fold(0u64, |g, &w| g.gcd(&w)) == 1
    }

    /// `μ = ∏ (N−w_i)/w_i` for a hypersurface system, when it is a positive
    /// integer; [`WeightError::NonIntegerMilnorNumber`] otherwise.
    pub fn milnor_number(&self) -> Result<u64, WeightError> {
        if !self.is_hypersurface() {
            return Err(WeightError::WrongClass);
        }
        let n = BigInt::from(self.degrees[0]);
        let mut mu = BigRational::one();
        for &w in &self.weights {
            mu *= BigRational::new(&n - BigInt::from(w), BigInt::from(w));
        }
        if !mu.is_integer() || !mu.is_positive() {
            return Err(WeightError::NonIntegerMilnorNumber);
        }
        mu.to_integer()
            .to_u64()
            .ok_or(WeightError::NonIntegerMilnorNumber)
    }

    /// Monodromy Frame shape of a reduced hypersurface system: expand
    /// `∏ ((1/u_i)Λ_{v_i} − Λ₁)` with `w_i/N = u_i/v_i` in lowest terms, in
    /// the ring with `Λ_a·Λ_b = gcd(a,b)·Λ_{lcm(a,b)}`. The order is `N`.
    pub fn monodromy_frame(&self) -> Result<FrameShape, WeightError> {
        if !self.is_hypersurface() {
            return Err(WeightError::WrongClass);
        }
        if !self.is_reduced() {
            return Err(WeightError::Invalid("weight system is not reduced".into()));
        }
        let n = self.degrees[0];
        let mut acc: BTreeMap<u64, BigRational> = BTreeMap::new();
        acc.insert(1, BigRational::one());
        for &w in &self.weights {
            let g = w.gcd(&n);
            let (u, v) = (w / g, n / g);
            let mut term: BTreeMap<u64, BigRational> = BTreeMap::new();
            term.insert(v, BigRational::new(BigInt::one(), BigInt::from(u)));
            *term.entry(1).or_insert_with(BigRational::zero) -= BigRational::one();
            term.retain(|_, c| !c.is_zero());
            acc = lambda_mul(&acc, &term);
        }
        if acc.is_empty() {
            return Err(WeightError::Degenerate);
        }
        let mut exponents = BTreeMap::new();
        for (m, chi) in acc {
            if !chi.is_integer() {
                return Err(WeightError::NonIntegralExponent);
            }
            let chi = chi
                .to_integer()
                .to_i64()
                .ok_or(WeightError::NonIntegralExponent)?;
            exponents.insert(m, chi);
        }
        Ok(FrameShape::new(exponents, n)?)
    }
}

fn lambda_mul(
    a: &BTreeMap<u64, BigRational>,
    b: &BTreeMap<u64, BigRational>,
) -> BTreeMap<u64, BigRational> {
    let mut out: BTreeMap<u64, BigRational> = BTreeMap::new();
    for (&x, cx) in a {
        for (&y, cy) in b {
            let coeff = cx * cy * BigRational::from_integer(BigInt::from(x.gcd(&y)));
            *out.entry(x.lcm(&y)).or_insert_with(BigRational::zero) += coeff;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Order of the monodromy operator: `N` for hypersurfaces, `N₂` for complete
/// intersections.
pub fn monodromy_order(record: &SingularityRecord) -> u64 {
    *record.weights.degrees().last().expect("degrees nonempty")
}

/// Order `lcm(N₁,N₂)` of the virtual dual monodromy, defined for the eight
/// triangle complete intersections.
pub fn virtual_dual_order(record: &SingularityRecord) -> Result<u64, WeightError> {
    if record.family != Family::TriangleIcis {
        return Err(WeightError::WrongClass);
    }
    let [n1, n2] = record.weights.degrees() else {
        return Err(WeightError::WrongClass);
    };
    Ok(n1.lcm(n2))
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[u64]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{};{}", join(&self.weights), join(&self.degrees))
    }
}

impl FromStr for WeightSystem {
    type Err = WeightError;

    fn from_str(text: &str) -> Result<Self, WeightError> {
        let (w, d) = text
            .trim()
            .split_once(';')
            .ok_or_else(|| WeightError::Invalid("expected 'w1,w2,...;N[,N2]'".into()))?;
        let parse_list = |part: &str| -> Result<Vec<u64>, WeightError> {
            part.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(WeightError::Invalid(format!("bad integer '{tok}'")));
                    }
                    tok.parse::<u64>()
                        .map_err(|_| WeightError::Invalid(format!("integer out of range '{tok}'")))
                })
                .collect()
        };
        WeightSystem::new(parse_list(w)?, parse_list(d)?)
    }
}

impl serde::Serialize for WeightSystem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for WeightSystem {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(text: &str) -> WeightSystem {
        text.parse().unwrap()
    }

    #[test]
    fn parse_display_round_trip() {
        assert_eq!(ws("6,14,21;42").to_string(), "6,14,21;42");
        assert_eq!(ws("6,8,9,10;16,18").to_string(), "6,8,9,10;16,18");
        assert!("6,14;42".parse::<WeightSystem>().is_err());
        assert!("0,1,1;2".parse::<WeightSystem>().is_err());
        assert!("6,14,21".parse::<WeightSystem>().is_err());
        // 5 is not in the semigroup generated by 2 alone... but is in <2,3,4>.
        assert!("4,6,8;5".parse::<WeightSystem>().is_err());
    }

    #[test]
    fn reduced_and_class_checks() {
        assert!(ws("6,14,21;42").is_reduced());
        assert!(!ws("2,4,6;12").is_reduced());
        assert!(ws("6,8,9,10;16,18").milnor_number() == Err(WeightError::WrongClass));
        assert!(matches!(
            ws("2,4,6;12").monodromy_frame(),
            Err(WeightError::Invalid(_))
        ));
    }

    #[test]
    fn milnor_numbers_of_the_fourteen() {
        let table = [
            ("6,14,21;42", 12),
            ("4,10,15;30", 13),
            ("3,8,12;24", 14),
            ("6,8,15;30", 11),
            ("4,6,11;22", 12),
            ("3,5,9;18", 13),
            ("6,8,9;24", 10),
            ("4,6,7;18", 11),
            ("3,5,6;15", 12),
            ("4,5,10;20", 12),
            ("3,4,8;16", 13),
            ("4,5,6;16", 11),
            ("3,4,5;13", 12),
            ("3,4,4;12", 12),
        ];
        for (system, mu) in table {
            assert_eq!(ws(system).milnor_number().unwrap(), mu, "{system}");
        }
        assert_eq!(ws("1,1,1;2").milnor_number().unwrap(), 1);
        assert_eq!(
            ws("2,3,4;5").milnor_number(),
            Err(WeightError::NonIntegerMilnorNumber)
        );
    }

    #[test]
    fn monodromy_frames_of_the_fourteen() {
        let table = [
            ("6,14,21;42", "2*3*7*42/1*6*14*21"),
            ("4,10,15;30", "2*3*30/1*6*15"),
            ("3,8,12;24", "2*3*24/1*6*8"),
            ("6,8,15;30", "2*5*30/1*10*15"),
            ("4,6,11;22", "2*22/1*11"),
            ("3,5,9;18", "2*18/1*6"),
            ("6,8,9;24", "3*4*24/1*8*12"),
            ("4,6,7;18", "3*18/1*9"),
            ("3,5,6;15", "3*15/1*5"),
            ("4,5,10;20", "2*5*20/1*4*10"),
            ("3,4,8;16", "2*16/1*4"),
            ("4,5,6;16", "4*16/1*8"),
            ("3,4,5;13", "13/1"),
            ("3,4,4;12", "4*12/1*3"),
        ];
        for (system, frame) in table {
            let w = ws(system);
            let pi = w.monodromy_frame().unwrap();
            assert_eq!(pi, FrameShape::parse(frame).unwrap(), "{system}");
            assert_eq!(
                pi.degree(),
                BigInt::from(w.milnor_number().unwrap()),
                "{system}"
            );
            assert_eq!(pi.order(), w.degrees()[0], "{system}");
            assert_eq!(pi.trace_power(1), BigInt::from(-1), "{system}");
        }
    }

    #[test]
    fn quadrilateral_frames_from_weights() {
        let table = [
            ("2,6,9;18", "2*3*18^2/1*6*9^2"),
            ("2,4,7;14", "2*14^2/1*7^2"),
            ("2,4,5;12", "3*12^2/1*6^2"),
            ("2,3,6;12", "2*12^2/1*4*6"),
            ("2,3,4;10", "10^2/1*5"),
            ("2,3,3;9", "9^2/1*3"),
        ];
        for (system, frame) in table {
            assert_eq!(
                ws(system).monodromy_frame().unwrap(),
                FrameShape::parse(frame).unwrap(),
                "{system}"
            );
        }
    }

    #[test]
    fn degenerate_expansion_is_flagged() {
        assert_eq!(
            ws("1,1,2;2").monodromy_frame(),
            Err(WeightError::Degenerate)
        );
        // (1,1,1;2) is the ordinary double point: frame 2/1, degree 1.
        assert_eq!(
            ws("1,1,1;2").monodromy_frame().unwrap(),
            FrameShape::parse("2/1").unwrap()
        );
    }

    #[test]
    fn saito_duality_between_weight_systems() {
        let pairs = [
            ("6,14,21;42", "6,14,21;42"),
            ("4,10,15;30", "6,8,15;30"),
            ("3,8,12;24", "6,8,9;24"),
            ("4,6,11;22", "4,6,11;22"),
            ("3,5,9;18", "4,6,7;18"),
            ("3,5,6;15", "3,5,6;15"),
            ("4,5,10;20", "4,5,10;20"),
            ("3,4,8;16", "4,5,6;16"),
            ("3,4,5;13", "3,4,5;13"),
            ("3,4,4;12", "3,4,4;12"),
        ];
        for (a, b) in pairs {
            let pa = ws(a).monodromy_frame().unwrap();
            let pb = ws(b).monodromy_frame().unwrap();
            assert_eq!(pa.saito_dual(), pb, "{a} vs {b}");
            assert_eq!(pb.saito_dual(), pa, "{b} vs {a}");
        }
    }
}
