//! Embedded catalog of the 33 singularities entering the duality: the 14
//! exceptional unimodal hypersurfaces, the 8 triangle complete intersections,
//! the 6 quadrilateral hypersurfaces and the 5 quadrilateral complete
//! intersections, together with the 22 self-dual degree-24 frame shapes
//! attached to Niemeier root systems and conjugacy classes in ATLAS notation.
//!
//! The data is loaded once from an embedded JSON file and checked against the
//! internal consistency invariants of the tables (frame orders and degrees,
//! discriminants, duality symmetry). A catalog that fails any invariant is
//! rejected at load time.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::frameshape::FrameShape;
use crate::lattice::{GramLattice, LatticeError};
use crate::weights::WeightSystem;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown singularity name: {0}")]
    UnknownName(String),
    #[error("no closed determinant formula for this variant")]
    NoFormula,
    #[error("invalid catalog: {0}")]
    Invalid(String),
}

/// Deformation class of a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "exceptional-unimodal")]
    ExceptionalUnimodal,
    #[serde(rename = "triangle-ICIS")]
    TriangleIcis,
    #[serde(rename = "quadrilateral-hypersurface")]
    QuadrilateralHypersurface,
    #[serde(rename = "quadrilateral-ICIS")]
    QuadrilateralIcis,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::ExceptionalUnimodal => "exceptional-unimodal",
            Family::TriangleIcis => "triangle-ICIS",
            Family::QuadrilateralHypersurface => "quadrilateral-hypersurface",
            Family::QuadrilateralIcis => "quadrilateral-ICIS",
        }
    }

    pub fn is_hypersurface(self) -> bool {
        matches!(
            self,
            Family::ExceptionalUnimodal | Family::QuadrilateralHypersurface
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Shape of the dual graph recorded for a Gabrielov variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StarSymbol {
    #[serde(rename = "star3")]
    Star3,
    #[serde(rename = "star4")]
    Star4,
}

impl StarSymbol {
    pub fn arity(self) -> usize {
        match self {
            StarSymbol::Star3 => 3,
            StarSymbol::Star4 => 4,
        }
    }
}

/// One recorded system of Gabrielov numbers. `underline[i]` marks the arms
/// that carry the extra vertex in the weighted graph; the marks select the
/// closed determinant formula in [`quad_determinant_formula`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GabVariant {
    pub symbol: StarSymbol,
    pub numbers: Vec<u64>,
    pub underline: Vec<bool>,
}

/// Virtual dual inside a hypersurface series, recorded for the complete
/// intersections only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDual {
    pub names: Vec<String>,
    pub h_star: Option<u64>,
    pub mu_star: u64,
}

/// One singularity with its invariants. Fields suffixed `_flat` hold the
/// reduced data obtained by splitting off the extra hyperbolic summand; they
/// are present exactly for the complete intersections.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingularityRecord {
    pub name: String,
    pub family: Family,
    pub equations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restrictions: Option<String>,
    pub weights: WeightSystem,
    pub dol: Vec<u64>,
    pub gab_variants: Vec<GabVariant>,
    pub mu: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu1: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<u64>,
    pub d: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_flat: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_flat: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame: Option<FrameShape>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame_flat: Option<FrameShape>,
    pub h: u64,
    pub duals: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series_dual: Option<SeriesDual>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disc_form: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disc_form_dual: Option<String>,
}

impl SingularityRecord {
    pub fn is_hypersurface(&self) -> bool {
        self.family.is_hypersurface()
    }

    /// Frame shape entering the duality pairing: the monodromy frame for a
    /// hypersurface, the reduced frame for a complete intersection.
    pub fn pairing_frame(&self) -> &FrameShape {
        if self.is_hypersurface() {
            self.frame.as_ref().expect("hypersurface record has a frame")
        } else {
            self.frame_flat
                .as_ref()
                .expect("complete intersection record has a reduced frame")
        }
    }
}

/// One row of the degree-24 frame shape table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table8Row {
    pub atlas_label: String,
    pub frame: FrameShape,
    pub mukai_star: bool,
    pub niemeier: Option<Vec<String>>,
    pub duality_pairs: Vec<[String; 2]>,
}

/// Outcome of a single verification check. Failures are reported as data,
/// never as panics.
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub label: String,
    pub passed: bool,
    pub details: String,
}

impl CheckOutcome {
    pub fn new(label: impl Into<String>, passed: bool, details: impl Into<String>) -> Self {
        CheckOutcome {
            label: label.into(),
            passed,
            details: details.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Catalog {
    pub singularities: Vec<SingularityRecord>,
    pub table8: Vec<Table8Row>,
    pub kondo_extras: Vec<FrameShape>,
    pub i10_gram: Vec<Vec<i64>>,
}

static CATALOG: OnceLock<Catalog> = OnceLock::new();
const CATALOG_JSON: &str = include_str!("data/catalog.json");

fn multiset(xs: &[u64]) -> Vec<u64> {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v
}

fn has_variant_matching(record: &SingularityRecord, dol: &[u64]) -> bool {
    let want = multiset(dol);
    record
        .gab_variants
        .iter()
        .any(|v| multiset(&v.numbers) == want)
}

/// Closed formula for the absolute discriminant of the Milnor lattice read
/// off a marked system of Gabrielov numbers. Only the marking patterns
/// occurring among the quadrilateral singularities admit one; all other
/// patterns yield [`CatalogError::NoFormula`].
pub fn quad_determinant_formula(variant: &GabVariant) -> Result<u64, CatalogError> {
    if variant.numbers.len() != variant.underline.len() {
        return Err(CatalogError::Invalid(
            "variant numbers and marks differ in length".into(),
        ));
    }
    let p: Vec<i64> = variant.numbers.iter().map(|&n| n as i64).collect();
    let value = match (p.as_slice(), variant.underline.as_slice()) {
        ([p1, p2, _], [false, false, true]) => 4 * (p1 * p2 - p1 - p2),
        ([p1, p2, p3], [false, true, true]) => (p1 - 1) * (p2 + p3),
        ([p1, p2, p3, _], [false, false, false, true]) => 4 * (p1 * p2 * p3 - p1 - p3),
        ([p1, p2, p3, p4], [false, false, true, true]) => {
            p1 * p2 * (p3 + p4 + 2) - p1 - p2 - p3 - p4
        }
        ([p1, p2, p3, p4], [false, true, false, true]) => p1 * p3 * (p2 + p4),
        _ => return Err(CatalogError::NoFormula),
    };
    u64::try_from(value)
        .map_err(|_| CatalogError::Invalid(format!("formula value {value} is negative")))
}

impl Catalog {
    /// The embedded catalog, loaded and validated once.
    pub fn get() -> &'static Catalog {
        CATALOG.get_or_init(|| {
            Catalog::from_json(CATALOG_JSON).expect("embedded catalog is valid")
        })
    }

    pub fn from_json(text: &str) -> Result<Catalog, CatalogError> {
        let catalog: Catalog =
            serde_json::from_str(text).map_err(|e| CatalogError::Invalid(e.to_string()))?;
        catalog.validate()?;
        Ok(catalog)
    }

    pub fn records(&self) -> &[SingularityRecord] {
        &self.singularities
    }

    pub fn family(&self, family: Family) -> impl Iterator<Item = &SingularityRecord> {
        self.singularities
            .iter()
            .filter(move |r| r.family == family)
    }

    pub fn lookup(&self, name: &str) -> Result<&SingularityRecord, CatalogError> {
        let name = name.trim();
        self.singularities
            .iter()
            .find(|r| r.name == name)
            .ok_or_else(|| CatalogError::UnknownName(name.to_string()))
    }

    pub fn dual_of(&self, name: &str) -> Result<Vec<&SingularityRecord>, CatalogError> {
        let record = self.lookup(name)?;
        record.duals.iter().map(|n| self.lookup(n)).collect()
    }

    /// Row of the degree-24 table whose frame shape equals `shape`, if any.
    pub fn table8_match(&self, shape: &FrameShape) -> Option<&Table8Row> {
        self.table8.iter().find(|row| &row.frame == shape)
    }

    /// Lattice built from the embedded quadrilateral fixture Gram matrix.
    pub fn i10_lattice(&self) -> Result<GramLattice, LatticeError> {
        GramLattice::from_i64(&self.i10_gram)
    }

    /// All unordered duality pairs, in catalog order.
    pub fn duality_pairs(&self) -> Vec<(&SingularityRecord, &SingularityRecord)> {
        let mut seen = BTreeSet::new();
        let mut pairs = Vec::new();
        for record in &self.singularities {
            for dual_name in &record.duals {
                let Ok(dual) = self.lookup(dual_name) else {
                    continue;
                };
                let key = if record.name <= dual.name {
                    (record.name.clone(), dual.name.clone())
                } else {
                    (dual.name.clone(), record.name.clone())
                };
                if seen.insert(key) {
                    pairs.push((record, dual));
                }
            }
        }
        pairs
    }

    /// Checks of the classical duality on the 14 exceptional unimodal
    /// singularities: Dolgachev and Gabrielov numbers exchange, Coxeter
    /// numbers agree, Milnor numbers sum to 24 and discriminants agree.
    pub fn verify_arnold(&self) -> Vec<CheckOutcome> {
        let mut out = Vec::new();
        for (x, y) in self.duality_pairs() {
            if x.family != Family::ExceptionalUnimodal || y.family != Family::ExceptionalUnimodal
            {
                continue;
            }
            let tag = format!("{} <-> {}", x.name, y.name);
            out.push(CheckOutcome::new(
                format!("arnold: {tag}: dol/gab exchange"),
                has_variant_matching(y, &x.dol) && has_variant_matching(x, &y.dol),
                format!("dol {:?} against gab of the partner", x.dol),
            ));
            out.push(CheckOutcome::new(
                format!("arnold: {tag}: equal Coxeter numbers"),
                x.h == y.h,
                format!("h = {} and {}", x.h, y.h),
            ));
            out.push(CheckOutcome::new(
                format!("arnold: {tag}: Milnor numbers sum to 24"),
                x.mu + y.mu == 24,
                format!("mu {} + mu {} = {}", x.mu, y.mu, x.mu + y.mu),
            ));
            out.push(CheckOutcome::new(
                format!("arnold: {tag}: equal discriminants"),
                x.d == y.d,
                format!("d = {} and {}", x.d, y.d),
            ));
        }
        out
    }

    /// Checks of the extended duality on the 19 remaining records, in raw
    /// and reduced form.
    pub fn verify_extension(&self) -> Vec<CheckOutcome> {
        let mut out = Vec::new();
        for (x, y) in self.duality_pairs() {
            let (icis, partner) = match (x.family, y.family) {
                (Family::ExceptionalUnimodal, _) | (_, Family::ExceptionalUnimodal) => continue,
                (Family::TriangleIcis, Family::QuadrilateralHypersurface) => (x, y),
                (Family::QuadrilateralHypersurface, Family::TriangleIcis) => (y, x),
                (Family::QuadrilateralIcis, Family::QuadrilateralIcis) => (x, y),
                _ => {
                    out.push(CheckOutcome::new(
                        format!("extension: {} <-> {}: family pairing", x.name, y.name),
                        false,
                        format!("unexpected pairing {} with {}", x.family, y.family),
                    ));
                    continue;
                }
            };
            let tag = format!("{} <-> {}", icis.name, partner.name);
            let raw_target = if partner.is_hypersurface() { 25 } else { 26 };
            out.push(CheckOutcome::new(
                format!("extension: {tag}: raw Milnor numbers sum to {raw_target}"),
                icis.mu + partner.mu == raw_target,
                format!("mu {} + mu {} = {}", icis.mu, partner.mu, icis.mu + partner.mu),
            ));
            let icis_mu_flat = icis.mu_flat.unwrap_or(icis.mu);
            let partner_mu_flat = partner.mu_flat.unwrap_or(partner.mu);
            out.push(CheckOutcome::new(
                format!("extension: {tag}: reduced Milnor numbers sum to 24"),
                icis_mu_flat + partner_mu_flat == 24,
                format!(
                    "mu {} + mu {} = {}",
                    icis_mu_flat,
                    partner_mu_flat,
                    icis_mu_flat + partner_mu_flat
                ),
            ));
            let icis_d_flat = icis.d_flat.unwrap_or(icis.d);
            let partner_d_flat = partner.d_flat.unwrap_or(partner.d);
            out.push(CheckOutcome::new(
                format!("extension: {tag}: equal reduced discriminants"),
                icis_d_flat == partner_d_flat,
                format!("d = {icis_d_flat} and {partner_d_flat}"),
            ));
            out.push(CheckOutcome::new(
                format!("extension: {tag}: equal Coxeter numbers"),
                icis.h == partner.h,
                format!("h = {} and {}", icis.h, partner.h),
            ));
            out.push(CheckOutcome::new(
                format!("extension: {tag}: dol/gab exchange"),
                has_variant_matching(partner, &icis.dol)
                    && has_variant_matching(icis, &partner.dol),
                format!("dol {:?} and {:?} against partner gab", icis.dol, partner.dol),
            ));
            let dual_frame = partner.pairing_frame().saito_dual();
            out.push(CheckOutcome::new(
                format!("extension: {tag}: Saito dual frames"),
                &dual_frame == icis.pairing_frame(),
                format!(
                    "dual of {} is {}, reduced frame is {}",
                    partner.pairing_frame(),
                    dual_frame,
                    icis.pairing_frame()
                ),
            ));
        }
        out
    }

    fn validate(&self) -> Result<(), CatalogError> {
        let fail = |msg: String| Err(CatalogError::Invalid(msg));
        let mut names = BTreeSet::new();
        for r in &self.singularities {
            if r.name.is_empty() || !names.insert(r.name.clone()) {
                return fail(format!("empty or duplicate name {:?}", r.name));
            }
        }
        for r in &self.singularities {
            let n = &r.name;
            let hyp = r.is_hypersurface();
            if r.equations.len() != if hyp { 1 } else { 2 } {
                return fail(format!("{n}: wrong number of equations"));
            }
            if r.weights.is_hypersurface() != hyp {
                return fail(format!("{n}: weight system class does not match family"));
            }
            if r.h != *r.weights.degrees().last().expect("degrees nonempty") {
                return fail(format!("{n}: h differs from the top degree"));
            }
            if hyp {
                if r.frame.is_none() {
                    return fail(format!("{n}: hypersurface record without frame"));
                }
                if r.mu1.is_some()
                    || r.nu.is_some()
                    || r.mu_flat.is_some()
                    || r.d_flat.is_some()
                    || r.frame_flat.is_some()
                    || r.series_dual.is_some()
                {
                    return fail(format!("{n}: hypersurface record with reduced data"));
                }
            } else {
                let (Some(mu1), Some(nu), Some(mu_flat), Some(_), Some(_), Some(series)) = (
                    r.mu1,
                    r.nu,
                    r.mu_flat,
                    r.d_flat,
                    r.frame_flat.as_ref(),
                    r.series_dual.as_ref(),
                ) else {
                    return fail(format!(
                        "{n}: complete intersection record lacks reduced data"
                    ));
                };
                if mu_flat != r.mu - 1 {
                    return fail(format!("{n}: reduced Milnor number is not mu - 1"));
                }
                if nu != r.mu + mu1 {
                    return fail(format!("{n}: nu differs from mu + mu1"));
                }
                match r.family {
                    Family::TriangleIcis => {
                        let [n1, n2] = r.weights.degrees() else {
                            return fail(format!("{n}: expected two degrees"));
                        };
                        if series.h_star != Some(n1.lcm(n2)) {
                            return fail(format!("{n}: series dual order is not lcm(N1,N2)"));
                        }
                    }
                    Family::QuadrilateralIcis => {
                        if series.h_star.is_some() {
                            return fail(format!("{n}: unexpected series dual order"));
                        }
                    }
                    _ => unreachable!("non-hypersurface families"),
                }
            }
            for (frame, mu, d, what) in [
                (r.frame.as_ref(), r.mu, r.d, "frame"),
                (
                    r.frame_flat.as_ref(),
                    r.mu_flat.unwrap_or(r.mu),
                    r.d_flat.unwrap_or(r.d),
                    "reduced frame",
                ),
            ] {
                let Some(frame) = frame else { continue };
                if frame.order() != r.h {
                    return fail(format!("{n}: {what} order differs from h"));
                }
                if frame.degree() != BigInt::from(mu) {
                    return fail(format!("{n}: {what} degree differs from Milnor number"));
                }
                let value = frame
                    .value_at_one()
                    .map_err(|e| CatalogError::Invalid(format!("{n}: {what} at 1: {e}")))?;
                let sign = if mu % 2 == 0 { 1 } else { -1 };
                if value * BigRational::from_integer(BigInt::from(sign))
                    != BigRational::from_integer(BigInt::from(d))
                {
                    return fail(format!("{n}: {what} does not reproduce the discriminant"));
                }
            }
            let (dol_len, symbol) = match r.family {
                Family::ExceptionalUnimodal => (3, StarSymbol::Star3),
                Family::TriangleIcis => (3, StarSymbol::Star4),
                Family::QuadrilateralHypersurface => (4, StarSymbol::Star3),
                Family::QuadrilateralIcis => (4, StarSymbol::Star4),
            };
            if r.dol.len() != dol_len || r.dol.iter().any(|&p| p < 2) {
                return fail(format!("{n}: malformed Dolgachev numbers"));
            }
            if r.gab_variants.is_empty() {
                return fail(format!("{n}: no Gabrielov numbers"));
            }
            for v in &r.gab_variants {
                if v.symbol != symbol
                    || v.numbers.len() != symbol.arity()
                    || v.underline.len() != v.numbers.len()
                    || v.numbers.iter().any(|&p| p < 2)
                {
                    return fail(format!("{n}: malformed Gabrielov numbers"));
                }
            }
            if r.duals.is_empty() {
                return fail(format!("{n}: no duals"));
            }
            for dual_name in &r.duals {
                let dual = self
                    .lookup(dual_name)
                    .map_err(|_| CatalogError::Invalid(format!("{n}: unresolved dual {dual_name}")))?;
                if !dual.duals.contains(&r.name) {
                    return fail(format!("{n}: duality with {dual_name} is not symmetric"));
                }
            }
        }
        let mut labels = BTreeSet::new();
        for row in &self.table8 {
            let label = &row.atlas_label;
            if label.is_empty() || !labels.insert(label.clone()) {
                return fail(format!("empty or duplicate table row label {label:?}"));
            }
            if row.frame.degree() != BigInt::from(24) {
                return fail(format!("table row {label}: frame degree is not 24"));
            }
            if !row.frame.is_self_dual() {
                return fail(format!("table row {label}: frame is not self-dual"));
            }
            if !(-4..=-2).contains(&row.frame.exponent(1)) {
                return fail(format!("table row {label}: exponent of 1 outside -4..-2"));
            }
            for pair in &row.duality_pairs {
                for name in pair {
                    self.lookup(name).map_err(|_| {
                        CatalogError::Invalid(format!("table row {label}: unknown name {name}"))
                    })?;
                }
            }
        }
        for extra in &self.kondo_extras {
            if extra.degree() != BigInt::from(24) || !extra.is_self_dual() {
                return fail(format!("extra shape {extra} is not a self-dual degree-24 shape"));
            }
            if self.table8_match(extra).is_some() {
                return fail(format!("extra shape {extra} duplicates a table row"));
            }
        }
        if self.i10_gram.len() != 15 || self.i10_gram.iter().any(|row| row.len() != 15) {
            return fail("fixture Gram matrix is not 15 x 15".into());
        }
        for i in 0..15 {
            if self.i10_gram[i][i] != -2 {
                return fail("fixture Gram matrix diagonal is not -2".into());
            }
            for j in 0..i {
                if self.i10_gram[i][j] != self.i10_gram[j][i] {
                    return fail("fixture Gram matrix is not symmetric".into());
                }
            }
        }
        Ok(())
    }
}
