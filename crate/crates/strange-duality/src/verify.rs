//! Verification suites behind the `verify` subcommand. Every suite recomputes
//! its claims from first principles with the library operations and returns
//! plain outcomes; failures are data for the caller, never panics.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::catalog::{quad_determinant_formula, Catalog, CatalogError, CheckOutcome, Family};
use crate::etaq::{saito_identity_residual, UpperHalfPoint};
use crate::frameshape::FrameShape;
use crate::lattice::{coxeter_frame_of_root_system, GramLattice};
use crate::magicsquare::{
    counting_obstruction, enumerate_duals, find_generalized_magic, Convention,
};
use crate::moonshine::{classify_pairings, exponent_collisions, search_sequences};
use crate::poly::IntPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Arnold,
    Extension,
    Lattices,
    Frames,
    Eta,
    Kobayashi,
    Moonshine,
}

pub const ALL_SUITES: [Suite; 7] = [
    Suite::Arnold,
    Suite::Extension,
    Suite::Lattices,
    Suite::Frames,
    Suite::Eta,
    Suite::Kobayashi,
    Suite::Moonshine,
];

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Arnold => "arnold",
            Suite::Extension => "extension",
            Suite::Lattices => "lattices",
            Suite::Frames => "frames",
            Suite::Eta => "eta",
            Suite::Kobayashi => "kobayashi",
            Suite::Moonshine => "moonshine",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Arnold => {
                "classical duality on the 14 exceptional singularities: number exchange, \
                 monodromy frames and Milnor numbers from weights, Saito duality"
            }
            Suite::Extension => {
                "extended duality on the 19 remaining records: raw and reduced sums, \
                 Saito duality of reduced frames, discriminants from frame shapes"
            }
            Suite::Lattices => {
                "dual graph ranks and determinants against Milnor data, closed \
                 determinant formulas, Coxeter element of the embedded fixture"
            }
            Suite::Frames => {
                "Coxeter frames of Niemeier root systems and table membership of \
                 every dual pair"
            }
            Suite::Eta => "Dedekind eta identity residuals for all catalog frame shapes",
            Suite::Kobayashi => {
                "dual weight system enumeration for the 14 exceptional weight systems \
                 and generalized magic square reports"
            }
            Suite::Moonshine => "exhaustive search for self-dual degree-24 frame shapes",
        }
    }

    pub fn run(self, catalog: &Catalog) -> Vec<CheckOutcome> {
        match self {
            Suite::Arnold => arnold_suite(catalog),
            Suite::Extension => extension_suite(catalog),
            Suite::Lattices => lattices_suite(catalog),
            Suite::Frames => frames_suite(catalog),
            Suite::Eta => eta_suite(catalog),
            Suite::Kobayashi => kobayashi_suite(catalog),
            Suite::Moonshine => moonshine_suite(catalog),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        ALL_SUITES
            .into_iter()
            .find(|s| s.name() == text)
            .ok_or_else(|| format!("unknown suite {text:?}"))
    }
}

/// Run the named suites in order, returning (suite, outcomes) pairs.
pub fn run_suites(suites: &[Suite], catalog: &Catalog) -> Vec<(Suite, Vec<CheckOutcome>)> {
    suites.iter().map(|&s| (s, s.run(catalog))).collect()
}

fn arnold_suite(catalog: &Catalog) -> Vec<CheckOutcome> {
    let mut out = catalog.verify_arnold();
    for record in catalog.family(Family::ExceptionalUnimodal) {
        let name = &record.name;
        let stored = record.frame.as_ref().expect("hypersurface frame");
        match record.weights.monodromy_frame() {
            Ok(computed) => {
                out.push(CheckOutcome::new(
                    format!("oracle: {name}: monodromy frame from weights"),
                    &computed == stored,
                    format!("computed {computed}, stored {stored}"),
                ));
                let dual_name = &record.duals[0];
                let dual_frame = catalog
                    .lookup(dual_name)
                    .expect("validated dual")
                    .frame
                    .clone()
                    .expect("hypersurface frame");
                let saito = computed.saito_dual();
                out.push(CheckOutcome::new(
                    format!("saito: {name}: dual frame is the frame of {dual_name}"),
                    saito == dual_frame,
                    format!("dual of {computed} is {saito}, stored {dual_frame}"),
                ));
            }
            Err(e) => out.push(CheckOutcome::new(
                format!("oracle: {name}: monodromy frame from weights"),
                false,
                format!("computation failed: {e}"),
            )),
        }
        match record.weights.milnor_number() {
            Ok(mu) => out.push(CheckOutcome::new(
                format!("oracle: {name}: Milnor number from weights"),
                mu == record.mu,
                format!("computed {mu}, stored {}", record.mu),
            )),
            Err(e) => out.push(CheckOutcome::new(
                format!("oracle: {name}: Milnor number from weights"),
                false,
                format!("computation failed: {e}"),
            )),
        }
    }
    out
}

fn extension_suite(catalog: &Catalog) -> Vec<CheckOutcome> {
    let mut out = catalog.verify_extension();
    for record in catalog.family(Family::QuadrilateralHypersurface) {
        let name = &record.name;
        let stored = record.frame.as_ref().expect("hypersurface frame");
        match record.weights.monodromy_frame() {
            Ok(computed) => out.push(CheckOutcome::new(
                format!("oracle: {name}: monodromy frame from weights"),
                &computed == stored,
                format!("computed {computed}, stored {stored}"),
            )),
            Err(e) => out.push(CheckOutcome::new(
                format!("oracle: {name}: monodromy frame from weights"),
                false,
                format!("computation failed: {e}"),
            )),
        }
    }
    for record in catalog.records() {
        let name = &record.name;
        for (frame, mu, d, what) in [
            (record.frame.as_ref(), record.mu, record.d, "frame"),
            (
                record.frame_flat.as_ref(),
                record.mu_flat.unwrap_or(record.mu),
                record.d_flat.unwrap_or(record.d),
                "reduced frame",
            ),
        ] {
            let Some(frame) = frame else { continue };
            let outcome = match frame.value_at_one() {
                Ok(value) => {
                    let sign = BigInt::from(if mu % 2 == 0 { 1i64 } else { -1i64 });
                    let signed = value * num_rational::BigRational::from_integer(sign);
                    CheckOutcome::new(
                        format!("discriminant: {name}: {what} value at 1"),
                        signed == num_rational::BigRational::from_integer(BigInt::from(d)),
                        format!("(-1)^{mu} * {frame}(1) = {signed}, stored d = {d}"),
                    )
                }
                Err(e) => CheckOutcome::new(
                    format!("discriminant: {name}: {what} value at 1"),
                    false,
                    format!("evaluation failed: {e}"),
                ),
            };
            out.push(outcome);
        }
    }
    out
}

fn star_for(numbers: &[u64]) -> Option<GramLattice> {
    match numbers {
        [a, b, c] => Some(GramLattice::star3(*a, *b, *c)),
        [a, b, c, d] => Some(GramLattice::star4(*a, *b, *c, *d)),
        _ => None,
    }
}

fn lattices_suite(catalog: &Catalog) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for record in catalog.records() {
        let name = &record.name;
        let Some(star) = star_for(&record.dol) else {
            out.push(CheckOutcome::new(
                format!("pinkham: {name}: dual graph"),
                false,
                "Dolgachev numbers are neither a triple nor a quadruple",
            ));
            continue;
        };
        let rank = star.rank() as u64;
        out.push(CheckOutcome::new(
            format!("pinkham: {name}: rank plus Milnor number is 22"),
            rank + record.mu == 22,
            format!("rank {rank} + mu {} = {}", record.mu, rank + record.mu),
        ));
        let det = star.determinant();
        let expected = BigInt::from(record.d.unsigned_abs());
        let det_abs = if det < BigInt::from(0) { -det.clone() } else { det.clone() };
        out.push(CheckOutcome::new(
            format!("pinkham: {name}: dual graph determinant"),
            det_abs == expected,
            format!("|det| = {det_abs}, |d| = {expected}"),
        ));
    }
    let u = GramLattice::hyperbolic_u();
    for record in catalog.family(Family::ExceptionalUnimodal) {
        let name = &record.name;
        let gab = &record.gab_variants[0].numbers;
        let Some(star) = star_for(gab) else { continue };
        let det = star.direct_sum(&u).determinant();
        out.push(CheckOutcome::new(
            format!("pinkham: {name}: Milnor lattice determinant"),
            det == BigInt::from(record.d),
            format!("det(gab graph + U) = {det}, d = {}", record.d),
        ));
    }
    for record in catalog.family(Family::QuadrilateralHypersurface) {
        let name = &record.name;
        let Some(star) = star_for(&record.dol) else { continue };
        let det = star.direct_sum(&u).determinant();
        let dual_d_flat = record
            .duals
            .first()
            .and_then(|n| catalog.lookup(n).ok())
            .and_then(|r| r.d_flat);
        let Some(d_flat) = dual_d_flat else {
            out.push(CheckOutcome::new(
                format!("pinkham: {name}: dual reduced discriminant"),
                false,
                "dual record lacks reduced data",
            ));
            continue;
        };
        out.push(CheckOutcome::new(
            format!("pinkham: {name}: dol graph + U meets the dual reduced discriminant"),
            det == BigInt::from(d_flat),
            format!("det = {det}, reduced d of dual = {d_flat}"),
        ));
    }
    let mut formula_checks = 0;
    for record in catalog.records() {
        for (i, variant) in record.gab_variants.iter().enumerate() {
            match quad_determinant_formula(variant) {
                Ok(value) => {
                    formula_checks += 1;
                    out.push(CheckOutcome::new(
                        format!("formula: {} variant {}", record.name, i + 1),
                        value == record.d.unsigned_abs(),
                        format!("formula value {value}, |d| = {}", record.d.unsigned_abs()),
                    ));
                }
                Err(CatalogError::NoFormula) => {}
                Err(e) => out.push(CheckOutcome::new(
                    format!("formula: {} variant {}", record.name, i + 1),
                    false,
                    format!("unexpected error: {e}"),
                )),
            }
        }
    }
    out.push(CheckOutcome::new(
        "formula: fifteen marked variants admit one",
        formula_checks == 15,
        format!("{formula_checks} variants evaluated"),
    ));
    out.extend(i10_fixture_checks(catalog));
    out
}

/// Coxeter element of the embedded 15-vertex fixture: characteristic
/// polynomial of degree nu, and after removing (x-1)^(nu-mu) the frame
/// decomposition at the monodromy order must reproduce the catalog frame.
pub fn i10_fixture_checks(catalog: &Catalog) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let record = match catalog.lookup("I1,0") {
        Ok(r) => r,
        Err(e) => {
            return vec![CheckOutcome::new(
                "fixture: catalog record",
                false,
                format!("{e}"),
            )]
        }
    };
    let lattice = match catalog.i10_lattice() {
        Ok(l) => l,
        Err(e) => {
            return vec![CheckOutcome::new(
                "fixture: Gram matrix",
                false,
                format!("embedded matrix rejected: {e}"),
            )]
        }
    };
    let report = match lattice.coxeter_element() {
        Ok(r) => r,
        Err(e) => {
            return vec![CheckOutcome::new(
                "fixture: Coxeter element",
                false,
                format!("computation failed: {e}"),
            )]
        }
    };
    let nu = record.nu.unwrap_or(record.mu) as usize;
    let degree = report.char_poly.degree();
    out.push(CheckOutcome::new(
        "fixture: characteristic polynomial degree",
        degree == Some(nu),
        format!("degree {degree:?}, expected {nu}"),
    ));
    let mut reduced = report.char_poly.clone();
    let linear = IntPolynomial::lambda_pow_minus_one(1);
    let mut ok = true;
    for _ in 0..nu.saturating_sub(record.mu as usize) {
        match reduced.div_exact(&linear) {
            Some(q) => reduced = q,
            None => {
                ok = false;
                break;
            }
        }
    }
    if !ok {
        out.push(CheckOutcome::new(
            "fixture: reduced frame",
            false,
            format!(
                "transcription suspect: (x - 1)^(nu - mu) does not divide {}",
                report.char_poly
            ),
        ));
        return out;
    }
    let stored = record.frame.as_ref().expect("fixture record has a frame");
    match FrameShape::from_char_poly(&reduced, record.h) {
        Ok(frame) => out.push(CheckOutcome::new(
            "fixture: reduced frame",
            &frame == stored,
            format!("computed {frame}, stored {stored}"),
        )),
        Err(e) => out.push(CheckOutcome::new(
            "fixture: reduced frame",
            false,
            format!(
                "transcription suspect: reduced polynomial {reduced} does not decompose at order {}: {e}",
                record.h
            ),
        )),
    }
    out
}

fn frames_suite(catalog: &Catalog) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for row in &catalog.table8 {
        let Some(symbols) = &row.niemeier else { continue };
        let expr = symbols.join("+");
        match coxeter_frame_of_root_system(&expr) {
            Ok(frame) => out.push(CheckOutcome::new(
                format!("niemeier: {}: Coxeter frame of {expr}", row.atlas_label),
                frame == row.frame,
                format!("computed {frame}, table {}", row.frame),
            )),
            Err(e) => out.push(CheckOutcome::new(
                format!("niemeier: {}: Coxeter frame of {expr}", row.atlas_label),
                false,
                format!("computation failed: {e}"),
            )),
        }
    }
    let report = classify_pairings(catalog);
    for row in &report.pairings {
        out.push(CheckOutcome::new(
            format!("pairing: {} <-> {}", row.left, row.right),
            row.self_dual && row.degree24 && row.trace_ok && row.table8_label.is_some(),
            match &row.table8_label {
                Some(label) => format!("{} lands on row {label}", row.shape),
                None => format!("{} matches no table row", row.shape),
            },
        ));
    }
    out.push(CheckOutcome::new(
        "pairing: unmatched rows",
        report.unmatched == ["10A", "15A", "12A"],
        format!("unmatched: {}", report.unmatched.join(", ")),
    ));
    out
}

fn eta_suite(catalog: &Catalog) -> Vec<CheckOutcome> {
    let samples = [
        UpperHalfPoint::new(0.0, 1.0).expect("guarded"),
        UpperHalfPoint::new(0.3, 1.7).expect("guarded"),
        UpperHalfPoint::new(-0.4, 0.9).expect("guarded"),
    ];
    let mut out = Vec::new();
    for record in catalog.records() {
        for (frame, what) in [
            (record.frame.as_ref(), "frame"),
            (record.frame_flat.as_ref(), "reduced frame"),
        ] {
            let Some(frame) = frame else { continue };
            let mut worst: f64 = 0.0;
            let mut failure = None;
            for point in samples {
                match saito_identity_residual(frame, point) {
                    Ok(residual) => worst = worst.max(residual),
                    Err(e) => failure = Some(format!("{point}: {e}")),
                }
            }
            let label = format!("eta: {}: {what} identity residual", record.name);
            out.push(match failure {
                Some(msg) => CheckOutcome::new(label, false, msg),
                None => CheckOutcome::new(
                    label,
                    worst < 1e-8,
                    format!("max residual {worst:.3e} over {} points", samples.len()),
                ),
            });
        }
    }
    out
}

fn kobayashi_suite(catalog: &Catalog) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for record in catalog.family(Family::ExceptionalUnimodal) {
        let duals = enumerate_duals(&record.weights);
        let expected = catalog
            .lookup(&record.duals[0])
            .expect("validated dual")
            .weights
            .clone();
        let found: Vec<String> = duals.iter().map(|w| w.to_string()).collect();
        out.push(CheckOutcome::new(
            format!("kobayashi: {}: unique dual weight system", record.name),
            duals.len() == 1 && duals[0] == expected,
            format!("found [{}], expected {expected}", found.join(", ")),
        ));
    }
    let named_pairs = [
        ("J'10", "Z1,0"),
        ("K'11", "S1,0"),
        ("J'2,0", "J'2,0"),
        ("M1,0", "M1,0"),
    ];
    for (left_name, right_name) in named_pairs {
        let (Ok(left), Ok(right)) = (catalog.lookup(left_name), catalog.lookup(right_name))
        else {
            out.push(CheckOutcome::new(
                format!("kobayashi: {left_name} <-> {right_name}: generalized search"),
                false,
                "names missing from catalog",
            ));
            continue;
        };
        let mut notes = Vec::new();
        let mut primitive_total = 0usize;
        for convention in [Convention::Square4x4, Convention::Rect3x4, Convention::Rect4x3] {
            let Ok(magic) = find_generalized_magic(&left.weights, &right.weights, convention)
            else {
                continue;
            };
            let primitive = magic.iter().filter(|q| q.is_primitive()).count();
            primitive_total += primitive;
            notes.push(format!(
                "{convention}: {} magic, {primitive} primitive",
                magic.len()
            ));
        }
        if let Some((lhs, rhs)) = counting_obstruction(&left.weights, &right.weights) {
            notes.push(format!("degree balance fails: {lhs} != {rhs}"));
        }
        if primitive_total == 0 {
            notes.push("flag: no convention produces a primitive square".into());
        }
        out.push(CheckOutcome::new(
            format!("kobayashi: {left_name} <-> {right_name}: generalized search"),
            true,
            notes.join("; "),
        ));
    }
    out
}

fn moonshine_suite(catalog: &Catalog) -> Vec<CheckOutcome> {
    let shapes = search_sequences(119);
    let mut out = Vec::new();
    out.push(CheckOutcome::new(
        "moonshine: search size",
        shapes.len() == 25,
        format!("{} shapes found, expected 25", shapes.len()),
    ));
    let qualifying = shapes.iter().all(|s| {
        s.is_self_dual() && s.degree() == BigInt::from(24) && (-4..=-2).contains(&s.exponent(1))
    });
    out.push(CheckOutcome::new(
        "moonshine: all results qualify",
        qualifying,
        "self-dual, degree 24, trace in {-2,-3,-4}",
    ));
    let mut expected: Vec<FrameShape> = catalog
        .table8
        .iter()
        .map(|row| row.frame.clone())
        .chain(catalog.kondo_extras.iter().cloned())
        .collect();
    let mut found = shapes.clone();
    let key = |s: &FrameShape| (s.order(), s.to_string());
    expected.sort_by_key(key);
    found.sort_by_key(key);
    out.push(CheckOutcome::new(
        "moonshine: search matches the 22 table rows plus 3 extras",
        expected == found,
        format!("{} of {} shapes line up",
            expected.iter().zip(&found).filter(|(a, b)| a == b).count(),
            expected.len().max(found.len())),
    ));
    out.push(CheckOutcome::new(
        "moonshine: no exponent collisions across orders",
        exponent_collisions(&shapes).is_empty(),
        "each exponent map occurs at one order",
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in ALL_SUITES {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn fast_suites_pass() {
        let catalog = Catalog::get();
        for suite in [Suite::Arnold, Suite::Extension, Suite::Lattices, Suite::Frames] {
            let outcomes = suite.run(catalog);
            assert!(!outcomes.is_empty());
            for check in &outcomes {
                assert!(check.passed, "{}: {}", check.label, check.details);
            }
        }
    }

    #[test]
    fn eta_suite_passes() {
        for check in Suite::Eta.run(Catalog::get()) {
            assert!(check.passed, "{}: {}", check.label, check.details);
        }
    }

    #[test]
    fn kobayashi_suite_passes() {
        let outcomes = Suite::Kobayashi.run(Catalog::get());
        assert_eq!(outcomes.len(), 18);
        for check in &outcomes {
            assert!(check.passed, "{}: {}", check.label, check.details);
        }
        let j2 = outcomes
            .iter()
            .find(|c| c.label.contains("J'2,0"))
            .unwrap();
        assert!(j2.details.contains("5 magic, 0 primitive"));
        assert!(j2.details.contains("flag"));
        let m1 = outcomes.iter().find(|c| c.label.contains("M1,0")).unwrap();
        assert!(m1.details.contains("4 primitive"));
    }

    #[test]
    fn moonshine_suite_passes() {
        for check in Suite::Moonshine.run(Catalog::get()) {
            assert!(check.passed, "{}: {}", check.label, check.details);
        }
    }
}
