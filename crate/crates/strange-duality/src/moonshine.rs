//! Exhaustive classification of the self-dual degree-24 frame shapes and the
//! pairing of catalog dualities against the 22-row table. A sequence
//! (chi_1, ..., chi_N) qualifies when all exponents are integers, the degree
//! sum(m chi_m) is 24, chi_m vanishes off the divisors of N, chi is
//! antisymmetric under m -> N/m, the product prod(m^chi_m) is a positive
//! integer, chi_1 is -2, -3 or -4, and |chi_m| <= |chi_N|.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::catalog::Catalog;
use crate::frameshape::{divisors, FrameShape};

/// All qualifying frame shapes with order at most `max_n`, ordered by
/// (order, exponent map).
pub fn search_sequences(max_n: u64) -> Vec<FrameShape> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let divs = divisors(n);
        let free: Vec<u64> = divs
            .iter()
            .copied()
            .filter(|&m| m > 1 && m * m < n)
            .collect();
        let mut found = Vec::new();
        for chi1 in [-2i64, -3, -4] {
            let base = chi1 * (1 - n as i64);
            let mut values = vec![0i64; free.len()];
            assign(n, chi1, &free, 0, base, &mut values, &mut found);
        }
        found.sort_by_key(|shape| {
            shape
                .exponents()
                .iter()
                .map(|(&m, &chi)| (m, chi))
                .collect::<Vec<_>>()
        });
        out.extend(found);
    }
    out
}

fn assign(
    n: u64,
    chi1: i64,
    free: &[u64],
    index: usize,
    degree: i64,
    values: &mut Vec<i64>,
    found: &mut Vec<FrameShape>,
) {
    if index == free.len() {
        if degree != 24 {
            return;
        }
        let mut map = BTreeMap::new();
        map.insert(1, chi1);
        map.insert(n, -chi1);
        for (&m, &chi) in free.iter().zip(values.iter()) {
            map.insert(m, chi);
            map.insert(n / m, -chi);
        }
        if !product_is_integral(&map) {
            return;
        }
        let shape = FrameShape::new(map, n).expect("divisor exponent map");
        found.push(shape);
        return;
    }
    let bound = chi1.abs();
    let m = free[index];
    let span = m as i64 - (n / m) as i64;
    for chi in -bound..=bound {
        values[index] = chi;
        assign(n, chi1, free, index + 1, degree + chi * span, values, found);
    }
}

/// Whether `prod m^{chi_m}` is an integer: every prime must occur with
/// non-negative total exponent.
fn product_is_integral(map: &BTreeMap<u64, i64>) -> bool {
    let mut primes: BTreeMap<u64, i64> = BTreeMap::new();
    for (&m, &chi) in map {
        let mut rest = m;
        let mut p = 2;
        while p * p <= rest {
            while rest % p == 0 {
                rest /= p;
                *primes.entry(p).or_insert(0) += chi;
            }
            p += 1;
        }
        if rest > 1 {
            *primes.entry(rest).or_insert(0) += chi;
        }
    }
    primes.values().all(|&e| e >= 0)
}

/// Pairs of result indices carrying the same exponent map at different
/// orders. The published search produces none; any collision is reported
/// rather than collapsed.
pub fn exponent_collisions(shapes: &[FrameShape]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..shapes.len() {
        for j in i + 1..shapes.len() {
            if shapes[i].exponents() == shapes[j].exponents()
                && shapes[i].order() != shapes[j].order()
            {
                out.push((i, j));
            }
        }
    }
    out
}

/// One catalog dual pair matched against the degree-24 table.
#[derive(Debug, Clone, Serialize)]
pub struct PairingRow {
    pub left: String,
    pub right: String,
    pub shape: FrameShape,
    pub self_dual: bool,
    pub degree24: bool,
    pub trace_ok: bool,
    pub table8_label: Option<String>,
}

/// Report of [`classify_pairings`]: every dual pair with its combined frame
/// shape, plus the table rows no pair produces.
#[derive(Debug, Clone, Serialize)]
pub struct PairingReport {
    pub pairings: Vec<PairingRow>,
    pub unmatched: Vec<String>,
}

/// Combine each catalog dual pair into the frame shape of its joint Milnor
/// lattice (reduced shapes on complete intersection sides), check the
/// qualifying conditions and look the shape up in the table.
pub fn classify_pairings(catalog: &Catalog) -> PairingReport {
    let mut pairings = Vec::new();
    let mut hit = vec![false; catalog.table8.len()];
    for (x, y) in catalog.duality_pairs() {
        let shape = x.pairing_frame().concatenate(y.pairing_frame());
        let label = catalog.table8.iter().position(|row| row.frame == shape);
        if let Some(i) = label {
            hit[i] = true;
        }
        pairings.push(PairingRow {
            left: x.name.clone(),
            right: y.name.clone(),
            self_dual: shape.is_self_dual(),
            degree24: shape.degree() == 24.into(),
            trace_ok: (-4..=-2).contains(&shape.exponent(1)),
            table8_label: label.map(|i| catalog.table8[i].atlas_label.clone()),
            shape,
        });
    }
    let unmatched = catalog
        .table8
        .iter()
        .zip(hit)
        .filter(|(_, h)| !h)
        .map(|(row, _)| row.atlas_label.clone())
        .collect();
    PairingReport {
        pairings,
        unmatched,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_searches() {
        assert!(search_sequences(1).is_empty());
        let upto13 = search_sequences(13);
        let strings: Vec<String> = upto13.iter().map(|s| s.to_string()).collect();
        assert!(strings.contains(&"13^2/1^2".to_string()));
        assert!(strings.contains(&"5^2*10^2/1^2*2^2".to_string()));
    }

    #[test]
    fn full_search_reproduces_the_published_list() {
        let shapes = search_sequences(119);
        assert_eq!(shapes.len(), 25);
        for shape in &shapes {
            assert!(shape.is_self_dual(), "{shape}");
            assert_eq!(shape.degree(), 24.into(), "{shape}");
            assert!((-4..=-2).contains(&shape.exponent(1)), "{shape}");
        }
        assert!(exponent_collisions(&shapes).is_empty());

        let cat = Catalog::get();
        let expected: HashSet<FrameShape> = cat
            .table8
            .iter()
            .map(|row| row.frame.clone())
            .chain(cat.kondo_extras.iter().cloned())
            .collect();
        let got: HashSet<FrameShape> = shapes.iter().cloned().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn search_is_monotone_in_the_bound() {
        let small: HashSet<FrameShape> = search_sequences(13).into_iter().collect();
        let large: HashSet<FrameShape> = search_sequences(42).into_iter().collect();
        assert!(small.is_subset(&large));
    }

    #[test]
    fn pairings_land_in_the_table() {
        let report = classify_pairings(Catalog::get());
        assert_eq!(report.pairings.len(), 24);
        for row in &report.pairings {
            assert!(row.self_dual && row.degree24 && row.trace_ok, "{}", row.left);
            assert!(row.table8_label.is_some(), "{} <-> {}", row.left, row.right);
        }
        let j10 = report
            .pairings
            .iter()
            .find(|row| row.left == "J'10" || row.right == "J'10")
            .unwrap();
        assert_eq!(j10.table8_label.as_deref(), Some("7B"));
        assert_eq!(j10.shape.to_string(), "2^3*14^3/1^3*7^3");
        assert_eq!(report.unmatched, ["10A", "15A", "12A"]);
    }
}
