//! Standalone property suites: frame shape round-trips, dual involution,
//! concatenation additivity, magic square transpose symmetry, Smith normal
//! form, and direct sum invariants. Each property runs over the whole
//! catalog and over randomized small instances.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use strange_duality::catalog::Family;
use strange_duality::magicsquare::find_magic_squares;
use strange_duality::poly::IntPolynomial;
use strange_duality::{Catalog, FrameShape, GramLattice, WeightSystem};

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn frame_strategy() -> impl Strategy<Value = FrameShape> {
    (1u64..=60).prop_flat_map(|h| {
        let divs = divisors(h);
        let len = divs.len();
        proptest::collection::vec(-3i64..=3, len).prop_map(move |chis| {
            let map: BTreeMap<u64, i64> = divs.iter().copied().zip(chis).collect();
            FrameShape::new(map, h).expect("divisor keys")
        })
    })
}

fn cyclotomic_product_strategy() -> impl Strategy<Value = IntPolynomial> {
    proptest::collection::btree_map(1u64..=16, 1u32..=2, 1..=3).prop_map(|factors| {
        let mut poly = IntPolynomial::one();
        for (d, a) in factors {
            poly = poly.mul(&IntPolynomial::cyclotomic(d).pow(a));
        }
        poly
    })
}

fn weight_strategy() -> impl Strategy<Value = WeightSystem> {
    (
        proptest::collection::vec(1u64..=4, 3),
        proptest::collection::vec(0u64..=2, 3),
    )
        .prop_filter_map("degenerate weight system", |(w, coef)| {
            let n: u64 = w.iter().zip(&coef).map(|(wi, c)| wi * c).sum();
            if n == 0 {
                return None;
            }
            WeightSystem::hypersurface(w[0], w[1], w[2], n).ok()
        })
}

fn symmetric_strategy(max_rank: usize) -> impl Strategy<Value = GramLattice> {
    (1..=max_rank).prop_flat_map(|n| {
        proptest::collection::vec(-4i64..=4, n * (n + 1) / 2).prop_map(move |upper| {
            let mut rows = vec![vec![0i64; n]; n];
            let mut entries = upper.into_iter();
            for i in 0..n {
                for j in i..n {
                    let v = entries.next().expect("triangle sized");
                    rows[i][j] = v;
                    rows[j][i] = v;
                }
            }
            GramLattice::from_i64(&rows).expect("symmetric by construction")
        })
    })
}

fn abs(x: BigInt) -> BigInt {
    if x < BigInt::zero() {
        -x
    } else {
        x
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn cyclotomic_products_round_trip(poly in cyclotomic_product_strategy()) {
        let shape = FrameShape::from_char_poly_auto(&poly).unwrap();
        prop_assert_eq!(shape.to_char_poly().unwrap(), poly);
        let parsed: FrameShape = shape.to_string().parse().unwrap();
        prop_assert_eq!(parsed, shape);
    }

    #[test]
    fn saito_dual_is_an_involution(shape in frame_strategy()) {
        let dual = shape.saito_dual();
        prop_assert_eq!(dual.order(), shape.order());
        prop_assert_eq!(dual.saito_dual(), shape);
    }

    #[test]
    fn concatenation_adds_exponents(a in frame_strategy(), b in frame_strategy()) {
        let c = a.concatenate(&b);
        prop_assert_eq!(c.order(), num_integer::lcm(a.order(), b.order()));
        prop_assert_eq!(c.degree(), a.degree() + b.degree());
        for m in 1..=a.order().max(b.order()) {
            prop_assert_eq!(c.exponent(m), a.exponent(m) + b.exponent(m));
        }
        for k in 1..=6 {
            prop_assert_eq!(c.trace_power(k), a.trace_power(k) + b.trace_power(k));
        }
    }

    #[test]
    fn magic_square_transposes_swap_the_roles(
        left in weight_strategy(),
        right in weight_strategy(),
    ) {
        for square in find_magic_squares(&left, &right, false).iter().take(20) {
            let transposed = square.transpose();
            prop_assert!(transposed.is_magic());
            prop_assert_eq!(square.is_primitive(), transposed.is_primitive());
        }
    }

    #[test]
    fn smith_invariants_multiply_to_the_determinant(lattice in symmetric_strategy(4)) {
        let det = lattice.determinant();
        match lattice.smith_invariants() {
            Ok(invariants) => {
                let product = invariants.iter().fold(BigInt::from(1), |acc, x| acc * x);
                prop_assert_eq!(product, abs(det));
                for pair in invariants.windows(2) {
                    prop_assert!((&pair[1] % &pair[0]).is_zero());
                }
            }
            Err(_) => prop_assert!(det.is_zero()),
        }
    }

    #[test]
    fn direct_sums_multiply_determinants(
        a in symmetric_strategy(3),
        b in symmetric_strategy(3),
    ) {
        let sum = a.direct_sum(&b);
        prop_assert_eq!(sum.rank(), a.rank() + b.rank());
        prop_assert_eq!(sum.determinant(), a.determinant() * b.determinant());
        let (p1, n1, z1) = a.signature();
        let (p2, n2, z2) = b.signature();
        prop_assert_eq!(sum.signature(), (p1 + p2, n1 + n2, z1 + z2));
    }
}

fn catalog_shapes() -> Vec<FrameShape> {
    let catalog = Catalog::get();
    let mut shapes = Vec::new();
    for record in catalog.records() {
        shapes.extend(record.frame.clone());
        shapes.extend(record.frame_flat.clone());
    }
    shapes.extend(catalog.table8.iter().map(|row| row.frame.clone()));
    shapes.extend(catalog.kondo_extras.iter().cloned());
    shapes
}

#[test]
fn catalog_shapes_round_trip() {
    for shape in catalog_shapes() {
        let parsed: FrameShape = shape.to_string().parse().unwrap();
        assert_eq!(parsed, shape);
        assert_eq!(shape.saito_dual().saito_dual(), shape);
        if let Ok(poly) = shape.to_char_poly() {
            assert_eq!(FrameShape::from_char_poly(&poly, shape.order()).unwrap(), shape);
        }
    }
}

#[test]
fn catalog_pairing_concatenations_add() {
    let catalog = Catalog::get();
    for (a, b) in catalog.duality_pairs() {
        let left = a.pairing_frame();
        let right = b.pairing_frame();
        let joined = left.concatenate(right);
        assert_eq!(joined.degree(), left.degree() + right.degree());
        assert_eq!(joined.degree(), BigInt::from(24));
        for k in 1..=6 {
            assert_eq!(
                joined.trace_power(k),
                left.trace_power(k) + right.trace_power(k)
            );
        }
    }
}

#[test]
fn catalog_magic_squares_transpose() {
    let catalog = Catalog::get();
    for record in catalog.family(Family::ExceptionalUnimodal) {
        let dual = &catalog.lookup(&record.duals[0]).unwrap().weights;
        let squares = find_magic_squares(&record.weights, dual, false);
        assert!(!squares.is_empty());
        for square in squares {
            assert!(square.transpose().is_magic());
        }
    }
}

#[test]
fn catalog_star_graphs_satisfy_the_lattice_properties() {
    let catalog = Catalog::get();
    let u = GramLattice::hyperbolic_u();
    for record in catalog.records() {
        let star = match record.dol.as_slice() {
            [a, b, c] => GramLattice::star3(*a, *b, *c),
            [a, b, c, d] => GramLattice::star4(*a, *b, *c, *d),
            _ => unreachable!("validated catalog"),
        };
        let det = star.determinant();
        let product = star
            .smith_invariants()
            .unwrap()
            .iter()
            .fold(BigInt::from(1), |acc, x| acc * x);
        assert_eq!(product, abs(det.clone()));
        let sum = star.direct_sum(&u);
        assert_eq!(sum.determinant(), det.clone() * u.determinant());
        let (p, n, z) = star.signature();
        assert_eq!(sum.signature(), (p + 1, n + 1, z));
    }
}
