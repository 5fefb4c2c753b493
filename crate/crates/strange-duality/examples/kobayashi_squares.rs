//! Weighted magic squares: dual weight system enumeration for the 14
//! exceptional hypersurfaces and generalized searches for complete
//! intersection pairs.

use strange_duality::catalog::Family;
use strange_duality::magicsquare::{
    counting_obstruction, enumerate_duals, find_generalized_magic, find_magic_squares,
    Convention,
};
use strange_duality::Catalog;

fn main() {
    let catalog = Catalog::get();
    println!("{:<5} {:<12} dual weight systems", "name", "weights");
    for record in catalog.family(Family::ExceptionalUnimodal) {
        let duals = enumerate_duals(&record.weights);
        let found: Vec<String> = duals.iter().map(|w| w.to_string()).collect();
        println!("{:<5} {:<12} {}", record.name, record.weights.to_string(), found.join(", "));
        assert_eq!(duals.len(), 1);
    }
    println!();

    let e14 = catalog.lookup("E14").unwrap();
    let dual = &enumerate_duals(&e14.weights)[0];
    println!("primitive squares between {} and {dual}:", e14.weights);
    for square in find_magic_squares(&e14.weights, dual, true) {
        for line in square.to_string().lines() {
            println!("  {line}");
        }
        println!("  det {}", square.determinant().unwrap());
        println!();
    }

    for (left, right) in [("J'10", "Z1,0"), ("K'11", "S1,0"), ("J'2,0", "J'2,0"), ("M1,0", "M1,0")] {
        let a = catalog.lookup(left).unwrap();
        let b = catalog.lookup(right).unwrap();
        println!("{left} and {right}:");
        if let Some((lhs, rhs)) = counting_obstruction(&a.weights, &b.weights) {
            println!("  no magic matrix can exist: degree balance {lhs} != {rhs}");
        }
        for convention in [Convention::Square4x4, Convention::Rect3x4, Convention::Rect4x3] {
            let Ok(magic) = find_generalized_magic(&a.weights, &b.weights, convention) else {
                continue;
            };
            let primitive = magic.iter().filter(|m| m.is_primitive()).count();
            println!("  {convention}: {} magic, {primitive} primitive", magic.len());
        }
    }
}
