//! Walk the 14 exceptional unimodal singularities and show the duality:
//! Dolgachev and Gabrielov numbers exchange, Milnor numbers sum to 24,
//! discriminants agree.

use strange_duality::catalog::Family;
use strange_duality::Catalog;

fn numbers(list: &[u64]) -> String {
    let parts: Vec<String> = list.iter().map(u64::to_string).collect();
    parts.join(",")
}

fn main() {
    let catalog = Catalog::get();
    println!("{:<5} {:<9} {:<9} {:>3} {:>3}  dual", "name", "dol", "gab", "mu", "d");
    for record in catalog.family(Family::ExceptionalUnimodal) {
        let dual = &record.duals[0];
        println!(
            "{:<5} {:<9} {:<9} {:>3} {:>3}  {}",
            record.name,
            numbers(&record.dol),
            numbers(&record.gab_variants[0].numbers),
            record.mu,
            record.d,
            dual,
        );
    }
    println!();
    for record in catalog.family(Family::ExceptionalUnimodal) {
        let dual = catalog.lookup(&record.duals[0]).unwrap();
        assert_eq!(record.dol, dual.gab_variants[0].numbers);
        assert_eq!(record.mu + dual.mu, 24);
        assert_eq!(record.d, dual.d);
    }
    println!("numbers exchange, mu + mu* = 24 and d = d* on all 14 records");

    let outcomes = catalog.verify_arnold();
    let passed = outcomes.iter().filter(|c| c.passed).count();
    println!("verify_arnold: {passed}/{} checks passed", outcomes.len());
}
