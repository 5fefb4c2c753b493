//! Exhaustive search for self-dual degree-24 frame shapes and their
//! classification against the table of conjugacy class frames.

use strange_duality::moonshine::{classify_pairings, exponent_collisions, search_sequences};
use strange_duality::Catalog;

fn main() {
    let catalog = Catalog::get();
    let shapes = search_sequences(119);
    println!("{} self-dual degree-24 shapes with orders up to 119:", shapes.len());
    for shape in &shapes {
        let label = catalog
            .table8_match(shape)
            .map(|row| row.atlas_label.as_str())
            .unwrap_or("extra");
        println!("{:>4}  {:<34} {label}", shape.order(), shape.to_string());
    }
    assert_eq!(shapes.len(), 25);
    assert!(exponent_collisions(&shapes).is_empty());
    println!();

    let report = classify_pairings(catalog);
    println!("{} dual pairs land in the table:", report.pairings.len());
    for row in &report.pairings {
        println!(
            "{:<6} {:<6} {:<28} {}",
            row.left,
            row.right,
            row.shape.to_string(),
            row.table8_label.as_deref().unwrap_or("unmatched"),
        );
    }
    println!();
    println!("rows not hit by any pair: {}", report.unmatched.join(", "));
}
