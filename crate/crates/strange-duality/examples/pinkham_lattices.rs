//! Lattice view of the duality: star-shaped dual graphs complement the
//! Milnor lattice inside the K3 lattice, and determinants match the
//! discriminants.

use num_bigint::BigInt;
use strange_duality::catalog::Family;
use strange_duality::{Catalog, GramLattice};

fn star(numbers: &[u64]) -> GramLattice {
    match numbers {
        [a, b, c] => GramLattice::star3(*a, *b, *c),
        [a, b, c, d] => GramLattice::star4(*a, *b, *c, *d),
        _ => unreachable!("catalog numbers are triples or quadruples"),
    }
}

fn main() {
    let catalog = Catalog::get();
    for record in catalog.records() {
        let graph = star(&record.dol);
        assert_eq!(graph.rank() as u64 + record.mu, 22);
        let det = graph.determinant();
        assert_eq!(det.magnitude(), BigInt::from(record.d).magnitude());
    }
    println!("rank(star(dol)) + mu = 22 and |det| = |d| on all 33 records");

    let u = GramLattice::hyperbolic_u();
    for record in catalog.family(Family::ExceptionalUnimodal) {
        let milnor = star(&record.gab_variants[0].numbers).direct_sum(&u);
        assert_eq!(milnor.determinant(), BigInt::from(record.d));
    }
    println!("det(star(gab) + U) = d with sign on the 14 hypersurfaces");
    println!();

    let e12 = GramLattice::star3(2, 3, 7);
    println!("star:2,3,7  rank {}", e12.rank());
    println!("  det        {}", e12.determinant());
    println!("  signature  {:?}", e12.signature());
    println!("  snf        {:?}", strings(&e12.smith_invariants().unwrap()));

    let k3 = GramLattice::k3_lattice();
    println!("K3          rank {}", k3.rank());
    println!("  det        {}", k3.determinant());
    println!("  signature  {:?}", k3.signature());

    let k24 = GramLattice::k24();
    println!("K24         rank {}", k24.rank());
    println!("  det        {}", k24.determinant());
    println!("  signature  {:?}", k24.signature());
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(BigInt::to_string).collect()
}
