//! The extension of the duality to complete intersections: reduced Milnor
//! data, reduced frame shapes, and Saito duality against hypersurface
//! partners.

use strange_duality::catalog::Family;
use strange_duality::weights::virtual_dual_order;
use strange_duality::Catalog;

fn main() {
    let catalog = Catalog::get();
    println!(
        "{:<6} {:<14} {:>3} {:>4} {:>4} {:>5}  {:<20} duals",
        "name", "weights", "mu", "mu_b", "d", "d_b", "reduced frame"
    );
    for family in [Family::TriangleIcis, Family::QuadrilateralIcis] {
        for record in catalog.family(family) {
            let frame = record.frame_flat.as_ref().unwrap();
            println!(
                "{:<6} {:<14} {:>3} {:>4} {:>4} {:>5}  {:<20} {}",
                record.name,
                record.weights.to_string(),
                record.mu,
                record.mu_flat.unwrap(),
                record.d,
                record.d_flat.unwrap(),
                frame.to_string(),
                record.duals.join(", "),
            );
        }
    }
    println!();

    for record in catalog.records().iter().filter(|r| !r.is_hypersurface()) {
        let flat = record.frame_flat.as_ref().unwrap();
        for name in &record.duals {
            let partner = catalog.lookup(name).unwrap();
            assert_eq!(&partner.pairing_frame().saito_dual(), flat);
        }
        assert_eq!(flat.degree(), record.mu_flat.unwrap().into());
    }
    println!("saito_dual(pairing frame of X*) = reduced frame of X on all 13 records");

    for record in catalog.family(Family::TriangleIcis) {
        let h_star = virtual_dual_order(record).unwrap();
        let series = record.series_dual.as_ref().unwrap();
        assert_eq!(Some(h_star), series.h_star);
        println!(
            "{:<6} virtual dual {:<12} order {:>3}, virtual mu {}",
            record.name,
            series.names.join(", "),
            h_star,
            series.mu_star,
        );
    }

    let outcomes = catalog.verify_extension();
    let passed = outcomes.iter().filter(|c| c.passed).count();
    println!();
    println!("verify_extension: {passed}/{} checks passed", outcomes.len());
}
