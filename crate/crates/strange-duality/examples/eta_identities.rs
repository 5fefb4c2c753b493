//! Numerical side: eta products attached to frame shapes satisfy the
//! transformation identity eta_pi(-1/(N tau)) * eta_pi*(tau) * sqrt(d) = 1.

use strange_duality::etaq::{eta, eta_product, saito_identity_residual, UpperHalfPoint};
use strange_duality::Catalog;

fn main() {
    let tau = UpperHalfPoint::new(0.0, 1.0).unwrap();
    println!("eta(i) = {:.15}", eta(tau));

    let catalog = Catalog::get();
    let e12 = catalog.lookup("E12").unwrap().frame.clone().unwrap();
    println!("eta_pi(i) for pi = {e12}: {:.15}", eta_product(&e12, tau));
    println!();

    let samples = [
        UpperHalfPoint::new(0.0, 1.0).unwrap(),
        UpperHalfPoint::new(0.3, 1.7).unwrap(),
        UpperHalfPoint::new(-0.4, 0.9).unwrap(),
    ];
    println!("{:<6} {:<22} worst residual", "name", "shape");
    let mut worst_overall: f64 = 0.0;
    for record in catalog.records() {
        for frame in [record.frame.as_ref(), record.frame_flat.as_ref()] {
            let Some(frame) = frame else { continue };
            let mut worst: f64 = 0.0;
            for point in samples {
                worst = worst.max(saito_identity_residual(frame, point).unwrap());
            }
            worst_overall = worst_overall.max(worst);
            println!("{:<6} {:<22} {worst:.3e}", record.name, frame.to_string());
        }
    }
    println!();
    println!("largest residual across the catalog: {worst_overall:.3e}");
    assert!(worst_overall < 1e-8);
}
