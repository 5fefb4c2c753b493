//! Compute monodromy frame shapes from weights alone and check Saito
//! duality: the dual of the frame of X is the frame of the dual of X.

use strange_duality::catalog::Family;
use strange_duality::Catalog;

fn main() {
    let catalog = Catalog::get();
    println!("{:<5} {:<22} {:<22}", "name", "frame", "saito dual");
    for record in catalog.family(Family::ExceptionalUnimodal) {
        let frame = record.weights.monodromy_frame().unwrap();
        assert_eq!(Some(&frame), record.frame.as_ref());
        let dual = frame.saito_dual();
        println!("{:<5} {:<22} {:<22}", record.name, frame.to_string(), dual.to_string());

        let partner = catalog.lookup(&record.duals[0]).unwrap();
        assert_eq!(Some(&dual), partner.frame.as_ref());
        assert_eq!(frame.order(), record.h);
        assert_eq!(frame.degree(), record.mu.into());
    }
    println!();
    println!("saito_dual(frame of X) = frame of X* on all 14 records");

    let e12 = catalog.lookup("E12").unwrap().frame.clone().unwrap();
    println!("E12 trace of c^6: {}", e12.trace_power(6));
    println!("E12 characteristic polynomial at 1: {}", e12.value_at_one().unwrap());
}
