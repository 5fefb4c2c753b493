//! Coxeter elements from Gram matrices: the embedded 15-vertex graph of
//! I1,0 and the Coxeter frames of Niemeier root systems.

use strange_duality::lattice::coxeter_frame_of_root_system;
use strange_duality::poly::IntPolynomial;
use strange_duality::{Catalog, FrameShape};

fn main() {
    let catalog = Catalog::get();
    let record = catalog.lookup("I1,0").unwrap();
    let lattice = catalog.i10_lattice().unwrap();
    println!("I1,0 dual graph: rank {}", lattice.rank());

    let report = lattice.coxeter_element().unwrap();
    println!("char poly: {}", report.char_poly);

    let nu = record.nu.unwrap() as usize;
    let mu = record.mu as usize;
    assert_eq!(report.char_poly.degree(), Some(nu));
    let linear = IntPolynomial::lambda_pow_minus_one(1);
    let mut reduced = report.char_poly.clone();
    for _ in 0..nu - mu {
        reduced = reduced.div_exact(&linear).unwrap();
    }
    let frame = FrameShape::from_char_poly(&reduced, record.h).unwrap();
    println!("frame after removing (x-1)^(nu-mu): {frame}");
    assert_eq!(Some(&frame), record.frame.as_ref());
    println!();

    for row in &catalog.table8 {
        let Some(symbols) = &row.niemeier else { continue };
        let expr = symbols.join("+");
        let frame = coxeter_frame_of_root_system(&expr).unwrap();
        assert_eq!(frame, row.frame);
        println!("{:<4} {:<12} {}", row.atlas_label, expr, frame);
    }
    println!();
    println!("Coxeter frames of the root systems match the table rows");
}
