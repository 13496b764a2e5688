//! Build potentials and fields of a solution family and compare the closed
//! form against the definition via potentials.
use amwave::fields::{build_fields, build_potentials, fields_from_potentials};
use amwave::sampling::example_one;

fn main() {
    let fam = example_one(0.1);
    let (a, phi) = build_potentials(&fam);
    let (b, e) = build_fields(&fam);
    println!("tau    = {:?}", fam.tau());
    println!("eta    = {:?}", fam.eta());
    println!("xi     = {:?}", fam.xi());
    println!("|A| = {:.6}, |phi| = {:.6}", a.norm(), phi.norm());
    println!("B orders {:?}, norms {:?}", b.orders(), b.order_norms());
    println!("E orders {:?}, norms {:?}", e.orders(), e.order_norms());

    let (b2, e2) = fields_from_potentials(&a, &phi);
    println!("closed form vs potentials: dB = {:.2e}, dE = {:.2e}", b.distance(&b2), e.distance(&e2));

    let r = amwave::Vec3::new(0.3, -0.2, 1.1);
    println!("B(r, t=0.4) = {:?}", b.eval_at(&r, 0.4));
}
