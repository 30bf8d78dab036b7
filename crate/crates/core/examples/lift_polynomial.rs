//! Monomials of a class on F2 and their lifts to the total space of the
//! deformation.

use toric_deform::deform::build_deformation;
use toric_deform::fan::standard::hirzebruch;
use toric_deform::hypersurf::{lift_polynomial, riemann_roch_points, Polynomial};
use toric_deform::triples::triple_from_component_index;

fn main() {
    let fan = hirzebruch(2);
    let t = triple_from_component_index(&fan, &[-1, -1], 1, 0).unwrap();
    let d = build_deformation(&fan, &t).unwrap();
    let class = [5, 2];

    let points = riemann_roch_points(&fan, &class).unwrap();
    println!("{} monomials of class {class:?}", points.len());
    let all = Polynomial { terms: points.into_iter().map(|e| (1, e)).collect() };
    let result = lift_polynomial(&fan, &d, &class, &all).unwrap();
    for m in &result.monomials {
        println!("  {:?} -> {:?}", m.exponent, m.preimage);
    }

    let f = Polynomial::parse("2*S1^5*S2^2 - S3^5*S2^2", fan.n_rays()).unwrap();
    match lift_polynomial(&fan, &d, &class, &f).unwrap().lifted() {
        Some(g) => println!("{f}  lifts to  {g}"),
        None => println!("{f} does not lift"),
    }
}
