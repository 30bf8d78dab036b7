//! The deformation of F_n attached to an admissible triple: the ambient
//! matrices, the trinomial, and the checks on the central and general
//! fibers.

use toric_deform::deform::{build_deformation, eta_map, verify_central_fiber, verify_maps};
use toric_deform::fan::standard::hirzebruch;
use toric_deform::hypersurf::hilbert_basis_check;
use toric_deform::triples::triple_from_component_index;

fn main() {
    let n: i64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let fan = hirzebruch(n);
    let t = triple_from_component_index(&fan, &[-1, -1], 1, 0).expect("n >= 2");
    let d = build_deformation(&fan, &t).unwrap();

    println!("F{n}, triple {t:?}");
    println!("variables {:?}", d.variables());
    println!("P~ = {:?}", d.ptilde.to_rows());
    println!("Q~ = {:?}", d.qtilde.to_rows());
    println!("nu = {:?}", d.nu.to_rows());
    println!("trinomial {}", d.trinomial);
    for entry in eta_map(&d) {
        println!("  eta {entry:?}");
    }

    let central = verify_central_fiber(&fan, &d);
    for c in central.checks.iter().chain(&verify_maps(&fan, &d)) {
        println!("{:<22} {}", c.name, if c.passed { "ok" } else { "FAILED" });
    }
    println!("hilbert basis {}", hilbert_basis_check(&d));
}
