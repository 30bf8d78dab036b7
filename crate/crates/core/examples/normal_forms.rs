//! Hermite and Smith normal forms, kernels and cokernels over the integers.

use toric_deform::intlin::{cokernel_map, hermite_normal_form, kernel_basis, smith_normal_form, IntMat};

fn main() {
    let a = IntMat::from_rows(4, &[[2, 4, 4, 6], [-6, 6, 12, 0], [10, -4, -16, 2]]);
    let (h, u) = hermite_normal_form(&a);
    println!("A = {:?}", a.to_rows());
    println!("H = {:?}", h.to_rows());
    println!("U = {:?}", u.to_rows());

    let snf = smith_normal_form(&a);
    println!("invariant factors {:?}", snf.invariant_factors());
    println!("kernel {:?}", kernel_basis(&a));

    let c = cokernel_map(&a);
    println!("cokernel: free rank {}, invariants {:?}", c.free_rank(), c.invariants);
}
