//! Graded first cohomology of the tangent sheaf, and whether the
//! admissible triples of each degree span it.

use toric_deform::cohomology::{span_check, triple_cocycle, GradedCechComplex};
use toric_deform::fan::standard::hirzebruch;
use toric_deform::triples::{degree_box, triples_at_degree};

fn main() {
    let fan = hirzebruch(4);
    let mut total = 0;
    for m in degree_box(&fan, 6).unwrap() {
        let complex = GradedCechComplex::build(&fan, &m).unwrap();
        let h = complex.h1_dimension();
        if h == 0 {
            continue;
        }
        total += h;
        let triples = triples_at_degree(&fan, &m);
        let span = span_check(&fan, &m, &triples).unwrap();
        println!(
            "m = {m:?}: dim C1 = {}, h1 = {h}, {} triples, span rank {}",
            complex.dim_c1(),
            triples.len(),
            span.span_rank
        );
    }
    println!("F4: total h1 = {total}");

    let t = &triples_at_degree(&fan, &[-1, -1])[0];
    let cocycle = triple_cocycle(&fan, t).unwrap();
    println!("cocycle of {t:?}:");
    for e in &cocycle.entries {
        println!("  {e:?}");
    }
}
