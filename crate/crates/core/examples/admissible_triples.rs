//! Marker graphs and admissible triples of Hirzebruch surfaces.

use toric_deform::fan::standard::hirzebruch;
use toric_deform::triples::{default_bound, enumerate_triples, marker_graph};

fn main() {
    let f3 = hirzebruch(3);
    let g = marker_graph(&f3, &[-1, -1], 1).unwrap();
    println!("F3, m = (-1,-1), rho = 1");
    println!("  vertices {:?}", g.vertices);
    println!("  edges {:?}", g.edges);
    println!("  components {:?}", g.components);

    for n in 0..=5 {
        let fan = hirzebruch(n);
        let triples = enumerate_triples(&fan, default_bound(&fan)).unwrap();
        println!("F{n}: {} triples", triples.len());
        for t in &triples {
            println!("  m = {:?}, rho = {}, C = {:?}", t.m, t.rho, t.component);
        }
    }
}
