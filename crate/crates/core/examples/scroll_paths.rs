//! Chains of one-step deformations from a rational normal scroll to the
//! rigid one with the same sum modulo n.
//!
//! ```text
//! cargo run --example scroll_paths -- 5,2,0
//! ```

use toric_deform::scrolls::{is_rigid, path_to_rigid, rigid_target, ScrollSpec};

fn main() {
    let spec: ScrollSpec = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "4,1,0".into())
        .parse()
        .expect("comma separated integers");
    println!("{spec}: rigid {}, target {}", is_rigid(&spec), rigid_target(&spec));
    for mv in path_to_rigid(&spec) {
        assert!(mv.revalidate());
        println!(
            "  {} -> {}  (i = {}, j = {}, step {}, m = {:?})",
            mv.from, mv.to, mv.i, mv.j, mv.step, mv.triple.m
        );
    }
}
