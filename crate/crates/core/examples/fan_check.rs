//! Load a fan from JSON, validate it and print its Cox data.
//!
//! ```text
//! cargo run --example fan_check -- data/f3.json
//! ```

use toric_deform::fan::{cox_data, primitive_collections, validate, Fan};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/f2.json").to_string());
    let fan = Fan::from_path(&path)?;
    let report = validate(&fan);
    println!("{path}: dim {}, {} rays, {} maximal cones", fan.dim(), fan.n_rays(), fan.max_cones().len());
    println!("smooth {}, complete {}, simplicial {}", report.smooth, report.complete, report.simplicial);

    let cox = cox_data(&fan)?;
    println!("P = {:?}", cox.p.to_rows());
    println!("Q = {:?}", cox.q.to_rows());
    println!("class group rank {}", cox.cl_rank);
    println!("irrelevant components {:?}", cox.irrelevant_components);
    println!("primitive collections {:?}", primitive_collections(&fan));
    Ok(())
}
