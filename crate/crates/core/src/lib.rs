//! Deformations of smooth complete toric varieties from admissible triples.
//!
//! Start from a [`fan::Fan`], list admissible triples with
//! [`triples::enumerate_triples`], build the deformation package with
//! [`deform::build_deformation`] and compare against graded tangent
//! cohomology from [`cohomology`].

pub mod cli;
pub mod cohomology;
pub mod deform;
pub mod fan;
pub mod hypersurf;
pub mod intlin;
pub mod report;
pub mod scrolls;
pub mod triples;
