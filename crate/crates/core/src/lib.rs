//! Exact computations with twisted quantum doubles D^ω(G) of small finite
//! groups: cohomology, quasi-Hopf structure, simple modules, gauge
//! invariants and classification up to gauge equivalence.

pub mod classify;
pub mod cohomology;
pub mod double;
pub mod groups;
pub mod invariants;
pub mod linalg;
pub mod representations;
pub mod scalars;

pub use scalars::{Cyc, CycF64, Cyclotomic, ExpScalar, Scalar};
