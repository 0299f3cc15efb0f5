//! Twisted quantum doubles D^ω(G) as quasi-Hopf algebras, their gauge and
//! unit twists, and axiom verification.

mod algebra;
mod build;
mod maps;
pub mod tensor;
mod twist;
mod verify;

pub use algebra::QuasiHopf;
pub use build::DoubleTensors;
pub use maps::{check_map, coboundary_gauge, extension_maps, index_two_map, LinearMap, MapLevel, ExtensionMaps};
pub use tensor::Tensor;
pub use twist::{gauge_twist, unit_twist};
pub use verify::{relabel, AxiomResult, LegConvention, Report};

use thiserror::Error;

use crate::cohomology::CohomologyError;
use crate::groups::GroupError;

#[derive(Debug, Error)]
pub enum DoubleError {
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("{0}")]
    Invalid(String),
}
