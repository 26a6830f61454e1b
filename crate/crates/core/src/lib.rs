//! Rough-set approximation operators and the matroids they induce.
//!
//! A [`Partition`] of a finite universe carries the lower and upper
//! approximations. [`Matroid`] is an explicit finite matroid engine, and
//! [`InducedMatroid`] is the matroid whose independent sets are the sets with
//! empty lower approximation, together with its dual.

pub mod contraction;
pub mod error;
pub mod family;
pub mod generate;
pub mod induced;
pub mod instance;
pub mod limits;
pub mod matroid;
pub mod rough;
pub mod subset;
pub mod suite;
pub mod verdict;

pub use contraction::{CircuitContainment, ContractionPair};
pub use error::{Error, Result};
pub use family::SetFamily;
pub use induced::{DualInducedMatroid, InducedMatroid};
pub use instance::{InstanceDocument, InstanceError};
pub use limits::Caps;
pub use matroid::{Matroid, Minor};
pub use rough::{Partition, PawlakProperty, PawlakReport, Universe};
pub use subset::{ElementId, Subset};
pub use suite::{verify_all, CheckResult, Side, Status, Subject, SuiteReport};
pub use verdict::{Check, Verdict, Violation, Witness};
