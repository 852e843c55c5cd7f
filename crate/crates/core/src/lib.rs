//! Rough-set approximations over ordered topological spaces.
//!
//! A space is a finite [`Universe`], a [`Topology`] generated from a binary
//! relation or an explicit base, and a [`PartialOrder`]. Bundled as a
//! [`Gotas`], it offers the R, semi, pre, γ and β lower/upper
//! approximations in an increasing and a decreasing flavor, plus regions,
//! accuracy and exactness through the [`Approximations`] trait.
//!
//! ```
//! use gotas_core::{fixtures, Approximations, Direction, Family};
//!
//! let space = fixtures::example_space();
//! let a = space.subset(["a", "c"]).unwrap();
//! let upper = space.upper(Family::Beta, &a, Direction::Dec);
//! assert_eq!(upper.to_string(), "{a, b, c}");
//! ```
//!
//! The [`oracle`] module recomputes the R-operators by powerset enumeration
//! and checks the inclusion and accuracy laws between the families.

pub mod approx;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod oracle;
pub mod order;
pub mod topology;
pub mod universe;

pub use approx::{
    unordered_lower, unordered_upper, Accuracy, ApproxReport, Approximations, Direction,
    Exactness, Family, Gotas,
};
pub use document::{DocumentOptions, SpaceDocument, TopologySource};
pub use error::{GotasError, OrderAxiom, Result};
pub use order::PartialOrder;
pub use topology::{BinaryRelation, Topology};
pub use universe::{Subset, Universe};
