//! Double-step graphs, New Amsterdam digraphs and Manhattan digraphs.
//!
//! The crate builds the three families from their step parameters, translates
//! steps between them, evaluates their Moore-like order bounds, and certifies
//! diameters by breadth-first search and exhaustive step enumeration.
//!
//! ```
//! use gridnet_core::{FamilyParams, CompileMode, graphs::diameter};
//!
//! let na: FamilyParams = "na:10,-1,1,3,-3".parse().unwrap();
//! let g = na.compile(CompileMode::Strict).unwrap();
//! assert_eq!(diameter(&g).finite(), Some(3));
//! ```

pub mod bounds;
pub mod constructions;
pub mod families;
pub mod graphs;
pub mod search;

mod arith;

pub use bounds::{BoundsReport, Family, OrderRange, Prediction};
pub use families::{
    CompileMode, DoubleStep, FamilyError, FamilyParams, Manhattan, MhLabeling, NewAmsterdam,
    Validation,
};
pub use graphs::{Diameter, Digraph, DistanceProfile, GraphError};
pub use search::{SearchError, SearchOptions, SearchResult};
