//! Contractive self-maps on discrete metric spaces and nonoriented graphs.
//!
//! A map `f` is contractive when `d(f(x), f(y)) < d(x, y)` for all distinct
//! `x, y`, and a contraction when some `k < 1` bounds every ratio. On a space
//! whose minimal positive distance `d0` is attained, nonconstant contractive
//! maps exist exactly when the space splits into more than one class under
//! "reachable by jumps of length `d0`". This crate computes that quotient,
//! builds witnesses, classifies maps and cross-checks everything by brute
//! force on small spaces. All arithmetic is exact.

pub mod catalog;
pub mod chains;
pub mod distance;
pub mod error;
pub mod graph;
pub mod io;
pub mod iteration;
pub mod maps;
pub mod metric;
pub mod oracle;
pub mod partition;
pub mod quotient;
pub mod rules;
pub mod theorem;

pub use distance::ExtDistance;
pub use num_rational::BigRational;
pub use error::{Error, Result};
pub use graph::Graph;
pub use maps::{classify_map, ClassificationReport, SelfMap};
pub use metric::{min_positive_distance, verify_metric_axioms, MetricSpace};
pub use quotient::{build_quotient, QuotientStructure};
