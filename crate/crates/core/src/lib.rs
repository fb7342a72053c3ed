//! Finite flag complexes with X-graphs: link calculus, the derived spaces
//! `Y_Δ` and `C(Δ)`, verification of the combinatorial conditions, and the
//! projection constants of the resulting hierarchy.

pub mod action;
pub mod classes;
pub mod complex;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod hhs;
pub mod io;
pub mod metric;
pub mod numeric;
pub mod relations;
pub mod spaces;
pub mod verify;

pub use action::Permutation;
pub use classes::{ClassIndex, SimplexClass};
pub use complex::{FlagComplex, Simplex, Subcomplex, VertexSet};
pub use error::{Error, Result};
pub use hhs::Hhs;
pub use metric::{Graph, MetricGraph};
pub use numeric::{Bound, Rational, INF};
pub use relations::{Relation, RelationTable};
pub use spaces::{WRule, XGraph};
pub use verify::{verify_chhs, Verdict, VerifyOptions};
