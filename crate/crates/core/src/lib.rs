//! Local antimagic labelings: graph families, constructions, verification
//! and exhaustive search.

pub mod construct_la;
pub mod construct_lat;
pub mod errata;
pub mod error;
pub mod graphs;
pub mod io;
pub mod labeling;
pub mod ledger;
pub mod matrixlab;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
pub use graphs::{Family, Graph, VertexRef};
pub use labeling::{AnyLabeling, EdgeLabeling, LabelKind, TotalLabeling};
pub use verify::Report;
pub use ledger::{build_ledger, Ledger};
