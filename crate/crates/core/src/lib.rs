//! Cyclic fatgraphs over free products of cyclic groups.

pub mod certificate;
pub mod cyclic;
pub mod error;
pub mod fatgraph;
pub mod realization;
pub mod stability;
pub mod words;

pub use certificate::{check_certificate, CertificateReport, PolygonVerdict};
pub use cyclic::{CyclicOrder, CyclicSubOrder};
pub use error::{Error, Result};
pub use fatgraph::{
    covers, pinch, pinch_seeded, BoundaryComponent, BoundaryReport, Census, EdgeId, EdgeKind, EdgeLabel,
    Fatgraph, Piece, Segment, SurfaceSummary, Token, Violation, ViolationKind,
};
pub use realization::{Realization, Shape};
pub use words::{
    classify, cyclic_reduce, free_reduce, z_exponent_sums, CyclicWord, ElementClass, GenAlphabet, Generator,
    Letter, Word,
};
