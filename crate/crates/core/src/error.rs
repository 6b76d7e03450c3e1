use thiserror::Error;

use crate::words::Letter;

/// Errors produced by the library.
///
/// Violations found while validating a fatgraph are not errors; they are
/// returned as data by [`crate::fatgraph::Fatgraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("letter {0} is outside the alphabet")]
    LetterOutOfRange(Letter),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("symbol {0} is not in the cyclic order")]
    SymbolNotInOrder(Letter),

    #[error("cyclic order is not a permutation of the generator symbols: {0}")]
    InvalidOrder(String),

    #[error("cyclic sub-order contains the repeated symbol {0}")]
    DuplicateSymbol(Letter),

    #[error("orbifold is not hyperbolic: {0}")]
    NotHyperbolicOrbifold(String),

    #[error("cyclic order has {0} cusps; exactly one boundary component is supported")]
    MultipleCusps(usize),

    #[error("infinite-order symbols are not in the standard form [z0, Z1, Z0, z1, ...]")]
    NonStandardOrder,

    #[error("generator z{0} does not occur in the boundary word")]
    GeneratorNotInBoundary(usize),

    #[error("word is empty after reduction")]
    EmptyWord,

    #[error("element is not hyperbolic")]
    NotHyperbolic,

    #[error("homology obstruction: {0}")]
    HomologyObstruction(String),

    #[error("fatgraph is invalid: {0}")]
    InvalidFatgraph(String),

    #[error("fatgraph still has unglued edges")]
    Incomplete,

    #[error("unglued edge marker {0} cannot be read as a letter")]
    UnreadableMarker(String),

    #[error("segment {piece}.{segment} is not a gluable edge")]
    NotAnEdge { piece: usize, segment: usize },

    #[error("edge {piece}.{segment} is already glued")]
    AlreadyGlued { piece: usize, segment: usize },

    #[error("no piece or segment at {piece}.{segment}")]
    NoSuchSegment { piece: usize, segment: usize },

    #[error("covering trick needs only finite-order unglued edges, found {0}")]
    UngluedInfiniteOrder(String),

    #[error("number-theory input needs at least three positive entries")]
    TooFewEntries,

    #[error("target {0} is not reachable by an adjacent-distinct sequence")]
    Unreachable(i64),

    #[error("no unglued polygon edge pe(c{0}) available for padding")]
    NoAttachmentSite(usize),

    #[error("unequal unglued pe(z{index}) and pe(Z{index}) counts: {plus} vs {minus}")]
    EquidistributionFailure { index: usize, plus: usize, minus: usize },

    #[error("module A_(i,k) needs an even k, got {0}")]
    OddInsertion(usize),

    #[error("disk construction needs at least three cone points, found {0}")]
    TooFewConePoints(usize),

    #[error("orbifold shape does not match the construction: {0}")]
    WrongShape(String),

    #[error("not enough unglued pe(z{index}) edges: need {needed}, found {found}")]
    InsufficientEdges {
        index: usize,
        needed: usize,
        found: usize,
    },

    #[error("exponent {requested} is below the construction base {base}")]
    ExponentTooSmall { requested: i64, base: i64 },

    #[error("construction contract violated: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;
