//! Error type shared by all modules.

use core::fmt;

use crate::level::Color;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `make_level` requires p >= 3.
    InvalidLevel(u32),
    /// A color outside the level's color set C_p was supplied.
    InvalidColor { color: Color, p: u32 },
    /// Quantum integers need p >= 5 so that A^2 - A^{-2} is invertible.
    DivisionByZeroInField { p: u32 },
    /// Two values from different levels were combined.
    LevelMismatch { left: u32, right: u32 },
    /// Sign queried for a cyclotomic number that is not conjugation-invariant.
    NotReal,
    /// Interval refinement hit the working-precision cap without resolving a
    /// sign. Unreachable for symbolically nonzero inputs; a bug signal.
    PrecisionExhausted,
    /// An embedding selector with gcd(ell, 2p) != 1 or out of range.
    InvalidRootSelector { ell: u32, p: u32 },
    /// A vertex index outside 0..vertex_count.
    VertexIndexOutOfRange { index: usize, count: usize },
    /// An edge index outside 0..edge_count.
    EdgeIndexOutOfRange { index: usize, count: usize },
    /// Some vertex does not have total degree 3.
    DegreeViolation { vertex: usize, degree: usize },
    /// The graph is not connected.
    Disconnected,
    /// 2 - 2g - n >= 0: the surface carries no pants decomposition.
    NonHyperbolic { genus: usize, legs: usize },
    /// Cutting produced a piece that is not a valid trivalent graph.
    DegenerateCut,
    /// Boundary coloring length does not match the number of legs.
    LegCountMismatch { expected: usize, got: usize },
    /// An operation needed more colors than were supplied.
    NotEnoughColors { got: usize, need: usize },
    /// A vertex weight was requested for an inadmissible triple.
    InadmissibleTriple(Color, Color, Color),
    /// No color is effective on the curve: the block space is zero.
    EmptyBlockSpace,
    /// Indefiniteness is meaningless on spaces of dimension < 2.
    TriviallyDefinite,
    /// A level vector is missing an entry for a curve type present in the graph.
    MissingCurveType { expected: usize, got: usize },
    /// Enumeration exceeded the configured ceiling.
    CeilingExceeded { ceiling: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidLevel(p) => write!(f, "invalid level p={p}: need p >= 3"),
            Error::InvalidColor { color, p } => {
                write!(f, "color {color} is not in the color set of level {p}")
            }
            Error::DivisionByZeroInField { p } => {
                write!(f, "quantum integers need p >= 5, got p={p}")
            }
            Error::LevelMismatch { left, right } => {
                write!(f, "mixed levels {left} and {right}")
            }
            Error::NotReal => write!(f, "value is not conjugation-invariant"),
            Error::PrecisionExhausted => {
                write!(f, "sign not resolved at precision cap (bug signal)")
            }
            Error::InvalidRootSelector { ell, p } => {
                write!(f, "ell={ell} is not coprime to 2p={}", 2 * p)
            }
            Error::VertexIndexOutOfRange { index, count } => {
                write!(f, "vertex index {index} out of range (count {count})")
            }
            Error::EdgeIndexOutOfRange { index, count } => {
                write!(f, "edge index {index} out of range (count {count})")
            }
            Error::DegreeViolation { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree}, expected 3")
            }
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::NonHyperbolic { genus, legs } => {
                write!(f, "surface (g={genus}, n={legs}) is not hyperbolic")
            }
            Error::DegenerateCut => write!(f, "cut produced an invalid piece"),
            Error::LegCountMismatch { expected, got } => {
                write!(f, "boundary coloring has {got} entries, graph has {expected} legs")
            }
            Error::NotEnoughColors { got, need } => {
                write!(f, "need at least {need} colors, got {got}")
            }
            Error::InadmissibleTriple(a, b, c) => {
                write!(f, "triple ({a},{b},{c}) is not admissible")
            }
            Error::EmptyBlockSpace => write!(f, "block space is zero: no effective color"),
            Error::TriviallyDefinite => {
                write!(f, "space has dimension < 2: indefiniteness is vacuous")
            }
            Error::MissingCurveType { expected, got } => {
                write!(f, "level vector has {got} entries, graph has {expected} curve types")
            }
            Error::CeilingExceeded { ceiling } => {
                write!(f, "enumeration exceeded ceiling of {ceiling} nodes")
            }
        }
    }
}

impl core::error::Error for Error {}
