use thiserror::Error;

use crate::sharpness::SharpnessReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected: no path from {0} to {1}")]
    Disconnected(usize, usize),
    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: parameter out of range ({detail})")]
    ParameterOutOfRange { family: &'static str, detail: String },
    #[error("demicube dimension must be even, got {0}")]
    OddDimension(usize),
    #[error("cartesian product needs at least one factor")]
    EmptyFactorList,
    #[error("factor {0} is not regular")]
    NotRegularFactor(usize),
    #[error("at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransportError {
    #[error("cost matrix is not square (row {row} has {len} entries, expected {n})")]
    NonSquare { row: usize, len: usize, n: usize },
    #[error("negative cost {value} at ({row}, {col})")]
    NegativeCost { row: usize, col: usize, value: i64 },
    #[error("graph is not regular")]
    NotRegular,
    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(usize, usize),
    #[error("no good optimal map for {from}->{to}: {reason}")]
    GoodMapUnavailable { from: usize, to: usize, reason: String },
    #[error("start vertex {z} is not in the 1-ball of {center}")]
    ZNotInBall { z: usize, center: usize },
    #[error("map {index} transports {found:?} but the path step is {expected:?}")]
    MapPathMismatch { index: usize, expected: (usize, usize), found: (usize, usize) },
    #[error("transport chain {sequence:?} has length {sum}, expected {expected}")]
    GeodesicSumViolation { sequence: Vec<usize>, sum: u32, expected: u32 },
    #[error("move {v}->{image} at step {step} has layers m={m}, n={n}, distance {distance}")]
    WindowViolation { v: usize, image: usize, step: u32, m: u32, n: u32, distance: u32 },
    #[error("invalid geodesic: {0}")]
    InvalidPath(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Error)]
pub enum SharpnessError {
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not Bonnet-Myers sharp (min curvature {min_curvature}, diameter {diameter})")]
    NotSharpInput { min_curvature: String, diameter: u32 },
    #[error("diameter {diameter} exceeds the bound {bound} from min curvature")]
    BoundViolated { diameter: u32, bound: String },
    #[error(transparent)]
    Transport(#[from] TransportError),
}

#[derive(Debug, Clone, Error)]
pub enum CheckError {
    #[error("vertex {0} is not a pole")]
    NotAPole(usize),
    #[error("graph is not Bonnet-Myers sharp")]
    NotSharp(Box<SharpnessReport>),
    #[error("graph is not regular")]
    NotRegular,
    #[error(transparent)]
    Transport(#[from] TransportError),
    #[error(transparent)]
    Sharpness(#[from] SharpnessError),
}
