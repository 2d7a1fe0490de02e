//! Exact Ollivier-Ricci curvature on regular graphs, Bonnet-Myers sharpness
//! detection, good optimal transport maps, and executable checks of the
//! structure of sharp graphs.
//!
//! All curvature values are exact rationals. Sampling of transport maps is
//! seeded, so every result is reproducible.

pub mod checks;
pub mod error;
pub mod families;
pub mod graph;
pub mod rational;
pub mod report;
pub mod sharpness;
pub mod transport;

pub use checks::{run_all, CheckOptions, Quad, Verifier, POLE_CHECKS};
pub use error::{CheckError, FamilyError, GraphError, SharpnessError, TransportError};
pub use families::{FamilyKind, FamilySpec, RatioCheck};
pub use graph::{DirectionalDegrees, Graph, GraphJson, Vertex, VertexSet};
pub use rational::Rational;
pub use report::{CheckReport, Verdict, Witness};
pub use sharpness::{poles, sharpness_report, EdgeCurvature, PoleReport, SharpnessReport};
pub use transport::{good_transport_map, ollivier_curvature, sample_good_maps, wasserstein_w1, TransportMap};
