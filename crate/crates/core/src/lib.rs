//! Exact Steiner distance toolkit: Steiner k-eccentricity, k-radius and
//! k-diameter, the extremal graph families that meet the known ratio
//! bounds, and verifiers for the numeric claims made about them.

pub mod decomposition;
pub mod eccentricity;
pub mod families;
pub mod graph;
pub mod scan;
pub mod steiner;
pub mod tree;
pub mod verify;

pub use decomposition::{Decomposition, DecompositionPart, SplitAtX, TreeShape};
pub use eccentricity::{Budget, EccentricityReport, RadiusDiameterReport, SteinerProfile};
pub use families::{EnsembleConfig, FamilyHandle};
pub use graph::{parse_graph, write_graph, Distance, Graph, GraphError, Vertex};
pub use scan::ScanResult;
pub use steiner::{SteinerError, SteinerResult, TerminalSet};
pub use tree::Tree;
pub use verify::{BoundSpec, Status, Tier, VerificationReport};

/// Exact rational used for ratios and bounds.
pub type Rational = num_rational::Ratio<i64>;
