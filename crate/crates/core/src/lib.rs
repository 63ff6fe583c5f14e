//! Exact graph toughness on small graphs.
//!
//! * [`graph`]: bitset graphs, circulants, component counts.
//! * [`invariants`]: independence number and vertex connectivity.
//! * [`engine`]: toughness, `t`-toughness, minimal toughness, and an
//!   exhaustive oracle.
//! * [`families`]: the 4-regular `C(2k+1; 1, 3)` and 6-regular
//!   `C(3k+1; 1, 2, 4)` families with their closed-form toughness and
//!   certificate cuts.
//! * [`report`] / [`certify`]: per-`k` verification reports and their
//!   engine-free re-check.

pub mod certify;
pub mod engine;
pub mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod ratio;
pub mod report;
mod subsets;

pub use engine::{
    is_minimally_tough, is_t_tough, tau_drops_below, toughness, toughness_oracle, MinimalityReport, SearchOptions,
    Toughness, ToughnessResult,
};
pub use error::{EngineError, FamilyError, FormatError, GraphError, RatioError};
pub use families::{
    edge_witness, expected_toughness, four_regular_family, kriesell_gap, six_regular_family, tight_cut, FamilyId,
    FamilyKind, KriesellGap, WitnessCut,
};
pub use graph::{circulant, CirculantSpec, DegreeProfile, Edge, Graph, VertexSet};
pub use invariants::{independence_number, vertex_connectivity};
pub use ratio::Ratio;
