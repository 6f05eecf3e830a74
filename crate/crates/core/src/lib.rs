//! Arc-connectivity augmentation by reversing arcs one at a time.
//!
//! Given a digraph `D` and an arc set `F` whose reversal makes `D`
//! k-arc-connected, [`reorient`] reverses arcs of `F` individually without
//! ever lowering `λ(D)`, and [`certificate`] explains instances where no
//! single arc can be reversed.
//!
//! ```
//! use revarc::{fixture, monotone_sequence, Mode, Status};
//!
//! let t = fixture("triangle_example").unwrap();
//! let report = monotone_sequence(&t.digraph, &t.f, 2, Mode::First).unwrap();
//! assert_eq!(report.lambdas(), vec![1, 2]);
//! assert_eq!(report.status, Status::ReachedK);
//! ```

pub mod certificate;
pub mod connectivity;
pub mod digraph;
pub mod dot;
pub mod error;
pub mod flow;
pub mod io;
pub mod oracle;
pub mod reorient;
pub mod sparsify;
pub mod tight_sets;

pub use certificate::{
    blocking_certificate, split_certificate, verify_certificate, Certificate, Property,
    VerificationReport,
};
pub use connectivity::{
    arc_connectivity, is_k_arc_connected, min_in_tight_set_entered_by, Cut, Lambda,
};
pub use digraph::{Arc, ArcId, ArcSet, Digraph, Vertex, VertexSet};
pub use dot::{to_dot, to_dot_labeled};
pub use error::{Error, Result};
pub use flow::{max_flow, MaxFlow};
pub use io::{parse_digraph, write_instance};
pub use oracle::{fixture, Fixture};
pub use reorient::{
    find_reversible_arc, monotone_sequence, reorientation_pipeline, thresholds, Mode,
    PipelineReport, Search, SequenceReport, Status, Step, StepOutcome, Threshold,
};
pub use sparsify::{dalmazzo_sparsify, SparsifyResult};
pub use tight_sets::{build_blocking_family, uncross, TightFamily};
