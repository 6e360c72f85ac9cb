//! Exhaustive censuses of `(reg, deg h)` over connected graphs, the lattice
//! regions they are compared against, and the Cameron-Walker point count.

mod census;
mod enumerate;
mod lattice;
mod report;

pub use census::{
    compute_census, compute_census_checkpointed, examine, parse_points_csv, points_csv,
    GraphOutcome, RdCensus, RdPoint, Violation,
};
pub use enumerate::{enumerate_connected, read_graph6, INTERNAL_LIMIT};
pub use lattice::{
    asymptotics_probe, count_cw, lattice_a, lattice_b, lattice_cw, AsymptoticsRow, Lattice,
};
pub use report::{
    check_cw_witnesses, convexity_probe, verify_cw_characterization, verify_sandwich,
    ConvexityReport, CwReport, SandwichReport, WitnessMismatch,
};
