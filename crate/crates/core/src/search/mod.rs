//! Exhaustive verification, barbell sweeps, diameter audits and hill climbing.

mod audit;
mod barbell;
mod climb;
mod report;
mod verify;

pub use audit::{bound_audit, diameter_bound, BoundAudit};
pub use barbell::{
    barbell_sweep, fit_gap_constant, paper_family_params, sweep_record, SweepMode, SweepRecord,
    MIN_SWEEP_N,
};
pub use climb::{hill_climb, ClimbOutcome, HillClimbState, IMPROVEMENT_EPS, MIN_CLIMB_N};
pub use report::{diameter_lower_bound_report, Candidate, DiameterReportEntry, FLAG_RATIO};
pub use verify::{
    enumerate_verify, enumerate_verify_with, verify_graphs, EnumerationSummary, DEFAULT_TOL,
    KERNEL_RTOL, TRACE_TOL,
};
