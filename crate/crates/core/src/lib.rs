//! Exact slope-stability analysis for syzygy bundles on comb-like curves.
//!
//! A comb-like curve is a nodal curve of compact type whose last component
//! meets every other component in one node. Given the numerical type of a
//! generated pair `(E, V)` on such a curve, this crate
//!
//! * computes `χ(E)`, `χ(M_{E,V})` and the kernel ranks `t_i` ([`numerics`]),
//! * lists the kernel-twist subsheaves of `M_{E,V}` used to destabilize it
//!   ([`catalog`]),
//! * compares polarized slopes exactly at a fixed polarization
//!   ([`polarization`]),
//! * decides whether any polarization survives the whole catalog, returning a
//!   rational witness or a checkable infeasibility certificate
//!   ([`feasibility`]),
//! * reads instance files and writes reports ([`instance`], [`report`]).
//!
//! All arithmetic is exact.

pub mod catalog;
pub mod cli;
pub mod curve;
pub mod error;
pub mod feasibility;
pub mod instance;
pub mod numerics;
pub mod polarization;
pub mod rational;
pub mod report;

pub use catalog::{build_catalog, restriction_slope_check, Destabilizer, DestabilizerKind};
pub use curve::CombCurve;
pub use error::{Error, Result};
pub use feasibility::{
    build_constraint_system, decide, grid_oracle, strong_instability_report, Certificate,
    ConstraintSystem, FeasibilityResult, GridResult, LinearConstraint, StrongVerdict,
};
pub use instance::{emit_instance, parse_instance, Instance, InstanceFile};
pub use numerics::{chi_bundle, syzygy_multisheaf, GeneratedPairData, MultiSheaf};
pub use polarization::{compare_slopes, slope, verdict_at, Polarization, Verdict};
pub use rational::Rational;
pub use report::{run_analyze, AnalyzeOptions, Report};
