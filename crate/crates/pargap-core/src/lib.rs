//! Exact symbolic engine for symmetry gaps of parabolic geometries.
//!
//! The crate computes, over the rationals and without any floating point,
//! the submaximal symmetry dimension of a parabolic geometry of type (G, P):
//! root systems and gradings, the length-two Hasse diagram of the parabolic,
//! the harmonic curvature modules, and the Tanaka prolongation of the
//! symbol-plus-annihilator data, both by closed-form recipes and by a direct
//! structure-constant oracle that serves as an independent cross-check.

pub mod chevalley;
pub mod error;
pub mod kostant;
pub mod linalg;
pub mod parabolic;
pub mod prolong;
pub mod report;
pub mod rootsys;
pub mod sweeps;
pub mod tables;
pub mod weyl;

pub use chevalley::{
    build_structure_constants, combine_cochains, deform_and_check, filtration_rigidity_check,
    g2_quartic_table, module_basis, oracle_dims, preset_names, preset_spectra, realize_phi0,
    Cochain2, DeformReport, GVec, OracleDims, RigidityReport, Spectra, StructureConstants,
};
pub use error::{Error, Result};
pub use kostant::{h2_modules, is_yamaguchi_rigid, regular_modules, CohomologyModule};
pub use prolong::{
    annihilator_dim, a_plus_dims, branch_report, canonical_parabolic_class,
    canonical_types, detect_exception, is_pr, npr_scan, reduced_geometry,
    submax_dimension, twistor_type, BranchData, SubmaxResult,
};
pub use report::{
    dynkin_ascii, h2_report, run_query, H2Outcome, H2Row, QueryOutcome, TableRow, SCHEMA_VERSION,
};
pub use tables::{
    golden_all, height_and_rigidity_sweep, npr_expected, verify_tables, yamaguchi_nonrigid_expected,
    GoldenRow, SweepStats, TableCheck,
};
pub use parabolic::{
    components_after_deletion, grading_data, grading_level, Component, GradingData,
    Parabolic,
};
pub use rootsys::{build_root_system, Family, LieType, Relabel, Root, RootSystem, Weight};
pub use sweeps::{jacobi_sweep, oracle_sweep, JacobiSweep, OracleSweep};
pub use weyl::{
    affine_action, apply_simple_reflection, apply_word, hasse_length2, inversion_data,
    HasseElement,
};
