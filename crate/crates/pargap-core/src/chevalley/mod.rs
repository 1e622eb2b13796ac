//! Structure-constant realisation of the algebra and everything that needs
//! it: explicit cochains, annihilator and prolongation computations, the
//! deformation closure test, and the filtration rigidity criterion.

pub mod cochain;
pub mod constants;
pub mod deform;
pub mod rigidity;

pub use cochain::{
    act_g0, annihilator, combine_cochains, g2_quartic_table, module_basis, oracle_dims,
    prolongation_dims, realize_phi0, Cochain2, OracleDims,
};
pub use constants::{build_structure_constants, GVec, StructureConstants, SVec};
pub use deform::{a0_recipe_basis, deform_and_check, verify_a0_annihilates, DeformReport};
pub use rigidity::{
    filtration_rigidity_check, preset_names, preset_spectra, RigidityReport, Spectra,
};
