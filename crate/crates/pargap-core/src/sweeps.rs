//! Whole-classification sweeps that pit the combinatorial recipes against
//! the structure-constant realisation: the deformation closure check over
//! every regular branch, and the level-by-level annihilator/prolongation
//! dimension comparison.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::chevalley::{
    build_structure_constants, deform_and_check, oracle_dims, realize_phi0,
};
use crate::error::{Error, Result};
use crate::kostant::regular_modules;
use crate::parabolic::{grading_data, Parabolic};
use crate::prolong::{annihilator_dim, a_plus_dims, branch_report, canonical_types};
use crate::rootsys::{build_root_system, Family, LieType};

/// The proven obstructed branches, spelled independently of the detector in
/// the branch recipes so the sweep is a genuine cross-check.
const OBSTRUCTED: &[(Family, &[usize], (usize, usize))] = &[
    (Family::A, &[1], (1, 2)),
    (Family::A, &[2], (2, 1)),
    (Family::A, &[1, 2], (1, 2)),
    (Family::A, &[1, 2], (2, 1)),
    (Family::C, &[2], (2, 1)),
    (Family::C, &[1, 2], (2, 1)),
];

#[derive(Clone, Debug, Default)]
pub struct JacobiSweep {
    pub types: usize,
    pub geometries: usize,
    pub branches: usize,
    /// Branches whose deformed bracket fails to close (submaximal bound
    /// drops by one there).
    pub exceptions: Vec<(LieType, Vec<usize>, (usize, usize))>,
}

/// Runs the deformation closure check on every regular branch of every
/// parabolic up to `max_rank` and verifies the obstructed set is exactly
/// the proven rank-two list.
pub fn jacobi_sweep(max_rank: usize) -> Result<JacobiSweep> {
    let mut out = JacobiSweep::default();
    for t in canonical_types(max_rank) {
        let rs = build_root_system(t)?;
        let sc = build_structure_constants(t)?;
        let l = t.rank;
        out.types += 1;
        let per_mask: Vec<(usize, Vec<(Vec<usize>, (usize, usize))>)> = (1u32..(1 << l))
            .into_par_iter()
            .map(|mask| {
                let crossed: Vec<usize> =
                    (1..=l).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let p = Parabolic::new(crossed, l)?;
                let gr = grading_data(&rs, &p)?;
                let mut branches = 0;
                let mut exceptions = Vec::new();
                for m in regular_modules(&rs, &p)? {
                    let b = branch_report(&rs, &p, &gr, &m)?;
                    let rep = deform_and_check(&sc, &p, &b)?;
                    branches += 1;
                    if !rep.deformable {
                        exceptions
                            .push((p.crossed.clone(), (m.element.j, m.element.k)));
                    }
                }
                Ok((branches, exceptions))
            })
            .collect::<Result<_>>()?;
        for (branches, exceptions) in per_mask {
            out.geometries += 1;
            out.branches += branches;
            for (crossed, word) in exceptions {
                out.exceptions.push((t, crossed, word));
            }
        }
    }

    let got: BTreeSet<(LieType, Vec<usize>, (usize, usize))> =
        out.exceptions.iter().cloned().collect();
    let want: BTreeSet<(LieType, Vec<usize>, (usize, usize))> = OBSTRUCTED
        .iter()
        .filter(|(f, _, _)| {
            canonical_types(max_rank).contains(&LieType { family: *f, rank: 2 })
        })
        .map(|(f, crossed, word)| {
            (LieType { family: *f, rank: 2 }, crossed.to_vec(), *word)
        })
        .collect();
    if got != want {
        return Err(Error::Verification(format!(
            "obstructed branches {got:?} differ from the proven list {want:?}"
        )));
    }
    out.exceptions.sort();
    Ok(out)
}

#[derive(Clone, Debug, Default)]
pub struct OracleSweep {
    pub types: usize,
    pub geometries: usize,
    /// Geometries with no regular module, skipped by the comparison.
    pub rigid_skipped: usize,
    pub modules: usize,
}

/// Compares recipe dimensions (negative part, annihilator, prolongation
/// levels) against the structure-constant oracle for every regular branch
/// up to `max_rank`.
pub fn oracle_sweep(max_rank: usize) -> Result<OracleSweep> {
    let mut out = OracleSweep::default();
    for t in canonical_types(max_rank) {
        let rs = build_root_system(t)?;
        let sc = build_structure_constants(t)?;
        let l = t.rank;
        out.types += 1;
        let per_mask: Vec<(bool, usize)> = (1u32..(1 << l))
            .into_par_iter()
            .map(|mask| {
                let crossed: Vec<usize> =
                    (1..=l).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let p = Parabolic::new(crossed, l)?;
                let gr = grading_data(&rs, &p)?;
                let modules = regular_modules(&rs, &p)?;
                if modules.is_empty() {
                    return Ok((true, 0));
                }
                for m in &modules {
                    let recipe_a0 = annihilator_dim(&rs, &p, m)?;
                    let recipe_plus: Vec<usize> =
                        a_plus_dims(&rs, &p, m)?.iter().map(Vec::len).collect();
                    let phi0 = realize_phi0(&sc, &p, m)?;
                    let oracle = oracle_dims(&sc, &p, &phi0)?;
                    let mut oracle_plus = oracle.plus.clone();
                    while oracle_plus.last() == Some(&0) {
                        oracle_plus.pop();
                    }
                    if oracle.dim_g_minus != gr.dim_g_minus
                        || oracle.dim_a0 != recipe_a0
                        || oracle_plus != recipe_plus
                    {
                        return Err(Error::InternalConsistency(format!(
                            "{t}/{p} ({},{}): recipe ({}, {recipe_a0}, {recipe_plus:?}) \
                             vs oracle ({}, {}, {:?})",
                            m.element.j,
                            m.element.k,
                            gr.dim_g_minus,
                            oracle.dim_g_minus,
                            oracle.dim_a0,
                            oracle.plus,
                        )));
                    }
                }
                Ok((false, modules.len()))
            })
            .collect::<Result<_>>()?;
        for (rigid, modules) in per_mask {
            out.geometries += 1;
            if rigid {
                out.rigid_skipped += 1;
            }
            out.modules += modules;
        }
    }
    Ok(out)
}
