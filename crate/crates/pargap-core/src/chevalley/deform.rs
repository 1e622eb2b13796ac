//! Filtered deformation of the symmetry model along a branch.
//!
//! For a regular branch the candidate model is `f = g₋ ⊕ a₀ ⊕ a₊` with the
//! bracket deformed by the lowest weight cochain:
//! `[x,y]_f = [x,y] - φ₀(π₋x, π₋y)`.  The undeformed space must close (it is
//! a subalgebra of the ambient algebra — hard invariant), and the deformed
//! bracket yields a genuine Lie algebra exactly on the non-exceptional
//! branches; any other combination is an internal error.

use std::collections::BTreeMap;

use crate::chevalley::cochain::{act_g0, realize_phi0, Cochain2};
use crate::chevalley::constants::{StructureConstants, SVec};
use crate::error::{Error, Result};
use crate::kostant::CohomologyModule;
use crate::linalg::{nullspace, q, Q, Span};
use crate::parabolic::{grading_level, Parabolic};
use crate::prolong::BranchData;
use crate::weyl::HasseElement;
use num::Zero;

#[derive(Clone, Debug)]
pub struct DeformReport {
    pub element: HasseElement,
    pub dim_f: usize,
    /// Deformed bracket closes and satisfies the Jacobi identity.
    pub deformable: bool,
    pub exceptional: bool,
}

/// Basis of the annihilator of the lowest weight vector inside the
/// grading-zero part, read off combinatorially: the hyperplane of the Cartan
/// killed by the lowest weight, plus the root vectors whose asterisk-grading
/// does not raise the weight.
pub fn a0_recipe_basis(
    sc: &StructureConstants,
    p: &Parabolic,
    m: &CohomologyModule,
) -> Result<Vec<SVec>> {
    let l = sc.rank();
    let np = sc.n_pos();
    let mut out: Vec<SVec> = Vec::new();
    let row: Vec<Q> = m.mu.0.iter().map(|&c| q(c)).collect();
    for t in nullspace(vec![row], l) {
        out.push(
            t.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        );
    }
    for s in 0..np {
        if grading_level(p, &sc.rs.positive_roots[s].0) != 0 {
            continue;
        }
        let zj: i64 = m.j_mu.iter().map(|&j| sc.rs.positive_roots[s].0[j - 1]).sum();
        if zj <= 0 {
            out.push(vec![(sc.idx_pos(s), q(1))]);
        }
        if zj >= 0 {
            out.push(vec![(sc.idx_neg(s), q(1))]);
        }
    }
    Ok(out)
}

fn sparse_get(v: &SVec, idx: usize) -> Q {
    match v.binary_search_by_key(&idx, |e| e.0) {
        Ok(i) => v[i].1.clone(),
        Err(_) => Q::zero(),
    }
}

/// Deformed bracket on sparse elements.
fn br_f(sc: &StructureConstants, phi: &Cochain2, x: &SVec, y: &SVec) -> SVec {
    let mut acc: BTreeMap<usize, Q> = sc.bracket_sparse(x, y).into_iter().collect();
    for ((k1, k2), val) in &phi.entries {
        let n1 = sc.idx_neg(*k1);
        let n2 = sc.idx_neg(*k2);
        let c = sparse_get(x, n1) * sparse_get(y, n2) - sparse_get(x, n2) * sparse_get(y, n1);
        if c.is_zero() {
            continue;
        }
        for (idx, v) in val.iter().enumerate() {
            if !v.is_zero() {
                let e = acc.entry(idx).or_insert_with(Q::zero);
                *e -= v * &c;
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn deform_and_check(
    sc: &StructureConstants,
    p: &Parabolic,
    b: &BranchData,
) -> Result<DeformReport> {
    let m = &b.module;
    if !m.regular {
        return Err(Error::InternalConsistency(
            "deformation check applies to regular branches only".into(),
        ));
    }
    let phi0 = realize_phi0(sc, p, m)?;
    let l = sc.rank();
    let np = sc.n_pos();

    let mut basis: Vec<SVec> = Vec::new();
    let mut allowed = vec![false; sc.dim];
    for s in 0..np {
        if grading_level(p, &sc.rs.positive_roots[s].0) > 0 {
            allowed[sc.idx_neg(s)] = true;
            basis.push(vec![(sc.idx_neg(s), q(1))]);
        }
    }
    let a0 = a0_recipe_basis(sc, p, m)?;
    if a0.len() != b.dim_a0 {
        return Err(Error::InternalConsistency(format!(
            "annihilator basis size {} disagrees with counted dimension {}",
            a0.len(),
            b.dim_a0
        )));
    }
    let mut h_span = Span::new();
    for v in &a0 {
        if v.len() == 1 && v[0].0 >= l {
            allowed[v[0].0] = true;
        } else {
            let mut h = vec![Q::zero(); l];
            for (i, c) in v {
                debug_assert!(*i < l);
                h[*i] = c.clone();
            }
            h_span.insert(&h);
        }
        basis.push(v.clone());
    }
    for level in &b.a_plus {
        for r in level {
            let s = sc.rs.pos_index(&r.0).ok_or_else(|| {
                Error::InternalConsistency("prolongation root missing from system".into())
            })?;
            allowed[sc.idx_pos(s)] = true;
            basis.push(vec![(sc.idx_pos(s), q(1))]);
        }
    }
    let dim_f = basis.len();
    if dim_f != b.dim_a_total {
        return Err(Error::InternalConsistency(format!(
            "model dimension {dim_f} disagrees with counted total {}",
            b.dim_a_total
        )));
    }

    let member = |v: &SVec| -> bool {
        let mut h = vec![Q::zero(); l];
        for (idx, c) in v {
            if *idx < l {
                h[*idx] = c.clone();
            } else if !allowed[*idx] {
                return false;
            }
        }
        h_span.reduce(&h).iter().all(Q::is_zero)
    };

    // Undeformed closure is a structural invariant of the model.
    let mut table: Vec<Vec<SVec>> = Vec::with_capacity(dim_f);
    let mut deformed_closed = true;
    for i in 0..dim_f {
        let mut row = Vec::with_capacity(dim_f - i - 1);
        for jj in i + 1..dim_f {
            let plain = sc.bracket_sparse(&basis[i], &basis[jj]);
            if !member(&plain) {
                return Err(Error::InternalConsistency(format!(
                    "undeformed model for branch {} of {}/{} is not a subalgebra",
                    m.element, sc.lie_type, p
                )));
            }
            let w = br_f(sc, &phi0, &basis[i], &basis[jj]);
            if !member(&w) {
                deformed_closed = false;
            }
            row.push(w);
        }
        table.push(row);
    }

    let mut jacobi_ok = deformed_closed;
    if deformed_closed {
        'outer: for i in 0..dim_f {
            for jj in i + 1..dim_f {
                for k in jj + 1..dim_f {
                    let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
                    let parts = [
                        (br_f(sc, &phi0, &table[i][jj - i - 1], &basis[k]), 1),
                        (br_f(sc, &phi0, &table[jj][k - jj - 1], &basis[i]), 1),
                        (br_f(sc, &phi0, &table[i][k - i - 1], &basis[jj]), -1),
                    ];
                    for (part, sgn) in parts {
                        for (idx, c) in part {
                            let e = acc.entry(idx).or_insert_with(Q::zero);
                            *e += c * q(sgn);
                        }
                    }
                    if acc.values().any(|c| !c.is_zero()) {
                        jacobi_ok = false;
                        break 'outer;
                    }
                }
            }
        }
    }

    let deformable = deformed_closed && jacobi_ok;
    if deformable == b.exceptional {
        return Err(Error::InternalConsistency(format!(
            "deformation verdict for branch {} of {}/{} contradicts the exceptional set",
            m.element, sc.lie_type, p
        )));
    }
    Ok(DeformReport {
        element: m.element,
        dim_f,
        deformable,
        exceptional: b.exceptional,
    })
}

/// Every claimed annihilator basis vector really kills the cochain.
pub fn verify_a0_annihilates(
    sc: &StructureConstants,
    p: &Parabolic,
    m: &CohomologyModule,
) -> Result<()> {
    let phi0 = realize_phi0(sc, p, m)?;
    for v in a0_recipe_basis(sc, p, m)? {
        if !act_g0(sc, p, &v, &phi0).is_zero() {
            return Err(Error::InternalConsistency(format!(
                "claimed annihilator element does not kill the lowest weight vector on {}",
                m.element
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::constants::build_structure_constants;
    use crate::kostant::h2_modules;
    use crate::parabolic::grading_data;
    use crate::prolong::branch_report;
    use crate::rootsys::LieType;

    fn reports(name: &str, crossed: Vec<usize>) -> Vec<DeformReport> {
        let t = LieType::parse(name).unwrap();
        let sc = build_structure_constants(t).unwrap();
        let p = Parabolic::new(crossed, t.rank).unwrap();
        let gr = grading_data(&sc.rs, &p).unwrap();
        h2_modules(&sc.rs, &p)
            .unwrap()
            .iter()
            .filter(|m| m.regular)
            .map(|m| {
                let b = branch_report(&sc.rs, &p, &gr, m).unwrap();
                deform_and_check(&sc, &p, &b).unwrap()
            })
            .collect()
    }

    #[test]
    fn generic_branch_deforms() {
        for r in reports("B3", vec![3]) {
            assert!(r.deformable && !r.exceptional);
        }
        for r in reports("G2", vec![1]) {
            assert!(r.deformable && !r.exceptional);
        }
    }

    #[test]
    fn planar_projective_branch_is_obstructed() {
        let rs = reports("A2", vec![1]);
        assert_eq!(rs.len(), 1);
        assert!(!rs[0].deformable && rs[0].exceptional);
    }

    #[test]
    fn rank_two_contact_pair() {
        // Both regular branches on the full rank-two symplectic flag; only
        // the one ending in the short reflection is obstructed.
        let rs = reports("C2", vec![1, 2]);
        for r in &rs {
            assert_eq!(r.deformable, !r.exceptional);
        }
        assert!(rs.iter().any(|r| r.exceptional));
        assert!(rs.iter().any(|r| !r.exceptional));
    }

    #[test]
    fn annihilator_basis_kills_cochain_small_rank() {
        for name in ["A2", "A3", "C2", "B3", "C3", "G2"] {
            let t = LieType::parse(name).unwrap();
            let sc = build_structure_constants(t).unwrap();
            for mask in 1u32..(1 << t.rank) {
                let crossed: Vec<usize> =
                    (1..=t.rank).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let p = Parabolic::new(crossed, t.rank).unwrap();
                for m in h2_modules(&sc.rs, &p).unwrap() {
                    verify_a0_annihilates(&sc, &p, &m).unwrap();
                }
            }
        }
    }

    #[test]
    fn consistency_sweep_rank_three() {
        use crate::prolong::canonical_types;
        for t in canonical_types(3) {
            let sc = build_structure_constants(t).unwrap();
            for mask in 1u32..(1 << t.rank) {
                let crossed: Vec<usize> =
                    (1..=t.rank).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let p = Parabolic::new(crossed, t.rank).unwrap();
                let gr = grading_data(&sc.rs, &p).unwrap();
                for m in h2_modules(&sc.rs, &p).unwrap() {
                    if !m.regular {
                        continue;
                    }
                    let b = branch_report(&sc.rs, &p, &gr, &m).unwrap();
                    deform_and_check(&sc, &p, &b).unwrap();
                }
            }
        }
    }
}
