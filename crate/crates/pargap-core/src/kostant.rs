//! Degree-two Lie algebra cohomology of the nilradical with adjoint
//! coefficients, as indexed by the length-two Hasse diagram.
//!
//! Each element w = s_j s_k contributes one irreducible g0-module with lowest
//! weight mu = -w.lambda_g (affine action on the highest root). The lowest
//! weight vector is phi_0 = e_{alpha_j} ^ e_{s_j(alpha_k)} (x) e_{w(-lambda_g)},
//! and the module matters for curvature exactly when its homogeneity Z(mu) is
//! positive. Regularity is decided twice -- from Z(mu) and from a closed-form
//! inequality in the Cartan data -- and both answers must agree.

use crate::error::{Error, Result};
use crate::parabolic::{grading_level, Parabolic};
use crate::rootsys::{Root, RootSystem, Weight};
use crate::weyl::{affine_action, hasse_length2, inversion_data, HasseElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyModule {
    pub element: HasseElement,
    /// Lowest weight mu = -w.lambda_g, in fundamental-weight coordinates.
    pub mu: Weight,
    /// The same weight in simple-root coordinates.
    pub mu_root: Vec<i64>,
    /// Homogeneity Z(mu) of the module.
    pub homogeneity: i64,
    /// Wedge part of the lowest weight vector: the inversion set Phi_w.
    pub wedge: [Root; 2],
    /// Coefficient part w(-lambda_g), in (signed) simple-root coordinates.
    pub g_part: Vec<i64>,
    /// Uncrossed nodes where mu pairs nontrivially (asterisks).
    pub j_mu: Vec<usize>,
    /// Crossed nodes where mu pairs trivially (squares).
    pub i_mu: Vec<usize>,
    pub regular: bool,
}

/// All second-cohomology modules of (g, p), one per length-two Hasse element.
pub fn h2_modules(rs: &RootSystem, p: &Parabolic) -> Result<Vec<CohomologyModule>> {
    let lambda = rs.root_to_weight(&rs.highest_root().0.clone());
    let mut out = Vec::new();
    for h in hasse_length2(rs, p)? {
        let w_dot = affine_action(rs, &h.word(), &lambda);
        for j in 1..=rs.rank() {
            if !p.contains(j) && w_dot.0[j - 1] < 0 {
                return Err(Error::InternalConsistency(format!(
                    "w.lambda not p-dominant for word ({},{})",
                    h.j, h.k
                )));
            }
        }
        let mu = w_dot.negated();
        let mu_root = rs.weight_to_root(&mu)?;
        let (phi, w_neg_lambda) = inversion_data(rs, &h, &lambda)?;
        let g_part = rs.weight_to_root(&w_neg_lambda)?;
        if !rs.is_root(&g_part) {
            return Err(Error::InternalConsistency(format!(
                "w(-lambda_g) = {g_part:?} is not a root"
            )));
        }
        let resum: Vec<i64> = (0..rs.rank())
            .map(|i| phi[0].0[i] + phi[1].0[i] + g_part[i])
            .collect();
        if resum != mu_root {
            return Err(Error::InternalConsistency(format!(
                "mu != sum(Phi_w) + w(-lambda_g) for word ({},{})",
                h.j, h.k
            )));
        }
        let homogeneity = grading_level(p, &mu_root);
        let j_mu: Vec<usize> = (1..=rs.rank())
            .filter(|&j| !p.contains(j) && mu.0[j - 1] != 0)
            .collect();
        let i_mu: Vec<usize> = p
            .crossed
            .iter()
            .copied()
            .filter(|&i| mu.0[i - 1] == 0)
            .collect();
        out.push(CohomologyModule {
            element: h,
            mu,
            mu_root,
            homogeneity,
            wedge: [phi[0].clone(), phi[1].clone()],
            g_part,
            j_mu,
            i_mu,
            regular: homogeneity >= 1,
        });
    }
    Ok(out)
}

/// The closed-form regularity test for w = s_j s_k:
/// Z(lambda) <= r_j + (r_k + 1)(Z(alpha_k) - c_kj).
fn regular_by_closed_form(
    rs: &RootSystem,
    p: &Parabolic,
    lambda: &Weight,
    h: &HasseElement,
) -> bool {
    let r_j = lambda.0[h.j - 1];
    let r_k = lambda.0[h.k - 1];
    let z_lambda = {
        let root = rs
            .weight_to_root(lambda)
            .expect("highest root lies in the root lattice");
        grading_level(p, &root)
    };
    let z_alpha_k = i64::from(p.contains(h.k));
    let c_kj = rs.cartan[h.k - 1][h.j - 1];
    z_lambda <= r_j + (r_k + 1) * (z_alpha_k - c_kj)
}

/// The modules of positive homogeneity, with the homogeneity decision
/// cross-checked against the closed form for every module.
pub fn regular_modules(rs: &RootSystem, p: &Parabolic) -> Result<Vec<CohomologyModule>> {
    let lambda = rs.root_to_weight(&rs.highest_root().0.clone());
    let all = h2_modules(rs, p)?;
    for m in &all {
        let closed = regular_by_closed_form(rs, p, &lambda, &m.element);
        if closed != m.regular {
            return Err(Error::InternalConsistency(format!(
                "{}/{p} ({},{}): homogeneity {} vs closed-form regularity {}",
                rs.lie_type, m.element.j, m.element.k, m.homogeneity, closed
            )));
        }
    }
    Ok(all.into_iter().filter(|m| m.regular).collect())
}

/// A geometry is rigid in this sense iff no module is regular: every
/// infinitesimal symmetry bound then comes out maximal.
pub fn is_yamaguchi_rigid(rs: &RootSystem, p: &Parabolic) -> Result<bool> {
    Ok(regular_modules(rs, p)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, Family, LieType};

    fn rs(f: Family, l: usize) -> RootSystem {
        build_root_system(LieType { family: f, rank: l }).unwrap()
    }

    fn par(rs: &RootSystem, nodes: &[usize]) -> Parabolic {
        Parabolic::new(nodes.to_vec(), rs.rank()).unwrap()
    }

    #[test]
    fn g2_p1_single_module() {
        let g2 = rs(Family::G, 2);
        let ms = h2_modules(&g2, &par(&g2, &[1])).unwrap();
        assert_eq!(ms.len(), 1);
        let m = &ms[0];
        assert_eq!(m.element, HasseElement { j: 1, k: 2 });
        assert_eq!(m.mu.0, vec![8, -4]);
        assert_eq!(m.mu_root, vec![4, 0]);
        assert_eq!(m.homogeneity, 4);
        assert_eq!(m.wedge[0].0, vec![1, 0]);
        assert_eq!(m.wedge[1].0, vec![3, 1]);
        assert_eq!(m.g_part, vec![0, -1]);
        assert_eq!(m.j_mu, vec![2]);
        assert!(m.i_mu.is_empty());
        assert!(m.regular);
    }

    #[test]
    fn b_series_conformal_module() {
        let b4 = rs(Family::B, 4);
        let ms = h2_modules(&b4, &par(&b4, &[1])).unwrap();
        assert_eq!(ms.len(), 1);
        let m = &ms[0];
        assert_eq!(m.mu.0, vec![4, 0, -2, 0]);
        assert_eq!(m.mu_root, vec![2, 0, -2, -2]);
        assert_eq!(m.homogeneity, 2);
        assert_eq!(m.wedge[0].0, vec![1, 0, 0, 0]);
        assert_eq!(m.wedge[1].0, vec![1, 1, 0, 0]);
        assert_eq!(m.g_part, vec![0, -1, -2, -2]);
    }

    #[test]
    fn c6_typical_flag_module() {
        let c6 = rs(Family::C, 6);
        let ms = h2_modules(&c6, &par(&c6, &[1, 2, 5])).unwrap();
        let m = ms
            .iter()
            .find(|m| m.element == HasseElement { j: 2, k: 1 })
            .unwrap();
        assert_eq!(m.mu.0, vec![0, 5, -4, 0, 0, 0]);
        assert_eq!(m.j_mu, vec![3]);
        assert_eq!(m.i_mu, vec![1, 5]);
        assert!(m.regular);
    }

    #[test]
    fn a3_two_crossings_all_regular() {
        let a3 = rs(Family::A, 3);
        let ms = regular_modules(&a3, &par(&a3, &[1, 2])).unwrap();
        let words: Vec<[usize; 2]> = ms.iter().map(|m| m.element.word()).collect();
        assert_eq!(words, vec![[1, 2], [2, 1], [2, 3]]);
        let m23 = &ms[2];
        assert_eq!(m23.mu.0, vec![-4, 4, 0]);
        assert!(m23.j_mu.is_empty());
        assert!(m23.i_mu.is_empty());
    }

    #[test]
    fn e8_p8_unique_regular_module() {
        let e8 = rs(Family::E, 8);
        let ms = regular_modules(&e8, &par(&e8, &[8])).unwrap();
        assert_eq!(ms.len(), 1);
        let m = &ms[0];
        assert_eq!(m.element, HasseElement { j: 8, k: 7 });
        assert_eq!(m.j_mu, vec![6, 7]);
        assert!(m.i_mu.is_empty());
    }

    #[test]
    fn f4_two_crossings_is_rigid() {
        let f4 = rs(Family::F, 4);
        let p = par(&f4, &[1, 2]);
        assert!(is_yamaguchi_rigid(&f4, &p).unwrap());
        let ms = h2_modules(&f4, &p).unwrap();
        assert_eq!(ms.len(), 3);
        let m21 = ms
            .iter()
            .find(|m| m.element == HasseElement { j: 2, k: 1 })
            .unwrap();
        assert_eq!(m21.mu.0, vec![0, 4, -6, 0]);
        assert_eq!(m21.homogeneity, 0);
        assert_eq!(m21.i_mu, vec![1]);
        assert_eq!(m21.j_mu, vec![3]);
        assert!(!m21.regular);
    }

    #[test]
    fn g2_contact_keeps_only_one_word() {
        let g2 = rs(Family::G, 2);
        let ms = regular_modules(&g2, &par(&g2, &[1, 2])).unwrap();
        let words: Vec<[usize; 2]> = ms.iter().map(|m| m.element.word()).collect();
        assert_eq!(words, vec![[1, 2]]);
    }

    #[test]
    fn a_series_regularity_needs_few_crossings() {
        // Z(lambda_g) = |I| in type A, so five crossings kill regularity
        let a7 = rs(Family::A, 7);
        assert!(is_yamaguchi_rigid(&a7, &par(&a7, &[1, 2, 3, 4, 5])).unwrap());
        assert!(!is_yamaguchi_rigid(&a7, &par(&a7, &[1, 2, 4, 6])).unwrap());
    }
}
