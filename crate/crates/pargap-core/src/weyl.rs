//! Weyl group actions and the length-two Hasse diagram of a parabolic.
//!
//! Words act right-to-left: `(j k)` means "reflect in alpha_k first, then in
//! alpha_j". The affine action is `w.lambda = w(lambda + rho) - rho`. The
//! Hasse diagram at length two is produced twice, by the neighbour recipe and
//! by a weight-orbit walk, and the two routes are required to agree, element
//! for element, before anything is returned.

use crate::error::{Error, Result};
use crate::parabolic::Parabolic;
use crate::rootsys::{Root, RootSystem, Weight};
use std::collections::BTreeSet;

/// s_i(lambda): negate the i-th pairing and propagate it along the edges of
/// the diagram, i.e. lambda - <lambda, alpha_i^vee> alpha_i.
pub fn apply_simple_reflection(rs: &RootSystem, i: usize, w: &Weight) -> Weight {
    let r = w.0[i - 1];
    let mut out = w.0.clone();
    for j in 0..rs.rank() {
        out[j] -= r * rs.cartan[i - 1][j];
    }
    Weight(out)
}

/// Applies a word right-to-left (linear action).
pub fn apply_word(rs: &RootSystem, word: &[usize], w: &Weight) -> Weight {
    let mut cur = w.clone();
    for &i in word.iter().rev() {
        cur = apply_simple_reflection(rs, i, &cur);
    }
    cur
}

/// The affine action w.lambda = w(lambda + rho) - rho.
pub fn affine_action(rs: &RootSystem, word: &[usize], lambda: &Weight) -> Weight {
    let rho = rs.rho();
    let shifted = Weight(
        lambda.0.iter().zip(&rho.0).map(|(a, b)| a + b).collect(),
    );
    let moved = apply_word(rs, word, &shifted);
    Weight(moved.0.iter().zip(&rho.0).map(|(a, b)| a - b).collect())
    }

/// A length-two element w = s_j s_k of the relative Weyl group W^p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HasseElement {
    pub j: usize,
    pub k: usize,
}

impl std::fmt::Display for HasseElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.j < 10 && self.k < 10 {
            write!(f, "({}{})", self.j, self.k)
        } else {
            write!(f, "({},{})", self.j, self.k)
        }
    }
}

impl HasseElement {
    pub fn word(&self) -> [usize; 2] {
        [self.j, self.k]
    }

    /// Words (j k) and (k j) name the same element when the reflections
    /// commute; the smaller-first word is the canonical spelling.
    pub fn canonical_word(&self, rs: &RootSystem) -> [usize; 2] {
        if rs.cartan[self.j - 1][self.k - 1] == 0 && self.k < self.j {
            [self.k, self.j]
        } else {
            [self.j, self.k]
        }
    }
}

/// All length-two elements of W^p, by the neighbour recipe, cross-checked
/// against the orbit of the crossed-node weight under the right action.
pub fn hasse_length2(rs: &RootSystem, p: &Parabolic) -> Result<Vec<HasseElement>> {
    let l = rs.rank();
    let mut out = Vec::new();
    for &j in &p.crossed {
        for k in 1..=l {
            if k == j {
                continue;
            }
            let admissible = p.crossed.contains(&k) || rs.cartan[k - 1][j - 1] <= -1;
            if !admissible {
                continue;
            }
            // commuting reflections with both nodes crossed give the same
            // element twice; keep the smaller-first spelling only
            if rs.cartan[j - 1][k - 1] == 0 && p.crossed.contains(&k) && k < j {
                continue;
            }
            out.push(HasseElement { j, k });
        }
    }
    out.sort();

    // independent route: depth-two orbit of rho^p under nu -> s_i(nu)
    let rho_p = {
        let mut v = vec![0i64; l];
        for &i in &p.crossed {
            v[i - 1] = 1;
        }
        Weight(v)
    };
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    seen.insert(rho_p.clone());
    let mut depth1: Vec<Weight> = Vec::new();
    for i in 1..=l {
        let nu = apply_simple_reflection(rs, i, &rho_p);
        if nu != rho_p && seen.insert(nu.clone()) {
            depth1.push(nu);
        }
    }
    let mut depth2: BTreeSet<Weight> = BTreeSet::new();
    for nu in &depth1 {
        for i in 1..=l {
            let mu = apply_simple_reflection(rs, i, nu);
            if !seen.contains(&mu) {
                depth2.insert(mu);
            }
        }
    }
    let mut recipe_weights: BTreeSet<Weight> = BTreeSet::new();
    for h in &out {
        let mu = apply_simple_reflection(
            rs,
            h.k,
            &apply_simple_reflection(rs, h.j, &rho_p),
        );
        if !recipe_weights.insert(mu) {
            return Err(Error::InternalConsistency(format!(
                "{}/{p}: recipe produced a repeated Weyl element at ({},{})",
                rs.lie_type, h.j, h.k
            )));
        }
    }
    if recipe_weights != depth2 {
        return Err(Error::InternalConsistency(format!(
            "{}/{p}: length-two Hasse recipe and orbit walk disagree \
             ({} vs {} elements)",
            rs.lie_type,
            recipe_weights.len(),
            depth2.len()
        )));
    }
    Ok(out)
}

/// The inversion set Phi_w = {alpha_j, s_j(alpha_k)} together with w(-lambda),
/// checked against sum(Phi_w) = -w.0.
pub fn inversion_data(
    rs: &RootSystem,
    h: &HasseElement,
    lambda: &Weight,
) -> Result<(Vec<Root>, Weight)> {
    let l = rs.rank();
    let alpha_j = rs.simple_root(h.j);
    let mut second = vec![0i64; l];
    second[h.k - 1] = 1;
    second[h.j - 1] -= rs.cartan[h.k - 1][h.j - 1];
    let phi = vec![alpha_j, Root(second)];
    for root in &phi {
        if !root.is_positive() || rs.pos_index(&root.0).is_none() {
            return Err(Error::InternalConsistency(format!(
                "inversion set of ({},{}) contains a non-root {root:?}",
                h.j, h.k
            )));
        }
    }
    let w_neg_lambda = apply_word(rs, &h.word(), &lambda.negated());

    let minus_w_dot_zero =
        affine_action(rs, &h.word(), &Weight::zero(l)).negated();
    let sum_phi: Vec<i64> = (0..l).map(|i| phi[0].0[i] + phi[1].0[i]).collect();
    if rs.root_to_weight(&sum_phi) != minus_w_dot_zero {
        return Err(Error::InternalConsistency(format!(
            "sum of Phi_w != -w.0 for word ({},{})",
            h.j, h.k
        )));
    }
    Ok((phi, w_neg_lambda))
}
