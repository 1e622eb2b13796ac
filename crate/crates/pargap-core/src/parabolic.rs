//! Parabolic subalgebras, the grading they induce, and the combinatorics of
//! deleted-node diagrams.
//!
//! A parabolic is a nonempty set of crossed nodes. Crossing induces the
//! |k|-grading by the crossed-coefficient sum Z(alpha); deleting nodes leaves
//! a disjoint union of smaller diagrams, which we classify back to named
//! types by exact Cartan-matrix pattern matching (preferring A over D and C
//! over B where the shapes coincide).

use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, Family, LieType, RootSystem};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Parabolic {
    pub crossed: Vec<usize>,
}

impl Parabolic {
    pub fn new(mut nodes: Vec<usize>, rank: usize) -> Result<Self> {
        nodes.sort_unstable();
        nodes.dedup();
        if nodes.is_empty() {
            return Err(Error::InvalidParabolic(
                "at least one crossed node is required".into(),
            ));
        }
        for &i in &nodes {
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
        }
        Ok(Parabolic { crossed: nodes })
    }

    pub fn contains(&self, i: usize) -> bool {
        self.crossed.binary_search(&i).is_ok()
    }
}

impl fmt::Display for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.crossed.len() == 1 {
            return write!(f, "P{}", self.crossed[0]);
        }
        write!(f, "P{{")?;
        for (i, n) in self.crossed.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "}}")
    }
}

/// Grading level Z(alpha): the sum of the coefficients of alpha over the
/// crossed nodes. Defined for signed coefficient vectors.
pub fn grading_level(p: &Parabolic, coeffs: &[i64]) -> i64 {
    p.crossed.iter().map(|&i| coeffs[i - 1]).sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingData {
    /// Depth nu of the grading (level of the highest root).
    pub depth: i64,
    /// Dimension of each graded piece, levels -nu..=nu.
    pub dim_by_level: BTreeMap<i64, usize>,
    pub dim_g_minus: usize,
    pub dim_g0: usize,
    pub dim_g0_ss: usize,
}

pub fn grading_data(rs: &RootSystem, p: &Parabolic) -> Result<GradingData> {
    let mut dim_by_level: BTreeMap<i64, usize> = BTreeMap::new();
    for root in &rs.positive_roots {
        let z = grading_level(p, &root.0);
        if z < 0 {
            return Err(Error::InternalConsistency(format!(
                "positive root {root} has negative level"
            )));
        }
        *dim_by_level.entry(z).or_insert(0) += 1;
        *dim_by_level.entry(-z).or_insert(0) += 1;
    }
    let zero_pairs = dim_by_level.remove(&0).unwrap_or(0);
    let dim_g0 = rs.rank() + zero_pairs;
    dim_by_level.insert(0, dim_g0);
    let depth = *dim_by_level.keys().max().unwrap();
    if depth == 0 {
        return Err(Error::InternalConsistency(
            "trivial grading from a nonempty parabolic".into(),
        ));
    }
    let dim_g_minus: usize = dim_by_level
        .iter()
        .filter(|(&z, _)| z < 0)
        .map(|(_, &d)| d)
        .sum();
    let removed: BTreeSet<usize> = p.crossed.iter().copied().collect();
    let comps = components_after_deletion(rs.lie_type, &removed)?;
    let dim_g0_ss: usize = comps.iter().map(|c| c.lie_type.dim()).sum();
    if dim_g0_ss + p.crossed.len() != dim_g0 {
        return Err(Error::InternalConsistency(format!(
            "{}/{p}: semisimple part {dim_g0_ss} + centre {} != dim g0 {dim_g0}",
            rs.lie_type,
            p.crossed.len()
        )));
    }
    Ok(GradingData {
        depth,
        dim_by_level,
        dim_g_minus,
        dim_g0,
        dim_g0_ss,
    })
}

/// A connected component of a deleted-node diagram, classified to a named
/// type. `orig_nodes[c-1]` is the original node label sitting at canonical
/// node `c` of the component type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub lie_type: LieType,
    pub orig_nodes: Vec<usize>,
}

impl Component {
    pub fn to_canonical(&self, orig: usize) -> Option<usize> {
        self.orig_nodes.iter().position(|&x| x == orig).map(|i| i + 1)
    }
}

/// Splits the diagram of `t` minus `removed` into connected components and
/// identifies each as a named type with an explicit node matching.
pub fn components_after_deletion(
    t: LieType,
    removed: &BTreeSet<usize>,
) -> Result<Vec<Component>> {
    let cartan = t.cartan_matrix();
    let kept: Vec<usize> = (1..=t.rank).filter(|n| !removed.contains(n)).collect();
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut comps = Vec::new();
    for &start in &kept {
        if seen.contains(&start) {
            continue;
        }
        let mut nodes = vec![start];
        seen.insert(start);
        let mut frontier = vec![start];
        while let Some(n) = frontier.pop() {
            for &m in &kept {
                if !seen.contains(&m) && cartan[n - 1][m - 1] != 0 {
                    seen.insert(m);
                    nodes.push(m);
                    frontier.push(m);
                }
            }
        }
        nodes.sort_unstable();
        comps.push(classify_component(&cartan, &nodes)?);
    }
    comps.sort_by_key(|c| c.orig_nodes.iter().min().copied());
    Ok(comps)
}

fn classify_component(cartan: &[Vec<i64>], nodes: &[usize]) -> Result<Component> {
    let n = nodes.len();
    let sub: Vec<Vec<i64>> = nodes
        .iter()
        .map(|&a| nodes.iter().map(|&b| cartan[a - 1][b - 1]).collect())
        .collect();
    let candidates: Vec<LieType> = [Family::A, Family::C, Family::B, Family::D, Family::E, Family::F, Family::G]
        .into_iter()
        .filter_map(|f| LieType::new(f, n).ok())
        .filter(|t| !(t.family == Family::D && t.rank == 3))
        .collect();
    for cand in candidates {
        let cm = cand.cartan_matrix();
        if let Some(sigma) = match_perm(&sub, &cm) {
            let mut orig_nodes = vec![0usize; n];
            for (pos, &c) in sigma.iter().enumerate() {
                orig_nodes[c] = nodes[pos];
            }
            return Ok(Component {
                lie_type: cand,
                orig_nodes,
            });
        }
    }
    Err(Error::InternalConsistency(format!(
        "subdiagram on nodes {nodes:?} matches no finite type"
    )))
}

/// Searches for a node bijection sigma with sub[a][b] = cand[sigma a][sigma b].
fn match_perm(sub: &[Vec<i64>], cand: &[Vec<i64>]) -> Option<Vec<usize>> {
    let n = sub.len();
    let mut sigma: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    fn go(
        pos: usize,
        n: usize,
        sub: &[Vec<i64>],
        cand: &[Vec<i64>],
        sigma: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == n {
            return true;
        }
        for c in 0..n {
            if used[c] {
                continue;
            }
            let ok = (0..pos).all(|prev| {
                let pc = sigma[prev].unwrap();
                sub[pos][prev] == cand[c][pc] && sub[prev][pos] == cand[pc][c]
            });
            if ok {
                sigma[pos] = Some(c);
                used[c] = true;
                if go(pos + 1, n, sub, cand, sigma, used) {
                    return true;
                }
                sigma[pos] = None;
                used[c] = false;
            }
        }
        false
    }
    if go(0, n, sub, cand, &mut sigma, &mut used) {
        Some(sigma.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

/// Root system of a component type (components of finite diagrams are again
/// finite diagrams, so this cannot fail for classified components).
pub fn component_root_system(c: &Component) -> Result<RootSystem> {
    build_root_system(c.lie_type)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn rs(f: Family, l: usize) -> RootSystem {
        build_root_system(LieType { family: f, rank: l }).unwrap()
    }

    fn par(rs: &RootSystem, nodes: &[usize]) -> Parabolic {
        Parabolic::new(nodes.to_vec(), rs.rank()).unwrap()
    }

    #[test]
    fn parabolic_validation() {
        assert!(Parabolic::new(vec![], 4).is_err());
        assert!(Parabolic::new(vec![5], 4).is_err());
        assert!(Parabolic::new(vec![0], 4).is_err());
        let p = Parabolic::new(vec![3, 1, 3], 4).unwrap();
        assert_eq!(p.crossed, vec![1, 3]);
        assert_eq!(p.to_string(), "P{1,3}");
        assert_eq!(par(&rs(Family::A, 4), &[2]).to_string(), "P2");
    }

    #[test]
    fn e8_p8_contact_grading() {
        let e8 = rs(Family::E, 8);
        let g = grading_data(&e8, &par(&e8, &[8])).unwrap();
        assert_eq!(g.depth, 2);
        assert_eq!(g.dim_g_minus, 57);
        assert_eq!(g.dim_by_level[&-2], 1);
        assert_eq!(g.dim_by_level[&-1], 56);
        assert_eq!(g.dim_g0, 134);
        assert_eq!(g.dim_g0_ss, 133);
    }

    #[test]
    fn g2_p1_grading_depth_three() {
        let g2 = rs(Family::G, 2);
        let g = grading_data(&g2, &par(&g2, &[1])).unwrap();
        assert_eq!(g.depth, 3);
        assert_eq!(g.dim_by_level[&-1], 2);
        assert_eq!(g.dim_by_level[&-2], 1);
        assert_eq!(g.dim_by_level[&-3], 2);
        assert_eq!(g.dim_g0, 4);
        assert_eq!(g.dim_g0_ss, 3);
    }

    #[test]
    fn c6_contact_like_grading() {
        let c6 = rs(Family::C, 6);
        let g = grading_data(&c6, &par(&c6, &[1, 2, 5])).unwrap();
        assert_eq!(g.dim_g_minus, 32);
    }

    #[test]
    fn b_series_two_crossings_flag_dimension() {
        for l in 3..=8 {
            let b = rs(Family::B, l);
            let g = grading_data(&b, &par(&b, &[1, 2])).unwrap();
            assert_eq!(g.dim_g_minus, 4 * l - 4);
            assert_eq!(g.depth, 3);
        }
    }

    #[test]
    fn component_classification_basics() {
        let t = LieType { family: Family::B, rank: 3 };
        let comps =
            components_after_deletion(t, &[2].into_iter().collect()).unwrap();
        assert_eq!(comps.len(), 2);
        for c in &comps {
            assert_eq!(c.lie_type, LieType { family: Family::A, rank: 1 });
        }

        let f4 = LieType { family: Family::F, rank: 4 };
        let c = components_after_deletion(f4, &[4].into_iter().collect()).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].lie_type, LieType { family: Family::B, rank: 3 });
        assert_eq!(c[0].orig_nodes, vec![1, 2, 3]);

        let c = components_after_deletion(f4, &[1].into_iter().collect()).unwrap();
        assert_eq!(c[0].lie_type, LieType { family: Family::C, rank: 3 });
        assert_eq!(c[0].orig_nodes, vec![4, 3, 2]);
    }

    #[test]
    fn component_classification_branched() {
        let e8 = LieType { family: Family::E, rank: 8 };
        let c = components_after_deletion(e8, &[8].into_iter().collect()).unwrap();
        assert_eq!(c[0].lie_type, LieType { family: Family::E, rank: 7 });
        assert_eq!(c[0].orig_nodes, vec![1, 2, 3, 4, 5, 6, 7]);

        let d5 = LieType { family: Family::D, rank: 5 };
        let c = components_after_deletion(d5, &[2].into_iter().collect()).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].lie_type, LieType { family: Family::A, rank: 1 });
        assert_eq!(c[1].lie_type, LieType { family: Family::A, rank: 3 });
        // the chain 3 < {4,5} relabels with the branch node in the middle
        assert_eq!(c[1].orig_nodes, vec![4, 3, 5]);
    }

    #[test]
    fn three_node_chain_prefers_type_a() {
        let d4 = LieType { family: Family::D, rank: 4 };
        let c = components_after_deletion(d4, &[1].into_iter().collect()).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].lie_type, LieType { family: Family::A, rank: 3 });
        assert_eq!(c[0].orig_nodes, vec![3, 2, 4]);
    }

    #[test]
    fn double_bond_pair_prefers_type_c() {
        let b4 = LieType { family: Family::B, rank: 4 };
        let c = components_after_deletion(b4, &[1, 2].into_iter().collect()).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].lie_type, LieType { family: Family::C, rank: 2 });
        // node 4 is short, so it sits at the short canonical node 1
        assert_eq!(c[0].orig_nodes, vec![4, 3]);
    }
}
