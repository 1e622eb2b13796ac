//! Closed-form recipes for the Tanaka prolongation of the symbol algebra
//! together with the annihilator of a lowest weight curvature vector, and the
//! submaximal symmetry dimension assembled from them.
//!
//! Everything here is root combinatorics in the original root system; the
//! structure-constant oracle in `chevalley` recomputes the same dimensions
//! from actual brackets, and the two must agree.

use crate::error::{Error, Result};
use crate::kostant::{regular_modules, CohomologyModule};
use crate::parabolic::{
    components_after_deletion, grading_data, grading_level, GradingData, Parabolic,
};
use crate::rootsys::{build_root_system, Family, LieType, Root, RootSystem};
use crate::weyl::HasseElement;
use std::collections::{BTreeMap, BTreeSet};

/// dim a0 for the module mu: the mu-trace-free part of the Cartan subalgebra
/// plus every g0 root space on which the J_mu grading is non-positive.
///
/// Computed two ways: through the deleted-node diagram (opposite parabolic of
/// the semisimple part of g0 crossed at J_mu) and by counting g0 roots
/// directly; a disagreement is a hard error.
pub fn annihilator_dim(rs: &RootSystem, p: &Parabolic, m: &CohomologyModule) -> Result<usize> {
    let l = rs.rank();
    // direct count
    let mut direct = l - 1;
    for root in &rs.positive_roots {
        if grading_level(p, &root.0) != 0 {
            continue;
        }
        let zj: i64 = m.j_mu.iter().map(|&j| root.0[j - 1]).sum();
        if zj <= 0 {
            direct += 1;
        }
        if zj >= 0 {
            direct += 1;
        }
    }
    // deleted-node route
    let removed: BTreeSet<usize> = p.crossed.iter().copied().collect();
    let comps = components_after_deletion(rs.lie_type, &removed)?;
    let mut dim_p_op = 0usize;
    for c in &comps {
        let crossed: Vec<usize> = m
            .j_mu
            .iter()
            .filter_map(|&j| c.to_canonical(j))
            .collect();
        if crossed.is_empty() {
            dim_p_op += c.lie_type.dim();
            continue;
        }
        let crs = build_root_system(c.lie_type)?;
        let cp = Parabolic::new(crossed, c.lie_type.rank)?;
        let positive_levels = crs
            .positive_roots
            .iter()
            .filter(|r| grading_level(&cp, &r.0) > 0)
            .count();
        dim_p_op += c.lie_type.dim() - positive_levels;
    }
    let via_diagram = dim_p_op + p.crossed.len() - 1;
    if via_diagram != direct {
        return Err(Error::InternalConsistency(format!(
            "{}/{p}: annihilator dimension {via_diagram} via diagram vs {direct} direct",
            rs.lie_type
        )));
    }
    Ok(direct)
}

/// The reduced geometry carrying the positive prolongation levels: delete
/// (I_p minus I_mu) and J_mu from the diagram, keep the components that still
/// contain a square node, crossed at those squares (component labels).
pub fn reduced_geometry(
    rs: &RootSystem,
    p: &Parabolic,
    m: &CohomologyModule,
) -> Result<Vec<(LieType, Vec<usize>)>> {
    let mut removed: BTreeSet<usize> = p
        .crossed
        .iter()
        .copied()
        .filter(|i| !m.i_mu.contains(i))
        .collect();
    removed.extend(m.j_mu.iter().copied());
    let comps = components_after_deletion(rs.lie_type, &removed)?;
    let mut out = Vec::new();
    for c in comps {
        let crossed: Vec<usize> = m
            .i_mu
            .iter()
            .filter_map(|&i| c.to_canonical(i))
            .collect();
        if !crossed.is_empty() {
            let mut crossed = crossed;
            crossed.sort_unstable();
            out.push((c.lie_type, crossed));
        }
    }
    Ok(out)
}

/// Positive prolongation levels a_j, j >= 1, as root lists in the original
/// system: level-j roots whose I_mu-level is also j and whose J_mu-level
/// vanishes.
///
/// For regular modules the filter must die by level two, and a nonzero level
/// two must be one of the two known non-prolongation-rigid families, with
/// dimensions matching their closed forms.
pub fn a_plus_dims(
    rs: &RootSystem,
    p: &Parabolic,
    m: &CohomologyModule,
) -> Result<Vec<Vec<Root>>> {
    if m.i_mu.is_empty() {
        return Ok(Vec::new());
    }
    let gr = grading_data(rs, p)?;
    let mut levels: Vec<Vec<Root>> = Vec::new();
    for j in 1..=gr.depth {
        let mut lev = Vec::new();
        for root in &rs.positive_roots {
            let zi = grading_level(p, &root.0);
            if zi != j {
                continue;
            }
            let zim: i64 = m.i_mu.iter().map(|&i| root.0[i - 1]).sum();
            let zjm: i64 = m.j_mu.iter().map(|&jj| root.0[jj - 1]).sum();
            if zim == j && zjm == 0 {
                lev.push(root.clone());
            }
        }
        levels.push(lev);
    }
    while levels.last().is_some_and(Vec::is_empty) {
        levels.pop();
    }

    // per-level totals must match the gradings of the reduced geometry
    let reduced = reduced_geometry(rs, p, m)?;
    let mut reduced_levels: BTreeMap<i64, usize> = BTreeMap::new();
    for (t, crossed) in &reduced {
        let crs = build_root_system(*t)?;
        let cp = Parabolic::new(crossed.clone(), t.rank)?;
        for root in &crs.positive_roots {
            let z = grading_level(&cp, &root.0);
            if z > 0 {
                *reduced_levels.entry(z).or_insert(0) += 1;
            }
        }
    }
    let max_level = reduced_levels.keys().max().copied().unwrap_or(0);
    if levels.len() as i64 != max_level {
        return Err(Error::InternalConsistency(format!(
            "{}/{} ({},{}): prolongation depth {} vs reduced geometry depth {max_level}",
            rs.lie_type,
            p,
            m.element.j,
            m.element.k,
            levels.len()
        )));
    }
    for (j, lev) in levels.iter().enumerate() {
        let want = reduced_levels.get(&(j as i64 + 1)).copied().unwrap_or(0);
        if lev.len() != want {
            return Err(Error::InternalConsistency(format!(
                "{}/{}: level {} filter has {} roots, reduced geometry has {want}",
                rs.lie_type,
                p,
                j + 1,
                lev.len()
            )));
        }
    }

    if m.regular {
        if levels.len() > 2 {
            return Err(Error::InternalConsistency(format!(
                "{}/{} ({},{}): regular module with prolongation past level two",
                rs.lie_type, p, m.element.j, m.element.k
            )));
        }
        let a2 = levels.get(1).map_or(0, Vec::len);
        match npr_height_pattern(rs.lie_type, &p.crossed, &m.element) {
            Some((want_a1, want_a2)) => {
                let a1 = levels.first().map_or(0, Vec::len);
                if a1 != want_a1 || a2 != want_a2 {
                    return Err(Error::InternalConsistency(format!(
                        "{}/{p}: levels ({a1},{a2}) vs closed forms ({want_a1},{want_a2})",
                        rs.lie_type
                    )));
                }
            }
            None => {
                if a2 != 0 {
                    return Err(Error::InternalConsistency(format!(
                        "{}/{} ({},{}): unexpected nonzero second prolongation level",
                        rs.lie_type, p, m.element.j, m.element.k
                    )));
                }
            }
        }
    }
    Ok(levels)
}

/// The two regular families with a nonzero second prolongation level, with
/// their level dimensions.
fn npr_height_pattern(
    t: LieType,
    crossed: &[usize],
    h: &HasseElement,
) -> Option<(usize, usize)> {
    for perm in t.diagram_automorphisms() {
        if (perm[h.j - 1], perm[h.k - 1]) != (2, 1) {
            continue;
        }
        let mut img: Vec<usize> = crossed.iter().map(|&i| perm[i - 1]).collect();
        img.sort_unstable();
        let l = t.rank;
        let hit = match t.family {
            Family::A => match img.as_slice() {
                [1, 2, s, tt] if *s >= 4 && s < tt && *tt < l => Some((
                    1 + (tt - s) * (l + s - 3 - tt),
                    (s - 3) * (l - tt),
                )),
                _ => None,
            },
            Family::C => match img.as_slice() {
                [1, 2, s] if *s >= 4 && *s < l => {
                    Some((1 + 2 * (s - 3) * (l - s), (s - 2) * (s - 3) / 2))
                }
                _ => None,
            },
            _ => None,
        };
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Prolongation-rigidity of the module: no crossed node is a square.
pub fn is_pr(m: &CohomologyModule) -> bool {
    m.i_mu.is_empty()
}

/// The twistor base for branch w = s_j s_k: cross j alone when alpha_j and
/// alpha_k are adjacent, else cross both.
pub fn twistor_type(rs: &RootSystem, m: &CohomologyModule) -> Parabolic {
    let (j, k) = (m.element.j, m.element.k);
    let mut crossed = if rs.cartan[k - 1][j - 1] < 0 {
        vec![j]
    } else {
        vec![j, k]
    };
    crossed.sort_unstable();
    Parabolic { crossed }
}

/// The proven list of exceptional branches: the deformed symbol stays a Lie
/// algebra exactly when w(-lambda_g) is a positive root, which happens only
/// for these rank-two cases (engine labels, B2 spelled as C2).
const EXCEPTIONAL_BRANCHES: &[(Family, &[usize], (usize, usize))] = &[
    (Family::A, &[1], (1, 2)),
    (Family::A, &[2], (2, 1)),
    (Family::A, &[1, 2], (1, 2)),
    (Family::A, &[1, 2], (2, 1)),
    (Family::C, &[2], (2, 1)),
    (Family::C, &[1, 2], (2, 1)),
];

/// True iff the branch is exceptional (w(-lambda_g) positive). Firing outside
/// the proven rank-two list is a hard internal error, not a result.
pub fn detect_exception(
    rs: &RootSystem,
    p: &Parabolic,
    m: &CohomologyModule,
) -> Result<bool> {
    let positive = m.g_part.iter().all(|&c| c >= 0);
    if !positive {
        return Ok(false);
    }
    let listed = EXCEPTIONAL_BRANCHES.iter().any(|(f, crossed, word)| {
        rs.lie_type.family == *f
            && rs.lie_type.rank == 2
            && p.crossed == *crossed
            && (m.element.j, m.element.k) == *word
    });
    if !listed {
        return Err(Error::InternalConsistency(format!(
            "{}/{} ({},{}): w(-lambda_g) positive outside the proven exceptional list",
            rs.lie_type, p, m.element.j, m.element.k
        )));
    }
    Ok(true)
}

/// Everything the recipes say about one branch w.
#[derive(Clone, Debug)]
pub struct BranchData {
    pub module: CohomologyModule,
    pub dim_g_minus: usize,
    pub dim_a0: usize,
    pub a_plus: Vec<Vec<Root>>,
    pub dim_a_total: usize,
    pub pr: bool,
    pub reduced: Vec<(LieType, Vec<usize>)>,
    pub twistor: Parabolic,
    pub exceptional: bool,
    /// The symmetry bound along this branch: dim a(w), less one on the
    /// exceptional branches where the deformation stays flat.
    pub s_w: usize,
}

impl BranchData {
    pub fn dim_a1(&self) -> usize {
        self.a_plus.first().map_or(0, Vec::len)
    }

    pub fn dim_a2(&self) -> usize {
        self.a_plus.get(1).map_or(0, Vec::len)
    }
}

pub fn branch_report(
    rs: &RootSystem,
    p: &Parabolic,
    gr: &GradingData,
    m: &CohomologyModule,
) -> Result<BranchData> {
    let dim_a0 = annihilator_dim(rs, p, m)?;
    let a_plus = a_plus_dims(rs, p, m)?;
    let dim_a_plus: usize = a_plus.iter().map(Vec::len).sum();
    let dim_a_total = gr.dim_g_minus + dim_a0 + dim_a_plus;
    let exceptional = if m.regular {
        detect_exception(rs, p, m)?
    } else {
        false
    };
    Ok(BranchData {
        dim_g_minus: gr.dim_g_minus,
        dim_a0,
        pr: is_pr(m),
        reduced: reduced_geometry(rs, p, m)?,
        twistor: twistor_type(rs, m),
        exceptional,
        s_w: dim_a_total - usize::from(exceptional),
        a_plus,
        dim_a_total,
        module: m.clone(),
    })
}

#[derive(Clone, Debug)]
pub struct SubmaxResult {
    pub grading: GradingData,
    /// One entry per regular branch, in Hasse order.
    pub branches: Vec<BranchData>,
    pub rigid: bool,
    /// max_w S_w over regular branches; None when rigid.
    pub s: Option<usize>,
}

/// The submaximal symmetry dimension of (g, p): the maximum of the branch
/// bounds over all regular curvature modules.
pub fn submax_dimension(rs: &RootSystem, p: &Parabolic) -> Result<SubmaxResult> {
    let gr = grading_data(rs, p)?;
    let regular = regular_modules(rs, p)?;
    let mut branches = Vec::new();
    for m in &regular {
        let b = branch_report(rs, p, &gr, m)?;
        if b.s_w >= rs.dim {
            return Err(Error::InternalConsistency(format!(
                "{}/{p}: branch bound {} is not below dim g = {}",
                rs.lie_type, b.s_w, rs.dim
            )));
        }
        branches.push(b);
    }
    let s = branches.iter().map(|b| b.s_w).max();
    Ok(SubmaxResult {
        grading: gr,
        rigid: s.is_none(),
        s,
        branches,
    })
}

/// Canonical representative of a crossed set modulo diagram automorphisms:
/// the lexicographically smallest sorted image.
pub fn canonical_parabolic_class(t: LieType, crossed: &[usize]) -> Vec<usize> {
    t.diagram_automorphisms()
        .iter()
        .map(|perm| {
            let mut img: Vec<usize> = crossed.iter().map(|&i| perm[i - 1]).collect();
            img.sort_unstable();
            img
        })
        .min()
        .unwrap()
}

/// All canonical simple types of rank <= max_rank, coincidences (B2, D3)
/// represented once.
pub fn canonical_types(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for l in 1..=max_rank {
        out.push(LieType { family: Family::A, rank: l });
    }
    for l in 3..=max_rank {
        out.push(LieType { family: Family::B, rank: l });
    }
    for l in 2..=max_rank {
        out.push(LieType { family: Family::C, rank: l });
    }
    for l in 4..=max_rank {
        out.push(LieType { family: Family::D, rank: l });
    }
    for l in 6..=max_rank.min(8) {
        out.push(LieType { family: Family::E, rank: l });
    }
    if max_rank >= 4 {
        out.push(LieType { family: Family::F, rank: 4 });
    }
    if max_rank >= 2 {
        out.push(LieType { family: Family::G, rank: 2 });
    }
    out
}

/// Scans every (g, p) with rank g <= max_rank for regular modules that are
/// not prolongation-rigid; returns the classes up to diagram automorphism.
pub fn npr_scan(max_rank: usize) -> Result<Vec<(LieType, Vec<usize>)>> {
    let mut found: BTreeSet<(LieType, Vec<usize>)> = BTreeSet::new();
    for t in canonical_types(max_rank) {
        let rs = build_root_system(t)?;
        let l = t.rank;
        for mask in 1u32..(1 << l) {
            let crossed: Vec<usize> =
                (1..=l).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let p = Parabolic::new(crossed, l)?;
            let regular = regular_modules(&rs, &p)?;
            let mut has_npr = false;
            for m in regular.iter().filter(|m| !is_pr(m)) {
                // a module is provenly PR when only one node is crossed, or
                // when the crossed pair is exactly the commuting word
                let (j, k) = (m.element.j, m.element.k);
                let word_set = if j < k { vec![j, k] } else { vec![k, j] };
                let shortcut_pr = p.crossed.len() == 1
                    || (p.crossed == word_set && rs.cartan[j - 1][k - 1] == 0);
                if shortcut_pr {
                    return Err(Error::InternalConsistency(format!(
                        "{t}/{p} ({j},{k}): non-PR module on a provenly PR branch"
                    )));
                }
                has_npr = true;
            }
            if has_npr {
                found.insert((t, canonical_parabolic_class(t, &p.crossed)));
            }
        }
    }
    Ok(found.into_iter().collect())
}
