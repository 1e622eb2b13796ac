//! Explicit two-cochains on the negative nilradical with values in the full
//! algebra, plus the annihilator and prolongation computations that replay
//! the combinatorial recipes on concrete representation vectors.

use std::collections::{BTreeMap, BTreeSet};

use crate::chevalley::constants::{GVec, SVec, StructureConstants};
use crate::error::{Error, Result};
use crate::kostant::CohomologyModule;
use crate::linalg::{nullspace, q, Q};
use crate::parabolic::{grading_level, Parabolic};
use num::Zero;

/// Alternating 2-cochain on the negative part.  A key `(i, j)` with `i < j`
/// names the functional dual to the pair `(e_{-γ_i}, e_{-γ_j})` of negative
/// root vectors (canonical positive-root indices); the value is the image in
/// the full algebra.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Cochain2 {
    pub entries: BTreeMap<(usize, usize), GVec>,
}

impl Cochain2 {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Cochain2 {
        if c.is_zero() {
            return Cochain2::default();
        }
        Cochain2 {
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (*k, v.iter().map(|x| x * c).collect()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Cochain2) -> Cochain2 {
        let mut out = self.entries.clone();
        for (k, v) in &other.entries {
            match out.get_mut(k) {
                Some(cur) => {
                    for (a, b) in cur.iter_mut().zip(v) {
                        *a += b;
                    }
                    if cur.iter().all(Q::is_zero) {
                        out.remove(k);
                    }
                }
                None => {
                    out.insert(*k, v.clone());
                }
            }
        }
        Cochain2 { entries: out }
    }

    fn add_term(&mut self, a: usize, b: usize, scale: &Q, vec: &GVec) {
        if a == b || scale.is_zero() {
            return;
        }
        let (key, sgn) = if a < b { ((a, b), 1) } else { ((b, a), -1) };
        let entry = self
            .entries
            .entry(key)
            .or_insert_with(|| vec![Q::zero(); vec.len()]);
        for (cur, v) in entry.iter_mut().zip(vec) {
            *cur += v * scale * q(sgn);
        }
        if entry.iter().all(Q::is_zero) {
            self.entries.remove(&key);
        }
    }

    /// Value on the ordered pair of negative root vectors with positive
    /// indices `a`, `b`.
    pub fn eval(&self, a: usize, b: usize, dim: usize) -> GVec {
        if a == b {
            return vec![Q::zero(); dim];
        }
        let (key, sgn) = if a < b { ((a, b), 1) } else { ((b, a), -1) };
        match self.entries.get(&key) {
            Some(v) => v.iter().map(|x| x * q(sgn)).collect(),
            None => vec![Q::zero(); dim],
        }
    }
}

/// Natural action of `x` (an element of the grading-zero part, given
/// sparsely) on a cochain: `(x·φ)(u,v) = [x,φ(u,v)] - φ([x,u],v) - φ(u,[x,v])`.
pub fn act_g0(sc: &StructureConstants, p: &Parabolic, x: &SVec, phi: &Cochain2) -> Cochain2 {
    let l = sc.rank();
    let np = sc.n_pos();
    let mut out = Cochain2::default();
    for (b, coeff) in x {
        if *b < l {
            // Cartan component: diagonal with eigenvalue <γ₁+γ₂, α_i^∨> on a
            // key pair, plus the bracket on the value.
            let i = *b;
            for ((k1, k2), val) in &phi.entries {
                let mut scal = 0i64;
                for kk in [*k1, *k2] {
                    for (jj, &m) in sc.rs.positive_roots[kk].0.iter().enumerate() {
                        scal += m * sc.rs.cartan[jj][i];
                    }
                }
                let mut term = vec![Q::zero(); sc.dim];
                for (j, v) in val.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    for (idx, c) in sc.bracket_basis(i, j) {
                        term[idx] += v * q(c);
                    }
                    term[j] += v * q(scal);
                }
                out.add_term(*k1, *k2, coeff, &term);
            }
        } else {
            let s = b - l;
            let eta = if s < np {
                sc.rs.positive_roots[s].0.clone()
            } else {
                sc.rs.positive_roots[s - np].negated().0
            };
            debug_assert_eq!(grading_level(p, &eta), 0);
            for ((k1, k2), val) in &phi.entries {
                // Value part: [e_η, val] at the same key.
                let mut term = vec![Q::zero(); sc.dim];
                for (j, v) in val.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    for (idx, c) in sc.bracket_basis(*b, j) {
                        term[idx] += v * q(c);
                    }
                }
                out.add_term(*k1, *k2, coeff, &term);
                // Slot parts: spread the key by η.
                for slot in [*k1, *k2] {
                    let shifted: Vec<i64> = sc.rs.positive_roots[slot]
                        .0
                        .iter()
                        .zip(&eta)
                        .map(|(m, e)| m + e)
                        .collect();
                    if let Some(kp) = sc.rs.pos_index(&shifted) {
                        // [e_η, e_{-γ_{kp}}] = c' e_{-γ_slot}
                        let cprime = sc.n_signed(s, np + kp);
                        debug_assert_ne!(cprime, 0);
                        let scaled: GVec = val.iter().map(|v| v * q(-cprime) * coeff).collect();
                        if slot == *k1 {
                            out.add_term(kp, *k2, &q(1), &scaled);
                        } else {
                            out.add_term(*k1, kp, &q(-1), &scaled);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Build the lowest weight vector of a cohomology module as a concrete
/// cochain and check its weight against the module data.
pub fn realize_phi0(
    sc: &StructureConstants,
    p: &Parabolic,
    m: &CohomologyModule,
) -> Result<Cochain2> {
    let i1 = sc
        .rs
        .pos_index(&m.wedge[0].0)
        .ok_or_else(|| Error::InternalConsistency("wedge root missing".into()))?;
    let i2 = sc
        .rs
        .pos_index(&m.wedge[1].0)
        .ok_or_else(|| Error::InternalConsistency("wedge root missing".into()))?;
    let g_idx = sc.basis_of_root(&m.g_part).ok_or_else(|| {
        Error::InternalConsistency("coefficient part of lowest weight vector not a root".into())
    })?;
    let mut val = vec![Q::zero(); sc.dim];
    val[g_idx] = q(1);
    let mut phi = Cochain2::default();
    phi.add_term(i1, i2, &q(1), &val);

    for i in 1..=sc.rank() {
        let acted = act_g0(sc, p, &vec![(i - 1, q(1))], &phi);
        let expect = phi.scale(&q(m.mu.0[i - 1]));
        if acted != expect {
            return Err(Error::InternalConsistency(format!(
                "lowest weight vector for {} has wrong weight at node {i}",
                m.element
            )));
        }
    }
    Ok(phi)
}

fn g0_basis(sc: &StructureConstants, p: &Parabolic) -> Vec<SVec> {
    let l = sc.rank();
    let np = sc.n_pos();
    let mut basis: Vec<SVec> = (0..l).map(|i| vec![(i, q(1))]).collect();
    for s in 0..np {
        if grading_level(p, &sc.rs.positive_roots[s].0) == 0 {
            basis.push(vec![(l + s, q(1))]);
            basis.push(vec![(l + np + s, q(1))]);
        }
    }
    basis
}

fn flatten(
    images: &[Cochain2],
    dim: usize,
) -> (Vec<(usize, usize)>, Vec<Vec<Q>>) {
    let keys: BTreeSet<(usize, usize)> = images
        .iter()
        .flat_map(|c| c.entries.keys().copied())
        .collect();
    let keys: Vec<(usize, usize)> = keys.into_iter().collect();
    let cols: Vec<Vec<Q>> = images
        .iter()
        .map(|c| {
            let mut col = Vec::with_capacity(keys.len() * dim);
            for k in &keys {
                match c.entries.get(k) {
                    Some(v) => col.extend(v.iter().cloned()),
                    None => col.extend(std::iter::repeat(Q::zero()).take(dim)),
                }
            }
            col
        })
        .collect();
    (keys, cols)
}

/// Annihilator of `phi` inside the grading-zero subalgebra: basis vectors in
/// full coordinates together with its dimension.
pub fn annihilator(
    sc: &StructureConstants,
    p: &Parabolic,
    phi: &Cochain2,
) -> Result<(Vec<GVec>, usize)> {
    if phi.is_zero() {
        return Err(Error::ZeroCurvature);
    }
    let basis = g0_basis(sc, p);
    let images: Vec<Cochain2> = basis.iter().map(|x| act_g0(sc, p, x, phi)).collect();
    let (_, cols) = flatten(&images, sc.dim);
    let rows = cols.first().map_or(0, Vec::len);
    let mut mat = vec![vec![Q::zero(); basis.len()]; rows];
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            mat[i][j] = v.clone();
        }
    }
    let null = nullspace(mat, basis.len());
    let out: Vec<GVec> = null
        .iter()
        .map(|combo| {
            let mut v = vec![Q::zero(); sc.dim];
            for (x, c) in basis.iter().zip(combo) {
                for (idx, xc) in x {
                    v[*idx] += xc * c;
                }
            }
            v
        })
        .collect();
    let d = out.len();
    Ok((out, d))
}

/// Successive prolongations of `a0` against the degree minus-one part:
/// `a_k = { X in g_k : [X, g_{-1}] ⊆ a_{k-1} }`, stopping at the first zero
/// level or the grading depth.  Returns per-level bases.
pub fn prolongation_dims(
    sc: &StructureConstants,
    p: &Parabolic,
    a0: &[GVec],
) -> Result<Vec<Vec<GVec>>> {
    let l = sc.rank();
    let np = sc.n_pos();
    let depth = (0..np)
        .map(|s| grading_level(p, &sc.rs.positive_roots[s].0))
        .max()
        .unwrap_or(0);
    let gm1: Vec<usize> = (0..np)
        .filter(|&s| grading_level(p, &sc.rs.positive_roots[s].0) == 1)
        .map(|s| l + np + s)
        .collect();

    let mut levels: Vec<Vec<GVec>> = Vec::new();
    let mut prev: Vec<GVec> = a0.to_vec();
    for k in 1..=depth {
        let mut span = crate::linalg::Span::new();
        for v in &prev {
            span.insert(v);
        }
        let unknowns: Vec<usize> = (0..np)
            .filter(|&s| grading_level(p, &sc.rs.positive_roots[s].0) == k)
            .map(|s| l + s)
            .collect();
        if unknowns.is_empty() {
            break;
        }
        let mut mat: Vec<Vec<Q>> = Vec::new();
        let mut residuals: Vec<Vec<GVec>> = Vec::with_capacity(unknowns.len());
        for &u in &unknowns {
            let mut per_f = Vec::with_capacity(gm1.len());
            for &f in &gm1 {
                let mut v = vec![Q::zero(); sc.dim];
                for (idx, c) in sc.bracket_basis(u, f) {
                    v[idx] += q(c);
                }
                per_f.push(span.reduce(&v));
            }
            residuals.push(per_f);
        }
        let rows = gm1.len() * sc.dim;
        mat.resize(rows, vec![Q::zero(); unknowns.len()]);
        for (j, per_f) in residuals.iter().enumerate() {
            for (fi, res) in per_f.iter().enumerate() {
                for (ci, v) in res.iter().enumerate() {
                    mat[fi * sc.dim + ci][j] = v.clone();
                }
            }
        }
        let null = nullspace(mat, unknowns.len());
        if null.is_empty() {
            break;
        }
        let basis: Vec<GVec> = null
            .iter()
            .map(|combo| {
                let mut v = vec![Q::zero(); sc.dim];
                for (&u, c) in unknowns.iter().zip(combo) {
                    v[u] += c;
                }
                v
            })
            .collect();
        prev = basis.clone();
        levels.push(basis);
    }
    Ok(levels)
}

/// Dimension summary of the symmetry computation on a concrete cochain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleDims {
    pub dim_g_minus: usize,
    pub dim_a0: usize,
    pub plus: Vec<usize>,
}

impl OracleDims {
    pub fn total(&self) -> usize {
        self.dim_g_minus + self.dim_a0 + self.plus.iter().sum::<usize>()
    }
}

/// Full annihilator-plus-prolongation dimensions for a cochain.
pub fn oracle_dims(sc: &StructureConstants, p: &Parabolic, phi: &Cochain2) -> Result<OracleDims> {
    let np = sc.n_pos();
    let dim_g_minus = (0..np)
        .filter(|&s| grading_level(p, &sc.rs.positive_roots[s].0) > 0)
        .count();
    let (a0, dim_a0) = annihilator(sc, p, phi)?;
    let plus = prolongation_dims(sc, p, &a0)?
        .iter()
        .map(Vec::len)
        .collect();
    Ok(OracleDims {
        dim_g_minus,
        dim_a0,
        plus,
    })
}

/// Basis of the module generated from the lowest weight vector by the
/// raising operators of the grading-zero subalgebra.
pub fn module_basis(
    sc: &StructureConstants,
    p: &Parabolic,
    phi0: &Cochain2,
) -> Result<Vec<Cochain2>> {
    let l = sc.rank();
    let np = sc.n_pos();
    let raising: Vec<SVec> = (0..np)
        .filter(|&s| grading_level(p, &sc.rs.positive_roots[s].0) == 0)
        .map(|s| vec![(l + s, q(1))])
        .collect();
    // Fixed flattening over every admissible key.
    let keyspace: Vec<(usize, usize)> = {
        let neg: Vec<usize> = (0..np)
            .filter(|&s| grading_level(p, &sc.rs.positive_roots[s].0) > 0)
            .collect();
        let mut ks = Vec::new();
        for (ai, &a) in neg.iter().enumerate() {
            for &b in &neg[ai + 1..] {
                ks.push((a.min(b), a.max(b)));
            }
        }
        ks.sort();
        ks
    };
    let offset: BTreeMap<(usize, usize), usize> = keyspace
        .iter()
        .enumerate()
        .map(|(i, k)| (*k, i))
        .collect();
    let flat = |c: &Cochain2| -> Vec<Q> {
        let mut v = vec![Q::zero(); keyspace.len() * sc.dim];
        for (k, val) in &c.entries {
            let off = offset[k] * sc.dim;
            for (i, x) in val.iter().enumerate() {
                v[off + i] = x.clone();
            }
        }
        v
    };

    let mut span = crate::linalg::Span::new();
    let mut basis = vec![phi0.clone()];
    span.insert(&flat(phi0));
    let mut queue = vec![phi0.clone()];
    while let Some(cur) = queue.pop() {
        for x in &raising {
            let nxt = act_g0(sc, p, x, &cur);
            if nxt.is_zero() {
                continue;
            }
            if span.insert(&flat(&nxt)) {
                basis.push(nxt.clone());
                queue.push(nxt);
            }
        }
    }
    Ok(basis)
}

/// Linear combination of module basis cochains with integer coefficients.
pub fn combine_cochains(basis: &[Cochain2], coeffs: &[i64]) -> Cochain2 {
    let mut out = Cochain2::default();
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            out = out.add(&b.scale(&q(c)));
        }
    }
    out
}

/// Symmetry dimensions of representative curvature vectors for the
/// five-dimensional irreducible branch on the split exceptional contact
/// geometry of type G2 with the first node crossed: one representative per
/// partition shape of the quartic.
pub fn g2_quartic_table(sc: &StructureConstants) -> Result<Vec<(&'static str, usize)>> {
    use crate::kostant::h2_modules;
    assert_eq!(sc.lie_type.to_string(), "G2");
    let p = Parabolic::new(vec![1], 2)?;
    let rs2 = &sc.rs;
    let modules = h2_modules(rs2, &p)?;
    assert_eq!(modules.len(), 1);
    let phi0 = realize_phi0(sc, &p, &modules[0])?;

    let l = sc.rank();
    let np = sc.n_pos();
    let i01 = sc.rs.pos_index(&[0, 1]).unwrap();
    let i11 = sc.rs.pos_index(&[1, 1]).unwrap();
    let raise: SVec = vec![(l + i01, q(1))];

    let mut v = vec![phi0.clone()];
    for _ in 0..5 {
        let nxt = act_g0(sc, &p, &raise, v.last().unwrap());
        v.push(nxt);
    }
    if !v[5].is_zero() || v[4].is_zero() {
        return Err(Error::InternalConsistency(
            "raising chain on the quartic module has wrong length".into(),
        ));
    }

    // [e_{α₂}, e_{-(α₁+α₂)}] = n e_{-α₁}
    let nconst = sc.n_signed(i01, np + i11);
    let n = q(nconst);

    let reps: Vec<(&'static str, Cochain2)> = vec![
        ("(4)", v[0].clone()),
        ("(3,1)", v[1].clone()),
        ("(2,2)", v[2].clone()),
        (
            "(2,1,1)",
            v[1].scale(&(q(-3) * n.clone())).add(&v[2].scale(&q(-1))),
        ),
        (
            "(1,1,1,1)",
            v[1].scale(&(q(3) * n.clone() * n.clone()))
                .add(&v[2].scale(&(q(3) * n.clone())))
                .add(&v[3].scale(&q(1))),
        ),
    ];

    let mut out = Vec::new();
    for (label, phi) in reps {
        let dims = oracle_dims(sc, &p, &phi)?;
        out.push((label, dims.total()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::constants::build_structure_constants;
    use crate::kostant::h2_modules;
    use crate::prolong::branch_report;
    use crate::parabolic::grading_data;
    use crate::rootsys::{build_root_system, LieType};

    fn setup(name: &str, crossed: Vec<usize>) -> (StructureConstants, Parabolic) {
        let t = LieType::parse(name).unwrap();
        let sc = build_structure_constants(t).unwrap();
        let p = Parabolic::new(crossed, t.rank).unwrap();
        (sc, p)
    }

    #[test]
    fn g2_first_node_oracle() {
        let (sc, p) = setup("G2", vec![1]);
        let modules = h2_modules(&sc.rs, &p).unwrap();
        assert_eq!(modules.len(), 1);
        let phi0 = realize_phi0(&sc, &p, &modules[0]).unwrap();
        let dims = oracle_dims(&sc, &p, &phi0).unwrap();
        assert_eq!(dims.dim_g_minus, 5);
        assert_eq!(dims.dim_a0, 2);
        assert!(dims.plus.is_empty());
        assert_eq!(dims.total(), 7);
    }

    #[test]
    fn g2_first_node_matches_recipe() {
        let (sc, p) = setup("G2", vec![1]);
        let rs = build_root_system(sc.lie_type).unwrap();
        let gr = grading_data(&rs, &p).unwrap();
        let modules = h2_modules(&rs, &p).unwrap();
        let b = branch_report(&rs, &p, &gr, &modules[0]).unwrap();
        let phi0 = realize_phi0(&sc, &p, &modules[0]).unwrap();
        let dims = oracle_dims(&sc, &p, &phi0).unwrap();
        assert_eq!(dims.dim_a0, b.dim_a0);
        let recipe_plus: Vec<usize> = b.a_plus.iter().map(Vec::len).collect();
        assert_eq!(dims.plus, recipe_plus);
        assert_eq!(dims.total(), b.dim_a_total);
    }

    #[test]
    fn b3_last_node_matches_recipe() {
        let (sc, p) = setup("B3", vec![3]);
        let gr = grading_data(&sc.rs, &p).unwrap();
        let modules = h2_modules(&sc.rs, &p).unwrap();
        for m in &modules {
            let b = branch_report(&sc.rs, &p, &gr, m).unwrap();
            let phi0 = realize_phi0(&sc, &p, m).unwrap();
            let dims = oracle_dims(&sc, &p, &phi0).unwrap();
            assert_eq!(dims.dim_a0, b.dim_a0, "module {}", m.element);
            let recipe_plus: Vec<usize> = b.a_plus.iter().map(Vec::len).collect();
            assert_eq!(dims.plus, recipe_plus, "module {}", m.element);
        }
    }

    #[test]
    fn zero_cochain_rejected() {
        let (sc, p) = setup("G2", vec![1]);
        let err = annihilator(&sc, &p, &Cochain2::default()).unwrap_err();
        assert!(matches!(err, Error::ZeroCurvature));
    }

    #[test]
    fn quartic_representative_dimensions() {
        let sc = build_structure_constants(LieType::parse("G2").unwrap()).unwrap();
        let table = g2_quartic_table(&sc).unwrap();
        let expect = vec![
            ("(4)", 7),
            ("(3,1)", 6),
            ("(2,2)", 6),
            ("(2,1,1)", 5),
            ("(1,1,1,1)", 5),
        ];
        assert_eq!(table, expect);
    }

    #[test]
    fn quartic_module_dimension_and_maximality() {
        let (sc, p) = setup("G2", vec![1]);
        let modules = h2_modules(&sc.rs, &p).unwrap();
        let phi0 = realize_phi0(&sc, &p, &modules[0]).unwrap();
        let basis = module_basis(&sc, &p, &phi0).unwrap();
        assert_eq!(basis.len(), 5);
        let top = oracle_dims(&sc, &p, &phi0).unwrap();
        // Deterministic sweep of small combinations: none exceeds the
        // lowest weight vector's symmetry dimension.
        for c0 in -2i64..=2 {
            for c1 in -2i64..=2 {
                for c4 in -2i64..=2 {
                    let phi = combine_cochains(&basis, &[c0, c1, 0, 0, c4]);
                    if phi.is_zero() {
                        continue;
                    }
                    let dims = oracle_dims(&sc, &p, &phi).unwrap();
                    assert!(dims.total() <= top.total());
                }
            }
        }
    }
}
