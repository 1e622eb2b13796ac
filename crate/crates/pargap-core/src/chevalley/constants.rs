//! Integral structure constants for the split semisimple Lie algebra.
//!
//! The basis is ordered `[h_1 .. h_l, e_{γ_1} .. e_{γ_N}, e_{-γ_1} .. e_{-γ_N}]`
//! with positive roots in canonical order.  Signs follow the extraspecial-pair
//! normalisation: for each non-simple positive root γ the pair (α,β) with
//! α + β = γ and α minimal in canonical order gets `N_{α,β} = p + 1`, where p
//! is the length of the descending α-string through β.  Every other constant
//! is forced from these by antisymmetry and the Jacobi identity, and the
//! construction checks the hallmark `|N_{α,β}| = p + 1` for every bracketing
//! pair before verifying the Jacobi identity on basis triples.

use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::rootsys::{build_root_system, LieType, RootSystem};
use num::{One, Zero};

/// Dense element of the Lie algebra in the fixed basis.
pub type GVec = Vec<Q>;

/// Sparse element: sorted, deduplicated `(basis index, coefficient)` pairs.
pub type SVec = Vec<(usize, Q)>;

/// Result of bracketing two basis elements: a short integer combination.
pub type BasisTerms = Vec<(usize, i64)>;

pub struct StructureConstants {
    pub lie_type: LieType,
    pub rs: RootSystem,
    /// Full basis dimension `l + 2N`.
    pub dim: usize,
    /// `n[s][t]` is `N_{r_s, r_t}` over signed root indices (s < N positive,
    /// s >= N negative); zero when `r_s + r_t` is not a root.
    n: Vec<Vec<i64>>,
    /// Coroot of each positive root as an integer vector over `h_1 .. h_l`.
    coroot: Vec<Vec<i64>>,
}

impl StructureConstants {
    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn n_pos(&self) -> usize {
        self.rs.n_pos()
    }

    /// Basis index of `h_i` (1-based node).
    pub fn idx_cartan(&self, i: usize) -> usize {
        i - 1
    }

    /// Basis index of `e_γ` for the positive root with canonical index `p`.
    pub fn idx_pos(&self, p: usize) -> usize {
        self.rank() + p
    }

    /// Basis index of `e_{-γ}` for the positive root with canonical index `p`.
    pub fn idx_neg(&self, p: usize) -> usize {
        self.rank() + self.n_pos() + p
    }

    /// Simple-root coefficients of the (signed) root attached to a basis
    /// index, or `None` for Cartan indices.
    pub fn root_of_basis(&self, b: usize) -> Option<Vec<i64>> {
        let l = self.rank();
        let np = self.n_pos();
        if b < l {
            None
        } else if b < l + np {
            Some(self.rs.positive_roots[b - l].0.clone())
        } else {
            Some(self.rs.positive_roots[b - l - np].negated().0)
        }
    }

    /// Basis index carrying the root with the given signed coefficients.
    pub fn basis_of_root(&self, coeffs: &[i64]) -> Option<usize> {
        let pos = coeffs.iter().all(|&c| c >= 0);
        let abs: Vec<i64> = if pos {
            coeffs.to_vec()
        } else {
            coeffs.iter().map(|&c| -c).collect()
        };
        let p = self.rs.pos_index(&abs)?;
        Some(if pos { self.idx_pos(p) } else { self.idx_neg(p) })
    }

    fn signed_coeffs(&self, s: usize) -> Vec<i64> {
        let np = self.n_pos();
        if s < np {
            self.rs.positive_roots[s].0.clone()
        } else {
            self.rs.positive_roots[s - np].negated().0
        }
    }

    /// Structure constant `N_{r_s, r_t}` over signed root indices.
    pub fn n_signed(&self, s: usize, t: usize) -> i64 {
        self.n[s][t]
    }

    /// Bracket of two basis elements as a short integer combination.
    pub fn bracket_basis(&self, a: usize, b: usize) -> BasisTerms {
        let l = self.rank();
        let np = self.n_pos();
        match (a < l, b < l) {
            (true, true) => Vec::new(),
            (true, false) => {
                let coeffs = self.root_of_basis(b).unwrap();
                let pairing: i64 = coeffs
                    .iter()
                    .enumerate()
                    .map(|(j, &m)| m * self.rs.cartan[j][a])
                    .sum();
                if pairing == 0 {
                    Vec::new()
                } else {
                    vec![(b, pairing)]
                }
            }
            (false, true) => {
                let mut t = self.bracket_basis(b, a);
                for e in &mut t {
                    e.1 = -e.1;
                }
                t
            }
            (false, false) => {
                let sa = a - l;
                let sb = b - l;
                let ra = self.signed_coeffs(sa);
                let rb = self.signed_coeffs(sb);
                let sum: Vec<i64> = ra.iter().zip(&rb).map(|(x, y)| x + y).collect();
                if sum.iter().all(|&c| c == 0) {
                    let p = if sa < np { sa } else { sb };
                    let sign = if sa < np { 1 } else { -1 };
                    self.coroot[p]
                        .iter()
                        .enumerate()
                        .filter(|(_, &k)| k != 0)
                        .map(|(i, &k)| (i, sign * k))
                        .collect()
                } else if let Some(idx) = self.basis_of_root(&sum) {
                    let c = self.n[sa][sb];
                    debug_assert_ne!(c, 0);
                    vec![(idx, c)]
                } else {
                    Vec::new()
                }
            }
        }
    }

    /// Bracket of sparse elements.
    pub fn bracket_sparse(&self, x: &SVec, y: &SVec) -> SVec {
        let mut acc: std::collections::BTreeMap<usize, Q> = Default::default();
        for (a, ca) in x {
            for (b, cb) in y {
                for (idx, c) in self.bracket_basis(*a, *b) {
                    let e = acc.entry(idx).or_insert_with(Q::zero);
                    *e += ca * cb * q(c);
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Bracket of dense elements.
    pub fn bracket_vec(&self, x: &GVec, y: &GVec) -> GVec {
        let xs: SVec = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        let ys: SVec = y
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        let mut out = vec![Q::zero(); self.dim];
        for (idx, c) in self.bracket_sparse(&xs, &ys) {
            out[idx] = c;
        }
        out
    }

    /// Killing form `B(x_a, x_b) = tr(ad x_a ∘ ad x_b)` on basis elements.
    pub fn killing(&self, a: usize, b: usize) -> i64 {
        let mut acc = 0i64;
        for u in 0..self.dim {
            for (m, c1) in self.bracket_basis(b, u) {
                for (r, c2) in self.bracket_basis(a, m) {
                    if r == u {
                        acc += c1 * c2;
                    }
                }
            }
        }
        acc
    }

    fn jacobi_residual(&self, a: usize, b: usize, c: usize) -> bool {
        let mut acc: std::collections::BTreeMap<usize, i64> = Default::default();
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            for (m, c1) in self.bracket_basis(x, y) {
                for (r, c2) in self.bracket_basis(m, z) {
                    *acc.entry(r).or_insert(0) += c1 * c2;
                }
            }
        }
        acc.values().all(|&v| v == 0)
    }

    fn verify_jacobi(&self) -> Result<()> {
        if self.dim <= 60 {
            for a in 0..self.dim {
                for b in a + 1..self.dim {
                    for c in b + 1..self.dim {
                        if !self.jacobi_residual(a, b, c) {
                            return Err(Error::InternalConsistency(format!(
                                "Jacobi identity fails on basis triple ({a},{b},{c}) for {}",
                                self.lie_type
                            )));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9E37_79B9_7F4A_7C15u64 ^ (self.dim as u64);
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            for _ in 0..30_000 {
                let a = (next() % self.dim as u64) as usize;
                let b = (next() % self.dim as u64) as usize;
                let c = (next() % self.dim as u64) as usize;
                if !self.jacobi_residual(a, b, c) {
                    return Err(Error::InternalConsistency(format!(
                        "Jacobi identity fails on basis triple ({a},{b},{c}) for {}",
                        self.lie_type
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Length `p` of the descending `r_s`-string through `r_t`: the largest k >= 0
/// with `r_t - k r_s` a root.
fn string_down(rs: &RootSystem, s: &[i64], t: &[i64]) -> i64 {
    let mut p = 0i64;
    loop {
        let probe: Vec<i64> = t
            .iter()
            .zip(s)
            .map(|(a, b)| a - (p + 1) * b)
            .collect();
        if rs.is_root(&probe) {
            p += 1;
        } else {
            return p;
        }
    }
}

pub fn build_structure_constants(t: LieType) -> Result<StructureConstants> {
    let rs = build_root_system(t)?;
    let l = rs.rank();
    let np = rs.n_pos();
    let dim = l + 2 * np;

    let len2: Vec<Q> = (0..np).map(|p| rs.len2(&rs.positive_roots[p].0)).collect();

    let simple_len2: Vec<Q> = (0..l)
        .map(|i| {
            let mut u = vec![0i64; l];
            u[i] = 1;
            rs.len2(&u)
        })
        .collect();

    // H_γ = Σ m_i (α_i,α_i)/(γ,γ) h_i, required integral.
    let mut coroot = Vec::with_capacity(np);
    for p in 0..np {
        let mut ks = Vec::with_capacity(l);
        for i in 0..l {
            let k = q(rs.positive_roots[p].0[i]) * simple_len2[i].clone() / len2[p].clone();
            if !k.denom().is_one() {
                return Err(Error::InternalConsistency(format!(
                    "non-integral coroot coefficient for root {} of {}",
                    rs.positive_roots[p], t
                )));
            }
            ks.push(*k.numer() as i64);
        }
        coroot.push(ks);
    }

    let mut n = vec![vec![0i64; 2 * np]; 2 * np];

    // Positive-positive constants, by increasing height of the sum.
    for g in 0..np {
        let gamma = rs.positive_roots[g].0.clone();
        if rs.positive_roots[g].height() == 1 {
            continue;
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for a in 0..np {
            let rest: Vec<i64> = gamma
                .iter()
                .zip(&rs.positive_roots[a].0)
                .map(|(x, y)| x - y)
                .collect();
            if let Some(b) = rs.pos_index(&rest) {
                if b > a {
                    pairs.push((a, b));
                }
            }
        }
        let (a1, b1) = pairs[0];
        let p_esp = string_down(&rs, &rs.positive_roots[a1].0, &rs.positive_roots[b1].0);
        n[a1][b1] = p_esp + 1;
        n[b1][a1] = -(p_esp + 1);

        // N_{-α₁,γ} = (β₁,β₁)/(γ,γ) N_{α₁,β₁}
        let den = len2[b1].clone() / len2[g].clone() * q(n[a1][b1]);
        for &(a, b) in pairs.iter().skip(1) {
            // N_{α,β} = [N_{-α₁,α} N_{α-α₁,β} + N_{-α₁,β} N_{α,β-α₁}] / N_{-α₁,γ}
            let alpha = &rs.positive_roots[a].0;
            let beta = &rs.positive_roots[b].0;
            let mut num = Q::zero();
            let d1: Vec<i64> = alpha
                .iter()
                .zip(&rs.positive_roots[a1].0)
                .map(|(x, y)| x - y)
                .collect();
            if let Some(d1i) = rs.pos_index(&d1) {
                let t1 = len2[d1i].clone() / len2[a].clone() * q(n[a1][d1i] * n[d1i][b]);
                num += t1;
            }
            let d2: Vec<i64> = beta
                .iter()
                .zip(&rs.positive_roots[a1].0)
                .map(|(x, y)| x - y)
                .collect();
            if let Some(d2i) = rs.pos_index(&d2) {
                let t2 = len2[d2i].clone() / len2[b].clone() * q(n[a1][d2i] * n[a][d2i]);
                num += t2;
            }
            let val = num / den.clone();
            if !val.denom().is_one() {
                return Err(Error::InternalConsistency(format!(
                    "non-integral structure constant for pair ({},{}) in {}",
                    rs.positive_roots[a], rs.positive_roots[b], t
                )));
            }
            n[a][b] = *val.numer() as i64;
            n[b][a] = -n[a][b];
        }
    }

    // Negative-negative and mixed-sign constants.
    for a in 0..np {
        for b in 0..np {
            n[np + a][np + b] = -n[a][b];
        }
    }
    for a in 0..np {
        for b in 0..np {
            if a == b {
                continue;
            }
            let alpha = &rs.positive_roots[a].0;
            let beta = &rs.positive_roots[b].0;
            let diff: Vec<i64> = alpha.iter().zip(beta).map(|(x, y)| x - y).collect();
            let val = if let Some(s) = rs.pos_index(&diff) {
                // α-β positive: N_{α,-β} = -(σ,σ)/(α,α) N_{β,σ}
                let v = -(len2[s].clone() / len2[a].clone()) * q(n[b][s]);
                assert!(v.denom().is_one());
                *v.numer() as i64
            } else {
                let ndiff: Vec<i64> = diff.iter().map(|&c| -c).collect();
                if let Some(tt) = rs.pos_index(&ndiff) {
                    // β-α positive: N_{α,-β} = -(τ,τ)/(β,β) N_{α,τ}
                    let v = -(len2[tt].clone() / len2[b].clone()) * q(n[a][tt]);
                    assert!(v.denom().is_one());
                    *v.numer() as i64
                } else {
                    0
                }
            };
            n[a][np + b] = val;
            n[np + b][a] = -val;
        }
    }

    let sc = StructureConstants {
        lie_type: t,
        rs,
        dim,
        n,
        coroot,
    };

    // Hallmark check: |N_{u,v}| = p + 1 for every bracketing signed pair.
    for s in 0..2 * np {
        let ru = sc.signed_coeffs(s);
        for tt in 0..2 * np {
            let rv = sc.signed_coeffs(tt);
            let sum: Vec<i64> = ru.iter().zip(&rv).map(|(x, y)| x + y).collect();
            if sum.iter().all(|&c| c == 0) || !sc.rs.is_root(&sum) {
                continue;
            }
            let p = string_down(&sc.rs, &ru, &rv);
            if sc.n[s][tt].abs() != p + 1 {
                return Err(Error::InternalConsistency(format!(
                    "structure constant magnitude {} differs from string bound {} in {}",
                    sc.n[s][tt],
                    p + 1,
                    t
                )));
            }
        }
    }

    sc.verify_jacobi()?;
    Ok(sc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn sc(name: &str) -> StructureConstants {
        build_structure_constants(LieType::parse(name).unwrap()).unwrap()
    }

    #[test]
    fn sl2_relations() {
        let s = sc("A1");
        let e = s.idx_pos(0);
        let f = s.idx_neg(0);
        let h = s.idx_cartan(1);
        assert_eq!(s.bracket_basis(e, f), vec![(h, 1)]);
        assert_eq!(s.bracket_basis(f, e), vec![(h, -1)]);
        assert_eq!(s.bracket_basis(h, e), vec![(e, 2)]);
        assert_eq!(s.bracket_basis(h, f), vec![(f, -2)]);
    }

    #[test]
    fn a2_extraspecial_sign() {
        let s = sc("A2");
        let i12 = s.rs.pos_index(&[1, 1]).unwrap();
        assert_eq!(s.n_signed(0, 1), 1);
        assert_eq!(s.n_signed(1, 0), -1);
        assert_eq!(
            s.bracket_basis(s.idx_pos(0), s.idx_pos(1)),
            vec![(s.idx_pos(i12), 1)]
        );
    }

    #[test]
    fn g2_string_magnitudes() {
        let s = sc("G2");
        let i10 = s.rs.pos_index(&[1, 0]).unwrap();
        let i11 = s.rs.pos_index(&[1, 1]).unwrap();
        let i21 = s.rs.pos_index(&[2, 1]).unwrap();
        let i31 = s.rs.pos_index(&[3, 1]).unwrap();
        let i32 = s.rs.pos_index(&[3, 2]).unwrap();
        // α₁-string through α₁+α₂ has length 1 below, so |N| = 2.
        assert_eq!(s.n_signed(i10, i11).abs(), 2);
        assert_eq!(s.n_signed(i10, i21).abs(), 3);
        // (α₁+α₂) + (2α₁+α₂) = 3α₁+2α₂ is extraspecial for the top root.
        assert_eq!(s.n_signed(i11, i21).abs(), 3);
        assert!(s.rs.positive_roots[i31].0 == vec![3, 1] && s.rs.positive_roots[i32].0 == vec![3, 2]);
    }

    #[test]
    fn g2_integral_coroots() {
        let s = sc("G2");
        let i21 = s.rs.pos_index(&[2, 1]).unwrap();
        // 2α₁+α₂ is short; its coroot is 2h₁+3h₂.
        let terms = s.bracket_basis(s.idx_pos(i21), s.idx_neg(i21));
        assert_eq!(terms, vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn rank_class_builds_verify() {
        for name in ["A3", "B3", "C3", "G2", "F4", "B4", "D4"] {
            sc(name);
        }
    }

    #[test]
    fn killing_orthogonality_b3() {
        let s = sc("B3");
        for p in 0..s.n_pos() {
            assert_ne!(s.killing(s.idx_pos(p), s.idx_neg(p)), 0);
            assert_eq!(s.killing(s.idx_pos(p), s.idx_pos(p)), 0);
            assert_eq!(s.killing(s.idx_cartan(1), s.idx_pos(p)), 0);
            if p > 0 {
                assert_eq!(s.killing(s.idx_pos(p), s.idx_neg(0)), 0);
            }
        }
        // B is symmetric and ad-invariant on a spot-check pair.
        assert_eq!(
            s.killing(s.idx_cartan(1), s.idx_cartan(2)),
            s.killing(s.idx_cartan(2), s.idx_cartan(1))
        );
    }

    #[test]
    fn dense_bracket_matches_basis() {
        let s = sc("C3");
        let mut x = vec![q(0); s.dim];
        let mut y = vec![q(0); s.dim];
        x[s.idx_pos(0)] = q(2);
        x[s.idx_cartan(2)] = q(1);
        y[s.idx_neg(0)] = q(3);
        y[s.idx_pos(1)] = q(-1);
        let z = s.bracket_vec(&x, &y);
        let mut expect = vec![q(0); s.dim];
        for (a, ca) in [(s.idx_pos(0), q(2)), (s.idx_cartan(2), q(1))] {
            for (b, cb) in [(s.idx_neg(0), q(3)), (s.idx_pos(1), q(-1))] {
                for (idx, c) in s.bracket_basis(a, b) {
                    let t = ca.clone() * cb.clone() * q(c);
                    expect[idx] = expect[idx].clone() + t;
                }
            }
        }
        assert_eq!(z, expect);
    }
}
