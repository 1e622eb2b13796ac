//! Root systems of the finite-dimensional simple Lie algebras, in Bourbaki
//! numbering, built from the Cartan matrix alone.
//!
//! Roots live in simple-root coordinates (`Root`), weights in fundamental-
//! weight coordinates (`Weight`); the Cartan matrix mediates between the two.
//! Positive roots are enumerated height by height via root strings and kept
//! in a canonical order: ascending height, ties broken lexicographically.

use crate::error::{Error, Result};
use crate::linalg::{self, q, qr, Q};
use num::Zero;
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn legal_ranks(self) -> &'static str {
        match self {
            Family::A => "l >= 1",
            Family::B => "l >= 2",
            Family::C => "l >= 2",
            Family::D => "l >= 3",
            Family::E => "6, 7, 8",
            Family::F => "4",
            Family::G => "2",
        }
    }

    fn rank_ok(self, l: usize) -> bool {
        match self {
            Family::A => l >= 1,
            Family::B => l >= 2,
            Family::C => l >= 2,
            Family::D => l >= 3,
            Family::E => (6..=8).contains(&l),
            Family::F => l == 4,
            Family::G => l == 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Node relabelling that accompanies an isomorphic-type substitution,
/// e.g. B2 computed as C2. `to_input[c-1]` is the input label of canonical
/// node `c`; the map is an involution for both cases that arise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabel {
    pub input: LieType,
    pub canonical: LieType,
    pub to_input: Vec<usize>,
}

impl Relabel {
    pub fn identity(t: LieType) -> Self {
        Relabel {
            input: t,
            canonical: t,
            to_input: (1..=t.rank).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.input == self.canonical
    }

    pub fn node_to_input(&self, canonical: usize) -> usize {
        self.to_input[canonical - 1]
    }

    pub fn node_to_canonical(&self, input: usize) -> usize {
        self.to_input.iter().position(|&x| x == input).unwrap() + 1
    }
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.rank_ok(rank) {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                legal: family.legal_ranks(),
            })
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let fam = match s.chars().next() {
            Some('A') | Some('a') => Family::A,
            Some('B') | Some('b') => Family::B,
            Some('C') | Some('c') => Family::C,
            Some('D') | Some('d') => Family::D,
            Some('E') | Some('e') => Family::E,
            Some('F') | Some('f') => Family::F,
            Some('G') | Some('g') => Family::G,
            _ => {
                return Err(Error::InvalidParabolic(format!(
                    "cannot parse Lie type from {s:?}"
                )))
            }
        };
        let rank: usize = s[1..].parse().map_err(|_| {
            Error::InvalidParabolic(format!("cannot parse rank from {s:?}"))
        })?;
        LieType::new(fam, rank)
    }

    /// Dimension of the algebra, from the classification.
    pub fn dim(self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 2),
            Family::B | Family::C => l * (2 * l + 1),
            Family::D => l * (2 * l - 1),
            Family::E => match l {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// Resolves the two coincidences of the classification, B2 = C2 and
    /// D3 = A3, to a preferred label plus the node relabelling.
    pub fn canonicalize(self) -> Relabel {
        match (self.family, self.rank) {
            (Family::B, 2) => Relabel {
                input: self,
                canonical: LieType { family: Family::C, rank: 2 },
                to_input: vec![2, 1],
            },
            (Family::D, 3) => Relabel {
                input: self,
                canonical: LieType { family: Family::A, rank: 3 },
                to_input: vec![2, 1, 3],
            },
            _ => Relabel::identity(self),
        }
    }

    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut c = vec![vec![0i64; l]; l];
        for i in 0..l {
            c[i][i] = 2;
        }
        let mut edge = |i: usize, j: usize| {
            c[i - 1][j - 1] = -1;
            c[j - 1][i - 1] = -1;
        };
        match self.family {
            Family::A => {
                for i in 1..l {
                    edge(i, i + 1);
                }
            }
            Family::B => {
                for i in 1..l {
                    edge(i, i + 1);
                }
                c[l - 2][l - 1] = -2;
            }
            Family::C => {
                for i in 1..l {
                    edge(i, i + 1);
                }
                c[l - 1][l - 2] = -2;
            }
            Family::D => {
                for i in 1..l.saturating_sub(2) {
                    edge(i, i + 1);
                }
                edge(l - 2, l - 1);
                edge(l - 2, l);
            }
            Family::E => {
                edge(1, 3);
                edge(3, 4);
                edge(4, 5);
                edge(5, 6);
                edge(2, 4);
                if l >= 7 {
                    edge(6, 7);
                }
                if l == 8 {
                    edge(7, 8);
                }
            }
            Family::F => {
                edge(1, 2);
                edge(2, 3);
                edge(3, 4);
                c[1][2] = -2;
            }
            Family::G => {
                c[0][1] = -1;
                c[1][0] = -3;
            }
        }
        c
    }

    /// Half square lengths (alpha_i, alpha_i)/2, normalised so long roots
    /// have length^2 = 2.
    pub fn half_lengths(self) -> Vec<Q> {
        let l = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![q(1); l],
            Family::B => {
                let mut d = vec![q(1); l];
                d[l - 1] = qr(1, 2);
                d
            }
            Family::C => {
                let mut d = vec![qr(1, 2); l];
                d[l - 1] = q(1);
                d
            }
            Family::F => vec![q(1), q(1), qr(1, 2), qr(1, 2)],
            Family::G => vec![qr(1, 3), q(1)],
        }
    }

    /// The diagram automorphism group as node permutations
    /// (`perm[i-1]` = image of node `i`).
    pub fn diagram_automorphisms(self) -> Vec<Vec<usize>> {
        let l = self.rank;
        let id: Vec<usize> = (1..=l).collect();
        match (self.family, l) {
            (Family::A, _) if l >= 2 => {
                let flip: Vec<usize> = (1..=l).rev().collect();
                vec![id, flip]
            }
            (Family::D, 4) => {
                let mut out = Vec::new();
                for p in [[1, 3, 4], [1, 4, 3], [3, 1, 4], [3, 4, 1], [4, 1, 3], [4, 3, 1]] {
                    out.push(vec![p[0], 2, p[1], p[2]]);
                }
                out
            }
            (Family::D, _) if l >= 3 => {
                let mut swap = id.clone();
                swap.swap(l - 2, l - 1);
                vec![id, swap]
            }
            (Family::E, 6) => vec![id, vec![6, 2, 5, 4, 3, 1]],
            _ => vec![id],
        }
    }
}

/// A root in simple-root coordinates. Stored roots are sign-coherent;
/// positive roots have all coefficients >= 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&m| m >= 0) && self.0.iter().any(|&m| m > 0)
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|&m| -m).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &m) in self.0.iter().enumerate() {
            if m == 0 {
                continue;
            }
            if first {
                if m < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if m < 0 { " - " } else { " + " })?;
            }
            if m.abs() != 1 {
                write!(f, "{}", m.abs())?;
            }
            write!(f, "a{}", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn negated(&self) -> Weight {
        Weight(self.0.iter().map(|&x| -x).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

pub struct RootSystem {
    pub lie_type: LieType,
    pub cartan: Vec<Vec<i64>>,
    half_lengths: Vec<Q>,
    pub positive_roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    pub dim: usize,
}

/// Builds the full positive root set of `t` from its Cartan matrix, height by
/// height: alpha + alpha_i is a root iff the alpha_i-string through alpha
/// satisfies p - <alpha, alpha_i^vee> > 0, and p is read off from the lower
/// heights already enumerated.
pub fn build_root_system(t: LieType) -> Result<RootSystem> {
    LieType::new(t.family, t.rank)?;
    let l = t.rank;
    let cartan = t.cartan_matrix();
    let mut roots: Vec<Root> = Vec::new();
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut level: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            let mut v = vec![0i64; l];
            v[i] = 1;
            v
        })
        .collect();
    level.sort();
    let mut height = 1;
    while !level.is_empty() {
        for m in &level {
            index.insert(m.clone(), roots.len());
            roots.push(Root(m.clone()));
        }
        let mut next: Vec<Vec<i64>> = Vec::new();
        for m in &level {
            for i in 0..l {
                let pairing: i64 = (0..l).map(|j| m[j] * cartan[j][i]).sum();
                let mut p = 0i64;
                let mut down = m.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !index.contains_key(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing > 0 {
                    let mut up = m.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        level = next;
        height += 1;
        debug_assert!(height < 64, "root enumeration failed to terminate");
    }
    let dim = l + 2 * roots.len();
    if dim != t.dim() {
        return Err(Error::InternalConsistency(format!(
            "{t}: enumerated dimension {dim} != classification dimension {}",
            t.dim()
        )));
    }
    let rs = RootSystem {
        lie_type: t,
        cartan,
        half_lengths: t.half_lengths(),
        positive_roots: roots,
        index,
        dim,
    };
    let top = rs.highest_root();
    let top_w = rs.root_to_weight(&top.0);
    if top_w.0.iter().any(|&r| r < 0) {
        return Err(Error::InternalConsistency(format!(
            "{t}: highest root {top} is not dominant"
        )));
    }
    Ok(rs)
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn n_pos(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut v = vec![0i64; self.rank()];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().expect("nonempty root system")
    }

    /// Index of a positive root in the canonical order.
    pub fn pos_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// True for any root, positive or negative.
    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        if coeffs.iter().all(|&m| m >= 0) {
            self.index.contains_key(coeffs)
        } else if coeffs.iter().all(|&m| m <= 0) {
            let neg: Vec<i64> = coeffs.iter().map(|&m| -m).collect();
            self.index.contains_key(&neg)
        } else {
            false
        }
    }

    /// <alpha, alpha_i^vee> for alpha in simple-root coordinates (i 1-based).
    pub fn coroot_pairing(&self, coeffs: &[i64], i: usize) -> i64 {
        (0..self.rank()).map(|j| coeffs[j] * self.cartan[j][i - 1]).sum()
    }

    /// Weight coordinates of an element of the root lattice.
    pub fn root_to_weight(&self, coeffs: &[i64]) -> Weight {
        let l = self.rank();
        Weight(
            (0..l)
                .map(|j| (0..l).map(|i| coeffs[i] * self.cartan[i][j]).sum())
                .collect(),
        )
    }

    /// Simple-root coordinates of a weight, when it lies in the root lattice.
    pub fn weight_to_root(&self, w: &Weight) -> Result<Vec<i64>> {
        let l = self.rank();
        let mat: Vec<Vec<Q>> = (0..l)
            .map(|j| (0..l).map(|i| q(self.cartan[i][j] as i128)).collect())
            .collect();
        let b: Vec<Q> = w.0.iter().map(|&x| q(x as i128)).collect();
        let sol = linalg::solve(&mat, &b)
            .ok_or_else(|| Error::NotInRootLattice(w.0.clone()))?;
        let mut out = Vec::with_capacity(l);
        for x in sol {
            if !x.is_integer() {
                return Err(Error::NotInRootLattice(w.0.clone()));
            }
            out.push(*x.numer() as i64);
        }
        Ok(out)
    }

    /// Inner product extended bilinearly from (alpha_i, alpha_j) = d_j c_ij.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Q {
        let l = self.rank();
        let mut acc = Q::zero();
        for i in 0..l {
            if a[i] == 0 {
                continue;
            }
            for j in 0..l {
                if b[j] != 0 {
                    acc += q(a[i] as i128)
                        * q(b[j] as i128)
                        * self.half_lengths[j]
                        * q(self.cartan[i][j] as i128);
                }
            }
        }
        acc
    }

    pub fn len2(&self, a: &[i64]) -> Q {
        self.inner(a, a)
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut v = vec![0i64; self.rank()];
        v[i - 1] = 1;
        Weight(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn rs(f: Family, l: usize) -> RootSystem {
        build_root_system(LieType { family: f, rank: l }).unwrap()
    }

    #[test]
    fn rejects_out_of_range_ranks() {
        for (f, l) in [
            (Family::A, 0),
            (Family::B, 1),
            (Family::C, 1),
            (Family::D, 2),
            (Family::E, 5),
            (Family::E, 9),
            (Family::F, 3),
            (Family::G, 3),
        ] {
            assert!(LieType::new(f, l).is_err(), "{f:?}{l} should be rejected");
        }
    }

    #[test]
    fn a1_is_sl2() {
        let r = rs(Family::A, 1);
        assert_eq!(r.positive_roots, vec![Root(vec![1])]);
        assert_eq!(r.dim, 3);
    }

    #[test]
    fn g2_positive_roots_exact() {
        let r = rs(Family::G, 2);
        let got: BTreeSet<Vec<i64>> =
            r.positive_roots.iter().map(|a| a.0.clone()).collect();
        let want: BTreeSet<Vec<i64>> = [
            vec![1, 0],
            vec![0, 1],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![3, 2],
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
        assert_eq!(r.highest_root().0, vec![3, 2]);
        assert_eq!(r.dim, 14);
    }

    #[test]
    fn e8_has_120_positive_roots() {
        let r = rs(Family::E, 8);
        assert_eq!(r.n_pos(), 120);
        assert_eq!(r.dim, 248);
    }

    #[test]
    fn dimensions_match_classification_for_all_families() {
        let mut types = vec![
            (Family::G, 2),
            (Family::F, 4),
            (Family::E, 6),
            (Family::E, 7),
            (Family::E, 8),
        ];
        for l in 1..=8 {
            types.push((Family::A, l));
        }
        for l in 2..=8 {
            types.push((Family::B, l));
            types.push((Family::C, l));
        }
        for l in 3..=8 {
            types.push((Family::D, l));
        }
        for (f, l) in types {
            let r = rs(f, l);
            assert_eq!(r.dim, r.lie_type.dim(), "{f:?}{l}");
        }
    }

    #[test]
    fn canonical_order_is_height_then_lex() {
        for (f, l) in [(Family::E, 7), (Family::C, 5), (Family::G, 2)] {
            let r = rs(f, l);
            for w in r.positive_roots.windows(2) {
                let (a, b) = (&w[0], &w[1]);
                assert!(
                    a.height() < b.height()
                        || (a.height() == b.height() && a.0 < b.0)
                );
            }
        }
    }

    #[test]
    fn highest_root_weights_match_classification() {
        let cases: Vec<(Family, usize, Vec<i64>)> = vec![
            (Family::A, 5, vec![1, 0, 0, 0, 1]),
            (Family::B, 4, vec![0, 1, 0, 0]),
            (Family::C, 4, vec![2, 0, 0, 0]),
            (Family::D, 5, vec![0, 1, 0, 0, 0]),
            (Family::G, 2, vec![0, 1]),
            (Family::F, 4, vec![1, 0, 0, 0]),
            (Family::E, 6, vec![0, 1, 0, 0, 0, 0]),
            (Family::E, 7, vec![1, 0, 0, 0, 0, 0, 0]),
            (Family::E, 8, vec![0, 0, 0, 0, 0, 0, 0, 1]),
        ];
        for (f, l, want) in cases {
            let r = rs(f, l);
            assert_eq!(r.root_to_weight(&r.highest_root().0).0, want, "{f:?}{l}");
        }
    }

    #[test]
    fn highest_root_coefficients() {
        assert_eq!(rs(Family::C, 4).highest_root().0, vec![2, 2, 2, 1]);
        assert_eq!(rs(Family::B, 4).highest_root().0, vec![1, 2, 2, 2]);
        assert_eq!(rs(Family::F, 4).highest_root().0, vec![2, 3, 4, 2]);
        assert_eq!(rs(Family::E, 8).highest_root().0, vec![2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn root_weight_round_trip() {
        for (f, l) in [(Family::F, 4), (Family::D, 6), (Family::A, 3)] {
            let r = rs(f, l);
            for root in &r.positive_roots {
                let w = r.root_to_weight(&root.0);
                assert_eq!(r.weight_to_root(&w).unwrap(), root.0);
                let wn = r.root_to_weight(&root.negated().0);
                assert_eq!(wn, w.negated());
            }
        }
    }

    #[test]
    fn weight_conversion_examples() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.root_to_weight(&[1, 1]).0, vec![1, 1]);
        let g2 = rs(Family::G, 2);
        assert_eq!(g2.root_to_weight(&[4, 0]).0, vec![8, -4]);
        assert_eq!(g2.weight_to_root(&Weight(vec![8, -4])).unwrap(), vec![4, 0]);
    }

    #[test]
    fn non_lattice_weight_rejected() {
        let a2 = rs(Family::A, 2);
        let err = a2.weight_to_root(&Weight(vec![1, 0])).unwrap_err();
        assert!(matches!(err, Error::NotInRootLattice(_)));
    }

    #[test]
    fn g2_inner_products() {
        let g2 = rs(Family::G, 2);
        assert_eq!(g2.len2(&[1, 0]), qr(2, 3));
        assert_eq!(g2.len2(&[0, 1]), q(2));
        assert_eq!(g2.inner(&[1, 0], &[0, 1]), q(-1));
        // the highest root is long
        assert_eq!(g2.len2(&[3, 2]), q(2));
    }

    #[test]
    fn length_symmetry_of_cartan_pairing() {
        for (f, l) in [(Family::B, 5), (Family::C, 5), (Family::F, 4), (Family::G, 2)] {
            let r = rs(f, l);
            for i in 0..l {
                for j in 0..l {
                    let a = r.simple_root(i + 1);
                    let b = r.simple_root(j + 1);
                    assert_eq!(r.inner(&a.0, &b.0), r.inner(&b.0, &a.0));
                }
            }
        }
    }

    #[test]
    fn coincidence_relabellings() {
        let b2 = LieType { family: Family::B, rank: 2 }.canonicalize();
        assert_eq!(b2.canonical, LieType { family: Family::C, rank: 2 });
        assert_eq!(b2.to_input, vec![2, 1]);
        assert_eq!(b2.node_to_canonical(1), 2);

        let d3 = LieType { family: Family::D, rank: 3 }.canonicalize();
        assert_eq!(d3.canonical, LieType { family: Family::A, rank: 3 });
        assert_eq!(d3.to_input, vec![2, 1, 3]);

        assert!(LieType { family: Family::E, rank: 7 }.canonicalize().is_identity());
    }

    #[test]
    fn b2_and_c2_root_systems_are_swapped() {
        let b2 = rs(Family::B, 2);
        let c2 = rs(Family::C, 2);
        let swapped: BTreeSet<Vec<i64>> = b2
            .positive_roots
            .iter()
            .map(|r| vec![r.0[1], r.0[0]])
            .collect();
        let c2set: BTreeSet<Vec<i64>> =
            c2.positive_roots.iter().map(|r| r.0.clone()).collect();
        assert_eq!(swapped, c2set);
    }

    #[test]
    fn d3_matches_a3_under_relabel() {
        let d3 = rs(Family::D, 3);
        let a3 = rs(Family::A, 3);
        let rel = LieType { family: Family::D, rank: 3 }.canonicalize();
        let mapped: BTreeSet<Vec<i64>> = a3
            .positive_roots
            .iter()
            .map(|r| {
                let mut v = vec![0i64; 3];
                for c in 1..=3 {
                    v[rel.node_to_input(c) - 1] = r.0[c - 1];
                }
                v
            })
            .collect();
        let d3set: BTreeSet<Vec<i64>> =
            d3.positive_roots.iter().map(|r| r.0.clone()).collect();
        assert_eq!(mapped, d3set);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Root(vec![3, 2]).to_string(), "3a1 + 2a2");
        assert_eq!(Root(vec![0, -1]).to_string(), "-a2");
        assert_eq!(Root(vec![-1, -2, 0]).to_string(), "-a1 - 2a2");
        assert_eq!(LieType { family: Family::E, rank: 8 }.to_string(), "E8");
    }
}
