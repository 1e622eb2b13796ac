//! Query pipeline and serializable reports.
//!
//! A query names a simple type and a set of crossed nodes in the caller's
//! labels.  Coincident rank-two and rank-three diagrams are relabelled onto
//! the engine's canonical type, the computation runs there, and every node
//! index in the output is mapped back before reporting (unless canonical
//! labels are requested explicitly).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kostant::h2_modules;
use crate::parabolic::Parabolic;
use crate::prolong::{submax_dimension, BranchData};
use crate::rootsys::{build_root_system, Family, LieType, Relabel};
use crate::weyl::HasseElement;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct ReducedFactor {
    pub lie_type: String,
    pub crossed: Vec<usize>,
}

/// One classification row: everything the engine knows about a single
/// regular branch.
#[derive(Serialize, Clone, Debug)]
pub struct TableRow {
    pub word: [usize; 2],
    pub word_display: String,
    pub homogeneity: i64,
    /// Lowest weight in fundamental-weight coordinates, caller's labels.
    pub mu: Vec<i64>,
    pub j_w: Vec<usize>,
    pub i_w: Vec<usize>,
    pub pr: bool,
    pub dim_g_minus: usize,
    pub dim_a0: usize,
    pub a_plus: Vec<usize>,
    pub dim_a: usize,
    pub s_w: usize,
    pub exceptional: bool,
    pub reduced: Vec<ReducedFactor>,
    pub twistor: Vec<usize>,
    pub twistor_is_input: bool,
    pub dynkin: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct QueryEcho {
    pub lie_type: String,
    pub crossed: Vec<usize>,
    pub canonical_type: String,
    pub canonical_crossed: Vec<usize>,
    pub relabelled: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct QueryOutcome {
    pub schema_version: u32,
    pub query: QueryEcho,
    pub dim_g: usize,
    pub dim_flag: usize,
    pub depth: i64,
    pub dynkin: String,
    pub branches: Vec<TableRow>,
    pub rigid: bool,
    #[serde(rename = "S")]
    pub s: Option<usize>,
    pub exceptions: Vec<String>,
}

/// One row of the full cohomology listing (regular or not).
#[derive(Serialize, Clone, Debug)]
pub struct H2Row {
    pub word: [usize; 2],
    pub word_display: String,
    pub mu: Vec<i64>,
    pub homogeneity: i64,
    pub regular: bool,
    pub j_w: Vec<usize>,
    pub i_w: Vec<usize>,
    pub dynkin: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct H2Outcome {
    pub schema_version: u32,
    pub query: QueryEcho,
    pub modules: Vec<H2Row>,
}

struct Labeller {
    rel: Relabel,
    canonical: bool,
}

impl Labeller {
    fn node(&self, n: usize) -> usize {
        if self.canonical {
            n
        } else {
            self.rel.node_to_input(n)
        }
    }

    fn set(&self, s: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = s.iter().map(|&n| self.node(n)).collect();
        out.sort_unstable();
        out
    }

    fn word(&self, w: &HasseElement) -> [usize; 2] {
        [self.node(w.j), self.node(w.k)]
    }

    fn weight_coords(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (canon, &c) in v.iter().enumerate() {
            out[self.node(canon + 1) - 1] = c;
        }
        out
    }

    fn display_type(&self) -> LieType {
        if self.canonical {
            self.rel.canonical
        } else {
            self.rel.input
        }
    }
}

/// ASCII diagram of `t` with per-node markers: `X` crossed, `[X]` crossed
/// and square, `*` asterisk, `O` plain.
pub fn dynkin_ascii(t: LieType, crossed: &[usize], squares: &[usize], asterisks: &[usize]) -> String {
    let l = t.rank;
    let (chain, hang): (Vec<usize>, Option<(usize, usize)>) = match t.family {
        Family::D => ((1..l).collect(), Some((l, l - 2))),
        Family::E => {
            let mut c = vec![1];
            c.extend(3..=l);
            (c, Some((2, 4)))
        }
        _ => ((1..=l).collect(), None),
    };
    let cart = t.cartan_matrix();
    let glyph = |n: usize| -> &'static str {
        if crossed.contains(&n) {
            if squares.contains(&n) {
                "[X]"
            } else {
                "X"
            }
        } else if asterisks.contains(&n) {
            "*"
        } else {
            "O"
        }
    };
    let bond = |a: usize, b: usize| -> &'static str {
        match cart[a - 1][b - 1] * cart[b - 1][a - 1] {
            1 => "--",
            2 => {
                if cart[a - 1][b - 1] <= -2 {
                    "=>"
                } else {
                    "<="
                }
            }
            3 => {
                if cart[a - 1][b - 1] <= -3 {
                    "#>"
                } else {
                    "<#"
                }
            }
            _ => unreachable!("adjacent bond multiplicity"),
        }
    };
    let mut line = String::new();
    let mut center = 0usize;
    for (i, &n) in chain.iter().enumerate() {
        if i > 0 {
            line.push_str(bond(chain[i - 1], n));
        }
        let g = glyph(n);
        if hang.map(|(_, attach)| attach) == Some(n) {
            center = line.len() + (g.len() - 1) / 2;
        }
        line.push_str(g);
    }
    match hang {
        None => line,
        Some((below, _)) => {
            let g = glyph(below);
            let start = center.saturating_sub((g.len() - 1) / 2);
            format!(
                "{line}\n{}|\n{}{g}",
                " ".repeat(center),
                " ".repeat(start)
            )
        }
    }
}

fn echo(lab: &Labeller, crossed_input: &[usize], p: &Parabolic) -> QueryEcho {
    QueryEcho {
        lie_type: lab.rel.input.to_string(),
        crossed: crossed_input.to_vec(),
        canonical_type: lab.rel.canonical.to_string(),
        canonical_crossed: p.crossed.clone(),
        relabelled: !lab.rel.is_identity(),
    }
}

fn table_row(lab: &Labeller, p: &Parabolic, b: &BranchData) -> TableRow {
    let word = lab.word(&b.module.element);
    let disp = lab.display_type();
    let crossed_disp = lab.set(&p.crossed);
    TableRow {
        word,
        word_display: HasseElement {
            j: word[0],
            k: word[1],
        }
        .to_string(),
        homogeneity: b.module.homogeneity,
        mu: lab.weight_coords(&b.module.mu.0),
        j_w: lab.set(&b.module.j_mu),
        i_w: lab.set(&b.module.i_mu),
        pr: b.pr,
        dim_g_minus: b.dim_g_minus,
        dim_a0: b.dim_a0,
        a_plus: b.a_plus.iter().map(Vec::len).collect(),
        dim_a: b.dim_a_total,
        s_w: b.s_w,
        exceptional: b.exceptional,
        reduced: b
            .reduced
            .iter()
            .map(|(t, c)| ReducedFactor {
                lie_type: t.to_string(),
                crossed: c.clone(),
            })
            .collect(),
        twistor: lab.set(&b.twistor.crossed),
        twistor_is_input: b.twistor.crossed == p.crossed,
        dynkin: dynkin_ascii(
            disp,
            &crossed_disp,
            &lab.set(&b.module.i_mu),
            &lab.set(&b.module.j_mu),
        ),
    }
}

fn resolve(input: LieType, crossed_input: &[usize], canonical: bool) -> Result<(Labeller, Parabolic)> {
    LieType::new(input.family, input.rank)?;
    for &n in crossed_input {
        if n == 0 || n > input.rank {
            return Err(Error::IndexOutOfRange {
                index: n,
                rank: input.rank,
            });
        }
    }
    let rel = input.canonicalize();
    let crossed_canon: Vec<usize> = crossed_input
        .iter()
        .map(|&n| rel.node_to_canonical(n))
        .collect();
    let p = Parabolic::new(crossed_canon, rel.canonical.rank)?;
    Ok((Labeller { rel, canonical }, p))
}

pub fn run_query(input: LieType, crossed_input: &[usize], canonical: bool) -> Result<QueryOutcome> {
    let (lab, p) = resolve(input, crossed_input, canonical)?;
    let rs = build_root_system(lab.rel.canonical)?;
    let sub = submax_dimension(&rs, &p)?;
    let branches: Vec<TableRow> = sub.branches.iter().map(|b| table_row(&lab, &p, b)).collect();
    let exceptions: Vec<String> = branches
        .iter()
        .filter(|b| b.exceptional)
        .map(|b| {
            format!(
                "branch {}: the deformed model is a flat subalgebra; bound lowered by one",
                b.word_display
            )
        })
        .collect();
    Ok(QueryOutcome {
        schema_version: SCHEMA_VERSION,
        query: echo(&lab, crossed_input, &p),
        dim_g: rs.dim,
        dim_flag: sub.grading.dim_g_minus,
        depth: sub.grading.depth,
        dynkin: dynkin_ascii(lab.display_type(), &lab.set(&p.crossed), &[], &[]),
        branches,
        rigid: sub.rigid,
        s: sub.s,
        exceptions,
    })
}

pub fn h2_report(input: LieType, crossed_input: &[usize], canonical: bool) -> Result<H2Outcome> {
    let (lab, p) = resolve(input, crossed_input, canonical)?;
    let rs = build_root_system(lab.rel.canonical)?;
    let disp = lab.display_type();
    let crossed_disp = lab.set(&p.crossed);
    let modules = h2_modules(&rs, &p)?
        .iter()
        .map(|m| {
            let word = lab.word(&m.element);
            H2Row {
                word,
                word_display: HasseElement {
                    j: word[0],
                    k: word[1],
                }
                .to_string(),
                mu: lab.weight_coords(&m.mu.0),
                homogeneity: m.homogeneity,
                regular: m.regular,
                j_w: lab.set(&m.j_mu),
                i_w: lab.set(&m.i_mu),
                dynkin: dynkin_ascii(disp, &crossed_disp, &lab.set(&m.i_mu), &lab.set(&m.j_mu)),
            }
        })
        .collect();
    Ok(H2Outcome {
        schema_version: SCHEMA_VERSION,
        query: echo(&lab, crossed_input, &p),
        modules,
    })
}
