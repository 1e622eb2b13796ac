//! Eigenvalue-spectrum test for rigidity of filtered deformations.
//!
//! Input is the spectrum of a grading element on each filtration degree.  If
//! no sum of two eigenvalues from degrees `i` and `j` reappears in a degree
//! above `i + j` (taking distinct positions within a single degree), every
//! filtered deformation of the graded model is isomorphic to the model
//! itself and the structure is rigid; otherwise the test is silent.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{q, Q};

/// Eigenvalues of the grading element, keyed by filtration degree.
pub type Spectra = BTreeMap<i64, Vec<Q>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub rigid: bool,
    /// Human-readable witnesses for each failed disjointness condition.
    pub obstructions: Vec<String>,
}

pub fn filtration_rigidity_check(spectra: &Spectra) -> Result<RigidityReport> {
    if spectra.is_empty() || spectra.values().all(Vec::is_empty) {
        return Err(Error::EmptySpectra);
    }
    let mut obstructions = Vec::new();

    let levels: Vec<i64> = spectra.keys().copied().collect();
    for (ai, &i) in levels.iter().enumerate() {
        for &j in &levels[ai..] {
            // Pair sums from degrees i and j; within one degree only
            // distinct positions pair up.
            let mut sums: Vec<(Q, String)> = Vec::new();
            if i == j {
                let ev = &spectra[&i];
                for a in 0..ev.len() {
                    for b in a + 1..ev.len() {
                        let s = ev[a].clone() + ev[b].clone();
                        sums.push((s, format!("{} + {} from degree {i}", ev[a], ev[b])));
                    }
                }
            } else {
                for a in &spectra[&i] {
                    for b in &spectra[&j] {
                        let s = a.clone() + b.clone();
                        sums.push((s, format!("{a} (degree {i}) + {b} (degree {j})")));
                    }
                }
            }
            for (&k, above) in spectra.range(i + j + 1..) {
                for ev in above {
                    for (s, witness) in &sums {
                        if s == ev {
                            obstructions.push(format!(
                                "{witness} equals eigenvalue {ev} in degree {k}"
                            ));
                        }
                    }
                }
            }
        }
    }

    // Eigenvalues must separate the degrees for the criterion to bite.
    for (ai, &i) in levels.iter().enumerate() {
        for &j in &levels[ai + 1..] {
            for a in &spectra[&i] {
                if spectra[&j].contains(a) {
                    obstructions.push(format!(
                        "eigenvalue {a} appears in both degree {i} and degree {j}"
                    ));
                }
            }
        }
    }

    Ok(RigidityReport {
        rigid: obstructions.is_empty(),
        obstructions,
    })
}

/// Built-in spectra for geometries discussed alongside the classification.
pub fn preset_spectra(name: &str) -> Option<(Spectra, &'static str)> {
    let mk = |pairs: &[(i64, Vec<Q>)]| -> Spectra { pairs.iter().cloned().collect() };
    match name {
        "proj2d" => Some((
            mk(&[(-1, vec![q(3), q(-6)]), (0, vec![q(-9), q(0)])]),
            "projective structure on a surface, submaximal grading element",
        )),
        "conf3d" => Some((
            mk(&[(-1, vec![q(1), q(-2), q(-5)]), (0, vec![q(-3), q(0)])]),
            "three-dimensional conformal structure, submaximal grading element",
        )),
        "petrov-n" => Some((
            mk(&[(-1, vec![q(-3), q(-1), q(-1), q(1)]), (0, vec![q(0)])]),
            "four-dimensional Lorentzian conformal structure, type N orbit",
        )),
        "petrov-iii" => Some((
            mk(&[(-1, vec![q(-3), q(-1), q(-1), q(1)]), (0, vec![q(0)])]),
            "four-dimensional Lorentzian conformal structure, type III orbit",
        )),
        "g2-31" => Some((
            mk(&[
                (-3, vec![q(-1), q(-5)]),
                (-2, vec![q(-2)]),
                (-1, vec![q(1), q(-3)]),
                (0, vec![q(0)]),
            ]),
            "generic rank-two distribution in dimension five, submaximal grading element",
        )),
        _ => None,
    }
}

pub fn preset_names() -> Vec<&'static str> {
    vec!["proj2d", "conf3d", "petrov-n", "petrov-iii", "g2-31"]
}
