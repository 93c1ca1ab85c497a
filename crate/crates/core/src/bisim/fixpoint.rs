//! Pairwise greatest-fixpoint refinement, the reference engine.

use crate::degree::{biresiduum, Degree};
use crate::error::Result;
use crate::fuzzy::FuzzyRelation;
use crate::model::{Features, FuzzyInterpretation};

use super::{require_same_signature, to_fuzzy_graph, BisimResult};

/// Order in which pairs are revisited within a sweep; updates are in place.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepOrder {
    Forward,
    Reverse,
}

/// Greatest fuzzy Phi-bisimulation by monotone refinement from the label bound.
pub fn greatest_bisimulation_fixpoint(
    i: &FuzzyInterpretation,
    j: &FuzzyInterpretation,
    phi: Features,
    order: SweepOrder,
) -> Result<BisimResult> {
    require_same_signature(i, j)?;
    let (g1, g2) = (to_fuzzy_graph(i, phi), to_fuzzy_graph(j, phi));
    let (n1, n2) = (g1.len(), g2.len());
    let labels = g1.vertex_labels.len();
    let mut z = vec![vec![Degree::ZERO; n2]; n1];
    for (x, row) in z.iter_mut().enumerate() {
        for (x2, v) in row.iter_mut().enumerate() {
            *v = (0..labels)
                .map(|p| biresiduum(g1.labels[x].get(p), g2.labels[x2].get(p)))
                .fold(Degree::ONE, Degree::min);
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..n1).flat_map(|x| (0..n2).map(move |y| (x, y))).collect();
    if order == SweepOrder::Reverse {
        pairs.reverse();
    }
    let mut sweeps = 0;
    loop {
        sweeps += 1;
        let mut changed = false;
        for &(x, x2) in &pairs {
            let mut bound = z[x][x2];
            if bound.is_zero() {
                continue;
            }
            for (e1, e2) in g1.edges.iter().zip(&g2.edges) {
                for (y, e) in e1.successors(x) {
                    let s = e2.successors(x2).map(|(y2, f)| z[y][y2].min(f)).fold(Degree::ZERO, Degree::max);
                    if e > s {
                        bound = bound.min(s);
                    }
                }
                for (y2, f) in e2.successors(x2) {
                    let t = e1.successors(x).map(|(y, e)| z[y][y2].min(e)).fold(Degree::ZERO, Degree::max);
                    if f > t {
                        bound = bound.min(t);
                    }
                }
            }
            if bound < z[x][x2] {
                z[x][x2] = bound;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut out = FuzzyRelation::new(n1, n2);
    for (x, row) in z.iter().enumerate() {
        for (x2, &v) in row.iter().enumerate() {
            out.set(x, x2, v);
        }
    }
    Ok(BisimResult { z: out, iterations: sweeps })
}
