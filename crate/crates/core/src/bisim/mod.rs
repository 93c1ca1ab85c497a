//! Greatest fuzzy bisimulations between finite fuzzy interpretations.
//!
//! Two engines compute the same relation. `levels` refines crisp partitions
//! level by level over the finitely many degrees in play and yields the compact
//! fuzzy partition directly; `fixpoint` is the pairwise greatest-fixpoint
//! iteration, kept as a reference for small inputs.

mod fixpoint;
mod levels;

use std::fmt;

use crate::degree::{biresiduum, Degree};
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyRelation, FuzzySet};
use crate::model::{Features, FuzzyInterpretation, Signature};
use crate::partition::CompactFuzzyPartition;

pub use fixpoint::{greatest_bisimulation_fixpoint, SweepOrder};
pub use levels::LevelPartitions;

/// A role name or, with feature I, the inverse of one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasicRole {
    pub role: usize,
    pub inverse: bool,
}

impl BasicRole {
    pub fn name(role: usize) -> Self {
        BasicRole { role, inverse: false }
    }

    pub fn inverse_of(role: usize) -> Self {
        BasicRole { role, inverse: true }
    }

    /// R(x, y) in `i`.
    pub fn degree(self, i: &FuzzyInterpretation, x: usize, y: usize) -> Degree {
        if self.inverse {
            i.role(self.role).get(y, x)
        } else {
            i.role(self.role).get(x, y)
        }
    }

    /// Pairs `(y, R(x,y))` with positive degree, ascending in `y`.
    pub fn successors<'a>(
        self,
        i: &'a FuzzyInterpretation,
        x: usize,
    ) -> Box<dyn Iterator<Item = (usize, Degree)> + 'a> {
        if self.inverse {
            Box::new(i.role(self.role).predecessors(x))
        } else {
            Box::new(i.role(self.role).successors(x))
        }
    }

    pub fn display(self, sig: &Signature) -> String {
        if self.inverse {
            format!("inv {}", sig.roles()[self.role])
        } else {
            sig.roles()[self.role].clone()
        }
    }
}

/// Basic roles under Phi: role names in signature order, then their inverses.
pub fn basic_roles(sig: &Signature, phi: Features) -> Vec<BasicRole> {
    let n = sig.roles().len();
    let mut out: Vec<BasicRole> = (0..n).map(BasicRole::name).collect();
    if phi.inverse {
        out.extend((0..n).map(BasicRole::inverse_of));
    }
    out
}

/// A fuzzy labeled graph: fuzzy vertex labels and fuzzy labeled edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzyLabeledGraph {
    pub vertex_labels: Vec<String>,
    pub edge_labels: Vec<String>,
    /// Per vertex, a fuzzy set over the vertex labels.
    pub labels: Vec<FuzzySet>,
    /// Per edge label, a fuzzy relation on the vertices.
    pub edges: Vec<FuzzyRelation>,
}

impl FuzzyLabeledGraph {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.len()`.
    pub fn disjoint_union(&self, other: &FuzzyLabeledGraph) -> FuzzyLabeledGraph {
        let (n1, n) = (self.len(), self.len() + other.len());
        let labels = self.labels.iter().chain(&other.labels).cloned().collect();
        let edges = self
            .edges
            .iter()
            .zip(&other.edges)
            .map(|(a, b)| {
                FuzzyRelation::from_entries(
                    n,
                    n,
                    a.iter().chain(b.iter().map(|(x, y, d)| (x + n1, y + n1, d))),
                )
            })
            .collect();
        FuzzyLabeledGraph {
            vertex_labels: self.vertex_labels.clone(),
            edge_labels: self.edge_labels.clone(),
            labels,
            edges,
        }
    }

    /// Distinct positive degrees occurring on labels or edges.
    pub fn degrees(&self) -> std::collections::BTreeSet<Degree> {
        let mut s: std::collections::BTreeSet<Degree> =
            self.labels.iter().flat_map(|l| l.iter().map(|(_, d)| d)).collect();
        s.extend(self.edges.iter().flat_map(|e| e.iter().map(|(_, _, d)| d)));
        s
    }
}

/// Encodes an interpretation as a fuzzy labeled graph under Phi.
pub fn to_fuzzy_graph(i: &FuzzyInterpretation, phi: Features) -> FuzzyLabeledGraph {
    let sig = i.signature();
    let mut vertex_labels = sig.concepts().to_vec();
    let nc = vertex_labels.len();
    if phi.nominals {
        vertex_labels.extend(sig.individuals().iter().cloned());
    }
    let mut labels = vec![FuzzySet::new(vertex_labels.len()); i.len()];
    for (c, set) in i.concepts().iter().enumerate() {
        for (x, d) in set.iter() {
            labels[x].set(c, d);
        }
    }
    if phi.nominals {
        for (a, &x) in i.individuals().iter().enumerate() {
            labels[x].set(nc + a, Degree::ONE);
        }
    }
    let roles = basic_roles(sig, phi);
    let edge_labels = roles.iter().map(|r| r.display(sig)).collect();
    let edges = roles
        .iter()
        .map(|r| if r.inverse { i.role(r.role).inverse() } else { i.role(r.role).clone() })
        .collect();
    FuzzyLabeledGraph { vertex_labels, edge_labels, labels, edges }
}

/// A bisimulation relation together with the work spent computing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BisimResult {
    pub z: FuzzyRelation,
    /// Refinement rounds (level engine) or sweeps (fixpoint engine).
    pub iterations: usize,
}

fn require_same_signature(i: &FuzzyInterpretation, j: &FuzzyInterpretation) -> Result<()> {
    if !i.signature().same_names(j.signature()) {
        return Err(Error::SignatureMismatch(
            "interpretations must share concept, role and individual names".into(),
        ));
    }
    Ok(())
}

/// The greatest fuzzy Phi-bisimulation between `i` and `j`.
pub fn greatest_bisimulation(
    i: &FuzzyInterpretation,
    j: &FuzzyInterpretation,
    phi: Features,
) -> Result<BisimResult> {
    require_same_signature(i, j)?;
    let g = to_fuzzy_graph(i, phi).disjoint_union(&to_fuzzy_graph(j, phi));
    let lp = levels::refine(&g);
    let n1 = i.len();
    let mut z = FuzzyRelation::new(n1, j.len());
    for x in 0..n1 {
        for y in 0..j.len() {
            z.set(x, y, lp.degree(x, n1 + y));
        }
    }
    Ok(BisimResult { z, iterations: lp.rounds })
}

/// The greatest fuzzy Phi-auto-bisimulation of `i`; a fuzzy equivalence.
pub fn greatest_auto_bisimulation(i: &FuzzyInterpretation, phi: Features) -> BisimResult {
    let lp = levels::refine(&to_fuzzy_graph(i, phi));
    let n = i.len();
    let mut z = FuzzyRelation::new(n, n);
    for x in 0..n {
        for y in 0..n {
            z.set(x, y, lp.degree(x, y));
        }
    }
    BisimResult { z, iterations: lp.rounds }
}

/// Level partitions of the greatest auto-bisimulation, without materializing it.
pub fn auto_bisimulation_levels(i: &FuzzyInterpretation, phi: Features) -> LevelPartitions {
    levels::refine(&to_fuzzy_graph(i, phi))
}

/// The compact fuzzy partition of the greatest fuzzy Phi-auto-bisimulation of `i`.
pub fn auto_bisimulation_partition(i: &FuzzyInterpretation, phi: Features) -> CompactFuzzyPartition {
    auto_bisimulation_levels(i, phi).to_partition()
}

/// min over individuals a of Z(a^I, a^J) for the greatest bisimulation Z.
pub fn bisimilarity_degree(i: &FuzzyInterpretation, j: &FuzzyInterpretation, phi: Features) -> Result<Degree> {
    require_same_signature(i, j)?;
    let g = to_fuzzy_graph(i, phi).disjoint_union(&to_fuzzy_graph(j, phi));
    let lp = levels::refine(&g);
    let n1 = i.len();
    Ok((0..i.signature().individuals().len())
        .map(|a| lp.degree(i.individual(a), n1 + j.individual(a)))
        .fold(Degree::ONE, Degree::min))
}

/// A violated instance of a bisimulation condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BisimViolation {
    /// Z(x,x') exceeds the biresiduum of concept `concept` at x and x'.
    Concept { x: usize, x2: usize, concept: usize },
    /// The edge R(x,y) has no matching edge out of x'.
    Forward { x: usize, x2: usize, role: BasicRole, y: usize },
    /// The edge R(x',y') has no matching edge out of x.
    Backward { x: usize, x2: usize, role: BasicRole, y2: usize },
    /// Z(x,x') > 0 although exactly one of x, x' is named `individual`.
    Nominal { x: usize, x2: usize, individual: usize },
}

impl BisimViolation {
    pub fn describe(&self, i: &FuzzyInterpretation, j: &FuzzyInterpretation) -> String {
        let sig = i.signature();
        let (a, b) = (|x: usize| i.element_name(x).to_string(), |x: usize| j.element_name(x).to_string());
        match *self {
            BisimViolation::Concept { x, x2, concept } => {
                format!("({}, {}): concept {} not matched", a(x), b(x2), sig.concepts()[concept])
            }
            BisimViolation::Forward { x, x2, role, y } => {
                format!("({}, {}): forward {} to {} not matched", a(x), b(x2), role.display(sig), a(y))
            }
            BisimViolation::Backward { x, x2, role, y2 } => {
                format!("({}, {}): backward {} to {} not matched", a(x), b(x2), role.display(sig), b(y2))
            }
            BisimViolation::Nominal { x, x2, individual } => {
                format!("({}, {}): nominal {} not matched", a(x), b(x2), sig.individuals()[individual])
            }
        }
    }
}

impl fmt::Display for BisimViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Every violated instance of the bisimulation conditions for `z`.
pub fn check_bisimulation(
    z: &FuzzyRelation,
    i: &FuzzyInterpretation,
    j: &FuzzyInterpretation,
    phi: Features,
) -> Vec<BisimViolation> {
    let mut out = Vec::new();
    let roles = basic_roles(i.signature(), phi);
    for (x, x2, zv) in z.iter() {
        for c in 0..i.signature().concepts().len() {
            if zv > biresiduum(i.concept(c).get(x), j.concept(c).get(x2)) {
                out.push(BisimViolation::Concept { x, x2, concept: c });
            }
        }
        for &r in &roles {
            for (y, e) in r.successors(i, x) {
                let need = zv.min(e);
                let ok = r.successors(j, x2).any(|(y2, e2)| z.get(y, y2).min(e2) >= need);
                if !ok {
                    out.push(BisimViolation::Forward { x, x2, role: r, y });
                }
            }
            for (y2, e2) in r.successors(j, x2) {
                let need = zv.min(e2);
                let ok = r.successors(i, x).any(|(y, e)| z.get(y, y2).min(e) >= need);
                if !ok {
                    out.push(BisimViolation::Backward { x, x2, role: r, y2 });
                }
            }
        }
        if phi.nominals {
            for a in 0..i.signature().individuals().len() {
                if (i.individual(a) == x) != (j.individual(a) == x2) {
                    out.push(BisimViolation::Nominal { x, x2, individual: a });
                }
            }
        }
    }
    out
}
