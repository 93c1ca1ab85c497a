//! Approximate minimization: keep one representative per block of the greatest
//! auto-bisimulation at the finest level each element is reached at.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt::Write as _;

use crate::bisim::{self, basic_roles, BasicRole};
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyRelation, FuzzySet};
use crate::model::{Features, FuzzyInterpretation};
use crate::partition::{BlockId, CompactFuzzyPartition};

/// How blocks are located in the partition tree.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BlockLookup {
    /// Union-find flattening of located blocks.
    #[default]
    Flattening,
    /// Plain walk up the tree; for differential testing.
    TreeWalk,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinimizeParams {
    pub features: Features,
    pub gamma: Degree,
    pub lookup: BlockLookup,
}

impl MinimizeParams {
    pub fn new(features: Features, gamma: Degree) -> Result<Self> {
        if gamma.is_zero() {
            return Err(Error::InvalidGamma(gamma.to_string()));
        }
        Ok(MinimizeParams { features, gamma, lookup: BlockLookup::Flattening })
    }

    pub fn with_lookup(mut self, lookup: BlockLookup) -> Self {
        self.lookup = lookup;
        self
    }
}

impl Default for MinimizeParams {
    fn default() -> Self {
        MinimizeParams { features: Features::NONE, gamma: Degree::ONE, lookup: BlockLookup::Flattening }
    }
}

/// A queued basic-role instance R(x, y) with priority R(x, y).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RoleTriple {
    pub x: usize,
    pub role: BasicRole,
    pub y: usize,
    pub priority: Degree,
    pub seq: u64,
}

impl Ord for RoleTriple {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.priority, Reverse(self.seq)).cmp(&(other.priority, Reverse(other.seq)))
    }
}

impl PartialOrd for RoleTriple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element added to the reduced domain; `pred`/`role` are empty for seeds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AddedRecord {
    pub element: usize,
    pub degree: Degree,
    pub pred: Option<usize>,
    pub role: Option<BasicRole>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    Level(Degree),
    Seed { individual: usize, element: usize, block: BlockId, repr: usize, added: bool },
    Extract(RoleTriple),
    Locate { block: BlockId, degree: Degree, repr: usize, added: bool },
    Assign { role: BasicRole, x: usize, repr: usize, degree: Degree },
}

/// What a run did, in original element indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MinimizationTrace {
    pub added: Vec<AddedRecord>,
    pub d: Vec<Degree>,
    pub events: Vec<TraceEvent>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinimizeStats {
    pub n: usize,
    pub n1: usize,
    pub m1: usize,
    pub dropped: usize,
    pub reduction: f64,
}

#[derive(Clone, Debug)]
pub struct MinimizeResult {
    pub reduced: FuzzyInterpretation,
    pub trace: MinimizationTrace,
    pub stats: MinimizeStats,
}

/// {gamma} together with the role degrees below gamma, descending.
pub fn compute_d(i: &FuzzyInterpretation, gamma: Degree) -> Vec<Degree> {
    let mut s: BTreeSet<Degree> = i.role_degrees().into_iter().filter(|&d| d < gamma).collect();
    s.insert(gamma);
    s.into_iter().rev().collect()
}

/// Minimizes `i` so that concept assertions at individuals are preserved up to gamma.
pub fn approximate_minimize(i: &FuzzyInterpretation, params: MinimizeParams) -> Result<MinimizeResult> {
    check_input(i, params)?;
    let mut p = bisim::auto_bisimulation_partition(i, params.features);
    run(i, &mut p, params)
}

/// As `approximate_minimize`, given the compact partition of the greatest auto-bisimulation.
pub fn minimize_with_partition(
    i: &FuzzyInterpretation,
    p: &mut CompactFuzzyPartition,
    params: MinimizeParams,
) -> Result<MinimizeResult> {
    check_input(i, params)?;
    if p.len() != i.len() {
        return Err(Error::DimensionMismatch("partition carrier differs from the domain".into()));
    }
    run(i, p, params)
}

fn check_input(i: &FuzzyInterpretation, params: MinimizeParams) -> Result<()> {
    if params.gamma.is_zero() {
        return Err(Error::InvalidGamma(params.gamma.to_string()));
    }
    let v = i.validate();
    if !v.is_empty() {
        return Err(Error::InvalidInterpretation(v));
    }
    Ok(())
}

struct Run<'a> {
    i: &'a FuzzyInterpretation,
    roles: Vec<BasicRole>,
    queue: BinaryHeap<RoleTriple>,
    seq: u64,
    kept: Vec<bool>,
    trace: MinimizationTrace,
}

impl Run<'_> {
    fn find(&self, p: &mut CompactFuzzyPartition, x: usize, d: Degree, lookup: BlockLookup) -> BlockId {
        match lookup {
            BlockLookup::Flattening => p.flatten_and_find(x, d),
            BlockLookup::TreeWalk => p.find_block(x, d),
        }
    }

    fn add(&mut self, x: usize, rec: AddedRecord) {
        self.kept[x] = true;
        self.trace.added.push(rec);
        for &r in &self.roles {
            for (y, d) in r.successors(self.i, x) {
                self.queue.push(RoleTriple { x, role: r, y, priority: d, seq: self.seq });
                self.seq += 1;
            }
        }
    }
}

fn run(i: &FuzzyInterpretation, p: &mut CompactFuzzyPartition, params: MinimizeParams) -> Result<MinimizeResult> {
    let sig = i.signature();
    let n = i.len();
    let gamma = params.gamma;
    p.clear_reprs();
    p.reset_flattening();
    let mut st = Run {
        i,
        roles: basic_roles(sig, params.features),
        queue: BinaryHeap::new(),
        seq: 0,
        kept: vec![false; n],
        trace: MinimizationTrace::default(),
    };
    let mut individuals = Vec::with_capacity(sig.individuals().len());
    for a in 0..sig.individuals().len() {
        let x = i.individual(a);
        let b = st.find(p, x, gamma, params.lookup);
        let added = p.block(b).repr.is_none();
        if added {
            p.set_repr_upward(b, x);
            st.add(x, AddedRecord { element: x, degree: gamma, pred: None, role: None });
        }
        let repr = p.block(b).repr.expect("repr set");
        individuals.push(repr);
        st.trace.events.push(TraceEvent::Seed { individual: a, element: x, block: b, repr, added });
    }

    let mut roles_out = vec![FuzzyRelation::new(n, n); sig.roles().len()];
    let d_list = compute_d(i, gamma);
    for &d in &d_list {
        st.trace.events.push(TraceEvent::Level(d));
        while st.queue.peek().is_some_and(|t| t.priority >= d) {
            let t = st.queue.pop().expect("peeked");
            st.trace.events.push(TraceEvent::Extract(t));
            let b = st.find(p, t.y, d, params.lookup);
            let added = p.block(b).repr.is_none();
            if added {
                p.set_repr_upward(b, t.y);
                st.add(t.y, AddedRecord { element: t.y, degree: d, pred: Some(t.x), role: Some(t.role) });
            }
            let repr = p.block(b).repr.expect("repr set");
            st.trace.events.push(TraceEvent::Locate { block: b, degree: p.block(b).degree, repr, added });
            let rel = &mut roles_out[t.role.role];
            let (src, tgt) = if t.role.inverse { (repr, t.x) } else { (t.x, repr) };
            if rel.get(src, tgt).is_zero() {
                rel.set(src, tgt, d);
                st.trace.events.push(TraceEvent::Assign { role: t.role, x: t.x, repr, degree: d });
            }
        }
    }
    st.trace.d = d_list;

    // reduced interpretation in original domain order
    let mut new_index = vec![usize::MAX; n];
    let mut domain = Vec::new();
    for x in (0..n).filter(|&x| st.kept[x]) {
        new_index[x] = domain.len();
        domain.push(i.element_name(x).to_string());
    }
    let n1 = domain.len();
    let concepts = i
        .concepts()
        .iter()
        .map(|c| {
            let mut s = FuzzySet::new(n1);
            for (x, v) in c.iter().filter(|&(x, _)| st.kept[x]) {
                s.set(new_index[x], v);
            }
            s
        })
        .collect();
    let roles: Vec<FuzzyRelation> = roles_out
        .iter()
        .map(|r| FuzzyRelation::from_entries(n1, n1, r.iter().map(|(x, y, d)| (new_index[x], new_index[y], d))))
        .collect();
    let individuals = individuals.into_iter().map(|x| new_index[x]).collect();
    let reduced = FuzzyInterpretation::from_parts(sig.clone(), domain, individuals, concepts, roles)
        .map_err(|e| Error::Invariant(format!("reduced interpretation is malformed: {e}")))?;
    let violations = p.repr_violations();
    if !violations.is_empty() {
        return Err(Error::Invariant(format!("representative invariant broken at blocks {violations:?}")));
    }
    let m1 = reduced.role_count();
    let stats = MinimizeStats {
        n,
        n1,
        m1,
        dropped: n - n1,
        reduction: 1.0 - n1 as f64 / n as f64,
    };
    Ok(MinimizeResult { reduced, trace: st.trace, stats })
}

/// The bisimulation Z(v, y) = min(d_y, Z0(v, y)) between `i` and the reduced
/// interpretation, where Z0 is the greatest auto-bisimulation of `i`.
pub fn construct_witness(
    i: &FuzzyInterpretation,
    result: &MinimizeResult,
    params: MinimizeParams,
) -> Result<FuzzyRelation> {
    let reduced = &result.reduced;
    let mut degree_of = vec![None; reduced.len()];
    for rec in &result.trace.added {
        let name = i
            .domain()
            .get(rec.element)
            .ok_or_else(|| Error::TraceMismatch(format!("element #{} outside the domain", rec.element)))?;
        let y = reduced
            .element_index(name)
            .ok_or_else(|| Error::TraceMismatch(format!("added element `{name}` missing from the result")))?;
        if degree_of[y].replace(rec.degree).is_some() {
            return Err(Error::TraceMismatch(format!("element `{name}` added twice")));
        }
    }
    let mut origin = Vec::with_capacity(reduced.len());
    for (y, d) in degree_of.iter().enumerate() {
        let name = reduced.element_name(y);
        if d.is_none() {
            return Err(Error::TraceMismatch(format!("element `{name}` has no trace record")));
        }
        origin.push(i.element_index(name).ok_or_else(|| Error::TraceMismatch(format!("`{name}` not in input")))?);
    }
    let lp = bisim::auto_bisimulation_levels(i, params.features);
    let mut z = FuzzyRelation::new(i.len(), reduced.len());
    for v in 0..i.len() {
        for (y, &o) in origin.iter().enumerate() {
            z.set(v, y, degree_of[y].expect("checked").min(lp.degree(v, o)));
        }
    }
    Ok(z)
}

impl MinimizationTrace {
    /// A step-by-step text report of the run.
    pub fn narrative(&self, i: &FuzzyInterpretation, p: &CompactFuzzyPartition) -> String {
        let sig = i.signature();
        let name = |x: usize| i.element_name(x).to_string();
        let mut s = String::new();
        let ds: Vec<String> = self.d.iter().map(Degree::to_string).collect();
        let _ = writeln!(s, "D = [{}]", ds.join(", "));
        for e in &self.events {
            let _ = match e {
                TraceEvent::Level(d) => writeln!(s, "level d = {d}"),
                TraceEvent::Seed { individual, element, block, repr, added } => {
                    let a = &sig.individuals()[*individual];
                    if *added {
                        writeln!(s, "seed {a}: add {} (block {block}, degree {})", name(*element), p.block(*block).degree)
                    } else {
                        writeln!(s, "seed {a}: {} maps to existing repr {}", name(*element), name(*repr))
                    }
                }
                TraceEvent::Extract(t) => writeln!(
                    s,
                    "  extract <{}, {}, {}> priority {}",
                    name(t.x),
                    t.role.display(sig),
                    name(t.y),
                    t.priority
                ),
                TraceEvent::Locate { block, degree, repr, added } => {
                    if *added {
                        writeln!(s, "    block {block} (degree {degree}) has no repr: add {}", name(*repr))
                    } else {
                        writeln!(s, "    block {block} (degree {degree}) repr {}", name(*repr))
                    }
                }
                TraceEvent::Assign { role, x, repr, degree } => {
                    if role.inverse {
                        writeln!(s, "    set {}({}, {}) = {degree}", sig.roles()[role.role], name(*repr), name(*x))
                    } else {
                        writeln!(s, "    set {}({}, {}) = {degree}", sig.roles()[role.role], name(*x), name(*repr))
                    }
                }
            };
        }
        s
    }
}
