//! Compact fuzzy partitions: the block tree of a fuzzy equivalence.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::fuzzy::FuzzyRelation;

pub type BlockId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// A degree-1 block listing its elements in ascending order.
    Crisp(Vec<usize>),
    /// A block of degree < 1 with at least two subblocks.
    Fuzzy(Vec<BlockId>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub degree: Degree,
    pub kind: BlockKind,
    pub parent: Option<BlockId>,
    pub repr: Option<usize>,
    /// Smallest element of the block; used for canonical child order.
    pub first: usize,
    pub size: usize,
}

impl Block {
    pub fn is_crisp(&self) -> bool {
        matches!(self.kind, BlockKind::Crisp(_))
    }
}

/// Intermediate tree shape used by the constructors.
#[derive(Clone, Debug)]
pub(crate) enum Node {
    Crisp(Vec<usize>),
    Fuzzy(Degree, Vec<Node>),
}

impl Node {
    fn first(&self) -> usize {
        match self {
            Node::Crisp(e) => e.iter().copied().min().unwrap_or(usize::MAX),
            Node::Fuzzy(_, c) => c.iter().map(Node::first).min().unwrap_or(usize::MAX),
        }
    }
}

#[derive(Clone, Debug)]
struct Flattening {
    parent: Vec<usize>,
    size: Vec<usize>,
    /// Topmost flattened block of the class rooted at each element.
    top: Vec<BlockId>,
    flattened: Vec<bool>,
}

impl Flattening {
    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) -> usize {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return ra;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        big
    }
}

/// The compact fuzzy partition of a fuzzy equivalence on `{0..n}`.
#[derive(Clone, Debug)]
pub struct CompactFuzzyPartition {
    blocks: Vec<Block>,
    leaf_of: Vec<BlockId>,
    flat: Flattening,
}

impl CompactFuzzyPartition {
    pub(crate) fn from_node(n: usize, root: Node) -> Self {
        let mut blocks = Vec::new();
        let mut leaf_of = vec![usize::MAX; n];
        fn add(node: Node, parent: Option<BlockId>, blocks: &mut Vec<Block>, leaf_of: &mut [BlockId]) -> BlockId {
            let id = blocks.len();
            let first = node.first();
            match node {
                Node::Crisp(mut e) => {
                    e.sort_unstable();
                    for &x in &e {
                        leaf_of[x] = id;
                    }
                    blocks.push(Block {
                        degree: Degree::ONE,
                        size: e.len(),
                        kind: BlockKind::Crisp(e),
                        parent,
                        repr: None,
                        first,
                    });
                }
                Node::Fuzzy(d, mut children) => {
                    children.sort_by_key(Node::first);
                    blocks.push(Block {
                        degree: d,
                        kind: BlockKind::Fuzzy(Vec::new()),
                        parent,
                        repr: None,
                        first,
                        size: 0,
                    });
                    let mut ids = Vec::with_capacity(children.len());
                    let mut size = 0;
                    for c in children {
                        let cid = add(c, Some(id), blocks, leaf_of);
                        size += blocks[cid].size;
                        ids.push(cid);
                    }
                    blocks[id].kind = BlockKind::Fuzzy(ids);
                    blocks[id].size = size;
                }
            }
            id
        }
        add(root, None, &mut blocks, &mut leaf_of);
        let mut p = CompactFuzzyPartition {
            flat: Flattening {
                parent: (0..n).collect(),
                size: vec![1; n],
                top: leaf_of.clone(),
                flattened: vec![false; 0],
            },
            blocks,
            leaf_of,
        };
        p.reset_flattening();
        p
    }

    /// Number of elements in the carrier.
    pub fn len(&self) -> usize {
        self.leaf_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaf_of.is_empty()
    }

    pub fn root(&self) -> BlockId {
        0
    }

    pub fn block(&self, id: BlockId) -> &Block {
        &self.blocks[id]
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// The crisp leaf containing `x`.
    pub fn leaf(&self, x: usize) -> BlockId {
        self.leaf_of[x]
    }

    /// Block ids from the leaf of `x` up to the root.
    pub fn path(&self, x: usize) -> Vec<BlockId> {
        let mut out = vec![self.leaf_of[x]];
        while let Some(p) = self.blocks[*out.last().unwrap()].parent {
            out.push(p);
        }
        out
    }

    /// Elements of a block in ascending order.
    pub fn elements(&self, id: BlockId) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.blocks[id].size);
        let mut stack = vec![id];
        while let Some(b) = stack.pop() {
            match &self.blocks[b].kind {
                BlockKind::Crisp(e) => out.extend_from_slice(e),
                BlockKind::Fuzzy(c) => stack.extend(c.iter().copied()),
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether `anc` lies on the path from the leaf of `x` to the root.
    pub fn contains(&self, anc: BlockId, x: usize) -> bool {
        let mut b = Some(self.leaf_of[x]);
        while let Some(id) = b {
            if id == anc {
                return true;
            }
            b = self.blocks[id].parent;
        }
        false
    }

    /// Degree of the least common ancestor of the leaves of `x` and `y`.
    pub fn degree_between(&self, x: usize, y: usize) -> Degree {
        if self.leaf_of[x] == self.leaf_of[y] {
            return Degree::ONE;
        }
        let px: HashSet<BlockId> = self.path(x).into_iter().collect();
        let mut b = self.leaf_of[y];
        loop {
            if px.contains(&b) {
                return self.blocks[b].degree;
            }
            b = self.blocks[b].parent.expect("root is a common ancestor");
        }
    }

    /// The block on the path of `x` with the smallest degree `>= d`.
    pub fn find_block(&self, x: usize, d: Degree) -> BlockId {
        let mut b = self.leaf_of[x];
        while let Some(p) = self.blocks[b].parent {
            if self.blocks[p].degree < d {
                break;
            }
            b = p;
        }
        b
    }

    /// As `find_block`, flattening the located block into a single class so later
    /// lookups in it are near-constant. Calls must use non-increasing `d`.
    pub fn flatten_and_find(&mut self, x: usize, d: Degree) -> BlockId {
        let c = self.flat.find(x);
        let start = self.flat.top[c];
        let mut b = start;
        while let Some(p) = self.blocks[b].parent {
            if self.blocks[p].degree < d {
                break;
            }
            b = p;
        }
        if b != start {
            self.flatten(b);
        }
        b
    }

    fn flatten(&mut self, b: BlockId) {
        if self.flat.flattened[b] {
            return;
        }
        let mut order = Vec::new();
        let mut stack = vec![b];
        while let Some(id) = stack.pop() {
            if self.flat.flattened[id] {
                continue;
            }
            order.push(id);
            if let BlockKind::Fuzzy(c) = &self.blocks[id].kind {
                stack.extend(c.iter().copied());
            }
        }
        // children before parents
        for &id in order.iter().rev() {
            if let BlockKind::Fuzzy(children) = &self.blocks[id].kind {
                let anchor = self.blocks[id].first;
                for &c in children {
                    let e = self.blocks[c].first;
                    self.flat.union(anchor, e);
                }
                let r = self.flat.find(anchor);
                self.flat.top[r] = id;
            }
            self.flat.flattened[id] = true;
        }
    }

    /// Undo all flattening; crisp leaves stay flat.
    pub fn reset_flattening(&mut self) {
        let n = self.leaf_of.len();
        self.flat.parent = (0..n).collect();
        self.flat.size = vec![1; n];
        self.flat.top = self.leaf_of.clone();
        self.flat.flattened = self.blocks.iter().map(Block::is_crisp).collect();
        for b in &self.blocks {
            if let BlockKind::Crisp(e) = &b.kind {
                for &x in &e[1..] {
                    self.flat.union(e[0], x);
                }
            }
        }
        for x in 0..n {
            let r = self.flat.find(x);
            self.flat.top[r] = self.leaf_of[x];
        }
    }

    pub fn clear_reprs(&mut self) {
        for b in &mut self.blocks {
            b.repr = None;
        }
    }

    /// Sets `repr = v` on `b` and its ancestors up to the first one already set.
    pub fn set_repr_upward(&mut self, b: BlockId, v: usize) {
        let mut cur = Some(b);
        while let Some(id) = cur {
            if self.blocks[id].repr.is_some() {
                break;
            }
            self.blocks[id].repr = Some(v);
            cur = self.blocks[id].parent;
        }
    }

    /// Blocks breaking the representative invariants: a repr outside the block,
    /// or a repr set below an ancestor without one.
    pub fn repr_violations(&self) -> Vec<BlockId> {
        let mut out = Vec::new();
        for (id, b) in self.blocks.iter().enumerate() {
            if let Some(r) = b.repr {
                let parent_unset = b.parent.is_some_and(|p| self.blocks[p].repr.is_none());
                if !self.contains(id, r) || parent_unset {
                    out.push(id);
                }
            }
        }
        out
    }

    /// Tree-shape problems: degree order, leaf degrees, arity, element coverage.
    pub fn shape_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (id, b) in self.blocks.iter().enumerate() {
            match &b.kind {
                BlockKind::Crisp(e) => {
                    if !b.degree.is_one() || e.is_empty() {
                        out.push(format!("crisp block {id} malformed"));
                    }
                }
                BlockKind::Fuzzy(c) => {
                    if b.degree.is_one() || c.len() < 2 {
                        out.push(format!("fuzzy block {id} malformed"));
                    }
                    for &ch in c {
                        if self.blocks[ch].degree <= b.degree || self.blocks[ch].parent != Some(id) {
                            out.push(format!("child {ch} of block {id} out of order"));
                        }
                    }
                }
            }
        }
        let mut all = self.elements(self.root());
        all.dedup();
        if all != (0..self.len()).collect::<Vec<_>>() {
            out.push("root does not cover the carrier exactly".into());
        }
        out
    }

    /// Renders the tree as `{{a1}_1, {{a2}_1,{a3}_1}_0.4}_0`.
    pub fn render(&self, name: impl Fn(usize) -> String) -> String {
        let mut s = String::new();
        self.render_block(self.root(), &name, &mut s);
        s
    }

    fn render_block(&self, id: BlockId, name: &impl Fn(usize) -> String, s: &mut String) {
        let b = &self.blocks[id];
        s.push('{');
        match &b.kind {
            BlockKind::Crisp(e) => {
                for (i, &x) in e.iter().enumerate() {
                    if i > 0 {
                        s.push(',');
                    }
                    s.push_str(&name(x));
                }
            }
            BlockKind::Fuzzy(c) => {
                let sep = if c.iter().all(|&ch| self.blocks[ch].is_crisp()) { "," } else { ", " };
                for (i, &ch) in c.iter().enumerate() {
                    if i > 0 {
                        s.push_str(sep);
                    }
                    self.render_block(ch, name, s);
                }
            }
        }
        let _ = write!(s, "}}_{}", b.degree);
    }
}

/// Builds the compact fuzzy partition of a fuzzy equivalence.
pub fn build_compact_partition(phi: &FuzzyRelation) -> Result<CompactFuzzyPartition> {
    if !phi.is_fuzzy_equivalence() {
        return Err(Error::NotEquivalence("input must be reflexive, symmetric and min-transitive".into()));
    }
    let n = phi.rows();
    fn rec(set: Vec<usize>, phi: &FuzzyRelation, mark: &mut [bool]) -> Node {
        for &x in &set {
            mark[x] = true;
        }
        let mut d = Degree::ONE;
        for &x in &set {
            let inside = phi.successors(x).filter(|&(y, _)| mark[y]);
            let mut count = 0;
            for (_, v) in inside {
                count += 1;
                d = d.min(v);
            }
            if count < set.len() {
                d = Degree::ZERO;
            }
        }
        if d.is_one() {
            for &x in &set {
                mark[x] = false;
            }
            return Node::Crisp(set);
        }
        // classes of the crisp equivalence "phi > d"
        let mut class: Vec<Vec<usize>> = Vec::new();
        let mut assigned = std::collections::HashMap::new();
        for &x in &set {
            if assigned.contains_key(&x) {
                continue;
            }
            let members: Vec<usize> = phi.successors(x).filter(|&(y, v)| mark[y] && v > d).map(|(y, _)| y).collect();
            for &y in &members {
                assigned.insert(y, class.len());
            }
            class.push(members);
        }
        for &x in &set {
            mark[x] = false;
        }
        Node::Fuzzy(d, class.into_iter().map(|c| rec(c, phi, mark)).collect())
    }
    let mut mark = vec![false; n];
    Ok(CompactFuzzyPartition::from_node(n, rec((0..n).collect(), phi, &mut mark)))
}

/// The fuzzy equivalence encoded by a partition (least-common-ancestor degrees).
pub fn partition_to_equivalence(p: &CompactFuzzyPartition) -> FuzzyRelation {
    let n = p.len();
    let mut out = FuzzyRelation::new(n, n);
    for b in p.blocks() {
        match &b.kind {
            BlockKind::Crisp(e) => {
                for &x in e {
                    for &y in e {
                        out.set(x, y, Degree::ONE);
                    }
                }
            }
            BlockKind::Fuzzy(c) => {
                let parts: Vec<Vec<usize>> = c.iter().map(|&ch| p.elements(ch)).collect();
                for (i, pi) in parts.iter().enumerate() {
                    for pj in &parts[i + 1..] {
                        for &x in pi {
                            for &y in pj {
                                out.set(x, y, b.degree);
                                out.set(y, x, b.degree);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Degree {
        s.parse().unwrap()
    }

    fn seven() -> FuzzyRelation {
        let mut r = FuzzyRelation::new(7, 7);
        let mut put = |a: usize, b: usize, v: &str| {
            r.set(a - 1, b - 1, d(v));
            r.set(b - 1, a - 1, d(v));
        };
        put(2, 3, "0.4");
        for x in [2, 3] {
            for y in 4..=7 {
                put(x, y, "0.2");
            }
        }
        put(4, 5, "1");
        put(4, 6, "0.8");
        put(5, 6, "0.8");
        for y in 4..=6 {
            put(7, y, "0.5");
        }
        for x in 1..=7 {
            put(x, x, "1");
        }
        r
    }

    fn names(x: usize) -> String {
        format!("a{}", x + 1)
    }

    #[test]
    fn seven_element_relation_renders() {
        let p = build_compact_partition(&seven()).unwrap();
        assert_eq!(
            p.render(names),
            "{{a1}_1, {{{a2}_1,{a3}_1}_0.4, {{{a4,a5}_1,{a6}_1}_0.8, {a7}_1}_0.5}_0.2}_0"
        );
        assert!(p.shape_violations().is_empty());
        assert_eq!(partition_to_equivalence(&p), seven());
    }

    #[test]
    fn lowered_entry_is_not_equivalence() {
        let mut phi = seven();
        phi.set(1, 2, d("0.1"));
        phi.set(2, 1, d("0.1"));
        assert!(!phi.is_fuzzy_equivalence());
        assert!(build_compact_partition(&phi).is_err());
    }

    #[test]
    fn all_ones_is_one_crisp_block() {
        let mut r = FuzzyRelation::new(3, 3);
        for a in 0..3 {
            for b in 0..3 {
                r.set(a, b, Degree::ONE);
            }
        }
        let p = build_compact_partition(&r).unwrap();
        assert_eq!(p.blocks().len(), 1);
        assert_eq!(p.render(|x| ["x", "y", "z"][x].to_string()), "{x,y,z}_1");
        assert_eq!(partition_to_equivalence(&p), r);
    }

    #[test]
    fn find_block_levels() {
        let p = build_compact_partition(&seven()).unwrap();
        assert_eq!(p.find_block(3, Degree::ONE), p.leaf(3));
        let b = p.find_block(3, d("0.7"));
        assert_eq!(p.block(b).degree, d("0.8"));
        let b = p.find_block(3, d("0.3"));
        assert_eq!(p.block(b).degree, d("0.5"));
        assert_eq!(p.find_block(0, d("0.1")), p.leaf(0));
    }

    #[test]
    fn set_repr_upward_stops_at_set_ancestor() {
        let mut p = build_compact_partition(&seven()).unwrap();
        let leaf = p.leaf(3);
        p.set_repr_upward(leaf, 3);
        assert!(p.path(3).iter().all(|&b| p.block(b).repr == Some(3)));
        let other = p.leaf(6);
        p.set_repr_upward(other, 6);
        assert_eq!(p.block(other).repr, Some(6));
        assert_eq!(p.block(p.block(other).parent.unwrap()).repr, Some(3));
        assert!(p.repr_violations().is_empty());
    }

    #[test]
    fn flattening_matches_tree_walk() {
        let mut p = build_compact_partition(&seven()).unwrap();
        let q = p.clone();
        for (x, v) in [(3, "1"), (3, "0.8"), (5, "0.8"), (6, "0.5"), (4, "0.5"), (1, "0.3"), (0, "0.2")] {
            assert_eq!(p.flatten_and_find(x, d(v)), q.find_block(x, d(v)));
            assert_eq!(p.flatten_and_find(x, d(v)), q.find_block(x, d(v)));
        }
    }
}
