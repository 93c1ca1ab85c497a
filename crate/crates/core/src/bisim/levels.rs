//! Level-wise crisp refinement.
//!
//! For each degree d occurring in the graph (ascending, ending at 1) the cut
//! {(x,x') : Z(x,x') >= d} of the greatest bisimulation Z is the coarsest
//! partition that refines the cut of the previous level, agrees on vertex labels
//! once values >= d are identified, and is stable for edges of degree >= d.

use std::collections::HashMap;
use std::hash::Hash;

use crate::degree::Degree;
use crate::partition::{CompactFuzzyPartition, Node};

use super::FuzzyLabeledGraph;

/// The cut partitions of the greatest auto-bisimulation of a graph.
#[derive(Clone, Debug)]
pub struct LevelPartitions {
    /// Ascending positive degrees; the last one is 1.
    pub levels: Vec<Degree>,
    /// `blocks[k][x]` is the block of `x` in the cut at `levels[k]`.
    pub blocks: Vec<Vec<u32>>,
    /// Refinement rounds over all levels.
    pub rounds: usize,
}

fn renumber<K: Hash + Eq>(keys: impl Iterator<Item = K>) -> (Vec<u32>, usize) {
    let mut ids: HashMap<K, u32> = HashMap::new();
    let out: Vec<u32> = keys
        .map(|k| {
            let next = ids.len() as u32;
            *ids.entry(k).or_insert(next)
        })
        .collect();
    (out, ids.len())
}

pub(crate) fn refine(g: &FuzzyLabeledGraph) -> LevelPartitions {
    let n = g.len();
    let mut levels: Vec<Degree> = g.degrees().into_iter().collect();
    if levels.last() != Some(&Degree::ONE) {
        levels.push(Degree::ONE);
    }
    // outgoing edges per vertex, strongest first
    let mut out: Vec<Vec<(Degree, u32, u32)>> = vec![Vec::new(); n];
    for (l, rel) in g.edges.iter().enumerate() {
        for (x, y, d) in rel.iter() {
            out[x].push((d, l as u32, y as u32));
        }
    }
    for v in &mut out {
        v.sort_unstable_by(|a, b| b.cmp(a));
    }

    let mut block = vec![0u32; n];
    let mut count;
    let mut all = Vec::with_capacity(levels.len());
    let mut rounds = 0;
    let mut sig: Vec<(u32, u32)> = Vec::new();
    for &d in &levels {
        let (b, c) = renumber((0..n).map(|x| {
            let capped: Vec<(usize, Degree)> =
                g.labels[x].iter().map(|(p, v)| (p, if v >= d { Degree::ONE } else { v })).collect();
            (block[x], capped)
        }));
        block = b;
        count = c;
        loop {
            rounds += 1;
            let (b, c) = renumber((0..n).map(|x| {
                sig.clear();
                sig.extend(out[x].iter().take_while(|e| e.0 >= d).map(|&(_, l, y)| (l, block[y as usize])));
                sig.sort_unstable();
                sig.dedup();
                (block[x], sig.clone())
            }));
            let stable = c == count;
            block = b;
            count = c;
            if stable {
                break;
            }
        }
        all.push(block.clone());
    }
    LevelPartitions { levels, blocks: all, rounds }
}

impl LevelPartitions {
    /// Z(x, y): the highest level whose cut puts x and y together, else 0.
    pub fn degree(&self, x: usize, y: usize) -> Degree {
        let mut best = Degree::ZERO;
        for (k, b) in self.blocks.iter().enumerate() {
            if b[x] != b[y] {
                break;
            }
            best = self.levels[k];
        }
        best
    }

    /// Builds the compact fuzzy partition from the nested cuts.
    pub fn to_partition(&self) -> CompactFuzzyPartition {
        let n = self.blocks.first().map_or(0, Vec::len);
        CompactFuzzyPartition::from_node(n, self.node((0..n).collect(), 0))
    }

    /// `set` is a single class of every cut below `level` (level 0 means no cut).
    fn node(&self, set: Vec<usize>, mut level: usize) -> Node {
        let k = self.levels.len();
        while level < k {
            let b = &self.blocks[level];
            let first = b[set[0]];
            if set.iter().any(|&x| b[x] != first) {
                break;
            }
            level += 1;
        }
        if level == k {
            return Node::Crisp(set);
        }
        let degree = if level == 0 { Degree::ZERO } else { self.levels[level - 1] };
        let b = &self.blocks[level];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut index: HashMap<u32, usize> = HashMap::new();
        for x in set {
            let g = *index.entry(b[x]).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[g].push(x);
        }
        Node::Fuzzy(degree, groups.into_iter().map(|g| self.node(g, level + 1)).collect())
    }
}
