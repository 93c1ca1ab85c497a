//! Sparse fuzzy sets and fuzzy relations over finite index sets.

use std::collections::BTreeMap;

use crate::degree::Degree;
use crate::error::{Error, Result};

/// A fuzzy subset of `{0, .., len-1}`; only positive degrees are stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FuzzySet {
    len: usize,
    entries: BTreeMap<usize, Degree>,
}

impl FuzzySet {
    pub fn new(len: usize) -> Self {
        FuzzySet { len, entries: BTreeMap::new() }
    }

    pub fn constant(len: usize, d: Degree) -> Self {
        let mut s = FuzzySet::new(len);
        if !d.is_zero() {
            s.entries = (0..len).map(|i| (i, d)).collect();
        }
        s
    }

    pub fn from_dense(values: &[Degree]) -> Self {
        let mut s = FuzzySet::new(values.len());
        for (i, &v) in values.iter().enumerate() {
            s.set(i, v);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> Degree {
        self.entries.get(&i).copied().unwrap_or(Degree::ZERO)
    }

    /// Sets the degree of `i`; a zero degree removes the entry.
    pub fn set(&mut self, i: usize, d: Degree) {
        assert!(i < self.len, "element {i} outside carrier of size {}", self.len);
        if d.is_zero() {
            self.entries.remove(&i);
        } else {
            self.entries.insert(i, d);
        }
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    /// Positive entries in ascending element order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, Degree)> + '_ {
        self.entries.iter().map(|(&i, &d)| (i, d))
    }

    pub fn to_dense(&self) -> Vec<Degree> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn map(&self, f: impl Fn(Degree) -> Degree) -> FuzzySet {
        FuzzySet::from_dense(&self.to_dense().into_iter().map(f).collect::<Vec<_>>())
    }
}

/// A fuzzy relation between `{0..rows}` and `{0..cols}` with forward and inverse indexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzyRelation {
    rows: usize,
    cols: usize,
    fwd: Vec<BTreeMap<usize, Degree>>,
    inv: Vec<BTreeMap<usize, Degree>>,
}

impl FuzzyRelation {
    pub fn new(rows: usize, cols: usize) -> Self {
        FuzzyRelation {
            rows,
            cols,
            fwd: vec![BTreeMap::new(); rows],
            inv: vec![BTreeMap::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = FuzzyRelation::new(n, n);
        for i in 0..n {
            r.set(i, i, Degree::ONE);
        }
        r
    }

    pub fn from_entries<I: IntoIterator<Item = (usize, usize, Degree)>>(
        rows: usize,
        cols: usize,
        entries: I,
    ) -> Self {
        let mut r = FuzzyRelation::new(rows, cols);
        for (a, b, d) in entries {
            r.set(a, b, d);
        }
        r
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, a: usize, b: usize) -> Degree {
        self.fwd[a].get(&b).copied().unwrap_or(Degree::ZERO)
    }

    /// Sets the degree of `(a, b)`; a zero degree removes the entry.
    pub fn set(&mut self, a: usize, b: usize, d: Degree) {
        assert!(a < self.rows && b < self.cols, "pair ({a},{b}) outside {}x{}", self.rows, self.cols);
        if d.is_zero() {
            self.fwd[a].remove(&b);
            self.inv[b].remove(&a);
        } else {
            self.fwd[a].insert(b, d);
            self.inv[b].insert(a, d);
        }
    }

    /// Number of stored (positive) entries.
    pub fn len(&self) -> usize {
        self.fwd.iter().map(BTreeMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.fwd.iter().all(BTreeMap::is_empty)
    }

    /// Pairs `(b, d)` with `d = self(a, b) > 0`, ascending in `b`.
    pub fn successors(&self, a: usize) -> impl Iterator<Item = (usize, Degree)> + '_ {
        self.fwd[a].iter().map(|(&b, &d)| (b, d))
    }

    /// Pairs `(a, d)` with `d = self(a, b) > 0`, ascending in `a`.
    pub fn predecessors(&self, b: usize) -> impl Iterator<Item = (usize, Degree)> + '_ {
        self.inv[b].iter().map(|(&a, &d)| (a, d))
    }

    /// All positive entries ordered by (source, target).
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, Degree)> + '_ {
        self.fwd
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().map(move |(&b, &d)| (a, b, d)))
    }

    pub fn inverse(&self) -> FuzzyRelation {
        FuzzyRelation {
            rows: self.cols,
            cols: self.rows,
            fwd: self.inv.clone(),
            inv: self.fwd.clone(),
        }
    }

    /// Max-min composition `(self o other)(a,c) = sup_b min(self(a,b), other(b,c))`.
    pub fn compose(&self, other: &FuzzyRelation) -> Result<FuzzyRelation> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = FuzzyRelation::new(self.rows, other.cols);
        let mut acc: Vec<Degree> = vec![Degree::ZERO; other.cols];
        let mut touched = Vec::new();
        for a in 0..self.rows {
            for (b, d1) in self.successors(a) {
                for (c, d2) in other.successors(b) {
                    let v = d1.min(d2);
                    if acc[c].is_zero() {
                        touched.push(c);
                    }
                    if v > acc[c] {
                        acc[c] = v;
                    }
                }
            }
            for &c in &touched {
                out.set(a, c, acc[c]);
                acc[c] = Degree::ZERO;
            }
            touched.clear();
        }
        Ok(out)
    }

    /// Pointwise maximum.
    pub fn union(&self, other: &FuzzyRelation) -> Result<FuzzyRelation> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot unite {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (a, b, d) in other.iter() {
            if d > out.get(a, b) {
                out.set(a, b, d);
            }
        }
        Ok(out)
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.rows)
    }

    /// Reflexive-symmetric-transitive closure under max-min composition.
    pub fn rst_closure(&self) -> Result<FuzzyRelation> {
        let n = self.require_square()?;
        let mut m = vec![vec![Degree::ZERO; n]; n];
        for (a, b, d) in self.iter() {
            m[a][b] = m[a][b].max(d);
            m[b][a] = m[b][a].max(d);
        }
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Degree::ONE;
        }
        for k in 0..n {
            let mk = m[k].clone();
            for row in m.iter_mut() {
                let ik = row[k];
                if ik.is_zero() {
                    continue;
                }
                for (cell, &kj) in row.iter_mut().zip(&mk) {
                    let v = ik.min(kj);
                    if v > *cell {
                        *cell = v;
                    }
                }
            }
        }
        let mut out = FuzzyRelation::new(n, n);
        for (i, row) in m.iter().enumerate() {
            for (j, &d) in row.iter().enumerate() {
                out.set(i, j, d);
            }
        }
        Ok(out)
    }

    pub fn is_reflexive(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| self.get(i, i).is_one())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && self.iter().all(|(a, b, d)| self.get(b, a) == d)
    }

    /// min(self(a,b), self(b,c)) <= self(a,c) for all a, b, c.
    pub fn is_transitive(&self) -> bool {
        match self.compose(self) {
            Ok(sq) => self.rows == self.cols && sq.iter().all(|(a, c, d)| d <= self.get(a, c)),
            Err(_) => false,
        }
    }

    pub fn is_fuzzy_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }

    /// Pointwise order.
    pub fn leq(&self, other: &FuzzyRelation) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.iter().all(|(a, b, d)| d <= other.get(a, b))
    }
}
