//! Random instances made of disconnected components, and a benchmark harness.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::minimize::{approximate_minimize, MinimizeParams};
use crate::model::{Features, FuzzyInterpretation, InterpretationBuilder, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorParams {
    /// Number of components.
    pub k: usize,
    /// Elements per component.
    pub n: usize,
    /// Role instances per component.
    pub m: usize,
    /// Named individuals per component.
    pub o: usize,
    /// Concept instances per component.
    pub p: usize,
    /// Distinct nonzero degrees.
    pub l: usize,
    pub s_cn: usize,
    pub s_rn: usize,
    pub acyclic: bool,
    pub with_i: bool,
    pub with_o: bool,
    pub seed: u64,
}

impl GeneratorParams {
    pub fn features(&self) -> Features {
        Features::new(self.with_i, self.with_o)
    }

    /// The eleven structural values, space separated.
    pub fn spec_string(&self) -> String {
        format!(
            "{} {} {} {} {} {} {} {} {} {} {}",
            self.k,
            self.n,
            self.m,
            self.o,
            self.p,
            self.l,
            self.s_cn,
            self.s_rn,
            u8::from(self.acyclic),
            u8::from(self.with_i),
            u8::from(self.with_o)
        )
    }

    /// Builds parameters from `k n' m' o p l sCN sRN acyclic withI withO`.
    pub fn from_values(v: &[u64], seed: u64) -> Result<Self> {
        if v.len() != 11 {
            return Err(Error::Infeasible(format!("expected 11 values, found {}", v.len())));
        }
        let flag = |x: u64, what: &str| match x {
            0 => Ok(false),
            1 => Ok(true),
            _ => Err(Error::Infeasible(format!("{what} must be 0 or 1"))),
        };
        let u = |x: u64| x as usize;
        Ok(GeneratorParams {
            k: u(v[0]),
            n: u(v[1]),
            m: u(v[2]),
            o: u(v[3]),
            p: u(v[4]),
            l: u(v[5]),
            s_cn: u(v[6]),
            s_rn: u(v[7]),
            acyclic: flag(v[8], "acyclic")?,
            with_i: flag(v[9], "withI")?,
            with_o: flag(v[10], "withO")?,
            seed,
        })
    }

    fn role_slots(&self) -> usize {
        let pairs = if self.acyclic { self.n * self.n.saturating_sub(1) / 2 } else { self.n * self.n };
        self.s_rn * pairs
    }

    pub fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Infeasible(m));
        if self.k == 0 || self.n == 0 {
            return bad("k and n' must be positive".into());
        }
        if self.o == 0 {
            return bad("o must be positive (the set of individual names is non-empty)".into());
        }
        if self.o > self.n {
            return bad(format!("o = {} exceeds n' = {}", self.o, self.n));
        }
        if self.l == 0 {
            return bad("l must be positive".into());
        }
        if self.m > self.role_slots() {
            return bad(format!(
                "m' = {} exceeds the {} available role slots ({} role names, {})",
                self.m,
                self.role_slots(),
                self.s_rn,
                if self.acyclic { "acyclic" } else { "cyclic" }
            ));
        }
        if self.p > self.s_cn * self.n {
            return bad(format!("p = {} exceeds sCN * n' = {}", self.p, self.s_cn * self.n));
        }
        let facts = self.k * (self.m + self.p);
        if facts > 0 && facts < self.l {
            return bad(format!("l = {} exceeds the {facts} facts available to carry degrees", self.l));
        }
        Ok(())
    }
}

impl FromStr for GeneratorParams {
    type Err = Error;

    /// `k n' m' o p l sCN sRN acyclic withI withO [seed]`
    fn from_str(s: &str) -> Result<Self> {
        let v: Vec<u64> = s
            .split_whitespace()
            .map(|t| t.parse::<u64>().map_err(|_| Error::Infeasible(format!("`{t}` is not a non-negative integer"))))
            .collect::<Result<_>>()?;
        match v.len() {
            11 => GeneratorParams::from_values(&v, 0),
            12 => GeneratorParams::from_values(&v[..11], v[11]),
            n => Err(Error::Infeasible(format!("expected 11 or 12 values, found {n}"))),
        }
    }
}

/// The degree palette i/(l+1), i = 1..l.
pub fn palette(l: usize) -> Vec<Degree> {
    (1..=l).map(|i| Degree::from_ratio(i as u64, l as u64 + 1).expect("below one")).collect()
}

/// Decodes the index of a pair (i, j) with i < j among `n` elements.
fn upper_pair(mut idx: usize, n: usize) -> (usize, usize) {
    let mut i = 0;
    loop {
        let row = n - 1 - i;
        if idx < row {
            return (i, i + 1 + idx);
        }
        idx -= row;
        i += 1;
    }
}

pub fn generate(params: &GeneratorParams) -> Result<FuzzyInterpretation> {
    params.check()?;
    let GeneratorParams { k, n, m, o, p, l, s_cn, s_rn, .. } = *params;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let concepts: Vec<String> = (1..=s_cn).map(|i| format!("C{i}")).collect();
    let roles: Vec<String> = (1..=s_rn).map(|i| format!("r{i}")).collect();
    let individuals: Vec<String> = (0..k).flat_map(|c| (0..o).map(move |i| format!("a{c}_{i}"))).collect();
    let sig = Signature::new(concepts.clone(), roles.clone(), individuals, params.features())?;
    let elem = |c: usize, j: usize| format!("x{c}_{j}");

    // facts first, degrees afterwards so every palette value is used
    let mut concept_facts = Vec::with_capacity(k * p);
    let mut role_facts = Vec::with_capacity(k * m);
    let slots = params.role_slots();
    let pairs = slots / s_rn.max(1);
    for c in 0..k {
        for idx in sample(&mut rng, s_cn * n, p).into_iter() {
            concept_facts.push((idx / n, c, idx % n));
        }
        for idx in sample(&mut rng, slots, m).into_iter() {
            let (r, pair) = (idx / pairs, idx % pairs);
            let (x, y) = if params.acyclic { upper_pair(pair, n) } else { (pair / n, pair % n) };
            role_facts.push((r, c, x, y));
        }
    }
    let pal = palette(l);
    let total = concept_facts.len() + role_facts.len();
    let mut degrees: Vec<Degree> = (0..total)
        .map(|i| if i < l { pal[i] } else { pal[rand::Rng::random_range(&mut rng, 0..l)] })
        .collect();
    rand::seq::SliceRandom::shuffle(degrees.as_mut_slice(), &mut rng);

    let mut b = InterpretationBuilder::new(sig);
    for c in 0..k {
        for j in 0..n {
            b.element(elem(c, j));
        }
        for i in 0..o {
            b.individual(format!("a{c}_{i}"), elem(c, i));
        }
    }
    let mut ds = degrees.into_iter();
    for (ci, c, x) in concept_facts {
        b.concept(concepts[ci].clone(), elem(c, x), ds.next().expect("one per fact"));
    }
    for (r, c, x, y) in role_facts {
        b.role(roles[r].clone(), elem(c, x), elem(c, y), ds.next().expect("one per fact"));
    }
    b.build()
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub params: GeneratorParams,
    pub n1: f64,
    pub m1: f64,
    pub reduction: f64,
    pub seconds: f64,
}

/// Seed of repetition `rep` for a row seeded with `seed`.
pub fn derived_seed(seed: u64, rep: usize) -> u64 {
    seed.wrapping_add((rep as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Generates `repeats` instances per row, minimizes each and averages sizes and time.
pub fn run_bench(rows: &[GeneratorParams], gamma: Degree, repeats: usize) -> Result<Vec<BenchRow>> {
    let repeats = repeats.max(1);
    let mut out = Vec::with_capacity(rows.len());
    for params in rows {
        let (mut n1, mut m1, mut secs) = (0.0, 0.0, 0.0);
        for rep in 0..repeats {
            let inst = generate(&GeneratorParams { seed: derived_seed(params.seed, rep), ..*params })?;
            let mp = MinimizeParams::new(params.features(), gamma)?;
            let t = Instant::now();
            let res = approximate_minimize(&inst, mp)?;
            secs += t.elapsed().as_secs_f64();
            n1 += res.stats.n1 as f64;
            m1 += res.stats.m1 as f64;
        }
        let r = repeats as f64;
        let (n1, m1) = (n1 / r, m1 / r);
        out.push(BenchRow {
            params: *params,
            n1,
            m1,
            reduction: 1.0 - n1 / (params.k * params.n) as f64,
            seconds: secs / r,
        });
    }
    Ok(out)
}

/// Aligned plain-text table.
pub fn format_table(rows: &[BenchRow]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:>3}  {:<32}  {:>10}  {:>10}  {:>6}  {:>9}",
        "#", "k n' m' o p l sCN sRN acyc I O", "n1", "m1", "Red.", "seconds"
    );
    for (i, r) in rows.iter().enumerate() {
        let _ = writeln!(
            s,
            "{:>3}  {:<32}  {:>10.0}  {:>10.0}  {:>5.0}%  {:>9.3}",
            i + 1,
            r.params.spec_string(),
            r.n1,
            r.m1,
            r.reduction * 100.0,
            r.seconds
        );
    }
    s
}

/// CSV with header `params,n1,m1,reduction,seconds`.
pub fn format_csv(rows: &[BenchRow]) -> String {
    let mut s = String::from("params,n1,m1,reduction,seconds\n");
    for r in rows {
        let _ = writeln!(s, "{},{},{},{:.4},{:.6}", r.params.spec_string(), r.n1, r.m1, r.reduction, r.seconds);
    }
    s
}
