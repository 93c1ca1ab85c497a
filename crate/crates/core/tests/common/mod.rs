#![allow(dead_code)]

use std::collections::HashMap;

use fuzzymin::format::parse_interpretation;
use fuzzymin::genbench::GeneratorParams;
use fuzzymin::{Degree, Features, FuzzyInterpretation, FuzzyRelation};
use rand::Rng;

pub fn d(s: &str) -> Degree {
    s.parse().unwrap()
}

pub fn data_path(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn load(name: &str) -> FuzzyInterpretation {
    parse_interpretation(&std::fs::read_to_string(data_path(name)).unwrap()).unwrap()
}

pub fn el(i: &FuzzyInterpretation, name: &str) -> usize {
    i.element_index(name).unwrap_or_else(|| panic!("no element {name}"))
}

/// Parses a printed partition such as `{{u,u'}_1, {v3}_1}_0` into the fuzzy
/// equivalence it denotes: each pair gets the degree of its deepest common block.
pub fn partition_relation(text: &str, i: &FuzzyInterpretation) -> FuzzyRelation {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let mut blocks: Vec<(Degree, Vec<usize>)> = Vec::new();
    fn block(
        c: &[char],
        pos: &mut usize,
        i: &FuzzyInterpretation,
        out: &mut Vec<(Degree, Vec<usize>)>,
    ) -> Vec<usize> {
        assert_eq!(c[*pos], '{');
        *pos += 1;
        let mut members = Vec::new();
        loop {
            if c[*pos] == '{' {
                members.extend(block(c, pos, i, out));
            } else {
                let start = *pos;
                while c[*pos] != ',' && c[*pos] != '}' {
                    *pos += 1;
                }
                let name: String = c[start..*pos].iter().collect();
                members.push(el(i, &name));
            }
            match c[*pos] {
                ',' => *pos += 1,
                '}' => break,
                other => panic!("unexpected {other}"),
            }
        }
        *pos += 1;
        assert_eq!(c[*pos], '_');
        *pos += 1;
        let start = *pos;
        while *pos < c.len() && (c[*pos].is_ascii_digit() || c[*pos] == '.') {
            *pos += 1;
        }
        let deg: String = c[start..*pos].iter().collect();
        out.push((deg.parse().unwrap(), members.clone()));
        members
    }
    let all = block(&chars, &mut pos, i, &mut blocks);
    assert_eq!(pos, chars.len(), "trailing input");
    let mut sorted = all.clone();
    sorted.sort();
    assert_eq!(sorted, (0..i.len()).collect::<Vec<_>>(), "partition must cover the domain once");
    let n = i.len();
    let mut r = FuzzyRelation::new(n, n);
    for (deg, members) in &blocks {
        for &x in members {
            for &y in members {
                if *deg > r.get(x, y) {
                    r.set(x, y, *deg);
                }
            }
        }
    }
    for x in 0..n {
        r.set(x, x, Degree::ONE);
    }
    r
}

/// Basic roles as dense matrices: role names, then inverses when enabled.
fn dense_roles(i: &FuzzyInterpretation, phi: Features) -> Vec<Vec<Vec<Degree>>> {
    let n = i.len();
    let mut out = Vec::new();
    for r in i.roles() {
        let mut m = vec![vec![Degree::ZERO; n]; n];
        for (x, y, v) in r.iter() {
            m[x][y] = v;
        }
        out.push(m);
    }
    if phi.inverse {
        let k = out.len();
        for idx in 0..k {
            let mut t = vec![vec![Degree::ZERO; n]; n];
            for x in 0..n {
                for y in 0..n {
                    t[y][x] = out[idx][x][y];
                }
            }
            out.push(t);
        }
    }
    out
}

fn bires(a: Degree, b: Degree) -> Degree {
    if a == b {
        Degree::ONE
    } else {
        a.min(b)
    }
}

/// Greatest bisimulation by simultaneous (Jacobi) iteration over dense matrices,
/// starting from the all-ones relation.
pub fn naive_bisim(i: &FuzzyInterpretation, j: &FuzzyInterpretation, phi: Features) -> Vec<Vec<Degree>> {
    let (n, m) = (i.len(), j.len());
    let (ri, rj) = (dense_roles(i, phi), dense_roles(j, phi));
    let mut z = vec![vec![Degree::ONE; m]; n];
    for (x, row) in z.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            for c in 0..i.concepts().len() {
                *cell = (*cell).min(bires(i.concept(c).get(x), j.concept(c).get(y)));
            }
            if phi.nominals {
                for a in 0..i.signature().individuals().len() {
                    if (i.individual(a) == x) != (j.individual(a) == y) {
                        *cell = Degree::ZERO;
                    }
                }
            }
        }
    }
    loop {
        let mut next = z.clone();
        for x in 0..n {
            for y in 0..m {
                let mut v = z[x][y];
                for (a, b) in ri.iter().zip(&rj) {
                    // forward: every a-edge of x is answered by some b-edge of y
                    for x2 in 0..n {
                        if a[x][x2].is_zero() {
                            continue;
                        }
                        let best = (0..m).map(|y2| b[y][y2].min(z[x2][y2])).max().unwrap_or(Degree::ZERO);
                        if best < a[x][x2] {
                            v = v.min(best);
                        }
                    }
                    for y2 in 0..m {
                        if b[y][y2].is_zero() {
                            continue;
                        }
                        let best = (0..n).map(|x2| a[x][x2].min(z[x2][y2])).max().unwrap_or(Degree::ZERO);
                        if best < b[y][y2] {
                            v = v.min(best);
                        }
                    }
                }
                next[x][y] = v;
            }
        }
        if next == z {
            return z;
        }
        z = next;
    }
}

/// Kleene star by enumerating walks of length up to n.
pub fn naive_star(r: &FuzzyRelation) -> Vec<Vec<Degree>> {
    let n = r.rows();
    let mut best = vec![vec![Degree::ZERO; n]; n];
    let mut walk = vec![vec![Degree::ZERO; n]; n];
    for x in 0..n {
        walk[x][x] = Degree::ONE;
        best[x][x] = Degree::ONE;
    }
    for _ in 0..n {
        let mut next = vec![vec![Degree::ZERO; n]; n];
        for (wrow, nrow) in walk.iter().zip(next.iter_mut()) {
            for (k, &wk) in wrow.iter().enumerate() {
                if wk.is_zero() {
                    continue;
                }
                for (y, v) in r.successors(k) {
                    let w = wk.min(v);
                    if w > nrow[y] {
                        nrow[y] = w;
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                best[x][y] = best[x][y].max(next[x][y]);
            }
        }
        walk = next;
    }
    best
}

/// Small feasible generator parameters.
pub fn small_params<R: Rng>(rng: &mut R, max_k: usize, max_n: usize, phi: Features) -> GeneratorParams {
    let k = rng.random_range(1..=max_k);
    let n = rng.random_range(1..=max_n);
    let acyclic = rng.random_bool(0.5);
    let s_cn = rng.random_range(1..=2);
    let s_rn = rng.random_range(1..=2);
    let pairs = if acyclic { n * (n - 1) / 2 } else { n * n };
    let m = rng.random_range(0..=(s_rn * pairs).min(2 * n));
    let o = rng.random_range(1..=n.min(2));
    let p = rng.random_range(0..=(s_cn * n).min(n));
    let facts = k * (m + p);
    let l = rng.random_range(1..=4usize).min(facts.max(1));
    GeneratorParams {
        k,
        n,
        m,
        o,
        p,
        l,
        s_cn,
        s_rn,
        acyclic,
        with_i: phi.inverse,
        with_o: phi.nominals,
        seed: rng.random(),
    }
}

/// Concept facts and role facts by name, for structural comparison.
pub fn facts(i: &FuzzyInterpretation) -> (Vec<String>, HashMap<String, String>, Vec<String>, Vec<String>) {
    let sig = i.signature();
    let inds = sig
        .individuals()
        .iter()
        .enumerate()
        .map(|(a, n)| (n.clone(), i.element_name(i.individual(a)).to_string()))
        .collect();
    let mut cs = Vec::new();
    for (c, name) in sig.concepts().iter().enumerate() {
        for (x, v) in i.concept(c).iter() {
            cs.push(format!("{name}({})={v}", i.element_name(x)));
        }
    }
    let mut rs = Vec::new();
    for (r, name) in sig.roles().iter().enumerate() {
        for (x, y, v) in i.role(r).iter() {
            rs.push(format!("{name}({},{})={v}", i.element_name(x), i.element_name(y)));
        }
    }
    cs.sort();
    rs.sort();
    let mut dom = i.domain().to_vec();
    dom.sort();
    (dom, inds, cs, rs)
}

pub fn strs(v: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    v.sort();
    v
}
