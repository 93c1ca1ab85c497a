//! Goedel operations, closures and the compact partition of a fuzzy equivalence.

use fuzzymin::partition::build_compact_partition;
use fuzzymin::{biresiduum, residuum, tnorm, Degree, FuzzyRelation};

fn d(s: &str) -> Degree {
    s.parse().unwrap()
}

fn main() {
    println!("0.4 (x) 0.7 = {}", tnorm(d("0.4"), d("0.7")));
    println!("0.9 => 0.4 = {}", residuum(d("0.9"), d("0.4")));
    println!("0.7 <=> 0.8 = {}", biresiduum(d("0.7"), d("0.8")));

    // a1..a7 with a few direct similarities; the closure fills in the rest
    let mut r = FuzzyRelation::new(7, 7);
    for (a, b, v) in [(1, 2, "0.4"), (1, 3, "0.2"), (3, 4, "1"), (3, 5, "0.8"), (4, 6, "0.5")] {
        r.set(a, b, d(v));
    }
    let e = r.rst_closure().unwrap();
    assert!(e.is_fuzzy_equivalence());

    let p = build_compact_partition(&e).unwrap();
    let name = |x: usize| format!("a{}", x + 1);
    println!("{}", p.render(name));

    for level in ["1", "0.8", "0.5", "0.2"] {
        let b = p.find_block(4, d(level));
        let members: Vec<String> = p.elements(b).into_iter().map(name).collect();
        println!("find_block(a5, {level}) = {{{}}} at degree {}", members.join(","), p.block(b).degree);
    }
}
