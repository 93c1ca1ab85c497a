//! Greatest fuzzy bisimulations between interpretations under each feature set.

use fuzzymin::bisim::{auto_bisimulation_partition, bisimilarity_degree, check_bisimulation, greatest_bisimulation};
use fuzzymin::format::parse_interpretation;
use fuzzymin::minimize::{approximate_minimize, MinimizeParams};
use fuzzymin::Features;

fn main() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/in1.txt")).unwrap();
    let i = parse_interpretation(&text).unwrap();

    for phi in Features::ALL {
        let p = auto_bisimulation_partition(&i, phi);
        println!("{phi:>5}  {}", p.render(|x| i.element_name(x).to_string()));
    }

    let reduced = approximate_minimize(&i, MinimizeParams::default()).unwrap().reduced;
    let z = greatest_bisimulation(&i, &reduced, Features::NONE).unwrap();
    println!("\nZ between the input and its reduction ({} rounds):", z.iterations);
    for (x, y, v) in z.z.iter() {
        println!("  {} ~ {} : {v}", i.element_name(x), reduced.element_name(y));
    }
    assert!(check_bisimulation(&z.z, &i, &reduced, Features::NONE).is_empty());
    println!("bisimilarity {}", bisimilarity_degree(&i, &reduced, Features::NONE).unwrap());
    // nominals keep a and b apart, so the reduction is no longer bisimilar at 1
    println!("bisimilarity with nominals {}", bisimilarity_degree(&i, &reduced, Features::O).unwrap());
}
