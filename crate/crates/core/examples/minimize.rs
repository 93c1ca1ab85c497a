//! Approximate minimization with a step-by-step trace.
//!
//! cargo run --example minimize -- [file] [gamma]

use fuzzymin::bisim::auto_bisimulation_partition;
use fuzzymin::format::{parse_interpretation, write_interpretation};
use fuzzymin::minimize::{minimize_with_partition, MinimizeParams};
use fuzzymin::{Degree, Features};

fn main() {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/in2.txt").into());
    let gamma: Degree = args.next().as_deref().unwrap_or("1").parse().expect("gamma in (0,1]");
    let i = parse_interpretation(&std::fs::read_to_string(&path).unwrap()).unwrap();

    let params = MinimizeParams::new(Features::NONE, gamma).unwrap();
    let mut p = auto_bisimulation_partition(&i, params.features);
    let res = minimize_with_partition(&i, &mut p, params).unwrap();
    print!("{}", res.trace.narrative(&i, &p));
    println!("\n{} -> {} elements, {} role instances\n", res.stats.n, res.stats.n1, res.stats.m1);
    print!("{}", write_interpretation(&res.reduced));

    println!();
    for phi in Features::ALL {
        for g in ["1", "0.5", "0.3"] {
            let params = MinimizeParams::new(phi, g.parse().unwrap()).unwrap();
            let r = fuzzymin::minimize::approximate_minimize(&i, params).unwrap();
            println!("{phi:>5} gamma {g:<3}  size {}", r.stats.n1);
        }
    }
}
