//! Certifying a reduction: the witness bisimulation and sampled concept checks.

use fuzzymin::bisim::check_bisimulation;
use fuzzymin::concepts::preservation_report;
use fuzzymin::format::parse_interpretation;
use fuzzymin::minimize::{approximate_minimize, construct_witness, MinimizeParams};
use fuzzymin::Features;

fn main() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/in3.txt")).unwrap();
    let i = parse_interpretation(&text).unwrap();

    for (phi, g) in [(Features::NONE, "0.8"), (Features::O, "0.8"), (Features::NONE, "0.9")] {
        let params = MinimizeParams::new(phi, g.parse().unwrap()).unwrap();
        let res = approximate_minimize(&i, params).unwrap();
        let z = construct_witness(&i, &res, params).unwrap();
        let violations = check_bisimulation(&z, &i, &res.reduced, phi);
        let rep = preservation_report(&i, &res.reduced, phi, params.gamma, 300, 4, 1).unwrap();
        println!(
            "{phi} gamma {g}: {} of {} kept, witness violations {}, min biresiduum over {} concepts {}",
            res.stats.n1,
            res.stats.n,
            violations.len(),
            rep.samples,
            rep.min_biresiduum
        );
        for a in 0..i.signature().individuals().len() {
            let (x, y) = (i.individual(a), res.reduced.individual(a));
            println!("    Z({}, {}) = {}", i.element_name(x), res.reduced.element_name(y), z.get(x, y));
        }
    }
}
