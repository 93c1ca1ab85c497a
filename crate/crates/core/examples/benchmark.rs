//! Random instances made of disconnected components, minimized in bulk.
//!
//! cargo run --release --example benchmark -- [repeats]

use fuzzymin::genbench::{format_table, generate, run_bench, GeneratorParams};
use fuzzymin::Degree;

fn main() {
    let repeats = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let rows: Vec<GeneratorParams> = [
        "10 500 1000 10 20 3 3 3 1 0 0 1",
        "10 500 1000 10 20 3 3 3 0 0 0 1",
        "10 500 1000 10 20 3 3 3 1 1 1 1",
        "10 500 2000 10 20 5 3 3 1 0 0 1",
        "100 50 100 2 10 3 2 2 1 0 0 1",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect();

    let one = generate(&rows[0]).unwrap();
    let s = one.size_stats();
    println!("first row instance: n = {}, m = {}, l = {}\n", s.n, s.m, s.l);

    let res = run_bench(&rows, Degree::ONE, repeats).unwrap();
    print!("{}", format_table(&res));
}
