//! Building an interpretation in code and round-tripping it through the text format.

use fuzzymin::format::{parse_interpretation, write_interpretation};
use fuzzymin::{Degree, Features, InterpretationBuilder, Signature};

fn main() {
    let sig = Signature::new(["Warm"], ["next"], ["start"], Features::I).unwrap();
    let d = |s: &str| -> Degree { s.parse().unwrap() };
    let mut b = InterpretationBuilder::new(sig);
    b.elements(["s0", "s1", "s2"])
        .individual("start", "s0")
        .concept("Warm", "s1", d("0.6"))
        .concept("Warm", "s2", d("0.6"))
        .role("next", "s0", "s1", d("0.9"))
        .role("next", "s0", "s2", d("0.9"));
    let i = b.build().unwrap();

    let text = write_interpretation(&i);
    print!("{text}");
    assert_eq!(parse_interpretation(&text).unwrap(), i);

    let broken = text.replace("Warm s2 0.6", "Warm s3 0.6");
    println!("\n{}", parse_interpretation(&broken).unwrap_err());

    b.role("next", "s9", "s1", d("0.1"));
    for v in b.validate() {
        println!("{v}");
    }
}
