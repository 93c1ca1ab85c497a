//! Parsing and evaluating concepts, and checking fuzzy assertions.

use fuzzymin::concepts::{check_abox, eval_concept, parse_concept, Comparison, FuzzyAssertion};
use fuzzymin::format::parse_interpretation;

fn main() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/in4.txt")).unwrap();
    let i = parse_interpretation(&text).unwrap();
    let sig = i.signature();

    let queries = [
        "exists hasExpertiseIn . exists isRelatedTo . DescriptionLogic",
        "forall hasExpertiseIn . exists isRelatedTo . DescriptionLogic",
        "exists collaboratesWith* . exists hasExpertiseIn . DescriptionLogic",
        "Researcher and exists (collaboratesWith ; collaboratesWith) . 0.5",
        "exists (hasExpertiseIn ; (FuzzyLogic)?) . 1 -> 0.6",
    ];
    for q in queries {
        let c = parse_concept(q, sig).unwrap();
        let v = eval_concept(&c, &i);
        let people: Vec<String> = ["linh", "mirek", "stefan"]
            .iter()
            .map(|p| format!("{p}:{}", v.get(i.element_index(p).unwrap())))
            .collect();
        println!("{}\n    {}", c.display(sig), people.join(" "));
    }

    match parse_concept("exists inv hasExpertiseIn . Researcher", sig) {
        Ok(_) => unreachable!(),
        Err(e) => println!("\nwithout inverses: {e}"),
    }

    let c = parse_concept(queries[0], sig).unwrap();
    let linh = sig.individual_index("linh").unwrap();
    let mirek = sig.individual_index("mirek").unwrap();
    let abox = [
        FuzzyAssertion::Concept { concept: c, individual: linh, cmp: Comparison::Ge, degree: "0.8".parse().unwrap() },
        FuzzyAssertion::Neq(linh, mirek),
    ];
    println!("abox holds: {}", check_abox(&i, &abox));
}
