mod common;

use common::*;
use fuzzymin::bisim::{
    auto_bisimulation_partition, bisimilarity_degree, check_bisimulation, greatest_auto_bisimulation,
    greatest_bisimulation, BisimViolation,
};
use fuzzymin::concepts::{check_assertion, eval_concept, eval_role, parse_concept, parse_role, Comparison, FuzzyAssertion};
use fuzzymin::minimize::{approximate_minimize, compute_d, construct_witness, minimize_with_partition, MinimizeParams};
use fuzzymin::partition::build_compact_partition;
use fuzzymin::{Degree, Features, FuzzyInterpretation, FuzzyRelation};

fn minimize(i: &FuzzyInterpretation, phi: Features, gamma: &str) -> fuzzymin::minimize::MinimizeResult {
    approximate_minimize(i, MinimizeParams::new(phi, d(gamma)).unwrap()).unwrap()
}

fn auto_z(i: &FuzzyInterpretation, phi: Features) -> FuzzyRelation {
    greatest_auto_bisimulation(i, phi).z
}

fn names(i: &FuzzyInterpretation) -> impl Fn(usize) -> String + '_ {
    move |x| i.element_name(x).to_string()
}

#[test]
fn motivating_partition_renders_exactly() {
    let i = load("in1.txt");
    let p = auto_bisimulation_partition(&i, Features::NONE);
    assert_eq!(p.render(names(&i)), "{{u,u'}_1, {{v1,v1'}_1, {{v2,v2'}_1,{v3}_1}_0.8}_0.7}_0");
}

#[test]
fn reference_partitions_match() {
    let cases = [
        ("in1.txt", Features::NONE, "{{u,u'}_1, {{v1,v1'}_1, {{v2,v2'}_1,{v3}_1}_0.8}_0.7}_0"),
        ("in1.txt", Features::O, "{{u}_1, {u'}_1, {{v1,v1'}_1, {{v2,v2'}_1, {v3}_1}_0.8}_0.7}_0"),
        ("in1.txt", Features::IO, "{{u}_1, {u'}_1, {{{v1}_1, {v3}_1}_0.5, {v2}_1}_0.4, {{v1'}_1, {v2'}_1}_0.6}_0"),
        ("in2.txt", Features::NONE, "{{u1,u2}_1, {{v1}_1,{v2}_1,{v3}_1}_0.5, {{w1}_1,{w2}_1}_0.8}_0"),
        ("in2.txt", Features::O, "{{u1}_1, {u2}_1, {v3}_1, {w1}_1, {w2}_1, {{v1}_1, {v2}_1}_0.5}_0"),
        ("in2.txt", Features::I, "{{{u1}_1, {u2}_1}_0.3, {{v1}_1, {v2}_1, {v3}_1}_0.3, {{w1}_1, {w2}_1}_0.3}_0"),
        ("in2.txt", Features::IO, "{{u1}_1, {u2}_1, {v3}_1, {w1}_1, {w2}_1, {{v1}_1, {v2}_1}_0.3}_0"),
        ("in3.txt", Features::NONE, "{{{u1}_1,{u2}_1}_0.8, {{v1}_1,{v2}_1}_0.8, {{w1}_1,{w2}_1}_0.8}_0"),
        ("in3.txt", Features::I, "{{{u1}_1,{u2}_1}_0.8, {{v1}_1,{v2}_1}_0.8, {{w1}_1,{w2}_1}_0.8}_0"),
        ("in3.txt", Features::O, "{{u1}_1, {u2}_1, {{v1}_1, {v2}_1}_0.8, {{w1}_1, {w2}_1}_0.8}_0"),
        ("in3.txt", Features::IO, "{{u1}_1, {u2}_1, {v1}_1, {v2}_1, {w1}_1, {w2}_1}_0"),
    ];
    for (file, phi, text) in cases {
        let i = load(file);
        assert_eq!(auto_z(&i, phi), partition_relation(text, &i), "{file} {phi}");
    }
}

// Under inverse roles alone, u and u' are fully bisimilar: both have no
// predecessors and their successors match pairwise at the needed degrees.
// The coarser listing (u, u' joined at 0.4) is a bisimulation but not the greatest.
#[test]
fn motivating_inverse_partition_exceeds_coarser_listing() {
    let i = load("in1.txt");
    let coarse = partition_relation(
        "{{{u}_1,{u'}_1}_0.4, {{{v1}_1,{v3}_1}_0.5, {v2}_1, {{v1'}_1,{v2'}_1}_0.6}_0.4}_0",
        &i,
    );
    let z = auto_z(&i, Features::I);
    assert!(check_bisimulation(&coarse, &i, &i, Features::I).is_empty());
    assert!(check_bisimulation(&z, &i, &i, Features::I).is_empty());
    assert!(coarse.leq(&z) && coarse != z);
    assert_eq!(z.get(el(&i, "u"), el(&i, "u'")), Degree::ONE);
    let oracle = naive_bisim(&i, &i, Features::I);
    for (x, row) in oracle.iter().enumerate() {
        for (y, &v) in row.iter().enumerate() {
            assert_eq!(z.get(x, y), v);
        }
    }
}

#[test]
fn minimization_on_coarser_inverse_partition_keeps_four() {
    let i = load("in1.txt");
    let coarse = partition_relation(
        "{{{u}_1,{u'}_1}_0.4, {{{v1}_1,{v3}_1}_0.5, {v2}_1, {{v1'}_1,{v2'}_1}_0.6}_0.4}_0",
        &i,
    );
    let mut p = build_compact_partition(&coarse).unwrap();
    let params = MinimizeParams::new(Features::I, Degree::ONE).unwrap();
    let res = minimize_with_partition(&i, &mut p, params).unwrap();
    let (dom, _, _, roles) = facts(&res.reduced);
    assert_eq!(dom, strs(&["u", "u'", "v3", "v2'"]));
    assert_eq!(roles, strs(&["r(u,v3)=0.7", "r(u',v2')=0.7"]));
}

#[test]
fn two_branch_pairwise_degrees() {
    let i = load("in2.txt");
    let z = auto_z(&i, Features::NONE);
    let g = |a: &str, b: &str| z.get(el(&i, a), el(&i, b)).to_string();
    assert_eq!(g("u1", "u2"), "1");
    for (a, b) in [("v1", "v2"), ("v1", "v3"), ("v2", "v3")] {
        assert_eq!(g(a, b), "0.5");
    }
    assert_eq!(g("w1", "w2"), "0.8");
    assert_eq!(g("u1", "v1"), "0");
    assert_eq!(g("v3", "w2"), "0");
}

#[test]
fn degree_sets() {
    let ds = |i: &FuzzyInterpretation, g: &str| compute_d(i, d(g)).iter().map(Degree::to_string).collect::<Vec<_>>();
    assert_eq!(ds(&load("in1.txt"), "1"), ["1", "0.7", "0.6", "0.5", "0.4"]);
    assert_eq!(ds(&load("in3.txt"), "0.8"), ["0.8"]);
}

#[test]
fn motivating_minimizations() {
    let i = load("in1.txt");
    let (dom, inds, cs, rs) = facts(&minimize(&i, Features::NONE, "1").reduced);
    assert_eq!(dom, strs(&["u", "v3"]));
    assert_eq!((inds["a"].as_str(), inds["b"].as_str()), ("u", "u"));
    assert_eq!(cs, strs(&["A(v3)=0.9"]));
    assert_eq!(rs, strs(&["r(u,v3)=0.7"]));

    let (dom, inds, cs, rs) = facts(&minimize(&i, Features::O, "1").reduced);
    assert_eq!(dom, strs(&["u", "u'", "v3"]));
    assert_eq!((inds["a"].as_str(), inds["b"].as_str()), ("u", "u'"));
    assert_eq!(cs, strs(&["A(v3)=0.9"]));
    assert_eq!(rs, strs(&["r(u,v3)=0.7", "r(u',v3)=0.7"]));

    let (dom, _, cs, rs) = facts(&minimize(&i, Features::IO, "1").reduced);
    assert_eq!(dom, strs(&["u", "u'", "v3", "v2'"]));
    assert_eq!(cs, strs(&["A(v3)=0.9", "A(v2')=0.8"]));
    assert_eq!(rs, strs(&["r(u,v3)=0.7", "r(u',v2')=0.7"]));

    // greatest inverse-only bisimulation joins u and u'
    assert_eq!(minimize(&i, Features::I, "1").reduced.len(), 2);
}

#[test]
fn two_branch_minimizations() {
    let i = load("in2.txt");
    let (dom, inds, cs, rs) = facts(&minimize(&i, Features::NONE, "1").reduced);
    assert_eq!(dom, strs(&["u1", "v2", "w1"]));
    assert_eq!((inds["a"].as_str(), inds["b"].as_str()), ("u1", "u1"));
    assert_eq!(cs, strs(&["A(v2)=0.6", "B(w1)=0.8"]));
    assert_eq!(rs, strs(&["r(u1,v2)=0.4", "r(v2,v2)=0.4", "r(v2,w1)=0.4", "s(w1,u1)=0.2"]));

    assert_eq!(minimize(&i, Features::O, "1").reduced.len(), 6);

    let res = minimize(&i, Features::I, "1");
    assert_eq!(res.reduced.len(), 7);
    let (_, _, _, rs) = facts(&res.reduced);
    assert!(rs.contains(&"s(w1,u1)=0.2".to_string()));
    assert!(i.role(1).get(el(&i, "w1"), el(&i, "u1")).is_zero());

    assert_eq!(minimize(&i, Features::IO, "1").reduced.len(), 7);
    assert_eq!(minimize(&i, Features::IO, "0.3").reduced.len(), 6);
}

#[test]
fn chain_minimizations() {
    let i = load("in3.txt");
    assert_eq!(minimize(&i, Features::NONE, "1").reduced, i);

    let r = minimize(&i, Features::NONE, "0.9").reduced;
    assert_eq!(r.domain(), i.domain());
    assert_eq!(r.individuals(), i.individuals());
    assert_eq!(r.concepts(), i.concepts());
    let (_, _, _, rs) = facts(&r);
    assert_eq!(rs, strs(&["r(u1,v1)=0.9", "r(v1,w1)=0.9", "r(u2,v2)=0.9", "r(v2,w2)=0.9"]));

    for phi in [Features::NONE, Features::I] {
        let (dom, inds, cs, rs) = facts(&minimize(&i, phi, "0.8").reduced);
        assert_eq!(dom, strs(&["u1", "v1", "w1"]));
        assert_eq!((inds["a"].as_str(), inds["b"].as_str()), ("u1", "u1"));
        assert_eq!(cs, strs(&["A(w1)=1"]));
        assert_eq!(rs, strs(&["r(u1,v1)=0.8", "r(v1,w1)=0.8"]));
    }

    let (dom, inds, cs, rs) = facts(&minimize(&i, Features::O, "0.8").reduced);
    assert_eq!(dom, strs(&["u1", "u2", "v1", "w1"]));
    assert_eq!((inds["a"].as_str(), inds["b"].as_str()), ("u1", "u2"));
    assert_eq!(cs, strs(&["A(w1)=1"]));
    assert_eq!(rs, strs(&["r(u1,v1)=0.8", "r(u2,v1)=0.8", "r(v1,w1)=0.8"]));

    let (dom, _, cs, rs) = facts(&minimize(&i, Features::IO, "0.8").reduced);
    assert_eq!(dom.len(), 6);
    assert_eq!(cs, strs(&["A(w1)=1", "A(w2)=0.8"]));
    assert_eq!(rs, strs(&["r(u1,v1)=0.8", "r(v1,w1)=0.8", "r(u2,v2)=0.8", "r(v2,w2)=0.8"]));
}

#[test]
fn researcher_minimization() {
    let i = load("in4.txt");
    let res = minimize(&i, Features::NONE, "1");
    let (dom, inds, cs, rs) = facts(&res.reduced);
    let (odom, oinds, ocs, ors) = facts(&i);
    let dropped = ["simulation", "minimization"];
    let keep = |s: &String| !s.split(['(', ',', ')']).any(|t| dropped.contains(&t));
    assert_eq!(dom, odom.iter().filter(|s| keep(s)).cloned().collect::<Vec<_>>());
    assert_eq!(inds, oinds);
    assert_eq!(cs, ocs.iter().filter(|s| keep(s)).cloned().collect::<Vec<_>>());
    let loops = [
        ("isRelatedTo(bisimulation,bisimulation)=1", "isRelatedTo(bisimulation,bisimulation)=0.9"),
        ("isRelatedTo(fuzzy_automata,fuzzy_automata)=1", "isRelatedTo(fuzzy_automata,fuzzy_automata)=0.9"),
        ("isRelatedTo(FDL,FDL)=1", "isRelatedTo(FDL,FDL)=0.8"),
    ];
    let mut expect: Vec<String> = ors
        .iter()
        .filter(|s| keep(s))
        .map(|s| loops.iter().find(|(a, _)| a == s).map_or(s.clone(), |(_, b)| b.to_string()))
        .collect();
    expect.sort();
    assert_eq!(rs, expect);
}

#[test]
fn related_topics_relation_is_closed() {
    let i = load("in4.txt");
    let r = i.role(i.signature().role_index("isRelatedTo").unwrap());
    assert!(r.is_fuzzy_equivalence());
    let mut seed = FuzzyRelation::new(i.len(), i.len());
    for (t, v) in [("FDL", "0.6"), ("fuzzy_automata", "0.6"), ("simulation", "0.8"), ("minimization", "0.5")] {
        seed.set(el(&i, "bisimulation"), el(&i, t), d(v));
    }
    assert_eq!(&seed.rst_closure().unwrap(), r);
}

#[test]
fn researcher_concepts() {
    let i = load("in4.txt");
    let sig = i.signature();
    let cases = [
        ("exists hasExpertiseIn . exists isRelatedTo . DescriptionLogic", ["0.8", "0.6", "0.6"]),
        ("forall hasExpertiseIn . exists isRelatedTo . DescriptionLogic", ["0.6", "0.6", "0.6"]),
        ("exists collaboratesWith* . exists hasExpertiseIn . DescriptionLogic", ["0.8", "0.3", "0.3"]),
    ];
    for (text, expect) in cases {
        let v = eval_concept(&parse_concept(text, sig).unwrap(), &i);
        let got: Vec<String> = ["linh", "mirek", "stefan"].iter().map(|p| v.get(el(&i, p)).to_string()).collect();
        assert_eq!(got, expect, "{text}");
    }
    let star = eval_role(&parse_role("collaboratesWith*", sig).unwrap(), &i);
    assert_eq!(star.get(el(&i, "linh"), el(&i, "mirek")), d("0.3"));
    let oracle = naive_star(i.role(sig.role_index("collaboratesWith").unwrap()));
    for (x, row) in oracle.iter().enumerate() {
        for (y, &v) in row.iter().enumerate() {
            assert_eq!(star.get(x, y), v);
        }
    }
    let c = parse_concept("exists hasExpertiseIn . exists isRelatedTo . DescriptionLogic", sig).unwrap();
    let linh = sig.individual_index("linh").unwrap();
    assert!(check_assertion(&i, &FuzzyAssertion::Concept { concept: c, individual: linh, cmp: Comparison::Ge, degree: d("0.8") }));
}

#[test]
fn equality_assertions_follow_the_reduction() {
    let i = load("in1.txt");
    let eq = FuzzyAssertion::Eq(0, 1);
    assert!(!check_assertion(&i, &eq));
    assert!(check_assertion(&minimize(&i, Features::NONE, "1").reduced, &eq));
}

#[test]
fn witnesses_on_golden_runs() {
    let runs = [
        ("in1.txt", Features::NONE, "1"),
        ("in1.txt", Features::O, "1"),
        ("in1.txt", Features::I, "1"),
        ("in1.txt", Features::IO, "1"),
        ("in2.txt", Features::NONE, "1"),
        ("in2.txt", Features::O, "1"),
        ("in2.txt", Features::I, "1"),
        ("in2.txt", Features::IO, "1"),
        ("in2.txt", Features::IO, "0.3"),
        ("in3.txt", Features::NONE, "0.9"),
        ("in3.txt", Features::NONE, "0.8"),
        ("in3.txt", Features::O, "0.8"),
        ("in3.txt", Features::IO, "0.8"),
        ("in4.txt", Features::NONE, "1"),
    ];
    for (file, phi, g) in runs {
        let i = load(file);
        let params = MinimizeParams::new(phi, d(g)).unwrap();
        let res = approximate_minimize(&i, params).unwrap();
        let z = construct_witness(&i, &res, params).unwrap();
        let v = check_bisimulation(&z, &i, &res.reduced, phi);
        assert!(v.is_empty(), "{file} {phi} {g}: {}", v[0].describe(&i, &res.reduced));
        for a in 0..i.signature().individuals().len() {
            assert_eq!(z.get(i.individual(a), res.reduced.individual(a)), d(g), "{file} {phi} {g}");
        }
    }
    let i = load("in1.txt");
    let params = MinimizeParams::default();
    let res = approximate_minimize(&i, params).unwrap();
    let z = construct_witness(&i, &res, params).unwrap();
    let r = &res.reduced;
    assert_eq!(z.get(el(&i, "u"), el(r, "u")), Degree::ONE);
    assert_eq!(z.get(el(&i, "v3"), el(r, "v3")), d("0.7"));

    let i = load("in3.txt");
    let params = MinimizeParams::new(Features::NONE, d("0.8")).unwrap();
    let res = approximate_minimize(&i, params).unwrap();
    let z = construct_witness(&i, &res, params).unwrap();
    assert_eq!(z.get(el(&i, "u1"), el(&res.reduced, "u1")), d("0.8"));
}

#[test]
fn bisimilarity_with_reductions() {
    let i = load("in1.txt");
    let r = minimize(&i, Features::NONE, "1").reduced;
    assert_eq!(bisimilarity_degree(&i, &r, Features::NONE).unwrap(), Degree::ONE);
    assert_eq!(bisimilarity_degree(&i, &i, Features::IO).unwrap(), Degree::ONE);
    let i = load("in3.txt");
    let r = minimize(&i, Features::NONE, "0.8").reduced;
    assert!(bisimilarity_degree(&i, &r, Features::NONE).unwrap() >= d("0.8"));
    let z = greatest_bisimulation(&i, &r, Features::NONE).unwrap().z;
    let oracle = naive_bisim(&i, &r, Features::NONE);
    for (x, row) in oracle.iter().enumerate() {
        for (y, &v) in row.iter().enumerate() {
            assert_eq!(z.get(x, y), v);
        }
    }
}

#[test]
fn all_ones_is_not_a_bisimulation() {
    let i = load("in1.txt");
    let n = i.len();
    let ones = FuzzyRelation::from_entries(n, n, (0..n).flat_map(|x| (0..n).map(move |y| (x, y, Degree::ONE))));
    let v = check_bisimulation(&ones, &i, &i, Features::NONE);
    let (v1, v3) = (el(&i, "v1"), el(&i, "v3"));
    assert!(v.contains(&BisimViolation::Concept { x: v1, x2: v3, concept: 0 }));
}

#[test]
fn graph_encoding() {
    use fuzzymin::bisim::to_fuzzy_graph;
    let i = load("in1.txt");
    let g = to_fuzzy_graph(&i, Features::O);
    assert_eq!(g.vertex_labels, ["A", "a", "b"]);
    assert_eq!(g.labels[el(&i, "u")].iter().collect::<Vec<_>>(), [(1, Degree::ONE)]);
    assert_eq!(g.labels[el(&i, "u'")].iter().collect::<Vec<_>>(), [(2, Degree::ONE)]);
    assert_eq!(g.labels[el(&i, "v1")].iter().collect::<Vec<_>>(), [(0, d("0.7"))]);
    let g = to_fuzzy_graph(&i, Features::NONE);
    assert_eq!((g.vertex_labels.len(), g.edge_labels.len()), (1, 1));
    let g = to_fuzzy_graph(&load("in2.txt"), Features::I);
    let i2 = load("in2.txt");
    let inv = g.edge_labels.iter().position(|l| l == "inv r").expect("inverse label");
    assert_eq!(g.edges[inv].get(el(&i2, "v2"), el(&i2, "u1")), d("0.4"));
}
