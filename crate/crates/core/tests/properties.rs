mod common;

use common::*;
use fuzzymin::bisim::{greatest_auto_bisimulation, greatest_bisimulation_fixpoint, SweepOrder};
use fuzzymin::concepts::{parse_concept, random_concept, Fragment};
use fuzzymin::format::{parse_interpretation, write_interpretation};
use fuzzymin::genbench::generate;
use fuzzymin::minimize::{approximate_minimize, BlockLookup, MinimizeParams};
use fuzzymin::partition::{build_compact_partition, partition_to_equivalence};
use fuzzymin::{biresiduum, residuum, tnorm, Degree, Features, FuzzyRelation};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn degree() -> impl Strategy<Value = Degree> {
    (0u32..=10).prop_map(|k| Degree::from_ratio(k as u64, 10).unwrap())
}

fn relation(n: usize) -> impl Strategy<Value = FuzzyRelation> {
    prop::collection::vec(degree(), n * n)
        .prop_map(move |v| FuzzyRelation::from_entries(n, n, v.into_iter().enumerate().map(|(k, d)| (k / n, k % n, d))))
}

fn phi() -> impl Strategy<Value = Features> {
    prop::sample::select(Features::ALL.to_vec())
}

proptest! {
    #[test]
    fn adjunction(a in degree(), b in degree(), c in degree()) {
        prop_assert_eq!(tnorm(a, b) <= c, a <= residuum(b, c));
    }

    #[test]
    fn biresiduum_is_min_of_residua(a in degree(), b in degree()) {
        prop_assert_eq!(biresiduum(a, b), residuum(a, b).min(residuum(b, a)));
    }

    #[test]
    fn closure_is_least_equivalence_above(r in (1usize..7).prop_flat_map(relation)) {
        let c = r.rst_closure().unwrap();
        prop_assert!(c.is_fuzzy_equivalence());
        prop_assert!(r.leq(&c));
        prop_assert_eq!(c.rst_closure().unwrap(), c);
    }

    #[test]
    fn composition_is_associative(rs in (1usize..6).prop_flat_map(|n| (relation(n), relation(n), relation(n)))) {
        let (a, b, c) = rs;
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn partition_round_trip(r in (1usize..25).prop_flat_map(relation)) {
        let e = r.rst_closure().unwrap();
        let p = build_compact_partition(&e).unwrap();
        prop_assert!(p.shape_violations().is_empty());
        prop_assert_eq!(partition_to_equivalence(&p), e);
    }

    #[test]
    fn printed_concepts_parse_back(seed in any::<u64>(), f in phi(), depth in 0usize..5) {
        let i = load("in2.txt");
        let sig = i.signature().with_features(f);
        let c = random_concept(&sig, f, Fragment::Full, depth, seed);
        let text = c.display(&sig).to_string();
        prop_assert_eq!(parse_concept(&text, &sig).unwrap(), c, "{}", text);
    }

    #[test]
    fn file_round_trip(seed in any::<u64>(), f in phi()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = generate(&small_params(&mut rng, 3, 8, f)).unwrap();
        let text = write_interpretation(&i);
        let back = parse_interpretation(&text).unwrap();
        prop_assert_eq!(write_interpretation(&back), text);
        prop_assert_eq!(back, i);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn engines_agree_with_oracle(seed in any::<u64>(), f in phi()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = generate(&small_params(&mut rng, 2, 5, f)).unwrap();
        let z = greatest_auto_bisimulation(&i, f).z;
        let oracle = naive_bisim(&i, &i, f);
        for (x, row) in oracle.iter().enumerate() {
            for (y, &v) in row.iter().enumerate() {
                prop_assert_eq!(z.get(x, y), v);
            }
        }
        for order in [SweepOrder::Forward, SweepOrder::Reverse] {
            prop_assert_eq!(&greatest_bisimulation_fixpoint(&i, &i, f, order).unwrap().z, &z);
        }
    }

    #[test]
    fn lookup_strategies_agree(seed in any::<u64>(), f in phi(), g in prop::sample::select(vec!["1", "0.8", "0.5", "0.3"])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = generate(&small_params(&mut rng, 3, 10, f)).unwrap();
        let params = MinimizeParams::new(f, d(g)).unwrap();
        let a = approximate_minimize(&i, params).unwrap();
        let b = approximate_minimize(&i, params.with_lookup(BlockLookup::TreeWalk)).unwrap();
        prop_assert_eq!(a.reduced, b.reduced);
        prop_assert_eq!(a.trace, b.trace);
    }
}
