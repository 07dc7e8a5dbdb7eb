use contractive::chains::epsilon_chain;
use contractive::distance::rational;
use contractive::graph::{connected_components, graph_quotient, natural_distance};
use contractive::io::{parse_space_json, SpaceDescriptor};
use contractive::oracle::{
    check_contraction_fixed_point, contractive_maps, enumerate_verdicts, random_graph, verify_finite_range_remark,
    SpaceGenerator, DEFAULT_CAP,
};
use contractive::theorem::{construct_witness, quotient_lift};
use contractive::{
    classify_map, min_positive_distance, verify_metric_axioms, ExtDistance, MetricSpace, QuotientStructure, SelfMap,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn space_from(seed: u64, max_points: usize) -> MetricSpace {
    let generator = SpaceGenerator { max_points, ..Default::default() };
    generator.generate(&mut ChaCha8Rng::seed_from_u64(seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_spaces_are_metrics(seed in any::<u64>()) {
        let space = space_from(seed, 6);
        prop_assert!(verify_metric_axioms(&space).passed);
        for x in 0..space.len() {
            for y in 0..space.len() {
                prop_assert_eq!(space.distance(x, y).unwrap(), space.distance(y, x).unwrap());
            }
        }
    }

    #[test]
    fn minimal_distance_is_minimal(seed in any::<u64>()) {
        let space = space_from(seed, 6);
        let minimal = min_positive_distance(&space).unwrap();
        prop_assert!(minimal.d0.is_finite() && !minimal.d0.is_zero());
        prop_assert!(!minimal.pairs.is_empty());
        for x in 0..space.len() {
            for y in x + 1..space.len() {
                let v = space.distance(x, y).unwrap();
                prop_assert!(v >= minimal.d0);
                prop_assert_eq!(v == minimal.d0, minimal.pairs.contains(&(x, y)));
            }
        }
    }

    #[test]
    fn classes_grow_by_single_minimal_steps(seed in any::<u64>()) {
        let space = space_from(seed, 6);
        let q = QuotientStructure::of(&space).unwrap();
        for class in &q.classes {
            for &y in class {
                let joined = class.iter().any(|&z| space.distance(y, z).unwrap() == q.d0);
                prop_assert_eq!(joined, class.len() > 1);
            }
        }
    }

    #[test]
    fn constant_then_contraction_then_contractive(seed in any::<u64>()) {
        let space = space_from(seed, 4);
        for verdict in enumerate_verdicts(&space, DEFAULT_CAP).unwrap() {
            let r = &verdict.report;
            prop_assert!(!r.is_constant || r.is_contraction);
            prop_assert!(!r.is_contraction || r.is_contractive);
        }
    }

    #[test]
    fn finite_spaces_collapse_onto_one_fixed_point(seed in any::<u64>()) {
        let space = space_from(seed, 5);
        let check = verify_finite_range_remark(&space, DEFAULT_CAP).unwrap();
        prop_assert!(check.holds, "{:?}", check.failures.first());
    }

    #[test]
    fn contractive_maps_are_constant_on_classes_and_lift(seed in any::<u64>()) {
        let space = space_from(seed, 5);
        let q = QuotientStructure::of(&space).unwrap();
        for verdict in contractive_maps(&space, DEFAULT_CAP).unwrap() {
            for class in &q.classes {
                prop_assert!(class.iter().all(|&x| verdict.images[x] == verdict.images[class[0]]));
            }
            let lift = quotient_lift(&SelfMap::Table(verdict.images.clone()), &space, &q).unwrap();
            prop_assert!(lift.non_strict_holds && lift.strict_holds);
        }
    }

    #[test]
    fn witness_is_a_nonconstant_contraction(seed in any::<u64>()) {
        let space = space_from(seed, 7);
        let q = QuotientStructure::of(&space).unwrap();
        match construct_witness(&space, &q) {
            Ok(map) => {
                prop_assert!(q.class_count() > 1);
                let report = classify_map(&space, &map).unwrap();
                prop_assert!(report.is_contractive && !report.is_constant);
                let images = map.images(&space).unwrap();
                prop_assert!(check_contraction_fixed_point(&space, &images).holds);
            }
            Err(_) => prop_assert_eq!(q.class_count(), 1),
        }
    }

    #[test]
    fn graph_classes_are_components(seed in any::<u64>()) {
        let g = random_graph(&mut ChaCha8Rng::seed_from_u64(seed), 12);
        let space = natural_distance(&g).unwrap();
        prop_assert!(verify_metric_axioms(&space).passed);
        prop_assert_eq!(min_positive_distance(&space).unwrap().d0, ExtDistance::one());
        let q = graph_quotient(&g).unwrap();
        prop_assert_eq!(q.classes, connected_components(&g));
    }

    #[test]
    fn epsilon_chains_respect_the_step_bound(seed in any::<u64>(), num in 11i64..40) {
        let space = space_from(seed, 7);
        let eps = rational(num, 10);
        let d0 = min_positive_distance(&space).unwrap().d0;
        let bound = ExtDistance::Finite(eps.clone()).mul(&d0);
        for x in 0..space.len() {
            for y in 0..space.len() {
                if let Some(chain) = epsilon_chain(&space, x, y, &eps).unwrap() {
                    prop_assert_eq!(chain.first(), Some(&x));
                    prop_assert_eq!(chain.last(), Some(&y));
                    for step in chain.windows(2) {
                        prop_assert!(space.distance(step[0], step[1]).unwrap() <= bound);
                    }
                }
            }
        }
    }

    #[test]
    fn space_descriptors_round_trip(seed in any::<u64>()) {
        let space = space_from(seed, 6);
        let text = serde_json::to_string(&SpaceDescriptor::of(&space)).unwrap();
        let back = parse_space_json(&text).unwrap();
        prop_assert_eq!(back.rows(), space.rows());
    }

    #[test]
    fn distances_round_trip_as_strings(p in 0u64..10_000, q in 1u64..10_000, inf in any::<bool>()) {
        let v = if inf { ExtDistance::INFINITY } else { ExtDistance::ratio(p, q) };
        let json = serde_json::to_string(&v).unwrap();
        prop_assert_eq!(serde_json::from_str::<ExtDistance>(&json).unwrap(), v);
    }
}
