//! Acceptance suite: one PASS/FAIL line per criterion.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use contractive::catalog::{build_example, check_stated_modulus, ex1_finite, figure1_graph, ExampleId};
use contractive::chains::contractions_constant_certificate;
use contractive::distance::rational;
use contractive::graph::{connected_components, decide_graph, natural_distance};
use contractive::iteration::{check_fixed_point_uniqueness, iterate_to_fixed_point};
use contractive::oracle::{
    contractive_maps, distinct_distance_space, enumerate_all_maps, random_graph, spaces_over,
    verify_finite_range_remark, verify_theorem_equivalence, DEFAULT_CAP,
};
use contractive::theorem::corollary_unique_minimal_pair;
use contractive::{classify_map, min_positive_distance, verify_metric_axioms, ExtDistance, MetricSpace};
use contractive::{BigRational, QuotientStructure, SelfMap};
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn d(text: &str) -> ExtDistance {
    text.parse().expect("valid distance")
}

fn small_spaces() -> Vec<MetricSpace> {
    let values: Vec<ExtDistance> = ["1", "3/2", "2", "5/2", "3", "inf"].into_iter().map(d).collect();
    (2..=4).flat_map(|n| spaces_over(n, &values)).collect()
}

fn seeded_graphs() -> Vec<contractive::Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6772_6170_6873);
    (0..200).map(|_| random_graph(&mut rng, 12)).collect()
}

fn theorem_exhaustive() -> Outcome {
    let spaces = small_spaces();
    let disagreements: Vec<usize> = spaces
        .par_iter()
        .enumerate()
        .filter(|(_, space)| !verify_theorem_equivalence(space, DEFAULT_CAP).is_ok_and(|c| c.agree))
        .map(|(i, _)| i)
        .collect();
    ensure!(disagreements.is_empty(), "{} of {} spaces disagree", disagreements.len(), spaces.len());
    let with = spaces
        .par_iter()
        .filter(|s| QuotientStructure::of(s).unwrap().class_count() > 1)
        .count();
    Ok(format!("{} spaces, {} with a nonconstant contractive map", spaces.len(), with))
}

fn ex1_finite_claims() -> Outcome {
    let space = ex1_finite();
    let summary = enumerate_all_maps(&space, DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure!(summary.total_maps == 27, "total maps {}", summary.total_maps);
    ensure!(summary.count_contractive == 5, "contractive maps {}", summary.count_contractive);
    let chi = SelfMap::Table(vec![0, 0, 1]);
    let report = classify_map(&space, &chi).map_err(|e| e.to_string())?;
    ensure!(!report.is_constant && report.is_contraction, "indicator of 2 misclassified");
    ensure!(report.k_min == d("1/2"), "k_min {}", report.k_min);
    let orbit = iterate_to_fixed_point(&space, &chi, 2, 10).map_err(|e| e.to_string())?;
    ensure!(orbit.fixed_point == Some(0), "fixed point {:?}", orbit.fixed_point);
    ensure!(orbit.n0_bound == Some(2), "n0 bound {:?}", orbit.n0_bound);
    ensure!(orbit.n0_iterate_constant == Some(true), "second iterate not constant");
    Ok("5/27 contractive, k_min 1/2, fixed point 0, n0 2".into())
}

fn ex2_shift_windows() -> Outcome {
    let mut previous: Option<BigRational> = None;
    let mut seen = Vec::new();
    for n in [10u64, 100, 1000] {
        let example = build_example(ExampleId::Ex2, n as usize).map_err(|e| e.to_string())?;
        let shift = &example.map("shift").ok_or("no shift map")?.map;
        let report = classify_map(&example.space, shift).map_err(|e| e.to_string())?;
        ensure!(report.is_contractive, "not contractive at N = {n}");
        let n_big = n as i64;
        let expected = (BigRational::from_integer(1.into()) + rational(1, n_big + 1))
            / (BigRational::from_integer(1.into()) + rational(1, n_big));
        ensure!(report.k_min == ExtDistance::Finite(expected.clone()), "k_min({n}) = {}", report.k_min);
        ensure!(expected < BigRational::from_integer(1.into()), "k_min({n}) not below 1");
        if let Some(prev) = &previous {
            ensure!(*prev < expected, "k_min not increasing at N = {n}");
        }
        seen.push(report.k_min.to_string());
        previous = Some(expected);
    }
    Ok(format!("k_min = {}", seen.join(" < ")))
}

fn ex2_two_valued() -> Outcome {
    let example = build_example(ExampleId::Ex2, 1000).map_err(|e| e.to_string())?;
    let named = example.map("two-valued").ok_or("no two-valued map")?;
    let report = classify_map(&example.space, &named.map).map_err(|e| e.to_string())?;
    ensure!(report.is_contractive, "not contractive");
    ensure!(report.k_min == d("1000/1001"), "k_min {}", report.k_min);
    let check = check_stated_modulus(named, &report).ok_or("no stated modulus")?;
    ensure!(!check.holds, "stated modulus {} not flagged", check.stated);
    Ok(format!("k_min {} flagged against stated {}", check.computed, check.stated))
}

fn ex3_chains() -> Outcome {
    let schedule = [rational(3, 2), rational(11, 10), rational(21, 20)];
    let example = build_example(ExampleId::Ex3, 1000).map_err(|e| e.to_string())?;
    let probes: Vec<usize> = (0..=20).collect();
    let cert = contractions_constant_certificate(&example.space, &probes, &schedule).map_err(|e| e.to_string())?;
    ensure!(cert.hypothesis_on_window, "certificate failed: {:?}", cert.checks);

    for window in [10, 100, 1000] {
        let example = build_example(ExampleId::Ex3, window).map_err(|e| e.to_string())?;
        let shift = &example.map("shift").ok_or("no shift map")?.map;
        let report = classify_map(&example.space, shift).map_err(|e| e.to_string())?;
        ensure!(report.is_contractive, "shift not contractive at window {window}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x0065_7833);
    let pool: Vec<usize> = (0..=1000).collect();
    let subsets: Vec<Vec<usize>> = (0..300)
        .map(|_| {
            let size = rng.gen_range(3..=DEFAULT_CAP);
            let mut points: Vec<usize> = pool.choose_multiple(&mut rng, size).copied().collect();
            if rng.gen_bool(0.5) {
                points[0] = 0;
                if !points[1..].contains(&1) {
                    points[1] = 1;
                }
            }
            points.sort_unstable();
            points.dedup();
            points
        })
        .collect();
    let results: Vec<Result<Option<usize>, String>> = subsets
        .par_iter()
        .map(|points| {
            let sub = example.space.restrict(points).map_err(|e| e.to_string())?;
            let all: Vec<usize> = (0..sub.len()).collect();
            let cert = contractions_constant_certificate(&sub, &all, &schedule).map_err(|e| e.to_string())?;
            if !cert.hypothesis_on_window {
                return Ok(None);
            }
            let mut covered = 0;
            for verdict in contractive_maps(&sub, DEFAULT_CAP).map_err(|e| e.to_string())? {
                let Some(k) = verdict.report.k_min.as_rational() else { continue };
                if verdict.report.is_contraction && cert.covers(k) {
                    covered += 1;
                    ensure!(verdict.report.is_constant, "covered contraction {:?} on {points:?}", verdict.images);
                }
            }
            Ok(Some(covered))
        })
        .collect();
    let (mut hypothesis_holds, mut covered) = (0, 0);
    for result in results {
        if let Some(count) = result? {
            hypothesis_holds += 1;
            covered += count;
        }
    }
    ensure!(hypothesis_holds > 0, "no fuzzed subspace met the hypothesis");
    Ok(format!("certificate passes; {hypothesis_holds} fuzzed subspaces, {covered} covered contractions all constant"))
}

fn empty_fixed_point() -> Outcome {
    let example = build_example(ExampleId::EmptyFixedPoint, 50).map_err(|e| e.to_string())?;
    let space = &example.space;
    let axioms = verify_metric_axioms(space);
    ensure!(axioms.passed, "axioms fail: {:?}", axioms.violation);
    let shift = &example.map("shift").ok_or("no shift map")?.map;
    let report = classify_map(space, shift).map_err(|e| e.to_string())?;
    ensure!(report.is_contractive, "shift not contractive: {:?}", report.violating_pair);
    let fixed = check_fixed_point_uniqueness(space, shift).map_err(|e| e.to_string())?;
    ensure!(fixed.fixed_points.is_empty(), "fixed points {:?}", fixed.fixed_points);
    let minimal = min_positive_distance(space).map_err(|e| e.to_string())?;
    ensure!(minimal.d0 == d("1") && minimal.pairs == [(0, 1)], "d0 {} at {:?}", minimal.d0, minimal.pairs);
    let q = QuotientStructure::of(space).map_err(|e| e.to_string())?;
    let mut expected = vec![vec![0, 1]];
    expected.extend((2..=50).map(|x| vec![x]));
    ensure!(q.classes == expected, "classes {:?}", q.classes);
    Ok(format!("{} points, no fixed point, {} classes", space.len(), q.class_count()))
}

fn graphs() -> Outcome {
    let graphs = seeded_graphs();
    let mut small = 0;
    let mut witnesses = 0;
    for (i, g) in graphs.iter().enumerate() {
        let decision = decide_graph(g).map_err(|e| e.to_string())?;
        let components = connected_components(g).len();
        ensure!(decision.exists == (components > 1), "graph {i}: exists {} with {components} components", decision.exists);
        let space = natural_distance(g).map_err(|e| e.to_string())?;
        if let Some(images) = &decision.witness {
            witnesses += 1;
            let report = classify_map(&space, &SelfMap::Table(images.clone())).map_err(|e| e.to_string())?;
            ensure!(report.is_contractive && !report.is_constant, "graph {i}: witness fails");
        }
        if g.vertex_count() <= 5 {
            small += 1;
            let summary = enumerate_all_maps(&space, DEFAULT_CAP).map_err(|e| e.to_string())?;
            ensure!(summary.nonconstant_contractive_exists == decision.exists, "graph {i}: oracle disagrees");
        }
    }
    let bridged = decide_graph(&figure1_graph(20, true)).map_err(|e| e.to_string())?;
    let split = decide_graph(&figure1_graph(20, false)).map_err(|e| e.to_string())?;
    ensure!(!bridged.exists && split.exists, "figure 1: bridged {} split {}", bridged.exists, split.exists);
    Ok(format!("{} graphs, {witnesses} witnesses, {small} cross-checked; bridge flips existence", graphs.len()))
}

fn fixed_point_uniqueness() -> Outcome {
    let mut spaces = small_spaces();
    spaces.push(ex1_finite());
    spaces.extend(
        seeded_graphs()
            .iter()
            .filter(|g| g.vertex_count() <= 5)
            .map(|g| natural_distance(g).expect("graph metric")),
    );
    let (maps, failures) = spaces
        .par_iter()
        .map(|space| {
            let check = verify_finite_range_remark(space, DEFAULT_CAP).expect("small space");
            (check.contractive_maps, check.failures.len())
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    ensure!(failures == 0, "{failures} of {maps} contractive maps fail");
    Ok(format!("{maps} contractive maps over {} spaces, each with one attracting fixed point", spaces.len()))
}

fn corollary() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x636f_726f);
    for i in 0..100 {
        let n = rng.gen_range(3..=7);
        let space = distinct_distance_space(&mut rng, n, 1000);
        let decision = corollary_unique_minimal_pair(&space).map_err(|e| e.to_string())?;
        ensure!(decision.applicable && decision.exists == Some(true), "space {i}: {decision:?}");
        let images = decision.witness.clone().ok_or(format!("space {i}: no witness"))?;
        let map = SelfMap::Table(images);
        let report = classify_map(&space, &map).map_err(|e| e.to_string())?;
        ensure!(report.is_contractive && !report.is_constant, "space {i}: witness fails");
        let fixed = check_fixed_point_uniqueness(&space, &map).map_err(|e| e.to_string())?;
        ensure!(fixed.fixed_points.len() == 1, "space {i}: fixed points {:?}", fixed.fixed_points);
    }
    Ok("100 spaces, each witness moves all but one point".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("theorem equivalence on all small spaces", theorem_exhaustive),
        ("three-point example", ex1_finite_claims),
        ("reciprocal-max shift is contractive but not a contraction", ex2_shift_windows),
        ("reciprocal-max two-valued map modulus", ex2_two_valued),
        ("reciprocal-gap chains force contractions constant", ex3_chains),
        ("harmonic ray has a contractive map without fixed point", empty_fixed_point),
        ("graphs: existence iff disconnected", graphs),
        ("fixed-point uniqueness on finite spaces", fixed_point_uniqueness),
        ("distinct distances: exactly one point stays", corollary),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}) [{elapsed:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({detail}) [{elapsed:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
