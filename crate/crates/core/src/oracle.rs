//! Exhaustive ground truth on small table spaces.
//!
//! Every self-map of an `n`-point space is classified, and the counts are
//! compared against the quotient-based answers. Nothing here goes through
//! the union-find path: class membership is recomputed by direct closure.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::distance::ExtDistance;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iteration::n0_bound;
use crate::maps::{classify_images, ClassificationReport};
use crate::metric::{min_positive_distance, verify_metric_axioms, MetricSpace};
use crate::quotient::QuotientStructure;

pub const DEFAULT_CAP: usize = 6;

/// Image tuple number `index` in lexicographic order (first point most
/// significant).
pub fn decode_map(mut index: u64, n: usize) -> Vec<usize> {
    let mut images = vec![0; n];
    for slot in images.iter_mut().rev() {
        *slot = (index % n as u64) as usize;
        index /= n as u64;
    }
    images
}

fn map_count(space: &MetricSpace, cap: usize) -> Result<u64> {
    if !space.is_table() {
        return Err(Error::NotFiniteTable);
    }
    let n = space.len();
    if n > cap {
        return Err(Error::EnumerationCap { points: n, cap });
    }
    Ok((n as u64).pow(n as u32))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationSummary {
    pub window_points: usize,
    pub total_maps: u64,
    pub count_constant: u64,
    pub count_contraction: u64,
    pub count_contractive: u64,
    pub nonconstant_contractive_exists: bool,
}

#[derive(Clone, Copy, Default)]
struct Tally {
    constant: u64,
    contraction: u64,
    contractive: u64,
    nonconstant_contractive: u64,
}

impl Tally {
    fn of(report: &ClassificationReport) -> Self {
        Tally {
            constant: report.is_constant as u64,
            contraction: report.is_contraction as u64,
            contractive: report.is_contractive as u64,
            nonconstant_contractive: (report.is_contractive && !report.is_constant) as u64,
        }
    }

    fn merge(self, other: Tally) -> Tally {
        Tally {
            constant: self.constant + other.constant,
            contraction: self.contraction + other.contraction,
            contractive: self.contractive + other.contractive,
            nonconstant_contractive: self.nonconstant_contractive + other.nonconstant_contractive,
        }
    }
}

/// Classifies all `n^n` self-maps. Counts are merged associatively, so the
/// result does not depend on how the work is split across threads.
pub fn enumerate_all_maps(space: &MetricSpace, cap: usize) -> Result<EnumerationSummary> {
    let total = map_count(space, cap)?;
    let n = space.len();
    let tally = (0..total)
        .into_par_iter()
        .map(|i| Tally::of(&classify_images(space, &decode_map(i, n))))
        .reduce(Tally::default, Tally::merge);
    Ok(EnumerationSummary {
        window_points: n,
        total_maps: total,
        count_constant: tally.constant,
        count_contraction: tally.contraction,
        count_contractive: tally.contractive,
        nonconstant_contractive_exists: tally.nonconstant_contractive > 0,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapVerdict {
    pub images: Vec<usize>,
    pub report: ClassificationReport,
}

/// Per-map verdicts in enumeration order.
pub fn enumerate_verdicts(space: &MetricSpace, cap: usize) -> Result<Vec<MapVerdict>> {
    let total = map_count(space, cap)?;
    let n = space.len();
    Ok((0..total)
        .into_par_iter()
        .map(|i| {
            let images = decode_map(i, n);
            let report = classify_images(space, &images);
            MapVerdict { images, report }
        })
        .collect())
}

/// Image tuples of every contractive self-map, in enumeration order.
pub fn contractive_maps(space: &MetricSpace, cap: usize) -> Result<Vec<MapVerdict>> {
    Ok(enumerate_verdicts(space, cap)?
        .into_iter()
        .filter(|v| v.report.is_contractive)
        .collect())
}

/// Points reachable from `x` by jumps of length exactly `d0`, by direct scan.
pub fn jump_closure(space: &MetricSpace, d0: &ExtDistance, x: usize) -> Vec<usize> {
    let n = space.len();
    let mut reached = vec![false; n];
    reached[x] = true;
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        for v in 0..n {
            if !reached[v] && space.distance(u, v).ok().as_ref() == Some(d0) {
                reached[v] = true;
                queue.push_back(v);
            }
        }
    }
    (0..n).filter(|&v| reached[v]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub enumeration: EnumerationSummary,
    /// (i) a nonconstant contractive map exists, by enumeration.
    pub nonconstant_exists: bool,
    /// (ii) some class is a proper subset.
    pub some_class_proper: bool,
    /// (iii) every class is a proper subset.
    pub every_class_proper: bool,
    /// (iv) more than one class.
    pub several_classes: bool,
    pub agree: bool,
}

/// Computes the four equivalent conditions independently and compares them.
pub fn verify_theorem_equivalence(space: &MetricSpace, cap: usize) -> Result<TheoremCheck> {
    let enumeration = enumerate_all_maps(space, cap)?;
    let d0 = min_positive_distance(space)?.d0;
    let n = space.len();
    let proper: Vec<bool> = (0..n).map(|x| jump_closure(space, &d0, x).len() < n).collect();
    let some_class_proper = proper.iter().any(|&p| p);
    let every_class_proper = proper.iter().all(|&p| p);
    let several_classes = QuotientStructure::of(space)?.class_count() > 1;
    let nonconstant_exists = enumeration.nonconstant_contractive_exists;
    let agree = nonconstant_exists == some_class_proper
        && some_class_proper == every_class_proper
        && every_class_proper == several_classes;
    Ok(TheoremCheck {
        enumeration,
        nonconstant_exists,
        some_class_proper,
        every_class_proper,
        several_classes,
        agree,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointCheck {
    pub images: Vec<usize>,
    pub k_min: ExtDistance,
    /// Iterations after which `f^(n)` is constant, by the exact bound.
    pub stabilises_after: Option<u64>,
    pub limit_point: Option<usize>,
    pub fixed_points: Vec<usize>,
    /// Every orbit reaches the limit point, which is fixed.
    pub orbits_converge: bool,
    pub holds: bool,
}

fn diameter_of(space: &MetricSpace, points: &[usize]) -> ExtDistance {
    let mut diam = ExtDistance::zero();
    for (i, &x) in points.iter().enumerate() {
        for &y in &points[i + 1..] {
            let v = space.distance(x, y).expect("table point");
            if v > diam {
                diam = v;
            }
        }
    }
    diam
}

/// Checks a contraction on a table space: its iterates become constant
/// within the exact bound, the constant is its only fixed point, and every
/// orbit ends there.
///
/// When the window diameter is infinite the bound is applied to the image
/// `f(X)`, which has finite diameter because `∞ < ∞` fails, plus one step.
pub fn check_contraction_fixed_point(space: &MetricSpace, images: &[usize]) -> FixedPointCheck {
    let n = images.len();
    let report = classify_images(space, images);
    let fixed_points: Vec<usize> = (0..n).filter(|&x| images[x] == x).collect();
    let d0 = min_positive_distance(space).map(|m| m.d0).ok();
    let stabilises_after = match (&d0, report.is_contraction) {
        (_, false) => None,
        (None, true) => Some(0),
        (Some(d0), true) => {
            let diam = space.diameter();
            if diam.is_finite() {
                n0_bound(&report.k_min, &diam, d0)
            } else {
                let mut range: Vec<usize> = images.to_vec();
                range.sort_unstable();
                range.dedup();
                n0_bound(&report.k_min, &diameter_of(space, &range), d0).map(|b| b + 1)
            }
        }
    };
    let limit_point = stabilises_after.and_then(|steps| {
        let iterate: Vec<usize> = (0..n)
            .map(|x| (0..steps).fold(x, |y, _| images[y]))
            .collect();
        iterate.windows(2).all(|w| w[0] == w[1]).then(|| iterate[0])
    });
    let orbits_converge = limit_point.is_some_and(|limit| {
        images[limit] == limit
            && (0..n).all(|start| {
                let mut x = start;
                for _ in 0..=n {
                    x = images[x];
                }
                x == limit
            })
    });
    let holds = report.is_contraction
        && orbits_converge
        && fixed_points.len() == 1
        && Some(fixed_points[0]) == limit_point;
    FixedPointCheck {
        images: images.to_vec(),
        k_min: report.k_min,
        stabilises_after,
        limit_point,
        fixed_points,
        orbits_converge,
        holds,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemarkCheck {
    pub contractive_maps: usize,
    /// Contractive maps that fail any of the checks.
    pub failures: Vec<FixedPointCheck>,
    pub holds: bool,
}

/// On a finite space every contractive map is a contraction whose iterates
/// collapse onto its unique fixed point.
pub fn verify_finite_range_remark(space: &MetricSpace, cap: usize) -> Result<RemarkCheck> {
    let maps = contractive_maps(space, cap)?;
    let failures: Vec<FixedPointCheck> = maps
        .par_iter()
        .map(|v| check_contraction_fixed_point(space, &v.images))
        .filter(|c| !c.holds)
        .collect();
    Ok(RemarkCheck { contractive_maps: maps.len(), holds: failures.is_empty(), failures })
}

/// Shortest-path closure `d(x,y) ← min(d(x,y), d(x,z) + d(z,y))`.
pub fn min_plus_closure(rows: &mut [Vec<ExtDistance>]) {
    let n = rows.len();
    for z in 0..n {
        for x in 0..n {
            for y in 0..n {
                let via = &rows[x][z] + &rows[z][y];
                if via < rows[x][y] {
                    rows[x][y] = via;
                }
            }
        }
    }
}

/// Random small rational spaces, repaired into metrics by closure.
#[derive(Clone, Debug)]
pub struct SpaceGenerator {
    pub min_points: usize,
    pub max_points: usize,
    pub max_numer: u64,
    pub max_denom: u64,
    /// Chance, in percent, that a pair starts at infinite distance.
    pub infinity_percent: u32,
}

impl Default for SpaceGenerator {
    fn default() -> Self {
        SpaceGenerator { min_points: 2, max_points: 5, max_numer: 6, max_denom: 3, infinity_percent: 10 }
    }
}

impl SpaceGenerator {
    pub fn generate<R: Rng>(&self, rng: &mut R) -> MetricSpace {
        loop {
            let n = rng.gen_range(self.min_points..=self.max_points);
            let mut rows = vec![vec![ExtDistance::zero(); n]; n];
            for x in 0..n {
                for y in x + 1..n {
                    let v = if rng.gen_range(0..100) < self.infinity_percent {
                        ExtDistance::INFINITY
                    } else {
                        ExtDistance::ratio(rng.gen_range(1..=self.max_numer), rng.gen_range(1..=self.max_denom))
                    };
                    rows[x][y] = v.clone();
                    rows[y][x] = v;
                }
            }
            min_plus_closure(&mut rows);
            let space = MetricSpace::from_rows(rows).expect("square table");
            assert!(verify_metric_axioms(&space).passed, "closure yields a metric");
            if min_positive_distance(&space).is_ok() {
                return space;
            }
        }
    }
}

/// A random space on `n` points whose off-diagonal distances are pairwise
/// distinct, drawn from `[1, 2)` with denominator `resolution`.
pub fn distinct_distance_space<R: Rng>(rng: &mut R, n: usize, resolution: u64) -> MetricSpace {
    let pairs = n * (n - 1) / 2;
    assert!(resolution as usize >= pairs, "not enough distinct values");
    let mut offsets: Vec<u64> = (0..resolution).collect();
    offsets.shuffle(rng);
    let mut values = offsets.into_iter().take(pairs);
    let mut rows = vec![vec![ExtDistance::zero(); n]; n];
    for x in 0..n {
        for y in x + 1..n {
            let v = ExtDistance::ratio(resolution + values.next().unwrap(), resolution);
            rows[x][y] = v.clone();
            rows[y][x] = v;
        }
    }
    // Values in [1, 2) already satisfy the triangle inequality.
    min_plus_closure(&mut rows);
    MetricSpace::from_rows(rows).expect("square table")
}

/// Every axiom-valid symmetric table on `n` points with off-diagonal
/// entries from `values` and a finite minimal distance.
pub fn spaces_over(n: usize, values: &[ExtDistance]) -> Vec<MetricSpace> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
    let total = (values.len() as u64).pow(pairs.len() as u32);
    (0..total)
        .into_par_iter()
        .filter_map(|mut index| {
            let mut rows = vec![vec![ExtDistance::zero(); n]; n];
            for &(x, y) in &pairs {
                let v = values[(index % values.len() as u64) as usize].clone();
                index /= values.len() as u64;
                rows[x][y] = v.clone();
                rows[y][x] = v;
            }
            let space = MetricSpace::from_rows(rows).ok()?;
            (verify_metric_axioms(&space).passed && (n < 2 || min_positive_distance(&space).is_ok()))
                .then_some(space)
        })
        .collect()
}

/// A random graph on `2..=max_vertices` vertices with at least one edge.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize) -> Graph {
    let n = rng.gen_range(2..=max_vertices);
    let density = rng.gen_range(5..60);
    loop {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_range(0..100) < density {
                    g.add_edge(u, v).expect("valid edge");
                }
            }
        }
        if g.edge_count() > 0 {
            return g;
        }
    }
}
