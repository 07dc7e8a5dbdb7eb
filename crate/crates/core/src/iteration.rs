//! Orbits of self-maps, fixed points and the stabilisation bound for
//! contractions on finite-range spaces.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::Serialize;

use crate::distance::ExtDistance;
use crate::error::{Error, Result};
use crate::maps::{classify_images, SelfMap};
use crate::metric::{min_positive_distance, MetricSpace};

/// Largest exponent tried when searching for the stabilisation bound.
pub const MAX_BOUND_SEARCH: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IterationOutcome {
    FixedPoint,
    /// The orbit revisited `orbit[entry]` without reaching a fixed point.
    Cycle { entry: usize, period: usize },
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IterationReport {
    pub window_points: usize,
    /// `start, f(start), f²(start), …`; a reached fixed point appears twice
    /// at the end.
    pub orbit: Vec<usize>,
    pub outcome: IterationOutcome,
    pub fixed_point: Option<usize>,
    /// Moves made before the orbit settled (or gave up).
    pub steps_taken: usize,
    /// Smallest `n` with `k_min^n · diam < d0`, for contractions with finite
    /// diameter.
    pub n0_bound: Option<u64>,
    /// Whether `f^(n0)` is constant over the window.
    pub n0_iterate_constant: Option<bool>,
    /// The constant value of `f^(n0)` when it is constant.
    pub limit_point: Option<usize>,
}

fn step(f: &SelfMap, space: &MetricSpace, x: usize) -> Result<usize> {
    match f.apply(x) {
        Some(y) if space.resolves(y) => Ok(y),
        Some(image) => Err(Error::ImageUnresolvable { point: x, image }),
        // A table map left its window.
        None => Err(Error::OutOfWindow { point: x, size: space.len() }),
    }
}

/// Follows the orbit of `start` for at most `max_steps` moves.
pub fn iterate_to_fixed_point(
    space: &MetricSpace,
    f: &SelfMap,
    start: usize,
    max_steps: usize,
) -> Result<IterationReport> {
    if start >= space.len() {
        return Err(Error::OutOfWindow { point: start, size: space.len() });
    }
    let images = f.images(space)?;

    let mut orbit = vec![start];
    let mut seen = HashMap::from([(start, 0usize)]);
    let mut outcome = IterationOutcome::BudgetExhausted;
    let mut fixed_point = None;
    let mut steps_taken = 0;
    loop {
        let x = *orbit.last().unwrap();
        let y = step(f, space, x)?;
        if y == x {
            orbit.push(y);
            outcome = IterationOutcome::FixedPoint;
            fixed_point = Some(x);
            break;
        }
        if steps_taken == max_steps {
            break;
        }
        orbit.push(y);
        steps_taken += 1;
        if let Some(&entry) = seen.get(&y) {
            outcome = IterationOutcome::Cycle { entry, period: orbit.len() - 1 - entry };
            break;
        }
        seen.insert(y, orbit.len() - 1);
    }

    let n0_bound = stabilisation_bound(space, &images);
    let (n0_iterate_constant, limit_point) = match n0_bound {
        Some(n0) => match constant_iterate(space, f, n0)? {
            Some(value) => (Some(true), Some(value)),
            None => (Some(false), None),
        },
        None => (None, None),
    };

    Ok(IterationReport {
        window_points: space.len(),
        orbit,
        outcome,
        fixed_point,
        steps_taken,
        n0_bound,
        n0_iterate_constant,
        limit_point,
    })
}

/// Smallest `n ≥ 1` with `k^n · diam < d0`.
///
/// A floating-point estimate picks the starting exponent; the answer is
/// then confirmed exactly. `None` when `k ≥ 1`, the diameter is infinite,
/// the window has fewer than two points, or the bound exceeds
/// `MAX_BOUND_SEARCH`.
pub fn n0_bound(k: &ExtDistance, diameter: &ExtDistance, d0: &ExtDistance) -> Option<u64> {
    let (k, diam, d0) = (k.as_rational()?, diameter.as_rational()?, d0.as_rational()?);
    if *k >= BigRational::one() {
        return None;
    }
    if k.is_zero() || k.clone() * diam < *d0 {
        return Some(1);
    }
    let below = |n: u64| -> bool { Pow::pow(k, n) * diam < *d0 };
    let estimate = match (k.to_f64(), diam.to_f64(), d0.to_f64()) {
        (Some(k), Some(diam), Some(d0)) if k > 0.0 && diam > 0.0 && d0 > 0.0 => {
            ((d0 / diam).ln() / k.ln()).ceil()
        }
        _ => 1.0,
    };
    if !estimate.is_finite() || estimate > MAX_BOUND_SEARCH as f64 * 2.0 {
        return None;
    }
    let mut n = (estimate.max(2.0) as u64).min(MAX_BOUND_SEARCH);
    while n > 1 && below(n - 1) {
        n -= 1;
    }
    while !below(n) {
        if n == MAX_BOUND_SEARCH {
            return None;
        }
        n += 1;
    }
    Some(n)
}

fn stabilisation_bound(space: &MetricSpace, images: &[usize]) -> Option<u64> {
    if space.len() < 2 || images.iter().any(|&y| y >= space.len()) {
        return None;
    }
    let d0 = min_positive_distance(space).ok()?.d0;
    let report = classify_images(space, images);
    if !report.is_contraction {
        return None;
    }
    n0_bound(&report.k_min, &space.diameter(), &d0)
}

/// The common value of `f^(n)` over the window, if it is constant.
fn constant_iterate(space: &MetricSpace, f: &SelfMap, n: u64) -> Result<Option<usize>> {
    let mut common = None;
    for x in 0..space.len() {
        let mut y = x;
        for _ in 0..n {
            y = step(f, space, y)?;
        }
        match common {
            None => common = Some(y),
            Some(c) if c != y => return Ok(None),
            _ => {}
        }
    }
    Ok(common)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointReport {
    pub window_points: usize,
    pub fixed_points: Vec<usize>,
    pub is_contractive: bool,
}

/// All window points with `f(x) = x`. A contractive map has at most one;
/// finding two is reported as an error.
pub fn check_fixed_point_uniqueness(space: &MetricSpace, f: &SelfMap) -> Result<FixedPointReport> {
    let images = f.images(space)?;
    let fixed_points: Vec<usize> = (0..images.len()).filter(|&x| images[x] == x).collect();
    let is_contractive = classify_images(space, &images).is_contractive;
    if is_contractive && fixed_points.len() > 1 {
        return Err(Error::MultipleFixedPoints(fixed_points));
    }
    Ok(FixedPointReport { window_points: space.len(), fixed_points, is_contractive })
}
