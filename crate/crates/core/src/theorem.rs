//! Existence of nonconstant contractive maps, witness construction and the
//! lift of contractive maps to the quotient.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::maps::{classify_map, SelfMap};
use crate::metric::{min_positive_distance, MetricSpace};
use crate::quotient::{build_quotient, QuotientStructure};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub window_points: usize,
    pub exists: bool,
    pub class_count: usize,
    /// Window images of a nonconstant contractive map, when one exists.
    pub witness: Option<Vec<usize>>,
}

/// A nonconstant contractive map exists iff the quotient has more than one
/// class.
pub fn decide_nonconstant_exists(space: &MetricSpace, quotient: &QuotientStructure) -> Decision {
    let witness = construct_witness(space, quotient).ok().map(|f| match f {
        SelfMap::Table(images) => images,
        SelfMap::Rule(_) => unreachable!("witnesses are tables"),
    });
    Decision {
        window_points: space.len(),
        exists: quotient.class_count() > 1,
        class_count: quotient.class_count(),
        witness,
    }
}

/// Sends the class of `x0` to `x0` and everything else to `y0`, where
/// `(x0, y0)` is the smallest minimal pair. Every point outside `[x0]` is
/// farther than `d0` from every point of `[x0]`, so the map is contractive.
pub fn construct_witness(space: &MetricSpace, quotient: &QuotientStructure) -> Result<SelfMap> {
    if quotient.class_count() < 2 {
        return Err(Error::SingleClass);
    }
    let (x0, y0) = quotient.minimal_pairs[0];
    let home = quotient.class_of(x0);
    let images = (0..space.len())
        .map(|x| if quotient.class_of(x) == home { x0 } else { y0 })
        .collect();
    Ok(SelfMap::Table(images))
}

/// A contractive map read as a map from classes to points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientLift {
    /// `images[c]` is the common image of every point of class `c`.
    pub images: Vec<usize>,
    /// `d(φf(c1), φf(c2)) ≤ d~(c1, c2)` for every class pair.
    pub non_strict_holds: bool,
    /// Strict inequality for every pair of distinct classes.
    pub strict_holds: bool,
}

/// Lifts a contractive `f` to the quotient. A contractive map identifies the
/// endpoints of every minimal pair, so it is constant on each class.
pub fn quotient_lift(
    f: &SelfMap,
    space: &MetricSpace,
    quotient: &QuotientStructure,
) -> Result<QuotientLift> {
    let report = classify_map(space, f)?;
    if let Some((x, y)) = report.violating_pair {
        return Err(Error::NotContractive(x, y));
    }
    let images = f.images(space)?;
    let mut lifted = Vec::with_capacity(quotient.class_count());
    for class in &quotient.classes {
        let value = images[class[0]];
        if let Some(&x) = class.iter().find(|&&x| images[x] != value) {
            return Err(Error::NotClassConstant(x));
        }
        lifted.push(value);
    }

    let mut non_strict_holds = true;
    let mut strict_holds = true;
    let k = lifted.len();
    for c1 in 0..k {
        for c2 in c1 + 1..k {
            let image_d = space.dist(lifted[c1], lifted[c2]);
            let bound = quotient.quotient_distance(c1, c2);
            non_strict_holds &= *image_d <= *bound;
            strict_holds &= *image_d < *bound;
        }
    }
    Ok(QuotientLift { images: lifted, non_strict_holds, strict_holds })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryDecision {
    pub window_points: usize,
    /// True when exactly one unordered pair attains `d0` and there are more
    /// than two points.
    pub applicable: bool,
    pub exists: Option<bool>,
    pub witness: Option<Vec<usize>>,
    pub reason: Option<String>,
}

/// With a unique minimal pair `(x0, y0)` on more than two points, the class
/// of `x0` is `{x0, y0}`, so a nonconstant contractive map exists.
pub fn corollary_unique_minimal_pair(space: &MetricSpace) -> Result<CorollaryDecision> {
    let minimal = min_positive_distance(space)?;
    let not_applicable = |reason: String| CorollaryDecision {
        window_points: space.len(),
        applicable: false,
        exists: None,
        witness: None,
        reason: Some(reason),
    };
    if space.len() <= 2 {
        return Ok(not_applicable(format!("{} points; need more than 2", space.len())));
    }
    if minimal.pairs.len() != 1 {
        return Ok(not_applicable(format!(
            "{} pairs attain the minimal distance; need exactly one",
            minimal.pairs.len()
        )));
    }
    let quotient = build_quotient(space, &minimal);
    let decision = decide_nonconstant_exists(space, &quotient);
    Ok(CorollaryDecision {
        window_points: space.len(),
        applicable: true,
        exists: Some(decision.exists),
        witness: decision.witness,
        reason: None,
    })
}
