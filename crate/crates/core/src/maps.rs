//! Self-maps and their classification as constant, contraction or contractive.

use serde::Serialize;

use crate::distance::ExtDistance;
use crate::error::{Error, Result};
use crate::metric::MetricSpace;
use crate::rules::MapRule;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelfMap {
    /// Images of the window points `0, 1, …`, in order.
    Table(Vec<usize>),
    Rule(MapRule),
}

impl SelfMap {
    pub fn constant(value: usize, len: usize) -> Self {
        SelfMap::Table(vec![value; len])
    }

    /// Images of every window point, checked for totality and resolvability.
    pub fn images(&self, space: &MetricSpace) -> Result<Vec<usize>> {
        let images = match self {
            SelfMap::Table(images) => {
                if images.len() != space.len() {
                    return Err(Error::MapNotTotal { expected: space.len(), got: images.len() });
                }
                images.clone()
            }
            SelfMap::Rule(rule) => (0..space.len()).map(|x| rule.image(x)).collect(),
        };
        if let Some((point, &image)) = images.iter().enumerate().find(|(_, &i)| !space.resolves(i)) {
            return Err(Error::ImageUnresolvable { point, image });
        }
        Ok(images)
    }

    /// Image of a single point. Table maps are only defined on the window.
    pub fn apply(&self, x: usize) -> Option<usize> {
        match self {
            SelfMap::Table(images) => images.get(x).copied(),
            SelfMap::Rule(rule) => Some(rule.image(x)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub window_points: usize,
    pub is_constant: bool,
    pub is_contractive: bool,
    /// Lexicographically smallest pair `x < y` with `d(f(x),f(y)) ≥ d(x,y)`.
    pub violating_pair: Option<(usize, usize)>,
    /// Largest ratio `d(f(x),f(y)) / d(x,y)` over distinct window pairs.
    pub k_min: ExtDistance,
    pub is_contraction: bool,
}

/// Classifies `f` over the window of `space`.
pub fn classify_map(space: &MetricSpace, f: &SelfMap) -> Result<ClassificationReport> {
    let images = f.images(space)?;
    Ok(classify_images(space, &images))
}

/// Classification of a map given by its window images, which must resolve.
pub fn classify_images(space: &MetricSpace, images: &[usize]) -> ClassificationReport {
    let n = images.len();
    let mut violating_pair = None;
    let mut k_min = ExtDistance::zero();
    for x in 0..n {
        for y in x + 1..n {
            let (fx, fy) = (images[x], images[y]);
            if fx == fy {
                continue;
            }
            let image_d = space.dist(fx, fy);
            let domain_d = space.dist(x, y);
            if violating_pair.is_none() && !(*image_d < *domain_d) {
                violating_pair = Some((x, y));
            }
            let ratio = ExtDistance::contraction_ratio(&image_d, &domain_d);
            if ratio > k_min {
                k_min = ratio;
            }
        }
    }
    let is_contraction = k_min < ExtDistance::one();
    ClassificationReport {
        window_points: n,
        is_constant: images.windows(2).all(|w| w[0] == w[1]),
        is_contractive: violating_pair.is_none(),
        violating_pair,
        k_min,
        is_contraction,
    }
}

/// Contractivity alone, stopping at the first uncontracted pair.
pub fn is_contractive_images(space: &MetricSpace, images: &[usize]) -> bool {
    let n = images.len();
    (0..n).all(|x| {
        (x + 1..n).all(|y| {
            let (fx, fy) = (images[x], images[y]);
            fx == fy || *space.dist(fx, fy) < *space.dist(x, y)
        })
    })
}
