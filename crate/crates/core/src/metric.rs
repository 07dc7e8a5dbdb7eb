//! Discrete metric spaces: explicit tables and rule-based spaces on ℕ
//! analysed over a finite window.

use std::borrow::Cow;

use serde::Serialize;

use crate::distance::ExtDistance;
use crate::error::{Error, Result};
use crate::rules::SpaceRule;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceKind {
    /// Row-major `n × n` table.
    Table { points: usize, d: Vec<ExtDistance> },
    /// A distance rule on ℕ; the window is the points `0..=max_index`.
    Rule { rule: SpaceRule, max_index: usize },
}

/// A metric space restricted to a finite window of points `0..len()`.
///
/// Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricSpace {
    kind: SpaceKind,
}

impl MetricSpace {
    /// Builds a table space. Rows must be square; entries are nonnegative by
    /// construction of [`ExtDistance`]. Asymmetric or zero off-diagonal
    /// entries are accepted here and reported by [`verify_metric_axioms`].
    pub fn from_rows(rows: Vec<Vec<ExtDistance>>) -> Result<Self> {
        let points = rows.len();
        if points == 0 {
            return Err(Error::EmptyWindow);
        }
        let mut d = Vec::with_capacity(points * points);
        for (row, entries) in rows.into_iter().enumerate() {
            if entries.len() != points {
                return Err(Error::NonSquare { row, len: entries.len(), expected: points });
            }
            d.extend(entries);
        }
        Ok(MetricSpace { kind: SpaceKind::Table { points, d } })
    }

    /// Builds a symmetric table from a function on `x < y` pairs.
    pub fn from_fn(points: usize, mut dist: impl FnMut(usize, usize) -> ExtDistance) -> Result<Self> {
        if points == 0 {
            return Err(Error::EmptyWindow);
        }
        let mut d = vec![ExtDistance::zero(); points * points];
        for x in 0..points {
            for y in x + 1..points {
                let v = dist(x, y);
                d[y * points + x] = v.clone();
                d[x * points + y] = v;
            }
        }
        Ok(MetricSpace { kind: SpaceKind::Table { points, d } })
    }

    /// A rule space analysed on the window `{0, …, max_index}`.
    pub fn from_rule(rule: SpaceRule, max_index: usize) -> Self {
        MetricSpace { kind: SpaceKind::Rule { rule, max_index } }
    }

    pub fn kind(&self) -> &SpaceKind {
        &self.kind
    }

    pub fn is_table(&self) -> bool {
        matches!(self.kind, SpaceKind::Table { .. })
    }

    /// Number of points in the window.
    pub fn len(&self) -> usize {
        match &self.kind {
            SpaceKind::Table { points, .. } => *points,
            SpaceKind::Rule { max_index, .. } => max_index + 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether `p` has distances in this space. Rule spaces answer for every
    /// natural number, so map images may leave the window.
    pub fn resolves(&self, p: usize) -> bool {
        match &self.kind {
            SpaceKind::Table { points, .. } => p < *points,
            SpaceKind::Rule { .. } => true,
        }
    }

    pub fn distance(&self, x: usize, y: usize) -> Result<ExtDistance> {
        for p in [x, y] {
            if !self.resolves(p) {
                return Err(Error::OutOfWindow { point: p, size: self.len() });
            }
        }
        Ok(self.dist(x, y).into_owned())
    }

    /// Unchecked lookup; callers guarantee both points resolve.
    pub(crate) fn dist(&self, x: usize, y: usize) -> Cow<'_, ExtDistance> {
        match &self.kind {
            SpaceKind::Table { points, d } => Cow::Borrowed(&d[x * points + y]),
            SpaceKind::Rule { rule, .. } => Cow::Owned(rule.distance(x, y)),
        }
    }

    /// The table space on `points` (in the given order) with the restricted distance.
    pub fn restrict(&self, points: &[usize]) -> Result<MetricSpace> {
        if points.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&p) = points.iter().find(|&&p| !self.resolves(p)) {
            return Err(Error::OutOfWindow { point: p, size: self.len() });
        }
        let n = points.len();
        let mut d = Vec::with_capacity(n * n);
        for &x in points {
            for &y in points {
                d.push(self.dist(x, y).into_owned());
            }
        }
        Ok(MetricSpace { kind: SpaceKind::Table { points: n, d } })
    }

    /// Explicit rows over the window.
    pub fn rows(&self) -> Vec<Vec<ExtDistance>> {
        (0..self.len())
            .map(|x| (0..self.len()).map(|y| self.dist(x, y).into_owned()).collect())
            .collect()
    }

    /// Largest distance over window pairs.
    pub fn diameter(&self) -> ExtDistance {
        let mut diam = ExtDistance::zero();
        for x in 0..self.len() {
            for y in x + 1..self.len() {
                let v = self.dist(x, y);
                if *v > diam {
                    diam = v.into_owned();
                }
            }
        }
        diam
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// `d(x,x) ≠ 0`, or `d(x,y) = 0` with `x ≠ y`.
    Identity { x: usize, y: usize },
    Symmetry { x: usize, y: usize },
    /// `d(x,y) > d(x,z) + d(y,z)`.
    Triangle { x: usize, y: usize, z: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub window_points: usize,
    pub passed: bool,
    pub violation: Option<AxiomViolation>,
}

/// Checks identity of indiscernibles, symmetry and the triangle inequality
/// `d(x,y) ≤ d(x,z) + d(y,z)` over all ordered window tuples.
///
/// Axioms are checked in that order; within each, the lexicographically
/// smallest violating tuple is reported.
pub fn verify_metric_axioms(space: &MetricSpace) -> AxiomReport {
    let n = space.len();
    let report = |violation: Option<AxiomViolation>| AxiomReport {
        window_points: n,
        passed: violation.is_none(),
        violation,
    };
    for x in 0..n {
        for y in 0..n {
            if space.dist(x, y).is_zero() != (x == y) {
                return report(Some(AxiomViolation::Identity { x, y }));
            }
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if space.dist(x, y) != space.dist(y, x) {
                return report(Some(AxiomViolation::Symmetry { x, y }));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let dxy = space.dist(x, y);
            if dxy.is_zero() {
                continue;
            }
            for z in 0..n {
                if *dxy > &*space.dist(x, z) + &*space.dist(y, z) {
                    return report(Some(AxiomViolation::Triangle { x, y, z }));
                }
            }
        }
    }
    report(None)
}

/// The minimal positive distance `d0` and every unordered pair attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalDistance {
    pub d0: ExtDistance,
    /// Pairs `(x, y)` with `x < y`, sorted lexicographically.
    pub pairs: Vec<(usize, usize)>,
}

/// Scans all distinct window pairs for the minimum distance.
///
/// Errors with `NoFiniteDistance` when every pair is at infinite distance,
/// and with `ZeroDistance` when distinct points sit at distance 0 (no pair
/// may lie strictly below `d0`).
pub fn min_positive_distance(space: &MetricSpace) -> Result<MinimalDistance> {
    let n = space.len();
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let mut best: Option<ExtDistance> = None;
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let v = space.dist(x, y);
            if v.is_zero() {
                return Err(Error::ZeroDistance(x, y));
            }
            if !v.is_finite() {
                continue;
            }
            match &best {
                Some(b) if *v > *b => {}
                Some(b) if *v == *b => pairs.push((x, y)),
                _ => {
                    best = Some(v.into_owned());
                    pairs.clear();
                    pairs.push((x, y));
                }
            }
        }
    }
    let d0 = best.ok_or(Error::NoFiniteDistance)?;
    Ok(MinimalDistance { d0, pairs })
}
