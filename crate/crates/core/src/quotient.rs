//! The relation "reachable by finitely many jumps of length exactly `d0`",
//! its classes, and the quotient distance between classes.

use std::collections::VecDeque;

use serde::Serialize;

use crate::distance::ExtDistance;
use crate::error::Result;
use crate::metric::{min_positive_distance, MetricSpace, MinimalDistance};
use crate::partition::DisjointSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientStructure {
    pub window_points: usize,
    pub d0: ExtDistance,
    /// Unordered pairs at distance exactly `d0`, lexicographic.
    pub minimal_pairs: Vec<(usize, usize)>,
    /// Sorted classes, ordered by least element.
    pub classes: Vec<Vec<usize>>,
    #[serde(skip)]
    pub class_of: Vec<usize>,
    /// `quotient_d[c1][c2]`: minimum of `d` over representatives.
    pub quotient_d: Vec<Vec<ExtDistance>>,
}

/// Joins the endpoints of every minimal pair; classes are the resulting
/// components. `minimal` must come from [`min_positive_distance`] on `space`.
pub fn build_quotient(space: &MetricSpace, minimal: &MinimalDistance) -> QuotientStructure {
    let n = space.len();
    let mut sets = DisjointSet::singletons(n);
    for &(x, y) in &minimal.pairs {
        sets.union(x, y);
    }
    let classes = sets.blocks();
    let mut class_of = vec![0; n];
    for (c, members) in classes.iter().enumerate() {
        for &x in members {
            class_of[x] = c;
        }
    }

    let k = classes.len();
    let mut quotient_d = vec![vec![ExtDistance::zero(); k]; k];
    let mut seen = vec![vec![false; k]; k];
    for x in 0..n {
        for y in x + 1..n {
            let (cx, cy) = (class_of[x], class_of[y]);
            if cx == cy {
                continue;
            }
            let v = space.dist(x, y);
            if !seen[cx][cy] || *v < quotient_d[cx][cy] {
                seen[cx][cy] = true;
                seen[cy][cx] = true;
                quotient_d[cx][cy] = v.clone().into_owned();
                quotient_d[cy][cx] = v.into_owned();
            }
        }
    }

    QuotientStructure {
        window_points: n,
        d0: minimal.d0.clone(),
        minimal_pairs: minimal.pairs.clone(),
        classes,
        class_of,
        quotient_d,
    }
}

impl QuotientStructure {
    /// Computes `d0` and the quotient in one go.
    pub fn of(space: &MetricSpace) -> Result<Self> {
        let minimal = min_positive_distance(space)?;
        Ok(build_quotient(space, &minimal))
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn quotient_distance(&self, c1: usize, c2: usize) -> &ExtDistance {
        &self.quotient_d[c1][c2]
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// A chain `x = x0, …, xn = y` with every step a minimal pair, or `None`
    /// when `x` and `y` lie in different classes. Breadth-first, so the chain
    /// is as short as possible.
    pub fn witness_chain(&self, x: usize, y: usize) -> Option<Vec<usize>> {
        if self.class_of[x] != self.class_of[y] {
            return None;
        }
        let n = self.window_points;
        let mut adjacent = vec![Vec::new(); n];
        for &(a, b) in &self.minimal_pairs {
            adjacent[a].push(b);
            adjacent[b].push(a);
        }
        let mut parent = vec![usize::MAX; n];
        parent[x] = x;
        let mut queue = VecDeque::from([x]);
        while let Some(u) = queue.pop_front() {
            if u == y {
                break;
            }
            for &v in &adjacent[u] {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        let mut chain = vec![y];
        let mut cur = y;
        while cur != x {
            cur = parent[cur];
            chain.push(cur);
        }
        chain.reverse();
        Some(chain)
    }

    /// First class triple `(a, b, c)` with `d~(a,b) > d~(a,c) + d~(b,c)`.
    /// The quotient distance need not be a metric, so this is checked per
    /// instance.
    pub fn triangle_violation(&self) -> Option<(usize, usize, usize)> {
        let k = self.class_count();
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    let bound = &self.quotient_d[a][c] + &self.quotient_d[b][c];
                    if self.quotient_d[a][b] > bound {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
}
