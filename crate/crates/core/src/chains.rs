//! Chains whose steps are at most `ε·d0`, and the window certificate that
//! every contraction is constant.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::distance::ExtDistance;
use crate::error::{Error, Result};
use crate::metric::{min_positive_distance, MetricSpace};

fn check_epsilon(eps: &BigRational) -> Result<()> {
    if *eps <= BigRational::one() {
        return Err(Error::InvalidEpsilon(ExtDistance::Finite(eps.clone()).to_string()));
    }
    Ok(())
}

fn check_point(space: &MetricSpace, p: usize) -> Result<()> {
    if p >= space.len() {
        return Err(Error::OutOfWindow { point: p, size: space.len() });
    }
    Ok(())
}

/// Breadth-first search over window steps of length at most `threshold`.
/// Neighbours are scanned in increasing index order; the search stops once
/// every target has been reached.
fn step_tree(space: &MetricSpace, source: usize, threshold: &ExtDistance, targets: &[usize]) -> Vec<usize> {
    let n = space.len();
    let mut parent = vec![usize::MAX; n];
    parent[source] = source;
    let mut remaining = targets.iter().filter(|&&t| t != source).count();
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        if remaining == 0 {
            break;
        }
        for v in 0..n {
            if parent[v] != usize::MAX || *space.dist(u, v) > *threshold {
                continue;
            }
            parent[v] = u;
            queue.push_back(v);
            if targets.contains(&v) {
                remaining -= 1;
            }
        }
    }
    parent
}

fn trace(parent: &[usize], source: usize, target: usize) -> Option<Vec<usize>> {
    if parent[target] == usize::MAX {
        return None;
    }
    let mut chain = vec![target];
    let mut cur = target;
    while cur != source {
        cur = parent[cur];
        chain.push(cur);
    }
    chain.reverse();
    Some(chain)
}

/// A shortest chain from `x` to `y` inside the window with every step at
/// most `eps · d0`, or `None` when no such chain exists.
pub fn epsilon_chain(space: &MetricSpace, x: usize, y: usize, eps: &BigRational) -> Result<Option<Vec<usize>>> {
    check_epsilon(eps)?;
    check_point(space, x)?;
    check_point(space, y)?;
    let d0 = min_positive_distance(space)?.d0;
    let threshold = ExtDistance::Finite(eps.clone()).mul(&d0);
    let parent = step_tree(space, x, &threshold, &[y]);
    Ok(trace(&parent, x, y))
}

/// The `ε` a contraction with modulus `k` must be chained at: `2 / (k + 1)`.
pub fn required_epsilon(k: &BigRational) -> BigRational {
    BigRational::from_integer(BigInt::from(2)) / (k + BigRational::one())
}

/// Largest modulus whose required `ε` is at least `eps`: `2/eps - 1`.
pub fn covered_modulus(eps: &BigRational) -> BigRational {
    BigRational::from_integer(BigInt::from(2)) / eps - BigRational::one()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EpsilonCheck {
    pub eps: ExtDistance,
    pub pairs_checked: usize,
    /// Probe pairs with no chain.
    pub failures: Vec<(usize, usize)>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub window_points: usize,
    pub d0: ExtDistance,
    pub probes: Vec<usize>,
    pub checks: Vec<EpsilonCheck>,
    /// Every probe pair is chained at every scheduled `ε`.
    pub hypothesis_on_window: bool,
    /// Contractions with modulus at most this value are forced constant on
    /// the probes by the smallest passing `ε`.
    pub covered_modulus: Option<ExtDistance>,
}

impl CertificateReport {
    /// Whether some passing `ε` is at most `2/(k+1)`.
    pub fn covers(&self, k: &BigRational) -> bool {
        let needed = ExtDistance::Finite(required_epsilon(k));
        self.checks.iter().any(|c| c.passed && c.eps <= needed)
    }
}

/// Checks, for each scheduled `ε` and each unordered pair of distinct probes,
/// whether an `ε`-chain joins them inside the window.
pub fn contractions_constant_certificate(
    space: &MetricSpace,
    probes: &[usize],
    eps_schedule: &[BigRational],
) -> Result<CertificateReport> {
    let d0 = min_positive_distance(space)?.d0;
    let mut probes = probes.to_vec();
    probes.sort_unstable();
    probes.dedup();
    for &p in &probes {
        check_point(space, p)?;
    }
    let mut checks = Vec::with_capacity(eps_schedule.len());
    for eps in eps_schedule {
        check_epsilon(eps)?;
        let threshold = ExtDistance::Finite(eps.clone()).mul(&d0);
        let mut failures = Vec::new();
        let mut pairs_checked = 0;
        for (i, &x) in probes.iter().enumerate() {
            let targets = &probes[i + 1..];
            if targets.is_empty() {
                break;
            }
            let parent = step_tree(space, x, &threshold, targets);
            for &y in targets {
                pairs_checked += 1;
                if parent[y] == usize::MAX {
                    failures.push((x, y));
                }
            }
        }
        checks.push(EpsilonCheck {
            eps: ExtDistance::Finite(eps.clone()),
            pairs_checked,
            passed: failures.is_empty(),
            failures,
        });
    }
    let hypothesis_on_window = checks.iter().all(|c| c.passed);
    let covered = checks
        .iter()
        .filter(|c| c.passed)
        .filter_map(|c| c.eps.as_rational())
        .min()
        .map(|eps| ExtDistance::Finite(covered_modulus(eps).max(BigRational::from_integer(0.into()))));
    Ok(CertificateReport {
        window_points: space.len(),
        d0,
        probes,
        checks,
        hypothesis_on_window,
        covered_modulus: covered,
    })
}
