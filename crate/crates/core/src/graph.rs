//! Nonoriented graphs under the natural (edge-count) distance.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::distance::ExtDistance;
use crate::error::{Error, Result};
use crate::metric::{min_positive_distance, MetricSpace};
use crate::partition::DisjointSet;
use crate::quotient::{build_quotient, QuotientStructure};
use crate::theorem::decide_nonconstant_exists;

/// A simple nonoriented graph on vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    /// Stored as `(u, v)` with `u < v`.
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph { vertex_count, edges: BTreeSet::new() }
    }

    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; the reverse direction is implied.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        for vertex in [u, v] {
            if vertex >= self.vertex_count {
                return Err(Error::VertexOutOfRange { vertex, count: self.vertex_count });
            }
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adjacent = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adjacent[u].push(v);
            adjacent[v].push(u);
        }
        adjacent
    }
}

/// All-pairs shortest path lengths by one breadth-first search per vertex;
/// unreachable pairs are at infinite distance.
pub fn natural_distance(g: &Graph) -> Result<MetricSpace> {
    let n = g.vertex_count;
    let adjacent = g.adjacency();
    let mut rows = Vec::with_capacity(n);
    for source in 0..n {
        let mut hops: Vec<Option<u64>> = vec![None; n];
        hops[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let next = hops[u].map(|h| h + 1);
            for &v in &adjacent[u] {
                if hops[v].is_none() {
                    hops[v] = next;
                    queue.push_back(v);
                }
            }
        }
        rows.push(
            hops.into_iter()
                .map(|h| h.map_or(ExtDistance::INFINITY, ExtDistance::from_integer))
                .collect(),
        );
    }
    MetricSpace::from_rows(rows)
}

/// Connected components, each sorted, ordered by least vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut sets = DisjointSet::singletons(g.vertex_count);
    for (u, v) in g.edges() {
        sets.union(u, v);
    }
    sets.blocks()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubspace {
    /// Original vertex ids; point `i` of `space` is `vertices[i]`.
    pub vertices: Vec<usize>,
    pub space: MetricSpace,
    pub d0: ExtDistance,
}

/// The natural distance restricted to `subset`, with its own minimal
/// distance. Points are re-indexed in increasing vertex order.
pub fn induced_subspace(space: &MetricSpace, subset: &[usize]) -> Result<InducedSubspace> {
    let mut vertices = subset.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    let restricted = space.restrict(&vertices)?;
    let d0 = min_positive_distance(&restricted)?.d0;
    Ok(InducedSubspace { vertices, space: restricted, d0 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphDecision {
    pub exists: bool,
    pub components: usize,
    pub witness: Option<Vec<usize>>,
}

/// A graph carries a nonconstant contractive map iff it is disconnected.
pub fn decide_graph(g: &Graph) -> Result<GraphDecision> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let space = natural_distance(g)?;
    let minimal = min_positive_distance(&space)?;
    let quotient = build_quotient(&space, &minimal);
    let decision = decide_nonconstant_exists(&space, &quotient);
    Ok(GraphDecision {
        exists: decision.exists,
        components: connected_components(g).len(),
        witness: decision.witness,
    })
}

/// Quotient of the natural-distance space; classes are the components.
pub fn graph_quotient(g: &Graph) -> Result<QuotientStructure> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    QuotientStructure::of(&natural_distance(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{classify_map, SelfMap};

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn path_distances() {
        let s = natural_distance(&path(3)).unwrap();
        assert_eq!(s.distance(0, 2).unwrap(), ExtDistance::from_integer(2));
        assert_eq!(s.distance(0, 1).unwrap(), ExtDistance::one());
        assert_eq!(s.distance(1, 2).unwrap(), ExtDistance::one());
        assert_eq!(connected_components(&path(3)), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, count: 3 })
        );
    }

    #[test]
    fn components() {
        let triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(connected_components(&triangles), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(connected_components(&Graph::new(3)).len(), 3);
        let q = graph_quotient(&triangles).unwrap();
        assert_eq!(q.classes, connected_components(&triangles));
        assert_eq!(graph_quotient(&Graph::new(3)), Err(Error::NoEdges));
    }

    #[test]
    fn induced_cycle_opposite_corners() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let sub = induced_subspace(&natural_distance(&c4).unwrap(), &[2, 0]).unwrap();
        assert_eq!(sub.vertices, vec![0, 2]);
        assert_eq!(sub.d0, ExtDistance::from_integer(2));
        assert_eq!(QuotientStructure::of(&sub.space).unwrap().class_count(), 1);
    }

    #[test]
    fn induced_path_even_vertices() {
        let s = natural_distance(&path(5)).unwrap();
        let sub = induced_subspace(&s, &[0, 2, 4]).unwrap();
        assert_eq!(sub.d0, ExtDistance::from_integer(2));
        assert_eq!(sub.space.distance(0, 2).unwrap(), ExtDistance::from_integer(4));
        let q = QuotientStructure::of(&sub.space).unwrap();
        assert_eq!(q.classes, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn induced_component() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let sub = induced_subspace(&natural_distance(&g).unwrap(), &[2, 3]).unwrap();
        assert_eq!(QuotientStructure::of(&sub.space).unwrap().class_count(), 1);
        let lonely = induced_subspace(&natural_distance(&g).unwrap(), &[0, 2]);
        assert_eq!(lonely, Err(Error::NoFiniteDistance));
        assert_eq!(induced_subspace(&natural_distance(&g).unwrap(), &[]), Err(Error::EmptySubset));
    }

    #[test]
    fn decisions() {
        let connected = decide_graph(&path(4)).unwrap();
        assert!(!connected.exists);
        assert_eq!(connected.components, 1);

        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let d = decide_graph(&g).unwrap();
        assert!(d.exists);
        assert_eq!(d.witness, Some(vec![0, 0, 1, 1]));
        let space = natural_distance(&g).unwrap();
        let r = classify_map(&space, &SelfMap::Table(d.witness.unwrap())).unwrap();
        assert!(r.is_contractive && !r.is_constant);

        assert!(!decide_graph(&path(2)).unwrap().exists);
        assert_eq!(decide_graph(&Graph::new(3)), Err(Error::NoEdges));
    }
}
