//! Immutable simple undirected graphs over dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A set of vertex ids backed by a bitset.
///
/// Equality, hashing and ordering depend only on the members, never on the
/// allocated capacity, so sets built against different universes compare
/// as expected. Ordering is lexicographic on the ascending member list.
#[derive(Clone, Default)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// An empty set with room for vertices `0..n`.
    pub fn with_universe(n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    /// The full set `0..n`.
    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        if v >= self.bits.len() {
            self.bits.grow(v + 1);
        }
        !self.bits.put(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        if v < self.bits.len() && self.bits.contains(v) {
            self.bits.set(v, false);
            true
        } else {
            false
        }
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<Vertex> {
        self.bits.minimum()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.iter().eq(other.iter())
    }
}

impl Eq for VertexSet {}

impl Hash for VertexSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for v in self.iter() {
            v.hash(state);
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut set = VertexSet::new();
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(vs: [Vertex; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<Vertex>::deserialize(deserializer)?;
        Ok(members.into_iter().collect())
    }
}

/// Simple undirected graph. Adjacency lists are sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge iterator. Parallel edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Argument(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::Argument(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph { adj, m })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Open neighborhood, ascending.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter().copied().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn open_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut set = VertexSet::with_universe(self.n());
        for &x in &self.adj[v] {
            set.insert(x);
        }
        set
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut set = self.open_neighborhood(v);
        set.insert(v);
        set
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Subgraph induced by `keep`, relabelled densely in ascending order.
    /// Returns the graph and the map from new ids to old ids.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = keep.iter().filter(|&v| v < self.n()).collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut adj = vec![Vec::new(); old.len()];
        for (i, &v) in old.iter().enumerate() {
            adj[i] = self.adj[v]
                .iter()
                .filter_map(|&x| (new_id[x] != usize::MAX).then_some(new_id[x]))
                .collect();
        }
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        (Graph { adj, m }, old)
    }

    /// Validates that every member of `s` is a vertex of this graph.
    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n()) {
            Some(v) => Err(Error::Argument(format!(
                "vertex {v} out of range for n = {}",
                self.n()
            ))),
            None => Ok(()),
        }
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::Argument(format!(
                "vertex {v} out of range for n = {}",
                self.n()
            )))
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || connected_components(self, &VertexSet::new()).len() == 1
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Pairs `(u, w)` with `u < w` and `uw` not an edge, lexicographic.
    pub fn non_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            ((u + 1)..self.n())
                .filter(move |&w| !self.has_edge(u, w))
                .map(move |w| (u, w))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Connected components of `g - removed`, each sorted, ordered by least member.
pub fn connected_components(g: &Graph, removed: &VertexSet) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] || removed.contains(start) {
            continue;
        }
        let mut comp = VertexSet::with_universe(n);
        seen[start] = true;
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            comp.insert(x);
            for &y in g.neighbors(x) {
                if !seen[y] && !removed.contains(y) {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// True iff every pair of members is adjacent.
pub fn is_clique(g: &Graph, s: &VertexSet) -> bool {
    let members = s.to_vec();
    members
        .iter()
        .enumerate()
        .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

pub fn is_complete(g: &Graph) -> bool {
    let n = g.n();
    g.m() == n * n.saturating_sub(1) / 2
}

/// Maximum clique by branch and bound with a greedy-colouring bound.
///
/// Vertices are visited in descending degree order, ties broken by id, so the
/// returned clique is reproducible.
pub fn max_clique(g: &Graph) -> VertexSet {
    let n = g.n();
    if n == 0 {
        return VertexSet::new();
    }
    let rows: Vec<FixedBitSet> = g
        .vertices()
        .map(|v| {
            let mut row = FixedBitSet::with_capacity(n);
            for &x in g.neighbors(v) {
                row.insert(x);
            }
            row
        })
        .collect();
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut search = CliqueSearch {
        rows: &rows,
        current: Vec::new(),
        best: vec![order[0]],
    };
    search.expand(order);
    search.best.into_iter().collect()
}

struct CliqueSearch<'a> {
    rows: &'a [FixedBitSet],
    current: Vec<Vertex>,
    best: Vec<Vertex>,
}

impl CliqueSearch<'_> {
    /// Greedy sequential colouring. Returns the candidates regrouped by colour
    /// class and the colour number (1-based) of each position.
    fn colour_sort(&self, candidates: &[Vertex]) -> (Vec<Vertex>, Vec<usize>) {
        let mut classes: Vec<Vec<Vertex>> = Vec::new();
        for &v in candidates {
            match classes
                .iter_mut()
                .find(|class| class.iter().all(|&u| !self.rows[v].contains(u)))
            {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut sorted = Vec::with_capacity(candidates.len());
        let mut colours = Vec::with_capacity(candidates.len());
        for (c, class) in classes.into_iter().enumerate() {
            for v in class {
                sorted.push(v);
                colours.push(c + 1);
            }
        }
        (sorted, colours)
    }

    fn expand(&mut self, candidates: Vec<Vertex>) {
        let (sorted, colours) = self.colour_sort(&candidates);
        for idx in (0..sorted.len()).rev() {
            if self.current.len() + colours[idx] <= self.best.len() {
                return;
            }
            let v = sorted[idx];
            self.current.push(v);
            let next: Vec<Vertex> = sorted[..idx]
                .iter()
                .copied()
                .filter(|&u| self.rows[v].contains(u))
                .collect();
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn bowtie() -> Graph {
        generators::bowtie()
    }

    #[test]
    fn components_of_path_minus_vertex() {
        let p4 = generators::path(4);
        let comps = connected_components(&p4, &VertexSet::from([1]));
        assert_eq!(comps, vec![VertexSet::from([0]), VertexSet::from([2, 3])]);
    }

    #[test]
    fn components_all_removed() {
        let c5 = generators::cycle(5);
        assert!(connected_components(&c5, &c5.all_vertices()).is_empty());
        assert_eq!(connected_components(&c5, &VertexSet::new()).len(), 1);
        assert_eq!(connected_components(&c5, &VertexSet::new())[0].len(), 5);
    }

    #[test]
    fn clique_checks() {
        let k3 = generators::complete(3);
        let p4 = generators::path(4);
        assert!(is_clique(&k3, &k3.all_vertices()));
        assert!(!is_clique(&p4, &VertexSet::from([0, 2])));
        assert!(is_clique(&p4, &VertexSet::from([3])));
        assert!(is_clique(&p4, &VertexSet::new()));
    }

    #[test]
    fn completeness() {
        assert!(is_complete(&generators::complete(5)));
        assert!(!is_complete(&generators::path(4)));
        assert!(is_complete(&generators::complete(1)));
    }

    #[test]
    fn max_clique_small() {
        assert_eq!(max_clique(&generators::complete(4)).len(), 4);
        assert_eq!(max_clique(&generators::cycle(5)).len(), 2);
        let bt = max_clique(&bowtie());
        assert_eq!(bt.len(), 3);
        assert!(is_clique(&bowtie(), &bt));
        assert_eq!(max_clique(&Graph::empty(3)).len(), 1);
    }

    #[test]
    fn from_edges_rejects_loops_and_collapses_duplicates() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn vertex_set_equality_ignores_capacity() {
        let mut a = VertexSet::with_universe(100);
        a.insert(3);
        assert_eq!(a, VertexSet::from([3]));
        assert!(VertexSet::from([1, 2]) < VertexSet::from([1, 3]));
        assert!(VertexSet::from([1, 2]).is_subset(&VertexSet::from([1, 2, 70])));
        assert!(!VertexSet::from([1, 70]).is_subset(&VertexSet::with_universe(3)));
    }

    #[test]
    fn induced_relabels() {
        let p4 = generators::path(4);
        let (h, map) = p4.induced(&VertexSet::from([1, 2, 3]));
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
