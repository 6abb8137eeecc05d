//! True twins: vertices with equal closed neighborhoods.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::interval::extreme_vertices;

/// Partition of `V` into maximal true-twin classes, ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinPartition {
    pub classes: Vec<VertexSet>,
    pub class_of: Vec<usize>,
}

impl TwinPartition {
    pub fn class(&self, v: Vertex) -> &VertexSet {
        &self.classes[self.class_of[v]]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Least member of each class, ascending.
    pub fn class_minima(&self) -> Vec<Vertex> {
        self.classes.iter().filter_map(VertexSet::min).collect()
    }
}

/// Groups vertices by their sorted closed neighborhood.
pub fn twin_classes(g: &Graph) -> TwinPartition {
    let mut by_key: HashMap<Vec<Vertex>, usize> = HashMap::new();
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut class_of = vec![0; g.n()];
    for v in g.vertices() {
        let mut key = g.neighbors(v).to_vec();
        let pos = key.partition_point(|&x| x < v);
        key.insert(pos, v);
        let id = *by_key.entry(key).or_insert_with(|| {
            classes.push(VertexSet::with_universe(g.n()));
            classes.len() - 1
        });
        classes[id].insert(v);
        class_of[v] = id;
    }
    // vertices are visited in ascending order, so classes are already ordered
    // by least member
    TwinPartition { classes, class_of }
}

/// `Ŝ`: the least member of `S ∩ T` for every class `T` meeting `S`.
pub fn representatives(p: &TwinPartition, s: &VertexSet) -> VertexSet {
    let mut seen = vec![false; p.classes.len()];
    let mut out = VertexSet::new();
    for v in s.iter() {
        let c = p.class_of[v];
        if !seen[c] {
            seen[c] = true;
            out.insert(v);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremeClasses {
    /// Indices of classes whose members are all extreme.
    pub classes: Vec<usize>,
    /// Classes with some but not all members extreme. Expected to stay empty;
    /// reported rather than assumed away.
    pub partial: Vec<usize>,
}

/// Twin classes made up entirely of weakly toll extreme vertices.
///
/// At most two such classes can exist in a connected graph; finding more is
/// reported as an internal error.
pub fn extreme_twin_classes(g: &Graph, p: &TwinPartition) -> Result<ExtremeClasses> {
    classify_extreme(g, p, &extreme_vertices(g))
}

/// [`extreme_twin_classes`] for a precomputed `ext(G)`.
pub fn classify_extreme(g: &Graph, p: &TwinPartition, ext: &VertexSet) -> Result<ExtremeClasses> {
    let mut classes = Vec::new();
    let mut partial = Vec::new();
    for (i, class) in p.classes.iter().enumerate() {
        let hits = class.iter().filter(|&v| ext.contains(v)).count();
        if hits == class.len() {
            classes.push(i);
        } else if hits > 0 {
            partial.push(i);
        }
    }
    if classes.len() > 2 && g.is_connected() && !crate::graph::is_complete(g) {
        return Err(Error::Internal(format!(
            "{} twin classes are fully extreme; at most 2 are possible",
            classes.len()
        )));
    }
    Ok(ExtremeClasses { classes, partial })
}
