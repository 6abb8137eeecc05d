//! Decomposition by clique minimal separators into maximal prime subgraphs
//! (atoms).
//!
//! A minimal elimination ordering is computed with MCS-M. Every clique
//! minimal separator of `G` is then the set of higher-numbered neighbors of
//! some vertex in the resulting minimal triangulation, so atoms are obtained
//! by scanning the ordering once and cutting along those sets that are cliques
//! of `G` and still separate the remaining graph.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{connected_components, is_clique, Graph, Vertex, VertexSet};

/// A minimal elimination ordering together with the higher neighbors of each
/// vertex in the induced minimal triangulation.
#[derive(Debug, Clone)]
pub struct EliminationOrdering {
    /// Vertices in elimination order.
    pub order: Vec<Vertex>,
    /// Triangulation neighbors eliminated after the vertex.
    pub higher: Vec<VertexSet>,
}

/// MCS-M. Ties in the maximum-weight choice go to the smallest id.
pub fn minimal_elimination_ordering(g: &Graph) -> EliminationOrdering {
    let n = g.n();
    let mut weight = vec![0i64; n];
    let mut numbered = vec![false; n];
    let mut picked = Vec::with_capacity(n);
    let mut higher = vec![VertexSet::with_universe(n); n];
    let mut dist = vec![i64::MAX; n];
    let mut heap = BinaryHeap::new();

    for _ in 0..n {
        let v = (0..n)
            .filter(|&x| !numbered[x])
            .max_by_key(|&x| (weight[x], Reverse(x)))
            .expect("an unnumbered vertex remains");

        // dist[u]: least achievable maximum weight over the interior of a path
        // from v to u through unnumbered vertices (-1 for a direct edge).
        dist.iter_mut().for_each(|d| *d = i64::MAX);
        for &x in g.neighbors(v) {
            if !numbered[x] {
                dist[x] = -1;
                heap.push(Reverse((-1i64, x)));
            }
        }
        while let Some(Reverse((d, x))) = heap.pop() {
            if d > dist[x] {
                continue;
            }
            let through = d.max(weight[x]);
            for &y in g.neighbors(x) {
                if y != v && !numbered[y] && through < dist[y] {
                    dist[y] = through;
                    heap.push(Reverse((through, y)));
                }
            }
        }

        let reached: Vec<Vertex> = (0..n)
            .filter(|&u| u != v && !numbered[u] && dist[u] < weight[u])
            .collect();
        for &u in &reached {
            weight[u] += 1;
            higher[u].insert(v);
        }
        numbered[v] = true;
        picked.push(v);
    }

    picked.reverse();
    EliminationOrdering {
        order: picked,
        higher,
    }
}

/// True iff `g` has no clique separator. `g` must be connected.
pub fn is_prime(g: &Graph) -> Result<bool> {
    g.require_connected()?;
    let meo = minimal_elimination_ordering(g);
    for &x in &meo.order {
        let sep = &meo.higher[x];
        if is_clique(g, sep) && connected_components(g, sep).len() >= 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Atoms of a connected graph with per-atom shared/exclusive annotations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomDecomposition {
    /// Vertex sets of the maximal prime subgraphs in lexicographic order.
    pub atoms: Vec<VertexSet>,
    /// Members of each atom that lie in at least one other atom.
    pub shared: Vec<VertexSet>,
    /// `atom - shared`.
    pub exclusive: Vec<VertexSet>,
    pub extremal: Vec<bool>,
    /// For an extremal atom `i`, the first atom `j` whose intersection with `i`
    /// contains every other intersection with `i`.
    pub extremal_partner: Vec<Option<usize>>,
}

impl AtomDecomposition {
    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn is_prime(&self) -> bool {
        self.atoms.len() == 1
    }
}

pub fn decompose(g: &Graph) -> Result<AtomDecomposition> {
    g.require_connected()?;
    let n = g.n();
    let meo = minimal_elimination_ordering(g);
    let mut alive = g.all_vertices();
    let mut pieces: Vec<VertexSet> = Vec::new();

    for &x in &meo.order {
        if !alive.contains(x) {
            continue;
        }
        let sep = meo.higher[x].intersection(&alive);
        if !is_clique(g, &sep) {
            continue;
        }
        let comp = component_within(g, x, &alive, &sep);
        let rest_nonempty = alive.len() > comp.len() + sep.len();
        if rest_nonempty {
            pieces.push(comp.union(&sep));
            alive.difference_with(&comp);
        }
    }
    if !alive.is_empty() {
        pieces.push(alive);
    }

    // drop pieces contained in another piece
    pieces.sort_by_key(|p| Reverse(p.len()));
    let mut atoms: Vec<VertexSet> = Vec::new();
    for p in pieces {
        if !atoms.iter().any(|a| p.is_subset(a)) {
            atoms.push(p);
        }
    }
    atoms.sort();

    let mut count = vec![0usize; n];
    for a in &atoms {
        for v in a.iter() {
            count[v] += 1;
        }
    }
    let shared: Vec<VertexSet> = atoms
        .iter()
        .map(|a| a.iter().filter(|&v| count[v] >= 2).collect())
        .collect();
    let exclusive: Vec<VertexSet> = atoms
        .iter()
        .zip(&shared)
        .map(|(a, s)| a.difference(s))
        .collect();
    let extremal_partner = extremal_partners(&atoms);
    let extremal = extremal_partner.iter().map(Option::is_some).collect();

    Ok(AtomDecomposition {
        atoms,
        shared,
        exclusive,
        extremal,
        extremal_partner,
    })
}

fn component_within(g: &Graph, start: Vertex, alive: &VertexSet, sep: &VertexSet) -> VertexSet {
    let mut comp = VertexSet::with_universe(g.n());
    comp.insert(start);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if alive.contains(y) && !sep.contains(y) && comp.insert(y) {
                queue.push_back(y);
            }
        }
    }
    comp
}

/// Atom `i` is extremal when some `j != i` has `M_i ∩ M_k ⊆ M_i ∩ M_j` for
/// every `k != i`. Quadratic in the number of atoms per atom.
fn extremal_partners(atoms: &[VertexSet]) -> Vec<Option<usize>> {
    let k = atoms.len();
    if k < 2 {
        return vec![None; k];
    }
    let inter: Vec<Vec<VertexSet>> = atoms
        .iter()
        .map(|a| atoms.iter().map(|b| a.intersection(b)).collect())
        .collect();
    (0..k)
        .map(|i| {
            (0..k).filter(|&j| j != i).find(|&j| {
                (0..k)
                    .filter(|&l| l != i)
                    .all(|l| inter[i][l].is_subset(&inter[i][j]))
            })
        })
        .collect()
}

/// Indices of extremal atoms. Requires at least two atoms.
pub fn extremal_atoms(d: &AtomDecomposition) -> Result<Vec<usize>> {
    if d.atoms.len() < 2 {
        return Err(Error::Argument(
            "extremal atoms are defined for decompositions with at least two atoms".into(),
        ));
    }
    Ok((0..d.atoms.len()).filter(|&i| d.extremal[i]).collect())
}
