//! Convexity number `wtc(G)` and the clique-to-prime-graph reduction.

use std::fmt::Write as _;

use itertools::Itertools;

use crate::atoms::is_prime;
use crate::error::{Error, Result};
use crate::graph::{is_complete, max_clique, Graph, Vertex, VertexSet};
use crate::interval::{is_convex, PairIntervals};
use crate::numbers::{CaseTag, InvariantResult};

pub const DEFAULT_CAP: usize = 16;

/// Largest weakly toll convex set distinct from `V`.
///
/// In a prime non-complete graph the proper convex sets are exactly the
/// cliques, so the answer is a maximum clique. Everything else that is not
/// complete goes to an exhaustive search bounded by `cap`.
pub fn wtc_exact(g: &Graph) -> Result<InvariantResult> {
    wtc_with_cap(g, DEFAULT_CAP)
}

pub fn wtc_with_cap(g: &Graph, cap: usize) -> Result<InvariantResult> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Argument("wtc needs at least two vertices".into()));
    }
    g.require_connected()?;
    let result = if is_complete(g) {
        InvariantResult {
            value: n - 1,
            witness: (0..n - 1).collect(),
            case_tag: CaseTag::Complete,
        }
    } else if is_prime(g)? {
        let clique = max_clique(g);
        InvariantResult {
            value: clique.len(),
            witness: clique,
            case_tag: CaseTag::WtcPrimeClique,
        }
    } else if n > cap {
        return Err(Error::CapExceeded {
            what: "exhaustive wtc",
            n,
            cap,
            reason: "deciding wtc(G) >= k is NP-complete; raise the cap to force the search",
        });
    } else {
        wtc_exhaustive(g)
    };
    if result.witness.len() == n || !is_convex(g, &result.witness) {
        return Err(Error::Internal(format!(
            "wtc witness {:?} is not a proper convex set",
            result.witness
        )));
    }
    Ok(result)
}

/// Proper subsets by decreasing size, lexicographic within a size; the first
/// convex one wins. Exponential, no cap.
pub fn wtc_exhaustive(g: &Graph) -> InvariantResult {
    let n = g.n();
    let table = PairIntervals::new(g);
    for size in (1..n).rev() {
        for chosen in (0..n).combinations(size) {
            let s: VertexSet = chosen.into_iter().collect();
            if table.is_convex(&s) {
                return InvariantResult {
                    value: size,
                    witness: s,
                    case_tag: CaseTag::WtcExhaustive,
                };
            }
        }
    }
    InvariantResult {
        value: 0,
        witness: VertexSet::new(),
        case_tag: CaseTag::WtcExhaustive,
    }
}

/// Output of [`clique_reduction`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub g_prime: Graph,
    pub k_prime: usize,
    /// Each added vertex with the non-adjacent pair it was created for.
    pub added: Vec<(Vertex, (Vertex, Vertex))>,
}

impl ReductionOutput {
    /// Edge list preceded by a comment block mapping added vertices to their
    /// source pairs.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# clique reduction, k' = {}", self.k_prime);
        for (x, (u, v)) in &self.added {
            let _ = writeln!(out, "# x {x} {u} {v}");
        }
        out.push_str(&crate::format::write_edge_list(&self.g_prime));
        out
    }
}

/// Adds a vertex `x_uv` adjacent to exactly `u` and `v` for every non-adjacent
/// pair `{u, v}`. The result is prime and, for `k >= 3`, has a clique of size
/// `k` iff `g` does.
///
/// `k < 3` is rejected: the added vertices form edges (cliques of size 2) even
/// when `g` has none, so the equivalence does not hold there.
pub fn clique_reduction(g: &Graph, k: usize) -> Result<ReductionOutput> {
    if k < 3 {
        return Err(Error::Argument(format!(
            "k = {k}: the reduction preserves clique size only for k >= 3"
        )));
    }
    let n = g.n();
    if n < 2 {
        return Err(Error::Argument("the reduction needs at least two vertices".into()));
    }
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let mut added = Vec::new();
    for (u, v) in g.non_edges() {
        let x = n + added.len();
        edges.push((u, x));
        edges.push((v, x));
        added.push((x, (u, v)));
    }
    let g_prime = Graph::from_edges(n + added.len(), edges)?;
    Ok(ReductionOutput {
        g_prime,
        k_prime: k,
        added,
    })
}
