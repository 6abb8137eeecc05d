//! Weakly toll walk membership, the interval and hull operators, convexity
//! and extreme vertices.
//!
//! A weakly toll `(u, w)`-walk joins nonadjacent `u` and `w` such that the only
//! walk vertex adjacent to `u` is the second one and the only walk vertex
//! adjacent to `w` is the second to last one. Membership is decided without
//! enumerating walks: `v` lies on such a walk iff for some `v_u ∈ N(u)` and
//! `v_w ∈ N(w)` the vertices `v_u`, `v_w`, `v` share a component of
//! `G - ((N[u] - v_u) ∪ (N[w] - v_w))`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Certificate for [`in_weakly_toll_walk`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipWitness {
    pub v_u: Vertex,
    pub v_w: Vertex,
    /// Component of `G - blocked_set(u, w, v_u, v_w)` holding `v_u`, `v_w` and `v`.
    pub component: VertexSet,
}

fn check_endpoints(g: &Graph, u: Vertex, w: Vertex) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(w)?;
    if u == w {
        return Err(Error::Argument(format!(
            "walk endpoints must be distinct (got {u} twice)"
        )));
    }
    if g.has_edge(u, w) {
        return Err(Error::Argument(format!(
            "walk endpoints {u} and {w} are adjacent"
        )));
    }
    Ok(())
}

/// `(N[u] - {v_u}) ∪ (N[w] - {v_w})`.
pub fn blocked_set(g: &Graph, u: Vertex, w: Vertex, v_u: Vertex, v_w: Vertex) -> Result<VertexSet> {
    check_endpoints(g, u, w)?;
    if !g.has_edge(u, v_u) {
        return Err(Error::Argument(format!("{v_u} is not a neighbor of {u}")));
    }
    if !g.has_edge(w, v_w) {
        return Err(Error::Argument(format!("{v_w} is not a neighbor of {w}")));
    }
    let mut from_u = g.closed_neighborhood(u);
    from_u.remove(v_u);
    let mut from_w = g.closed_neighborhood(w);
    from_w.remove(v_w);
    from_u.union_with(&from_w);
    Ok(from_u)
}

/// Decides whether `v` lies on a weakly toll `(u, w)`-walk.
///
/// Neighbor pairs `(v_u, v_w)` are tried in ascending lexicographic order and
/// the first qualifying pair is returned.
pub fn in_weakly_toll_walk(
    g: &Graph,
    u: Vertex,
    w: Vertex,
    v: Vertex,
) -> Result<Option<MembershipWitness>> {
    check_endpoints(g, u, w)?;
    g.check_vertex(v)?;
    if v == u || v == w {
        return Err(Error::Argument(format!(
            "vertex {v} must differ from the endpoints {u} and {w}"
        )));
    }
    for &v_u in g.neighbors(u) {
        for &v_w in g.neighbors(w) {
            let blocked = blocked_set(g, u, w, v_u, v_w)?;
            if blocked.contains(v_u) || blocked.contains(v_w) || blocked.contains(v) {
                continue;
            }
            let component = component_of(g, v_u, &blocked);
            if component.contains(v_w) && component.contains(v) {
                return Ok(Some(MembershipWitness {
                    v_u,
                    v_w,
                    component,
                }));
            }
        }
    }
    Ok(None)
}

fn component_of(g: &Graph, start: Vertex, blocked: &VertexSet) -> VertexSet {
    let mut comp = VertexSet::with_universe(g.n());
    comp.insert(start);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if !blocked.contains(y) && comp.insert(y) {
                queue.push_back(y);
            }
        }
    }
    comp
}

/// `I({a, b})` for distinct nonadjacent `a`, `b`.
///
/// Every candidate blocked set equals `N[a] ∪ N[b]` with `v_u` and `v_w` put
/// back, so the components of `G - (N[a] ∪ N[b])` are computed once and each
/// neighbor pair is resolved by looking at which of those components `v_u`
/// and `v_w` touch.
pub fn pair_interval(g: &Graph, a: Vertex, b: Vertex) -> VertexSet {
    debug_assert!(a != b && !g.has_edge(a, b));
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[a] = true;
    blocked[b] = true;
    for &x in g.neighbors(a).iter().chain(g.neighbors(b)) {
        blocked[x] = true;
    }

    let mut comp_id = vec![usize::MAX; n];
    let mut comps: Vec<Vec<Vertex>> = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if blocked[s] || comp_id[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![s];
        comp_id[s] = id;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if !blocked[y] && comp_id[y] == usize::MAX {
                    comp_id[y] = id;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        comps.push(members);
    }

    let touched = |x: Vertex| -> Vec<usize> {
        let mut ids: Vec<usize> = g
            .neighbors(x)
            .iter()
            .filter(|&&y| !blocked[y])
            .map(|&y| comp_id[y])
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    };

    let na = g.neighbors(a);
    let nb = g.neighbors(b);
    let mut take = vec![false; comps.len()];
    let mut result = VertexSet::with_universe(n);
    result.insert(a);
    result.insert(b);

    // v_u = v_w = c, a common neighbor.
    for &c in na.iter().filter(|c| nb.binary_search(c).is_ok()) {
        result.insert(c);
        for id in touched(c) {
            take[id] = true;
        }
    }

    // v_u ∈ N(a) - N(b), v_w ∈ N(b) - N(a); any other choice blocks v_u or v_w.
    let b_side: Vec<(Vertex, Vec<usize>)> = nb
        .iter()
        .filter(|x| na.binary_search(x).is_err())
        .map(|&y| (y, touched(y)))
        .collect();
    let mut stamp = vec![usize::MAX; comps.len()];
    for &x in na.iter().filter(|x| nb.binary_search(x).is_err()) {
        let x_ids = touched(x);
        for &id in &x_ids {
            stamp[id] = x;
        }
        for (y, y_ids) in &b_side {
            let joined = g.has_edge(x, *y) || y_ids.iter().any(|&id| stamp[id] == x);
            if joined {
                result.insert(x);
                result.insert(*y);
                for &id in x_ids.iter().chain(y_ids) {
                    take[id] = true;
                }
            }
        }
    }

    for (id, members) in comps.iter().enumerate() {
        if take[id] {
            for &x in members {
                result.insert(x);
            }
        }
    }
    result
}

/// `I(S)`: `S` plus every vertex on a weakly toll walk between two
/// nonadjacent members of `S`.
pub fn interval(g: &Graph, s: &VertexSet) -> VertexSet {
    let members = s.to_vec();
    let mut out = s.clone();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !g.has_edge(a, b) {
                out.union_with(&pair_interval(g, a, b));
            }
        }
    }
    out
}

/// `H(S)`: the least weakly toll convex superset of `S`.
///
/// Closes `S` under pair intervals with a worklist, so every nonadjacent pair
/// of the growing set is examined exactly once.
pub fn hull(g: &Graph, s: &VertexSet) -> VertexSet {
    close_under(g.n(), s, |a, b| {
        (!g.has_edge(a, b)).then(|| pair_interval(g, a, b))
    })
}

fn close_under<F>(n: usize, s: &VertexSet, mut pair: F) -> VertexSet
where
    F: FnMut(Vertex, Vertex) -> Option<VertexSet>,
{
    let mut closed = s.clone();
    let mut members = s.to_vec();
    let mut j = 0;
    while j < members.len() && closed.len() < n {
        for i in 0..j {
            let (a, b) = (members[i], members[j]);
            if let Some(iv) = pair(a.min(b), a.max(b)) {
                for x in iv.iter() {
                    if closed.insert(x) {
                        members.push(x);
                    }
                }
            }
        }
        j += 1;
    }
    closed
}

pub fn is_convex(g: &Graph, s: &VertexSet) -> bool {
    interval(g, s) == *s
}

/// True iff `x` is interior to no weakly toll walk between two other vertices,
/// i.e. `V - {x}` is convex.
pub fn is_extreme(g: &Graph, x: Vertex) -> bool {
    g.non_edges()
        .filter(|&(a, b)| a != x && b != x)
        .all(|(a, b)| !pair_interval(g, a, b).contains(x))
}

/// `ext(G)`.
pub fn extreme_vertices(g: &Graph) -> VertexSet {
    let mut interior = VertexSet::with_universe(g.n());
    for (a, b) in g.non_edges() {
        let mut iv = pair_interval(g, a, b);
        iv.remove(a);
        iv.remove(b);
        interior.union_with(&iv);
    }
    g.all_vertices().difference(&interior)
}

/// Precomputed `I({a, b})` for every nonadjacent pair, for workloads that
/// evaluate many sets on one graph.
#[derive(Debug, Clone)]
pub struct PairIntervals {
    n: usize,
    table: Vec<Option<VertexSet>>,
}

impl PairIntervals {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut table = vec![None; n * n];
        for (a, b) in g.non_edges() {
            table[a * n + b] = Some(pair_interval(g, a, b));
        }
        PairIntervals { n, table }
    }

    /// `I({a, b})`, or `None` when `a`, `b` are equal or adjacent.
    pub fn get(&self, a: Vertex, b: Vertex) -> Option<&VertexSet> {
        let (a, b) = (a.min(b), a.max(b));
        self.table[a * self.n + b].as_ref()
    }

    pub fn interval(&self, s: &VertexSet) -> VertexSet {
        let members = s.to_vec();
        let mut out = s.clone();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if let Some(iv) = self.get(a, b) {
                    out.union_with(iv);
                }
            }
        }
        out
    }

    /// Same as `interval(s).len() == n` with an early exit.
    pub fn covers(&self, s: &VertexSet) -> bool {
        let members = s.to_vec();
        let mut out = s.clone();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if let Some(iv) = self.get(a, b) {
                    out.union_with(iv);
                    if out.len() == self.n {
                        return true;
                    }
                }
            }
        }
        out.len() == self.n
    }

    pub fn hull(&self, s: &VertexSet) -> VertexSet {
        close_under(self.n, s, |a, b| self.get(a, b).cloned())
    }

    pub fn is_convex(&self, s: &VertexSet) -> bool {
        self.interval(s) == *s
    }

    /// `ext(G)` read off the table.
    pub fn extreme_vertices(&self) -> VertexSet {
        let mut interior = VertexSet::with_universe(self.n);
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                if let Some(iv) = self.get(a, b) {
                    let mut iv = iv.clone();
                    iv.remove(a);
                    iv.remove(b);
                    interior.union_with(&iv);
                }
            }
        }
        VertexSet::full(self.n).difference(&interior)
    }
}

/// Per-vertex route to `I(S)` built on [`in_weakly_toll_walk`]; kept for
/// cross-checking the batched [`interval`].
pub fn interval_by_membership(g: &Graph, s: &VertexSet) -> VertexSet {
    let members = s.to_vec();
    let mut out = s.clone();
    for v in g.vertices().filter(|&v| !s.contains(v)) {
        'pairs: for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !g.has_edge(a, b) && matches!(in_weakly_toll_walk(g, a, b, v), Ok(Some(_))) {
                    out.insert(v);
                    break 'pairs;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{bowtie, complete, cycle, path, star};

    #[test]
    fn blocked_set_examples() {
        let p4 = path(4);
        assert_eq!(blocked_set(&p4, 0, 3, 1, 2).unwrap(), VertexSet::from([0, 3]));
        let k13 = star(3);
        assert_eq!(blocked_set(&k13, 1, 2, 0, 0).unwrap(), VertexSet::from([1, 2]));
        // pendant endpoints of P5
        let p5 = path(5);
        assert_eq!(blocked_set(&p5, 0, 4, 1, 3).unwrap(), VertexSet::from([0, 4]));
    }

    #[test]
    fn blocked_set_rejects_bad_arguments() {
        let p4 = path(4);
        assert!(blocked_set(&p4, 0, 1, 1, 0).is_err());
        assert!(blocked_set(&p4, 0, 3, 2, 2).is_err());
        assert!(blocked_set(&p4, 0, 0, 1, 1).is_err());
    }

    #[test]
    fn membership_examples() {
        let p4 = path(4);
        let w = in_weakly_toll_walk(&p4, 0, 3, 1).unwrap().unwrap();
        assert_eq!((w.v_u, w.v_w), (1, 2));
        assert!(w.component.contains(1) && w.component.contains(2));

        let k13 = star(3);
        let w = in_weakly_toll_walk(&k13, 1, 2, 0).unwrap().unwrap();
        assert_eq!((w.v_u, w.v_w), (0, 0));

        let p5 = path(5);
        assert!(in_weakly_toll_walk(&p5, 0, 2, 4).unwrap().is_none());
    }

    #[test]
    fn membership_rejects_adjacent_or_repeated() {
        let p4 = path(4);
        assert!(in_weakly_toll_walk(&p4, 0, 1, 2).is_err());
        assert!(in_weakly_toll_walk(&p4, 0, 3, 3).is_err());
        assert!(in_weakly_toll_walk(&p4, 0, 0, 2).is_err());
    }

    #[test]
    fn interval_examples() {
        assert_eq!(interval(&path(4), &VertexSet::from([0, 3])), VertexSet::full(4));
        let k5 = complete(5);
        assert_eq!(interval(&k5, &VertexSet::from([1, 3])), VertexSet::from([1, 3]));
        assert_eq!(interval(&star(3), &VertexSet::from([1, 2])), VertexSet::full(4));
        assert_eq!(interval(&path(5), &VertexSet::from([0, 2])), VertexSet::from([0, 1, 2]));
    }

    #[test]
    fn hull_examples() {
        let p4 = path(4);
        assert_eq!(hull(&p4, &VertexSet::from([0, 3])), VertexSet::full(4));
        assert_eq!(hull(&p4, &p4.all_vertices()), p4.all_vertices());
        assert_eq!(hull(&p4, &VertexSet::from([2])), VertexSet::from([2]));
        assert_eq!(hull(&p4, &VertexSet::new()), VertexSet::new());
    }

    #[test]
    fn convexity_examples() {
        let p4 = path(4);
        assert!(is_convex(&p4, &VertexSet::from([0, 1, 2])));
        assert!(!is_convex(&p4, &VertexSet::from([0, 3])));
        assert!(is_convex(&p4, &VertexSet::new()));
    }

    #[test]
    fn extreme_examples() {
        assert_eq!(extreme_vertices(&complete(4)), VertexSet::full(4));
        assert_eq!(extreme_vertices(&path(4)), VertexSet::from([0, 3]));
        assert!(extreme_vertices(&star(3)).is_empty());
        assert!(extreme_vertices(&cycle(5)).is_empty());
        assert_eq!(extreme_vertices(&bowtie()), VertexSet::from([0, 1, 3, 4]));
        assert!(is_extreme(&path(4), 0));
        assert!(!is_extreme(&path(4), 1));
    }

    #[test]
    fn batched_interval_matches_membership_route() {
        for seed in 0..40 {
            let g = crate::generators::random_gnp(9, 0.35, seed);
            let table = PairIntervals::new(&g);
            for mask in [0b11u32, 0b1001, 0b1_0000_0101, 0b1_1000_0001, 0b111] {
                let s: VertexSet = (0..9).filter(|i| mask >> i & 1 == 1).collect();
                let fast = interval(&g, &s);
                assert_eq!(fast, interval_by_membership(&g, &s), "{g:?} {s:?}");
                assert_eq!(fast, table.interval(&s));
                assert_eq!(hull(&g, &s), table.hull(&s));
            }
        }
    }

    #[test]
    fn disconnected_graphs_need_no_special_case() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        assert_eq!(interval(&g, &VertexSet::from([0, 2])), VertexSet::from([0, 1, 2]));
        assert_eq!(interval(&g, &VertexSet::from([0, 5])), VertexSet::from([0, 5]));
        assert_eq!(hull(&g, &VertexSet::from([0, 2, 3])), VertexSet::from([0, 1, 2, 3]));
    }
}
