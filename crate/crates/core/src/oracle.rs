//! Ground truth straight from the walk definition, for small graphs.
//!
//! Walks are explored breadth first over the states
//! `(current vertex, second vertex, the single neighbor of w seen so far,
//! whether v has been visited)`. The endpoint conditions are enforced as each
//! vertex is appended, so every accepted sequence is a weakly toll walk and
//! the first one found is a shortest one. Nothing here relies on the
//! component characterization used by [`crate::interval`].

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub const DEFAULT_CAP: usize = 9;

/// A walk `u_0 u_1 ... u_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkWitness {
    pub sequence: Vec<Vertex>,
}

impl WalkWitness {
    /// Checks the walk against the definition: consecutive vertices adjacent,
    /// endpoints distinct and nonadjacent, `u_1` the only walk vertex adjacent
    /// to `u_0`, `u_{k-1}` the only walk vertex adjacent to `u_k`.
    pub fn is_weakly_toll(&self, g: &Graph) -> bool {
        let seq = &self.sequence;
        if seq.len() < 3 {
            return false;
        }
        let first = seq[0];
        let last = *seq.last().unwrap();
        let second = seq[1];
        let penultimate = seq[seq.len() - 2];
        first != last
            && !g.has_edge(first, last)
            && seq.windows(2).all(|p| g.has_edge(p[0], p[1]))
            && seq.iter().all(|&x| !g.has_edge(first, x) || x == second)
            && seq.iter().all(|&x| !g.has_edge(x, last) || x == penultimate)
    }

    pub fn len(&self) -> usize {
        self.sequence.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.len() <= 1
    }
}

/// Walk enumeration limits.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    /// Largest graph order accepted.
    pub cap: usize,
    /// Longest walk (in edges) considered; `None` means `2n + 2`.
    pub max_len: Option<usize>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            cap: DEFAULT_CAP,
            max_len: None,
        }
    }
}

impl Oracle {
    fn check_cap(&self, g: &Graph) -> Result<()> {
        if g.n() > self.cap {
            Err(Error::CapExceeded {
                what: "walk enumeration",
                n: g.n(),
                cap: self.cap,
                reason: "the oracle enumerates walks and is exponential in spirit",
            })
        } else {
            Ok(())
        }
    }

    /// A weakly toll `(u, w)`-walk through `v`, if one exists within the
    /// length bound.
    pub fn membership(&self, g: &Graph, u: Vertex, w: Vertex, v: Vertex) -> Result<Option<WalkWitness>> {
        self.check_cap(g)?;
        let n = g.n();
        if u >= n || w >= n || v >= n {
            return Err(Error::Argument("vertex out of range".into()));
        }
        if u == w || v == u || v == w {
            return Err(Error::Argument("u, w, v must be pairwise distinct".into()));
        }
        if g.has_edge(u, w) {
            return Err(Error::Argument(format!("{u} and {w} are adjacent")));
        }
        let max_len = self.max_len.unwrap_or(2 * n + 2);
        Ok(search(g, u, w, v, max_len))
    }

    pub fn interval(&self, g: &Graph, s: &VertexSet) -> Result<VertexSet> {
        self.check_cap(g)?;
        let members = s.to_vec();
        let mut out = s.clone();
        for v in g.vertices().filter(|&v| !s.contains(v)) {
            'pairs: for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    if !g.has_edge(a, b) && self.membership(g, a, b, v)?.is_some() {
                        out.insert(v);
                        break 'pairs;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn hull(&self, g: &Graph, s: &VertexSet) -> Result<VertexSet> {
        let mut current = s.clone();
        loop {
            let next = self.interval(g, &current)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    pub fn extreme(&self, g: &Graph) -> Result<VertexSet> {
        self.check_cap(g)?;
        let mut ext = VertexSet::with_universe(g.n());
        for x in g.vertices() {
            let mut interior = false;
            'pairs: for a in g.vertices() {
                for b in (a + 1)..g.n() {
                    if a != x && b != x && !g.has_edge(a, b) && self.membership(g, a, b, x)?.is_some() {
                        interior = true;
                        break 'pairs;
                    }
                }
            }
            if !interior {
                ext.insert(x);
            }
        }
        Ok(ext)
    }
}

pub fn oracle_membership(g: &Graph, u: Vertex, w: Vertex, v: Vertex) -> Result<Option<WalkWitness>> {
    Oracle::default().membership(g, u, w, v)
}

pub fn oracle_interval(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    Oracle::default().interval(g, s)
}

pub fn oracle_hull(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    Oracle::default().hull(g, s)
}

pub fn oracle_extreme(g: &Graph) -> Result<VertexSet> {
    Oracle::default().extreme(g)
}

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, PartialEq, Eq)]
struct State {
    cur: Vertex,
    second: Vertex,
    /// Only neighbor of `w` on the walk so far, or `NONE`.
    w_side: Vertex,
    seen: bool,
}

fn search(g: &Graph, u: Vertex, w: Vertex, v: Vertex, max_len: usize) -> Option<WalkWitness> {
    let n = g.n();
    let index = |s: &State| -> usize {
        let ws = if s.w_side == NONE { n } else { s.w_side };
        ((s.cur * n + s.second) * (n + 1) + ws) * 2 + s.seen as usize
    };
    // parent[state] = (previous state index, or NONE for the first step)
    let mut parent: Vec<Option<usize>> = vec![None; n * n * (n + 1) * 2];
    let mut states: Vec<Option<State>> = vec![None; parent.len()];
    let mut queue: VecDeque<(State, usize)> = VecDeque::new();

    for &x in g.neighbors(u) {
        let s = State {
            cur: x,
            second: x,
            w_side: if g.has_edge(x, w) { x } else { NONE },
            seen: x == v,
        };
        let i = index(&s);
        if states[i].is_none() {
            states[i] = Some(s);
            parent[i] = Some(NONE);
            queue.push_back((s, 1));
        }
    }

    let rebuild = |end: usize, states: &[Option<State>], parent: &[Option<usize>]| {
        let mut seq = vec![w];
        let mut at = end;
        while at != NONE {
            seq.push(states[at].unwrap().cur);
            at = parent[at].unwrap();
        }
        seq.push(u);
        seq.reverse();
        WalkWitness { sequence: seq }
    };

    while let Some((s, depth)) = queue.pop_front() {
        if depth + 1 > max_len {
            continue;
        }
        let si = index(&s);
        for &x in g.neighbors(s.cur) {
            if x == w {
                // s.cur is adjacent to w, so s.w_side == s.cur already
                if s.seen {
                    return Some(rebuild(si, &states, &parent));
                }
            }
            if g.has_edge(u, x) && x != s.second {
                continue;
            }
            let mut w_side = s.w_side;
            if g.has_edge(w, x) {
                if w_side != NONE && w_side != x {
                    continue;
                }
                w_side = x;
            }
            let next = State {
                cur: x,
                second: s.second,
                w_side,
                seen: s.seen || x == v,
            };
            let ni = index(&next);
            if states[ni].is_none() {
                states[ni] = Some(next);
                parent[ni] = Some(si);
                queue.push_back((next, depth + 1));
            }
        }
    }
    None
}
