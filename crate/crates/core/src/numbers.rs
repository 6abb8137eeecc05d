//! Interval number `wtn(G)` and hull number `wth(G)`.
//!
//! `wtn` is found by an exhaustive search confined to a window fixed by the
//! number `k` of twin classes made of extreme vertices: every extreme vertex
//! belongs to every interval set, and the minimum adds at most 8, 5 or 2
//! further vertices for `k = 0, 1, 2` respectively.
//!
//! `wth` follows the structure of the clique-separator decomposition: it is 2
//! for non-complete prime graphs, for graphs with at least three extremal
//! atoms and for graphs with an extremal atom whose exclusive part is not a
//! clique. With exactly two extremal atoms `M_1`, `M_2` whose exclusive parts
//! are cliques of sizes `x_1`, `x_2`, it is one of `2`, `x_1 + 1`, `x_2 + 1`,
//! `x_1 + x_2` depending on which chosen exclusive vertices are extreme.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::atoms::{decompose, AtomDecomposition};
use crate::error::{Error, Result};
use crate::graph::{is_clique, is_complete, Graph, Vertex, VertexSet};
use crate::interval::{hull, is_extreme, PairIntervals};
use crate::twins::{classify_extreme, twin_classes};

/// Which branch of the case analysis produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseTag {
    Complete,
    PrimePair,
    ThreeExtremal,
    ExclusiveNotClique,
    TwoExtremalBothExtreme,
    TwoExtremalOneExtreme,
    TwoExtremalNoneExtreme,
    WtnK0,
    WtnK1,
    WtnK2,
    WtcPrimeClique,
    WtcExhaustive,
    BruteForce,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::Complete => "COMPLETE",
            CaseTag::PrimePair => "PRIME_PAIR",
            CaseTag::ThreeExtremal => "THREE_EXTREMAL",
            CaseTag::ExclusiveNotClique => "EXCLUSIVE_NOT_CLIQUE",
            CaseTag::TwoExtremalBothExtreme => "TWO_EXTREMAL_BOTH_EXTREME",
            CaseTag::TwoExtremalOneExtreme => "TWO_EXTREMAL_ONE_EXTREME",
            CaseTag::TwoExtremalNoneExtreme => "TWO_EXTREMAL_NONE_EXTREME",
            CaseTag::WtnK0 => "WTN_K0",
            CaseTag::WtnK1 => "WTN_K1",
            CaseTag::WtnK2 => "WTN_K2",
            CaseTag::WtcPrimeClique => "WTC_PRIME_CLIQUE",
            CaseTag::WtcExhaustive => "WTC_EXHAUSTIVE",
            CaseTag::BruteForce => "BRUTE_FORCE",
        }
    }
}

/// A computed invariant with a certifying vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantResult {
    pub value: usize,
    pub witness: VertexSet,
    pub case_tag: CaseTag,
}

impl InvariantResult {
    fn new(value: usize, witness: VertexSet, case_tag: CaseTag) -> Self {
        InvariantResult {
            value,
            witness,
            case_tag,
        }
    }
}

fn require_nonempty_connected(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::Argument("the graph has no vertices".into()));
    }
    g.require_connected()
}

#[derive(Debug, Clone, Copy)]
pub struct WtnOptions {
    /// Swapping two true twins is an automorphism, so only the number of
    /// vertices taken from each twin class matters. With pruning on, the
    /// members taken from a class must be its least ones.
    pub twin_pruning: bool,
}

impl Default for WtnOptions {
    fn default() -> Self {
        WtnOptions { twin_pruning: true }
    }
}

pub fn wtn(g: &Graph) -> Result<InvariantResult> {
    wtn_with(g, WtnOptions::default())
}

pub fn wtn_with(g: &Graph, opts: WtnOptions) -> Result<InvariantResult> {
    require_nonempty_connected(g)?;
    let n = g.n();
    if is_complete(g) {
        return Ok(InvariantResult::new(n, g.all_vertices(), CaseTag::Complete));
    }

    let table = PairIntervals::new(g);
    let partition = twin_classes(g);
    let ext = table.extreme_vertices();
    let extreme = classify_extreme(g, &partition, &ext)?;

    let mut base = VertexSet::with_universe(n);
    for &c in &extreme.classes {
        base.union_with(&partition.classes[c]);
    }
    let pool: Vec<Vertex> = g.vertices().filter(|&v| !base.contains(v)).collect();
    // previous pool member of the same twin class
    let mut prev: Vec<Option<Vertex>> = vec![None; n];
    if opts.twin_pruning {
        let mut last: Vec<Option<Vertex>> = vec![None; partition.len()];
        for &v in &pool {
            let c = partition.class_of[v];
            prev[v] = last[c];
            last[c] = Some(v);
        }
    }

    let (extra, tag) = match extreme.classes.len() {
        0 => (2..=8, CaseTag::WtnK0),
        1 => (1..=5, CaseTag::WtnK1),
        2 => (0..=2, CaseTag::WtnK2),
        k => {
            return Err(Error::Internal(format!(
                "{k} extreme twin classes in a connected non-complete graph"
            )))
        }
    };

    for size in extra.clone() {
        for chosen in pool.iter().copied().combinations(size) {
            let mut s = base.clone();
            for &v in &chosen {
                s.insert(v);
            }
            if chosen.iter().any(|&v| prev[v].is_some_and(|p| !s.contains(p))) {
                continue;
            }
            if table.covers(&s) {
                let value = s.len();
                return Ok(InvariantResult::new(value, s, tag));
            }
        }
    }
    Err(Error::Internal(format!(
        "no interval set of the form ext-classes plus {}..={} vertices",
        extra.start(),
        extra.end()
    )))
}

pub fn wth(g: &Graph) -> Result<InvariantResult> {
    require_nonempty_connected(g)?;
    let n = g.n();
    if is_complete(g) {
        return Ok(InvariantResult::new(n, g.all_vertices(), CaseTag::Complete));
    }
    let d = decompose(g)?;
    let result = wth_cases(g, &d)?;
    if hull(g, &result.witness).len() != n || result.witness.len() != result.value {
        return Err(Error::Internal(format!(
            "wth witness {:?} ({}) does not generate V",
            result.witness,
            result.case_tag.as_str()
        )));
    }
    Ok(result)
}

fn least_non_adjacent_pair(g: &Graph, s: &VertexSet) -> Option<(Vertex, Vertex)> {
    let members = s.to_vec();
    members
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| members[i + 1..].iter().map(move |&b| (a, b)))
        .find(|&(a, b)| !g.has_edge(a, b))
}

fn wth_cases(g: &Graph, d: &AtomDecomposition) -> Result<InvariantResult> {
    if d.is_prime() {
        let (a, b) = g
            .non_edges()
            .next()
            .ok_or_else(|| Error::Internal("non-complete graph without a non-edge".into()))?;
        return Ok(InvariantResult::new(2, VertexSet::from([a, b]), CaseTag::PrimePair));
    }

    let extremal: Vec<usize> = (0..d.len()).filter(|&i| d.extremal[i]).collect();
    if extremal.len() >= 3 {
        let u = first_member(&d.exclusive[extremal[0]])?;
        let v = first_member(&d.exclusive[extremal[1]])?;
        return Ok(InvariantResult::new(2, VertexSet::from([u, v]), CaseTag::ThreeExtremal));
    }

    for &i in &extremal {
        let excl = &d.exclusive[i];
        if is_clique(g, excl) {
            continue;
        }
        // prefer exclusive vertices with a neighbor in the shared part
        let attached: VertexSet = excl
            .iter()
            .filter(|&x| g.neighbors(x).iter().any(|&y| d.shared[i].contains(y)))
            .collect();
        let (a, b) = least_non_adjacent_pair(g, &attached)
            .or_else(|| least_non_adjacent_pair(g, excl))
            .expect("a non-clique set has a non-adjacent pair");
        return Ok(InvariantResult::new(
            2,
            VertexSet::from([a, b]),
            CaseTag::ExclusiveNotClique,
        ));
    }

    if extremal.len() != 2 {
        return Err(Error::Internal(format!(
            "reducible graph with {} extremal atoms",
            extremal.len()
        )));
    }
    let (m1, m2) = (extremal[0], extremal[1]);
    let u1 = pick_exclusive(g, d, m1)?;
    let u2 = pick_exclusive(g, d, m2)?;
    let (x1, x2) = (d.exclusive[m1].len(), d.exclusive[m2].len());

    let result = match (is_extreme(g, u1), is_extreme(g, u2)) {
        (true, true) => InvariantResult::new(
            x1 + x2,
            d.exclusive[m1].union(&d.exclusive[m2]),
            CaseTag::TwoExtremalBothExtreme,
        ),
        (true, false) => {
            let mut w = d.exclusive[m1].clone();
            w.insert(u2);
            InvariantResult::new(x1 + 1, w, CaseTag::TwoExtremalOneExtreme)
        }
        (false, true) => {
            let mut w = d.exclusive[m2].clone();
            w.insert(u1);
            InvariantResult::new(x2 + 1, w, CaseTag::TwoExtremalOneExtreme)
        }
        (false, false) => InvariantResult::new(
            2,
            VertexSet::from([u1, u2]),
            CaseTag::TwoExtremalNoneExtreme,
        ),
    };
    Ok(result)
}

fn first_member(s: &VertexSet) -> Result<Vertex> {
    s.min()
        .ok_or_else(|| Error::Internal("extremal atom with an empty exclusive part".into()))
}

/// Any exclusive vertex when the atom is complete, otherwise the least
/// exclusive vertex with a non-neighbor in the shared part.
fn pick_exclusive(g: &Graph, d: &AtomDecomposition, i: usize) -> Result<Vertex> {
    if is_clique(g, &d.atoms[i]) {
        return first_member(&d.exclusive[i]);
    }
    d.exclusive[i]
        .iter()
        .find(|&x| d.shared[i].iter().any(|y| !g.has_edge(x, y)))
        .ok_or_else(|| {
            Error::Internal(format!(
                "non-complete extremal atom {:?} has no exclusive vertex missing a shared neighbor",
                d.atoms[i]
            ))
        })
}

/// Exhaustive minimum by increasing cardinality; the reference for the
/// structural solvers.
#[derive(Debug, Clone, Copy)]
pub struct BruteForce {
    pub cap: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce { cap: 10 }
    }
}

impl BruteForce {
    fn check(&self, g: &Graph, what: &'static str) -> Result<()> {
        require_nonempty_connected(g)?;
        if g.n() > self.cap {
            return Err(Error::CapExceeded {
                what,
                n: g.n(),
                cap: self.cap,
                reason: "subset enumeration is exponential",
            });
        }
        Ok(())
    }

    fn search<F>(&self, g: &Graph, mut ok: F) -> InvariantResult
    where
        F: FnMut(&VertexSet) -> bool,
    {
        let n = g.n();
        for size in 1..=n {
            for chosen in (0..n).combinations(size) {
                let s: VertexSet = chosen.into_iter().collect();
                if ok(&s) {
                    return InvariantResult::new(size, s, CaseTag::BruteForce);
                }
            }
        }
        unreachable!("V itself always qualifies")
    }

    pub fn wtn(&self, g: &Graph) -> Result<InvariantResult> {
        self.check(g, "brute-force wtn")?;
        let table = PairIntervals::new(g);
        Ok(self.search(g, |s| table.covers(s)))
    }

    pub fn wth(&self, g: &Graph) -> Result<InvariantResult> {
        self.check(g, "brute-force wth")?;
        let table = PairIntervals::new(g);
        let n = g.n();
        Ok(self.search(g, |s| table.hull(s).len() == n))
    }
}

pub fn brute_force_wtn(g: &Graph) -> Result<InvariantResult> {
    BruteForce::default().wtn(g)
}

pub fn brute_force_wth(g: &Graph) -> Result<InvariantResult> {
    BruteForce::default().wth(g)
}
