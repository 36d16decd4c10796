//! Acyclic orientations of prime graphs and longest-path colorings.
//!
//! Vertices are `i64` so auxiliary vertices can carry negative tags that never
//! collide with a prime.

use crate::graph::{Coloring, GraphError, PrimeGraph};
use crate::primes::Prime;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DigraphError {
    #[error("coloring is not a proper 3-coloring of the graph")]
    ImproperColoring,
    #[error("orientation contains a directed cycle")]
    CyclicOrientation,
    #[error("orientation contains a directed path with three arcs: {0:?}")]
    DirectedThreePath(Vec<i64>),
    #[error("orientation does not match the graph: {0}")]
    OrientationMismatch(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orientation {
    pub vertices: BTreeSet<i64>,
    pub arcs: BTreeSet<(i64, i64)>,
}

impl Orientation {
    pub fn new(vertices: impl IntoIterator<Item = i64>) -> Self {
        Orientation { vertices: vertices.into_iter().collect(), arcs: BTreeSet::new() }
    }

    pub fn add_arc(&mut self, from: i64, to: i64) {
        self.vertices.insert(from);
        self.vertices.insert(to);
        self.arcs.insert((from, to));
    }

    pub fn has_arc(&self, from: i64, to: i64) -> bool {
        self.arcs.contains(&(from, to))
    }

    pub fn out_neighbors(&self, v: i64) -> Vec<i64> {
        self.arcs.range((v, i64::MIN)..=(v, i64::MAX)).map(|&(_, b)| b).collect()
    }

    pub fn in_neighbors(&self, v: i64) -> Vec<i64> {
        self.arcs.iter().filter(|&&(_, b)| b == v).map(|&(a, _)| a).collect()
    }

    /// True when every base edge is oriented exactly once and nothing else is.
    pub fn orients(&self, g: &PrimeGraph) -> bool {
        let want: BTreeSet<(i64, i64)> = g.edges().iter().map(|&(a, b)| (a.get() as i64, b.get() as i64)).collect();
        let got: BTreeSet<(i64, i64)> = self.arcs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        got.len() == self.arcs.len() && got == want
    }

    /// Finds a directed path with three arcs, if any. A directed cycle in a
    /// simple orientation has length at least 3, so it also counts.
    pub fn three_arc_path(&self) -> Option<Vec<i64>> {
        for &(a, b) in &self.arcs {
            for c in self.out_neighbors(b) {
                if let Some(&d) = self.out_neighbors(c).first() {
                    return Some(vec![a, b, c, d]);
                }
            }
        }
        None
    }

    pub fn to_dot(&self, name: &str) -> String {
        let label = |v: i64| {
            if v < 0 {
                format!("v{}", -v)
            } else {
                v.to_string()
            }
        };
        let mut s = format!("digraph \"{name}\" {{\n");
        for &v in &self.vertices {
            let _ = writeln!(s, "  \"{}\";", label(v));
        }
        for &(a, b) in &self.arcs {
            let _ = writeln!(s, "  \"{}\" -> \"{}\";", label(a), label(b));
        }
        s.push_str("}\n");
        s
    }
}

/// Orients each edge from the lower color class to the higher one
/// (classes 0, 1, 2 play the roles 𝒪, 𝒟, ℐ).
pub fn orient_by_coloring(g: &PrimeGraph, c: &Coloring) -> Result<Orientation, DigraphError> {
    if !c.is_proper_on(g) || g.vertices().iter().any(|&p| c.color(p).is_some_and(|x| x > 2)) {
        return Err(DigraphError::ImproperColoring);
    }
    let mut o = Orientation::new(g.vertices().iter().map(|p| p.get() as i64));
    for (a, b) in g.edges() {
        let (a, b) = if c.color(a) < c.color(b) { (a, b) } else { (b, a) };
        o.add_arc(a.get() as i64, b.get() as i64);
    }
    Ok(o)
}

/// Length in arcs of the longest directed path ending at each vertex.
pub fn longest_path_lengths(o: &Orientation) -> Result<BTreeMap<i64, usize>, DigraphError> {
    let mut indeg: BTreeMap<i64, usize> = o.vertices.iter().map(|&v| (v, 0)).collect();
    for &(_, b) in &o.arcs {
        *indeg.entry(b).or_default() += 1;
    }
    let mut len: BTreeMap<i64, usize> = indeg.keys().map(|&v| (v, 0)).collect();
    let mut queue: VecDeque<i64> = indeg.iter().filter(|(_, &d)| d == 0).map(|(&v, _)| v).collect();
    let mut done = 0;
    while let Some(v) = queue.pop_front() {
        done += 1;
        let lv = len[&v];
        for w in o.out_neighbors(v) {
            let lw = len.get_mut(&w).expect("known vertex");
            *lw = (*lw).max(lv + 1);
            let d = indeg.get_mut(&w).expect("known vertex");
            *d -= 1;
            if *d == 0 {
                queue.push_back(w);
            }
        }
    }
    if done != indeg.len() {
        return Err(DigraphError::CyclicOrientation);
    }
    Ok(len)
}

/// The augmented digraph: an auxiliary source `-(i+1)` feeding the i-th
/// member of `pi_t`, the given arcs, and every `pi_t`-to-outside edge
/// pointing outward.
pub fn augmented_orientation(
    pgc: &PrimeGraph,
    pi_t: &BTreeSet<Prime>,
    frobenius_arcs: &Orientation,
) -> Result<Orientation, DigraphError> {
    for &p in pi_t {
        if !pgc.contains(p) {
            return Err(GraphError::UnknownVertex(p.get()).into());
        }
    }
    let outside = pgc.without(pi_t);
    if !frobenius_arcs.orients(&outside) {
        return Err(DigraphError::OrientationMismatch(
            "arcs must orient exactly the edges with both ends outside the distinguished set".into(),
        ));
    }
    let mut aug = frobenius_arcs.clone();
    for &p in pgc.vertices() {
        aug.vertices.insert(p.get() as i64);
    }
    for (i, &p) in pi_t.iter().enumerate() {
        aug.add_arc(-(i as i64 + 1), p.get() as i64);
        for q in pgc.neighbors_of(p) {
            if !pi_t.contains(&q) {
                aug.add_arc(p.get() as i64, q.get() as i64);
            }
        }
    }
    Ok(aug)
}

/// Colors `pgc` by longest-path length in the augmented digraph. Members of
/// `pi_t` all receive color 1 and every outside neighbor of `pi_t` color 2, so
/// the coloring is proper on `pgc` with the edges inside `pi_t` removed.
pub fn monochromatic_neighbor_coloring(
    pgc: &PrimeGraph,
    pi_t: &BTreeSet<Prime>,
    frobenius_arcs: &Orientation,
) -> Result<Coloring, DigraphError> {
    if let Some(path) = frobenius_arcs.three_arc_path() {
        return Err(DigraphError::DirectedThreePath(path));
    }
    let aug = augmented_orientation(pgc, pi_t, frobenius_arcs)?;
    let lengths = longest_path_lengths(&aug)?;
    if let Some(path) = aug.three_arc_path() {
        return Err(DigraphError::DirectedThreePath(path));
    }
    let assignment = pgc.vertices().iter().map(|&p| (p, lengths[&(p.get() as i64)])).collect();
    Ok(Coloring::new(3, assignment))
}

/// Stand-in Frobenius digraph for abstract input: a 3-coloring of the graph
/// outside `pi_t` with the outside neighbors of `pi_t` pinned to class 2,
/// oriented by class. `None` when no such coloring exists.
pub fn synthesize_frobenius_orientation(
    pgc: &PrimeGraph,
    pi_t: &BTreeSet<Prime>,
) -> Result<Option<Orientation>, DigraphError> {
    let outside = pgc.without(pi_t);
    let boundary: BTreeMap<Prime, usize> =
        pgc.neighbors(pi_t)?.into_iter().filter(|p| !pi_t.contains(p)).map(|p| (p, 2)).collect();
    let coloring = match outside.k_colorable(3, &boundary) {
        Ok(c) => c,
        Err(GraphError::InvalidFixedAssignment(_)) => None,
        Err(e) => return Err(e.into()),
    };
    coloring.map(|c| orient_by_coloring(&outside, &c)).transpose()
}
