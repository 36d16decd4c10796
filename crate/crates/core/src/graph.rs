//! Prime-labeled simple graphs and proper colorings.
//!
//! Graphs are stored over a sorted vertex list with one adjacency bitmask per
//! vertex, so at most 64 vertices fit.

use crate::primes::Prime;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use thiserror::Error;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} is not prime")]
    NonPrimeVertex(u64),
    #[error("edge {0}-{1} has an endpoint that is not a vertex")]
    DanglingEdge(u64, u64),
    #[error("loop at vertex {0}")]
    LoopEdge(u64),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(u64),
    #[error("invalid fixed color assignment: {0}")]
    InvalidFixedAssignment(String),
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("cannot parse graph: {0}")]
    Parse(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PrimeGraph {
    vertices: Vec<Prime>,
    adj: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct GraphWire {
    vertices: Vec<u64>,
    #[serde(default)]
    edges: Vec<[u64; 2]>,
}

impl Serialize for PrimeGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphWire {
            vertices: self.vertices.iter().map(|p| p.get()).collect(),
            edges: self.edges().into_iter().map(|(a, b)| [a.get(), b.get()]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PrimeGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = GraphWire::deserialize(d)?;
        let edges: Vec<(u64, u64)> = w.edges.iter().map(|e| (e[0], e[1])).collect();
        PrimeGraph::new(&w.vertices, &edges).map_err(serde::de::Error::custom)
    }
}

/// Builds a validated, canonical graph. Repeated vertices or edges collapse.
pub fn new_graph(vertices: &[u64], edges: &[(u64, u64)]) -> Result<PrimeGraph, GraphError> {
    PrimeGraph::new(vertices, edges)
}

impl PrimeGraph {
    pub fn new(vertices: &[u64], edges: &[(u64, u64)]) -> Result<Self, GraphError> {
        let mut vs = Vec::with_capacity(vertices.len());
        for &v in vertices {
            vs.push(Prime::new(v).ok_or(GraphError::NonPrimeVertex(v))?);
        }
        let mut g = Self::empty(vs)?;
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            match (g.index_of_raw(a), g.index_of_raw(b)) {
                (Some(i), Some(j)) => g.set(i, j, true),
                _ => return Err(GraphError::DanglingEdge(a, b)),
            }
        }
        Ok(g)
    }

    /// Edgeless graph on the given primes.
    pub fn empty(mut vertices: Vec<Prime>) -> Result<Self, GraphError> {
        vertices.sort();
        vertices.dedup();
        if vertices.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vertices.len()));
        }
        let n = vertices.len();
        Ok(PrimeGraph { vertices, adj: vec![0; n] })
    }

    pub fn from_prime_edges(
        vertices: impl IntoIterator<Item = Prime>,
        edges: impl IntoIterator<Item = (Prime, Prime)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(vertices.into_iter().collect())?;
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn vertices(&self) -> &[Prime] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> BTreeSet<Prime> {
        self.vertices.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, p: Prime) -> Option<usize> {
        self.vertices.binary_search(&p).ok()
    }

    fn index_of_raw(&self, v: u64) -> Option<usize> {
        self.vertices.binary_search_by(|p| p.get().cmp(&v)).ok()
    }

    fn idx(&self, p: Prime) -> Result<usize, GraphError> {
        self.index_of(p).ok_or(GraphError::UnknownVertex(p.get()))
    }

    pub fn contains(&self, p: Prime) -> bool {
        self.index_of(p).is_some()
    }

    /// Adjacency bitmask of the vertex at position `i`.
    pub fn mask(&self, i: usize) -> u64 {
        self.adj[i]
    }

    fn set(&mut self, i: usize, j: usize, on: bool) {
        if on {
            self.adj[i] |= 1 << j;
            self.adj[j] |= 1 << i;
        } else {
            self.adj[i] &= !(1 << j);
            self.adj[j] &= !(1 << i);
        }
    }

    pub fn add_edge(&mut self, a: Prime, b: Prime) -> Result<(), GraphError> {
        if a == b {
            return Err(GraphError::LoopEdge(a.get()));
        }
        let (i, j) = match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => (i, j),
            _ => return Err(GraphError::DanglingEdge(a.get(), b.get())),
        };
        self.set(i, j, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, a: Prime, b: Prime) {
        if let (Some(i), Some(j)) = (self.index_of(a), self.index_of(b)) {
            self.set(i, j, false);
        }
    }

    /// Adds an isolated vertex (no-op if present).
    pub fn add_vertex(&mut self, p: Prime) -> Result<(), GraphError> {
        if self.contains(p) {
            return Ok(());
        }
        let edges = self.edges();
        let mut vs = self.vertices.clone();
        vs.push(p);
        *self = Self::from_prime_edges(vs, edges)?;
        Ok(())
    }

    pub fn has_edge(&self, a: Prime, b: Prime) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.adj[i] >> j & 1 == 1,
            _ => false,
        }
    }

    /// Edges in canonical order, smaller endpoint first.
    pub fn edges(&self) -> Vec<(Prime, Prime)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.adj[i] >> j & 1 == 1 {
                    out.push((self.vertices[i], self.vertices[j]));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, p: Prime) -> usize {
        self.index_of(p).map_or(0, |i| self.adj[i].count_ones() as usize)
    }

    pub fn neighbors_of(&self, p: Prime) -> Vec<Prime> {
        match self.index_of(p) {
            Some(i) => self.primes_in_mask(self.adj[i]),
            None => Vec::new(),
        }
    }

    pub(crate) fn primes_in_mask(&self, mut m: u64) -> Vec<Prime> {
        let mut out = Vec::new();
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out.push(self.vertices[i]);
            m &= m - 1;
        }
        out
    }

    /// Open neighborhood of `set`; the result may intersect `set`.
    pub fn neighbors(&self, set: &BTreeSet<Prime>) -> Result<BTreeSet<Prime>, GraphError> {
        let mut m = 0;
        for &p in set {
            m |= self.adj[self.idx(p)?];
        }
        Ok(self.primes_in_mask(m).into_iter().collect())
    }

    pub fn complement(&self) -> PrimeGraph {
        let n = self.len();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let adj = (0..n).map(|i| !self.adj[i] & full & !(1 << i)).collect();
        PrimeGraph { vertices: self.vertices.clone(), adj }
    }

    pub fn induced(&self, set: &BTreeSet<Prime>) -> Result<PrimeGraph, GraphError> {
        for &p in set {
            self.idx(p)?;
        }
        let vs: Vec<Prime> = set.iter().copied().collect();
        let edges = self.edges().into_iter().filter(|(a, b)| set.contains(a) && set.contains(b));
        Self::from_prime_edges(vs, edges)
    }

    /// The graph with the given vertices deleted.
    pub fn without(&self, set: &BTreeSet<Prime>) -> PrimeGraph {
        let keep: BTreeSet<Prime> = self.vertices.iter().copied().filter(|p| !set.contains(p)).collect();
        self.induced(&keep).expect("subset of own vertices")
    }

    /// All 3-cliques, each sorted, in lexicographic order.
    pub fn triangles(&self) -> Vec<[Prime; 3]> {
        let mut out = Vec::new();
        let n = self.len();
        for i in 0..n {
            for j in i + 1..n {
                if self.adj[i] >> j & 1 == 0 {
                    continue;
                }
                let mut common = self.adj[i] & self.adj[j] & !((2u64 << j) - 1);
                while common != 0 {
                    let k = common.trailing_zeros() as usize;
                    out.push([self.vertices[i], self.vertices[j], self.vertices[k]]);
                    common &= common - 1;
                }
            }
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        self.triangles().is_empty()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.len();
        if n <= 1 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let i = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[i] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen.count_ones() as usize == n
    }

    /// Deterministic backtracking search for a proper `k`-coloring extending
    /// `fixed`. Vertices are tried in ascending order, colors ascending.
    pub fn k_colorable(&self, k: usize, fixed: &BTreeMap<Prime, usize>) -> Result<Option<Coloring>, GraphError> {
        let n = self.len();
        let mut colors: Vec<Option<usize>> = vec![None; n];
        for (&p, &c) in fixed {
            let i = self.idx(p)?;
            if c >= k {
                return Err(GraphError::InvalidFixedAssignment(format!("color {c} for {p} is outside 0..{k}")));
            }
            colors[i] = Some(c);
        }
        for (a, b) in self.edges() {
            let (i, j) = (self.idx(a)?, self.idx(b)?);
            if colors[i].is_some() && colors[i] == colors[j] {
                return Err(GraphError::InvalidFixedAssignment(format!(
                    "{a} and {b} are adjacent but both fixed to color {}",
                    colors[i].unwrap()
                )));
            }
        }
        let free: Vec<usize> = (0..n).filter(|&i| colors[i].is_none()).collect();
        if k == 0 {
            return Ok(if n == 0 { Some(Coloring::new(0, BTreeMap::new())) } else { None });
        }
        if self.backtrack(&free, 0, k, &mut colors) {
            let assignment = (0..n).map(|i| (self.vertices[i], colors[i].expect("assigned"))).collect();
            Ok(Some(Coloring::new(k, assignment)))
        } else {
            Ok(None)
        }
    }

    fn backtrack(&self, free: &[usize], pos: usize, k: usize, colors: &mut [Option<usize>]) -> bool {
        let Some(&v) = free.get(pos) else { return true };
        for c in 0..k {
            let clash = self.indices_in_mask(self.adj[v]).any(|u| colors[u] == Some(c));
            if clash {
                continue;
            }
            colors[v] = Some(c);
            if self.backtrack(free, pos + 1, k, colors) {
                return true;
            }
        }
        colors[v] = None;
        false
    }

    fn indices_in_mask(&self, mut m: u64) -> impl Iterator<Item = usize> {
        std::iter::from_fn(move || {
            if m == 0 {
                return None;
            }
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        })
    }

    /// Every proper `k`-coloring, in the same order the backtracker visits them.
    pub fn all_colorings(&self, k: usize, limit: usize) -> Vec<Coloring> {
        let n = self.len();
        let mut out = Vec::new();
        let mut colors = vec![0usize; n];
        fn go(g: &PrimeGraph, i: usize, k: usize, colors: &mut [usize], out: &mut Vec<Coloring>, limit: usize) {
            if out.len() >= limit {
                return;
            }
            if i == g.len() {
                let a = (0..g.len()).map(|j| (g.vertices[j], colors[j])).collect();
                out.push(Coloring::new(k, a));
                return;
            }
            for c in 0..k {
                let lower = g.adj[i] & ((1u64 << i) - 1);
                if g.indices_in_mask(lower).any(|u| colors[u] == c) {
                    continue;
                }
                colors[i] = c;
                go(g, i + 1, k, colors, out, limit);
            }
        }
        go(self, 0, k, &mut colors, &mut out, limit);
        out
    }

    /// Same vertex set, each prime replaced through `map`.
    pub fn relabel(&self, map: &BTreeMap<Prime, Prime>) -> Result<PrimeGraph, GraphError> {
        let f = |p: Prime| *map.get(&p).unwrap_or(&p);
        Self::from_prime_edges(self.vertices.iter().map(|&p| f(p)), self.edges().into_iter().map(|(a, b)| (f(a), f(b))))
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph \"{name}\" {{\n");
        for v in &self.vertices {
            let _ = writeln!(s, "  {v};");
        }
        for (a, b) in self.edges() {
            let _ = writeln!(s, "  {a} -- {b};");
        }
        s.push_str("}\n");
        s
    }

    /// Terse text form: `2 3 7 13 ; 2-7 2-13`.
    pub fn to_text(&self) -> String {
        let vs: Vec<String> = self.vertices.iter().map(|p| p.to_string()).collect();
        let es: Vec<String> = self.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        if es.is_empty() {
            vs.join(" ")
        } else {
            format!("{} ; {}", vs.join(" "), es.join(" "))
        }
    }

    pub fn parse_text(s: &str) -> Result<PrimeGraph, GraphError> {
        let (vpart, epart) = s.split_once(';').unwrap_or((s, ""));
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| GraphError::Parse(format!("bad number {t:?}")));
        let vertices = vpart.split_whitespace().map(num).collect::<Result<Vec<_>, _>>()?;
        let mut edges = Vec::new();
        for tok in epart.split_whitespace() {
            let (a, b) = tok.split_once('-').ok_or_else(|| GraphError::Parse(format!("bad edge {tok:?}")))?;
            edges.push((num(a)?, num(b)?));
        }
        Self::new(&vertices, &edges)
    }

    /// Accepts either the JSON form or the terse text form.
    pub fn parse(s: &str) -> Result<PrimeGraph, GraphError> {
        let t = s.trim();
        if t.starts_with('{') {
            serde_json::from_str(t).map_err(|e| GraphError::Parse(e.to_string()))
        } else if t.is_empty() {
            Err(GraphError::Parse("empty input".into()))
        } else {
            Self::parse_text(t)
        }
    }
}

/// A total vertex coloring with colors in `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub k: usize,
    pub assignment: BTreeMap<Prime, usize>,
}

impl Coloring {
    pub fn new(k: usize, assignment: BTreeMap<Prime, usize>) -> Self {
        Coloring { k, assignment }
    }

    pub fn color(&self, p: Prime) -> Option<usize> {
        self.assignment.get(&p).copied()
    }

    /// Total on `g`, colors below `k`, and no monochromatic edge.
    pub fn is_proper_on(&self, g: &PrimeGraph) -> bool {
        g.vertices().iter().all(|&p| self.color(p).is_some_and(|c| c < self.k))
            && g.edges().iter().all(|&(a, b)| self.color(a) != self.color(b))
    }

    pub fn class(&self, c: usize) -> BTreeSet<Prime> {
        self.assignment.iter().filter(|(_, &x)| x == c).map(|(&p, _)| p).collect()
    }

    pub fn colors_used(&self) -> BTreeSet<usize> {
        self.assignment.values().copied().collect()
    }

    /// Applies a permutation of color indices.
    pub fn permuted(&self, perm: &[usize]) -> Coloring {
        Coloring::new(self.k, self.assignment.iter().map(|(&p, &c)| (p, perm[c])).collect())
    }

    pub fn restricted(&self, set: &BTreeSet<Prime>) -> Coloring {
        Coloring::new(self.k, self.assignment.iter().filter(|(p, _)| set.contains(p)).map(|(&p, &c)| (p, c)).collect())
    }
}

pub fn primes(vals: &[u64]) -> BTreeSet<Prime> {
    vals.iter().map(|&v| Prime::new(v).expect("prime literal")).collect()
}

pub fn p(v: u64) -> Prime {
    Prime::new(v).expect("prime literal")
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn psl() -> PrimeGraph {
        new_graph(&[2, 3, 7, 13], &[(2, 7), (2, 13), (3, 7), (3, 13), (7, 13)]).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(new_graph(&[2, 4], &[]), Err(GraphError::NonPrimeVertex(4)));
        assert_eq!(new_graph(&[2, 3], &[(2, 5)]), Err(GraphError::DanglingEdge(2, 5)));
        assert_eq!(new_graph(&[2, 3], &[(3, 3)]), Err(GraphError::LoopEdge(3)));
        let g = new_graph(&[2], &[]).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn canonical_form() {
        let g = new_graph(&[13, 7, 3, 2, 7], &[(13, 2), (2, 13), (7, 3)]).unwrap();
        assert_eq!(g.vertices().iter().map(|p| p.get()).collect::<Vec<_>>(), vec![2, 3, 7, 13]);
        assert_eq!(g.edges(), vec![(p(2), p(13)), (p(3), p(7))]);
    }

    #[test]
    fn complement_of_psl() {
        let c = psl().complement();
        assert_eq!(c.edges(), vec![(p(2), p(3))]);
        let k3 = new_graph(&[2, 3, 5], &[]).unwrap().complement();
        assert_eq!(k3.edge_count(), 3);
    }

    #[test]
    fn induced_and_neighbors() {
        let g = psl();
        let e = g.induced(&primes(&[7, 13])).unwrap();
        assert_eq!(e.edges(), vec![(p(7), p(13))]);
        assert!(g.induced(&BTreeSet::new()).unwrap().is_empty());
        assert_eq!(g.induced(&g.vertex_set()).unwrap(), g);
        assert_eq!(g.induced(&primes(&[5])), Err(GraphError::UnknownVertex(5)));
        assert_eq!(g.neighbors(&primes(&[3])).unwrap(), primes(&[7, 13]));
        assert_eq!(g.neighbors(&primes(&[7, 13])).unwrap(), primes(&[2, 3, 7, 13]));
        assert!(g.neighbors(&BTreeSet::new()).unwrap().is_empty());
    }

    #[test]
    fn triangles_examples() {
        assert_eq!(psl().triangles(), vec![[p(2), p(7), p(13)], [p(3), p(7), p(13)]]);
        let k4 = new_graph(&[2, 3, 5, 7], &[]).unwrap().complement();
        assert_eq!(k4.triangles().len(), 4);
        let bip = new_graph(&[2, 3, 5, 7], &[(2, 5), (2, 7), (3, 5), (3, 7)]).unwrap();
        assert!(bip.is_triangle_free());
    }

    #[test]
    fn coloring_examples() {
        let c = psl().k_colorable(3, &BTreeMap::new()).unwrap().unwrap();
        assert!(c.is_proper_on(&psl()));
        // first-found: 2->0, 3->0, 7->1, 13->2
        assert_eq!(c.assignment.values().copied().collect::<Vec<_>>(), vec![0, 0, 1, 2]);
        let k4 = new_graph(&[2, 3, 5, 7], &[]).unwrap().complement();
        assert_eq!(k4.k_colorable(3, &BTreeMap::new()).unwrap(), None);
        let e = new_graph(&[2, 3, 5], &[]).unwrap();
        let c1 = e.k_colorable(1, &BTreeMap::new()).unwrap().unwrap();
        assert!(c1.assignment.values().all(|&c| c == 0));
    }

    #[test]
    fn fixed_assignment_checked() {
        let g = psl();
        let bad: BTreeMap<_, _> = [(p(7), 1), (p(13), 1)].into();
        assert!(matches!(g.k_colorable(3, &bad), Err(GraphError::InvalidFixedAssignment(_))));
        let out_of_range: BTreeMap<_, _> = [(p(7), 3)].into();
        assert!(matches!(g.k_colorable(3, &out_of_range), Err(GraphError::InvalidFixedAssignment(_))));
        let fixed: BTreeMap<_, _> = [(p(2), 2), (p(3), 2)].into();
        let c = g.k_colorable(3, &fixed).unwrap().unwrap();
        assert_eq!(c.color(p(2)), Some(2));
        assert_eq!(c.color(p(3)), Some(2));
    }

    #[test]
    fn parse_forms() {
        let t = PrimeGraph::parse("2 3 7 13 ; 2-7 2-13 3-7 3-13 7-13").unwrap();
        assert_eq!(t, psl());
        let j = PrimeGraph::parse(r#"{"vertices":[2,3,7,13],"edges":[[2,7],[2,13],[3,7],[3,13],[7,13]]}"#).unwrap();
        assert_eq!(j, psl());
        assert_eq!(PrimeGraph::parse(&psl().to_text()).unwrap(), psl());
        let json = serde_json::to_string(&psl()).unwrap();
        assert_eq!(json, r#"{"vertices":[2,3,7,13],"edges":[[2,7],[2,13],[3,7],[3,13],[7,13]]}"#);
        assert!(PrimeGraph::parse("").is_err());
        assert!(PrimeGraph::parse("2 3 ; 2=3").is_err());
        assert!(PrimeGraph::parse(r#"{"vertices":[2,9]}"#).is_err());
    }

    #[test]
    fn dot_lists_edges() {
        let d = psl().to_dot("psl");
        assert!(d.contains("3 -- 13;"));
        assert_eq!(d.matches("--").count(), 5);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = PrimeGraph> {
        const PR: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut t = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if bits[t] {
                            edges.push((PR[i], PR[j]));
                        }
                        t += 1;
                    }
                }
                new_graph(&PR[..n], &edges).unwrap()
            })
        })
    }

    fn brute_colorable(g: &PrimeGraph, k: usize) -> bool {
        let n = g.len();
        let edges: Vec<(usize, usize)> =
            g.edges().iter().map(|&(a, b)| (g.index_of(a).unwrap(), g.index_of(b).unwrap())).collect();
        (0..k.pow(n as u32)).any(|mut code| {
            let mut col = vec![0; n];
            for c in col.iter_mut() {
                *c = code % k;
                code /= k;
            }
            edges.iter().all(|&(i, j)| col[i] != col[j])
        })
    }

    proptest! {
        #[test]
        fn complement_involution(g in arb_graph(8)) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn induced_edges_are_restriction(g in arb_graph(8), mask in 0u32..256) {
            let set: BTreeSet<Prime> = g.vertices().iter().enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
            let h = g.induced(&set).unwrap();
            let want: Vec<_> = g.edges().into_iter().filter(|(a, b)| set.contains(a) && set.contains(b)).collect();
            prop_assert_eq!(h.edges(), want);
        }

        #[test]
        fn triangles_match_triple_scan(g in arb_graph(8)) {
            let vs = g.vertices();
            let mut want = Vec::new();
            for i in 0..vs.len() { for j in i+1..vs.len() { for k in j+1..vs.len() {
                if g.has_edge(vs[i], vs[j]) && g.has_edge(vs[i], vs[k]) && g.has_edge(vs[j], vs[k]) {
                    want.push([vs[i], vs[j], vs[k]]);
                }
            }}}
            prop_assert_eq!(g.is_triangle_free(), want.is_empty());
            prop_assert_eq!(g.triangles(), want);
        }

        #[test]
        fn coloring_sound_and_complete(g in arb_graph(8), k in 1usize..4) {
            match g.k_colorable(k, &BTreeMap::new()).unwrap() {
                Some(c) => prop_assert!(c.is_proper_on(&g)),
                None => prop_assert!(!brute_colorable(&g, k)),
            }
        }

        #[test]
        fn all_colorings_are_proper(g in arb_graph(6)) {
            let all = g.all_colorings(3, usize::MAX);
            prop_assert_eq!(all.is_empty(), !brute_colorable(&g, 3));
            for c in &all { prop_assert!(c.is_proper_on(&g)); }
            if let Some(first) = g.k_colorable(3, &BTreeMap::new()).unwrap() {
                prop_assert_eq!(&all[0], &first);
            }
        }
    }
}
