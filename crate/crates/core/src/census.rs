//! Exhaustive classification of every labeled graph on a fixed prime set.

use crate::graph::{GraphError, PrimeGraph};
use crate::primes::Prime;
use crate::realizability::{classify_psl213, Condition};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::Path;

pub const DEFAULT_MAX_VERTICES: usize = 6;
/// Hard ceiling even with `force` (2^28 graphs at eight vertices is out of reach).
pub const FORCE_MAX_VERTICES: usize = 7;

#[derive(Clone, Debug, Serialize)]
pub struct Exemplar {
    /// Bit i set when the i-th pair (lexicographic) is an edge.
    pub index: u64,
    pub graph: PrimeGraph,
    pub dot: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationReport {
    pub vertex_set: Vec<Prime>,
    pub total: u64,
    pub counts: BTreeMap<Condition, u64>,
    pub exemplars: BTreeMap<Condition, Vec<Exemplar>>,
}

fn pairs(vs: &[Prime]) -> Vec<(Prime, Prime)> {
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            out.push((vs[i], vs[j]));
        }
    }
    out
}

/// The graph with edge mask `index` over the lexicographic pair order.
pub fn graph_at(vs: &[Prime], index: u64) -> PrimeGraph {
    let edges: Vec<(Prime, Prime)> =
        pairs(vs).into_iter().enumerate().filter(|(i, _)| index >> i & 1 == 1).map(|(_, e)| e).collect();
    PrimeGraph::from_prime_edges(vs.to_vec(), edges).expect("distinct primes")
}

/// Classifies all 2^C(n,2) graphs. More than six vertices needs `force`, more
/// than seven is refused outright.
pub fn enumerate(vertices: &[Prime], per_class: usize, force: bool) -> Result<EnumerationReport, GraphError> {
    let mut vs = vertices.to_vec();
    vs.sort();
    vs.dedup();
    let limit = if force { FORCE_MAX_VERTICES } else { DEFAULT_MAX_VERTICES };
    if vs.len() > limit {
        return Err(GraphError::TooManyVertices(vs.len()));
    }
    let total = 1u64 << pairs(&vs).len();
    let verdicts: Vec<Condition> =
        (0..total).into_par_iter().map(|i| classify_psl213(&graph_at(&vs, i)).condition).collect();
    let mut counts: BTreeMap<Condition, u64> = Condition::ALL.iter().map(|&c| (c, 0)).collect();
    let mut exemplars: BTreeMap<Condition, Vec<Exemplar>> = BTreeMap::new();
    for (i, &c) in verdicts.iter().enumerate() {
        *counts.entry(c).or_default() += 1;
        let list = exemplars.entry(c).or_default();
        if list.len() < per_class {
            let graph = graph_at(&vs, i as u64);
            let dot = graph.to_dot(&format!("{}_{i}", c.slug()));
            list.push(Exemplar { index: i as u64, graph, dot });
        }
    }
    Ok(EnumerationReport { vertex_set: vs, total, counts, exemplars })
}

impl EnumerationReport {
    /// Writes `report.json` and one DOT file per exemplar into `dir`.
    pub fn write_to(&self, dir: &Path) -> std::io::Result<()> {
        std::fs::create_dir_all(dir)?;
        let json = serde_json::to_string_pretty(self).expect("serializable");
        std::fs::write(dir.join("report.json"), json + "\n")?;
        for (c, list) in &self.exemplars {
            for e in list {
                std::fs::write(dir.join(format!("{}_{}.dot", c.slug(), e.index)), &e.dot)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::primes;

    fn vs(v: &[u64]) -> Vec<Prime> {
        primes(v).into_iter().collect()
    }

    #[test]
    fn small_censuses() {
        let r = enumerate(&vs(&[2, 3]), 2, false).unwrap();
        assert_eq!(r.total, 2);
        assert_eq!(r.counts[&Condition::Cond1], 2);

        let r = enumerate(&vs(&[2, 3, 7, 13]), 1, false).unwrap();
        assert_eq!(r.total, 64);
        assert_eq!(r.counts.values().sum::<u64>(), 64);
        // the complete graph K4 is the only non-realizable graph on four vertices
        assert_eq!(r.counts[&Condition::None], 1);
        assert_eq!(r.exemplars[&Condition::None][0].index, 63);
    }

    #[test]
    fn vertex_caps() {
        let seven = vs(&[2, 3, 5, 7, 11, 13, 17]);
        assert!(matches!(enumerate(&seven, 1, false), Err(GraphError::TooManyVertices(7))));
        let eight = vs(&[2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(matches!(enumerate(&eight, 1, true), Err(GraphError::TooManyVertices(8))));
    }

    #[test]
    fn writes_files() {
        let dir = tempfile::tempdir().unwrap();
        let r = enumerate(&vs(&[2, 3, 5]), 1, false).unwrap();
        r.write_to(dir.path()).unwrap();
        assert!(dir.path().join("report.json").exists());
        assert!(dir.path().join("cond1_0.dot").exists());
    }
}
