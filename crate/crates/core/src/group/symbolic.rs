//! pgc(A ⋊ (H × K)) from the fixed-point behavior of H and K on the
//! components of an abelian normal subgroup A.

use super::recipe::SolvableRecipe;
use super::GroupError;
use crate::data::GroupData;
use crate::graph::PrimeGraph;
use crate::primes::Prime;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// One elementary abelian component of A.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AModule {
    pub prime: Prime,
    /// Primes of H with an element that fixes a nonzero vector.
    pub h_fixed: BTreeSet<Prime>,
    /// Primes of K all of whose elements of that order act fixed-point-freely.
    pub k_frobenius: BTreeSet<Prime>,
}

/// Edge rules:
/// * two primes of A are never adjacent;
/// * r in A and s outside it are adjacent iff every order-s element acts
///   fixed-point-freely on A_r and H × K has no element of order rs;
/// * otherwise edges follow pgc(H) or `k_pgc`, and H–K pairs commute.
pub fn pgc_semidirect_symbolic(a: &[AModule], h: &GroupData, k_pgc: &PrimeGraph) -> Result<PrimeGraph, GroupError> {
    let pi_h = h.pgc.vertex_set();
    let pi_k = k_pgc.vertex_set();
    if let Some(p) = pi_h.intersection(&pi_k).next() {
        return Err(GroupError::DisjointnessViolation(format!("{p} divides both |{}| and |K|", h.name)));
    }
    let pi_a: BTreeSet<Prime> = a.iter().map(|m| m.prime).collect();
    if pi_a.len() != a.len() {
        return Err(GroupError::HypothesisViolation("one module per prime of A".into()));
    }
    for m in a {
        if !m.h_fixed.is_subset(&pi_h) || !m.k_frobenius.is_subset(&pi_k) {
            return Err(GroupError::HypothesisViolation(format!("module data for {} names foreign primes", m.prime)));
        }
    }
    let commute_in_l = |r: Prime, s: Prime| -> bool {
        match (pi_h.contains(&r), pi_h.contains(&s), pi_k.contains(&r), pi_k.contains(&s)) {
            (true, true, _, _) => !h.pgc.has_edge(r, s),
            (_, _, true, true) => !k_pgc.has_edge(r, s),
            (rh, sh, rk, sk) => (rh || rk) && (sh || sk),
        }
    };
    let all: BTreeSet<Prime> = pi_a.iter().chain(&pi_h).chain(&pi_k).copied().collect();
    let mut edges = Vec::new();
    let list: Vec<Prime> = all.iter().copied().collect();
    for (i, &r) in list.iter().enumerate() {
        for &s in &list[i + 1..] {
            let adjacent = match (a.iter().find(|m| m.prime == r), a.iter().find(|m| m.prime == s)) {
                (Some(_), Some(_)) => false,
                (Some(m), None) | (None, Some(m)) => {
                    let other = if m.prime == r { s } else { r };
                    let fpf = if pi_h.contains(&other) {
                        !m.h_fixed.contains(&other)
                    } else {
                        m.k_frobenius.contains(&other)
                    };
                    fpf && !commute_in_l(r, s)
                }
                (None, None) => !commute_in_l(r, s),
            };
            if adjacent {
                edges.push((r, s));
            }
        }
    }
    Ok(PrimeGraph::from_prime_edges(list, edges)?)
}

impl SolvableRecipe {
    /// The pgc predicted by the symbolic rules, with V as A, the nonsolvable
    /// factor (if any) as H and U ⋊ W as K.
    pub fn symbolic_pgc(&self) -> Result<PrimeGraph, GroupError> {
        let h = match &self.e {
            Some(e) => {
                GroupData { name: e.group.clone(), pi: e.pi.clone(), pgc: e.pgc.clone(), ..GroupData::default() }
            }
            None => GroupData { name: "1".into(), ..GroupData::default() },
        };
        let a: Vec<AModule> = self
            .v_components
            .iter()
            .map(|c| AModule {
                prime: c.prime,
                h_fixed: c.e_fixed.clone().unwrap_or_else(|| h.pi.clone()),
                k_frobenius: c.scalar.iter().chain(&c.characters).map(|s| s.by).collect(),
            })
            .collect();
        pgc_semidirect_symbolic(&a, &h, &self.k_pgc())
    }
}
