//! Fixed-point arithmetic on character data.
//!
//! The averaging formula dim C_V(g) = (1/|g|) Σ β(x) over ⟨g⟩, the edge
//! removal sets A_χ built from Brauer rows, the decider for
//! Λ = pgc(G) ∖ ∪_{χ∈Y} A_χ, and the set operations on fixed-point rows.

use crate::graph::PrimeGraph;
use crate::primes::Prime;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

pub type Rational = Ratio<i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharacterError {
    #[error("character average {0} is not a nonnegative integer")]
    NonIntegralAverage(Rational),
    #[error("character degree {0} is not a positive integer")]
    BadDegree(Rational),
    #[error("empty character slice")]
    EmptySlice,
    #[error("value {0:?} is not an exact rational; only rational character values are supported")]
    IrrationalValue(String),
    #[error("characteristic {0} appears in its own row")]
    CharacteristicInSet(Prime),
    #[error("family member has characteristic {found}, expected {expected}")]
    CharacteristicMismatch { expected: Prime, found: Prime },
    #[error("vertex sets of the target and the base graph differ")]
    VertexMismatch,
    #[error("row {0} lacks 2")]
    MissingTwo(String),
    #[error("{0} is not a power of 2")]
    NotTwoPower(u64),
}

/// Values β(g^0), …, β(g^{m−1}) of a character on a cyclic group of order m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCharacterSlice {
    values: Vec<Rational>,
}

impl CyclicCharacterSlice {
    pub fn new(values: Vec<Rational>) -> Result<Self, CharacterError> {
        let first = *values.first().ok_or(CharacterError::EmptySlice)?;
        if !first.is_integer() || first <= Rational::from_integer(0) {
            return Err(CharacterError::BadDegree(first));
        }
        Ok(CyclicCharacterSlice { values })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self, CharacterError> {
        Self::new(values.iter().map(|&v| Rational::from_integer(v)).collect())
    }

    /// Parses tokens such as `3`, `-1` or `1/2`; anything else is rejected.
    pub fn parse(tokens: &[&str]) -> Result<Self, CharacterError> {
        let vals = tokens
            .iter()
            .map(|t| t.trim().parse::<Rational>().map_err(|_| CharacterError::IrrationalValue(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vals)
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn average(&self) -> Rational {
        let sum: Rational = self.values.iter().sum();
        sum / Rational::from_integer(self.values.len() as i64)
    }
}

/// Dimension of the fixed space of a generator: the exact average of the slice.
pub fn fixed_dim(slice: &CyclicCharacterSlice) -> Result<u64, CharacterError> {
    let avg = slice.average();
    if !avg.is_integer() || avg < Rational::from_integer(0) {
        return Err(CharacterError::NonIntegralAverage(avg));
    }
    Ok(avg.to_integer() as u64)
}

/// Edges p−q for every q in one Brauer row of characteristic p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRemovalSet {
    pub p: Prime,
    pub edges: BTreeSet<(Prime, Prime)>,
}

impl EdgeRemovalSet {
    /// Edges that are actually present in `g`.
    pub fn within(&self, g: &PrimeGraph) -> BTreeSet<(Prime, Prime)> {
        self.edges.iter().copied().filter(|&(a, b)| g.has_edge(a, b)).collect()
    }
}

pub fn edge_removal_set(p: Prime, row: &BTreeSet<Prime>) -> Result<EdgeRemovalSet, CharacterError> {
    if row.contains(&p) {
        return Err(CharacterError::CharacteristicInSet(p));
    }
    Ok(EdgeRemovalSet { p, edges: row.iter().map(|&q| (p.min(q), p.max(q))).collect() })
}

fn check_family(
    lambda: &PrimeGraph,
    base: &PrimeGraph,
    family: &[EdgeRemovalSet],
    p: Prime,
) -> Result<(), CharacterError> {
    if lambda.vertices() != base.vertices() {
        return Err(CharacterError::VertexMismatch);
    }
    if let Some(f) = family.iter().find(|f| f.p != p) {
        return Err(CharacterError::CharacteristicMismatch { expected: p, found: f.p });
    }
    Ok(())
}

/// Decides whether Λ = base ∖ ∪_{χ∈Y} A_χ for some nonempty Y and returns the
/// maximal such Y (indices into `family`).
pub fn suzgen_decide(
    lambda: &PrimeGraph,
    base: &PrimeGraph,
    family: &[EdgeRemovalSet],
    p: Prime,
) -> Result<Option<Vec<usize>>, CharacterError> {
    check_family(lambda, base, family, p)?;
    let base_edges: BTreeSet<_> = base.edges().into_iter().collect();
    let lambda_edges: BTreeSet<_> = lambda.edges().into_iter().collect();
    if !lambda_edges.is_subset(&base_edges) {
        return Ok(None);
    }
    let removed: BTreeSet<_> = base_edges.difference(&lambda_edges).copied().collect();
    if removed.iter().any(|&(a, b)| a != p && b != p) {
        return Ok(None);
    }
    let y: Vec<usize> = (0..family.len()).filter(|&i| family[i].within(base).is_subset(&removed)).collect();
    let union: BTreeSet<_> = y.iter().flat_map(|&i| family[i].within(base)).collect();
    Ok((!y.is_empty() && union == removed).then_some(y))
}

/// Every graph of the form base ∖ ∪_{χ∈Y} A_χ over nonempty Y, sorted by edge list.
pub fn achievable_graphs(base: &PrimeGraph, family: &[EdgeRemovalSet]) -> Vec<PrimeGraph> {
    let mut unions: BTreeSet<BTreeSet<(Prime, Prime)>> = BTreeSet::new();
    let sets: Vec<_> = family.iter().map(|f| f.within(base)).collect();
    let mut frontier: BTreeSet<BTreeSet<(Prime, Prime)>> = BTreeSet::new();
    for s in &sets {
        frontier.insert(s.clone());
    }
    // closure of the family under union
    while !frontier.is_empty() {
        let mut next = BTreeSet::new();
        for u in &frontier {
            if unions.insert(u.clone()) {
                for s in &sets {
                    let w: BTreeSet<_> = u.union(s).copied().collect();
                    if !unions.contains(&w) {
                        next.insert(w);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<PrimeGraph> = unions
        .into_iter()
        .map(|u| {
            let mut g = base.clone();
            for (a, b) in u {
                g.remove_edge(a, b);
            }
            g
        })
        .collect();
    out.sort_by_key(|g| g.edges());
    out.dedup();
    out
}

/// Rows of fixed-point information for one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointProfile {
    pub group: String,
    pub rows: Vec<BTreeSet<Prime>>,
}

/// Direct sum of two modules: fixed points for the union of the rows.
pub fn combine_profiles(p: &BTreeSet<Prime>, q: &BTreeSet<Prime>) -> BTreeSet<Prime> {
    p | q
}

/// Pulling a module back along a quotient by N adds π(N) to the row.
pub fn extend_profile(row: &BTreeSet<Prime>, pi_n: &BTreeSet<Prime>) -> BTreeSet<Prime> {
    row | pi_n
}

/// Fixed-point rows are unchanged when passing to T.O for a 2-group O,
/// provided every row contains 2.
pub fn induce_profile(profile: &FixedPointProfile, out_order: u64) -> Result<FixedPointProfile, CharacterError> {
    if !out_order.is_power_of_two() {
        return Err(CharacterError::NotTwoPower(out_order));
    }
    if let Some(row) = profile.rows.iter().find(|r| !r.iter().any(|p| p.get() == 2)) {
        return Err(CharacterError::MissingTwo(crate::data::fmt_set(row)));
    }
    let group = if out_order == 1 { profile.group.clone() } else { format!("{}.{}", profile.group, out_order) };
    Ok(FixedPointProfile { group, rows: profile.rows.clone() })
}

/// Indices of rows whose union is exactly `target`, using every row contained
/// in `target`. `None` when no union of rows equals it.
pub fn find_row_union(rows: &[BTreeSet<Prime>], target: &BTreeSet<Prime>) -> Option<Vec<usize>> {
    let picks: Vec<usize> = (0..rows.len()).filter(|&i| rows[i].is_subset(target)).collect();
    let union: BTreeSet<Prime> = picks.iter().flat_map(|&i| rows[i].iter().copied()).collect();
    (!picks.is_empty() && union == *target).then_some(picks)
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;
    use crate::graph::{new_graph, p, primes};
    use proptest::prelude::*;

    fn psl() -> PrimeGraph {
        new_graph(&[2, 3, 7, 13], &[(2, 7), (2, 13), (3, 7), (3, 13), (7, 13)]).unwrap()
    }

    #[test]
    fn fixed_dim_examples() {
        let one = CyclicCharacterSlice::from_integers(&[5]).unwrap();
        assert_eq!(fixed_dim(&one).unwrap(), 5);
        let triv = CyclicCharacterSlice::from_integers(&[1, 1, 1, 1]).unwrap();
        assert_eq!(fixed_dim(&triv).unwrap(), 1);
        let sign = CyclicCharacterSlice::from_integers(&[1, -1]).unwrap();
        assert_eq!(fixed_dim(&sign).unwrap(), 0);
        let reg = CyclicCharacterSlice::from_integers(&[3, 0, 0]).unwrap();
        assert_eq!(fixed_dim(&reg).unwrap(), 1);
        let bad = CyclicCharacterSlice::from_integers(&[2, 0, 0]).unwrap();
        assert!(matches!(fixed_dim(&bad), Err(CharacterError::NonIntegralAverage(_))));
        let neg = CyclicCharacterSlice::from_integers(&[1, -3]).unwrap();
        assert!(matches!(fixed_dim(&neg), Err(CharacterError::NonIntegralAverage(_))));
        assert!(matches!(CyclicCharacterSlice::from_integers(&[0, 1]), Err(CharacterError::BadDegree(_))));
        assert!(matches!(CyclicCharacterSlice::parse(&["2", "sqrt(2)"]), Err(CharacterError::IrrationalValue(_))));
        let half = CyclicCharacterSlice::parse(&["2", "1/2", "-1/2"]).unwrap();
        assert_eq!(half.average(), Rational::new(2, 3));
    }

    #[test]
    fn removal_sets() {
        let a = edge_removal_set(p(13), &primes(&[2, 3, 7])).unwrap();
        assert_eq!(a.edges, [(p(2), p(13)), (p(3), p(13)), (p(7), p(13))].into());
        assert!(edge_removal_set(p(3), &BTreeSet::new()).unwrap().edges.is_empty());
        assert_eq!(edge_removal_set(p(2), &primes(&[2, 3])), Err(CharacterError::CharacteristicInSet(p(2))));
    }

    #[test]
    fn suzgen_examples() {
        let fam = vec![edge_removal_set(p(13), &primes(&[2, 3, 7])).unwrap()];
        let target = new_graph(&[2, 3, 7, 13], &[(2, 7), (3, 7)]).unwrap();
        assert_eq!(suzgen_decide(&target, &psl(), &fam, p(13)).unwrap(), Some(vec![0]));
        assert_eq!(suzgen_decide(&psl(), &psl(), &fam, p(13)).unwrap(), None);
        let with_empty = vec![fam[0].clone(), edge_removal_set(p(13), &BTreeSet::new()).unwrap()];
        assert_eq!(suzgen_decide(&psl(), &psl(), &with_empty, p(13)).unwrap(), Some(vec![1]));
        let other = new_graph(&[2, 3, 7], &[]).unwrap();
        assert_eq!(suzgen_decide(&other, &psl(), &fam, p(13)), Err(CharacterError::VertexMismatch));
        let wrong = vec![edge_removal_set(p(3), &primes(&[2])).unwrap()];
        assert!(matches!(
            suzgen_decide(&psl(), &psl(), &wrong, p(13)),
            Err(CharacterError::CharacteristicMismatch { .. })
        ));
    }

    #[test]
    fn profile_ops() {
        assert_eq!(combine_profiles(&primes(&[3]), &primes(&[7])), primes(&[3, 7]));
        assert_eq!(combine_profiles(&BTreeSet::new(), &primes(&[5])), primes(&[5]));
        assert_eq!(combine_profiles(&primes(&[2, 3]), &primes(&[3, 13])), primes(&[2, 3, 13]));
        assert_eq!(extend_profile(&primes(&[3, 7]), &primes(&[2])), primes(&[2, 3, 7]));
        assert_eq!(extend_profile(&primes(&[3]), &BTreeSet::new()), primes(&[3]));
        assert_eq!(extend_profile(&BTreeSet::new(), &primes(&[5])), primes(&[5]));
        let psl =
            FixedPointProfile { group: "PSL(2,13)".into(), rows: vec![primes(&[2, 3, 7]), primes(&[2, 3, 7, 13])] };
        let aut = induce_profile(&psl, 2).unwrap();
        assert_eq!(aut.rows, psl.rows);
        assert_eq!(aut.group, "PSL(2,13).2");
        let bad = FixedPointProfile { group: "x".into(), rows: vec![primes(&[3, 7])] };
        assert!(matches!(induce_profile(&bad, 2), Err(CharacterError::MissingTwo(_))));
        assert_eq!(induce_profile(&psl, 6), Err(CharacterError::NotTwoPower(6)));
    }

    #[test]
    fn row_unions() {
        let rows = vec![primes(&[2, 3, 7]), primes(&[3]), primes(&[3, 7, 13])];
        assert_eq!(find_row_union(&rows, &primes(&[3, 7, 13])), Some(vec![1, 2]));
        assert_eq!(find_row_union(&rows, &primes(&[2, 3, 7, 13])), Some(vec![0, 1, 2]));
        assert_eq!(find_row_union(&rows, &primes(&[3, 7])), None);
    }

    fn arb_row() -> impl Strategy<Value = BTreeSet<Prime>> {
        proptest::collection::btree_set(prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]), 0..6)
            .prop_map(|s| s.into_iter().map(p).collect())
    }

    fn brute(lambda: &PrimeGraph, base: &PrimeGraph, fam: &[EdgeRemovalSet]) -> bool {
        (1u32..1 << fam.len()).any(|mask| {
            let mut g = base.clone();
            for (i, f) in fam.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for &(a, b) in &f.edges {
                        g.remove_edge(a, b);
                    }
                }
            }
            g == *lambda
        })
    }

    proptest! {
        #[test]
        fn set_ops_laws(a in arb_row(), b in arb_row(), c in arb_row()) {
            prop_assert_eq!(combine_profiles(&a, &b), combine_profiles(&b, &a));
            prop_assert_eq!(combine_profiles(&combine_profiles(&a, &b), &c), combine_profiles(&a, &combine_profiles(&b, &c)));
            prop_assert!(a.is_subset(&combine_profiles(&a, &b)));
            prop_assert_eq!(extend_profile(&extend_profile(&a, &b), &c), extend_profile(&a, &combine_profiles(&b, &c)));
            prop_assert!(a.is_subset(&extend_profile(&a, &b)));
        }

        #[test]
        fn constant_slice_averages_to_itself(c in 1i64..20, m in 1usize..12) {
            let s = CyclicCharacterSlice::from_integers(&vec![c; m]).unwrap();
            prop_assert_eq!(fixed_dim(&s).unwrap(), c as u64);
        }

        #[test]
        fn suzgen_matches_brute_force(
            bits in proptest::collection::vec(any::<bool>(), 10),
            rows in proptest::collection::vec(proptest::collection::btree_set(prop::sample::select(vec![2u64, 3, 7, 11]), 0..4), 1..7),
            lbits in proptest::collection::vec(any::<bool>(), 10),
        ) {
            const PR: [u64; 5] = [2, 3, 5, 7, 11];
            let mut be = Vec::new();
            let mut le = Vec::new();
            let mut t = 0;
            for i in 0..5 { for j in i+1..5 {
                if bits[t] { be.push((PR[i], PR[j])); if lbits[t] { le.push((PR[i], PR[j])); } }
                t += 1;
            }}
            let base = new_graph(&PR, &be).unwrap();
            let fam: Vec<_> = rows.iter().map(|r| edge_removal_set(p(5), &r.iter().map(|&v| p(v)).collect()).unwrap()).collect();
            // targets: a random subgraph, and every achievable graph
            let lambda = new_graph(&PR, &le).unwrap();
            let got = suzgen_decide(&lambda, &base, &fam, p(5)).unwrap();
            prop_assert_eq!(got.is_some(), brute(&lambda, &base, &fam));
            for g in achievable_graphs(&base, &fam) {
                let y = suzgen_decide(&g, &base, &fam, p(5)).unwrap();
                prop_assert!(y.is_some());
                prop_assert!(brute(&g, &base, &fam));
            }
        }
    }
}
