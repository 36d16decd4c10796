//! Symbolic witnesses for graphs certified by conditions 2(a) and 2(b):
//! the four certificate vertices become a PSL(2,13)-type factor from the
//! dataset, everything else a solvable recipe around it.

use super::recipe::{plan_solvable_recipe, EFactor, SolvableRecipe};
use super::GroupError;
use crate::character::find_row_union;
use crate::data::Dataset;
use crate::graph::PrimeGraph;
use crate::primes::{is_prime, Prime};
use crate::realizability::{classify_psl213, Condition, Verdict};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

const TARGET: [u64; 4] = [2, 3, 7, 13];
const COND_2A_GROUPS: [&str; 2] = ["PSL(2,13)", "Aut(PSL(2,13))"];
const COND_2B_GROUPS: [&str; 3] = ["2.PSL(2,13)", "F_3^36 ⋊ 2.PSL(2,13)", "C_3 × 2.PSL(2,13)"];

#[derive(Clone, Debug, Serialize)]
pub struct PslWitness {
    pub verdict: Verdict,
    pub group: String,
    /// Input prime to the prime used in the construction.
    pub relabel: BTreeMap<Prime, Prime>,
    pub recipe: SolvableRecipe,
    /// A direct factor C_2 is added (removes every edge at 2).
    pub times_c2: bool,
    pub predicted: PrimeGraph,
    /// `predicted` equals the relabeled input.
    pub matches: bool,
}

fn fresh_primes(avoid: &BTreeSet<u64>) -> impl Iterator<Item = Prime> + '_ {
    (5u64..).filter(move |n| is_prime(*n) && !avoid.contains(n)).map(|n| Prime::new(n).expect("prime"))
}

fn relabel_map(g: &PrimeGraph, phi: &BTreeMap<Prime, Prime>) -> BTreeMap<Prime, Prime> {
    let mut avoid: BTreeSet<u64> = g.vertices().iter().map(|p| p.get()).collect();
    avoid.extend(TARGET);
    let mut fresh = fresh_primes(&avoid);
    g.vertices()
        .iter()
        .map(|&v| {
            let to = match phi.get(&v) {
                Some(&t) => t,
                None if TARGET.contains(&v.get()) => fresh.next().expect("infinitely many primes"),
                None => v,
            };
            (v, to)
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for tail in permutations(n - 1) {
        for i in 0..=tail.len() {
            let mut p = tail.clone();
            p.insert(i, n - 1);
            out.push(p);
        }
    }
    out.sort();
    out
}

/// Builds the witness for a graph classified by condition 2. Condition 1
/// graphs go through the solvable construction instead.
pub fn realize_psl_symbolic(g: &PrimeGraph, data: &Dataset) -> Result<PslWitness, GroupError> {
    let verdict = classify_psl213(g);
    let target: Vec<Prime> = TARGET.iter().map(|&t| Prime::new(t).expect("prime")).collect();
    let (x, mut graph, times_c2, candidates, phis): (_, PrimeGraph, bool, &[&str], Vec<BTreeMap<Prime, Prime>>) =
        match verdict.condition {
            Condition::None => {
                return Err(GroupError::NotRealizable(verdict.refutation_note.clone().unwrap_or_default()))
            }
            Condition::Cond1 => {
                return Err(GroupError::HypothesisViolation("condition 1 graphs use the solvable construction".into()))
            }
            Condition::Cond2a => {
                let x = verdict.x.clone().expect("2a carries X");
                let xs: Vec<Prime> = x.iter().copied().collect();
                let phis = permutations(4)
                    .into_iter()
                    .map(|perm| xs.iter().enumerate().map(|(i, &v)| (v, target[perm[i]])).collect())
                    .collect();
                (x, g.clone(), false, &COND_2A_GROUPS[..], phis)
            }
            Condition::Cond2bI | Condition::Cond2bII => {
                let x = verdict.x.clone().expect("2b carries X");
                let l = verdict.labeling.expect("2b carries a labeling");
                let phi: BTreeMap<Prime, Prime> =
                    [(l.a, target[0]), (l.b, target[3]), (l.c, target[2]), (l.d, target[1])].into_iter().collect();
                let mut g2 = g.clone();
                let ii = verdict.condition == Condition::Cond2bII;
                if ii {
                    for v in g.neighbors_of(l.c).into_iter().filter(|v| !x.contains(v)) {
                        g2.add_edge(l.a, v)?;
                    }
                }
                (x, g2, ii, &COND_2B_GROUPS[..], vec![phi])
            }
        };

    let mut chosen = None;
    'search: for name in candidates {
        let rec = data.get(name)?;
        for phi in &phis {
            let map = relabel_map(&graph, phi);
            let relabeled = graph.relabel(&map)?;
            let x_img: BTreeSet<Prime> = x.iter().map(|v| map[v]).collect();
            if relabeled.induced(&x_img)? != rec.pgc {
                continue;
            }
            let outward_ok =
                x.iter().all(|v| map[v].get() == 13 || graph.neighbors_of(*v).iter().all(|q| x.contains(q)));
            if verdict.condition == Condition::Cond2a && !outward_ok {
                continue;
            }
            chosen = Some((rec.name.clone(), map, relabeled));
            break 'search;
        }
    }
    let (name, map, relabeled) = chosen.ok_or_else(|| {
        GroupError::NotRealizable("no group in the dataset has the certificate's four-vertex graph".into())
    })?;
    graph = relabeled;

    let pi_e: BTreeSet<Prime> = target.iter().copied().collect();
    let rows = data.fixed_rows(&name)?;
    let mut e_rows = BTreeMap::new();
    for &v in graph.vertices().iter().filter(|v| !pi_e.contains(v)) {
        let seen: BTreeSet<Prime> = graph.neighbors_of(v).into_iter().filter(|q| pi_e.contains(q)).collect();
        let need: BTreeSet<Prime> = pi_e.difference(&seen).copied().collect();
        if need != pi_e && find_row_union(&rows, &need).is_none() {
            return Err(GroupError::NotRealizable(format!(
                "{name} has no module whose fixed-point primes are {}",
                crate::data::fmt_set(&need)
            )));
        }
        e_rows.insert(v, need);
    }
    let e = EFactor { group: name.clone(), pi: pi_e, pgc: data.get_pgc(&name)?.clone(), rows: e_rows };
    let recipe = plan_solvable_recipe(&graph, Some(&e))?;
    let mut predicted = recipe.symbolic_pgc()?;
    if times_c2 {
        for q in predicted.neighbors_of(target[0]) {
            predicted.remove_edge(target[0], q);
        }
    }
    let matches = predicted == g.relabel(&map)?;
    Ok(PslWitness { verdict, group: name, relabel: map, recipe, times_c2, predicted, matches })
}
