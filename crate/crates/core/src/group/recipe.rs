//! Solvable recipes G = V ⋊ (U ⋊ W) read off an oriented 3-coloring.
//!
//! Color 0 vertices form W (cyclic factors), color 1 vertices form U
//! (field additive groups acted on by W) and color 2 vertices form V. For a
//! V-prime v with W-in-neighbors A and U-in-neighbors B, let C be the
//! W-primes acting on some member of B. Then V_v is the module induced from
//! a one-dimensional F_{v^d}-module for U × W_A up to U ⋊ W_C: U acts
//! diagonally by characters, W_C permutes coordinates and W_A acts by a
//! scalar of order ∏A.

use super::GroupError;
use crate::field::{FiniteField, FiniteFieldSpec};
use crate::graph::{Coloring, PrimeGraph};
use crate::primes::{lcm, mult_order, Prime};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// A prime acting on a component by multiplication with a field element of that order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarAction {
    pub by: Prime,
    pub multiplier: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UComponent {
    pub prime: Prime,
    pub field: FiniteFieldSpec,
    pub actions: Vec<ScalarAction>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VComponent {
    pub prime: Prime,
    pub field: FiniteFieldSpec,
    /// W-primes acting by scalars.
    pub scalar: Vec<ScalarAction>,
    /// U-primes acting through a root of unity of their order.
    pub characters: Vec<ScalarAction>,
    /// W-primes permuting the coordinates.
    pub permuting: Vec<Prime>,
    /// Dimension over the prime field.
    pub dimension: usize,
    /// Primes of the nonsolvable factor with fixed points on this component.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e_fixed: Option<BTreeSet<Prime>>,
}

impl VComponent {
    pub fn coordinates(&self) -> u64 {
        self.permuting.iter().map(|p| p.get()).product()
    }
}

/// The nonsolvable factor, known only through its pgc and the fixed-point
/// row chosen for each outside prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EFactor {
    pub group: String,
    pub pi: BTreeSet<Prime>,
    pub pgc: PrimeGraph,
    pub rows: BTreeMap<Prime, BTreeSet<Prime>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolvableRecipe {
    pub w_primes: Vec<Prime>,
    pub u_components: Vec<UComponent>,
    pub v_components: Vec<VComponent>,
    /// Oriented edges of the solvable part, from lower to higher class.
    pub arcs: Vec<(Prime, Prime)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<EFactor>,
}

fn sat_pow(b: u64, e: u64) -> u128 {
    (0..e).fold(1u128, |acc, _| acc.saturating_mul(b as u128))
}

impl SolvableRecipe {
    pub fn trivial() -> SolvableRecipe {
        SolvableRecipe { w_primes: vec![], u_components: vec![], v_components: vec![], arcs: vec![], e: None }
    }

    /// Order of the solvable part, saturating.
    pub fn order(&self) -> u128 {
        let w = self.w_primes.iter().fold(1u128, |a, p| a.saturating_mul(p.get() as u128));
        let u = self.u_components.iter().fold(1u128, |a, c| a.saturating_mul(sat_pow(c.prime.get(), c.field.d as u64)));
        self.v_components
            .iter()
            .fold(w.saturating_mul(u), |a, c| a.saturating_mul(sat_pow(c.prime.get(), c.dimension as u64)))
    }

    pub fn solvable_primes(&self) -> BTreeSet<Prime> {
        self.w_primes
            .iter()
            .copied()
            .chain(self.u_components.iter().map(|c| c.prime))
            .chain(self.v_components.iter().map(|c| c.prime))
            .collect()
    }

    pub fn primes(&self) -> BTreeSet<Prime> {
        let mut s = self.solvable_primes();
        if let Some(e) = &self.e {
            s.extend(e.pi.iter().copied());
        }
        s
    }

    /// pgc(U ⋊ W): the W → U arcs.
    pub fn k_pgc(&self) -> PrimeGraph {
        let mut vs: Vec<Prime> = self.w_primes.clone();
        vs.extend(self.u_components.iter().map(|c| c.prime));
        let edges: Vec<(Prime, Prime)> =
            self.u_components.iter().flat_map(|c| c.actions.iter().map(move |a| (a.by, c.prime))).collect();
        PrimeGraph::from_prime_edges(vs, edges).expect("recipe primes are distinct")
    }

    /// Direct product with a recipe on disjoint primes.
    pub fn direct_product(&self, other: &SolvableRecipe) -> Result<SolvableRecipe, GroupError> {
        if !self.primes().is_disjoint(&other.primes()) {
            return Err(GroupError::DisjointnessViolation("factors share a prime".into()));
        }
        if self.e.is_some() && other.e.is_some() {
            return Err(GroupError::HypothesisViolation("at most one nonsolvable factor".into()));
        }
        let mut r = self.clone();
        r.w_primes.extend(other.w_primes.iter().copied());
        r.u_components.extend(other.u_components.iter().cloned());
        r.v_components.extend(other.v_components.iter().cloned());
        r.arcs.extend(other.arcs.iter().copied());
        r.e = r.e.or_else(|| other.e.clone());
        Ok(r)
    }
}

fn field_for(q: Prime, orders: impl IntoIterator<Item = Prime>) -> Result<FiniteField, GroupError> {
    let d = orders.into_iter().fold(1u64, |acc, r| lcm(acc, mult_order(q.get() % r.get(), r.get())));
    if (d as f64) * (q.get() as f64).log2() > 62.0 {
        return Err(GroupError::FieldTooLarge { q: q.get(), d, max_bits: 62 });
    }
    Ok(FiniteField::new(q.get(), d as usize))
}

fn scalar(f: &FiniteField, by: Prime) -> ScalarAction {
    ScalarAction { by, multiplier: f.element_of_order(by.get()).expect("field degree chosen so the order divides") }
}

/// Builds the recipe for `xi` from a coloring of its solvable part. With a
/// nonsolvable factor, `xi` restricted to its primes must be its pgc, the
/// neighbors of those primes must have color 2 and each outside prime needs
/// the row π(E) ∖ N(v).
pub fn build_solvable_recipe(
    xi: &PrimeGraph,
    e: Option<&EFactor>,
    coloring: &Coloring,
) -> Result<SolvableRecipe, GroupError> {
    let fail = |s: String| Err(GroupError::HypothesisViolation(s));
    let pi_e = e.map(|e| e.pi.clone()).unwrap_or_default();
    if let Some(e) = e {
        if !pi_e.is_subset(&xi.vertex_set()) {
            return fail(format!("{} has primes outside the graph", e.group));
        }
        if xi.induced(&pi_e)? != e.pgc {
            return fail(format!("the graph on the primes of {} differs from its pgc", e.group));
        }
    }
    let s = xi.without(&pi_e);
    if !s.is_triangle_free() {
        return fail("solvable part contains a triangle".into());
    }
    for &v in s.vertices() {
        match coloring.color(v) {
            Some(c) if c < 3 => {}
            _ => return fail(format!("vertex {v} lacks a color in 0..3")),
        }
    }
    if !coloring.is_proper_on(&s) {
        return fail("coloring is not proper on the solvable part".into());
    }
    let mut e_rows = BTreeMap::new();
    if let Some(e) = e {
        for &v in s.vertices() {
            let seen: BTreeSet<Prime> = xi.neighbors_of(v).into_iter().filter(|q| pi_e.contains(q)).collect();
            if !seen.is_empty() && coloring.color(v) != Some(2) {
                return fail(format!("{v} is adjacent to {} but not in the top class", e.group));
            }
            let want: BTreeSet<Prime> = pi_e.difference(&seen).copied().collect();
            let row = e.rows.get(&v).cloned().unwrap_or_else(|| pi_e.clone());
            if row != want {
                return fail(format!("{v} needs a module with fixed-point primes {want:?}, got {row:?}"));
            }
            e_rows.insert(v, row);
        }
    }

    let color = |v: Prime| coloring.color(v).expect("checked");
    let mut arcs: Vec<(Prime, Prime)> =
        s.edges().into_iter().map(|(a, b)| if color(a) < color(b) { (a, b) } else { (b, a) }).collect();
    arcs.sort();
    let ins = |v: Prime, c: usize| -> Vec<Prime> {
        arcs.iter().filter(|&&(a, b)| b == v && color(a) == c).map(|&(a, _)| a).collect()
    };
    let class = |c: usize| -> Vec<Prime> { s.vertices().iter().copied().filter(|&v| color(v) == c).collect() };

    let w_primes = class(0);
    let mut u_components = Vec::new();
    for u in class(1) {
        let from_w = ins(u, 0);
        let f = field_for(u, from_w.iter().copied())?;
        let feeds = arcs.iter().any(|&(a, _)| a == u);
        if feeds && f.degree() > 1 {
            return fail(format!(
                "{u} receives arcs from {from_w:?} and has out-arcs, but the acting primes do not divide {u}-1"
            ));
        }
        let actions = from_w.iter().map(|&w| scalar(&f, w)).collect();
        u_components.push(UComponent { prime: u, field: f.spec().clone(), actions });
    }
    let mut v_components = Vec::new();
    for v in class(2) {
        let a = ins(v, 0);
        let b = ins(v, 1);
        let c: BTreeSet<Prime> = b.iter().flat_map(|&u| ins(u, 0)).collect();
        let f = field_for(v, a.iter().chain(&b).copied())?;
        let permuting: Vec<Prime> = c.into_iter().collect();
        let coords: usize = permuting.iter().map(|p| p.get() as usize).product();
        v_components.push(VComponent {
            prime: v,
            scalar: a.iter().map(|&w| scalar(&f, w)).collect(),
            characters: b.iter().map(|&u| scalar(&f, u)).collect(),
            permuting,
            dimension: f.degree() * coords,
            field: f.spec().clone(),
            e_fixed: e_rows.get(&v).cloned(),
        });
    }
    Ok(SolvableRecipe { w_primes, u_components, v_components, arcs, e: e.cloned() })
}

/// Tries every 3-coloring of the solvable part compatible with the
/// hypotheses (neighbors of π(E) and isolated vertices in the top class)
/// and keeps the buildable recipe of smallest order, first one on ties.
pub fn plan_solvable_recipe(xi: &PrimeGraph, e: Option<&EFactor>) -> Result<SolvableRecipe, GroupError> {
    const MAX_COLORINGS: usize = 200_000;
    let pi_e = e.map(|e| e.pi.clone()).unwrap_or_default();
    let s = xi.without(&pi_e);
    if !s.is_triangle_free() {
        return Err(GroupError::HypothesisViolation("solvable part contains a triangle".into()));
    }
    let boundary = xi.neighbors(&pi_e)?;
    let pinned: BTreeSet<Prime> =
        s.vertices().iter().copied().filter(|&v| boundary.contains(&v) || s.degree(v) == 0).collect();
    let mut best: Option<SolvableRecipe> = None;
    let mut first_err = None;
    for c in s.all_colorings(3, MAX_COLORINGS) {
        if pinned.iter().any(|&v| c.color(v) != Some(2)) {
            continue;
        }
        match build_solvable_recipe(xi, e, &c) {
            Ok(r) => {
                if best.as_ref().is_none_or(|b| r.order() < b.order()) {
                    best = Some(r);
                }
            }
            Err(err) => {
                first_err.get_or_insert(err);
            }
        }
    }
    best.ok_or_else(|| {
        first_err.unwrap_or_else(|| GroupError::HypothesisViolation("no 3-coloring of the solvable part".into()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{new_graph, p, primes};

    fn coloring(pairs: &[(u64, usize)]) -> Coloring {
        Coloring::new(3, pairs.iter().map(|&(v, c)| (p(v), c)).collect())
    }

    #[test]
    fn single_edge_is_f25_by_c3() {
        let g = new_graph(&[3, 5], &[(3, 5)]).unwrap();
        let r = build_solvable_recipe(&g, None, &coloring(&[(3, 0), (5, 2)])).unwrap();
        assert_eq!(r.v_components[0].field.d, 2);
        assert_eq!(r.order(), 75);
        let planned = plan_solvable_recipe(&g, None).unwrap();
        assert_eq!(planned.order(), 75);
        assert_eq!(planned.arcs, vec![(p(3), p(5))]);
    }

    #[test]
    fn edgeless_is_abelian() {
        let g = new_graph(&[2, 3, 5], &[]).unwrap();
        let r = plan_solvable_recipe(&g, None).unwrap();
        assert_eq!(r.order(), 30);
        assert!(r.w_primes.is_empty() && r.u_components.is_empty());
        assert!(r.v_components.iter().all(|c| c.dimension == 1 && c.characters.is_empty()));
    }

    #[test]
    fn middle_vertex_needs_cyclic_action() {
        // 3 -> 2 -> 5 needs 3 | 2 - 1
        let g = new_graph(&[2, 3, 5], &[(2, 3), (2, 5)]).unwrap();
        let err = build_solvable_recipe(&g, None, &coloring(&[(3, 0), (2, 1), (5, 2)])).unwrap_err();
        assert!(matches!(err, GroupError::HypothesisViolation(_)));
        assert!(plan_solvable_recipe(&g, None).is_ok());
    }

    #[test]
    fn two_layer_shape() {
        // 2 -> 3 -> 7 with 2 | 3 - 1: V_7 is induced from U × 1 to U ⋊ C_2
        let g = new_graph(&[2, 3, 7], &[(2, 3), (3, 7)]).unwrap();
        let r = build_solvable_recipe(&g, None, &coloring(&[(2, 0), (3, 1), (7, 2)])).unwrap();
        let v = &r.v_components[0];
        assert_eq!(v.permuting, vec![p(2)]);
        assert_eq!(v.dimension, 2);
        assert_eq!(r.k_pgc(), new_graph(&[2, 3], &[(2, 3)]).unwrap());
    }

    #[test]
    fn hypothesis_clauses() {
        let tri = new_graph(&[2, 3, 5], &[(2, 3), (3, 5), (2, 5)]).unwrap();
        assert!(plan_solvable_recipe(&tri, None).is_err());
        let g = new_graph(&[3, 5], &[(3, 5)]).unwrap();
        assert!(build_solvable_recipe(&g, None, &coloring(&[(3, 1), (5, 1)])).is_err());
        let e =
            EFactor { group: "E".into(), pi: primes(&[3]), pgc: new_graph(&[3], &[]).unwrap(), rows: BTreeMap::new() };
        // 5 sees 3, so it needs row ∅ rather than the trivial row {3}
        assert!(build_solvable_recipe(&g, Some(&e), &coloring(&[(5, 2)])).is_err());
        let mut e2 = e.clone();
        e2.rows.insert(p(5), BTreeSet::new());
        let r = build_solvable_recipe(&g, Some(&e2), &coloring(&[(5, 2)])).unwrap();
        assert_eq!(r.v_components[0].e_fixed, Some(BTreeSet::new()));
    }

    #[test]
    fn recipe_json_roundtrip() {
        let g = new_graph(&[2, 3, 7], &[(2, 3), (3, 7)]).unwrap();
        let r = plan_solvable_recipe(&g, None).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<SolvableRecipe>(&s).unwrap(), r);
    }
}
