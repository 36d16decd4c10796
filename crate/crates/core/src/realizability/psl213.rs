//! Four-vertex certificate conditions for PSL(2,13)-solvable prime graph complements.

use super::{is_solvable_realizable, Condition, RealizeError, Verdict};
use crate::graph::{Coloring, GraphError, PrimeGraph};
use crate::primes::Prime;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// An assignment of the four roles a, b, c, d to the vertices of X.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    pub a: Prime,
    pub b: Prime,
    pub c: Prime,
    pub d: Prime,
}

impl Labeling {
    pub fn from_slice(v: &[Prime]) -> Labeling {
        Labeling { a: v[0], b: v[1], c: v[2], d: v[3] }
    }

    pub fn as_array(&self) -> [Prime; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// Outcome of the shared clauses of condition 2(b), with both variant flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cond2bReport {
    pub variant_i: bool,
    pub variant_ii: bool,
    pub coloring: Coloring,
}

fn check_subset(g: &PrimeGraph, x: &BTreeSet<Prime>) -> Result<(), RealizeError> {
    if x.len() != 4 {
        return Err(RealizeError::BadSubset(format!("expected 4 vertices, got {}", x.len())));
    }
    for &p in x {
        if !g.contains(p) {
            return Err(RealizeError::BadSubset(format!("{p} is not a vertex")));
        }
    }
    Ok(())
}

/// A proper 3-coloring of `g` in which every vertex of `N(X) \ X` has the
/// same color. Each of the three shared colors is tried in turn.
pub fn monochromatic_boundary_coloring(g: &PrimeGraph, x: &BTreeSet<Prime>) -> Result<Option<Coloring>, RealizeError> {
    let boundary: Vec<Prime> = g.neighbors(x)?.into_iter().filter(|p| !x.contains(p)).collect();
    if boundary.is_empty() {
        return Ok(g.k_colorable(3, &BTreeMap::new())?);
    }
    for color in 0..3 {
        let fixed: BTreeMap<Prime, usize> = boundary.iter().map(|&p| (p, color)).collect();
        match g.k_colorable(3, &fixed) {
            Ok(Some(c)) => return Ok(Some(c)),
            Ok(None) | Err(GraphError::InvalidFixedAssignment(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(None)
}

fn has_outside_neighbor(g: &PrimeGraph, v: Prime, x: &BTreeSet<Prime>) -> bool {
    g.neighbors_of(v).iter().any(|q| !x.contains(q))
}

fn cond_2a(g: &PrimeGraph, x: &BTreeSet<Prime>) -> Result<Option<Coloring>, RealizeError> {
    check_subset(g, x)?;
    let inner = g.induced(x)?;
    if inner.triangles().len() > 2 {
        return Ok(None);
    }
    if !g.triangles().iter().all(|t| t.iter().all(|v| x.contains(v))) {
        return Ok(None);
    }
    let connecting: Vec<Prime> = x.iter().copied().filter(|&v| has_outside_neighbor(g, v, x)).collect();
    if connecting.len() > 1 {
        return Ok(None);
    }
    if !inner.is_connected() {
        return Ok(None);
    }
    for &v in &connecting {
        if !x.iter().all(|&w| w == v || g.has_edge(v, w)) {
            return Ok(None);
        }
    }
    monochromatic_boundary_coloring(g, x)
}

/// Condition 2(a) for the four-vertex set `x`.
pub fn check_condition_2a(g: &PrimeGraph, x: &BTreeSet<Prime>) -> Result<bool, RealizeError> {
    Ok(cond_2a(g, x)?.is_some())
}

/// Shared clauses of condition 2(b) plus both variant flags; `None` when a
/// shared clause fails or neither variant holds.
pub fn evaluate_condition_2b(
    g: &PrimeGraph,
    x: &BTreeSet<Prime>,
    l: &Labeling,
) -> Result<Option<Cond2bReport>, RealizeError> {
    check_subset(g, x)?;
    let roles: BTreeSet<Prime> = l.as_array().into_iter().collect();
    if roles != *x {
        return Err(RealizeError::BadLabeling("labeling must be a bijection onto X".into()));
    }
    let (a, b, c, d) = (l.a, l.b, l.c, l.d);
    if !g.triangles().iter().all(|t| t.contains(&b) && t.contains(&c)) {
        return Ok(None);
    }
    if g.neighbors_of(a).iter().any(|q| x.contains(q)) {
        return Ok(None);
    }
    if has_outside_neighbor(g, d, x) {
        return Ok(None);
    }
    let nb: BTreeSet<Prime> = g.neighbors_of(b).into_iter().collect();
    if !g.neighbors_of(c).iter().all(|q| *q == b || nb.contains(q)) {
        return Ok(None);
    }
    let na: BTreeSet<Prime> = g.neighbors_of(a).into_iter().collect();
    let variant_i = g.neighbors_of(c).iter().filter(|q| !x.contains(q)).all(|q| na.contains(q));
    let variant_ii = na.is_empty();
    if !variant_i && !variant_ii {
        return Ok(None);
    }
    Ok(monochromatic_boundary_coloring(g, x)?.map(|coloring| Cond2bReport { variant_i, variant_ii, coloring }))
}

/// Condition 2(b): the first variant satisfied, (i) before (ii).
pub fn check_condition_2b(
    g: &PrimeGraph,
    x: &BTreeSet<Prime>,
    l: &Labeling,
) -> Result<Option<Condition>, RealizeError> {
    Ok(evaluate_condition_2b(g, x, l)?.map(|r| if r.variant_i { Condition::Cond2bI } else { Condition::Cond2bII }))
}

fn four_subsets(vs: &[Prime]) -> Vec<BTreeSet<Prime>> {
    let n = vs.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for m in k + 1..n {
                    out.push([vs[i], vs[j], vs[k], vs[m]].into_iter().collect());
                }
            }
        }
    }
    out
}

/// All orderings of `items` in lexicographic order.
pub(crate) fn permutations(items: &[Prime]) -> Vec<Vec<Prime>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &head) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Decides whether `g` is the prime graph complement of a PSL(2,13)-solvable
/// group. Search order: condition 1, then each 4-subset in sorted order with
/// 2(a) before every labeling for 2(b).
pub fn classify_psl213(g: &PrimeGraph) -> Verdict {
    let (ok, coloring) = is_solvable_realizable(g);
    if ok {
        return Verdict {
            realizable: true,
            condition: Condition::Cond1,
            x: None,
            labeling: None,
            coloring: coloring.map(|c| c.assignment),
            refutation_note: None,
        };
    }
    for x in four_subsets(g.vertices()) {
        if let Some(c) = cond_2a(g, &x).expect("valid subset") {
            return Verdict {
                realizable: true,
                condition: Condition::Cond2a,
                x: Some(x),
                labeling: None,
                coloring: Some(c.assignment),
                refutation_note: None,
            };
        }
        let sorted: Vec<Prime> = x.iter().copied().collect();
        for perm in permutations(&sorted) {
            let l = Labeling::from_slice(&perm);
            if let Some(r) = evaluate_condition_2b(g, &x, &l).expect("valid labeling") {
                return Verdict {
                    realizable: true,
                    condition: if r.variant_i { Condition::Cond2bI } else { Condition::Cond2bII },
                    x: Some(x),
                    labeling: Some(l),
                    coloring: Some(r.coloring.assignment),
                    refutation_note: None,
                };
            }
        }
    }
    let note = if g.triangles().is_empty() {
        "not 3-colorable".to_string()
    } else if g.len() < 4 {
        format!("{} triangle(s) and fewer than four vertices", g.triangles().len())
    } else {
        format!("{} triangle(s); no four-vertex set satisfies 2(a) or 2(b)", g.triangles().len())
    };
    Verdict {
        realizable: false,
        condition: Condition::None,
        x: None,
        labeling: None,
        coloring: None,
        refutation_note: Some(note),
    }
}
