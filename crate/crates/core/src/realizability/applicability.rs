//! Hypotheses of the structural reduction and the applicability criterion.

use super::RealizeError;
use crate::data::GroupData;
use crate::graph::PrimeGraph;
use crate::primes::Prime;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// True when 2 is adjacent to a vertex outside `pi_t`, or when every odd
/// neighbor of every Fermat prime in `fermat_in_t` also has a non-Fermat
/// neighbor inside `pi_t`.
pub fn check_structural_hypotheses(
    g: &PrimeGraph,
    pi_t: &BTreeSet<Prime>,
    fermat_in_t: &BTreeSet<Prime>,
) -> Result<bool, RealizeError> {
    for &p in pi_t.iter().chain(fermat_in_t) {
        if !g.contains(p) {
            return Err(RealizeError::BadSubset(format!("{p} is not a vertex")));
        }
    }
    let two = Prime::new(2).expect("2 is prime");
    if g.neighbors_of(two).iter().any(|q| !pi_t.contains(q)) {
        return Ok(true);
    }
    let non_fermat: BTreeSet<Prime> = pi_t.difference(fermat_in_t).copied().collect();
    for &t in fermat_in_t {
        for q in g.neighbors_of(t) {
            if q.get() == 2 {
                continue;
            }
            if !g.neighbors_of(q).iter().any(|r| non_fermat.contains(r)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApplicabilityReport {
    pub group: String,
    pub schur_ok: bool,
    pub out_ok: bool,
    pub colorable: bool,
    pub triangle_free: bool,
    /// Non-Fermat pair lying on every triangle whose Fermat primes only see {2, p, q}.
    pub pair: Option<(Prime, Prime)>,
    /// Whether some non-Fermat pair lies on every triangle, ignoring the Fermat clause.
    pub triangle_pair_exists: bool,
    /// Odd primes that may connect outward; `None` without fixed-point rows.
    pub outward: Option<BTreeSet<Prime>>,
    pub outward_ok: bool,
    pub pass: bool,
}

impl ApplicabilityReport {
    pub fn lines(&self) -> Vec<String> {
        let flag = |b: bool| if b { "PASS" } else { "FAIL" };
        let set = |s: &BTreeSet<Prime>| {
            let v: Vec<String> = s.iter().map(|p| p.to_string()).collect();
            format!("{{{}}}", v.join(","))
        };
        let mut out = vec![
            format!("schur multiplier in {{1,2}}: {}", flag(self.schur_ok)),
            format!("outer automorphism group is a 2-group: {}", flag(self.out_ok)),
            format!("pgc 3-colorable: {}", flag(self.colorable)),
        ];
        match self.pair {
            Some((p, q)) => out.push(format!("non-Fermat edge {p}-{q} on every triangle: PASS")),
            None => out.push(format!("non-Fermat edge on every triangle: {}", flag(self.triangle_pair_exists))),
        }
        out.push(format!("Fermat primes adjacent only to 2 and the pair: {}", flag(self.pair.is_some())));
        match &self.outward {
            Some(s) => out.push(format!("outward-capable odd primes {}: {}", set(s), flag(self.outward_ok))),
            None => out.push("outward-capable odd primes: FAIL (no fixed-point rows)".into()),
        }
        if self.triangle_free {
            out.push("pgc triangle-free".into());
        }
        out.push(format!("overall: {}", flag(self.pass)));
        out
    }
}

/// Evaluates the applicability criterion on one group record. Clause 4 is
/// read off the fixed-point rows: an odd prime may connect outward only if
/// some row omits it.
pub fn check_applicability(d: &GroupData, fermat: &BTreeSet<Prime>) -> Result<ApplicabilityReport, RealizeError> {
    let bad = |reason: String| RealizeError::InvalidGroupData { group: d.name.clone(), reason };
    if d.pgc.vertex_set() != d.pi {
        return Err(bad("pgc vertices differ from the prime set".into()));
    }
    if let Some(row) = d.fixed_rows.iter().find(|r| !r.is_subset(&d.pi)) {
        return Err(bad(format!("fixed-point row {row:?} is not inside the prime set")));
    }
    let g = &d.pgc;
    let schur_ok = matches!(d.schur, Some(1 | 2));
    let out_ok = d.out.is_some_and(|o| o.is_power_of_two());
    let colorable = g.k_colorable(3, &BTreeMap::new())?.is_some();
    let triangles = g.triangles();

    let non_fermat: Vec<Prime> = d.pi.iter().copied().filter(|p| !fermat.contains(p)).collect();
    let mut triangle_pair_exists = false;
    let mut pair = None;
    'search: for (i, &p) in non_fermat.iter().enumerate() {
        for &q in &non_fermat[i + 1..] {
            if !triangles.iter().all(|t| t.contains(&p) && t.contains(&q)) {
                continue;
            }
            triangle_pair_exists = true;
            let fermat_ok =
                d.pi.iter()
                    .filter(|r| fermat.contains(r))
                    .all(|&r| g.neighbors_of(r).iter().all(|s| s.get() == 2 || *s == p || *s == q));
            if fermat_ok {
                pair = Some((p, q));
                break 'search;
            }
        }
    }

    let outward = (!d.fixed_rows.is_empty()).then(|| {
        let always: BTreeSet<Prime> = d.fixed_rows.iter().skip(1).fold(d.fixed_rows[0].clone(), |acc, r| &acc & r);
        d.pi.iter().copied().filter(|p| p.get() != 2 && !always.contains(p)).collect::<BTreeSet<_>>()
    });
    let outward_ok = outward.as_ref().is_some_and(|s| s.len() <= 1 && s.is_disjoint(fermat));
    let pass = schur_ok && out_ok && colorable && pair.is_some() && outward_ok;
    Ok(ApplicabilityReport {
        group: d.name.clone(),
        schur_ok,
        out_ok,
        colorable,
        triangle_free: triangles.is_empty(),
        pair,
        triangle_pair_exists,
        outward,
        outward_ok,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{new_graph, primes};

    fn psl() -> PrimeGraph {
        new_graph(&[2, 3, 7, 13], &[(2, 7), (2, 13), (3, 7), (3, 13), (7, 13)]).unwrap()
    }

    #[test]
    fn structural_examples() {
        let mut g = psl();
        g.add_vertex(crate::graph::p(5)).unwrap();
        let pi_t = primes(&[2, 3, 7, 13]);
        assert!(check_structural_hypotheses(&g, &pi_t, &primes(&[3])).unwrap());
        let g2 = new_graph(&[2, 3, 5, 7, 13], &[(2, 5)]).unwrap();
        assert!(check_structural_hypotheses(&g2, &pi_t, &primes(&[3])).unwrap());
        let g3 = new_graph(&[2, 3, 7, 11, 13], &[(3, 11)]).unwrap();
        assert!(!check_structural_hypotheses(&g3, &pi_t, &primes(&[3])).unwrap());
        assert!(matches!(
            check_structural_hypotheses(&g3, &primes(&[2, 5]), &BTreeSet::new()),
            Err(RealizeError::BadSubset(_))
        ));
    }

    fn record(schur: u64) -> GroupData {
        GroupData {
            name: "test".into(),
            pi: primes(&[2, 3, 5, 7, 11]),
            schur: Some(schur),
            out: Some(2),
            pgc: new_graph(&[2, 3, 5, 7, 11], &[(2, 11), (3, 11), (5, 7), (5, 11), (7, 11)]).unwrap(),
            fixed_rows: vec![primes(&[2, 3, 5, 7]), primes(&[2, 3, 5, 7, 11])],
            ..GroupData::default()
        }
    }

    #[test]
    fn applicability_examples() {
        let fermat: BTreeSet<Prime> = crate::primes::default_fermat().into_iter().collect();
        let r = check_applicability(&record(2), &fermat).unwrap();
        assert!(r.pass);
        assert_eq!(r.pair.map(|(a, b)| (a.get(), b.get())), Some((7, 11)));
        assert_eq!(r.outward, Some(primes(&[11])));
        let r6 = check_applicability(&record(6), &fermat).unwrap();
        assert!(!r6.pass);
        assert!(!r6.schur_ok);
        assert!(r6.lines()[0].ends_with("FAIL"));
    }
}
