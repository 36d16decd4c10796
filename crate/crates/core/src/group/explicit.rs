//! Explicit arithmetic in V ⋊ (U ⋊ W) and exact element-order scans.

use super::recipe::SolvableRecipe;
use super::GroupError;
use crate::field::FiniteField;
use crate::graph::PrimeGraph;
use crate::primes::Prime;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::{BTreeSet, HashSet};

pub const DEFAULT_ORDER_BOUND: u64 = 1_000_000;
const EXHAUSTIVE_LIMIT: u64 = 100_000;

/// Group element: V coordinates per component, U field elements, W exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub v: Vec<Vec<u64>>,
    pub u: Vec<u64>,
    pub w: Vec<u64>,
}

#[derive(Clone, Debug)]
struct UData {
    prime: u64,
    field: FiniteField,
    /// (index into W, powers of the multiplier)
    actions: Vec<(usize, Vec<u64>)>,
}

#[derive(Clone, Debug)]
struct VData {
    prime: u64,
    field: FiniteField,
    /// W indices of the permuting primes, with their orders (mixed radix, first digit least significant)
    perm: Vec<(usize, u64)>,
    coords: usize,
    scalar: Vec<(usize, Vec<u64>)>,
    /// (index into U, prime u, powers of the root of unity)
    chars: Vec<(usize, u64, Vec<u64>)>,
    /// alpha[s][j]: the integer by which coordinate s twists character j
    alpha: Vec<Vec<u64>>,
}

#[derive(Clone, Debug)]
pub struct ExplicitGroup {
    w: Vec<u64>,
    u: Vec<UData>,
    v: Vec<VData>,
    order: u128,
    bound: u64,
}

fn powers(f: &FiniteField, m: u64, n: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(n as usize);
    let mut acc = 1;
    for _ in 0..n {
        out.push(acc);
        acc = f.mul(acc, m);
    }
    out
}

pub fn realize_explicit(r: &SolvableRecipe, order_bound: u64) -> Result<ExplicitGroup, GroupError> {
    realize_explicit_seeded(r, order_bound, 0)
}

/// Builds the group and spot-checks the axioms on 100 triples drawn from `seed`.
pub fn realize_explicit_seeded(r: &SolvableRecipe, order_bound: u64, seed: u64) -> Result<ExplicitGroup, GroupError> {
    if let Some(e) = &r.e {
        return Err(GroupError::SymbolicOnly(e.group.clone()));
    }
    let order = r.order();
    if order > order_bound as u128 {
        return Err(GroupError::OrderBoundExceeded { order, bound: order_bound });
    }
    let w: Vec<u64> = r.w_primes.iter().map(|p| p.get()).collect();
    let w_index = |p: Prime| {
        r.w_primes
            .iter()
            .position(|&q| q == p)
            .ok_or_else(|| GroupError::HypothesisViolation(format!("{p} is not in W")))
    };
    let mut u = Vec::new();
    for c in &r.u_components {
        let field = FiniteField::from_spec(c.field.clone());
        let mut actions = Vec::new();
        for a in &c.actions {
            actions.push((w_index(a.by)?, powers(&field, a.multiplier, a.by.get())));
        }
        u.push(UData { prime: c.prime.get(), field, actions });
    }
    let mut v = Vec::new();
    for c in &r.v_components {
        let field = FiniteField::from_spec(c.field.clone());
        let perm = c.permuting.iter().map(|&p| Ok((w_index(p)?, p.get()))).collect::<Result<Vec<_>, GroupError>>()?;
        let coords = c.coordinates() as usize;
        let mut scalar = Vec::new();
        for a in &c.scalar {
            scalar.push((w_index(a.by)?, powers(&field, a.multiplier, a.by.get())));
        }
        let mut chars = Vec::new();
        for a in &c.characters {
            let ui = r
                .u_components
                .iter()
                .position(|x| x.prime == a.by)
                .ok_or_else(|| GroupError::HypothesisViolation(format!("{} is not in U", a.by)))?;
            if u[ui].field.degree() != 1 {
                return Err(GroupError::HypothesisViolation(format!("{} acting on {} is not cyclic", a.by, c.prime)));
            }
            chars.push((ui, a.by.get(), powers(&field, a.multiplier, a.by.get())));
        }
        // alpha_j(s) = product over permuting primes w acting on u_j of m_{w,u_j}^(-s_w)
        let mut alpha = vec![vec![1u64; chars.len()]; coords];
        for (s, row) in alpha.iter_mut().enumerate() {
            let digits = decode_radix(s, &perm);
            for (j, &(ui, up, _)) in chars.iter().enumerate() {
                let mut val = 1u64;
                for &(wi, ref pw) in &u[ui].actions {
                    if let Some(k) = perm.iter().position(|&(pi, _)| pi == wi) {
                        let wp = w[wi];
                        val = val * pw[((wp - digits[k]) % wp) as usize] % up;
                    }
                }
                row[j] = val;
            }
        }
        v.push(VData { prime: c.prime.get(), field, perm, coords, scalar, chars, alpha });
    }
    let g = ExplicitGroup { w, u, v, order, bound: order_bound };
    g.check_axioms(seed, 100)?;
    Ok(g)
}

fn decode_radix(mut s: usize, perm: &[(usize, u64)]) -> Vec<u64> {
    perm.iter()
        .map(|&(_, m)| {
            let d = (s as u64) % m;
            s /= m as usize;
            d
        })
        .collect()
}

fn encode_radix(digits: &[u64], perm: &[(usize, u64)]) -> usize {
    digits.iter().zip(perm).rev().fold(0usize, |acc, (&d, &(_, m))| acc * m as usize + d as usize)
}

impl ExplicitGroup {
    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn primes(&self) -> BTreeSet<Prime> {
        self.w
            .iter()
            .chain(self.u.iter().map(|c| &c.prime))
            .chain(self.v.iter().map(|c| &c.prime))
            .map(|&p| Prime::new(p).expect("recipe primes"))
            .collect()
    }

    pub fn identity(&self) -> Element {
        Element {
            v: self.v.iter().map(|c| vec![0; c.coords]).collect(),
            u: vec![0; self.u.len()],
            w: vec![0; self.w.len()],
        }
    }

    /// The element with the given index in mixed radix (V, then U, then W).
    pub fn element(&self, mut idx: u128) -> Element {
        let mut e = self.identity();
        for (c, x) in self.v.iter().zip(e.v.iter_mut()) {
            let n = c.field.size() as u128;
            for coord in x.iter_mut() {
                *coord = (idx % n) as u64;
                idx /= n;
            }
        }
        for (c, y) in self.u.iter().zip(e.u.iter_mut()) {
            let n = c.field.size() as u128;
            *y = (idx % n) as u64;
            idx /= n;
        }
        for (&p, t) in self.w.iter().zip(e.w.iter_mut()) {
            *t = (idx % p as u128) as u64;
            idx /= p as u128;
        }
        e
    }

    fn act_u(&self, t: &[u64], y: &[u64]) -> Vec<u64> {
        self.u
            .iter()
            .zip(y)
            .map(|(c, &val)| c.actions.iter().fold(val, |acc, (wi, pw)| c.field.mul(acc, pw[t[*wi] as usize])))
            .collect()
    }

    fn act_v(&self, y: &[u64], t: &[u64], x: &[Vec<u64>]) -> Vec<Vec<u64>> {
        self.v
            .iter()
            .zip(x)
            .map(|(c, xv)| {
                let f = &c.field;
                let eta = c.scalar.iter().fold(1, |acc, (wi, pw)| f.mul(acc, pw[t[*wi] as usize]));
                let shift: Vec<u64> = c.perm.iter().map(|&(wi, _)| t[wi]).collect();
                let mut out = vec![0u64; c.coords];
                for (r, &val) in xv.iter().enumerate() {
                    if val == 0 {
                        continue;
                    }
                    let mut digits = decode_radix(r, &c.perm);
                    for ((d, s), &(_, m)) in digits.iter_mut().zip(&shift).zip(&c.perm) {
                        *d = (*d + s) % m;
                    }
                    let s = encode_radix(&digits, &c.perm);
                    let mut z = f.mul(eta, val);
                    for (j, (ui, up, pw)) in c.chars.iter().enumerate() {
                        let e = c.alpha[s][j] * y[*ui] % up;
                        z = f.mul(z, pw[e as usize]);
                    }
                    out[s] = z;
                }
                out
            })
            .collect()
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let bu = self.act_u(&a.w, &b.u);
        let bv = self.act_v(&a.u, &a.w, &b.v);
        Element {
            v: self
                .v
                .iter()
                .enumerate()
                .map(|(i, c)| a.v[i].iter().zip(&bv[i]).map(|(&x, &y)| c.field.add(x, y)).collect())
                .collect(),
            u: self.u.iter().enumerate().map(|(i, c)| c.field.add(a.u[i], bu[i])).collect(),
            w: self.w.iter().enumerate().map(|(i, &p)| (a.w[i] + b.w[i]) % p).collect(),
        }
    }

    pub fn inverse(&self, a: &Element) -> Element {
        let t: Vec<u64> = self.w.iter().zip(&a.w).map(|(&p, &x)| (p - x) % p).collect();
        let y: Vec<u64> = self.act_u(&t, &a.u).iter().zip(&self.u).map(|(&val, c)| c.field.neg(val)).collect();
        let x = self.act_v(&y, &t, &a.v);
        let v = x.iter().zip(&self.v).map(|(xv, c)| xv.iter().map(|&val| c.field.neg(val)).collect()).collect();
        Element { v, u: y, w: t }
    }

    pub fn pow(&self, a: &Element, mut e: u64) -> Element {
        let mut acc = self.identity();
        let mut b = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    /// Exact order: every layer is elementary abelian, so the order is
    /// ord(t) · ord of the U-part of k^ord(t) · ord of the V-part of g^ord(k).
    pub fn element_order(&self, g: &Element) -> u64 {
        let ord_t: u64 = self.w.iter().zip(&g.w).filter(|(_, &x)| x != 0).map(|(&p, _)| p).product();
        let k = Element { v: self.identity().v, u: g.u.clone(), w: g.w.clone() };
        let nk = self.pow(&k, ord_t);
        let ord_k = ord_t * self.u.iter().zip(&nk.u).filter(|(_, &y)| y != 0).map(|(c, _)| c.prime).product::<u64>();
        let ng = self.pow(g, ord_k);
        ord_k
            * self.v.iter().zip(&ng.v).filter(|(_, x)| x.iter().any(|&c| c != 0)).map(|(c, _)| c.prime).product::<u64>()
    }

    fn random_element(&self, rng: &mut ChaCha8Rng) -> Element {
        let mut e = self.identity();
        for (c, x) in self.v.iter().zip(e.v.iter_mut()) {
            for coord in x.iter_mut() {
                *coord = rng.gen_range(0..c.field.size());
            }
        }
        for (c, y) in self.u.iter().zip(e.u.iter_mut()) {
            *y = rng.gen_range(0..c.field.size());
        }
        for (&p, t) in self.w.iter().zip(e.w.iter_mut()) {
            *t = rng.gen_range(0..p);
        }
        e
    }

    /// Associativity, identity and inverses on `samples` random triples.
    pub fn check_axioms(&self, seed: u64, samples: usize) -> Result<(), GroupError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let one = self.identity();
        for _ in 0..samples {
            let (a, b, c) =
                (self.random_element(&mut rng), self.random_element(&mut rng), self.random_element(&mut rng));
            if self.mul(&self.mul(&a, &b), &c) != self.mul(&a, &self.mul(&b, &c)) {
                return Err(GroupError::AxiomFailure(format!("associativity fails at {a:?}, {b:?}, {c:?}")));
            }
            if self.mul(&a, &one) != a || self.mul(&one, &a) != a {
                return Err(GroupError::AxiomFailure(format!("identity fails at {a:?}")));
            }
            if self.mul(&a, &self.inverse(&a)) != one || self.mul(&self.inverse(&a), &a) != one {
                return Err(GroupError::AxiomFailure(format!("inverse fails at {a:?}")));
            }
        }
        Ok(())
    }

    fn prime_mask(&self, primes: &[u64], n: u64) -> u64 {
        primes.iter().enumerate().filter(|(_, &p)| n.is_multiple_of(p)).fold(0, |m, (i, _)| m | 1 << i)
    }

    /// Prime sets of element orders, as bitmasks over `primes()`: every
    /// element up to the exhaustive limit, grouped by K-part above it.
    fn order_masks(&self) -> HashSet<u64> {
        if self.order <= EXHAUSTIVE_LIMIT as u128 {
            self.exhaustive_masks()
        } else {
            self.grouped_masks()
        }
    }

    fn exhaustive_masks(&self) -> HashSet<u64> {
        let primes: Vec<u64> = self.primes().iter().map(|p| p.get()).collect();
        (0..self.order as u64)
            .into_par_iter()
            .map(|i| self.prime_mask(&primes, self.element_order(&self.element(i as u128))))
            .fold(HashSet::new, |mut s, m| {
                s.insert(m);
                s
            })
            .reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            })
    }

    /// For fixed k = (y, t), x ↦ N_k x is linear on each V_v, so the largest
    /// prime set is primes(k) plus every v where N_k is nonzero.
    fn grouped_masks(&self) -> HashSet<u64> {
        let primes: Vec<u64> = self.primes().iter().map(|p| p.get()).collect();
        let v_size: u128 = self.v.iter().map(|c| (c.field.size() as u128).pow(c.coords as u32)).product();
        let k_count = (self.order / v_size) as u64;
        (0..k_count)
            .into_par_iter()
            .map(|i| {
                let k = self.element(i as u128 * v_size);
                let ord_k = self.element_order(&k);
                let mut m = self.prime_mask(&primes, ord_k);
                for (ci, c) in self.v.iter().enumerate() {
                    let hit = (0..c.coords).any(|coord| {
                        c.field.basis().into_iter().any(|b| {
                            let mut g = k.clone();
                            g.v[ci][coord] = b;
                            self.pow(&g, ord_k).v[ci].iter().any(|&z| z != 0)
                        })
                    });
                    if hit {
                        m |= self.prime_mask(&primes, c.prime);
                    }
                }
                m
            })
            .collect()
    }
}

/// Prime graph complement from element orders: p and q are adjacent unless
/// some element has order divisible by pq.
pub fn pgc_of_explicit(g: &ExplicitGroup) -> Result<PrimeGraph, GroupError> {
    if g.order > g.bound as u128 {
        return Err(GroupError::OrderBoundExceeded { order: g.order, bound: g.bound });
    }
    let primes: Vec<Prime> = g.primes().into_iter().collect();
    let masks = g.order_masks();
    let mut edges = Vec::new();
    for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            let pair = (1u64 << i) | (1u64 << j);
            if !masks.iter().any(|m| m & pair == pair) {
                edges.push((primes[i], primes[j]));
            }
        }
    }
    Ok(PrimeGraph::from_prime_edges(primes, edges)?)
}

#[cfg(test)]
mod tests {
    use super::super::recipe::{build_solvable_recipe, plan_solvable_recipe};
    use super::*;
    use crate::graph::{new_graph, Coloring};

    fn naive_order(g: &ExplicitGroup, a: &Element) -> u64 {
        let one = g.identity();
        let mut x = a.clone();
        let mut n = 1;
        while x != one {
            x = g.mul(&x, a);
            n += 1;
        }
        n
    }

    fn group_for(vs: &[u64], es: &[(u64, u64)]) -> ExplicitGroup {
        let r = plan_solvable_recipe(&new_graph(vs, es).unwrap(), None).unwrap();
        realize_explicit(&r, DEFAULT_ORDER_BOUND).unwrap()
    }

    #[test]
    fn cyclic_six_has_no_edge() {
        let g = group_for(&[2, 3], &[]);
        assert_eq!(g.order(), 6);
        assert_eq!(pgc_of_explicit(&g).unwrap().edge_count(), 0);
    }

    #[test]
    fn frobenius_75() {
        let xi = new_graph(&[3, 5], &[(3, 5)]).unwrap();
        let c = Coloring::new(3, [(crate::graph::p(3), 0), (crate::graph::p(5), 2)].into_iter().collect());
        let r = build_solvable_recipe(&xi, None, &c).unwrap();
        let g = realize_explicit(&r, DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(g.order(), 75);
        assert_eq!(pgc_of_explicit(&g).unwrap(), xi);
        let orders: BTreeSet<u64> = (0..75).map(|i| naive_order(&g, &g.element(i))).collect();
        assert_eq!(orders, [1, 3, 5].into_iter().collect());
    }

    #[test]
    fn formula_matches_naive_orders() {
        for (vs, es) in [
            (vec![2, 3, 7], vec![(2, 3), (3, 7)]),
            (vec![2, 3, 5], vec![(2, 5), (3, 5)]),
            (vec![2, 3, 7, 13], vec![(2, 3), (3, 7), (3, 13)]),
        ] {
            let g = group_for(&vs, &es);
            let step = (g.order() / 500).max(1);
            for i in (0..g.order()).step_by(step as usize) {
                let e = g.element(i);
                assert_eq!(g.element_order(&e), naive_order(&g, &e), "{vs:?} element {i}");
            }
        }
    }

    #[test]
    fn bound_and_symbolic_errors() {
        let r = plan_solvable_recipe(&new_graph(&[3, 5], &[(3, 5)]).unwrap(), None).unwrap();
        assert!(matches!(realize_explicit(&r, 10), Err(GroupError::OrderBoundExceeded { order: 75, bound: 10 })));
        let trivial = realize_explicit(&SolvableRecipe::trivial(), DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(pgc_of_explicit(&trivial).unwrap().len(), 0);
    }

    #[test]
    fn grouped_scan_agrees_with_exhaustive() {
        // small enough for both paths
        let r = plan_solvable_recipe(&new_graph(&[2, 3, 5, 7], &[(2, 3), (3, 7), (2, 5)]).unwrap(), None).unwrap();
        let g = realize_explicit(&r, DEFAULT_ORDER_BOUND).unwrap();
        let full = g.exhaustive_masks();
        let grouped = g.grouped_masks();
        let close = |s: &HashSet<u64>| -> BTreeSet<u64> {
            let mut out = BTreeSet::new();
            for &m in s {
                for sub in 0..=m {
                    if sub & m == sub {
                        out.insert(sub);
                    }
                }
            }
            out
        };
        assert_eq!(close(&full), close(&grouped));
    }
}
