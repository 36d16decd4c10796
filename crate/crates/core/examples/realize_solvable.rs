//! Builds an explicit solvable group for a triangle-free 3-colorable graph and
//! reads its prime graph complement back from element orders.

use gkgraph::graph::PrimeGraph;
use gkgraph::group::{pgc_of_explicit, plan_solvable_recipe, realize_explicit, DEFAULT_ORDER_BOUND};

fn main() {
    let g = PrimeGraph::parse("2 3 5 7 ; 2-3 3-7 2-5").expect("valid graph");
    let recipe = plan_solvable_recipe(&g, None).expect("triangle-free and 3-colorable");
    println!("W = {:?}", recipe.w_primes.iter().map(|p| p.get()).collect::<Vec<_>>());
    for u in &recipe.u_components {
        println!("U_{} = F_{}^{}", u.prime, u.field.q, u.field.d);
    }
    for v in &recipe.v_components {
        println!("V_{} has dimension {} over F_{}", v.prime, v.dimension, v.prime);
    }
    println!("|G| = {}", recipe.order());

    let group = realize_explicit(&recipe, DEFAULT_ORDER_BOUND).expect("order within bound");
    let back = pgc_of_explicit(&group).expect("order within bound");
    println!("pgc from element orders: {}", back.to_text());
    println!("matches input: {}", back == g);
}
