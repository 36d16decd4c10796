//! Longest-path coloring of an augmented Frobenius digraph.
//!
//! Three distinguished primes 2, 3, 5 point outward into a solvable part whose
//! arcs are given; every outside neighbor of {2, 3, 5} lands in class 2.

use gkgraph::digraph::{augmented_orientation, monochromatic_neighbor_coloring, Orientation};
use gkgraph::graph::{primes, PrimeGraph};

fn main() {
    let g = PrimeGraph::parse("2 3 5 7 11 13 17 19 23 29 ; 2-7 2-13 5-7 5-11 3-13 17-7 23-11 23-13 19-11 29-19 29-23")
        .expect("valid graph");
    let mut arcs = Orientation::new([7, 11, 13, 17, 19, 23, 29]);
    for (a, b) in [(17, 7), (23, 11), (23, 13), (19, 11), (29, 19), (29, 23)] {
        arcs.add_arc(a, b);
    }
    let t = primes(&[2, 3, 5]);
    let aug = augmented_orientation(&g, &t, &arcs).expect("arcs orient the solvable part");
    let c = monochromatic_neighbor_coloring(&g, &t, &arcs).expect("no directed path of length 3");
    for k in 0..3 {
        println!("class {k}: {}", gkgraph::data::fmt_set(&c.class(k)));
    }
    println!("\n{}", aug.to_dot("augmented"));
}
