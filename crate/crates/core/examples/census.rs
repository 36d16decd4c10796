//! Counts every labeled graph on {2, 3, 5, 7, 13} by the condition that certifies it.

use gkgraph::census::enumerate;
use gkgraph::graph::primes;

fn main() {
    let vs: Vec<_> = primes(&[2, 3, 5, 7, 13]).into_iter().collect();
    let report = enumerate(&vs, 1, false).expect("five vertices is within the default cap");
    println!("{} graphs", report.total);
    for (c, n) in &report.counts {
        println!("  {:>6}: {n}", c.label());
    }
    if let Some(ex) = report.exemplars.values().flatten().find(|e| e.graph.edge_count() > 6) {
        println!("\n{}", ex.dot);
    }
}
