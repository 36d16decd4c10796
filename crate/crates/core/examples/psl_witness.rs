//! Symbolic witnesses for graphs certified by the four-vertex conditions.

use gkgraph::data::Dataset;
use gkgraph::graph::PrimeGraph;
use gkgraph::group::realize_psl_symbolic;

fn main() {
    let data = Dataset::bundled();
    for text in
        ["2 3 7 13 ; 2-7 2-13 3-7 3-13 7-13", "2 3 7 13 ; 3-7 3-13 7-13", "2 3 5 7 13 ; 2-7 2-13 3-7 3-13 7-13 5-13"]
    {
        let g = PrimeGraph::parse(text).expect("valid graph");
        match realize_psl_symbolic(&g, &data) {
            Ok(w) => {
                println!("{text}");
                println!(
                    "  condition {} via {}{}",
                    w.verdict.condition.label(),
                    w.group,
                    if w.times_c2 { " x C_2" } else { "" }
                );
                println!("  solvable part order {}, predicted pgc matches: {}", w.recipe.order(), w.matches);
            }
            Err(e) => println!("{text}: {e}"),
        }
    }
}
