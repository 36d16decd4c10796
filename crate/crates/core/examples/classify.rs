//! Runs both deciders on a handful of graphs.

use gkgraph::graph::PrimeGraph;
use gkgraph::realizability::{classify_psl213, is_solvable_realizable};

fn main() {
    let graphs = [
        ("five-cycle", "2 3 5 7 11 ; 2-3 3-5 5-7 7-11 2-11"),
        ("pgc(PSL(2,13))", "2 3 7 13 ; 2-7 2-13 3-7 3-13 7-13"),
        ("pgc(2.PSL(2,13))", "2 3 7 13 ; 3-7 3-13 7-13"),
        ("K4", "2 3 5 7 ; 2-3 2-5 2-7 3-5 3-7 5-7"),
    ];
    for (name, text) in graphs {
        let g = PrimeGraph::parse(text).expect("valid graph");
        let (solvable, _) = is_solvable_realizable(&g);
        let v = classify_psl213(&g);
        print!("{name:>18}: solvable={solvable:<5} condition={}", v.condition.label());
        if let Some(x) = &v.x {
            print!(" X={}", gkgraph::data::fmt_set(x));
        }
        if let Some(l) = v.labeling {
            print!(" a={} b={} c={} d={}", l.a, l.b, l.c, l.d);
        }
        if let Some(note) = &v.refutation_note {
            print!(" ({note})");
        }
        println!();
    }
}
