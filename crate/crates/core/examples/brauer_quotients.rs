//! Graphs reachable from pgc(PSL(2,13)) by extending with a p-group, read off
//! the Brauer rows in each characteristic.

use gkgraph::character::{achievable_graphs, edge_removal_set};
use gkgraph::data::Dataset;
use gkgraph::graph::p;

fn main() {
    let data = Dataset::bundled();
    for group in ["PSL(2,13)", "2.PSL(2,13)"] {
        let base = data.get_pgc(group).expect("bundled");
        for q in [2, 3, 7, 13] {
            let rows = data.brauer_rows(group, p(q)).expect("bundled");
            let family: Vec<_> = rows.iter().map(|r| edge_removal_set(p(q), r).expect("row omits p")).collect();
            println!("{group}, p = {q}:");
            for g in achievable_graphs(base, &family) {
                println!("    {}", g.to_text());
            }
        }
    }
}
