//! The applicability criterion for every simple group in the bundled data.

use gkgraph::data::Dataset;
use gkgraph::primes::default_fermat;
use gkgraph::realizability::check_applicability;

fn main() {
    let data = Dataset::bundled();
    let fermat = default_fermat().into_iter().collect();
    for (name, r) in &data.records {
        if !r.simple {
            continue;
        }
        let resolved = data.resolved(name).expect("bundled");
        let report = check_applicability(&resolved, &fermat).expect("consistent record");
        let pair = report.pair.map(|(a, b)| format!("{a}-{b}")).unwrap_or_else(|| "-".into());
        println!("{name:>15}: pass={:<5} pair={pair:<5} triangle-free={}", report.pass, report.triangle_free);
    }
}
