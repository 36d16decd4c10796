//! Fixed-space dimensions from character values on a cyclic subgroup, and the
//! fixed-point rows of a central extension.

use gkgraph::character::{fixed_dim, CyclicCharacterSlice};
use gkgraph::data::{fmt_set, Dataset};

fn main() {
    // The 7-dimensional permutation character of C_7 and a faithful
    // 6-dimensional piece of it.
    for values in [[7, 0, 0, 0, 0, 0, 0], [6, -1, -1, -1, -1, -1, -1]] {
        let slice = CyclicCharacterSlice::from_integers(&values).expect("positive degree");
        println!("{values:?}: fixed space of dimension {}", fixed_dim(&slice).expect("integral"));
    }
    let half = CyclicCharacterSlice::parse(&["2", "1/2", "-1/2"]).expect("rational values");
    let shown: Vec<String> = half.values().iter().map(|v| v.to_string()).collect();
    println!("[{}] averages to {} and is rejected: {}", shown.join(", "), half.average(), fixed_dim(&half).is_err());

    let data = Dataset::bundled();
    for name in ["PSL(2,13)", "2.PSL(2,13)", "A_14"] {
        let rows = data.fixed_rows(name).expect("bundled");
        println!("{name}: {}", rows.iter().map(fmt_set).collect::<Vec<_>>().join(" "));
    }
}
