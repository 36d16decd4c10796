//! Fixed-point-free actions of C_p on F_{q^d} for small prime pairs.

use gkgraph::graph::p;
use gkgraph::group::build_frobenius_module;

fn main() {
    for (a, b) in [(2, 3), (3, 2), (3, 7), (5, 2), (5, 7), (7, 2), (13, 3), (23, 13)] {
        match build_frobenius_module(p(a), p(b), 20) {
            Ok(m) => println!(
                "C_{a} on F_{b}^{}: generator acts by element {} (modulus {:?}), fixed-point-free: {}",
                m.field.d,
                m.generator_action,
                m.field.modulus,
                m.is_fixed_point_free()
            ),
            Err(e) => println!("C_{a} on a {b}-group: {e}"),
        }
    }
}
