//! Irreducible degrees of Drinfeld doubles.
//!
//! For each conjugacy class with representative g, the double contributes the
//! irreducible degrees of the centralizer of g scaled by the class size; the
//! squares always sum to |G|^2.

use std::sync::Arc;

use fusionkit::chartab::drinfeld_double_degrees;
use fusionkit::fixtures;

fn main() {
    for name in ["S3", "A4", "D4", "Q8", "S4"] {
        let g = Arc::new(fixtures::group_by_name(name).unwrap());
        let degrees = drinfeld_double_degrees(&g, 512).unwrap();
        let total: u64 = degrees.iter().map(|&d| d * d).sum();
        println!("double of {name} (order {}): {} simples", g.order(), degrees.len());
        println!("  degrees {degrees:?}");
        println!("  sum of squares {total} = {}^2", g.order());
        println!();
    }
}
