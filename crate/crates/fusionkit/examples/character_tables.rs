//! Exact character tables over cyclotomic integers.
//!
//! Builds the tables of S3 and A4, prints degrees, class data and the full
//! value grid. Values are exact: they live in Z[z] for z a primitive root of
//! unity of order equal to the group exponent.

use std::sync::Arc;

use fusionkit::chartab::{character_table, CharacterTable};
use fusionkit::cyclotomic::Cyclotomic;
use fusionkit::fixtures;

fn show(value: &Cyclotomic) -> String {
    let coeffs = value.reduced();
    if coeffs.iter().skip(1).all(|&c| c == 0) {
        return coeffs[0].to_string();
    }
    let mut parts = Vec::new();
    for (k, &c) in coeffs.iter().enumerate() {
        match (c, k) {
            (0, _) => {}
            (c, 0) => parts.push(c.to_string()),
            (1, k) => parts.push(format!("z^{k}")),
            (-1, k) => parts.push(format!("-z^{k}")),
            (c, k) => parts.push(format!("{c}z^{k}")),
        }
    }
    parts.join(" + ").replace("+ -", "- ")
}

fn dump(name: &str, ct: &CharacterTable) {
    println!("character table of {name}");
    println!("  exponent {} (values live in Z[z], z^{} = 1)", ct.exponent, ct.exponent);
    let sizes: Vec<usize> = ct.classes.iter().map(|c| c.elements.len()).collect();
    println!("  class sizes {sizes:?}");
    println!("  degrees     {:?}", ct.degrees);
    for (i, row) in ct.values.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(show).collect();
        println!("  chi{i}: [{}]", cells.join(", "));
    }
    println!();
}

fn main() {
    let s3 = Arc::new(fixtures::symmetric_group(3));
    dump("S3", &character_table(&s3).unwrap());

    // A4 has a pair of conjugate degree-1 characters taking cube-root values.
    let a4 = Arc::new(fixtures::alternating_group(4));
    dump("A4", &character_table(&a4).unwrap());

    let q8 = Arc::new(fixtures::group_by_name("Q8").unwrap());
    dump("Q8", &character_table(&q8).unwrap());
}
