//! Rewriting system of the holomorphic flag algebra: the extracted rules
//! and normal forms of products.

use qflag::ncalg::{FlagAlgebra, Kind};

fn main() {
    let n = 3;
    let alg = FlagAlgebra::new(n, Kind::Hol).expect("rules extract");
    println!("rewriting rules for N={n}:");
    for rule in alg.rules() {
        println!("  {}*{} -> {}", rule.lhs.0, rule.lhs.1, rule.rhs);
    }
    let (a, b) = (alg.gen(2, 3), alg.gen(1, 2));
    println!("z[2,3] * z[1,2] = {}", alg.multiply(&a, &b).unwrap());
    let cube = alg.power(&alg.gen(1, 3), 3).unwrap();
    println!("z[1,3]^3 = {cube}");
}
