//! Laurent scalars: arithmetic, quantum integers, Euclidean division and
//! the text literal grammar.

use qflag::literal::parse_laurent;
use qflag::scalar::Laurent;

fn main() {
    let q = Laurent::q();
    let gamma = Laurent::gamma();
    println!("q - 1/q = {gamma}");
    println!("[3] = {}", Laurent::bracket(3));
    let prod = &Laurent::bracket(2) * &Laurent::bracket(3);
    let (quo, rem) = prod.div_rem(&Laurent::bracket(3));
    println!("[2][3] / [3] = {quo} remainder {rem}");
    let x = parse_laurent("3/2 q^(1/2) - q^-2").expect("valid literal");
    println!("parsed {x}; times q = {}", &x * &q);
    println!("round trip: {}", parse_laurent(&x.to_string()).unwrap() == x);
}
