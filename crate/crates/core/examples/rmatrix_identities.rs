//! Checks the R-matrix suite for one rank; pass N as the first argument.

use qflag::rmatrix::{build_r, verify_rmatrix_identities};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    println!("R for N={n}:\n{}", build_r(n).unwrap());
    let rep = verify_rmatrix_identities(n).unwrap();
    print!("{}", rep.to_text());
}
