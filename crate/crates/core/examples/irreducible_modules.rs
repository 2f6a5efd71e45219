//! Extracts the module generated by 1 and prints its generator matrices.
//! Usage: irreducible_modules N sigma_1,...,sigma_{N-1}

use qflag::action::SigmaParams;
use qflag::irreps::{build_irrep, verify_representation};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let sigma: Vec<i64> = args
        .next()
        .map(|s| s.split(',').map(|x| x.parse().expect("integer")).collect())
        .unwrap_or_else(|| vec![1; n - 1]);
    let rep = build_irrep(n, &SigmaParams::new(n, sigma).unwrap(), None).unwrap();
    println!("dimension {}", rep.dimension());
    for (i, (b, w)) in rep.basis.iter().zip(&rep.weights).enumerate() {
        println!("  e{i} = {b}  weight {w:?}");
    }
    for (g, m) in &rep.matrices {
        println!("{g} =\n{m}");
    }
    print!("{}", verify_representation(&rep).unwrap().to_text());
}
