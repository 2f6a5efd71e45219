//! The operator matrix M of the R-matrix picture on the unit and on one
//! generator, then the FRT suite for N=2.

use qflag::frt::{verify_frt, FrtState, LambdaParams};
use qflag::ncalg::Element;

fn main() {
    let n = 3;
    let lambda = LambdaParams::from_sigma(n, &[1, 1]).unwrap();
    let st = FrtState::new(n, lambda).unwrap();
    println!("M . 1 =\n{}", st.m_unit().unwrap());
    let z = st.algebra().gen(1, 2);
    println!("M . zs[1,2] =\n{}", st.m_dot(&z).unwrap());
    let (lhs, rhs) = st.reflection_sides(&Element::one()).unwrap();
    println!("reflection relation on 1: {}", lhs == rhs);
    let rep = verify_frt(2, &LambdaParams::from_sigma(2, &[1]).unwrap(), 2).unwrap();
    print!("{}", rep.to_text());
}
