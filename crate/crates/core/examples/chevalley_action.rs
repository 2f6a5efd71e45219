//! The dressing action and a sigma-module action on a few elements.

use qflag::action::{verify_action, Action, SigmaParams, UElement, UGen};
use qflag::ncalg::Element;

fn main() {
    let act = Action::new(3).unwrap();
    let alg = act.algebra().clone();
    let f = alg.multiply(&alg.gen(1, 2), &alg.gen(2, 3)).unwrap();
    for g in UGen::all(3) {
        println!("xi({g}) ({f}) = {}", act.xi_gen(g, &f).unwrap());
    }
    let sigma = SigmaParams::new(3, vec![2, 1]).unwrap();
    let comm = UElement::commutator(&UElement::gen(UGen::xp(1)), &UElement::gen(UGen::xm(1)));
    println!("[X+1, X-1] . 1 = {}", act.dot(&comm, &Element::one(), &sigma).unwrap());
    let rep = verify_action(2, 3, 2).unwrap();
    println!("N=2 action suite: {} of {} checks pass", rep.passed_count(), rep.checks.len());
}
