//! Flag coordinates, their inverse and the Grassmann blocks, followed by the
//! flag/Grassmann identity suite.

use qflag::grassmann::{verify_flag_grassmann, FlagCoordinates};

fn main() {
    let n = 3;
    let coords = FlagCoordinates::new(n).unwrap();
    println!("Z =\n{}", coords.z());
    println!("Z^-1 =\n{}", coords.z_inv());
    for m in 1..n {
        println!("Z^({m}) =\n{}", coords.block(m).unwrap());
    }
    let rep = verify_flag_grassmann(n).unwrap();
    println!("{} of {} identities hold", rep.passed_count(), rep.checks.len());
}
