//! Writes a representation document and reads it back.

use qflag::action::SigmaParams;
use qflag::irreps::build_irrep;
use qflag::serialize::{export_representation, import_representation};

fn main() {
    let rep = build_irrep(3, &SigmaParams::new(3, vec![1, 0]).unwrap(), None).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep.json");
    export_representation(&rep, &path).unwrap();
    let back = import_representation(&path).unwrap();
    println!("wrote {} bytes; read back equal: {}", std::fs::metadata(&path).unwrap().len(), back == rep);
}
