//! Acceptance suite: one line per criterion, exact equality throughout.
//! Runs without the libtest harness so the lines are always printed.

use std::time::Instant;

use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use qflag::action::{verify_action, Action, SigmaParams, UElement, UGen};
use qflag::frt::{self, verify_frt, FrtError, LambdaParams};
use qflag::grassmann::{self, verify_flag_grassmann};
use qflag::irreps::{build_irrep, verify_representation, weyl_dimension};
use qflag::ncalg::{word_weight, Element, FlagAlgebra, Gen, Kind, Word};
use qflag::report::Report;
use qflag::rmatrix::{self, verify_rmatrix_identities};
use qflag::scalar::Laurent;
use qflag::serialize::{
    export_representation, import_representation, laurent_from_json, laurent_to_json, representation_to_json,
    to_canonical_string,
};

type Verdict = Result<String, String>;

fn require_all(rep: &Report, names: &[&str]) -> Result<(), String> {
    if let Some(c) = rep.failures().next() {
        return Err(format!("{}: {} ({}) -- {:?}", rep.title, c.identity, c.params, c.witness));
    }
    for n in names {
        if !rep.identity_passed(n) {
            return Err(format!("{}: identity never checked: {n}", rep.title));
        }
    }
    Ok(())
}

fn criterion_1() -> Verdict {
    use rmatrix::names::*;
    let names = [
        YANG_BAXTER, INVERSE_SUBSTITUTION, INVERSE_ELIMINATION, TRANSPOSE_FLIP, HECKE, HECKE_QUADRATIC, PROJ_E1,
        PROJ_E2, PROJ_F1, PROJ_F2, PROJ_EF, PROJ_EE, PROJ_FF, DIAG_LEFT, DIAG_RIGHT, DIAG_BLOCK, DIAG_OFF,
    ];
    let mut total = 0;
    for n in 2..=4 {
        let rep = verify_rmatrix_identities(n).map_err(|e| e.to_string())?;
        require_all(&rep, &names)?;
        total += rep.checks.len();
    }
    Ok(format!("{total} checks for N=2,3,4"))
}

fn criterion_2() -> Verdict {
    use grassmann::names::*;
    let names = [
        INVERSE, FLAG_RELATION, RECONSTRUCTION, RECONSTRUCTION_PADDED, ABSORPTION, ABSORPTION_REVERSED,
        CLASSICAL_CONSTRAINT, CROSS_RELATION, GRASSMANN_ENTRIES, REDUCED_R, BLOCK_XX, BLOCK_XY, BLOCK_YX, BLOCK_YY,
    ];
    let mut total = 0;
    for n in 2..=4 {
        let rep = verify_flag_grassmann(n).map_err(|e| e.to_string())?;
        // identities over 1 <= m < n <= N-1 have no instances for N = 2
        let strict = [ABSORPTION, CLASSICAL_CONSTRAINT];
        let needed: Vec<&str> = names.iter().copied().filter(|x| n > 2 || !strict.contains(x)).collect();
        require_all(&rep, &needed)?;
        total += rep.checks.len();
    }
    Ok(format!("{total} checks for N=2,3,4"))
}

fn diamond(alg: &FlagAlgebra) -> Result<usize, String> {
    let gens = alg.generators();
    let mut overlaps = 0;
    for &x in &gens {
        for &y in &gens {
            for &z in &gens {
                let word = Word(vec![x, y, z]);
                let mut results = Vec::new();
                for pos in 0..2 {
                    if let Some(step) = alg.rewrite_at(&word, pos) {
                        results.push(alg.normal_form_leftmost(&step).map_err(|e| e.to_string())?);
                    }
                }
                if results.len() == 2 {
                    overlaps += 1;
                    if results[0] != results[1] {
                        return Err(format!("N={} overlap {word} is not resolvable", alg.n()));
                    }
                }
            }
        }
    }
    Ok(overlaps)
}

fn random_element() -> impl Strategy<Value = (usize, bool, Vec<(Vec<(usize, usize)>, i64)>)> {
    (2usize..=4, any::<bool>()).prop_flat_map(|(n, ahol)| {
        let letter = (1..n).prop_flat_map(move |s| (Just(s), s + 1..=n));
        let word = prop::collection::vec(letter, 0..=5);
        let terms = prop::collection::vec((word, -3i64..=3), 1..=4);
        (Just(n), Just(ahol), terms)
    })
}

fn criterion_3() -> Verdict {
    let mut overlaps = 0;
    for n in 2..=4 {
        for kind in [Kind::Hol, Kind::Ahol] {
            overlaps += diamond(&FlagAlgebra::new(n, kind).map_err(|e| e.to_string())?)?;
        }
    }
    let algs: Vec<_> = (2..=4)
        .map(|n| [FlagAlgebra::shared(n, Kind::Hol).unwrap(), FlagAlgebra::shared(n, Kind::Ahol).unwrap()])
        .collect();
    let mut runner = TestRunner::new(Config { cases: 1000, failure_persistence: None, ..Config::default() });
    runner
        .run(&random_element(), |(n, ahol, terms)| {
            let alg = &algs[n - 2][ahol as usize];
            let kind = alg.kind();
            let mut e = Element::zero();
            for (letters, c) in &terms {
                let w = Word(letters.iter().map(|&(s, t)| Gen::new(kind, s, t)).collect());
                e.add_term(w, Laurent::from_int(*c));
            }
            let nf = alg.normal_form(&e).map_err(|x| TestCaseError::fail(x.to_string()))?;
            prop_assert!(nf.is_normal());
            prop_assert_eq!(&alg.normal_form(&nf).unwrap(), &nf, "not idempotent");
            prop_assert_eq!(&alg.normal_form_leftmost(&e).unwrap(), &nf, "routes disagree");
            // homogeneity, checked one input word at a time
            for (letters, _) in &terms {
                let w = Word(letters.iter().map(|&(s, t)| Gen::new(kind, s, t)).collect());
                let img = alg.normal_form(&Element::word(w.clone())).unwrap();
                for (v, _) in img.terms() {
                    prop_assert_eq!(word_weight(v, n), word_weight(&w, n), "weight changed");
                    // total root content sum(t - s)
                    prop_assert_eq!(v.height(), w.height(), "height grading changed");
                    prop_assert!(v.len() <= w.len(), "length increased");
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    // word length is not a grading of these algebras: record the witness
    let alg = FlagAlgebra::new(3, Kind::Hol).unwrap();
    let prod = alg.multiply(&alg.gen(2, 3), &alg.gen(1, 2)).unwrap();
    let lengths: std::collections::BTreeSet<usize> = prod.terms().map(|(w, _)| w.len()).collect();
    if lengths.len() < 2 {
        return Err("expected the mixed-length witness z[2,3]*z[1,2]".into());
    }
    Ok(format!(
        "{overlaps} overlaps resolve for N<=4; 1000 random cases idempotent, weight- and height-homogeneous; \
         word length is not preserved ({} has lengths {lengths:?})",
        "z[2,3]*z[1,2]"
    ))
}

fn criterion_4() -> Verdict {
    let mut total = 0;
    for n in 2..=3 {
        let rep = verify_action(n, 3, 2).map_err(|e| e.to_string())?;
        use qflag::action::names::*;
        let mut names = vec![K_INVERSE, CARTAN_COMMUTE, CARTAN_XPLUS, CARTAN_XMINUS, COMMUTATOR, EXCHANGE_COMPAT];
        if n == 3 {
            names.extend([SERRE_PLUS, SERRE_MINUS]);
        }
        require_all(&rep, &names)?;
        total += rep.checks.len();
    }
    for n in 2..=3 {
        let act = Action::new(n).unwrap();
        for j in 1..n {
            for s in 0..=4 {
                let mut sigma = vec![1; n - 1];
                sigma[j - 1] = s;
                let sp = SigmaParams::new(n, sigma.clone()).unwrap();
                let comm = UElement::commutator(&UElement::gen(UGen::xp(j)), &UElement::gen(UGen::xm(j)));
                let got = act.dot(&comm, &Element::one(), &sp).map_err(|e| e.to_string())?;
                let expected = Element::scalar(-Laurent::bracket(s));
                if got != expected {
                    return Err(format!("[X+{j}, X-{j}] . 1 = {got} for sigma={sigma:?}"));
                }
                total += 1;
            }
        }
    }
    Ok(format!("{total} checks for N=2,3, degree<=3, |sigma|<=2"))
}

fn criterion_5() -> Verdict {
    let start = Instant::now();
    let family: Vec<(usize, Vec<i64>, usize)> = vec![
        (2, vec![0], 1),
        (2, vec![1], 2),
        (2, vec![2], 3),
        (2, vec![3], 4),
        (2, vec![4], 5),
        (3, vec![1, 0], 3),
        (3, vec![0, 1], 3),
        (3, vec![1, 1], 8),
        (3, vec![2, 0], 6),
        (3, vec![2, 1], 15),
        (3, vec![0, 0], 1),
        (4, vec![1, 0, 0], 4),
        (4, vec![0, 1, 0], 6),
        (4, vec![0, 0, 0], 1),
    ];
    for (n, sigma, listed) in &family {
        let labels: Vec<u64> = sigma.iter().map(|&s| s as u64).collect();
        let weyl = weyl_dimension(*n, &labels).map_err(|e| e.to_string())?;
        if weyl != *listed {
            return Err(format!("Weyl formula gives {weyl} for N={n}, sigma={sigma:?}, listed {listed}"));
        }
        let rep = build_irrep(*n, &SigmaParams::new(*n, sigma.clone()).unwrap(), None).map_err(|e| e.to_string())?;
        if rep.dimension() != weyl {
            return Err(format!("N={n}, sigma={sigma:?}: dimension {} vs {weyl}", rep.dimension()));
        }
        let report = verify_representation(&rep).map_err(|e| e.to_string())?;
        use qflag::irreps::names::*;
        require_all(&report, &[RELATIONS, LOWEST_ANNIHILATED, LOWEST_WEIGHT, K_DIAGONAL, DIMENSION, UNIT_FIRST])?;
        if *n == 3 && sigma == &vec![1, 1] && rep.weight_multiplicities().get(&vec![0, 0]) != Some(&2) {
            return Err("adjoint module: weight (0,0) should have multiplicity 2".into());
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 60.0 {
        return Err(format!("family took {secs:.1}s"));
    }
    Ok(format!("{} modules in {secs:.2}s", family.len()))
}

fn criterion_6() -> Verdict {
    use frt::names::*;
    let required = [REFLECTION, IDEMPOTENT, THREE_LEG, MIXED, UNIT_DIAGONAL, UNIT_SUBDIAGONAL, UNIT_ENTRIES];
    let mut total = 0;
    let mut cases: Vec<(usize, LambdaParams)> = Vec::new();
    for (n, sigma) in [(2, vec![1]), (2, vec![2]), (3, vec![1, 1]), (3, vec![2, 1])] {
        cases.push((n, LambdaParams::from_sigma(n, &sigma).unwrap()));
    }
    // the two parameter families listed with the suite, taken literally
    for (n, exps) in [(2, vec![-2, 0]), (3, vec![-4, -2, 0])] {
        cases.push((n, LambdaParams::new(n, exps.into_iter().map(Laurent::q_pow).collect()).unwrap()));
    }
    for (n, lam) in &cases {
        let rep = verify_frt(*n, lam, 2).map_err(|e| e.to_string())?;
        require_all(&rep, &required)?;
        total += rep.checks.len();
    }
    match LambdaParams::new(2, vec![Laurent::one(), Laurent::one()]) {
        Err(FrtError::NotDistinct(1, 2)) => {}
        other => return Err(format!("duplicate lambda accepted: {other:?}")),
    }
    Ok(format!("{total} checks over {} parameter sets; duplicate lambda rejected", cases.len()))
}

fn criterion_7() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut files = 0;
    for (n, sigma) in [(2, vec![3]), (3, vec![1, 1]), (4, vec![0, 1, 0])] {
        let sp = SigmaParams::new(n, sigma.clone()).unwrap();
        let rep = build_irrep(n, &sp, None).map_err(|e| e.to_string())?;
        let a = dir.path().join(format!("a{n}.json"));
        let b = dir.path().join(format!("b{n}.json"));
        export_representation(&rep, &a).map_err(|e| e.to_string())?;
        let back = import_representation(&a).map_err(|e| e.to_string())?;
        if back != rep {
            return Err(format!("N={n}: imported representation differs"));
        }
        export_representation(&back, &b).map_err(|e| e.to_string())?;
        let rebuilt = build_irrep(n, &sp, None).map_err(|e| e.to_string())?;
        let fresh = to_canonical_string(&representation_to_json(&rebuilt));
        let (ba, bb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
        if ba != bb || ba != fresh.as_bytes() {
            return Err(format!("N={n}: outputs are not byte-identical"));
        }
        files += 1;
    }
    let mut runner = TestRunner::new(Config { cases: 1000, failure_persistence: None, ..Config::default() });
    let term = (-12i64..12, -50i64..50, 1i64..9);
    runner
        .run(&prop::collection::vec(term, 0..6), |terms| {
            let x = Laurent::from_terms(terms.into_iter().map(|(e, a, b)| (e, BigRational::new(a.into(), b.into()))));
            let enc = laurent_to_json(&x);
            let back = laurent_from_json(&enc).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(&back, &x);
            prop_assert_eq!(laurent_to_json(&back).to_string(), enc.to_string());
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(format!("{files} representation files round-trip byte-identically; 1000 scalar encodings round-trip"))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 7] = [
        ("R-matrix suite", criterion_1),
        ("flag/Grassmann suite", criterion_2),
        ("rewriting soundness", criterion_3),
        ("action suite", criterion_4),
        ("irrep suite", criterion_5),
        ("FRT suite", criterion_6),
        ("serialization", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = f();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {} ({name}): PASS [{secs:.2}s] {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{secs:.2}s] {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 7 acceptance criteria passed");
}
