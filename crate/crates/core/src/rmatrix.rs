//! The `U_h(su(N))` R-matrix, its companion matrices, and exact verification
//! of the identities they satisfy.
//!
//! Indices are 1-based in formulas; `R_{jk,st}` lives at row `(j-1)N+(k-1)`,
//! column `(s-1)N+(t-1)`.

use thiserror::Error;

use crate::matrix::{digits, Entry, Matrix, MatrixError, SMat};
use crate::report::Report;
use crate::scalar::{sgn, Laurent};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RMatrixError {
    #[error("N must be at least 2, got {0}")]
    BadRank(usize),
    #[error("projector index m={m} outside 0..={n}")]
    BadProjector { m: usize, n: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

fn delta(a: usize, b: usize) -> bool {
    a == b
}

fn two_leg(n: usize, mut f: impl FnMut(usize, usize, usize, usize) -> Laurent) -> SMat {
    SMat::from_fn(n * n, n * n, |r, c| f(r / n + 1, r % n + 1, c / n + 1, c % n + 1))
}

/// `R_{jk,st} = d(j,s)d(k,t) + (q - q^{sgn(k-j)}) d(j,t)d(k,s)`, `sgn(0) = 0`.
pub fn build_r(n: usize) -> Result<SMat, RMatrixError> {
    check_rank(n)?;
    Ok(two_leg(n, |j, k, s, t| {
        let mut x = Laurent::zero();
        if delta(j, s) && delta(k, t) {
            x += &Laurent::one();
        }
        if delta(j, t) && delta(k, s) {
            x += &(Laurent::q() - Laurent::q_pow(sgn(k as i64 - j as i64)));
        }
        x
    }))
}

/// `R^{-1}`, obtained from `R` by `q -> q^{-1}`.
pub fn build_r_inv(n: usize) -> Result<SMat, RMatrixError> {
    Ok(build_r(n)?.invert_v())
}

/// `R^{+1}` or `R^{-1}`.
pub fn build_r_pow(n: usize, sign: i8) -> Result<SMat, RMatrixError> {
    if sign >= 0 {
        build_r(n)
    } else {
        build_r_inv(n)
    }
}

/// The flip `P_{jk,st} = d(j,t)d(k,s)`.
pub fn build_p(n: usize) -> SMat {
    two_leg(n, |j, k, s, t| Laurent::from_int((delta(j, t) && delta(k, s)) as i64))
}

/// `diag(R)_{jk,st} = q^{d(j,k)} d(j,s)d(k,t)`, raised to `sign`.
pub fn build_diag_r(n: usize, sign: i8) -> SMat {
    let e = if sign >= 0 { 1 } else { -1 };
    two_leg(n, |j, k, s, t| {
        if delta(j, s) && delta(k, t) {
            Laurent::q_pow(e * delta(j, k) as i64)
        } else {
            Laurent::zero()
        }
    })
}

/// `E^{(m)} = sum_{j <= m} E_jj` on one leg.
pub fn build_e(n: usize, m: usize) -> Result<SMat, RMatrixError> {
    if m > n {
        return Err(RMatrixError::BadProjector { m, n });
    }
    Ok(SMat::from_fn(n, n, |r, c| Laurent::from_int((r == c && r < m) as i64)))
}

/// `F^{(m)} = I - E^{(m)}`.
pub fn build_f(n: usize, m: usize) -> Result<SMat, RMatrixError> {
    Ok(SMat::identity(n).sub(&build_e(n, m)?)?)
}

/// Matrix unit `E_{jk}` (1-based) on one leg.
pub fn matrix_unit(n: usize, j: usize, k: usize) -> SMat {
    SMat::from_fn(n, n, |r, c| Laurent::from_int((r + 1 == j && c + 1 == k) as i64))
}

/// The `N x N` matrix `R^{[N]}` for `N >= 2`, and the `1 x 1` matrix `[q]`
/// for `N = 1`.
pub fn build_r_block(n: usize) -> SMat {
    if n == 1 {
        SMat::from_fn(1, 1, |_, _| Laurent::q())
    } else {
        build_r(n).expect("rank checked")
    }
}

fn check_rank(n: usize) -> Result<(), RMatrixError> {
    if n < 2 {
        return Err(RMatrixError::BadRank(n));
    }
    Ok(())
}

/// Formats a zero-based matrix position as 1-based multi-indices.
/// With `legs == 0` the plain 1-based `(row, col)` pair is printed.
pub fn witness_coord(pos: (usize, usize), n: usize, legs: usize) -> String {
    if legs == 0 {
        return format!("entry ({}, {})", pos.0 + 1, pos.1 + 1);
    }
    let fmt = |i: usize| -> String {
        digits(i, n, legs)
            .iter()
            .map(|d| (d + 1).to_string())
            .collect::<Vec<_>>()
            .join("")
    };
    format!("entry ({}),({})", fmt(pos.0), fmt(pos.1))
}

/// Compares two matrices and records the outcome.
pub fn record_eq<T: Entry>(
    report: &mut Report,
    identity: &str,
    params: String,
    lhs: &Matrix<T>,
    rhs: &Matrix<T>,
    n: usize,
    legs: usize,
) {
    let failure = lhs.first_difference(rhs).map(|pos| {
        if lhs.shape() != rhs.shape() {
            format!("shape {:?} vs {:?}", lhs.shape(), rhs.shape())
        } else {
            format!(
                "{}: {} vs {}",
                witness_coord(pos, n, legs),
                lhs.get(pos.0, pos.1),
                rhs.get(pos.0, pos.1)
            )
        }
    });
    report.record(identity, params, failure);
}

pub mod names {
    pub const YANG_BAXTER: &str = "Yang-Baxter R12 R13 R23 = R23 R13 R12";
    pub const INVERSE_SUBSTITUTION: &str = "inverse by q -> 1/q: R(q) R(1/q) = I";
    pub const INVERSE_ELIMINATION: &str = "inverse by elimination equals R(1/q)";
    pub const TRANSPOSE_FLIP: &str = "transpose R12^t = P R12 P";
    pub const HECKE: &str = "Hecke (q - 1/q) P = R12 - R21^-1 = R21 - R12^-1";
    pub const HECKE_QUADRATIC: &str = "Hecke quadratic (PR - q)(PR + 1/q) = 0";
    pub const PROJ_E1: &str = "projector E1 R = E1 R E1";
    pub const PROJ_E2: &str = "projector R E2 = E2 R E2";
    pub const PROJ_F1: &str = "projector R F1 = F1 R F1";
    pub const PROJ_F2: &str = "projector F2 R = F2 R F2";
    pub const PROJ_EF: &str = "projector E1 F2 R = E1 F2";
    pub const PROJ_EE: &str = "projector E1 E2 R = R E1 E2";
    pub const PROJ_FF: &str = "projector F1 F2 R = R F1 F2";
    pub const PROJ_MIXED_FLIP: &str = "projector R E1(m) F2(n) = (1 + (q - 1/q) P) E1(m) F2(n), m <= n";
    pub const DIAG_LEFT: &str = "diagonal block E1(n) R^±1 F1(n-1) = diag(R)^±1 E1(n) F1(n-1)";
    pub const DIAG_RIGHT: &str = "diagonal block F2(n-1) R^±1 E2(n) = diag(R)^±1 E2(n) F2(n-1)";
    pub const DIAG_BLOCK: &str = "diagonal block R^±1 on E1(m)F1(m-1)E2(n)F2(n-1) = diag(R)^±1, m >= n";
    pub const DIAG_OFF: &str = "diag(R)^±1 trivial on E1(m)F1(m-1)E2(n)F2(n-1), m != n";
    pub const LOWER_TRIANGULAR: &str = "R^±1 lower triangular";
}

/// Checks every R-matrix identity for rank `n`.
pub fn verify_rmatrix_identities(n: usize) -> Result<Report, RMatrixError> {
    use names::*;
    let mut rep = Report::new(format!("R-matrix identities, N={n}"));
    let p0 = format!("N={n}");
    let r = build_r(n)?;
    let r_inv = build_r_inv(n)?;
    let p = build_p(n);
    let id2 = SMat::identity(n * n);

    let r12 = r.embed(n, &[1, 2], 3);
    let r13 = r.embed(n, &[1, 3], 3);
    let r23 = r.embed(n, &[2, 3], 3);
    let lhs = SMat::chain(&[&r12, &r13, &r23])?;
    let rhs = SMat::chain(&[&r23, &r13, &r12])?;
    record_eq(&mut rep, YANG_BAXTER, p0.clone(), &lhs, &rhs, n, 3);

    record_eq(&mut rep, INVERSE_SUBSTITUTION, p0.clone(), &r.mul(&r_inv)?, &id2, n, 2);
    match r.inverse() {
        Ok(inv) => record_eq(&mut rep, INVERSE_ELIMINATION, p0.clone(), &inv, &r_inv, n, 2),
        Err(e) => rep.fail(INVERSE_ELIMINATION, p0.clone(), e.to_string()),
    }

    let r21 = SMat::chain(&[&p, &r, &p])?;
    let r21_inv = SMat::chain(&[&p, &r_inv, &p])?;
    record_eq(&mut rep, TRANSPOSE_FLIP, p0.clone(), &r.transpose(), &r21, n, 2);

    let gp = p.scale(&Laurent::gamma());
    record_eq(&mut rep, HECKE, format!("{p0}, R12 - R21^-1"), &r.sub(&r21_inv)?, &gp, n, 2);
    record_eq(&mut rep, HECKE, format!("{p0}, R21 - R12^-1"), &r21.sub(&r_inv)?, &gp, n, 2);
    let pr = p.mul(&r)?;
    let quad = pr
        .sub(&id2.scale(&Laurent::q()))?
        .mul(&pr.add(&id2.scale(&Laurent::q_pow(-1)))?)?;
    record_eq(&mut rep, HECKE_QUADRATIC, p0.clone(), &quad, &SMat::zeros(n * n, n * n), n, 2);

    for m in 0..=n {
        let pm = format!("{p0}, m={m}");
        let e = build_e(n, m)?;
        let f = build_f(n, m)?;
        let e1 = e.embed(n, &[1], 2);
        let e2 = e.embed(n, &[2], 2);
        let f1 = f.embed(n, &[1], 2);
        let f2 = f.embed(n, &[2], 2);
        record_eq(&mut rep, PROJ_E1, pm.clone(), &e1.mul(&r)?, &SMat::chain(&[&e1, &r, &e1])?, n, 2);
        record_eq(&mut rep, PROJ_E2, pm.clone(), &r.mul(&e2)?, &SMat::chain(&[&e2, &r, &e2])?, n, 2);
        record_eq(&mut rep, PROJ_F1, pm.clone(), &r.mul(&f1)?, &SMat::chain(&[&f1, &r, &f1])?, n, 2);
        record_eq(&mut rep, PROJ_F2, pm.clone(), &f2.mul(&r)?, &SMat::chain(&[&f2, &r, &f2])?, n, 2);
        record_eq(&mut rep, PROJ_EF, pm.clone(), &SMat::chain(&[&e1, &f2, &r])?, &e1.mul(&f2)?, n, 2);
        record_eq(
            &mut rep,
            PROJ_EE,
            pm.clone(),
            &SMat::chain(&[&e1, &e2, &r])?,
            &SMat::chain(&[&r, &e1, &e2])?,
            n,
            2,
        );
        record_eq(
            &mut rep,
            PROJ_FF,
            pm.clone(),
            &SMat::chain(&[&f1, &f2, &r])?,
            &SMat::chain(&[&r, &f1, &f2])?,
            n,
            2,
        );
        for k in m..=n {
            let fk2 = build_f(n, k)?.embed(n, &[2], 2);
            let block = e1.mul(&fk2)?;
            let expected = id2.add(&gp)?.mul(&block)?;
            record_eq(
                &mut rep,
                PROJ_MIXED_FLIP,
                format!("{p0}, m={m}, n={k}"),
                &r.mul(&block)?,
                &expected,
                n,
                2,
            );
        }
    }

    for sign in [1i8, -1] {
        let s = if sign > 0 { "+" } else { "-" };
        let rs = build_r_pow(n, sign)?;
        let ds = build_diag_r(n, sign);
        for k in 1..=n {
            let pk = format!("{p0}, n={k}, sign={s}");
            let e = build_e(n, k)?;
            let f = build_f(n, k - 1)?;
            let (e1, f1) = (e.embed(n, &[1], 2), f.embed(n, &[1], 2));
            let (e2, f2) = (e.embed(n, &[2], 2), f.embed(n, &[2], 2));
            record_eq(
                &mut rep,
                DIAG_LEFT,
                pk.clone(),
                &SMat::chain(&[&e1, &rs, &f1])?,
                &SMat::chain(&[&ds, &e1, &f1])?,
                n,
                2,
            );
            record_eq(
                &mut rep,
                DIAG_RIGHT,
                pk.clone(),
                &SMat::chain(&[&f2, &rs, &e2])?,
                &SMat::chain(&[&ds, &e2, &f2])?,
                n,
                2,
            );
        }
        for m in 1..=n {
            for k in 1..=n {
                let pmk = format!("{p0}, m={m}, n={k}, sign={s}");
                let b1 = build_e(n, m)?.mul(&build_f(n, m - 1)?)?.embed(n, &[1], 2);
                let b2 = build_e(n, k)?.mul(&build_f(n, k - 1)?)?.embed(n, &[2], 2);
                let block = b1.mul(&b2)?;
                if m >= k {
                    record_eq(&mut rep, DIAG_BLOCK, pmk.clone(), &rs.mul(&block)?, &ds.mul(&block)?, n, 2);
                }
                if m != k {
                    record_eq(&mut rep, DIAG_OFF, pmk, &ds.mul(&block)?, &block, n, 2);
                }
            }
        }
        let upper = (0..n * n)
            .flat_map(|row| (row + 1..n * n).map(move |col| (row, col)))
            .find(|&(row, col)| !rs.get(row, col).is_zero());
        rep.record(
            LOWER_TRIANGULAR,
            format!("{p0}, sign={s}"),
            upper.map(|pos| format!("nonzero {}", witness_coord(pos, n, 2))),
        );
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(m: &SMat, n: usize, j: usize, k: usize, s: usize, t: usize) -> Laurent {
        m.get((j - 1) * n + k - 1, (s - 1) * n + t - 1).clone()
    }

    #[test]
    fn r_entries_n2() {
        let r = build_r(2).unwrap();
        assert_eq!(at(&r, 2, 1, 1, 1, 1), Laurent::q());
        assert_eq!(at(&r, 2, 1, 2, 2, 1), Laurent::zero());
        assert_eq!(at(&r, 2, 2, 1, 1, 2), Laurent::gamma());
        assert_eq!(at(&r, 2, 1, 2, 1, 2), Laurent::one());
        assert_eq!(build_r(1), Err(RMatrixError::BadRank(1)));
    }

    #[test]
    fn aux_matrices_n2() {
        let p = build_p(2);
        assert_eq!(at(&p, 2, 1, 2, 2, 1), Laurent::one());
        assert_eq!(at(&p, 2, 1, 2, 1, 2), Laurent::zero());
        assert!(p.mul(&p).unwrap().is_identity());
        assert!(build_e(2, 0).unwrap().is_zero());
        assert!(build_e(3, 3).unwrap().is_identity());
        assert!(matches!(build_e(2, 3), Err(RMatrixError::BadProjector { .. })));
        let d = build_diag_r(2, 1);
        let expected = [Laurent::q(), Laurent::one(), Laurent::one(), Laurent::q()];
        for (i, x) in expected.iter().enumerate() {
            assert_eq!(d.get(i, i), x);
        }
        assert_eq!(d.mul(&build_diag_r(2, -1)).unwrap(), SMat::identity(4));
    }

    #[test]
    fn embeddings() {
        let n = 2;
        let r = build_r(n).unwrap();
        let p = build_p(n);
        let r21 = r.embed(n, &[2, 1], 2);
        assert_eq!(r21, SMat::chain(&[&p, &r.embed(n, &[1, 2], 2), &p]).unwrap());
        let e1 = build_e(n, 1).unwrap().embed(n, &[1], 2);
        // Kronecker oracle: E (x) I
        let kron = SMat::from_fn(4, 4, |row, col| {
            let (a, b) = (row / 2, row % 2);
            let (c, d) = (col / 2, col % 2);
            Laurent::from_int((a == c && b == d && a == 0) as i64)
        });
        assert_eq!(e1, kron);
        assert!(SMat::identity(4).embed(n, &[1, 3], 3).is_identity());
        // operators on disjoint legs commute
        let r3 = build_r(3).unwrap();
        let a = r3.embed(3, &[1, 2], 3);
        let b = build_e(3, 2).unwrap().embed(3, &[3], 3);
        assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn r_block_degenerate() {
        let b = build_r_block(1);
        assert_eq!(b.shape(), (1, 1));
        assert_eq!(b.get(0, 0), &Laurent::q());
    }

    #[test]
    fn identities_small_ranks() {
        for n in 2..=3 {
            let rep = verify_rmatrix_identities(n).unwrap();
            assert!(rep.all_passed(), "{}", rep.to_text());
        }
    }

    #[test]
    fn witness_catches_a_broken_identity() {
        let mut rep = Report::new("t");
        let a = SMat::identity(4);
        let mut b = a.clone();
        b.set(1, 2, Laurent::q());
        record_eq(&mut rep, "demo", "N=2".into(), &a, &b, 2, 2);
        assert!(!rep.all_passed());
        assert!(rep.checks[0].witness.as_deref().unwrap().starts_with("entry (12),(21)"));
    }
}
