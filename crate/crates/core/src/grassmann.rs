//! Quantum Grassmannian coordinates inside the flag algebra.
//!
//! The Grassmann block of rank `m` is `E^(m) + gz^(m) = Z^{-1} E^(m) Z`,
//! where `Z` is the unitriangular matrix of flag coordinates and `gz^(m)` is
//! the padded `m x (N-m)` block `Z^(m)` in the upper right corner.

use std::sync::Arc;

use thiserror::Error;

use crate::matrix::{chain_mixed, AMat, Factor, MatrixError, SMat};
use crate::ncalg::{adjoint, AlgebraError, Element, FlagAlgebra, Kind};
use crate::report::Report;
use crate::rmatrix::{
    build_diag_r, build_e, build_f, build_p, build_r, build_r_block, build_r_inv, record_eq,
    RMatrixError,
};
use crate::scalar::{sgn, Laurent};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrassmannError {
    #[error("matrix is not upper unitriangular at entry ({row}, {col})")]
    NotUnitriangular { row: usize, col: usize },
    #[error("block index m={m} outside {lo}..={hi}")]
    BadIndex { m: usize, lo: usize, hi: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    RMatrix(#[from] RMatrixError),
}

impl From<GrassmannError> for MatrixError {
    fn from(e: GrassmannError) -> Self {
        match e {
            GrassmannError::Matrix(m) => m,
            GrassmannError::Algebra(a) => MatrixError::Algebra(a),
            _ => MatrixError::NotInvertible,
        }
    }
}

/// Inverse of an upper unitriangular algebra-valued matrix by back
/// substitution: `W_ij = d_ij - sum_{i<l<=j} Z_il W_lj`, rows bottom-up.
pub fn invert_unitriangular(z: &AMat, alg: &FlagAlgebra) -> Result<AMat, GrassmannError> {
    let n = z.rows();
    if z.cols() != n {
        return Err(GrassmannError::NotUnitriangular { row: n, col: z.cols() });
    }
    for r in 0..n {
        for c in 0..=r {
            let ok = if r == c { z.get(r, c).is_one() } else { z.get(r, c).is_zero() };
            if !ok {
                return Err(GrassmannError::NotUnitriangular { row: r + 1, col: c + 1 });
            }
        }
    }
    let mut w = AMat::identity(n);
    for i in (0..n).rev() {
        for j in (i + 1)..n {
            let mut acc = Element::zero();
            for l in (i + 1)..=j {
                let p = alg.multiply(z.get(i, l), w.get(l, j))?;
                acc.add_scaled(&p, &Laurent::from_int(-1));
            }
            w.set(i, j, acc);
        }
    }
    Ok(w)
}

/// Conjugate transpose with entrywise formal adjoint into `target`.
pub fn adjoint_matrix(a: &AMat, target: &FlagAlgebra) -> Result<AMat, AlgebraError> {
    let t = a.transpose();
    t.try_map(|e| adjoint(e, target))
}

/// `Z`, `Z^{-1}` and all Grassmann blocks for one rank, holomorphic side.
pub struct FlagCoordinates {
    alg: Arc<FlagAlgebra>,
    z: AMat,
    z_inv: AMat,
    blocks: Vec<AMat>,
}

impl FlagCoordinates {
    pub fn new(n: usize) -> Result<Self, GrassmannError> {
        Self::with_algebra(FlagAlgebra::shared(n, Kind::Hol)?)
    }

    pub fn with_algebra(alg: Arc<FlagAlgebra>) -> Result<Self, GrassmannError> {
        let n = alg.n();
        let z = AMat::from_fn(n, n, |r, c| match r.cmp(&c) {
            std::cmp::Ordering::Equal => Element::one(),
            std::cmp::Ordering::Greater => Element::zero(),
            std::cmp::Ordering::Less => alg.gen(r + 1, c + 1),
        });
        let z_inv = invert_unitriangular(&z, &alg)?;
        let mut blocks = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let e = build_e(n, m)?;
            blocks.push(chain_mixed(&[Factor::A(&z_inv), Factor::S(&e), Factor::A(&z)], &alg)?);
        }
        Ok(FlagCoordinates {
            alg,
            z,
            z_inv,
            blocks,
        })
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    pub fn algebra(&self) -> &Arc<FlagAlgebra> {
        &self.alg
    }

    pub fn z(&self) -> &AMat {
        &self.z
    }

    pub fn z_inv(&self) -> &AMat {
        &self.z_inv
    }

    /// `E^(m) + gz^(m)` for `0 <= m <= N`.
    pub fn embedded(&self, m: usize) -> Result<&AMat, GrassmannError> {
        self.blocks.get(m).ok_or(GrassmannError::BadIndex {
            m,
            lo: 0,
            hi: self.n(),
        })
    }

    /// The padded block `gz^(m)`.
    pub fn padded(&self, m: usize) -> Result<AMat, GrassmannError> {
        let e = build_e(self.n(), m)?.to_alg();
        Ok(self.embedded(m)?.sub(&e)?)
    }

    /// The `m x (N-m)` block `Z^(m)`, entry `(j, k-m)` holding `z^(m)_{jk}`.
    pub fn block(&self, m: usize) -> Result<AMat, GrassmannError> {
        let n = self.n();
        let full = self.embedded(m)?;
        Ok(AMat::from_fn(m, n - m, |r, c| full.get(r, m + c).clone()))
    }

    /// `z^(m)_{jk}` with 1-based indices, `j <= m < k`.
    pub fn coordinate(&self, m: usize, j: usize, k: usize) -> Result<Element, GrassmannError> {
        Ok(self.embedded(m)?.get(j - 1, k - 1).clone())
    }
}

/// `E^(m) + gz^(m)` as a polynomial matrix in the flag coordinates,
/// `1 <= m <= N-1`.
pub fn embed_grassmann(n: usize, m: usize) -> Result<AMat, GrassmannError> {
    if m == 0 || m >= n {
        return Err(GrassmannError::BadIndex { m, lo: 1, hi: n.saturating_sub(1) });
    }
    Ok(FlagCoordinates::new(n)?.embedded(m)?.clone())
}

/// The antiholomorphic blocks `gX^(m) = E^(m) + gz^(m)*` for `0 <= m <= N`.
pub fn ahol_blocks(coords: &FlagCoordinates, ahol: &FlagAlgebra) -> Result<Vec<AMat>, GrassmannError> {
    let n = coords.n();
    (0..=n)
        .map(|m| {
            let star = adjoint_matrix(&coords.padded(m)?, ahol)?;
            Ok(build_e(n, m)?.to_alg().add(&star)?)
        })
        .collect()
}

pub mod names {
    pub const INVERSE: &str = "Z Z^-1 = Z^-1 Z = I";
    pub const FLAG_RELATION: &str = "flag relation R12 Z1 diag(R) Z2 = Z2 diag(R) Z1 R12";
    pub const BLOCK_SHAPE: &str = "block shape E(m) B = B and B E(m) = E(m) for B = Z^-1 E(m) Z";
    pub const RECONSTRUCTION: &str = "reconstruction Z = sum F(m-1)(E(m) + gz(m))";
    pub const RECONSTRUCTION_PADDED: &str = "reconstruction Z = I + sum F(m-1) gz(m)";
    pub const BLOCK_FACTORS: &str = "block factorization Z^-1 E Z = Xbar (X + Y), E = Xbar X = X Xbar";
    pub const ABSORPTION: &str = "absorption (E(m)+gz(m))(E(n)+gz(n)) = E(m)+gz(m), m < n";
    pub const ABSORPTION_REVERSED: &str = "absorption (E(n)+gz(n))(E(m)+gz(m)) = E(m)+gz(m), m <= n";
    pub const CLASSICAL_CONSTRAINT: &str = "constraint (I, Z(m)) (-Z(n); I) = 0, m < n";
    pub const CROSS_RELATION: &str =
        "cross relation R21 (E+gz)(m)_1 R12 (E+gz)(n)_2 = (E+gz)(n)_2 R21 (E+gz)(m)_1 R12, m <= n";
    pub const GRASSMANN_ENTRIES: &str =
        "Grassmann entries z_jk z_st - z_st z_jk = (q^sgn(j-s) - q^sgn(k-t)) z_sk z_jt";
    pub const REDUCED_R: &str = "reduced form R[m]_21 Z1 Z2 = Z2 Z1 R[N-m]_12";
    pub const BLOCK_XX: &str = "R21^-1 X(m)_1 diag(R) X(n)_2 = X(n)_2 diag(R) X(m)_1 R21^-1 E(m)_1";
    pub const BLOCK_XY: &str = "R21^-1 X(m)_1 diag(R) Y(n)_2 = Y(n)_2 X(m)_1";
    pub const BLOCK_YX: &str =
        "E(m)_1 R12 Y(m)_1 diag(R) X(n)_2 = X(n)_2 diag(R) Y(m)_1 R12 F(m)_1 E(n)_2";
    pub const BLOCK_YY: &str =
        "E(m)_1 R12 Y(m)_1 diag(R) Y(n)_2 = Y(n)_2 Y(m)_1 R12 + (q - 1/q) X(n)_2 F(m)_2 Y(m)_1 F(n)_1 P";
    pub const AHOL_ABSORPTION: &str = "adjoint absorption gX(n) gX(m) = gX(m) gX(n) = gX(m), m <= n";
    pub const AHOL_CROSS: &str = "adjoint cross relation R21 gX(m)_1 R12 gX(n)_2 = gX(n)_2 R21 gX(m)_1 R12, m <= n";
}

/// Verifies the embedding of Grassmannians into the flag algebra for rank `n`.
pub fn verify_flag_grassmann(n: usize) -> Result<Report, GrassmannError> {
    use names::*;
    use Factor::{A, S};
    let coords = FlagCoordinates::new(n)?;
    let alg = coords.algebra().clone();
    let ahol = FlagAlgebra::new(n, Kind::Ahol)?;
    let mut rep = Report::new(format!("flag and Grassmann relations, N={n}"));
    let p0 = format!("N={n}");

    let z = coords.z();
    let zi = coords.z_inv();
    let id = AMat::identity(n);
    record_eq(&mut rep, INVERSE, format!("{p0}, Z Z^-1"), &z.mul_in(zi, &alg)?, &id, n, 1);
    record_eq(&mut rep, INVERSE, format!("{p0}, Z^-1 Z"), &zi.mul_in(z, &alg)?, &id, n, 1);

    let r = build_r(n)?;
    let p = build_p(n);
    let r21 = SMat::chain(&[&p, &r, &p])?;
    let diag = build_diag_r(n, 1);
    let z1 = z.embed(n, &[1], 2);
    let z2 = z.embed(n, &[2], 2);
    let lhs = chain_mixed(&[S(&r), A(&z1), S(&diag), A(&z2)], &alg)?;
    let rhs = chain_mixed(&[A(&z2), S(&diag), A(&z1), S(&r)], &alg)?;
    record_eq(&mut rep, FLAG_RELATION, p0.clone(), &lhs, &rhs, n, 2);

    let es: Vec<SMat> = (0..=n).map(|m| build_e(n, m)).collect::<Result<_, _>>()?;
    let fs: Vec<SMat> = (0..=n).map(|m| build_f(n, m)).collect::<Result<_, _>>()?;
    let blocks: Vec<AMat> = (0..=n).map(|m| coords.embedded(m).cloned()).collect::<Result<_, _>>()?;
    let ea: Vec<AMat> = es.iter().map(SMat::to_alg).collect();

    let mut recon = AMat::zeros(n, n);
    let mut recon_padded = AMat::identity(n);
    for m in 0..=n {
        let pm = format!("{p0}, m={m}");
        let b = &blocks[m];
        record_eq(&mut rep, BLOCK_SHAPE, format!("{pm}, E B = B"), &AMat::lmul_scalar(&es[m], b)?, b, n, 1);
        record_eq(&mut rep, BLOCK_SHAPE, format!("{pm}, B E = E"), &b.rmul_scalar(&es[m])?, &ea[m], n, 1);

        let x = z.rmul_scalar(&es[m])?;
        let xbar = zi.rmul_scalar(&es[m])?;
        let y = chain_mixed(&[S(&es[m]), A(z), S(&fs[m])], &alg)?;
        let prod = xbar.mul_in(&x.add(&y)?, &alg)?;
        record_eq(&mut rep, BLOCK_FACTORS, format!("{pm}, Xbar (X + Y)"), &prod, b, n, 1);
        record_eq(&mut rep, BLOCK_FACTORS, format!("{pm}, Xbar X"), &xbar.mul_in(&x, &alg)?, &ea[m], n, 1);
        record_eq(&mut rep, BLOCK_FACTORS, format!("{pm}, X Xbar"), &x.mul_in(&xbar, &alg)?, &ea[m], n, 1);

        if m >= 1 {
            recon = recon.add(&AMat::lmul_scalar(&fs[m - 1], b)?)?;
            if m < n {
                let padded = coords.padded(m)?;
                recon_padded = recon_padded.add(&AMat::lmul_scalar(&fs[m - 1], &padded)?)?;
            }
        }
    }
    record_eq(&mut rep, RECONSTRUCTION, p0.clone(), &recon, z, n, 1);
    record_eq(&mut rep, RECONSTRUCTION_PADDED, p0.clone(), &recon_padded, z, n, 1);

    for m in 0..=n {
        for k in m..=n {
            let pmk = format!("{p0}, m={m}, n={k}");
            let (bm, bk) = (&blocks[m], &blocks[k]);
            if m < k && m >= 1 && k < n {
                record_eq(&mut rep, ABSORPTION, pmk.clone(), &bm.mul_in(bk, &alg)?, bm, n, 1);
                let zm = coords.block(m)?;
                let zk = coords.block(k)?;
                // (I, Z(m)) is m x N and (-Z(n); I) is N x (N-n)
                let left = AMat::from_fn(m, n, |r, c| {
                    if c < m {
                        if r == c { Element::one() } else { Element::zero() }
                    } else {
                        zm.get(r, c - m).clone()
                    }
                });
                let right = AMat::from_fn(n, n - k, |r, c| {
                    if r < k {
                        -zk.get(r, c)
                    } else if r - k == c {
                        Element::one()
                    } else {
                        Element::zero()
                    }
                });
                let prod = left.mul_in(&right, &alg)?;
                record_eq(&mut rep, CLASSICAL_CONSTRAINT, pmk.clone(), &prod, &AMat::zeros(m, n - k), n, 0);
            }
            record_eq(&mut rep, ABSORPTION_REVERSED, pmk.clone(), &bk.mul_in(bm, &alg)?, bm, n, 1);

            let bm1 = bm.embed(n, &[1], 2);
            let bk2 = bk.embed(n, &[2], 2);
            let lhs = chain_mixed(&[S(&r21), A(&bm1), S(&r), A(&bk2)], &alg)?;
            let rhs = chain_mixed(&[A(&bk2), S(&r21), A(&bm1), S(&r)], &alg)?;
            record_eq(&mut rep, CROSS_RELATION, pmk.clone(), &lhs, &rhs, n, 2);

            block_projections(&mut rep, &pmk, &coords, m, k, &es, &fs)?;
        }
    }

    for m in 1..n {
        let pm = format!("{p0}, m={m}");
        grassmann_entries(&mut rep, &pm, &coords, m)?;
        reduced_form(&mut rep, &pm, &coords, m)?;
    }

    let xs = ahol_blocks(&coords, &ahol)?;
    for m in 1..=n {
        for k in m..=n {
            let pmk = format!("{p0}, m={m}, n={k}");
            let (xm, xk) = (&xs[m], &xs[k]);
            record_eq(&mut rep, AHOL_ABSORPTION, format!("{pmk}, gX(n) gX(m)"), &xk.mul_in(xm, &ahol)?, xm, n, 1);
            record_eq(&mut rep, AHOL_ABSORPTION, format!("{pmk}, gX(m) gX(n)"), &xm.mul_in(xk, &ahol)?, xm, n, 1);
            let xm1 = xm.embed(n, &[1], 2);
            let xk2 = xk.embed(n, &[2], 2);
            let lhs = chain_mixed(&[S(&r21), A(&xm1), S(&r), A(&xk2)], &ahol)?;
            let rhs = chain_mixed(&[A(&xk2), S(&r21), A(&xm1), S(&r)], &ahol)?;
            record_eq(&mut rep, AHOL_CROSS, pmk, &lhs, &rhs, n, 2);
        }
    }
    Ok(rep)
}

fn block_projections(
    rep: &mut Report,
    params: &str,
    coords: &FlagCoordinates,
    m: usize,
    k: usize,
    es: &[SMat],
    fs: &[SMat],
) -> Result<(), GrassmannError> {
    use names::*;
    use Factor::{A, S};
    let n = coords.n();
    let alg = coords.algebra();
    let z = coords.z();
    let r = build_r(n)?;
    let p = build_p(n);
    let r21_inv = SMat::chain(&[&p, &build_r_inv(n)?, &p])?;
    let diag = build_diag_r(n, 1);
    let x = |i: usize| z.rmul_scalar(&es[i]);
    let y = |i: usize| chain_mixed(&[S(&es[i]), A(z), S(&fs[i])], alg);
    let (xm, xk) = (x(m)?, x(k)?);
    let (ym, yk) = (y(m)?, y(k)?);
    let xm1 = xm.embed(n, &[1], 2);
    let xk2 = xk.embed(n, &[2], 2);
    let ym1 = ym.embed(n, &[1], 2);
    let yk2 = yk.embed(n, &[2], 2);
    let em1 = es[m].embed(n, &[1], 2);
    let ek2 = es[k].embed(n, &[2], 2);
    let fm1 = fs[m].embed(n, &[1], 2);
    let fm2 = fs[m].embed(n, &[2], 2);
    let fk1 = fs[k].embed(n, &[1], 2);

    let lhs = chain_mixed(&[S(&r21_inv), A(&xm1), S(&diag), A(&xk2)], alg)?;
    let rhs = chain_mixed(&[A(&xk2), S(&diag), A(&xm1), S(&r21_inv), S(&em1)], alg)?;
    record_eq(rep, BLOCK_XX, params.to_string(), &lhs, &rhs, n, 2);

    let lhs = chain_mixed(&[S(&r21_inv), A(&xm1), S(&diag), A(&yk2)], alg)?;
    let rhs = chain_mixed(&[A(&yk2), A(&xm1)], alg)?;
    record_eq(rep, BLOCK_XY, params.to_string(), &lhs, &rhs, n, 2);

    let lhs = chain_mixed(&[S(&em1), S(&r), A(&ym1), S(&diag), A(&xk2)], alg)?;
    let rhs = chain_mixed(&[A(&xk2), S(&diag), A(&ym1), S(&r), S(&fm1), S(&ek2)], alg)?;
    record_eq(rep, BLOCK_YX, params.to_string(), &lhs, &rhs, n, 2);

    let lhs = chain_mixed(&[S(&em1), S(&r), A(&ym1), S(&diag), A(&yk2)], alg)?;
    let first = chain_mixed(&[A(&yk2), A(&ym1), S(&r)], alg)?;
    let second = chain_mixed(&[A(&xk2), S(&fm2), A(&ym1), S(&fk1), S(&p)], alg)?;
    let rhs = first.add(&second.scale(&Laurent::gamma()))?;
    record_eq(rep, BLOCK_YY, params.to_string(), &lhs, &rhs, n, 2);
    Ok(())
}

fn grassmann_entries(
    rep: &mut Report,
    params: &str,
    coords: &FlagCoordinates,
    m: usize,
) -> Result<(), GrassmannError> {
    let n = coords.n();
    let alg = coords.algebra();
    let mut failure = None;
    'outer: for j in 1..=m {
        for s in 1..=m {
            for k in (m + 1)..=n {
                for t in (m + 1)..=n {
                    let z = |a, b| coords.coordinate(m, a, b);
                    let lhs = &alg.multiply(&z(j, k)?, &z(s, t)?)? - &alg.multiply(&z(s, t)?, &z(j, k)?)?;
                    let c = Laurent::q_pow(sgn(j as i64 - s as i64)) - Laurent::q_pow(sgn(k as i64 - t as i64));
                    let rhs = alg.multiply(&z(s, k)?, &z(j, t)?)?.scale(&c);
                    let diff = &lhs - &rhs;
                    if !diff.is_zero() {
                        failure = Some(format!("(j,k,s,t)=({j},{k},{s},{t}): residue {diff}"));
                        break 'outer;
                    }
                }
            }
        }
    }
    rep.record(names::GRASSMANN_ENTRIES, params.to_string(), failure);
    Ok(())
}

fn reduced_form(
    rep: &mut Report,
    params: &str,
    coords: &FlagCoordinates,
    m: usize,
) -> Result<(), GrassmannError> {
    let n = coords.n();
    let alg = coords.algebra();
    let b = coords.block(m)?;
    let (rows, cols) = (m, n - m);
    let mut z1z2 = AMat::zeros(rows * rows, cols * cols);
    let mut z2z1 = AMat::zeros(rows * rows, cols * cols);
    for a in 0..rows {
        for bb in 0..rows {
            for c in 0..cols {
                for d in 0..cols {
                    let (i, j) = (a * rows + bb, c * cols + d);
                    z1z2.set(i, j, alg.multiply(b.get(a, c), b.get(bb, d))?);
                    z2z1.set(i, j, alg.multiply(b.get(bb, d), b.get(a, c))?);
                }
            }
        }
    }
    let flip = |k: usize| {
        if k == 1 {
            SMat::identity(1)
        } else {
            build_p(k)
        }
    };
    let rm = build_r_block(m);
    let rm21 = SMat::chain(&[&flip(m), &rm, &flip(m)])?;
    let rnm = build_r_block(n - m);
    let lhs = AMat::lmul_scalar(&rm21, &z1z2)?;
    let rhs = z2z1.rmul_scalar(&rnm)?;
    record_eq(rep, names::REDUCED_R, params.to_string(), &lhs, &rhs, n, 0);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{Gen, Word};

    fn z(s: usize, t: usize) -> Element {
        Element::generator(Gen::new(Kind::Hol, s, t))
    }

    #[test]
    fn inverse_small() {
        let c2 = FlagCoordinates::new(2).unwrap();
        assert_eq!(c2.z_inv().get(0, 1), &-&z(1, 2));
        let c3 = FlagCoordinates::new(3).unwrap();
        let expected = &-&z(1, 3) + &Element::word(Word(vec![
            Gen::new(Kind::Hol, 1, 2),
            Gen::new(Kind::Hol, 2, 3),
        ]));
        assert_eq!(c3.z_inv().get(0, 2), &expected);
        let alg = c3.algebra();
        let id = AMat::identity(3);
        assert_eq!(invert_unitriangular(&id, alg).unwrap(), id);
        let mut bad = id.clone();
        bad.set(2, 0, z(1, 2));
        assert!(matches!(
            invert_unitriangular(&bad, alg),
            Err(GrassmannError::NotUnitriangular { row: 3, col: 1 })
        ));
    }

    #[test]
    fn embedded_blocks() {
        let b = embed_grassmann(2, 1).unwrap();
        assert!(b.get(0, 0).is_one());
        assert_eq!(b.get(0, 1), &z(1, 2));
        assert!(b.get(1, 0).is_zero() && b.get(1, 1).is_zero());
        let c3 = FlagCoordinates::new(3).unwrap();
        let z12z23 = Element::word(Word(vec![Gen::new(Kind::Hol, 1, 2), Gen::new(Kind::Hol, 2, 3)]));
        assert_eq!(c3.coordinate(2, 1, 3).unwrap(), &z(1, 3) - &z12z23);
        assert_eq!(c3.coordinate(2, 2, 3).unwrap(), z(2, 3));
        assert!(matches!(embed_grassmann(3, 3), Err(GrassmannError::BadIndex { .. })));
        assert!(matches!(embed_grassmann(3, 0), Err(GrassmannError::BadIndex { .. })));
    }

    #[test]
    fn row_s_of_block_s_is_flag_coordinate() {
        let c = FlagCoordinates::new(4).unwrap();
        for s in 1..4 {
            for t in (s + 1)..=4 {
                assert_eq!(c.coordinate(s, s, t).unwrap(), z(s, t));
            }
        }
    }

    #[test]
    fn verify_small() {
        for n in 2..=3 {
            let rep = verify_flag_grassmann(n).unwrap();
            assert!(rep.all_passed(), "{}", rep.to_text());
        }
    }
}
