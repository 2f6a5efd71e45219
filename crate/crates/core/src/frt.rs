//! The module structure on the antiholomorphic flag algebra in the
//! R-matrix (FRT) picture: a matrix `M` of operators with
//! `M . 1 = sum_m (l_m - l_{m+1}) gX(m) + l_N I` and a recursion that moves
//! one letter `zs[s,t]` at a time past `M`.
//!
//! Notation: `gX(m) = E(m) + gz(m)*` are the antiholomorphic blocks and
//! `X(m)_12 = R12 gX(m)_2 R21 - (q - 1/q) gX(m)_1 R12 P gX(m)_1`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::action::{Action, ActionError, SigmaParams, UElement};
use crate::grassmann::{adjoint_matrix, ahol_blocks, FlagCoordinates, GrassmannError};
use crate::matrix::{AMat, Factor, MatrixError, SMat, chain_mixed};
use crate::ncalg::{adjoint, AlgebraError, Element, FlagAlgebra, Gen, Kind, Word};
use crate::report::Report;
use crate::rmatrix::{build_e, build_f, build_p, build_r, build_r_inv, record_eq, RMatrixError};
use crate::scalar::Laurent;

#[derive(Debug, Error)]
pub enum FrtError {
    #[error("expected {expected} lambda parameters, got {got}")]
    LambdaLength { got: usize, expected: usize },
    #[error("lambda parameters are not mutually distinct: lambda_{0} = lambda_{1}")]
    NotDistinct(usize, usize),
    #[error("block index m={m} outside 0..={n}")]
    BadIndex { m: usize, n: usize },
    #[error("recursion is inconsistent on {word} at {entry}")]
    Inconsistent { word: String, entry: String },
    #[error("antiholomorphic block {0} does not have the expected generator column")]
    UnexpectedBlock(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Grassmann(#[from] GrassmannError),
    #[error(transparent)]
    RMatrix(#[from] RMatrixError),
    #[error(transparent)]
    Action(#[from] ActionError),
}

/// `lambda_1, ..., lambda_N`, mutually distinct; `lambda_{N+1} = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaParams {
    lambda: Vec<Laurent>,
}

impl LambdaParams {
    pub fn new(n: usize, lambda: Vec<Laurent>) -> Result<Self, FrtError> {
        if lambda.len() != n {
            return Err(FrtError::LambdaLength { got: lambda.len(), expected: n });
        }
        for i in 0..n {
            for j in i + 1..n {
                if lambda[i] == lambda[j] {
                    return Err(FrtError::NotDistinct(i + 1, j + 1));
                }
            }
        }
        Ok(LambdaParams { lambda })
    }

    /// `lambda_{j+1} / lambda_j = q^{-2 sigma_j}` with `lambda_N = 1`.
    pub fn from_sigma(n: usize, sigma: &[i64]) -> Result<Self, FrtError> {
        if sigma.len() + 1 != n {
            return Err(FrtError::LambdaLength { got: sigma.len() + 1, expected: n });
        }
        let lambda = (1..=n).map(|j| Laurent::q_pow(2 * sigma[j - 1..].iter().sum::<i64>())).collect();
        Self::new(n, lambda)
    }

    /// Inverse of `from_sigma` up to the overall scale, when every ratio is
    /// an even power of `q`.
    pub fn to_sigma(&self) -> Option<Vec<i64>> {
        self.lambda
            .windows(2)
            .map(|w| {
                let e = w[1].div_exact(&w[0])?.as_v_power()?;
                let coeff_one = w[1].div_exact(&w[0])? == Laurent::v_pow(e);
                (coeff_one && e % 4 == 0).then_some(-e / 4)
            })
            .collect()
    }

    pub fn values(&self) -> &[Laurent] {
        &self.lambda
    }

    /// `lambda_m` for `1 <= m <= N+1`.
    pub fn get(&self, m: usize) -> Laurent {
        self.lambda.get(m - 1).cloned().unwrap_or_default()
    }
}

pub mod names {
    pub const X12_ZERO: &str = "X(0)_12 = 0";
    pub const X12_IDENTITY: &str = "X(N)_12 = I";
    pub const X12_SERIES: &str = "X(m)_12 equals the series (I - F2 R12 gz*2 R12^-1)^-1 E2";
    pub const IDEMPOTENT: &str = "X(n)_12 X(m)_12 = X(m)_12, m <= n";
    pub const THREE_LEG: &str = "R32 X(m)_12 R23 X(n)_13 = X(n)_13 R32 X(m)_12 R23, m <= n";
    pub const MIXED: &str =
        "(X(m)_21 gX(n)_2 + X(n)_21 gX(m)_2) R12^-1 = R12^-1 (X(m)_12 gX(n)_1 + X(n)_12 gX(m)_1), m <= n";
    pub const UNIT_DIAGONAL: &str = "(M.1)_ss = lambda_s";
    pub const UNIT_SUBDIAGONAL: &str = "(M.1)_{s+1,s} = (lambda_s - lambda_{s+1}) zs[s,s+1]";
    pub const UNIT_ENTRIES: &str = "M.1 entrywise from the Grassmann coordinates";
    pub const UNIT_ADJOINT: &str = "(M.1)* = sum (lambda_m - lambda_{m+1}) (E(m) + gz(m)) + lambda_N I";
    pub const REFLECTION: &str = "M2 R12^-1 M1 R21^-1 . f = R12^-1 M1 R21^-1 M2 . f";
    pub const BRIDGE_RATIO: &str = "lambda_{j+1}/lambda_j = (q^H_j . 1)^2";
}

/// Cached matrices and the memoized operator `M` for one rank and one
/// choice of `lambda`.
pub struct FrtState {
    n: usize,
    lambda: LambdaParams,
    ahol: Arc<FlagAlgebra>,
    coords: FlagCoordinates,
    blocks: Vec<AMat>,
    x12: Vec<AMat>,
    r: SMat,
    r_inv: SMat,
    r21: SMat,
    r21_inv: SMat,
    memo: Mutex<HashMap<Word, AMat>>,
}

impl std::fmt::Debug for FrtState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FrtState").field("n", &self.n).field("lambda", &self.lambda).finish()
    }
}

/// `X(m)_12` by its polynomial formula, for `0 <= m <= N`.
fn x12_formula(n: usize, block: &AMat, alg: &FlagAlgebra) -> Result<AMat, FrtError> {
    use Factor::{A, S};
    let r = build_r(n)?;
    let p = build_p(n);
    let r21 = SMat::chain(&[&p, &r, &p])?;
    let x1 = block.embed(n, &[1], 2);
    let x2 = block.embed(n, &[2], 2);
    let first = chain_mixed(&[S(&r), A(&x2), S(&r21)], alg)?;
    let second = chain_mixed(&[A(&x1), S(&r), S(&p), A(&x1)], alg)?;
    Ok(first.sub(&second.map(|e| e.scale(&Laurent::gamma())))?)
}

impl FrtState {
    pub fn new(n: usize, lambda: LambdaParams) -> Result<Self, FrtError> {
        if lambda.values().len() != n {
            return Err(FrtError::LambdaLength { got: lambda.values().len(), expected: n });
        }
        let coords = FlagCoordinates::new(n)?;
        let ahol = FlagAlgebra::shared(n, Kind::Ahol)?;
        let blocks = ahol_blocks(&coords, &ahol)?;
        // the recursion reads zs[s,t] off column s of gX(s)
        for s in 1..n {
            let b = &blocks[s];
            for c in 1..=n {
                let expected = match c.cmp(&s) {
                    std::cmp::Ordering::Less => Element::zero(),
                    std::cmp::Ordering::Equal => Element::one(),
                    std::cmp::Ordering::Greater => Element::generator(Gen::new(Kind::Ahol, s, c)),
                };
                if b.get(c - 1, s - 1) != &expected {
                    return Err(FrtError::UnexpectedBlock(s));
                }
            }
        }
        let mut x12 = Vec::with_capacity(n + 1);
        x12.push(AMat::zeros(n * n, n * n));
        for b in &blocks[1..n] {
            x12.push(x12_formula(n, b, &ahol)?);
        }
        x12.push(AMat::identity(n * n));
        let r = build_r(n)?;
        let r_inv = build_r_inv(n)?;
        let p = build_p(n);
        let r21 = SMat::chain(&[&p, &r, &p])?;
        let r21_inv = SMat::chain(&[&p, &r_inv, &p])?;
        Ok(FrtState {
            n,
            lambda,
            ahol,
            coords,
            blocks,
            x12,
            r,
            r_inv,
            r21,
            r21_inv,
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &LambdaParams {
        &self.lambda
    }

    pub fn algebra(&self) -> &Arc<FlagAlgebra> {
        &self.ahol
    }

    fn check_m(&self, m: usize) -> Result<(), FrtError> {
        if m > self.n {
            return Err(FrtError::BadIndex { m, n: self.n });
        }
        Ok(())
    }

    /// `gX(m)`, `0 <= m <= N`.
    pub fn x_frak(&self, m: usize) -> Result<&AMat, FrtError> {
        self.check_m(m)?;
        Ok(&self.blocks[m])
    }

    /// `X(m)_12`, `0 <= m <= N`, with the conventions at both ends.
    pub fn x12(&self, m: usize) -> Result<&AMat, FrtError> {
        self.check_m(m)?;
        Ok(&self.x12[m])
    }

    /// Independent construction of `X(m)_12` for `1 <= m <= N-1` as the
    /// terminating series `sum_k A^k E2` with the nilpotent
    /// `A = F2 R12 gz*2 R12^-1`.
    pub fn x12_series(&self, m: usize) -> Result<AMat, FrtError> {
        let n = self.n;
        if m == 0 || m >= n {
            return Err(FrtError::BadIndex { m, n });
        }
        let e = build_e(n, m)?;
        let zstar = self.blocks[m].sub(&e.to_alg())?;
        let f2 = build_f(n, m)?.embed(n, &[2], 2);
        let e2 = e.embed(n, &[2], 2).to_alg();
        let z2 = zstar.embed(n, &[2], 2);
        use Factor::{A, S};
        let a = chain_mixed(&[S(&f2), S(&self.r), A(&z2), S(&self.r_inv)], &self.ahol)?;
        let mut term = e2.clone();
        let mut sum = e2;
        // A is strictly lower triangular, so at most N^2 terms survive
        for _ in 0..n * n {
            term = a.mul_in(&term, &self.ahol)?;
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term)?;
        }
        Ok(sum)
    }

    /// `M . 1`.
    pub fn m_unit(&self) -> Result<AMat, FrtError> {
        let n = self.n;
        let mut out = AMat::zeros(n, n);
        for m in 1..=n {
            let c = &self.lambda.get(m) - &self.lambda.get(m + 1);
            out = out.add(&self.blocks[m].map(|e| e.scale(&c)))?;
        }
        Ok(out)
    }

    /// `M . f`, the `N x N` matrix of images.
    pub fn m_dot(&self, f: &Element) -> Result<AMat, FrtError> {
        let mut out = AMat::zeros(self.n, self.n);
        for (w, c) in f.terms() {
            out = out.add(&self.m_dot_word(w)?.map(|e| e.scale(c)))?;
        }
        Ok(out)
    }

    /// The recursion on `zs[s,t] f'` with the block `m = s`. Taking column
    /// `s` of the relation, the unknowns `U[i][x][c] = M_ix . (zs[s,c] f')`
    /// for all `c > s` satisfy
    /// `sum_{x, c>s} R^-1_{(i2 x),(c k)} U[i1][x][c] = b[i1][i2][k]`
    /// with `b` known from `M . f'`. Rows `i2 = t > s` determine `U[.][.][t]`
    /// (triangularly on the diagonal), rows `i2 <= s` must have `b = 0`.
    fn m_dot_word(&self, w: &Word) -> Result<AMat, FrtError> {
        if w.is_empty() {
            return self.m_unit();
        }
        if let Some(hit) = self.memo.lock().unwrap().get(w) {
            return Ok(hit.clone());
        }
        let n = self.n;
        let letters = w.letters();
        let s0 = letters[0].s() - 1;
        let rest = Word(letters[1..].to_vec());
        let mf = self.m_dot_word(&rest)?;
        let alg = &self.ahol;

        let y = mf.embed(n, &[1], 2).rmul_scalar(&self.r21_inv)?;
        let x = &self.x12[s0 + 1];
        let idx = |a: usize, b: usize| a * n + b;
        // b[i1][i2][k1]
        let mut b = vec![vec![vec![Element::zero(); n]; n]; n];
        for i1 in 0..n {
            for i2 in 0..n {
                for k1 in 0..n {
                    let col = idx(k1, s0);
                    let mut acc = Element::zero();
                    for c in 0..n * n {
                        let (xe, ye) = (x.get(idx(i1, i2), c), y.get(c, col));
                        if !xe.is_zero() && !ye.is_zero() {
                            acc = &acc + &alg.multiply(xe, ye)?;
                        }
                    }
                    for xx in 0..n {
                        let r = self.r_inv.get(idx(i2, xx), idx(s0, k1));
                        if !r.is_zero() {
                            acc.add_scaled(mf.get(i1, xx), &-r.clone());
                        }
                    }
                    b[i1][i2][k1] = acc;
                }
            }
        }
        for (i1, bi) in b.iter().enumerate() {
            for (i2, bk) in bi.iter().enumerate().take(s0 + 1) {
                if let Some(k1) = bk.iter().position(|e| !e.is_zero()) {
                    return Err(FrtError::Inconsistent {
                        word: w.to_string(),
                        entry: format!("i1={}, i2={}, k1={}", i1 + 1, i2 + 1, k1 + 1),
                    });
                }
            }
        }
        let q = Laurent::q();
        let off = &Laurent::q_pow(-1) - &q;
        let mut u = vec![vec![vec![Element::zero(); n]; n]; n];
        for i1 in 0..n {
            for t in s0 + 1..n {
                for xx in 0..n {
                    if xx != t {
                        u[i1][xx][t] = b[i1][t][xx].clone();
                    }
                }
                let mut acc = b[i1][t][t].clone();
                for c in s0 + 1..t {
                    acc.add_scaled(&u[i1][c][c].clone(), &-off.clone());
                }
                u[i1][t][t] = acc.scale(&q);
            }
        }
        let mut memo = self.memo.lock().unwrap();
        for t in s0 + 1..n {
            let mut word = vec![Gen::new(Kind::Ahol, s0 + 1, t + 1)];
            word.extend_from_slice(rest.letters());
            let m = AMat::from_fn(n, n, |i1, xx| u[i1][xx][t].clone());
            memo.insert(Word(word), m);
        }
        Ok(memo[w].clone())
    }

    /// `M` acting on leg `leg` (1 or 2) of a two-leg matrix of elements:
    /// `(M_1 A)_{(i1 i2),K} = sum_x [M . A_{(x i2),K}]_{i1 x}`.
    fn act_leg(&self, a: &AMat, leg: usize) -> Result<AMat, FrtError> {
        let n = self.n;
        let mut out = AMat::zeros(n * n, n * n);
        for row in 0..n * n {
            let (i1, i2) = (row / n, row % n);
            for col in 0..n * n {
                let mut acc = Element::zero();
                for x in 0..n {
                    let (src, i) = if leg == 1 { (x * n + i2, i1) } else { (i1 * n + x, i2) };
                    let e = a.get(src, col);
                    if e.is_zero() {
                        continue;
                    }
                    acc = &acc + self.m_dot(e)?.get(i, x);
                }
                out.set(row, col, acc);
            }
        }
        Ok(out)
    }

    /// Both sides of the reflection relation applied to `f`.
    pub fn reflection_sides(&self, f: &Element) -> Result<(AMat, AMat), FrtError> {
        let n = self.n;
        let mf = self.m_dot(f)?;
        let t = mf.embed(n, &[1], 2).rmul_scalar(&self.r21_inv)?;
        let lhs = self.act_leg(&AMat::lmul_scalar(&self.r_inv, &t)?, 2)?;
        let w = mf.embed(n, &[2], 2);
        let v = self.act_leg(&AMat::lmul_scalar(&self.r21_inv, &w)?, 1)?;
        let rhs = AMat::lmul_scalar(&self.r_inv, &v)?;
        Ok((lhs, rhs))
    }
}

/// `X(m)_12` for rank `n`, `0 <= m <= N`.
pub fn build_x12(n: usize, m: usize) -> Result<AMat, FrtError> {
    if m > n {
        return Err(FrtError::BadIndex { m, n });
    }
    if m == 0 {
        return Ok(AMat::zeros(n * n, n * n));
    }
    if m == n {
        return Ok(AMat::identity(n * n));
    }
    let coords = FlagCoordinates::new(n)?;
    let ahol = FlagAlgebra::shared(n, Kind::Ahol)?;
    let blocks = ahol_blocks(&coords, &ahol)?;
    x12_formula(n, &blocks[m], &ahol)
}

fn x12_identities(st: &FrtState, rep: &mut Report) -> Result<(), FrtError> {
    use Factor::{A, S};
    let n = st.n;
    let alg = &st.ahol;
    let ps = |extra: String| format!("N={n}, {extra}");

    let formula_n = x12_formula(n, &st.blocks[n], alg)?;
    record_eq(rep, names::X12_IDENTITY, ps("formula at m=N".into()), &formula_n, &st.x12[n], n, 2);
    let formula_0 = x12_formula(n, &st.blocks[0], alg)?;
    record_eq(rep, names::X12_ZERO, ps("formula at m=0".into()), &formula_0, &st.x12[0], n, 2);
    for m in 1..n {
        record_eq(rep, names::X12_SERIES, ps(format!("m={m}")), &st.x12[m], &st.x12_series(m)?, n, 2);
    }

    let r23 = st.r.embed(n, &[2, 3], 3);
    let r32 = st.r21.embed(n, &[2, 3], 3);
    for m in 1..=n {
        for k in m..=n {
            let p = ps(format!("m={m}, n={k}"));
            let (xm, xk) = (&st.x12[m], &st.x12[k]);
            let lhs = xk.mul_in(xm, alg)?;
            record_eq(rep, names::IDEMPOTENT, p.clone(), &lhs, xm, n, 2);

            let xm12 = xm.embed(n, &[1, 2], 3);
            let xk13 = xk.embed(n, &[1, 3], 3);
            let lhs = chain_mixed(&[S(&r32), A(&xm12), S(&r23), A(&xk13)], alg)?;
            let rhs = chain_mixed(&[A(&xk13), S(&r32), A(&xm12), S(&r23)], alg)?;
            record_eq(rep, names::THREE_LEG, p.clone(), &lhs, &rhs, n, 3);

            let (bm, bk) = (&st.blocks[m], &st.blocks[k]);
            let xm21 = xm.embed(n, &[2, 1], 2);
            let xk21 = xk.embed(n, &[2, 1], 2);
            let left = xm21
                .mul_in(&bk.embed(n, &[2], 2), alg)?
                .add(&xk21.mul_in(&bm.embed(n, &[2], 2), alg)?)?
                .rmul_scalar(&st.r_inv)?;
            let inner = xm
                .mul_in(&bk.embed(n, &[1], 2), alg)?
                .add(&xk.mul_in(&bm.embed(n, &[1], 2), alg)?)?;
            let right = AMat::lmul_scalar(&st.r_inv, &inner)?;
            record_eq(rep, names::MIXED, p, &left, &right, n, 2);
        }
    }
    Ok(())
}

fn unit_checks(st: &FrtState, rep: &mut Report) -> Result<(), FrtError> {
    let n = st.n;
    let m1 = st.m_unit()?;
    let lam = |m: usize| st.lambda.get(m);
    let ps = format!("N={n}");
    for s in 1..=n {
        let e = m1.get(s - 1, s - 1);
        let expected = Element::scalar(lam(s));
        rep.record(names::UNIT_DIAGONAL, format!("{ps}, s={s}"), (e != &expected).then(|| format!("{e}")));
    }
    for s in 1..n {
        let e = m1.get(s, s - 1);
        let expected = Element::generator(Gen::new(Kind::Ahol, s, s + 1)).scale(&(&lam(s) - &lam(s + 1)));
        rep.record(names::UNIT_SUBDIAGONAL, format!("{ps}, s={s}"), (e != &expected).then(|| format!("{e}")));
    }
    // entry (t, s), t > s, collects gz(m)*_{ts} = (z(m)_{st})* for s <= m < t
    let oracle = AMat::from_fn(n, n, |r, c| {
        let (t, s) = (r + 1, c + 1);
        if t == s {
            return Element::scalar(lam(s));
        }
        if t < s {
            return Element::zero();
        }
        let mut acc = Element::zero();
        for m in s..t {
            let z = st.coords.coordinate(m, s, t).expect("index in range");
            let zs = adjoint(&z, &st.ahol).expect("adjoint normal-orders");
            acc.add_scaled(&zs, &(&lam(m) - &lam(m + 1)));
        }
        acc
    });
    record_eq(rep, names::UNIT_ENTRIES, ps.clone(), &m1, &oracle, n, 0);

    let hol = st.coords.algebra();
    let star = adjoint_matrix(&m1, hol)?;
    let mut expected = AMat::zeros(n, n);
    for m in 1..=n {
        expected = expected.add(&st.coords.embedded(m)?.map(|e| e.scale(&(&lam(m) - &lam(m + 1)))))?;
    }
    record_eq(rep, names::UNIT_ADJOINT, ps, &star, &expected, n, 0);
    Ok(())
}

/// Exact checks of the FRT-picture identities and of the reflection
/// relation on every ordered monomial up to `max_degree`.
pub fn verify_frt(n: usize, lambda: &LambdaParams, max_degree: usize) -> Result<Report, FrtError> {
    let st = FrtState::new(n, lambda.clone())?;
    let lam: Vec<String> = lambda.values().iter().map(|l| l.to_string()).collect();
    let mut rep = Report::new(format!("FRT module, N={n}, lambda=({}), degree<={max_degree}", lam.join(", ")));
    x12_identities(&st, &mut rep)?;
    unit_checks(&st, &mut rep)?;
    for w in st.ahol.monomials_up_to(max_degree) {
        let f = Element::word(w.clone());
        let (lhs, rhs) = st.reflection_sides(&f)?;
        record_eq(&mut rep, names::REFLECTION, format!("N={n}, f={w}"), &lhs, &rhs, n, 2);
    }
    if let Some(sigma) = lambda.to_sigma() {
        let action = Action::new(n)?;
        let sp = SigmaParams::new(n, sigma.clone())?;
        for j in 1..n {
            let qh = action.dot(&UElement::q_h(j, 1), &Element::one(), &sp)?;
            let sq = st.ahol.multiply(&qh, &qh)?;
            let ratio = lambda.get(j + 1).div_exact(&lambda.get(j));
            let ok = ratio.as_ref().map(|r| Element::scalar(r.clone())) == Some(sq.clone());
            rep.record(
                names::BRIDGE_RATIO,
                format!("N={n}, sigma={sigma:?}, j={j}"),
                (!ok).then(|| format!("{sq} vs {ratio:?}")),
            );
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(n: usize, exps: &[i64]) -> LambdaParams {
        LambdaParams::new(n, exps.iter().map(|&e| Laurent::q_pow(e)).collect()).unwrap()
    }

    #[test]
    fn conventions_and_series() {
        assert!(build_x12(2, 0).unwrap().is_zero());
        assert_eq!(build_x12(3, 3).unwrap(), AMat::identity(9));
        let st = FrtState::new(2, lam(2, &[-2, 0])).unwrap();
        assert_eq!(st.x12(1).unwrap(), &st.x12_series(1).unwrap());
        assert!(matches!(build_x12(2, 3), Err(FrtError::BadIndex { .. })));
    }

    #[test]
    fn lambda_validation_and_bridge() {
        let one = Laurent::one();
        assert!(matches!(
            LambdaParams::new(2, vec![one.clone(), one]),
            Err(FrtError::NotDistinct(1, 2))
        ));
        let l = LambdaParams::from_sigma(3, &[1, 2]).unwrap();
        assert_eq!(l.values(), &[Laurent::q_pow(6), Laurent::q_pow(4), Laurent::one()]);
        assert_eq!(l.to_sigma(), Some(vec![1, 2]));
        assert_eq!(lam(2, &[-2, 0]).to_sigma(), Some(vec![-1]));
    }

    #[test]
    fn unit_action_entries() {
        let st = FrtState::new(3, lam(3, &[-4, -2, 0])).unwrap();
        let m1 = st.m_unit().unwrap();
        assert_eq!(m1.get(0, 0), &Element::scalar(Laurent::q_pow(-4)));
        assert!(m1.get(0, 1).is_zero());
    }

    #[test]
    fn su2_degree_one_is_consistent() {
        let st = FrtState::new(2, lam(2, &[2, 0])).unwrap();
        let z = Element::generator(Gen::new(Kind::Ahol, 1, 2));
        let (l, r) = st.reflection_sides(&z).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn verify_n2() {
        let rep = verify_frt(2, &lam(2, &[2, 0]), 2).unwrap();
        assert!(rep.all_passed(), "{}", rep.to_text());
    }
}
