//! Exact arithmetic in the Laurent ring `Q[v, v^-1]` with `v = q^(1/2)`.
//!
//! Every scalar in the engine lives here: powers of `q` (including half
//! powers), `q - q^-1`, and the quantum integers `[n]`. Exponents are stored
//! in units of `v`, so `q^k` is `v^(2k)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

/// An element of `Q[v, v^-1]` in canonical sparse form (no zero coefficients).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, Rational>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rational::one())
    }

    /// `c * v^exp`.
    pub fn monomial(exp: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(0, Rational::from_integer(BigInt::from(c)))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// `v^exp`, i.e. `q^(exp/2)`.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(exp, Rational::one())
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::v_pow(2 * exp)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q - q^-1`.
    pub fn gamma() -> Self {
        Self::q_pow(1) - Self::q_pow(-1)
    }

    /// The quantum integer `[n] = (q^n - q^-n) / (q - q^-1)`.
    pub fn bracket(n: i64) -> Self {
        let mut out = Self::zero();
        let m = n.abs();
        for i in 0..m {
            out.add_term(2 * (m - 1 - 2 * i), Rational::one());
        }
        if n < 0 {
            -out
        } else {
            out
        }
    }

    /// Builds from arbitrary `(exp, coeff)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in it {
            out.add_term(e, c);
        }
        out
    }

    pub fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Units of the Laurent ring are exactly the nonzero monomials `c v^k`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    /// Exponent of `v` when `self` is `v^k` exactly.
    pub fn as_v_power(&self) -> Option<i64> {
        match self.terms.iter().next() {
            Some((&e, c)) if self.terms.len() == 1 && c.is_one() => Some(e),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn low_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn high_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `high - low`; the Euclidean size used by [`Laurent::div_rem`].
    pub fn span(&self) -> Option<i64> {
        Some(self.high_exp()? - self.low_exp()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn shift(&self, by: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    /// The bar involution `v -> v^-1`; turns `R_q` into `R_{q^-1}`.
    pub fn invert_v(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Inverse of a unit `c v^k`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Self::monomial(-e, c.recip()))
    }

    /// Rescales by a unit so that the lowest exponent is 0 and the top
    /// coefficient is 1. Returns the normalized value together with the unit
    /// that was divided out (`self = unit * normalized`).
    pub fn normalize_associate(&self) -> (Self, Self) {
        let (Some(lo), Some((_, top))) = (self.low_exp(), self.terms.iter().next_back()) else {
            return (Self::zero(), Self::one());
        };
        let unit = Self::monomial(lo, top.clone());
        let norm = self.shift(-lo).scale(&top.recip());
        (norm, unit)
    }

    /// Euclidean division: `self = quot * d + rem` with `span(rem) < span(d)`
    /// (or `rem = 0`). Panics if `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        let lo_a = self.low_exp().unwrap();
        let lo_d = d.low_exp().unwrap();
        let mut rem = dense(&self.shift(-lo_a));
        let div = dense(&d.shift(-lo_d));
        let deg_d = div.len() - 1;
        let lead = div[deg_d].clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(deg_d).max(1)];
        while rem.len() > deg_d && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = &rem[top] / &lead;
            let shift = top - deg_d;
            for (i, dc) in div.iter().enumerate() {
                let t = &c * dc;
                rem[shift + i] -= t;
            }
            quot[shift] += c;
            trim(&mut rem);
        }
        let quot = sparse(&quot).shift(lo_a - lo_d);
        let rem = sparse(&rem).shift(lo_a);
        (quot, rem)
    }

    /// Exact quotient when `d` divides `self` in the Laurent ring.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if let Some(inv) = d.unit_inverse() {
            return Some(self * &inv);
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Floating-point value at a given `q`; for debugging output only.
    pub fn eval_f64(&self, q: f64) -> f64 {
        let v = q.sqrt();
        self.terms
            .iter()
            .map(|(e, c)| {
                let cf = c.numer().to_string().parse::<f64>().unwrap_or(f64::NAN)
                    / c.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
                cf * v.powi(*e as i32)
            })
            .sum()
    }
}

fn dense(a: &Laurent) -> Vec<Rational> {
    let hi = a.high_exp().unwrap_or(0).max(0) as usize;
    let mut out = vec![Rational::zero(); hi + 1];
    for (e, c) in a.terms() {
        out[e as usize] = c.clone();
    }
    trim(&mut out);
    out
}

fn sparse(a: &[Rational]) -> Laurent {
    Laurent::from_terms(a.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
}

fn trim(a: &mut Vec<Rational>) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

/// `sgn(0) = 0`.
pub fn sgn(x: i64) -> i64 {
    x.signum()
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders in powers of `q`, e.g. `q^2 - 3/2 q^(-1/2) + 1`.
impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let pow = match (*e, e % 2 == 0) {
                (0, _) => String::new(),
                (2, _) => "q".to_string(),
                (e, true) => format!("q^{}", e / 2),
                (e, false) => format!("q^({}/2)", e),
            };
            if pow.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", pow)?;
            } else {
                write!(f, "{} {}", mag, pow)?;
            }
        }
        Ok(())
    }
}

impl Add<&Laurent> for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(mut self, rhs: Laurent) -> Laurent {
        self += &rhs;
        self
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Sub<&Laurent> for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(mut self, rhs: Laurent) -> Laurent {
        self -= &rhs;
        self
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -(self.clone())
    }
}

impl Mul<&Laurent> for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let mut acc: BTreeMap<i64, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                *acc.entry(ea + eb).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Laurent { terms: acc }
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        &self * &rhs
    }
}

impl Zero for Laurent {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
}

impl One for Laurent {
    fn one() -> Self {
        Laurent::one()
    }
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Laurent::from_int(c)
    }
}
