//! Chevalley generators acting on the antiholomorphic flag algebra.
//!
//! Two actions are provided. The infinitesimal dressing action `xi` is fixed
//! on single generators `zs[s,t]` and extended to products by the Leibniz rule
//! of the coproduct `D(K) = K (x) K`, `D(X) = X (x) K^{-1} + K (x) X`. The
//! module action `dot` depends on integer parameters `sigma`: it is fixed on
//! the unit and extended by `Y.(zs[s,t] f) = (xi(Y_(1)) zs[s,t]) (Y_(2) . f)`.
//!
//! `K_j` stands for `q^{H_j/2}`; `q^{H_j}` is the word `K_j K_j`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::ncalg::{gen_weight, relation_instances, AlgebraError, Element, FlagAlgebra, Gen, Kind, Word};
use crate::report::Report;
use crate::scalar::Laurent;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ActionError {
    #[error("generator index j={j} outside 1..={max}")]
    BadIndex { j: usize, max: usize },
    #[error("sigma has {got} entries, expected {expected}")]
    SigmaLength { got: usize, expected: usize },
    #[error("the action needs antiholomorphic elements")]
    WrongKind,
    #[error("cannot parse generator name {0:?}")]
    BadName(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UKind {
    /// `K_j = q^{H_j/2}`.
    K,
    /// `K_j^{-1}`.
    Kinv,
    Xplus,
    Xminus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UGen {
    pub kind: UKind,
    pub j: usize,
}

impl UGen {
    pub fn k(j: usize) -> Self {
        UGen { kind: UKind::K, j }
    }
    pub fn kinv(j: usize) -> Self {
        UGen { kind: UKind::Kinv, j }
    }
    pub fn xp(j: usize) -> Self {
        UGen { kind: UKind::Xplus, j }
    }
    pub fn xm(j: usize) -> Self {
        UGen { kind: UKind::Xminus, j }
    }

    /// All `4(N-1)` generators in a fixed order.
    pub fn all(n: usize) -> Vec<UGen> {
        (1..n)
            .flat_map(|j| [UGen::k(j), UGen::kinv(j), UGen::xp(j), UGen::xm(j)])
            .collect()
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for UGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.kind {
            UKind::K => "K",
            UKind::Kinv => "Kinv",
            UKind::Xplus => "Xp",
            UKind::Xminus => "Xm",
        };
        write!(f, "{p}{}", self.j)
    }
}

impl FromStr for UGen {
    type Err = ActionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ActionError::BadName(s.to_string());
        let (kind, rest) = if let Some(r) = s.strip_prefix("Kinv") {
            (UKind::Kinv, r)
        } else if let Some(r) = s.strip_prefix('K') {
            (UKind::K, r)
        } else if let Some(r) = s.strip_prefix("Xp") {
            (UKind::Xplus, r)
        } else if let Some(r) = s.strip_prefix("Xm") {
            (UKind::Xminus, r)
        } else {
            return Err(bad());
        };
        let j: usize = rest.parse().map_err(|_| bad())?;
        if j == 0 {
            return Err(bad());
        }
        Ok(UGen { kind, j })
    }
}

/// A free word in the generators; `[a, b]` is the product `a b`, which acts
/// as `a . (b . f)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct UWord(pub Vec<UGen>);

/// A finite combination of generator words, used only as an operator.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UElement {
    terms: BTreeMap<UWord, Laurent>,
}

impl UElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(&[])
    }

    pub fn word(w: &[UGen]) -> Self {
        let mut out = Self::zero();
        out.add_term(UWord(w.to_vec()), Laurent::one());
        out
    }

    pub fn gen(g: UGen) -> Self {
        Self::word(&[g])
    }

    /// `q^{H_j}` raised to `sign`.
    pub fn q_h(j: usize, sign: i8) -> Self {
        let k = if sign >= 0 { UGen::k(j) } else { UGen::kinv(j) };
        Self::word(&[k, k])
    }

    pub fn add_term(&mut self, w: UWord, c: Laurent) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UWord, &Laurent)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Laurent) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, x) in &other.terms {
            out.add_term(w.clone(), x.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Laurent::from_int(-1)))
    }

    /// Product by concatenation.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.0.clone();
                w.extend_from_slice(&b.0);
                out.add_term(UWord(w), x * y);
            }
        }
        out
    }

    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.mul(b).sub(&b.mul(a))
    }
}

/// Integer parameters `sigma_1..sigma_{N-1}` of the module action.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SigmaParams {
    sigma: Vec<i64>,
}

impl SigmaParams {
    pub fn new(n: usize, sigma: Vec<i64>) -> Result<Self, ActionError> {
        if sigma.len() + 1 != n {
            return Err(ActionError::SigmaLength {
                got: sigma.len(),
                expected: n.saturating_sub(1),
            });
        }
        Ok(SigmaParams { sigma })
    }

    pub fn values(&self) -> &[i64] {
        &self.sigma
    }

    /// `sigma_j`, 1-based.
    pub fn get(&self, j: usize) -> i64 {
        self.sigma[j - 1]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.sigma.iter().all(|&s| s >= 0)
    }
}

/// Both actions for one rank, sharing the antiholomorphic algebra.
pub struct Action {
    alg: Arc<FlagAlgebra>,
    dot_memo: Mutex<HashMap<(UGen, Vec<i64>, Word), Element>>,
}

impl fmt::Debug for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Action").field("n", &self.alg.n()).finish()
    }
}

fn weight_exp(w: &Word, j: usize) -> i64 {
    w.letters().iter().map(|g| gen_weight(*g, j)).sum()
}

impl Action {
    pub fn new(n: usize) -> Result<Self, ActionError> {
        Self::with_algebra(FlagAlgebra::shared(n, Kind::Ahol)?)
    }

    pub fn with_algebra(alg: Arc<FlagAlgebra>) -> Result<Self, ActionError> {
        if alg.kind() != Kind::Ahol {
            return Err(ActionError::WrongKind);
        }
        Ok(Action {
            alg,
            dot_memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    pub fn algebra(&self) -> &Arc<FlagAlgebra> {
        &self.alg
    }

    fn check(&self, g: UGen) -> Result<(), ActionError> {
        if g.j == 0 || g.j >= self.n() {
            return Err(ActionError::BadIndex { j: g.j, max: self.n() - 1 });
        }
        Ok(())
    }

    fn zs(&self, s: usize, t: usize) -> Element {
        if s == t {
            Element::one()
        } else {
            Element::generator(Gen::new(Kind::Ahol, s, t))
        }
    }

    /// `xi(g) zs[s,t]` on a single generator.
    pub fn xi_letter(&self, g: UGen, x: Gen) -> Result<Element, ActionError> {
        self.check(g)?;
        let (s, t, j) = (x.s(), x.t(), g.j);
        let d = |a: usize, b: usize| a == b;
        let mut out = Element::zero();
        match g.kind {
            UKind::K | UKind::Kinv => {
                let sign = if g.kind == UKind::K { 1 } else { -1 };
                out.add_term(Word::letter(x), Laurent::v_pow(sign * gen_weight(x, j)));
            }
            UKind::Xplus => {
                if s >= 2 && d(j, s - 1) {
                    out.add_scaled(&self.zs(s - 1, t), &Laurent::one());
                    let p = self.alg.multiply(&self.zs(s, t), &self.zs(s - 1, s))?;
                    out.add_scaled(&p, &Laurent::from_int(-1));
                }
                if d(j, s) {
                    let p = self.alg.multiply(&self.zs(s, t), &self.zs(s, s + 1))?;
                    out.add_scaled(&p, &Laurent::v_pow(-2 + d(s + 1, t) as i64));
                }
                if d(j, t) {
                    out.add_scaled(&self.zs(s, t + 1), &-Laurent::q_pow(-1));
                }
            }
            UKind::Xminus => {
                if d(j, t - 1) {
                    out.add_scaled(&self.zs(s, t - 1), &-Laurent::v_pow(2 - d(s + 1, t) as i64));
                }
            }
        }
        Ok(out)
    }

    /// `xi(g)` on an arbitrary (not necessarily ordered) word.
    fn xi_word(&self, g: UGen, w: &[Gen]) -> Result<Element, ActionError> {
        let Some((&x, rest)) = w.split_first() else {
            return Ok(match g.kind {
                UKind::K | UKind::Kinv => Element::one(),
                _ => Element::zero(),
            });
        };
        let rest_w = Word(rest.to_vec());
        match g.kind {
            UKind::K | UKind::Kinv => {
                let sign = if g.kind == UKind::K { 1 } else { -1 };
                let e = sign * (gen_weight(x, g.j) + weight_exp(&rest_w, g.j));
                Ok(self
                    .alg
                    .normal_form(&Element::term(Word(w.to_vec()), Laurent::v_pow(e)))?)
            }
            UKind::Xplus | UKind::Xminus => {
                let left = self.xi_letter(g, x)?;
                let kinv_rest = Element::term(rest_w.clone(), Laurent::v_pow(-weight_exp(&rest_w, g.j)));
                let mut out = self.alg.multiply(&left, &self.alg.normal_form(&kinv_rest)?)?;
                let kx = self.xi_letter(UGen::k(g.j), x)?;
                let tail = self.xi_word(g, rest)?;
                out.add_scaled(&self.alg.multiply(&kx, &tail)?, &Laurent::one());
                Ok(out)
            }
        }
    }

    /// `xi(g) f` for a single generator.
    pub fn xi_gen(&self, g: UGen, f: &Element) -> Result<Element, ActionError> {
        self.check(g)?;
        let mut out = Element::zero();
        for (w, c) in f.terms() {
            if w.letters().iter().any(|x| x.kind != Kind::Ahol) {
                return Err(ActionError::WrongKind);
            }
            out.add_scaled(&self.xi_word(g, w.letters())?, c);
        }
        Ok(out)
    }

    /// `xi(Y) f`; words act right to left.
    pub fn xi(&self, y: &UElement, f: &Element) -> Result<Element, ActionError> {
        let mut out = Element::zero();
        for (w, c) in y.terms() {
            let mut cur = f.clone();
            for &g in w.0.iter().rev() {
                cur = self.xi_gen(g, &cur)?;
            }
            out.add_scaled(&cur, c);
        }
        Ok(out)
    }

    /// `g . 1` for the module with parameters `sigma`.
    pub fn dot_unit(&self, g: UGen, sigma: &SigmaParams) -> Result<Element, ActionError> {
        self.check(g)?;
        self.check_sigma(sigma)?;
        let s = sigma.get(g.j);
        Ok(match g.kind {
            UKind::K => Element::scalar(Laurent::v_pow(-s)),
            UKind::Kinv => Element::scalar(Laurent::v_pow(s)),
            UKind::Xplus => {
                let c = -(Laurent::v_pow(-(1 + s)) * Laurent::bracket(s));
                Element::term(Word::letter(Gen::new(Kind::Ahol, g.j, g.j + 1)), c)
            }
            UKind::Xminus => Element::zero(),
        })
    }

    fn check_sigma(&self, sigma: &SigmaParams) -> Result<(), ActionError> {
        if sigma.values().len() + 1 != self.n() {
            return Err(ActionError::SigmaLength {
                got: sigma.values().len(),
                expected: self.n() - 1,
            });
        }
        Ok(())
    }

    fn dot_word(&self, g: UGen, w: &[Gen], sigma: &SigmaParams) -> Result<Element, ActionError> {
        let Some((&x, rest)) = w.split_first() else {
            return self.dot_unit(g, sigma);
        };
        let key = (g, sigma.values().to_vec(), Word(w.to_vec()));
        if let Some(hit) = self.dot_memo.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let out = match g.kind {
            UKind::K | UKind::Kinv => {
                let left = self.xi_letter(g, x)?;
                self.alg.multiply(&left, &self.dot_word(g, rest, sigma)?)?
            }
            UKind::Xplus | UKind::Xminus => {
                let left = self.xi_letter(g, x)?;
                let mut out = self
                    .alg
                    .multiply(&left, &self.dot_word(UGen::kinv(g.j), rest, sigma)?)?;
                let kx = self.xi_letter(UGen::k(g.j), x)?;
                out.add_scaled(&self.alg.multiply(&kx, &self.dot_word(g, rest, sigma)?)?, &Laurent::one());
                out
            }
        };
        self.dot_memo.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// `g . f` for a single generator.
    pub fn dot_gen(&self, g: UGen, f: &Element, sigma: &SigmaParams) -> Result<Element, ActionError> {
        self.check(g)?;
        self.check_sigma(sigma)?;
        let mut out = Element::zero();
        for (w, c) in f.terms() {
            if w.letters().iter().any(|x| x.kind != Kind::Ahol) {
                return Err(ActionError::WrongKind);
            }
            out.add_scaled(&self.dot_word(g, w.letters(), sigma)?, c);
        }
        Ok(out)
    }

    /// `Y . f`; words act right to left.
    pub fn dot(&self, y: &UElement, f: &Element, sigma: &SigmaParams) -> Result<Element, ActionError> {
        let mut out = Element::zero();
        for (w, c) in y.terms() {
            let mut cur = f.clone();
            for &g in w.0.iter().rev() {
                cur = self.dot_gen(g, &cur, sigma)?;
            }
            out.add_scaled(&cur, c);
        }
        Ok(out)
    }
}

/// One defining relation `lhs - rhs`, as an operator that must vanish.
#[derive(Clone, Debug)]
pub struct OperatorRelation {
    pub name: &'static str,
    pub params: String,
    pub op: UElement,
}

pub mod names {
    pub const CARTAN_COMMUTE: &str = "q^H_j q^H_k = q^H_k q^H_j";
    pub const HALF_COMMUTE: &str = "K_j K_k = K_k K_j";
    pub const K_INVERSE: &str = "K_j K_j^-1 = K_j^-1 K_j = 1";
    pub const CARTAN_XPLUS: &str = "q^H_j X+_k = q^(a_jk) X+_k q^H_j";
    pub const CARTAN_XMINUS: &str = "q^H_j X-_k = q^(-a_jk) X-_k q^H_j";
    pub const COMMUTATOR: &str = "(q - 1/q)[X+_j, X-_k] = d_jk (q^H_j - q^-H_j)";
    pub const SERRE_PLUS: &str = "q-Serre for X+";
    pub const SERRE_MINUS: &str = "q-Serre for X-";
    pub const FAR_PLUS: &str = "[X+_j, X+_k] = 0 for |j-k| >= 2";
    pub const FAR_MINUS: &str = "[X-_j, X-_k] = 0 for |j-k| >= 2";
    pub const COMMUTATOR_UNIT: &str = "[X+_j, X-_j] . 1 = -[sigma_j]";
    pub const EXCHANGE_COMPAT: &str = "action annihilates exchange relations";
    pub const LOWEST_WEIGHT: &str = "X-_j . 1 = 0";
    pub const WEIGHT_GRADING: &str = "q^H_j . f = q^(wt_j(f) - sigma_j) f";
    pub const LEIBNIZ: &str = "Leibniz rule for xi on products";
}

fn cartan(j: usize, k: usize) -> i64 {
    match j.abs_diff(k) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

/// All defining relations of the quantized enveloping algebra for rank `n`,
/// with `q^{H_j} = K_j^2`.
pub fn defining_relations(n: usize) -> Vec<OperatorRelation> {
    use names::*;
    let mut out = Vec::new();
    let g = UElement::gen;
    let gamma = Laurent::gamma();
    for j in 1..n {
        out.push(OperatorRelation {
            name: K_INVERSE,
            params: format!("j={j}"),
            op: g(UGen::k(j)).mul(&g(UGen::kinv(j))).sub(&UElement::one()),
        });
        out.push(OperatorRelation {
            name: K_INVERSE,
            params: format!("j={j}, reversed"),
            op: g(UGen::kinv(j)).mul(&g(UGen::k(j))).sub(&UElement::one()),
        });
        for k in 1..n {
            let p = format!("j={j}, k={k}");
            let qh = UElement::q_h(j, 1);
            out.push(OperatorRelation {
                name: CARTAN_COMMUTE,
                params: p.clone(),
                op: UElement::commutator(&qh, &UElement::q_h(k, 1)),
            });
            out.push(OperatorRelation {
                name: HALF_COMMUTE,
                params: p.clone(),
                op: UElement::commutator(&g(UGen::k(j)), &g(UGen::k(k))),
            });
            let a = cartan(j, k);
            for (xk, sign, name) in [(UGen::xp(k), 1, CARTAN_XPLUS), (UGen::xm(k), -1, CARTAN_XMINUS)] {
                let lhs = qh.mul(&g(xk));
                let rhs = g(xk).mul(&qh).scale(&Laurent::q_pow(sign * a));
                out.push(OperatorRelation {
                    name,
                    params: p.clone(),
                    op: lhs.sub(&rhs),
                });
            }
            let comm = UElement::commutator(&g(UGen::xp(j)), &g(UGen::xm(k))).scale(&gamma);
            let rhs = if j == k {
                UElement::q_h(j, 1).sub(&UElement::q_h(j, -1))
            } else {
                UElement::zero()
            };
            out.push(OperatorRelation {
                name: COMMUTATOR,
                params: p.clone(),
                op: comm.sub(&rhs),
            });
            if j.abs_diff(k) == 1 {
                for (mk, name) in [(UGen::xp as fn(usize) -> UGen, SERRE_PLUS), (UGen::xm, SERRE_MINUS)] {
                    let (xj, xk) = (g(mk(j)), g(mk(k)));
                    let xj2 = xj.mul(&xj);
                    let op = xj2
                        .mul(&xk)
                        .sub(&xj.mul(&xk).mul(&xj).scale(&(Laurent::q() + Laurent::q_pow(-1))))
                        .add(&xk.mul(&xj2));
                    out.push(OperatorRelation {
                        name,
                        params: p.clone(),
                        op,
                    });
                }
            }
            if j.abs_diff(k) >= 2 {
                for (mk, name) in [(UGen::xp as fn(usize) -> UGen, FAR_PLUS), (UGen::xm, FAR_MINUS)] {
                    out.push(OperatorRelation {
                        name,
                        params: p.clone(),
                        op: UElement::commutator(&g(mk(j)), &g(mk(k))),
                    });
                }
            }
        }
    }
    out
}

/// Every `sigma` vector of length `n-1` with entries in `-bound..=bound`.
pub fn sigma_grid(n: usize, bound: i64) -> Vec<SigmaParams> {
    let mut out = vec![Vec::new()];
    for _ in 1..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(|s| SigmaParams { sigma: s }).collect()
}

/// Checks the defining relations for `xi` and for `dot` on every ordered
/// monomial up to `degree`, for every `sigma` with `|sigma_j| <= sigma_bound`.
pub fn verify_action(n: usize, degree: usize, sigma_bound: i64) -> Result<Report, ActionError> {
    let act = Action::new(n)?;
    let alg = act.algebra().clone();
    let mut rep = Report::new(format!("Chevalley action, N={n}, degree<={degree}, |sigma|<={sigma_bound}"));
    let monomials = alg.monomials_up_to(degree);
    let relations = defining_relations(n);
    let sigmas = sigma_grid(n, sigma_bound);

    for rel in &relations {
        let mut failure = None;
        for w in &monomials {
            let r = act.xi(&rel.op, &Element::word(w.clone()))?;
            if !r.is_zero() {
                failure = Some(format!("on {w}: {r}"));
                break;
            }
        }
        rep.record(rel.name, format!("xi, N={n}, {}", rel.params), failure);
    }
    for sigma in &sigmas {
        for rel in &relations {
            let mut failure = None;
            for w in &monomials {
                let r = act.dot(&rel.op, &Element::word(w.clone()), sigma)?;
                if !r.is_zero() {
                    failure = Some(format!("on {w}: {r}"));
                    break;
                }
            }
            rep.record(rel.name, format!("dot, N={n}, sigma={:?}, {}", sigma.values(), rel.params), failure);
        }
    }

    // both actions are computed on raw words, so they must kill every
    // instance of the exchange relations, also after right multiplication
    let instances = relation_instances(n, Kind::Ahol);
    let tails = alg.monomials_up_to(1);
    let mut probes = Vec::new();
    for inst in &instances {
        for h in &tails {
            let mut e = Element::zero();
            for (w, c) in inst.relation.terms() {
                e.add_term(w.concat(h), c.clone());
            }
            probes.push((inst.indices, h.clone(), e));
        }
    }
    let gens = UGen::all(n);
    let mut failure = None;
    'xi: for (idx, h, e) in &probes {
        for &g in &gens {
            let r = act.xi_gen(g, e)?;
            if !r.is_zero() {
                failure = Some(format!("xi({g}) on instance {idx:?} times {h}: {r}"));
                break 'xi;
            }
        }
    }
    rep.record(names::EXCHANGE_COMPAT, format!("xi, N={n}"), failure);
    for sigma in &sigmas {
        let mut failure = None;
        'dot: for (idx, h, e) in &probes {
            for &g in &gens {
                let r = act.dot_gen(g, e, sigma)?;
                if !r.is_zero() {
                    failure = Some(format!("{g} on instance {idx:?} times {h}: {r}"));
                    break 'dot;
                }
            }
        }
        rep.record(names::EXCHANGE_COMPAT, format!("dot, N={n}, sigma={:?}", sigma.values()), failure);
    }

    for sigma in &sigmas {
        let ps = format!("N={n}, sigma={:?}", sigma.values());
        for j in 1..n {
            let comm = UElement::commutator(&UElement::gen(UGen::xp(j)), &UElement::gen(UGen::xm(j)));
            let lhs = act.dot(&comm, &Element::one(), sigma)?;
            let expected = Element::scalar(-Laurent::bracket(sigma.get(j)));
            rep.record(
                names::COMMUTATOR_UNIT,
                format!("{ps}, j={j}"),
                (lhs != expected).then(|| format!("{lhs} vs {expected}")),
            );
            let low = act.dot_gen(UGen::xm(j), &Element::one(), sigma)?;
            rep.record(names::LOWEST_WEIGHT, format!("{ps}, j={j}"), (!low.is_zero()).then(|| low.to_string()));
            let mut failure = None;
            for w in &monomials {
                let f = Element::word(w.clone());
                let got = act.dot(&UElement::q_h(j, 1), &f, sigma)?;
                let e = weight_exp(w, j) - sigma.get(j);
                let expected = f.scale(&Laurent::q_pow(e));
                if got != expected {
                    failure = Some(format!("on {w}: {got}"));
                    break;
                }
            }
            rep.record(names::WEIGHT_GRADING, format!("{ps}, j={j}"), failure);
        }
    }

    let small = alg.monomials_up_to(2.min(degree));
    let mut failure = None;
    'leib: for g in &gens {
        for a in &small {
            for b in &small {
                let (fa, fb) = (Element::word(a.clone()), Element::word(b.clone()));
                let prod = alg.multiply(&fa, &fb)?;
                let lhs = act.xi_gen(*g, &prod)?;
                let rhs = match g.kind {
                    UKind::K | UKind::Kinv => alg.multiply(&act.xi_gen(*g, &fa)?, &act.xi_gen(*g, &fb)?)?,
                    _ => {
                        let t1 = alg.multiply(&act.xi_gen(*g, &fa)?, &act.xi_gen(UGen::kinv(g.j), &fb)?)?;
                        let t2 = alg.multiply(&act.xi_gen(UGen::k(g.j), &fa)?, &act.xi_gen(*g, &fb)?)?;
                        &t1 + &t2
                    }
                };
                if lhs != rhs {
                    failure = Some(format!("{g} on {a} * {b}"));
                    break 'leib;
                }
            }
        }
    }
    rep.record(names::LEIBNIZ, format!("N={n}"), failure);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zs(s: usize, t: usize) -> Element {
        Element::generator(Gen::new(Kind::Ahol, s, t))
    }

    fn sig(n: usize, v: &[i64]) -> SigmaParams {
        SigmaParams::new(n, v.to_vec()).unwrap()
    }

    #[test]
    fn xi_examples() {
        let a = Action::new(2).unwrap();
        assert_eq!(
            a.xi_gen(UGen::xm(1), &zs(1, 2)).unwrap(),
            Element::scalar(-Laurent::v_pow(1))
        );
        // s=1, t=2, j=1: q^{-1+1/2} zs12 zs12
        let sq = a.algebra().multiply(&zs(1, 2), &zs(1, 2)).unwrap();
        assert_eq!(a.xi_gen(UGen::xp(1), &zs(1, 2)).unwrap(), sq.scale(&Laurent::v_pow(-1)));
        assert_eq!(a.xi(&UElement::q_h(1, 1), &zs(1, 2)).unwrap(), zs(1, 2).scale(&Laurent::q_pow(2)));
        assert_eq!(a.xi_gen(UGen::xp(1), &Element::one()).unwrap(), Element::zero());
        assert_eq!(a.xi_gen(UGen::k(1), &Element::one()).unwrap(), Element::one());
    }

    #[test]
    fn dot_unit_examples() {
        let a = Action::new(2).unwrap();
        assert!(a.dot_unit(UGen::xm(1), &sig(2, &[3])).unwrap().is_zero());
        assert_eq!(
            a.dot(&UElement::q_h(1, 1), &Element::one(), &sig(2, &[2])).unwrap(),
            Element::scalar(Laurent::q_pow(-2))
        );
        assert_eq!(
            a.dot_unit(UGen::xp(1), &sig(2, &[1])).unwrap(),
            zs(1, 2).scale(&-Laurent::q_pow(-1))
        );
    }

    /// Hand expansion of the module rule on a single generator, N = 2.
    fn oracle_xm_on_zs12(sigma: i64) -> Element {
        // (xi(X-) zs)(K^-1 . 1) + (xi(K) zs)(X- . 1) = (-v)(v^sigma) + 0
        Element::scalar(-Laurent::v_pow(1 + sigma))
    }

    #[test]
    fn dot_examples() {
        let a = Action::new(2).unwrap();
        for s in -2..=4 {
            assert_eq!(a.dot_gen(UGen::xm(1), &zs(1, 2), &sig(2, &[s])).unwrap(), oracle_xm_on_zs12(s));
        }
        assert!(a.dot_gen(UGen::xp(1), &zs(1, 2), &sig(2, &[1])).unwrap().is_zero());
        let alg = a.algebra().clone();
        for k in 0..4 {
            let f = alg.power(&zs(1, 2), k).unwrap();
            for s in 0..3 {
                let got = a.dot(&UElement::q_h(1, 1), &f, &sig(2, &[s])).unwrap();
                assert_eq!(got, f.scale(&Laurent::q_pow(2 * k as i64 - s)));
            }
        }
    }

    #[test]
    fn commutator_on_unit() {
        let a = Action::new(3).unwrap();
        for s in 0..=4 {
            let p = sig(3, &[s, 1]);
            let comm = UElement::commutator(&UElement::gen(UGen::xp(1)), &UElement::gen(UGen::xm(1)));
            assert_eq!(a.dot(&comm, &Element::one(), &p).unwrap(), Element::scalar(-Laurent::bracket(s)));
        }
    }

    #[test]
    fn operator_words_compose() {
        let a = Action::new(3).unwrap();
        let alg = a.algebra().clone();
        let gens = UGen::all(3);
        let f = alg.multiply(&zs(1, 2), &zs(2, 3)).unwrap();
        for &u in &gens {
            for &w in &gens {
                let seq = a.xi_gen(u, &a.xi_gen(w, &f).unwrap()).unwrap();
                assert_eq!(a.xi(&UElement::word(&[u, w]), &f).unwrap(), seq);
            }
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::test_runner::Config { cases: 64, failure_persistence: None, ..Default::default() })]
        #[test]
        fn xi_is_a_representation(
            u in proptest::collection::vec(0usize..8, 0..=3),
            w in proptest::collection::vec(0usize..8, 0..=3),
            f in 0usize..10,
        ) {
            let a = Action::new(3).unwrap();
            let gens = UGen::all(3);
            let (u, w): (Vec<UGen>, Vec<UGen>) = (u.iter().map(|&i| gens[i]).collect(), w.iter().map(|&i| gens[i]).collect());
            let f = Element::word(a.algebra().monomials_up_to(2)[f].clone());
            let inner = a.xi(&UElement::word(&w), &f).unwrap();
            let seq = a.xi(&UElement::word(&u), &inner).unwrap();
            let uw: Vec<UGen> = u.iter().chain(&w).copied().collect();
            proptest::prop_assert_eq!(a.xi(&UElement::word(&uw), &f).unwrap(), seq);
        }
    }

    #[test]
    fn generator_names_round_trip() {
        for g in UGen::all(4) {
            assert_eq!(g.name().parse::<UGen>().unwrap(), g);
        }
        assert!("Y1".parse::<UGen>().is_err());
        assert!("K0".parse::<UGen>().is_err());
        let a = Action::new(2).unwrap();
        assert!(matches!(a.xi_gen(UGen::xp(2), &Element::one()), Err(ActionError::BadIndex { .. })));
        assert!(SigmaParams::new(3, vec![1]).is_err());
    }

    #[test]
    fn verify_n2_quick() {
        let rep = verify_action(2, 3, 2).unwrap();
        assert!(rep.all_passed(), "{}", rep.to_text());
    }
}
