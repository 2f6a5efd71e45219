//! Finite-dimensional modules `U . 1` cut out of the antiholomorphic flag
//! algebra, with explicit generator matrices.
//!
//! Each weight space of the closure is kept as a lattice over the Laurent
//! ring `Q[v, 1/v]` in Hermite normal form. A lattice that is stable under
//! all generators has Laurent coordinates for every image, so the generator
//! matrices never leave the Laurent ring even though membership questions
//! are really about the fraction field.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::action::{defining_relations, Action, ActionError, SigmaParams, UElement, UGen};
use crate::matrix::{MatrixError, SMat};
use crate::ncalg::{word_weight, AlgebraError, Element, Word};
use crate::report::Report;
use crate::scalar::Laurent;

#[derive(Debug, Error)]
pub enum IrrepError {
    #[error("sigma must consist of non-negative integers for a finite-dimensional module, got {0:?}")]
    NegativeSigma(Vec<i64>),
    #[error("closure produced more than {cap} independent vectors")]
    ClosureExceedsCap { cap: usize },
    #[error("matrix of {gen} is not diagonal with v-power entries in the extracted basis")]
    NonDiagonalWeight { gen: String },
    #[error("vector is not weight-homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("image {0} has no Laurent coordinates in the lattice basis")]
    NotInLattice(String),
    #[error("weyl dimension does not fit in usize")]
    Overflow,
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// `(g, x, y)` with `g = x a + y b` a gcd of `a` and `b`.
pub fn ext_gcd(a: &Laurent, b: &Laurent) -> (Laurent, Laurent, Laurent) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut x0, mut x1) = (Laurent::one(), Laurent::zero());
    let (mut y0, mut y1) = (Laurent::zero(), Laurent::one());
    while !r1.is_zero() {
        let (quo, rem) = r0.div_rem(&r1);
        let x2 = &x0 - &(&quo * &x1);
        let y2 = &y0 - &(&quo * &y1);
        r0 = std::mem::replace(&mut r1, rem);
        x0 = std::mem::replace(&mut x1, x2);
        y0 = std::mem::replace(&mut y1, y2);
    }
    (r0, x0, y0)
}

type Row<K> = BTreeMap<K, Laurent>;

fn row_axpy<K: Ord + Clone>(acc: &mut Row<K>, c: &Laurent, row: &Row<K>) {
    for (k, x) in row {
        let slot = acc.entry(k.clone()).or_default();
        *slot += &(c * x);
        if slot.is_zero() {
            acc.remove(k);
        }
    }
}

fn row_comb<K: Ord + Clone>(a: &Laurent, ra: &Row<K>, b: &Laurent, rb: &Row<K>) -> Row<K> {
    let mut out = Row::new();
    row_axpy(&mut out, a, ra);
    row_axpy(&mut out, b, rb);
    out
}

/// Outcome of inserting a vector into a lattice.
#[derive(Clone, Debug)]
pub struct Insertion<K> {
    /// The field rank went up by one.
    pub rank_up: bool,
    /// Pivots of rows that were created or replaced.
    pub changed: Vec<K>,
}

/// A free submodule of `Q[v, 1/v]^K` in echelon form: every row has a
/// distinct pivot (its largest key) whose coefficient is associate-normalized.
#[derive(Clone, Debug)]
pub struct Lattice<K: Ord + Clone> {
    rows: BTreeMap<K, Row<K>>,
}

impl<K: Ord + Clone> Default for Lattice<K> {
    fn default() -> Self {
        Lattice { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Lattice<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows by increasing pivot.
    pub fn rows(&self) -> impl Iterator<Item = (&K, &Row<K>)> {
        self.rows.iter()
    }

    fn normalized(mut row: Row<K>) -> Row<K> {
        let (_, lead) = row.iter().next_back().expect("nonzero row");
        let (_, unit) = lead.normalize_associate();
        let inv = unit.unit_inverse().expect("associate factor is a unit");
        for x in row.values_mut() {
            *x = &*x * &inv;
        }
        row
    }

    /// Adds `v` to the lattice, keeping the echelon form.
    pub fn insert(&mut self, mut v: Row<K>) -> Insertion<K> {
        let mut out = Insertion { rank_up: false, changed: Vec::new() };
        while let Some((piv, b)) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
            let Some(r) = self.rows.get(&piv) else {
                let row = Self::normalized(v);
                self.rows.insert(piv.clone(), row);
                out.rank_up = true;
                out.changed.push(piv);
                return out;
            };
            let a = r[&piv].clone();
            if let Some(quo) = b.div_exact(&a) {
                let r = r.clone();
                row_axpy(&mut v, &-quo, &r);
                continue;
            }
            // unimodular step: (r, v) -> (x r + y v, (b/g) r - (a/g) v)
            let (g, x, y) = ext_gcd(&a, &b);
            let r = r.clone();
            let ag = a.div_exact(&g).expect("gcd divides");
            let bg = b.div_exact(&g).expect("gcd divides");
            let new_r = Self::normalized(row_comb(&x, &r, &y, &v));
            v = row_comb(&bg, &r, &-ag, &v);
            self.rows.insert(piv.clone(), new_r);
            out.changed.push(piv);
        }
        out
    }

    /// Laurent coordinates of `v` in the rows, keyed by pivot, when they exist.
    pub fn coordinates(&self, v: &Row<K>) -> Option<BTreeMap<K, Laurent>> {
        let mut v = v.clone();
        let mut out = BTreeMap::new();
        while let Some((piv, b)) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
            let r = self.rows.get(&piv)?;
            let c = b.div_exact(&r[&piv])?;
            row_axpy(&mut v, &-c.clone(), r);
            out.insert(piv, c);
        }
        Some(out)
    }
}

fn element_row(e: &Element) -> Row<Word> {
    e.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
}

fn row_element(r: &Row<Word>) -> Element {
    let mut e = Element::zero();
    for (w, c) in r {
        e.add_term(w.clone(), c.clone());
    }
    e
}

/// Classical dimension of the irreducible su(N) module with Dynkin labels
/// `sigma`: the product over `i < j` of `(sum_{i<=k<j} (sigma_k + 1)) / (j - i)`.
pub fn weyl_dimension(n: usize, sigma: &[u64]) -> Result<usize, IrrepError> {
    assert_eq!(sigma.len() + 1, n, "sigma needs N-1 entries");
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        for j in i + 1..n {
            let s: u64 = sigma[i..j].iter().map(|x| x + 1).sum();
            num *= BigUint::from(s);
            den *= BigUint::from((j - i) as u64);
        }
    }
    let (d, r) = (&num / &den, &num % &den);
    debug_assert!(r == BigUint::from(0u8), "product formula is integral");
    d.to_usize().ok_or(IrrepError::Overflow)
}

fn sigma_u64(sigma: &SigmaParams) -> Result<Vec<u64>, IrrepError> {
    if !sigma.is_nonnegative() {
        return Err(IrrepError::NegativeSigma(sigma.values().to_vec()));
    }
    Ok(sigma.values().iter().map(|&s| s as u64).collect())
}

/// An extracted module: basis vectors, generator matrices acting on column
/// vectors, and the `q^{H_j}` eigenvalue exponents of each basis vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    pub n: usize,
    pub sigma: Vec<i64>,
    pub basis: Vec<Element>,
    pub matrices: BTreeMap<UGen, SMat>,
    pub weights: Vec<Vec<i64>>,
}

impl Representation {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix(&self, g: UGen) -> &SMat {
        &self.matrices[&g]
    }

    /// The operator `Y` as a matrix; words multiply left to right.
    pub fn evaluate(&self, y: &UElement) -> Result<SMat, MatrixError> {
        let d = self.dimension();
        let mut out = SMat::zeros(d, d);
        for (w, c) in y.terms() {
            let mut m = SMat::identity(d);
            for g in &w.0 {
                m = m.mul(self.matrix(*g))?;
            }
            out = out.add(&m.scale(c))?;
        }
        Ok(out)
    }

    /// Multiplicity of each weight.
    pub fn weight_multiplicities(&self) -> BTreeMap<Vec<i64>, usize> {
        let mut out = BTreeMap::new();
        for w in &self.weights {
            *out.entry(w.clone()).or_insert(0) += 1;
        }
        out
    }
}

/// Closes `{1}` under all generators for the module with parameters `sigma`.
/// `cap` defaults to the Weyl dimension plus two.
pub fn build_irrep(n: usize, sigma: &SigmaParams, cap: Option<usize>) -> Result<Representation, IrrepError> {
    let action = Action::new(n)?;
    build_irrep_with(&action, sigma, cap)
}

pub fn build_irrep_with(action: &Action, sigma: &SigmaParams, cap: Option<usize>) -> Result<Representation, IrrepError> {
    let n = action.n();
    let labels = sigma_u64(sigma)?;
    let cap = match cap {
        Some(c) => c,
        None => weyl_dimension(n, &labels)? + 2,
    };
    let gens = UGen::all(n);
    let weight_of = |e: &Element| -> Result<Vec<i64>, IrrepError> {
        let mut it = e.terms().map(|(w, _)| word_weight(w, n));
        let first = it.next().expect("nonzero vector");
        if it.any(|w| w != first) {
            return Err(IrrepError::Inhomogeneous(e.to_string()));
        }
        Ok(first)
    };

    let mut spaces: BTreeMap<Vec<i64>, Lattice<Word>> = BTreeMap::new();
    let mut queue: VecDeque<(Vec<i64>, Word)> = VecDeque::new();
    let mut total = 0usize;
    let mut insert = |e: Element,
                      spaces: &mut BTreeMap<Vec<i64>, Lattice<Word>>,
                      queue: &mut VecDeque<(Vec<i64>, Word)>|
     -> Result<(), IrrepError> {
        let wt = weight_of(&e)?;
        let ins = spaces.entry(wt.clone()).or_default().insert(element_row(&e));
        if ins.rank_up {
            total += 1;
            if total > cap {
                return Err(IrrepError::ClosureExceedsCap { cap });
            }
        }
        for piv in ins.changed {
            queue.push_back((wt.clone(), piv));
        }
        Ok(())
    };
    insert(Element::one(), &mut spaces, &mut queue)?;
    while let Some((wt, piv)) = queue.pop_front() {
        // a replaced row is requeued under the same pivot, so reading the
        // current row here at worst repeats work
        let Some(row) = spaces[&wt].rows.get(&piv) else { continue };
        let b = row_element(row);
        for &g in &gens {
            let img = action.dot_gen(g, &b, sigma)?;
            if !img.is_zero() {
                insert(img, &mut spaces, &mut queue)?;
            }
        }
    }

    // unit first: order weight spaces by height, the total root content
    // shared by all monomials of one weight
    let mut order: Vec<&Vec<i64>> = spaces.keys().collect();
    order.sort_by_key(|w| (spaces[*w].rows().next().map_or(0, |(p, _)| p.height()), (*w).clone()));
    let mut basis = Vec::new();
    let mut index: BTreeMap<(Vec<i64>, Word), usize> = BTreeMap::new();
    for wt in order {
        for (piv, row) in spaces[wt].rows() {
            index.insert((wt.clone(), piv.clone()), basis.len());
            basis.push(row_element(row));
        }
    }
    let d = basis.len();
    let mut matrices = BTreeMap::new();
    for &g in &gens {
        let mut m = SMat::zeros(d, d);
        for (i, b) in basis.iter().enumerate() {
            let img = action.dot_gen(g, b, sigma)?;
            if img.is_zero() {
                continue;
            }
            let wt = weight_of(&img)?;
            let coords = spaces
                .get(&wt)
                .and_then(|l| l.coordinates(&element_row(&img)))
                .ok_or_else(|| IrrepError::NotInLattice(img.to_string()))?;
            for (piv, c) in coords {
                m.set(index[&(wt.clone(), piv)], i, c);
            }
        }
        matrices.insert(g, m);
    }
    let weights = read_weights(n, d, &matrices)?;
    Ok(Representation {
        n,
        sigma: sigma.values().to_vec(),
        basis,
        matrices,
        weights,
    })
}

/// Exponents `w_j` with `K_j = diag(v^{w_j})`; errors unless every `K_j` is
/// diagonal with entries that are pure powers of `v`.
fn read_weights(n: usize, d: usize, matrices: &BTreeMap<UGen, SMat>) -> Result<Vec<Vec<i64>>, IrrepError> {
    let mut weights = vec![Vec::with_capacity(n - 1); d];
    for j in 1..n {
        let k = &matrices[&UGen::k(j)];
        let bad = || IrrepError::NonDiagonalWeight { gen: UGen::k(j).name() };
        for r in 0..d {
            for c in 0..d {
                if r != c && !k.get(r, c).is_zero() {
                    return Err(bad());
                }
            }
            let e = k.get(r, r).as_v_power().ok_or_else(bad)?;
            weights[r].push(e);
        }
    }
    Ok(weights)
}

pub mod names {
    pub const RELATIONS: &str = "matrices satisfy the defining relations";
    pub const LOWEST_ANNIHILATED: &str = "X-_j e0 = 0";
    pub const LOWEST_WEIGHT: &str = "K_j e0 = v^-sigma_j e0";
    pub const DIMENSION: &str = "dimension equals Weyl dimension";
    pub const WEIGHT_SYMMETRY: &str = "weight multiplicities symmetric under w -> -reverse(w)";
    pub const K_DIAGONAL: &str = "K_j diagonal with v-power entries";
    pub const CYCLIC: &str = "e0 generates the module";
    pub const NO_WEIGHT_SUBMODULE: &str = "no proper invariant sum of weight spaces";
    pub const UNIT_FIRST: &str = "basis[0] = 1";
}

/// Field rank of the closure of `start` under `gens`, by Krylov iteration.
fn closure_rank(start: &[usize], d: usize, gens: &[&SMat]) -> usize {
    let unit = |i: usize| -> Row<usize> { [(i, Laurent::one())].into_iter().collect() };
    let mut lat = Lattice::new();
    let mut queue: VecDeque<Row<usize>> = VecDeque::new();
    for &i in start {
        if lat.insert(unit(i)).rank_up {
            queue.push_back(unit(i));
        }
    }
    while let Some(v) = queue.pop_front() {
        for m in gens {
            let mut img = Row::new();
            for r in 0..d {
                let mut acc = Laurent::zero();
                for (c, x) in &v {
                    acc += &(m.get(r, *c) * x);
                }
                if !acc.is_zero() {
                    img.insert(r, acc);
                }
            }
            if !img.is_empty() && lat.insert(img.clone()).rank_up {
                queue.push_back(img);
            }
        }
    }
    lat.rank()
}

/// Exact checks on an extracted module.
pub fn verify_representation(rep: &Representation) -> Result<Report, IrrepError> {
    let n = rep.n;
    let d = rep.dimension();
    let ps = format!("N={n}, sigma={:?}", rep.sigma);
    let mut out = Report::new(format!("Representation {ps}, dim {d}"));
    let labels = sigma_u64(&SigmaParams::new(n, rep.sigma.clone())?)?;

    out.record(
        names::UNIT_FIRST,
        ps.clone(),
        (rep.basis.first() != Some(&Element::one())).then(|| format!("{:?}", rep.basis.first())),
    );
    for rel in defining_relations(n) {
        let m = rep.evaluate(&rel.op)?;
        let witness = (0..d)
            .flat_map(|r| (0..d).map(move |c| (r, c)))
            .find(|&(r, c)| !m.get(r, c).is_zero())
            .map(|(r, c)| format!("entry ({r},{c}) = {}", m.get(r, c)));
        out.record(names::RELATIONS, format!("{ps}, {}: {}", rel.name, rel.params), witness);
    }
    for j in 1..n {
        let xm = rep.matrix(UGen::xm(j));
        let col: Vec<String> = (0..d).filter(|&r| !xm.get(r, 0).is_zero()).map(|r| r.to_string()).collect();
        out.record(
            names::LOWEST_ANNIHILATED,
            format!("{ps}, j={j}"),
            (!col.is_empty()).then(|| format!("nonzero rows {col:?}")),
        );
        let k = rep.matrix(UGen::k(j));
        let expected = Laurent::v_pow(-rep.sigma[j - 1]);
        let ok = k.get(0, 0) == &expected && (1..d).all(|r| k.get(r, 0).is_zero());
        out.record(names::LOWEST_WEIGHT, format!("{ps}, j={j}"), (!ok).then(|| k.get(0, 0).to_string()));
        let diag = read_weights(n, d, &rep.matrices).is_ok();
        out.record(names::K_DIAGONAL, format!("{ps}, j={j}"), (!diag).then(|| "off-diagonal or non-monomial entry".into()));
    }
    let weyl = weyl_dimension(n, &labels)?;
    out.record(names::DIMENSION, ps.clone(), (weyl != d).then(|| format!("{d} vs {weyl}")));

    let mult = rep.weight_multiplicities();
    let asym = mult.iter().find(|(w, m)| {
        let mirror: Vec<i64> = w.iter().rev().map(|x| -x).collect();
        mult.get(&mirror) != Some(m)
    });
    out.record(names::WEIGHT_SYMMETRY, ps.clone(), asym.map(|(w, m)| format!("{w:?} x{m}")));

    let gens: Vec<&SMat> = rep.matrices.values().collect();
    let rank = closure_rank(&[0], d, &gens);
    out.record(names::CYCLIC, ps.clone(), (rank != d).then(|| format!("rank {rank} of {d}")));

    // a sum of weight spaces is invariant iff no generator maps a vector
    // inside it to a vector with a component outside it
    let distinct: Vec<&Vec<i64>> = mult.keys().collect();
    if distinct.len() <= 16 {
        let mut witness = None;
        for mask in 1u32..(1u32 << distinct.len()) - 1 {
            let chosen: BTreeSet<&Vec<i64>> = distinct
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, w)| *w)
                .collect();
            let inside = |i: usize| chosen.contains(&rep.weights[i]);
            let invariant = gens.iter().all(|m| {
                (0..d).filter(|&c| inside(c)).all(|c| (0..d).all(|r| inside(r) || m.get(r, c).is_zero()))
            });
            if invariant {
                witness = Some(format!("weights {chosen:?}"));
                break;
            }
        }
        out.record(names::NO_WEIGHT_SUBMODULE, ps.clone(), witness);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{Gen, Kind};

    fn sig(n: usize, v: &[i64]) -> SigmaParams {
        SigmaParams::new(n, v.to_vec()).unwrap()
    }

    #[test]
    fn weyl_oracles() {
        assert_eq!(weyl_dimension(2, &[4]).unwrap(), 5);
        assert_eq!(weyl_dimension(3, &[1, 1]).unwrap(), 8);
        assert_eq!(weyl_dimension(3, &[2, 1]).unwrap(), 15);
        assert_eq!(weyl_dimension(4, &[0, 1, 0]).unwrap(), 6);
        assert_eq!(weyl_dimension(4, &[0, 0, 0]).unwrap(), 1);
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = &Laurent::bracket(2) * &Laurent::bracket(3);
        let b = &Laurent::bracket(2) * &Laurent::bracket(2);
        let (g, x, y) = ext_gcd(&a, &b);
        assert_eq!(&(&x * &a) + &(&y * &b), g);
        assert!(a.div_exact(&g).is_some() && b.div_exact(&g).is_some());
        assert!(g.div_exact(&Laurent::bracket(2)).is_some());
    }

    #[test]
    fn lattice_refines_without_rank_change() {
        let mut l: Lattice<usize> = Lattice::new();
        let row = |c: Laurent| -> Row<usize> { [(0, c)].into_iter().collect() };
        assert!(l.insert(row(Laurent::bracket(2))).rank_up);
        let ins = l.insert(row(Laurent::bracket(3)));
        assert!(!ins.rank_up && !ins.changed.is_empty());
        // [2] and [3] are coprime, so the lattice is now everything
        assert!(l.coordinates(&row(Laurent::one())).is_some());
    }

    #[test]
    fn su2_fundamental_matches_hand_values() {
        let rep = build_irrep(2, &sig(2, &[1]), None).unwrap();
        assert_eq!(rep.dimension(), 2);
        assert_eq!(rep.basis[0], Element::one());
        assert_eq!(rep.basis[1], Element::generator(Gen::new(Kind::Ahol, 1, 2)));
        let xp = rep.matrix(UGen::xp(1));
        assert_eq!(xp.get(1, 0), &-Laurent::q_pow(-1));
        assert!(xp.get(0, 0).is_zero() && xp.get(0, 1).is_zero() && xp.get(1, 1).is_zero());
        let xm = rep.matrix(UGen::xm(1));
        assert_eq!(xm.get(0, 1), &-Laurent::q());
        assert!(xm.get(1, 0).is_zero());
        let k = rep.matrix(UGen::k(1));
        assert_eq!(k.get(0, 0), &Laurent::v_pow(-1));
        assert_eq!(k.get(1, 1), &Laurent::v_pow(1));
        assert_eq!(rep.weights, vec![vec![-1], vec![1]]);
    }

    #[test]
    fn small_family_verifies() {
        for (n, s) in [(2, vec![0]), (2, vec![3]), (3, vec![1, 0]), (3, vec![0, 1]), (4, vec![0, 1, 0])] {
            let rep = build_irrep(n, &sig(n, &s), None).unwrap();
            let r = verify_representation(&rep).unwrap();
            assert!(r.all_passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn negative_sigma_rejected() {
        assert!(matches!(
            build_irrep(2, &sig(2, &[-1]), None),
            Err(IrrepError::NegativeSigma(_))
        ));
    }

    #[test]
    fn tight_cap_is_enforced() {
        assert!(matches!(
            build_irrep(3, &sig(3, &[1, 1]), Some(5)),
            Err(IrrepError::ClosureExceedsCap { cap: 5 })
        ));
    }
}
