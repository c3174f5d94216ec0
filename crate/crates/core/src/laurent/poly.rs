use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::coeff::Coeff;
use crate::error::{Error, Result};
use crate::qring::{QFrac, QLaurent};

/// Exponent vector, one slot per variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExpVec(pub SmallVec<[i32; 8]>);

impl ExpVec {
    pub fn zeros(arity: usize) -> Self {
        ExpVec(SmallVec::from_elem(0, arity))
    }

    pub fn from_slice(e: &[i32]) -> Self {
        ExpVec(SmallVec::from_slice(e))
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().map(|&x| x as i64).sum()
    }

    pub fn checked_add(&self, o: &ExpVec) -> Result<ExpVec> {
        let mut v = self.clone();
        for (a, b) in v.0.iter_mut().zip(o.0.iter()) {
            *a = a.checked_add(*b).ok_or(Error::Overflow)?;
        }
        Ok(v)
    }
}

impl std::ops::Index<usize> for ExpVec {
    type Output = i32;
    fn index(&self, i: usize) -> &i32 {
        &self.0[i]
    }
}

impl std::ops::IndexMut<usize> for ExpVec {
    fn index_mut(&mut self, i: usize) -> &mut i32 {
        &mut self.0[i]
    }
}

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

pub(crate) type TermMap<C> = FxHashMap<ExpVec, C>;

/// Sparse Laurent polynomial in `arity` variables `x_base, ..., x_{base+arity-1}`.
///
/// Products with `x_0 = 1` use `base = 1`; the Gessel–Xin code keeps `x_0`
/// and uses `base = 0`.
#[derive(Clone)]
pub struct MLaurent<C: Coeff = QFrac> {
    pub(crate) base: usize,
    pub(crate) arity: usize,
    pub(crate) terms: TermMap<C>,
}

impl<C: Coeff> PartialEq for MLaurent<C> {
    fn eq(&self, o: &Self) -> bool {
        self.base == o.base && self.arity == o.arity && self.terms == o.terms
    }
}

impl<C: Coeff> MLaurent<C> {
    pub fn zero(arity: usize) -> Self {
        Self::zero_based(1, arity)
    }

    pub fn zero_based(base: usize, arity: usize) -> Self {
        Self { base, arity, terms: TermMap::default() }
    }

    pub fn constant(arity: usize, c: C) -> Self {
        Self::constant_based(1, arity, c)
    }

    pub fn constant_based(base: usize, arity: usize, c: C) -> Self {
        let mut r = Self::zero_based(base, arity);
        r.add_term(ExpVec::zeros(arity), c);
        r
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, C::one())
    }

    /// `c x^e`, with `e` indexed by slot.
    pub fn monomial(arity: usize, e: &[i32], c: C) -> Result<Self> {
        Self::monomial_based(1, arity, e, c)
    }

    pub fn monomial_based(base: usize, arity: usize, e: &[i32], c: C) -> Result<Self> {
        if e.len() != arity {
            return Err(Error::ArityMismatch(e.len(), arity));
        }
        let mut r = Self::zero_based(base, arity);
        r.add_term(ExpVec::from_slice(e), c);
        Ok(r)
    }

    /// The variable `x_idx`.
    pub fn var(base: usize, arity: usize, idx: usize) -> Result<Self> {
        let s = Self::slot_of(base, arity, idx)?;
        let mut e = vec![0; arity];
        e[s] = 1;
        Self::monomial_based(base, arity, &e, C::one())
    }

    fn slot_of(base: usize, arity: usize, idx: usize) -> Result<usize> {
        if idx < base || idx >= base + arity {
            return Err(Error::IndexOutOfRange(format!("variable x{idx}")));
        }
        Ok(idx - base)
    }

    pub fn slot(&self, idx: usize) -> Result<usize> {
        Self::slot_of(self.base, self.arity, idx)
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &C)> {
        self.terms.iter()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms_sorted(&self) -> Vec<(&ExpVec, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn add_term(&mut self, e: ExpVec, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_ref(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.arity != o.arity || self.base != o.base {
            return Err(Error::ArityMismatch(self.arity, o.arity));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.neg_ref());
        }
        Ok(r)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut r = Self::zero_based(self.base, self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(e1.checked_add(e2)?, c1.mul_ref(c2));
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero_based(self.base, self.arity);
        }
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x.mul_ref(c))).collect();
        Self { base: self.base, arity: self.arity, terms }
    }

    /// Multiply by `q^k x^e`.
    pub fn mul_monomial(&self, e: &ExpVec, k: i64) -> Result<Self> {
        let mut terms = TermMap::default();
        for (f, c) in &self.terms {
            terms.insert(f.checked_add(e)?, c.mul_q_pow(k));
        }
        Ok(Self { base: self.base, arity: self.arity, terms })
    }

    /// Multiply by `(1 - q^m x^delta)`.
    pub fn mul_linear(&self, m: i64, delta: &ExpVec) -> Result<Self> {
        let mut r = self.clone();
        for (e, c) in &self.terms {
            let e2 = e.checked_add(delta)?;
            let mut t = C::zero();
            t.sub_q_shifted(c, m);
            r.add_term(e2, t);
        }
        Ok(r)
    }

    /// Exact quotient by `(1 - c x^delta)`, or `None` when it does not divide.
    pub fn div_linear(&self, c: &C, delta: &ExpVec) -> Result<Option<Self>> {
        let Some(a) = delta.0.iter().position(|&d| d != 0) else {
            return Err(Error::Precondition("div_linear needs a nonconstant binomial".into()));
        };
        let sa = delta[a] as i64;
        // group terms into chains e - t*delta, with t the position along delta
        let mut chains: FxHashMap<ExpVec, Vec<(i64, &C)>> = FxHashMap::default();
        for (e, x) in &self.terms {
            let t = e[a] as i64 * sa;
            let mut key = e.clone();
            for (s, &d) in delta.0.iter().enumerate() {
                key[s] = (key[s] as i64 - t * d as i64) as i32;
            }
            chains.entry(key).or_default().push((t, x));
        }
        let mut out = Self::zero_based(self.base, self.arity);
        for (key, mut chain) in chains {
            chain.sort_by_key(|&(t, _)| t);
            let (lo, hi) = (chain[0].0, chain[chain.len() - 1].0);
            let mut prev = C::zero();
            let mut idx = 0;
            for t in lo..hi {
                let mut cur = c.mul_ref(&prev);
                if chain[idx].0 == t {
                    cur.add_ref(chain[idx].1);
                    idx += 1;
                }
                if !cur.is_zero() {
                    let mut e = key.clone();
                    for (s, &d) in delta.0.iter().enumerate() {
                        e[s] = (e[s] as i64 + t * d as i64) as i32;
                    }
                    out.add_term(e, cur.clone());
                }
                prev = cur;
            }
            // the top term must be exactly -c times the last quotient term
            let mut top = c.mul_ref(&prev);
            top.add_ref(chain[chain.len() - 1].1);
            if !top.is_zero() {
                return Ok(None);
            }
        }
        Ok(Some(out))
    }

    /// `(q^m x_i / x_j)_z` expanded; `j = None` means the ratio is `x_i` alone.
    pub fn poch_factor(base: usize, arity: usize, i: usize, j: Option<usize>, m: i64, z: usize) -> Result<Self> {
        if Some(i) == j {
            return Err(Error::Precondition(format!("poch_factor needs i != j, got {i}")));
        }
        let mut delta = ExpVec::zeros(arity);
        delta[Self::slot_of(base, arity, i)?] += 1;
        if let Some(j) = j {
            delta[Self::slot_of(base, arity, j)?] -= 1;
        }
        let mut r = Self::constant_based(base, arity, C::one());
        for t in 0..z as i64 {
            r = r.mul_linear(m + t, &delta)?;
        }
        Ok(r)
    }

    /// Constant term in the listed variables.
    pub fn ct(&self, vars: &[usize]) -> Result<Self> {
        let slots = vars.iter().map(|&v| self.slot(v)).collect::<Result<Vec<_>>>()?;
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| slots.iter().all(|&s| e[s] == 0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Ok(Self { base: self.base, arity: self.arity, terms })
    }

    /// Constant term in every variable.
    pub fn ct_all(&self) -> C {
        self.terms.get(&ExpVec::zeros(self.arity)).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeff_at(&self, e: &ExpVec) -> Result<C> {
        if e.arity() != self.arity {
            return Err(Error::ArityMismatch(e.arity(), self.arity));
        }
        Ok(self.terms.get(e).cloned().unwrap_or_else(C::zero))
    }

    /// `E_{u,k}`: `x_{u_i} -> x_{u_s} q^{k_s - k_i}` for `i < s`, and
    /// `x_0 -> x_{u_s} q^{k_s}` when `x_0` is a variable of this polynomial.
    pub fn subst_shift(&self, u: &[usize], k: &[i64]) -> Result<Self> {
        if u.is_empty() || u.len() != k.len() {
            return Err(Error::Precondition("subst_shift needs |u| = |k| >= 1".into()));
        }
        if u.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition("subst_shift needs ascending u".into()));
        }
        let s = u.len();
        let top = self.slot(u[s - 1])?;
        let ks = k[s - 1];
        let mut moves: Vec<(usize, i64)> = Vec::with_capacity(s);
        for i in 0..s - 1 {
            moves.push((self.slot(u[i])?, ks - k[i]));
        }
        if self.base == 0 {
            moves.push((0, ks));
        }
        let mut r = Self::zero_based(self.base, self.arity);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let mut qpow = 0i64;
            for &(sl, sh) in &moves {
                let x = e2[sl];
                if x != 0 {
                    e2[sl] = 0;
                    e2[top] = e2[top].checked_add(x).ok_or(Error::Overflow)?;
                    qpow += x as i64 * sh;
                }
            }
            r.add_term(e2, c.mul_q_pow(qpow));
        }
        Ok(r)
    }

    /// Degree range `(min, max)` in the variable `x_idx`.
    pub fn degree_range(&self, idx: usize) -> Result<Option<(i32, i32)>> {
        let s = self.slot(idx)?;
        Ok(self.terms.keys().map(|e| e[s]).fold(None, |acc, d| match acc {
            None => Some((d, d)),
            Some((lo, hi)) => Some((lo.min(d), hi.max(d))),
        }))
    }

    /// True when every term has total degree zero.
    pub fn is_degree_zero_homogeneous(&self) -> bool {
        self.terms.keys().all(|e| e.total() == 0)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MLaurent<D> {
        let mut r = MLaurent::<D>::zero_based(self.base, self.arity);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), f(c));
        }
        r
    }

    pub fn to_frac(&self) -> MLaurent<QFrac> {
        self.map_coeffs(|c| c.to_frac())
    }

    /// Evaluate at rational `q` and variable values (indexed by slot).
    pub fn eval(&self, q: &BigRational, xs: &[BigRational]) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.eval_q(q)?;
            for (sl, &d) in e.0.iter().enumerate() {
                if d != 0 {
                    if xs[sl].is_zero() {
                        return None;
                    }
                    t *= crate::qring::rat_pow(&xs[sl], d as i64);
                }
            }
            acc += t;
        }
        Some(acc)
    }

    /// Change the variable window, keeping terms. New slots get exponent 0.
    pub fn embed(&self, base: usize, arity: usize) -> Result<Self> {
        let mut r = MLaurent::zero_based(base, arity);
        for (e, c) in &self.terms {
            let mut e2 = ExpVec::zeros(arity);
            for (sl, &d) in e.0.iter().enumerate() {
                if d != 0 {
                    let idx = self.base + sl;
                    e2[Self::slot_of(base, arity, idx)?] = d;
                }
            }
            r.add_term(e2, c.clone());
        }
        Ok(r)
    }
}

impl MLaurent<QLaurent> {
    pub fn to_qfrac(&self) -> MLaurent<QFrac> {
        self.to_frac()
    }
}

impl<C: Coeff> Add for &MLaurent<C> {
    type Output = MLaurent<C>;
    fn add(self, o: &MLaurent<C>) -> MLaurent<C> {
        self.try_add(o).expect("MLaurent arity mismatch")
    }
}

impl<C: Coeff> Sub for &MLaurent<C> {
    type Output = MLaurent<C>;
    fn sub(self, o: &MLaurent<C>) -> MLaurent<C> {
        self.try_sub(o).expect("MLaurent arity mismatch")
    }
}

impl<C: Coeff> Mul for &MLaurent<C> {
    type Output = MLaurent<C>;
    fn mul(self, o: &MLaurent<C>) -> MLaurent<C> {
        self.try_mul(o).expect("MLaurent arity mismatch")
    }
}

impl<C: Coeff> Neg for &MLaurent<C> {
    type Output = MLaurent<C>;
    fn neg(self) -> MLaurent<C> {
        self.scale(&C::one().neg_ref())
    }
}

impl<C: Coeff> fmt::Display for MLaurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms_sorted().into_iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            let mut first = true;
            for (sl, &d) in e.0.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                f.write_str(if first { " * " } else { "*" })?;
                first = false;
                let idx = self.base + sl;
                if d == 1 {
                    write!(f, "x{idx}")?;
                } else {
                    write!(f, "x{idx}^{d}")?;
                }
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for MLaurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
