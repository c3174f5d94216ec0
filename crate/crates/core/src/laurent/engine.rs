//! Products of q-Pochhammer factors and pruned coefficient extraction.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::coeff::Coeff;
use super::poly::{ExpVec, MLaurent, TermMap};
use crate::error::{Error, Result};
use crate::qring::rat_pow;

/// `(q^shift x_num / x_den; q)_len`; `None` stands for the constant 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PochFactor {
    pub num: Option<usize>,
    pub den: Option<usize>,
    pub shift: i64,
    pub len: usize,
}

impl PochFactor {
    pub fn new(num: Option<usize>, den: Option<usize>, shift: i64, len: usize) -> Self {
        Self { num, den, shift, len }
    }
}

/// One linear factor `1 - q^m x^delta`, with at most two nonzero slots.
#[derive(Clone, Debug)]
struct Linear {
    m: i64,
    plus: Option<usize>,
    minus: Option<usize>,
}

impl Linear {
    fn key(&self) -> usize {
        self.plus.into_iter().chain(self.minus).max().unwrap_or(0)
    }
}

/// A product of Pochhammer factors over a fixed variable window.
#[derive(Clone, Debug)]
pub struct FactorProduct {
    pub base: usize,
    pub arity: usize,
    pub factors: Vec<PochFactor>,
}

impl FactorProduct {
    pub fn new(base: usize, arity: usize) -> Self {
        Self { base, arity, factors: Vec::new() }
    }

    pub fn push(&mut self, f: PochFactor) {
        if f.len > 0 {
            self.factors.push(f);
        }
    }

    pub fn linear_count(&self) -> usize {
        self.factors.iter().map(|f| f.len).sum()
    }

    fn slot(&self, v: Option<usize>) -> Result<Option<usize>> {
        match v {
            None => Ok(None),
            Some(i) if i >= self.base && i < self.base + self.arity => Ok(Some(i - self.base)),
            Some(i) => Err(Error::IndexOutOfRange(format!("variable x{i}"))),
        }
    }

    fn linears(&self) -> Result<Vec<Linear>> {
        let mut out = Vec::with_capacity(self.linear_count());
        for f in &self.factors {
            if f.num.is_some() && f.num == f.den {
                return Err(Error::Precondition("pochhammer factor with equal variables".into()));
            }
            let plus = self.slot(f.num)?;
            let minus = self.slot(f.den)?;
            for t in 0..f.len as i64 {
                out.push(Linear { m: f.shift + t, plus, minus });
            }
        }
        // process variables from the top down so each one is pinned early
        out.sort_by_key(|l| std::cmp::Reverse(l.key()));
        Ok(out)
    }

    /// Fully expanded product.
    pub fn expand<C: Coeff>(&self) -> Result<MLaurent<C>> {
        self.expand_from(MLaurent::constant_based(self.base, self.arity, C::one()))
    }

    /// `initial` times the product, fully expanded.
    pub fn expand_from<C: Coeff>(&self, initial: MLaurent<C>) -> Result<MLaurent<C>> {
        let mut cur = initial.terms;
        for l in self.linears()? {
            cur = step(cur, &l, |_| true)?;
        }
        Ok(MLaurent { terms: cur, ..MLaurent::zero_based(self.base, self.arity) })
    }

    /// Numeric value at `q` and slot values `xs`; `None` on a zero variable.
    pub fn eval(&self, q: &BigRational, xs: &[BigRational]) -> Option<BigRational> {
        let mut acc = BigRational::one();
        for f in &self.factors {
            let mut ratio = BigRational::one();
            if let Some(i) = f.num {
                ratio *= xs.get(i.checked_sub(self.base)?)?;
            }
            if let Some(j) = f.den {
                let d = xs.get(j.checked_sub(self.base)?)?;
                if d.is_zero() {
                    return None;
                }
                ratio /= d;
            }
            for t in 0..f.len as i64 {
                acc *= BigRational::one() - rat_pow(q, f.shift + t) * &ratio;
            }
        }
        Some(acc)
    }

    /// Constant term of the product.
    pub fn ct<C: Coeff>(&self) -> Result<C> {
        self.coeff(None, &ExpVec::zeros(self.arity))
    }

    /// Coefficient of `x^target` in `initial` times the product, dropping
    /// partial terms that can no longer reach the target.
    pub fn coeff<C: Coeff>(&self, initial: Option<&MLaurent<C>>, target: &ExpVec) -> Result<C> {
        if target.arity() != self.arity {
            return Err(Error::ArityMismatch(target.arity(), self.arity));
        }
        let lins = self.linears()?;
        let n = self.arity;
        // suffix bounds on the exponent change still available per slot
        let mut lo = vec![vec![0i32; n]; lins.len() + 1];
        let mut hi = vec![vec![0i32; n]; lins.len() + 1];
        for p in (0..lins.len()).rev() {
            lo[p] = lo[p + 1].clone();
            hi[p] = hi[p + 1].clone();
            if let Some(s) = lins[p].plus {
                hi[p][s] += 1;
            }
            if let Some(s) = lins[p].minus {
                lo[p][s] -= 1;
            }
        }
        let admissible = |e: &ExpVec, p: usize| {
            (0..n).all(|s| {
                let r = target[s] - e[s];
                lo[p][s] <= r && r <= hi[p][s]
            })
        };
        let mut cur: TermMap<C> = match initial {
            Some(init) => {
                if init.arity() != n || init.base() != self.base {
                    return Err(Error::ArityMismatch(init.arity(), n));
                }
                init.terms.iter().filter(|(e, _)| admissible(e, 0)).map(|(e, c)| (e.clone(), c.clone())).collect()
            }
            None => {
                let mut m = TermMap::default();
                m.insert(ExpVec::zeros(n), C::one());
                m
            }
        };
        for (p, l) in lins.iter().enumerate() {
            cur = step(cur, l, |e| admissible(e, p + 1))?;
            if cur.is_empty() {
                return Ok(C::zero());
            }
        }
        Ok(cur.remove(target).unwrap_or_else(C::zero))
    }
}

fn step<C: Coeff>(cur: TermMap<C>, l: &Linear, keep: impl Fn(&ExpVec) -> bool) -> Result<TermMap<C>> {
    let mut next: TermMap<C> = FxHashMap::with_capacity_and_hasher(cur.len() * 2, Default::default());
    for (e, c) in cur {
        let mut e2 = e.clone();
        if let Some(s) = l.plus {
            e2[s] = e2[s].checked_add(1).ok_or(Error::Overflow)?;
        }
        if let Some(s) = l.minus {
            e2[s] = e2[s].checked_sub(1).ok_or(Error::Overflow)?;
        }
        if keep(&e2) {
            next.entry(e2).or_insert_with(C::zero).sub_q_shifted(&c, l.m);
        }
        if keep(&e) {
            next.entry(e).or_insert_with(C::zero).add_ref(&c);
        }
    }
    next.retain(|_, c| !c.is_zero());
    Ok(next)
}
