//! Builders for the q-Dyson, q-Morris and Baker–Forrester products and the
//! complete homogeneous weight used by Kadell's formula.
//!
//! Every builder sets `x_0 = 1`. The factor lists are the authoritative form;
//! `build_*` just expands them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::laurent::{Coeff, ExpVec, FactorProduct, MLaurent, PochFactor};
use crate::qring::{QFrac, QLaurent};

/// Block sizes `(n_0, n_1, ..., n_p)`; variables `1..=n` are split into
/// consecutive blocks `N_0, ..., N_p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    parts: Vec<usize>,
}

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Precondition("shape needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Precondition("shape parts must be positive".into()));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn p(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn n0(&self) -> usize {
        self.parts[0]
    }

    pub fn part(&self, l: usize) -> usize {
        self.parts[l]
    }

    /// `sigma_l = n_0 + ... + n_l`; `sigma(-1)` is written `sigma_before(0) = 0`.
    pub fn sigma(&self, l: usize) -> usize {
        self.parts[..=l].iter().sum()
    }

    /// `sigma_{l-1}`, zero for `l = 0`.
    pub fn sigma_before(&self, l: usize) -> usize {
        self.parts[..l].iter().sum()
    }

    /// Variables of block `l` (1-based).
    pub fn block(&self, l: usize) -> std::ops::RangeInclusive<usize> {
        self.sigma_before(l) + 1..=self.sigma(l)
    }

    /// Block index of variable `i` (1-based).
    pub fn block_of(&self, i: usize) -> usize {
        let mut acc = 0;
        for (l, &m) in self.parts.iter().enumerate() {
            acc += m;
            if i <= acc {
                return l;
            }
        }
        panic!("variable {i} outside shape {self}")
    }

    /// 1 iff `i != j` share a block `N_l` with `l >= 1`.
    pub fn epsilon(&self, i: usize, j: usize) -> Result<u8> {
        let n = self.n();
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::IndexOutOfRange(format!("epsilon({i}, {j}) with n = {n}")));
        }
        Ok(self.eps(i, j) as u8)
    }

    pub(crate) fn eps(&self, i: usize, j: usize) -> usize {
        let b = self.block_of(i);
        (b >= 1 && b == self.block_of(j)) as usize
    }

    /// Blocks `k >= 1` attaining `max(n_1..n_p)`, ascending.
    pub fn maximal_blocks(&self) -> Vec<usize> {
        let m = self.parts[1..].iter().copied().max().unwrap_or(0);
        (1..=self.p()).filter(|&k| self.parts[k] == m).collect()
    }

    /// Shape with `n_k` decreased by one; a part that reaches zero is dropped.
    pub fn decrement(&self, k: usize) -> Shape {
        let mut parts = self.parts.clone();
        parts[k] -= 1;
        if parts[k] == 0 {
            parts.remove(k);
        }
        Shape { parts }
    }

    /// Decorated block sizes sorted ascending.
    pub fn sorted_decorated(&self) -> Vec<usize> {
        let mut v = self.parts[1..].to_vec();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Shape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad shape `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Shape::new(parts)
    }
}

/// `prod_{i<j} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j}`.
pub fn qdyson_factors(a: &[usize]) -> FactorProduct {
    let n = a.len();
    let mut fp = FactorProduct::new(1, n);
    for i in 1..=n {
        for j in i + 1..=n {
            fp.push(PochFactor::new(Some(i), Some(j), 0, a[i - 1]));
            fp.push(PochFactor::new(Some(j), Some(i), 1, a[j - 1]));
        }
    }
    fp
}

pub fn build_qdyson(a: &[usize]) -> Result<MLaurent> {
    qdyson_factors(a).expand()
}

/// `L(a, b, c; x)` for the given shape, `x_0 = 1`.
pub fn bf_factors(shape: &Shape, a: usize, b: usize, c: usize) -> FactorProduct {
    let n = shape.n();
    let mut fp = FactorProduct::new(1, n);
    for i in 1..=n {
        fp.push(PochFactor::new(None, Some(i), 0, a));
        fp.push(PochFactor::new(Some(i), None, 1, b));
    }
    fp.factors.extend(pair_factors(shape, c).factors);
    fp
}

/// The pair product alone, `prod_{i<j} (x_i/x_j)_{c+e_ij} (q x_j/x_i)_{c+e_ij}`.
pub fn pair_factors(shape: &Shape, c: usize) -> FactorProduct {
    let n = shape.n();
    let mut fp = FactorProduct::new(1, n);
    for i in 1..=n {
        for j in i + 1..=n {
            let e = c + shape.eps(i, j);
            fp.push(PochFactor::new(Some(i), Some(j), 0, e));
            fp.push(PochFactor::new(Some(j), Some(i), 1, e));
        }
    }
    fp
}

pub fn build_bf(shape: &Shape, a: usize, b: usize, c: usize) -> Result<MLaurent> {
    bf_factors(shape, a, b, c).expand()
}

pub fn qmorris_factors(n: usize, a: usize, b: usize, c: usize) -> Result<FactorProduct> {
    if n == 0 {
        return Err(Error::Precondition("q-Morris needs n >= 1".into()));
    }
    Ok(bf_factors(&Shape::new(vec![n])?, a, b, c))
}

pub fn build_qmorris(n: usize, a: usize, b: usize, c: usize) -> Result<MLaurent> {
    qmorris_factors(n, a, b, c)?.expand()
}

/// `h_r` on the alphabet `{x_i q^t : 0 <= t < a_i}`.
pub fn kadell_h<C: Coeff>(r: usize, a: &[usize]) -> Result<MLaurent<C>> {
    if r == 0 {
        return Err(Error::Precondition("kadell_h needs r >= 1".into()));
    }
    let n = a.len();
    // h_k over a growing alphabet: adding a letter y gives h_k' = sum_j y^j h_{k-j}
    let mut h: Vec<MLaurent<C>> = (0..=r)
        .map(|k| if k == 0 { MLaurent::one(n) } else { MLaurent::zero(n) })
        .collect();
    for i in 0..n {
        for t in 0..a[i] {
            let mut e = ExpVec::zeros(n);
            e[i] = 1;
            for k in (1..=r).rev() {
                // h_k <- h_k + y h_{k-1}', processed descending with the updated h_{k-1}
                let mut acc = h[k].clone();
                let mut yp = MLaurent::one(n);
                for j in 1..=k {
                    yp = yp.mul_monomial(&e, t as i64)?;
                    acc = &acc + &(&yp * &h[k - j]);
                }
                h[k] = acc;
            }
        }
    }
    Ok(h.swap_remove(r))
}

/// Factors of the q-Dyson product used by Kadell's formula.
pub fn kadell_factors(a: &[usize]) -> FactorProduct {
    qdyson_factors(a)
}

/// Expanded product as fractions, for callers that need `QFrac` coefficients.
pub fn expand_frac(fp: &FactorProduct) -> Result<MLaurent<QFrac>> {
    Ok(fp.expand::<QLaurent>()?.to_frac())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qf(s: &str) -> QFrac {
        s.parse().unwrap()
    }

    fn mono(e: &[i32], c: &str) -> MLaurent {
        MLaurent::monomial(e.len(), e, qf(c)).unwrap()
    }

    #[test]
    fn shape_basics() {
        let s: Shape = "1,2,2".parse().unwrap();
        assert_eq!((s.n(), s.p(), s.n0()), (5, 2, 1));
        assert_eq!(s.block(1), 2..=3);
        assert_eq!(s.block_of(4), 2);
        assert_eq!(s.maximal_blocks(), vec![1, 2]);
        assert_eq!(s.decrement(1).parts(), &[1, 1, 2]);
        assert_eq!(Shape::new(vec![1, 1]).unwrap().decrement(1).parts(), &[1]);
        assert!(Shape::new(vec![1, 0]).is_err());
        assert!("1,x".parse::<Shape>().is_err());
    }

    #[test]
    fn epsilon_examples() {
        let s = Shape::new(vec![1, 2]).unwrap();
        assert_eq!(s.epsilon(2, 3).unwrap(), 1);
        assert_eq!(s.epsilon(1, 2).unwrap(), 0);
        let m = Shape::new(vec![4]).unwrap();
        for i in 1..=4 {
            for j in 1..=4 {
                if i != j {
                    assert_eq!(m.epsilon(i, j).unwrap(), 0);
                }
            }
        }
        assert!(s.epsilon(0, 1).is_err());
        assert!(s.epsilon(2, 2).is_err());
        assert!(s.epsilon(1, 4).is_err());
    }

    #[test]
    fn qdyson_examples() {
        assert_eq!(build_qdyson(&[0, 0, 0]).unwrap(), MLaurent::one(3));
        let expect = &(&mono(&[0, 0], "1 + q") - &mono(&[1, -1], "1")) - &mono(&[-1, 1], "q");
        assert_eq!(build_qdyson(&[1, 1]).unwrap(), expect);
        assert_eq!(build_qdyson(&[1, 1, 1]).unwrap().ct_all(), qf("1 + 2*q + 2*q^2 + q^3"));
    }

    #[test]
    fn qmorris_and_bf_examples() {
        assert_eq!(build_qmorris(1, 1, 1, 0).unwrap().ct_all(), qf("1 + q"));
        assert_eq!(build_qmorris(3, 0, 0, 0).unwrap(), MLaurent::one(3));
        assert!(build_qmorris(0, 1, 1, 1).is_err());
        let s = Shape::new(vec![3]).unwrap();
        assert_eq!(build_bf(&s, 1, 2, 1).unwrap(), build_qmorris(3, 1, 2, 1).unwrap());
        assert_eq!(build_bf(&Shape::new(vec![1, 1]).unwrap(), 0, 0, 0).unwrap(), MLaurent::one(2));
        let expect = &(&mono(&[0, 0, 0], "1 + q") - &mono(&[0, 1, -1], "1")) - &mono(&[0, -1, 1], "q");
        assert_eq!(build_bf(&Shape::new(vec![1, 2]).unwrap(), 0, 0, 0).unwrap(), expect);
    }

    #[test]
    fn kadell_h_examples() {
        assert_eq!(kadell_h::<QFrac>(1, &[1]).unwrap(), mono(&[1], "1"));
        assert_eq!(kadell_h::<QFrac>(1, &[2]).unwrap(), mono(&[1], "1 + q"));
        let h2 = kadell_h::<QFrac>(2, &[1, 1]).unwrap();
        let expect = &(&mono(&[2, 0], "1") + &mono(&[1, 1], "1")) + &mono(&[0, 2], "1");
        assert_eq!(h2, expect);
        // h_2 on (x, xq): x^2 (1 + q + q^2)
        assert_eq!(kadell_h::<QFrac>(2, &[2]).unwrap(), mono(&[2], "1 + q + q^2"));
    }

    #[test]
    fn products_are_degree_zero() {
        let s = Shape::new(vec![1, 2]).unwrap();
        let l = pair_factors(&s, 1).expand::<QLaurent>().unwrap();
        assert!(l.is_degree_zero_homogeneous());
    }
}
