//! `Q(d)` and its specialisations `Q(d|u;k)`, built directly in factored form
//! and, independently, by substituting into `Q(d)`.

use crate::error::{Error, Result};
use crate::laurent::{FactorProduct, MLaurent, PochFactor};
use crate::products::{pair_factors, Shape};
use crate::qring::{qpoch, QFrac};

use super::series::{LinDen, RatFn};

/// `Q(d|u;k) = V * scalar * H * residual`, with `H = h_num / h_den`.
#[derive(Clone, Debug)]
pub struct QukFactors {
    pub shape: Shape,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub u: Vec<usize>,
    pub k: Vec<i64>,
    pub v: QFrac,
    pub scalar: QFrac,
    pub h_num: FactorProduct,
    pub h_den: FactorProduct,
    pub residual: FactorProduct,
}

/// `r_l = |U ∩ N_l|` for every block.
pub fn block_counts(shape: &Shape, u: &[usize]) -> Vec<usize> {
    let mut r = vec![0; shape.parts().len()];
    for &x in u {
        r[shape.block_of(x)] += 1;
    }
    r
}

fn check_args(shape: &Shape, d: usize, u: &[usize], k: &[i64]) -> Result<()> {
    if d == 0 {
        return Err(Error::OutOfContract("Q(d) needs d >= 1".into()));
    }
    if u.len() != k.len() || u.len() > shape.n() {
        return Err(Error::Precondition(format!("u = {u:?}, k = {k:?}")));
    }
    if u.windows(2).any(|w| w[0] >= w[1]) || u.iter().any(|&x| x == 0 || x > shape.n()) {
        return Err(Error::Precondition(format!("u = {u:?} is not ascending in 1..{}", shape.n())));
    }
    if let Some(x) = k.iter().find(|&&x| x < 1 || x > d as i64) {
        return Err(Error::Precondition(format!("k entry {x} outside [1, {d}]")));
    }
    Ok(())
}

/// `Q(d)` itself, the case `s = 0`.
pub fn build_q(shape: &Shape, b: usize, c: usize, d: usize) -> Result<QukFactors> {
    build_quk(shape, b, c, d, &[], &[])
}

pub fn build_quk(shape: &Shape, b: usize, c: usize, d: usize, u: &[usize], k: &[i64]) -> Result<QukFactors> {
    check_args(shape, d, u, k)?;
    let n = shape.n();
    let s = u.len();
    let eps = |i: usize, j: usize| shape.eps(i, j);
    let mut v = QFrac::one();
    let mut scalar = QFrac::one();
    for i in 0..s {
        v = &v * &qpoch(1 - k[i], b as i64)?.into();
        for j in i + 1..s {
            let e = (c + eps(u[i], u[j])) as i64;
            v = &v * &qpoch(k[j] - k[i], e)?.into();
            v = &v * &qpoch(k[i] - k[j] + 1, e)?.into();
        }
        let den: QFrac = (&qpoch(k[i] - d as i64, d as i64 - k[i])? * &qpoch(1, k[i] - 1)?).into();
        scalar = scalar.checked_div(&den)?;
    }
    let (us, ks) = if s == 0 { (0, 0) } else { (u[s - 1], k[s - 1]) };
    let mut h_num = FactorProduct::new(0, n + 1);
    let mut h_den = FactorProduct::new(0, n + 1);
    let mut residual = FactorProduct::new(0, n + 1);
    let outside: Vec<usize> = (1..=n).filter(|i| !u.contains(i)).collect();
    for &i in &outside {
        h_num.push(PochFactor::new(Some(i), Some(us), 1 - ks, b));
        for j in 0..s {
            let e = c + eps(i, u[j]);
            h_num.push(PochFactor::new(Some(i), Some(us), k[j] - ks + (i > u[j]) as i64, e));
            h_num.push(PochFactor::new(Some(us), Some(i), ks - k[j] + (u[j] > i) as i64, e));
        }
        h_den.push(PochFactor::new(Some(us), Some(i), ks - d as i64, d));
    }
    for f in pair_factors(shape, c).factors {
        if !u.contains(&f.num.unwrap()) && !u.contains(&f.den.unwrap()) {
            residual.push(f);
        }
    }
    Ok(QukFactors { shape: shape.clone(), b, c, d, u: u.to_vec(), k: k.to_vec(), v, scalar, h_num, h_den, residual })
}

impl QukFactors {
    pub fn s(&self) -> usize {
        self.u.len()
    }

    /// The variable eliminated next: `x_{u_s}`, or `x_0` when `s = 0`.
    pub fn head(&self) -> usize {
        self.u.last().copied().unwrap_or(0)
    }

    pub fn r(&self) -> Vec<usize> {
        block_counts(&self.shape, &self.u)
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn numerator(&self) -> Result<MLaurent<QFrac>> {
        let n = self.shape.n();
        if self.is_zero() {
            return Ok(MLaurent::zero_based(0, n + 1));
        }
        let mut all = self.h_num.clone();
        all.factors.extend(self.residual.factors.iter().cloned());
        Ok(all.expand::<QFrac>()?.scale(&(&self.v * &self.scalar)))
    }

    pub fn denominators(&self) -> Vec<LinDen> {
        let mut out = Vec::with_capacity(self.h_den.linear_count());
        for f in &self.h_den.factors {
            for t in 0..f.len as i64 {
                out.push(LinDen::new(QFrac::q_pow(f.shift + t), f.num.unwrap(), f.den.unwrap()));
            }
        }
        out
    }

    pub fn to_ratfn(&self) -> Result<RatFn> {
        RatFn::new(self.numerator()?, self.denominators())
    }
}

/// `Q(d|u;k)` computed by applying the substitution to
/// `Q(d) * prod_i (1 - x_0 / (x_{u_i} q^{k_i}))`.
pub fn substitution_oracle(shape: &Shape, b: usize, c: usize, d: usize, u: &[usize], k: &[i64]) -> Result<RatFn> {
    check_args(shape, d, u, k)?;
    let n = shape.n();
    let mut top = FactorProduct::new(0, n + 1);
    for j in 1..=n {
        top.push(PochFactor::new(Some(j), Some(0), 1, b));
    }
    top.factors.extend(pair_factors(shape, c).factors);
    let mut num = top.expand::<QFrac>()?;
    let s = u.len();
    let mut dens = Vec::new();
    if s == 0 {
        for j in 1..=n {
            for t in 0..d as i64 {
                dens.push(LinDen::new(QFrac::q_pow(t - d as i64), 0, j));
            }
        }
        return RatFn::new(num, dens);
    }
    num = num.subst_shift(u, k)?;
    let (us, ks) = (u[s - 1], k[s - 1]);
    let mut cancel = QFrac::one();
    for j in 1..=n {
        let pos = u.iter().position(|&x| x == j);
        for t in 0..d as i64 {
            let e = t - d as i64;
            match pos {
                Some(i) if t == d as i64 - k[i] => {}
                // x_0 / x_{u_i} becomes q^{k_i}
                Some(i) => cancel = &cancel * &(&QFrac::one() - &QFrac::q_pow(e + k[i])),
                None => dens.push(LinDen::new(QFrac::q_pow(e + ks), us, j)),
            }
        }
    }
    RatFn::new(num.scale(&cancel.recip()?), dens)
}
