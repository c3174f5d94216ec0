//! Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense Laurent polynomial `sum coeffs[i] q^(low + i)`.
///
/// The coefficient vector is trimmed so that its first and last entries are
/// nonzero; the zero polynomial has an empty vector and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QLaurent {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl QLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0)
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    /// `c q^e`.
    pub fn monomial(c: BigInt, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: e, coeffs: vec![c] }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(BigInt::one(), e)
    }

    /// `1 - q^e`.
    pub fn one_minus_q_pow(e: i64) -> Self {
        let mut r = Self::one();
        r.sub_shifted(&Self::one(), e);
        r
    }

    pub fn from_dense(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut r = Self { low, coeffs };
        r.trim();
        r
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut r = Self::zero();
        for (e, c) in terms {
            r += &Self::monomial(c, e);
        }
        r
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.low = 0;
            }
            Some(i) => {
                if i > 0 {
                    self.coeffs.drain(..i);
                    self.low += i as i64;
                }
                while self.coeffs.last().is_some_and(|c| c.is_zero()) {
                    self.coeffs.pop();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Single term `c q^e`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        (self.coeffs.len() == 1).then(|| (&self.coeffs[0], self.low))
    }

    pub fn low_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient at the highest exponent.
    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub(crate) fn dense(&self) -> (i64, &[BigInt]) {
        (self.low, &self.coeffs)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn shift_in_place(&mut self, k: i64) {
        if !self.is_zero() {
            self.low += k;
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// `self += s * q^k * other` for a small integer `s`, in place.
    fn axpy(&mut self, other: &Self, k: i64, negate: bool) {
        if other.is_zero() {
            return;
        }
        let olow = other.low + k;
        if self.is_zero() {
            self.low = olow;
            self.coeffs = if negate {
                other.coeffs.iter().map(|c| -c).collect()
            } else {
                other.coeffs.clone()
            };
            return;
        }
        let ohigh = olow + other.coeffs.len() as i64;
        let shigh = self.low + self.coeffs.len() as i64;
        if olow < self.low {
            let pad = (self.low - olow) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = olow;
        }
        if ohigh > shigh.max(self.low + self.coeffs.len() as i64) {
            let need = (ohigh - self.low) as usize;
            self.coeffs.resize(need, BigInt::zero());
        }
        let off = (olow - self.low) as usize;
        for (i, c) in other.coeffs.iter().enumerate() {
            if negate {
                self.coeffs[off + i] -= c;
            } else {
                self.coeffs[off + i] += c;
            }
        }
        self.trim();
    }

    /// `self -= q^k * other`.
    pub fn sub_shifted(&mut self, other: &Self, k: i64) {
        self.axpy(other, k, true);
    }

    /// `self += q^k * other`.
    pub fn add_shifted(&mut self, other: &Self, k: i64) {
        self.axpy(other, k, false);
    }

    /// gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_int_exact(&self, c: &BigInt) -> Self {
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x / c).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in the Laurent ring.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, e)) = d.as_monomial() {
            let mut out = Vec::with_capacity(self.coeffs.len());
            for x in &self.coeffs {
                let (qq, rr) = x.div_rem(c);
                if !rr.is_zero() {
                    return None;
                }
                out.push(qq);
            }
            return Some(Self { low: self.low - e, coeffs: out });
        }
        // long division from the top, working on normalized polynomials
        let dn = d.coeffs.len();
        if self.coeffs.len() < dn {
            return None;
        }
        let lead = d.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dn + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + dn - 1];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &qc * dc;
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(self.low - d.low, quot))
    }

    /// Evaluate at a rational `q`.
    pub fn eval(&self, q: &num_rational::BigRational) -> num_rational::BigRational {
        use num_rational::BigRational;
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + BigRational::from_integer(c.clone());
        }
        acc * rat_pow(q, self.low)
    }
}

pub(crate) fn rat_pow(q: &num_rational::BigRational, e: i64) -> num_rational::BigRational {
    use num_traits::Pow;
    if e >= 0 {
        Pow::pow(q, e as u64)
    } else {
        Pow::pow(q.recip(), (-e) as u64)
    }
}

/// Primitive polynomial gcd of two polynomials given as dense vectors with
/// constant term at index 0. Result is primitive with positive leading coefficient.
pub(crate) fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    fn primitive(v: &mut Vec<BigInt>) {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        let mut g = BigInt::zero();
        for c in v.iter() {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for c in v.iter_mut() {
                *c /= &g;
            }
        }
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    primitive(&mut a);
    primitive(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        // pseudo-remainder of a by b
        let lb = b.last().unwrap().clone();
        let db = b.len() - 1;
        while a.len() > db && !a.is_empty() {
            let la = a.last().unwrap().clone();
            let shift = a.len() - 1 - db;
            let g = la.gcd(&lb);
            let fa = &lb / &g;
            let fb = &la / &g;
            for c in a.iter_mut() {
                *c *= &fa;
            }
            for (j, bc) in b.iter().enumerate() {
                a[shift + j] -= &fb * bc;
            }
            while a.last().is_some_and(|c| c.is_zero()) {
                a.pop();
            }
        }
        primitive(&mut a);
        std::mem::swap(&mut a, &mut b);
    }
    if a.last().is_some_and(|c| c.is_negative()) {
        for c in a.iter_mut() {
            *c = -&*c;
        }
    }
    a
}

impl PartialOrd for QLaurent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QLaurent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.low.cmp(&other.low).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl AddAssign<&QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &QLaurent) {
        self.add_shifted(rhs, 0);
    }
}

impl SubAssign<&QLaurent> for QLaurent {
    fn sub_assign(&mut self, rhs: &QLaurent) {
        self.sub_shifted(rhs, 0);
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut r = self.clone();
        r += rhs;
        r
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut r = self.clone();
        r -= rhs;
        r
    }
}

impl Add for QLaurent {
    type Output = QLaurent;
    fn add(mut self, rhs: QLaurent) -> QLaurent {
        self += &rhs;
        self
    }
}

impl Sub for QLaurent {
    type Output = QLaurent;
    fn sub(mut self, rhs: QLaurent) -> QLaurent {
        self -= &rhs;
        self
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        -&self
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        if self.is_zero() || rhs.is_zero() {
            return QLaurent::zero();
        }
        if rhs.coeffs.len() == 1 {
            return QLaurent {
                low: self.low + rhs.low,
                coeffs: self.coeffs.iter().map(|c| c * &rhs.coeffs[0]).collect(),
            };
        }
        if self.coeffs.len() == 1 {
            return rhs * self;
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QLaurent::from_dense(self.low + rhs.low, out)
    }
}

impl Mul for QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: QLaurent) -> QLaurent {
        &self * &rhs
    }
}

impl std::iter::Product for QLaurent {
    fn product<I: Iterator<Item = QLaurent>>(iter: I) -> Self {
        iter.fold(QLaurent::one(), |a, b| &a * &b)
    }
}

impl std::iter::Sum for QLaurent {
    fn sum<I: Iterator<Item = QLaurent>>(iter: I) -> Self {
        iter.fold(QLaurent::zero(), |mut a, b| {
            a += &b;
            a
        })
    }
}

impl From<i64> for QLaurent {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> QLaurent {
        QLaurent::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn trims_and_compares() {
        let a = p(&[(0, 1), (2, -1)]);
        let b = &a + &p(&[(2, 1)]);
        assert_eq!(b, QLaurent::one());
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &a).low_exp(), None);
    }

    #[test]
    fn multiplication_and_division() {
        let a = p(&[(0, 1), (1, -1)]);
        let b = p(&[(0, 1), (1, 1)]);
        let prod = &a * &b;
        assert_eq!(prod, p(&[(0, 1), (2, -1)]));
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(p(&[(0, 1), (2, 1)]).div_exact(&a), None);
        assert_eq!(p(&[(-3, 2), (0, 4)]).div_exact(&p(&[(-1, 2)])), Some(p(&[(-2, 1), (1, 2)])));
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        let one_minus = |e| QLaurent::one_minus_q_pow(e);
        let a = &one_minus(2) * &one_minus(3);
        let b = &one_minus(4) * &one_minus(6);
        let (_, ad) = a.dense();
        let (_, bd) = b.dense();
        let g = poly_gcd(ad, bd);
        // a itself divides b
        let gp = QLaurent::from_dense(0, g);
        assert!(a.div_exact(&gp).is_some());
        assert!(b.div_exact(&gp).is_some());
        assert_eq!(gp.high_exp(), Some(5));
        assert_eq!(gp.leading(), Some(&BigInt::one()));
    }
}
