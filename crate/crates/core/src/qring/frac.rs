//! Reduced fractions of Laurent polynomials in `q`.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{poly_gcd, QLaurent};
use crate::error::{Error, Result};

/// `num / den` in lowest terms.
///
/// The denominator is a polynomial with nonzero constant term, content 1
/// and positive leading coefficient; any power of `q` lives in the numerator.
/// With this normal form equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QFrac {
    num: QLaurent,
    den: QLaurent,
}

impl Default for QFrac {
    fn default() -> Self {
        Self::zero()
    }
}

impl QFrac {
    pub fn zero() -> Self {
        Self { num: QLaurent::zero(), den: QLaurent::one() }
    }

    pub fn one() -> Self {
        Self { num: QLaurent::one(), den: QLaurent::one() }
    }

    pub fn from_int(c: i64) -> Self {
        QLaurent::from_int(c).into()
    }

    pub fn q_pow(e: i64) -> Self {
        QLaurent::q_pow(e).into()
    }

    pub fn new(num: QLaurent, den: QLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(mut num: QLaurent, mut den: QLaurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let dl = den.low_exp().unwrap();
        den.shift_in_place(-dl);
        num.shift_in_place(-dl);
        if let Some((c, _)) = den.as_monomial() {
            let c = c.clone();
            return Self::from_scalar_den(num, c);
        }
        if let Some(qt) = num.div_exact(&den) {
            return Self { num: qt, den: QLaurent::one() };
        }
        let nl = num.low_exp().unwrap();
        let (_, nd) = num.dense();
        let (_, dd) = den.dense();
        let g = poly_gcd(nd, dd);
        if g.len() > 1 {
            let g = QLaurent::from_dense(0, g);
            num = num.div_exact(&g).expect("gcd divides numerator");
            den = den.div_exact(&g).expect("gcd divides denominator");
        }
        debug_assert_eq!(num.low_exp().map(|l| l >= nl), Some(true));
        let cn = num.content();
        let cd = den.content();
        let mut g = cn.gcd(&cd);
        if den.leading().unwrap().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            num = num.div_int_exact(&g);
            den = den.div_int_exact(&g);
        }
        Self { num, den }
    }

    fn from_scalar_den(num: QLaurent, c: BigInt) -> Self {
        let mut g = num.content().gcd(&c);
        if c.is_negative() {
            g = -g;
        }
        let den = QLaurent::from_bigint(&c / &g);
        let num = if g.is_one() { num } else { num.div_int_exact(&g) };
        Self { num, den }
    }

    pub fn numer(&self) -> &QLaurent {
        &self.num
    }

    pub fn denom(&self) -> &QLaurent {
        &self.den
    }

    pub fn into_parts(self) -> (QLaurent, QLaurent) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&QLaurent> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn mul_q_pow(&self, k: i64) -> Self {
        Self { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut r = Self::one();
        for _ in 0..e.unsigned_abs() {
            r = &r * &base;
        }
        Ok(r)
    }

    /// Evaluate at a rational `q`; `None` when the denominator vanishes there.
    pub fn eval(&self, q: &num_rational::BigRational) -> Option<num_rational::BigRational> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(q) / d)
    }

    /// Substitute `q -> q^k` for nonzero `k`.
    pub fn subs_q_power(&self, k: i64) -> Self {
        let map = |p: &QLaurent| QLaurent::from_terms(p.terms().map(|(e, c)| (e * k, c.clone())));
        Self::normalize(map(&self.num), map(&self.den))
    }
}

impl From<QLaurent> for QFrac {
    fn from(p: QLaurent) -> Self {
        QFrac { num: p, den: QLaurent::one() }
    }
}

impl From<i64> for QFrac {
    fn from(c: i64) -> Self {
        QFrac::from_int(c)
    }
}

impl Add for &QFrac {
    type Output = QFrac;
    fn add(self, rhs: &QFrac) -> QFrac {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return QFrac::normalize(&self.num + &rhs.num, self.den.clone());
        }
        QFrac::normalize(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &QFrac {
    type Output = QFrac;
    fn sub(self, rhs: &QFrac) -> QFrac {
        self + &(-rhs)
    }
}

impl Neg for &QFrac {
    type Output = QFrac;
    fn neg(self) -> QFrac {
        QFrac { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QFrac {
    type Output = QFrac;
    fn neg(self) -> QFrac {
        -&self
    }
}

impl Mul for &QFrac {
    type Output = QFrac;
    fn mul(self, rhs: &QFrac) -> QFrac {
        if self.is_zero() || rhs.is_zero() {
            return QFrac::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QFrac { num: &self.num * &rhs.num, den: QLaurent::one() };
        }
        QFrac::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`QFrac::checked_div`] for a fallible version.
impl Div for &QFrac {
    type Output = QFrac;
    fn div(self, rhs: &QFrac) -> QFrac {
        self.checked_div(rhs).expect("division by zero fraction")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QFrac {
            type Output = QFrac;
            fn $m(self, rhs: QFrac) -> QFrac { (&self).$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl std::iter::Product for QFrac {
    fn product<I: Iterator<Item = QFrac>>(iter: I) -> Self {
        iter.fold(QFrac::one(), |a, b| &a * &b)
    }
}

impl std::iter::Sum for QFrac {
    fn sum<I: Iterator<Item = QFrac>>(iter: I) -> Self {
        iter.fold(QFrac::zero(), |a, b| &a + &b)
    }
}

/// `num / den` for products known to divide exactly; falls back to a
/// reduced fraction when they do not.
pub fn ratio(num: QLaurent, den: QLaurent) -> Result<QFrac> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    match num.div_exact(&den) {
        Some(q) => Ok(q.into()),
        None => QFrac::new(num, den),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omq(e: i64) -> QLaurent {
        QLaurent::one_minus_q_pow(e)
    }

    #[test]
    fn inverse_times_self_is_one() {
        let a = QFrac::new(QLaurent::one(), omq(1)).unwrap();
        assert_eq!(&a * &QFrac::from(omq(1)), QFrac::one());
    }

    #[test]
    fn additive_identity() {
        let a = QFrac::new(&QLaurent::one() + &QLaurent::q_pow(1), omq(1)).unwrap();
        assert_eq!(&a + &QFrac::zero(), a);
        assert_eq!(a.to_string(), "(-1 - q)/(-1 + q)");
    }

    #[test]
    fn gcd_cancellation() {
        let a = QFrac::new(omq(2), omq(1)).unwrap();
        assert!(a.is_laurent());
        assert_eq!(a.numer(), &(&QLaurent::one() + &QLaurent::q_pow(1)));
    }

    #[test]
    fn denominator_normal_form() {
        // q^2 / (q^3 - q^4) = q^-1 / (1 - q)
        let den = &QLaurent::q_pow(3) - &QLaurent::q_pow(4);
        let f = QFrac::new(QLaurent::q_pow(2), den).unwrap();
        assert_eq!(f.denom(), &(&QLaurent::q_pow(1) - &QLaurent::one()));
        assert_eq!(f.numer(), &-QLaurent::q_pow(-1));
        // (2 - 2q^2) / (4 - 4q) = (1 + q) / 2
        let g = QFrac::new(omq(2).scale(&2.into()), omq(1).scale(&4.into())).unwrap();
        assert_eq!(g.denom(), &QLaurent::from_int(2));
        // non-trivial gcd without exact division
        let h = QFrac::new(&omq(2) * &omq(3), &omq(4) * &omq(6)).unwrap();
        let back = &h * &QFrac::from(&omq(4) * &omq(6));
        assert_eq!(back, QFrac::from(&omq(2) * &omq(3)));
        assert_eq!(h.denom().content(), 1.into());
        assert!(h.denom().low_exp() == Some(0));
    }

    #[test]
    fn division_by_zero_is_rejected() {
        assert_eq!(QFrac::one().checked_div(&QFrac::zero()), Err(Error::DivisionByZero));
        assert!(QFrac::new(QLaurent::one(), QLaurent::zero()).is_err());
    }
}
