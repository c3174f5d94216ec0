use std::fmt::{Debug, Display};

use num_rational::BigRational;

use crate::qring::{QFrac, QLaurent};

/// Coefficient ring for [`super::MLaurent`].
///
/// Products and their constant terms never leave `Z[q, 1/q]`, so the
/// expansion engine runs over [`QLaurent`]; anything that divides by
/// scalars uses [`QFrac`].
pub trait Coeff: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&mut self, o: &Self);
    fn sub_ref(&mut self, o: &Self);
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_q_pow(&self, k: i64) -> Self;
    /// `self -= q^k * o`.
    fn sub_q_shifted(&mut self, o: &Self, k: i64) {
        let t = o.mul_q_pow(k);
        self.sub_ref(&t);
    }
    fn from_laurent(p: QLaurent) -> Self;
    fn to_frac(&self) -> QFrac;
    fn eval_q(&self, q: &BigRational) -> Option<BigRational>;
}

impl Coeff for QLaurent {
    fn zero() -> Self {
        QLaurent::zero()
    }
    fn one() -> Self {
        QLaurent::one()
    }
    fn is_zero(&self) -> bool {
        QLaurent::is_zero(self)
    }
    fn add_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_q_pow(&self, k: i64) -> Self {
        self.shift(k)
    }
    fn sub_q_shifted(&mut self, o: &Self, k: i64) {
        self.sub_shifted(o, k);
    }
    fn from_laurent(p: QLaurent) -> Self {
        p
    }
    fn to_frac(&self) -> QFrac {
        self.clone().into()
    }
    fn eval_q(&self, q: &BigRational) -> Option<BigRational> {
        Some(self.eval(q))
    }
}

impl Coeff for QFrac {
    fn zero() -> Self {
        QFrac::zero()
    }
    fn one() -> Self {
        QFrac::one()
    }
    fn is_zero(&self) -> bool {
        QFrac::is_zero(self)
    }
    fn add_ref(&mut self, o: &Self) {
        *self = &*self + o;
    }
    fn sub_ref(&mut self, o: &Self) {
        *self = &*self - o;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_q_pow(&self, k: i64) -> Self {
        QFrac::mul_q_pow(self, k)
    }
    fn from_laurent(p: QLaurent) -> Self {
        p.into()
    }
    fn to_frac(&self) -> QFrac {
        self.clone()
    }
    fn eval_q(&self, q: &BigRational) -> Option<BigRational> {
        self.eval(q)
    }
}
