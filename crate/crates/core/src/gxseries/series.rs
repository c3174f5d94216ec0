//! Rational functions with binomial denominators `1 - c x_a/x_b`, their
//! expansion in the iterated Laurent series field, and constant terms by
//! repeated partial-fraction elimination.

use crate::error::{Error, Result};
use crate::laurent::{ExpVec, MLaurent};
use crate::qring::QFrac;

/// Total order on variable indices. `i` precedes `j` when `x_i` is expanded
/// as the small variable in `1/(1 - c x_i/x_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarOrder {
    rank: Vec<usize>,
}

impl VarOrder {
    /// `x_0` first, then `x_1`, ..., `x_n`.
    pub fn natural(n: usize) -> Self {
        Self { rank: (0..=n).collect() }
    }

    /// `seq` lists every index `0..seq.len()` once, earliest first.
    pub fn from_sequence(seq: &[usize]) -> Result<Self> {
        let mut rank = vec![usize::MAX; seq.len()];
        for (r, &v) in seq.iter().enumerate() {
            if v >= seq.len() || rank[v] != usize::MAX {
                return Err(Error::Precondition(format!("{seq:?} is not an ordering of 0..{}", seq.len())));
            }
            rank[v] = r;
        }
        Ok(Self { rank })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.rank[i] < self.rank[j]
    }
}

fn ratio_exp(arity: usize, i: usize, j: usize, l: i32) -> ExpVec {
    let mut e = ExpVec::zeros(arity);
    e[i] = l;
    e[j] = -l;
    e
}

/// `1/(1 - coeff x_i/x_j)` expanded up to `trunc` powers of the ratio, over
/// variables `x_0..x_{arity-1}`.
pub fn expand_factor(arity: usize, i: usize, j: usize, coeff: &QFrac, order: &VarOrder, trunc: usize) -> Result<MLaurent<QFrac>> {
    if i == j {
        return Err(Error::Precondition(format!("expand_factor needs i != j, got {i}")));
    }
    if coeff.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if i.max(j) >= arity {
        return Err(Error::IndexOutOfRange(format!("x{} with arity {arity}", i.max(j))));
    }
    let mut out = MLaurent::zero_based(0, arity);
    if order.precedes(i, j) {
        for l in 0..=trunc as i32 {
            out.add_term(ratio_exp(arity, i, j, l), coeff.pow(l as i64)?);
        }
    } else {
        for l in 1..=trunc as i32 {
            out.add_term(ratio_exp(arity, i, j, -l), -coeff.pow(-(l as i64))?);
        }
    }
    Ok(out)
}

/// The binomial `1 - c x_a/x_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinDen {
    pub c: QFrac,
    pub a: usize,
    pub b: usize,
}

impl LinDen {
    pub fn new(c: QFrac, a: usize, b: usize) -> Self {
        Self { c, a, b }
    }

    pub fn involves(&self, k: usize) -> bool {
        self.a == k || self.b == k
    }

    fn delta(&self, arity: usize) -> ExpVec {
        ratio_exp(arity, self.a, self.b, 1)
    }

    /// The binomial as a polynomial.
    pub fn poly(&self, arity: usize) -> MLaurent<QFrac> {
        let mut p = MLaurent::constant_based(0, arity, QFrac::one());
        p.add_term(self.delta(arity), -&self.c);
        p
    }
}

/// `num / prod dens`, with `num` over `x_0..x_{arity-1}`.
#[derive(Clone, Debug)]
pub struct RatFn {
    pub num: MLaurent<QFrac>,
    pub dens: Vec<LinDen>,
}

impl RatFn {
    pub fn new(num: MLaurent<QFrac>, dens: Vec<LinDen>) -> Result<Self> {
        if num.base() != 0 {
            return Err(Error::Precondition("rational functions are indexed from x0".into()));
        }
        if let Some(d) = dens.iter().find(|d| d.a == d.b || d.a.max(d.b) >= num.arity() || d.c.is_zero()) {
            return Err(Error::Precondition(format!("bad denominator {d:?}")));
        }
        Ok(Self { num, dens })
    }

    pub fn arity(&self) -> usize {
        self.num.arity()
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn same_as(&self, o: &RatFn) -> Result<bool> {
        if self.arity() != o.arity() {
            return Ok(false);
        }
        if self.num.is_zero() || o.num.is_zero() {
            return Ok(self.num.is_zero() && o.num.is_zero());
        }
        let mut rest: Vec<&LinDen> = o.dens.iter().collect();
        let mut mine = Vec::new();
        for d in &self.dens {
            match rest.iter().position(|x| *x == d) {
                Some(p) => {
                    rest.swap_remove(p);
                }
                None => mine.push(d),
            }
        }
        let n = self.arity();
        let mut lhs = self.num.clone();
        for d in &rest {
            lhs = lhs.try_mul(&d.poly(n))?;
        }
        let mut rhs = o.num.clone();
        for d in &mine {
            rhs = rhs.try_mul(&d.poly(n))?;
        }
        Ok(lhs == rhs)
    }

    /// Exact Laurent polynomial when every denominator divides the numerator.
    pub fn as_laurent(&self) -> Result<Option<MLaurent<QFrac>>> {
        let n = self.arity();
        let mut cur = self.num.clone();
        for d in &self.dens {
            match cur.div_linear(&d.c, &d.delta(n))? {
                Some(q) => cur = q,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }

    /// Truncated iterated-series expansion; an oracle only.
    pub fn series(&self, order: &VarOrder, trunc: usize) -> Result<MLaurent<QFrac>> {
        let n = self.arity();
        let mut cur = self.num.clone();
        for d in &self.dens {
            cur = cur.try_mul(&expand_factor(n, d.a, d.b, &d.c, order, trunc)?)?;
        }
        Ok(cur)
    }

    /// Rewrite every denominator touching `k` as `1 - c x_k/x_i`.
    pub fn normalize(&self, k: usize) -> Result<RatFn> {
        let n = self.arity();
        let mut num = self.num.clone();
        let mut dens = Vec::with_capacity(self.dens.len());
        for d in &self.dens {
            if d.b == k {
                // 1 - c x_a/x_k = (-c x_a/x_k)(1 - c^{-1} x_k/x_a)
                let inv = d.c.recip()?;
                let mut m = MLaurent::zero_based(0, n);
                m.add_term(ratio_exp(n, k, d.a, 1), -&inv);
                num = num.try_mul(&m)?;
                dens.push(LinDen::new(inv, k, d.a));
            } else {
                dens.push(d.clone());
            }
        }
        Ok(RatFn { num, dens })
    }
}

/// Substitute `x_k = x_i / c` into a polynomial.
fn substitute(num: &MLaurent<QFrac>, k: usize, i: usize, c: &QFrac) -> Result<MLaurent<QFrac>> {
    let inv = c.recip()?;
    let mut out = MLaurent::zero_based(0, num.arity());
    for (e, x) in num.terms() {
        let ek = e[k];
        let mut e2 = e.clone();
        e2[k] = 0;
        e2[i] = e2[i].checked_add(ek).ok_or(Error::Overflow)?;
        out.add_term(e2, x * &inv.pow(ek as i64)?);
    }
    Ok(out)
}

/// One surviving term of the elimination, tagged with the denominator
/// `1 - c x_k/x_i` it came from.
#[derive(Clone, Debug)]
pub struct Residue {
    pub i: usize,
    pub c: QFrac,
    pub term: RatFn,
}

/// Constant term in `x_k` by the partial-fraction lemma. Fails with
/// `OutOfContract` when the numerator degree in `x_k` reaches the number of
/// denominators in `x_k`, or when two of them share both variable and constant.
pub fn ct_partial_fraction(f: &RatFn, k: usize, order: &VarOrder) -> Result<Vec<Residue>> {
    let g = f.normalize(k)?;
    let (mine, others): (Vec<&LinDen>, Vec<&LinDen>) = g.dens.iter().partition(|d| d.a == k);
    let m = mine.len() as i64;
    if let Some((_, hi)) = g.num.degree_range(k)? {
        if hi as i64 > m - 1 {
            return Err(Error::OutOfContract(format!("degree {hi} in x{k} with {m} denominators")));
        }
    }
    for (r, d) in mine.iter().enumerate() {
        if mine[..r].iter().any(|e| e.b == d.b && e.c == d.c) {
            return Err(Error::OutOfContract(format!("repeated denominator {d:?}")));
        }
    }
    let mut out = Vec::new();
    for (r, d) in mine.iter().enumerate() {
        if !order.precedes(k, d.b) {
            continue;
        }
        let mut num = substitute(&g.num, k, d.b, &d.c)?;
        let mut dens: Vec<LinDen> = others.iter().map(|&x| x.clone()).collect();
        for (s, e) in mine.iter().enumerate() {
            if s == r {
                continue;
            }
            let ratio = e.c.checked_div(&d.c)?;
            if e.b == d.b {
                num = num.scale(&(&QFrac::one() - &ratio).recip()?);
            } else {
                dens.push(LinDen::new(ratio, d.b, e.b));
            }
        }
        out.push(Residue { i: d.b, c: d.c.clone(), term: RatFn { num, dens } });
    }
    Ok(out)
}

/// Full constant term, eliminating `head` first and then each residue's new
/// variable. Falls back to exact division when the degree condition fails.
pub fn gx_ct(f: &RatFn, head: usize, order: &VarOrder) -> Result<QFrac> {
    if f.num.is_zero() {
        return Ok(QFrac::zero());
    }
    if f.dens.is_empty() {
        return Ok(f.num.ct_all());
    }
    if !f.dens.iter().any(|d| d.involves(head)) {
        // x_head only lives in the numerator
        let g = RatFn { num: f.num.ct(&[head])?, dens: f.dens.clone() };
        let next = (0..f.arity())
            .filter(|&v| g.dens.iter().any(|d| d.involves(v)))
            .min_by_key(|&v| order.rank[v])
            .expect("nonempty denominators");
        return gx_ct(&g, next, order);
    }
    match ct_partial_fraction(f, head, order) {
        Ok(terms) => {
            let mut acc = QFrac::zero();
            for r in terms {
                acc = &acc + &gx_ct(&r.term, r.i, order)?;
            }
            Ok(acc)
        }
        Err(Error::OutOfContract(why)) => match f.as_laurent()? {
            Some(l) => Ok(l.ct_all()),
            None => Err(Error::OutOfContract(format!("{why}, and the denominators do not divide"))),
        },
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> QFrac {
        QFrac::q_pow(e)
    }

    fn one(n: usize) -> MLaurent<QFrac> {
        MLaurent::constant_based(0, n, QFrac::one())
    }

    #[test]
    fn expansion_direction() {
        let o = VarOrder::natural(2);
        let s = expand_factor(3, 1, 2, &q(1), &o, 2).unwrap();
        let mut want = one(3);
        want.add_term(ExpVec::from_slice(&[0, 1, -1]), q(1));
        want.add_term(ExpVec::from_slice(&[0, 2, -2]), q(2));
        assert_eq!(s, want);
        assert_eq!(s.ct(&[1]).unwrap().ct_all(), QFrac::one());
        let t = expand_factor(3, 2, 1, &q(1), &o, 5).unwrap();
        assert!(t.ct(&[2]).unwrap().is_zero());
        assert!(expand_factor(3, 1, 2, &QFrac::zero(), &o, 2).is_err());
        let rev = VarOrder::from_sequence(&[2, 1, 0]).unwrap();
        assert!(expand_factor(3, 1, 2, &q(1), &rev, 4).unwrap().ct(&[1]).unwrap().is_zero());
    }

    #[test]
    fn expansion_ct_agrees_with_lemma_at_every_truncation() {
        let o = VarOrder::natural(3);
        for (i, j) in [(0, 1), (1, 0), (1, 3), (3, 2)] {
            let f = RatFn::new(one(4), vec![LinDen::new(q(2), i, j)]).unwrap();
            let exact = gx_ct(&f, i, &o).unwrap();
            for t in 0..6 {
                assert_eq!(f.series(&o, t).unwrap().ct_all(), exact, "({i},{j}) trunc {t}");
            }
        }
    }

    #[test]
    fn single_factor_residues() {
        let o = VarOrder::natural(2);
        // x_2 precedes nothing larger: no surviving term
        let f = RatFn::new(one(3), vec![LinDen::new(q(1), 2, 1)]).unwrap();
        assert!(ct_partial_fraction(&f, 2, &o).unwrap().is_empty());
        let f = RatFn::new(one(3), vec![LinDen::new(q(1), 1, 2)]).unwrap();
        let r = ct_partial_fraction(&f, 1, &o).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].term.num, one(3));
        assert_eq!(f.series(&o, 12).unwrap().ct(&[1]).unwrap().ct_all(), QFrac::one());
    }

    fn two_factor_case() -> RatFn {
        // (x1/x3 + q^3 x2/x3 + 2) / ((1 - q x1/x2)(1 - q^2 x1/x3)(1 - q^5 x2/x3))
        let mut num = MLaurent::zero_based(0, 4);
        num.add_term(ExpVec::from_slice(&[0, 1, 0, -1]), QFrac::one());
        num.add_term(ExpVec::from_slice(&[0, 0, 1, -1]), q(3));
        num.add_term(ExpVec::zeros(4), QFrac::from_int(2));
        RatFn::new(num, vec![LinDen::new(q(1), 1, 2), LinDen::new(q(2), 1, 3), LinDen::new(q(5), 2, 3)]).unwrap()
    }

    #[test]
    fn two_factor_case_matches_series() {
        let o = VarOrder::natural(3);
        let f = two_factor_case();
        let exact = gx_ct(&f, 1, &o).unwrap();
        assert!(!exact.is_zero());
        assert_eq!(f.series(&o, 12).unwrap().ct_all(), exact);
    }

    #[test]
    fn elimination_is_order_independent() {
        let o = VarOrder::natural(3);
        let f = two_factor_case();
        let g = RatFn { num: f.num.clone(), dens: f.dens.iter().rev().cloned().collect() };
        let sum = |v: Vec<Residue>| v.into_iter().map(|r| r.term.series(&o, 12).unwrap().ct_all()).sum::<QFrac>();
        let a = sum(ct_partial_fraction(&f, 1, &o).unwrap());
        let b = sum(ct_partial_fraction(&g, 1, &o).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn degree_condition_is_enforced() {
        let o = VarOrder::natural(2);
        let mut num = MLaurent::zero_based(0, 3);
        num.add_term(ExpVec::from_slice(&[0, 1, -1]), QFrac::one());
        let f = RatFn::new(num, vec![LinDen::new(q(1), 1, 2)]).unwrap();
        assert!(matches!(ct_partial_fraction(&f, 1, &o), Err(Error::OutOfContract(_))));
        assert!(matches!(gx_ct(&f, 1, &o), Err(Error::OutOfContract(_))));
        // a numerator divisible by its denominator takes the Laurent path
        let p = LinDen::new(q(1), 1, 2).poly(3).try_mul(&LinDen::new(q(2), 2, 1).poly(3)).unwrap();
        let f = RatFn::new(p, vec![LinDen::new(q(1), 1, 2), LinDen::new(q(2), 2, 1)]).unwrap();
        assert_eq!(gx_ct(&f, 1, &o).unwrap(), QFrac::one());
    }

    #[test]
    fn division_by_binomial() {
        let d = LinDen::new(q(3), 1, 2);
        let p = d.poly(3).try_mul(&LinDen::new(q(1), 2, 0).poly(3)).unwrap();
        let qt = p.div_linear(&q(3), &ExpVec::from_slice(&[0, 1, -1])).unwrap().unwrap();
        assert_eq!(qt, LinDen::new(q(1), 2, 0).poly(3));
        assert!(one(3).div_linear(&q(3), &ExpVec::from_slice(&[0, 1, -1])).unwrap().is_none());
    }
}
