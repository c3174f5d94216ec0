//! Right-hand sides: q-Dyson, q-Morris, the p = 1 product, the block
//! recursion for `D_n(a)`, its `a = b = 0` specialization, and Kadell's formula.

use crate::error::{Error, Result};
use crate::laurent::{ExpVec, MLaurent};
use crate::products::Shape;
use crate::qring::{poch, qbinom, qbinom_i, qfact, ratio, QFrac, QLaurent};

/// Nonnegative integers `a, b, c` together with a shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BFParams {
    pub shape: Shape,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl BFParams {
    pub fn new(shape: Shape, a: usize, b: usize, c: usize) -> Self {
        Self { shape, a, b, c }
    }
}

fn prod(it: impl IntoIterator<Item = QLaurent>) -> QLaurent {
    it.into_iter().product()
}

/// `(q)_{|a|} / prod (q)_{a_i}`.
pub fn qdyson_rhs(a: &[usize]) -> QFrac {
    let total: usize = a.iter().sum();
    ratio(qfact(total), prod(a.iter().map(|&x| qfact(x)))).expect("nonzero denominator")
}

pub fn qmorris_rhs(n: usize, a: usize, b: usize, c: usize) -> Result<QFrac> {
    if n == 0 {
        return Err(Error::Precondition("q-Morris needs n >= 1".into()));
    }
    let mut num = QLaurent::one();
    let mut den = QLaurent::one();
    for i in 0..n {
        num = &num * &(&qfact(a + b + i * c) * &qfact((i + 1) * c));
        den = &den * &(&(&qfact(a + i * c) * &qfact(b + i * c)) * &qfact(c));
    }
    ratio(num, den)
}

/// Closed product for shapes `(n0, n1)`.
pub fn bf_p1_rhs(n0: usize, n1: usize, a: usize, b: usize, c: usize) -> Result<QFrac> {
    if n0 == 0 || n1 == 0 {
        return Err(Error::Precondition("bf_p1_rhs needs n0, n1 >= 1".into()));
    }
    let n = n0 + n1;
    let mut num = prod((2..=n1).map(|j| QLaurent::one_minus_q_pow((j * (c + 1)) as i64)));
    let mut den = QLaurent::one();
    for j in 0..n {
        let over = j > n0;
        let sh = if over { j - n0 } else { 0 };
        num = &num * &poch((a + j * c + sh + 1) as i64, b);
        num = &num * &qfact((j + 1) * c + sh);
        den = &den * &qfact(b + j * c + sh);
        den = &den * &qfact(c + over as usize);
    }
    ratio(num, den)
}

/// One step of the block recursion: the factor multiplying `D_{n-1}` when
/// block `k` shrinks, for the current shape.
fn recursion_factor(shape: &Shape, k: usize, a: usize, b: usize, c: usize, with_b: bool) -> Result<QFrac> {
    let n = shape.n();
    let nk = shape.part(k);
    let mut num = QLaurent::one_minus_q_pow((nk * (c + 1)) as i64);
    let mut den = QLaurent::one_minus_q_pow((c + 1) as i64);
    num = &num * &qbinom((n * c + nk - 1) as u64, c as u64);
    if with_b {
        let base = (n - 1) * c + nk;
        num = &num * &poch((a + base) as i64, b);
        den = &den * &poch(base as i64, b);
    }
    ratio(num, den)
}

/// `D_n(a)` by repeatedly shrinking the first largest decorated block.
pub fn bf_rhs(p: &BFParams) -> Result<QFrac> {
    bf_rhs_with(p, &mut |s: &Shape| s.maximal_blocks()[0])
}

/// `D_n(a)` with a caller-chosen maximal block at every step.
pub fn bf_rhs_with(p: &BFParams, choose: &mut dyn FnMut(&Shape) -> usize) -> Result<QFrac> {
    let mut shape = p.shape.clone();
    let mut acc = QFrac::one();
    while shape.p() > 0 {
        let k = choose(&shape);
        if !shape.maximal_blocks().contains(&k) {
            return Err(Error::Precondition(format!("block {k} is not maximal in {shape:?}")));
        }
        acc = &acc * &recursion_factor(&shape, k, p.a, p.b, p.c, true)?;
        shape = shape.decrement(k);
    }
    Ok(&acc * &qmorris_rhs(shape.n(), p.a, p.b, p.c)?)
}

/// Every value of [`bf_rhs_with`] over all tie-break paths, deduplicated.
/// All entries must agree.
pub fn bf_rhs_all_paths(p: &BFParams) -> Result<Vec<QFrac>> {
    fn go(shape: &Shape, p: &BFParams, acc: QFrac, out: &mut Vec<QFrac>) -> Result<()> {
        if shape.p() == 0 {
            let v = &acc * &qmorris_rhs(shape.n(), p.a, p.b, p.c)?;
            if !out.contains(&v) {
                out.push(v);
            }
            return Ok(());
        }
        for k in shape.maximal_blocks() {
            let f = recursion_factor(shape, k, p.a, p.b, p.c, true)?;
            go(&shape.decrement(k), p, &acc * &f, out)?;
        }
        Ok(())
    }
    let mut out = Vec::new();
    go(&p.shape, p, QFrac::one(), &mut out)?;
    Ok(out)
}

/// `D_n(0)` with `a = b = 0`, down to the equal-parameter q-Dyson value.
pub fn dn0_rhs(shape: &Shape, c: usize) -> Result<QFrac> {
    let mut shape = shape.clone();
    let mut acc = QFrac::one();
    while shape.p() > 0 {
        let k = shape.maximal_blocks()[0];
        acc = &acc * &recursion_factor(&shape, k, 0, 0, c, false)?;
        shape = shape.decrement(k);
    }
    let n0 = shape.n();
    let base = ratio(qfact(n0 * c), qfact(c).pow(n0 as u32))?;
    Ok(&acc * &base)
}

/// Kadell's value of `CT x^{-v} h_r(x^{(a)}) prod_{i<j}(x_i/x_j)_{a_i}(q x_j/x_i)_{a_j}`.
pub fn kadell_rhs(v: &[usize], r: usize, a: &[usize]) -> Result<QFrac> {
    if r == 0 {
        return Err(Error::Precondition("kadell_rhs needs r >= 1".into()));
    }
    if v.len() != a.len() {
        return Err(Error::ArityMismatch(v.len(), a.len()));
    }
    if v.iter().sum::<usize>() != r {
        return Err(Error::Precondition("kadell_rhs needs |v| = r".into()));
    }
    let nz: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
    if nz.len() != 1 {
        return Ok(QFrac::zero());
    }
    let k = nz[0];
    let ak = a[k];
    if ak == 0 {
        // the factor (1 - q^{a_k}) vanishes
        return Ok(QFrac::zero());
    }
    let total: usize = a.iter().sum();
    let tail: usize = a[k + 1..].iter().sum();
    // (q^{|a|})_r / (1 - q^{|a|}) = (q^{|a|+1})_{r-1}
    let mut num = QLaurent::q_pow(tail as i64);
    num = &num * &QLaurent::one_minus_q_pow(ak as i64);
    num = &num * &poch(total as i64 + 1, r - 1);
    let den = poch((total - ak + 1) as i64, r);
    let mut acc = ratio(num, den)?;
    let mut suffix = 0;
    for i in (0..a.len()).rev() {
        suffix += a[i];
        acc = &acc * &QFrac::from(qbinom(suffix as u64, a[i] as u64));
    }
    Ok(acc)
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCase {
    pub name: &'static str,
    pub params: String,
    pub lhs: QFrac,
    pub rhs: QFrac,
}

impl IdentityCase {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `sum_{j=0}^t q^{j(n-t)} / ((q^{-j})_j (q)_{t-j})` against `[n, t]`.
pub fn qsum_identity(n: usize, t: usize) -> IdentityCase {
    let mut lhs = QFrac::zero();
    for j in 0..=t {
        let den = &poch(-(j as i64), j) * &qfact(t - j);
        let term = ratio(QLaurent::q_pow((j as i64) * (n as i64 - t as i64)), den).expect("nonzero");
        lhs = &lhs + &term;
    }
    IdentityCase { name: "q-sum", params: format!("n={n},t={t}"), lhs, rhs: qbinom(n as u64, t as u64).into() }
}

/// `(z)_t = sum_j q^{C(j,2)} [t, j] (-z)^j`, with `z` a variable: compares
/// coefficient lists (returned as the `t + 1` coefficients of each side, encoded as one polynomial each).
pub fn qbinomial_theorem(t: usize) -> (MLaurent<QLaurent>, MLaurent<QLaurent>) {
    let lhs = MLaurent::<QLaurent>::poch_factor(1, 1, 1, None, 0, t).expect("valid factor");
    let mut rhs = MLaurent::<QLaurent>::zero(1);
    for j in 0..=t {
        let mut c = QLaurent::q_pow((j * j.saturating_sub(1) / 2) as i64);
        c = &c * &qbinom(t as u64, j as u64);
        if j % 2 == 1 {
            c = -c;
        }
        rhs.add_term(ExpVec::from_slice(&[j as i32]), c);
    }
    (lhs, rhs)
}

/// The scalar identity behind the `a = b = 0` recursion, for block `k`:
/// the sum over `i` in `N_k` and `j = -1..c-1` of the class-`k` constant
/// terms equals `(1-q^{n_k(c+1)})/(1-q^{c+1}) [nc + n_k - 1, c]`.
pub fn rec_dn_identity(shape: &Shape, k: usize, c: usize) -> Result<IdentityCase> {
    if k == 0 || k > shape.p() {
        return Err(Error::IndexOutOfRange(format!("block {k}")));
    }
    let n = shape.n() as i64;
    let sk1 = shape.sigma_before(k) as i64;
    let sk = shape.sigma(k) as i64;
    let c = c as i64;
    let mut lhs = QFrac::zero();
    for i in shape.block(k) {
        let i = i as i64;
        for j in -1..c {
            let e = c * (j + 1) * sk1
                + (c + 1) * (j + 2) * (i - 1 - sk1)
                + (c + 1) * (j + 1) * (sk - i)
                + c * (j + 1) * (n - sk);
            let den = &poch(-j - 1, (j + 1) as usize) * &qfact((c - j - 1) as usize);
            lhs = &lhs + &ratio(QLaurent::q_pow(e), den)?;
        }
    }
    let nk = shape.part(k) as i64;
    let rhs = ratio(
        &QLaurent::one_minus_q_pow(nk * (c + 1)) * &qbinom_i(n * c + nk - 1, c),
        QLaurent::one_minus_q_pow(c + 1),
    )?;
    Ok(IdentityCase { name: "rec-Dn", params: format!("shape={shape},k={k},c={c}"), lhs, rhs })
}

/// All compositions of `n` into positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Shapes with `p >= 1` and `n <= nmax`.
pub fn decorated_shapes(nmax: usize) -> Vec<Shape> {
    (2..=nmax)
        .flat_map(compositions)
        .filter(|c| c.len() >= 2)
        .map(|c| Shape::new(c).expect("positive parts"))
        .collect()
}

/// The q-sum identity for `t <= n <= 8`, the q-binomial theorem for `t <= 8`
/// and the recursion identity for every shape with `n <= 5`, `c <= 3` and
/// every maximal block. Returns the first failure, if any.
pub fn identity_suite() -> std::result::Result<usize, String> {
    let mut count = 0;
    for n in 0..=8 {
        for t in 0..=n {
            let case = qsum_identity(n, t);
            if !case.holds() {
                return Err(format!("{} {}: {} != {}", case.name, case.params, case.lhs, case.rhs));
            }
            count += 1;
        }
    }
    for t in 0..=8 {
        let (l, r) = qbinomial_theorem(t);
        if l != r {
            return Err(format!("q-binomial theorem t={t}"));
        }
        count += 1;
    }
    for shape in decorated_shapes(5) {
        for c in 0..=3 {
            for k in shape.maximal_blocks() {
                let case = rec_dn_identity(&shape, k, c).map_err(|e| e.to_string())?;
                if !case.holds() {
                    return Err(format!("{} {}: {} != {}", case.name, case.params, case.lhs, case.rhs));
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qf(s: &str) -> QFrac {
        s.parse().unwrap()
    }

    fn sh(s: &str) -> Shape {
        s.parse().unwrap()
    }

    #[test]
    fn qdyson_values() {
        assert_eq!(qdyson_rhs(&[1, 1]), qf("1 + q"));
        assert_eq!(qdyson_rhs(&[0, 0, 0]), qf("1"));
        assert_eq!(qdyson_rhs(&[1, 1, 1]), qf("1 + 2*q + 2*q^2 + q^3"));
    }

    #[test]
    fn qmorris_values() {
        assert_eq!(qmorris_rhs(1, 1, 1, 0).unwrap(), qf("1 + q"));
        assert_eq!(qmorris_rhs(4, 0, 0, 0).unwrap(), qf("1"));
        assert!(qmorris_rhs(0, 0, 0, 0).is_err());
    }

    #[test]
    fn p1_reduces_to_qmorris() {
        for n0 in 1..=2 {
            for a in 0..=2 {
                for b in 0..=2 {
                    for c in 0..=2 {
                        assert_eq!(bf_p1_rhs(n0, 1, a, b, c).unwrap(), qmorris_rhs(n0 + 1, a, b, c).unwrap());
                    }
                }
            }
        }
        assert_eq!(bf_p1_rhs(1, 1, 0, 0, 0).unwrap(), qf("1"));
    }

    #[test]
    fn recursion_base_and_shape_11() {
        let p = BFParams::new(sh("3"), 1, 2, 1);
        assert_eq!(bf_rhs(&p).unwrap(), qmorris_rhs(3, 1, 2, 1).unwrap());
        for a in 0..=2 {
            for b in 0..=2 {
                for c in 0..=2 {
                    let p = BFParams::new(sh("1,1"), a, b, c);
                    assert_eq!(bf_rhs(&p).unwrap(), qmorris_rhs(2, a, b, c).unwrap());
                }
            }
        }
    }

    #[test]
    fn dn0_matches_bf_rhs() {
        assert_eq!(dn0_rhs(&sh("3"), 2).unwrap(), qdyson_rhs(&[2, 2, 2]));
        for shape in decorated_shapes(4) {
            for c in 0..=2 {
                let p = BFParams::new(shape.clone(), 0, 0, c);
                assert_eq!(dn0_rhs(&shape, c).unwrap(), bf_rhs(&p).unwrap(), "{shape:?} c={c}");
            }
        }
    }

    #[test]
    fn p1_matches_recursion() {
        for (n0, n1) in [(1, 2), (2, 2), (1, 3), (2, 3)] {
            for a in 0..=2 {
                for b in 0..=2 {
                    for c in 0..=2 {
                        let p = BFParams::new(Shape::new(vec![n0, n1]).unwrap(), a, b, c);
                        assert_eq!(bf_p1_rhs(n0, n1, a, b, c).unwrap(), bf_rhs(&p).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn kadell_values() {
        assert_eq!(kadell_rhs(&[1, 1], 2, &[1, 1]).unwrap(), QFrac::zero());
        assert!(kadell_rhs(&[1, 0], 2, &[1, 1]).is_err());
        assert_eq!(kadell_rhs(&[1, 0], 1, &[0, 1]).unwrap(), QFrac::zero());
        // n = 1: CT x^{-r} h_r(x, xq, ..., xq^{a-1}) = [a + r - 1, r]
        for a in 1..=4 {
            for r in 1..=3 {
                assert_eq!(kadell_rhs(&[r], r, &[a]).unwrap(), QFrac::from(qbinom((a + r - 1) as u64, r as u64)));
            }
        }
    }

    #[test]
    fn identities() {
        assert!(qsum_identity(0, 0).holds());
        let c = qsum_identity(2, 1);
        assert_eq!(c.lhs, qf("1 + q"));
        assert!(qsum_identity(5, 5).holds());
        let (l, r) = qbinomial_theorem(0);
        assert_eq!(l, r);
        assert!(identity_suite().is_ok());
    }

    #[test]
    fn tie_breaks_agree() {
        for shape in [sh("1,2,2"), sh("2,1,1,1"), sh("1,2,2,2")] {
            let p = BFParams::new(shape, 1, 1, 1);
            assert_eq!(bf_rhs_all_paths(&p).unwrap().len(), 1);
        }
    }
}
