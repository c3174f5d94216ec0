//! The three vanishing properties of `Q(d|u;k)`, the Laurent-form route for
//! terms whose degree blocks the partial-fraction lemma, and the full
//! elimination pipeline for `CT Q(d)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{ExpVec, MLaurent};
use crate::products::Shape;
use crate::qring::{interpolate, qpoch, QFrac, UniPoly};
use crate::roots::{for_each_permutation, lemma_key_classify, same_decorated, t_table, weak_compositions, KeyCase};

use super::quk::{block_counts, build_q, build_quk, QukFactors};
use super::series::{ct_partial_fraction, gx_ct, RatFn, VarOrder};

/// `sum_{l >= 1} r_l (n_l - r_l)`.
pub fn cross_weight(shape: &Shape, r: &[usize]) -> i64 {
    (1..shape.parts().len()).map(|l| (r[l] * (shape.part(l) - r[l])) as i64).sum()
}

/// Exponent of `x_{u_s}` in the Laurent form, `(n-s)(sc-d) + sum r_l(n_l-r_l)`.
pub fn laurent_exponent(shape: &Shape, c: usize, d: usize, r: &[usize]) -> i64 {
    let s: usize = r.iter().sum();
    (shape.n() - s) as i64 * (s as i64 * c as i64 - d as i64) + cross_weight(shape, r)
}

/// `t_s` with `t_0 = 0`.
fn t_at(shape: &Shape, s: usize) -> i64 {
    if s == 0 {
        0
    } else {
        t_table(shape)[s - 1]
    }
}

/// Which of the three properties apply to `(d, s, r)`.
pub fn applicable_branches(shape: &Shape, b: usize, c: usize, d: usize, r: &[usize]) -> Vec<u8> {
    let n = shape.n();
    let s: usize = r.iter().sum();
    let (si, ci, di) = (s as i64, c as i64, d as i64);
    let mut out = Vec::new();
    if s >= 1 && di <= (si - 1) * ci + b as i64 + t_at(shape, s) {
        out.push(1);
    }
    if s != n {
        let lhs = (n - s) as i64 * (di - si * ci);
        let w = cross_weight(shape, r);
        if lhs > w {
            out.push(2);
        } else if di >= si * ci + t_at(shape, s + 1) + 1 {
            out.push(3);
        }
    }
    out
}

/// `S_0 ⊆ B ∪ S_1 ∪ ... ∪ S_s` for every `i` outside `U`: each factor of the
/// denominator of `H` is matched by a numerator factor.
pub fn interval_cover(shape: &Shape, b: usize, c: usize, d: usize, u: &[usize], k: &[i64]) -> bool {
    let s = u.len();
    let ks = k[s - 1];
    (1..=shape.n()).filter(|i| !u.contains(i)).all(|i| {
        (1 - ks..=d as i64 - ks).all(|x| {
            if x <= b as i64 - ks {
                return true;
            }
            (0..s).any(|j| {
                let e = (c + shape.eps(i, u[j])) as i64;
                let chi = (u[j] > i) as i64;
                let lo = k[j] - ks - chi - e + 1;
                let hi = k[j] - ks + e - chi;
                lo <= x && x <= hi
            })
        })
    })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct LemQReport {
    pub shape: String,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub u: Vec<usize>,
    pub k: Vec<i64>,
    pub branches: Vec<u8>,
    pub failures: Vec<String>,
}

impl LemQReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn poch_vanishes(m: i64, len: usize) -> Result<bool> {
    Ok(qpoch(m, len as i64)?.is_zero())
}

fn check_branch1(q: &QukFactors, r: &[usize], fail: &mut Vec<String>) -> Result<()> {
    let s = q.s();
    let (b, c) = (q.b as i64, q.c as i64);
    let case = match lemma_key_classify(&q.k, b, c, t_at(&q.shape, s), r) {
        Ok(x) => x,
        Err(e) => {
            fail.push(format!("(1): {e}"));
            return Ok(());
        }
    };
    let named = match &case {
        KeyCase::Small { i } => poch_vanishes(1 - q.k[i - 1], q.b)?,
        KeyCase::Cross { i, j } | KeyCase::Same { i, j } => {
            let e = q.c + q.shape.eps(q.u[i - 1], q.u[j - 1]);
            let (ki, kj) = (q.k[i - 1], q.k[j - 1]);
            poch_vanishes(kj - ki, e)? || poch_vanishes(ki - kj + 1, e)?
        }
        KeyCase::Path { .. } => false,
    };
    if !named {
        fail.push(format!("(1): case {} names no vanishing factor", case.number()));
    }
    if !q.is_zero() || !q.numerator()?.is_zero() {
        fail.push("(1): Q(d|u;k) is not zero".into());
    }
    Ok(())
}

/// Index `t` with `c = q^{k_s - d + t}`, so the new `k_{s+1}` is `d - t`.
fn next_k(q: &QukFactors, c: &QFrac) -> Option<i64> {
    let ks = q.k.last().copied().unwrap_or(0);
    (0..q.d as i64).find(|&t| *c == QFrac::q_pow(ks - q.d as i64 + t)).map(|t| q.d as i64 - t)
}

fn check_branch2(q: &QukFactors, fail: &mut Vec<String>) -> Result<()> {
    let n = q.shape.n();
    let head = q.head();
    let f = q.to_ratfn()?;
    let m = ((n - q.s()) * q.d) as i32;
    if let Some((_, hi)) = f.num.degree_range(head)? {
        if hi >= m {
            fail.push(format!("(2): numerator degree {hi} in x{head} is not below {m}"));
            return Ok(());
        }
    }
    let terms = match ct_partial_fraction(&f, head, &VarOrder::natural(n)) {
        Ok(t) => t,
        Err(e) => {
            fail.push(format!("(2): {e}"));
            return Ok(());
        }
    };
    let want = (n - head) * q.d;
    if terms.len() != want {
        fail.push(format!("(2): {} surviving terms, expected {want}", terms.len()));
    }
    for t in terms {
        let Some(kk) = next_k(q, &t.c) else {
            fail.push(format!("(2): unexpected pole {:?}", t.c));
            continue;
        };
        let mut u = q.u.clone();
        let mut k = q.k.clone();
        u.push(t.i);
        k.push(kk);
        let next = build_quk(&q.shape, q.b, q.c, q.d, &u, &k)?.to_ratfn()?;
        if !t.term.same_as(&next)? {
            fail.push(format!("(2): residue at x{} differs from Q(d|{u:?};{k:?})", t.i));
        }
    }
    Ok(())
}

/// `H` as an exact Laurent polynomial, scalars included; `None` when the
/// denominator does not divide.
pub fn h_laurent(q: &QukFactors) -> Result<Option<MLaurent<QFrac>>> {
    let num = q.h_num.expand::<QFrac>()?.scale(&(&q.v * &q.scalar));
    RatFn::new(num, q.denominators())?.as_laurent()
}

/// `CT Q(d|u;k)` by the Laurent route.
pub fn laurent_ct(q: &QukFactors) -> Result<QFrac> {
    if q.is_zero() {
        return Ok(QFrac::zero());
    }
    let h = h_laurent(q)?.ok_or_else(|| Error::OutOfContract(format!("H does not divide for u = {:?}, k = {:?}", q.u, q.k)))?;
    q.residual.coeff(Some(&h), &ExpVec::zeros(q.shape.n() + 1))
}

fn check_branch3(q: &QukFactors, r: &[usize], fail: &mut Vec<String>) -> Result<()> {
    if q.is_zero() {
        return Ok(());
    }
    let shape = &q.shape;
    let s = q.s();
    let (b, c, d) = (q.b, q.c, q.d);
    let ts1 = t_at(shape, s + 1);
    match lemma_key_classify(&q.k, b as i64, c as i64, c as i64 + ts1, r) {
        Ok(KeyCase::Path { .. }) => {
            if !interval_cover(shape, b, c, d, &q.u, &q.k) {
                fail.push("(3): interval inclusion fails for a path vector".into());
            }
        }
        Ok(other) => fail.push(format!("(3): case {} holds but V != 0", other.number())),
        Err(Error::Precondition(_)) => {}
        Err(e) => fail.push(format!("(3): {e}")),
    }
    let l = laurent_exponent(shape, c, d, r);
    if l < 0 {
        fail.push(format!("(3): exponent l = {l} is negative"));
    }
    let sc = (s * c) as i64;
    let lhs: i64 = (1..r.len()).map(|u| sc + r[u] as i64 - d as i64).sum();
    if lhs > shape.n0() as i64 - r[0] as i64 - 1 {
        fail.push(format!("(3): denominator powers {lhs} exceed n0 - r0 - 1"));
    }
    let Some(h) = h_laurent(q)? else {
        fail.push("(3): H is not a Laurent polynomial".into());
        return Ok(());
    };
    if let Some((_, hi)) = h.degree_range(q.head())? {
        if (hi as i64) > l {
            fail.push(format!("(3): degree {hi} in x{} exceeds l = {l}", q.head()));
        }
    }
    let ct = q.residual.coeff(Some(&h), &ExpVec::zeros(shape.n() + 1))?;
    if !ct.is_zero() {
        fail.push(format!("(3): constant term {ct} is not zero"));
    }
    Ok(())
}

/// Checks every property that applies to `Q(d|u;k)`.
pub fn lemq_checks(shape: &Shape, b: usize, c: usize, d: usize, u: &[usize], k: &[i64]) -> Result<LemQReport> {
    let q = build_quk(shape, b, c, d, u, k)?;
    let r = block_counts(shape, u);
    let branches = applicable_branches(shape, b, c, d, &r);
    let mut failures = Vec::new();
    for &br in &branches {
        match br {
            1 => check_branch1(&q, &r, &mut failures)?,
            2 => check_branch2(&q, &mut failures)?,
            _ => check_branch3(&q, &r, &mut failures)?,
        }
    }
    Ok(LemQReport { shape: shape.to_string(), b, c, d, u: u.to_vec(), k: k.to_vec(), branches, failures })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct LemQSummary {
    pub cases: usize,
    /// How many cases each property was checked on.
    pub per_branch: [usize; 3],
    pub uncovered: usize,
    pub failures: Vec<LemQReport>,
}

impl LemQSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn add(&mut self, rep: LemQReport) {
        self.cases += 1;
        if rep.branches.is_empty() {
            self.uncovered += 1;
        }
        for &br in &rep.branches {
            self.per_branch[br as usize - 1] += 1;
        }
        if !rep.passed() {
            self.failures.push(rep);
        }
    }
}

/// Ascending subsets of `1..=n` of size `s`.
pub fn subsets(n: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(s);
    fn go(from: usize, n: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for x in from..=n {
            cur.push(x);
            go(x + 1, n, s, cur, out);
            cur.pop();
        }
    }
    go(1, n, s, &mut cur, &mut out);
    out
}

/// Every `k` in `[1, d]^s`.
pub fn k_vectors(s: usize, d: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..s {
        out = out.into_iter().flat_map(|k| (1..=d as i64).map(move |x| [k.clone(), vec![x]].concat())).collect();
    }
    out
}

/// All `(u, k)` with `d <= dmax`.
pub fn lemq_exhaustive(shape: &Shape, b: usize, c: usize, dmax: usize) -> Result<LemQSummary> {
    let mut sum = LemQSummary::default();
    for d in 1..=dmax {
        for s in 0..=shape.n() {
            for u in subsets(shape.n(), s) {
                for k in k_vectors(s, d) {
                    sum.add(lemq_checks(shape, b, c, d, &u, &k)?);
                }
            }
        }
    }
    Ok(sum)
}

/// Which route each term of the elimination took.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct PipelineStats {
    pub vanished: usize,
    pub expanded: usize,
    pub laurent: usize,
    pub closed: usize,
    pub fallback: usize,
}

fn pipeline_term(q: &QukFactors, stats: &mut PipelineStats) -> Result<QFrac> {
    if q.is_zero() {
        stats.vanished += 1;
        return Ok(QFrac::zero());
    }
    let shape = &q.shape;
    let n = shape.n();
    let r = block_counts(shape, &q.u);
    let branches = applicable_branches(shape, q.b, q.c, q.d, &r);
    if branches.contains(&1) {
        return Err(Error::OutOfContract(format!("nonzero term u = {:?}, k = {:?} where property (1) applies", q.u, q.k)));
    }
    if q.s() == n {
        stats.closed += 1;
        return Ok(q.numerator()?.ct_all());
    }
    if branches.contains(&2) {
        stats.expanded += 1;
        let mut acc = QFrac::zero();
        for i in q.head() + 1..=n {
            for kk in 1..=q.d as i64 {
                let mut u = q.u.clone();
                let mut k = q.k.clone();
                u.push(i);
                k.push(kk);
                acc = &acc + &pipeline_term(&build_quk(shape, q.b, q.c, q.d, &u, &k)?, stats)?;
            }
        }
        return Ok(acc);
    }
    if branches.contains(&3) {
        stats.laurent += 1;
        return laurent_ct(q);
    }
    stats.fallback += 1;
    gx_ct(&q.to_ratfn()?, q.head(), &VarOrder::natural(n))
}

/// `CT Q(d)` as the sum over the terms `Q(d|u;k)` of the elimination.
pub fn q3_pipeline(shape: &Shape, b: usize, c: usize, d: usize) -> Result<(QFrac, PipelineStats)> {
    let mut stats = PipelineStats::default();
    let v = pipeline_term(&build_q(shape, b, c, d)?, &mut stats)?;
    Ok((v, stats))
}

/// `CT Q(d)` by generic elimination from `x_0`.
pub fn gx_ct_q(shape: &Shape, b: usize, c: usize, d: usize) -> Result<QFrac> {
    gx_ct(&build_q(shape, b, c, d)?.to_ratfn()?, 0, &VarOrder::natural(shape.n()))
}

/// `D_n(a)` rebuilt from pipeline values at `a = -1, ..., -(nb+1)`, where
/// it is a polynomial of degree at most `nb` in `q^a`.
pub fn bf_via_pipeline(shape: &Shape, a: usize, b: usize, c: usize) -> Result<QFrac> {
    let nodes = (1..=shape.n() * b + 1)
        .map(|d| Ok((QFrac::q_pow(-(d as i64)), q3_pipeline(shape, b, c, d)?.0)))
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::new(interpolate(&nodes)?).eval(&QFrac::q_pow(a as i64)))
}

/// Vectors `k` built from a permutation `w` and slacks `t_j`, with
/// `max r_l <= sum (chi_j + t_j) <= tmax` and `t_j > 0` on ascents.
pub fn path_vectors(b: usize, c: usize, tmax: i64, r: &[usize]) -> Vec<Vec<i64>> {
    let s: usize = r.iter().sum();
    let rmax = r.get(1..).and_then(|x| x.iter().max()).copied().unwrap_or(0) as i64;
    let mut out = Vec::new();
    for_each_permutation(s, |w| {
        let chi: Vec<i64> = (0..s).map(|j| same_decorated(r, if j == 0 { 0 } else { w[j - 1] }, w[j]) as i64).collect();
        let base: i64 = chi.iter().sum();
        if base > tmax {
            return true;
        }
        for slack in weak_compositions((tmax - base) as usize, s + 1) {
            let t = &slack[..s];
            let total = base + t.iter().sum::<usize>() as i64;
            if total < rmax || (0..s).any(|j| (j == 0 || w[j - 1] < w[j]) && t[j] == 0) {
                continue;
            }
            let mut k = vec![0i64; s];
            let mut prev = b as i64;
            for j in 0..s {
                let step = if j == 0 { t[0] as i64 } else { c as i64 + chi[j] + t[j] as i64 };
                prev += step;
                k[w[j] - 1] = prev;
            }
            if !out.contains(&k) {
                out.push(k);
            }
        }
        true
    });
    out
}

/// Interval inclusion for every path vector, `s <= smax`, on shapes where
/// the Laurent route is needed. Returns the number of vectors checked.
pub fn divisibility_suite(shape: &Shape, b: usize, c: usize, smax: usize) -> std::result::Result<usize, String> {
    let n = shape.n();
    let mut checked = 0;
    for s in 1..n.min(smax + 1) {
        let ts1 = t_at(shape, s + 1);
        for u in subsets(n, s) {
            let r = block_counts(shape, &u);
            if cross_weight(shape, &r) < (n - s) as i64 * (ts1 + 1) {
                continue;
            }
            let top = (s * c + b) as i64 + ts1;
            for k in path_vectors(b, c, c as i64 + ts1, &r) {
                let kmax = *k.iter().max().unwrap();
                for d in kmax.max(1)..=top {
                    checked += 1;
                    if !interval_cover(shape, b, c, d as usize, &u, &k) {
                        return Err(format!("{shape:?} b={b} c={c} d={d} u={u:?} k={k:?}"));
                    }
                }
            }
        }
    }
    Ok(checked)
}

/// `l >= 0` exactly when `d <= sc + sum r_l(n_l-r_l)/(n-s)`, over every
/// admissible `r` and `d` up to `sc + n`.
pub fn degree_ledger_holds(shape: &Shape, c: usize) -> std::result::Result<usize, String> {
    let n = shape.n();
    let mut checked = 0;
    for s in 0..n {
        for r in weak_compositions(s, shape.parts().len()) {
            if r.iter().zip(shape.parts()).any(|(&ri, &ni)| ri > ni) {
                continue;
            }
            for d in 1..=s * c + n {
                checked += 1;
                let l = laurent_exponent(shape, c, d, &r);
                let inside = (n - s) as i64 * (d as i64 - (s * c) as i64) <= cross_weight(shape, &r);
                if (l >= 0) != inside {
                    return Err(format!("{shape:?} c={c} s={s} r={r:?} d={d}: l = {l}"));
                }
            }
        }
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::interpolate_dn;

    fn sh(s: &str) -> Shape {
        s.parse().unwrap()
    }

    #[test]
    fn pipeline_rebuilds_positive_a() {
        for (shape, b, c) in [("1,1", 1, 1), ("2", 1, 2), ("1,2", 1, 1), ("1,1", 2, 1), ("3", 1, 0)] {
            let shape: Shape = shape.parse().unwrap();
            for a in 0..=2 {
                let want = crate::roots::dn_brute(&shape, a, b, c).unwrap();
                assert_eq!(bf_via_pipeline(&shape, a, b, c).unwrap(), want, "{shape} a={a} b={b} c={c}");
            }
        }
    }

    #[test]
    fn pipeline_matches_interpolation() {
        let shape = sh("1,1");
        let poly = interpolate_dn(&shape, 1, 1).unwrap();
        for d in 1..=4 {
            let want = poly.eval(&QFrac::q_pow(-(d as i64)));
            let (got, _) = q3_pipeline(&shape, 1, 1, d).unwrap();
            assert_eq!(got, want, "d = {d}");
            assert_eq!(gx_ct_q(&shape, 1, 1, d).unwrap(), want, "d = {d}");
        }
    }

    #[test]
    fn small_q_examples() {
        let one = sh("1");
        let poly = interpolate_dn(&one, 0, 0).unwrap();
        assert_eq!(gx_ct_q(&one, 0, 0, 1).unwrap(), poly.eval(&QFrac::q_pow(-1)));
        assert!(gx_ct_q(&one, 1, 0, 1).unwrap().is_zero());
        assert!(gx_ct_q(&sh("2"), 1, 1, 1).unwrap().is_zero());
        assert!(q3_pipeline(&sh("2"), 1, 1, 1).unwrap().0.is_zero());
        assert!(build_q(&one, 0, 0, 0).is_err());
    }

    #[test]
    fn full_shape_is_covered_by_property_one() {
        // s = n: every d up to (n-1)c + b + t_n falls under (1)
        let shape = sh("1,2");
        let (b, c) = (1, 1);
        let top = 2 * c + b + t_at(&shape, 3) as usize;
        for d in 1..=top {
            for k in k_vectors(3, d) {
                let rep = lemq_checks(&shape, b, c, d, &[1, 2, 3], &k).unwrap();
                assert_eq!(rep.branches, vec![1]);
                assert!(rep.passed(), "{rep:?}");
            }
        }
    }

    #[test]
    fn exhaustive_small_shape() {
        let sum = lemq_exhaustive(&sh("1,2"), 1, 1, 5).unwrap();
        assert!(sum.passed(), "{:?}", sum.failures.first());
        assert!(sum.per_branch[0] > 0 && sum.per_branch[1] > 0);
        // the Laurent range is empty for this shape
        assert_eq!(sum.per_branch[2], 0);
    }

    #[test]
    fn laurent_route_on_a_large_block() {
        let shape = sh("1,1,4");
        for (b, c, d, k) in [(0, 1, 3, [3, 1]), (1, 2, 5, [5, 2])] {
            let rep = lemq_checks(&shape, b, c, d, &[3, 4], &k).unwrap();
            assert_eq!(rep.branches, vec![3]);
            assert!(rep.passed(), "{rep:?}");
            let q = build_quk(&shape, b, c, d, &[3, 4], &k).unwrap();
            assert!(!q.is_zero());
            assert!(h_laurent(&q).unwrap().is_some());
        }
    }

    #[test]
    fn laurent_range_exhaustive() {
        let shape = sh("1,1,4");
        let mut seen = 0;
        for (b, c) in [(0, 1), (1, 1), (1, 2)] {
            for s in 1..shape.n() {
                for u in subsets(shape.n(), s) {
                    let r = block_counts(&shape, &u);
                    for d in 1..=s * c + 3 {
                        if !applicable_branches(&shape, b, c, d, &r).contains(&3) {
                            continue;
                        }
                        for k in k_vectors(s, d) {
                            let rep = lemq_checks(&shape, b, c, d, &u, &k).unwrap();
                            assert!(rep.passed(), "{rep:?}");
                            seen += 1;
                        }
                    }
                }
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn divisibility_by_intervals() {
        let mut total = 0;
        for shape in ["1,1,4", "1,5", "2,5", "1,1,5", "1,2,4", "1,6"] {
            for b in 0..=2 {
                for c in 0..=3 {
                    total += divisibility_suite(&sh(shape), b, c, 4).unwrap();
                }
            }
        }
        assert!(total > 100, "{total}");
    }

    #[test]
    fn degree_ledger() {
        for shape in crate::closedform::decorated_shapes(6) {
            for c in 0..=2 {
                degree_ledger_holds(&shape, c).unwrap();
            }
        }
    }

    #[test]
    fn path_vectors_are_case_four() {
        let r = [0, 2];
        for k in path_vectors(1, 1, 2, &r) {
            let bound = 1 + 1 + 2;
            if k.iter().all(|&x| x <= bound) {
                let case = lemma_key_classify(&k, 1, 1, 2, &r).unwrap();
                assert!(matches!(case, KeyCase::Path { .. }) || case.number() <= 3);
            }
        }
        assert!(!path_vectors(1, 1, 2, &r).is_empty());
    }
}
