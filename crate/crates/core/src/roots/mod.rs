//! Roots of `D_n(a)` viewed as a polynomial in `z = q^a`, and the path
//! combinatorics used to show the `Q(d|u;k)` terms vanish.

mod paths;
mod table;

pub use paths::{
    exhaustive_min_weight, for_each_permutation, lemma_key_classify, lower_bounds_hold, min_weight_witness,
    path_weight, same_decorated, weak_compositions, KeyCase, PathWeight,
};
pub use table::{root_sets, t_table, RootRow, RootTable};

use serde::Serialize;

use crate::closedform::{bf_rhs, BFParams};
use crate::error::Result;
use crate::products::{bf_factors, Shape};
use crate::qring::{interpolate, QFrac, QLaurent, UniPoly};

/// `D_n(a)` by direct constant-term extraction.
pub fn dn_brute(shape: &Shape, a: usize, b: usize, c: usize) -> Result<QFrac> {
    Ok(bf_factors(shape, a, b, c).ct::<QLaurent>()?.into())
}

/// Interpolates `D_n(a)` in `z = q^a` through the nodes `a = 0..=nb`.
pub fn interpolate_dn(shape: &Shape, b: usize, c: usize) -> Result<UniPoly> {
    let nodes = (0..=shape.n() * b)
        .map(|a| Ok((QFrac::q_pow(a as i64), dn_brute(shape, a, b, c)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::new(interpolate(&nodes)?))
}

/// `D_n(0) * prod_{i in R} (1 - z q^i)/(1 - q^i)` as a polynomial in `z`.
pub fn factored_dn(shape: &Shape, b: usize, c: usize, d0: &QFrac) -> Result<UniPoly> {
    let mut coeffs = vec![d0.clone()];
    for i in root_sets(shape, b, c).multiset() {
        let scale = QFrac::one() - QFrac::q_pow(i);
        let lin = (QFrac::zero() - QFrac::q_pow(i)).checked_div(&scale)?;
        let cst = QFrac::one().checked_div(&scale)?;
        let mut next = vec![QFrac::zero(); coeffs.len() + 1];
        for (k, x) in coeffs.iter().enumerate() {
            next[k] = &next[k] + &(x * &cst);
            next[k + 1] = &next[k + 1] + &(x * &lin);
        }
        coeffs = next;
    }
    Ok(UniPoly::new(coeffs))
}

#[derive(Clone, Debug, Serialize)]
pub struct RootReport {
    pub shape: String,
    pub b: usize,
    pub c: usize,
    pub degree: Option<usize>,
    pub degree_bound: usize,
    pub roots: Vec<i64>,
    /// Distinct roots and `|R| = nb` are only asserted when `c >= b`.
    pub simple_regime: bool,
    pub disjoint: bool,
    pub first_nonvanishing: Option<i64>,
    pub closed_form_agrees: bool,
    pub factored_agrees: Option<bool>,
}

impl RootReport {
    pub fn passed(&self) -> bool {
        self.first_nonvanishing.is_none()
            && self.closed_form_agrees
            && self.degree.is_some_and(|d| d <= self.degree_bound)
            && (!self.simple_regime || (self.disjoint && self.factored_agrees == Some(true)))
    }
}

/// Checks that every predicted root `d` gives `D_n(-d) = 0`, and that the
/// interpolant agrees with the closed form at every node and one more.
pub fn verify_roots(shape: &Shape, b: usize, c: usize) -> Result<RootReport> {
    let poly = interpolate_dn(shape, b, c)?;
    let table = root_sets(shape, b, c);
    let roots: Vec<i64> = table.distinct().into_iter().collect();
    let first_nonvanishing = roots.iter().copied().find(|&d| !poly.eval(&QFrac::q_pow(-d)).is_zero());
    let nb = shape.n() * b;
    let mut closed_form_agrees = true;
    for a in 0..=nb + 1 {
        let rhs = bf_rhs(&BFParams::new(shape.clone(), a, b, c))?;
        let at = poly.eval(&QFrac::q_pow(a as i64));
        if at != rhs || (a == nb + 1 && at != dn_brute(shape, a, b, c)?) {
            closed_form_agrees = false;
            break;
        }
    }
    let simple_regime = c >= b;
    let factored_agrees = if simple_regime {
        let d0 = poly.eval(&QFrac::one());
        Some(factored_dn(shape, b, c, &d0)? == poly)
    } else {
        None
    };
    Ok(RootReport {
        shape: shape.to_string(),
        b,
        c,
        degree: poly.degree(),
        degree_bound: nb,
        disjoint: table.is_disjoint() && table.distinct().len() == nb,
        roots,
        simple_regime,
        first_nonvanishing,
        closed_form_agrees,
        factored_agrees,
    })
}

/// For `s < n`: every positive block-size vector with `r_i <= min(s, n_i)` has `max(r_1..r_p) >= t_{s+1}`,
/// and equality forces `r_0 = n_0` and `r_l = min(n_l, max)`.
pub fn cor_rts_holds(shape: &Shape) -> std::result::Result<usize, String> {
    let t = t_table(shape);
    let parts = shape.parts();
    let mut checked = 0;
    for s in 1..shape.n() {
        let ts = t[s] as usize;
        for r in weak_compositions(s, parts.len()) {
            if r.iter().zip(parts).any(|(&ri, &ni)| ri == 0 || ri > ni.min(s)) {
                continue;
            }
            checked += 1;
            let m = r[1..].iter().copied().max().unwrap_or(0);
            if m < ts {
                return Err(format!("{shape:?} s={s} r={r:?}: max {m} < t = {ts}"));
            }
            if m == ts && shape.p() > 0 {
                let tight = r[0] == parts[0] && (1..parts.len()).all(|l| r[l] == parts[l].min(m));
                if !tight {
                    return Err(format!("{shape:?} s={s} r={r:?}: equality without the forced shape"));
                }
            }
        }
    }
    Ok(checked)
}

/// `-p (t_s + 1) <= n_0 - s` for every `s`.
pub fn final_bound_holds(shape: &Shape) -> std::result::Result<(), String> {
    let (p, n0) = (shape.p() as i64, shape.n0() as i64);
    for (i, &ts) in t_table(shape).iter().enumerate() {
        let s = i as i64 + 1;
        if -p * (ts + 1) > n0 - s {
            return Err(format!("{shape:?} s={s}: -{p}({ts}+1) > {n0}-{s}"));
        }
    }
    Ok(())
}
