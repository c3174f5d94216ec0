//! Named verification suites over fixed parameter grids, with JSON-ready
//! reports and a deterministic time budget.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closedform::{
    bf_p1_rhs, bf_rhs, bf_rhs_all_paths, compositions, dn0_rhs, kadell_rhs, qbinomial_theorem, qdyson_rhs, qmorris_rhs,
    qsum_identity, rec_dn_identity, BFParams,
};
use crate::error::Result;
use crate::gxseries::{
    applicable_branches, block_counts, k_vectors, lemq_checks, q3_pipeline, subsets, LemQSummary,
};
use crate::laurent::{ExpVec, FactorProduct};
use crate::products::{bf_factors, kadell_factors, kadell_h, qdyson_factors, qmorris_factors, Shape};
use crate::qring::{QFrac, QLaurent};
use crate::roots::{
    interpolate_dn, lemma_key_classify, lower_bounds_hold, min_weight_witness, path_weight, verify_roots,
    weak_compositions,
};
use crate::splitting::{poch_identities, vanishing_check, verify_split, verify_split_randomized};

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 13] = [
    "qdyson",
    "qmorris",
    "bf-recursion",
    "p1-formula",
    "roots",
    "dn0",
    "splitting",
    "poch-identities",
    "qsum",
    "vanishing",
    "lemma-key",
    "gx-pipeline",
    "kadell",
];

/// Estimated cost of a case is in seconds on one core; only used to decide,
/// deterministically, which cases a budget drops.
const UNITS_PER_SECOND: f64 = 4e8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exact,
    RandomizedSubstitution,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub params: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub grid: String,
    pub cases: Vec<CaseReport>,
    pub elapsed_ms: u64,
    pub mode: Mode,
    /// Cases dropped by the time budget, largest first.
    #[serde(default)]
    pub skipped: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseReport> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }
}

/// Grid overrides and the time budget.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub max_seconds: Option<f64>,
    pub seed: u64,
    pub shape: Option<Shape>,
    pub a: Option<Vec<usize>>,
    pub b: Option<usize>,
    pub c: Option<usize>,
    /// Report `elapsed_ms = 0`, for byte-identical output.
    pub no_timing: bool,
}

impl SuiteOptions {
    fn shapes(&self, default: &[&str]) -> Vec<Shape> {
        match &self.shape {
            Some(s) => vec![s.clone()],
            None => default.iter().map(|s| s.parse().expect("valid default shape")).collect(),
        }
    }

    fn a_range(&self, max: usize) -> Vec<usize> {
        match &self.a {
            Some(a) => vec![a[0]],
            None => (0..=max).collect(),
        }
    }

    fn b_range(&self, max: usize) -> Vec<usize> {
        self.b.map_or_else(|| (0..=max).collect(), |b| vec![b])
    }

    fn c_range(&self, max: usize) -> Vec<usize> {
        self.c.map_or_else(|| (0..=max).collect(), |c| vec![c])
    }
}

/// Result of one case: `Ok(randomized)` or a witness of failure.
type Outcome = std::result::Result<bool, String>;

struct Case {
    params: String,
    cost: f64,
    mandatory: bool,
    run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

impl Case {
    fn new(params: String, cost: f64, run: impl Fn() -> Outcome + Send + Sync + 'static) -> Self {
        Self { params, cost, mandatory: false, run: Box::new(run) }
    }

    fn mandatory(mut self, yes: bool) -> Self {
        self.mandatory = yes;
        self
    }
}

fn exact(ok: bool, witness: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(false)
    } else {
        Err(witness())
    }
}

fn err_str<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Rough cost of a constant-term extraction in seconds.
fn ct_cost(fp: &FactorProduct) -> f64 {
    let l = fp.linear_count().max(1) as f64;
    l.powi(fp.arity.saturating_sub(1) as i32).max(l) / UNITS_PER_SECOND
}

fn brute(fp: &FactorProduct) -> std::result::Result<QFrac, String> {
    Ok(err_str(fp.ct::<QLaurent>())?.into())
}

fn product_grid(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out.into_iter().flat_map(|v| (0..=max).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

fn qdyson_cases(o: &SuiteOptions) -> (String, Vec<Case>) {
    let grid = match &o.a {
        Some(a) => vec![a.clone()],
        None => product_grid(3, 3).into_iter().chain(product_grid(4, 2)).collect(),
    };
    let cases = grid
        .into_iter()
        .map(|a| {
            let fp = qdyson_factors(&a);
            Case::new(format!("a={a:?}"), ct_cost(&fp), move || {
                let lhs = brute(&fp)?;
                let rhs = qdyson_rhs(&a);
                exact(lhs == rhs && rhs.is_laurent(), || format!("ct = {lhs}, closed form = {rhs}"))
            })
        })
        .collect();
    ("a in {0..3}^3 and {0..2}^4".into(), cases)
}

fn qmorris_cases(o: &SuiteOptions) -> (String, Vec<Case>) {
    let ns: Vec<usize> = o.shape.as_ref().map_or_else(|| vec![1, 2, 3], |s| vec![s.n()]);
    let mut cases = Vec::new();
    for &n in &ns {
        for a in o.a_range(2) {
            for b in o.b_range(2) {
                for c in o.c_range(2) {
                    let Ok(fp) = qmorris_factors(n, a, b, c) else { continue };
                    cases.push(Case::new(format!("n={n},a={a},b={b},c={c}"), ct_cost(&fp), move || {
                        let lhs = brute(&fp)?;
                        let rhs = err_str(qmorris_rhs(n, a, b, c))?;
                        exact(lhs == rhs && rhs.is_laurent(), || format!("ct = {lhs}, closed form = {rhs}"))
                    }));
                }
            }
        }
    }
    ("n in {1,2,3}, a,b,c in {0,1,2}".into(), cases)
}

const BF_SHAPES: [&str; 6] = ["1,1", "1,2", "2,2", "1,1,1", "1,2,2", "2,3"];

fn must_keep(shape: &Shape) -> bool {
    matches!(shape.parts(), [1, 2] | [1, 1, 1])
}

fn bf_cases(o: &SuiteOptions) -> (String, Vec<Case>) {
    let mut cases = Vec::new();
    for shape in o.shapes(&BF_SHAPES) {
        for a in o.a_range(2) {
            for b in o.b_range(2) {
                for c in o.c_range(2) {
                    let fp = bf_factors(&shape, a, b, c);
                    let sh = shape.clone();
                    let keep = must_keep(&shape);
                    cases.push(
                        Case::new(format!("shape={shape},a={a},b={b},c={c}"), ct_cost(&fp), move || {
                            let p = BFParams::new(sh.clone(), a, b, c);
                            let lhs = brute(&fp)?;
                            let rhs = err_str(bf_rhs(&p))?;
                            if lhs != rhs {
                                return Err(format!("ct = {lhs}, recursion = {rhs}"));
                            }
                            let paths = err_str(bf_rhs_all_paths(&p))?;
                            if paths != [rhs.clone()] {
                                return Err(format!("{} distinct values over tie-breaks", paths.len()));
                            }
                            if b == 0 {
                                let base = err_str(bf_rhs(&BFParams::new(sh.clone(), 0, 0, c)))?;
                                if base != rhs {
                                    return Err(format!("b = 0 value depends on a: {rhs} vs {base}"));
                                }
                            }
                            exact(rhs.is_laurent(), || format!("recursion value {rhs} is not a polynomial"))
                        })
                        .mandatory(keep),
                    );
                }
            }
        }
    }
    (format!("shapes {BF_SHAPES:?}, a,b,c in {{0,1,2}}"), cases)
}

fn p1_cases(o: &SuiteOptions) -> (String, Vec<Case>) {
    let mut cases = Vec::new();
    for shape in o.shapes(&BF_SHAPES).into_iter().filter(|s| s.p() == 1) {
        for a in o.a_range(2) {
            for b in o.b_range(2) {
                for c in o.c_range(2) {
                    let fp = bf_factors(&shape, a, b, c);
                    let sh = shape.clone();
                    cases.push(Case::new(format!("shape={shape},a={a},b={b},c={c}"), ct_cost(&fp), move || {
                        let p1 = err_str(bf_p1_rhs(sh.part(0), sh.part(1), a, b, c))?;
                        let rec = err_str(bf_rhs(&BFParams::new(sh.clone(), a, b, c)))?;
                        let lhs = brute(&fp)?;
                        exact(p1 == rec && rec == lhs, || format!("product = {p1}, recursion = {rec}, ct = {lhs}"))
                    }));
                }
            }
        }
    }
    ("two-block shapes of the bf-recursion grid".into(), cases)
}

fn roots_cases(o: &SuiteOptions) -> (String, Vec<Case>) {
    let mut cases = Vec::new();
    for shape in o.shapes(&BF_SHAPES) {
        for b in o.b_range(2) {
            for c in o.c_range(2) {
                if c < b && o.b.is_none() {
                    continue;
                }
                let nb = shape.n() * b;
                let cost: f64 = (0..=nb + 1).map(|a| ct_cost(&bf_factors(&shape, a, b, c))).sum();
                let sh = shape.clone();
                cases.push(Case::new(format!("shape={shape},b={b},c={c}"), cost, move || {
                    let r = err_str(verify_roots(&sh, b, c))?;
                    let full = r.degree.is_some_and(|d| d <= nb) && (!r.simple_regime || r.disjoint);
                    exact(r.passed() && full, || format!("{r:?}"))
                }));
            }
        }
    }
    ("bf-recursion shapes, b,c in {0,1,2}, c >= b".into(), cases)
}

fn dn0_cases(o: &SuiteOptions) -> (String, Vec<Case>) {
    let shapes: Vec<Shape> = match &o.shape {
        Some(s) => vec![s.clone()],
        None => (1..=5).flat_map(compositions).map(|c| Shape::new(c).expect("positive parts")).collect(),
    };
    let mut cases = Vec::new();
    for shape in shapes {
        for c in o.c_range(3) {
            let fp = bf_factors(&shape, 0, 0, c);
            let sh = shape.clone();
            cases.push(Case::new(format!("shape={shape},c={c}"), ct_cost(&fp), move || {
                let rhs = err_str(dn0_rhs(&sh, c))?;
                let lhs = brute(&fp)?;
                let rec = err_str(bf_rhs(&BFParams::new(sh.clone(), 0, 0, c)))?;
                if lhs != rhs || rec != rhs {
                    return Err(format!("ct = {lhs}, iteration = {rhs}, recursion = {rec}"));
                }
                for k in sh.maximal_blocks() {
                    let id = err_str(rec_dn_identity(&sh, k, c))?;
                    if !id.holds() {
                        return Err(format!("scalar identity at k = {k}: {} vs {}", id.lhs, id.rhs));
                    }
                }
                Ok(false)
            }));
        }
    }
    ("all shapes with n <= 5, c <= 3".into(), cases)
}

fn splitting_cases(o: &SuiteOptions) -> (String, Vec<Case>) {
    let mut cases = Vec::new();
    for shape in o.shapes(&["1,1", "1,2", "2,2", "1,1,1"]) {
        for c in o.c_range(2) {
            let sh = shape.clone();
            let seed = o.seed;
            let exact_ok = shape.n() <= 4 && c <= 2;
            let cost = (shape.n() as f64).powi(4) * ((c + 1) as f64).powi(3) / 200.0;
            cases.push(Case::new(format!("shape={shape},c={c}"), cost, move || {
                let r = if exact_ok {
                    err_str(verify_split(&sh, c))?
                } else {
                    err_str(verify_split_randomized(&sh, c, 8, seed))?
                };
                let oracle = !exact_ok || r.residues_match == Some(true);
                if r.passed() && oracle {
                    Ok(r.method != "exact")
                } else {
                    Err(format!("{r:?}"))
                }
            }));
        }
    }
    ("shapes (1,1), (1,2), (2,2), (1,1,1), c in {0,1,2}".into(), cases)
}

fn poch_cases(_: &SuiteOptions) -> (String, Vec<Case>) {
    let case = Case::new("i,j <= 3".into(), 0.05, || poch_identities(3, 3).map(|_| false));
    ("all five transformations, i,j <= 3, every shift".into(), vec![case])
}

fn qsum_cases(_: &SuiteOptions) -> (String, Vec<Case>) {
    let mut cases = Vec::new();
    for n in 0..=8 {
        for t in 0..=n {
            cases.push(Case::new(format!("sum n={n},t={t}"), 1e-4, move || {
                let id = qsum_identity(n, t);
                exact(id.holds(), || format!("{} vs {}", id.lhs, id.rhs))
            }));
        }
    }
    for t in 0..=8 {
        cases.push(Case::new(format!("binomial t={t}"), 1e-4, move || {
            let (l, r) = qbinomial_theorem(t);
            exact(l == r, || format!("{l:?} vs {r:?}"))
        }));
    }
    ("t <= n <= 8; binomial theorem t <= 8".into(), cases)
}

/// Parameter tuples `(h, t)` meeting the vanishing preconditions, with the
/// total weight of `t` at most `wmax`.
pub fn vanishing_family(shape: &Shape, wmax: usize) -> Vec<(Vec<i64>, Vec<usize>)> {
    let (n, n0, p) = (shape.n(), shape.n0(), shape.p());
    if p == 0 || n0 < 2 || n0 > n - 1 {
        return Vec::new();
    }
    let span: Vec<i64> = (-1..n0 as i64).collect();
    let mut hs: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..p {
        hs = hs.into_iter().flat_map(|h| span.iter().map(move |&x| [h.clone(), vec![x]].concat())).collect();
    }
    let mut out = Vec::new();
    for h in hs {
        if h.iter().sum::<i64>() > n0 as i64 - 1 {
            continue;
        }
        let w: i64 = (1..=p).map(|u| h[u - 1] * shape.part(u) as i64).sum::<i64>() - n0 as i64;
        if w < 0 || w as usize > wmax {
            continue;
        }
        for t in weak_compositions(w as usize, n) {
            out.push((h.clone(), t));
        }
    }
    out
}

fn vanishing_cases(o: &SuiteOptions) -> (String, Vec<Case>) {
    let mut cases = Vec::new();
    if o.shape.is_none() {
        for c in o.c_range(3).into_iter().filter(|&c| c >= 1) {
            cases.push(
                Case::new(format!("base shape=2,2,h=[1],c={c}"), 1e-3, move || {
                    let v = err_str(vanishing_check(&"2,2".parse().expect("shape"), &[1], &[0; 4], c))?;
                    exact(v.is_zero(), || format!("coefficient {v}"))
                })
                .mandatory(true),
            );
        }
    }
    let shapes: Vec<Shape> = match &o.shape {
        Some(s) => vec![s.clone()],
        None => (4..=5).flat_map(compositions).map(|c| Shape::new(c).expect("positive parts")).collect(),
    };
    for shape in shapes {
        for c in o.c_range(2).into_iter().filter(|&c| c >= 1) {
            let fam = vanishing_family(&shape, 2);
            if fam.is_empty() {
                continue;
            }
            let cost = fam.len() as f64 * ct_cost(&crate::products::pair_factors(&shape, c));
            let sh = shape.clone();
            cases.push(Case::new(format!("family shape={shape},c={c},members={}", fam.len()), cost, move || {
                for (h, t) in &fam {
                    let v = err_str(vanishing_check(&sh, h, t, c))?;
                    if !v.is_zero() {
                        return Err(format!("h={h:?} t={t:?}: coefficient {v}"));
                    }
                }
                Ok(false)
            }));
        }
    }
    ("base case (2,2) c <= 3; every admissible (h, t) with |t| <= 2 on shapes n in {4,5}, c <= 2".into(), cases)
}

fn lemma_key_cases(o: &SuiteOptions) -> (String, Vec<Case>) {
    let mut cases = Vec::new();
    for s in 1..=4usize {
        for p in 0..=2usize {
            for b in o.b_range(2) {
                for c in o.c_range(2) {
                    let bound = (s as i64 - 1) * c as i64 + b as i64 + 2;
                    let cost = 3.0 * (bound.max(1) as f64).powi(s as i32) * 24.0 / UNITS_PER_SECOND * 100.0;
                    cases.push(Case::new(format!("classify s={s},p={p},b={b},c={c},t<=2"), cost, move || {
                        for t in 0..=2i64 {
                            let top = (s as i64 - 1) * c as i64 + b as i64 + t;
                            if top < 1 {
                                continue;
                            }
                            for r in weak_compositions(s, p + 1) {
                                for k in k_vectors(s, top as usize) {
                                    if let Err(e) = lemma_key_classify(&k, b as i64, c as i64, t, &r) {
                                        return Err(format!("t={t} r={r:?} k={k:?}: {e}"));
                                    }
                                }
                            }
                        }
                        Ok(false)
                    }));
                }
            }
        }
    }
    for s in 1..=7usize {
        let cost = (1..=s).product::<usize>() as f64 * 40.0 / 1e6;
        cases.push(Case::new(format!("path weights s={s}"), cost, move || {
            for parts in 1..=3 {
                for r in weak_compositions(s, parts) {
                    lower_bounds_hold(&r)?;
                    let (_, m) = err_str(min_weight_witness(&r))?;
                    let rmax = r[1..].iter().copied().max().unwrap_or(0);
                    if m < rmax {
                        return Err(format!("witness weight {m} below {rmax} for r={r:?}"));
                    }
                }
            }
            Ok(false)
        }));
    }
    cases.push(
        Case::new("worked examples".into(), 1e-4, || {
            let a = err_str(path_weight(&[9, 10, 3, 5, 6, 8, 4, 2, 7, 1], &[3, 3, 4]))?;
            let b = err_str(path_weight(&[10, 6, 3, 9, 5, 2, 8, 4, 1, 7], &[3, 3, 4]))?;
            exact(a.total == 8 && a.e == [1, 2, 0, 1, 2, 1, 0, 0, 1, 0] && b.total == 4, || {
                format!("N = {} and {}", a.total, b.total)
            })
        })
        .mandatory(true),
    );
    ("s <= 4, p <= 2, b,c,t <= 2, every k; path weights s <= 7".into(), cases)
}

fn summary_witness(sum: &LemQSummary) -> String {
    format!(
        "{} cases, per property {:?}, uncovered {}; first failure {:?}",
        sum.cases,
        sum.per_branch,
        sum.uncovered,
        sum.failures.first()
    )
}

fn gx_cases(o: &SuiteOptions) -> (String, Vec<Case>) {
    let mut cases = Vec::new();
    let shape: Shape = o.shape.clone().unwrap_or_else(|| "1,2".parse().expect("shape"));
    let (b, c) = (o.b.unwrap_or(1), o.c.unwrap_or(1));
    for d in 1..=5usize {
        let sh = shape.clone();
        cases.push(
            Case::new(format!("properties shape={shape},b={b},c={c},d={d}"), 0.01 * d as f64, move || {
                let mut sum = LemQSummary::default();
                for s in 0..=sh.n() {
                    for u in subsets(sh.n(), s) {
                        for k in k_vectors(s, d) {
                            let rep = err_str(lemq_checks(&sh, b, c, d, &u, &k))?;
                            sum.cases += 1;
                            for &br in &rep.branches {
                                sum.per_branch[br as usize - 1] += 1;
                            }
                            if !rep.passed() {
                                sum.failures.push(rep);
                            }
                        }
                    }
                }
                exact(sum.passed(), || summary_witness(&sum))
            })
            .mandatory(true),
        );
    }
    let pipe: Shape = "1,1".parse().expect("shape");
    for d in 1..=4usize {
        let sh = pipe.clone();
        cases.push(
            Case::new(format!("pipeline shape=1,1,b=1,c=1,d={d}"), 0.01, move || {
                let poly = err_str(interpolate_dn(&sh, 1, 1))?;
                let want = poly.eval(&QFrac::q_pow(-(d as i64)));
                let (got, stats) = err_str(q3_pipeline(&sh, 1, 1, d))?;
                exact(got == want, || format!("pipeline {got} ({stats:?}) vs interpolation {want}"))
            })
            .mandatory(true),
        );
    }
    // the Laurent route never fires on small shapes; exercise it on a large block
    let big: Shape = "1,1,4".parse().expect("shape");
    for (bb, cc) in [(0usize, 1usize), (1, 1), (1, 2)] {
        let sh = big.clone();
        cases.push(Case::new(format!("laurent route shape=1,1,4,b={bb},c={cc}"), 2.0, move || {
            let mut seen = 0;
            for s in 1..sh.n() {
                for u in subsets(sh.n(), s) {
                    let r = block_counts(&sh, &u);
                    for d in 1..=s * cc + 3 {
                        if !applicable_branches(&sh, bb, cc, d, &r).contains(&3) {
                            continue;
                        }
                        for k in k_vectors(s, d) {
                            let rep = err_str(lemq_checks(&sh, bb, cc, d, &u, &k))?;
                            if !rep.passed() {
                                return Err(format!("{rep:?}"));
                            }
                            seen += 1;
                        }
                    }
                }
            }
            exact(seen > 0, || "no case in the Laurent range".into())
        }));
    }
    (format!("properties on {shape} b={b} c={c} d <= 5; pipeline on (1,1) d <= 4; Laurent route on (1,1,4)"), cases)
}

fn kadell_cases(o: &SuiteOptions) -> (String, Vec<Case>) {
    let grids: Vec<Vec<usize>> = match &o.a {
        Some(a) => vec![a.clone()],
        None => (1..=3).flat_map(|n| product_grid(n, 2)).collect(),
    };
    let mut cases = Vec::new();
    for a in grids {
        for r in 1..=2usize {
            let fp = kadell_factors(&a);
            let cost = ct_cost(&fp) * weak_compositions(r, a.len()).len() as f64;
            let a2 = a.clone();
            cases.push(Case::new(format!("a={a:?},r={r}"), cost, move || {
                let h = err_str(kadell_h::<QLaurent>(r, &a2))?;
                for v in weak_compositions(r, a2.len()) {
                    let target = ExpVec::from_slice(&v.iter().map(|&x| x as i32).collect::<Vec<_>>());
                    let lhs: QFrac = err_str(fp.coeff(Some(&h), &target))?.into();
                    let rhs = err_str(kadell_rhs(&v, r, &a2))?;
                    if lhs != rhs {
                        return Err(format!("v={v:?}: ct = {lhs}, formula = {rhs}"));
                    }
                }
                Ok(false)
            }));
        }
    }
    ("n <= 3, a in {0,1,2}^n, r <= 2, every v with |v| = r".into(), cases)
}

fn cases_for(name: &str, o: &SuiteOptions) -> Option<(String, Vec<Case>)> {
    Some(match name {
        "qdyson" => qdyson_cases(o),
        "qmorris" => qmorris_cases(o),
        "bf-recursion" => bf_cases(o),
        "p1-formula" => p1_cases(o),
        "roots" => roots_cases(o),
        "dn0" => dn0_cases(o),
        "splitting" => splitting_cases(o),
        "poch-identities" => poch_cases(o),
        "qsum" => qsum_cases(o),
        "vanishing" => vanishing_cases(o),
        "lemma-key" => lemma_key_cases(o),
        "gx-pipeline" => gx_cases(o),
        "kadell" => kadell_cases(o),
        _ => return None,
    })
}

/// Indices of cases kept under a budget: optional cases are dropped from the
/// most expensive end until the estimate fits.
fn within_budget(cases: &[Case], max_seconds: Option<f64>) -> Vec<bool> {
    let mut keep = vec![true; cases.len()];
    let Some(budget) = max_seconds else { return keep };
    let mut total: f64 = cases.iter().map(|c| c.cost).sum();
    let mut order: Vec<usize> = (0..cases.len()).filter(|&i| !cases[i].mandatory).collect();
    // largest first; ties broken by grid position, last first
    order.sort_by(|&i, &j| cases[j].cost.total_cmp(&cases[i].cost).then(j.cmp(&i)));
    for i in order {
        if total <= budget {
            break;
        }
        keep[i] = false;
        total -= cases[i].cost;
    }
    keep
}

/// Runs a suite over its grid; `None` for an unknown name.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Option<SuiteReport> {
    let (grid, cases) = cases_for(name, opts)?;
    let start = Instant::now();
    let keep = within_budget(&cases, opts.max_seconds);
    let results: Vec<Option<Outcome>> =
        cases.par_iter().zip(keep.par_iter()).map(|(c, &k)| k.then(|| (c.run)())).collect();
    let mut randomized = false;
    let mut out = Vec::new();
    let mut skipped = Vec::new();
    for (c, r) in cases.iter().zip(results) {
        match r {
            None => skipped.push(c.params.clone()),
            Some(Ok(rnd)) => {
                randomized |= rnd;
                out.push(CaseReport { params: c.params.clone(), status: Status::Pass, witness: None });
            }
            Some(Err(w)) => out.push(CaseReport { params: c.params.clone(), status: Status::Fail, witness: Some(w) }),
        }
    }
    let elapsed_ms = if opts.no_timing { 0 } else { start.elapsed().as_millis() as u64 };
    Some(SuiteReport {
        suite: name.into(),
        grid,
        cases: out,
        elapsed_ms,
        mode: if randomized { Mode::RandomizedSubstitution } else { Mode::Exact },
        skipped,
    })
}

/// What each suite establishes, for the summary table.
pub fn suite_subject(name: &str) -> &'static str {
    match name {
        "qdyson" => "q-Dyson constant term",
        "qmorris" => "q-Morris constant term",
        "bf-recursion" => "block recursion for D_n(a)",
        "p1-formula" => "closed product for two blocks",
        "roots" => "roots of D_n(a) in q^a",
        "dn0" => "recursion for D_n(0) and its scalar identity",
        "splitting" => "splitting formula and its coefficients",
        "poch-identities" => "Pochhammer transformations",
        "qsum" => "q-sum identity and q-binomial theorem",
        "vanishing" => "vanishing coefficients of the pair product",
        "lemma-key" => "case analysis for k and path weights",
        "gx-pipeline" => "partial-fraction elimination of Q(d)",
        "kadell" => "Kadell's formula for one-row partitions",
        _ => "unknown suite",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub suite: String,
    pub subject: String,
    pub cases: usize,
    pub failed: usize,
    pub skipped: usize,
    pub mode: Mode,
    pub green: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub green: bool,
    pub suites: Vec<SummaryRow>,
}

/// Merges reports, sorted by suite name; green when every suite is.
pub fn summarize(reports: &[SuiteReport]) -> Summary {
    let mut rows: Vec<SummaryRow> = reports
        .iter()
        .map(|r| {
            let first = r.failures().next();
            SummaryRow {
                suite: r.suite.clone(),
                subject: suite_subject(&r.suite).into(),
                cases: r.cases.len(),
                failed: r.failures().count(),
                skipped: r.skipped.len(),
                mode: r.mode,
                green: r.passed(),
                witness: first.map(|c| {
                    let w: String = c.witness.as_deref().unwrap_or("").chars().take(200).collect();
                    format!("{}: {w}", c.params)
                }),
            }
        })
        .collect();
    rows.sort_by(|a, b| a.suite.cmp(&b.suite));
    Summary { green: rows.iter().all(|r| r.green), suites: rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(name: &str) -> SuiteReport {
        run_suite(name, &SuiteOptions { no_timing: true, ..Default::default() }).unwrap()
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteOptions::default()).is_none());
    }

    #[test]
    fn small_suites_are_green() {
        for name in ["qsum", "poch-identities", "qdyson", "kadell"] {
            let r = quick(name);
            assert!(r.passed(), "{:?}", r.failures().next());
            assert_eq!(r.mode, Mode::Exact);
            assert!(r.skipped.is_empty());
        }
    }

    #[test]
    fn budget_drops_largest_optional_cases() {
        let opts = SuiteOptions { max_seconds: Some(0.0), no_timing: true, ..Default::default() };
        let r = run_suite("bf-recursion", &SuiteOptions { shape: Some("2,3".parse().unwrap()), ..opts.clone() }).unwrap();
        assert!(r.cases.is_empty());
        assert_eq!(r.skipped.len(), 27);
        // mandatory shapes survive any budget
        let r = run_suite("bf-recursion", &SuiteOptions { shape: Some("1,2".parse().unwrap()), ..opts }).unwrap();
        assert_eq!(r.cases.len(), 27);
        assert!(r.passed());
    }

    #[test]
    fn overrides_narrow_the_grid() {
        let o = SuiteOptions { shape: Some("1,2".parse().unwrap()), b: Some(1), c: Some(1), ..Default::default() };
        let r = run_suite("roots", &o).unwrap();
        assert_eq!(r.cases.len(), 1);
        assert!(r.passed());
        let o = SuiteOptions { shape: Some("1,1".parse().unwrap()), c: Some(0), ..Default::default() };
        let r = run_suite("splitting", &o).unwrap();
        assert_eq!(r.cases.len(), 1);
        assert!(r.passed());
    }

    #[test]
    fn summary_colours() {
        assert_eq!(summarize(&[]), Summary { green: true, suites: vec![] });
        let g = quick("qsum");
        let mut red = quick("poch-identities");
        red.cases[0] = CaseReport { params: "x".into(), status: Status::Fail, witness: Some("boom".into()) };
        let s = summarize(&[g.clone(), g.clone()]);
        assert!(s.green);
        let s = summarize(&[g, red]);
        assert!(!s.green);
        let row = s.suites.iter().find(|r| !r.green).unwrap();
        assert_eq!(row.witness.as_deref(), Some("x: boom"));
    }

    #[test]
    fn vanishing_family_respects_preconditions() {
        let shape: Shape = "2,2,1".parse().unwrap();
        for (h, t) in vanishing_family(&shape, 2) {
            assert!(h.iter().sum::<i64>() <= 1);
            assert!(vanishing_check(&shape, &h, &t, 1).is_ok());
        }
        assert!(vanishing_family(&"1,3".parse().unwrap(), 2).is_empty());
    }
}
