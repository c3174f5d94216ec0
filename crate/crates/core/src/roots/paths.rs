//! Weighted paths `N_{w,r}` over permutations and the case analysis for
//! vectors `k` that controls vanishing of `Q(d|u;k)`.

use crate::error::{Error, Result};

/// Which block `R_0..R_p` the value `x` (1-based) falls in.
fn block(r: &[usize], x: usize) -> usize {
    let mut acc = 0;
    for (i, &ri) in r.iter().enumerate() {
        acc += ri;
        if x <= acc {
            return i;
        }
    }
    usize::MAX
}

/// 1 when `x` and `y` lie in a common `R_l` with `l >= 1`; 0 is in no block.
pub fn same_decorated(r: &[usize], x: usize, y: usize) -> bool {
    if x == 0 || y == 0 {
        return false;
    }
    let bx = block(r, x);
    bx >= 1 && bx == block(r, y)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWeight {
    pub w: Vec<usize>,
    pub r: Vec<usize>,
    pub e: Vec<u8>,
    pub total: usize,
}

fn check_perm(w: &[usize]) -> Result<()> {
    let s = w.len();
    let mut seen = vec![false; s + 1];
    for &x in w {
        if x == 0 || x > s || seen[x] {
            return Err(Error::Precondition(format!("{w:?} is not a permutation of 1..{s}")));
        }
        seen[x] = true;
    }
    Ok(())
}

/// Step weights `e_j = [w(j-1) < w(j)] + [w(j-1), w(j) share a decorated block]`.
pub fn path_weight(w: &[usize], r: &[usize]) -> Result<PathWeight> {
    let s: usize = r.iter().sum();
    if w.len() != s {
        return Err(Error::ArityMismatch(w.len(), s));
    }
    check_perm(w)?;
    let e: Vec<u8> = (0..s)
        .map(|j| {
            let prev = if j == 0 { 0 } else { w[j - 1] };
            (prev < w[j]) as u8 + same_decorated(r, prev, w[j]) as u8
        })
        .collect();
    let total = e.iter().map(|&x| x as usize).sum();
    Ok(PathWeight { w: w.to_vec(), r: r.to_vec(), e, total })
}

/// Interleave block maxima from `R_p` down to `R_0`, then second maxima, and so on.
pub fn min_weight_witness(r: &[usize]) -> Result<(Vec<usize>, usize)> {
    let mut starts = Vec::with_capacity(r.len());
    let mut acc = 0;
    for &ri in r {
        starts.push(acc);
        acc += ri;
    }
    let rounds = r.iter().copied().max().unwrap_or(0);
    let mut w = Vec::with_capacity(acc);
    for m in 0..rounds {
        for i in (0..r.len()).rev() {
            if r[i] > m {
                w.push(starts[i] + r[i] - m);
            }
        }
    }
    let pw = path_weight(&w, r)?;
    Ok((w, pw.total))
}

/// Visit every permutation of `1..=s` in lexicographic order.
pub fn for_each_permutation(s: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut w: Vec<usize> = (1..=s).collect();
    loop {
        if !f(&w) {
            return;
        }
        // next permutation
        let Some(i) = (1..s).rev().find(|&i| w[i - 1] < w[i]) else { return };
        let j = (i..s).rev().find(|&j| w[j] > w[i - 1]).unwrap();
        w.swap(i - 1, j);
        w[i..].reverse();
    }
}

/// Minimum of `N_{w,r}` over all permutations.
pub fn exhaustive_min_weight(r: &[usize]) -> usize {
    let s: usize = r.iter().sum();
    let mut best = usize::MAX;
    for_each_permutation(s, |w| {
        best = best.min(path_weight(w, r).expect("valid permutation").total);
        true
    });
    best
}

/// Checks both lower bounds for every permutation: the total is at least
/// `max(r_1..r_p)`, and dropping any single step loses at most one.
pub fn lower_bounds_hold(r: &[usize]) -> std::result::Result<(), String> {
    let s: usize = r.iter().sum();
    let m = r[1..].iter().copied().max().unwrap_or(0);
    let mut err = None;
    for_each_permutation(s, |w| {
        let pw = path_weight(w, r).expect("valid permutation");
        if pw.total < m {
            err = Some(format!("N = {} < {m} for w = {w:?}, r = {r:?}", pw.total));
            return false;
        }
        for (i, &ei) in pw.e.iter().enumerate() {
            if pw.total - (ei as usize) + 1 < m {
                err = Some(format!("leave-one-out fails at step {} for w = {w:?}, r = {r:?}", i + 1));
                return false;
            }
        }
        true
    });
    err.map_or(Ok(()), Err)
}

/// Which alternative of the case analysis holds for a vector `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KeyCase {
    /// `1 <= k_i <= b`.
    Small { i: usize },
    /// `-c <= k_i - k_j <= c - 1` with `i, j` not in a common decorated block.
    Cross { i: usize, j: usize },
    /// `-c - 1 <= k_i - k_j <= c` with `i, j` in a common decorated block.
    Same { i: usize, j: usize },
    /// A permutation with slack vector `d` satisfying the chain conditions.
    Path { w: Vec<usize>, d: Vec<i64> },
}

impl KeyCase {
    pub fn number(&self) -> u8 {
        match self {
            KeyCase::Small { .. } => 1,
            KeyCase::Cross { .. } => 2,
            KeyCase::Same { .. } => 3,
            KeyCase::Path { .. } => 4,
        }
    }
}

/// First applicable case in the order 1, 2, 3, 4; `k` and witnesses use 1-based indices.
pub fn lemma_key_classify(k: &[i64], b: i64, c: i64, t: i64, r: &[usize]) -> Result<KeyCase> {
    let s = k.len();
    if r.iter().sum::<usize>() != s {
        return Err(Error::ArityMismatch(r.iter().sum(), s));
    }
    let bound = (s as i64 - 1) * c + b + t;
    if let Some(x) = k.iter().find(|&&x| x < 1 || x > bound) {
        return Err(Error::Precondition(format!("k entry {x} outside [1, {bound}]")));
    }
    if let Some(i) = k.iter().position(|&x| x <= b) {
        return Ok(KeyCase::Small { i: i + 1 });
    }
    for i in 1..=s {
        for j in i + 1..=s {
            let diff = k[i - 1] - k[j - 1];
            if !same_decorated(r, i, j) && -c <= diff && diff <= c - 1 {
                return Ok(KeyCase::Cross { i, j });
            }
        }
    }
    for i in 1..=s {
        for j in i + 1..=s {
            let diff = k[i - 1] - k[j - 1];
            if same_decorated(r, i, j) && -c - 1 <= diff && diff <= c {
                return Ok(KeyCase::Same { i, j });
            }
        }
    }
    let rmax = r.get(1..).and_then(|x| x.iter().max()).copied().unwrap_or(0) as i64;
    let mut found = None;
    for_each_permutation(s, |w| {
        let mut d = Vec::with_capacity(s);
        let mut sum = 0i64;
        for j in 0..s {
            let prev = if j == 0 { 0 } else { w[j - 1] };
            let chi = same_decorated(r, prev, w[j]) as i64;
            let dj = if j == 0 { k[w[0] - 1] - b } else { k[w[j] - 1] - k[w[j - 1] - 1] - c - chi };
            if dj < 0 || (prev < w[j] && dj == 0) {
                return true;
            }
            sum += chi + dj;
            d.push(dj);
        }
        if rmax <= sum && sum <= t {
            found = Some(KeyCase::Path { w: w.to_vec(), d });
            return false;
        }
        true
    });
    found.ok_or_else(|| Error::OutOfContract(format!("no case applies to k = {k:?}, b = {b}, c = {c}, t = {t}, r = {r:?}")))
}

/// All weak compositions of `s` into `parts` parts.
pub fn weak_compositions(s: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if s == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=s {
        for mut rest in weak_compositions(s - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
