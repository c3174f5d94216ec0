//! The `t_s` thresholds and the predicted root rows of `D_n(a)`.

use std::collections::BTreeSet;
use std::fmt;

use crate::products::Shape;

/// `t_1, ..., t_n` (index 0 holds `t_1`).
pub fn t_table(shape: &Shape) -> Vec<i64> {
    let n = shape.n() as i64;
    let p = shape.p() as i64;
    let n0 = shape.n0() as i64;
    let w: Vec<i64> = shape.sorted_decorated().into_iter().map(|x| x as i64).collect();
    // nw[j] = n_{w_j} with n_{w_0} = 1
    let nw = |j: i64| if j == 0 { 1 } else { w[(j - 1) as usize] };
    let suffix = |from: i64| (from..=p).map(nw).sum::<i64>();
    let mut t = vec![0i64; n as usize];
    for j in 1..=p {
        let lo = n - suffix(j) + (p - j + 1) * nw(j - 1) + 1;
        let hi = n - suffix(j + 1) + (p - j) * nw(j);
        let head: i64 = (1..j).map(nw).sum();
        for s in lo.max(1)..=hi.min(n) {
            t[(s - 1) as usize] = (s - n0 - head - 1).div_euclid(p - j + 1);
        }
    }
    t
}

/// One row `{ic + off + 1, ..., ic + off + b}` of the root table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootRow {
    pub i: usize,
    pub class: usize,
    pub offset: i64,
    pub elems: Vec<i64>,
}

/// All rows `R_i^j` for `i = 0..n-1`; empty when `b = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootTable {
    pub rows: Vec<RootRow>,
}

impl RootTable {
    /// Every element with multiplicity.
    pub fn multiset(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.rows.iter().flat_map(|r| r.elems.iter().copied()).collect();
        v.sort_unstable();
        v
    }

    pub fn distinct(&self) -> BTreeSet<i64> {
        self.rows.iter().flat_map(|r| r.elems.iter().copied()).collect()
    }

    /// True when no element repeats.
    pub fn is_disjoint(&self) -> bool {
        self.distinct().len() == self.multiset().len()
    }
}

impl fmt::Display for RootTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            match (r.elems.first(), r.elems.last()) {
                (Some(a), Some(z)) => writeln!(f, "R[{}] class {}: {} .. {} ({} elements)", r.i, r.class, a, z, r.elems.len())?,
                _ => writeln!(f, "R[{}] class {}: empty", r.i, r.class)?,
            }
        }
        Ok(())
    }
}

/// Class `j` of row `i`: the row of the `t` table containing `s = i + 1`.
fn row_class(shape: &Shape, s: i64) -> usize {
    let n = shape.n() as i64;
    let p = shape.p() as i64;
    let w: Vec<i64> = shape.sorted_decorated().into_iter().map(|x| x as i64).collect();
    let nw = |j: i64| if j == 0 { 1 } else { w[(j - 1) as usize] };
    let suffix = |from: i64| (from..=p).map(nw).sum::<i64>();
    for j in 1..=p {
        let lo = n - suffix(j) + (p - j + 1) * nw(j - 1) + 1;
        let hi = n - suffix(j + 1) + (p - j) * nw(j);
        if lo <= s && s <= hi {
            return j as usize;
        }
    }
    0
}

pub fn root_sets(shape: &Shape, b: usize, c: usize) -> RootTable {
    if b == 0 {
        return RootTable { rows: Vec::new() };
    }
    let t = t_table(shape);
    let rows = (0..shape.n())
        .map(|i| {
            let offset = t[i];
            let start = (i * c) as i64 + offset;
            RootRow { i, class: row_class(shape, i as i64 + 1), offset, elems: (1..=b as i64).map(|x| start + x).collect() }
        })
        .collect();
    RootTable { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(s: &str) -> Shape {
        s.parse().unwrap()
    }

    #[test]
    fn t_examples() {
        assert_eq!(t_table(&sh("4")), vec![0, 0, 0, 0]);
        // p = 1: zero up to n0 + 1, then s - n0 - 1
        for (n0, n1) in [(1, 1), (1, 3), (2, 4), (3, 2)] {
            let t = t_table(&Shape::new(vec![n0, n1]).unwrap());
            for s in 1..=n0 + n1 {
                let expect = if s <= n0 + 1 { 0 } else { (s - n0 - 1) as i64 };
                assert_eq!(t[s - 1], expect, "({n0},{n1}) s={s}");
            }
        }
        // equal decorated blocks leave the last row of the table empty
        assert_eq!(t_table(&sh("1,2,2")), vec![0, 0, 0, 1, 1]);
        assert_eq!(t_table(&sh("1,1,3")), vec![0, 0, 0, 1, 2]);
    }

    #[test]
    fn p2_rows_follow_explicit_pattern() {
        // R^1_i offset floor((i - n0)/2), R^2_i offset i - n0 - n_{s1}
        for parts in [vec![1, 2, 3], vec![2, 1, 4], vec![1, 3, 3]] {
            let s = Shape::new(parts.clone()).unwrap();
            let (n0, n) = (s.n0() as i64, s.n() as i64);
            let ns1 = *s.sorted_decorated().first().unwrap() as i64;
            let t = t_table(&s);
            for i in 0..n {
                let expect = if i <= n0 + 1 {
                    0
                } else if i <= n0 + 2 * ns1 - 1 {
                    (i - n0).div_euclid(2)
                } else {
                    i - n0 - ns1
                };
                assert_eq!(t[i as usize], expect, "{parts:?} i={i}");
            }
        }
    }

    #[test]
    fn root_examples() {
        assert!(root_sets(&sh("1,2"), 0, 3).rows.is_empty());
        assert_eq!(root_sets(&sh("1,2"), 1, 2).multiset(), vec![1, 3, 6]);
        assert_eq!(root_sets(&sh("2"), 1, 2).multiset(), vec![1, 3]);
        let r = root_sets(&sh("1,2,2"), 2, 2);
        assert!(r.rows.iter().all(|row| row.elems.len() == 2 && row.elems[1] == row.elems[0] + 1));
        assert_eq!(r.rows.iter().map(|r| r.class).collect::<Vec<_>>(), vec![0, 0, 0, 1, 1]);
    }

    #[test]
    fn disjoint_when_c_at_least_b() {
        for shape in crate::closedform::decorated_shapes(6) {
            for b in 1..=3 {
                for c in b..=3 {
                    let r = root_sets(&shape, b, c);
                    assert!(r.is_disjoint(), "{shape:?} b={b} c={c}");
                    assert_eq!(r.distinct().len(), shape.n() * b);
                }
            }
        }
    }
}
