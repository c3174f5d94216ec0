//! Univariate polynomials over the fraction field and exact interpolation.

use std::fmt;

use super::frac::QFrac;
use crate::error::{Error, Result};

/// `sum coeffs[i] z^i` with trailing zeros removed.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<QFrac>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<QFrac>) -> Self {
        while coeffs.last().is_some_and(QFrac::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[QFrac] {
        &self.coeffs
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, z: &QFrac) -> QFrac {
        let mut acc = QFrac::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Coefficients `c_0..c_{m-1}` of the unique polynomial of degree `< m`
/// through the `m` given points (Newton divided differences).
pub fn interpolate(nodes: &[(QFrac, QFrac)]) -> Result<Vec<QFrac>> {
    let m = nodes.len();
    for i in 0..m {
        for j in i + 1..m {
            if nodes[i].0 == nodes[j].0 {
                return Err(Error::DuplicateNode(i, j));
            }
        }
    }
    let xs: Vec<&QFrac> = nodes.iter().map(|n| &n.0).collect();
    let mut dd: Vec<QFrac> = nodes.iter().map(|n| n.1.clone()).collect();
    for j in 1..m {
        for i in (j..m).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = xs[i] - xs[i - j];
            dd[i] = num.checked_div(&den)?;
        }
    }
    // expand the Newton form from the innermost coefficient outwards
    let mut poly: Vec<QFrac> = Vec::with_capacity(m);
    for i in (0..m).rev() {
        // poly <- poly * (z - x_i) + dd[i]
        let mut next = vec![QFrac::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] = &next[k + 1] + c;
            next[k] = &next[k] - &(c * xs[i]);
        }
        next[0] = &next[0] + &dd[i];
        poly = next;
    }
    poly.truncate(m);
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::QLaurent;

    fn qf(s: &str) -> QFrac {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(interpolate(&[(qf("1"), qf("5"))]).unwrap(), vec![qf("5")]);
        assert_eq!(
            interpolate(&[(qf("1"), qf("1")), (qf("q"), qf("q"))]).unwrap(),
            vec![qf("0"), qf("1")]
        );
        let c = interpolate(&[(qf("1"), qf("2")), (qf("q"), qf("1 + q^2")), (qf("q^2"), qf("1 + q^4"))]).unwrap();
        assert_eq!(c, vec![qf("1"), qf("0"), qf("1")]);
        // values 2, 1+q, 1+q^2 at 1, q, q^2 lie on 1 + z
        let c = interpolate(&[(qf("1"), qf("2")), (qf("q"), qf("1 + q")), (qf("q^2"), qf("1 + q^2"))]).unwrap();
        assert_eq!(c, vec![qf("1"), qf("1"), qf("0")]);
    }

    #[test]
    fn duplicate_abscissa() {
        let r = interpolate(&[(qf("q"), qf("1")), (qf("q"), qf("2"))]);
        assert_eq!(r, Err(Error::DuplicateNode(0, 1)));
    }

    #[test]
    fn unipoly_eval() {
        let p = UniPoly::new(vec![qf("1"), qf("0"), qf("1"), qf("0")]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(&QLaurent::q_pow(-1).into()), qf("1 + q^-2"));
    }
}
