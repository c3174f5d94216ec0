//! Scalar q-shifted factorials and Gaussian binomials.

use super::poly::QLaurent;
use crate::error::{Error, Result};

/// `(q^m; q)_z = prod_{j<z} (1 - q^{m+j})`.
pub fn qpoch(m: i64, z: i64) -> Result<QLaurent> {
    if z < 0 {
        return Err(Error::NegativeLength);
    }
    Ok(poch(m, z as usize))
}

pub(crate) fn poch(m: i64, z: usize) -> QLaurent {
    let mut r = QLaurent::one();
    for j in 0..z as i64 {
        let mut f = r.clone();
        f.sub_shifted(&r, m + j);
        r = f;
        if r.is_zero() {
            break;
        }
    }
    r
}

/// `(q)_z`.
pub(crate) fn qfact(z: usize) -> QLaurent {
    poch(1, z)
}

/// Gaussian binomial `[n, c]`; zero when `c > n`.
pub fn qbinom(n: u64, c: u64) -> QLaurent {
    if c > n {
        return QLaurent::zero();
    }
    let c = c.min(n - c) as usize;
    let num = poch(n as i64 - c as i64 + 1, c);
    num.div_exact(&qfact(c)).expect("q-binomial division is exact")
}

/// Signed-argument variant: zero for negative `n` or `c`.
pub(crate) fn qbinom_i(n: i64, c: i64) -> QLaurent {
    if n < 0 || c < 0 {
        return QLaurent::zero();
    }
    qbinom(n as u64, c as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> QLaurent {
        QLaurent::from_terms(terms.iter().map(|&(e, c)| (e, c.into())))
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(qpoch(1, 0).unwrap(), QLaurent::one());
        assert!(qpoch(0, 1).unwrap().is_zero());
        assert_eq!(qpoch(1, 2).unwrap(), p(&[(0, 1), (1, -1), (2, -1), (3, 1)]));
        assert_eq!(qpoch(0, -1), Err(Error::NegativeLength));
        assert_eq!(qpoch(-1, 1).unwrap(), p(&[(-1, -1), (0, 1)]));
    }

    #[test]
    fn binomial_examples() {
        for n in 0..6 {
            assert_eq!(qbinom(n, 0), QLaurent::one());
        }
        assert_eq!(qbinom(2, 1), p(&[(0, 1), (1, 1)]));
        assert_eq!(qbinom(4, 2), p(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)]));
        assert!(qbinom(2, 3).is_zero());
    }
}
