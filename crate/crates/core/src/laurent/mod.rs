//! Sparse multivariate Laurent polynomials with q-scalar coefficients,
//! constant-term extraction and the substitution operator `E_{u,k}`.

mod coeff;
mod engine;
mod poly;

pub use coeff::Coeff;
pub use engine::{FactorProduct, PochFactor};
pub use poly::{ExpVec, MLaurent};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::{QFrac, QLaurent};

    fn qf(s: &str) -> QFrac {
        s.parse().unwrap()
    }

    fn mono(e: &[i32], c: &str) -> MLaurent {
        MLaurent::monomial(e.len(), e, qf(c)).unwrap()
    }

    fn xy_product() -> MLaurent {
        // (1 - x1/x2)(1 - q x2/x1)
        let a = MLaurent::<QFrac>::poch_factor(1, 2, 1, Some(2), 0, 1).unwrap();
        let b = MLaurent::<QFrac>::poch_factor(1, 2, 2, Some(1), 1, 1).unwrap();
        &a * &b
    }

    #[test]
    fn arithmetic_examples() {
        let a = &mono(&[1, -1], "1") + &mono(&[0, 0], "q");
        assert_eq!(&a * &MLaurent::one(2), a);
        assert_eq!(&mono(&[1, -1], "1") * &mono(&[-1, 1], "1"), MLaurent::one(2));
        let expect = &(&(&mono(&[0, 0], "1 + q") - &mono(&[1, -1], "1")) - &mono(&[-1, 1], "q")) + &MLaurent::zero(2);
        assert_eq!(xy_product(), expect);
        assert!(MLaurent::<QFrac>::one(2).try_add(&MLaurent::one(3)).is_err());
        assert!((&a * &MLaurent::zero(2)).is_zero());
    }

    #[test]
    fn poch_factor_examples() {
        assert_eq!(MLaurent::<QFrac>::poch_factor(1, 2, 1, Some(2), 5, 0).unwrap(), MLaurent::one(2));
        let single = MLaurent::<QFrac>::poch_factor(1, 2, 1, Some(2), 0, 1).unwrap();
        assert_eq!(single, &MLaurent::one(2) - &mono(&[1, -1], "1"));
        let two = MLaurent::<QFrac>::poch_factor(1, 2, 1, Some(2), 1, 2).unwrap();
        let expect = &(&MLaurent::one(2) - &mono(&[1, -1], "q + q^2")) + &mono(&[2, -2], "q^3");
        assert_eq!(two, expect);
        assert!(MLaurent::<QFrac>::poch_factor(1, 2, 1, Some(1), 0, 1).is_err());
        let one_var = MLaurent::<QFrac>::poch_factor(1, 1, 1, None, 1, 1).unwrap();
        assert_eq!(one_var, &MLaurent::one(1) - &mono(&[1], "q"));
    }

    #[test]
    fn ct_examples() {
        assert_eq!(xy_product().ct(&[1, 2]).unwrap(), mono(&[0, 0], "1 + q"));
        assert_eq!(xy_product().ct_all(), qf("1 + q"));
        let c = mono(&[0, 0], "3 + q");
        assert_eq!(c.ct(&[1]).unwrap(), c);
        assert!(mono(&[1, -1], "1").ct(&[1]).unwrap().is_zero());
    }

    #[test]
    fn coeff_at_examples() {
        let f = &MLaurent::one(1) + &mono(&[1], "q");
        assert_eq!(f.coeff_at(&ExpVec::from_slice(&[1])).unwrap(), qf("q"));
        assert_eq!(MLaurent::<QFrac>::zero(2).coeff_at(&ExpVec::from_slice(&[3, 1])).unwrap(), qf("0"));
        assert_eq!(xy_product().coeff_at(&ExpVec::from_slice(&[-1, 1])).unwrap(), qf("-q"));
        assert!(f.coeff_at(&ExpVec::from_slice(&[1, 1])).is_err());
    }

    #[test]
    fn subst_shift_examples() {
        let f = mono(&[1, -1], "1");
        assert_eq!(f.subst_shift(&[1, 2], &[1, 1]).unwrap(), MLaurent::one(2));
        let g = mono(&[1, 0, 0], "1");
        assert_eq!(g.subst_shift(&[1, 3], &[2, 5]).unwrap(), mono(&[0, 0, 1], "q^3"));
        // s = 1 with x_0 kept: x_0 -> q^{k_1} x_{u_1}
        let h = MLaurent::<QFrac>::monomial_based(0, 3, &[2, 0, -1], qf("1")).unwrap();
        let hs = h.subst_shift(&[2], &[3]).unwrap();
        assert_eq!(hs, MLaurent::monomial_based(0, 3, &[0, 0, 1], qf("q^6")).unwrap());
        assert!(g.subst_shift(&[2, 1], &[0, 0]).is_err());
    }

    #[test]
    fn engine_matches_expansion() {
        let mut fp = FactorProduct::new(1, 3);
        fp.push(PochFactor::new(Some(1), Some(2), 0, 2));
        fp.push(PochFactor::new(Some(2), Some(1), 1, 2));
        fp.push(PochFactor::new(Some(3), None, 1, 1));
        fp.push(PochFactor::new(None, Some(3), 0, 1));
        fp.push(PochFactor::new(Some(2), Some(3), 0, 1));
        fp.push(PochFactor::new(Some(3), Some(2), 1, 1));
        let full: MLaurent<QLaurent> = fp.expand().unwrap();
        let ct: QLaurent = fp.ct().unwrap();
        assert_eq!(full.ct_all(), ct);
        for (e, c) in full.terms() {
            assert_eq!(&fp.coeff::<QLaurent>(None, e).unwrap(), c);
        }
        assert_eq!(fp.coeff::<QLaurent>(None, &ExpVec::from_slice(&[9, 0, 0])).unwrap(), QLaurent::zero());
    }

    #[test]
    fn display_is_sorted() {
        let s = xy_product().to_string();
        assert_eq!(s, "(-q) * x1^-1*x2 + (1 + q) + (-1) * x1*x2^-1");
    }
}
