//! Canonical text form: `-1 + 2*q^2 - q^5`, `(num)/(den)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::frac::QFrac;
use super::poly::QLaurent;
use crate::error::{Error, Result};

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, e: i64, c: &BigInt) -> fmt::Result {
    let neg = c.is_negative();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let a = c.abs();
    if e == 0 {
        return write!(f, "{a}");
    }
    if !a.is_one() {
        write!(f, "{a}*")?;
    }
    if e == 1 {
        f.write_str("q")
    } else {
        write!(f, "q^{e}")
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            write_term(f, i == 0, e, c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "({})/({})", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for QFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_term(s: &str) -> Result<(i64, BigInt)> {
    let bad = || Error::Parse(format!("bad term `{s}`"));
    let (coef, var) = match s.find('q') {
        None => (s, None),
        Some(i) => (&s[..i], Some(&s[i + 1..])),
    };
    let coef = coef.trim().trim_end_matches('*').trim();
    let c = if coef.is_empty() {
        if var.is_none() {
            return Err(bad());
        }
        BigInt::one()
    } else {
        coef.parse::<BigInt>().map_err(|_| bad())?
    };
    let e = match var.map(str::trim) {
        None => 0,
        Some("") => 1,
        Some(v) => {
            let v = v.strip_prefix('^').ok_or_else(bad)?.trim();
            let v = v.trim_start_matches('(').trim_end_matches(')');
            v.parse::<i64>().map_err(|_| bad())?
        }
    };
    Ok((e, c))
}

impl FromStr for QLaurent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        // split on +/- that are not part of an exponent
        let bytes = s.as_bytes();
        let mut terms = Vec::new();
        let mut start = 0;
        let mut sign = 1i64;
        let mut i = 0;
        if bytes[0] == b'-' || bytes[0] == b'+' {
            sign = if bytes[0] == b'-' { -1 } else { 1 };
            i = 1;
            start = 1;
        }
        while i <= bytes.len() {
            let at_end = i == bytes.len();
            let split = !at_end && (bytes[i] == b'+' || bytes[i] == b'-') && i > start && bytes[i - 1] != b'^';
            if at_end || split {
                let (e, c) = parse_term(&s[start..i])?;
                terms.push((e, c * sign));
                if !at_end {
                    sign = if bytes[i] == b'-' { -1 } else { 1 };
                }
                start = i + 1;
            }
            i += 1;
        }
        Ok(QLaurent::from_terms(terms))
    }
}

impl FromStr for QFrac {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            if let Some(idx) = rest.find(")/(") {
                let num: QLaurent = rest[..idx].parse()?;
                let den_s = rest[idx + 3..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced fraction `{s}`")))?;
                let den: QLaurent = den_s.parse()?;
                return QFrac::new(num, den);
            }
        }
        Ok(t.parse::<QLaurent>()?.into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        let a = QLaurent::from_terms([(0, (-1).into()), (2, 2.into()), (5, (-1).into())]);
        assert_eq!(a.to_string(), "-1 + 2*q^2 - q^5");
        let b = QLaurent::from_terms([(-3, 1.into()), (0, 1.into())]);
        assert_eq!(b.to_string(), "q^-3 + 1");
        assert_eq!(QLaurent::zero().to_string(), "0");
        assert_eq!(QLaurent::q_pow(1).to_string(), "q");
        let f = QFrac::new(QLaurent::one(), QLaurent::one_minus_q_pow(1)).unwrap();
        assert_eq!(f.to_string(), "(-1)/(-1 + q)");
        assert_eq!(QFrac::from(b.clone()).to_string(), "q^-3 + 1");
    }

    #[test]
    fn round_trip() {
        for s in ["-1 + 2*q^2 - q^5", "q^-3 + 1", "0", "q", "-q", "7*q^-2 - 3", "(1 + q)/(-1 + q)"] {
            let f: QFrac = s.parse().unwrap();
            assert_eq!(f.to_string().parse::<QFrac>().unwrap(), f, "{s}");
        }
        assert_eq!("q^-3 + 1".parse::<QLaurent>().unwrap().to_string(), "q^-3 + 1");
        assert!("1 + + q".parse::<QLaurent>().is_err());
        assert!("x".parse::<QLaurent>().is_err());
    }
}
