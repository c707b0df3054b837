use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exact rational scalar, always normalized with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Serde adapter storing a [`Rational`] as its `"p/q"` string.
pub mod as_string {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        assert_eq!(parse_rational("4").unwrap(), int(4));
        assert_eq!(parse_rational("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational("3/-9").unwrap(), frac(-1, 3));
        assert_eq!(parse_rational(" 0/5 ").unwrap(), int(0));
        let r = parse_rational("6/-4").unwrap();
        assert!(r.denom() > &BigInt::from(0));
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_rational("1/0"), Err(Error::Parse(_))));
        assert!(matches!(parse_rational("x"), Err(Error::Parse(_))));
        assert!(matches!(parse_rational("1.5"), Err(Error::Parse(_))));
        assert!(matches!(parse_rational(""), Err(Error::Parse(_))));
    }

    #[test]
    fn big_values_stay_exact() {
        let big = parse_rational("123456789012345678901234567890/7").unwrap();
        let back = parse_rational(&big.to_string()).unwrap();
        assert_eq!(big, back);
    }
}
