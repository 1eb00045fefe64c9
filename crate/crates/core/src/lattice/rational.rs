//! Exact rationals and their JSON form.
//!
//! Rationals travel as decimal strings `"p/q"` in lowest terms, with `"/q"`
//! omitted when `q = 1`. Integers travel as JSON numbers when they fit in an
//! `i64`, and as decimal strings otherwise.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serializer};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => BigInt::from_str(s).ok().map(Rational::from_integer),
    }
}

/// `⌊q⌋` as an integer.
pub fn floor(q: &Rational) -> BigInt {
    q.numer().div_floor(q.denom())
}

/// `min{k ≥ 0 : k² ≥ q}` for `q ≥ 0`, i.e. `⌈√q⌉`.
pub fn ceil_sqrt(q: &Rational) -> BigInt {
    assert!(!q.is_negative(), "ceil_sqrt of a negative rational");
    // k² ≥ n/d  ⇔  k²d ≥ n
    let (n, d) = (q.numer(), q.denom());
    let mut k = (n / d).sqrt();
    while &k * &k * d < *n {
        k += 1;
    }
    while k.is_positive() {
        let j = &k - 1;
        if &j * &j * d >= *n {
            k = j;
        } else {
            break;
        }
    }
    k
}

/// `⌈√(r/2)⌉`, the least integer `k` with `2k² ≥ r`.
pub fn k_for(r: usize) -> BigInt {
    ceil_sqrt(&Rational::new(BigInt::from(r), BigInt::from(2)))
}

/// Perfect-square test on a non-negative rational; returns the root.
pub fn exact_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_string(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).ok_or_else(|| de::Error::custom(format!("malformed rational {s:?}")))
    }
}

pub mod serde_opt_rational {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_some(&to_string(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| parse(&s).ok_or_else(|| de::Error::custom(format!("malformed rational {s:?}"))))
            .transpose()
    }
}

pub mod serde_bigint {
    use super::*;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match n.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&n.to_string()),
        }
    }

    struct BigIntVisitor;

    impl<'de> Visitor<'de> for BigIntVisitor {
        type Value = BigInt;

        fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
            f.write_str("an integer or a decimal integer string")
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
            Ok(BigInt::from(v))
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
            Ok(BigInt::from(v))
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
            BigInt::from_str(v.trim()).map_err(|_| E::custom(format!("malformed integer {v:?}")))
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        d.deserialize_any(BigIntVisitor)
    }
}

pub mod serde_bigint_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    #[derive(Deserialize)]
    struct Wrapped(#[serde(with = "super::serde_bigint")] BigInt);

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for n in v {
            match n.to_i64() {
                Some(x) => seq.serialize_element(&x)?,
                None => seq.serialize_element(&n.to_string())?,
            }
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Ok(Vec::<Wrapped>::deserialize(d)?.into_iter().map(|w| w.0).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_form() {
        assert_eq!(to_string(&rat(6, 4)), "3/2");
        assert_eq!(to_string(&rat(-6, 3)), "-2");
        assert_eq!(to_string(&rat(3, -6)), "-1/2");
        assert_eq!(parse("10/4"), Some(rat(5, 2)));
        assert_eq!(parse(" 7 "), Some(int(7)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }

    #[test]
    fn integer_roots() {
        assert_eq!(k_for(1), BigInt::from(1));
        assert_eq!(k_for(2), BigInt::from(1));
        assert_eq!(k_for(3), BigInt::from(2));
        assert_eq!(k_for(8), BigInt::from(2));
        assert_eq!(k_for(9), BigInt::from(3));
        assert_eq!(k_for(18), BigInt::from(3));
        assert_eq!(k_for(19), BigInt::from(4));
        assert_eq!(k_for(0), BigInt::from(0));
        assert_eq!(ceil_sqrt(&rat(25, 4)), BigInt::from(3));
        assert_eq!(exact_sqrt(&rat(25, 4)), Some(rat(5, 2)));
        assert_eq!(exact_sqrt(&rat(2, 1)), None);
        assert_eq!(floor(&rat(-1, 2)), BigInt::from(-1));
    }

    #[test]
    fn ceil_sqrt_matches_search() {
        for r in 0..500usize {
            let k = k_for(r);
            let k = k.to_i64().unwrap();
            assert!(2 * k * k >= r as i64);
            assert!(k == 0 || 2 * (k - 1) * (k - 1) < r as i64);
        }
    }
}
