use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{self, serde_rational, Rational};

/// A rational value or the square root of a non-negative rational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Bound {
    Rational {
        #[serde(with = "serde_rational")]
        q: Rational,
    },
    Sqrt {
        #[serde(with = "serde_rational")]
        q: Rational,
    },
}

impl Bound {
    pub fn rational(q: Rational) -> Self {
        Bound::Rational { q }
    }

    /// `√q`; a negative radicand is clamped to zero.
    pub fn sqrt(q: Rational) -> Self {
        let q = if q.is_negative() { Rational::zero() } else { q };
        Bound::Sqrt { q }
    }

    /// `√q` collapsed to a rational when `q` is a perfect square.
    pub fn sqrt_normalized(q: Rational) -> Self {
        match rational::exact_sqrt(&q) {
            Some(root) => Bound::Rational { q: root },
            None => Bound::sqrt(q),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Bound::Rational { q } => Some(q),
            Bound::Sqrt { .. } => None,
        }
    }

    /// The smaller of two bounds (ties keep `self`).
    pub fn min(self, other: Bound) -> Bound {
        if compare_bounds(&other, &self) == Ordering::Less {
            other
        } else {
            self
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Rational { q } => write!(f, "{}", rational::to_string(q)),
            Bound::Sqrt { q } => write!(f, "sqrt({})", rational::to_string(q)),
        }
    }
}

fn rational_vs_sqrt(p: &Rational, q: &Rational) -> Ordering {
    if p.is_negative() {
        return Ordering::Less;
    }
    (p * p).cmp(q)
}

/// Exact trichotomy; `√q` is compared by squaring after a sign check.
pub fn compare_bounds(x: &Bound, y: &Bound) -> Ordering {
    match (x, y) {
        (Bound::Rational { q: p }, Bound::Rational { q }) => p.cmp(q),
        (Bound::Sqrt { q: p }, Bound::Sqrt { q }) => p.cmp(q),
        (Bound::Rational { q: p }, Bound::Sqrt { q }) => rational_vs_sqrt(p, q),
        (Bound::Sqrt { q }, Bound::Rational { q: p }) => rational_vs_sqrt(p, q).reverse(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::rational::{int, rat};

    #[test]
    fn examples() {
        assert_eq!(
            compare_bounds(&Bound::rational(rat(5, 2)), &Bound::sqrt(rat(25, 4))),
            Ordering::Equal
        );
        // 9 > 43/5
        assert_eq!(
            compare_bounds(&Bound::rational(int(3)), &Bound::sqrt(rat(43, 5))),
            Ordering::Greater
        );
        assert_eq!(
            compare_bounds(&Bound::sqrt(int(2)), &Bound::rational(rat(3, 2))),
            Ordering::Less
        );
        assert_eq!(
            compare_bounds(&Bound::rational(int(-3)), &Bound::sqrt(int(0))),
            Ordering::Less
        );
    }

    #[test]
    fn json_shape() {
        let b = Bound::sqrt(rat(43, 5));
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"kind":"sqrt","q":"43/5"}"#);
        assert_eq!(serde_json::from_str::<Bound>(&s).unwrap(), b);
        let s = serde_json::to_string(&Bound::rational(int(3))).unwrap();
        assert_eq!(s, r#"{"kind":"rational","q":"3"}"#);
    }

    #[test]
    fn min_and_normalize() {
        assert_eq!(Bound::sqrt_normalized(rat(25, 4)), Bound::rational(rat(5, 2)));
        assert_eq!(Bound::sqrt_normalized(int(6)), Bound::sqrt(int(6)));
        let m = Bound::rational(int(12)).min(Bound::sqrt(int(136)));
        assert_eq!(m, Bound::sqrt(int(136)));
    }
}
