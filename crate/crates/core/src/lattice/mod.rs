//! Numerical classes on `X_r` and the intersection pairing.
//!
//! A class `(a, b, d₁, …, d_r)` stands for `a·(A/μ) + b·(μB/γ) − Σ dᵢEᵢ`.
//! The pairing is determined by `(A/μ)² = (μB/γ)² = 0`, `(A/μ)·(μB/γ) = 1`,
//! `Eᵢ² = −1` and vanishing mixed products, so
//!
//! ```text
//! (a, b, d)·(a', b', d') = ab' + a'b − Σ dᵢd'ᵢ
//! ```
//!
//! The same type is used for line bundles and for curve classes.

pub mod bound;
pub mod rational;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::catalog::SurfaceData;
use crate::error::{Error, Result};

pub use bound::{compare_bounds, Bound};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    #[serde(with = "rational::serde_bigint")]
    pub a: BigInt,
    #[serde(with = "rational::serde_bigint")]
    pub b: BigInt,
    #[serde(with = "rational::serde_bigint_vec")]
    pub d: Vec<BigInt>,
}

impl DivisorClass {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, d: Vec<BigInt>) -> Self {
        DivisorClass { a: a.into(), b: b.into(), d }
    }

    pub fn from_ints(a: i64, b: i64, d: &[i64]) -> Self {
        DivisorClass::new(a, b, d.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `(a, b, d)` with `dᵢ = d` for `i = 1..=r`.
    pub fn uniform(a: impl Into<BigInt>, b: impl Into<BigInt>, d: impl Into<BigInt>, r: usize) -> Self {
        DivisorClass::new(a, b, vec![d.into(); r])
    }

    /// Pull-back of `(a, b)` to `X_r`.
    pub fn pullback(a: impl Into<BigInt>, b: impl Into<BigInt>, r: usize) -> Self {
        DivisorClass::new(a, b, vec![BigInt::zero(); r])
    }

    /// The exceptional curve `Eᵢ`, stored as `(0, 0, −eᵢ)`.
    pub fn exceptional(i: usize, r: usize) -> Result<Self> {
        let mut d = vec![BigInt::zero(); r];
        *d.get_mut(i.wrapping_sub(1)).ok_or(Error::InvalidIndex { index: i, r })? = -BigInt::one();
        Ok(DivisorClass::new(0, 0, d))
    }

    pub fn r(&self) -> usize {
        self.d.len()
    }

    /// The common value when every `dᵢ` agrees and `r ≥ 1`.
    pub fn uniform_d(&self) -> Option<&BigInt> {
        let first = self.d.first()?;
        self.d.iter().all(|x| x == first).then_some(first)
    }

    /// Zero-pads the exceptional coefficients to live on `X_r`.
    pub fn padded(&self, r: usize) -> Result<Self> {
        if r < self.r() {
            return Err(Error::DimensionMismatch { left: self.r(), right: r });
        }
        let mut d = self.d.clone();
        d.resize(r, BigInt::zero());
        Ok(DivisorClass { a: self.a.clone(), b: self.b.clone(), d })
    }

    pub fn scaled(&self, t: &BigInt) -> Self {
        DivisorClass {
            a: &self.a * t,
            b: &self.b * t,
            d: self.d.iter().map(|x| x * t).collect(),
        }
    }

    pub fn add(&self, other: &DivisorClass) -> Result<Self> {
        same_r(self, other)?;
        Ok(DivisorClass {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: self.d.iter().zip(&other.d).map(|(x, y)| x + y).collect(),
        })
    }

    /// Parses `a,b,d1,...,dR`.
    pub fn parse_list(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::InvalidInput(format!("malformed integer {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.len() < 2 {
            return Err(Error::InvalidInput(format!("class {s:?} needs at least a,b")));
        }
        let mut it = parts.into_iter();
        let a = it.next().unwrap();
        let b = it.next().unwrap();
        Ok(DivisorClass::new(a, b, it.collect()))
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}", self.a, self.b)?;
        if let Some(d) = self.uniform_d().filter(|_| self.r() > 1) {
            write!(f, ", {}×{}", d, self.r())?;
        } else {
            for x in &self.d {
                write!(f, ", {x}")?;
            }
        }
        write!(f, ")")
    }
}

fn same_r(c1: &DivisorClass, c2: &DivisorClass) -> Result<()> {
    if c1.r() != c2.r() {
        return Err(Error::DimensionMismatch { left: c1.r(), right: c2.r() });
    }
    Ok(())
}

pub fn intersect(c1: &DivisorClass, c2: &DivisorClass) -> Result<BigInt> {
    same_r(c1, c2)?;
    let dot: BigInt = c1.d.iter().zip(&c2.d).map(|(x, y)| x * y).sum();
    Ok(&c1.a * &c2.b + &c2.a * &c1.b - dot)
}

/// `2ab − Σ dᵢ²`.
pub fn self_intersection(c: &DivisorClass) -> BigInt {
    let sq: BigInt = c.d.iter().map(|x| x * x).sum();
    BigInt::from(2) * &c.a * &c.b - sq
}

/// Curves built from the fibres of the two projections.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibreKind {
    /// A smooth fibre of `Ψ`, class `(μ, 0)`.
    FibreA,
    /// A fibre of `Φ`, class `(0, γ/μ)`.
    FibreB,
    /// The reduced multiple fibre of highest multiplicity, class `(1, 0)`.
    SingularAReduced,
    /// Strict transform of the `Ψ`-fibre through `xᵢ`.
    AMinusE(usize),
    /// Strict transform of the `Φ`-fibre through `x_j`.
    BMinusE(usize),
}

impl FibreKind {
    pub fn describe(&self) -> String {
        match self {
            FibreKind::FibreA => "smooth A fibre".into(),
            FibreKind::FibreB => "B fibre".into(),
            FibreKind::SingularAReduced => "reduced singular A fibre".into(),
            FibreKind::AMinusE(i) => format!("A-E_{i}"),
            FibreKind::BMinusE(j) => format!("B-E_{j}"),
        }
    }
}

pub fn fibre_class(s: &SurfaceData, r: usize, kind: FibreKind) -> Result<DivisorClass> {
    let mu = BigInt::from(s.mu);
    let q = BigInt::from(s.fibre_b_coeff);
    let unit = |i: usize| -> Result<Vec<BigInt>> {
        let mut d = vec![BigInt::zero(); r];
        *d.get_mut(i.wrapping_sub(1)).ok_or(Error::InvalidIndex { index: i, r })? = BigInt::one();
        Ok(d)
    };
    Ok(match kind {
        FibreKind::FibreA => DivisorClass::pullback(mu, 0, r),
        FibreKind::FibreB => DivisorClass::pullback(0, q, r),
        FibreKind::SingularAReduced => DivisorClass::pullback(1, 0, r),
        FibreKind::AMinusE(i) => DivisorClass::new(mu, 0, unit(i)?),
        FibreKind::BMinusE(j) => DivisorClass::new(0, q, unit(j)?),
    })
}

/// `(L·C)/m` as an exact rational.
pub fn seshadri_ratio(l: &DivisorClass, c: &DivisorClass, m: &BigInt) -> Result<Rational> {
    if !m.is_positive() {
        return Err(Error::InvalidMultiplicity(m.to_string()));
    }
    Ok(Rational::new(intersect(l, c)?, m.clone()))
}
