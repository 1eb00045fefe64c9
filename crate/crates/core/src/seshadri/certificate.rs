//! Self-checking certificates for global Seshadri constants.
//!
//! A rationality certificate names a point and curves through it whose
//! Seshadri ratio is strictly below `√(L²)`; by the submaximal-curve
//! principle this forces `ε(X_r, L) ∈ ℚ`. Every stored number can be
//! re-derived from the bundle and the witness classes with integer
//! arithmetic alone, which is what [`Certificate::verify`] does.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::lattice::rational::{self, serde_bigint, serde_rational, Rational};
use crate::lattice::{seshadri_ratio, self_intersection, DivisorClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    GlobalRationality,
    GlobalExact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCurve {
    pub curve: String,
    pub class: DivisorClass,
    #[serde(with = "serde_bigint")]
    pub multiplicity: BigInt,
    #[serde(with = "serde_rational")]
    pub ratio: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "=")]
    Equal,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Less => "<",
            Relation::Equal => "=",
        })
    }
}

/// An integer comparison `lhs relation rhs`.
///
/// Rationality: `p² < L²·q²` for the claimed ratio `p/q`.
/// Exact value: `p·v = u·q` where `u/v = min{a−d, b}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub statement: String,
    #[serde(with = "serde_bigint")]
    pub lhs: BigInt,
    pub relation: Relation,
    #[serde(with = "serde_bigint")]
    pub rhs: BigInt,
}

impl Comparison {
    pub fn holds(&self) -> bool {
        match self.relation {
            Relation::Less => self.lhs < self.rhs,
            Relation::Equal => self.lhs == self.rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub witness_point: String,
    pub bundle: DivisorClass,
    pub witness_curves: Vec<WitnessCurve>,
    #[serde(with = "serde_rational")]
    pub claimed: Rational,
    pub comparison: Comparison,
}

fn min_ratio(curves: &[WitnessCurve]) -> Option<Rational> {
    curves.iter().map(|w| w.ratio.clone()).min()
}

/// `min{a − d, b}` for a uniform bundle.
fn exact_formula(bundle: &DivisorClass) -> Option<Rational> {
    let d = bundle.uniform_d()?;
    let v = (&bundle.a - d).min(bundle.b.clone());
    Some(Rational::from_integer(v))
}

fn rationality_comparison(bundle: &DivisorClass, claimed: &Rational) -> Comparison {
    let l2 = self_intersection(bundle);
    let (p, q) = (claimed.numer(), claimed.denom());
    Comparison {
        statement: format!("({})^2 < L^2 = {l2}", rational::to_string(claimed)),
        lhs: p * p,
        relation: Relation::Less,
        rhs: l2 * q * q,
    }
}

fn exact_comparison(claimed: &Rational, formula: &Rational) -> Comparison {
    Comparison {
        statement: format!(
            "min witness ratio {} = min(a-d, b) = {}",
            rational::to_string(claimed),
            rational::to_string(formula)
        ),
        lhs: claimed.numer() * formula.denom(),
        relation: Relation::Equal,
        rhs: formula.numer() * claimed.denom(),
    }
}

impl Certificate {
    pub(crate) fn build(
        kind: CertificateKind,
        witness_point: &str,
        bundle: &DivisorClass,
        witness_curves: Vec<WitnessCurve>,
    ) -> Certificate {
        let claimed = min_ratio(&witness_curves).expect("at least one witness curve");
        let comparison = match kind {
            CertificateKind::GlobalRationality => rationality_comparison(bundle, &claimed),
            CertificateKind::GlobalExact => {
                exact_comparison(&claimed, &exact_formula(bundle).expect("uniform bundle"))
            }
        };
        Certificate {
            kind,
            witness_point: witness_point.to_string(),
            bundle: bundle.clone(),
            witness_curves,
            claimed,
            comparison,
        }
    }

    /// Re-derives every stored quantity from the bundle and witness classes.
    pub fn verify(&self) -> bool {
        let ratios_ok = self.witness_curves.iter().all(|w| {
            seshadri_ratio(&self.bundle, &w.class, &w.multiplicity).ok().as_ref() == Some(&w.ratio)
        });
        if !ratios_ok || min_ratio(&self.witness_curves).as_ref() != Some(&self.claimed) {
            return false;
        }
        if !self.claimed.is_positive() {
            return false;
        }
        let expected = match self.kind {
            CertificateKind::GlobalRationality => rationality_comparison(&self.bundle, &self.claimed),
            CertificateKind::GlobalExact => match exact_formula(&self.bundle) {
                Some(f) => exact_comparison(&self.claimed, &f),
                None => return false,
            },
        };
        expected.lhs == self.comparison.lhs
            && expected.rhs == self.comparison.rhs
            && expected.relation == self.comparison.relation
            && expected.holds()
    }
}
