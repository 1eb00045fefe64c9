//! Ampleness on `X_r`: necessary checks against fibre curves and exceptional
//! curves, three sufficient criteria, and a tri-state verdict.
//!
//! A failed sufficient criterion never refutes ampleness. `Refuted` is only
//! reported with a witness curve that meets the bundle non-positively (or a
//! non-positive self-intersection).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::catalog::SurfaceData;
use crate::error::{Error, Result};
use crate::lattice::rational::{self, Rational};
use crate::lattice::{fibre_class, self_intersection, DivisorClass, FibreKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AmpleStatus {
    Proven,
    Refuted,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Passed,
    Failed,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionOutcome {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

impl CriterionOutcome {
    fn new(name: &str, outcome: Outcome, detail: impl Into<String>) -> Self {
        CriterionOutcome { name: name.to_string(), outcome, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "VerdictJson", from = "VerdictJson")]
pub struct AmpleVerdict {
    pub status: AmpleStatus,
    pub criteria: Vec<CriterionOutcome>,
    pub witnesses: Vec<DivisorClass>,
}

#[derive(Serialize, Deserialize)]
struct VerdictJson {
    status: AmpleStatus,
    criteria: Vec<CriterionOutcome>,
    witness: Option<DivisorClass>,
    #[serde(default)]
    witnesses: Vec<DivisorClass>,
}

impl From<AmpleVerdict> for VerdictJson {
    fn from(v: AmpleVerdict) -> Self {
        VerdictJson {
            status: v.status,
            criteria: v.criteria,
            witness: v.witnesses.first().cloned(),
            witnesses: v.witnesses,
        }
    }
}

impl From<VerdictJson> for AmpleVerdict {
    fn from(v: VerdictJson) -> Self {
        let witnesses = if v.witnesses.is_empty() { v.witness.into_iter().collect() } else { v.witnesses };
        AmpleVerdict { status: v.status, criteria: v.criteria, witnesses }
    }
}

impl AmpleVerdict {
    pub fn criterion(&self, name: &str) -> Option<&CriterionOutcome> {
        self.criteria.iter().find(|c| c.name == name)
    }
}

/// One necessary condition for ampleness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessaryCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<DivisorClass>,
}

fn check(name: &str, passed: bool, detail: String, witness: impl FnOnce() -> DivisorClass) -> NecessaryCheck {
    NecessaryCheck {
        name: name.to_string(),
        passed,
        detail,
        witness: (!passed).then(witness),
    }
}

/// First index (1-based) where the per-point condition fails.
fn first_failure(l: &DivisorClass, holds: impl Fn(&BigInt) -> bool) -> Option<usize> {
    l.d.iter().position(|x| !holds(x)).map(|i| i + 1)
}

pub fn necessary_checks(l: &DivisorClass, s: &SurfaceData) -> Vec<NecessaryCheck> {
    let r = l.r();
    let mu = BigInt::from(s.mu);
    let q = BigInt::from(s.fibre_b_coeff);
    let fibre = |kind| fibre_class(s, r, kind).expect("index within 1..=r");
    let l2 = self_intersection(l);
    let mut out = vec![
        check("self_intersection", l2.is_positive(), format!("L^2 = {l2}"), || l.clone()),
        check(
            "b_minus_fibre",
            l.a.is_positive(),
            format!("L·(0,{q}) = {}", &q * &l.a),
            || fibre(FibreKind::FibreB),
        ),
        check(
            "a_fibre",
            l.b.is_positive(),
            format!("L·({mu},0) = {}", &mu * &l.b),
            || fibre(FibreKind::FibreA),
        ),
    ];

    let mub = &mu * &l.b;
    let qa = &q * &l.a;
    let fail = first_failure(l, |d| &mub - d > BigInt::zero());
    out.push(check(
        "a_minus_e",
        fail.is_none(),
        match fail {
            None => format!("L·(A-E_i) = {mub} - d_i > 0 for all i"),
            Some(i) => format!("L·(A-E_{i}) = {mub} - {} <= 0", l.d[i - 1]),
        },
        || fibre(FibreKind::AMinusE(fail.unwrap_or(1))),
    ));
    let fail = first_failure(l, |d| &qa - d > BigInt::zero());
    out.push(check(
        "b_minus_e",
        fail.is_none(),
        match fail {
            None => format!("L·(B-E_i) = {qa} - d_i > 0 for all i"),
            Some(i) => format!("L·(B-E_{i}) = {qa} - {} <= 0", l.d[i - 1]),
        },
        || fibre(FibreKind::BMinusE(fail.unwrap_or(1))),
    ));
    let fail = first_failure(l, |d| d.is_positive());
    out.push(check(
        "exceptional",
        fail.is_none(),
        match fail {
            None => "L·E_i = d_i > 0 for all i".to_string(),
            Some(i) => format!("L·E_{i} = {} <= 0", l.d[i - 1]),
        },
        || DivisorClass::exceptional(fail.unwrap_or(1), r).expect("index within 1..=r"),
    ));
    out
}

fn necessary_trace(checks: &[NecessaryCheck]) -> Vec<CriterionOutcome> {
    checks
        .iter()
        .map(|c| {
            let outcome = if c.passed { Outcome::Passed } else { Outcome::Failed };
            CriterionOutcome::new(&c.name, outcome, c.detail.clone())
        })
        .collect()
}

/// Folds necessary checks and sufficient-criterion outcomes into a verdict.
fn assemble(checks: Vec<NecessaryCheck>, sufficient: Vec<CriterionOutcome>) -> AmpleVerdict {
    let mut criteria = necessary_trace(&checks);
    let witnesses: Vec<DivisorClass> = checks.into_iter().filter_map(|c| c.witness).collect();
    let status = if !witnesses.is_empty() {
        AmpleStatus::Refuted
    } else if sufficient.iter().any(|c| c.outcome == Outcome::Passed) {
        AmpleStatus::Proven
    } else {
        AmpleStatus::Unknown
    };
    criteria.extend(sufficient);
    AmpleVerdict { status, criteria, witnesses }
}

fn kuchle_criterion(l: &DivisorClass) -> CriterionOutcome {
    const NAME: &str = "kuchle";
    if l.r() == 0 {
        return CriterionOutcome::new(NAME, Outcome::NotApplicable, "no blown-up points");
    }
    if !l.d.iter().all(|x| x.is_one()) {
        return CriterionOutcome::new(NAME, Outcome::NotApplicable, "requires d_i = 1 for all i");
    }
    if !l.a.is_positive() || !l.b.is_positive() {
        return CriterionOutcome::new(NAME, Outcome::NotApplicable, "requires a, b > 0");
    }
    let n = l.a.gcd(&l.b);
    if n < BigInt::from(2) {
        return CriterionOutcome::new(NAME, Outcome::NotApplicable, "gcd(a,b) = 1: no n >= 2 with L = nH' - ΣE_i");
    }
    let l2 = self_intersection(l);
    let head = format!("n = {n}, H = ({}, {})", &l.a / &n, &l.b / &n);
    if l2.is_positive() {
        CriterionOutcome::new(NAME, Outcome::Passed, format!("{head}; L^2 = {l2} > 0"))
    } else {
        CriterionOutcome::new(NAME, Outcome::Failed, format!("{head}; L^2 = {l2} <= 0"))
    }
}

fn homogeneous_criterion(l: &DivisorClass) -> CriterionOutcome {
    const NAME: &str = "homogeneous";
    let r = l.r();
    if r == 0 {
        return CriterionOutcome::new(NAME, Outcome::NotApplicable, "no blown-up points");
    }
    let Some(d) = l.uniform_d() else {
        return CriterionOutcome::new(NAME, Outcome::NotApplicable, "requires uniform d");
    };
    if !d.is_positive() {
        return CriterionOutcome::new(NAME, Outcome::NotApplicable, format!("requires d >= 1, got {d}"));
    }
    if l.a < BigInt::one() || l.b < BigInt::one() {
        return CriterionOutcome::new(NAME, Outcome::NotApplicable, "requires a, b >= 1");
    }
    let fa = l.a.div_floor(d);
    let fb = l.b.div_floor(d);
    let two = BigInt::from(2);
    let rr = BigInt::from(r);
    let ok = |f: &BigInt| f >= &two && &two * f * f > rr;
    let side = |f: &BigInt| {
        let v = &two * f * f;
        let rel = if v > rr { ">" } else { "<=" };
        format!("2*{f}^2 = {v} {rel} {r}")
    };
    let sides = if fa == fb { side(&fa) } else { format!("{}, {}", side(&fa), side(&fb)) };
    let detail = format!("floor(a/d) = {fa}, floor(b/d) = {fb}; {sides} = r");
    let outcome = if ok(&fa) && ok(&fb) { Outcome::Passed } else { Outcome::Failed };
    CriterionOutcome::new(NAME, outcome, detail)
}

fn nonhomogeneous_criterion(l: &DivisorClass, s: &SurfaceData) -> CriterionOutcome {
    const NAME: &str = "nonhomogeneous";
    if l.d.iter().any(|x| x.is_negative()) {
        return CriterionOutcome::new(NAME, Outcome::NotApplicable, "requires d_i >= 0");
    }
    if l.d.iter().any(|x| x.is_zero()) {
        return CriterionOutcome::new(NAME, Outcome::NotApplicable, "some d_i = 0 on a blow-up");
    }
    let mu = BigInt::from(s.mu);
    let mub = &mu * &l.b;
    let cond1 = l.d.iter().all(|x| &l.a > x && &mub > x);
    let total: BigInt = l.d.iter().sum();
    let lhs = &l.a + &l.b;
    let rhs = &mu * &total;
    let cond2 = lhs > rhs;
    let detail = format!(
        "condition (1) a, mu*b > d_i: {}; condition (2) a+b = {lhs} > mu*sum(d) = {rhs}: {}",
        if cond1 { "holds" } else { "fails" },
        if cond2 { "holds" } else { "fails" },
    );
    let outcome = if cond1 && cond2 { Outcome::Passed } else { Outcome::Failed };
    CriterionOutcome::new(NAME, outcome, detail)
}

fn unblown_criterion(l: &DivisorClass) -> CriterionOutcome {
    const NAME: &str = "unblown";
    if l.r() != 0 {
        return CriterionOutcome::new(NAME, Outcome::NotApplicable, "only for r = 0");
    }
    if l.a.is_positive() && l.b.is_positive() {
        CriterionOutcome::new(NAME, Outcome::Passed, "r = 0 and a, b > 0")
    } else {
        CriterionOutcome::new(NAME, Outcome::Failed, "r = 0 requires a, b > 0")
    }
}

/// `nH' − ΣEᵢ` with `n = gcd(a, b) ≥ 2` is ample iff `L² > 0`.
pub fn kuchle_ample(l: &DivisorClass, s: &SurfaceData) -> AmpleVerdict {
    assemble(necessary_checks(l, s), vec![kuchle_criterion(l)])
}

/// `⌊a/d⌋, ⌊b/d⌋ ≥ 2` and `2⌊a/d⌋² > r`, `2⌊b/d⌋² > r` for uniform `d`.
pub fn homogeneous_ample(l: &DivisorClass, s: &SurfaceData) -> AmpleVerdict {
    assemble(necessary_checks(l, s), vec![homogeneous_criterion(l)])
}

/// `a, μb > dᵢ` for all `i` and `a + b > μ Σdᵢ`.
pub fn nonhomogeneous_ample(l: &DivisorClass, s: &SurfaceData) -> AmpleVerdict {
    assemble(necessary_checks(l, s), vec![nonhomogeneous_criterion(l, s)])
}

fn content(l: &DivisorClass) -> BigInt {
    l.d.iter().fold(l.a.gcd(&l.b), |g, x| g.gcd(x))
}

/// Runs every check and criterion. Ampleness is invariant under positive
/// scaling, so the Kuchle test is applied to the primitive part of `L`.
pub fn decide_ample(l: &DivisorClass, s: &SurfaceData) -> AmpleVerdict {
    let checks = necessary_checks(l, s);
    if checks.iter().any(|c| !c.passed) {
        return assemble(checks, Vec::new());
    }
    let g = content(l);
    let kuchle = if g > BigInt::one() {
        let primitive = DivisorClass {
            a: &l.a / &g,
            b: &l.b / &g,
            d: l.d.iter().map(|x| x / &g).collect(),
        };
        let mut c = kuchle_criterion(&primitive);
        c.detail = format!("applied to L/{g} = {primitive}: {}", c.detail);
        c
    } else {
        kuchle_criterion(l)
    };
    assemble(
        checks,
        vec![
            unblown_criterion(l),
            kuchle,
            homogeneous_criterion(l),
            nonhomogeneous_criterion(l, s),
        ],
    )
}

/// Sufficient nef test for `(a, b, d)` on `X_r`, `r ≥ 8`:
/// `⌊a/d⌋, ⌊b/d⌋ ≥ ⌈√(r/2)⌉`. Accepts rational `d`.
pub fn nef_for_d(a: &BigInt, b: &BigInt, r: usize, d: &Rational) -> Result<bool> {
    if r < 8 {
        return Err(Error::OutOfRegime(format!("nef test needs r >= 8, got r = {r}")));
    }
    if !a.is_positive() || !b.is_positive() || !d.is_positive() {
        return Err(Error::InvalidInput("nef test needs a, b > 0 and d > 0".into()));
    }
    let k = rational::k_for(r);
    let fa = rational::floor(&(Rational::from_integer(a.clone()) / d));
    let fb = rational::floor(&(Rational::from_integer(b.clone()) / d));
    Ok(fa >= k && fb >= k)
}
