//! Seshadri constants: multi-point constants on `X`, single-point constants
//! on `X_r` by the fibre locus of the point, the very general point, and the
//! global constant with rationality certificates.
//!
//! Evaluators never fail on unmet hypotheses; they return
//! [`SeshadriStatus::HypothesesNotMet`] with the trace, so parameter grids
//! can be scanned in bulk. Errors are reserved for malformed shapes and
//! unsupported surface types.

mod certificate;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::catalog::SurfaceData;
use crate::error::{Error, Result};
use crate::lattice::rational::{self, serde_bigint, serde_opt_rational, serde_rational, Rational};
use crate::lattice::{
    compare_bounds, fibre_class, seshadri_ratio, self_intersection, Bound, DivisorClass, FibreKind,
};
use crate::positivity::{decide_ample, AmpleStatus};

pub use certificate::{Certificate, CertificateKind, Comparison, Relation, WitnessCurve};

/// Combinatorial invariants of a point set `x₁, …, x_r ∈ X`.
///
/// `s0`/`t0` are the largest numbers of points on a single fibre of `Ψ`/`Φ`;
/// `l_a`/`l_b` are the fewest fibres of `Ψ`/`Φ` covering all points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfig {
    pub r: usize,
    pub s0: usize,
    pub t0: usize,
    #[serde(rename = "lA")]
    pub l_a: usize,
    #[serde(rename = "lB")]
    pub l_b: usize,
    #[serde(default)]
    pub s0_on_singular_a: bool,
}

impl PointConfig {
    pub fn new(r: usize, s0: usize, t0: usize, l_a: usize, l_b: usize, s0_on_singular_a: bool) -> Result<Self> {
        let cfg = PointConfig { r, s0, t0, l_a, l_b, s0_on_singular_a };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let &PointConfig { r, s0, t0, l_a, l_b, .. } = self;
        let bad = |msg: String| Err(Error::InvalidInput(format!("point configuration: {msg}")));
        if [r, s0, t0, l_a, l_b].contains(&0) {
            return bad("r, s0, t0, lA, lB must be positive".into());
        }
        if s0.max(t0).max(l_a).max(l_b) > r {
            return bad(format!("s0, t0, lA, lB must not exceed r = {r}"));
        }
        if l_b < s0 || l_a < t0 {
            return bad(format!("need lB >= s0 and lA >= t0 (got lB={l_b}, s0={s0}, lA={l_a}, t0={t0})"));
        }
        // l_A fibres of Ψ hold at most s0 points each, and likewise for Φ.
        if r > l_a * s0 || r > l_b * t0 {
            return bad(format!("r = {r} points cannot be covered by lA*s0 = {} or lB*t0 = {}", l_a * s0, l_b * t0));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeshadriStatus {
    Exact,
    Bounds,
    HypothesesNotMet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

fn hyp(name: &str, holds: bool, detail: impl Into<String>) -> Hypothesis {
    Hypothesis { name: name.to_string(), holds, detail: detail.into() }
}

/// A curve through the point(s) with its Seshadri ratio.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attaining {
    pub curve: String,
    pub class: DivisorClass,
    #[serde(with = "serde_bigint")]
    pub multiplicity: BigInt,
    #[serde(with = "serde_rational")]
    pub ratio: Rational,
}

impl From<Attaining> for WitnessCurve {
    fn from(a: Attaining) -> Self {
        WitnessCurve { curve: a.curve, class: a.class, multiplicity: a.multiplicity, ratio: a.ratio }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeshadriResult {
    pub status: SeshadriStatus,
    #[serde(with = "serde_opt_rational")]
    pub value: Option<Rational>,
    #[serde(with = "serde_rational")]
    pub lower: Rational,
    pub upper: Bound,
    pub hypotheses: Vec<Hypothesis>,
    pub attaining: Vec<Attaining>,
}

impl SeshadriResult {
    fn exact(value: Rational, hypotheses: Vec<Hypothesis>, attaining: Vec<Attaining>) -> Self {
        SeshadriResult {
            status: SeshadriStatus::Exact,
            value: Some(value.clone()),
            lower: value.clone(),
            upper: Bound::rational(value),
            hypotheses,
            attaining,
        }
    }

    fn bounds(lower: Rational, upper: Bound, hypotheses: Vec<Hypothesis>, attaining: Vec<Attaining>) -> Self {
        debug_assert!(compare_bounds(&Bound::rational(lower.clone()), &upper) != Ordering::Greater);
        SeshadriResult { status: SeshadriStatus::Bounds, value: None, lower, upper, hypotheses, attaining }
    }

    /// Only the general facts `0 < ε ≤ √(radicand)` are reported.
    fn not_met(radicand: Rational, hypotheses: Vec<Hypothesis>) -> Self {
        SeshadriResult {
            status: SeshadriStatus::HypothesesNotMet,
            value: None,
            lower: Rational::zero(),
            upper: Bound::sqrt(radicand),
            hypotheses,
            attaining: Vec::new(),
        }
    }

    pub fn hypothesis(&self, name: &str) -> Option<&Hypothesis> {
        self.hypotheses.iter().find(|h| h.name == name)
    }
}

fn q(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

fn attain(l: &DivisorClass, s: &SurfaceData, kind: FibreKind, m: usize) -> Result<Attaining> {
    let class = fibre_class(s, l.r(), kind)?;
    let multiplicity = BigInt::from(m);
    let ratio = seshadri_ratio(l, &class, &multiplicity)?;
    Ok(Attaining { curve: kind.describe(), class, multiplicity, ratio })
}

/// `min(rational, √radicand)`, keeping the rational on ties.
fn capped(upper: Rational, radicand: Rational) -> Bound {
    Bound::rational(upper).min(Bound::sqrt(radicand))
}

fn all_hold(hs: &[Hypothesis]) -> bool {
    hs.iter().all(|h| h.holds)
}

// ---------------------------------------------------------------------------
// Multi-point constants on X
// ---------------------------------------------------------------------------

fn require_unblown(l: &DivisorClass) -> Result<()> {
    if l.r() != 0 {
        return Err(Error::UnsupportedShape(format!(
            "multi-point constants take a class on X (r = 0), got r = {}",
            l.r()
        )));
    }
    Ok(())
}

/// `ε(X, L, r)` at `r ≥ 8` general points: bounded below by
/// `min(a, b)/⌈√(r/2)⌉` and above by `√(L²/r)`; exact when `a = b` and
/// `r/2` is a perfect square.
pub fn multipoint_general(l: &DivisorClass, r: usize) -> Result<SeshadriResult> {
    require_unblown(l)?;
    if r == 0 {
        return Err(Error::InvalidInput("number of points r must be positive".into()));
    }
    let one = BigInt::one();
    let radicand = Rational::new(self_intersection(l), BigInt::from(r));
    let hyps = vec![
        hyp("a, b > 1", l.a > one && l.b > one, format!("a = {}, b = {}", l.a, l.b)),
        hyp("r >= 8", r >= 8, format!("r = {r}")),
    ];
    if !all_hold(&hyps) {
        return Ok(SeshadriResult::not_met(radicand, hyps));
    }
    let k = rational::k_for(r);
    let lower = Rational::new(l.a.clone().min(l.b.clone()), k.clone());
    let mut hyps = hyps;
    let square = l.a == l.b && BigInt::from(2) * &k * &k == BigInt::from(r);
    hyps.push(hyp(
        "a = b and r/2 a perfect square",
        square,
        format!("k = ceil(sqrt(r/2)) = {k}, 2k^2 = {}", BigInt::from(2) * &k * &k),
    ));
    if square {
        debug_assert_eq!(Bound::sqrt_normalized(radicand), Bound::rational(lower.clone()));
        return Ok(SeshadriResult::exact(lower, hyps, Vec::new()));
    }
    Ok(SeshadriResult::bounds(lower, Bound::sqrt_normalized(radicand), hyps, Vec::new()))
}

/// `ε(X, L, x₁, …, x_r)` for the special configurations lying on fibres.
pub fn multipoint_special(l: &DivisorClass, s: &SurfaceData, cfg: &PointConfig) -> Result<SeshadriResult> {
    require_unblown(l)?;
    cfg.validate()?;
    let (a, b) = (&l.a, &l.b);
    let radicand = Rational::new(self_intersection(l), BigInt::from(cfg.r));
    let mut hyps = vec![hyp("L ample: a, b > 0", a.is_positive() && b.is_positive(), format!("a = {a}, b = {b}"))];
    let flag_name = if s.is_odd() { "s0 points on a Singular A" } else { "points on singular fibres" };
    hyps.push(hyp(flag_name, cfg.s0_on_singular_a, format!("flag = {}", cfg.s0_on_singular_a)));
    let (s0, t0, l_a, l_b) = (cfg.s0, cfg.t0, cfg.l_a, cfg.l_b);
    match s.type_id {
        1 => {
            hyps.push(hyp("lA = t0", l_a == t0, format!("lA = {l_a}, t0 = {t0}")));
            hyps.push(hyp("s0 <= lB <= 2 s0", l_b >= s0 && l_b <= 2 * s0, format!("lB = {l_b}, s0 = {s0}")));
        }
        3 | 5 | 7 => {
            hyps.push(hyp("lA = t0", l_a == t0, format!("lA = {l_a}, t0 = {t0}")));
            hyps.push(hyp("lB = s0", l_b == s0, format!("lB = {l_b}, s0 = {s0}")));
        }
        t => {
            let need = match t {
                2 => 4,
                4 => 2,
                _ => 3,
            };
            hyps.push(hyp(
                &format!("t0 = lA = {need}"),
                t0 == need && l_a == need,
                format!("t0 = {t0}, lA = {l_a}"),
            ));
            hyps.push(hyp("lB = s0", l_b == s0, format!("lB = {l_b}, s0 = {s0}")));
        }
    }
    if !all_hold(&hyps) {
        return Ok(SeshadriResult::not_met(radicand, hyps));
    }

    let attaining = vec![
        attain(l, s, FibreKind::SingularAReduced, s0)?,
        attain(l, s, FibreKind::FibreB, t0)?,
    ];
    let b_s0 = Rational::new(b.clone(), BigInt::from(s0));
    let result = match s.type_id {
        1 | 3 | 5 | 7 => {
            let v = Rational::new(a.clone(), BigInt::from(t0)).min(b_s0);
            SeshadriResult::exact(v, hyps, attaining)
        }
        2 => SeshadriResult::exact(Rational::new(a.clone(), BigInt::from(2)).min(b_s0), hyps, attaining),
        4 => SeshadriResult::exact(q(a).min(b_s0), hyps, attaining),
        _ => {
            let upper = q(a).min(b_s0);
            let lower = Rational::new(BigInt::from(2), BigInt::from(3)) * &upper;
            SeshadriResult::bounds(lower, capped(upper, radicand), hyps, attaining)
        }
    };
    Ok(result)
}

// ---------------------------------------------------------------------------
// Single-point constants on X_r
// ---------------------------------------------------------------------------

/// Which fibre of `Ψ` the point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Locus {
    SmoothA,
    AMinusE,
    SingularA,
}

impl std::str::FromStr for Locus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "smooth-a" => Ok(Locus::SmoothA),
            "a-minus-e" => Ok(Locus::AMinusE),
            "singular-a" => Ok(Locus::SingularA),
            _ => Err(Error::InvalidInput(format!(
                "unknown locus {s:?}: expected smooth-a, a-minus-e or singular-a"
            ))),
        }
    }
}

/// Shared preconditions of the blown-up evaluators: uniform `d ≥ 1`,
/// `a, b ≥ 2kd` with `k = ⌈√(r/2)⌉`, and ampleness.
struct Uniform<'a> {
    l: &'a DivisorClass,
    d: BigInt,
    k: BigInt,
    mu: BigInt,
}

fn uniform_shape(l: &DivisorClass) -> Result<BigInt> {
    l.uniform_d().cloned().ok_or_else(|| {
        Error::UnsupportedShape(format!("expected L = (a, b, d) with uniform d and r >= 1, got {l}"))
    })
}

fn require_odd(s: &SurfaceData) -> Result<()> {
    if !s.is_odd() {
        return Err(Error::UnsupportedType(s.type_id));
    }
    Ok(())
}

impl<'a> Uniform<'a> {
    fn new(l: &'a DivisorClass, s: &SurfaceData) -> Result<Self> {
        let d = uniform_shape(l)?;
        Ok(Uniform { l, d, k: rational::k_for(l.r()), mu: BigInt::from(s.mu) })
    }

    fn two_kd(&self) -> BigInt {
        BigInt::from(2) * &self.k * &self.d
    }

    fn d_positive(&self) -> Hypothesis {
        hyp("d >= 1", self.d.is_positive(), format!("d = {}", self.d))
    }

    fn large(&self) -> Vec<Hypothesis> {
        let t = self.two_kd();
        vec![
            hyp("a >= 2kd", self.l.a >= t, format!("a = {} >= {t} = 2*{}*{}", self.l.a, self.k, self.d)),
            hyp("b >= 2kd", self.l.b >= t, format!("b = {} >= {t} = 2*{}*{}", self.l.b, self.k, self.d)),
        ]
    }

    fn large_holds(&self) -> bool {
        let t = self.two_kd();
        self.l.a >= t && self.l.b >= t
    }

    fn ample(&self, s: &SurfaceData) -> Hypothesis {
        let v = decide_ample(self.l, s);
        hyp("L ample", v.status == AmpleStatus::Proven, format!("ampleness verdict: {:?}", v.status).to_lowercase())
    }

    /// `(2μ−1)a ≤ μb`, i.e. `a ≤ μ/(2μ−1)·b`.
    fn low_side(&self) -> bool {
        (BigInt::from(2) * &self.mu - 1) * &self.l.a <= &self.mu * &self.l.b
    }

    fn radicand(&self) -> Rational {
        q(&self_intersection(self.l))
    }
}

/// `ε(X_r, L, x)` for `x` on a smooth `A`, on `A − Eᵢ`, or on a Singular `A`,
/// optionally also on some `B − E_j`. Odd types only.
pub fn point_on_locus(l: &DivisorClass, s: &SurfaceData, locus: Locus, on_b_minus_e: bool) -> Result<SeshadriResult> {
    require_odd(s)?;
    let u = Uniform::new(l, s)?;
    let mut hyps = vec![u.d_positive()];
    hyps.extend(u.large());
    hyps.push(u.ample(s));
    if locus == Locus::AMinusE && on_b_minus_e {
        hyps.push(hyp("r >= 2", l.r() >= 2, format!("x on A-E_i and B-E_j needs i != j; r = {}", l.r())));
    }
    if !all_hold(&hyps) {
        return Ok(SeshadriResult::not_met(u.radicand(), hyps));
    }

    let (a, b, d, mu) = (&l.a, &l.b, &u.d, &u.mu);
    let through_b = if on_b_minus_e {
        let j = if locus == Locus::AMinusE { 2 } else { 1 };
        attain(l, s, FibreKind::BMinusE(j), 1)?
    } else {
        attain(l, s, FibreKind::FibreB, 1)?
    };
    let a_side = if on_b_minus_e { a - d } else { a.clone() };
    let two_mu_minus_one = BigInt::from(2) * mu - 1;
    let (through_a, fibre_value, exact_cond) = match locus {
        Locus::SingularA => (attain(l, s, FibreKind::SingularAReduced, 1)?, b.clone(), None),
        Locus::SmoothA => {
            let high = a >= &(mu * &two_mu_minus_one * b);
            let detail = format!(
                "(2mu-1)a = {} <= mu*b = {}: {}; a = {a} >= mu(2mu-1)b = {}: {high}",
                &two_mu_minus_one * a,
                mu * b,
                u.low_side(),
                mu * &two_mu_minus_one * b
            );
            (attain(l, s, FibreKind::FibreA, 1)?, mu * b, Some((u.low_side() || high, detail)))
        }
        Locus::AMinusE => {
            let bound = mu * &two_mu_minus_one * b - BigInt::from(2) * mu * d;
            let high = a >= &bound;
            let detail = format!(
                "(2mu-1)a = {} <= mu*b = {}: {}; a = {a} >= mu(2mu-1)b - 2mu*d = {bound}: {high}",
                &two_mu_minus_one * a,
                mu * b,
                u.low_side()
            );
            (attain(l, s, FibreKind::AMinusE(1), 1)?, mu * b - d, Some((u.low_side() || high, detail)))
        }
    };
    let upper = fibre_value.min(a_side);
    let attaining = vec![through_a, through_b];
    debug_assert_eq!(attaining.iter().map(|x| x.ratio.clone()).min(), Some(q(&upper)));

    match exact_cond {
        None => Ok(SeshadriResult::exact(q(&upper), hyps, attaining)),
        Some((true, detail)) => {
            hyps.push(hyp("equality condition", true, detail));
            Ok(SeshadriResult::exact(q(&upper), hyps, attaining))
        }
        Some((false, detail)) => {
            hyps.push(hyp("equality condition", false, detail));
            // curves other than the fibres through x have ratio ≥ a/(2μ) + b/2
            let chain = Rational::new(a.clone(), BigInt::from(2) * mu) + Rational::new(b.clone(), BigInt::from(2));
            let lower = chain.min(q(&upper));
            Ok(SeshadriResult::bounds(lower, capped(q(&upper), u.radicand()), hyps, attaining))
        }
    }
}

/// `ε(X_r, L, x)` at a very general point `x`. Odd types only.
pub fn very_general_point(l: &DivisorClass, s: &SurfaceData) -> Result<SeshadriResult> {
    require_odd(s)?;
    let u = Uniform::new(l, s)?;
    let (a, b, mu) = (&l.a, &l.b, &u.mu);
    let mut hyps = vec![u.d_positive()];
    hyps.extend(u.large());
    hyps.push(u.ample(s));
    let two_mu_minus_one = BigInt::from(2) * mu - 1;
    let low = u.low_side();
    let high = a >= &(mu * b);
    hyps.push(hyp(
        "a >= mu*b or (2mu-1)a <= mu*b",
        low || high,
        format!("a = {a}, mu*b = {}, (2mu-1)a = {}", mu * b, &two_mu_minus_one * a),
    ));
    if !all_hold(&hyps) {
        return Ok(SeshadriResult::not_met(u.radicand(), hyps));
    }
    let along_b = attain(l, s, FibreKind::FibreB, 1)?;
    let along_a = attain(l, s, FibreKind::FibreA, 1)?;
    if low {
        return Ok(SeshadriResult::exact(q(a), hyps, vec![along_b, along_a]));
    }
    Ok(SeshadriResult::bounds(q(b), capped(q(&(mu * b)), u.radicand()), hyps, vec![along_a, along_b]))
}

// ---------------------------------------------------------------------------
// Global constants
// ---------------------------------------------------------------------------

const WITNESS_POINT: &str = "x in Singular A ∩ (B-E_1)";

/// `ε(X_r, L)` for `L = (a, b, d)`: the exact value on odd types when the
/// single-point bounds pin it down, otherwise a rationality certificate when
/// one of the submaximal-curve hypotheses holds.
pub fn global_constant(l: &DivisorClass, s: &SurfaceData) -> Result<(SeshadriResult, Option<Certificate>)> {
    let u = Uniform::new(l, s)?;
    let (a, b, d, mu) = (&l.a, &l.b, &u.d, &u.mu);
    let r = BigInt::from(l.r());
    let mut hyps = vec![u.d_positive(), u.ample(s)];
    if !all_hold(&hyps) {
        return Ok((SeshadriResult::not_met(u.radicand(), hyps), None));
    }

    let witnesses = vec![
        attain(l, s, FibreKind::SingularAReduced, 1)?,
        attain(l, s, FibreKind::BMinusE(1), 1)?,
    ];
    let witness_min = witnesses.iter().map(|w| w.ratio.clone()).min().expect("two witnesses");

    if s.is_odd() {
        let two_mu_minus_one = BigInt::from(2) * mu - 1;
        let excluded_lo = &two_mu_minus_one * a >= mu * b + BigInt::from(2) * mu * d;
        let excluded_hi = a <= &(mu * b);
        let outside = !(excluded_lo && excluded_hi);
        let mut exact_hyps = u.large();
        exact_hyps.push(hyp(
            "a outside [mu/(2mu-1) b + 2mu/(2mu-1) d, mu*b]",
            outside,
            format!(
                "(2mu-1)a = {} vs mu*b + 2mu*d = {}; a = {a} vs mu*b = {}",
                &two_mu_minus_one * a,
                mu * b + BigInt::from(2) * mu * d,
                mu * b
            ),
        ));
        for h in &mut exact_hyps {
            h.name = format!("exact value: {}", h.name);
        }
        if u.large_holds() && outside {
            hyps.extend(exact_hyps);
            let value = q(&(a - d).min(b.clone()));
            debug_assert_eq!(value, witness_min);
            let cert = certify(CertificateKind::GlobalExact, l, &witnesses);
            return Ok((SeshadriResult::exact(value, hyps, witnesses), Some(cert)));
        }
        hyps.extend(exact_hyps);

        let r1 = &r + 1;
        let a_big = a * a >= &r1 * d * d;
        let rd = &r * d;
        let b_big = &rd <= b || &r1 * b * b > (&rd - b) * (&rd - b);
        hyps.push(hyp(
            "a >= sqrt(r+1) d",
            a_big,
            format!("a^2 = {} >= (r+1)d^2 = {}", a * a, &r1 * d * d),
        ));
        hyps.push(hyp(
            "b > r d/(sqrt(r+1)+1)",
            b_big,
            format!("rd = {rd}, b = {b}, (r+1)b^2 = {}, (rd-b)^2 = {}", &r1 * b * b, (&rd - b) * (&rd - b)),
        ));
        if a_big && b_big {
            return Ok(rationality(l, hyps, witnesses, witness_min));
        }
        return Ok((SeshadriResult::not_met(u.radicand(), hyps), None));
    }

    let rd = &r * d;
    let b_gt_rd = b > &rd;
    if s.type_id == 2 || s.type_id == 4 {
        hyps.push(hyp("b > rd", b_gt_rd, format!("b = {b} > {rd} = rd")));
        if b_gt_rd {
            return Ok(rationality(l, hyps, witnesses, witness_min));
        }
        return Ok((SeshadriResult::not_met(u.radicand(), hyps), None));
    }

    // type 6
    let r_ok = l.r() >= 3;
    let two_a = BigInt::from(2) * a;
    let r1d = (&r + 1) * d;
    let steep = BigInt::from(2) * b >= BigInt::from(9) * a - BigInt::from(4) * d;
    let two_a_minus_d = BigInt::from(2) * (a - d);
    let flat = b <= &two_a_minus_d;
    hyps.push(hyp("r >= 3", r_ok, format!("r = {r}")));
    hyps.push(hyp("2a > (r+1)d", two_a > r1d, format!("2a={two_a} > {r1d}=(r+1)d")));
    hyps.push(hyp("b > rd", b_gt_rd, format!("b={b} > {rd}=rd")));
    hyps.push(hyp(
        "2b >= 9a - 4d or b <= 2(a-d)",
        steep || flat,
        format!(
            "2b={} >= {}=9a-4d: {steep}; b={b} <= {two_a_minus_d}=2(a-d): {flat}",
            BigInt::from(2) * b,
            BigInt::from(9) * a - BigInt::from(4) * d
        ),
    ));
    if all_hold(&hyps) {
        return Ok(rationality(l, hyps, witnesses, witness_min));
    }
    Ok((SeshadriResult::not_met(u.radicand(), hyps), None))
}

fn certify(kind: CertificateKind, l: &DivisorClass, witnesses: &[Attaining]) -> Certificate {
    let cert = Certificate::build(kind, WITNESS_POINT, l, witnesses.iter().cloned().map(Into::into).collect());
    debug_assert!(cert.verify());
    cert
}

fn rationality(
    l: &DivisorClass,
    hyps: Vec<Hypothesis>,
    witnesses: Vec<Attaining>,
    witness_min: Rational,
) -> (SeshadriResult, Option<Certificate>) {
    let cert = certify(CertificateKind::GlobalRationality, l, &witnesses);
    let result = SeshadriResult::bounds(Rational::zero(), Bound::rational(witness_min), hyps, witnesses);
    (result, Some(cert))
}

#[cfg(test)]
mod tests;
