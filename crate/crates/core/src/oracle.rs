//! Brute-force verification of the closed forms.
//!
//! Candidate curves are replaced by their numerical data `(α, β)` and a total
//! multiplicity `m`. Bézout's inequality against fibre classes caps `m` by
//! linear forms in `α, β`; the oracle enumerates `α, β ∈ [1, B]`, takes the
//! largest admissible `m` (the ratio decreases in `m`), and minimises the
//! ratio `(w_β·β + w_α·α)/m` exactly.
//!
//! This checks statements about the relaxation over numerical classes. It does
//! not decide whether irreducible curves with those classes exist.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::SurfaceData;
use crate::error::{Error, Result};
use crate::lattice::rational::{self, serde_bigint, serde_opt_rational, serde_rational, Rational};
use crate::lattice::{compare_bounds, fibre_class, intersect, self_intersection, Bound, DivisorClass, FibreKind};
use crate::seshadri::{
    global_constant, multipoint_special, point_on_locus, very_general_point, CertificateKind, Locus, PointConfig,
    SeshadriResult, SeshadriStatus,
};

/// `m ≤ alpha·α + beta·β + offset`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cap {
    #[serde(with = "serde_bigint")]
    pub alpha: BigInt,
    #[serde(with = "serde_bigint")]
    pub beta: BigInt,
    #[serde(with = "serde_bigint", default)]
    pub offset: BigInt,
}

impl Cap {
    pub fn new(alpha: i64, beta: i64, offset: i64) -> Self {
        Cap { alpha: alpha.into(), beta: beta.into(), offset: offset.into() }
    }

    fn eval(&self, alpha: u32, beta: u32) -> BigInt {
        &self.alpha * alpha + &self.beta * beta + &self.offset
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintSet {
    pub caps: Vec<Cap>,
    pub description: String,
}

impl ConstraintSet {
    pub fn new(caps: Vec<Cap>, description: impl Into<String>) -> Result<Self> {
        if caps.is_empty() {
            return Err(Error::InvalidInput("constraint set needs at least one cap".into()));
        }
        if caps.iter().any(|c| c.alpha.is_negative() || c.beta.is_negative()) {
            return Err(Error::InvalidInput("cap coefficients must be non-negative".into()));
        }
        Ok(ConstraintSet { caps, description: description.into() })
    }

    /// Largest admissible `m` at `(α, β)`.
    fn max_m(&self, alpha: u32, beta: u32) -> BigInt {
        self.caps.iter().map(|c| c.eval(alpha, beta)).min().expect("non-empty caps")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weights {
    pub alpha: Rational,
    pub beta: Rational,
}

impl Weights {
    pub fn new(alpha: Rational, beta: Rational) -> Self {
        Weights { alpha, beta }
    }

    fn non_negative(&self) -> bool {
        !self.alpha.is_negative() && !self.beta.is_negative()
    }
}

/// One distinct `(α/m, β/m)` point with a representative cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub x: Rational,
    pub y: Rational,
    pub alpha: u32,
    pub beta: u32,
    pub m: BigInt,
}

/// The weight-independent part of the box search: every feasible cell reduced
/// to `(α/m, β/m)`, plus its Pareto-minimal frontier. For non-negative weights
/// the minimum ratio is always attained on the frontier.
#[derive(Debug, Clone)]
pub struct BoxProfile {
    cells: Vec<Cell>,
    frontier: Vec<Cell>,
}

impl BoxProfile {
    pub fn new(cons: &ConstraintSet, box_size: u32) -> Result<Self> {
        if box_size == 0 {
            return Err(Error::InvalidInput("box size must be at least 1".into()));
        }
        let mut cells = Vec::new();
        for alpha in 1..=box_size {
            for beta in 1..=box_size {
                let m = cons.max_m(alpha, beta);
                if !m.is_positive() {
                    continue;
                }
                cells.push(Cell {
                    x: Rational::new(BigInt::from(alpha), m.clone()),
                    y: Rational::new(BigInt::from(beta), m.clone()),
                    alpha,
                    beta,
                    m,
                });
            }
        }
        if cells.is_empty() {
            return Err(Error::EmptyFeasible(format!("{} in [1,{box_size}]^2", cons.description)));
        }
        cells.sort_by(|p, q| p.x.cmp(&q.x).then(p.y.cmp(&q.y)));
        cells.dedup_by(|p, q| p.x == q.x && p.y == q.y);
        let mut frontier: Vec<Cell> = Vec::new();
        for c in &cells {
            if frontier.last().is_none_or(|f| c.y < f.y) {
                frontier.push(c.clone());
            }
        }
        Ok(BoxProfile { cells, frontier })
    }

    /// The minimum ratio and a cell attaining it.
    pub fn min_ratio(&self, w: &Weights) -> (Rational, &Cell) {
        let pool = if w.non_negative() { &self.frontier } else { &self.cells };
        pool.iter()
            .map(|c| (&w.alpha * &c.x + &w.beta * &c.y, c))
            .min_by(|p, q| p.0.cmp(&q.0))
            .expect("profile is non-empty")
    }
}

/// `min (w_β·β + w_α·α)/m` over `α, β ∈ [1, B]` with `m` the smallest cap.
pub fn min_ratio_over_box(w: &Weights, cons: &ConstraintSet, box_size: u32) -> Result<Rational> {
    Ok(BoxProfile::new(cons, box_size)?.min_ratio(w).0)
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub parameters: String,
    pub alpha: Option<u32>,
    pub beta: Option<u32>,
    #[serde(with = "opt_bigint")]
    pub m: Option<BigInt>,
    #[serde(with = "serde_rational")]
    pub found: Rational,
    pub claimed: Bound,
    pub note: String,
}

mod opt_bigint {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Wrapped(#[serde(with = "serde_bigint")] BigInt);

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
        v.clone().map(Wrapped).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<BigInt>, D::Error> {
        Ok(Option::<Wrapped>::deserialize(d)?.map(|w| w.0))
    }
}

/// Partial result over a slice of the grid. Merging is associative and
/// commutative once violations are sorted, so partitions are arbitrary.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub instances: u64,
    pub violations: Vec<Violation>,
    pub min_gap: Option<Rational>,
    pub counts: BTreeMap<String, u64>,
}

impl Tally {
    pub fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.violations.extend(other.violations);
        self.min_gap = match (self.min_gap, other.min_gap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        self
    }

    fn gap(&mut self, gap: Rational) {
        self.min_gap = Some(match self.min_gap.take() {
            Some(g) => g.min(gap),
            None => gap,
        });
    }

    fn count(&mut self, key: &str) {
        *self.counts.entry(key.to_string()).or_default() += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub property: String,
    #[serde(rename = "type")]
    pub surface_type: u32,
    pub grid: String,
    pub instances_checked: u64,
    pub violations: Vec<Violation>,
    #[serde(with = "serde_opt_rational")]
    pub min_gap: Option<Rational>,
    pub tallies: BTreeMap<String, u64>,
}

impl OracleReport {
    fn finish(property: &str, s: &SurfaceData, grid: String, mut t: Tally) -> Self {
        t.violations.sort_by(|p, q| p.parameters.cmp(&q.parameters).then(p.note.cmp(&q.note)));
        OracleReport {
            property: property.to_string(),
            surface_type: s.type_id,
            grid,
            instances_checked: t.instances,
            violations: t.violations,
            min_gap: t.min_gap,
            tallies: t.counts,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn run_partitioned<T, F>(items: Vec<T>, jobs: Option<usize>, f: F) -> Result<Tally>
where
    T: Send + Sync,
    F: Fn(&T) -> Tally + Send + Sync,
{
    let work = || items.par_iter().map(&f).reduce(Tally::default, Tally::merge);
    match jobs {
        None => Ok(work()),
        Some(0) => Err(Error::InvalidInput("--jobs must be at least 1".into())),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::InvalidInput(format!("cannot start thread pool: {e}")))
            .map(|pool| pool.install(work)),
    }
}

fn violation(parameters: String, cell: Option<&Cell>, found: Rational, claimed: Bound, note: &str) -> Violation {
    Violation {
        parameters,
        alpha: cell.map(|c| c.alpha),
        beta: cell.map(|c| c.beta),
        m: cell.map(|c| c.m.clone()),
        found,
        claimed,
        note: note.to_string(),
    }
}

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Attaining entries must agree with a fresh intersection computation.
fn attaining_consistent(l: &DivisorClass, res: &SeshadriResult) -> bool {
    res.attaining.iter().all(|x| {
        intersect(l, &x.class).map(|v| Rational::new(v, x.multiplicity.clone())).ok().as_ref() == Some(&x.ratio)
    })
}

fn min_attaining(res: &SeshadriResult) -> Option<Rational> {
    res.attaining.iter().map(|x| x.ratio.clone()).min()
}

// ---------------------------------------------------------------------------
// Multi-point closed forms
// ---------------------------------------------------------------------------

/// Bézout caps for points arranged on `l_A` fibres of `Ψ` and `l_B` of `Φ`.
fn multipoint_caps(s: &SurfaceData, l_a: usize, l_b: usize) -> ConstraintSet {
    let (mu, q) = (s.mu as i64, s.fibre_b_coeff as i64);
    let (l_a, l_b) = (l_a as i64, l_b as i64);
    if s.is_odd() {
        // C·(μ,0) = μβ on each of l_A fibres, C·(0,1) = α on each of l_B fibres
        ConstraintSet::new(
            vec![Cap::new(0, mu * l_a, 0), Cap::new(l_b, 0, 0)],
            format!("m <= {mu}*{l_a}*beta, m <= {l_b}*alpha"),
        )
    } else {
        // reduced singular fibres (1,0) meet C in β; fibres (0,γ/μ) in (γ/μ)α
        ConstraintSet::new(
            vec![Cap::new(0, l_a, 0), Cap::new(q * l_b, 0, 0)],
            format!("m <= {l_a}*beta, m <= {q}*{l_b}*alpha"),
        )
    }
    .expect("well-formed caps")
}

/// The closed form, or for type 6 the upper value `min{a, b/s₀}`.
fn multipoint_closed_form(s: &SurfaceData, a: i64, b: i64, s0: usize, t0: usize) -> Rational {
    let b_s0 = Rational::new(b.into(), (s0 as i64).into());
    match s.type_id {
        2 => Rational::new(a.into(), 2.into()).min(b_s0),
        4 | 6 => int(a).min(b_s0),
        _ => Rational::new(a.into(), (t0 as i64).into()).min(b_s0),
    }
}

fn multipoint_configs(s: &SurfaceData) -> Vec<PointConfig> {
    let t0s: Vec<usize> = match s.type_id {
        2 => vec![4],
        4 => vec![2],
        6 => vec![3],
        _ => (1..=4).collect(),
    };
    let mut out = Vec::new();
    for s0 in 1..=4 {
        for &t0 in &t0s {
            let l_bs: Vec<usize> = if s.type_id == 1 { (s0..=2 * s0).collect() } else { vec![s0] };
            for l_b in l_bs {
                if let Ok(cfg) = PointConfig::new(s0 * t0, s0, t0, t0, l_b, true) {
                    out.push(cfg);
                }
            }
        }
    }
    out
}

/// Checks the multi-point closed forms: the box minimum never falls below the
/// claimed value (or lower bound), and the fibre witnesses attain it.
pub fn verify_multipoint_formula(
    s: &SurfaceData,
    grid_max: u32,
    box_size: u32,
    jobs: Option<usize>,
) -> Result<OracleReport> {
    if grid_max == 0 {
        return Err(Error::InvalidInput("grid_max must be at least 1".into()));
    }
    let configs = multipoint_configs(s);
    let profiles = configs
        .iter()
        .map(|c| BoxProfile::new(&multipoint_caps(s, c.l_a, c.l_b), box_size))
        .collect::<Result<Vec<_>>>()?;
    let items: Vec<(usize, i64)> =
        (0..configs.len()).flat_map(|i| (1..=grid_max as i64).map(move |a| (i, a))).collect();

    let tally = run_partitioned(items, jobs, |&(i, a)| {
        let cfg = &configs[i];
        let profile = &profiles[i];
        let mut t = Tally::default();
        for b in 1..=grid_max as i64 {
            t.instances += 1;
            let params = format!(
                "a={a} b={b} r={} s0={} t0={} lA={} lB={}",
                cfg.r, cfg.s0, cfg.t0, cfg.l_a, cfg.l_b
            );
            let l = DivisorClass::from_ints(a, b, &[]);
            let res = match multipoint_special(&l, s, cfg) {
                Ok(r) => r,
                Err(e) => {
                    t.violations.push(violation(params, None, int(0), Bound::rational(int(0)), &e.to_string()));
                    continue;
                }
            };
            let closed = multipoint_closed_form(s, a, b, cfg.s0, cfg.t0);
            let w = Weights::new(int(b), int(a));
            let (box_min, cell) = profile.min_ratio(&w);
            let claimed_lower = res.lower.clone();
            let expected_status = if s.type_id == 6 { SeshadriStatus::Bounds } else { SeshadriStatus::Exact };
            if res.status != expected_status {
                t.violations.push(violation(params, None, int(0), res.upper.clone(), "unexpected status"));
                continue;
            }
            t.count(if s.type_id == 6 { "bounds" } else { "exact" });
            // the closed form itself, independently of the evaluator
            let closed_ok = match res.status {
                SeshadriStatus::Exact => res.value.as_ref() == Some(&closed),
                _ => {
                    res.lower == Rational::new(2.into(), 3.into()) * &closed
                        && compare_bounds(&res.upper, &Bound::rational(closed.clone())) != std::cmp::Ordering::Greater
                }
            };
            if !closed_ok {
                t.violations.push(violation(params.clone(), None, claimed_lower.clone(), Bound::rational(closed.clone()), "evaluator disagrees with closed form"));
            }
            if box_min < claimed_lower {
                t.violations.push(violation(
                    params.clone(),
                    Some(cell),
                    box_min.clone(),
                    Bound::rational(claimed_lower.clone()),
                    "box minimum below claimed lower bound",
                ));
            } else if box_min == claimed_lower {
                t.count("box_min_equals_lower");
            }
            t.gap(&box_min - &claimed_lower);
            if !attaining_consistent(&l, &res) || min_attaining(&res).as_ref() != Some(&closed) {
                t.violations.push(violation(
                    params,
                    None,
                    min_attaining(&res).unwrap_or_default(),
                    Bound::rational(closed),
                    "fibre witnesses do not attain the closed form",
                ));
            }
        }
        t
    })?;
    let grid = format!(
        "a,b in [1,{grid_max}]; s0 in [1,4]; t0 per type; r = s0*t0; box [1,{box_size}]^2; {} configurations",
        configs.len()
    );
    Ok(OracleReport::finish("multipoint", s, grid, tally))
}

// ---------------------------------------------------------------------------
// Single-point inequality chain
// ---------------------------------------------------------------------------

const LOCI: [(Locus, bool); 6] = [
    (Locus::SmoothA, false),
    (Locus::SmoothA, true),
    (Locus::AMinusE, false),
    (Locus::AMinusE, true),
    (Locus::SingularA, false),
    (Locus::SingularA, true),
];

fn locus_name(locus: Locus, on_b: bool) -> String {
    let base = match locus {
        Locus::SmoothA => "smooth-a",
        Locus::AMinusE => "a-minus-e",
        Locus::SingularA => "singular-a",
    };
    if on_b {
        format!("{base}+b-minus-e")
    } else {
        base.to_string()
    }
}

/// Checks the chain `(a/2)β + (b/2)α ≥ m(a/(2μ) + b/2)` under the caps
/// `m ≤ μβ, m ≤ α` (and `m ≤ β, m ≤ α` on a Singular `A`), and that every
/// exact value claimed at a point does not exceed the chain minimum.
///
/// `a` ranges over `[1, μ(2μ−1)·G]` and `b` over `[1, max(G, 2μ−1)]`, so
/// both equality boundaries occur: `(2μ−1)a = μb` at `(μ, 2μ−1)` and
/// `a = μ(2μ−1)b` for every `b ≤ G`. `d` and `r` range over `[1, G]` subject
/// to `a, b ≥ 2kd`.
pub fn verify_single_point_chain(
    s: &SurfaceData,
    grid_max: u32,
    box_size: u32,
    jobs: Option<usize>,
) -> Result<OracleReport> {
    if !s.is_odd() {
        return Err(Error::UnsupportedType(s.type_id));
    }
    if grid_max == 0 {
        return Err(Error::InvalidInput("grid_max must be at least 1".into()));
    }
    let mu = s.mu as i64;
    let g = grid_max as i64;
    let smooth = BoxProfile::new(
        &ConstraintSet::new(vec![Cap::new(0, mu, 0), Cap::new(1, 0, 0)], format!("m <= {mu}*beta, m <= alpha"))?,
        box_size,
    )?;
    let singular = BoxProfile::new(
        &ConstraintSet::new(vec![Cap::new(0, 1, 0), Cap::new(1, 0, 0)], "m <= beta, m <= alpha")?,
        box_size,
    )?;
    let a_max = mu * (2 * mu - 1) * g;
    let b_max = g.max(2 * mu - 1);
    let items: Vec<(i64, i64)> = (1..=a_max).flat_map(|a| (1..=b_max).map(move |b| (a, b))).collect();

    let tally = run_partitioned(items, jobs, |&(a, b)| {
        let mut t = Tally::default();
        let half = |n: i64| Rational::new(n.into(), 2.into());
        let w = Weights::new(half(b), half(a));
        let (smooth_min, smooth_cell) = smooth.min_ratio(&w);
        let (sing_min, sing_cell) = singular.min_ratio(&w);
        let chain = Rational::new(a.into(), (2 * mu).into()) + half(b);
        let sing_chain = half(a) + half(b);
        if smooth_min < chain {
            t.violations.push(violation(format!("a={a} b={b}"), Some(smooth_cell), smooth_min.clone(), Bound::rational(chain.clone()), "chain a/(2mu) + b/2 fails"));
        }
        if sing_min < sing_chain {
            t.violations.push(violation(format!("a={a} b={b}"), Some(sing_cell), sing_min.clone(), Bound::rational(sing_chain), "chain a/2 + b/2 fails"));
        }
        for d in 1..=g {
            // r values with a, b ≥ 2kd; k is non-decreasing in r
            let rs: Vec<usize> = (1..=g as usize)
                .filter(|&r| {
                    let two_kd = BigInt::from(2) * rational::k_for(r) * d;
                    BigInt::from(a.min(b)) >= two_kd
                })
                .collect();
            let Some(&r) = rs.last() else { continue };
            t.instances += rs.len() as u64;
            let l = DivisorClass::uniform(a, b, d, r);
            let params = |what: &str| format!("a={a} b={b} d={d} r={r} {what}");
            for (locus, on_b) in LOCI {
                let name = locus_name(locus, on_b);
                let res = match point_on_locus(&l, s, locus, on_b) {
                    Ok(res) => res,
                    Err(e) => {
                        t.violations.push(violation(params(&name), None, int(0), Bound::rational(int(0)), &e.to_string()));
                        continue;
                    }
                };
                let (box_min, cell) = if locus == Locus::SingularA {
                    (&sing_min, sing_cell)
                } else {
                    (&smooth_min, smooth_cell)
                };
                check_point_claim(&mut t, &l, &res, box_min, cell, params(&name));
                if res.status == SeshadriStatus::Exact && locus == Locus::SmoothA && !on_b {
                    let v = res.value.as_ref().expect("exact value");
                    if v == box_min {
                        if (2 * mu - 1) * a == mu * b {
                            t.count("equality at (2mu-1)a = mu*b");
                        }
                        if a == mu * (2 * mu - 1) * b {
                            t.count("equality at a = mu(2mu-1)b");
                        }
                    }
                }
            }
            match very_general_point(&l, s) {
                Ok(res) => check_point_claim(&mut t, &l, &res, &smooth_min, smooth_cell, params("very-general")),
                Err(e) => t.violations.push(violation(params("very-general"), None, int(0), Bound::rational(int(0)), &e.to_string())),
            }
            if let Ok((res, _)) = global_constant(&l, s) {
                if res.status == SeshadriStatus::Exact {
                    let v = res.value.clone().expect("exact value");
                    if v > smooth_min || v > sing_min {
                        t.violations.push(violation(params("global"), Some(smooth_cell), smooth_min.clone(), Bound::rational(v), "global value exceeds chain"));
                    }
                }
            }
        }
        t
    })?;
    let grid = format!(
        "a in [1,{a_max}], b in [1,{b_max}], d,r in [1,{grid_max}] with a,b >= 2kd; box [1,{box_size}]^2"
    );
    Ok(OracleReport::finish("single-chain", s, grid, tally))
}

fn check_point_claim(t: &mut Tally, l: &DivisorClass, res: &SeshadriResult, box_min: &Rational, cell: &Cell, params: String) {
    let l2 = Bound::sqrt(int(self_intersection(l)));
    match res.status {
        SeshadriStatus::Exact => {
            t.count("exact");
            let v = res.value.clone().expect("exact value");
            if &v > box_min {
                t.violations.push(violation(params.clone(), Some(cell), box_min.clone(), Bound::rational(v.clone()), "exact value exceeds chain minimum"));
            }
            t.gap(box_min - &v);
            if min_attaining(res).as_ref() != Some(&v) || !attaining_consistent(l, res) {
                t.violations.push(violation(params.clone(), None, min_attaining(res).unwrap_or_default(), Bound::rational(v.clone()), "value not attained by a witness"));
            }
            if compare_bounds(&Bound::rational(v.clone()), &l2) == std::cmp::Ordering::Greater {
                t.violations.push(violation(params, None, v, l2, "exact value exceeds sqrt(L^2)"));
            }
        }
        SeshadriStatus::Bounds => {
            t.count("bounds_only");
            if &res.lower > box_min {
                t.violations.push(violation(params.clone(), Some(cell), box_min.clone(), Bound::rational(res.lower.clone()), "lower bound exceeds chain minimum"));
            }
            if compare_bounds(&Bound::rational(res.lower.clone()), &res.upper) == std::cmp::Ordering::Greater
                || compare_bounds(&res.upper, &l2) == std::cmp::Ordering::Greater
            {
                t.violations.push(violation(params, None, res.lower.clone(), res.upper.clone(), "bounds out of order"));
            }
        }
        SeshadriStatus::HypothesesNotMet => t.count("hypotheses_not_met"),
    }
}

// ---------------------------------------------------------------------------
// Global rationality witnesses
// ---------------------------------------------------------------------------

/// Over `a, b, d, r ∈ [1, G]`, every certificate issued by the global
/// evaluator is re-checked from raw integers: the witness ratio `w` at a point
/// of `Singular A ∩ (B − E₁)` is positive with `w² < L²` (rationality) or
/// equals `min{a − d, b}` (exact value).
pub fn verify_global_witness(s: &SurfaceData, grid_max: u32, jobs: Option<usize>) -> Result<OracleReport> {
    if grid_max == 0 {
        return Err(Error::InvalidInput("grid_max must be at least 1".into()));
    }
    let g = grid_max as i64;
    let items: Vec<(i64, i64)> = (1..=g).flat_map(|a| (1..=g).map(move |b| (a, b))).collect();
    let tally = run_partitioned(items, jobs, |&(a, b)| {
        let mut t = Tally::default();
        for d in 1..=g {
            for r in 1..=g as usize {
                t.instances += 1;
                let l = DivisorClass::uniform(a, b, d, r);
                let params = format!("a={a} b={b} d={d} r={r}");
                let (res, cert) = match global_constant(&l, s) {
                    Ok(x) => x,
                    Err(e) => {
                        t.violations.push(violation(params, None, int(0), Bound::rational(int(0)), &e.to_string()));
                        continue;
                    }
                };
                let Some(cert) = cert else {
                    t.count("hypotheses_not_met");
                    continue;
                };
                if !cert.verify() {
                    t.violations.push(violation(params.clone(), None, cert.claimed.clone(), Bound::rational(cert.claimed.clone()), "certificate self-check failed"));
                }
                // independent recomputation of the two witness ratios
                let sing = fibre_class(s, r, FibreKind::SingularAReduced).expect("valid");
                let b_e = fibre_class(s, r, FibreKind::BMinusE(1)).expect("valid");
                let w = int(intersect(&l, &sing).expect("same r")).min(int(intersect(&l, &b_e).expect("same r")));
                let l2 = self_intersection(&l);
                match cert.kind {
                    CertificateKind::GlobalRationality => {
                        t.count("rationality");
                        let slack = int(l2.clone()) - &w * &w;
                        if !w.is_positive() || !slack.is_positive() || w != cert.claimed {
                            t.violations.push(violation(params, None, w, Bound::sqrt(int(l2)), "witness ratio not below sqrt(L^2)"));
                        }
                        t.gap(slack);
                    }
                    CertificateKind::GlobalExact => {
                        t.count("exact");
                        let formula = int((a - d).min(b));
                        if res.value.as_ref() != Some(&formula) || w != formula || &w * &w > int(l2.clone()) {
                            t.violations.push(violation(params, None, w, Bound::rational(formula), "exact value mismatch"));
                        }
                    }
                }
            }
        }
        t
    })?;
    let grid = format!("a,b,d,r in [1,{grid_max}]");
    Ok(OracleReport::finish("global-witness", s, grid, tally))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{all_surfaces, surface_params};
    use crate::lattice::rational::rat;

    /// Plain double loop over the box without the frontier reduction.
    fn brute_min(w: &Weights, cons: &ConstraintSet, box_size: u32) -> Option<Rational> {
        let mut best: Option<Rational> = None;
        for alpha in 1..=box_size {
            for beta in 1..=box_size {
                let m = cons.max_m(alpha, beta);
                if !m.is_positive() {
                    continue;
                }
                let v = (&w.beta * int(beta) + &w.alpha * int(alpha)) / int(m);
                best = Some(best.map_or(v.clone(), |b| b.min(v)));
            }
        }
        best
    }

    fn caps(pairs: &[(i64, i64, i64)]) -> ConstraintSet {
        ConstraintSet::new(pairs.iter().map(|&(a, b, o)| Cap::new(a, b, o)).collect(), "test").unwrap()
    }

    #[test]
    fn box_examples() {
        // weights (w_α, w_β) = (b, a) = (5, 6), caps m ≤ 6β, m ≤ 2α
        let w = Weights::new(int(5), int(6));
        let v = min_ratio_over_box(&w, &caps(&[(0, 6, 0), (2, 0, 0)]), 12).unwrap();
        assert!(v >= int(2), "{v}");
        assert_eq!(v, rat(7, 2)); // 6/6 + 5/2

        let w = Weights::new(int(1), int(1));
        assert_eq!(min_ratio_over_box(&w, &caps(&[(0, 1, 0), (1, 0, 0)]), 10).unwrap(), int(2));

        let w = Weights::new(int(1), int(0));
        assert_eq!(min_ratio_over_box(&w, &caps(&[(1, 0, 0)]), 5).unwrap(), int(1));
    }

    #[test]
    fn box_errors() {
        let w = Weights::new(int(1), int(1));
        assert!(matches!(
            min_ratio_over_box(&w, &caps(&[(1, 0, -100)]), 5),
            Err(Error::EmptyFeasible(_))
        ));
        assert!(ConstraintSet::new(vec![Cap::new(-1, 0, 0)], "bad").is_err());
        assert!(min_ratio_over_box(&w, &caps(&[(1, 0, 0)]), 0).is_err());
    }

    #[test]
    fn frontier_agrees_with_brute_force() {
        let sets = [
            caps(&[(0, 4, 0), (2, 0, 0)]),
            caps(&[(0, 3, 0), (9, 0, 0)]),
            caps(&[(1, 1, 0), (3, 0, -1)]),
            caps(&[(2, 1, -3), (0, 5, 0), (1, 2, 1)]),
        ];
        let weights = [(1, 1), (5, 6), (0, 3), (7, 2), (-1, 2), (3, -2)];
        for cons in &sets {
            for box_size in [1, 3, 8, 13] {
                let Ok(profile) = BoxProfile::new(cons, box_size) else {
                    assert!(brute_min(&Weights::new(int(1), int(1)), cons, box_size).is_none());
                    continue;
                };
                for (wa, wb) in weights {
                    let w = Weights::new(int(wa), int(wb));
                    assert_eq!(Some(profile.min_ratio(&w).0), brute_min(&w, cons, box_size));
                }
            }
        }
    }

    #[test]
    fn multipoint_report_small() {
        for s in all_surfaces() {
            let rep = verify_multipoint_formula(&s, 6, 8, Some(2)).unwrap();
            assert!(rep.passed(), "{rep:?}");
            assert!(rep.instances_checked > 0);
        }
    }

    #[test]
    fn single_chain_small() {
        let s = surface_params(1).unwrap();
        let rep = verify_single_point_chain(&s, 3, 8, None).unwrap();
        assert!(rep.passed(), "{:?}", &rep.violations[..rep.violations.len().min(3)]);
        assert!(rep.tallies.contains_key("bounds_only"));
        assert!(matches!(
            verify_single_point_chain(&surface_params(2).unwrap(), 3, 8, None),
            Err(Error::UnsupportedType(2))
        ));
    }

    #[test]
    fn global_witness_small() {
        for t in [1, 2, 6] {
            let rep = verify_global_witness(&surface_params(t).unwrap(), 6, None).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
    }

    #[test]
    fn tally_merge_is_order_independent() {
        let s = surface_params(5).unwrap();
        let one = verify_multipoint_formula(&s, 5, 8, Some(1)).unwrap();
        let many = verify_multipoint_formula(&s, 5, 8, Some(4)).unwrap();
        assert_eq!(one, many);
    }

    #[test]
    fn report_json_round_trip() {
        let rep = verify_global_witness(&surface_params(4).unwrap(), 4, None).unwrap();
        let s = serde_json::to_string(&rep).unwrap();
        assert_eq!(serde_json::from_str::<OracleReport>(&s).unwrap(), rep);
        let v = violation("p".into(), None, int(1), Bound::sqrt(int(2)), "n");
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<Violation>(&s).unwrap(), v);
    }
}
