//! Members of the class `{g : z g'/g ≺ Phi}` built from Schwarz functions,
//! and an independent brute-force search for the determinant suprema over
//! the attainable two-jet `(omega'(0), omega''(0)/2)` of Schwarz functions.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::{fekete_szego_bound, t22_bound, t31_bound};
use crate::error::{Error, Result};
use crate::par;
use crate::phi::{Jet2, PhiSpec};
use crate::series::Series;
use crate::toeplitz::{coeff_jet, det_t22, det_t31, CoeffJet};

/// Tolerance for bound assertions on sampled functions.
pub const SAMPLE_TOL: f64 = 1e-6;

/// Tolerance for grid-oracle convergence to the closed form.
pub const ORACLE_TOL: f64 = 1e-3;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `omega(z) = rotation * z^leading_power * prod (z + a_i) / (1 + conj(a_i) z)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchwarzWord {
    pub rotation: Complex64,
    pub factors: Vec<Complex64>,
    pub leading_power: u32,
}

impl SchwarzWord {
    pub fn new(rotation: Complex64, factors: Vec<Complex64>, leading_power: u32) -> Result<Self> {
        let w = Self {
            rotation,
            factors,
            leading_power,
        };
        w.validate()?;
        Ok(w)
    }

    /// `omega(z) = rotation * z`.
    pub fn rotation(rotation: Complex64) -> Self {
        Self {
            rotation,
            factors: Vec::new(),
            leading_power: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if (self.rotation.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameters(format!(
                "rotation must have unit modulus, got {}",
                self.rotation
            )));
        }
        if self.leading_power < 1 {
            return Err(Error::InvalidParameters(
                "leading power must be >= 1".into(),
            ));
        }
        if let Some(a) = self.factors.iter().find(|a| a.norm() >= 1.0) {
            return Err(Error::InvalidParameters(format!(
                "Blaschke parameter {a} is not inside the unit disk"
            )));
        }
        Ok(())
    }

    pub fn omega_series(&self, order: usize) -> Series {
        let mut z_pow = vec![Complex64::new(0.0, 0.0); order + 1];
        if let Some(c) = z_pow.get_mut(self.leading_power as usize) {
            *c = self.rotation;
        }
        let mut out = Series::new(z_pow, order);
        for &a in &self.factors {
            let num = Series::new([a, ONE], order);
            let den = Series::new([ONE, a.conj()], order);
            // constant term 1 of the denominator makes the division infallible
            let factor = num.div(&den).expect("Blaschke denominator is a unit");
            out = &out * &factor;
        }
        out
    }
}

/// Point of the closed Schwarz–Pick body `|w1| <= 1`, `|w2| <= 1 - |w1|^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JetBodyPoint {
    pub w1: Complex64,
    pub w2: Complex64,
}

impl JetBodyPoint {
    pub fn of_word(w: &SchwarzWord) -> Self {
        let s = w.omega_series(2);
        Self {
            w1: s.coeff(1),
            w2: s.coeff(2),
        }
    }

    /// `(b2, b3)` of the class member whose Schwarz function has this jet:
    /// `b2 = d1 w1`, `2 b3 - b2^2 = d1 w2 + (d2/2) w1^2`.
    pub fn coeff_jet(&self, jet: Jet2) -> CoeffJet {
        let Jet2 { d1, d2 } = jet;
        let b2 = self.w1 * d1;
        let b3 = (self.w2 * d1 + self.w1 * self.w1 * (0.5 * d2) + b2 * b2) * 0.5;
        CoeffJet::new(b2, b3)
    }

    pub fn slack(&self) -> f64 {
        1.0 - self.w1.norm_sqr() - self.w2.norm()
    }
}

pub fn omega_series(w: &SchwarzWord, order: usize) -> Series {
    w.omega_series(order)
}

/// `g = z exp ∫_0^z (Phi(omega(t)) - 1)/t dt`, so that `z g'/g = Phi∘omega`.
pub fn g_from_schwarz(phi: &PhiSpec, w: &SchwarzWord, order: usize) -> Result<Series> {
    w.validate()?;
    let omega = w.omega_series(order);
    let composed = Series::compose(&phi.series(order)?, &omega)?;
    let log_g_over_z = (&composed - &Series::one(order)).integrate_div_t()?;
    Ok(log_g_over_z.exp()?.shift_up())
}

/// `z g'(z) / g(z)` for a normalized `g`; the order drops by one.
pub fn zg_prime_over_g(g: &Series) -> Result<Series> {
    // z g'/g = g' / (g/z)
    g.derivative().div(&g.shift_down())
}

/// `g / z` for a normalized `g`: the scalar factor `h` in `G(z) = z h(l(z))`.
pub fn lift(g: &Series) -> Series {
    g.shift_down()
}

/// Deterministic pseudo-random Schwarz words.
///
/// Rotation phase is uniform, the factor count is uniform on
/// `0..=max_factors`, each factor is area-uniform in the disk, and the
/// leading power is uniform on `{1, 2, 3}`.
pub fn sample_words(count: usize, seed: u64, max_factors: usize) -> Vec<SchwarzWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let rotation = Complex64::from_polar(1.0, rng.random_range(0.0..2.0 * PI));
            let k = rng.random_range(0..=max_factors);
            let factors = (0..k)
                .map(|_| {
                    let r = rng.random::<f64>().sqrt();
                    Complex64::from_polar(r, rng.random_range(0.0..2.0 * PI))
                })
                .collect();
            SchwarzWord {
                rotation,
                factors,
                leading_power: rng.random_range(1..=3),
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    T22,
    T31,
}

impl Theorem {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "t22" => Ok(Theorem::T22),
            "t31" => Ok(Theorem::T31),
            _ => Err(Error::Parse {
                what: "theorem".into(),
                detail: format!("expected t22 or t31, got '{s}'"),
            }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Theorem::T22 => "t22",
            Theorem::T31 => "t31",
        }
    }

    pub fn condition(self, jet: Jet2) -> bool {
        match self {
            Theorem::T22 => jet.satisfies_t22(),
            Theorem::T31 => jet.satisfies_t31(),
        }
    }

    pub fn bound(self, jet: Jet2) -> f64 {
        match self {
            Theorem::T22 => t22_bound(jet),
            Theorem::T31 => t31_bound(jet),
        }
    }

    pub fn modulus(self, j: CoeffJet) -> f64 {
        match self {
            Theorem::T22 => det_t22(j).norm(),
            Theorem::T31 => det_t31(j).norm(),
        }
    }
}

/// Functional maximized by [`oracle_sup`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Target {
    T22,
    T31,
    /// `|b3 - lambda b2^2|`.
    FeketeSzego(Complex64),
}

impl Target {
    pub fn eval(self, j: CoeffJet) -> f64 {
        match self {
            Target::T22 => det_t22(j).norm(),
            Target::T31 => det_t31(j).norm(),
            Target::FeketeSzego(l) => (j.b3 - l * j.b2 * j.b2).norm(),
        }
    }

    /// Closed-form value of the supremum (valid under the matching hypothesis).
    pub fn closed_form(self, jet: Jet2) -> f64 {
        match self {
            Target::T22 => t22_bound(jet),
            Target::T31 => t31_bound(jet),
            Target::FeketeSzego(l) => fekete_szego_bound(jet, l),
        }
    }
}

impl From<Theorem> for Target {
    fn from(t: Theorem) -> Self {
        match t {
            Theorem::T22 => Target::T22,
            Theorem::T31 => Target::T31,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleResult {
    pub value: f64,
    pub argmax: JetBodyPoint,
}

/// Lattice search over the Schwarz–Pick body.
///
/// `w1 = r1 e^{i t1}` with `r1 = k / grid` (`k = 0..=grid`) and `t1` on `grid`
/// uniform angles. Each target is a polynomial in `w2` for fixed `w1`, so its
/// maximum over the disk `|w2| <= 1 - r1^2` sits on the boundary circle, which
/// is scanned with `grid` uniform angles. Lattices for `grid` and `2 grid`
/// are nested.
pub fn scan_jet_body(jet: Jet2, target: Target, grid: usize, refine: bool) -> OracleResult {
    let grid = grid.max(1);
    let dt = 2.0 * PI / grid as f64;
    let eval = |r1: f64, t1: f64, t2: f64| {
        let r1 = r1.clamp(0.0, 1.0);
        let p = JetBodyPoint {
            w1: Complex64::from_polar(r1, t1),
            w2: Complex64::from_polar(1.0 - r1 * r1, t2),
        };
        (target.eval(p.coeff_jet(jet)), p)
    };

    let rows = par::map_range(grid + 1, |k| {
        let r1 = k as f64 / grid as f64;
        let mut best = (f64::NEG_INFINITY, 0, 0);
        for i in 0..grid {
            for j in 0..grid {
                let (v, _) = eval(r1, i as f64 * dt, j as f64 * dt);
                if v > best.0 {
                    best = (v, i, j);
                }
            }
        }
        best
    });
    // first index wins ties, so the result does not depend on scheduling
    let (k, (value, i, j)) =
        rows.into_iter()
            .enumerate()
            .fold((0, (f64::NEG_INFINITY, 0, 0)), |acc, (k, row)| {
                if row.0 > acc.1 .0 {
                    (k, row)
                } else {
                    acc
                }
            });
    let (r1, t1, t2) = (k as f64 / grid as f64, i as f64 * dt, j as f64 * dt);
    let mut best = eval(r1, t1, t2);
    debug_assert_eq!(best.0, value);

    if refine {
        const SUB: i32 = 20;
        let dr = 1.0 / grid as f64;
        for a in -SUB..=SUB {
            let rr = r1 + dr * a as f64 / SUB as f64;
            if !(0.0..=1.0).contains(&rr) {
                continue;
            }
            for b in -SUB..=SUB {
                for c in -SUB..=SUB {
                    let cand = eval(
                        rr,
                        t1 + dt * b as f64 / SUB as f64,
                        t2 + dt * c as f64 / SUB as f64,
                    );
                    if cand.0 > best.0 {
                        best = cand;
                    }
                }
            }
        }
    }
    OracleResult {
        value: best.0,
        argmax: best.1,
    }
}

/// Supremum of `target` over all class members, re-derived by brute force
/// over the exact two-jet body with one local refinement pass.
pub fn oracle_sup(phi: &PhiSpec, target: Target, grid: usize) -> Result<OracleResult> {
    if grid < 8 {
        return Err(Error::InvalidParameters(format!(
            "grid must be >= 8, got {grid}"
        )));
    }
    Ok(scan_jet_body(phi.jet2()?, target, grid, true))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub index: usize,
    pub word: SchwarzWord,
    pub value: f64,
    pub excess: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub family: String,
    pub theorem: Theorem,
    pub samples: usize,
    pub seed: u64,
    pub bound: f64,
    pub max_observed: f64,
    /// Counts of `|det| / bound` in ten equal bins over `[0, 1]`; the last
    /// bin also collects values above 1.
    pub ratio_histogram: [usize; 10],
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn ensure_sound(&self) -> Result<()> {
        match self.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::BoundViolated(format!(
                "{} {}: sample {} reached {} > bound {} (word {:?})",
                self.family,
                self.theorem.name(),
                v.index,
                v.value,
                self.bound,
                v.word
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloConfig {
    pub samples: usize,
    pub seed: u64,
    pub max_factors: usize,
    pub order: usize,
    pub tol: f64,
}

impl Default for MonteCarloConfig {
    fn default() -> Self {
        Self {
            samples: 10_000,
            seed: 0,
            max_factors: 3,
            order: 8,
            tol: SAMPLE_TOL,
        }
    }
}

/// Builds `g` for each sampled Schwarz word and checks `|det| <= bound + tol`.
pub fn montecarlo_verify(
    phi: &PhiSpec,
    theorem: Theorem,
    cfg: &MonteCarloConfig,
) -> Result<VerificationReport> {
    let jet = phi.jet2()?;
    if !theorem.condition(jet) {
        return Err(Error::ConditionNotMet(format!(
            "{} does not satisfy the {} hypothesis",
            phi.descriptor(),
            theorem.name()
        )));
    }
    let bound = theorem.bound(jet);
    let order = cfg.order.max(3);
    let words = sample_words(cfg.samples, cfg.seed, cfg.max_factors);
    let values = par::map_range(words.len(), |i| {
        g_from_schwarz(phi, &words[i], order)
            .and_then(|g| coeff_jet(&g))
            .map(|j| theorem.modulus(j))
    });

    let mut report = VerificationReport {
        family: phi.descriptor(),
        theorem,
        samples: words.len(),
        seed: cfg.seed,
        bound,
        max_observed: 0.0,
        ratio_histogram: [0; 10],
        violations: Vec::new(),
    };
    for (i, v) in values.into_iter().enumerate() {
        let v = v?;
        report.max_observed = report.max_observed.max(v);
        let bin = ((v / bound) * 10.0).floor().clamp(0.0, 9.0) as usize;
        report.ratio_histogram[bin] += 1;
        if v > bound + cfg.tol {
            report.violations.push(Violation {
                index: i,
                word: words[i].clone(),
                value: v,
                excess: v - bound,
            });
        }
    }
    Ok(report)
}
