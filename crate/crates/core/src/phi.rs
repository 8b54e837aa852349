//! Generator functions `Phi` with `Phi(0) = 1`, `Phi'(0) > 0` and real
//! `Phi''(0)`, the two-jet the bound formulas consume, and the hypothesis
//! predicates of the two determinant theorems.

use std::f64::consts::PI;
use std::fmt;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::Series;

/// Slack applied to the theorem hypotheses so that boundary parameters such
/// as `gamma = 1/3` or `alpha = 2/3` are accepted despite rounding.
pub const CONDITION_SLACK: f64 = 1e-12;

/// Radii at which [`subordination_check`] samples the candidate.
pub const SUBORDINATION_RADII: [f64; 3] = [0.3, 0.6, 0.9];

/// `(Phi'(0), Phi''(0))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Jet2 {
    pub d1: f64,
    pub d2: f64,
}

impl Jet2 {
    pub fn new(d1: f64, d2: f64) -> Result<Self> {
        if !d1.is_finite() || d1 <= 0.0 || !d2.is_finite() {
            return Err(Error::InvalidParameters(format!(
                "jet requires finite Phi''(0) and Phi'(0) > 0, got ({d1}, {d2})"
            )));
        }
        Ok(Self { d1, d2 })
    }

    /// `|Phi''(0) + 2 Phi'(0)^2| >= 2 Phi'(0)`.
    pub fn satisfies_t22(&self) -> bool {
        let lhs = (self.d2 + 2.0 * self.d1 * self.d1).abs();
        let rhs = 2.0 * self.d1;
        lhs >= rhs - CONDITION_SLACK * rhs.max(1.0)
    }

    /// `2 Phi'(0) - 2 Phi'(0)^2 <= Phi''(0) <= 6 Phi'(0)^2 - 2 Phi'(0)`.
    pub fn satisfies_t31(&self) -> bool {
        let (d1, d2) = (self.d1, self.d2);
        let lo = 2.0 * d1 - 2.0 * d1 * d1;
        let hi = 6.0 * d1 * d1 - 2.0 * d1;
        let slack = CONDITION_SLACK * d2.abs().max(1.0);
        lo <= d2 + slack && d2 <= hi + slack
    }
}

/// A user-supplied `Phi` given by its Taylor coefficients.
///
/// `inverse`, when present, is the series `psi` with `Phi^{-1}(w) = psi(w - 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CustomPhi {
    pub name: String,
    pub series: Series,
    pub inverse: Option<Series>,
}

#[derive(Debug, Deserialize)]
struct CustomPhiFile {
    coeffs: Vec<[f64; 2]>,
    #[serde(default)]
    inverse: Option<Vec<[f64; 2]>>,
}

impl CustomPhi {
    /// Parses `{"coeffs": [[re, im], ...], "inverse": [[re, im], ...]}`.
    pub fn from_json(name: &str, text: &str) -> Result<Self> {
        let file: CustomPhiFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            what: format!("custom Phi file {name}"),
            detail: e.to_string(),
        })?;
        let to_series = |cs: &[[f64; 2]]| {
            let order = cs.len().saturating_sub(1).max(3);
            Series::new(cs.iter().map(|[re, im]| Complex64::new(*re, *im)), order)
        };
        let series = to_series(&file.coeffs);
        let inverse = file.inverse.as_deref().map(to_series);
        let phi = Self {
            name: name.to_string(),
            series,
            inverse,
        };
        phi.validate()?;
        Ok(phi)
    }

    fn validate(&self) -> Result<()> {
        let c0 = self.series.coeff(0);
        if (c0 - Complex64::new(1.0, 0.0)).norm() > 1e-12 {
            return Err(Error::InvalidParameters(format!(
                "custom Phi must satisfy Phi(0) = 1, got {c0}"
            )));
        }
        let (c1, c2) = (self.series.coeff(1), self.series.coeff(2));
        if c1.im.abs() > 1e-12 || c2.im.abs() > 1e-12 {
            return Err(Error::InvalidParameters(
                "custom Phi must have real Phi'(0) and Phi''(0)".into(),
            ));
        }
        if let Some(inv) = &self.inverse {
            if inv.coeff(0).norm() > 1e-12 {
                return Err(Error::InvalidParameters(
                    "custom inverse series must vanish at 0".into(),
                ));
            }
        }
        Jet2::new(c1.re, 2.0 * c2.re).map(|_| ())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PhiSpec {
    /// `(1+z)/(1-z)`: starlike functions.
    HalfPlane,
    /// `(1+(1-2a)z)/(1-z)`, `0 <= a < 1`: starlike of order `a`.
    Alpha(f64),
    /// `(1+Dz)/(1+Ez)`, `-1 <= E < D <= 1`.
    Janowski {
        d: f64,
        e: f64,
    },
    /// `((1+z)/(1-z))^g`, `0 < g <= 1`, principal branch: strongly starlike.
    Power(f64),
    Custom(CustomPhi),
}

impl PhiSpec {
    /// Parses the CLI family syntax: `starlike`, `alpha:<x>`,
    /// `janowski:<D>:<E>`, `power:<g>`, or `custom:<path>` (JSON file).
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| -> Result<f64> {
            t.trim().parse::<f64>().map_err(|e| Error::Parse {
                what: format!("family parameter in '{s}'"),
                detail: e.to_string(),
            })
        };
        let phi = match parts.as_slice() {
            ["starlike"] | ["halfplane"] => PhiSpec::HalfPlane,
            ["alpha", a] => PhiSpec::Alpha(num(a)?),
            ["janowski", d, e] => PhiSpec::Janowski {
                d: num(d)?,
                e: num(e)?,
            },
            ["power", g] | ["gamma", g] => PhiSpec::Power(num(g)?),
            ["custom", ..] => {
                let path = s.trim().split_once(':').map(|(_, p)| p).unwrap_or_default();
                return PhiSpec::load_custom(Path::new(path));
            }
            _ => {
                return Err(Error::Parse {
                    what: "family".into(),
                    detail: format!("unrecognised family '{s}'"),
                })
            }
        };
        phi.validate()?;
        Ok(phi)
    }

    pub fn load_custom(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            what: format!("custom Phi file {}", path.display()),
            detail: e.to_string(),
        })?;
        let name = format!("custom:{}", path.display());
        Ok(PhiSpec::Custom(CustomPhi::from_json(&name, &text)?))
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        match *self {
            PhiSpec::HalfPlane => Ok(()),
            PhiSpec::Alpha(a) if (0.0..1.0).contains(&a) => Ok(()),
            PhiSpec::Alpha(a) => bad(format!("alpha must lie in [0, 1), got {a}")),
            PhiSpec::Janowski { d, e } if -1.0 <= e && e < d && d <= 1.0 => Ok(()),
            PhiSpec::Janowski { d, e } => bad(format!(
                "Janowski requires -1 <= E < D <= 1, got D={d}, E={e}"
            )),
            PhiSpec::Power(g) if g > 0.0 && g <= 1.0 => Ok(()),
            PhiSpec::Power(g) => bad(format!("gamma must lie in (0, 1], got {g}")),
            PhiSpec::Custom(ref c) => c.validate(),
        }
    }

    /// Short descriptor matching the CLI syntax.
    pub fn descriptor(&self) -> String {
        match self {
            PhiSpec::HalfPlane => "starlike".into(),
            PhiSpec::Alpha(a) => format!("alpha:{a}"),
            PhiSpec::Janowski { d, e } => format!("janowski:{d}:{e}"),
            PhiSpec::Power(g) => format!("power:{g}"),
            PhiSpec::Custom(c) => c.name.clone(),
        }
    }

    /// Closed-form jet for the built-in families, series-read for custom.
    pub fn jet2(&self) -> Result<Jet2> {
        self.validate()?;
        match *self {
            PhiSpec::HalfPlane => Jet2::new(2.0, 4.0),
            PhiSpec::Alpha(a) => Jet2::new(2.0 * (1.0 - a), 4.0 * (1.0 - a)),
            PhiSpec::Janowski { d, e } => Jet2::new(d - e, -2.0 * e * (d - e)),
            PhiSpec::Power(g) => Jet2::new(2.0 * g, 4.0 * g * g),
            PhiSpec::Custom(ref c) => jet_from_series(&c.series),
        }
    }

    /// Taylor series of `Phi` at 0.
    pub fn series(&self, order: usize) -> Result<Series> {
        self.validate()?;
        let geometric = |lead: f64, ratio: f64| {
            let mut p = lead;
            let tail = (1..=order).map(move |_| {
                let out = p;
                p *= ratio;
                Complex64::new(out, 0.0)
            });
            Series::new(std::iter::once(Complex64::new(1.0, 0.0)).chain(tail), order)
        };
        Ok(match *self {
            PhiSpec::HalfPlane => geometric(2.0, 1.0),
            PhiSpec::Alpha(a) => geometric(2.0 * (1.0 - a), 1.0),
            PhiSpec::Janowski { d, e } => geometric(d - e, -e),
            PhiSpec::Power(g) => {
                // log((1+z)/(1-z)) = 2 sum_{k odd} z^k / k
                let log = Series::new(
                    (0..=order).map(|k| {
                        let c = if k % 2 == 1 { 2.0 / k as f64 } else { 0.0 };
                        Complex64::new(c, 0.0)
                    }),
                    order,
                );
                log.scale(Complex64::new(g, 0.0)).exp()?
            }
            PhiSpec::Custom(ref c) => c.series.truncate(order),
        })
    }

    /// `Phi^{-1}(w)` on `Phi(U)`.
    pub fn inverse(&self, w: Complex64) -> Result<Complex64> {
        let one = Complex64::new(1.0, 0.0);
        let mobius = |d: f64, e: f64| (w - one) / (Complex64::new(d, 0.0) - w * e);
        Ok(match *self {
            PhiSpec::HalfPlane => mobius(1.0, -1.0),
            PhiSpec::Alpha(a) => mobius(1.0 - 2.0 * a, -1.0),
            PhiSpec::Janowski { d, e } => mobius(d, e),
            PhiSpec::Power(g) => {
                // Phi(U) is the sector |arg w| < g pi / 2; outside it there is
                // no preimage, reported as a point on the unit circle.
                if w == Complex64::new(0.0, 0.0) || w.arg().abs() >= g * PI / 2.0 {
                    return Ok(one);
                }
                let u = w.powf(1.0 / g);
                (u - one) / (u + one)
            }
            PhiSpec::Custom(ref c) => match &c.inverse {
                Some(psi) => psi.eval(w - one),
                None => return Err(Error::NoInverseAvailable(c.name.clone())),
            },
        })
    }
}

impl fmt::Display for PhiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

/// Reads `(Phi'(0), Phi''(0)) = (c1, 2 c2)` off a series.
pub fn jet_from_series(s: &Series) -> Result<Jet2> {
    let (c1, c2) = (s.coeff(1), s.coeff(2));
    if c1.im.abs() > 1e-12 || c2.im.abs() > 1e-12 {
        return Err(Error::InvalidParameters(format!(
            "jet must be real, got Phi'(0) = {c1}, Phi''(0)/2 = {c2}"
        )));
    }
    Jet2::new(c1.re, 2.0 * c2.re)
}

pub fn condition_t22(phi: &PhiSpec) -> Result<bool> {
    Ok(phi.jet2()?.satisfies_t22())
}

pub fn condition_t31(phi: &PhiSpec) -> Result<bool> {
    Ok(phi.jet2()?.satisfies_t31())
}

/// Tests `candidate ≺ Phi` by checking `|Phi^{-1}(candidate(z))| < 1` at
/// `z = r e^{i theta}` for `r` in [`SUBORDINATION_RADII`] and `grid` uniform
/// angles. The candidate is evaluated as its truncated polynomial, so the
/// verdict is only as good as the truncation order at `r = 0.9`.
pub fn subordination_check(candidate: &Series, phi: &PhiSpec, grid: usize) -> Result<bool> {
    if let PhiSpec::Custom(c) = phi {
        if c.inverse.is_none() {
            return Err(Error::NoInverseAvailable(c.name.clone()));
        }
    }
    if (candidate.constant_term() - Complex64::new(1.0, 0.0)).norm() > 1e-12 {
        return Ok(false);
    }
    let grid = grid.max(1);
    for &r in &SUBORDINATION_RADII {
        for j in 0..grid {
            let z = Complex64::from_polar(r, 2.0 * PI * j as f64 / grid as f64);
            if phi.inverse(candidate.eval(z))?.norm() >= 1.0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
