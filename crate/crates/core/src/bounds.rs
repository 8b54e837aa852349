//! Closed-form sharp bounds evaluated from a [`Jet2`].

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::phi::{Jet2, PhiSpec};

/// Fekete–Szegő envelope for `|b3 - lambda b2^2|`:
/// `(d1/2) max{1, |d2/(2 d1) + (1 - 2 lambda) d1|}`.
pub fn fekete_szego_bound(jet: Jet2, lambda: Complex64) -> f64 {
    let Jet2 { d1, d2 } = jet;
    let inner =
        Complex64::new(d2 / (2.0 * d1), 0.0) + (Complex64::new(1.0, 0.0) - lambda * 2.0) * d1;
    d1 / 2.0 * inner.norm().max(1.0)
}

/// Sharp bound on `|b2^2 - b3^2|` under `|d2 + 2 d1^2| >= 2 d1`.
pub fn t22_bound(jet: Jet2) -> f64 {
    let Jet2 { d1, d2 } = jet;
    let s = 0.5 * d2 / d1 + d1;
    d1 * d1 / 4.0 * s * s + d1 * d1
}

/// Sharp bound on `|2 b2^2 b3 - 2 b2^2 - b3^2 + 1|` under
/// `2 d1 - 2 d1^2 <= d2 <= 6 d1^2 - 2 d1`.
pub fn t31_bound(jet: Jet2) -> f64 {
    let Jet2 { d1, d2 } = jet;
    let ratio = d2 / (2.0 * d1);
    1.0 + 2.0 * d1 * d1 + d1 * d1 / 4.0 * (3.0 * d1 - ratio) * (ratio + d1)
}

/// A bound value together with whether the theorem hypothesis holds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bound {
    Asserted(f64),
    /// Formula value outside the theorem's hypothesis; not a proven bound.
    NotAsserted(f64),
}

impl Bound {
    fn new(value: f64, holds: bool) -> Self {
        if holds {
            Bound::Asserted(value)
        } else {
            Bound::NotAsserted(value)
        }
    }

    pub fn asserted(&self) -> Option<f64> {
        match *self {
            Bound::Asserted(v) => Some(v),
            Bound::NotAsserted(_) => None,
        }
    }

    pub fn value(&self) -> f64 {
        match *self {
            Bound::Asserted(v) | Bound::NotAsserted(v) => v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FsEntry {
    pub lambda_re: f64,
    pub lambda_im: f64,
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub family: String,
    pub jet: Jet2,
    pub cond_t22: bool,
    pub cond_t31: bool,
    pub t22: Bound,
    pub t31: Bound,
    pub fs: Vec<FsEntry>,
}

impl Serialize for BoundReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BoundReport", 10)?;
        s.serialize_field("family", &self.family)?;
        s.serialize_field("d1", &self.jet.d1)?;
        s.serialize_field("d2", &self.jet.d2)?;
        s.serialize_field("cond_t22", &self.cond_t22)?;
        s.serialize_field("cond_t31", &self.cond_t31)?;
        s.serialize_field("t22", &self.t22.asserted())?;
        s.serialize_field("t31", &self.t31.asserted())?;
        s.serialize_field("t22_formula", &self.t22.value())?;
        s.serialize_field("t31_formula", &self.t31.value())?;
        s.serialize_field("fs", &self.fs)?;
        s.end()
    }
}

/// Conditions, both determinant bounds and a Fekete–Szegő table for `phi`.
pub fn report(phi: &PhiSpec, lambdas: &[Complex64]) -> Result<BoundReport> {
    let jet = phi.jet2()?;
    let cond_t22 = jet.satisfies_t22();
    let cond_t31 = jet.satisfies_t31();
    Ok(BoundReport {
        family: phi.descriptor(),
        jet,
        cond_t22,
        cond_t31,
        t22: Bound::new(t22_bound(jet), cond_t22),
        t31: Bound::new(t31_bound(jet), cond_t31),
        fs: lambdas
            .iter()
            .map(|&l| FsEntry {
                lambda_re: l.re,
                lambda_im: l.im,
                bound: fekete_szego_bound(jet, l),
            })
            .collect(),
    })
}

/// Expanded polynomial forms of the family-specific corollaries.
pub mod corollary {
    pub fn alpha_t22(a: f64) -> f64 {
        (1.0 - a).powi(2) * (4.0 * a * a - 12.0 * a + 13.0)
    }

    pub fn alpha_t31(a: f64) -> f64 {
        12.0 * a.powi(4) - 52.0 * a.powi(3) + 91.0 * a * a - 74.0 * a + 24.0
    }

    pub fn power_t22(g: f64) -> f64 {
        9.0 * g.powi(4) + 4.0 * g * g
    }

    pub fn power_t31(g: f64) -> f64 {
        15.0 * g.powi(4) + 8.0 * g * g + 1.0
    }

    pub fn janowski_t22(d: f64, e: f64) -> f64 {
        (d - e).powi(2) * (d * d + 4.0 * e * e - 4.0 * d * e + 4.0) / 4.0
    }

    pub fn janowski_t31(d: f64, e: f64) -> f64 {
        1.0 + 2.0 * (d - e).powi(2)
            + (3.0 * d * d - 5.0 * d * e + 2.0 * e * e) * (d * d - 3.0 * d * e + 2.0 * e * e) / 4.0
    }
}
