//! Mappings `G(z) = z h(l(z))` on the unit ball of `C^n` (sup or Euclidean
//! norm) and on the polydisc, their homogeneous expansion terms, and the
//! margins of the ball and polydisc determinant inequalities.
//!
//! `h` is a scalar series with `h(0) = 1` and `l` is either a coordinate
//! projection or a support functional `l_u`. With `h = 1 + h1 w + h2 w^2 + ...`
//! the homogeneous terms of `G` are exact:
//!
//! * `D^2 G(0)(z^2)/2! = h1 l(z) z`
//! * `D^3 G(0)(z^3)/3! = h2 l(z)^2 z`
//! * `1/2 D^2 G(0)(z, D^2 G(0)(z^2)/2!) = h1^2 l(z)^2 z`

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::{t22_bound, t31_bound};
use crate::error::{Error, Result};
use crate::phi::{Jet2, PhiSpec};
use crate::series::Series;

/// Tolerance applied to high-dimensional margins.
pub const MARGIN_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormKind {
    Sup,
    #[serde(rename = "euclid")]
    Euclidean,
}

impl NormKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "sup" => Ok(NormKind::Sup),
            "euclid" | "euclidean" => Ok(NormKind::Euclidean),
            _ => Err(Error::Parse {
                what: "norm".into(),
                detail: format!("expected sup or euclid, got '{s}'"),
            }),
        }
    }

    pub fn norm(self, v: &[Complex64]) -> f64 {
        match self {
            NormKind::Sup => v.iter().map(|c| c.norm()).fold(0.0, f64::max),
            NormKind::Euclidean => v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt(),
        }
    }
}

/// Lowest index attaining `max |v_j|`.
fn argmax_modulus(v: &[Complex64]) -> usize {
    let mut k = 0;
    for (j, c) in v.iter().enumerate() {
        if c.norm() > v[k].norm() {
            k = j;
        }
    }
    k
}

/// Norm-attaining unit functional `l_z` with `l_z(z) = ||z||`.
#[derive(Debug, Clone, PartialEq)]
pub struct LzFunctional {
    base: Vec<Complex64>,
    kind: NormKind,
    norm: f64,
    k_index: usize,
}

impl LzFunctional {
    /// Support functional at any nonzero `base`.
    pub fn at(base: Vec<Complex64>, kind: NormKind) -> Result<Self> {
        let norm = kind.norm(&base);
        if base.is_empty() || !norm.is_finite() || norm <= 0.0 {
            return Err(Error::InvalidParameters(
                "support functional needs a nonzero finite base point".into(),
            ));
        }
        let k_index = argmax_modulus(&base);
        Ok(Self {
            base,
            kind,
            norm,
            k_index,
        })
    }

    pub fn dim(&self) -> usize {
        self.base.len()
    }

    pub fn apply(&self, w: &[Complex64]) -> Result<Complex64> {
        if w.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: w.len(),
            });
        }
        Ok(match self.kind {
            NormKind::Sup => {
                let zk = self.base[self.k_index];
                w[self.k_index] * zk.conj() / zk.norm()
            }
            NormKind::Euclidean => {
                let dot: Complex64 = w.iter().zip(&self.base).map(|(a, b)| a * b.conj()).sum();
                dot / self.norm
            }
        })
    }
}

pub fn lz_apply(f: &LzFunctional, w: &[Complex64]) -> Result<Complex64> {
    f.apply(w)
}

/// A point strictly inside the unit ball of its norm.
#[derive(Debug, Clone, PartialEq)]
pub struct NormedPoint {
    coords: Vec<Complex64>,
    kind: NormKind,
    norm: f64,
    k_index: usize,
}

impl NormedPoint {
    pub fn new(coords: Vec<Complex64>, kind: NormKind) -> Result<Self> {
        let k = argmax_modulus(&coords);
        Self::with_k_index(coords, kind, k)
    }

    /// Like [`NormedPoint::new`] but with an explicit maximizing index for
    /// the sup norm (any index attaining the maximum modulus is accepted).
    pub fn with_k_index(coords: Vec<Complex64>, kind: NormKind, k_index: usize) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidParameters(
                "point needs at least one coordinate".into(),
            ));
        }
        let norm = kind.norm(&coords);
        if !(norm > 0.0 && norm < 1.0) {
            return Err(Error::InvalidParameters(format!(
                "point must satisfy 0 < ||z|| < 1, got {norm}"
            )));
        }
        if k_index >= coords.len()
            || (coords[k_index].norm() - coords[argmax_modulus(&coords)].norm()).abs() > 0.0
        {
            return Err(Error::InvalidParameters(format!(
                "index {k_index} does not attain the max modulus"
            )));
        }
        Ok(Self {
            coords,
            kind,
            norm,
            k_index,
        })
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn kind(&self) -> NormKind {
        self.kind
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn k_index(&self) -> usize {
        self.k_index
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn functional(&self) -> LzFunctional {
        LzFunctional {
            base: self.coords.clone(),
            kind: self.kind,
            norm: self.norm,
            k_index: self.k_index,
        }
    }
}

/// The scalar variable `l(z)` that `G(z) = z h(l(z))` depends on.
#[derive(Debug, Clone, PartialEq)]
pub enum Direction {
    /// Zero-based coordinate projection `z -> z_j`.
    Coordinate(usize),
    /// Support functional `l_u` at a unit vector `u`.
    Functional(LzFunctional),
}

impl Direction {
    pub fn apply(&self, z: &[Complex64]) -> Result<Complex64> {
        match self {
            Direction::Coordinate(j) => z.get(*j).copied().ok_or(Error::DimensionMismatch {
                expected: j + 1,
                got: z.len(),
            }),
            Direction::Functional(f) => f.apply(z),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HomogeneousTerms {
    /// `D^2 G(0)(z^2) / 2!`
    pub q2: Vec<Complex64>,
    /// `D^3 G(0)(z^3) / 3!`
    pub q3: Vec<Complex64>,
    /// `1/2 D^2 G(0)(z, D^2 G(0)(z^2)/2!)`
    pub b2sq_vec: Vec<Complex64>,
}

pub fn homogeneous_terms(h: &Series, z: &NormedPoint, dir: &Direction) -> Result<HomogeneousTerms> {
    if (h.constant_term() - Complex64::new(1.0, 0.0)).norm() > 1e-12 {
        return Err(Error::InvalidParameters(format!(
            "h must satisfy h(0) = 1, got {}",
            h.constant_term()
        )));
    }
    let ell = dir.apply(z.coords())?;
    let (h1, h2) = (h.coeff(1), h.coeff(2));
    let scaled = |s: Complex64| z.coords().iter().map(|c| c * s).collect::<Vec<_>>();
    Ok(HomogeneousTerms {
        q2: scaled(h1 * ell),
        q3: scaled(h2 * ell * ell),
        b2sq_vec: scaled(h1 * h1 * ell * ell),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BallMargins {
    pub n: usize,
    pub norm_kind: NormKind,
    pub norm: f64,
    pub b2: Complex64,
    pub b3: Complex64,
    pub cond_t22: bool,
    pub cond_t31: bool,
    pub t22_lhs: f64,
    pub t22_bound: f64,
    pub t22_margin: f64,
    pub t31_lhs: f64,
    pub t31_bound: f64,
    pub t31_margin: f64,
}

impl BallMargins {
    pub fn violations(&self, tol: f64) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.cond_t22 && self.t22_margin < -tol {
            out.push("ball_t22");
        }
        if self.cond_t31 && self.t31_margin < -tol {
            out.push("ball_t31");
        }
        out
    }
}

/// Ball margins: `b2 = l_z(q2)/||z||^2`, `b3 = l_z(q3)/||z||^3` against the
/// one-variable bounds.
pub fn ball_margins(
    phi: &PhiSpec,
    h: &Series,
    z: &NormedPoint,
    dir: &Direction,
) -> Result<BallMargins> {
    let jet = phi.jet2()?;
    let terms = homogeneous_terms(h, z, dir)?;
    let lz = z.functional();
    let r = z.norm();
    let b2 = lz.apply(&terms.q2)? / (r * r);
    let b3 = lz.apply(&terms.q3)? / (r * r * r);
    let b2sq = b2 * b2;
    let t22_lhs = (b2sq - b3 * b3).norm();
    let t31_lhs = (b2sq * b3 * 2.0 - b3 * b3 - b2sq * 2.0 + 1.0).norm();
    let (t22_b, t31_b) = (t22_bound(jet), t31_bound(jet));
    Ok(BallMargins {
        n: z.dim(),
        norm_kind: z.kind(),
        norm: r,
        b2,
        b3,
        cond_t22: jet.satisfies_t22(),
        cond_t31: jet.satisfies_t31(),
        t22_lhs,
        t22_bound: t22_b,
        t22_margin: t22_b - t22_lhs,
        t31_lhs,
        t31_bound: t31_b,
        t31_margin: t31_b - t31_lhs,
    })
}

pub fn verify_ball(
    phi: &PhiSpec,
    h: &Series,
    z: &NormedPoint,
    dir: &Direction,
) -> Result<BallMargins> {
    let m = ball_margins(phi, h, z, dir)?;
    ensure(&m.violations(MARGIN_TOL), z)?;
    Ok(m)
}

/// Right side of the polydisc `T22` inequality at radius `r = ||z||`.
pub fn polydisc_t22_rhs(jet: Jet2, r: f64) -> f64 {
    let Jet2 { d1, d2 } = jet;
    let s = 0.5 * d2 / d1 + d1;
    d1 * d1 * r.powi(6) / 4.0 * s * s + (d1 * r * r).powi(2)
}

/// Right side of the polydisc `T31` inequality at radius `r = ||z||`, with
/// the `||z||^4` weight on the `2 Phi'(0)^2` term.
pub fn polydisc_t31_rhs(jet: Jet2, r: f64) -> f64 {
    polydisc_t31_rhs_weighted(jet, r, 4)
}

/// Same as [`polydisc_t31_rhs`] with `||z||^3` on the `2 Phi'(0)^2` term, the
/// degree of `1/2 D^2 G(0)(z, D^2 G(0)(z^2)/2!)`.
pub fn polydisc_t31_rhs_cubic(jet: Jet2, r: f64) -> f64 {
    polydisc_t31_rhs_weighted(jet, r, 3)
}

fn polydisc_t31_rhs_weighted(jet: Jet2, r: f64, b2sq_degree: i32) -> f64 {
    let Jet2 { d1, d2 } = jet;
    let ratio = 0.5 * d2 / d1;
    1.0 + d1 * d1 * r.powi(6) / 4.0 * (3.0 * d1 - ratio) * (ratio + d1)
        + 2.0 * d1 * d1 * r.powi(b2sq_degree)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolydiscMargins {
    pub n: usize,
    pub norm: f64,
    pub cond_t22: bool,
    pub cond_t31: bool,
    /// `max_k |q3_k^2 - q2_k^2|`
    pub t22_lhs: f64,
    pub t22_bound: f64,
    pub t22_margin: f64,
    /// `max_k |2 B_k q3_k - q3_k^2 - 2 B_k + 1|`, `B = b2sq_vec`
    pub t31_lhs: f64,
    pub t31_bound: f64,
    pub t31_margin: f64,
    pub t31_bound_cubic: f64,
    pub t31_margin_cubic: f64,
}

impl PolydiscMargins {
    pub fn violations(&self, tol: f64) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.cond_t22 && self.t22_margin < -tol {
            out.push("polydisc_t22");
        }
        if self.cond_t31 && self.t31_margin < -tol {
            out.push("polydisc_t31");
        }
        out
    }
}

pub fn polydisc_margins(
    phi: &PhiSpec,
    h: &Series,
    z: &NormedPoint,
    dir: &Direction,
) -> Result<PolydiscMargins> {
    if z.kind() != NormKind::Sup {
        return Err(Error::InvalidParameters(
            "the polydisc uses the sup norm".into(),
        ));
    }
    let jet = phi.jet2()?;
    let t = homogeneous_terms(h, z, dir)?;
    let t22_lhs =
        t.q2.iter()
            .zip(&t.q3)
            .map(|(q2, q3)| (q3 * q3 - q2 * q2).norm())
            .fold(0.0, f64::max);
    let t31_lhs = t
        .b2sq_vec
        .iter()
        .zip(&t.q3)
        .map(|(b, q3)| (b * q3 * 2.0 - q3 * q3 - b * 2.0 + 1.0).norm())
        .fold(0.0, f64::max);
    let r = z.norm();
    let (t22_b, t31_b, t31_c) = (
        polydisc_t22_rhs(jet, r),
        polydisc_t31_rhs(jet, r),
        polydisc_t31_rhs_cubic(jet, r),
    );
    Ok(PolydiscMargins {
        n: z.dim(),
        norm: r,
        cond_t22: jet.satisfies_t22(),
        cond_t31: jet.satisfies_t31(),
        t22_lhs,
        t22_bound: t22_b,
        t22_margin: t22_b - t22_lhs,
        t31_lhs,
        t31_bound: t31_b,
        t31_margin: t31_b - t31_lhs,
        t31_bound_cubic: t31_c,
        t31_margin_cubic: t31_c - t31_lhs,
    })
}

pub fn verify_polydisc(
    phi: &PhiSpec,
    h: &Series,
    z: &NormedPoint,
    dir: &Direction,
) -> Result<PolydiscMargins> {
    let m = polydisc_margins(phi, h, z, dir)?;
    ensure(&m.violations(MARGIN_TOL), z)?;
    Ok(m)
}

/// Seeded points spread over the open unit ball of `kind`: a uniform direction
/// in the cube `[-1, 1]^{2n}` rescaled to a norm uniform on `[0.05, 0.98]`.
pub fn sample_points(count: usize, n: usize, kind: NormKind, seed: u64) -> Vec<NormedPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v: Vec<Complex64> = (0..n.max(1))
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let norm = kind.norm(&v);
        let target = rng.random_range(0.05..0.98);
        if norm < 1e-3 {
            continue;
        }
        let scaled = v.iter().map(|x| x * (target / norm)).collect();
        if let Ok(p) = NormedPoint::new(scaled, kind) {
            out.push(p);
        }
    }
    out
}

fn ensure(violations: &[&str], z: &NormedPoint) -> Result<()> {
    if violations.is_empty() {
        return Ok(());
    }
    Err(Error::BoundViolated(format!(
        "{} at z = {:?}",
        violations.join(", "),
        z.coords()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::extremal_g;
    use crate::sampler::{g_from_schwarz, lift, sample_words, SchwarzWord};
    use crate::toeplitz::coeff_jet;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pt(coords: &[Complex64], kind: NormKind) -> NormedPoint {
        NormedPoint::new(coords.to_vec(), kind).unwrap()
    }

    /// Coefficients of `t -> G(t z)` through the series engine:
    /// component `k` is `z_k t h(l(z) t)`.
    fn restriction(h: &Series, z: &[Complex64], ell: Complex64) -> Vec<Series> {
        let n = h.order();
        let inner = Series::z(n).scale(ell);
        let h_t = Series::compose(h, &inner).unwrap();
        z.iter().map(|zk| h_t.shift_up().scale(*zk)).collect()
    }

    fn random_point(rng: &mut ChaCha8Rng, n: usize, kind: NormKind) -> NormedPoint {
        sample_points(1, n, kind, rng.random()).remove(0)
    }

    #[test]
    fn lz_examples() {
        for kind in [NormKind::Sup, NormKind::Euclidean] {
            let z = pt(&[c(0.3, -0.1), c(0.2, 0.4), c(-0.1, 0.0)], kind);
            let v = z.functional().apply(z.coords()).unwrap();
            assert!((v - c(z.norm(), 0.0)).norm() < 1e-15);
        }
        let z = pt(&[c(0.5, 0.0), c(0.2, 0.0)], NormKind::Sup);
        let (a, b) = (c(0.7, -0.3), c(9.0, 2.0));
        assert_eq!(lz_apply(&z.functional(), &[a, b]).unwrap(), a);

        let z = pt(&[c(0.3, 0.0), c(0.0, 0.4)], NormKind::Euclidean);
        let perp = [c(0.0, 0.4), c(0.3, 0.0)];
        assert!(lz_apply(&z.functional(), &perp).unwrap().norm() < 1e-15);
        assert!(matches!(
            z.functional().apply(&[c(1.0, 0.0)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn lz_has_unit_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for kind in [NormKind::Sup, NormKind::Euclidean] {
            for _ in 0..200 {
                let z = random_point(&mut rng, 4, kind);
                let w: Vec<Complex64> = (0..4)
                    .map(|_| c(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0)))
                    .collect();
                assert!(z.functional().apply(&w).unwrap().norm() <= kind.norm(&w) + 1e-12);
            }
        }
    }

    #[test]
    fn rejects_points_outside_interior() {
        assert!(NormedPoint::new(vec![c(1.0, 0.0), c(0.0, 0.0)], NormKind::Sup).is_err());
        assert!(NormedPoint::new(vec![c(0.0, 0.0); 3], NormKind::Sup).is_err());
        assert!(NormedPoint::new(vec![c(0.8, 0.0), c(0.8, 0.0)], NormKind::Euclidean).is_err());
        assert!(
            NormedPoint::with_k_index(vec![c(0.5, 0.0), c(0.2, 0.0)], NormKind::Sup, 1).is_err()
        );
    }

    #[test]
    fn extremal_terms() {
        let h = lift(&extremal_g(&PhiSpec::HalfPlane, 8).unwrap());
        assert!((h.coeff(1) - c(0.0, 2.0)).norm() < 1e-12);
        assert!((h.coeff(2) - c(-3.0, 0.0)).norm() < 1e-12);
        let r = 0.6;
        let z = pt(&[c(r, 0.0), c(0.0, 0.0)], NormKind::Sup);
        let t = homogeneous_terms(&h, &z, &Direction::Coordinate(0)).unwrap();
        assert!((t.q2[0] - c(0.0, 2.0 * r * r)).norm() < 1e-12);
        assert!((t.q3[0] - c(-3.0 * r.powi(3), 0.0)).norm() < 1e-12);
        assert_eq!(t.q2[1], c(0.0, 0.0));
        assert_eq!(t.q3[1], c(0.0, 0.0));
    }

    #[test]
    fn identity_mapping_terms() {
        let z = pt(&[c(0.2, 0.1), c(-0.4, 0.3)], NormKind::Sup);
        let t = homogeneous_terms(&Series::one(6), &z, &Direction::Coordinate(0)).unwrap();
        assert!(t.q2.iter().chain(&t.q3).all(|v| v.norm() == 0.0));
        assert!(homogeneous_terms(&Series::z(6), &z, &Direction::Coordinate(0)).is_err());
    }

    #[test]
    fn terms_match_restriction_and_polarization() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let words = sample_words(40, 3, 3);
        for (i, w) in words.iter().enumerate() {
            let h = lift(&g_from_schwarz(&PhiSpec::Alpha(0.25), w, 10).unwrap());
            let kind = if i % 2 == 0 {
                NormKind::Sup
            } else {
                NormKind::Euclidean
            };
            let z = random_point(&mut rng, 3, kind);
            let u = random_point(&mut rng, 3, kind);
            let unit: Vec<_> = u.coords().iter().map(|x| x / u.norm()).collect();
            for dir in [
                Direction::Coordinate(i % 3),
                Direction::Functional(LzFunctional::at(unit, kind).unwrap()),
            ] {
                let t = homogeneous_terms(&h, &z, &dir).unwrap();
                let ell = dir.apply(z.coords()).unwrap();
                let rest = restriction(&h, z.coords(), ell);
                for ((r, q2), q3) in rest.iter().zip(&t.q2).zip(&t.q3) {
                    assert!((r.coeff(2) - q2).norm() < 1e-12);
                    assert!((r.coeff(3) - q3).norm() < 1e-12);
                }
                // 1/2 D^2 G(0)(x, y) by polarization of the quadratic part
                let quad = |x: &[Complex64]| -> Vec<Complex64> {
                    let l = dir.apply(x).unwrap();
                    restriction(&h, x, l).iter().map(|s| s.coeff(2)).collect()
                };
                let sum: Vec<_> = z.coords().iter().zip(&t.q2).map(|(a, b)| a + b).collect();
                let (qs, qx, qy) = (quad(&sum), quad(z.coords()), quad(&t.q2));
                for k in 0..3 {
                    let bilinear = (qs[k] - qx[k] - qy[k]) * 0.5;
                    assert!((bilinear - t.b2sq_vec[k]).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn ball_extremal_equality() {
        for phi in [PhiSpec::HalfPlane, PhiSpec::Alpha(0.5), PhiSpec::Power(0.6)] {
            let h = lift(&extremal_g(&phi, 8).unwrap());
            for kind in [NormKind::Sup, NormKind::Euclidean] {
                for r in [0.1, 0.5, 0.95] {
                    let u = vec![c(0.6, 0.0), c(0.0, 0.8)];
                    let unit_norm = kind.norm(&u);
                    let u: Vec<_> = u.iter().map(|x| x / unit_norm).collect();
                    let z = NormedPoint::new(u.iter().map(|x| x * r).collect(), kind).unwrap();
                    let dir = Direction::Functional(LzFunctional::at(u, kind).unwrap());
                    let m = verify_ball(&phi, &h, &z, &dir).unwrap();
                    assert!(m.t22_margin.abs() < 1e-9, "{phi} {kind:?} {r}");
                    assert!(m.t31_margin.abs() < 1e-9, "{phi} {kind:?} {r}");
                }
            }
        }
    }

    #[test]
    fn ball_identity_mapping() {
        let z = pt(&[c(0.1, 0.2), c(0.3, 0.0)], NormKind::Euclidean);
        let m = verify_ball(
            &PhiSpec::HalfPlane,
            &Series::one(4),
            &z,
            &Direction::Coordinate(0),
        )
        .unwrap();
        assert!((m.t31_lhs - 1.0).abs() < 1e-15);
        assert!((m.t31_margin - 23.0).abs() < 1e-12);
    }

    #[test]
    fn ball_reduces_to_one_variable() {
        for w in sample_words(30, 12, 2) {
            let g = g_from_schwarz(&PhiSpec::HalfPlane, &w, 8).unwrap();
            let j = coeff_jet(&g).unwrap();
            let z = pt(&[c(0.37, 0.0)], NormKind::Sup);
            let m = ball_margins(
                &PhiSpec::HalfPlane,
                &lift(&g),
                &z,
                &Direction::Coordinate(0),
            )
            .unwrap();
            assert!((m.b2 - j.b2).norm() < 1e-12);
            assert!((m.b3 - j.b3).norm() < 1e-12);
            assert_eq!(m.t22_bound, 13.0);
            assert_eq!(m.t31_bound, 24.0);
        }
    }

    #[test]
    fn sup_norm_tie_break_does_not_matter() {
        let h = lift(&g_from_schwarz(&PhiSpec::HalfPlane, &sample_words(1, 5, 2)[0], 8).unwrap());
        let coords = vec![c(0.3, 0.4), c(0.0, -0.5), c(0.1, 0.0)];
        let a = NormedPoint::with_k_index(coords.clone(), NormKind::Sup, 0).unwrap();
        let b = NormedPoint::with_k_index(coords, NormKind::Sup, 1).unwrap();
        assert_eq!(a.k_index(), 0);
        let dir = Direction::Coordinate(2);
        let (ma, mb) = (
            ball_margins(&PhiSpec::HalfPlane, &h, &a, &dir).unwrap(),
            ball_margins(&PhiSpec::HalfPlane, &h, &b, &dir).unwrap(),
        );
        assert!((ma.b2 - mb.b2).norm() < 1e-12);
        assert!((ma.b3 - mb.b3).norm() < 1e-12);
        let (pa, pb) = (
            polydisc_margins(&PhiSpec::HalfPlane, &h, &a, &dir).unwrap(),
            polydisc_margins(&PhiSpec::HalfPlane, &h, &b, &dir).unwrap(),
        );
        assert_eq!(pa, pb);
    }

    #[test]
    fn polydisc_extremal_t22_equality() {
        let h = lift(&extremal_g(&PhiSpec::HalfPlane, 8).unwrap());
        for n in [2, 3, 5] {
            for r in [0.3, 0.6, 0.9] {
                let mut coords = vec![c(0.0, 0.0); n];
                coords[0] = c(r, 0.0);
                let z = pt(&coords, NormKind::Sup);
                let m = polydisc_margins(&PhiSpec::HalfPlane, &h, &z, &Direction::Coordinate(0))
                    .unwrap();
                let expected = 9.0 * r.powi(6) + 4.0 * r.powi(4);
                assert!((m.t22_lhs - expected).abs() < 1e-9);
                assert!(m.t22_margin.abs() < 1e-9);
                // the cubic-weight bound is attained as well
                assert!(m.t31_margin_cubic.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn polydisc_identity_mapping() {
        let z = pt(&[c(0.2, 0.1), c(-0.4, 0.3)], NormKind::Sup);
        let m = polydisc_margins(
            &PhiSpec::HalfPlane,
            &Series::one(4),
            &z,
            &Direction::Coordinate(0),
        )
        .unwrap();
        assert_eq!(m.t22_lhs, 0.0);
        assert!(m.t22_margin > 0.0);
        let euclid = pt(&[c(0.2, 0.1), c(-0.4, 0.3)], NormKind::Euclidean);
        assert!(polydisc_margins(
            &PhiSpec::HalfPlane,
            &Series::one(4),
            &euclid,
            &Direction::Coordinate(0)
        )
        .is_err());
    }

    #[test]
    fn polydisc_rhs_increases_with_radius() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..100 {
            let jet = Jet2::new(rng.random_range(0.05..2.0), rng.random_range(-2.0..6.0)).unwrap();
            let mut prev = polydisc_t22_rhs(jet, 0.0);
            for i in 1..100 {
                let v = polydisc_t22_rhs(jet, i as f64 / 100.0);
                assert!(v > prev);
                prev = v;
            }
        }
    }

    #[test]
    fn random_lifts_respect_ball_and_polydisc_t22() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let phi = PhiSpec::HalfPlane;
        for (i, w) in sample_words(100, 77, 3).iter().enumerate() {
            let h = lift(&g_from_schwarz(&phi, w, 8).unwrap());
            let n = [2, 3, 5][i % 3];
            let z = random_point(&mut rng, n, NormKind::Sup);
            let dir = Direction::Coordinate(0);
            verify_ball(&phi, &h, &z, &dir).unwrap();
            let m = polydisc_margins(&phi, &h, &z, &dir).unwrap();
            assert!(m.t22_margin >= -1e-9);
            assert!(m.t31_margin_cubic >= -1e-9);
            let ze = random_point(&mut rng, n, NormKind::Euclidean);
            verify_ball(&phi, &h, &ze, &dir).unwrap();
        }
        let _ = SchwarzWord::rotation(c(1.0, 0.0));
    }
}
