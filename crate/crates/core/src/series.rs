//! Truncated univariate complex power series.
//!
//! A [`Series`] of order `N` stores the coefficients `c_0..=c_N` of
//! `c_0 + c_1 z + ... + c_N z^N`; everything past `z^N` is discarded. Binary
//! operations truncate to the smaller of the two operand orders.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default truncation order used by the samplers and the CLI.
pub const DEFAULT_ORDER: usize = 16;

/// Coefficient comparison tolerance (absolute).
pub const COEFF_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Clone, PartialEq)]
pub struct Series {
    coeffs: Vec<Complex64>,
}

impl Series {
    /// Builds a series of the given order from leading coefficients, padding
    /// with zeros or truncating as needed.
    pub fn new(coeffs: impl IntoIterator<Item = Complex64>, order: usize) -> Self {
        let mut c: Vec<Complex64> = coeffs.into_iter().take(order + 1).collect();
        c.resize(order + 1, ZERO);
        Self { coeffs: c }
    }

    pub fn from_real(coeffs: &[f64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new([], order)
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        Self::new([c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ONE, order)
    }

    /// The identity series `z`.
    pub fn z(order: usize) -> Self {
        Self::new([ZERO, ONE], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero past the truncation order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    pub fn constant_term(&self) -> Complex64 {
        self.coeffs[0]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().copied(), order)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Multiplies by `z`, keeping the order (the top coefficient falls off).
    pub fn shift_up(&self) -> Self {
        let n = self.order();
        Self::new(
            std::iter::once(ZERO).chain(self.coeffs[..n].iter().copied()),
            n,
        )
    }

    /// Divides by `z`, dropping the constant term. The order drops by one.
    pub fn shift_down(&self) -> Self {
        let n = self.order();
        Self::new(self.coeffs[1..].iter().copied(), n.saturating_sub(1))
    }

    /// `f(lambda z)`.
    pub fn dilate(&self, lambda: Complex64) -> Self {
        let mut p = ONE;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c * p;
                p *= lambda;
                out
            })
            .collect();
        Self { coeffs }
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, c| acc * z + c)
    }

    /// Max absolute coefficient difference over the shared order.
    pub fn max_abs_diff(&self, other: &Series) -> f64 {
        let n = self.order().min(other.order());
        (0..=n)
            .map(|k| (self.coeffs[k] - other.coeffs[k]).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Series, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Quotient `self / rhs` truncated to the shared order.
    pub fn div(&self, rhs: &Series) -> Result<Series> {
        let b0 = rhs.coeffs[0];
        if b0 == ZERO {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order().min(rhs.order());
        let mut q = vec![ZERO; n + 1];
        for k in 0..=n {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= rhs.coeffs[j] * q[k - j];
            }
            q[k] = acc / b0;
        }
        Ok(Series { coeffs: q })
    }

    /// `outer(inner(z))` by Horner's scheme over series.
    pub fn compose(outer: &Series, inner: &Series) -> Result<Series> {
        let c0 = inner.coeffs[0];
        if c0 != ZERO {
            return Err(Error::NonzeroInnerConstant(c0.to_string()));
        }
        let n = outer.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Series::constant(outer.coeffs[n], n);
        for k in (0..n).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += outer.coeffs[k];
        }
        Ok(acc)
    }

    /// `exp(self)` for a series vanishing at 0, via `(exp a)' = a' exp a`.
    pub fn exp(&self) -> Result<Series> {
        self.require_vanishing()?;
        let n = self.order();
        let mut e = vec![ZERO; n + 1];
        e[0] = ONE;
        for m in 1..=n {
            let mut acc = ZERO;
            for k in 1..=m {
                acc += self.coeffs[k] * e[m - k] * k as f64;
            }
            e[m] = acc / m as f64;
        }
        Ok(Series { coeffs: e })
    }

    /// `integral_0^z a(t)/t dt`, i.e. `sum a_k z^k / k`, for `a(0) = 0`.
    pub fn integrate_div_t(&self) -> Result<Series> {
        self.require_vanishing()?;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k == 0 { ZERO } else { c / k as f64 })
            .collect();
        Ok(Series { coeffs })
    }

    /// Term-by-term derivative; order drops by one.
    pub fn derivative(&self) -> Series {
        let n = self.order();
        if n == 0 {
            return Series::zero(0);
        }
        Series {
            coeffs: (1..=n).map(|k| self.coeffs[k] * k as f64).collect(),
        }
    }

    fn require_vanishing(&self) -> Result<()> {
        let c0 = self.coeffs[0];
        if c0 != ZERO {
            return Err(Error::NonzeroConstant(c0.to_string()));
        }
        Ok(())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(z^{})]", self.order() + 1)
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..=n).map(|k| self.coeffs[k] + rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..=n).map(|k| self.coeffs[k] - rhs.coeffs[k]).collect(),
        }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        self.scale(-ONE)
    }
}

impl Mul for &Series {
    type Output = Series;

    /// Cauchy product truncated to the shared order.
    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut out = vec![ZERO; n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if *a == ZERO {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real(cs: &[f64]) -> Series {
        Series::from_real(cs, 6)
    }

    /// Schoolbook convolution used as an oracle for `mul`.
    fn convolve(a: &[f64], b: &[f64], order: usize) -> Vec<f64> {
        let mut out = vec![0.0; order + 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                if i + j <= order {
                    out[i + j] += x * y;
                }
            }
        }
        out
    }

    #[test]
    fn add_examples() {
        assert!((&real(&[1.0, 1.0]) + &real(&[1.0, -1.0])).approx_eq(&real(&[2.0]), 0.0));
        let a = real(&[0.3, -1.0, 2.5]);
        assert_eq!(&Series::zero(6) + &a, a);
        let p = real(&[1.0, 2.0, 2.0]);
        let expected: Vec<f64> = [1.0, 2.0, 2.0].iter().map(|x| 2.0 * x).collect();
        assert!((&p + &p).approx_eq(&real(&expected), 0.0));
    }

    #[test]
    fn mul_examples() {
        let prod = &real(&[1.0, 1.0]) * &real(&[1.0, -1.0]);
        assert!(prod.approx_eq(&real(&[1.0, 0.0, -1.0]), 0.0));
        let shifted = &Series::z(6) * &real(&[1.0, 2.0, 3.0]);
        assert!(shifted.approx_eq(&real(&[0.0, 1.0, 2.0, 3.0]), 0.0));

        let sq = [1.0, 1.0, 1.0];
        let oracle = convolve(&sq, &sq, 3);
        let got = &Series::from_real(&sq, 3) * &Series::from_real(&sq, 3);
        assert!(got.approx_eq(&Series::from_real(&oracle, 3), COEFF_TOL));
        assert_eq!(oracle, vec![1.0, 2.0, 3.0, 2.0]);
    }

    #[test]
    fn mul_truncates_to_shared_order() {
        let a = Series::from_real(&[1.0, 1.0], 5);
        let b = Series::from_real(&[1.0, 1.0], 3);
        assert_eq!((&a * &b).order(), 3);
    }

    #[test]
    fn div_examples() {
        let n = 8;
        let geo = Series::one(n)
            .div(&Series::from_real(&[1.0, -1.0], n))
            .unwrap();
        assert!(geo.approx_eq(&Series::from_real(&[1.0; 9], n), COEFF_TOL));

        let a = Series::new([c(0.5, 1.0), c(-2.0, 0.1), c(3.0, 3.0)], n);
        assert!(a.div(&a).unwrap().approx_eq(&Series::one(n), COEFF_TOL));

        // long division of (1+z) by (1-z): q_0 = 1, q_k = q_{k-1} + [k==1]
        let mut oracle = vec![0.0; n + 1];
        let num = [1.0, 1.0];
        for k in 0..=n {
            let prev = if k > 0 { oracle[k - 1] } else { 0.0 };
            oracle[k] = num.get(k).copied().unwrap_or(0.0) + prev;
        }
        let got = Series::from_real(&[1.0, 1.0], n)
            .div(&Series::from_real(&[1.0, -1.0], n))
            .unwrap();
        assert!(got.approx_eq(&Series::from_real(&oracle, n), COEFF_TOL));
        assert_eq!(&oracle[..4], &[1.0, 2.0, 2.0, 2.0]);
    }

    #[test]
    fn div_by_zero_constant() {
        let err = Series::one(4).div(&Series::z(4)).unwrap_err();
        assert_eq!(err, Error::ZeroConstantTerm);
    }

    #[test]
    fn compose_examples() {
        let n = 8;
        let halfplane = Series::from_real(&[1.0, 1.0], n)
            .div(&Series::from_real(&[1.0, -1.0], n))
            .unwrap();
        let got = Series::compose(&halfplane, &Series::z(n)).unwrap();
        assert!(got.approx_eq(&halfplane, COEFF_TOL));
        assert_eq!(got.coeff(3), c(2.0, 0.0));

        let outer = Series::new([c(0.7, -0.2), c(1.0, 0.0), c(5.0, 5.0)], n);
        let composed = Series::compose(&outer, &Series::zero(n)).unwrap();
        assert!(composed.approx_eq(&Series::constant(c(0.7, -0.2), n), COEFF_TOL));

        // exp series composed with lambda z: term substitution gives lambda^k / k!
        let lambda = c(0.4, -1.3);
        let mut fact = 1.0;
        let exp_coeffs: Vec<Complex64> = (0..=n)
            .map(|k| {
                if k > 0 {
                    fact *= k as f64;
                }
                c(1.0 / fact, 0.0)
            })
            .collect();
        let exp = Series::new(exp_coeffs.clone(), n);
        let got = Series::compose(&exp, &Series::z(n).scale(lambda)).unwrap();
        for (k, e) in exp_coeffs.iter().enumerate() {
            assert!((got.coeff(k) - e * lambda.powu(k as u32)).norm() < COEFF_TOL);
        }
    }

    #[test]
    fn compose_rejects_nonzero_inner() {
        let err = Series::compose(&Series::z(4), &Series::one(4)).unwrap_err();
        assert!(matches!(err, Error::NonzeroInnerConstant(_)));
    }

    #[test]
    fn exp_examples() {
        assert!(Series::zero(6)
            .exp()
            .unwrap()
            .approx_eq(&Series::one(6), 0.0));
        let e = Series::z(3).exp().unwrap();
        assert!(e.approx_eq(
            &Series::from_real(&[1.0, 1.0, 0.5, 1.0 / 6.0], 3),
            COEFF_TOL
        ));

        // exp(2iz - 2z^2): from the recurrence, e1 = 2i, e2 = (1*2i*2i + 2*(-2)*1)/2 = -4
        let a = Series::new([c(0.0, 0.0), c(0.0, 2.0), c(-2.0, 0.0)], 4);
        let e = a.exp().unwrap();
        assert!((e.coeff(1) - c(0.0, 2.0)).norm() < COEFF_TOL);
        assert!((e.coeff(2) - c(-4.0, 0.0)).norm() < COEFF_TOL);
    }

    #[test]
    fn exp_rejects_nonzero_constant() {
        assert!(matches!(
            Series::one(3).exp(),
            Err(Error::NonzeroConstant(_))
        ));
    }

    #[test]
    fn integrate_div_t_examples() {
        assert!(Series::z(4)
            .integrate_div_t()
            .unwrap()
            .approx_eq(&Series::z(4), 0.0));
        assert_eq!(Series::zero(4).integrate_div_t().unwrap(), Series::zero(4));
        let a = Series::new([c(0.0, 0.0), c(0.0, 2.0), c(-4.0, 0.0)], 4);
        let expected = Series::new([c(0.0, 0.0), c(0.0, 2.0), c(-2.0, 0.0)], 4);
        assert!(a.integrate_div_t().unwrap().approx_eq(&expected, COEFF_TOL));
        assert!(Series::one(4).integrate_div_t().is_err());
    }

    #[test]
    fn derivative_examples() {
        let d = Series::new([ZERO, ZERO, ONE], 4).derivative();
        assert!(d.approx_eq(&Series::new([ZERO, c(2.0, 0.0)], 3), 0.0));
        assert_eq!(d.order(), 3);
        assert!(Series::constant(c(3.0, 1.0), 4)
            .derivative()
            .approx_eq(&Series::zero(3), 0.0));
        let p = Series::from_real(&[0.0, 1.0, 2.0, 3.0], 3);
        let oracle: Vec<f64> = (1..=3).map(|k| k as f64 * p.coeff(k).re).collect();
        assert!(p
            .derivative()
            .approx_eq(&Series::from_real(&oracle, 2), 0.0));
        assert_eq!(oracle, vec![1.0, 4.0, 9.0]);
    }

    #[test]
    fn shifts_and_eval() {
        let p = Series::from_real(&[1.0, 2.0, 3.0], 4);
        assert!(p.shift_up().shift_down().approx_eq(&p, 0.0));
        let z = c(0.3, -0.2);
        let direct = c(1.0, 0.0) + z * 2.0 + z * z * 3.0;
        assert!((p.eval(z) - direct).norm() < 1e-15);
        assert!((p.dilate(z).eval(c(1.0, 0.0)) - direct).norm() < 1e-15);
    }
}
