//! Toeplitz determinants of the second and third coefficients.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::Series;

/// Largest matrix accepted by [`det_generic`].
pub const MAX_GENERIC_SIZE: usize = 6;

/// `(b2, b3)` of a normalized `g(z) = z + b2 z^2 + b3 z^3 + ...`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoeffJet {
    pub b2: Complex64,
    pub b3: Complex64,
}

impl CoeffJet {
    pub fn new(b2: Complex64, b3: Complex64) -> Self {
        Self { b2, b3 }
    }
}

pub fn coeff_jet(g: &Series) -> Result<CoeffJet> {
    if g.order() < 3 {
        return Err(Error::NotNormalized(format!(
            "need order >= 3 to read b3, got {}",
            g.order()
        )));
    }
    let (c0, c1) = (g.coeff(0), g.coeff(1));
    if c0.norm() > 1e-12 || (c1 - Complex64::new(1.0, 0.0)).norm() > 1e-12 {
        return Err(Error::NotNormalized(format!("g(0) = {c0}, g'(0) = {c1}")));
    }
    Ok(CoeffJet::new(g.coeff(2), g.coeff(3)))
}

/// `det [[b2, b3], [b3, b2]] = b2^2 - b3^2`.
pub fn det_t22(j: CoeffJet) -> Complex64 {
    j.b2 * j.b2 - j.b3 * j.b3
}

/// `det [[1, b2, b3], [b2, 1, b2], [b3, b2, 1]] = 2 b2^2 b3 - 2 b2^2 - b3^2 + 1`.
pub fn det_t31(j: CoeffJet) -> Complex64 {
    let b2sq = j.b2 * j.b2;
    b2sq * j.b3 * 2.0 - b2sq * 2.0 - j.b3 * j.b3 + 1.0
}

/// Determinant of the `m x m` symmetric Toeplitz matrix with the given first
/// row, by Gaussian elimination with partial pivoting.
pub fn det_generic(first_row: &[Complex64], m: usize) -> Result<Complex64> {
    if m == 0 || m > MAX_GENERIC_SIZE {
        return Err(Error::InvalidParameters(format!(
            "generic determinant supports 1 <= m <= {MAX_GENERIC_SIZE}, got {m}"
        )));
    }
    if first_row.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: first_row.len(),
        });
    }
    let mut a: Vec<Vec<Complex64>> = (0..m)
        .map(|i| (0..m).map(|j| first_row[i.abs_diff(j)]).collect())
        .collect();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..m {
        let pivot = (col..m)
            .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
            .unwrap_or(col);
        if a[pivot][col].norm() == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        let (upper, lower) = a.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower.iter_mut() {
            let f = row[col] / p;
            for (x, v) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * v;
            }
        }
    }
    Ok(det)
}
