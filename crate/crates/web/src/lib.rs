//! Browser bindings: bound reports, bound curves over a family parameter and
//! a heatmap of a determinant over the Schwarz–Pick two-jet body.

use wasm_bindgen::prelude::*;

use toeplitz_lab::sampler::JetBodyPoint;
use toeplitz_lab::{report, t22_bound, t31_bound, Complex64, PhiSpec, Target, Theorem};

const FS_LAMBDAS: [f64; 4] = [0.0, 0.5, 1.0, 2.0];

/// Pretty JSON bound report for a family descriptor such as `alpha:0.3`.
#[wasm_bindgen]
pub fn bounds_json(family: &str) -> Result<String, String> {
    let phi = PhiSpec::parse(family).map_err(|e| e.to_string())?;
    let lambdas: Vec<Complex64> = FS_LAMBDAS.iter().map(|&l| Complex64::new(l, 0.0)).collect();
    let r = report(&phi, &lambdas).map_err(|e| e.to_string())?;
    serde_json::to_string_pretty(&r).map_err(|e| e.to_string())
}

/// Samples `steps` evenly spaced parameters of `alpha` or `power` on
/// `[start, stop]`. Returns flat triples `(param, t22, t31)`; a bound whose
/// hypothesis fails is reported as NaN.
#[wasm_bindgen]
pub fn bound_curve(kind: &str, start: f64, stop: f64, steps: usize) -> Result<Vec<f64>, String> {
    if steps < 2 || start.is_nan() || stop.is_nan() || start > stop {
        return Err("need at least two steps and start <= stop".into());
    }
    let mut out = Vec::with_capacity(3 * steps);
    for i in 0..steps {
        let p = start + (stop - start) * i as f64 / (steps - 1) as f64;
        let phi = match kind {
            "alpha" => PhiSpec::Alpha(p),
            "power" => PhiSpec::Power(p),
            other => return Err(format!("unknown sweep '{other}', expected alpha or power")),
        };
        let jet = phi.jet2().map_err(|e| e.to_string())?;
        let t22 = if jet.satisfies_t22() {
            t22_bound(jet)
        } else {
            f64::NAN
        };
        let t31 = if jet.satisfies_t31() {
            t31_bound(jet)
        } else {
            f64::NAN
        };
        out.extend([p, t22, t31]);
    }
    Ok(out)
}

/// RGBA image (`size` x `size`) of `max |det| / bound` over the jet body,
/// indexed by `w1` in the unit disk. For each `w1` the maximum is taken over
/// `angles` points of the circle `|w2| = 1 - |w1|^2`. Pixels outside the disk
/// are transparent.
#[wasm_bindgen]
pub fn jet_body_heatmap(
    family: &str,
    theorem: &str,
    size: usize,
    angles: usize,
) -> Result<Vec<u8>, String> {
    if size == 0 || angles == 0 {
        return Err("size and angles must be positive".into());
    }
    let phi = PhiSpec::parse(family).map_err(|e| e.to_string())?;
    let jet = phi.jet2().map_err(|e| e.to_string())?;
    let theorem = Theorem::parse(theorem).map_err(|e| e.to_string())?;
    let target = Target::from(theorem);
    let bound = theorem.bound(jet);
    let rotations: Vec<Complex64> = (0..angles)
        .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / angles as f64))
        .collect();

    let mut rgba = vec![0u8; 4 * size * size];
    for y in 0..size {
        for x in 0..size {
            let w1 = Complex64::new(
                2.0 * (x as f64 + 0.5) / size as f64 - 1.0,
                1.0 - 2.0 * (y as f64 + 0.5) / size as f64,
            );
            let r2 = w1.norm_sqr();
            if r2 > 1.0 {
                continue;
            }
            let best = rotations
                .iter()
                .map(|u| {
                    let p = JetBodyPoint {
                        w1,
                        w2: u * (1.0 - r2),
                    };
                    target.eval(p.coeff_jet(jet))
                })
                .fold(0.0, f64::max);
            let [r, g, b] = colormap(best / bound);
            let i = 4 * (y * size + x);
            rgba[i..i + 4].copy_from_slice(&[r, g, b, 255]);
        }
    }
    Ok(rgba)
}

/// Maps `t` in `[0, 1]` to a dark-blue to yellow ramp; values above 1 are red.
pub fn colormap(t: f64) -> [u8; 3] {
    const STOPS: [[f64; 3]; 5] = [
        [68.0, 1.0, 84.0],
        [59.0, 82.0, 139.0],
        [33.0, 145.0, 140.0],
        [94.0, 201.0, 98.0],
        [253.0, 231.0, 37.0],
    ];
    if t > 1.0 + 1e-9 {
        return [220, 30, 30];
    }
    let s = t.clamp(0.0, 1.0) * (STOPS.len() - 1) as f64;
    let k = (s.floor() as usize).min(STOPS.len() - 2);
    let f = s - k as f64;
    let mix = |c: usize| (STOPS[k][c] + f * (STOPS[k + 1][c] - STOPS[k][c])).round() as u8;
    [mix(0), mix(1), mix(2)]
}
