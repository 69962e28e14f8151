//! Cross-network curve averaging, the log-log quadratic fit of Δ(k) and
//! comparison against the reference curve.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::curve::MetricCurve;
use crate::error::{Error, Result};

/// Twelve of eighteen networks.
pub const DEFAULT_MIN_SUPPORT_RATIO: f64 = 12.0 / 18.0;

/// Curves of the same metric taken from several networks.
#[derive(Debug, Clone)]
pub struct CurveCollection {
    curves: Vec<(String, MetricCurve)>,
    min_support_ratio: f64,
}

impl CurveCollection {
    pub fn new(curves: Vec<(String, MetricCurve)>, min_support_ratio: f64) -> Result<Self> {
        if curves.is_empty() {
            return Err(Error::InvalidParams("empty curve collection".into()));
        }
        if !(min_support_ratio > 0.0 && min_support_ratio <= 1.0) {
            return Err(Error::InvalidParams(format!(
                "min support ratio {min_support_ratio} outside (0, 1]"
            )));
        }
        Ok(Self {
            curves,
            min_support_ratio,
        })
    }

    pub fn with_default_ratio(curves: Vec<(String, MetricCurve)>) -> Result<Self> {
        Self::new(curves, DEFAULT_MIN_SUPPORT_RATIO)
    }

    pub fn curves(&self) -> &[(String, MetricCurve)] {
        &self.curves
    }

    pub fn min_support_ratio(&self) -> f64 {
        self.min_support_ratio
    }

    /// Smallest number of curves that must be positive at an `x`.
    pub fn required_support(&self) -> usize {
        // The tolerance keeps 2/3 · 18 at 12 despite rounding in the ratio.
        let raw = self.min_support_ratio * self.curves.len() as f64;
        ((raw - 1e-9).ceil() as usize).max(1)
    }
}

/// Averages the curves point-wise. At each `x`, the `X` curves with a
/// positive value there are averaged, provided `X` reaches the support
/// threshold; otherwise `x` is left out.
pub fn average_curves(coll: &CurveCollection) -> MetricCurve {
    let required = coll.required_support();
    let mut samples: Vec<(f64, f64)> = coll
        .curves
        .iter()
        .flat_map(|(_, c)| c.points().iter().copied())
        .filter(|&(_, y)| y > 0.0)
        .collect();
    samples.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut points = Vec::new();
    for group in samples.chunk_by(|a, b| a.0 == b.0) {
        if group.len() >= required {
            let mean = group.iter().map(|p| p.1).sum::<f64>() / group.len() as f64;
            points.push((group[0].0, mean));
        }
    }
    MetricCurve::from_sorted(points)
}

/// `log10(y) = a·log10²(x) + b·log10(x) + c`, valid for `x > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadraticLogFit {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Range of `x` the coefficients were fitted on.
    pub x_min: f64,
    pub x_max: f64,
    /// Root-mean-square residual in log10 units.
    pub residual_rms: f64,
}

/// Coefficients of the web-site Δ(k) reference curve.
pub const REFERENCE_COEFFICIENTS: (f64, f64, f64) = (-0.3579, 2.9432, -1.1907);

impl QuadraticLogFit {
    /// The reference Δ(k) curve, declared over degrees 1 to 10⁴.
    pub fn reference() -> Self {
        let (a, b, c) = REFERENCE_COEFFICIENTS;
        Self {
            a,
            b,
            c,
            x_min: 1.0,
            x_max: 1e4,
            residual_rms: 0.0,
        }
    }

    pub fn log10_at(&self, x: f64) -> Result<f64> {
        if x.is_nan() || x <= 0.0 {
            return Err(Error::InvalidParams(format!("x = {x} must be positive")));
        }
        let t = x.log10();
        Ok(self.a * t * t + self.b * t + self.c)
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        Ok(10f64.powf(self.log10_at(x)?))
    }
}

/// Evaluates the reference curve in its four-decimal quadratic form.
pub fn eval_reference(x: f64) -> Result<f64> {
    QuadraticLogFit::reference().eval(x)
}

/// The same curve written as `0.064·x^(2.94 − 0.36·log10 x)`, with the
/// rounded constants. Kept only for comparison with the quadratic form.
pub fn eval_reference_power_form(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::InvalidParams(format!("x = {x} must be positive")));
    }
    Ok(0.064 * x.powf(2.94 - 0.36 * x.log10()))
}

fn log_points(curve: &MetricCurve) -> Vec<(f64, f64)> {
    curve
        .points()
        .iter()
        .filter(|&&(x, y)| x > 0.0 && y > 0.0)
        .map(|&(x, y)| (x.log10(), y.log10()))
        .collect()
}

/// Unweighted least squares of `(log10 x, log10 y)` on a quadratic, over
/// the points with `x > 0` and `y > 0`.
pub fn fit_quadratic_loglog(curve: &MetricCurve) -> Result<QuadraticLogFit> {
    let pts = log_points(curve);
    if pts.len() < 3 {
        return Err(Error::Fit(format!(
            "need at least 3 positive points, got {}",
            pts.len()
        )));
    }
    let mut ts: Vec<f64> = pts.iter().map(|p| p.0).collect();
    ts.dedup();
    if ts.len() < 3 {
        return Err(Error::Fit("fewer than 3 distinct x values".into()));
    }

    let design = DMatrix::from_fn(pts.len(), 3, |i, j| pts[i].0.powi(2 - j as i32));
    let rhs = DVector::from_iterator(pts.len(), pts.iter().map(|p| p.1));
    let coef = design
        .svd(true, true)
        .solve(&rhs, 1e-12)
        .map_err(|e| Error::Fit(e.to_string()))?;

    let (a, b, c) = (coef[0], coef[1], coef[2]);
    let sq: f64 = pts
        .iter()
        .map(|&(t, ly)| (a * t * t + b * t + c - ly).powi(2))
        .sum();
    let xs = curve.points().iter().filter(|p| p.0 > 0.0 && p.1 > 0.0);
    let x_min = xs.clone().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let x_max = xs.map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    Ok(QuadraticLogFit {
        a,
        b,
        c,
        x_min,
        x_max,
        residual_rms: (sq / pts.len() as f64).sqrt(),
    })
}

/// Distance between a curve and a fitted form, in log10 units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DivergenceReport {
    pub points_compared: usize,
    /// Points inside the fit domain skipped because `y <= 0`.
    pub nonpositive_excluded: usize,
    pub rms_log10: f64,
    pub max_abs_log10: f64,
}

/// Compares `curve` with `fit` over the part of the curve lying inside
/// the fit domain.
pub fn compare_to_reference(
    curve: &MetricCurve,
    fit: &QuadraticLogFit,
) -> Result<DivergenceReport> {
    let mut excluded = 0;
    let mut devs = Vec::new();
    for &(x, y) in curve.points() {
        if !(x > 0.0 && x >= fit.x_min && x <= fit.x_max) {
            continue;
        }
        if y <= 0.0 {
            excluded += 1;
            continue;
        }
        devs.push(y.log10() - fit.log10_at(x)?);
    }
    if devs.is_empty() {
        return Err(Error::InvalidParams(
            "curve has no positive points inside the fit domain".into(),
        ));
    }
    let rms = (devs.iter().map(|d| d * d).sum::<f64>() / devs.len() as f64).sqrt();
    let max = devs.iter().fold(0.0f64, |m, d| m.max(d.abs()));
    Ok(DivergenceReport {
        points_compared: devs.len(),
        nonpositive_excluded: excluded,
        rms_log10: rms,
        max_abs_log10: max,
    })
}

/// Negated slope of the least-squares line through `(log10 x, log10 y)`
/// for points with `x >= k_min`. A quick diagnostic, not an estimator with
/// error bars.
pub fn estimate_powerlaw_exponent(curve: &MetricCurve, k_min: f64) -> Result<f64> {
    if k_min.is_nan() || k_min <= 0.0 {
        return Err(Error::InvalidParams(format!(
            "k_min = {k_min} must be positive"
        )));
    }
    let pts: Vec<(f64, f64)> = log_points(curve)
        .into_iter()
        .filter(|p| p.0 >= k_min.log10())
        .collect();
    if pts.len() < 2 {
        return Err(Error::Fit(format!(
            "need at least 2 points with x >= {k_min}, got {}",
            pts.len()
        )));
    }
    let n = pts.len() as f64;
    let mt = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mt).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mt) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return Err(Error::Fit("all x values equal".into()));
    }
    Ok(-(sxy / sxx))
}
