//! Ordered `x -> y` curves shared by every metric.

use crate::error::{Error, Result};

/// A metric sampled at strictly increasing `x` values.
///
/// Used for P(k), k_nn(k), φ(k), P_c(Δ), Δ(k) and C(k).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MetricCurve {
    points: Vec<(f64, f64)>,
}

impl MetricCurve {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a curve after checking that `x` is strictly increasing and
    /// every coordinate is finite.
    pub fn from_points(points: Vec<(f64, f64)>) -> Result<Self> {
        for (i, &(x, y)) in points.iter().enumerate() {
            if !x.is_finite() || !y.is_finite() {
                return Err(Error::InvalidCurve(format!(
                    "non-finite point ({x}, {y}) at index {i}"
                )));
            }
            if i > 0 && points[i - 1].0 >= x {
                return Err(Error::InvalidCurve(format!(
                    "x not strictly increasing at index {i}"
                )));
            }
        }
        Ok(Self { points })
    }

    /// Internal constructor for points already known to be ordered.
    pub(crate) fn from_sorted(points: Vec<(f64, f64)>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0].0 < w[1].0));
        Self { points }
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Value at exactly `x`, if sampled there.
    pub fn get(&self, x: f64) -> Option<f64> {
        self.points
            .binary_search_by(|p| p.0.total_cmp(&x))
            .ok()
            .map(|i| self.points[i].1)
    }

    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.0)
    }

    pub fn ys(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.1)
    }

    /// Multiplies every `y` by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            points: self.points.iter().map(|&(x, y)| (x, y * factor)).collect(),
        }
    }
}

/// Mean of `value` grouped by integer `key`, one point per realized key.
pub(crate) fn mean_by_key<I>(pairs: I) -> MetricCurve
where
    I: IntoIterator<Item = (usize, f64)>,
{
    let mut acc: std::collections::BTreeMap<usize, (f64, usize)> = Default::default();
    for (k, v) in pairs {
        let e = acc.entry(k).or_insert((0.0, 0));
        e.0 += v;
        e.1 += 1;
    }
    MetricCurve::from_sorted(
        acc.into_iter()
            .map(|(k, (sum, n))| (k as f64, sum / n as f64))
            .collect(),
    )
}

impl IntoIterator for MetricCurve {
    type Item = (f64, f64);
    type IntoIter = std::vec::IntoIter<(f64, f64)>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.into_iter()
    }
}
