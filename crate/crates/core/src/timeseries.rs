//! Uniformly sampled scalar time series, the carrier for wind speed (m/s)
//! and power (MW) throughout the pipeline.

use crate::error::{Error, Result};

/// A uniformly sampled series. `values[k]` is the sample at
/// `start_time + k * dt` (seconds from the simulation epoch).
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    /// Sample spacing in seconds, strictly positive.
    pub dt: f64,
    /// Time of the first sample, seconds from the simulation epoch.
    pub start_time: f64,
    pub values: Vec<f64>,
}

impl TimeSeries {
    pub fn new(dt: f64, start_time: f64, values: Vec<f64>) -> Result<Self> {
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(Error::Input(format!("time series dt must be positive, got {dt}")));
        }
        if values.is_empty() {
            return Err(Error::Input("time series must hold at least one sample".into()));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Input(format!("time series contains non-finite value {bad}")));
        }
        Ok(Self { dt, start_time, values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Timestamp of sample `k`.
    pub fn time_at(&self, k: usize) -> f64 {
        self.start_time + k as f64 * self.dt
    }

    /// Time of the last sample.
    pub fn end_time(&self) -> f64 {
        self.time_at(self.len() - 1)
    }

    /// Index of the sample at time `t`, which must align with the grid
    /// (within 1e-6 of a sample instant) and lie inside the series.
    pub fn index_at(&self, t: f64) -> Result<usize> {
        let raw = (t - self.start_time) / self.dt;
        let k = raw.round();
        if (raw - k).abs() > 1e-6 {
            return Err(Error::Input(format!(
                "time {t} s does not align with the sampling grid (dt = {} s)",
                self.dt
            )));
        }
        if k < 0.0 || k as usize >= self.len() {
            return Err(Error::Input(format!(
                "time {t} s lies outside the series span [{}, {}]",
                self.start_time,
                self.end_time()
            )));
        }
        Ok(k as usize)
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.len() as f64
    }

    /// Population variance around the sample mean.
    pub fn variance(&self) -> f64 {
        let m = self.mean();
        self.values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / self.len() as f64
    }

    pub fn std_dev(&self) -> f64 {
        self.variance().sqrt()
    }

    /// Checks that `other` shares this series' sampling (dt, start, length).
    pub fn same_grid(&self, other: &TimeSeries) -> bool {
        self.dt == other.dt && self.start_time == other.start_time && self.len() == other.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_construction() {
        assert!(TimeSeries::new(0.0, 0.0, vec![1.0]).is_err());
        assert!(TimeSeries::new(1.0, 0.0, vec![]).is_err());
        assert!(TimeSeries::new(1.0, 0.0, vec![f64::NAN]).is_err());
    }

    #[test]
    fn index_lookup_honours_grid() {
        let s = TimeSeries::new(60.0, 120.0, vec![0.0; 10]).unwrap();
        assert_eq!(s.index_at(120.0).unwrap(), 0);
        assert_eq!(s.index_at(300.0).unwrap(), 3);
        assert!(s.index_at(130.0).is_err()); // off-grid
        assert!(s.index_at(720.0 + 60.0).is_err()); // past the end
    }

    #[test]
    fn moments() {
        let s = TimeSeries::new(1.0, 0.0, vec![1.0, 3.0]).unwrap();
        assert_eq!(s.mean(), 2.0);
        assert_eq!(s.variance(), 1.0);
    }
}
