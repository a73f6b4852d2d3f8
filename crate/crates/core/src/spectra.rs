//! Parametric wind-speed spectra, spatial coherence, and the matching
//! estimators.
//!
//! The spectral density is modeled as a sum of log-normal bumps in log
//! frequency: each component contributes `variance * lognormal_pdf(f)`,
//! so the component integrates to exactly its variance over f in (0, inf).
//! Two components (a synoptic peak around a four-day period and a
//! turbulence peak around one minute) reproduce the classic two-peak
//! shape with a spectral gap between them.
//!
//! Spatial coherence follows the exponential-decay family
//! `gamma(f, d) = exp(-a * d * f / u_mean)`, the standard single-parameter
//! form for horizontal separations.

use std::f64::consts::PI;

use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::timeseries::TimeSeries;

/// One spectral bump: a log-normal density in log frequency carrying
/// `variance` (m/s)^2 centered on `peak_frequency`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralComponent {
    /// Center of the bump in Hz (peak of the variance-per-log-frequency plot).
    pub peak_frequency: f64,
    /// Total variance carried by the bump, (m/s)^2.
    pub variance: f64,
    /// Width of the bump in natural-log frequency units.
    pub log_width: f64,
}

/// Target wind-speed power spectral density plus the mean speed carried
/// outside the fluctuation spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralModel {
    pub components: Vec<SpectralComponent>,
    /// Mean wind speed in m/s; the spectrum describes fluctuations around it.
    pub mean_speed: f64,
}

impl SpectralModel {
    pub fn new(components: Vec<SpectralComponent>, mean_speed: f64) -> Result<Self> {
        for (i, c) in components.iter().enumerate() {
            if !(c.peak_frequency > 0.0) || !c.peak_frequency.is_finite() {
                return Err(Error::Config(format!(
                    "spectrum.components[{i}].peak_frequency must be > 0, got {}",
                    c.peak_frequency
                )));
            }
            if !(c.variance >= 0.0) || !c.variance.is_finite() {
                return Err(Error::Config(format!(
                    "spectrum.components[{i}].variance must be >= 0, got {}",
                    c.variance
                )));
            }
            if !(c.log_width > 0.0) || !c.log_width.is_finite() {
                return Err(Error::Config(format!(
                    "spectrum.components[{i}].log_width must be > 0, got {}",
                    c.log_width
                )));
            }
        }
        if !(mean_speed > 0.0) || !mean_speed.is_finite() {
            return Err(Error::Config(format!(
                "spectrum.mean_speed must be > 0, got {mean_speed}"
            )));
        }
        Ok(Self { components, mean_speed })
    }

    /// Evaluates the one-sided density S(f) in (m/s)^2/Hz at `f` > 0.
    ///
    /// Each component is the log-normal pdf with median `peak_frequency`
    /// and log-sigma `log_width`, scaled by its variance, so that
    /// the integral of S over (0, inf) equals the sum of component variances.
    pub fn density(&self, f: f64) -> Result<f64> {
        if !(f > 0.0) {
            return Err(Error::Domain(format!("spectral density requires f > 0, got {f}")));
        }
        let mut s = 0.0;
        for c in &self.components {
            if c.variance == 0.0 {
                continue;
            }
            let z = (f / c.peak_frequency).ln() / c.log_width;
            s += c.variance * (-0.5 * z * z).exp() / (f * c.log_width * (2.0 * PI).sqrt());
        }
        Ok(s)
    }

    /// Sum of component variances, (m/s)^2.
    pub fn total_variance(&self) -> f64 {
        self.components.iter().map(|c| c.variance).sum()
    }

    /// Highest component center frequency, or None for an empty model.
    pub fn max_peak_frequency(&self) -> Option<f64> {
        self.components
            .iter()
            .map(|c| c.peak_frequency)
            .fold(None, |acc, f| Some(acc.map_or(f, |a: f64| a.max(f))))
    }

    /// Integrates S(f) over `[f_lo, f_hi]` with trapezoids on a log grid.
    pub fn band_variance(&self, f_lo: f64, f_hi: f64, points: usize) -> Result<f64> {
        if !(f_lo > 0.0) || !(f_hi > f_lo) {
            return Err(Error::Domain(format!(
                "band integration requires 0 < f_lo < f_hi, got [{f_lo}, {f_hi}]"
            )));
        }
        let n = points.max(2);
        let log_lo = f_lo.ln();
        let step = (f_hi.ln() - log_lo) / (n - 1) as f64;
        let mut total = 0.0;
        let mut prev_f = f_lo;
        let mut prev_s = self.density(prev_f)?;
        for i in 1..n {
            let f = (log_lo + i as f64 * step).exp();
            let s = self.density(f)?;
            total += 0.5 * (s + prev_s) * (f - prev_f);
            prev_f = f;
            prev_s = s;
        }
        Ok(total)
    }
}

/// Exponential-decay spatial coherence, `gamma(f, d) = exp(-a d f / u)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceModel {
    /// Dimensionless decay constant `a`; 0 means full correlation everywhere.
    pub decay_constant: f64,
    /// Mean advection speed in m/s.
    pub mean_speed: f64,
}

impl CoherenceModel {
    pub fn new(decay_constant: f64, mean_speed: f64) -> Result<Self> {
        if !(decay_constant >= 0.0) || !decay_constant.is_finite() {
            return Err(Error::Config(format!(
                "coherence.decay_constant must be >= 0, got {decay_constant}"
            )));
        }
        if !(mean_speed > 0.0) || !mean_speed.is_finite() {
            return Err(Error::Config(format!(
                "coherence.mean_speed must be > 0, got {mean_speed}"
            )));
        }
        Ok(Self { decay_constant, mean_speed })
    }

    /// Root coherence between two points `d` meters apart at frequency `f`.
    ///
    /// Exactly 1 at `f = 0` or `d = 0`, monotone non-increasing in both.
    pub fn coherence(&self, f: f64, d: f64) -> Result<f64> {
        if f < 0.0 || d < 0.0 {
            return Err(Error::Domain(format!(
                "coherence requires f >= 0 and d >= 0, got f = {f}, d = {d}"
            )));
        }
        Ok((-self.decay_constant * d * f / self.mean_speed).exp())
    }
}

/// Welch PSD estimate over the positive-frequency bins (DC excluded).
#[derive(Debug, Clone)]
pub struct PsdEstimate {
    /// Bin center frequencies in Hz, strictly increasing, first bin > 0.
    pub frequencies: Vec<f64>,
    /// One-sided densities, units^2/Hz.
    pub densities: Vec<f64>,
    pub segment_length: usize,
    pub overlap_fraction: f64,
}

impl PsdEstimate {
    /// Bin spacing in Hz.
    pub fn delta_f(&self) -> f64 {
        self.frequencies[0]
    }

    /// Total power recovered by the estimate: sum of density * delta_f.
    /// Matches the detrended sample variance within a few percent for
    /// stationary inputs.
    pub fn total_power(&self) -> f64 {
        self.densities.iter().sum::<f64>() * self.delta_f()
    }

    /// Index of the bin whose center is nearest to `f`.
    pub fn bin_containing(&self, f: f64) -> usize {
        let raw = f / self.delta_f() - 1.0;
        raw.round().max(0.0).min((self.frequencies.len() - 1) as f64) as usize
    }
}

/// One bin of a coherence estimate.
#[derive(Debug, Clone, Copy)]
pub struct CoherenceBin {
    pub frequency: f64,
    /// Estimated root coherence in [0, 1].
    pub coherence: f64,
}

fn hann_window(n: usize) -> Vec<f64> {
    // Periodic form; its exact shape only enters through the power
    // normalization below.
    (0..n).map(|i| 0.5 * (1.0 - (2.0 * PI * i as f64 / n as f64).cos())).collect()
}

/// Welch averaged periodogram with a Hann window and per-segment mean
/// removal. Frequencies run from `1/(N dt)` up to Nyquist; the DC bin is
/// excluded (the mean lives in `SpectralModel::mean_speed`, not here).
pub fn estimate_psd(
    series: &TimeSeries,
    segment_length: usize,
    overlap_fraction: f64,
) -> Result<PsdEstimate> {
    if !segment_length.is_power_of_two() || segment_length < 8 {
        return Err(Error::Input(format!(
            "segment_length must be a power of two >= 8, got {segment_length}"
        )));
    }
    if !(0.0..1.0).contains(&overlap_fraction) {
        return Err(Error::Input(format!(
            "overlap_fraction must lie in [0, 1), got {overlap_fraction}"
        )));
    }
    if series.len() < 2 * segment_length {
        return Err(Error::Input(format!(
            "series of {} samples is too short for segment_length {segment_length} \
             (need at least twice the segment)",
            series.len()
        )));
    }

    let n = segment_length;
    let step = ((n as f64 * (1.0 - overlap_fraction)).round() as usize).max(1);
    let window = hann_window(n);
    let window_power: f64 = window.iter().map(|w| w * w).sum();

    let fft = FftPlanner::new().plan_fft_forward(n);
    let mut accum = vec![0.0; n / 2 + 1];
    let mut segments = 0usize;
    let mut start = 0usize;
    let mut buf = vec![Complex64::default(); n];
    while start + n <= series.len() {
        let seg = &series.values[start..start + n];
        let mean = seg.iter().sum::<f64>() / n as f64;
        for (b, (x, w)) in buf.iter_mut().zip(seg.iter().zip(&window)) {
            *b = Complex64::new((x - mean) * w, 0.0);
        }
        fft.process(&mut buf);
        for (j, a) in accum.iter_mut().enumerate() {
            *a += buf[j].norm_sqr();
        }
        segments += 1;
        start += step;
    }

    let dt = series.dt;
    let scale = dt / (window_power * segments as f64);
    let half = n / 2;
    let mut frequencies = Vec::with_capacity(half);
    let mut densities = Vec::with_capacity(half);
    for j in 1..=half {
        frequencies.push(j as f64 / (n as f64 * dt));
        // One-sided: double everything except the Nyquist bin.
        let one_sided = if j < half { 2.0 } else { 1.0 };
        densities.push(one_sided * accum[j] * scale);
    }

    Ok(PsdEstimate { frequencies, densities, segment_length, overlap_fraction })
}

/// Magnitude-squared coherence over non-overlapping Hann segments,
/// bias-corrected and returned as root coherence.
///
/// The raw msc of K independent segments has chance level 1/K; the
/// correction `(K*msc - 1)/(K - 1)` removes it so that independent inputs
/// read near zero while identical inputs still read exactly 1. The square
/// root puts the estimate on the same scale as
/// [`CoherenceModel::coherence`].
pub fn estimate_coherence(
    a: &TimeSeries,
    b: &TimeSeries,
    segment_length: usize,
) -> Result<Vec<CoherenceBin>> {
    if a.dt != b.dt {
        return Err(Error::Input(format!(
            "coherence inputs must share dt, got {} and {}",
            a.dt, b.dt
        )));
    }
    if a.len() != b.len() {
        return Err(Error::Input(format!(
            "coherence inputs must share length, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    if segment_length < 8 {
        return Err(Error::Input(format!(
            "segment_length must be at least 8, got {segment_length}"
        )));
    }
    let n = segment_length;
    let segments = a.len() / n;
    if segments < 8 {
        return Err(Error::Input(format!(
            "coherence needs at least 8 segments, got {segments} \
             ({} samples / {n} per segment)",
            a.len()
        )));
    }

    let window = hann_window(n);
    let fft = FftPlanner::new().plan_fft_forward(n);
    let half = n / 2;
    let mut pxx = vec![0.0; half + 1];
    let mut pyy = vec![0.0; half + 1];
    let mut pxy = vec![Complex64::default(); half + 1];
    let mut buf_a = vec![Complex64::default(); n];
    let mut buf_b = vec![Complex64::default(); n];

    for k in 0..segments {
        let seg_a = &a.values[k * n..(k + 1) * n];
        let seg_b = &b.values[k * n..(k + 1) * n];
        let mean_a = seg_a.iter().sum::<f64>() / n as f64;
        let mean_b = seg_b.iter().sum::<f64>() / n as f64;
        for i in 0..n {
            buf_a[i] = Complex64::new((seg_a[i] - mean_a) * window[i], 0.0);
            buf_b[i] = Complex64::new((seg_b[i] - mean_b) * window[i], 0.0);
        }
        fft.process(&mut buf_a);
        fft.process(&mut buf_b);
        for j in 0..=half {
            pxx[j] += buf_a[j].norm_sqr();
            pyy[j] += buf_b[j].norm_sqr();
            pxy[j] += buf_a[j] * buf_b[j].conj();
        }
    }

    let k = segments as f64;
    let mut bins = Vec::with_capacity(half);
    for j in 1..=half {
        let denom = pxx[j] * pyy[j];
        let msc = if denom > 0.0 { (pxy[j].norm_sqr() / denom).min(1.0) } else { 0.0 };
        let corrected = ((k * msc - 1.0) / (k - 1.0)).clamp(0.0, 1.0);
        bins.push(CoherenceBin {
            frequency: j as f64 / (n as f64 * a.dt),
            coherence: corrected.sqrt(),
        });
    }
    Ok(bins)
}
