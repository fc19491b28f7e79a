//! Sample sets, sinusoid models, signal synthesis and SNR bookkeeping.
//!
//! The observation model is y_j = sum_k s_k e^{i 2 pi (j-1) f_k} + e_j on a
//! 1-based index set Omega within [1, M]. The complete-data case has
//! Omega = [1..M]; the missing-data case keeps track of the sample size
//! L = |Omega| and the range span Mbar = Omega_L - Omega_1 + 1, which governs
//! the regularization parameter bound.

use crate::error::{Error, Result};
use crate::linalg::{C64, CMat, CVec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Observation index set Omega within [1, M].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSet {
    omega: Vec<usize>,
    m: usize,
}

impl SampleSet {
    /// The complete index set [1..M].
    pub fn complete(m: usize) -> Self {
        SampleSet {
            omega: (1..=m).collect(),
            m,
        }
    }

    /// An explicit index set; indices are sorted, must be distinct and lie in
    /// [1, M].
    pub fn from_indices(m: usize, mut omega: Vec<usize>) -> Result<Self> {
        omega.sort_unstable();
        if omega.is_empty() {
            return Err(Error::domain("sample set must be nonempty"));
        }
        if omega[0] < 1 || *omega.last().unwrap() > m {
            return Err(Error::domain(format!(
                "sample indices must lie in [1, {m}]"
            )));
        }
        if omega.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain("duplicate sample indices"));
        }
        Ok(SampleSet { omega, m })
    }

    /// L distinct indices drawn uniformly without replacement; deterministic
    /// for a fixed seed.
    pub fn random(m: usize, l: usize, seed: u64) -> Result<Self> {
        if l == 0 || l > m {
            return Err(Error::domain(format!("need 1 <= L <= M, got L={l}, M={m}")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut omega: Vec<usize> = rand::seq::index::sample(&mut rng, m, l)
            .into_iter()
            .map(|i| i + 1)
            .collect();
        omega.sort_unstable();
        Ok(SampleSet { omega, m })
    }

    /// Number of observed samples L.
    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }

    /// Total index count M.
    pub fn total(&self) -> usize {
        self.m
    }

    /// Range span Mbar = Omega_L - Omega_1 + 1.
    pub fn range_span(&self) -> usize {
        self.omega.last().unwrap() - self.omega[0] + 1
    }

    /// The sorted 1-based indices.
    pub fn indices(&self) -> &[usize] {
        &self.omega
    }

    pub fn is_complete(&self) -> bool {
        self.omega.len() == self.m
    }

    /// Complement set [M] \ Omega (1-based, sorted).
    pub fn complement(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.m - self.omega.len());
        let mut it = self.omega.iter().peekable();
        for j in 1..=self.m {
            if it.peek() == Some(&&j) {
                it.next();
            } else {
                out.push(j);
            }
        }
        out
    }
}

/// A superposition of K complex sinusoids with frequencies in [0, 1).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineSpectralModel {
    freqs: Vec<f64>,
    amps: Vec<C64>,
}

impl LineSpectralModel {
    pub fn new(freqs: Vec<f64>, amps: Vec<C64>) -> Result<Self> {
        if freqs.len() != amps.len() {
            return Err(Error::dim("freqs and amps must have equal length"));
        }
        if freqs.iter().any(|&f| !(0.0..1.0).contains(&f)) {
            return Err(Error::domain("frequencies must lie in [0, 1)"));
        }
        Ok(LineSpectralModel { freqs, amps })
    }

    /// Model specified by powers p_k = |s_k|^2; phases are drawn uniformly on
    /// [0, 2 pi), matching the covariance-fitting assumption on amplitudes.
    pub fn from_powers<R: Rng>(freqs: Vec<f64>, powers: Vec<f64>, rng: &mut R) -> Result<Self> {
        if powers.iter().any(|&p| p < 0.0) {
            return Err(Error::domain("powers must be nonnegative"));
        }
        let amps = powers
            .iter()
            .map(|&p| C64::from_polar(p.sqrt(), rng.gen::<f64>() * TAU))
            .collect();
        Self::new(freqs, amps)
    }

    pub fn empty() -> Self {
        LineSpectralModel {
            freqs: Vec::new(),
            amps: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.freqs.len()
    }

    pub fn freqs(&self) -> &[f64] {
        &self.freqs
    }

    pub fn amps(&self) -> &[C64] {
        &self.amps
    }

    /// Powers p_k = |s_k|^2.
    pub fn powers(&self) -> Vec<f64> {
        self.amps.iter().map(|s| s.norm_sqr()).collect()
    }

    /// Sum of amplitude moduli, the quantity entering the denoising MSE bound.
    pub fn amplitude_l1(&self) -> f64 {
        self.amps.iter().map(|s| s.norm()).sum()
    }

    /// Noiseless samples on the given index set.
    pub fn evaluate(&self, sample_set: &SampleSet) -> CVec {
        let mut z = CVec::zeros(sample_set.len());
        for (f, s) in self.freqs.iter().zip(self.amps.iter()) {
            for (j, &idx) in sample_set.indices().iter().enumerate() {
                z[j] += s * C64::from_polar(1.0, TAU * (idx - 1) as f64 * f);
            }
        }
        z
    }
}

/// Noise model for synthesis: E |e_j|^2 = sigma (real and imaginary parts
/// each carry sigma/2).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum NoiseKind {
    None,
    Homoscedastic(f64),
    /// Per-sample variances over Omega (length L).
    Heteroscedastic(Vec<f64>),
}

impl NoiseKind {
    fn validate(&self, l: usize) -> Result<()> {
        match self {
            NoiseKind::None => Ok(()),
            NoiseKind::Homoscedastic(s) => {
                if *s < 0.0 {
                    Err(Error::domain("noise variance must be nonnegative"))
                } else {
                    Ok(())
                }
            }
            NoiseKind::Heteroscedastic(v) => {
                if v.len() != l {
                    Err(Error::dim(format!(
                        "heteroscedastic sigma has length {}, expected L={l}",
                        v.len()
                    )))
                } else if v.iter().any(|&s| s < 0.0) {
                    Err(Error::domain("noise variances must be nonnegative"))
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// Observed complex samples indexed by Omega, with optional ground truth.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Observation {
    pub y: CVec,
    pub sample_set: SampleSet,
    pub truth: Option<LineSpectralModel>,
    pub sigma_truth: Option<NoiseKind>,
}

impl Observation {
    pub fn new(y: CVec, sample_set: SampleSet) -> Result<Self> {
        if y.len() != sample_set.len() {
            return Err(Error::dim(format!(
                "observation has {} samples, sample set has L={}",
                y.len(),
                sample_set.len()
            )));
        }
        Ok(Observation {
            y,
            sample_set,
            truth: None,
            sigma_truth: None,
        })
    }

    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y.is_empty()
    }

    pub fn y_norm(&self) -> f64 {
        self.y.norm()
    }

    /// Noiseless samples of the ground-truth model on Omega, when known.
    pub fn clean_truth(&self) -> Option<CVec> {
        self.truth.as_ref().map(|m| m.evaluate(&self.sample_set))
    }
}

/// Steering vector a_Omega(f): entry j equals exp(i 2 pi (Omega_j - 1) f).
pub fn steering_vector(f: f64, sample_set: &SampleSet) -> Result<CVec> {
    if !(0.0..1.0).contains(&f) {
        return Err(Error::domain(format!("frequency {f} outside [0, 1)")));
    }
    Ok(CVec::from_fn(sample_set.len(), |j, _| {
        C64::from_polar(1.0, TAU * (sample_set.indices()[j] - 1) as f64 * f)
    }))
}

/// Steering matrix A_Omega(f) with one column per frequency.
pub fn steering_matrix(freqs: &[f64], sample_set: &SampleSet) -> Result<CMat> {
    let mut a = CMat::zeros(sample_set.len(), freqs.len());
    for (k, &f) in freqs.iter().enumerate() {
        let col = steering_vector(f, sample_set)?;
        a.set_column(k, &col);
    }
    Ok(a)
}

/// Synthesize y_Omega = A_Omega(f) s + e with circular complex Gaussian noise;
/// deterministic for a fixed seed.
pub fn generate_signal(
    model: &LineSpectralModel,
    noise: &NoiseKind,
    sample_set: &SampleSet,
    seed: u64,
) -> Result<Observation> {
    noise.validate(sample_set.len())?;
    let mut y = model.evaluate(sample_set);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match noise {
        NoiseKind::None => {}
        NoiseKind::Homoscedastic(sigma) => {
            let sd = (sigma / 2.0).sqrt();
            for j in 0..y.len() {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                y[j] += C64::new(sd * re, sd * im);
            }
        }
        NoiseKind::Heteroscedastic(sigmas) => {
            for j in 0..y.len() {
                let sd = (sigmas[j] / 2.0).sqrt();
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                y[j] += C64::new(sd * re, sd * im);
            }
        }
    }
    Ok(Observation {
        y,
        sample_set: sample_set.clone(),
        truth: Some(model.clone()),
        sigma_truth: Some(noise.clone()),
    })
}

/// Map SNR in dB to the noise variance: sigma = 10^(-snr/10).
///
/// The convention fixes the smallest-component power at 1, so SNR = -10
/// log10(sigma).
pub fn snr_to_sigma(snr_db: f64) -> f64 {
    10f64.powf(-snr_db / 10.0)
}

/// Sampling pattern specification for [`make_sample_set`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum SamplingSpec {
    Complete,
    Explicit(Vec<usize>),
    Random { l: usize, seed: u64 },
}

/// Build a [`SampleSet`] from a specification.
pub fn make_sample_set(m: usize, spec: &SamplingSpec) -> Result<SampleSet> {
    match spec {
        SamplingSpec::Complete => Ok(SampleSet::complete(m)),
        SamplingSpec::Explicit(idx) => SampleSet::from_indices(m, idx.clone()),
        SamplingSpec::Random { l, seed } => SampleSet::random(m, *l, *seed),
    }
}

/// Circular distance on the frequency torus [0, 1).
pub fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(1.0);
    d.min(1.0 - d)
}
