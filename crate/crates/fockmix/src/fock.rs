//! Truncated two-mode photon-number states.
//!
//! States are dense complex amplitude grids over the basis `|n⟩|m⟩` with a
//! per-mode cutoff. Truncation never renormalizes: the probability mass lost
//! to the cutoff is carried in [`TwoModeState::norm_deficit`] so downstream
//! consumers can bound their own error.

use ndarray::Array2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Poisson tail mass below which a coherent-state cutoff is considered exact.
pub const COHERENT_TAIL_BOUND: f64 = 1e-12;

/// One of the two optical modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    First,
    Second,
}

/// Photon-number basis label `|n_first⟩|n_second⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasisIndex {
    pub n_first: usize,
    pub n_second: usize,
}

impl BasisIndex {
    pub fn new(n_first: usize, n_second: usize) -> Self {
        Self { n_first, n_second }
    }

    /// Total photon number of the basis state.
    pub fn total(&self) -> usize {
        self.n_first + self.n_second
    }
}

/// Single-mode amplitude vector over `|0⟩..|cutoff⟩` plus the probability
/// mass lost to the cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeCoefficients {
    pub coeffs: Vec<Complex64>,
    pub norm_deficit: f64,
}

impl ModeCoefficients {
    /// Number state `|n⟩` on a grid of size `cutoff + 1`.
    pub fn fock(n: usize, cutoff: usize) -> Result<Self> {
        if n > cutoff {
            return Err(Error::CutoffExceeded {
                mode: "requested",
                count: n,
                cutoff,
            });
        }
        let mut coeffs = vec![Complex64::ZERO; cutoff + 1];
        coeffs[n] = Complex64::ONE;
        Ok(Self {
            coeffs,
            norm_deficit: 0.0,
        })
    }

    /// Coherent state `|α⟩` truncated at `cutoff`.
    ///
    /// Coefficient `n` is `e^{-|α|²/2} α^n/√(n!)`, built by the multiplicative
    /// recurrence `coef(n+1) = coef(n)·α/√(n+1)` so no factorial is ever
    /// formed. The amplitudes are *not* renormalized; the Poisson tail beyond
    /// the cutoff is reported as `norm_deficit`.
    pub fn coherent(alpha: Complex64, cutoff: usize) -> Self {
        assert!(
            alpha.re.is_finite() && alpha.im.is_finite(),
            "coherent amplitude must be finite"
        );
        let mut coeffs = Vec::with_capacity(cutoff + 1);
        let mut c = Complex64::new((-alpha.norm_sqr() / 2.0).exp(), 0.0);
        coeffs.push(c);
        for n in 0..cutoff {
            c *= alpha / ((n + 1) as f64).sqrt();
            coeffs.push(c);
        }
        let kept: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
        Self {
            coeffs,
            norm_deficit: (1.0 - kept).max(0.0),
        }
    }

    /// Coherent state truncated by the default rule: the smallest cutoff
    /// whose Poisson tail mass is below [`COHERENT_TAIL_BOUND`].
    pub fn coherent_auto(alpha: Complex64) -> Self {
        Self::coherent(alpha, coherent_cutoff(alpha))
    }

    pub fn cutoff(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }
}

/// Coefficients of the truncated coherent state `|α⟩` together with the
/// truncation deficit `1 − Σ|coef|²`.
pub fn coherent_amplitudes(alpha: Complex64, cutoff: usize) -> ModeCoefficients {
    ModeCoefficients::coherent(alpha, cutoff)
}

/// Smallest cutoff whose Poisson(|α|²) tail mass is below
/// [`COHERENT_TAIL_BOUND`], found by direct summation of the pmf.
pub fn coherent_cutoff(alpha: Complex64) -> usize {
    let lambda = alpha.norm_sqr();
    if lambda == 0.0 {
        return 0;
    }
    if lambda > 400.0 {
        // Direct summation starts from e^{-λ}, which underflows long before
        // this point matters; a 12-sigma normal bound keeps the tail far
        // below the target without summing.
        return (lambda + 12.0 * lambda.sqrt() + 20.0).ceil() as usize;
    }
    let mut pmf = (-lambda).exp();
    let mut cumulative = pmf;
    let mut n = 0usize;
    while 1.0 - cumulative >= COHERENT_TAIL_BOUND {
        n += 1;
        pmf *= lambda / n as f64;
        cumulative += pmf;
    }
    n
}

/// Dense two-mode state over `|n_first⟩|n_second⟩`, `n_k ≤ cutoff_k`.
///
/// Immutable after construction. `norm_deficit` is the probability mass the
/// constructors (and any number-conserving evolution) discarded; the stored
/// amplitudes satisfy `Σ|amp|² + norm_deficit = 1` up to rounding.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeState {
    amps: Array2<Complex64>,
    norm_deficit: f64,
}

impl TwoModeState {
    /// Product number state `|n⟩|m⟩`.
    pub fn fock_pair(n: usize, m: usize, cutoff_first: usize, cutoff_second: usize) -> Result<Self> {
        if n > cutoff_first {
            return Err(Error::CutoffExceeded {
                mode: "first",
                count: n,
                cutoff: cutoff_first,
            });
        }
        if m > cutoff_second {
            return Err(Error::CutoffExceeded {
                mode: "second",
                count: m,
                cutoff: cutoff_second,
            });
        }
        let mut amps = Array2::zeros((cutoff_first + 1, cutoff_second + 1));
        amps[(n, m)] = Complex64::ONE;
        Ok(Self {
            amps,
            norm_deficit: 0.0,
        })
    }

    /// Tensor product of two single-mode amplitude vectors. The deficits
    /// combine as `1 − (1 − d₁)(1 − d₂)`.
    pub fn product(first: &ModeCoefficients, second: &ModeCoefficients) -> Self {
        assert!(!first.coeffs.is_empty() && !second.coeffs.is_empty());
        let amps = Array2::from_shape_fn(
            (first.coeffs.len(), second.coeffs.len()),
            |(n, m)| first.coeffs[n] * second.coeffs[m],
        );
        Self {
            amps,
            norm_deficit: 1.0 - (1.0 - first.norm_deficit) * (1.0 - second.norm_deficit),
        }
    }

    /// Wrap a raw amplitude grid. Internal: callers are responsible for the
    /// deficit bookkeeping.
    pub(crate) fn from_amplitudes(amps: Array2<Complex64>, norm_deficit: f64) -> Self {
        debug_assert!(amps.iter().all(|a| a.re.is_finite() && a.im.is_finite()));
        debug_assert!(norm_deficit >= 0.0);
        Self { amps, norm_deficit }
    }

    pub fn cutoff_first(&self) -> usize {
        self.amps.nrows() - 1
    }

    pub fn cutoff_second(&self) -> usize {
        self.amps.ncols() - 1
    }

    pub fn norm_deficit(&self) -> f64 {
        self.norm_deficit
    }

    /// Amplitude at `|n⟩|m⟩`. Panics outside the grid.
    pub fn amp(&self, n: usize, m: usize) -> Complex64 {
        self.amps[(n, m)]
    }

    pub fn amplitudes(&self) -> &Array2<Complex64> {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Iterate over all grid cells as `(index, amplitude)`.
    pub fn iter(&self) -> impl Iterator<Item = (BasisIndex, Complex64)> + '_ {
        self.amps
            .indexed_iter()
            .map(|((n, m), &a)| (BasisIndex::new(n, m), a))
    }

    /// `⟨self|other⟩` over a shared grid.
    pub fn inner_product(&self, other: &Self) -> Result<Complex64> {
        if self.amps.dim() != other.amps.dim() {
            return Err(Error::CutoffMismatch(
                self.cutoff_first(),
                self.cutoff_second(),
                other.cutoff_first(),
                other.cutoff_second(),
            ));
        }
        Ok(self
            .amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `|⟨self|other⟩|²`.
    pub fn fidelity(&self, other: &Self) -> Result<f64> {
        Ok(self.inner_product(other)?.norm_sqr())
    }
}
