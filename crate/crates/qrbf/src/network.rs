//! RBF network data model and forward computation.
//!
//! A network holds `n` centers in an `m`-dimensional input space, one scalar
//! output weight per center, a bias, and a kernel choice. The forward map is
//!
//! ```text
//! y = Σ_i w_i · φ_i(x) + b
//! ```
//!
//! where `φ_i(x)` is the kernel response of neuron `i` to input `x`.

use crate::error::{Error, Result};

/// Hidden-layer kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kernel {
    /// `exp(-‖x - c‖² / σ²)`, bounded in (0, 1].
    Gaussian { spread: f64 },
    /// `(x·c) / (‖x‖‖c‖ + γ)`, bounded in [-1, 1]. The stabilizer `γ > 0`
    /// keeps the denominator away from zero, so zero vectors are legal inputs.
    Cosine { stabilizer: f64 },
}

/// Default cosine stabilizer when none is given.
pub const DEFAULT_COSINE_STABILIZER: f64 = 1e-8;

impl Kernel {
    fn validate(&self) -> Result<()> {
        match *self {
            Kernel::Gaussian { spread } => {
                if !(spread > 0.0) || !spread.is_finite() {
                    return Err(Error::param("spread", format!("must be > 0, got {spread}")));
                }
            }
            Kernel::Cosine { stabilizer } => {
                if !(stabilizer > 0.0) || !stabilizer.is_finite() {
                    return Err(Error::param(
                        "stabilizer",
                        format!("must be > 0, got {stabilizer}"),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Kernel response for input `x` against center `c`.
    pub fn response(&self, x: &[f64], c: &[f64]) -> Result<f64> {
        match *self {
            Kernel::Gaussian { spread } => gaussian_kernel(x, c, spread),
            Kernel::Cosine { stabilizer } => cosine_kernel(x, c, stabilizer),
        }
    }
}

/// Gaussian kernel `exp(-‖x - c‖² / σ²)`.
///
/// Equals 1 exactly when `x == c` and decreases strictly with distance.
pub fn gaussian_kernel(x: &[f64], c: &[f64], spread: f64) -> Result<f64> {
    if x.len() != c.len() {
        return Err(Error::DimensionMismatch {
            expected: c.len(),
            got: x.len(),
        });
    }
    if !(spread > 0.0) {
        return Err(Error::param("spread", format!("must be > 0, got {spread}")));
    }
    let dist_sq: f64 = x.iter().zip(c).map(|(a, b)| (a - b) * (a - b)).sum();
    Ok((-dist_sq / (spread * spread)).exp())
}

/// Cosine kernel `(x·c) / (‖x‖‖c‖ + γ)`.
///
/// Finite for every input including zero vectors; those simply produce 0.
pub fn cosine_kernel(x: &[f64], c: &[f64], stabilizer: f64) -> Result<f64> {
    if x.len() != c.len() {
        return Err(Error::DimensionMismatch {
            expected: c.len(),
            got: x.len(),
        });
    }
    if !(stabilizer > 0.0) {
        return Err(Error::param(
            "stabilizer",
            format!("must be > 0, got {stabilizer}"),
        ));
    }
    let dot: f64 = x.iter().zip(c).map(|(a, b)| a * b).sum();
    let nx = x.iter().map(|a| a * a).sum::<f64>().sqrt();
    let nc = c.iter().map(|a| a * a).sum::<f64>().sqrt();
    Ok(dot / (nx * nc + stabilizer))
}

/// Single-output RBF network: centers, output weights, bias, kernel.
///
/// Centers are stored as given; center selection (e.g. k-means) is up to the
/// caller. Weights and bias start at zero unless set explicitly.
#[derive(Debug, Clone, PartialEq)]
pub struct RbfNetwork {
    centers: Vec<Vec<f64>>,
    weights: Vec<f64>,
    bias: f64,
    kernel: Kernel,
    input_dim: usize,
}

impl RbfNetwork {
    /// Build a network from centers and a kernel, with zero weights and bias.
    pub fn new(centers: Vec<Vec<f64>>, kernel: Kernel) -> Result<Self> {
        kernel.validate()?;
        if centers.is_empty() {
            return Err(Error::EmptyInput("centers"));
        }
        let input_dim = centers[0].len();
        if input_dim == 0 {
            return Err(Error::param("centers", "input dimension must be >= 1"));
        }
        for c in &centers {
            if c.len() != input_dim {
                return Err(Error::DimensionMismatch {
                    expected: input_dim,
                    got: c.len(),
                });
            }
            if c.iter().any(|v| !v.is_finite()) {
                return Err(Error::param("centers", "all center values must be finite"));
            }
        }
        let n = centers.len();
        Ok(RbfNetwork {
            centers,
            weights: vec![0.0; n],
            bias: 0.0,
            kernel,
            input_dim,
        })
    }

    /// Replace the output weights. The length must match the neuron count.
    pub fn set_weights(&mut self, weights: &[f64]) -> Result<()> {
        if weights.len() != self.weights.len() {
            return Err(Error::DimensionMismatch {
                expected: self.weights.len(),
                got: weights.len(),
            });
        }
        if weights.iter().any(|w| !w.is_finite()) {
            return Err(Error::param("weights", "all weights must be finite"));
        }
        self.weights.copy_from_slice(weights);
        Ok(())
    }

    pub fn set_bias(&mut self, bias: f64) -> Result<()> {
        if !bias.is_finite() {
            return Err(Error::param("bias", "must be finite"));
        }
        self.bias = bias;
        Ok(())
    }

    /// Number of hidden neurons.
    pub fn neurons(&self) -> usize {
        self.centers.len()
    }

    /// Input dimension.
    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    pub fn centers(&self) -> &[Vec<f64>] {
        &self.centers
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn bias(&self) -> f64 {
        self.bias
    }

    pub fn kernel(&self) -> Kernel {
        self.kernel
    }

    pub(crate) fn weights_mut(&mut self) -> &mut [f64] {
        &mut self.weights
    }

    pub(crate) fn bias_mut(&mut self) -> &mut f64 {
        &mut self.bias
    }

    /// Hidden-layer activation vector `φ(x)`, one entry per neuron.
    pub fn activations(&self, x: &[f64]) -> Result<Vec<f64>> {
        let mut phi = vec![0.0; self.neurons()];
        self.activations_into(x, &mut phi)?;
        Ok(phi)
    }

    /// Like [`activations`](Self::activations) but writes into a caller
    /// buffer so the training loop avoids per-sample allocation.
    pub fn activations_into(&self, x: &[f64], phi: &mut [f64]) -> Result<()> {
        if x.len() != self.input_dim {
            return Err(Error::DimensionMismatch {
                expected: self.input_dim,
                got: x.len(),
            });
        }
        debug_assert_eq!(phi.len(), self.neurons());
        for (out, c) in phi.iter_mut().zip(&self.centers) {
            *out = self.kernel.response(x, c)?;
        }
        Ok(())
    }

    /// Network output `y = Σ w_i φ_i + b`.
    pub fn output(&self, x: &[f64]) -> Result<f64> {
        let phi = self.activations(x)?;
        Ok(self.output_from_activations(&phi))
    }

    /// Output given precomputed activations.
    pub fn output_from_activations(&self, phi: &[f64]) -> f64 {
        self.weights.iter().zip(phi).map(|(w, p)| w * p).sum::<f64>() + self.bias
    }
}
