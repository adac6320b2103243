//! The normalized distance Laplacian `I - T^{-1/2} D T^{-1/2}` and its
//! spectrum.

mod jacobi;
mod matrix;

pub use jacobi::{eigen_decompose, eigenvalues, Spectrum, MAX_SWEEPS, OFF_DIAGONAL_RTOL};
pub use matrix::SymmetricMatrix;

use serde::{Deserialize, Serialize};

use crate::distance::{all_pairs_distances, DistanceData};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest admissible `|∂_1|` in [`ndl_spectrum`].
pub const KERNEL_EIGENVALUE_TOL: f64 = 1e-9;

/// Builds the normalized distance Laplacian: ones on the diagonal and
/// `-d(i,j) / sqrt(t(i) t(j))` elsewhere.
pub fn build_ndl(dd: &DistanceData) -> Result<SymmetricMatrix> {
    if let Some(i) = dd.transmissions().iter().position(|&t| t == 0) {
        return Err(Error::ZeroTransmission(i));
    }
    let inv_sqrt: Vec<f64> = dd
        .transmissions()
        .iter()
        .map(|&t| 1.0 / (t as f64).sqrt())
        .collect();
    Ok(SymmetricMatrix::from_fn(dd.n(), |i, j| {
        if i == j {
            1.0
        } else {
            -(dd.dist(i, j) as f64) * inv_sqrt[i] * inv_sqrt[j]
        }
    }))
}

/// `T^{1/2} 𝟙`, the kernel direction of the normalized distance Laplacian.
pub fn kernel_vector(dd: &DistanceData) -> Vec<f64> {
    dd.transmissions()
        .iter()
        .map(|&t| (t as f64).sqrt())
        .collect()
}

/// `‖A T^{1/2}𝟙‖ / ‖T^{1/2}𝟙‖`.
pub fn kernel_residual(a: &SymmetricMatrix, dd: &DistanceData) -> f64 {
    let u = kernel_vector(dd);
    let norm = u.iter().map(|x| x * x).sum::<f64>().sqrt();
    let au = a.mul_vec(&u);
    au.iter().map(|x| x * x).sum::<f64>().sqrt() / norm
}

/// Distances, matrix and full spectrum of a connected graph.
///
/// Fails with [`Error::KernelCheck`] if the smallest eigenvalue is not zero
/// within [`KERNEL_EIGENVALUE_TOL`] or its eigenvector is not aligned with
/// `T^{1/2}𝟙`.
pub fn ndl_spectrum(g: &Graph) -> Result<(Spectrum, DistanceData)> {
    let dd = all_pairs_distances(g)?;
    let a = build_ndl(&dd)?;
    let spectrum = eigen_decompose(&a)?;

    let u = kernel_vector(&dd);
    let norm = u.iter().map(|x| x * x).sum::<f64>().sqrt();
    let alignment = spectrum
        .eigenvector(0)
        .iter()
        .zip(&u)
        .map(|(x, y)| x * y / norm)
        .sum::<f64>()
        .abs();
    let eigenvalue = spectrum.eigenvalues()[0];
    if eigenvalue.abs() > KERNEL_EIGENVALUE_TOL || (1.0 - alignment) > KERNEL_EIGENVALUE_TOL {
        return Err(Error::KernelCheck {
            eigenvalue,
            alignment,
        });
    }
    Ok((spectrum, dd))
}

/// Eigenvalues only; the fast path used by exhaustive enumeration.
pub fn ndl_eigenvalues(dd: &DistanceData) -> Result<Vec<f64>> {
    eigenvalues(&build_ndl(dd)?)
}

/// `y = T^{-1/2} x` for an eigenvector `x`; an eigenvector of `I - T^{-1}D`
/// with the same eigenvalue.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HarmonicVector {
    pub y: Vec<f64>,
    pub eigenvalue: f64,
}

impl HarmonicVector {
    /// `Σ y_i t(v_i)`, which vanishes for every nonzero eigenvalue.
    pub fn transmission_weighted_sum(&self, dd: &DistanceData) -> f64 {
        self.y
            .iter()
            .zip(dd.transmissions())
            .map(|(y, &t)| y * t as f64)
            .sum()
    }
}

pub fn harmonic(spec: &Spectrum, dd: &DistanceData, index: usize) -> Result<HarmonicVector> {
    if index >= spec.n() {
        return Err(Error::IndexOutOfRange {
            index,
            len: spec.n(),
        });
    }
    if dd.n() != spec.n() {
        return Err(Error::LengthMismatch {
            expected: spec.n(),
            got: dd.n(),
        });
    }
    let y = spec
        .eigenvector(index)
        .iter()
        .zip(dd.transmissions())
        .map(|(x, &t)| x / (t as f64).sqrt())
        .collect();
    Ok(HarmonicVector {
        y,
        eigenvalue: spec.eigenvalues()[index],
    })
}
