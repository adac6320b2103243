//! Normalized distance Laplacian spectra of connected graphs.
//!
//! For a connected graph with distance matrix `D` and diagonal transmission
//! matrix `T`, the normalized distance Laplacian is
//! `I - T^{-1/2} D T^{-1/2}`. This crate computes its spectrum with an
//! in-house Jacobi solver, evaluates the sum-of-squares Rayleigh quotient and
//! its relaxations, and runs the searches used to probe which graphs make the
//! spectral radius small or large.
//!
//! ```
//! use ndl_core::{graph::Graph, spectral::ndl_spectrum};
//!
//! let (spectrum, _) = ndl_spectrum(&Graph::complete(4).unwrap()).unwrap();
//! assert!((spectrum.max() - 4.0 / 3.0).abs() < 1e-12);
//! ```

pub mod distance;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod rayleigh;
pub mod search;
pub mod spectral;

pub use distance::{all_pairs_distances, DistanceData};
pub use error::{Error, Result};
pub use graph::{BarbellParams, Graph};
pub use spectral::{Spectrum, SymmetricMatrix};
