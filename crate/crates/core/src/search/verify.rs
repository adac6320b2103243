//! Exhaustive checks of the spectral bounds over labeled connected graphs.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::audit::diameter_bound;
use crate::distance::all_pairs_distances;
use crate::enumerate::{mask_count, LabeledConnected, MIN_ENUM_N};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::spectral::{build_ndl, eigenvalues, kernel_residual};

pub const DEFAULT_TOL: f64 = 1e-9;
/// `|Σ ∂_i − n|` allowed by the trace check.
pub const TRACE_TOL: f64 = 1e-8;
/// Kernel residual allowed, relative to `‖T^{1/2}𝟙‖`.
pub const KERNEL_RTOL: f64 = 1e-10;
const CHUNKS: u64 = 256;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnumerationSummary {
    pub n: usize,
    pub graphs_checked: u64,
    pub max_spectral_radius: f64,
    pub argmax_graph6: String,
    pub min_second_eigenvalue: f64,
    pub argmin_graph6: String,
    /// Smallest `2 - (n-2)/(n diam) - ∂_n` seen.
    pub min_diameter_bound_margin: f64,
    /// Largest `‖D^L T^{1/2}𝟙‖ / ‖T^{1/2}𝟙‖` seen.
    pub max_kernel_residual: f64,
    /// Largest `|Σ ∂_i − n|` seen.
    pub max_trace_error: f64,
    /// Non-complete graphs whose spectral radius is within `tol` of `n/(n-1)`.
    pub uniqueness_violations: Vec<String>,
    /// Graphs breaking `∂_2 <= n/(n-1) <= ∂_n` or `∂_n <= 2 - (n-2)/(n diam)`.
    pub bound_violations: Vec<String>,
    /// Graphs failing the kernel, trace or nonnegativity sanity checks.
    pub numerical_violations: Vec<String>,
}

impl EnumerationSummary {
    pub fn is_clean(&self) -> bool {
        self.uniqueness_violations.is_empty()
            && self.bound_violations.is_empty()
            && self.numerical_violations.is_empty()
    }
}

/// Partial result over a slice of the input; merged in input order.
#[derive(Debug, Clone)]
struct Partial {
    checked: u64,
    // (value, order key, graph6)
    max: Option<(f64, u64, String)>,
    min: Option<(f64, u64, String)>,
    min_margin: f64,
    max_kernel: f64,
    max_trace: f64,
    uniqueness: Vec<String>,
    bounds: Vec<String>,
    numerical: Vec<String>,
}

impl Partial {
    fn new() -> Self {
        Self {
            checked: 0,
            max: None,
            min: None,
            min_margin: f64::INFINITY,
            max_kernel: 0.0,
            max_trace: 0.0,
            uniqueness: Vec::new(),
            bounds: Vec::new(),
            numerical: Vec::new(),
        }
    }

    fn observe(&mut self, key: u64, g: &Graph, tol: f64) -> Result<()> {
        let n = g.n();
        let dd = all_pairs_distances(g)?;
        let a = build_ndl(&dd)?;
        let eig = eigenvalues(&a)?;
        let target = n as f64 / (n as f64 - 1.0);
        let top = eig[n - 1];
        let second = eig[1];
        let token = || encode_graph6(g).unwrap_or_else(|_| format!("#{key}"));

        self.checked += 1;
        if self.max.as_ref().is_none_or(|m| top > m.0) {
            self.max = Some((top, key, token()));
        }
        if self.min.as_ref().is_none_or(|m| second < m.0) {
            self.min = Some((second, key, token()));
        }
        if (top - target).abs() <= tol && !dd.is_complete() {
            self.uniqueness.push(token());
        }
        let bound = diameter_bound(n, dd.diameter());
        if second > target + tol || top < target - tol || top > bound + tol {
            self.bounds.push(token());
        }
        self.min_margin = self.min_margin.min(bound - top);
        let trace_err = (eig.iter().sum::<f64>() - n as f64).abs();
        let kernel = kernel_residual(&a, &dd);
        self.max_trace = self.max_trace.max(trace_err);
        self.max_kernel = self.max_kernel.max(kernel);
        if trace_err > TRACE_TOL || eig[0] < -tol || kernel > KERNEL_RTOL {
            self.numerical.push(token());
        }
        Ok(())
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.checked += other.checked;
        // Earlier key wins ties, so the result does not depend on chunking.
        if let Some(o) = other.max {
            if self
                .max
                .as_ref()
                .is_none_or(|m| o.0 > m.0 || (o.0 == m.0 && o.1 < m.1))
            {
                self.max = Some(o);
            }
        }
        if let Some(o) = other.min {
            if self
                .min
                .as_ref()
                .is_none_or(|m| o.0 < m.0 || (o.0 == m.0 && o.1 < m.1))
            {
                self.min = Some(o);
            }
        }
        self.min_margin = self.min_margin.min(other.min_margin);
        self.max_kernel = self.max_kernel.max(other.max_kernel);
        self.max_trace = self.max_trace.max(other.max_trace);
        self.uniqueness.extend(other.uniqueness);
        self.bounds.extend(other.bounds);
        self.numerical.extend(other.numerical);
        self
    }

    fn finish(self, n: usize) -> EnumerationSummary {
        let (max_v, _, max_g) = self.max.unwrap_or((f64::NAN, 0, String::new()));
        let (min_v, _, min_g) = self.min.unwrap_or((f64::NAN, 0, String::new()));
        EnumerationSummary {
            n,
            graphs_checked: self.checked,
            max_spectral_radius: max_v,
            argmax_graph6: max_g,
            min_second_eigenvalue: min_v,
            argmin_graph6: min_g,
            min_diameter_bound_margin: self.min_margin,
            max_kernel_residual: self.max_kernel,
            max_trace_error: self.max_trace,
            uniqueness_violations: self.uniqueness,
            bound_violations: self.bounds,
            numerical_violations: self.numerical,
        }
    }
}

/// Checks every labeled connected graph on `n` vertices (`2 <= n <= 7`).
pub fn enumerate_verify(n: usize, tol: f64) -> Result<EnumerationSummary> {
    enumerate_verify_with(n, tol, false, |_, _| {})
}

/// [`enumerate_verify`] with an opt-in for `n = 8` and a progress callback
/// invoked as `(chunks_done, chunks_total)` after each mask-range chunk.
pub fn enumerate_verify_with<F>(
    n: usize,
    tol: f64,
    allow_large: bool,
    progress: F,
) -> Result<EnumerationSummary>
where
    F: Fn(usize, usize) + Sync,
{
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParams(format!(
            "tolerance {tol} must be positive"
        )));
    }
    // Validate n before splitting.
    LabeledConnected::with_range(n, 0..0, allow_large)?;
    let total = mask_count(n);
    let chunks = CHUNKS.min(total);
    let done = AtomicUsize::new(0);
    let partials = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let range = c * total / chunks..(c + 1) * total / chunks;
            let mut it = LabeledConnected::with_range(n, range, allow_large)?;
            let mut part = Partial::new();
            while let Some((mask, g)) = it.next_with_mask() {
                part.observe(mask, &g, tol)?;
            }
            progress(done.fetch_add(1, Ordering::Relaxed) + 1, chunks as usize);
            Ok(part)
        })
        .collect::<Result<Vec<_>>>()?;
    let merged = partials.into_iter().fold(Partial::new(), Partial::merge);
    Ok(merged.finish(n))
}

/// Runs the same checks over an external corpus, one summary per vertex
/// count, sorted by `n`.
pub fn verify_graphs(graphs: &[Graph], tol: f64) -> Result<Vec<EnumerationSummary>> {
    let mut by_n: std::collections::BTreeMap<usize, Partial> = Default::default();
    for (key, g) in graphs.iter().enumerate() {
        if g.n() < MIN_ENUM_N {
            return Err(Error::SizeOutOfRange {
                what: "verify",
                n: g.n(),
            });
        }
        by_n.entry(g.n())
            .or_insert_with(Partial::new)
            .observe(key as u64, g, tol)?;
    }
    Ok(by_n.into_iter().map(|(n, p)| p.finish(n)).collect())
}
