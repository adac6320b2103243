use serde::{Deserialize, Serialize};

use super::barbell::SweepRecord;
use super::climb::ClimbOutcome;
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::spectral::ndl_spectrum;

/// Candidates with `diam < FLAG_RATIO · √n` are flagged for inspection.
pub const FLAG_RATIO: f64 = 0.5;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub label: String,
    pub n: usize,
    pub diameter: u32,
    pub spectral_radius: f64,
    /// Absent when `n` exceeds the single-byte graph6 size.
    pub graph6: Option<String>,
}

impl Candidate {
    pub fn from_graph(label: impl Into<String>, g: &Graph) -> Result<Self> {
        let (spec, dd) = ndl_spectrum(g)?;
        Ok(Self {
            label: label.into(),
            n: dd.n(),
            diameter: dd.diameter(),
            spectral_radius: spec.max(),
            graph6: encode_graph6(g).ok(),
        })
    }

    pub fn from_sweep(r: &SweepRecord) -> Self {
        Self {
            label: format!("barbell({},{},{})", r.k1, r.p, r.k2),
            n: r.n,
            diameter: r.diameter,
            spectral_radius: r.spectral_radius,
            graph6: None,
        }
    }

    pub fn from_climb(label: impl Into<String>, c: &ClimbOutcome) -> Result<Self> {
        Self::from_graph(label, c.best())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiameterReportEntry {
    pub label: String,
    pub n: usize,
    pub diameter: u32,
    pub spectral_radius: f64,
    pub diam_over_sqrt_n: f64,
    pub flagged: bool,
    pub graph6: Option<String>,
}

/// Reports `diam/√n` for each candidate. Flagged candidates are kept.
pub fn diameter_lower_bound_report(candidates: &[Candidate]) -> Vec<DiameterReportEntry> {
    candidates
        .iter()
        .map(|c| {
            let sqrt_n = (c.n as f64).sqrt();
            DiameterReportEntry {
                label: c.label.clone(),
                n: c.n,
                diameter: c.diameter,
                spectral_radius: c.spectral_radius,
                diam_over_sqrt_n: c.diameter as f64 / sqrt_n,
                flagged: (c.diameter as f64) < FLAG_RATIO * sqrt_n,
                graph6: c.graph6.clone(),
            }
        })
        .collect()
}
