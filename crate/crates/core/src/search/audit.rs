use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::spectral::ndl_spectrum;

/// `2 - (n-2)/(n · diam)`: the spectral-radius ceiling obtained from the
/// exact minimum of the distance-free relaxation.
pub fn diameter_bound(n: usize, diameter: u32) -> f64 {
    2.0 - (n as f64 - 2.0) / (n as f64 * diameter as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundAudit {
    pub n: usize,
    pub diameter: u32,
    pub spectral_radius: f64,
    pub bound: f64,
    /// `bound - spectral_radius`; nonnegative up to rounding.
    pub margin: f64,
}

pub fn bound_audit(g: &Graph) -> Result<BoundAudit> {
    let (spec, dd) = ndl_spectrum(g)?;
    let bound = diameter_bound(dd.n(), dd.diameter());
    Ok(BoundAudit {
        n: dd.n(),
        diameter: dd.diameter(),
        spectral_radius: spec.max(),
        bound,
        margin: bound - spec.max(),
    })
}
