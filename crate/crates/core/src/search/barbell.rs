//! Spectral radius of barbell graphs, either the balanced family with a
//! path of about `√(2n)` vertices or every split of `n` vertices.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distance::all_pairs_distances;
use crate::error::{Error, Result};
use crate::graph::{BarbellParams, Graph};
use crate::spectral::ndl_eigenvalues;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepMode {
    /// `k1 = k2 = round((n - round(√(2n))) / 2)`, `p = n - 2 k1`.
    PaperFamily,
    /// All `k1 >= k2 >= 1`, `p >= 0` with `k1 + p + k2 = n`.
    AllCompositions,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub n: usize,
    pub k1: usize,
    pub p: usize,
    pub k2: usize,
    pub spectral_radius: f64,
    /// `2 - spectral_radius`.
    pub gap: f64,
    /// `gap · √n`.
    pub scaled_gap: f64,
    pub diameter: u32,
}

impl SweepRecord {
    pub fn params(&self) -> BarbellParams {
        BarbellParams::new(self.k1, self.p, self.k2)
    }
}

pub const MIN_SWEEP_N: usize = 5;

pub fn paper_family_params(n: usize) -> Result<BarbellParams> {
    let path = (2.0 * n as f64).sqrt().round();
    let k = ((n as f64 - path) / 2.0).round() as usize;
    if k < 1 || 2 * k > n {
        return Err(Error::InvalidParams(format!(
            "n = {n} is too small for the balanced barbell family"
        )));
    }
    Ok(BarbellParams::new(k, n - 2 * k, k))
}

pub fn sweep_record(params: BarbellParams) -> Result<SweepRecord> {
    let g = Graph::barbell(params)?;
    let dd = all_pairs_distances(&g)?;
    let radius = *ndl_eigenvalues(&dd)?.last().expect("n >= 2");
    let n = params.n();
    let gap = 2.0 - radius;
    Ok(SweepRecord {
        n,
        k1: params.k1,
        p: params.p,
        k2: params.k2,
        spectral_radius: radius,
        gap,
        scaled_gap: gap * (n as f64).sqrt(),
        diameter: dd.diameter(),
    })
}

/// One record per configuration, sorted by spectral radius, largest first.
/// Equal radii keep enumeration order (`k1` descending, then `p` ascending).
pub fn barbell_sweep(n: usize, mode: SweepMode) -> Result<Vec<SweepRecord>> {
    if n < MIN_SWEEP_N {
        return Err(Error::SizeOutOfRange {
            what: "barbell_sweep",
            n,
        });
    }
    let configs: Vec<BarbellParams> = match mode {
        SweepMode::PaperFamily => vec![paper_family_params(n)?],
        SweepMode::AllCompositions => (1..=n)
            .rev()
            .flat_map(|k1| (0..=n - k1).map(move |p| (k1, p)))
            .filter_map(|(k1, p)| {
                let k2 = n - k1 - p;
                (k2 >= 1 && k2 <= k1).then(|| BarbellParams::new(k1, p, k2))
            })
            .collect(),
    };
    let mut records = configs
        .into_par_iter()
        .map(sweep_record)
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| b.spectral_radius.total_cmp(&a.spectral_radius));
    Ok(records)
}

/// `(n, (2 - ∂_n)·√n)` per vertex count, taking the best record at each
/// `n`, sorted by `n`.
pub fn fit_gap_constant(records: &[SweepRecord]) -> Result<Vec<(usize, f64)>> {
    let mut best: std::collections::BTreeMap<usize, &SweepRecord> = Default::default();
    for r in records {
        let slot = best.entry(r.n).or_insert(r);
        if r.spectral_radius > slot.spectral_radius {
            *slot = r;
        }
    }
    if best.len() < 3 {
        return Err(Error::InvalidParams(format!(
            "need records at 3 or more distinct n, got {}",
            best.len()
        )));
    }
    Ok(best.into_iter().map(|(n, r)| (n, r.scaled_gap)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_family_rounding() {
        assert_eq!(
            paper_family_params(50).unwrap(),
            BarbellParams::new(20, 10, 20)
        );
        assert_eq!(
            paper_family_params(100).unwrap(),
            BarbellParams::new(43, 14, 43)
        );
        assert!(paper_family_params(2).is_err());
        let p = paper_family_params(5).unwrap();
        assert!(p.k1 >= 1 && p.n() == 5);
    }

    #[test]
    fn all_compositions_at_eight() {
        let recs = barbell_sweep(8, SweepMode::AllCompositions).unwrap();
        // k1 >= k2 >= 1, p >= 0, k1 + k2 + p = 8.
        let expected = (1..=8usize)
            .flat_map(|k1| (1..=k1).map(move |k2| (k1, k2)))
            .filter(|&(k1, k2)| k1 + k2 <= 8)
            .count();
        assert_eq!(recs.len(), expected);
        let r = recs
            .iter()
            .find(|r| (r.k1, r.p, r.k2) == (3, 2, 3))
            .unwrap();
        assert_eq!(r.diameter, 3);
        assert!(recs
            .windows(2)
            .all(|w| w[0].spectral_radius >= w[1].spectral_radius));
        for r in &recs {
            assert!(r.gap > 0.0 && r.gap <= 2.0);
            if r.k1 >= 2 && r.k2 >= 2 && r.p >= 1 {
                assert_eq!(r.diameter as usize, r.p + 1);
            }
        }
        let paper = barbell_sweep(8, SweepMode::PaperFamily).unwrap();
        assert_eq!(paper.len(), 1);
        assert!(recs[0].spectral_radius >= paper[0].spectral_radius);
    }

    #[test]
    fn fit_requires_three_sizes() {
        let mut recs = Vec::new();
        for n in [20, 30] {
            recs.extend(barbell_sweep(n, SweepMode::PaperFamily).unwrap());
        }
        assert!(fit_gap_constant(&recs).is_err());
        recs.extend(barbell_sweep(40, SweepMode::PaperFamily).unwrap());
        let series = fit_gap_constant(&recs).unwrap();
        assert_eq!(
            series.iter().map(|s| s.0).collect::<Vec<_>>(),
            vec![20, 30, 40]
        );
        assert!(series.iter().all(|s| s.1 > 0.0));
    }

    #[test]
    fn too_small() {
        assert!(barbell_sweep(4, SweepMode::AllCompositions).is_err());
    }
}
