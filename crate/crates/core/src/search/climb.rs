//! Greedy single-edge-toggle search for graphs with large spectral radius.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::distance::all_pairs_distances;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::ndl_eigenvalues;

/// A toggle is accepted only if it raises the spectral radius by more than this.
pub const IMPROVEMENT_EPS: f64 = 1e-12;
pub const START_EDGE_PROBABILITY: f64 = 0.5;
pub const MIN_CLIMB_N: usize = 4;
// Separates the toggle stream from the stream that drew the start graph.
const TOGGLE_STREAM: u64 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HillClimbState {
    pub graph: Graph,
    pub spectral_radius: f64,
    /// Proposals made so far.
    pub steps: usize,
    pub seed: u64,
    /// Consecutive rejected proposals.
    pub plateau: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClimbOutcome {
    pub state: HillClimbState,
    pub start_spectral_radius: f64,
    pub accepted: usize,
}

impl ClimbOutcome {
    /// The final graph; acceptance is monotone, so it is also the best seen.
    pub fn best(&self) -> &Graph {
        &self.state.graph
    }
}

fn spectral_radius(g: &Graph) -> Result<f64> {
    let dd = all_pairs_distances(g)?;
    Ok(*ndl_eigenvalues(&dd)?.last().expect("n >= 2"))
}

/// Starts from `random_connected(n, 0.5, seed)` and toggles uniformly
/// random vertex pairs, keeping a toggle iff the graph stays connected and
/// the spectral radius strictly improves. Stops after `max_steps`
/// proposals or `n²` consecutive rejections.
pub fn hill_climb(n: usize, seed: u64, max_steps: usize) -> Result<ClimbOutcome> {
    if n < MIN_CLIMB_N {
        return Err(Error::SizeOutOfRange {
            what: "hill_climb",
            n,
        });
    }
    if max_steps == 0 {
        return Err(Error::InvalidParams("max_steps must be at least 1".into()));
    }
    let graph = Graph::random_connected(n, START_EDGE_PROBABILITY, seed)?;
    let start = spectral_radius(&graph)?;
    let mut state = HillClimbState {
        graph,
        spectral_radius: start,
        steps: 0,
        seed,
        plateau: 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(TOGGLE_STREAM);
    let mut accepted = 0;
    let patience = n * n;

    while state.steps < max_steps && state.plateau < patience {
        state.steps += 1;
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        let candidate = state.graph.with_toggled(u, v);
        let removed = state.graph.has_edge(u, v);
        if removed && !candidate.is_connected() {
            state.plateau += 1;
            continue;
        }
        let radius = spectral_radius(&candidate)?;
        if radius > state.spectral_radius + IMPROVEMENT_EPS {
            state.graph = candidate;
            state.spectral_radius = radius;
            state.plateau = 0;
            accepted += 1;
        } else {
            state.plateau += 1;
        }
    }
    Ok(ClimbOutcome {
        state,
        start_spectral_radius: start,
        accepted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monotone_and_connected() {
        let out = hill_climb(7, 3, 300).unwrap();
        assert!(out.state.spectral_radius >= out.start_spectral_radius);
        assert!(out.best().is_connected());
        assert!(out.state.steps <= 300);
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            hill_climb(8, 99, 200).unwrap(),
            hill_climb(8, 99, 200).unwrap()
        );
    }

    #[test]
    fn stops_on_plateau() {
        let out = hill_climb(4, 1, 1_000_000).unwrap();
        assert_eq!(out.state.plateau, 16);
        assert!(out.state.steps < 1_000_000);
    }

    #[test]
    fn argument_checks() {
        assert!(hill_climb(3, 0, 10).is_err());
        assert!(hill_climb(5, 0, 0).is_err());
        assert_eq!(hill_climb(5, 0, 1).unwrap().state.steps, 1);
    }
}
