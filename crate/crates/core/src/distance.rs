use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// All-pairs shortest-path distances (in edges) of a connected graph,
/// together with vertex transmissions and the diameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceData {
    n: usize,
    dist: Vec<u32>,
    transmission: Vec<u64>,
    diameter: u32,
}

impl DistanceData {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> u32 {
        self.dist[i * self.n + j]
    }

    /// Row `i` of the distance matrix.
    pub fn row(&self, i: usize) -> &[u32] {
        &self.dist[i * self.n..(i + 1) * self.n]
    }

    #[inline]
    pub fn transmission(&self, i: usize) -> u64 {
        self.transmission[i]
    }

    pub fn transmissions(&self) -> &[u64] {
        &self.transmission
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// Sum of all distances over unordered pairs.
    pub fn wiener_index(&self) -> u64 {
        self.transmission.iter().sum::<u64>() / 2
    }

    /// True when every off-diagonal distance is 1, i.e. the graph is complete.
    pub fn is_complete(&self) -> bool {
        self.diameter <= 1
    }
}

/// Breadth-first search from every vertex.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceData> {
    let n = g.n();
    let mut dist = vec![u32::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &w in g.neighbors(u) {
                if row[w] == u32::MAX {
                    row[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        if let Some(unreachable) = row.iter().position(|&d| d == u32::MAX) {
            return Err(Error::Disconnected {
                from: s,
                unreachable,
            });
        }
    }
    let transmission = dist
        .chunks_exact(n)
        .map(|row| row.iter().map(|&d| d as u64).sum())
        .collect();
    let diameter = dist.iter().copied().max().unwrap_or(0);
    Ok(DistanceData {
        n,
        dist,
        transmission,
        diameter,
    })
}
