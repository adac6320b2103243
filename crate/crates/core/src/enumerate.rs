//! Exhaustive enumeration of labeled connected graphs on a few vertices.
//!
//! A labeled graph on `n` vertices is identified with a bitmask over the
//! `n(n-1)/2` vertex pairs, bit `k` standing for the `k`-th pair in graph6
//! column order `(0,1),(0,2),(1,2),(0,3),...`.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MIN_ENUM_N: usize = 2;
pub const MAX_ENUM_N: usize = 7;
/// Reachable only on explicit request; `2^28` masks.
pub const MAX_ENUM_N_LARGE: usize = 8;

/// Vertex pairs in bit order.
pub fn pair_order(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

pub fn mask_count(n: usize) -> u64 {
    1u64 << (n * (n - 1) / 2)
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = pair_order(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e);
    Graph::from_edges(n, edges).expect("pairs are valid")
}

fn mask_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    let mut rows = [0u8; MAX_ENUM_N_LARGE];
    let mut bits = mask;
    while bits != 0 {
        let k = bits.trailing_zeros() as usize;
        let (i, j) = pairs[k];
        rows[i] |= 1 << j;
        rows[j] |= 1 << i;
        bits &= bits - 1;
    }
    let all = ((1u16 << n) - 1) as u8;
    let mut seen = 1u8;
    let mut frontier = 1u8;
    while frontier != 0 {
        let mut next = 0u8;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            next |= rows[v];
            f &= f - 1;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

fn check_range(n: usize, allow_large: bool) -> Result<()> {
    let max = if allow_large {
        MAX_ENUM_N_LARGE
    } else {
        MAX_ENUM_N
    };
    if !(MIN_ENUM_N..=max).contains(&n) {
        return Err(Error::SizeOutOfRange {
            what: "enumeration",
            n,
        });
    }
    Ok(())
}

/// Iterator over labeled connected graphs in increasing mask order.
#[derive(Debug, Clone)]
pub struct LabeledConnected {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledConnected {
    /// Restricts enumeration to masks in `range`, for partitioned
    /// consumption. The range is clamped to the valid mask space.
    pub fn with_range(n: usize, range: Range<u64>, allow_large: bool) -> Result<Self> {
        check_range(n, allow_large)?;
        let total = mask_count(n);
        Ok(Self {
            n,
            pairs: pair_order(n),
            next: range.start.min(total),
            end: range.end.min(total),
        })
    }

    /// Like [`Iterator::next`] but also yields the mask.
    pub fn next_with_mask(&mut self) -> Option<(u64, Graph)> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if mask_connected(self.n, &self.pairs, mask) {
                return Some((mask, graph_from_mask(self.n, mask)));
            }
        }
        None
    }
}

impl Iterator for LabeledConnected {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.next_with_mask().map(|(_, g)| g)
    }
}

/// Every labeled connected graph on `n` vertices, `2 <= n <= 7`.
pub fn enumerate_labeled_connected(n: usize) -> Result<LabeledConnected> {
    LabeledConnected::with_range(n, 0..u64::MAX, false)
}
