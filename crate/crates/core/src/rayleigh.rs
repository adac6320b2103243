//! Sum-of-squares Rayleigh quotients and the objective functions bounding
//! the spectral radius.
//!
//! All pair sums run over unordered pairs `i < j`. Under that convention
//! `Σ_{i<j} d(i,j)(y_i² + y_j²) = Σ_i y_i² t(v_i)`, which makes
//! [`rayleigh_sos`] equal the matrix Rayleigh quotient of `x = T^{1/2} y`
//! and `obj0 + rayleigh_sos = 2` exactly.

use serde::{Deserialize, Serialize};

use crate::distance::DistanceData;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default ε for [`condition_check`].
pub const DEFAULT_EPSILON: f64 = 0.05;

/// ε = 1/√n, the scale at which the transmission condition is stated.
pub fn transmission_condition_epsilon(n: usize) -> f64 {
    1.0 / (n as f64).sqrt()
}

fn check_len(dd: &DistanceData, y: &[f64]) -> Result<()> {
    if y.len() != dd.n() {
        return Err(Error::LengthMismatch {
            expected: dd.n(),
            got: y.len(),
        });
    }
    Ok(())
}

/// `Σ_i y_i² t(v_i)`, rejecting zero vectors.
fn weighted_norm(dd: &DistanceData, y: &[f64]) -> Result<f64> {
    check_len(dd, y)?;
    let den: f64 = y
        .iter()
        .zip(dd.transmissions())
        .map(|(v, &t)| v * v * t as f64)
        .sum();
    if den == 0.0 || !den.is_finite() {
        return Err(Error::ZeroVector);
    }
    Ok(den)
}

fn pair_sum(dd: &DistanceData, y: &[f64], term: impl Fn(f64, f64) -> f64) -> f64 {
    let n = y.len();
    let mut s = 0.0;
    for i in 0..n {
        let row = dd.row(i);
        for j in i + 1..n {
            s += row[j] as f64 * term(y[i], y[j]);
        }
    }
    s
}

/// `Σ_{i<j} d(i,j)(y_i − y_j)² / Σ_i y_i² t(v_i)`.
pub fn rayleigh_sos(dd: &DistanceData, y: &[f64]) -> Result<f64> {
    let den = weighted_norm(dd, y)?;
    Ok(pair_sum(dd, y, |a, b| (a - b) * (a - b)) / den)
}

/// `Σ_{i<j} d(i,j)(y_i + y_j)² / Σ_i y_i² t(v_i)`.
pub fn obj0(dd: &DistanceData, y: &[f64]) -> Result<f64> {
    let den = weighted_norm(dd, y)?;
    Ok(pair_sum(dd, y, |a, b| (a + b) * (a + b)) / den)
}

/// Distance-free relaxation: `Σ_{i<j}(y_i + y_j)² / (n · diam · Σ y_i²)`.
pub fn obj1(dd: &DistanceData, y: &[f64]) -> Result<f64> {
    check_len(dd, y)?;
    let sq: f64 = y.iter().map(|v| v * v).sum();
    if sq == 0.0 {
        return Err(Error::ZeroVector);
    }
    let num = pair_sum_identity(y)?;
    Ok(num / (dd.n() as f64 * dd.diameter() as f64 * sq))
}

/// `Σ_{i<j}(z_i + z_j)²` by direct summation.
pub fn pair_sum_identity(z: &[f64]) -> Result<f64> {
    let n = z.len();
    if n < 2 {
        return Err(Error::SizeOutOfRange {
            what: "pair_sum_identity",
            n,
        });
    }
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += (z[i] + z[j]) * (z[i] + z[j]);
        }
    }
    Ok(s)
}

/// `(n − 2)‖z‖² + (Σ z_i)²`, equal to [`pair_sum_identity`]. Its minimum
/// over unit vectors is `n − 2`.
pub fn pair_sum_closed_form(z: &[f64]) -> f64 {
    let n = z.len() as f64;
    let sq: f64 = z.iter().map(|v| v * v).sum();
    let sum: f64 = z.iter().sum();
    (n - 2.0) * sq + sum * sum
}

/// Sign classes of a vector plus a fixed diameter-realizing geodesic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignPartition {
    /// Indices with `y_i >= 0`.
    pub positive: Vec<usize>,
    /// Indices with `y_i < 0`.
    pub negative: Vec<usize>,
    /// Geodesic vertices in `positive`.
    pub positive_on_geodesic: Vec<usize>,
    /// Geodesic vertices in `negative`.
    pub negative_on_geodesic: Vec<usize>,
    /// Shortest path of length `diam(G)`, endpoints included.
    pub geodesic: Vec<usize>,
    #[serde(skip)]
    in_positive: Vec<bool>,
}

impl SignPartition {
    pub fn is_positive(&self, i: usize) -> bool {
        self.in_positive[i]
    }

    /// Checks `y_i >= 0` on the positive side and `y_i <= 0` on the negative side.
    pub fn check_feasible(&self, y: &[f64]) -> Result<()> {
        if y.len() != self.in_positive.len() {
            return Err(Error::LengthMismatch {
                expected: self.in_positive.len(),
                got: y.len(),
            });
        }
        for (i, (&v, &pos)) in y.iter().zip(&self.in_positive).enumerate() {
            if (pos && v < 0.0) || (!pos && v > 0.0) {
                return Err(Error::InfeasibleSign { index: i });
            }
        }
        Ok(())
    }
}

/// The lexicographically smallest pair `(u, v)` at distance `diam(G)`,
/// joined by walking from `u` to the smallest-index neighbor one step
/// closer to `v`.
pub fn diameter_geodesic(g: &Graph, dd: &DistanceData) -> Vec<usize> {
    let n = dd.n();
    let diam = dd.diameter();
    let (u, v) = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .find(|&(u, v)| dd.dist(u, v) == diam)
        .expect("some pair realizes the diameter");
    let mut path = vec![u];
    let mut cur = u;
    while cur != v {
        let want = dd.dist(cur, v) - 1;
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| dd.dist(w, v) == want)
            .expect("BFS distances admit a parent");
        path.push(cur);
    }
    path
}

/// Splits vertices by the sign of `y`; zero entries go to the positive side.
pub fn sign_partition(g: &Graph, dd: &DistanceData, y: &[f64]) -> Result<SignPartition> {
    check_len(dd, y)?;
    let in_positive: Vec<bool> = y.iter().map(|&v| v >= 0.0).collect();
    let (positive, negative): (Vec<usize>, Vec<usize>) =
        (0..y.len()).partition(|&i| in_positive[i]);
    let geodesic = diameter_geodesic(g, dd);
    let (positive_on_geodesic, negative_on_geodesic) =
        geodesic.iter().partition(|&&i| in_positive[i]);
    Ok(SignPartition {
        positive,
        negative,
        positive_on_geodesic,
        negative_on_geodesic,
        geodesic,
        in_positive,
    })
}

/// Same-sign relaxation: only pairs inside the positive side or inside the
/// negative side contribute to the numerator.
pub fn obj2(dd: &DistanceData, part: &SignPartition, y: &[f64]) -> Result<f64> {
    part.check_feasible(y)?;
    let den = weighted_norm(dd, y)?;
    let side = |set: &[usize]| {
        let mut s = 0.0;
        for (a, &i) in set.iter().enumerate() {
            for &j in &set[a + 1..] {
                s += dd.dist(i, j) as f64 * (y[i] + y[j]) * (y[i] + y[j]);
            }
        }
        s
    };
    Ok((side(&part.positive) + side(&part.negative)) / den)
}

/// `(Σ_{P} |P'|²/8 · y_i² + Σ_{N} |N'|²/8 · y_i²) / Σ_i y_i² t(v_i)`.
pub fn obj3(dd: &DistanceData, part: &SignPartition, y: &[f64]) -> Result<f64> {
    part.check_feasible(y)?;
    let den = weighted_norm(dd, y)?;
    let cp = (part.positive_on_geodesic.len() as f64).powi(2) / 8.0;
    let cn = (part.negative_on_geodesic.len() as f64).powi(2) / 8.0;
    let num: f64 = y
        .iter()
        .enumerate()
        .map(|(i, v)| if part.is_positive(i) { cp } else { cn } * v * v)
        .sum();
    Ok(num / den)
}

/// Distance sums from each vertex restricted to the positive and the
/// negative side.
pub fn partial_transmissions(dd: &DistanceData, part: &SignPartition) -> (Vec<u64>, Vec<u64>) {
    let n = dd.n();
    let mut tp = vec![0u64; n];
    let mut tn = vec![0u64; n];
    for i in 0..n {
        let row = dd.row(i);
        for (j, &d) in row.iter().enumerate() {
            if part.is_positive(j) {
                tp[i] += d as u64;
            } else {
                tn[i] += d as u64;
            }
        }
    }
    (tp, tn)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObjectiveReport {
    pub obj0: f64,
    pub obj1: f64,
    pub obj2: f64,
    pub obj3: f64,
    pub t_positive: Vec<u64>,
    pub t_negative: Vec<u64>,
}

/// Evaluates every objective at `y`, using the partition `y` induces.
pub fn objective_report(g: &Graph, dd: &DistanceData, y: &[f64]) -> Result<ObjectiveReport> {
    let part = sign_partition(g, dd, y)?;
    let (t_positive, t_negative) = partial_transmissions(dd, &part);
    Ok(ObjectiveReport {
        obj0: obj0(dd, y)?,
        obj1: obj1(dd, y)?,
        obj2: obj2(dd, &part, y)?,
        obj3: obj3(dd, &part, y)?,
        t_positive,
        t_negative,
    })
}

/// Outcome of the three balance conditions on a harmonic vector, with the
/// attained minima.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionCheck {
    pub epsilon: f64,
    /// Both sides carry at least an ε fraction of `Σ y_i²`.
    pub mass_balance: bool,
    pub mass_min_fraction: f64,
    /// Both sides cover at least `ε · diam` geodesic vertices.
    pub geodesic_balance: bool,
    pub geodesic_min_fraction: f64,
    /// `t_P(v), t_N(v) >= ε t(v)` at every vertex.
    pub transmission_balance: bool,
    pub transmission_min_fraction: f64,
}

impl ConditionCheck {
    pub fn any(&self) -> bool {
        self.mass_balance || self.geodesic_balance || self.transmission_balance
    }
}

pub fn condition_check(
    g: &Graph,
    dd: &DistanceData,
    y: &[f64],
    epsilon: f64,
) -> Result<ConditionCheck> {
    let part = sign_partition(g, dd, y)?;
    let total: f64 = y.iter().map(|v| v * v).sum();
    if total == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mass = |set: &[usize]| set.iter().map(|&i| y[i] * y[i]).sum::<f64>();
    let (mp, mn) = (mass(&part.positive), mass(&part.negative));
    let mass_balance = mp >= epsilon * total && mn >= epsilon * total;

    let diam = dd.diameter() as f64;
    let (gp, gn) = (
        part.positive_on_geodesic.len() as f64,
        part.negative_on_geodesic.len() as f64,
    );
    let geodesic_balance = gp >= epsilon * diam && gn >= epsilon * diam;

    let (tp, tn) = partial_transmissions(dd, &part);
    let mut transmission_balance = true;
    let mut transmission_min_fraction = f64::INFINITY;
    for i in 0..dd.n() {
        let t = dd.transmission(i) as f64;
        let (a, b) = (tp[i] as f64, tn[i] as f64);
        transmission_balance &= a >= epsilon * t && b >= epsilon * t;
        transmission_min_fraction = transmission_min_fraction.min(a.min(b) / t);
    }

    Ok(ConditionCheck {
        epsilon,
        mass_balance,
        mass_min_fraction: mp.min(mn) / total,
        geodesic_balance,
        geodesic_min_fraction: gp.min(gn) / diam,
        transmission_balance,
        transmission_min_fraction,
    })
}
