//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! Each sweep visits the pairs `(p, q)`, `p < q`, in row order and applies
//! the plane rotation that annihilates `a[p][q]`. Sweeps repeat until the
//! off-diagonal Frobenius norm drops below `OFF_DIAGONAL_RTOL * max(1, ‖A‖_F)`.

use serde::{Deserialize, Serialize};

use super::matrix::{off_norm, SymmetricMatrix};
use crate::error::{Error, Result};

/// Convergence target for the off-diagonal Frobenius norm, relative to `max(1, ‖A‖_F)`.
pub const OFF_DIAGONAL_RTOL: f64 = 1e-13;
pub const MAX_SWEEPS: usize = 100;
/// Components at or below this magnitude are skipped when fixing eigenvector signs.
const SIGN_EPS: f64 = 1e-12;

/// Ascending eigenvalues with matching orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    // Row k holds the eigenvector for eigenvalues[k].
    vectors: Vec<f64>,
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvector(&self, k: usize) -> &[f64] {
        let n = self.n();
        &self.vectors[k * n..(k + 1) * n]
    }

    /// Largest eigenvalue.
    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().expect("spectrum is non-empty")
    }
}

struct Workspace {
    n: usize,
    a: Vec<f64>,
    v: Option<Vec<f64>>,
}

impl Workspace {
    fn rotate(&mut self, p: usize, q: usize) {
        let n = self.n;
        let apq = self.a[p * n + q];
        if apq == 0.0 {
            return;
        }
        let app = self.a[p * n + p];
        let aqq = self.a[q * n + q];
        let theta = (aqq - app) / (2.0 * apq);
        let t = if theta.abs() > 1e150 {
            0.5 / theta
        } else {
            let t = 1.0 / (theta.abs() + (theta * theta + 1.0).sqrt());
            if theta < 0.0 {
                -t
            } else {
                t
            }
        };
        let c = 1.0 / (t * t + 1.0).sqrt();
        let s = t * c;

        self.a[p * n + p] = app - t * apq;
        self.a[q * n + q] = aqq + t * apq;
        self.a[p * n + q] = 0.0;
        self.a[q * n + p] = 0.0;

        for k in 0..n {
            if k == p || k == q {
                continue;
            }
            let akp = self.a[p * n + k];
            let akq = self.a[q * n + k];
            let np = c * akp - s * akq;
            let nq = s * akp + c * akq;
            self.a[p * n + k] = np;
            self.a[q * n + k] = nq;
            self.a[k * n + p] = np;
            self.a[k * n + q] = nq;
        }

        if let Some(v) = self.v.as_mut() {
            let (lo, hi) = v.split_at_mut(q * n);
            let vp = &mut lo[p * n..(p + 1) * n];
            let vq = &mut hi[..n];
            for (xp, xq) in vp.iter_mut().zip(vq.iter_mut()) {
                let a = *xp;
                let b = *xq;
                *xp = c * a - s * b;
                *xq = s * a + c * b;
            }
        }
    }

    fn run(&mut self, tol: f64) -> Result<()> {
        let n = self.n;
        let mut off = off_norm(&self.a, n);
        for _ in 0..MAX_SWEEPS {
            if off < tol {
                return Ok(());
            }
            for p in 0..n {
                for q in p + 1..n {
                    self.rotate(p, q);
                }
            }
            off = off_norm(&self.a, n);
        }
        if off < tol {
            return Ok(());
        }
        Err(Error::NoConvergence {
            sweeps: MAX_SWEEPS,
            off_norm: off,
        })
    }
}

fn solve(a: &SymmetricMatrix, vectors: bool) -> Result<(Vec<f64>, Option<Vec<f64>>)> {
    let n = a.n();
    let tol = OFF_DIAGONAL_RTOL * a.frobenius_norm().max(1.0);
    let mut ws = Workspace {
        n,
        a: a.as_slice().to_vec(),
        v: vectors.then(|| {
            let mut id = vec![0.0; n * n];
            for i in 0..n {
                id[i * n + i] = 1.0;
            }
            id
        }),
    };
    ws.run(tol)?;
    let diag = (0..n).map(|i| ws.a[i * n + i]).collect();
    Ok((diag, ws.v))
}

/// Full eigendecomposition. Eigenvalues are sorted ascending (ties keep
/// their diagonal order) and each eigenvector is signed so that its first
/// non-negligible component is positive.
pub fn eigen_decompose(a: &SymmetricMatrix) -> Result<Spectrum> {
    let n = a.n();
    let (diag, v) = solve(a, true)?;
    let v = v.expect("vectors requested");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]));

    let mut eigenvalues = Vec::with_capacity(n);
    let mut vectors = Vec::with_capacity(n * n);
    for &k in &order {
        eigenvalues.push(diag[k]);
        let col = &v[k * n..(k + 1) * n];
        let lead = col
            .iter()
            .find(|x| x.abs() > SIGN_EPS)
            .copied()
            .unwrap_or(1.0);
        let sign = if lead < 0.0 { -1.0 } else { 1.0 };
        vectors.extend(col.iter().map(|x| sign * x));
    }
    Ok(Spectrum {
        eigenvalues,
        vectors,
    })
}

/// Sorted eigenvalues without accumulating eigenvectors.
pub fn eigenvalues(a: &SymmetricMatrix) -> Result<Vec<f64>> {
    let (mut diag, _) = solve(a, false)?;
    diag.sort_by(f64::total_cmp);
    Ok(diag)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn max_abs(a: &[f64]) -> f64 {
        a.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    fn reconstruction_error(a: &SymmetricMatrix, s: &Spectrum) -> f64 {
        let n = a.n();
        let mut err = 0.0;
        for i in 0..n {
            for j in 0..n {
                let r: f64 = (0..n)
                    .map(|k| s.eigenvector(k)[i] * s.eigenvalues()[k] * s.eigenvector(k)[j])
                    .sum();
                err += (a.get(i, j) - r).powi(2);
            }
        }
        err.sqrt()
    }

    fn orthonormality_error(s: &Spectrum) -> f64 {
        let n = s.n();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let d: f64 = s
                    .eigenvector(i)
                    .iter()
                    .zip(s.eigenvector(j))
                    .map(|(a, b)| a * b)
                    .sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((d - target).abs());
            }
        }
        worst
    }

    #[test]
    fn two_by_two() {
        let a = SymmetricMatrix::from_rows(&[vec![1.0, -1.0], vec![-1.0, 1.0]]).unwrap();
        let s = eigen_decompose(&a).unwrap();
        assert!(max_abs(&[s.eigenvalues()[0], s.eigenvalues()[1] - 2.0]) < 1e-15);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let top = s.eigenvector(1);
        assert!((top[0] - h).abs() < 1e-15 && (top[1] + h).abs() < 1e-15);
    }

    #[test]
    fn diagonal_and_identity() {
        let a = SymmetricMatrix::from_fn(4, |i, j| if i == j { 4.0 - i as f64 } else { 0.0 });
        let s = eigen_decompose(&a).unwrap();
        assert_eq!(s.eigenvalues(), &[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(s.eigenvector(0), &[0.0, 0.0, 0.0, 1.0]);
        let id = SymmetricMatrix::from_fn(3, |i, j| (i == j) as u8 as f64);
        assert_eq!(eigenvalues(&id).unwrap(), vec![1.0; 3]);
    }

    #[test]
    fn empty_and_single() {
        let a = SymmetricMatrix::from_fn(1, |_, _| 3.5);
        assert_eq!(eigen_decompose(&a).unwrap().eigenvalues(), &[3.5]);
        let z = SymmetricMatrix::from_fn(0, |_, _| 0.0);
        assert_eq!(eigen_decompose(&z).unwrap().n(), 0);
    }

    #[test]
    fn deterministic() {
        let a = SymmetricMatrix::from_fn(12, |i, j| {
            ((i * 7 + j * 3) % 5) as f64 - (i + j) as f64 * 0.1
        });
        let s1 = eigen_decompose(&a).unwrap();
        let s2 = eigen_decompose(&a).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(eigenvalues(&a).unwrap(), s1.eigenvalues());
    }

    #[test]
    fn sign_convention_first_component_positive() {
        let a = SymmetricMatrix::from_fn(6, |i, j| 1.0 / (1 + i + j) as f64);
        let s = eigen_decompose(&a).unwrap();
        for k in 0..6 {
            let lead = s
                .eigenvector(k)
                .iter()
                .find(|x| x.abs() > SIGN_EPS)
                .unwrap();
            assert!(*lead > 0.0);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn contract_on_random_matrices(n in 1usize..24, entries in proptest::collection::vec(-10.0f64..10.0, 24 * 24)) {
            let a = SymmetricMatrix::from_fn(n, |i, j| entries[i * 24 + j]);
            let s = eigen_decompose(&a).unwrap();
            prop_assert!(reconstruction_error(&a, &s) <= 1e-10 * a.frobenius_norm().max(1.0));
            prop_assert!(orthonormality_error(&s) <= 1e-10);
            prop_assert!(s.eigenvalues().windows(2).all(|w| w[0] <= w[1]));
        }

        #[test]
        fn matches_nalgebra(n in 1usize..16, entries in proptest::collection::vec(-5.0f64..5.0, 16 * 16)) {
            let a = SymmetricMatrix::from_fn(n, |i, j| entries[i * 16 + j]);
            let m = nalgebra::DMatrix::from_fn(n, n, |i, j| a.get(i, j));
            let mut oracle: Vec<f64> = nalgebra::SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
            oracle.sort_by(f64::total_cmp);
            let ours = eigenvalues(&a).unwrap();
            for (x, y) in ours.iter().zip(&oracle) {
                prop_assert!((x - y).abs() <= 1e-10 * a.frobenius_norm().max(1.0));
            }
        }
    }

    #[test]
    fn repeated_eigenvalues_keep_orthonormal_basis() {
        // J - I on 8 vertices: eigenvalues 7 and -1 (multiplicity 7).
        let a = SymmetricMatrix::from_fn(8, |i, j| if i == j { 0.0 } else { 1.0 });
        let s = eigen_decompose(&a).unwrap();
        assert!(orthonormality_error(&s) < 1e-12);
        assert!(reconstruction_error(&a, &s) < 1e-12);
        assert!((s.max() - 7.0).abs() < 1e-12);
    }
}
