//! Dense symmetric eigensolvers.

use nalgebra::DMatrix;

use crate::matrix::SymMatrix;

/// Orders above this go to the Householder/QR solver; cyclic Jacobi costs
/// a few `n^3` per sweep and gets slow past a couple hundred.
pub const JACOBI_MAX_ORDER: usize = 160;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues sorted descending with orthonormal eigenvectors as columns
/// (`vectors[i * order + k]` is component `i` of eigenvector `k`).
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Vec<f64>,
    pub order: usize,
}

impl EigenDecomposition {
    pub fn vector(&self, k: usize) -> Vec<f64> {
        (0..self.order).map(|i| self.vectors[i * self.order + k]).collect()
    }

    fn sorted_descending(order: usize, values: Vec<f64>, vectors: Vec<f64>) -> Self {
        let mut idx: Vec<usize> = (0..order).collect();
        idx.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
        let mut sorted_vectors = vec![0.0; order * order];
        for (new, &old) in idx.iter().enumerate() {
            for i in 0..order {
                sorted_vectors[i * order + new] = vectors[i * order + old];
            }
        }
        EigenDecomposition {
            values: idx.iter().map(|&k| values[k]).collect(),
            vectors: sorted_vectors,
            order,
        }
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm falls below
/// `1e-12 * order * max(1, ||A||_F)`.
pub fn jacobi(m: &SymMatrix) -> EigenDecomposition {
    let n = m.order();
    let mut a = m.data().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let scale = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let target = 1e-12 * n as f64 * scale;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a, n) <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let values = (0..n).map(|i| a[i * n + i]).collect();
    EigenDecomposition::sorted_descending(n, values, v)
}

/// Householder tridiagonalization with implicit QR, via nalgebra.
pub fn householder_qr(m: &SymMatrix) -> EigenDecomposition {
    let n = m.order();
    let dm = DMatrix::from_row_slice(n, n, m.data());
    let eig = dm.symmetric_eigen();
    let mut vectors = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            vectors[i * n + k] = eig.eigenvectors[(i, k)];
        }
    }
    EigenDecomposition::sorted_descending(n, eig.eigenvalues.iter().copied().collect(), vectors)
}

/// Full decomposition, choosing the solver by order.
pub fn decompose(m: &SymMatrix) -> EigenDecomposition {
    if m.order() <= JACOBI_MAX_ORDER {
        jacobi(m)
    } else {
        householder_qr(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(m: &SymMatrix, d: &EigenDecomposition) -> f64 {
        let n = m.order();
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let x = d.vector(k);
            for i in 0..n {
                let ax: f64 = (0..n).map(|j| m.get(i, j) * x[j]).sum();
                worst = worst.max((ax - d.values[k] * x[i]).abs());
            }
        }
        worst
    }

    fn pseudo_random_symmetric(n: usize, seed: u64) -> SymMatrix {
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as f64 / (1u64 << 31) as f64) - 0.5
        };
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let x = next();
                data[i * n + j] = x;
                data[j * n + i] = x;
            }
        }
        SymMatrix::from_row_major(n, data).unwrap()
    }

    #[test]
    fn identity() {
        let d = jacobi(&SymMatrix::identity(3));
        assert_eq!(d.values, vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn two_by_two() {
        let m = SymMatrix::from_row_major(2, vec![2.0, 1.0, 1.0, 2.0]).unwrap();
        let d = jacobi(&m);
        assert!((d.values[0] - 3.0).abs() < 1e-14);
        assert!((d.values[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn jacobi_and_qr_agree() {
        for (n, seed) in [(1, 1), (5, 2), (12, 3), (30, 4)] {
            let m = pseudo_random_symmetric(n, seed);
            let a = jacobi(&m);
            let b = householder_qr(&m);
            for (x, y) in a.values.iter().zip(&b.values) {
                assert!((x - y).abs() < 1e-10, "{x} vs {y}");
            }
            assert!(residual(&m, &a) < 1e-10);
            assert!(residual(&m, &b) < 1e-10);
        }
    }

    #[test]
    fn eigenvectors_are_orthonormal() {
        let m = pseudo_random_symmetric(9, 7);
        let d = jacobi(&m);
        for a in 0..9 {
            for b in 0..9 {
                let dot: f64 = d.vector(a).iter().zip(d.vector(b)).map(|(x, y)| x * y).sum();
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn empty_matrix() {
        let m = SymMatrix::from_row_major(0, vec![]).unwrap();
        assert!(decompose(&m).values.is_empty());
    }
}
