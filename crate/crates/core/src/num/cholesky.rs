//! Blocked Cholesky factorization for dense symmetric matrices.
//!
//! Right-looking algorithm with a fixed block size. The trailing update is
//! parallelized across rows, and every entry is accumulated in a fixed order,
//! so the factor is bit-identical regardless of thread count. Only the lower
//! triangle is stored or touched.

use crate::exec;

/// Dense symmetric matrix, full row-major storage, lower triangle meaningful.
#[derive(Clone)]
pub struct SymMatrix {
    pub n: usize,
    pub data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n] }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn add_to_diagonal(&mut self, v: f64) {
        for i in 0..self.n {
            self.data[i * self.n + i] += v;
        }
    }
}

/// Error: leading minor at the given pivot is not positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotPositiveDefinite {
    pub pivot: usize,
}

const BLOCK: usize = 128;

/// Fixed-order dot product with four accumulators; vectorizes well and keeps
/// the summation tree identical on every code path.
#[inline]
fn dot(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len();
    let mut acc = [0.0f64; 4];
    let chunks = n / 4;
    for c in 0..chunks {
        let k = 4 * c;
        acc[0] += a[k] * b[k];
        acc[1] += a[k + 1] * b[k + 1];
        acc[2] += a[k + 2] * b[k + 2];
        acc[3] += a[k + 3] * b[k + 3];
    }
    let mut tail = 0.0;
    for k in 4 * chunks..n {
        tail += a[k] * b[k];
    }
    (acc[0] + acc[1]) + (acc[2] + acc[3]) + tail
}

/// In-place lower Cholesky, `A = L L^T`.
pub fn cholesky_in_place(a: &mut SymMatrix) -> Result<(), NotPositiveDefinite> {
    cholesky_impl(a, true)
}

/// Sequential reference factorization; used by the benchmark suite and the
/// `--no-default-features` build. Produces bit-identical output to
/// [`cholesky_in_place`].
pub fn cholesky_in_place_seq(a: &mut SymMatrix) -> Result<(), NotPositiveDefinite> {
    cholesky_impl(a, false)
}

fn cholesky_impl(a: &mut SymMatrix, parallel: bool) -> Result<(), NotPositiveDefinite> {
    let n = a.n;
    let mut k0 = 0;
    while k0 < n {
        let k1 = (k0 + BLOCK).min(n);
        let w = k1 - k0;

        // factor the diagonal block (all earlier panels already applied)
        for j in k0..k1 {
            let (row_j_left, row_j_diag) = {
                let row = &a.data[j * n..(j + 1) * n];
                (&row[k0..j], row[j])
            };
            let d = row_j_diag - dot(row_j_left, row_j_left);
            if d <= 0.0 || !d.is_finite() {
                return Err(NotPositiveDefinite { pivot: j });
            }
            let d = d.sqrt();
            a.data[j * n + j] = d;
            for i in j + 1..k1 {
                let s = {
                    let (rows_head, rows_tail) = a.data.split_at(i * n);
                    let row_j = &rows_head[j * n + k0..j * n + j];
                    let row_i = &rows_tail[k0..j];
                    a.data[i * n + j] - dot(row_i, row_j)
                };
                a.data[i * n + j] = s / d;
            }
        }

        if k1 == n {
            break;
        }

        // panel solve: rows below the block against the block's transpose
        {
            let (head, tail) = a.data.split_at_mut(k1 * n);
            let block = &head[k0 * n..]; // rows k0..k1 live at offset (j-k0)*n + ...
            let solve_row = |local: usize, row: &mut [f64]| {
                let _ = local;
                for j in k0..k1 {
                    let row_j = &block[(j - k0) * n + k0..(j - k0) * n + j];
                    let s = row[j] - dot(&row[k0..j], row_j);
                    row[j] = s / block[(j - k0) * n + j];
                }
            };
            if parallel {
                exec::for_each_row(tail, n, |local, row| solve_row(local, row));
            } else {
                exec::for_each_row_seq(tail, n, solve_row);
            }
        }

        // copy the solved panel so the trailing update can borrow it immutably
        let rows_below = n - k1;
        let mut panel = vec![0.0f64; rows_below * w];
        for r in 0..rows_below {
            let i = k1 + r;
            panel[r * w..(r + 1) * w].copy_from_slice(&a.data[i * n + k0..i * n + k1]);
        }

        // trailing update: row i gets -= panel_i . panel_j for j <= i
        {
            let tail = &mut a.data[k1 * n..];
            let panel = &panel;
            let update_row = |local: usize, row: &mut [f64]| {
                let pi = &panel[local * w..(local + 1) * w];
                for j in k1..=(k1 + local) {
                    let pj = &panel[(j - k1) * w..(j - k1 + 1) * w];
                    row[j] -= dot(pi, pj);
                }
            };
            if parallel {
                exec::for_each_row(tail, n, |local, row| update_row(local, row));
            } else {
                exec::for_each_row_seq(tail, n, update_row);
            }
        }

        k0 = k1;
    }
    Ok(())
}

/// `y = L w` for the lower factor produced by [`cholesky_in_place`].
pub fn lower_multiply(l: &SymMatrix, w: &[f64]) -> Vec<f64> {
    let n = l.n;
    assert_eq!(w.len(), n);
    exec::map_indexed(n, |i| dot(&l.data[i * n..i * n + i + 1], &w[..i + 1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rng::standard_normal;

    fn random_spd(n: usize, seed: u64) -> SymMatrix {
        // B B^T + n I is comfortably positive definite
        let b: Vec<f64> = (0..n * n).map(|k| standard_normal(seed, k as u64)).collect();
        let mut a = SymMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let mut s = 0.0;
                for k in 0..n {
                    s += b[i * n + k] * b[j * n + k];
                }
                if i == j {
                    s += n as f64;
                }
                a.set(i, j, s);
                a.set(j, i, s);
            }
        }
        a
    }

    fn reconstruct_error(orig: &SymMatrix, l: &SymMatrix) -> f64 {
        let n = orig.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..=i {
                let mut s = 0.0;
                for k in 0..=j {
                    s += l.at(i, k) * l.at(j, k);
                }
                worst = worst.max((s - orig.at(i, j)).abs() / orig.at(i, i).abs().max(1.0));
            }
        }
        worst
    }

    #[test]
    fn factor_reconstructs_matrix() {
        for &n in &[1usize, 3, 17, 130, 300] {
            let orig = random_spd(n, 7 + n as u64);
            let mut a = orig.clone();
            cholesky_in_place(&mut a).unwrap();
            assert!(reconstruct_error(&orig, &a) < 1e-10, "n={n}");
        }
    }

    #[test]
    fn parallel_and_sequential_factors_are_bit_identical() {
        let orig = random_spd(261, 99);
        let mut ap = orig.clone();
        let mut asq = orig.clone();
        cholesky_in_place(&mut ap).unwrap();
        cholesky_in_place_seq(&mut asq).unwrap();
        for i in 0..orig.n {
            for j in 0..=i {
                assert_eq!(ap.at(i, j).to_bits(), asq.at(i, j).to_bits(), "({i},{j})");
            }
        }
    }

    #[test]
    fn rejects_indefinite_matrix() {
        let mut a = SymMatrix::zeros(2);
        a.set(0, 0, 1.0);
        a.set(1, 0, 3.0);
        a.set(0, 1, 3.0);
        a.set(1, 1, 1.0); // minor 1*1 - 9 < 0
        assert!(cholesky_in_place(&mut a).is_err());
    }

    #[test]
    fn lower_multiply_matches_direct_sum() {
        let n = 57;
        let orig = random_spd(n, 3);
        let mut l = orig.clone();
        cholesky_in_place(&mut l).unwrap();
        let w: Vec<f64> = (0..n).map(|k| standard_normal(11, k as u64)).collect();
        let y = lower_multiply(&l, &w);
        for i in 0..n {
            let mut s = 0.0;
            for j in 0..=i {
                s += l.at(i, j) * w[j];
            }
            assert!((y[i] - s).abs() < 1e-12);
        }
    }
}
