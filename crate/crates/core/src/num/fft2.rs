//! Two-dimensional FFT on row-major complex grids.
//!
//! Rows are transformed in place, then columns through gather/scatter. Rows
//! and columns are independent, so both loops parallelize without changing
//! any summation order.

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

use crate::exec;

pub struct Fft2 {
    nx: usize,
    ny: usize,
    fwd_x: Arc<dyn Fft<f64>>,
    fwd_y: Arc<dyn Fft<f64>>,
    inv_x: Arc<dyn Fft<f64>>,
    inv_y: Arc<dyn Fft<f64>>,
}

impl Fft2 {
    pub fn new(nx: usize, ny: usize) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            nx,
            ny,
            fwd_x: planner.plan_fft_forward(nx),
            fwd_y: planner.plan_fft_forward(ny),
            inv_x: planner.plan_fft_inverse(nx),
            inv_y: planner.plan_fft_inverse(ny),
        }
    }

    /// Unnormalized forward transform.
    pub fn forward(&self, data: &mut [Complex64]) {
        self.transform(data, true);
    }

    /// Inverse transform, scaled by `1/(nx*ny)` so `inverse(forward(x)) = x`.
    pub fn inverse(&self, data: &mut [Complex64]) {
        self.transform(data, false);
        let scale = 1.0 / (self.nx * self.ny) as f64;
        for v in data.iter_mut() {
            *v *= scale;
        }
    }

    fn transform(&self, data: &mut [Complex64], forward: bool) {
        assert_eq!(data.len(), self.nx * self.ny);
        let (fx, fy) = if forward {
            (self.fwd_x.clone(), self.fwd_y.clone())
        } else {
            (self.inv_x.clone(), self.inv_y.clone())
        };
        exec::for_each_row(data, self.nx, |_, row| fx.process(row));
        let (nx, ny) = (self.nx, self.ny);
        let cols = {
            let data: &[Complex64] = data;
            exec::map_indexed(nx, |i| {
                let mut col: Vec<Complex64> = (0..ny).map(|j| data[j * nx + i]).collect();
                fy.process(&mut col);
                col
            })
        };
        for (i, col) in cols.iter().enumerate() {
            for (j, &v) in col.iter().enumerate() {
                data[j * nx + i] = v;
            }
        }
    }
}
