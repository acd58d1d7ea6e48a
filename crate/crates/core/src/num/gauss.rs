//! Gauss–Legendre nodes and weights.

/// Nodes and weights of the `q`-point Gauss–Legendre rule on `[-1, 1]`.
///
/// Newton iteration on the Legendre polynomial from the Chebyshev initial
/// guess; exact for polynomials of degree `2q - 1`.
pub fn gauss_legendre(q: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(q >= 1);
    let mut nodes = vec![0.0; q];
    let mut weights = vec![0.0; q];
    let m = (q + 1) / 2;
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (q as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_derivative(q, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[q - 1 - i] = x;
        weights[i] = w;
        weights[q - 1 - i] = w;
    }
    if q % 2 == 1 {
        nodes[q / 2] = 0.0;
        let (_, d) = legendre_and_derivative(q, 0.0);
        weights[q / 2] = 2.0 / (d * d);
    }
    (nodes, weights)
}

/// Same rule mapped to `[0, 1]`.
pub fn gauss_legendre_unit(q: usize) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(q);
    (
        x.iter().map(|&t| 0.5 * (t + 1.0)).collect(),
        w.iter().map(|&v| 0.5 * v).collect(),
    )
}

fn legendre_and_derivative(q: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=q {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = q as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_interval_length() {
        for q in [1, 2, 5, 16, 64] {
            let (_, w) = gauss_legendre(q);
            let s: f64 = w.iter().sum();
            assert!((s - 2.0).abs() < 1e-13, "q={q}: sum {s}");
        }
    }

    #[test]
    fn integrates_monomials_exactly() {
        let q = 8;
        let (x, w) = gauss_legendre(q);
        for k in 0..2 * q {
            let approx: f64 = x.iter().zip(&w).map(|(&t, &v)| v * t.powi(k as i32)).sum();
            let exact = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
            assert!((approx - exact).abs() < 1e-12, "degree {k}");
        }
    }

    #[test]
    fn unit_interval_rule_integrates_exp() {
        let (x, w) = gauss_legendre_unit(12);
        let approx: f64 = x.iter().zip(&w).map(|(&t, &v)| v * t.exp()).sum();
        assert!((approx - (std::f64::consts::E - 1.0)).abs() < 1e-14);
    }
}
