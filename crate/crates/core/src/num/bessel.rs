//! Modified Bessel function of the second kind, fractional order.
//!
//! Only orders in `(0, 1)` are needed (Matérn smoothness below one). Temme's
//! series covers `x <= 2`; Steed's continued fraction (CF2) covers `x > 2`.
//! Both branches produce the pair `(K_mu, K_{mu+1})` for `|mu| <= 1/2`, and
//! orders in `(1/2, 1)` are reached through `K_{mu+1}` with `mu = nu - 1`,
//! using the evenness `K_{-mu} = K_mu`.

use statrs::function::gamma::gamma;

const EPS: f64 = 1e-16;
const MAX_ITER: usize = 20_000;

/// `K_nu(x)` for `nu` in `(0, 1)` and `x > 0`.
pub fn bessel_k(nu: f64, x: f64) -> f64 {
    assert!(
        (0.0..1.0).contains(&nu) && nu > 0.0,
        "order must lie in (0,1), got {nu}"
    );
    assert!(x > 0.0, "argument must be positive, got {x}");
    if nu <= 0.5 {
        k_pair(nu, x).0
    } else {
        // K_nu = K_{(nu-1)+1} with |nu - 1| <= 1/2; K is even in its order.
        k_pair(nu - 1.0, x).1
    }
}

/// Returns `(K_mu(x), K_{mu+1}(x))` for `|mu| <= 1/2`.
fn k_pair(mu: f64, x: f64) -> (f64, f64) {
    if x <= 2.0 {
        k_pair_series(mu, x)
    } else {
        k_pair_cf2(mu, x)
    }
}

/// Temme's series, `x <= 2`.
fn k_pair_series(mu: f64, x: f64) -> (f64, f64) {
    let x2 = 0.5 * x;
    let pimu = std::f64::consts::PI * mu;
    let fact = if pimu.abs() < 1e-30 { 1.0 } else { pimu / pimu.sin() };
    let d = -x2.ln();
    let e = mu * d;
    let fact2 = if e.abs() < 1e-30 { 1.0 } else { e.sinh() / e };

    // gam1 = [1/Gamma(1-mu) - 1/Gamma(1+mu)] / (2 mu),
    // gam2 = [1/Gamma(1-mu) + 1/Gamma(1+mu)] / 2.
    let gampl = 1.0 / gamma(1.0 + mu);
    let gammi = 1.0 / gamma(1.0 - mu);
    let gam1 = if mu.abs() < 1e-8 {
        // limit: Euler's constant, plus the O(mu^2) correction
        0.577_215_664_901_532_9 + mu * mu * 1.05
    } else {
        (gammi - gampl) / (2.0 * mu)
    };
    let gam2 = 0.5 * (gammi + gampl);

    let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
    let mut sum = ff;
    let e_exp = e.exp();
    let mut p = 0.5 * e_exp / gampl;
    let mut q = 0.5 / (e_exp * gammi);
    let mut c = 1.0;
    let x2sq = x2 * x2;
    let mut sum1 = p;
    for i in 1..=MAX_ITER {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu * mu);
        c *= x2sq / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * ff;
        sum += del;
        let del1 = c * (p - fi * ff);
        sum1 += del1;
        if del.abs() < sum.abs() * EPS {
            break;
        }
    }
    (sum, sum1 * 2.0 / x)
}

/// Steed's continued fraction CF2, `x > 2`.
fn k_pair_cf2(mu: f64, x: f64) -> (f64, f64) {
    let a1 = 0.25 - mu * mu;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = delh;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut a = -a1;
    let mut c = a1;
    let mut q = c;
    let mut s = 1.0 + q * delh;
    for i in 2..=MAX_ITER {
        a -= 2.0 * (i as f64 - 1.0);
        c = -a * c / i as f64;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    let h = a1 * h;
    let rkmu = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp() / s;
    let rk1 = rkmu * (mu + x + 0.5 - h) / x;
    (rkmu, rk1)
}
