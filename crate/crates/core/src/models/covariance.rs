//! Isotropic covariance models with a fractional local index.
//!
//! Every shipped model satisfies, after internal normalization,
//!
//! ```text
//! R(0) - R(t) = t^alpha + o(t^(alpha+gamma)),   alpha in (0,2), gamma > 0,
//! ```
//!
//! and is four times differentiable away from zero with
//! `|R''''(t)| <= c t^(alpha-4)` for small `t`. Raw models generally have a
//! principal coefficient `sigma_c != 1` in front of `t^alpha`; distances are
//! rescaled by `sigma_c^(-1/alpha)` at construction so the coefficient is
//! exactly one, and the raw coefficient is kept for diagnostics. Without the
//! rescale, every log-scale estimate downstream would be biased by
//! `log(sigma_c)/alpha`.

use statrs::function::gamma::gamma;

use crate::error::ModelError;
use crate::num::bessel::bessel_k;

/// Model family and raw parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CovarianceKind {
    /// `R(t) = exp(-c t^alpha)`, `c > 0`, `alpha` in `(0,2)`.
    PoweredExponential { c: f64, alpha: f64 },
    /// Matérn with smoothness `nu` in `(0,1)`, range `rho > 0`, variance
    /// `sigma2 > 0`:
    /// `R(t) = sigma2 * 2^(1-nu)/Gamma(nu) * x^nu K_nu(x)`, `x = sqrt(2 nu) t / rho`.
    Matern { nu: f64, rho: f64, sigma2: f64 },
}

/// Local expansion data: `R(0) - R(t) = sigma_c t^alpha + o(t^(alpha+gamma))`
/// in raw distance units.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalExpansion {
    pub alpha: f64,
    pub gamma: f64,
    pub sigma_c: f64,
}

/// A normalized isotropic covariance model.
#[derive(Clone, Copy, Debug)]
pub struct CovarianceModel {
    kind: CovarianceKind,
    alpha: f64,
    gamma: f64,
    /// raw principal coefficient of `t^alpha`
    sigma_c_raw: f64,
    /// internal distance rescale: `value(t)` evaluates the raw model at
    /// `lambda * t` so the normalized coefficient is 1
    lambda: f64,
    /// Matérn prefactor `sigma2 * 2^(1-nu) / Gamma(nu)`, unused otherwise
    matern_pref: f64,
}

impl CovarianceModel {
    pub fn powered_exponential(c: f64, alpha: f64) -> Result<Self, ModelError> {
        if !(c > 0.0) || !c.is_finite() {
            return Err(ModelError::InvalidParameter(format!("scale c must be positive, got {c}")));
        }
        if !(alpha > 0.0 && alpha < 2.0) {
            return Err(ModelError::InvalidParameter(format!(
                "exponent alpha must lie in (0,2), got {alpha}"
            )));
        }
        // exp(-c t^a) = 1 - c t^a + O(t^{2a}); remainder is o(t^{a+g}) for any g < a
        let gamma_exp = if alpha > 0.2 { alpha - 0.1 } else { 0.5 * alpha };
        Ok(Self {
            kind: CovarianceKind::PoweredExponential { c, alpha },
            alpha,
            gamma: gamma_exp,
            sigma_c_raw: c,
            lambda: c.powf(-1.0 / alpha),
            matern_pref: 0.0,
        })
    }

    pub fn matern(nu: f64, rho: f64, sigma2: f64) -> Result<Self, ModelError> {
        if nu >= 1.0 {
            return Err(ModelError::Unsupported(format!(
                "Matérn smoothness nu = {nu} >= 1 gives a local index alpha >= 2; only nu in (0,1) is supported"
            )));
        }
        if !(nu > 0.0) {
            return Err(ModelError::InvalidParameter(format!("nu must be positive, got {nu}")));
        }
        if !(rho > 0.0 && sigma2 > 0.0) {
            return Err(ModelError::InvalidParameter(format!(
                "range and variance must be positive, got rho={rho}, sigma2={sigma2}"
            )));
        }
        let alpha = 2.0 * nu;
        // R(0)-R(t) = sigma2 * Gamma(1-nu)/Gamma(1+nu) * (x/2)^{2 nu} + O(t^2),
        // x = sqrt(2 nu) t / rho, so the remainder exponent may approach 2 - alpha
        let sigma_c = sigma2 * gamma(1.0 - nu) / gamma(1.0 + nu)
            * ((2.0 * nu).sqrt() / (2.0 * rho)).powf(alpha);
        let gamma_exp = 0.9 * (2.0 - alpha);
        Ok(Self {
            kind: CovarianceKind::Matern { nu, rho, sigma2 },
            alpha,
            gamma: gamma_exp,
            sigma_c_raw: sigma_c,
            lambda: sigma_c.powf(-1.0 / alpha),
            matern_pref: sigma2 * 2f64.powf(1.0 - nu) / gamma(nu),
        })
    }

    pub fn kind(&self) -> CovarianceKind {
        self.kind
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `R(0)`.
    pub fn variance(&self) -> f64 {
        match self.kind {
            CovarianceKind::PoweredExponential { .. } => 1.0,
            CovarianceKind::Matern { sigma2, .. } => sigma2,
        }
    }

    /// Normalized covariance at distance `t >= 0` (not range-checked).
    pub fn value(&self, t: f64) -> f64 {
        let u = self.lambda * t;
        match self.kind {
            CovarianceKind::PoweredExponential { alpha, .. } => (-u.powf(alpha)).exp(),
            CovarianceKind::Matern { nu, rho, sigma2 } => {
                if u == 0.0 {
                    return sigma2;
                }
                let x = (2.0 * nu).sqrt() * u / rho;
                if x > 705.0 {
                    return 0.0; // exp underflow
                }
                self.matern_pref * x.powf(nu) * bessel_k(nu, x)
            }
        }
    }

    /// Checked covariance evaluation; negative distances are a domain error.
    pub fn eval_covariance(&self, t: f64) -> Result<f64, ModelError> {
        if !(t >= 0.0) {
            return Err(ModelError::NegativeDistance(t));
        }
        Ok(self.value(t))
    }

    /// Exponent, remainder exponent, and raw principal coefficient.
    ///
    /// The shipped `gamma` values are fixed constants strictly inside the
    /// provable range: `alpha - 0.1` for the powered exponential (remainder
    /// `O(t^{2 alpha})`), `0.9 (2 - alpha)` for Matérn (remainder `O(t^2)`).
    pub fn local_expansion(&self) -> LocalExpansion {
        LocalExpansion { alpha: self.alpha, gamma: self.gamma, sigma_c: self.sigma_c_raw }
    }

    /// Numerically checks `|R''''(t)| <= c t^(alpha-4)` on a log grid.
    ///
    /// The reference constant is fitted on the upper three quarters of the
    /// log range; the violation ratio is the worst `|R''''| t^(4-alpha)`
    /// anywhere relative to that constant. A ratio drifting above one as
    /// `t -> 0` signals that the fourth derivative grows faster than the
    /// admissible envelope.
    pub fn check_r3_bound(&self, t_min: f64, t_max: f64) -> Result<R3Report, ModelError> {
        if !(t_min > 0.0) || !(t_max > t_min) {
            return Err(ModelError::DegenerateRange(format!("need 0 < t_min < t_max, got [{t_min}, {t_max}]")));
        }
        let samples = 60usize;
        let log_lo = t_min.ln();
        let log_hi = t_max.ln();
        let mut ratios = Vec::with_capacity(samples);
        for i in 0..samples {
            let t = (log_lo + (log_hi - log_lo) * i as f64 / (samples - 1) as f64).exp();
            let d4 = self.fourth_derivative(t)?;
            ratios.push((t, d4.abs() * t.powf(4.0 - self.alpha)));
        }
        let upper_start = samples / 4;
        let fitted_ref = ratios[upper_start..]
            .iter()
            .map(|&(_, r)| r)
            .fold(0.0f64, f64::max);
        if fitted_ref == 0.0 || !fitted_ref.is_finite() {
            return Err(ModelError::Differentiation("fourth-derivative probe returned no finite values".into()));
        }
        let fitted_c = ratios.iter().map(|&(_, r)| r).fold(0.0f64, f64::max);
        let max_violation_ratio = fitted_c / fitted_ref;
        Ok(R3Report {
            fitted_c,
            max_violation_ratio,
            violated: max_violation_ratio > 1.25,
        })
    }

    /// Fourth derivative of the normalized `R` by central differences with
    /// one Richardson step. The relative step `1e-2` balances the `O(h^2)`
    /// truncation against the `eps/h^4` rounding floor of a fourth
    /// difference.
    fn fourth_derivative(&self, t: f64) -> Result<f64, ModelError> {
        let h = t * 1e-2;
        if h < 1e-290 || !h.is_finite() {
            return Err(ModelError::Differentiation(format!("step underflow at t = {t}")));
        }
        let d4 = |hh: f64| -> f64 {
            (self.value(t - 2.0 * hh) - 4.0 * self.value(t - hh) + 6.0 * self.value(t)
                - 4.0 * self.value(t + hh)
                + self.value(t + 2.0 * hh))
                / hh.powi(4)
        };
        let coarse = d4(h);
        let fine = d4(0.5 * h);
        let value = (4.0 * fine - coarse) / 3.0;
        if !value.is_finite() {
            return Err(ModelError::Differentiation(format!("non-finite fourth difference at t = {t}")));
        }
        Ok(value)
    }

    /// Short description for file headers and provenance.
    pub fn describe(&self) -> String {
        match self.kind {
            CovarianceKind::PoweredExponential { c, alpha } => {
                format!("powered-exponential(c={c}, alpha={alpha})")
            }
            CovarianceKind::Matern { nu, rho, sigma2 } => {
                format!("matern(nu={nu}, rho={rho}, sigma2={sigma2})")
            }
        }
    }
}

/// Result of the fourth-derivative envelope check.
#[derive(Clone, Copy, Debug)]
pub struct R3Report {
    /// smallest `c` with `|R''''(t)| <= c t^(alpha-4)` over the probed grid
    pub fitted_c: f64,
    /// worst ratio against the constant fitted away from the origin
    pub max_violation_ratio: f64,
    pub violated: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powered_exponential_basics() {
        let m = CovarianceModel::powered_exponential(1.0, 1.0).unwrap();
        assert_eq!(m.eval_covariance(0.0).unwrap(), 1.0);
        assert!((m.eval_covariance(1.0).unwrap() - (-1.0f64).exp()).abs() < 1e-15);
        assert!(m.eval_covariance(-0.5).is_err());
        let le = m.local_expansion();
        assert_eq!(le.alpha, 1.0);
        assert!((le.gamma - 0.9).abs() < 1e-12);
        assert_eq!(le.sigma_c, 1.0);
    }

    #[test]
    fn powered_exponential_normalizes_scale() {
        // c != 1 must be folded into a distance rescale: R(t) = exp(-t^alpha)
        let m = CovarianceModel::powered_exponential(3.7, 1.4).unwrap();
        for &t in &[0.01, 0.3, 1.0, 2.5] {
            assert!((m.value(t) - (-t.powf(1.4)).exp()).abs() < 1e-14);
        }
        assert!((m.local_expansion().sigma_c - 3.7).abs() < 1e-14);
    }

    #[test]
    fn local_expansion_examples() {
        let m = CovarianceModel::powered_exponential(1.0, 1.5).unwrap();
        let le = m.local_expansion();
        assert!((le.alpha - 1.5).abs() < 1e-12);
        assert!((le.gamma - 1.4).abs() < 1e-12);
        assert!(le.gamma < le.alpha); // provable range for this family

        let m = CovarianceModel::matern(0.25, 0.7, 1.0).unwrap();
        assert!((m.local_expansion().alpha - 0.5).abs() < 1e-12);
    }

    #[test]
    fn matern_half_is_exponential() {
        // closed form at nu = 1/2 before normalization: exp(-t/rho); after
        // normalization the model is exp(-t^alpha) with alpha = 1
        let m = CovarianceModel::matern(0.5, 2.0, 1.0).unwrap();
        for &t in &[1e-3, 0.1, 0.5, 1.0, 3.0] {
            assert!(
                (m.value(t) - (-t).exp()).abs() < 1e-10,
                "t={t}: {} vs {}",
                m.value(t),
                (-t).exp()
            );
        }
    }

    #[test]
    fn matern_normalized_expansion_has_unit_coefficient() {
        // log-log fit of R(0)-R(t) on t in [1e-6, 1e-3] recovers slope alpha
        // and unit coefficient
        for &nu in &[0.25, 0.5, 0.8] {
            let m = CovarianceModel::matern(nu, 0.7, 2.3).unwrap();
            let alpha = m.alpha();
            let mut pts = Vec::new();
            for i in 0..20 {
                let t = 1e-6 * (1e3f64).powf(i as f64 / 19.0);
                pts.push((t.ln(), (m.variance() - m.value(t)).ln()));
            }
            let n = pts.len() as f64;
            let sx: f64 = pts.iter().map(|p| p.0).sum();
            let sy: f64 = pts.iter().map(|p| p.1).sum();
            let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
            let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
            let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
            let intercept = (sy - slope * sx) / n;
            assert!((slope - alpha).abs() < 0.01, "nu={nu}: slope {slope} vs alpha {alpha}");
            assert!(intercept.abs() < 0.02, "nu={nu}: log-coefficient {intercept}");
        }
    }

    #[test]
    fn matern_rejects_large_nu() {
        assert!(matches!(
            CovarianceModel::matern(1.0, 1.0, 1.0),
            Err(ModelError::Unsupported(_))
        ));
        assert!(CovarianceModel::matern(1.5, 1.0, 1.0).is_err());
    }

    #[test]
    fn r3_bound_holds_for_exponential_family() {
        // closed-form oracle at alpha = 1: R = exp(-t), R'''' = exp(-t),
        // so the ratio is exp(-t) t^3 and the fitted c is finite
        let m = CovarianceModel::powered_exponential(1.0, 1.0).unwrap();
        let report = m.check_r3_bound(1e-4, 1.0).unwrap();
        assert!(report.fitted_c.is_finite() && report.fitted_c > 0.0);
        assert!(!report.violated, "ratio {}", report.max_violation_ratio);
        // oracle comparison at a few interior points
        for &t in &[0.01, 0.1, 0.5] {
            let d4 = m.fourth_derivative(t).unwrap();
            assert!(
                ((d4 - (-t).exp()) / (-t).exp()).abs() < 1e-5,
                "t={t}: {d4} vs {}",
                (-t).exp()
            );
        }
    }

    #[test]
    fn r3_bound_holds_near_alpha_two() {
        let m = CovarianceModel::powered_exponential(1.0, 1.9).unwrap();
        let report = m.check_r3_bound(1e-4, 1.0).unwrap();
        assert!(!report.violated, "ratio {}", report.max_violation_ratio);
    }

    #[test]
    fn r3_degenerate_range_is_an_error() {
        let m = CovarianceModel::powered_exponential(1.0, 1.0).unwrap();
        assert!(matches!(m.check_r3_bound(0.5, 0.5), Err(ModelError::DegenerateRange(_))));
    }

    #[test]
    fn matern_r3_bound_numerical() {
        let m = CovarianceModel::matern(0.4, 1.0, 1.0).unwrap();
        let report = m.check_r3_bound(1e-3, 1.0).unwrap();
        assert!(!report.violated, "ratio {}", report.max_violation_ratio);
    }
}
