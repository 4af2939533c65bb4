//! Relaxation kernels and their decay certificates.
//!
//! A kernel `g` is admissible when it is positive, differentiable,
//! nonincreasing, and leaves a positive mass deficit
//!
//! ```text
//!   l  =  1 - int_0^inf g(s) ds  >  0 .
//! ```
//!
//! A decay certificate is a pair `(xi, p)` with `p` in `[1, 3/2)` and `xi`
//! nonnegative nonincreasing such that
//!
//! ```text
//!   g'(t)  <=  -xi(t) * g(t)^p        for all t >= 0 ,
//! ```
//!
//! which is the hypothesis that later converts the energy-dissipation
//! identity into an explicit decay envelope. Each closed-form family below
//! carries a canonical certificate in which the inequality holds with
//! equality; custom pairs can be supplied and are re-validated pointwise.

use crate::error::{Error, Result};
use crate::quad::adaptive_simpson;
use statrs::function::gamma::{gamma, gamma_ur};

/// Upper admissible bound for the certificate exponent `p`.
pub const P_SUP: f64 = 1.5;

/// Relative slack allowed when revalidating a certificate pointwise.
pub const CERT_SLACK_REL: f64 = 1e-12;

/// Relative slack for certificates built from tabulated samples, where the
/// kernel derivative comes from second-order finite differences.
pub const CERT_SLACK_REL_TABULATED: f64 = 1e-10;

/// Relaxation kernel families.
///
/// `PowerLaw` is `a (1+t)^-nu` with `nu > 1`; `StretchedExp` is
/// `a exp(-b (1+t)^alpha)`; `PureExp` is `a exp(-b t)`; `Tabulated` holds
/// positive nonincreasing samples on an increasing time grid starting at 0
/// and is treated as zero beyond its last sample.
#[derive(Debug, Clone, PartialEq)]
pub enum RelaxationKernel {
    PowerLaw { a: f64, nu: f64 },
    StretchedExp { a: f64, b: f64, alpha: f64 },
    PureExp { a: f64, b: f64 },
    Tabulated { times: Vec<f64>, values: Vec<f64> },
}

/// Shape of the certificate function `xi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum XiFunction {
    Constant(f64),
    /// `xi(t) = coef * (1+t)^beta`, with `beta <= 0` for admissibility.
    Power { coef: f64, beta: f64 },
}

impl XiFunction {
    pub fn eval(&self, t: f64) -> f64 {
        match *self {
            XiFunction::Constant(c) => c,
            XiFunction::Power { coef, beta } => coef * (1.0 + t).powf(beta),
        }
    }

    /// `int_0^t xi(s)^q ds`, in closed form.
    pub fn integral_pow(&self, q: f64, t: f64) -> f64 {
        match *self {
            XiFunction::Constant(c) => c.powf(q) * t,
            XiFunction::Power { coef, beta } => {
                let e = beta * q;
                if (e + 1.0).abs() < 1e-14 {
                    coef.powf(q) * (1.0 + t).ln()
                } else {
                    coef.powf(q) * ((1.0 + t).powf(e + 1.0) - 1.0) / (e + 1.0)
                }
            }
        }
    }

    /// `int_0^t xi(s) ds`.
    pub fn integral(&self, t: f64) -> f64 {
        self.integral_pow(1.0, t)
    }

    pub fn is_nonincreasing(&self) -> bool {
        match *self {
            XiFunction::Constant(c) => c >= 0.0,
            XiFunction::Power { coef, beta } => coef >= 0.0 && beta <= 0.0,
        }
    }

    /// Exponent `e` such that `xi(t)^q ~ t^(e)` for large `t`.
    pub fn tail_exponent(&self, q: f64) -> f64 {
        match *self {
            XiFunction::Constant(_) => 0.0,
            XiFunction::Power { beta, .. } => beta * q,
        }
    }
}

/// Decay certificate `(l, xi, p)` for an admissible kernel.
#[derive(Debug, Clone)]
pub struct KernelCertificate {
    /// Mass deficit `1 - int_0^inf g`.
    pub l: f64,
    /// Exponent in `g' <= -xi g^p`; `1 <= p < 3/2`.
    pub p: f64,
    pub xi: XiFunction,
    /// How the pair was obtained: a family name or `"custom"`.
    pub derivation: String,
}

impl RelaxationKernel {
    /// Validated constructor for the power-law family `a (1+t)^-nu`.
    pub fn power_law(a: f64, nu: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "power-law amplitude must be positive and finite, got {a}"
            )));
        }
        if !nu.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "power-law exponent must be finite, got {nu}"
            )));
        }
        if nu <= 1.0 {
            return Err(Error::DivergentMass(format!(
                "power-law kernel needs exponent > 1 for finite mass, got {nu}"
            )));
        }
        Ok(RelaxationKernel::PowerLaw { a, nu })
    }

    /// Validated constructor for `a exp(-b (1+t)^alpha)`.
    pub fn stretched_exp(a: f64, b: f64, alpha: f64) -> Result<Self> {
        for (name, v) in [("amplitude", a), ("rate", b), ("shape", alpha)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "stretched-exp {name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(RelaxationKernel::StretchedExp { a, b, alpha })
    }

    /// Validated constructor for `a exp(-b t)`.
    pub fn pure_exp(a: f64, b: f64) -> Result<Self> {
        for (name, v) in [("amplitude", a), ("rate", b)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "pure-exp {name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(RelaxationKernel::PureExp { a, b })
    }

    /// Validated constructor from samples; requires an increasing grid
    /// starting at 0 and positive nonincreasing values.
    pub fn tabulated(times: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if times.len() != values.len() {
            return Err(Error::ShapeMismatch(format!(
                "tabulated kernel has {} stamps but {} values",
                times.len(),
                values.len()
            )));
        }
        if times.len() < 3 {
            return Err(Error::InvalidParameter(
                "tabulated kernel needs at least 3 samples".into(),
            ));
        }
        if times[0] != 0.0 {
            return Err(Error::InvalidParameter(format!(
                "tabulated kernel grid must start at 0, got {}",
                times[0]
            )));
        }
        if times.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidParameter(
                "tabulated kernel grid must be strictly increasing".into(),
            ));
        }
        if values.iter().any(|&v| !(v > 0.0) || !v.is_finite()) {
            return Err(Error::HypothesisG1(
                "tabulated kernel values must be positive".into(),
            ));
        }
        if values.windows(2).any(|w| w[1] > w[0]) {
            return Err(Error::InvalidParameter(
                "tabulated kernel values must be nonincreasing".into(),
            ));
        }
        Ok(RelaxationKernel::Tabulated { times, values })
    }

    /// Kernel value at lag `t >= 0`.
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            RelaxationKernel::PowerLaw { a, nu } => a * (1.0 + t).powf(-nu),
            RelaxationKernel::StretchedExp { a, b, alpha } => {
                a * (-b * (1.0 + t).powf(*alpha)).exp()
            }
            RelaxationKernel::PureExp { a, b } => a * (-b * t).exp(),
            RelaxationKernel::Tabulated { times, values } => {
                interp_linear(times, values, t).unwrap_or(0.0)
            }
        }
    }

    /// Kernel derivative at lag `t`; tabulated kernels use second-order
    /// finite differences on their own grid.
    pub fn eval_deriv(&self, t: f64) -> f64 {
        match self {
            RelaxationKernel::PowerLaw { a, nu } => -a * nu * (1.0 + t).powf(-nu - 1.0),
            RelaxationKernel::StretchedExp { a, b, alpha } => {
                -a * b * alpha
                    * (1.0 + t).powf(alpha - 1.0)
                    * (-b * (1.0 + t).powf(*alpha)).exp()
            }
            RelaxationKernel::PureExp { a, b } => -a * b * (-b * t).exp(),
            RelaxationKernel::Tabulated { times, values } => {
                tabulated_deriv(times, values, t)
            }
        }
    }

    pub fn at_zero(&self) -> f64 {
        self.eval(0.0)
    }

    /// `int_0^t g(s) ds` in closed form (trapezoid on the table for
    /// tabulated kernels).
    pub fn mass_upto(&self, t: f64) -> f64 {
        match self {
            RelaxationKernel::PowerLaw { a, nu } => {
                a / (nu - 1.0) * (1.0 - (1.0 + t).powf(1.0 - nu))
            }
            RelaxationKernel::StretchedExp { a, b, alpha } => {
                let s = 1.0 / alpha;
                let scale = a / alpha * b.powf(-s) * gamma(s);
                scale * (gamma_ur(s, *b) - gamma_ur(s, b * (1.0 + t).powf(*alpha)))
            }
            RelaxationKernel::PureExp { a, b } => a / b * (1.0 - (-b * t).exp()),
            RelaxationKernel::Tabulated { times, values } => {
                let mut acc = 0.0;
                for i in 1..times.len() {
                    if times[i] <= t {
                        acc += 0.5 * (values[i] + values[i - 1]) * (times[i] - times[i - 1]);
                    } else {
                        let g_t = interp_linear(times, values, t).unwrap_or(0.0);
                        acc += 0.5 * (g_t + values[i - 1]) * (t - times[i - 1]);
                        break;
                    }
                }
                acc
            }
        }
    }

    /// Total mass `int_0^inf g`, in closed form where the family admits one.
    pub fn total_mass(&self) -> f64 {
        match self {
            RelaxationKernel::PowerLaw { a, nu } => a / (nu - 1.0),
            RelaxationKernel::StretchedExp { a, b, alpha } => {
                let s = 1.0 / alpha;
                a / alpha * b.powf(-s) * gamma(s) * gamma_ur(s, *b)
            }
            RelaxationKernel::PureExp { a, b } => a / b,
            RelaxationKernel::Tabulated { times, .. } => {
                self.mass_upto(*times.last().expect("validated nonempty"))
            }
        }
    }

    /// Total mass by adaptive quadrature, truncated where the kernel has
    /// decayed below `1e-14 * g(0)`. Independent cross-check of
    /// [`Self::total_mass`].
    pub fn total_mass_numeric(&self, tol: f64) -> f64 {
        let g0 = self.at_zero();
        let mut t_cut = 1.0;
        while self.eval(t_cut) >= 1e-14 * g0 && t_cut < 1e12 {
            t_cut *= 2.0;
        }
        if let RelaxationKernel::Tabulated { times, .. } = self {
            t_cut = t_cut.min(*times.last().expect("validated nonempty"));
        }
        adaptive_simpson(&|s| self.eval(s), 0.0, t_cut, tol).0
    }

    /// Exact `int g(tau) dtau` over the lag interval `[lag0, lag1]`.
    ///
    /// This is the weight a history subinterval contributes to the memory
    /// convolution. Using antiderivative differences (instead of a midpoint
    /// value times the width) keeps the per-step weights consistent: summed
    /// over a partition they reproduce `int_0^t g` exactly, which is what
    /// makes the discrete energy decrement sign-exact.
    pub fn interval_mass(&self, lag0: f64, lag1: f64) -> f64 {
        debug_assert!(lag0 <= lag1, "interval_mass wants lag0 <= lag1");
        match self {
            RelaxationKernel::Tabulated { .. } => {
                self.eval(0.5 * (lag0 + lag1)) * (lag1 - lag0)
            }
            _ => self.mass_upto(lag1) - self.mass_upto(lag0),
        }
    }

    fn family_name(&self) -> &'static str {
        match self {
            RelaxationKernel::PowerLaw { .. } => "power_law",
            RelaxationKernel::StretchedExp { .. } => "stretched_exp",
            RelaxationKernel::PureExp { .. } => "pure_exp",
            RelaxationKernel::Tabulated { .. } => "tabulated",
        }
    }
}

/// Mass deficit `l = 1 - int_0^inf g`; fails unless `0 < l <= 1`.
pub fn kernel_mass_deficit(kernel: &RelaxationKernel) -> Result<f64> {
    let mass = kernel.total_mass();
    let l = 1.0 - mass;
    if !(l > 0.0) {
        return Err(Error::HypothesisG1(format!(
            "kernel mass {mass} leaves no deficit (need int g < 1)"
        )));
    }
    Ok(l)
}

/// Canonical decay certificate for a kernel.
///
/// Families certify with equality: power law gives `p = (nu+1)/nu` and the
/// constant `xi = nu a^(-1/nu)`; the exponential families give `p = 1`.
/// A stretched exponential with `alpha > 1` has increasing pointwise rate
/// `b alpha (1+t)^(alpha-1)`, so it is certified with the constant lower
/// bound `b alpha` instead. Tabulated kernels get the largest constant `xi`
/// admissible for the trial exponent `p = 1`; use [`certify_g2_with`] for a
/// different trial `p`.
pub fn certify_g2(kernel: &RelaxationKernel) -> Result<KernelCertificate> {
    match kernel {
        RelaxationKernel::PowerLaw { a, nu } => {
            let p = (nu + 1.0) / nu;
            if p >= P_SUP {
                return Err(Error::HypothesisG2(format!(
                    "power-law exponent {nu} gives p = {p} >= {P_SUP}; need nu > 2"
                )));
            }
            let xi = XiFunction::Constant(nu * a.powf(-1.0 / nu));
            finish_certificate(kernel, p, xi)
        }
        RelaxationKernel::StretchedExp { b, alpha, .. } => {
            let xi = if *alpha <= 1.0 {
                XiFunction::Power {
                    coef: b * alpha,
                    beta: alpha - 1.0,
                }
            } else {
                XiFunction::Constant(b * alpha)
            };
            finish_certificate(kernel, 1.0, xi)
        }
        RelaxationKernel::PureExp { b, .. } => {
            finish_certificate(kernel, 1.0, XiFunction::Constant(*b))
        }
        RelaxationKernel::Tabulated { .. } => certify_g2_with(kernel, 1.0),
    }
}

/// Certificate for a tabulated kernel at a caller-chosen trial exponent:
/// the largest constant `xi` with `g' <= -xi g^p` across the samples.
pub fn certify_g2_with(kernel: &RelaxationKernel, p: f64) -> Result<KernelCertificate> {
    check_p(p)?;
    let (times, values) = match kernel {
        RelaxationKernel::Tabulated { times, values } => (times, values),
        _ => {
            return Err(Error::InvalidParameter(
                "trial-exponent certification applies to tabulated kernels; \
                 closed-form families have canonical certificates"
                    .into(),
            ))
        }
    };
    let mut xi_max = f64::INFINITY;
    for (i, &t) in times.iter().enumerate() {
        let d = tabulated_deriv(times, values, t);
        let ratio = -d / values[i].powf(p);
        if ratio < xi_max {
            xi_max = ratio;
        }
    }
    if !(xi_max > 0.0) || !xi_max.is_finite() {
        return Err(Error::HypothesisG2(format!(
            "no positive constant xi satisfies the decay inequality at p = {p}"
        )));
    }
    finish_certificate(kernel, p, XiFunction::Constant(xi_max))
}

impl KernelCertificate {
    /// Build a certificate from a caller-supplied `(xi, p)` pair; the pair
    /// is revalidated pointwise against the kernel before being accepted.
    pub fn custom(kernel: &RelaxationKernel, p: f64, xi: XiFunction) -> Result<Self> {
        check_p(p)?;
        let l = kernel_mass_deficit(kernel)?;
        let cert = KernelCertificate {
            l,
            p,
            xi,
            derivation: "custom".into(),
        };
        validate_certificate(kernel, &cert, 2_000, 1e3)?;
        Ok(cert)
    }
}

fn check_p(p: f64) -> Result<()> {
    if !(1.0..P_SUP).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "certificate exponent must lie in [1, {P_SUP}), got {p}"
        )));
    }
    Ok(())
}

fn finish_certificate(
    kernel: &RelaxationKernel,
    p: f64,
    xi: XiFunction,
) -> Result<KernelCertificate> {
    let l = kernel_mass_deficit(kernel)?;
    let cert = KernelCertificate {
        l,
        p,
        xi,
        derivation: kernel.family_name().into(),
    };
    validate_certificate(kernel, &cert, 2_000, 1e3)?;
    Ok(cert)
}

/// Pointwise revalidation of `g' + xi g^p <= slack` on a log-spaced grid
/// over `[0, t_max]` (the kernel's own grid for tabulated kernels, whose
/// finite-difference derivative earns a looser slack).
pub fn validate_certificate(
    kernel: &RelaxationKernel,
    cert: &KernelCertificate,
    n_samples: usize,
    t_max: f64,
) -> Result<()> {
    check_p(cert.p)?;
    if !cert.xi.is_nonincreasing() {
        return Err(Error::HypothesisG2(
            "certificate xi must be nonnegative and nonincreasing".into(),
        ));
    }
    let slack = certificate_slack(kernel, cert, n_samples, t_max);
    let tol = match kernel {
        RelaxationKernel::Tabulated { .. } => CERT_SLACK_REL_TABULATED,
        _ => CERT_SLACK_REL,
    } * kernel.at_zero();
    if slack > tol {
        return Err(Error::HypothesisG2(format!(
            "decay inequality violated: max slack {slack:.3e} exceeds {tol:.3e}"
        )));
    }
    Ok(())
}

/// Largest pointwise value of `g'(t) + xi(t) g(t)^p` over the validation
/// grid; nonpositive means the certificate inequality holds there.
pub fn certificate_slack(
    kernel: &RelaxationKernel,
    cert: &KernelCertificate,
    n_samples: usize,
    t_max: f64,
) -> f64 {
    let grid = match kernel {
        RelaxationKernel::Tabulated { times, .. } => times.clone(),
        _ => log_grid(n_samples, t_max),
    };
    let mut worst = f64::NEG_INFINITY;
    for &t in &grid {
        let s = kernel.eval_deriv(t) + cert.xi.eval(t) * kernel.eval(t).powf(cert.p);
        if s > worst {
            worst = s;
        }
    }
    worst
}

/// `{0} ∪ geometric(t_max * 1e-8 .. t_max)` with `n` points in total.
pub fn log_grid(n: usize, t_max: f64) -> Vec<f64> {
    assert!(n >= 2 && t_max > 0.0);
    let lo = (t_max * 1e-8).ln();
    let hi = t_max.ln();
    let mut grid = Vec::with_capacity(n);
    grid.push(0.0);
    for i in 0..n - 1 {
        let x = lo + (hi - lo) * i as f64 / (n - 2).max(1) as f64;
        grid.push(x.exp());
    }
    grid
}

fn interp_linear(xs: &[f64], ys: &[f64], x: f64) -> Option<f64> {
    if x < xs[0] || x > *xs.last().unwrap() {
        return None;
    }
    let idx = match xs.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
        Ok(i) => return Some(ys[i]),
        Err(i) => i,
    };
    let (x0, x1) = (xs[idx - 1], xs[idx]);
    let w = (x - x0) / (x1 - x0);
    Some(ys[idx - 1] * (1.0 - w) + ys[idx] * w)
}

/// Second-order finite-difference derivative of a sampled function on its
/// own (possibly nonuniform) grid; linear interpolation of the endpoint
/// stencils between samples.
fn tabulated_deriv(times: &[f64], values: &[f64], t: f64) -> f64 {
    let n = times.len();
    let node_deriv = |i: usize| -> f64 {
        if i == 0 {
            let (h1, h2) = (times[1] - times[0], times[2] - times[1]);
            // one-sided three-point stencil
            let d = -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * values[0]
                + (h1 + h2) / (h1 * h2) * values[1]
                - h1 / (h2 * (h1 + h2)) * values[2];
            d
        } else if i == n - 1 {
            let (h1, h2) = (times[n - 2] - times[n - 3], times[n - 1] - times[n - 2]);
            let d = h2 / (h1 * (h1 + h2)) * values[n - 3]
                - (h1 + h2) / (h1 * h2) * values[n - 2]
                + (h1 + 2.0 * h2) / (h2 * (h1 + h2)) * values[n - 1];
            d
        } else {
            let (h1, h2) = (times[i] - times[i - 1], times[i + 1] - times[i]);
            -h2 / (h1 * (h1 + h2)) * values[i - 1] + (h2 - h1) / (h1 * h2) * values[i]
                + h1 / (h2 * (h1 + h2)) * values[i + 1]
        }
    };
    match times.binary_search_by(|v| v.partial_cmp(&t).unwrap()) {
        Ok(i) => node_deriv(i),
        Err(i) if i == 0 || i == n => 0.0,
        Err(i) => {
            let w = (t - times[i - 1]) / (times[i] - times[i - 1]);
            node_deriv(i - 1) * (1.0 - w) + node_deriv(i) * w
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1e-300)
    }

    #[test]
    fn power_law_rejects_divergent_and_negative() {
        assert!(matches!(
            RelaxationKernel::power_law(1.0, 1.0),
            Err(Error::DivergentMass(_))
        ));
        assert!(matches!(
            RelaxationKernel::power_law(-0.3, 3.0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn stretched_exp_value_at_zero() {
        let k = RelaxationKernel::stretched_exp(1.0, 1.0, 0.5).unwrap();
        assert!(rel_close(k.at_zero(), (-1.0f64).exp(), 1e-15));
    }

    #[test]
    fn closed_form_masses_match_quadrature() {
        let kernels = [
            RelaxationKernel::power_law(1.0, 3.0).unwrap(),
            RelaxationKernel::power_law(0.7, 2.4).unwrap(),
            RelaxationKernel::pure_exp(0.8, 2.0).unwrap(),
            RelaxationKernel::stretched_exp(0.5, 1.0, 0.5).unwrap(),
            RelaxationKernel::stretched_exp(0.4, 0.7, 1.3).unwrap(),
        ];
        for k in &kernels {
            let closed = k.total_mass();
            let numeric = k.total_mass_numeric(1e-12);
            assert!(
                rel_close(closed, numeric, 1e-6),
                "mass mismatch for {k:?}: closed {closed}, quadrature {numeric}"
            );
        }
    }

    #[test]
    fn mass_deficit_power_law_halves() {
        // a/(nu-1) = 1/2 leaves deficit 1/2
        let k = RelaxationKernel::power_law(1.0, 3.0).unwrap();
        assert!((kernel_mass_deficit(&k).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn mass_deficit_rejects_heavy_kernel() {
        let k = RelaxationKernel::power_law(4.0, 3.0).unwrap(); // mass 2
        assert!(matches!(kernel_mass_deficit(&k), Err(Error::HypothesisG1(_))));
    }

    #[test]
    fn mass_upto_is_consistent_with_interval_masses() {
        let k = RelaxationKernel::stretched_exp(0.5, 1.0, 0.5).unwrap();
        // partition [0, 7] and check the interval masses telescope
        let cuts: Vec<f64> = (0..=20).map(|i| 7.0 * i as f64 / 20.0).collect();
        let summed: f64 = cuts.windows(2).map(|w| k.interval_mass(w[0], w[1])).sum();
        assert!(rel_close(summed, k.mass_upto(7.0), 1e-12));
    }

    #[test]
    fn certify_power_law_canonical_values() {
        let k = RelaxationKernel::power_law(1.0, 3.0).unwrap();
        let cert = certify_g2(&k).unwrap();
        assert_eq!(cert.p, 4.0 / 3.0);
        assert_eq!(cert.xi, XiFunction::Constant(3.0));
        assert!((cert.l - 0.5).abs() < 1e-15);
    }

    #[test]
    fn certify_power_law_equality_has_machine_slack() {
        let k = RelaxationKernel::power_law(1.0, 3.0).unwrap();
        let cert = certify_g2(&k).unwrap();
        let slack = certificate_slack(&k, &cert, 10_000, 1e3);
        assert!(slack <= 1e-12 * k.at_zero(), "slack {slack}");
    }

    #[test]
    fn certify_rejects_shallow_power_law() {
        // nu = 1.5 gives p = 5/3 >= 3/2
        let k = RelaxationKernel::power_law(0.2, 1.5).unwrap();
        assert!(matches!(certify_g2(&k), Err(Error::HypothesisG2(_))));
    }

    #[test]
    fn certify_stretched_exp_example_shape() {
        let k = RelaxationKernel::stretched_exp(0.5, 1.0, 0.5).unwrap();
        let cert = certify_g2(&k).unwrap();
        assert_eq!(cert.p, 1.0);
        assert_eq!(
            cert.xi,
            XiFunction::Power {
                coef: 0.5,
                beta: -0.5
            }
        );
    }

    #[test]
    fn certify_steep_stretched_exp_uses_constant_floor() {
        let k = RelaxationKernel::stretched_exp(0.05, 0.8, 1.4).unwrap();
        let cert = certify_g2(&k).unwrap();
        assert_eq!(cert.xi, XiFunction::Constant(0.8 * 1.4));
        let slack = certificate_slack(&k, &cert, 5_000, 1e3);
        assert!(slack <= 1e-12 * k.at_zero(), "slack {slack}");
    }

    #[test]
    fn certify_pure_exp() {
        let k = RelaxationKernel::pure_exp(0.5, 2.0).unwrap();
        let cert = certify_g2(&k).unwrap();
        assert_eq!(cert.p, 1.0);
        assert_eq!(cert.xi, XiFunction::Constant(2.0));
    }

    #[test]
    fn certify_tabulated_exponential_recovers_rate() {
        // samples of 0.5 e^{-2t}: constant xi at p = 1 should come out near 2
        let times: Vec<f64> = (0..200).map(|i| i as f64 * 0.05).collect();
        let values: Vec<f64> = times.iter().map(|t| 0.5 * (-2.0 * t).exp()).collect();
        let k = RelaxationKernel::tabulated(times, values).unwrap();
        let cert = certify_g2(&k).unwrap();
        match cert.xi {
            XiFunction::Constant(c) => {
                assert!((c - 2.0).abs() < 1e-2, "fitted xi {c}")
            }
            other => panic!("expected constant xi, got {other:?}"),
        }
    }

    #[test]
    fn custom_certificate_with_false_pair_is_rejected()
    {
        let k = RelaxationKernel::power_law(1.0, 3.0).unwrap();
        // xi too large at p = 4/3: inequality fails
        let res = KernelCertificate::custom(&k, 4.0 / 3.0, XiFunction::Constant(3.5));
        assert!(matches!(res, Err(Error::HypothesisG2(_))));
        // slightly smaller constant is admissible
        assert!(KernelCertificate::custom(&k, 4.0 / 3.0, XiFunction::Constant(2.9)).is_ok());
    }

    #[test]
    fn xi_integrals_closed_forms() {
        let c = XiFunction::Constant(3.0);
        assert!(rel_close(c.integral_pow(4.0 / 3.0, 2.0), 3.0f64.powf(4.0 / 3.0) * 2.0, 1e-15));
        let p = XiFunction::Power {
            coef: 0.5,
            beta: -0.5,
        };
        // int_0^t 0.5 (1+s)^(-1/2) ds = (1+t)^(1/2) - 1
        assert!(rel_close(p.integral(3.0), 1.0, 1e-14));
        // q * beta = -1 triggers the log branch
        let q = XiFunction::Power {
            coef: 2.0,
            beta: -0.5,
        };
        assert!(rel_close(q.integral_pow(2.0, 3.0), 4.0 * 4.0f64.ln(), 1e-14));
    }

    #[test]
    fn tabulated_eval_interpolates_and_clips() {
        let k = RelaxationKernel::tabulated(
            vec![0.0, 1.0, 2.0],
            vec![1.0, 0.5, 0.25],
        )
        .unwrap();
        assert_eq!(k.eval(0.5), 0.75);
        assert_eq!(k.eval(3.0), 0.0);
    }

    #[test]
    fn log_grid_starts_at_zero_and_ends_at_t_max() {
        let g = log_grid(100, 1e3);
        assert_eq!(g[0], 0.0);
        assert!((g.last().unwrap() - 1e3).abs() < 1e-9);
        assert!(g.windows(2).all(|w| w[1] > w[0]));
    }
}
