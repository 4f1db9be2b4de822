//! Jacobi-type polynomials `M_n^(p,q)`, orthogonal on (0, ∞) for the
//! weight `x^q (1+x)^-(p+q)`, and classical Jacobi polynomials.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::binomial_real;
use crate::hypergeom::HypSeriesSpec;
use crate::quadrature::{quad_endpoint_singular, QuadConfig};
use crate::sum::CompensatedSum;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolySpec {
    pub n: usize,
    pub p: f64,
    pub q: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JacobiSpec {
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Finite binomial sum.
    Direct,
    /// Terminating `2F1(-n, n+1-p; q+1; -x)`.
    Hypergeometric,
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

impl PolySpec {
    pub fn new(n: usize, p: f64, q: f64) -> Self {
        PolySpec { n, p, q }
    }

    /// Coefficients `c_k` of `x^k`:
    /// `(-1)^n n! binom(p-n-1, k) binom(q+n, n-k) (-1)^k`.
    pub fn coefficients(&self) -> Vec<f64> {
        let n = self.n;
        let lead = if n.is_multiple_of(2) { 1.0 } else { -1.0 } * factorial(n);
        (0..=n)
            .map(|k| {
                let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
                lead * sign * binomial_real(self.p - n as f64 - 1.0, k) * binomial_real(self.q + n as f64, n - k)
            })
            .collect()
    }

    /// True when the weight makes `M_0..=M_n` square integrable.
    pub fn orthogonality_holds(&self) -> bool {
        self.p > 2.0 * self.n as f64 + 1.0 && self.q > -1.0
    }
}

fn eval_coefficients(c: &[f64], x: f64) -> f64 {
    if x.abs() > 1.0 {
        c.iter().rev().fold(0.0, |acc, &ck| acc * x + ck)
    } else {
        let mut s = CompensatedSum::new();
        let mut xk = 1.0;
        for &ck in c {
            s.add(ck * xk);
            xk *= x;
        }
        s.value()
    }
}

/// `M_n^(p,q)(x)`.
pub fn m_poly(spec: &PolySpec, x: f64, method: Method) -> Result<f64> {
    match method {
        Method::Direct => Ok(eval_coefficients(&spec.coefficients(), x)),
        Method::Hypergeometric => {
            let n = spec.n as f64;
            let sign = if spec.n.is_multiple_of(2) { 1.0 } else { -1.0 };
            let lead = sign * factorial(spec.n) * binomial_real(spec.q + n, spec.n);
            let series = HypSeriesSpec::new(vec![-n, n + 1.0 - spec.p], vec![spec.q + 1.0], -x);
            Ok(lead * series.evaluate()?)
        }
    }
}

/// `P_n^(α,β)(x)` by the three-term recurrence, or by the explicit sum
/// when a recurrence denominator vanishes.
pub fn jacobi_p(spec: &JacobiSpec, x: f64) -> f64 {
    let (a, b) = (spec.alpha, spec.beta);
    if spec.n == 0 {
        return 1.0;
    }
    let p1 = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    let (mut prev, mut cur) = (1.0, p1);
    for k in 2..=spec.n {
        let kf = k as f64;
        let s = 2.0 * kf + a + b;
        let den = 2.0 * kf * (kf + a + b) * (s - 2.0);
        if den == 0.0 {
            return jacobi_explicit(spec, x);
        }
        let next = ((s - 1.0) * (s * (s - 2.0) * x + a * a - b * b) * cur
            - 2.0 * (kf + a - 1.0) * (kf + b - 1.0) * s * prev)
            / den;
        prev = cur;
        cur = next;
    }
    cur
}

/// `Σ_s binom(n+α, n-s) binom(n+β, s) ((x-1)/2)^s ((x+1)/2)^(n-s)`
fn jacobi_explicit(spec: &JacobiSpec, x: f64) -> f64 {
    let n = spec.n;
    let (lo, hi) = (0.5 * (x - 1.0), 0.5 * (x + 1.0));
    let nf = n as f64;
    (0..=n)
        .map(|s| {
            binomial_real(nf + spec.alpha, n - s)
                * binomial_real(nf + spec.beta, s)
                * lo.powi(s as i32)
                * hi.powi((n - s) as i32)
        })
        .collect::<CompensatedSum>()
        .value()
}

/// `(M_n^(p,q)(x), (-1)^n n! P_n^(q, -p-q)(2x+1))`; the two agree.
pub fn m_jacobi_connection(spec: &PolySpec, x: f64) -> Result<(f64, f64)> {
    let lhs = m_poly(spec, x, Method::Direct)?;
    let sign = if spec.n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let j = JacobiSpec {
        n: spec.n,
        alpha: spec.q,
        beta: -spec.p - spec.q,
    };
    Ok((lhs, sign * factorial(spec.n) * jacobi_p(&j, 2.0 * x + 1.0)))
}

/// `P_n^(α,β)(z) = (-1)^n / n! · M_n^(-α-β, α)((z-1)/2)`.
pub fn jacobi_from_m(spec: &JacobiSpec, z: f64) -> Result<f64> {
    let m = PolySpec::new(spec.n, -spec.alpha - spec.beta, spec.alpha);
    let sign = if spec.n.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(sign / factorial(spec.n) * m_poly(&m, 0.5 * (z - 1.0), Method::Direct)?)
}

/// `w_{p,q}(x) = x^q (1+x)^-(p+q)`
pub fn weight(p: f64, q: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain("weight needs x > 0", x));
    }
    Ok(x.powf(q) * (1.0 + x).powf(-(p + q)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OdeForm {
    /// `x(1+x)y'' + [(2-p)x + (1+q)]y' - n(n+1-p)y = 0`
    Corrected,
    /// Same operator with the eigenvalue `n(n-1+p)`.
    AsPrinted,
}

impl OdeForm {
    pub fn eigenvalue(self, spec: &PolySpec) -> f64 {
        let n = spec.n as f64;
        match self {
            OdeForm::Corrected => n * (n + 1.0 - spec.p),
            OdeForm::AsPrinted => n * (n - 1.0 + spec.p),
        }
    }
}

/// Residual of the differential equation at `x` and the magnitude of its
/// largest contributions, for normalization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OdeResidual {
    pub residual: f64,
    pub scale: f64,
}

impl OdeResidual {
    pub fn normalized(&self) -> f64 {
        if self.scale == 0.0 {
            self.residual.abs()
        } else {
            self.residual.abs() / self.scale
        }
    }
}

/// Substitutes `M_n^(p,q)` into the differential equation, differentiating
/// its coefficient list exactly.
pub fn ode_residual(spec: &PolySpec, x: f64, form: OdeForm) -> OdeResidual {
    let c = spec.coefficients();
    let d1: Vec<f64> = c.iter().enumerate().skip(1).map(|(k, &ck)| k as f64 * ck).collect();
    let d2: Vec<f64> = d1.iter().enumerate().skip(1).map(|(k, &ck)| k as f64 * ck).collect();
    let abs = |v: &[f64]| v.iter().map(|a| a.abs()).collect::<Vec<_>>();
    let lam = form.eigenvalue(spec);
    let a2 = x * (1.0 + x);
    let a1 = (2.0 - spec.p) * x + (1.0 + spec.q);
    let terms = [
        a2 * eval_coefficients(&d2, x),
        a1 * eval_coefficients(&d1, x),
        -lam * eval_coefficients(&c, x),
    ];
    let ax = x.abs();
    let scale = a2.abs() * eval_coefficients(&abs(&d2), ax)
        + a1.abs() * eval_coefficients(&abs(&d1), ax)
        + lam.abs() * eval_coefficients(&abs(&c), ax);
    OdeResidual {
        residual: terms.into_iter().collect::<CompensatedSum>().value(),
        scale,
    }
}

/// `∫_0^∞ w_{p,q}(x) M_m(x) M_n(x) dx`, after `x = u/(1-u)` turns it into a
/// Gauss-Jacobi integral with weight `u^q (1-u)^(p-2-m-n)`.
pub fn inner_product(m: usize, n: usize, p: f64, q: f64, cfg: &QuadConfig) -> Result<f64> {
    let pm = PolySpec::new(m, p, q).coefficients();
    let pn = PolySpec::new(n, p, q).coefficients();
    let deg = (m + n) as i32;
    let g = |u: f64| {
        let x = u / (1.0 - u);
        (1.0 - u).powi(deg) * eval_coefficients(&pm, x) * eval_coefficients(&pn, x)
    };
    Ok(quad_endpoint_singular(&g, q, p - 2.0 - (m + n) as f64, cfg)?.value)
}

/// `|<M_m, M_n>| / sqrt(<M_m, M_m> <M_n, M_n>)`
pub fn orthogonality_defect(m: usize, n: usize, p: f64, q: f64, cfg: &QuadConfig) -> Result<f64> {
    let mn = inner_product(m, n, p, q, cfg)?;
    let mm = inner_product(m, m, p, q, cfg)?;
    let nn = inner_product(n, n, p, q, cfg)?;
    Ok(mn.abs() / (mm * nn).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_values() {
        for x in [0.0, 0.3, 7.0] {
            assert_eq!(m_poly(&PolySpec::new(0, 3.0, 0.5), x, Method::Direct).unwrap(), 1.0);
        }
        // M_1 = (p-2)x - (q+1)
        let v = m_poly(&PolySpec::new(1, 3.0, 0.0), 1.0, Method::Direct).unwrap();
        assert_eq!(v, 0.0);
        let v = m_poly(&PolySpec::new(1, 5.0, 0.0), 1.0, Method::Direct).unwrap();
        assert_eq!(v, 2.0);
    }

    #[test]
    fn methods_agree() {
        let spec = PolySpec::new(3, 9.0, 1.5);
        let a = m_poly(&spec, 2.0, Method::Direct).unwrap();
        let b = m_poly(&spec, 2.0, Method::Hypergeometric).unwrap();
        assert!(((a - b) / a).abs() < 1e-13);
    }

    #[test]
    fn hypergeometric_form_reports_denominator_pole() {
        let spec = PolySpec::new(3, 9.0, -2.0);
        assert!(matches!(
            m_poly(&spec, 0.5, Method::Hypergeometric),
            Err(Error::DenominatorPole { .. })
        ));
    }

    #[test]
    fn jacobi_basics() {
        let j = |n, alpha, beta| JacobiSpec { n, alpha, beta };
        assert_eq!(jacobi_p(&j(0, 0.3, 0.2), 0.7), 1.0);
        let (a, b, x) = (0.3, -0.4, 0.6);
        assert!((jacobi_p(&j(1, a, b), x) - ((a - b) / 2.0 + (a + b + 2.0) * x / 2.0)).abs() < 1e-15);
        assert!((jacobi_p(&j(2, 1.0, 0.5), 1.0) - 3.0).abs() < 1e-14);
        // degenerate recurrence (alpha + beta = -5) falls back to the sum
        let spec = j(6, 0.0, -5.0);
        let (r, e) = (jacobi_p(&spec, 0.4), jacobi_explicit(&spec, 0.4));
        assert!((r - e).abs() < 1e-12 * e.abs().max(1.0));
    }

    #[test]
    fn connection_example() {
        let (l, r) = m_jacobi_connection(&PolySpec::new(1, 5.0, 0.0), 1.0).unwrap();
        assert_eq!((l, r), (2.0, 2.0));
        let (l, r) = m_jacobi_connection(&PolySpec::new(0, 5.0, 0.0), 3.0).unwrap();
        assert_eq!((l, r), (1.0, 1.0));
    }

    #[test]
    fn inverse_connection() {
        let spec = JacobiSpec {
            n: 4,
            alpha: 0.5,
            beta: -7.5,
        };
        let a = jacobi_p(&spec, 2.3);
        let b = jacobi_from_m(&spec, 2.3).unwrap();
        assert!(((a - b) / a).abs() < 1e-12);
    }

    #[test]
    fn weight_values() {
        assert_eq!(weight(5.0, 0.0, 1.0).unwrap(), 2f64.powi(-5));
        assert_eq!(weight(4.0, 1.0, 1.0).unwrap(), 2f64.powi(-5));
        assert!(weight(4.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn ode_eigenvalue() {
        let spec = PolySpec::new(1, 5.0, 0.0);
        assert_eq!(ode_residual(&spec, 2.0, OdeForm::Corrected).residual, 0.0);
        assert_eq!(ode_residual(&spec, 2.0, OdeForm::AsPrinted).residual, -40.0);
        assert_eq!(
            ode_residual(&PolySpec::new(0, 5.0, 0.0), 2.0, OdeForm::AsPrinted).residual,
            0.0
        );
    }

    #[test]
    fn orthogonal_pair() {
        // 3 B(2, 3) - B(1, 4) = 0
        let v = inner_product(0, 1, 5.0, 0.0, &QuadConfig::default()).unwrap();
        assert!(v.abs() < 1e-15, "{v}");
    }
}
