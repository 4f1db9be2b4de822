//! Direct numerical evaluation of the fractional integral operators.
//!
//! Substituting `t = x u` (left-sided) or `t = x / u` (right-sided) turns
//! every supported operator into
//!
//! ```text
//! x^scale / Γ(c) · ∫_0^1 u^α (1-u)^β K(u) g(t(u)) du,
//! ```
//!
//! where `K(u) = 2F1(A, B; C; 1-u)` or `K ≡ 1`. The Gauss hypergeometric
//! kernel is singular at `u = 0` unless it is a polynomial, so the range is
//! split at one half and the left piece uses the connection formula to
//! expansions in `u`.

use crate::error::{Error, Result};
use crate::gamma::{gamma, rgamma};
use crate::hypergeom::{pfq, HypSeriesSpec, DEFAULT_MAX_TERMS};
use crate::operator::{Family, OperatorSpec};
use crate::quadrature::{quad_endpoint_singular, QuadConfig, QuadEstimate};

const KERNEL_TOL: f64 = 1e-16;

/// `f(t) = t^power · smooth(t)`. Splitting off the power lets the rule
/// absorb an endpoint singularity of `f`. For right-sided operators
/// `smooth` must stay bounded as `t → ∞`.
pub struct Integrand<'a> {
    pub power: f64,
    pub smooth: &'a (dyn Fn(f64) -> f64 + Sync),
}

impl<'a> Integrand<'a> {
    pub fn new(f: &'a (dyn Fn(f64) -> f64 + Sync)) -> Self {
        Integrand { power: 0.0, smooth: f }
    }

    pub fn power_times(power: f64, smooth: &'a (dyn Fn(f64) -> f64 + Sync)) -> Self {
        Integrand { power, smooth }
    }
}

fn one(_: f64) -> f64 {
    1.0
}

/// The monomial `t^power`.
pub fn monomial(power: f64) -> Integrand<'static> {
    Integrand::power_times(power, &one)
}

#[derive(Debug, Clone, Copy)]
struct Kernel {
    a: f64,
    b: f64,
    c: f64,
}

/// The substituted integral for one operator and one power `λ`.
#[derive(Debug, Clone, Copy)]
struct Reduced {
    left: bool,
    scale_exponent: f64,
    alpha: f64,
    beta: f64,
    norm: f64,
    kernel: Option<Kernel>,
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} > 0"), v))
    }
}

fn reduce(op: &OperatorSpec, lambda: f64) -> Result<Reduced> {
    let r = match *op {
        OperatorSpec::RlLeft { delta } => {
            positive("delta", delta)?;
            Reduced {
                left: true,
                scale_exponent: delta + lambda,
                alpha: lambda,
                beta: delta - 1.0,
                norm: rgamma(delta)?,
                kernel: None,
            }
        }
        OperatorSpec::RlRight { delta } => {
            positive("delta", delta)?;
            Reduced {
                left: false,
                scale_exponent: delta + lambda,
                alpha: -delta - lambda - 1.0,
                beta: delta - 1.0,
                norm: rgamma(delta)?,
                kernel: None,
            }
        }
        OperatorSpec::EkLeft(p) => {
            positive("delta", p.delta)?;
            Reduced {
                left: true,
                scale_exponent: lambda,
                alpha: lambda + p.epsilon,
                beta: p.delta - 1.0,
                norm: rgamma(p.delta)?,
                kernel: None,
            }
        }
        OperatorSpec::EkRight(p) => {
            positive("delta", p.delta)?;
            Reduced {
                left: false,
                scale_exponent: lambda,
                alpha: p.epsilon - lambda - 1.0,
                beta: p.delta - 1.0,
                norm: rgamma(p.delta)?,
                kernel: None,
            }
        }
        OperatorSpec::SaigoLeft(p) | OperatorSpec::SaigoRight(p) => {
            positive("delta", p.delta)?;
            let left = matches!(op, OperatorSpec::SaigoLeft(_));
            Reduced {
                left,
                scale_exponent: lambda - p.mu,
                alpha: if left { lambda } else { p.mu - lambda - 1.0 },
                beta: p.delta - 1.0,
                norm: rgamma(p.delta)?,
                kernel: Some(Kernel {
                    a: p.delta + p.mu,
                    b: -p.epsilon,
                    c: p.delta,
                }),
            }
        }
        OperatorSpec::MsmLeftInt(p) | OperatorSpec::MsmRightInt(p) => {
            positive("epsilon", p.epsilon)?;
            // the F3 kernel has a second argument 1 - x/t (left) or 1 - t/x
            // (right) that is unbounded; it collapses when delta' or mu' is 0
            if p.delta_p != 0.0 && p.mu_p != 0.0 {
                return Err(Error::UnsupportedKernel(format!(
                    "{} quadrature needs delta' = 0 or mu' = 0 (got {}, {})",
                    op.family(),
                    p.delta_p,
                    p.mu_p
                )));
            }
            let left = matches!(op, OperatorSpec::MsmLeftInt(_));
            Reduced {
                left,
                scale_exponent: p.epsilon - p.delta - p.delta_p + lambda,
                alpha: if left {
                    lambda - p.delta_p
                } else {
                    p.delta - p.epsilon - lambda - 1.0
                },
                beta: p.epsilon - 1.0,
                norm: rgamma(p.epsilon)?,
                kernel: Some(Kernel {
                    a: p.delta,
                    b: p.mu,
                    c: p.epsilon,
                }),
            }
        }
        OperatorSpec::MsmLeftDeriv(_) | OperatorSpec::MsmRightDeriv(_) => {
            return Err(Error::UnsupportedKernel(format!(
                "{} is a derivative; only integral operators are evaluated by quadrature",
                op.family()
            )))
        }
    };
    Ok(r)
}

fn nonpositive_integer(a: f64) -> bool {
    a <= 0.0 && a == a.floor()
}

fn series(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    pfq(
        &HypSeriesSpec::new(vec![a, b], vec![c], z),
        KERNEL_TOL,
        DEFAULT_MAX_TERMS,
    )
}

/// `∫_0^1 u^α (1-u)^β 2F1(A, B; C; 1-u) h(u) du`
fn kernel_integral(
    k: Kernel,
    alpha: f64,
    beta: f64,
    h: &(dyn Fn(f64) -> f64 + Sync),
    cfg: &QuadConfig,
) -> Result<QuadEstimate> {
    let sigma = k.c - k.a - k.b;
    if nonpositive_integer(k.a) || nonpositive_integer(k.b) {
        let g = |u: f64| series(k.a, k.b, k.c, 1.0 - u).map_or(f64::NAN, |f| f * h(u));
        return quad_endpoint_singular(&g, alpha, beta, cfg);
    }
    if nonpositive_integer(k.c - k.a) || nonpositive_integer(k.c - k.b) {
        // Euler: 2F1(A, B; C; z) = (1-z)^σ 2F1(C-A, C-B; C; z)
        let (a, b) = (k.c - k.a, k.c - k.b);
        let g = |u: f64| series(a, b, k.c, 1.0 - u).map_or(f64::NAN, |f| f * h(u));
        return quad_endpoint_singular(&g, alpha + sigma, beta, cfg);
    }
    if sigma == sigma.round() {
        return Err(Error::UnsupportedKernel(format!(
            "2F1({}, {}; {}; 1-u) has integer C-A-B = {sigma}; the logarithmic case is not implemented",
            k.a, k.b, k.c
        )));
    }
    let gc = gamma(k.c)?;
    let p = gc * gamma(sigma)? * rgamma(k.c - k.a)? * rgamma(k.c - k.b)?;
    let q = gc * gamma(-sigma)? * rgamma(k.a)? * rgamma(k.b)?;

    // u in (0, 1/2), u = v/2
    let regular = |v: f64| {
        let u = 0.5 * v;
        series(k.a, k.b, 1.0 - sigma, u).map_or(f64::NAN, |f| p * f * (1.0 - u).powf(beta) * h(u))
    };
    let mut near_zero = quad_endpoint_singular(&regular, alpha, 0.0, cfg)?;
    if q != 0.0 {
        let singular = |v: f64| {
            let u = 0.5 * v;
            series(k.c - k.a, k.c - k.b, 1.0 + sigma, u).map_or(f64::NAN, |f| q * f * (1.0 - u).powf(beta) * h(u))
        };
        near_zero = near_zero + quad_endpoint_singular(&singular, alpha + sigma, 0.0, cfg)?.scaled(0.5f64.powf(sigma));
    }
    let near_zero = near_zero.scaled(0.5f64.powf(alpha + 1.0));

    // u in (1/2, 1), u = 1 - v/2
    let upper = |v: f64| {
        let u = 1.0 - 0.5 * v;
        series(k.a, k.b, k.c, 0.5 * v).map_or(f64::NAN, |f| f * u.powf(alpha) * h(u))
    };
    let near_one = quad_endpoint_singular(&upper, beta, 0.0, cfg)?.scaled(0.5f64.powf(beta + 1.0));
    Ok(near_zero + near_one)
}

/// `(op f)(x)` by quadrature, with the difference of the last two
/// refinements as error estimate.
pub fn operator_apply(op: &OperatorSpec, f: &Integrand<'_>, x: f64, cfg: &QuadConfig) -> Result<QuadEstimate> {
    if !(x > 0.0) {
        return Err(Error::domain("x > 0", x));
    }
    let r = reduce(op, f.power)?;
    let smooth = f.smooth;
    let h = move |u: f64| {
        if r.left {
            smooth(x * u)
        } else {
            smooth(x / u)
        }
    };
    let integral = match r.kernel {
        None => quad_endpoint_singular(&h, r.alpha, r.beta, cfg)?,
        Some(k) => kernel_integral(k, r.alpha, r.beta, &h, cfg)?,
    };
    if !integral.value.is_finite() {
        return Err(Error::non_converged(
            integral.nodes,
            format!("{} quadrature", op.family()),
        ));
    }
    Ok(integral.scaled(r.norm * x.powf(r.scale_exponent)))
}

/// Families [`operator_apply`] can evaluate for some parameter choice.
pub fn quadrature_supported(family: Family) -> bool {
    !matches!(family, Family::MsmLeftDeriv | Family::MsmRightDeriv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::{MsmParams, SaigoParams};
    use crate::power::power_image;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        ((a - b) / b).abs() < tol
    }

    #[test]
    fn riemann_liouville_of_constant() {
        let cfg = QuadConfig::default();
        let v = operator_apply(&OperatorSpec::RlLeft { delta: 1.0 }, &monomial(0.0), 2.0, &cfg).unwrap();
        assert!((v.value - 2.0).abs() < 1e-14);
        let v = operator_apply(&OperatorSpec::RlLeft { delta: 0.5 }, &monomial(0.0), 1.0, &cfg).unwrap();
        assert!(close(v.value, 2.0 / std::f64::consts::PI.sqrt(), 1e-14));
    }

    #[test]
    fn saigo_left_matches_closed_form() {
        let op = OperatorSpec::SaigoLeft(SaigoParams {
            delta: 0.6,
            mu: 0.2,
            epsilon: 0.4,
        });
        let v = operator_apply(&op, &monomial(0.5), 1.0, &QuadConfig::default()).unwrap();
        let exact = power_image(&op, 1.5).unwrap().eval(1.0).unwrap();
        assert!(close(v.value, exact, 1e-10), "{} vs {exact}", v.value);
    }

    #[test]
    fn right_sided_saigo_matches_closed_form() {
        let op = OperatorSpec::SaigoRight(SaigoParams {
            delta: 0.8,
            mu: 0.45,
            epsilon: 0.6,
        });
        let v = operator_apply(&op, &monomial(-0.7), 1.7, &QuadConfig::default()).unwrap();
        let exact = power_image(&op, 0.3).unwrap().eval(1.7).unwrap();
        assert!(close(v.value, exact, 1e-10), "{} vs {exact}", v.value);
    }

    #[test]
    fn msm_slices_match_closed_form() {
        let cfg = QuadConfig::default();
        let p = MsmParams {
            delta: 0.5,
            delta_p: 0.0,
            mu: 0.2,
            mu_p: 0.4,
            epsilon: 1.1,
        };
        let op = OperatorSpec::MsmLeftInt(p);
        let v = operator_apply(&op, &monomial(1.0), 0.8, &cfg).unwrap();
        let exact = power_image(&op, 2.0).unwrap().eval(0.8).unwrap();
        assert!(close(v.value, exact, 1e-10), "{} vs {exact}", v.value);
        let op = OperatorSpec::MsmRightInt(MsmParams {
            mu_p: 0.0,
            delta_p: 0.3,
            ..p
        });
        let v = operator_apply(&op, &monomial(-2.5), 1.3, &cfg).unwrap();
        let exact = power_image(&op, 2.5).unwrap().eval(1.3).unwrap();
        assert!(close(v.value, exact, 1e-10), "{} vs {exact}", v.value);
    }

    #[test]
    fn unsupported_regimes() {
        let p = MsmParams {
            delta: 0.5,
            delta_p: 0.3,
            mu: 0.2,
            mu_p: 0.4,
            epsilon: 1.1,
        };
        let cfg = QuadConfig::default();
        for op in [OperatorSpec::MsmLeftInt(p), OperatorSpec::MsmLeftDeriv(p)] {
            assert!(matches!(
                operator_apply(&op, &monomial(1.0), 1.0, &cfg),
                Err(Error::UnsupportedKernel(_))
            ));
        }
        let op = OperatorSpec::RlLeft { delta: 0.5 };
        assert!(matches!(
            operator_apply(&op, &monomial(1.0), 0.0, &cfg),
            Err(Error::Domain { .. })
        ));
        let op = OperatorSpec::RlLeft { delta: -0.5 };
        assert!(matches!(
            operator_apply(&op, &monomial(1.0), 1.0, &cfg),
            Err(Error::Domain { .. })
        ));
    }
}
