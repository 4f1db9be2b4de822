//! Closed-form images of power functions and the conditions under which
//! they hold.
//!
//! Left-sided families and the Saigo, Riemann-Liouville and Erdelyi-Kober
//! right-sided families act on `t^(τ-1)`; the right-sided MSM integral and
//! derivative act on `t^(-τ)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::GammaProduct;
use crate::operator::{Family, OperatorSpec};
use crate::symbolic::Scalar;

/// Gamma arguments and output exponent of an image, before evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSchema<S> {
    pub numerator: Vec<S>,
    pub denominator: Vec<S>,
    pub exponent: S,
}

/// `prefactor · x^exponent`
#[derive(Debug, Clone, PartialEq)]
pub struct PowerImage {
    pub prefactor: GammaProduct,
    pub exponent: f64,
}

impl PowerImage {
    pub fn eval(&self, x: f64) -> Result<f64> {
        Ok(self.prefactor.value()? * x.powf(self.exponent))
    }
}

impl From<PowerSchema<f64>> for PowerImage {
    fn from(s: PowerSchema<f64>) -> Self {
        PowerImage {
            prefactor: GammaProduct::new(s.numerator, s.denominator),
            exponent: s.exponent,
        }
    }
}

/// Whether to follow formulas with their typographical corrections or
/// exactly as printed in the source statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reading {
    #[default]
    Corrected,
    AsPrinted,
}

pub fn power_schema<S: Scalar>(op: &OperatorSpec<S>, tau: S) -> PowerSchema<S> {
    let one = || S::int(1);
    let t = tau;
    match op.clone() {
        OperatorSpec::MsmLeftInt(m) => {
            let (d, dp, mu, mp, e) = (m.delta, m.delta_p, m.mu, m.mu_p, m.epsilon);
            PowerSchema {
                numerator: vec![
                    t.clone(),
                    t.clone() + e.clone() - d.clone() - dp.clone() - mu.clone(),
                    t.clone() + mp.clone() - dp.clone(),
                ],
                denominator: vec![
                    t.clone() + mp,
                    t.clone() + e.clone() - d.clone() - dp.clone(),
                    t.clone() + e.clone() - dp.clone() - mu,
                ],
                exponent: t - d - dp + e - one(),
            }
        }
        OperatorSpec::MsmRightInt(m) => {
            let (d, dp, mu, mp, e) = (m.delta, m.delta_p, m.mu, m.mu_p, m.epsilon);
            PowerSchema {
                numerator: vec![
                    t.clone() - mu.clone(),
                    t.clone() + d.clone() + dp.clone() - e.clone(),
                    t.clone() + d.clone() + mp.clone() - e.clone(),
                ],
                denominator: vec![
                    t.clone(),
                    t.clone() + d.clone() - mu,
                    t.clone() + d.clone() + dp.clone() + mp - e.clone(),
                ],
                exponent: e - d - dp - t,
            }
        }
        OperatorSpec::MsmLeftDeriv(m) => {
            let (d, dp, mu, mp, e) = (m.delta, m.delta_p, m.mu, m.mu_p, m.epsilon);
            PowerSchema {
                numerator: vec![
                    t.clone(),
                    t.clone() + d.clone() - mu.clone(),
                    t.clone() + d.clone() + dp.clone() + mp.clone() - e.clone(),
                ],
                denominator: vec![
                    t.clone() - mu,
                    t.clone() + d.clone() + dp.clone() - e.clone(),
                    t.clone() + d.clone() + mp - e.clone(),
                ],
                exponent: t + d + dp - e - one(),
            }
        }
        OperatorSpec::MsmRightDeriv(m) => {
            let (d, dp, mu, mp, e) = (m.delta, m.delta_p, m.mu, m.mu_p, m.epsilon);
            PowerSchema {
                numerator: vec![
                    t.clone() + mp.clone(),
                    t.clone() + e.clone() - d.clone() - dp.clone(),
                    t.clone() + e.clone() - dp.clone() - mu.clone(),
                ],
                denominator: vec![
                    t.clone(),
                    t.clone() + mp - dp.clone(),
                    t.clone() + e.clone() - d.clone() - dp.clone() - mu,
                ],
                exponent: d + dp - e - t,
            }
        }
        OperatorSpec::SaigoLeft(s) => PowerSchema {
            numerator: vec![t.clone(), t.clone() + s.epsilon.clone() - s.mu.clone()],
            denominator: vec![t.clone() - s.mu.clone(), t.clone() + s.epsilon + s.delta],
            exponent: t - s.mu - one(),
        },
        OperatorSpec::SaigoRight(s) => PowerSchema {
            numerator: vec![one() + s.mu.clone() - t.clone(), one() + s.epsilon.clone() - t.clone()],
            denominator: vec![
                one() - t.clone(),
                one() + s.delta + s.mu.clone() + s.epsilon - t.clone(),
            ],
            exponent: t - s.mu - one(),
        },
        OperatorSpec::RlLeft { delta } => PowerSchema {
            numerator: vec![t.clone()],
            denominator: vec![t.clone() + delta.clone()],
            exponent: t + delta - one(),
        },
        OperatorSpec::RlRight { delta } => PowerSchema {
            numerator: vec![one() - delta.clone() - t.clone()],
            denominator: vec![one() - t.clone()],
            exponent: t + delta - one(),
        },
        OperatorSpec::EkLeft(k) => PowerSchema {
            numerator: vec![t.clone() + k.epsilon.clone()],
            denominator: vec![t.clone() + k.epsilon + k.delta],
            exponent: t - one(),
        },
        OperatorSpec::EkRight(k) => PowerSchema {
            numerator: vec![one() + k.epsilon.clone() - t.clone()],
            denominator: vec![one() + k.delta + k.epsilon - t.clone()],
            exponent: t - one(),
        },
    }
}

/// The image as printed, where the print differs from [`power_schema`].
/// Only the left Erdelyi-Kober image differs: its printed exponent carries
/// an extra `δ`.
pub fn power_schema_printed<S: Scalar>(op: &OperatorSpec<S>, tau: S) -> Option<PowerSchema<S>> {
    match op {
        OperatorSpec::EkLeft(k) => {
            let mut s = power_schema(op, tau.clone());
            s.exponent = tau + k.delta.clone() - S::int(1);
            Some(s)
        }
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionKind {
    /// Needed for the image to hold; enforced.
    Required,
    /// A condition as printed that differs from the required one; reported
    /// for information only.
    Printed,
}

/// One inequality with its slack. Passes iff `margin > 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Condition {
    pub label: String,
    pub margin: f64,
    pub kind: ConditionKind,
}

impl Condition {
    pub(crate) fn req(label: &str, margin: f64) -> Self {
        Condition {
            label: label.to_string(),
            margin,
            kind: ConditionKind::Required,
        }
    }

    pub(crate) fn printed(label: &str, margin: f64) -> Self {
        Condition {
            label: label.to_string(),
            margin,
            kind: ConditionKind::Printed,
        }
    }

    pub fn passes(&self) -> bool {
        self.margin > 0.0
    }
}

/// Every condition of the image formula for `op` at `tau`.
pub fn validate_domain(op: &OperatorSpec, tau: f64) -> Vec<Condition> {
    let t = tau;
    match *op {
        OperatorSpec::MsmLeftInt(m) => vec![
            Condition::req("epsilon > 0", m.epsilon),
            Condition::req("tau > 0", t),
            Condition::req(
                "tau > delta + delta_p + mu - epsilon",
                t - (m.delta + m.delta_p + m.mu - m.epsilon),
            ),
            Condition::req("tau > delta_p - mu_p", t - (m.delta_p - m.mu_p)),
            Condition::printed(
                "tau > delta - delta_p - mu - epsilon",
                t - (m.delta - m.delta_p - m.mu - m.epsilon),
            ),
        ],
        OperatorSpec::MsmRightInt(m) => vec![
            Condition::req("epsilon > 0", m.epsilon),
            Condition::req("tau > mu", t - m.mu),
            Condition::req("tau > epsilon - delta - delta_p", t - (m.epsilon - m.delta - m.delta_p)),
            Condition::req("tau > epsilon - delta - mu_p", t - (m.epsilon - m.delta - m.mu_p)),
        ],
        OperatorSpec::MsmLeftDeriv(m) => vec![
            Condition::req("tau > 0", t),
            Condition::req("tau > mu - delta", t - (m.mu - m.delta)),
            Condition::req(
                "tau > epsilon - delta - delta_p - mu_p",
                t - (m.epsilon - m.delta - m.delta_p - m.mu_p),
            ),
            Condition::printed(
                "tau > epsilon - delta - delta_p - mu",
                t - (m.epsilon - m.delta - m.delta_p - m.mu),
            ),
        ],
        OperatorSpec::MsmRightDeriv(m) => vec![
            Condition::req("tau > -mu_p", t + m.mu_p),
            Condition::req("tau > delta_p + mu - epsilon", t - (m.delta_p + m.mu - m.epsilon)),
            Condition::req(
                "tau > delta + delta_p - epsilon + floor(epsilon) + 1",
                t - (m.delta + m.delta_p - m.epsilon + m.epsilon.floor() + 1.0),
            ),
        ],
        OperatorSpec::SaigoLeft(s) => vec![
            Condition::req("delta > 0", s.delta),
            Condition::req("tau > 0", t),
            Condition::req("tau > mu - epsilon", t - (s.mu - s.epsilon)),
        ],
        OperatorSpec::SaigoRight(s) => vec![
            Condition::req("delta > 0", s.delta),
            Condition::req("tau < 1 + mu", 1.0 + s.mu - t),
            Condition::req("tau < 1 + epsilon", 1.0 + s.epsilon - t),
        ],
        OperatorSpec::RlLeft { delta } => vec![Condition::req("delta > 0", delta), Condition::req("tau > 0", t)],
        OperatorSpec::RlRight { delta } => vec![
            Condition::req("delta > 0", delta),
            Condition::req("tau + delta < 1", 1.0 - delta - t),
        ],
        OperatorSpec::EkLeft(k) => vec![
            Condition::req("delta > 0", k.delta),
            Condition::req("tau + epsilon > 0", t + k.epsilon),
            Condition::printed("tau > epsilon", t - k.epsilon),
        ],
        OperatorSpec::EkRight(k) => vec![
            Condition::req("delta > 0", k.delta),
            Condition::req("tau < 1 + epsilon", 1.0 + k.epsilon - t),
        ],
    }
}

/// Fails with the first violated required condition.
pub fn check_domain(op: &OperatorSpec, tau: f64) -> Result<()> {
    match validate_domain(op, tau)
        .into_iter()
        .find(|c| c.kind == ConditionKind::Required && !c.passes())
    {
        Some(c) => Err(Error::domain(format!("{} at tau = {tau}", c.label), c.margin)),
        None => Ok(()),
    }
}

/// Image of the family's monomial under `op`, after checking the domain.
pub fn power_image(op: &OperatorSpec, tau: f64) -> Result<PowerImage> {
    check_domain(op, tau)?;
    let image: PowerImage = power_schema(op, tau).into();
    image.prefactor.eval()?;
    Ok(image)
}

/// `true` when the family is defined by an integral with a direct
/// quadrature (the MSM derivatives are not).
pub fn is_integral(family: Family) -> bool {
    !matches!(family, Family::MsmLeftDeriv | Family::MsmRightDeriv)
}
