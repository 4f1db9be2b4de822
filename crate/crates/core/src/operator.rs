//! Operator families and their parameter tuples.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    MsmLeftInt,
    MsmRightInt,
    MsmLeftDeriv,
    MsmRightDeriv,
    SaigoLeft,
    SaigoRight,
    RlLeft,
    RlRight,
    EkLeft,
    EkRight,
}

/// Which power function an operator is applied to in its image formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monomial {
    /// `t^(τ-1)`
    TauMinusOne,
    /// `t^(-τ)`
    MinusTau,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::MsmLeftInt,
        Family::MsmRightInt,
        Family::MsmLeftDeriv,
        Family::MsmRightDeriv,
        Family::SaigoLeft,
        Family::SaigoRight,
        Family::RlLeft,
        Family::RlRight,
        Family::EkLeft,
        Family::EkRight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::MsmLeftInt => "msm-left-int",
            Family::MsmRightInt => "msm-right-int",
            Family::MsmLeftDeriv => "msm-left-deriv",
            Family::MsmRightDeriv => "msm-right-deriv",
            Family::SaigoLeft => "saigo-left",
            Family::SaigoRight => "saigo-right",
            Family::RlLeft => "rl-left",
            Family::RlRight => "rl-right",
            Family::EkLeft => "ek-left",
            Family::EkRight => "ek-right",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::MsmLeftInt | Family::MsmRightInt | Family::MsmLeftDeriv | Family::MsmRightDeriv => {
                &["delta", "delta_p", "mu", "mu_p", "epsilon"]
            }
            Family::SaigoLeft | Family::SaigoRight => &["delta", "mu", "epsilon"],
            Family::RlLeft | Family::RlRight => &["delta"],
            Family::EkLeft | Family::EkRight => &["epsilon", "delta"],
        }
    }

    pub fn is_left(self) -> bool {
        matches!(
            self,
            Family::MsmLeftInt | Family::MsmLeftDeriv | Family::SaigoLeft | Family::RlLeft | Family::EkLeft
        )
    }

    pub fn monomial(self) -> Monomial {
        match self {
            Family::MsmRightInt | Family::MsmRightDeriv => Monomial::MinusTau,
            _ => Monomial::TauMinusOne,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown operator family '{s}'")))
    }
}

/// `(δ, δ′, μ, μ′, ε)`
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MsmParams<S = f64> {
    pub delta: S,
    pub delta_p: S,
    pub mu: S,
    pub mu_p: S,
    pub epsilon: S,
}

/// `(δ, μ, ε)`
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SaigoParams<S = f64> {
    pub delta: S,
    pub mu: S,
    pub epsilon: S,
}

/// `(ε, δ)`
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EkParams<S = f64> {
    pub epsilon: S,
    pub delta: S,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum OperatorSpec<S = f64> {
    MsmLeftInt(MsmParams<S>),
    MsmRightInt(MsmParams<S>),
    MsmLeftDeriv(MsmParams<S>),
    MsmRightDeriv(MsmParams<S>),
    SaigoLeft(SaigoParams<S>),
    SaigoRight(SaigoParams<S>),
    RlLeft { delta: S },
    RlRight { delta: S },
    EkLeft(EkParams<S>),
    EkRight(EkParams<S>),
}

impl<S: Clone> OperatorSpec<S> {
    pub fn family(&self) -> Family {
        match self {
            OperatorSpec::MsmLeftInt(_) => Family::MsmLeftInt,
            OperatorSpec::MsmRightInt(_) => Family::MsmRightInt,
            OperatorSpec::MsmLeftDeriv(_) => Family::MsmLeftDeriv,
            OperatorSpec::MsmRightDeriv(_) => Family::MsmRightDeriv,
            OperatorSpec::SaigoLeft(_) => Family::SaigoLeft,
            OperatorSpec::SaigoRight(_) => Family::SaigoRight,
            OperatorSpec::RlLeft { .. } => Family::RlLeft,
            OperatorSpec::RlRight { .. } => Family::RlRight,
            OperatorSpec::EkLeft(_) => Family::EkLeft,
            OperatorSpec::EkRight(_) => Family::EkRight,
        }
    }

    /// Parameter values in the order of [`Family::param_names`].
    pub fn values(&self) -> Vec<S> {
        match self {
            OperatorSpec::MsmLeftInt(m)
            | OperatorSpec::MsmRightInt(m)
            | OperatorSpec::MsmLeftDeriv(m)
            | OperatorSpec::MsmRightDeriv(m) => vec![
                m.delta.clone(),
                m.delta_p.clone(),
                m.mu.clone(),
                m.mu_p.clone(),
                m.epsilon.clone(),
            ],
            OperatorSpec::SaigoLeft(s) | OperatorSpec::SaigoRight(s) => {
                vec![s.delta.clone(), s.mu.clone(), s.epsilon.clone()]
            }
            OperatorSpec::RlLeft { delta } | OperatorSpec::RlRight { delta } => vec![delta.clone()],
            OperatorSpec::EkLeft(e) | OperatorSpec::EkRight(e) => vec![e.epsilon.clone(), e.delta.clone()],
        }
    }

    /// Builds a spec from values ordered as in [`Family::param_names`].
    pub fn from_values(family: Family, v: &[S]) -> Result<Self> {
        let want = family.param_names().len();
        if v.len() != want {
            return Err(Error::Config(format!(
                "{family} takes {want} parameters ({}), got {}",
                family.param_names().join(", "),
                v.len()
            )));
        }
        let msm = || MsmParams {
            delta: v[0].clone(),
            delta_p: v[1].clone(),
            mu: v[2].clone(),
            mu_p: v[3].clone(),
            epsilon: v[4].clone(),
        };
        let saigo = || SaigoParams {
            delta: v[0].clone(),
            mu: v[1].clone(),
            epsilon: v[2].clone(),
        };
        let ek = || EkParams {
            epsilon: v[0].clone(),
            delta: v[1].clone(),
        };
        Ok(match family {
            Family::MsmLeftInt => OperatorSpec::MsmLeftInt(msm()),
            Family::MsmRightInt => OperatorSpec::MsmRightInt(msm()),
            Family::MsmLeftDeriv => OperatorSpec::MsmLeftDeriv(msm()),
            Family::MsmRightDeriv => OperatorSpec::MsmRightDeriv(msm()),
            Family::SaigoLeft => OperatorSpec::SaigoLeft(saigo()),
            Family::SaigoRight => OperatorSpec::SaigoRight(saigo()),
            Family::RlLeft => OperatorSpec::RlLeft { delta: v[0].clone() },
            Family::RlRight => OperatorSpec::RlRight { delta: v[0].clone() },
            Family::EkLeft => OperatorSpec::EkLeft(ek()),
            Family::EkRight => OperatorSpec::EkRight(ek()),
        })
    }

    pub fn named_values(&self) -> Vec<(&'static str, S)> {
        self.family().param_names().iter().copied().zip(self.values()).collect()
    }
}
