//! Parameter substitutions that turn one operator family into another:
//! MSM → Saigo → Riemann-Liouville and MSM → Saigo → Erdelyi-Kober, on
//! both sides.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operator::{EkParams, MsmParams, OperatorSpec, SaigoParams};
use crate::power::{power_schema, PowerSchema, Reading};
use crate::symbolic::{cancel_common, Affine, Scalar};
use crate::theorems::{statement_schema, IdentityId, StatementSchema};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reduction {
    MsmSaigoLeft,
    SaigoRlLeft,
    SaigoEkLeft,
    MsmSaigoRight,
    SaigoRlRight,
    SaigoEkRight,
}

impl Reduction {
    pub const ALL: [Reduction; 6] = [
        Reduction::MsmSaigoLeft,
        Reduction::SaigoRlLeft,
        Reduction::SaigoEkLeft,
        Reduction::MsmSaigoRight,
        Reduction::SaigoRlRight,
        Reduction::SaigoEkRight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Reduction::MsmSaigoLeft => "reduction-msm-saigo-left",
            Reduction::SaigoRlLeft => "reduction-saigo-rl-left",
            Reduction::SaigoEkLeft => "reduction-saigo-ek-left",
            Reduction::MsmSaigoRight => "reduction-msm-saigo-right",
            Reduction::SaigoRlRight => "reduction-saigo-rl-right",
            Reduction::SaigoEkRight => "reduction-saigo-ek-right",
        }
    }

    fn left(self) -> bool {
        matches!(
            self,
            Reduction::MsmSaigoLeft | Reduction::SaigoRlLeft | Reduction::SaigoEkLeft
        )
    }

    /// `(source, source τ)` and `(target, target τ)` for Saigo parameters
    /// `(δ, μ, ε)` and the Saigo-side `τ`. The MSM right integral acts on
    /// `t^(-τ)`, so its `τ` is `1 - τ`; the Saigo-RL substitution fixes
    /// `μ = -δ` and the Saigo-EK one `μ = 0`, ignoring the given `μ`.
    pub fn pair<S: Scalar>(self, s: &SaigoParams<S>, tau: S) -> ((OperatorSpec<S>, S), (OperatorSpec<S>, S)) {
        let saigo = |p: SaigoParams<S>| {
            if self.left() {
                OperatorSpec::SaigoLeft(p)
            } else {
                OperatorSpec::SaigoRight(p)
            }
        };
        match self {
            Reduction::MsmSaigoLeft | Reduction::MsmSaigoRight => {
                let m = MsmParams {
                    delta: s.delta.clone() + s.mu.clone(),
                    delta_p: S::int(0),
                    mu: -s.epsilon.clone(),
                    mu_p: S::int(0),
                    epsilon: s.delta.clone(),
                };
                let (op, t) = if self.left() {
                    (OperatorSpec::MsmLeftInt(m), tau.clone())
                } else {
                    (OperatorSpec::MsmRightInt(m), S::int(1) - tau.clone())
                };
                ((op, t), (saigo(s.clone()), tau))
            }
            Reduction::SaigoRlLeft | Reduction::SaigoRlRight => {
                let src = SaigoParams {
                    delta: s.delta.clone(),
                    mu: -s.delta.clone(),
                    epsilon: s.epsilon.clone(),
                };
                let delta = s.delta.clone();
                let target = if self.left() {
                    OperatorSpec::RlLeft { delta }
                } else {
                    OperatorSpec::RlRight { delta }
                };
                ((saigo(src), tau.clone()), (target, tau))
            }
            Reduction::SaigoEkLeft | Reduction::SaigoEkRight => {
                let src = SaigoParams {
                    delta: s.delta.clone(),
                    mu: S::int(0),
                    epsilon: s.epsilon.clone(),
                };
                let ek = EkParams {
                    epsilon: s.epsilon.clone(),
                    delta: s.delta.clone(),
                };
                let target = if self.left() {
                    OperatorSpec::EkLeft(ek)
                } else {
                    OperatorSpec::EkRight(ek)
                };
                ((saigo(src), tau.clone()), (target, tau))
            }
        }
    }
}

impl fmt::Display for Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Reduction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Reduction::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown reduction '{s}'")))
    }
}

fn sorted(mut v: Vec<Affine>) -> Vec<Affine> {
    v.sort();
    v
}

fn reduced_image(s: PowerSchema<Affine>) -> (Vec<Affine>, Vec<Affine>, Affine) {
    let (n, d) = cancel_common(&s.numerator, &s.denominator);
    (sorted(n), sorted(d), s.exponent)
}

type ReducedStatement = (Vec<Affine>, Vec<Affine>, Vec<Affine>, Vec<Affine>, Affine, bool);

fn reduced_statement(s: StatementSchema<Affine>) -> ReducedStatement {
    let (pn, pd) = cancel_common(&s.prefactor_numerator, &s.prefactor_denominator);
    let (sn, sd) = cancel_common(&s.series_numerator, &s.series_denominator);
    (
        sorted(pn),
        sorted(pd),
        sorted(sn),
        sorted(sd),
        s.exponent,
        s.alternating_sign,
    )
}

/// Outcome of comparing both sides of a reduction with symbolic parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicComparison {
    pub image_match: bool,
    pub statement_match: bool,
    /// Reduced source and target image, for display.
    pub source: String,
    pub target: String,
}

impl SymbolicComparison {
    pub fn exact(&self) -> bool {
        self.image_match && self.statement_match
    }
}

fn show(s: &(Vec<Affine>, Vec<Affine>, Affine)) -> String {
    let list = |v: &[Affine]| {
        if v.is_empty() {
            "1".to_string()
        } else {
            v.iter().map(|a| format!("Γ({a})")).collect::<Vec<_>>().join(" ")
        }
    };
    format!("{} / {} · x^({})", list(&s.0), list(&s.1), s.2)
}

/// Compares the power images and the polynomial identity statements of
/// both sides as multisets of affine gamma arguments after cancellation.
pub fn compare_symbolic(r: Reduction, reading: Reading) -> SymbolicComparison {
    let s = SaigoParams {
        delta: Affine::sym("delta"),
        mu: Affine::sym("mu"),
        epsilon: Affine::sym("epsilon"),
    };
    let ((src, src_tau), (tgt, tgt_tau)) = r.pair(&s, Affine::sym("tau"));
    let a = reduced_image(power_schema(&src, src_tau.clone()));
    let b = reduced_image(power_schema(&tgt, tgt_tau.clone()));
    let sa = statement_schema(IdentityId::for_family(src.family()), &src, src_tau, reading);
    let sb = statement_schema(IdentityId::for_family(tgt.family()), &tgt, tgt_tau, reading);
    SymbolicComparison {
        image_match: a == b,
        statement_match: reduced_statement(sa) == reduced_statement(sb),
        source: show(&a),
        target: show(&b),
    }
}
