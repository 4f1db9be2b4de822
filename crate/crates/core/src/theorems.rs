//! Images of `t^(τ-1) M_n(t)` and `t^(-τ) M_n(1/t)` (or `t^(τ-1) M_n(1/t)`)
//! under each operator family, as a gamma prefactor times a terminating
//! hypergeometric series, together with two independent oracles.
//!
//! Every identity has the shape
//!
//! ```text
//! (-1)^n Γ(q+n+1)/Γ(q+1) · Π Γ(a_i)/Π Γ(b_j) · x^e
//!     · (2+r)F(1+r)[1+n-p, -n, a_1..a_r; q+1, b_1..b_r | ±x^±1]
//! ```
//!
//! where `a_i`, `b_j` and `e` are the power-image arguments of the family.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::GammaProduct;
use crate::hypergeom::{pfq, HypSeriesSpec, DEFAULT_MAX_TERMS};
use crate::jacobi::PolySpec;
use crate::operator::{Family, MsmParams, OperatorSpec};
use crate::power::{check_domain, power_image, power_schema, validate_domain, Condition, Reading};
use crate::sum::CompensatedSum;
use crate::symbolic::Scalar;

const SERIES_TOL: f64 = 1e-16;

/// One polynomial image identity per operator family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityId {
    MsmLeftPoly,
    MsmRightPoly,
    MsmLeftDerivPoly,
    MsmRightDerivPoly,
    SaigoLeftPoly,
    RlLeftPoly,
    EkLeftPoly,
    SaigoRightPoly,
    RlRightPoly,
    EkRightPoly,
}

/// Whether the polynomial is evaluated at `t` or at `1/t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolyArgument {
    Direct,
    Reciprocal,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::MsmLeftPoly,
        IdentityId::MsmRightPoly,
        IdentityId::MsmLeftDerivPoly,
        IdentityId::MsmRightDerivPoly,
        IdentityId::SaigoLeftPoly,
        IdentityId::RlLeftPoly,
        IdentityId::EkLeftPoly,
        IdentityId::SaigoRightPoly,
        IdentityId::RlRightPoly,
        IdentityId::EkRightPoly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::MsmLeftPoly => "msm-left-poly",
            IdentityId::MsmRightPoly => "msm-right-poly",
            IdentityId::MsmLeftDerivPoly => "msm-left-deriv-poly",
            IdentityId::MsmRightDerivPoly => "msm-right-deriv-poly",
            IdentityId::SaigoLeftPoly => "saigo-left-poly",
            IdentityId::RlLeftPoly => "rl-left-poly",
            IdentityId::EkLeftPoly => "ek-left-poly",
            IdentityId::SaigoRightPoly => "saigo-right-poly",
            IdentityId::RlRightPoly => "rl-right-poly",
            IdentityId::EkRightPoly => "ek-right-poly",
        }
    }

    pub fn family(self) -> Family {
        match self {
            IdentityId::MsmLeftPoly => Family::MsmLeftInt,
            IdentityId::MsmRightPoly => Family::MsmRightInt,
            IdentityId::MsmLeftDerivPoly => Family::MsmLeftDeriv,
            IdentityId::MsmRightDerivPoly => Family::MsmRightDeriv,
            IdentityId::SaigoLeftPoly => Family::SaigoLeft,
            IdentityId::RlLeftPoly => Family::RlLeft,
            IdentityId::EkLeftPoly => Family::EkLeft,
            IdentityId::SaigoRightPoly => Family::SaigoRight,
            IdentityId::RlRightPoly => Family::RlRight,
            IdentityId::EkRightPoly => Family::EkRight,
        }
    }

    pub fn for_family(family: Family) -> IdentityId {
        *IdentityId::ALL.iter().find(|i| i.family() == family).unwrap()
    }

    pub fn poly_argument(self) -> PolyArgument {
        if self.family().is_left() {
            PolyArgument::Direct
        } else {
            PolyArgument::Reciprocal
        }
    }

    /// `τ` of the power image multiplying `x^k` (or `x^-k`) in `M_n`.
    /// The monomial exponent grows with `k` except for the right-sided
    /// families acting on `t^(τ-1)`, where `t^(τ-1) t^-k = t^((τ-k)-1)`.
    pub fn shifted_tau(self, tau: f64, k: usize) -> f64 {
        match self {
            IdentityId::SaigoRightPoly | IdentityId::RlRightPoly | IdentityId::EkRightPoly => tau - k as f64,
            _ => tau + k as f64,
        }
    }

    pub fn series_argument(self, x: f64) -> f64 {
        match self.poly_argument() {
            PolyArgument::Direct => -x,
            PolyArgument::Reciprocal => -1.0 / x,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown identity '{s}'")))
    }
}

/// The `τ`-dependent part of an identity: gamma arguments of the prefactor
/// and of the series, and the power of `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct StatementSchema<S> {
    pub prefactor_numerator: Vec<S>,
    pub prefactor_denominator: Vec<S>,
    pub series_numerator: Vec<S>,
    pub series_denominator: Vec<S>,
    pub exponent: S,
    /// `false` when the `(-1)^n` factor is missing.
    pub alternating_sign: bool,
}

/// Statement schema of `id` for `op`. With [`Reading::AsPrinted`] the
/// typographical variants of the printed statements are reproduced:
/// `τ+δ-δ'-μ` in place of `τ+ε-δ-δ'-μ` for the MSM left integral, `τ-μ'`
/// in place of the series parameter `τ-μ` for the MSM left derivative,
/// and no `(-1)^n` for the right Saigo integral.
pub fn statement_schema<S: Scalar>(
    id: IdentityId,
    op: &OperatorSpec<S>,
    tau: S,
    reading: Reading,
) -> StatementSchema<S> {
    let image = power_schema(op, tau.clone());
    let mut s = StatementSchema {
        prefactor_numerator: image.numerator.clone(),
        prefactor_denominator: image.denominator.clone(),
        series_numerator: image.numerator,
        series_denominator: image.denominator,
        exponent: image.exponent,
        alternating_sign: true,
    };
    if reading == Reading::Corrected {
        return s;
    }
    match (id, op) {
        (IdentityId::MsmLeftPoly, OperatorSpec::MsmLeftInt(m)) => {
            let printed = tau + m.delta.clone() - m.delta_p.clone() - m.mu.clone();
            s.prefactor_numerator[1] = printed.clone();
            s.series_numerator[1] = printed;
        }
        (IdentityId::MsmLeftDerivPoly, OperatorSpec::MsmLeftDeriv(m)) => {
            s.series_denominator[0] = tau - m.mu_p.clone();
        }
        (IdentityId::SaigoRightPoly, _) => s.alternating_sign = false,
        _ => {}
    }
    s
}

/// The factored value of an identity's right-hand side.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageEvaluation {
    pub value: f64,
    pub prefactor: GammaProduct,
    pub series: HypSeriesSpec,
    pub series_value: f64,
    pub argument: f64,
    pub exponent: f64,
}

fn check_family(id: IdentityId, op: &OperatorSpec) -> Result<()> {
    if op.family() != id.family() {
        return Err(Error::Config(format!(
            "identity {id} needs a {} operator, got {}",
            id.family(),
            op.family()
        )));
    }
    Ok(())
}

/// Checks the image conditions at every shifted `τ` the expansion of
/// `M_n` produces.
pub fn check_identity_domain(id: IdentityId, op: &OperatorSpec, poly: &PolySpec, tau: f64) -> Result<()> {
    check_family(id, op)?;
    (0..=poly.n).try_for_each(|k| check_domain(op, id.shifted_tau(tau, k)))
}

/// All conditions at every shift, plus the printed condition of the right
/// Saigo identity whose inequality points the other way.
pub fn identity_conditions(id: IdentityId, op: &OperatorSpec, poly: &PolySpec, tau: f64) -> Vec<Condition> {
    let mut out = Vec::new();
    for k in 0..=poly.n {
        let t = id.shifted_tau(tau, k);
        for mut c in validate_domain(op, t) {
            c.label = format!("{} at tau = {t}", c.label);
            out.push(c);
        }
    }
    if let (IdentityId::SaigoRightPoly, OperatorSpec::SaigoRight(s)) = (id, op) {
        out.push(Condition::printed(
            "tau > 1 + min(mu, epsilon)",
            tau - 1.0 - s.mu.min(s.epsilon),
        ));
    }
    out
}

/// Closed-form right-hand side of the identity.
pub fn image_rhs(
    id: IdentityId,
    op: &OperatorSpec,
    poly: &PolySpec,
    tau: f64,
    x: f64,
    reading: Reading,
) -> Result<ImageEvaluation> {
    if !(x > 0.0) {
        return Err(Error::domain("x > 0", x));
    }
    check_identity_domain(id, op, poly, tau)?;
    let s = statement_schema(id, op, tau, reading);
    let n = poly.n as f64;
    let odd = poly.n % 2 == 1 && s.alternating_sign;

    let mut num = vec![poly.q + n + 1.0];
    num.extend(&s.prefactor_numerator);
    let mut den = vec![poly.q + 1.0];
    den.extend(&s.prefactor_denominator);
    let prefactor = GammaProduct::new(num, den).with_sign(if odd { -1 } else { 1 });

    let mut upper = vec![1.0 + n - poly.p, -n];
    upper.extend(&s.series_numerator);
    let mut lower = vec![poly.q + 1.0];
    lower.extend(&s.series_denominator);
    let argument = id.series_argument(x);
    let series = HypSeriesSpec::new(upper, lower, argument);
    let series_value = pfq(&series, SERIES_TOL, DEFAULT_MAX_TERMS)?;

    let value = prefactor.value()? * series_value * x.powf(s.exponent);
    Ok(ImageEvaluation {
        value,
        prefactor,
        series,
        series_value,
        argument,
        exponent: s.exponent,
    })
}

/// The identity's left-hand side, expanding `M_n` into monomials and
/// applying the power image to each: `Σ_k c_k · image(τ±k)(x)`.
pub fn lhs_oracle(id: IdentityId, op: &OperatorSpec, poly: &PolySpec, tau: f64, x: f64) -> Result<f64> {
    lhs_oracle_terms(id, op, poly, tau, x).map(|s| s.value())
}

/// The compensated sum behind [`lhs_oracle`]; its `abs_sum` measures the
/// cancellation between terms.
pub fn lhs_oracle_terms(
    id: IdentityId,
    op: &OperatorSpec,
    poly: &PolySpec,
    tau: f64,
    x: f64,
) -> Result<CompensatedSum> {
    if !(x > 0.0) {
        return Err(Error::domain("x > 0", x));
    }
    check_family(id, op)?;
    let mut sum = CompensatedSum::new();
    for (k, c) in poly.coefficients().into_iter().enumerate() {
        let image = power_image(op, id.shifted_tau(tau, k))?;
        sum.add(c * image.eval(x)?);
    }
    Ok(sum)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
}

/// The MSM derivative as the `m = ⌊ε⌋+1`-fold derivative of an MSM integral
/// with swapped and shifted parameters. The inner image is `C x^s`, so the
/// derivative is `C s (s-1) ... (s-m+1) x^(s-m)`, with `(-d/dx)^m` on the
/// right.
pub fn deriv_composition_oracle(side: Side, p: &MsmParams, tau: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain("x > 0", x));
    }
    let m = p.epsilon.floor() + 1.0;
    let inner = match side {
        Side::Left => OperatorSpec::MsmLeftInt(MsmParams {
            delta: -p.delta_p,
            delta_p: -p.delta,
            mu: m - p.mu_p,
            mu_p: -p.mu,
            epsilon: m - p.epsilon,
        }),
        Side::Right => OperatorSpec::MsmRightInt(MsmParams {
            delta: -p.delta_p,
            delta_p: -p.delta,
            mu: -p.mu_p,
            mu_p: m - p.mu,
            epsilon: m - p.epsilon,
        }),
    };
    let image = power_image(&inner, tau)?;
    let c = image.prefactor.value()?;
    let s = image.exponent;
    let m = m as usize;
    let falling: f64 = (0..m).map(|i| s - i as f64).product();
    let sign = if side == Side::Right && m % 2 == 1 { -1.0 } else { 1.0 };
    Ok(sign * c * falling * x.powf(s - m as f64))
}
