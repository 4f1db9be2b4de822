//! Grid verification of every identity, power image, reduction and
//! polynomial property, producing one record per grid point.

pub mod config;
mod defaults;
mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use config::{Grid, PRule, Tolerances, VerifyConfig};
pub use report::{render_report, Counts, Summary};

use crate::apply::{monomial, operator_apply, Integrand};
use crate::error::{Error, Result};
use crate::hypergeom::{pfq, HypSeriesSpec, DEFAULT_MAX_TERMS};
use crate::jacobi::{
    inner_product, m_jacobi_connection, m_poly, ode_residual, orthogonality_defect, Method, OdeForm, PolySpec,
};
use crate::ledger;
use crate::operator::{Family, Monomial, OperatorSpec, SaigoParams};
use crate::power::{is_integral, power_image, power_schema_printed, ConditionKind, PowerImage, Reading};
use crate::reduction::{compare_symbolic, Reduction};
use crate::theorems::{
    deriv_composition_oracle, identity_conditions, image_rhs, lhs_oracle_terms, IdentityId, PolyArgument, Side,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolyCheck {
    /// Binomial sum against the terminating 2F1 form.
    Forms,
    /// `M_n` against the classical Jacobi polynomial.
    Connection,
    Orthogonality,
    /// Residual of the differential equation.
    Ode,
}

impl PolyCheck {
    pub const ALL: [PolyCheck; 4] = [
        PolyCheck::Forms,
        PolyCheck::Connection,
        PolyCheck::Orthogonality,
        PolyCheck::Ode,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolyCheck::Forms => "poly-forms",
            PolyCheck::Connection => "poly-connection",
            PolyCheck::Orthogonality => "poly-orthogonality",
            PolyCheck::Ode => "poly-ode",
        }
    }
}

/// A kind of check; each produces one record per grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Identity(IdentityId),
    /// Power image against quadrature, or against the derivative composition.
    Image(Family),
    Reduction(Reduction),
    Poly(PolyCheck),
}

impl CheckId {
    pub fn all() -> Vec<CheckId> {
        let mut v: Vec<CheckId> = IdentityId::ALL.into_iter().map(CheckId::Identity).collect();
        v.extend(Family::ALL.into_iter().map(CheckId::Image));
        v.extend(Reduction::ALL.into_iter().map(CheckId::Reduction));
        v.extend(PolyCheck::ALL.into_iter().map(CheckId::Poly));
        v
    }

    pub fn name(self) -> String {
        match self {
            CheckId::Identity(i) => i.name().to_string(),
            CheckId::Image(f) => format!("{}-image", f.name()),
            CheckId::Reduction(r) => r.name().to_string(),
            CheckId::Poly(p) => p.name().to_string(),
        }
    }

    pub fn family(self) -> Option<Family> {
        match self {
            CheckId::Identity(i) => Some(i.family()),
            CheckId::Image(f) => Some(f),
            CheckId::Reduction(_) => Some(Family::SaigoLeft),
            CheckId::Poly(_) => None,
        }
    }

    /// Length of a parameter tuple, for checks that take one.
    pub fn arity(self) -> Option<usize> {
        self.family().map(|f| f.param_names().len())
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckId::all()
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown check '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SkipReason {
    Domain,
    Pole,
    UnsupportedKernel,
    Convergence,
}

impl SkipReason {
    pub fn name(self) -> &'static str {
        match self {
            SkipReason::Domain => "domain",
            SkipReason::Pole => "pole",
            SkipReason::UnsupportedKernel => "unsupported-kernel",
            SkipReason::Convergence => "convergence",
        }
    }

    fn of(e: &Error) -> SkipReason {
        match e {
            Error::Pole { .. } | Error::Overflow { .. } | Error::DenominatorPole { .. } => SkipReason::Pole,
            Error::UnsupportedKernel(_) => SkipReason::UnsupportedKernel,
            Error::NonConverged { .. } | Error::Divergence(_) => SkipReason::Convergence,
            Error::Domain { .. } | Error::Config(_) => SkipReason::Domain,
        }
    }
}

/// A printed formula refuted at this point, with its value when it has one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyValue {
    pub id: String,
    pub printed_value: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub index: usize,
    pub check: String,
    pub family: Option<String>,
    pub point: BTreeMap<String, f64>,
    pub oracle_value: Option<f64>,
    pub closed_form_value: Option<f64>,
    pub quadrature_value: Option<f64>,
    pub quadrature_rel_diff: Option<f64>,
    pub rel_diff: Option<f64>,
    pub tolerance: f64,
    pub quadrature_tolerance: Option<f64>,
    pub verdict: Verdict,
    pub reason: Option<SkipReason>,
    pub detail: Option<String>,
    pub ledger_note: Option<String>,
    pub discrepancies: Vec<DiscrepancyValue>,
}

#[derive(Debug, Clone)]
struct Task {
    check: CheckId,
    params: Vec<f64>,
    tau: f64,
    x: f64,
    m: usize,
    n: usize,
    p: f64,
    q: f64,
}

fn tasks(cfg: &VerifyConfig) -> Vec<Task> {
    let mut out = Vec::new();
    for &check in &cfg.checks {
        let g = cfg.grid(check);
        let base = Task {
            check,
            params: Vec::new(),
            tau: f64::NAN,
            x: f64::NAN,
            m: 0,
            n: 0,
            p: f64::NAN,
            q: f64::NAN,
        };
        match check {
            CheckId::Identity(_) => {
                for params in &g.params {
                    for &tau in &g.tau {
                        for &q in &g.q {
                            for &n in &g.n {
                                for rule in &g.p {
                                    for &x in &g.x {
                                        out.push(Task {
                                            params: params.clone(),
                                            tau,
                                            x,
                                            n,
                                            p: rule.at(n),
                                            q,
                                            ..base.clone()
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
            CheckId::Image(_) | CheckId::Reduction(_) => {
                for params in &g.params {
                    for &tau in &g.tau {
                        for &x in &g.x {
                            out.push(Task {
                                params: params.clone(),
                                tau,
                                x,
                                ..base.clone()
                            });
                        }
                    }
                }
            }
            CheckId::Poly(PolyCheck::Orthogonality) => {
                for &n in &g.n {
                    for &m in g.n.iter().filter(|&&m| m < n) {
                        for rule in &g.p {
                            for &q in &g.q {
                                out.push(Task {
                                    m,
                                    n,
                                    p: rule.at(n),
                                    q,
                                    ..base.clone()
                                });
                            }
                        }
                    }
                }
            }
            CheckId::Poly(_) => {
                for &n in &g.n {
                    for rule in &g.p {
                        for &q in &g.q {
                            for &x in &g.x {
                                out.push(Task {
                                    n,
                                    p: rule.at(n),
                                    q,
                                    x,
                                    ..base.clone()
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Below this fraction of the summed term magnitudes an oracle value is
/// compared in absolute terms against that magnitude.
const CANCELLATION_FLOOR: f64 = 1e-4;

fn rel_diff(value: f64, oracle: f64) -> f64 {
    scaled_diff(value, oracle, 0.0)
}

/// `|value - oracle| / max(|oracle|, floor · term_scale)`
fn scaled_diff(value: f64, oracle: f64, term_scale: f64) -> f64 {
    let den = oracle.abs().max(CANCELLATION_FLOOR * term_scale);
    if den == 0.0 {
        value.abs()
    } else {
        (value - oracle).abs() / den
    }
}

fn point(t: &Task) -> BTreeMap<String, f64> {
    let mut p = BTreeMap::new();
    let mut put = |k: &str, v: f64| {
        p.insert(k.to_string(), v);
    };
    match t.check {
        CheckId::Identity(id) => {
            for (name, v) in id.family().param_names().iter().zip(&t.params) {
                put(name, *v);
            }
            put("n", t.n as f64);
            put("p", t.p);
            put("q", t.q);
            put("tau", t.tau);
            put("x", t.x);
        }
        CheckId::Image(f) => {
            for (name, v) in f.param_names().iter().zip(&t.params) {
                put(name, *v);
            }
            put("tau", t.tau);
            put("x", t.x);
        }
        CheckId::Reduction(_) => {
            for (name, v) in ["delta", "mu", "epsilon"].iter().zip(&t.params) {
                put(name, *v);
            }
            put("tau", t.tau);
            put("x", t.x);
        }
        CheckId::Poly(PolyCheck::Orthogonality) => {
            put("m", t.m as f64);
            put("n", t.n as f64);
            put("p", t.p);
            put("q", t.q);
        }
        CheckId::Poly(_) => {
            put("n", t.n as f64);
            put("p", t.p);
            put("q", t.q);
            put("x", t.x);
        }
    }
    p
}

fn default_tolerance(cfg: &VerifyConfig, check: CheckId) -> f64 {
    match check {
        CheckId::Identity(_) => cfg.tol.oracle,
        CheckId::Image(f) if is_integral(f) => cfg.tol.quadrature,
        CheckId::Image(_) | CheckId::Reduction(_) => cfg.tol.oracle,
        CheckId::Poly(PolyCheck::Forms) => 1e-12,
        CheckId::Poly(PolyCheck::Connection) => 1e-11,
        CheckId::Poly(PolyCheck::Orthogonality) => 1e-8,
        CheckId::Poly(PolyCheck::Ode) => 1e-10,
    }
}

fn power_of(family: Family, tau: f64) -> f64 {
    match family.monomial() {
        Monomial::TauMinusOne => tau - 1.0,
        Monomial::MinusTau => -tau,
    }
}

/// Discrepancy ids for printed conditions, by the label they carry.
fn printed_condition_id(label: &str) -> &'static str {
    if label.starts_with("tau > delta - delta_p") {
        "msm-left-int-condition"
    } else if label.starts_with("tau > epsilon - delta") {
        "msm-left-deriv-condition"
    } else if label.starts_with("tau > epsilon") {
        "ek-left-condition"
    } else {
        "saigo-right-poly-condition-direction"
    }
}

fn printed_statement_id(id: IdentityId) -> Option<&'static str> {
    match id {
        IdentityId::MsmLeftPoly => Some("msm-left-poly-gamma-argument"),
        IdentityId::MsmLeftDerivPoly => Some("msm-left-deriv-poly-series-parameter"),
        IdentityId::SaigoRightPoly => Some("saigo-right-poly-sign"),
        _ => None,
    }
}

struct Outcome {
    rec: VerificationRecord,
}

impl Outcome {
    fn compare(&mut self, closed: f64, oracle: f64) {
        self.compare_scaled(closed, oracle, 0.0);
    }

    fn compare_scaled(&mut self, closed: f64, oracle: f64, scale: f64) {
        self.rec.closed_form_value = Some(closed);
        self.rec.oracle_value = Some(oracle);
        self.rec.rel_diff = Some(scaled_diff(closed, oracle, scale));
    }

    fn quadrature(&mut self, value: f64, reference: f64, scale: f64, tol: f64) {
        self.rec.quadrature_value = Some(value);
        self.rec.quadrature_rel_diff = Some(scaled_diff(value, reference, scale));
        self.rec.quadrature_tolerance = Some(tol);
    }

    fn discrepancy(&mut self, id: &str, printed_value: Option<f64>) {
        self.rec.discrepancies.push(DiscrepancyValue {
            id: id.to_string(),
            printed_value,
        });
    }
}

fn evaluate(cfg: &VerifyConfig, index: usize, t: &Task) -> VerificationRecord {
    let tolerance = cfg.grid(t.check).tol.unwrap_or_else(|| default_tolerance(cfg, t.check));
    let mut out = Outcome {
        rec: VerificationRecord {
            index,
            check: t.check.name(),
            family: match t.check {
                CheckId::Identity(i) => Some(i.family().name().to_string()),
                CheckId::Image(f) => Some(f.name().to_string()),
                _ => None,
            },
            point: point(t),
            oracle_value: None,
            closed_form_value: None,
            quadrature_value: None,
            quadrature_rel_diff: None,
            rel_diff: None,
            tolerance,
            quadrature_tolerance: None,
            verdict: Verdict::Skipped,
            reason: None,
            detail: None,
            ledger_note: None,
            discrepancies: Vec::new(),
        },
    };
    let result = match t.check {
        CheckId::Identity(id) => identity(cfg, id, t, &mut out),
        CheckId::Image(f) => image(cfg, f, t, &mut out),
        CheckId::Reduction(r) => reduction(cfg, r, t, &mut out),
        CheckId::Poly(p) => polynomial(cfg, p, t, &mut out),
    };
    let mut rec = out.rec;
    match result {
        Err(e) => {
            rec.verdict = Verdict::Skipped;
            rec.reason = Some(SkipReason::of(&e));
            rec.detail = Some(e.to_string());
        }
        Ok(()) => {
            let main = rec.rel_diff.is_some_and(|d| d <= rec.tolerance);
            let quad = match (rec.quadrature_rel_diff, rec.quadrature_tolerance) {
                (Some(d), Some(tol)) => d <= tol,
                _ => true,
            };
            rec.verdict = if main && quad && rec.verdict != Verdict::Fail {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
        }
    }
    if rec.ledger_note.is_none() {
        if let Some(d) = rec.discrepancies.first().and_then(|d| ledger::lookup(&d.id)) {
            let prefix = if cfg.reading == Reading::AsPrinted && rec.verdict == Verdict::Fail {
                "evaluated as printed"
            } else {
                "printed form refuted here"
            };
            rec.ledger_note = Some(format!(
                "{prefix} [{}]: printed {}; adopted {}",
                d.id, d.printed, d.adopted
            ));
        }
    }
    rec
}

fn poly_integrand<'a>(poly: PolySpec, arg: PolyArgument) -> impl Fn(f64) -> f64 + Sync + 'a {
    move |t: f64| {
        let s = match arg {
            PolyArgument::Direct => t,
            PolyArgument::Reciprocal => 1.0 / t,
        };
        m_poly(&poly, s, Method::Direct).unwrap_or(f64::NAN)
    }
}

fn identity(cfg: &VerifyConfig, id: IdentityId, t: &Task, out: &mut Outcome) -> Result<()> {
    let op = OperatorSpec::from_values(id.family(), &t.params)?;
    let poly = PolySpec::new(t.n, t.p, t.q);
    let corrected = image_rhs(id, &op, &poly, t.tau, t.x, Reading::Corrected)?;
    let terms = lhs_oracle_terms(id, &op, &poly, t.tau, t.x)?;
    let (oracle, scale) = (terms.value(), terms.abs_sum());
    let printed = match printed_statement_id(id) {
        Some(_) => Some(image_rhs(id, &op, &poly, t.tau, t.x, Reading::AsPrinted)?.value),
        None => None,
    };
    let closed = match (cfg.reading, printed) {
        (Reading::AsPrinted, Some(v)) => v,
        _ => corrected.value,
    };
    out.compare_scaled(closed, oracle, scale);
    let tol = out.rec.tolerance;

    if let (Some(did), Some(v)) = (printed_statement_id(id), printed) {
        if scaled_diff(v, oracle, scale) > tol {
            out.discrepancy(did, Some(v));
        }
    }
    if matches!(id, IdentityId::MsmLeftPoly | IdentityId::MsmRightPoly) && t.n > 0 {
        let mut upper = corrected.series.numerator_params.clone();
        upper[0] -= 1.0;
        let series = HypSeriesSpec::new(upper, corrected.series.denominator_params.clone(), corrected.argument);
        let v = corrected.prefactor.value()? * pfq(&series, 1e-16, DEFAULT_MAX_TERMS)? * t.x.powf(corrected.exponent);
        if scaled_diff(v, oracle, scale) > tol {
            out.discrepancy("series-pochhammer-shift", Some(v));
        }
    }
    for c in identity_conditions(id, &op, &poly, t.tau) {
        if c.kind == ConditionKind::Printed && !c.passes() {
            let did = printed_condition_id(&c.label);
            if !out.rec.discrepancies.iter().any(|d| d.id == did) {
                out.discrepancy(did, None);
            }
        }
    }

    if cfg.quadrature && t.n <= cfg.quadrature_max_n && is_integral(id.family()) {
        let smooth = poly_integrand(poly, id.poly_argument());
        let f = Integrand::power_times(power_of(id.family(), t.tau), &smooth);
        match operator_apply(&op, &f, t.x, &cfg.quad) {
            Ok(q) => out.quadrature(q.value, oracle, scale, cfg.tol.quadrature),
            Err(Error::UnsupportedKernel(m)) => out.rec.detail = Some(format!("no quadrature: {m}")),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

fn image(cfg: &VerifyConfig, family: Family, t: &Task, out: &mut Outcome) -> Result<()> {
    let op = OperatorSpec::from_values(family, &t.params)?;
    let corrected = power_image(&op, t.tau)?;
    let printed: Option<PowerImage> = power_schema_printed(&op, t.tau).map(Into::into);
    let closed = match (cfg.reading, &printed) {
        (Reading::AsPrinted, Some(p)) => p.eval(t.x)?,
        _ => corrected.eval(t.x)?,
    };
    for c in crate::power::validate_domain(&op, t.tau) {
        if c.kind == ConditionKind::Printed && !c.passes() {
            out.discrepancy(printed_condition_id(&c.label), None);
        }
    }
    let oracle = if is_integral(family) {
        out.rec.closed_form_value = Some(closed);
        let q = operator_apply(&op, &monomial(power_of(family, t.tau)), t.x, &cfg.quad)?;
        out.rec.quadrature_value = Some(q.value);
        out.rec.detail = Some(format!(
            "quadrature error estimate {:e} with {} nodes",
            q.error, q.nodes
        ));
        q.value
    } else {
        let side = if family.is_left() { Side::Left } else { Side::Right };
        let p = match op {
            OperatorSpec::MsmLeftDeriv(p) | OperatorSpec::MsmRightDeriv(p) => p,
            _ => unreachable!(),
        };
        deriv_composition_oracle(side, &p, t.tau, t.x)?
    };
    out.compare(closed, oracle);
    if let Some(p) = printed {
        let v = p.eval(t.x)?;
        if rel_diff(v, oracle) > out.rec.tolerance {
            out.discrepancy("ek-left-exponent", Some(v));
        }
    }
    Ok(())
}

fn reduction(cfg: &VerifyConfig, r: Reduction, t: &Task, out: &mut Outcome) -> Result<()> {
    let s = SaigoParams {
        delta: t.params[0],
        mu: t.params[1],
        epsilon: t.params[2],
    };
    let ((src, src_tau), (tgt, tgt_tau)) = r.pair(&s, t.tau);
    let sym = compare_symbolic(r, cfg.reading);
    let a = power_image(&src, src_tau)?.eval(t.x)?;
    let b = power_image(&tgt, tgt_tau)?.eval(t.x)?;
    out.compare(a, b);
    out.rec.detail = Some(if sym.exact() {
        format!("symbolic: exact, {}", sym.target)
    } else {
        format!(
            "symbolic: images {}, statements {}; {} vs {}",
            if sym.image_match { "match" } else { "differ" },
            if sym.statement_match { "match" } else { "differ" },
            sym.source,
            sym.target
        )
    });
    if !sym.exact() {
        out.rec.verdict = Verdict::Fail;
        if !sym.statement_match && cfg.reading == Reading::AsPrinted {
            out.discrepancy("saigo-right-poly-sign", None);
        }
    }
    if cfg.quadrature {
        let qa = operator_apply(&src, &monomial(power_of(src.family(), src_tau)), t.x, &cfg.quad)?;
        let qb = operator_apply(&tgt, &monomial(power_of(tgt.family(), tgt_tau)), t.x, &cfg.quad)?;
        out.quadrature(qa.value, qb.value, 0.0, cfg.tol.reduction);
    }
    Ok(())
}

/// `Σ |c_k| |x|^k`, the size of the terms summed to get `M_n(x)`.
fn term_scale(poly: &PolySpec, x: f64) -> f64 {
    poly.coefficients()
        .iter()
        .enumerate()
        .map(|(k, c)| c.abs() * x.abs().powi(k as i32))
        .sum()
}

fn polynomial(cfg: &VerifyConfig, check: PolyCheck, t: &Task, out: &mut Outcome) -> Result<()> {
    let poly = PolySpec::new(t.n, t.p, t.q);
    match check {
        PolyCheck::Forms | PolyCheck::Connection => {
            let (closed, oracle) = if check == PolyCheck::Forms {
                (
                    m_poly(&poly, t.x, Method::Hypergeometric)?,
                    m_poly(&poly, t.x, Method::Direct)?,
                )
            } else {
                let (lhs, rhs) = m_jacobi_connection(&poly, t.x)?;
                (rhs, lhs)
            };
            out.rec.closed_form_value = Some(closed);
            out.rec.oracle_value = Some(oracle);
            out.rec.rel_diff = Some((closed - oracle).abs() / term_scale(&poly, t.x));
        }
        PolyCheck::Orthogonality => {
            if !(t.p > 2.0 * t.n as f64 + 1.0 && t.q > -1.0) {
                return Err(Error::domain(
                    format!("p > 2n + 1 and q > -1 (p = {}, q = {})", t.p, t.q),
                    (t.p - 2.0 * t.n as f64 - 1.0).min(t.q + 1.0),
                ));
            }
            let value = inner_product(t.m, t.n, t.p, t.q, &cfg.quad)?;
            let defect = orthogonality_defect(t.m, t.n, t.p, t.q, &cfg.quad)?;
            out.rec.closed_form_value = Some(value);
            out.rec.oracle_value = Some(0.0);
            out.rec.rel_diff = Some(defect);
        }
        PolyCheck::Ode => {
            let form = match cfg.reading {
                Reading::Corrected => OdeForm::Corrected,
                Reading::AsPrinted => OdeForm::AsPrinted,
            };
            let r = ode_residual(&poly, t.x, form);
            out.rec.closed_form_value = Some(r.residual);
            out.rec.oracle_value = Some(0.0);
            out.rec.rel_diff = Some(r.normalized());
            let printed = ode_residual(&poly, t.x, OdeForm::AsPrinted);
            if printed.normalized() > out.rec.tolerance {
                out.discrepancy("ode-eigenvalue", Some(printed.residual));
            }
        }
    }
    Ok(())
}

/// Runs every grid point of the configured checks. Points are evaluated in
/// parallel and returned in grid order.
pub fn run(cfg: &VerifyConfig) -> Result<Vec<VerificationRecord>> {
    cfg.validate()?;
    let tasks = tasks(cfg);
    let work = || {
        tasks
            .par_iter()
            .enumerate()
            .map(|(i, t)| evaluate(cfg, i, t))
            .collect::<Vec<_>>()
    };
    if cfg.threads == 0 {
        Ok(work())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
        Ok(pool.install(work))
    }
}

/// One CSV row per record, with a fixed column set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub index: usize,
    pub check: String,
    pub delta: Option<f64>,
    pub delta_p: Option<f64>,
    pub mu: Option<f64>,
    pub mu_p: Option<f64>,
    pub epsilon: Option<f64>,
    pub m: Option<f64>,
    pub n: Option<f64>,
    pub p: Option<f64>,
    pub q: Option<f64>,
    pub tau: Option<f64>,
    pub x: Option<f64>,
    pub closed_form: Option<f64>,
    pub oracle: Option<f64>,
    pub quadrature: Option<f64>,
    pub verdict: Verdict,
}

impl From<&VerificationRecord> for SweepRow {
    fn from(r: &VerificationRecord) -> Self {
        let get = |k: &str| r.point.get(k).copied();
        SweepRow {
            index: r.index,
            check: r.check.clone(),
            delta: get("delta"),
            delta_p: get("delta_p"),
            mu: get("mu"),
            mu_p: get("mu_p"),
            epsilon: get("epsilon"),
            m: get("m"),
            n: get("n"),
            p: get("p"),
            q: get("q"),
            tau: get("tau"),
            x: get("x"),
            closed_form: r.closed_form_value,
            oracle: r.oracle_value,
            quadrature: r.quadrature_value,
            verdict: r.verdict,
        }
    }
}
