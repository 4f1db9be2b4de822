//! `msmpoly eval <target>`: one value at one point, printed as text and as
//! a JSON object.

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, ValueEnum};
use msmpoly::{
    appell_f3, image_rhs, jacobi_p, lhs_oracle, m_poly, monomial, operator_apply, pfq, power_image,
    power_schema_printed, Family, GammaProduct, HypSeriesSpec, IdentityId, Integrand, JacobiSpec, Method, Monomial,
    OperatorSpec, PolyArgument, PolySpec, PowerImage, QuadConfig, Reading,
};
use serde_json::{json, Value};

use crate::Failure;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// Generalized hypergeometric series: --num, --den, --arg
    Pfq,
    /// Appell F3: --num a,a',b,b' --den c --w --z
    F3,
    /// M_n^(p,q)(x): --n --p --q --x
    Mpoly,
    /// P_n^(alpha,beta)(x): --n --alpha --beta --x
    Jacobi,
    /// Power-function image: --family, its parameters, --tau [--x]
    Image,
    /// Operator applied by quadrature to a power, or with --n to a polynomial
    Apply,
    /// Closed-form right-hand side of a polynomial identity
    Rhs,
    /// Term-by-term oracle of a polynomial identity
    Oracle,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodArg {
    Direct,
    Hypergeometric,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    pub target: Target,

    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    identity: Option<IdentityId>,

    #[arg(long, allow_hyphen_values = true)]
    delta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    delta_p: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    mu_p: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    epsilon: Option<f64>,

    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,

    /// Comma-separated numerator parameters
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    num: Vec<f64>,
    /// Comma-separated denominator parameters
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    den: Vec<f64>,
    #[arg(long, allow_hyphen_values = true)]
    arg: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    w: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<f64>,

    #[arg(long, value_enum, default_value = "direct")]
    method: MethodArg,

    /// Series truncation tolerance
    #[arg(long, default_value_t = 1e-15)]
    tol: f64,
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Domain(format!("missing --{flag}")))
}

impl EvalArgs {
    fn family(&self) -> Result<Family, Failure> {
        match (self.family, self.identity) {
            (Some(f), _) => Ok(f),
            (None, Some(i)) => Ok(i.family()),
            (None, None) => Err(Failure::Domain("missing --family or --identity".into())),
        }
    }

    fn identity(&self) -> Result<IdentityId, Failure> {
        match (self.identity, self.family) {
            (Some(i), Some(f)) if i.family() != f => Err(Failure::Domain(format!(
                "identity {i} belongs to {}, not {f}",
                i.family()
            ))),
            (Some(i), _) => Ok(i),
            (None, Some(f)) => Ok(IdentityId::for_family(f)),
            (None, None) => Err(Failure::Domain("missing --identity or --family".into())),
        }
    }

    fn operator(&self, family: Family) -> Result<OperatorSpec, Failure> {
        let values = family
            .param_names()
            .iter()
            .map(|&name| {
                let v = match name {
                    "delta" => self.delta,
                    "delta_p" => self.delta_p,
                    "mu" => self.mu,
                    "mu_p" => self.mu_p,
                    _ => self.epsilon,
                };
                need(v, &name.replace('_', "-"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(OperatorSpec::from_values(family, &values)?)
    }

    fn poly(&self) -> Result<PolySpec, Failure> {
        Ok(PolySpec::new(
            need(self.n, "n")?,
            need(self.p, "p")?,
            need(self.q, "q")?,
        ))
    }

    fn reading(as_printed: bool) -> Reading {
        if as_printed {
            Reading::AsPrinted
        } else {
            Reading::Corrected
        }
    }
}

fn gamma_json(g: &GammaProduct) -> Value {
    json!({
        "numerator_args": g.numerator_args,
        "denominator_args": g.denominator_args,
        "sign": g.sign,
        "rational_scale": g.rational_scale.to_string(),
    })
}

fn gamma_text(g: &GammaProduct) -> String {
    let side = |v: &[f64]| {
        if v.is_empty() {
            "1".to_string()
        } else {
            v.iter().map(|a| format!("Γ({a})")).collect::<Vec<_>>().join(" ")
        }
    };
    let sign = if g.sign < 0 { "-" } else { "" };
    let scale = if *g.rational_scale.numer() == 1 && *g.rational_scale.denom() == 1 {
        String::new()
    } else {
        format!("{} · ", g.rational_scale)
    };
    format!(
        "{sign}{scale}{} / {}",
        side(&g.numerator_args),
        side(&g.denominator_args)
    )
}

fn power_of(family: Family, tau: f64) -> f64 {
    match family.monomial() {
        Monomial::TauMinusOne => tau - 1.0,
        Monomial::MinusTau => -tau,
    }
}

pub fn run(a: &EvalArgs, as_printed: bool, out: Option<&Path>) -> Result<ExitCode, Failure> {
    let mut lines: Vec<String> = Vec::new();
    let json = match a.target {
        Target::Pfq => {
            let spec = HypSeriesSpec::new(a.num.clone(), a.den.clone(), need(a.arg, "arg")?);
            let v = pfq(&spec, a.tol, msmpoly::hypergeom::DEFAULT_MAX_TERMS)?;
            lines.push(format!("value: {v}"));
            json!({ "target": "pfq", "value": v, "series": spec })
        }
        Target::F3 => {
            if a.num.len() != 4 || a.den.len() != 1 {
                return Err(Failure::Domain("f3 needs --num a,a',b,b' and --den c".into()));
            }
            let (w, z) = (need(a.w, "w")?, need(a.z, "z")?);
            let v = appell_f3(a.num[0], a.num[1], a.num[2], a.num[3], a.den[0], w, z, a.tol)?;
            lines.push(format!("value: {v}"));
            json!({ "target": "f3", "value": v, "numerator": a.num, "denominator": a.den, "w": w, "z": z })
        }
        Target::Mpoly => {
            let poly = a.poly()?;
            let method = match a.method {
                MethodArg::Direct => Method::Direct,
                MethodArg::Hypergeometric => Method::Hypergeometric,
            };
            let x = need(a.x, "x")?;
            let v = m_poly(&poly, x, method)?;
            lines.push(format!("value: {v}"));
            json!({ "target": "mpoly", "value": v, "poly": poly, "x": x, "coefficients": poly.coefficients() })
        }
        Target::Jacobi => {
            let spec = JacobiSpec {
                n: need(a.n, "n")?,
                alpha: need(a.alpha, "alpha")?,
                beta: need(a.beta, "beta")?,
            };
            let x = need(a.x, "x")?;
            let v = jacobi_p(&spec, x);
            lines.push(format!("value: {v}"));
            json!({ "target": "jacobi", "value": v, "spec": spec, "x": x })
        }
        Target::Image => {
            let family = a.family()?;
            let op = a.operator(family)?;
            let tau = need(a.tau, "tau")?;
            let image: PowerImage = match power_schema_printed(&op, tau) {
                Some(p) if as_printed => {
                    msmpoly::check_domain(&op, tau)?;
                    p.into()
                }
                _ => power_image(&op, tau)?,
            };
            let prefactor = image.prefactor.value()?;
            lines.push(format!("prefactor: {prefactor}"));
            lines.push(format!("exponent: {}", image.exponent));
            lines.push(format!("gamma: {}", gamma_text(&image.prefactor)));
            let value = match a.x {
                Some(x) => {
                    let v = image.eval(x)?;
                    lines.push(format!("value: {v}"));
                    Some(v)
                }
                None => None,
            };
            json!({
                "target": "image",
                "family": family.name(),
                "params": op.named_values().into_iter().collect::<std::collections::BTreeMap<_, _>>(),
                "tau": tau,
                "prefactor": prefactor,
                "exponent": image.exponent,
                "gamma": gamma_json(&image.prefactor),
                "x": a.x,
                "value": value,
            })
        }
        Target::Apply => {
            let family = a.family()?;
            let op = a.operator(family)?;
            let (tau, x) = (need(a.tau, "tau")?, need(a.x, "x")?);
            let power = power_of(family, tau);
            let quad = QuadConfig::default();
            let est = match a.n {
                Some(_) => {
                    let poly = a.poly()?;
                    let arg = IdentityId::for_family(family).poly_argument();
                    let smooth = move |t: f64| {
                        let s = if arg == PolyArgument::Direct { t } else { 1.0 / t };
                        m_poly(&poly, s, Method::Direct).unwrap_or(f64::NAN)
                    };
                    operator_apply(&op, &Integrand::power_times(power, &smooth), x, &quad)?
                }
                None => operator_apply(&op, &monomial(power), x, &quad)?,
            };
            lines.push(format!("value: {}", est.value));
            lines.push(format!("error estimate: {:e}", est.error));
            json!({
                "target": "apply",
                "family": family.name(),
                "params": op.named_values().into_iter().collect::<std::collections::BTreeMap<_, _>>(),
                "tau": tau,
                "x": x,
                "n": a.n,
                "value": est.value,
                "error_estimate": est.error,
                "nodes": est.nodes,
            })
        }
        Target::Rhs => {
            let id = a.identity()?;
            let op = a.operator(id.family())?;
            let poly = a.poly()?;
            let (tau, x) = (need(a.tau, "tau")?, need(a.x, "x")?);
            let e = image_rhs(id, &op, &poly, tau, x, EvalArgs::reading(as_printed))?;
            lines.push(format!("value: {}", e.value));
            lines.push(format!("gamma: {}", gamma_text(&e.prefactor)));
            lines.push(format!("series: {}", e.series_value));
            lines.push(format!("exponent: {}", e.exponent));
            json!({
                "target": "rhs",
                "identity": id.name(),
                "value": e.value,
                "gamma": gamma_json(&e.prefactor),
                "series": e.series,
                "series_value": e.series_value,
                "argument": e.argument,
                "exponent": e.exponent,
            })
        }
        Target::Oracle => {
            let id = a.identity()?;
            let op = a.operator(id.family())?;
            let poly = a.poly()?;
            let (tau, x) = (need(a.tau, "tau")?, need(a.x, "x")?);
            let v = lhs_oracle(id, &op, &poly, tau, x)?;
            lines.push(format!("value: {v}"));
            json!({ "target": "oracle", "identity": id.name(), "value": v })
        }
    };
    let text = serde_json::to_string(&json).expect("json");
    for l in &lines {
        println!("{l}");
    }
    match out {
        Some(p) => fs::write(p, format!("{text}\n"))?,
        None => println!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}
