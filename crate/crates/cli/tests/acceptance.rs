//! One line per acceptance criterion; exits nonzero if any fails.

use std::path::Path;
use std::process::Command;

use msmpoly::symbolic::{cancel_common, Scalar};
use msmpoly::verify::{self, Verdict, VerificationRecord, VerifyConfig};
use msmpoly::{
    appell_f3, compare_symbolic, hyp2f1, ode_residual, power_schema, Affine, IdentityId, MsmParams, OdeForm,
    OperatorSpec, PolySpec, Reading, Reduction,
};

type Outcome = Result<String, String>;

fn run(text: &str) -> Result<Vec<VerificationRecord>, String> {
    let cfg = VerifyConfig::parse(text).map_err(|e| e.to_string())?;
    verify::run(&cfg).map_err(|e| e.to_string())
}

fn all_pass(recs: &[VerificationRecord]) -> Result<(), String> {
    match recs.iter().find(|r| r.verdict != Verdict::Pass) {
        Some(r) => Err(format!("#{} {} {:?}: {:?}", r.index, r.check, r.point, r.verdict)),
        None if recs.is_empty() => Err("no records".into()),
        None => Ok(()),
    }
}

fn max_of(recs: &[VerificationRecord], f: impl Fn(&VerificationRecord) -> Option<f64>) -> f64 {
    recs.iter().filter_map(f).fold(0.0, f64::max)
}

const MSM_LEFT_GRID: &str = "checks = msm-left-poly\n\
    msm-left-poly.params = 0.5, 0.3, 0.2, 0.4, 1.1; 0.2, 0.1, 0.3, 0.5, 0.9\n\
    msm-left-poly.tau = 2, 3.5\n\
    msm-left-poly.x = 0.5, 1, 2\n\
    msm-left-poly.n = 0..=5\n\
    msm-left-poly.p = 2n+3\n\
    msm-left-poly.q = 0, 1.5\n";

fn msm_left_identity() -> Outcome {
    let recs = run(MSM_LEFT_GRID)?;
    all_pass(&recs)?;
    let worst = max_of(&recs, |r| r.rel_diff);
    if worst > 1e-10 {
        return Err(format!("max rel diff {worst:e}"));
    }
    let printed = run(&format!("{MSM_LEFT_GRID}as_printed = true\n"))?;
    let fails: Vec<_> = printed.iter().filter(|r| r.verdict == Verdict::Fail).collect();
    let ledgered = fails
        .iter()
        .filter(|r| r.discrepancies.iter().any(|d| d.id == "msm-left-poly-gamma-argument"))
        .count();
    if fails.is_empty() || ledgered != fails.len() {
        return Err(format!("printed form: {} fails, {} ledgered", fails.len(), ledgered));
    }
    Ok(format!(
        "{} points, max rel diff {worst:.1e}; printed form fails at {} points, all ledgered",
        recs.len(),
        fails.len()
    ))
}

fn other_identities() -> Outcome {
    let names: Vec<_> = IdentityId::ALL[1..].iter().map(|i| i.name()).collect();
    let recs = run(&format!("checks = {}\n", names.join(", ")))?;
    all_pass(&recs)?;
    let worst = max_of(&recs, |r| r.rel_diff);
    if worst > 1e-10 {
        return Err(format!("max rel diff {worst:e}"));
    }
    Ok(format!(
        "{} identities, {} points, max rel diff {worst:.1e}",
        names.len(),
        recs.len()
    ))
}

fn quadrature() -> Outcome {
    let rl = run("checks = rl-left-image\n")?;
    all_pass(&rl)?;
    let rl_worst = max_of(&rl, |r| r.rel_diff);
    let saigo = run("checks = saigo-left-image, saigo-right-image\n")?;
    all_pass(&saigo)?;
    let saigo_worst = max_of(&saigo, |r| r.rel_diff);
    let statements =
        run("checks = saigo-left-poly, saigo-right-poly\nsaigo-left-poly.n = 0..=3\nsaigo-right-poly.n = 0..=3\n")?;
    all_pass(&statements)?;
    let quad: Vec<_> = statements.iter().filter_map(|r| r.quadrature_rel_diff).collect();
    let st_worst = quad.iter().copied().fold(0.0, f64::max);
    if rl_worst > 1e-8 || saigo_worst > 1e-6 || st_worst > 1e-6 || quad.len() != statements.len() {
        return Err(format!(
            "{rl_worst:e} {saigo_worst:e} {st_worst:e} ({} of {})",
            quad.len(),
            statements.len()
        ));
    }
    Ok(format!(
        "RL images {rl_worst:.1e} ({} points), Saigo images {saigo_worst:.1e} ({}), Saigo statements n <= 3 {st_worst:.1e} ({})",
        rl.len(),
        saigo.len(),
        quad.len()
    ))
}

fn reductions() -> Outcome {
    for r in Reduction::ALL {
        let c = compare_symbolic(r, Reading::Corrected);
        if !c.exact() {
            return Err(format!("{r}: {} vs {}", c.source, c.target));
        }
    }
    let recs = run(
        "checks = reduction-msm-saigo-left, reduction-saigo-rl-left, reduction-saigo-ek-left, \
                    reduction-msm-saigo-right, reduction-saigo-rl-right, reduction-saigo-ek-right\n",
    )?;
    all_pass(&recs)?;
    Ok(format!(
        "{} chains equal as gamma argument multisets; {} numeric points",
        Reduction::ALL.len(),
        recs.len()
    ))
}

fn polynomials() -> Outcome {
    let recs = run("checks = poly-forms, poly-connection, poly-orthogonality, poly-ode\n")?;
    all_pass(&recs)?;
    let worst = |c: &str| max_of(&recs, |r| if r.check == c { r.rel_diff } else { None });
    let printed = ode_residual(&PolySpec::new(1, 5.0, 0.0), 0.5, OdeForm::AsPrinted).normalized();
    if printed < 1e-3 {
        return Err(format!("printed ODE residual {printed:e}"));
    }
    Ok(format!(
        "forms {:.1e}, connection {:.1e}, orthogonality {:.1e}, ODE {:.1e}; printed ODE residual at n = 1 is {printed:.2}",
        worst("poly-forms"),
        worst("poly-connection"),
        worst("poly-orthogonality"),
        worst("poly-ode")
    ))
}

fn derivatives() -> Outcome {
    let recs = run("checks = msm-left-deriv-image, msm-right-deriv-image\n")?;
    all_pass(&recs)?;
    let zeros = recs
        .iter()
        .filter(|r| ["delta", "delta_p", "mu", "mu_p"].iter().all(|k| r.point[*k] == 0.0))
        .count();
    if zeros == 0 {
        return Err("grid lacks the all-zero reduction".into());
    }
    let zero = Affine::int(0);
    let (tau, eps) = (Affine::sym("tau"), Affine::sym("epsilon"));
    let p = MsmParams {
        delta: zero.clone(),
        delta_p: zero.clone(),
        mu: zero.clone(),
        mu_p: zero,
        epsilon: eps.clone(),
    };
    let s = power_schema(&OperatorSpec::MsmLeftDeriv(p), tau.clone());
    let (num, den) = cancel_common(&s.numerator, &s.denominator);
    let expected = tau.clone() - eps.clone();
    if num != vec![tau.clone()] || den != vec![expected.clone()] || s.exponent != expected - Affine::int(1) {
        return Err(format!("zero reduction gives {num:?} / {den:?}"));
    }
    Ok(format!(
        "{} points (max rel diff {:.1e}, {zeros} at zero parameters); zero parameters give Γ(τ)/Γ(τ-ε) x^(τ-ε-1) symbolically",
        recs.len(),
        max_of(&recs, |r| r.rel_diff)
    ))
}

fn f3_rectangle(a: f64, ap: f64, b: f64, bp: f64, c: f64, w: f64, z: f64) -> f64 {
    let mut total = 0.0;
    let mut row = 1.0;
    for m in 0..200 {
        let mut term = row;
        let mut cmn = (0..m).map(|i| c + i as f64).product::<f64>();
        for n in 0..200 {
            total += term / cmn;
            term *= (ap + n as f64) * (bp + n as f64) * z / (n as f64 + 1.0);
            cmn *= c + (m + n) as f64;
        }
        row *= (a + m as f64) * (b + m as f64) * w / (m as f64 + 1.0);
    }
    total
}

fn appell() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut points = 0;
    for &(a, ap, b, bp, c) in &[
        (0.5, 0.3, 0.2, 0.4, 1.1),
        (1.0, 0.5, 0.3, 0.2, 1.5),
        (-1.5, 2.0, 0.7, 0.4, 0.8),
    ] {
        for w in [-0.5, -0.2, 0.1, 0.5] {
            for z in [-0.5, 0.0, 0.3, 0.5] {
                let f = appell_f3(a, ap, b, bp, c, w, z, 1e-16).map_err(|e| e.to_string())?;
                let brute = f3_rectangle(a, ap, b, bp, c, w, z);
                worst = worst.max(((f - brute) / brute).abs());
                let collapse = appell_f3(a, 0.0, b, 0.0, c, w, z, 1e-16).map_err(|e| e.to_string())?;
                let gauss = hyp2f1(a, b, c, w).map_err(|e| e.to_string())?;
                worst = worst.max(((collapse - gauss) / gauss).abs());
                points += 1;
            }
        }
    }
    if worst > 1e-12 {
        return Err(format!("max rel diff {worst:e}"));
    }
    Ok(format!(
        "{points} points against a 200 x 200 double sum and the 2F1 collapse, max rel diff {worst:.1e}"
    ))
}

fn cli(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let o = Command::new(env!("CARGO_BIN_EXE_msmpoly")).args(args).output().unwrap();
    (o.status.code(), o.stdout)
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (a, b) = (dir.path().join("a.jsonl"), dir.path().join("b.jsonl"));
    let s = |p: &Path| p.to_str().unwrap().to_string();
    let (ca, _) = cli(&["verify", "--out", &s(&a)]);
    let (cb, _) = cli(&["verify", "--threads", "3", "--out", &s(&b)]);
    let (ra, rb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    if ca != Some(0) || cb != Some(0) || ra != rb {
        return Err(format!("exit {ca:?}/{cb:?}, identical: {}", ra == rb));
    }
    let (report_a, report_b) = (cli(&["report", &s(&a)]).1, cli(&["report", &s(&b)]).1);
    if report_a != report_b {
        return Err("reports differ".into());
    }
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut codes = Vec::new();
    for (name, want) in [("pass.cfg", 0), ("fail.cfg", 1), ("skip.cfg", 0), ("malformed.cfg", 2)] {
        let (code, _) = cli(&["verify", "--config", &s(&fixtures.join(name)), "--out", &s(&a)]);
        if code != Some(want) {
            return Err(format!("{name}: exit {code:?}, expected {want}"));
        }
        codes.push(format!("{name} {want}"));
    }
    let (code, _) = cli(&["eval", "pfq", "--num", "1,1", "--den", "2", "--arg", "1.5"]);
    if code != Some(3) {
        return Err(format!("divergent series: exit {code:?}"));
    }
    codes.push("divergent eval 3".into());
    Ok(format!(
        "{} identical record bytes over two runs; exits {}",
        ra.len(),
        codes.join(", ")
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "MSM left identity against the oracle, printed form refuted",
            msm_left_identity,
        ),
        ("remaining identities against the oracle", other_identities),
        ("quadrature against closed forms", quadrature),
        ("exact reduction chains", reductions),
        ("polynomial suite", polynomials),
        ("derivative images against composition", derivatives),
        ("Appell F3 double sum and collapse", appell),
        ("CLI determinism and exit codes", determinism),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} PASS {title}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL {title}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
