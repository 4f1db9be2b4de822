//! Gauss-Jacobi quadrature on (0, 1) for the weight `u^a (1-u)^b`.
//!
//! Nodes are eigenvalues of the Jacobi matrix, polished by Newton steps on
//! the orthonormal recurrence; weights come from the Christoffel function.
//! Rules are cached per `(a, b, n)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::dd::Dd;
use crate::gamma::GammaProduct;
use crate::sum::CompensatedSum;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    pub node_count: usize,
    pub tol: f64,
    pub max_refinements: usize,
    /// Only used for plotting truncated integrals over (x, ∞).
    pub right_tail_cutoff: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            node_count: 64,
            tol: 1e-12,
            max_refinements: 6,
            right_tail_cutoff: 1e3,
        }
    }
}

impl QuadConfig {
    fn check(&self) -> Result<()> {
        if self.node_count < 8 || !(self.tol > 0.0) {
            return Err(Error::Config(format!(
                "quadrature needs node_count >= 8 and tol > 0 (got {}, {})",
                self.node_count, self.tol
            )));
        }
        Ok(())
    }
}

/// A value and the difference between the last two refinements.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadEstimate {
    pub value: f64,
    pub error: f64,
    pub nodes: usize,
}

impl std::ops::Add for QuadEstimate {
    type Output = QuadEstimate;
    fn add(self, o: QuadEstimate) -> QuadEstimate {
        QuadEstimate {
            value: self.value + o.value,
            error: self.error + o.error,
            nodes: self.nodes + o.nodes,
        }
    }
}

impl QuadEstimate {
    pub fn scaled(self, k: f64) -> QuadEstimate {
        QuadEstimate {
            value: self.value * k,
            error: self.error * k.abs(),
            nodes: self.nodes,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GaussJacobiRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

type RuleKey = (u64, u64, usize);

fn cache() -> &'static Mutex<HashMap<RuleKey, Arc<GaussJacobiRule>>> {
    static CACHE: OnceLock<Mutex<HashMap<RuleKey, Arc<GaussJacobiRule>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

type Recurrence = (Vec<Dd>, Vec<Dd>, Vec<Dd>);

/// Diagonal and off-diagonal of the Jacobi matrix for `u^a (1-u)^b` on
/// (0, 1), in double-double. `off[k]` couples rows `k` and `k+1`; `off`
/// has `n` entries so the recurrence can be run one step past the matrix.
fn recurrence(n: usize, a: f64, b: f64) -> Recurrence {
    // on [-1, 1] the weight is (1-y)^alpha (1+y)^beta with y = 2u - 1
    let (al, be) = (Dd::new(b), Dd::new(a));
    let s = al + be;
    let half = Dd::new(0.5);
    let mut diag = Vec::with_capacity(n);
    let mut off = Vec::with_capacity(n);
    for k in 0..n {
        let two_k = Dd::new(2.0 * k as f64);
        let d = if k == 0 {
            (be - al) / s.add_f64(2.0)
        } else {
            (be * be - al * al) / ((two_k + s) * (two_k + s).add_f64(2.0))
        };
        diag.push(half + half * d);
        let j = Dd::new(k as f64 + 1.0);
        let b2 = if k == 0 {
            Dd::new(4.0) * (al.add_f64(1.0) * be.add_f64(1.0)) / (s.add_f64(2.0).sqr() * s.add_f64(3.0))
        } else {
            let t = j.mul_f64(2.0) + s;
            Dd::new(4.0) * j * (j + al) * (j + be) * (j + s) / (t.sqr() * t.add_f64(1.0) * t.add_f64(-1.0))
        };
        off.push(half * b2.sqrt());
    }
    let inv_off = off.iter().map(|&o| Dd::ONE / o).collect();
    (diag, off, inv_off)
}

/// Eigenvalues of a symmetric tridiagonal matrix by implicit QL.
fn tridiagonal_eigenvalues(mut d: Vec<f64>, mut e: Vec<f64>) -> Result<Vec<f64>> {
    let n = d.len();
    e.resize(n, 0.0);
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::non_converged(iter, "tridiagonal eigenvalues"));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(d)
}

/// Runs the orthonormal recurrence to degree `n` at `u`; returns `p_n`,
/// its derivative and `Σ_{k<n} p_k²`.
fn orthonormal(u: f64, diag: &[f64], off: &[f64], p0: f64, n: usize) -> (f64, f64, f64) {
    let (mut prev, mut cur) = (0.0, p0);
    let (mut dprev, mut dcur) = (0.0, 0.0);
    let mut sumsq = p0 * p0;
    for k in 0..n {
        let back = if k == 0 { 0.0 } else { off[k - 1] };
        let next = ((u - diag[k]) * cur - back * prev) / off[k];
        let dnext = (cur + (u - diag[k]) * dcur - back * dprev) / off[k];
        prev = cur;
        cur = next;
        dprev = dcur;
        dcur = dnext;
        if k + 1 < n {
            sumsq += cur * cur;
        }
    }
    (cur, dcur, sumsq)
}

/// As [`orthonormal`] in double-double; `inv_off` holds `1 / off[k]`.
fn orthonormal_dd(u: Dd, diag: &[Dd], off: &[Dd], inv_off: &[Dd], p0: Dd, n: usize) -> (Dd, Dd, Dd) {
    let (mut prev, mut cur) = (Dd::ZERO, p0);
    let (mut dprev, mut dcur) = (Dd::ZERO, Dd::ZERO);
    let mut sumsq = p0.sqr();
    for k in 0..n {
        let back = if k == 0 { Dd::ZERO } else { off[k - 1] };
        let shifted = u - diag[k];
        let next = (shifted * cur - back * prev) * inv_off[k];
        let dnext = (cur + shifted * dcur - back * dprev) * inv_off[k];
        prev = cur;
        cur = next;
        dprev = dcur;
        dcur = dnext;
        if k + 1 < n {
            sumsq = sumsq + cur.sqr();
        }
    }
    (cur, dcur, sumsq)
}

/// Below this distance from an endpoint nodes are refined in
/// double-double, measured from the nearer endpoint.
const ENDPOINT_ZONE: f64 = 2e-3;

/// Newton-polishes a seed node `v` near 0 of the rule and returns the node
/// and its Christoffel weight.
fn refine_near_zero(v: f64, (diag, off, inv_off): &Recurrence, p0: Dd, n: usize) -> (Dd, f64) {
    let mut u = Dd::new(v);
    let mut sumsq = Dd::ONE;
    for _ in 0..5 {
        let (p, dp, s) = orthonormal_dd(u, diag, off, inv_off, p0, n);
        sumsq = s;
        let step = p / dp;
        let next = u - step;
        if !(next.hi > 0.0) || !step.hi.is_finite() {
            break;
        }
        u = next;
        // the weight from this pass is off by O(step / u), below 1e-17
        if step.hi.abs() <= 1e-17 * u.hi {
            break;
        }
    }
    (u, 1.0 / sumsq.to_f64())
}

fn build_rule(n: usize, a: f64, b: f64) -> Result<GaussJacobiRule> {
    let mu0 = GammaProduct::new(vec![a + 1.0, b + 1.0], vec![a + b + 2.0]).value()?;
    let rec = recurrence(n, a, b);
    let (diag, off, _) = &rec;
    let diag_f: Vec<f64> = diag.iter().map(|d| d.to_f64()).collect();
    let off_f: Vec<f64> = off.iter().map(|d| d.to_f64()).collect();
    let mut seeds = tridiagonal_eigenvalues(diag_f.clone(), off_f[..n - 1].to_vec())?;
    seeds.sort_by(f64::total_cmp);

    // near u = 1 the reflected rule (b, a) resolves 1 - u to full precision
    let reflected = seeds
        .iter()
        .any(|&u| 1.0 - u < ENDPOINT_ZONE)
        .then(|| recurrence(n, b, a));
    let p0 = Dd::new(mu0).sqrt();
    let p0 = Dd::ONE / p0;
    let p0_f = p0.to_f64();

    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for &seed in &seeds {
        if seed < ENDPOINT_ZONE {
            let (u, w) = refine_near_zero(seed, &rec, p0, n);
            nodes.push(u.to_f64());
            weights.push(w);
        } else if 1.0 - seed < ENDPOINT_ZONE {
            let (v, w) = refine_near_zero(1.0 - seed, reflected.as_ref().unwrap(), p0, n);
            nodes.push((Dd::ONE - v).to_f64());
            weights.push(w);
        } else {
            // the seed is accurate to a few ulps, so one Newton step suffices
            // and the weight may be taken at the seed
            let (p, dp, sumsq) = orthonormal(seed, &diag_f, &off_f, p0_f, n);
            let next = seed - p / dp;
            nodes.push(if next > 0.0 && next < 1.0 { next } else { seed });
            weights.push(1.0 / sumsq);
        }
    }
    Ok(GaussJacobiRule { nodes, weights })
}

/// The `n`-point rule for `∫_0^1 u^a (1-u)^b g(u) du`, cached.
pub fn gauss_jacobi(n: usize, a: f64, b: f64) -> Result<Arc<GaussJacobiRule>> {
    if !(a > -1.0 && b > -1.0) {
        return Err(Error::domain(
            format!("weight u^{a} (1-u)^{b} is not integrable"),
            (a + 1.0).min(b + 1.0),
        ));
    }
    let key = (a.to_bits(), b.to_bits(), n);
    if let Some(rule) = cache().lock().unwrap().get(&key) {
        return Ok(rule.clone());
    }
    let rule = Arc::new(build_rule(n, a, b)?);
    cache().lock().unwrap().insert(key, rule.clone());
    Ok(rule)
}

fn apply_rule(rule: &GaussJacobiRule, g: &dyn Fn(f64) -> f64) -> (f64, f64) {
    let mut s = CompensatedSum::new();
    for (&u, &w) in rule.nodes.iter().zip(&rule.weights) {
        s.add(w * g(u));
    }
    (s.value(), s.abs_sum())
}

/// `∫_0^1 u^a (1-u)^b g(u) du`, doubling the node count until two
/// successive rules agree within `cfg.tol`.
pub fn quad_endpoint_singular(g: &dyn Fn(f64) -> f64, a: f64, b: f64, cfg: &QuadConfig) -> Result<QuadEstimate> {
    cfg.check()?;
    let mut n = cfg.node_count;
    let (mut prev, _) = apply_rule(&*gauss_jacobi(n, a, b)?, g);
    for _ in 0..cfg.max_refinements {
        n *= 2;
        let (cur, mass) = apply_rule(&*gauss_jacobi(n, a, b)?, g);
        let diff = (cur - prev).abs();
        if !cur.is_finite() {
            break;
        }
        // the second bound accepts integrals that cancel to roundoff level
        if diff <= cfg.tol * cur.abs() || diff <= 64.0 * f64::EPSILON * mass {
            return Ok(QuadEstimate {
                value: cur,
                error: diff,
                nodes: n,
            });
        }
        prev = cur;
    }
    Err(Error::non_converged(n, format!("Gauss-Jacobi with a = {a}, b = {b}")))
}
