//! Generalized hypergeometric series `pFq` and the Appell double series `F3`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sum::CompensatedSum;

pub const DEFAULT_TOL: f64 = 1e-13;
pub const DEFAULT_MAX_TERMS: usize = 1_000_000;

/// Parameters of `pFq[(a_p); (c_q) | x]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypSeriesSpec {
    pub numerator_params: Vec<f64>,
    pub denominator_params: Vec<f64>,
    pub argument: f64,
    /// Last nonzero term index when a numerator parameter is `-n`.
    pub termination_index: Option<usize>,
}

fn nonpositive_integer(a: f64) -> Option<usize> {
    (a <= 0.0 && a == a.floor() && a > -1e15).then(|| (-a) as usize)
}

impl HypSeriesSpec {
    pub fn new(numerator_params: Vec<f64>, denominator_params: Vec<f64>, argument: f64) -> Self {
        let termination_index = numerator_params.iter().filter_map(|&a| nonpositive_integer(a)).min();
        HypSeriesSpec {
            numerator_params,
            denominator_params,
            argument,
            termination_index,
        }
    }

    pub fn evaluate(&self) -> Result<f64> {
        pfq(self, DEFAULT_TOL, DEFAULT_MAX_TERMS)
    }
}

/// Sums the series. Terminating series are summed exactly to their last
/// term; others stop once a geometric tail bound drops below `tol`.
pub fn pfq(spec: &HypSeriesSpec, tol: f64, max_terms: usize) -> Result<f64> {
    let p = spec.numerator_params.len();
    let q = spec.denominator_params.len();
    let x = spec.argument;
    let last = spec.termination_index;

    if let Some(n) = last {
        for &c in &spec.denominator_params {
            if let Some(m) = nonpositive_integer(c) {
                if m < n {
                    return Err(Error::DenominatorPole {
                        parameter: c,
                        term: m + 1,
                    });
                }
            }
        }
    } else {
        for &c in &spec.denominator_params {
            if nonpositive_integer(c).is_some() {
                return Err(Error::DenominatorPole {
                    parameter: c,
                    term: nonpositive_integer(c).unwrap() + 1,
                });
            }
        }
        if x != 0.0 && (p > q + 1 || (p == q + 1 && x.abs() >= 1.0)) {
            return Err(Error::Divergence(format!("{p}F{q} at argument {x} does not converge")));
        }
    }

    let mut sum = CompensatedSum::new();
    let mut term = 1.0;
    sum.add(term);
    let mut k = 0usize;
    loop {
        if let Some(n) = last {
            if k == n {
                return Ok(sum.value());
            }
        }
        if k >= max_terms {
            return Err(Error::non_converged(k, format!("{p}F{q} at argument {x}")));
        }
        let kf = k as f64;
        let mut ratio = x / (kf + 1.0);
        for &a in &spec.numerator_params {
            ratio *= a + kf;
        }
        for &c in &spec.denominator_params {
            ratio /= c + kf;
        }
        term *= ratio;
        sum.add(term);
        k += 1;
        if term == 0.0 && last.is_none() {
            return Ok(sum.value());
        }
        if last.is_none() {
            let r = ratio.abs();
            let limit = if p == q + 1 { x.abs() } else { 0.0 };
            let bound = r.max(limit);
            if bound < 1.0 {
                let tail = term.abs() * bound / (1.0 - bound);
                let scale = sum.value().abs().max(f64::MIN_POSITIVE);
                if tail <= tol * scale && term.abs() <= tol * scale {
                    return Ok(sum.value());
                }
            }
        }
    }
}

/// `2F1(a, b; c; z)` with default tolerances.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    HypSeriesSpec::new(vec![a, b], vec![c], z).evaluate()
}

/// Appell `F3(a, a', b, b'; c; w, z)`, summed along diagonals `m + n = s`.
pub fn appell_f3(a: f64, a_p: f64, b: f64, b_p: f64, c: f64, w: f64, z: f64, tol: f64) -> Result<f64> {
    // a finite range in m (resp. n) when a numerator parameter is -N
    let m_last = [a, b].into_iter().filter_map(nonpositive_integer).min();
    let n_last = [a_p, b_p].into_iter().filter_map(nonpositive_integer).min();
    if m_last.is_none() && w.abs() >= 1.0 {
        return Err(Error::Divergence(format!("F3 with |w| = {} >= 1", w.abs())));
    }
    if n_last.is_none() && z.abs() >= 1.0 {
        return Err(Error::Divergence(format!("F3 with |z| = {} >= 1", z.abs())));
    }
    let max_s = match (m_last, n_last) {
        (Some(m), Some(n)) => Some(m + n),
        _ => None,
    };
    if let Some(k) = nonpositive_integer(c) {
        if max_s.is_none_or(|s| k < s) {
            return Err(Error::DenominatorPole {
                parameter: c,
                term: k + 1,
            });
        }
    }

    let mut total = CompensatedSum::new();
    // a_m[m] = (a)_m (b)_m w^m / ((c)_m m!), b_mn[m] = B_{m, s-m}
    let mut a_m: Vec<f64> = vec![1.0];
    let mut b_mn: Vec<f64> = vec![1.0];
    let mut quiet = 0;
    let mut evaluations = 0usize;
    let mut s = 0usize;
    loop {
        let mut diag = CompensatedSum::new();
        for m in 0..=s {
            let n = s - m;
            if m_last.is_some_and(|l| m > l) || n_last.is_some_and(|l| n > l) {
                continue;
            }
            diag.add(a_m[m] * b_mn[m]);
            evaluations += 1;
        }
        let d = diag.value();
        total.add(d);
        if max_s == Some(s) {
            return Ok(total.value());
        }
        if d.abs() <= tol * total.value().abs() {
            quiet += 1;
            if quiet >= 3 {
                return Ok(total.value());
            }
        } else {
            quiet = 0;
        }
        if evaluations > DEFAULT_MAX_TERMS {
            return Err(Error::non_converged(evaluations, "F3 double series"));
        }
        // advance every B_{m,n} to n + 1, then open the m = s + 1 column
        for (m, bm) in b_mn.iter_mut().enumerate() {
            let n = (s - m) as f64;
            *bm *= (a_p + n) * (b_p + n) * z / ((c + m as f64 + n) * (n + 1.0));
        }
        let mf = s as f64;
        let next = a_m[s] * (a + mf) * (b + mf) * w / ((c + mf) * (mf + 1.0));
        a_m.push(next);
        b_mn.push(1.0);
        s += 1;
    }
}
