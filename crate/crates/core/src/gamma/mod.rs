//! Real gamma function, signed log-gamma, Pochhammer symbols, generalized
//! binomial coefficients and products of gamma values.
//!
//! Gamma is computed from a Stirling series carried in double-double
//! arithmetic (upward shifted for small arguments, reflected for negative
//! ones), so that the final rounding to f64 dominates the error.

pub(crate) mod dd;

use std::fmt;

use num_rational::Rational64;

use crate::error::{Error, Result};
use dd::Dd;

/// Below this the argument is shifted upward before using the Stirling series.
const STIRLING_CUTOFF: f64 = 20.0;

/// `B_{2k} / (2k (2k-1))` as exact integer ratios.
const STIRLING_COEFFS: [(f64, f64); 12] = [
    (1.0, 12.0),
    (-1.0, 360.0),
    (1.0, 1260.0),
    (-1.0, 1680.0),
    (1.0, 1188.0),
    (-691.0, 360360.0),
    (1.0, 156.0),
    (-3617.0, 122400.0),
    (43867.0, 244188.0),
    (-174611.0, 125400.0),
    (854513.0, 63756.0),
    (-236364091.0, 1506960.0),
];

/// A real number stored as `sign * exp(log_magnitude)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLogValue {
    pub log_magnitude: f64,
    pub sign: i8,
}

impl SignedLogValue {
    pub const ZERO: SignedLogValue = SignedLogValue {
        log_magnitude: f64::NEG_INFINITY,
        sign: 0,
    };

    pub fn from_value(v: f64) -> Self {
        if v == 0.0 {
            SignedLogValue::ZERO
        } else {
            SignedLogValue {
                log_magnitude: v.abs().ln(),
                sign: if v > 0.0 { 1 } else { -1 },
            }
        }
    }

    pub fn value(&self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => f64::from(s) * self.log_magnitude.exp(),
        }
    }
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

fn stirling(x: Dd) -> Dd {
    let inv = Dd::ONE / x;
    let inv2 = inv.sqr();
    let mut power = inv;
    let mut series = Dd::ZERO;
    for &(num, den) in &STIRLING_COEFFS {
        series = series + Dd::ratio(num, den) * power;
        power = power * inv2;
    }
    (x.add_f64(-0.5)) * x.ln() - x + dd::HALF_LN_2PI + series
}

/// `ln|Γ(x)|` in double-double together with the sign of `Γ(x)`.
fn log_gamma_dd(x: Dd) -> Result<(Dd, i8)> {
    if x.lo == 0.0 && is_nonpositive_integer(x.hi) {
        return Err(Error::Pole { argument: x.hi });
    }
    if x.hi >= STIRLING_CUTOFF {
        return Ok((stirling(x), 1));
    }
    if x.hi > 0.0 {
        let shift = (STIRLING_CUTOFF - x.hi).ceil() as usize;
        let mut prod = x;
        let mut y = x;
        for _ in 1..shift {
            y = y.add_f64(1.0);
            prod = prod * y;
        }
        let (shifted, _) = log_gamma_dd(x.add_f64(shift as f64))?;
        return Ok((shifted - prod.ln(), 1));
    }
    // reflection: Γ(x) Γ(1-x) = π / sin(πx)
    let nearest = x.hi.round();
    let frac = x.add_f64(-nearest);
    let mut sine = (dd::PI * frac).sin_small();
    if (nearest as i64) % 2 != 0 {
        sine = -sine;
    }
    let sign = if sine.hi > 0.0 { 1 } else { -1 };
    let (reflected, _) = log_gamma_dd(Dd::ONE - x)?;
    Ok((dd::PI.ln() - sine.abs().ln() - reflected, sign))
}

fn finite_arg(x: f64) -> Result<Dd> {
    if x.is_finite() {
        Ok(Dd::new(x))
    } else {
        Err(Error::domain(format!("gamma argument {x} is not finite"), f64::NAN))
    }
}

/// Γ(x) for real `x`.
pub fn gamma(x: f64) -> Result<f64> {
    let (log, sign) = log_gamma_dd(finite_arg(x)?)?;
    let v = log.exp().to_f64();
    if v.is_infinite() {
        return Err(Error::Overflow { argument: x });
    }
    Ok(f64::from(sign) * v)
}

/// 1/Γ(x), which is entire: zero at the poles of Γ.
pub fn rgamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Ok(0.0);
    }
    let (log, sign) = log_gamma_dd(finite_arg(x)?)?;
    Ok(f64::from(sign) * (-log).exp().to_f64())
}

pub fn log_gamma_signed(x: f64) -> Result<SignedLogValue> {
    let (log, sign) = log_gamma_dd(finite_arg(x)?)?;
    Ok(SignedLogValue {
        log_magnitude: log.to_f64(),
        sign,
    })
}

/// Rising factorial `a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: f64, k: usize) -> f64 {
    let mut prod = 1.0;
    for i in 0..k {
        let factor = a + i as f64;
        if factor == 0.0 {
            return 0.0;
        }
        prod *= factor;
    }
    prod
}

/// Generalized binomial coefficient `a (a-1) ... (a-k+1) / k!`.
pub fn binomial_real(a: f64, k: usize) -> f64 {
    let mut c = 1.0;
    for i in 0..k {
        let top = a - i as f64;
        if top == 0.0 {
            return 0.0;
        }
        c = c * top / (i + 1) as f64;
    }
    c
}

/// `sign * rational_scale * Π Γ(numerator_args) / Π Γ(denominator_args)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaProduct {
    pub numerator_args: Vec<f64>,
    pub denominator_args: Vec<f64>,
    pub sign: i8,
    pub rational_scale: Rational64,
}

impl GammaProduct {
    pub fn new(numerator_args: Vec<f64>, denominator_args: Vec<f64>) -> Self {
        GammaProduct {
            numerator_args,
            denominator_args,
            sign: 1,
            rational_scale: Rational64::from_integer(1),
        }
    }

    pub fn with_sign(mut self, sign: i8) -> Self {
        self.sign = if sign < 0 { -1 } else { 1 };
        self
    }

    pub fn with_scale(mut self, scale: Rational64) -> Self {
        self.rational_scale = scale;
        self
    }

    /// Removes arguments that appear in both lists (multiset difference).
    pub fn cancelled(&self) -> GammaProduct {
        let mut num = self.numerator_args.clone();
        let mut den = Vec::with_capacity(self.denominator_args.len());
        for &d in &self.denominator_args {
            match num.iter().position(|&n| n == d) {
                Some(i) => {
                    num.swap_remove(i);
                }
                None => den.push(d),
            }
        }
        GammaProduct {
            numerator_args: num,
            denominator_args: den,
            sign: self.sign,
            rational_scale: self.rational_scale,
        }
    }

    fn log_dd(&self) -> Result<(Dd, i8)> {
        let reduced = self.cancelled();
        let scale = reduced.rational_scale;
        if *scale.numer() == 0 {
            return Ok((Dd::new(f64::NEG_INFINITY), 0));
        }
        let mut log = Dd::ratio(*scale.numer() as f64, *scale.denom() as f64).abs().ln();
        let mut sign = reduced.sign
            * if (*scale.numer() < 0) != (*scale.denom() < 0) {
                -1
            } else {
                1
            };
        for &a in &reduced.numerator_args {
            let (l, s) = log_gamma_dd(finite_arg(a)?)?;
            log = log + l;
            sign *= s;
        }
        for &a in &reduced.denominator_args {
            let (l, s) = log_gamma_dd(finite_arg(a)?)?;
            log = log - l;
            sign *= s;
        }
        Ok((log, sign))
    }

    pub fn eval(&self) -> Result<SignedLogValue> {
        let (log, sign) = self.log_dd()?;
        if sign == 0 {
            return Ok(SignedLogValue::ZERO);
        }
        Ok(SignedLogValue {
            log_magnitude: log.to_f64(),
            sign,
        })
    }

    /// The product as an f64, exponentiated from the double-double log so
    /// the result is not limited by rounding of the log.
    pub fn value(&self) -> Result<f64> {
        let (log, sign) = self.log_dd()?;
        if sign == 0 {
            return Ok(0.0);
        }
        Ok(f64::from(sign) * log.exp().to_f64())
    }
}

/// Evaluates a gamma product in log space after exact pairwise cancellation.
pub fn gamma_product_eval(gp: &GammaProduct) -> Result<SignedLogValue> {
    gp.eval()
}

impl fmt::Display for GammaProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        if self.rational_scale != Rational64::from_integer(1) {
            write!(f, "({}) ", self.rational_scale)?;
        }
        let list = |args: &[f64]| -> String {
            if args.is_empty() {
                "1".to_string()
            } else {
                args.iter().map(|a| format!("Γ({a})")).collect::<Vec<_>>().join("")
            }
        };
        write!(f, "{} / {}", list(&self.numerator_args), list(&self.denominator_args))
    }
}
