//! Exact affine expressions over named real parameters.
//!
//! Power-image and identity schemas are written once, generically over
//! [`Scalar`], and instantiated either with `f64` for evaluation or with
//! [`Affine`] to compare gamma-argument lists symbolically.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;

/// The arithmetic a gamma-argument schema needs.
pub trait Scalar: Clone + PartialEq + Add<Output = Self> + Sub<Output = Self> + Neg<Output = Self> {
    fn int(c: i64) -> Self;
}

impl Scalar for f64 {
    fn int(c: i64) -> Self {
        c as f64
    }
}

/// `constant + Σ coeff·symbol` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Affine {
    terms: BTreeMap<&'static str, Rational64>,
    constant: Rational64,
}

impl Affine {
    pub fn sym(name: &'static str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(name, Rational64::from_integer(1));
        Affine {
            terms,
            constant: Rational64::from_integer(0),
        }
    }

    pub fn constant(c: Rational64) -> Self {
        Affine {
            terms: BTreeMap::new(),
            constant: c,
        }
    }

    pub fn coefficient(&self, name: &str) -> Rational64 {
        self.terms.get(name).copied().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Rational64 {
        self.constant
    }

    /// Replaces `name` by `value` everywhere.
    pub fn subst(&self, name: &str, value: &Affine) -> Affine {
        let c = self.coefficient(name);
        let mut out = self.clone();
        out.terms.remove(name);
        if c == Rational64::from_integer(0) {
            return out;
        }
        out + value.scale(c)
    }

    pub fn scale(&self, k: Rational64) -> Affine {
        let mut out = Affine::constant(self.constant * k);
        for (&s, &c) in &self.terms {
            out.terms.insert(s, c * k);
        }
        out.normalize()
    }

    /// Numerical value given a value for every symbol.
    pub fn eval(&self, env: &dyn Fn(&str) -> f64) -> f64 {
        let r = |q: Rational64| *q.numer() as f64 / *q.denom() as f64;
        self.terms
            .iter()
            .fold(r(self.constant), |acc, (s, &c)| acc + r(c) * env(s))
    }

    fn normalize(mut self) -> Self {
        self.terms.retain(|_, c| *c.numer() != 0);
        self
    }
}

impl Scalar for Affine {
    fn int(c: i64) -> Self {
        Affine::constant(Rational64::from_integer(c))
    }
}

impl Add for Affine {
    type Output = Affine;
    fn add(mut self, rhs: Affine) -> Affine {
        self.constant += rhs.constant;
        for (s, c) in rhs.terms {
            *self.terms.entry(s).or_default() += c;
        }
        self.normalize()
    }
}

impl Sub for Affine {
    type Output = Affine;
    fn sub(self, rhs: Affine) -> Affine {
        self + (-rhs)
    }
}

impl Neg for Affine {
    type Output = Affine;
    fn neg(self) -> Affine {
        self.scale(Rational64::from_integer(-1))
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, c) in &self.terms {
            let neg = *c.numer() < 0;
            let mag = if neg { -*c } else { *c };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            if mag != Rational64::from_integer(1) {
                write!(f, "{mag}")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        let k = self.constant;
        if first {
            write!(f, "{k}")
        } else if *k.numer() > 0 {
            write!(f, " + {k}")
        } else if *k.numer() < 0 {
            write!(f, " - {}", -k)
        } else {
            Ok(())
        }
    }
}

/// Removes entries common to both lists, as multisets.
pub fn cancel_common<S: Scalar>(num: &[S], den: &[S]) -> (Vec<S>, Vec<S>) {
    let mut num = num.to_vec();
    let mut rest = Vec::new();
    for d in den {
        match num.iter().position(|n| n == d) {
            Some(i) => {
                num.remove(i);
            }
            None => rest.push(d.clone()),
        }
    }
    (num, rest)
}

/// Multiset equality.
pub fn same_multiset<S: Scalar>(a: &[S], b: &[S]) -> bool {
    let (x, y) = cancel_common(a, b);
    x.is_empty() && y.is_empty()
}
