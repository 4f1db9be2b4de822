//! Catalog of places where a formula as printed disagrees with the value
//! the oracles support, and what is used instead.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub id: &'static str,
    /// Checks whose records carry this entry.
    pub checks: &'static [&'static str],
    pub printed: &'static str,
    pub adopted: &'static str,
    /// How the adopted form was established.
    pub evidence: &'static str,
    /// `true` when records carry the value of the printed form.
    pub testable: bool,
}

pub const CATALOG: &[Discrepancy] = &[
    Discrepancy {
        id: "msm-left-poly-gamma-argument",
        checks: &["msm-left-poly"],
        printed: "Γ(τ+δ-δ'-μ) in the prefactor and τ+δ-δ'-μ in the series",
        adopted: "τ+ε-δ-δ'-μ, the argument of the MSM left power image",
        evidence: "monomial expansion oracle",
        testable: true,
    },
    Discrepancy {
        id: "msm-right-poly-series-notation",
        checks: &["msm-right-poly"],
        printed: "Wright function 5Ψ4",
        adopted: "generalized hypergeometric 5F4",
        evidence: "monomial expansion oracle; no Wright scaling parameters are given",
        testable: false,
    },
    Discrepancy {
        id: "msm-right-poly-condition-symbol",
        checks: &["msm-right-poly"],
        printed: "Re(τ) > Re(-δ-δ'+ε') with an undefined ε'",
        adopted: "Re(τ) > Re(ε-δ-δ'), the MSM right image condition",
        evidence: "pole structure of Γ(τ+δ+δ'-ε)",
        testable: false,
    },
    Discrepancy {
        id: "series-pochhammer-shift",
        checks: &["msm-left-poly", "msm-right-poly"],
        printed: "(n-p)_k in the term-by-term expansion",
        adopted: "(1+n-p)_k, since binom(p-n-1, k) = (-1)^k (1+n-p)_k / k!",
        evidence: "coefficient identity and monomial expansion oracle",
        testable: true,
    },
    Discrepancy {
        id: "saigo-right-poly-sign",
        checks: &["saigo-right-poly"],
        printed: "no (-1)^n factor",
        adopted: "(-1)^n Γ(q+n+1)/Γ(q+1), as in every other identity",
        evidence: "monomial expansion oracle fails for odd n without it",
        testable: true,
    },
    Discrepancy {
        id: "saigo-right-poly-condition-direction",
        checks: &["saigo-right-poly"],
        printed: "Re(τ) > 1 + min(Re μ, Re ε)",
        adopted: "Re(τ) < 1 + min(Re μ, Re ε), the Saigo right image condition",
        evidence: "convergence of the integral at infinity",
        testable: false,
    },
    Discrepancy {
        id: "msm-left-deriv-poly-series-parameter",
        checks: &["msm-left-deriv-poly"],
        printed: "series lower parameter τ-μ'",
        adopted: "τ-μ, matching the prefactor Γ(τ-μ)",
        evidence: "monomial expansion oracle",
        testable: true,
    },
    Discrepancy {
        id: "msm-left-int-condition",
        checks: &["msm-left-int-image"],
        printed: "Re(τ) > Re(δ-δ'-μ-ε)",
        adopted: "Re(τ) > Re(δ+δ'+μ-ε), the pole of Γ(τ+ε-δ-δ'-μ)",
        evidence: "both conditions are reported; grids avoid the disputed wedge",
        testable: false,
    },
    Discrepancy {
        id: "msm-left-deriv-condition",
        checks: &["msm-left-deriv-image"],
        printed: "Re(τ) > Re(ε-δ-δ'-μ)",
        adopted: "Re(τ) > Re(ε-δ-δ'-μ'), the pole of Γ(τ+δ+δ'+μ'-ε)",
        evidence: "both conditions are reported",
        testable: false,
    },
    Discrepancy {
        id: "ek-left-condition",
        checks: &["ek-left-image", "ek-left-poly"],
        printed: "Re(τ) > Re(ε)",
        adopted: "Re(τ+ε) > 0, where the integral converges at t = 0",
        evidence: "quadrature of the operator below the printed bound",
        testable: false,
    },
    Discrepancy {
        id: "ek-left-exponent",
        checks: &["ek-left-image"],
        printed: "x^(τ+δ-1)",
        adopted: "x^(τ-1); the operator is homogeneous of degree zero",
        evidence: "quadrature of the operator",
        testable: true,
    },
    Discrepancy {
        id: "msm-right-kernel-arguments",
        checks: &["msm-right-int-image"],
        printed: "kernel F3(δ, δ', μ, μ'; ε; 1-t/x, 1-x/t), whose unbounded argument 1-t/x pairs with (δ, μ)",
        adopted: "F3(δ, δ', μ, μ'; ε; 1-x/t, 1-t/x); quadrature needs δ' = 0 or μ' = 0",
        evidence: "quadrature agrees with the MSM right power image on that slice",
        testable: false,
    },
    Discrepancy {
        id: "ode-eigenvalue",
        checks: &["poly-ode"],
        printed: "eigenvalue n(n-1+p) and unbalanced brackets",
        adopted: "x(1+x)y'' + [(2-p)x + (1+q)]y' - n(n+1-p)y = 0",
        evidence: "substituting M_1 = (p-2)x - (q+1)",
        testable: true,
    },
    Discrepancy {
        id: "jacobi-connection-parameter",
        checks: &["poly-connection"],
        printed: "P_n^(a, -p-q) with an undefined a, and an inverse that does not invert it",
        adopted: "P_n^(q, -p-q)(2x+1), inverse P_n^(α,β)(z) = (-1)^n/n! M_n^(-α-β, α)((z-1)/2)",
        evidence: "matching 2F1 representations; numerical cross-check",
        testable: false,
    },
];

pub fn lookup(id: &str) -> Option<&'static Discrepancy> {
    CATALOG.iter().find(|d| d.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        for (i, a) in CATALOG.iter().enumerate() {
            assert!(CATALOG[i + 1..].iter().all(|b| b.id != a.id));
        }
        assert!(lookup("ode-eigenvalue").is_some());
        assert!(lookup("nope").is_none());
    }
}
