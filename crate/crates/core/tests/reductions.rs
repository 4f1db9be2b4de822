//! Parameter reductions between operator families, and the derivative
//! images against their composition definition.

use msmpoly::symbolic::{cancel_common, same_multiset, Scalar};
use msmpoly::{
    compare_symbolic, deriv_composition_oracle, gamma, power_image, power_schema, Affine, MsmParams, OperatorSpec,
    Reading, Reduction, SaigoParams, Side,
};

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn every_chain_is_exact() {
    for r in Reduction::ALL {
        let c = compare_symbolic(r, Reading::Corrected);
        assert!(c.exact(), "{r}: {} vs {}", c.source, c.target);
    }
}

#[test]
fn chains_compose() {
    // MSM -> Saigo -> RL and MSM -> Saigo -> EK, as argument multisets
    let (d, m, e, t) = (
        Affine::sym("delta"),
        Affine::sym("mu"),
        Affine::sym("epsilon"),
        Affine::sym("tau"),
    );
    let saigo = SaigoParams {
        delta: d.clone(),
        mu: m,
        epsilon: e,
    };
    for (first, second) in [
        (Reduction::MsmSaigoLeft, Reduction::SaigoRlLeft),
        (Reduction::MsmSaigoLeft, Reduction::SaigoEkLeft),
        (Reduction::MsmSaigoRight, Reduction::SaigoRlRight),
        (Reduction::MsmSaigoRight, Reduction::SaigoEkRight),
    ] {
        let ((msm, msm_tau), _) = first.pair(&saigo, t.clone());
        let (_, (end, end_tau)) = second.pair(&saigo, t.clone());
        // the second step's substitution applied to the MSM image
        let sub = |a: &Affine| match second {
            Reduction::SaigoRlLeft | Reduction::SaigoRlRight => a.subst("mu", &(-d.clone())),
            _ => a.subst("mu", &Affine::int(0)),
        };
        let src = power_schema(&msm, msm_tau);
        let dst = power_schema(&end, end_tau);
        let map = |v: &[Affine]| v.iter().map(sub).collect::<Vec<_>>();
        let (n1, d1) = cancel_common(&map(&src.numerator), &map(&src.denominator));
        let (n2, d2) = cancel_common(&dst.numerator, &dst.denominator);
        assert!(
            same_multiset(&n1, &n2) && same_multiset(&d1, &d2),
            "{first} then {second}"
        );
        assert_eq!(sub(&src.exponent), dst.exponent, "{first} then {second}");
    }
}

#[test]
fn reductions_agree_numerically() {
    for r in Reduction::ALL {
        for (delta, mu, epsilon) in [(0.6, 0.2, 0.4), (1.2, -0.3, 0.65), (0.8, 0.45, 0.6)] {
            let s = SaigoParams { delta, mu, epsilon };
            let ((a, ta), (b, tb)) = r.pair(&s, if r.name().ends_with("left") { 1.5 } else { -0.5 });
            let va = power_image(&a, ta).unwrap().eval(2.0).unwrap();
            let vb = power_image(&b, tb).unwrap().eval(2.0).unwrap();
            assert!(rel(va, vb) <= 1e-14, "{r}: {va} vs {vb}");
        }
    }
}

const DERIV_GRID: [MsmParams; 5] = [
    MsmParams {
        delta: 0.3,
        delta_p: 0.4,
        mu: 0.1,
        mu_p: 0.2,
        epsilon: 0.6,
    },
    MsmParams {
        delta: 0.5,
        delta_p: 0.3,
        mu: 0.2,
        mu_p: 0.4,
        epsilon: 1.1,
    },
    MsmParams {
        delta: 0.2,
        delta_p: 0.1,
        mu: 0.3,
        mu_p: 0.5,
        epsilon: 1.7,
    },
    MsmParams {
        delta: -0.4,
        delta_p: 0.6,
        mu: 0.25,
        mu_p: -0.1,
        epsilon: 2.3,
    },
    MsmParams {
        delta: 0.0,
        delta_p: 0.0,
        mu: 0.0,
        mu_p: 0.0,
        epsilon: 0.6,
    },
];

#[test]
fn derivative_images_match_composition() {
    for p in DERIV_GRID {
        for tau in [3.0, 4.5] {
            for x in [0.5, 1.5] {
                for (side, op) in [
                    (Side::Left, OperatorSpec::MsmLeftDeriv(p)),
                    (Side::Right, OperatorSpec::MsmRightDeriv(p)),
                ] {
                    let image = power_image(&op, tau).unwrap().eval(x).unwrap();
                    let comp = deriv_composition_oracle(side, &p, tau, x).unwrap();
                    assert!(rel(image, comp) <= 1e-10, "{op:?} tau={tau} x={x}: {image} vs {comp}");
                }
            }
        }
    }
}

#[test]
fn zero_parameters_give_the_classical_derivative() {
    for epsilon in [0.6, 1.1, 2.5] {
        let zero = MsmParams {
            delta: 0.0,
            delta_p: 0.0,
            mu: 0.0,
            mu_p: 0.0,
            epsilon,
        };
        let schema = power_schema(&OperatorSpec::MsmLeftDeriv(zero), 3.5);
        let (num, den) = cancel_common(&schema.numerator, &schema.denominator);
        assert_eq!(num, vec![3.5]);
        assert_eq!(den, vec![3.5 - epsilon]);
        assert_eq!(schema.exponent, 3.5 - epsilon - 1.0);
        for x in [0.5f64, 1.5] {
            let expected = gamma(3.5).unwrap() / gamma(3.5 - epsilon).unwrap() * x.powf(2.5 - epsilon);
            let comp = deriv_composition_oracle(Side::Left, &zero, 3.5, x).unwrap();
            assert!(rel(comp, expected) <= 1e-14, "{comp} vs {expected}");
        }
    }
}
