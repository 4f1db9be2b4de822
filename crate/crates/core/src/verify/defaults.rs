//! Built-in grids. Points are chosen so every image condition holds at
//! each shift `τ ± k`, and no Saigo kernel has an integer `ε - μ`.

use super::config::{Grid, PRule};
use super::{CheckId, PolyCheck};
use crate::operator::Family;
use crate::reduction::Reduction;
use crate::theorems::IdentityId;

const MSM_A: [f64; 5] = [0.5, 0.3, 0.2, 0.4, 1.1];
const MSM_B: [f64; 5] = [0.2, 0.1, 0.3, 0.5, 0.9];

fn g(params: &[&[f64]], tau: &[f64], x: &[f64]) -> Grid {
    Grid {
        params: params.iter().map(|p| p.to_vec()).collect(),
        tau: tau.to_vec(),
        x: x.to_vec(),
        ..Grid::default()
    }
}

fn poly(mut grid: Grid, max_n: usize, q: &[f64]) -> Grid {
    grid.n = (0..=max_n).collect();
    grid.p = vec![PRule::linear(2.0, 3.0)];
    grid.q = q.to_vec();
    grid
}

const LEFT_X: [f64; 3] = [0.5, 1.0, 2.0];
const RIGHT_X: [f64; 3] = [1.0, 2.0, 4.0];
const Q: [f64; 2] = [0.0, 1.5];

const SAIGO_DELTA: [f64; 3] = [0.4, 0.8, 1.5];
const SAIGO_MU: [f64; 3] = [-0.3, 0.2, 0.45];
const SAIGO_EPS: [f64; 3] = [0.35, 0.6, 1.25];

fn saigo_cube() -> Vec<Vec<f64>> {
    let mut v = Vec::new();
    for d in SAIGO_DELTA {
        for m in SAIGO_MU {
            for e in SAIGO_EPS {
                v.push(vec![d, m, e]);
            }
        }
    }
    v
}

pub fn grid(check: CheckId) -> Grid {
    match check {
        CheckId::Identity(id) => identity(id),
        CheckId::Image(f) => image(f),
        CheckId::Reduction(r) => reduction(r),
        CheckId::Poly(p) => polynomial(p),
    }
}

fn identity(id: IdentityId) -> Grid {
    match id {
        // the third tuple is the delta' = 0 slice quadrature can reach
        IdentityId::MsmLeftPoly => poly(
            g(&[&MSM_A, &MSM_B, &[0.5, 0.0, 0.2, 0.4, 1.1]], &[2.0, 3.5], &LEFT_X),
            5,
            &Q,
        ),
        IdentityId::MsmRightPoly => poly(
            g(&[&MSM_A, &MSM_B, &[0.5, 0.3, 0.2, 0.0, 1.1]], &[2.0, 3.5], &RIGHT_X),
            5,
            &Q,
        ),
        IdentityId::MsmLeftDerivPoly => poly(g(&[&[0.3, 0.4, 0.1, 0.2, 0.6], &MSM_A], &[2.0, 3.5], &LEFT_X), 5, &Q),
        IdentityId::MsmRightDerivPoly => poly(g(&[&[0.3, 0.4, 0.1, 0.2, 0.6], &MSM_A], &[2.0, 3.5], &RIGHT_X), 5, &Q),
        IdentityId::SaigoLeftPoly => poly(g(&[&[0.6, 0.2, 0.4], &[1.2, -0.3, 0.65]], &[1.5, 2.5], &LEFT_X), 5, &Q),
        IdentityId::RlLeftPoly => poly(g(&[&[0.3], &[0.5], &[1.0]], &[1.0, 1.5], &LEFT_X), 5, &Q),
        IdentityId::EkLeftPoly => poly(g(&[&[0.5, 0.7], &[-0.2, 1.3]], &[1.0, 2.5], &LEFT_X), 5, &Q),
        IdentityId::SaigoRightPoly => poly(
            g(&[&[0.8, 0.45, 0.6], &[1.5, 0.2, 1.25]], &[0.3, -0.5], &RIGHT_X),
            5,
            &Q,
        ),
        IdentityId::RlRightPoly => poly(g(&[&[0.3], &[0.5]], &[0.25, -0.5], &RIGHT_X), 5, &Q),
        IdentityId::EkRightPoly => poly(g(&[&[0.5, 0.7], &[1.2, 0.4]], &[0.5, -0.5], &RIGHT_X), 5, &Q),
    }
}

fn image(f: Family) -> Grid {
    match f {
        Family::MsmLeftInt => g(
            &[
                &[0.5, 0.0, 0.2, 0.4, 1.1],
                &[0.2, 0.1, 0.3, 0.0, 0.9],
                &[0.0, 0.0, 0.7, 0.3, 1.4],
            ],
            &[2.0, 3.5],
            &[0.5, 2.0],
        ),
        Family::MsmRightInt => g(
            &[
                &[0.5, 0.0, 0.2, 0.4, 1.1],
                &[0.2, 0.1, 0.3, 0.0, 0.9],
                &[0.0, 0.0, 0.7, 0.3, 1.4],
            ],
            &[2.0, 3.5],
            &[1.0, 2.0],
        ),
        Family::MsmLeftDeriv | Family::MsmRightDeriv => g(
            &[
                &[0.3, 0.4, 0.1, 0.2, 0.6],
                &MSM_A,
                &[0.2, 0.1, 0.3, 0.5, 1.7],
                &[0.0, 0.0, 0.0, 0.0, 0.6],
            ],
            &[3.0, 4.5],
            &[0.5, 1.5],
        ),
        Family::SaigoLeft => Grid {
            params: saigo_cube(),
            ..g(&[], &[0.7, 1.5], &[0.5, 2.0])
        },
        Family::SaigoRight => Grid {
            params: saigo_cube(),
            ..g(&[], &[0.2, -0.5], &[1.0, 2.0])
        },
        Family::RlLeft => Grid {
            tol: Some(1e-8),
            ..g(&[&[0.3], &[0.5], &[1.0]], &[1.0, 1.5, 2.5], &[1.0, 2.0])
        },
        Family::RlRight => g(&[&[0.3], &[0.5]], &[0.25, -0.5], &[1.0, 2.0]),
        // tau = 0.3 lies below the printed bound tau > epsilon
        Family::EkLeft => g(&[&[0.5, 0.7], &[-0.2, 1.3]], &[0.3, 1.0, 2.5], &[1.0, 2.0]),
        Family::EkRight => g(&[&[0.5, 0.7], &[1.2, 0.4]], &[0.5, -0.5], &[1.0, 2.0]),
    }
}

fn reduction(r: Reduction) -> Grid {
    let left = [0.7, 1.5];
    let right = [-0.5, -1.0];
    let params: &[&[f64]] = &[&[0.6, 0.2, 0.4], &[1.2, -0.3, 0.65], &[0.8, 0.45, 0.6]];
    match r {
        Reduction::MsmSaigoLeft | Reduction::SaigoRlLeft | Reduction::SaigoEkLeft => g(params, &left, &[0.5, 2.0]),
        _ => g(params, &right, &[1.0, 2.0]),
    }
}

fn polynomial(p: PolyCheck) -> Grid {
    let offsets = |lo: i32, hi: i32| (lo..=hi).map(|o| PRule::linear(2.0, o as f64)).collect();
    match p {
        PolyCheck::Forms => Grid {
            n: (0..=8).collect(),
            p: offsets(2, 6),
            q: vec![-0.5, 0.0, 1.0, 2.5],
            x: vec![0.1, 1.0, 5.0],
            ..Grid::default()
        },
        PolyCheck::Connection => Grid {
            n: (0..=6).collect(),
            p: offsets(2, 6),
            q: vec![-0.5, 0.0, 1.0, 2.5],
            x: vec![0.1, 1.0, 5.0],
            ..Grid::default()
        },
        // pairs m < n from the degree list; p follows the larger degree
        PolyCheck::Orthogonality => Grid {
            n: (0..=3).collect(),
            p: vec![PRule::linear(2.0, 2.5), PRule::linear(2.0, 4.0)],
            q: vec![-0.5, 0.0, 1.5],
            ..Grid::default()
        },
        PolyCheck::Ode => Grid {
            n: (0..=8).collect(),
            p: vec![PRule::linear(2.0, 3.0), PRule::constant(4.5)],
            q: vec![0.0, 1.5],
            x: (1..=20).map(|i| 0.25 * i as f64).collect(),
            ..Grid::default()
        },
    }
}
