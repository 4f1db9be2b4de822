// @generated by tests/reference/generate.py; do not edit
#![allow(dead_code, clippy::type_complexity)]

/// `(identity, params, tau, n, p, q, x, value)`
pub const IDENTITY: &[(&str, &[f64], f64, usize, f64, f64, f64, f64)] = &[
    ("rl-left-poly", &[0.5], 2.0, 0, 3.0, 0.0, 0.5, 0.26596152026762176),
    ("ek-left-poly", &[0.5, 0.7], 2.0, 0, 3.0, 0.0, 0.5, 0.2742077804289899),
    (
        "saigo-left-poly",
        &[0.6, 0.2, 0.4],
        2.0,
        0,
        3.0,
        0.0,
        0.5,
        0.3397199812363945,
    ),
    (
        "msm-left-poly",
        &[0.5, 0.0, 0.2, 0.4, 1.1],
        2.0,
        0,
        3.0,
        0.0,
        0.5,
        0.15685120839275354,
    ),
    ("rl-left-poly", &[0.5], 2.0, 1, 5.0, 1.5, 2.0, 4.893691972924241),
    ("ek-left-poly", &[0.5, 0.7], 2.0, 1, 5.0, 1.5, 2.0, 2.3993180787536614),
    (
        "saigo-left-poly",
        &[0.6, 0.2, 0.4],
        2.0,
        1,
        5.0,
        1.5,
        2.0,
        2.460169527998667,
    ),
    (
        "msm-left-poly",
        &[0.5, 0.0, 0.2, 0.4, 1.1],
        2.0,
        1,
        5.0,
        1.5,
        2.0,
        1.9021098295464496,
    ),
    ("rl-left-poly", &[0.5], 2.0, 3, 9.0, 0.0, 1.0, -15.68984365675665),
    ("ek-left-poly", &[0.5, 0.7], 2.0, 3, 9.0, 0.0, 1.0, -10.458785702083611),
    (
        "saigo-left-poly",
        &[0.6, 0.2, 0.4],
        2.0,
        3,
        9.0,
        0.0,
        1.0,
        -12.615421117547692,
    ),
    (
        "msm-left-poly",
        &[0.5, 0.0, 0.2, 0.4, 1.1],
        2.0,
        3,
        9.0,
        0.0,
        1.0,
        -4.890913296253566,
    ),
    ("rl-left-poly", &[0.5], 2.0, 3, 9.0, 1.5, 0.5, 3.566733959303285),
    ("ek-left-poly", &[0.5, 0.7], 2.0, 3, 9.0, 1.5, 0.5, 3.616897848972832),
    (
        "saigo-left-poly",
        &[0.6, 0.2, 0.4],
        2.0,
        3,
        9.0,
        1.5,
        0.5,
        4.8796433019133625,
    ),
    (
        "msm-left-poly",
        &[0.5, 0.0, 0.2, 0.4, 1.1],
        2.0,
        3,
        9.0,
        1.5,
        0.5,
        1.1472542312145166,
    ),
    ("rl-right-poly", &[0.3], -0.5, 0, 3.0, 0.0, 1.0, 1.0360424808021194),
    ("ek-right-poly", &[0.5, 0.7], -0.5, 0, 3.0, 0.0, 1.0, 0.6473808267786268),
    (
        "saigo-right-poly",
        &[0.8, 0.45, 0.6],
        -0.5,
        0,
        3.0,
        0.0,
        1.0,
        0.4092686280544633,
    ),
    (
        "msm-right-poly",
        &[0.5, 0.3, 0.2, 0.0, 1.1],
        2.0,
        0,
        3.0,
        0.0,
        1.0,
        0.708300923748595,
    ),
    ("rl-right-poly", &[0.3], -0.5, 1, 5.0, 1.5, 2.0, -0.5862527874196567),
    (
        "ek-right-poly",
        &[0.5, 0.7],
        -0.5,
        1,
        5.0,
        1.5,
        2.0,
        -0.31789400876758384,
    ),
    (
        "saigo-right-poly",
        &[0.8, 0.45, 0.6],
        -0.5,
        1,
        5.0,
        1.5,
        2.0,
        -0.13533150952454084,
    ),
    (
        "msm-right-poly",
        &[0.5, 0.3, 0.2, 0.0, 1.1],
        2.0,
        1,
        5.0,
        1.5,
        2.0,
        -0.36586956515509644,
    ),
    ("rl-right-poly", &[0.3], -0.5, 3, 9.0, 0.0, 4.0, 0.9193258555305156),
    (
        "ek-right-poly",
        &[0.5, 0.7],
        -0.5,
        3,
        9.0,
        0.0,
        4.0,
        0.35517841124154204,
    ),
    (
        "saigo-right-poly",
        &[0.8, 0.45, 0.6],
        -0.5,
        3,
        9.0,
        0.0,
        4.0,
        0.14206551847908985,
    ),
    (
        "msm-right-poly",
        &[0.5, 0.3, 0.2, 0.0, 1.1],
        2.0,
        3,
        9.0,
        0.0,
        4.0,
        0.16134319037933395,
    ),
    ("rl-right-poly", &[0.3], -0.5, 3, 9.0, 1.5, 1.0, -1.9017299765459912),
    ("ek-right-poly", &[0.5, 0.7], -0.5, 3, 9.0, 1.5, 1.0, 2.6748511278953497),
    (
        "saigo-right-poly",
        &[0.8, 0.45, 0.6],
        -0.5,
        3,
        9.0,
        1.5,
        1.0,
        1.5083310778703083,
    ),
    (
        "msm-right-poly",
        &[0.5, 0.3, 0.2, 0.0, 1.1],
        2.0,
        3,
        9.0,
        1.5,
        1.0,
        4.537993649702568,
    ),
    (
        "msm-left-poly",
        &[0.5, 0.3, 0.2, 0.4, 1.1],
        3.5,
        2,
        7.0,
        0.0,
        0.5,
        -0.085367984225596,
    ),
    (
        "msm-left-deriv-poly",
        &[0.3, 0.4, 0.1, 0.2, 0.6],
        3.5,
        2,
        7.0,
        0.0,
        0.5,
        -1.109653210166225,
    ),
    (
        "msm-left-poly",
        &[0.5, 0.3, 0.2, 0.4, 1.1],
        3.5,
        5,
        13.0,
        1.5,
        2.0,
        17517.826962124225,
    ),
    (
        "msm-left-deriv-poly",
        &[0.3, 0.4, 0.1, 0.2, 0.6],
        3.5,
        5,
        13.0,
        1.5,
        2.0,
        91601.88772085504,
    ),
    (
        "msm-right-poly",
        &[0.5, 0.3, 0.2, 0.4, 1.1],
        3.5,
        2,
        7.0,
        0.0,
        1.0,
        -0.8485136918976446,
    ),
    (
        "msm-right-deriv-poly",
        &[0.3, 0.4, 0.1, 0.2, 0.6],
        3.5,
        2,
        7.0,
        0.0,
        1.0,
        -1.3704030586453775,
    ),
    (
        "msm-right-poly",
        &[0.5, 0.3, 0.2, 0.4, 1.1],
        3.5,
        5,
        13.0,
        1.5,
        4.0,
        0.9999419812607171,
    ),
    (
        "msm-right-deriv-poly",
        &[0.3, 0.4, 0.1, 0.2, 0.6],
        3.5,
        5,
        13.0,
        1.5,
        4.0,
        5.45279450055257,
    ),
];

/// `(a, a', b, b', c, w, z, F3)`
pub const APPELL_F3: &[(f64, f64, f64, f64, f64, f64, f64, f64)] = &[
    (1.0, 0.5, 0.3, 0.2, 1.5, 0.3, -0.2, 1.0587563829896796),
    (0.5, 0.3, 0.2, 0.4, 1.1, 0.5, 0.5, 1.1333062778584961),
    (-2.0, 1.5, 0.7, -3.0, 2.5, -0.5, 0.4, 0.652360999000999),
    (2.5, 1.25, 1.5, 0.75, 3.2, -0.45, -0.5, 0.5586402520225939),
    (0.1, 0.9, 0.4, 0.6, 0.7, 0.25, 0.1, 1.1014797459423564),
];

/// `(numerator, denominator, argument, pFq)`
pub const PFQ: &[(&[f64], &[f64], f64, f64)] = &[
    (&[-5.0, 2.5, 1.5], &[1.25, 3.0], -2.0, 226.91151332327803),
    (&[0.5, 1.5], &[2.5], 0.9, 1.66730346918458),
    (&[1.0, 1.0], &[2.0], -0.5, 0.8109302162163288),
    (&[-8.0, 11.5, 0.3, 0.7], &[2.5, 1.7, 0.9], 1.5, 5.237998359692901),
    (&[1.5], &[2.5, 0.75], -12.0, 0.09623470562174304),
    (&[-4.0, 2.0], &[0.5], 4.0, 2109.342857142857),
];

/// `(n, alpha, beta, x, P_n^(alpha, beta)(x))`
pub const JACOBI: &[(usize, f64, f64, f64, f64)] = &[
    (0, 0.5, 1.0, 0.3, 1.0),
    (1, 1.5, -0.5, 0.2, 1.3),
    (4, 2.0, 3.0, -0.7, 3.65196875),
    (6, -0.5, -0.5, 0.9, -0.2045360625),
    (8, 1.5, -5.5, 3.0, 45012.649993896484),
];

/// `(n, p, q, x, M_n^(p,q)(x))`
pub const M_POLY: &[(usize, f64, f64, f64, f64)] = &[
    (1, 5.0, 0.0, 1.0, 2.0),
    (2, 7.0, 1.5, 0.5, -2.25),
    (5, 13.0, -0.5, 3.0, -168180.46875),
    (8, 19.0, 2.5, 0.1, -330860.79231975),
    (6, 4.5, 0.0, 5.0, 397277718.046875),
];
