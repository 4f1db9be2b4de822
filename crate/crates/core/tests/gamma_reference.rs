//! Gamma accuracy against reference values computed at 200-bit precision
//! and rounded to the nearest f64.

use msmpoly::{gamma, log_gamma_signed, GammaProduct};

/// `(x, Γ(x), ln|Γ(x)|)`
const GAMMA_REFERENCE: &[(f64, f64, f64)] = &[
    (0.5, 1.772453850905516, 0.5723649429247001),
    (1.5, 0.886226925452758, -0.12078223763524522),
    (2.5, 1.329340388179137, 0.2846828704729192),
    (3.25, 2.5492569667185294, 0.9358019311087253),
    (7.1, 868.9568588006398, 6.7672934793847705),
    (10.0, 362880.0, 12.801827480081469),
    (19.99, 1.1808504867660101e+17, 39.310181511256346),
    (20.0, 1.21645100408832e+17, 39.339884187199495),
    (20.01, 1.2531312378381742e+17, 39.36959199022516),
    (33.3, 7.487577596522633e+35, 82.60372358165495),
    (50.5, 4.29046291235196e+63, 146.51925549072064),
    (99.9, 5.891732151644516e+155, 358.67423945197754),
    (120.25, 1.8436071562551405e+197, 454.2209873833582),
    (150.125, 7.122871194429566e+260, 600.6354350802338),
    (170.5, 5.56209241456e+305, 704.0044277342047),
    (1e-08, 99999999.42278434, 18.42068073818021),
    (0.001, 999.4237724845955, 6.907178885383853),
    (0.1, 9.51350769866873, 2.252712651734206),
    (0.9, 1.0686287021193193, 0.06637623973474295),
    (1.1, 0.9513507698668732, -0.049872441259839764),
    (1.9, 0.9617658319073874, -0.03898427592308336),
    (2.1, 1.0464858468535605, 0.04543773854448518),
    (-0.1, -10.686287021193193, 2.3689613327287886),
    (-0.5, -3.544907701811032, 1.2655121234846454),
    (-0.999, -1000.4241966812758, 6.908179385717436),
    (-1.001, 999.5786270024664, 6.907333817182055),
    (-1.5, 2.363271801207355, 0.860047015376481),
    (-2.5, -0.9453087204829419, -0.056243716497674054),
    (-3.3, 0.43851739219876307, -0.8243558050174264),
    (-7.77, 0.00019216959248757713, -8.557132281605123),
    (-10.5, -2.640121820547716e-07, -15.147270590717842),
    (-19.2, 2.423127753869336e-17, -38.258887414961414),
    (-33.7, 3.8002295682917067e-38, -86.16317205615782),
    (-50.01, -3.1620093789356377e-63, -143.9116531537017),
    (-99.5, 3.3704592739067173e-157, -360.2908105819282),
    (-120.3, -1.3782875831085362e-199, -457.8935916589827),
    (-150.75, -1.8063763409201774e-264, -607.2911417334655),
    (-169.9, 2.3417755968512495e-306, -703.7401290124799),
    (-59.89686, 1.8103264260494892e-81, -185.91588535761665),
    (-118.711281, -2.845841303429681e-196, -450.2608194899886),
    (51.317721, 1.0584776937010253e+65, 149.72486278248442),
    (-145.371663, 6.663494296002131e-253, -580.6573845114625),
    (12.199881, 65154733.62235045, 17.992275516184286),
    (-45.665768, 2.3721381561375817e-57, -130.38355857664388),
    (-150.280366, -1.7476037329899933e-263, -605.0216339032745),
    (2.528149, 1.35617661211084, 0.3046694259565692),
    (-157.251476, 1.0561550042687567e-278, -640.0640208934869),
    (-22.560468, -4.936120420578273e-22, -49.060292363174064),
    (-146.249156, -1.0941050374084972e-254, -584.7666769088403),
    (-139.157575, 3.158246155640114e-239, -549.1678203660933),
    (-25.663476, 2.68874162113762e-26, -58.87813913251705),
    (111.129722, 2.9242866004362297e+178, 410.93319710658943),
    (-127.907333, 4.451210111159233e-215, -493.56261899941734),
    (-94.098752, -6.039027313074872e-146, -334.37918061903406),
    (43.327296, 4.799462242047661e+51, 119.00034362142728),
    (152.22104, 2.6175738084749435e+265, 611.1472975048673),
    (26.215003, 3.114974607725312e+25, 58.70084832544427),
    (-35.128639, 4.883808383249672e-40, -90.51747839785189),
    (161.926736, 5.230096861269994e+286, 660.1937663945217),
    (-154.161889, -9.23300271687311e-272, -624.0803609773332),
    (121.879276, 4.5346809753826284e+200, 462.02877333268736),
    (-71.532843, 3.8096610378677437e-103, -235.82872435964475),
    (-120.953272, -3.3205407295913234e-200, -459.31689095878386),
    (-129.950639, 4.000272225716055e-219, -502.87977295046284),
    (-65.11618, 6.563992325976261e-91, -207.65364445833882),
    (107.482962, 1.0937029596198161e+171, 393.831620051399),
    (-108.553031, -1.7982042544034338e-175, -402.36560274346886),
    (27.744056, 4.6677428139078127e+27, 63.710473128181846),
    (47.230579, 1.334440202333535e+58, 133.8384472734712),
    (-43.384835, 1.2995163496335535e-53, -121.77501777218393),
    (16.233118, 2481773744675.121, 28.539994640084835),
    (-148.651749, -5.306839430179469e-260, -597.0031277312953),
    (-149.735602, 2.8030166768476846e-262, -602.2465981426326),
    (-99.974038, 4.657133056049936e-157, -359.96745956527917),
    (61.335991, 3.3054813344741095e+82, 190.0075597264787),
    (-24.618616, -7.457282510478221e-25, -55.555436251734456),
    (-63.189962, 1.2811673937537894e-87, -200.07713140182366),
    (29.091034, 4.1366260745689395e+29, 68.19484819457229),
];

fn ulps(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs() / f64::EPSILON
}

#[test]
fn gamma_within_four_ulps() {
    let mut worst = (0.0, 0.0);
    for &(x, g, _) in GAMMA_REFERENCE {
        let got = gamma(x).unwrap();
        let e = ulps(got, g);
        if e > worst.1 {
            worst = (x, e);
        }
        assert!(e <= 4.0, "gamma({x}) = {got:e}, expected {g:e} ({e} ulps)");
    }
    eprintln!("worst gamma error {} ulps at {}", worst.1, worst.0);
}

#[test]
fn log_gamma_matches_reference() {
    for &(x, g, lg) in GAMMA_REFERENCE {
        let v = log_gamma_signed(x).unwrap();
        assert_eq!(f64::from(v.sign), g.signum(), "sign at {x}");
        let tol = 4.0 * f64::EPSILON * lg.abs().max(1.0);
        assert!(
            (v.log_magnitude - lg).abs() <= tol,
            "lgamma({x}) = {} vs {lg}",
            v.log_magnitude
        );
    }
}

#[test]
fn log_gamma_of_one_hundred() {
    let v = log_gamma_signed(100.0).unwrap();
    assert_eq!(v.sign, 1);
    assert!((v.log_magnitude - 359.1342053695754).abs() <= 2.0 * f64::EPSILON * 359.0);
    // Stirling bounds: the truncated series brackets ln Γ
    let x: f64 = 100.0;
    let base = (x - 0.5) * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI).ln();
    assert!(v.log_magnitude > base + 1.0 / (12.0 * x) - 1.0 / (360.0 * x.powi(3)));
    assert!(v.log_magnitude < base + 1.0 / (12.0 * x));
}

#[test]
fn msm_image_prefactor_example() {
    // Γ(2)Γ(2.1)Γ(2.1) / (Γ(2.4)Γ(2.3)Γ(2.6)) at 200-bit precision
    let gp = GammaProduct::new(vec![2.0, 2.1, 2.1], vec![2.4, 2.3, 2.6]);
    let v = gp.value().unwrap();
    assert!(ulps(v, PREFACTOR) <= 4.0, "{v:e}");
}

const PREFACTOR: f64 = 0.5285672875141667;
