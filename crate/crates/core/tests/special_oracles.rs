use mcaudit_core::special::{
    chi_square_cdf, chi_square_inv_sf, chi_square_sf, ln_gamma, normal_cdf, normal_inv,
    Probability,
};

fn p(v: f64) -> Probability<f64> {
    Probability::new(v).unwrap()
}

// ln Γ(x) from mpmath.loggamma at 50 digits, rounded to f64.
const LN_GAMMA: [(f64, f64); 16] = [
    (0.001, 6.907_178_885_383_853),
    (0.01, 4.599_479_878_042_022),
    (0.1, 2.252_712_651_734_206),
    (0.5, 0.572_364_942_924_700_1),
    (0.9, 0.066_376_239_734_742_95),
    (1.5, -0.120_782_237_635_245_22),
    (2.5, 0.284_682_870_472_919_2),
    (3.7, 1.428_072_326_665_388),
    (10.0, 12.801_827_480_081_469),
    (25.5, 56.389_167_643_719_944),
    (100.0, 359.134_205_369_575_4),
    (171.3, 708.114_947_038_996_9),
    (1000.0, 5_905.220_423_209_181),
    (12_345.6, 103_959.185_066_168_46),
    (100_000.0, 1_051_287.708_973_656_9),
    (1_000_000.0, 12_815_504.569_147_611),
];

// Q(k/2, x/2) from regularized mpmath.gammainc at 50 digits, rounded to f64.
const CHI_SQUARE_SF: [(f64, u32, f64); 9] = [
    (8.748, 9, 0.460_853_787_546_906_76),
    (16.919, 9, 0.049_999_640_848_349_79),
    (0.5, 1, 0.479_500_122_186_953_5),
    (3.0, 1, 0.083_264_516_663_550_4),
    (1.0, 4, 0.909_795_989_568_950_1),
    (9.488, 4, 0.049_994_405_577_994_64),
    (50.0, 30, 0.012_402_060_718_900_58),
    (0.01, 3, 0.999_734_834_941_344_4),
    (100.0, 10, 5.449_701_982_920_529_5e-17),
];

// Upper-tail quantiles by 40-digit bisection on mpmath's Q.
const CHI_SQUARE_ISF: [(f64, u32, f64); 7] = [
    (0.05, 9, 16.918_977_604_620_45),
    (0.05, 4, 9.487_729_036_781_156),
    (0.01, 1, 6.634_896_601_021_215),
    (0.9, 1, 0.015_790_774_093_431_218),
    (0.5, 30, 29.336_031_516_661_585),
    (0.1, 17, 24.769_035_343_901_45),
    (0.99, 2, 0.020_100_671_707_002_9),
];

// √2 · erfinv(2p − 1) at 40 digits, rounded to f64.
const NORMAL_QUANTILES: [(f64, f64); 4] = [
    (0.975, 1.959_963_984_540_054_3),
    (0.75, 0.674_489_750_196_081_7),
    (1e-12, -7.034_483_825_301_132),
    (0.3, -0.524_400_512_708_040_8),
];

/// Chi-square density with Γ(k/2) from its closed form at integers and
/// half-integers, independent of `ln_gamma`.
fn density(x: f64, k: u32) -> f64 {
    let half_k = k as f64 / 2.0;
    let gamma_half_k = if k.is_multiple_of(2) {
        (1..k / 2).map(f64::from).product::<f64>()
    } else {
        // Γ(n + 1/2) = (2n)! √π / (4^n n!)
        let n = (k - 1) / 2;
        let mut g = std::f64::consts::PI.sqrt();
        for i in 0..n {
            g *= i as f64 + 0.5;
        }
        g
    };
    if x <= 0.0 {
        return 0.0;
    }
    x.powf(half_k - 1.0) * (-x / 2.0).exp() / (2f64.powf(half_k) * gamma_half_k)
}

/// Composite Simpson integral of the density over [x, x + 400].
fn simpson_sf(x: f64, k: u32) -> f64 {
    let (a, b) = (x, x + 400.0);
    let n = 400_000usize;
    let h = (b - a) / n as f64;
    let mut s = density(a, k) + density(b, k);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * density(a + i as f64 * h, k);
    }
    s * h / 3.0
}

fn simpson_isf(alpha: f64, k: u32) -> f64 {
    let (mut lo, mut hi) = (1e-9, 200.0);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if simpson_sf(mid, k) > alpha {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn ln_gamma_matches_high_precision_values() {
    for (x, expected) in LN_GAMMA {
        let got = ln_gamma(x).unwrap();
        let err = (got - expected).abs();
        // Relative 1e-12, with an absolute floor where ln Γ passes through zero.
        assert!(
            err <= 1e-12 * expected.abs().max(1.0),
            "x = {x}: {got} vs {expected} (err {err:e})"
        );
    }
}

#[test]
fn ln_gamma_integer_factorials() {
    assert_eq!(ln_gamma(1.0).unwrap(), 0.0);
    assert_eq!(ln_gamma(2.0).unwrap(), 0.0);
    assert!((ln_gamma(10.0).unwrap() - 362_880f64.ln()).abs() < 1e-12);
}

#[test]
fn chi_square_sf_matches_high_precision_values() {
    for (x, k, expected) in CHI_SQUARE_SF {
        let got = chi_square_sf(x, k).unwrap().value();
        assert!(
            (got - expected).abs() <= 1e-10 && (got - expected).abs() <= 1e-12 * expected.max(1e-4),
            "sf({x}, {k}) = {got} vs {expected}"
        );
    }
}

#[test]
fn chi_square_sf_agrees_with_simpson_integration() {
    for (x, k) in [(8.748, 9), (8.7, 9), (16.919, 9), (3.0, 4), (20.0, 12), (31.4, 30)] {
        let got = chi_square_sf(x, k).unwrap().value();
        let oracle = simpson_sf(x, k);
        assert!((got - oracle).abs() < 1e-10, "sf({x}, {k}) = {got} vs simpson {oracle}");
    }
}

#[test]
fn one_decimal_statistic_upper_tail() {
    // 8.748 rounded to one decimal.
    let sf = chi_square_sf(8.7f64, 9).unwrap().value();
    assert!((sf - 0.46541).abs() < 1e-5, "{sf}");
}

#[test]
fn chi_square_inverse_matches_oracles() {
    for (alpha, k, expected) in CHI_SQUARE_ISF {
        let got = chi_square_inv_sf(p(alpha), k).unwrap();
        assert!(
            (got - expected).abs() <= 1e-9 * expected.max(1.0),
            "isf({alpha}, {k}) = {got} vs {expected}"
        );
    }
    let simpson = simpson_isf(0.05, 4);
    assert!((chi_square_inv_sf(p(0.05), 4).unwrap() - simpson).abs() < 1e-7);
    assert!((chi_square_inv_sf(p(0.05), 9).unwrap() - 16.919).abs() < 1e-3);
    assert!((chi_square_inv_sf(p(0.5), 2).unwrap() - 2.0 * std::f64::consts::LN_2).abs() < 1e-12);
}

#[test]
fn chi_square_round_trip() {
    for alpha in [0.9, 0.5, 0.1, 0.05, 0.01] {
        for k in 1..=30 {
            let x = chi_square_inv_sf(p(alpha), k).unwrap();
            let back = chi_square_sf(x, k).unwrap().value();
            assert!((back - alpha).abs() <= 1e-9, "alpha {alpha}, df {k}: {back}");
        }
    }
}

#[test]
fn chi_square_sf_strictly_decreasing_and_normalized() {
    for k in [1, 2, 3, 9, 30] {
        let mut prev = 1.0 + 1e-12;
        for i in 1..=400 {
            let x = i as f64 * 0.25;
            let sf = chi_square_sf(x, k).unwrap().value();
            let cdf = chi_square_cdf(x, k).unwrap().value();
            assert!((sf + cdf - 1.0).abs() <= 1e-12);
            // Strict where neighbouring values are distinguishable in f64.
            if sf > 1e-300 && prev < 1.0 - 1e-15 {
                assert!(sf < prev, "df {k}, x {x}");
            } else {
                assert!(sf <= prev, "df {k}, x {x}");
            }
            prev = sf;
        }
    }
}

#[test]
fn normal_quantiles_match_oracles() {
    for (prob, expected) in NORMAL_QUANTILES {
        let got = normal_inv(p(prob)).unwrap();
        assert!((got - expected).abs() <= 1e-12 * expected.abs().max(1.0), "{prob}: {got}");
    }
    assert_eq!(normal_inv(p(0.5)).unwrap(), 0.0);
    assert_eq!(normal_cdf(0.0).unwrap().value(), 0.5);
}

#[test]
fn normal_round_trip_over_extreme_grid() {
    let mut worst = 0.0f64;
    // Lower tail down to 1e-300, upper tail up to 1 - 1e-16.
    let mut probs: Vec<f64> = (0..=300).map(|e| 10f64.powi(-e)).filter(|&v| v < 1.0).collect();
    probs.extend((1..=16).map(|e| 1.0 - 10f64.powi(-e)));
    probs.extend((1..100).map(|i| i as f64 / 100.0));
    for prob in probs {
        let x = normal_inv(p(prob)).unwrap();
        let back = normal_cdf(x).unwrap().value();
        worst = worst.max((back - prob).abs());
        assert!((back - prob).abs() <= 1e-12, "p = {prob:e}: x = {x}, back = {back:e}");
    }
    assert!(worst <= 1e-12);
}

#[test]
fn normal_symmetry_and_monotonicity() {
    for i in 1..1000 {
        let prob = i as f64 / 1000.0;
        let a = normal_inv(p(prob)).unwrap();
        let b = normal_inv(p(1.0 - prob)).unwrap();
        assert!((a + b).abs() <= 1e-12, "{prob}");
    }
    let mut prev = 0.0;
    for i in -800..=800 {
        let z = i as f64 / 100.0;
        let c = normal_cdf(z).unwrap().value();
        if z <= 6.0 {
            assert!(c > prev, "z = {z}");
        } else {
            assert!(c >= prev, "z = {z}");
        }
        prev = c;
    }
}
