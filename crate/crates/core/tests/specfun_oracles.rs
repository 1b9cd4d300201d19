//! Special-function values checked against independent reference
//! computations (direct series, lattice double sums, finite differences,
//! brute-force identities).

use energy_lab_core::specfun::{
    digamma, dirichlet_l3, epstein_hex, gauss_2f1, gen_bernoulli_alpha, hurwitz_zeta,
    lemma_identity_rhs, pochhammer, stieltjes_gamma1, EULER_GAMMA,
};
use energy_lab_oracles as oracles;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

#[test]
fn digamma_against_series_oracle() {
    // Frozen anchor values first: psi(1) = -gamma and psi(1/2) = -gamma - 2 log 2
    // (duplication formula), both reproduced by the series oracle.
    assert!((oracles::digamma_series(1.0) - (-0.5772156649015329)).abs() < 1e-12);
    assert!((digamma(1.0).unwrap() - (-0.5772156649015329)).abs() < 1e-13);
    let want_half = -EULER_GAMMA - 2.0 * std::f64::consts::LN_2;
    assert!((oracles::digamma_series(0.5) - want_half).abs() < 1e-12);
    assert!((digamma(0.5).unwrap() - want_half).abs() < 1e-13);

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
    for _ in 0..200 {
        let x: f64 = rng.gen_range(0.05..40.0);
        let got = digamma(x).unwrap();
        let want = oracles::digamma_series(x);
        assert!(
            (got - want).abs() <= 1e-12 * want.abs().max(1.0),
            "x={x}: {got} vs {want}"
        );
    }
    // A few reflected arguments.
    for &x in &[-0.5f64, -1.7, -6.3] {
        let got = digamma(x).unwrap();
        let want = oracles::digamma_series(x);
        assert!((got - want).abs() <= 1e-10 * want.abs().max(1.0), "x={x}");
    }
}

#[test]
fn stieltjes_gamma1_against_em_oracle() {
    // The oracle differentiates the Euler-Maclaurin representation at
    // exactly s = 1; the implementation extrapolates a shrinking window.
    for &a in &[1.0f64, 0.5, 1.0 / 3.0, 2.0 / 3.0, 2.25, 4.0] {
        let got = stieltjes_gamma1(a).unwrap();
        let want = oracles::gamma1_em_closed(a);
        assert!((got - want).abs() <= 1e-9, "a={a}: {got} vs {want}");
    }
    // Frozen value computed with the oracle.
    assert!((stieltjes_gamma1(1.0).unwrap() - (-0.0728158454836767)).abs() < 1e-10);
}

#[test]
fn dirichlet_l3_against_direct_series() {
    for &s in &[1.25f64, 1.5, 2.0, 3.0, 4.5] {
        let got = dirichlet_l3(s).unwrap();
        let want = oracles::l3_direct_series(s, 1e-13);
        assert!(
            ((got - want) / want).abs() <= 1e-10,
            "s={s}: {got} vs {want}"
        );
    }
}

#[test]
fn dirichlet_l3_trivial_zeros() {
    for m in 1..=2u32 {
        let s = 1.0 - 2.0 * f64::from(m);
        assert!(dirichlet_l3(s).unwrap().abs() <= 1e-10, "L3({s}) should vanish");
    }
}

#[test]
fn epstein_hex_against_lattice_double_sum() {
    // s = 4 converges slowly; the tail bound keeps the comparison honest.
    let cases = [(4.0f64, 6000i64), (6.0, 800), (8.0, 200)];
    for (s, m) in cases {
        let got = epstein_hex(s).unwrap();
        let (partial, tail) = oracles::hex_zeta_double_sum(s, m);
        assert!(
            (got - partial).abs() <= tail + 1e-8 * got.abs(),
            "s={s}: {got} vs {partial} (+/- {tail})"
        );
        assert!(tail <= 1e-7 * got.abs(), "tail bound too weak at s={s}");
    }
}

#[test]
fn alpha_coefficients_against_finite_difference_taylor() {
    for &s in &[-1.0f64, 0.5, 3.0] {
        let alpha = gen_bernoulli_alpha(s, 3);
        for n in 0..=3usize {
            let fd = oracles::nth_taylor_coeff_fd(&|u| oracles::inv_sinc_pow_even(u, s), n, 0.08);
            let got = alpha.get(n);
            if n == 0 {
                assert!((got - 1.0).abs() < 1e-15);
                continue;
            }
            assert!(
                ((got - fd) / fd).abs() <= 1e-6,
                "alpha_{n}({s}): recurrence {got} vs finite differences {fd}"
            );
        }
    }
}

#[test]
fn lemma_identity_brute_force() {
    // LHS sum of the digamma convolution against the closed form, for
    // every m <= 10 and a spread of z values (including negative ones).
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    let mut zs: Vec<f64> = (0..17).map(|_| rng.gen_range(0.05..4.0)).collect();
    zs.extend_from_slice(&[0.5, -0.5, -1.5000001]);
    for m in 1..=10u32 {
        for &z in &zs {
            let mut lhs = 0.0f64;
            let mut fact_k = 1.0f64;
            for k in 0..=m {
                if k > 0 {
                    fact_k *= f64::from(k);
                }
                let mut fact_mk = 1.0f64;
                for i in 1..=(m - k) {
                    fact_mk *= f64::from(i);
                }
                let weight = pochhammer(z, k) * pochhammer(-z, m - k) / (fact_k * fact_mk);
                let psi_term =
                    digamma(f64::from(k) + z).unwrap() - digamma(f64::from(k) + 1.0).unwrap();
                lhs += weight * psi_term;
            }
            let rhs = lemma_identity_rhs(m, z).unwrap();
            assert!(
                (lhs - rhs).abs() <= 1e-11,
                "m={m}, z={z}: LHS {lhs} vs RHS {rhs}"
            );
        }
    }
}

#[test]
fn lemma_identity_frozen_examples() {
    // m=1, z=1/2: the 2-term sum is
    // (-z)_1 [psi(1/2)-psi(1)] + (z)_1 [psi(3/2)-psi(2)] = 1/2.
    let direct = pochhammer(-0.5, 1) * (digamma(0.5).unwrap() - digamma(1.0).unwrap())
        + pochhammer(0.5, 1) * (digamma(1.5).unwrap() - digamma(2.0).unwrap());
    assert!((direct - 0.5).abs() <= 1e-13);
    assert!((lemma_identity_rhs(1, 0.5).unwrap() - 0.5).abs() < 1e-15);
    assert_eq!(lemma_identity_rhs(2, 1.0).unwrap(), 0.0);
    let rhs = lemma_identity_rhs(5, 0.3).unwrap();
    let mut lhs = 0.0;
    for k in 0..=5u32 {
        let mut fk = 1.0;
        for i in 1..=k {
            fk *= f64::from(i);
        }
        let mut fmk = 1.0;
        for i in 1..=(5 - k) {
            fmk *= f64::from(i);
        }
        lhs += pochhammer(0.3, k) * pochhammer(-0.3, 5 - k) / (fk * fmk)
            * (digamma(f64::from(k) + 0.3).unwrap() - digamma(f64::from(k) + 1.0).unwrap());
    }
    assert!((lhs - rhs).abs() <= 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prop_digamma_recurrence(x in 0.1f64..50.0) {
        let defect = digamma(x + 1.0).unwrap() - digamma(x).unwrap() - 1.0 / x;
        prop_assert!(defect.abs() <= 1e-12);
    }

    #[test]
    fn prop_hurwitz_shift(s in -3.0f64..10.0, a in 0.5f64..5.0) {
        prop_assume!((s - 1.0).abs() > 1e-3);
        let defect = hurwitz_zeta(s, a).unwrap() - a.powf(-s) - hurwitz_zeta(s, a + 1.0).unwrap();
        prop_assert!(defect.abs() <= 1e-11);
    }

    #[test]
    fn prop_2f1_at_zero_is_one(a in -4.0f64..4.0, b in -4.0f64..4.0, c in 0.3f64..5.0) {
        prop_assert_eq!(gauss_2f1(a, b, c, 0.0).unwrap(), 1.0);
    }
}
