//! Generalized Bernoulli polynomials B_{2n}^{(2 rho)}(rho) and the derived
//! coefficients alpha_n(s) of (sin(pi z)/(pi z))^{-s} = sum alpha_n(s) z^{2n}.

use crate::numeric::binomial;
use serde::Serialize;

/// Bernoulli numbers B_{2m} for m = 0..=10.
const BERNOULLI_EVEN: [f64; 11] = [
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// Taylor coefficients alpha_0(s) .. alpha_p(s) of the inverse sinc power.
#[derive(Clone, Debug, Serialize)]
pub struct AlphaCoefficients {
    pub s: f64,
    pub values: Vec<f64>,
}

impl AlphaCoefficients {
    pub fn get(&self, n: usize) -> f64 {
        self.values[n]
    }
}

/// alpha_n(s) = (-1)^n B_{2n}^{(s)}(s/2) (2 pi)^{2n} / (2n)! for n = 0..=p,
/// with the generalized Bernoulli values from the recurrence
/// B_{2n}^{(2rho)}(rho) = -2 rho sum_{m=0}^{n-1} C(2n-1, 2m+1)
///   B_{2m+2}/(2m+2) B_{2n-2-2m}^{(2rho)}(rho), seeded by B_0 = 1.
pub fn gen_bernoulli_alpha(s: f64, p: usize) -> AlphaCoefficients {
    assert!(
        p + 1 <= BERNOULLI_EVEN.len(),
        "alpha coefficients available only through n = {}",
        BERNOULLI_EVEN.len() - 1
    );
    let rho = s / 2.0;
    let mut gen_b = vec![0.0f64; p + 1];
    gen_b[0] = 1.0;
    for n in 1..=p {
        let mut acc = 0.0;
        for m in 0..n {
            acc += binomial(2 * n as u32 - 1, 2 * m as u32 + 1)
                * BERNOULLI_EVEN[m + 1]
                / (2.0 * m as f64 + 2.0)
                * gen_b[n - 1 - m];
        }
        gen_b[n] = -2.0 * rho * acc;
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut values = Vec::with_capacity(p + 1);
    let mut sign = 1.0;
    let mut pow = 1.0; // (2 pi)^{2n}
    let mut fact = 1.0; // (2n)!
    for (n, b) in gen_b.iter().enumerate() {
        if n > 0 {
            sign = -sign;
            pow *= two_pi * two_pi;
            fact *= (2 * n - 1) as f64 * (2 * n) as f64;
        }
        values.push(sign * b * pow / fact);
    }
    AlphaCoefficients { s, values }
}
