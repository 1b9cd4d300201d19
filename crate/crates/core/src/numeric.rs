//! Small numeric utilities shared across the crate.

/// Neumaier-compensated accumulator. Keeps pair sums reproducible to well
/// below the documented 1e-12 relative tolerance regardless of magnitude
/// ordering.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Sums a slice in index order with compensation.
pub(crate) fn compensated_total(xs: &[f64]) -> f64 {
    let mut acc = CompensatedSum::new();
    for &x in xs {
        acc.add(x);
    }
    acc.value()
}

/// Neville extrapolation of `(x_i, y_i)` samples to `x = 0`.
///
/// Used for Richardson limits: pass `x_i = h_i` (or `h_i^2` for even error
/// expansions) together with the sampled values.
pub(crate) fn neville_to_zero(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut tab = ys.to_vec();
    for level in 1..n {
        for i in 0..n - level {
            let x0 = xs[i];
            let x1 = xs[i + level];
            tab[i] = (x0 * tab[i + 1] - x1 * tab[i]) / (x0 - x1);
        }
    }
    tab[0]
}

/// Binomial coefficient as f64; exact for the small arguments used here.
pub(crate) fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * f64::from(n - i) / f64::from(i + 1);
    }
    acc.round()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensation_beats_naive_summation() {
        let xs = vec![1e16, 1.0, -1e16, 1.0];
        assert_eq!(compensated_total(&xs), 2.0);
    }

    #[test]
    fn neville_extrapolates_quadratic_error() {
        // y(h) = 3 + 2 h^2 - h^4 sampled at a few h, extrapolated in h^2.
        let hs = [0.4f64, 0.2, 0.1, 0.05];
        let xs: Vec<f64> = hs.iter().map(|h| h * h).collect();
        let ys: Vec<f64> = hs.iter().map(|h| 3.0 + 2.0 * h * h - h.powi(4)).collect();
        let v = neville_to_zero(&xs, &ys);
        assert!((v - 3.0).abs() < 1e-12);
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), 10.0);
        assert_eq!(binomial(9, 0), 1.0);
        assert_eq!(binomial(15, 7), 6435.0);
    }
}
