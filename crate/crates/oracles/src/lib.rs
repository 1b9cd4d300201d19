//! Reference computations kept deliberately independent of the main crate:
//! brute-force series, lattice double sums, adaptive quadrature and
//! finite-difference Taylor coefficients. Test suites compare the fast
//! implementations against these.

/// Adaptive Simpson quadrature to an absolute tolerance.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
    }
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        m: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (left, lm, flm) = simpson(f, a, fa, m, fm);
        let (right, rm, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        recurse(f, a, fa, m, fm, left, lm, flm, tol / 2.0, depth - 1)
            + recurse(f, m, fm, b, fb, right, rm, frm, tol / 2.0, depth - 1)
    }
    let fa = f(a);
    let fb = f(b);
    let (whole, m, fm) = simpson(f, a, fa, b, fb);
    recurse(f, a, fa, b, fb, whole, m, fm, tol, 48)
}

/// Digamma from the defining series psi(x) = -gamma + sum_{k>=0}
/// [1/(k+1) - 1/(k+x)], with an Euler–Maclaurin tail after K terms.
/// Negative non-integer arguments go through reflection.
pub fn digamma_series(x: f64) -> f64 {
    const EULER_GAMMA: f64 = 0.5772156649015328606;
    if x < 0.0 {
        return digamma_series(1.0 - x) - std::f64::consts::PI / (std::f64::consts::PI * x).tan();
    }
    let k_max = 400usize;
    let mut sum = 0.0f64;
    for k in 0..k_max {
        let kf = k as f64;
        sum += 1.0 / (kf + 1.0) - 1.0 / (kf + x);
    }
    // Tail of f(k) = 1/(k+1) - 1/(k+x) from K to infinity:
    // integral + f(K)/2 - f'(K)/12 + f'''(K)/720.
    let kf = k_max as f64;
    let integral = ((kf + x) / (kf + 1.0)).ln();
    let f0 = 1.0 / (kf + 1.0) - 1.0 / (kf + x);
    let f1 = -1.0 / (kf + 1.0).powi(2) + 1.0 / (kf + x).powi(2);
    let f3 = -6.0 / (kf + 1.0).powi(4) + 6.0 / (kf + x).powi(4);
    sum += integral + 0.5 * f0 - f1 / 12.0 + f3 / 720.0;
    -EULER_GAMMA + sum
}

/// Dirichlet L_{-3}(s) by direct summation of the character series in
/// consecutive (3k+1, 3k+2) pairs, valid for s > 1. The pair tail decays
/// only like k^{-s-1}, so after `k_max` pairs the remainder is replaced by
/// its Euler–Maclaurin estimate (integral + half-term + first derivative
/// correction), which brings the truncation error below `tol`.
pub fn l3_direct_series(s: f64, tol: f64) -> f64 {
    let mut sum = 0.0f64;
    let pair = |x: f64| (3.0 * x + 1.0).powf(-s) - (3.0 * x + 2.0).powf(-s);
    let mut k = 0u64;
    let k_max = 2_000_000u64;
    loop {
        let p = pair(k as f64);
        // Stop once the EM tail correction itself is reliable to `tol`.
        if p.abs() * (k as f64 / s).max(1.0) < tol * 1e3 || k >= k_max {
            break;
        }
        sum += p;
        k += 1;
    }
    // Tail sum_{j >= k} pair(j) via Euler-Maclaurin.
    let kf = k as f64;
    let integral = ((3.0 * kf + 1.0).powf(1.0 - s) - (3.0 * kf + 2.0).powf(1.0 - s))
        / (3.0 * (s - 1.0));
    let d_pair = -3.0 * s
        * ((3.0 * kf + 1.0).powf(-s - 1.0) - (3.0 * kf + 2.0).powf(-s - 1.0));
    sum + integral + 0.5 * pair(kf) - d_pair / 12.0
}

/// Hexagonal-lattice Epstein zeta by direct double sum:
/// sum over (m, n) != 0 of (m^2 + m n + n^2)^{-s/2}, |m|, |n| <= m_max.
/// Returns (partial sum, rigorous tail bound).
pub fn hex_zeta_double_sum(s: f64, m_max: i64) -> (f64, f64) {
    let mut sum = 0.0f64;
    let p = -s / 2.0;
    for m in -m_max..=m_max {
        for n in -m_max..=m_max {
            if m == 0 && n == 0 {
                continue;
            }
            let q = (m * m + m * n + n * n) as f64;
            sum += q.powf(p);
        }
    }
    // Points with max(|m|, |n|) = k number at most 8k and each satisfies
    // m^2 + mn + n^2 >= (3/4) k^2, so the tail beyond m_max is below
    // 8 (4/3)^{s/2} sum_{k > M} k^{1-s} <= 8 (4/3)^{s/2} M^{2-s}/(s-2).
    let m = m_max as f64;
    let tail = 8.0 * (4.0f64 / 3.0).powf(s / 2.0) * m.powf(2.0 - s) / (s - 2.0);
    (sum, tail)
}

/// Even-function finite differences: the n-th Taylor coefficient of F
/// about 0 (i.e. F^(n)(0)/n!) from symmetric divided differences with
/// Richardson extrapolation over shrinking spacings.
pub fn nth_taylor_coeff_fd(f: &dyn Fn(f64) -> f64, n: usize, h0: f64) -> f64 {
    fn divided_difference(f: &dyn Fn(f64) -> f64, nodes: &[f64]) -> f64 {
        let mut vals: Vec<f64> = nodes.iter().map(|&u| f(u)).collect();
        let m = nodes.len();
        for level in 1..m {
            for i in 0..m - level {
                vals[i] = (vals[i + 1] - vals[i]) / (nodes[i + level] - nodes[i]);
            }
        }
        vals[0]
    }
    let levels = 4;
    let mut xs = Vec::with_capacity(levels);
    let mut ys = Vec::with_capacity(levels);
    let mut h = h0;
    for _ in 0..levels {
        let nodes: Vec<f64> = (0..=n).map(|j| (j as f64 - n as f64 / 2.0) * h).collect();
        xs.push(h * h);
        ys.push(divided_difference(f, &nodes));
        h *= 0.5;
    }
    // Neville to h^2 -> 0.
    let m = xs.len();
    let mut tab = ys;
    for level in 1..m {
        for i in 0..m - level {
            tab[i] = (xs[i] * tab[i + 1] - xs[i + level] * tab[i]) / (xs[i] - xs[i + level]);
        }
    }
    tab[0]
}

/// (sin(pi z)/(pi z))^{-s} as a function of u = z^2, extended real
/// analytically to u < 0 through sinh.
pub fn inv_sinc_pow_even(u: f64, s: f64) -> f64 {
    let sinc = if u == 0.0 {
        1.0
    } else if u > 0.0 {
        let z = std::f64::consts::PI * u.sqrt();
        z.sin() / z
    } else {
        let z = std::f64::consts::PI * (-u).sqrt();
        z.sinh() / z
    };
    sinc.powf(-s)
}

/// gamma_1(a) from the closed-form Euler–Maclaurin expansion of
/// d/ds [zeta(s,a) - 1/(s-1)] at s = 1 (independent of any windowed
/// extrapolation): with w = a + M, L = log w, H_m the harmonic numbers,
/// gamma_1(a) = sum_{k<M} log(k+a)/(k+a) - L^2/2 + L/(2w)
///   - sum_j B_{2j}/(2j) (H_{2j-1} - L) w^{-2j}.
pub fn gamma1_em_closed(a: f64) -> f64 {
    const B_EVEN: [f64; 8] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
    ];
    let m = 40usize;
    let mut sum = 0.0f64;
    for k in 0..m {
        let base = k as f64 + a;
        sum += base.ln() / base;
    }
    let w = a + m as f64;
    let l = w.ln();
    let mut total = sum - l * l / 2.0 + l / (2.0 * w);
    let mut wpow = 1.0f64;
    for (j, b) in B_EVEN.iter().enumerate() {
        let two_j = 2 * (j + 1);
        let harmonic: f64 = (1..two_j).map(|i| 1.0 / i as f64).sum();
        wpow *= 1.0 / (w * w);
        total -= b / two_j as f64 * (harmonic - l) * wpow;
    }
    total
}

/// Least-squares slope of y against x.
pub fn ls_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let cov: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    cov / var
}

/// Unit-norm icosahedron vertices: cyclic permutations of
/// (0, ±1, ±phi)/sqrt(1 + phi^2).
pub fn icosahedron() -> Vec<[f64; 3]> {
    let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
    let norm = (1.0 + phi * phi).sqrt();
    let mut pts = Vec::with_capacity(12);
    for &s1 in &[1.0f64, -1.0] {
        for &s2 in &[1.0f64, -1.0] {
            pts.push([0.0, s1, s2 * phi]);
            pts.push([s1, s2 * phi, 0.0]);
            pts.push([s2 * phi, 0.0, s1]);
        }
    }
    for p in &mut pts {
        for c in p.iter_mut() {
            *c /= norm;
        }
    }
    pts
}
