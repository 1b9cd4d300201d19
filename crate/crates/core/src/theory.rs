//! Closed-form continuum energies, bounds and conjectured next-order
//! coefficients for spheres, with validity-domain metadata.
//!
//! Every quantity is evaluated from the special-function layer; no decimal
//! constants are hard-coded except lattice packing densities. Evaluation
//! within 1e-6 of a pole returns [`Error::Pole`] carrying the residue so
//! that limit machinery can branch explicitly instead of receiving a huge
//! float.

use crate::error::{Error, Result};
use crate::numeric::neville_to_zero;
use crate::specfun::{
    digamma, epstein_hex, epstein_hex_deriv0, gamma, gauss_2f1, ln_gamma, pochhammer,
    stieltjes_gamma1, EULER_GAMMA, HEX_COVOLUME,
};
use serde::{Deserialize, Serialize};

const SQRT_PI: f64 = 1.7724538509055160273;

/// Dimension of the sphere `S^d` (the ambient space is `R^{d+1}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereDim(u32);

impl SphereDim {
    pub fn new(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::domain("sphere dimension must be >= 1"));
        }
        Ok(SphereDim(d))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn ambient(self) -> usize {
        self.0 as usize + 1
    }

    fn f(self) -> f64 {
        f64::from(self.0)
    }
}

impl std::fmt::Display for SphereDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S^{}", self.0)
    }
}

/// Surface area omega_d of the unit sphere S^d in R^{d+1}.
pub fn sphere_area(d: u32) -> f64 {
    let df = f64::from(d);
    2.0 * std::f64::consts::PI.powf((df + 1.0) / 2.0) / gamma((df + 1.0) / 2.0)
}

/// Volume of the unit ball B^d in R^d.
pub fn ball_volume(d: u32) -> f64 {
    let df = f64::from(d);
    std::f64::consts::PI.powf(df / 2.0) / gamma(1.0 + df / 2.0)
}

/// F_d = H_d(B^d) / H_d(S^d) = omega_{d-1} / (d omega_d).
pub fn measure_ratio(d: SphereDim) -> f64 {
    ball_volume(d.get()) / sphere_area(d.get())
}

/// omega_{d-1}/omega_d, the weight in the Funk–Hecke integrals.
fn omega_ratio(d: SphereDim) -> f64 {
    gamma((d.f() + 1.0) / 2.0) / (SQRT_PI * gamma(d.f() / 2.0))
}

/// Continuum logarithmic energy of S^d:
/// V_log = log(1/2) + [psi(d) - psi(d/2)] / 2.
pub fn v_log_sphere(d: SphereDim) -> f64 {
    let df = d.f();
    let psi_d = digamma(df).expect("d >= 1");
    let psi_half = digamma(df / 2.0).expect("d >= 1");
    -std::f64::consts::LN_2 + 0.5 * (psi_d - psi_half)
}

/// Residue of V_s(S^d) at the simple pole s = d + 2k.
///
/// For even d only k <= d/2 - 1 are poles; beyond that the residue is 0.
pub fn v_s_residue(d: SphereDim, k: u32) -> f64 {
    let df = d.f();
    if d.get() % 2 == 0 && k >= d.get() / 2 {
        return 0.0;
    }
    let mut k_fact = 1.0;
    for i in 1..=k {
        k_fact *= f64::from(i);
    }
    let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
    sign * 2.0f64.powi(-2 * (k as i32)) * gamma((df + 1.0) / 2.0)
        / (SQRT_PI * k_fact * gamma(df / 2.0 - f64::from(k)))
}

fn v_s_pole_index(s: f64, d: SphereDim) -> Option<u32> {
    let t = (s - d.f()) / 2.0;
    if t < -0.25 {
        return None;
    }
    let k = t.round();
    if k < 0.0 || (t - k).abs() >= 5e-7 {
        return None;
    }
    let k = k as u32;
    if d.get() % 2 == 0 && k >= d.get() / 2 {
        return None; // cancelled by the denominator gamma; not a pole
    }
    Some(k)
}

pub(crate) fn v_s_sphere_unguarded(s: f64, d: SphereDim) -> f64 {
    let df = d.f();
    let lead = 2.0f64.powf(df - s - 1.0) * gamma((df + 1.0) / 2.0) / SQRT_PI;
    if d.get() % 2 == 0 {
        // Gamma((d-s)/2)/Gamma(d-s/2) = 1/((d-s)/2)_{d/2}, finite rational in s.
        lead / pochhammer((df - s) / 2.0, d.get() / 2)
    } else {
        lead * gamma((df - s) / 2.0) / gamma(df - s / 2.0)
    }
}

/// Continuum Riesz s-energy of S^d and its meromorphic extension:
/// V_s = 2^{d-s-1} Gamma((d+1)/2) Gamma((d-s)/2) / (sqrt(pi) Gamma(d-s/2)).
pub fn v_s_sphere(s: f64, d: SphereDim) -> Result<f64> {
    if !s.is_finite() {
        return Err(Error::domain("v_s_sphere: non-finite s"));
    }
    if let Some(k) = v_s_pole_index(s, d) {
        return Err(Error::pole(
            format!("V_s({d}) pole at s = d + 2k, k = {k} (anchor: v-s-sphere)"),
            d.f() + 2.0 * f64::from(k),
            Some(v_s_residue(d, k)),
        ));
    }
    Ok(v_s_sphere_unguarded(s, d))
}

/// Continuum Riesz s-energy of the unit circle and its continuation
/// (poles at odd positive integers).
pub fn v_s_circle(s: f64) -> Result<f64> {
    if !s.is_finite() {
        return Err(Error::domain("v_s_circle: non-finite s"));
    }
    let d = SphereDim(1);
    if let Some(k) = v_s_pole_index(s, d) {
        return Err(Error::pole(
            format!("V_s(S^1) pole at s = {} (anchor: v-s-circle)", 1 + 2 * k),
            1.0 + 2.0 * f64::from(k),
            Some(v_s_residue(d, k)),
        ));
    }
    Ok(2.0f64.powf(-s) * gamma((1.0 - s) / 2.0) / (SQRT_PI * gamma(1.0 - s / 2.0)))
}

/// Normalized surface measure of the spherical cap of chord radius rho:
/// sigma_d(C(x, rho)) = (1/d)(omega_{d-1}/omega_d) rho^d
///   2F1(1 - d/2, d/2; 1 + d/2; rho^2/4).
pub fn cap_measure(d: SphereDim, rho: f64) -> Result<f64> {
    if !(rho > 0.0 && rho <= 2.0) {
        return Err(Error::domain(format!(
            "cap_measure: rho = {rho} outside (0, 2] (anchor: cap-measure)"
        )));
    }
    let df = d.f();
    let hyp = gauss_2f1(1.0 - df / 2.0, df / 2.0, 1.0 + df / 2.0, rho * rho / 4.0)?;
    Ok(omega_ratio(d) / df * rho.powf(df) * hyp)
}

/// Exterior integral of the |x-y|^{-d} kernel over the cap complement.
pub fn exterior_integral_d(d: SphereDim, rho: f64) -> Result<f64> {
    if !(rho > 0.0 && rho < 2.0) {
        return Err(Error::domain(format!(
            "exterior_integral_d: rho = {rho} outside (0, 2) (anchor: exterior-log-kernel)"
        )));
    }
    let df = d.f();
    let w = omega_ratio(d);
    let psi_term = digamma(df / 2.0)? - digamma(1.0)? - 2.0 * std::f64::consts::LN_2;
    // sum_{m>=1} (1-d/2)_m / (m! m) (rho/2)^{2m}; finite for even d.
    let x = rho * rho / 4.0;
    let mut series = 0.0f64;
    let mut poch_over_fact = 1.0f64; // (1-d/2)_m / m!
    let mut xp = 1.0f64;
    for m in 1..20_000_000u64 {
        let mf = m as f64;
        poch_over_fact *= (1.0 - df / 2.0 + mf - 1.0) / mf;
        xp *= x;
        let term = poch_over_fact / mf * xp;
        series += term;
        if term == 0.0 || term.abs() < 1e-16 {
            break;
        }
    }
    Ok(w * (-rho.ln()) - 0.5 * w * psi_term - 0.5 * w * series)
}

/// Exterior integral of the |x-y|^{-s} kernel (s > d) over the cap complement.
pub fn exterior_integral_s(s: f64, d: SphereDim, rho: f64) -> Result<f64> {
    if s <= d.f() {
        return Err(Error::domain(format!(
            "exterior_integral_s: s = {s} must exceed d = {d} (anchor: exterior-riesz-kernel)"
        )));
    }
    let half = (s - d.f()) / 2.0;
    if (half - half.round()).abs() < 1e-9 {
        return Err(Error::unsupported(format!(
            "exterior_integral_s: (s-d)/2 = {half} integer is excluded"
        )));
    }
    if !(rho > 0.0 && rho < 2.0) {
        return Err(Error::domain(format!(
            "exterior_integral_s: rho = {rho} outside (0, 2)"
        )));
    }
    let df = d.f();
    let v = v_s_sphere(s, d)?;
    let hyp = gauss_2f1(1.0 - df / 2.0, (df - s) / 2.0, 1.0 - half, rho * rho / 4.0)?;
    Ok(v + 2.0f64.powf(df - s) / (s - df) * omega_ratio(d) * (rho / 2.0).powf(df - s) * hyp)
}

/// Lower-bound constant for the hypersingular leading term:
/// A_{s,d} = d/(s-d) [ (1/2) Gamma((d+1)/2) Gamma(1+(s-d)/2)
///   / (sqrt(pi) Gamma(1+s/2)) ]^{s/d}.
pub fn hypersing_lower_a(s: f64, d: SphereDim) -> Result<f64> {
    let df = d.f();
    if s <= df {
        return Err(Error::domain(format!(
            "hypersing_lower_a: s = {s} must exceed d = {d} (anchor: hypersingular-lower)"
        )));
    }
    let half = (s - df) / 2.0;
    if (half - half.round()).abs() < 1e-9 {
        return Err(Error::unsupported(format!(
            "hypersing_lower_a: (s-d)/2 = {half} integer is excluded"
        )));
    }
    let inner = 0.5 * gamma((df + 1.0) / 2.0) * gamma(1.0 + half) / (SQRT_PI * gamma(1.0 + s / 2.0));
    Ok(df / (s - df) * inner.powf(s / df))
}

/// Upper-bound constant for the hypersingular leading term:
/// U_{s,d} = [F_d / (1 - d/s)]^{s/d}.
pub fn hypersing_upper_u(s: f64, d: SphereDim) -> Result<f64> {
    let df = d.f();
    if s <= df {
        return Err(Error::domain(format!(
            "hypersing_upper_u: s = {s} must exceed d = {d} (anchor: hypersingular-upper)"
        )));
    }
    Ok((measure_ratio(d) / (1.0 - df / s)).powf(s / df))
}

/// Constant c(d) in the second-order lower bound at s = d:
/// c(d) = F_d { 1 - log F_d + d [psi(d/2) - psi(1) - log 2] }.
pub fn boundary_c(d: SphereDim) -> f64 {
    let df = d.f();
    let fd = measure_ratio(d);
    let psi_term = digamma(df / 2.0).expect("d >= 1") - digamma(1.0).expect("const")
        - std::f64::consts::LN_2;
    fd * (1.0 - fd.ln() + df * psi_term)
}

/// The two auxiliary constants of the liminf bound for the d = 2 log
/// remainder.
pub fn rsz_a_b() -> (f64, f64) {
    let two_pi = 2.0 * std::f64::consts::PI;
    let r27 = 27.0f64.sqrt();
    let sp = (two_pi + r27).sqrt();
    let s2 = two_pi.sqrt();
    let a = 2.0 * s2 / r27 * (sp + s2);
    let b = (sp - s2) / (sp + s2);
    (a, b)
}

/// (liminf, limsup) bounds for the d = 2 logarithmic remainder sequence.
pub fn rsz_bounds() -> (f64, f64) {
    let (a, b) = rsz_a_b();
    let lower = -0.5 * (std::f64::consts::FRAC_PI_2 * (1.0 - (-a).exp()).powf(b)).ln();
    let upper = -0.5 * (std::f64::consts::PI * 3.0f64.sqrt() / 2.0).ln()
        + std::f64::consts::PI / (4.0 * 3.0f64.sqrt());
    (lower, upper)
}

/// Explicit positive constant C'_d in the sharpened log-energy lower bound.
pub fn wagner_cprime(d: SphereDim) -> Result<f64> {
    if d.get() < 2 {
        return Err(Error::domain(
            "wagner_cprime is stated for d >= 2 (anchor: log-lower-bound-constant)",
        ));
    }
    let df = d.f();
    let floor_half = d.get() / 2;
    let fh = f64::from(floor_half);
    let mid = gamma(df) * gamma(1.0 + fh - df / 2.0)
        / (2.0f64.powf(df) * gamma(df / 2.0) * gamma(1.0 + fh));
    let harmonic: f64 = (1..=floor_half).map(|r| 1.0 / f64::from(r)).sum();
    Ok(v_log_sphere(d) + mid / df + 0.5 * harmonic)
}

/// Conjectured C_{s,2} = (sqrt(3)/2)^{s/2} zeta_hex(s); pole at s = 2.
pub fn csd_hex(s: f64) -> Result<f64> {
    if (s - 2.0).abs() < 1e-6 {
        return Err(Error::pole(
            "C_{s,2} pole at s = 2 (anchor: hex-lattice-n-term)".to_string(),
            2.0,
            Some(2.0 * std::f64::consts::PI),
        ));
    }
    Ok(HEX_COVOLUME.powf(s / 2.0) * epstein_hex(s)?)
}

/// Conjectured N-term coefficient of the d = 2 logarithmic energy,
/// in closed form: 2 log 2 + (1/2) log(2/3) + 3 log(sqrt(pi)/Gamma(1/3)).
pub fn c_log_2() -> f64 {
    2.0 * std::f64::consts::LN_2 + 0.5 * (2.0f64 / 3.0).ln()
        + 3.0 * (0.5 * std::f64::consts::PI.ln() - ln_gamma(1.0 / 3.0))
}

/// Lattice inputs for the general-d N-term coefficient.
#[derive(Clone, Copy, Debug)]
pub struct LatticeData {
    pub covolume: f64,
    pub zeta_prime_at_zero: f64,
}

/// C_log,d = (1/d) log(omega_d / |Lambda_d|) + zeta'_Lambda(0).
pub fn c_log_d(d: SphereDim, lattice: LatticeData) -> Result<f64> {
    if !(lattice.covolume > 0.0) {
        return Err(Error::domain("c_log_d: covolume must be positive"));
    }
    Ok((sphere_area(d.get()) / lattice.covolume).ln() / d.f() + lattice.zeta_prime_at_zero)
}

/// C_log,2 assembled through the hexagonal Epstein zeta machinery.
pub fn c_log_2_via_lattice() -> Result<f64> {
    c_log_d(
        SphereDim(2),
        LatticeData {
            covolume: HEX_COVOLUME,
            zeta_prime_at_zero: epstein_hex_deriv0()?,
        },
    )
}

/// Finite part A_d of V_s(S^d) at its pole s = d:
/// A_d = -(1/2)(omega_{d-1}/omega_d)(gamma - 2 log 2 + psi(d/2)).
pub fn v_s_finite_part(d: SphereDim) -> f64 {
    let df = d.f();
    -0.5 * omega_ratio(d)
        * (EULER_GAMMA - 2.0 * std::f64::consts::LN_2 + digamma(df / 2.0).expect("d >= 1"))
}

/// Conjectured N^2-term coefficient of the boundary case s = d = 2:
/// C_{2,2} = A_2 + B_2 with A_2 = (log 2)/2 and
/// B_2 = (1/4)[gamma - log(8 sqrt(3) pi)] + (sqrt(3)/(4 pi))[gamma_1(2/3) - gamma_1(1/3)].
pub fn c_dd_2() -> Result<f64> {
    let a2 = v_s_finite_part(SphereDim(2));
    let g_diff = stieltjes_gamma1(2.0 / 3.0)? - stieltjes_gamma1(1.0 / 3.0)?;
    let b2 = 0.25 * (EULER_GAMMA - (8.0 * 3.0f64.sqrt() * std::f64::consts::PI).ln())
        + 3.0f64.sqrt() / (4.0 * std::f64::consts::PI) * g_diff;
    Ok(a2 + b2)
}

/// Densest packing density in R^d; known only for d = 1, 2, 3.
pub fn packing_density(d: SphereDim) -> Result<f64> {
    match d.get() {
        1 => Ok(1.0),
        2 => Ok(std::f64::consts::PI / 12.0f64.sqrt()),
        3 => Ok(std::f64::consts::PI / 18.0f64.sqrt()),
        _ => Err(Error::unsupported(format!(
            "packing density unknown for d = {} (anchor: best-packing)",
            d.get()
        ))),
    }
}

/// Best-packing constant C_inf,d = 2 [Delta_d / H_d(B^d)]^{1/d}.
pub fn best_packing_cinf(d: SphereDim) -> Result<f64> {
    let delta = packing_density(d)?;
    Ok(2.0 * (delta / ball_volume(d.get())).powf(1.0 / d.f()))
}

/// Numeric residue of V_s(S^d) at s = d by two-sided sampling of
/// (s-d) V_s at distances 10^{-4}..10^{-7} and Richardson extrapolation.
pub fn v_s_residue_numeric(d: SphereDim) -> f64 {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for k in 4..=7 {
        let h = 10f64.powi(-k);
        let sp = d.f() + h;
        let sm = d.f() - h;
        let hp = sp - d.f();
        let hm = d.f() - sm;
        let fp = hp * v_s_sphere_unguarded(sp, d);
        let fm = -hm * v_s_sphere_unguarded(sm, d);
        xs.push(h * h);
        ys.push(0.5 * (fp + fm));
    }
    neville_to_zero(&xs, &ys)
}

/// Numeric finite part of V_s(S^d) at s = d, same sampling scheme.
pub fn v_s_finite_part_numeric(d: SphereDim) -> f64 {
    let res = v_s_residue(d, 0);
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for k in 4..=7 {
        let h = 10f64.powi(-k);
        let sp = d.f() + h;
        let sm = d.f() - h;
        let fp = v_s_sphere_unguarded(sp, d) - res / (sp - d.f());
        let fm = v_s_sphere_unguarded(sm, d) - res / (sm - d.f());
        xs.push(h * h);
        ys.push(0.5 * (fp + fm));
    }
    neville_to_zero(&xs, &ys)
}

/// A named constant with its validity domain and formula anchor.
#[derive(Clone, Debug, Serialize)]
pub struct TheoryConstant {
    pub name: String,
    pub value: f64,
    pub domain: String,
    pub anchor: String,
}

fn entry(name: &str, value: f64, domain: &str, anchor: &str) -> TheoryConstant {
    TheoryConstant {
        name: name.to_string(),
        value,
        domain: domain.to_string(),
        anchor: anchor.to_string(),
    }
}

/// Catalog of names accepted by [`lookup`], with the parameters each needs.
pub fn catalog() -> Vec<(&'static str, &'static str)> {
    vec![
        ("C_log_2", ""),
        ("C_log_2_lattice", ""),
        ("C_2_2", ""),
        ("rsz_liminf", ""),
        ("rsz_limsup", ""),
        ("rsz_a", ""),
        ("rsz_b", ""),
        ("zeta_hex_0", ""),
        ("zeta_hex_prime_0", ""),
        ("L3_0", ""),
        ("L3_prime_0", ""),
        ("V_log", "d"),
        ("V_s", "d, s"),
        ("V_s_circle", "s"),
        ("V_s_residue", "d, k"),
        ("A_finite_part", "d"),
        ("wagner_Cprime", "d"),
        ("c_boundary", "d"),
        ("C_s_hex", "s"),
        ("A_hypersing", "d, s"),
        ("U_hypersing", "d, s"),
        ("C_infinity", "d"),
        ("Delta_packing", "d"),
        ("F_ratio", "d"),
        ("omega", "d"),
    ]
}

fn need_d(d: Option<u32>, name: &str) -> Result<SphereDim> {
    SphereDim::new(d.ok_or_else(|| Error::domain(format!("{name} requires --d")))?)
}

fn need_s(s: Option<f64>, name: &str) -> Result<f64> {
    s.ok_or_else(|| Error::domain(format!("{name} requires --s")))
}

/// Evaluate a named constant. `d`, `s`, `k` are consumed as the constant
/// requires (see [`catalog`]).
pub fn lookup(name: &str, d: Option<u32>, s: Option<f64>, k: Option<u32>) -> Result<TheoryConstant> {
    let c = match name {
        "C_log_2" => entry("C_log_2", c_log_2(), "d = 2", "log-sphere-n-term"),
        "C_log_2_lattice" => entry(
            "C_log_2_lattice",
            c_log_2_via_lattice()?,
            "d = 2",
            "log-sphere-n-term",
        ),
        "C_2_2" => entry("C_2_2", c_dd_2()?, "s = d = 2", "boundary-n2-term"),
        "rsz_liminf" => entry("rsz_liminf", rsz_bounds().0, "d = 2, log", "log-remainder-bounds"),
        "rsz_limsup" => entry("rsz_limsup", rsz_bounds().1, "d = 2, log", "log-remainder-bounds"),
        "rsz_a" => entry("rsz_a", rsz_a_b().0, "d = 2, log", "log-remainder-bounds"),
        "rsz_b" => entry("rsz_b", rsz_a_b().1, "d = 2, log", "log-remainder-bounds"),
        "zeta_hex_0" => entry("zeta_hex_0", epstein_hex(0.0)?, "", "hex-zeta-special-values"),
        "zeta_hex_prime_0" => entry(
            "zeta_hex_prime_0",
            epstein_hex_deriv0()?,
            "",
            "hex-zeta-special-values",
        ),
        "L3_0" => entry("L3_0", crate::specfun::dirichlet_l3(0.0)?, "", "hex-zeta-special-values"),
        "L3_prime_0" => entry(
            "L3_prime_0",
            crate::specfun::dirichlet_l3_deriv0()?,
            "",
            "hex-zeta-special-values",
        ),
        "V_log" => {
            let d = need_d(d, name)?;
            entry("V_log", v_log_sphere(d), "d >= 1", "v-log-sphere")
        }
        "V_s" => {
            let d = need_d(d, name)?;
            let s = need_s(s, name)?;
            entry("V_s", v_s_sphere(s, d)?, "s != d + 2k", "v-s-sphere")
        }
        "V_s_circle" => {
            let s = need_s(s, name)?;
            entry("V_s_circle", v_s_circle(s)?, "s != 1, 3, 5, ...", "v-s-circle")
        }
        "V_s_residue" => {
            let d = need_d(d, name)?;
            let k = k.ok_or_else(|| Error::domain("V_s_residue requires --k"))?;
            entry("V_s_residue", v_s_residue(d, k), "k >= 0", "v-s-residue")
        }
        "A_finite_part" => {
            let d = need_d(d, name)?;
            entry("A_finite_part", v_s_finite_part(d), "d >= 1", "v-s-finite-part")
        }
        "wagner_Cprime" => {
            let d = need_d(d, name)?;
            entry("wagner_Cprime", wagner_cprime(d)?, "d >= 2", "log-lower-bound-constant")
        }
        "c_boundary" => {
            let d = need_d(d, name)?;
            entry("c_boundary", boundary_c(d), "d >= 1", "boundary-second-term")
        }
        "C_s_hex" => {
            let s = need_s(s, name)?;
            entry("C_s_hex", csd_hex(s)?, "s != 2", "hex-lattice-n-term")
        }
        "A_hypersing" => {
            let d = need_d(d, name)?;
            let s = need_s(s, name)?;
            entry(
                "A_hypersing",
                hypersing_lower_a(s, d)?,
                "s > d, (s-d)/2 not integer",
                "hypersingular-lower",
            )
        }
        "U_hypersing" => {
            let d = need_d(d, name)?;
            let s = need_s(s, name)?;
            entry("U_hypersing", hypersing_upper_u(s, d)?, "s > d", "hypersingular-upper")
        }
        "C_infinity" => {
            let d = need_d(d, name)?;
            entry("C_infinity", best_packing_cinf(d)?, "d in {1,2,3}", "best-packing")
        }
        "Delta_packing" => {
            let d = need_d(d, name)?;
            entry("Delta_packing", packing_density(d)?, "d in {1,2,3}", "packing-density")
        }
        "F_ratio" => {
            let d = need_d(d, name)?;
            entry("F_ratio", measure_ratio(d), "d >= 1", "ball-sphere-ratio")
        }
        "omega" => {
            let d = need_d(d, name)?;
            entry("omega", sphere_area(d.get()), "d >= 1", "sphere-area")
        }
        other => {
            return Err(Error::domain(format!(
                "unknown constant '{other}'; see `constants --list`"
            )))
        }
    };
    Ok(c)
}
