//! Discrete energies of spherical point configurations, their Riemannian
//! gradients, exact circle energies and the circle asymptotic expansion.
//!
//! Pair sums are decomposed by row (`j` against all `k > j`), each row
//! accumulated with compensation and the row partials reduced in index
//! order. The decomposition is what fixes the floating-point result, so
//! the parallel and sequential paths return bitwise identical energies.

use crate::error::{Error, Result};
use crate::numeric::{compensated_total, CompensatedSum};
use crate::specfun::{gen_bernoulli_alpha, hex_shells, riemann_zeta};
use crate::theory::v_s_circle;
use serde::{Deserialize, Serialize};
use std::io::{BufRead, Write};
use std::path::Path;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Rows below this count are not worth a parallel dispatch.
const PAR_THRESHOLD: usize = 96;

const UNIT_NORM_TOL: f64 = 1e-12;

/// Energy kernel selector: logarithmic, or Riesz with exponent `s`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum EnergyKind {
    Log,
    Riesz { s: f64 },
}

impl EnergyKind {
    /// Riesz kind with validation: s > -2 and s != 0 (s = 0 has the closed
    /// form N^2 - N and is never iterated over).
    pub fn riesz(s: f64) -> Result<Self> {
        if !s.is_finite() || s <= -2.0 {
            return Err(Error::domain(format!(
                "Riesz exponent s = {s} must be finite and > -2"
            )));
        }
        if s == 0.0 {
            return Err(Error::domain(
                "Riesz s = 0 is the constant N^2 - N; use the closed form",
            ));
        }
        Ok(EnergyKind::Riesz { s })
    }

    /// True when the optimal configuration maximizes rather than minimizes.
    pub fn is_maximizing(self) -> bool {
        matches!(self, EnergyKind::Riesz { s } if s < 0.0)
    }
}

impl std::fmt::Display for EnergyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EnergyKind::Log => write!(f, "log"),
            EnergyKind::Riesz { s } => write!(f, "riesz(s={s})"),
        }
    }
}

/// N unit vectors in R^{d+1}, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Configuration {
    d: usize,
    n: usize,
    coords: Vec<f64>,
}

impl Configuration {
    /// Builds a configuration from flat coordinates (`n` rows of `d+1`
    /// entries); every row must already lie on the sphere to 1e-12.
    pub fn new(d: usize, coords: Vec<f64>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidConfiguration("dimension d must be >= 1".into()));
        }
        let w = d + 1;
        if coords.is_empty() || coords.len() % w != 0 {
            return Err(Error::InvalidConfiguration(format!(
                "coordinate count {} is not a multiple of d+1 = {w}",
                coords.len()
            )));
        }
        let n = coords.len() / w;
        if n < 2 {
            return Err(Error::InvalidConfiguration(format!(
                "need at least 2 points, got {n}"
            )));
        }
        for (i, row) in coords.chunks_exact(w).enumerate() {
            let norm2: f64 = row.iter().map(|x| x * x).sum();
            if !norm2.is_finite() {
                return Err(Error::InvalidConfiguration(format!(
                    "point {i} has non-finite coordinates"
                )));
            }
            if (norm2.sqrt() - 1.0).abs() > UNIT_NORM_TOL {
                return Err(Error::InvalidConfiguration(format!(
                    "point {i} is off the sphere: |x| - 1 = {:e}",
                    norm2.sqrt() - 1.0
                )));
            }
        }
        Ok(Configuration { d, n, coords })
    }

    /// Builds from possibly unnormalized rows, projecting each to the sphere.
    pub fn from_unnormalized(d: usize, mut coords: Vec<f64>) -> Result<Self> {
        let w = d + 1;
        for row in coords.chunks_exact_mut(w) {
            let norm: f64 = row.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm == 0.0 || !norm.is_finite() {
                return Err(Error::InvalidConfiguration(
                    "cannot normalize a zero or non-finite row".into(),
                ));
            }
            for x in row {
                *x /= norm;
            }
        }
        Configuration::new(d, coords)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false // n >= 2 by construction
    }

    /// Sphere dimension d.
    pub fn dim(&self) -> usize {
        self.d
    }

    /// Ambient dimension d + 1.
    pub fn ambient_dim(&self) -> usize {
        self.d + 1
    }

    pub fn point(&self, i: usize) -> &[f64] {
        let w = self.d + 1;
        &self.coords[i * w..(i + 1) * w]
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Smallest pairwise distance.
    pub fn min_distance(&self) -> f64 {
        let mut best = f64::INFINITY;
        for j in 0..self.n {
            for k in (j + 1)..self.n {
                best = best.min(self.dist(j, k));
            }
        }
        best
    }

    #[inline]
    fn dist2(&self, j: usize, k: usize) -> f64 {
        let w = self.d + 1;
        let a = &self.coords[j * w..j * w + w];
        let b = &self.coords[k * w..k * w + w];
        let mut acc = 0.0;
        for i in 0..w {
            let t = a[i] - b[i];
            acc += t * t;
        }
        acc
    }

    fn dist(&self, j: usize, k: usize) -> f64 {
        self.dist2(j, k).sqrt()
    }

    /// Plain-text serialization: first line "d N", then N rows of d+1 reals.
    pub fn write_to(&self, w: &mut impl Write) -> Result<()> {
        writeln!(w, "{} {}", self.d, self.n)?;
        let width = self.d + 1;
        for row in self.coords.chunks_exact(width) {
            let line: Vec<String> = row.iter().map(|x| format!("{x}")).collect();
            writeln!(w, "{}", line.join(" "))?;
        }
        Ok(())
    }

    pub fn write_to_path(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
        self.write_to(&mut f)
    }

    pub fn read_from(r: impl BufRead) -> Result<Self> {
        let mut lines = r.lines().enumerate();
        let (d, n) = loop {
            let (idx, line) = lines
                .next()
                .ok_or_else(|| Error::Parse { line: 1, msg: "empty configuration file".into() })?;
            let line = line?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let d: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse { line: idx + 1, msg: "expected 'd N' header".into() })?;
            let n: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse { line: idx + 1, msg: "expected 'd N' header".into() })?;
            break (d, n);
        };
        let mut coords = Vec::with_capacity(n * (d + 1));
        let mut rows = 0usize;
        for (idx, line) in lines {
            let line = line?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row: std::result::Result<Vec<f64>, _> =
                line.split_whitespace().map(|t| t.parse::<f64>()).collect();
            let row = row.map_err(|e| Error::Parse {
                line: idx + 1,
                msg: format!("bad coordinate: {e}"),
            })?;
            if row.len() != d + 1 {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("expected {} coordinates, got {}", d + 1, row.len()),
                });
            }
            coords.extend_from_slice(&row);
            rows += 1;
        }
        if rows != n {
            return Err(Error::Parse {
                line: 1,
                msg: format!("header announced {n} points but file has {rows}"),
            });
        }
        Configuration::new(d, coords)
    }

    pub fn read_from_path(path: impl AsRef<Path>) -> Result<Self> {
        Self::read_from(std::io::BufReader::new(std::fs::File::open(path)?))
    }
}

fn check_separated(c: &Configuration) -> Result<()> {
    for j in 0..c.len() {
        for k in (j + 1)..c.len() {
            if c.dist2(j, k) == 0.0 {
                return Err(Error::SingularConfiguration { i: j, j: k });
            }
        }
    }
    Ok(())
}

fn map_rows<T, F>(n: usize, parallel: bool, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel && n >= PAR_THRESHOLD {
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    let _ = parallel;
    (0..n).map(f).collect()
}

/// Row partial sum over k > j of `kernel(r^2)`.
fn row_sum<F: Fn(f64) -> f64>(c: &Configuration, j: usize, kernel: &F) -> f64 {
    let mut acc = CompensatedSum::new();
    for k in (j + 1)..c.len() {
        acc.add(kernel(c.dist2(j, k)));
    }
    acc.value()
}

fn pair_energy<F>(c: &Configuration, parallel: bool, kernel: F) -> f64
where
    F: Fn(f64) -> f64 + Sync + Send,
{
    let rows = map_rows(c.len(), parallel, |j| row_sum(c, j, &kernel));
    2.0 * compensated_total(&rows)
}

fn riesz_energy_impl(c: &Configuration, s: f64, parallel: bool) -> Result<f64> {
    if !s.is_finite() || s <= -2.0 {
        return Err(Error::domain(format!("riesz_energy: s = {s} out of range (s > -2)")));
    }
    if s == 0.0 {
        // Closed form, never evaluated through the kernel.
        let n = c.len() as f64;
        return Ok(n * n - n);
    }
    if s > 0.0 {
        check_separated(c)?;
    }
    // Kernel in the squared distance; special-case the cheap exponents.
    let e = if s == 1.0 {
        pair_energy(c, parallel, |r2| 1.0 / r2.sqrt())
    } else if s == 2.0 {
        pair_energy(c, parallel, |r2| 1.0 / r2)
    } else if s == 3.0 {
        pair_energy(c, parallel, |r2| 1.0 / (r2 * r2.sqrt()))
    } else if s == 4.0 {
        pair_energy(c, parallel, |r2| 1.0 / (r2 * r2))
    } else {
        let p = -s / 2.0;
        pair_energy(c, parallel, move |r2| r2.powf(p))
    };
    Ok(e)
}

fn log_energy_impl(c: &Configuration, parallel: bool) -> Result<f64> {
    check_separated(c)?;
    // log(1/r) = -(1/2) ln(r^2)
    Ok(pair_energy(c, parallel, |r2| -0.5 * r2.ln()))
}

/// Riesz s-energy sum_{j != k} |x_j - x_k|^{-s} (s = 0 returns N^2 - N).
pub fn riesz_energy(c: &Configuration, s: f64) -> Result<f64> {
    riesz_energy_impl(c, s, true)
}

/// Sequential reference path; bitwise identical to [`riesz_energy`].
pub fn riesz_energy_sequential(c: &Configuration, s: f64) -> Result<f64> {
    riesz_energy_impl(c, s, false)
}

/// Logarithmic energy sum_{j != k} log(1/|x_j - x_k|).
pub fn log_energy(c: &Configuration) -> Result<f64> {
    log_energy_impl(c, true)
}

/// Sequential reference path; bitwise identical to [`log_energy`].
pub fn log_energy_sequential(c: &Configuration) -> Result<f64> {
    log_energy_impl(c, false)
}

/// Energy under the given kind.
pub fn energy_value(c: &Configuration, kind: EnergyKind) -> Result<f64> {
    match kind {
        EnergyKind::Log => log_energy(c),
        EnergyKind::Riesz { s } => riesz_energy(c, s),
    }
}

fn gradient_impl(c: &Configuration, kind: EnergyKind, parallel: bool) -> Result<Vec<f64>> {
    check_separated(c)?;
    let w = c.ambient_dim();
    let coords = c.coords();
    let n = c.len();
    let rows: Vec<Vec<f64>> = map_rows(n, parallel, |j| {
        let xj = &coords[j * w..j * w + w];
        let mut g = vec![0.0f64; w];
        for k in 0..n {
            if k == j {
                continue;
            }
            let xk = &coords[k * w..k * w + w];
            let mut r2 = 0.0;
            for i in 0..w {
                let t = xj[i] - xk[i];
                r2 += t * t;
            }
            // d/dx_j of the full symmetric sum: -2 s (x_j - x_k) r^{-s-2}
            // for Riesz, -2 (x_j - x_k) r^{-2} for log.
            let factor = match kind {
                EnergyKind::Log => -2.0 / r2,
                EnergyKind::Riesz { s } => -2.0 * s * r2.powf(-(s + 2.0) / 2.0),
            };
            for i in 0..w {
                g[i] += factor * (xj[i] - xk[i]);
            }
        }
        // Tangential projection g - (g . x) x.
        let dot: f64 = (0..w).map(|i| g[i] * xj[i]).sum();
        for i in 0..w {
            g[i] -= dot * xj[i];
        }
        g
    });
    let mut flat = Vec::with_capacity(n * w);
    for row in rows {
        flat.extend_from_slice(&row);
    }
    Ok(flat)
}

/// Tangential gradient of the full symmetric energy sum, flattened to the
/// configuration layout (N rows of d+1 entries).
pub fn energy_gradient(c: &Configuration, kind: EnergyKind) -> Result<Vec<f64>> {
    gradient_impl(c, kind, true)
}

/// Sequential reference path; bitwise identical to [`energy_gradient`].
pub fn energy_gradient_sequential(c: &Configuration, kind: EnergyKind) -> Result<Vec<f64>> {
    gradient_impl(c, kind, false)
}

/// Riesz s-energy of the N-th roots of unity,
/// L_s(N) = N sum_{k=1}^{N-1} (2 sin(pi k / N))^{-s}.
///
/// Arguments are folded to [0, pi/2] so sines keep full relative accuracy.
pub fn circle_exact(s: f64, n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain("circle_exact: N must be >= 2"));
    }
    if !s.is_finite() || s <= -2.0 {
        return Err(Error::domain(format!("circle_exact: s = {s} out of range")));
    }
    if s == 0.0 {
        let nf = n as f64;
        return Ok(nf * nf - nf);
    }
    let nf = n as f64;
    let mut acc = CompensatedSum::new();
    let half = (n - 1) / 2;
    for k in 1..=half {
        let chord = 2.0 * (std::f64::consts::PI * k as f64 / nf).sin();
        acc.add(2.0 * chord.powf(-s));
    }
    if n % 2 == 0 {
        acc.add(2.0f64.powf(-s)); // antipodal chord, k = N/2
    }
    Ok(nf * acc.value())
}

/// Logarithmic energy of the N-th roots of unity (equals -N log N exactly).
pub fn circle_exact_log(n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain("circle_exact_log: N must be >= 2"));
    }
    let nf = n as f64;
    let mut acc = CompensatedSum::new();
    let half = (n - 1) / 2;
    for k in 1..=half {
        let chord = 2.0 * (std::f64::consts::PI * k as f64 / nf).sin();
        acc.add(-2.0 * chord.ln());
    }
    if n % 2 == 0 {
        acc.add(-std::f64::consts::LN_2);
    }
    Ok(nf * acc.value())
}

/// Truncated asymptotic expansion of `circle_exact`:
/// V_s(S^1) N^2 + 2 zeta(s)/(2 pi)^s N^{1+s}
///   + (2/(2 pi)^s) sum_{n=1}^p alpha_n(s) zeta(s-2n) N^{1+s-2n}.
pub fn circle_expansion(s: f64, n: u64, p: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain("circle_expansion: N must be >= 2"));
    }
    if s == 0.0 {
        return Err(Error::domain(
            "circle_expansion: s = 0 excluded (energy is the constant N^2 - N)",
        ));
    }
    // Odd positive integers are poles of V_s(S^1); v_s_circle reports them.
    let v = v_s_circle(s)?;
    let nf = n as f64;
    let two_pi_pow = (2.0 * std::f64::consts::PI).powf(s);
    let mut total = v * nf * nf + 2.0 * riemann_zeta(s)? / two_pi_pow * nf.powf(1.0 + s);
    let alpha = gen_bernoulli_alpha(s, p);
    for m in 1..=p {
        let zeta_arg = s - 2.0 * m as f64;
        total += 2.0 / two_pi_pow
            * alpha.get(m)
            * riemann_zeta(zeta_arg)?
            * nf.powf(1.0 + s - 2.0 * m as f64);
    }
    Ok(total)
}

/// Histogram of unordered pairwise distances plus the hexagonal reference
/// distances rescaled so the first shell sits at the configuration's
/// best-packing distance.
#[derive(Clone, Debug, Serialize)]
pub struct DistanceHistogram {
    /// (bin_lo, bin_hi, count) rows covering [0, dmax].
    pub bins: Vec<(f64, f64, u64)>,
    /// Rescaled hexagonal shell distances.
    pub hex_reference: Vec<f64>,
    /// Smallest pairwise distance observed.
    pub min_distance: f64,
}

impl DistanceHistogram {
    pub fn total_count(&self) -> u64 {
        self.bins.iter().map(|b| b.2).sum()
    }

    pub fn write_csv(&self, w: &mut impl Write) -> Result<()> {
        writeln!(w, "bin_lo,bin_hi,count")?;
        for (lo, hi, c) in &self.bins {
            writeln!(w, "{lo},{hi},{c}")?;
        }
        Ok(())
    }
}

pub fn distance_histogram(c: &Configuration, bins: usize, dmax: f64) -> Result<DistanceHistogram> {
    if bins == 0 {
        return Err(Error::domain("distance_histogram: bins must be >= 1"));
    }
    if !(dmax > 0.0) {
        return Err(Error::domain("distance_histogram: dmax must be positive"));
    }
    let mut counts = vec![0u64; bins];
    let mut min_d = f64::INFINITY;
    let width = dmax / bins as f64;
    for j in 0..c.len() {
        for k in (j + 1)..c.len() {
            let d = c.dist(j, k);
            min_d = min_d.min(d);
            if d <= dmax {
                let idx = ((d / width) as usize).min(bins - 1);
                counts[idx] += 1;
            }
        }
    }
    let bins_out = counts
        .iter()
        .enumerate()
        .map(|(i, &cnt)| (i as f64 * width, (i as f64 + 1.0) * width, cnt))
        .collect();
    let hex_reference = hex_shells().iter().map(|&(d, _)| d * min_d).collect();
    Ok(DistanceHistogram {
        bins: bins_out,
        hex_reference,
        min_distance: min_d,
    })
}
