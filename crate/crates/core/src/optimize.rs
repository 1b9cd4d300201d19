//! Projected gradient descent on (S^d)^N with Armijo backtracking and
//! multistart.
//!
//! Steps walk along the negative tangential gradient and renormalize every
//! point back to the sphere. The initial trial step is a Barzilai–Borwein
//! estimate clamped by the last accepted step, so the line search rarely
//! backtracks more than once. Riesz exponents in (-2, 0) are maximized by
//! negating the objective.

use crate::energy::{energy_gradient, energy_value, Configuration, EnergyKind};
use crate::error::{Error, Result};
use serde::Serialize;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Knobs for [`minimize`] and [`multistart`].
#[derive(Clone, Copy, Debug, Serialize)]
pub struct OptimizerSettings {
    pub max_iters: u64,
    /// Termination threshold on the tangential gradient sup-norm
    /// (max over points of the per-point Euclidean norm).
    pub grad_tol: f64,
    pub restarts: u32,
    pub seed: u64,
    /// Armijo sufficient-decrease constant, in (0, 1).
    pub armijo_c1: f64,
    /// Backtracking shrink factor, in (0, 1).
    pub armijo_backtrack: f64,
    /// Record (iteration, energy, grad sup-norm) triples.
    pub record_trace: bool,
}

impl Default for OptimizerSettings {
    fn default() -> Self {
        OptimizerSettings {
            max_iters: 50_000,
            grad_tol: 1e-6,
            restarts: 16,
            seed: 0x5eed_cafe,
            armijo_c1: 1e-4,
            armijo_backtrack: 0.5,
            record_trace: false,
        }
    }
}

impl OptimizerSettings {
    /// Default restart budget: 16 up to N = 100, 4 beyond.
    pub fn for_problem_size(n: usize) -> Self {
        OptimizerSettings {
            restarts: if n <= 100 { 16 } else { 4 },
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.grad_tol > 0.0) {
            return Err(Error::domain("grad_tol must be positive"));
        }
        if self.restarts < 1 {
            return Err(Error::domain("restarts must be >= 1"));
        }
        if !(self.armijo_c1 > 0.0 && self.armijo_c1 < 1.0) {
            return Err(Error::domain("armijo c1 must lie in (0,1)"));
        }
        if !(self.armijo_backtrack > 0.0 && self.armijo_backtrack < 1.0) {
            return Err(Error::domain("backtrack factor must lie in (0,1)"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct TracePoint {
    pub iter: u64,
    pub energy: f64,
    pub grad_norm: f64,
}

/// Outcome of one descent run (or the best restart of a multistart).
#[derive(Clone, Debug, Serialize)]
pub struct OptimizationResult {
    #[serde(skip)]
    pub config: Configuration,
    /// Energy of `config`, recomputed from scratch on exit.
    pub energy: f64,
    pub iterations: u64,
    /// Final tangential gradient sup-norm.
    pub grad_norm: f64,
    /// Which restart produced this result (0 for a direct `minimize`).
    pub restart_index: u32,
    /// True when `grad_norm <= grad_tol` was reached before `max_iters`.
    pub converged: bool,
    pub trace: Vec<TracePoint>,
}

/// SplitMix64 step, used to derive independent per-restart seeds.
pub(crate) fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// N points i.i.d. uniform on S^d (normalized Gaussians), deterministic in
/// the seed.
pub fn init_random(n: usize, d: usize, seed: u64) -> Result<Configuration> {
    use rand::SeedableRng;
    use rand_distr::{Distribution, StandardNormal};
    if n < 2 {
        return Err(Error::domain("init_random: N must be >= 2"));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let w = d + 1;
    let mut coords = Vec::with_capacity(n * w);
    for _ in 0..n * w {
        let x: f64 = StandardNormal.sample(&mut rng);
        coords.push(x);
    }
    Configuration::from_unnormalized(d, coords)
}

/// Generalized-spiral warm start on S^2: heights uniform, azimuth stepped
/// by the golden angle.
pub fn init_spiral(n: usize) -> Result<Configuration> {
    if n < 2 {
        return Err(Error::domain("init_spiral: N must be >= 2"));
    }
    let golden_angle = std::f64::consts::PI * (3.0 - 5.0f64.sqrt());
    let nf = n as f64;
    let mut coords = Vec::with_capacity(3 * n);
    for k in 1..=n {
        let z = 1.0 - (2.0 * k as f64 - 1.0) / nf;
        let r = (1.0 - z * z).sqrt();
        let theta = k as f64 * golden_angle;
        coords.push(r * theta.cos());
        coords.push(r * theta.sin());
        coords.push(z);
    }
    Configuration::new(2, coords)
}

fn sup_norm(grad: &[f64], w: usize) -> f64 {
    grad.chunks_exact(w)
        .map(|g| g.iter().map(|x| x * x).sum::<f64>().sqrt())
        .fold(0.0f64, f64::max)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Retract `x - t g` point-wise back onto the sphere.
fn step(c: &Configuration, g: &[f64], t: f64) -> Result<Configuration> {
    let w = c.ambient_dim();
    let mut coords = Vec::with_capacity(c.coords().len());
    for (p, gp) in c.coords().chunks_exact(w).zip(g.chunks_exact(w)) {
        for i in 0..w {
            coords.push(p[i] - t * gp[i]);
        }
    }
    Configuration::from_unnormalized(c.dim(), coords)
}

/// Nudges nearly coincident points apart before the first kernel
/// evaluation (tangential Gaussian noise of size 1e-6).
fn desingularize(c: Configuration, seed: u64) -> Result<Configuration> {
    if c.min_distance() >= 1e-9 {
        return Ok(c);
    }
    use rand::SeedableRng;
    use rand_distr::{Distribution, StandardNormal};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(splitmix64(seed ^ 0xD15));
    let w = c.ambient_dim();
    let mut coords = c.coords().to_vec();
    for p in coords.chunks_exact_mut(w) {
        let noise: Vec<f64> = (0..w).map(|_| StandardNormal.sample(&mut rng)).collect();
        let d = dot(&noise, p);
        for i in 0..w {
            p[i] += 1e-6 * (noise[i] - d * p[i]);
        }
    }
    Configuration::from_unnormalized(c.dim(), coords)
}

const MAX_BACKTRACKS: u32 = 60;

/// Projected gradient descent from `start`. Descends for log and s > 0,
/// ascends for -2 < s < 0. The accepted-objective sequence is monotone.
pub fn minimize(
    start: &Configuration,
    kind: EnergyKind,
    settings: &OptimizerSettings,
) -> Result<OptimizationResult> {
    settings.validate()?;
    let sign = if kind.is_maximizing() { -1.0 } else { 1.0 };
    let w = start.ambient_dim();

    let mut x = desingularize(start.clone(), settings.seed)?;
    let mut f = sign * energy_value(&x, kind)?;
    let mut grad: Vec<f64> = energy_gradient(&x, kind)?;
    if sign < 0.0 {
        grad.iter_mut().for_each(|g| *g = -*g);
    }

    let mut trace = Vec::new();
    let mut t_prev: f64 = 0.0;
    let mut prev: Option<(Vec<f64>, Vec<f64>)> = None; // (coords, grad) of previous iterate
    let mut iterations = 0u64;
    let mut gnorm = sup_norm(&grad, w);

    let finish = |x: Configuration, iterations, gnorm, trace, converged| -> Result<OptimizationResult> {
        let energy = energy_value(&x, kind)?;
        Ok(OptimizationResult {
            config: x,
            energy,
            iterations,
            grad_norm: gnorm,
            restart_index: 0,
            converged,
            trace,
        })
    };

    for iter in 0..settings.max_iters {
        iterations = iter;
        if settings.record_trace {
            trace.push(TracePoint { iter, energy: sign * f, grad_norm: gnorm });
        }
        if gnorm <= settings.grad_tol {
            return finish(x, iter, gnorm, trace, true);
        }

        // Barzilai-Borwein trial step from the previous (x, grad) pair.
        let gg = dot(&grad, &grad);
        let mut t = match &prev {
            Some((px, pg)) => {
                let mut ss = 0.0;
                let mut sy = 0.0;
                for i in 0..grad.len() {
                    let si = x.coords()[i] - px[i];
                    let yi = grad[i] - pg[i];
                    ss += si * si;
                    sy += si * yi;
                }
                if sy > 0.0 && ss > 0.0 {
                    (ss / sy).clamp(1e-14, 1e6)
                } else {
                    (t_prev * 4.0).clamp(1e-14, 1e6)
                }
            }
            None => 1.0 / (1.0 + gnorm),
        };

        // Armijo backtracking on the retracted step.
        let mut accepted = None;
        for _bt in 0..MAX_BACKTRACKS {
            let cand = step(&x, &grad, t)?;
            let fc = sign * energy_value(&cand, kind)?;
            if fc <= f - settings.armijo_c1 * t * gg {
                accepted = Some((cand, fc));
                break;
            }
            t *= settings.armijo_backtrack;
        }
        let Some((cand, fc)) = accepted else {
            let best = finish(x, iter, gnorm, trace, false)?;
            return Err(Error::Stagnation {
                backtracks: MAX_BACKTRACKS,
                iteration: iter,
                best: Box::new(best),
            });
        };

        prev = Some((x.coords().to_vec(), grad.clone()));
        x = cand;
        f = fc;
        t_prev = t;
        grad = energy_gradient(&x, kind)?;
        if sign < 0.0 {
            grad.iter_mut().for_each(|g| *g = -*g);
        }
        gnorm = sup_norm(&grad, w);
    }
    finish(x, iterations + 1, gnorm, trace, gnorm <= settings.grad_tol)
}

/// Best of `settings.restarts` independent descent runs. Restart 0 is the
/// spiral warm start when d = 2; the rest are random with seeds derived
/// from the master seed by SplitMix64. Stagnated runs still contribute
/// their best iterate; the call fails only if every restart fails outright.
pub fn multistart(
    n: usize,
    d: usize,
    kind: EnergyKind,
    settings: &OptimizerSettings,
) -> Result<OptimizationResult> {
    settings.validate()?;
    let sign = if kind.is_maximizing() { -1.0 } else { 1.0 };

    let run = |ridx: u32| -> Result<OptimizationResult> {
        let seed = splitmix64(settings.seed ^ u64::from(ridx).wrapping_mul(0x9e37_79b9));
        let start = if ridx == 0 && d == 2 {
            init_spiral(n)?
        } else {
            init_random(n, d, seed)?
        };
        let local = OptimizerSettings { seed, ..*settings };
        match minimize(&start, kind, &local) {
            Ok(mut r) => {
                r.restart_index = ridx;
                Ok(r)
            }
            Err(Error::Stagnation { best, .. }) => {
                let mut r = *best;
                r.restart_index = ridx;
                Ok(r)
            }
            Err(e) => Err(e),
        }
    };

    let indices: Vec<u32> = (0..settings.restarts).collect();
    #[cfg(feature = "parallel")]
    let outcomes: Vec<Result<OptimizationResult>> =
        indices.par_iter().map(|&i| run(i)).collect();
    #[cfg(not(feature = "parallel"))]
    let outcomes: Vec<Result<OptimizationResult>> = indices.iter().map(|&i| run(i)).collect();

    let mut best: Option<OptimizationResult> = None;
    let mut first_err: Option<Error> = None;
    for out in outcomes {
        match out {
            Ok(r) => {
                let better = match &best {
                    None => true,
                    // Strict ordering; ties resolved by restart index.
                    Some(b) => sign * r.energy < sign * b.energy,
                };
                if better {
                    best = Some(r);
                }
            }
            Err(e) => {
                if first_err.is_none() {
                    first_err = Some(e);
                }
            }
        }
    }
    best.ok_or_else(|| first_err.unwrap_or_else(|| Error::domain("no restarts executed")))
}

/// Ratio of the smallest pairwise distance to the conjectured best-packing
/// scale C_inf,d N^{-1/d}; values well below 1/2 indicate a poor local
/// optimum (reported as a warning by callers, never a hard failure).
pub fn separation_ratio(c: &Configuration) -> Result<f64> {
    let d = crate::theory::SphereDim::new(c.dim() as u32)?;
    let scale = crate::theory::best_packing_cinf(d)? * (c.len() as f64).powf(-1.0 / c.dim() as f64);
    Ok(c.min_distance() / scale)
}
