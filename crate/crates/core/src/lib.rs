//! Discrete Riesz and logarithmic energy on the unit sphere `S^d`.
//!
//! The crate is organised in five layers:
//!
//! * [`specfun`] — self-contained special functions (gamma, digamma, Gauss
//!   hypergeometric, Hurwitz/Riemann zeta, Dirichlet L, hexagonal Epstein
//!   zeta, generalized Bernoulli coefficients),
//! * [`theory`] — closed-form continuum constants, bounds and conjectured
//!   next-order coefficients, each carrying its validity domain,
//! * [`energy`] — discrete energies, Riemannian gradients, exact circle
//!   energies and the circle asymptotic expansion,
//! * [`optimize`] — projected gradient descent on `(S^d)^N` with multistart,
//! * [`harness`] — remainder sequences, bound verification, constant fitting
//!   and table ingestion/reporting.
//!
//! Pair sums and multistart restarts run on rayon when the `parallel`
//! feature (default) is enabled; a sequential fallback is always compiled
//! and both paths produce bitwise identical sums (the reduction order is
//! fixed by the row decomposition, not by the thread schedule).

pub mod energy;
pub mod error;
pub mod harness;
mod numeric;
pub mod optimize;
pub mod specfun;
pub mod theory;

pub use error::{Error, Result};
