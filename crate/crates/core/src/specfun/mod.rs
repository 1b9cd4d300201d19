//! Special functions backing every closed-form constant in [`crate::theory`].
//!
//! Everything here is real-argument, double-precision and pure; no global
//! state, safe for concurrent callers. Complex arguments and arbitrary
//! precision are out of scope.

mod bernoulli;
mod gamma;
mod hyp2f1;
mod lattice;
mod zeta;

pub use bernoulli::{gen_bernoulli_alpha, AlphaCoefficients};
pub use gamma::{digamma, gamma, lemma_identity_rhs, ln_gamma, pochhammer, EULER_GAMMA};
pub use hyp2f1::gauss_2f1;
pub use lattice::{
    dirichlet_l3, dirichlet_l3_deriv0, epstein_hex, epstein_hex_deriv0, hex_shells,
    HEX_COVOLUME,
};
pub use zeta::{
    hurwitz_zeta, hurwitz_zeta_s_derivative, laurent_at_one, riemann_zeta, stieltjes_gamma1,
    LaurentAtOne,
};
