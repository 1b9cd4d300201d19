//! Dirichlet L_{-3} and the Epstein zeta function of the hexagonal lattice.
//!
//! L_{-3}(s) is continued to all real s != 1 through the Hurwitz identity
//! L_{-3}(s) = 3^{-s} [zeta(s, 1/3) - zeta(s, 2/3)]; the Epstein zeta of
//! the unit hexagonal lattice factorizes as 6 zeta(s/2) L_{-3}(s/2), which
//! serves as its meromorphic extension (simple pole at s = 2).

use super::zeta::{hurwitz_zeta, hurwitz_zeta_s_derivative, riemann_zeta};
use crate::error::{Error, Result};

/// Covolume of the hexagonal lattice with unit edge length.
pub const HEX_COVOLUME: f64 = 0.8660254037844386; // sqrt(3)/2

/// First seven hexagonal-lattice shells as (distance, neighbor count).
pub fn hex_shells() -> [(f64, u32); 7] {
    let s3 = 3.0f64.sqrt();
    [
        (1.0, 6),
        (s3, 6),
        (2.0, 6),
        (7.0f64.sqrt(), 12),
        (3.0, 6),
        (2.0 * s3, 6),
        (13.0f64.sqrt(), 12),
    ]
}

/// Dirichlet L_{-3}(s) for real s != 1.
pub fn dirichlet_l3(s: f64) -> Result<f64> {
    let z1 = hurwitz_zeta(s, 1.0 / 3.0)?;
    let z2 = hurwitz_zeta(s, 2.0 / 3.0)?;
    Ok(3.0f64.powf(-s) * (z1 - z2))
}

/// L_{-3}'(0) assembled from the Hurwitz representation.
pub fn dirichlet_l3_deriv0() -> Result<f64> {
    let l0 = dirichlet_l3(0.0)?;
    let d1 = hurwitz_zeta_s_derivative(0.0, 1.0 / 3.0)?;
    let d2 = hurwitz_zeta_s_derivative(0.0, 2.0 / 3.0)?;
    Ok(-(3.0f64.ln()) * l0 + d1 - d2)
}

/// Epstein zeta of the unit hexagonal lattice, zeta_hex(s) = 6 zeta(s/2) L_{-3}(s/2).
///
/// The simple pole at s = 2 (residue 4 pi / sqrt(3)) is guarded with a
/// 1e-6 radius.
pub fn epstein_hex(s: f64) -> Result<f64> {
    if (s - 2.0).abs() < 1e-6 {
        return Err(Error::pole(
            "hexagonal Epstein zeta pole (anchor: hex-zeta-factorization)".to_string(),
            2.0,
            Some(4.0 * std::f64::consts::PI / 3.0f64.sqrt()),
        ));
    }
    Ok(6.0 * riemann_zeta(s / 2.0)? * dirichlet_l3(s / 2.0)?)
}

/// zeta_hex'(0) = 3 [zeta'(0) L_{-3}(0) + zeta(0) L_{-3}'(0)].
pub fn epstein_hex_deriv0() -> Result<f64> {
    let zeta0 = riemann_zeta(0.0)?;
    let zeta0p = hurwitz_zeta_s_derivative(0.0, 1.0)?;
    Ok(3.0 * (zeta0p * dirichlet_l3(0.0)? + zeta0 * dirichlet_l3_deriv0()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn l3_special_values() {
        assert_relative_eq!(dirichlet_l3(0.0).unwrap(), 1.0 / 3.0, max_relative = 1e-13);
        assert_relative_eq!(dirichlet_l3(2.0).unwrap(), 0.7813024128964863, max_relative = 1e-12);
        // Zeros at 1 - 2m.
        assert!(dirichlet_l3(-1.0).unwrap().abs() <= 1e-10);
        assert!(dirichlet_l3(-3.0).unwrap().abs() <= 1e-10);
        assert!(dirichlet_l3(1.0).is_err());
    }

    #[test]
    fn l3_derivative_closed_form() {
        // (log 3)/6 + 2 log(Gamma(1/3)/sqrt(2 pi))
        let want = 3.0f64.ln() / 6.0
            + 2.0 * (super::super::gamma::ln_gamma(1.0 / 3.0)
                - 0.5 * (2.0 * std::f64::consts::PI).ln());
        assert_relative_eq!(dirichlet_l3_deriv0().unwrap(), want, max_relative = 1e-12);
    }

    #[test]
    fn epstein_special_values() {
        assert_relative_eq!(epstein_hex(0.0).unwrap(), -1.0, max_relative = 1e-13);
        let want = (2.0 * std::f64::consts::PI).ln()
            - 3.0f64.ln() / 4.0
            - 3.0 * super::super::gamma::ln_gamma(1.0 / 3.0);
        assert_relative_eq!(epstein_hex_deriv0().unwrap(), want, max_relative = 1e-12);
        assert!(epstein_hex(2.0).is_err());
        assert!(epstein_hex(2.0 + 1e-8).is_err());
    }

    #[test]
    fn hex_shell_multiplicities_sum_to_54() {
        let total: u32 = hex_shells().iter().map(|&(_, m)| m).sum();
        assert_eq!(total, 54);
    }
}
