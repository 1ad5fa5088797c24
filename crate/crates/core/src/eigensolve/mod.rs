//! Numerical eigenvalues of the dimensionless radial equation
//! `[-d²/dξ² + l(l+1)/ξ² + ξ - a/ξ] R = λ R`, plus the two exactly solvable
//! limits (pure Coulomb, and linear with `l = 0`).

mod basis;
mod shooting;

use std::fmt;

use crate::airy::airy_zero_k;
use crate::error::{domain, Result};

pub use basis::{solve_sho_basis, solve_sho_basis_state, BasisOptions, BasisScale};
pub use shooting::{solve_shooting, solve_shooting_operator, ShootingOptions};

/// How an eigenvalue was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Shooting,
    ShoBasis,
    Formula,
    Expanded,
    Wkb,
    CornellFit,
    CoulombExact,
    AiryExact,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Shooting => "shooting",
            Method::ShoBasis => "sho_basis",
            Method::Formula => "formula",
            Method::Expanded => "expanded",
            Method::Wkb => "wkb",
            Method::CornellFit => "cornell_fit",
            Method::CoulombExact => "coulomb_exact",
            Method::AiryExact => "airy_exact",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Convergence information attached to an [`EigenResult`].
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Diagnostics {
    pub iterations: usize,
    /// Final bisection bracket width (shooting) or zero for closed forms.
    pub residual: f64,
    /// Radial nodes of the converged shooting solution.
    pub nodes: Option<usize>,
    /// `|λ(N) - λ(N-1)|` between the full and one-smaller oscillator basis.
    pub basis_truncation: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    pub lambda: f64,
    pub method: Method,
    pub n: u32,
    pub l: u32,
    pub a: f64,
    pub diagnostics: Diagnostics,
}

/// The radial operator `-d²/dξ² + l(l+1)/ξ² + c ξ - a/ξ` with `c` either 1
/// (Cornell) or 0 (pure Coulomb, used to validate the shooting solver
/// against the hydrogen-like spectrum).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialOperator {
    a: f64,
    l: u32,
    linear: bool,
}

impl RadialOperator {
    pub fn cornell(a: f64, l: u32) -> Result<Self> {
        if !(a >= 0.0) || !a.is_finite() {
            return domain(format!(
                "Coulomb strength a must be finite and >= 0, got {a}"
            ));
        }
        Ok(Self { a, l, linear: true })
    }

    /// Coulomb term only; bound states need `a > 0`.
    pub fn coulomb_only(a: f64, l: u32) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return domain(format!("pure Coulomb problem needs a > 0, got {a}"));
        }
        Ok(Self {
            a,
            l,
            linear: false,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn is_confining(&self) -> bool {
        self.linear
    }

    fn centrifugal(&self) -> f64 {
        let l = self.l as f64;
        l * (l + 1.0)
    }

    /// Effective potential `l(l+1)/ξ² + c ξ - a/ξ`.
    pub fn effective_potential(&self, xi: f64) -> f64 {
        let lin = if self.linear { xi } else { 0.0 };
        self.centrifugal() / (xi * xi) + lin - self.a / xi
    }

    /// Rigorous lower bound on every eigenvalue: the linear term is
    /// non-negative, so the pure Coulomb ground state in this partial wave
    /// bounds the spectrum from below.
    pub fn spectrum_floor(&self) -> f64 {
        let l1 = self.l as f64 + 1.0;
        -self.a * self.a / (4.0 * l1 * l1)
    }

    /// Largest `ξ` with `V_eff(ξ) = λ`, or `None` if `λ` lies below the well.
    pub fn outer_turning_point(&self, lambda: f64) -> Option<f64> {
        let g = |xi: f64| self.effective_potential(xi) - lambda;
        let mut hi = if self.linear {
            lambda.max(0.0) + self.a + 2.0
        } else {
            if lambda >= 0.0 {
                return None;
            }
            // -|λ| ξ² + a ξ - l(l+1) = 0
            let disc = self.a * self.a - 4.0 * (-lambda) * self.centrifugal();
            if disc < 0.0 {
                return None;
            }
            return Some((self.a + disc.sqrt()) / (2.0 * -lambda));
        };
        while g(hi) <= 0.0 {
            hi *= 2.0;
        }
        // march inward until the well is entered
        let step = 0.25;
        let mut lo = hi;
        loop {
            lo -= step;
            if lo <= 1e-9 {
                return None;
            }
            if g(lo) < 0.0 {
                break;
            }
        }
        let (mut lo, mut hi) = (lo, lo + step);
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if g(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(hi)
    }
}

/// Pure Coulomb eigenvalue `-a² / (4 (n + l + 1)²)`.
pub fn coulomb_eigenvalue(a: f64, n: u32, l: u32) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return domain(format!("Coulomb eigenvalue needs a > 0, got {a}"));
    }
    let big_n = (n + l + 1) as f64;
    Ok(-a * a / (4.0 * big_n * big_n))
}

/// Exact `l = 0` eigenvalue of `-R'' + 2μ b r R = 2μE R`:
/// `-(2μ b)^{2/3} a_{n+1}` with `a_k` the k-th zero of `Ai`.
pub fn linear_l0_eigenvalue(mu: f64, b: f64, n: u32) -> Result<f64> {
    if !(mu > 0.0) || !(b > 0.0) {
        return domain(format!("need mu > 0 and b > 0, got mu={mu}, b={b}"));
    }
    Ok(-(2.0 * mu * b).powf(2.0 / 3.0) * airy_zero_k(n + 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coulomb_values() {
        assert_eq!(coulomb_eigenvalue(1.0, 0, 0).unwrap(), -0.25);
        assert_eq!(coulomb_eigenvalue(2.0, 0, 0).unwrap(), -1.0);
        assert!((coulomb_eigenvalue(1.0, 1, 1).unwrap() + 1.0 / 36.0).abs() < 1e-16);
        assert!(coulomb_eigenvalue(0.0, 0, 0).is_err());
        assert!(coulomb_eigenvalue(-1.0, 0, 0).is_err());
    }

    #[test]
    fn linear_l0_values() {
        assert!((linear_l0_eigenvalue(0.5, 1.0, 0).unwrap() - 2.338_107_410_459_767).abs() < 1e-12);
        assert!((linear_l0_eigenvalue(0.5, 1.0, 1).unwrap() - 4.087_949_444_130_97).abs() < 1e-12);
        let scaled = linear_l0_eigenvalue(2.0, 2.0, 0).unwrap();
        assert!((scaled - 4.0 * 2.338_107_410_459_767).abs() < 1e-11);
        assert!(linear_l0_eigenvalue(0.0, 1.0, 0).is_err());
        assert!(linear_l0_eigenvalue(1.0, -1.0, 0).is_err());
    }

    #[test]
    fn turning_points() {
        let op = RadialOperator::cornell(0.0, 0).unwrap();
        assert!((op.outer_turning_point(3.0).unwrap() - 3.0).abs() < 1e-9);
        let op = RadialOperator::cornell(1.0, 2).unwrap();
        let t = op.outer_turning_point(5.0).unwrap();
        assert!((op.effective_potential(t) - 5.0).abs() < 1e-8);
        assert!(op.outer_turning_point(-100.0).is_none());
        let op = RadialOperator::coulomb_only(2.0, 0).unwrap();
        assert!((op.outer_turning_point(-0.25).unwrap() - 8.0).abs() < 1e-12);
    }

    #[test]
    fn operator_validation() {
        assert!(RadialOperator::cornell(-0.1, 0).is_err());
        assert!(RadialOperator::cornell(f64::NAN, 0).is_err());
        assert!(RadialOperator::coulomb_only(0.0, 0).is_err());
    }
}
