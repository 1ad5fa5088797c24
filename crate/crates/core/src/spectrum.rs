//! Physical units: scaling of `V(r) = b r - α/r - C` to the dimensionless
//! problem, and back to energies and meson masses.

use rayon::prelude::*;

use crate::closed_forms::{cornell_eigenvalue, CornellFitConstants, DeltaConstants};
use crate::eigensolve::{solve_shooting, ShootingOptions};
use crate::error::{domain, Result};

/// Cornell potential parameters in GeV units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    /// Reduced mass.
    pub mu: f64,
    /// String tension (GeV²).
    pub b: f64,
    pub alpha: f64,
    /// Constant shift (GeV).
    pub c: f64,
    pub quark_mass: f64,
}

pub const BOTTOMONIUM_PRESET: &str = "bottomonium-table3";

impl PotentialParams {
    pub fn new(mu: f64, b: f64, alpha: f64, c: f64, quark_mass: f64) -> Result<Self> {
        let p = Self {
            mu,
            b,
            alpha,
            c,
            quark_mass,
        };
        p.validate()?;
        Ok(p)
    }

    /// Equal-mass b b̄ parameters of the bottomonium preset.
    pub fn bottomonium() -> Self {
        let quark_mass = 4.93;
        Self {
            mu: quark_mass / 2.0,
            b: 0.18,
            alpha: 0.52,
            c: 0.29,
            quark_mass,
        }
    }

    pub fn preset(name: &str) -> Result<Self> {
        match name {
            BOTTOMONIUM_PRESET => Ok(Self::bottomonium()),
            other => domain(format!(
                "unknown preset '{other}' (known: {BOTTOMONIUM_PRESET})"
            )),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.mu, self.b, self.alpha, self.c, self.quark_mass]
            .iter()
            .all(|v| v.is_finite());
        if !finite || self.mu <= 0.0 || self.b <= 0.0 || self.quark_mass <= 0.0 {
            return domain(format!("mu, b and quark_mass must be positive: {self:?}"));
        }
        if self.alpha < 0.0 {
            return domain(format!("alpha must be >= 0, got {}", self.alpha));
        }
        Ok(())
    }
}

/// Length scale `σ = (2μb)^{1/3}` and Coulomb strength `a = 2μα/σ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledProblem {
    pub sigma: f64,
    pub a: f64,
}

pub fn scale_to_dimensionless(p: &PotentialParams) -> Result<ScaledProblem> {
    p.validate()?;
    let sigma = (2.0 * p.mu * p.b).cbrt();
    Ok(ScaledProblem {
        sigma,
        a: 2.0 * p.mu * p.alpha / sigma,
    })
}

/// `E = λ σ² / (2μ) - C`.
pub fn eigenvalue_to_energy(lambda: f64, s: &ScaledProblem, p: &PotentialParams) -> f64 {
    lambda * s.sigma * s.sigma / (2.0 * p.mu) - p.c
}

/// `λ = 2μ (E + C) / σ²`.
pub fn energy_to_eigenvalue(energy: f64, s: &ScaledProblem, p: &PotentialParams) -> f64 {
    2.0 * p.mu * (energy + p.c) / (s.sigma * s.sigma)
}

/// `M = 2 m_q + E`.
pub fn meson_mass(energy: f64, p: &PotentialParams) -> f64 {
    2.0 * p.quark_mass + energy
}

#[derive(Debug, Clone, PartialEq)]
pub struct BottomoniumRow {
    pub label: &'static str,
    pub n: u32,
    pub formula_mass: f64,
    pub numerical_mass: f64,
    /// Measured Υ(nS) mass, for display only.
    pub experiment: f64,
}

const S_WAVE_STATES: [(&str, f64); 6] = [
    ("0³S₁", 9.4603),
    ("1³S₁", 10.023),
    ("2³S₁", 10.355),
    ("3³S₁", 10.579),
    ("4³S₁", 10.882),
    ("5³S₁", 11.003),
];

/// Υ(nS) masses for `n = 0..5` from the Cornell fit and from shooting.
pub fn bottomonium_table() -> Result<Vec<BottomoniumRow>> {
    bottomonium_table_with(&PotentialParams::bottomonium(), &ShootingOptions::default())
}

pub fn bottomonium_table_with(
    p: &PotentialParams,
    opts: &ShootingOptions,
) -> Result<Vec<BottomoniumRow>> {
    let s = scale_to_dimensionless(p)?;
    let (delta, fit) = (DeltaConstants::default(), CornellFitConstants::PUBLISHED);
    S_WAVE_STATES
        .par_iter()
        .enumerate()
        .map(|(n, &(label, experiment))| {
            let n = n as u32;
            let formula = cornell_eigenvalue(s.a, n, 0, &delta, &fit)?;
            let numerical = solve_shooting(s.a, n, 0, opts)?.lambda;
            Ok(BottomoniumRow {
                label,
                n,
                formula_mass: meson_mass(eigenvalue_to_energy(formula, &s, p), p),
                numerical_mass: meson_mass(eigenvalue_to_energy(numerical, &s, p), p),
                experiment,
            })
        })
        .collect()
}
