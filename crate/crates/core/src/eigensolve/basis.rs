//! Diagonalisation in a truncated harmonic-oscillator basis
//! `u_k(ξ) ∝ ρ^{l+1} e^{-ρ²/2} L_k^{(l+1/2)}(ρ²)`, `ρ = ξ / b`.

use nalgebra::{DMatrix, SymmetricEigen};

use super::{Diagnostics, EigenResult, Method};
use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BasisScale {
    /// Minimise the sum of the lowest `variational_states` eigenvalues.
    Auto,
    Fixed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisOptions {
    pub n_basis: usize,
    pub scale: BasisScale,
    pub quadrature_points: usize,
    pub variational_states: usize,
}

impl Default for BasisOptions {
    fn default() -> Self {
        Self {
            n_basis: 20,
            scale: BasisScale::Auto,
            quadrature_points: 200,
            variational_states: 4,
        }
    }
}

impl BasisOptions {
    fn validate(&self) -> Result<()> {
        if self.n_basis < 2 {
            return domain("n_basis must be at least 2");
        }
        if self.quadrature_points < self.n_basis + 1 {
            return domain("quadrature_points must exceed n_basis");
        }
        if self.variational_states == 0 {
            return domain("variational_states must be at least 1");
        }
        if let BasisScale::Fixed(b) = self.scale {
            if !(b > 0.0) || !b.is_finite() {
                return domain(format!("basis scale must be positive, got {b}"));
            }
        }
        Ok(())
    }
}

/// Gauss rule for `∫_0^∞ t^α e^{-t} f(t) dt` by Golub-Welsch.
fn gauss_laguerre(points: usize, alpha: f64) -> (Vec<f64>, Vec<f64>) {
    let jacobi = DMatrix::from_fn(points, points, |i, j| {
        if i == j {
            2.0 * i as f64 + alpha + 1.0
        } else if i.abs_diff(j) == 1 {
            let k = i.max(j) as f64;
            (k * (k + alpha)).sqrt()
        } else {
            0.0
        }
    });
    // Christoffel numbers from the orthonormal polynomials stay accurate
    // far out in the tail, unlike squared eigenvector components
    let eig = SymmetricEigen::new(jacobi);
    let mut pairs: Vec<(f64, f64)> = eig
        .eigenvalues
        .iter()
        .map(|&t| {
            let norm: f64 = orthonormal_laguerre(points, alpha, t)
                .iter()
                .map(|p| p * p)
                .sum();
            let w = if norm.is_finite() { 1.0 / norm } else { 0.0 };
            (t, w)
        })
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    pairs.into_iter().unzip()
}

/// `ln Γ(x)` for positive integer or half-integer `x`.
fn ln_gamma_half_integer(x: f64) -> f64 {
    let (mut acc, mut z) = if x.fract() == 0.0 {
        (0.0, 1.0)
    } else {
        (0.5 * std::f64::consts::PI.ln(), 0.5)
    };
    while z < x - 0.25 {
        acc += z.ln();
        z += 1.0;
    }
    acc
}

/// Orthonormal `L_k^{(α)}(t)` values for `k = 0..count`, normalised against
/// the weight `t^α e^{-t}`.
fn orthonormal_laguerre(count: usize, alpha: f64, t: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(count);
    out.push((-0.5 * ln_gamma_half_integer(alpha + 1.0)).exp());
    if count > 1 {
        out.push((1.0 + alpha - t) * out[0] / (1.0 + alpha).sqrt());
    }
    for k in 1..count.saturating_sub(1) {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - t) * out[k]
            - (kf * (kf + alpha)).sqrt() * out[k - 1])
            / ((kf + 1.0) * (kf + 1.0 + alpha)).sqrt();
        out.push(next);
    }
    out
}

/// Scale-free pieces of `H(b) = T / b² + b X - (a / b) Y`.
struct BasisMatrices {
    kinetic: DMatrix<f64>,
    linear: DMatrix<f64>,
    coulomb: DMatrix<f64>,
}

impl BasisMatrices {
    fn new(l: u32, size: usize, points: usize) -> Self {
        let lf = l as f64;
        let alpha = lf + 0.5;
        let kinetic = DMatrix::from_fn(size, size, |i, j| {
            let k = i.min(j) as f64;
            if i == j {
                2.0 * k + lf + 1.5
            } else if i.abs_diff(j) == 1 {
                ((k + 1.0) * (k + lf + 1.5)).sqrt()
            } else {
                0.0
            }
        });
        // ρ = √t: the linear term carries t^{α+1/2}, the Coulomb term t^{α-1/2}
        let project = |weight_alpha: f64| {
            let (nodes, weights) = gauss_laguerre(points, weight_alpha);
            let mut m = DMatrix::zeros(size, size);
            for (t, w) in nodes.iter().zip(&weights) {
                if *w == 0.0 {
                    continue;
                }
                let phi = orthonormal_laguerre(size, alpha, *t);
                for i in 0..size {
                    for j in i..size {
                        m[(i, j)] += w * phi[i] * phi[j];
                    }
                }
            }
            for i in 0..size {
                for j in 0..i {
                    m[(i, j)] = m[(j, i)];
                }
            }
            m
        };
        Self {
            kinetic,
            linear: project(lf + 1.0),
            coulomb: project(lf),
        }
    }

    fn spectrum(&self, a: f64, b: f64, size: usize) -> Vec<f64> {
        let h = (self.kinetic.view((0, 0), (size, size)) / (b * b)
            + self.linear.view((0, 0), (size, size)) * b
            - self.coulomb.view((0, 0), (size, size)) * (a / b))
            .into_owned();
        let mut ev: Vec<f64> = SymmetricEigen::new(h).eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }
}

fn optimal_scale(m: &BasisMatrices, a: f64, size: usize, states: usize) -> f64 {
    let states = states.min(size);
    let cost = |ln_b: f64| -> f64 { m.spectrum(a, ln_b.exp(), size)[..states].iter().sum() };
    let (lo, hi) = (0.05f64.ln(), 20f64.ln());
    let grid = 60;
    let mut best = (lo, f64::INFINITY);
    for i in 0..=grid {
        let x = lo + (hi - lo) * i as f64 / grid as f64;
        let c = cost(x);
        if c < best.1 {
            best = (x, c);
        }
    }
    let width = (hi - lo) / grid as f64;
    let (mut x0, mut x3) = (best.0 - width, best.0 + width);
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = x3 - g * (x3 - x0);
    let mut x2 = x0 + g * (x3 - x0);
    let (mut c1, mut c2) = (cost(x1), cost(x2));
    while x3 - x0 > 1e-7 {
        if c1 < c2 {
            x3 = x2;
            x2 = x1;
            c2 = c1;
            x1 = x3 - g * (x3 - x0);
            c1 = cost(x1);
        } else {
            x0 = x1;
            x1 = x2;
            c1 = c2;
            x2 = x0 + g * (x3 - x0);
            c2 = cost(x2);
        }
    }
    (0.5 * (x0 + x3)).exp()
}

/// All `n_basis` eigenvalues in partial wave `l`, ascending, with the scale used.
pub fn solve_sho_basis(a: f64, l: u32, opts: &BasisOptions) -> Result<(Vec<EigenResult>, f64)> {
    opts.validate()?;
    if !(a >= 0.0) || !a.is_finite() {
        return domain(format!(
            "Coulomb strength a must be finite and >= 0, got {a}"
        ));
    }
    let size = opts.n_basis;
    let m = BasisMatrices::new(l, size, opts.quadrature_points);
    let b = match opts.scale {
        BasisScale::Fixed(b) => b,
        BasisScale::Auto => optimal_scale(&m, a, size, opts.variational_states),
    };
    let full = m.spectrum(a, b, size);
    let smaller = m.spectrum(a, b, size - 1);
    if full.iter().any(|v| !v.is_finite()) {
        return Err(Error::Numerical("non-finite basis eigenvalue".into()));
    }
    let results = full
        .iter()
        .enumerate()
        .map(|(n, &lambda)| EigenResult {
            lambda,
            method: Method::ShoBasis,
            n: n as u32,
            l,
            a,
            diagnostics: Diagnostics {
                iterations: 0,
                residual: 0.0,
                nodes: None,
                basis_truncation: smaller.get(n).map(|s| (s - lambda).abs()),
            },
        })
        .collect();
    Ok((results, b))
}

/// Single level `n` from [`solve_sho_basis`].
pub fn solve_sho_basis_state(a: f64, n: u32, l: u32, opts: &BasisOptions) -> Result<EigenResult> {
    if n as usize >= opts.n_basis {
        return domain(format!("n = {n} needs n_basis > {n}, got {}", opts.n_basis));
    }
    let (mut all, _) = solve_sho_basis(a, l, opts)?;
    Ok(all.swap_remove(n as usize))
}
