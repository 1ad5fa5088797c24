//! Numerov integration outward from the origin with node-count bisection.

use super::{Diagnostics, EigenResult, Method, RadialOperator};
use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingOptions {
    pub step: f64,
    pub xi_min: f64,
    /// Distance integrated past the outer turning point of the upper bracket.
    pub xi_margin: f64,
    pub tolerance: f64,
    pub max_iter: usize,
}

impl Default for ShootingOptions {
    fn default() -> Self {
        Self {
            step: 1e-3,
            xi_min: 1e-6,
            xi_margin: 15.0,
            tolerance: 1e-9,
            max_iter: 200,
        }
    }
}

impl ShootingOptions {
    fn validate(&self) -> Result<()> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if !ok(self.step) || !ok(self.xi_min) || !ok(self.xi_margin) || !ok(self.tolerance) {
            return domain(format!(
                "shooting options must be positive and finite: {self:?}"
            ));
        }
        if self.max_iter == 0 {
            return domain("max_iter must be at least 1");
        }
        Ok(())
    }
}

const RESCALE_ABOVE: f64 = 1e100;

/// Counts sign changes of the regular solution on `(xi_start, xi_max)`.
fn count_nodes(op: &RadialOperator, lambda: f64, xi_start: f64, xi_max: f64, h: f64) -> usize {
    let l1 = op.l() as f64 + 1.0;
    let h2 = h * h / 12.0;
    let q = |xi: f64| op.effective_potential(xi) - lambda;
    let steps = ((xi_max - xi_start) / h).ceil() as usize;

    // leading behaviour ξ^{l+1} (1 - a ξ / (2l+2)), normalised so y0 = 1
    let shape = |xi: f64| 1.0 - op.a() * xi / (2.0 * l1);
    let x0 = xi_start;
    let x1 = xi_start + h;
    let mut y_prev = 1.0;
    let mut y = (x1 / x0).powf(l1) * shape(x1) / shape(x0);
    let mut f_prev = 1.0 - h2 * q(x0);
    let mut f = 1.0 - h2 * q(x1);

    let mut nodes = 0;
    for i in 2..=steps {
        let x_next = xi_start + i as f64 * h;
        let f_next = 1.0 - h2 * q(x_next);
        let y_next = ((12.0 - 10.0 * f) * y - f_prev * y_prev) / f_next;
        if y_next * y < 0.0 || (y == 0.0 && y_next * y_prev < 0.0) {
            nodes += 1;
        }
        y_prev = y;
        y = y_next;
        f_prev = f;
        f = f_next;
        if y.abs() > RESCALE_ABOVE {
            y_prev /= RESCALE_ABOVE;
            y /= RESCALE_ABOVE;
        }
    }
    nodes
}

/// Start far enough in that the irregular solution is negligible, but not
/// so far that `ξ^{l+1}` underflows for large `l`.
fn start_point(op: &RadialOperator, lambda_scale: f64, opts: &ShootingOptions) -> f64 {
    if op.l() == 0 {
        return opts.xi_min;
    }
    let ll = op.centrifugal();
    let inner = (ll / (lambda_scale.abs() + op.a() + 1.0)).sqrt();
    (inner * (-35.0 / ll.sqrt()).exp()).max(opts.xi_min)
}

fn outer_limit(op: &RadialOperator, lambda: f64, opts: &ShootingOptions) -> Result<f64> {
    let tp = op.outer_turning_point(lambda).ok_or_else(|| {
        Error::Search(format!(
            "no classically allowed region at lambda = {lambda}"
        ))
    })?;
    let margin = if op.is_confining() {
        opts.xi_margin
    } else {
        // decay length 1/κ grows as the level approaches the continuum
        opts.xi_margin.max(25.0 / (-lambda).sqrt())
    };
    Ok(tp + margin)
}

/// Cornell eigenvalue `λ_{n,l}(a)` by shooting.
pub fn solve_shooting(a: f64, n: u32, l: u32, opts: &ShootingOptions) -> Result<EigenResult> {
    solve_shooting_operator(&RadialOperator::cornell(a, l)?, n, opts)
}

/// Eigenvalue with `n` radial nodes of an arbitrary [`RadialOperator`].
pub fn solve_shooting_operator(
    op: &RadialOperator,
    n: u32,
    opts: &ShootingOptions,
) -> Result<EigenResult> {
    opts.validate()?;
    let target = n as usize;
    let floor = op.spectrum_floor();
    let mut lo = floor - 1e-3 * (1.0 + floor.abs());

    // grow the upper end until it lies above level n
    let (mut hi, xi_max, xi_start) = if op.is_confining() {
        let l = op.l() as f64;
        let estimate = (1.5 * std::f64::consts::PI * (n as f64 + 0.5 * l + 0.75))
            .powf(2.0 / 3.0)
            .max(1.0);
        let cap = 10.0 * estimate;
        let mut hi = estimate;
        loop {
            // an estimate below the bottom of the well has no turning point
            if let Some(tp) = op.outer_turning_point(hi) {
                let xi_max = tp + opts.xi_margin;
                let xi_start = start_point(op, hi, opts);
                if count_nodes(op, hi, xi_start, xi_max, opts.step) > target {
                    break (hi, xi_max, xi_start);
                }
            }
            if hi >= cap {
                return Err(Error::Search(format!(
                    "level n={n} not bracketed below lambda = {cap}"
                )));
            }
            hi = (1.5 * hi + 1.0).min(cap);
        }
    } else {
        let mut hi = 0.5 * floor;
        let mut tries = 0;
        loop {
            let xi_max = outer_limit(op, hi, opts)?;
            let xi_start = start_point(op, hi, opts);
            if count_nodes(op, hi, xi_start, xi_max, opts.step) > target {
                break (hi, xi_max, xi_start);
            }
            tries += 1;
            if tries > 60 {
                return Err(Error::Search(format!("level n={n} not bracketed below 0")));
            }
            hi *= 0.5;
        }
    };

    let nodes_lo = count_nodes(op, lo, xi_start, xi_max, opts.step);
    if nodes_lo > target {
        return Err(Error::Search(format!(
            "lower bracket {lo} already has {nodes_lo} nodes"
        )));
    }

    let mut iterations = 0;
    while hi - lo > opts.tolerance * hi.abs().max(1.0) {
        if iterations >= opts.max_iter {
            return Err(Error::Search(format!(
                "bisection did not converge in {} iterations (bracket [{lo}, {hi}])",
                opts.max_iter
            )));
        }
        iterations += 1;
        let mid = 0.5 * (lo + hi);
        if count_nodes(op, mid, xi_start, xi_max, opts.step) > target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let lambda = 0.5 * (lo + hi);
    let method = Method::Shooting;
    Ok(EigenResult {
        lambda,
        method,
        n,
        l: op.l(),
        a: op.a(),
        diagnostics: Diagnostics {
            iterations,
            residual: hi - lo,
            nodes: Some(count_nodes(op, lo, xi_start, xi_max, opts.step)),
            basis_truncation: None,
        },
    })
}
