//! Closed-form approximations to `λ_{nl}`: the interpolating Airy-zero
//! formula for the linear potential, its large-quantum-number expansion,
//! Regge-type asymptotics, a WKB reference, and the Cornell fit.

use std::f64::consts::PI;

use crate::airy::airy_zero_k;
use crate::error::{domain, Error, Result};

/// Fitted interpolation constants for [`lambda_linear`] and
/// [`lambda_linear_expanded`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaConstants {
    pub delta1: f64,
    pub delta2: f64,
    /// Common value used by the expanded formula, close to `√(2/π)`.
    pub delta: f64,
}

impl Default for DeltaConstants {
    fn default() -> Self {
        Self {
            delta1: 0.797533,
            delta2: 0.797804,
            delta: 0.798,
        }
    }
}

/// `π^{2/3} / 3^{1/3}`, the weight of `n` relative to `l`.
fn radial_weight() -> f64 {
    PI.powf(2.0 / 3.0) / 3f64.cbrt()
}

/// Interpolating formula for the pure linear potential. Exact at `l = 0`.
pub fn lambda_linear(n: u32, l: u32, consts: &DeltaConstants) -> Result<f64> {
    Ok(linear_ratio(n, l, consts) * -airy_zero_k(l + n + 1)?)
}

fn linear_ratio(n: u32, l: u32, consts: &DeltaConstants) -> f64 {
    let (n, l) = (n as f64, l as f64);
    let c = radial_weight();
    let radial = c * (consts.delta2 * n);
    let num = consts.delta1 * l + radial + 1.0;
    let den = c * (consts.delta1 * l) + radial + 1.0;
    num / den
}

/// [`lambda_linear`] with the Airy zero replaced by its leading asymptotic
/// form and a single `delta`.
pub fn lambda_linear_expanded(n: u32, l: u32, delta: f64) -> f64 {
    let (n, l) = (n as f64, l as f64);
    let k = (3.0 * PI).powf(2.0 / 3.0) / 3.0;
    let lead = (12.0 * PI).powf(2.0 / 3.0) / 4.0 * (l + n + 0.75).powf(2.0 / 3.0);
    lead * (delta * (l + k * n) + 1.0) / (k * delta * (l + n) + 1.0)
}

/// WKB reference `[(3π/2)(n + l/2 + 3/4)]^{2/3}`.
pub fn wkb_linear(n: u32, l: u32) -> f64 {
    (1.5 * PI * (n as f64 + 0.5 * l as f64 + 0.75)).powf(2.0 / 3.0)
}

/// Leading large-`n` behaviour `[(3π/2) n]^{2/3}`.
pub fn regge_n(n: f64) -> f64 {
    (1.5 * PI * n).powf(2.0 / 3.0)
}

/// `[(3π/2)(n + l)]^{2/3}`.
pub fn regge_nl(n: f64, l: f64) -> f64 {
    regge_n(n + l)
}

/// Leading large-`l` behaviour `[(3^{3/2}/2) l]^{2/3}`.
pub fn regge_l(l: f64) -> f64 {
    (3f64.powf(1.5) / 2.0 * l).powf(2.0 / 3.0)
}

/// `[(3^{3/2}/2)(l + n)]^{2/3}`.
pub fn regge_ln(l: f64, n: f64) -> f64 {
    regge_l(l + n)
}

/// Published constants of the Cornell fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornellFitConstants {
    pub al: [f64; 5],
    pub bl: [f64; 5],
    pub cl: [f64; 5],
    pub dl: [f64; 5],
    pub an: [f64; 2],
    pub bn: [f64; 2],
    pub cn: [f64; 2],
    pub dn: [f64; 2],
    pub en: [f64; 2],
    pub f1: f64,
    pub f2: f64,
}

impl CornellFitConstants {
    pub const PUBLISHED: Self = Self {
        al: [-0.0131096, -0.0526298, 0.000656495, 5.04779, 1.59813],
        bl: [0.214579, -0.0439848, 0.00362465, -0.22573, 0.839639],
        cl: [-0.689677, -1.91553, -0.274089, 4.19812, 0.75866],
        // last entry is printed with an `al` label in the source list
        dl: [0.365051, 0.148248, 0.0362142, 1.43633, 0.621341],
        an: [0.254949, 0.500001],
        bn: [1.29783, 0.77],
        cn: [0.0400669, 1.61998],
        dn: [0.433161, 1.92501],
        en: [0.4, 0.520996],
        f1: 0.00685891,
        f2: 8.47589,
    };
}

impl Default for CornellFitConstants {
    fn default() -> Self {
        Self::PUBLISHED
    }
}

const DENOMINATOR_FLOOR: f64 = 1e-9;

fn guarded(num: f64, den: f64, what: &str) -> Result<f64> {
    if den.abs() < DENOMINATOR_FLOOR {
        return Err(Error::Numerical(format!(
            "Cornell fit denominator {what} = {den:e} is too close to zero"
        )));
    }
    Ok(num / den)
}

/// `(k1 + k2 x^p + k3 y^q) / (k4 x^p + k5 y^q + 1)`.
fn rational(k: &[f64; 5], x: f64, p: f64, y: f64, q: f64, what: &str) -> Result<f64> {
    let (xp, yq) = (x.powf(p), y.powf(q));
    guarded(
        k[0] + k[1] * xp + k[2] * yq,
        k[3] * xp + k[4] * yq + 1.0,
        what,
    )
}

/// Multiplicative correction to the linear-potential eigenvalue.
/// Equals 1 at `a = 0`.
pub fn cornell_f(a: f64, n: u32, l: u32, c: &CornellFitConstants) -> Result<f64> {
    check_strength(a)?;
    let (n, l) = (n as f64, l as f64);
    let s = a.powf(0.4);
    let shift = |k: f64| k * n + l;
    let r1 = rational(&c.al, shift(c.an[0]), 1.5, shift(c.an[1]), 3.0, "al")?;
    let r2 = rational(&c.bl, shift(c.bn[0]), 0.5, shift(c.bn[1]), 1.0, "bl")?;
    let r3 = rational(&c.cl, shift(c.cn[0]), 2.0, shift(c.cn[1]), 4.0, "cl")?;
    let r4 = rational(&c.dl, shift(c.dn[0]), 1.0, shift(c.dn[1]), 2.0, "dl")?;
    // grows with n; the printed fraction is upside down (see README)
    let tail = (c.en[1] * n + 1.0) / (c.en[0] * n + 1.0);
    let ratio = guarded((r1 + r2 * s) * s, (r3 + r4 * s) * s + tail, "f")?;
    Ok(1.0 - ratio)
}

/// Additive offset `f1 (1 - e^{-f2 a})`.
pub fn cornell_g(a: f64, c: &CornellFitConstants) -> Result<f64> {
    check_strength(a)?;
    Ok(c.f1 * (1.0 - (-c.f2 * a).exp()))
}

/// Coulomb term plus corrected linear term plus offset.
/// Reduces to [`lambda_linear`] at `a = 0`.
pub fn cornell_eigenvalue(
    a: f64,
    n: u32,
    l: u32,
    delta: &DeltaConstants,
    fit: &CornellFitConstants,
) -> Result<f64> {
    check_strength(a)?;
    let big_n = (n + l + 1) as f64;
    let coulomb = -a * a / (4.0 * big_n * big_n);
    Ok(coulomb + lambda_linear(n, l, delta)? * cornell_f(a, n, l, fit)? + cornell_g(a, fit)?)
}

fn check_strength(a: f64) -> Result<()> {
    if !(a >= 0.0) || !a.is_finite() {
        return domain(format!(
            "Coulomb strength a must be finite and >= 0, got {a}"
        ));
    }
    Ok(())
}
