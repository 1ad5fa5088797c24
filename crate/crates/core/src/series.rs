//! Power-series solution `R(ξ) = Σ c_i ξ^{i+l+1}` of the dimensionless radial
//! equation, with three equivalent routes to the coefficients:
//!
//! * the scalar recurrence `j (j + 2l + 1) c_j = -a c_{j-1} - λ c_{j-2} + c_{j-3}`,
//! * the ratio `c_i = (-1)^i det A_i / det B_i c_0` of banded determinants,
//! * `det A_i` rewritten as a terminating continued fraction.
//!
//! The recurrence is the production path; the determinant forms exist as
//! independent cross-checks and are pinned to it by tests.

use crate::error::{domain, Error, Result};

/// Inputs of the series: Coulomb strength `a`, orbital index `l`, trial eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesParams {
    a: f64,
    l: u32,
    lambda: f64,
}

impl SeriesParams {
    pub fn new(a: f64, l: u32, lambda: f64) -> Result<Self> {
        if !(a >= 0.0) || !a.is_finite() {
            return domain(format!(
                "series parameter a must be finite and >= 0, got {a}"
            ));
        }
        if !lambda.is_finite() {
            return domain("series eigenvalue must be finite");
        }
        Ok(Self { a, l, lambda })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Superdiagonal entry `p (p + 1 + 2l)` of the determinant matrix; also the
    /// j-th factor of `det B`.
    fn band(&self, p: usize) -> f64 {
        let p = p as f64;
        p * (p + 1.0 + 2.0 * self.l as f64)
    }
}

/// Coefficients `c_0..c_{count-1}` of `ξ^{i+l+1}`, normalized to `c_0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoefficients {
    c: Vec<f64>,
    params: SeriesParams,
}

impl SeriesCoefficients {
    pub fn params(&self) -> SeriesParams {
        self.params
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.c
    }

    pub fn count(&self) -> usize {
        self.c.len()
    }

    /// Wraps an explicit coefficient list (for example a hand-built truncation).
    pub fn from_raw(c: Vec<f64>, params: SeriesParams) -> Result<Self> {
        if c.is_empty() {
            return domain("coefficient sequence must be non-empty");
        }
        if c.iter().any(|v| !v.is_finite()) {
            return Err(Error::Numerical("non-finite series coefficient".into()));
        }
        Ok(Self { c, params })
    }
}

/// Default truncation used by the wavefunction helpers.
pub const DEFAULT_TERMS: usize = 120;

/// Ratio of the last retained term to the largest term below which a
/// truncated evaluation is reported as converged.
pub const CONVERGED_TAIL: f64 = 1e-10;

/// Coefficients from the scalar recurrence.
pub fn coefficients_by_recurrence(
    params: SeriesParams,
    count: usize,
) -> Result<SeriesCoefficients> {
    if count == 0 {
        return domain("coefficient count must be >= 1");
    }
    let mut c = Vec::with_capacity(count);
    c.push(1.0);
    let at = |c: &Vec<f64>, j: usize, back: usize| if j >= back { c[j - back] } else { 0.0 };
    for j in 1..count {
        let v = (-params.a * at(&c, j, 1) - params.lambda * at(&c, j, 2) + at(&c, j, 3))
            / params.band(j);
        if !v.is_finite() {
            return Err(Error::Numerical(format!(
                "series coefficient {j} is not finite"
            )));
        }
        c.push(v);
    }
    Ok(SeriesCoefficients { c, params })
}

/// `det B_i = i! Π_{j=1..i} (2l + j + 1)`.
pub fn det_b(i: usize, l: u32) -> Result<f64> {
    if i == 0 {
        return domain("det B index must be >= 1");
    }
    let two_l = 2.0 * l as f64;
    let mut prod = 1.0f64;
    for j in 1..=i {
        let jf = j as f64;
        prod *= jf * (two_l + jf + 1.0);
        if !prod.is_finite() {
            return Err(Error::Overflow { index: j });
        }
    }
    Ok(prod)
}

/// `det A_i` of the `i × i` lower-Hessenberg band matrix with superdiagonal
/// `p (p + 1 + 2l)`, diagonal `a`, first subdiagonal `λ` and second
/// subdiagonal `-1`.
///
/// Expanding along the last row gives
/// `D_i = a D_{i-1} - λ s_{i-1} D_{i-2} - s_{i-2} s_{i-1} D_{i-3}`.
pub fn det_a_matrix(i: usize, params: &SeriesParams) -> Result<f64> {
    if i == 0 {
        return domain("det A index must be >= 1");
    }
    // d[k] = D_k with D_0 = 1 and D_{-1} = D_{-2} = 0
    let (mut d3, mut d2, mut d1) = (0.0, 0.0, 1.0);
    for k in 1..=i {
        let s1 = if k >= 2 { params.band(k - 1) } else { 0.0 };
        let s2 = if k >= 3 { params.band(k - 2) } else { 0.0 };
        let dk = params.a * d1 - params.lambda * s1 * d2 - s2 * s1 * d3;
        d3 = d2;
        d2 = d1;
        d1 = dk;
    }
    Ok(d1)
}

/// Result of the continued-fraction evaluation of `det A_i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuedFractionDet {
    pub value: f64,
    /// A partial denominator vanished and the value came from [`det_a_matrix`].
    pub fell_back: bool,
}

/// `det A_i` from the terminating continued fraction
/// `a + K_{s=2..i} (a_s / a)`, cleared of its denominators.
///
/// The partial numerators are built bottom-up:
/// `a_i = -λ s_{i-1}` and, for `m < i`,
/// `a_m = -s_{m-1} ( s_m / (a + K_{m+2}) + λ )`, where
/// `K_m = a_m / (a + K_{m+1})` is the tail starting at `m` and `K_{i+1} = 0`.
/// Writing `T_m = a + K_m`, the numerator form is `Π_{m=2..i+1} T_m`.
pub fn det_a_cf(i: usize, params: &SeriesParams) -> Result<ContinuedFractionDet> {
    if i == 0 {
        return domain("det A index must be >= 1");
    }
    let a = params.a;
    let lambda = params.lambda;
    // tails[m] = T_m for m in 2..=i+1
    let mut tails = vec![0.0; i + 2];
    tails[i + 1] = a;
    for m in (2..=i).rev() {
        let numerator = if m == i {
            -lambda * params.band(i - 1)
        } else {
            -params.band(m - 1) * (params.band(m) / tails[m + 2] + lambda)
        };
        let t = a + numerator / tails[m + 1];
        tails[m] = t;
    }
    let value: f64 = tails[2..].iter().product();
    // T_2 itself is never a denominator.
    let degenerate = tails[3..].iter().any(|t| *t == 0.0 || !t.is_finite()) || !value.is_finite();
    if degenerate {
        return Ok(ContinuedFractionDet {
            value: det_a_matrix(i, params)?,
            fell_back: true,
        });
    }
    Ok(ContinuedFractionDet {
        value,
        fell_back: false,
    })
}

/// A truncated-series evaluation with its tail diagnostic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    /// `|c_last ξ^{last+l+1}| / max_i |c_i ξ^{i+l+1}|`.
    pub tail_ratio: f64,
}

impl SeriesValue {
    pub fn converged(&self) -> bool {
        self.tail_ratio <= CONVERGED_TAIL
    }
}

/// `R(ξ) = Σ c_i ξ^{i+l+1}` by Horner's scheme.
pub fn radial_wavefunction(coeffs: &SeriesCoefficients, xi: f64) -> Result<SeriesValue> {
    if !(xi > 0.0) || !xi.is_finite() {
        return domain(format!("series argument must be positive, got {xi}"));
    }
    let c = &coeffs.c;
    let mut acc = 0.0;
    for &ci in c.iter().rev() {
        acc = acc * xi + ci;
    }
    let lead = xi.powi(coeffs.params.l as i32 + 1);
    let mut max_term = 0.0f64;
    let mut power = lead;
    let mut last = 0.0;
    for &ci in c {
        last = (ci * power).abs();
        max_term = max_term.max(last);
        power *= xi;
    }
    let tail_ratio = if max_term > 0.0 { last / max_term } else { 0.0 };
    Ok(SeriesValue {
        value: acc * lead,
        tail_ratio,
    })
}

/// `R'(ξ)` and `R''(ξ)` by term-wise differentiation.
pub fn radial_derivatives(coeffs: &SeriesCoefficients, xi: f64) -> Result<(f64, f64, f64)> {
    if !(xi > 0.0) || !xi.is_finite() {
        return domain(format!("series argument must be positive, got {xi}"));
    }
    let l = coeffs.params.l as f64;
    let (mut r, mut dr, mut d2r) = (0.0, 0.0, 0.0);
    let mut power = xi.powi(coeffs.params.l as i32 - 1); // ξ^{i+l-1} at i = 0
    for (i, &ci) in coeffs.c.iter().enumerate() {
        let e = i as f64 + l + 1.0;
        r += ci * power * xi * xi;
        dr += ci * e * power * xi;
        d2r += ci * e * (e - 1.0) * power;
        power *= xi;
    }
    Ok((r, dr, d2r))
}

/// Pointwise residual `-R'' + [l(l+1)/ξ² + ξ - a/ξ - λ] R` of the truncated series.
pub fn ode_residual(coeffs: &SeriesCoefficients, xi: f64) -> Result<f64> {
    let (r, _, d2r) = radial_derivatives(coeffs, xi)?;
    let p = coeffs.params;
    let l = p.l as f64;
    let q = l * (l + 1.0) / (xi * xi) + xi - p.a / xi - p.lambda;
    Ok(-d2r + q * r)
}
