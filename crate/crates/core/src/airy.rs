//! The Airy function `Ai`, its derivative, and the negative real zeros of `Ai`.
//!
//! Evaluation is split by region of the real axis:
//!
//! * `-4.5 <= x <= 2.5`: Maclaurin series around the origin.
//! * `-8.5 < x < -4.5`: Taylor continuation of the Airy equation from the
//!   Maclaurin value at `x = -4.5`, in sub-steps of at most 0.5.
//! * `x <= -8.5`: oscillatory asymptotic expansion (modulus and phase form).
//! * `x > 2.5`: `Ai(x) = sqrt(x/3) K_{1/3}(zeta) / pi` with the modified Bessel
//!   function from Steed's continued fraction (Temme's CF2).
//!
//! Every region reaches an absolute error near `1e-14` for `|x| <= 20`.

use std::f64::consts::{FRAC_PI_4, PI};

use crate::error::{domain, Result};

/// `Ai(0) = 3^{-2/3} / Gamma(2/3)`.
const AI0: f64 = 0.355_028_053_887_817_24;
/// `-Ai'(0) = 3^{-1/3} / Gamma(1/3)`.
const AIP0: f64 = 0.258_819_403_792_806_8;

const MACLAURIN_NEG: f64 = -4.5;
const MACLAURIN_POS: f64 = 2.5;
const ASYMPTOTIC_NEG: f64 = -8.5;
const CONTINUATION_STEP: f64 = 0.5;

/// 1-based index of a negative zero of `Ai`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AiryZeroIndex(u32);

impl AiryZeroIndex {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return domain("Airy zero index must be >= 1");
        }
        Ok(Self(k))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// `Ai(x)`.
pub fn airy_ai(x: f64) -> Result<f64> {
    Ok(ai_and_derivative(x)?.0)
}

/// `Ai'(x)`.
pub fn airy_ai_prime(x: f64) -> Result<f64> {
    Ok(ai_and_derivative(x)?.1)
}

/// `(Ai(x), Ai'(x))` evaluated together; both share the same expansion.
pub fn ai_and_derivative(x: f64) -> Result<(f64, f64)> {
    if !x.is_finite() {
        return domain(format!("Airy function argument must be finite, got {x}"));
    }
    Ok(if (MACLAURIN_NEG..=MACLAURIN_POS).contains(&x) {
        maclaurin(x)
    } else if x > MACLAURIN_POS {
        bessel_k_form(x)
    } else if x > ASYMPTOTIC_NEG {
        let (y0, d0) = maclaurin(MACLAURIN_NEG);
        taylor_continue(MACLAURIN_NEG, y0, d0, x)
    } else {
        asymptotic_negative(-x)
    })
}

fn maclaurin(x: f64) -> (f64, f64) {
    // Ai = c1 f - c2 g with f = sum 3^k (1/3)_k x^{3k}/(3k)!, g = sum 3^k (2/3)_k x^{3k+1}/(3k+1)!
    let x3 = x * x * x;
    let mut f = 1.0;
    let mut g = x;
    let mut df = 0.0;
    let mut dg = 1.0;
    let mut tf = 1.0;
    let mut tg = x;
    let mut tdf = x * x / 2.0;
    let mut tdg = 1.0;
    df += tdf;
    for k in 1..200 {
        let kf = k as f64;
        tf *= x3 / ((3.0 * kf - 1.0) * (3.0 * kf));
        tg *= x3 / ((3.0 * kf) * (3.0 * kf + 1.0));
        tdg *= x3 / ((3.0 * kf - 2.0) * (3.0 * kf));
        f += tf;
        g += tg;
        dg += tdg;
        if k >= 2 {
            tdf *= x3 / ((3.0 * kf - 3.0) * (3.0 * kf - 1.0));
            df += tdf;
        }
        let scale = f.abs().max(g.abs()).max(1.0);
        if tf.abs().max(tg.abs()).max(tdf.abs()).max(tdg.abs()) < 1e-18 * scale {
            break;
        }
    }
    (AI0 * f - AIP0 * g, AI0 * df - AIP0 * dg)
}

/// Integrates `y'' = x y` from `(x0, y0, y0')` to `x` by local Taylor series.
fn taylor_continue(x0: f64, y0: f64, d0: f64, x: f64) -> (f64, f64) {
    let steps = ((x - x0).abs() / CONTINUATION_STEP).ceil().max(1.0) as usize;
    let h = (x - x0) / steps as f64;
    let (mut xc, mut y, mut d) = (x0, y0, d0);
    for _ in 0..steps {
        let (ny, nd) = taylor_step(xc, y, d, h);
        xc += h;
        y = ny;
        d = nd;
    }
    (y, d)
}

fn taylor_step(x0: f64, y0: f64, d0: f64, h: f64) -> (f64, f64) {
    // (k+2)(k+1) c_{k+2} = x0 c_k + c_{k-1}
    let mut c = [y0, d0, 0.5 * x0 * y0];
    let mut y = c[0] + c[1] * h + c[2] * h * h;
    let mut d = c[1] + 2.0 * c[2] * h;
    let mut hk = h * h; // h^{k} for the newest coefficient index k = 2
    for k in 1..120usize {
        let next = (x0 * c[1] + c[0]) / (((k + 1) * (k + 2)) as f64);
        let idx = k + 2;
        let term_d = idx as f64 * next * hk;
        hk *= h;
        let term = next * hk;
        y += term;
        d += term_d;
        c = [c[1], c[2], next];
        if k > 4
            && term.abs() < 1e-18 * y.abs().max(1e-300)
            && term_d.abs() < 1e-18 * d.abs().max(1e-300)
        {
            break;
        }
    }
    (y, d)
}

/// Asymptotic coefficients `u_k` (for `Ai`) and `v_k` (for `Ai'`).
fn asymptotic_coefficients(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut u = Vec::with_capacity(n);
    let mut v = Vec::with_capacity(n);
    u.push(1.0);
    v.push(1.0);
    for k in 1..n {
        let kf = k as f64;
        let next = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
        u.push(next);
        v.push(-(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * next);
    }
    (u, v)
}

/// `Ai(-z), Ai'(-z)` for large positive `z`.
fn asymptotic_negative(z: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * z * z.sqrt();
    let (u, v) = asymptotic_coefficients(60);
    // P = sum (-1)^k c_{2k} zeta^{-2k}, Q = sum (-1)^k c_{2k+1} zeta^{-2k-1}
    let (p, q) = alternating_pairs(&u, zeta);
    let (pd, qd) = alternating_pairs(&v, zeta);
    let theta = zeta + FRAC_PI_4;
    let (s, c) = theta.sin_cos();
    let pre = 1.0 / (PI.sqrt() * z.powf(0.25));
    let ai = pre * (s * p - c * q);
    let aip = -z.powf(0.25) / PI.sqrt() * (c * pd + s * qd);
    (ai, aip)
}

fn alternating_pairs(coef: &[f64], zeta: f64) -> (f64, f64) {
    let mut even = 0.0;
    let mut odd = 0.0;
    let mut pow = 1.0;
    let mut last = f64::INFINITY;
    for (k, &ck) in coef.iter().enumerate() {
        let term = ck * pow;
        if term.abs() > last || term.abs() < 1e-17 {
            break;
        }
        last = term.abs();
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            even += sign * term;
        } else {
            odd += sign * term;
        }
        pow /= zeta;
    }
    (even, odd)
}

/// `Ai`, `Ai'` through `K_{1/3}` and `K_{2/3}` for `x > 2.5`.
fn bessel_k_form(x: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * x * x.sqrt();
    let (k13, k43) = bessel_k_steed(1.0 / 3.0, zeta);
    let k23 = k43 - 2.0 / (3.0 * zeta) * k13;
    let ai = (x / 3.0).sqrt() / PI * k13;
    let aip = -x / (PI * 3f64.sqrt()) * k23;
    (ai, aip)
}

/// `(K_nu(x), K_{nu+1}(x))` for `|nu| <= 1/2`, `x >= 2`, by Steed's method
/// applied to Temme's continued fraction.
fn bessel_k_steed(nu: f64, x: f64) -> (f64, f64) {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - nu * nu;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 1..10_000 {
        let fi = i as f64;
        a -= 2.0 * fi;
        c = -a * c / (fi + 1.0);
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-17 {
            break;
        }
    }
    let h = a1 * h;
    let k_nu = (PI / (2.0 * x)).sqrt() * (-x).exp() / s;
    let k_nu1 = k_nu * (nu + x + 0.5 - h) / x;
    (k_nu, k_nu1)
}

/// Standard first-order estimate `-[3 pi (4k - 1) / 8]^{2/3}` of the k-th zero.
pub fn airy_zero_estimate(k: AiryZeroIndex) -> f64 {
    let t = 3.0 * PI * (4.0 * k.get() as f64 - 1.0) / 8.0;
    -t.powf(2.0 / 3.0)
}

/// The k-th negative zero `a_k` of `Ai`.
///
/// Newton iteration from [`airy_zero_estimate`]; if an iterate leaves the
/// bracket `(seed - 1, seed + 1)` the root is finished by bisection.
pub fn airy_zero(k: AiryZeroIndex) -> Result<f64> {
    let seed = airy_zero_estimate(k);
    // zeros are spaced by more than 1 for k >= 2; the first lies at 2.34 - 0.02
    let (lo, hi) = (seed - 1.0, (seed + 1.0).min(-1.0));
    let mut x = seed;
    for _ in 0..60 {
        let (f, df) = ai_and_derivative(x)?;
        let next = x - f / df;
        if !(lo..=hi).contains(&next) || !next.is_finite() {
            return bisect_zero(lo, hi);
        }
        let done = (next - x).abs() <= 1e-15 * x.abs();
        x = next;
        if done {
            return Ok(x);
        }
    }
    Ok(x)
}

fn bisect_zero(mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut flo = airy_ai(lo)?;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = airy_ai(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 * mid.abs() {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Convenience wrapper taking the raw 1-based index.
pub fn airy_zero_k(k: u32) -> Result<f64> {
    airy_zero(AiryZeroIndex::new(k)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference values: mpmath.airyai at 30 digits.
    const REFERENCE: &[(f64, f64, f64)] = &[
        (0.0, 0.355_028_053_887_817_24, -0.258_819_403_792_806_8),
        (-1.0, 0.535_560_883_292_352_1, -0.010_160_567_116_645_209),
        (1.0, 0.135_292_416_312_881_42, -0.159_147_441_296_793_2),
        (2.5, 0.015_725_923_380_470_49, -0.026_250_881_035_903_23),
        (2.6, 0.013_289_282_529_671_482, -0.022_561_310_886_108_745),
        (3.0, 0.006_591_139_357_460_719, -0.011_912_976_705_951_318),
        (5.0, 1.083_444_281_360_744_2e-4, -2.474_138_908_684_624_8e-4),
        (8.0, 4.692_207_616_099_231_6e-8, -1.341_439_297_906_786_6e-7),
        (
            20.0,
            1.691_672_868_670_540_3e-27,
            -7.586_391_625_748_355e-27,
        ),
        (-4.5, 0.292_152_781_055_959_47, -0.523_362_532_315_747_7),
        (-4.6, 0.337_495_975_489_462_7, -0.379_533_914_335_845_9),
        (-6.0, -0.329_145_173_629_823_1, 0.345_935_487_281_342_9),
        (-8.4, -0.319_592_189_726_198_07, 0.244_220_894_145_283_17),
        (-8.6, -0.313_112_452_617_262_6, -0.309_330_272_415_631_35),
        (-12.0, -0.066_555_175_054_373_13, 1.023_110_453_367_970_7),
        (-20.0, -0.176_406_127_077_989_7, 0.892_862_856_736_471_2),
    ];

    #[test]
    fn matches_reference_values() {
        for &(x, ai, aip) in REFERENCE {
            let (v, d) = ai_and_derivative(x).unwrap();
            assert!((v - ai).abs() <= 1e-12, "Ai({x}) = {v}, want {ai}");
            assert!((d - aip).abs() <= 1e-11, "Ai'({x}) = {d}, want {aip}");
        }
    }

    #[test]
    fn relative_accuracy_on_decaying_side() {
        let v = airy_ai(5.0).unwrap();
        assert!((v / 1.083_444_281_360_744_2e-4 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn near_first_zero() {
        assert!(airy_ai(-2.33811).unwrap().abs() < 5e-6);
        let d = airy_ai_prime(-2.33811).unwrap();
        assert!((d - 0.70121).abs() < 1e-4, "{d}");
    }

    #[test]
    fn derivative_decays_negative_on_positive_axis() {
        let mut prev = f64::NEG_INFINITY;
        for x in [5.0, 10.0, 20.0, 40.0] {
            let d = airy_ai_prime(x).unwrap();
            assert!(d < 0.0);
            assert!(d > prev);
            prev = d;
        }
    }

    #[test]
    fn rejects_non_finite() {
        assert!(airy_ai(f64::NAN).is_err());
        assert!(airy_ai_prime(f64::INFINITY).is_err());
        assert!(AiryZeroIndex::new(0).is_err());
    }

    #[test]
    fn known_zeros() {
        let known = [
            (1, -2.338_107_410_459_767),
            (2, -4.087_949_444_130_970_6),
            (3, -5.520_559_828_095_551),
            (10, -12.828_776_752_865_757),
            (30, -26.986_985_111_606_368),
            (50, -38.021_008_677_255_254),
            (101, -60.858_931_764_608_92),
        ];
        for (k, z) in known {
            let got = airy_zero_k(k).unwrap();
            assert!(((got - z) / z).abs() < 1e-12, "zero {k}: {got} vs {z}");
        }
    }

    #[test]
    fn zeros_are_simple_and_decreasing() {
        let mut prev = 0.0;
        for k in 1..=50 {
            let z = airy_zero_k(k).unwrap();
            assert!(z < prev);
            assert!(airy_ai(z).unwrap().abs() <= 1e-9);
            assert!(airy_ai_prime(z).unwrap() != 0.0);
            if k >= 5 {
                let est = airy_zero_estimate(AiryZeroIndex::new(k).unwrap());
                assert!((z - est).abs() <= 0.01);
            }
            prev = z;
        }
    }

    #[test]
    fn satisfies_airy_equation() {
        let h = 1e-3;
        let mut x = -10.0;
        while x <= 5.0 {
            let f = |t: f64| airy_ai(t).unwrap();
            let d2 = (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h)
                - f(x - 2.0 * h))
                / (12.0 * h * h);
            assert!((d2 - x * f(x)).abs() <= 1e-6, "x = {x}");
            x += 0.173;
        }
    }

    #[test]
    fn regions_join_continuously() {
        let pairs: [(f64, fn(f64) -> (f64, f64), fn(f64) -> (f64, f64)); 2] = [
            (MACLAURIN_POS, maclaurin, bessel_k_form),
            (
                ASYMPTOTIC_NEG,
                |x| {
                    let (y0, d0) = maclaurin(MACLAURIN_NEG);
                    taylor_continue(MACLAURIN_NEG, y0, d0, x)
                },
                |x| asymptotic_negative(-x),
            ),
        ];
        for (edge, left, right) in pairs {
            let (a, b) = (left(edge), right(edge));
            assert!((a.0 - b.0).abs() < 1e-13, "{edge}: {a:?} {b:?}");
            assert!((a.1 - b.1).abs() < 1e-12, "{edge}: {a:?} {b:?}");
        }
    }
}
