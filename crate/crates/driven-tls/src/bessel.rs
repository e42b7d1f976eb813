//! Bessel functions of the first kind `J_n(x)` for integer order.
//!
//! Two regimes: the ascending power series for `|x| < 12` (safe for every
//! order there, since the term ratio is bounded by `(x/2)²/n`), and Miller's
//! backward recurrence with the `J₀ + 2ΣJ₂ₖ = 1` normalization otherwise.
//! Backward recurrence keeps full relative accuracy for orders past the
//! turning point `n ≈ x`, which the renormalization sums and the
//! coherent-destruction analysis both rely on.

use crate::error::{Error, Result};

/// Largest accepted |order|.
pub const MAX_ORDER: u32 = 10_000;

const SERIES_CUTOFF: f64 = 12.0;

/// `J_n(x)` for integer `n` (may be negative), absolute accuracy ~1e-13 for
/// `|x| ≤ 1e3`.
///
/// Uses the reflections `J_{-n}(x) = (-1)^n J_n(x)` and
/// `J_n(-x) = (-1)^n J_n(x)` to reduce to `n ≥ 0, x ≥ 0`.
pub fn bessel_j(n: i32, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain("bessel_j: x must be finite"));
    }
    if n.unsigned_abs() > MAX_ORDER {
        return Err(Error::domain(format!(
            "bessel_j: |n| must be at most {MAX_ORDER}, got {n}"
        )));
    }
    let mut sign = 1.0;
    let nn = if n < 0 {
        if n % 2 != 0 {
            sign = -sign;
        }
        n.unsigned_abs()
    } else {
        n as u32
    };
    let xx = if x < 0.0 {
        if nn % 2 != 0 {
            sign = -sign;
        }
        -x
    } else {
        x
    };
    Ok(sign * j_core(nn, xx))
}

/// `J_0 .. J_{n_max}` at once (one Miller ladder for large `x`).
pub fn bessel_j_ladder(n_max: u32, x: f64) -> Result<Vec<f64>> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain("bessel_j_ladder: x must be finite and non-negative"));
    }
    if n_max > MAX_ORDER {
        return Err(Error::domain(format!(
            "bessel_j_ladder: n_max must be at most {MAX_ORDER}"
        )));
    }
    if x < SERIES_CUTOFF {
        Ok((0..=n_max).map(|n| series_jn(n, x)).collect())
    } else {
        Ok(miller_ladder(n_max, x))
    }
}

/// Leading asymptotic form `√(2/(πx))·cos(x − nπ/2 − π/4)`, valid for `x ≫ n²`.
pub fn bessel_j_asymptotic(n: i32, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain("bessel_j_asymptotic: x must be positive"));
    }
    let phase = x - (n as f64) * std::f64::consts::FRAC_PI_2 - std::f64::consts::FRAC_PI_4;
    Ok((2.0 / (std::f64::consts::PI * x)).sqrt() * phase.cos())
}

/// Approximate m-th zero of `J₀` used as the coherent-destruction drive
/// ratio: `α_m = mπ − π/4`.
pub fn cdt_driving_ratio(m: u32) -> Result<f64> {
    if m < 1 {
        return Err(Error::domain("cdt_driving_ratio: m must be at least 1"));
    }
    Ok((m as f64) * std::f64::consts::PI - std::f64::consts::FRAC_PI_4)
}

fn j_core(n: u32, x: f64) -> f64 {
    if x == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    if x < SERIES_CUTOFF {
        series_jn(n, x)
    } else {
        *miller_ladder(n, x).last().unwrap()
    }
}

/// Ascending series Σ_m (-1)^m (x/2)^{n+2m} / (m!(n+m)!). For x < 12 the
/// largest term is bounded and cancellation costs at most ~4 digits.
fn series_jn(n: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    let q = half * half;
    // leading term (x/2)^n / n!, with underflow cut: terms only shrink after it
    let mut term = 1.0_f64;
    for k in 1..=n {
        term *= half / k as f64;
        if term < 1e-320 {
            return 0.0;
        }
    }
    let mut sum = term;
    for m in 1..400 {
        term *= -q / ((m as f64) * (n as f64 + m as f64));
        sum += term;
        if term.abs() < sum.abs() * 1e-17 + 1e-305 {
            break;
        }
    }
    sum
}

/// Miller backward recurrence from a start order high enough that the
/// contamination of the dominant solution has decayed below 1e-18 by the
/// time it reaches `n` (start = turning point + ~14·x^(1/3) Airy widths).
fn miller_ladder(n_max: u32, x: f64) -> Vec<f64> {
    let big = (n_max as f64).max(x.ceil());
    let start = big as u32 + 16 + (14.0 * big.cbrt()) as u32;
    let mut out = vec![0.0_f64; n_max as usize + 1];

    let mut j_hi = 0.0_f64; // J_{k+1}, unnormalized
    let mut j_cur = 1.0e-30_f64; // J_k at k = start
    let mut norm = 0.0_f64; // accumulates J_0 + 2 Σ J_{2k}; J_0 double-count fixed below
    if start % 2 == 0 {
        norm = 2.0 * j_cur;
    }
    if start <= n_max {
        out[start as usize] = j_cur;
    }
    for k in (1..=start).rev() {
        let j_lo = (2.0 * k as f64 / x) * j_cur - j_hi;
        j_hi = j_cur;
        j_cur = j_lo;
        let ord = k - 1;
        if ord <= n_max {
            out[ord as usize] = j_cur;
        }
        if ord % 2 == 0 {
            norm += 2.0 * j_cur;
        }
        if j_cur.abs() > 1e250 {
            j_cur *= 1e-250;
            j_hi *= 1e-250;
            norm *= 1e-250;
            for v in out.iter_mut() {
                *v *= 1e-250;
            }
        }
    }
    norm -= j_cur; // j_cur is now the unnormalized J_0
    for v in out.iter_mut() {
        *v /= norm;
    }
    out
}
