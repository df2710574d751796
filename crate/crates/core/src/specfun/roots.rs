//! Roots of the clamped-disk characteristic equation
//!
//!     J_m(k) I_m'(k) - J_m'(k) I_m(k) = 0,
//!
//! evaluated in the ratio form I_m'/I_m - J_m'/J_m to dodge the e^k growth
//! of I_m. Exactly one root lies between consecutive positive zeros of J_m,
//! which gives the brackets; bisection does the rest.

use super::{bessel_i_log_deriv, bessel_j, bessel_j_ratio, Result, SpecfunError, MAX_ORDER};

const ZERO_SCAN_STEP: f64 = 1.0; // < min gap between J_m zeros (~3.11)
const BISECT_TOL: f64 = 1e-12;

fn check_order(m: u32) -> Result<()> {
    if m > MAX_ORDER {
        return Err(SpecfunError::Domain(format!(
            "order {m} exceeds cap {MAX_ORDER}"
        )));
    }
    Ok(())
}

fn bisect<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    for _ in 0..200 {
        if hi - lo <= BISECT_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// First `count` positive zeros of J_m, by sign-change scan plus bisection.
pub fn bessel_j_zeros(m: u32, count: usize) -> Result<Vec<f64>> {
    check_order(m)?;
    let f = |x: f64| bessel_j(m, x).unwrap_or(f64::NAN);
    // start below the first zero: j_{m,1} > m + 1.85 m^{1/3}
    let mut x = if m == 0 {
        1.0
    } else {
        (m as f64 + 0.5 * (m as f64).cbrt()).max(0.5)
    };
    let mut prev = f(x);
    // J_m underflows to an exact 0 deep below the turning point; that region
    // carries no zeros, so treat it as positive.
    if prev == 0.0 {
        prev = 1.0;
    }
    let mut zeros = Vec::with_capacity(count);
    let mut guard = 0usize;
    while zeros.len() < count {
        let x_next = x + ZERO_SCAN_STEP;
        let val = f(x_next);
        if !val.is_nan() && val != 0.0 && (val > 0.0) != (prev > 0.0) {
            zeros.push(bisect(&|t| f(t), x, x_next));
            prev = val;
        } else if val != 0.0 {
            prev = val;
        }
        x = x_next;
        guard += 1;
        if guard > 100_000 {
            return Err(SpecfunError::Bracket { lo: x - 1.0, hi: x });
        }
    }
    Ok(zeros)
}

fn characteristic(m: u32, k: f64) -> f64 {
    let i_ratio = bessel_i_log_deriv(m, k).unwrap_or(f64::NAN);
    let j_ratio = bessel_j_ratio(m, k).unwrap_or(f64::NAN);
    i_ratio - j_ratio
}

fn root_between(m: u32, lo0: f64, hi0: f64) -> Result<f64> {
    let pad = 1e-9 * hi0.max(1.0);
    let (lo, hi) = (lo0 + pad, hi0 - pad);
    let f = |k: f64| characteristic(m, k);
    let (flo, fhi) = (f(lo), f(hi));
    if !(flo < 0.0 && fhi > 0.0) {
        return Err(SpecfunError::Bracket { lo: lo0, hi: hi0 });
    }
    Ok(bisect(&f, lo, hi))
}

/// First `count` positive roots of the clamped-disk characteristic equation
/// for angular order `m`, strictly increasing, each within 1e-12.
pub fn clamped_disk_roots(m: u32, count: usize) -> Result<Vec<f64>> {
    check_order(m)?;
    if count < 1 {
        return Err(SpecfunError::Domain("root count must be >= 1".into()));
    }
    let zeros = bessel_j_zeros(m, count + 1)?;
    let mut roots = Vec::with_capacity(count);
    for w in zeros.windows(2) {
        roots.push(root_between(m, w[0], w[1])?);
    }
    Ok(roots)
}

/// All characteristic roots with k <= k_max for order `m` (possibly empty).
pub fn clamped_disk_roots_below(m: u32, k_max: f64) -> Result<Vec<f64>> {
    check_order(m)?;
    let mut batch = 8;
    let mut zeros;
    loop {
        zeros = bessel_j_zeros(m, batch)?;
        if *zeros.last().unwrap() > k_max {
            break;
        }
        batch *= 2;
        if batch > 4096 {
            return Err(SpecfunError::Range(format!(
                "zero enumeration exhausted below k_max = {k_max}"
            )));
        }
    }
    let mut roots = Vec::new();
    for w in zeros.windows(2) {
        if w[0] > k_max {
            break;
        }
        let r = root_between(m, w[0], w[1])?;
        if r > k_max {
            break;
        }
        roots.push(r);
    }
    Ok(roots)
}
