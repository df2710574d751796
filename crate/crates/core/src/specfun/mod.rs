//! Self-contained special functions: Gamma, Bessel J_m and modified Bessel
//! I_m with derivatives, unit-ball volumes, and the characteristic roots of
//! the clamped disk.
//!
//! Everything here is a pure function of its inputs; no tables are shared.

mod bessel;
mod roots;

pub use bessel::{
    bessel_i, bessel_i_log_deriv, bessel_i_prime, bessel_j, bessel_j_prime, bessel_j_ratio,
};
pub use roots::{bessel_j_zeros, clamped_disk_roots, clamped_disk_roots_below};

use thiserror::Error;

/// Hard cap on the Bessel angular order; the disk spectrum enumeration never
/// needs more at desk scale.
pub const MAX_ORDER: u32 = 200;

/// Overflow guard for the modified Bessel series: e^x reaches f64::MAX near
/// x = 709, so evaluation is refused beyond this point.
pub const BESSEL_I_MAX_ARG: f64 = 700.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecfunError {
    #[error("argument outside domain: {0}")]
    Domain(String),
    #[error("argument outside supported range: {0}")]
    Range(String),
    #[error("no sign change while bracketing a root in [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, SpecfunError>;

/// Angular order of a Bessel function, capped at [`MAX_ORDER`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct BesselOrder(u32);

impl BesselOrder {
    pub fn new(m: u32) -> Result<Self> {
        if m > MAX_ORDER {
            return Err(SpecfunError::Domain(format!(
                "Bessel order {m} exceeds cap {MAX_ORDER}"
            )));
        }
        Ok(BesselOrder(m))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Volume of the unit ball in `n` dimensions, B_n = pi^{n/2} / Gamma(n/2 + 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitBallVolume {
    pub n: u32,
    pub value: f64,
}

impl UnitBallVolume {
    pub fn new(n: u32) -> Result<Self> {
        Ok(UnitBallVolume {
            n,
            value: unit_ball_volume(n)?,
        })
    }
}

/// B_n = pi^{n/2} / Gamma(n/2 + 1).
pub fn unit_ball_volume(n: u32) -> Result<f64> {
    if n < 1 {
        return Err(SpecfunError::Domain(format!(
            "unit ball dimension must be >= 1, got {n}"
        )));
    }
    let half = n as f64 / 2.0;
    Ok(std::f64::consts::PI.powf(half) / gamma(half + 1.0))
}

// Lanczos approximation, g = 7, n = 9 (Godfrey coefficients; the standard
// double-precision set).
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_sum(z: f64) -> f64 {
    let mut sum = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS[1..].iter().enumerate() {
        sum += c / (z + (i + 1) as f64);
    }
    sum
}

/// Gamma function for real arguments (poles at 0, -1, -2, ... return NaN).
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        if x == x.floor() {
            return f64::NAN;
        }
        return std::f64::consts::PI / ((std::f64::consts::PI * x).sin() * gamma(1.0 - x));
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    (2.0 * std::f64::consts::PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * lanczos_sum(z)
}

/// Natural log of Gamma for x > 0; stays finite where gamma() would overflow.
pub fn ln_gamma(x: f64) -> f64 {
    if x <= 0.0 {
        return f64::NAN;
    }
    if x < 0.5 {
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + lanczos_sum(z).ln()
}
