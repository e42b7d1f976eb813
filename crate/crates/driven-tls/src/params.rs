//! Drive parameters and method tags.
//!
//! The physics is governed by the dimensionless pairs `A/ω` and `Δ/ω`; all
//! routines accept the dimensionful triple and most callers set `ω = 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The physical triple (Δ, A, ω) of the harmonically driven two-level system:
/// static tunneling `−(Δ/2)σ_x` plus drive `−(A/2)cos(ωt)σ_z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveParams {
    delta: f64,
    amplitude: f64,
    omega: f64,
}

impl DriveParams {
    /// Validates `ω > 0`, `Δ ≥ 0`, `A ≥ 0`, all finite.
    pub fn new(delta: f64, amplitude: f64, omega: f64) -> Result<Self> {
        if !delta.is_finite() || !amplitude.is_finite() || !omega.is_finite() {
            return Err(Error::domain("drive parameters must be finite"));
        }
        if omega <= 0.0 {
            return Err(Error::domain(format!("omega must be positive, got {omega}")));
        }
        if delta < 0.0 {
            return Err(Error::domain(format!("delta must be non-negative, got {delta}")));
        }
        if amplitude < 0.0 {
            return Err(Error::domain(format!(
                "amplitude must be non-negative, got {amplitude}"
            )));
        }
        Ok(Self { delta, amplitude, omega })
    }

    /// Convenience constructor with `ω = 1`.
    pub fn dimensionless(delta_over_omega: f64, a_over_omega: f64) -> Result<Self> {
        Self::new(delta_over_omega, a_over_omega, 1.0)
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn a_over_omega(&self) -> f64 {
        self.amplitude / self.omega
    }

    pub fn delta_over_omega(&self) -> f64 {
        self.delta / self.omega
    }

    /// Drive period `2π/ω`.
    pub fn period(&self) -> f64 {
        std::f64::consts::TAU / self.omega
    }
}

/// Solution method tag carried by trajectories and CSV output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Exact,
    Rwa,
    Chrw1,
    Chrw2,
    EvenHarmonic,
    CdtOdd,
    RwaRf,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Exact,
        Method::Rwa,
        Method::Chrw1,
        Method::Chrw2,
        Method::EvenHarmonic,
        Method::CdtOdd,
        Method::RwaRf,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Rwa => "rwa",
            Method::Chrw1 => "chrw1",
            Method::Chrw2 => "chrw2",
            Method::EvenHarmonic => "even-harmonic",
            Method::CdtOdd => "cdt-odd",
            Method::RwaRf => "rwa-rf",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "exact" => Ok(Method::Exact),
            "rwa" => Ok(Method::Rwa),
            "chrw1" => Ok(Method::Chrw1),
            "chrw2" => Ok(Method::Chrw2),
            "even-harmonic" => Ok(Method::EvenHarmonic),
            "cdt-odd" => Ok(Method::CdtOdd),
            "rwa-rf" => Ok(Method::RwaRf),
            other => Err(Error::domain(format!("unknown method `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_params() {
        assert!(DriveParams::new(1.0, 1.0, 0.0).is_err());
        assert!(DriveParams::new(-1.0, 1.0, 1.0).is_err());
        assert!(DriveParams::new(1.0, -1.0, 1.0).is_err());
        assert!(DriveParams::new(f64::NAN, 1.0, 1.0).is_err());
        assert!(DriveParams::new(0.0, 0.0, 2.0).is_ok());
    }

    #[test]
    fn method_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert!("floquet".parse::<Method>().is_err());
    }
}
