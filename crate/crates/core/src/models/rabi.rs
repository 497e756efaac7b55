//! Driven two-level system: `H(t) = (Δ/2)σ_z + V cos(ωt + φ)σ_x`, its
//! interaction picture and the Bessel-renormalized single-harmonic
//! truncation `H_I(t) ≈ (Δ₀/2)σ_z + Δ₁ sin(ωt + φ)σ_y`.

use super::TimePeriodic;
use crate::numerics::{bessel_j, Bloch2, Mat2};
use crate::{CMat, Error, RegimeWarning, Result};

/// Two-level drive parameters: splitting Δ, amplitude V, frequency ω and
/// initial phase φ (ħ = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RabiSpec {
    pub delta: f64,
    pub v: f64,
    pub omega: f64,
    pub phi: f64,
}

impl RabiSpec {
    pub fn new(delta: f64, v: f64, omega: f64, phi: f64) -> Result<Self> {
        if !(delta > 0.0) || !(omega > 0.0) || !(v >= 0.0) {
            return Err(Error::InvalidSpec(format!(
                "Rabi spec requires delta > 0, omega > 0, v >= 0; got delta={delta}, v={v}, omega={omega}"
            )));
        }
        if ![delta, v, omega, phi].iter().all(|x| x.is_finite()) {
            return Err(Error::InvalidSpec("non-finite Rabi parameter".into()));
        }
        Ok(RabiSpec { delta, v, omega, phi })
    }

    /// Bessel-renormalized splitting harmonics Δ_n = Δ J_n(2V/ω).
    pub fn delta_n(&self, n: i64) -> f64 {
        self.delta * bessel_j(n, 2.0 * self.v / self.omega).expect("2V/omega within Bessel domain")
    }

    /// The lab-frame Hamiltonian.
    pub fn hamiltonian(&self) -> RabiHamiltonian {
        RabiHamiltonian { spec: *self }
    }

    /// Single-harmonic truncation of the interaction-picture Hamiltonian,
    /// together with a regime warning when |Δ₁| is not the dominant harmonic.
    pub fn truncated_interaction(&self) -> (TruncatedRabi, Vec<RegimeWarning>) {
        let delta0 = self.delta_n(0);
        let delta1 = self.delta_n(1);
        let delta_higher = (2..=8)
            .map(|n| self.delta_n(n).abs())
            .fold(0.0f64, f64::max);
        let mut warnings = Vec::new();
        if delta_higher > 0.0 && delta1.abs() <= delta_higher {
            warnings.push(RegimeWarning::HarmonicTruncation {
                delta1: delta1.abs(),
                delta_higher,
            });
        }
        (
            TruncatedRabi {
                delta0,
                delta1,
                omega: self.omega,
                phi: self.phi,
            },
            warnings,
        )
    }

    /// Interaction-picture transformation `R₁(t) = exp(-i F(t)/2 σ_x)` with
    /// `F(t) = 2V sin(ωt + φ)/ω`.
    pub fn interaction_frame(&self, t: f64) -> Mat2 {
        let f_half = self.v * (self.omega * t + self.phi).sin() / self.omega;
        Bloch2::new(f_half, 0.0, 0.0).exp_minus_i(1.0)
    }
}

/// Lab-frame `H(t) = (Δ/2)σ_z + V cos(ωt + φ)σ_x`.
#[derive(Debug, Clone, Copy)]
pub struct RabiHamiltonian {
    spec: RabiSpec,
}

impl TimePeriodic for RabiHamiltonian {
    fn dim(&self) -> usize {
        2
    }

    fn omega(&self) -> f64 {
        self.spec.omega
    }

    fn eval(&self, t: f64) -> CMat {
        self.bloch2(t).unwrap().matrix().to_array()
    }

    fn bloch2(&self, t: f64) -> Option<Bloch2> {
        let s = &self.spec;
        Some(Bloch2::new(
            s.v * (s.omega * t + s.phi).cos(),
            0.0,
            0.5 * s.delta,
        ))
    }
}

/// Truncated interaction picture `H_I(t) ≈ (Δ₀/2)σ_z + Δ₁ sin(ωt + φ)σ_y`.
#[derive(Debug, Clone, Copy)]
pub struct TruncatedRabi {
    pub delta0: f64,
    pub delta1: f64,
    pub omega: f64,
    pub phi: f64,
}

impl TimePeriodic for TruncatedRabi {
    fn dim(&self) -> usize {
        2
    }

    fn omega(&self) -> f64 {
        self.omega
    }

    fn eval(&self, t: f64) -> CMat {
        self.bloch2(t).unwrap().matrix().to_array()
    }

    fn bloch2(&self, t: f64) -> Option<Bloch2> {
        Some(Bloch2::new(
            0.0,
            self.delta1 * (self.omega * t + self.phi).sin(),
            0.5 * self.delta0,
        ))
    }
}
