//! The paper's three driven models in momentum space and real space.
//!
//! Each model exposes a [`TimePeriodic`] Hamiltonian; two-level Bloch
//! Hamiltonians additionally expose their real Bloch vector through
//! [`TimePeriodic::bloch2`], which the propagator uses as a closed-form
//! fast path.

mod piflux;
mod rabi;
mod ssh;

pub use piflux::{
    PiFluxSpec, PifluxBloch, PifluxRibbon, StaticPart, TruncatedPifluxBloch, MASS_SIGN,
};
pub use rabi::{RabiHamiltonian, RabiSpec, TruncatedRabi};
pub use ssh::{SshBloch, SshChain, SshSpec};

use crate::numerics::Bloch2;
use crate::CMat;
use std::f64::consts::TAU;

/// A T-periodic Hermitian Hamiltonian, `H(t + T) = H(t)` with `T = 2π/ω`.
pub trait TimePeriodic: Sync {
    fn dim(&self) -> usize;
    /// Drive angular frequency (ħ = 1, energy units).
    fn omega(&self) -> f64;
    fn period(&self) -> f64 {
        TAU / self.omega()
    }
    fn eval(&self, t: f64) -> CMat;
    /// Real Bloch vector for two-level models; `None` for larger systems.
    fn bloch2(&self, _t: f64) -> Option<Bloch2> {
        None
    }
}

/// Pauli matrices and ladder operators.
pub mod pauli {
    use crate::{C64, CMat};

    pub fn sx() -> CMat {
        ndarray::array![
            [C64::new(0.0, 0.0), C64::new(1.0, 0.0)],
            [C64::new(1.0, 0.0), C64::new(0.0, 0.0)]
        ]
    }

    pub fn sy() -> CMat {
        ndarray::array![
            [C64::new(0.0, 0.0), C64::new(0.0, -1.0)],
            [C64::new(0.0, 1.0), C64::new(0.0, 0.0)]
        ]
    }

    pub fn sz() -> CMat {
        ndarray::array![
            [C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
            [C64::new(0.0, 0.0), C64::new(-1.0, 0.0)]
        ]
    }

    /// σ₊ = (σ_x + iσ_y)/2.
    pub fn splus() -> CMat {
        ndarray::array![
            [C64::new(0.0, 0.0), C64::new(1.0, 0.0)],
            [C64::new(0.0, 0.0), C64::new(0.0, 0.0)]
        ]
    }

    /// σ₋ = (σ_x - iσ_y)/2.
    pub fn sminus() -> CMat {
        ndarray::array![
            [C64::new(0.0, 0.0), C64::new(0.0, 0.0)],
            [C64::new(1.0, 0.0), C64::new(0.0, 0.0)]
        ]
    }
}
