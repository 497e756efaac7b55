//! Floquet machinery for periodically driven two-band lattice models.
//!
//! The crate builds exact one-period propagators and quasienergy spectra for
//! a driven two-level system, a hopping-modulated SSH chain and an AC-driven
//! π-flux lattice, together with the rotating-frame effective Hamiltonians
//! that capture their resonances and the frame-split topological invariants
//! (Zak phases, Berry flux, Chern numbers) of the resulting Floquet bands.
//!
//! Layout:
//! - [`numerics`]: Bessel functions, dense Hermitian/unitary eigensolvers,
//!   matrix exponentials, scalar root finding.
//! - [`models`]: the three driven Hamiltonians in momentum and real space.
//! - [`floquet`]: one-period propagators, quasienergy folding, Floquet modes.
//! - [`rwa`]: static eigenframes, rotating couplings, rotating-frame
//!   Hamiltonians, resonance and exact-degeneracy conditions.
//! - [`topology`]: Wilson loops, plaquette Berry flux, Chern numbers and the
//!   frame-split decompositions.
//! - [`edge`]: open-boundary edge-localization diagnostics.
//!
//! All k-grid sweeps are pure per point; with the default `parallel` feature
//! they run on a rayon pool (see [`parallel`]).

pub mod edge;
pub mod floquet;
pub mod models;
pub mod numerics;
pub mod parallel;
pub mod rwa;
pub mod topology;

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
/// Dense complex matrix, row-major `(row, col)` indexing.
pub type CMat = ndarray::Array2<C64>;
/// Dense complex vector.
pub type CVec = ndarray::Array1<C64>;

/// Errors shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Argument outside the supported domain of a numerical kernel.
    #[error("domain error: {0}")]
    Domain(String),
    /// Input violates an operation's contract (non-Hermitian, non-unitary, ...).
    #[error("contract violation: {0}")]
    Contract(String),
    /// Root bracket without a sign change.
    #[error("bracket error: {0}")]
    Bracket(String),
    /// Degenerate spectrum where a nondegenerate frame was required.
    #[error("degenerate point: {0}; offset the k-grid away from the degeneracy")]
    Degenerate(String),
    /// Neighboring states on a loop/grid overlap too weakly.
    #[error("resolution error: {0}; use a finer grid")]
    Resolution(String),
    /// A quantized invariant failed its residual check.
    #[error("non-convergence: {0}")]
    NonConvergence(String),
    /// Invalid model parameters.
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    /// LAPACK backend failure.
    #[error("LAPACK zheev failed with info = {0}")]
    Lapack(i32),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Non-fatal warnings emitted when parameters leave an approximation's
/// validity regime. The exact propagator paths remain valid regardless.
#[derive(Debug, Clone, PartialEq)]
pub enum RegimeWarning {
    /// `|Δ₁| ≤ max_{n≥2} |Δ_n|`: the single-harmonic truncation of the
    /// interaction-picture Hamiltonian is not dominated by its first harmonic.
    HarmonicTruncation { delta1: f64, delta_higher: f64 },
    /// SSH modulation amplitude at or above the drive frequency.
    StrongDrive { v: f64, omega: f64 },
    /// π-flux second Bessel harmonic above 5% of the first.
    HigherHarmonics { ratio: f64 },
    /// Frequency outside the window separating resonant from off-resonant
    /// states (bandwidth ≫ ω ≫ dynamical gap, thresholds 1.5× each).
    DecouplingWindow { bandwidth: f64, omega: f64, dynamical_gap: f64 },
}

impl std::fmt::Display for RegimeWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RegimeWarning::HarmonicTruncation { delta1, delta_higher } => write!(
                f,
                "harmonic truncation degraded: |Delta_1| = {delta1:.3e} <= max_n>=2 |Delta_n| = {delta_higher:.3e}"
            ),
            RegimeWarning::StrongDrive { v, omega } => write!(
                f,
                "modulation amplitude V = {v:.3e} >= omega = {omega:.3e}; weak-drive analysis degraded"
            ),
            RegimeWarning::HigherHarmonics { ratio } => write!(
                f,
                "J_2 contribution is {:.1}% of J_1 (> 5%); |n| <= 1 truncation degraded",
                100.0 * ratio
            ),
            RegimeWarning::DecouplingWindow { bandwidth, omega, dynamical_gap } => write!(
                f,
                "omega = {omega:.3e} outside decoupling window (bandwidth {bandwidth:.3e} >> omega >> dynamical gap {dynamical_gap:.3e})"
            ),
        }
    }
}
