//! Hopping-modulated SSH chain.
//!
//! `H(t) = Σ_j J₁(t) b†_j a_j + J₂(t) a†_{j+1} b_j + h.c.` with
//! `J₁(t) = J + v(t)`, `J₂(t) = J' - v(t)`, `v(t) = 2V cos(ωt)`: a chirally
//! symmetric modulation that enhances one hopping exactly as much as it
//! reduces the other. Momentum-space and open-chain forms are provided.
//!
//! Conventions: sublattice order (a, b) inside the unit cell; open chains
//! consist of complete cells, so the left edge terminates on an a-site. The
//! Bloch Hamiltonian is 2π-periodic in k (no intra-cell position phases).

use super::TimePeriodic;
use crate::numerics::Bloch2;
use crate::{C64, CMat, Error, RegimeWarning, Result};

/// SSH parameters: intra-cell hopping J, inter-cell hopping J',
/// modulation amplitude V, drive frequency ω and cell count for open chains.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SshSpec {
    pub j: f64,
    pub j_prime: f64,
    pub v: f64,
    pub omega: f64,
    pub n_cells: usize,
}

impl SshSpec {
    pub fn new(j: f64, j_prime: f64, v: f64, omega: f64, n_cells: usize) -> Result<Self> {
        if !(j > 0.0) || !(j_prime >= 0.0) || !(v >= 0.0) || !(omega > 0.0) {
            return Err(Error::InvalidSpec(format!(
                "SSH spec requires J > 0, J' >= 0, V >= 0, omega > 0; got J={j}, J'={j_prime}, V={v}, omega={omega}"
            )));
        }
        if ![j, j_prime, v, omega].iter().all(|x| x.is_finite()) {
            return Err(Error::InvalidSpec("non-finite SSH parameter".into()));
        }
        Ok(SshSpec { j, j_prime, v, omega, n_cells })
    }

    /// Warn when the modulation amplitude reaches the drive frequency; the
    /// weak-drive analysis (no interaction picture) degrades there.
    pub fn regime_warnings(&self) -> Vec<RegimeWarning> {
        if self.v >= self.omega {
            vec![RegimeWarning::StrongDrive { v: self.v, omega: self.omega }]
        } else {
            Vec::new()
        }
    }

    /// Hopping modulation `v(t) = 2V cos(ωt)`.
    pub fn modulation(&self, t: f64) -> f64 {
        2.0 * self.v * (self.omega * t).cos()
    }

    /// `(J₁(t), J₂(t))`.
    pub fn hoppings(&self, t: f64) -> (f64, f64) {
        let v = self.modulation(t);
        (self.j + v, self.j_prime - v)
    }

    /// Bloch Hamiltonian at quasi-momentum `k ∈ [-π, π]`.
    pub fn bloch(&self, k: f64) -> SshBloch {
        SshBloch { spec: *self, k }
    }

    /// Static (undriven) Bloch vector `H₀(k) = (J + J' cos k)σ_x + J' sin k σ_y`.
    pub fn static_bloch(&self, k: f64) -> Bloch2 {
        Bloch2::new(self.j + self.j_prime * k.cos(), self.j_prime * k.sin(), 0.0)
    }

    /// Static band energy `E_+(k) = √(J² + J'² + 2JJ' cos k)`.
    pub fn static_energy(&self, k: f64) -> f64 {
        (self.j * self.j + self.j_prime * self.j_prime
            + 2.0 * self.j * self.j_prime * k.cos())
        .max(0.0)
        .sqrt()
    }

    /// First-harmonic drive component: `v(t) = V e^{iωt} + V e^{-iωt}`, so
    /// `H^{(±1)}(k) = V [(1 - cos k)σ_x - sin k σ_y]`.
    pub fn drive_first_harmonic(&self, k: f64) -> Bloch2 {
        Bloch2::new(self.v * (1.0 - k.cos()), -self.v * k.sin(), 0.0)
    }

    /// Open chain of `n_cells` complete (a, b) cells.
    pub fn open_chain(&self) -> Result<SshChain> {
        if self.n_cells < 2 {
            return Err(Error::InvalidSpec(format!(
                "open chain needs n_cells >= 2, got {}",
                self.n_cells
            )));
        }
        Ok(SshChain { spec: *self })
    }
}

/// Momentum-space `H_k(t) = J₁(t)σ_x + J₂(t)(σ₊ e^{-ik} + σ₋ e^{ik})`.
#[derive(Debug, Clone, Copy)]
pub struct SshBloch {
    spec: SshSpec,
    k: f64,
}

impl TimePeriodic for SshBloch {
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
        let (j1, j2) = self.spec.hoppings(t);
        Some(Bloch2::new(
            j1 + j2 * self.k.cos(),
            j2 * self.k.sin(),
            0.0,
        ))
    }
}

/// Real-space open chain: 2N sites `a₁ b₁ a₂ b₂ …` with alternating
/// `J₁(t)`, `J₂(t)` bonds and open ends.
#[derive(Debug, Clone, Copy)]
pub struct SshChain {
    spec: SshSpec,
}

impl SshChain {
    pub fn n_cells(&self) -> usize {
        self.spec.n_cells
    }
}

impl TimePeriodic for SshChain {
    fn dim(&self) -> usize {
        2 * self.spec.n_cells
    }

    fn omega(&self) -> f64 {
        self.spec.omega
    }

    fn eval(&self, t: f64) -> CMat {
        let n = self.dim();
        let (j1, j2) = self.spec.hoppings(t);
        let mut h = CMat::zeros((n, n));
        for site in 0..n - 1 {
            let amp = if site % 2 == 0 { j1 } else { j2 };
            h[[site, site + 1]] = C64::new(amp, 0.0);
            h[[site + 1, site]] = C64::new(amp, 0.0);
        }
        h
    }
}
