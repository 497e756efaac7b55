//! Unitary exponentials `exp(-iHτ)` of Hermitian generators.

use super::matmul::{matmul, matmul_bdag};
use super::{check_hermitian, eig_hermitian, Bloch2};
use crate::{C64, CMat, Result};

/// `exp(-iHτ)` for Hermitian `H`: closed 2×2 formula for dim 2, spectral
/// decomposition otherwise. The result is unitary to working precision.
pub fn expm_hermitian(h: &CMat, tau: f64) -> Result<CMat> {
    check_hermitian(h, 1e-12)?;
    let n = h.nrows();
    if n == 2 {
        let e0 = 0.5 * (h[[0, 0]].re + h[[1, 1]].re);
        let b = Bloch2::new(
            h[[0, 1]].re,
            -h[[0, 1]].im,
            0.5 * (h[[0, 0]].re - h[[1, 1]].re),
        );
        let phase = C64::from_polar(1.0, -e0 * tau);
        return Ok(b.exp_minus_i(tau).scaled(phase).to_array());
    }
    let dec = eig_hermitian(h)?;
    // V e^{-iλτ} V†
    let mut scaled = dec.vectors.clone();
    for (j, &lam) in dec.values.iter().enumerate() {
        let p = C64::from_polar(1.0, -lam * tau);
        for i in 0..n {
            scaled[[i, j]] *= p;
        }
    }
    Ok(matmul_bdag(&scaled, &dec.vectors))
}

/// Apply `exp(-iHτ)` to an accumulated product: returns `exp(-iHτ) · U`.
pub fn expm_apply_left(h: &CMat, tau: f64, u: &CMat) -> Result<CMat> {
    let e = expm_hermitian(h, tau)?;
    Ok(matmul(&e, u))
}
