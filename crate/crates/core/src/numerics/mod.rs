//! Self-contained numerical kernels: Bessel functions of the first kind,
//! dense complex Hermitian/unitary eigensolvers, matrix exponentials and
//! scalar root finding.
//!
//! All operations are pure and reentrant. Dense eigensolves above 2×2 go
//! through the system LAPACK (`zheev`); everything 2×2 uses closed forms.

mod bessel;
mod eig;
mod expm;
mod mat2;
mod matmul;
mod roots;

pub use bessel::bessel_j;
pub use eig::{eig_hermitian, eig_unitary, gauge_fix_columns, EigenDecomposition, UnitaryEigen};
pub use expm::{expm_apply_left, expm_hermitian};
pub use mat2::{Bloch2, Mat2};
pub use matmul::{matmul, matmul_bdag};
pub use roots::{solve_largest_root, solve_scalar_root};

use crate::{C64, CMat, Error, Result};

/// Max |entry| of a matrix.
pub(crate) fn max_abs(m: &CMat) -> f64 {
    m.iter().fold(0.0f64, |acc, z| acc.max(z.norm()))
}

/// Check squareness, finiteness and Hermiticity (tolerance `tol` scaled by
/// `max(1, ‖H‖_max)`).
pub(crate) fn check_hermitian(h: &CMat, tol: f64) -> Result<()> {
    let (n, m) = h.dim();
    if n != m {
        return Err(Error::Contract(format!("matrix is {n}x{m}, not square")));
    }
    if h.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Contract("matrix has non-finite entries".into()));
    }
    let scale = max_abs(h).max(1.0);
    let mut defect = 0.0f64;
    for i in 0..n {
        for j in i..n {
            defect = defect.max((h[[i, j]] - h[[j, i]].conj()).norm());
        }
    }
    if defect > tol * scale {
        return Err(Error::Contract(format!(
            "matrix is not Hermitian: defect {defect:.3e} > {:.3e}",
            tol * scale
        )));
    }
    Ok(())
}

/// ‖U†U − 1‖_max.
pub(crate) fn unitarity_defect(u: &CMat) -> f64 {
    let n = u.nrows();
    let mut defect = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let mut s = C64::new(0.0, 0.0);
            for k in 0..n {
                s += u[[k, i]].conj() * u[[k, j]];
            }
            if i == j {
                s -= 1.0;
            }
            defect = defect.max(s.norm());
        }
    }
    defect
}
