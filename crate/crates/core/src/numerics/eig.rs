//! Dense complex eigensolvers with a reproducible eigenvector gauge.
//!
//! Hermitian matrices above 2×2 are diagonalized with LAPACK `zheev`; 2×2
//! uses the closed Bloch-vector form. Unitary matrices are handled by
//! simultaneous diagonalization of the commuting Hermitian parts
//! `(U+U†)/2` and `(U-U†)/(2i)`, refining within degenerate subspaces.
//!
//! Gauge: every eigenvector is rotated so that its first component of
//! modulus > 1e-8 is real positive, making Wilson-loop overlaps and the
//! frame-split invariants reproducible run to run.

use super::{check_hermitian, matmul::matmul, max_abs, unitarity_defect, Bloch2};
use crate::{C64, CMat, Error, Result};

/// Gauge threshold: first component with modulus above this is made real
/// positive.
const GAUGE_TOL: f64 = 1e-8;
/// Eigenvalues of the Hermitian part closer than this are treated as one
/// degenerate block when splitting a unitary's phases; phases within 1e-9
/// always share a cosine at this tolerance, so exact crossings never mix
/// across blocks.
const BLOCK_TOL: f64 = 1e-8;

/// Eigenvalues (ascending) and orthonormal eigenvectors (columns) of a
/// Hermitian matrix.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: CMat,
}

/// Unit-modulus eigenphases θ_i ∈ (-π, π] with `U v_i = e^{iθ_i} v_i`,
/// sorted ascending, and the matching orthonormal eigenvectors (columns).
#[derive(Debug, Clone)]
pub struct UnitaryEigen {
    pub phases: Vec<f64>,
    pub vectors: CMat,
}

/// Rotate each column so its first component of modulus > 1e-8 is real
/// positive.
pub fn gauge_fix_columns(vectors: &mut CMat) {
    let (n, m) = vectors.dim();
    for j in 0..m {
        let mut pivot = None;
        for i in 0..n {
            if vectors[[i, j]].norm() > GAUGE_TOL {
                pivot = Some(vectors[[i, j]]);
                break;
            }
        }
        if let Some(p) = pivot {
            let rot = p.conj() / p.norm();
            for i in 0..n {
                vectors[[i, j]] *= rot;
            }
        }
    }
}

/// Eigendecomposition of a Hermitian matrix (tolerance 1e-12 on the
/// Hermiticity defect, scaled by the largest entry).
pub fn eig_hermitian(h: &CMat) -> Result<EigenDecomposition> {
    check_hermitian(h, 1e-12)?;
    let n = h.nrows();
    let mut out = match n {
        0 => {
            return Err(Error::Contract("empty matrix".into()));
        }
        1 => EigenDecomposition {
            values: vec![h[[0, 0]].re],
            vectors: CMat::eye(1),
        },
        2 => eig2(h),
        _ => zheev(h)?,
    };
    gauge_fix_columns(&mut out.vectors);
    Ok(out)
}

/// Closed-form 2×2 path. Splits off the identity part and uses the Bloch
/// half-angle eigenvectors.
fn eig2(h: &CMat) -> EigenDecomposition {
    let e0 = 0.5 * (h[[0, 0]].re + h[[1, 1]].re);
    let b = Bloch2::new(
        h[[0, 1]].re,
        -h[[0, 1]].im,
        0.5 * (h[[0, 0]].re - h[[1, 1]].re),
    );
    let ((ep, vp), (em, vm)) = b.eigen();
    let mut vectors = CMat::zeros((2, 2));
    // ascending: v_- first
    for i in 0..2 {
        vectors[[i, 0]] = vm[i];
        vectors[[i, 1]] = vp[i];
    }
    EigenDecomposition {
        values: vec![e0 + em, e0 + ep],
        vectors,
    }
}

/// LAPACK zheev on a column-major copy.
fn zheev(h: &CMat) -> Result<EigenDecomposition> {
    let n = h.nrows();
    let ni = n as i32;
    let mut a: Vec<C64> = vec![C64::new(0.0, 0.0); n * n];
    for j in 0..n {
        for i in 0..n {
            a[i + j * n] = h[[i, j]];
        }
    }
    let mut w = vec![0.0f64; n];
    let mut rwork = vec![0.0f64; (3 * n).max(1)];
    let mut info = 0i32;
    // workspace query
    let mut query = [C64::new(0.0, 0.0)];
    unsafe {
        zheev_(
            b"V".as_ptr(),
            b"L".as_ptr(),
            &ni,
            a.as_mut_ptr(),
            &ni,
            w.as_mut_ptr(),
            query.as_mut_ptr(),
            &(-1i32),
            rwork.as_mut_ptr(),
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Lapack(info));
    }
    let lwork = query[0].re as i32;
    let mut work = vec![C64::new(0.0, 0.0); lwork.max(1) as usize];
    unsafe {
        zheev_(
            b"V".as_ptr(),
            b"L".as_ptr(),
            &ni,
            a.as_mut_ptr(),
            &ni,
            w.as_mut_ptr(),
            work.as_mut_ptr(),
            &lwork,
            rwork.as_mut_ptr(),
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Lapack(info));
    }
    let mut vectors = CMat::zeros((n, n));
    for j in 0..n {
        for i in 0..n {
            vectors[[i, j]] = a[i + j * n];
        }
    }
    Ok(EigenDecomposition { values: w, vectors })
}

extern "C" {
    fn zheev_(
        jobz: *const u8,
        uplo: *const u8,
        n: *const i32,
        a: *mut C64,
        lda: *const i32,
        w: *mut f64,
        work: *mut C64,
        lwork: *const i32,
        rwork: *mut f64,
        info: *mut i32,
    );
}

/// Eigenphases and eigenvectors of a unitary matrix (unitarity defect must
/// be <= 1e-9).
pub fn eig_unitary(u: &CMat) -> Result<UnitaryEigen> {
    let (n, m) = u.dim();
    if n != m || n == 0 {
        return Err(Error::Contract(format!("matrix is {n}x{m}, not square")));
    }
    let defect = unitarity_defect(u);
    if defect > 1e-9 {
        return Err(Error::Contract(format!(
            "matrix is not unitary: defect {defect:.3e} > 1e-9"
        )));
    }
    let udag = u.t().mapv(|z| z.conj());
    let c = (u + &udag).mapv(|z| 0.5 * z);
    let s = (u - &udag).mapv(|z| z / C64::new(0.0, 2.0));

    let dec = eig_hermitian(&c)?;
    let mut vectors = dec.vectors;
    let cvals = dec.values;
    let scale = max_abs(&c).max(1.0);

    // Refine within blocks where cos θ is (near-)degenerate; the sine part
    // splits phase pairs ±θ that share a cosine.
    let mut start = 0usize;
    while start < n {
        let mut end = start + 1;
        while end < n && (cvals[end] - cvals[end - 1]).abs() <= BLOCK_TOL * scale {
            end += 1;
        }
        if end - start > 1 {
            let g = end - start;
            let block = vectors.slice(ndarray::s![.., start..end]).to_owned();
            let sv = matmul(&s, &block);
            let mut small = CMat::zeros((g, g));
            for a in 0..g {
                for b in 0..g {
                    let mut acc = C64::new(0.0, 0.0);
                    for i in 0..n {
                        acc += block[[i, a]].conj() * sv[[i, b]];
                    }
                    small[[a, b]] = acc;
                }
            }
            // symmetrize away roundoff before the inner eigensolve
            let smallh = (&small + &small.t().mapv(|z| z.conj())).mapv(|z| 0.5 * z);
            let inner = eig_hermitian(&smallh)?;
            let rotated = matmul(&block, &inner.vectors);
            vectors.slice_mut(ndarray::s![.., start..end]).assign(&rotated);
        }
        start = end;
    }

    // Phases from the Rayleigh quotient against U itself.
    let uv = matmul(u, &vectors);
    let mut phases = vec![0.0f64; n];
    for j in 0..n {
        let mut lam = C64::new(0.0, 0.0);
        for i in 0..n {
            lam += vectors[[i, j]].conj() * uv[[i, j]];
        }
        phases[j] = lam.im.atan2(lam.re);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| phases[a].partial_cmp(&phases[b]).unwrap());
    let mut sorted_vectors = CMat::zeros((n, n));
    let mut sorted_phases = vec![0.0f64; n];
    for (dst, &src) in order.iter().enumerate() {
        sorted_phases[dst] = phases[src];
        for i in 0..n {
            sorted_vectors[[i, dst]] = vectors[[i, src]];
        }
    }
    gauge_fix_columns(&mut sorted_vectors);
    Ok(UnitaryEigen {
        phases: sorted_phases,
        vectors: sorted_vectors,
    })
}
