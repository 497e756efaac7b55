//! Dense complex matrix products through BLAS `zgemm`.
//!
//! ndarray stores row-major; zgemm is column-major. A row-major matrix read
//! as column-major is its transpose, so `C = A·B` is computed as
//! `Cᵀ = Bᵀ·Aᵀ` on the raw buffers.

use crate::{C64, CMat};

extern "C" {
    fn zgemm_(
        transa: *const u8,
        transb: *const u8,
        m: *const i32,
        n: *const i32,
        k: *const i32,
        alpha: *const C64,
        a: *const C64,
        lda: *const i32,
        b: *const C64,
        ldb: *const i32,
        beta: *const C64,
        c: *mut C64,
        ldc: *const i32,
    );
}

const ONE: C64 = C64::new(1.0, 0.0);
const ZERO: C64 = C64::new(0.0, 0.0);

/// `A · B` for row-major operands.
pub fn matmul(a: &CMat, b: &CMat) -> CMat {
    let a = a.as_standard_layout();
    let b = b.as_standard_layout();
    let (m, ka) = a.dim();
    let (kb, n) = b.dim();
    assert_eq!(ka, kb, "inner dimensions differ: {ka} vs {kb}");
    let mut c = CMat::zeros((m, n));
    if m == 0 || n == 0 || ka == 0 {
        return c;
    }
    let (mi, ni, ki) = (m as i32, n as i32, ka as i32);
    unsafe {
        zgemm_(
            b"N".as_ptr(),
            b"N".as_ptr(),
            &ni,
            &mi,
            &ki,
            &ONE,
            b.as_slice().unwrap().as_ptr(),
            &ni,
            a.as_slice().unwrap().as_ptr(),
            &ki,
            &ZERO,
            c.as_slice_mut().unwrap().as_mut_ptr(),
            &ni,
        );
    }
    c
}

/// `A · B†` for row-major operands (`A` is m×k, `B` is n×k).
pub fn matmul_bdag(a: &CMat, b: &CMat) -> CMat {
    let a = a.as_standard_layout();
    let b = b.as_standard_layout();
    let (m, ka) = a.dim();
    let (n, kb) = b.dim();
    assert_eq!(ka, kb, "inner dimensions differ: {ka} vs {kb}");
    let mut c = CMat::zeros((m, n));
    if m == 0 || n == 0 || ka == 0 {
        return c;
    }
    let (mi, ni, ki) = (m as i32, n as i32, ka as i32);
    // Cᵀ = conj(B) · Aᵀ: op(Bbuf)='C' gives conj(B) (n×k), op(Abuf)='N' gives Aᵀ (k×m).
    unsafe {
        zgemm_(
            b"C".as_ptr(),
            b"N".as_ptr(),
            &ni,
            &mi,
            &ki,
            &ONE,
            b.as_slice().unwrap().as_ptr(),
            &ki,
            a.as_slice().unwrap().as_ptr(),
            &ki,
            &ZERO,
            c.as_slice_mut().unwrap().as_mut_ptr(),
            &ni,
        );
    }
    c
}
