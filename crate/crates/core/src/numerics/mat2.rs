//! Small fixed-size 2×2 complex kernels.
//!
//! The two-band Bloch Hamiltonians of this crate are all of the form
//! `d·σ` with a real Bloch vector `d`; [`Bloch2`] carries that vector and
//! provides closed-form eigenpairs and exponentials, which keeps the hot
//! per-(k, t) loops free of generic dense linear algebra.

use crate::{C64, CMat};

/// Stack-allocated 2×2 complex matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [[C64; 2]; 2]);

impl Mat2 {
    pub fn zero() -> Self {
        Mat2([[C64::new(0.0, 0.0); 2]; 2])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        m.0[0][0] = C64::new(1.0, 0.0);
        m.0[1][1] = C64::new(1.0, 0.0);
        m
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &rhs.0;
        Mat2([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }

    pub fn mulv(&self, v: [C64; 2]) -> [C64; 2] {
        [
            self.0[0][0] * v[0] + self.0[0][1] * v[1],
            self.0[1][0] * v[0] + self.0[1][1] * v[1],
        ]
    }

    pub fn dagger(&self) -> Mat2 {
        Mat2([
            [self.0[0][0].conj(), self.0[1][0].conj()],
            [self.0[0][1].conj(), self.0[1][1].conj()],
        ])
    }

    pub fn scaled(&self, c: C64) -> Mat2 {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for e in row.iter_mut() {
                *e *= c;
            }
        }
        m
    }

    pub fn add(&self, rhs: &Mat2) -> Mat2 {
        let mut m = *self;
        for i in 0..2 {
            for j in 0..2 {
                m.0[i][j] += rhs.0[i][j];
            }
        }
        m
    }

    /// Column `j` as a fixed-size vector.
    pub fn col(&self, j: usize) -> [C64; 2] {
        [self.0[0][j], self.0[1][j]]
    }

    pub fn to_array(&self) -> CMat {
        let mut m = CMat::zeros((2, 2));
        for i in 0..2 {
            for j in 0..2 {
                m[[i, j]] = self.0[i][j];
            }
        }
        m
    }

    pub fn from_array(m: &CMat) -> Mat2 {
        debug_assert_eq!(m.dim(), (2, 2));
        Mat2([[m[[0, 0]], m[[0, 1]]], [m[[1, 0]], m[[1, 1]]]])
    }
}

/// Real Bloch vector of a traceless Hermitian 2×2 operator `H = d·σ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bloch2 {
    pub dx: f64,
    pub dy: f64,
    pub dz: f64,
}

impl Bloch2 {
    pub fn new(dx: f64, dy: f64, dz: f64) -> Self {
        Bloch2 { dx, dy, dz }
    }

    /// |d|, i.e. the positive eigenvalue.
    pub fn norm(&self) -> f64 {
        (self.dx * self.dx + self.dy * self.dy + self.dz * self.dz).sqrt()
    }

    /// `d·σ` as a matrix.
    pub fn matrix(&self) -> Mat2 {
        Mat2([
            [
                C64::new(self.dz, 0.0),
                C64::new(self.dx, -self.dy),
            ],
            [
                C64::new(self.dx, self.dy),
                C64::new(-self.dz, 0.0),
            ],
        ])
    }

    /// `exp(-i (d·σ) τ) = cos(|d|τ) 1 - i sin(|d|τ) d̂·σ`.
    pub fn exp_minus_i(&self, tau: f64) -> Mat2 {
        let r = self.norm();
        if r == 0.0 {
            return Mat2::identity();
        }
        let a = r * tau;
        let (s, c) = a.sin_cos();
        let f = s / r;
        Mat2([
            [
                C64::new(c, -f * self.dz),
                C64::new(-f * self.dy, -f * self.dx),
            ],
            [
                C64::new(f * self.dy, -f * self.dx),
                C64::new(c, f * self.dz),
            ],
        ])
    }

    /// Eigenpairs `((+|d|, v_+), (-|d|, v_-))`, not yet gauge-fixed.
    ///
    /// Half-angle construction: with `θ = atan2(√(dx²+dy²), dz)` and
    /// `e^{iφ} = (dx + i dy)/|d_⊥|`,
    /// `v_+ = (cos θ/2, e^{iφ} sin θ/2)` and `v_- = (sin θ/2, -e^{iφ} cos θ/2)`.
    pub fn eigen(&self) -> ((f64, [C64; 2]), (f64, [C64; 2])) {
        let r = self.norm();
        let dperp = self.dx.hypot(self.dy);
        let phase = if dperp > 0.0 {
            C64::new(self.dx / dperp, self.dy / dperp)
        } else {
            C64::new(1.0, 0.0)
        };
        let theta = dperp.atan2(self.dz);
        let (s, c) = (0.5 * theta).sin_cos();
        let vp = [C64::new(c, 0.0), phase * s];
        let vm = [C64::new(s, 0.0), -phase * c];
        ((r, vp), (-r, vm))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn apply(b: &Bloch2, v: [C64; 2]) -> [C64; 2] {
        b.matrix().mulv(v)
    }

    #[test]
    fn eigen_reconstructs() {
        for &(dx, dy, dz) in &[
            (1.0, 0.0, 0.0),
            (0.0, 1.0, 0.0),
            (0.0, 0.0, 1.0),
            (0.3, -0.7, 1.9),
            (-2.0, 0.1, -0.4),
            (0.0, 0.0, -1.0),
        ] {
            let b = Bloch2::new(dx, dy, dz);
            let ((ep, vp), (em, vm)) = b.eigen();
            let hp = apply(&b, vp);
            let hm = apply(&b, vm);
            for i in 0..2 {
                assert!((hp[i] - vp[i] * ep).norm() < 1e-12);
                assert!((hm[i] - vm[i] * em).norm() < 1e-12);
            }
            let ortho = vp[0].conj() * vm[0] + vp[1].conj() * vm[1];
            assert!(ortho.norm() < 1e-12);
        }
    }

    #[test]
    fn exp_is_unitary_and_matches_euler() {
        // exp(-i σ_x π/2) = -i σ_x
        let b = Bloch2::new(1.0, 0.0, 0.0);
        let u = b.exp_minus_i(std::f64::consts::FRAC_PI_2);
        assert!((u.0[0][0]).norm() < 1e-15);
        assert!((u.0[0][1] - C64::new(0.0, -1.0)).norm() < 1e-15);
        let udu = u.dagger().mul(&u);
        assert!((udu.0[0][0] - 1.0).norm() < 1e-15);
        assert!((udu.0[1][1] - 1.0).norm() < 1e-15);
        assert!(udu.0[0][1].norm() < 1e-15);
    }

    #[test]
    fn exp_group_property() {
        let b = Bloch2::new(0.4, -1.1, 0.6);
        let u1 = b.exp_minus_i(0.3);
        let u2 = b.exp_minus_i(0.5);
        let u12 = b.exp_minus_i(0.8);
        let prod = u1.mul(&u2);
        for i in 0..2 {
            for j in 0..2 {
                assert!((prod.0[i][j] - u12.0[i][j]).norm() < 1e-14);
            }
        }
    }
}
