//! Exact Floquet machinery: one-period propagators, quasienergy folding,
//! Floquet modes and quasienergy-gap diagnostics.
//!
//! The propagator is a midpoint-sampled piecewise-exponential product,
//! `U(T) = ∏_j exp(-iH(t_j + δ/2)δ)` ordered latest-left; each factor is
//! exactly unitary and the product converges at second order in δ.
//! Quasienergies are the folded phases of `U(T)`: `U v = e^{iθ}v` with
//! `θ = -εT`, folded into the principal zone `[-ω/2, ω/2)`.

use crate::models::TimePeriodic;
use crate::numerics::{eig_unitary, expm_apply_left, matmul, unitarity_defect, Mat2};
use crate::{CMat, Error, Result};

/// One-period time-evolution operator.
#[derive(Debug, Clone)]
pub struct Propagator {
    pub u: CMat,
    pub period: f64,
    pub steps: usize,
}

impl Propagator {
    /// ‖U†U - 1‖_max.
    pub fn unitarity_defect(&self) -> f64 {
        unitarity_defect(&self.u)
    }
}

/// Folded quasienergies ε_α ∈ [-ω/2, ω/2) with the Floquet modes |Φ_α(0)⟩
/// as matching columns, sorted by ascending ε.
#[derive(Debug, Clone)]
pub struct QuasienergySpectrum {
    pub eps: Vec<f64>,
    pub modes: CMat,
    pub omega: f64,
}

/// `U(T)` by the midpoint product rule with `steps` factors (at least 256).
pub fn one_period_propagator<H: TimePeriodic + ?Sized>(h: &H, steps: usize) -> Result<Propagator> {
    propagate_interval(h, 0.0, h.period(), steps)
}

/// Evolution operator `U(t1, t0)` by the same midpoint product rule.
pub fn propagate_interval<H: TimePeriodic + ?Sized>(
    h: &H,
    t0: f64,
    t1: f64,
    steps: usize,
) -> Result<Propagator> {
    if steps < 256 {
        return Err(Error::Contract(format!(
            "propagator needs steps >= 256, got {steps}"
        )));
    }
    let dt = (t1 - t0) / steps as f64;
    let u = if h.dim() == 2 && h.bloch2(t0).is_some() {
        let mut u = Mat2::identity();
        for j in 0..steps {
            let tm = t0 + (j as f64 + 0.5) * dt;
            let b = h
                .bloch2(tm)
                .expect("bloch2 must stay available over the period");
            u = b.exp_minus_i(dt).mul(&u);
        }
        u.to_array()
    } else {
        let n = h.dim();
        let mut u = CMat::eye(n);
        for j in 0..steps {
            let tm = t0 + (j as f64 + 0.5) * dt;
            let hm = h.eval(tm);
            u = expm_apply_left(&hm, dt, &u)?;
        }
        u
    };
    Ok(Propagator {
        u,
        period: t1 - t0,
        steps,
    })
}

/// Fold an energy into the principal quasienergy zone `[-ω/2, ω/2)`
/// (the upper edge `+ω/2` maps to `-ω/2`).
pub fn fold_quasienergy(x: f64, omega: f64) -> f64 {
    let r = x - omega * (x / omega + 0.5).floor();
    if r >= 0.5 * omega {
        r - omega
    } else {
        r
    }
}

/// Quasienergies and Floquet modes from a one-period propagator.
///
/// Eigenphases θ of `U(T)` give `ε = -θ/T` folded into `[-ω/2, ω/2)`;
/// the modes are the eigenvectors of `U(T)`, i.e. `|Φ_α(0)⟩`. Micromotion
/// follows as `|Φ_α(t)⟩ = e^{iε_α t} U(t,0)|Φ_α(0)⟩`.
pub fn quasienergies(prop: &Propagator, omega: f64) -> Result<QuasienergySpectrum> {
    let dec = eig_unitary(&prop.u)?;
    let n = dec.phases.len();
    let t_period = prop.period;
    let mut order: Vec<usize> = (0..n).collect();
    let eps_raw: Vec<f64> = dec
        .phases
        .iter()
        .map(|&th| fold_quasienergy(-th / t_period, omega))
        .collect();
    order.sort_by(|&a, &b| eps_raw[a].partial_cmp(&eps_raw[b]).unwrap());
    let mut eps = Vec::with_capacity(n);
    let mut modes = CMat::zeros((n, n));
    for (dst, &src) in order.iter().enumerate() {
        eps.push(eps_raw[src]);
        for i in 0..n {
            modes[[i, dst]] = dec.vectors[[i, src]];
        }
    }
    Ok(QuasienergySpectrum { eps, modes, omega })
}

/// Floquet modes paired with their quasienergies (alias of [`quasienergies`];
/// the modes are the eigenvectors of `U(T)` at `t = 0`).
pub fn floquet_states(prop: &Propagator, omega: f64) -> Result<QuasienergySpectrum> {
    quasienergies(prop, omega)
}

/// Width of the quasienergy gap containing the circle point `center`
/// (`0` for the 0-gap, `±ω/2` for the π-gap): the circular distance between
/// the nearest states on either side. Zero when a state sits on `center`.
pub fn gap_at(eps: &[f64], center: f64, omega: f64) -> f64 {
    let mut ccw = f64::INFINITY; // nearest state counterclockwise from center
    let mut cw = f64::INFINITY;
    for &e in eps {
        let d = (e - center).rem_euclid(omega);
        ccw = ccw.min(d);
        cw = cw.min((omega - d).rem_euclid(omega));
    }
    if !ccw.is_finite() || !cw.is_finite() {
        return omega;
    }
    ccw + cw
}

/// 0-gap width.
pub fn zero_gap(eps: &[f64], omega: f64) -> f64 {
    gap_at(eps, 0.0, omega)
}

/// π-gap width (distance across the zone boundary, on the circle).
pub fn pi_gap(eps: &[f64], omega: f64) -> f64 {
    gap_at(eps, 0.5 * omega, omega)
}

/// Signed circular offset of `x` from `center`, in `[-ω/2, ω/2)`.
pub fn circ_offset(x: f64, center: f64, omega: f64) -> f64 {
    fold_quasienergy(x - center, omega)
}

/// For each column of `prev`, the index of the best-|overlap| column of
/// `cur` (greedy, used for band labeling across avoided crossings).
pub fn match_by_overlap(prev: &CMat, cur: &CMat) -> Vec<usize> {
    let n = prev.ncols();
    let ov = matmul(&prev.t().mapv(|z| z.conj()).to_owned(), cur);
    let mut taken = vec![false; n];
    let mut assign = vec![0usize; n];
    // greedy over all pairs by descending |overlap|
    let mut pairs: Vec<(f64, usize, usize)> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            pairs.push((ov[[i, j]].norm(), i, j));
        }
    }
    pairs.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    let mut assigned = vec![false; n];
    for (_, i, j) in pairs {
        if !assigned[i] && !taken[j] {
            assign[i] = j;
            assigned[i] = true;
            taken[j] = true;
        }
    }
    assign
}

/// Least-squares slope of log(y) against log(x), for convergence-order and
/// high-frequency-scaling checks.
pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .zip(ys)
        .filter(|(&x, &y)| x > 0.0 && y > 0.0)
        .map(|(&x, &y)| (x.ln(), y.ln()))
        .collect();
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{RabiSpec, SshSpec, TimePeriodic};
    use crate::numerics::{expm_hermitian, Bloch2};
    use crate::C64;
    use std::f64::consts::{PI, TAU};

    struct StaticH {
        b: Bloch2,
        omega: f64,
    }

    impl TimePeriodic for StaticH {
        fn dim(&self) -> usize {
            2
        }
        fn omega(&self) -> f64 {
            self.omega
        }
        fn eval(&self, t: f64) -> CMat {
            self.bloch2(t).unwrap().matrix().to_array()
        }
        fn bloch2(&self, _t: f64) -> Option<Bloch2> {
            Some(self.b)
        }
    }

    #[test]
    fn static_hamiltonian_gives_exact_exponential() {
        let h = StaticH {
            b: Bloch2::new(0.4, -0.2, 0.9),
            omega: 1.7,
        };
        let prop = one_period_propagator(&h, 512).unwrap();
        let want = expm_hermitian(&h.eval(0.0), h.period()).unwrap();
        for (a, b) in prop.u.iter().zip(want.iter()) {
            assert!((a - b).norm() < 1e-10);
        }
        assert!(prop.unitarity_defect() < 1e-12);
    }

    #[test]
    fn folding_rules() {
        let w = 2.0;
        assert_eq!(fold_quasienergy(0.0, w), 0.0);
        // raw rate 0.7ω folds to -0.3ω
        assert!((fold_quasienergy(1.4, w) + 0.6).abs() < 1e-15);
        // ω/2 maps to -ω/2; -ω/2 stays
        assert_eq!(fold_quasienergy(1.0, w), -1.0);
        assert_eq!(fold_quasienergy(-1.0, w), -1.0);
        // idempotence on a sample of values
        for i in -20..20 {
            let x = 0.37 * i as f64;
            let f1 = fold_quasienergy(x, w);
            assert_eq!(fold_quasienergy(f1, w), f1);
            assert!((-1.0..1.0).contains(&f1));
        }
    }

    #[test]
    fn quasienergies_of_identity_and_static() {
        let prop = Propagator {
            u: CMat::eye(3),
            period: 1.0,
            steps: 256,
        };
        let qs = quasienergies(&prop, TAU).unwrap();
        assert!(qs.eps.iter().all(|e| e.abs() < 1e-12));

        // static H: quasienergies are the folded eigenvalues, modes the
        // energy eigenvectors
        let h = StaticH {
            b: Bloch2::new(0.0, 0.0, 0.4),
            omega: 3.0,
        };
        let prop = one_period_propagator(&h, 512).unwrap();
        let qs = quasienergies(&prop, 3.0).unwrap();
        assert!((qs.eps[0] + 0.4).abs() < 1e-10);
        assert!((qs.eps[1] - 0.4).abs() < 1e-10);
        // modes are σ_z eigenvectors
        assert!(qs.modes[[1, 0]].norm() - 1.0 < 1e-10);
        assert!(qs.modes[[0, 0]].norm() < 1e-10);
    }

    #[test]
    fn unitarity_defect_small_for_driven_models() {
        let rabi = RabiSpec::new(1.0, 0.5, 1.3, 0.0).unwrap().hamiltonian();
        let prop = one_period_propagator(&rabi, 4096).unwrap();
        assert!(prop.unitarity_defect() < 1e-10);

        let chain = SshSpec::new(1.0, 1.5, 0.2, 5.0, 3)
            .unwrap()
            .open_chain()
            .unwrap();
        let prop = one_period_propagator(&chain, 512).unwrap();
        assert!(prop.unitarity_defect() < 1e-10);
    }

    #[test]
    fn floquet_modes_return_after_one_period() {
        let rabi = RabiSpec::new(1.0, 0.3, 0.9, 0.0).unwrap().hamiltonian();
        let prop = one_period_propagator(&rabi, 2048).unwrap();
        let qs = floquet_states(&prop, 0.9).unwrap();
        // |Φ(T)⟩ = e^{iεT} U(T)|Φ(0)⟩ must equal |Φ(0)⟩
        for band in 0..2 {
            let phase = C64::from_polar(1.0, qs.eps[band] * prop.period);
            for i in 0..2 {
                let mut uv = C64::new(0.0, 0.0);
                for j in 0..2 {
                    uv += prop.u[[i, j]] * qs.modes[[j, band]];
                }
                assert!((phase * uv - qs.modes[[i, band]]).norm() < 1e-8);
            }
        }
    }

    #[test]
    fn spectrum_invariant_under_time_origin_shift() {
        // U starting at t0 and t0+δ are conjugate; quasienergies agree.
        let rabi = RabiSpec::new(1.0, 0.4, 1.1, 0.3).unwrap().hamiltonian();
        let t_period = rabi.period();
        let p0 = propagate_interval(&rabi, 0.0, t_period, 4096).unwrap();
        let p1 = propagate_interval(&rabi, 0.3, 0.3 + t_period, 4096).unwrap();
        let q0 = quasienergies(&p0, 1.1).unwrap();
        let q1 = quasienergies(&p1, 1.1).unwrap();
        for (a, b) in q0.eps.iter().zip(q1.eps.iter()) {
            assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn midpoint_rule_second_order_convergence() {
        // error vs a 4× oversampled reference falls off with slope 2 ± 0.2
        let rabi = RabiSpec::new(1.0, 0.8, 1.3, 0.4).unwrap().hamiltonian();
        let reference = one_period_propagator(&rabi, 16384).unwrap();
        let qref = quasienergies(&reference, 1.3).unwrap();
        let steps_list = [256usize, 512, 1024, 2048];
        let mut errs = Vec::new();
        for &s in &steps_list {
            let q = quasienergies(&one_period_propagator(&rabi, s).unwrap(), 1.3).unwrap();
            let e = q
                .eps
                .iter()
                .zip(qref.eps.iter())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0f64, f64::max);
            errs.push(e);
        }
        let xs: Vec<f64> = steps_list.iter().map(|&s| 1.0 / s as f64).collect();
        let slope = log_log_slope(&xs, &errs);
        assert!(
            (slope - 2.0).abs() < 0.2,
            "convergence slope {slope}, errors {errs:?}"
        );
    }

    #[test]
    fn doubling_steps_at_default_changes_little() {
        let rabi = RabiSpec::new(1.0, 0.1, 1.0, 0.0).unwrap().hamiltonian();
        let q1 = quasienergies(&one_period_propagator(&rabi, 4096).unwrap(), 1.0).unwrap();
        let q2 = quasienergies(&one_period_propagator(&rabi, 8192).unwrap(), 1.0).unwrap();
        for (a, b) in q1.eps.iter().zip(q2.eps.iter()) {
            assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn gap_metrics() {
        let w = 2.0 * PI;
        // states at ±1: 0-gap = 2, π-gap = ω - 2
        let eps = [-1.0, 1.0];
        assert!((zero_gap(&eps, w) - 2.0).abs() < 1e-12);
        assert!((pi_gap(&eps, w) - (w - 2.0)).abs() < 1e-12);
        // state exactly on the boundary closes the π-gap
        let eps = [-w / 2.0, 0.3];
        assert!(pi_gap(&eps, w) < 1e-15);
        // steps < 256 rejected
        let rabi = RabiSpec::new(1.0, 0.1, 1.0, 0.0).unwrap().hamiltonian();
        assert!(one_period_propagator(&rabi, 128).is_err());
    }

    #[test]
    fn overlap_matching_tracks_permutation() {
        let mut a = CMat::eye(3);
        // b = a with columns 0 and 2 swapped (plus small rotation)
        let mut b = CMat::zeros((3, 3));
        b[[0, 2]] = C64::new(1.0, 0.0);
        b[[1, 1]] = C64::new(1.0, 0.0);
        b[[2, 0]] = C64::new(1.0, 0.0);
        let assign = match_by_overlap(&a, &b);
        assert_eq!(assign, vec![2, 1, 0]);
        a[[0, 0]] = C64::new(0.99, 0.0);
        a[[1, 0]] = C64::new(0.141, 0.0);
        let assign = match_by_overlap(&a, &b);
        assert_eq!(assign, vec![2, 1, 0]);
    }
}
