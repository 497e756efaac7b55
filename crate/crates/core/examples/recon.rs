// Development reconnaissance for convention pinning. Not part of the build.
use floquet_topo::floquet::*;
use floquet_topo::models::*;
use floquet_topo::numerics::*;
use floquet_topo::rwa::*;
use floquet_topo::topology::*;
use std::f64::consts::{FRAC_PI_2, PI};

fn main() {
    let steps = 4096;

    // 1. Exact effective mass at the Dirac point (pi/2, 0)
    for a in [0.5, 1.0] {
        let spec = PiFluxSpec::new(1.0, a, a, 6.0, FRAC_PI_2, 8).unwrap();
        let h = spec.bloch(FRAC_PI_2, 0.0);
        let prop = one_period_propagator(&h, steps).unwrap();
        let qs = quasienergies(&prop, 6.0).unwrap();
        let gap = qs.eps[1] - qs.eps[0];
        let h1 = spec.mass_h1(FRAC_PI_2, 0.0);
        println!(
            "A={a}: exact 0-gap at Dirac = {gap:.6}, 2|h1| = {:.6}, ratio = {:.4}",
            2.0 * h1.abs(),
            gap / (2.0 * h1.abs())
        );
        // effective Hamiltonian H_F = sum_i -theta_i/T * v_i v_i^dag; dz sign
        let dec = eig_unitary(&prop.u).unwrap();
        let t = prop.period;
        let mut hf = [[num_complex::Complex64::new(0.0, 0.0); 2]; 2];
        for k in 0..2 {
            let e = -dec.phases[k] / t;
            for i in 0..2 {
                for j in 0..2 {
                    hf[i][j] += dec.vectors[[i, k]] * e * dec.vectors[[j, k]].conj();
                }
            }
        }
        let dz = 0.5 * (hf[0][0].re - hf[1][1].re);
        println!(
            "   exact effective dz = {dz:.6}, strobo mass h1 = {h1:.6} (MASS_SIGN = {MASS_SIGN})"
        );
    }

    // 2. Exact Chern number at omega = 6J, A=0.5 (formal torus, halved)
    let spec = PiFluxSpec::new(1.0, 0.5, 0.5, 6.0, FRAC_PI_2, 8).unwrap();
    for n in [128usize] {
        let mut upper = Vec::with_capacity(n * n);
        let mut lower = Vec::with_capacity(n * n);
        for ix in 0..n {
            let kx = -PI + 2.0 * PI * ix as f64 / n as f64;
            for iy in 0..n {
                let ky = -PI + 2.0 * PI * iy as f64 / n as f64;
                let h = spec.bloch(kx, ky);
                let prop = one_period_propagator(&h, 1024).unwrap();
                let qs = quasienergies(&prop, 6.0).unwrap();
                lower.push([qs.modes[[0, 0]], qs.modes[[1, 0]]]);
                upper.push([qs.modes[[0, 1]], qs.modes[[1, 1]]]);
            }
        }
        let map_u = berry_flux_map(n, n, &upper).unwrap();
        let map_l = berry_flux_map(n, n, &lower).unwrap();
        println!(
            "n={n}: exact Chern upper (double) = {:?}, lower = {:?}",
            chern_number(&map_u),
            chern_number(&map_l)
        );
        // stroboscopic band Chern for comparison
        let mut su = Vec::with_capacity(n * n);
        let mut sl = Vec::with_capacity(n * n);
        for ix in 0..n {
            let kx = -PI + 2.0 * PI * ix as f64 / n as f64;
            for iy in 0..n {
                let ky = -PI + 2.0 * PI * iy as f64 / n as f64;
                let b = spec.stroboscopic(kx, ky);
                let ((_, vp), (_, vm)) = b.eigen();
                su.push(vp);
                sl.push(vm);
            }
        }
        println!(
            "     strobo Chern upper (double) = {:?}, lower = {:?}",
            chern_number(&berry_flux_map(n, n, &su).unwrap()),
            chern_number(&berry_flux_map(n, n, &sl).unwrap())
        );
        println!(
            "     analytic high-freq formula: {:?}",
            analytic_chern_highfreq(&spec)
        );
    }

    // 3. Exact pi-gap at (0, pi/2) at the resonance frequency
    let omega_c = piflux_critical_frequencies(&spec)[0].omega_c;
    for w in [omega_c, omega_c - 0.02, omega_c + 0.02] {
        let s = PiFluxSpec::new(1.0, 0.5, 0.5, w, FRAC_PI_2, 8).unwrap();
        let prop = one_period_propagator(&s.bloch(0.0, FRAC_PI_2), 8192).unwrap();
        let qs = quasienergies(&prop, w).unwrap();
        println!(
            "omega = {w:.6}: pi-gap at (0, pi/2) = {:.6e}",
            pi_gap(&qs.eps, w)
        );
    }
    // location of the true closure: scan omega
    let mut best = (0.0, 1e9);
    for i in 0..200 {
        let w = omega_c - 0.01 + 0.0001 * i as f64;
        let s = PiFluxSpec::new(1.0, 0.5, 0.5, w, FRAC_PI_2, 8).unwrap();
        let prop = one_period_propagator(&s.bloch(0.0, FRAC_PI_2), 4096).unwrap();
        let qs = quasienergies(&prop, w).unwrap();
        let g = pi_gap(&qs.eps, w);
        if g < best.1 {
            best = (w, g);
        }
    }
    println!(
        "true closure near omega* = {:.6} (gap {:.3e}); Eq-42 value {omega_c:.6}, shift {:+.4e}",
        best.0,
        best.1,
        best.0 - omega_c
    );

    // 4. high-frequency series slope: |eps_exact - (d0/2 - d1^2/(4w))| vs w
    for v in [0.1, 0.5, 5.0] {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for i in 0..12 {
            let w = 5.0 * (10.0f64).powf(i as f64 / 11.0); // 5..50
            let spec = RabiSpec::new(1.0, v, w, 0.0).unwrap();
            let prop = one_period_propagator(&spec.hamiltonian(), 4096).unwrap();
            let qs = quasienergies(&prop, w).unwrap();
            let d0 = spec.delta_n(0);
            let d1 = spec.delta_n(1);
            let series = 0.5 * d0 - d1 * d1 / (4.0 * w);
            let eps_plus = qs.eps[1];
            xs.push(w);
            ys.push((eps_plus - series).abs());
        }
        println!(
            "V={v}: slope = {:.3}  errors {:.2e} .. {:.2e}",
            -log_log_slope(&xs, &ys),
            ys[0],
            ys[ys.len() - 1]
        );
    }

    // 5. Rabi analytic-vs-exact max deviation over the Fig.-2 windows
    for (v, wlo, whi) in [(0.1, 0.8, 5.0), (5.0, 2.0, 8.0)] {
        let mut worst = 0.0f64;
        let mut worst_w = 0.0;
        for i in 0..=120 {
            let w = wlo + (whi - wlo) * i as f64 / 120.0;
            let spec = RabiSpec::new(1.0, v, w, 0.0).unwrap();
            let prop = one_period_propagator(&spec.hamiltonian(), 4096).unwrap();
            let qs = quasienergies(&prop, w).unwrap();
            let (ap, am) = rabi_analytic_quasienergies(&spec);
            let mut a = [ap, am];
            a.sort_by(|x, y| x.partial_cmp(y).unwrap());
            let d = (a[0] - qs.eps[0])
                .abs()
                .max((a[1] - qs.eps[1]).abs());
            // circular distance matters near the zone edge
            let dc = circ_offset(a[0], qs.eps[0], w)
                .abs()
                .max(circ_offset(a[1], qs.eps[1], w).abs());
            let d = d.min(dc);
            if d > worst {
                worst = d;
                worst_w = w;
            }
        }
        println!("V={v}: max |analytic - exact| = {worst:.4} at omega = {worst_w:.3}");
    }

    // 6. pi-gap splitting at omega* vs Delta J1(2V/omega*)
    let spec = RabiSpec::new(1.0, 0.1, 1.0, 0.0).unwrap();
    let cf = rabi_critical_frequencies(&spec).unwrap();
    let wstar = cf[0].omega_c;
    let s2 = RabiSpec::new(1.0, 0.1, wstar, 0.0).unwrap();
    let prop = one_period_propagator(&s2.hamiltonian(), 8192).unwrap();
    let qs = quasienergies(&prop, wstar).unwrap();
    let split = pi_gap(&qs.eps, wstar);
    let want = (s2.delta_n(1)).abs();
    println!(
        "omega* = {wstar:.5}: exact pi-gap splitting {split:.6} vs |Delta1| {want:.6} (ratio {:.4})",
        split / want
    );

    // 7. band overlap (criterion 10 recon): A=1, omega=6J
    let spec = PiFluxSpec::new(1.0, 1.0, 1.0, 6.0, FRAC_PI_2, 8).unwrap();
    let n = 48;
    let mut max_raw = 0.0f64;
    let mut max_ren = 0.0f64;
    for ix in 0..n {
        let kx = -PI + 2.0 * PI * ix as f64 / n as f64;
        for iy in 0..n {
            let ky = -PI + 2.0 * PI * iy as f64 / n as f64;
            // outside disks of radius pi/3 around (±pi/2, 0) and images
            let dirac = [
                (FRAC_PI_2, 0.0),
                (-FRAC_PI_2, 0.0),
                (FRAC_PI_2, PI),
                (-FRAC_PI_2, PI),
            ];
            let dist = dirac
                .iter()
                .map(|&(dx, dy)| {
                    let ddx = (kx - dx).rem_euclid(2.0 * PI).min((dx - kx).rem_euclid(2.0 * PI));
                    let ddy = (ky - dy).rem_euclid(2.0 * PI).min((dy - ky).rem_euclid(2.0 * PI));
                    (ddx * ddx + ddy * ddy).sqrt()
                })
                .fold(f64::INFINITY, f64::min);
            if dist < PI / 3.0 {
                continue;
            }
            let prop = one_period_propagator(&spec.bloch(kx, ky), 1024).unwrap();
            let qs = quasienergies(&prop, 6.0).unwrap();
            let e_driven = qs.eps[1];
            let e_und = 2.0 * (kx.cos().powi(2) + ky.sin().powi(2)).sqrt();
            let e_avg = spec.averaged(kx, ky).norm();
            max_raw = max_raw.max((e_driven - e_und).abs());
            max_ren = max_ren.max((e_driven - e_avg).abs());
        }
    }
    let bandwidth = 4.0 * 2.0f64.sqrt();
    println!(
        "A=1, omega=6: max |E_driven - E_undriven| = {max_raw:.4} ({:.2}% of bandwidth), vs averaged = {max_ren:.4} ({:.2}%)",
        100.0 * max_raw / bandwidth,
        100.0 * max_ren / bandwidth
    );
    let h1 = spec.mass_h1(FRAC_PI_2, 0.0).abs();
    let prop = one_period_propagator(&spec.bloch(FRAC_PI_2, 0.0), 8192).unwrap();
    let qs = quasienergies(&prop, 6.0).unwrap();
    println!(
        "A=1 Dirac gap: exact = {:.5}, 2|h1| = {:.5}",
        qs.eps[1] - qs.eps[0],
        2.0 * h1
    );
}
