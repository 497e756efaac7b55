//! Order-preserving parallel map over k-grids.
//!
//! Every sweep in this crate is an embarrassingly parallel map with
//! deterministic per-element results; outputs are collected by index, so the
//! result does not depend on scheduling. With the `parallel` feature disabled
//! the same API runs sequentially and rayon is not linked at all.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `0..n`, preserving index order in the output.
pub fn par_map_idx<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Map `f` over a slice, preserving order.
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Run `job` on a rayon pool capped at `threads` workers (`None` = default).
/// Without the `parallel` feature the job just runs on the current thread.
pub fn run_with_threads<R, F>(threads: Option<usize>, job: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    {
        match threads {
            Some(n) if n > 0 => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("failed to build rayon pool")
                .install(job),
            _ => job(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        job()
    }
}

/// Sum by pairwise reduction. Deterministic for a fixed input order and
/// better conditioned than a running sum on large grids.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let (lo, hi) = values.split_at(n / 2);
            pairwise_sum(lo) + pairwise_sum(hi)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn par_map_preserves_order() {
        let out = par_map_idx(1000, |i| i * i);
        assert!(out.iter().enumerate().all(|(i, &v)| v == i * i));
    }

    #[test]
    fn pairwise_sum_matches_serial() {
        let xs: Vec<f64> = (0..1025).map(|i| (i as f64).sin()).collect();
        let serial: f64 = xs.iter().sum();
        assert!((pairwise_sum(&xs) - serial).abs() < 1e-9);
    }

    #[test]
    fn thread_cap_runs_job() {
        let r = run_with_threads(Some(1), || par_map_idx(64, |i| i).len());
        assert_eq!(r, 64);
    }
}
