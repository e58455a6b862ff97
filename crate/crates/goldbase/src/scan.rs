//! Range-mapping helpers behind the verification scans. With the
//! `parallel` feature (on by default) the work is spread over a rayon
//! pool; without it the same API degrades to a plain sequential loop.
//! Results are always collected in ascending-`n` order, so callers get
//! identical output regardless of feature flags or worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every `n` in `[lo, hi]` and collects the results in
/// order of `n`.
pub fn map_range<T, F>(lo: u64, hi: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (lo..=hi).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_range_seq(lo, hi, f)
    }
}

/// Single-threaded twin of [`map_range`]; always available so the bench
/// suite can compare the two directly.
pub fn map_range_seq<T, F>(lo: u64, hi: u64, f: F) -> Vec<T>
where
    F: Fn(u64) -> T,
{
    (lo..=hi).map(f).collect()
}

/// Caps the global worker count. `jobs = 0` keeps the library default
/// (one worker per core). Returns whether the setting took effect — the
/// pool can only be configured once per process, and without the
/// `parallel` feature there is nothing to configure.
pub fn configure_threads(jobs: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        if jobs == 0 {
            return true;
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        jobs <= 1
    }
}
