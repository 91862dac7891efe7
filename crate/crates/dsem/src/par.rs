//! Data-parallel sweep helpers.
//!
//! Classification and verification sweeps are independent per item, so with
//! the `parallel` feature they fan out over rayon; without it (or with a
//! worker count of 1) the same code runs sequentially. Results keep input
//! order, so output is identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use std::sync::atomic::{AtomicBool, Ordering};

static FORCE_SERIAL: AtomicBool = AtomicBool::new(false);

/// Limits sweep parallelism. 1 forces the sequential path; 0 or anything
/// else uses the default pool. Intended to be called once at startup.
pub fn set_parallelism(degree: usize) {
    FORCE_SERIAL.store(degree == 1, Ordering::Relaxed);
    #[cfg(feature = "parallel")]
    if degree > 1 {
        // ignore the error if a global pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(degree)
            .build_global();
    }
}

pub fn serial_forced() -> bool {
    FORCE_SERIAL.load(Ordering::Relaxed)
}

/// Maps a fallible function over a slice, in parallel when available.
pub fn map_params<T, U, E, F>(items: &[T], f: F) -> Result<Vec<U>, E>
where
    T: Sync,
    U: Send,
    E: Send,
    F: Fn(&T) -> Result<U, E> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if !serial_forced() {
            return items.par_iter().map(|t| f(t)).collect();
        }
    }
    items.iter().map(|t| f(t)).collect()
}

/// Infallible variant.
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if !serial_forced() {
            return items.par_iter().map(|t| f(t)).collect();
        }
    }
    items.iter().map(|t| f(t)).collect()
}
