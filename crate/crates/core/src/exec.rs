//! Execution policy for the exhaustive sweeps.
//!
//! Every subset or partition sweep in the crate is an embarrassingly
//! parallel map over a `u64` index range. With the `parallel` feature the
//! sweeps run on rayon's pool; without it, or under [`Exec::Sequential`],
//! they run on the calling thread. Both paths visit the same indices and
//! return identical results.

use std::env;
use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Environment variable that overrides every capacity bound in [`Limits`].
pub const MAX_GROUND_ENV: &str = "MATCONN_MAX_GROUND";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    #[cfg(feature = "parallel")]
    fn parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    pub(crate) fn map<T, F>(self, range: Range<u64>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.parallel() {
            return range.into_par_iter().map(f).collect();
        }
        range.map(f).collect()
    }

    /// First index (in ascending order) for which `f` yields a value.
    pub(crate) fn find_first<T, F>(self, range: Range<u64>, f: F) -> Option<T>
    where
        T: Send,
        F: Fn(u64) -> Option<T> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.parallel() {
            return range.into_par_iter().filter_map(f).find_first(|_| true);
        }
        range.filter_map(f).next()
    }

    /// Minimum of the values produced by `f`, ties broken by smallest index.
    pub(crate) fn min_by_key<T, K, F>(self, range: Range<u64>, f: F) -> Option<(K, u64, T)>
    where
        T: Send,
        K: Ord + Send + Copy,
        F: Fn(u64) -> Option<(K, T)> + Sync + Send,
    {
        let pick = |a: (K, u64, T), b: (K, u64, T)| if (b.0, b.1) < (a.0, a.1) { b } else { a };
        #[cfg(feature = "parallel")]
        if self.parallel() {
            return range
                .into_par_iter()
                .filter_map(|i| f(i).map(|(k, t)| (k, i, t)))
                .reduce_with(pick);
        }
        range
            .filter_map(|i| f(i).map(|(k, t)| (k, i, t)))
            .reduce(pick)
    }
}

/// Size bounds for the exhaustive procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub axioms: usize,
    pub separation: usize,
    pub equivalence: usize,
    pub dual_pair: usize,
    pub kappa_duality: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            axioms: 14,
            separation: 16,
            equivalence: 12,
            dual_pair: 14,
            kappa_duality: 10,
        }
    }
}

impl Limits {
    /// All bounds set to one value.
    pub fn uniform(n: usize) -> Self {
        Limits {
            axioms: n,
            separation: n,
            equivalence: n,
            dual_pair: n,
            kappa_duality: n,
        }
    }

    /// Defaults, overridden wholesale by `MATCONN_MAX_GROUND` when it parses.
    pub fn from_env() -> Self {
        env::var(MAX_GROUND_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Limits::uniform)
            .unwrap_or_default()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub exec: Exec,
    pub limits: Limits,
    /// Allow bounded, non-exhaustive separation search past the limits.
    pub heuristic: bool,
}

impl Options {
    pub fn sequential() -> Self {
        Options {
            exec: Exec::Sequential,
            ..Options::default()
        }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }
}
