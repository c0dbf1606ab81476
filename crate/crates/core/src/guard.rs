//! Enumeration guards.
//!
//! Several products and coproducts are computed by explicit enumeration whose
//! cost grows exponentially (or factorially) in the grading. Each such
//! operation refuses inputs past a fixed default size. The `VINC_SIZE_GUARD`
//! environment variable, read once per process, overrides every default with
//! a single integer.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Cover enumeration over interval partitions (3^n covers).
pub const DEFAULT_PARTITION_GUARD: usize = 12;
/// Permutation-host enumeration (n! hosts).
pub const DEFAULT_PERMUTATION_GUARD: usize = 8;
/// Combined partition-and-permutation enumeration.
pub const DEFAULT_VINCULAR_GUARD: usize = 7;

fn env_override() -> Option<usize> {
    static OVERRIDE: OnceLock<Option<usize>> = OnceLock::new();
    *OVERRIDE.get_or_init(|| {
        std::env::var("VINC_SIZE_GUARD")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
    })
}

pub fn partition_guard() -> usize {
    env_override().unwrap_or(DEFAULT_PARTITION_GUARD)
}

pub fn permutation_guard() -> usize {
    env_override().unwrap_or(DEFAULT_PERMUTATION_GUARD)
}

pub fn vincular_guard() -> usize {
    env_override().unwrap_or(DEFAULT_VINCULAR_GUARD)
}

/// Checks `size` against `limit`, naming the operation in the error.
pub fn check(op: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::SizeGuard { op, size, limit })
    } else {
        Ok(())
    }
}
