//! Size guards for the enumerations that grow exponentially.
//!
//! Cell-count style guards (lcm-lattice size, tropical candidate types, graded
//! piece dimension) can be raised or lowered with the `PARKIDEAL_MAX_CELLS`
//! environment variable. Structural guards (edge count of the TU sweep, forest
//! enumeration size) are fixed.

use crate::error::{Error, Result};
use std::sync::OnceLock;

pub const ENV_MAX_CELLS: &str = "PARKIDEAL_MAX_CELLS";

pub const LCM_LATTICE_LIMIT: u128 = 200_000;
pub const TROPICAL_MAX_N: usize = 10;
pub const GRADED_PIECE_LIMIT: u128 = 50_000;
pub const TU_MAX_EDGES: usize = 24;
pub const FOREST_MAX_N: usize = 8;
pub const SURVEY_MAX_VERTICES: usize = 7;

fn env_override() -> Option<u128> {
    static CELL: OnceLock<Option<u128>> = OnceLock::new();
    *CELL.get_or_init(|| std::env::var(ENV_MAX_CELLS).ok()?.trim().parse().ok())
}

/// Cell-style limit: the environment override if set, else `default`.
pub fn cell_limit(default: u128) -> u128 {
    env_override().unwrap_or(default)
}

pub(crate) fn check(what: &'static str, size: u128, limit: u128) -> Result<()> {
    if size > limit {
        Err(Error::Resource { what, size, limit })
    } else {
        Ok(())
    }
}
