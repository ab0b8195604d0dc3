//! Size limits for the expensive operations, overridable from a plain
//! `key=value` file.

use crate::error::{Error, Result};

/// Caps that keep searches and constructions at desk scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum `k^n` for exhaustive search.
    pub exhaustive_cap: u128,
    /// Maximum vertex count for shift-chain enumeration.
    pub enumerate_max_n: usize,
    /// Maximum uniformity accepted by the recursive construction.
    pub construct_max_m: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exhaustive_cap: 100_000_000,
            enumerate_max_n: 10,
            construct_max_m: 8,
        }
    }
}

impl Limits {
    /// Parses a config file. Blank lines and lines starting with `#` are
    /// skipped; unknown keys are rejected so typos do not pass silently.
    pub fn parse(text: &str) -> Result<Self> {
        let mut limits = Limits::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::parse(line_no, "expected key=value"))?;
            let value = value.trim();
            let bad = |_| Error::parse(line_no, format!("invalid value {value:?}"));
            match key.trim() {
                "exhaustive_cap" => limits.exhaustive_cap = value.parse().map_err(bad)?,
                "enumerate_max_n" => limits.enumerate_max_n = value.parse().map_err(bad)?,
                "construct_max_m" => limits.construct_max_m = value.parse().map_err(bad)?,
                other => return Err(Error::parse(line_no, format!("unknown key {other:?}"))),
            }
        }
        Ok(limits)
    }
}
