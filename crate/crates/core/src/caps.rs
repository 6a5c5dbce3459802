//! Size caps for the exponential routines, overridable through `GBEI_CAPS`.
//!
//! The variable holds comma-separated `key=value` pairs, e.g.
//! `GBEI_CAPS=subset=16,timeout=600`. Recognised keys: `brute`, `cutsets`, `h2`,
//! `su`, `cliques`, `subset`, `gb_vars`, `gb_gens`, `timeout` (seconds).

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const ENV_VAR: &str = "GBEI_CAPS";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Caps {
    /// Brute-force vertex connectivity oracle.
    pub brute_connectivity: usize,
    /// Cut set enumeration.
    pub cutsets: usize,
    /// H2 recognizer.
    pub h2: usize,
    /// Strongly-unmixed recursion.
    pub strongly_unmixed: usize,
    /// Maximal clique enumeration.
    pub cliques: usize,
    /// Ground-set size of the Stanley-Reisner subset scan (`m * n`).
    pub subset_scan: usize,
    /// Variables in a Gröbner basis computation, excluding the elimination variable.
    pub gb_vars: usize,
    /// Input generators of a Gröbner basis computation.
    pub gb_generators: usize,
    /// Wall-clock limit per Gröbner basis, in seconds.
    pub gb_timeout_secs: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            brute_connectivity: 12,
            cutsets: 16,
            h2: 10,
            strongly_unmixed: 12,
            cliques: 32,
            subset_scan: 15,
            gb_vars: 16,
            gb_generators: 60,
            gb_timeout_secs: 60,
        }
    }
}

impl Caps {
    /// Defaults overridden by `GBEI_CAPS` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(ENV_VAR) {
            Ok(spec) => Self::default().with_overrides(&spec),
            Err(_) => Ok(Self::default()),
        }
    }

    /// Applies `key=value` overrides on top of `self`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("{ENV_VAR}: expected key=value, got {part:?}")))?;
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{ENV_VAR}: bad number in {part:?}")))?;
            let v = value as usize;
            match key.trim() {
                "brute" => self.brute_connectivity = v,
                "cutsets" => self.cutsets = v,
                "h2" => self.h2 = v,
                "su" => self.strongly_unmixed = v,
                "cliques" => self.cliques = v,
                "subset" => self.subset_scan = v,
                "gb_vars" => self.gb_vars = v,
                "gb_gens" => self.gb_generators = v,
                "timeout" => self.gb_timeout_secs = value,
                other => return Err(Error::Parse(format!("{ENV_VAR}: unknown key {other:?}"))),
            }
        }
        Ok(self)
    }

    pub fn gb_timeout(&self) -> Duration {
        Duration::from_secs(self.gb_timeout_secs)
    }

    pub(crate) fn check(what: &'static str, value: usize, cap: usize) -> Result<()> {
        if value > cap {
            Err(Error::CapExceeded { what, value, cap })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let caps = Caps::default().with_overrides("subset=16, timeout=600").unwrap();
        assert_eq!(caps.subset_scan, 16);
        assert_eq!(caps.gb_timeout_secs, 600);
        assert_eq!(caps.cutsets, 16);
        assert!(Caps::default().with_overrides("bogus=1").is_err());
        assert!(Caps::default().with_overrides("subset").is_err());
        assert_eq!(Caps::default().with_overrides("").unwrap(), Caps::default());
    }
}
