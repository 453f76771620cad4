//! Resource limits shared by the exhaustive searches.

use crate::Error;

/// Environment variable holding comma separated `key=value` overrides.
pub const GUARDS_ENV: &str = "OREQ_GUARDS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Largest ring order accepted by element scans.
    pub order: usize,
    /// Largest number of left ideals enumerated.
    pub ideals: usize,
    /// Largest ring order for maximal denominator set searches.
    pub maxden: usize,
    /// Largest matrix-unit index in `I₁` products.
    pub findex: u32,
    /// Largest rational function degree in skew arithmetic.
    pub rfdeg: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards { order: 256, ideals: 4096, maxden: 16, findex: 64, rfdeg: 128 }
    }
}

impl Guards {
    /// Applies overrides such as `order=64,ideals=100`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self, Error> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Invalid(format!("guard override '{item}' is not key=value")))?;
            let n: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("guard value '{value}' is not a natural number")))?;
            match key.trim() {
                "order" => self.order = n,
                "ideals" => self.ideals = n,
                "maxden" => self.maxden = n,
                "findex" => {
                    self.findex = u32::try_from(n).map_err(|_| Error::Invalid("findex too large".into()))?
                }
                "rfdeg" => self.rfdeg = n,
                other => return Err(Error::Invalid(format!("unknown guard '{other}'"))),
            }
        }
        Ok(self)
    }

    /// Defaults overridden by `OREQ_GUARDS` when set.
    pub fn from_env() -> Result<Self, Error> {
        match std::env::var(GUARDS_ENV) {
            Ok(spec) => Guards::default().with_overrides(&spec),
            Err(_) => Ok(Guards::default()),
        }
    }
}
