use crate::error::{Error, Result};

/// Environment variable that overrides [`Limits::size_cap`].
pub const SIZE_CAP_ENV: &str = "SEMIRING_LAB_SIZE_CAP";

/// Caps on the carriers fed to exhaustive enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest carrier for congruence, subobject and homomorphism enumeration.
    pub size_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { size_cap: 16 }
    }
}

impl Limits {
    pub fn with_size_cap(size_cap: usize) -> Self {
        Limits { size_cap }
    }

    /// Defaults, overridden by `SEMIRING_LAB_SIZE_CAP` when it parses.
    pub fn from_env() -> Self {
        std::env::var(SIZE_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Limits::with_size_cap)
            .unwrap_or_default()
    }

    pub fn check(&self, what: &'static str, size: usize) -> Result<()> {
        if size > self.size_cap {
            Err(Error::SizeCapExceeded {
                what,
                size,
                cap: self.size_cap,
            })
        } else {
            Ok(())
        }
    }
}
