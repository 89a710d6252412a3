use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Default upper bound on the number of enumerated objects per call.
pub const DEFAULT_BUDGET: u128 = 200_000_000;

/// Caps the work an enumeration is allowed to do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u128);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget(u128::MAX)
    }

    pub fn check(self, estimate: u128) -> Result<()> {
        if estimate > self.0 {
            Err(Error::ResourceLimit { estimate, budget: self.0 })
        } else {
            Ok(())
        }
    }
}

/// Work counter shared across worker threads; fails once the budget is exhausted.
#[derive(Debug)]
pub(crate) struct Meter {
    used: AtomicU64,
    budget: Budget,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        Meter { used: AtomicU64::new(0), budget }
    }

    pub(crate) fn tick(&self) -> Result<()> {
        let used = self.used.fetch_add(1, Ordering::Relaxed) as u128 + 1;
        self.budget.check(used)
    }
}
