use crate::error::{Error, Result};

/// Hard caps on the exhaustive searches. Exceeding any of them is an error,
/// never a silent approximation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of states kept in one frontier of the path search.
    pub frontier: usize,
    /// Maximum number of canonical list assignments visited by the generic search.
    pub assignments: u64,
    /// Maximum number of covers (permutation tuples) enumerated by the DP search.
    pub covers: u64,
    /// Maximum number of raw assignments a brute-force enumeration may visit.
    pub enumeration: u64,
}

impl Budget {
    pub const DEFAULT_FRONTIER: usize = 400_000;
    pub const DEFAULT_ASSIGNMENTS: u64 = 50_000_000;
    pub const DEFAULT_COVERS: u64 = 20_000_000;
    pub const DEFAULT_ENUMERATION: u64 = 200_000_000;

    pub fn unlimited() -> Self {
        Budget {
            frontier: usize::MAX,
            assignments: u64::MAX,
            covers: u64::MAX,
            enumeration: u64::MAX,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.frontier == 0 || self.assignments == 0 || self.covers == 0 || self.enumeration == 0
        {
            return Err(Error::Malformed("budgets must be strictly positive".into()));
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            frontier: Self::DEFAULT_FRONTIER,
            assignments: Self::DEFAULT_ASSIGNMENTS,
            covers: Self::DEFAULT_COVERS,
            enumeration: Self::DEFAULT_ENUMERATION,
        }
    }
}

/// `base^exp` if it stays at or below `limit`, otherwise `None`.
pub(crate) fn bounded_pow(base: u64, exp: u32, limit: u64) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
        if acc > limit {
            return None;
        }
    }
    (acc <= limit).then_some(acc)
}
