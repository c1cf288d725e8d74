//! Ground truth by exhaustion: canonical forms, `ex` and `ar` oracles,
//! coloring uniqueness, and grid verification of the closed forms.

mod ar;
mod canon;
mod ex;
mod verify;

pub use ar::{ar_exact, ar_m2_closed, ar_m2_formula, colorings_without_rainbow, ArResult, FixedColorCount};
pub use canon::{
    canonical_form, group_order, CanonicalLabel, Canonize, Canonizer, HostAutomorphism,
    DEFAULT_GROUP_CAP,
};
pub use ex::{ex_exact, ExMethod, ExResult, SUBSET_ENUMERATION_EDGES};
pub use verify::{
    check_uniqueness_coloring, confirm_rainbow_free, confirm_turan_counterexample, default_grid, route, verify_cell, verify_grid, Cell, Claim,
    ClaimResult, ClaimStatus, UniquenessReport, VerificationReport, write_csv,
};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::budget::SearchBudget;

/// Caps for the exhaustive oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Nodes for the `ex` subset and clique searches.
    pub subset_nodes: u64,
    /// Nodes for the `ar` set-partition search.
    pub partition_nodes: u64,
    /// Largest automorphism group enumerated for canonical labels.
    pub group_cap: u128,
    pub time_cap_ms: u64,
    /// Budget for matching and rainbow solvers used on constructions.
    pub search: SearchBudget,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            subset_nodes: 1 << 20,
            partition_nodes: 10_000_000,
            group_cap: DEFAULT_GROUP_CAP,
            time_cap_ms: 600_000,
            search: SearchBudget::default(),
        }
    }
}

/// An oracle answer: exact, or bracketed after the budget ran out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleValue {
    Exact(u64),
    Bracket { lower: u64, upper: u64 },
}

impl OracleValue {
    pub fn exact(self) -> Option<u64> {
        match self {
            Self::Exact(v) => Some(v),
            Self::Bracket { .. } => None,
        }
    }

    pub fn lower(self) -> u64 {
        match self {
            Self::Exact(v) | Self::Bracket { lower: v, .. } => v,
        }
    }

    pub fn upper(self) -> u64 {
        match self {
            Self::Exact(v) | Self::Bracket { upper: v, .. } => v,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Self::Exact(_))
    }
}

impl std::fmt::Display for OracleValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Exact(v) => write!(f, "{v}"),
            Self::Bracket { lower, upper } => write!(f, "budget-exhausted[{lower},{upper}]"),
        }
    }
}

impl Serialize for OracleValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match *self {
            Self::Exact(v) => s.serialize_u64(v),
            Self::Bracket { lower, upper } => {
                let mut st = s.serialize_struct("budget_exhausted", 3)?;
                st.serialize_field("status", "budget-exhausted")?;
                st.serialize_field("lower", &lower)?;
                st.serialize_field("upper", &upper)?;
                st.end()
            }
        }
    }
}
