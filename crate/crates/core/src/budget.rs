use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::hypergraph::Matching;

/// Limits for one exact search. Exhaustion is always reported to the caller.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_cap: u64,
    pub time_cap_ms: u64,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            node_cap: 10_000_000,
            time_cap_ms: 600_000,
            seed: 0,
        }
    }
}

impl SearchBudget {
    pub fn new(node_cap: u64, time_cap_ms: u64, seed: u64) -> Result<Self> {
        let budget = Self {
            node_cap,
            time_cap_ms,
            seed,
        };
        budget.validate()?;
        Ok(budget)
    }

    pub fn with_nodes(node_cap: u64) -> Self {
        Self {
            node_cap,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.node_cap == 0 || self.time_cap_ms == 0 {
            return Err(Error::InvalidBudget(
                "node and time caps must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Counts search nodes against a [`SearchBudget`].
#[derive(Debug)]
pub(crate) struct Meter {
    nodes: u64,
    node_cap: u64,
    deadline: Option<Instant>,
    exhausted: bool,
}

impl Meter {
    pub fn new(budget: &SearchBudget) -> Self {
        Self {
            nodes: 0,
            node_cap: budget.node_cap,
            deadline: Instant::now().checked_add(Duration::from_millis(budget.time_cap_ms)),
            exhausted: false,
        }
    }

    /// Charges one node; false once the budget is spent.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.node_cap {
            self.exhausted = true;
        } else if self.nodes & 0x3ff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.exhausted = true;
                }
            }
        }
        !self.exhausted
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.min(self.node_cap)
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted
    }
}

/// Result of a decision search for a k-matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Matching),
    /// The search completed: no such matching exists.
    Absent,
    /// The budget ran out before the question was settled.
    Indeterminate,
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&Matching> {
        match self {
            Self::Found(m) => Some(m),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Self::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Self::Absent)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Self::Found(_) => "found",
            Self::Absent => "absent",
            Self::Indeterminate => "indeterminate",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meter_stops_at_cap() {
        let mut meter = Meter::new(&SearchBudget::with_nodes(3));
        assert!(meter.tick());
        assert!(meter.tick());
        assert!(meter.tick());
        assert!(!meter.tick());
        assert!(meter.exhausted());
        assert_eq!(meter.nodes(), 3);
    }

    #[test]
    fn zero_caps_rejected() {
        assert!(SearchBudget::new(0, 10, 0).is_err());
        assert!(SearchBudget::new(10, 0, 0).is_err());
        assert!(SearchBudget::new(10, 10, 7).is_ok());
    }
}
