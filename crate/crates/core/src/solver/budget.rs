use std::time::{Duration, Instant};

use super::SolverError;

pub const BUDGET_ENV: &str = "HOMFORGE_BUDGET_MS";

/// Optional node and wall-clock limits for exhaustive searches.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchBudget {
    node_limit: Option<u64>,
    time_limit: Option<Duration>,
}

impl SearchBudget {
    pub const UNLIMITED: SearchBudget = SearchBudget {
        node_limit: None,
        time_limit: None,
    };

    pub fn new(node_limit: Option<u64>, time_limit: Option<Duration>) -> Result<Self, SolverError> {
        if node_limit == Some(0) || time_limit == Some(Duration::ZERO) {
            return Err(SolverError::InvalidBudget);
        }
        Ok(SearchBudget { node_limit, time_limit })
    }

    pub fn nodes(limit: u64) -> Self {
        SearchBudget::new(Some(limit.max(1)), None).expect("positive")
    }

    pub fn time(limit: Duration) -> Self {
        SearchBudget::new(None, Some(limit.max(Duration::from_millis(1)))).expect("positive")
    }

    /// Time limit from `HOMFORGE_BUDGET_MS`, unlimited when unset or invalid.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .filter(|&ms| ms > 0)
            .map(|ms| SearchBudget::time(Duration::from_millis(ms)))
            .unwrap_or(SearchBudget::UNLIMITED)
    }

    pub fn node_limit(&self) -> Option<u64> {
        self.node_limit
    }

    pub fn time_limit(&self) -> Option<Duration> {
        self.time_limit
    }

    pub(crate) fn start(&self) -> BudgetMeter {
        BudgetMeter {
            node_limit: self.node_limit,
            deadline: self.time_limit.map(|d| Instant::now() + d),
            nodes: 0,
        }
    }
}

pub(crate) struct BudgetMeter {
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    nodes: u64,
}

impl BudgetMeter {
    /// Counts one search node; returns `true` once the budget is exhausted.
    pub(crate) fn tick(&mut self) -> bool {
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                return true;
            }
        }
        if let Some(deadline) = self.deadline {
            if self.nodes.is_multiple_of(128) && Instant::now() >= deadline {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits_must_be_positive() {
        assert_eq!(SearchBudget::new(Some(0), None), Err(SolverError::InvalidBudget));
        assert!(SearchBudget::new(Some(3), None).is_ok());
        let mut m = SearchBudget::nodes(2).start();
        assert!(!m.tick());
        assert!(!m.tick());
        assert!(m.tick());
        assert_eq!(m.nodes, 3);
    }
}
