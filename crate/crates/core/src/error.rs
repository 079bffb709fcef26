use thiserror::Error;

/// A structural assumption of the rule cascade did not hold.
///
/// The cascade's case analysis is meant to be exhaustive, so this always
/// points at a bug in a matcher or in the rule ordering, never at bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invariant violated{}: {detail}", rule.map(|r| format!(" (rule {r})")).unwrap_or_default())]
pub struct InvariantViolation {
    pub rule: Option<u8>,
    pub detail: String,
}

impl InvariantViolation {
    pub fn new(rule: Option<u8>, detail: impl Into<String>) -> Self {
        InvariantViolation { rule, detail: detail.into() }
    }

    pub(crate) fn in_rule(rule: u8, detail: impl Into<String>) -> Self {
        Self::new(Some(rule), detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("search exceeded the node budget of {cap} nodes")]
    NodeBudgetExceeded { cap: u64 },
    #[error(transparent)]
    Invariant(#[from] InvariantViolation),
    #[error("negative budget {0}")]
    NegativeBudget(i64),
}
