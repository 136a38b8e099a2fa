//! Resource limits for the exponential searches.

use crate::error::{Error, Result};

/// Limits on the exhaustive searches. Every search that can blow up counts
/// its work against one of these and fails with
/// [`Error::BudgetExceeded`] instead of running unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Candidate vertex/edge subsets tested, also branch-and-bound nodes.
    pub subsets: u64,
    /// `(u,v)`-paths enumerated for the path-support hypergraph.
    pub paths: u64,
    /// Spanning trees tried when looking for a representative tree.
    pub trees: u64,
    /// Partial vertex orderings explored by the interval search.
    pub orderings: u64,
    /// Cycles examined by the totally-balanced check.
    pub cycles: u64,
    /// Backtracking nodes of the 2-colouring search.
    pub colourings: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            subsets: 20_000_000,
            paths: 10_000,
            trees: 100_000,
            orderings: 1_000_000,
            cycles: 1_000_000,
            colourings: 1_000_000,
        }
    }
}

/// A running counter against one limit.
#[derive(Debug)]
pub(crate) struct Meter {
    resource: &'static str,
    limit: u64,
    used: u64,
}

impl Meter {
    pub(crate) fn new(resource: &'static str, limit: u64) -> Self {
        Meter { resource, limit, used: 0 }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded {
                resource: self.resource,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}
