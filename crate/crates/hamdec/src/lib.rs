//! Exact decision procedures for Hamilton decompositions of multigraphs
//! `mX` and their arc blow-ups `K(mX)`, with machine-checkable certificates.
//!
//! A Hamilton decomposition of a `k`-valent (multi)graph is a set of
//! `⌊k/2⌋` pairwise edge-disjoint Hamilton cycles. This crate builds the
//! blow-up graphs `K(mX)` whose vertices are the arcs of `mX`, decides
//! decomposability by exhaustive search, and transfers decompositions
//! between `mX` and `K(mX)` constructively.
//!
//! ```
//! use hamdec::catalog::Catalog;
//! use hamdec::decomp::{hd_feasibility, Verdict};
//!
//! let catalog = Catalog::builtin();
//! let petersen = catalog.get("F10").unwrap();
//! // The Petersen graph has no Hamilton cycle, so 1·F10 has no
//! // Hamilton decomposition.
//! let verdict = hd_feasibility(&petersen.graph, 1, &Default::default()).unwrap();
//! assert!(matches!(verdict, Verdict::NotDecomposable(_)));
//! ```

pub mod catalog;
pub mod certificate;
pub mod constructions;
pub mod decomp;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod hamilton;
pub mod lift;
pub mod perm;
mod refine;
pub mod symmetry;

pub use error::{Error, Result};

/// Node-count limits for the exact searches. Solvers return
/// [`Error::BudgetExceeded`] rather than silently approximating.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 5_000_000_000,
        }
    }
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget { max_nodes }
    }
}

/// Running node counter checked against a [`SearchBudget`].
#[derive(Clone, Debug, Default)]
pub(crate) struct BudgetMeter {
    pub nodes: u64,
    pub max_nodes: u64,
}

impl BudgetMeter {
    pub fn new(budget: &SearchBudget) -> Self {
        BudgetMeter {
            nodes: 0,
            max_nodes: budget.max_nodes,
        }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            Err(Error::BudgetExceeded { nodes: self.nodes })
        } else {
            Ok(())
        }
    }
}
