//! Maximum irredundant subfamilies and minimum generating families of
//! integer intervals.
//!
//! A family of sets is irredundant when its members can be ordered so that
//! each one contains a point missing from all earlier ones. For intervals,
//! the largest irredundant subfamily of `F` is exactly as large as the
//! smallest family `G` whose unions produce every member of `F`. This crate
//! computes both in `O((m + n)^2)` time:
//!
//! ```
//! use irredundant::{solve, Family};
//!
//! let f = Family::from_pairs(9, [(0, 8), (0, 7), (1, 6), (1, 5), (3, 9), (2, 9)]).unwrap();
//! let solution = solve(&f).unwrap();
//! assert_eq!(solution.generators().len(), 5);
//! assert_eq!(solution.irredundant().len(), 5);
//! ```

pub mod analysis;
pub mod cli;
pub mod error;
pub mod extraction;
pub mod family;
pub mod gen;
pub mod oracle;
pub mod reduction;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use extraction::{build_tree, irredundant_subfamily, solve, SearchTree, Solution, TreeNode};
pub use family::{CoverageProfile, Family, Interval};
pub use reduction::{fk_run, ReductionResult, ReductionStep};
