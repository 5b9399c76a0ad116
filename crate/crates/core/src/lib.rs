//! Weierstrass semigroups at the points of the Suzuki curve, their Feng-Rao
//! order bounds, and the resulting one-point code parameter tables.

pub mod cli;
pub mod feng_rao;
pub mod semigroup;
pub mod suzuki;
pub mod tables;

pub use feng_rao::{build_table, d_ord, nu, OrderBoundTable};
pub use semigroup::{NumericalSemigroup, SemigroupError};
pub use suzuki::{SuzukiParams, VerificationReport};
pub use tables::{compare, render, CodeRecord, Format};
