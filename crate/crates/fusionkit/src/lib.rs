//! Exact computational algebra for fusion rings and finite groups.
//!
//! The crate represents finite groups by dense Cayley tables and fusion rings
//! by integer structure-constant tensors, and keeps every verdict exact:
//! character tables are computed over a finite field and lifted to cyclotomic
//! integers, Frobenius-Perron dimensions are certified against integer
//! eigenvector equations, and solvability is only ever reported together with
//! a certificate that can be replayed.
//!
//! The primary interface is the `examples/` directory (one runnable example
//! per capability); the `fusionkit` binary exposes the same pipelines as
//! `analyze-ring`, `build`, `verify` and `scan` subcommands.

#![forbid(unsafe_code)]

pub mod abelian_ext;
pub mod chartab;
pub mod cli;
pub mod cyclotomic;
pub mod fixtures;
pub mod fusion_ring;
pub mod grading;
pub mod group;
pub mod group_theoretical;
pub mod jsonio;
pub mod near_group;
pub mod report;
pub mod solvability;

/// Default upper bound on the order of groups accepted by the heavier
/// pipelines (character tables, double data). Callers can raise it
/// explicitly; the CLI wires `--cap` / `FUSIONKIT_CAP` into it.
pub const DEFAULT_GROUP_ORDER_CAP: usize = 512;
