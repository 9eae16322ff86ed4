//! Trigraded cohomology dimension tables for fibred and degenerating varieties.
//!
//! A table records `dim Gr_F^p Gr^W_q Gr^P_l H^k` for one cohomology theory of
//! one space. On top of that value type the crate provides:
//!
//! * pointwise validators (perverse vanishing bands, hard Lefschetz symmetry,
//!   subvariety comparison) in [`filtration`];
//! * k-periodic sequence templates, lane extraction and the dimension-level
//!   exactness test in [`sequence`], plus a solver for one missing table;
//! * generators for the K3 fibration and degeneration families in [`catalog`];
//! * dual-complex counting for normal-crossings central fibres in
//!   [`combinatorics`];
//! * the weight/perverse exchanging index maps and entrywise comparison in
//!   [`mirror`].
//!
//! Batch work (lanes, parameter sweeps) goes through [`exec`], which uses rayon
//! when the `parallel` feature is enabled and falls back to plain iterators
//! otherwise.

pub mod catalog;
pub mod combinatorics;
pub mod error;
pub mod exec;
pub mod filtration;
pub mod json;
pub mod mirror;
pub mod render;
pub mod report;
pub mod sequence;
pub mod sweep;

pub use error::{Error, Result};
pub use exec::Execution;
pub use filtration::{Index, IndexTransform, Space, SpaceDescriptor, TableSet, TriFilteredTable};
pub use report::{Finding, LaneCoord, VerificationReport};
