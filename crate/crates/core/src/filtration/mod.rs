//! Trigraded dimension tables and the pointwise operations on them.

mod duality;
mod table;
mod transform;
mod validate;

pub use duality::{
    hard_lefschetz_check, hard_lefschetz_partner, poincare_verdier_dual, reflect,
    reindex_cup_filtration, unreindex_cup_filtration,
};
pub use table::{Index, Space, SpaceDescriptor, TableSet, TriFilteredTable};
pub use transform::{apply_transform, IndexTransform};
pub use validate::{admissible, check_subvariety_constraints, validate_table};
