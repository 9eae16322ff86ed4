use super::table::{Index, TriFilteredTable};

/// Pointwise re-indexing of a table.
///
/// `TateTwist(d)` is the twist `(d)`: it lowers weight by `2d` and the Hodge
/// index by `d`, so the output at `(k, l, q, p)` is the input at
/// `(k, l, q + 2d, p + d)`. `PerverseShift(s)` moves `l` to `l + s`;
/// `KOffset(a)` moves `k` to `k + a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexTransform {
    TateTwist(i32),
    PerverseShift(i32),
    KOffset(i32),
}

impl IndexTransform {
    /// Where an input entry lands.
    pub fn forward(self, i: Index) -> Index {
        match self {
            IndexTransform::TateTwist(d) => Index::new(i.k, i.l, i.q - 2 * d, i.p - d),
            IndexTransform::PerverseShift(s) => Index::new(i.k, i.l + s, i.q, i.p),
            IndexTransform::KOffset(a) => Index::new(i.k + a, i.l, i.q, i.p),
        }
    }

    /// Sum of two transforms of the same kind.
    pub fn compose(self, other: IndexTransform) -> Option<IndexTransform> {
        use IndexTransform::*;
        match (self, other) {
            (TateTwist(a), TateTwist(b)) => Some(TateTwist(a + b)),
            (PerverseShift(a), PerverseShift(b)) => Some(PerverseShift(a + b)),
            (KOffset(a), KOffset(b)) => Some(KOffset(a + b)),
            _ => None,
        }
    }
}

pub fn apply_transform(t: &TriFilteredTable, x: IndexTransform) -> TriFilteredTable {
    t.map_indices(*t.descriptor(), |i| x.forward(i))
}
