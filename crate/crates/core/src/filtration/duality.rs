use super::table::{Index, Space, TriFilteredTable};
use crate::error::{Error, Result};
use crate::report::{Finding, VerificationReport};

/// Reflect an index through the centre of a space of complex dimension `d`.
pub fn reflect(i: Index, d: i32) -> Index {
    Index::new(2 * d - i.k, 2 * d - i.l, 2 * d - i.q, d - i.p)
}

/// Poincaré–Verdier duality.
///
/// `Y` and `Z_r` are self-dual (each about its own dimension); `U` and `Uc`
/// are exchanged. The output at `(k, l, q, p)` is the input at
/// `(2d-k, 2d-l, 2d-q, d-p)`.
pub fn poincare_verdier_dual(t: &TriFilteredTable) -> Result<TriFilteredTable> {
    let desc = t.descriptor();
    let target = match desc.space() {
        Space::Y => Space::Y,
        Space::Z(r) => Space::Z(r),
        Space::U => Space::Uc,
        Space::Uc => Space::U,
        other => {
            return Err(Error::UnsupportedSpace {
                space: other,
                operation: "Poincaré–Verdier duality",
            })
        }
    };
    let d = desc.dimension();
    Ok(t.map_indices(desc.with_space(target)?, |i| reflect(i, d)))
}

/// Index paired with `i` by relative hard Lefschetz on a space of dimension `d`:
/// `Gr_l^P H^k ≅ Gr_{2d-l}^P H^{2d+k-2l} (d-l)`.
pub fn hard_lefschetz_partner(i: Index, d: i32) -> Index {
    let s = d - i.l;
    Index::new(2 * d + i.k - 2 * i.l, 2 * d - i.l, i.q + 2 * s, i.p + s)
}

/// Every entry must match its hard Lefschetz partner. Defined for `Y`, `Z_r`
/// and for `U`/`Uc` (each paired within itself).
pub fn hard_lefschetz_check(t: &TriFilteredTable) -> Result<VerificationReport> {
    let desc = t.descriptor();
    if desc.space().is_degeneration() {
        return Err(Error::UnsupportedSpace {
            space: desc.space(),
            operation: "hard Lefschetz check",
        });
    }
    let d = desc.dimension();
    let mut report = VerificationReport::passed();
    let mut checked = std::collections::BTreeSet::new();
    for (i, _) in t.entries() {
        let j = hard_lefschetz_partner(i, d);
        let pair = if i <= j { (i, j) } else { (j, i) };
        if !checked.insert(pair) {
            continue;
        }
        let (a, b) = (t.get(pair.0), t.get(pair.1));
        if a != b {
            report.push(
                Finding::new(format!(
                    "hard-lefschetz: Gr_{}^P H^{} ~ Gr_{}^P H^{}({})",
                    pair.0.l,
                    pair.0.k,
                    pair.1.l,
                    pair.1.k,
                    d - pair.0.l
                ))
                .in_space(desc.space())
                .at(pair.0, a)
                .at(pair.1, b),
            );
        }
    }
    Ok(report)
}

/// Re-index `Y` by the cup-product filtration: `Gr_l^K H^k = Gr^P_{l+k-n} H^k`.
pub fn reindex_cup_filtration(t: &TriFilteredTable) -> Result<TriFilteredTable> {
    let n = cup_dimension(t)?;
    Ok(t.map_indices(*t.descriptor(), |i| {
        Index::new(i.k, i.l - i.k + n, i.q, i.p)
    }))
}

/// Inverse of [`reindex_cup_filtration`].
pub fn unreindex_cup_filtration(t: &TriFilteredTable) -> Result<TriFilteredTable> {
    let n = cup_dimension(t)?;
    Ok(t.map_indices(*t.descriptor(), |i| {
        Index::new(i.k, i.l + i.k - n, i.q, i.p)
    }))
}

fn cup_dimension(t: &TriFilteredTable) -> Result<i32> {
    match t.space() {
        Space::Y => Ok(t.descriptor().n() as i32),
        other => Err(Error::UnsupportedSpace {
            space: other,
            operation: "cup-product filtration",
        }),
    }
}
