//! Index maps exchanging weight and perverse filtrations between a fibred
//! Calabi-Yau and its mirror degeneration, and entrywise comparison.

use std::collections::BTreeSet;

use crate::catalog::{degeneration_tables, fibration_tables, DegenerationFamily, FibrationFamily};
use crate::combinatorics::{base_change, veronese, SPHERE_RECOUNT_NOTE};
use crate::error::{Error, Result};
use crate::filtration::{Index, Space, SpaceDescriptor, TableSet, TriFilteredTable};
use crate::report::{Finding, VerificationReport};

/// `(k, l, q, p) -> (n+k-2p, n+q-2p + shift, n+l-2p - shift, n-p)`.
///
/// With `shift = 0` this is an involution.
pub fn mirror_index(i: Index, n: i32, shift: i32) -> Index {
    Index::new(
        n + i.k - 2 * i.p,
        n + i.q - 2 * i.p + shift,
        n + i.l - 2 * i.p,
        n - i.p,
    )
}

fn transform(
    t: &TriFilteredTable,
    from: Space,
    to: SpaceDescriptor,
    shift: i32,
) -> Result<TriFilteredTable> {
    if t.space() != from {
        return Err(Error::UnsupportedSpace {
            space: t.space(),
            operation: "mirror transform",
        });
    }
    let n = t.descriptor().n() as i32;
    Ok(TriFilteredTable::from_entries(
        to,
        t.entries().map(|(i, d)| (mirror_index(i, n, shift), d)),
    ))
}

/// `Y` table re-indexed as a limiting-cohomology table.
pub fn mirror_transform_compact(y: &TriFilteredTable) -> Result<TriFilteredTable> {
    let to = SpaceDescriptor::degeneration(Space::Xlim, y.descriptor().n())?;
    transform(y, Space::Y, to, 0)
}

/// `Uc` table re-indexed as a total-space table.
pub fn mirror_transform_open(uc: &TriFilteredTable) -> Result<TriFilteredTable> {
    let to = SpaceDescriptor::degeneration(Space::Total, uc.descriptor().n())?;
    transform(uc, Space::Uc, to, 1)
}

/// Same index map as [`mirror_transform_open`] without the perverse `+1`.
pub fn mirror_transform_open_unshifted(uc: &TriFilteredTable) -> Result<TriFilteredTable> {
    let to = SpaceDescriptor::degeneration(Space::Total, uc.descriptor().n())?;
    transform(uc, Space::Uc, to, 0)
}

/// Limiting table read back as a `Y` table with base dimension `m`.
pub fn mirror_transform_compact_inverse(x: &TriFilteredTable, m: u32) -> Result<TriFilteredTable> {
    let to = SpaceDescriptor::fibration(Space::Y, x.descriptor().n(), m)?;
    transform(x, Space::Xlim, to, 0)
}

#[derive(Clone, Debug)]
pub struct MirrorPair {
    fibration: TableSet,
    degeneration: TableSet,
    n: u32,
    catalog: bool,
}

impl MirrorPair {
    /// Needs `Y` and `Uc` on one side, `Xlim` and `Total` on the other.
    pub fn new(fibration: TableSet, degeneration: TableSet) -> Result<Self> {
        for s in [Space::Y, Space::Uc] {
            fibration.require(s)?;
        }
        for s in [Space::Xlim, Space::Total] {
            degeneration.require(s)?;
        }
        if fibration.m().is_none() {
            return Err(Error::InvalidDescriptor(
                "fibration side carries no base dimension".into(),
            ));
        }
        let a = fibration.n().unwrap_or_default();
        let b = degeneration.n().unwrap_or_default();
        if a != b {
            return Err(Error::DimensionMismatch(a, b));
        }
        Ok(MirrorPair {
            fibration,
            degeneration,
            n: a,
            catalog: false,
        })
    }

    pub fn from_families(f: FibrationFamily, d: DegenerationFamily) -> Result<Self> {
        let mut pair = Self::new(fibration_tables(f)?, degeneration_tables(d)?)?;
        pair.catalog = true;
        Ok(pair)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn fibration(&self) -> &TableSet {
        &self.fibration
    }

    pub fn degeneration(&self) -> &TableSet {
        &self.degeneration
    }
}

fn compare(
    relation: &str,
    source: &TriFilteredTable,
    image: &TriFilteredTable,
    target: &TriFilteredTable,
    n: i32,
    shift: i32,
) -> Vec<Finding> {
    let keys: BTreeSet<Index> = image
        .entries()
        .chain(target.entries())
        .map(|(i, _)| i)
        .collect();
    keys.into_iter()
        .filter(|&i| image.get(i) != target.get(i))
        .map(|i| {
            // the source index is recovered by undoing the shift then applying the involution
            let back = mirror_index(Index::new(i.k, i.l - shift, i.q, i.p), n, 0);
            Finding::new(relation)
                .in_space(target.space())
                .at(back, source.get(back))
                .at(i, target.get(i))
        })
        .collect()
}

/// Entrywise comparison of `Y` against `Xlim` and of `Uc` against `Total`.
pub fn mirror_check(pair: &MirrorPair) -> Result<VerificationReport> {
    let n = pair.n as i32;
    let y = pair.fibration.require(Space::Y)?;
    let uc = pair.fibration.require(Space::Uc)?;
    let x = pair.degeneration.require(Space::Xlim)?;
    let total = pair.degeneration.require(Space::Total)?;
    let mut findings = compare(
        "mirror-compact: Y vs Xlim",
        y,
        &mirror_transform_compact(y)?,
        x,
        n,
        0,
    );
    findings.extend(compare(
        "mirror-open: Uc vs Total",
        uc,
        &mirror_transform_open(uc)?,
        total,
        n,
        1,
    ));
    let report = VerificationReport::from_findings(findings);
    Ok(if !report.pass {
        report
    } else if pair.catalog {
        report.with_note("verified on K3 catalog pair")
    } else {
        report.with_note("conjecture consistent")
    })
}

/// Veronese re-embedding on the fibration side, base change on the
/// degeneration side, then [`mirror_check`] on the regenerated pair.
pub fn stability_check(
    f: FibrationFamily,
    d: DegenerationFamily,
    mu: u32,
) -> Result<(VerificationReport, FibrationFamily, DegenerationFamily)> {
    let f2 = veronese(f, mu)?;
    let dual = base_change(d.dual_complex()?, mu as u64)?;
    let c = u32::try_from(dual.components())
        .map_err(|_| Error::InvalidParameter("component count overflow".into()))?;
    let d2 = match d {
        DegenerationFamily::TypeII { .. } => DegenerationFamily::TypeII { r: c - 1 },
        DegenerationFamily::TypeIII { .. } => DegenerationFamily::TypeIII { k: c - 2 },
    };
    let report = mirror_check(&MirrorPair::from_families(f2, d2)?)?;
    let mut note = format!("{} with {} components", family_label(f2, d2), c);
    if matches!(d, DegenerationFamily::TypeIII { .. }) && mu > 1 {
        note = format!("{note}; {SPHERE_RECOUNT_NOTE}");
    }
    if let Some(prev) = &report.note {
        note = format!("{prev}: {note}");
    }
    Ok((report.with_note(note), f2, d2))
}

fn family_label(f: FibrationFamily, d: DegenerationFamily) -> String {
    use crate::catalog::Family;
    format!("{} / {}", Family::Fibration(f), Family::Degeneration(d))
}
