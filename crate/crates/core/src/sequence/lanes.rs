use std::collections::BTreeMap;

use super::template::SequenceTemplate;
use crate::error::Result;
use crate::filtration::{Index, TableSet};
use crate::report::LaneCoord;

/// One position of a lane chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LaneEntry {
    /// Which template term.
    pub term: usize,
    /// Degree `k` of the cycle this position belongs to.
    pub cycle_k: i32,
    /// Table index the term reads on this lane.
    pub index: Index,
    pub dim: u64,
}

/// The integer chain of a fixed `(l, q, p)` slice, for cycles whose starting
/// degree is congruent to `phase` modulo the template period.
///
/// The chain covers every cycle with a nonzero position; everything before and
/// after it is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lane {
    pub coord: LaneCoord,
    pub phase: i32,
    pub chain: Vec<LaneEntry>,
}

impl Lane {
    pub fn dims(&self) -> Vec<u64> {
        self.chain.iter().map(|e| e.dim).collect()
    }

    pub fn total(&self) -> u64 {
        self.chain.iter().map(|e| e.dim).sum()
    }
}

/// Lane skeleton: for each `(coord, phase)`, the range of cycle degrees to walk.
pub(crate) type Skeleton = BTreeMap<(LaneCoord, i32), (i32, i32)>;

pub(crate) fn skeleton<I>(tmpl: &SequenceTemplate, support: I) -> Skeleton
where
    I: IntoIterator<Item = (usize, Index)>,
{
    let mut lanes: Skeleton = BTreeMap::new();
    for (term, index) in support {
        let (k, coord) = tmpl.terms()[term].lane_of(index);
        let phase = k.rem_euclid(tmpl.period());
        lanes
            .entry((coord, phase))
            .and_modify(|(lo, hi)| {
                *lo = (*lo).min(k);
                *hi = (*hi).max(k);
            })
            .or_insert((k, k));
    }
    lanes
}

/// Walk one skeleton lane, yielding `(term, cycle_k, index)` in chain order.
pub(crate) fn walk(
    tmpl: &SequenceTemplate,
    coord: LaneCoord,
    lo: i32,
    hi: i32,
) -> impl Iterator<Item = (usize, i32, Index)> + '_ {
    (lo..=hi)
        .step_by(tmpl.period() as usize)
        .flat_map(move |k| {
            tmpl.terms()
                .iter()
                .enumerate()
                .map(move |(j, term)| (j, k, term.lookup(k, coord)))
        })
}

pub(crate) fn require_tables(tmpl: &SequenceTemplate, tables: &TableSet) -> Result<()> {
    for space in tmpl.spaces() {
        tables.require(space)?;
    }
    Ok(())
}

/// Split the template applied to `tables` into lanes, each carrying the full
/// zero-bounded chain of dimensions along increasing degree.
pub fn extract_lanes(tmpl: &SequenceTemplate, tables: &TableSet) -> Result<Vec<Lane>> {
    require_tables(tmpl, tables)?;
    let support = tmpl.terms().iter().enumerate().flat_map(|(j, term)| {
        tables
            .get(term.space)
            .into_iter()
            .flat_map(move |t| t.entries().map(move |(i, _)| (j, i)))
    });
    let skel = skeleton(tmpl, support);
    let lanes = skel
        .into_iter()
        .map(|((coord, phase), (lo, hi))| {
            let chain = walk(tmpl, coord, lo, hi)
                .map(|(term, cycle_k, index)| {
                    let space = tmpl.terms()[term].space;
                    let dim = tables.get(space).map_or(0, |t| t.get(index));
                    LaneEntry {
                        term,
                        cycle_k,
                        index,
                        dim,
                    }
                })
                .collect();
            Lane {
                coord,
                phase,
                chain,
            }
        })
        .collect();
    Ok(lanes)
}
