use std::collections::BTreeMap;

use super::exactness::chain_feasibility;
use super::lanes::{skeleton, walk};
use super::template::SequenceTemplate;
use crate::error::{Error, Result};
use crate::filtration::{admissible, Index, Space, SpaceDescriptor, TableSet, TriFilteredTable};

/// Entries of the unknown table forced by exactness, plus the admissible
/// entries no lane pins down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub table: TriFilteredTable,
    pub underdetermined: Vec<Index>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cell {
    Known(u64),
    Var(usize),
}

/// Recover the table for `unknown` from the other terms of `tmpl`.
///
/// Candidate entries are the indices the pointwise vanishing rules allow for
/// the unknown space. Each lane is cut at known zeros; a segment with exactly
/// one undetermined position forces it to `r_left + r_right`, the ranks coming
/// in from the left and leaving to the right. This repeats until nothing
/// changes. Every fully determined lane is then re-checked for exactness.
pub fn solve_unknown(
    tmpl: &SequenceTemplate,
    tables: &TableSet,
    unknown: Space,
) -> Result<Solution> {
    if !tmpl.spaces().contains(&unknown) {
        return Err(Error::InvalidTemplate(format!(
            "{} does not use {unknown}",
            tmpl.name()
        )));
    }
    let mut known = tables.clone();
    known.remove(unknown);
    for space in tmpl.spaces() {
        if space != unknown {
            known.require(space)?;
        }
    }
    let n = known
        .n()
        .ok_or_else(|| Error::InvalidParameter("no known tables to solve from".into()))?;
    let m = if unknown.is_degeneration() {
        None
    } else {
        Some(known.m().ok_or_else(|| {
            Error::InvalidParameter(format!("base dimension needed for {unknown}"))
        })?)
    };
    let desc = SpaceDescriptor::new(unknown, n, m)?;

    let domain = candidate_indices(&desc);
    let var_of: BTreeMap<Index, usize> = domain.iter().enumerate().map(|(v, i)| (*i, v)).collect();

    let support = tmpl.terms().iter().enumerate().flat_map(|(j, term)| {
        let entries: Vec<Index> = if term.space == unknown {
            domain.clone()
        } else {
            known
                .get(term.space)
                .map(|t| t.entries().map(|(i, _)| i).collect())
                .unwrap_or_default()
        };
        entries.into_iter().map(move |i| (j, i))
    });
    let chains: Vec<(String, Vec<Cell>)> = skeleton(tmpl, support)
        .into_iter()
        .map(|((coord, phase), (lo, hi))| {
            let cells = walk(tmpl, coord, lo, hi)
                .map(|(j, _, index)| {
                    let space = tmpl.terms()[j].space;
                    if space == unknown {
                        var_of.get(&index).map_or(Cell::Known(0), |&v| Cell::Var(v))
                    } else {
                        Cell::Known(known.get(space).map_or(0, |t| t.get(index)))
                    }
                })
                .collect();
            let name = format!(
                "lane (l={}, q={}, p={}, phase {phase})",
                coord.l, coord.q, coord.p
            );
            (name, cells)
        })
        .collect();

    let mut values: Vec<Option<u64>> = vec![None; domain.len()];
    loop {
        let mut progress = false;
        for (name, cells) in &chains {
            let current: Vec<Option<u64>> = cells
                .iter()
                .map(|c| match *c {
                    Cell::Known(d) => Some(d),
                    Cell::Var(v) => values[v],
                })
                .collect();
            for (start, end) in segments(&current) {
                let open: Vec<usize> = (start..end).filter(|&i| current[i].is_none()).collect();
                let [u] = open[..] else { continue };
                let left = rank_into(current[start..u].iter().map(|d| d.unwrap()))
                    .ok_or_else(|| Error::Contradiction(format!("{name}: negative rank")))?;
                let right = rank_into(current[u + 1..end].iter().rev().map(|d| d.unwrap()))
                    .ok_or_else(|| Error::Contradiction(format!("{name}: negative rank")))?;
                let Cell::Var(v) = cells[u] else {
                    unreachable!()
                };
                values[v] = Some(left + right);
                progress = true;
                // Later segments of this chain see stale values; the next sweep
                // picks them up.
                break;
            }
        }
        if !progress {
            break;
        }
    }

    for (name, cells) in &chains {
        let dims: Option<Vec<u64>> = cells
            .iter()
            .map(|c| match *c {
                Cell::Known(d) => Some(d),
                Cell::Var(v) => values[v],
            })
            .collect();
        if let Some(dims) = dims {
            let res = chain_feasibility(&dims);
            if let Some(pos) = res.first_violation {
                return Err(Error::Contradiction(format!(
                    "{name} fails at position {pos}"
                )));
            }
        }
    }

    let mut table = TriFilteredTable::new(desc);
    let mut underdetermined = Vec::new();
    for (i, value) in domain.iter().zip(&values) {
        match value {
            Some(d) => table.set(*i, *d),
            None => underdetermined.push(*i),
        }
    }
    Ok(Solution {
        table,
        underdetermined,
    })
}

/// Rank of the map leaving the last position of a chain whose earlier
/// positions are all exact, or `None` if some rank goes negative.
fn rank_into(dims: impl Iterator<Item = u64>) -> Option<u64> {
    let mut r = 0i64;
    for d in dims {
        r = d as i64 - r;
        if r < 0 {
            return None;
        }
    }
    Some(r as u64)
}

/// Maximal runs not containing a known zero, as half-open ranges.
fn segments(values: &[Option<u64>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, v) in values.iter().enumerate() {
        match (v, start) {
            (Some(0), Some(s)) => {
                out.push((s, i));
                start = None;
            }
            (Some(0), None) => {}
            (_, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, values.len()));
    }
    out
}

/// Every index a nonzero entry of this space could occupy.
fn candidate_indices(desc: &SpaceDescriptor) -> Vec<Index> {
    let d = desc.dimension();
    let mut out = Vec::new();
    for k in 0..=2 * d {
        for l in (k - 2 * d - 2)..=(k + 2 * d + 2) {
            for p in 0..=d {
                for q in p..=p + d {
                    let i = Index::new(k, l, q, p);
                    if admissible(desc, i) {
                        out.push(i);
                    }
                }
            }
        }
    }
    out
}
