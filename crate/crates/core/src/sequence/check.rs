use super::exactness::{check_exactness, FeasibilityResult};
use super::lanes::{extract_lanes, Lane};
use super::template::SequenceTemplate;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::filtration::TableSet;
use crate::report::{Finding, VerificationReport};

const FEASIBLE_NOTE: &str =
    "dimension-feasible: exact sequences with these dimensions exist on every lane; \
     the maps themselves are not checked";

/// Known rank of the map from term `from` to the next term.
///
/// `k` restricts the pin to the cycle starting in degree `k`; without it the
/// pinned rank is the sum over all cycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankPin {
    pub from: usize,
    pub to: usize,
    pub k: Option<i32>,
    pub rank: u64,
}

pub fn check_sequence(tmpl: &SequenceTemplate, tables: &TableSet) -> Result<VerificationReport> {
    check_sequence_with(tmpl, tables, &[], Execution::default())
}

/// Run the exactness test on every lane and compare any rank pins.
pub fn check_sequence_with(
    tmpl: &SequenceTemplate,
    tables: &TableSet,
    pins: &[RankPin],
    exec: Execution,
) -> Result<VerificationReport> {
    for pin in pins {
        validate_pin(tmpl, pin)?;
    }
    let lanes = extract_lanes(tmpl, tables)?;
    let results = exec.map(&lanes, check_exactness);

    let mut report = VerificationReport::passed();
    for (lane, res) in lanes.iter().zip(&results) {
        if let Some(pos) = res.first_violation {
            report.push(lane_finding(tmpl, lane, res, pos));
        }
    }
    if report.pass {
        for pin in pins {
            let actual = summed_rank(&lanes, &results, pin.from, pin.k);
            if actual != pin.rank {
                report.push(Finding::new(format!(
                    "rank-pin: map {} -> {}{} has rank {actual}, pinned {}",
                    pin.from,
                    pin.to,
                    pin.k.map(|k| format!(" at k={k}")).unwrap_or_default(),
                    pin.rank
                )));
            }
        }
    }
    Ok(report.with_note(FEASIBLE_NOTE))
}

/// Rank of the map leaving term `from` (in the cycle starting at degree `k`, or
/// summed over all cycles), inferred from exactness. Fails if any lane is infeasible.
pub fn map_rank(
    tmpl: &SequenceTemplate,
    tables: &TableSet,
    from: usize,
    k: Option<i32>,
) -> Result<u64> {
    if from >= tmpl.terms().len() {
        return Err(Error::InvalidTemplate(format!("no term {from}")));
    }
    let lanes = extract_lanes(tmpl, tables)?;
    let results: Vec<FeasibilityResult> = lanes.iter().map(check_exactness).collect();
    if let Some((lane, _)) = lanes.iter().zip(&results).find(|(_, r)| !r.pass) {
        return Err(Error::Contradiction(format!(
            "lane (l={}, q={}, p={}) is not exact",
            lane.coord.l, lane.coord.q, lane.coord.p
        )));
    }
    Ok(summed_rank(&lanes, &results, from, k))
}

fn summed_rank(lanes: &[Lane], results: &[FeasibilityResult], from: usize, k: Option<i32>) -> u64 {
    lanes
        .iter()
        .zip(results)
        .flat_map(|(lane, res)| {
            lane.chain
                .iter()
                .zip(&res.ranks)
                .filter(move |(e, _)| e.term == from && k.is_none_or(|k| e.cycle_k == k))
                .map(|(_, &r)| r.max(0) as u64)
        })
        .sum()
}

fn validate_pin(tmpl: &SequenceTemplate, pin: &RankPin) -> Result<()> {
    let n = tmpl.terms().len();
    if pin.from >= n || pin.to >= n || pin.to != (pin.from + 1) % n {
        return Err(Error::InvalidTemplate(format!(
            "rank pin must join consecutive terms, got {} -> {}",
            pin.from, pin.to
        )));
    }
    Ok(())
}

fn lane_finding(
    tmpl: &SequenceTemplate,
    lane: &Lane,
    res: &FeasibilityResult,
    pos: usize,
) -> Finding {
    let entry = lane.chain[pos - 1];
    let term = &tmpl.terms()[entry.term];
    let rank = res.ranks[pos - 1];
    let relation = if rank < 0 {
        format!(
            "exactness ({}): rank r_{pos} = {rank} < 0 leaving {}",
            tmpl.name(),
            term.label(entry.cycle_k)
        )
    } else {
        format!(
            "exactness ({}): terminal rank {rank} != 0 after {}",
            tmpl.name(),
            term.label(entry.cycle_k)
        )
    };
    Finding::new(relation)
        .in_space(term.space)
        .on_lane(lane.coord, lane.phase, pos)
        .at(entry.index, entry.dim)
}
