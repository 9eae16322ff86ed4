//! Batch checks over catalog parameters.

use crate::catalog::{DegenerationFamily, Family, FibrationFamily};
use crate::error::Result;
use crate::exec::Execution;
use crate::mirror::{mirror_check, stability_check, MirrorPair};
use crate::sequence::{builtin_templates, check_sequence_with, SequenceTemplate};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepOutcome {
    pub label: String,
    pub pass: bool,
    pub violations: usize,
}

/// Every catalog family with parameter in `params`.
pub fn families(params: impl IntoIterator<Item = u32> + Clone) -> Vec<Family> {
    let mut out = Vec::new();
    for p in params {
        out.push(Family::Fibration(FibrationFamily::EllipticCurveBase {
            r: p,
        }));
        out.push(Family::Fibration(FibrationFamily::FiniteSurfaceBase {
            g: p + 1,
        }));
        out.push(Family::Degeneration(DegenerationFamily::TypeII { r: p }));
        out.push(Family::Degeneration(DegenerationFamily::TypeIII { k: p }));
    }
    out
}

/// Builtin templates paired with every family that supplies all their spaces.
pub fn sequence_cases(families: &[Family]) -> Result<Vec<(Family, SequenceTemplate)>> {
    let templates = builtin_templates();
    let mut out = Vec::new();
    for &f in families {
        let tables = f.tables()?;
        for t in &templates {
            if t.spaces().iter().all(|s| tables.contains(*s)) {
                out.push((f, t.clone()));
            }
        }
    }
    Ok(out)
}

pub fn run_sequence_sweep(
    cases: &[(Family, SequenceTemplate)],
    exec: Execution,
) -> Result<Vec<SweepOutcome>> {
    exec.map(cases, |(f, t)| {
        let tables = f.tables()?;
        let report = check_sequence_with(t, &tables, &[], Execution::Sequential)?;
        Ok(SweepOutcome {
            label: format!("{} on {f}", t.name()),
            pass: report.pass,
            violations: report.violations.len(),
        })
    })
    .into_iter()
    .collect()
}

/// The two mirror pairs at each parameter: elliptic `r` with Type II `r`, and
/// surface base `g = k + 1` with Type III `k`.
pub fn mirror_pairs(
    params: impl IntoIterator<Item = u32>,
) -> Vec<(FibrationFamily, DegenerationFamily)> {
    params
        .into_iter()
        .flat_map(|p| {
            [
                (
                    FibrationFamily::EllipticCurveBase { r: p },
                    DegenerationFamily::TypeII { r: p },
                ),
                (
                    FibrationFamily::FiniteSurfaceBase { g: p + 1 },
                    DegenerationFamily::TypeIII { k: p },
                ),
            ]
        })
        .collect()
}

/// [`stability_check`] for every pair and every `mu`; `mu = 1` is a plain
/// [`mirror_check`].
pub fn run_mirror_sweep(
    pairs: &[(FibrationFamily, DegenerationFamily)],
    mus: &[u32],
    exec: Execution,
) -> Result<Vec<SweepOutcome>> {
    let jobs: Vec<(FibrationFamily, DegenerationFamily, u32)> = pairs
        .iter()
        .flat_map(|&(f, d)| mus.iter().map(move |&mu| (f, d, mu)))
        .collect();
    exec.map(&jobs, |&(f, d, mu)| {
        let report = if mu == 1 {
            mirror_check(&MirrorPair::from_families(f, d)?)?
        } else {
            stability_check(f, d, mu)?.0
        };
        Ok(SweepOutcome {
            label: format!(
                "{} / {} mu={mu}",
                Family::Fibration(f),
                Family::Degeneration(d)
            ),
            pass: report.pass,
            violations: report.violations.len(),
        })
    })
    .into_iter()
    .collect()
}
