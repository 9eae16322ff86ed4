#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use mirror_cs::catalog::{deep_sections, Family};
use mirror_cs::filtration::{check_subvariety_constraints, hard_lefschetz_check, validate_table};
use mirror_cs::json::parse_tables;
use mirror_cs::sequence::{builtin_templates, check_sequence};
use mirror_cs::{Index, Space, TableSet, TriFilteredTable};
use serde::Deserialize;

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

/// `(family, tables)` for every file in `tests/golden`.
pub fn golden_cases() -> Vec<(Family, Vec<TriFilteredTable>)> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(data_dir().join("golden")).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        // k3-elliptic_r1.json -> k3-elliptic:r=1
        let stem = path.file_stem().unwrap().to_str().unwrap();
        let (name, param) = stem.split_once('_').unwrap();
        let (key, value) = param.split_at(1);
        let family: Family = format!("{name}:{key}={value}").parse().unwrap();
        let tables = parse_tables(&std::fs::read_to_string(&path).unwrap()).unwrap();
        out.push((family, tables));
    }
    out.sort_by_key(|(f, _)| f.to_string());
    out
}

/// Entries of `generated` and `golden` that differ, keyed by space.
pub fn golden_diff(generated: &TableSet, golden: &[TriFilteredTable]) -> Vec<String> {
    let mut diffs = Vec::new();
    let golden_spaces: BTreeSet<Space> = golden.iter().map(|t| t.space()).collect();
    let generated_spaces: BTreeSet<Space> = generated.spaces().collect();
    if golden_spaces != generated_spaces {
        diffs.push(format!("spaces {generated_spaces:?} vs {golden_spaces:?}"));
    }
    for g in golden {
        let Some(t) = generated.get(g.space()) else {
            continue;
        };
        if t.descriptor() != g.descriptor() {
            diffs.push(format!(
                "descriptor {} vs {}",
                t.descriptor(),
                g.descriptor()
            ));
        }
        let keys: BTreeSet<Index> = t.entries().chain(g.entries()).map(|(i, _)| i).collect();
        for i in keys {
            if t.get(i) != g.get(i) {
                diffs.push(format!("{} {i}: {} vs {}", g.space(), t.get(i), g.get(i)));
            }
        }
    }
    diffs
}

/// Closed forms in the family parameter, as `(name, actual, expected)`.
pub fn closed_forms(family: Family) -> Vec<(String, u64, u64)> {
    use mirror_cs::catalog::{DegenerationFamily as D, FibrationFamily as F};
    let set = family.tables().unwrap();
    let t = |s: Space| set.require(s).unwrap();
    let mut out = Vec::new();
    let mut push =
        |name: &str, actual: u64, expected: u64| out.push((name.to_string(), actual, expected));
    match family {
        Family::Fibration(_) => push("dim H^*(Y)", t(Space::Y).total(), 24),
        Family::Degeneration(_) => push("dim H^*_lim", t(Space::Xlim).total(), 24),
    }
    match family {
        Family::Fibration(F::EllipticCurveBase { r }) => {
            let r = r as u64;
            push("dim H^2(Y)", t(Space::Y).degree_total(2), 22);
            push("dim H^0(Z)", t(Space::Z(1)).degree_total(0), r);
            push("dim H^1(Z)", t(Space::Z(1)).degree_total(1), 2 * r);
            push("dim H^1_c(U)", t(Space::Uc).degree_total(1), r - 1);
            push("dim H^2_c(U)", t(Space::Uc).degree_total(2), 2 * r + 21);
            push("dim H^3_c(U)", t(Space::Uc).degree_total(3), r - 1);
            push("dim H^2(U)", t(Space::U).degree_total(2), 2 * r + 21);
            push("dim H^1(U)", t(Space::U).degree_total(1), r - 1);
        }
        Family::Fibration(F::FiniteSurfaceBase { g }) => {
            let g = g as u64;
            push("dim H^2(Y)", t(Space::Y).degree_total(2), 22);
            push("dim H^1(Z)", t(Space::Z(1)).degree_total(1), 2 * g);
            push("dim H^2_c(U)", t(Space::Uc).degree_total(2), 2 * g + 21);
            push("dim H^1_c(U)", t(Space::Uc).degree_total(1), 0);
            push("dim H^2(U)", t(Space::U).degree_total(2), 2 * g + 21);
        }
        Family::Degeneration(D::TypeII { r }) => {
            let r = r as u64;
            push(
                "Gr_3^P H^3(Total)",
                t(Space::Total).graded_total(3, 3),
                2 * (r - 1),
            );
            push("Gr_2^P H^2(Total)", t(Space::Total).graded_total(2, 2), r);
            push("Gr_4^P H^4(Total)", t(Space::Total).graded_total(4, 4), r);
            push("dim H^2(Total)", t(Space::Total).degree_total(2), r + 20);
            push("dim H^2_lim", t(Space::Xlim).degree_total(2), 22);
            push(
                "dim H^3_X0(Total)",
                t(Space::Supported).degree_total(3),
                2 * (r - 1),
            );
            push(
                "dim H^4_X0(Total)",
                t(Space::Supported).degree_total(4),
                r + 20,
            );
        }
        Family::Degeneration(D::TypeIII { k }) => {
            let g = k as u64 + 1;
            push("Gr_2^P H^2(Total)", t(Space::Total).graded_total(2, 2), g);
            push("Gr_4^P H^4(Total)", t(Space::Total).graded_total(4, 4), g);
            push("dim H^2(Total)", t(Space::Total).degree_total(2), g + 20);
            push("dim H^3(Total)", t(Space::Total).degree_total(3), 0);
            push("dim H^2_lim", t(Space::Xlim).degree_total(2), 22);
            push(
                "dim H^4_X0(Total)",
                t(Space::Supported).degree_total(4),
                g + 20,
            );
        }
    }
    out
}

/// Catalog families at every parameter in `1..=20` (`g` in `2..=20`).
pub fn all_families() -> Vec<Family> {
    use mirror_cs::catalog::{DegenerationFamily as D, FibrationFamily as F};
    let mut out = Vec::new();
    for p in 1..=20 {
        out.push(Family::Fibration(F::EllipticCurveBase { r: p }));
        if p >= 2 {
            out.push(Family::Fibration(F::FiniteSurfaceBase { g: p }));
        }
        out.push(Family::Degeneration(D::TypeII { r: p }));
        out.push(Family::Degeneration(D::TypeIII { k: p }));
    }
    out
}

fn relation_family(relation: &str) -> String {
    let head = relation.split(':').next().unwrap().trim();
    if head.starts_with("subvariety") {
        "subvariety".into()
    } else {
        head.into()
    }
}

/// Every relation family broken by `tables`: validators on `focus` (or on every
/// table), hard Lefschetz, the subvariety comparison, and each builtin template
/// whose spaces are all present.
pub fn broken_relations(
    family: Family,
    tables: &TableSet,
    focus: Option<Space>,
) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for t in tables
        .tables()
        .filter(|t| focus.is_none_or(|s| s == t.space()))
    {
        out.extend(validate_table(t).relations().map(relation_family));
        if !t.space().is_degeneration() {
            out.extend(
                hard_lefschetz_check(t)
                    .unwrap()
                    .relations()
                    .map(relation_family),
            );
        }
    }
    if let (Some(y), Family::Fibration(f)) = (tables.get(Space::Y), family) {
        let mut zs: Vec<TriFilteredTable> = tables.get(Space::Z(1)).into_iter().cloned().collect();
        zs.extend(deep_sections(f).unwrap());
        out.extend(
            check_subvariety_constraints(y, &zs)
                .unwrap()
                .relations()
                .map(relation_family),
        );
    }
    for tmpl in builtin_templates() {
        if tmpl.spaces().iter().all(|s| tables.contains(*s))
            && !check_sequence(&tmpl, tables).unwrap().pass
        {
            out.insert(format!("exactness ({})", tmpl.name()));
        }
    }
    out
}

#[derive(Deserialize)]
pub struct Mutation {
    pub family: String,
    pub space: String,
    pub index: Index,
    pub delta: i64,
    pub detected: Vec<String>,
}

impl Mutation {
    pub fn label(&self) -> String {
        format!(
            "{} {} {} {:+}",
            self.family, self.space, self.index, self.delta
        )
    }

    /// Relation families the engine reports after applying the mutation.
    pub fn run(&self) -> BTreeSet<String> {
        let family: Family = self.family.parse().unwrap();
        let space: Space = self.space.parse().unwrap();
        let mut tables = family.tables().unwrap();
        let mut t = tables.require(space).unwrap().clone();
        let dim = t.get(self.index) as i64 + self.delta;
        assert!(dim >= 0, "{}", self.label());
        t.set(self.index, dim as u64);
        tables.insert(t).unwrap();
        broken_relations(family, &tables, Some(space))
    }
}

pub fn mutations() -> Vec<Mutation> {
    let text = std::fs::read_to_string(data_dir().join("data/mutations.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

/// Every rank assignment `r_0..r_{n-2}` with `r_i <= min(d_i, d_{i+1})` and
/// `d_i = r_{i-1} + r_i` (ranks outside the chain are zero), by exhaustive
/// enumeration.
pub fn brute_force_assignments(dims: &[u64]) -> Vec<Vec<u64>> {
    let n = dims.len();
    if n == 0 {
        return vec![Vec::new()];
    }
    let bounds: Vec<u64> = (0..n - 1).map(|i| dims[i].min(dims[i + 1])).collect();
    let mut out = Vec::new();
    let mut ranks = vec![0u64; n - 1];
    loop {
        let ok = (0..n).all(|i| {
            let before = if i == 0 { 0 } else { ranks[i - 1] };
            let after = if i + 1 == n { 0 } else { ranks[i] };
            before + after == dims[i]
        });
        if ok {
            out.push(ranks.clone());
        }
        // odometer increment
        let mut j = 0;
        loop {
            if j == ranks.len() {
                return out;
            }
            if ranks[j] < bounds[j] {
                ranks[j] += 1;
                break;
            }
            ranks[j] = 0;
            j += 1;
        }
    }
}

/// Like [`brute_force_assignments`] but prunes a branch as soon as one
/// equation fails, so it can handle long lanes with large dimensions.
pub fn pruned_assignments(dims: &[u64]) -> Vec<Vec<u64>> {
    fn go(dims: &[u64], ranks: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        let i = ranks.len();
        let n = dims.len();
        if i + 1 >= n {
            let last = ranks.last().copied().unwrap_or(0);
            if n == 0 || last == dims[n - 1] {
                out.push(ranks.clone());
            }
            return;
        }
        let before = if i == 0 { 0 } else { ranks[i - 1] };
        for r in 0..=dims[i].min(dims[i + 1]) {
            if before + r == dims[i] {
                ranks.push(r);
                go(dims, ranks, out);
                ranks.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(dims, &mut Vec::new(), &mut out);
    out
}
