//! Table JSON and sequence-problem JSON.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog::Family;
use crate::error::{Error, Result};
use crate::filtration::{Index, Space, SpaceDescriptor, TableSet, TriFilteredTable};
use crate::sequence::{builtin_template, RankPin, SequenceTemplate, Term};

#[derive(Serialize, Deserialize)]
struct RawEntry {
    k: i32,
    l: i32,
    q: i32,
    p: i32,
    dim: i64,
}

#[derive(Serialize, Deserialize)]
struct RawTable {
    space: String,
    n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    entries: Vec<RawEntry>,
}

fn table_from_raw(raw: RawTable) -> Result<TriFilteredTable> {
    let space: Space = raw.space.parse()?;
    let desc = SpaceDescriptor::new(space, raw.n, raw.m)?;
    let mut table = TriFilteredTable::new(desc);
    let mut seen = BTreeSet::new();
    for e in raw.entries {
        let index = Index::new(e.k, e.l, e.q, e.p);
        if e.dim < 0 {
            return Err(Error::NegativeDimension { index, dim: e.dim });
        }
        if !seen.insert(index) {
            return Err(Error::DuplicateEntry(index));
        }
        table.set(index, e.dim as u64);
    }
    Ok(table)
}

fn table_to_raw(t: &TriFilteredTable) -> RawTable {
    let d = t.descriptor();
    RawTable {
        space: d.space().to_string(),
        n: d.n(),
        m: d.m(),
        entries: t
            .entries()
            .map(|(i, dim)| RawEntry {
                k: i.k,
                l: i.l,
                q: i.q,
                p: i.p,
                dim: dim as i64,
            })
            .collect(),
    }
}

pub fn table_from_value(v: Value) -> Result<TriFilteredTable> {
    table_from_raw(serde_json::from_value(v)?)
}

pub fn table_to_value(t: &TriFilteredTable) -> Value {
    serde_json::to_value(table_to_raw(t)).expect("table serializes")
}

pub fn parse_table(s: &str) -> Result<TriFilteredTable> {
    table_from_raw(serde_json::from_str(s)?)
}

pub fn table_to_json(t: &TriFilteredTable) -> String {
    serde_json::to_string_pretty(&table_to_raw(t)).expect("table serializes")
}

/// A single table object or an array of them.
pub fn tables_from_value(v: Value) -> Result<Vec<TriFilteredTable>> {
    match v {
        Value::Array(items) => items.into_iter().map(table_from_value).collect(),
        other => Ok(vec![table_from_value(other)?]),
    }
}

pub fn parse_tables(s: &str) -> Result<Vec<TriFilteredTable>> {
    tables_from_value(serde_json::from_str(s)?)
}

pub fn table_set_to_json(set: &TableSet) -> String {
    let v: Vec<Value> = set.tables().map(table_to_value).collect();
    serde_json::to_string_pretty(&v).expect("tables serialize")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    space: String,
    #[serde(default)]
    k_offset: i32,
    #[serde(default)]
    shift: i32,
    #[serde(default)]
    twist: i32,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawTemplate {
    Builtin(String),
    Custom {
        #[serde(default)]
        name: Option<String>,
        period: i32,
        terms: Vec<RawTerm>,
    },
    Terms(Vec<RawTerm>),
}

#[derive(Deserialize)]
struct RawPin {
    between: [usize; 2],
    rank: u64,
    #[serde(default)]
    k: Option<i32>,
}

#[derive(Deserialize)]
struct RawSequence {
    template: RawTemplate,
    #[serde(default)]
    tables: Vec<Value>,
    #[serde(default)]
    pins: Vec<RawPin>,
    #[serde(default)]
    unknown: Option<String>,
}

/// A parsed sequence problem.
#[derive(Clone, Debug)]
pub struct SequenceProblem {
    pub template: SequenceTemplate,
    pub tables: TableSet,
    pub pins: Vec<RankPin>,
    pub unknown: Option<Space>,
}

fn terms_from_raw(raw: Vec<RawTerm>) -> Result<Vec<Term>> {
    raw.into_iter()
        .map(|t| {
            Ok(Term {
                space: t.space.parse()?,
                k_offset: t.k_offset,
                shift: t.shift,
                twist: t.twist,
            })
        })
        .collect()
}

fn template_from_raw(raw: RawTemplate) -> Result<SequenceTemplate> {
    match raw {
        RawTemplate::Builtin(name) => builtin_template(&name)
            .ok_or_else(|| Error::InvalidTemplate(format!("unknown builtin template '{name}'"))),
        RawTemplate::Custom {
            name,
            period,
            terms,
        } => SequenceTemplate::new(
            name.unwrap_or_else(|| "custom".into()),
            terms_from_raw(terms)?,
            period,
        ),
        RawTemplate::Terms(terms) => SequenceTemplate::new("custom", terms_from_raw(terms)?, 1),
    }
}

/// Resolves one entry of `"tables"`: a family name, a path (relative to
/// `base`), or an inline table.
fn resolve_tables(v: Value, base: &Path) -> Result<Vec<TriFilteredTable>> {
    match v {
        Value::String(s) => {
            if let Ok(family) = s.parse::<Family>() {
                return Ok(family.tables()?.tables().cloned().collect());
            }
            let path: PathBuf = base.join(&s);
            if !path.exists() && !s.contains('/') && !s.ends_with(".json") {
                return Err(Error::UnknownFamily(s));
            }
            parse_tables(&std::fs::read_to_string(path)?)
        }
        other => tables_from_value(other),
    }
}

pub fn parse_sequence(s: &str, base: &Path) -> Result<SequenceProblem> {
    let raw: RawSequence = serde_json::from_str(s)?;
    let template = template_from_raw(raw.template)?;
    let mut tables = TableSet::new();
    for v in raw.tables {
        for t in resolve_tables(v, base)? {
            if tables.insert(t)?.is_some() {
                return Err(Error::InvalidParameter(
                    "the same space is supplied twice".into(),
                ));
            }
        }
    }
    let pins = raw
        .pins
        .into_iter()
        .map(|p| RankPin {
            from: p.between[0],
            to: p.between[1],
            k: p.k,
            rank: p.rank,
        })
        .collect();
    let unknown = raw.unknown.map(|s| s.parse()).transpose()?;
    Ok(SequenceProblem {
        template,
        tables,
        pins,
        unknown,
    })
}

/// Either kind of input document, distinguished by a `"template"` key.
#[derive(Clone, Debug)]
pub enum Document {
    Tables(Vec<TriFilteredTable>),
    Sequence(SequenceProblem),
}

pub fn parse_document(s: &str, base: &Path) -> Result<Document> {
    let v: Value = serde_json::from_str(s)?;
    if v.get("template").is_some() {
        parse_sequence(s, base).map(Document::Sequence)
    } else {
        tables_from_value(v).map(Document::Tables)
    }
}
