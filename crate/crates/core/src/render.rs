//! Plain-text grids: one block per `(k, l)`, rows by ascending `p`, columns by
//! ascending `q`.
//!
//! ```text
//! table Uc n=2 m=1
//! k=2 l=2
//! p\q  1  2
//!   0  3  1
//!   1  3 18
//!   2  0  1
//! ```

use crate::error::{Error, Result};
use crate::filtration::{Index, Space, SpaceDescriptor, TableSet, TriFilteredTable};

pub fn render_table(t: &TriFilteredTable) -> String {
    let d = t.descriptor();
    let mut out = format!("table {} n={}", d.space(), d.n());
    if let Some(m) = d.m() {
        out.push_str(&format!(" m={m}"));
    }
    out.push('\n');
    for (k, l) in t.blocks() {
        let cells: Vec<(Index, u64)> = t.entries().filter(|(i, _)| i.k == k && i.l == l).collect();
        let (qs, ps): (Vec<i32>, Vec<i32>) = cells.iter().map(|(i, _)| (i.q, i.p)).unzip();
        let (q0, q1) = (*qs.iter().min().unwrap(), *qs.iter().max().unwrap());
        let (p0, p1) = (*ps.iter().min().unwrap(), *ps.iter().max().unwrap());
        let width = cells
            .iter()
            .map(|(_, v)| v.to_string().len())
            .chain((q0..=q1).map(|q| q.to_string().len()))
            .chain((p0..=p1).map(|p| p.to_string().len()))
            .max()
            .unwrap_or(1)
            .max(3);
        out.push_str(&format!("k={k} l={l}\n{:>width$}", "p\\q"));
        for q in q0..=q1 {
            out.push_str(&format!(" {q:>width$}"));
        }
        out.push('\n');
        for p in p0..=p1 {
            out.push_str(&format!("{p:>width$}"));
            for q in q0..=q1 {
                out.push_str(&format!(" {:>width$}", t.get(Index::new(k, l, q, p))));
            }
            out.push('\n');
        }
    }
    out
}

pub fn render_set(set: &TableSet) -> String {
    set.tables()
        .map(render_table)
        .collect::<Vec<_>>()
        .join("\n")
}

fn grid_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Grid(format!("line {}: {msg}", line + 1))
}

fn key_value<'a>(tok: &'a str, key: &str, line: usize) -> Result<&'a str> {
    tok.strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| grid_err(line, format!("expected {key}=..., found '{tok}'")))
}

fn int<T: std::str::FromStr>(s: &str, line: usize) -> Result<T> {
    s.parse()
        .map_err(|_| grid_err(line, format!("bad number '{s}'")))
}

/// Parses the output of [`render_set`] (or [`render_table`]).
pub fn parse_grid(s: &str) -> Result<Vec<TriFilteredTable>> {
    let mut tables: Vec<TriFilteredTable> = Vec::new();
    let mut block: Option<(i32, i32)> = None;
    let mut columns: Vec<i32> = Vec::new();
    for (ln, raw) in s.lines().enumerate() {
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first().copied() {
            None => continue,
            Some("table") => {
                let space: Space = toks
                    .get(1)
                    .ok_or_else(|| grid_err(ln, "missing space"))?
                    .parse()?;
                let n = int(key_value(toks.get(2).copied().unwrap_or(""), "n", ln)?, ln)?;
                let m = toks
                    .get(3)
                    .map(|t| key_value(t, "m", ln).and_then(|v| int(v, ln)))
                    .transpose()?;
                tables.push(TriFilteredTable::new(SpaceDescriptor::new(space, n, m)?));
                block = None;
            }
            Some(first) if first.starts_with("k=") => {
                let k = int(key_value(first, "k", ln)?, ln)?;
                let l = int(key_value(toks.get(1).copied().unwrap_or(""), "l", ln)?, ln)?;
                block = Some((k, l));
                columns.clear();
            }
            Some("p\\q") => {
                columns = toks[1..]
                    .iter()
                    .map(|t| int(t, ln))
                    .collect::<Result<_>>()?;
            }
            Some(first) => {
                let (k, l) = block.ok_or_else(|| grid_err(ln, "row outside a k/l block"))?;
                let table = tables
                    .last_mut()
                    .ok_or_else(|| grid_err(ln, "row before table header"))?;
                let p: i32 = int(first, ln)?;
                if toks.len() != columns.len() + 1 {
                    return Err(grid_err(ln, "row width does not match the q header"));
                }
                for (q, tok) in columns.iter().zip(&toks[1..]) {
                    let dim: u64 = int(tok, ln)?;
                    let index = Index::new(k, l, *q, p);
                    if table.get(index) != 0 {
                        return Err(Error::DuplicateEntry(index));
                    }
                    table.set(index, dim);
                }
            }
        }
    }
    Ok(tables)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{fibration_tables, FibrationFamily};

    #[test]
    fn uc_middle_block_layout() {
        let set = fibration_tables(FibrationFamily::EllipticCurveBase { r: 3 }).unwrap();
        let text = render_table(set.require(Space::Uc).unwrap());
        assert!(text.starts_with("table Uc n=2 m=1\n"));
        let block: Vec<&str> = text
            .split("k=2 l=2\n")
            .nth(1)
            .unwrap()
            .lines()
            .take(4)
            .collect();
        assert_eq!(
            block[0].split_whitespace().collect::<Vec<_>>(),
            ["p\\q", "1", "2"]
        );
        assert_eq!(
            block[1].split_whitespace().collect::<Vec<_>>(),
            ["0", "3", "1"]
        );
        assert_eq!(
            block[2].split_whitespace().collect::<Vec<_>>(),
            ["1", "3", "18"]
        );
        assert_eq!(
            block[3].split_whitespace().collect::<Vec<_>>(),
            ["2", "0", "1"]
        );
    }

    #[test]
    fn round_trip() {
        let set = fibration_tables(FibrationFamily::FiniteSurfaceBase { g: 4 }).unwrap();
        let parsed = parse_grid(&render_set(&set)).unwrap();
        assert_eq!(parsed, set.tables().cloned().collect::<Vec<_>>());
    }

    #[test]
    fn malformed() {
        assert!(parse_grid("table Y n=2 m=1\n  0 1\n").is_err());
        assert!(parse_grid("table Q n=2\n").is_err());
        assert!(parse_grid("table Y n=2 m=1\nk=0 l=1\np\\q 0\n 0 1 2\n").is_err());
    }
}
