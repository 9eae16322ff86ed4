use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which cohomology theory of which space a table describes.
///
/// The first four live on the fibration side (`Y -> B` with `Z` the preimage
/// of a general linear section and `U = Y - Z`); the last three on the
/// degeneration side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Space {
    Y,
    /// Preimage of a general codimension-`r` linear section of the base.
    Z(u32),
    U,
    /// Compactly supported cohomology of `U`.
    Uc,
    /// Nearby fibre with its limiting mixed Hodge structure.
    Xlim,
    /// Total space of the degeneration.
    Total,
    /// Cohomology of the total space supported on the central fibre.
    Supported,
}

impl Space {
    pub fn is_degeneration(self) -> bool {
        matches!(self, Space::Xlim | Space::Total | Space::Supported)
    }

    /// Cohomology-group label used in rendered output, e.g. `H^k_c(U)`.
    pub fn group_label(self, k: i32) -> String {
        match self {
            Space::Y => format!("H^{k}(Y)"),
            Space::Z(1) => format!("H^{k}(Z)"),
            Space::Z(r) => format!("H^{k}(Z_{r})"),
            Space::U => format!("H^{k}(U)"),
            Space::Uc => format!("H^{k}_c(U)"),
            Space::Xlim => format!("H^{k}_lim(X)"),
            Space::Total => format!("H^{k}(Total)"),
            Space::Supported => format!("H^{k}_X0(Total)"),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Y => f.write_str("Y"),
            Space::Z(r) => write!(f, "Z:{r}"),
            Space::U => f.write_str("U"),
            Space::Uc => f.write_str("Uc"),
            Space::Xlim => f.write_str("Xlim"),
            Space::Total => f.write_str("Total"),
            Space::Supported => f.write_str("Supported"),
        }
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Y" => Ok(Space::Y),
            "Z" => Ok(Space::Z(1)),
            "U" => Ok(Space::U),
            "Uc" => Ok(Space::Uc),
            "Xlim" => Ok(Space::Xlim),
            "Total" => Ok(Space::Total),
            "Supported" => Ok(Space::Supported),
            _ => s
                .strip_prefix("Z:")
                .and_then(|r| r.parse::<u32>().ok())
                .filter(|&r| r >= 1)
                .map(Space::Z)
                .ok_or_else(|| Error::UnknownSpace(s.to_string())),
        }
    }
}

/// A space tag together with the reference dimension `n` and, on the
/// fibration side, the base dimension `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpaceDescriptor {
    space: Space,
    n: u32,
    m: Option<u32>,
}

impl SpaceDescriptor {
    pub fn new(space: Space, n: u32, m: Option<u32>) -> Result<Self> {
        match (space.is_degeneration(), m) {
            (true, Some(_)) => {
                return Err(Error::InvalidDescriptor(format!(
                    "{space} is a degeneration-side space and takes no base dimension"
                )))
            }
            (false, None) => {
                return Err(Error::InvalidDescriptor(format!(
                    "{space} needs a base dimension m"
                )))
            }
            (false, Some(m)) if m > n => {
                return Err(Error::InvalidDescriptor(format!("m = {m} exceeds n = {n}")))
            }
            _ => {}
        }
        if let (Space::Z(r), Some(m)) = (space, m) {
            if r == 0 || r > m {
                return Err(Error::InvalidDescriptor(format!(
                    "depth r = {r} outside 1..={m}"
                )));
            }
        }
        Ok(SpaceDescriptor { space, n, m })
    }

    pub fn fibration(space: Space, n: u32, m: u32) -> Result<Self> {
        Self::new(space, n, Some(m))
    }

    pub fn degeneration(space: Space, n: u32) -> Result<Self> {
        Self::new(space, n, None)
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> Option<u32> {
        self.m
    }

    /// Same `n` and `m`, different space. Fails if the combination is invalid.
    pub fn with_space(&self, space: Space) -> Result<Self> {
        let m = if space.is_degeneration() {
            None
        } else {
            self.m
        };
        Self::new(space, self.n, m)
    }

    /// Complex dimension of the space itself.
    pub fn dimension(&self) -> i32 {
        let n = self.n as i32;
        match self.space {
            Space::Z(r) => n - r as i32,
            Space::Total | Space::Supported => n + 1,
            _ => n,
        }
    }

    /// Dimension of the base the space is fibred over (fibration side only).
    pub fn base_dimension(&self) -> Option<i32> {
        let m = self.m? as i32;
        Some(match self.space {
            Space::Z(r) => m - r as i32,
            _ => m,
        })
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.space, self.n)?;
        if let Some(m) = self.m {
            write!(f, " m={m}")?;
        }
        Ok(())
    }
}

/// Index quadruple: cohomological degree `k`, perverse index `l`, weight `q`,
/// Hodge index `p`. Ordered lexicographically in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Index {
    pub k: i32,
    pub l: i32,
    pub q: i32,
    pub p: i32,
}

impl Index {
    pub const fn new(k: i32, l: i32, q: i32, p: i32) -> Self {
        Index { k, l, q, p }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={},l={},q={},p={})", self.k, self.l, self.q, self.p)
    }
}

/// Dimensions of `Gr_F^p Gr^W_q Gr^P_l H^k` for one space.
///
/// Absent quadruples have dimension zero; zero is never stored, so two tables
/// are equal exactly when they agree everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriFilteredTable {
    descriptor: SpaceDescriptor,
    entries: BTreeMap<Index, u64>,
}

impl TriFilteredTable {
    pub fn new(descriptor: SpaceDescriptor) -> Self {
        TriFilteredTable {
            descriptor,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries<I>(descriptor: SpaceDescriptor, entries: I) -> Self
    where
        I: IntoIterator<Item = (Index, u64)>,
    {
        let mut table = Self::new(descriptor);
        for (index, dim) in entries {
            table.set(index, dim);
        }
        table
    }

    /// Builder form of [`set`](Self::set).
    pub fn with(mut self, k: i32, l: i32, q: i32, p: i32, dim: u64) -> Self {
        self.set(Index::new(k, l, q, p), dim);
        self
    }

    pub fn set(&mut self, index: Index, dim: u64) {
        if dim == 0 {
            self.entries.remove(&index);
        } else {
            self.entries.insert(index, dim);
        }
    }

    pub fn get(&self, index: Index) -> u64 {
        self.entries.get(&index).copied().unwrap_or(0)
    }

    pub fn descriptor(&self) -> &SpaceDescriptor {
        &self.descriptor
    }

    pub fn space(&self) -> Space {
        self.descriptor.space
    }

    pub fn entries(&self) -> impl Iterator<Item = (Index, u64)> + '_ {
        self.entries.iter().map(|(i, d)| (*i, *d))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// `dim H^k`.
    pub fn degree_total(&self, k: i32) -> u64 {
        self.entries()
            .filter(|(i, _)| i.k == k)
            .map(|(_, d)| d)
            .sum()
    }

    /// `dim Gr^P_l H^k`.
    pub fn graded_total(&self, k: i32, l: i32) -> u64 {
        self.entries()
            .filter(|(i, _)| i.k == k && i.l == l)
            .map(|(_, d)| d)
            .sum()
    }

    /// The nonzero `(k, l)` blocks in order.
    pub fn blocks(&self) -> Vec<(i32, i32)> {
        let mut blocks: Vec<(i32, i32)> = self.entries.keys().map(|i| (i.k, i.l)).collect();
        blocks.dedup();
        blocks
    }

    /// Re-index every entry; the map must be injective on the support.
    pub(crate) fn map_indices(
        &self,
        descriptor: SpaceDescriptor,
        f: impl Fn(Index) -> Index,
    ) -> TriFilteredTable {
        TriFilteredTable {
            descriptor,
            entries: self.entries.iter().map(|(i, d)| (f(*i), *d)).collect(),
        }
    }
}

/// Tables keyed by space, all sharing one reference dimension `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TableSet {
    tables: BTreeMap<Space, TriFilteredTable>,
}

impl TableSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Insert a table, replacing any previous table for the same space.
    pub fn insert(&mut self, table: TriFilteredTable) -> Result<Option<TriFilteredTable>> {
        if let Some(n) = self.n() {
            if n != table.descriptor.n {
                return Err(Error::DimensionMismatch(n, table.descriptor.n));
            }
        }
        Ok(self.tables.insert(table.space(), table))
    }

    pub fn get(&self, space: Space) -> Option<&TriFilteredTable> {
        self.tables.get(&space)
    }

    pub fn require(&self, space: Space) -> Result<&TriFilteredTable> {
        self.get(space).ok_or(Error::MissingTable(space))
    }

    pub fn remove(&mut self, space: Space) -> Option<TriFilteredTable> {
        self.tables.remove(&space)
    }

    pub fn contains(&self, space: Space) -> bool {
        self.tables.contains_key(&space)
    }

    pub fn spaces(&self) -> impl Iterator<Item = Space> + '_ {
        self.tables.keys().copied()
    }

    pub fn tables(&self) -> impl Iterator<Item = &TriFilteredTable> {
        self.tables.values()
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    /// Shared reference dimension, if any table is present.
    pub fn n(&self) -> Option<u32> {
        self.tables.values().next().map(|t| t.descriptor.n)
    }

    /// Base dimension carried by the fibration-side tables, if any.
    pub fn m(&self) -> Option<u32> {
        self.tables.values().find_map(|t| t.descriptor.m)
    }

    /// Merge another set into this one; later tables win.
    pub fn extend(&mut self, other: TableSet) -> Result<()> {
        for table in other.tables.into_values() {
            self.insert(table)?;
        }
        Ok(())
    }
}

impl TryFrom<Vec<TriFilteredTable>> for TableSet {
    type Error = Error;

    fn try_from(tables: Vec<TriFilteredTable>) -> Result<Self> {
        let mut set = TableSet::new();
        for t in tables {
            set.insert(t)?;
        }
        Ok(set)
    }
}
