//! Generators for the four K3 families.
//!
//! Fibration side: a K3 surface `Y` fibred in genus one curves over `P^1`,
//! with `P^1` embedded by the degree-`r` Veronese map (so `Z` is `r` disjoint
//! fibres), and a K3 surface of degree `2k` mapped finitely onto a surface
//! (so `Z` is a smooth curve of genus `g = k + 1`). Degeneration side: Type II
//! degenerations with `r + 1` components and Type III degenerations with
//! `k + 2` components.
//!
//! Open and supported theories are produced by duality from the compactly
//! supported and total-space tables respectively.

use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{type_iii_counts, DualComplexData};
use crate::error::{Error, Result};
use crate::filtration::{
    poincare_verdier_dual, reflect, Space, SpaceDescriptor, TableSet, TriFilteredTable,
};

/// K3 dimension.
pub const N: u32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FibrationFamily {
    /// Elliptic fibration over `P^1`; `Z` is `r` smooth fibres.
    EllipticCurveBase { r: u32 },
    /// Generically finite map onto a surface; `Z` is a curve of genus `g`.
    FiniteSurfaceBase { g: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegenerationFamily {
    /// Chain of `r + 1` surfaces.
    TypeII { r: u32 },
    /// Sphere of `k + 2` rational surfaces with `2k` triple points.
    TypeIII { k: u32 },
}

impl FibrationFamily {
    pub fn validate(self) -> Result<Self> {
        match self {
            FibrationFamily::EllipticCurveBase { r: 0 } => {
                Err(Error::InvalidParameter("elliptic base needs r >= 1".into()))
            }
            FibrationFamily::FiniteSurfaceBase { g } if g < 2 => Err(Error::InvalidParameter(
                format!("surface base needs genus g >= 2, got {g}"),
            )),
            f => Ok(f),
        }
    }

    /// Base dimension `m`.
    pub fn base_dimension(self) -> u32 {
        match self {
            FibrationFamily::EllipticCurveBase { .. } => 1,
            FibrationFamily::FiniteSurfaceBase { .. } => 2,
        }
    }

    fn desc(self, space: Space) -> SpaceDescriptor {
        SpaceDescriptor::fibration(space, N, self.base_dimension()).expect("catalog descriptor")
    }
}

impl DegenerationFamily {
    pub fn validate(self) -> Result<Self> {
        match self {
            DegenerationFamily::TypeII { r: 0 } => {
                Err(Error::InvalidParameter("Type II needs r >= 1".into()))
            }
            DegenerationFamily::TypeIII { k: 0 } => {
                Err(Error::InvalidParameter("Type III needs k >= 1".into()))
            }
            d => Ok(d),
        }
    }

    /// Number of components of the central fibre.
    pub fn components(self) -> u32 {
        match self {
            DegenerationFamily::TypeII { r } => r + 1,
            DegenerationFamily::TypeIII { k } => k + 2,
        }
    }

    /// Dual complex of the central fibre.
    pub fn dual_complex(self) -> Result<DualComplexData> {
        match self.validate()? {
            DegenerationFamily::TypeII { r } => DualComplexData::chain(r as u64 + 1),
            DegenerationFamily::TypeIII { k } => type_iii_counts(2 * k as u64),
        }
    }

    fn desc(space: Space) -> SpaceDescriptor {
        SpaceDescriptor::degeneration(space, N).expect("catalog descriptor")
    }
}

/// `Y`, `Z`, `Uc` and `U` for a fibration family.
pub fn fibration_tables(f: FibrationFamily) -> Result<TableSet> {
    let f = f.validate()?;
    let (y, z, uc) = match f {
        FibrationFamily::EllipticCurveBase { r } => {
            let r = r as u64;
            let y = TriFilteredTable::new(f.desc(Space::Y))
                .with(0, 1, 0, 0, 1)
                .with(2, 1, 2, 1, 1)
                .with(2, 2, 2, 0, 1)
                .with(2, 2, 2, 1, 18)
                .with(2, 2, 2, 2, 1)
                .with(2, 3, 2, 1, 1)
                .with(4, 3, 4, 2, 1);
            let z = TriFilteredTable::new(f.desc(Space::Z(1)))
                .with(0, 0, 0, 0, r)
                .with(1, 1, 1, 0, r)
                .with(1, 1, 1, 1, r)
                .with(2, 2, 2, 1, r);
            let uc = TriFilteredTable::new(f.desc(Space::Uc))
                .with(1, 1, 0, 0, r - 1)
                .with(2, 1, 2, 1, 1)
                .with(2, 2, 1, 0, r)
                .with(2, 2, 1, 1, r)
                .with(2, 2, 2, 0, 1)
                .with(2, 2, 2, 1, 18)
                .with(2, 2, 2, 2, 1)
                .with(3, 3, 2, 1, r - 1)
                .with(4, 3, 4, 2, 1);
            (y, z, uc)
        }
        FibrationFamily::FiniteSurfaceBase { g } => {
            let g = g as u64;
            let y = TriFilteredTable::new(f.desc(Space::Y))
                .with(0, 2, 0, 0, 1)
                .with(2, 2, 2, 0, 1)
                .with(2, 2, 2, 1, 20)
                .with(2, 2, 2, 2, 1)
                .with(4, 2, 4, 2, 1);
            // Z is connected, so H^0(Z) is one-dimensional.
            let z = TriFilteredTable::new(f.desc(Space::Z(1)))
                .with(0, 1, 0, 0, 1)
                .with(1, 1, 1, 0, g)
                .with(1, 1, 1, 1, g)
                .with(2, 1, 2, 1, 1);
            let uc = TriFilteredTable::new(f.desc(Space::Uc))
                .with(2, 2, 1, 0, g)
                .with(2, 2, 1, 1, g)
                .with(2, 2, 2, 0, 1)
                .with(2, 2, 2, 1, 19)
                .with(2, 2, 2, 2, 1)
                .with(4, 2, 4, 2, 1);
            (y, z, uc)
        }
    };
    let u = poincare_verdier_dual(&uc)?;
    TableSet::try_from(vec![y, z, uc, u])
}

/// Sections `Z_r` with `r >= 2`, needed only by the subvariety comparison.
///
/// For the surface base, `Z_2` is the preimage of a general point section of
/// `B`: `L^2 = 2k = 2g - 2` points. The elliptic family has `m = 1` and so no
/// deeper sections.
pub fn deep_sections(f: FibrationFamily) -> Result<Vec<TriFilteredTable>> {
    Ok(match f.validate()? {
        FibrationFamily::EllipticCurveBase { .. } => Vec::new(),
        FibrationFamily::FiniteSurfaceBase { g } => {
            vec![TriFilteredTable::new(f.desc(Space::Z(2))).with(0, 0, 0, 0, 2 * g as u64 - 2)]
        }
    })
}

/// `Xlim`, `Total` and `Supported` for a degeneration family.
pub fn degeneration_tables(d: DegenerationFamily) -> Result<TableSet> {
    let desc = DegenerationFamily::desc;
    let (xlim, total) = match d.validate()? {
        DegenerationFamily::TypeII { r } => {
            let r = r as u64;
            let xlim = TriFilteredTable::new(desc(Space::Xlim))
                .with(0, 0, 0, 0, 1)
                .with(2, 2, 1, 0, 1)
                .with(2, 2, 1, 1, 1)
                .with(2, 2, 2, 1, 18)
                .with(2, 2, 3, 1, 1)
                .with(2, 2, 3, 2, 1)
                .with(4, 4, 4, 2, 1);
            let total = TriFilteredTable::new(desc(Space::Total))
                .with(0, 1, 0, 0, 1)
                .with(2, 2, 2, 1, r)
                .with(2, 3, 1, 0, 1)
                .with(2, 3, 1, 1, 1)
                .with(2, 3, 2, 1, 18)
                .with(3, 3, 3, 1, r - 1)
                .with(3, 3, 3, 2, r - 1)
                .with(4, 4, 4, 2, r)
                .with(4, 5, 4, 2, 1);
            (xlim, total)
        }
        DegenerationFamily::TypeIII { k } => {
            let g = k as u64 + 1;
            let xlim = TriFilteredTable::new(desc(Space::Xlim))
                .with(0, 0, 0, 0, 1)
                .with(2, 2, 0, 0, 1)
                .with(2, 2, 2, 1, 20)
                .with(2, 2, 4, 2, 1)
                .with(4, 4, 4, 2, 1);
            let total = TriFilteredTable::new(desc(Space::Total))
                .with(0, 1, 0, 0, 1)
                .with(2, 2, 2, 1, g)
                .with(2, 3, 0, 0, 1)
                .with(2, 3, 2, 1, 19)
                .with(4, 4, 4, 2, g)
                .with(4, 5, 4, 2, 1);
            (xlim, total)
        }
    };
    let supported = supported_from_total(&total)?;
    TableSet::try_from(vec![xlim, total, supported])
}

/// Cohomology supported on the central fibre, by duality on the total space
/// (complex dimension `n + 1`): the output at `(k, l, q, p)` is the total
/// space entry at `(2n+2-k, 2n+2-l, 2n+2-q, n+1-p)`.
pub fn supported_from_total(total: &TriFilteredTable) -> Result<TriFilteredTable> {
    let desc = total.descriptor();
    if desc.space() != Space::Total {
        return Err(Error::UnsupportedSpace {
            space: desc.space(),
            operation: "central-fibre duality",
        });
    }
    let d = desc.dimension();
    Ok(TriFilteredTable::from_entries(
        desc.with_space(Space::Supported)?,
        total.entries().map(|(i, dim)| (reflect(i, d), dim)),
    ))
}

/// `dim Gr^P_k H^k(Total)`, the kernel of restriction to a nearby fibre.
pub fn phantom_cohomology(d: DegenerationFamily, k: i32) -> Result<u64> {
    if !(0..=4).contains(&k) {
        return Err(Error::InvalidParameter(format!("degree {k} outside 0..=4")));
    }
    let tables = degeneration_tables(d)?;
    Ok(tables.require(Space::Total)?.graded_total(k, k))
}

/// A catalog family by name, e.g. `k3-elliptic:r=3` or `k3-typeIII:k=2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Fibration(FibrationFamily),
    Degeneration(DegenerationFamily),
}

impl Family {
    pub fn tables(self) -> Result<TableSet> {
        match self {
            Family::Fibration(f) => fibration_tables(f),
            Family::Degeneration(d) => degeneration_tables(d),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownFamily(s.to_string());
        let (name, param) = s.split_once(':').ok_or_else(bad)?;
        let (key, value) = param.split_once('=').ok_or_else(bad)?;
        let value: u32 = value.trim().parse().map_err(|_| bad())?;
        let family = match (name.trim(), key.trim()) {
            ("k3-elliptic", "r") => {
                Family::Fibration(FibrationFamily::EllipticCurveBase { r: value })
            }
            ("k3-finite", "g") => {
                Family::Fibration(FibrationFamily::FiniteSurfaceBase { g: value })
            }
            ("k3-typeII", "r") => Family::Degeneration(DegenerationFamily::TypeII { r: value }),
            ("k3-typeIII", "k") => Family::Degeneration(DegenerationFamily::TypeIII { k: value }),
            _ => return Err(bad()),
        };
        match family {
            Family::Fibration(f) => f.validate().map(Family::Fibration),
            Family::Degeneration(d) => d.validate().map(Family::Degeneration),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Fibration(FibrationFamily::EllipticCurveBase { r }) => {
                write!(f, "k3-elliptic:r={r}")
            }
            Family::Fibration(FibrationFamily::FiniteSurfaceBase { g }) => {
                write!(f, "k3-finite:g={g}")
            }
            Family::Degeneration(DegenerationFamily::TypeII { r }) => write!(f, "k3-typeII:r={r}"),
            Family::Degeneration(DegenerationFamily::TypeIII { k }) => {
                write!(f, "k3-typeIII:k={k}")
            }
        }
    }
}
