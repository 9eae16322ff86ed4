//! Dual complexes of normal-crossings central fibres and how their strata
//! counts change under base change and Veronese re-embedding.

use serde::{Deserialize, Serialize};

use crate::catalog::FibrationFamily;
use crate::error::{Error, Result};

/// Attached to sphere base-change output: edges and faces are recomputed from
/// the component count rather than tracked stratum by stratum.
pub const SPHERE_RECOUNT_NOTE: &str =
    "sphere edges/faces recomputed from components via 3F = 2E and V - E + F = 2 (modeling choice)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    Chain,
    Sphere,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDualComplex")]
pub struct DualComplexData {
    components: u64,
    double_curves: u64,
    triple_points: u64,
    topology: Topology,
}

#[derive(Deserialize)]
struct RawDualComplex {
    components: u64,
    double_curves: u64,
    triple_points: u64,
    topology: Topology,
}

impl TryFrom<RawDualComplex> for DualComplexData {
    type Error = Error;

    fn try_from(raw: RawDualComplex) -> Result<Self> {
        DualComplexData::new(
            raw.topology,
            raw.components,
            raw.double_curves,
            raw.triple_points,
        )
    }
}

impl DualComplexData {
    pub fn new(
        topology: Topology,
        components: u64,
        double_curves: u64,
        triple_points: u64,
    ) -> Result<Self> {
        let d = DualComplexData {
            components,
            double_curves,
            triple_points,
            topology,
        };
        if components == 0 {
            return Err(Error::InvalidParameter(
                "dual complex needs at least one component".into(),
            ));
        }
        let ok = match topology {
            Topology::Chain => triple_points == 0 && double_curves == components - 1,
            Topology::Sphere => {
                components + triple_points == double_curves + 2
                    && 3 * triple_points == 2 * double_curves
            }
        };
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "inconsistent {topology:?} counts {d}"
            )));
        }
        Ok(d)
    }

    /// A chain of `components` surfaces meeting along `components - 1` curves.
    pub fn chain(components: u64) -> Result<Self> {
        if components == 0 {
            return Err(Error::InvalidParameter(
                "chain needs at least one component".into(),
            ));
        }
        Self::new(Topology::Chain, components, components - 1, 0)
    }

    /// A triangulated sphere with `components` vertices.
    pub fn sphere(components: u64) -> Result<Self> {
        if components < 3 {
            return Err(Error::InvalidParameter(format!(
                "a triangulated sphere needs at least 3 vertices, got {components}"
            )));
        }
        let v = components;
        Self::new(Topology::Sphere, v, 3 * (v - 2), 2 * (v - 2))
    }

    pub fn components(&self) -> u64 {
        self.components
    }

    pub fn double_curves(&self) -> u64 {
        self.double_curves
    }

    pub fn triple_points(&self) -> u64 {
        self.triple_points
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.components as i64 - self.double_curves as i64 + self.triple_points as i64
    }
}

impl std::fmt::Display for DualComplexData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(V={}, E={}, F={})",
            self.components, self.double_curves, self.triple_points
        )
    }
}

/// Type III central fibre with `triple_points = 2k`: `k + 2` components and
/// `3k` double curves.
pub fn type_iii_counts(triple_points: u64) -> Result<DualComplexData> {
    if triple_points == 0 || triple_points % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "triple point count must be even and positive, got {triple_points}"
        )));
    }
    let k = triple_points / 2;
    DualComplexData::new(Topology::Sphere, k + 2, 3 * k, 2 * k)
}

/// Semistable reduction after the base change `t -> t^mu`.
///
/// Each double curve contributes `mu - 1` new components and each triple
/// point `(mu - 1)(mu - 2)/2`.
pub fn base_change(d: DualComplexData, mu: u64) -> Result<DualComplexData> {
    if mu == 0 {
        return Err(Error::InvalidParameter(
            "base change order must be positive".into(),
        ));
    }
    let components = d.components
        + (mu - 1) * d.double_curves
        + (mu - 1) * mu.saturating_sub(2) / 2 * d.triple_points;
    match d.topology {
        Topology::Chain => DualComplexData::chain(components),
        Topology::Sphere => DualComplexData::sphere(components),
    }
}

/// Re-embedding by the degree `mu` Veronese map.
pub fn veronese(f: FibrationFamily, mu: u32) -> Result<FibrationFamily> {
    if mu == 0 {
        return Err(Error::InvalidParameter(
            "Veronese degree must be positive".into(),
        ));
    }
    match f.validate()? {
        FibrationFamily::EllipticCurveBase { r } => {
            Ok(FibrationFamily::EllipticCurveBase { r: mu * r })
        }
        FibrationFamily::FiniteSurfaceBase { g } => {
            let k = g - 1;
            Ok(FibrationFamily::FiniteSurfaceBase { g: mu * mu * k + 1 })
        }
    }
}
