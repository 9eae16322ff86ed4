use std::collections::BTreeMap;

use super::table::{Index, Space, SpaceDescriptor, TriFilteredTable};
use crate::error::{Error, Result};
use crate::report::{Finding, VerificationReport};

/// First pointwise rule an entry at `i` would break, if any.
///
/// These are the rules that hold entry by entry: degree range, Hodge type
/// range, purity for smooth projective spaces, and the perverse bands.
fn pointwise_violation(desc: &SpaceDescriptor, i: Index) -> Option<String> {
    let d = desc.dimension();
    let Index { k, l, q, p } = i;
    if k < 0 || k > 2 * d {
        return Some(format!("degree-range: k outside 0..={}", 2 * d));
    }
    if p < 0 || p > d || q < p || q > p + d {
        return Some(format!(
            "hodge-range: type (p, q-p) = ({p}, {}) outside [0, {d}]^2",
            q - p
        ));
    }
    let band = |b: i32| -> Option<String> {
        if 2 * l < k {
            Some("perverse-vanishing: Y-type Gr_l^P H^k = 0 for l < k/2".into())
        } else if l < k - b {
            Some(format!(
                "perverse-vanishing: Y-type Gr_l^P H^k = 0 for l < k-{b}"
            ))
        } else if l > k + b {
            Some(format!(
                "perverse-vanishing: Y-type Gr_l^P H^k = 0 for l > k+{b}"
            ))
        } else {
            None
        }
    };
    match desc.space() {
        Space::Y | Space::Z(_) => {
            if q != k {
                return Some("purity: smooth projective H^k is pure of weight k".into());
            }
            band(desc.base_dimension().unwrap_or(0))
        }
        Space::U => {
            let m = desc.base_dimension().unwrap_or(0);
            if l < k {
                Some("perverse-vanishing: Gr_l^P H^k(U) = 0 for l < k".into())
            } else if l > k + m {
                Some(format!(
                    "perverse-vanishing: Gr_l^P H^k(U) = 0 for l > k+{m}"
                ))
            } else {
                None
            }
        }
        Space::Uc => {
            let m = desc.base_dimension().unwrap_or(0);
            if l < k - m {
                Some(format!(
                    "perverse-vanishing: Gr_l^P H^k_c(U) = 0 for l < k-{m}"
                ))
            } else if l > k {
                Some("perverse-vanishing: Gr_l^P H^k_c(U) = 0 for l > k".into())
            } else {
                None
            }
        }
        Space::Xlim => {
            (l != k).then(|| "perverse-vanishing: H^k_lim is concentrated in Gr_k^P".into())
        }
        Space::Total => (l != k && l != k + 1)
            .then(|| "perverse-vanishing: H^k(Total) lives in Gr_k^P and Gr_{k+1}^P".into()),
        Space::Supported => (l != k - 1 && l != k)
            .then(|| "perverse-vanishing: H^k_X0(Total) lives in Gr_{k-1}^P and Gr_k^P".into()),
    }
}

/// Whether a nonzero entry at `i` is allowed by the pointwise rules.
pub fn admissible(desc: &SpaceDescriptor, i: Index) -> bool {
    pointwise_violation(desc, i).is_none()
}

/// Check every pointwise rule plus Hodge symmetry `h^{p,q-p} = h^{q-p,p}`
/// within each weight-graded piece. An empty report means the table passes.
pub fn validate_table(t: &TriFilteredTable) -> VerificationReport {
    let desc = t.descriptor();
    let mut report = VerificationReport::passed();
    for (i, dim) in t.entries() {
        if let Some(relation) = pointwise_violation(desc, i) {
            report.push(Finding::new(relation).in_space(desc.space()).at(i, dim));
        }
    }
    let mut seen = Vec::new();
    for (i, dim) in t.entries() {
        let mirror = Index::new(i.k, i.l, i.q, i.q - i.p);
        let key = if i <= mirror {
            (i, mirror)
        } else {
            (mirror, i)
        };
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        let other = t.get(mirror);
        if other != dim {
            report.push(
                Finding::new("hodge-symmetry: h^{p,q-p} = h^{q-p,p}")
                    .in_space(desc.space())
                    .at(i, dim)
                    .at(mirror, other),
            );
        }
    }
    report
}

/// Compare `Y` with the deeper sections `Z_r` along the perverse filtration.
///
/// For `l < k`, `Gr^P_{l-r} H^{k-2r}(Z_r)` matches `Gr^P_l H^k(Y)(r)` for
/// `r < k-l` and surjects onto it at `r = k-l`. For `l > k`,
/// `Gr^P_l H^k(Y)` matches `Gr^P_{l-r} H^k(Z_r)` for `r < l-k` and injects
/// into it at `r = l-k`. Sections deeper than the base dimension are empty.
pub fn check_subvariety_constraints(
    y: &TriFilteredTable,
    zs: &[TriFilteredTable],
) -> Result<VerificationReport> {
    let desc = y.descriptor();
    if desc.space() != Space::Y {
        return Err(Error::UnsupportedSpace {
            space: desc.space(),
            operation: "subvariety comparison",
        });
    }
    let m = desc.base_dimension().unwrap_or(0);
    let mut by_depth: BTreeMap<i32, &TriFilteredTable> = BTreeMap::new();
    for z in zs {
        match z.space() {
            Space::Z(r) if z.descriptor().n() == desc.n() && z.descriptor().m() == desc.m() => {
                by_depth.insert(r as i32, z);
            }
            Space::Z(_) => {
                return Err(Error::InvalidDescriptor(format!(
                    "{} does not share n, m with {}",
                    z.descriptor(),
                    desc
                )))
            }
            other => {
                return Err(Error::UnsupportedSpace {
                    space: other,
                    operation: "subvariety comparison (expected Z:r)",
                })
            }
        }
    }
    let z_dim = |r: i32, i: Index| -> Result<u64> {
        if r > m {
            return Ok(0);
        }
        by_depth
            .get(&r)
            .map(|z| z.get(i))
            .ok_or(Error::MissingSubvariety(r as u32))
    };

    let mut report = VerificationReport::passed();
    for (yi, ydim) in y.entries() {
        let Index { k, l, q, p } = yi;
        if l < k {
            for r in 1..=(k - l) {
                let zi = Index::new(k - 2 * r, l - r, q - 2 * r, p - r);
                let zdim = z_dim(r, zi)?;
                let (ok, name) = if r < k - l {
                    (zdim == ydim, "subvariety-iso (l<k)")
                } else {
                    (zdim >= ydim, "subvariety-surjection (r=k-l)")
                };
                if !ok {
                    report.push(
                        Finding::new(format!("{name}: Z_{r} vs Y(r) at k={k}, l={l}"))
                            .in_space(Space::Y)
                            .at(yi, ydim)
                            .at(zi, zdim),
                    );
                }
            }
        } else if l > k {
            for r in 1..=(l - k) {
                let zi = Index::new(k, l - r, q, p);
                let zdim = z_dim(r, zi)?;
                let (ok, name) = if r < l - k {
                    (zdim == ydim, "subvariety-iso (l>k)")
                } else {
                    (zdim >= ydim, "subvariety-injection (r=l-k)")
                };
                if !ok {
                    report.push(
                        Finding::new(format!("{name}: Y vs Z_{r} at k={k}, l={l}"))
                            .in_space(Space::Y)
                            .at(yi, ydim)
                            .at(zi, zdim),
                    );
                }
            }
        }
    }
    // Isomorphism cases seen from the Z side, where Y has nothing.
    for (&r, z) in &by_depth {
        for (zi, zdim) in z.entries() {
            let yi = if zi.l < zi.k {
                Index::new(zi.k + 2 * r, zi.l + r, zi.q + 2 * r, zi.p + r)
            } else if zi.l > zi.k {
                Index::new(zi.k, zi.l + r, zi.q, zi.p)
            } else {
                continue;
            };
            if y.get(yi) == 0 {
                report.push(
                    Finding::new(format!(
                        "subvariety-iso: Z_{r} entry has no Y counterpart at k={}, l={}",
                        yi.k, yi.l
                    ))
                    .in_space(Space::Z(r as u32))
                    .at(zi, zdim)
                    .at(yi, 0),
                );
            }
        }
    }
    Ok(report)
}
