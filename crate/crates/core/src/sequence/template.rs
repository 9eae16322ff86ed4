use crate::error::{Error, Result};
use crate::filtration::{Index, Space};
use crate::report::LaneCoord;

/// One term of a periodic sequence: the group `H^{k + k_offset}` of `space`,
/// with perverse shift `[shift]` and Tate twist `(twist)`.
///
/// On the lane `(l, q, p)` the term reads the table entry at
/// `(k + k_offset, l + shift, q + 2 twist, p + twist)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub space: Space,
    pub k_offset: i32,
    pub shift: i32,
    pub twist: i32,
}

impl Term {
    pub const fn new(space: Space, k_offset: i32, shift: i32, twist: i32) -> Self {
        Term {
            space,
            k_offset,
            shift,
            twist,
        }
    }

    pub fn lookup(&self, k: i32, lane: LaneCoord) -> Index {
        Index::new(
            k + self.k_offset,
            lane.l + self.shift,
            lane.q + 2 * self.twist,
            lane.p + self.twist,
        )
    }

    /// Inverse of [`lookup`](Self::lookup): the cycle degree and lane an entry feeds.
    pub fn lane_of(&self, i: Index) -> (i32, LaneCoord) {
        (
            i.k - self.k_offset,
            LaneCoord {
                l: i.l - self.shift,
                q: i.q - 2 * self.twist,
                p: i.p - self.twist,
            },
        )
    }

    /// Concrete label at cycle degree `k`, e.g. `H^4(U)(1)`.
    pub fn label(&self, k: i32) -> String {
        let mut s = self.space.group_label(k + self.k_offset);
        if self.shift != 0 {
            s.push_str(&format!("[{}]", self.shift));
        }
        if self.twist != 0 {
            s.push_str(&format!("({})", self.twist));
        }
        s
    }
}

/// Ordered terms of one cycle; the next cycle starts `period` degrees higher.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTemplate {
    name: String,
    terms: Vec<Term>,
    period: i32,
}

impl SequenceTemplate {
    pub fn new(name: impl Into<String>, terms: Vec<Term>, period: i32) -> Result<Self> {
        if period <= 0 {
            return Err(Error::InvalidTemplate(format!(
                "period {period} must be positive"
            )));
        }
        if terms.is_empty() {
            return Err(Error::InvalidTemplate("no terms".into()));
        }
        Ok(SequenceTemplate {
            name: name.into(),
            terms,
            period,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn period(&self) -> i32 {
        self.period
    }

    /// Distinct spaces, in order of first appearance.
    pub fn spaces(&self) -> Vec<Space> {
        let mut out = Vec::new();
        for t in &self.terms {
            if !out.contains(&t.space) {
                out.push(t.space);
            }
        }
        out
    }
}

pub const BUILTIN_NAMES: [&str; 4] = ["loc1", "loc2", "mirror-cs", "cs"];

/// The four built-in templates:
///
/// * `loc1`: `H^k(Y) → H^k(U) → H^{k-1}(Z)[-1](-1) → H^{k+1}(Y)`
/// * `loc2`: `H^k_c(U) → H^k(Y) → H^k(Z)[-1] → H^{k+1}_c(U)`
/// * `mirror-cs`: `H^k_c(U) → H^k(Y) → H^{k+2}(Y)(1) → H^{k+2}(U)(1) → H^{k+2}_c(U)`
/// * `cs`: `H^k(Total)[1] → H^k_lim → H^k_lim(-1) → H^{k+2}_X0(Total)[1] → H^{k+2}(Total)[1]`
pub fn builtin_templates() -> Vec<SequenceTemplate> {
    BUILTIN_NAMES
        .iter()
        .map(|n| builtin_template(n).expect("builtin"))
        .collect()
}

pub fn builtin_template(name: &str) -> Option<SequenceTemplate> {
    let (terms, period) = match name {
        "loc1" => (
            vec![
                Term::new(Space::Y, 0, 0, 0),
                Term::new(Space::U, 0, 0, 0),
                Term::new(Space::Z(1), -1, -1, -1),
            ],
            1,
        ),
        "loc2" => (
            vec![
                Term::new(Space::Uc, 0, 0, 0),
                Term::new(Space::Y, 0, 0, 0),
                Term::new(Space::Z(1), 0, -1, 0),
            ],
            1,
        ),
        "mirror-cs" => (
            vec![
                Term::new(Space::Uc, 0, 0, 0),
                Term::new(Space::Y, 0, 0, 0),
                Term::new(Space::Y, 2, 0, 1),
                Term::new(Space::U, 2, 0, 1),
            ],
            2,
        ),
        "cs" => (
            vec![
                Term::new(Space::Total, 0, 1, 0),
                Term::new(Space::Xlim, 0, 0, 0),
                Term::new(Space::Xlim, 0, 0, -1),
                Term::new(Space::Supported, 2, 1, 0),
            ],
            2,
        ),
        _ => return None,
    };
    SequenceTemplate::new(name, terms, period).ok()
}
