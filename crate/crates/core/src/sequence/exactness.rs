use super::lanes::Lane;

/// Outcome of the alternating-rank recursion on one chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityResult {
    pub pass: bool,
    /// `ranks[i - 1]` is the rank `r_i` of the map leaving position `i`.
    pub ranks: Vec<i64>,
    /// 1-based position of the first negative rank, or of the last position
    /// when the terminal rank is nonzero.
    pub first_violation: Option<usize>,
}

/// Decide whether `0 → V_1 → … → V_N → 0` can be exact with `dim V_i = dims[i-1]`.
///
/// Exactness forces `d_i = r_{i-1} + r_i` with `r_0 = 0`, so the ranks are
/// determined; such a sequence exists iff every `r_i ≥ 0` and `r_N = 0`.
pub fn chain_feasibility(dims: &[u64]) -> FeasibilityResult {
    let mut ranks = Vec::with_capacity(dims.len());
    let mut prev = 0i64;
    let mut first_violation = None;
    for (i, &d) in dims.iter().enumerate() {
        let r = d as i64 - prev;
        if r < 0 && first_violation.is_none() {
            first_violation = Some(i + 1);
        }
        ranks.push(r);
        prev = r;
    }
    if first_violation.is_none() && prev != 0 {
        first_violation = Some(dims.len());
    }
    FeasibilityResult {
        pass: first_violation.is_none(),
        ranks,
        first_violation,
    }
}

pub fn check_exactness(lane: &Lane) -> FeasibilityResult {
    chain_feasibility(&lane.dims())
}
