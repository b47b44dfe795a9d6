//! Slack data of a recording tableau: per-strip slack numbers, slack
//! row-index vectors, incidence vectors, and the slack incidence matrix.
//!
//! For strip `i` between `μ^{(i-1)}` and `μ^{(i)}`, the slack counts the rows
//! of `μ^{(i)}` missing a strip cell; the slack row-index vector lists them.

use serde::{Deserialize, Serialize};

use crate::recording::RecordingTableau;

/// Slack data of one vertical strip.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripSlack {
    /// Strip index `i`, 1-based from the outside in.
    pub index: usize,
    /// Strip size `Q[i]`.
    pub size: usize,
    /// Slack `t₀^{(i)} = ℓ(μ^{(i)}) −` (number of strip cells in rows
    /// `1..=ℓ(μ^{(i)})`).
    pub slack: usize,
    /// Slack row-index vector `r^{(i)}`, the complement of the strip's row
    /// coordinates in `[1, ℓ(μ^{(i)})]`.
    pub rows: Vec<usize>,
    /// `ℓ(μ^{(i)})`.
    pub inner_len: usize,
    /// `ℓ(μ^{(i-1)})`.
    pub outer_len: usize,
}

impl StripSlack {
    /// Incidence vector of `rows` inside `[1, len]`.
    pub fn incidence(&self, len: usize) -> Vec<u8> {
        (1..=len)
            .map(|r| u8::from(self.rows.contains(&r)))
            .collect()
    }
}

/// Slack data for every strip of a recording tableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlackProfile {
    /// Strips in chain order: index 1 (outermost) first.
    pub strips: Vec<StripSlack>,
    /// Row count of the incidence matrix, `ℓ(λ)`.
    pub matrix_rows: usize,
}

impl SlackProfile {
    pub fn num_strips(&self) -> usize {
        self.strips.len()
    }

    /// The slack sequence `t̲ = (t₀^{(N)}, …, t₀^{(1)})`, innermost strip
    /// first.
    pub fn slack_sequence(&self) -> Vec<usize> {
        self.strips.iter().rev().map(|s| s.slack).collect()
    }

    /// The slack row-index vector sequence `r̲ = [r^{(N)}, …, r^{(1)}]`.
    pub fn row_vector_sequence(&self) -> Vec<Vec<usize>> {
        self.strips.iter().rev().map(|s| s.rows.clone()).collect()
    }

    /// The `ℓ(λ) × N` slack incidence matrix `[δ_{r^{(N)}}, …, δ_{r^{(1)}}]`,
    /// one column per strip, innermost first.
    pub fn incidence_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.num_strips();
        (1..=self.matrix_rows)
            .map(|row| {
                (0..n)
                    .map(|c| {
                        let strip = &self.strips[n - 1 - c];
                        u8::from(strip.rows.contains(&row))
                    })
                    .collect()
            })
            .collect()
    }
}

/// Extracts the slack profile of a recording tableau from its strip chain.
pub fn slack_profile(q: &RecordingTableau) -> SlackProfile {
    let chain = q.strip_chain();
    let matrix_rows = chain.outer().len();
    let strips = (1..=chain.num_strips())
        .map(|i| {
            let inner = &chain.shapes()[i];
            let outer = &chain.shapes()[i - 1];
            let cells = chain.strip_cells(i);
            let inner_len = inner.len();
            let in_range = cells.iter().filter(|&&(r, _)| r <= inner_len).count();
            let cell_rows: Vec<usize> = cells.iter().map(|&(r, _)| r).collect();
            let rows: Vec<usize> = (1..=inner_len)
                .filter(|r| !cell_rows.contains(r))
                .collect();
            StripSlack {
                index: i,
                size: chain.strip_size(i),
                slack: inner_len - in_range,
                rows,
                inner_len,
                outer_len: outer.len(),
            }
        })
        .collect();
    SlackProfile {
        strips,
        matrix_rows,
    }
}

/// The comparison `x ≤_r y`: `x` is at least as long as `y` and componentwise
/// `x_j ≤ y_j` wherever `y_j > 0`. In particular `x ≤_r ()` always holds.
fn le_r(x: &[usize], y: &[usize]) -> bool {
    x.len() >= y.len() && x.iter().zip(y).all(|(&a, &b)| b == 0 || a <= b)
}

/// Checks the slack constraints of a profile against the bound `n`:
///
/// - (a) `ℓ(μ^{(i-1)}) = Q[i] + t₀^{(i)}`;
/// - (b) `t₀^{(i-1)} ≤ t₀^{(i)} ≤ ℓ(μ^{(i)}) ≤ ℓ(μ^{(i-1)})`;
/// - (c) `2n ≥ Q[i] + 2t₀^{(i)}`;
/// - (d) `r^{(i)} ≤_r r^{(i-1)}`;
/// - (e) `r^{(i)} ⊆ [1, min(ℓ(μ^{(i)}), 2n − t₀^{(i)})]`.
pub fn validate_slack(profile: &SlackProfile, n: usize) -> bool {
    let mut prev_slack = 0usize;
    let mut prev_rows: &[usize] = &[];
    for strip in &profile.strips {
        if strip.outer_len != strip.size + strip.slack {
            return false; // (a)
        }
        if prev_slack > strip.slack
            || strip.slack > strip.inner_len
            || strip.inner_len > strip.outer_len
        {
            return false; // (b)
        }
        if 2 * n < strip.size + 2 * strip.slack {
            return false; // (c)
        }
        if !le_r(&strip.rows, prev_rows) {
            return false; // (d)
        }
        if strip.rows.len() != strip.slack
            || strip
                .rows
                .iter()
                .any(|&r| r == 0 || r > strip.inner_len || r > 2 * n - strip.slack)
        {
            return false; // (e)
        }
        prev_slack = strip.slack;
        prev_rows = &strip.rows;
    }
    true
}

/// Admissible `(strip size, slack)` combinations for the bound `n`: the strip
/// size ranges over even numbers and each size `q` allows slacks
/// `0..=(2n − q)/2`. Sizes are listed in decreasing order.
pub fn admissible_slacks(n: usize) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    let mut q = 2 * n;
    while q >= 2 {
        let t_max = (2 * n - q) / 2;
        out.push((q, (0..=t_max).collect()));
        q -= 2;
    }
    out
}
