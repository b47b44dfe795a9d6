//! The inverse of the quantum LR map: iterate reverse extraction, column
//! expansion, and literal prepending over the strips of a recording tableau,
//! innermost strip first.

use crate::error::Error;
use crate::insertion::{pieri_product, prepend_column, reverse_extract};
use crate::partition::Partition;
use crate::recording::RecordingTableau;
use crate::reduction::{reduce_inverse, SymplecticColumn};
use crate::slack::slack_profile;
use crate::tableau::{yamanouchi_tableau, SkewTableau};

/// Data recorded for one strip of an inverse run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripTrace {
    /// Strip index, processed from the largest down to 1.
    pub strip: usize,
    pub size: usize,
    pub slack: usize,
    pub rows: Vec<usize>,
    /// Target column length `ℓ(μ^{(i-1)})`.
    pub target_len: usize,
    /// Column bumped out of the first column, sorted.
    pub bumped: Vec<usize>,
    /// Its expansion to length `target_len`.
    pub expanded: Vec<usize>,
    /// Tableau after prepending the expansion.
    pub result: SkewTableau,
}

/// One step of the inverse map: reverse-extract along `r`, expand the bumped
/// column to `target_len`, and prepend it.
pub fn inverse_one_strip(
    tableau: &SkewTableau,
    r: &[usize],
    target_len: usize,
    two_n: usize,
) -> Result<SkewTableau, Error> {
    let ext = reverse_extract(tableau, r)?;
    let bumped = SymplecticColumn::try_new(ext.bumped)?;
    let expanded = reduce_inverse(&bumped, target_len, two_n)?;
    prepend_column(&expanded, &ext.remainder)
}

fn check_pair(s: &SkewTableau, q: &RecordingTableau) -> Result<(), Error> {
    if s.inner() != &Partition::empty() {
        return Err(Error::InvalidShape(format!(
            "expected a straight shape, got {}",
            s.shape()
        )));
    }
    if q.inner() != s.outer() {
        return Err(Error::ShapeMismatch {
            expected: q.inner().parts().to_vec(),
            found: s.outer().parts().to_vec(),
        });
    }
    if !s.is_semistandard() {
        return Err(Error::NotSemistandard(format!(
            "input tableau of shape {}",
            s.shape()
        )));
    }
    if s.max_entry() > 2 * q.n() {
        return Err(Error::NotSemistandard(format!(
            "entry {} exceeds the alphabet bound {}",
            s.max_entry(),
            2 * q.n()
        )));
    }
    for k in 1..=s.outer().len() {
        let e = s.entry(k, 1).expect("first column is full");
        if e < 2 * k - 1 {
            let first_column = (1..=s.outer().len())
                .filter_map(|i| s.entry(i, 1))
                .collect();
            return Err(Error::NotSymplectic(first_column));
        }
    }
    Ok(())
}

/// The inverse quantum LR map on a pair (symplectic tableau, recording
/// tableau), producing a semistandard tableau of the recording tableau's
/// outer shape.
pub fn lr_aii_inverse(s: &SkewTableau, q: &RecordingTableau) -> Result<SkewTableau, Error> {
    lr_aii_inverse_traced(s, q).map(|(t, _)| t)
}

/// As [`lr_aii_inverse`], also returning the per-strip trace.
pub fn lr_aii_inverse_traced(
    s: &SkewTableau,
    q: &RecordingTableau,
) -> Result<(SkewTableau, Vec<StripTrace>), Error> {
    check_pair(s, q)?;
    let profile = slack_profile(q);
    let two_n = 2 * q.n();
    let mut current = s.clone();
    let mut traces = Vec::with_capacity(profile.num_strips());
    for strip in profile.strips.iter().rev() {
        let ext = reverse_extract(&current, &strip.rows)?;
        let bumped = SymplecticColumn::try_new(ext.bumped)?;
        let expanded = reduce_inverse(&bumped, strip.outer_len, two_n)?;
        current = prepend_column(&expanded, &ext.remainder)?;
        traces.push(StripTrace {
            strip: strip.index,
            size: strip.size,
            slack: strip.slack,
            rows: strip.rows.clone(),
            target_len: strip.outer_len,
            bumped: bumped.entries().to_vec(),
            expanded,
            result: current.clone(),
        });
    }
    debug_assert_eq!(current.outer(), q.outer());
    debug_assert!(current.is_semistandard());
    Ok((current, traces))
}

/// Specialization to all-zero slack: the result is the Pieri product of the
/// Yamanouchi tableau of shape `wt(Q)^t` into the symplectic tableau, built
/// here by column insertion as an independent route to the same answer.
pub fn inverse_null_slack(s: &SkewTableau, q: &RecordingTableau) -> Result<SkewTableau, Error> {
    check_pair(s, q)?;
    let profile = slack_profile(q);
    if let Some(strip) = profile.strips.iter().find(|s| s.slack > 0) {
        return Err(Error::NonzeroSlack { strip: strip.index });
    }
    let sizes: Vec<usize> = (1..=profile.num_strips())
        .map(|k| q.multiplicity(k))
        .collect();
    let nu = Partition::try_new(sizes.clone())
        .expect("strip sizes weakly decrease")
        .conjugate();
    debug_assert_eq!(
        yamanouchi_tableau(&nu).rows().len(),
        sizes.first().copied().unwrap_or(0)
    );
    let mut current = s.clone();
    for &len in sizes.iter().rev() {
        let column: Vec<usize> = (1..=len).collect();
        current = pieri_product(&column, &current);
    }
    Ok(current)
}
