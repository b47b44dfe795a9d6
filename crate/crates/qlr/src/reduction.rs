//! The removal set of a column, the reduction map onto symplectic columns,
//! and its explicit inverse expansion.
//!
//! Reduction deletes from a strictly increasing column an even-sized set of
//! partner pairs `(x, x+1)` (x odd) determined by a single left-to-right
//! pass. The inverse rebuilds the unique column of a prescribed length that
//! reduces to a given symplectic column.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Partner of a letter: `x+1` for odd `x`, `x-1` for even `x`. An involution.
pub fn partner(x: usize) -> usize {
    debug_assert!(x >= 1);
    if x % 2 == 1 {
        x + 1
    } else {
        x - 1
    }
}

/// A strictly increasing column `a` with the symplectic condition
/// `a_i ≥ 2i − 1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct SymplecticColumn {
    entries: Vec<usize>,
}

impl SymplecticColumn {
    pub fn try_new(entries: Vec<usize>) -> Result<Self, Error> {
        let increasing = entries.windows(2).all(|w| w[0] < w[1]);
        let symplectic = entries
            .iter()
            .enumerate()
            .all(|(i, &a)| a >= 2 * (i + 1) - 1);
        if !increasing || !symplectic || entries.first() == Some(&0) {
            return Err(Error::NotSymplectic(entries));
        }
        Ok(SymplecticColumn { entries })
    }

    pub fn empty() -> Self {
        SymplecticColumn {
            entries: Vec::new(),
        }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl TryFrom<Vec<usize>> for SymplecticColumn {
    type Error = Error;
    fn try_from(entries: Vec<usize>) -> Result<Self, Error> {
        SymplecticColumn::try_new(entries)
    }
}

impl From<SymplecticColumn> for Vec<usize> {
    fn from(c: SymplecticColumn) -> Vec<usize> {
        c.entries
    }
}

impl fmt::Display for SymplecticColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for SymplecticColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The removal set of a strictly increasing column, computed in one
/// left-to-right pass. With 1-based position `i` and `c(k)` the number of
/// removed entries among the first `k`:
///
/// - odd `a_i` is removed iff `i < l`, `a_{i+1} = a_i + 1` and
///   `a_i < 2i − c(i−1)`;
/// - even `a_i` is removed iff `i > 1`, `a_i = a_{i−1} + 1` and
///   `a_i < 2i − c(i−2) − 1`.
pub fn removals(a: &[usize]) -> Vec<usize> {
    debug_assert!(a.windows(2).all(|w| w[0] < w[1]));
    let l = a.len();
    let mut removed = vec![false; l];
    // prefix[k] = removed count among the first k entries
    let mut prefix = vec![0usize; l + 1];
    for k in 0..l {
        let x = a[k];
        let take = if x % 2 == 1 {
            k + 1 < l && a[k + 1] == x + 1 && x < 2 * (k + 1) - prefix[k]
        } else {
            k > 0 && x == a[k - 1] + 1 && x < 2 * (k + 1) - prefix[k - 1] - 1
        };
        removed[k] = take;
        prefix[k + 1] = prefix[k] + usize::from(take);
    }
    a.iter()
        .zip(&removed)
        .filter(|(_, &r)| r)
        .map(|(&x, _)| x)
        .collect()
}

/// Deletes the removal set, producing a symplectic column.
pub fn reduce(a: &[usize]) -> SymplecticColumn {
    let rem = removals(a);
    let mut rem_iter = rem.iter().peekable();
    let kept: Vec<usize> = a
        .iter()
        .copied()
        .filter(|x| {
            if rem_iter.peek() == Some(&x) {
                rem_iter.next();
                false
            } else {
                true
            }
        })
        .collect();
    SymplecticColumn::try_new(kept).expect("reduction always yields a symplectic column")
}

/// Expands a symplectic column back to the unique strictly increasing column
/// of length `target_len` in `[1, two_n]` that reduces to it.
///
/// Between consecutive survivors (and below the first one) the expansion
/// inserts runs of removable partner pairs. Each slot has a maximal even
/// capacity fixed by the parities of its endpoints; the total insertion
/// budget `target_len − t₀` is distributed left to right, subject to two
/// extra constraints that keep the survivors unremovable:
///
/// - where the column contains a partner pair `(a_i, a_i + 1)`, the number of
///   insertions below `a_i` may not exceed `a_i − 2i`;
/// - a run directly after `a_i` is only removable once enough has been
///   inserted below `a_i` (`a_i ≤ 2i + R_i` for even `a_i`, strict for odd).
pub fn reduce_inverse(
    column: &SymplecticColumn,
    target_len: usize,
    two_n: usize,
) -> Result<Vec<usize>, Error> {
    let a = column.entries();
    let t0 = a.len();
    if a.last().copied().unwrap_or(0) > two_n
        || target_len < t0
        || target_len + t0 > two_n
        || !(target_len - t0).is_multiple_of(2)
    {
        return Err(Error::InvalidTarget {
            len: t0,
            target: target_len,
            bound: two_n,
        });
    }

    // slot capacities: gaps[0] before a_1, gaps[i] after a_i, gaps[t0] = tail
    let mut max_space = vec![0usize; t0 + 1];
    max_space[0] = if t0 == 0 {
        target_len
    } else if a[0].is_multiple_of(2) {
        a[0] - 2
    } else {
        a[0] - 1
    };
    for i in 1..t0 {
        let (lo, hi) = (a[i - 1], a[i]);
        let d = hi - lo;
        max_space[i] = match (lo % 2, hi % 2) {
            (0, 0) | (1, 1) => d - 2,
            (0, 1) => d - 1,
            (1, 0) if d >= 3 => d - 3,
            _ => 0,
        };
    }
    if t0 > 0 {
        let last = a[t0 - 1];
        max_space[t0] = if last.is_multiple_of(2) {
            two_n - last
        } else {
            two_n.saturating_sub(last + 1)
        };
    }

    // prefix caps from partner pairs among the survivors: insertions below
    // a_i are bounded by a_i − 2i (rounded down to even)
    let unbounded = usize::MAX;
    let mut cap_after = vec![unbounded; t0 + 1];
    for i in (0..t0).rev() {
        let mut cap = cap_after[i + 1];
        if a[i] % 2 == 1 && i + 1 < t0 && a[i + 1] == a[i] + 1 {
            let own = (a[i] - 2 * (i + 1)) & !1usize;
            cap = cap.min(own);
        }
        cap_after[i] = cap;
    }

    let mut budget = target_len - t0;
    let mut gaps = vec![0usize; t0 + 1];
    let mut inserted = 0usize;
    for slot in 0..=t0 {
        if budget == 0 {
            break;
        }
        // removability gate for a run directly after a_slot
        if slot > 0 {
            let prev = a[slot - 1];
            let threshold = 2 * slot + inserted;
            let open = if prev.is_multiple_of(2) {
                prev <= threshold
            } else {
                prev < threshold
            };
            if !open {
                continue;
            }
        }
        let mut allowed = max_space[slot].min(budget);
        if slot < t0 && cap_after[slot] != unbounded {
            allowed = allowed.min(cap_after[slot].saturating_sub(inserted));
        }
        allowed &= !1usize;
        gaps[slot] = allowed;
        budget -= allowed;
        if slot < t0 {
            inserted += allowed;
        }
    }
    if budget > 0 {
        return Err(Error::NegativeGap {
            column: a.to_vec(),
            target: target_len,
        });
    }

    let mut out = Vec::with_capacity(target_len);
    out.extend(1..=gaps[0]);
    for i in 0..t0 {
        out.push(a[i]);
        if a[i].is_multiple_of(2) {
            out.extend(a[i] + 1..=a[i] + gaps[i + 1]);
        } else {
            out.extend(a[i] + 2..=a[i] + 1 + gaps[i + 1]);
        }
    }
    debug_assert_eq!(out.len(), target_len);
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    debug_assert!(out.last().copied().unwrap_or(0) <= two_n);
    if reduce(&out).entries() != a {
        return Err(Error::NegativeGap {
            column: a.to_vec(),
            target: target_len,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symp(entries: &[usize]) -> SymplecticColumn {
        SymplecticColumn::try_new(entries.to_vec()).unwrap()
    }

    #[test]
    fn partner_is_the_parity_involution() {
        assert_eq!(partner(1), 2);
        assert_eq!(partner(2), 1);
        assert_eq!(partner(7), 8);
        for x in 1..=20 {
            assert_eq!(partner(partner(x)), x);
        }
    }

    #[test]
    fn removals_pinned_values() {
        for l in [2, 4, 6, 8] {
            let a: Vec<usize> = (1..=l).collect();
            assert_eq!(removals(&a), a, "initial run of even length {l}");
        }
        assert_eq!(removals(&[2, 6, 7, 11]), Vec::<usize>::new());
        assert_eq!(removals(&[]), Vec::<usize>::new());
    }

    #[test]
    fn reduce_pinned_values() {
        assert_eq!(reduce(&[1, 2, 3, 4]).entries(), &[] as &[usize]);
        assert_eq!(reduce(&[2, 6, 7, 11]).entries(), &[2, 6, 7, 11]);
        assert_eq!(
            reduce(&[1, 3, 4, 5, 8, 9, 10, 12]).entries(),
            &[1, 5, 8, 12]
        );
    }

    #[test]
    fn reduce_inverse_worked_examples() {
        assert_eq!(
            reduce_inverse(&symp(&[2, 6, 7, 11]), 8, 12).unwrap(),
            vec![2, 3, 4, 6, 7, 9, 10, 11]
        );
        assert_eq!(
            reduce_inverse(&symp(&[1, 5, 8, 12]), 8, 12).unwrap(),
            vec![1, 3, 4, 5, 8, 9, 10, 12]
        );
        assert_eq!(
            reduce_inverse(&SymplecticColumn::empty(), 4, 12).unwrap(),
            vec![1, 2, 3, 4]
        );
        assert_eq!(
            reduce_inverse(&symp(&[3]), 5, 6).unwrap(),
            vec![1, 2, 3, 5, 6]
        );
        assert_eq!(
            reduce_inverse(&symp(&[2]), 5, 6).unwrap(),
            vec![2, 3, 4, 5, 6]
        );
        assert_eq!(
            reduce_inverse(&symp(&[6]), 5, 6).unwrap(),
            vec![1, 2, 3, 4, 6]
        );
    }

    #[test]
    fn reduce_inverse_small_alphabet_columns() {
        assert_eq!(reduce_inverse(&symp(&[2]), 3, 4).unwrap(), vec![2, 3, 4]);
        assert_eq!(reduce_inverse(&symp(&[3]), 3, 4).unwrap(), vec![1, 2, 3]);
        assert_eq!(reduce_inverse(&symp(&[4]), 3, 4).unwrap(), vec![1, 2, 4]);
    }

    /// The naive per-slot maxima alone would expand these into columns whose
    /// reduction collapses too far; the prefix caps keep the partner pair
    /// intact.
    #[test]
    fn reduce_inverse_respects_partner_pair_caps() {
        assert_eq!(
            reduce_inverse(&symp(&[3, 4]), 4, 6).unwrap(),
            vec![3, 4, 5, 6]
        );
        assert_eq!(
            reduce_inverse(&symp(&[5, 6]), 6, 8).unwrap(),
            vec![1, 2, 5, 6, 7, 8]
        );
        assert_eq!(reduce_inverse(&symp(&[6]), 3, 6).unwrap(), vec![1, 2, 6]);
        assert_eq!(
            reduce_inverse(&symp(&[3, 4, 7, 8]), 8, 12).unwrap(),
            vec![3, 4, 7, 8, 9, 10, 11, 12]
        );
    }

    #[test]
    fn reduce_inverse_rejects_bad_targets() {
        let c = symp(&[2, 6]);
        // parity
        assert!(matches!(
            reduce_inverse(&c, 5, 12),
            Err(Error::InvalidTarget { .. })
        ));
        // too short
        assert!(matches!(
            reduce_inverse(&c, 1, 12),
            Err(Error::InvalidTarget { .. })
        ));
        // exceeds 2n − t0
        assert!(matches!(
            reduce_inverse(&c, 12, 12),
            Err(Error::InvalidTarget { .. })
        ));
    }

    fn all_increasing_columns(two_n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for x in 1..=two_n {
            let mut extended: Vec<Vec<usize>> = out
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    c.push(x);
                    c
                })
                .collect();
            out.append(&mut extended);
        }
        out
    }

    /// Differential oracle: enumerate every strictly increasing column in
    /// [1, 2n], reduce it, and require `reduce_inverse` to reproduce it from
    /// (reduction, length). Also checks the parity pairing of the removal
    /// set, injectivity of `reduce` at fixed length, and totality over all
    /// admissible (column, length) pairs.
    #[test]
    fn reduction_differential_oracle() {
        use std::collections::BTreeMap;
        for two_n in [2, 4, 6, 8, 10, 12] {
            let mut by_class: BTreeMap<(Vec<usize>, usize), Vec<usize>> = BTreeMap::new();
            for b in all_increasing_columns(two_n) {
                let rem = removals(&b);
                assert_eq!(rem.len() % 2, 0, "|rem| odd for {b:?}");
                for &x in &rem {
                    assert!(rem.contains(&partner(x)), "pairing fails for {b:?}");
                }
                let red = reduce(&b);
                let key = (red.entries().to_vec(), b.len());
                assert!(
                    by_class.insert(key, b.clone()).is_none(),
                    "reduce not injective at fixed length: {b:?}"
                );
            }
            for ((red, len), b) in &by_class {
                let col = SymplecticColumn::try_new(red.clone()).unwrap();
                let rebuilt = reduce_inverse(&col, *len, two_n)
                    .unwrap_or_else(|e| panic!("no expansion for ({red:?}, {len}) in [1,{two_n}]: {e}"));
                assert_eq!(&rebuilt, b, "wrong expansion for ({red:?}, {len})");
            }
            // totality: every admissible (symplectic column, length) pair is hit
            for key in by_class.keys() {
                let (red, _) = key;
                let t0 = red.len();
                let mut l = t0;
                while l + t0 <= two_n {
                    assert!(
                        by_class.contains_key(&(red.clone(), l)),
                        "admissible pair ({red:?}, {l}) missing at 2n={two_n}"
                    );
                    l += 2;
                }
            }
        }
    }
}
