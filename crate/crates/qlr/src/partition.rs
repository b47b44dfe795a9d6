//! Partitions and skew shapes.
//!
//! Partitions are stored canonically, without trailing zeros. Operations that
//! need zero-padded vectors (incidence vectors, complements) pad explicitly at
//! the call site. Cell coordinates are 1-based matrix style throughout.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A weakly decreasing sequence of positive integers, identified with its
/// Young diagram.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, trimming trailing zeros.
    ///
    /// Panics if the parts are not weakly decreasing; use [`Partition::try_new`]
    /// for unvalidated input.
    pub fn new(parts: impl Into<Vec<usize>>) -> Self {
        Self::try_new(parts.into()).expect("parts must be weakly decreasing")
    }

    pub fn try_new(mut parts: Vec<usize>) -> Result<Self, Error> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-column shape `(1^m)`.
    pub fn column(m: usize) -> Self {
        Partition { parts: vec![1; m] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 1-based, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        debug_assert!(i >= 1, "parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Componentwise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i + 1) >= p)
    }

    /// The transpose `γ^t` with `γ^t_j = #{i : γ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// True iff `γ_{2i-1} = γ_{2i}` for all `i`, equivalently every column of
    /// the diagram has even length.
    pub fn is_even(&self) -> bool {
        self.parts.chunks(2).all(|c| c.len() == 2 && c[0] == c[1])
    }

    /// Complement inside a `rows × cols` rectangle:
    /// `γ^∨_i = cols − γ_{rows+1−i}`. Requires the partition to fit.
    pub fn complement(&self, rows: usize, cols: usize) -> Result<Partition, Error> {
        if self.len() > rows || self.part(1) > cols {
            return Err(Error::InvalidShape(format!(
                "partition {self} does not fit in a {rows}x{cols} rectangle"
            )));
        }
        let parts: Vec<usize> = (0..rows).map(|i| cols - self.part(rows - i)).collect();
        Partition::try_new(parts)
    }

    /// Adds a full column of length `m`: each of the first `m` rows gains one
    /// cell. Requires `m ≥ len()`.
    pub fn plus_column(&self, m: usize) -> Result<Partition, Error> {
        if m < self.len() {
            return Err(Error::InvalidShape(format!(
                "cannot add a column of length {m} to {self} with {} rows",
                self.len()
            )));
        }
        let parts = (1..=m).map(|i| self.part(i) + 1).collect();
        Partition::try_new(parts)
    }

    /// Removes one cell from each row listed in `rows` (1-based, strictly
    /// increasing). Errors with [`Error::NotACorner`] on the first row whose
    /// removal would break the partition shape.
    pub fn minus_rows(&self, rows: &[usize]) -> Result<Partition, Error> {
        if !rows.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "row indices {rows:?} are not strictly increasing"
            )));
        }
        let in_rows = |r: usize| rows.contains(&r);
        for &r in rows {
            if r == 0 || self.part(r) == 0 {
                return Err(Error::NotACorner {
                    row: r,
                    col: self.part(r.max(1)),
                });
            }
            let below = self.part(r + 1).saturating_sub(usize::from(in_rows(r + 1)));
            if self.part(r) - 1 < below {
                return Err(Error::NotACorner {
                    row: r,
                    col: self.part(r),
                });
            }
        }
        let mut parts = self.parts.clone();
        for &r in rows {
            parts[r - 1] -= 1;
        }
        Partition::try_new(parts)
    }

    /// All sub-partitions `μ ⊆ self` with at most `max_len` parts, in
    /// ascending lexicographic order.
    pub fn subpartitions(&self, max_len: usize) -> Vec<Partition> {
        fn rec(
            lambda: &Partition,
            max_len: usize,
            row: usize,
            prev: usize,
            stack: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            out.push(Partition::try_new(stack.clone()).expect("stack is weakly decreasing"));
            if row > max_len {
                return;
            }
            for p in 1..=prev.min(lambda.part(row)) {
                stack.push(p);
                rec(lambda, max_len, row + 1, p, stack, out);
                stack.pop();
            }
        }
        let mut out = Vec::new();
        let mut stack = Vec::new();
        rec(self, max_len, 1, usize::MAX, &mut stack, &mut out);
        out.sort();
        out
    }

    /// All partitions of every size in `0..=max_size` with at most `max_len`
    /// parts, ascending lexicographic order.
    pub fn all_up_to(max_size: usize, max_len: usize) -> Vec<Partition> {
        fn rec(
            remaining: usize,
            max_len: usize,
            prev: usize,
            stack: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            out.push(Partition::try_new(stack.clone()).expect("weakly decreasing"));
            if stack.len() == max_len {
                return;
            }
            for p in 1..=prev.min(remaining) {
                stack.push(p);
                rec(remaining - p, max_len, p, stack, out);
                stack.pop();
            }
        }
        let mut out = Vec::new();
        let mut stack = Vec::new();
        rec(max_size, max_len, usize::MAX, &mut stack, &mut out);
        out.sort();
        out
    }
}

/// True iff `inner ⊆ outer` and `outer/inner` has at most one cell per row.
pub fn is_vertical_strip(inner: &Partition, outer: &Partition) -> bool {
    let rows = outer.len().max(inner.len());
    (1..=rows).all(|i| {
        let o = outer.part(i);
        let n = inner.part(i);
        n <= o && o - n <= 1
    })
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self, Error> {
        Partition::try_new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

/// A skew shape `outer/inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, Error> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!(
                "inner {inner} is not contained in outer {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of cells strictly between inner and outer.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells `(i, j)` in 1-based matrix coordinates, row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.outer.len())
            .flat_map(move |i| (self.inner.part(i) + 1..=self.outer.part(i)).map(move |j| (i, j)))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
