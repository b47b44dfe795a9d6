//! Skew tableaux, reading words, and the Yamanouchi predicate.
//!
//! Inner cells are absent, not zero-valued: word extraction and weight
//! counting operate on present cells only.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::{Partition, SkewShape};

/// A filling of a skew shape by positive integers, one entry per cell of
/// `outer/inner`. Row `i` stores its present entries left to right.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    outer: Vec<usize>,
    inner: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<RawTableau> for SkewTableau {
    type Error = Error;
    fn try_from(raw: RawTableau) -> Result<Self, Error> {
        let shape = SkewShape::new(Partition::try_new(raw.outer)?, Partition::try_new(raw.inner)?)?;
        SkewTableau::new(shape, raw.rows)
    }
}

impl From<SkewTableau> for RawTableau {
    fn from(t: SkewTableau) -> RawTableau {
        RawTableau {
            outer: t.shape.outer().parts().to_vec(),
            inner: t.shape.inner().parts().to_vec(),
            rows: t.rows,
        }
    }
}

impl SkewTableau {
    /// Builds a tableau from per-row entry lists (present cells only).
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        let want = shape.outer().len();
        if rows.len() != want {
            return Err(Error::InvalidShape(format!(
                "shape {shape} has {want} rows, got {}",
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            let expect = shape.outer().part(i + 1) - shape.inner().part(i + 1);
            if row.len() != expect {
                return Err(Error::InvalidShape(format!(
                    "row {} of {shape} needs {expect} entries, got {}",
                    i + 1,
                    row.len()
                )));
            }
            if row.contains(&0) {
                return Err(Error::InvalidShape(format!(
                    "row {} contains a zero entry; inner cells are absent, not zero",
                    i + 1
                )));
            }
        }
        Ok(SkewTableau { shape, rows })
    }

    /// A straight-shape tableau from its rows.
    pub fn straight(rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        let outer = Partition::try_new(rows.iter().map(|r| r.len()).collect())?;
        Self::new(SkewShape::straight(outer), rows)
    }

    pub fn empty() -> Self {
        SkewTableau {
            shape: SkewShape::straight(Partition::empty()),
            rows: Vec::new(),
        }
    }

    /// A single strictly increasing column.
    pub fn from_column(entries: &[usize]) -> Result<Self, Error> {
        Self::straight(entries.iter().map(|&e| vec![e]).collect())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn outer(&self) -> &Partition {
        self.shape.outer()
    }

    pub fn inner(&self) -> &Partition {
        self.shape.inner()
    }

    pub fn is_empty(&self) -> bool {
        self.shape.size() == 0
    }

    /// Number of present cells.
    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Per-row entry lists, present cells only.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    /// Entries of row `i` (1-based), present cells only.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i - 1]
    }

    /// Entry at cell `(i, j)` in 1-based matrix coordinates, if present.
    pub fn entry(&self, i: usize, j: usize) -> Option<usize> {
        if i == 0 || i > self.rows.len() {
            return None;
        }
        let inner = self.shape.inner().part(i);
        if j <= inner || j > self.shape.outer().part(i) {
            return None;
        }
        Some(self.rows[i - 1][j - 1 - inner])
    }

    /// Entries of column `j` top to bottom, with their 1-based row indices.
    pub fn column(&self, j: usize) -> Vec<(usize, usize)> {
        (1..=self.rows.len())
            .filter_map(|i| self.entry(i, j).map(|e| (i, e)))
            .collect()
    }

    pub fn max_entry(&self) -> usize {
        self.rows
            .iter()
            .flat_map(|r| r.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Multiplicity of the letter `v`.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.rows
            .iter()
            .map(|r| r.iter().filter(|&&e| e == v).count())
            .sum()
    }

    /// The weight `(T[1], …, T[bound])`, zero-padded to `bound` (and extended
    /// past it if larger entries occur).
    pub fn weight(&self, bound: usize) -> Vec<usize> {
        let mut w = vec![0; bound.max(self.max_entry())];
        for row in &self.rows {
            for &e in row {
                w[e - 1] += 1;
            }
        }
        w
    }

    /// Weight as a partition if it is weakly decreasing.
    pub fn content(&self) -> Option<Partition> {
        Partition::try_new(self.weight(self.max_entry())).ok()
    }

    /// Rows weakly increase left to right and columns strictly increase top
    /// to bottom over present cells.
    pub fn is_semistandard(&self) -> bool {
        for row in &self.rows {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
        }
        for i in 1..self.rows.len() {
            let lo = self.shape.inner().part(i + 1) + 1;
            let hi = self.shape.outer().part(i + 1);
            for j in lo..=hi {
                if let (Some(a), Some(b)) = (self.entry(i, j), self.entry(i + 1, j)) {
                    if a >= b {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Reverse row word: rows top to bottom, each read right to left.
    pub fn reverse_row_word(&self) -> Word {
        Word(
            self.rows
                .iter()
                .flat_map(|r| r.iter().rev().copied())
                .collect(),
        )
    }

    /// Column word: columns left to right, each read bottom to top.
    pub fn column_word(&self) -> Word {
        let cols = self.shape.outer().part(1);
        let mut letters = Vec::with_capacity(self.size());
        for j in 1..=cols {
            let mut col: Vec<usize> = self.column(j).into_iter().map(|(_, e)| e).collect();
            col.reverse();
            letters.extend(col);
        }
        Word(letters)
    }

    /// Reverse column word: columns right to left, each read top to bottom.
    pub fn reverse_column_word(&self) -> Word {
        let mut w = self.column_word().0;
        w.reverse();
        Word(w)
    }
}

impl fmt::Display for SkewTableau {
    /// One line per row, entries space-separated, inner cells rendered as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "(empty)");
        }
        for i in 1..=self.rows.len() {
            if i > 1 {
                writeln!(f)?;
            }
            let inner = self.shape.inner().part(i);
            let mut first = true;
            for _ in 0..inner {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, ".")?;
                first = false;
            }
            for &e in &self.rows[i - 1] {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SkewTableau[{}]", self.shape)?;
        fmt::Display::fmt(self, f)
    }
}

/// A finite sequence of positive letters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self, bound: usize) -> Vec<usize> {
        let max = self.0.iter().copied().max().unwrap_or(0);
        let mut w = vec![0; bound.max(max)];
        for &l in &self.0 {
            w[l - 1] += 1;
        }
        w
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[{self}]")
    }
}

/// True iff every prefix weight is weakly decreasing.
pub fn is_yamanouchi(w: &Word) -> bool {
    let max = w.0.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; max + 1];
    for &l in &w.0 {
        counts[l] += 1;
        if l > 1 && counts[l] > counts[l - 1] {
            return false;
        }
    }
    true
}

/// The unique semistandard tableau of shape and weight `ν`: row `i` constant
/// equal to `i`.
pub fn yamanouchi_tableau(nu: &Partition) -> SkewTableau {
    let rows = nu
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| vec![i + 1; p])
        .collect();
    SkewTableau::straight(rows).expect("constant rows of a partition form a tableau")
}
