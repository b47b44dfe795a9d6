//! Schensted column insertion, the Pieri column product, literal column
//! prepending, and reverse column insertion along a slack row-index vector.
//!
//! All operations act on straight-shape semistandard tableaux.

use crate::error::Error;
use crate::tableau::SkewTableau;

/// Result of a reverse extraction: the values ejected from the first column,
/// sorted increasingly, and the tableau that remains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BumpExtraction {
    pub bumped: Vec<usize>,
    pub remainder: SkewTableau,
}

/// Column-inserts the letter `x` into a straight-shape tableau: in each
/// column, `x` replaces the topmost entry `≥ x`, which is inserted into the
/// next column; a value with nothing to displace is appended at the bottom.
pub fn column_insert(x: usize, tableau: &SkewTableau) -> SkewTableau {
    debug_assert!(tableau.inner().is_empty(), "insertion needs a straight shape");
    let mut rows = tableau.clone().into_rows();
    let mut val = x;
    let mut col = 0;
    loop {
        let mut placed = false;
        for row in rows.iter_mut() {
            if row.len() > col && row[col] >= val {
                std::mem::swap(&mut val, &mut row[col]);
                placed = true;
                break;
            }
        }
        if placed {
            col += 1;
            continue;
        }
        let height = rows.iter().take_while(|r| r.len() > col).count();
        if height == rows.len() {
            rows.push(vec![val]);
        } else {
            debug_assert_eq!(rows[height].len(), col, "bump path left the shape");
            rows[height].push(val);
        }
        break;
    }
    SkewTableau::straight(rows).expect("column insertion preserves the tableau shape")
}

/// The Pieri column product: inserts the entries of a strictly increasing
/// column, smallest first, into `tableau`. The resulting shape differs from
/// the input by a vertical strip of the column's size.
pub fn pieri_product(column: &[usize], tableau: &SkewTableau) -> SkewTableau {
    debug_assert!(column.windows(2).all(|w| w[0] < w[1]));
    column
        .iter()
        .fold(tableau.clone(), |t, &x| column_insert(x, &t))
}

/// Literal concatenation: `column` becomes the new first column and the
/// tableau shifts right by one. Requires the dominance condition
/// `column[i] ≤ T(i, 1)` and `column.len() ≥ ℓ(T)`; under it the result
/// agrees with [`pieri_product`] and stays semistandard.
pub fn prepend_column(column: &[usize], tableau: &SkewTableau) -> Result<SkewTableau, Error> {
    debug_assert!(tableau.inner().is_empty());
    let height = tableau.outer().len();
    if column.len() < height {
        return Err(Error::DominanceViolation {
            row: column.len() + 1,
            value: 0,
            existing: tableau.entry(column.len() + 1, 1).unwrap_or(0),
        });
    }
    if !column.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::NotSymplectic(column.to_vec()));
    }
    for (i, &c) in column.iter().take(height).enumerate() {
        let existing = tableau.entry(i + 1, 1).expect("row exists below ℓ(T)");
        if c > existing {
            return Err(Error::DominanceViolation {
                row: i + 1,
                value: c,
                existing,
            });
        }
    }
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(column.len());
    for (i, &c) in column.iter().enumerate() {
        let mut row = vec![c];
        if i < height {
            row.extend_from_slice(tableau.row(i + 1));
        }
        rows.push(row);
    }
    SkewTableau::straight(rows)
}

/// Reverse column insertion along the rows `r = (r_1 < … < r_k)`: for each
/// row from the largest to the smallest, the entry in the rightmost cell of
/// that row travels left, replacing in every column the bottom-most entry
/// `≤` itself; the value ejected from column 1 is collected.
///
/// Errors with [`Error::NotACorner`] if some starting cell is not a removable
/// corner when its turn comes.
pub fn reverse_extract(tableau: &SkewTableau, r: &[usize]) -> Result<BumpExtraction, Error> {
    debug_assert!(tableau.inner().is_empty());
    if !r.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidShape(format!(
            "slack row indices {r:?} are not strictly increasing"
        )));
    }
    // validates that every listed row ends in a removable corner
    tableau.outer().minus_rows(r)?;

    let mut rows = tableau.clone().into_rows();
    let mut bumped = Vec::with_capacity(r.len());
    for &row in r.iter().rev() {
        bumped.push(reverse_bump(&mut rows, row));
    }
    bumped.sort_unstable();
    let remainder = SkewTableau::straight(rows).expect("extraction preserves the shape");
    Ok(BumpExtraction { bumped, remainder })
}

fn reverse_bump(rows: &mut Vec<Vec<usize>>, row: usize) -> usize {
    let start_col = rows[row - 1].len() - 1;
    let mut val = rows[row - 1].pop().expect("corner checked above");
    while rows.last().is_some_and(|r| r.is_empty()) {
        rows.pop();
    }
    for col in (0..start_col).rev() {
        let target = (0..rows.len())
            .rev()
            .find(|&i| rows[i].len() > col && rows[i][col] <= val)
            .expect("semistandard rows guarantee a landing entry to the left");
        std::mem::swap(&mut val, &mut rows[target][col]);
    }
    val
}
