//! k-weights of tableaux over the interleaved `u`/`v` alphabets, extremal
//! symplectic tableaux, generation of k-highest and k-lowest weight tableau
//! sets through the inverse map, and the two-row column-pattern classifier
//! for `n = 2`.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::inverse::lr_aii_inverse;
use crate::partition::Partition;
use crate::recording::enumerate_rec;
use crate::reduction::{reduce_inverse, SymplecticColumn};
use crate::insertion::prepend_column;
use crate::tableau::SkewTableau;

/// Which extremal symplectic tableau to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extremal {
    Highest,
    Lowest,
}

/// An integer weight vector of length `n` in the `ε̃` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KWeight(pub Vec<i64>);

impl KWeight {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Dominant means weakly decreasing and nonnegative, identifying the
    /// dominant weights with partitions of at most `n` parts.
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1]) && self.0.last().is_none_or(|&x| x >= 0)
    }

    /// The partition with the same coordinates, when dominant.
    pub fn to_partition(&self) -> Option<Partition> {
        if !self.is_dominant() {
            return None;
        }
        Partition::try_new(self.0.iter().map(|&x| x as usize).collect()).ok()
    }
}

impl std::fmt::Display for KWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The sequences `u_k = 2k − (1 + (−1)^k)/2` and `v_k = 2k − (1 + (−1)^{k+1})/2`
/// for `k = 1..=n`; disjoint, with union `[1, 2n]`.
pub fn uv_sequences(n: usize) -> (Vec<usize>, Vec<usize>) {
    let u = (1..=n).map(|k| if k % 2 == 0 { 2 * k - 1 } else { 2 * k }).collect();
    let v = (1..=n).map(|k| if k % 2 == 0 { 2 * k } else { 2 * k - 1 }).collect();
    (u, v)
}

/// The k-weight `(S[u_1] − S[v_1], …, S[u_n] − S[v_n])`.
pub fn k_weight(s: &SkewTableau, n: usize) -> KWeight {
    let (u, v) = uv_sequences(n);
    KWeight(
        (0..n)
            .map(|k| s.multiplicity(u[k]) as i64 - s.multiplicity(v[k]) as i64)
            .collect(),
    )
}

/// The symplectic tableau of shape `μ` whose row `i` is constant `u_i`
/// (highest) or `v_i` (lowest). Its k-weight is `μ` respectively `−μ`.
pub fn extremal_symplectic(mu: &Partition, n: usize, kind: Extremal) -> SkewTableau {
    assert!(mu.len() <= n, "extremal tableaux need μ with at most n parts");
    let (u, v) = uv_sequences(n);
    let values = match kind {
        Extremal::Highest => u,
        Extremal::Lowest => v,
    };
    let rows = mu
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| vec![values[i]; p])
        .collect();
    SkewTableau::straight(rows).expect("constant rows on a partition shape")
}

/// Builds a k-highest weight tableau over one vertical strip: expand the
/// selected `u`-values to a column of length `target_len` and prepend it to
/// the extremal highest tableau of `μ'`. The result has k-weight
/// `μ' + δ_r` where `r` lists the selected indices.
pub fn khw_vertical_strip(
    mu_prime: &Partition,
    u_subset: &[usize],
    target_len: usize,
    n: usize,
) -> Result<SkewTableau, Error> {
    let (u, _) = uv_sequences(n);
    let mut rows = Vec::with_capacity(u_subset.len());
    for &value in u_subset {
        match u.iter().position(|&x| x == value) {
            Some(idx) => rows.push(idx + 1),
            None => {
                return Err(Error::InvalidShape(format!(
                    "{value} is not a u-value for n = {n}"
                )))
            }
        }
    }
    // the selected rows must add onto μ' as an incidence vector: μ' + δ_r is
    // a partition with at most n parts
    let len = mu_prime.len().max(rows.last().copied().unwrap_or(0));
    let mu_parts: Vec<usize> = (1..=len)
        .map(|i| mu_prime.part(i) + usize::from(rows.contains(&i)))
        .collect();
    let mu = Partition::try_new(mu_parts).map_err(|_| {
        Error::InvalidShape(format!(
            "selected rows {rows:?} do not extend {mu_prime} to a partition"
        ))
    })?;
    if mu.len() > n {
        return Err(Error::InvalidShape(format!(
            "{mu} has more than n = {n} parts"
        )));
    }
    let column = SymplecticColumn::try_new(u_subset.to_vec())?;
    let expanded = reduce_inverse(&column, target_len, 2 * n)?;
    let base = extremal_symplectic(mu_prime, n, Extremal::Highest);
    prepend_column(&expanded, &base)
}

/// All k-highest (or k-lowest) weight tableaux of shape `λ`, each paired with
/// the dominant weight `μ` (up to sign) of its generating extremal tableau.
///
/// Runs the inverse map over every recording tableau of every admissible
/// inner shape; the resulting sets are disjoint across `μ`.
pub fn generate_khw_set(
    lambda: &Partition,
    n: usize,
    kind: Extremal,
) -> Result<Vec<(Partition, SkewTableau)>, Error> {
    let mut out: Vec<(Partition, SkewTableau)> = Vec::new();
    let mut seen: BTreeMap<Vec<Vec<usize>>, Partition> = BTreeMap::new();
    for mu in lambda.subpartitions(n) {
        let extremal = extremal_symplectic(&mu, n, kind);
        for q in enumerate_rec(lambda, &mu, n) {
            let t = lr_aii_inverse(&extremal, &q)?;
            if let Some(other) = seen.insert(t.rows().to_vec(), mu.clone()) {
                panic!("extremal images collide: μ = {mu} and μ = {other} give {t}");
            }
            out.push((mu.clone(), t));
        }
    }
    Ok(out)
}

/// Column multiplicities used by the `n = 2` pattern classifier.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ColumnCounts {
    /// Multiplicity of the column (1,2,3).
    pub x: usize,
    /// Multiplicity of the column (1,2,4).
    pub y: usize,
    /// Multiplicity of the column (2,3).
    pub z: usize,
    /// Multiplicity of the column (2).
    pub w: usize,
}

/// Outcome of the `n = 2` classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum N2Class {
    /// Columns from {(1,2,3,4), (1,2,3), (1,2,4), (1,2), (2,3), (2)}.
    Type1,
    /// Columns from {(1,2,3,4), (1,2,3), (1,2,4), (2,3,4), (2,3), (2)}.
    Type2,
    Reject,
}

/// Classifies a semistandard tableau over `[1,4]` against the two k-highest
/// weight column patterns. A tableau with a (1,2) column is of the first
/// type, one with a (2,3,4) column of the second; with neither marker both
/// patterns degenerate to the same column set and the tableau is reported as
/// the second type.
pub fn classify_n2(t: &SkewTableau) -> (N2Class, ColumnCounts) {
    let mut counts = ColumnCounts::default();
    let mut twelve = 0usize;
    let mut two_three_four = 0usize;
    let cols = t.outer().parts().first().copied().unwrap_or(0);
    for j in 1..=cols {
        let column: Vec<usize> = t.column(j).into_iter().map(|(_, e)| e).collect();
        match column.as_slice() {
            [1, 2, 3, 4] => {}
            [1, 2, 3] => counts.x += 1,
            [1, 2, 4] => counts.y += 1,
            [1, 2] => twelve += 1,
            [2, 3, 4] => two_three_four += 1,
            [2, 3] => counts.z += 1,
            [2] => counts.w += 1,
            _ => return (N2Class::Reject, counts),
        }
    }
    let class = match (twelve > 0, two_three_four > 0) {
        (true, true) => N2Class::Reject,
        (true, false) => N2Class::Type1,
        _ => N2Class::Type2,
    };
    (class, counts)
}
