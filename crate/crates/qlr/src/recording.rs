//! LR-Sundaram tableaux, their strip decompositions, recording tableaux, the
//! relabeling bijection and the orthogonal symmetry map, plus enumeration of
//! all recording tableaux of a skew shape.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::{is_vertical_strip, Partition, SkewShape};
use crate::tableau::{is_yamanouchi, SkewTableau};

/// True iff `t` is an `n`-symplectic Littlewood-Richardson (LR-Sundaram)
/// tableau: semistandard over `[1, 2n]`, reverse column word Yamanouchi,
/// weight an even partition, and first-column condition `T(n+i, 1) ≥ 2i`.
pub fn is_lrs(t: &SkewTableau, n: usize) -> bool {
    if t.outer().len() > 2 * n || t.inner().len() > n {
        return false;
    }
    if t.max_entry() > 2 * n || !t.is_semistandard() {
        return false;
    }
    if !is_yamanouchi(&t.reverse_column_word()) {
        return false;
    }
    let weight = t.weight(t.max_entry());
    match Partition::try_new(weight) {
        Ok(w) if w.is_even() => {}
        _ => return false,
    }
    for i in 1.. {
        match t.entry(n + i, 1) {
            Some(e) if e < 2 * i => return false,
            Some(_) => {}
            None if n + i > t.outer().len() => break,
            None => {}
        }
    }
    true
}

/// A validated LR-Sundaram tableau together with its alphabet half-bound.
#[derive(Clone, PartialEq, Eq)]
pub struct LrsTableau {
    tableau: SkewTableau,
    n: usize,
}

impl LrsTableau {
    pub fn new(tableau: SkewTableau, n: usize) -> Result<Self, Error> {
        if !is_lrs(&tableau, n) {
            return Err(Error::MalformedLrs(format!(
                "filling of {} fails an LR-Sundaram condition at n = {n}",
                tableau.shape()
            )));
        }
        Ok(LrsTableau { tableau, n })
    }

    pub fn tableau(&self) -> &SkewTableau {
        &self.tableau
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The weight, which for an LR-Sundaram tableau is an even partition.
    pub fn content(&self) -> Partition {
        self.tableau
            .content()
            .expect("LRS weight is weakly decreasing")
    }

    /// Decomposes the skew shape into nested vertical strips by erasing, from
    /// NE to SW, the rightmost cells filled `1, 2, …, ν^t_k` for each strip.
    pub fn strip_decomposition(&self) -> Result<StripChain, Error> {
        let nu = self.content();
        let strips = nu.conjugate();
        let n_strips = nu.parts().first().copied().unwrap_or(0);
        let mut remaining: BTreeMap<(usize, usize), usize> = self
            .tableau
            .shape()
            .cells()
            .map(|(i, j)| ((i, j), self.tableau.entry(i, j).expect("cell present")))
            .collect();
        let mut shapes = vec![self.tableau.outer().clone()];
        for k in 1..=n_strips {
            let size = strips.part(k);
            let mut erased_rows = Vec::with_capacity(size);
            for v in 1..=size {
                let cell = remaining
                    .iter()
                    .filter(|(_, &e)| e == v)
                    .map(|(&c, _)| c)
                    .max_by_key(|&(_, j)| j)
                    .ok_or_else(|| {
                        Error::MalformedLrs(format!("strip {k} cannot erase a cell filled {v}"))
                    })?;
                remaining.remove(&cell);
                erased_rows.push(cell.0);
            }
            if !erased_rows.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::MalformedLrs(format!(
                    "strip {k} erasure is not top-to-bottom"
                )));
            }
            let prev = shapes.last().expect("chain is nonempty");
            let next = prev.minus_rows(&erased_rows).map_err(|_| {
                Error::MalformedLrs(format!("strip {k} erasure leaves a non-partition shape"))
            })?;
            if !is_vertical_strip(&next, prev) {
                return Err(Error::MalformedLrs(format!("strip {k} is not vertical")));
            }
            shapes.push(next);
        }
        if shapes.last() != Some(self.tableau.inner()) {
            return Err(Error::MalformedLrs(
                "erasure does not terminate at the inner shape".into(),
            ));
        }
        StripChain::try_new(shapes)
    }

    /// The relabeling bijection: strip `J_i` becomes constant `i`; the result
    /// is the recording tableau of this LR-Sundaram tableau.
    pub fn lozenge(&self) -> RecordingTableau {
        let chain = self
            .strip_decomposition()
            .expect("valid LRS tableaux decompose into strips");
        chain
            .to_recording(self.n)
            .expect("relabeled strips form a recording tableau")
    }

    /// The LR orthogonal symmetry map: rotate the recording tableau by the
    /// position map `(i, j) ↦ (λ_1 + 1 − j, ℓ(λ) + 1 − i)` onto the shape
    /// `(μ^∨)^t/(λ^∨)^t`, complements taken in the `ℓ(λ) × λ_1` rectangle.
    pub fn blacklozenge(&self) -> SkewTableau {
        let lambda = self.tableau.outer();
        let mu = self.tableau.inner();
        let a = lambda.len();
        let b = lambda.parts().first().copied().unwrap_or(0);
        if a == 0 {
            return SkewTableau::empty();
        }
        let q = self.lozenge();
        let outer = mu
            .complement(a, b)
            .expect("inner shape fits the bounding rectangle")
            .conjugate();
        let inner = lambda
            .complement(a, b)
            .expect("outer shape fits its own rectangle")
            .conjugate();
        let shape = SkewShape::new(outer, inner).expect("complements nest");
        let mut entries: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (i, j) in q.filling().shape().cells() {
            let e = q.filling().entry(i, j).expect("cell present");
            entries.insert((b + 1 - j, a + 1 - i), e);
        }
        let rows = (1..=shape.outer().len())
            .map(|i| {
                (shape.inner().part(i) + 1..=shape.outer().part(i))
                    .map(|j| *entries.get(&(i, j)).expect("rotation covers the shape"))
                    .collect()
            })
            .collect();
        SkewTableau::new(shape, rows).expect("rotated filling matches the rotated shape")
    }
}

impl std::fmt::Debug for LrsTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LrsTableau[n={}]\n{}", self.n, self.tableau)
    }
}

/// Nested partitions `λ = μ^{(0)} ⊃ μ^{(1)} ⊃ … ⊃ μ^{(N)} = μ` whose steps
/// are vertical strips of even size at least 2, weakly decreasing in size.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StripChain {
    shapes: Vec<Partition>,
}

impl StripChain {
    pub fn try_new(shapes: Vec<Partition>) -> Result<Self, Error> {
        if shapes.is_empty() {
            return Err(Error::InvalidShape("a strip chain needs a shape".into()));
        }
        let mut prev_size = usize::MAX;
        for w in shapes.windows(2) {
            if !is_vertical_strip(&w[1], &w[0]) {
                return Err(Error::InvalidShape(format!(
                    "{}/{} is not a vertical strip",
                    w[0], w[1]
                )));
            }
            let size = w[0].size() - w[1].size();
            if size < 2 || size % 2 != 0 || size > prev_size {
                return Err(Error::InvalidShape(format!(
                    "strip sizes must be even, at least 2, and weakly decreasing; got {size}"
                )));
            }
            prev_size = size;
        }
        Ok(StripChain { shapes })
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn outer(&self) -> &Partition {
        &self.shapes[0]
    }

    pub fn inner(&self) -> &Partition {
        self.shapes.last().expect("chain is nonempty")
    }

    pub fn num_strips(&self) -> usize {
        self.shapes.len() - 1
    }

    /// Size of strip `i` (1-based).
    pub fn strip_size(&self, i: usize) -> usize {
        self.shapes[i - 1].size() - self.shapes[i].size()
    }

    /// Cells of strip `i` = `μ^{(i-1)}/μ^{(i)}`, top to bottom.
    pub fn strip_cells(&self, i: usize) -> Vec<(usize, usize)> {
        let outer = &self.shapes[i - 1];
        let inner = &self.shapes[i];
        (1..=outer.len())
            .filter(|&r| outer.part(r) > inner.part(r))
            .map(|r| (r, outer.part(r)))
            .collect()
    }

    /// Labels strip `i` with the constant `i` and validates the result as a
    /// recording tableau for the bound `n`.
    pub fn to_recording(&self, n: usize) -> Result<RecordingTableau, Error> {
        let shape = SkewShape::new(self.outer().clone(), self.inner().clone())?;
        let mut entries: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for i in 1..=self.num_strips() {
            for cell in self.strip_cells(i) {
                entries.insert(cell, i);
            }
        }
        let rows = (1..=shape.outer().len())
            .map(|r| {
                (shape.inner().part(r) + 1..=shape.outer().part(r))
                    .map(|c| *entries.get(&(r, c)).expect("strips tile the skew shape"))
                    .collect()
            })
            .collect();
        RecordingTableau::new(SkewTableau::new(shape, rows)?, n)
    }
}

/// R1–R5 for a filling of a skew shape:
///
/// - R1: rows strictly decrease left to right;
/// - R2: columns weakly decrease top to bottom;
/// - R3: every multiplicity `Q[k]` is even;
/// - R4: `Q[k] ≥ 2(ℓ(μ^{(k-1)}) − n)` with `μ^{(k-1)}` rebuilt from the cells
///   holding entries `≥ k`;
/// - R5: `Q_{≤r}[k+1] ≤ Q_{≤r}[k]` for every row prefix.
pub fn is_recording(q: &SkewTableau, n: usize) -> bool {
    for row in q.rows() {
        if row.windows(2).any(|w| w[0] <= w[1]) {
            return false; // R1
        }
        if row.contains(&0) {
            return false;
        }
    }
    let rows = q.outer().len();
    for i in 1..rows {
        for j in q.inner().part(i + 1) + 1..=q.outer().part(i + 1) {
            if let (Some(above), Some(below)) = (q.entry(i, j), q.entry(i + 1, j)) {
                if above < below {
                    return false; // R2
                }
            }
        }
    }
    let top = q.max_entry();
    for k in 1..=top {
        if !q.multiplicity(k).is_multiple_of(2) {
            return false; // R3
        }
    }
    for k in 1..=top {
        let level = nested_shape(q, k);
        let len_prev = level.len();
        if 2 * len_prev > 2 * n && q.multiplicity(k) < 2 * (len_prev - n) {
            return false; // R4
        }
    }
    for r in 1..=rows {
        let mut counts = vec![0usize; top + 2];
        for i in 1..=r {
            for &e in q.row(i) {
                counts[e] += 1;
            }
        }
        for k in 1..=top {
            if counts[k + 1] > counts[k] {
                return false; // R5
            }
        }
    }
    true
}

/// The shape `μ^{(k-1)}` whose diagram is `D(μ) ∪ {cells with entry ≥ k}`.
fn nested_shape(q: &SkewTableau, k: usize) -> Partition {
    let parts: Vec<usize> = (1..=q.outer().len())
        .map(|i| {
            let extra = q.row(i).iter().filter(|&&e| e >= k).count();
            q.inner().part(i) + extra
        })
        .collect();
    Partition::try_new(parts).expect("R2 makes every level a partition")
}

/// A validated recording tableau.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordingTableau {
    filling: SkewTableau,
    n: usize,
}

impl RecordingTableau {
    pub fn new(filling: SkewTableau, n: usize) -> Result<Self, Error> {
        if filling.outer().len() > 2 * n {
            return Err(Error::MalformedRecording(format!(
                "outer shape {} has more than 2n = {} rows",
                filling.outer(),
                2 * n
            )));
        }
        if filling.inner().len() > n {
            return Err(Error::MalformedRecording(format!(
                "inner shape {} has more than n = {n} rows",
                filling.inner()
            )));
        }
        if !is_recording(&filling, n) {
            return Err(Error::MalformedRecording(format!(
                "filling of {} violates a recording condition at n = {n}",
                filling.shape()
            )));
        }
        Ok(RecordingTableau { filling, n })
    }

    /// The empty recording tableau of shape `μ/μ`.
    pub fn empty_on(mu: Partition, n: usize) -> Result<Self, Error> {
        let rows = vec![Vec::new(); mu.len()];
        let shape = SkewShape::new(mu.clone(), mu)?;
        Self::new(SkewTableau::new(shape, rows)?, n)
    }

    /// Builds a recording tableau from its inner shape and per-strip data
    /// `(slack row-index vector, strip size)`, listed in processing order:
    /// the innermost strip `N` first.
    pub fn from_strips(
        mu: &Partition,
        strips: &[(Vec<usize>, usize)],
        n: usize,
    ) -> Result<Self, Error> {
        let mut shapes = vec![mu.clone()];
        for (r, size) in strips {
            let current = shapes.last().expect("nonempty").clone();
            let reduced = current.minus_rows(r)?;
            let target = size + r.len();
            let next = reduced.plus_column(target)?;
            shapes.push(next);
        }
        shapes.reverse();
        StripChain::try_new(shapes)?.to_recording(n)
    }

    pub fn filling(&self) -> &SkewTableau {
        &self.filling
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn outer(&self) -> &Partition {
        self.filling.outer()
    }

    pub fn inner(&self) -> &Partition {
        self.filling.inner()
    }

    /// Number of strips (the largest entry).
    pub fn num_strips(&self) -> usize {
        self.filling.max_entry()
    }

    /// `Q[k]`, the multiplicity of `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.filling.multiplicity(k)
    }

    /// The nested chain `λ = μ^{(0)} ⊃ … ⊃ μ^{(N)} = μ`, rebuilt from the
    /// filling.
    pub fn strip_chain(&self) -> StripChain {
        let mut shapes = vec![self.outer().clone()];
        for k in 2..=self.num_strips() {
            shapes.push(nested_shape(&self.filling, k));
        }
        if self.num_strips() > 0 {
            shapes.push(self.inner().clone());
        }
        StripChain::try_new(shapes).expect("a valid recording tableau has a valid chain")
    }

    /// Inverse of the relabeling bijection: strip `k` is refilled top to
    /// bottom with `1, 2, …, Q[k]`.
    pub fn lozenge_inverse(&self) -> LrsTableau {
        let chain = self.strip_chain();
        let mut entries: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for k in 1..=chain.num_strips() {
            for (v, cell) in chain.strip_cells(k).into_iter().enumerate() {
                entries.insert(cell, v + 1);
            }
        }
        let shape = self.filling.shape().clone();
        let rows = (1..=shape.outer().len())
            .map(|r| {
                (shape.inner().part(r) + 1..=shape.outer().part(r))
                    .map(|c| *entries.get(&(r, c)).expect("strips tile the skew shape"))
                    .collect()
            })
            .collect();
        let tableau = SkewTableau::new(shape, rows).expect("strip refill matches the shape");
        LrsTableau::new(tableau, self.n).expect("strip refill is an LR-Sundaram tableau")
    }
}

impl std::fmt::Debug for RecordingTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RecordingTableau[n={}]\n{}", self.n, self.filling)
    }
}

/// All recording tableaux of shape `λ/μ` for the bound `n`, generated as
/// chains of even vertical strips filtered by the slack inequality and R5,
/// in ascending lexicographic order of their row readings.
pub fn enumerate_rec(lambda: &Partition, mu: &Partition, n: usize) -> Vec<RecordingTableau> {
    if !lambda.contains(mu) || mu.len() > n || lambda.len() > 2 * n {
        return Vec::new();
    }
    if !(lambda.size() - mu.size()).is_multiple_of(2) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut chain = vec![lambda.clone()];
    descend(&mut chain, mu, n, usize::MAX, &mut out);
    let mut recs: Vec<RecordingTableau> = out
        .into_iter()
        .filter_map(|shapes| {
            StripChain::try_new(shapes)
                .ok()
                .and_then(|c| c.to_recording(n).ok())
        })
        .collect();
    recs.sort_by(|a, b| a.filling().rows().cmp(b.filling().rows()));
    recs
}

fn descend(
    chain: &mut Vec<Partition>,
    mu: &Partition,
    n: usize,
    max_size: usize,
    out: &mut Vec<Vec<Partition>>,
) {
    let current = chain.last().expect("nonempty").clone();
    if &current == mu {
        out.push(chain.clone());
        return;
    }
    let remaining = current.size() - mu.size();
    let mut size = remaining.min(max_size);
    if size % 2 == 1 {
        size -= 1;
    }
    while size >= 2 {
        for next in vertical_substrips(&current, mu, size) {
            // slack inequality: 2n ≥ strip size + twice its slack
            let in_range = next
                .parts()
                .iter()
                .enumerate()
                .filter(|&(i, &p)| current.part(i + 1) > p)
                .count();
            let t0 = next.len() - in_range;
            if 2 * n >= size + 2 * t0 {
                chain.push(next);
                descend(chain, mu, n, size, out);
                chain.pop();
            }
        }
        size -= 2;
    }
}

/// All `σ` with `μ ⊆ σ ⊆ outer`, `outer/σ` a vertical strip of `size` cells.
fn vertical_substrips(outer: &Partition, mu: &Partition, size: usize) -> Vec<Partition> {
    fn rec(
        outer: &Partition,
        mu: &Partition,
        row: usize,
        left: usize,
        prev: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > outer.len() {
            if left == 0 {
                out.push(
                    Partition::try_new(stack.clone()).expect("stack built weakly decreasing"),
                );
            }
            return;
        }
        let rows_left = outer.len() - row + 1;
        if left > rows_left {
            return;
        }
        let full = outer.part(row);
        for take in [0usize, 1] {
            if take > left || take > full {
                continue;
            }
            let part = full - take;
            if part > prev || part < mu.part(row) {
                continue;
            }
            stack.push(part);
            rec(outer, mu, row + 1, left - take, part, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    rec(outer, mu, 1, size, usize::MAX, &mut stack, &mut out);
    out
}

/// Reference enumeration of recording tableaux by filtering all fillings of
/// the skew shape through R1–R5. Slower than [`enumerate_rec`]; used to
/// cross-check the chain generator.
pub fn enumerate_rec_filtered(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> Vec<RecordingTableau> {
    if !lambda.contains(mu) || mu.len() > n || lambda.len() > 2 * n {
        return Vec::new();
    }
    let total = lambda.size() - mu.size();
    if total == 0 {
        return vec![RecordingTableau::empty_on(lambda.clone(), n).expect("empty shape is valid")];
    }
    if !total.is_multiple_of(2) {
        return Vec::new();
    }
    let max_entry = total / 2;
    let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("containment checked");
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut rows: Vec<Vec<usize>> = (1..=lambda.len())
        .map(|i| vec![0; lambda.part(i) - mu.part(i)])
        .collect();
    let mut out = Vec::new();
    fill(&shape, &cells, 0, max_entry, &mut rows, &mut out, n);
    out.sort_by(|a: &RecordingTableau, b| a.filling().rows().cmp(b.filling().rows()));
    out
}

fn fill(
    shape: &SkewShape,
    cells: &[(usize, usize)],
    idx: usize,
    max_entry: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<RecordingTableau>,
    n: usize,
) {
    if idx == cells.len() {
        let filling = SkewTableau::new(shape.clone(), rows.clone()).expect("shape matches");
        if let Ok(rec) = RecordingTableau::new(filling, n) {
            out.push(rec);
        }
        return;
    }
    let (i, j) = cells[idx];
    let inner = shape.inner().part(i);
    // R1 bound from the left neighbor, R2 bound from the cell above
    let left = if j > inner + 1 {
        rows[i - 1][j - 1 - inner - 1]
    } else {
        usize::MAX
    };
    let above = if i > 1 && j > shape.inner().part(i - 1) && j <= shape.outer().part(i - 1) {
        rows[i - 2][j - 1 - shape.inner().part(i - 1)]
    } else {
        usize::MAX
    };
    let hi = max_entry.min(left.saturating_sub(1)).min(above);
    for v in 1..=hi {
        rows[i - 1][j - 1 - inner] = v;
        fill(shape, cells, idx + 1, max_entry, rows, out, n);
    }
    rows[i - 1][j - 1 - inner] = 0;
}
