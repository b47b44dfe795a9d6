//! Brute-force enumerators and the bijectivity audit: ground truth for the
//! constructive algorithms at desk scale.
//!
//! An audit enumerates every semistandard tableau of a shape, every
//! (symplectic tableau, recording tableau) pair over its admissible inner
//! shapes, pushes each pair through the inverse map, and checks injectivity
//! and exact coverage. Audit tables can be cached on disk; a corrupt cache
//! entry is detected by checksum and rebuilt, never trusted.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::inverse::lr_aii_inverse;
use crate::partition::{Partition, SkewShape};
use crate::recording::{enumerate_rec, RecordingTableau};
use crate::tableau::SkewTableau;

/// All semistandard fillings of a skew shape with entries in `[1, bound]`,
/// in lexicographic order of their row readings.
pub fn enumerate_sst(shape: &SkewShape, bound: usize) -> Vec<SkewTableau> {
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut rows: Vec<Vec<usize>> = (1..=shape.outer().len())
        .map(|i| vec![0; shape.outer().part(i) - shape.inner().part(i)])
        .collect();
    let mut out = Vec::new();
    fill_sst(shape, &cells, 0, bound, &mut rows, &mut out);
    out
}

fn fill_sst(
    shape: &SkewShape,
    cells: &[(usize, usize)],
    idx: usize,
    bound: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<SkewTableau>,
) {
    if idx == cells.len() {
        out.push(
            SkewTableau::new(shape.clone(), rows.clone()).expect("filled shape is consistent"),
        );
        return;
    }
    let (i, j) = cells[idx];
    let inner = shape.inner().part(i);
    let lo_row = if j > inner + 1 {
        rows[i - 1][j - 1 - inner - 1]
    } else {
        1
    };
    let above_present =
        i > 1 && j > shape.inner().part(i - 1) && j <= shape.outer().part(i - 1);
    let lo = if above_present {
        lo_row.max(rows[i - 2][j - 1 - shape.inner().part(i - 1)] + 1)
    } else {
        lo_row
    };
    for v in lo..=bound {
        rows[i - 1][j - 1 - inner] = v;
        fill_sst(shape, cells, idx + 1, bound, rows, out);
    }
    rows[i - 1][j - 1 - inner] = 0;
}

/// All symplectic tableaux of straight shape `μ` with entries in `[1, 2n]`:
/// semistandard with first-column condition `S(k, 1) ≥ 2k − 1`. Empty when
/// `μ` has more than `n` parts.
pub fn enumerate_spt(mu: &Partition, n: usize) -> Vec<SkewTableau> {
    if mu.len() > n {
        return Vec::new();
    }
    enumerate_sst(&SkewShape::straight(mu.clone()), 2 * n)
        .into_iter()
        .filter(|t| {
            (1..=mu.len()).all(|k| t.entry(k, 1).is_some_and(|e| e >= 2 * k - 1))
        })
        .collect()
}

/// Counts and outcome of a bijectivity audit over one outer shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub lambda: Partition,
    pub n: usize,
    pub sst_count: usize,
    /// Per inner shape: (μ, number of symplectic tableaux, number of
    /// recording tableaux).
    pub per_mu: Vec<(Partition, usize, usize)>,
    /// Number of pairs pushed through the inverse map.
    pub image_count: usize,
    pub injective: bool,
    pub covered: bool,
    /// Inverse-map failures, empty on a clean audit.
    pub errors: Vec<String>,
}

/// An audit report together with the full pair table, usable as a lookup
/// oracle for the forward direction.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AuditTable {
    pub report: AuditReport,
    /// Rows of each image tableau, paired with its preimage.
    pairs: Vec<(Vec<Vec<usize>>, Partition, SkewTableau, RecordingTableau)>,
}

impl AuditTable {
    pub fn build(lambda: &Partition, n: usize) -> AuditTable {
        let sst = enumerate_sst(&SkewShape::straight(lambda.clone()), 2 * n);
        let sst_keys: Vec<Vec<Vec<usize>>> = sst.iter().map(|t| t.rows().to_vec()).collect();
        let mut per_mu = Vec::new();
        let mut pairs = Vec::new();
        let mut errors = Vec::new();
        for mu in lambda.subpartitions(n) {
            let spt = enumerate_spt(&mu, n);
            let recs = enumerate_rec(lambda, &mu, n);
            per_mu.push((mu.clone(), spt.len(), recs.len()));
            for s in &spt {
                for q in &recs {
                    match lr_aii_inverse(s, q) {
                        Ok(t) => {
                            pairs.push((t.rows().to_vec(), mu.clone(), s.clone(), q.clone()))
                        }
                        Err(e) => errors.push(format!(
                            "inverse failed for S of shape {mu} with Q over {}: {e}",
                            q.filling().shape()
                        )),
                    }
                }
            }
        }
        let image_count = pairs.len();
        let mut seen = BTreeMap::new();
        let mut injective = true;
        for (key, ..) in &pairs {
            if seen.insert(key.clone(), ()).is_some() {
                injective = false;
            }
        }
        let covered = injective
            && errors.is_empty()
            && image_count == sst_keys.len()
            && sst_keys.iter().all(|k| seen.contains_key(k));
        let report = AuditReport {
            lambda: lambda.clone(),
            n,
            sst_count: sst_keys.len(),
            per_mu,
            image_count,
            injective,
            covered,
            errors,
        };
        AuditTable { report, pairs }
    }

    /// Looks up the unique preimage of a tableau of this table's shape.
    pub fn preimage(
        &self,
        t: &SkewTableau,
    ) -> Option<(Partition, SkewTableau, RecordingTableau)> {
        self.pairs
            .iter()
            .find(|(rows, ..)| rows == t.rows())
            .map(|(_, mu, s, q)| (mu.clone(), s.clone(), q.clone()))
    }
}

/// Runs the audit for one shape and returns its report.
pub fn audit_bijection(lambda: &Partition, n: usize) -> AuditReport {
    AuditTable::build(lambda, n).report
}

const CACHE_MAGIC: &str = "qlr-audit v1";

/// A collection of audit tables keyed by `(n, λ)`, optionally persisted to a
/// cache directory.
pub struct AuditSet {
    cache_dir: Option<PathBuf>,
    tables: BTreeMap<(usize, Vec<usize>), AuditTable>,
}

impl AuditSet {
    pub fn new(cache_dir: Option<PathBuf>) -> AuditSet {
        AuditSet {
            cache_dir,
            tables: BTreeMap::new(),
        }
    }

    fn cache_path(&self, lambda: &Partition, n: usize) -> Option<PathBuf> {
        let dir = self.cache_dir.as_ref()?;
        let parts = if lambda.is_empty() {
            "empty".to_string()
        } else {
            lambda
                .parts()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(".")
        };
        Some(dir.join(format!("n{n}-lambda{parts}.audit")))
    }

    fn load_cached(&self, lambda: &Partition, n: usize) -> Option<AuditTable> {
        let path = self.cache_path(lambda, n)?;
        let text = fs::read_to_string(path).ok()?;
        let (header, payload) = text.split_once('\n')?;
        let expect = header.strip_prefix(&format!("{CACHE_MAGIC} sha256="))?;
        let digest = hex_digest(payload.as_bytes());
        if digest != expect {
            return None; // corrupt entry: rebuild instead of trusting it
        }
        serde_json::from_str(payload).ok()
    }

    fn store_cached(&self, lambda: &Partition, n: usize, table: &AuditTable) {
        let Some(path) = self.cache_path(lambda, n) else {
            return;
        };
        let Ok(payload) = serde_json::to_string(table) else {
            return;
        };
        let digest = hex_digest(payload.as_bytes());
        if let Some(parent) = path.parent() {
            let _ = fs::create_dir_all(parent);
        }
        let _ = fs::File::create(&path)
            .and_then(|mut f| writeln!(f, "{CACHE_MAGIC} sha256={digest}").map(|_| f))
            .and_then(|mut f| f.write_all(payload.as_bytes()));
    }

    /// The audit table for `(λ, n)`, computed or loaded on first use.
    pub fn table(&mut self, lambda: &Partition, n: usize) -> &AuditTable {
        let key = (n, lambda.parts().to_vec());
        if !self.tables.contains_key(&key) {
            let table = self
                .load_cached(lambda, n)
                .filter(|t| t.report.lambda == *lambda && t.report.n == n)
                .unwrap_or_else(|| {
                    let built = AuditTable::build(lambda, n);
                    self.store_cached(lambda, n, &built);
                    built
                });
            self.tables.insert(key.clone(), table);
        }
        &self.tables[&key]
    }

    /// The forward direction by lookup: the unique pair `(S, Q)` whose
    /// inverse is `t`. Requires the audit table for the shape of `t` to be
    /// present and covered.
    pub fn forward_by_search(
        &self,
        t: &SkewTableau,
        n: usize,
    ) -> Result<(SkewTableau, RecordingTableau), Error> {
        let key = (n, t.outer().parts().to_vec());
        let table = self
            .tables
            .get(&key)
            .ok_or_else(|| Error::NotFound(format!("no audit table for {}", t.outer())))?;
        if !table.report.covered {
            return Err(Error::NotFound(format!(
                "audit table for {} failed its coverage check",
                t.outer()
            )));
        }
        table
            .preimage(t)
            .map(|(_, s, q)| (s, q))
            .ok_or_else(|| Error::NotFound("tableau not in the audit table".into()))
    }
}

/// The forward direction without an audit table: try every recording tableau
/// over every admissible inner shape, unwind the inverse map step by step
/// (strip the first column, reduce it, re-insert the reduction), and confirm
/// the candidate by running the inverse forward. Practical whenever the
/// recording-tableau sets of the shape are small, even for alphabets far
/// beyond audit range.
pub fn forward_by_unwinding(
    t: &SkewTableau,
    n: usize,
) -> Result<(SkewTableau, RecordingTableau), Error> {
    let lambda = t.outer().clone();
    for mu in lambda.subpartitions(n) {
        for q in enumerate_rec(&lambda, &mu, n) {
            let Some(s) = unwind_candidate(t, &q) else {
                continue;
            };
            if lr_aii_inverse(&s, &q).as_ref() == Ok(t) {
                return Ok((s, q));
            }
        }
    }
    Err(Error::NotFound(
        "no (symplectic, recording) pair maps onto the tableau".into(),
    ))
}

fn unwind_candidate(t: &SkewTableau, q: &RecordingTableau) -> Option<SkewTableau> {
    use crate::insertion::column_insert;
    use crate::reduction::reduce;

    let chain = q.strip_chain();
    let mut current = t.clone();
    for i in 1..=chain.num_strips() {
        if current.outer() != &chain.shapes()[i - 1] {
            return None;
        }
        let first_column: Vec<usize> = (1..=current.outer().len())
            .filter_map(|r| current.entry(r, 1))
            .collect();
        let remainder_rows: Vec<Vec<usize>> = current
            .rows()
            .iter()
            .filter(|row| row.len() > 1)
            .map(|row| row[1..].to_vec())
            .collect();
        let remainder = SkewTableau::straight(remainder_rows).ok()?;
        let bumped = reduce(&first_column);
        let rebuilt = bumped
            .entries()
            .iter()
            .fold(remainder, |acc, &x| column_insert(x, &acc));
        if rebuilt.outer() != &chain.shapes()[i] {
            return None;
        }
        current = rebuilt;
    }
    Some(current)
}

fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}
