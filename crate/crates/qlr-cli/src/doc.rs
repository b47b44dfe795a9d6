//! The on-disk tableau document: a single versioned JSON format plus the
//! diff-friendly text rendering (one line per row, inner cells as dots).

use serde::{Deserialize, Serialize};

use qlr::partition::{Partition, SkewShape};
use qlr::tableau::SkewTableau;

pub const DOC_VERSION: u32 = 1;

/// Serialized tableau: shape, alphabet half-bound, and per-row entries with
/// inner cells omitted.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauDocument {
    pub version: u32,
    pub n: usize,
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
    pub rows: Vec<Vec<usize>>,
}

impl TableauDocument {
    pub fn from_tableau(t: &SkewTableau, n: usize) -> Self {
        TableauDocument {
            version: DOC_VERSION,
            n,
            outer: t.outer().parts().to_vec(),
            inner: t.inner().parts().to_vec(),
            rows: t.rows().to_vec(),
        }
    }

    pub fn to_tableau(&self) -> Result<SkewTableau, String> {
        if self.version != DOC_VERSION {
            return Err(format!(
                "unsupported document version {} (expected {DOC_VERSION})",
                self.version
            ));
        }
        let outer = Partition::try_new(self.outer.clone()).map_err(|e| e.to_string())?;
        let inner = Partition::try_new(self.inner.clone()).map_err(|e| e.to_string())?;
        let shape = SkewShape::new(outer, inner).map_err(|e| e.to_string())?;
        SkewTableau::new(shape, self.rows.clone()).map_err(|e| e.to_string())
    }

    /// Parses either the JSON document format or the dot text rendering.
    /// Text input needs the alphabet bound from `n_flag`.
    pub fn parse(text: &str, n_flag: Option<usize>) -> Result<Self, String> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            let doc: TableauDocument =
                serde_json::from_str(trimmed).map_err(|e| format!("invalid JSON: {e}"))?;
            if let Some(n) = n_flag {
                if n != doc.n {
                    return Err(format!(
                        "--n {n} contradicts the document's n = {}",
                        doc.n
                    ));
                }
            }
            Ok(doc)
        } else {
            let n =
                n_flag.ok_or_else(|| "text input needs --n for the alphabet bound".to_string())?;
            Self::parse_text(text, n)
        }
    }

    /// Parses the text rendering: one line per row, whitespace-separated
    /// entries, `.` for inner cells (which must form a row prefix).
    pub fn parse_text(text: &str, n: usize) -> Result<Self, String> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() || line.trim() == "(empty)" {
                continue;
            }
            let mut dots = 0usize;
            let mut entries = Vec::new();
            for token in line.split_whitespace() {
                if token == "." {
                    if !entries.is_empty() {
                        return Err(format!(
                            "line {}: inner cells must precede entries",
                            lineno + 1
                        ));
                    }
                    dots += 1;
                } else {
                    let value: usize = token
                        .parse()
                        .map_err(|_| format!("line {}: bad entry {token:?}", lineno + 1))?;
                    entries.push(value);
                }
            }
            outer.push(dots + entries.len());
            inner.push(dots);
            rows.push(entries);
        }
        while inner.last() == Some(&0) {
            inner.pop();
        }
        Ok(TableauDocument {
            version: DOC_VERSION,
            n,
            outer,
            inner,
            rows,
        })
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }
}
