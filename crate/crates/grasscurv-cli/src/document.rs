//! The on-disk map document.
//!
//! A document is UTF-8 JSON describing one holomorphic map in one of three
//! parametrizations (polynomial frame, gauge-fixed Macfarlane matrix, or
//! Plücker coordinate vector).  Polynomial coefficients are stored as pairs of
//! decimal strings `[re, im]`, one pair per ascending degree, so files carry
//! no binary-float ambiguity and a parse–serialize round trip preserves every
//! value exactly.

use std::fmt;
use std::path::Path;

use grasscurv::grassmann::{GrassmannFrame, MacfarlaneMap, PlueckerVector};
use grasscurv::poly::{HermitianPoly, HoloPoly};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Which parametrization the document's `entries` describe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocKind {
    /// `entries[c][r]` — column `c`, row `r` of an `n × m` polynomial frame.
    Frame,
    /// `entries[i][j]` — row `i`, column `j` of the `(n−m) × m` matrix `K`.
    Macfarlane,
    /// `entries[0][t]` — minor for the `t`-th index tuple in lexicographic
    /// order.
    Pluecker,
}

impl fmt::Display for DocKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DocKind::Frame => "frame",
            DocKind::Macfarlane => "macfarlane",
            DocKind::Pluecker => "pluecker",
        })
    }
}

/// One polynomial as a list of `[re, im]` decimal-string pairs by degree.
pub type Cell = Vec<[String; 2]>;

/// A serializable map into G(m, n).
///
/// Fields are declared in alphabetical order so the derived serializer emits
/// sorted keys, matching the report convention.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    /// Polynomial grid; the outer two layers' shape depends on `kind`.
    pub entries: Vec<Vec<Cell>>,
    pub kind: DocKind,
    /// Subspace dimension (columns of the frame).
    pub m: usize,
    /// Free-form labels; reports written by this tool record provenance here.
    #[serde(default)]
    pub metadata: serde_json::Map<String, serde_json::Value>,
    /// Ambient dimension.
    pub n: usize,
}

fn poly_to_cell(p: &HoloPoly) -> Cell {
    p.coeffs()
        .iter()
        .map(|c| [c.re.to_string(), c.im.to_string()])
        .collect()
}

fn cell_to_poly(cell: &Cell, what: &str) -> Result<HoloPoly, CliError> {
    let mut coeffs = Vec::with_capacity(cell.len());
    for (deg, [re, im]) in cell.iter().enumerate() {
        let part = |s: &str, axis: &str| -> Result<f64, CliError> {
            let v: f64 = s.trim().parse().map_err(|_| {
                CliError::input(format!(
                    "{what}, degree {deg}: cannot parse {axis} coefficient {s:?} as a decimal number"
                ))
            })?;
            if !v.is_finite() {
                return Err(CliError::input(format!(
                    "{what}, degree {deg}: non-finite {axis} coefficient {s:?}"
                )));
            }
            Ok(v)
        };
        coeffs.push(Complex64::new(part(re, "real")?, part(im, "imaginary")?));
    }
    HoloPoly::new(coeffs)
        .map_err(|e| CliError::input(format!("{what}: {e}")))
}

impl MapDocument {
    /// Captures a polynomial frame, without metadata.
    pub fn from_frame(z: &GrassmannFrame) -> Self {
        MapDocument {
            entries: z
                .columns()
                .iter()
                .map(|col| col.iter().map(poly_to_cell).collect())
                .collect(),
            kind: DocKind::Frame,
            m: z.m(),
            metadata: serde_json::Map::new(),
            n: z.n(),
        }
    }

    /// Captures a gauge-fixed map, without metadata.
    pub fn from_macfarlane(k: &MacfarlaneMap) -> Self {
        MapDocument {
            entries: k
                .k()
                .iter()
                .map(|row| row.iter().map(poly_to_cell).collect())
                .collect(),
            kind: DocKind::Macfarlane,
            m: k.m(),
            metadata: serde_json::Map::new(),
            n: k.n(),
        }
    }

    /// Captures a Plücker vector (lexicographic entry order), without metadata.
    pub fn from_pluecker(p: &PlueckerVector) -> Self {
        MapDocument {
            entries: vec![p.entries().iter().map(poly_to_cell).collect()],
            kind: DocKind::Pluecker,
            m: p.m(),
            metadata: serde_json::Map::new(),
            n: p.n(),
        }
    }

    /// Parses a document from JSON text.  Malformed JSON reports the line and
    /// column of the first offending byte.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| {
            CliError::input(format!(
                "JSON parse error at line {}, column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }

    /// Reads and parses a document file.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Pretty JSON with sorted keys (field order is alphabetical by
    /// construction; the metadata map is ordered).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization cannot fail")
    }

    /// Interprets a `frame` document.
    pub fn frame(&self) -> Result<GrassmannFrame, CliError> {
        self.expect_kind(DocKind::Frame)?;
        if self.entries.len() != self.m {
            return Err(CliError::input(format!(
                "frame document declares m = {} but has {} columns",
                self.m,
                self.entries.len()
            )));
        }
        let mut columns = Vec::with_capacity(self.m);
        for (c, col) in self.entries.iter().enumerate() {
            if col.len() != self.n {
                return Err(CliError::input(format!(
                    "frame document declares n = {} but column {c} has {} rows",
                    self.n,
                    col.len()
                )));
            }
            let mut rows = Vec::with_capacity(self.n);
            for (r, cell) in col.iter().enumerate() {
                rows.push(cell_to_poly(cell, &format!("frame entry (row {r}, column {c})"))?);
            }
            columns.push(rows);
        }
        GrassmannFrame::new(self.n, self.m, columns).map_err(|e| CliError::input(e.to_string()))
    }

    /// Interprets a `macfarlane` document.
    pub fn macfarlane_map(&self) -> Result<MacfarlaneMap, CliError> {
        self.expect_kind(DocKind::Macfarlane)?;
        if self.n <= self.m {
            return Err(CliError::input(format!(
                "macfarlane document needs m < n, got m = {}, n = {}",
                self.m, self.n
            )));
        }
        let want_rows = self.n - self.m;
        if self.entries.len() != want_rows {
            return Err(CliError::input(format!(
                "macfarlane document for G({}, {}) needs {} rows, found {}",
                self.m,
                self.n,
                want_rows,
                self.entries.len()
            )));
        }
        let mut rows = Vec::with_capacity(want_rows);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.m {
                return Err(CliError::input(format!(
                    "macfarlane document declares m = {} but row {i} has {} entries",
                    self.m,
                    row.len()
                )));
            }
            let mut cols = Vec::with_capacity(self.m);
            for (j, cell) in row.iter().enumerate() {
                cols.push(cell_to_poly(cell, &format!("K entry (row {i}, column {j})"))?);
            }
            rows.push(cols);
        }
        MacfarlaneMap::new(self.n, self.m, rows).map_err(|e| CliError::input(e.to_string()))
    }

    /// Interprets a `pluecker` document.
    pub fn pluecker(&self) -> Result<PlueckerVector, CliError> {
        self.expect_kind(DocKind::Pluecker)?;
        if self.entries.len() != 1 {
            return Err(CliError::input(format!(
                "pluecker document holds one entry list, found {}",
                self.entries.len()
            )));
        }
        let mut entries = Vec::with_capacity(self.entries[0].len());
        for (t, cell) in self.entries[0].iter().enumerate() {
            entries.push(cell_to_poly(cell, &format!("minor {t}"))?);
        }
        PlueckerVector::new(self.n, self.m, entries).map_err(|e| CliError::input(e.to_string()))
    }

    /// The Gram determinant of the documented map, whichever parametrization
    /// it uses.  Shape errors are input errors; determinant failures (e.g. a
    /// degree overflow) are numeric.
    pub fn gram_det(&self) -> Result<HermitianPoly, CliError> {
        let det = match self.kind {
            DocKind::Frame => self.frame()?.gram_det(),
            DocKind::Macfarlane => self.macfarlane_map()?.gram_det(),
            DocKind::Pluecker => self.pluecker()?.gram_det(),
        };
        det.map_err(|e| CliError::numeric(e.to_string()))
    }

    /// A gauge-fixed view of the documented map, whichever parametrization it
    /// uses.  Frames with a singular leading block have no such view; that
    /// failure is numeric, not an input error.
    pub fn to_macfarlane(&self) -> Result<MacfarlaneMap, CliError> {
        match self.kind {
            DocKind::Frame => self
                .frame()?
                .to_macfarlane()
                .map_err(|e| CliError::numeric(e.to_string())),
            DocKind::Macfarlane => self.macfarlane_map(),
            DocKind::Pluecker => self
                .pluecker()?
                .macfarlane()
                .map_err(|e| CliError::numeric(e.to_string())),
        }
    }

    fn expect_kind(&self, want: DocKind) -> Result<(), CliError> {
        if self.kind == want {
            Ok(())
        } else {
            Err(CliError::input(format!(
                "document kind is `{}`, expected `{want}`",
                self.kind
            )))
        }
    }
}
