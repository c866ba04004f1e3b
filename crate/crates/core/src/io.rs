//! JSON documents for posets and grids, and Graphviz export.
//!
//! A poset document looks like
//!
//! ```json
//! {"elements": [{"id": "x", "color": "white"}, {"id": "z", "color": "black"}],
//!  "covers": [["x", "z"]],
//!  "metadata": {"name": "example"}}
//! ```
//!
//! A grid document carries a `grid` object instead of `elements`/`covers`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::generators::Fixture;
use crate::generators::FixtureContent;
use crate::poset::{build_poset, Cell, Color, ColoredPoset, PosetError};
use crate::reductions::ReductionPoset;
use crate::rules::{EngineError, Grid};
use crate::subset::ElementSubset;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{}: {source}", path.display())]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("document has neither `elements` nor `grid`")]
    MissingGround,
    #[error("document has both `elements` and `grid`")]
    AmbiguousGround,
    #[error("{field}: {source}")]
    InvalidPoset {
        field: String,
        #[source]
        source: PosetError,
    },
    #[error("grid: {0}")]
    InvalidGrid(#[from] EngineError),
    #[error("expected a poset document, found a grid")]
    NotAPoset,
}

impl IoError {
    /// Malformed text as opposed to well-formed but invalid content.
    pub fn is_format_error(&self) -> bool {
        matches!(
            self,
            IoError::Json { .. } | IoError::MissingGround | IoError::AmbiguousGround
        )
    }

    fn poset(source: PosetError) -> Self {
        let field = match &source {
            PosetError::DuplicateLabel { index, .. } => format!("elements[{index}].id"),
            PosetError::UnknownLabel { cover, .. }
            | PosetError::RedundantCoverEdge { cover, .. } => {
                format!("covers[{cover}]")
            }
            PosetError::CycleDetected { .. } => "covers".into(),
            PosetError::TooManyElements(_) => "elements".into(),
            PosetError::InvalidLayout(_) => "metadata.cells".into(),
            PosetError::NotAForest => "document".into(),
        };
        IoError::InvalidPoset { field, source }
    }
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        IoError::Json {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementEntry {
    pub id: String,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridCellEntry {
    pub row: usize,
    pub col: usize,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridEntry {
    pub side: usize,
    pub cells: Vec<GridCellEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub role_map: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture_orientation: Option<String>,
    /// Zero-based `[row, column]` per element, for diagram posets.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cells: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Removal sequence of a generated truncated square.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub removals: Option<Vec<[usize; 2]>>,
}

impl Metadata {
    pub fn is_empty(&self) -> bool {
        *self == Metadata::default()
    }

    pub fn named(name: impl Into<String>) -> Self {
        Metadata {
            name: Some(name.into()),
            ..Metadata::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<ElementEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridEntry>,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    pub metadata: Metadata,
}

/// The game board a document describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ground {
    Poset(ColoredPoset),
    Grid(Grid),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedDocument {
    pub ground: Ground,
    pub metadata: Metadata,
}

impl PosetDocument {
    pub fn from_poset(poset: &ColoredPoset, mut metadata: Metadata) -> Self {
        let elements = (0..poset.len())
            .map(|i| ElementEntry {
                id: poset.label(i).to_string(),
                color: poset.color(i),
            })
            .collect();
        let covers = poset
            .covers()
            .iter()
            .map(|&(a, b)| [poset.label(a).to_string(), poset.label(b).to_string()])
            .collect();
        if let Some(cells) = poset.layout() {
            metadata.cells = Some(cells.iter().map(|&(r, c)| [r, c]).collect());
        }
        PosetDocument {
            elements: Some(elements),
            covers: Some(covers),
            grid: None,
            metadata,
        }
    }

    pub fn from_grid(grid: &Grid, metadata: Metadata) -> Self {
        let cells = grid
            .cells()
            .iter()
            .zip(grid.colors())
            .map(|(&(row, col), &color)| GridCellEntry { row, col, color })
            .collect();
        PosetDocument {
            elements: None,
            covers: None,
            grid: Some(GridEntry {
                side: grid.side(),
                cells,
            }),
            metadata,
        }
    }

    pub fn load(&self) -> Result<LoadedDocument, IoError> {
        let ground = match (&self.elements, &self.grid) {
            (Some(_), Some(_)) => return Err(IoError::AmbiguousGround),
            (None, None) => return Err(IoError::MissingGround),
            (Some(elements), None) => {
                let elements: Vec<(&str, Color)> =
                    elements.iter().map(|e| (e.id.as_str(), e.color)).collect();
                let covers: Vec<(&str, &str)> = self
                    .covers
                    .iter()
                    .flatten()
                    .map(|[a, b]| (a.as_str(), b.as_str()))
                    .collect();
                let mut poset = build_poset(&elements, &covers).map_err(IoError::poset)?;
                if let Some(cells) = &self.metadata.cells {
                    let cells: Vec<Cell> = cells.iter().map(|&[r, c]| (r, c)).collect();
                    poset = poset.with_layout(cells).map_err(IoError::poset)?;
                }
                Ground::Poset(poset)
            }
            (None, Some(g)) => {
                let cells: Vec<(Cell, Color)> =
                    g.cells.iter().map(|c| ((c.row, c.col), c.color)).collect();
                Ground::Grid(Grid::new(g.side, &cells)?)
            }
        };
        Ok(LoadedDocument {
            ground,
            metadata: self.metadata.clone(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }
}

pub fn parse_document(text: &str) -> Result<LoadedDocument, IoError> {
    let doc: PosetDocument = serde_json::from_str(text)?;
    doc.load()
}

pub fn parse_poset(text: &str) -> Result<ColoredPoset, IoError> {
    match parse_document(text)?.ground {
        Ground::Poset(p) => Ok(p),
        Ground::Grid(_) => Err(IoError::NotAPoset),
    }
}

fn read_text(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.to_path_buf(),
        source,
    })
}

fn write_text(path: &Path, text: &str) -> Result<(), IoError> {
    std::fs::write(path, text).map_err(|source| IoError::File {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_document(path: impl AsRef<Path>) -> Result<LoadedDocument, IoError> {
    parse_document(&read_text(path.as_ref())?)
}

pub fn read_poset(path: impl AsRef<Path>) -> Result<ColoredPoset, IoError> {
    parse_poset(&read_text(path.as_ref())?)
}

/// Elements and covers are written in index order.
pub fn write_poset(poset: &ColoredPoset, path: impl AsRef<Path>) -> Result<(), IoError> {
    write_text(path.as_ref(), &poset_json(poset, Metadata::default()))
}

pub fn write_document(doc: &PosetDocument, path: impl AsRef<Path>) -> Result<(), IoError> {
    write_text(path.as_ref(), &doc.to_json())
}

pub fn poset_json(poset: &ColoredPoset, metadata: Metadata) -> String {
    PosetDocument::from_poset(poset, metadata).to_json()
}

pub fn fixture_document(fixture: &Fixture) -> PosetDocument {
    let metadata = Metadata {
        name: Some(fixture.name.to_string()),
        fixture_orientation: Some(fixture.orientation.to_string()),
        ..Metadata::default()
    };
    match &fixture.content {
        FixtureContent::Poset(p) => PosetDocument::from_poset(p, metadata),
        FixtureContent::Grid(g) => PosetDocument::from_grid(g, metadata),
    }
}

pub fn reduction_document(r: &ReductionPoset, name: impl Into<String>) -> PosetDocument {
    let roles = (0..r.poset.len())
        .map(|i| (r.poset.label(i).to_string(), r.roles[i].to_string()))
        .collect();
    let metadata = Metadata {
        name: Some(name.into()),
        role_map: Some(roles),
        ..Metadata::default()
    };
    PosetDocument::from_poset(&r.poset, metadata)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram in Graphviz syntax, covers pointing upward. Black elements
/// are filled; with `present`, elements outside it are dashed.
pub fn export_dot(poset: &ColoredPoset, present: Option<ElementSubset>) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
    for i in 0..poset.len() {
        let mut style = Vec::new();
        let mut attrs = format!("label={}", quote(poset.label(i)));
        if poset.color(i) == Color::Black {
            style.push("filled");
            attrs.push_str(", fillcolor=black, fontcolor=white");
        }
        if present.is_some_and(|p| !p.contains(i)) {
            style.push("dashed");
        }
        if !style.is_empty() {
            let _ = write!(attrs, ", style={}", quote(&style.join(",")));
        }
        let _ = writeln!(out, "  {} [{attrs}];", quote(poset.label(i)));
    }
    for &(a, b) in poset.covers() {
        let _ = writeln!(
            out,
            "  {} -> {};",
            quote(poset.label(a)),
            quote(poset.label(b))
        );
    }
    out.push_str("}\n");
    out
}

/// Text picture of a grid: `W`/`B` for present cells, `.` for removed
/// ones and blanks outside.
pub fn render_grid(grid: &Grid, present: ElementSubset) -> String {
    let n = grid.side();
    let mut rows = vec![vec![' '; n]; n];
    for (i, &(r, c)) in grid.cells().iter().enumerate() {
        rows[r][c] = match (present.contains(i), grid.colors()[i]) {
            (false, _) => '.',
            (true, Color::White) => 'W',
            (true, Color::Black) => 'B',
        };
    }
    let mut out = String::new();
    for row in rows {
        out.push_str(row.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    out
}
