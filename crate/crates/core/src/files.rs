//! JSON file formats: tables, long-exact-sequence problems, and grids.
//!
//! Table schema:
//! ```json
//! { "name": "Dh", "dim": 2, "kind": "ordinary" | "compact",
//!   "pieces": [ {"degree": 2, "tate": 1, "mult": 1, "perverse": 0},
//!               {"degree": 3, "hodge": 1, "weight": 2, "mult": 1} ] }
//! ```
//! A `tate` piece is shorthand for hodge = k, weight = 2k. Duplicate piece
//! keys merge with a warning. An optional `provenance` string is carried
//! through untouched.
//!
//! Problem schema:
//! ```json
//! { "pattern": "triple-compact" | "residue",
//!   "A": "Y22c" | { ...table... }, "B": "Dh" | { ...table... },
//!   "rank_hints": [ {"hodge":1, "weight":2, "degree":2,
//!                    "edge":"A->B", "rank":1} ] }
//! ```
//! Table references are resolved against the catalog first, then as paths.
//!
//! Grid schema:
//! ```json
//! { "label": "h-numbers" | "f-numbers",
//!   "entries": [ {"p": 0, "q": 0, "value": 1} ] }
//! ```

use crate::catalog::{self, CatalogError};
use crate::grid::{GridLabel, HodgeGrid};
use crate::les::{Edge, LesProblem, Pattern, RankHint};
use crate::mhs::{HodgePiece, Kind, MhsError, PerverseHodgeTable};
use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: invalid JSON: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error("{path}: {field}: {detail}")]
    Schema {
        path: String,
        field: String,
        detail: String,
    },
    #[error(transparent)]
    Table(#[from] MhsError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableFile {
    pub name: String,
    pub dim: u32,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    pub pieces: Vec<PieceFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PieceFile {
    Tate {
        degree: u32,
        tate: u32,
        mult: u64,
        #[serde(skip_serializing_if = "Option::is_none")]
        perverse: Option<u32>,
    },
    Full {
        degree: u32,
        hodge: u32,
        weight: u32,
        mult: u64,
        #[serde(skip_serializing_if = "Option::is_none")]
        perverse: Option<u32>,
    },
}

impl PieceFile {
    fn to_piece(&self) -> HodgePiece {
        match *self {
            PieceFile::Tate {
                degree,
                tate,
                mult,
                perverse,
            } => HodgePiece::tate(degree, tate, perverse, mult),
            PieceFile::Full {
                degree,
                hodge,
                weight,
                mult,
                perverse,
            } => HodgePiece::new(degree, hodge, weight, perverse, mult),
        }
    }
}

/// Convert a parsed file into a table. Returns the table plus warnings
/// (currently: duplicate piece keys that were merged).
pub fn table_from_file(
    file: &TableFile,
    path: &str,
) -> Result<(PerverseHodgeTable, Vec<String>), FileError> {
    let kind = match file.kind.as_str() {
        "ordinary" => Kind::Ordinary,
        "compact" => Kind::Compact,
        other => {
            return Err(FileError::Schema {
                path: path.to_string(),
                field: "kind".to_string(),
                detail: format!("expected \"ordinary\" or \"compact\", got \"{other}\""),
            })
        }
    };
    let mut table = PerverseHodgeTable::new(file.name.clone(), file.dim, kind);
    let mut warnings = Vec::new();
    let mut distinct = 0usize;
    for (i, piece_file) in file.pieces.iter().enumerate() {
        let piece = piece_file.to_piece();
        let before = table.pieces().count();
        table.add_piece(piece).map_err(|e| FileError::Schema {
            path: path.to_string(),
            field: format!("pieces[{i}]"),
            detail: e.to_string(),
        })?;
        let after = table.pieces().count();
        if after == before {
            warnings.push(format!(
                "{path}: pieces[{i}] duplicates an earlier piece key; multiplicities merged"
            ));
        } else {
            distinct += 1;
        }
    }
    debug_assert_eq!(distinct, table.pieces().count());
    Ok((table, warnings))
}

/// Serialize a table; Tate-type pieces use the `tate` shorthand.
pub fn table_to_file(table: &PerverseHodgeTable) -> TableFile {
    let pieces = table
        .pieces()
        .map(|p| {
            if p.is_tate() {
                PieceFile::Tate {
                    degree: p.degree,
                    tate: p.hodge,
                    mult: p.mult,
                    perverse: p.perverse,
                }
            } else {
                PieceFile::Full {
                    degree: p.degree,
                    hodge: p.hodge,
                    weight: p.weight,
                    mult: p.mult,
                    perverse: p.perverse,
                }
            }
        })
        .collect();
    TableFile {
        name: table.name().to_string(),
        dim: table.dim(),
        kind: table.kind().as_str().to_string(),
        provenance: None,
        pieces,
    }
}

pub fn load_table(path: &Path) -> Result<(PerverseHodgeTable, Vec<String>), FileError> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| FileError::Read {
        path: display.clone(),
        source: e,
    })?;
    let file: TableFile = serde_json::from_str(&text).map_err(|e| FileError::Json {
        path: display.clone(),
        source: e,
    })?;
    table_from_file(&file, &display)
}

pub fn save_table(table: &PerverseHodgeTable, path: &Path) -> Result<(), FileError> {
    let display = path.display().to_string();
    let file = table_to_file(table);
    let text = serde_json::to_string_pretty(&file).expect("table serializes");
    std::fs::write(path, text + "\n").map_err(|e| FileError::Write {
        path: display,
        source: e,
    })
}

/// Resolve a table reference: catalog key first, then filesystem path.
pub fn resolve_table(reference: &str) -> Result<(PerverseHodgeTable, Vec<String>), FileError> {
    match catalog::lookup(reference) {
        Ok(t) => Ok((t, Vec::new())),
        Err(CatalogError::UnknownKey { .. }) if Path::new(reference).exists() => {
            load_table(Path::new(reference))
        }
        Err(e @ CatalogError::UnknownKey { .. }) => {
            if reference.ends_with(".json") || reference.contains('/') {
                load_table(Path::new(reference))
            } else {
                Err(e.into())
            }
        }
        Err(e) => Err(e.into()),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProblemFile {
    pub pattern: String,
    #[serde(rename = "A")]
    pub a: TableRef,
    #[serde(rename = "B")]
    pub b: TableRef,
    #[serde(default)]
    pub rank_hints: Vec<RankHintFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TableRef {
    Key(String),
    Inline(TableFile),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RankHintFile {
    pub hodge: u32,
    pub weight: u32,
    pub degree: u32,
    pub edge: String,
    pub rank: u64,
}

fn resolve_ref(
    r: &TableRef,
    path: &str,
    warnings: &mut Vec<String>,
) -> Result<PerverseHodgeTable, FileError> {
    match r {
        TableRef::Key(key) => {
            let (t, w) = resolve_table(key)?;
            warnings.extend(w);
            Ok(t)
        }
        TableRef::Inline(file) => {
            let (t, w) = table_from_file(file, path)?;
            warnings.extend(w);
            Ok(t)
        }
    }
}

/// Load a problem file, resolving table references.
pub fn load_problem(path: &Path) -> Result<(LesProblem, Vec<String>), FileError> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| FileError::Read {
        path: display.clone(),
        source: e,
    })?;
    let file: ProblemFile = serde_json::from_str(&text).map_err(|e| FileError::Json {
        path: display.clone(),
        source: e,
    })?;
    problem_from_file(&file, &display)
}

pub fn problem_from_file(
    file: &ProblemFile,
    path: &str,
) -> Result<(LesProblem, Vec<String>), FileError> {
    let pattern = Pattern::parse(&file.pattern).ok_or_else(|| FileError::Schema {
        path: path.to_string(),
        field: "pattern".to_string(),
        detail: format!(
            "expected \"triple-compact\" or \"residue\", got \"{}\"",
            file.pattern
        ),
    })?;
    let mut warnings = Vec::new();
    let table_a = resolve_ref(&file.a, path, &mut warnings)?;
    let table_b = resolve_ref(&file.b, path, &mut warnings)?;
    let mut hints = Vec::new();
    for (i, h) in file.rank_hints.iter().enumerate() {
        let edge = Edge::parse(&h.edge).ok_or_else(|| FileError::Schema {
            path: path.to_string(),
            field: format!("rank_hints[{i}].edge"),
            detail: format!("unknown edge \"{}\"", h.edge),
        })?;
        hints.push(RankHint {
            hodge: h.hodge,
            weight: h.weight,
            degree: h.degree,
            edge,
            rank: h.rank,
        });
    }
    Ok((
        LesProblem {
            pattern,
            table_a,
            table_b,
            hints,
        },
        warnings,
    ))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridFile {
    pub label: String,
    pub entries: Vec<GridEntryFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridEntryFile {
    pub p: i64,
    pub q: i64,
    pub value: u64,
}

pub fn grid_from_file(file: &GridFile, path: &str) -> Result<HodgeGrid, FileError> {
    let label = match file.label.as_str() {
        "h-numbers" => GridLabel::HNumbers,
        "f-numbers" => GridLabel::FNumbers,
        other => {
            return Err(FileError::Schema {
                path: path.to_string(),
                field: "label".to_string(),
                detail: format!("expected \"h-numbers\" or \"f-numbers\", got \"{other}\""),
            })
        }
    };
    let mut grid = HodgeGrid::new(label);
    for (i, e) in file.entries.iter().enumerate() {
        if e.value == 0 {
            return Err(FileError::Schema {
                path: path.to_string(),
                field: format!("entries[{i}]"),
                detail: "zero cells are never stored".to_string(),
            });
        }
        grid.add(e.p, e.q, e.value);
    }
    Ok(grid)
}

pub fn grid_to_file(grid: &HodgeGrid) -> GridFile {
    GridFile {
        label: grid.label().as_str().to_string(),
        entries: grid
            .entries()
            .map(|((p, q), value)| GridEntryFile { p, q, value })
            .collect(),
    }
}

pub fn load_grid(path: &Path) -> Result<HodgeGrid, FileError> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| FileError::Read {
        path: display.clone(),
        source: e,
    })?;
    let file: GridFile = serde_json::from_str(&text).map_err(|e| FileError::Json {
        path: display.clone(),
        source: e,
    })?;
    grid_from_file(&file, &display)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;

    #[test]
    fn round_trip_builtin() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("u22.json");
        let table = builtin("U22").unwrap();
        save_table(&table, &path).unwrap();
        let (loaded, warnings) = load_table(&path).unwrap();
        assert!(warnings.is_empty());
        assert_eq!(loaded, table);
    }

    #[test]
    fn tate_shorthand_expands() {
        let json = r#"{ "name": "t", "dim": 3, "kind": "compact",
            "pieces": [ {"degree": 6, "tate": 3, "mult": 1} ] }"#;
        let file: TableFile = serde_json::from_str(json).unwrap();
        let (table, _) = table_from_file(&file, "inline").unwrap();
        let p = table.pieces().next().unwrap();
        assert_eq!((p.hodge, p.weight), (3, 6));
    }

    #[test]
    fn weight_below_hodge_rejected() {
        let json = r#"{ "name": "t", "dim": 1, "kind": "ordinary",
            "pieces": [ {"degree": 1, "hodge": 2, "weight": 1, "mult": 1} ] }"#;
        let file: TableFile = serde_json::from_str(json).unwrap();
        match table_from_file(&file, "inline") {
            Err(FileError::Schema { field, .. }) => assert_eq!(field, "pieces[0]"),
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn duplicate_pieces_merge_with_warning() {
        let json = r#"{ "name": "t", "dim": 1, "kind": "ordinary",
            "pieces": [ {"degree": 0, "tate": 0, "mult": 1},
                        {"degree": 0, "tate": 0, "mult": 2} ] }"#;
        let file: TableFile = serde_json::from_str(json).unwrap();
        let (table, warnings) = table_from_file(&file, "inline").unwrap();
        assert_eq!(table.total_dim(), 3);
        assert_eq!(warnings.len(), 1);
    }

    #[test]
    fn problem_with_catalog_keys() {
        let json = r#"{ "pattern": "triple-compact", "A": "Y22c", "B": "Dh",
            "rank_hints": [ {"hodge":1,"weight":2,"degree":2,"edge":"A->B","rank":1} ] }"#;
        let file: ProblemFile = serde_json::from_str(json).unwrap();
        let (problem, _) = problem_from_file(&file, "inline").unwrap();
        assert_eq!(problem.table_a.name(), "Y22c");
        assert_eq!(problem.hints.len(), 1);
    }

    #[test]
    fn grid_zero_cells_rejected() {
        let json = r#"{ "label": "h-numbers", "entries": [ {"p":0,"q":0,"value":0} ] }"#;
        let file: GridFile = serde_json::from_str(json).unwrap();
        assert!(grid_from_file(&file, "inline").is_err());
    }
}
