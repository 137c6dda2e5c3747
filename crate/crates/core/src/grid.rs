//! Hodge-number grids, grid comparisons, and the threefold relative diamond.
//!
//! A grid maps (p, q) to a positive count; zero cells are never stored. The
//! grid of a table places a piece of Hodge index a in degree s at
//! (p, q) = (a, s − a), so p is the Hodge-filtration index and p + q the
//! cohomological degree. Mirror-type comparisons then read
//! `left(p, q) = right(d − p, q)`.

use crate::mhs::{MhsError, PerverseHodgeTable};
use std::collections::BTreeMap;
use std::fmt;

/// What the grid counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridLabel {
    HNumbers,
    FNumbers,
}

impl GridLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            GridLabel::HNumbers => "h-numbers",
            GridLabel::FNumbers => "f-numbers",
        }
    }

    fn letter(self) -> char {
        match self {
            GridLabel::HNumbers => 'h',
            GridLabel::FNumbers => 'f',
        }
    }
}

/// Sparse grid of nonnegative counts indexed by (p, q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeGrid {
    label: GridLabel,
    entries: BTreeMap<(i64, i64), u64>,
}

impl HodgeGrid {
    pub fn new(label: GridLabel) -> Self {
        HodgeGrid {
            label,
            entries: BTreeMap::new(),
        }
    }

    pub fn label(&self) -> GridLabel {
        self.label
    }

    /// Add to a cell; zero increments are ignored so no zero is stored.
    pub fn add(&mut self, p: i64, q: i64, value: u64) {
        if value > 0 {
            *self.entries.entry((p, q)).or_insert(0) += value;
        }
    }

    pub fn get(&self, p: i64, q: i64) -> u64 {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((i64, i64), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}

impl fmt::Display for HodgeGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} grid:", self.label.as_str())?;
        let c = self.label.letter();
        for ((p, q), v) in self.entries() {
            writeln!(f, "  {c}^{{{p},{q}}} = {v}")?;
        }
        write!(f, "  total = {}", self.total())
    }
}

/// Collect the Hodge numbers of a table: a piece (s, a, w)^m contributes m
/// at (p, q) = (a, s − a).
pub fn hodge_numbers(table: &PerverseHodgeTable) -> HodgeGrid {
    let mut grid = HodgeGrid::new(GridLabel::HNumbers);
    for piece in table.pieces() {
        let p = i64::from(piece.hodge);
        let q = i64::from(piece.degree) - p;
        grid.add(p, q, piece.mult);
    }
    grid
}

/// Index involution used when comparing two grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridTransform {
    Identity,
    /// Mirror pair of log Calabi-Yau dimension d: (p, q) -> (d−p, q).
    LogCY(u32),
    /// Fano versus Landau-Ginzburg in ambient dimension n: (p, q) -> (n−p, q).
    Fano(u32),
    /// Anticanonical divisor versus fiber: (p, q) -> (n−1−p, q).
    Boundary(u32),
}

impl GridTransform {
    pub fn apply(self, p: i64, q: i64) -> (i64, i64) {
        match self {
            GridTransform::Identity => (p, q),
            GridTransform::LogCY(d) => (i64::from(d) - p, q),
            GridTransform::Fano(n) => (i64::from(n) - p, q),
            GridTransform::Boundary(n) => (i64::from(n) - 1 - p, q),
        }
    }

    /// Parse `identity`, `logCY(d)`, `fano(n)`, or `boundary(n)`.
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if text.eq_ignore_ascii_case("identity") {
            return Some(GridTransform::Identity);
        }
        let open = text.find('(')?;
        if !text.ends_with(')') {
            return None;
        }
        let name = text[..open].to_ascii_lowercase();
        let arg: u32 = text[open + 1..text.len() - 1].trim().parse().ok()?;
        match name.as_str() {
            "logcy" => Some(GridTransform::LogCY(arg)),
            "fano" => Some(GridTransform::Fano(arg)),
            "boundary" => Some(GridTransform::Boundary(arg)),
            _ => None,
        }
    }
}

impl fmt::Display for GridTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridTransform::Identity => write!(f, "identity"),
            GridTransform::LogCY(d) => write!(f, "logCY({d})"),
            GridTransform::Fano(n) => write!(f, "fano({n})"),
            GridTransform::Boundary(n) => write!(f, "boundary({n})"),
        }
    }
}

/// One failed cell of a grid comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridMismatch {
    pub p: i64,
    pub q: i64,
    pub left: u64,
    pub right: u64,
}

/// Outcome of a grid comparison.
#[derive(Debug, Clone)]
pub struct GridReport {
    pub holds: bool,
    pub transform: GridTransform,
    pub mismatches: Vec<GridMismatch>,
}

/// Check `left(p, q) = right(T(p, q))` for every populated cell on either
/// side. All supported transforms are involutions, so the right side is
/// scanned through T as well.
pub fn check_grid_equality(
    left: &HodgeGrid,
    right: &HodgeGrid,
    transform: GridTransform,
) -> GridReport {
    let mut cells: Vec<(i64, i64)> = left.entries().map(|(k, _)| k).collect();
    for ((p, q), _) in right.entries() {
        cells.push(transform.apply(p, q));
    }
    cells.sort();
    cells.dedup();
    let mut mismatches = Vec::new();
    for (p, q) in cells {
        let (tp, tq) = transform.apply(p, q);
        let l = left.get(p, q);
        let r = right.get(tp, tq);
        if l != r {
            mismatches.push(GridMismatch {
                p,
                q,
                left: l,
                right: r,
            });
        }
    }
    GridReport {
        holds: mismatches.is_empty(),
        transform,
        mismatches,
    }
}

/// Parameters of the relative-cohomology diamond of a threefold
/// Landau-Ginzburg model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiamondParams {
    /// Sum over critical values of (fiber components − 1).
    pub k_y: u64,
    /// Dimension of the cokernel of restriction to a fiber; at least 2.
    pub ph: u64,
    pub h12: u64,
    pub h21: u64,
}

/// Build the f-number grid: f^{3,0} = f^{0,3} = 1, f^{1,1} = f^{2,2} = k_Y,
/// f^{2,1} = ph−2+h12, f^{1,2} = ph−2+h21, everything else 0.
pub fn fpq_diamond(params: &DiamondParams) -> Result<HodgeGrid, MhsError> {
    if params.ph < 2 {
        return Err(MhsError::InvalidDiamond(params.ph));
    }
    let mut grid = HodgeGrid::new(GridLabel::FNumbers);
    grid.add(3, 0, 1);
    grid.add(0, 3, 1);
    grid.add(1, 1, params.k_y);
    grid.add(2, 2, params.k_y);
    grid.add(2, 1, params.ph - 2 + params.h12);
    grid.add(1, 2, params.ph - 2 + params.h21);
    Ok(grid)
}

/// Σ over critical values of (ρ − 1); every fiber needs at least one
/// irreducible component.
pub fn k_y_from_fibers(fibers: &[(String, u64)]) -> Result<u64, MhsError> {
    let mut total = 0u64;
    for (label, rho) in fibers {
        if *rho < 1 {
            return Err(MhsError::EmptyFiber(label.clone()));
        }
        total += rho - 1;
    }
    Ok(total)
}
