//! Built-in tables for the degree-(2,2) threefold worked example and a small
//! library of standard spaces.
//!
//! Keys:
//! - `U22`: the complement of two generic hyperplane sections in the
//!   intersection of two quadrics, weight-graded with affine perverse data.
//! - `Ycirc`: the open fiberwise-compactified Landau-Ginzburg total space
//!   mirror to `U22`, with its flag-filtration perverse grading.
//! - `Y22c`: compactly supported cohomology of the relative compactification.
//! - `Dh`: compactly supported cohomology of the horizontal boundary divisor,
//!   a 10-cycle of rational curves times a line.
//! - `point`: the one-point table.
//!
//! Parameterized standard tables are addressed as e.g. `curve(2)`,
//! `projective_space(3)`, `del_pezzo(4)`, `K3`, `cycle_In_times_line(10)`.

use crate::mhs::{HodgePiece, Kind, MhsError, PerverseHodgeTable};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog key `{key}`; available: {available}")]
    UnknownKey { key: String, available: String },
    #[error("parameter out of range for `{kind}`: {detail}")]
    BadParameter { kind: String, detail: String },
    #[error(transparent)]
    Table(#[from] MhsError),
}

/// A catalog entry: a table plus a note on where its numbers come from.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub table: PerverseHodgeTable,
    pub provenance: &'static str,
}

const BUILTIN_KEYS: [&str; 5] = ["point", "U22", "Ycirc", "Y22c", "Dh"];

/// The built-in keys, in catalog order.
pub fn builtin_keys() -> &'static [&'static str] {
    &BUILTIN_KEYS
}

/// Look up a built-in table by key; the error lists the available keys.
pub fn builtin(key: &str) -> Result<PerverseHodgeTable, CatalogError> {
    builtin_entry(key).map(|e| e.table)
}

/// Look up a built-in entry (table plus provenance note).
pub fn builtin_entry(key: &str) -> Result<CatalogEntry, CatalogError> {
    let (table, provenance) = match key {
        "point" => (
            PerverseHodgeTable::with_pieces(
                "point",
                0,
                Kind::Ordinary,
                [HodgePiece::new(0, 0, 0, Some(0), 1)],
            )?,
            "a point: one class in degree 0, trivially perverse",
        ),
        "U22" => (
            PerverseHodgeTable::with_pieces(
                "U22",
                3,
                Kind::Ordinary,
                [
                    // H^0 = Q(0)
                    HodgePiece::new(0, 0, 0, Some(3), 1),
                    // H^1: one weight-2 class from the removed divisors
                    HodgePiece::new(1, 1, 2, Some(2), 1),
                    // H^3 weight 3: the ambient threefold's odd cohomology,
                    // Hodge numbers (1,2) and (2,1) both of dimension 2
                    HodgePiece::new(3, 1, 3, Some(0), 2),
                    HodgePiece::new(3, 2, 3, Some(0), 2),
                    // H^3 weight 4: eight Tate classes Q(-2)
                    HodgePiece::new(3, 2, 4, Some(0), 8),
                    // H^3 weight 5: H^1 of the elliptic intersection curve,
                    // twisted twice
                    HodgePiece::new(3, 2, 5, Some(0), 1),
                    HodgePiece::new(3, 3, 5, Some(0), 1),
                ],
            )?,
            "weight-graded cohomology of the complement of two generic \
             hyperplane sections in the intersection of two quadrics; the \
             variety is affine, so the perverse index is dim minus degree",
        ),
        "Ycirc" => (
            PerverseHodgeTable::with_pieces(
                "Ycirc",
                3,
                Kind::Ordinary,
                [
                    // H^0 = Q(0), top perverse level
                    HodgePiece::new(0, 0, 0, Some(2), 1),
                    // H^2: Q(-1)^11 and Q(-2) graded; the flag filtration
                    // splits the eleven weight-2 classes as 2 + 8 + 1
                    HodgePiece::new(2, 1, 2, Some(0), 2),
                    HodgePiece::new(2, 1, 2, Some(1), 8),
                    HodgePiece::new(2, 1, 2, Some(2), 1),
                    HodgePiece::new(2, 2, 4, Some(1), 1),
                    // H^3 = Q(-3)
                    HodgePiece::new(3, 3, 6, Some(0), 1),
                    // H^4 = Q(-2)^2
                    HodgePiece::new(4, 2, 4, Some(0), 2),
                ],
            )?,
            "cohomology of the open fiberwise Landau-Ginzburg \
             compactification, graded by weight and by the flag filtration \
             of the affinization map; the kernel data of restriction to \
             generic flag preimages is taken as given",
        ),
        "Y22c" => (
            PerverseHodgeTable::with_pieces(
                "Y22c",
                3,
                Kind::Compact,
                [
                    HodgePiece::new(2, 1, 2, None, 3),
                    HodgePiece::new(3, 0, 0, None, 1),
                    HodgePiece::new(4, 2, 4, None, 21),
                    HodgePiece::new(6, 3, 6, None, 1),
                ],
            )?,
            "compactly supported cohomology of the relative compactification \
             of the toric Landau-Ginzburg model of the intersection of two \
             quadrics",
        ),
        "Dh" => (
            PerverseHodgeTable::with_pieces(
                "Dh",
                2,
                Kind::Compact,
                [
                    HodgePiece::new(2, 1, 2, None, 1),
                    HodgePiece::new(3, 1, 2, None, 1),
                    HodgePiece::new(4, 2, 4, None, 10),
                ],
            )?,
            "compactly supported cohomology of the horizontal boundary \
             divisor, a 10-cycle of rational curves times a line",
        ),
        _ => {
            return Err(CatalogError::UnknownKey {
                key: key.to_string(),
                available: BUILTIN_KEYS.join(", "),
            })
        }
    };
    Ok(CatalogEntry {
        key: BUILTIN_KEYS
            .iter()
            .find(|k| **k == key)
            .expect("key matched above"),
        table,
        provenance,
    })
}

/// Standard spaces with known graded cohomology.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Standard {
    Point,
    /// The affine line.
    Line,
    /// The one-dimensional algebraic torus.
    Torus1,
    EllipticCurve,
    /// Smooth projective curve of genus g.
    Curve(u32),
    ProjectiveSpace(u32),
    /// Del Pezzo surface of the given degree (1 through 9).
    DelPezzo(u32),
    K3,
    /// A cycle of n rational curves times a line (compact supports).
    CycleInTimesLine(u32),
}

/// Build a standard table. Projective spaces need n >= 1, del Pezzo degrees
/// lie in 1..=9, and cycles need n >= 1.
pub fn standard(kind: Standard) -> Result<PerverseHodgeTable, CatalogError> {
    let table = match kind {
        Standard::Point => builtin("point")?,
        Standard::Line => {
            PerverseHodgeTable::new("line", 1, Kind::Ordinary).tap_add(&[(0, 0, 0, None, 1)])?
        }
        Standard::Torus1 => PerverseHodgeTable::new("torus1", 1, Kind::Ordinary)
            .tap_add(&[(0, 0, 0, None, 1), (1, 1, 2, None, 1)])?,
        Standard::EllipticCurve => standard(Standard::Curve(1))?.with_name("elliptic_curve"),
        Standard::Curve(g) => {
            let mut pieces = vec![(0u32, 0u32, 0u32, None, 1u64), (2, 1, 2, None, 1)];
            if g > 0 {
                pieces.push((1, 0, 1, None, u64::from(g)));
                pieces.push((1, 1, 1, None, u64::from(g)));
            }
            PerverseHodgeTable::new(format!("curve({g})"), 1, Kind::Ordinary).tap_add(&pieces)?
        }
        Standard::ProjectiveSpace(n) => {
            if n < 1 {
                return Err(CatalogError::BadParameter {
                    kind: "projective_space".into(),
                    detail: format!("n = {n}, need n >= 1"),
                });
            }
            let pieces: Vec<_> = (0..=n).map(|i| (2 * i, i, 2 * i, None, 1)).collect();
            PerverseHodgeTable::new(format!("projective_space({n})"), n, Kind::Ordinary)
                .tap_add(&pieces)?
        }
        Standard::DelPezzo(deg) => {
            if !(1..=9).contains(&deg) {
                return Err(CatalogError::BadParameter {
                    kind: "del_pezzo".into(),
                    detail: format!("degree = {deg}, need 1..=9"),
                });
            }
            // second Betti number 10 − degree
            PerverseHodgeTable::new(format!("del_pezzo({deg})"), 2, Kind::Ordinary).tap_add(&[
                (0, 0, 0, None, 1),
                (2, 1, 2, None, u64::from(10 - deg)),
                (4, 2, 4, None, 1),
            ])?
        }
        Standard::K3 => PerverseHodgeTable::new("K3", 2, Kind::Ordinary).tap_add(&[
            (0, 0, 0, None, 1),
            (2, 0, 2, None, 1),
            (2, 1, 2, None, 20),
            (2, 2, 2, None, 1),
            (4, 2, 4, None, 1),
        ])?,
        Standard::CycleInTimesLine(n) => {
            if n < 1 {
                return Err(CatalogError::BadParameter {
                    kind: "cycle_In_times_line".into(),
                    detail: format!("n = {n}, need n >= 1"),
                });
            }
            // Kunneth with compact supports: the cycle contributes Q(0) in
            // degree 0, a weight-0 loop class in degree 1, and Q(-1)^n in
            // degree 2; the line contributes Q(-1) in degree 2.
            PerverseHodgeTable::new(format!("cycle_In_times_line({n})"), 2, Kind::Compact).tap_add(
                &[
                    (2, 1, 2, None, 1),
                    (3, 1, 2, None, 1),
                    (4, 2, 4, None, u64::from(n)),
                ],
            )?
        }
    };
    Ok(table)
}

/// Parse a standard-table key such as `K3`, `torus1`, `curve(2)`,
/// `del_pezzo(4)`, or `cycle_In_times_line(10)`.
pub fn parse_standard_key(key: &str) -> Option<Standard> {
    match key {
        "point" => return Some(Standard::Point),
        "line" => return Some(Standard::Line),
        "torus1" => return Some(Standard::Torus1),
        "elliptic_curve" => return Some(Standard::EllipticCurve),
        "K3" => return Some(Standard::K3),
        _ => {}
    }
    let open = key.find('(')?;
    if !key.ends_with(')') {
        return None;
    }
    let arg: u32 = key[open + 1..key.len() - 1].trim().parse().ok()?;
    match &key[..open] {
        "curve" => Some(Standard::Curve(arg)),
        "projective_space" => Some(Standard::ProjectiveSpace(arg)),
        "del_pezzo" => Some(Standard::DelPezzo(arg)),
        "cycle_In_times_line" => Some(Standard::CycleInTimesLine(arg)),
        _ => None,
    }
}

/// Resolve a key against the built-ins first, then the standard family.
pub fn lookup(key: &str) -> Result<PerverseHodgeTable, CatalogError> {
    match builtin(key) {
        Ok(t) => Ok(t),
        Err(CatalogError::UnknownKey { .. }) => match parse_standard_key(key) {
            Some(kind) => standard(kind),
            None => Err(CatalogError::UnknownKey {
                key: key.to_string(),
                available: format!(
                    "{}; standard: line, torus1, elliptic_curve, K3, curve(g), \
                     projective_space(n), del_pezzo(deg), cycle_In_times_line(n)",
                    BUILTIN_KEYS.join(", ")
                ),
            }),
        },
        Err(e) => Err(e),
    }
}

trait TapAdd {
    fn tap_add(
        self,
        pieces: &[(u32, u32, u32, Option<u32>, u64)],
    ) -> Result<PerverseHodgeTable, MhsError>;
}

impl TapAdd for PerverseHodgeTable {
    fn tap_add(
        mut self,
        pieces: &[(u32, u32, u32, Option<u32>, u64)],
    ) -> Result<PerverseHodgeTable, MhsError> {
        for &(s, a, w, r, m) in pieces {
            self.add_piece(HodgePiece::new(s, a, w, r, m))?;
        }
        Ok(self)
    }
}
