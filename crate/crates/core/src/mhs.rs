//! Graded mixed Hodge tables with optional perverse indices.
//!
//! A table records, per cohomological degree, the dimensions of the
//! associated-graded pieces of the Hodge and weight filtrations (and, when
//! known, of a perverse filtration). Extensions are invisible: only graded
//! multiplicities are stored, merged on identical (degree, hodge, weight,
//! perverse) keys.

use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MhsError {
    #[error("degree {degree} exceeds 2·dim = {max} in table `{table}`")]
    DegreeOutOfRange {
        table: String,
        degree: u32,
        max: u32,
    },
    #[error("piece H^{degree} (hodge {hodge}, weight {weight}): hodge index exceeds weight")]
    HodgeAboveWeight {
        degree: u32,
        hodge: u32,
        weight: u32,
    },
    #[error("piece H^{degree} (hodge {hodge}, weight {weight}) has multiplicity 0")]
    ZeroMultiplicity {
        degree: u32,
        hodge: u32,
        weight: u32,
    },
    #[error("piece H^{degree} (hodge {hodge}, weight {weight}) x{mult} has no perverse index")]
    MissingPerverse {
        degree: u32,
        hodge: u32,
        weight: u32,
        mult: u64,
    },
    #[error("tables have different dimensions: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },
    #[error("tables disagree in dimension or kind; cannot take a disjoint union")]
    IncompatibleUnion,
    #[error("piece H^{degree} (hodge {hodge}, weight {weight}) leaves the dualizable range for dim {dim}")]
    NotDualizable {
        degree: u32,
        hodge: u32,
        weight: u32,
        dim: u32,
    },
    #[error("twist by {twist} makes piece H^{degree} (hodge {hodge}, weight {weight}) negative")]
    NegativeTwist {
        degree: u32,
        hodge: u32,
        weight: u32,
        twist: i64,
    },
    #[error("degree {degree} exceeds dim {dim}: table is not affine-shaped")]
    NotAffine { degree: u32, dim: u32 },
    #[error("PW term u^{u}*t^{t}*w^{w}*p^{p} leaves the valid cone for dim {dim}")]
    OutOfCone {
        u: i64,
        t: i64,
        w: i64,
        p: i64,
        dim: u32,
    },
    #[error("diamond parameters need ph >= 2, got {0}")]
    InvalidDiamond(u64),
    #[error("fiber `{0}` has no irreducible components (need at least 1)")]
    EmptyFiber(String),
}

/// Ordinary or compactly supported cohomology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Ordinary,
    Compact,
}

impl Kind {
    pub fn flipped(self) -> Kind {
        match self {
            Kind::Ordinary => Kind::Compact,
            Kind::Compact => Kind::Ordinary,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Ordinary => "ordinary",
            Kind::Compact => "compact",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Identifying data of a graded piece: degree s, Hodge index a of Gr_F^a,
/// weight w of Gr^W_w, and optional perverse index r of Gr^P_r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PieceKey {
    pub degree: u32,
    pub hodge: u32,
    pub weight: u32,
    pub perverse: Option<u32>,
}

/// A graded piece with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HodgePiece {
    pub degree: u32,
    pub hodge: u32,
    pub weight: u32,
    pub perverse: Option<u32>,
    pub mult: u64,
}

impl HodgePiece {
    pub fn new(degree: u32, hodge: u32, weight: u32, perverse: Option<u32>, mult: u64) -> Self {
        HodgePiece {
            degree,
            hodge,
            weight,
            perverse,
            mult,
        }
    }

    /// Tate piece Q(-k) in the given degree: hodge k, weight 2k.
    pub fn tate(degree: u32, k: u32, perverse: Option<u32>, mult: u64) -> Self {
        Self::new(degree, k, 2 * k, perverse, mult)
    }

    pub fn key(&self) -> PieceKey {
        PieceKey {
            degree: self.degree,
            hodge: self.hodge,
            weight: self.weight,
            perverse: self.perverse,
        }
    }

    /// True when the piece is of Tate type (weight = 2·hodge).
    pub fn is_tate(&self) -> bool {
        self.weight == 2 * self.hodge
    }
}

/// Tate-type summand: `Q(-twist)^mult` placed in one degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TateSummand {
    pub degree: u32,
    pub twist: u32,
    pub mult: u64,
    pub perverse: Option<u32>,
}

impl TateSummand {
    pub fn new(degree: u32, twist: u32, mult: u64) -> Self {
        TateSummand {
            degree,
            twist,
            mult,
            perverse: None,
        }
    }

    pub fn with_perverse(mut self, r: u32) -> Self {
        self.perverse = Some(r);
        self
    }
}

/// Multiset of graded pieces of the cohomology of one space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerverseHodgeTable {
    name: String,
    dim: u32,
    kind: Kind,
    pieces: BTreeMap<PieceKey, u64>,
}

impl PerverseHodgeTable {
    pub fn new(name: impl Into<String>, dim: u32, kind: Kind) -> Self {
        PerverseHodgeTable {
            name: name.into(),
            dim,
            kind,
            pieces: BTreeMap::new(),
        }
    }

    pub fn with_pieces(
        name: impl Into<String>,
        dim: u32,
        kind: Kind,
        pieces: impl IntoIterator<Item = HodgePiece>,
    ) -> Result<Self, MhsError> {
        let mut t = Self::new(name, dim, kind);
        for p in pieces {
            t.add_piece(p)?;
        }
        Ok(t)
    }

    /// Insert a piece, merging multiplicities on identical keys.
    pub fn add_piece(&mut self, piece: HodgePiece) -> Result<(), MhsError> {
        if piece.mult == 0 {
            return Err(MhsError::ZeroMultiplicity {
                degree: piece.degree,
                hodge: piece.hodge,
                weight: piece.weight,
            });
        }
        if piece.hodge > piece.weight {
            return Err(MhsError::HodgeAboveWeight {
                degree: piece.degree,
                hodge: piece.hodge,
                weight: piece.weight,
            });
        }
        if piece.degree > 2 * self.dim {
            return Err(MhsError::DegreeOutOfRange {
                table: self.name.clone(),
                degree: piece.degree,
                max: 2 * self.dim,
            });
        }
        *self.pieces.entry(piece.key()).or_insert(0) += piece.mult;
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Pieces in deterministic (degree, hodge, weight, perverse) order.
    pub fn pieces(&self) -> impl Iterator<Item = HodgePiece> + '_ {
        self.pieces.iter().map(|(k, &m)| HodgePiece {
            degree: k.degree,
            hodge: k.hodge,
            weight: k.weight,
            perverse: k.perverse,
            mult: m,
        })
    }

    pub fn total_dim(&self) -> u64 {
        self.pieces.values().sum()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Equality of (dim, kind, pieces), ignoring the name.
    pub fn same_content(&self, other: &Self) -> bool {
        self.dim == other.dim && self.kind == other.kind && self.pieces == other.pieces
    }

    /// Copy with all perverse indices removed.
    pub fn strip_perverse(&self) -> Self {
        let mut t = Self::new(self.name.clone(), self.dim, self.kind);
        for p in self.pieces() {
            let mut p = p;
            p.perverse = None;
            t.add_piece(p).expect("valid piece stays valid");
        }
        t
    }

    /// Multiset union of two tables of equal dimension and kind.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self, MhsError> {
        if self.dim != other.dim || self.kind != other.kind {
            return Err(MhsError::IncompatibleUnion);
        }
        let mut t = self.clone();
        t.name = format!("{}+{}", self.name, other.name);
        for p in other.pieces() {
            t.add_piece(p)?;
        }
        Ok(t)
    }
}

impl fmt::Display for PerverseHodgeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "table {} (dim {}, {})", self.name, self.dim, self.kind)?;
        for p in self.pieces() {
            write!(f, "  H^{}: ", p.degree)?;
            if p.is_tate() {
                if p.hodge == 0 {
                    write!(f, "Q(0)")?;
                } else {
                    write!(f, "Q(-{})", p.hodge)?;
                }
            } else {
                write!(f, "(F{},W{})", p.hodge, p.weight)?;
            }
            if p.mult != 1 {
                write!(f, "^{}", p.mult)?;
            }
            if let Some(r) = p.perverse {
                write!(f, " [P={r}]")?;
            }
            writeln!(f)?;
        }
        write!(f, "  total dimension: {}", self.total_dim())
    }
}

/// Expand Tate summands `Q(-k)^m` into a table.
pub fn table_from_tate(
    name: impl Into<String>,
    dim: u32,
    kind: Kind,
    summands: &[TateSummand],
) -> Result<PerverseHodgeTable, MhsError> {
    let mut t = PerverseHodgeTable::new(name, dim, kind);
    for s in summands {
        t.add_piece(HodgePiece::tate(s.degree, s.twist, s.perverse, s.mult))?;
    }
    Ok(t)
}

/// Exchange ordinary and compact cohomology: (s, a, w) becomes
/// (2d−s, d−a, 2d−w). Perverse data is dropped.
///
/// A piece is dualizable when a <= d and both w <= 2d and w <= d + a hold;
/// the last keeps the dual's hodge index below its weight.
pub fn poincare_dual(t: &PerverseHodgeTable) -> Result<PerverseHodgeTable, MhsError> {
    let d = t.dim();
    let mut out = PerverseHodgeTable::new(format!("dual({})", t.name()), d, t.kind().flipped());
    for p in t.pieces() {
        if p.hodge > d || p.weight > 2 * d || p.weight > d + p.hodge {
            return Err(MhsError::NotDualizable {
                degree: p.degree,
                hodge: p.hodge,
                weight: p.weight,
                dim: d,
            });
        }
        out.add_piece(HodgePiece::new(
            2 * d - p.degree,
            d - p.hodge,
            2 * d - p.weight,
            None,
            p.mult,
        ))?;
    }
    Ok(out)
}

/// Tate twist by k: (a, w) becomes (a+k, w+2k) on every piece.
pub fn tate_twist(t: &PerverseHodgeTable, k: i64) -> Result<PerverseHodgeTable, MhsError> {
    let mut out = PerverseHodgeTable::new(format!("twist({},{k})", t.name()), t.dim(), t.kind());
    for p in t.pieces() {
        let a = i64::from(p.hodge) + k;
        let w = i64::from(p.weight) + 2 * k;
        if a < 0 || w < 0 {
            return Err(MhsError::NegativeTwist {
                degree: p.degree,
                hodge: p.hodge,
                weight: p.weight,
                twist: k,
            });
        }
        out.add_piece(HodgePiece::new(
            p.degree, a as u32, w as u32, p.perverse, p.mult,
        ))?;
    }
    Ok(out)
}

/// Perverse indices for an affine space: r = dim − degree on every piece.
/// Fails when any piece sits above the middle degree.
pub fn affine_perverse(t: &PerverseHodgeTable) -> Result<PerverseHodgeTable, MhsError> {
    let d = t.dim();
    let mut out = PerverseHodgeTable::new(t.name().to_string(), d, t.kind());
    for p in t.pieces() {
        if p.degree > d {
            return Err(MhsError::NotAffine {
                degree: p.degree,
                dim: d,
            });
        }
        out.add_piece(HodgePiece::new(
            p.degree,
            p.hodge,
            p.weight,
            Some(d - p.degree),
            p.mult,
        ))?;
    }
    Ok(out)
}
