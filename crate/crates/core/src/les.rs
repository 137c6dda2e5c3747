//! Slot-by-slot solver for long exact sequences of mixed Hodge structures.
//!
//! Strictness of morphisms of mixed Hodge structures makes every
//! (hodge, weight)-graded piece of such a sequence exact on its own, so a
//! sequence with two known tables splits into independent integer problems:
//! along each slot, dim at every node must equal incoming rank + outgoing
//! rank, with zeros flanking both ends. The solver enumerates every rank
//! assignment consistent with the known dims (restricted by any rank hints)
//! and reports an unknown as forced only when all assignments agree;
//! otherwise the admissible values are reported, never guessed.

use crate::mhs::{HodgePiece, Kind, MhsError, PerverseHodgeTable};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LesError {
    #[error("slot ({hodge},{weight}) admits no exact rank assignment")]
    Inconsistent { hodge: u32, weight: u32 },
    #[error("slot ({hodge},{weight}) has consecutive unknowns; dimensions are unbounded")]
    Unbounded { hodge: u32, weight: u32 },
    #[error("rank hint on edge {edge} at degree {degree} matches no arrow of pattern {pattern}")]
    BadHint {
        edge: Edge,
        degree: u32,
        pattern: Pattern,
    },
    #[error("hint edge index {0} out of range")]
    BadEdgeIndex(usize),
    #[error("forced unknown at negative degree")]
    NegativeDegree,
    #[error(transparent)]
    Table(#[from] MhsError),
}

/// The two supported sequence shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    /// … -> X^i -> A^i -> B^i -> X^{i+1} -> … (compact supports; X unknown).
    TripleCompact,
    /// … -> B^{i−2}(−1) -> A^i -> X^i -> B^{i−1}(−1) -> … with A the total
    /// space, B the divisor (Tate-twisted once by the Gysin arrow), X unknown.
    Residue,
}

impl Pattern {
    pub fn as_str(self) -> &'static str {
        match self {
            Pattern::TripleCompact => "triple-compact",
            Pattern::Residue => "residue",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "triple-compact" => Some(Pattern::TripleCompact),
            "residue" => Some(Pattern::Residue),
            _ => None,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which table a node belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Role {
    X,
    A,
    B,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::X => write!(f, "X"),
            Role::A => write!(f, "A"),
            Role::B => write!(f, "B"),
        }
    }
}

/// A node of a slot sequence: known dimension or unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotEntry {
    Known(u64),
    Unknown,
}

/// One node of a laid-out sequence. Degrees are signed so that the virtual
/// zero divisor node below degree 0 in the residue pattern has a home.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqNode {
    pub role: Role,
    pub degree: i64,
    pub value: SlotEntry,
}

impl SeqNode {
    pub fn known(role: Role, degree: i64, dim: u64) -> Self {
        SeqNode {
            role,
            degree,
            value: SlotEntry::Known(dim),
        }
    }

    pub fn unknown(role: Role, degree: i64) -> Self {
        SeqNode {
            role,
            degree,
            value: SlotEntry::Unknown,
        }
    }

    pub fn label(&self) -> String {
        format!("{}^{}", self.role, self.degree)
    }
}

/// The (hodge, weight) pair indexing one graded sub-sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Slot {
    pub hodge: u32,
    pub weight: u32,
}

/// One graded piece of the sequence, laid out in arrow order and flanked
/// conceptually by zeros. Edge i joins `entries[i]` to `entries[i+1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotSequence {
    pub slot: Slot,
    pub entries: Vec<SeqNode>,
}

/// Edges a rank hint can name; the first three belong to the triple-compact
/// pattern, the rest to the residue pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edge {
    AToB,
    BToX,
    XToA,
    AToX,
    XToB,
    BToA,
}

impl Edge {
    pub fn as_str(self) -> &'static str {
        match self {
            Edge::AToB => "A->B",
            Edge::BToX => "B->X",
            Edge::XToA => "X->A",
            Edge::AToX => "A->X",
            Edge::XToB => "X->B",
            Edge::BToA => "B->A",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "A->B" => Some(Edge::AToB),
            "B->X" => Some(Edge::BToX),
            "X->A" => Some(Edge::XToA),
            "A->X" => Some(Edge::AToX),
            "X->B" => Some(Edge::XToB),
            "B->A" => Some(Edge::BToA),
            _ => None,
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A known rank of one arrow, addressed by slot, the source node's degree,
/// and the edge kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankHint {
    pub hodge: u32,
    pub weight: u32,
    pub degree: u32,
    pub edge: Edge,
    pub rank: u64,
}

/// A long exact sequence problem: a pattern, two known tables, an unknown
/// one, and optional rank hints.
#[derive(Debug, Clone)]
pub struct LesProblem {
    pub pattern: Pattern,
    pub table_a: PerverseHodgeTable,
    pub table_b: PerverseHodgeTable,
    pub hints: Vec<RankHint>,
}

/// Hint pinned to an edge index of one slot sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeHint {
    pub edge_index: usize,
    pub rank: u64,
}

/// Result for a single unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnknownOutcome {
    Forced(u64),
    Admissible(BTreeSet<u64>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownReport {
    pub label: String,
    pub degree: i64,
    pub outcome: UnknownOutcome,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotStatus {
    Forced,
    Hinted,
    Underdetermined,
}

impl fmt::Display for SlotStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlotStatus::Forced => write!(f, "forced"),
            SlotStatus::Hinted => write!(f, "hinted"),
            SlotStatus::Underdetermined => write!(f, "underdetermined"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotSolution {
    pub slot: Slot,
    pub status: SlotStatus,
    pub unknowns: Vec<UnknownReport>,
}

/// Assembled solution of a problem.
#[derive(Debug, Clone)]
pub struct Solution {
    /// Table of forced unknowns (perverse data absent). Underdetermined
    /// slots contribute nothing here; see the per-slot reports.
    pub solved: PerverseHodgeTable,
    pub slots: Vec<SlotSolution>,
    pub fully_determined: bool,
}

fn max_degree(t: &PerverseHodgeTable) -> i64 {
    t.pieces().map(|p| i64::from(p.degree)).max().unwrap_or(0)
}

/// Decompose a problem into one sequence per (hodge, weight) occurring in a
/// known table or a hint. Degrees run from 0 to one step past any data, so
/// the zero flanks are honest.
pub fn split_slots(problem: &LesProblem) -> Vec<SlotSequence> {
    let mut slots: BTreeSet<Slot> = BTreeSet::new();
    let mut dims_a: BTreeMap<(Slot, i64), u64> = BTreeMap::new();
    let mut dims_b: BTreeMap<(Slot, i64), u64> = BTreeMap::new();
    for p in problem.table_a.pieces() {
        let slot = Slot {
            hodge: p.hodge,
            weight: p.weight,
        };
        slots.insert(slot);
        *dims_a.entry((slot, i64::from(p.degree))).or_insert(0) += p.mult;
    }
    for p in problem.table_b.pieces() {
        let slot = match problem.pattern {
            Pattern::TripleCompact => Slot {
                hodge: p.hodge,
                weight: p.weight,
            },
            Pattern::Residue => Slot {
                hodge: p.hodge + 1,
                weight: p.weight + 2,
            },
        };
        slots.insert(slot);
        *dims_b.entry((slot, i64::from(p.degree))).or_insert(0) += p.mult;
    }
    for h in &problem.hints {
        slots.insert(Slot {
            hodge: h.hodge,
            weight: h.weight,
        });
    }

    let top = match problem.pattern {
        Pattern::TripleCompact => {
            max_degree(&problem.table_a)
                .max(max_degree(&problem.table_b))
                .max(2 * i64::from(problem.table_a.dim()))
                + 1
        }
        Pattern::Residue => max_degree(&problem.table_a)
            .max(max_degree(&problem.table_b) + 2)
            .max(2 * i64::from(problem.table_a.dim())),
    };

    let mut out = Vec::new();
    for slot in slots {
        let a = |i: i64| *dims_a.get(&(slot, i)).unwrap_or(&0);
        let b = |i: i64| *dims_b.get(&(slot, i)).unwrap_or(&0);
        let mut entries = Vec::new();
        match problem.pattern {
            Pattern::TripleCompact => {
                // … -> X^i -> A^i -> B^i -> X^{i+1} -> …
                for i in 0..=top {
                    entries.push(SeqNode::unknown(Role::X, i));
                    entries.push(SeqNode::known(Role::A, i, a(i)));
                    entries.push(SeqNode::known(Role::B, i, b(i)));
                }
            }
            Pattern::Residue => {
                // … -> A^i -> X^i -> B^{i−1} -> A^{i+1} -> …; the node below
                // degree 0 is an honest zero.
                for i in 0..=top {
                    entries.push(SeqNode::known(Role::A, i, a(i)));
                    entries.push(SeqNode::unknown(Role::X, i));
                    entries.push(SeqNode::known(Role::B, i - 1, b(i - 1)));
                }
            }
        }
        out.push(SlotSequence { slot, entries });
    }
    out
}

/// Locate the edge index a hint refers to, given the pattern's arrows.
pub fn hint_edge_index(
    seq: &SlotSequence,
    pattern: Pattern,
    edge: Edge,
    degree: u32,
) -> Result<usize, LesError> {
    let d = i64::from(degree);
    let want: Option<(Role, i64, Role, i64)> = match (pattern, edge) {
        (Pattern::TripleCompact, Edge::XToA) => Some((Role::X, d, Role::A, d)),
        (Pattern::TripleCompact, Edge::AToB) => Some((Role::A, d, Role::B, d)),
        (Pattern::TripleCompact, Edge::BToX) => Some((Role::B, d, Role::X, d + 1)),
        (Pattern::Residue, Edge::AToX) => Some((Role::A, d, Role::X, d)),
        (Pattern::Residue, Edge::XToB) => Some((Role::X, d, Role::B, d - 1)),
        (Pattern::Residue, Edge::BToA) => Some((Role::B, d, Role::A, d + 2)),
        _ => None,
    };
    let (fr, fd, tr, td) = want.ok_or(LesError::BadHint {
        edge,
        degree,
        pattern,
    })?;
    for i in 0..seq.entries.len().saturating_sub(1) {
        let s = &seq.entries[i];
        let t = &seq.entries[i + 1];
        if s.role == fr && s.degree == fd && t.role == tr && t.degree == td {
            return Ok(i);
        }
    }
    Err(LesError::BadHint {
        edge,
        degree,
        pattern,
    })
}

struct SlotSearch<'a> {
    entries: &'a [SeqNode],
    pinned: &'a BTreeMap<usize, u64>,
    unknown_positions: &'a [usize],
    admissible: Vec<BTreeSet<u64>>,
    dims: Vec<u64>,
    found_any: bool,
}

impl SlotSearch<'_> {
    /// Walk positions left to right; `rank_in` is the rank of the arrow
    /// entering `pos`. The flanks pin the first incoming and last outgoing
    /// ranks to zero.
    fn dfs(&mut self, pos: usize, rank_in: u64) {
        if pos == self.entries.len() {
            if rank_in == 0 {
                self.found_any = true;
                for (i, &p) in self.unknown_positions.iter().enumerate() {
                    self.admissible[i].insert(self.dims[p]);
                }
            }
            return;
        }
        match self.entries[pos].value {
            SlotEntry::Known(d) => {
                if d < rank_in {
                    return;
                }
                let rank_out = d - rank_in;
                if let Some(&want) = self.pinned.get(&pos) {
                    if want != rank_out {
                        return;
                    }
                }
                self.dims[pos] = d;
                self.dfs(pos + 1, rank_out);
            }
            SlotEntry::Unknown => {
                let cap = if pos + 1 == self.entries.len() {
                    Some(0)
                } else {
                    match self.entries[pos + 1].value {
                        SlotEntry::Known(d2) => Some(d2),
                        SlotEntry::Unknown => None,
                    }
                };
                let (lo, hi) = match (self.pinned.get(&pos), cap) {
                    (Some(&want), Some(c)) if want <= c => (want, want),
                    (Some(&want), None) => (want, want),
                    (Some(_), Some(_)) => return,
                    (None, Some(c)) => (0, c),
                    // guarded against earlier; nothing sound to enumerate
                    (None, None) => return,
                };
                for rank_out in lo..=hi {
                    self.dims[pos] = rank_in + rank_out;
                    self.dfs(pos + 1, rank_out);
                }
            }
        }
    }
}

/// Enumerate every exact rank assignment of one slot sequence, restricted by
/// the hints, and classify each unknown as forced or a set of admissible
/// values.
pub fn solve_slot(seq: &SlotSequence, hints: &[EdgeHint]) -> Result<SlotSolution, LesError> {
    let n = seq.entries.len();
    let mut pinned: BTreeMap<usize, u64> = BTreeMap::new();
    for h in hints {
        if n == 0 || h.edge_index + 1 >= n {
            return Err(LesError::BadEdgeIndex(h.edge_index));
        }
        if let Some(prev) = pinned.insert(h.edge_index, h.rank) {
            if prev != h.rank {
                return Err(LesError::Inconsistent {
                    hodge: seq.slot.hodge,
                    weight: seq.slot.weight,
                });
            }
        }
    }

    // Two adjacent unknowns with a free edge between them admit arbitrarily
    // large dimensions; refuse rather than enumerate forever.
    for i in 0..n.saturating_sub(1) {
        if seq.entries[i].value == SlotEntry::Unknown
            && seq.entries[i + 1].value == SlotEntry::Unknown
            && !pinned.contains_key(&i)
        {
            return Err(LesError::Unbounded {
                hodge: seq.slot.hodge,
                weight: seq.slot.weight,
            });
        }
    }

    let unknown_positions: Vec<usize> = seq
        .entries
        .iter()
        .enumerate()
        .filter(|(_, e)| e.value == SlotEntry::Unknown)
        .map(|(i, _)| i)
        .collect();

    let mut search = SlotSearch {
        entries: &seq.entries,
        pinned: &pinned,
        unknown_positions: &unknown_positions,
        admissible: vec![BTreeSet::new(); unknown_positions.len()],
        dims: vec![0u64; n],
        found_any: false,
    };
    search.dfs(0, 0);

    if n > 0 && !search.found_any {
        return Err(LesError::Inconsistent {
            hodge: seq.slot.hodge,
            weight: seq.slot.weight,
        });
    }

    let mut unknowns = Vec::new();
    let mut all_forced = true;
    for (i, &p) in unknown_positions.iter().enumerate() {
        let values = &search.admissible[i];
        let outcome = if values.len() == 1 {
            UnknownOutcome::Forced(*values.iter().next().unwrap())
        } else {
            all_forced = false;
            UnknownOutcome::Admissible(values.clone())
        };
        unknowns.push(UnknownReport {
            label: seq.entries[p].label(),
            degree: seq.entries[p].degree,
            outcome,
        });
    }
    let status = if !all_forced {
        SlotStatus::Underdetermined
    } else if hints.is_empty() {
        SlotStatus::Forced
    } else {
        SlotStatus::Hinted
    };
    Ok(SlotSolution {
        slot: seq.slot,
        status,
        unknowns,
    })
}

/// Solve a whole problem: split into slots, solve each, and assemble the
/// forced values into a table. Underdetermined slots keep their admissible
/// ranges and leave no trace in the table.
pub fn solve(problem: &LesProblem) -> Result<Solution, LesError> {
    let sequences = split_slots(problem);
    let kind = match problem.pattern {
        Pattern::TripleCompact => Kind::Compact,
        Pattern::Residue => Kind::Ordinary,
    };
    let mut solved = PerverseHodgeTable::new("solved", problem.table_a.dim(), kind);
    let mut slots = Vec::new();
    let mut fully_determined = true;
    for seq in &sequences {
        let mut edge_hints = Vec::new();
        for h in &problem.hints {
            if h.hodge == seq.slot.hodge && h.weight == seq.slot.weight {
                let idx = hint_edge_index(seq, problem.pattern, h.edge, h.degree)?;
                edge_hints.push(EdgeHint {
                    edge_index: idx,
                    rank: h.rank,
                });
            }
        }
        let sol = solve_slot(seq, &edge_hints)?;
        for u in &sol.unknowns {
            match u.outcome {
                UnknownOutcome::Forced(0) => {}
                UnknownOutcome::Forced(v) => {
                    let degree = u32::try_from(u.degree).map_err(|_| LesError::NegativeDegree)?;
                    solved.add_piece(HodgePiece::new(
                        degree,
                        seq.slot.hodge,
                        seq.slot.weight,
                        None,
                        v,
                    ))?;
                }
                UnknownOutcome::Admissible(_) => fully_determined = false,
            }
        }
        slots.push(sol);
    }
    Ok(Solution {
        solved,
        slots,
        fully_determined,
    })
}

/// Exactness oracle: `dims[i] = ranks[i] + ranks[i+1]` with zero flanks.
pub fn check_exact(dims: &[u64], ranks: &[u64]) -> bool {
    if dims.is_empty() {
        return ranks.iter().all(|&r| r == 0);
    }
    if ranks.len() != dims.len() + 1 {
        return false;
    }
    if ranks[0] != 0 || ranks[ranks.len() - 1] != 0 {
        return false;
    }
    dims.iter()
        .enumerate()
        .all(|(i, &d)| d == ranks[i] + ranks[i + 1])
}
