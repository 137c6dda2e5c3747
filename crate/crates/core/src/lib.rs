//! Exact symbolic tools for graded mixed Hodge tables of mirror pairs.
//!
//! The crate has five parts:
//! - [`poly`], [`rational`], [`parse`]: sparse Laurent polynomials with
//!   arbitrary-precision integer coefficients, rational expressions with
//!   cross-multiplication equality, an expression parser, and period
//!   sequences (constant terms of powers).
//! - [`mhs`]: tables of (degree, hodge, weight, perverse, multiplicity)
//!   data with duality, Tate twists, and the affine perverse rule.
//! - [`pw`]: the four-variable perverse-weight polynomial of a table, the
//!   mirror exponent transform, and pair verification.
//! - [`grid`]: Hodge-number grids, mirror-type grid comparisons, and the
//!   threefold relative diamond.
//! - [`les`]: a slot-by-slot dimension solver for long exact sequences.
//! - [`catalog`], [`files`]: built-in tables and the JSON file formats.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so everything here is safe to use from multiple threads.

pub mod catalog;
pub mod files;
pub mod grid;
pub mod les;
pub mod mhs;
pub mod parse;
pub mod poly;
pub mod pw;
pub mod rational;

pub use catalog::{builtin, builtin_entry, builtin_keys, standard, Standard};
pub use grid::{
    check_grid_equality, fpq_diamond, hodge_numbers, k_y_from_fibers, DiamondParams, GridLabel,
    GridReport, GridTransform, HodgeGrid,
};
pub use les::{
    check_exact, solve, solve_slot, split_slots, LesProblem, Pattern, RankHint, SlotSequence,
    Solution,
};
pub use mhs::{
    affine_perverse, poincare_dual, table_from_tate, tate_twist, HodgePiece, Kind, MhsError,
    PerverseHodgeTable, TateSummand,
};
pub use parse::{parse_expr, parse_laurent, ParseError};
pub use poly::{period_sequence, period_sequence_opts, LaurentPoly, MonomialKey, PolyError};
pub use pw::{
    mirror_transform, parse_pw, pw_polynomial, verify_mirror_pair, MirrorReport, PWPolynomial,
    PwTerm,
};
pub use rational::{substitute, RationalExpr};
