//! Exact combinatorics for root data, levels, integral affine Weyl groups,
//! good levels and the block-matching data between a Whittaker category on
//! the affine flag variety and affine category O for the dual group.
//!
//! Everything is exact: rationals are `Ratio<i64>`, lattices carry integer
//! coordinates, and irrational levels are symbolic.
//!
//! Coordinate conventions used throughout the crate:
//!
//! * weights are written in the basis of fundamental weights `ω_i`, so
//!   `Λ_{G_s}` is `ℤ^n`;
//! * coweights are written in the basis of fundamental coweights `ω̌_i`, so
//!   the adjoint coweight lattice is `ℤ^n`;
//! * roots are written in simple-root coordinates and coroots in
//!   simple-coroot coordinates.
//!
//! The Cartan matrix follows `a_ij = ⟨α_j, α̌_i⟩`.

#![allow(clippy::needless_range_loop)]

pub mod affweyl;
pub mod blockmatch;
pub mod cli;
pub mod duality;
pub mod error;
pub mod goodness;
pub mod intweyl;
pub mod levels;
pub mod linalg;
pub mod rootdata;

pub use affweyl::{AffineCoroot, AffineWeylGroup, ExtAffineWeylElement, FiniteWeyl};
pub use error::{Error, Result};
pub use levels::{Level, Sign, TranslationLattice};
pub use linalg::Q;
pub use rootdata::{CartanType, RootDatum};
