//! Combinatorial Auslander-Reiten calculus for path algebras of type A_n.
//!
//! The crate provides:
//!
//! * [`quiver`] — type A quivers with arbitrary orientation and the
//!   interval model of their indecomposables;
//! * [`grid`] — the AR quiver embedded in Z x [n] with all Hom/Ext
//!   queries answered by ray/coray arithmetic;
//! * [`exact`] — relative exact structures F_X, the diamond structure,
//!   relative projectives, resolutions, and the 0-Auslander verdict;
//! * [`mar`] — enumeration and mutation of maximal almost rigid modules,
//!   the Cambrian poset, and the polygon flip-graph bijection;
//! * [`oracle`] — an independent exact linear-algebra engine over the
//!   rationals (or a prime field) that cross-checks everything above and
//!   reproduces the type D and gentle counterexamples;
//! * [`verify`] — the bundled verification sweep.
//!
//! The crate is `no_std` (with `alloc`); IO, CLI, and serialization live
//! in the companion `mar-tools` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod exact;
pub mod grid;
pub mod mar;
pub mod oracle;
pub mod quiver;
pub mod verify;

pub use grid::{ArGrid, GridPoint, PairClass, RayDir, SesClass, SesKind};
pub use quiver::{ArrowDir, Interval, ModuleSum, QuiverError, TypeAQuiver};
