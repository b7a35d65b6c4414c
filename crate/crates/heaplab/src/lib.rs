//! Exact combinatorics of colored posets and the Lie-algebra
//! representations carried by their lattices of filter-ideal splits.
//!
//! The crate builds, for a finite simple graph of colors and a colored
//! locally finite poset (finite, or Z-periodic as used for full heaps),
//! the edge-colored distributive lattice of splits, the color
//! raising/lowering/diagonal operators on the free vector space over the
//! splits, and the combinatorial weight function driving the diagonal
//! actions. It decides the eight coloring properties and cross-checks,
//! instance by instance and by exhaustive small-case search, the
//! equivalences between coloring properties and representation
//! properties.
//!
//! Everything is exact: integer and rational arithmetic only.

pub mod classify;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod heap;
pub mod io;
pub mod operators;
pub mod poset;
pub mod properties;
pub mod splits;
pub mod tailed;
pub mod vector;
pub mod weights;

pub use error::{Error, Result};
pub use graph::{ColorGraph, ColorId};
pub use heap::{Layer, PeriodicHeap, PeriodicSplit};
pub use poset::{ColorPolicy, ElemId, FinitePoset};
pub use splits::SplitLattice;
pub use vector::{Scalar, SplitVector};
