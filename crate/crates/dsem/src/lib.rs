//! Combinatorial toolkit for doubly semi-equivelar maps (DSEMs): maps whose
//! vertices realize exactly two face-sequences, each class with a fixed link
//! pattern.
//!
//! The crate covers:
//! - exact zero-curvature enumeration of face-sequences ([`curvature`]);
//! - dart-based combinatorial maps with exact isomorphism ([`map`]);
//! - M(i,j,k) torus constructions for the four classified types and their
//!   cycle-type classification ([`torus`], [`cycles`], [`tables`]);
//! - bounded-radius local existence search for face-sequence pairs
//!   ([`search`]);
//! - a data catalog of the 22 planar types with automatic verification
//!   ([`catalog`]).
//!
//! Sweeps are data-parallel (rayon) behind the `parallel` feature, with an
//! identical sequential path used when the feature is off or the worker
//! count is pinned to 1.

pub mod catalog;
pub mod curvature;
pub mod cycles;
pub mod error;
pub mod geom;
pub mod map;
pub mod par;
pub mod search;
pub mod seq;
pub mod tables;
pub mod torus;

pub use error::DsemError;
pub use seq::{FaceSeq, LinkLetter, LinkSeq, VertexClass};
