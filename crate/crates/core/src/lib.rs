//! Finite ring-like structures of events (RLSEs), orthomodular lattices and
//! algebras of numerical events.
//!
//! Every structure in this crate is an explicit finite model: binary
//! operations are operation tables over the carrier `0..size`, numerical
//! events are vectors of exact rationals. All axiom checks are exhaustive and
//! report a concrete witness when they fail.
//!
//! The crate is organised as follows:
//!
//! * [`algebra`] holds the table-backed structures and the law-checking engine.
//! * [`transforms`] converts between RLSEs and orthomodular lattices.
//! * [`events`] covers numerical events, algebras of S-probabilities and the
//!   max–min event structure.
//! * [`embeddability`] decides whether a set of events fits inside a Boolean
//!   subalgebra of an ambient family.
//! * [`catalog`] builds the standard examples and enumerates RLSE additions.

#![forbid(unsafe_code)]

pub mod algebra;
pub mod catalog;
pub mod embeddability;
mod error;
pub mod events;
mod rational;
pub mod transforms;
mod verdict;

pub use algebra::{derive_order, OrthoLattice, PartialOrder, RingLikeAlgebra, Table, DEFAULT_MAX_SIZE};
pub use error::{Error, Result};
pub use events::{EventFamily, NumericalEvent, StateSpace};
pub use rational::{parse_rational, ratio, Rational};
pub use verdict::{Value, Verdict, Witness};
