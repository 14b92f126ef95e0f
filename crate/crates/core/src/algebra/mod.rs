//! Finite algebras as operation tables, and exhaustive law checking.

mod commute;
mod lattice;
pub mod lattice_laws;
pub mod law;
mod order;
mod ring;
pub mod ring_laws;
mod table;

pub use commute::{commutator_lattice, commutator_rlse, commutes_lattice, commutes_rlse, orthogonal_rlse};
pub use lattice::OrthoLattice;
pub use lattice_laws::{check_ortholattice, check_orthomodular, check_th1_conditions, lattice_law};
pub use law::{Law, TRIPLE_WARN_SIZE};
pub use order::{derive_order, PartialOrder};
pub use ring::RingLikeAlgebra;
pub use ring_laws::{
    check_boolean_ring, check_characteristic_two, check_meet_semilattice, check_near_rlse, check_rlse, check_specific,
    check_w_axioms, check_w_order_axioms, check_weakly_associative, check_weakly_distributive, ring_law,
    w_axiom_verdicts,
};
pub use table::Table;

use crate::{Error, Result};

/// Default cap on carrier size for algebras and lattices.
pub const DEFAULT_MAX_SIZE: usize = 128;

/// Anything with a carrier `0..size`.
pub trait Finite {
    fn size(&self) -> usize;
}

pub(crate) fn check_names(names: &[String], size: usize) -> Result<()> {
    if names.len() != size {
        return Err(Error::NameCount { expected: size, got: names.len() });
    }
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(Error::DuplicateName(n.clone()));
        }
    }
    Ok(())
}
