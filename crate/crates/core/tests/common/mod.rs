#![allow(dead_code)]

use rlse_core::catalog::{
    boolean_events, boolean_lattice, boolean_ring, concrete_mo2_events, four_element_events, mo_lattice,
    specific_rlse_mo, weakly_associative_mo2, PlusExtensions,
};
use rlse_core::transforms::ring_of_lattice;
use rlse_core::{EventFamily, OrthoLattice, RingLikeAlgebra};

pub fn catalog_lattices() -> Vec<(String, OrthoLattice)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push((format!("2^{n}"), boolean_lattice(n).unwrap()));
        out.push((format!("MO{n}"), mo_lattice(n as usize).unwrap()));
    }
    out
}

pub fn catalog_specific() -> Vec<(String, RingLikeAlgebra)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push((format!("boolean ring 2^{n}"), boolean_ring(n).unwrap()));
        out.push((format!("R(MO{n})"), specific_rlse_mo(n as usize).unwrap()));
        out.push((format!("R(2^{n})"), ring_of_lattice(&boolean_lattice(n).unwrap()).unwrap()));
    }
    out
}

pub fn catalog_rlses() -> Vec<(String, RingLikeAlgebra)> {
    let mut out = catalog_specific();
    for c in 0..6 {
        out.push((format!("weakly associative MO2, c = {c}"), weakly_associative_mo2(c).unwrap()));
    }
    out
}

/// Every extension over 2² and a strided sample of those over MO₂.
pub fn enumerated(stride: usize) -> Vec<RingLikeAlgebra> {
    let small = PlusExtensions::new(&boolean_lattice(2).unwrap()).unwrap();
    let mo2 = PlusExtensions::new(&mo_lattice(2).unwrap()).unwrap();
    let mut out: Vec<RingLikeAlgebra> = small.iter().collect();
    out.extend((0..mo2.len()).step_by(stride).map(|k| mo2.get(k).unwrap()));
    out
}

pub fn ambients() -> Vec<(String, EventFamily)> {
    let mut out = vec![
        ("concrete MO2".to_string(), concrete_mo2_events().unwrap()),
        ("four-element Boolean".to_string(), four_element_events().unwrap()),
    ];
    for n in 1..=3 {
        out.push((format!("2^{{1..{n}}}"), boolean_events(n).unwrap()));
    }
    out
}

/// Least upper bound in the order `x ≤ y ⇔ xy = x`, found by search.
pub fn lub(alg: &RingLikeAlgebra, x: usize, y: usize) -> usize {
    let n = alg.size();
    let upper: Vec<usize> = (0..n).filter(|&z| alg.leq(x, z) && alg.leq(y, z)).collect();
    *upper.iter().find(|&&g| upper.iter().all(|&z| alg.leq(g, z))).expect("join exists")
}
