use crate::algebra::{OrthoLattice, RingLikeAlgebra};

/// `ab + a(b + 1) = a`.
pub fn commutes_rlse(alg: &RingLikeAlgebra, a: usize, b: usize) -> bool {
    alg.add(alg.mul(a, b), alg.mul(a, alg.comp(b))) == a
}

/// `c(a, b) = (ab + a(b + 1)) + ((a + 1)b + (a + 1)(b + 1))`.
pub fn commutator_rlse(alg: &RingLikeAlgebra, a: usize, b: usize) -> usize {
    let (ca, cb) = (alg.comp(a), alg.comp(b));
    let left = alg.add(alg.mul(a, b), alg.mul(a, cb));
    let right = alg.add(alg.mul(ca, b), alg.mul(ca, cb));
    alg.add(left, right)
}

/// `a(1 + b) = a`.
pub fn orthogonal_rlse(alg: &RingLikeAlgebra, a: usize, b: usize) -> bool {
    alg.mul(a, alg.add(alg.one(), b)) == a
}

/// `(a ∧ b) ∨ (a ∧ b′) = a`.
pub fn commutes_lattice(lat: &OrthoLattice, a: usize, b: usize) -> bool {
    lat.join(lat.meet(a, b), lat.meet(a, lat.comp(b))) == a
}

/// `(a ∧ b) ∨ (a ∧ b′) ∨ (a′ ∧ b) ∨ (a′ ∧ b′)`.
pub fn commutator_lattice(lat: &OrthoLattice, a: usize, b: usize) -> usize {
    let (ca, cb) = (lat.comp(a), lat.comp(b));
    let left = lat.join(lat.meet(a, b), lat.meet(a, cb));
    let right = lat.join(lat.meet(ca, b), lat.meet(ca, cb));
    lat.join(left, right)
}
