//! Laws over [`OrthoLattice`].

use crate::algebra::law::{check_all, Law};
use crate::algebra::{Finite, OrthoLattice, Table};
use crate::Verdict;

type L = OrthoLattice;

pub static MEET_COMM: Law<L> = Law::new("meet-comm", 2, |l, v| Some((l.meet(v[0], v[1]), l.meet(v[1], v[0]))));
pub static JOIN_COMM: Law<L> = Law::new("join-comm", 2, |l, v| Some((l.join(v[0], v[1]), l.join(v[1], v[0]))));
pub static MEET_ASSOC: Law<L> = Law::new("meet-assoc", 3, |l, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    Some((l.meet(x, l.meet(y, z)), l.meet(l.meet(x, y), z)))
});
pub static JOIN_ASSOC: Law<L> = Law::new("join-assoc", 3, |l, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    Some((l.join(x, l.join(y, z)), l.join(l.join(x, y), z)))
});
/// x ∧ (x ∨ y) = x
pub static ABSORB_MEET: Law<L> = Law::new("absorb-meet", 2, |l, v| Some((l.meet(v[0], l.join(v[0], v[1])), v[0])));
/// x ∨ (x ∧ y) = x
pub static ABSORB_JOIN: Law<L> = Law::new("absorb-join", 2, |l, v| Some((l.join(v[0], l.meet(v[0], v[1])), v[0])));
pub static BOTTOM: Law<L> = Law::new("bottom", 1, |l, v| Some((l.meet(v[0], l.zero()), l.zero())));
pub static TOP: Law<L> = Law::new("top", 1, |l, v| Some((l.join(v[0], l.one()), l.one())));
pub static INVOLUTION: Law<L> = Law::new("involution", 1, |l, v| Some((l.comp(l.comp(v[0])), v[0])));
pub static COMP_MEET: Law<L> = Law::new("comp-meet", 1, |l, v| Some((l.meet(v[0], l.comp(v[0])), l.zero())));
pub static COMP_JOIN: Law<L> = Law::new("comp-join", 1, |l, v| Some((l.join(v[0], l.comp(v[0])), l.one())));
/// (x ∨ y)′ = x′ ∧ y′
pub static DE_MORGAN: Law<L> = Law::new("de-morgan", 2, |l, v| {
    let (x, y) = (v[0], v[1]);
    Some((l.comp(l.join(x, y)), l.meet(l.comp(x), l.comp(y))))
});
/// x ≤ y ⇒ y′ ≤ x′, reported as y′ ∧ x′ = y′
pub static ANTITONE: Law<L> = Law::new("antitone", 2, |l, v| {
    let (x, y) = (v[0], v[1]);
    l.leq(x, y).then(|| (l.meet(l.comp(y), l.comp(x)), l.comp(y)))
});
/// x ≤ y ⇒ x ∨ (x′ ∧ y) = y
pub static ORTHOMODULAR: Law<L> = Law::new("orthomodular", 2, |l, v| {
    let (x, y) = (v[0], v[1]);
    l.leq(x, y).then(|| (l.join(x, l.meet(l.comp(x), y)), y))
});
/// x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)
pub static DISTRIB: Law<L> = Law::new("distributive", 3, |l, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    Some((l.meet(x, l.join(y, z)), l.join(l.meet(x, y), l.meet(x, z))))
});

static ORTHOLATTICE: &[&Law<L>] = &[
    &MEET_COMM,
    &JOIN_COMM,
    &MEET_ASSOC,
    &JOIN_ASSOC,
    &ABSORB_MEET,
    &ABSORB_JOIN,
    &BOTTOM,
    &TOP,
    &INVOLUTION,
    &COMP_MEET,
    &COMP_JOIN,
    &DE_MORGAN,
    &ANTITONE,
];

pub fn lattice_law(name: &str) -> Option<&'static Law<L>> {
    ORTHOLATTICE.iter().chain([&&ORTHOMODULAR, &&DISTRIB]).copied().find(|l| l.name == name)
}

/// Bounded lattice with an antitone involutive complementation.
pub fn check_ortholattice(lat: &L) -> Verdict {
    check_all(lat, "ortholattice", ORTHOLATTICE)
}

/// Ortholattice laws first, then the orthomodular law.
pub fn check_orthomodular(lat: &L) -> Verdict {
    let v = check_ortholattice(lat);
    if !v.passed {
        return v;
    }
    ORTHOMODULAR.check(lat)
}

/// A lattice paired with a candidate addition table.
pub struct WithAddition<'a> {
    pub lat: &'a L,
    pub plus: &'a Table,
}

impl Finite for WithAddition<'_> {
    fn size(&self) -> usize {
        self.lat.size()
    }
}

/// `+` commutative, `x + 1 = x′`, and `x ⊥ y ⇒ x + y = x ∨ y`, in that order.
pub fn addition_laws<'a>() -> [Law<WithAddition<'a>>; 3] {
    [
        Law::new("addition-comm", 2, |w, v| Some((w.plus.get(v[0], v[1]), w.plus.get(v[1], v[0])))),
        Law::new("addition-one", 1, |w, v| Some((w.plus.get(v[0], w.lat.one()), w.lat.comp(v[0])))),
        Law::new("addition-orthogonal", 2, |w, v| {
            let (x, y) = (v[0], v[1]);
            w.lat.orthogonal(x, y).then(|| (w.plus.get(x, y), w.lat.join(x, y)))
        }),
    ]
}

/// Conditions under which `(L, +, ∧, 0, 1)` is an RLSE: `+` commutative,
/// `x + 1 = x′`, and `x + y = x ∨ y` whenever `x ⊥ y`.
///
/// If `lat` is not orthomodular, that failure is returned instead.
///
/// # Panics
///
/// If `plus` is not a table over the lattice's carrier.
pub fn check_th1_conditions(lat: &L, plus: &Table) -> Verdict {
    assert_eq!(lat.size(), plus.size(), "addition table over a different carrier");
    let v = check_orthomodular(lat);
    if !v.passed {
        return v;
    }
    let ctx = WithAddition { lat, plus };
    let [comm, one, orth] = addition_laws();
    check_all(&ctx, "addition-conditions", &[&comm, &one, &orth])
}
