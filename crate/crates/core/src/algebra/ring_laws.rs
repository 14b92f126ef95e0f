//! Laws over [`RingLikeAlgebra`] and the checks built from them.
//!
//! Juxtaposition is `·`, `1` is the top constant. Every check scans all
//! tuples, so a failing verdict names the lexicographically first violation.

use crate::algebra::law::{check_all, Law};
use crate::algebra::RingLikeAlgebra;
use crate::Verdict;

type R = RingLikeAlgebra;

pub static MEET_ASSOC: Law<R> = Law::new("meet-assoc", 3, |a, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    Some((a.mul(x, a.mul(y, z)), a.mul(a.mul(x, y), z)))
});
pub static MEET_COMM: Law<R> = Law::new("meet-comm", 2, |a, v| Some((a.mul(v[0], v[1]), a.mul(v[1], v[0]))));
pub static MEET_IDEM: Law<R> = Law::new("meet-idem", 1, |a, v| Some((a.mul(v[0], v[0]), v[0])));
pub static MEET_ONE: Law<R> = Law::new("meet-one", 1, |a, v| Some((a.mul(v[0], a.one()), v[0])));
pub static MEET_ZERO: Law<R> = Law::new("meet-zero", 1, |a, v| Some((a.mul(v[0], a.zero()), a.zero())));

/// x + y = y + x
pub static R1: Law<R> = Law::new("R1", 2, |a, v| Some((a.add(v[0], v[1]), a.add(v[1], v[0]))));

/// (xy + 1)(x + 1) + 1 = x
pub static R2: Law<R> = Law::new("R2", 2, |a, v| {
    let (x, y) = (v[0], v[1]);
    Some((a.comp(a.mul(a.comp(a.mul(x, y)), a.comp(x))), x))
});

/// ((xy + 1)x + 1)x = xy
pub static R3: Law<R> = Law::new("R3", 2, |a, v| {
    let (x, y) = (v[0], v[1]);
    let xy = a.mul(x, y);
    Some((a.mul(a.comp(a.mul(a.comp(xy), x)), x), xy))
});

/// xy + (x + 1) = (xy + 1)x + 1
pub static R4: Law<R> = Law::new("R4", 2, |a, v| {
    let (x, y) = (v[0], v[1]);
    let xy = a.mul(x, y);
    Some((a.add(xy, a.comp(x)), a.comp(a.mul(a.comp(xy), x))))
});

/// x + y = x(y + 1) + (x + 1)y
pub static R5: Law<R> = Law::new("R5", 2, |a, v| {
    let (x, y) = (v[0], v[1]);
    Some((a.add(x, y), a.add(a.mul(x, a.comp(y)), a.mul(a.comp(x), y))))
});

/// (xy + 1)x = xy + x
pub static R6: Law<R> = Law::new("R6", 2, |a, v| {
    let (x, y) = (v[0], v[1]);
    let xy = a.mul(x, y);
    Some((a.mul(a.comp(xy), x), a.add(xy, x)))
});

/// (x + y) + 1 = x + (y + 1)
pub static R7: Law<R> = Law::new("R7", 2, |a, v| {
    let (x, y) = (v[0], v[1]);
    Some((a.comp(a.add(x, y)), a.add(x, a.comp(y))))
});

/// x + x = 0
pub static CHAR2: Law<R> = Law::new("char2", 1, |a, v| Some((a.add(v[0], v[0]), a.zero())));

/// x(y + 1) = xy + x
pub static COMPLEMENT_DISTRIB: Law<R> = Law::new("complement-distrib", 2, |a, v| {
    let (x, y) = (v[0], v[1]);
    Some((a.mul(x, a.comp(y)), a.add(a.mul(x, y), x)))
});

/// 0 + 1 = 1
pub static W1: Law<R> = Law::new("W1", 0, |a, _| Some((a.add(a.zero(), a.one()), a.one())));
/// x + y = y + x
pub static W2: Law<R> = Law::new("W2", 2, |a, v| Some((a.add(v[0], v[1]), a.add(v[1], v[0]))));
/// (xy + x) + 1 = xy + (x + 1)
pub static W3: Law<R> = Law::new("W3", 2, |a, v| {
    let (x, y) = (v[0], v[1]);
    let xy = a.mul(x, y);
    Some((a.comp(a.add(xy, x)), a.add(xy, a.comp(x))))
});
/// (xy + x) + x = xy + (x + x)
pub static W4: Law<R> = Law::new("W4", 2, |a, v| {
    let (x, y) = (v[0], v[1]);
    let xy = a.mul(x, y);
    Some((a.add(a.add(xy, x), x), a.add(xy, a.add(x, x))))
});
/// (xy + 1)x = xy + x
pub static W5: Law<R> = Law::new("W5", 2, |a, v| {
    let (x, y) = (v[0], v[1]);
    let xy = a.mul(x, y);
    Some((a.mul(a.comp(xy), x), a.add(xy, x)))
});
/// (xy + 1)(x + 1) = xy(x + 1) + (x + 1)
pub static W6: Law<R> = Law::new("W6", 2, |a, v| {
    let (x, y) = (v[0], v[1]);
    let xy = a.mul(x, y);
    let cx = a.comp(x);
    Some((a.mul(a.comp(xy), cx), a.add(a.mul(xy, cx), cx)))
});

// The same system with xy replaced by an arbitrary x ≤ y.

pub static W1_ORDER: Law<R> = Law::new("W1-order", 0, |a, _| Some((a.add(a.zero(), a.one()), a.one())));
pub static W2_ORDER: Law<R> = Law::new("W2-order", 2, |a, v| Some((a.add(v[0], v[1]), a.add(v[1], v[0]))));
/// x ≤ y ⇒ (x + y) + 1 = x + (y + 1)
pub static W3_ORDER: Law<R> = Law::new("W3-order", 2, |a, v| {
    let (x, y) = (v[0], v[1]);
    a.leq(x, y).then(|| (a.comp(a.add(x, y)), a.add(x, a.comp(y))))
});
/// x ≤ y ⇒ (x + y) + y = x + (y + y)
pub static W4_ORDER: Law<R> = Law::new("W4-order", 2, |a, v| {
    let (x, y) = (v[0], v[1]);
    a.leq(x, y).then(|| (a.add(a.add(x, y), y), a.add(x, a.add(y, y))))
});
/// x ≤ y ⇒ (x + 1)y = x + y
pub static W5_ORDER: Law<R> = Law::new("W5-order", 2, |a, v| {
    let (x, y) = (v[0], v[1]);
    a.leq(x, y).then(|| (a.mul(a.comp(x), y), a.add(x, y)))
});
/// x ≤ y ⇒ (x + 1)(y + 1) = x(y + 1) + (y + 1)
pub static W6_ORDER: Law<R> = Law::new("W6-order", 2, |a, v| {
    let (x, y) = (v[0], v[1]);
    a.leq(x, y).then(|| {
        let cy = a.comp(y);
        (a.mul(a.comp(x), cy), a.add(a.mul(x, cy), cy))
    })
});

pub static ADD_ASSOC: Law<R> = Law::new("add-assoc", 3, |a, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    Some((a.add(x, a.add(y, z)), a.add(a.add(x, y), z)))
});
pub static ADD_COMM: Law<R> = Law::new("add-comm", 2, |a, v| Some((a.add(v[0], v[1]), a.add(v[1], v[0]))));
pub static ADD_ZERO: Law<R> = Law::new("add-zero", 1, |a, v| Some((a.add(v[0], a.zero()), v[0])));
/// x(y + z) = xy + xz
pub static DISTRIB: Law<R> = Law::new("distrib", 3, |a, v| {
    let (x, y, z) = (v[0], v[1], v[2]);
    Some((a.mul(x, a.add(y, z)), a.add(a.mul(x, y), a.mul(x, z))))
});

static SEMILATTICE: [&Law<R>; 5] = [&MEET_ASSOC, &MEET_COMM, &MEET_IDEM, &MEET_ONE, &MEET_ZERO];
static W_AXIOMS: [&Law<R>; 6] = [&W1, &W2, &W3, &W4, &W5, &W6];
static W_ORDER_AXIOMS: [&Law<R>; 6] = [&W1_ORDER, &W2_ORDER, &W3_ORDER, &W4_ORDER, &W5_ORDER, &W6_ORDER];
static BOOLEAN_RING: [&Law<R>; 9] =
    [&ADD_ASSOC, &ADD_COMM, &ADD_ZERO, &CHAR2, &MEET_ASSOC, &MEET_COMM, &MEET_IDEM, &MEET_ONE, &DISTRIB];

static ALL: &[&Law<R>] = &[
    &MEET_ASSOC,
    &MEET_COMM,
    &MEET_IDEM,
    &MEET_ONE,
    &MEET_ZERO,
    &R1,
    &R2,
    &R3,
    &R4,
    &R5,
    &R6,
    &R7,
    &CHAR2,
    &COMPLEMENT_DISTRIB,
    &W1,
    &W2,
    &W3,
    &W4,
    &W5,
    &W6,
    &W1_ORDER,
    &W2_ORDER,
    &W3_ORDER,
    &W4_ORDER,
    &W5_ORDER,
    &W6_ORDER,
    &ADD_ASSOC,
    &ADD_COMM,
    &ADD_ZERO,
    &DISTRIB,
];

/// Looks up a ring-side law by the name it reports in verdicts.
pub fn ring_law(name: &str) -> Option<&'static Law<R>> {
    ALL.iter().copied().find(|l| l.name == name)
}

/// `(R, ·, 0, 1)` is a bounded meet-semilattice.
pub fn check_meet_semilattice(alg: &R) -> Verdict {
    check_all(alg, "meet-semilattice", &SEMILATTICE)
}

/// Meet-semilattice, then R1–R4.
pub fn check_rlse(alg: &R) -> Verdict {
    let v = check_meet_semilattice(alg);
    if !v.passed {
        return v;
    }
    check_all(alg, "rlse", &[&R1, &R2, &R3, &R4])
}

pub fn check_specific(alg: &R) -> Verdict {
    R5.check(alg)
}

pub fn check_weakly_distributive(alg: &R) -> Verdict {
    R6.check(alg)
}

pub fn check_weakly_associative(alg: &R) -> Verdict {
    R7.check(alg)
}

pub fn check_characteristic_two(alg: &R) -> Verdict {
    CHAR2.check(alg)
}

/// Meet-semilattice, R1 and R2 (an RLSE without R3 and R4).
pub fn check_near_rlse(alg: &R) -> Verdict {
    let v = check_meet_semilattice(alg);
    if !v.passed {
        return v;
    }
    check_all(alg, "near-rlse", &[&R1, &R2])
}

/// W1–W6; the verdict names the first failing identity.
pub fn check_w_axioms(alg: &R) -> Verdict {
    check_all(alg, "W1-W6", &W_AXIOMS)
}

/// One verdict per identity W1–W6.
pub fn w_axiom_verdicts(alg: &R) -> Vec<Verdict> {
    W_AXIOMS.iter().map(|l| l.check(alg)).collect()
}

/// W1–W6 restated relative to the order: each `xy` replaced by `x ≤ y`.
pub fn check_w_order_axioms(alg: &R) -> Verdict {
    check_all(alg, "W-order", &W_ORDER_AXIOMS)
}

pub fn check_boolean_ring(alg: &R) -> Verdict {
    check_all(alg, "boolean-ring", &BOOLEAN_RING)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Table, Value};

    fn boolean(atoms: u32) -> R {
        let n = 1usize << atoms;
        R::new(Table::from_fn(n, |x, y| x ^ y), Table::from_fn(n, |x, y| x & y), 0, n - 1).unwrap()
    }

    #[test]
    fn boolean_rings_pass_everything() {
        for atoms in 1..=3 {
            let r = boolean(atoms);
            for v in [
                check_rlse(&r),
                check_specific(&r),
                check_weakly_distributive(&r),
                check_weakly_associative(&r),
                check_characteristic_two(&r),
                check_near_rlse(&r),
                check_w_axioms(&r),
                check_w_order_axioms(&r),
                check_boolean_ring(&r),
                COMPLEMENT_DISTRIB.check(&r),
            ] {
                assert!(v.passed, "{v}");
            }
        }
    }

    #[test]
    fn swapped_times_entry_breaks_semilattice() {
        let r = boolean(2).with_times_entry(1, 2, 3).unwrap();
        let v = check_meet_semilattice(&r);
        assert!(!v.passed);
        let w = v.witness.unwrap();
        let law = ring_law(&v.law).unwrap();
        let (lhs, rhs) = law.evaluate(&r, &w.args).unwrap();
        assert_eq!((Value::Element(lhs), Value::Element(rhs)), (w.lhs, w.rhs));
    }

    #[test]
    fn mutated_r2_entry_fails_near_rlse() {
        // x = 1 ({1}), y = 0: (0 + 1)(1 + 1) + 1 must be 1; break 2 + 3 (the outer "+ 1").
        let r = boolean(2).with_plus_entry(2, 3, 0).unwrap();
        let v = check_near_rlse(&r);
        assert!(!v.passed, "{v}");
    }

    #[test]
    fn law_lookup_covers_reported_names() {
        for name in ["R1", "R7", "W4", "W6-order", "distrib", "meet-zero", "char2"] {
            assert_eq!(ring_law(name).unwrap().name, name);
        }
        assert!(ring_law("R9").is_none());
    }

    #[test]
    fn per_identity_w_verdicts() {
        let vs = w_axiom_verdicts(&boolean(1));
        assert_eq!(vs.iter().map(|v| v.law.as_str()).collect::<Vec<_>>(), ["W1", "W2", "W3", "W4", "W5", "W6"]);
    }
}
