mod common;

use proptest::prelude::*;
use rlse_core::algebra::ring_laws::COMPLEMENT_DISTRIB;
use rlse_core::algebra::*;
use rlse_core::catalog::{boolean_ring, specific_rlse_mo, weakly_associative_mo2};
use rlse_core::transforms::lattice_of_ring;
use rlse_core::{RingLikeAlgebra, Value, Verdict};

use common::{catalog_rlses, enumerated, lub};

fn prop1_holds(alg: &RingLikeAlgebra) -> Result<(), String> {
    let n = alg.size();
    let (zero, one) = (alg.zero(), alg.one());
    let c = |x| alg.add(x, one);
    let specific = check_specific(alg).passed;
    for x in 0..n {
        let fail = |clause: &str, y: usize| Err(format!("clause {clause} at ({x}, {y})"));
        if c(c(x)) != x {
            return fail("(x+1)+1 = x", x);
        }
        if alg.mul(x, c(x)) != zero {
            return fail("x(x+1) = 0", x);
        }
        if alg.add(x, zero) != x {
            return fail("x+0 = x", x);
        }
        if alg.add(x, c(x)) != one {
            return fail("x+(x+1) = 1", x);
        }
        if specific && alg.add(x, x) != zero {
            return fail("x+x = 0", x);
        }
        for y in 0..n {
            if alg.leq(x, y) != alg.leq(c(y), c(x)) {
                return fail("x<=y iff y+1<=x+1", y);
            }
            if alg.leq(x, c(y)) {
                if c(alg.add(x, y)) != alg.mul(c(x), c(y)) {
                    return fail("(x+y)+1 = (x+1)(y+1)", y);
                }
                if alg.add(x, y) != lub(alg, x, y) {
                    return fail("x+y = x join y", y);
                }
            }
        }
    }
    Ok(())
}

fn all_rlses() -> Vec<RingLikeAlgebra> {
    let mut out: Vec<RingLikeAlgebra> = catalog_rlses().into_iter().map(|(_, a)| a).collect();
    out.extend(enumerated(211));
    out
}

#[test]
fn basic_identities_on_every_rlse() {
    for alg in all_rlses() {
        assert!(check_rlse(&alg).passed);
        prop1_holds(&alg).unwrap_or_else(|e| panic!("{e} in {:?}", alg.plus()));
    }
}

#[test]
fn ring_and_lattice_commuting_agree() {
    for alg in all_rlses() {
        let lat = lattice_of_ring(&alg).unwrap();
        for a in 0..alg.size() {
            for b in 0..alg.size() {
                assert_eq!(commutes_rlse(&alg, a, b), commutes_lattice(&lat, a, b));
                assert_eq!(commutator_rlse(&alg, a, b), commutator_lattice(&lat, a, b));
            }
        }
    }
}

#[test]
fn class_implications() {
    for alg in all_rlses() {
        let s = check_specific(&alg).passed;
        let wd = check_weakly_distributive(&alg).passed;
        let c2 = check_characteristic_two(&alg).passed;
        let wa = check_weakly_associative(&alg).passed;
        let br = check_boolean_ring(&alg).passed;
        assert!(!s || wd);
        assert!(!wd || c2);
        assert!(!wa || wd);
        assert!(!(s && wa) || br);
        assert_eq!(check_w_axioms(&alg).passed, wd);
    }
}

#[test]
fn specific_boolean_ring_criteria_agree() {
    for alg in all_rlses().into_iter().filter(|a| check_specific(a).passed) {
        let br = check_boolean_ring(&alg).passed;
        let identity = COMPLEMENT_DISTRIB.holds(&alg);
        let n = alg.size();
        let all_commute = (0..n).all(|a| (0..n).all(|b| commutes_rlse(&alg, a, b)));
        assert_eq!(br, identity);
        assert_eq!(br, all_commute);
    }
}

#[test]
fn catalog_law_sets() {
    let mo2 = specific_rlse_mo(2).unwrap();
    assert!(check_rlse(&mo2).passed);
    assert!(check_specific(&mo2).passed);
    assert!(check_weakly_distributive(&mo2).passed);
    let wa = check_weakly_associative(&mo2);
    let w = wa.witness.unwrap();
    assert_eq!(wa.law, "R7");
    assert_eq!(w.args, vec![1, 3]);
    assert!(!check_boolean_ring(&mo2).passed);

    let b = boolean_ring(3).unwrap();
    for v in [check_rlse(&b), check_specific(&b), check_weakly_associative(&b), check_boolean_ring(&b)] {
        assert!(v.passed, "{v}");
    }
    let mo1 = specific_rlse_mo(1).unwrap();
    assert!(check_boolean_ring(&mo1).passed);
}

#[test]
fn w_axioms_fail_without_weak_distributivity() {
    let alg = enumerated(211)
        .into_iter()
        .find(|a| !check_characteristic_two(a).passed)
        .expect("some enumerated addition is not of characteristic 2");
    assert!(check_rlse(&alg).passed);
    assert!(!check_weakly_distributive(&alg).passed);
    assert!(!check_w_axioms(&alg).passed);
    assert!(w_axiom_verdicts(&alg).iter().any(|v| !v.passed));
}

#[test]
fn w_order_axioms_hold_on_specific_rlses() {
    for (name, alg) in common::catalog_specific() {
        assert!(check_w_order_axioms(&alg).passed, "{name}");
    }
    for c in 0..6 {
        assert!(check_w_axioms(&weakly_associative_mo2(c).unwrap()).passed);
    }
}

fn reproduces(alg: &RingLikeAlgebra, v: &Verdict) -> bool {
    if v.passed {
        return v.witness.is_none();
    }
    let w = v.witness.as_ref().unwrap();
    let law = ring_law(&v.law).unwrap_or_else(|| panic!("unknown law {}", v.law));
    match (law.evaluate(alg, &w.args), &w.lhs, &w.rhs) {
        (Some((l, r)), Value::Element(wl), Value::Element(wr)) => l == *wl && r == *wr && l != r,
        _ => false,
    }
}

fn base(which: u8) -> RingLikeAlgebra {
    match which {
        0 => boolean_ring(2).unwrap(),
        1 => specific_rlse_mo(2).unwrap(),
        _ => weakly_associative_mo2(which as usize % 6).unwrap(),
    }
}

proptest! {
    #[test]
    fn witnesses_reproduce(which in 0u8..8, edits in prop::collection::vec((any::<bool>(), 0usize..6, 0usize..6, 0usize..6), 0..4)) {
        let mut alg = base(which);
        for (plus, x, y, v) in edits {
            let n = alg.size();
            let (x, y, v) = (x % n, y % n, v % n);
            let next = if plus { alg.with_plus_entry(x, y, v) } else { alg.with_times_entry(x, y, v) };
            if let Ok(a) = next {
                alg = a;
            }
        }
        let verdicts = [
            check_rlse(&alg),
            check_specific(&alg),
            check_weakly_distributive(&alg),
            check_weakly_associative(&alg),
            check_characteristic_two(&alg),
            check_near_rlse(&alg),
            check_w_axioms(&alg),
            check_w_order_axioms(&alg),
            check_boolean_ring(&alg),
        ];
        for v in &verdicts {
            prop_assert!(reproduces(&alg, v), "{v}");
        }
    }

    #[test]
    fn all_failures_start_with_the_canonical_witness(which in 0u8..8, x in 0usize..6, y in 0usize..6, v in 0usize..6) {
        let alg = base(which);
        let n = alg.size();
        if let Ok(alg) = alg.with_plus_entry(x % n, y % n, v % n) {
            for law in [&ring_laws::R1, &ring_laws::R3, &ring_laws::R7, &ring_laws::CHAR2] {
                let verdict = law.check(&alg);
                let all = law.failures(&alg);
                prop_assert_eq!(verdict.passed, all.is_empty());
                if let Some(w) = verdict.witness {
                    prop_assert_eq!(&w, &all[0]);
                }
            }
        }
    }
}
