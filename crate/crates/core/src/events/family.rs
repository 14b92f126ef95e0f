//! Axioms on families of numerical events and the RLSE attached to a
//! lattice-ordered algebra of S-probabilities.

use num_traits::One;

use super::{pointwise_difference, pointwise_sum, EventFamily, FamilyFlags, NumericalEvent};
use crate::algebra::{check_rlse, check_specific, RingLikeAlgebra, Table};
use crate::{Error, Rational, Result, Value, Verdict, Witness};

fn vector(v: &[Rational]) -> Value {
    Value::Vector(v.to_vec())
}

fn missing(law: &str, args: Vec<usize>, wanted: &[Rational]) -> Verdict {
    Verdict::fail(law, Witness::new(args, vector(wanted), Value::Missing))
}

fn orthogonal(fam: &EventFamily, i: usize, j: usize) -> bool {
    fam.event(i).orthogonal(fam.event(j)).expect("members share the state space")
}

fn check_constants(fam: &EventFamily) -> Verdict {
    let n = fam.space().len();
    for e in [NumericalEvent::zero(n), NumericalEvent::one(n)] {
        if fam.position(&e).is_none() {
            return missing("S1", vec![], e.values());
        }
    }
    Verdict::pass("S1")
}

fn check_complements(fam: &EventFamily) -> Verdict {
    for i in 0..fam.len() {
        if fam.complement_of(i).is_none() {
            return missing("S2", vec![i], fam.event(i).complement().values());
        }
    }
    Verdict::pass("S2")
}

fn check_pair_sums(fam: &EventFamily) -> Verdict {
    for i in 0..fam.len() {
        for j in i..fam.len() {
            if orthogonal(fam, i, j) {
                let s = pointwise_sum(fam.event(i).values(), fam.event(j).values());
                if fam.position_of_values(&s).is_none() {
                    return missing("orthogonal-sum", vec![i, j], &s);
                }
            }
        }
    }
    Verdict::pass("orthogonal-sum")
}

fn check_triple_sums(fam: &EventFamily) -> Verdict {
    let m = fam.len();
    for i in 0..m {
        for j in i..m {
            if !orthogonal(fam, i, j) {
                continue;
            }
            for k in j..m {
                if orthogonal(fam, i, k) && orthogonal(fam, j, k) {
                    let s = pointwise_sum(
                        &pointwise_sum(fam.event(i).values(), fam.event(j).values()),
                        fam.event(k).values(),
                    );
                    if fam.position_of_values(&s).is_none() {
                        return missing("S3", vec![i, j, k], &s);
                    }
                }
            }
        }
    }
    Verdict::pass("S3")
}

/// Contains 0 and 1, closed under `p ↦ 1 − p`, and closed under sums of
/// mutually orthogonal triples.
pub fn check_s_probability_algebra(fam: &EventFamily) -> Verdict {
    Verdict::first_failure(
        "s-probability-algebra",
        [check_constants(fam), check_complements(fam), check_triple_sums(fam)],
    )
}

/// As [`check_s_probability_algebra`] with only pairwise orthogonal sums.
pub fn check_gfe(fam: &EventFamily) -> Verdict {
    Verdict::first_failure("gfe", [check_constants(fam), check_complements(fam), check_pair_sums(fam)])
}

/// Every pair has an infimum and a supremum inside the family.
pub fn check_lattice_ordered(fam: &EventFamily) -> Verdict {
    for i in 0..fam.len() {
        for j in 0..fam.len() {
            if fam.inf(i, j).is_none() {
                return Verdict::fail("infimum", Witness::new(vec![i, j], Value::Missing, Value::Missing));
            }
            if fam.sup(i, j).is_none() {
                return Verdict::fail("supremum", Witness::new(vec![i, j], Value::Missing, Value::Missing));
            }
        }
    }
    Verdict::pass("lattice-ordered")
}

pub(crate) fn compute_flags(fam: &EventFamily) -> FamilyFlags {
    FamilyFlags {
        contains_0_1: check_constants(fam).passed,
        complement_closed: check_complements(fam).passed,
        orthosum_closed: check_pair_sums(fam).passed,
        triple_sum_closed: check_triple_sums(fam).passed,
        lattice_ordered: check_lattice_ordered(fam).passed,
        two_valued: fam.events().iter().all(NumericalEvent::is_two_valued),
    }
}

/// Verdict for the preconditions of [`rlse_of_events`].
pub(crate) fn check_ambient(fam: &EventFamily) -> Verdict {
    Verdict::first_failure("ambient", [check_s_probability_algebra(fam), check_lattice_ordered(fam)])
}

/// `p ⊕ q = (p ∧ q′) ∨ (p′ ∧ q)` and `p ⊙ q = p ∧ q`, bounds taken inside
/// the family. The carrier is the family's positions.
pub fn rlse_of_events(fam: &EventFamily) -> Result<RingLikeAlgebra> {
    let v = check_ambient(fam);
    if !v.passed {
        return Err(Error::PreconditionFailed(Box::new(v)));
    }
    let m = fam.len();
    let comp: Vec<usize> = (0..m).map(|i| fam.complement_of(i).expect("complement-closed")).collect();
    let inf = |i, j| fam.inf(i, j).expect("lattice-ordered");
    let sup = |i, j| fam.sup(i, j).expect("lattice-ordered");
    let plus = Table::from_fn(m, |i, j| sup(inf(i, comp[j]), inf(comp[i], j)));
    let times = Table::from_fn(m, inf);
    let alg = RingLikeAlgebra::with_cap(plus, times, fam.zero().unwrap(), fam.one().unwrap(), usize::MAX)?
        .with_names(fam.names().to_vec())?;
    for v in [check_rlse(&alg), check_specific(&alg)] {
        if !v.passed {
            return Err(Error::InternalInconsistency(format!("RLSE of an event algebra: {v}")));
        }
    }
    Ok(alg)
}

/// The attached RLSE's operations as real functions, over all pairs:
///
/// * `event-sum-i`: `p ⊕ q = p ⊙ (1 − q) + (1 − p) ⊙ q`
/// * `event-sum-ii`: `p ≤ q ⇒ p ⊕ q = q − p`
/// * `event-sum-iii`: `p ⊕ 1 = 1 − p`
/// * `event-sum-iv`: `p ⊥ q ⇒ p ⊕ q = p + q`
pub fn check_prop3(fam: &EventFamily) -> Result<Verdict> {
    let alg = rlse_of_events(fam)?;
    let m = fam.len();
    let vals = |i: usize| fam.event(i).values();
    let one = alg.one();
    let mut clauses: [Option<Verdict>; 4] = Default::default();
    for i in 0..m {
        for j in 0..m {
            let sum = vals(alg.add(i, j));
            let checks: [(&str, Option<Vec<Rational>>); 4] = [
                ("event-sum-i", Some(pointwise_sum(vals(alg.mul(i, alg.comp(j))), vals(alg.mul(alg.comp(i), j))))),
                ("event-sum-ii", fam.event(i).leq(fam.event(j))?.then(|| pointwise_difference(vals(j), vals(i)))),
                ("event-sum-iii", (j == one).then(|| vals(i).iter().map(|v| Rational::one() - v).collect())),
                ("event-sum-iv", orthogonal(fam, i, j).then(|| pointwise_sum(vals(i), vals(j)))),
            ];
            for (slot, (law, rhs)) in clauses.iter_mut().zip(checks) {
                if let Some(rhs) = rhs {
                    if slot.is_none() && rhs.as_slice() != sum {
                        *slot = Some(Verdict::fail(law, Witness::new(vec![i, j], vector(sum), Value::Vector(rhs))));
                    }
                }
            }
        }
    }
    Ok(Verdict::first_failure("event-sum", clauses.into_iter().flatten()))
}
