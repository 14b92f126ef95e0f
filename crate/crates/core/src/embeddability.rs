//! Boolean embeddability of finite sets of numerical events.
//!
//! A set `Pₙ` of events is embeddable when it lies inside a Boolean
//! subalgebra. With an explicit lattice-ordered ambient family the k-subset
//! procedure checks, for `k = 1, …, n − 1` and every pair of `k`-subsets
//! `A`, `B` of `Pₙ`,
//!
//! ```text
//! ∏A ⊙ (1 − ∏B) = ∏A − ∏A ⊙ ∏B
//! ```
//!
//! where `∏` and `⊙` are infima in the ambient family and `−` is pointwise
//! subtraction of real functions. For two-valued events without an ambient,
//! `⊙` is the pointwise minimum (the reading realised by the full power set)
//! and the condition becomes `∏A ⊙ ∏B = ∏(A ∪ B)` with the real product.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::events::family::check_ambient;
use crate::events::{pointwise_difference, pointwise_product, EventFamily, NumericalEvent};
use crate::{Error, Rational, Result};

/// Default limit on the number of states of an ambient family.
pub const DEFAULT_STATE_CAP: usize = 16;
/// Default limit on the ambient size accepted by [`oracle_embeddable`].
pub const DEFAULT_ORACLE_CAP: usize = 24;
/// Largest subset the k-loop accepts; the loop visits `C(n, k)²` pairs per `k`.
pub const MAX_SUBSET: usize = 12;

pub const CLASSICAL: &str = "classical-compatible";
pub const NON_CLASSICAL: &str = "non-classical (quantum) relative to ambient";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    ExplicitAmbient,
    TwoValuedConcrete,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::ExplicitAmbient => "explicit_ambient",
            Mode::TwoValuedConcrete => "two_valued_concrete",
        })
    }
}

fn as_strings<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

/// A pair of subsets at which the condition fails, with both sides evaluated.
///
/// `a` and `b` hold ambient positions in [`Mode::ExplicitAmbient`] and
/// positions in the input list in [`Mode::TwoValuedConcrete`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailingPair {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    #[serde(serialize_with = "as_strings")]
    pub lhs: Vec<Rational>,
    #[serde(serialize_with = "as_strings")]
    pub rhs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddabilityReport {
    pub embeddable: bool,
    pub mode: Mode,
    pub failing_pair: Option<FailingPair>,
    /// The `k` at which the scan stopped: the failing `k`, or `n − 1`.
    pub k_reached: usize,
}

/// Checks that a family can serve as an ambient: an algebra of S-probabilities
/// that is lattice-ordered, over at most `state_cap` states.
pub fn check_ambient_family(fam: &EventFamily, state_cap: usize) -> Result<()> {
    if fam.space().len() > state_cap {
        return Err(Error::TooManyStates { size: fam.space().len(), cap: state_cap });
    }
    let v = check_ambient(fam);
    if !v.passed {
        return Err(Error::PreconditionFailed(Box::new(v)));
    }
    Ok(())
}

fn member(fam: &EventFamily, e: &NumericalEvent) -> Result<usize> {
    fam.position(e).ok_or_else(|| Error::NotMember(e.to_string()))
}

fn inf(fam: &EventFamily, i: usize, j: usize) -> usize {
    fam.inf(i, j).expect("ambient is lattice-ordered")
}

/// `(lhs, rhs)` of `a ⊙ (1 − b) = a − a ⊙ b` for ambient positions `a`, `b`.
fn pair_sides(fam: &EventFamily, a: usize, b: usize) -> (Vec<Rational>, Vec<Rational>) {
    let b_comp = fam.complement_of(b).expect("ambient is complement-closed");
    let lhs = fam.event(inf(fam, a, b_comp)).values().to_vec();
    let rhs = pointwise_difference(fam.event(a).values(), fam.event(inf(fam, a, b)).values());
    (lhs, rhs)
}

/// Two events of the ambient: embeddable iff `p ⊙ (1 − q) = p − p ⊙ q`.
pub fn embeddable_pair(fam: &EventFamily, p: &NumericalEvent, q: &NumericalEvent) -> Result<EmbeddabilityReport> {
    check_ambient_family(fam, DEFAULT_STATE_CAP)?;
    let (i, j) = (member(fam, p)?, member(fam, q)?);
    let (lhs, rhs) = pair_sides(fam, i, j);
    let failing_pair = (lhs != rhs).then(|| FailingPair { a: vec![i], b: vec![j], lhs, rhs });
    Ok(EmbeddabilityReport {
        embeddable: failing_pair.is_none(),
        mode: Mode::ExplicitAmbient,
        failing_pair,
        k_reached: 1,
    })
}

/// Lexicographically ordered `k`-subsets of `0..n`.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut c: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(c.clone());
        let Some(i) = (0..k).rev().find(|&i| c[i] != i + n - k) else {
            return out;
        };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

fn validate_subset(fam_len: usize, subset: &[usize]) -> Result<Vec<usize>> {
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    if let Some(&bad) = sorted.iter().find(|&&i| i >= fam_len) {
        return Err(Error::NotMember(format!("position {bad}")));
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidSubset("repeated member".into()));
    }
    if sorted.len() < 2 {
        return Err(Error::InvalidSubset(format!("need at least two members, got {}", sorted.len())));
    }
    if sorted.len() > MAX_SUBSET {
        return Err(Error::TooLarge { size: sorted.len(), cap: MAX_SUBSET });
    }
    Ok(sorted)
}

/// Runs the k-subset loop over `k = 1, …, n − 1` for the members at the given
/// ambient positions. The positions are sorted first, so the reported pair
/// does not depend on the listing order.
pub fn embeddable_set(fam: &EventFamily, subset: &[usize]) -> Result<EmbeddabilityReport> {
    check_ambient_family(fam, DEFAULT_STATE_CAP)?;
    let members = validate_subset(fam.len(), subset)?;
    let n = members.len();
    for k in 1..n {
        let subsets: Vec<(Vec<usize>, usize)> = combinations(n, k)
            .into_iter()
            .map(|c| {
                let ids: Vec<usize> = c.iter().map(|&t| members[t]).collect();
                let meet = ids[1..].iter().fold(ids[0], |acc, &x| inf(fam, acc, x));
                (ids, meet)
            })
            .collect();
        for (a, pa) in &subsets {
            for (b, pb) in &subsets {
                let (lhs, rhs) = pair_sides(fam, *pa, *pb);
                if lhs != rhs {
                    let failing_pair = Some(FailingPair { a: a.clone(), b: b.clone(), lhs, rhs });
                    return Ok(EmbeddabilityReport {
                        embeddable: false,
                        mode: Mode::ExplicitAmbient,
                        failing_pair,
                        k_reached: k,
                    });
                }
            }
        }
    }
    Ok(EmbeddabilityReport { embeddable: true, mode: Mode::ExplicitAmbient, failing_pair: None, k_reached: n - 1 })
}

fn require_two_valued(events: &[&NumericalEvent]) -> Result<()> {
    let len = events[0].len();
    for e in events {
        if e.len() != len {
            return Err(Error::SpaceMismatch { expected: len, got: e.len() });
        }
        if !e.is_two_valued() {
            return Err(Error::NotTwoValued(e.to_string()));
        }
    }
    Ok(())
}

fn pointwise_min(p: &[Rational], q: &[Rational]) -> Vec<Rational> {
    p.iter().zip(q).map(|(x, y)| x.min(y).clone()).collect()
}

/// Two two-valued events with `⊙` read as the pointwise minimum:
/// embeddable iff `p ⊙ q = pq`.
pub fn embeddable_pair_two_valued(p: &NumericalEvent, q: &NumericalEvent) -> Result<EmbeddabilityReport> {
    require_two_valued(&[p, q])?;
    let lhs = pointwise_min(p.values(), q.values());
    let rhs = pointwise_product(p.values(), q.values());
    let failing_pair = (lhs != rhs).then(|| FailingPair { a: vec![0], b: vec![1], lhs, rhs });
    Ok(EmbeddabilityReport {
        embeddable: failing_pair.is_none(),
        mode: Mode::TwoValuedConcrete,
        failing_pair,
        k_reached: 1,
    })
}

/// The k-subset loop for two-valued events with `∏A ⊙ ∏B = ∏(A ∪ B)`, `∏`
/// on the left being the pointwise minimum and on the right the real product.
pub fn embeddable_set_two_valued(events: &[NumericalEvent]) -> Result<EmbeddabilityReport> {
    let n = events.len();
    if n < 2 {
        return Err(Error::InvalidSubset(format!("need at least two events, got {n}")));
    }
    if n > MAX_SUBSET {
        return Err(Error::TooLarge { size: n, cap: MAX_SUBSET });
    }
    require_two_valued(&events.iter().collect::<Vec<_>>())?;
    let fold = |ids: &[usize], op: fn(&[Rational], &[Rational]) -> Vec<Rational>| {
        ids[1..].iter().fold(events[ids[0]].values().to_vec(), |acc, &i| op(&acc, events[i].values()))
    };
    for k in 1..n {
        let subsets = combinations(n, k);
        for a in &subsets {
            let pa = fold(a, pointwise_min);
            for b in &subsets {
                let lhs = pointwise_min(&pa, &fold(b, pointwise_min));
                let mut union = a.clone();
                union.extend(b.iter().filter(|i| !a.contains(i)));
                let rhs = fold(&union, pointwise_product);
                if lhs != rhs {
                    let failing_pair = Some(FailingPair { a: a.clone(), b: b.clone(), lhs, rhs });
                    return Ok(EmbeddabilityReport {
                        embeddable: false,
                        mode: Mode::TwoValuedConcrete,
                        failing_pair,
                        k_reached: k,
                    });
                }
            }
        }
    }
    Ok(EmbeddabilityReport { embeddable: true, mode: Mode::TwoValuedConcrete, failing_pair: None, k_reached: n - 1 })
}

/// Ground truth by exhaustive search: is there a subset of the ambient that
/// contains the given members together with `0` and `1`, is closed under
/// complement, infimum and supremum, and is distributive?
pub fn oracle_embeddable(fam: &EventFamily, subset: &[usize]) -> Result<bool> {
    oracle_embeddable_with_cap(fam, subset, DEFAULT_ORACLE_CAP)
}

pub fn oracle_embeddable_with_cap(fam: &EventFamily, subset: &[usize], cap: usize) -> Result<bool> {
    let m = fam.len();
    if m > cap || m > 63 {
        return Err(Error::AmbientTooLarge { size: m, cap: cap.min(63) });
    }
    check_ambient_family(fam, usize::MAX)?;
    if let Some(&bad) = subset.iter().find(|&&i| i >= m) {
        return Err(Error::NotMember(format!("position {bad}")));
    }
    let comp: Vec<usize> = (0..m).map(|i| fam.complement_of(i).unwrap()).collect();
    let meet = |i, j| fam.inf(i, j).unwrap();
    let join = |i, j| fam.sup(i, j).unwrap();
    let mut required = 0u64;
    for &i in subset.iter().chain([fam.zero().unwrap(), fam.one().unwrap()].iter()) {
        required |= 1 << i;
    }
    let optional: Vec<usize> = (0..m).filter(|i| required >> i & 1 == 0).collect();
    let closed = |set: u64| {
        let elems: Vec<usize> = (0..m).filter(|i| set >> i & 1 == 1).collect();
        let has = |i: usize| set >> i & 1 == 1;
        elems.iter().all(|&x| has(comp[x]))
            && elems.iter().all(|&x| elems.iter().all(|&y| has(meet(x, y)) && has(join(x, y))))
            && elems.iter().all(|&x| {
                elems.iter().all(|&y| elems.iter().all(|&z| meet(x, join(y, z)) == join(meet(x, y), meet(x, z))))
            })
    };
    Ok((0..1u64 << optional.len()).any(|bits| {
        let mut set = required;
        for (t, &i) in optional.iter().enumerate() {
            if bits >> t & 1 == 1 {
                set |= 1 << i;
            }
        }
        closed(set)
    }))
}

pub fn classify(report: &EmbeddabilityReport) -> &'static str {
    if report.embeddable {
        CLASSICAL
    } else {
        NON_CLASSICAL
    }
}
