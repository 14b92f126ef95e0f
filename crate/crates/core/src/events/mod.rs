//! Numerical events: functions from a finite state space into `[0, 1]`,
//! valued in exact rationals.
//!
//! An [`EventFamily`] is a finite, duplicate-free set of events over one
//! [`StateSpace`]. On construction it caches the pointwise infima and suprema
//! that exist inside the family and a set of [`FamilyFlags`]; the checks in
//! [`family`] recompute everything from scratch and report witnesses.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::{Error, Rational, Result};

pub mod family;
pub mod maxmin;

pub use family::{check_gfe, check_lattice_ordered, check_prop3, check_s_probability_algebra, rlse_of_events};
pub use maxmin::{
    check_lemma2_conditions, check_q_structure, close_under_maxmin, lemma1_check, maxmin_odot, maxmin_oplus,
    odot_scalar, oplus_scalar, q_algebra, QReport, ScalarClause, ScalarReport,
};

/// Ordered, distinct state labels. Events are indexed by position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSpace {
    labels: Vec<String>,
}

impl StateSpace {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyStateSpace);
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateState(l.clone()));
            }
        }
        Ok(StateSpace { labels })
    }

    /// States labelled `1..=n`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|k| k.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// A function `p: S → [0, 1]`, one exact value per state.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalEvent {
    values: Vec<Rational>,
}

impl NumericalEvent {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyStateSpace);
        }
        for (position, v) in values.iter().enumerate() {
            if !in_unit_interval(v) {
                return Err(Error::OutOfRange { value: v.clone(), position });
            }
        }
        Ok(NumericalEvent { values })
    }

    pub fn constant(len: usize, value: Rational) -> Result<Self> {
        Self::new(vec![value; len])
    }

    pub fn zero(len: usize) -> Self {
        NumericalEvent { values: vec![Rational::zero(); len.max(1)] }
    }

    pub fn one(len: usize) -> Self {
        NumericalEvent { values: vec![Rational::one(); len.max(1)] }
    }

    /// Characteristic function of `support` (0-based state positions).
    pub fn indicator(len: usize, support: &[usize]) -> Self {
        let mut values = vec![Rational::zero(); len.max(1)];
        for &s in support {
            values[s] = Rational::one();
        }
        NumericalEvent { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_two_valued(&self) -> bool {
        self.values.iter().all(|v| v.is_zero() || v.is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.values.iter().all(One::is_one)
    }

    /// `p′ = 1 − p`.
    pub fn complement(&self) -> NumericalEvent {
        NumericalEvent { values: self.values.iter().map(|v| Rational::one() - v).collect() }
    }

    /// Pointwise order.
    pub fn leq(&self, other: &NumericalEvent) -> Result<bool> {
        same_space(self, other)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a <= b))
    }

    /// `p ⊥ q` iff `p ≤ q′`.
    pub fn orthogonal(&self, other: &NumericalEvent) -> Result<bool> {
        same_space(self, other)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a + b <= Rational::one()))
    }
}

impl fmt::Display for NumericalEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn in_unit_interval(v: &Rational) -> bool {
    !(v < &Rational::zero() || v > &Rational::one())
}

pub(crate) fn same_space(p: &NumericalEvent, q: &NumericalEvent) -> Result<()> {
    if p.len() != q.len() {
        return Err(Error::SpaceMismatch { expected: p.len(), got: q.len() });
    }
    Ok(())
}

/// Real-function sum `p + q`; may leave `[0, 1]`.
pub fn pointwise_sum(p: &[Rational], q: &[Rational]) -> Vec<Rational> {
    p.iter().zip(q).map(|(a, b)| a + b).collect()
}

/// Real-function difference `p − q`.
pub fn pointwise_difference(p: &[Rational], q: &[Rational]) -> Vec<Rational> {
    p.iter().zip(q).map(|(a, b)| a - b).collect()
}

/// Real-function product `pq`.
pub fn pointwise_product(p: &[Rational], q: &[Rational]) -> Vec<Rational> {
    p.iter().zip(q).map(|(a, b)| a * b).collect()
}

/// Cached properties of a family, recomputed exhaustively on construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct FamilyFlags {
    pub contains_0_1: bool,
    pub complement_closed: bool,
    /// `p ⊥ q ⇒ p + q` is a member.
    pub orthosum_closed: bool,
    /// Mutually orthogonal triples have their sum in the family.
    pub triple_sum_closed: bool,
    pub lattice_ordered: bool,
    pub two_valued: bool,
}

/// A finite set of numerical events over one state space, in insertion order.
#[derive(Clone, Debug)]
pub struct EventFamily {
    space: StateSpace,
    events: Vec<NumericalEvent>,
    names: Vec<String>,
    index: HashMap<NumericalEvent, usize>,
    inf: Vec<Option<usize>>,
    sup: Vec<Option<usize>>,
    flags: FamilyFlags,
}

impl EventFamily {
    /// Events are named `p0`, `p1`, … in order.
    pub fn new(space: StateSpace, events: Vec<NumericalEvent>) -> Result<Self> {
        let named = events.into_iter().enumerate().map(|(k, e)| (format!("p{k}"), e)).collect();
        Self::named(space, named)
    }

    pub fn named(space: StateSpace, events: Vec<(String, NumericalEvent)>) -> Result<Self> {
        let mut index = HashMap::with_capacity(events.len());
        let mut seen_names = std::collections::HashSet::new();
        let mut names = Vec::with_capacity(events.len());
        let mut evs = Vec::with_capacity(events.len());
        for (k, (name, e)) in events.into_iter().enumerate() {
            if e.len() != space.len() {
                return Err(Error::SpaceMismatch { expected: space.len(), got: e.len() });
            }
            if !seen_names.insert(name.clone()) {
                return Err(Error::DuplicateName(name));
            }
            if index.insert(e.clone(), k).is_some() {
                return Err(Error::DuplicateEvent(name));
            }
            names.push(name);
            evs.push(e);
        }
        let mut fam = EventFamily {
            space,
            events: evs,
            names,
            index,
            inf: Vec::new(),
            sup: Vec::new(),
            flags: FamilyFlags::default(),
        };
        fam.compute_bounds();
        fam.flags = family::compute_flags(&fam);
        Ok(fam)
    }

    fn compute_bounds(&mut self) {
        let m = self.events.len();
        let leq: Vec<bool> = (0..m * m)
            .map(|k| {
                let (a, b) = (&self.events[k / m], &self.events[k % m]);
                a.values.iter().zip(&b.values).all(|(x, y)| x <= y)
            })
            .collect();
        let le = |x: usize, y: usize| leq[x * m + y];
        self.inf = vec![None; m * m];
        self.sup = vec![None; m * m];
        for i in 0..m {
            for j in 0..m {
                let lower: Vec<usize> = (0..m).filter(|&z| le(z, i) && le(z, j)).collect();
                self.inf[i * m + j] = lower.iter().copied().find(|&g| lower.iter().all(|&z| le(z, g)));
                let upper: Vec<usize> = (0..m).filter(|&z| le(i, z) && le(j, z)).collect();
                self.sup[i * m + j] = upper.iter().copied().find(|&g| upper.iter().all(|&z| le(g, z)));
            }
        }
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn events(&self) -> &[NumericalEvent] {
        &self.events
    }

    pub fn event(&self, i: usize) -> &NumericalEvent {
        &self.events[i]
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn position(&self, event: &NumericalEvent) -> Option<usize> {
        self.index.get(event).copied()
    }

    /// Position of an arbitrary real function, if it is a member.
    pub fn position_of_values(&self, values: &[Rational]) -> Option<usize> {
        if values.len() != self.space.len() || !values.iter().all(in_unit_interval) {
            return None;
        }
        self.index.get(&NumericalEvent { values: values.to_vec() }).copied()
    }

    pub fn position_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn zero(&self) -> Option<usize> {
        self.position(&NumericalEvent::zero(self.space.len()))
    }

    pub fn one(&self) -> Option<usize> {
        self.position(&NumericalEvent::one(self.space.len()))
    }

    pub fn complement_of(&self, i: usize) -> Option<usize> {
        self.position(&self.events[i].complement())
    }

    /// Greatest lower bound of two members within the family.
    pub fn inf(&self, i: usize, j: usize) -> Option<usize> {
        self.inf[i * self.len() + j]
    }

    /// Least upper bound of two members within the family.
    pub fn sup(&self, i: usize, j: usize) -> Option<usize> {
        self.sup[i * self.len() + j]
    }

    pub fn flags(&self) -> FamilyFlags {
        self.flags
    }

    /// Subfamily keeping the given positions, in the given order.
    pub fn subfamily(&self, positions: &[usize]) -> Result<EventFamily> {
        let evs = positions.iter().map(|&i| (self.names[i].clone(), self.events[i].clone())).collect();
        EventFamily::named(self.space.clone(), evs)
    }
}
