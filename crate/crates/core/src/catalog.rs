//! Named examples and counterexamples, and enumeration of RLSE additions on
//! a fixed orthomodular lattice.
//!
//! Index conventions: Boolean structures on `n` atoms index elements by the
//! bitmask of their atoms (so `0` is bottom and `2ⁿ − 1` is top). `MO_n`
//! uses `0, a₁, a₁′, …, aₙ, aₙ′, 1`.

use crate::algebra::{check_orthomodular, check_rlse, OrthoLattice, RingLikeAlgebra, Table};
use crate::events::{EventFamily, NumericalEvent, StateSpace};
use crate::transforms::ring_of_lattice;
use crate::{Error, Rational, Result};

/// Largest lattice accepted by [`PlusExtensions`].
pub const MAX_EXTENSION_SIZE: usize = 8;

fn boolean_names(atoms: u32) -> Vec<String> {
    let top = (1usize << atoms) - 1;
    (0..=top)
        .map(|m| match m {
            0 => "0".to_string(),
            m if m == top => "1".to_string(),
            m => {
                let parts: Vec<String> = (0..atoms).filter(|b| m >> b & 1 == 1).map(|b| (b + 1).to_string()).collect();
                format!("{{{}}}", parts.join(","))
            }
        })
        .collect()
}

fn check_atoms(atoms: u32) -> Result<()> {
    match atoms {
        0 => Err(Error::InvalidParameter("need at least one atom".into())),
        1..=4 => Ok(()),
        _ => Err(Error::TooLarge { size: 1 << atoms, cap: 16 }),
    }
}

/// The Boolean ring `2ⁿ`: symmetric difference and intersection, `n ≤ 4`.
pub fn boolean_ring(atoms: u32) -> Result<RingLikeAlgebra> {
    check_atoms(atoms)?;
    let n = 1usize << atoms;
    RingLikeAlgebra::new(Table::from_fn(n, |x, y| x ^ y), Table::from_fn(n, |x, y| x & y), 0, n - 1)?
        .with_names(boolean_names(atoms))
}

/// The Boolean lattice `2ⁿ` with set complement, `n ≤ 4`.
pub fn boolean_lattice(atoms: u32) -> Result<OrthoLattice> {
    check_atoms(atoms)?;
    let n = 1usize << atoms;
    let comp = (0..n).map(|x| x ^ (n - 1)).collect();
    OrthoLattice::new(Table::from_fn(n, |x, y| x & y), Table::from_fn(n, |x, y| x | y), comp, 0, n - 1)?
        .with_names(boolean_names(atoms))
}

fn mo_names(n: usize) -> Vec<String> {
    let atom = |k: usize| {
        if n <= 26 {
            ((b'a' + k as u8) as char).to_string()
        } else {
            format!("a{}", k + 1)
        }
    };
    let mut names = vec!["0".to_string()];
    for k in 0..n {
        names.push(atom(k));
        names.push(format!("{}'", atom(k)));
    }
    names.push("1".to_string());
    names
}

/// Horizontal sum of `n` four-element Boolean blocks:
/// `0 < a₁, a₁′, …, aₙ, aₙ′ < 1`.
pub fn mo_lattice(n: usize) -> Result<OrthoLattice> {
    if n == 0 {
        return Err(Error::InvalidParameter("MO_n needs n ≥ 1".into()));
    }
    let size = 2 * n + 2;
    let top = size - 1;
    let meet = Table::from_fn(size, |x, y| match (x, y) {
        _ if x == y => x,
        (_, y) if y == top => x,
        (x, _) if x == top => y,
        _ => 0,
    });
    let join = Table::from_fn(size, |x, y| match (x, y) {
        _ if x == y => x,
        (0, y) => y,
        (x, 0) => x,
        _ => top,
    });
    let comp = (0..size)
        .map(|x| match x {
            0 => top,
            x if x == top => 0,
            x if x % 2 == 1 => x + 1,
            x => x - 1,
        })
        .collect();
    OrthoLattice::new(meet, join, comp, 0, top)?.with_names(mo_names(n))
}

/// The six-element ortholattice `0 < a < b < 1`, `0 < b′ < a′ < 1` that is
/// not orthomodular. Indices: `0, a, b, b′, a′, 1`.
pub fn hexagon_lattice() -> Result<OrthoLattice> {
    // two chains 0-1-2-5 and 0-3-4-5
    let chain = |x: usize| match x {
        1 | 2 => 1,
        3 | 4 => 2,
        _ => 0,
    };
    let leq = |x: usize, y: usize| x == y || x == 0 || y == 5 || (chain(x) == chain(y) && chain(x) != 0 && x < y);
    OrthoLattice::from_order(6, leq, vec![5, 4, 3, 2, 1, 0], 0, 5)?
        .with_names(["0", "a", "b", "b'", "a'", "1"].map(String::from).to_vec())
}

/// The specific RLSE of `MO_n`.
pub fn specific_rlse_mo(n: usize) -> Result<RingLikeAlgebra> {
    ring_of_lattice(&mo_lattice(n)?)
}

/// The RLSE of characteristic 2 over `MO₂` with `a + b = a′ + b′ = c` and
/// `a + b′ = a′ + b = c′` for the two blocks `{a, a′}` and `{b, b′}`.
///
/// All other sums are forced: `x + 0 = x`, `x + 1 = x′`, `x + x = 0`,
/// `a + a′ = b + b′ = 1`. The result is verified to be an RLSE.
pub fn weakly_associative_mo2(c: usize) -> Result<RingLikeAlgebra> {
    let lat = mo_lattice(2)?;
    if c >= lat.size() {
        return Err(Error::InvalidIndex { index: c, size: lat.size() });
    }
    let (a, a_, b, b_) = (1, 2, 3, 4);
    let cc = lat.comp(c);
    let plus = Table::from_fn(6, |x, y| match (x.min(y), x.max(y)) {
        (x, y) if x == y => 0,
        (0, y) => y,
        (x, 5) => lat.comp(x),
        (x, y) if (x, y) == (a, a_) || (x, y) == (b, b_) => 5,
        (x, y) if (x, y) == (a, b) || (x, y) == (a_, b_) => c,
        _ => cc,
    });
    let mut alg = RingLikeAlgebra::new(plus, lat.meet_table().clone(), 0, 5)?;
    alg.set_names(lat.names().map(<[String]>::to_vec));
    let v = check_rlse(&alg);
    if !v.passed {
        return Err(Error::InternalInconsistency(format!("weakly associative MO2 with c = {c}: {v}")));
    }
    Ok(alg)
}

fn family(n: usize, sets: &[(&str, &[usize])]) -> Result<EventFamily> {
    let space = StateSpace::numbered(n)?;
    let events = sets.iter().map(|(name, s)| (name.to_string(), NumericalEvent::indicator(n, s))).collect();
    EventFamily::named(space, events)
}

/// `MO₂` as a concrete logic over four states:
/// `∅, {1,2}, {3,4}, {1,3}, {2,4}, S`, in the `MO₂` index order.
pub fn concrete_mo2_events() -> Result<EventFamily> {
    family(4, &[("0", &[]), ("a", &[0, 1]), ("a'", &[2, 3]), ("b", &[0, 2]), ("b'", &[1, 3]), ("1", &[0, 1, 2, 3])])
}

/// All subsets of `n` states as two-valued events, indexed by bitmask.
pub fn boolean_events(n: usize) -> Result<EventFamily> {
    if n == 0 || n > 4 {
        return Err(Error::InvalidParameter(format!("power set family needs 1 ≤ n ≤ 4, got {n}")));
    }
    let names = boolean_names(n as u32);
    let sets: Vec<Vec<usize>> = (0..1usize << n).map(|m| (0..n).filter(|b| m >> b & 1 == 1).collect()).collect();
    let pairs: Vec<(&str, &[usize])> = names.iter().map(String::as_str).zip(sets.iter().map(Vec::as_slice)).collect();
    family(n, &pairs)
}

/// `{0, p, p′, 1}` over two states with `p = (1/3, 2/3)`.
pub fn four_element_events() -> Result<EventFamily> {
    let p = NumericalEvent::new(vec![crate::ratio(1, 3), crate::ratio(2, 3)])?;
    let space = StateSpace::numbered(2)?;
    EventFamily::named(
        space,
        vec![
            ("0".into(), NumericalEvent::zero(2)),
            ("p".into(), p.clone()),
            ("p'".into(), p.complement()),
            ("1".into(), NumericalEvent::one(2)),
        ],
    )
}

/// A family over a single state with the given values (in order).
pub fn scalar_events(values: &[Rational]) -> Result<EventFamily> {
    let space = StateSpace::numbered(1)?;
    let events = values.iter().map(|v| NumericalEvent::new(vec![v.clone()])).collect::<Result<_>>()?;
    EventFamily::new(space, events)
}

/// Every commutative `+` on a fixed orthomodular lattice with `x + 1 = x′`
/// and `x + y = x ∨ y` whenever `x ⊥ y`; each such table makes the lattice's
/// meet and `+` an RLSE.
///
/// Forced cells come from those two rules. The remaining unordered pairs
/// `{x, y}` (neither is `1`, and `x ≰ y′`) are free and range over the whole
/// carrier. Extensions are numbered in lexicographic order of the free
/// values, the first free cell (row-major) being most significant.
#[derive(Clone, Debug)]
pub struct PlusExtensions {
    times: Table,
    base: Table,
    free: Vec<(usize, usize)>,
    zero: usize,
    one: usize,
    names: Option<Vec<String>>,
}

impl PlusExtensions {
    pub fn new(lat: &OrthoLattice) -> Result<Self> {
        let n = lat.size();
        if n > MAX_EXTENSION_SIZE {
            return Err(Error::TooLarge { size: n, cap: MAX_EXTENSION_SIZE });
        }
        let v = check_orthomodular(lat);
        if !v.passed {
            return Err(Error::NotOrthomodular(Box::new(v)));
        }
        let one = lat.one();
        let mut base = Table::from_fn(n, |_, _| 0);
        let mut free = Vec::new();
        for x in 0..n {
            for y in x..n {
                let forced = if x == one || y == one {
                    Some(lat.comp(if x == one { y } else { x }))
                } else if lat.orthogonal(x, y) {
                    Some(lat.join(x, y))
                } else {
                    None
                };
                match forced {
                    Some(v) => {
                        base.set(x, y, v);
                        base.set(y, x, v);
                    }
                    None => free.push((x, y)),
                }
            }
        }
        Ok(PlusExtensions {
            times: lat.meet_table().clone(),
            base,
            free,
            zero: lat.zero(),
            one,
            names: lat.names().map(<[String]>::to_vec),
        })
    }

    /// Unordered free cells `(x, y)` with `x ≤ y`, row-major.
    pub fn free_cells(&self) -> &[(usize, usize)] {
        &self.free
    }

    /// Number of extensions, `size^free`.
    pub fn len(&self) -> u64 {
        (self.base.size() as u64).pow(self.free.len() as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The `k`-th extension.
    pub fn get(&self, k: u64) -> Option<RingLikeAlgebra> {
        if k >= self.len() {
            return None;
        }
        let n = self.base.size() as u64;
        let mut plus = self.base.clone();
        let mut rest = k;
        for &(x, y) in self.free.iter().rev() {
            let v = (rest % n) as usize;
            rest /= n;
            plus.set(x, y, v);
            plus.set(y, x, v);
        }
        let mut alg = RingLikeAlgebra::with_cap(plus, self.times.clone(), self.zero, self.one, usize::MAX)
            .expect("tables are total");
        alg.set_names(self.names.clone());
        Some(alg)
    }

    pub fn iter(&self) -> impl Iterator<Item = RingLikeAlgebra> + '_ {
        (0..self.len()).map(move |k| self.get(k).expect("index in range"))
    }
}

/// The first `limit` extensions of [`PlusExtensions`].
pub fn enumerate_plus_extensions(lat: &OrthoLattice, limit: usize) -> Result<Vec<RingLikeAlgebra>> {
    Ok(PlusExtensions::new(lat)?.iter().take(limit).collect())
}
