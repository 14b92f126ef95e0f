use crate::algebra::{check_names, Finite, Table, DEFAULT_MAX_SIZE};
use crate::{Error, Result};

/// A finite algebra `(L, ∨, ∧, ′, 0, 1)` of type (2, 2, 1, 0, 0).
///
/// Construction checks that the tables are total and that `′` is a
/// permutation. Lattice, ortholattice and orthomodular laws are checked
/// separately; see [`crate::algebra::check_ortholattice`] and
/// [`crate::algebra::check_orthomodular`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoLattice {
    meet: Table,
    join: Table,
    comp: Vec<usize>,
    zero: usize,
    one: usize,
    names: Option<Vec<String>>,
}

impl OrthoLattice {
    pub fn new(meet: Table, join: Table, comp: Vec<usize>, zero: usize, one: usize) -> Result<Self> {
        Self::with_cap(meet, join, comp, zero, one, DEFAULT_MAX_SIZE)
    }

    pub fn with_cap(meet: Table, join: Table, comp: Vec<usize>, zero: usize, one: usize, cap: usize) -> Result<Self> {
        let size = meet.size();
        if size == 0 {
            return Err(Error::EmptyCarrier);
        }
        if join.size() != size {
            return Err(Error::SizeMismatch { left: size, right: join.size() });
        }
        if comp.len() != size {
            return Err(Error::SizeMismatch { left: size, right: comp.len() });
        }
        if size > cap {
            return Err(Error::TooLarge { size, cap });
        }
        meet.validate()?;
        join.validate()?;
        for &index in comp.iter().chain([&zero, &one]) {
            if index >= size {
                return Err(Error::InvalidIndex { index, size });
            }
        }
        let mut hit = vec![false; size];
        for &c in &comp {
            hit[c] = true;
        }
        if let Some(missing) = hit.iter().position(|h| !h) {
            return Err(Error::ComplementNotPermutation(missing));
        }
        if size >= 2 && zero == one {
            return Err(Error::DegenerateConstants { size });
        }
        Ok(OrthoLattice { meet, join, comp, zero, one, names: None })
    }

    /// Builds meet and join from a partial order given as a predicate.
    ///
    /// Fails with [`Error::NotALattice`] when some pair lacks an infimum or a
    /// supremum. The order itself is assumed to be a partial order.
    pub fn from_order(
        size: usize,
        leq: impl Fn(usize, usize) -> bool,
        comp: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let mut meet = Table::from_fn(size, |_, _| 0);
        let mut join = Table::from_fn(size, |_, _| 0);
        for x in 0..size {
            for y in 0..size {
                let lower: Vec<usize> = (0..size).filter(|&z| leq(z, x) && leq(z, y)).collect();
                let inf = lower
                    .iter()
                    .copied()
                    .find(|&g| lower.iter().all(|&z| leq(z, g)))
                    .ok_or(Error::NotALattice { x, y, bound: "infimum" })?;
                let upper: Vec<usize> = (0..size).filter(|&z| leq(x, z) && leq(y, z)).collect();
                let sup = upper
                    .iter()
                    .copied()
                    .find(|&g| upper.iter().all(|&z| leq(g, z)))
                    .ok_or(Error::NotALattice { x, y, bound: "supremum" })?;
                meet.set(x, y, inf);
                join.set(x, y, sup);
            }
        }
        Self::new(meet, join, comp, zero, one)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        check_names(&names, self.size())?;
        self.names = Some(names);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.meet.size()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet.get(x, y)
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join.get(x, y)
    }

    #[inline]
    pub fn comp(&self, x: usize) -> usize {
        self.comp[x]
    }

    /// `x ≤ y` iff `x ∧ y = x`.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.meet(x, y) == x
    }

    /// `x ⊥ y` iff `x ≤ y′`.
    pub fn orthogonal(&self, x: usize, y: usize) -> bool {
        self.leq(x, self.comp(y))
    }

    pub fn meet_table(&self) -> &Table {
        &self.meet
    }

    pub fn join_table(&self) -> &Table {
        &self.join
    }

    pub fn comp_table(&self) -> &[usize] {
        &self.comp
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub(crate) fn set_names(&mut self, names: Option<Vec<String>>) {
        self.names = names;
    }

    pub fn label(&self, x: usize) -> String {
        match &self.names {
            Some(n) => n[x].clone(),
            None => x.to_string(),
        }
    }
}

impl Finite for OrthoLattice {
    fn size(&self) -> usize {
        self.meet.size()
    }
}
