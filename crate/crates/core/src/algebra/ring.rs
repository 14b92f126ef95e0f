use crate::algebra::{check_names, Finite, Table, DEFAULT_MAX_SIZE};
use crate::{Error, Result};

/// An algebra `(R, +, ·, 0, 1)` of type (2, 2, 0, 0) given by its tables.
///
/// Only totality is enforced on construction; whether the algebra is an
/// RLSE, specific, a Boolean ring and so on is decided by the checks in
/// [`crate::algebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingLikeAlgebra {
    plus: Table,
    times: Table,
    zero: usize,
    one: usize,
    names: Option<Vec<String>>,
}

impl RingLikeAlgebra {
    pub fn new(plus: Table, times: Table, zero: usize, one: usize) -> Result<Self> {
        Self::with_cap(plus, times, zero, one, DEFAULT_MAX_SIZE)
    }

    /// Like [`RingLikeAlgebra::new`] with an explicit carrier size cap.
    pub fn with_cap(plus: Table, times: Table, zero: usize, one: usize, cap: usize) -> Result<Self> {
        let size = plus.size();
        if size == 0 {
            return Err(Error::EmptyCarrier);
        }
        if times.size() != size {
            return Err(Error::SizeMismatch { left: size, right: times.size() });
        }
        if size > cap {
            return Err(Error::TooLarge { size, cap });
        }
        plus.validate()?;
        times.validate()?;
        for index in [zero, one] {
            if index >= size {
                return Err(Error::InvalidIndex { index, size });
            }
        }
        if size >= 2 && zero == one {
            return Err(Error::DegenerateConstants { size });
        }
        Ok(RingLikeAlgebra { plus, times, zero, one, names: None })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        check_names(&names, self.size())?;
        self.names = Some(names);
        Ok(self)
    }

    pub(crate) fn set_names(&mut self, names: Option<Vec<String>>) {
        self.names = names;
    }

    pub fn size(&self) -> usize {
        self.plus.size()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.plus.get(x, y)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.times.get(x, y)
    }

    /// `x + 1`, the complement in the associated lattice.
    #[inline]
    pub fn comp(&self, x: usize) -> usize {
        self.plus.get(x, self.one)
    }

    /// `x ≤ y` iff `xy = x`.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == x
    }

    pub fn plus(&self) -> &Table {
        &self.plus
    }

    pub fn times(&self) -> &Table {
        &self.times
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label of `x`: its name if the algebra has names, else its index.
    pub fn label(&self, x: usize) -> String {
        match &self.names {
            Some(n) => n[x].clone(),
            None => x.to_string(),
        }
    }

    /// Same algebra with one `+` entry replaced.
    pub fn with_plus_entry(&self, x: usize, y: usize, value: usize) -> Result<Self> {
        let mut plus = self.plus.clone();
        plus.set(x, y, value);
        let mut out = Self::with_cap(plus, self.times.clone(), self.zero, self.one, usize::MAX)?;
        out.names = self.names.clone();
        Ok(out)
    }

    /// Same algebra with one `·` entry replaced.
    pub fn with_times_entry(&self, x: usize, y: usize, value: usize) -> Result<Self> {
        let mut times = self.times.clone();
        times.set(x, y, value);
        let mut out = Self::with_cap(self.plus.clone(), times, self.zero, self.one, usize::MAX)?;
        out.names = self.names.clone();
        Ok(out)
    }
}

impl Finite for RingLikeAlgebra {
    fn size(&self) -> usize {
        self.plus.size()
    }
}
