use std::fmt;

use crate::{Error, Result};

/// A total binary operation on `0..size`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Table {
    size: usize,
    cells: Vec<usize>,
}

impl Table {
    /// Builds a table from `f(x, y)`. Entries are not range checked here;
    /// the structures that own tables validate them.
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut cells = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                cells.push(f(x, y));
            }
        }
        Table { size, cells }
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut cells = Vec::with_capacity(size * size);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != size {
                return Err(Error::RaggedTable { row, len: r.len(), size });
            }
            cells.extend(r);
        }
        let table = Table { size, cells };
        table.validate()?;
        Ok(table)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.size + y]
    }

    pub fn set(&mut self, x: usize, y: usize, value: usize) {
        self.cells[x * self.size + y] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.cells.chunks(self.size)
    }

    /// First cell, in row-major order, where the two tables differ.
    pub fn first_difference(&self, other: &Table) -> Option<(usize, usize)> {
        self.differences(other).next()
    }

    /// All cells where the tables differ, in row-major order.
    pub fn differences<'a>(&'a self, other: &'a Table) -> impl Iterator<Item = (usize, usize)> + 'a {
        assert_eq!(self.size, other.size, "tables over different carriers");
        let n = self.size;
        self.cells.iter().zip(&other.cells).enumerate().filter(|(_, (a, b))| a != b).map(move |(k, _)| (k / n, k % n))
    }

    pub(crate) fn validate(&self) -> Result<()> {
        match self.cells.iter().find(|&&v| v >= self.size) {
            Some(&index) => Err(Error::InvalidIndex { index, size: self.size }),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}
