use crate::algebra::RingLikeAlgebra;
use crate::{Error, Result, Value, Verdict, Witness};

/// A verified partial order on `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOrder {
    size: usize,
    leq: Vec<bool>,
}

impl PartialOrder {
    /// Checks reflexivity, antisymmetry and transitivity, in that order.
    pub fn new(size: usize, leq: Vec<bool>) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyCarrier);
        }
        if leq.len() != size * size {
            return Err(Error::SizeMismatch { left: size * size, right: leq.len() });
        }
        let at = |x: usize, y: usize| leq[x * size + y];
        let flags =
            |args: &[usize], lhs: bool, rhs: bool| Witness::new(args.to_vec(), Value::Flag(lhs), Value::Flag(rhs));
        for x in 0..size {
            if !at(x, x) {
                return Err(Error::NotAPartialOrder(Box::new(Verdict::fail("reflexive", flags(&[x], false, true)))));
            }
        }
        for x in 0..size {
            for y in 0..size {
                if x != y && at(x, y) && at(y, x) {
                    return Err(Error::NotAPartialOrder(Box::new(Verdict::fail(
                        "antisymmetric",
                        flags(&[x, y], true, false),
                    ))));
                }
            }
        }
        for x in 0..size {
            for y in 0..size {
                if !at(x, y) {
                    continue;
                }
                for z in 0..size {
                    if at(y, z) && !at(x, z) {
                        return Err(Error::NotAPartialOrder(Box::new(Verdict::fail(
                            "transitive",
                            flags(&[x, y, z], false, true),
                        ))));
                    }
                }
            }
        }
        Ok(PartialOrder { size, leq })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.size + y]
    }

    /// All related pairs `(x, y)` with `x ≤ y`, in row-major order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        (0..n * n).filter(|&k| self.leq[k]).map(|k| (k / n, k % n)).collect()
    }
}

/// The order `x ≤ y iff xy = x` induced by the multiplication.
pub fn derive_order(alg: &RingLikeAlgebra) -> Result<PartialOrder> {
    let n = alg.size();
    let leq = (0..n * n).map(|k| alg.leq(k / n, k % n)).collect();
    PartialOrder::new(n, leq)
}
