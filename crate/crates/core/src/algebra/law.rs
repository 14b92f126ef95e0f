use crate::algebra::Finite;
use crate::{Verdict, Witness};

/// Triple-quantified laws log a warning above this carrier size.
pub const TRIPLE_WARN_SIZE: usize = 64;

/// An equation (or conditional equation) over a finite structure `A`.
///
/// `eval` returns both sides at a tuple of `arity` carrier elements, or
/// `None` when the tuple does not meet the law's premise.
/// Evaluates both sides of a law at a tuple of carrier elements.
pub type LawEval<A> = fn(&A, &[usize]) -> Option<(usize, usize)>;

pub struct Law<A: ?Sized> {
    pub name: &'static str,
    pub arity: usize,
    eval: LawEval<A>,
}

impl<A: Finite + ?Sized> Law<A> {
    pub const fn new(name: &'static str, arity: usize, eval: LawEval<A>) -> Self {
        Law { name, arity, eval }
    }

    /// Both sides at `args`, or `None` if the premise does not apply.
    pub fn evaluate(&self, alg: &A, args: &[usize]) -> Option<(usize, usize)> {
        debug_assert_eq!(args.len(), self.arity);
        (self.eval)(alg, args)
    }

    /// Exhaustive check; the witness is the first failing tuple in
    /// lexicographic order.
    pub fn check(&self, alg: &A) -> Verdict {
        let mut found = None;
        self.scan(alg, |w| {
            found = Some(w);
            false
        });
        match found {
            Some(w) => Verdict::fail(self.name, w),
            None => Verdict::pass(self.name),
        }
    }

    /// Every failing tuple, in lexicographic order.
    pub fn failures(&self, alg: &A) -> Vec<Witness> {
        let mut all = Vec::new();
        self.scan(alg, |w| {
            all.push(w);
            true
        });
        all
    }

    pub fn holds(&self, alg: &A) -> bool {
        self.check(alg).passed
    }

    fn scan(&self, alg: &A, mut on_failure: impl FnMut(Witness) -> bool) {
        let n = alg.size();
        if self.arity >= 3 && n > TRIPLE_WARN_SIZE {
            log::warn!("checking {} over {} elements scans {} tuples", self.name, n, n.pow(3));
        }
        let mut args = vec![0usize; self.arity];
        loop {
            if let Some((lhs, rhs)) = (self.eval)(alg, &args) {
                if lhs != rhs && !on_failure(Witness::elements(&args, lhs, rhs)) {
                    return;
                }
            }
            // odometer, last position fastest
            let mut pos = self.arity;
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                args[pos] += 1;
                if args[pos] < n {
                    break;
                }
                args[pos] = 0;
            }
        }
    }
}

/// Checks each law in order and returns the first failure, or a pass under
/// `name`.
pub fn check_all<A: Finite + ?Sized>(alg: &A, name: &str, laws: &[&Law<A>]) -> Verdict {
    for law in laws {
        let v = law.check(alg);
        if !v.passed {
            return v;
        }
    }
    Verdict::pass(name)
}
