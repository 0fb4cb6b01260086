use std::sync::{OnceLock, RwLock};

use rug::{Integer, Rational};
use serde::Serialize;

use crate::numerics::{Rat, Real};

/// Sign convention for `B_1`; the two conventions agree everywhere else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum Convention {
    /// `B_1 = −1/2`, the generating function `t/(e^t − 1)`.
    #[default]
    B1MinusHalf,
    /// `B_1 = +1/2`, the generating function `t/(1 − e^{−t})`.
    B1PlusHalf,
}

/// Memoized exact Bernoulli numbers in the `B_1 = −1/2` convention.
///
/// Readers share the table; a single writer extends it on demand.
pub struct BernoulliTable {
    values: RwLock<Vec<Rational>>,
}

impl BernoulliTable {
    fn new() -> Self {
        BernoulliTable {
            values: RwLock::new(vec![Rational::from(1)]),
        }
    }

    /// Process-wide table.
    pub fn global() -> &'static BernoulliTable {
        static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
        TABLE.get_or_init(BernoulliTable::new)
    }

    pub fn get(&self, n: usize, convention: Convention) -> Rat {
        {
            let values = self.values.read().expect("bernoulli table poisoned");
            if n < values.len() {
                return apply_convention(n, &values[n], convention);
            }
        }
        let mut values = self.values.write().expect("bernoulli table poisoned");
        while values.len() <= n {
            let next = next_by_recurrence(&values);
            values.push(next);
        }
        apply_convention(n, &values[n], convention)
    }

    /// Number of entries computed so far.
    pub fn len(&self) -> usize {
        self.values.read().expect("bernoulli table poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

fn apply_convention(n: usize, b: &Rational, convention: Convention) -> Rat {
    if n == 1 && convention == Convention::B1PlusHalf {
        Rat::from(Rational::from(-b))
    } else {
        Rat::from(b.clone())
    }
}

/// `B_m = −1/(m+1) · Σ_{k<m} C(m+1, k) B_k` with `m = values.len()`.
fn next_by_recurrence(values: &[Rational]) -> Rational {
    let m = values.len() as u32;
    let mut acc = Rational::new();
    for (k, bk) in values.iter().enumerate() {
        if *bk.numer() == 0 {
            continue;
        }
        let c = Integer::from(Integer::binomial_u(m + 1, k as u32));
        acc += Rational::from(bk * &c);
    }
    -acc / Integer::from(m + 1)
}

/// Exact Bernoulli number `B_n`.
pub fn bernoulli(n: usize, convention: Convention) -> Rat {
    BernoulliTable::global().get(n, convention)
}

/// `B_n` rounded to working precision.
pub(crate) fn bernoulli_real(n: usize, digits: u32) -> Real {
    bernoulli(n, Convention::B1MinusHalf).to_real(digits)
}

/// `B_{2j}/(2j)!` for `j = 1..=count`, at working precision.
pub(crate) fn even_bernoulli_over_factorial(count: usize, digits: u32) -> Vec<Real> {
    let mut out = Vec::with_capacity(count);
    let mut fact = Integer::from(1);
    for j in 1..=count {
        let two_j = 2 * j as u32;
        fact *= (two_j - 1) * two_j;
        let b = bernoulli(2 * j, Convention::B1MinusHalf);
        let q = Rational::from(b.inner() / &fact);
        out.push(Rat::from(q).to_real(digits));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0, Convention::B1MinusHalf), Rat::one());
        assert_eq!(bernoulli(1, Convention::B1MinusHalf), Rat::new(-1, 2));
        assert_eq!(bernoulli(1, Convention::B1PlusHalf), Rat::new(1, 2));
        assert_eq!(bernoulli(2, Convention::B1MinusHalf), Rat::new(1, 6));
        assert_eq!(bernoulli(4, Convention::B1PlusHalf), Rat::new(-1, 30));
        assert_eq!(bernoulli(12, Convention::B1MinusHalf), Rat::new(-691, 2730));
    }

    #[test]
    fn odd_indices_vanish() {
        for m in 1..=20 {
            assert!(
                bernoulli(2 * m + 1, Convention::B1MinusHalf).is_zero(),
                "B_{}",
                2 * m + 1
            );
        }
    }

    #[test]
    fn conventions_differ_only_at_one() {
        for n in 0..30 {
            let a = bernoulli(n, Convention::B1MinusHalf);
            let b = bernoulli(n, Convention::B1PlusHalf);
            assert_eq!(a == b, n != 1, "n = {n}");
        }
    }

    #[test]
    fn concurrent_readers_see_same_table() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || bernoulli(40 + t, Convention::B1MinusHalf)))
            .collect();
        let got: Vec<Rat> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (t, b) in got.iter().enumerate() {
            assert_eq!(*b, bernoulli(40 + t, Convention::B1MinusHalf));
        }
    }
}
