//! Fibonacci numbers indexed as `f_0 = f_1 = 1, f_2 = 2, f_3 = 3, f_4 = 5`,
//! the Zeckendorf codec and index-set (2-partition) primitives.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Natural, Result};

/// Largest index whose Fibonacci number fits in a `u64`.
pub const MAX_U64_INDEX: usize = 92;

const FIB_U64: [u64; MAX_U64_INDEX + 1] = {
    let mut table = [0u64; MAX_U64_INDEX + 1];
    table[0] = 1;
    table[1] = 1;
    let mut i = 2;
    while i <= MAX_U64_INDEX {
        table[i] = table[i - 1] + table[i - 2];
        i += 1;
    }
    table
};

/// `f_i` as a `u64`, or `None` once it no longer fits.
pub fn fib_u64(i: usize) -> Option<u64> {
    FIB_U64.get(i).copied()
}

/// The Fibonacci number `f_i` under `f_0 = f_1 = 1`.
pub fn fib(i: usize) -> Natural {
    if let Some(v) = fib_u64(i) {
        return Natural::from(v);
    }
    // f_i is the standard F_{i+1}; fast doubling on (F_k, F_{k+1}).
    let (a, _) = standard_pair(i as u64 + 1);
    a
}

fn standard_pair(k: u64) -> (BigUint, BigUint) {
    if k == 0 {
        return (BigUint::zero(), BigUint::one());
    }
    let (a, b) = standard_pair(k / 2);
    let two_b = &b << 1usize;
    let c = &a * (two_b - &a);
    let d = &a * &a + &b * &b;
    if k.is_multiple_of(2) {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

/// Strictly increasing set of Fibonacci indices (each `>= 1`) whose
/// consecutive entries differ by at least 2.
///
/// The empty set is the Zeckendorf representation of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TwoPartition(Vec<usize>);

impl TwoPartition {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        let ok =
            indices.first().is_none_or(|&i| i >= 1) && indices.windows(2).all(|w| w[1] >= w[0] + 2);
        if ok {
            Ok(TwoPartition(indices))
        } else {
            Err(Error::NotTwoPartition(indices))
        }
    }

    pub(crate) fn from_vec_unchecked(indices: Vec<usize>) -> Self {
        debug_assert!(TwoPartition::new(indices.clone()).is_ok(), "{indices:?}");
        TwoPartition(indices)
    }

    pub fn empty() -> Self {
        TwoPartition(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_indices(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `f_I`, the sum of the Fibonacci numbers indexed by the set.
    pub fn content(&self) -> Natural {
        content(&self.0)
    }

    /// Smallest index, 0 for the empty set.
    pub fn mu_first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Largest index, 0 for the empty set.
    pub fn mu_last(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    /// Every index raised by `k`.
    pub fn shift(&self, k: usize) -> TwoPartition {
        TwoPartition(self.0.iter().map(|&i| i + k).collect())
    }
}

impl fmt::Display for TwoPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Sum of `f_i` over a strictly increasing index list.
pub fn content(indices: &[usize]) -> Natural {
    if indices.iter().all(|&i| i <= MAX_U64_INDEX) {
        // Distinct f_i with i <= 92 sum to less than f_94 < 2^128.
        let total: u128 = indices.iter().map(|&i| u128::from(FIB_U64[i])).sum();
        return Natural::from(total);
    }
    indices.iter().map(|&i| fib(i)).sum()
}

/// Zeckendorf representation `Z(n)`, by greedy largest-first subtraction.
pub fn zeckendorf(n: &Natural) -> TwoPartition {
    if let Some(small) = n.to_u64() {
        return zeckendorf_u64(small);
    }
    let mut table = vec![Natural::one(), Natural::one()];
    while table.last().is_some_and(|f| f <= n) {
        let next = &table[table.len() - 1] + &table[table.len() - 2];
        table.push(next);
    }
    let mut rest = n.clone();
    let mut indices = Vec::new();
    let mut i = table.len() - 1;
    while !rest.is_zero() {
        while table[i] > rest {
            i -= 1;
        }
        rest -= &table[i];
        indices.push(i);
        // The remainder is below f_{i-1}, so the next part is at most i - 2.
        i = i.saturating_sub(2).max(1);
    }
    indices.reverse();
    TwoPartition::from_vec_unchecked(indices)
}

/// [`zeckendorf`] for machine-sized input.
pub fn zeckendorf_u64(mut n: u64) -> TwoPartition {
    let mut indices = Vec::new();
    let mut i = MAX_U64_INDEX;
    while n > 0 {
        while FIB_U64[i] > n {
            i -= 1;
        }
        n -= FIB_U64[i];
        indices.push(i);
        i = i.saturating_sub(2).max(1);
    }
    indices.reverse();
    TwoPartition::from_vec_unchecked(indices)
}

/// `sigma^k` on naturals: shift every Zeckendorf index of `n` by `k`.
pub fn shift_sigma(n: &Natural, k: usize) -> Natural {
    zeckendorf(n).shift(k).content()
}

pub fn mu_first(n: &Natural) -> usize {
    zeckendorf(n).mu_first()
}

pub fn mu_last(n: &Natural) -> usize {
    zeckendorf(n).mu_last()
}

#[inline]
pub(crate) fn is_odd(i: usize) -> bool {
    i % 2 == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Natural {
        Natural::from(v)
    }

    fn greedy_oracle(mut v: u64) -> Vec<usize> {
        // Independent: rebuild the table by plain addition.
        let mut f = vec![1u64, 1];
        while *f.last().unwrap() <= v {
            let k = f.len();
            f.push(f[k - 1] + f[k - 2]);
        }
        let mut out = Vec::new();
        for i in (1..f.len()).rev() {
            if f[i] <= v {
                v -= f[i];
                out.push(i);
            }
        }
        out.reverse();
        out
    }

    #[test]
    fn fib_values() {
        assert_eq!(fib(0), n(1));
        assert_eq!(fib(1), n(1));
        assert_eq!(fib(2), n(2));
        assert_eq!(fib(3), n(3));
        assert_eq!(fib(4), n(5));
        assert_eq!(fib(26), n(196418));
    }

    #[test]
    fn fib_big_index_matches_addition() {
        let mut a = Natural::from(1u32);
        let mut b = Natural::from(1u32);
        for i in 2..=300 {
            let c = &a + &b;
            a = b;
            b = c;
            assert_eq!(fib(i), b, "f_{i}");
        }
    }

    #[test]
    fn zeckendorf_examples() {
        assert!(zeckendorf(&n(0)).is_empty());
        assert_eq!(zeckendorf(&n(24)).indices(), &[3, 7]);
        assert_eq!(zeckendorf(&n(100)).indices(), &[3, 5, 10]);
        assert_eq!(zeckendorf(&n(55)).indices(), &[9]);
    }

    #[test]
    fn zeckendorf_matches_greedy_oracle() {
        for v in 0..5000u64 {
            assert_eq!(zeckendorf_u64(v).indices(), greedy_oracle(v).as_slice());
        }
    }

    #[test]
    fn big_zeckendorf_round_trips() {
        let big = fib(200) + fib(150) + fib(3) + Natural::from(u64::MAX);
        let z = zeckendorf(&big);
        assert!(TwoPartition::new(z.indices().to_vec()).is_ok());
        assert_eq!(z.content(), big);
    }

    #[test]
    fn content_examples() {
        assert_eq!(content(&[]), n(0));
        assert_eq!(content(&[3, 7]), n(24));
        assert_eq!(content(&[5, 9]), n(63));
    }

    #[test]
    fn shift_examples() {
        let p = TwoPartition::new(vec![5, 7]).unwrap();
        assert_eq!(p.shift(5).indices(), &[10, 12]);
        assert_eq!(n(11) + p.shift(5).content(), n(333));
        let q = TwoPartition::new(vec![3, 5]).unwrap();
        assert_eq!(q.shift(7).indices(), &[10, 12]);
        assert!(TwoPartition::empty().shift(9).is_empty());
    }

    #[test]
    fn mu_examples() {
        assert_eq!((mu_first(&n(24)), mu_last(&n(24))), (3, 7));
        assert_eq!((mu_first(&n(0)), mu_last(&n(0))), (0, 0));
        assert_eq!((mu_first(&n(55)), mu_last(&n(55))), (9, 9));
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(TwoPartition::new(vec![3, 4]).is_err());
        assert!(TwoPartition::new(vec![0, 2]).is_err());
        assert!(TwoPartition::new(vec![5, 3]).is_err());
    }

    #[test]
    fn prefix_sum_identity() {
        for r in 1..=40 {
            let sum: Natural = (1..=r).map(fib).sum();
            assert_eq!(sum + n(2), fib(r + 2), "r = {r}");
        }
    }

    #[test]
    fn addition_formula() {
        for a in 1..=30 {
            for b in 1..=30 {
                assert_eq!(fib(a + b), fib(a) * fib(b) + fib(a - 1) * fib(b - 1));
            }
        }
    }
}
