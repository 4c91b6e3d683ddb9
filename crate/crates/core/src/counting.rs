//! Canonical decomposition of a Zeckendorf representation and the counting
//! functions built on it.
//!
//! A 2-partition splits into simple components (maximal blocks of indices of
//! equal parity). Its associated vector records halved index gaps, and the
//! partition-count polynomial is the product, over components, of a
//! tridiagonal determinant `D(A;t)` given by a three-term recurrence.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::contfrac;
use crate::fibcore::{is_odd, zeckendorf, TwoPartition};
use crate::poly::IntPolynomial;
use crate::{Error, Natural, Result};

/// A vector of positive integers `(a_1, ..., a_q)` feeding the determinant
/// recurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AssocVector(pub Vec<u64>);

impl AssocVector {
    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `a_1 >= 1` and every later entry `>= 2`.
    pub fn in_a1(&self) -> bool {
        !self.0.is_empty() && self.0[0] >= 1 && self.0[1..].iter().all(|&a| a >= 2)
    }

    /// Every entry `>= 2`.
    pub fn in_a2(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|&a| a >= 2)
    }

    /// `d(A) = a_1 + ... + a_q - q`.
    pub fn excess(&self) -> u64 {
        self.0.iter().map(|a| a - 1).sum()
    }

    /// `D(A;1)`.
    pub fn det(&self) -> BigInt {
        d_value(&self.0)
    }

    /// `D(A;t)`.
    pub fn poly(&self) -> IntPolynomial {
        poly_d(&self.0)
    }
}

impl From<Vec<u64>> for AssocVector {
    fn from(v: Vec<u64>) -> Self {
        AssocVector(v)
    }
}

/// `A_1 x ... x A_s`, one vector per simple component. Empty for `Z(0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Multivector(pub Vec<AssocVector>);

impl Multivector {
    pub fn components(&self) -> &[AssocVector] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Splits a nonempty 2-partition into its simple components.
pub fn canonical_form(part: &TwoPartition) -> Result<Vec<TwoPartition>> {
    let idx = part.indices();
    if idx.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let mut blocks = Vec::new();
    let mut start = 0;
    for k in 1..idx.len() {
        if is_odd(idx[k] - idx[k - 1]) {
            blocks.push(TwoPartition::from_vec_unchecked(idx[start..k].to_vec()));
            start = k;
        }
    }
    blocks.push(TwoPartition::from_vec_unchecked(idx[start..].to_vec()));
    Ok(blocks)
}

/// Associated vector: `a_1 = floor((i_1 - 1)/2) + 1`,
/// `a_r = floor((i_r - i_{r-1})/2) + 1`.
pub fn assoc_vector(part: &TwoPartition) -> Result<AssocVector> {
    let idx = part.indices();
    let first = *idx.first().ok_or(Error::EmptyPartition)?;
    let mut out = Vec::with_capacity(idx.len());
    out.push(((first - 1) / 2 + 1) as u64);
    out.extend(idx.windows(2).map(|w| ((w[1] - w[0]) / 2 + 1) as u64));
    Ok(AssocVector(out))
}

/// The associated vector sliced along the simple components.
pub fn assoc_multivector(part: &TwoPartition) -> Multivector {
    let Ok(blocks) = canonical_form(part) else {
        return Multivector::default();
    };
    let alpha = assoc_vector(part).expect("nonempty partition");
    let mut rest = alpha.0.as_slice();
    let comps = blocks
        .iter()
        .map(|b| {
            let (head, tail) = rest.split_at(b.len());
            rest = tail;
            AssocVector(head.to_vec())
        })
        .collect();
    Multivector(comps)
}

/// `D(A;1)`: `D_r = a_r D_{r-1} - D_{r-2}` with `D_0 = 1`, `D_{-1} = 0`.
pub fn d_value(alphas: &[u64]) -> BigInt {
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    for &a in alphas {
        let next = BigInt::from(a) * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `D(A;t)`: `D_r = phi_{a_r}(t) D_{r-1} - t^{a_r + 1} D_{r-2}`.
pub fn poly_d(alphas: &[u64]) -> IntPolynomial {
    let mut prev = IntPolynomial::zero();
    let mut cur = IntPolynomial::one();
    for &a in alphas {
        let step = &(&IntPolynomial::phi(a) * &cur) - &prev.shifted(a as usize + 1);
        prev = std::mem::replace(&mut cur, step);
    }
    cur
}

/// `F(n;t) = sum_h F_h(n) t^h`, with `F(0;t) = 1`.
pub fn fib_poly(n: &Natural) -> IntPolynomial {
    fib_poly_of(&zeckendorf(n))
}

pub fn fib_poly_of(part: &TwoPartition) -> IntPolynomial {
    assoc_multivector(part)
        .0
        .iter()
        .fold(IntPolynomial::one(), |acc, a| &acc * &a.poly())
}

/// Number of partitions of `n` into distinct Fibonacci numbers.
pub fn count_f(n: &Natural) -> Natural {
    count_f_of(&zeckendorf(n))
}

pub fn count_f_of(part: &TwoPartition) -> Natural {
    let total = assoc_multivector(part)
        .0
        .iter()
        .fold(BigInt::one(), |acc, a| acc * a.det());
    total.to_biguint().expect("partition counts are positive")
}

/// Number of those partitions with exactly `h` parts.
pub fn count_fh(n: &Natural, h: usize) -> Natural {
    fib_poly(n)
        .coeff(h)
        .to_biguint()
        .expect("coefficients are nonnegative")
}

/// `chi(n) = F(n;-1)`, via the fraction product
/// `chi(n) = prod chi~(<A_m>)` with `chi~(a/b) = [b odd](1 - 2[a odd])`.
pub fn chi(n: &Natural) -> i8 {
    chi_of(&zeckendorf(n))
}

pub fn chi_of(part: &TwoPartition) -> i8 {
    assoc_multivector(part)
        .0
        .iter()
        .map(|a| {
            contfrac::eval_cf(a)
                .expect("multivector components are valid")
                .chi_tilde()
        })
        .product()
}

/// `chi(n)` by evaluating the full polynomial at `t = -1`.
pub fn chi_via_poly(n: &Natural) -> i8 {
    let v = fib_poly(n).eval_at_minus_one();
    i8::try_from(v).expect("|chi| <= 1")
}

/// `chi(n)` by the parity reduction of `D(A;-1)` on each component.
pub fn chi_via_reduction(n: &Natural) -> i8 {
    assoc_multivector(&zeckendorf(n))
        .0
        .iter()
        .map(|a| d_at_minus_one(a.entries()))
        .product()
}

/// `D(A;-1)` for any positive vector, reducing on the parities of the
/// trailing entries:
///
/// * last entry even: drop the last two entries;
/// * last two odd: drop the last three;
/// * last odd, previous even: drop the last and make the previous odd.
pub fn d_at_minus_one(alphas: &[u64]) -> i8 {
    let mut odd: Vec<bool> = alphas.iter().map(|a| a % 2 == 1).collect();
    loop {
        let q = odd.len();
        match q {
            0 => return 1,
            1 => return if odd[0] { -1 } else { 0 },
            2 => {
                let (l1, l2) = (i8::from(odd[0]), i8::from(odd[1]));
                return l1 * l2 - 2 * l2 + 1;
            }
            _ => {
                if !odd[q - 1] {
                    odd.truncate(q - 2);
                } else if odd[q - 2] {
                    odd.truncate(q - 3);
                } else {
                    odd.truncate(q - 1);
                    odd[q - 2] = true;
                }
            }
        }
    }
}

/// Parity of a nonnegative big integer.
pub(crate) fn big_is_odd(v: &BigUint) -> bool {
    v.bit(0)
}
