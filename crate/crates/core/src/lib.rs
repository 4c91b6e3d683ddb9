//! Partitions of natural numbers into distinct Fibonacci numbers.
//!
//! With `f_1 = 1, f_2 = 2, f_3 = 3, f_4 = 5, ...`, a Fibonacci partition of
//! `n` is a set of distinct `f_i` summing to `n`. This crate counts them
//! from the Zeckendorf representation of `n` alone:
//!
//! * [`counting`]: the partition-count polynomial `F(n;t)`, the count
//!   `F(n)` and the signed count `chi(n) = F(n;-1)`, all in a number of
//!   arithmetic steps logarithmic in `n`;
//! * [`contfrac`]: the dictionary between associated vectors and reduced
//!   fractions, and the word `pi(n)` whose denominators multiply to `F(n)`;
//! * [`orbits`]: the `F`-preserving maps `omega`, `tau`, `S`, essential
//!   numbers and their `*` product;
//! * [`enumeration`]: `Psi(k)`, `Psi_Sigma(k)`, the commutative product and
//!   the search for the least `n` with `F(n) = k`;
//! * [`chi_analysis`]: zero statistics and run structure of `chi`, and the
//!   convex hull of the graph of `F`;
//! * [`oracle`]: brute-force enumeration used as ground truth.

pub mod chi_analysis;
pub mod contfrac;
pub mod counting;
pub mod enumeration;
mod error;
pub mod fibcore;
pub mod oracle;
pub mod orbits;
pub mod poly;

pub use error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type Natural = num_bigint::BigUint;

pub use contfrac::{Fraction, Word};
pub use counting::{chi, count_f, fib_poly, AssocVector, Multivector};
pub use fibcore::{fib, zeckendorf, TwoPartition};
pub use poly::IntPolynomial;
