//! Brute-force ground truth. Nothing here goes through the determinant
//! machinery: partitions are found by depth-first search and `chi` by
//! multiplying out `prod (1 - x^{f_i})`.

use num_traits::ToPrimitive;

use crate::fibcore::fib_u64;
use crate::{Error, IntPolynomial, Natural, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `n` the search accepts.
    pub bound: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { bound: 100_000 }
    }
}

/// All partitions of one number into distinct Fibonacci numbers, each as
/// an increasing list of indices (all `>= 1`), in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionList {
    pub partitions: Vec<Vec<usize>>,
}

impl PartitionList {
    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }
}

impl OracleConfig {
    fn admit(&self, n: &Natural) -> Result<u64> {
        match n.to_u64() {
            Some(v) if v <= self.bound => Ok(v),
            _ => Err(Error::OracleBound {
                n: n.to_u64().unwrap_or(u64::MAX),
                bound: self.bound,
            }),
        }
    }

    pub fn partitions(&self, n: &Natural) -> Result<PartitionList> {
        let n = self.admit(n)?;
        let mut fibs = vec![0u64];
        let mut i = 1;
        while let Some(f) = fib_u64(i).filter(|&f| f <= n) {
            fibs.push(f);
            i += 1;
        }
        let mut out = Vec::new();
        search(&fibs, fibs.len() - 1, n, &mut Vec::new(), &mut out);
        for p in &mut out {
            p.reverse();
        }
        out.sort();
        Ok(PartitionList { partitions: out })
    }

    pub fn poly(&self, n: &Natural) -> Result<IntPolynomial> {
        let parts = self.partitions(n)?;
        let max = parts.partitions.iter().map(Vec::len).max().unwrap_or(0);
        let mut coeffs = vec![0i64; max + 1];
        for p in &parts.partitions {
            coeffs[p.len()] += 1;
        }
        Ok(IntPolynomial::from_i64s(&coeffs))
    }
}

// Picks from indices top, top-1, ..., 1; f_1 + ... + f_i = f_{i+2} - 2 bounds what is left.
fn search(fibs: &[u64], top: usize, rest: u64, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(chosen.clone());
        return;
    }
    if top == 0 {
        return;
    }
    let reachable = fib_u64(top + 2).map_or(u64::MAX, |f| f - 2);
    if reachable < rest {
        return;
    }
    if fibs[top] <= rest {
        chosen.push(top);
        search(fibs, top - 1, rest - fibs[top], chosen, out);
        chosen.pop();
    }
    search(fibs, top - 1, rest, chosen, out);
}

pub fn brute_partitions(n: &Natural) -> Result<PartitionList> {
    OracleConfig::default().partitions(n)
}

/// `sum over partitions of t^(number of parts)`.
pub fn brute_poly(n: &Natural) -> Result<IntPolynomial> {
    OracleConfig::default().poly(n)
}

/// Coefficients of `x^0..=x^N` in `prod_{f_i <= N} (1 - x^{f_i})`.
pub fn product_chi(n: u64) -> Vec<i64> {
    let len = usize::try_from(n).expect("length fits in memory") + 1;
    let mut c = vec![0i64; len];
    c[0] = 1;
    let mut i = 1;
    while let Some(f) = fib_u64(i).filter(|&f| f <= n) {
        let f = f as usize;
        for k in (f..len).rev() {
            c[k] -= c[k - f];
        }
        i += 1;
    }
    c
}
