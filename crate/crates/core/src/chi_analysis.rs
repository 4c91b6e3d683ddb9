//! Statistics of `chi`: the zero count `h(r)` below `f_r`, the sum `X(N)`,
//! the run structure of zeros and nonzeros, and the upper convex hull of
//! the graph of `F` between consecutive Fibonacci numbers.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::counting::{chi, count_f};
use crate::fibcore::{fib, fib_u64};
use crate::{Error, Natural, Result};

/// Sign patterns an interior run of nonzero `chi` can have.
pub const NONZERO_PATTERNS: [&[i8]; 10] = [
    &[1],
    &[-1],
    &[1, -1],
    &[-1, 1],
    &[1, 1, -1],
    &[-1, -1, 1],
    &[1, -1, -1],
    &[-1, 1, 1],
    &[1, -1, -1, 1],
    &[-1, 1, 1, -1],
];

/// `h(0..=3) = 0`, `h(4) = 1`, `h(r) = f_{r-5} + 1 + h(r-1) + 2h(r-4)`.
pub fn h_rec(r: usize) -> Natural {
    let mut h: Vec<Natural> = vec![Natural::default(); 4];
    h.push(Natural::from(1u32));
    for i in 5..=r {
        let v = fib(i - 5) + 1u32 + &h[i - 1] + &h[i - 4] * 2u32;
        h.push(v);
    }
    h.swap_remove(r)
}

/// `chi(lo), ..., chi(hi)`.
pub fn chi_values(lo: u64, hi: u64) -> Vec<i8> {
    (lo..=hi)
        .into_par_iter()
        .map(|v| chi(&Natural::from(v)))
        .collect()
}

/// `#{0 <= n <= N : chi(n) = 0}`.
pub fn count_zero_chi(n: u64) -> u64 {
    (0..=n)
        .into_par_iter()
        .filter(|&v| chi(&Natural::from(v)) == 0)
        .count() as u64
}

/// `X(N) = chi(1)^2 + ... + chi(N)^2`.
pub fn x_sum(n: u64) -> u64 {
    n - count_zero_chi(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunKind {
    Zero,
    Nonzero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunReport {
    pub start: u64,
    pub length: u64,
    pub kind: RunKind,
    /// The `chi` values, for nonzero runs; empty for zero runs.
    pub values: Vec<i8>,
}

fn runs(lo: u64, hi: u64, kind: RunKind) -> Result<Vec<RunReport>> {
    if lo >= hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    let values = chi_values(lo, hi);
    let wanted = |c: i8| (c == 0) == (kind == RunKind::Zero);
    let mut out = Vec::new();
    let mut i = 0;
    while i < values.len() {
        if !wanted(values[i]) {
            i += 1;
            continue;
        }
        let start = i;
        while i < values.len() && wanted(values[i]) {
            i += 1;
        }
        // Runs touching either end may continue outside the range.
        if start > 0 && i < values.len() {
            out.push(RunReport {
                start: lo + start as u64,
                length: (i - start) as u64,
                kind,
                values: match kind {
                    RunKind::Zero => Vec::new(),
                    RunKind::Nonzero => values[start..i].to_vec(),
                },
            });
        }
    }
    Ok(out)
}

/// Maximal runs of `chi = 0` lying strictly inside `(lo, hi)`.
pub fn zero_runs(lo: u64, hi: u64) -> Result<Vec<RunReport>> {
    runs(lo, hi, RunKind::Zero)
}

/// Maximal runs of `chi != 0` lying strictly inside `(lo, hi)`.
pub fn nonzero_runs(lo: u64, hi: u64) -> Result<Vec<RunReport>> {
    runs(lo, hi, RunKind::Nonzero)
}

/// Whether a zero run of this length fits the law `{1} U {f_r + 1}`.
pub fn zero_run_length_allowed(length: u64) -> bool {
    length == 1
        || (0..)
            .map_while(fib_u64)
            .take_while(|&f| f < length)
            .any(|f| f + 1 == length)
}

fn with_f(abscissas: Vec<Natural>) -> Vec<(Natural, Natural)> {
    abscissas
        .into_iter()
        .map(|x| {
            let f = count_f(&x);
            (x, f)
        })
        .collect()
}

/// Predicted upper-hull vertices of `{(n, F(n)) : f_r - 1 <= n <= f_{r+1} - 1}`,
/// endpoints excluded, sorted by abscissa.
pub fn hull_points(r: usize) -> Result<Vec<(Natural, Natural)>> {
    if r < 7 {
        return Err(Error::HullIndex(r));
    }
    let lo = BigInt::from(fib(r)) - 1;
    let hi = BigInt::from(fib(r + 1)) - 1;
    let f = |i: usize| BigInt::from(fib(i));
    let mut xs: Vec<BigInt> = Vec::new();
    for q in 1..=(r - 3) / 2 {
        xs.push(&lo + f(q) * f(q));
        xs.push(&hi - f(q) * f(q));
    }
    if r.is_multiple_of(2) {
        for q in 3..=(r / 2).saturating_sub(2) {
            let sign = if q % 2 == 0 { 1 } else { -1 };
            let prod = f(q) * f(q + 1);
            xs.push(&lo - 2 * sign + &prod);
            xs.push(&hi + 2 * sign - &prod);
        }
    }
    let mut xs: Vec<Natural> = xs
        .into_iter()
        .map(|x| x.to_biguint().expect("abscissa inside the interval"))
        .collect();
    xs.sort();
    xs.dedup();
    Ok(with_f(xs))
}

/// The strict upper-hull vertices of the same point set, endpoints
/// excluded, by an exact monotone chain.
pub fn computed_hull(r: usize) -> Result<Vec<(Natural, Natural)>> {
    if r < 7 {
        return Err(Error::HullIndex(r));
    }
    let lo = fib_u64(r).ok_or(Error::HullIndex(r))? - 1;
    let hi = fib_u64(r + 1).ok_or(Error::HullIndex(r))? - 1;
    let pts: Vec<(i128, i128)> = (lo..=hi)
        .into_par_iter()
        .map(|v| {
            let f = count_f(&Natural::from(v)).to_i128().expect("F(n) <= n + 1");
            (i128::from(v), f)
        })
        .collect();
    let mut hull: Vec<(i128, i128)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            // Pop unless a -> b -> p turns strictly clockwise.
            if cross >= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let inner = &hull[1..hull.len() - 1];
    Ok(inner
        .iter()
        .map(|&(x, y)| (Natural::from(x as u64), Natural::from(y as u64)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Natural {
        Natural::from(v)
    }

    fn f(i: usize) -> u64 {
        fib_u64(i).unwrap()
    }

    fn chi_u(v: u64) -> i8 {
        chi(&n(v))
    }

    fn count_u(v: u64) -> u64 {
        count_f(&n(v)).try_into().unwrap()
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_rec(0), n(0));
        assert_eq!(h_rec(3), n(0));
        assert_eq!(h_rec(4), n(1));
        assert_eq!(h_rec(5), n(3));
    }

    #[test]
    fn zero_count_examples() {
        assert_eq!(count_zero_chi(0), 0);
        assert_eq!(count_zero_chi(4), 1);
        assert_eq!(count_zero_chi(7), 3);
        assert_eq!(x_sum(0), 0);
        assert_eq!(x_sum(7), 4);
    }

    #[test]
    fn zero_count_recurrence() {
        for r in 0..20 {
            assert_eq!(n(count_zero_chi(f(r) - 1)), h_rec(r), "r = {r}");
        }
    }

    #[test]
    fn x_sum_near_f26() {
        assert_eq!(x_sum(196_417), 46_299);
        assert_eq!(x_sum(196_418), 46_300);
        assert_eq!(chi_u(196_418), -1);
    }

    #[test]
    fn zero_density_increases() {
        // h(r) / (f_r - 1) grows with r from r = 7 on.
        for r in 7..80 {
            let (a, b) = (h_rec(r), fib(r) - 1u32);
            let (c, d) = (h_rec(r + 1), fib(r + 1) - 1u32);
            assert!(c * &b > a * &d, "r = {r}");
        }
    }

    #[test]
    fn reflection_plateau_and_f_reflection() {
        for r in 2..=18usize {
            let sign = if r % 2 == 0 { 1 } else { -1 };
            for v in f(r) - 1..=f(r + 1) - 1 {
                let mirror = f(r + 2) - 2 - v;
                assert_eq!(chi_u(v), sign * chi_u(mirror), "n = {v}");
                assert_eq!(count_f(&n(v)), count_f(&n(mirror)), "n = {v}");
            }
            for v in 2 * f(r) - 1..=f(r - 1) + f(r + 1) - 1 {
                assert_eq!(chi_u(v), 0, "n = {v}, r = {r}");
            }
        }
    }

    #[test]
    fn translation() {
        for r in 2..=15usize {
            for a in r..=r + 3 {
                let shift = f(a) + f(a + 2);
                for v in 0..f(r) {
                    assert_eq!(chi_u(v), chi_u(v + shift), "n = {v}, a = {a}");
                }
            }
        }
    }

    #[test]
    fn f_equals_two() {
        let limit = f(15);
        let mut expected: Vec<u64> = (2..=16)
            .flat_map(|r| [2 * f(r) - 1, f(r - 1) + f(r + 1) - 1])
            .filter(|&v| v <= limit)
            .collect();
        expected.sort();
        expected.dedup();
        let scanned: Vec<u64> = (0..=limit).filter(|&v| count_u(v) == 2).collect();
        assert_eq!(scanned, expected);
        for r in 4..12 {
            let c = (f(r)..f(r + 1)).filter(|&v| count_u(v) == 2).count();
            assert_eq!(c, 2, "r = {r}");
        }
    }

    #[test]
    fn square_root_bound() {
        let mut equal = Vec::new();
        for v in 0..=100_000u64 {
            let c = count_u(v);
            let root = (v + 1).isqrt();
            assert!(c <= root, "n = {v}");
            if c * c == v + 1 {
                equal.push(v);
            }
        }
        assert_eq!(
            equal,
            vec![0, 3, 8, 24, 63, 168, 440, 1155, 3024, 7920, 20735, 54288]
        );
        let squares: Vec<u64> = (1..=24)
            .map(|r| f(r) * f(r) - 1)
            .filter(|&v| v <= 100_000)
            .collect();
        assert_eq!(equal, squares);
    }

    #[test]
    fn zero_run_lengths() {
        let zr = zero_runs(0, f(18)).unwrap();
        let mut lengths: Vec<u64> = zr.iter().map(|r| r.length).collect();
        lengths.sort();
        lengths.dedup();
        assert_eq!(
            lengths,
            vec![1, 2, 3, 4, 6, 9, 14, 22, 35, 56, 90, 145, 234, 378]
        );
        assert!(lengths.iter().all(|&l| zero_run_length_allowed(l)));
        assert!(!zero_run_length_allowed(5));
        let r = 10;
        let plateau = zr.iter().find(|run| run.start == 2 * f(r) - 1).unwrap();
        assert_eq!(plateau.length, f(r - 3) + 1);
        assert_eq!(zr[0].start, 3);
        assert_eq!(zr[0].length, 1);
    }

    #[test]
    fn nonzero_run_patterns() {
        let runs = nonzero_runs(0, f(18)).unwrap();
        assert!(!runs.is_empty());
        for run in &runs {
            assert!(run.length <= 4);
            assert!(NONZERO_PATTERNS.contains(&run.values.as_slice()), "{run:?}");
            if run.length == 4 {
                assert!(run.values == [1, -1, -1, 1] || run.values == [-1, 1, 1, -1]);
            }
        }
        // The edge run (1, -1, -1) at 0 is excluded.
        assert_ne!(runs[0].start, 0);
    }

    #[test]
    fn runs_on_degenerate_ranges() {
        assert!(zero_runs(5, 5).is_err());
        // chi(11..=14) = 1, -1, -1, 1
        assert!(zero_runs(11, 14).unwrap().is_empty());
        // A plateau of zeros.
        let zeros_only = (f(9) * 2 - 1, f(8) + f(10) - 1);
        assert!(nonzero_runs(zeros_only.0, zeros_only.1).unwrap().is_empty());
    }

    #[test]
    fn hull_matches_prediction() {
        for r in 7..=14 {
            assert_eq!(
                hull_points(r).unwrap(),
                computed_hull(r).unwrap(),
                "r = {r}"
            );
        }
        assert_eq!(hull_points(6), Err(Error::HullIndex(6)));
    }
}
