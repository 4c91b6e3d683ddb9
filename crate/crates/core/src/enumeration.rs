//! Essential `k`-numbers: how many there are (`Psi`, `Psi_Sigma`), listing
//! them, the commutative product `circle`, and the search for the minimal
//! `n` with `F(n) = k`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;

use crate::contfrac::{cf_expand, word_of, Fraction};
use crate::counting::{count_f, AssocVector};
use crate::fibcore::{fib, fib_u64};
use crate::orbits::{is_essential, is_f_prime, theta};
use crate::{Error, Natural, Result, Word};

/// The essential numbers with `F = k`, increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EssentialClass {
    pub k: u64,
    pub members: Vec<Natural>,
}

/// How [`minimal_essential_with_word`] searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// One candidate per multiset of letters, sorted by the triangle order.
    #[default]
    Commutative,
    /// Every word with the right denominator product.
    Exhaustive,
}

pub fn totient(n: u64) -> u64 {
    let mut n = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

fn divisors(k: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= k {
        if k.is_multiple_of(d) {
            small.push(d);
            if d * d != k {
                large.push(k / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn check_k(k: u64) -> Result<()> {
    if k == 0 {
        Err(Error::ZeroK)
    } else {
        Ok(())
    }
}

/// `Psi(1) = 1`, `Psi(k) = sum over divisors r > 1 of k of Psi(k/r) phi(r)`.
pub fn psi(k: u64) -> Result<Natural> {
    check_k(k)?;
    let divs = divisors(k);
    let mut memo: BTreeMap<u64, Natural> = BTreeMap::new();
    // Divisors of a divisor are divisors, so increasing order suffices.
    for &d in &divs {
        let value = if d == 1 {
            Natural::one()
        } else {
            divisors(d)
                .into_iter()
                .filter(|&r| r > 1)
                .map(|r| &memo[&(d / r)] * totient(r))
                .sum()
        };
        memo.insert(d, value);
    }
    Ok(memo.remove(&k).expect("k divides itself"))
}

fn binomial_rows(m: usize) -> Vec<Vec<Natural>> {
    let mut rows: Vec<Vec<Natural>> = vec![vec![Natural::one()]];
    for i in 1..=m {
        let prev = &rows[i - 1];
        let mut row = vec![Natural::one(); i + 1];
        for j in 1..i {
            row[j] = &prev[j - 1] + &prev[j];
        }
        rows.push(row);
    }
    rows
}

/// Ordered Bell (Fubini) numbers: `B(m) = sum_{r<m} C(m,r) B(r)`.
pub fn ordered_bell(m: usize) -> Natural {
    let c = binomial_rows(m);
    let mut b: Vec<Natural> = vec![Natural::one()];
    for row in c.iter().skip(1) {
        let v = row.iter().zip(&b).map(|(x, y)| x * y).sum();
        b.push(v);
    }
    b.swap_remove(m)
}

/// Bell numbers: `b(m) = sum_{r<m} C(m-1,r) b(r)`.
pub fn bell(m: usize) -> Natural {
    let c = binomial_rows(m.max(1));
    let mut b: Vec<Natural> = vec![Natural::one()];
    for i in 1..=m {
        let v = (0..i).map(|r| &c[i - 1][r] * &b[r]).sum();
        b.push(v);
    }
    b.swap_remove(m)
}

fn units(b: u64) -> Vec<u64> {
    (1..b).filter(|a| a.gcd(&b) == 1).collect()
}

fn letter(a: u64, b: u64) -> Fraction {
    Fraction::from_u64s(a, b).expect("coprime pair")
}

/// Every word `w` with `delta(w) = k`.
pub fn words_with_delta(k: u64) -> Result<Vec<Word>> {
    check_k(k)?;
    fn rec(rest: u64, prefix: &mut Vec<Fraction>, out: &mut Vec<Word>) {
        if rest == 1 {
            out.push(Word::new(prefix.clone()).expect("letters in (0,1)"));
            return;
        }
        for b in divisors(rest).into_iter().filter(|&b| b > 1) {
            for a in units(b) {
                prefix.push(letter(a, b));
                rec(rest / b, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::new(), &mut out);
    Ok(out)
}

/// One word per multiset of letters with `delta = k`, letters in triangle
/// order.
pub fn commutative_words(k: u64) -> Result<Vec<Word>> {
    check_k(k)?;
    // Multiplicative partitions of k as (factor, multiplicity), factors decreasing.
    fn factorizations(
        rest: u64,
        max: u64,
        prefix: &mut Vec<(u64, usize)>,
        out: &mut Vec<Vec<(u64, usize)>>,
    ) {
        if rest == 1 {
            out.push(prefix.clone());
            return;
        }
        for b in divisors(rest)
            .into_iter()
            .rev()
            .filter(|&b| b > 1 && b <= max)
        {
            match prefix.last_mut() {
                Some((last, c)) if *last == b => *c += 1,
                _ => prefix.push((b, 1)),
            }
            factorizations(rest / b, b, prefix, out);
            match prefix.last_mut() {
                Some((_, c)) if *c > 1 => *c -= 1,
                _ => {
                    prefix.pop();
                }
            }
        }
    }
    // Nondecreasing c-element selections from `pool`.
    fn multichoose(
        pool: &[u64],
        c: usize,
        start: usize,
        prefix: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if prefix.len() == c {
            out.push(prefix.clone());
            return;
        }
        for i in start..pool.len() {
            prefix.push(pool[i]);
            multichoose(pool, c, i, prefix, out);
            prefix.pop();
        }
    }

    let mut shapes = Vec::new();
    factorizations(k, k, &mut Vec::new(), &mut shapes);
    let mut words = Vec::new();
    for shape in shapes {
        let mut partial: Vec<Vec<Fraction>> = vec![Vec::new()];
        for &(b, c) in &shape {
            let mut picks = Vec::new();
            multichoose(&units(b), c, 0, &mut Vec::new(), &mut picks);
            partial = partial
                .iter()
                .flat_map(|head| {
                    picks.iter().map(move |pick| {
                        let mut w = head.clone();
                        w.extend(pick.iter().map(|&a| letter(a, b)));
                        w
                    })
                })
                .collect();
        }
        for letters in partial {
            let w = Word::new(letters).expect("letters in (0,1)");
            words.push(commutative_normal_form(&w)?);
        }
    }
    Ok(words)
}

/// All essential `k`-numbers: `theta` of every word with `delta = k`.
pub fn list_essential(k: u64) -> Result<EssentialClass> {
    let mut members = words_with_delta(k)?
        .par_iter()
        .map(theta)
        .collect::<Result<Vec<_>>>()?;
    members.sort();
    Ok(EssentialClass { k, members })
}

/// `f_{2k} - 2 = theta((k-1)/k)`.
pub fn max_essential(k: u64) -> Result<Natural> {
    check_k(k)?;
    let i = usize::try_from(2 * k).expect("index fits in usize");
    Ok(fib(i) - 2u32)
}

/// `x` before `y` in the triangle order: right-align, pad the shorter
/// vector with `+inf` on the left, compare at the rightmost difference.
pub fn cmp_triangle(x: &AssocVector, y: &AssocVector) -> Ordering {
    let (xe, ye) = (x.entries(), y.entries());
    let len = xe.len().max(ye.len());
    for m in 0..len {
        let a = xe.len().checked_sub(m + 1).map(|i| xe[i]);
        let b = ye.len().checked_sub(m + 1).map(|i| ye[i]);
        let ord = match (a, b) {
            (Some(a), Some(b)) => a.cmp(&b),
            (None, Some(_)) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (None, None) => unreachable!(),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    Ordering::Equal
}

/// Letters stably sorted by the triangle order on their vectors.
pub fn commutative_normal_form(w: &Word) -> Result<Word> {
    let mut keyed = w
        .letters()
        .iter()
        .map(|l| Ok((cf_expand(l)?, l.clone())))
        .collect::<Result<Vec<_>>>()?;
    keyed.sort_by(|a, b| cmp_triangle(&a.0, &b.0));
    Word::new(keyed.into_iter().map(|(_, l)| l).collect())
}

/// The commutative product: `theta` of the normal form of the joined words.
pub fn circle(n1: &Natural, n2: &Natural) -> Result<Natural> {
    for n in [n1, n2] {
        if !is_essential(n) {
            return Err(Error::NotEssential(n.clone()));
        }
    }
    let joined = word_of(n1).concat(&word_of(n2));
    theta(&commutative_normal_form(&joined)?)
}

/// `M(k)`, the least `n` with `F(n) = k`.
pub fn minimal_essential(k: u64) -> Result<Natural> {
    Ok(minimal_essential_with_word(k, Strategy::Commutative)?.0)
}

/// `M(k)` together with its word.
pub fn minimal_essential_with_word(k: u64, strategy: Strategy) -> Result<(Natural, Word)> {
    let candidates = match strategy {
        Strategy::Commutative => commutative_words(k)?,
        Strategy::Exhaustive => words_with_delta(k)?,
    };
    let scored = candidates
        .into_par_iter()
        .map(|w| theta(&w).map(|t| (t, w)))
        .collect::<Result<Vec<_>>>()?;
    Ok(scored
        .into_iter()
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("every k >= 1 has a word"))
}

/// Number of commutative essential `k`-numbers, by enumeration.
pub fn psi_sigma(k: u64) -> Result<Natural> {
    Ok(Natural::from(commutative_words(k)?.len()))
}

/// `M(k)` is an F-prime; `k = 1` counts as primitive.
pub fn is_primitive(k: u64) -> Result<bool> {
    if k == 1 {
        return Ok(true);
    }
    Ok(is_f_prime(&minimal_essential(k)?))
}

/// `#{n : f_r <= n < f_{r+1}, F(n) = k}`, by scanning.
pub fn stability_count(r: usize, k: u64) -> Natural {
    let target = Natural::from(k);
    let count = match (fib_u64(r), fib_u64(r + 1)) {
        (Some(lo), Some(hi)) => (lo..hi)
            .into_par_iter()
            .filter(|&v| count_f(&Natural::from(v)) == target)
            .count() as u64,
        _ => {
            let (mut v, hi) = (fib(r), fib(r + 1));
            let mut c = 0u64;
            while v < hi {
                if count_f(&v) == target {
                    c += 1;
                }
                v += 1u32;
            }
            c
        }
    };
    Natural::from(count)
}

/// Stable count predicted for `r >= 2k`: 1 for `k = 1`, else `2 Psi(k)`.
pub fn stable_value(k: u64) -> Result<Natural> {
    if k == 1 {
        return Ok(Natural::one());
    }
    Ok(psi(k)? * 2u32)
}
