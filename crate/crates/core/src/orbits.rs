//! The free action of `T = Z_2 x Z_2 x N` on the naturals, generated by
//! `omega`, `tau` and `S`, together with essential numbers (the least
//! element of each orbit), the map `epsilon` and the `*` product.
//!
//! All three generators preserve `F`. `omega` preserves `chi` while `S` and
//! `tau` flip its sign.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::contfrac::{cf_multivector, word_of};
use crate::counting::Multivector;
use crate::fibcore::{content, is_odd, zeckendorf, TwoPartition};
use crate::{Error, Natural, Result, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    Omega,
    Tau,
    S,
}

impl Generator {
    pub fn apply(self, n: &Natural) -> Result<Natural> {
        match self {
            Generator::Omega => act_omega(n),
            Generator::Tau => act_tau(n),
            Generator::S => Ok(act_s(n)),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::Omega => "omega",
            Generator::Tau => "tau",
            Generator::S => "S",
        })
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "omega" | "w" | "ω" => Ok(Generator::Omega),
            "tau" | "t" | "τ" => Ok(Generator::Tau),
            "S" | "s" => Ok(Generator::S),
            other => Err(Error::Parse {
                text: other.to_string(),
                reason: "expected one of omega, tau, S".to_string(),
            }),
        }
    }
}

fn omega_part(p: &[usize]) -> Vec<usize> {
    if is_odd(p[0]) {
        p.iter().map(|&i| i + 1).collect()
    } else {
        p.iter().map(|&i| i - 1).collect()
    }
}

fn s_part(p: &[usize]) -> Vec<usize> {
    match p.first() {
        None => vec![1],
        Some(&i1) => {
            let mut out = Vec::with_capacity(p.len() + 1);
            out.push(if is_odd(i1) { 1 } else { 2 });
            out.extend(p.iter().map(|&i| i + 2));
            out
        }
    }
}

/// `J` with `S(J) = I`, if there is one.
fn s_preimage(p: &[usize]) -> Option<Vec<usize>> {
    let (&i1, tail) = p.split_first()?;
    if i1 > 2 {
        return None;
    }
    let j: Vec<usize> = tail.iter().map(|&i| i - 2).collect();
    let lead = match j.first() {
        None => 1,
        Some(&j1) if is_odd(j1) => 1,
        Some(_) => 2,
    };
    (lead == i1).then_some(j)
}

/// Shift every Zeckendorf index by `+1` when the least one is odd, `-1`
/// otherwise.
pub fn act_omega(n: &Natural) -> Result<Natural> {
    let z = zeckendorf(n);
    if z.is_empty() {
        return Err(Error::OmegaUndefined);
    }
    Ok(content(&omega_part(z.indices())))
}

/// `S{i_1,...,i_q} = {2 - [i_1 odd], i_1 + 2, ..., i_q + 2}` and `S(0) = 1`.
pub fn act_s(n: &Natural) -> Natural {
    content(&s_part(zeckendorf(n).indices()))
}

/// The involution `tau`. Undefined on `n = f_r - 1` (where `F(n) = 1`):
/// stripping `S` there bottoms out at `{}` or `{2}`, which have no base form.
pub fn act_tau(n: &Natural) -> Result<Natural> {
    let mut p = zeckendorf(n).into_indices();
    let mut layers = 0usize;
    while let Some(j) = s_preimage(&p) {
        p = j;
        layers += 1;
    }
    let mut out = match p.as_slice() {
        [] | [2] => return Err(Error::TauUndefined(n.clone())),
        [i1, ..] if *i1 >= 3 => {
            let mut v = Vec::with_capacity(p.len() + 1);
            v.push(if is_odd(*i1) { 1 } else { 2 });
            v.extend(p.iter().map(|&i| i + 1));
            v
        }
        [_, rest @ ..] => rest.iter().map(|&i| i - 1).collect(),
    };
    for _ in 0..layers {
        out = s_part(&out);
    }
    Ok(content(&out))
}

/// `epsilon(A_1 x ... x A_s)`. Component `A_m` contributes the odd
/// numbers `2d(a_1..a_r) + 1`, shifted up by `2d(A_1) + ... + 2d(A_{m-1}) + m - 1`.
pub fn epsilon(mv: &Multivector) -> Result<TwoPartition> {
    let mut out = Vec::new();
    let mut shift = 0u64;
    for (m, comp) in mv.components().iter().enumerate() {
        if !comp.in_a2() {
            return Err(Error::NotInA2(comp.entries().to_vec()));
        }
        if m > 0 {
            shift += 1;
        }
        let mut d = 0u64;
        for &a in comp.entries() {
            d += a - 1;
            out.push(usize::try_from(2 * d + 1 + shift).expect("index fits in usize"));
        }
        shift += 2 * d;
    }
    TwoPartition::new(out)
}

/// `theta(w)`: the least `n` with `word_of(n) = w`.
pub fn theta(w: &Word) -> Result<Natural> {
    if w.is_empty() {
        return Ok(Natural::zero());
    }
    Ok(epsilon(&cf_multivector(w)?)?.content())
}

/// Least element of its orbit: `n = 0`, or the least Zeckendorf index is
/// odd and at least 3.
pub fn is_essential(n: &Natural) -> bool {
    match zeckendorf(n).indices().first() {
        None => true,
        Some(&i1) => is_odd(i1) && i1 >= 3,
    }
}

/// `2 floor(m phi) + m`, the `m`-th essential number, in exact arithmetic.
pub fn essential_from_m(m: &Natural) -> Natural {
    let z = zeckendorf(m);
    let Some((&mu1, rest)) = z.indices().split_first() else {
        return Natural::zero();
    };
    let mut out: Vec<usize> = if is_odd(mu1) {
        (3..=mu1 + 2).step_by(2).collect()
    } else {
        vec![mu1 + 3]
    };
    out.extend(rest.iter().map(|&i| i + 3));
    content(&out)
}

/// Inverse of [`essential_from_m`].
pub fn m_from_essential(n: &Natural) -> Result<Natural> {
    if !is_essential(n) {
        return Err(Error::NotEssential(n.clone()));
    }
    let z = zeckendorf(n);
    let mu = z.indices();
    if mu.is_empty() {
        return Ok(Natural::zero());
    }
    let l: Vec<usize> = if mu[0] == 3 {
        // Length of the leading run 3, 5, 7, ...
        let a = 1 + mu.windows(2).take_while(|w| w[1] - w[0] == 2).count();
        std::iter::once(mu[a - 1] - 2)
            .chain(mu[a..].iter().map(|&i| i - 3))
            .collect()
    } else {
        mu.iter().map(|&i| i - 3).collect()
    };
    Ok(content(&l))
}

fn require_essential(n: &Natural) -> Result<()> {
    if is_essential(n) {
        Ok(())
    } else {
        Err(Error::NotEssential(n.clone()))
    }
}

/// `n1 * n2 = n1 + sigma^{mu_last(n1)}(n2)`: the free product on essential
/// numbers, matching concatenation of words.
pub fn star(n1: &Natural, n2: &Natural) -> Result<Natural> {
    require_essential(n1)?;
    require_essential(n2)?;
    let k = zeckendorf(n1).mu_last();
    Ok(n1 + zeckendorf(n2).shift(k).content())
}

/// Essential, nonzero, and its word is a single letter.
pub fn is_f_prime(n: &Natural) -> bool {
    !n.is_zero() && is_essential(n) && word_of(n).len() == 1
}
