//! Continued fractions `<a_1, ..., a_q> = 1/(a_1 - 1/(a_2 - ... - 1/a_q))`
//! and words over reduced fractions in `(0, 1)`.
//!
//! Every positive rational has exactly one such expansion with `a_1 >= 1`
//! and later entries `>= 2`; it lies below 1 iff `a_1 >= 2` too. The
//! denominator of `<A>` is `D(A;1)`, so mapping each simple component of
//! `Z(n)` to its fraction yields a word whose denominators multiply to `F(n)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::counting::{assoc_multivector, big_is_odd, d_value, AssocVector, Multivector};
use crate::fibcore::zeckendorf;
use crate::{Error, Natural, Result};

/// A nonnegative rational in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: BigUint,
    den: BigUint,
}

impl Fraction {
    /// Fails unless `den > 0` and `gcd(num, den) = 1`.
    pub fn new(num: BigUint, den: BigUint) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::BadLetter {
                letter: format!("{num}/{den}"),
                reason: "zero denominator",
            });
        }
        if !num.gcd(&den).is_one() {
            return Err(Error::BadLetter {
                letter: format!("{num}/{den}"),
                reason: "not in lowest terms",
            });
        }
        Ok(Fraction { num, den })
    }

    /// A word letter: reduced and strictly between 0 and 1.
    pub fn letter(num: BigUint, den: BigUint) -> Result<Self> {
        let f = Fraction::new(num, den)?;
        if f.is_letter() {
            Ok(f)
        } else {
            Err(Error::BadLetter {
                letter: f.to_string(),
                reason: "not in (0,1)",
            })
        }
    }

    pub fn from_u64s(num: u64, den: u64) -> Result<Self> {
        Fraction::new(num.into(), den.into())
    }

    pub fn num(&self) -> &BigUint {
        &self.num
    }

    pub fn den(&self) -> &BigUint {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_letter(&self) -> bool {
        !self.num.is_zero() && self.num < self.den
    }

    /// Fractional part, still in lowest terms.
    pub fn fract(&self) -> Fraction {
        Fraction {
            num: &self.num % &self.den,
            den: self.den.clone(),
        }
    }

    /// `[b odd] * (1 - 2[a odd])` for `a/b`.
    pub fn chi_tilde(&self) -> i8 {
        match (big_is_odd(&self.den), big_is_odd(&self.num)) {
            (false, _) => 0,
            (true, false) => 1,
            (true, true) => -1,
        }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Element of the free monoid on reduced fractions in `(0,1)`. The empty
/// word is the unit and is written `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Fraction>);

impl Word {
    pub fn new(letters: Vec<Fraction>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| !l.is_letter()) {
            return Err(Error::BadLetter {
                letter: bad.to_string(),
                reason: "not in (0,1)",
            });
        }
        Ok(Word(letters))
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<Fraction>) -> Self {
        debug_assert!(letters.iter().all(Fraction::is_letter));
        Word(letters)
    }

    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Fraction] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Fraction> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Monoid product: concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).cloned().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, letter) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// Parses `a/b*c/d*...` (or `1` for the unit). Every letter must be reduced
/// and lie in `(0,1)`.
pub fn parse_word(text: &str) -> Result<Word> {
    let trimmed = text.trim();
    if trimmed == "1" {
        return Ok(Word::unit());
    }
    let malformed = |reason: &str| Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    if trimmed.is_empty() {
        return Err(malformed("empty input"));
    }
    let mut letters = Vec::new();
    for piece in trimmed.split('*') {
        let piece = piece.trim();
        let (a, b) = piece
            .split_once('/')
            .ok_or_else(|| malformed(&format!("letter {piece:?} is not of the form a/b")))?;
        let digits = |s: &str| !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit());
        if !digits(a) || !digits(b) {
            return Err(malformed(&format!(
                "letter {piece:?} is not of the form a/b"
            )));
        }
        let num: BigUint = a.parse().expect("digits");
        let den: BigUint = b.parse().expect("digits");
        letters.push(Fraction::letter(num, den)?);
    }
    Ok(Word(letters))
}

pub fn format_word(w: &Word) -> String {
    w.to_string()
}

/// `<A> = D(a_2..a_q;1) / D(A;1)` for `A` in `A_1`. The quotient is already
/// in lowest terms.
pub fn eval_cf(a: &AssocVector) -> Result<Fraction> {
    if !a.in_a1() {
        return Err(Error::NotInA1(a.0.clone()));
    }
    let num = d_value(&a.0[1..])
        .to_biguint()
        .expect("positive continuant");
    let den = d_value(&a.0).to_biguint().expect("positive continuant");
    debug_assert!(num.gcd(&den).is_one());
    Ok(Fraction { num, den })
}

/// The unique `c(g)` in `A_1` with `<c(g)> = g`, by
/// `a_i = ceil(b_i / a_i)`, `(a_{i+1}, b_{i+1}) = (a_i a_i' - b_i, a_i)`.
pub fn cf_expand(g: &Fraction) -> Result<AssocVector> {
    if g.is_zero() {
        return Err(Error::ZeroFraction);
    }
    let mut a = g.num.clone();
    let mut b = g.den.clone();
    let mut out = Vec::new();
    while !a.is_zero() {
        let q = b.div_ceil(&a);
        let next_a = &a * &q - &b;
        out.push(
            q.to_u64()
                .ok_or_else(|| Error::QuotientOverflow(g.to_string()))?,
        );
        b = std::mem::replace(&mut a, next_a);
    }
    Ok(AssocVector(out))
}

/// `c(g_1) x ... x c(g_s)`.
pub fn cf_multivector(w: &Word) -> Result<Multivector> {
    w.0.iter()
        .map(cf_expand)
        .collect::<Result<Vec<_>>>()
        .map(Multivector)
}

/// The word `pi(n)`: fractional part of `<A_1>` (dropped when zero), then
/// `<A_2>, ..., <A_s>`.
pub fn word_of(n: &Natural) -> Word {
    let mv = assoc_multivector(&zeckendorf(n));
    let mut letters = Vec::with_capacity(mv.0.len());
    for (m, comp) in mv.0.iter().enumerate() {
        let value = eval_cf(comp).expect("multivector components are valid");
        let letter = if m == 0 { value.fract() } else { value };
        if !letter.is_zero() {
            letters.push(letter);
        }
    }
    Word::from_letters_unchecked(letters)
}

/// Product of the denominators.
pub fn delta(w: &Word) -> Natural {
    w.0.iter().fold(Natural::one(), |acc, l| acc * &l.den)
}
