use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::Int;

/// Prime factorization by trial division, primes ascending.
pub fn factorize(n: &Int) -> Result<Vec<(Int, u32)>> {
    if !n.is_positive() {
        return Err(Error::Factorization(n.clone()));
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut p = Int::from(2);
    while &p * &p <= rest {
        let mut m = 0;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            m += 1;
        }
        if m > 0 {
            out.push((p.clone(), m));
        }
        p += if p == Int::from(2) { 1 } else { 2 };
    }
    if !rest.is_one() {
        out.push((rest, 1));
    }
    Ok(out)
}

/// A prime power `p^e` with `1 <= e <= (m + 1) / 2` for a prime of multiplicity
/// `m` in the determinant, or the trivial case `p = 1, e = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimePowerSpec {
    p: Int,
    e: u32,
    m: u32,
}

impl PrimePowerSpec {
    pub fn trivial() -> Self {
        Self { p: Int::one(), e: 0, m: 0 }
    }

    pub fn new(p: Int, e: u32, m: u32) -> Result<Self> {
        if p.is_one() {
            return if e == 0 { Ok(Self::trivial()) } else { Err(Error::PrimePower("p = 1 requires e = 0".into())) };
        }
        if !is_prime(&p) {
            return Err(Error::PrimePower(format!("{p} is not prime")));
        }
        if e > max_exponent(m) {
            return Err(Error::PrimePower(format!("exponent {e} exceeds ⌊({m}+1)/2⌋")));
        }
        Ok(Self { p, e, m })
    }

    pub fn p(&self) -> &Int {
        &self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `p^e`.
    pub fn q(&self) -> Int {
        Pow::pow(&self.p, self.e)
    }
}

/// Largest exponent the obstruction tests for multiplicity `m`.
pub fn max_exponent(m: u32) -> u32 {
    (m + 1) / 2
}

fn is_prime(n: &Int) -> bool {
    if *n < Int::from(2) {
        return false;
    }
    factorize(n).map(|f| f.len() == 1 && f[0].1 == 1).unwrap_or(false)
}

/// The exponent of `p` in `n`.
pub fn multiplicity(n: &Int, p: &Int) -> u32 {
    if n.is_zero() || p.abs() <= Int::one() {
        return 0;
    }
    let mut rest = n.clone();
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    m
}
