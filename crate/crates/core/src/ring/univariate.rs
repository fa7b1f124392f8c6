//! Univariate rational functions in `T` over the rationals, obtained by
//! fixing a prime and substituting `P = 1/p`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_with::{serde_as, DisplayFromStr};

use super::poly::BiPoly;
use super::rational::BiRationalFunction;
use crate::error::{Error, Result};

/// Dense polynomial in `T`; `coeffs[k]` is the coefficient of `T^k`.
/// Serializes as the list of coefficients as exact strings.
#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct UniPoly {
    #[serde_as(as = "Vec<DisplayFromStr>")]
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead = &divisor.coeffs[d];
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::new(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + d] / lead;
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &q * c;
                }
            }
            quot[k] = q;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.coeffs.last() {
            Some(lead) => a.scale(&lead.recip()),
            None => a,
        }
    }

    /// Power series `self / den` up to `T^max_degree`; `den(0)` must be nonzero.
    pub fn series_div(&self, den: &Self, max_degree: usize) -> Vec<BigRational> {
        let c0 = den.coeff(0);
        assert!(!c0.is_zero(), "series division needs a nonzero constant term");
        let mut out: Vec<BigRational> = Vec::with_capacity(max_degree + 1);
        for k in 0..=max_degree {
            let mut acc = self.coeff(k);
            for j in 1..=k.min(den.coeffs.len().saturating_sub(1)) {
                acc -= den.coeff(j) * &out[k - j];
            }
            out.push(acc / &c0);
        }
        out
    }
}

fn write_rational_term(f: &mut fmt::Formatter<'_>, first: bool, c: &BigRational, k: usize) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if k == 0 {
        return write!(f, "{abs}");
    }
    let var = if k == 1 { "T".to_string() } else { format!("T^{k}") };
    if abs.is_one() {
        write!(f, "{var}")
    } else if abs.numer().is_one() {
        write!(f, "{var}/{}", abs.denom())
    } else {
        write!(f, "{abs}*{var}")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_rational_term(f, first, c, k)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A reduced univariate rational function with denominator constant term 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniRational {
    pub numerator: UniPoly,
    pub denominator: UniPoly,
}

impl UniRational {
    fn reduced(numerator: UniPoly, denominator: UniPoly) -> Self {
        let g = numerator.gcd(&denominator);
        let (mut num, _) = numerator.div_rem(&g);
        let (mut den, _) = denominator.div_rem(&g);
        if num.is_zero() {
            den = UniPoly::one();
        }
        let c0 = den.coeff(0);
        if !c0.is_zero() && !c0.is_one() {
            let inv = c0.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self {
            numerator: num,
            denominator: den,
        }
    }

    pub fn series(&self, max_degree: usize) -> Vec<BigRational> {
        self.numerator.series_div(&self.denominator, max_degree)
    }
}

impl fmt::Display for UniRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.numerator)?;
        if self.denominator.degree() == Some(0) {
            return Ok(());
        }
        write!(f, "/({})", self.denominator)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Substitute `P = 1/p` into a bivariate polynomial.
pub fn specialize_poly(poly: &BiPoly, p: u64) -> UniPoly {
    let p = BigInt::from(p);
    let mut coeffs: Vec<BigRational> = Vec::new();
    for (&(t, pd), c) in poly.terms() {
        let t = t as usize;
        if coeffs.len() <= t {
            coeffs.resize(t + 1, BigRational::zero());
        }
        coeffs[t] += BigRational::new(c.clone(), num_traits::pow(p.clone(), pd as usize));
    }
    UniPoly::new(coeffs)
}

impl BiRationalFunction {
    /// Fix the prime `p`: substitute `P = 1/p` and cancel the univariate gcd.
    pub fn specialize_prime(&self, p: u64) -> Result<UniRational> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let numerator = specialize_poly(self.numerator(), p);
        let denominator = self
            .denominator()
            .iter()
            .fold(UniPoly::one(), |acc, f| acc.mul(&specialize_poly(&f.as_poly(), p)));
        Ok(UniRational::reduced(numerator, denominator))
    }
}
