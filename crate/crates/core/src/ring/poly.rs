//! Sparse polynomials in the two formal variables `T` (standing for `p^-s`)
//! and `P` (standing for `p^-1`) with arbitrary-precision integer
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(t, p)` of the monomial `T^t P^p`.
pub type Exponent = (u32, u32);

/// A polynomial in `T` and `P`.
///
/// Terms are kept in a `BTreeMap` keyed by `(t, p)`, so iteration order and
/// equality are canonical. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, t: u32, p: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((t, p), c);
        }
        Self { terms }
    }

    /// `1 - T^a P^b`.
    pub fn binomial(a: u32, b: u32) -> Self {
        Self::one() - Self::monomial(1, a, b)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: u32, p: u32) -> BigInt {
        self.terms.get(&(t, p)).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0, 0)
    }

    pub fn max_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(t, p)| t + p).max()
    }

    pub fn max_p_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, p)| p).max()
    }

    pub fn max_t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(t, _)| t).max()
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiply by the monomial `c T^t P^p`.
    pub fn shift(&self, c: &BigInt, t: u32, p: u32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((a + t, b + p), v * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.shift(c, 0, 0)
    }

    /// Multiply by `1 - T^a P^b`.
    pub fn mul_binomial(&self, a: u32, b: u32) -> Self {
        let mut out = self.clone();
        for (&(t, p), c) in &self.terms {
            out.add_term((t + a, p + b), -c.clone());
        }
        out
    }

    /// Drop every term whose `P`-degree exceeds `bound`.
    pub fn truncate_p(&self, bound: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((_, p), _)| *p <= bound)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Product truncated to `P`-degree `bound`.
    pub fn mul_truncated(&self, rhs: &Self, bound: u32) -> Self {
        let mut out = Self::zero();
        for (&(t1, p1), c1) in &self.terms {
            if p1 > bound {
                continue;
            }
            for (&(t2, p2), c2) in &rhs.terms {
                if p1 + p2 <= bound {
                    out.add_term((t1 + t2, p1 + p2), c1 * c2);
                }
            }
        }
        out
    }

    /// Substitute `T = 1`, leaving a polynomial in `P` alone.
    pub fn at_t_one(&self) -> Self {
        let mut out = Self::zero();
        for (&(_, p), c) in &self.terms {
            out.add_term((0, p), c.clone());
        }
        out
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    ///
    /// The divisor must have constant term `±1` (binomials `1 - T^a P^b` and
    /// cyclotomic pieces of them qualify). Terms are eliminated from the
    /// lowest total degree upward; every quotient term has total degree at
    /// most `deg(self) - deg(divisor)`, which bounds the loop.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let lead = divisor.terms.get(&(0, 0))?;
        let negate = if lead.is_one() {
            false
        } else if (-lead).is_one() {
            true
        } else {
            return None;
        };
        if self.is_zero() {
            return Some(Self::zero());
        }
        let max_self = self.max_total_degree().unwrap_or(0);
        let max_div = divisor.max_total_degree().unwrap_or(0);
        if max_div > max_self {
            return None;
        }
        let limit = max_self - max_div;
        // Remainder keyed by (total degree, t) so the first entry is lowest.
        let mut rem: BTreeMap<(u32, u32), BigInt> = self
            .terms
            .iter()
            .map(|(&(t, p), c)| ((t + p, t), c.clone()))
            .collect();
        let div_terms: Vec<((u32, u32), BigInt)> = divisor
            .terms
            .iter()
            .map(|(&(t, p), c)| ((t, p), c.clone()))
            .collect();
        let mut quotient = Self::zero();
        while let Some((&(deg, t), _)) = rem.iter().next() {
            if deg > limit {
                return None;
            }
            let c = rem.remove(&(deg, t)).expect("present");
            let q = if negate { -c } else { c };
            let p = deg - t;
            for ((dt, dp), dc) in &div_terms {
                if *dt == 0 && *dp == 0 {
                    continue;
                }
                let key = (deg + dt + dp, t + dt);
                let entry = rem.entry(key).or_default();
                *entry -= &q * dc;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quotient.add_term((t, p), q);
        }
        Some(quotient)
    }

    /// Largest `k` with `divisor^k | self`, capped at `cap`.
    pub fn divisibility_order(&self, divisor: &Self, cap: u32) -> (u32, Self) {
        let mut current = self.clone();
        let mut k = 0;
        while k < cap && !current.is_zero() {
            match current.div_exact(divisor) {
                Some(q) => {
                    current = q;
                    k += 1;
                }
                None => break,
            }
        }
        (k, current)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(t1, p1), c1) in &self.terms {
            for (&(t2, p2), c2) in &rhs.terms {
                out.add_term((t1 + t2, p1 + p2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, t: u32, p: u32, var_t: &str, var_p: &str) -> fmt::Result {
    let mut first = true;
    for (var, e) in [(var_t, t), (var_p, p)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(var)?;
        } else {
            write!(f, "{var}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for BiPoly {
    /// Renders e.g. `1 - P^2 + T*P^2`, terms in ascending `(t, p)` order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(t, p), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if t == 0 && p == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, t, p, "T", "P")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(e, c)| (e, c)))
    }

    #[test]
    fn identity_product() {
        assert_eq!(&BiPoly::one() * &BiPoly::one(), BiPoly::one());
    }

    #[test]
    fn difference_of_squares() {
        let a = BiPoly::binomial(0, 1);
        let b = poly(&[((0, 0), 1), ((0, 1), 1)]);
        assert_eq!(&a * &b, BiPoly::binomial(0, 2));
    }

    #[test]
    fn cancellation_to_one() {
        let a = BiPoly::binomial(1, 1);
        let b = BiPoly::monomial(1, 1, 1);
        assert_eq!(&a + &b, BiPoly::one());
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division() {
        let n = BiPoly::binomial(2, 2);
        let q = n.div_exact(&BiPoly::binomial(1, 1)).unwrap();
        assert_eq!(q, poly(&[((0, 0), 1), ((1, 1), 1)]));
        assert!(BiPoly::binomial(0, 2).div_exact(&BiPoly::binomial(1, 2)).is_none());
        assert!(BiPoly::binomial(1, 1).div_exact(&BiPoly::binomial(2, 2)).is_none());
    }

    #[test]
    fn divisibility_order_counts_repeats() {
        let f = BiPoly::binomial(1, 1);
        let n = &f.pow(3) * &BiPoly::monomial(5, 0, 2);
        let (k, rest) = n.divisibility_order(&f, 10);
        assert_eq!(k, 3);
        assert_eq!(rest, BiPoly::monomial(5, 0, 2));
    }

    #[test]
    fn display_is_readable() {
        let p = poly(&[((0, 0), 1), ((0, 2), -1), ((1, 2), 1)]);
        assert_eq!(p.to_string(), "1 - P^2 + T*P^2");
        assert_eq!(BiPoly::zero().to_string(), "0");
        assert_eq!(poly(&[((2, 1), -3)]).to_string(), "-3*T^2*P");
    }
}
