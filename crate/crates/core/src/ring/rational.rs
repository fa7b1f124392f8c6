use std::collections::BTreeMap;
use std::fmt;
use std::ops::Bound::{Excluded, Unbounded};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::BiPoly;
use crate::error::{Error, Result};

/// The binomial `1 - T^a P^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinomialFactor {
    /// Exponent of `T`, the coefficient of `s`.
    pub a: u32,
    /// Exponent of `P`, the constant part.
    pub b: u32,
}

impl BinomialFactor {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 && b == 0 {
            return Err(Error::ZeroFactor);
        }
        Ok(Self { a, b })
    }

    pub fn as_poly(&self) -> BiPoly {
        BiPoly::binomial(self.a, self.b)
    }
}

impl fmt::Display for BinomialFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1 - {})", BiPoly::monomial(1, self.a, self.b))
    }
}

/// `numerator / prod(1 - T^a P^b)` with the denominator kept factored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiRationalFunction {
    numerator: BiPoly,
    /// Sorted, repeats allowed.
    denominator: Vec<BinomialFactor>,
}

impl BiRationalFunction {
    pub fn new(numerator: BiPoly, mut denominator: Vec<BinomialFactor>) -> Self {
        denominator.sort_unstable();
        if numerator.is_zero() {
            denominator.clear();
        }
        Self {
            numerator,
            denominator,
        }
    }

    pub fn zero() -> Self {
        Self::new(BiPoly::zero(), Vec::new())
    }

    pub fn one() -> Self {
        Self::new(BiPoly::one(), Vec::new())
    }

    pub fn from_poly(p: BiPoly) -> Self {
        Self::new(p, Vec::new())
    }

    pub fn numerator(&self) -> &BiPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &[BinomialFactor] {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// The expanded denominator polynomial.
    pub fn denominator_poly(&self) -> BiPoly {
        self.denominator
            .iter()
            .fold(BiPoly::one(), |acc, f| acc.mul_binomial(f.a, f.b))
    }

    fn multiplicities(factors: &[BinomialFactor]) -> BTreeMap<BinomialFactor, usize> {
        let mut m = BTreeMap::new();
        for f in factors {
            *m.entry(*f).or_insert(0) += 1;
        }
        m
    }

    /// Sum over the least common multiset of the two denominators.
    pub fn add(&self, rhs: &Self) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let lhs_m = Self::multiplicities(&self.denominator);
        let rhs_m = Self::multiplicities(&rhs.denominator);
        let mut lcm = lhs_m.clone();
        for (f, k) in &rhs_m {
            let e = lcm.entry(*f).or_insert(0);
            *e = (*e).max(*k);
        }
        let lift = |num: &BiPoly, own: &BTreeMap<BinomialFactor, usize>| {
            let mut out = num.clone();
            for (f, k) in &lcm {
                let have = own.get(f).copied().unwrap_or(0);
                for _ in have..*k {
                    out = out.mul_binomial(f.a, f.b);
                }
            }
            out
        };
        let numerator = &lift(&self.numerator, &lhs_m) + &lift(&rhs.numerator, &rhs_m);
        let denominator = lcm
            .into_iter()
            .flat_map(|(f, k)| std::iter::repeat_n(f, k))
            .collect();
        Self::new(numerator, denominator)
    }

    /// Sum of many terms over a single least common multiset; equal to
    /// folding [`add`](Self::add) but lifts each numerator only once.
    pub fn sum<'a>(terms: impl IntoIterator<Item = &'a Self>) -> Self {
        let terms: Vec<&Self> = terms.into_iter().filter(|t| !t.is_zero()).collect();
        let own: Vec<BTreeMap<BinomialFactor, usize>> =
            terms.iter().map(|t| Self::multiplicities(&t.denominator)).collect();
        let mut lcm: BTreeMap<BinomialFactor, usize> = BTreeMap::new();
        for m in &own {
            for (f, k) in m {
                let e = lcm.entry(*f).or_insert(0);
                *e = (*e).max(*k);
            }
        }
        // Terms sharing a denominator are added before lifting.
        let mut grouped: BTreeMap<&[BinomialFactor], BiPoly> = BTreeMap::new();
        for t in &terms {
            let slot = grouped.entry(t.denominator.as_slice()).or_insert_with(BiPoly::zero);
            *slot = &*slot + &t.numerator;
        }
        let mut numerator = BiPoly::zero();
        for (den, num) in grouped {
            let have = Self::multiplicities(den);
            let mut lifted = num;
            for (f, k) in &lcm {
                for _ in have.get(f).copied().unwrap_or(0)..*k {
                    lifted = lifted.mul_binomial(f.a, f.b);
                }
            }
            numerator = &numerator + &lifted;
        }
        let denominator = lcm
            .into_iter()
            .flat_map(|(f, k)| std::iter::repeat_n(f, k))
            .collect();
        Self::new(numerator, denominator)
    }

    /// Equality as functions, regardless of how each side is written.
    pub fn same_value(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.numerator, self.denominator.clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut den = self.denominator.clone();
        den.extend_from_slice(&rhs.denominator);
        Self::new(&self.numerator * &rhs.numerator, den)
    }

    pub fn mul_poly(&self, p: &BiPoly) -> Self {
        Self::new(&self.numerator * p, self.denominator.clone())
    }

    /// Cancel denominator factors that divide the numerator exactly, until
    /// no remaining factor does. The value is unchanged.
    pub fn reduce(&self) -> Self {
        let mut numerator = self.numerator.clone();
        let mut denominator = self.denominator.clone();
        if numerator.is_zero() {
            return Self::zero();
        }
        loop {
            let mut changed = false;
            let mut distinct: Vec<BinomialFactor> = denominator.clone();
            distinct.dedup();
            for f in distinct {
                if let Some(q) = numerator.div_exact(&f.as_poly()) {
                    numerator = q;
                    let pos = denominator.iter().position(|g| *g == f).expect("present");
                    denominator.remove(pos);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Self::new(numerator, denominator)
    }

    /// Power-series expansion in `T` and `P`, truncated to `P`-degree at most
    /// `p_degree_bound`.
    pub fn series_expand(&self, p_degree_bound: u32) -> Result<BiPoly> {
        if let Some(f) = self.denominator.iter().find(|f| f.b == 0) {
            return Err(Error::SeriesNotWellFounded(f.a));
        }
        let mut acc = self.numerator.truncate_p(p_degree_bound);
        for f in &self.denominator {
            acc = divide_series_by_binomial(&acc, f.a, f.b, p_degree_bound);
        }
        Ok(acc)
    }
}

/// Multiply a truncated series by `1 / (1 - T^a P^b)` with `b >= 1`.
fn divide_series_by_binomial(series: &BiPoly, a: u32, b: u32, bound: u32) -> BiPoly {
    // r = s + m * r, solved in increasing P-degree.
    let mut work: BTreeMap<(u32, u32), BigInt> =
        series.terms().map(|(&(t, p), c)| ((p, t), c.clone())).collect();
    let mut cursor: Option<(u32, u32)> = None;
    loop {
        let next = match cursor {
            None => work.iter().next(),
            Some(k) => work.range((Excluded(k), Unbounded)).next(),
        };
        let Some((&(p, t), c)) = next else { break };
        cursor = Some((p, t));
        if p + b > bound {
            continue;
        }
        let c = c.clone();
        let e = work.entry((p + b, t + a)).or_default();
        *e += c;
        if e.is_zero() {
            work.remove(&(p + b, t + a));
        }
    }
    BiPoly::from_terms(work.into_iter().map(|((p, t), c)| ((t, p), c)))
}

impl fmt::Display for BiRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.numerator)?;
        if self.denominator.is_empty() {
            return Ok(());
        }
        f.write_str(" / (")?;
        for (i, d) in self.denominator.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    t: u32,
    p: u32,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct RationalJson {
    numerator: Vec<TermJson>,
    denominator: Vec<[u32; 2]>,
}

fn poly_to_json(p: &BiPoly) -> Vec<TermJson> {
    p.terms()
        .map(|(&(t, p), c)| TermJson {
            t,
            p,
            coeff: c.to_string(),
        })
        .collect()
}

fn poly_from_json<E: serde::de::Error>(terms: Vec<TermJson>) -> Result<BiPoly, E> {
    let mut out = BiPoly::zero();
    for term in terms {
        let c: BigInt = term
            .coeff
            .parse()
            .map_err(|_| E::custom(format!("bad coefficient {:?}", term.coeff)))?;
        out.add_term((term.t, term.p), c);
    }
    Ok(out)
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        poly_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        poly_from_json(Vec::<TermJson>::deserialize(d)?)
    }
}

impl Serialize for BinomialFactor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a, self.b].serialize(s)
    }
}

impl<'de> Deserialize<'de> for BinomialFactor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[u32; 2]>::deserialize(d)?;
        Self::new(a, b).map_err(serde::de::Error::custom)
    }
}

impl Serialize for BiRationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RationalJson {
            numerator: poly_to_json(&self.numerator),
            denominator: self.denominator.iter().map(|f| [f.a, f.b]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiRationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RationalJson::deserialize(d)?;
        let numerator = poly_from_json(raw.numerator)?;
        let denominator = raw
            .denominator
            .into_iter()
            .map(|[a, b]| BinomialFactor::new(a, b).map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Self::new(numerator, denominator))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bf(a: u32, b: u32) -> BinomialFactor {
        BinomialFactor::new(a, b).unwrap()
    }

    fn poly(terms: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(e, c)| (e, c)))
    }

    #[test]
    fn zero_factor_rejected() {
        assert_eq!(BinomialFactor::new(0, 0), Err(Error::ZeroFactor));
    }

    #[test]
    fn additive_identity() {
        let f = BiRationalFunction::new(BiPoly::one(), vec![bf(1, 1)]);
        assert_eq!(f.add(&BiRationalFunction::zero()), f);
    }

    #[test]
    fn geometric_series_identity() {
        let f = BiRationalFunction::new(BiPoly::monomial(1, 1, 1), vec![bf(1, 1)]);
        let sum = f.add(&BiRationalFunction::one()).reduce();
        assert_eq!(sum, BiRationalFunction::new(BiPoly::one(), vec![bf(1, 1)]));
    }

    #[test]
    fn cross_multiplied_sum() {
        let f = BiRationalFunction::new(BiPoly::one(), vec![bf(1, 1)]);
        let g = BiRationalFunction::new(BiPoly::one(), vec![bf(1, 2)]);
        let expected = BiRationalFunction::new(
            poly(&[((0, 0), 2), ((1, 1), -1), ((1, 2), -1)]),
            vec![bf(1, 1), bf(1, 2)],
        );
        assert_eq!(f.add(&g), expected);
    }

    #[test]
    fn reduce_examples() {
        let visible = BiRationalFunction::new(
            &BiPoly::binomial(1, 1) * &BiPoly::binomial(0, 1),
            vec![bf(1, 1)],
        );
        assert_eq!(visible.reduce(), BiRationalFunction::from_poly(BiPoly::binomial(0, 1)));

        let coprime = BiRationalFunction::new(BiPoly::binomial(0, 2), vec![bf(1, 2)]);
        assert_eq!(coprime.reduce(), coprime);

        let partial = BiRationalFunction::new(BiPoly::binomial(2, 2), vec![bf(1, 1)]);
        assert_eq!(
            partial.reduce(),
            BiRationalFunction::from_poly(poly(&[((0, 0), 1), ((1, 1), 1)]))
        );
    }

    #[test]
    fn series_examples() {
        let f = BiRationalFunction::new(BiPoly::binomial(0, 1), vec![bf(1, 1)]);
        let expected = poly(&[
            ((0, 0), 1),
            ((0, 1), -1),
            ((1, 1), 1),
            ((1, 2), -1),
            ((2, 2), 1),
            ((2, 3), -1),
            ((3, 3), 1),
        ]);
        assert_eq!(f.series_expand(3).unwrap(), expected);
        assert_eq!(BiRationalFunction::one().series_expand(5).unwrap(), BiPoly::one());
        let g = BiRationalFunction::new(BiPoly::one(), vec![bf(0, 1)]);
        assert_eq!(
            g.series_expand(2).unwrap(),
            poly(&[((0, 0), 1), ((0, 1), 1), ((0, 2), 1)])
        );
    }

    #[test]
    fn series_rejects_pure_t_factor() {
        let f = BiRationalFunction::new(BiPoly::one(), vec![bf(2, 0)]);
        assert_eq!(f.series_expand(4), Err(Error::SeriesNotWellFounded(2)));
    }

    #[test]
    fn json_shape() {
        let f = BiRationalFunction::new(BiPoly::binomial(0, 2), vec![bf(1, 2)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"numerator":[{"t":0,"p":0,"coeff":"1"},{"t":0,"p":2,"coeff":"-1"}],"denominator":[[1,2]]}"#
        );
        let back: BiRationalFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
