use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{CoeffError, Rational};

/// Laurent polynomial in `t` with exact rational coefficients.
///
/// Stored sparsely; no stored coefficient is ever zero, so structural
/// equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentT {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentT {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(Rational::one(), k)
    }

    pub fn monomial(c: Rational, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }

    /// Shorthand for integer coefficients, mostly used in tests and tables.
    pub fn from_int_terms(pairs: &[(i64, i64)]) -> Self {
        Self::from_terms(
            pairs
                .iter()
                .map(|&(k, c)| (k, Rational::from_integer(BigInt::from(c)))),
        )
    }

    pub fn add_term(&mut self, k: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// True for `c·t^k` with a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_monomial(&self) -> Option<(&Rational, i64)> {
        if self.terms.len() == 1 {
            let (k, c) = self.terms.iter().next().unwrap();
            Some((c, *k))
        } else {
            None
        }
    }

    /// The constant if the polynomial has no `t` dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i64) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `t`.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// Coefficient of the lowest power of `t`.
    pub fn trailing_coeff(&self) -> Option<&Rational> {
        self.terms.values().next()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// The substitution `t -> t^{-1}`.
    pub fn mirror(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact evaluation at a nonzero rational `t0`.
    pub fn specialize(&self, t0: &Rational) -> Result<Rational, CoeffError> {
        if t0.is_zero() {
            return Err(CoeffError::ZeroSpecialization);
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rational(t0, *e);
        }
        Ok(acc)
    }

    /// Dense coefficient vector of `self · t^{-min_exp}`, lowest degree first.
    pub(crate) fn to_dense(&self) -> (i64, Vec<Rational>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(shift: i64, coeffs: &[Rational]) -> Self {
        Self {
            terms: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (shift + i as i64, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }
}

pub(crate) fn pow_rational(base: &Rational, e: i64) -> Rational {
    let mut r = Rational::one();
    let b = if e < 0 { base.recip() } else { base.clone() };
    for _ in 0..e.unsigned_abs() {
        r *= &b;
    }
    r
}

impl From<Rational> for LaurentT {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for LaurentT {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl<'a> Add<&'a LaurentT> for &'a LaurentT {
    type Output = LaurentT;
    fn add(self, rhs: &LaurentT) -> LaurentT {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentT {
    type Output = LaurentT;
    fn add(mut self, rhs: LaurentT) -> LaurentT {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentT> for LaurentT {
    fn add_assign(&mut self, rhs: &LaurentT) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl SubAssign<&LaurentT> for LaurentT {
    fn sub_assign(&mut self, rhs: &LaurentT) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, -c);
        }
    }
}

impl<'a> Sub<&'a LaurentT> for &'a LaurentT {
    type Output = LaurentT;
    fn sub(self, rhs: &LaurentT) -> LaurentT {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentT {
    type Output = LaurentT;
    fn sub(mut self, rhs: LaurentT) -> LaurentT {
        self -= &rhs;
        self
    }
}

impl Neg for LaurentT {
    type Output = LaurentT;
    fn neg(mut self) -> LaurentT {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &LaurentT {
    type Output = LaurentT;
    fn neg(self) -> LaurentT {
        -self.clone()
    }
}

impl<'a> Mul<&'a LaurentT> for &'a LaurentT {
    type Output = LaurentT;
    fn mul(self, rhs: &LaurentT) -> LaurentT {
        if self.is_zero() || rhs.is_zero() {
            return LaurentT::zero();
        }
        let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                *terms.entry(a + b).or_insert_with(Rational::zero) += x * y;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentT { terms }
    }
}

impl Mul for LaurentT {
    type Output = LaurentT;
    fn mul(self, rhs: LaurentT) -> LaurentT {
        &self * &rhs
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Renders a single signed-free term `c·t^k` with `c > 0`.
fn write_term(f: &mut fmt::Formatter<'_>, c: &Rational, k: i64) -> fmt::Result {
    let unit = c.is_one();
    match (k, unit) {
        (0, _) => write_rational(f, c),
        (_, true) => write_tpow(f, k),
        (_, false) => {
            write_rational(f, c)?;
            f.write_str("*")?;
            write_tpow(f, k)
        }
    }
}

fn write_tpow(f: &mut fmt::Formatter<'_>, k: i64) -> fmt::Result {
    if k == 1 {
        f.write_str("t")
    } else {
        write!(f, "t^{k}")
    }
}

/// Highest power first, e.g. `t^4 - t^-4`.
impl fmt::Display for LaurentT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_term(f, &c.abs(), *k)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentT({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lt(pairs: &[(i64, i64)]) -> LaurentT {
        LaurentT::from_int_terms(pairs)
    }

    #[test]
    fn cancellation() {
        let a = lt(&[(1, 1), (-1, 1)]);
        let b = lt(&[(-1, -1)]);
        assert_eq!(&a + &b, LaurentT::t_pow(1));
    }

    #[test]
    fn difference_of_squares() {
        let a = lt(&[(4, 1), (-4, -1)]);
        let b = lt(&[(4, 1), (-4, 1)]);
        assert_eq!(&a * &b, lt(&[(8, 1), (-8, -1)]));
    }

    #[test]
    fn exponent_law() {
        assert_eq!(&LaurentT::t_pow(2) * &LaurentT::t_pow(-2), LaurentT::one());
    }

    #[test]
    fn specialize_examples() {
        let d = lt(&[(4, 1), (-4, -1)]);
        let m1 = Rational::from_integer((-1).into());
        assert!(d.specialize(&m1).unwrap().is_zero());
        assert!(lt(&[(8, 1), (0, -1)]).specialize(&m1).unwrap().is_zero());
        let two = Rational::from_integer(2.into());
        assert_eq!(
            d.specialize(&two).unwrap(),
            Rational::new(255.into(), 16.into())
        );
        assert_eq!(
            d.specialize(&Rational::zero()),
            Err(CoeffError::ZeroSpecialization)
        );
    }

    #[test]
    fn zero_is_empty() {
        let a = lt(&[(3, 2)]);
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &a).terms().count(), 0);
    }

    #[test]
    fn display() {
        assert_eq!(lt(&[(4, 1), (-4, -1)]).to_string(), "t^4 - t^-4");
        assert_eq!(lt(&[(1, -1)]).to_string(), "-t");
        assert_eq!(lt(&[(0, -2), (3, 2)]).to_string(), "2*t^3 - 2");
        let half = LaurentT::monomial(Rational::new(1.into(), 2.into()), -1);
        assert_eq!(half.to_string(), "1/2*t^-1");
    }
}
