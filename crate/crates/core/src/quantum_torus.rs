//! Noncommutative torus `C_t[l^{±1}, m^{±1}]` with `lm = t^2 ml`, kept in
//! normal order `l^a m^b`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactcoeff::{rational, Coeff, CoeffError, LaurentT, Rational};
use crate::torus_skein::TorusSkein;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("cannot clear the zero polynomial into the quantum plane")]
    ZeroInput,
    #[error("polynomial has a negative exponent at l^{0} m^{1}")]
    NotInPlane(i64, i64),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QTorusPoly<C: Coeff = LaurentT> {
    terms: BTreeMap<(i64, i64), C>,
}

impl<C: Coeff> Default for QTorusPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> QTorusPoly<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, C::one())
    }

    /// `c l^a m^b`.
    pub fn monomial(a: i64, b: i64, c: C) -> Self {
        let mut r = Self::zero();
        r.add_term(a, b, &c);
        r
    }

    pub fn l() -> Self {
        Self::monomial(1, 0, C::one())
    }

    pub fn m() -> Self {
        Self::monomial(0, 1, C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((i64, i64), &C)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, a: i64, b: i64) -> C {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: i64, b: i64, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&(a, b)) {
            Some(v) => {
                *v = v.plus(c);
                if v.is_zero() {
                    self.terms.remove(&(a, b));
                }
            }
            None => {
                self.terms.insert((a, b), c.clone());
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for ((a, b), c) in &o.terms {
            r.add_term(*a, *b, c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.negate())
    }

    pub fn scale(&self, k: &C) -> Self {
        self.map_coeffs(|c| c.times(k))
    }

    pub fn scale_laurent(&self, k: &LaurentT) -> Self {
        self.map_coeffs(|c| c.times_laurent(k))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> QTorusPoly<D> {
        let mut r = QTorusPoly::zero();
        for ((a, b), c) in &self.terms {
            r.add_term(*a, *b, &f(c));
        }
        r
    }

    /// Normal-ordered product: `(l^a m^b)(l^c m^d) = t^{-2bc} l^{a+c} m^{b+d}`.
    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &o.terms {
                let k = x.times(y).times_laurent(&LaurentT::t_pow(-2 * b * c));
                r.add_term(a + c, b + d, &k);
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `(min l-exponent, min m-exponent)`, taken independently.
    pub fn min_exponents(&self) -> Option<(i64, i64)> {
        let a = self.terms.keys().map(|k| k.0).min()?;
        let b = self.terms.keys().map(|k| k.1).min()?;
        Some((a, b))
    }

    pub fn max_exponents(&self) -> Option<(i64, i64)> {
        let a = self.terms.keys().map(|k| k.0).max()?;
        let b = self.terms.keys().map(|k| k.1).max()?;
        Some((a, b))
    }

    pub fn in_plane(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a >= 0 && b >= 0)
    }

    /// The semilinear automorphism `l -> l`, `m -> m^-1`, `t -> t^-1`,
    /// matching the skein mirror `(p,q) -> (p,-q)`.
    pub fn mirror(&self) -> Self {
        let mut r = Self::zero();
        for ((a, b), c) in &self.terms {
            // (l^a m^b) -> l^a m^-b already normal ordered
            r.add_term(*a, -*b, &c.mirror());
        }
        r
    }
}

impl QTorusPoly<LaurentT> {
    pub fn specialize_t(&self, t0: &Rational) -> Result<Self, CoeffError> {
        let mut r = Self::zero();
        for ((a, b), c) in &self.terms {
            r.add_term(*a, *b, &LaurentT::constant(c.specialize(t0)?));
        }
        Ok(r)
    }
}

/// A normal-ordered polynomial with nonnegative exponents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlanePoly(QTorusPoly<LaurentT>);

impl PlanePoly {
    pub fn new(f: QTorusPoly<LaurentT>) -> Result<Self, TorusError> {
        if let Some(&(a, b)) = f.terms.keys().find(|&&(a, b)| a < 0 || b < 0) {
            return Err(TorusError::NotInPlane(a, b));
        }
        Ok(Self(f))
    }

    pub fn poly(&self) -> &QTorusPoly<LaurentT> {
        &self.0
    }

    pub fn into_poly(self) -> QTorusPoly<LaurentT> {
        self.0
    }
}

/// `e_{p,q} = t^{-pq} l^p m^q`.
pub fn e_monomial(p: i64, q: i64) -> QTorusPoly {
    QTorusPoly::monomial(p, q, LaurentT::t_pow(-p * q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trig {
    Cos,
    Sin,
}

/// `cos_t(p,q) = (e_{p,q} + e_{-p,-q})/2`, `sin_t(p,q) = (e_{p,q} - e_{-p,-q})/2`.
pub fn cos_sin(p: i64, q: i64, kind: Trig) -> QTorusPoly {
    let a = e_monomial(p, q);
    let b = e_monomial(-p, -q);
    let s = match kind {
        Trig::Cos => a.add(&b),
        Trig::Sin => a.sub(&b),
    };
    s.scale(&LaurentT::constant(rational(1, 2)))
}

/// Algebra map sending `(p,q)_T` to `e_{p,q} + e_{-p,-q}` and the unit to 1.
pub fn embed<C: Coeff>(s: &TorusSkein<C>) -> QTorusPoly<C> {
    let mut r = QTorusPoly::constant(s.unit_coeff().clone());
    for (l, c) in s.terms() {
        for (p, q) in [(l.p, l.q), (-l.p, -l.q)] {
            r.add_term(p, q, &c.times_laurent(&LaurentT::t_pow(-p * q)));
        }
    }
    r
}

/// Left-multiplies by the smallest monomial `l^a m^b` that moves `f` into the
/// quantum plane. Returns the cleared polynomial and the multiplier.
pub fn clear_to_plane(f: &QTorusPoly) -> Result<(PlanePoly, QTorusPoly), TorusError> {
    let (amin, bmin) = f.min_exponents().ok_or(TorusError::ZeroInput)?;
    let mult = QTorusPoly::monomial((-amin).max(0), (-bmin).max(0), LaurentT::one());
    let g = mult.mul(f);
    Ok((PlanePoly::new(g)?, mult))
}

/// Inverse of a monomial `c t^k l^a m^b`.
pub fn monomial_inverse(f: &QTorusPoly) -> Option<QTorusPoly> {
    if f.len() != 1 {
        return None;
    }
    let ((a, b), c) = f.terms().next()?;
    let (c0, k) = c.as_monomial()?;
    // (l^a m^b)(l^-a m^-b) = t^{2ab}
    let inv = LaurentT::monomial(c0.recip(), -k - 2 * a * b);
    Some(QTorusPoly::monomial(-a, -b, inv))
}

/// `Some((c, k))` when `f = c t^k g`.
pub fn equal_up_to_unit(f: &QTorusPoly, g: &QTorusPoly) -> Option<(Rational, i64)> {
    if f.is_zero() || g.is_zero() {
        return (f.is_zero() && g.is_zero()).then(|| (Rational::one(), 0));
    }
    let ((a, b), fc) = f.terms().next()?;
    let gc = g.coeff(a, b);
    if gc.is_zero() {
        return None;
    }
    let c = fc.leading_coeff()? / gc.leading_coeff()?;
    let k = fc.max_exp()? - gc.max_exp()?;
    if c.is_zero() {
        return None;
    }
    let unit = LaurentT::monomial(c.clone(), k);
    (g.scale(&unit) == *f).then_some((c, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcoeff::int;

    fn t(k: i64) -> LaurentT {
        LaurentT::t_pow(k)
    }

    #[test]
    fn commutation_rule() {
        let ml = QTorusPoly::<LaurentT>::m().mul(&QTorusPoly::l());
        assert_eq!(ml, QTorusPoly::monomial(1, 1, t(-2)));
        let e = e_monomial(1, 0).mul(&e_monomial(0, 1));
        assert_eq!(e, e_monomial(1, 1).scale(&t(1)));
        assert_eq!(e_monomial(3, -2).mul(&e_monomial(-3, 2)), QTorusPoly::one());
    }

    #[test]
    fn exponential_examples() {
        assert_eq!(e_monomial(1, 0), QTorusPoly::l());
        assert_eq!(e_monomial(1, 1), QTorusPoly::monomial(1, 1, t(-1)));
        assert_eq!(e_monomial(2, -3), QTorusPoly::monomial(2, -3, t(6)));
    }

    #[test]
    fn trig_examples() {
        assert_eq!(cos_sin(0, 0, Trig::Cos), QTorusPoly::one());
        assert!(cos_sin(0, 0, Trig::Sin).is_zero());
        let c = cos_sin(1, -5, Trig::Cos).scale(&LaurentT::from_int(2));
        let e = QTorusPoly::monomial(1, -5, t(5)).add(&QTorusPoly::monomial(-1, 5, t(5)));
        assert_eq!(c, e);
        assert_eq!(embed(&TorusSkein::t(1, -5)), e);
    }

    #[test]
    fn embed_respects_product() {
        let a = TorusSkein::t(1, 0);
        let b = TorusSkein::t(0, 1);
        assert_eq!(embed(&a.mul(&b)), embed(&a).mul(&embed(&b)));
        assert_eq!(embed(&TorusSkein::<LaurentT>::unit()), QTorusPoly::one());
    }

    #[test]
    fn clearing() {
        let f = QTorusPoly::monomial(-1, 1, LaurentT::one());
        let (g, mult) = clear_to_plane(&f).unwrap();
        assert_eq!(mult, QTorusPoly::l());
        assert_eq!(g.poly().terms().map(|(k, _)| k).collect::<Vec<_>>(), vec![(0, 1)]);
        let p = QTorusPoly::monomial(2, 3, t(1));
        let (g, mult) = clear_to_plane(&p).unwrap();
        assert_eq!(mult, QTorusPoly::one());
        assert_eq!(g.poly(), &p);
        assert!(clear_to_plane(&QTorusPoly::zero()).is_err());
    }

    #[test]
    fn units() {
        let p = QTorusPoly::l().add(&QTorusPoly::monomial(0, 2, t(3)));
        assert_eq!(equal_up_to_unit(&p, &p.neg()), Some((int(-1), 0)));
        assert_eq!(equal_up_to_unit(&p.scale(&t(4)), &p), Some((int(1), 4)));
        assert_eq!(equal_up_to_unit(&QTorusPoly::l(), &QTorusPoly::m()), None);
    }

    #[test]
    fn specialization_commutes() {
        let l = QTorusPoly::<LaurentT>::l();
        let m = QTorusPoly::<LaurentT>::m();
        let d = l.mul(&m).sub(&m.mul(&l).scale(&t(2)));
        assert!(d.is_zero());
        let m1 = int(-1);
        let lm = l.mul(&m).specialize_t(&m1).unwrap();
        let ml = m.mul(&l).specialize_t(&m1).unwrap();
        assert_eq!(lm, ml);
        assert_eq!(
            e_monomial(1, 1).specialize_t(&m1).unwrap(),
            QTorusPoly::monomial(1, 1, LaurentT::from_int(-1))
        );
    }

    #[test]
    fn monomial_inverse_works() {
        let f = QTorusPoly::monomial(2, -3, LaurentT::monomial(int(3), 5));
        let g = monomial_inverse(&f).unwrap();
        assert_eq!(f.mul(&g), QTorusPoly::one());
        assert_eq!(g.mul(&f), QTorusPoly::one());
    }
}
