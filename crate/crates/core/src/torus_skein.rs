//! The Kauffman bracket skein algebra of the torus, in the `(p,q)_T` basis.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::chebyshev::{s_in_t_basis, Basis, PolyX};
use crate::exactcoeff::{Coeff, LaurentT, Rational};

/// A canonical curve label: `p > 0`, or `p = 0` and `q > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusLabel {
    pub p: i64,
    pub q: i64,
}

/// Result of [`canonicalize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Canonical {
    Label(TorusLabel),
    /// `(0,0)_T = T_0 = 2` times the empty link.
    Unit,
}

/// `(p,q)` and `(-p,-q)` are the same unoriented curve; `(0,0)` is the scalar 2.
pub fn canonicalize(p: i64, q: i64) -> (Canonical, LaurentT) {
    if p == 0 && q == 0 {
        return (Canonical::Unit, LaurentT::from_int(2));
    }
    let (p, q) = if p < 0 || (p == 0 && q < 0) { (-p, -q) } else { (p, q) };
    (Canonical::Label(TorusLabel { p, q }), LaurentT::one())
}

/// Element of `K_t(T^2 x I)`: a unit (empty link) coefficient plus
/// coefficients on canonical labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorusSkein<C: Coeff = LaurentT> {
    unit: C,
    terms: BTreeMap<TorusLabel, C>,
}

impl<C: Coeff> Default for TorusSkein<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> TorusSkein<C> {
    pub fn zero() -> Self {
        Self {
            unit: C::zero(),
            terms: BTreeMap::new(),
        }
    }

    pub fn unit() -> Self {
        Self::scalar(C::one())
    }

    pub fn scalar(c: C) -> Self {
        Self {
            unit: c,
            terms: BTreeMap::new(),
        }
    }

    /// `c (p,q)_T` for any integer pair.
    pub fn curve(p: i64, q: i64, c: C) -> Self {
        let mut s = Self::zero();
        s.add_curve(p, q, &c);
        s
    }

    pub fn basis_curve(p: i64, q: i64) -> Self {
        Self::curve(p, q, C::one())
    }

    pub fn unit_coeff(&self) -> &C {
        &self.unit
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (TorusLabel, &C)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, l: TorusLabel) -> C {
        self.terms.get(&l).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero() && self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len() + usize::from(!self.unit.is_zero())
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Largest `p` appearing among the labels, or 0.
    pub fn p_degree(&self) -> i64 {
        self.terms.keys().next_back().map_or(0, |l| l.p)
    }

    pub fn add_unit(&mut self, c: &C) {
        self.unit = self.unit.plus(c);
    }

    pub fn add_label(&mut self, l: TorusLabel, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&l) {
            Some(v) => {
                *v = v.plus(c);
                if v.is_zero() {
                    self.terms.remove(&l);
                }
            }
            None => {
                self.terms.insert(l, c.clone());
            }
        }
    }

    /// Adds `c (p,q)_T`, canonicalizing the label.
    pub fn add_curve(&mut self, p: i64, q: i64, c: &C) {
        match canonicalize(p, q) {
            (Canonical::Unit, two) => self.add_unit(&c.times_laurent(&two)),
            (Canonical::Label(l), _) => self.add_label(l, c),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_unit(&o.unit);
        for (l, c) in &o.terms {
            r.add_label(*l, c);
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

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TorusSkein<D> {
        let mut r = TorusSkein::scalar(f(&self.unit));
        for (l, c) in &self.terms {
            r.add_label(*l, &f(c));
        }
        r
    }

    pub fn to_ratfunc(&self) -> TorusSkein<crate::exactcoeff::RatFuncT> {
        self.map_coeffs(|c| c.to_ratfunc())
    }

    /// Product-to-sum multiplication.
    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        if !self.unit.is_zero() {
            r = r.add(&o.scale(&self.unit));
        }
        if !o.unit.is_zero() {
            for (l, c) in &self.terms {
                r.add_label(*l, &c.times(&o.unit));
            }
        }
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let c = ca.times(cb);
                let d = a.p * b.q - a.q * b.p;
                r.add_curve(a.p + b.p, a.q + b.q, &c.times_laurent(&LaurentT::t_pow(d)));
                r.add_curve(a.p - b.p, a.q - b.q, &c.times_laurent(&LaurentT::t_pow(-d)));
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::unit(), |acc, _| acc.mul(self))
    }

    /// Mirror image: `(p,q) -> (p,-q)` and `t -> t^-1`.
    pub fn mirror(&self) -> Self {
        let mut r = Self::scalar(self.unit.mirror());
        for (l, c) in &self.terms {
            r.add_curve(l.p, -l.q, &c.mirror());
        }
        r
    }
}

impl TorusSkein<LaurentT> {
    /// `(p,q)_T` with coefficient 1.
    pub fn t(p: i64, q: i64) -> Self {
        Self::basis_curve(p, q)
    }

    /// Coefficients evaluated at `t = t0`, kept as constant Laurent polynomials.
    pub fn specialize(&self, t0: &Rational) -> Result<Self, crate::exactcoeff::CoeffError> {
        let mut r = Self::scalar(LaurentT::constant(self.unit.specialize(t0)?));
        for (l, c) in &self.terms {
            r.add_label(*l, &LaurentT::constant(c.specialize(t0)?));
        }
        Ok(r)
    }
}

/// The Jones-Wenzl colored curve `(p,q)_JW = S_n((p',q'))` in the `T` basis.
///
/// `n` is the signed multiple of the canonical primitive direction, so for
/// example `(0,-3)_JW = S_{-3}((0,1)) = -S_1((0,1))`.
pub fn jw_to_t(p: i64, q: i64) -> TorusSkein {
    if p == 0 && q == 0 {
        return TorusSkein::unit();
    }
    let g = p.gcd(&q);
    let (Canonical::Label(dir), _) = canonicalize(p / g, q / g) else {
        unreachable!()
    };
    let n = if dir.p * g == p && dir.q * g == q { g } else { -g };
    let mut r = TorusSkein::zero();
    for (k, sign) in s_in_t_basis(n) {
        let c = LaurentT::from_int(sign);
        if k == 0 {
            r.add_unit(&c);
        } else {
            r.add_curve(dir.p * k as i64, dir.q * k as i64, &c);
        }
    }
    r
}

/// Evaluates a one-variable polynomial at the meridian curve `(0,1)_T`.
pub fn poly_of_meridian(poly: &PolyX) -> TorusSkein {
    let tb = poly.convert(Basis::T);
    let mut r = TorusSkein::zero();
    for (k, c) in tb.coeffs() {
        if k == 0 {
            r.add_unit(c);
        } else {
            r.add_curve(0, k as i64, c);
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::s_poly;

    fn t(k: i64) -> LaurentT {
        LaurentT::t_pow(k)
    }

    #[test]
    fn canonical_labels() {
        assert_eq!(
            canonicalize(-1, 3),
            (Canonical::Label(TorusLabel { p: 1, q: -3 }), LaurentT::one())
        );
        assert_eq!(
            canonicalize(0, -2),
            (Canonical::Label(TorusLabel { p: 0, q: 2 }), LaurentT::one())
        );
        assert_eq!(canonicalize(0, 0), (Canonical::Unit, LaurentT::from_int(2)));
    }

    #[test]
    fn product_to_sum_examples() {
        let a = TorusSkein::t(1, 0).mul(&TorusSkein::t(0, 1));
        let e = TorusSkein::curve(1, 1, t(1)).add(&TorusSkein::curve(1, -1, t(-1)));
        assert_eq!(a, e);
        for q in -4..=4 {
            let a = TorusSkein::t(2, q).mul(&TorusSkein::t(0, 1));
            let e = TorusSkein::curve(2, q + 1, t(2)).add(&TorusSkein::curve(2, q - 1, t(-2)));
            assert_eq!(a, e);
        }
        let sq = TorusSkein::t(1, 1).mul(&TorusSkein::t(1, 1));
        assert_eq!(sq, TorusSkein::t(2, 2).add(&TorusSkein::scalar(LaurentT::from_int(2))));
    }

    #[test]
    fn jw_examples() {
        assert_eq!(jw_to_t(1, 5), TorusSkein::t(1, 5));
        assert_eq!(jw_to_t(2, 4), TorusSkein::t(2, 4).add(&TorusSkein::unit()));
        assert_eq!(jw_to_t(3, 0), TorusSkein::t(3, 0).add(&TorusSkein::t(1, 0)));
        assert_eq!(jw_to_t(0, -1), TorusSkein::zero());
        assert_eq!(jw_to_t(0, -3), TorusSkein::t(0, 1).neg());
    }

    #[test]
    fn meridian_examples() {
        let x = PolyX::from_coeffs(Basis::Power, [(1, LaurentT::one())]);
        assert_eq!(poly_of_meridian(&x), TorusSkein::t(0, 1));
        let x2 = PolyX::from_coeffs(Basis::Power, [(2, LaurentT::one())]);
        assert_eq!(
            poly_of_meridian(&x2),
            TorusSkein::t(0, 2).add(&TorusSkein::scalar(LaurentT::from_int(2)))
        );
        let t3 = PolyX::basis_element(Basis::T, 3);
        assert_eq!(poly_of_meridian(&t3), TorusSkein::t(0, 3));
        for n in 0..6 {
            assert_eq!(poly_of_meridian(&s_poly(n)), jw_to_t(0, n));
        }
    }

    #[test]
    fn mirror_is_involution() {
        let a = TorusSkein::curve(1, -5, t(3)).add(&TorusSkein::scalar(t(-2)));
        assert_eq!(a.mirror().mirror(), a);
        assert_eq!(a.mirror(), TorusSkein::curve(1, 5, t(-3)).add(&TorusSkein::scalar(t(2))));
    }
}
