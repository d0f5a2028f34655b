use std::fmt;

use num_traits::{One, Zero};

use super::laurent::LaurentT;
use super::{CoeffError, Rational};

/// Element of `Q(t)`, kept in a canonical reduced form.
///
/// The denominator has lowest exponent 0 and leading coefficient 1, and
/// shares no polynomial factor with the numerator. Equality is therefore
/// structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFuncT {
    num: LaurentT,
    den: LaurentT,
}

impl RatFuncT {
    pub fn new(num: LaurentT, den: LaurentT) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        Self::from_laurent(LaurentT::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentT::one())
    }

    pub fn from_laurent(num: LaurentT) -> Self {
        Self {
            num,
            den: LaurentT::one(),
        }
    }

    pub fn num(&self) -> &LaurentT {
        &self.num
    }

    pub fn den(&self) -> &LaurentT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentT> {
        self.is_laurent().then_some(&self.num)
    }

    /// Re-runs canonicalization; a no-op on values built through this API.
    pub fn normalized(&self) -> Self {
        Self::reduce(self.num.clone(), self.den.clone())
    }

    fn reduce(num: LaurentT, den: LaurentT) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let shift = den.min_exp().unwrap();
        let (num, den) = (num.shift(-shift), den.shift(-shift));
        if den.is_monomial() {
            let c = den.leading_coeff().unwrap().recip();
            return Self {
                num: num.scale(&c),
                den: LaurentT::one(),
            };
        }
        let (nshift, nd) = num.to_dense();
        let (_, dd) = den.to_dense();
        let g = poly_gcd(&nd, &dd);
        let (nd, dd) = if g.len() > 1 {
            (poly_div_exact(&nd, &g), poly_div_exact(&dd, &g))
        } else {
            (nd, dd)
        };
        let lc = dd.last().unwrap().recip();
        let nd: Vec<Rational> = nd.iter().map(|c| c * &lc).collect();
        let dd: Vec<Rational> = dd.iter().map(|c| c * &lc).collect();
        Self {
            num: LaurentT::from_dense(nshift, &nd),
            den: LaurentT::from_dense(0, &dd),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.is_laurent() {
                return Self::from_laurent(&self.num + &o.num);
            }
            return Self::reduce(&self.num + &o.num, self.den.clone());
        }
        Self::reduce(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_laurent() && o.is_laurent() {
            return Self::from_laurent(&self.num * &o.num);
        }
        Self::reduce(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn mul_laurent(&self, l: &LaurentT) -> Self {
        if self.is_laurent() {
            return Self::from_laurent(&self.num * l);
        }
        Self::reduce(&self.num * l, self.den.clone())
    }

    pub fn recip(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self, CoeffError> {
        Ok(self.mul(&o.recip()?))
    }

    pub fn mirror(&self) -> Self {
        Self::reduce(self.num.mirror(), self.den.mirror())
    }

    /// Evaluation at `t0`; fails when `t0` is a pole.
    pub fn specialize(&self, t0: &Rational) -> Result<Rational, CoeffError> {
        let d = self.den.specialize(t0)?;
        if d.is_zero() {
            return Err(CoeffError::Pole);
        }
        Ok(self.num.specialize(t0)? / d)
    }
}

impl From<LaurentT> for RatFuncT {
    fn from(l: LaurentT) -> Self {
        Self::from_laurent(l)
    }
}

impl fmt::Display for RatFuncT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFuncT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFuncT({self})")
    }
}

// Dense univariate polynomials over Q, lowest degree first, no trailing zeros.

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].recip();
    while r.len() > db {
        let k = r.len() - 1;
        let c = &r[k] * &lb;
        if !c.is_zero() {
            for (i, bi) in b.iter().enumerate() {
                let idx = k - db + i;
                r[idx] -= &c * bi;
            }
        }
        r.pop();
        r = trim(r);
    }
    trim(r)
}

fn monic(p: Vec<Rational>) -> Vec<Rational> {
    let lc = p.last().unwrap().recip();
    p.into_iter().map(|c| c * &lc).collect()
}

/// Monic gcd by the Euclidean algorithm, each remainder made monic.
pub(crate) fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    if b.is_empty() {
        return monic(a);
    }
    if b.len() == 1 {
        return vec![Rational::one()];
    }
    a = monic(a);
    b = monic(b);
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![Rational::one()];
        }
        let r = poly_rem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { monic(r) };
    }
    a
}

pub(crate) fn poly_div_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![Rational::zero(); a.len() - db];
    let lb = b[db].recip();
    for k in (db..a.len()).rev() {
        let c = &r[k] * &lb;
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            r[k - db + i] -= &c * bi;
        }
        q[k - db] = c;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()));
    trim(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lt(pairs: &[(i64, i64)]) -> LaurentT {
        LaurentT::from_int_terms(pairs)
    }

    fn rf(n: &[(i64, i64)], d: &[(i64, i64)]) -> RatFuncT {
        RatFuncT::new(lt(n), lt(d)).unwrap()
    }

    #[test]
    fn inverse_cancels() {
        let d = rf(&[(4, 1), (-4, -1)], &[(0, 1)]);
        let inv = d.recip().unwrap();
        assert_eq!(inv.mul(&d), RatFuncT::one());
    }

    #[test]
    fn t_minus_t() {
        let a = RatFuncT::from(LaurentT::t_pow(1));
        assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn polynomial_division_oracle() {
        // (t^8 - t^-8) / (t^4 - t^-4) = t^4 + t^-4
        let q = rf(&[(8, 1), (-8, -1)], &[(4, 1), (-4, -1)]);
        assert_eq!(q, RatFuncT::from(lt(&[(4, 1), (-4, 1)])));
    }

    #[test]
    fn canonical_denominator() {
        let q = rf(&[(0, 1)], &[(3, 2), (1, 4)]);
        // 1 / (2t^3 + 4t) = (1/2) t^-1 / (t^2 + 2)
        assert_eq!(q.den(), &lt(&[(2, 1), (0, 2)]));
        assert_eq!(q.num(), &LaurentT::monomial(Rational::new(1.into(), 2.into()), -1));
        assert_eq!(q.normalized(), q);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            RatFuncT::new(LaurentT::one(), LaurentT::zero()),
            Err(CoeffError::DivisionByZero)
        );
        assert!(RatFuncT::one().div(&RatFuncT::zero()).is_err());
    }

    #[test]
    fn pole_detected() {
        let q = rf(&[(0, 1)], &[(4, 1), (-4, -1)]);
        let m1 = Rational::from_integer((-1).into());
        assert_eq!(q.specialize(&m1), Err(CoeffError::Pole));
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (t^2 - 1)(t + 3) and (t^2 - 1)(t - 5)
        let a = rf(&[(3, 1), (2, 3), (1, -1), (0, -3)], &[(3, 1), (2, -5), (1, -1), (0, 5)]);
        assert_eq!(a, rf(&[(1, 1), (0, 3)], &[(1, 1), (0, -5)]));
    }
}
