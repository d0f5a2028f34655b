//! Chebyshev-type families `T_n` and `S_n` over all integer indices, and
//! conversions between the power, `T` and `S` bases.
//!
//! Both families satisfy `F_{n+1} = x F_n - F_{n-1}`, with `T_0 = 2`,
//! `T_1 = x`, `S_0 = 1`, `S_1 = x`. Extended to negative indices this gives
//! `T_{-n} = T_n` and `S_{-n} = -S_{n-2}`, in particular `S_{-1} = 0`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::exactcoeff::{int, Coeff, LaurentT, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Power,
    /// Chebyshev `T_k`. The degree-0 slot holds the plain constant term
    /// (a multiple of `1 = T_0 / 2`), never a `T_0` coefficient.
    T,
    S,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Power => "power",
            Basis::T => "T",
            Basis::S => "S",
        }
    }
}

/// Polynomial in one variable `x` with Laurent coefficients, tagged with the
/// basis its coefficients refer to.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyX {
    basis: Basis,
    coeffs: BTreeMap<usize, LaurentT>,
}

impl PolyX {
    pub fn zero(basis: Basis) -> Self {
        Self {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_coeffs<I: IntoIterator<Item = (usize, LaurentT)>>(basis: Basis, it: I) -> Self {
        let mut p = Self::zero(basis);
        for (k, c) in it {
            p.add_coeff(k, &c);
        }
        p
    }

    /// The single basis element of index `k`.
    pub fn basis_element(basis: Basis, k: usize) -> Self {
        Self::from_coeffs(basis, [(k, LaurentT::one())])
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> impl DoubleEndedIterator<Item = (usize, &LaurentT)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: usize) -> LaurentT {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_coeff(&mut self, k: usize, c: &LaurentT) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let o = o.convert(self.basis);
        let mut out = self.clone();
        for (k, c) in &o.coeffs {
            out.add_coeff(*k, c);
        }
        out
    }

    pub fn scale(&self, c: &LaurentT) -> Self {
        Self::from_coeffs(self.basis, self.coeffs.iter().map(|(k, v)| (*k, v * c)))
    }

    /// Product, computed in the power basis and returned in `self`'s basis.
    pub fn mul(&self, o: &Self) -> Self {
        let a = self.convert(Basis::Power);
        let b = o.convert(Basis::Power);
        let mut out = Self::zero(Basis::Power);
        for (i, x) in &a.coeffs {
            for (j, y) in &b.coeffs {
                out.add_coeff(i + j, &(x * y));
            }
        }
        out.convert(self.basis)
    }

    /// The same polynomial re-expressed in `target`.
    pub fn convert(&self, target: Basis) -> Self {
        if self.basis == target {
            return self.clone();
        }
        let power = self.to_power();
        match target {
            Basis::Power => power,
            Basis::S => peel(&power, Basis::S),
            Basis::T => peel(&power, Basis::T),
        }
    }

    fn to_power(&self) -> Self {
        if self.basis == Basis::Power {
            return self.clone();
        }
        let mut out = Self::zero(Basis::Power);
        for (k, c) in &self.coeffs {
            let b = match (self.basis, *k) {
                (Basis::T, 0) => Self::basis_element(Basis::Power, 0),
                (Basis::T, k) => t_poly(k as i64),
                (Basis::S, k) => s_poly(k as i64),
                (Basis::Power, _) => unreachable!(),
            };
            for (j, v) in &b.coeffs {
                out.add_coeff(*j, &(v * c));
            }
        }
        out
    }
}

/// Repeatedly strips the top-degree term using monic basis polynomials.
fn peel(power: &PolyX, target: Basis) -> PolyX {
    let mut rest = power.clone();
    let mut out = PolyX::zero(target);
    while let Some(d) = rest.degree() {
        let c = rest.coeff(d);
        out.add_coeff(d, &c);
        let b = match (target, d) {
            (Basis::T, 0) => PolyX::basis_element(Basis::Power, 0),
            (Basis::T, _) => t_poly(d as i64),
            (Basis::S, _) => s_poly(d as i64),
            (Basis::Power, _) => unreachable!(),
        };
        for (j, v) in &b.coeffs {
            rest.add_coeff(*j, &-(v * &c));
        }
    }
    out
}

impl fmt::Debug for PolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyX[{}]{{", self.basis.name())?;
        for (i, (k, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}: {c}")?;
        }
        f.write_str("}")
    }
}

/// Integer coefficient vector (lowest degree first) of `F_n` for `n >= 0`.
fn recurrence(f0: Vec<Rational>, f1: Vec<Rational>, n: usize) -> Vec<Rational> {
    if n == 0 {
        return f0;
    }
    let (mut prev, mut cur) = (f0, f1);
    for _ in 1..n {
        let mut next = vec![Rational::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

fn dense_to_poly(v: Vec<Rational>) -> PolyX {
    PolyX::from_coeffs(
        Basis::Power,
        v.into_iter()
            .enumerate()
            .map(|(i, c)| (i, LaurentT::constant(c))),
    )
}

/// `T_n` in the power basis, for any integer `n`.
pub fn t_poly(n: i64) -> PolyX {
    let n = n.unsigned_abs() as usize;
    dense_to_poly(recurrence(vec![int(2)], vec![int(0), int(1)], n))
}

/// `S_n` in the power basis, for any integer `n`.
pub fn s_poly(n: i64) -> PolyX {
    let (idx, sign) = match s_norm(n) {
        None => return PolyX::zero(Basis::Power),
        Some(v) => v,
    };
    let p = dense_to_poly(recurrence(vec![int(1)], vec![int(0), int(1)], idx));
    if sign < 0 {
        p.scale(&LaurentT::from_int(-1))
    } else {
        p
    }
}

/// `S_n = sign · S_idx` with `idx >= 0`; `None` for `S_{-1} = 0`.
pub fn s_norm(n: i64) -> Option<(usize, i64)> {
    match n {
        n if n >= 0 => Some((n as usize, 1)),
        -1 => None,
        n => Some(((-n - 2) as usize, -1)),
    }
}

/// Rewrites the formal term `c·S_n` with a nonnegative index.
pub fn s_index_normalize<C: Coeff>(n: i64, c: C) -> Vec<(usize, C)> {
    match s_norm(n) {
        None => Vec::new(),
        Some((i, 1)) => vec![(i, c)],
        Some((i, _)) => vec![(i, c.negate())],
    }
}

/// `T_q · S_n = S_{n+q} + S_{n-q}` (formal indices), as signed `S` terms.
pub fn t_times_s(q: i64, n: i64) -> Vec<(usize, i64)> {
    if q == 0 {
        return s_norm(n).map(|(i, s)| vec![(i, 2 * s)]).unwrap_or_default();
    }
    [n + q, n - q].into_iter().filter_map(s_norm).collect()
}

/// `S_a · S_b = sum_{k=0}^{min(a,b)} S_{a+b-2k}` for `a, b >= 0`.
pub fn s_times_s(a: usize, b: usize) -> Vec<usize> {
    (0..=a.min(b)).map(|k| a + b - 2 * k).collect()
}

/// Expansion `S_n = T_n + T_{n-2} + ...` ending in the constant 1 when `n`
/// is even. Returns `(k, sign)` pairs where `k = 0` means the constant 1.
pub fn s_in_t_basis(n: i64) -> Vec<(usize, i64)> {
    let Some((idx, sign)) = s_norm(n) else {
        return Vec::new();
    };
    (0..=idx / 2).map(|j| (idx - 2 * j, sign)).collect()
}


#[cfg(test)]
mod tests {
    use super::*;

    fn power(coeffs: &[i64]) -> PolyX {
        PolyX::from_coeffs(
            Basis::Power,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i, LaurentT::from_int(*c))),
        )
    }

    fn in_basis(basis: Basis, pairs: &[(usize, i64)]) -> PolyX {
        PolyX::from_coeffs(basis, pairs.iter().map(|&(k, c)| (k, LaurentT::from_int(c))))
    }

    #[test]
    fn t_examples() {
        assert_eq!(t_poly(0), power(&[2]));
        assert_eq!(t_poly(2), power(&[-2, 0, 1]));
        assert_eq!(t_poly(-3), power(&[0, -3, 0, 1]));
    }

    #[test]
    fn s_examples() {
        assert_eq!(s_poly(2), power(&[-1, 0, 1]));
        assert!(s_poly(-1).is_zero());
        assert_eq!(s_poly(-4), power(&[1, 0, -1]));
    }

    #[test]
    fn recurrence_both_families() {
        let x = power(&[0, 1]);
        for n in -20..=20 {
            for fam in [t_poly as fn(i64) -> PolyX, s_poly] {
                let lhs = fam(n + 1);
                let rhs = x.mul(&fam(n)).add(&fam(n - 1).scale(&LaurentT::from_int(-1)));
                assert_eq!(lhs, rhs, "n = {n}");
            }
        }
    }

    #[test]
    fn convert_examples() {
        assert_eq!(power(&[0, 0, 1]).convert(Basis::S), in_basis(Basis::S, &[(2, 1), (0, 1)]));
        assert_eq!(
            in_basis(Basis::T, &[(5, 1)]).convert(Basis::S),
            in_basis(Basis::S, &[(5, 1), (3, -1)])
        );
        assert_eq!(
            in_basis(Basis::S, &[(4, 1)]).convert(Basis::T),
            in_basis(Basis::T, &[(4, 1), (2, 1), (0, 1)])
        );
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            s_index_normalize(-2, LaurentT::one()),
            vec![(0, LaurentT::from_int(-1))]
        );
        assert!(s_index_normalize(-1, LaurentT::t_pow(5)).is_empty());
        assert_eq!(s_index_normalize(3, LaurentT::one()), vec![(3, LaurentT::one())]);
    }

    #[test]
    fn x_times_s() {
        for n in -10..=10i64 {
            let lhs = t_poly(1).mul(&s_poly(n));
            let rhs = s_poly(n + 1).add(&s_poly(n - 1));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn product_tables_match_power_basis() {
        for q in -6..=6i64 {
            for n in -6..=8i64 {
                let mut rhs = PolyX::zero(Basis::Power);
                for (i, s) in t_times_s(q, n) {
                    rhs = rhs.add(&s_poly(i as i64).scale(&LaurentT::from_int(s)));
                }
                assert_eq!(t_poly(q).mul(&s_poly(n)), rhs, "T_{q} S_{n}");
            }
        }
        for a in 0..6 {
            for b in 0..6 {
                let mut rhs = PolyX::zero(Basis::Power);
                for i in s_times_s(a, b) {
                    rhs = rhs.add(&s_poly(i as i64));
                }
                assert_eq!(s_poly(a as i64).mul(&s_poly(b as i64)), rhs);
            }
        }
    }

    #[test]
    fn s_expansion_in_t() {
        for n in -8..=8i64 {
            let mut p = PolyX::zero(Basis::T);
            for (k, s) in s_in_t_basis(n) {
                p.add_coeff(k, &LaurentT::from_int(s));
            }
            assert_eq!(p.convert(Basis::Power), s_poly(n), "S_{n}");
        }
    }
}
