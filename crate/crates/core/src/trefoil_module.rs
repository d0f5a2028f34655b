//! The skein module of a trefoil complement in the basis `S_n(x)`,
//! `S_n(x) y`, the map `π` from the boundary torus, and the action of the
//! torus algebra.
//!
//! The recursive evaluator is the reference implementation. It is seeded by
//! `π((1,q)_T)` and `(1,q)_T · y`, and higher rows come from
//! `(1,0)_T * (p,q)_T = t^q (p+1,q)_T + t^{-q} (p-1,q)_T`. Right-handed
//! values are mirrors of left-handed ones.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::chebyshev::{s_norm, t_times_s, Basis, PolyX};
use crate::exactcoeff::{Coeff, CoeffError, LaurentT, RatFuncT, Rational};
use crate::torus_skein::{canonicalize, jw_to_t, Canonical, TorusLabel, TorusSkein};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chirality {
    Left,
    Right,
}

impl Chirality {
    pub const BOTH: [Chirality; 2] = [Chirality::Left, Chirality::Right];

    pub fn name(self) -> &'static str {
        match self {
            Chirality::Left => "left",
            Chirality::Right => "right",
        }
    }
}

impl std::str::FromStr for Chirality {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "left" => Ok(Chirality::Left),
            "right" => Ok(Chirality::Right),
            _ => Err(format!("unknown chirality '{s}' (expected left or right)")),
        }
    }
}

/// `Σ s_n S_n(x) + Σ sy_n S_n(x) y`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleElt<C: Coeff = LaurentT> {
    s: BTreeMap<usize, C>,
    sy: BTreeMap<usize, C>,
}

impl<C: Coeff> Default for ModuleElt<C> {
    fn default() -> Self {
        Self::zero()
    }
}

fn bump<C: Coeff>(map: &mut BTreeMap<usize, C>, n: usize, c: &C) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&n) {
        Some(v) => {
            *v = v.plus(c);
            if v.is_zero() {
                map.remove(&n);
            }
        }
        None => {
            map.insert(n, c.clone());
        }
    }
}

impl<C: Coeff> ModuleElt<C> {
    pub fn zero() -> Self {
        Self {
            s: BTreeMap::new(),
            sy: BTreeMap::new(),
        }
    }

    /// The empty skein `S_0(x)`.
    pub fn one() -> Self {
        let mut r = Self::zero();
        r.add_s(0, &C::one());
        r
    }

    pub fn y() -> Self {
        let mut r = Self::zero();
        r.add_sy(0, &C::one());
        r
    }

    pub fn s_part(&self) -> impl DoubleEndedIterator<Item = (usize, &C)> {
        self.s.iter().map(|(k, v)| (*k, v))
    }

    pub fn sy_part(&self) -> impl DoubleEndedIterator<Item = (usize, &C)> {
        self.sy.iter().map(|(k, v)| (*k, v))
    }

    pub fn s_coeff(&self, n: usize) -> C {
        self.s.get(&n).cloned().unwrap_or_else(C::zero)
    }

    pub fn sy_coeff(&self, n: usize) -> C {
        self.sy.get(&n).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_empty() && self.sy.is_empty()
    }

    pub fn len(&self) -> usize {
        self.s.len() + self.sy.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn add_s(&mut self, n: usize, c: &C) {
        bump(&mut self.s, n, c);
    }

    pub fn add_sy(&mut self, n: usize, c: &C) {
        bump(&mut self.sy, n, c);
    }

    /// Adds `c S_n` (or `c S_n y`) for a formal index `n`, folding negatives.
    pub fn add_formal(&mut self, with_y: bool, n: i64, c: &C) {
        let Some((i, sign)) = s_norm(n) else { return };
        let c = if sign < 0 { c.negate() } else { c.clone() };
        if with_y {
            self.add_sy(i, &c);
        } else {
            self.add_s(i, &c);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (n, c) in &o.s {
            self.add_s(*n, c);
        }
        for (n, c) in &o.sy {
            self.add_sy(*n, c);
        }
    }

    pub fn add_scaled(&mut self, o: &Self, k: &C) {
        if k.is_zero() {
            return;
        }
        for (n, c) in &o.s {
            self.add_s(*n, &c.times(k));
        }
        for (n, c) in &o.sy {
            self.add_sy(*n, &c.times(k));
        }
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

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> ModuleElt<D> {
        let mut r = ModuleElt::zero();
        for (n, c) in &self.s {
            r.add_s(*n, &f(c));
        }
        for (n, c) in &self.sy {
            r.add_sy(*n, &f(c));
        }
        r
    }

    /// `t -> t^-1` on every coefficient; the basis is fixed.
    pub fn mirror(&self) -> Self {
        self.map_coeffs(|c| c.mirror())
    }

    /// Largest `S` index present, or 0.
    pub fn max_index(&self) -> usize {
        let a = self.s.keys().next_back().copied().unwrap_or(0);
        let b = self.sy.keys().next_back().copied().unwrap_or(0);
        a.max(b)
    }
}

impl ModuleElt<LaurentT> {
    /// `a(x) + b(x) y` from two one-variable polynomials.
    pub fn from_polys(a: &PolyX, b: &PolyX) -> Self {
        let mut r = Self::zero();
        for (n, c) in a.convert(Basis::S).coeffs() {
            r.add_s(n, c);
        }
        for (n, c) in b.convert(Basis::S).coeffs() {
            r.add_sy(n, c);
        }
        r
    }

    pub fn specialize(&self, t0: &Rational) -> Result<Self, CoeffError> {
        let mut r = Self::zero();
        for (n, c) in &self.s {
            r.add_s(*n, &LaurentT::constant(c.specialize(t0)?));
        }
        for (n, c) in &self.sy {
            r.add_sy(*n, &LaurentT::constant(c.specialize(t0)?));
        }
        Ok(r)
    }
}

fn tp(k: i64) -> LaurentT {
    LaurentT::t_pow(k)
}

/// `π((1,q)_T) = t^{q+6}S_{q+6} - t^{q+2}S_q + t^{q+4}S_{q+4}y - t^q S_q y`.
fn pi_row_one(q: i64) -> ModuleElt {
    let mut r = ModuleElt::zero();
    r.add_formal(false, q + 6, &tp(q + 6));
    r.add_formal(false, q, &-tp(q + 2));
    r.add_formal(true, q + 4, &tp(q + 4));
    r.add_formal(true, q, &-tp(q));
    r
}

/// `(1,q)_T · y = t^q S_{q-2} - t^{q+8}S_{q+6} + t^{q-2}S_{q-2}y - t^{q+6}S_{q+4}y`.
fn act_y_row_one(q: i64) -> ModuleElt {
    let mut r = ModuleElt::zero();
    r.add_formal(false, q - 2, &tp(q));
    r.add_formal(false, q + 6, &-tp(q + 8));
    r.add_formal(true, q - 2, &tp(q - 2));
    r.add_formal(true, q + 4, &-tp(q + 6));
    r
}

type Key = (i64, i64, bool, usize);

fn cache() -> &'static RwLock<HashMap<Key, Arc<ModuleElt>>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, Arc<ModuleElt>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Left-handed action of `(p,q)_T` on `S_n(x)` or `S_n(x) y`.
fn act_basis(label: TorusLabel, with_y: bool, n: usize) -> Arc<ModuleElt> {
    let key = (label.p, label.q, with_y, n);
    if let Some(v) = cache().read().unwrap().get(&key) {
        return v.clone();
    }
    let v = Arc::new(compute_basis(label, with_y, n));
    cache().write().unwrap().entry(key).or_insert(v).clone()
}

fn compute_basis(label: TorusLabel, with_y: bool, n: usize) -> ModuleElt {
    let TorusLabel { p, q } = label;
    let mut r = ModuleElt::zero();
    match p {
        0 => {
            // x acts by multiplication, so (0,q)_T acts as T_q(x)
            for (i, s) in t_times_s(q, n as i64) {
                let c = LaurentT::from_int(s);
                if with_y {
                    r.add_sy(i, &c);
                } else {
                    r.add_s(i, &c);
                }
            }
        }
        1 => {
            // S_n(x) v = (0,n)_JW v, then expand (1,q)_T * (0,n)_JW in row one
            let jw = jw_to_t(0, n as i64);
            let mut row: BTreeMap<i64, LaurentT> = BTreeMap::new();
            let mut push = |j: i64, c: LaurentT| {
                let e = row.entry(j).or_default();
                *e += &c;
            };
            if !jw.unit_coeff().is_zero() {
                push(q, jw.unit_coeff().clone());
            }
            for (l, c) in jw.terms() {
                push(q + l.q, c * &tp(l.q));
                push(q - l.q, c * &tp(-l.q));
            }
            for (j, c) in row {
                let base = if with_y { act_y_row_one(j) } else { pi_row_one(j) };
                r.add_scaled(&base, &c);
            }
        }
        _ => {
            // (p,q)_T = t^{-q} [(1,0)_T * (p-1,q)_T - t^{-q} (p-2,q)_T]
            let upper = act_basis(TorusLabel { p: p - 1, q }, with_y, n);
            let shifted = act_left_laurent_label(TorusLabel { p: 1, q: 0 }, &upper);
            let lower = act_left_curve(p - 2, q, with_y, n);
            r.add_scaled(&shifted, &tp(-q));
            r.add_scaled(&lower, &-tp(-2 * q));
        }
    }
    r
}

fn act_left_curve(p: i64, q: i64, with_y: bool, n: usize) -> ModuleElt {
    let mut basis = ModuleElt::zero();
    if with_y {
        basis.add_sy(n, &LaurentT::one());
    } else {
        basis.add_s(n, &LaurentT::one());
    }
    match canonicalize(p, q) {
        (Canonical::Unit, two) => basis.scale(&two),
        (Canonical::Label(l), _) => (*act_basis(l, with_y, n)).clone(),
    }
}

fn act_left_laurent_label(label: TorusLabel, v: &ModuleElt) -> ModuleElt {
    let mut r = ModuleElt::zero();
    for (n, c) in v.s_part() {
        r.add_scaled(&act_basis(label, false, n), c);
    }
    for (n, c) in v.sy_part() {
        r.add_scaled(&act_basis(label, true, n), c);
    }
    r
}

fn lift<C: Coeff>(e: &ModuleElt) -> ModuleElt<C> {
    e.map_coeffs(|c| C::from_laurent(c.clone()))
}

fn act_left<C: Coeff>(u: &TorusSkein<C>, v: &ModuleElt<C>) -> ModuleElt<C> {
    let mut r = v.scale(u.unit_coeff());
    for (label, cu) in u.terms() {
        for (with_y, part) in [(false, &v.s), (true, &v.sy)] {
            for (n, cv) in part {
                let b: ModuleElt<C> = lift(&act_basis(label, with_y, *n));
                r.add_scaled(&b, &cu.times(cv));
            }
        }
    }
    r
}

/// Action of the torus algebra: `u · v`.
pub fn act<C: Coeff>(u: &TorusSkein<C>, v: &ModuleElt<C>, c: Chirality) -> ModuleElt<C> {
    match c {
        Chirality::Left => act_left(u, v),
        Chirality::Right => act_left(&u.mirror(), &v.mirror()).mirror(),
    }
}

/// The peripheral map `π(u) = u · 1`.
pub fn pi<C: Coeff>(u: &TorusSkein<C>, c: Chirality) -> ModuleElt<C> {
    act(u, &ModuleElt::one(), c)
}

/// Clears the evaluator's memo table.
pub fn clear_cache() {
    cache().write().unwrap().clear();
}

fn floor_half(k: i64) -> i64 {
    k.div_euclid(2)
}

fn sign(k: i64) -> LaurentT {
    LaurentT::from_int(if k.rem_euclid(2) == 0 { 1 } else { -1 })
}

fn eps(k: i64) -> i64 {
    k.rem_euclid(2)
}

/// `n_k (6 n_k + 2 - 4 ε_k)` with `n_k = [(k+1)/2]`: 4, 8, 20, 28, 48, 60, ...
fn drop_exp(k: i64) -> i64 {
    let n = floor_half(k + 1);
    n * (6 * n + 2 - 4 * eps(k))
}

/// Closed form for `π((p,q)_T)`, `p >= 1`.
///
/// The exponents `6p² - n_k(6n_k + 2 - 4ε_k) + pq` and indices
/// `q + 6p - 3k - ε_k - 2` agree with the recursive evaluator; see
/// [`pi_closed_as_printed`] for the published variant.
pub fn pi_closed(p: i64, q: i64, c: Chirality) -> ModuleElt {
    assert!(p >= 1, "closed forms need p >= 1");
    let mut r = ModuleElt::zero();
    match c {
        Chirality::Left => {
            let top = 6 * p * p + p * q;
            r.add_formal(false, q + 6 * p, &tp(top));
            r.add_formal(true, q + 6 * p - 2, &tp(top - 2));
            for k in 1..=2 * p - 1 {
                let s = sign(floor_half(k + 1));
                let e = top - drop_exp(k);
                let idx = q + 6 * p - 3 * k - eps(k) - 2;
                r.add_formal(false, idx, &(&s * &tp(e)));
                r.add_formal(true, idx, &(&s * &tp(e - 2)));
            }
        }
        Chirality::Right => {
            let top = -6 * p * p + p * q;
            r.add_formal(false, -q + 6 * p, &tp(top));
            r.add_formal(true, -q + 6 * p - 2, &tp(top + 2));
            for k in 1..=2 * p - 1 {
                let s = sign(floor_half(k + 1));
                let e = top + drop_exp(k);
                let idx = -q + 6 * p - 3 * k - eps(k) - 2;
                r.add_formal(false, idx, &(&s * &tp(e)));
                r.add_formal(true, idx, &(&s * &tp(e + 2)));
            }
        }
    }
    r
}

/// Closed form for `(p,q)_T · y`, `p >= 1`.
pub fn act_y_closed(p: i64, q: i64, c: Chirality) -> ModuleElt {
    assert!(p >= 1, "closed forms need p >= 1");
    let mut r = ModuleElt::zero();
    let last = sign(p - 1);
    match c {
        Chirality::Left => {
            let top = 6 * p * p + p * q;
            r.add_formal(false, q + 6 * p, &-tp(top + 2));
            r.add_formal(true, q + 6 * p - 2, &-tp(top));
            for k in 1..=2 * p - 2 {
                let s = sign(floor_half(k - 1));
                let e = top - drop_exp(k);
                let idx = q + 6 * p - 3 * k - eps(k) - 2;
                r.add_formal(false, idx, &(&s * &tp(e + 2)));
                r.add_formal(true, idx, &(&s * &tp(e)));
            }
            let e = p * q - 2 * p;
            r.add_formal(false, q - 2, &(&last * &tp(e + 2)));
            r.add_formal(true, q - 2, &(&last * &tp(e)));
        }
        Chirality::Right => {
            let top = -6 * p * p + p * q;
            r.add_formal(false, -q + 6 * p, &-tp(top - 2));
            r.add_formal(true, -q + 6 * p - 2, &-tp(top));
            for k in 1..=2 * p - 2 {
                let s = sign(floor_half(k - 1));
                let e = top + drop_exp(k);
                let idx = -q + 6 * p - 3 * k - eps(k) - 2;
                r.add_formal(false, idx, &(&s * &tp(e - 2)));
                r.add_formal(true, idx, &(&s * &tp(e)));
            }
            let e = p * q + 2 * p;
            r.add_formal(false, -q - 2, &(&last * &tp(e - 2)));
            r.add_formal(true, -q - 2, &(&last * &tp(e)));
        }
    }
    r
}

/// `([k/2]+1)(6[k/2] + 4ε_k)` as printed.
fn printed_drop(k: i64) -> i64 {
    let h = floor_half(k);
    (h + 1) * (6 * h + 4 * eps(k))
}

/// The closed form for `π((p,q)_T)` exactly as published (index
/// `q + 6p - 3k + ε_k - 2`). Kept for reporting; it disagrees with
/// the evaluator already at `p = 1`.
pub fn pi_closed_as_printed(p: i64, q: i64, c: Chirality) -> ModuleElt {
    let mut r = ModuleElt::zero();
    let (sq, dir) = match c {
        Chirality::Left => (q, 1),
        Chirality::Right => (-q, -1),
    };
    let top = dir * 6 * p * p + p * q;
    r.add_formal(false, sq + 6 * p, &tp(top));
    r.add_formal(true, sq + 6 * p - 2, &tp(top - 2 * dir));
    for k in 1..=2 * p - 1 {
        let s = sign(floor_half(k + 1));
        let e = top - dir * printed_drop(k);
        let idx = sq + 6 * p - 3 * k + eps(k) - 2;
        r.add_formal(false, idx, &(&s * &tp(e)));
        r.add_formal(true, idx, &(&s * &tp(e - 2 * dir)));
    }
    r
}

/// The closed form for `(p,q)_T · y` as published, with `(t^{-2}2+y)` read
/// as `(t^{-2}+y)`.
pub fn act_y_closed_as_printed(p: i64, q: i64, c: Chirality) -> ModuleElt {
    let mut r = ModuleElt::zero();
    let (sq, dir) = match c {
        Chirality::Left => (q, 1),
        Chirality::Right => (-q, -1),
    };
    let top = dir * 6 * p * p + p * q;
    r.add_formal(false, sq + 6 * p, &-tp(top + 2));
    r.add_formal(true, sq + 6 * p - 2, &-tp(top));
    for k in 1..=2 * p - 2 {
        let s = sign(floor_half(k - 1));
        let e = top - dir * printed_drop(k);
        let idx = sq + 6 * p - 3 * k + eps(k) - 2;
        r.add_formal(false, idx, &(&s * &tp(e + 2 * dir)));
        r.add_formal(true, idx, &(&s * &tp(e)));
    }
    let last = sign(p - 1);
    let e = -2 * q + p * q;
    r.add_formal(false, sq, &(&last * &tp(e + 2 * dir)));
    r.add_formal(true, sq, &(&last * &tp(e)));
    r
}

/// Boundary element `u` with `π(u) = (t^4 - t^{-4}) y` (left), or its mirror.
pub fn peripheral_y(c: Chirality) -> TorusSkein {
    let u = TorusSkein::curve(1, -4, tp(4))
        .add(&TorusSkein::curve(1, -2, -tp(-2)))
        .add(&TorusSkein::curve(0, 4, tp(2)))
        .add(&TorusSkein::curve(0, 2, -tp(6)))
        .add(&TorusSkein::scalar(&tp(-2) - &tp(6)));
    match c {
        Chirality::Left => u,
        Chirality::Right => u.mirror(),
    }
}

/// The scalar `D` with `π(peripheral_y(c)) = D y`.
pub fn peripheral_divisor(c: Chirality) -> LaurentT {
    let d = &tp(4) - &tp(-4);
    match c {
        Chirality::Left => d,
        Chirality::Right => d.mirror(),
    }
}

/// `D^{-(k-1)} · (peripheral_y)^{k-1} · y`, computed over `Q(t)`.
pub fn y_power_check(k: u32, c: Chirality) -> Result<ModuleElt<RatFuncT>, CoeffError> {
    let inv = RatFuncT::from(peripheral_divisor(c)).recip()?;
    let u = peripheral_y(c).to_ratfunc();
    let mut w = ModuleElt::<RatFuncT>::y();
    for _ in 1..k.max(1) {
        w = act(&u, &w, c).scale(&inv);
    }
    Ok(w)
}

/// The same computation with `t` specialized; fails at roots of `D`.
pub fn y_power_check_at(k: u32, c: Chirality, t0: &Rational) -> Result<ModuleElt<RatFuncT>, CoeffError> {
    let d = peripheral_divisor(c).specialize(t0)?;
    if d == Rational::from_integer(0.into()) {
        return Err(CoeffError::Pole);
    }
    let w = y_power_check(k, c)?;
    let mut r = ModuleElt::zero();
    for (n, v) in w.s_part() {
        r.add_s(n, &RatFuncT::from(LaurentT::constant(v.specialize(t0)?)));
    }
    for (n, v) in w.sy_part() {
        r.add_sy(n, &RatFuncT::from(LaurentT::constant(v.specialize(t0)?)));
    }
    Ok(r)
}

/// `y^2 = -t^2 S_2 y - t^4 S_2 + S_0` (left), mirrored for right.
pub fn y_squared_expected(c: Chirality) -> ModuleElt {
    let mut r = ModuleElt::zero();
    r.add_sy(2, &-tp(2));
    r.add_s(2, &-tp(4));
    r.add_s(0, &LaurentT::one());
    match c {
        Chirality::Left => r,
        Chirality::Right => r.mirror(),
    }
}

/// `y^3 = t^4 S_4 y + 2 S_0 y + t^6 S_4 + t^10 S_0` (left), mirrored for right.
pub fn y_cubed_expected(c: Chirality) -> ModuleElt {
    let mut r = ModuleElt::zero();
    r.add_sy(4, &tp(4));
    r.add_sy(0, &LaurentT::from_int(2));
    r.add_s(4, &tp(6));
    r.add_s(0, &tp(10));
    match c {
        Chirality::Left => r,
        Chirality::Right => r.mirror(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let l = Chirality::Left;
        let mut x = ModuleElt::zero();
        x.add_s(1, &LaurentT::one());
        assert_eq!(pi(&TorusSkein::t(0, 1), l), x);

        let mut e = ModuleElt::zero();
        e.add_s(6, &tp(6));
        e.add_s(0, &-tp(2));
        e.add_sy(4, &tp(4));
        e.add_sy(0, &-LaurentT::one());
        assert_eq!(pi(&TorusSkein::t(1, 0), l), e);

        let mut e = ModuleElt::zero();
        e.add_s(5, &tp(5));
        e.add_sy(3, &tp(3));
        assert_eq!(pi(&TorusSkein::t(1, -1), l), e);
    }

    #[test]
    fn action_on_y() {
        let l = Chirality::Left;
        let y = ModuleElt::y();
        let mut e = ModuleElt::zero();
        e.add_s(0, &-LaurentT::one());
        e.add_s(6, &-tp(8));
        e.add_sy(0, &-tp(-2));
        e.add_sy(4, &-tp(6));
        assert_eq!(act(&TorusSkein::t(1, 0), &y, l), e);

        let mut e = ModuleElt::zero();
        e.add_sy(1, &LaurentT::one());
        assert_eq!(act(&TorusSkein::t(0, 1), &y, l), e);

        let mut e = ModuleElt::zero();
        e.add_s(5, &-tp(-5));
        e.add_s(1, &-tp(3));
        e.add_sy(5, &-tp(-7));
        assert_eq!(act(&TorusSkein::t(1, -5), &y, l), e);
    }

    #[test]
    fn peripheral_y_division() {
        for c in Chirality::BOTH {
            let y = ModuleElt::<LaurentT>::y().scale(&peripheral_divisor(c));
            assert_eq!(pi(&peripheral_y(c), c), y);
        }
    }

    #[test]
    fn closed_forms_row_one() {
        for c in Chirality::BOTH {
            for q in -8..=8 {
                assert_eq!(pi_closed(1, q, c), pi(&TorusSkein::t(1, q), c), "{c:?} {q}");
                assert_eq!(
                    act_y_closed(1, q, c),
                    act(&TorusSkein::t(1, q), &ModuleElt::y(), c),
                    "{c:?} {q}"
                );
            }
        }
    }

    #[test]
    fn printed_form_differs_at_row_one() {
        assert_ne!(
            pi_closed_as_printed(1, 0, Chirality::Left),
            pi(&TorusSkein::t(1, 0), Chirality::Left)
        );
    }
}
