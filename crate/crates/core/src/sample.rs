//! Seeded random elements for round-trip and axiom checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactcoeff::{rational, LaurentT};
use crate::quantum_torus::QTorusPoly;
use crate::torus_skein::TorusSkein;
use crate::trefoil_module::ModuleElt;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Up to `max_terms` terms with exponents in `[-e, e]`, small rational coefficients.
pub fn laurent(r: &mut impl Rng, max_terms: usize, e: i64) -> LaurentT {
    let mut out = LaurentT::zero();
    for _ in 0..r.gen_range(1..=max_terms) {
        let num = r.gen_range(-5i64..=5);
        let den = if r.gen_bool(0.2) { r.gen_range(2i64..=4) } else { 1 };
        out.add_term(r.gen_range(-e..=e), rational(num, den));
    }
    out
}

/// Curves `(p,q)` with `0 <= p <= pmax`, `|q| <= qmax`; the unit may appear.
pub fn skein(r: &mut impl Rng, pmax: i64, qmax: i64, max_terms: usize) -> TorusSkein {
    let mut s = TorusSkein::zero();
    for _ in 0..r.gen_range(1..=max_terms) {
        let c = laurent(r, 2, 6);
        if r.gen_bool(0.15) {
            s.add_unit(&c);
        } else {
            s.add_curve(r.gen_range(0..=pmax), r.gen_range(-qmax..=qmax), &c);
        }
    }
    s
}

pub fn torus(r: &mut impl Rng, e: i64, max_terms: usize) -> QTorusPoly {
    let mut f = QTorusPoly::zero();
    for _ in 0..r.gen_range(1..=max_terms) {
        f.add_term(r.gen_range(-e..=e), r.gen_range(-e..=e), &laurent(r, 2, 6));
    }
    f
}

pub fn module(r: &mut impl Rng, nmax: usize, max_terms: usize) -> ModuleElt {
    let mut m = ModuleElt::zero();
    for _ in 0..r.gen_range(1..=max_terms) {
        let n = r.gen_range(0..=nmax);
        let c = laurent(r, 2, 6);
        if r.gen_bool(0.5) {
            m.add_sy(n, &c);
        } else {
            m.add_s(n, &c);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a = skein(&mut rng(7), 3, 5, 4);
        let b = skein(&mut rng(7), 3, 5, 4);
        assert_eq!(a, b);
        assert!(a.p_degree() <= 3);
    }
}
