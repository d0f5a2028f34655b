use proptest::prelude::*;

use crate::chebyshev::{s_norm, s_poly, t_poly, Basis, PolyX};
use crate::exactcoeff::{int, nullspace, rational, solve_linear, LaurentT, LinearSolution, Matrix, RatFuncT, Rational};
use crate::ideal_lab::{
    kernel_basis, skein_membership, t_minus1_factors, tau, theorem2_gens, CommPoly,
};
use crate::quantum_torus::{clear_to_plane, e_monomial, embed, monomial_inverse, QTorusPoly};
use crate::syntax::{format_value, parse_as, Value};
use crate::torus_skein::{canonicalize, poly_of_meridian, Canonical, TorusSkein};
use crate::trefoil_module::{act, pi, Chirality, ModuleElt};

fn laurent() -> impl Strategy<Value = LaurentT> {
    prop::collection::vec((-6i64..=6, -5i64..=5, 1i64..=3), 0..4).prop_map(|v| {
        let mut l = LaurentT::zero();
        for (e, n, d) in v {
            l.add_term(e, rational(n, d));
        }
        l
    })
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentT> {
    laurent().prop_filter("nonzero", |l| !l.is_zero())
}

fn skein(pmax: i64, qmax: i64) -> impl Strategy<Value = TorusSkein> {
    (laurent(), prop::collection::vec((0..=pmax, -qmax..=qmax, laurent()), 0..4)).prop_map(|(u, v)| {
        let mut s = TorusSkein::scalar(u);
        for (p, q, c) in v {
            s.add_curve(p, q, &c);
        }
        s
    })
}

fn torus(e: i64) -> impl Strategy<Value = QTorusPoly> {
    prop::collection::vec((-e..=e, -e..=e, laurent()), 0..5).prop_map(|v| {
        let mut f = QTorusPoly::zero();
        for (a, b, c) in v {
            f.add_term(a, b, &c);
        }
        f
    })
}

fn module(nmax: usize) -> impl Strategy<Value = ModuleElt> {
    prop::collection::vec((any::<bool>(), 0..=nmax, laurent()), 0..5).prop_map(|v| {
        let mut m = ModuleElt::zero();
        for (y, n, c) in v {
            if y {
                m.add_sy(n, &c);
            } else {
                m.add_s(n, &c);
            }
        }
        m
    })
}

fn power_poly() -> impl Strategy<Value = PolyX> {
    prop::collection::vec((0usize..=12, laurent()), 0..6).prop_map(|v| PolyX::from_coeffs(Basis::Power, v))
}

fn t_value() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| rational(n, d))
}

fn chirality() -> impl Strategy<Value = Chirality> {
    prop_oneof![Just(Chirality::Left), Just(Chirality::Right)]
}

fn sq(x: &LaurentT, y: &LaurentT) -> LaurentT {
    x.clone() * y.clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(sq(&sq(&a, &b), &c), sq(&a, &sq(&b, &c)));
        prop_assert_eq!(sq(&a, &(b.clone() + c.clone())), sq(&a, &b) + sq(&a, &c));
        prop_assert_eq!(sq(&a, &b), sq(&b, &a));
    }

    #[test]
    fn specialize_is_ring_map(a in laurent(), b in laurent(), t0 in t_value()) {
        let ab = sq(&a, &b).specialize(&t0).unwrap();
        prop_assert_eq!(ab, a.specialize(&t0).unwrap() * b.specialize(&t0).unwrap());
        let s = (a.clone() + b.clone()).specialize(&t0).unwrap();
        prop_assert_eq!(s, a.specialize(&t0).unwrap() + b.specialize(&t0).unwrap());
    }

    #[test]
    fn ratfunc_normal_form_idempotent(n in laurent(), d in nonzero_laurent()) {
        let r = RatFuncT::new(n, d).unwrap();
        prop_assert_eq!(r.normalized(), r.normalized().normalized());
        prop_assert_eq!(&r.normalized(), &r);
    }

    #[test]
    fn solve_replays(rows in prop::collection::vec(prop::collection::vec(laurent(), 3), 2..4),
                     x in prop::collection::vec(laurent(), 3)) {
        let data: Vec<Vec<RatFuncT>> = rows.into_iter().map(|r| r.into_iter().map(RatFuncT::from).collect()).collect();
        let a = Matrix::from_rows(data).unwrap();
        let x: Vec<RatFuncT> = x.into_iter().map(RatFuncT::from).collect();
        let b = a.mul_vec(&x);
        match solve_linear(&a, Some(&b)).unwrap() {
            LinearSolution::Solution(y) => prop_assert_eq!(a.mul_vec(&y), b),
            other => prop_assert!(false, "consistent system reported {:?}", other),
        }
        for v in nullspace(&a) {
            prop_assert!(a.mul_vec(&v).iter().all(RatFuncT::is_zero));
        }
    }

    #[test]
    fn basis_conversions_round_trip(p in power_poly()) {
        prop_assert_eq!(p.convert(Basis::S).convert(Basis::Power), p.clone());
        prop_assert_eq!(p.convert(Basis::T).convert(Basis::Power), p);
    }

    #[test]
    fn chebyshev_recurrences(n in -20i64..=20) {
        let x = PolyX::basis_element(Basis::Power, 1);
        for f in [t_poly, s_poly] {
            prop_assert_eq!(f(n + 1), x.mul(&f(n)).add(&f(n - 1).scale(&LaurentT::from_int(-1))));
        }
        if (-10..=10).contains(&n) {
            let lhs = x.mul(&s_poly(n));
            prop_assert_eq!(lhs, s_poly(n + 1).add(&s_poly(n - 1)));
        }
    }

    #[test]
    fn canonicalize_idempotent(p in -8i64..=8, q in -8i64..=8) {
        if let (Canonical::Label(l), _) = canonicalize(p, q) {
            let (again, c) = canonicalize(l.p, l.q);
            prop_assert_eq!(again, Canonical::Label(l));
            prop_assert_eq!(c, LaurentT::one());
        }
    }

    #[test]
    fn skein_associative(a in skein(3, 5), b in skein(3, 5), c in skein(3, 5)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn commutation_defect(p in -4i64..=4, q in -4i64..=4, r in -4i64..=4, s in -4i64..=4) {
        let a = TorusSkein::t(p, q);
        let b = TorusSkein::t(r, s);
        let d = p * s - q * r;
        let k = LaurentT::t_pow(d) - LaurentT::t_pow(-d);
        let rhs = TorusSkein::t(p + r, q + s).sub(&TorusSkein::t(p - r, q - s)).scale(&k);
        prop_assert_eq!(a.mul(&b).sub(&b.mul(&a)), rhs);
    }

    #[test]
    fn commutative_at_plus_minus_one(a in skein(3, 4), b in skein(3, 4), sign in prop_oneof![Just(1i64), Just(-1i64)]) {
        let t0 = int(sign);
        prop_assert_eq!(a.mul(&b).specialize(&t0).unwrap(), b.mul(&a).specialize(&t0).unwrap());
    }

    #[test]
    fn meridian_polynomials_multiply(f in power_poly(), g in power_poly()) {
        prop_assert_eq!(poly_of_meridian(&f.mul(&g)), poly_of_meridian(&f).mul(&poly_of_meridian(&g)));
    }

    #[test]
    fn embed_is_ring_map(a in skein(3, 5), b in skein(3, 5)) {
        prop_assert_eq!(embed(&a.mul(&b)), embed(&a).mul(&embed(&b)));
        prop_assert_eq!(embed(&a.add(&b)), embed(&a).add(&embed(&b)));
    }

    #[test]
    fn e_monomials_multiply(p in -5i64..=5, q in -5i64..=5, r in -5i64..=5, s in -5i64..=5) {
        let lhs = e_monomial(p, q).mul(&e_monomial(r, s));
        prop_assert_eq!(lhs, e_monomial(p + r, q + s).scale_laurent(&LaurentT::t_pow(p * s - q * r)));
    }

    #[test]
    fn qtorus_associative(a in torus(3), b in torus(3), c in torus(3)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn clearing_inverts(f in torus(4)) {
        prop_assume!(!f.is_zero());
        let (g, mult) = clear_to_plane(&f).unwrap();
        let inv = monomial_inverse(&mult).unwrap();
        prop_assert_eq!(inv.mul(g.poly()), f);
    }

    #[test]
    fn parse_format_round_trip(s in skein(4, 8), f in torus(5), m in module(10)) {
        for v in [Value::Skein(s), Value::Torus(f), Value::Module(m)] {
            prop_assert_eq!(parse_as(&format_value(&v), v.family()).unwrap(), v);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn module_axiom(u in skein(3, 3), w in skein(3, 3), c in chirality(), on_y in any::<bool>()) {
        let v = if on_y { ModuleElt::y() } else { ModuleElt::one() };
        prop_assert_eq!(act(&u.mul(&w), &v, c), act(&u, &act(&w, &v, c), c));
    }

    #[test]
    fn mirror_equivariance(u in skein(3, 5)) {
        prop_assert_eq!(pi(&u, Chirality::Right), pi(&u.mirror(), Chirality::Left).mirror());
    }

    #[test]
    fn row_one_recursion_through_pi(q in -8i64..=8, c in chirality()) {
        // (1,q)*(0,1) = t (1,q+1) + t^-1 (1,q-1)
        let lhs = pi(&TorusSkein::t(1, q).mul(&TorusSkein::t(0, 1)), c);
        let rhs = pi(&TorusSkein::t(1, q + 1), c)
            .scale(&LaurentT::t_pow(1))
            .add(&pi(&TorusSkein::t(1, q - 1), c).scale(&LaurentT::t_pow(-1)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn indices_nonnegative(p in 0i64..=4, q in -12i64..=12, c in chirality()) {
        let v = act(&TorusSkein::t(p, q), &ModuleElt::y(), c);
        // indices are usize by construction; check no formal index was dropped
        prop_assert!(v.s_part().chain(v.sy_part()).all(|(n, _)| s_norm(n as i64).is_some()));
    }

    #[test]
    fn certificates_replay(k in prop::collection::vec((0i64..=3, laurent()), 1..3), c in chirality()) {
        let gens = [tau(c).to_ratfunc()];
        let mut target = TorusSkein::zero();
        for (q, coeff) in &k {
            let m = if *q == 0 { TorusSkein::unit() } else { TorusSkein::basis_curve(0, *q) };
            target = target.add(&m.mul(&gens[0]).scale(&RatFuncT::from(coeff.clone())));
        }
        let cert = skein_membership(&target, &gens, 0, 3).unwrap().unwrap();
        prop_assert!(cert.replay_skein(&gens));
    }
}

#[test]
fn generator_sets_in_kernel() {
    for c in Chirality::BOTH {
        let g = theorem2_gens(c).unwrap();
        assert!(g.skein_elements().iter().all(|s| pi(s, c).is_zero()));
        let (m1, _) = crate::ideal_lab::t_minus1_gens(c).unwrap();
        for s in m1.skein_elements() {
            assert!(pi(s, c).specialize(&int(-1)).unwrap().is_zero());
        }
    }
}

#[test]
fn kernel_monotone_and_independent() {
    for c in Chirality::BOTH {
        let small = kernel_basis(1, -8, 2, c, None).unwrap();
        let large = kernel_basis(1, -10, 4, c, None).unwrap();
        assert!(small.len() <= large.len());
        for v in small.iter().chain(&large) {
            assert!(pi(v, c).is_zero());
        }
        // each small vector lies in the span of the large basis
        for v in &small {
            let cert = skein_membership(v, &large, 0, 0).unwrap().expect("in span");
            assert!(cert.replay_skein(&large));
        }
        assert_eq!(rank(&large), large.len());
    }
}

fn rank(vs: &[TorusSkein<RatFuncT>]) -> usize {
    let mut keys: Vec<Option<crate::torus_skein::TorusLabel>> = Vec::new();
    for v in vs {
        if !v.unit_coeff().is_zero() && !keys.contains(&None) {
            keys.push(None);
        }
        for (l, _) in v.terms() {
            if !keys.contains(&Some(l)) {
                keys.push(Some(l));
            }
        }
    }
    let mut a = Matrix::zeros(keys.len(), vs.len());
    for (j, v) in vs.iter().enumerate() {
        for (i, k) in keys.iter().enumerate() {
            let x = match k {
                None => v.unit_coeff().clone(),
                Some(l) => v.coeff(*l),
            };
            a.set(i, j, x);
        }
    }
    vs.len() - nullspace(&a).len()
}

#[test]
fn a_minus1_products_commute() {
    for c in Chirality::BOTH {
        let gens: Vec<QTorusPoly> = t_minus1_factors(c).iter().map(|f| CommPoly::product(f).to_qtorus()).collect();
        let m1 = int(-1);
        let ab = gens[0].mul(&gens[1]).specialize_t(&m1).unwrap();
        let ba = gens[1].mul(&gens[0]).specialize_t(&m1).unwrap();
        assert_eq!(ab, ba);
    }
}
