//! Peripheral ideal generators, truncated kernels, membership certificates,
//! noncommutative A-ideal generators and the classical recovery at `t = -1`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactcoeff::{
    int, nullspace, solve_linear, Coeff, CoeffError, LaurentT, LinearSolution, Matrix, RatFuncT,
    Rational,
};
use crate::quantum_torus::{clear_to_plane, embed, equal_up_to_unit, PlanePoly, QTorusPoly, TorusError};
use crate::torus_skein::{jw_to_t, TorusLabel, TorusSkein};
use crate::trefoil_module::{peripheral_divisor, peripheral_y, pi, Chirality, ModuleElt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("generator {index} is not in the kernel of pi: pi(g) = {residual}")]
    NotInKernel { index: usize, residual: String },
    #[error("no unit c*t^k relates the cleared image of tau to the factored generator")]
    NoUnit,
    #[error("t = {0} is an eighth root of unity; the generators need t^8 != 1")]
    EighthRoot(Rational),
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

fn tp(k: i64) -> LaurentT {
    LaurentT::t_pow(k)
}

fn lt(pairs: &[(i64, i64)]) -> LaurentT {
    LaurentT::from_int_terms(pairs)
}

fn chiral(u: TorusSkein, c: Chirality) -> TorusSkein {
    match c {
        Chirality::Left => u,
        Chirality::Right => u.mirror(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Elements {
    Skein(Vec<TorusSkein>),
    Plane(Vec<PlanePoly>),
}

/// Generators with a provenance tag each. Skein generators are checked to lie
/// in the kernel of `π` on construction, at `t_value` when given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub chirality: Chirality,
    pub elements: Elements,
    pub provenance: Vec<String>,
    /// The coefficients were specialized at this value of `t`.
    pub t_value: Option<Rational>,
    /// Valid only where `t^8 != 1` (division by `t^4 - t^-4`).
    pub needs_t8_ne_1: bool,
}

impl GeneratorSet {
    pub fn skein(
        chirality: Chirality,
        elements: Vec<TorusSkein>,
        provenance: Vec<String>,
        t_value: Option<Rational>,
        needs_t8_ne_1: bool,
    ) -> Result<Self, IdealError> {
        for (index, g) in elements.iter().enumerate() {
            let mut r = pi(g, chirality);
            if let Some(t0) = &t_value {
                r = r.specialize(t0)?;
            }
            if !r.is_zero() {
                return Err(IdealError::NotInKernel {
                    index,
                    residual: format!("{r:?}"),
                });
            }
        }
        Ok(Self {
            chirality,
            elements: Elements::Skein(elements),
            provenance,
            t_value,
            needs_t8_ne_1,
        })
    }

    pub fn plane(
        chirality: Chirality,
        elements: Vec<PlanePoly>,
        provenance: Vec<String>,
        t_value: Option<Rational>,
        needs_t8_ne_1: bool,
    ) -> Self {
        Self {
            chirality,
            elements: Elements::Plane(elements),
            provenance,
            t_value,
            needs_t8_ne_1,
        }
    }

    pub fn len(&self) -> usize {
        match &self.elements {
            Elements::Skein(v) => v.len(),
            Elements::Plane(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn skein_elements(&self) -> &[TorusSkein] {
        match &self.elements {
            Elements::Skein(v) => v,
            Elements::Plane(_) => &[],
        }
    }

    pub fn plane_elements(&self) -> &[PlanePoly] {
        match &self.elements {
            Elements::Plane(v) => v,
            Elements::Skein(_) => &[],
        }
    }

    /// Rejects `t0` with `t0^8 = 1` when the set carries the caveat.
    pub fn check_specialization(&self, t0: &Rational) -> Result<(), IdealError> {
        check_t_value(self.needs_t8_ne_1, t0)
    }
}

pub fn is_eighth_root(t0: &Rational) -> bool {
    t0.abs().is_one()
}

pub fn check_t_value(needs_t8_ne_1: bool, t0: &Rational) -> Result<(), IdealError> {
    if t0.is_zero() {
        return Err(CoeffError::ZeroSpecialization.into());
    }
    if needs_t8_ne_1 && is_eighth_root(t0) {
        return Err(IdealError::EighthRoot(t0.clone()));
    }
    Ok(())
}

/// `τ = (1,-5)_T - t^-8 (1,-1)_T + t^-3 (0,5)_T - t (0,1)_T`, mirrored for right.
pub fn tau(c: Chirality) -> TorusSkein {
    let u = TorusSkein::t(1, -5)
        .add(&TorusSkein::curve(1, -1, -tp(-8)))
        .add(&TorusSkein::curve(0, 5, tp(-3)))
        .add(&TorusSkein::curve(0, 1, -tp(1)));
    chiral(u, c)
}

fn gen2_left() -> TorusSkein {
    let s4 = lt(&[(4, 1), (-4, 1)]);
    TorusSkein::t(2, -6)
        .add(&TorusSkein::curve(1, 0, -lt(&[(6, 1), (-6, 1)])))
        .add(&TorusSkein::curve(1, -6, s4.clone()))
        .add(&TorusSkein::t(0, 6))
        .add(&TorusSkein::scalar(&s4 * &LaurentT::from_int(-2)))
}

fn gen3_left(sign_17: i64) -> TorusSkein {
    TorusSkein::t(2, -7)
        .add(&TorusSkein::curve(1, -7, LaurentT::monomial(int(sign_17), -5)))
        .add(&TorusSkein::curve(1, -3, lt(&[(-5, 1), (-1, -1)])))
        .add(&TorusSkein::curve(1, -1, -tp(5)))
        .add(&TorusSkein::curve(0, 3, lt(&[(2, 1), (-2, -1)])))
        .add(&TorusSkein::curve(0, 1, -tp(-6)))
}

/// Generators of `I_t(K)`: `τ`, the `(2,-6)` generator and the `(2,-7)`
/// generator. The last one carries `+t^-5 (1,-7)_T`; the printed `-t^-5`
/// leaves the residual `-2t^-5 π((1,-7)_T)`.
pub fn theorem2_gens(c: Chirality) -> Result<GeneratorSet, IdealError> {
    let elems = vec![tau(c), chiral(gen2_left(), c), chiral(gen3_left(1), c)];
    GeneratorSet::skein(
        c,
        elems,
        vec![
            "tau".into(),
            "(2,-6) generator".into(),
            "(2,-7) generator, (1,-7) coefficient +t^-5".into(),
        ],
        None,
        true,
    )
}

/// The three generators exactly as printed (no kernel check).
pub fn theorem2_gens_as_printed(c: Chirality) -> Vec<TorusSkein> {
    vec![tau(c), chiral(gen2_left(), c), chiral(gen3_left(-1), c)]
}

/// `φ_q = D((1,q)_T - t^{q+6}(0,q+6)_JW + t^{q+2}(0,q)_JW)
///        - (t^{q+4}(0,q+4)_JW - t^q(0,q)_JW) * u`, with `π(u) = D y`.
///
/// `(0,k)_JW` with `k < 0` uses the formal rule `S_{-n} = -S_{n-2}`.
pub fn phi(q: i64) -> TorusSkein {
    let d = peripheral_divisor(Chirality::Left);
    let first = TorusSkein::t(1, q)
        .add(&jw_to_t(0, q + 6).scale(&-tp(q + 6)))
        .add(&jw_to_t(0, q).scale(&tp(q + 2)));
    let second = jw_to_t(0, q + 4)
        .scale(&tp(q + 4))
        .sub(&jw_to_t(0, q).scale(&tp(q)));
    first.scale(&d).sub(&second.mul(&peripheral_y(Chirality::Left)))
}

/// The kernel element quoted for `q = -6`.
pub fn q_minus6_element() -> TorusSkein {
    TorusSkein::t(1, -6)
        .add(&TorusSkein::curve(1, -4, tp(-2)))
        .add(&TorusSkein::curve(1, -2, -tp(-8)))
        .add(&TorusSkein::curve(1, 0, -tp(-10)))
        .add(&TorusSkein::curve(0, 6, tp(-4)))
        .add(&TorusSkein::curve(0, 4, tp(-4)))
        .add(&TorusSkein::curve(0, 2, -LaurentT::one()))
        .add(&TorusSkein::scalar(LaurentT::from_int(-2)))
}

/// `Some(c)` when `a = c b` for a scalar `c` in `Q(t)`.
pub fn scalar_ratio(a: &TorusSkein<RatFuncT>, b: &TorusSkein<RatFuncT>) -> Option<RatFuncT> {
    if b.is_zero() {
        return a.is_zero().then(RatFuncT::zero);
    }
    let (label, cb) = match b.terms().next() {
        Some((l, c)) => (Some(l), c.clone()),
        None => (None, b.unit_coeff().clone()),
    };
    let ca = match label {
        Some(l) => a.coeff(l),
        None => a.unit_coeff().clone(),
    };
    let r = ca.div(&cb).ok()?;
    (b.scale(&r) == *a).then_some(r)
}

/// Basis labels of the truncated span: the unit, `(0,|q|)` and `(p,q)` for
/// `1 <= p <= pmax`, with `q` in `[qmin, qmax]`.
pub fn truncated_labels(pmax: i64, qmin: i64, qmax: i64) -> Vec<Option<TorusLabel>> {
    let mut zero_row = BTreeSet::new();
    let mut unit = false;
    for q in qmin..=qmax {
        if q == 0 {
            unit = true;
        } else {
            zero_row.insert(q.abs());
        }
    }
    let mut out: Vec<Option<TorusLabel>> = Vec::new();
    if unit {
        out.push(None);
    }
    out.extend(zero_row.into_iter().map(|q| Some(TorusLabel { p: 0, q })));
    for p in 1..=pmax {
        out.extend((qmin..=qmax).map(|q| Some(TorusLabel { p, q })));
    }
    out
}

fn label_skein<C: Coeff>(l: Option<TorusLabel>) -> TorusSkein<C> {
    match l {
        None => TorusSkein::unit(),
        Some(l) => TorusSkein::basis_curve(l.p, l.q),
    }
}

/// Row keys for module elements: `(false, n)` for `S_n`, `(true, n)` for `S_n y`.
fn module_rows(cols: &[ModuleElt<RatFuncT>]) -> Vec<(bool, usize)> {
    let mut keys = BTreeSet::new();
    for c in cols {
        keys.extend(c.s_part().map(|(n, _)| (false, n)));
        keys.extend(c.sy_part().map(|(n, _)| (true, n)));
    }
    keys.into_iter().collect()
}

fn module_matrix(cols: &[ModuleElt<RatFuncT>]) -> Matrix {
    let rows = module_rows(cols);
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, &(y, n)) in rows.iter().enumerate() {
            let v = if y { c.sy_coeff(n) } else { c.s_coeff(n) };
            if !v.is_zero() {
                m.set(i, j, v);
            }
        }
    }
    m
}

/// Kernel of `π` on the truncated span, over `Q(t)` (or with `t`
/// specialized). Each vector is in echelon-complement form.
pub fn kernel_basis(
    pmax: i64,
    qmin: i64,
    qmax: i64,
    c: Chirality,
    t_value: Option<&Rational>,
) -> Result<Vec<TorusSkein<RatFuncT>>, IdealError> {
    if let Some(t0) = t_value {
        check_t_value(false, t0)?;
    }
    let labels = truncated_labels(pmax, qmin, qmax);
    let mut cols = Vec::with_capacity(labels.len());
    for l in &labels {
        let mut v = pi(&label_skein::<LaurentT>(*l), c);
        if let Some(t0) = t_value {
            v = v.specialize(t0)?;
        }
        cols.push(v.map_coeffs(|x| x.to_ratfunc()));
    }
    let a = module_matrix(&cols);
    Ok(nullspace(&a)
        .into_iter()
        .map(|v| {
            let mut s = TorusSkein::zero();
            for (l, x) in labels.iter().zip(v) {
                s = s.add(&label_skein::<RatFuncT>(*l).scale(&x));
            }
            s
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Multiplier {
    Unit,
    Curve(TorusLabel),
    /// `l^a m^b`.
    Monomial(i64, i64),
}

impl fmt::Display for Multiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplier::Unit => f.write_str("1"),
            Multiplier::Curve(l) => write!(f, "T({},{})", l.p, l.q),
            Multiplier::Monomial(a, b) => write!(f, "l^{a}*m^{b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertTerm {
    pub multiplier: Multiplier,
    pub coeff: RatFuncT,
    pub gen: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Skein(TorusSkein<RatFuncT>),
    Plane(QTorusPoly<RatFuncT>),
}

/// `target = Σ coeff · (multiplier * gens[gen])`, found at `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub target: Target,
    pub combination: Vec<CertTerm>,
    pub bound: (i64, i64),
    /// Products were specialized at this `t` before solving.
    pub t_value: Option<Rational>,
}

fn multiplier_skein(m: Multiplier) -> TorusSkein<RatFuncT> {
    match m {
        Multiplier::Unit => TorusSkein::unit(),
        Multiplier::Curve(l) => TorusSkein::basis_curve(l.p, l.q),
        Multiplier::Monomial(..) => panic!("monomial multiplier in a skein certificate"),
    }
}

fn multiplier_plane(m: Multiplier) -> QTorusPoly<RatFuncT> {
    match m {
        Multiplier::Unit => QTorusPoly::one(),
        Multiplier::Monomial(a, b) => QTorusPoly::monomial(a, b, RatFuncT::one()),
        Multiplier::Curve(_) => panic!("curve multiplier in a plane certificate"),
    }
}

impl Certificate {
    pub fn replay_skein(&self, gens: &[TorusSkein<RatFuncT>]) -> bool {
        let Target::Skein(target) = &self.target else { return false };
        let mut acc = TorusSkein::zero();
        for term in &self.combination {
            let Some(g) = gens.get(term.gen) else { return false };
            acc = acc.add(&multiplier_skein(term.multiplier).mul(g).scale(&term.coeff));
        }
        match &self.t_value {
            None => acc == *target,
            Some(t0) => {
                let at = |s: &TorusSkein<RatFuncT>| -> Option<Vec<(Option<TorusLabel>, RatFuncT)>> {
                    let mut v = vec![(None, const_at(s.unit_coeff(), t0).ok()?)];
                    for (l, c) in s.terms() {
                        v.push((Some(l), const_at(c, t0).ok()?));
                    }
                    v.retain(|(_, c)| !c.is_zero());
                    Some(v)
                };
                at(&acc).is_some() && at(&acc) == at(target)
            }
        }
    }

    pub fn replay_plane(&self, gens: &[QTorusPoly<RatFuncT>]) -> bool {
        let Target::Plane(target) = &self.target else { return false };
        let mut acc = QTorusPoly::zero();
        for term in &self.combination {
            let Some(g) = gens.get(term.gen) else { return false };
            acc = acc.add(&multiplier_plane(term.multiplier).mul(g).scale(&term.coeff));
        }
        match &self.t_value {
            None => acc == *target,
            Some(t0) => {
                let at = |f: &QTorusPoly<RatFuncT>| -> Option<Vec<((i64, i64), RatFuncT)>> {
                    let mut v = Vec::new();
                    for (k, c) in f.terms() {
                        v.push((k, const_at(c, t0).ok()?));
                    }
                    v.retain(|(_, c)| !c.is_zero());
                    Some(v)
                };
                at(&acc).is_some() && at(&acc) == at(target)
            }
        }
    }
}

fn skein_rows(items: &[TorusSkein<RatFuncT>]) -> Vec<Option<TorusLabel>> {
    let mut keys = BTreeSet::new();
    for s in items {
        if !s.unit_coeff().is_zero() {
            keys.insert(None);
        }
        keys.extend(s.terms().map(|(l, _)| Some(l)));
    }
    keys.into_iter().collect()
}

fn skein_entry(s: &TorusSkein<RatFuncT>, key: Option<TorusLabel>) -> RatFuncT {
    match key {
        None => s.unit_coeff().clone(),
        Some(l) => s.coeff(l),
    }
}

fn const_at(c: &RatFuncT, t0: &Rational) -> Result<RatFuncT, CoeffError> {
    Ok(RatFuncT::from(LaurentT::constant(c.specialize(t0)?)))
}

fn specialize_cols<K: Copy>(
    cols: Vec<Vec<(K, RatFuncT)>>,
    t0: Option<&Rational>,
) -> Result<Vec<Vec<(K, RatFuncT)>>, IdealError> {
    let Some(t0) = t0 else { return Ok(cols) };
    cols.into_iter()
        .map(|col| {
            let mut out = Vec::with_capacity(col.len());
            for (k, v) in col {
                let c = const_at(&v, t0)?;
                if !c.is_zero() {
                    out.push((k, c));
                }
            }
            Ok(out)
        })
        .collect()
}

/// Solves `target = Σ x_j cols_j`; `None` when inconsistent.
fn solve_columns<K: Ord + Copy>(
    rows: &[K],
    cols: &[Vec<(K, RatFuncT)>],
    target: &[(K, RatFuncT)],
) -> Result<Option<Vec<RatFuncT>>, IdealError> {
    let index = |k: &K| rows.binary_search(k).expect("row key present");
    let mut a = Matrix::zeros(rows.len(), cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (k, v) in col {
            a.set(index(k), j, v.clone());
        }
    }
    let mut b = vec![RatFuncT::zero(); rows.len()];
    for (k, v) in target {
        b[index(k)] = v.clone();
    }
    match solve_linear(&a, Some(&b))? {
        LinearSolution::Solution(x) => Ok(Some(x)),
        _ => Ok(None),
    }
}

/// Membership of `target` in the left ideal generated by `gens`, with
/// multipliers `1` and `(r,s)_T` for `r <= bound_p`, `|s| <= bound_q`.
pub fn skein_membership(
    target: &TorusSkein<RatFuncT>,
    gens: &[TorusSkein<RatFuncT>],
    bound_p: i64,
    bound_q: i64,
) -> Result<Option<Certificate>, IdealError> {
    skein_membership_at(target, gens, bound_p, bound_q, None)
}

/// [`skein_membership`] with all products specialized at `t0` before solving.
pub fn skein_membership_at(
    target: &TorusSkein<RatFuncT>,
    gens: &[TorusSkein<RatFuncT>],
    bound_p: i64,
    bound_q: i64,
    t0: Option<&Rational>,
) -> Result<Option<Certificate>, IdealError> {
    let mut mults = vec![Multiplier::Unit];
    for r in 0..=bound_p {
        for s in -bound_q..=bound_q {
            if r > 0 || s > 0 {
                mults.push(Multiplier::Curve(TorusLabel { p: r, q: s }));
            }
        }
    }
    let mut items = Vec::new();
    let mut tags = Vec::new();
    for &m in &mults {
        let ms = multiplier_skein(m);
        for (gi, g) in gens.iter().enumerate() {
            items.push(ms.mul(g));
            tags.push((m, gi));
        }
    }
    let mut all = items.clone();
    all.push(target.clone());
    let rows = skein_rows(&all);
    let as_col = |s: &TorusSkein<RatFuncT>| -> Vec<(Option<TorusLabel>, RatFuncT)> {
        rows.iter()
            .map(|k| (*k, skein_entry(s, *k)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    };
    let cols = specialize_cols(items.iter().map(as_col).collect(), t0)?;
    let tcol = specialize_cols(vec![as_col(target)], t0)?.remove(0);
    let Some(x) = solve_columns(&rows, &cols, &tcol)? else {
        return Ok(None);
    };
    let combination = tags
        .into_iter()
        .zip(x)
        .filter(|(_, v)| !v.is_zero())
        .map(|((multiplier, gen), coeff)| CertTerm { multiplier, coeff, gen })
        .collect();
    Ok(Some(Certificate {
        target: Target::Skein(target.clone()),
        combination,
        bound: (bound_p, bound_q),
        t_value: t0.cloned(),
    }))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PlaneSearch {
    /// Allow `l^a m^b` with negative exponents (the extension ideal in the
    /// noncommutative torus).
    pub laurent_multipliers: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaneOutcome {
    Found(Certificate),
    NotFound { searched: (i64, i64) },
}

/// Boxes `(L, M)` with `L <= bound_l`, `M <= bound_m`, in the search order
/// `(L + M, L)`.
pub fn plane_boxes(bound_l: i64, bound_m: i64) -> Vec<(i64, i64)> {
    let mut v: Vec<(i64, i64)> = (0..=bound_l)
        .flat_map(|a| (0..=bound_m).map(move |b| (a, b)))
        .collect();
    v.sort_by_key(|&(a, b)| (a + b, a));
    v
}

fn plane_solve(
    target: &QTorusPoly<RatFuncT>,
    gens: &[QTorusPoly<RatFuncT>],
    bl: i64,
    bm: i64,
    opts: PlaneSearch,
    t0: Option<&Rational>,
) -> Result<Option<Certificate>, IdealError> {
    let (a0, b0) = if opts.laurent_multipliers { (-bl, -bm) } else { (0, 0) };
    let mut items = Vec::new();
    let mut tags = Vec::new();
    for a in a0..=bl {
        for b in b0..=bm {
            let mono = QTorusPoly::monomial(a, b, RatFuncT::one());
            for (gi, g) in gens.iter().enumerate() {
                items.push(mono.mul(g));
                tags.push((Multiplier::Monomial(a, b), gi));
            }
        }
    }
    let mut rows = BTreeSet::new();
    for f in items.iter().chain(std::iter::once(target)) {
        rows.extend(f.terms().map(|(k, _)| k));
    }
    let rows: Vec<(i64, i64)> = rows.into_iter().collect();
    let as_col = |f: &QTorusPoly<RatFuncT>| -> Vec<((i64, i64), RatFuncT)> {
        f.terms().map(|(k, v)| (k, v.clone())).collect()
    };
    let cols = specialize_cols(items.iter().map(as_col).collect(), t0)?;
    let tcol = specialize_cols(vec![as_col(target)], t0)?.remove(0);
    let Some(x) = solve_columns(&rows, &cols, &tcol)? else {
        return Ok(None);
    };
    let combination = tags
        .into_iter()
        .zip(x)
        .filter(|(_, v)| !v.is_zero())
        .map(|((multiplier, gen), coeff)| CertTerm { multiplier, coeff, gen })
        .collect();
    Ok(Some(Certificate {
        target: Target::Plane(target.clone()),
        combination,
        bound: (bl, bm),
        t_value: t0.cloned(),
    }))
}

/// Searches boxes in [`plane_boxes`] order and returns the first certificate.
pub fn plane_membership(
    target: &QTorusPoly<RatFuncT>,
    gens: &[QTorusPoly<RatFuncT>],
    bound_l: i64,
    bound_m: i64,
    opts: PlaneSearch,
) -> Result<PlaneOutcome, IdealError> {
    plane_membership_at(target, gens, bound_l, bound_m, opts, None)
}

/// [`plane_membership`] with all products specialized at `t0` before solving.
pub fn plane_membership_at(
    target: &QTorusPoly<RatFuncT>,
    gens: &[QTorusPoly<RatFuncT>],
    bound_l: i64,
    bound_m: i64,
    opts: PlaneSearch,
    t0: Option<&Rational>,
) -> Result<PlaneOutcome, IdealError> {
    for (bl, bm) in plane_boxes(bound_l, bound_m) {
        if let Some(cert) = plane_solve(target, gens, bl, bm, opts, t0)? {
            return Ok(PlaneOutcome::Found(cert));
        }
    }
    Ok(PlaneOutcome::NotFound {
        searched: (bound_l, bound_m),
    })
}

fn q(a: i64, b: i64, c: LaurentT) -> QTorusPoly {
    QTorusPoly::monomial(a, b, c)
}

fn product(factors: &[QTorusPoly]) -> QTorusPoly {
    factors.iter().fold(QTorusPoly::one(), |acc, f| acc.mul(f))
}

/// Factors of the three A-ideal generators, left to right.
pub fn aideal_factors(c: Chirality) -> Vec<Vec<QTorusPoly>> {
    let one = LaurentT::one();
    let l_plus = |k: i64| q(1, 0, one.clone()).add(&q(0, 0, tp(k)));
    let first = q(0, 4, one.clone())
        .mul(&l_plus(10))
        .sub(&l_plus(2).scale(&tp(-4)));
    let last = match c {
        Chirality::Left => q(1, 0, one.clone()).sub(&q(0, 6, tp(6))),
        Chirality::Right => q(1, 6, one.clone()).sub(&q(0, 0, tp(6))),
    };
    let m2 = q(0, 2, one.clone()).sub(&q(0, 0, tp(-22)));
    vec![
        vec![first, last.clone()],
        vec![l_plus(24), l_plus(10), l_plus(2), last.clone()],
        vec![m2, l_plus(10), l_plus(2), last],
    ]
}

/// The three A-ideal generators, expanded in normal order.
pub fn aideal_gens(c: Chirality) -> GeneratorSet {
    let elems = aideal_factors(c)
        .iter()
        .map(|f| PlanePoly::new(product(f)).expect("products of plane polynomials"))
        .collect();
    GeneratorSet::plane(
        c,
        elems,
        vec![
            "[m^4(l+t^10) - t^-4(l+t^2)] x peripheral factor".into(),
            "(l+t^24)(l+t^10)(l+t^2) x peripheral factor".into(),
            "(m^2-t^-22)(l+t^10)(l+t^2) x peripheral factor".into(),
        ],
        None,
        true,
    )
}

/// The image of `τ` in the quantum plane: its embedding, cleared.
pub fn cleared_tau(c: Chirality) -> Result<(PlanePoly, QTorusPoly), IdealError> {
    Ok(clear_to_plane(&embed(&tau(c)))?)
}

/// The unit `(c, k)` with `cleared(τ) = c t^k · candidate`.
pub fn verify_gen1_against(c: Chirality, candidate: &QTorusPoly) -> Result<(Rational, i64), IdealError> {
    let (g, _) = cleared_tau(c)?;
    equal_up_to_unit(g.poly(), candidate).ok_or(IdealError::NoUnit)
}

pub fn verify_aideal_gen1(c: Chirality) -> Result<(Rational, i64), IdealError> {
    let gens = aideal_gens(c);
    verify_gen1_against(c, gens.plane_elements()[0].poly())
}

/// Cleared embeddings of the `I_t(K)` generators, the generators of the
/// plane ideal used for the A-ideal certificates.
pub fn cleared_peripheral_gens(c: Chirality) -> Result<Vec<QTorusPoly>, IdealError> {
    let gens = theorem2_gens(c)?;
    gens.skein_elements()
        .iter()
        .map(|g| Ok(clear_to_plane(&embed(g))?.0.into_poly()))
        .collect()
}

/// Certificates for A-ideal generators 2 and 3 in the plane ideal generated
/// by the cleared `I_t(K)` generators.
pub fn aideal_membership(
    c: Chirality,
    bound_l: i64,
    bound_m: i64,
    opts: PlaneSearch,
) -> Result<Vec<PlaneOutcome>, IdealError> {
    let gens: Vec<_> = cleared_peripheral_gens(c)?
        .iter()
        .map(|g| g.map_coeffs(|x| x.to_ratfunc()))
        .collect();
    let targets = aideal_gens(c);
    targets.plane_elements()[1..]
        .iter()
        .map(|t| {
            let t = t.poly().map_coeffs(|x| x.to_ratfunc());
            plane_membership(&t, &gens, bound_l, bound_m, opts)
        })
        .collect()
}

/// Commutative polynomial in `l`, `m` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CommPoly {
    terms: std::collections::BTreeMap<(i64, i64), Rational>,
}

impl CommPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(a: i64, b: i64, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, c);
        p
    }

    pub fn from_int_terms(pairs: &[((i64, i64), i64)]) -> Self {
        let mut p = Self::zero();
        for &((a, b), c) in pairs {
            p.add_term(a, b, int(c));
        }
        p
    }

    pub fn add_term(&mut self, a: i64, b: i64, c: Rational) {
        let e = self.terms.entry((a, b)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((i64, i64), &Rational)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for ((a, b), c) in &o.terms {
            r.add_term(*a, *b, c.clone());
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &o.terms {
                r.add_term(a + c, b + d, x * y);
            }
        }
        r
    }

    pub fn product(factors: &[CommPoly]) -> Self {
        factors
            .iter()
            .fold(Self::monomial(0, 0, Rational::one()), |acc, f| acc.mul(f))
    }

    /// `l -> -l`, `m -> -m`.
    pub fn negate_variables(&self) -> Self {
        let mut r = Self::zero();
        for ((a, b), c) in &self.terms {
            let c = if (a + b).rem_euclid(2) == 0 { c.clone() } else { -c };
            r.add_term(*a, *b, c);
        }
        r
    }

    /// Integer content 1, and the lexicographically greatest monomial has a
    /// positive coefficient.
    pub fn normalized(&self) -> Self {
        use num_integer::Integer;
        let Some((_, lead)) = self.terms.iter().next_back() else {
            return self.clone();
        };
        let mut den = num_bigint::BigInt::one();
        let mut num = num_bigint::BigInt::zero();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        let mut scale = Rational::new(den, num);
        if lead.is_negative() {
            scale = -scale;
        }
        let mut r = Self::zero();
        for ((a, b), c) in &self.terms {
            r.add_term(*a, *b, c * &scale);
        }
        r
    }

    pub fn to_qtorus(&self) -> QTorusPoly {
        let mut r = QTorusPoly::zero();
        for ((a, b), c) in &self.terms {
            r.add_term(*a, *b, &LaurentT::constant(c.clone()));
        }
        r
    }

    /// Specializes `t`; only meaningful where the torus is commutative (`t = ±1`).
    pub fn from_qtorus_at(f: &QTorusPoly, t0: &Rational) -> Result<Self, CoeffError> {
        let mut r = Self::zero();
        for ((a, b), c) in f.terms() {
            r.add_term(a, b, c.specialize(t0)?);
        }
        Ok(r)
    }
}

/// `target = Σ coeff · l^a m^b · gens[gen]` in the commutative plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommCertificate {
    pub target: CommPoly,
    /// `((a, b), gen, coeff)`.
    pub combination: Vec<((i64, i64), usize, Rational)>,
    pub bound: (i64, i64),
}

impl CommCertificate {
    pub fn replay(&self, gens: &[CommPoly]) -> bool {
        let mut acc = CommPoly::zero();
        for ((a, b), gi, c) in &self.combination {
            let Some(g) = gens.get(*gi) else { return false };
            acc = acc.add(&CommPoly::monomial(*a, *b, c.clone()).mul(g));
        }
        acc == self.target
    }
}

/// Membership in the ideal of `Q[l, m]` generated by `gens`, with monomial
/// multipliers up to `(bound_l, bound_m)`.
pub fn comm_membership(
    target: &CommPoly,
    gens: &[CommPoly],
    bound_l: i64,
    bound_m: i64,
) -> Result<Option<CommCertificate>, IdealError> {
    let mut items = Vec::new();
    let mut tags = Vec::new();
    for a in 0..=bound_l {
        for b in 0..=bound_m {
            for (gi, g) in gens.iter().enumerate() {
                items.push(CommPoly::monomial(a, b, Rational::one()).mul(g));
                tags.push(((a, b), gi));
            }
        }
    }
    let mut rows = BTreeSet::new();
    for f in items.iter().chain(std::iter::once(target)) {
        rows.extend(f.terms().map(|(k, _)| k));
    }
    let rows: Vec<(i64, i64)> = rows.into_iter().collect();
    let as_col = |f: &CommPoly| -> Vec<((i64, i64), RatFuncT)> {
        f.terms()
            .map(|(k, v)| (k, RatFuncT::from(LaurentT::constant(v.clone()))))
            .collect()
    };
    let cols: Vec<_> = items.iter().map(as_col).collect();
    let Some(x) = solve_columns(&rows, &cols, &as_col(target))? else {
        return Ok(None);
    };
    let mut combination = Vec::new();
    for ((mono, gi), v) in tags.into_iter().zip(x) {
        if v.is_zero() {
            continue;
        }
        let c = v.as_laurent().and_then(|l| l.as_monomial()).map(|(c, _)| c.clone());
        combination.push((mono, gi, c.unwrap_or_else(Rational::zero)));
    }
    Ok(Some(CommCertificate {
        target: target.clone(),
        combination,
        bound: (bound_l, bound_m),
    }))
}

/// Cleared embeddings of the `I_{-1}(K)` skein generators, at `t = -1`.
pub fn cleared_t_minus1(c: Chirality) -> Result<Vec<CommPoly>, IdealError> {
    let (skein, _) = t_minus1_gens(c)?;
    let m1 = int(-1);
    skein
        .skein_elements()
        .iter()
        .map(|g| Ok(CommPoly::from_qtorus_at(clear_to_plane(&embed(g))?.0.poly(), &m1)?))
        .collect()
}

/// Certificates for both `A_{-1}(K)` generators in the ideal generated by
/// [`cleared_t_minus1`].
pub fn t_minus1_membership(
    c: Chirality,
    bound_l: i64,
    bound_m: i64,
) -> Result<Vec<Option<CommCertificate>>, IdealError> {
    let gens = cleared_t_minus1(c)?;
    t_minus1_factors(c)
        .iter()
        .map(|f| comm_membership(&CommPoly::product(f), &gens, bound_l, bound_m))
        .collect()
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut parts = Vec::new();
            if !mag.is_one() || (*a == 0 && *b == 0) {
                parts.push(mag.to_string());
            }
            for (name, e) in [("l", *a), ("m", *b)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    e => parts.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CommPoly({self})")
    }
}

fn cp(pairs: &[((i64, i64), i64)]) -> CommPoly {
    CommPoly::from_int_terms(pairs)
}

/// Factored generators of the A-ideal at `t = -1`.
pub fn t_minus1_factors(c: Chirality) -> Vec<Vec<CommPoly>> {
    let l2 = cp(&[((2, 0), 1), ((0, 0), -1)]);
    let m2 = cp(&[((0, 2), 1), ((0, 0), -1)]);
    let l1 = cp(&[((1, 0), 1), ((0, 0), 1)]);
    let last = match c {
        Chirality::Left => cp(&[((1, 0), 1), ((0, 6), -1)]),
        Chirality::Right => cp(&[((1, 6), 1), ((0, 0), -1)]),
    };
    vec![vec![l2, l1.clone(), last.clone()], vec![m2, l1, last]]
}

fn t_minus1_skein_left(with_constant: bool) -> Vec<TorusSkein> {
    let mut g1 = TorusSkein::t(1, -4)
        .sub(&TorusSkein::t(1, -2))
        .add(&TorusSkein::t(0, 4))
        .sub(&TorusSkein::t(0, 2));
    if with_constant {
        g1 = g1.add(&TorusSkein::scalar(LaurentT::from_int(-2)));
    }
    let g2 = TorusSkein::t(2, -6).sub(&TorusSkein::t(0, 6));
    vec![g1, g2]
}

/// The two `t = -1` skein generators as printed, including the `-2` in the
/// first one.
pub fn t_minus1_skein_as_printed(c: Chirality) -> Vec<TorusSkein> {
    t_minus1_skein_left(true).into_iter().map(|g| chiral(g, c)).collect()
}

/// Generators of `I_{-1}(K)` and `A_{-1}(K)`. The first skein generator is
/// `peripheral_y` at `t = -1`, which has no constant term.
pub fn t_minus1_gens(c: Chirality) -> Result<(GeneratorSet, GeneratorSet), IdealError> {
    let m1 = int(-1);
    let skein: Vec<TorusSkein> = t_minus1_skein_left(false)
        .into_iter()
        .map(|g| chiral(g, c))
        .collect();
    let skein = GeneratorSet::skein(
        c,
        skein,
        vec!["(1,-4) generator".into(), "(2,-6) generator".into()],
        Some(m1.clone()),
        false,
    )?;
    let plane = t_minus1_factors(c)
        .iter()
        .map(|f| PlanePoly::new(CommPoly::product(f).to_qtorus()).expect("nonnegative exponents"))
        .collect();
    let plane = GeneratorSet::plane(
        c,
        plane,
        vec!["(l^2-1)(l+1) x factor".into(), "(m^2-1)(l+1) x factor".into()],
        Some(m1),
        false,
    );
    Ok((skein, plane))
}

/// Common factors after `l -> -l`, `m -> -m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonFactor {
    pub factors: Vec<CommPoly>,
    pub product: CommPoly,
}

impl fmt::Display for CommonFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|p| format!("({p})")).collect();
        f.write_str(&parts.join("*"))
    }
}

/// Intersection of factor multisets, after normalizing each factor.
pub fn common_factors(gens: &[Vec<CommPoly>]) -> CommonFactor {
    let mut iter = gens.iter().map(|g| {
        let mut v: Vec<CommPoly> = g.iter().map(CommPoly::normalized).collect();
        v.sort();
        v
    });
    let mut common = iter.next().unwrap_or_default();
    for other in iter {
        let mut pool = other;
        common.retain(|f| match pool.iter().position(|g| g == f) {
            Some(i) => {
                pool.remove(i);
                true
            }
            None => false,
        });
    }
    let product = CommPoly::product(&common).normalized();
    CommonFactor {
        factors: common,
        product,
    }
}

/// The classical A-polynomial factor recovered from the `t = -1` generators.
pub fn classical_common_factor(c: Chirality) -> CommonFactor {
    let subst: Vec<Vec<CommPoly>> = t_minus1_factors(c)
        .iter()
        .map(|g| g.iter().map(CommPoly::negate_variables).collect())
        .collect();
    common_factors(&subst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_right_as_quoted() {
        let e = TorusSkein::t(1, 5)
            .add(&TorusSkein::curve(1, 1, -tp(8)))
            .add(&TorusSkein::curve(0, 5, tp(3)))
            .add(&TorusSkein::curve(0, 1, -tp(-1)));
        assert_eq!(tau(Chirality::Right), e);
    }

    #[test]
    fn generators_in_kernel() {
        for c in Chirality::BOTH {
            assert!(theorem2_gens(c).is_ok());
        }
    }

    #[test]
    fn printed_third_generator_residual() {
        let g = &theorem2_gens_as_printed(Chirality::Left)[2];
        let r = pi(g, Chirality::Left);
        let e = pi(&TorusSkein::curve(1, -7, LaurentT::monomial(int(-2), -5)), Chirality::Left);
        assert_eq!(r, e);
    }

    #[test]
    fn classical_factors() {
        assert_eq!(classical_common_factor(Chirality::Left).to_string(), "(l - 1)*(l + m^6)");
        assert_eq!(classical_common_factor(Chirality::Right).to_string(), "(l - 1)*(l*m^6 + 1)");
        let g = t_minus1_factors(Chirality::Left)[0].clone();
        let self_common = common_factors(&[g.clone(), g.clone()]);
        assert_eq!(self_common.product, CommPoly::product(&g).normalized());
    }

    #[test]
    fn normalization() {
        let p = cp(&[((0, 0), 2), ((1, 0), -2)]);
        assert_eq!(p.normalized(), cp(&[((1, 0), 1), ((0, 0), -1)]));
    }

    #[test]
    fn eighth_roots_rejected() {
        let g = theorem2_gens(Chirality::Left).unwrap();
        assert!(g.check_specialization(&int(1)).is_err());
        assert!(g.check_specialization(&int(-1)).is_err());
        assert!(g.check_specialization(&int(2)).is_ok());
    }
}
