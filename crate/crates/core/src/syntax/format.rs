use num_traits::{One, Signed};

use crate::exactcoeff::{Coeff, LaurentT};
use crate::quantum_torus::QTorusPoly;
use crate::torus_skein::TorusSkein;
use crate::trefoil_module::ModuleElt;

use super::parse::Value;

/// How a coefficient prints in front of a basis element.
struct CoeffText {
    negative: bool,
    /// Magnitude text; `None` for a bare 1.
    body: Option<String>,
}

fn monomial_text(c: &LaurentT) -> Option<CoeffText> {
    let (r, k) = c.as_monomial()?;
    let mag = r.abs();
    let body = match (mag.is_one(), k) {
        (true, 0) => None,
        (false, 0) => Some(mag.to_string()),
        (true, 1) => Some("t".into()),
        (true, k) => Some(format!("t^{k}")),
        (false, 1) => Some(format!("{mag}*t")),
        (false, k) => Some(format!("{mag}*t^{k}")),
    };
    Some(CoeffText {
        negative: r.is_negative(),
        body,
    })
}

fn coeff_text<C: Coeff>(c: &C) -> CoeffText {
    let r = c.to_ratfunc();
    if let Some(l) = r.as_laurent() {
        if let Some(m) = monomial_text(l) {
            return m;
        }
    }
    CoeffText {
        negative: false,
        body: Some(format!("({c})")),
    }
}

/// Joins `(coefficient, basis)` terms into `a - b + c` form.
fn join<C: Coeff>(terms: &[(&C, Option<String>)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, basis)) in terms.iter().enumerate() {
        let ct = coeff_text(*c);
        let sign = match (i, ct.negative) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        out.push_str(sign);
        let body = match (ct.body, basis) {
            (None, None) => "1".to_string(),
            (None, Some(b)) => b.clone(),
            (Some(c), None) => c,
            (Some(c), Some(b)) => format!("{c}*{b}"),
        };
        out.push_str(&body);
    }
    out
}

/// Unit first, then labels in lexicographic `(p,q)` order.
pub fn format_skein<C: Coeff>(s: &TorusSkein<C>) -> String {
    let mut terms: Vec<(&C, Option<String>)> = Vec::new();
    if !s.unit_coeff().is_zero() {
        terms.push((s.unit_coeff(), None));
    }
    for (l, c) in s.terms() {
        terms.push((c, Some(format!("T({},{})", l.p, l.q))));
    }
    join(&terms)
}

fn lm_text(a: i64, b: i64) -> Option<String> {
    let mut parts = Vec::new();
    for (name, e) in [("l", a), ("m", b)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    (!parts.is_empty()).then(|| parts.join("*"))
}

/// Normal-ordered monomials in lexicographic `(a,b)` order.
pub fn format_torus<C: Coeff>(f: &QTorusPoly<C>) -> String {
    let terms: Vec<(&C, Option<String>)> = f.terms().map(|((a, b), c)| (c, lm_text(a, b))).collect();
    join(&terms)
}

/// `S(n)` terms by decreasing `n`, then `S(n)*y` terms by decreasing `n`.
pub fn format_module<C: Coeff>(m: &ModuleElt<C>) -> String {
    let mut terms: Vec<(&C, Option<String>)> = Vec::new();
    for (n, c) in m.s_part().rev() {
        terms.push((c, Some(format!("S({n})"))));
    }
    for (n, c) in m.sy_part().rev() {
        terms.push((c, Some(format!("S({n})*y"))));
    }
    join(&terms)
}

pub fn format_value(v: &Value) -> String {
    match v {
        Value::Skein(s) => format_skein(s),
        Value::Torus(f) => format_torus(f),
        Value::Module(m) => format_module(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal_lab::tau;
    use crate::syntax::parse::{parse_skein, parse_torus, parse_value, ErrorKind};
    use crate::trefoil_module::{pi, Chirality};

    const TAU: &str = "T(1,-5) - t^-8*T(1,-1) + t^-3*T(0,5) - t*T(0,1)";

    #[test]
    fn tau_parses_and_sorts() {
        let s = parse_skein(TAU).unwrap();
        assert_eq!(s, tau(Chirality::Left));
        assert_eq!(format_skein(&s), "-t*T(0,1) + t^-3*T(0,5) + T(1,-5) - t^-8*T(1,-1)");
    }

    #[test]
    fn commutation_cancels() {
        assert!(parse_torus("l*m - t^2*m*l").unwrap().is_zero());
    }

    #[test]
    fn mixed_families_rejected() {
        let e = parse_value("T(1,0) + l").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Type);
        assert!(e.message.contains("skein") && e.message.contains("torus"), "{}", e.message);
    }

    #[test]
    fn syntax_error_has_position() {
        let e = parse_value("T(1,0) +\n  * l").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Syntax);
        assert_eq!((e.pos.line, e.pos.col), (2, 3));
    }

    #[test]
    fn pi_of_meridian_longitude_renders() {
        let v = pi(&parse_skein("T(1,0)").unwrap(), Chirality::Left);
        assert_eq!(format_module(&v), "t^6*S(6) - t^2*S(0) + t^4*S(4)*y - S(0)*y");
    }

    #[test]
    fn text_round_trips() {
        for src in [TAU, "3/2 - 1/3*t^2*T(2,1)", "(t + t^-1)*T(0,2)", "l^-2*m^3 + 5", "0"] {
            let v = parse_value(src).unwrap();
            let again = parse_value(&format_value(&v)).unwrap();
            assert_eq!(v, again, "{src}");
        }
    }
}
