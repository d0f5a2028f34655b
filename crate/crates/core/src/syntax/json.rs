use serde_json::{json, Map, Value as J};
use thiserror::Error;

use crate::chebyshev::{Basis, PolyX};
use crate::exactcoeff::{Coeff, LaurentT, RatFuncT, Rational};
use crate::ideal_lab::{CertTerm, Certificate, Multiplier, Target};
use crate::quantum_torus::QTorusPoly;
use crate::torus_skein::{TorusLabel, TorusSkein};
use crate::trefoil_module::ModuleElt;

use super::parse::Value;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad JSON: {0}")]
pub struct JsonError(pub String);

fn bad(msg: impl Into<String>) -> JsonError {
    JsonError(msg.into())
}

/// Any of the three element families with rational-function coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JsonElement {
    Skein(TorusSkein<RatFuncT>),
    Torus(QTorusPoly<RatFuncT>),
    Module(ModuleElt<RatFuncT>),
}

pub fn laurent_to_json(l: &LaurentT) -> J {
    let mut m = Map::new();
    for (k, c) in l.terms() {
        m.insert(k.to_string(), J::String(c.to_string()));
    }
    J::Object(m)
}

/// Laurent coefficients serialize as plain exponent maps, genuine fractions
/// as `{"num": .., "den": ..}`.
pub fn coeff_to_json<C: Coeff>(c: &C) -> J {
    let r = c.to_ratfunc();
    match r.as_laurent() {
        Some(l) => laurent_to_json(l),
        None => json!({"num": laurent_to_json(r.num()), "den": laurent_to_json(r.den())}),
    }
}

pub fn skein_to_json<C: Coeff>(s: &TorusSkein<C>) -> J {
    let terms: Vec<J> = s
        .terms()
        .map(|(l, c)| json!({"p": l.p, "q": l.q, "c": coeff_to_json(c)}))
        .collect();
    json!({"type": "torus_skein", "unit": coeff_to_json(s.unit_coeff()), "terms": terms})
}

pub fn torus_to_json<C: Coeff>(f: &QTorusPoly<C>) -> J {
    let terms: Vec<J> = f
        .terms()
        .map(|((a, b), c)| json!({"l": a, "m": b, "c": coeff_to_json(c)}))
        .collect();
    json!({"type": "qtorus", "terms": terms})
}

pub fn module_to_json<C: Coeff>(m: &ModuleElt<C>) -> J {
    let part = |it: Vec<(usize, &C)>| -> Vec<J> {
        it.into_iter()
            .rev()
            .map(|(n, c)| json!({"n": n, "c": coeff_to_json(c)}))
            .collect()
    };
    json!({
        "type": "module_elt",
        "s": part(m.s_part().collect()),
        "sy": part(m.sy_part().collect()),
    })
}

pub fn polyx_to_json(p: &PolyX) -> J {
    let coeffs: Vec<J> = p
        .coeffs()
        .map(|(n, c)| json!({"n": n, "c": laurent_to_json(c)}))
        .collect();
    json!({"basis": p.basis().name(), "coeffs": coeffs})
}

pub fn value_to_json(v: &Value) -> J {
    match v {
        Value::Skein(s) => skein_to_json(s),
        Value::Torus(f) => torus_to_json(f),
        Value::Module(m) => module_to_json(m),
    }
}

pub fn element_to_json(e: &JsonElement) -> J {
    match e {
        JsonElement::Skein(s) => skein_to_json(s),
        JsonElement::Torus(f) => torus_to_json(f),
        JsonElement::Module(m) => module_to_json(m),
    }
}

fn multiplier_to_json(m: &Multiplier) -> J {
    match m {
        Multiplier::Unit => J::String("unit".into()),
        Multiplier::Curve(l) => json!({"p": l.p, "q": l.q}),
        Multiplier::Monomial(a, b) => json!({"l": a, "m": b}),
    }
}

pub fn certificate_to_json(c: &Certificate) -> J {
    let target = match &c.target {
        Target::Skein(s) => skein_to_json(s),
        Target::Plane(f) => torus_to_json(f),
    };
    let combination: Vec<J> = c
        .combination
        .iter()
        .map(|t| {
            json!({
                "multiplier": multiplier_to_json(&t.multiplier),
                "coeff": coeff_to_json(&t.coeff),
                "gen": t.gen,
            })
        })
        .collect();
    let mut out = json!({
        "target": target,
        "combination": combination,
        "bound": [c.bound.0, c.bound.1],
    });
    if let Some(t0) = &c.t_value {
        out["t_value"] = J::String(t0.to_string());
    }
    out
}

fn rational_from_str(s: &str) -> Result<Rational, JsonError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| bad(format!("not a rational: {s:?}")))
}

fn rational_from_json(v: &J) -> Result<Rational, JsonError> {
    match v {
        J::String(s) => rational_from_str(s),
        J::Number(n) => n
            .as_i64()
            .map(crate::exactcoeff::int)
            .ok_or_else(|| bad(format!("not an integer: {n}"))),
        _ => Err(bad(format!("expected a rational, got {v}"))),
    }
}

pub fn laurent_from_json(v: &J) -> Result<LaurentT, JsonError> {
    let obj = v.as_object().ok_or_else(|| bad("Laurent polynomial must be an object"))?;
    let mut out = LaurentT::zero();
    for (k, c) in obj {
        let e: i64 = k.parse().map_err(|_| bad(format!("bad exponent {k:?}")))?;
        out.add_term(e, rational_from_json(c)?);
    }
    Ok(out)
}

pub fn coeff_from_json(v: &J) -> Result<RatFuncT, JsonError> {
    if let Some(obj) = v.as_object() {
        if let (Some(n), Some(d)) = (obj.get("num"), obj.get("den")) {
            return RatFuncT::new(laurent_from_json(n)?, laurent_from_json(d)?)
                .map_err(|e| bad(e.to_string()));
        }
    }
    Ok(RatFuncT::from_laurent(laurent_from_json(v)?))
}

fn int_field(v: &J, key: &str) -> Result<i64, JsonError> {
    v.get(key)
        .and_then(J::as_i64)
        .ok_or_else(|| bad(format!("missing integer field {key:?}")))
}

fn array_field<'a>(v: &'a J, key: &str) -> Result<&'a Vec<J>, JsonError> {
    v.get(key)
        .and_then(J::as_array)
        .ok_or_else(|| bad(format!("missing array field {key:?}")))
}

fn coeff_field(v: &J) -> Result<RatFuncT, JsonError> {
    coeff_from_json(v.get("c").ok_or_else(|| bad("missing field \"c\""))?)
}

pub fn element_from_json(v: &J) -> Result<JsonElement, JsonError> {
    let ty = v
        .get("type")
        .and_then(J::as_str)
        .ok_or_else(|| bad("missing \"type\""))?;
    match ty {
        "torus_skein" => {
            let mut s = TorusSkein::zero();
            if let Some(u) = v.get("unit") {
                s.add_unit(&coeff_from_json(u)?);
            }
            for t in array_field(v, "terms")? {
                s.add_curve(int_field(t, "p")?, int_field(t, "q")?, &coeff_field(t)?);
            }
            Ok(JsonElement::Skein(s))
        }
        "qtorus" => {
            let mut f = QTorusPoly::zero();
            for t in array_field(v, "terms")? {
                f.add_term(int_field(t, "l")?, int_field(t, "m")?, &coeff_field(t)?);
            }
            Ok(JsonElement::Torus(f))
        }
        "module_elt" => {
            let mut m = ModuleElt::zero();
            for (key, with_y) in [("s", false), ("sy", true)] {
                for t in array_field(v, key)? {
                    let n = int_field(t, "n")?;
                    let n = usize::try_from(n).map_err(|_| bad(format!("negative index {n}")))?;
                    let c = coeff_field(t)?;
                    if with_y {
                        m.add_sy(n, &c);
                    } else {
                        m.add_s(n, &c);
                    }
                }
            }
            Ok(JsonElement::Module(m))
        }
        other => Err(bad(format!("unknown type {other:?}"))),
    }
}

/// A generator file: a JSON array of serialized elements.
pub fn elements_from_str(text: &str) -> Result<Vec<JsonElement>, JsonError> {
    let v: J = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let arr = v.as_array().ok_or_else(|| bad("expected a JSON array"))?;
    arr.iter().map(element_from_json).collect()
}

pub fn polyx_from_json(v: &J) -> Result<PolyX, JsonError> {
    let basis = match v.get("basis").and_then(J::as_str) {
        Some("power") => Basis::Power,
        Some("T") => Basis::T,
        Some("S") => Basis::S,
        other => return Err(bad(format!("unknown basis {other:?}"))),
    };
    let mut coeffs = Vec::new();
    for t in array_field(v, "coeffs")? {
        let n = usize::try_from(int_field(t, "n")?).map_err(|_| bad("negative index"))?;
        let c = laurent_from_json(t.get("c").ok_or_else(|| bad("missing field \"c\""))?)?;
        coeffs.push((n, c));
    }
    Ok(PolyX::from_coeffs(basis, coeffs))
}

fn multiplier_from_json(v: &J) -> Result<Multiplier, JsonError> {
    if v.as_str() == Some("unit") {
        return Ok(Multiplier::Unit);
    }
    if v.get("p").is_some() {
        return Ok(Multiplier::Curve(TorusLabel {
            p: int_field(v, "p")?,
            q: int_field(v, "q")?,
        }));
    }
    Ok(Multiplier::Monomial(int_field(v, "l")?, int_field(v, "m")?))
}

pub fn certificate_from_json(v: &J) -> Result<Certificate, JsonError> {
    let target = match element_from_json(v.get("target").ok_or_else(|| bad("missing target"))?)? {
        JsonElement::Skein(s) => Target::Skein(s),
        JsonElement::Torus(f) => Target::Plane(f),
        JsonElement::Module(_) => return Err(bad("certificate target cannot be a module element")),
    };
    let mut combination = Vec::new();
    for t in array_field(v, "combination")? {
        combination.push(CertTerm {
            multiplier: multiplier_from_json(t.get("multiplier").ok_or_else(|| bad("missing multiplier"))?)?,
            coeff: coeff_from_json(t.get("coeff").ok_or_else(|| bad("missing coeff"))?)?,
            gen: usize::try_from(int_field(t, "gen")?).map_err(|_| bad("negative gen"))?,
        });
    }
    let b = array_field(v, "bound")?;
    let bi = |i: usize| b.get(i).and_then(J::as_i64).ok_or_else(|| bad("bad bound"));
    Ok(Certificate {
        target,
        combination,
        bound: (bi(0)?, bi(1)?),
        t_value: match v.get("t_value") {
            Some(t) if !t.is_null() => Some(rational_from_json(t)?),
            _ => None,
        },
    })
}

/// Drops rational-function coefficients back to Laurent ones when possible.
pub fn skein_to_laurent(s: &TorusSkein<RatFuncT>) -> Option<TorusSkein> {
    if s.terms().all(|(_, c)| c.is_laurent()) && s.unit_coeff().is_laurent() {
        Some(s.map_coeffs(|c| c.as_laurent().cloned().unwrap_or_default()))
    } else {
        None
    }
}

pub fn torus_to_laurent(f: &QTorusPoly<RatFuncT>) -> Option<QTorusPoly> {
    f.terms()
        .all(|(_, c)| c.is_laurent())
        .then(|| f.map_coeffs(|c| c.as_laurent().cloned().unwrap_or_default()))
}

pub fn module_to_laurent(m: &ModuleElt<RatFuncT>) -> Option<ModuleElt> {
    (m.s_part().chain(m.sy_part()).all(|(_, c)| c.is_laurent()))
        .then(|| m.map_coeffs(|c| c.as_laurent().cloned().unwrap_or_default()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse::parse_value;

    #[test]
    fn laurent_schema() {
        let l = LaurentT::from_int_terms(&[(-8, -1), (0, 2)]);
        assert_eq!(laurent_to_json(&l), json!({"-8": "-1", "0": "2"}));
        assert_eq!(laurent_from_json(&laurent_to_json(&l)).unwrap(), l);
    }

    #[test]
    fn element_round_trip() {
        for src in [
            "T(1,-5) - t^-8*T(1,-1) + t^-3*T(0,5) - t*T(0,1) + 3/2",
            "l^2*m^-3 - t^4*m",
            "t^6*S(6) - t^2*S(0) + t^4*S(4)*y - S(0)*y",
        ] {
            let v = parse_value(src).unwrap();
            let j = value_to_json(&v);
            let back = element_from_json(&j).unwrap();
            assert_eq!(element_to_json(&back), j);
        }
    }

    #[test]
    fn fraction_coefficient() {
        let c = RatFuncT::new(LaurentT::one(), LaurentT::from_int_terms(&[(0, 1), (4, 1)])).unwrap();
        let j = coeff_to_json(&c);
        assert!(j.get("num").is_some());
        assert_eq!(coeff_from_json(&j).unwrap(), c);
    }

    #[test]
    fn rejects_unknown_type() {
        assert!(element_from_json(&json!({"type": "nope"})).is_err());
    }
}
