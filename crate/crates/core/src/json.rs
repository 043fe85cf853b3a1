//! JSON interchange for G-sets, spans and span morphisms.
//!
//! ```text
//! gset:     { "group": "<spec>", "size": n, "generator_actions": [[..], ..] }
//! span:     { "group": "<spec>", "source": gset, "apex": gset, "target": gset,
//!             "left": [..], "right": [..] }
//! morphism: { "source"?: gset, "target"?: gset, "terms": [{ "coeff": c, "span": span }] }
//! ```
//!
//! A nested G-set may omit `"group"` and inherits the enclosing one.
//! Coefficients are JSON integers or rational strings such as `"-3/2"`.
//! A bare span is accepted wherever a morphism is expected.

use std::collections::HashMap;

use serde_json::{json, Map, Value};

use crate::burnside::{Span, SpanMorphism};
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Group};
use crate::gsets::GSet;
use crate::scalar::{format_rational, parse_rational, Coefficient, Rational};

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Resolves group specs so that every object in one document shares a group.
#[derive(Default)]
pub struct GroupCache {
    groups: HashMap<String, Group>,
}

impl GroupCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, group: &Group) {
        self.groups.insert(group.spec().to_string(), group.clone());
    }

    pub fn get(&mut self, spec: &str) -> Result<Group> {
        if let Some(g) = self.groups.get(spec) {
            return Ok(g.clone());
        }
        let g = FiniteGroup::from_spec(spec)?;
        self.groups.insert(spec.to_string(), g.clone());
        Ok(g)
    }

    fn resolve(&mut self, obj: &Map<String, Value>, inherited: Option<&Group>) -> Result<Group> {
        match obj.get("group") {
            Some(Value::String(s)) => {
                let g = self.get(s)?;
                if let Some(h) = inherited {
                    if h.spec() != g.spec() {
                        return Err(perr(format!("group '{s}' differs from enclosing group '{}'", h.spec())));
                    }
                    return Ok(h.clone());
                }
                Ok(g)
            }
            Some(_) => Err(perr("\"group\" must be a string")),
            None => inherited.cloned().ok_or_else(|| perr("missing \"group\"")),
        }
    }
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| perr(format!("{what} must be a JSON object")))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| perr(format!("missing \"{key}\"")))
}

fn index_array(v: &Value, key: &str) -> Result<Vec<usize>> {
    let bad = || perr(format!("\"{key}\" must be an array of nonnegative integers"));
    v.as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|x| x.as_u64().map(|n| n as usize).ok_or_else(bad))
        .collect()
}

pub fn parse_coefficient(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => n.as_i64().map(Rational::from_i64).ok_or_else(|| perr(format!("coefficient {n} is not an integer"))),
        Value::String(s) => parse_rational(s).map_err(|_| perr(format!("invalid coefficient '{s}'"))),
        _ => Err(perr("a coefficient must be an integer or a rational string")),
    }
}

pub fn parse_gset(v: &Value, cache: &mut GroupCache, inherited: Option<&Group>) -> Result<GSet> {
    let obj = as_object(v, "a G-set")?;
    let group = cache.resolve(obj, inherited)?;
    let size = field(obj, "size")?.as_u64().ok_or_else(|| perr("\"size\" must be a nonnegative integer"))? as usize;
    let actions = field(obj, "generator_actions")?
        .as_array()
        .ok_or_else(|| perr("\"generator_actions\" must be an array"))?
        .iter()
        .map(|a| index_array(a, "generator_actions"))
        .collect::<Result<Vec<_>>>()?;
    GSet::from_generator_actions(group, size, &actions)
}

pub fn parse_span(v: &Value, cache: &mut GroupCache, inherited: Option<&Group>) -> Result<Span> {
    let obj = as_object(v, "a span")?;
    let group = cache.resolve(obj, inherited)?;
    let g = Some(&group);
    let source = parse_gset(field(obj, "source")?, cache, g)?;
    let apex = parse_gset(field(obj, "apex")?, cache, g)?;
    let target = parse_gset(field(obj, "target")?, cache, g)?;
    let left = index_array(field(obj, "left")?, "left")?;
    let right = index_array(field(obj, "right")?, "right")?;
    Span::new(source, apex, target, left, right)
}

pub fn parse_morphism(v: &Value, cache: &mut GroupCache, inherited: Option<&Group>) -> Result<SpanMorphism<Rational>> {
    let obj = as_object(v, "a morphism")?;
    let Some(terms) = obj.get("terms") else {
        let span = parse_span(v, cache, inherited)?;
        return Ok(SpanMorphism::from_span(&span, Rational::from_i64(1)));
    };
    let group = match obj.get("group") {
        Some(_) => Some(cache.resolve(obj, inherited)?),
        None => inherited.cloned(),
    };
    let terms = terms
        .as_array()
        .ok_or_else(|| perr("\"terms\" must be an array"))?
        .iter()
        .map(|t| {
            let t = as_object(t, "a term")?;
            let coeff = parse_coefficient(field(t, "coeff")?)?;
            let span = parse_span(field(t, "span")?, cache, group.as_ref())?;
            Ok((coeff, span))
        })
        .collect::<Result<Vec<_>>>()?;
    let group = group.or_else(|| terms.first().map(|(_, s)| s.group().clone()));
    let endpoint = |key: &str, cache: &mut GroupCache, pick: fn(&Span) -> &GSet| -> Result<GSet> {
        match obj.get(key) {
            Some(x) => parse_gset(x, cache, group.as_ref()),
            None => terms.first().map(|(_, s)| pick(s).clone()).ok_or_else(|| perr(format!("an empty morphism needs \"{key}\""))),
        }
    };
    let source = endpoint("source", cache, Span::source)?;
    let target = endpoint("target", cache, Span::target)?;
    SpanMorphism::from_terms(&source, &target, &terms)
}

pub fn parse_morphism_str(s: &str, default_group: Option<&Group>) -> Result<SpanMorphism<Rational>> {
    let v: Value = serde_json::from_str(s).map_err(|e| perr(format!("invalid JSON: {e}")))?;
    let mut cache = GroupCache::new();
    if let Some(g) = default_group {
        cache.insert(g);
    }
    parse_morphism(&v, &mut cache, default_group)
}

pub fn gset_to_json(t: &GSet) -> Value {
    json!({ "group": t.group().spec(), "size": t.size(), "generator_actions": t.generator_actions() })
}

pub fn span_to_json(s: &Span) -> Value {
    json!({
        "group": s.group().spec(),
        "source": gset_to_json(s.source()),
        "apex": gset_to_json(s.apex()),
        "target": gset_to_json(s.target()),
        "left": s.left(),
        "right": s.right(),
    })
}

pub fn morphism_to_json(f: &SpanMorphism<Rational>) -> Value {
    let terms: Vec<Value> =
        f.terms().iter().map(|(c, s)| json!({ "coeff": format_rational(c), "span": span_to_json(s) })).collect();
    json!({
        "group": f.group().spec(),
        "source": gset_to_json(f.source()),
        "target": gset_to_json(f.target()),
        "terms": terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::cyclic_group;

    #[test]
    fn gset_round_trip() {
        let g = cyclic_group(4).unwrap();
        let t = GSet::free(g.clone()).disjoint_union(&GSet::point(g.clone())).unwrap();
        let v = gset_to_json(&t);
        let mut cache = GroupCache::new();
        let back = parse_gset(&v, &mut cache, None).unwrap();
        assert_eq!(back.generator_actions(), t.generator_actions());
        assert_eq!(back.group().spec(), "cyclic:4");
    }

    #[test]
    fn span_and_morphism_round_trip() {
        let doc = r#"{
            "group": "cyclic:2",
            "source": {"size": 2, "generator_actions": [[1, 0]]},
            "apex": {"size": 2, "generator_actions": [[1, 0]]},
            "target": {"size": 2, "generator_actions": [[1, 0]]},
            "left": [0, 1], "right": [1, 0]
        }"#;
        let f = parse_morphism_str(doc, None).unwrap();
        assert_eq!(f.num_terms(), 1);
        let v = morphism_to_json(&f.scale(&parse_rational("-3/2").unwrap()));
        let g = parse_morphism_str(&v.to_string(), None).unwrap();
        assert_eq!(g, f.scale(&parse_rational("-3/2").unwrap()));
        assert_eq!(v["terms"][0]["coeff"], "-3/2");
    }

    #[test]
    fn empty_morphism_needs_endpoints() {
        assert!(matches!(parse_morphism_str(r#"{"group":"cyclic:2","terms":[]}"#, None), Err(Error::Parse(_))));
        let f = parse_morphism_str(
            r#"{"group":"cyclic:2","terms":[],"source":{"size":1,"generator_actions":[[0]]},"target":{"size":1,"generator_actions":[[0]]}}"#,
            None,
        )
        .unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn malformed_documents() {
        for doc in [
            "not json",
            r#"{"terms": 3}"#,
            r#"{"group":"cyclic:2","source":{"size":1,"generator_actions":[[0]]}}"#,
            r#"{"group":"cyclic:2","terms":[{"coeff":1.5,"span":{}}]}"#,
        ] {
            assert!(parse_morphism_str(doc, None).is_err(), "{doc}");
        }
        let bad_map = r#"{"group":"cyclic:2","source":{"size":2,"generator_actions":[[1,0]]},
            "apex":{"size":2,"generator_actions":[[1,0]]},"target":{"size":1,"generator_actions":[[0]]},
            "left":[0,0],"right":[0,0]}"#;
        assert!(matches!(parse_morphism_str(bad_map, None), Err(Error::NotEquivariant(_))));
        assert_eq!(parse_coefficient(&json!(4)).unwrap(), Rational::from_i64(4));
    }
}
