//! JSON form: `{"cells": {"0": [...], "1": [...]}, "faces": {"a": [["*", []], ["*", []]]}}`.
//! Face `i` of a cell is `[base, degeneracies]` with a strictly decreasing degeneracy word.

use serde_json::{json, Map, Value};

use super::set::{Simplicial, SimplexRef, SimplicialSet, SimplicialSetBuilder};
use super::SimplicialError;

fn schema(msg: String) -> SimplicialError {
    SimplicialError::Schema(msg)
}

pub fn from_json_str(text: &str) -> Result<SimplicialSet, SimplicialError> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| schema(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    from_json(&v)
}

pub fn from_json(v: &Value) -> Result<SimplicialSet, SimplicialError> {
    let cells = v.get("cells").and_then(Value::as_object).ok_or_else(|| schema("missing object field 'cells'".into()))?;
    let empty = Map::new();
    let faces = match v.get("faces") {
        None => &empty,
        Some(f) => f.as_object().ok_or_else(|| schema("field 'faces' must be an object".into()))?,
    };
    let mut by_dim: Vec<(usize, &Vec<Value>)> = Vec::new();
    for (k, list) in cells {
        let d: usize = k.parse().map_err(|_| schema(format!("cells: key '{k}' is not a dimension")))?;
        let list = list.as_array().ok_or_else(|| schema(format!("cells.{k} must be an array")))?;
        by_dim.push((d, list));
    }
    by_dim.sort_by_key(|(d, _)| *d);
    let mut b = SimplicialSetBuilder::new();
    for (d, list) in by_dim {
        for name in list {
            let name = name.as_str().ok_or_else(|| schema(format!("cells.{d}: names must be strings")))?;
            let fs = if d == 0 {
                vec![]
            } else {
                let arr = faces
                    .get(name)
                    .and_then(Value::as_array)
                    .ok_or_else(|| SimplicialError::MissingFace(format!("faces.{name} is missing")))?;
                arr.iter()
                    .enumerate()
                    .map(|(i, f)| parse_face(&b, name, i, f))
                    .collect::<Result<Vec<_>, _>>()?
            };
            b.add(name, d, fs)?;
        }
    }
    b.build()
}

fn parse_face(b: &SimplicialSetBuilder, name: &str, i: usize, f: &Value) -> Result<SimplexRef, SimplicialError> {
    let at = || format!("faces.{name}[{i}]");
    let pair = f.as_array().filter(|p| p.len() == 2).ok_or_else(|| schema(format!("{}: expected [base, [indices]]", at())))?;
    let base = pair[0].as_str().ok_or_else(|| schema(format!("{}: base must be a string", at())))?;
    let cell = b.lookup(base).ok_or_else(|| SimplicialError::MissingFace(format!("{}: unknown cell '{base}'", at())))?;
    let word = pair[1]
        .as_array()
        .ok_or_else(|| schema(format!("{}: degeneracies must be an array", at())))?
        .iter()
        .map(|x| x.as_u64().map(|u| u as usize).ok_or_else(|| schema(format!("{}: bad degeneracy index", at()))))
        .collect::<Result<Vec<_>, _>>()?;
    SimplexRef::from_degeneracies(cell, &word).map_err(|e| schema(format!("{}: {e}", at())))
}

pub fn to_json(x: &SimplicialSet) -> Value {
    let mut cells = Map::new();
    let mut faces = Map::new();
    for d in 0..=x.top_dim().unwrap_or(0) {
        let cs = x.cells(d);
        cells.insert(d.to_string(), Value::from(cs.iter().map(|c| x.name(*c).to_string()).collect::<Vec<_>>()));
        if d > 0 {
            for c in cs {
                let fs: Vec<Value> = (0..=d)
                    .map(|i| {
                        let f = x.cell_face(c, i);
                        json!([x.name(f.base), f.degeneracies()])
                    })
                    .collect();
                faces.insert(x.name(c).to_string(), Value::from(fs));
            }
        }
    }
    json!({ "cells": cells, "faces": faces })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::models;

    #[test]
    fn round_trip_rp2() {
        let x = models::rp2();
        let y = from_json(&to_json(&x)).unwrap();
        assert_eq!(to_json(&x), to_json(&y));
    }

    #[test]
    fn rejects_bad_identities() {
        // d₀d₂ = d₁d₀ fails: a 2-cell whose edges disagree on a vertex
        let text = r#"{"cells": {"0": ["p", "q"], "1": ["e"], "2": ["t"]},
            "faces": {"e": [["q", []], ["p", []]], "t": [["e", []], ["e", []], ["e", []]]}}"#;
        assert!(matches!(from_json_str(text), Err(SimplicialError::Identity(_))));
    }

    #[test]
    fn reports_missing_face() {
        let text = r#"{"cells": {"0": ["p"], "1": ["e"]}, "faces": {}}"#;
        assert!(matches!(from_json_str(text), Err(SimplicialError::MissingFace(_))));
    }
}
