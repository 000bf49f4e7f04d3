//! JSON form: `{"cells": {"0": [...], "1": [...]}, "faces": {"c": [[lo, hi], ...]}}`
//! with one `[d_i^0, d_i^1]` pair per direction. Each face is `[base, word]`,
//! `word` a list of letters `"s<i>"` (codegeneracy) and `"g<i>"` (coconnection)
//! read as `base ∘ w_1 ∘ w_2 ∘ …`.

use serde_json::{json, Map, Value};

use super::map::{Coord, CubeMap};
use super::set::{Cubical, CubeRef, CubicalSet, CubicalSetBuilder};
use super::CubicalError;

fn schema(msg: String) -> CubicalError {
    CubicalError::Schema(msg)
}

pub fn from_json_str(text: &str) -> Result<CubicalSet, CubicalError> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| schema(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    from_json(&v)
}

pub fn from_json(v: &Value) -> Result<CubicalSet, CubicalError> {
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
    let mut b = CubicalSetBuilder::new();
    for (d, list) in by_dim {
        for name in list {
            let name = name.as_str().ok_or_else(|| schema(format!("cells.{d}: names must be strings")))?;
            let fs = if d == 0 {
                vec![]
            } else {
                let arr = faces
                    .get(name)
                    .and_then(Value::as_array)
                    .ok_or_else(|| CubicalError::MissingFace(format!("faces.{name} is missing")))?;
                arr.iter()
                    .enumerate()
                    .map(|(i, p)| {
                        let pair = p
                            .as_array()
                            .filter(|p| p.len() == 2)
                            .ok_or_else(|| schema(format!("faces.{name}[{i}]: expected [lower, upper]")))?;
                        Ok((
                            parse_face(&b, name, i, d - 1, &pair[0])?,
                            parse_face(&b, name, i, d - 1, &pair[1])?,
                        ))
                    })
                    .collect::<Result<Vec<_>, CubicalError>>()?
            };
            b.add(name, d, fs)?;
        }
    }
    b.build()
}

fn parse_face(b: &CubicalSetBuilder, name: &str, i: usize, dim: usize, f: &Value) -> Result<CubeRef, CubicalError> {
    let at = || format!("faces.{name}[{i}]");
    let pair = f.as_array().filter(|p| p.len() == 2).ok_or_else(|| schema(format!("{}: expected [base, [letters]]", at())))?;
    let base = pair[0].as_str().ok_or_else(|| schema(format!("{}: base must be a string", at())))?;
    let cell = b.lookup(base).ok_or_else(|| CubicalError::MissingFace(format!("{}: unknown cell '{base}'", at())))?;
    let letters = pair[1].as_array().ok_or_else(|| schema(format!("{}: word must be an array", at())))?;
    let mut map = CubeMap::identity(cell.dim as usize);
    for l in letters {
        let s = l.as_str().ok_or_else(|| schema(format!("{}: letters must be strings", at())))?;
        let bad = || schema(format!("{}: bad letter '{s}'", at()));
        let (kind, idx) = s.split_at(1.min(s.len()));
        let idx: usize = idx.parse().map_err(|_| bad())?;
        let t = map.source;
        let letter = match kind {
            "s" if idx <= t => CubeMap::codegeneracy(t + 1, idx),
            "g" if idx < t => CubeMap::coconnection(t, idx),
            _ => return Err(bad()),
        };
        map = map.compose(&letter);
    }
    if map.source != dim {
        return Err(schema(format!("{}: face has dimension {}, expected {dim}", at(), map.source)));
    }
    Ok(CubeRef { base: cell, map })
}

/// Writes a degeneracy as a word of codegeneracies and coconnections.
pub fn degeneracy_word(map: &CubeMap) -> Vec<String> {
    let mut word = Vec::new();
    let mut f = map.clone();
    loop {
        let used: Vec<u8> = f.coords.iter().flat_map(|c| if let Coord::Or(b) = c { b.clone() } else { vec![] }).collect();
        if let Some(j) = (0..f.source as u8).rev().find(|j| !used.contains(j)) {
            // f = f' ∘ σ_j
            let coords = f
                .coords
                .iter()
                .map(|c| match c {
                    Coord::Or(b) => Coord::Or(b.iter().map(|&s| if s > j { s - 1 } else { s }).collect()),
                    c => c.clone(),
                })
                .collect();
            word.push(format!("s{j}"));
            f = CubeMap { source: f.source - 1, coords };
            continue;
        }
        let Some(pos) = f.coords.iter().position(|c| matches!(c, Coord::Or(b) if b.len() > 1)) else { break };
        // f = f' ∘ γ_i merging the first two coordinates of the block
        let Coord::Or(b) = &f.coords[pos] else { unreachable!() };
        let i = b[0];
        let coords = f
            .coords
            .iter()
            .map(|c| match c {
                Coord::Or(b) => {
                    let mut nb: Vec<u8> = b.iter().map(|&s| if s > i { s - 1 } else { s }).collect();
                    nb.dedup();
                    Coord::Or(nb)
                }
                c => c.clone(),
            })
            .collect();
        word.push(format!("g{i}"));
        f = CubeMap { source: f.source - 1, coords };
    }
    word.reverse();
    word
}

pub fn to_json(y: &CubicalSet) -> Value {
    let mut cells = Map::new();
    let mut faces = Map::new();
    for d in 0..=y.top_dim().unwrap_or(0) {
        let cs = y.cells(d);
        cells.insert(d.to_string(), Value::from(cs.iter().map(|c| y.name(*c).to_string()).collect::<Vec<_>>()));
        for c in cs.iter().filter(|_| d > 0) {
            let fs: Vec<Value> = (0..d)
                .map(|i| {
                    let f = |e| {
                        let r = y.cell_face(*c, i, e);
                        json!([y.name(r.base), degeneracy_word(&r.map)])
                    };
                    json!([f(false), f(true)])
                })
                .collect();
            faces.insert(y.name(*c).to_string(), Value::from(fs));
        }
    }
    json!({"cells": cells, "faces": faces})
}

#[cfg(test)]
mod tests {
    use super::*;

    const TORUS_FREE_SQUARE: &str = r#"{
        "cells": {"0": ["*"], "1": ["a", "b"], "2": ["t", "c"]},
        "faces": {
            "a": [[["*", []], ["*", []]]],
            "b": [[["*", []], ["*", []]]],
            "t": [[["b", []], ["b", []]], [["a", []], ["a", []]]],
            "c": [[["*", ["s0"]], ["a", []]], [["*", ["s0"]], ["a", []]]]
        }
    }"#;

    #[test]
    fn round_trip() {
        let y = from_json_str(TORUS_FREE_SQUARE).unwrap();
        assert_eq!((y.count(0), y.count(1), y.count(2)), (1, 2, 2));
        let again = from_json(&to_json(&y)).unwrap();
        assert_eq!(to_json(&again), to_json(&y));
    }

    #[test]
    fn words_factor_maps() {
        for m in [
            CubeMap::coconnection(2, 0).compose(&CubeMap::codegeneracy(4, 1)),
            CubeMap::codegeneracy(2, 0).compose(&CubeMap::coconnection(2, 1)),
            CubeMap::identity(2),
        ] {
            let w = degeneracy_word(&m);
            let mut g = CubeMap::identity(m.target());
            for l in &w {
                let idx: usize = l[1..].parse().unwrap();
                let t = g.source;
                g = g.compose(&if l.starts_with('s') { CubeMap::codegeneracy(t + 1, idx) } else { CubeMap::coconnection(t, idx) });
            }
            assert_eq!(g, m, "{w:?}");
        }
    }

    #[test]
    fn bad_identity_rejected() {
        let good = r#"{
            "cells": {"0": ["x", "y"], "1": ["a"], "2": ["t"]},
            "faces": {
                "a": [[["x", []], ["y", []]]],
                "t": [[["a", []], ["a", []]], [["x", ["s0"]], ["y", ["s0"]]]]
            }
        }"#;
        assert!(from_json_str(good).is_ok());
        let bad = good.replace(r#"[["x", ["s0"]], ["y", ["s0"]]]"#, r#"[["y", ["s0"]], ["x", ["s0"]]]"#);
        assert!(matches!(from_json_str(&bad), Err(CubicalError::Identity(_))));
        let missing = good.replace(r#""a": [[["x", []], ["y", []]]],"#, "");
        assert!(matches!(from_json_str(&missing), Err(CubicalError::MissingFace(_))));
    }
}
