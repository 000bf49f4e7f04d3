//! Small fixture simplicial sets.

use crate::algebra::Cell;

use super::chains::SimplicialMap;
use super::set::{Simplicial, SimplexRef, SimplicialSet, SimplicialSetBuilder};
use super::standard::{verts, StandardSimplex};
use super::SimplicialError;

fn point_degeneracy(dim: usize) -> SimplexRef {
    SimplexRef { base: Cell::new(0, 0), surj: vec![0; dim + 1] }
}

pub fn simplex_name(c: Cell) -> String {
    let vs: Vec<String> = verts(c.id).iter().map(u32::to_string).collect();
    format!("[{}]", vs.join(","))
}

/// Δⁿ with cells named by their vertex lists, e.g. `[0,2]`.
pub fn simplex(n: usize) -> SimplicialSet {
    let d = StandardSimplex::new(n);
    let mut b = SimplicialSetBuilder::new();
    for dim in 0..=n {
        for c in d.cells(dim) {
            let faces = if dim == 0 {
                vec![]
            } else {
                (0..=dim)
                    .map(|i| {
                        let f = d.cell_face(c, i).base;
                        SimplexRef::nondegenerate(b.lookup(&simplex_name(f)).expect("faces come first"))
                    })
                    .collect()
            };
            b.add(&simplex_name(c), dim, faces).expect("standard simplex is valid");
        }
    }
    b.build().expect("standard simplex is valid")
}

/// Δ[n]/∂Δ[n]: one vertex `*` and one n-cell `σ` with all faces degenerate.
pub fn sphere(n: usize) -> SimplicialSet {
    assert!(n >= 1, "sphere needs n ≥ 1");
    let mut b = SimplicialSetBuilder::new();
    b.add("*", 0, vec![]).unwrap();
    b.add("σ", n, (0..=n).map(|_| point_degeneracy(n - 1)).collect()).unwrap();
    b.build().unwrap()
}

pub fn circle() -> SimplicialSet {
    sphere(1)
}

/// Reduced RP²: one vertex, edges a, b, and triangles U, L with
/// (d₀,d₁,d₂) U = (a, b, s₀*) and L = (a, s₀*, b).
pub fn rp2() -> SimplicialSet {
    let mut b = SimplicialSetBuilder::new();
    let pt = b.add("*", 0, vec![]).unwrap();
    let loop_faces = || vec![SimplexRef::nondegenerate(pt), SimplexRef::nondegenerate(pt)];
    let a = SimplexRef::nondegenerate(b.add("a", 1, loop_faces()).unwrap());
    let bb = SimplexRef::nondegenerate(b.add("b", 1, loop_faces()).unwrap());
    let e = point_degeneracy(1);
    b.add("U", 2, vec![a.clone(), bb.clone(), e.clone()]).unwrap();
    b.add("L", 2, vec![a, e, bb]).unwrap();
    b.build().unwrap()
}

/// The quotient Δ[n] → Δ[n]/∂Δ[n].
pub fn sphere_quotient(n: usize) -> SimplicialMap {
    let src = simplex(n);
    let tgt = sphere(n);
    let sigma = tgt.cell("σ").unwrap();
    SimplicialMap::new(&src, &tgt, |c| {
        Some(if c.dim as usize == n { SimplexRef::nondegenerate(sigma) } else { point_degeneracy(c.dim as usize) })
    })
    .expect("quotient map is simplicial")
}

/// Parses `point`, `circle`, `rp2`, `simplex:<n>`, `sphere:<n>`.
pub fn model(name: &str) -> Result<SimplicialSet, SimplicialError> {
    let bad = || SimplicialError::Schema(format!("unknown model '{name}'"));
    match name {
        "point" => Ok(simplex(0)),
        "circle" => Ok(circle()),
        "rp2" => Ok(rp2()),
        _ => {
            let (kind, n) = name.split_once(':').ok_or_else(bad)?;
            let n: usize = n.parse().map_err(|_| bad())?;
            match kind {
                "simplex" if n <= 8 => Ok(simplex(n)),
                "sphere" if (1..=16).contains(&n) => Ok(sphere(n)),
                _ => Err(bad()),
            }
        }
    }
}
