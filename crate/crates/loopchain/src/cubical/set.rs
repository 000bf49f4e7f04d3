//! Cubical sets with connections.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{Cell, Graded, Key};

use super::map::CubeMap;
use super::CubicalError;

/// Presheaf on the cube category, seen through its nondegenerate cells.
///
/// `Ref` is an arbitrary (possibly degenerate) cube; `act` precomposes it
/// with a cube-category morphism and `normal_form` splits off its degeneracy.
pub trait Cubical {
    type Cell: Key;
    type Ref: Clone + PartialEq + fmt::Debug;

    /// Nondegenerate cells of a dimension, in a fixed order.
    fn cells(&self, dim: usize) -> Vec<Self::Cell>;
    /// Largest dimension with cells; `None` when unbounded.
    fn top_dim(&self) -> Option<usize>;
    fn identity(&self, c: &Self::Cell) -> Self::Ref;
    /// `r ∘ θ`.
    fn act(&self, r: &Self::Ref, theta: &CubeMap) -> Self::Ref;
    /// `r = base ∘ g` with `base` nondegenerate and `g` a degeneracy.
    fn normal_form(&self, r: &Self::Ref) -> (Self::Cell, CubeMap);

    fn as_cell(&self, r: &Self::Ref) -> Option<Self::Cell> {
        let (c, g) = self.normal_form(r);
        g.is_identity().then_some(c)
    }

    /// `c ∘ θ` when it is nondegenerate.
    fn pull(&self, c: &Self::Cell, theta: &CubeMap) -> Option<Self::Cell> {
        self.as_cell(&self.act(&self.identity(c), theta))
    }

    /// d_i^ε c (0-based direction) when nondegenerate.
    fn face(&self, c: &Self::Cell, i: usize, eps: bool) -> Option<Self::Cell> {
        let n = c.degree() as usize;
        self.pull(c, &CubeMap::coface(n, i, eps))
    }
}

/// A cube written as `base ∘ map` with `base` nondegenerate and `map` a
/// degeneracy (no constant coordinates). Unique by the Eilenberg–Zilber property.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CubeRef {
    pub base: Cell,
    pub map: CubeMap,
}

impl CubeRef {
    pub fn nondegenerate(base: Cell) -> CubeRef {
        CubeRef { base, map: CubeMap::identity(base.dim as usize) }
    }

    pub fn dim(&self) -> usize {
        self.map.source
    }

    pub fn as_cell(&self) -> Option<Cell> {
        self.map.is_identity().then_some(self.base)
    }
}

/// Normal form of `base ∘ h`, peeling constant coordinates through stored faces.
pub fn restrict_with<F: Fn(Cell, usize, bool) -> CubeRef>(face: &F, base: Cell, h: CubeMap) -> CubeRef {
    match h.first_constant() {
        None => CubeRef { base, map: h },
        Some((j, eps)) => {
            let f = face(base, j, eps);
            let rest = h.without(j);
            restrict_with(face, f.base, f.map.compose(&rest))
        }
    }
}

#[derive(Debug)]
struct Inner {
    names: Vec<Vec<String>>,
    /// `faces[dim][id][i] = (d_i^0, d_i^1)`
    faces: Vec<Vec<Vec<(CubeRef, CubeRef)>>>,
    index: HashMap<String, Cell>,
}

/// Finite cubical set given by nondegenerate cells and their faces. Cheap to clone.
#[derive(Clone, Debug)]
pub struct CubicalSet {
    inner: Arc<Inner>,
}

impl CubicalSet {
    pub fn name(&self, c: Cell) -> &str {
        &self.inner.names[c.dim as usize][c.id as usize]
    }

    pub fn cell(&self, name: &str) -> Option<Cell> {
        self.inner.index.get(name).copied()
    }

    pub fn count(&self, dim: usize) -> usize {
        self.inner.names.get(dim).map_or(0, Vec::len)
    }

    pub fn cell_face(&self, c: Cell, i: usize, eps: bool) -> CubeRef {
        let (a, b) = &self.inner.faces[c.dim as usize][c.id as usize][i];
        if eps {
            b.clone()
        } else {
            a.clone()
        }
    }
}

impl Cubical for CubicalSet {
    type Cell = Cell;
    type Ref = CubeRef;

    fn cells(&self, dim: usize) -> Vec<Cell> {
        (0..self.count(dim)).map(|i| Cell::new(dim, i)).collect()
    }

    fn top_dim(&self) -> Option<usize> {
        Some(self.inner.names.len().saturating_sub(1))
    }

    fn identity(&self, c: &Cell) -> CubeRef {
        CubeRef::nondegenerate(*c)
    }

    fn act(&self, r: &CubeRef, theta: &CubeMap) -> CubeRef {
        restrict_with(&|c, i, e| self.cell_face(c, i, e), r.base, r.map.compose(theta))
    }

    fn normal_form(&self, r: &CubeRef) -> (Cell, CubeMap) {
        (r.base, r.map.clone())
    }
}

/// Incremental construction; faces refer to cells added earlier.
#[derive(Default)]
pub struct CubicalSetBuilder {
    names: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<(CubeRef, CubeRef)>>>,
    index: HashMap<String, Cell>,
}

impl CubicalSetBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn lookup(&self, name: &str) -> Option<Cell> {
        self.index.get(name).copied()
    }

    pub fn add(&mut self, name: &str, dim: usize, faces: Vec<(CubeRef, CubeRef)>) -> Result<Cell, CubicalError> {
        if self.index.contains_key(name) {
            return Err(CubicalError::Schema(format!("duplicate cell '{name}'")));
        }
        if faces.len() != dim {
            return Err(CubicalError::MissingFace(format!(
                "cube '{name}' of dimension {dim} needs {dim} face pairs, got {}",
                faces.len()
            )));
        }
        for (i, (a, b)) in faces.iter().enumerate() {
            for f in [a, b] {
                let known = self.names.get(f.base.dim as usize).map_or(0, Vec::len);
                if f.base.id as usize >= known {
                    return Err(CubicalError::MissingFace(format!("face {i} of '{name}' refers to an unknown cell")));
                }
                if f.dim() + 1 != dim || !f.map.is_valid() || !f.map.is_degeneracy() || f.map.target() != f.base.dim as usize {
                    return Err(CubicalError::Schema(format!("face {i} of '{name}' is malformed")));
                }
            }
        }
        while self.names.len() <= dim {
            self.names.push(Vec::new());
            self.faces.push(Vec::new());
        }
        let cell = Cell::new(dim, self.names[dim].len());
        self.names[dim].push(name.to_string());
        self.faces[dim].push(faces);
        self.index.insert(name.to_string(), cell);
        Ok(cell)
    }

    /// Finishes and checks d_i^ε d_j^η = d_{j−1}^η d_i^ε for i < j.
    pub fn build(self) -> Result<CubicalSet, CubicalError> {
        let y = CubicalSet { inner: Arc::new(Inner { names: self.names, faces: self.faces, index: self.index }) };
        check_identities(&y, y.top_dim().unwrap_or(0)).map(|_| y)
    }
}

/// First violation of the face identities on cells of dimension ≤ `max_dim`.
pub fn check_identities<Y: Cubical>(y: &Y, max_dim: usize) -> Result<(), CubicalError> {
    for n in 2..=max_dim {
        for c in y.cells(n) {
            let r = y.identity(&c);
            for j in 0..n {
                for i in 0..j {
                    for eps in [false, true] {
                        for eta in [false, true] {
                            let a = y.act(&y.act(&r, &CubeMap::coface(n, j, eta)), &CubeMap::coface(n - 1, i, eps));
                            let b = y.act(&y.act(&r, &CubeMap::coface(n, i, eps)), &CubeMap::coface(n - 1, j - 1, eta));
                            if a != b {
                                return Err(CubicalError::Identity(format!(
                                    "d_{i}^{} d_{j}^{} on {c:?}: {a:?} vs {b:?}",
                                    eps as u8, eta as u8
                                )));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
