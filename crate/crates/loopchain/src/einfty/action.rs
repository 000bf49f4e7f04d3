use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{sign, Cell, ChainComplex, FreeElement, Graded, Key};
use crate::cubical::{self, Cubical, StandardCube};
use crate::prop::{evaluate, PsiTable, PropGraph, Standard};
use crate::simplicial::{self, Simplicial, SimplexRef};

use super::EInftyError;

/// A set of cells whose chains are reached from standard simplices or cubes.
pub trait Cellular {
    type Cell: Key;
    /// The kind of standard model (its dimension is ignored).
    fn kind(&self) -> Standard;
    fn cells(&self, dim: usize) -> Vec<Self::Cell>;
    fn top_dim(&self) -> Option<usize>;
    fn boundary(&self, c: &Self::Cell) -> FreeElement<Self::Cell>;
    /// Image of a cell of the standard model of dimension `dim c` under the
    /// characteristic map of `c`, when nondegenerate.
    fn characteristic(&self, c: &Self::Cell, std: Cell) -> Option<Self::Cell>;
}

/// A simplicial set seen through its cells.
#[derive(Clone, Debug)]
pub struct Simp<S>(pub S);

impl<S: Simplicial> Cellular for Simp<S> {
    type Cell = Cell;
    fn kind(&self) -> Standard {
        Standard::Simplex(0)
    }
    fn cells(&self, dim: usize) -> Vec<Cell> {
        self.0.cells(dim)
    }
    fn top_dim(&self) -> Option<usize> {
        self.0.top_dim()
    }
    fn boundary(&self, c: &Cell) -> FreeElement<Cell> {
        simplicial::boundary(&self.0, *c)
    }
    fn characteristic(&self, c: &Cell, std: Cell) -> Option<Cell> {
        simplicial::characteristic(&self.0, &SimplexRef::nondegenerate(*c), std)
    }
}

/// A cubical set seen through its cells.
#[derive(Clone, Debug)]
pub struct Cub<Y>(pub Y);

impl<Y: Cubical> Cellular for Cub<Y> {
    type Cell = Y::Cell;
    fn kind(&self) -> Standard {
        Standard::Cube(0)
    }
    fn cells(&self, dim: usize) -> Vec<Y::Cell> {
        self.0.cells(dim)
    }
    fn top_dim(&self) -> Option<usize> {
        self.0.top_dim()
    }
    fn boundary(&self, c: &Y::Cell) -> FreeElement<Y::Cell> {
        cubical::boundary(&self.0, c)
    }
    fn characteristic(&self, c: &Y::Cell, std: Cell) -> Option<Y::Cell> {
        let n = c.degree() as usize;
        cubical::characteristic(&self.0, c, &StandardCube::new(n), std)
    }
}

/// Chains in degrees `0..=max_degree`.
pub fn chains<X>(x: &X, max_degree: usize) -> ChainComplex<X::Cell>
where
    X: Cellular + Clone + Send + Sync + 'static,
{
    let basis: BTreeMap<i64, Vec<X::Cell>> = (0..=max_degree).map(|d| (d as i64, x.cells(d))).collect();
    let complete = x.top_dim().is_some_and(|t| t <= max_degree);
    let xs = x.clone();
    ChainComplex::new(basis, Arc::new(move |c: &X::Cell| xs.boundary(c)), 0, max_degree as i64, complete)
}

/// Pushes tensor words on the standard model of `c` forward to X; words with
/// a degenerate factor vanish.
pub fn push_word<X: Cellular>(x: &X, c: &X::Cell, w: &FreeElement<Vec<Cell>>) -> FreeElement<Vec<X::Cell>> {
    w.map_keys(|word| {
        let img: Option<Vec<X::Cell>> = word.iter().map(|s| x.characteristic(c, *s)).collect();
        img.map(|v| (v, 1))
    })
}

/// A single-input graph acting on a cell: evaluate on the top cell of the
/// standard model, then push forward.
pub fn um_action<X: Cellular>(x: &X, g: &PropGraph, c: &X::Cell) -> Result<FreeElement<Vec<X::Cell>>, EInftyError> {
    if g.inputs() != 1 {
        return Err(EInftyError::Arity(g.inputs()));
    }
    let model = x.kind().with_dim(c.degree() as usize);
    let v = evaluate(g, &model, &FreeElement::basis(vec![model.top()]))?;
    Ok(push_word(x, c, &v))
}

/// Boundary on tensor words of cells, with Koszul signs.
pub fn tensor_boundary_with<K: Key, F: Fn(&K) -> FreeElement<K>>(d: F, x: &FreeElement<Vec<K>>) -> FreeElement<Vec<K>> {
    let mut out = FreeElement::zero();
    for (w, c) in x.iter() {
        let mut before = 0i64;
        for (i, k) in w.iter().enumerate() {
            for (b, e) in d(k).iter() {
                let mut nw = w.clone();
                nw[i] = b.clone();
                out.add_term(nw, sign(before) * c * e);
            }
            before += k.degree();
        }
    }
    out
}

/// The lifts ψ(e_i) transported to the cells of X.
pub struct Psi<'a, X> {
    pub x: &'a X,
    pub table: &'a PsiTable,
}

impl<'a, X: Cellular> Psi<'a, X> {
    pub fn new(x: &'a X, table: &'a PsiTable) -> Self {
        Psi { x, table }
    }

    pub fn on_cell(&self, i: usize, c: &X::Cell) -> Result<FreeElement<Vec<X::Cell>>, EInftyError> {
        if i > self.table.max_i {
            return Err(EInftyError::TableTooSmall(i));
        }
        let n = c.degree() as usize;
        if n > self.table.max_n() {
            return Err(EInftyError::DimensionTooLarge(n));
        }
        let model = self.x.kind().with_dim(n);
        Ok(push_word(self.x, c, &self.table.apply(&model, i, &FreeElement::basis(model.top()))))
    }

    pub fn apply(&self, i: usize, e: &FreeElement<X::Cell>) -> Result<FreeElement<Vec<X::Cell>>, EInftyError> {
        let mut out = FreeElement::zero();
        for (c, k) in e.iter() {
            out.add_scaled(&self.on_cell(i, c)?, k);
        }
        Ok(out)
    }
}
