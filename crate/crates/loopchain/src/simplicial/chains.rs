//! Normalized chains, the Alexander–Whitney coalgebra and pushforward.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{sign, Cell, ChainComplex, FreeElement};

use super::set::{Simplicial, SimplexRef, SimplicialSet};
use super::SimplicialError;

/// ∂ of a nondegenerate cell; degenerate faces drop out.
pub fn boundary<S: Simplicial + ?Sized>(x: &S, c: Cell) -> FreeElement<Cell> {
    let mut out = FreeElement::zero();
    if c.dim == 0 {
        return out;
    }
    for i in 0..=c.dim as usize {
        if let Some(f) = x.cell_face(c, i).as_cell() {
            out.add_term(f, sign(i as i64));
        }
    }
    out
}

pub fn boundary_of<S: Simplicial + ?Sized>(x: &S, e: &FreeElement<Cell>) -> FreeElement<Cell> {
    e.map(|c| boundary(x, *c))
}

/// Normalized chain complex in degrees `0..=max_degree`.
pub fn normalized_chains<S>(x: &S, max_degree: usize) -> ChainComplex<Cell>
where
    S: Simplicial + Clone + Send + Sync + 'static,
{
    let basis: BTreeMap<i64, Vec<Cell>> = (0..=max_degree).map(|d| (d as i64, x.cells(d))).collect();
    let complete = x.top_dim().is_some_and(|t| t <= max_degree);
    let xs = x.clone();
    ChainComplex::new(basis, Arc::new(move |c: &Cell| boundary(&xs, *c)), 0, max_degree as i64, complete)
}

/// Δ(σ) = Σ_i σ|[0..i] ⊗ σ|[i..n], with degenerate factors dropped.
pub fn aw_cell<S: Simplicial + ?Sized>(x: &S, c: Cell) -> FreeElement<(Cell, Cell)> {
    let r = SimplexRef::nondegenerate(c);
    let n = c.dim as usize;
    let mut out = FreeElement::zero();
    for i in 0..=n {
        let (Some(a), Some(b)) = (x.interval(&r, 0, i).as_cell(), x.interval(&r, i, n).as_cell()) else { continue };
        out.add_term((a, b), 1);
    }
    out
}

pub fn aw_coproduct<S: Simplicial + ?Sized>(x: &S, e: &FreeElement<Cell>) -> FreeElement<(Cell, Cell)> {
    e.map(|c| aw_cell(x, *c))
}

/// Iterated coproduct into `r` factors: front/back faces at every cut point.
pub fn aw_iterated<S: Simplicial + ?Sized>(x: &S, c: Cell, r: usize) -> FreeElement<Vec<Cell>> {
    let n = c.dim as usize;
    let root = SimplexRef::nondegenerate(c);
    let mut out = FreeElement::zero();
    if r == 0 {
        return out;
    }
    let mut cuts = vec![0usize; r + 1];
    cuts[r] = n;
    fn rec<S: Simplicial + ?Sized>(
        x: &S,
        root: &SimplexRef,
        cuts: &mut Vec<usize>,
        k: usize,
        out: &mut FreeElement<Vec<Cell>>,
    ) {
        let r = cuts.len() - 1;
        if k == r {
            let mut w = Vec::with_capacity(r);
            for j in 0..r {
                match x.interval(root, cuts[j], cuts[j + 1]).as_cell() {
                    Some(c) => w.push(c),
                    None => return,
                }
            }
            out.add_term(w, 1);
            return;
        }
        for v in cuts[k - 1]..=cuts[r] {
            cuts[k] = v;
            rec(x, root, cuts, k + 1, out);
        }
    }
    rec(x, &root, &mut cuts, 1, &mut out);
    out
}

/// ε: 1 on vertices, 0 elsewhere.
pub fn aw_counit(e: &FreeElement<Cell>) -> i64 {
    e.iter().filter(|(c, _)| c.dim == 0).map(|(_, v)| v).sum()
}

/// Map of simplicial sets given on nondegenerate cells.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    pub source: SimplicialSet,
    pub target: SimplicialSet,
    images: Vec<Vec<SimplexRef>>,
}

impl SimplicialMap {
    /// `image(c)` for every nondegenerate source cell; checks f∘d_i = d_i∘f.
    pub fn new<F: FnMut(Cell) -> Option<SimplexRef>>(
        source: &SimplicialSet,
        target: &SimplicialSet,
        mut image: F,
    ) -> Result<SimplicialMap, SimplicialError> {
        let top = source.top_dim().unwrap_or(0);
        let mut images = Vec::new();
        for d in 0..=top {
            let mut row = Vec::new();
            for c in source.cells(d) {
                let img = image(c).ok_or_else(|| {
                    SimplicialError::PartialMap(format!("no image for '{}'", source.name(c)))
                })?;
                if img.dim() != d {
                    return Err(SimplicialError::PartialMap(format!("image of '{}' has wrong dimension", source.name(c))));
                }
                row.push(img);
            }
            images.push(row);
        }
        let f = SimplicialMap { source: source.clone(), target: target.clone(), images };
        for d in 1..=top {
            for c in source.cells(d) {
                for i in 0..=d {
                    let lhs = f.image(&source.cell_face(c, i));
                    let rhs = target.face(&f.image(&SimplexRef::nondegenerate(c)), i);
                    if lhs != rhs {
                        return Err(SimplicialError::PartialMap(format!(
                            "map does not commute with d_{i} on '{}'",
                            source.name(c)
                        )));
                    }
                }
            }
        }
        Ok(f)
    }

    pub fn image(&self, r: &SimplexRef) -> SimplexRef {
        let img = &self.images[r.base.dim as usize][r.base.id as usize];
        self.target.apply(img, &r.surj)
    }

    pub fn on_cell(&self, c: Cell) -> Option<Cell> {
        self.image(&SimplexRef::nondegenerate(c)).as_cell()
    }

    /// Induced chain map; degenerate images go to zero.
    pub fn pushforward(&self, e: &FreeElement<Cell>) -> FreeElement<Cell> {
        e.map_keys(|c| self.on_cell(*c).map(|d| (d, 1)))
    }
}

/// Pushforward along the characteristic map Δⁿ → X of `sigma`, for chains
/// on the standard simplex in mask encoding.
pub fn characteristic<S: Simplicial + ?Sized>(x: &S, sigma: &SimplexRef, std_cell: Cell) -> Option<Cell> {
    let theta = super::standard::verts(std_cell.id);
    x.apply(sigma, &theta).as_cell()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard::{vertex_cell, StandardSimplex};

    #[test]
    fn aw_on_two_simplex() {
        let d = StandardSimplex::new(2);
        let a = aw_cell(&d, d.top());
        let v = vertex_cell;
        assert_eq!(a.len(), 3);
        assert_eq!(a.coeff(&(v(&[0]), v(&[0, 1, 2]))), 1);
        assert_eq!(a.coeff(&(v(&[0, 1]), v(&[1, 2]))), 1);
        assert_eq!(a.coeff(&(v(&[0, 1, 2]), v(&[2]))), 1);
    }

    #[test]
    fn iterated_matches_nested() {
        let d = StandardSimplex::new(3);
        let three = aw_iterated(&d, d.top(), 3);
        // (Δ ⊗ id)Δ expanded by hand
        let mut nested = FreeElement::zero();
        for ((a, b), c) in aw_cell(&d, d.top()).iter().map(|(k, c)| (*k, c)) {
            for ((a1, a2), e) in aw_cell(&d, a).iter().map(|(k, c)| (*k, c)) {
                nested.add_term(vec![a1, a2, b], c * e);
            }
        }
        assert_eq!(three, nested);
    }
}
