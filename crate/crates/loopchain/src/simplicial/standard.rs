//! The standard simplex Δⁿ with cells encoded as vertex bitmasks, and its join.

use crate::algebra::{sign, Cell, FreeElement};

use super::set::{Simplicial, SimplexRef};
use super::SimplicialError;

/// Δⁿ. A cell `Cell { dim, id }` has `id` equal to the bitmask of its vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StandardSimplex {
    pub n: usize,
}

pub fn verts(mask: u32) -> Vec<u32> {
    (0..32).filter(|v| mask >> v & 1 == 1).collect()
}

pub fn mask_cell(mask: u32) -> Cell {
    Cell { dim: mask.count_ones() - 1, id: mask }
}

/// The cell with the given (strictly increasing) vertices.
pub fn vertex_cell(vs: &[u32]) -> Cell {
    mask_cell(vs.iter().fold(0, |m, v| m | 1 << v))
}

impl StandardSimplex {
    pub fn new(n: usize) -> Self {
        assert!(n < 31, "standard simplex too large");
        StandardSimplex { n }
    }

    pub fn top(&self) -> Cell {
        mask_cell((1u32 << (self.n + 1)) - 1)
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.id >> (self.n + 1) == 0 && c.id.count_ones() == c.dim + 1
    }

    /// All nondegenerate cells, by dimension then mask.
    pub fn all_cells(&self) -> Vec<Cell> {
        (0..=self.n).flat_map(|d| self.cells(d)).collect()
    }

    /// [v₀…v_p] ∗ [v_{p+1}…v_q] = (−1)^{p+|π|}[sorted], zero on repeated vertices.
    pub fn join_cells(&self, a: Cell, b: Cell) -> Result<Option<(Cell, i64)>, SimplicialError> {
        if !self.contains(a) || !self.contains(b) {
            return Err(SimplicialError::NotOnSimplex(self.n));
        }
        if a.id & b.id != 0 {
            return Ok(None);
        }
        // inversions: vertices of a above vertices of b
        let inv: u32 = verts(a.id).iter().map(|&u| (b.id & ((1u32 << u) - 1)).count_ones()).sum();
        Ok(Some((mask_cell(a.id | b.id), sign(a.dim as i64 + inv as i64))))
    }

    pub fn join(&self, a: &FreeElement<Cell>, b: &FreeElement<Cell>) -> Result<FreeElement<Cell>, SimplicialError> {
        let mut out = FreeElement::zero();
        for (x, c) in a.iter() {
            for (y, d) in b.iter() {
                if let Some((z, s)) = self.join_cells(*x, *y)? {
                    out.add_term(z, s * c * d);
                }
            }
        }
        Ok(out)
    }

    /// The inclusion Δᵏ → Δⁿ with image `face`, on cells.
    pub fn include(face: Cell, c: Cell) -> Cell {
        let fv = verts(face.id);
        let vs: Vec<u32> = verts(c.id).iter().map(|&v| fv[v as usize]).collect();
        vertex_cell(&vs)
    }
}

impl Simplicial for StandardSimplex {
    fn cells(&self, dim: usize) -> Vec<Cell> {
        (1u32..1 << (self.n + 1)).filter(|m| m.count_ones() as usize == dim + 1).map(mask_cell).collect()
    }

    fn cell_face(&self, c: Cell, i: usize) -> SimplexRef {
        let vs = verts(c.id);
        let rest: Vec<u32> = vs.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, v)| *v).collect();
        SimplexRef::nondegenerate(vertex_cell(&rest))
    }

    fn top_dim(&self) -> Option<usize> {
        Some(self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(vs: &[u32]) -> Cell {
        vertex_cell(vs)
    }

    #[test]
    fn join_examples() {
        let d = StandardSimplex::new(2);
        assert_eq!(d.join_cells(v(&[0]), v(&[1])).unwrap(), Some((v(&[0, 1]), 1)));
        assert_eq!(d.join_cells(v(&[1]), v(&[1])).unwrap(), None);
        assert_eq!(d.join_cells(v(&[0, 2]), v(&[1])).unwrap(), Some((v(&[0, 1, 2]), 1)));
        assert_eq!(d.join_cells(v(&[1]), v(&[0])).unwrap(), Some((v(&[0, 1]), -1)));
        assert!(StandardSimplex::new(1).join_cells(v(&[2]), v(&[0])).is_err());
    }

    #[test]
    fn faces_of_top() {
        let d = StandardSimplex::new(2);
        assert_eq!(d.cell_face(d.top(), 1).base, v(&[0, 2]));
        assert_eq!(d.cells(1).len(), 3);
    }
}
