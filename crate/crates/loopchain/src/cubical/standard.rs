//! The standard cube □ⁿ. A cell is a word `x₁⊗…⊗x_n` with `x_i ∈ {[0], [1], [0,1]}`,
//! stored as base-3 digits (0, 1, 2 = [0,1]) with coordinate 0 least significant.

use crate::algebra::{sign, Cell, FreeElement};

use super::map::{constant, Coord, CubeMap};
use super::set::{restrict_with, CubeRef, Cubical};
use super::CubicalError;

pub const I: u8 = 2;

pub fn word_cell(w: &[u8]) -> Cell {
    let id = w.iter().rev().fold(0u32, |acc, &d| acc * 3 + d as u32);
    Cell { dim: w.iter().filter(|&&d| d == I).count() as u32, id }
}

pub fn cell_word(c: Cell, n: usize) -> Vec<u8> {
    let mut id = c.id;
    (0..n)
        .map(|_| {
            let d = (id % 3) as u8;
            id /= 3;
            d
        })
        .collect()
}

/// Parses words like `0I1` (also `2` for the interval).
pub fn parse_word(s: &str) -> Option<Vec<u8>> {
    s.chars()
        .map(|ch| match ch {
            '0' => Some(0),
            '1' => Some(1),
            'I' | '2' => Some(I),
            _ => None,
        })
        .collect()
}

pub fn format_word(w: &[u8]) -> String {
    w.iter().map(|&d| ['0', '1', 'I'][d as usize]).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StandardCube {
    pub n: usize,
}

impl StandardCube {
    pub fn new(n: usize) -> Self {
        assert!(n <= 19, "standard cube too large");
        StandardCube { n }
    }

    pub fn word(&self, c: Cell) -> Vec<u8> {
        cell_word(c, self.n)
    }

    pub fn top(&self) -> Cell {
        word_cell(&vec![I; self.n])
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.id < 3u32.pow(self.n as u32) && word_cell(&self.word(c)) == c
    }

    pub fn all_cells(&self) -> Vec<Cell> {
        (0..=self.n).flat_map(|d| self.cells(d)).collect()
    }

    /// ε(x₁⊗…⊗x_n) = Π ε(x_i).
    pub fn counit(&self, c: Cell) -> i64 {
        i64::from(c.dim == 0)
    }

    /// The cell's characteristic map `2^{dim c} → 2^n`.
    pub fn face_map(&self, c: Cell) -> CubeMap {
        let mut k = 0u8;
        let coords = self
            .word(c)
            .into_iter()
            .map(|d| {
                if d == I {
                    k += 1;
                    Coord::Or(vec![k - 1])
                } else {
                    constant(d == 1)
                }
            })
            .collect();
        CubeMap { source: c.dim as usize, coords }
    }

    /// Image of a cell of □^{dim face} under the inclusion of `face`.
    pub fn include(&self, face: Cell, c: Cell) -> Cell {
        let inner = cell_word(c, face.dim as usize);
        let mut it = inner.into_iter();
        let w: Vec<u8> = self.word(face).into_iter().map(|d| if d == I { it.next().unwrap() } else { d }).collect();
        word_cell(&w)
    }

    /// (−1)^{|x|} Σ_i x_{<i} ε(y_{<i}) ⊗ x_i ∗ y_i ⊗ ε(x_{>i}) y_{>i}, with
    /// [0]∗[1] = [0,1] and [1]∗[0] = −[0,1] the only nonzero factors.
    pub fn join_cells(&self, a: Cell, b: Cell) -> Result<FreeElement<Cell>, CubicalError> {
        if !self.contains(a) || !self.contains(b) {
            return Err(CubicalError::DimensionMismatch(self.n));
        }
        let (x, y) = (self.word(a), self.word(b));
        let mut out = FreeElement::zero();
        for i in 0..self.n {
            if y[..i].contains(&I) || x[i + 1..].contains(&I) {
                continue;
            }
            let s = match (x[i], y[i]) {
                (0, 1) => 1,
                (1, 0) => -1,
                _ => continue,
            };
            let w: Vec<u8> = x[..i].iter().copied().chain([I]).chain(y[i + 1..].iter().copied()).collect();
            out.add_term(word_cell(&w), s * sign(a.dim as i64));
        }
        Ok(out)
    }

    pub fn join(&self, a: &FreeElement<Cell>, b: &FreeElement<Cell>) -> Result<FreeElement<Cell>, CubicalError> {
        let mut out = FreeElement::zero();
        for (x, c) in a.iter() {
            for (y, d) in b.iter() {
                out.add_scaled(&self.join_cells(*x, *y)?, c * d);
            }
        }
        Ok(out)
    }

    fn cell_face(&self, c: Cell, i: usize, eps: bool) -> CubeRef {
        let mut w = self.word(c);
        let pos = w.iter().enumerate().filter(|(_, &d)| d == I).nth(i).expect("direction in range").0;
        w[pos] = eps as u8;
        CubeRef::nondegenerate(word_cell(&w))
    }
}

impl Cubical for StandardCube {
    type Cell = Cell;
    type Ref = CubeRef;

    fn cells(&self, dim: usize) -> Vec<Cell> {
        let mut out: Vec<Cell> = (0..3u32.pow(self.n as u32))
            .map(|id| Cell { dim: 0, id })
            .map(|c| word_cell(&self.word(c)))
            .filter(|c| c.dim as usize == dim)
            .collect();
        out.sort();
        out
    }

    fn top_dim(&self) -> Option<usize> {
        Some(self.n)
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

/// chains(□^p) ⊗ chains(□^q) → chains(□^{p+q}) by concatenating words.
pub fn concat(a: Cell, p: usize, b: Cell) -> Cell {
    Cell { dim: a.dim + b.dim, id: a.id + 3u32.pow(p as u32) * b.id }
}

/// Inverse of [`concat`].
pub fn split(c: Cell, p: usize, n: usize) -> (Cell, Cell) {
    let w = cell_word(c, n);
    (word_cell(&w[..p]), word_cell(&w[p..]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Cell {
        word_cell(&parse_word(s).unwrap())
    }

    #[test]
    fn join_examples() {
        let c1 = StandardCube::new(1);
        assert_eq!(c1.join_cells(w("0"), w("1")).unwrap(), FreeElement::basis(w("I")));
        assert_eq!(c1.join_cells(w("1"), w("0")).unwrap(), FreeElement::term(w("I"), -1));
        let c2 = StandardCube::new(2);
        let expected = FreeElement::basis(w("I1")) + FreeElement::basis(w("0I"));
        assert_eq!(c2.join_cells(w("00"), w("11")).unwrap(), expected);
        assert!(c2.join_cells(w("000"), w("111")).is_err());
    }

    #[test]
    fn word_round_trip_and_counts() {
        let c = StandardCube::new(3);
        assert_eq!(c.all_cells().len(), 27);
        assert_eq!(c.cells(1).len(), 12);
        for x in c.all_cells() {
            assert_eq!(word_cell(&c.word(x)), x);
        }
        assert_eq!(format_word(&c.word(w("0I1"))), "0I1");
    }

    #[test]
    fn include_and_faces() {
        let c = StandardCube::new(3);
        assert_eq!(c.include(w("I1I"), w("01")), w("011"));
        assert_eq!(c.face(&w("III"), 1, true), Some(w("I1I")));
        let (a, b) = split(w("I01"), 1, 3);
        assert_eq!(concat(a, 1, b), w("I01"));
    }
}
