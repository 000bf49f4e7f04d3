//! Normalized cubical chains and the Serre coalgebra.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{sign, ChainComplex, FreeElement, Graded};

use super::map::{Coord, CubeMap};
use super::set::Cubical;
use super::standard::StandardCube;

/// ∂c = Σ_i (−1)^i (d_i^1 c − d_i^0 c), so ∂[0,1] = [1] − [0].
pub fn boundary<Y: Cubical + ?Sized>(y: &Y, c: &Y::Cell) -> FreeElement<Y::Cell> {
    let n = c.degree() as usize;
    let mut out = FreeElement::zero();
    for i in 0..n {
        let s = sign(i as i64);
        if let Some(f) = y.face(c, i, true) {
            out.add_term(f, s);
        }
        if let Some(f) = y.face(c, i, false) {
            out.add_term(f, -s);
        }
    }
    out
}

pub fn boundary_of<Y: Cubical + ?Sized>(y: &Y, e: &FreeElement<Y::Cell>) -> FreeElement<Y::Cell> {
    e.map(|c| boundary(y, c))
}

/// Normalized cubical chains in degrees `0..=max_degree`.
pub fn cubical_chains<Y>(y: &Y, max_degree: usize) -> ChainComplex<Y::Cell>
where
    Y: Cubical + Clone + Send + Sync + 'static,
{
    let basis: BTreeMap<i64, Vec<Y::Cell>> = (0..=max_degree).map(|d| (d as i64, y.cells(d))).collect();
    let complete = y.top_dim().is_some_and(|t| t <= max_degree);
    let ys = y.clone();
    ChainComplex::new(basis, Arc::new(move |c: &Y::Cell| boundary(&ys, c)), 0, max_degree as i64, complete)
}

/// Face seen by factor `k`: its own coordinates stay free, coordinates of
/// earlier factors sit at 1 and those of later factors at 0.
fn factor_map(assign: &[usize], k: usize) -> CubeMap {
    let mut next = 0u8;
    let coords = assign
        .iter()
        .map(|&f| match f.cmp(&k) {
            std::cmp::Ordering::Equal => {
                next += 1;
                Coord::Or(vec![next - 1])
            }
            std::cmp::Ordering::Less => Coord::One,
            std::cmp::Ordering::Greater => Coord::Zero,
        })
        .collect();
    CubeMap { source: next as usize, coords }
}

/// Δ^{(r)} of a cell: each coordinate is free in exactly one factor, with
/// the Koszul sign of sorting the free coordinates by factor.
pub fn serre_iterated<Y: Cubical + ?Sized>(y: &Y, c: &Y::Cell, r: usize) -> FreeElement<Vec<Y::Cell>> {
    let n = c.degree() as usize;
    let mut out = FreeElement::zero();
    if r == 0 {
        return out;
    }
    let mut assign = vec![0usize; n];
    loop {
        let word: Option<Vec<Y::Cell>> = (0..r).map(|k| y.pull(c, &factor_map(&assign, k))).collect();
        if let Some(word) = word {
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| assign[i] > assign[j]).count();
            out.add_term(word, sign(inv as i64));
        }
        // next assignment in base r
        let mut j = 0;
        while j < n && assign[j] == r - 1 {
            assign[j] = 0;
            j += 1;
        }
        if j == n {
            break;
        }
        assign[j] += 1;
    }
    out
}

/// The Serre coproduct of a cell.
pub fn serre_cell<Y: Cubical + ?Sized>(y: &Y, c: &Y::Cell) -> FreeElement<(Y::Cell, Y::Cell)> {
    serre_iterated(y, c, 2).map_keys(|w| Some(((w[0].clone(), w[1].clone()), 1)))
}

pub fn serre_coproduct<Y: Cubical + ?Sized>(y: &Y, e: &FreeElement<Y::Cell>) -> FreeElement<(Y::Cell, Y::Cell)> {
    e.map(|c| serre_cell(y, c))
}

/// ε: 1 on vertices, 0 elsewhere.
pub fn serre_counit<K: Graded + Ord + Clone>(e: &FreeElement<K>) -> i64 {
    e.iter().filter(|(c, _)| c.degree() == 0).map(|(_, v)| v).sum()
}

/// Pushforward of a standard-cube cell along the characteristic map of `c`.
pub fn characteristic<Y: Cubical + ?Sized>(
    y: &Y,
    c: &Y::Cell,
    cube: &StandardCube,
    w: crate::algebra::Cell,
) -> Option<Y::Cell> {
    y.pull(c, &cube.face_map(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::standard::{parse_word, word_cell};

    fn w(s: &str) -> crate::algebra::Cell {
        word_cell(&parse_word(s).unwrap())
    }

    #[test]
    fn interval_boundary_and_coproduct() {
        let c = StandardCube::new(1);
        assert_eq!(boundary(&c, &w("I")), FreeElement::basis(w("1")) - FreeElement::basis(w("0")));
        let d = serre_cell(&c, &w("I"));
        assert_eq!(d, FreeElement::from_terms([((w("0"), w("I")), 1), ((w("I"), w("1")), 1)]));
    }

    #[test]
    fn square_coproduct_sign() {
        let c = StandardCube::new(2);
        let d = serre_cell(&c, &w("II"));
        assert_eq!(d.len(), 4);
        // ([0]⊗[0,1]) ⊗ ([0,1]⊗[1]): the second interval passes the first
        assert_eq!(d.coeff(&(w("0I"), w("I1"))), -1);
        assert_eq!(d.coeff(&(w("I0"), w("1I"))), 1);
        assert_eq!(d.coeff(&(w("00"), w("II"))), 1);
    }

    #[test]
    fn d_squared_on_cube() {
        let c = StandardCube::new(3);
        let ch = cubical_chains(&c, 3);
        assert!(ch.check_d_squared().is_ok());
    }
}
