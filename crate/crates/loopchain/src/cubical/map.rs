//! Morphisms of the cube category with (max-)connections.
//!
//! A morphism `2^k → 2^n` sends each target coordinate to a constant or to
//! the maximum of a block of source coordinates. Blocks are disjoint and
//! increasing; source coordinates in no block are forgotten. Every composite
//! of cofaces, codegeneracies and coconnections has this form, and the form
//! is unique, so it doubles as a canonical key.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coord {
    Zero,
    One,
    Or(Vec<u8>),
}

impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Zero => write!(f, "0"),
            Coord::One => write!(f, "1"),
            Coord::Or(b) => write!(f, "{b:?}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeMap {
    pub source: usize,
    pub coords: Vec<Coord>,
}

impl fmt::Debug for CubeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2^{}→{:?}", self.source, self.coords)
    }
}

impl CubeMap {
    pub fn identity(n: usize) -> CubeMap {
        CubeMap { source: n, coords: (0..n).map(|j| Coord::Or(vec![j as u8])).collect() }
    }

    pub fn target(&self) -> usize {
        self.coords.len()
    }

    /// δ_i^ε : 2^{n−1} → 2^n, inserting `eps` at coordinate `i` (0-based).
    pub fn coface(n: usize, i: usize, eps: bool) -> CubeMap {
        assert!(i < n);
        let coords = (0..n)
            .map(|j| match j.cmp(&i) {
                std::cmp::Ordering::Less => Coord::Or(vec![j as u8]),
                std::cmp::Ordering::Equal => constant(eps),
                std::cmp::Ordering::Greater => Coord::Or(vec![j as u8 - 1]),
            })
            .collect();
        CubeMap { source: n - 1, coords }
    }

    /// σ_i : 2^n → 2^{n−1}, forgetting coordinate `i`.
    pub fn codegeneracy(n: usize, i: usize) -> CubeMap {
        assert!(i < n);
        let coords = (0..n).filter(|&j| j != i).map(|j| Coord::Or(vec![j as u8])).collect();
        CubeMap { source: n, coords }
    }

    /// γ_i : 2^{n+1} → 2^n, taking the maximum of coordinates `i` and `i+1`.
    pub fn coconnection(n: usize, i: usize) -> CubeMap {
        assert!(i < n);
        let coords = (0..n)
            .map(|j| match j.cmp(&i) {
                std::cmp::Ordering::Less => Coord::Or(vec![j as u8]),
                std::cmp::Ordering::Equal => Coord::Or(vec![j as u8, j as u8 + 1]),
                std::cmp::Ordering::Greater => Coord::Or(vec![j as u8 + 1]),
            })
            .collect();
        CubeMap { source: n + 1, coords }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &CubeMap) -> CubeMap {
        assert_eq!(self.source, inner.target(), "cube maps do not compose");
        let coords = self
            .coords
            .iter()
            .map(|c| match c {
                Coord::Or(block) => join_all(block.iter().map(|&s| &inner.coords[s as usize])),
                k => k.clone(),
            })
            .collect();
        CubeMap { source: inner.source, coords }
    }

    pub fn eval(&self, x: &[bool]) -> Vec<bool> {
        self.coords
            .iter()
            .map(|c| match c {
                Coord::Zero => false,
                Coord::One => true,
                Coord::Or(b) => b.iter().any(|&s| x[s as usize]),
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target() && self.coords.iter().enumerate().all(|(j, c)| *c == Coord::Or(vec![j as u8]))
    }

    /// First constant coordinate.
    pub fn first_constant(&self) -> Option<(usize, bool)> {
        self.coords.iter().enumerate().find_map(|(j, c)| match c {
            Coord::Zero => Some((j, false)),
            Coord::One => Some((j, true)),
            Coord::Or(_) => None,
        })
    }

    /// The same map with target coordinate `j` removed.
    pub fn without(&self, j: usize) -> CubeMap {
        let mut coords = self.coords.clone();
        coords.remove(j);
        CubeMap { source: self.source, coords }
    }

    /// No constant coordinates: a composite of codegeneracies and coconnections.
    pub fn is_degeneracy(&self) -> bool {
        self.first_constant().is_none()
    }

    /// Structural validity: blocks nonempty, in range, disjoint and increasing.
    pub fn is_valid(&self) -> bool {
        let mut last: i32 = -1;
        for c in &self.coords {
            if let Coord::Or(b) = c {
                if b.is_empty() {
                    return false;
                }
                for &s in b {
                    if s as i32 <= last || s as usize >= self.source {
                        return false;
                    }
                    last = s as i32;
                }
            }
        }
        true
    }
}

pub fn constant(eps: bool) -> Coord {
    if eps {
        Coord::One
    } else {
        Coord::Zero
    }
}

/// Maximum of several coordinate expressions.
pub fn join_all<'a, I: IntoIterator<Item = &'a Coord>>(cs: I) -> Coord {
    let mut block: Vec<u8> = Vec::new();
    for c in cs {
        match c {
            Coord::One => return Coord::One,
            Coord::Zero => {}
            Coord::Or(b) => block.extend(b),
        }
    }
    if block.is_empty() {
        Coord::Zero
    } else {
        block.sort_unstable();
        Coord::Or(block)
    }
}

/// All vertices of 2^n, as bit vectors in lexicographic order.
pub fn vertices(n: usize) -> Vec<Vec<bool>> {
    (0..1u32 << n).map(|m| (0..n).map(|j| m >> (n - 1 - j) & 1 == 1).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubical_identities() {
        // σ_j δ_i^ε = δ_i^ε σ_{j−1} for i < j, checked on functions
        let n = 3;
        for i in 0..n {
            for j in 0..n {
                for eps in [false, true] {
                    let a = CubeMap::codegeneracy(n, j).compose(&CubeMap::coface(n, i, eps));
                    if i < j {
                        let b = CubeMap::coface(n - 1, i, eps).compose(&CubeMap::codegeneracy(n - 1, j - 1));
                        assert_eq!(a, b);
                    } else if i == j {
                        assert!(a.is_identity());
                    }
                }
            }
        }
        // γ_i δ_i^1 has a constant coordinate: max(1, x) = 1
        let g = CubeMap::coconnection(2, 0).compose(&CubeMap::coface(3, 0, true));
        assert_eq!(g.coords[0], Coord::One);
        // γ_i δ_i^0 = id
        assert!(CubeMap::coconnection(2, 0).compose(&CubeMap::coface(3, 0, false)).is_identity());
    }

    #[test]
    fn compose_agrees_with_eval() {
        let f = CubeMap::coconnection(2, 1);
        let g = CubeMap::coface(3, 0, true).compose(&CubeMap::codegeneracy(3, 2));
        let h = f.compose(&g);
        for x in vertices(3) {
            assert_eq!(h.eval(&x), f.eval(&g.eval(&x)));
        }
        assert!(h.is_valid());
    }
}
