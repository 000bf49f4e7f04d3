//! Simplicial sets stored by nondegenerate cells and their faces.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::Cell;

use super::SimplicialError;

/// A simplex written as `base ∘ surj` with `surj: [n] → [dim base]` a monotone
/// surjection. Equivalent to an Eilenberg–Zilber normal form `s_{j₁}…s_{j_k} base`
/// with `j₁ > … > j_k`: the indices are the positions `j` with `surj[j] = surj[j+1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SimplexRef {
    pub base: Cell,
    pub surj: Vec<u32>,
}

impl SimplexRef {
    pub fn nondegenerate(base: Cell) -> SimplexRef {
        SimplexRef { base, surj: (0..=base.dim).collect() }
    }

    pub fn dim(&self) -> usize {
        self.surj.len() - 1
    }

    pub fn is_degenerate(&self) -> bool {
        self.surj.len() != self.base.dim as usize + 1
    }

    pub fn as_cell(&self) -> Option<Cell> {
        (!self.is_degenerate()).then_some(self.base)
    }

    /// Degeneracy word in normal form (strictly decreasing).
    pub fn degeneracies(&self) -> Vec<usize> {
        (0..self.dim()).rev().filter(|&j| self.surj[j] == self.surj[j + 1]).collect()
    }

    /// `s_{j₁} … s_{j_k} base` from a strictly decreasing word.
    pub fn from_degeneracies(base: Cell, word: &[usize]) -> Result<SimplexRef, SimplicialError> {
        if word.windows(2).any(|w| w[0] <= w[1]) {
            return Err(SimplicialError::Schema(format!("degeneracy word {word:?} is not strictly decreasing")));
        }
        let mut r = SimplexRef::nondegenerate(base);
        for &j in word.iter().rev() {
            if j > r.dim() {
                return Err(SimplicialError::Schema(format!("degeneracy index {j} too large in {word:?}")));
            }
            r = r.degenerate(j);
        }
        Ok(r)
    }

    /// s_j of this simplex.
    pub fn degenerate(&self, j: usize) -> SimplexRef {
        let n = self.dim();
        assert!(j <= n, "degeneracy s_{j} on a {n}-simplex");
        let surj = (0..=n + 1).map(|k| self.surj[if k <= j { k } else { k - 1 }]).collect();
        SimplexRef { base: self.base, surj }
    }
}

/// Face structure of a simplicial set, given on nondegenerate cells.
pub trait Simplicial {
    /// Nondegenerate cells of the given dimension, in a fixed order.
    fn cells(&self, dim: usize) -> Vec<Cell>;
    /// d_i of a nondegenerate cell.
    fn cell_face(&self, c: Cell, i: usize) -> SimplexRef;
    /// Largest dimension with cells, when known.
    fn top_dim(&self) -> Option<usize>;

    /// `r ∘ θ` for a monotone `θ: [k] → [dim r]` given by its values.
    fn apply(&self, r: &SimplexRef, theta: &[u32]) -> SimplexRef {
        let mu: Vec<u32> = theta.iter().map(|&t| r.surj[t as usize]).collect();
        self.restrict(r.base, mu)
    }

    /// `base ∘ μ` for a monotone, not necessarily surjective, `μ`.
    fn restrict(&self, base: Cell, mu: Vec<u32>) -> SimplexRef {
        let m = base.dim;
        let mut hit = vec![false; m as usize + 1];
        for &v in &mu {
            hit[v as usize] = true;
        }
        match (0..=m).rev().find(|&v| !hit[v as usize]) {
            None => SimplexRef { base, surj: mu },
            Some(v) => {
                let face = self.cell_face(base, v as usize);
                let mu2: Vec<u32> = mu.iter().map(|&x| if x > v { x - 1 } else { x }).collect();
                self.apply(&face, &mu2)
            }
        }
    }

    fn face(&self, r: &SimplexRef, i: usize) -> SimplexRef {
        let n = r.dim() as u32;
        let theta: Vec<u32> = (0..=n).filter(|&v| v != i as u32).collect();
        self.apply(r, &theta)
    }

    /// The face spanned by vertices `lo..=hi`.
    fn interval(&self, r: &SimplexRef, lo: usize, hi: usize) -> SimplexRef {
        let theta: Vec<u32> = (lo as u32..=hi as u32).collect();
        self.apply(r, &theta)
    }

    /// First violation of d_i d_j = d_{j−1} d_i (i < j) on a stored cell.
    fn check_identities(&self, max_dim: usize) -> Result<(), SimplicialError> {
        for n in 2..=max_dim {
            for c in self.cells(n) {
                let r = SimplexRef::nondegenerate(c);
                for j in 1..=n {
                    for i in 0..j {
                        let a = self.face(&self.face(&r, j), i);
                        let b = self.face(&self.face(&r, i), j - 1);
                        if a != b {
                            return Err(SimplicialError::Identity(format!(
                                "d_{i} d_{j} ≠ d_{} d_{i} on {c:?}: {a:?} vs {b:?}",
                                j - 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug)]
struct Inner {
    names: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<SimplexRef>>>,
    index: HashMap<String, Cell>,
}

/// Finite simplicial set. Cheap to clone.
#[derive(Clone, Debug)]
pub struct SimplicialSet {
    inner: Arc<Inner>,
}

/// Incremental construction; faces must refer to cells added earlier.
#[derive(Clone, Default)]
pub struct SimplicialSetBuilder {
    names: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<SimplexRef>>>,
    index: HashMap<String, Cell>,
}

impl SimplicialSetBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn lookup(&self, name: &str) -> Option<Cell> {
        self.index.get(name).copied()
    }

    pub fn add(&mut self, name: &str, dim: usize, faces: Vec<SimplexRef>) -> Result<Cell, SimplicialError> {
        if self.index.contains_key(name) {
            return Err(SimplicialError::Schema(format!("duplicate cell '{name}'")));
        }
        let expected = if dim == 0 { 0 } else { dim + 1 };
        if faces.len() != expected {
            return Err(SimplicialError::MissingFace(format!(
                "cell '{name}' of dimension {dim} needs {expected} faces, got {}",
                faces.len()
            )));
        }
        for (i, f) in faces.iter().enumerate() {
            let known = self.names.get(f.base.dim as usize).map_or(0, Vec::len);
            if f.base.id as usize >= known {
                return Err(SimplicialError::MissingFace(format!("face {i} of '{name}' refers to an unknown cell")));
            }
            if f.dim() + 1 != dim {
                return Err(SimplicialError::Schema(format!(
                    "face {i} of '{name}' has dimension {} instead of {}",
                    f.dim(),
                    dim - 1
                )));
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

    /// Finishes and checks the simplicial identities.
    pub fn build(self) -> Result<SimplicialSet, SimplicialError> {
        let x = SimplicialSet { inner: Arc::new(Inner { names: self.names, faces: self.faces, index: self.index }) };
        let top = x.top_dim().unwrap_or(0);
        x.check_identities(top)?;
        Ok(x)
    }
}

impl SimplicialSet {
    pub fn name(&self, c: Cell) -> &str {
        &self.inner.names[c.dim as usize][c.id as usize]
    }

    pub fn cell(&self, name: &str) -> Option<Cell> {
        self.inner.index.get(name).copied()
    }

    pub fn count(&self, dim: usize) -> usize {
        self.inner.names.get(dim).map_or(0, Vec::len)
    }

    /// A single vertex.
    pub fn is_reduced(&self) -> bool {
        self.count(0) == 1
    }

    pub fn all_cells(&self) -> Vec<Cell> {
        (0..self.inner.names.len()).flat_map(|d| self.cells(d)).collect()
    }

    /// Degenerate or not, every simplex of dimension `n`.
    pub fn all_simplices(&self, n: usize) -> Vec<SimplexRef> {
        let mut out = Vec::new();
        for m in 0..=n.min(self.inner.names.len().saturating_sub(1)) {
            for c in self.cells(m) {
                for surj in monotone_surjections(n, m) {
                    out.push(SimplexRef { base: c, surj });
                }
            }
        }
        out
    }
}

impl Simplicial for SimplicialSet {
    fn cells(&self, dim: usize) -> Vec<Cell> {
        (0..self.count(dim)).map(|i| Cell::new(dim, i)).collect()
    }

    fn cell_face(&self, c: Cell, i: usize) -> SimplexRef {
        self.inner.faces[c.dim as usize][c.id as usize][i].clone()
    }

    fn top_dim(&self) -> Option<usize> {
        Some(self.inner.names.len().saturating_sub(1))
    }
}

/// All monotone surjections [n] → [m], as value lists.
pub fn monotone_surjections(n: usize, m: usize) -> Vec<Vec<u32>> {
    // choose which m of the n steps go up by one
    let mut out = Vec::new();
    if m > n {
        return out;
    }
    fn rec(pos: usize, n: usize, m: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == n + 1 {
            if *cur.last().unwrap() as usize == m {
                out.push(cur.clone());
            }
            return;
        }
        let last = *cur.last().unwrap();
        for step in 0..=1u32 {
            let v = last + step;
            if v as usize <= m && (m - v as usize) <= n - pos {
                cur.push(v);
                rec(pos + 1, n, m, cur, out);
                cur.pop();
            }
        }
    }
    let mut cur = vec![0];
    rec(1, n, m, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degeneracy_normal_form_round_trip() {
        let base = Cell::new(1, 0);
        let r = SimplexRef::from_degeneracies(base, &[2, 0]).unwrap();
        assert_eq!(r.dim(), 3);
        assert_eq!(r.degeneracies(), vec![2, 0]);
        assert_eq!(r.surj, vec![0, 0, 1, 1]);
        // s_1 s_0 on a vertex
        let v = SimplexRef::from_degeneracies(Cell::new(0, 0), &[1, 0]).unwrap();
        assert_eq!(v.surj, vec![0, 0, 0]);
        assert!(SimplexRef::from_degeneracies(base, &[0, 1]).is_err());
    }

    #[test]
    fn simplicial_identity_s_i_s_j() {
        // s_i s_j = s_{j+1} s_i for i ≤ j
        let r = SimplexRef::nondegenerate(Cell::new(2, 0));
        for j in 0..=2 {
            for i in 0..=j {
                assert_eq!(r.degenerate(j).degenerate(i), r.degenerate(i).degenerate(j + 1));
            }
        }
    }

    #[test]
    fn surjection_count() {
        // C(n, m) monotone surjections [n] → [m]
        assert_eq!(monotone_surjections(3, 1).len(), 3);
        assert_eq!(monotone_surjections(4, 2).len(), 6);
        assert_eq!(monotone_surjections(2, 0).len(), 1);
    }
}
