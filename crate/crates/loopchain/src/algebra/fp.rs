//! Dense linear algebra over F_p: row reduction, kernels, and homology
//! bases with dual cocycles.

use std::collections::HashMap;

use super::complex::ChainComplex;
use super::free::{FreeElement, Key};
use super::snf::mod_inverse;
use super::AlgebraError;

/// Row-reduced echelon form in place; returns pivot columns.
pub fn rref(rows: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, piv);
        let inv = mod_inverse(rows[r][col] as i128, p as i128) as u64;
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let f = rows[i][col];
                for j in 0..ncols {
                    rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Basis of {x : A x = 0} for an `m × n` matrix given by rows.
pub fn kernel(a: &[Vec<u64>], n: usize, p: u64) -> Vec<Vec<u64>> {
    let mut rows = a.to_vec();
    let pivots = rref(&mut rows, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - rows[r][f] % p) % p;
            }
            v
        })
        .collect()
}

fn reduce(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// A basis of H_n(C; F_p) by representative cycles, with cocycles
/// `duals[a]` satisfying `duals[a](reps[b]) = δ_ab` and vanishing on boundaries.
#[derive(Clone, Debug)]
pub struct FpHomologyBasis<K: Key> {
    pub p: u64,
    pub degree: i64,
    pub reps: Vec<FreeElement<K>>,
    pub duals: Vec<FreeElement<K>>,
}

impl<K: Key> FpHomologyBasis<K> {
    pub fn rank(&self) -> usize {
        self.reps.len()
    }

    /// Evaluation of a cochain on a chain, in F_p.
    pub fn pair(&self, alpha: &FreeElement<K>, x: &FreeElement<K>) -> u64 {
        let mut s = 0i64;
        for (k, c) in x.iter() {
            s = (s + c.rem_euclid(self.p as i64) * alpha.coeff(k).rem_euclid(self.p as i64)) % self.p as i64;
        }
        s as u64
    }

    /// Coordinates of the class of a cycle.
    pub fn coordinates(&self, x: &FreeElement<K>) -> Vec<u64> {
        self.duals.iter().map(|a| self.pair(a, x)).collect()
    }

    /// A cycle representing the class with the given coordinates.
    pub fn representative(&self, coords: &[u64]) -> FreeElement<K> {
        let mut out = FreeElement::zero();
        for (r, &c) in self.reps.iter().zip(coords) {
            out.add_scaled(r, c as i64);
        }
        out.reduce(super::Ring::PrimeField { p: self.p })
    }
}

fn columns<K: Key>(c: &ChainComplex<K>, n: i64, p: u64) -> Result<Vec<Vec<u64>>, AlgebraError> {
    // columns of d_n as vectors over basis(n-1)
    let tgt = c.basis(n - 1);
    let index: HashMap<&K, usize> = tgt.iter().enumerate().map(|(i, k)| (k, i)).collect();
    c.basis(n)
        .iter()
        .map(|k| {
            let mut v = vec![0u64; tgt.len()];
            for (t, x) in c.diff(k).iter() {
                if n > c.min_degree() {
                    let i = *index.get(t).ok_or_else(|| AlgebraError::LeavesBasis(format!("d({k:?}) contains {t:?}")))?;
                    v[i] = (v[i] + reduce(x, p)) % p;
                }
            }
            Ok(v)
        })
        .collect()
}

/// Homology basis and dual cocycles in degree `n` over F_p.
pub fn fp_homology_basis<K: Key>(c: &ChainComplex<K>, n: i64, p: u64) -> Result<FpHomologyBasis<K>, AlgebraError> {
    let t = c.truncation();
    if n + 1 > t.max_degree && !t.complete_above {
        return Err(AlgebraError::InsufficientTruncation { degree: n, max_degree: t.max_degree });
    }
    let basis = c.basis(n).to_vec();
    let dim = basis.len();
    // cycles: kernel of d_n (rows of the matrix are indexed by basis(n-1))
    let cols = columns(c, n, p)?;
    let tdim = c.basis(n - 1).len();
    let mat: Vec<Vec<u64>> = (0..tdim).map(|i| cols.iter().map(|v| v[i]).collect()).collect();
    let cycles = if tdim == 0 { (0..dim).map(|j| unit(dim, j)).collect() } else { kernel(&mat, dim, p) };
    let bounds: Vec<Vec<u64>> = if n < t.max_degree { columns(c, n + 1, p)? } else { vec![] };
    // row-reduce [boundaries; cycles] keeping track of which cycle rows add rank
    let mut span: Vec<Vec<u64>> = Vec::new();
    let mut reps: Vec<Vec<u64>> = Vec::new();
    let rank_of = |rows: &Vec<Vec<u64>>| {
        let mut r = rows.clone();
        rref(&mut r, p).len()
    };
    for b in bounds {
        span.push(b);
    }
    let mut r0 = rank_of(&span);
    for z in cycles {
        span.push(z.clone());
        let r1 = rank_of(&span);
        if r1 > r0 {
            reps.push(z);
            r0 = r1;
        } else {
            span.pop();
        }
    }
    // duals: solve α·[B_basis | reps] = [0 | I] via the left inverse of the spanning set
    let nb = span.len() - reps.len();
    let mut aug: Vec<Vec<u64>> = span
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut row = v.clone();
            row.extend((0..reps.len()).map(|a| u64::from(i >= nb && i - nb == a)));
            row
        })
        .collect();
    // span rows may be dependent among boundaries; rref keeps the system consistent
    let piv = rref(&mut aug, p);
    let mut duals = vec![vec![0u64; dim]; reps.len()];
    // α restricted to pivot columns: for each rref row r with pivot in the first `dim` columns,
    // row r reads Σ_j a_rj x_j = rhs_r; choosing α_j = rhs on pivot columns solves α(x) for all rows.
    for (r, &pc) in piv.iter().enumerate() {
        if pc >= dim {
            continue;
        }
        for a in 0..reps.len() {
            duals[a][pc] = aug[r][dim + a];
        }
    }
    let to_elem = |v: &Vec<u64>| FreeElement::from_terms(v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, &x)| (basis[j].clone(), x as i64)));
    Ok(FpHomologyBasis {
        p,
        degree: n,
        reps: reps.iter().map(to_elem).collect(),
        duals: duals.iter().map(to_elem).collect(),
    })
}

fn unit(n: usize, j: usize) -> Vec<u64> {
    let mut v = vec![0; n];
    v[j] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Cell;
    use std::collections::BTreeMap;
    use std::sync::Arc;

    #[test]
    fn kernel_of_rank_one() {
        let k = kernel(&[vec![1, 1, 0]], 3, 2);
        assert_eq!(k.len(), 2);
        for v in k {
            assert_eq!((v[0] + v[1]) % 2, 0);
        }
    }

    #[test]
    fn rp2_cellular_mod_two() {
        // one cell per degree 0..2, d_2 = 2, d_1 = 0
        let c = |d: usize| Cell::new(d, 0);
        let basis: BTreeMap<i64, Vec<Cell>> = (0..=2).map(|d| (d as i64, vec![c(d)])).collect();
        let cx = ChainComplex::new(
            basis,
            Arc::new(move |k: &Cell| if k.dim == 2 { FreeElement::term(c(1), 2) } else { FreeElement::zero() }),
            0,
            2,
            true,
        );
        for n in 0..=2 {
            let h = fp_homology_basis(&cx, n, 2).unwrap();
            assert_eq!(h.rank(), 1);
            assert_eq!(h.coordinates(&h.reps[0]), vec![1]);
        }
        assert_eq!(fp_homology_basis(&cx, 1, 3).unwrap().rank(), 0);
    }
}
