//! Triangulation T: cSet → sSet and its right adjoint U, with U(X)_n the
//! simplicial maps (Δ¹)^{×n} → X.
//!
//! Vertices of (Δ¹)^{×n} are bitmasks (bit j = coordinate j). A simplex is a
//! chain of masks; maximal chains correspond to permutations of the
//! coordinates (the order in which they flip to 1).

use std::collections::HashMap;
use std::fmt;

use crate::algebra::{Cell, Graded};
use crate::simplicial::{monotone_surjections, Simplicial, SimplexRef, SimplicialSet, SimplicialSetBuilder};

use super::map::{Coord, CubeMap};
use super::set::Cubical;
use super::CubicalError;

/// Ordered set partitions of `0..n` into `m` blocks, as chains of masks from 0 to full.
pub fn interior_chains(n: usize, m: usize) -> Vec<Vec<u32>> {
    let full = (1u32 << n) - 1;
    let mut out = Vec::new();
    if n == 0 {
        if m == 0 {
            out.push(vec![0]);
        }
        return out;
    }
    fn rec(cur: &mut Vec<u32>, full: u32, left: usize, out: &mut Vec<Vec<u32>>) {
        let last = *cur.last().unwrap();
        if left == 0 {
            if last == full {
                out.push(cur.clone());
            }
            return;
        }
        let rest = full & !last;
        // nonempty subsets of the remaining coordinates
        let mut sub = rest;
        while sub != 0 {
            if left > 1 || sub == rest {
                cur.push(last | sub);
                rec(cur, full, left - 1, out);
                cur.pop();
            }
            sub = (sub - 1) & rest;
        }
    }
    rec(&mut vec![0], full, m, &mut out);
    out.sort();
    out
}

/// Permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn perm_rank(p: &[usize]) -> usize {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&q| q < p[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

fn chain_of(p: &[usize]) -> Vec<u32> {
    let mut v = 0u32;
    let mut out = vec![0];
    for &j in p {
        v |= 1 << j;
        out.push(v);
    }
    out
}

fn mask_to_bits(m: u32, n: usize) -> Vec<bool> {
    (0..n).map(|j| m >> j & 1 == 1).collect()
}

fn bits_to_mask(b: &[bool]) -> u32 {
    b.iter().enumerate().fold(0, |m, (j, &x)| m | (x as u32) << j)
}

/// T(sk_D Y) as a finite simplicial set, with the cell of each (cube, chain) pair.
pub struct Triangulation<C> {
    pub set: SimplicialSet,
    index: HashMap<(C, Vec<u32>), Cell>,
}

impl<C: Clone + Eq + std::hash::Hash> Triangulation<C> {
    /// The nondegenerate simplex of a cube and an interior chain.
    pub fn simplex(&self, cube: &C, chain: &[u32]) -> Option<Cell> {
        self.index.get(&(cube.clone(), chain.to_vec())).copied()
    }
}

/// Triangulates the cubes of dimension ≤ `max_dim`.
pub fn triangulate<Y: Cubical>(y: &Y, max_dim: usize) -> Result<Triangulation<Y::Cell>, CubicalError>
where
    Y::Cell: fmt::Debug,
{
    let cubes: Vec<Vec<Y::Cell>> = (0..=max_dim).map(|n| y.cells(n)).collect();
    let mut b = SimplicialSetBuilder::new();
    let mut index: HashMap<(Y::Cell, Vec<u32>), Cell> = HashMap::new();
    for m in 0..=max_dim {
        for (n, cs) in cubes.iter().enumerate().skip(m) {
            if n > 0 && m == 0 {
                continue;
            }
            for chain in interior_chains(n, m) {
                for c in cs {
                    let faces = if m == 0 {
                        vec![]
                    } else {
                        (0..=m).map(|i| simplex_face(y, &index, c, n, &chain, i)).collect::<Result<Vec<_>, _>>()?
                    };
                    let name = format!("{c:?}|{chain:?}");
                    let cell = b.add(&name, m, faces).map_err(|e| CubicalError::Schema(e.to_string()))?;
                    index.insert((c.clone(), chain.clone()), cell);
                }
            }
        }
    }
    let set = b.build().map_err(|e| CubicalError::Identity(e.to_string()))?;
    Ok(Triangulation { set, index })
}

/// d_i of the simplex (c, chain), pushed down to the nondegenerate cube it lives on.
fn simplex_face<Y: Cubical>(
    y: &Y,
    index: &HashMap<(Y::Cell, Vec<u32>), Cell>,
    c: &Y::Cell,
    n: usize,
    chain: &[u32],
    i: usize,
) -> Result<SimplexRef, CubicalError> {
    let mut sub: Vec<u32> = chain.to_vec();
    sub.remove(i);
    let (lo, hi) = (sub[0], *sub.last().unwrap());
    let mut k = 0u8;
    let mut free = Vec::new();
    let coords = (0..n)
        .map(|j| {
            if lo >> j & 1 == hi >> j & 1 {
                if lo >> j & 1 == 1 {
                    Coord::One
                } else {
                    Coord::Zero
                }
            } else {
                free.push(j);
                k += 1;
                Coord::Or(vec![k - 1])
            }
        })
        .collect();
    let theta = CubeMap { source: k as usize, coords };
    let (base, g) = y.normal_form(&y.act(&y.identity(c), &theta));
    // vertices of the face in the free coordinates, then through g
    let images: Vec<u32> = sub
        .iter()
        .map(|&v| {
            let local: Vec<bool> = free.iter().map(|&j| v >> j & 1 == 1).collect();
            bits_to_mask(&g.eval(&local))
        })
        .collect();
    let mut chain2 = vec![images[0]];
    let mut surj = vec![0u32];
    for &v in &images[1..] {
        if v != *chain2.last().unwrap() {
            chain2.push(v);
        }
        surj.push(chain2.len() as u32 - 1);
    }
    let cell = *index
        .get(&(base.clone(), chain2.clone()))
        .ok_or_else(|| CubicalError::MissingFace(format!("face of {c:?} lands on {base:?} {chain2:?}")))?;
    Ok(SimplexRef { base: cell, surj })
}

/// A simplicial map (Δ¹)^{×n} → X, given by its values on maximal chains
/// (indexed by permutations in lexicographic order).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct UCube {
    pub n: usize,
    pub values: Vec<SimplexRef>,
}

impl Graded for UCube {
    fn degree(&self) -> i64 {
        self.n as i64
    }
}

/// The cubical set U(X).
#[derive(Clone)]
pub struct UAdjoint<S> {
    pub x: S,
    /// Search-node budget for enumerating cubes.
    pub limit: usize,
}

fn all_simplices<S: Simplicial>(x: &S, n: usize) -> Vec<SimplexRef> {
    let top = x.top_dim().unwrap_or(n).min(n);
    let mut out = Vec::new();
    for m in 0..=top {
        for c in x.cells(m) {
            for surj in monotone_surjections(n, m) {
                out.push(SimplexRef { base: c, surj });
            }
        }
    }
    out
}

impl<S: Simplicial + Clone> UAdjoint<S> {
    pub fn new(x: S) -> Self {
        UAdjoint { x, limit: 2_000_000 }
    }

    /// The cube with vertex images determined by `f` on maximal chains.
    pub fn from_fn<F: FnMut(&[u32]) -> SimplexRef>(n: usize, mut f: F) -> UCube {
        UCube { n, values: permutations(n).iter().map(|p| f(&chain_of(p))).collect() }
    }

    /// `f ∘ θ` for θ: 2^k → 2^n.
    pub fn precompose(&self, f: &UCube, theta: &CubeMap) -> UCube {
        let n = f.n;
        let k = theta.source;
        let values = permutations(k)
            .iter()
            .map(|p| {
                let imgs: Vec<u32> =
                    chain_of(p).iter().map(|&u| bits_to_mask(&theta.eval(&mask_to_bits(u, k)))).collect();
                // extend the image chain to a maximal chain of 2^n
                let mut order: Vec<usize> = Vec::with_capacity(n);
                let mut prev = 0u32;
                for &v in imgs.iter().chain(std::iter::once(&((1u32 << n) - 1))) {
                    order.extend((0..n).filter(|&j| (v & !prev) >> j & 1 == 1));
                    prev |= v;
                }
                let positions: Vec<u32> = imgs.iter().map(|v| v.count_ones()).collect();
                self.x.apply(&f.values[perm_rank(&order)], &positions)
            })
            .collect();
        UCube { n: k, values }
    }

    /// All n-cubes, degenerate or not.
    pub fn all_cubes(&self, n: usize) -> Result<Vec<UCube>, CubicalError> {
        let perms = permutations(n);
        let chains: Vec<Vec<u32>> = perms.iter().map(|p| chain_of(p)).collect();
        let candidates = all_simplices(&self.x, n);
        // shared vertices of each pair of maximal chains, as positions in both
        let shared = |a: usize, b: usize| -> (Vec<u32>, Vec<u32>) {
            let (ca, cb) = (&chains[a], &chains[b]);
            let mut pa = Vec::new();
            let mut pb = Vec::new();
            for (i, v) in ca.iter().enumerate() {
                if let Some(j) = cb.iter().position(|w| w == v) {
                    pa.push(i as u32);
                    pb.push(j as u32);
                }
            }
            (pa, pb)
        };
        let pairs: Vec<Vec<(Vec<u32>, Vec<u32>)>> = (0..perms.len()).map(|a| (0..a).map(|b| shared(a, b)).collect()).collect();
        let mut out = Vec::new();
        let mut cur: Vec<SimplexRef> = Vec::new();
        let mut budget = self.limit;
        #[allow(clippy::too_many_arguments)]
        fn rec<S: Simplicial>(
            x: &S,
            cands: &[SimplexRef],
            pairs: &[Vec<(Vec<u32>, Vec<u32>)>],
            cur: &mut Vec<SimplexRef>,
            out: &mut Vec<UCube>,
            n: usize,
            budget: &mut usize,
        ) -> bool {
            let a = cur.len();
            if a == pairs.len() {
                out.push(UCube { n, values: cur.clone() });
                return true;
            }
            for s in cands {
                if *budget == 0 {
                    return false;
                }
                *budget -= 1;
                let ok = (0..a).all(|b| {
                    let (pa, pb) = &pairs[a][b];
                    x.apply(s, pa) == x.apply(&cur[b], pb)
                });
                if ok {
                    cur.push(s.clone());
                    let fine = rec(x, cands, pairs, cur, out, n, budget);
                    cur.pop();
                    if !fine {
                        return false;
                    }
                }
            }
            true
        }
        if !rec(&self.x, &candidates, &pairs, &mut cur, &mut out, n, &mut budget) {
            let estimate = (candidates.len() as f64).powi(perms.len() as i32);
            return Err(CubicalError::ResourceLimit { dim: n, estimate });
        }
        Ok(out)
    }
}

impl<S: Simplicial + Clone> Cubical for UAdjoint<S> {
    type Cell = UCube;
    type Ref = UCube;

    fn cells(&self, dim: usize) -> Vec<UCube> {
        let mut cs: Vec<UCube> = self
            .all_cubes(dim)
            .expect("cube enumeration within the resource limit")
            .into_iter()
            .filter(|c| self.as_cell(c).is_some())
            .collect();
        cs.sort();
        cs
    }

    fn top_dim(&self) -> Option<usize> {
        None
    }

    fn identity(&self, c: &UCube) -> UCube {
        c.clone()
    }

    fn act(&self, r: &UCube, theta: &CubeMap) -> UCube {
        self.precompose(r, theta)
    }

    /// Splits off codegeneracies and coconnections by testing their sections.
    fn normal_form(&self, r: &UCube) -> (UCube, CubeMap) {
        let n = r.n;
        for i in 0..n {
            let g = self.precompose(r, &CubeMap::coface(n, i, false));
            if self.precompose(&g, &CubeMap::codegeneracy(n, i)) == *r {
                let (base, h) = self.normal_form(&g);
                return (base, h.compose(&CubeMap::codegeneracy(n, i)));
            }
        }
        for i in 0..n.saturating_sub(1) {
            let g = self.precompose(r, &CubeMap::coface(n, i + 1, false));
            let q = CubeMap::coconnection(n - 1, i);
            if self.precompose(&g, &q) == *r {
                let (base, h) = self.normal_form(&g);
                return (base, h.compose(&q));
            }
        }
        (r.clone(), CubeMap::identity(n))
    }
}

impl<S: Simplicial + Clone> UAdjoint<S> {
    /// Checked variant of `cells` reporting the resource limit.
    pub fn try_cells(&self, dim: usize) -> Result<Vec<UCube>, CubicalError> {
        let mut cs: Vec<UCube> = self.all_cubes(dim)?.into_iter().filter(|c| self.as_cell(c).is_some()).collect();
        cs.sort();
        Ok(cs)
    }
}

/// The unit Y → U(T Y) on a nondegenerate cube.
pub fn unit_cube<C: Clone + Eq + std::hash::Hash + fmt::Debug>(t: &Triangulation<C>, c: &C, n: usize) -> UCube {
    UAdjoint::<SimplicialSet>::from_fn(n, |chain| {
        SimplexRef::nondegenerate(t.simplex(c, chain).unwrap_or_else(|| panic!("cube {c:?} was triangulated")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::StandardCube;
    use crate::simplicial::models;

    #[test]
    fn square_triangulation_counts() {
        let t = triangulate(&StandardCube::new(2), 2).unwrap();
        assert_eq!((t.set.count(0), t.set.count(1), t.set.count(2)), (4, 5, 2));
        let p = triangulate(&StandardCube::new(0), 0).unwrap();
        assert_eq!(p.set.count(0), 1);
    }

    #[test]
    fn adjoint_small_cases() {
        let u0 = UAdjoint::new(models::simplex(0));
        assert_eq!(u0.all_cubes(2).unwrap().len(), 1);
        assert!(u0.try_cells(1).unwrap().is_empty());
        let u1 = UAdjoint::new(models::simplex(1));
        assert_eq!(u1.all_cubes(1).unwrap().len(), 3);
        // order-preserving maps {0,1}^2 → [1]: 6 up-sets
        assert_eq!(u1.all_cubes(2).unwrap().len(), 6);
    }

    #[test]
    fn chains_and_ranks() {
        assert_eq!(interior_chains(2, 2).len(), 2);
        assert_eq!(interior_chains(3, 3).len(), 6);
        assert_eq!(interior_chains(3, 1), vec![vec![0, 7]]);
        for (r, p) in permutations(3).iter().enumerate() {
            assert_eq!(perm_rank(p), r);
        }
    }
}
