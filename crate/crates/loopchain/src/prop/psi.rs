//! The lifts ψ(e_i): natural operations chains → chains^{⊗p} on standard
//! simplices and cubes, indexed by the minimal C_p-free resolution W(p).
//!
//! ψ(e₀) is the iterated coproduct. For i > 0 the value on a top cell is
//! `H(z)`, with `z = ψ(d e_i)(top) + (−1)^i ψ(e_i)(∂ top)` and `H` the
//! contraction built from `h(c) = basepoint ∗ c`; lower cells follow by
//! naturality.

use crate::algebra::{permute, sign, Cell, FreeElement, Graded, Key};

use super::eval::{tensor_boundary, MHooks, Standard};

/// Element Σ_j a_j ρ^j of the group ring, acting on p-fold tensors.
pub type GroupRingElement = Vec<i64>;

/// ρ(x₁⊗…⊗x_p) = ±x_p⊗x₁⊗…⊗x_{p−1}.
pub fn rotate<K: Key>(x: &FreeElement<Vec<K>>, p: usize) -> FreeElement<Vec<K>> {
    let perm: Vec<usize> = std::iter::once(p - 1).chain(0..p - 1).collect();
    permute(x, &perm)
}

pub fn act<K: Key>(a: &GroupRingElement, x: &FreeElement<Vec<K>>, p: usize) -> FreeElement<Vec<K>> {
    let mut out = FreeElement::zero();
    let mut r = x.clone();
    for (j, &c) in a.iter().enumerate() {
        if j > 0 {
            r = rotate(&r, p);
        }
        if c != 0 {
            out.add_scaled(&r, c);
        }
    }
    out
}

/// d e_i = T e_{i−1} (i odd) or N e_{i−1} (i even), T = 1 − ρ, N = Σ ρ^j.
pub fn resolution_differential(p: usize, i: usize) -> GroupRingElement {
    assert!(i > 0);
    if i % 2 == 1 {
        let mut t = vec![0; p];
        t[0] = 1;
        t[1] -= 1;
        t
    } else {
        vec![1; p]
    }
}

/// `d²` on W(p): the product T·N (or N·T) in the group ring.
pub fn resolution_d_squared(p: usize, i: usize) -> GroupRingElement {
    let a = resolution_differential(p, i);
    let b = resolution_differential(p, i - 1);
    let mut out = vec![0; p];
    for (x, &ca) in a.iter().enumerate() {
        for (y, &cb) in b.iter().enumerate() {
            out[(x + y) % p] += ca * cb;
        }
    }
    out
}

/// ψ(e_i) on the top cells of a standard model, for all dimensions up to `max_n`.
/// Built once, then read-only.
#[derive(Clone, Debug)]
pub struct PsiTable {
    pub p: usize,
    pub shape: Standard,
    pub max_i: usize,
    /// `tops[i][n]` = ψ(e_i)(top cell of the n-dimensional model), as tensors in that model.
    tops: Vec<Vec<FreeElement<Vec<Cell>>>>,
}

impl PsiTable {
    pub fn new(p: usize, shape: Standard, max_n: usize, max_i: usize) -> PsiTable {
        assert!(p >= 2);
        let mut t = PsiTable { p, shape, max_i, tops: vec![Vec::new(); max_i + 1] };
        for n in 0..=max_n {
            let model = shape.with_dim(n);
            for i in 0..=max_i {
                let v = if i == 0 { iterated_coproduct(&model, model.top(), p) } else { t.lift(&model, i) };
                t.tops[i].push(v);
            }
        }
        t
    }

    pub fn max_n(&self) -> usize {
        self.tops[0].len() - 1
    }

    fn lift(&self, model: &Standard, i: usize) -> FreeElement<Vec<Cell>> {
        let top = model.top();
        let mut z = act(&resolution_differential(self.p, i), &self.tops[i - 1][model.n()], self.p);
        let d_top = model.boundary(&top);
        z.add_scaled(&self.apply(model, i, &d_top), sign(i as i64));
        contraction(model, &z)
    }

    /// ψ(e_i) on a chain of the given model, by naturality from the top cells.
    pub fn apply(&self, model: &Standard, i: usize, x: &FreeElement<Cell>) -> FreeElement<Vec<Cell>> {
        assert!(i <= self.max_i, "ψ(e_{i}) was not tabulated");
        let mut out = FreeElement::zero();
        for (c, k) in x.iter() {
            let v = &self.tops[i][c.dim as usize];
            out.add_scaled(&v.map_keys(|w| Some((w.iter().map(|&a| model.include(*c, a)).collect(), 1))), k);
        }
        out
    }

    /// ψ(a·e_i) for a group-ring element `a`.
    pub fn apply_with(&self, model: &Standard, a: &GroupRingElement, i: usize, x: &FreeElement<Cell>) -> FreeElement<Vec<Cell>> {
        act(a, &self.apply(model, i, x), self.p)
    }

    /// ∂ψ(e_i)(x) − (−1)^i ψ(e_i)(∂x) − ψ(d e_i)(x); zero when the lift is correct.
    pub fn defect(&self, model: &Standard, i: usize, c: Cell) -> FreeElement<Vec<Cell>> {
        let x = FreeElement::basis(c);
        let mut out = tensor_boundary(model, &self.apply(model, i, &x));
        out.add_scaled(&self.apply(model, i, &model.boundary(&c)), -sign(i as i64));
        if i > 0 {
            out.add_scaled(&self.apply_with(model, &resolution_differential(self.p, i), i - 1, &x), -1);
        }
        out
    }
}

/// Iterated coproduct (Δ⊗1⊗…)∘…∘Δ into `p` factors.
pub fn iterated_coproduct<H: MHooks<K = Cell>>(h: &H, c: Cell, p: usize) -> FreeElement<Vec<Cell>> {
    let mut acc: FreeElement<Vec<Cell>> = FreeElement::basis(vec![c]);
    for _ in 1..p {
        let mut next = FreeElement::zero();
        for (w, k) in acc.iter() {
            let last = w.len() - 1;
            for ((a, b), d) in h.coproduct(&w[last]).iter() {
                let mut nw = w[..last].to_vec();
                nw.extend([*a, *b]);
                next.add_term(nw, k * d);
            }
        }
        acc = next;
    }
    acc
}

/// H = Σ_k π^{⊗k} ⊗ h ⊗ 1, with π(c) = ε(c)·basepoint and h(c) = basepoint ∗ c.
/// Satisfies ∂H + H∂ = 1 − π^{⊗p}.
pub fn contraction<H: MHooks<K = Cell>>(h: &H, z: &FreeElement<Vec<Cell>>) -> FreeElement<Vec<Cell>> {
    let v = h.basepoint();
    let mut out = FreeElement::zero();
    for (w, c) in z.iter() {
        for k in 0..w.len() {
            if w[..k].iter().any(|x| x.degree() != 0) {
                break;
            }
            for (j, d) in h.join(&v, &w[k]).iter() {
                let mut nw = vec![v; k];
                nw.push(*j);
                nw.extend_from_slice(&w[k + 1..]);
                out.add_term(nw, c * d);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::vertex_cell;

    #[test]
    fn base_case_is_aw() {
        let t = PsiTable::new(2, Standard::Simplex(1), 1, 1);
        let model = Standard::Simplex(1);
        let e = t.apply(&model, 0, &FreeElement::basis(vertex_cell(&[0, 1])));
        let expected = FreeElement::from_terms([
            (vec![vertex_cell(&[0]), vertex_cell(&[0, 1])], 1),
            (vec![vertex_cell(&[0, 1]), vertex_cell(&[1])], 1),
        ]);
        assert_eq!(e, expected);
    }

    #[test]
    fn resolution_is_a_complex() {
        for p in [2, 3, 5] {
            for i in 2..6 {
                assert!(resolution_d_squared(p, i).iter().all(|&c| c == 0));
            }
        }
    }

    #[test]
    fn lifts_satisfy_relation() {
        for shape in [Standard::Simplex(0), Standard::Cube(0)] {
            for p in [2, 3] {
                let t = PsiTable::new(p, shape, 3, 3);
                for n in 0..=3 {
                    let model = shape.with_dim(n);
                    for i in 0..=3 {
                        for c in model.basis() {
                            assert!(t.defect(&model, i, c).is_zero(), "{shape:?} p={p} n={n} i={i} {c:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn vanishing_above_bound() {
        let t = PsiTable::new(2, Standard::Simplex(0), 2, 4);
        assert!(t.apply(&Standard::Simplex(1), 2, &FreeElement::basis(vertex_cell(&[0, 1]))).is_zero());
    }
}
