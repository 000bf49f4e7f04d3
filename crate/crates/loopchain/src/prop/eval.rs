//! Evaluating graphs against M-bialgebras.

use crate::algebra::{koszul_sign, permute, sign, Cell, FreeElement, Graded, Key};
use crate::cubical::{self, StandardCube};
use crate::simplicial::{self, mask_cell, StandardSimplex};

use super::graph::{Gen, PropGraph, Source};
use super::PropError;

/// Counit, coproduct and join on a complex with a distinguished basis.
pub trait MHooks {
    type K: Key;
    fn contains(&self, k: &Self::K) -> bool;
    fn counit(&self, k: &Self::K) -> i64;
    fn coproduct(&self, k: &Self::K) -> FreeElement<(Self::K, Self::K)>;
    fn join(&self, a: &Self::K, b: &Self::K) -> FreeElement<Self::K>;
    fn boundary(&self, k: &Self::K) -> FreeElement<Self::K>;
    /// All basis elements.
    fn basis(&self) -> Vec<Self::K>;
    /// A degree-0 basis element with counit 1.
    fn basepoint(&self) -> Self::K;
}

/// Chains of Δⁿ with the Alexander–Whitney coproduct.
#[derive(Clone, Copy, Debug)]
pub struct SimplexHooks(pub StandardSimplex);

impl MHooks for SimplexHooks {
    type K = Cell;
    fn contains(&self, k: &Cell) -> bool {
        self.0.contains(*k)
    }
    fn counit(&self, k: &Cell) -> i64 {
        i64::from(k.dim == 0)
    }
    fn coproduct(&self, k: &Cell) -> FreeElement<(Cell, Cell)> {
        simplicial::aw_cell(&self.0, *k)
    }
    fn join(&self, a: &Cell, b: &Cell) -> FreeElement<Cell> {
        match self.0.join_cells(*a, *b).expect("cells of the standard simplex") {
            Some((c, s)) => FreeElement::term(c, s),
            None => FreeElement::zero(),
        }
    }
    fn boundary(&self, k: &Cell) -> FreeElement<Cell> {
        simplicial::boundary(&self.0, *k)
    }
    fn basis(&self) -> Vec<Cell> {
        self.0.all_cells()
    }
    fn basepoint(&self) -> Cell {
        mask_cell(1)
    }
}

/// Chains of □ⁿ with the Serre coproduct.
#[derive(Clone, Copy, Debug)]
pub struct CubeHooks(pub StandardCube);

impl MHooks for CubeHooks {
    type K = Cell;
    fn contains(&self, k: &Cell) -> bool {
        self.0.contains(*k)
    }
    fn counit(&self, k: &Cell) -> i64 {
        self.0.counit(*k)
    }
    fn coproduct(&self, k: &Cell) -> FreeElement<(Cell, Cell)> {
        cubical::serre_cell(&self.0, k)
    }
    fn join(&self, a: &Cell, b: &Cell) -> FreeElement<Cell> {
        self.0.join_cells(*a, *b).expect("cells of the standard cube")
    }
    fn boundary(&self, k: &Cell) -> FreeElement<Cell> {
        cubical::boundary(&self.0, k)
    }
    fn basis(&self) -> Vec<Cell> {
        self.0.all_cells()
    }
    fn basepoint(&self) -> Cell {
        Cell { dim: 0, id: 0 }
    }
}

/// Either standard model, chosen at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Standard {
    Simplex(usize),
    Cube(usize),
}

impl Standard {
    pub fn n(&self) -> usize {
        match self {
            Standard::Simplex(n) | Standard::Cube(n) => *n,
        }
    }

    pub fn with_dim(&self, n: usize) -> Standard {
        match self {
            Standard::Simplex(_) => Standard::Simplex(n),
            Standard::Cube(_) => Standard::Cube(n),
        }
    }

    pub fn top(&self) -> Cell {
        match self {
            Standard::Simplex(n) => StandardSimplex::new(*n).top(),
            Standard::Cube(n) => StandardCube::new(*n).top(),
        }
    }

    /// Image of a cell of the `dim face`-dimensional model under the inclusion of `face`.
    pub fn include(&self, face: Cell, c: Cell) -> Cell {
        match self {
            Standard::Simplex(_) => StandardSimplex::include(face, c),
            Standard::Cube(n) => StandardCube::new(*n).include(face, c),
        }
    }

    /// Cells of a fixed dimension.
    pub fn cells(&self, d: usize) -> Vec<Cell> {
        use crate::cubical::Cubical;
        use crate::simplicial::Simplicial;
        match self {
            Standard::Simplex(n) => StandardSimplex::new(*n).cells(d),
            Standard::Cube(n) => StandardCube::new(*n).cells(d),
        }
    }
}

impl MHooks for Standard {
    type K = Cell;
    fn contains(&self, k: &Cell) -> bool {
        match self {
            Standard::Simplex(n) => SimplexHooks(StandardSimplex::new(*n)).contains(k),
            Standard::Cube(n) => CubeHooks(StandardCube::new(*n)).contains(k),
        }
    }
    fn counit(&self, k: &Cell) -> i64 {
        i64::from(k.dim == 0)
    }
    fn coproduct(&self, k: &Cell) -> FreeElement<(Cell, Cell)> {
        match self {
            Standard::Simplex(n) => SimplexHooks(StandardSimplex::new(*n)).coproduct(k),
            Standard::Cube(n) => CubeHooks(StandardCube::new(*n)).coproduct(k),
        }
    }
    fn join(&self, a: &Cell, b: &Cell) -> FreeElement<Cell> {
        match self {
            Standard::Simplex(n) => SimplexHooks(StandardSimplex::new(*n)).join(a, b),
            Standard::Cube(n) => CubeHooks(StandardCube::new(*n)).join(a, b),
        }
    }
    fn boundary(&self, k: &Cell) -> FreeElement<Cell> {
        match self {
            Standard::Simplex(n) => SimplexHooks(StandardSimplex::new(*n)).boundary(k),
            Standard::Cube(n) => CubeHooks(StandardCube::new(*n)).boundary(k),
        }
    }
    fn basis(&self) -> Vec<Cell> {
        match self {
            Standard::Simplex(n) => StandardSimplex::new(*n).all_cells(),
            Standard::Cube(n) => StandardCube::new(*n).all_cells(),
        }
    }
    fn basepoint(&self) -> Cell {
        match self {
            Standard::Simplex(_) => mask_cell(1),
            Standard::Cube(_) => Cell { dim: 0, id: 0 },
        }
    }
}

/// The tensor product A ⊗ B, with the coproduct and join transported along
/// the Hopf coproduct of the prop.
#[derive(Clone, Copy, Debug)]
pub struct TensorHooks<A, B>(pub A, pub B);

impl<A: MHooks, B: MHooks> MHooks for TensorHooks<A, B> {
    type K = (A::K, B::K);
    fn contains(&self, k: &Self::K) -> bool {
        self.0.contains(&k.0) && self.1.contains(&k.1)
    }
    fn counit(&self, k: &Self::K) -> i64 {
        self.0.counit(&k.0) * self.1.counit(&k.1)
    }
    fn coproduct(&self, k: &Self::K) -> FreeElement<(Self::K, Self::K)> {
        let mut out = FreeElement::zero();
        for ((a1, a2), c) in self.0.coproduct(&k.0).iter() {
            for ((b1, b2), d) in self.1.coproduct(&k.1).iter() {
                let s = sign(a2.degree() * b1.degree());
                out.add_term(((a1.clone(), b1.clone()), (a2.clone(), b2.clone())), s * c * d);
            }
        }
        out
    }
    /// (a⊗b)∗(a'⊗b') = (−1)^{|b||a'|} [(−1)^{|a|+|a'|} ε(a') a ⊗ b∗b' + ε(b) a∗a' ⊗ b'].
    fn join(&self, x: &Self::K, y: &Self::K) -> FreeElement<Self::K> {
        let ((a, b), (a2, b2)) = (x, y);
        let s = sign(b.degree() * a2.degree());
        let mut out = FreeElement::zero();
        let ea2 = self.0.counit(a2);
        if ea2 != 0 {
            for (bb, c) in self.1.join(b, b2).iter() {
                out.add_term((a.clone(), bb.clone()), s * sign(a.degree() + a2.degree()) * ea2 * c);
            }
        }
        let eb = self.1.counit(b);
        if eb != 0 {
            for (aa, c) in self.0.join(a, a2).iter() {
                out.add_term((aa.clone(), b2.clone()), s * eb * c);
            }
        }
        out
    }
    fn boundary(&self, k: &Self::K) -> FreeElement<Self::K> {
        let mut out = FreeElement::zero();
        for (a, c) in self.0.boundary(&k.0).iter() {
            out.add_term((a.clone(), k.1.clone()), c);
        }
        let s = sign(k.0.degree());
        for (b, c) in self.1.boundary(&k.1).iter() {
            out.add_term((k.0.clone(), b.clone()), s * c);
        }
        out
    }
    fn basis(&self) -> Vec<Self::K> {
        let bs = self.1.basis();
        self.0.basis().into_iter().flat_map(|a| bs.iter().map(move |b| (a.clone(), b.clone()))).collect()
    }
    fn basepoint(&self) -> Self::K {
        (self.0.basepoint(), self.1.basepoint())
    }
}

/// Sign relating the vertex order to the order in which joins are applied:
/// the graph equals its reverse-topological composite up to this sign.
pub fn order_sign(g: &PropGraph) -> Result<i64, PropError> {
    let topo = g.topological_order()?;
    let joins: Vec<usize> = topo.iter().rev().copied().filter(|&v| g.vertices()[v] == Gen::Join).collect();
    let mut inv = 0;
    for a in 0..joins.len() {
        for b in a + 1..joins.len() {
            if joins[a] > joins[b] {
                inv += 1;
            }
        }
    }
    Ok(sign(inv))
}

fn apply_vertex<H: MHooks>(h: &H, gen: Gen, args: &[H::K]) -> FreeElement<Vec<H::K>> {
    match gen {
        Gen::Counit => {
            let e = h.counit(&args[0]);
            if e == 0 {
                FreeElement::zero()
            } else {
                FreeElement::term(vec![], e)
            }
        }
        Gen::Coproduct => h.coproduct(&args[0]).map_keys(|(a, b)| Some((vec![a.clone(), b.clone()], 1))),
        Gen::Join => h.join(&args[0], &args[1]).map_keys(|c| Some((vec![c.clone()], 1))),
    }
}

/// The operation of `g` on a tensor word of inputs.
pub fn evaluate<H: MHooks>(g: &PropGraph, h: &H, x: &FreeElement<Vec<H::K>>) -> Result<FreeElement<Vec<H::K>>, PropError> {
    for w in x.keys() {
        if w.len() != g.inputs() {
            return Err(PropError::Arity(format!("graph takes {} inputs, got {}", g.inputs(), w.len())));
        }
        if let Some(k) = w.iter().find(|k| !h.contains(k)) {
            return Err(PropError::HookUndefined(format!("{k:?}")));
        }
    }
    let mut wires: Vec<Source> = (0..g.inputs()).map(Source::Input).collect();
    let mut state = x.clone();
    for v in g.topological_order()? {
        let gen = g.vertices()[v];
        let ins = g.vertex_inputs(v);
        let pos: Vec<usize> = ins.iter().map(|s| wires.iter().position(|w| w == s).expect("live wire")).collect();
        let mut perm: Vec<usize> = (0..wires.len()).filter(|p| !pos.contains(p)).collect();
        let keep = perm.len();
        perm.extend(&pos);
        state = permute(&state, &perm);
        wires = perm[..keep].iter().map(|&p| wires[p]).collect();
        let mut next = FreeElement::zero();
        for (w, c) in state.iter() {
            let (rest, args) = w.split_at(keep);
            let s = sign(gen.degree() * rest.iter().map(Graded::degree).sum::<i64>());
            for (out, d) in apply_vertex(h, gen, args).iter() {
                let mut nw = rest.to_vec();
                nw.extend(out.iter().cloned());
                next.add_term(nw, s * c * d);
            }
        }
        state = next;
        wires.extend((0..gen.coarity()).map(|k| Source::Port(v, k)));
    }
    let perm: Vec<usize> =
        g.outputs().iter().map(|s| wires.iter().position(|w| w == s).expect("output wire")).collect();
    Ok(permute(&state, &perm).scale(order_sign(g)?))
}

/// Linear extension of [`evaluate`] to formal combinations of graphs.
pub fn evaluate_element<H: MHooks>(
    e: &FreeElement<PropGraph>,
    h: &H,
    x: &FreeElement<Vec<H::K>>,
) -> Result<FreeElement<Vec<H::K>>, PropError> {
    let mut out = FreeElement::zero();
    for (g, c) in e.iter() {
        out.add_scaled(&evaluate(g, h, x)?, c);
    }
    Ok(out)
}

/// Boundary on tensor words with Koszul signs.
pub fn tensor_boundary<H: MHooks>(h: &H, x: &FreeElement<Vec<H::K>>) -> FreeElement<Vec<H::K>> {
    let mut out = FreeElement::zero();
    for (w, c) in x.iter() {
        let mut before = 0i64;
        for (i, k) in w.iter().enumerate() {
            for (b, d) in h.boundary(k).iter() {
                let mut nw = w.clone();
                nw[i] = b.clone();
                out.add_term(nw, sign(before) * c * d);
            }
            before += k.degree();
        }
    }
    out
}

/// `(∂f)(x) = ∂(f x) − (−1)^{|f|} f(∂x)` for the operation `f` of a graph.
pub fn hom_boundary<H: MHooks>(g: &PropGraph, h: &H, x: &FreeElement<Vec<H::K>>) -> Result<FreeElement<Vec<H::K>>, PropError> {
    let fx = evaluate(g, h, x)?;
    let fdx = evaluate(g, h, &tensor_boundary(h, x))?;
    Ok(tensor_boundary(h, &fx) - fdx.scale(sign(g.degree())))
}

/// All tensor words of length `m` over the basis.
pub fn basis_words<H: MHooks>(h: &H, m: usize) -> Vec<Vec<H::K>> {
    let b = h.basis();
    let mut out: Vec<Vec<H::K>> = vec![vec![]];
    for _ in 0..m {
        out = out.into_iter().flat_map(|w| b.iter().map(move |k| [w.clone(), vec![k.clone()]].concat())).collect();
    }
    out
}

/// Unshuffle (a₁⊗b₁)⊗…⊗(a_m⊗b_m) ↦ (a₁⊗…⊗a_m)⊗(b₁⊗…⊗b_m) with Koszul sign.
pub fn unshuffle<A: Key, B: Key>(w: &[(A, B)]) -> ((Vec<A>, Vec<B>), i64) {
    let degs: Vec<i64> = w.iter().flat_map(|(a, b)| [a.degree(), b.degree()]).collect();
    let m = w.len();
    let perm: Vec<usize> = (0..m).map(|i| 2 * i).chain((0..m).map(|i| 2 * i + 1)).collect();
    let s = koszul_sign(&degs, &perm);
    ((w.iter().map(|p| p.0.clone()).collect(), w.iter().map(|p| p.1.clone()).collect()), s)
}

/// Inverse of [`unshuffle`].
pub fn shuffle<A: Key, B: Key>(a: &[A], b: &[B]) -> (Vec<(A, B)>, i64) {
    let w: Vec<(A, B)> = a.iter().cloned().zip(b.iter().cloned()).collect();
    let (_, s) = unshuffle(&w);
    (w, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::vertex_cell;

    #[test]
    fn coproduct_graph_is_aw() {
        let h = SimplexHooks(StandardSimplex::new(2));
        let top = vertex_cell(&[0, 1, 2]);
        let out = evaluate(&PropGraph::coproduct(), &h, &FreeElement::basis(vec![top])).unwrap();
        let aw = simplicial::aw_cell(&StandardSimplex::new(2), top);
        assert_eq!(out, aw.map_keys(|(a, b)| Some((vec![*a, *b], 1))));
    }

    #[test]
    fn join_graph_boundary_is_hom_boundary() {
        let h = SimplexHooks(StandardSimplex::new(2));
        let g = PropGraph::join();
        for w in basis_words(&h, 2) {
            let x = FreeElement::basis(w);
            let lhs = evaluate_element(&g.boundary(), &h, &x).unwrap();
            assert_eq!(lhs, hom_boundary(&g, &h, &x).unwrap());
        }
    }

    #[test]
    fn foreign_cells_are_rejected() {
        let h = SimplexHooks(StandardSimplex::new(1));
        let x = FreeElement::basis(vec![vertex_cell(&[2])]);
        assert!(matches!(evaluate(&PropGraph::coproduct(), &h, &x), Err(PropError::HookUndefined(_))));
    }
}
