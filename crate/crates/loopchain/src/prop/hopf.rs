//! The Hopf structure: Δ_M substitutes the Serre diagonal of [0,1]^{⊗d}
//! into the joins of a graph, ε_M detects degree 0.

use crate::algebra::{sign, FreeElement, Graded, Key};

use super::eval::{evaluate, shuffle, unshuffle, MHooks, TensorHooks};
use super::graph::PropGraph;
use super::PropError;

/// Each join goes either to the right factor (left gets id⊗ε) or to the
/// left factor (right gets ε⊗id); the sign counts right-joins preceding
/// left-joins in vertex order.
pub fn hopf_coproduct(g: &PropGraph) -> FreeElement<(PropGraph, PropGraph)> {
    let joins = g.joins();
    let d = joins.len();
    let mut out = FreeElement::zero();
    for left in 0u32..1 << d {
        let (mut a, mut b) = (g.clone(), g.clone());
        let mut inv = 0i64;
        let mut rights_seen = 0i64;
        for (t, &v) in joins.iter().enumerate() {
            if left >> t & 1 == 1 {
                b = b.collapse_join(v, 1);
                inv += rights_seen;
            } else {
                a = a.collapse_join(v, 0);
                rights_seen += 1;
            }
        }
        out.add_term((a, b), sign(inv));
    }
    out
}

pub fn hopf_counit(g: &PropGraph) -> i64 {
    i64::from(g.degree() == 0)
}

/// Boundary on M ⊗ M.
pub fn pair_boundary(e: &FreeElement<(PropGraph, PropGraph)>) -> FreeElement<(PropGraph, PropGraph)> {
    let mut out = FreeElement::zero();
    for ((a, b), c) in e.iter() {
        for (da, d) in a.boundary().iter() {
            out.add_term((da.clone(), b.clone()), c * d);
        }
        let s = sign(a.degree());
        for (db, d) in b.boundary().iter() {
            out.add_term((a.clone(), db.clone()), s * c * d);
        }
    }
    out
}

/// Δ_M extended linearly.
pub fn hopf_coproduct_element(e: &FreeElement<PropGraph>) -> FreeElement<(PropGraph, PropGraph)> {
    e.map(hopf_coproduct)
}

/// `(Γ₁⊗Γ₂)(x⊗y) = (−1)^{|Γ₂||x|} Γ₁(x) ⊗ Γ₂(y)` on an A-word and a B-word.
pub fn evaluate_pair<A: MHooks, B: MHooks>(
    e: &FreeElement<(PropGraph, PropGraph)>,
    ha: &A,
    hb: &B,
    x: &[A::K],
    y: &[B::K],
) -> Result<FreeElement<(Vec<A::K>, Vec<B::K>)>, PropError> {
    let xd: i64 = x.iter().map(Graded::degree).sum();
    let mut out = FreeElement::zero();
    for ((g1, g2), c) in e.iter() {
        let fx = evaluate(g1, ha, &FreeElement::basis(x.to_vec()))?;
        let fy = evaluate(g2, hb, &FreeElement::basis(y.to_vec()))?;
        let s = sign(g2.degree() * xd);
        for (u, a) in fx.iter() {
            for (v, b) in fy.iter() {
                out.add_term((u.clone(), v.clone()), s * c * a * b);
            }
        }
    }
    Ok(out)
}

/// Both sides of monoidality on one input word of A ⊗ B: `Γ` acting on the
/// tensor product, and `Δ_M(Γ)` acting factorwise, shuffled back.
pub fn monoidality_sides<A: MHooks, B: MHooks>(
    g: &PropGraph,
    ha: &A,
    hb: &B,
    w: &[(A::K, B::K)],
) -> Result<(FreeElement<Vec<(A::K, B::K)>>, FreeElement<Vec<(A::K, B::K)>>), PropError>
where
    (A::K, B::K): Key,
{
    let th = TensorHooks(ha, hb);
    let direct = evaluate(g, &th, &FreeElement::basis(w.to_vec()))?;
    let ((x, y), s) = unshuffle(w);
    let split = evaluate_pair(&hopf_coproduct(g), ha, hb, &x, &y)?;
    let mut via = FreeElement::zero();
    for ((u, v), c) in split.iter() {
        let (word, t) = shuffle(u, v);
        via.add_term(word, s * t * c);
    }
    Ok((direct, via))
}

impl<A: MHooks> MHooks for &A {
    type K = A::K;
    fn contains(&self, k: &Self::K) -> bool {
        (*self).contains(k)
    }
    fn counit(&self, k: &Self::K) -> i64 {
        (*self).counit(k)
    }
    fn coproduct(&self, k: &Self::K) -> FreeElement<(Self::K, Self::K)> {
        (*self).coproduct(k)
    }
    fn join(&self, a: &Self::K, b: &Self::K) -> FreeElement<Self::K> {
        (*self).join(a, b)
    }
    fn boundary(&self, k: &Self::K) -> FreeElement<Self::K> {
        (*self).boundary(k)
    }
    fn basis(&self) -> Vec<Self::K> {
        (*self).basis()
    }
    fn basepoint(&self) -> Self::K {
        (*self).basepoint()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        let d = PropGraph::coproduct();
        assert_eq!(hopf_coproduct(&d), FreeElement::basis((d.clone(), d)));
        let e = PropGraph::counit();
        assert_eq!(hopf_coproduct(&e), FreeElement::basis((e.clone(), e.clone())));
        assert_eq!(hopf_counit(&e), 1);
        assert_eq!(hopf_counit(&PropGraph::join()), 0);
        let j = PropGraph::join();
        let expected = FreeElement::basis((j.collapse_join(0, 0), j.clone())) + FreeElement::basis((j.clone(), j.collapse_join(0, 1)));
        assert_eq!(hopf_coproduct(&j), expected);
    }

    #[test]
    fn two_joins_have_one_negative_term() {
        let g = PropGraph::from_sexpr("(graph 3 (a join in0 in1) (b join a in2) (out b))").unwrap();
        let dm = hopf_coproduct(&g);
        assert_eq!(dm.len(), 4);
        assert_eq!(dm.iter().filter(|(_, c)| *c == -1).count(), 1);
    }
}
