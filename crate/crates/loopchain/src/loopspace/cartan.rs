//! The Cartan–Serre comparison from simplicial chains of X to cubical chains
//! of U(X), through the collapse (Δ¹)^{×n} → Δⁿ sending a vertex to its
//! number of leading 1's.

use serde::Serialize;

use crate::algebra::{Cell, FreeElement};
use crate::cubical::{boundary as cube_boundary, serre_cell, Cubical, UAdjoint, UCube};
use crate::einfty::{um_action, Cub, EInftyError, Simp};
use crate::prop::PropGraph;
use crate::simplicial::{aw_cell, boundary, Simplicial, SimplexRef};

/// Leading 1's of a vertex of (Δ¹)^{×n}, coordinate 0 first.
pub fn collapse_vertex(mask: u32, n: usize) -> u32 {
    (0..n as u32).take_while(|&j| mask >> j & 1 == 1).count() as u32
}

/// The cube σ ∘ collapse, with its degeneracy.
pub fn cartan_serre_cube<S: Simplicial + Clone>(x: &S, sigma: &SimplexRef) -> UCube {
    let n = sigma.dim();
    UAdjoint::<S>::from_fn(n, |chain| {
        let theta: Vec<u32> = chain.iter().map(|&m| collapse_vertex(m, n)).collect();
        x.apply(sigma, &theta)
    })
}

/// CS on a cell; `None` when the cube is degenerate.
pub fn cartan_serre<S: Simplicial + Clone>(u: &UAdjoint<S>, c: Cell) -> Option<UCube> {
    u.as_cell(&cartan_serre_cube(&u.x, &SimplexRef::nondegenerate(c)))
}

pub fn cartan_serre_chain<S: Simplicial + Clone>(u: &UAdjoint<S>, e: &FreeElement<Cell>) -> FreeElement<UCube> {
    e.map_keys(|c| cartan_serre(u, *c).map(|q| (q, 1)))
}

fn tensor_cs<S: Simplicial + Clone>(u: &UAdjoint<S>, e: &FreeElement<Vec<Cell>>) -> FreeElement<Vec<UCube>> {
    e.map_keys(|w| w.iter().map(|c| cartan_serre(u, *c)).collect::<Option<Vec<_>>>().map(|v| (v, 1)))
}

/// Counts and the first counterexample of each certificate.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CartanSerreReport {
    pub cells: usize,
    pub chain_map: bool,
    pub coalgebra_morphism: bool,
    pub failures: Vec<String>,
}

/// CS∘∂ = ∂∘CS and (CS⊗CS)∘Δ_AW = Δ_Serre∘CS on cells of dimension ≤ max_dim.
pub fn certify_cartan_serre<S: Simplicial + Clone>(x: &S, max_dim: usize) -> CartanSerreReport {
    let u = UAdjoint::new(x.clone());
    let mut r = CartanSerreReport { chain_map: true, coalgebra_morphism: true, ..Default::default() };
    for n in 0..=max_dim {
        for c in x.cells(n) {
            r.cells += 1;
            let image = cartan_serre_chain(&u, &FreeElement::basis(c));
            let lhs = cartan_serre_chain(&u, &boundary(x, c));
            let rhs = image.map(|q| cube_boundary(&u, q));
            if lhs != rhs {
                r.chain_map = false;
                r.failures.push(format!("chain map fails on {c:?}"));
            }
            let aw = aw_cell(x, c).map_keys(|(a, b)| Some((vec![*a, *b], 1)));
            let lhs = tensor_cs(&u, &aw);
            let rhs = image.map(|q| serre_cell(&u, q).map_keys(|(a, b)| Some((vec![a.clone(), b.clone()], 1))));
            if lhs != rhs {
                r.coalgebra_morphism = false;
                r.failures.push(format!("coalgebra morphism fails on {c:?}"));
            }
        }
    }
    r
}

/// CS^{⊗r}(op(σ)) − op(CS σ) for a single-input graph.
pub fn msl_naturality_defect<S>(x: &S, g: &PropGraph, c: Cell) -> Result<FreeElement<Vec<UCube>>, EInftyError>
where
    S: Simplicial + Clone,
{
    let u = UAdjoint::new(x.clone());
    let mut out = tensor_cs(&u, &um_action(&Simp(x.clone()), g, &c)?);
    if let Some(q) = cartan_serre(&u, c) {
        out.add_scaled(&um_action(&Cub(u.clone()), g, &q)?, -1);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prop::msl_generator;
    use crate::simplicial::models;

    #[test]
    fn vertex_rule() {
        assert_eq!(collapse_vertex(0b000, 3), 0);
        assert_eq!(collapse_vertex(0b011, 3), 2);
        assert_eq!(collapse_vertex(0b101, 3), 1);
        assert_eq!(collapse_vertex(0b111, 3), 3);
    }

    #[test]
    fn certificates_on_simplices() {
        for n in 0..=3 {
            let r = certify_cartan_serre(&models::simplex(n), n);
            assert!(r.chain_map && r.coalgebra_morphism, "{:?}", r.failures);
        }
    }

    #[test]
    fn arity_two_naturality() {
        for n in 0..=2 {
            let x = models::simplex(n);
            for a in [vec![vec![0], vec![1]], vec![vec![0, 2], vec![1]], vec![vec![0, 1], vec![2]], vec![vec![0], vec![1, 2]]] {
                let g = msl_generator(&a).unwrap();
                for d in 0..=n {
                    for c in x.cells(d) {
                        let defect = msl_naturality_defect(&x, &g, c).unwrap();
                        assert!(defect.is_zero(), "{a:?} on {c:?}: {defect:?}");
                    }
                }
            }
        }
        // the check is not vacuous: the cup-1 shape acts nontrivially on Δ²
        let x = models::simplex(2);
        let g = msl_generator(&[vec![0, 2], vec![1]]).unwrap();
        assert!(!um_action(&Simp(x.clone()), &g, &x.cells(2)[0]).unwrap().is_zero());
    }
}
