use loopchain::algebra::{FreeElement, Graded};
use loopchain::cubical::StandardCube;
use loopchain::prop::*;
use loopchain::simplicial::StandardSimplex;

fn simplex(n: usize) -> SimplexHooks {
    SimplexHooks(StandardSimplex::new(n))
}

fn cube(n: usize) -> CubeHooks {
    CubeHooks(StandardCube::new(n))
}

#[test]
fn enumeration_size() {
    let gs = PropGraph::enumerate(2, 4, 3, 3);
    println!("{}", gs.len());
    assert!(gs.len() > 100);
}

#[test]
fn boundary_squares_to_zero() {
    for g in PropGraph::enumerate(2, 5, 3, 3) {
        let dd = g.boundary().map(|h| h.boundary());
        assert!(dd.is_zero(), "{g:?}");
    }
}

fn check_evaluation_is_chain_map<H: MHooks>(h: &H, max_vertices: usize) {
    for g in PropGraph::enumerate(2, max_vertices, 2, 2) {
        for w in basis_words(h, g.inputs()) {
            let x = FreeElement::basis(w);
            let lhs = evaluate_element(&g.boundary(), h, &x).unwrap();
            let rhs = hom_boundary(&g, h, &x).unwrap();
            assert_eq!(lhs, rhs, "{g:?} on {x:?}");
        }
    }
}

#[test]
fn evaluation_commutes_with_boundary() {
    check_evaluation_is_chain_map(&simplex(2), 3);
    check_evaluation_is_chain_map(&cube(1), 3);
}

fn relation_graphs() -> Vec<(PropGraph, PropGraph)> {
    let id = PropGraph::identity(1);
    let d = PropGraph::coproduct();
    let e = PropGraph::counit();
    let left = PropGraph::compose(&PropGraph::disjoint_union(&id, &e), &d).unwrap();
    let right = PropGraph::compose(&PropGraph::disjoint_union(&e, &id), &d).unwrap();
    let dl = PropGraph::compose(&PropGraph::disjoint_union(&d, &id), &d).unwrap();
    let dr = PropGraph::compose(&PropGraph::disjoint_union(&id, &d), &d).unwrap();
    vec![(left, id.clone()), (right, id), (dl, dr)]
}

fn check_relations<H: MHooks>(h: &H) {
    for (a, b) in relation_graphs() {
        for w in basis_words(h, 1) {
            let x = FreeElement::basis(w);
            assert_eq!(evaluate(&a, h, &x).unwrap(), evaluate(&b, h, &x).unwrap(), "{a:?} vs {b:?}");
        }
    }
    let pc = PropGraph::compose(&PropGraph::counit(), &PropGraph::join()).unwrap();
    for w in basis_words(h, 2) {
        assert!(evaluate(&pc, h, &FreeElement::basis(w)).unwrap().is_zero());
    }
}

#[test]
fn relations_hold_on_standard_models() {
    for n in 0..=3 {
        check_relations(&simplex(n));
        check_relations(&cube(n));
    }
}

fn check_hopf_chain_map<A: MHooks, B: MHooks>(ha: &A, hb: &B, graphs: &[PropGraph]) {
    for g in graphs {
        let lhs = pair_boundary(&hopf_coproduct(g));
        let rhs = hopf_coproduct_element(&g.boundary());
        for x in basis_words(ha, g.inputs()) {
            for y in basis_words(hb, g.inputs()) {
                assert_eq!(
                    evaluate_pair(&lhs, ha, hb, &x, &y).unwrap(),
                    evaluate_pair(&rhs, ha, hb, &x, &y).unwrap(),
                    "{g:?}"
                );
            }
        }
    }
}

#[test]
fn hopf_coproduct_is_a_chain_map() {
    let gs = PropGraph::enumerate(2, 3, 2, 2);
    check_hopf_chain_map(&simplex(1), &cube(1), &gs);
}

#[test]
fn monoidality_on_small_models() {
    let gs = PropGraph::enumerate(2, 3, 2, 2);
    let (a, b) = (simplex(1), cube(1));
    let th = TensorHooks(a, b);
    for g in &gs {
        for w in basis_words(&th, g.inputs()) {
            let (direct, via) = monoidality_sides(g, &a, &b, &w).unwrap();
            assert_eq!(direct, via, "{g:?} on {w:?}");
        }
    }
}

#[test]
fn vertex_order_does_not_matter() {
    let h = TensorHooks(simplex(1), simplex(1));
    for g in PropGraph::enumerate(2, 3, 2, 2).into_iter().filter(|g| g.degree() == 2) {
        let n = g.vertices().len();
        let rev: Vec<usize> = (0..n).rev().collect();
        let r = g.reorder(&rev).unwrap();
        for w in basis_words(&h, g.inputs()) {
            let x = FreeElement::basis(w);
            assert_eq!(evaluate(&g, &h, &x).unwrap(), evaluate(&r, &h, &x).unwrap());
        }
    }
}
