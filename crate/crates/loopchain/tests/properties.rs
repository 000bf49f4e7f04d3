//! Randomized invariants across modules.

mod common;

use loopchain::algebra::{FreeElement, Graded};
use loopchain::cobar::{product, Cobar, ExtendedCobar};
use loopchain::einfty::{um_action, Simp};
use loopchain::loopspace::{phi_element, phi_inverse, KanLoopGroup, KanWord};
use loopchain::prop::PropGraph;
use loopchain::simplicial::{models, Simplicial};
use proptest::prelude::*;

/// A word in the generators of G_n from (index, inverted) picks.
fn word(g: &KanLoopGroup<loopchain::simplicial::SimplicialSet>, n: usize, picks: &[(usize, bool)]) -> KanWord {
    let gens = g.generators(n);
    let mut w = KanWord::identity();
    for &(i, inv) in picks {
        let x = KanWord::generator(gens[i % gens.len()].clone());
        w = w.mul(&if inv { x.inverse() } else { x });
    }
    w
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kan_faces_and_degeneracies_are_homomorphisms(
        which in 0usize..3,
        a in prop::collection::vec((0usize..64, any::<bool>()), 0..5),
        b in prop::collection::vec((0usize..64, any::<bool>()), 0..5),
    ) {
        let x = [models::circle(), models::sphere(2), models::rp2()][which].clone();
        let g = KanLoopGroup::new(x);
        let n = 2;
        if g.generators(n).is_empty() {
            return Ok(());
        }
        let (u, v) = (word(&g, n, &a), word(&g, n, &b));
        let uv = u.mul(&v);
        for i in 0..=n {
            prop_assert_eq!(g.face(&uv, i), g.face(&u, i).mul(&g.face(&v, i)));
            prop_assert_eq!(g.face(&u.inverse(), i), g.face(&u, i).inverse());
            prop_assert_eq!(g.degeneracy(&uv, i), g.degeneracy(&u, i).mul(&g.degeneracy(&v, i)));
        }
        for j in 1..=n {
            for i in 0..j {
                prop_assert_eq!(g.face(&g.face(&uv, j), i), g.face(&g.face(&uv, i), j - 1));
            }
        }
    }

    #[test]
    fn random_cobar_laws(seed in any::<u64>()) {
        let x = common::random_reduced(seed, 2);
        let cobar = Cobar::new(x.clone()).unwrap();
        let mut words = Vec::new();
        for n in 0..=3 {
            words.extend(cobar.words(n, Some(2)).unwrap());
        }
        for w in &words {
            prop_assert!(cobar.differential_of(&cobar.differential(w)).is_zero());
            // φ∘φ⁻¹ is the identity on cobar words
            prop_assert_eq!(phi_element(&phi_inverse(w)), FreeElement::basis(w.clone()));
        }
        for u in words.iter().take(12) {
            for v in words.iter().take(12) {
                if u.degree() + v.degree() > 3 {
                    continue;
                }
                let (eu, ev) = (FreeElement::basis(u.clone()), FreeElement::basis(v.clone()));
                let lhs = cobar.differential_of(&product(&eu, &ev));
                let mut rhs = product(&cobar.differential(u), &ev);
                rhs.add_scaled(&product(&eu, &cobar.differential(v)), if u.degree() % 2 == 0 { 1 } else { -1 });
                prop_assert_eq!(lhs, rhs);
            }
        }
        let ext = ExtendedCobar::new(x).unwrap();
        for n in 0..=2 {
            for w in ext.words(n, 2).into_iter().take(200) {
                prop_assert!(ext.differential_of(&ext.differential(&w)).is_zero());
            }
        }
    }
}

/// f_* commutes with a single-input operation for the quotient Δⁿ → Sⁿ.
#[test]
fn operations_are_natural_under_the_sphere_quotient() {
    let graphs: Vec<PropGraph> = PropGraph::enumerate(1, 3, 2, 3).into_iter().filter(|g| g.inputs() == 1).collect();
    assert!(graphs.len() > 5);
    for n in 1..=3 {
        let f = models::sphere_quotient(n);
        let (src, tgt) = (Simp(f.source.clone()), Simp(f.target.clone()));
        for g in &graphs {
            for d in 0..=n {
                for c in f.source.cells(d) {
                    let image = um_action(&src, g, &c).unwrap();
                    let mut pushed = FreeElement::zero();
                    for (w, k) in image.iter() {
                        let mapped: Option<Vec<_>> = w.iter().map(|&x| f.on_cell(x)).collect();
                        if let Some(m) = mapped {
                            pushed.add_term(m, k);
                        }
                    }
                    let direct = match f.on_cell(c) {
                        Some(fc) => um_action(&tgt, g, &fc).unwrap(),
                        None => FreeElement::zero(),
                    };
                    assert_eq!(pushed, direct, "{} on {c:?} in Δ^{n}", g.to_sexpr());
                }
            }
        }
    }
}
