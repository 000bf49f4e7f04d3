//! The E∞-structure of the cobar construction, transferred along φ from the
//! cubical chains of the cubical cobar construction.

use crate::algebra::{FreeElement, Ring};
use crate::cobar::{Cobar, CobarWord, LocalizedWord};
use crate::einfty::{tensor_boundary_with, um_action, Cub, EInftyError, Psi};
use crate::prop::{act, resolution_differential, PropGraph, PsiTable, Standard};
use crate::simplicial::Simplicial;

use super::necklace::CubicalCobar;
use super::phi::{phi, phi_inverse};

/// φ^{⊗r} on tensor words of necklace cells.
pub fn phi_tensor(e: &FreeElement<Vec<LocalizedWord>>) -> FreeElement<Vec<CobarWord>> {
    let mut out = FreeElement::zero();
    for (word, k) in e.iter() {
        let mut acc: FreeElement<Vec<CobarWord>> = FreeElement::basis(Vec::new());
        for c in word {
            let img = phi(c);
            let mut next = FreeElement::zero();
            for (prefix, a) in acc.iter() {
                for (w, b) in img.iter() {
                    let mut v = prefix.clone();
                    v.push(w.clone());
                    next.add_term(v, a * b);
                }
            }
            acc = next;
        }
        out.add_scaled(&acc, k);
    }
    out
}

/// The cobar construction with its transferred structure.
pub struct CobarAction<S> {
    cubes: Cub<CubicalCobar<S>>,
    cobar: Cobar<S>,
}

impl<S: Simplicial + Clone> CobarAction<S> {
    pub fn new(x: S) -> Result<Self, crate::cobar::CobarError> {
        let cobar = Cobar::new(x.clone())?;
        // φ⁻¹ of a word never has more beads than the word has letters
        Ok(CobarAction { cubes: Cub(CubicalCobar::new(x, None)), cobar })
    }

    pub fn cobar(&self) -> &Cobar<S> {
        &self.cobar
    }

    /// A single-input graph acting on a word: φ^{⊗r} ∘ op ∘ φ⁻¹.
    pub fn operation(&self, g: &PropGraph, w: &CobarWord) -> Result<FreeElement<Vec<CobarWord>>, EInftyError> {
        let mut out = FreeElement::zero();
        for (c, k) in phi_inverse(w).iter() {
            out.add_scaled(&phi_tensor(&um_action(&self.cubes, g, c)?), k);
        }
        Ok(out)
    }

    /// ψ(e_i) on cobar chains; the table must be built on cubes.
    pub fn psi(&self, table: &PsiTable, i: usize, e: &FreeElement<CobarWord>) -> Result<FreeElement<Vec<CobarWord>>, EInftyError> {
        assert!(matches!(table.shape, Standard::Cube(_)), "the cobar structure comes from cubes");
        let psi = Psi::new(&self.cubes, table);
        let mut out = FreeElement::zero();
        for (w, k) in e.iter() {
            out.add_scaled(&phi_tensor(&psi.apply(i, &phi_inverse(w))?), k);
        }
        Ok(out)
    }

    /// ∂Δ_i(w) + Δ_i(dw) + (1+T)Δ_{i−1}(w) mod 2 in cobar ⊗ cobar.
    pub fn cup_i_defect(&self, table: &PsiTable, i: usize, w: &CobarWord) -> Result<FreeElement<Vec<CobarWord>>, EInftyError> {
        let e = FreeElement::basis(w.clone());
        let mut out = tensor_boundary_with(|v: &CobarWord| self.cobar.differential(v), &self.psi(table, i, &e)?);
        out.add_scaled(&self.psi(table, i, &self.cobar.differential(w))?, 1);
        if i > 0 {
            out.add_scaled(&act(&resolution_differential(2, i), &self.psi(table, i - 1, &e)?, 2), 1);
        }
        Ok(out.reduce(Ring::PrimeField { p: 2 }))
    }

    /// The transferred coproduct (ψ(e₀) for p = 2).
    pub fn coproduct(&self, table: &PsiTable, e: &FreeElement<CobarWord>) -> Result<FreeElement<Vec<CobarWord>>, EInftyError> {
        self.psi(table, 0, e)
    }
}

/// (Δ⊗1)Δ − (1⊗Δ)Δ, given Δ on words.
pub fn coassociativity_defect<F>(delta: F, w: &CobarWord) -> Result<FreeElement<Vec<CobarWord>>, EInftyError>
where
    F: Fn(&FreeElement<CobarWord>) -> Result<FreeElement<Vec<CobarWord>>, EInftyError>,
{
    let d = delta(&FreeElement::basis(w.clone()))?;
    let mut out = FreeElement::zero();
    for (pair, k) in d.iter() {
        let left = delta(&FreeElement::basis(pair[0].clone()))?;
        for (ab, c) in left.iter() {
            out.add_term(vec![ab[0].clone(), ab[1].clone(), pair[1].clone()], k * c);
        }
        let right = delta(&FreeElement::basis(pair[1].clone()))?;
        for (ab, c) in right.iter() {
            out.add_term(vec![pair[0].clone(), ab[0].clone(), ab[1].clone()], -k * c);
        }
    }
    Ok(out)
}

/// (ε⊗1)Δ − id and (1⊗ε)Δ − id, with ε the projection onto the unit word.
pub fn counit_defect(d: &FreeElement<Vec<CobarWord>>, w: &CobarWord) -> (FreeElement<CobarWord>, FreeElement<CobarWord>) {
    let mut left = FreeElement::term(w.clone(), -1);
    let mut right = FreeElement::term(w.clone(), -1);
    for (pair, k) in d.iter() {
        if pair[0].is_empty() {
            left.add_term(pair[1].clone(), k);
        }
        if pair[1].is_empty() {
            right.add_term(pair[0].clone(), k);
        }
    }
    (left, right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::models;

    #[test]
    fn coproduct_of_sphere_words() {
        let x = models::sphere(2);
        let s = x.cell("σ").unwrap();
        let a = CobarAction::new(x).unwrap();
        let table = PsiTable::new(2, Standard::Cube(0), 3, 0);
        // σ̄ is primitive: Δ[σ̄] = 1⊗[σ̄] + [σ̄]⊗1
        let d = a.coproduct(&table, &FreeElement::basis(CobarWord::letter(s))).unwrap();
        let expect = FreeElement::from_terms([
            (vec![CobarWord::unit(), CobarWord::letter(s)], 1),
            (vec![CobarWord::letter(s), CobarWord::unit()], 1),
        ]);
        assert_eq!(d, expect);
    }

    #[test]
    fn transferred_coproduct_is_coassociative_and_counital() {
        for (x, cut) in [(models::sphere(2), None), (models::rp2(), Some(2))] {
            let a = CobarAction::new(x).unwrap();
            let table = PsiTable::new(2, Standard::Cube(0), 4, 0);
            for n in 0..=3 {
                for w in a.cobar().words(n, cut).unwrap() {
                    let d = a.coproduct(&table, &FreeElement::basis(w.clone())).unwrap();
                    let (l, r) = counit_defect(&d, &w);
                    assert!(l.is_zero() && r.is_zero(), "counit on {w:?}");
                    let c = coassociativity_defect(|e| a.coproduct(&table, e), &w).unwrap();
                    assert!(c.is_zero(), "coassociativity on {w:?}");
                }
            }
        }
    }

    #[test]
    fn cup_one_on_sphere_cobar() {
        let x = models::sphere(2);
        let a = CobarAction::new(x).unwrap();
        let table = PsiTable::new(2, Standard::Cube(0), 3, 2);
        for n in 0..=3 {
            for w in a.cobar().words(n, None).unwrap() {
                for i in 0..=2 {
                    assert!(a.cup_i_defect(&table, i, &w).unwrap().is_zero(), "i={i} on {w:?}");
                }
            }
        }
    }
}
