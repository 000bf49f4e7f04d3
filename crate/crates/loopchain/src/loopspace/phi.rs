//! The isomorphism φ between cubical chains of the cubical cobar
//! construction and the cobar construction.
//!
//! A bead of dimension 1 goes to [ā] + 1 and a higher bead x to [x̄];
//! a necklace goes to the product of its beads.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Cell, ChainComplex, FreeElement, Graded};
use crate::cobar::{product, Cobar, CobarWord, ExtendedCobar, LocalizedWord};
use crate::cubical::{boundary as cube_boundary, Cubical};
use crate::simplicial::Simplicial;

use super::necklace::{beads, from_beads, is_plain, CubicalCobar};

fn bead_image(b: Cell) -> FreeElement<CobarWord> {
    let mut e = FreeElement::basis(CobarWord::letter(b));
    if b.dim == 1 {
        e.add_term(CobarWord::unit(), 1);
    }
    e
}

/// φ on a plain necklace cell.
pub fn phi(w: &LocalizedWord) -> FreeElement<CobarWord> {
    assert!(is_plain(w), "φ into the cobar construction needs a plain necklace");
    beads(w).into_iter().fold(FreeElement::basis(CobarWord::unit()), |acc, b| product(&acc, &bead_image(b)))
}

pub fn phi_element(e: &FreeElement<LocalizedWord>) -> FreeElement<CobarWord> {
    e.map(phi)
}

/// φ⁻¹: [ā] ↦ a − 1, [x̄] ↦ x, extended multiplicatively.
pub fn phi_inverse(w: &CobarWord) -> FreeElement<LocalizedWord> {
    let mut acc: FreeElement<Vec<Cell>> = FreeElement::basis(Vec::new());
    for &c in &w.0 {
        let mut next = FreeElement::zero();
        for (prefix, k) in acc.iter() {
            let mut with = prefix.clone();
            with.push(c);
            next.add_term(with, k);
            if c.dim == 1 {
                next.add_term(prefix.clone(), -k);
            }
        }
        acc = next;
    }
    acc.map_keys(|bs| Some((from_beads(bs), 1)))
}

pub fn phi_inverse_element(e: &FreeElement<CobarWord>) -> FreeElement<LocalizedWord> {
    e.map(phi_inverse)
}

/// On the localized constructions φ is the identity on cell names:
/// a group letter g_a is the cell [ā] + 1 itself.
pub fn phi_localized(w: &LocalizedWord) -> FreeElement<LocalizedWord> {
    FreeElement::basis(w.clone())
}

/// Cubical chains of Ω_□X in degrees `0..=max_degree`. Without 1-cells in X
/// this is exact. Otherwise the complex is the quotient by the subcomplex
/// φ⁻¹(words longer than the cutoff), written in the basis of cells with at
/// most `cutoff` beads.
pub fn cubical_cobar_complex<S>(cc: &CubicalCobar<S>, max_degree: usize) -> ChainComplex<LocalizedWord>
where
    S: Simplicial + Clone + Send + Sync + 'static,
{
    assert!(!cc.is_localized(), "use the extended cobar for the localized construction");
    let basis: BTreeMap<i64, Vec<LocalizedWord>> = (0..=max_degree).map(|d| (d as i64, cc.cells(d))).collect();
    let me = cc.clone();
    let complete = cc.top_dim().is_some_and(|t| t <= max_degree);
    let c = match cc.cutoff().filter(|_| cc.needs_cutoff()) {
        None => ChainComplex::new(basis, Arc::new(move |w: &LocalizedWord| cube_boundary(&me, w)), 0, max_degree as i64, complete),
        Some(l) => {
            let rule = Arc::new(move |w: &LocalizedWord| {
                let image = phi_element(&cube_boundary(&me, w));
                phi_inverse_element(&image.map_keys(|v| (v.len() <= l).then(|| (v.clone(), 1))))
            });
            ChainComplex::new(basis, rule, 0, max_degree as i64, false).with_word_cutoff(l, false)
        }
    };
    match cc.cutoff() {
        Some(l) if !cc.needs_cutoff() => c.with_word_cutoff(l, l >= max_degree),
        _ => c,
    }
}

/// Outcome of checking φ cell by cell.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PhiCertificate {
    pub max_degree: usize,
    pub cutoff: Option<usize>,
    pub cells: usize,
    pub pairs: usize,
    pub bijection: bool,
    pub chain_map: bool,
    pub multiplicative: bool,
    pub inverse: bool,
    pub failures: Vec<String>,
}

impl PhiCertificate {
    pub fn passed(&self) -> bool {
        self.bijection && self.chain_map && self.multiplicative && self.inverse
    }
}

/// Checks that φ matches bases (same keys, unitriangular by length), commutes
/// with the differentials and products, and that φ⁻¹ inverts it, on all cells
/// of degree ≤ `max_degree` inside the cutoff. Products are checked on all
/// pairs whose degrees sum to at most `max_degree`.
pub fn certify_phi<S: Simplicial + Clone>(x: &S, max_degree: usize, cutoff: Option<usize>) -> Result<PhiCertificate, crate::cobar::CobarError> {
    let cobar = Cobar::new(x.clone())?;
    let cc = CubicalCobar::new(x.clone(), cutoff);
    let mut cert = PhiCertificate { max_degree, cutoff, bijection: true, chain_map: true, multiplicative: true, inverse: true, ..Default::default() };
    let mut all = Vec::new();
    for d in 0..=max_degree {
        let cells = cc.cells(d);
        let words = cobar.words(d, cutoff)?;
        let keys: Vec<CobarWord> = cells.iter().map(|c| CobarWord(beads(c))).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        if sorted != words {
            cert.bijection = false;
            cert.failures.push(format!("degree {d}: {} cells against {} words", cells.len(), words.len()));
        }
        for (c, key) in cells.iter().zip(&keys) {
            let image = phi(c);
            let leading_ok = image.coeff(key) == 1 && image.iter().all(|(w, _)| w == key || w.len() < key.len());
            if !leading_ok {
                cert.bijection = false;
                cert.failures.push(format!("φ({c:?}) is not unitriangular"));
            }
            let lhs = phi_element(&cube_boundary(&cc, c));
            let rhs = cobar.differential_of(&image);
            if lhs != rhs {
                cert.chain_map = false;
                cert.failures.push(format!("φ∂ ≠ dφ on {c:?}"));
            }
            if phi_inverse_element(&image) != FreeElement::basis(c.clone()) {
                cert.inverse = false;
                cert.failures.push(format!("φ⁻¹φ ≠ id on {c:?}"));
            }
            cert.cells += 1;
        }
        all.extend(cells);
    }
    for a in &all {
        for b in &all {
            if a.degree() + b.degree() > max_degree as i64 {
                continue;
            }
            let lhs = phi(&cc.multiply(a, b));
            let rhs = product(&phi(a), &phi(b));
            if lhs != rhs {
                cert.multiplicative = false;
                cert.failures.push(format!("φ(ab) ≠ φ(a)φ(b) for {a:?}, {b:?}"));
            }
            cert.pairs += 1;
        }
    }
    cert.failures.truncate(20);
    Ok(cert)
}

/// The localized version: ∂ on the extended cubical cobar against the
/// extended cobar differential, on cells inside the cutoff.
pub fn certify_phi_localized<S: Simplicial + Clone>(x: &S, max_degree: usize, cutoff: usize) -> Result<PhiCertificate, crate::cobar::CobarError> {
    let ext = ExtendedCobar::new(x.clone())?;
    let cc = CubicalCobar::localized(x.clone(), cutoff);
    let mut cert = PhiCertificate { max_degree, cutoff: Some(cutoff), bijection: true, chain_map: true, multiplicative: true, inverse: true, ..Default::default() };
    for d in 0..=max_degree {
        let cells = cc.cells(d);
        if cells != ext.words(d, cutoff) {
            cert.bijection = false;
            cert.failures.push(format!("degree {d}: cell lists differ"));
        }
        for c in &cells {
            if cube_boundary(&cc, c) != ext.differential(c) {
                cert.chain_map = false;
                cert.failures.push(format!("∂ ≠ d on {c:?}"));
            }
            cert.cells += 1;
        }
    }
    cert.failures.truncate(20);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{smith_homology, Homology, Ring};
    use crate::cubical::check_identities;
    use crate::simplicial::models;

    #[test]
    fn sphere_has_one_cube_per_degree() {
        let x = models::sphere(2);
        let s = x.cell("σ").unwrap();
        let cc = CubicalCobar::new(x, None);
        for n in 0..=4 {
            let cells = cc.cells(n);
            assert_eq!(cells.len(), 1);
            assert_eq!(beads(&cells[0]), vec![s; n]);
        }
        assert_eq!(phi(&cc.cells(1)[0]), FreeElement::basis(CobarWord::letter(s)));
    }

    #[test]
    fn circle_bead_maps_with_unit_shift() {
        let x = models::circle();
        let t = x.cell("σ").unwrap();
        let cc = CubicalCobar::new(x, Some(2));
        let cell = from_beads(&[t]);
        assert!(cc.cells(0).contains(&cell));
        let expect = FreeElement::from_terms([(CobarWord::letter(t), 1), (CobarWord::unit(), 1)]);
        assert_eq!(phi(&cell), expect);
    }

    #[test]
    fn split_face_of_a_single_bead() {
        let x = models::rp2();
        let (a, b, l) = (x.cell("a").unwrap(), x.cell("b").unwrap(), x.cell("L").unwrap());
        let cc = CubicalCobar::new(x, Some(3));
        let cell = from_beads(&[l]);
        // d_0^1 splits [2] into [1] ∨ [1]: front face b, back face a
        let f = cc.cell_face(&cell, 0, true);
        assert!(f.map.is_identity());
        assert_eq!(beads(&f.base), vec![b, a]);
        // d_0^0 deletes the middle vertex, leaving the degenerate edge
        assert_eq!(cc.cell_face(&cell, 0, false).base, LocalizedWord::unit());
    }

    #[test]
    fn certified_on_small_models() {
        for (x, cut) in [(models::sphere(2), None), (models::circle(), Some(4)), (models::rp2(), Some(3)), (models::sphere(3), None)] {
            let cert = certify_phi(&x, 4, cut).unwrap();
            assert!(cert.passed(), "{:?}", cert.failures);
        }
    }

    #[test]
    fn localized_certified() {
        for x in [models::circle(), models::rp2()] {
            let cert = certify_phi_localized(&x, 2, 2).unwrap();
            assert!(cert.passed(), "{:?}", cert.failures);
        }
    }

    #[test]
    fn cubical_identities_hold() {
        check_identities(&CubicalCobar::new(models::sphere(2), None), 4).unwrap();
        check_identities(&CubicalCobar::new(models::rp2(), Some(3)), 3).unwrap();
        check_identities(&CubicalCobar::localized(models::rp2(), 2), 2).unwrap();
    }

    #[test]
    fn loop_homology_from_cubes() {
        let cc = CubicalCobar::new(models::sphere(2), None);
        let c = cubical_cobar_complex(&cc, 5);
        for n in 0..=4 {
            assert_eq!(smith_homology(&c, n, Ring::Integers).unwrap(), Homology::free(1));
        }
    }

    #[test]
    fn product_is_associative_and_unital() {
        let cc = CubicalCobar::new(models::rp2(), Some(3));
        let cells: Vec<LocalizedWord> = (0..=1).flat_map(|d| cc.cells(d)).collect();
        for a in &cells {
            assert_eq!(&cc.multiply(a, &cc.unit()), a);
            assert_eq!(&cc.multiply(&cc.unit(), a), a);
            for b in cells.iter().take(8) {
                for c in cells.iter().take(8) {
                    assert_eq!(cc.multiply(&cc.multiply(a, b), c), cc.multiply(a, &cc.multiply(b, c)));
                }
            }
        }
    }
}
