//! The cobar construction on normalized chains of a reduced simplicial set.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{sign, Cell, ChainComplex, FreeElement, Graded};
use crate::simplicial::{aw_cell, boundary, Simplicial};

use super::CobarError;

/// A word [x̄₁|…|x̄_k] of desuspended cells of dimension ≥ 1; the empty
/// word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CobarWord(pub Vec<Cell>);

impl Graded for CobarWord {
    fn degree(&self) -> i64 {
        self.0.iter().map(|c| c.dim as i64 - 1).sum()
    }
}

impl CobarWord {
    pub fn unit() -> CobarWord {
        CobarWord(Vec::new())
    }

    pub fn letter(c: Cell) -> CobarWord {
        CobarWord(vec![c])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &CobarWord) -> CobarWord {
        CobarWord(self.0.iter().chain(&other.0).copied().collect())
    }
}

/// Concatenation, extended bilinearly.
pub fn product(a: &FreeElement<CobarWord>, b: &FreeElement<CobarWord>) -> FreeElement<CobarWord> {
    let mut out = FreeElement::zero();
    for (u, c) in a.iter() {
        for (v, e) in b.iter() {
            out.add_term(u.concat(v), c * e);
        }
    }
    out
}

/// Cobar construction of a reduced simplicial set.
#[derive(Clone, Debug)]
pub struct Cobar<S> {
    x: S,
}

impl<S: Simplicial> Cobar<S> {
    pub fn new(x: S) -> Result<Self, CobarError> {
        let vertices = x.cells(0).len();
        if vertices != 1 {
            return Err(CobarError::NotReduced(vertices));
        }
        Ok(Cobar { x })
    }

    pub fn space(&self) -> &S {
        &self.x
    }

    /// Letters of degree 0 make every degree infinite.
    pub fn needs_cutoff(&self) -> bool {
        !self.x.cells(1).is_empty()
    }

    /// d[x̄] = [∂x]‾ + Σ (−1)^{|x̄'|} [x̄'|x̄''] over the reduced coproduct.
    pub fn letter_differential(&self, c: Cell) -> FreeElement<CobarWord> {
        let mut out = FreeElement::zero();
        if c.dim < 2 {
            return out;
        }
        for (f, k) in boundary(&self.x, c).iter() {
            out.add_term(CobarWord::letter(*f), k);
        }
        for ((a, b), k) in aw_cell(&self.x, c).iter() {
            if a.dim >= 1 && b.dim >= 1 {
                out.add_term(CobarWord(vec![*a, *b]), sign(a.dim as i64 - 1) * k);
            }
        }
        out
    }

    /// Extension of the letter differential as a derivation.
    pub fn differential(&self, w: &CobarWord) -> FreeElement<CobarWord> {
        let mut out = FreeElement::zero();
        let mut before = 0i64;
        for (i, &c) in w.0.iter().enumerate() {
            for (mid, k) in self.letter_differential(c).iter() {
                let mut v = w.0[..i].to_vec();
                v.extend(&mid.0);
                v.extend(&w.0[i + 1..]);
                out.add_term(CobarWord(v), sign(before) * k);
            }
            before += c.dim as i64 - 1;
        }
        out
    }

    pub fn differential_of(&self, e: &FreeElement<CobarWord>) -> FreeElement<CobarWord> {
        e.map(|w| self.differential(w))
    }

    /// Words of the given degree with at most `max_len` letters.
    pub fn words(&self, degree: usize, max_len: Option<usize>) -> Result<Vec<CobarWord>, CobarError> {
        if max_len.is_none() && self.needs_cutoff() {
            return Err(CobarError::CutoffRequired);
        }
        let letters: Vec<Cell> = (1..=degree + 1).flat_map(|d| self.x.cells(d)).collect();
        let max_len = max_len.unwrap_or(degree);
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fill(&letters, degree as i64, max_len, &mut stack, &mut out);
        out.sort();
        Ok(out)
    }
}

fn fill(letters: &[Cell], remaining: i64, len_left: usize, stack: &mut Vec<Cell>, out: &mut Vec<CobarWord>) {
    if remaining == 0 {
        out.push(CobarWord(stack.clone()));
    }
    if len_left == 0 {
        return;
    }
    for &c in letters {
        let d = c.dim as i64 - 1;
        if d <= remaining {
            stack.push(c);
            fill(letters, remaining - d, len_left - 1, stack, out);
            stack.pop();
        }
    }
}

impl<S: Simplicial + Clone + Send + Sync + 'static> Cobar<S> {
    /// Degrees `0..=max_degree`. With a word cutoff the complex is the
    /// quotient by longer words (d never shortens a word) and is marked
    /// inexact whenever words were actually dropped.
    pub fn complex(&self, max_degree: usize, cutoff: Option<usize>) -> Result<ChainComplex<CobarWord>, CobarError> {
        let mut basis = BTreeMap::new();
        for d in 0..=max_degree {
            basis.insert(d as i64, self.words(d, cutoff)?);
        }
        let me = self.clone();
        let complete = self.x.top_dim().is_some_and(|t| t <= 1);
        let rule = Arc::new(move |w: &CobarWord| {
            let d = me.differential(w);
            match cutoff {
                Some(l) => d.map_keys(|v| (v.len() <= l).then(|| (v.clone(), 1))),
                None => d,
            }
        });
        let c = ChainComplex::new(basis, rule, 0, max_degree as i64, complete);
        Ok(match cutoff {
            Some(l) => {
                let exact = !self.needs_cutoff() && l >= max_degree;
                c.with_word_cutoff(l, exact)
            }
            None => c,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{smith_homology, Homology, Ring};
    use crate::simplicial::models;

    #[test]
    fn sphere_two_letters_are_cycles() {
        let c = Cobar::new(models::sphere(2)).unwrap();
        let s = c.space().cell("σ").unwrap();
        assert!(c.letter_differential(s).is_zero());
        assert_eq!(c.words(3, None).unwrap(), vec![CobarWord(vec![s, s, s])]);
        assert!(c.differential(&CobarWord::unit()).is_zero());
    }

    #[test]
    fn non_reduced_rejected() {
        assert!(matches!(Cobar::new(models::simplex(1)), Err(CobarError::NotReduced(2))));
    }

    #[test]
    fn circle_needs_cutoff() {
        let c = Cobar::new(models::circle()).unwrap();
        assert!(matches!(c.words(0, None), Err(CobarError::CutoffRequired)));
        // degree 0 = polynomials in t up to the cutoff
        assert_eq!(c.words(0, Some(4)).unwrap().len(), 5);
    }

    #[test]
    fn rp2_letter_differentials() {
        let x = models::rp2();
        let (a, b, u, l) = (x.cell("a").unwrap(), x.cell("b").unwrap(), x.cell("U").unwrap(), x.cell("L").unwrap());
        let c = Cobar::new(x).unwrap();
        let du = FreeElement::from_terms([(CobarWord::letter(a), 1), (CobarWord::letter(b), -1)]);
        assert_eq!(c.letter_differential(u), du);
        let dl = FreeElement::from_terms([
            (CobarWord::letter(a), 1),
            (CobarWord::letter(b), 1),
            (CobarWord(vec![b, a]), 1),
        ]);
        assert_eq!(c.letter_differential(l), dl);
    }

    #[test]
    fn d_squared_and_derivation() {
        for x in [models::sphere(2), models::sphere(3), models::rp2(), models::circle()] {
            let c = Cobar::new(x).unwrap();
            let words: Vec<CobarWord> = (0..=3).flat_map(|d| c.words(d, Some(3)).unwrap()).collect();
            for w in &words {
                assert!(c.differential_of(&c.differential(w)).is_zero(), "d² on {w:?}");
            }
            for u in &words {
                for v in &words {
                    let lhs = c.differential(&u.concat(v));
                    let mut rhs = product(&c.differential(u), &FreeElement::basis(v.clone()));
                    rhs.add_scaled(&product(&FreeElement::basis(u.clone()), &c.differential(v)), sign(u.degree()));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn loop_homology_of_spheres() {
        let c = Cobar::new(models::sphere(2)).unwrap().complex(6, None).unwrap();
        for n in 0..=5 {
            assert_eq!(smith_homology(&c, n, Ring::Integers).unwrap(), Homology::free(1));
        }
        let c = Cobar::new(models::sphere(3)).unwrap().complex(5, None).unwrap();
        for n in 0..=4 {
            let expect = if n % 2 == 0 { 1 } else { 0 };
            assert_eq!(smith_homology(&c, n, Ring::Integers).unwrap(), Homology::free(expect));
        }
    }
}
