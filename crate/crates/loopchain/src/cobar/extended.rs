//! The localized cobar construction: degree-0 letters [ā] are replaced by
//! g_a − 1 with g_a invertible.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::algebra::{rank_over_z, sign, Cell, FreeElement, Graded, IntMatrix};
use crate::simplicial::Simplicial;

use super::group::{free_ball_size, reduced_words, GroupType, GroupWord, Presentation};
use super::plain::{Cobar, CobarWord};
use super::CobarError;

/// g₀ x₁ g₁ … x_k g_k with group words g_i and cells x_i of dimension ≥ 2.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LocalizedWord {
    pub groups: Vec<GroupWord>,
    pub beads: Vec<Cell>,
}

impl Graded for LocalizedWord {
    fn degree(&self) -> i64 {
        self.beads.iter().map(|c| c.dim as i64 - 1).sum()
    }
}

impl LocalizedWord {
    pub fn unit() -> LocalizedWord {
        LocalizedWord::group(GroupWord::identity())
    }

    pub fn group(g: GroupWord) -> LocalizedWord {
        LocalizedWord { groups: vec![g], beads: vec![] }
    }

    pub fn bead(c: Cell) -> LocalizedWord {
        LocalizedWord { groups: vec![GroupWord::identity(), GroupWord::identity()], beads: vec![c] }
    }

    /// Total number of group letters.
    pub fn letter_count(&self) -> usize {
        self.groups.iter().map(GroupWord::len).sum()
    }

    pub fn mul(&self, other: &LocalizedWord) -> LocalizedWord {
        let mut groups = self.groups.clone();
        let last = groups.pop().unwrap_or_default();
        groups.push(last.mul(&other.groups[0]));
        groups.extend(other.groups[1..].iter().cloned());
        let beads = self.beads.iter().chain(&other.beads).copied().collect();
        LocalizedWord { groups, beads }
    }
}

pub fn mul_elements(a: &FreeElement<LocalizedWord>, b: &FreeElement<LocalizedWord>) -> FreeElement<LocalizedWord> {
    let mut out = FreeElement::zero();
    for (u, c) in a.iter() {
        for (v, e) in b.iter() {
            out.add_term(u.mul(v), c * e);
        }
    }
    out
}

/// Localized cobar construction of a reduced simplicial set.
#[derive(Clone, Debug)]
pub struct ExtendedCobar<S> {
    cobar: Cobar<S>,
}

impl<S: Simplicial> ExtendedCobar<S> {
    pub fn new(x: S) -> Result<Self, CobarError> {
        Ok(ExtendedCobar { cobar: Cobar::new(x)? })
    }

    pub fn cobar(&self) -> &Cobar<S> {
        &self.cobar
    }

    pub fn generators(&self) -> Vec<Cell> {
        self.cobar.space().cells(1)
    }

    /// [ā] ↦ g_a − 1 in degree 0, a bead otherwise.
    pub fn letter(c: Cell) -> FreeElement<LocalizedWord> {
        if c.dim == 1 {
            FreeElement::from_terms([(LocalizedWord::group(GroupWord::generator(c)), 1), (LocalizedWord::unit(), -1)])
        } else {
            FreeElement::basis(LocalizedWord::bead(c))
        }
    }

    /// The algebra map from the cobar construction.
    pub fn embed(&self, w: &CobarWord) -> FreeElement<LocalizedWord> {
        w.0.iter().fold(FreeElement::basis(LocalizedWord::unit()), |acc, &c| mul_elements(&acc, &Self::letter(c)))
    }

    pub fn embed_element(&self, e: &FreeElement<CobarWord>) -> FreeElement<LocalizedWord> {
        e.map(|w| self.embed(w))
    }

    /// Group letters are cycles; beads follow the cobar differential.
    pub fn differential(&self, w: &LocalizedWord) -> FreeElement<LocalizedWord> {
        let mut out = FreeElement::zero();
        let mut before = 0i64;
        for (i, &c) in w.beads.iter().enumerate() {
            let left = LocalizedWord { groups: w.groups[..=i].to_vec(), beads: w.beads[..i].to_vec() };
            let right = LocalizedWord { groups: w.groups[i + 1..].to_vec(), beads: w.beads[i + 1..].to_vec() };
            let mid = self.embed_element(&self.cobar.letter_differential(c));
            let term = mul_elements(&mul_elements(&FreeElement::basis(left), &mid), &FreeElement::basis(right));
            out.add_scaled(&term, sign(before));
            before += c.dim as i64 - 1;
        }
        out
    }

    pub fn differential_of(&self, e: &FreeElement<LocalizedWord>) -> FreeElement<LocalizedWord> {
        e.map(|w| self.differential(w))
    }

    /// Words of the given degree with at most `cutoff` group letters in total.
    pub fn words(&self, degree: usize, cutoff: usize) -> Vec<LocalizedWord> {
        let x = self.cobar.space();
        let letters: Vec<Cell> = (2..=degree + 1).flat_map(|d| x.cells(d)).collect();
        let bead_words = {
            let mut out = Vec::new();
            let mut stack = Vec::new();
            beads(&letters, degree as i64, &mut stack, &mut out);
            out
        };
        let gens = self.generators();
        let ball = reduced_words(&gens, cutoff);
        let mut out = Vec::new();
        for b in bead_words {
            let mut slots = vec![Vec::new()];
            for _ in 0..=b.len() {
                let mut next = Vec::new();
                for partial in &slots {
                    let used: usize = partial.iter().map(GroupWord::len).sum();
                    for g in ball.iter().filter(|g| g.len() + used <= cutoff) {
                        let mut p: Vec<GroupWord> = partial.clone();
                        p.push(g.clone());
                        next.push(p);
                    }
                }
                slots = next;
            }
            out.extend(slots.into_iter().map(|groups| LocalizedWord { groups, beads: b.clone() }));
        }
        out.sort();
        out
    }
}

fn beads(letters: &[Cell], remaining: i64, stack: &mut Vec<Cell>, out: &mut Vec<Vec<Cell>>) {
    if remaining == 0 {
        out.push(stack.clone());
        return;
    }
    for &c in letters {
        let d = c.dim as i64 - 1;
        if d <= remaining {
            stack.push(c);
            beads(letters, remaining - d, stack, out);
            stack.pop();
        }
    }
}

/// π₁ of a reduced simplicial set: one generator per 1-cell, one relator
/// d₁y·(d₀y)⁻¹·(d₂y)⁻¹ per 2-cell, degenerate faces read as the identity.
pub fn fundamental_presentation<S: Simplicial>(x: &S) -> Presentation {
    let face = |y: Cell, i: usize| match x.cell_face(y, i).as_cell() {
        Some(c) => GroupWord::generator(c),
        None => GroupWord::identity(),
    };
    let relators = x.cells(2).into_iter().map(|y| face(y, 1).mul(&face(y, 0).inverse()).mul(&face(y, 2).inverse())).collect();
    Presentation { generators: x.cells(1), relators }
}

/// H₀ of the localized cobar construction, computed over Q inside the ball
/// of group words of length ≤ cutoff.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H0Certificate {
    pub presentation: Presentation,
    pub group: GroupType,
    pub cutoff: usize,
    /// Group words of length ≤ cutoff.
    pub ball: usize,
    /// Rank of the relations g₀·d(x̄)·g₁ supported in the ball.
    pub relation_rank: usize,
    /// ball − relation_rank.
    pub rank: usize,
    /// Rank predicted by the recognized group at this cutoff, when known.
    pub expected: Option<u128>,
    /// True when the group was recognized and the rank matches its prediction.
    pub conclusive: bool,
}

pub fn h0_group_ring<S: Simplicial>(ext: &ExtendedCobar<S>, cutoff: usize) -> H0Certificate {
    let x = ext.cobar().space();
    let presentation = fundamental_presentation(x);
    let group = presentation.classify();
    let gens = ext.generators();
    let ball = reduced_words(&gens, cutoff);
    let index: BTreeMap<&GroupWord, usize> = ball.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut rows: BTreeSet<Vec<(usize, i64)>> = BTreeSet::new();
    for y in x.cells(2) {
        let dy = ext.differential(&LocalizedWord::bead(y));
        for g0 in &ball {
            for g1 in &ball {
                let mut v = FreeElement::zero();
                for (w, c) in dy.iter() {
                    v.add_term(g0.mul(&w.groups[0]).mul(g1), c);
                }
                let row: Option<Vec<(usize, i64)>> = v.iter().map(|(g, c)| index.get(g).map(|&i| (i, c))).collect();
                if let Some(row) = row.filter(|r| !r.is_empty()) {
                    rows.insert(row);
                }
            }
        }
    }
    let mut m = IntMatrix::zeros(rows.len(), ball.len());
    for (r, row) in rows.iter().enumerate() {
        for &(i, c) in row {
            m.set(r, i, c as i128);
        }
    }
    let relation_rank = if rows.is_empty() { 0 } else { rank_over_z(&m) };
    let rank = ball.len() - relation_rank;
    let expected = match group {
        GroupType::Free { rank: r } => Some(free_ball_size(r, cutoff)),
        GroupType::Cyclic { order } => Some(order as u128),
        GroupType::Unrecognized => None,
    };
    H0Certificate {
        conclusive: expected == Some(rank as u128),
        presentation,
        group,
        cutoff,
        ball: ball.len(),
        relation_rank,
        rank,
        expected,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cobar::product;
    use crate::simplicial::models;

    #[test]
    fn circle_is_laurent() {
        let e = ExtendedCobar::new(models::circle()).unwrap();
        for l in 0..=5 {
            assert_eq!(e.words(0, l).len(), 2 * l + 1);
            let h = h0_group_ring(&e, l);
            assert_eq!(h.rank, 2 * l + 1);
            assert!(h.conclusive);
            assert_eq!(h.group, GroupType::Free { rank: 1 });
            assert!(h.presentation.relators.is_empty());
        }
    }

    #[test]
    fn rp2_group_ring_has_rank_two() {
        let e = ExtendedCobar::new(models::rp2()).unwrap();
        for l in 3..=4 {
            let h = h0_group_ring(&e, l);
            assert_eq!(h.rank, 2, "cutoff {l}");
            assert_eq!(h.group, GroupType::Cyclic { order: 2 });
            assert!(h.conclusive);
        }
    }

    #[test]
    fn sphere_is_simply_connected() {
        let e = ExtendedCobar::new(models::sphere(2)).unwrap();
        let h = h0_group_ring(&e, 3);
        assert_eq!((h.rank, h.conclusive), (1, true));
    }

    #[test]
    fn inverse_cancels() {
        let e = ExtendedCobar::new(models::circle()).unwrap();
        let t = e.generators()[0];
        let g = LocalizedWord::group(GroupWord::generator(t));
        let gi = LocalizedWord::group(GroupWord::generator(t).inverse());
        assert_eq!(g.mul(&gi), LocalizedWord::unit());
    }

    #[test]
    fn embedding_respects_d_and_product() {
        for x in [models::rp2(), models::sphere(2), models::circle()] {
            let e = ExtendedCobar::new(x.clone()).unwrap();
            let c = e.cobar();
            let words: Vec<CobarWord> = (0..=2).flat_map(|d| c.words(d, Some(3)).unwrap()).collect();
            for u in &words {
                assert_eq!(e.embed_element(&c.differential(u)), e.differential_of(&e.embed(u)));
                for v in &words {
                    let uv = product(&FreeElement::basis(u.clone()), &FreeElement::basis(v.clone()));
                    assert_eq!(e.embed_element(&uv), mul_elements(&e.embed(u), &e.embed(v)));
                }
            }
        }
    }

    #[test]
    fn d_squared_and_derivation() {
        let e = ExtendedCobar::new(models::rp2()).unwrap();
        let words: Vec<LocalizedWord> = (0..=2).flat_map(|d| e.words(d, 2)).collect();
        for w in &words {
            assert!(e.differential_of(&e.differential(w)).is_zero());
        }
        for u in words.iter().step_by(7) {
            for v in words.iter().step_by(5) {
                let lhs = e.differential(&u.mul(v));
                let mut rhs = mul_elements(&e.differential(u), &FreeElement::basis(v.clone()));
                rhs.add_scaled(&mul_elements(&FreeElement::basis(u.clone()), &e.differential(v)), sign(u.degree()));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
