//! Reduced words in free groups and finite presentations.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{invariant_factors, Cell, Graded, IntMatrix};

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Letter<G = Cell> {
    pub gen: G,
    pub inverse: bool,
}

impl<G: Clone> Letter<G> {
    pub fn new(gen: G) -> Letter<G> {
        Letter { gen, inverse: false }
    }

    pub fn inv(&self) -> Letter<G> {
        Letter { gen: self.gen.clone(), inverse: !self.inverse }
    }
}

/// Freely reduced word; the empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GroupWord<G = Cell>(Vec<Letter<G>>);

impl<G> Default for GroupWord<G> {
    fn default() -> Self {
        GroupWord(Vec::new())
    }
}

impl<G> Graded for GroupWord<G> {
    fn degree(&self) -> i64 {
        0
    }
}

impl<G: Clone + Ord> GroupWord<G> {
    pub fn identity() -> GroupWord<G> {
        GroupWord(Vec::new())
    }

    pub fn generator(gen: G) -> GroupWord<G> {
        GroupWord(vec![Letter::new(gen)])
    }

    pub fn from_letters<I: IntoIterator<Item = Letter<G>>>(it: I) -> GroupWord<G> {
        let mut w = GroupWord::identity();
        for l in it {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: Letter<G>) {
        if self.0.last() == Some(&l.inv()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter<G>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &GroupWord<G>) -> GroupWord<G> {
        let mut w = self.clone();
        for l in &other.0 {
            w.push(l.clone());
        }
        w
    }

    pub fn inverse(&self) -> GroupWord<G> {
        GroupWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Replaces every letter by a word (a homomorphism out of the free group).
    pub fn substitute<H: Clone + Ord, F: Fn(&G) -> GroupWord<H>>(&self, f: F) -> GroupWord<H> {
        let mut w = GroupWord::identity();
        for l in &self.0 {
            let img = f(&l.gen);
            w = w.mul(&if l.inverse { img.inverse() } else { img });
        }
        w
    }

    /// Exponent sum of each generator.
    pub fn exponents(&self) -> BTreeMap<G, i64> {
        let mut m = BTreeMap::new();
        for l in &self.0 {
            *m.entry(l.gen.clone()).or_insert(0) += if l.inverse { -1 } else { 1 };
        }
        m
    }

    /// Cyclic reduction, used on relators.
    pub fn cyclically_reduced(&self) -> GroupWord<G> {
        let mut v = self.0.clone();
        while v.len() >= 2 && v[0] == v[v.len() - 1].inv() {
            v.pop();
            v.remove(0);
        }
        GroupWord(v)
    }
}

/// All reduced words of length ≤ `max_len` over the given generators, by
/// length then lexicographically.
pub fn reduced_words(gens: &[Cell], max_len: usize) -> Vec<GroupWord> {
    let letters: Vec<Letter> = gens.iter().flat_map(|&g| [Letter::new(g), Letter::new(g).inv()]).collect();
    let mut out = vec![GroupWord::identity()];
    let mut layer = vec![GroupWord::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.0.last() == Some(&l.inv()) {
                    continue;
                }
                let mut v = w.0.clone();
                v.push(l);
                next.push(GroupWord(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Number of reduced words of length ≤ `l` in a free group of rank `r`.
pub fn free_ball_size(r: usize, l: usize) -> u128 {
    if r == 0 {
        return 1;
    }
    let mut total = 1u128;
    let mut layer = 0u128;
    for k in 1..=l {
        layer = if k == 1 { 2 * r as u128 } else { layer * (2 * r as u128 - 1) };
        total += layer;
    }
    total
}

/// Isomorphism type, when the simplification recognizes it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GroupType {
    Free { rank: usize },
    Cyclic { order: u64 },
    Unrecognized,
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupType::Free { rank: 0 } | GroupType::Cyclic { order: 1 } => write!(f, "trivial"),
            GroupType::Free { rank: 1 } => write!(f, "Z"),
            GroupType::Free { rank } => write!(f, "F{rank}"),
            GroupType::Cyclic { order } => write!(f, "Z/{order}"),
            GroupType::Unrecognized => write!(f, "unrecognized"),
        }
    }
}

/// ⟨generators | relators⟩.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub generators: Vec<Cell>,
    pub relators: Vec<GroupWord>,
}

impl Presentation {
    /// Invariant factors of the abelianization: free rank and torsion.
    pub fn abelianization(&self) -> (usize, Vec<u64>) {
        let index: BTreeMap<Cell, usize> = self.generators.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let mut m = IntMatrix::zeros(self.relators.len(), self.generators.len());
        for (r, w) in self.relators.iter().enumerate() {
            for (g, e) in w.exponents() {
                m.set(r, index[&g], e as i128);
            }
        }
        let f = invariant_factors(&m);
        let torsion = f.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
        (self.generators.len() - f.len(), torsion)
    }

    /// Tietze elimination of generators occurring exactly once in a relator.
    pub fn simplify(&self) -> Presentation {
        let mut gens = self.generators.clone();
        let mut rels: Vec<GroupWord> =
            self.relators.iter().map(|r| r.cyclically_reduced()).filter(|r| !r.is_identity()).collect();
        loop {
            let mut found = None;
            'search: for (ri, r) in rels.iter().enumerate() {
                for (pos, l) in r.0.iter().enumerate() {
                    if r.0.iter().filter(|m| m.gen == l.gen).count() == 1 {
                        found = Some((ri, pos));
                        break 'search;
                    }
                }
            }
            let Some((ri, pos)) = found else { break };
            let r = rels.remove(ri);
            let l = r.0[pos].clone();
            // r = u l v = 1  ⇒  l = u⁻¹ v⁻¹
            let u = GroupWord(r.0[..pos].to_vec());
            let v = GroupWord(r.0[pos + 1..].to_vec());
            let mut image = u.inverse().mul(&v.inverse());
            if l.inverse {
                image = image.inverse();
            }
            gens.retain(|&g| g != l.gen);
            rels = rels
                .iter()
                .map(|w| w.substitute(|&g| if g == l.gen { image.clone() } else { GroupWord::generator(g) }).cyclically_reduced())
                .filter(|w| !w.is_identity())
                .collect();
        }
        rels.sort();
        rels.dedup();
        Presentation { generators: gens, relators: rels }
    }

    pub fn classify(&self) -> GroupType {
        let s = self.simplify();
        if s.relators.is_empty() {
            return GroupType::Free { rank: s.generators.len() };
        }
        if s.generators.len() == 1 {
            let g = s.generators[0];
            let order = s.relators.iter().fold(0u64, |acc, r| gcd(acc, r.exponents().get(&g).copied().unwrap_or(0).unsigned_abs()));
            return if order == 0 { GroupType::Free { rank: 1 } } else { GroupType::Cyclic { order } };
        }
        GroupType::Unrecognized
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: usize) -> Cell {
        Cell::new(1, i)
    }

    #[test]
    fn reduction_and_inverse() {
        let a = GroupWord::generator(g(0));
        let b = GroupWord::generator(g(1));
        let ab = a.mul(&b);
        assert!(ab.mul(&ab.inverse()).is_identity());
        assert_eq!(ab.mul(&b.inverse()), a);
        assert_eq!(a.inverse().mul(&a), GroupWord::identity());
    }

    #[test]
    fn ball_sizes_match_enumeration() {
        for r in 1..=3 {
            for l in 0..=3 {
                let gens: Vec<Cell> = (0..r).map(g).collect();
                assert_eq!(reduced_words(&gens, l).len() as u128, free_ball_size(r, l));
            }
        }
        assert_eq!(free_ball_size(1, 4), 9);
    }

    #[test]
    fn classify_small_groups() {
        let a = GroupWord::generator(g(0));
        let b = GroupWord::generator(g(1));
        let free = Presentation { generators: vec![g(0)], relators: vec![] };
        assert_eq!(free.classify(), GroupType::Free { rank: 1 });
        // a = b, ab = 1
        let rp2 = Presentation { generators: vec![g(0), g(1)], relators: vec![a.mul(&b.inverse()), a.mul(&b)] };
        assert_eq!(rp2.classify(), GroupType::Cyclic { order: 2 });
        assert_eq!(rp2.abelianization(), (0, vec![2]));
        let trivial = Presentation { generators: vec![g(0)], relators: vec![a.clone()] };
        assert_eq!(trivial.classify(), GroupType::Free { rank: 0 });
        let z3 = Presentation { generators: vec![g(0)], relators: vec![a.mul(&a).mul(&a)] };
        assert_eq!(z3.classify(), GroupType::Cyclic { order: 3 });
        // commutator: Z², not recognized, abelianization still available
        let z2 = Presentation {
            generators: vec![g(0), g(1)],
            relators: vec![a.mul(&b).mul(&a.inverse()).mul(&b.inverse())],
        };
        assert_eq!(z2.classify(), GroupType::Unrecognized);
        assert_eq!(z2.abelianization(), (2, vec![]));
    }
}
