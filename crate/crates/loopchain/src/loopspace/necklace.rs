//! Necklaces in a reduced simplicial set and the cubical cobar
//! construction they span.
//!
//! Cells are stored as [`LocalizedWord`]s: runs of 1-simplices form group
//! words and higher beads sit between them. Without localization the group
//! words only contain positive letters and the cell is an ordinary necklace.

use crate::algebra::{Cell, Graded};
use crate::cobar::{reduced_words, GroupWord, Letter, LocalizedWord};
use crate::cubical::{Coord, CubeMap, Cubical};
use crate::simplicial::{Simplicial, SimplexRef};

/// A wedge [n₁]∨…∨[n_k] of simplices, by bead dimensions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Necklace(pub Vec<usize>);

impl Necklace {
    pub fn dim(&self) -> usize {
        self.0.iter().map(|n| n - 1).sum()
    }
}

/// Bead sequence of a necklace cell, 1-simplices included.
pub fn beads(w: &LocalizedWord) -> Vec<Cell> {
    let mut out = Vec::new();
    for (i, g) in w.groups.iter().enumerate() {
        out.extend(g.letters().iter().map(|l| l.gen));
        if let Some(&b) = w.beads.get(i) {
            out.push(b);
        }
    }
    out
}

/// The cell with the given beads; every bead must have dimension ≥ 1.
pub fn from_beads(beads: &[Cell]) -> LocalizedWord {
    let mut groups = vec![GroupWord::identity()];
    let mut higher = Vec::new();
    for &b in beads {
        if b.dim == 1 {
            let g = groups.last_mut().expect("nonempty");
            *g = g.mul(&GroupWord::generator(b));
        } else {
            higher.push(b);
            groups.push(GroupWord::identity());
        }
    }
    LocalizedWord { groups, beads: higher }
}

pub fn necklace_of(w: &LocalizedWord) -> Necklace {
    Necklace(beads(w).iter().map(|c| c.dim as usize).collect())
}

/// `base ∘ map`, with `map` free of constant coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NecklaceRef {
    pub base: LocalizedWord,
    pub map: CubeMap,
}

/// Cubical cobar construction Ω_□X, optionally localized at its 0-cells.
#[derive(Clone, Debug)]
pub struct CubicalCobar<S> {
    x: S,
    localized: bool,
    cutoff: Option<usize>,
}

/// A piece of a face: an arbitrary simplex standing in for one bead.
fn push_piece(
    r: &SimplexRef,
    inner: &[u8],
    groups: &mut Vec<GroupWord>,
    higher: &mut Vec<Cell>,
    coords: &mut Vec<Coord>,
) {
    let z = r.base;
    match z.dim {
        0 => {}
        1 => {
            let g = groups.last_mut().expect("nonempty");
            *g = g.mul(&GroupWord::generator(z));
        }
        m => {
            // inner vertex w of z collects the source coordinates sent to it
            for w in 1..m {
                let block: Vec<u8> =
                    (1..r.surj.len() - 1).filter(|&v| r.surj[v] == w).map(|v| inner[v - 1]).collect();
                coords.push(Coord::Or(block));
            }
            higher.push(z);
            groups.push(GroupWord::identity());
        }
    }
}

impl<S: Simplicial> CubicalCobar<S> {
    /// Plain necklaces; `max_beads` bounds the number of beads when X has 1-cells.
    pub fn new(x: S, max_beads: Option<usize>) -> Self {
        CubicalCobar { x, localized: false, cutoff: max_beads }
    }

    /// With inverse 0-cells; `cutoff` bounds the number of group letters.
    pub fn localized(x: S, cutoff: usize) -> Self {
        CubicalCobar { x, localized: true, cutoff: Some(cutoff) }
    }

    pub fn space(&self) -> &S {
        &self.x
    }

    pub fn is_localized(&self) -> bool {
        self.localized
    }

    pub fn cutoff(&self) -> Option<usize> {
        self.cutoff
    }

    /// Strictly associative product: concatenation of necklaces.
    pub fn multiply(&self, a: &LocalizedWord, b: &LocalizedWord) -> LocalizedWord {
        a.mul(b)
    }

    pub fn unit(&self) -> LocalizedWord {
        LocalizedWord::unit()
    }

    /// Product of cubes `a∘f` and `b∘g` is `(a·b)∘(f×g)`.
    pub fn multiply_refs(&self, a: &NecklaceRef, b: &NecklaceRef) -> NecklaceRef {
        let shift = a.map.source as u8;
        let mut coords = a.map.coords.clone();
        coords.extend(b.map.coords.iter().map(|c| match c {
            Coord::Or(block) => Coord::Or(block.iter().map(|s| s + shift).collect()),
            k => k.clone(),
        }));
        NecklaceRef { base: a.base.mul(&b.base), map: CubeMap { source: a.map.source + b.map.source, coords } }
    }

    /// d_i^ε of a cell: inner vertex `i` is deleted (ε = 0) or becomes a
    /// wedge point splitting its bead (ε = 1).
    pub fn cell_face(&self, c: &LocalizedWord, i: usize, eps: bool) -> NecklaceRef {
        let n = c.degree() as usize;
        assert!(i < n, "face direction out of range");
        let mut groups = vec![c.groups[0].clone()];
        let mut higher = Vec::new();
        let mut coords = Vec::new();
        let mut next = 0u8;
        let mut offset = 0usize;
        for (b, &x) in c.beads.iter().enumerate() {
            let m = x.dim as usize;
            let r = SimplexRef::nondegenerate(x);
            if (offset..offset + m - 1).contains(&i) {
                let v = i - offset + 1;
                let inner: Vec<u8> = (0..m as u8 - 2).map(|k| next + k).collect();
                next += m as u8 - 2;
                if eps {
                    let front = self.x.interval(&r, 0, v);
                    let back = self.x.interval(&r, v, m);
                    push_piece(&front, &inner[..v - 1], &mut groups, &mut higher, &mut coords);
                    push_piece(&back, &inner[v - 1..], &mut groups, &mut higher, &mut coords);
                } else {
                    let f = self.x.face(&r, v);
                    push_piece(&f, &inner, &mut groups, &mut higher, &mut coords);
                }
            } else {
                let inner: Vec<u8> = (0..m as u8 - 1).map(|k| next + k).collect();
                next += m as u8 - 1;
                push_piece(&r, &inner, &mut groups, &mut higher, &mut coords);
            }
            let g = groups.last_mut().expect("nonempty");
            *g = g.mul(&c.groups[b + 1]);
            offset += m - 1;
        }
        NecklaceRef { base: LocalizedWord { groups, beads: higher }, map: CubeMap { source: n - 1, coords } }
    }

    fn restrict(&self, base: LocalizedWord, h: CubeMap) -> NecklaceRef {
        match h.first_constant() {
            None => NecklaceRef { base, map: h },
            Some((j, eps)) => {
                let f = self.cell_face(&base, j, eps);
                let rest = h.without(j);
                self.restrict(f.base, f.map.compose(&rest))
            }
        }
    }

    fn group_words(&self, budget: usize) -> Vec<GroupWord> {
        let gens = self.x.cells(1);
        if self.localized {
            reduced_words(&gens, budget)
        } else {
            let mut out = vec![GroupWord::identity()];
            let mut layer = vec![GroupWord::identity()];
            for _ in 0..budget {
                layer = layer.iter().flat_map(|w| gens.iter().map(move |&g| w.mul(&GroupWord::generator(g)))).collect();
                out.extend(layer.iter().cloned());
            }
            out
        }
    }

    /// Whether a cell lies inside the cutoff.
    pub fn within_cutoff(&self, w: &LocalizedWord) -> bool {
        match self.cutoff {
            None => true,
            Some(l) if self.localized => w.letter_count() <= l,
            Some(l) => w.letter_count() + w.beads.len() <= l,
        }
    }

    /// Whether some degree has infinitely many cells without a cutoff.
    pub fn needs_cutoff(&self) -> bool {
        self.localized || !self.x.cells(1).is_empty()
    }
}

fn bead_words(letters: &[Cell], remaining: i64, stack: &mut Vec<Cell>, out: &mut Vec<Vec<Cell>>) {
    if remaining == 0 {
        out.push(stack.clone());
        return;
    }
    for &c in letters {
        let d = c.dim as i64 - 1;
        if d <= remaining {
            stack.push(c);
            bead_words(letters, remaining - d, stack, out);
            stack.pop();
        }
    }
}

impl<S: Simplicial> Cubical for CubicalCobar<S> {
    type Cell = LocalizedWord;
    type Ref = NecklaceRef;

    /// Cells inside the cutoff. Panics when X has 1-cells and no cutoff was given.
    fn cells(&self, dim: usize) -> Vec<LocalizedWord> {
        assert!(self.cutoff.is_some() || !self.needs_cutoff(), "cubical cobar with 1-cells needs a cutoff");
        let letters: Vec<Cell> = (2..=dim + 1).flat_map(|d| self.x.cells(d)).collect();
        let mut words = Vec::new();
        bead_words(&letters, dim as i64, &mut Vec::new(), &mut words);
        let budget = self.cutoff.unwrap_or(0);
        let mut out = Vec::new();
        for b in words {
            let slot_budget = if self.localized { budget } else { budget.saturating_sub(b.len()) };
            if !self.localized && self.cutoff.is_some_and(|l| b.len() > l) {
                continue;
            }
            let pool = self.group_words(slot_budget);
            let mut slots: Vec<Vec<GroupWord>> = vec![Vec::new()];
            for _ in 0..=b.len() {
                let mut next = Vec::new();
                for partial in &slots {
                    let used: usize = partial.iter().map(GroupWord::len).sum();
                    for g in pool.iter().filter(|g| g.len() + used <= slot_budget) {
                        let mut p = partial.clone();
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

    fn top_dim(&self) -> Option<usize> {
        (self.x.top_dim().is_some_and(|t| t <= 1)).then_some(0)
    }

    fn identity(&self, c: &LocalizedWord) -> NecklaceRef {
        NecklaceRef { base: c.clone(), map: CubeMap::identity(c.degree() as usize) }
    }

    fn act(&self, r: &NecklaceRef, theta: &CubeMap) -> NecklaceRef {
        self.restrict(r.base.clone(), r.map.compose(theta))
    }

    fn normal_form(&self, r: &NecklaceRef) -> (LocalizedWord, CubeMap) {
        (r.base.clone(), r.map.clone())
    }
}

/// The inverse of a 0-cell in the localized construction.
pub fn inverse_cell(w: &LocalizedWord) -> Option<LocalizedWord> {
    w.beads.is_empty().then(|| LocalizedWord::group(w.groups[0].inverse()))
}

/// Positive letters only: the cell lies in the unlocalized construction.
pub fn is_plain(w: &LocalizedWord) -> bool {
    w.groups.iter().all(|g| g.letters().iter().all(|l: &Letter| !l.inverse))
}

/// Generating morphisms of single-bead necklaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NecklaceMorphism {
    /// ∂^j : [n] → [n+1], skipping vertex j.
    Coface { n: usize, j: usize },
    /// [j] ∨ [n+1−j] → [n+1], the wedge at vertex j.
    Wedge { n: usize, j: usize },
    /// s^j : [n+1] → [n], identifying j and j+1.
    Codegeneracy { n: usize, j: usize },
}

/// The cube morphism assigned to a generator; a bead [n] has the cube
/// 2^{n−1} of its inner vertices.
pub fn p_functor(m: NecklaceMorphism) -> Result<CubeMap, String> {
    match m {
        NecklaceMorphism::Coface { n, j } if n >= 1 && 0 < j && j < n + 1 => Ok(CubeMap::coface(n, j - 1, false)),
        NecklaceMorphism::Wedge { n, j } if n >= 1 && 0 < j && j < n + 1 => Ok(CubeMap::coface(n, j - 1, true)),
        NecklaceMorphism::Codegeneracy { n: 0, j: 0 } => Ok(CubeMap::identity(0)),
        NecklaceMorphism::Codegeneracy { n, j } if n >= 1 && j == 0 => Ok(CubeMap::codegeneracy(n, 0)),
        NecklaceMorphism::Codegeneracy { n, j } if n >= 1 && j == n => Ok(CubeMap::codegeneracy(n, n - 1)),
        NecklaceMorphism::Codegeneracy { n, j } if n >= 2 && j < n => Ok(CubeMap::coconnection(n - 1, j - 1)),
        other => Err(format!("{other:?} has no valid index")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::models;

    #[test]
    fn p_functor_cases() {
        assert_eq!(p_functor(NecklaceMorphism::Coface { n: 2, j: 1 }).unwrap(), CubeMap::coface(2, 0, false));
        assert_eq!(p_functor(NecklaceMorphism::Wedge { n: 2, j: 2 }).unwrap(), CubeMap::coface(2, 1, true));
        assert_eq!(p_functor(NecklaceMorphism::Codegeneracy { n: 3, j: 1 }).unwrap(), CubeMap::coconnection(2, 0));
        assert!(p_functor(NecklaceMorphism::Codegeneracy { n: 0, j: 0 }).unwrap().is_identity());
        assert!(p_functor(NecklaceMorphism::Coface { n: 2, j: 0 }).is_err());
        assert!(p_functor(NecklaceMorphism::Wedge { n: 2, j: 3 }).is_err());
    }

    #[test]
    fn faces_agree_with_p_functor() {
        // a single bead x of dimension m: δ₀ at coordinate i deletes vertex i+1
        let x = models::rp2();
        let l = x.cell("L").unwrap();
        let cc = CubicalCobar::new(x.clone(), Some(3));
        let cell = from_beads(&[l]);
        let theta = p_functor(NecklaceMorphism::Wedge { n: 1, j: 1 }).unwrap();
        assert_eq!(cc.act(&cc.identity(&cell), &theta), cc.cell_face(&cell, 0, true));
        let theta = p_functor(NecklaceMorphism::Coface { n: 1, j: 1 }).unwrap();
        assert_eq!(cc.act(&cc.identity(&cell), &theta), cc.cell_face(&cell, 0, false));
    }

    #[test]
    fn bead_round_trip() {
        let x = models::rp2();
        let (a, u) = (x.cell("a").unwrap(), x.cell("U").unwrap());
        let w = from_beads(&[a, u, a, a]);
        assert_eq!(beads(&w), vec![a, u, a, a]);
        assert_eq!(necklace_of(&w), Necklace(vec![1, 2, 1, 1]));
        assert_eq!(necklace_of(&w).dim(), 1);
        assert!(is_plain(&w));
        let z = inverse_cell(&from_beads(&[a, a])).unwrap();
        assert!(!is_plain(&z));
    }
}
