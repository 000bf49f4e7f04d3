//! Kan's loop group: a free simplicial group with one generator x̄ per
//! (n+1)-simplex x, and s₀y‾ = e.

use serde::Serialize;

use crate::cobar::{GroupType, GroupWord, Presentation};
use crate::simplicial::{monotone_surjections, Simplicial, SimplexRef};

pub type KanWord = GroupWord<SimplexRef>;

#[derive(Clone, Debug)]
pub struct KanLoopGroup<S> {
    x: S,
}

fn is_s0(y: &SimplexRef) -> bool {
    y.surj.len() >= 2 && y.surj[0] == y.surj[1]
}

impl<S: Simplicial> KanLoopGroup<S> {
    pub fn new(x: S) -> Self {
        KanLoopGroup { x }
    }

    /// Every simplex of dimension `n`, degenerate or not.
    fn simplices(&self, n: usize) -> Vec<SimplexRef> {
        let mut out = Vec::new();
        for m in 0..=n {
            for c in self.x.cells(m) {
                for surj in monotone_surjections(n, m) {
                    out.push(SimplexRef { base: c, surj });
                }
            }
        }
        out
    }

    /// Generators of G_n: (n+1)-simplices outside the image of s₀.
    pub fn generators(&self, n: usize) -> Vec<SimplexRef> {
        self.simplices(n + 1).into_iter().filter(|y| !is_s0(y)).collect()
    }

    /// ȳ, which is the identity when y = s₀z.
    pub fn bar(&self, y: &SimplexRef) -> KanWord {
        if is_s0(y) {
            KanWord::identity()
        } else {
            KanWord::generator(y.clone())
        }
    }

    fn face_of_generator(&self, y: &SimplexRef, i: usize) -> KanWord {
        if i == 0 {
            self.bar(&self.x.face(y, 1)).mul(&self.bar(&self.x.face(y, 0)).inverse())
        } else {
            self.bar(&self.x.face(y, i + 1))
        }
    }

    /// δ_i : G_n → G_{n−1}.
    pub fn face(&self, w: &KanWord, i: usize) -> KanWord {
        w.substitute(|y| self.face_of_generator(y, i))
    }

    /// s_i : G_n → G_{n+1}.
    pub fn degeneracy(&self, w: &KanWord, i: usize) -> KanWord {
        w.substitute(|y| self.bar(&y.degenerate(i + 1)))
    }

    /// First failing simplicial identity on generators of G_n, 1 ≤ n ≤ max_degree
    /// (degeneracy identities from G_0 on).
    pub fn check_identities(&self, max_degree: usize) -> Result<(), String> {
        for n in 0..=max_degree {
            for y in self.generators(n) {
                let g = KanWord::generator(y.clone());
                let fail = |what: String| Err(format!("{what} on {y:?} in degree {n}"));
                if n >= 2 {
                    for j in 1..=n {
                        for i in 0..j {
                            if self.face(&self.face(&g, j), i) != self.face(&self.face(&g, i), j - 1) {
                                return fail(format!("δ_{i}δ_{j} = δ_{}δ_{i}", j - 1));
                            }
                        }
                    }
                }
                for j in 0..=n {
                    let sg = self.degeneracy(&g, j);
                    for i in 0..=n + 1 {
                        let lhs = self.face(&sg, i);
                        let rhs = if i < j {
                            self.degeneracy(&self.face(&g, i), j - 1)
                        } else if i == j || i == j + 1 {
                            g.clone()
                        } else {
                            self.degeneracy(&self.face(&g, i - 1), j)
                        };
                        if lhs != rhs {
                            return fail(format!("δ_{i}s_{j}"));
                        }
                    }
                    for i in 0..=j {
                        if self.degeneracy(&self.degeneracy(&g, j), i) != self.degeneracy(&self.degeneracy(&g, i), j + 1) {
                            return fail(format!("s_{i}s_{j} = s_{}s_{i}", j + 1));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The face formulas send s₀z to the identity, so the relation s₀z‾ = e
    /// is compatible with every δ_i.
    pub fn check_s0_relation(&self, max_degree: usize) -> Result<(), String> {
        for n in 1..=max_degree {
            for z in self.simplices(n) {
                let y = z.degenerate(0);
                for i in 0..=n {
                    if !self.face_of_generator(&y, i).is_identity() {
                        return Err(format!("δ_{i} of s₀{z:?} is not the identity"));
                    }
                }
            }
        }
        Ok(())
    }

    /// π₀ = G₀ modulo δ₀ȳ·(δ₁ȳ)⁻¹ over generators ȳ of G₁.
    pub fn pi0(&self) -> Presentation {
        let generators = self.x.cells(1);
        let to_cells = |w: &KanWord| w.substitute(|y| GroupWord::generator(y.base));
        let relators = self
            .generators(1)
            .iter()
            .map(|y| {
                let g = KanWord::generator(y.clone());
                to_cells(&self.face(&g, 0).mul(&self.face(&g, 1).inverse()))
            })
            .filter(|r| !r.is_identity())
            .collect();
        Presentation { generators, relators }
    }
}

/// π₀ summary: presentation, recognized type and abelianization.
#[derive(Clone, Debug, Serialize)]
pub struct Pi0Report {
    pub presentation: Presentation,
    pub group: GroupType,
    pub abelian_rank: usize,
    pub abelian_torsion: Vec<u64>,
}

pub fn pi0_report<S: Simplicial>(g: &KanLoopGroup<S>) -> Pi0Report {
    let presentation = g.pi0();
    let group = presentation.classify();
    let (abelian_rank, abelian_torsion) = presentation.abelianization();
    Pi0Report { presentation, group, abelian_rank, abelian_torsion }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::models;

    #[test]
    fn identities_on_models() {
        for x in [models::circle(), models::sphere(2), models::rp2()] {
            let g = KanLoopGroup::new(x);
            g.check_identities(3).unwrap();
            g.check_s0_relation(3).unwrap();
        }
    }

    #[test]
    fn circle_group() {
        let g = KanLoopGroup::new(models::circle());
        assert_eq!(g.generators(0).len(), 1);
        let r = pi0_report(&g);
        assert_eq!(r.group, GroupType::Free { rank: 1 });
    }

    #[test]
    fn rp2_group() {
        let r = pi0_report(&KanLoopGroup::new(models::rp2()));
        assert_eq!((r.abelian_rank, r.abelian_torsion.clone()), (0, vec![2]));
        assert_eq!(r.group, GroupType::Cyclic { order: 2 });
    }

    #[test]
    fn sphere_group_is_trivial_in_degree_zero() {
        let r = pi0_report(&KanLoopGroup::new(models::sphere(2)));
        assert_eq!(r.group, GroupType::Free { rank: 0 });
    }
}
