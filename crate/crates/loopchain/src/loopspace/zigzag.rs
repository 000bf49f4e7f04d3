//! Comparison of a truncated cubical cobar construction Y with its
//! triangulation T Y, through Cartan–Serre on T Y and the unit Y → U T Y.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{smith_homology, Graded, Homology, Ring};
use crate::cubical::{boundary as cube_boundary, cubical_chains, triangulate, unit_cube, Cubical, UAdjoint};
use crate::simplicial::{normalized_chains, Simplicial};

use super::cartan::{certify_cartan_serre, CartanSerreReport};
use super::necklace::CubicalCobar;
use super::LoopError;

#[derive(Clone, Debug, Serialize)]
pub struct ZigzagReport {
    pub range: usize,
    pub cubical: Vec<Homology>,
    pub triangulated: Vec<Homology>,
    pub homology_agrees: bool,
    pub cartan_serre: CartanSerreReport,
    pub unit_chain_map: bool,
    pub unit_injective: bool,
}

impl ZigzagReport {
    pub fn passed(&self) -> bool {
        self.homology_agrees
            && self.cartan_serre.chain_map
            && self.cartan_serre.coalgebra_morphism
            && self.unit_chain_map
            && self.unit_injective
    }
}

/// Homology of Y and T Y in degrees `0..=range`, computed from cubes of
/// dimension ≤ range + 1. The listed cells must be closed under faces.
pub fn zigzag_report<S>(y: &CubicalCobar<S>, range: usize, ring: Ring) -> Result<ZigzagReport, LoopError>
where
    S: Simplicial + Clone + Send + Sync + 'static,
{
    let top = range + 1;
    let cubes = cubical_chains(y, top);
    let t = triangulate(y, top)?;
    let simplices = normalized_chains(&t.set, top);
    let mut cubical = Vec::new();
    let mut triangulated = Vec::new();
    for n in 0..=range as i64 {
        cubical.push(smith_homology(&cubes, n, ring)?);
        triangulated.push(smith_homology(&simplices, n, ring)?);
    }
    let cartan_serre = certify_cartan_serre(&t.set, range);
    let u = UAdjoint::new(t.set.clone());
    let unit = |c: &<CubicalCobar<S> as Cubical>::Cell| u.as_cell(&unit_cube(&t, c, c.degree() as usize));
    let mut unit_chain_map = true;
    let mut unit_injective = true;
    let mut seen = BTreeSet::new();
    for n in 0..=range {
        for c in y.cells(n) {
            match unit(&c) {
                Some(q) => {
                    if !seen.insert(q.clone()) {
                        unit_injective = false;
                    }
                    let lhs = cube_boundary(y, &c).map_keys(|f| unit(f).map(|q| (q, 1)));
                    if lhs != cube_boundary(&u, &q) {
                        unit_chain_map = false;
                    }
                }
                None => unit_injective = false,
            }
        }
    }
    Ok(ZigzagReport {
        homology_agrees: cubical == triangulated,
        range,
        cubical,
        triangulated,
        cartan_serre,
        unit_chain_map,
        unit_injective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::models;

    #[test]
    fn sphere_two_agrees() {
        let y = CubicalCobar::new(models::sphere(2), None);
        let r = zigzag_report(&y, 3, Ring::Integers).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.cubical.iter().all(|h| *h == Homology::free(1)));
    }

    #[test]
    fn circle_degree_zero() {
        let y = CubicalCobar::new(models::circle(), Some(3));
        let r = zigzag_report(&y, 0, Ring::Integers).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.cubical[0], Homology::free(4));
    }
}
