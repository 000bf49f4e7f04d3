//! Generators of the suboperad M_sl: an iterated coproduct into N strands
//! followed by one left-nested join per output over an increasing set of strands.

use super::graph::{Gen, PropGraph, Source};
use super::PropError;

/// `assignment[j]` lists the strands (0-based, increasing) joined into output `j`;
/// together they must cover `0..N` exactly once.
pub fn msl_generator(assignment: &[Vec<usize>]) -> Result<PropGraph, PropError> {
    let total: usize = assignment.iter().map(Vec::len).sum();
    let mut seen = vec![false; total];
    for (j, legs) in assignment.iter().enumerate() {
        if legs.is_empty() {
            return Err(PropError::Arity(format!("output {j} has no strands")));
        }
        if legs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PropError::NotMonotone(format!("output {j}: {legs:?}")));
        }
        for &l in legs {
            if l >= total || seen[l] {
                return Err(PropError::Arity(format!("strand {l} is out of range or reused")));
            }
            seen[l] = true;
        }
    }
    let mut vertices: Vec<(Gen, Vec<Source>)> = Vec::new();
    let mut strands = vec![Source::Input(0)];
    while strands.len() < total {
        let last = strands.pop().unwrap();
        let v = vertices.len();
        vertices.push((Gen::Coproduct, vec![last]));
        strands.extend([Source::Port(v, 0), Source::Port(v, 1)]);
    }
    let mut outputs = Vec::new();
    for legs in assignment {
        let mut acc = strands[legs[0]];
        for &l in &legs[1..] {
            let v = vertices.len();
            vertices.push((Gen::Join, vec![acc, strands[l]]));
            acc = Source::Port(v, 0);
        }
        outputs.push(acc);
    }
    PropGraph::new(1, vertices, outputs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Graded;

    #[test]
    fn shapes() {
        assert_eq!(msl_generator(&[vec![0]]).unwrap(), PropGraph::identity(1));
        assert_eq!(msl_generator(&[vec![0], vec![1]]).unwrap(), PropGraph::coproduct());
        let g = msl_generator(&[vec![0, 2], vec![1]]).unwrap();
        assert_eq!((g.biarity(), g.degree()), ((1, 2), 1));
        assert!(matches!(msl_generator(&[vec![1, 0]]), Err(PropError::NotMonotone(_))));
        assert!(msl_generator(&[vec![0], vec![0]]).is_err());
    }
}
