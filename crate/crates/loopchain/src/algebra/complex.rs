//! Degreewise finite chain complexes, graded maps and homology.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::free::{sign, FreeElement, Key};
use super::ring::Ring;
use super::snf::{invariant_factors, rank_mod_p, IntMatrix};
use super::AlgebraError;

pub type Rule<K, L> = Arc<dyn Fn(&K) -> FreeElement<L> + Send + Sync>;

/// How a complex was cut down to finitely many generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Truncation {
    pub max_degree: i64,
    /// Bound on word length or group-letter count, when one was needed.
    pub word_cutoff: Option<usize>,
    /// True when nothing exists above `max_degree`.
    pub complete_above: bool,
    /// True when the listed degrees are the full complex in those degrees
    /// (no generators or differential terms were dropped).
    pub exact: bool,
}

/// Chain complex given by basis lists and a differential rule.
#[derive(Clone)]
pub struct ChainComplex<K: Key> {
    basis: BTreeMap<i64, Vec<K>>,
    diff: Rule<K, K>,
    min_degree: i64,
    truncation: Truncation,
}

impl<K: Key> fmt::Debug for ChainComplex<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ChainComplex")
            .field("ranks", &self.basis.iter().map(|(d, b)| (*d, b.len())).collect::<Vec<_>>())
            .field("truncation", &self.truncation)
            .finish()
    }
}

impl<K: Key> ChainComplex<K> {
    /// `basis[d]` lists the generators in degree `d`; degrees in
    /// `min_degree..=max_degree` that are missing are treated as zero.
    pub fn new(
        basis: BTreeMap<i64, Vec<K>>,
        diff: Rule<K, K>,
        min_degree: i64,
        max_degree: i64,
        complete_above: bool,
    ) -> Self {
        let basis = basis.into_iter().filter(|(d, _)| *d >= min_degree && *d <= max_degree).collect();
        ChainComplex {
            basis,
            diff,
            min_degree,
            truncation: Truncation { max_degree, word_cutoff: None, complete_above, exact: true },
        }
    }

    /// Marks the complex as cut by a word-length bound.
    pub fn with_word_cutoff(mut self, cutoff: usize, exact: bool) -> Self {
        self.truncation.word_cutoff = Some(cutoff);
        self.truncation.exact = exact;
        self
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.truncation.max_degree
    }

    pub fn truncation(&self) -> &Truncation {
        &self.truncation
    }

    pub fn basis(&self, n: i64) -> &[K] {
        self.basis.get(&n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.min_degree..=self.truncation.max_degree
    }

    pub fn diff(&self, k: &K) -> FreeElement<K> {
        (self.diff)(k)
    }

    pub fn diff_rule(&self) -> Rule<K, K> {
        self.diff.clone()
    }

    pub fn diff_element(&self, x: &FreeElement<K>) -> FreeElement<K> {
        x.map(|k| self.diff(k))
    }

    /// Restriction to degrees ≤ `max_degree`.
    pub fn truncate(&self, max_degree: i64) -> Self {
        let mut out = self.clone();
        if max_degree < self.truncation.max_degree {
            out.basis.retain(|d, _| *d <= max_degree);
            out.truncation.max_degree = max_degree;
            out.truncation.complete_above = false;
        }
        out
    }

    /// First basis key on which d∘d fails to vanish.
    pub fn check_d_squared(&self) -> Result<(), (K, FreeElement<K>)> {
        for keys in self.basis.values() {
            for k in keys {
                let dd = self.diff_element(&self.diff(k));
                if !dd.is_zero() {
                    return Err((k.clone(), dd));
                }
            }
        }
        Ok(())
    }

    /// Matrix of d: C_n → C_{n−1}, columns indexed by `basis(n)`.
    pub fn differential_matrix(&self, n: i64) -> Result<IntMatrix, AlgebraError> {
        let src = self.basis(n);
        let tgt = self.basis(n - 1);
        let index: HashMap<&K, usize> = tgt.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut m = IntMatrix::zeros(tgt.len(), src.len());
        for (j, k) in src.iter().enumerate() {
            for (t, c) in self.diff(k).iter() {
                let i = *index
                    .get(t)
                    .ok_or_else(|| AlgebraError::LeavesBasis(format!("d({k:?}) contains {t:?}")))?;
                m.set(i, j, c as i128);
            }
        }
        Ok(m)
    }

    /// Matrix dump for debugging, see [`IntMatrix::dump`].
    pub fn dump_differential(&self, n: i64) -> Result<String, AlgebraError> {
        Ok(self.differential_matrix(n)?.dump())
    }
}

/// H_n as free rank plus invariant factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Homology {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl Homology {
    pub fn free(rank: usize) -> Homology {
        Homology { rank, torsion: vec![] }
    }
}

impl fmt::Display for Homology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 { "Z".into() } else { format!("Z^{}", self.rank) });
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn matrix_rank(m: &IntMatrix, ring: Ring) -> (usize, Vec<u64>) {
    match ring {
        Ring::PrimeField { p } => (rank_mod_p(m, p), vec![]),
        Ring::Rationals => (invariant_factors(m).len(), vec![]),
        Ring::Integers => {
            let f = invariant_factors(m);
            let torsion = f.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
            (f.len(), torsion)
        }
    }
}

/// H_n(C; R). Needs degrees n−1, n, n+1 in range, unless nothing exists above n.
pub fn smith_homology<K: Key>(c: &ChainComplex<K>, n: i64, ring: Ring) -> Result<Homology, AlgebraError> {
    let t = c.truncation();
    if n + 1 > t.max_degree && !t.complete_above {
        return Err(AlgebraError::InsufficientTruncation { degree: n, max_degree: t.max_degree });
    }
    if n < c.min_degree() || n > t.max_degree {
        return Ok(Homology::free(0));
    }
    let dim = c.basis(n).len();
    let (rank_out, _) = if n > c.min_degree() { matrix_rank(&c.differential_matrix(n)?, ring) } else { (0, vec![]) };
    let (rank_in, torsion) =
        if n < t.max_degree { matrix_rank(&c.differential_matrix(n + 1)?, ring) } else { (0, vec![]) };
    Ok(Homology { rank: dim - rank_out - rank_in, torsion })
}

/// Degree-shifting linear map between complexes.
#[derive(Clone)]
pub struct GradedLinearMap<K: Key, L: Key> {
    pub source: ChainComplex<K>,
    pub target: ChainComplex<L>,
    pub shift: i64,
    pub rule: Rule<K, L>,
}

impl<K: Key, L: Key> GradedLinearMap<K, L> {
    pub fn apply(&self, x: &FreeElement<K>) -> FreeElement<L> {
        x.map(|k| (self.rule)(k))
    }
}

/// Counterexample to the chain-map identity.
#[derive(Clone, Debug)]
pub struct ChainMapFailure<K: Key, L: Key> {
    pub key: K,
    pub f_of_d: FreeElement<L>,
    pub d_of_f: FreeElement<L>,
}

/// Checks f∘d = (−1)^shift d∘f on every basis key with degree in `degrees`.
pub fn is_chain_map<K: Key, L: Key>(
    f: &GradedLinearMap<K, L>,
    degrees: std::ops::RangeInclusive<i64>,
) -> Result<(), ChainMapFailure<K, L>> {
    for n in degrees {
        for k in f.source.basis(n) {
            let fd = f.apply(&f.source.diff(k));
            let df = f.target.diff_element(&(f.rule)(k)).scale(sign(f.shift));
            if fd != df {
                return Err(ChainMapFailure { key: k.clone(), f_of_d: fd, d_of_f: df });
            }
        }
    }
    Ok(())
}
