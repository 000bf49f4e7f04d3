//! Shared helpers: random reduced simplicial sets and a dense rank oracle.
#![allow(dead_code)]

use std::collections::HashMap;

use loopchain::algebra::{ChainComplex, Key};
use loopchain::simplicial::{SimplexRef, SimplicialSet, SimplicialSetBuilder};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every simplex of dimension `dim` built from the cells added so far.
fn simplices(b: &SimplicialSetBuilder, names: &[Vec<String>], dim: usize) -> Vec<SimplexRef> {
    let mut out = Vec::new();
    for (d, list) in names.iter().enumerate().take(dim + 1) {
        for name in list {
            let base = b.lookup(name).expect("added");
            for word in degeneracy_words(dim, d) {
                out.push(SimplexRef::from_degeneracies(base, &word).expect("valid word"));
            }
        }
    }
    out
}

/// Strictly decreasing words taking a d-simplex to dimension n.
fn degeneracy_words(n: usize, d: usize) -> Vec<Vec<usize>> {
    let k = n - d;
    let mut out = Vec::new();
    let mut word = Vec::new();
    fn rec(top: usize, k: usize, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(word.iter().rev().copied().collect::<Vec<_>>());
            return;
        }
        // indices chosen increasing from the innermost letter s_{j_k}
        let start = word.last().map_or(0, |&j: &usize| j + 1);
        for j in start..=top {
            word.push(j);
            rec(top + 1, k - 1, word, out);
            word.pop();
        }
    }
    rec(d, k, &mut word, &mut out);
    out
}

/// A reduced simplicial set with at most `max_cells` nondegenerate cells in
/// each dimension 1..=3, faces drawn at random until the identities hold.
pub fn random_reduced(seed: u64, max_cells: usize) -> SimplicialSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = SimplicialSetBuilder::new();
    let mut names: Vec<Vec<String>> = vec![vec!["*".into()]];
    b.add("*", 0, vec![]).expect("vertex");
    for dim in 1..=3usize {
        let count = rng.gen_range(0..=max_cells);
        names.push(Vec::new());
        for k in 0..count {
            let pool = simplices(&b, &names, dim - 1);
            let name = format!("x{dim}_{k}");
            for _ in 0..200 {
                let faces: Vec<SimplexRef> = (0..=dim).map(|_| pool.choose(&mut rng).expect("nonempty").clone()).collect();
                let mut trial = b.clone();
                if trial.add(&name, dim, faces.clone()).is_ok() && trial.clone().build().is_ok() {
                    b = trial;
                    names[dim].push(name.clone());
                    break;
                }
            }
        }
    }
    b.build().expect("validated while adding")
}

/// Rank of a dense matrix over F_p by Gaussian elimination.
pub fn dense_rank_mod(mut m: Vec<Vec<i64>>, p: i64) -> usize {
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..cols {
                    m[r][k] = (m[r][k] - f * m[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// dim H_n(C; F_p) from the basis lists and the differential rule alone.
pub fn betti_mod<K: Key>(c: &ChainComplex<K>, n: i64, p: i64) -> usize {
    let matrix = |d: i64| -> Vec<Vec<i64>> {
        let tgt: HashMap<&K, usize> = c.basis(d - 1).iter().enumerate().map(|(i, k)| (k, i)).collect();
        c.basis(d)
            .iter()
            .map(|k| {
                let mut row = vec![0i64; tgt.len()];
                for (t, v) in c.diff(k).iter() {
                    row[tgt[t]] = v;
                }
                row
            })
            .collect()
    };
    let dim = c.basis(n).len();
    let out = if n > c.min_degree() && !c.basis(n - 1).is_empty() { dense_rank_mod(matrix(n), p) } else { 0 };
    let inn = if c.basis(n + 1).is_empty() { 0 } else { dense_rank_mod(matrix(n + 1), p) };
    dim - out - inn
}
