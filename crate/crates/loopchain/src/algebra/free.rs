//! Sparse linear combinations over opaque, graded basis keys.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::ring::Ring;
use super::AlgebraError;

/// A basis key that knows its own homological degree.
pub trait Graded {
    fn degree(&self) -> i64;
}

/// Everything a basis key has to provide.
pub trait Key: Clone + Ord + Eq + Hash + fmt::Debug + Graded + Send + Sync + 'static {}
impl<T: Clone + Ord + Eq + Hash + fmt::Debug + Graded + Send + Sync + 'static> Key for T {}

/// A nondegenerate cell of a finite simplicial or cubical set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, serde::Serialize)]
pub struct Cell {
    pub dim: u32,
    pub id: u32,
}

impl Cell {
    pub fn new(dim: usize, id: usize) -> Cell {
        Cell { dim: dim as u32, id: id as u32 }
    }
}

impl Graded for Cell {
    fn degree(&self) -> i64 {
        self.dim as i64
    }
}

impl<K: Graded> Graded for Vec<K> {
    fn degree(&self) -> i64 {
        self.iter().map(Graded::degree).sum()
    }
}

impl<A: Graded, B: Graded> Graded for (A, B) {
    fn degree(&self) -> i64 {
        self.0.degree() + self.1.degree()
    }
}

/// Finite linear combination with nonzero integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeElement<K: Ord> {
    terms: BTreeMap<K, i64>,
}

impl<K: Ord> Default for FreeElement<K> {
    fn default() -> Self {
        FreeElement { terms: BTreeMap::new() }
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for FreeElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{k:?}")?;
        }
        Ok(())
    }
}

fn checked(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("coefficient overflow")
}

impl<K: Ord + Clone> FreeElement<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, 1)
    }

    pub fn term(k: K, c: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(k, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (K, i64)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (k, c) in it {
            e.add_term(k, c);
        }
        e
    }

    pub fn add_term(&mut self, k: K, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(k.clone()).or_insert(0);
        *slot = checked(*slot, c);
        if *slot == 0 {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> i64 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> + '_ {
        self.terms.iter().map(|(k, c)| (k, *c))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> + '_ {
        self.terms.keys()
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.checked_mul(c).expect("coefficient overflow")))
                .collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: i64) {
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v.checked_mul(c).expect("coefficient overflow"));
        }
    }

    /// Linear extension of `f` from basis keys.
    pub fn map<L: Ord + Clone, F: FnMut(&K) -> FreeElement<L>>(&self, mut f: F) -> FreeElement<L> {
        let mut out = FreeElement::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Linear extension of a partial key map with a sign; `None` means zero.
    pub fn map_keys<L: Ord + Clone, F: FnMut(&K) -> Option<(L, i64)>>(&self, mut f: F) -> FreeElement<L> {
        let mut out = FreeElement::zero();
        for (k, c) in self.iter() {
            if let Some((l, s)) = f(k) {
                out.add_term(l, c * s);
            }
        }
        out
    }

    /// Coefficients reduced into the ring; zero terms disappear.
    pub fn reduce(&self, ring: Ring) -> Self {
        FreeElement::from_terms(self.iter().map(|(k, c)| (k.clone(), ring.reduce(c))))
    }

    /// Sum of coefficients, i.e. the image under the map sending every key to 1.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl<K: Ord + Clone + Graded> FreeElement<K> {
    /// The common degree of all keys; `Ok(None)` for zero.
    pub fn homogeneous_degree(&self) -> Result<Option<i64>, AlgebraError> {
        let mut deg = None;
        for k in self.terms.keys() {
            let d = k.degree();
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return Err(AlgebraError::Inhomogeneous),
                _ => {}
            }
        }
        Ok(deg)
    }
}

impl<K: Ord + Clone> Add for FreeElement<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<K: Ord + Clone> AddAssign for FreeElement<K> {
    fn add_assign(&mut self, rhs: Self) {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl<K: Ord + Clone> Sub for FreeElement<K> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl<K: Ord + Clone> SubAssign for FreeElement<K> {
    fn sub_assign(&mut self, rhs: Self) {
        for (k, c) in rhs.terms {
            self.add_term(k, -c);
        }
    }
}

impl<K: Ord + Clone> Neg for FreeElement<K> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl<K: Ord + Clone> Mul<i64> for FreeElement<K> {
    type Output = Self;
    fn mul(self, c: i64) -> Self {
        self.scale(c)
    }
}

impl<K: Ord + Clone> FromIterator<(K, i64)> for FreeElement<K> {
    fn from_iter<I: IntoIterator<Item = (K, i64)>>(iter: I) -> Self {
        FreeElement::from_terms(iter)
    }
}

/// (−1)^n
pub fn sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Koszul sign of reordering graded symbols: `perm[j]` is the old position
/// of the symbol that ends up in position `j`.
pub fn koszul_sign(degrees: &[i64], perm: &[usize]) -> i64 {
    let mut s = 0i64;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                s += degrees[perm[a]] * degrees[perm[b]];
            }
        }
    }
    sign(s)
}

/// a ⊗ b on pair keys; rejects inhomogeneous operands.
pub fn tensor_elements<A: Key, B: Key>(
    a: &FreeElement<A>,
    b: &FreeElement<B>,
) -> Result<FreeElement<(A, B)>, AlgebraError> {
    a.homogeneous_degree()?;
    b.homogeneous_degree()?;
    Ok(tensor(a, b))
}

/// Bilinear tensor product without homogeneity checks.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(a: &FreeElement<A>, b: &FreeElement<B>) -> FreeElement<(A, B)> {
    let mut out = FreeElement::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_term((x.clone(), y.clone()), c * d);
        }
    }
    out
}

/// Tensor product of words: concatenation of the factor lists.
pub fn tensor_words<K: Ord + Clone>(a: &FreeElement<Vec<K>>, b: &FreeElement<Vec<K>>) -> FreeElement<Vec<K>> {
    let mut out = FreeElement::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            let mut w = x.clone();
            w.extend(y.iter().cloned());
            out.add_term(w, c * d);
        }
    }
    out
}

/// The symmetry a ⊗ b ↦ (−1)^{|a||b|} b ⊗ a.
pub fn swap<A: Key, B: Key>(x: &FreeElement<(A, B)>) -> FreeElement<(B, A)> {
    x.map_keys(|(a, b)| Some(((b.clone(), a.clone()), sign(a.degree() * b.degree()))))
}

/// Reorder tensor factors with Koszul signs; `perm[j]` is the old position of new factor `j`.
pub fn permute<K: Key>(x: &FreeElement<Vec<K>>, perm: &[usize]) -> FreeElement<Vec<K>> {
    x.map_keys(|w| {
        let degs: Vec<i64> = w.iter().map(Graded::degree).collect();
        let s = koszul_sign(&degs, perm);
        Some((perm.iter().map(|&i| w[i].clone()).collect(), s))
    })
}

/// Pair keys to two-letter words.
pub fn pair_to_word<K: Key>(x: &FreeElement<(K, K)>) -> FreeElement<Vec<K>> {
    x.map_keys(|(a, b)| Some((vec![a.clone(), b.clone()], 1)))
}

/// The shuffle (a₁⊗…⊗a_n)⊗(b₁⊗…⊗b_n) ↦ (a₁⊗b₁)⊗…⊗(a_n⊗b_n) on flat words of length 2n.
pub fn interleave<K: Key>(x: &FreeElement<Vec<K>>, n: usize) -> FreeElement<Vec<K>> {
    let perm: Vec<usize> = (0..n).flat_map(|i| [i, n + i]).collect();
    permute(x, &perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(dim: usize, id: usize) -> Cell {
        Cell::new(dim, id)
    }

    #[test]
    fn zero_terms_vanish() {
        let mut e = FreeElement::basis(c(1, 0));
        e.add_term(c(1, 0), -1);
        assert!(e.is_zero());
    }

    #[test]
    fn swap_of_odd_pair_is_negative() {
        let a = FreeElement::basis(c(1, 0));
        let t = tensor_elements(&a, &a).unwrap();
        let s = swap(&t);
        assert_eq!(s.coeff(&(c(1, 0), c(1, 0))), -1);
    }

    #[test]
    fn zero_tensor_anything() {
        let z: FreeElement<Cell> = FreeElement::zero();
        let b = FreeElement::basis(c(2, 1));
        assert!(tensor_elements(&z, &b).unwrap().is_zero());
    }

    #[test]
    fn inhomogeneous_rejected() {
        let a = FreeElement::basis(c(1, 0)) + FreeElement::basis(c(2, 0));
        assert!(tensor_elements(&a, &a).is_err());
    }

    #[test]
    fn shuffle_of_odd_symbols() {
        // (a1⊗a2)⊗(b1⊗b2) → (a1⊗b1)⊗(a2⊗b2): a2 passes b1 once.
        let w = vec![c(1, 1), c(1, 2), c(1, 3), c(1, 4)];
        let x = FreeElement::basis(w);
        let y = interleave(&x, 2);
        assert_eq!(y.coeff(&vec![c(1, 1), c(1, 3), c(1, 2), c(1, 4)]), -1);
    }
}
