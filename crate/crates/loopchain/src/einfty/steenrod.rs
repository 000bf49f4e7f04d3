//! Cup-i coproducts and Steenrod operations on homology.

use serde::Serialize;

use crate::algebra::{fp_homology_basis, mod_inverse, sign, ChainComplex, FreeElement, Graded, Key, Ring};
use crate::prop::{act, resolution_differential, PsiTable};

use super::action::{Cellular, Psi};
use super::EInftyError;

/// Δ_i = ψ(e_i) for p = 2, reduced mod 2.
pub fn cup_i<X: Cellular>(
    x: &X,
    table: &PsiTable,
    i: usize,
    c: &FreeElement<X::Cell>,
) -> Result<FreeElement<Vec<X::Cell>>, EInftyError> {
    if table.p != 2 {
        return Err(EInftyError::WrongRing { expected: 2, got: table.p as u64 });
    }
    Ok(Psi::new(x, table).apply(i, c)?.reduce(Ring::PrimeField { p: 2 }))
}

/// ∂Δ_i(c) + Δ_i(∂c) + (1+T)Δ_{i−1}(c) mod 2, which vanishes for a valid family.
pub fn cup_i_defect<X: Cellular>(x: &X, table: &PsiTable, i: usize, c: &X::Cell) -> Result<FreeElement<Vec<X::Cell>>, EInftyError> {
    let f2 = Ring::PrimeField { p: 2 };
    let e = FreeElement::basis(c.clone());
    let d = |k: &X::Cell| x.boundary(k);
    let mut out = super::action::tensor_boundary_with(d, &cup_i(x, table, i, &e)?);
    out.add_scaled(&cup_i(x, table, i, &x.boundary(c))?, 1);
    if i > 0 {
        let prev = Psi::new(x, table).apply(i - 1, &e)?;
        out.add_scaled(&act(&resolution_differential(2, i), &prev, 2), 1);
    }
    Ok(out.reduce(f2))
}

/// ν(q) = (−1)^{q(q−1)m/2} (m!)^q in F_p, m = (p−1)/2, as the representative
/// of least absolute value.
pub fn nu(q: i64, p: u64) -> i64 {
    let m = (p as i64 - 1) / 2;
    let s = sign((q * (q - 1) / 2) * m);
    let fact = (1..=m).fold(1i128, |a, b| a * b as i128 % p as i128);
    let base = if q >= 0 { fact } else { mod_inverse(fact, p as i128) };
    let mut pow = 1i128;
    for _ in 0..q.unsigned_abs() {
        pow = pow * base % p as i128;
    }
    let r = (s as i128 * pow).rem_euclid(p as i128) as i64;
    if 2 * r > p as i64 { r - p as i64 } else { r }
}

/// A class in H_degree(C; F_p) by coordinates in the chosen homology basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperationResult {
    pub degree: i64,
    pub lift_index: Option<usize>,
    pub coordinates: Vec<u64>,
}

fn evaluate_power<K: Clone + Ord + Graded>(alpha: &FreeElement<K>, x: &FreeElement<Vec<K>>, p: u64) -> i64 {
    let pp = p as i64;
    let mut total = 0i64;
    for (w, c) in x.iter() {
        let mut prod = c.rem_euclid(pp);
        for k in w {
            prod = prod * alpha.coeff(k).rem_euclid(pp) % pp;
            if prod == 0 {
                break;
            }
        }
        // each α passes over the earlier factors, all of degree |α| when nonzero
        let deg = w.first().map_or(0, |k| k.degree());
        let n = w.len() as i64;
        let s = sign(deg * deg * n * (n - 1) / 2);
        total = (total + s * prod).rem_euclid(pp);
    }
    total
}

fn check_cycle<K: Key>(complex: &ChainComplex<K>, mu: &FreeElement<K>, p: u64) -> Result<i64, EInftyError> {
    if !complex.diff_element(mu).reduce(Ring::PrimeField { p }).is_zero() {
        return Err(EInftyError::NotACycle);
    }
    Ok(mu.homogeneous_degree()?.unwrap_or(0))
}

/// ψ(e_i) applied to a chain, as supplied by an E∞-structure.
pub type PsiFn<'a, K> = dyn Fn(usize, &FreeElement<K>) -> Result<FreeElement<Vec<K>>, EInftyError> + 'a;

/// P_s(μ) ∈ H_{k+s}: α ↦ (α⊗α)(ψ(e_{k+2s}) μ) on a dual basis of cocycles.
/// Cohomologically, Sq^i on H^j is P_{−i} from H_{i+j}.
pub fn steenrod_sq_with<K: Key>(
    complex: &ChainComplex<K>,
    psi: &PsiFn<'_, K>,
    s: i64,
    mu: &FreeElement<K>,
) -> Result<OperationResult, EInftyError> {
    let k = check_cycle(complex, mu, 2)?;
    let j = k + s;
    let m = k + 2 * s;
    let basis = fp_homology_basis(complex, j, 2)?;
    if m < 0 {
        return Ok(OperationResult { degree: j, lift_index: None, coordinates: vec![0; basis.rank()] });
    }
    let image = psi(m as usize, mu)?;
    let coordinates = basis.duals.iter().map(|a| evaluate_power(a, &image, 2) as u64).collect();
    Ok(OperationResult { degree: j, lift_index: Some(m as usize), coordinates })
}

/// β^ε P_s(μ) for odd p: α ↦ α^{⊗p}((−1)^p ν(q) ψ(e_{(2s−q)(p−1)−ε}) μ),
/// q = −k − 2s(p−1) + ε.
pub fn steenrod_odd_with<K: Key>(
    complex: &ChainComplex<K>,
    psi: &PsiFn<'_, K>,
    p: u64,
    eps: i64,
    s: i64,
    mu: &FreeElement<K>,
) -> Result<OperationResult, EInftyError> {
    let k = check_cycle(complex, mu, p)?;
    let pi = p as i64;
    let q = -k - 2 * s * (pi - 1) + eps;
    let idx = (2 * s - q) * (pi - 1) - eps;
    let total = k + idx;
    if idx < 0 || total.rem_euclid(pi) != 0 {
        let j = if total.rem_euclid(pi) == 0 { total / pi } else { k };
        let rank = fp_homology_basis(complex, j, p).map(|b| b.rank()).unwrap_or(0);
        return Ok(OperationResult { degree: j, lift_index: None, coordinates: vec![0; rank] });
    }
    let j = total / pi;
    let basis = fp_homology_basis(complex, j, p)?;
    let coeff = sign(pi) * nu(q, p);
    let image = psi(idx as usize, mu)?.scale(coeff);
    let coordinates = basis.duals.iter().map(|a| evaluate_power(a, &image, p) as u64).collect();
    Ok(OperationResult { degree: j, lift_index: Some(idx as usize), coordinates })
}

/// [`steenrod_sq_with`] for the structure on a cellular set.
pub fn steenrod_sq<X: Cellular>(
    x: &X,
    complex: &ChainComplex<X::Cell>,
    table: &PsiTable,
    s: i64,
    mu: &FreeElement<X::Cell>,
) -> Result<OperationResult, EInftyError> {
    if table.p != 2 {
        return Err(EInftyError::WrongRing { expected: 2, got: table.p as u64 });
    }
    let psi = Psi::new(x, table);
    steenrod_sq_with(complex, &|i, e| psi.apply(i, e), s, mu)
}

/// [`steenrod_odd_with`] for the structure on a cellular set.
pub fn steenrod_odd<X: Cellular>(
    x: &X,
    complex: &ChainComplex<X::Cell>,
    table: &PsiTable,
    eps: i64,
    s: i64,
    mu: &FreeElement<X::Cell>,
) -> Result<OperationResult, EInftyError> {
    let p = table.p as u64;
    if p == 2 {
        return Err(EInftyError::WrongRing { expected: 3, got: 2 });
    }
    let psi = Psi::new(x, table);
    steenrod_odd_with(complex, &|i, e| psi.apply(i, e), p, eps, s, mu)
}
