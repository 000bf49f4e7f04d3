//! Smith normal form by fraction-free elimination with minimal-|value| pivots,
//! plus rank over prime fields.

use std::fmt::Write;

/// Dense integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i128) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[i] -= q * row[t], restricted to columns ≥ from
    fn row_axpy(&mut self, i: usize, t: usize, q: i128, from: usize) {
        for j in from..self.cols {
            let v = self.get(t, j);
            if v != 0 {
                let x = self.get(i, j) - q * v;
                self.set(i, j, x);
            }
        }
    }

    fn col_axpy(&mut self, j: usize, t: usize, q: i128, from: usize) {
        for i in from..self.rows {
            let v = self.get(i, t);
            if v != 0 {
                let x = self.get(i, j) - q * v;
                self.set(i, j, x);
            }
        }
    }

    /// Textual dump: a `rows cols` header, then one `i j value` line per nonzero entry.
    pub fn dump(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v != 0 {
                    let _ = writeln!(s, "{i} {j} {v}");
                }
            }
        }
        s
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Nonzero invariant factors d₁ | d₂ | … of the matrix (their count is the rank).
pub fn invariant_factors(m: &IntMatrix) -> Vec<i128> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // global minimal pivot in the remaining block
        let mut best: Option<(usize, usize, i128)> = None;
        for i in t..rows {
            for j in t..cols {
                let v = a.get(i, j).abs();
                if v != 0 && best.map_or(true, |(_, _, b)| v < b) {
                    best = Some((i, j, v));
                    if v == 1 {
                        break;
                    }
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let p = a.get(t, t);
            let mut clean = true;
            for i in t + 1..rows {
                let v = a.get(i, t);
                if v != 0 {
                    a.row_axpy(i, t, v / p, t);
                    clean &= a.get(i, t) == 0;
                }
            }
            for j in t + 1..cols {
                let v = a.get(t, j);
                if v != 0 {
                    a.col_axpy(j, t, v / p, t);
                    clean &= a.get(t, j) == 0;
                }
            }
            if clean {
                break;
            }
            // a remainder smaller than the pivot survived; promote it
            let mut best = (t, t, p.abs());
            for i in t + 1..rows {
                let v = a.get(i, t).abs();
                if v != 0 && v < best.2 {
                    best = (i, t, v);
                }
            }
            for j in t + 1..cols {
                let v = a.get(t, j).abs();
                if v != 0 && v < best.2 {
                    best = (t, j, v);
                }
            }
            a.swap_rows(t, best.0);
            a.swap_cols(t, best.1);
        }
        diag.push(a.get(t, t).abs());
        t += 1;
    }
    diag.sort_unstable();
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = gcd(diag[i], diag[j]);
            let l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

pub fn rank_over_z(m: &IntMatrix) -> usize {
    rank_mod(m, None)
}

/// Rank over F_p.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    rank_mod(m, Some(p as i128))
}

fn rank_mod(m: &IntMatrix, p: Option<i128>) -> usize {
    match p {
        None => invariant_factors(m).len(),
        Some(p) => {
            let mut a = m.clone();
            for v in a.data.iter_mut() {
                *v = v.rem_euclid(p);
            }
            let mut rank = 0;
            for col in 0..a.cols {
                let Some(piv) = (rank..a.rows).find(|&i| a.get(i, col) != 0) else { continue };
                a.swap_rows(rank, piv);
                let inv = mod_inverse(a.get(rank, col), p);
                for j in col..a.cols {
                    let x = a.get(rank, j) * inv % p;
                    a.set(rank, j, x);
                }
                for i in 0..a.rows {
                    if i != rank {
                        let f = a.get(i, col);
                        if f != 0 {
                            for j in col..a.cols {
                                let x = (a.get(i, j) - f * a.get(rank, j)).rem_euclid(p);
                                a.set(i, j, x);
                            }
                        }
                    }
                }
                rank += 1;
            }
            rank
        }
    }
}

pub fn mod_inverse(a: i128, p: i128) -> i128 {
    // p is prime: a^(p-2)
    let mut result = 1i128;
    let mut base = a.rem_euclid(p);
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: usize, cols: usize, v: &[i128]) -> IntMatrix {
        IntMatrix { rows, cols, data: v.to_vec() }
    }

    #[test]
    fn diagonal_two() {
        // RP² boundary matrix: columns are ∂U = a − b, ∂L = a + b
        let m = mat(2, 2, &[1, 1, -1, 1]);
        assert_eq!(invariant_factors(&m), vec![1, 2]);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 2);
    }

    #[test]
    fn divisibility_chain() {
        let m = mat(2, 2, &[4, 0, 0, 6]);
        assert_eq!(invariant_factors(&m), vec![2, 12]);
    }

    #[test]
    fn zero_matrix() {
        assert!(invariant_factors(&IntMatrix::zeros(3, 2)).is_empty());
        assert_eq!(rank_mod_p(&IntMatrix::zeros(0, 4), 5), 0);
    }

    #[test]
    fn dump_format() {
        let m = mat(1, 2, &[0, -3]);
        assert_eq!(m.dump(), "1 2\n0 1 -3\n");
    }
}
