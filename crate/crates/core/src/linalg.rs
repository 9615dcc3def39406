//! Exact linear algebra over K, plus a multimodular rank certificate.
//!
//! Matrices are row vectors (`Vec<Vec<FieldK>>`). Elimination scans columns
//! left to right. The reduced echelon form pivots on the entry with the
//! fewest bits (first such row on ties), which keeps coefficient growth down;
//! every output is a deterministic function of the input.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::field::FieldK;
use crate::modp::{rank_mod, split_prime, Embedding};
use crate::poly::univariate::embedding_bound;

pub type Matrix = Vec<Vec<FieldK>>;

/// Determinant of a square matrix.
pub fn determinant(mut m: Matrix) -> FieldK {
    let n = m.len();
    let mut det = FieldK::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return FieldK::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -&det;
        }
        let pv = m[col][col].clone();
        det = &det * &pv;
        let inv = pv.inv().expect("nonzero pivot");
        let (head, tail) = m.split_at_mut(col + 1);
        let prow = &head[col];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] * &inv;
            for j in col..n {
                if !prow[j].is_zero() {
                    let t = &f * &prow[j];
                    row[j] -= &t;
                }
            }
        }
    }
    det
}

fn bit_size(x: &FieldK) -> u64 {
    x.numerators().iter().map(|n| n.bits()).sum::<u64>() + x.denominator().bits()
}

/// Reduced row-echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(mut m: Matrix, ncols: usize) -> (Matrix, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(piv) = (r..m.len()).filter(|&i| !m[i][col].is_zero()).min_by_key(|&i| bit_size(&m[i][col])) else {
            continue;
        };
        m.swap(r, piv);
        let inv = m[r][col].inv().expect("nonzero pivot");
        for j in col..ncols {
            if !m[r][j].is_zero() {
                m[r][j] = &m[r][j] * &inv;
            }
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for j in col..ncols {
                if !prow[j].is_zero() {
                    let t = &f * &prow[j];
                    row[j] -= &t;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Exact rank.
pub fn rank(m: &Matrix, ncols: usize) -> usize {
    let mut e = Echelon::new(ncols);
    for row in m {
        e.insert(row.clone());
    }
    e.rank()
}

/// Basis of the right kernel `{v : M v = 0}`: one vector per free column,
/// with a 1 in that column.
pub fn kernel(m: Matrix, ncols: usize) -> Matrix {
    let (r, pivots) = rref(m, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![FieldK::zero(); ncols];
        v[free] = FieldK::one();
        for (row, &pc) in r.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[pc] = -&row[free];
            }
        }
        out.push(v);
    }
    out
}

/// Incremental row-echelon form over K for span membership tests.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<(usize, Vec<FieldK>)>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` modulo the stored rows.
    pub fn reduce(&self, mut v: Vec<FieldK>) -> Vec<FieldK> {
        debug_assert_eq!(v.len(), self.ncols);
        for (col, row) in &self.rows {
            if v[*col].is_zero() {
                continue;
            }
            let f = v[*col].clone();
            for j in *col..self.ncols {
                if !row[j].is_zero() {
                    let t = &f * &row[j];
                    v[j] -= &t;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldK]) -> bool {
        self.reduce(v.to_vec()).iter().all(FieldK::is_zero)
    }

    /// Inserts `v` if it is independent of the stored rows; returns whether
    /// it was inserted.
    pub fn insert(&mut self, v: Vec<FieldK>) -> bool {
        let v = self.reduce(v);
        let Some(col) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[col].inv().expect("nonzero");
        let v: Vec<FieldK> = v.iter().map(|x| if x.is_zero() { x.clone() } else { x * &inv }).collect();
        self.rows.push((col, v));
        true
    }
}

/// Which subfield all entries of a matrix live in; fewer embeddings are
/// needed for smaller subfields.
fn embeddings_needed(m: &Matrix) -> usize {
    let mut level = 1;
    for x in m.iter().flatten() {
        if !x.in_omega_subfield() {
            return 6;
        }
        if !x.is_rational() {
            level = 2;
        }
    }
    level
}

/// Squared Hadamard-type bound `B^2` on every complex embedding of every
/// minor of `m` after each row is scaled to integer coordinates.
fn hadamard_bound_sq(m: &Matrix, ncols: usize) -> BigInt {
    let scaled: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let mut l = BigInt::one();
            for x in row {
                if !x.is_zero() {
                    l = l.lcm(x.denominator());
                }
            }
            row.iter()
                .map(|x| {
                    if x.is_zero() {
                        BigInt::zero()
                    } else {
                        let s = &l / x.denominator();
                        embedding_bound(&std::array::from_fn(|i| &x.numerators()[i] * &s))
                    }
                })
                .collect()
        })
        .collect();
    let k = m.len().min(ncols);
    let product_of_largest = |mut norms: Vec<BigInt>| -> BigInt {
        norms.sort_by(|a, b| b.cmp(a));
        norms.into_iter().take(k).map(|n| n.max(BigInt::one())).product()
    };
    let row_norms: Vec<BigInt> = scaled.iter().map(|r| r.iter().map(|x| x * x).sum()).collect();
    let col_norms: Vec<BigInt> =
        (0..ncols).map(|j| scaled.iter().map(|r| &r[j] * &r[j]).sum()).collect();
    product_of_largest(row_norms).min(product_of_largest(col_norms))
}

fn reduce_rows(m: &Matrix, e: &Embedding) -> Option<Vec<Vec<u64>>> {
    m.iter().map(|row| row.iter().map(|x| e.reduce(x)).collect()).collect()
}

/// Rank over K certified by reduction modulo split primes.
///
/// Every reduction can only lower the rank. If a nonzero minor of size `r`
/// vanished under all six embeddings of each prime used, it would be
/// divisible by their product `P`, forcing `|N(minor)| >= P^6`; the
/// Hadamard bound `B` caps every conjugate of the minor, so once `P > B`
/// the maximal observed rank is the true rank.
pub fn certified_rank(m: &Matrix, ncols: usize) -> usize {
    if m.is_empty() || ncols == 0 {
        return 0;
    }
    let full = m.len().min(ncols);
    let bound_sq = hadamard_bound_sq(m, ncols);
    let needed = embeddings_needed(m);
    let mut product = BigInt::one();
    let mut best = 0;
    let mut idx = 0;
    while &product * &product <= bound_sq {
        let sp = split_prime(idx);
        idx += 1;
        let embs = sp.embeddings();
        // Entries in Q(w) see only the choice of w; entries in Q see neither.
        let chosen: &[usize] = match needed {
            1 => &[0],
            2 => &[0, 3],
            _ => &[0, 1, 2, 3, 4, 5],
        };
        let mut reduced_all = Vec::with_capacity(needed);
        for &i in chosen {
            match reduce_rows(m, &embs[i]) {
                Some(r) => reduced_all.push(r),
                None => break,
            }
        }
        if reduced_all.len() < needed {
            continue;
        }
        for rows in reduced_all {
            best = best.max(rank_mod(rows, sp.p));
            if best == full {
                return best;
            }
        }
        product *= BigInt::from(sp.p);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> FieldK {
        s.parse().unwrap()
    }

    fn mat(rows: &[&[&str]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|s| k(s)).collect()).collect()
    }

    #[test]
    fn determinant_small() {
        let m = mat(&[&["1", "a"], &["a^2", "2"]]);
        assert!(determinant(m).is_zero());
        let m = mat(&[&["w", "1"], &["1", "w"]]);
        assert_eq!(determinant(m), k("w^2 - 1"));
    }

    #[test]
    fn kernel_and_rank() {
        let m = mat(&[&["1", "a", "0"], &["a^2", "2", "0"], &["0", "0", "w"]]);
        assert_eq!(rank(&m, 3), 2);
        let ker = kernel(m.clone(), 3);
        assert_eq!(ker.len(), 1);
        for row in &m {
            let s = row.iter().zip(&ker[0]).fold(FieldK::zero(), |acc, (a, b)| &acc + &(a * b));
            assert!(s.is_zero());
        }
        assert_eq!(certified_rank(&m, 3), 2);
    }

    #[test]
    fn certified_rank_sees_big_entries() {
        // Rows (1, p) and (1, p + 1): rank 2 over K, rank 2 mod every prime
        // except none; a scaled variant hides the rank mod the first prime.
        let p = split_prime(0).p as i64;
        let m = mat(&[&["1", "1"], &["1", &format!("{}", 1 + p)]]);
        assert_eq!(certified_rank(&m, 2), 2);
        let m = mat(&[&["1", "1", "1"], &["2", "2", "2"], &["1", "0", "a"]]);
        assert_eq!(certified_rank(&m, 3), 2);
    }
}
