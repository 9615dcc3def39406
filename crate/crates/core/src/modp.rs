//! Reduction of K modulo completely split primes.
//!
//! For a prime `p = 1 mod 3` in which 2 is a cube, `Z[w, a] / p` is a product
//! of six copies of `F_p`; each factor is an [`Embedding`] sending `w` and
//! `a` to roots of their minimal polynomials. Any ring map of this kind can
//! only lower the rank of a matrix, which the callers exploit for cheap
//! upper bounds on kernel dimensions.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::field::FieldK;

/// A ring map `Z[w, a]_(p) -> F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub p: u64,
    pub omega: u64,
    pub alpha: u64,
    basis: [u64; 6],
}

impl Embedding {
    fn new(p: u64, omega: u64, alpha: u64) -> Self {
        let a2 = mulmod(alpha, alpha, p);
        let basis = [1, omega, alpha, mulmod(omega, alpha, p), a2, mulmod(omega, a2, p)];
        Embedding { p, omega, alpha, basis }
    }

    /// Image of the basis element with flat index `i`.
    pub fn basis_image(&self, i: usize) -> u64 {
        self.basis[i]
    }

    /// Image of `x`, or `None` when its denominator vanishes mod p.
    pub fn reduce(&self, x: &FieldK) -> Option<u64> {
        let p = self.p;
        let den = big_mod(x.denominator(), p);
        if den == 0 {
            return None;
        }
        let mut acc = 0u64;
        for (i, n) in x.numerators().iter().enumerate() {
            if n.is_zero() {
                continue;
            }
            acc = (acc + mulmod(big_mod(n, p), self.basis[i], p)) % p;
        }
        Some(mulmod(acc, inv_mod(den, p), p))
    }
}

/// A split prime together with one choice of `w` and `a` modulo it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitPrime {
    pub p: u64,
    pub omega: u64,
    pub alpha: u64,
}

impl SplitPrime {
    /// The six embeddings of K at this prime.
    pub fn embeddings(&self) -> [Embedding; 6] {
        let p = self.p;
        let w = self.omega;
        let w2 = mulmod(w, w, p);
        let a = self.alpha;
        let alphas = [a, mulmod(a, w, p), mulmod(a, w2, p)];
        std::array::from_fn(|i| Embedding::new(p, if i < 3 { w } else { w2 }, alphas[i % 3]))
    }

    /// The default embedding.
    pub fn embedding(&self) -> Embedding {
        Embedding::new(self.p, self.omega, self.alpha)
    }
}

/// Product modulo `p`; all primes in use are below 2^31.
pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

pub fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

pub fn big_mod(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Tries to build the split-prime data for `p`.
fn split_data(p: u64) -> Option<SplitPrime> {
    if p % 3 != 1 || p % 9 == 1 || !is_prime(p) {
        return None;
    }
    let m = (p - 1) / 3;
    if powmod(2, m, p) != 1 {
        return None;
    }
    // 3 is invertible mod m because 9 does not divide p - 1.
    let e = inverse_mod_u64(3, m)?;
    let alpha = powmod(2, e, p);
    debug_assert_eq!(powmod(alpha, 3, p), 2);
    let omega = (2..p).map(|g| powmod(g, m, p)).find(|&w| w != 1)?;
    debug_assert_eq!((mulmod(omega, omega, p) + omega + 1) % p, 0);
    Some(SplitPrime { p, omega, alpha })
}

fn inverse_mod_u64(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = ext_gcd(a as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

static PRIMES: Mutex<Vec<SplitPrime>> = Mutex::new(Vec::new());

/// The `i`-th split prime, counting down from `2^31`.
pub fn split_prime(i: usize) -> SplitPrime {
    let mut cache = PRIMES.lock().unwrap_or_else(|e| e.into_inner());
    let mut next = cache.last().map(|s| s.p - 1).unwrap_or((1 << 31) - 1);
    while cache.len() <= i {
        if let Some(sp) = split_data(next) {
            cache.push(sp);
        }
        next -= 1;
    }
    cache[i]
}

/// Rank of a dense matrix over `F_p`; the rows are consumed.
pub fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][col], p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &mut head[rank];
        for v in prow[col..].iter_mut() {
            *v = mulmod(*v, inv, p);
        }
        for row in tail.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for (x, &y) in row[col..].iter_mut().zip(&prow[col..]) {
                if y != 0 {
                    *x = (*x + nf * y) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Incremental row-echelon form over `F_p`, used to test membership in a
/// growing span.
#[derive(Clone, Debug)]
pub struct EchelonMod {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl EchelonMod {
    pub fn new(p: u64) -> Self {
        EchelonMod { p, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; inserts it and returns `true`
    /// when it is independent.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let p = self.p;
        for (col, row) in &self.rows {
            let f = v[*col];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for (x, &y) in v.iter_mut().zip(row.iter()).skip(*col) {
                if y != 0 {
                    *x = (*x + nf * y) % p;
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => false,
            Some(col) => {
                let inv = inv_mod(v[col], p);
                for x in v.iter_mut() {
                    *x = mulmod(*x, inv, p);
                }
                self.rows.push((col, v));
                true
            }
        }
    }
}

/// Polynomials over `F_p` as ascending coefficient vectors.
pub mod fp_poly {
    use super::{inv_mod, mulmod};

    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + mulmod(x, y, p)) % p;
            }
        }
        trim(&mut r);
        r
    }

    /// Remainder of `a` modulo the nonzero polynomial `m`.
    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let inv = inv_mod(m[dm], p);
        while r.len() > dm {
            let lead = mulmod(*r.last().unwrap(), inv, p);
            let shift = r.len() - 1 - dm;
            for (j, &c) in m.iter().enumerate() {
                let t = mulmod(lead, c, p);
                r[shift + j] = (r[shift + j] + p - t) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        if let Some(&l) = a.last() {
            let inv = inv_mod(l, p);
            for c in a.iter_mut() {
                *c = mulmod(*c, inv, p);
            }
        }
        a
    }

    pub fn derivative(a: &[u64], p: u64) -> Vec<u64> {
        let mut r: Vec<u64> = a.iter().enumerate().skip(1).map(|(i, &c)| mulmod(c, i as u64 % p, p)).collect();
        trim(&mut r);
        r
    }

    /// `base^e mod m`.
    pub fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &b, p), m, p);
            }
            b = rem(&mul(&b, &b, p), m, p);
            e >>= 1;
        }
        acc
    }

    /// Distinct roots in `F_p` of a nonzero polynomial, ascending.
    pub fn roots(f: &[u64], p: u64) -> Vec<u64> {
        let mut f = f.to_vec();
        trim(&mut f);
        if f.len() <= 1 {
            return Vec::new();
        }
        // Product of the distinct linear factors: gcd(f, t^p - t).
        let tp = powmod(&[0, 1], p, &f, p);
        let mut tp_minus_t = tp;
        if tp_minus_t.len() < 2 {
            tp_minus_t.resize(2, 0);
        }
        tp_minus_t[1] = (tp_minus_t[1] + p - 1) % p;
        trim(&mut tp_minus_t);
        let g = gcd(&f, &tp_minus_t, p);
        let mut out = Vec::new();
        split(&g, p, 1, &mut out);
        out.sort_unstable();
        out
    }

    fn split(g: &[u64], p: u64, mut shift: u64, out: &mut Vec<u64>) {
        let deg = g.len().saturating_sub(1);
        if deg == 0 {
            return;
        }
        if deg == 1 {
            // g = t + c (monic)
            out.push((p - g[0] % p) % p);
            return;
        }
        loop {
            let h = powmod(&[shift % p, 1], (p - 1) / 2, g, p);
            let mut hm1 = h;
            if hm1.is_empty() {
                hm1.push(0);
            }
            hm1[0] = (hm1[0] + p - 1) % p;
            trim(&mut hm1);
            let d = gcd(g, &hm1, p);
            let dd = d.len().saturating_sub(1);
            shift += 1;
            if dd > 0 && dd < deg {
                let (q, _) = divrem(g, &d, p);
                split(&d, p, shift, out);
                split(&q, p, shift, out);
                return;
            }
        }
    }

    pub fn divrem(a: &[u64], m: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let inv = inv_mod(m[dm], p);
        if r.len() <= dm {
            return (Vec::new(), r);
        }
        let mut q = vec![0u64; r.len() - dm];
        while r.len() > dm {
            let lead = mulmod(*r.last().unwrap(), inv, p);
            let shift = r.len() - 1 - dm;
            q[shift] = lead;
            for (j, &c) in m.iter().enumerate() {
                let t = mulmod(lead, c, p);
                r[shift + j] = (r[shift + j] + p - t) % p;
            }
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }
}
