//! Integral LLL reduction and nearest-plane rounding for small lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Rounds `n / d` (with `d > 0`) to the nearest integer.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (n * &two + d).div_floor(&(d * &two))
}

/// LLL-reduces a basis of linearly independent integer vectors with
/// parameter 3/4, using exact integer arithmetic throughout.
pub fn lll(basis: &mut [Vec<BigInt>]) {
    let n = basis.len();
    if n < 2 {
        return;
    }
    // d[i] is the Gram determinant of the first i vectors (d[0] = 1);
    // lam[i][j] = d[j+1] * mu[i][j] for j < i.
    let mut d = vec![BigInt::zero(); n + 1];
    let mut lam = vec![vec![BigInt::zero(); n]; n];
    d[0] = BigInt::one();
    d[1] = dot(&basis[0], &basis[0]);
    let mut k = 1;
    let mut kmax = 0;
    while k < n {
        if k > kmax {
            kmax = k;
            for j in 0..=k {
                let mut u = dot(&basis[k], &basis[j]);
                for i in 0..j {
                    u = (&d[i + 1] * &u - &lam[k][i] * &lam[j][i]) / &d[i];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    assert!(!u.is_zero(), "LLL input must be linearly independent");
                    d[k + 1] = u;
                }
            }
        }
        reduce(basis, &d, &mut lam, k, k - 1);
        let lhs = BigInt::from(4) * &d[k + 1] * &d[k - 1];
        let rhs = BigInt::from(3) * &d[k] * &d[k] - BigInt::from(4) * &lam[k][k - 1] * &lam[k][k - 1];
        if lhs < rhs {
            swap(basis, &mut d, &mut lam, k, kmax);
            k = k.max(2) - 1;
        } else {
            for l in (0..k.saturating_sub(1)).rev() {
                reduce(basis, &d, &mut lam, k, l);
            }
            k += 1;
        }
    }
}

fn reduce(basis: &mut [Vec<BigInt>], d: &[BigInt], lam: &mut [Vec<BigInt>], k: usize, l: usize) {
    let two_lam: BigInt = &lam[k][l] * 2;
    if two_lam.abs() > d[l + 1] {
        let q = round_div(&lam[k][l], &d[l + 1]);
        let bl = basis[l].clone();
        for (x, y) in basis[k].iter_mut().zip(&bl) {
            *x -= &q * y;
        }
        lam[k][l] -= &q * &d[l + 1];
        for i in 0..l {
            let t = &q * &lam[l][i];
            lam[k][i] -= t;
        }
    }
}

fn swap(basis: &mut [Vec<BigInt>], d: &mut [BigInt], lam: &mut [Vec<BigInt>], k: usize, kmax: usize) {
    basis.swap(k, k - 1);
    for j in 0..k.saturating_sub(1) {
        let t = lam[k][j].clone();
        lam[k][j] = lam[k - 1][j].clone();
        lam[k - 1][j] = t;
    }
    let l = lam[k][k - 1].clone();
    let b = (&d[k - 1] * &d[k + 1] + &l * &l) / &d[k];
    for i in (k + 1)..=kmax {
        let t = lam[i][k].clone();
        lam[i][k] = (&d[k + 1] * &lam[i][k - 1] - &l * &t) / &d[k];
        lam[i][k - 1] = (&b * &t + &l * &lam[i][k]) / &d[k + 1];
    }
    d[k] = b;
}

/// Babai nearest-plane: returns the lattice vector found for `target`
/// given an LLL-reduced basis.
pub fn nearest_plane(basis: &[Vec<BigInt>], target: &[BigInt]) -> Vec<BigInt> {
    let n = basis.len();
    let to_q = |v: &[BigInt]| -> Vec<BigRational> { v.iter().map(|x| BigRational::from_integer(x.clone())).collect() };
    let qdot = |a: &[BigRational], b: &[BigRational]| -> BigRational {
        a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
    };
    let mut gs: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = to_q(&basis[i]);
        for g in gs.iter() {
            let mu = qdot(&v, g) / qdot(g, g);
            for (x, y) in v.iter_mut().zip(g) {
                *x -= &mu * y;
            }
        }
        gs.push(v);
    }
    let mut t = to_q(target);
    let mut out = vec![BigInt::zero(); target.len()];
    for i in (0..n).rev() {
        let c = qdot(&t, &gs[i]) / qdot(&gs[i], &gs[i]);
        let c = c.round().to_integer();
        if c.is_zero() {
            continue;
        }
        for (j, b) in basis[i].iter().enumerate() {
            t[j] -= BigRational::from_integer(&c * b);
            out[j] += &c * b;
        }
    }
    out
}
