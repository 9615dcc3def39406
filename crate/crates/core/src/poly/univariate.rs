//! Univariate polynomials over K and root extraction in K.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::FieldK;
use crate::lattice;
use crate::modp::{fp_poly, split_prime};

/// A polynomial `c0 + c1 t + ...` with coefficients in K; trailing zeros
/// are trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<FieldK>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<FieldK>) -> Self {
        while coeffs.last().is_some_and(FieldK::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: FieldK) -> Self {
        Self::new(vec![c])
    }

    /// `t - r`.
    pub fn linear(r: &FieldK) -> Self {
        Self::new(vec![-r, FieldK::one()])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| FieldK::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[FieldK] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldK> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &FieldK) -> FieldK {
        let mut acc = FieldK::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * t) + c;
        }
        acc
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = FieldK::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(&FieldK::from_int(-1)))
    }

    pub fn scale(&self, c: &FieldK) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut r = vec![FieldK::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                r[i + j] += &(a * b);
            }
        }
        UniPoly::new(r)
    }

    /// Euclidean division by a nonzero divisor.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.leading().unwrap().inv().expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut q = vec![FieldK::zero(); r.len() - dd];
        for shift in (0..r.len() - dd).rev() {
            let c = &r[shift + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                r[shift + j] -= &t;
            }
            q[shift] = c;
        }
        r.truncate(dd);
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * &FieldK::from_int(i as i64)).collect(),
        )
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero")),
        }
    }

    /// Squarefree decomposition `self = c * prod_i s_i^i` (Yun); returns the
    /// pairs `(s_i, i)` with nonconstant `s_i`, each monic.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let mut a = gcd_univariate(&f, &fp);
        let mut b = f.divrem(&a).0;
        let mut c = fp.divrem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            a = gcd_univariate(&b, &d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.divrem(&a).0;
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// The monic squarefree part.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return UniPoly::constant(FieldK::one());
        }
        let g = gcd_univariate(self, &self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Distinct roots lying in K, sorted by coordinates.
    pub fn roots_in_k(&self) -> Vec<FieldK> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let u = self.squarefree_part();
        let mut roots = find_roots(&u);
        roots.sort_by(|a, b| a.cmp_coords(b));
        roots.dedup();
        roots
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})*t^{i}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Monic gcd over K by the Euclidean algorithm; `gcd(0, 0) = 0`.
pub fn gcd_univariate(u: &UniPoly, v: &UniPoly) -> UniPoly {
    let mut a = u.clone();
    let mut b = v.clone();
    while !b.is_zero() {
        let r = a.divrem(&b).1;
        a = b;
        b = r;
    }
    a.monic()
}

/// Bound on |sigma(c)| over all complex embeddings of an element with
/// integer coordinates: |c0| + |c1| + 2(|c2| + ... + |c5|).
pub(crate) fn embedding_bound(nums: &[BigInt; 6]) -> BigInt {
    nums.iter().enumerate().map(|(i, n)| if i < 2 { n.abs() } else { n.abs() * 2 }).sum()
}

/// Roots in K of a monic squarefree polynomial.
fn find_roots(u: &UniPoly) -> Vec<FieldK> {
    let deg = u.degree().unwrap();
    if deg == 1 {
        return vec![-&u.coeffs[0]];
    }
    // Scale to v(s) = c^n u(s / c) with coefficients in Z[w, a].
    let mut c = BigInt::one();
    for x in &u.coeffs {
        c = c.lcm(x.denominator());
    }
    let cf = FieldK::from_bigint(c.clone());
    let mut v = Vec::with_capacity(deg + 1);
    let mut cpow = FieldK::one();
    for i in (0..=deg).rev() {
        v.push(&u.coeffs[i] * &cpow);
        cpow = &cpow * &cf;
    }
    v.reverse();
    debug_assert!(v.iter().all(|x| x.denominator().is_one()));
    let v_nums: Vec<[BigInt; 6]> = v.iter().map(|x| x.numerators().clone()).collect();

    // Cauchy bound on the roots of v in every complex embedding, then on the
    // coordinates of 3s (algebraic integers of K lie in (1/3) Z[w, a]).
    let max_coeff = v_nums[..deg].iter().map(embedding_bound).max().unwrap_or_default();
    let root_bound: BigInt = max_coeff + 1;
    // |coords(s)| <= 2 max|sigma(s)| and ||3s|| <= sqrt(6) * 3 * 2 * root_bound.
    let y_bound: BigInt = &root_bound * BigInt::from(15);
    // Need p^(k/6) > 2 sqrt(6) * 9 * y_bound; use 45 * y_bound.
    let target_bits = 6 * ((&y_bound * BigInt::from(45)).bits() + 1);

    for prime_idx in 0.. {
        let sp = split_prime(prime_idx);
        let e = sp.embedding();
        let p = e.p;
        let vp: Vec<u64> = v.iter().map(|x| e.reduce(x).unwrap()).collect();
        let dvp = fp_poly::derivative(&vp, p);
        if fp_poly::gcd(&vp, &dvp, p).len() != 1 {
            continue;
        }
        let residues = fp_poly::roots(&vp, p);
        if residues.is_empty() {
            return Vec::new();
        }
        let mut found = Vec::new();
        for r in residues {
            if let Some(root) = lift_and_recognise(u, &v_nums, &sp, r, target_bits, &c) {
                found.push(root);
            }
        }
        return found;
    }
    unreachable!()
}

/// Newton iteration modulo `m` for a root of `f` starting at `x`.
fn newton_lift(f: impl Fn(&BigInt) -> (BigInt, BigInt), mut x: BigInt, m: &BigInt) -> BigInt {
    loop {
        let (val, der) = f(&x);
        let val = val.mod_floor(m);
        if val.is_zero() {
            return x;
        }
        let inv = mod_inverse(&der.mod_floor(m), m).expect("simple root");
        x = (x - val * inv).mod_floor(m);
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(m);
    if !g.gcd.is_one() {
        return None;
    }
    Some(g.x.mod_floor(m))
}

fn lift_and_recognise(
    u: &UniPoly,
    v: &[[BigInt; 6]],
    sp: &crate::modp::SplitPrime,
    r0: u64,
    target_bits: u64,
    c: &BigInt,
) -> Option<FieldK> {
    let p = BigInt::from(sp.p);
    let mut k: u64 = 2;
    loop {
        let m = p.pow(k as u32);
        let w = newton_lift(
            |x| (x * x + x + 1, x * 2 + 1),
            BigInt::from(sp.omega),
            &m,
        );
        let a = newton_lift(|x| (x * x * x - 2, x * x * 3), BigInt::from(sp.alpha), &m);
        let basis = [
            BigInt::one(),
            w.clone(),
            a.clone(),
            (&w * &a).mod_floor(&m),
            (&a * &a).mod_floor(&m),
            (&w * &a * &a).mod_floor(&m),
        ];
        let vm: Vec<BigInt> = v
            .iter()
            .map(|nums| nums.iter().zip(&basis).map(|(n, b)| n * b).sum::<BigInt>().mod_floor(&m))
            .collect();
        let eval = |x: &BigInt| {
            let mut val = BigInt::zero();
            let mut der = BigInt::zero();
            for coef in vm.iter().rev() {
                der = (&der * x + &val).mod_floor(&m);
                val = (&val * x + coef).mod_floor(&m);
            }
            (val, der)
        };
        let r = newton_lift(eval, BigInt::from(r0), &m);

        // Short y in Z^6 with sum y_j basis_j = 3 r (mod m).
        let mut lat: Vec<Vec<BigInt>> = Vec::with_capacity(6);
        let mut first = vec![BigInt::zero(); 6];
        first[0] = m.clone();
        lat.push(first);
        for j in 1..6 {
            let mut row = vec![BigInt::zero(); 6];
            row[0] = (-&basis[j]).mod_floor(&m);
            row[j] = BigInt::one();
            lat.push(row);
        }
        lattice::lll(&mut lat);
        let mut target = vec![BigInt::zero(); 6];
        target[0] = (&r * BigInt::from(3)).mod_floor(&m);
        let close = lattice::nearest_plane(&lat, &target);
        let y: Vec<BigInt> = target.iter().zip(&close).map(|(t, l)| t - l).collect();
        let denom = c * 3;
        let cand = FieldK::from_parts(std::array::from_fn(|i| y[i].clone()), denom).ok()?;
        if u.eval(&cand).is_zero() {
            return Some(cand);
        }
        let bits = m.bits();
        if bits >= target_bits {
            return None;
        }
        k = (k * 2).min(target_bits.div_ceil(30).max(k + 1));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> FieldK {
        s.parse().unwrap()
    }

    #[test]
    fn gcd_examples() {
        let a = UniPoly::from_ints(&[0, 0, 1, 1]);
        let b = UniPoly::from_ints(&[0, 2, 1]);
        assert_eq!(gcd_univariate(&a, &b), UniPoly::from_ints(&[0, 1]));
        let cube = UniPoly::from_ints(&[-2, 0, 0, 1]);
        let lin = UniPoly::linear(&FieldK::alpha());
        assert_eq!(gcd_univariate(&cube, &lin), lin);
        let u = UniPoly::from_ints(&[4, 2]);
        assert_eq!(gcd_univariate(&u, &UniPoly::zero()), UniPoly::from_ints(&[2, 1]));
    }

    #[test]
    fn squarefree_decomposition_reads_multiplicities() {
        let l1 = UniPoly::linear(&k("1"));
        let l2 = UniPoly::linear(&k("a"));
        let f = l1.mul(&l1).mul(&l1).mul(&l2);
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(l2.clone(), 1), (l1.clone(), 3)]);
    }

    #[test]
    fn roots_of_cube_polynomials() {
        let cube = UniPoly::from_ints(&[-2, 0, 0, 1]);
        let roots = cube.roots_in_k();
        assert_eq!(roots.len(), 3);
        for r in &roots {
            assert!(cube.eval(r).is_zero());
        }
        let sq = UniPoly::from_ints(&[-2, 0, 1]);
        assert!(sq.roots_in_k().is_empty());
    }

    #[test]
    fn roots_with_denominators() {
        let rs = [k("3/7 - 2*w*a + 5/2*a^2"), k("-11/3*w"), k("1/6 + a")];
        let mut f = UniPoly::constant(k("2/5"));
        for r in &rs {
            f = f.mul(&UniPoly::linear(r));
        }
        f = f.mul(&UniPoly::from_ints(&[1, 0, 1]));
        let mut got = f.roots_in_k();
        let mut want = rs.to_vec();
        got.sort_by(|a, b| a.cmp_coords(b));
        want.sort_by(|a, b| a.cmp_coords(b));
        assert_eq!(got, want);
    }
}
