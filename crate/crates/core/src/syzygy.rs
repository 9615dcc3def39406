//! Jacobian syzygies: the graded pieces of
//! `AR(f) = {(a, b, c) : a f_x + b f_y + c f_z = 0}`, their minimal
//! generator degrees, the Hilbert function of the Jacobian ring and the
//! resulting free / nearly free / m-syzygy verdicts.
//!
//! Dimensions are obtained by a two-sided bound. Reducing the multiplication
//! map `S_k^3 -> S_(k+d-1)` modulo a split prime can only lower its rank, so
//! it bounds `dim AR(f)_k` from above; the span of the multiples of exactly
//! verified generators bounds it from below. When the bounds meet the
//! degree is settled without exact elimination. Otherwise the kernel is
//! computed exactly over K and the missing generators are read off from it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldK;
use crate::linalg::{self, Echelon};
use crate::modp::{rank_mod, split_prime, Embedding};
use crate::poly::{forms_dim, monomial_index, monomials_of_degree, HomPoly, Monomial};

/// A syzygy `(a, b, c)` of the partial derivatives.
pub type Triple = [HomPoly; 3];

/// Basis of `AR(f)_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedKernelBasis {
    pub degree: u32,
    pub basis: Vec<Triple>,
}

/// `a f_x + b f_y + c f_z`.
pub fn apply_syzygy(f: &HomPoly, t: &Triple) -> HomPoly {
    let g = f.gradient();
    let mut acc = HomPoly::zero(0);
    for i in 0..3 {
        acc = acc.checked_add(&(&t[i] * &g[i])).expect("syzygy components share a degree");
    }
    acc
}

pub fn is_syzygy(f: &HomPoly, t: &Triple) -> bool {
    apply_syzygy(f, t).is_zero()
}

/// The Koszul syzygies `(f_y, -f_x, 0)`, `(f_z, 0, -f_x)`, `(0, f_z, -f_y)`.
pub fn koszul_triples(f: &HomPoly) -> [Triple; 3] {
    let [fx, fy, fz] = f.gradient();
    let zero = HomPoly::zero(fx.degree());
    [[fy.clone(), -&fx, zero.clone()], [fz.clone(), zero.clone(), -&fx], [zero, fz, -&fy]]
}

fn triple_to_vec(t: &Triple, k: u32) -> Vec<FieldK> {
    let s = forms_dim(k as i64);
    let mut v = vec![FieldK::zero(); 3 * s];
    for (i, c) in t.iter().enumerate() {
        for (m, x) in c.terms() {
            v[i * s + monomial_index(m)] = x.clone();
        }
    }
    v
}

fn vec_to_triple(v: &[FieldK], k: u32) -> Triple {
    let s = forms_dim(k as i64);
    std::array::from_fn(|i| HomPoly::from_dense(k, &v[i * s..(i + 1) * s]))
}

/// Exact matrix of `(a, b, c) -> a f_x + b f_y + c f_z` on `S_k^3`, one row
/// per monomial of degree `k + d - 1`.
fn multiplication_matrix(f: &HomPoly, k: u32) -> linalg::Matrix {
    let g = f.gradient();
    let e = g[0].degree();
    let monos = monomials_of_degree(k);
    let s = monos.len();
    let mut m = vec![vec![FieldK::zero(); 3 * s]; forms_dim((k + e) as i64)];
    for (i, gi) in g.iter().enumerate() {
        for (j, mono) in monos.iter().enumerate() {
            for (t, c) in gi.terms() {
                m[monomial_index(&mono.mul(t))][i * s + j] = c.clone();
            }
        }
    }
    m
}

/// Exact basis of `AR(f)_k`, one vector per free column of the reduced
/// row-echelon form of the multiplication matrix.
pub fn ar_dimension(f: &HomPoly, k: u32) -> GradedKernelBasis {
    let s = forms_dim(k as i64);
    let ker = linalg::kernel(multiplication_matrix(f, k), 3 * s);
    GradedKernelBasis { degree: k, basis: ker.iter().map(|v| vec_to_triple(v, k)).collect() }
}

/// Sparse image of a polynomial under an embedding.
type ModPoly = Vec<(Monomial, u64)>;

fn reduce_poly(p: &HomPoly, e: &Embedding) -> Option<ModPoly> {
    p.terms().map(|(m, c)| e.reduce(c).map(|r| (*m, r))).filter(|t| !matches!(t, Some((_, 0)))).collect()
}

/// Incremental computation of `dim AR(f)_k` and minimal generators,
/// degree by degree.
struct Engine {
    f: HomPoly,
    emb: Embedding,
    grad_mod: [ModPoly; 3],
    /// `dim AR(f)_k` for `k = 0 .. dims.len()`.
    dims: Vec<usize>,
    generators: Vec<(u32, Triple)>,
    generators_mod: Vec<(u32, [ModPoly; 3])>,
}

impl Engine {
    fn new(f: &HomPoly) -> Self {
        let grad = f.gradient();
        for i in 0.. {
            let emb = split_prime(i).embedding();
            let reduced: Option<Vec<ModPoly>> = grad.iter().map(|g| reduce_poly(g, &emb)).collect();
            if let Some(r) = reduced {
                let grad_mod = [r[0].clone(), r[1].clone(), r[2].clone()];
                return Engine { f: f.clone(), emb, grad_mod, dims: Vec::new(), generators: Vec::new(), generators_mod: Vec::new() };
            }
        }
        unreachable!()
    }

    /// Rank of the multiplication map modulo the prime.
    fn rank_upper(&self, k: u32) -> usize {
        let monos = monomials_of_degree(k);
        let e = self.f.degree().saturating_sub(1);
        let width = forms_dim((k + e) as i64);
        let rows: Vec<Vec<u64>> = self
            .grad_mod
            .iter()
            .flat_map(|g| {
                monos.iter().map(move |mono| {
                    let mut v = vec![0u64; width];
                    for (t, c) in g {
                        v[monomial_index(&mono.mul(t))] = *c;
                    }
                    v
                })
            })
            .collect();
        rank_mod(rows, self.emb.p)
    }

    /// Multiples in degree `k` of the generators found so far, reduced mod p.
    fn multiples_mod(&self, k: u32) -> Vec<Vec<u64>> {
        let s = forms_dim(k as i64);
        let mut out = Vec::new();
        for (dg, g) in &self.generators_mod {
            if *dg > k {
                continue;
            }
            for mono in monomials_of_degree(k - dg) {
                let mut v = vec![0u64; 3 * s];
                for (i, c) in g.iter().enumerate() {
                    for (t, x) in c {
                        v[i * s + monomial_index(&mono.mul(t))] = *x;
                    }
                }
                out.push(v);
            }
        }
        out
    }

    fn multiples_exact(&self, k: u32) -> Vec<Vec<FieldK>> {
        let mut out = Vec::new();
        for (dg, g) in &self.generators {
            if *dg > k {
                continue;
            }
            for mono in monomials_of_degree(k - dg) {
                let m = HomPoly::monomial(mono, FieldK::one());
                let t: Triple = std::array::from_fn(|i| &m * &g[i]);
                out.push(triple_to_vec(&t, k));
            }
        }
        out
    }

    fn add_generator(&mut self, k: u32, t: Triple) -> Result<()> {
        if !is_syzygy(&self.f, &t) {
            return Err(Error::Inconsistent(format!("kernel vector in degree {k} is not a syzygy")));
        }
        match t.iter().map(|c| reduce_poly(c, &self.emb)).collect::<Option<Vec<_>>>() {
            Some(r) => self.generators_mod.push((k, [r[0].clone(), r[1].clone(), r[2].clone()])),
            // A denominator divisible by p: the lower bound falls back to exact elimination.
            None => self.generators_mod.push((k, [Vec::new(), Vec::new(), Vec::new()])),
        }
        self.generators.push((k, t));
        Ok(())
    }

    /// Settles degree `dims.len()`.
    fn step(&mut self) -> Result<()> {
        let k = self.dims.len() as u32;
        let s = forms_dim(k as i64);
        let upper = 3 * s - self.rank_upper(k);
        let lower = if upper == 0 { 0 } else { rank_mod(self.multiples_mod(k), self.emb.p) };
        if lower == upper {
            self.dims.push(upper);
            return Ok(());
        }
        let mut span = Echelon::new(3 * s);
        for v in self.multiples_exact(k) {
            span.insert(v);
        }
        let ker = linalg::kernel(multiplication_matrix(&self.f, k), 3 * s);
        let dim = ker.len();
        for v in ker {
            if span.rank() == dim {
                break;
            }
            if span.insert(v.clone()) {
                self.add_generator(k, vec_to_triple(&v, k))?;
            }
        }
        self.dims.push(dim);
        Ok(())
    }

    fn dim(&mut self, k: u32) -> Result<usize> {
        while self.dims.len() <= k as usize {
            self.step()?;
        }
        Ok(self.dims[k as usize])
    }

    /// `dim (S / J_f)_k = dim S_k - dim (J_f)_k`.
    fn hilbert(&mut self, k: u32) -> Result<usize> {
        let e = self.f.degree().saturating_sub(1);
        if k < e {
            return Ok(forms_dim(k as i64));
        }
        let j = k - e;
        let jk = 3 * forms_dim(j as i64) - self.dim(j)?;
        Ok(forms_dim(k as i64) - jk)
    }
}

/// `dim (S / J_f)_k`.
pub fn jacobian_hilbert(f: &HomPoly, k: u32) -> Result<usize> {
    Engine::new(f).hilbert(k)
}

/// Smallest `k` with `AR(f)_k != 0`.
pub fn mdr(f: &HomPoly) -> Result<u32> {
    let mut e = Engine::new(f);
    for k in 0.. {
        if e.dim(k)? > 0 {
            return Ok(k);
        }
    }
    unreachable!()
}

/// Stabilised Hilbert function values starting at `k = 3(d - 2)`.
fn tjurina_tail(e: &mut Engine) -> Result<(usize, Vec<usize>)> {
    let d = e.f.degree();
    let start = (3 * d).saturating_sub(6);
    let mut tail = vec![e.hilbert(start)?];
    for k in start + 1..=start + d {
        let v = e.hilbert(k)?;
        let same = *tail.last().unwrap() == v;
        tail.push(v);
        if same {
            return Ok((v, tail));
        }
    }
    Err(Error::NonReduced { cap: start + d })
}

/// Total Tjurina number `tau(C)`: the eventual value of the Hilbert
/// function of the Jacobian ring.
pub fn total_tjurina(f: &HomPoly) -> Result<usize> {
    Ok(tjurina_tail(&mut Engine::new(f))?.0)
}

/// Generators are searched up to this degree. Minimal generators of
/// `AR(f)` for a reduced curve have degree at most `2d - 2`; the extra
/// degree confirms that the found generators span.
pub fn generator_cap(d: u32) -> u32 {
    (2 * d).saturating_sub(1).max(1)
}

fn collect_generators(e: &mut Engine) -> Result<()> {
    let cap = generator_cap(e.f.degree());
    e.dim(cap)?;
    if e.generators.iter().any(|(k, _)| *k == cap) {
        let partial = e.generators.iter().map(|(k, _)| *k).collect();
        return Err(Error::GeneratorCapExceeded { cap, partial });
    }
    Ok(())
}

/// Degrees of a minimal generating set of `AR(f)`, ascending.
pub fn generator_degrees(f: &HomPoly) -> Result<Vec<u32>> {
    let mut e = Engine::new(f);
    collect_generators(&mut e)?;
    Ok(e.generators.iter().map(|(k, _)| *k).collect())
}

/// Syzygy invariants of a curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyProfile {
    pub d: u32,
    pub mdr: u32,
    pub generator_degrees: Vec<u32>,
    pub generators: Vec<Triple>,
    pub tjurina: usize,
    pub hilbert_tail: Vec<usize>,
}

pub fn profile(f: &HomPoly) -> Result<SyzygyProfile> {
    let mut e = Engine::new(f);
    collect_generators(&mut e)?;
    let (tjurina, hilbert_tail) = tjurina_tail(&mut e)?;
    let mdr = e.dims.iter().position(|&a| a > 0).expect("Koszul syzygies exist") as u32;
    Ok(SyzygyProfile {
        d: f.degree(),
        mdr,
        generator_degrees: e.generators.iter().map(|(k, _)| *k).collect(),
        generators: e.generators.into_iter().map(|(_, t)| t).collect(),
        tjurina,
        hilbert_tail,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Free,
    NearlyFree,
    MSyzygy,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Free => "free",
            Verdict::NearlyFree => "nearly free",
            Verdict::MSyzygy => "m-syzygy",
        })
    }
}

/// Outcome of [`certify`]. Exponents are `(r, d - 1 - r)` for free curves,
/// `(r, d - r)` for nearly free curves and the generator degrees otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessCertificate {
    pub degree: u32,
    pub mdr: u32,
    pub tjurina: usize,
    pub verdict: Verdict,
    pub exponents: Vec<u32>,
    pub generator_degrees: Vec<u32>,
    pub hilbert_tail: Vec<usize>,
}

impl FreenessCertificate {
    /// `r^2 - r(d - 1) + (d - 1)^2`.
    pub fn criterion_lhs(&self) -> i64 {
        criterion_lhs(self.degree, self.mdr)
    }
}

pub fn criterion_lhs(d: u32, r: u32) -> i64 {
    let (d1, r) = (d as i64 - 1, r as i64);
    r * r - r * d1 + d1 * d1
}

/// Free / nearly free / m-syzygy verdict from `d`, `mdr` and `tau`, cross
/// checked against the generator degrees.
pub fn certify(f: &HomPoly) -> Result<FreenessCertificate> {
    certify_profile(&profile(f)?)
}

pub fn certify_profile(p: &SyzygyProfile) -> Result<FreenessCertificate> {
    let (d, r, tau) = (p.d, p.mdr, p.tjurina as i64);
    let lhs = criterion_lhs(d, r);
    let gens = &p.generator_degrees;
    let (verdict, exponents) = if 2 * r + 1 <= d && lhs == tau {
        (Verdict::Free, vec![r, d - 1 - r])
    } else if 2 * r <= d && lhs == tau + 1 {
        (Verdict::NearlyFree, vec![r, d - r])
    } else {
        (Verdict::MSyzygy, gens.clone())
    };
    let consistent = match verdict {
        Verdict::Free => gens.len() == 2 && gens[0] + gens[1] + 1 == d,
        Verdict::NearlyFree => gens.len() == 3 && gens[1] == gens[2] && gens[0] + gens[1] == d,
        Verdict::MSyzygy => gens.first() == Some(&r),
    };
    if !consistent {
        return Err(Error::Inconsistent(format!("{verdict} verdict disagrees with generator degrees {gens:?}")));
    }
    Ok(FreenessCertificate {
        degree: d,
        mdr: r,
        tjurina: p.tjurina,
        verdict,
        exponents,
        generator_degrees: gens.clone(),
        hilbert_tail: p.hilbert_tail.clone(),
    })
}

/// Closed forms for a cubic with `k` hyperosculating conics whose total
/// Tjurina number is `2k(k - 1) + 11k`: that value and the discriminant
/// `-4k^2 + 12k - 12` of the quadratic in `r` that freeness would require.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeverFreeScan {
    pub predicted_tjurina: i64,
    pub discriminant: i64,
    pub free_possible: bool,
}

pub fn never_free_scan(k: i64) -> NeverFreeScan {
    let predicted_tjurina = 2 * k * (k - 1) + 11 * k;
    let discriminant = -4 * k * k + 12 * k - 12;
    let d1 = 2 * k + 2;
    let free_possible = discriminant >= 0 && {
        let s = (discriminant as f64).sqrt().round() as i64;
        s * s == discriminant
            && [d1 - s, d1 + s].iter().any(|&twice_r| twice_r % 2 == 0 && twice_r >= 0 && twice_r <= d1)
    };
    NeverFreeScan { predicted_tjurina, discriminant, free_possible }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> HomPoly {
        s.parse().unwrap()
    }

    const E: &str = "x^3 + y^3 - x*y*z";
    const F: &str = "x^3 + y^3 + z^3";
    const Q1: &str = "21*(x^2 + y^2) - 22*x*y - 6*(x + y)*z + z^2";

    #[test]
    fn koszul_triples_are_syzygies() {
        let f = p(E);
        for t in koszul_triples(&f) {
            assert!(is_syzygy(&f, &t));
        }
    }

    #[test]
    fn small_kernels() {
        let f = p(F);
        assert_eq!(ar_dimension(&f, 1).basis.len(), 0);
        let b = ar_dimension(&f, 2);
        assert_eq!(b.basis.len(), 3);
        assert!(b.basis.iter().all(|t| is_syzygy(&f, t)));
        assert_eq!(mdr(&f).unwrap(), 2);
    }

    #[test]
    fn hilbert_functions() {
        let f = p(F);
        assert_eq!((0..6).map(|k| jacobian_hilbert(&f, k).unwrap()).collect::<Vec<_>>(), vec![1, 3, 3, 1, 0, 0]);
        assert_eq!(total_tjurina(&f).unwrap(), 0);
        assert_eq!(total_tjurina(&p(E)).unwrap(), 1);
    }

    #[test]
    fn smooth_cubic_is_m_syzygy() {
        let c = certify(&p(F)).unwrap();
        assert_eq!(c.verdict, Verdict::MSyzygy);
        assert_eq!(c.generator_degrees, vec![2, 2, 2]);
        assert_eq!(c.tjurina, 0);
    }

    #[test]
    fn nodal_cubic_with_its_conic_is_free() {
        let f = &p(E) * &p(Q1);
        let c = certify(&f).unwrap();
        assert_eq!(c.verdict, Verdict::Free);
        assert_eq!(c.exponents, vec![2, 2]);
        assert_eq!(c.tjurina, 12);
        assert_eq!(ar_dimension(&f, 1).basis.len(), 0);
    }

    #[test]
    fn scan_values() {
        assert_eq!(never_free_scan(1), NeverFreeScan { predicted_tjurina: 11, discriminant: -4, free_possible: false });
        assert_eq!(never_free_scan(2).predicted_tjurina, 26);
        assert_eq!(never_free_scan(9), NeverFreeScan { predicted_tjurina: 243, discriminant: -228, free_possible: false });
    }
}
