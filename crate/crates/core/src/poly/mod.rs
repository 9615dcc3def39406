//! Homogeneous polynomials in K[x, y, z].

pub mod parse;
pub mod point;
pub mod resultant;
pub mod solve;
pub mod univariate;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::FieldK;

pub use point::{LinearChange, ProjPoint};
pub use resultant::{resultant, BinaryForm};
pub use univariate::{gcd_univariate, UniPoly};

/// A variable of the polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X = 0,
    Y = 1,
    Z = 2,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    pub fn name(self) -> char {
        ['x', 'y', 'z'][self as usize]
    }
}

/// Exponent triple `x^e0 y^e1 z^e2`. Ordered graded-lexicographically with
/// `x > y > z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exponents: [u32; 3],
}

impl Monomial {
    pub const fn new(ex: u32, ey: u32, ez: u32) -> Self {
        Monomial { exponents: [ex, ey, ez] }
    }

    pub fn one() -> Self {
        Monomial::new(0, 0, 0)
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Monomial { exponents: e }
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exponents: std::array::from_fn(|i| self.exponents[i] + other.exponents[i]) }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0; 3];
        for i in 0..3 {
            e[i] = self.exponents[i].checked_sub(other.exponents[i])?;
        }
        Some(Monomial { exponents: e })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &e) in self.exponents.iter().enumerate() {
            let v = Var::from_index(i).name();
            match e {
                0 => {}
                1 => parts.push(v.to_string()),
                _ => parts.push(format!("{v}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// All monomials of degree `k`, in descending grlex order (`x^k` first).
pub fn monomials_of_degree(k: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(((k + 1) * (k + 2) / 2) as usize);
    for ex in (0..=k).rev() {
        for ey in (0..=(k - ex)).rev() {
            out.push(Monomial::new(ex, ey, k - ex - ey));
        }
    }
    out
}

/// Position of a monomial of degree `k` in [`monomials_of_degree`].
pub fn monomial_index(m: &Monomial) -> usize {
    let k = m.degree();
    let [ex, ey, _] = m.exponents;
    // Degrees of x above ex contribute (k - e + 1) monomials each.
    let before: u32 = ((ex + 1)..=k).map(|e| k - e + 1).sum();
    (before + (k - ex - ey)) as usize
}

/// Dimension of the space of forms of degree `k`.
pub fn forms_dim(k: i64) -> usize {
    if k < 0 {
        0
    } else {
        ((k + 1) * (k + 2) / 2) as usize
    }
}

/// A homogeneous polynomial with an explicit degree tag.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomPoly {
    degree: u32,
    terms: BTreeMap<Monomial, FieldK>,
}

impl HomPoly {
    pub fn zero(degree: u32) -> Self {
        HomPoly { degree, terms: BTreeMap::new() }
    }

    pub fn constant(c: FieldK) -> Self {
        let mut p = HomPoly::zero(0);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        HomPoly::monomial(Monomial::var(v), FieldK::one())
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }

    pub fn y() -> Self {
        Self::var(Var::Y)
    }

    pub fn z() -> Self {
        Self::var(Var::Z)
    }

    pub fn monomial(m: Monomial, c: FieldK) -> Self {
        let mut p = HomPoly::zero(m.degree());
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from terms; every monomial must have degree `degree`.
    pub fn from_terms<I>(degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, FieldK)>,
    {
        let mut p = HomPoly::zero(degree);
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: m.degree() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Adds `c * m` in place. The monomial must match the degree tag.
    pub fn add_term(&mut self, m: Monomial, c: FieldK) {
        debug_assert_eq!(m.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
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

    pub fn coeff(&self, m: &Monomial) -> FieldK {
        self.terms.get(m).cloned().unwrap_or_else(FieldK::zero)
    }

    /// Terms in ascending grlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &FieldK)> {
        self.terms.iter()
    }

    /// The grlex-leading term.
    pub fn leading_term(&self) -> Option<(&Monomial, &FieldK)> {
        self.terms.iter().next_back()
    }

    /// True when all coefficients lie in Q.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(FieldK::is_rational)
    }

    /// True when all coefficients lie in Q(w).
    pub fn in_omega_subfield(&self) -> bool {
        self.terms.values().all(FieldK::in_omega_subfield)
    }

    /// Sum, failing on a degree mismatch between two nonzero operands.
    pub fn checked_add(&self, other: &HomPoly) -> Result<HomPoly> {
        if other.is_zero() {
            let mut r = self.clone();
            if self.is_zero() {
                r.degree = self.degree.max(other.degree);
            }
            return Ok(r);
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(*m, c.clone());
        }
        Ok(r)
    }

    pub fn checked_sub(&self, other: &HomPoly) -> Result<HomPoly> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, c: &FieldK) -> HomPoly {
        if c.is_zero() {
            return HomPoly::zero(self.degree);
        }
        HomPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> HomPoly {
        let mut acc = HomPoly::constant(FieldK::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative; the degree drops by one (stays 0 for constants).
    pub fn partial(&self, v: Var) -> HomPoly {
        let i = v.index();
        let mut r = HomPoly::zero(self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.exponents[i];
            if e == 0 {
                continue;
            }
            let mut nm = *m;
            nm.exponents[i] -= 1;
            r.add_term(nm, c * &FieldK::from_int(e as i64));
        }
        r
    }

    pub fn gradient(&self) -> [HomPoly; 3] {
        [self.partial(Var::X), self.partial(Var::Y), self.partial(Var::Z)]
    }

    /// Value at the given coordinates.
    pub fn eval_coords(&self, p: &[FieldK; 3]) -> FieldK {
        let d = self.degree as usize;
        let pows: Vec<Vec<FieldK>> = p
            .iter()
            .map(|c| {
                let mut v = vec![FieldK::one()];
                for i in 0..d {
                    let next = &v[i] * c;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = FieldK::zero();
        for (m, c) in &self.terms {
            let [a, b, e] = m.exponents;
            let t = &(&pows[0][a as usize] * &pows[1][b as usize]) * &pows[2][e as usize];
            acc += &(&t * c);
        }
        acc
    }

    /// Value at the canonical representative of `p`.
    pub fn evaluate(&self, p: &ProjPoint) -> FieldK {
        self.eval_coords(p.coords())
    }

    /// `f(T x)`: the composition of `f` with the linear map `T`.
    pub fn substitute(&self, t: &LinearChange) -> HomPoly {
        let m = t.matrix();
        let lin: Vec<HomPoly> = (0..3)
            .map(|i| {
                let mut l = HomPoly::zero(1);
                for (j, v) in Var::ALL.iter().enumerate() {
                    l.add_term(Monomial::var(*v), m[i][j].clone());
                }
                l
            })
            .collect();
        let d = self.degree;
        let pows: Vec<Vec<HomPoly>> = lin
            .iter()
            .map(|l| {
                let mut v = vec![HomPoly::constant(FieldK::one())];
                for i in 0..d as usize {
                    let next = &v[i] * l;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut r = HomPoly::zero(d);
        for (mono, c) in &self.terms {
            let [a, b, e] = mono.exponents;
            let prod = &(&pows[0][a as usize] * &pows[1][b as usize]) * &pows[2][e as usize];
            for (pm, pc) in prod.terms {
                r.add_term(pm, &pc * c);
            }
        }
        r
    }

    /// Divides by the grlex-leading coefficient; used for equality up to scalar.
    pub fn normalize_up_to_scalar(&self) -> HomPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// True when the two polynomials differ by a nonzero scalar.
    pub fn proportional(&self, other: &HomPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.degree == other.degree
            && self.terms.len() == other.terms.len()
            && self.normalize_up_to_scalar() == other.normalize_up_to_scalar()
    }

    /// Deterministic total order on polynomials of equal degree: terms are
    /// compared from the grlex-leading one down, monomial first, then the
    /// coefficient coordinates.
    pub fn cmp_terms(&self, other: &HomPoly) -> Ordering {
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    let o = mb.cmp(ma).then_with(|| ca.cmp_coords(cb));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
        }
    }

    /// Coefficients in the basis of [`monomials_of_degree`].
    pub fn dense_coeffs(&self) -> Vec<FieldK> {
        let mut v = vec![FieldK::zero(); forms_dim(self.degree as i64)];
        for (m, c) in &self.terms {
            v[monomial_index(m)] = c.clone();
        }
        v
    }

    /// Inverse of [`HomPoly::dense_coeffs`].
    pub fn from_dense(degree: u32, coeffs: &[FieldK]) -> HomPoly {
        let mut p = HomPoly::zero(degree);
        for (m, c) in monomials_of_degree(degree).into_iter().zip(coeffs) {
            p.add_term(m, c.clone());
        }
        p
    }

    /// Checks the structural invariants: homogeneity and no zero coefficients.
    pub fn is_well_formed(&self) -> bool {
        self.terms.iter().all(|(m, c)| m.degree() == self.degree && !c.is_zero())
    }

    /// The largest exponent of `v` appearing in the polynomial.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponents[v.index()]).max().unwrap_or(0)
    }

    /// Coefficient of `v^i`, a form in the remaining variables.
    pub fn coeff_in(&self, v: Var, i: u32) -> HomPoly {
        let mut r = HomPoly::zero(self.degree.saturating_sub(i));
        for (m, c) in &self.terms {
            if m.exponents[v.index()] == i {
                let mut nm = *m;
                nm.exponents[v.index()] = 0;
                r.add_term(nm, c.clone());
            }
        }
        r
    }
}

impl<'a> Add<&'a HomPoly> for &'a HomPoly {
    type Output = HomPoly;
    /// Panics on a degree mismatch; see [`HomPoly::checked_add`].
    fn add(self, rhs: &HomPoly) -> HomPoly {
        self.checked_add(rhs).expect("degree mismatch in polynomial addition")
    }
}

impl<'a> Sub<&'a HomPoly> for &'a HomPoly {
    type Output = HomPoly;
    fn sub(self, rhs: &HomPoly) -> HomPoly {
        self.checked_sub(rhs).expect("degree mismatch in polynomial subtraction")
    }
}

impl<'a> Neg for &'a HomPoly {
    type Output = HomPoly;
    fn neg(self) -> HomPoly {
        HomPoly { degree: self.degree, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl<'a> Mul<&'a HomPoly> for &'a HomPoly {
    type Output = HomPoly;
    fn mul(self, rhs: &HomPoly) -> HomPoly {
        let mut r = HomPoly::zero(self.degree + rhs.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                r.add_term(ma.mul(mb), ca * cb);
            }
        }
        r
    }
}

macro_rules! forward_owned_poly {
    ($tr:ident, $m:ident) => {
        impl $tr<HomPoly> for HomPoly {
            type Output = HomPoly;
            fn $m(self, rhs: HomPoly) -> HomPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_poly!(Add, add);
forward_owned_poly!(Sub, sub);
forward_owned_poly!(Mul, mul);

impl fmt::Display for HomPoly {
    /// Terms from the grlex-leading one down, e.g. `x^2 - 2*x*y + (1*w)*z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let (neg, mag) = if c.is_rational() {
                let q = c.to_rational().unwrap();
                let neg = q < num_rational::BigRational::from_integer(0.into());
                (neg, if neg { -c } else { c.clone() })
            } else {
                (false, c.clone())
            };
            let coeff = if mag.is_rational() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            let body = if m.degree() == 0 {
                coeff
            } else if mag.is_one() {
                m.to_string()
            } else {
                format!("{coeff}*{m}")
            };
            if first {
                write!(f, "{}{body}", if neg { "-" } else { "" })?;
                first = false;
            } else {
                write!(f, " {} {body}", if neg { "-" } else { "+" })?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomPoly[{}]({self})", self.degree)
    }
}

impl FromStr for HomPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_hompoly(s)
    }
}

impl serde::Serialize for HomPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for HomPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Determinant of a 3x3 matrix of forms by cofactor expansion.
pub fn det3(m: &[[HomPoly; 3]; 3]) -> Result<HomPoly> {
    let terms = [
        (0, 1, 2, false),
        (1, 2, 0, false),
        (2, 0, 1, false),
        (0, 2, 1, true),
        (1, 0, 2, true),
        (2, 1, 0, true),
    ];
    let mut degree: Option<u32> = None;
    for &(a, b, c, _) in &terms {
        let d = m[0][a].degree() + m[1][b].degree() + m[2][c].degree();
        let all_nonzero = !m[0][a].is_zero() && !m[1][b].is_zero() && !m[2][c].is_zero();
        if all_nonzero {
            match degree {
                None => degree = Some(d),
                Some(d0) if d0 != d => return Err(Error::DegreeIncompatible),
                _ => {}
            }
        }
    }
    let degree = degree.unwrap_or_else(|| m[0][0].degree() + m[1][1].degree() + m[2][2].degree());
    let mut acc = HomPoly::zero(degree);
    for &(a, b, c, neg) in &terms {
        if m[0][a].is_zero() || m[1][b].is_zero() || m[2][c].is_zero() {
            continue;
        }
        let t = &(&m[0][a] * &m[1][b]) * &m[2][c];
        acc = if neg { acc.checked_sub(&t)? } else { acc.checked_add(&t)? };
    }
    Ok(acc)
}

/// Jacobian determinant of three forms.
pub fn jacobian(f: &HomPoly, g: &HomPoly, h: &HomPoly) -> Result<HomPoly> {
    det3(&[f.gradient(), g.gradient(), h.gradient()])
}

/// Determinant of a 4x4 matrix of forms by expansion along the first row.
pub fn det4(m: &[[HomPoly; 4]; 4]) -> Result<HomPoly> {
    let mut acc: Option<HomPoly> = None;
    for j in 0..4 {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: [[HomPoly; 3]; 3] = std::array::from_fn(|r| {
            let cols: Vec<usize> = (0..4).filter(|&c| c != j).collect();
            std::array::from_fn(|c| m[r + 1][cols[c]].clone())
        });
        let mut t = &m[0][j] * &det3(&minor)?;
        if j % 2 == 1 {
            t = -&t;
        }
        acc = Some(match acc {
            None => t,
            Some(a) => a.checked_add(&t).map_err(|_| Error::DegreeIncompatible)?,
        });
    }
    Ok(acc.unwrap_or_else(|| HomPoly::zero(0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> HomPoly {
        s.parse().unwrap()
    }

    #[test]
    fn products_and_scaling() {
        assert_eq!(&p("x + y") * &p("x - y"), p("x^2 - y^2"));
        let f = p("x^3 + y^3 + z^3");
        assert_eq!(f.scale(&FieldK::omega()), p("w*x^3 + w*y^3 + w*z^3"));
        assert_eq!(
            p("(x - y)^2 - z*(a^2*x + a^2*y + 2*a*z)"),
            p("x^2 - 2*x*y + y^2 - a^2*x*z - a^2*y*z - 2*a*z^2")
        );
        assert!(p("x").checked_add(&p("x^2")).is_err());
    }

    #[test]
    fn partial_derivatives() {
        assert_eq!(p("x^3 + y^3 + z^3").partial(Var::X), p("3*x^2"));
        assert_eq!(p("x^3 + y^3 - x*y*z").partial(Var::Z), p("-x*y"));
        let q1 = p("21*(x^2 + y^2) - 22*x*y - 6*(x + y)*z + z^2");
        assert_eq!(q1.partial(Var::Y), p("42*y - 22*x - 6*z"));
        assert!(p("5").partial(Var::X).is_zero());
    }

    #[test]
    fn evaluation() {
        let e = p("x^3 + y^3 - x*y*z");
        let s1 = ProjPoint::from_ints(1, 1, 2).unwrap();
        assert!(e.evaluate(&s1).is_zero());
        let f = p("x^3 + y^3 + z^3");
        let pt = ProjPoint::new([FieldK::one(), FieldK::one(), -FieldK::alpha()]).unwrap();
        assert!(f.evaluate(&pt).is_zero());
        assert!(p("x").evaluate(&ProjPoint::from_ints(0, 1, 0).unwrap()).is_zero());
    }

    #[test]
    fn substitution_examples() {
        let q = p("(x - y)^2 - z*(a^2*x + a^2*y + 2*a*z)");
        let swap = LinearChange::permutation([0, 2, 1]);
        assert_eq!(q.substitute(&swap), p("(x - z)^2 - y*(a^2*x + a^2*z + 2*a*y)"));
        let w2 = &FieldK::omega() * &FieldK::omega();
        let diag = LinearChange::diagonal([FieldK::one(), w2, FieldK::one()]).unwrap();
        assert_eq!(
            q.substitute(&diag),
            p("(x - w^2*y)^2 - z*(a^2*x + a^2*w^2*y + 2*a*z)")
        );
        assert_eq!(q.substitute(&LinearChange::identity()), q);
    }

    #[test]
    fn determinants() {
        let h = [
            [p("6*x"), HomPoly::zero(1), HomPoly::zero(1)],
            [HomPoly::zero(1), p("6*y"), HomPoly::zero(1)],
            [HomPoly::zero(1), HomPoly::zero(1), p("6*z")],
        ];
        assert_eq!(det3(&h).unwrap(), p("216*x*y*z"));
        assert_eq!(jacobian(&p("x"), &p("y"), &p("z")).unwrap(), p("1"));
        let r = [p("x"), p("y"), p("z")];
        assert!(det3(&[r.clone(), r.clone(), [p("z"), p("x"), p("y")]]).unwrap().is_zero());
        let bad = [
            [p("x"), p("x^2"), HomPoly::zero(1)],
            [p("x"), p("y"), HomPoly::zero(1)],
            [p("x"), p("y"), p("z")],
        ];
        assert_eq!(det3(&bad), Err(Error::DegreeIncompatible));
    }

    #[test]
    fn monomial_indexing() {
        for k in 0..7 {
            for (i, m) in monomials_of_degree(k).iter().enumerate() {
                assert_eq!(monomial_index(m), i);
            }
        }
        assert!(Monomial::new(2, 0, 0) > Monomial::new(1, 1, 0));
        assert!(Monomial::new(0, 0, 3) > Monomial::new(2, 0, 0));
    }

    #[test]
    fn printing_round_trip() {
        for s in [
            "x^2 - 2*x*y + y^2 - a^2*x*z",
            "21*x^2 - 22*x*y + 21*y^2 - 6*x*z - 6*y*z + z^2",
            "(1/2*w)*x*y*z - 3*z^3",
        ] {
            if let Ok(f) = s.parse::<HomPoly>() {
                assert_eq!(p(&f.to_string()), f);
            }
        }
        assert_eq!(p("x^2 - 2*x*y").to_string(), "x^2 - 2*x*y");
    }
}
