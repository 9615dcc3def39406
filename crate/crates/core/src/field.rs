//! Exact arithmetic in K = Q(w, a) with w^2 + w + 1 = 0 and a^3 = 2.
//!
//! Elements are stored as six integer numerators over one positive common
//! denominator, in the flat basis `1, w, a, w*a, a^2, w*a^2`. Index `i`
//! encodes `w^(i % 2) * a^(i / 2)`. The representation is canonical: the
//! denominator is positive and coprime to the content of the numerators, so
//! structural equality is field equality.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number (always kept reduced).
pub type Rational = BigRational;

/// Names of the basis elements in text form.
pub const BASIS_NAMES: [&str; 6] = ["1", "w", "a", "w*a", "a^2", "w*a^2"];

/// An element of K.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldK {
    num: [BigInt; 6],
    den: BigInt,
}

fn zero_arr() -> [BigInt; 6] {
    std::array::from_fn(|_| BigInt::zero())
}

impl FieldK {
    pub fn zero() -> Self {
        FieldK { num: zero_arr(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut num = zero_arr();
        num[0] = BigInt::from(n);
        FieldK { num, den: BigInt::one() }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        let mut num = zero_arr();
        num[0] = n;
        FieldK { num, den: BigInt::one() }
    }

    pub fn from_rational(q: &Rational) -> Self {
        let mut num = zero_arr();
        num[0] = q.numer().clone();
        FieldK { num, den: q.denom().clone() }
    }

    /// `n / d` as an element of Q.
    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(&Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The primitive cube root of unity `w`.
    pub fn omega() -> Self {
        Self::basis(1)
    }

    /// The real cube root of two `a`.
    pub fn alpha() -> Self {
        Self::basis(2)
    }

    /// The basis element with flat index `i` (see module docs).
    pub fn basis(i: usize) -> Self {
        let mut num = zero_arr();
        num[i] = BigInt::one();
        FieldK { num, den: BigInt::one() }
    }

    /// Builds an element from its six rational coordinates.
    pub fn from_coords(coords: &[Rational; 6]) -> Self {
        let mut den = BigInt::one();
        for c in coords {
            den = den.lcm(c.denom());
        }
        let num = std::array::from_fn(|i| coords[i].numer() * (&den / coords[i].denom()));
        Self::normalized(num, den)
    }

    /// Builds an element from integer numerators and a common denominator.
    pub fn from_parts(num: [BigInt; 6], den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(mut num: [BigInt; 6], mut den: BigInt) -> Self {
        if num.iter().all(Zero::is_zero) {
            return Self::zero();
        }
        if den.is_negative() {
            den = -den;
            for n in num.iter_mut() {
                *n = -&*n;
            }
        }
        if !den.is_one() {
            let mut g = den.clone();
            for n in num.iter() {
                if g.is_one() {
                    break;
                }
                if !n.is_zero() {
                    g = g.gcd(n);
                }
            }
            if !g.is_one() {
                for n in num.iter_mut() {
                    *n = &*n / &g;
                }
                den /= &g;
            }
        }
        FieldK { num, den }
    }

    /// Rational coordinates in the flat basis.
    pub fn coords(&self) -> [Rational; 6] {
        std::array::from_fn(|i| Rational::new(self.num[i].clone(), self.den.clone()))
    }

    /// Integer numerators over the common denominator.
    pub fn numerators(&self) -> &[BigInt; 6] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in Q.
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in Q(w), i.e. all `a`-coordinates vanish.
    pub fn in_omega_subfield(&self) -> bool {
        self.num[2..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the element is rational.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Multiplies by an integer.
    pub fn scale_int(&self, k: &BigInt) -> Self {
        let num = std::array::from_fn(|i| &self.num[i] * k);
        Self::normalized(num, self.den.clone())
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // View x as c0 + c1 a + c2 a^2 with c_i in Q(w); the adjugate of
        // multiplication-by-x in the a-tower gives x * y = N in Q(w).
        let c: [(BigInt, BigInt); 3] =
            std::array::from_fn(|k| (self.num[2 * k].clone(), self.num[2 * k + 1].clone()));
        let two = |p: &(BigInt, BigInt)| (&p.0 * 2, &p.1 * 2);
        let sub = |p: &(BigInt, BigInt), q: &(BigInt, BigInt)| (&p.0 - &q.0, &p.1 - &q.1);
        let add = |p: &(BigInt, BigInt), q: &(BigInt, BigInt)| (&p.0 + &q.0, &p.1 + &q.1);
        let b0 = sub(&wmul(&c[0], &c[0]), &two(&wmul(&c[1], &c[2])));
        let b1 = sub(&two(&wmul(&c[2], &c[2])), &wmul(&c[0], &c[1]));
        let b2 = sub(&wmul(&c[1], &c[1]), &wmul(&c[0], &c[2]));
        // N = c0 b0 + 2 c1 b2 + 2 c2 b1
        let n = add(&add(&wmul(&c[0], &b0), &two(&wmul(&c[1], &b2))), &two(&wmul(&c[2], &b1)));
        // (p + q w)^(-1) = (p - q - q w) / (p^2 - p q + q^2)
        let (p, q) = n;
        let norm = &p * &p - &p * &q + &q * &q;
        let conj = (&p - &q, -&q);
        let mut num = zero_arr();
        for (k, b) in [b0, b1, b2].iter().enumerate() {
            let t = wmul(b, &conj);
            num[2 * k] = t.0 * &self.den;
            num[2 * k + 1] = t.1 * &self.den;
        }
        Ok(Self::normalized(num, norm))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = FieldK::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Image under the automorphism `w -> w^2` (fixing `a`).
    pub fn conj_omega(&self) -> Self {
        let mut num = zero_arr();
        for k in 0..3 {
            // c + d w -> c + d w^2 = (c - d) - d w
            num[2 * k] = &self.num[2 * k] - &self.num[2 * k + 1];
            num[2 * k + 1] = -&self.num[2 * k + 1];
        }
        Self::normalized(num, self.den.clone())
    }

    /// Total order used for deterministic sorting: lexicographic on the
    /// rational coordinates.
    pub fn cmp_coords(&self, other: &Self) -> std::cmp::Ordering {
        for i in 0..6 {
            let l = &self.num[i] * &other.den;
            let r = &other.num[i] * &self.den;
            match l.cmp(&r) {
                std::cmp::Ordering::Equal => continue,
                o => return o,
            }
        }
        std::cmp::Ordering::Equal
    }
}

/// Product in Z[w] of pairs (c, d) meaning c + d w.
fn wmul(x: &(BigInt, BigInt), y: &(BigInt, BigInt)) -> (BigInt, BigInt) {
    let bd = &x.1 * &y.1;
    (&x.0 * &y.0 - &bd, &x.0 * &y.1 + &x.1 * &y.0 - bd)
}

impl Default for FieldK {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for FieldK {
    fn from(n: i64) -> Self {
        FieldK::from_int(n)
    }
}

impl From<Rational> for FieldK {
    fn from(q: Rational) -> Self {
        FieldK::from_rational(&q)
    }
}

impl<'a> Add<&'a FieldK> for &'a FieldK {
    type Output = FieldK;
    fn add(self, rhs: &FieldK) -> FieldK {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            let num = std::array::from_fn(|i| &self.num[i] + &rhs.num[i]);
            return FieldK::normalized(num, self.den.clone());
        }
        let num = std::array::from_fn(|i| &self.num[i] * &rhs.den + &rhs.num[i] * &self.den);
        FieldK::normalized(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a FieldK> for &'a FieldK {
    type Output = FieldK;
    fn sub(self, rhs: &FieldK) -> FieldK {
        self + &(-rhs)
    }
}

impl<'a> Neg for &'a FieldK {
    type Output = FieldK;
    fn neg(self) -> FieldK {
        FieldK { num: std::array::from_fn(|i| -&self.num[i]), den: self.den.clone() }
    }
}

impl<'a> Mul<&'a FieldK> for &'a FieldK {
    type Output = FieldK;
    fn mul(self, rhs: &FieldK) -> FieldK {
        if self.is_zero() || rhs.is_zero() {
            return FieldK::zero();
        }
        let mut acc = zero_arr();
        for i in 0..3 {
            let x = (&self.num[2 * i], &self.num[2 * i + 1]);
            if x.0.is_zero() && x.1.is_zero() {
                continue;
            }
            for j in 0..3 {
                let y = (&rhs.num[2 * j], &rhs.num[2 * j + 1]);
                if y.0.is_zero() && y.1.is_zero() {
                    continue;
                }
                let bd = x.1 * y.1;
                let mut re = x.0 * y.0 - &bd;
                let mut im = x.0 * y.1 + x.1 * y.0 - bd;
                let mut k = i + j;
                if k >= 3 {
                    k -= 3;
                    re *= 2;
                    im *= 2;
                }
                acc[2 * k] += re;
                acc[2 * k + 1] += im;
            }
        }
        FieldK::normalized(acc, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a FieldK> for &'a FieldK {
    type Output = FieldK;
    /// Panics on division by zero; use [`FieldK::inv`] for a fallible form.
    fn div(self, rhs: &FieldK) -> FieldK {
        self * &rhs.inv().expect("division by zero in K")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldK> for FieldK {
            type Output = FieldK;
            fn $m(self, rhs: FieldK) -> FieldK {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldK> for FieldK {
            type Output = FieldK;
            fn $m(self, rhs: &FieldK) -> FieldK {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for FieldK {
    type Output = FieldK;
    fn neg(self) -> FieldK {
        -&self
    }
}

impl AddAssign<&FieldK> for FieldK {
    fn add_assign(&mut self, rhs: &FieldK) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldK> for FieldK {
    fn sub_assign(&mut self, rhs: &FieldK) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&FieldK> for FieldK {
    fn mul_assign(&mut self, rhs: &FieldK) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for FieldK {
    /// Renders as a Q-linear combination, e.g. `3/2 + 1*w - 2*a^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = fmt_rational(&c.abs());
            let term = if i == 0 { mag } else { format!("{}*{}", mag, BASIS_NAMES[i]) };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                write!(f, "{term}")?;
                first = false;
            } else {
                write!(f, " {} {term}", if neg { "-" } else { "+" })?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({self})")
    }
}

impl FromStr for FieldK {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::poly::parse::parse_scalar(s)
    }
}

impl serde::Serialize for FieldK {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for FieldK {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> FieldK {
        s.parse().unwrap()
    }

    #[test]
    fn minimal_relations() {
        let w = FieldK::omega();
        let a = FieldK::alpha();
        assert_eq!(&w + &(&w * &w), FieldK::from_int(-1));
        assert_eq!(&a * &(&a * &a), FieldK::from_int(2));
        let one_plus_w = &FieldK::one() + &w;
        assert!((&one_plus_w * &(-&w)).is_one());
        assert!((&(&(&w * &w) + &w) + &FieldK::one()).is_zero());
    }

    #[test]
    fn inverses() {
        let a = FieldK::alpha();
        let w = FieldK::omega();
        assert_eq!(a.inv().unwrap(), k("1/2*a^2"));
        assert_eq!(w.inv().unwrap(), &w * &w);
        let x = &FieldK::one() + &a;
        assert_eq!(x.inv().unwrap(), k("1/3 - 1/3*a + 1/3*a^2"));
        let y = k("3 + 2*w - a^2");
        assert_eq!(y.inv().unwrap().inv().unwrap(), y);
        assert!(matches!(FieldK::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn display_round_trip() {
        let x = k("3/2 + 1*w - 2*a^2");
        assert_eq!(x.to_string(), "3/2 + 1*w - 2*a^2");
        assert_eq!(k("-w*a").to_string(), "-1*w*a");
        assert_eq!(FieldK::zero().to_string(), "0");
        for s in ["7", "-1/3*w*a^2", "1 - 1*a + 5/7*w*a"] {
            assert_eq!(k(&k(s).to_string()), k(s));
        }
    }

    #[test]
    fn canonical_reduction() {
        let x = FieldK::from_parts(
            std::array::from_fn(|i| BigInt::from(4 * i as i64)),
            BigInt::from(-6),
        )
        .unwrap();
        assert_eq!(x.denominator(), &BigInt::from(3));
        assert_eq!(x.numerators()[1], BigInt::from(-2));
    }

    #[test]
    fn omega_conjugation_is_automorphism() {
        let x = k("1 + 2*w - a + 3*w*a^2");
        let y = k("-2/3 + w*a + a^2");
        assert_eq!((&x * &y).conj_omega(), &x.conj_omega() * &y.conj_omega());
        assert_eq!(FieldK::omega().conj_omega(), &FieldK::omega() * &FieldK::omega());
    }
}
