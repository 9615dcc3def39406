use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldK;
use crate::poly::HomPoly;

/// A point of the projective plane over K, normalised so that its first
/// nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: [FieldK; 3],
}

impl ProjPoint {
    pub fn new(coords: [FieldK; 3]) -> Result<Self> {
        let lead = coords.iter().position(|c| !c.is_zero()).ok_or(Error::ZeroPoint)?;
        let inv = coords[lead].inv()?;
        let coords = std::array::from_fn(|i| {
            if i == lead {
                FieldK::one()
            } else {
                &coords[i] * &inv
            }
        });
        Ok(ProjPoint { coords })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
        Self::new([FieldK::from_int(x), FieldK::from_int(y), FieldK::from_int(z)])
    }

    pub fn coords(&self) -> &[FieldK; 3] {
        &self.coords
    }

    /// True when the point lies on the curve `f = 0`.
    pub fn lies_on(&self, f: &HomPoly) -> bool {
        f.evaluate(self).is_zero()
    }

    /// Index of the last nonzero coordinate: the affine chart used for local
    /// expansions.
    pub fn chart(&self) -> usize {
        (0..3).rev().find(|&i| !self.coords[i].is_zero()).expect("nonzero point")
    }

    /// Representative whose chart coordinate equals 1.
    pub fn chart_coords(&self) -> [FieldK; 3] {
        let c = self.chart();
        let inv = self.coords[c].inv().expect("nonzero chart coordinate");
        std::array::from_fn(|i| &self.coords[i] * &inv)
    }

    /// Lexicographic order on the coordinate vectors; used to sort output.
    pub fn cmp_coords(&self, other: &Self) -> Ordering {
        for i in 0..3 {
            match self.coords[i].cmp_coords(&other.coords[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub fn is_rational(&self) -> bool {
        self.coords.iter().all(FieldK::is_rational)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|c| if c.is_rational() { c.to_string() } else { format!("({c})") })
            .collect();
        write!(f, "({})", parts.join(" : "))
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for ProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(3))?;
        for c in &self.coords {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl<'de> serde::Deserialize<'de> for ProjPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: [FieldK; 3] = serde::Deserialize::deserialize(d)?;
        ProjPoint::new(v).map_err(serde::de::Error::custom)
    }
}

/// An invertible 3x3 matrix over K acting on coordinate vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearChange {
    m: [[FieldK; 3]; 3],
}

impl LinearChange {
    pub fn new(m: [[FieldK; 3]; 3]) -> Result<Self> {
        let t = LinearChange { m };
        if t.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(t)
    }

    pub fn from_ints(m: [[i64; 3]; 3]) -> Result<Self> {
        Self::new(std::array::from_fn(|i| std::array::from_fn(|j| FieldK::from_int(m[i][j]))))
    }

    pub fn identity() -> Self {
        Self::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap()
    }

    pub fn diagonal(d: [FieldK; 3]) -> Result<Self> {
        let [a, b, c] = d;
        let z = FieldK::zero;
        Self::new([[a, z(), z()], [z(), b, z()], [z(), z(), c]])
    }

    /// The matrix sending coordinate `perm[i]` to position `i`, i.e. the
    /// substitution `x_i -> x_perm[i]`.
    pub fn permutation(perm: [usize; 3]) -> Self {
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| if perm[i] == j { FieldK::one() } else { FieldK::zero() })
        });
        LinearChange { m }
    }

    pub fn matrix(&self) -> &[[FieldK; 3]; 3] {
        &self.m
    }

    pub fn det(&self) -> FieldK {
        let m = &self.m;
        let t = |a: usize, b: usize, c: usize| &(&m[0][a] * &m[1][b]) * &m[2][c];
        let pos = &(&t(0, 1, 2) + &t(1, 2, 0)) + &t(2, 0, 1);
        let neg = &(&t(0, 2, 1) + &t(1, 0, 2)) + &t(2, 1, 0);
        &pos - &neg
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &LinearChange) -> LinearChange {
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let mut acc = FieldK::zero();
                for k in 0..3 {
                    acc += &(&self.m[i][k] * &other.m[k][j]);
                }
                acc
            })
        });
        LinearChange { m }
    }

    pub fn inverse(&self) -> LinearChange {
        let m = &self.m;
        let inv_det = self.det().inv().expect("invertible by construction");
        let cof = |r: usize, c: usize| {
            let rs: Vec<usize> = (0..3).filter(|&i| i != r).collect();
            let cs: Vec<usize> = (0..3).filter(|&i| i != c).collect();
            let v = &(&m[rs[0]][cs[0]] * &m[rs[1]][cs[1]]) - &(&m[rs[0]][cs[1]] * &m[rs[1]][cs[0]]);
            if (r + c) % 2 == 1 {
                -&v
            } else {
                v
            }
        };
        let inv = std::array::from_fn(|i| std::array::from_fn(|j| &cof(j, i) * &inv_det));
        LinearChange { m: inv }
    }

    /// Image `T p` of a point.
    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        let c = p.coords();
        let v = std::array::from_fn(|i| {
            let mut acc = FieldK::zero();
            for j in 0..3 {
                acc += &(&self.m[i][j] * &c[j]);
            }
            acc
        });
        ProjPoint::new(v).expect("invertible map sends points to points")
    }

    /// Push-forward of a curve: `f o T^(-1)`, whose zero set is `T` applied
    /// to the zero set of `f`.
    pub fn push_poly(&self, f: &HomPoly) -> HomPoly {
        f.substitute(&self.inverse())
    }

    /// True when the two matrices agree up to a nonzero scalar.
    pub fn projectively_equal(&self, other: &LinearChange) -> bool {
        let mut ratio: Option<FieldK> = None;
        for i in 0..3 {
            for j in 0..3 {
                let (a, b) = (&self.m[i][j], &other.m[i][j]);
                if a.is_zero() != b.is_zero() {
                    return false;
                }
                if a.is_zero() {
                    continue;
                }
                let r = a / b;
                match &ratio {
                    None => ratio = Some(r),
                    Some(r0) if *r0 != r => return false,
                    _ => {}
                }
            }
        }
        true
    }
}

impl fmt::Debug for LinearChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearChange{:?}", self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalisation() {
        let p = ProjPoint::from_ints(0, 2, 4).unwrap();
        assert_eq!(p, ProjPoint::from_ints(0, 1, 2).unwrap());
        assert_eq!(ProjPoint::from_ints(0, 0, 0), Err(Error::ZeroPoint));
        assert_eq!(p.chart(), 2);
    }

    #[test]
    fn inverse_and_apply() {
        let t = LinearChange::from_ints([[1, 2, 0], [0, 1, 3], [1, 0, 1]]).unwrap();
        assert_eq!(t.compose(&t.inverse()), LinearChange::identity());
        let p = ProjPoint::from_ints(1, 1, 2).unwrap();
        assert_eq!(t.inverse().apply(&t.apply(&p)), p);
        assert_eq!(LinearChange::from_ints([[1, 1, 0], [1, 1, 0], [0, 0, 1]]), Err(Error::SingularMatrix));
    }

    #[test]
    fn push_forward_moves_zero_sets() {
        let f: HomPoly = "x^3 + y^3 - x*y*z".parse().unwrap();
        let p = ProjPoint::from_ints(1, 1, 2).unwrap();
        let t = LinearChange::from_ints([[2, 1, 0], [0, 1, 1], [1, 0, 1]]).unwrap();
        assert!(t.push_poly(&f).evaluate(&t.apply(&p)).is_zero());
    }
}
