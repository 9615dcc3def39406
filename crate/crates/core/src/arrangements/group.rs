//! Monomial symmetries of the Fermat cubic.
//!
//! An element acts on points by `(t p)_i = w^(powers[i]) p_(perm[i])` and
//! on polynomials by `f -> f o t^(-1)`. Elements are stored in the
//! normal form `powers[2] = 0`, which is unique up to the scalar matrices.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::field::FieldK;
use crate::poly::{HomPoly, LinearChange, ProjPoint};

/// The three nested groups acting on the Fermat cubic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Group {
    /// `Z3 x Z3`, generated by `g1 = diag(w, 1, 1)` and `g2 = diag(1, w, 1)`.
    G,
    /// `G` extended by the cyclic coordinate shift.
    GPrime,
    /// `G` extended by all coordinate permutations.
    GSecond,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub perm: [usize; 3],
    pub powers: [u32; 3],
}

const IDENTITY_PERM: [usize; 3] = [0, 1, 2];
const SHIFT: [usize; 3] = [1, 2, 0];

impl GroupElement {
    pub fn new(perm: [usize; 3], powers: [u32; 3]) -> Self {
        let c = powers[2] % 3;
        GroupElement { perm, powers: powers.map(|e| (e + 3 - c) % 3) }
    }

    pub fn identity() -> Self {
        Self::new(IDENTITY_PERM, [0, 0, 0])
    }

    /// `(x : y : z) -> (w x : y : z)`.
    pub fn g1() -> Self {
        Self::new(IDENTITY_PERM, [1, 0, 0])
    }

    /// `(x : y : z) -> (x : w y : z)`.
    pub fn g2() -> Self {
        Self::new(IDENTITY_PERM, [0, 1, 0])
    }

    /// The cyclic shift `(x : y : z) -> (y : z : x)`.
    pub fn shift() -> Self {
        Self::new(SHIFT, [0, 0, 0])
    }

    pub fn permutation(perm: [usize; 3]) -> Self {
        Self::new(perm, [0, 0, 0])
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `self o other`.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        // (s t p)_i = w^(s_i) (t p)_(sp_i) = w^(s_i + t_(sp_i)) p_(tp_(sp_i)).
        let perm = std::array::from_fn(|i| other.perm[self.perm[i]]);
        let powers = std::array::from_fn(|i| self.powers[i] + other.powers[self.perm[i]]);
        Self::new(perm, powers)
    }

    pub fn inverse(&self) -> GroupElement {
        let mut perm = [0; 3];
        let mut powers = [0; 3];
        for i in 0..3 {
            perm[self.perm[i]] = i;
            powers[self.perm[i]] = (3 - self.powers[i] % 3) % 3;
        }
        Self::new(perm, powers)
    }

    pub fn matrix(&self) -> LinearChange {
        let w = FieldK::omega();
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| if j == self.perm[i] { w.pow(self.powers[i]) } else { FieldK::zero() })
        });
        LinearChange::new(m).expect("monomial matrices are invertible")
    }

    pub fn apply_point(&self, p: &ProjPoint) -> ProjPoint {
        self.matrix().apply(p)
    }

    /// `f o t^(-1)`, normalised up to scalar.
    pub fn apply_poly(&self, f: &HomPoly) -> HomPoly {
        self.matrix().push_poly(f).normalize_up_to_scalar()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ['x', 'y', 'z'];
        let parts: Vec<String> = (0..3)
            .map(|i| {
                let v = names[self.perm[i]];
                match self.powers[i] {
                    0 => v.to_string(),
                    1 => format!("w{v}"),
                    _ => format!("w^2{v}"),
                }
            })
            .collect();
        write!(f, "({})", parts.join(" : "))
    }
}

/// All elements, in a fixed order: permutations first (identity, then the
/// shifts, then the transpositions), then the diagonal part `(a, b)`.
pub fn group_elements(which: Group) -> Vec<GroupElement> {
    let perms: &[[usize; 3]] = match which {
        Group::G => &[IDENTITY_PERM],
        Group::GPrime => &[IDENTITY_PERM, SHIFT, [2, 0, 1]],
        Group::GSecond => &[IDENTITY_PERM, SHIFT, [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]],
    };
    let mut out = Vec::new();
    for &perm in perms {
        for a in 0..3 {
            for b in 0..3 {
                out.push(GroupElement::new(perm, [a, b, 0]));
            }
        }
    }
    out
}

/// Orbit of a point, sorted.
pub fn point_orbit(p: &ProjPoint, group: &[GroupElement]) -> Vec<ProjPoint> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for t in group {
        let q = t.apply_point(p);
        if seen.insert(q.clone()) {
            out.push(q);
        }
    }
    out.sort_by(|a, b| a.cmp_coords(b));
    out
}

/// Orbit of a curve up to scalar, sorted by [`HomPoly::cmp_terms`].
pub fn poly_orbit(f: &HomPoly, group: &[GroupElement]) -> Vec<HomPoly> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for t in group {
        let q = t.apply_poly(f);
        if seen.insert(q.clone()) {
            out.push(q);
        }
    }
    out.sort_by(|a, b| a.cmp_terms(b));
    out
}
