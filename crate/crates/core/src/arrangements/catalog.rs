//! The nodal cubic and the Fermat cubic with their hyperosculating conics.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::group::{group_elements, Group, GroupElement};
use crate::error::{Error, Result};
use crate::field::FieldK;
use crate::poly::{HomPoly, ProjPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Curve {
    Nodal,
    Fermat,
}

impl FromStr for Curve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nodal" => Ok(Curve::Nodal),
            "fermat" => Ok(Curve::Fermat),
            _ => Err(Error::InvalidSelection(format!("unknown curve {s:?}"))),
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Curve::Nodal => "nodal",
            Curve::Fermat => "fermat",
        })
    }
}

/// Names a hyperosculating conic. Nodal conics are numbered 1..=3 after
/// their sextactic points; Fermat conics are `P<set>:<slot>` with `set` in
/// 1..=9 the base point they pass through and `slot` in 0..=2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConicId {
    Nodal(u8),
    Fermat { set: u8, slot: u8 },
}

impl ConicId {
    pub fn curve(&self) -> Curve {
        match self {
            ConicId::Nodal(_) => Curve::Nodal,
            ConicId::Fermat { .. } => Curve::Fermat,
        }
    }

    /// Parses a selection for `curve`: a bare index (or `Q<i>`) for the
    /// nodal cubic, `P<j>:<slot>` for the Fermat cubic.
    pub fn parse_for(curve: Curve, s: &str) -> Result<ConicId> {
        let bad = || Error::InvalidSelection(format!("{s:?} is not a {curve} conic"));
        match curve {
            Curve::Nodal => {
                let i: u8 = s.strip_prefix('Q').unwrap_or(s).parse().map_err(|_| bad())?;
                if (1..=3).contains(&i) {
                    Ok(ConicId::Nodal(i))
                } else {
                    Err(bad())
                }
            }
            Curve::Fermat => {
                let (a, b) = s.strip_prefix('P').and_then(|r| r.split_once(':')).ok_or_else(bad)?;
                let set: u8 = a.parse().map_err(|_| bad())?;
                let slot: u8 = b.parse().map_err(|_| bad())?;
                if (1..=9).contains(&set) && slot < 3 {
                    Ok(ConicId::Fermat { set, slot })
                } else {
                    Err(bad())
                }
            }
        }
    }
}

impl fmt::Display for ConicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConicId::Nodal(i) => write!(f, "Q{i}"),
            ConicId::Fermat { set, slot } => write!(f, "P{set}:{slot}"),
        }
    }
}

impl FromStr for ConicId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.starts_with('P') {
            ConicId::parse_for(Curve::Fermat, s)
        } else {
            ConicId::parse_for(Curve::Nodal, s)
        }
    }
}

impl Serialize for ConicId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ConicId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A hyperosculating conic together with its point of contact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogConic {
    pub id: ConicId,
    pub conic: HomPoly,
    pub sextactic: ProjPoint,
}

fn parse(s: &str) -> HomPoly {
    s.parse().expect("catalog polynomial")
}

fn point(c: [FieldK; 3]) -> ProjPoint {
    ProjPoint::new(c).expect("catalog point")
}

pub const NODAL_CUBIC: &str = "x^3 + y^3 - x*y*z";
pub const FERMAT_CUBIC: &str = "x^3 + y^3 + z^3";

/// The nodal cubic `x^3 + y^3 - xyz`, its three sextactic points and
/// their hyperosculating conics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodalCatalog {
    pub curve: HomPoly,
    pub conics: Vec<CatalogConic>,
}

impl NodalCatalog {
    pub fn conic(&self, id: ConicId) -> Option<&CatalogConic> {
        self.conics.iter().find(|c| c.id == id)
    }

    pub fn sextactic(&self) -> Vec<ProjPoint> {
        self.conics.iter().map(|c| c.sextactic.clone()).collect()
    }
}

/// The order-3 symmetry `(x : y : z) -> (w x : w^2 y : z)` of the nodal cubic.
pub fn nodal_symmetry() -> GroupElement {
    GroupElement::new([0, 1, 2], [1, 2, 0])
}

pub fn nodal_catalog() -> NodalCatalog {
    let w = FieldK::omega();
    let w2 = w.pow(2);
    let two = FieldK::from_int(2);
    let points = [
        point([FieldK::one(), FieldK::one(), two.clone()]),
        point([w.clone(), w2.clone(), two.clone()]),
        point([w2, w, two]),
    ];
    let conics = [
        "21*(x^2 + y^2) - 22*x*y - 6*(x + y)*z + z^2",
        "21*(w*x^2 + w^2*y^2) - 22*x*y - 6*(w^2*x + w*y)*z + z^2",
        "21*(w^2*x^2 + w*y^2) - 22*x*y - 6*(w*x + w^2*y)*z + z^2",
    ];
    NodalCatalog {
        curve: parse(NODAL_CUBIC),
        conics: points
            .into_iter()
            .zip(conics)
            .enumerate()
            .map(|(i, (p, q))| CatalogConic { id: ConicId::Nodal(i as u8 + 1), conic: parse(q), sextactic: p })
            .collect(),
    }
}

/// The Fermat cubic, its nine base points `p_1..p_9` (the intersections
/// with the coordinate triangle) and its 27 hyperosculating conics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FermatCatalog {
    pub curve: HomPoly,
    pub base_points: Vec<ProjPoint>,
    /// Sorted by id.
    pub conics: Vec<CatalogConic>,
}

/// The sextactic point `(1 : 1 : -a)` of the Fermat cubic.
pub fn fermat_seed_point() -> ProjPoint {
    point([FieldK::one(), FieldK::one(), -FieldK::alpha()])
}

/// Its hyperosculating conic `(x - y)^2 - z(a^2 x + a^2 y + 2 a z)`.
pub fn fermat_seed_conic() -> HomPoly {
    parse("(x - y)^2 - z*(a^2*x + a^2*y + 2*a*z)")
}

pub fn fermat_base_points() -> Vec<ProjPoint> {
    let (o, z, w) = (FieldK::one(), FieldK::zero(), FieldK::omega());
    let w2 = w.pow(2);
    vec![
        point([o.clone(), o.clone(), z.clone()]),
        point([o.clone(), w.clone(), z.clone()]),
        point([o.clone(), w2.clone(), z.clone()]),
        point([z.clone(), o.clone(), o.clone()]),
        point([z.clone(), o.clone(), w.clone()]),
        point([z.clone(), o.clone(), w2.clone()]),
        point([o.clone(), z.clone(), o.clone()]),
        point([w.clone(), z.clone(), o.clone()]),
        point([w2, z, o]),
    ]
}

/// Builds the catalog as the `G'`-orbit of the seed conic. Each conic is
/// filed under the unique base point it passes through; slots within a
/// set follow the term order of the normalised equations.
pub fn fermat_catalog() -> FermatCatalog {
    let seed = fermat_seed_conic();
    let seed_point = fermat_seed_point();
    let base_points = fermat_base_points();
    let mut by_conic: HashMap<HomPoly, ProjPoint> = HashMap::new();
    for t in group_elements(Group::GPrime) {
        by_conic.entry(t.apply_poly(&seed)).or_insert_with(|| t.apply_point(&seed_point));
    }
    let mut sets: Vec<Vec<(HomPoly, ProjPoint)>> = vec![Vec::new(); base_points.len()];
    for (q, s) in by_conic {
        let on: Vec<usize> = (0..base_points.len()).filter(|&j| base_points[j].lies_on(&q)).collect();
        assert_eq!(on.len(), 1, "each Fermat conic passes through exactly one base point");
        sets[on[0]].push((q, s));
    }
    let mut conics = Vec::new();
    for (j, mut members) in sets.into_iter().enumerate() {
        members.sort_by(|a, b| a.0.cmp_terms(&b.0));
        for (slot, (conic, sextactic)) in members.into_iter().enumerate() {
            conics.push(CatalogConic { id: ConicId::Fermat { set: j as u8 + 1, slot: slot as u8 }, conic, sextactic });
        }
    }
    FermatCatalog { curve: parse(FERMAT_CUBIC), base_points, conics }
}

/// The catalog grouped by base point, in the layout of the JSON export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FermatExport {
    pub curve: HomPoly,
    pub sets: Vec<FermatSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FermatSet {
    pub set: String,
    pub base_point: ProjPoint,
    pub conics: Vec<CatalogConic>,
}

impl FermatCatalog {
    pub fn export(&self) -> FermatExport {
        let sets = (1..=self.base_points.len() as u8)
            .map(|j| FermatSet {
                set: format!("P{j}"),
                base_point: self.base_points[j as usize - 1].clone(),
                conics: self.fibre(j).into_iter().cloned().collect(),
            })
            .collect();
        FermatExport { curve: self.curve.clone(), sets }
    }

    pub fn conic(&self, id: ConicId) -> Option<&CatalogConic> {
        self.index_of(id).map(|i| &self.conics[i])
    }

    pub fn index_of(&self, id: ConicId) -> Option<usize> {
        self.conics.iter().position(|c| c.id == id)
    }

    /// Position of a conic given up to scalar.
    pub fn find(&self, q: &HomPoly) -> Option<usize> {
        let q = q.normalize_up_to_scalar();
        self.conics.iter().position(|c| c.conic == q)
    }

    pub fn sextactic(&self) -> Vec<ProjPoint> {
        let mut v: Vec<ProjPoint> = self.conics.iter().map(|c| c.sextactic.clone()).collect();
        v.sort_by(|a, b| a.cmp_coords(b));
        v
    }

    /// The three conics through `p_set`.
    pub fn fibre(&self, set: u8) -> Vec<&CatalogConic> {
        self.conics.iter().filter(|c| matches!(c.id, ConicId::Fermat { set: s, .. } if s == set)).collect()
    }

    /// The permutation of conic positions induced by `t`.
    pub fn conic_permutation(&self, t: &GroupElement) -> Vec<usize> {
        let lookup: HashMap<&HomPoly, usize> = self.conics.iter().enumerate().map(|(i, c)| (&c.conic, i)).collect();
        self.conics
            .iter()
            .map(|c| *lookup.get(&t.apply_poly(&c.conic)).expect("the catalog is closed under the group"))
            .collect()
    }
}
