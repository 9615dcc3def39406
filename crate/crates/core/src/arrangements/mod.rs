//! Curve catalogs, their symmetry groups, and arrangements built from a
//! cubic and some of its hyperosculating conics.

mod catalog;
mod group;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

pub use catalog::{
    fermat_base_points, fermat_catalog, fermat_seed_conic, fermat_seed_point, nodal_catalog, nodal_symmetry,
    CatalogConic, ConicId, Curve, FermatCatalog, FermatExport, FermatSet, NodalCatalog, FERMAT_CUBIC, NODAL_CUBIC,
};
pub use group::{group_elements, point_orbit, poly_orbit, Group, GroupElement};

use crate::error::{Error, Result};
use crate::poly::solve::{is_squarefree, share_component};
use crate::poly::{HomPoly, ProjPoint};
use crate::singularities::{
    classify, conic_pair_type, intersect_curves, singular_points, PairIntersectionType, PairSummary,
    SingularityReport, SingularityType,
};
use crate::syzygy::{certify, FreenessCertificate};

/// Number of sextactic points of an irreducible plane curve of degree `d`
/// and geometric genus `g` whose singularities are `n` nodes and `k` cusps.
pub fn coolidge_count(d: i64, n: i64, k: i64, g: i64) -> i64 {
    3 * (d * d - 2 * n - 3 * k + 6 * (g - 1))
}

/// Elements fixing `p`.
pub fn point_stabilizer(p: &ProjPoint, group: &[GroupElement]) -> Vec<GroupElement> {
    group.iter().filter(|t| t.apply_point(p) == *p).copied().collect()
}

/// A `G'`-orbit of unordered pairs of Fermat conics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairOrbit {
    /// Least pair in the orbit.
    pub representative: (ConicId, ConicId),
    pub size: usize,
    /// Whether the two conics pass through the same base point.
    pub same_set: bool,
}

fn unordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// The orbits of `group` on unordered pairs of distinct Fermat conics,
/// sorted by representative.
pub fn pair_orbits(cat: &FermatCatalog, group: Group) -> Vec<PairOrbit> {
    let perms: Vec<Vec<usize>> = group_elements(group).iter().map(|t| cat.conic_permutation(t)).collect();
    let n = cat.conics.len();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if seen.contains(&(a, b)) {
                continue;
            }
            let orbit: BTreeSet<(usize, usize)> = perms.iter().map(|p| unordered(p[a], p[b])).collect();
            let (i, j) = *orbit.iter().min_by_key(|(i, j)| (cat.conics[*i].id, cat.conics[*j].id)).unwrap();
            let (ci, cj) = (cat.conics[i].id, cat.conics[j].id);
            let same_set = matches!((ci, cj), (ConicId::Fermat { set: s, .. }, ConicId::Fermat { set: t, .. }) if s == t);
            out.push(PairOrbit { representative: (ci, cj), size: orbit.len(), same_set });
            seen.extend(orbit);
        }
    }
    out.sort_by_key(|o| o.representative);
    out
}

/// Whether every non-identity element of `group` moves every Fermat conic
/// and every unordered pair of distinct conics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeAction {
    pub on_conics: bool,
    pub on_pairs: bool,
}

pub fn free_action(cat: &FermatCatalog, group: Group) -> FreeAction {
    let mut res = FreeAction { on_conics: true, on_pairs: true };
    let n = cat.conics.len();
    for t in group_elements(group).iter().filter(|t| !t.is_identity()) {
        let p = cat.conic_permutation(t);
        if (0..n).any(|i| p[i] == i) {
            res.on_conics = false;
        }
        if (0..n).any(|a| (a + 1..n).any(|b| unordered(p[a], p[b]) == (a, b))) {
            res.on_pairs = false;
        }
    }
    res
}

/// The nine sets `P_j` together with the pair types that certify them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub assignment: BTreeMap<ConicId, u8>,
    /// Intersection type of each `G'`-orbit representative.
    pub checked_pairs: Vec<(PairOrbit, PairIntersectionType)>,
}

impl Partition {
    pub fn fibre(&self, set: u8) -> Vec<ConicId> {
        self.assignment.iter().filter(|(_, s)| **s == set).map(|(id, _)| *id).collect()
    }
}

/// Assigns each conic to its base point and checks, on one pair per
/// `G'`-orbit, that conics of one set meet with a tacnode and two nodes
/// while conics of different sets meet transversally.
pub fn partition(cat: &FermatCatalog) -> Result<Partition> {
    let mut assignment = BTreeMap::new();
    for c in &cat.conics {
        let on: Vec<usize> = (0..cat.base_points.len()).filter(|&j| cat.base_points[j].lies_on(&c.conic)).collect();
        match (on.as_slice(), c.id) {
            ([j], ConicId::Fermat { set, .. }) if *j + 1 == set as usize => {
                assignment.insert(c.id, set);
            }
            _ => return Err(Error::Inconsistent(format!("conic {} is not filed under its base point", c.id))),
        }
    }
    for set in 1..=cat.base_points.len() as u8 {
        if assignment.values().filter(|s| **s == set).count() != 3 {
            return Err(Error::Inconsistent(format!("set P{set} does not hold three conics")));
        }
    }
    let mut checked_pairs = Vec::new();
    for orbit in pair_orbits(cat, Group::GPrime) {
        let (a, b) = orbit.representative;
        let ty = conic_pair_type(&cat.conic(a).unwrap().conic, &cat.conic(b).unwrap().conic)?;
        let expected = if orbit.same_set { PairSummary::TacnodePlusTwoNodes } else { PairSummary::FourNodes };
        if ty.summary != expected {
            return Err(Error::Inconsistent(format!("pair {a}, {b} meets as {:?}", ty.multiplicity_pattern)));
        }
        checked_pairs.push((orbit, ty));
    }
    Ok(Partition { assignment, checked_pairs })
}

/// A reduced curve given by its components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrangement {
    pub components: Vec<HomPoly>,
    pub product: HomPoly,
}

impl Arrangement {
    pub fn degree(&self) -> u32 {
        self.product.degree()
    }
}

/// Multiplies the components after checking that each is squarefree and
/// that no two share a factor.
pub fn build(components: &[HomPoly]) -> Result<Arrangement> {
    if components.is_empty() {
        return Err(Error::InvalidArgument("an arrangement needs at least one component".into()));
    }
    for (i, c) in components.iter().enumerate() {
        if c.degree() == 0 {
            return Err(Error::InvalidArgument(format!("component {i} is constant")));
        }
    }
    for i in 0..components.len() {
        for j in i + 1..components.len() {
            if components[i].proportional(&components[j]) {
                return Err(Error::RepeatedComponent(i, j));
            }
            if share_component(&components[i], &components[j]) {
                return Err(Error::CommonFactor(i, j));
            }
        }
    }
    if let Some(i) = components.iter().position(|c| !is_squarefree(c)) {
        return Err(Error::NotSquarefree(i));
    }
    let product = components[1..].iter().fold(components[0].clone(), |acc, c| &acc * c);
    Ok(Arrangement { components: components.to_vec(), product })
}

/// A singular point outside K where two smooth components meet with
/// intersection multiplicity `m`; its type is `A_(2m-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugateSingularity {
    pub components: (usize, usize),
    pub intersection_multiplicity: usize,
    #[serde(rename = "type")]
    pub kind: SingularityType,
    pub tjurina: usize,
}

/// Local singularities of an arrangement. K-rational points are
/// classified directly on the product; the remaining ones come from
/// pairwise intersections and are typed by their intersection
/// multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub rational: Vec<SingularityReport>,
    pub conjugate: Vec<ConjugateSingularity>,
}

impl Census {
    pub fn all_rational(&self) -> bool {
        self.conjugate.is_empty()
    }

    pub fn tjurina_sum(&self) -> usize {
        self.rational.iter().map(|r| r.tjurina).sum::<usize>() + self.conjugate.iter().map(|c| c.tjurina).sum::<usize>()
    }

    /// Number of points of each type.
    pub fn counts(&self) -> BTreeMap<SingularityType, usize> {
        let mut m = BTreeMap::new();
        for k in self.rational.iter().map(|r| r.kind).chain(self.conjugate.iter().map(|c| c.kind)) {
            *m.entry(k).or_insert(0) += 1;
        }
        m
    }

    /// Counts rendered as e.g. `J_2_0 + 3xA_11 + 6xA_1`, largest types first.
    pub fn summary(&self) -> String {
        let mut parts: Vec<(SingularityType, usize)> = self.counts().into_iter().collect();
        parts.sort_by(|a, b| rank(b.0).cmp(&rank(a.0)));
        parts
            .into_iter()
            .map(|(k, n)| if n == 1 { k.to_string() } else { format!("{n}x{k}") })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn rank(k: SingularityType) -> (u32, u32) {
    match k {
        SingularityType::Unrecognized => (3, 0),
        SingularityType::J20 => (2, 0),
        SingularityType::A(n) => (1, n),
    }
}

pub fn census(arr: &Arrangement) -> Result<Census> {
    let mut points: Vec<ProjPoint> = Vec::new();
    let mut conjugate = Vec::new();
    for (i, c) in arr.components.iter().enumerate() {
        let s = singular_points(c)?;
        if s.residual_degree > 0 {
            return Err(Error::InvalidArgument(format!("component {i} has singular points outside K")));
        }
        points.extend(s.points);
    }
    for i in 0..arr.components.len() {
        for j in i + 1..arr.components.len() {
            let x = intersect_curves(&arr.components[i], &arr.components[j])?;
            points.extend(x.points.into_iter().map(|(p, _)| p));
            for m in x.outside {
                let k = 2 * m - 1;
                conjugate.push(ConjugateSingularity {
                    components: (i, j),
                    intersection_multiplicity: m,
                    kind: SingularityType::A(k as u32),
                    tjurina: k,
                });
            }
        }
    }
    points.sort_by(|a, b| a.cmp_coords(b));
    points.dedup();
    // Components missing `p` are units in the local ring and change none of
    // the local invariants, so only the ones through `p` are multiplied.
    let rational = points
        .iter()
        .map(|p| {
            let local = arr.components.iter().filter(|c| p.lies_on(c)).fold(None, |acc: Option<HomPoly>, c| {
                Some(acc.map_or_else(|| c.clone(), |a| &a * c))
            });
            classify(local.as_ref().unwrap_or(&arr.product), p)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Census { rational, conjugate })
}

/// Certificate and census of an arrangement, with the sum of the local
/// Tjurina numbers checked against the global one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementReport {
    pub certificate: FreenessCertificate,
    pub census: Census,
}

pub fn analyze(arr: &Arrangement) -> Result<ArrangementReport> {
    let certificate = certify(&arr.product)?;
    let census = census(arr)?;
    if census.tjurina_sum() != certificate.tjurina {
        return Err(Error::Inconsistent(format!(
            "local Tjurina numbers sum to {} but the global value is {}",
            census.tjurina_sum(),
            certificate.tjurina
        )));
    }
    Ok(ArrangementReport { certificate, census })
}

/// The arrangement of a catalog cubic with the selected conics. Rejects
/// mixed curves and repeated selections.
pub fn select(curve: Curve, ids: &[ConicId]) -> Result<Arrangement> {
    let mut seen = BTreeSet::new();
    for id in ids {
        if id.curve() != curve {
            return Err(Error::InvalidSelection(format!("{id} is not a {curve} conic")));
        }
        if !seen.insert(*id) {
            return Err(Error::InvalidSelection(format!("{id} selected twice")));
        }
    }
    let (cubic, conics): (HomPoly, Vec<HomPoly>) = match curve {
        Curve::Nodal => {
            let cat = nodal_catalog();
            let qs = ids.iter().map(|id| cat.conic(*id).unwrap().conic.clone()).collect();
            (cat.curve, qs)
        }
        Curve::Fermat => {
            let cat = fermat_catalog();
            let qs = ids.iter().map(|id| cat.conic(*id).unwrap().conic.clone()).collect();
            (cat.curve, qs)
        }
    };
    let mut components = vec![cubic];
    components.extend(conics);
    build(&components)
}
