//! Singular points, local Tjurina and Milnor numbers, and intersections of
//! pairs of curves.
//!
//! Local algebras are measured by truncation: for an ideal `I` of
//! `K[u, v]` at the origin, `dim K[u, v] / (I + m^N)` grows with `N` until
//! `m^N` lies in `I + m^(N+1)`, after which Nakayama's lemma gives
//! `m^N ⊆ I` locally and the value is final. The search compares `N` and
//! `N + 1` for `N = 8, 12, 16, ...` up to 40.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::FieldK;
use crate::linalg::Echelon;
use crate::poly::resultant::{resultant, BinaryForm};
use crate::poly::solve::{common_zeros, generic_change, restrict_to_fibre};
use crate::poly::{gcd_univariate, HomPoly, LinearChange, ProjPoint, Var};

/// First truncation order tried for local algebras.
pub const FIRST_ORDER: u32 = 8;
/// Increment between truncation orders.
pub const ORDER_STEP: u32 = 4;
/// Largest truncation order tried.
pub const ORDER_CAP: u32 = 40;

/// Affine polynomial in local coordinates `(u, v)`.
type Germ = BTreeMap<(u32, u32), FieldK>;

fn germ_of(f: &HomPoly) -> Germ {
    f.terms().map(|(m, c)| ((m.exponents[0], m.exponents[1]), c.clone())).collect()
}

/// Coordinates `(u, v, w)` with `p = (0 : 0 : 1)`: the chart coordinate of
/// `p` becomes `w`, the other two are translated.
fn centring_change(p: &ProjPoint) -> LinearChange {
    let c = p.chart();
    let q = p.chart_coords();
    let others: Vec<usize> = (0..3).filter(|&i| i != c).collect();
    let mut m: [[FieldK; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| FieldK::zero()));
    m[others[0]][0] = FieldK::one();
    m[others[0]][2] = q[others[0]].clone();
    m[others[1]][1] = FieldK::one();
    m[others[1]][2] = q[others[1]].clone();
    m[c][2] = FieldK::one();
    LinearChange::new(m).expect("unimodular centring")
}

/// Local equation of `f` at `p` and its two partial derivatives.
fn local_equations(f: &HomPoly, p: &ProjPoint) -> [Germ; 3] {
    let g = f.substitute(&centring_change(p));
    [germ_of(&g), germ_of(&g.partial(Var::X)), germ_of(&g.partial(Var::Y))]
}

fn check_singular(f: &HomPoly, p: &ProjPoint) -> Result<()> {
    if !p.lies_on(f) {
        return Err(Error::PointNotOnCurve);
    }
    if f.gradient().iter().any(|g| !g.evaluate(p).is_zero()) {
        return Err(Error::NotSingular);
    }
    Ok(())
}

fn index(a: u32, b: u32) -> usize {
    let s = (a + b) as usize;
    s * (s + 1) / 2 + b as usize
}

/// `dim K[u, v] / (gens + m^n)`.
fn truncated_colength(gens: &[&Germ], n: u32) -> usize {
    let width = index(n, 0);
    let mut span = Echelon::new(width);
    for g in gens {
        let order = g.keys().map(|(a, b)| a + b).min().unwrap_or(n);
        for s in 0..n.saturating_sub(order) {
            for b in 0..=s {
                let a = s - b;
                let mut row = vec![FieldK::zero(); width];
                for ((i, j), c) in g.iter() {
                    if i + j + s < n {
                        row[index(i + a, j + b)] = c.clone();
                    }
                }
                span.insert(row);
            }
        }
    }
    width - span.rank()
}

fn colength(gens: &[&Germ]) -> Result<usize> {
    let mut n = FIRST_ORDER;
    while n <= ORDER_CAP {
        let a = truncated_colength(gens, n);
        if a == truncated_colength(gens, n + 1) {
            return Ok(a);
        }
        n += ORDER_STEP;
    }
    Err(Error::NonIsolated { cap: ORDER_CAP })
}

/// Local Tjurina number `dim O_p / (g, g_u, g_v)`.
pub fn local_tjurina(f: &HomPoly, p: &ProjPoint) -> Result<usize> {
    check_singular(f, p)?;
    let [g, gu, gv] = local_equations(f, p);
    colength(&[&g, &gu, &gv])
}

/// `dim K[u, v] / (g, g_u, g_v, m^n)` for a fixed truncation order `n`.
pub fn truncated_tjurina(f: &HomPoly, p: &ProjPoint, n: u32) -> Result<usize> {
    check_singular(f, p)?;
    let [g, gu, gv] = local_equations(f, p);
    Ok(truncated_colength(&[&g, &gu, &gv], n))
}

/// Local Milnor number `dim O_p / (g_u, g_v)`.
pub fn local_milnor(f: &HomPoly, p: &ProjPoint) -> Result<usize> {
    check_singular(f, p)?;
    let [_, gu, gv] = local_equations(f, p);
    colength(&[&gu, &gv])
}

/// Order of the local equation at `p` (0 off the curve).
pub fn multiplicity(f: &HomPoly, p: &ProjPoint) -> u32 {
    let [g, _, _] = local_equations(f, p);
    g.keys().map(|(a, b)| a + b).min().unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularityType {
    A(u32),
    J20,
    Unrecognized,
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityType::A(k) => write!(f, "A_{k}"),
            SingularityType::J20 => f.write_str("J_2_0"),
            SingularityType::Unrecognized => f.write_str("Unrecognized"),
        }
    }
}

impl std::str::FromStr for SingularityType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "J_2_0" => Ok(SingularityType::J20),
            "Unrecognized" => Ok(SingularityType::Unrecognized),
            _ => s
                .strip_prefix("A_")
                .and_then(|k| k.parse().ok())
                .map(SingularityType::A)
                .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown singularity type {s:?}") }),
        }
    }
}

impl Serialize for SingularityType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SingularityType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Local invariants of a singular point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityReport {
    pub point: ProjPoint,
    pub tjurina: usize,
    pub milnor: usize,
    pub multiplicity: u32,
    #[serde(rename = "type")]
    pub kind: SingularityType,
}

/// `A_k` for double points with `tau = mu = k`, `J_2_0` for triple points
/// with `tau = mu = 10`.
pub fn classify(f: &HomPoly, p: &ProjPoint) -> Result<SingularityReport> {
    let tjurina = local_tjurina(f, p)?;
    let milnor = local_milnor(f, p)?;
    let multiplicity = multiplicity(f, p);
    let kind = match (multiplicity, tjurina == milnor) {
        (2, true) => SingularityType::A(tjurina as u32),
        (3, true) if tjurina == 10 => SingularityType::J20,
        _ => SingularityType::Unrecognized,
    };
    Ok(SingularityReport { point: p.clone(), tjurina, milnor, multiplicity, kind })
}

/// K-rational singular points, with an upper bound on the number of
/// singular points outside K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularSet {
    pub points: Vec<ProjPoint>,
    pub residual_degree: usize,
}

pub fn singular_points(f: &HomPoly) -> Result<SingularSet> {
    if f.degree() < 2 {
        return Ok(SingularSet { points: Vec::new(), residual_degree: 0 });
    }
    let z = common_zeros(&f.gradient())?;
    Ok(SingularSet { points: z.points, residual_degree: z.residual_degree })
}

/// Intersection of two curves without common components: the K-rational
/// points with their intersection multiplicities, and the multiplicities
/// of the points outside K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveIntersection {
    pub points: Vec<(ProjPoint, usize)>,
    pub outside: Vec<usize>,
}

impl CurveIntersection {
    /// All multiplicities, sorted descending.
    pub fn pattern(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.points.iter().map(|(_, m)| *m).chain(self.outside.iter().copied()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

/// Projection of the intersection from the centre of the `attempt`-th
/// coordinate change; `None` when the centre lies on one of the curves or
/// two intersection points share a fibre.
fn project_intersection(f: &HomPoly, g: &HomPoly, attempt: usize) -> Result<Option<CurveIntersection>> {
    let t = generic_change(attempt);
    let (a, b) = (f.substitute(&t), g.substitute(&t));
    if a.degree_in(Var::Z) != a.degree() || b.degree_in(Var::Z) != b.degree() {
        return Ok(None);
    }
    let r = resultant(&a, &b, Var::Z);
    if r.is_zero() {
        return Err(Error::CommonComponent);
    }
    let (p, inf) = BinaryForm::new(r, Var::X, Var::Y).dehomogenize();
    let mut fibres: Vec<(FieldK, FieldK, usize)> = Vec::new();
    let mut outside = Vec::new();
    for (s, mult) in p.squarefree_decomposition() {
        let roots = s.roots_in_k();
        for _ in roots.len()..s.degree().unwrap() {
            outside.push(mult);
        }
        fibres.extend(roots.into_iter().map(|u| (u, FieldK::one(), mult)));
    }
    if inf > 0 {
        fibres.push((FieldK::one(), FieldK::zero(), inf));
    }
    let mut points = Vec::new();
    for (u, v, mult) in fibres {
        let h = gcd_univariate(&restrict_to_fibre(&a, &u, &v), &restrict_to_fibre(&b, &u, &v));
        if h.degree() != Some(1) {
            return Ok(None);
        }
        let z = -&h.coeffs()[0];
        points.push((t.apply(&ProjPoint::new([u, v, z])?), mult));
    }
    points.sort_by(|x, y| x.0.cmp_coords(&y.0));
    outside.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Some(CurveIntersection { points, outside }))
}

/// Intersection multiplicities read off resultant root multiplicities.
/// Two projection centres must give the same multiplicity pattern before
/// the result is accepted.
pub fn intersect_curves(f: &HomPoly, g: &HomPoly) -> Result<CurveIntersection> {
    let mut previous: Option<CurveIntersection> = None;
    for attempt in 0..32 {
        let Some(cur) = project_intersection(f, g, attempt)? else {
            continue;
        };
        if let Some(prev) = previous {
            if prev.pattern() == cur.pattern() && prev.points.len() == cur.points.len() {
                return Ok(prev);
            }
        }
        previous = Some(cur);
    }
    Err(Error::CapExceeded { cap: 32 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairSummary {
    FourNodes,
    TacnodePlusTwoNodes,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairIntersectionType {
    pub multiplicity_pattern: Vec<usize>,
    pub summary: PairSummary,
}

/// Intersection pattern of two distinct smooth conics.
pub fn conic_pair_type(q: &HomPoly, r: &HomPoly) -> Result<PairIntersectionType> {
    if q.degree() != 2 || r.degree() != 2 {
        return Err(Error::InvalidArgument("expected two conics".into()));
    }
    let pattern = intersect_curves(q, r)?.pattern();
    let summary = match pattern.as_slice() {
        [1, 1, 1, 1] => PairSummary::FourNodes,
        [2, 1, 1] => PairSummary::TacnodePlusTwoNodes,
        _ => PairSummary::Other,
    };
    Ok(PairIntersectionType { multiplicity_pattern: pattern, summary })
}
