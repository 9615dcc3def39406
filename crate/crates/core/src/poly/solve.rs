//! K-rational common zeros of homogeneous polynomials.

use crate::error::{Error, Result};
use crate::field::FieldK;
use crate::poly::resultant::{resultant, BinaryForm};
use crate::poly::{gcd_univariate, HomPoly, LinearChange, ProjPoint, UniPoly, Var};

/// Common zeros found over K, plus the number of projected solutions that
/// lie outside K, counted with multiplicity. For three or more equations
/// the projection is the gcd of two resultants of auxiliary combinations,
/// so the residual is an upper bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroSet {
    pub points: Vec<ProjPoint>,
    pub residual_degree: usize,
}

/// The `i`-th coordinate change of a fixed sequence of unimodular integer
/// shears; its third column is the projection centre.
pub fn generic_change(i: usize) -> LinearChange {
    const CENTRES: [(i64, i64); 8] = [(1, 2), (2, -1), (-3, 1), (1, 5), (4, 3), (-2, 7), (5, -4), (3, 11)];
    let (a, b) = CENTRES[i % CENTRES.len()];
    let s = (i / CENTRES.len()) as i64;
    LinearChange::from_ints([[1, s, a], [0, 1, b], [0, 0, 1]]).expect("unimodular")
}

/// Restriction of `f` to the line through `(x0 : y0 : 0)` and `(0 : 0 : 1)`,
/// as a polynomial in `z` with `(x, y) = (x0, y0)`.
pub fn restrict_to_fibre(f: &HomPoly, x0: &FieldK, y0: &FieldK) -> UniPoly {
    let d = f.degree() as usize;
    let mut c = vec![FieldK::zero(); d + 1];
    for (m, k) in f.terms() {
        let [a, b, e] = m.exponents;
        let t = &(&x0.pow(a) * &y0.pow(b)) * k;
        c[e as usize] += &t;
    }
    UniPoly::new(c)
}

/// All K-rational common zeros of `polys` (at least two, not all sharing a
/// component).
pub fn common_zeros(polys: &[HomPoly]) -> Result<ZeroSet> {
    let polys: Vec<&HomPoly> = polys.iter().filter(|p| !p.is_zero()).collect();
    if polys.len() < 2 {
        return Err(Error::InvalidArgument("need at least two nonzero equations".into()));
    }
    if polys.iter().any(|p| p.degree() == 0) {
        return Ok(ZeroSet { points: Vec::new(), residual_degree: 0 });
    }
    let mut zero_resultants = 0;
    for attempt in 0..32 {
        let t = generic_change(attempt);
        let moved: Vec<HomPoly> = polys.iter().map(|p| p.substitute(&t)).collect();
        let (g1, others) = if moved.len() == 2 {
            (moved[0].clone(), vec![moved[1].clone()])
        } else {
            let (a, b) = combine(&moved, attempt, 0)?;
            let (_, c) = combine(&moved, attempt, 1)?;
            (a, vec![b, c])
        };
        // The centre (0 : 0 : 1) must lie off the first auxiliary curve.
        if g1.degree_in(Var::Z) != g1.degree() {
            continue;
        }
        let rs: Vec<HomPoly> = others.iter().map(|g| resultant(&g1, g, Var::Z)).collect();
        if rs.iter().any(HomPoly::is_zero) {
            zero_resultants += 1;
            if moved.len() == 2 || zero_resultants >= 3 {
                return Err(Error::CommonComponent);
            }
            continue;
        }
        let projection = rs[1..].iter().fold(BinaryForm::new(rs[0].clone(), Var::X, Var::Y), |acc, r| {
            acc.gcd(&BinaryForm::new(r.clone(), Var::X, Var::Y))
        });
        let (roots, mut residual) = projection.roots_in_k();
        let mut points = Vec::new();
        for root in roots {
            let mut g = UniPoly::zero();
            for p in &moved {
                g = gcd_univariate(&g, &restrict_to_fibre(p, &root.u, &root.v));
            }
            if g.is_zero() {
                return Err(Error::CommonComponent);
            }
            let zs = g.roots_in_k();
            residual += g.degree().unwrap_or(0).saturating_sub(zs.len());
            for z in zs {
                let q = ProjPoint::new([root.u.clone(), root.v.clone(), z])?;
                points.push(t.apply(&q));
            }
        }
        points.sort_by(|a, b| a.cmp_coords(b));
        points.dedup();
        return Ok(ZeroSet { points, residual_degree: residual });
    }
    Err(Error::CapExceeded { cap: 32 })
}

/// True when the two curves share a component.
pub fn share_component(f: &HomPoly, g: &HomPoly) -> bool {
    if f.is_zero() || g.is_zero() {
        return true;
    }
    if f.degree() == 0 || g.degree() == 0 {
        return false;
    }
    for attempt in 0.. {
        let t = generic_change(attempt);
        let (a, b) = (f.substitute(&t), g.substitute(&t));
        if a.degree_in(Var::Z) == a.degree() {
            return resultant(&a, &b, Var::Z).is_zero();
        }
    }
    unreachable!()
}

/// Two seeded linear combinations of equations of possibly different
/// degrees (lower-degree ones are multiplied by powers of `x + y + z`).
fn combine(polys: &[HomPoly], attempt: usize, salt: usize) -> Result<(HomPoly, HomPoly)> {
    let d = polys.iter().map(HomPoly::degree).max().unwrap();
    let ell: HomPoly = "x + y + z".parse()?;
    let lifted: Vec<HomPoly> = polys.iter().map(|p| p * &ell.pow(d - p.degree())).collect();
    let mut g1 = HomPoly::zero(d);
    let mut g2 = HomPoly::zero(d);
    for (i, p) in lifted.iter().enumerate() {
        let a = FieldK::from_int(1 + ((i + attempt) % 5) as i64);
        let b = FieldK::from_int(if i % 2 == 0 { 1 } else { -1 } * (2 + ((3 * i + attempt + 5 * salt) % 7) as i64 + salt as i64));
        g1 = g1.checked_add(&p.scale(&a))?;
        g2 = g2.checked_add(&p.scale(&b))?;
    }
    Ok((g1, g2))
}

/// True when `f` has no repeated factor. A repeated factor divides every
/// directional derivative; a reduced curve shares a component with the
/// derivative along `v` only through lines passing through `v`, and no
/// line contains three of the sample directions below, so some direction
/// avoids every line component.
pub fn is_squarefree(f: &HomPoly) -> bool {
    if f.is_zero() {
        return false;
    }
    if f.degree() <= 1 {
        return true;
    }
    let grad = f.gradient();
    (1..=2 * f.degree() as i64 + 1).any(|t| {
        let v = [FieldK::one(), FieldK::from_int(t), FieldK::from_int(t * t)];
        let mut d = HomPoly::zero(f.degree() - 1);
        for (g, c) in grad.iter().zip(&v) {
            d = &d + &g.scale(c);
        }
        !share_component(f, &d)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> HomPoly {
        s.parse().unwrap()
    }

    #[test]
    fn line_and_conic() {
        let z = common_zeros(&[p("x^2 - y*z"), p("x - y")]).unwrap();
        let want = vec![ProjPoint::from_ints(0, 0, 1).unwrap(), ProjPoint::from_ints(1, 1, 1).unwrap()];
        assert_eq!(z.points, want);
        assert_eq!(z.residual_degree, 0);
    }

    #[test]
    fn irrational_points_are_counted() {
        // x^2 + z^2 = 0 on y = 0 has no K-point (i is not in K).
        let z = common_zeros(&[p("x^2 + z^2 - y^2"), p("y")]).unwrap();
        assert!(z.points.is_empty());
        assert_eq!(z.residual_degree, 2);
    }

    #[test]
    fn gradient_of_the_nodal_cubic() {
        let f = p("x^3 + y^3 - x*y*z");
        let z = common_zeros(&f.gradient()).unwrap();
        assert_eq!(z.points, vec![ProjPoint::from_ints(0, 0, 1).unwrap()]);
    }

    #[test]
    fn squarefree_detection() {
        assert!(is_squarefree(&p("x*y*z")));
        assert!(is_squarefree(&p("x^3 + y^3 - x*y*z")));
        assert!(!is_squarefree(&p("x^2*y")));
        assert!(!is_squarefree(&p("(x^2 - y*z)^2")));
        assert!(is_squarefree(&p("(x - y)*(x - 2*y)*(x + y)*(x + 3*y)")));
    }

    #[test]
    fn shared_component_is_reported() {
        assert_eq!(common_zeros(&[p("x*y"), p("x*z")]), Err(Error::CommonComponent));
    }
}
