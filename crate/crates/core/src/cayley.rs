//! Hessian covariants, osculating conics, contact orders and sextactic
//! points of plane curves.
//!
//! Notation: `f` has degree `d`, `h` is its Hessian. `A` is the vector of
//! the six distinct adjugate entries of the second-derivative matrix of `f`
//! and `B = (h_xx, h_yy, h_zz, 2h_yz, 2h_xz, 2h_xy)`. Then
//! `omega = A . B`, `(omega_f)_w = d_w(A) . B`, `(omega_h)_w = A . d_w(B)`,
//! `psi` is minus the determinant of the Hessian matrix of `f` bordered by
//! the gradient of `h`, and `lambda = -3 omega h + 4 psi`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldK;
use crate::linalg;
use crate::poly::solve::{common_zeros, share_component};
use crate::poly::{det3, det4, monomials_of_degree, HomPoly, ProjPoint, Var};

/// Truncation orders tried by [`contact_order`].
pub const SERIES_ORDERS: [usize; 4] = [8, 16, 32, 64];

fn second_partials(f: &HomPoly) -> [[HomPoly; 3]; 3] {
    let g = f.gradient();
    std::array::from_fn(|i| std::array::from_fn(|j| g[i].partial(Var::from_index(j))))
}

/// `a b - c d`.
fn cross(a: &HomPoly, b: &HomPoly, c: &HomPoly, d: &HomPoly) -> HomPoly {
    &(a * b) - &(c * d)
}

fn adjugate_entries(f: &HomPoly) -> [HomPoly; 6] {
    let m = second_partials(f);
    [
        cross(&m[1][1], &m[2][2], &m[1][2], &m[1][2]),
        cross(&m[0][0], &m[2][2], &m[0][2], &m[0][2]),
        cross(&m[0][0], &m[1][1], &m[0][1], &m[0][1]),
        cross(&m[0][1], &m[0][2], &m[0][0], &m[1][2]),
        cross(&m[0][1], &m[1][2], &m[1][1], &m[0][2]),
        cross(&m[0][2], &m[1][2], &m[2][2], &m[0][1]),
    ]
}

fn doubled_second_partials(h: &HomPoly) -> [HomPoly; 6] {
    let m = second_partials(h);
    let two = FieldK::from_int(2);
    [
        m[0][0].clone(),
        m[1][1].clone(),
        m[2][2].clone(),
        m[1][2].scale(&two),
        m[0][2].scale(&two),
        m[0][1].scale(&two),
    ]
}

fn pairing(a: &[HomPoly; 6], b: &[HomPoly; 6]) -> HomPoly {
    let mut acc = &a[0] * &b[0];
    for i in 1..6 {
        acc = acc.checked_add(&(&a[i] * &b[i])).expect("homogeneous pairing");
    }
    acc
}

/// Determinant of the matrix of second partials; degree `3(d - 2)`.
pub fn hessian(f: &HomPoly) -> HomPoly {
    if f.degree() < 2 {
        return HomPoly::zero(0);
    }
    let m = second_partials(f);
    det3(&m).expect("second partials are homogeneous of equal degree")
}

/// The six-term pairing of the adjugate entries of `f` with the second
/// partials of `h`.
pub fn omega(f: &HomPoly, h: &HomPoly) -> HomPoly {
    pairing(&adjugate_entries(f), &doubled_second_partials(h))
}

/// `(omega_f)_w`: the pairing with the adjugate entries differentiated by `w`.
pub fn omega_f(f: &HomPoly, h: &HomPoly) -> [HomPoly; 3] {
    let a = adjugate_entries(f);
    let b = doubled_second_partials(h);
    std::array::from_fn(|w| {
        let v = Var::from_index(w);
        pairing(&std::array::from_fn(|i| a[i].partial(v)), &b)
    })
}

/// `(omega_h)_w`: the pairing with the second partials of `h` differentiated by `w`.
pub fn omega_h(f: &HomPoly, h: &HomPoly) -> [HomPoly; 3] {
    let a = adjugate_entries(f);
    let b = doubled_second_partials(h);
    std::array::from_fn(|w| {
        let v = Var::from_index(w);
        pairing(&a, &std::array::from_fn(|i| b[i].partial(v)))
    })
}

/// Minus the determinant of the Hessian matrix of `f` bordered by
/// `(0, h_x, h_y, h_z)`.
pub fn psi(f: &HomPoly, h: &HomPoly) -> HomPoly {
    let m = second_partials(f);
    let g = h.gradient();
    if g.iter().all(HomPoly::is_zero) || m.iter().flatten().all(HomPoly::is_zero) {
        return HomPoly::zero(0);
    }
    let zero = HomPoly::zero(0);
    let rows: [[HomPoly; 4]; 4] = std::array::from_fn(|i| {
        std::array::from_fn(|j| match (i, j) {
            (0, 0) => zero.clone(),
            (0, j) => g[j - 1].clone(),
            (i, 0) => g[i - 1].clone(),
            (i, j) => m[i - 1][j - 1].clone(),
        })
    });
    -&det4(&rows).expect("bordered Hessian is homogeneous")
}

/// `lambda = -3 omega h + 4 psi`.
pub fn lambda(omega: &HomPoly, h: &HomPoly, psi: &HomPoly) -> HomPoly {
    let a = (omega * h).scale(&FieldK::from_int(-3));
    a.checked_add(&psi.scale(&FieldK::from_int(4))).expect("lambda terms share a degree")
}

/// Jacobian determinant of `f`, `h` and a gradient-like triple.
fn jacobian_with(f: &HomPoly, h: &HomPoly, t: &[HomPoly; 3]) -> HomPoly {
    det3(&[f.gradient(), h.gradient(), t.clone()]).unwrap_or_else(|_| HomPoly::zero(0))
}

/// The second Hessian, a covariant of degree `12d - 27` whose common zeros
/// with `f` contain the sextactic points:
/// `c1 h Jac(f, h, omega_h) + c2 h Jac(f, h, omega_f) - 20 (d-2)^2 Jac(f, h, psi)`
/// with `c1 = 12d^2 - 54d + 57` and `c2 = (d - 2)(12d - 27)`.
pub fn second_hessian(f: &HomPoly) -> Result<HomPoly> {
    let d = f.degree() as i64;
    if d < 3 {
        return Err(Error::InvalidArgument(format!("second Hessian needs degree >= 3, got {d}")));
    }
    let data = CayleyData::new(f)?;
    let h = &data.h;
    let c1 = FieldK::from_int(12 * d * d - 54 * d + 57);
    let c2 = FieldK::from_int((d - 2) * (12 * d - 27));
    let c3 = FieldK::from_int(-20 * (d - 2) * (d - 2));
    let t1 = (h * &jacobian_with(f, h, &omega_h(f, h))).scale(&c1);
    let t2 = (h * &jacobian_with(f, h, &omega_f(f, h))).scale(&c2);
    let t3 = jacobian_with(f, h, &data.psi.gradient()).scale(&c3);
    let out = t1.checked_add(&t2)?.checked_add(&t3)?;
    if out.is_zero() {
        return Ok(HomPoly::zero((12 * d - 27) as u32));
    }
    Ok(out)
}

/// The covariants of a curve that enter the osculating conic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyData {
    pub f: HomPoly,
    pub h: HomPoly,
    pub omega: HomPoly,
    pub psi: HomPoly,
    pub lambda: HomPoly,
}

impl CayleyData {
    pub fn new(f: &HomPoly) -> Result<Self> {
        if f.degree() < 3 {
            return Err(Error::InvalidArgument(format!("expected degree >= 3, got {}", f.degree())));
        }
        let h = hessian(f);
        let omega = omega(f, &h);
        let psi = psi(f, &h);
        let lambda = lambda(&omega, &h, &psi);
        Ok(CayleyData { f: f.clone(), h, omega, psi, lambda })
    }
}

fn check_smooth_point(f: &HomPoly, p: &ProjPoint) -> Result<[FieldK; 3]> {
    if !p.lies_on(f) {
        return Err(Error::PointNotOnCurve);
    }
    let g: [FieldK; 3] = std::array::from_fn(|i| f.gradient()[i].evaluate(p));
    if g.iter().all(FieldK::is_zero) {
        return Err(Error::SingularPoint);
    }
    Ok(g)
}

/// `sum c_i x_i` as a linear form.
fn linear_form(c: &[FieldK; 3]) -> HomPoly {
    let mut l = HomPoly::zero(1);
    for (i, v) in c.iter().enumerate() {
        l = l.checked_add(&HomPoly::var(Var::from_index(i)).scale(v)).expect("linear");
    }
    l
}

/// Ingredients of the closed-form osculating conic at `p`: the polar conic
/// `sum f_ij(p) x_i x_j`, the tangent `D_f = sum f_i(p) x_i`, the form
/// `D_h = sum h_i(p) x_i`, and the values `h(p)`, `lambda(p)`.
struct ConicTerms {
    polar: HomPoly,
    df: HomPoly,
    dh: HomPoly,
    h: FieldK,
    lambda: FieldK,
}

fn conic_terms(f: &HomPoly, p: &ProjPoint) -> Result<ConicTerms> {
    let grad = check_smooth_point(f, p)?;
    let data = CayleyData::new(f)?;
    let h = data.h.evaluate(p);
    if h.is_zero() {
        return Err(Error::InflectionPoint);
    }
    let m = second_partials(f);
    let mut polar = HomPoly::zero(2);
    for i in 0..3 {
        for j in 0..3 {
            let xi = HomPoly::var(Var::from_index(i));
            let xj = HomPoly::var(Var::from_index(j));
            polar = polar.checked_add(&(&xi * &xj).scale(&m[i][j].evaluate(p)))?;
        }
    }
    let hg: [FieldK; 3] = std::array::from_fn(|i| data.h.gradient()[i].evaluate(p));
    Ok(ConicTerms { polar, df: linear_form(&grad), dh: linear_form(&hg), h, lambda: data.lambda.evaluate(p) })
}

/// The osculating conic at a smooth non-inflection point `p`:
/// `P(p) - (2 D_h / (3 h(p)) + lambda(p) D_f / (9 h(p)^3)) D_f` with `P(p)`
/// the polar conic. Returned normalised up to scalar.
pub fn osculating_conic(f: &HomPoly, p: &ProjPoint) -> Result<HomPoly> {
    let t = conic_terms(f, p)?;
    // Cleared of denominators: 9 h^3 P - 6 h^2 D_h D_f - lambda D_f^2.
    let h2 = &t.h * &t.h;
    let a = t.polar.scale(&(&FieldK::from_int(9) * &(&h2 * &t.h)));
    let b = (&t.dh * &t.df).scale(&(&FieldK::from_int(-6) * &h2));
    let c = (&t.df * &t.df).scale(&-&t.lambda);
    Ok(a.checked_add(&b)?.checked_add(&c)?.normalize_up_to_scalar())
}

/// The osculating-conic expression with `lambda(p)` entering unscaled:
/// `P(p) - (2 D_h / (3 h(p)) + lambda(p) D_f) D_f`. Kept to document that
/// this normalisation does not give contact order 5.
pub fn osculating_conic_unscaled(f: &HomPoly, p: &ProjPoint) -> Result<HomPoly> {
    let t = conic_terms(f, p)?;
    let a = t.polar.scale(&FieldK::from_int(3)).scale(&t.h);
    let b = (&t.dh * &t.df).scale(&FieldK::from_int(-2));
    let c = (&t.df * &t.df).scale(&(&(&FieldK::from_int(-3) * &t.h) * &t.lambda));
    Ok(a.checked_add(&b)?.checked_add(&c)?.normalize_up_to_scalar())
}

/// Truncated power series with coefficients in K.
mod series {
    use crate::error::{Error, Result};
    use crate::field::FieldK;

    pub fn mul(a: &[FieldK], b: &[FieldK], n: usize) -> Vec<FieldK> {
        let mut out = vec![FieldK::zero(); n];
        for (i, x) in a.iter().enumerate().take(n) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(n - i) {
                if !y.is_zero() {
                    out[i + j] += &(x * y);
                }
            }
        }
        out
    }

    pub fn inv(a: &[FieldK], n: usize) -> Result<Vec<FieldK>> {
        let a0 = a.first().ok_or(Error::DivisionByZero)?.inv()?;
        let mut out = vec![FieldK::zero(); n];
        out[0] = a0.clone();
        for k in 1..n {
            let mut s = FieldK::zero();
            for j in 1..=k.min(a.len() - 1) {
                if !a[j].is_zero() && !out[k - j].is_zero() {
                    s += &(&a[j] * &out[k - j]);
                }
            }
            out[k] = -&(&s * &a0);
        }
        Ok(out)
    }
}

/// Parametrisation of the branch of a curve through a smooth point, in the
/// affine chart where the last nonzero coordinate of the centre equals 1.
///
/// One of the other two coordinates is `c + s`, the second is a power
/// series in `s` solving the curve equation modulo `s^(order + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSeries {
    pub center: ProjPoint,
    pub order: usize,
    /// Series of the three homogeneous coordinates, each of length `order + 1`.
    pub coords: [Vec<FieldK>; 3],
}

impl BranchSeries {
    pub fn new(f: &HomPoly, p: &ProjPoint, order: usize) -> Result<Self> {
        let grad = check_smooth_point(f, p)?;
        let n = order + 1;
        let chart = p.chart();
        let base = p.chart_coords();
        let others: Vec<usize> = (0..3).filter(|&i| i != chart).collect();
        // Euler's relation forces a nonzero partial among the affine coordinates.
        let (param, dep) = if !grad[others[1]].is_zero() { (others[0], others[1]) } else { (others[1], others[0]) };
        let mut coords: [Vec<FieldK>; 3] = std::array::from_fn(|i| {
            let mut v = vec![FieldK::zero(); n];
            v[0] = base[i].clone();
            v
        });
        if n > 1 {
            coords[param][1] = FieldK::one();
        }
        let df = f.partial(Var::from_index(dep));
        let mut prec = 1;
        while prec < n {
            prec = (2 * prec).min(n);
            let value = eval_series(f, &coords, prec);
            let slope = series::inv(&eval_series(&df, &coords, prec), prec)?;
            let step = series::mul(&value, &slope, prec);
            for (c, s) in coords[dep].iter_mut().zip(&step) {
                *c -= s;
            }
        }
        debug_assert!(eval_series(f, &coords, n).iter().all(FieldK::is_zero));
        Ok(BranchSeries { center: p.clone(), order, coords })
    }

    /// The series `g(branch(s))`, truncated to `order + 1` coefficients.
    pub fn eval(&self, g: &HomPoly) -> Vec<FieldK> {
        eval_series(g, &self.coords, self.order + 1)
    }
}

fn eval_series(g: &HomPoly, coords: &[Vec<FieldK>; 3], n: usize) -> Vec<FieldK> {
    let d = g.degree() as usize;
    let powers: Vec<Vec<Vec<FieldK>>> = coords
        .iter()
        .map(|c| {
            let mut p = vec![{
                let mut one = vec![FieldK::zero(); n];
                one[0] = FieldK::one();
                one
            }];
            for i in 0..d {
                let next = series::mul(&p[i], c, n);
                p.push(next);
            }
            p
        })
        .collect();
    let mut out = vec![FieldK::zero(); n];
    for (m, c) in g.terms() {
        let [a, b, e] = m.exponents;
        let t = series::mul(&series::mul(&powers[0][a as usize], &powers[1][b as usize], n), &powers[2][e as usize], n);
        for (o, x) in out.iter_mut().zip(&t) {
            if !x.is_zero() {
                *o += &(x * c);
            }
        }
    }
    out
}

/// Intersection multiplicity of a curve with the branch of another curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ContactOrder {
    Finite(u32),
    /// The branch lies on the second curve.
    Infinite,
}

impl ContactOrder {
    pub fn at_least(self, k: u32) -> bool {
        match self {
            ContactOrder::Finite(n) => n >= k,
            ContactOrder::Infinite => true,
        }
    }
}

impl fmt::Display for ContactOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContactOrder::Finite(n) => write!(f, "{n}"),
            ContactOrder::Infinite => write!(f, "inf"),
        }
    }
}

/// Order of vanishing of `g` along the branch of `f` through the smooth
/// point `p`.
pub fn contact_order(f: &HomPoly, g: &HomPoly, p: &ProjPoint) -> Result<ContactOrder> {
    check_smooth_point(f, p)?;
    if g.is_zero() {
        return Ok(ContactOrder::Infinite);
    }
    if !p.lies_on(g) {
        return Ok(ContactOrder::Finite(0));
    }
    for &n in &SERIES_ORDERS {
        let s = BranchSeries::new(f, p, n)?.eval(g);
        if let Some(i) = s.iter().position(|c| !c.is_zero()) {
            return Ok(ContactOrder::Finite(i as u32));
        }
    }
    if share_component(f, g) {
        return Ok(ContactOrder::Infinite);
    }
    Err(Error::CapExceeded { cap: *SERIES_ORDERS.last().unwrap() as u32 })
}

/// The osculating conic computed as the unique conic whose restriction to
/// the local branch vanishes to order 5.
pub fn osculating_conic_via_series(f: &HomPoly, p: &ProjPoint) -> Result<HomPoly> {
    check_smooth_point(f, p)?;
    if hessian(f).evaluate(p).is_zero() {
        return Err(Error::InflectionPoint);
    }
    let branch = BranchSeries::new(f, p, 8)?;
    let monos = monomials_of_degree(2);
    let columns: Vec<Vec<FieldK>> =
        monos.iter().map(|m| branch.eval(&HomPoly::monomial(*m, FieldK::one()))).collect();
    let rows: linalg::Matrix = (0..5).map(|k| columns.iter().map(|c| c[k].clone()).collect()).collect();
    let ker = linalg::kernel(rows, monos.len());
    if ker.len() != 1 {
        return Err(Error::DegenerateSystem);
    }
    Ok(HomPoly::from_dense(2, &ker[0]).normalize_up_to_scalar())
}

/// K-rational sextactic points: smooth non-inflection points where the
/// osculating conic has contact at least 6. Candidates are the common
/// zeros of `f` and its second Hessian. Empty when the second Hessian
/// vanishes identically.
pub fn sextactic_points(f: &HomPoly) -> Result<Vec<ProjPoint>> {
    let h2 = second_hessian(f)?;
    if h2.is_zero() {
        return Ok(Vec::new());
    }
    let h = hessian(f);
    let grad = f.gradient();
    let mut out = Vec::new();
    for p in common_zeros(&[f.clone(), h2])?.points {
        if grad.iter().all(|g| g.evaluate(&p).is_zero()) || h.evaluate(&p).is_zero() {
            continue;
        }
        let q = osculating_conic(f, &p)?;
        if contact_order(f, &q, &p)?.at_least(6) {
            out.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> HomPoly {
        s.parse().unwrap()
    }

    fn pt(x: &str, y: &str, z: &str) -> ProjPoint {
        ProjPoint::new([x.parse().unwrap(), y.parse().unwrap(), z.parse().unwrap()]).unwrap()
    }

    const E: &str = "x^3 + y^3 - x*y*z";
    const F: &str = "x^3 + y^3 + z^3";

    #[test]
    fn hessians() {
        assert_eq!(hessian(&p(F)), p("216*x*y*z"));
        assert_eq!(hessian(&p("x^2 + y^2 + z^2")), p("8"));
        assert_eq!(hessian(&p(E)), p("-6*x^3 - 6*y^3 - 2*x*y*z"));
    }

    #[test]
    fn covariant_degrees() {
        let f = p("x^3 + 2*y^3 - x*y*z + z^3 + x^2*y");
        let d = CayleyData::new(&f).unwrap();
        assert_eq!(d.h.degree(), 3);
        assert_eq!(d.omega.degree(), 5 * 3 - 12);
        assert_eq!(d.psi.degree(), 8 * 3 - 18);
        assert!(d.lambda.is_well_formed());
        let conic = p("x^2 + y^2 + z^2");
        assert!(omega(&conic, &hessian(&conic)).is_zero());
        assert!(psi(&conic, &hessian(&conic)).is_zero());
    }

    #[test]
    fn second_hessian_of_fermat() {
        let h2 = second_hessian(&p(F)).unwrap();
        let want = p("(x^3 - y^3)*(y^3 - z^3)*(x^3 - z^3)");
        assert!(h2.proportional(&want));
        assert_eq!(h2, want.scale(&"-65303470080".parse().unwrap()).scale(&FieldK::from_int(-1)));
    }

    #[test]
    fn second_hessian_of_nodal_cubic() {
        let h2 = second_hessian(&p(E)).unwrap();
        assert_eq!(h2.degree(), 9);
        assert!(h2.evaluate(&pt("1", "1", "2")).is_zero());
        assert_eq!(h2, p("-3317760*x^3*y^3*(x^3 - y^3)"));
    }

    #[test]
    fn osculating_conics() {
        let e = p(E);
        let q = osculating_conic(&e, &pt("2", "4", "9")).unwrap();
        assert!(q.proportional(&p("2961*x^2 - 2664*x*y + 2394*y^2 - 1104*x*z - 321*y*z + 32*z^2")));
        let q = osculating_conic(&e, &pt("1", "1", "2")).unwrap();
        assert!(q.proportional(&p("21*(x^2 + y^2) - 22*x*y - 6*(x + y)*z + z^2")));
        let q = osculating_conic(&p(F), &pt("1", "1", "-a")).unwrap();
        assert!(q.proportional(&p("(x - y)^2 - z*(a^2*x + a^2*y + 2*a*z)")));
    }

    #[test]
    fn series_oracle_agrees() {
        let e = p(E);
        for s in [("2", "4", "9"), ("1", "1", "2"), ("3", "9", "28")] {
            let q = pt(s.0, s.1, s.2);
            assert!(osculating_conic(&e, &q).unwrap().proportional(&osculating_conic_via_series(&e, &q).unwrap()));
        }
    }

    #[test]
    fn unscaled_variant_fails_contact_five() {
        let e = p(E);
        let q = pt("2", "4", "9");
        let c = osculating_conic_unscaled(&e, &q).unwrap();
        assert!(!contact_order(&e, &c, &q).unwrap().at_least(5));
    }

    #[test]
    fn contact_orders() {
        let e = p(E);
        let s1 = pt("1", "1", "2");
        let q1 = osculating_conic(&e, &s1).unwrap();
        assert_eq!(contact_order(&e, &q1, &s1).unwrap(), ContactOrder::Finite(6));
        let q = pt("2", "4", "9");
        let c = osculating_conic(&e, &q).unwrap();
        assert_eq!(contact_order(&e, &c, &q).unwrap(), ContactOrder::Finite(5));
        let f = p(F);
        let flex = pt("1", "-1", "0");
        assert_eq!(contact_order(&f, &p("x + y"), &flex).unwrap(), ContactOrder::Finite(3));
        assert_eq!(contact_order(&e, &p("z"), &flex).unwrap(), ContactOrder::Finite(1));
        assert_eq!(contact_order(&e, &p(E), &s1).unwrap(), ContactOrder::Infinite);
        assert_eq!(contact_order(&e, &p("x"), &s1).unwrap(), ContactOrder::Finite(0));
        assert_eq!(contact_order(&e, &p("x"), &pt("0", "0", "1")), Err(Error::SingularPoint));
    }

    #[test]
    fn precondition_errors() {
        let e = p(E);
        assert_eq!(osculating_conic(&e, &pt("1", "0", "0")), Err(Error::PointNotOnCurve));
        assert_eq!(osculating_conic(&e, &pt("0", "0", "1")), Err(Error::SingularPoint));
        assert_eq!(osculating_conic(&p(F), &pt("1", "-1", "0")), Err(Error::InflectionPoint));
    }

    #[test]
    fn sextactic_points_of_nodal_and_cuspidal_cubics() {
        let got = sextactic_points(&p(E)).unwrap();
        let want = [pt("1", "1", "2"), pt("w", "w^2", "2"), pt("w^2", "w", "2")];
        assert_eq!(got.len(), 3);
        for q in &want {
            assert!(got.contains(q), "missing {q}");
        }
        assert!(sextactic_points(&p("x^3 - y^2*z")).unwrap().is_empty());
    }

    #[test]
    fn fermat_has_twenty_seven_sextactic_points() {
        let f = p(F);
        let pts = sextactic_points(&f).unwrap();
        assert_eq!(pts.len(), 27);
        assert!(pts.contains(&pt("1", "1", "-a")));
        let h2 = second_hessian(&f).unwrap();
        assert!(pts.iter().all(|q| h2.evaluate(q).is_zero()));
    }
}
