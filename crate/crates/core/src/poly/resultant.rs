//! Sylvester resultants and binary forms.

use crate::field::FieldK;
use crate::linalg;
use crate::poly::{gcd_univariate, HomPoly, Monomial, UniPoly, Var};

/// The two variables other than `v`, in increasing order.
pub fn other_vars(v: Var) -> [Var; 2] {
    match v {
        Var::X => [Var::Y, Var::Z],
        Var::Y => [Var::X, Var::Z],
        Var::Z => [Var::X, Var::Y],
    }
}

/// Resultant of `f` and `g` with respect to `var`: the determinant of the
/// Sylvester matrix (rows of `f` first, descending powers of `var`) built
/// on the actual degrees of `f` and `g` in `var`. The result is a binary
/// form in the remaining two variables.
///
/// The determinant is evaluated at enough points `(t, 1)` of the remaining
/// variables and interpolated.
pub fn resultant(f: &HomPoly, g: &HomPoly, var: Var) -> HomPoly {
    let (m, n) = (f.degree_in(var), g.degree_in(var));
    let (df, dg) = (f.degree(), g.degree());
    let out_deg = n * df + m * dg - m * n;
    let [u, v] = other_vars(var);
    if m == 0 && n == 0 {
        return HomPoly::zero(out_deg);
    }
    let fc: Vec<HomPoly> = (0..=m).map(|i| f.coeff_in(var, i)).collect();
    let gc: Vec<HomPoly> = (0..=n).map(|i| g.coeff_in(var, i)).collect();
    let size = (m + n) as usize;
    let nodes: Vec<FieldK> = (0..=out_deg as i64).map(FieldK::from_int).collect();
    let mut values = Vec::with_capacity(nodes.len());
    for t in &nodes {
        let mut pt = [FieldK::zero(), FieldK::zero(), FieldK::zero()];
        pt[u.index()] = t.clone();
        pt[v.index()] = FieldK::one();
        let fv: Vec<FieldK> = fc.iter().map(|c| c.eval_coords(&pt)).collect();
        let gv: Vec<FieldK> = gc.iter().map(|c| c.eval_coords(&pt)).collect();
        let mut mat = vec![vec![FieldK::zero(); size]; size];
        for r in 0..n as usize {
            for j in 0..=m as usize {
                mat[r][r + j] = fv[m as usize - j].clone();
            }
        }
        for r in 0..m as usize {
            for j in 0..=n as usize {
                mat[n as usize + r][r + j] = gv[n as usize - j].clone();
            }
        }
        values.push(linalg::determinant(mat));
    }
    let uni = interpolate(&nodes, &values);
    BinaryForm::from_dehomogenized(&uni, out_deg, u, v).form
}

/// Newton interpolation through `(nodes[i], values[i])`.
pub fn interpolate(nodes: &[FieldK], values: &[FieldK]) -> UniPoly {
    let n = nodes.len();
    let mut dd: Vec<FieldK> = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &nodes[i] - &nodes[i - j];
            dd[i] = &num / &den;
        }
    }
    let mut acc = UniPoly::zero();
    for i in (0..n).rev() {
        acc = acc.mul(&UniPoly::linear(&nodes[i])).add(&UniPoly::constant(dd[i].clone()));
    }
    acc
}

/// A binary form in two distinguished variables `(u, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    pub form: HomPoly,
    pub u: Var,
    pub v: Var,
}

/// A root `(u : v)` of a binary form, normalised with its first nonzero
/// entry equal to one, together with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryRoot {
    pub u: FieldK,
    pub v: FieldK,
    pub multiplicity: usize,
}

impl BinaryForm {
    pub fn new(form: HomPoly, u: Var, v: Var) -> Self {
        BinaryForm { form, u, v }
    }

    fn from_dehomogenized(p: &UniPoly, degree: u32, u: Var, v: Var) -> Self {
        let mut form = HomPoly::zero(degree);
        for (i, c) in p.coeffs().iter().enumerate() {
            let mut e = [0u32; 3];
            e[u.index()] = i as u32;
            e[v.index()] = degree - i as u32;
            form.add_term(Monomial { exponents: e }, c.clone());
        }
        BinaryForm { form, u, v }
    }

    /// `F(t, 1)` and the multiplicity of the root `(1 : 0)`.
    pub fn dehomogenize(&self) -> (UniPoly, usize) {
        let d = self.form.degree() as usize;
        let mut c = vec![FieldK::zero(); d + 1];
        for (m, k) in self.form.terms() {
            c[m.exponents[self.u.index()] as usize] = k.clone();
        }
        let p = UniPoly::new(c);
        let inf = d - p.degree().unwrap_or(d);
        (p, inf)
    }

    /// Greatest common divisor (monic in the dehomogenised variable). Both
    /// forms must use the same pair of variables.
    pub fn gcd(&self, other: &BinaryForm) -> BinaryForm {
        debug_assert!(self.u == other.u && self.v == other.v);
        if self.form.is_zero() {
            return other.clone();
        }
        if other.form.is_zero() {
            return self.clone();
        }
        let (p, a) = self.dehomogenize();
        let (q, b) = other.dehomogenize();
        let g = gcd_univariate(&p, &q);
        let inf = a.min(b);
        BinaryForm::from_dehomogenized(&g, (g.degree().unwrap_or(0) + inf) as u32, self.u, self.v)
    }

    /// Multiplicities of all roots over the algebraic closure, sorted
    /// descending. Empty for the zero form.
    pub fn multiplicity_pattern(&self) -> Vec<usize> {
        if self.form.is_zero() {
            return Vec::new();
        }
        let (p, inf) = self.dehomogenize();
        let mut out = Vec::new();
        for (s, i) in p.squarefree_decomposition() {
            for _ in 0..s.degree().unwrap() {
                out.push(i);
            }
        }
        if inf > 0 {
            out.push(inf);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Roots lying in K with multiplicities; also returns the total degree
    /// of the roots outside K (counted with multiplicity).
    pub fn roots_in_k(&self) -> (Vec<BinaryRoot>, usize) {
        let (p, inf) = self.dehomogenize();
        let mut roots = Vec::new();
        let mut outside = 0;
        for (s, mult) in p.squarefree_decomposition() {
            let rs = s.roots_in_k();
            outside += (s.degree().unwrap() - rs.len()) * mult;
            for r in rs {
                roots.push(BinaryRoot { u: r, v: FieldK::one(), multiplicity: mult });
            }
        }
        if inf > 0 {
            roots.push(BinaryRoot { u: FieldK::one(), v: FieldK::zero(), multiplicity: inf });
        }
        (roots, outside)
    }
}
