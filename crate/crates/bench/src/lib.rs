//! Benchmark fixtures shared by the criterion benches.

use conicfree::arrangements::{fermat_catalog, nodal_catalog, select, ConicId, Curve};
use conicfree::{FieldK, HomPoly, ProjPoint};

pub fn nodal_cubic() -> HomPoly {
    nodal_catalog().curve
}

pub fn fermat_cubic() -> HomPoly {
    fermat_catalog().curve
}

/// A dense-ish element of K with mixed denominators.
pub fn sample_element(seed: i64) -> FieldK {
    format!("{seed}/7 + 3*w - 2/5*a + {}*w*a - a^2/3 + 5*w*a^2", seed + 1).parse().expect("valid scalar")
}

/// The nodal cubic with one hyperosculating conic (degree 5).
pub fn nodal_pair() -> HomPoly {
    select(Curve::Nodal, &[ConicId::Nodal(1)]).expect("catalog selection").product
}

/// The Fermat cubic with two conics through different base points (degree 7).
pub fn fermat_cross_pair() -> HomPoly {
    let ids = [ConicId::Fermat { set: 1, slot: 0 }, ConicId::Fermat { set: 2, slot: 0 }];
    select(Curve::Fermat, &ids).expect("catalog selection").product
}

/// The Fermat cubic with the three conics through `(1 : 1 : 0)` (degree 9)
/// and that point, where the arrangement has a triple point.
pub fn fermat_tangent_triple() -> (HomPoly, ProjPoint) {
    let cat = fermat_catalog();
    let ids: Vec<ConicId> = cat.fibre(1).iter().map(|c| c.id).collect();
    (select(Curve::Fermat, &ids).expect("catalog selection").product, cat.base_points[0].clone())
}
