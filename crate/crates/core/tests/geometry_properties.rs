//! Invariants of the osculating conic, the syzygy engine and the local
//! invariants under the symmetries of the catalog curves.

use conicfree::arrangements::{census, fermat_catalog, group_elements, nodal_catalog, select, ConicId, Curve, Group};
use conicfree::cayley::{contact_order, hessian, osculating_conic, second_hessian};
use conicfree::singularities::{classify, conic_pair_type, local_tjurina, truncated_tjurina, SingularityType};
use conicfree::syzygy::{certify, is_syzygy, jacobian_hilbert, koszul_triples, mdr, profile, Verdict};
use conicfree::{FieldK, HomPoly, ProjPoint};
use proptest::prelude::*;

fn cubic() -> impl Strategy<Value = HomPoly> {
    proptest::collection::vec(-3i64..=3, 10).prop_map(|cs| {
        let cs: Vec<FieldK> = cs.into_iter().map(FieldK::from_int).collect();
        HomPoly::from_dense(3, &cs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn osculating_conic_is_equivariant(t in 0usize..54, c in 0usize..27) {
        let cat = fermat_catalog();
        let t = group_elements(Group::GSecond)[t];
        let conic = &cat.conics[c];
        let f = &cat.curve;
        let lhs = osculating_conic(&t.apply_poly(f), &t.apply_point(&conic.sextactic)).unwrap();
        let rhs = t.apply_poly(&osculating_conic(f, &conic.sextactic).unwrap());
        prop_assert!(lhs.proportional(&rhs));
    }

    #[test]
    fn covariant_degrees(f in cubic()) {
        let h = hessian(&f);
        if !h.is_zero() {
            prop_assert_eq!(h.degree(), 3);
        }
        if let Ok(h2) = second_hessian(&f) {
            if !h2.is_zero() {
                prop_assert_eq!(h2.degree(), 9);
            }
        }
    }

    #[test]
    fn certificates_ignore_scalars(c in 0usize..27, k in 1i64..6, use_w in any::<bool>()) {
        let cat = fermat_catalog();
        let arr = select(Curve::Fermat, &[cat.conics[c].id]).unwrap();
        let mut s = FieldK::from_int(k);
        if use_w {
            s = &s * &FieldK::omega();
        }
        prop_assert_eq!(certify(&arr.product.scale(&s)).unwrap(), certify(&arr.product).unwrap());
    }

    #[test]
    fn bezout_for_conic_pairs(a in 0usize..27, b in 0usize..27) {
        prop_assume!(a != b);
        let cat = fermat_catalog();
        let t = conic_pair_type(&cat.conics[a].conic, &cat.conics[b].conic).unwrap();
        prop_assert_eq!(t.multiplicity_pattern.iter().sum::<usize>(), 4);
    }
}

fn fermat_pairs() -> Vec<(HomPoly, Vec<ProjPoint>)> {
    [(1, 1), (2, 0)]
        .into_iter()
        .map(|(set, slot)| {
            let ids = [ConicId::Fermat { set: 1, slot: 0 }, ConicId::Fermat { set, slot }];
            let arr = select(Curve::Fermat, &ids).unwrap();
            let points = census(&arr).unwrap().rational.into_iter().map(|r| r.point).collect();
            (arr.product, points)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 6, ..ProptestConfig::default() })]

    #[test]
    fn local_tjurina_is_equivariant(t in 0usize..27, pair in 0usize..2, point in 0usize..4) {
        let (f, points) = &fermat_pairs()[pair];
        let t = group_elements(Group::GPrime)[t];
        let p = &points[point % points.len()];
        prop_assert_eq!(local_tjurina(&t.apply_poly(f), &t.apply_point(p)).unwrap(), local_tjurina(f, p).unwrap());
    }
}

#[test]
fn catalog_sextactic_points_are_hyperosculating() {
    let n = nodal_catalog();
    let f = fermat_catalog();
    let cases = n.conics.iter().map(|c| (&n.curve, c)).chain(f.conics.iter().map(|c| (&f.curve, c)));
    for (curve, c) in cases {
        assert!(second_hessian(curve).unwrap().evaluate(&c.sextactic).is_zero());
        assert!(contact_order(curve, &c.conic, &c.sextactic).unwrap().at_least(6), "{}", c.id);
    }
}

fn catalog_arrangements() -> Vec<HomPoly> {
    let nodal = [vec![1], vec![1, 2], vec![1, 2, 3]]
        .into_iter()
        .map(|ix| select(Curve::Nodal, &ix.into_iter().map(ConicId::Nodal).collect::<Vec<_>>()).unwrap().product);
    let fermat = [vec![(1, 0)], vec![(1, 0), (1, 1)], vec![(1, 0), (2, 0)], vec![(1, 0), (1, 1), (1, 2)]].into_iter().map(|ix| {
        let ids: Vec<ConicId> = ix.into_iter().map(|(set, slot)| ConicId::Fermat { set, slot }).collect();
        select(Curve::Fermat, &ids).unwrap().product
    });
    nodal.chain(fermat).collect()
}

#[test]
fn syzygy_invariants_on_the_catalog() {
    for f in catalog_arrangements() {
        let d = f.degree();
        for t in koszul_triples(&f) {
            assert!(is_syzygy(&f, &t));
        }
        let p = profile(&f).unwrap();
        assert_eq!(p.mdr, *p.generator_degrees.iter().min().unwrap());
        assert_eq!(mdr(&f).unwrap(), p.mdr);
        assert!(p.mdr <= d - 1);
        let start = 3 * (d - 2);
        let h: Vec<usize> = (start..start + 3).map(|k| jacobian_hilbert(&f, k).unwrap()).collect();
        assert!(h.iter().all(|&v| v == p.tjurina), "{h:?} vs {}", p.tjurina);
        let c = certify(&f).unwrap();
        let g = &c.generator_degrees;
        match c.verdict {
            Verdict::Free => {
                assert_eq!(g.len(), 2);
                assert_eq!(g[0] + g[1], d - 1);
                assert_eq!(c.tjurina as u32, (d - 1) * (d - 1) - g[0] * g[1]);
            }
            Verdict::NearlyFree => {
                assert_eq!(g.len(), 3);
                assert_eq!(g[1], g[2]);
                assert_eq!(g[0] + g[1], d);
            }
            Verdict::MSyzygy => {}
        }
    }
}

#[test]
fn truncation_beyond_stabilisation_is_stable() {
    let cat = fermat_catalog();
    let ids: Vec<ConicId> = cat.fibre(1).iter().map(|c| c.id).collect();
    let f = select(Curve::Fermat, &ids).unwrap().product;
    let p = &cat.base_points[0];
    let tau = local_tjurina(&f, p).unwrap();
    for n in [16, 20, 28] {
        assert_eq!(truncated_tjurina(&f, p, n).unwrap(), tau);
    }
    let r = classify(&f, p).unwrap();
    assert_eq!((r.tjurina, r.milnor, r.kind), (10, 10, SingularityType::J20));
}
