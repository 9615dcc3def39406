//! Frozen outputs: the Fermat catalog fixture and serialized reports.

use conicfree::arrangements::{analyze, fermat_catalog, select, ConicId, Curve, FermatExport};
use conicfree::cayley::{contact_order, osculating_conic, second_hessian};
use conicfree::HomPoly;

const FIXTURE: &str = include_str!("fixtures/fermat_catalog.json");

fn poly(s: &str) -> HomPoly {
    s.parse().unwrap()
}

#[test]
fn fermat_catalog_matches_the_fixture() {
    let frozen: FermatExport = serde_json::from_str(FIXTURE).unwrap();
    assert_eq!(frozen, fermat_catalog().export());
}

#[test]
fn fixture_entries_are_hyperosculating_conics() {
    let frozen: FermatExport = serde_json::from_str(FIXTURE).unwrap();
    assert_eq!(frozen.sets.len(), 9);
    let mut seen = Vec::new();
    for set in &frozen.sets {
        assert_eq!(set.conics.len(), 3);
        for c in &set.conics {
            assert!(set.base_point.lies_on(&c.conic), "{}", c.id);
            assert!(c.sextactic.lies_on(&frozen.curve));
            assert!(osculating_conic(&frozen.curve, &c.sextactic).unwrap().proportional(&c.conic));
            assert!(contact_order(&frozen.curve, &c.conic, &c.sextactic).unwrap().at_least(6));
            assert!(!seen.contains(&c.sextactic));
            seen.push(c.sextactic.clone());
        }
    }
}

#[test]
fn second_hessians() {
    let h = second_hessian(&poly("x^3 + y^3 + z^3")).unwrap();
    assert_eq!(h, poly("65303470080*(x^3 - y^3)*(y^3 - z^3)*(x^3 - z^3)"));
    let h = second_hessian(&poly("x^3 + y^3 - x*y*z")).unwrap();
    assert_eq!(h, poly("-3317760*x^3*y^3*(x^3 - y^3)"));
}

#[test]
fn serialized_certificate() {
    let arr = select(Curve::Nodal, &[ConicId::Nodal(1)]).unwrap();
    let r = analyze(&arr).unwrap();
    assert_eq!(
        serde_json::to_string(&r.certificate).unwrap(),
        r#"{"degree":5,"mdr":2,"tjurina":12,"verdict":"Free","exponents":[2,2],"generator_degrees":[2,2],"hilbert_tail":[12,12]}"#
    );
    assert_eq!(
        serde_json::to_string(&r.census.rational[1]).unwrap(),
        r#"{"point":["1","1","2"],"tjurina":11,"milnor":11,"multiplicity":2,"type":"A_11"}"#
    );
}

#[test]
fn fermat_triple_census() {
    let ids = [ConicId::Fermat { set: 4, slot: 0 }, ConicId::Fermat { set: 4, slot: 1 }, ConicId::Fermat { set: 4, slot: 2 }];
    let r = analyze(&select(Curve::Fermat, &ids).unwrap()).unwrap();
    assert_eq!(r.census.summary(), "J_2_0 + 3xA_11 + 6xA_1");
    assert_eq!(r.certificate.hilbert_tail, vec![49, 49]);
}
