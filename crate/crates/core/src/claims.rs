//! Reference checks behind the `check` command. Each recomputes a known
//! value from scratch and compares it with the expected one.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arrangements::{
    analyze, build, coolidge_count, fermat_catalog, fermat_seed_point, free_action, group_elements, nodal_catalog,
    pair_orbits, partition, point_orbit, select, ConicId, Curve, Group,
};
use crate::cayley::{contact_order, osculating_conic, osculating_conic_via_series, second_hessian, sextactic_points, ContactOrder};
use crate::error::Error;
use crate::field::FieldK;
use crate::poly::{HomPoly, ProjPoint, Var};
use crate::singularities::{classify, conic_pair_type, PairSummary, SingularityType};
use crate::syzygy::{certify, generator_degrees, is_syzygy, koszul_triples, never_free_scan, profile, Verdict};

type Outcome = std::result::Result<String, String>;

fn lib<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e: Error| e.to_string())
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// A named check. Several checks may share an anchor.
#[derive(Clone, Copy, Debug)]
pub struct Claim {
    pub criterion: u8,
    pub anchor: &'static str,
    pub title: &'static str,
    run: fn(&CheckOptions) -> Outcome,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    /// Run exhaustive variants where a spot check is the default.
    pub slow: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimResult {
    pub criterion: u8,
    pub anchor: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

pub const CLAIMS: [Claim; 13] = [
    Claim { criterion: 1, anchor: "coolidge", title: "sextactic point counts", run: coolidge },
    Claim { criterion: 2, anchor: "nodal-catalog", title: "nodal cubic: sextactic points and conics", run: nodal },
    Claim { criterion: 3, anchor: "nodal-arrangements", title: "E + one conic is free (2,2)", run: nodal_one },
    Claim { criterion: 4, anchor: "nodal-arrangements", title: "E + two conics is free (3,3)", run: nodal_two },
    Claim { criterion: 5, anchor: "nodal-arrangements", title: "E + three conics: generators 5,5,5,5", run: nodal_three },
    Claim { criterion: 6, anchor: "nearly-free-example", title: "E + Q1 + conic at (2:4:9) is nearly free", run: nearly_free },
    Claim { criterion: 7, anchor: "fermat-never-free", title: "Fermat + one conic is nearly free (2,3)", run: fermat_single },
    Claim { criterion: 8, anchor: "fermat-sextactic", title: "27 sextactic points of the Fermat cubic", run: fermat_sextactic },
    Claim { criterion: 9, anchor: "pair-orbits", title: "13 free orbits on conic pairs", run: orbits },
    Claim { criterion: 10, anchor: "partition", title: "nine sets of three tangent conics", run: partition_check },
    Claim { criterion: 11, anchor: "fermat-pairs", title: "Fermat + two conics", run: fermat_pairs },
    Claim { criterion: 12, anchor: "fermat-triple", title: "Fermat + a tangent triple is free (3,5)", run: fermat_triple },
    Claim { criterion: 13, anchor: "properties", title: "seeded property suites", run: properties },
];

pub fn anchors() -> Vec<&'static str> {
    let mut v: Vec<&str> = CLAIMS.iter().map(|c| c.anchor).collect();
    v.dedup();
    v
}

pub fn run_claim(claim: &Claim, opts: &CheckOptions) -> ClaimResult {
    let start = Instant::now();
    let (passed, detail) = match (claim.run)(opts) {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    ClaimResult {
        criterion: claim.criterion,
        anchor: claim.anchor,
        title: claim.title,
        passed,
        detail,
        seconds: Some(start.elapsed().as_secs_f64()),
    }
}

/// Runs the selected checks in parallel; results come back in criterion
/// order. `None` for an unknown anchor.
pub fn run_claims(only: Option<&str>, opts: &CheckOptions) -> Option<Vec<ClaimResult>> {
    let selected: Vec<&Claim> = CLAIMS.iter().filter(|c| only.map_or(true, |a| a == c.anchor)).collect();
    if selected.is_empty() {
        return None;
    }
    Some(std::thread::scope(|s| {
        let handles: Vec<_> = selected.iter().map(|c| s.spawn(move || run_claim(c, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("check panicked")).collect()
    }))
}

fn coolidge(_: &CheckOptions) -> Outcome {
    let got = [coolidge_count(3, 1, 0, 0), coolidge_count(3, 0, 0, 1), coolidge_count(3, 0, 1, 0)];
    ensure!(got == [3, 27, 0], "got {got:?}");
    Ok("nodal 3, smooth 27, cuspidal 0".into())
}

fn nodal(_: &CheckOptions) -> Outcome {
    let cat = nodal_catalog();
    let mut want = cat.sextactic();
    want.sort_by(|a, b| a.cmp_coords(b));
    let got = lib(sextactic_points(&cat.curve))?;
    ensure!(got == want, "sextactic points {got:?}");
    let q1: HomPoly = lib("21*(x^2 + y^2) - 22*x*y - 6*(x + y)*z + z^2".parse())?;
    for c in &cat.conics {
        let q = lib(osculating_conic(&cat.curve, &c.sextactic))?;
        ensure!(q.proportional(&c.conic), "osculating conic at {} is {q}", c.sextactic);
        let k = lib(contact_order(&cat.curve, &q, &c.sextactic))?;
        ensure!(k == ContactOrder::Finite(6), "contact {k} at {}", c.sextactic);
    }
    ensure!(cat.conics[0].conic.proportional(&q1), "Q1 is {}", cat.conics[0].conic);
    Ok(format!("sextactic {}, contact 6 at each", got.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")))
}

fn certify_selection(curve: Curve, ids: &[ConicId]) -> std::result::Result<crate::arrangements::ArrangementReport, String> {
    lib(select(curve, ids).and_then(|a| analyze(&a)))
}

fn expect_certificate(
    label: &str,
    curve: Curve,
    ids: &[ConicId],
    verdict: Verdict,
    exponents: &[u32],
    tau: usize,
    census: Option<&str>,
) -> Outcome {
    let r = certify_selection(curve, ids)?;
    let c = &r.certificate;
    ensure!(
        c.verdict == verdict && c.exponents == exponents && c.mdr == exponents[0] && c.tjurina == tau,
        "{label}: {} {:?}, r = {}, tau = {}",
        c.verdict,
        c.exponents,
        c.mdr,
        c.tjurina
    );
    let summary = r.census.summary();
    if let Some(want) = census {
        ensure!(summary == want, "{label}: census {summary}");
    }
    Ok(format!("{label}: {} {:?}, tau = {}, {summary}", c.verdict, c.exponents, c.tjurina))
}

fn nodal_one(_: &CheckOptions) -> Outcome {
    let mut out = Vec::new();
    for i in 1..=3 {
        out.push(expect_certificate(&format!("Q{i}"), Curve::Nodal, &[ConicId::Nodal(i)], Verdict::Free, &[2, 2], 12, None)?);
    }
    Ok(out.join("; "))
}

fn nodal_two(_: &CheckOptions) -> Outcome {
    let mut out = Vec::new();
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        let ids = [ConicId::Nodal(i), ConicId::Nodal(j)];
        out.push(expect_certificate(&format!("Q{i}+Q{j}"), Curve::Nodal, &ids, Verdict::Free, &[3, 3], 27, None)?);
    }
    Ok(out.join("; "))
}

fn nodal_three(_: &CheckOptions) -> Outcome {
    let arr = lib(select(Curve::Nodal, &[ConicId::Nodal(1), ConicId::Nodal(2), ConicId::Nodal(3)]))?;
    let gens = lib(generator_degrees(&arr.product))?;
    ensure!(gens == [5, 5, 5, 5], "generator degrees {gens:?}");
    let r = lib(analyze(&arr))?;
    ensure!(r.certificate.tjurina == 46, "tau = {}", r.certificate.tjurina);
    Ok(format!("generators {gens:?}, tau = 46 = {}", r.census.summary()))
}

fn nearly_free(_: &CheckOptions) -> Outcome {
    let cat = nodal_catalog();
    let p = lib(ProjPoint::from_ints(2, 4, 9))?;
    let q = lib(osculating_conic(&cat.curve, &p))?;
    let want: HomPoly = lib("2961*x^2 - 2664*x*y + 2394*y^2 - 1104*x*z - 321*y*z + 32*z^2".parse())?;
    ensure!(q.proportional(&want), "osculating conic {q}");
    let k = lib(contact_order(&cat.curve, &q, &p))?;
    ensure!(k == ContactOrder::Finite(5), "contact {k}");
    let arr = lib(build(&[cat.curve.clone(), cat.conics[0].conic.clone(), want]))?;
    let r = lib(analyze(&arr))?;
    let c = &r.certificate;
    ensure!(c.verdict == Verdict::NearlyFree && c.mdr == 3 && c.tjurina == 26, "{} r = {} tau = {}", c.verdict, c.mdr, c.tjurina);
    let summary = r.census.summary();
    ensure!(summary == "A_11 + A_9 + 6xA_1", "census {summary}");
    Ok(format!("contact 5; nearly free {:?}, tau = 26, {summary}", c.exponents))
}

fn fermat_single(opts: &CheckOptions) -> Outcome {
    let cat = fermat_catalog();
    let ids: Vec<ConicId> =
        cat.conics.iter().map(|c| c.id).filter(|id| opts.slow || matches!(id, ConicId::Fermat { slot: 0, .. })).collect();
    for id in &ids {
        expect_certificate(&id.to_string(), Curve::Fermat, &[*id], Verdict::NearlyFree, &[2, 3], 11, Some("A_11"))?;
    }
    for k in 2..=9 {
        let s = never_free_scan(k);
        ensure!(!s.free_possible, "k = {k} admits a free arrangement");
    }
    Ok(format!("{} conics nearly free (2, 3), tau = 11; no free arrangement for 2 <= k <= 9", ids.len()))
}

fn fermat_sextactic(_: &CheckOptions) -> Outcome {
    let cat = fermat_catalog();
    let pts = lib(sextactic_points(&cat.curve))?;
    let orbit = point_orbit(&fermat_seed_point(), &group_elements(Group::GPrime));
    ensure!(pts.len() == 27 && pts == orbit, "{} sextactic points", pts.len());
    let h2 = lib(second_hessian(&cat.curve))?;
    let want: HomPoly = lib("(x^3 - y^3)*(y^3 - z^3)*(x^3 - z^3)".parse())?;
    ensure!(h2.proportional(&want), "second Hessian {h2}");
    Ok("27 points = orbit of (1:1:-a); second Hessian ~ (x^3-y^3)(y^3-z^3)(x^3-z^3)".into())
}

fn orbits(_: &CheckOptions) -> Outcome {
    let cat = fermat_catalog();
    let free = free_action(&cat, Group::GPrime);
    ensure!(free.on_conics && free.on_pairs, "{free:?}");
    let orbits = pair_orbits(&cat, Group::GPrime);
    ensure!(orbits.len() == 13 && orbits.iter().all(|o| o.size == 27), "orbit sizes {:?}", orbits.iter().map(|o| o.size).collect::<Vec<_>>());
    let same = orbits.iter().filter(|o| o.same_set).count();
    ensure!(same == 1, "{same} same-set orbits");
    Ok("free on 27 conics and 351 pairs; 13 orbits of size 27".into())
}

fn partition_check(_: &CheckOptions) -> Outcome {
    let cat = fermat_catalog();
    let part = lib(partition(&cat))?;
    for j in 1..=9 {
        let f = part.fibre(j);
        ensure!(f.len() == 3, "P{j} has {} conics", f.len());
        for a in 0..3 {
            for b in a + 1..3 {
                let t = lib(conic_pair_type(&cat.conic(f[a]).unwrap().conic, &cat.conic(f[b]).unwrap().conic))?;
                ensure!(t.multiplicity_pattern == [2, 1, 1], "{} and {}: {:?}", f[a], f[b], t.multiplicity_pattern);
            }
        }
    }
    let cross: Vec<_> = part.checked_pairs.iter().filter(|(o, _)| !o.same_set).collect();
    ensure!(cross.len() == 12, "{} cross-set representatives", cross.len());
    for (o, t) in &cross {
        ensure!(t.summary == PairSummary::FourNodes, "{:?}: {:?}", o.representative, t.multiplicity_pattern);
    }
    Ok("9 sets of 3; 27 same-set pairs meet (2,1,1); 12 cross-set representatives meet (1,1,1,1)".into())
}

fn fermat_pairs(_: &CheckOptions) -> Outcome {
    let cat = fermat_catalog();
    let orbits = pair_orbits(&cat, Group::GPrime);
    let (mut same, mut cross) = (String::new(), String::new());
    for o in &orbits {
        let (a, b) = o.representative;
        let label = format!("{a}+{b}");
        let line = if o.same_set {
            expect_certificate(&label, Curve::Fermat, &[a, b], Verdict::Free, &[3, 3], 27, Some("2xA_11 + A_3 + 2xA_1"))?
        } else {
            expect_certificate(&label, Curve::Fermat, &[a, b], Verdict::NearlyFree, &[3, 4], 26, Some("2xA_11 + 4xA_1"))?
        };
        if o.same_set {
            same = line;
        } else if cross.is_empty() {
            cross = line;
        }
    }
    Ok(format!("{same}; {cross}; all 12 cross-set representatives agree"))
}

fn fermat_triple(_: &CheckOptions) -> Outcome {
    let cat = fermat_catalog();
    let ids: Vec<ConicId> = cat.fibre(1).iter().map(|c| c.id).collect();
    let r = certify_selection(Curve::Fermat, &ids)?;
    let c = &r.certificate;
    ensure!(c.verdict == Verdict::Free && c.exponents == [3, 5] && c.mdr == 3 && c.tjurina == 49, "{} {:?} tau = {}", c.verdict, c.exponents, c.tjurina);
    let arr = lib(select(Curve::Fermat, &ids))?;
    let local = lib(classify(&arr.product, &cat.base_points[0]))?;
    ensure!(
        local.multiplicity == 3 && local.tjurina == 10 && local.milnor == 10 && local.kind == SingularityType::J20,
        "at p1: multiplicity {}, tau {}, mu {}",
        local.multiplicity,
        local.tjurina,
        local.milnor
    );
    let summary = r.census.summary();
    ensure!(summary == "J_2_0 + 3xA_11 + 6xA_1", "census {summary}");
    Ok(format!("free (3, 5), tau = 49; J_2_0 at p1; {summary}"))
}

/// A random form with small integer coefficients and occasional `w`, `a`.
pub fn random_form(rng: &mut impl Rng, degree: u32) -> HomPoly {
    let mut f = HomPoly::zero(degree);
    for m in crate::poly::monomials_of_degree(degree) {
        if rng.gen_bool(0.6) {
            let mut c = FieldK::from_int(rng.gen_range(-5..=5));
            if rng.gen_bool(0.2) {
                c += &FieldK::basis(rng.gen_range(1..6));
            }
            f.add_term(m, c);
        }
    }
    f
}

fn properties(opts: &CheckOptions) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20);

    for _ in 0..20 {
        let d = rng.gen_range(1..=6);
        let f = random_form(&mut rng, d);
        let mut euler = HomPoly::zero(d);
        for v in [Var::X, Var::Y, Var::Z] {
            euler = &euler + &(&HomPoly::var(v) * &f.partial(v));
        }
        ensure!(euler == f.scale(&FieldK::from_int(d as i64)), "Euler relation fails for {f}");
    }

    let nodal = nodal_catalog();
    let fermat = fermat_catalog();
    let mut catalog_arrangements = vec![
        vec![ConicId::Nodal(1)],
        vec![ConicId::Nodal(1), ConicId::Nodal(2)],
        vec![ConicId::Nodal(1), ConicId::Nodal(2), ConicId::Nodal(3)],
    ];
    let fermat_sets: Vec<Vec<ConicId>> = vec![
        vec![ConicId::Fermat { set: 1, slot: 0 }],
        vec![ConicId::Fermat { set: 1, slot: 0 }, ConicId::Fermat { set: 1, slot: 1 }],
        vec![ConicId::Fermat { set: 1, slot: 0 }, ConicId::Fermat { set: 2, slot: 0 }],
        fermat.fibre(1).iter().map(|c| c.id).collect(),
    ];
    catalog_arrangements.extend(fermat_sets.iter().cloned());
    let mut koszul = 0;
    let mut rational = 0;
    for ids in &catalog_arrangements {
        let curve = ids[0].curve();
        let arr = lib(select(curve, ids))?;
        for t in koszul_triples(&arr.product) {
            ensure!(is_syzygy(&arr.product, &t), "Koszul triple is not a syzygy");
        }
        let p = lib(profile(&arr.product))?;
        ensure!(p.generators.iter().all(|t| is_syzygy(&arr.product, t)), "generator is not a syzygy");
        koszul += 1;
        let r = lib(analyze(&arr))?;
        if r.census.all_rational() {
            rational += 1;
        }
    }

    let mut oracle = 0;
    while oracle < 10 {
        let t: i64 = rng.gen_range(-12..=12);
        if t == 0 || t == -1 {
            continue;
        }
        let p = lib(ProjPoint::from_ints(t, t * t, 1 + t * t * t))?;
        match osculating_conic(&nodal.curve, &p) {
            Err(Error::InflectionPoint) => continue,
            r => {
                let q = lib(r)?;
                let s = lib(osculating_conic_via_series(&nodal.curve, &p))?;
                ensure!(q.proportional(&s), "formula and series disagree at {p}");
                oracle += 1;
            }
        }
    }

    let base = fermat_sets.iter().take(if opts.slow { 4 } else { 1 });
    let mut equivariant = 0;
    for ids in base {
        let arr = lib(select(Curve::Fermat, ids))?;
        let reference = lib(certify(&arr.product))?;
        for t in group_elements(Group::GPrime) {
            let moved = t.apply_poly(&arr.product);
            let c = lib(certify(&moved))?;
            ensure!(c == reference, "certificate changes under {t}");
            equivariant += 1;
        }
    }

    Ok(format!(
        "Euler 20 forms; syzygies on {koszul} arrangements; formula = series at {oracle} points; \
         local = global tau on {rational} rational arrangements; {equivariant} equivariance checks"
    ))
}
