//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Everything here pins exact expected values: formula reproduction on
//! integer grids, exact unit-area facts, oracle equivalences over the small
//! corpus, structural invariants of every constructed decomposition, the
//! Gauss-Bonnet identity on assembled surfaces, end-to-end certification on
//! a generated family with single-hypothesis perturbations, and byte-level
//! determinism of the JSON reports.

use linkcert_core::angle::Angle;
use linkcert_core::augment::augment;
use linkcert_core::certify::{
    certify_hyperbolic, certify_no_exceptional, genus_bound_value, genus_lower_bound,
};
use linkcert_core::diagram::{is_prime, is_twist_reduced, LinkDiagram};
use linkcert_core::families;
use linkcert_core::normalsurf as ns;
use linkcert_core::oracle;
use linkcert_core::polyhedra::{decompose, CuspKind, Decomposition, PolyId};
use linkcert_core::slopes::{
    geometric_length_bound, six_theorem_check, surgery_coords, two_pi_check, GeomBound,
    LengthBound, SlopeCoords, SlopeSpec, SurgeryVerdict,
};
use std::time::Instant;

fn family() -> Vec<LinkDiagram> {
    // t in 2..=6 with region sizes drawn from 6..=10
    let mut out = vec![
        families::double_twist(6, 6).unwrap(),
        families::double_twist(7, 10).unwrap(),
        families::double_twist(9, 8).unwrap(),
        families::pretzel(&[6, 7, 8]).unwrap(),
        families::pretzel(&[10, 9, 6]).unwrap(),
        families::pretzel(&[6, 6, 6, 6]).unwrap(),
        families::pretzel(&[7, 7, 7, 6]).unwrap(),
        families::pretzel(&[7, 8, 9, 10, 6]).unwrap(),
        families::pretzel(&[7, 7, 7, 7, 7]).unwrap(),
        families::pretzel(&[6, 7, 6, 7, 6, 7]).unwrap(),
        families::pretzel(&[7, 7, 7, 7, 7, 6]).unwrap(),
    ];
    out.sort_by_key(|d| d.label().to_string());
    out
}

fn decomposition_of(d: &LinkDiagram) -> Decomposition {
    decompose(&augment(d).unwrap()).unwrap()
}

#[test]
fn criterion_1_genus_formula_reproduction() {
    let started = Instant::now();
    let mut checked = 0;
    for t in 2..=12i64 {
        for k in 1..=4i64 {
            let got = genus_bound_value(t, k);
            // independent route: the least integer g with 6g >= 6 + t - 3k,
            // found by scanning
            let mut expect = -10;
            while 6 * expect < 6 + t - 3 * k {
                expect += 1;
            }
            assert_eq!(got, expect, "genus formula at t={t}, k={k}");
            checked += 1;
        }
    }
    let per_pair = started.elapsed() / checked;
    assert!(per_pair.as_millis() < 1, "formula evaluation too slow: {per_pair:?}");
    println!("criterion 1 (genus formula, {checked} pairs): pass");
}

#[test]
fn criterion_2_slope_length_formulas() {
    // crossing circle with 6 crossings: sqrt(37), strictly above 6 by
    // radicand comparison
    let circle = GeomBound { coeff_sq: 1, constant: 1, n: 6 };
    assert_eq!(circle.radicand(), 37);
    assert!(circle.exceeds(6));
    assert_eq!(circle.display(), "sqrt(37)");
    // knot strand through 7 regions: bound 7 > 6; through 6: not above
    let knot7 = GeomBound { coeff_sq: 1, constant: 0, n: 7 };
    assert!(knot7.exceeds(6));
    let knot6 = GeomBound { coeff_sq: 1, constant: 0, n: 6 };
    assert!(!knot6.exceeds(6));
    // combinatorial bounds n pi/3 vs 2 pi via n vs 6, honoring strictness
    let circle6 = LengthBound::Combinatorial { value: Angle::pi_frac(6, 3), strict: true };
    let knot6c = LengthBound::Combinatorial { value: Angle::pi_frac(6, 3), strict: false };
    let knot7c = LengthBound::Combinatorial { value: Angle::pi_frac(7, 3), strict: false };
    assert_eq!(two_pi_check(&[circle6, knot7c], true).unwrap(), SurgeryVerdict::Hyperbolike);
    assert!(matches!(
        two_pi_check(&[knot6c], true).unwrap(),
        SurgeryVerdict::Inconclusive { .. }
    ));
    // the computed coordinates feed the same numbers end to end
    let d = families::double_twist(6, 7).unwrap();
    let dec = decomposition_of(&d);
    let cusps = dec.cusp_tori().unwrap();
    for (i, torus) in cusps.iter().enumerate() {
        if !torus.is_crossing_circle() {
            continue;
        }
        let coords = surgery_coords(&dec, &cusps, i, SlopeSpec::Recovery).unwrap();
        match geometric_length_bound(&coords).unwrap() {
            LengthBound::Geometric { value } => {
                assert_eq!(value.radicand(), (torus.n * torus.n + 1) as i64);
            }
            _ => unreachable!(),
        }
    }
    println!("criterion 2 (slope length formulas): pass");
}

#[test]
fn criterion_3_unit_area_facts() {
    let dec = decomposition_of(&families::double_twist(6, 6).unwrap());
    let c = &dec.complex;
    let link = ns::AdmissibleDisk::normal(PolyId::P1, ns::vertex_link_curve(c, 0));
    assert_eq!(ns::comb_area(&link), Angle::ZERO);
    let bigon = ns::AdmissibleDisk::normal(PolyId::P1, ns::boundary_bigon_curve(c, 0));
    assert_eq!(ns::comb_area(&bigon), Angle::ZERO);
    let f = (0..c.faces.len())
        .find(|&f| ns::face_parallel_triangle(c, f).is_some())
        .unwrap();
    let tri = ns::AdmissibleDisk::normal(PolyId::P1, ns::face_parallel_triangle(c, f).unwrap());
    assert_eq!(ns::comb_area(&tri), Angle::PI);
    assert_eq!(ns::relative_length(&tri).unwrap(), Angle::PI_3);
    println!("criterion 3 (unit areas): pass");
}

#[test]
fn criterion_4_pos_area_oracle_two_and_three_regions() {
    for (label, d) in [
        ("2 regions", families::double_twist(6, 6).unwrap()),
        ("3 regions", families::pretzel(&[6, 6, 6]).unwrap()),
    ] {
        let started = Instant::now();
        let dec = decomposition_of(&d);
        let result = ns::enumerate_normal_curves(&dec.complex, 100);
        assert!(!result.truncated, "{label}: enumeration must be exhaustive");
        let mut triangles = 0;
        for curve in &result.curves {
            let disk = ns::AdmissibleDisk::normal(PolyId::P1, curve.clone());
            let area = ns::comb_area(&disk);
            let class = ns::classify_disk(&disk, &dec.complex);
            let zero = matches!(
                class,
                ns::DiskClass::VertexLink | ns::DiskClass::BoundaryBigon
            );
            assert!(area >= Angle::ZERO, "{label}: negative area");
            assert_eq!(area == Angle::ZERO, zero, "{label}: zero area iff link or bigon");
            let triangle = matches!(
                class,
                ns::DiskClass::IdealTriangleS
                    | ns::DiskClass::IdealTriangleW
                    | ns::DiskClass::IdealTriangleN
            );
            if triangle {
                triangles += 1;
                // all six segments in distinct faces
                let mut faces: Vec<ns::FaceRef> =
                    curve.segments.iter().map(|s| s.face).collect();
                faces.sort_unstable();
                faces.dedup();
                assert_eq!(faces.len(), 6, "{label}: triangle repeats a face");
            }
            if !zero && !triangle && disk.boundary_segment_count() > 0 {
                let l = ns::relative_length(&disk).unwrap();
                assert!(
                    l >= Angle::PI_2,
                    "{label}: relative length {l} below pi/2 for {class:?}"
                );
            }
        }
        assert!(triangles > 0, "{label}: no ideal triangles enumerated");
        let took = started.elapsed();
        assert!(took.as_secs() < 60, "{label}: took {took:?}");
        println!(
            "criterion 4 ({label}, {} curves in {took:?}): pass",
            result.curves.len()
        );
    }
}

#[test]
fn criterion_5_predicate_oracle_agreement() {
    let corpus: Vec<LinkDiagram> = families::small_corpus()
        .into_iter()
        .filter(|d| d.crossing_count() <= 8)
        .collect();
    assert!(corpus.len() >= 20, "corpus too small: {}", corpus.len());
    let mut saw_nonprime = false;
    let mut saw_nonreduced = false;
    for d in &corpus {
        if !d.is_connected() {
            continue;
        }
        let fast_prime = is_prime(d).unwrap().is_prime();
        let slow_prime = oracle::prime_violations(d).is_empty();
        assert_eq!(fast_prime, slow_prime, "prime disagreement on {}", d.label());
        saw_nonprime |= !fast_prime;
        if fast_prime {
            let fast_tr = is_twist_reduced(d).unwrap().is_reduced();
            let slow_tr = oracle::twist_reduced_violations(d).is_empty();
            assert_eq!(fast_tr, slow_tr, "twist-reduced disagreement on {}", d.label());
            saw_nonreduced |= !fast_tr;
        }
    }
    assert!(saw_nonprime, "corpus must include a connected sum");
    assert!(saw_nonreduced, "corpus must include a flype configuration");
    println!("criterion 5 (predicate oracles, {} diagrams): pass", corpus.len());
}

#[test]
fn criterion_6_structural_invariants_of_decompositions() {
    let diagrams = family();
    assert!(diagrams.len() >= 10);
    for d in &diagrams {
        let dec = decomposition_of(d);
        let t = dec.link.region_count();
        dec.validate_structure().unwrap_or_else(|e| panic!("{}: {e}", d.label()));
        assert!(dec.verify_isomorphic(), "{}: P1 and P2 differ", d.label());
        assert_eq!(dec.complex.shaded_face_count(), 2 * t, "{}", d.label());
        for class in dec.edge_classes() {
            assert_eq!(class.len(), 4, "{}: edge class not 4-valent", d.label());
            assert_eq!(dec.edge_class_angle_sum(&class), Angle::TWO_PI);
        }
        let cusps = dec.cusp_tori().unwrap();
        assert_eq!(
            cusps.len(),
            d.component_count() + t,
            "{}: cusp count",
            d.label()
        );
        let regions = d.twist_regions();
        let stats = d.component_stats(&regions);
        for cusp in &cusps {
            match cusp.kind {
                CuspKind::CrossingCircle { .. } => assert_eq!(cusp.tiles.len(), 2),
                CuspKind::KnotStrand { component } => {
                    let diag = dec.components[component].diagram_component;
                    assert_eq!(
                        cusp.tiles.len(),
                        2 * stats[diag].multiplicity,
                        "{}: knot cusp tiles",
                        d.label()
                    );
                }
            }
        }
    }
    println!(
        "criterion 6 (structural invariants, {} decompositions): pass",
        diagrams.len()
    );
}

#[test]
fn criterion_7_gauss_bonnet_identity() {
    let dec = decomposition_of(&families::double_twist(6, 7).unwrap());
    let cusps = dec.cusp_tori().unwrap();
    let mut surfaces = 0;
    // vertex-link tori over every cusp: area 0, chi 0
    for cusp in &cusps {
        let torus = ns::vertex_link_torus(&dec, cusp);
        let report = ns::gauss_bonnet(&dec, &torus).unwrap();
        assert!(report.complete && report.holds && report.euler == 0);
        assert_eq!(report.area, Angle::ZERO);
        surfaces += 1;
    }
    // a bigon annulus around every glued edge class
    for class in dec.edge_classes() {
        let annulus = ns::bigon_annulus(&dec, &class);
        let report = ns::gauss_bonnet(&dec, &annulus).unwrap();
        assert!(report.complete && report.holds && report.euler == 0);
        assert_eq!(report.area, Angle::ZERO);
        surfaces += 1;
    }
    // parallel triangle pairs: three-holed spheres of area 2 pi
    for f in 0..dec.complex.faces.len() {
        if let Some(pants) = ns::parallel_triangle_pair(&dec, f) {
            let report = ns::gauss_bonnet(&dec, &pants).unwrap();
            assert!(report.complete && report.holds);
            assert_eq!(report.euler, -1);
            assert_eq!(report.area, Angle::TWO_PI);
            surfaces += 1;
        }
    }
    assert!(surfaces >= 5, "need at least five glued test surfaces");
    println!("criterion 7 (Gauss-Bonnet, {surfaces} surfaces): pass");
}

#[test]
fn criterion_8_end_to_end_certification() {
    let diagrams = family();
    let mut knots_checked = 0;
    for d in &diagrams {
        let started = Instant::now();
        let cert = certify_hyperbolic(d);
        assert!(cert.certified(), "{}: hyp-link fails: {:?}", d.label(), cert.notes);
        let genus = genus_lower_bound(d);
        assert!(genus.certified());

        if d.component_count() == 1 && d.twist_regions().len() >= 4 {
            let cert = certify_no_exceptional(d);
            assert!(cert.certified(), "{}: {:?}", d.label(), cert.notes);
            assert_eq!(cert.theorem, "main-knot-cor");
            // both routes must agree; re-run them directly
            let dec = decomposition_of(d);
            let cusps = dec.cusp_tori().unwrap();
            let mut geo = Vec::new();
            let mut comb = Vec::new();
            for (i, torus) in cusps.iter().enumerate() {
                let slope = if torus.is_crossing_circle() {
                    SlopeSpec::Recovery
                } else {
                    SlopeSpec::AnyNontrivial
                };
                let coords: SlopeCoords = surgery_coords(&dec, &cusps, i, slope).unwrap();
                geo.push(geometric_length_bound(&coords).unwrap());
                comb.push(ns::comb_length_lower_bound(torus, &coords).unwrap());
            }
            let g = six_theorem_check(&geo, true).unwrap();
            let c = two_pi_check(&comb, true).unwrap();
            assert_eq!(g, SurgeryVerdict::Hyperbolike, "{}", d.label());
            assert_eq!(c, SurgeryVerdict::Hyperbolike, "{}", d.label());
            knots_checked += 1;
        }
        assert!(started.elapsed().as_secs() < 1, "{}: certification too slow", d.label());
    }
    assert!(knots_checked >= 1, "family must contain knots with t >= 4");

    // single-hypothesis perturbations flip to INCONCLUSIVE
    let five = families::pretzel(&[5, 6, 6]).unwrap();
    let cert = certify_hyperbolic(&five);
    assert!(!cert.certified(), "a region of five crossings must not certify");
    assert!(cert
        .checklist
        .iter()
        .any(|i| i.item == "min crossings per twist region" && !i.pass));

    let t3 = families::pretzel(&[7, 7, 7]).unwrap();
    assert_eq!(t3.component_count(), 1);
    let cert = certify_no_exceptional(&t3);
    assert!(!cert.certified(), "a knot with three regions must not certify");
    // but hyperbolicity itself still certifies at t = 3
    assert!(certify_hyperbolic(&t3).certified());

    println!(
        "criterion 8 (end-to-end, {} diagrams, {} knots both routes): pass",
        diagrams.len(),
        knots_checked
    );
}

#[test]
fn criterion_9_deterministic_reports() {
    let run = || -> String {
        let mut out = String::new();
        for d in family() {
            let cert = certify_no_exceptional(&d);
            out.push_str(&serde_json::to_string(&cert.to_json()).unwrap());
            out.push('\n');
            let dec = decomposition_of(&d);
            out.push_str(&serde_json::to_string(&dec.to_json()).unwrap());
            out.push('\n');
        }
        out
    };
    let a = run();
    let b = run();
    assert_eq!(a, b, "reports must be byte-identical across runs");
    println!("criterion 9 (determinism, {} bytes compared): pass", a.len());
}
