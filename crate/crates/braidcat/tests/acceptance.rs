//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Every assertion is exact (zero tolerance) — the arithmetic is
//! rational throughout.
//!
//! Two sub-criteria are expected to fail and are asserted faithfully
//! anyway, because the mathematics over the rationals contradicts them:
//! see `KNOWN LIMITATIONS` in the README. Their tests print the failing
//! evidence before asserting.

use braidcat::braiding::{
    all_verdicts, braidability_report_with_testset, check_c2_conditions, corollary_check,
    graded_braiding_component, restrict_to_identity_component, rform_braiding, verify_hexagons,
    BraidingCandidate, CandidateClass, Certificate, ThetaTauIndexing, VerdictKind,
};
use braidcat::comodule::{grouplike_comodule, regular_comodule, tensor_comodules, Comodule};
use braidcat::crossed::{
    build_testset, preset, validate_datum, verify_associator_morphisms, verify_pentagon,
    PresetName, TestsetKind,
};
use braidcat::hopf::{HopfData, RForm};
use braidcat::linalg::{kernel_basis, qi, solve_affine, Matrix, Scalar};
use braidcat::morphisms::{enumerate_bicomodule_algebra_autos, enumerate_bigalois_isos};
use braidcat::supergroup::{
    build_iota, build_supergroup, parity_character, standard_r_form, standard_r_matrix,
    SupergroupBasis,
};
use num_traits::{One, Zero};
use std::sync::OnceLock;

struct World {
    h: HopfData,
    r: RForm,
}

fn world() -> &'static World {
    static W: OnceLock<World> = OnceLock::new();
    W.get_or_init(|| World {
        h: build_supergroup(2),
        r: standard_r_form(2),
    })
}

fn u_vec(h: &HopfData) -> Vec<Scalar> {
    let b = SupergroupBasis::new(2);
    let mut v = vec![Scalar::zero(); h.dim()];
    v[b.index(1, 0)] = Scalar::one();
    v
}

fn line(criterion: &str, ok: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} — {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
}

#[test]
fn criterion_1_hopf_qt_cqt_verification() {
    let w = world();
    let reports = [
        w.h.verify_bialgebra_axioms(),
        w.h.verify_antipode(),
        w.h.verify_qt(&standard_r_matrix(2)),
        w.h.verify_cqt(&w.r),
    ];
    let ok = reports.iter().all(|r| r.passed());
    line(
        "1",
        ok,
        "H(2) passes bialgebra, antipode, QT (corrected R) and CQT suites exactly",
    );
    for r in &reports {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn criterion_2_enumeration() {
    let w = world();
    let gs = w.h.enumerate_grouplikes().expect("enumeration succeeds");
    let mut one = vec![Scalar::zero(); 8];
    one[0] = Scalar::one();
    let u = u_vec(&w.h);
    let grouplikes_ok = gs.len() == 2 && gs.contains(&one) && gs.contains(&u);

    let autos = enumerate_bicomodule_algebra_autos(&w.h).expect("enumeration succeeds");
    let autos_ok = autos.len() == 1 && autos[0].matrix.is_identity();

    let isos = enumerate_bigalois_isos(&w.h, &u).expect("enumeration succeeds");
    let iota = build_iota(2);
    let isos_ok = isos.len() == 1 && isos[0].matrix == iota;
    // ι(u) = −u and ι(x_i) = −x_i
    let b = SupergroupBasis::new(2);
    let iota_values_ok = iota.get(b.index(1, 0), b.index(1, 0)) == qi(-1)
        && iota.get(b.index(0, 1), b.index(0, 1)) == qi(-1)
        && iota.get(b.index(0, 2), b.index(0, 2)) == qi(-1);

    let ok = grouplikes_ok && autos_ok && isos_ok && iota_values_ok;
    line(
        "2",
        ok,
        "grouplikes = {1,u}; automorphisms = {id}; twisted isomorphisms = {iota}",
    );
    assert!(ok);
}

#[test]
fn criterion_3_pentagon_and_mutations() {
    let w = world();
    let ts = build_testset(&w.h, TestsetKind::Default);

    // the three specified datum mutations all produce pinned witnesses
    let mut m1 = preset(&w.h, PresetName::DIotaPlus);
    m1.datum.gamma[1][1][1] = qi(2);
    let r1 = validate_datum(&w.h, &m1.datum);
    let m1_ok = !r1.passed()
        && r1
            .violations
            .iter()
            .any(|v| v.identity.contains("3-cocycle") && v.witness == vec!["u", "u", "u", "u"]);

    let mut m2 = preset(&w.h, PresetName::DIotaPlus);
    m2.datum.fmaps[1][1] = Matrix::identity(8);
    let r2 = validate_datum(&w.h, &m2.datum);
    let m2_ok = !r2.passed()
        && r2
            .violations
            .iter()
            .any(|v| v.identity.contains("bicomodule") && v.witness == vec!["u", "u"]);

    let mut m3 = preset(&w.h, PresetName::DIotaPlus);
    m3.datum.gmap[1][1] = w.h.unit_vector().to_vec();
    let r3 = validate_datum(&w.h, &m3.datum);
    let m3_ok = !r3.passed()
        && r3
            .violations
            .iter()
            .any(|v| v.identity.contains("bicomodule") && v.witness == vec!["u", "u"]);

    line(
        "3 (mutations)",
        m1_ok && m2_ok && m3_ok,
        "γ→2, ι→id and g(u,u)→1 each produce a pinned validation witness",
    );
    assert!(m1_ok && m2_ok && m3_ok);

    // pentagon over the default testset
    let mut all_pass = true;
    for name in [
        PresetName::DIdPlus,
        PresetName::DIdMinus,
        PresetName::DIotaPlus,
        PresetName::DIotaMinus,
    ] {
        let p = preset(&w.h, name);
        let report = verify_pentagon(&w.h, &p.datum, &ts);
        println!(
            "  pentagon {}: {}",
            p.name.display_name(),
            if report.passed() {
                "pass".to_string()
            } else {
                format!(
                    "FAIL ({} of {} quadruples; first witness {:?})",
                    report.violations.len(),
                    report.checks_run,
                    report.violations[0].witness
                )
            }
        );
        all_pass &= report.passed();
    }
    line(
        "3 (pentagon)",
        all_pass,
        "all four D presets satisfy the pentagon on the default testset \
         (known limitation: the two iota presets require a fourth root of \
         unity and cannot satisfy it over the rationals; see README and \
         the pinned witnesses above)",
    );
    assert!(
        all_pass,
        "pentagon fails for the iota presets over the rationals; \
         this criterion is recorded as a known limitation"
    );
}

#[test]
fn criterion_4_braidability_verdicts() {
    let w = world();
    let verdicts = all_verdicts(&w.h, &w.r, TestsetKind::Default);
    let by = |n: &str| verdicts.iter().find(|v| v.preset == n).expect("preset");

    let mut ok = true;
    for c0 in [
        "C0-1-id-plus",
        "C0-1-id-minus",
        "C0-u-iota-plus",
        "C0-u-iota-minus",
    ] {
        let v = by(c0);
        ok &= v.verdict == VerdictKind::Filtered
            && matches!(&v.certificate, Certificate::Filter { condition } if condition.contains("condition (1)"));
    }
    for good in ["D-1-id-plus", "D-u-iota-plus"] {
        let v = by(good);
        ok &= v.verdict == VerdictKind::Braidable
            && matches!(&v.certificate, Certificate::Braiding { candidate, hexagon_checks, .. }
                if candidate.contains("trivial") && *hexagon_checks > 0);
    }
    for bad in ["D-1-id-minus", "D-u-iota-minus"] {
        let v = by(bad);
        ok &= v.verdict == VerdictKind::NonBraidable
            && matches!(&v.certificate, Certificate::Violation { condition, .. }
                if condition.starts_with("e.") || condition.starts_with("d."));
    }
    line(
        "4",
        ok,
        "two braidable with trivial-braiding certificates, two blocked by γ = 1, four filtered",
    );
    assert!(ok, "{verdicts:#?}");
}

#[test]
fn criterion_5_hexagon_failure_witness() {
    let w = world();
    let ts = build_testset(&w.h, TestsetKind::Default);
    let p = preset(&w.h, PresetName::DIotaMinus);
    let cand = BraidingCandidate::trivial(&w.h, 2);
    let report = verify_hexagons(
        &w.h,
        &p.datum,
        &w.r,
        &cand,
        ThetaTauIndexing::BothFirstGrade,
        &ts,
    );
    let witness = report
        .violations
        .iter()
        .find(|v| v.identity == "(bra1)" && v.witness.iter().take(3).all(|n| n.ends_with(",u]")));
    let ok = !report.passed() && witness.is_some();
    line(
        "5",
        ok,
        &format!(
            "trivial braiding on D(u,iota,-1) fails (bra1) at {:?}",
            witness.map(|v| v.witness.clone()).unwrap_or_default()
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_6_corollary_identity() {
    let w = world();
    let regular = regular_comodule(&w.h);
    let one = w.h.unit_vector().to_vec();
    let u = u_vec(&w.h);
    let id = Matrix::identity(8);
    let iota = build_iota(2);

    let r_id_1 = corollary_check(&w.h, &w.r, &id, &one, &regular);
    let r_iota_u = corollary_check(&w.h, &w.r, &iota, &u, &regular);
    let r_id_u = corollary_check(&w.h, &w.r, &id, &u, &regular);
    let ok = r_id_1.passed()
        && r_iota_u.passed()
        && !r_id_u.passed()
        && r_id_1.checks_run == 8
        && r_iota_u.checks_run == 8;
    line(
        "6",
        ok,
        "r(f(x₋₁)⊗g)x₀ = x holds for (id,1) and (iota,u), fails for (id,u), over all 8 basis elements",
    );
    assert!(ok);
}

#[test]
fn criterion_7_restriction_and_symmetry() {
    let w = world();
    let ts = build_testset(&w.h, TestsetKind::Default);
    let cand = BraidingCandidate::trivial(&w.h, 2);
    let mut restriction_ok = true;
    let mut symmetric_notes = 0;
    for name in [PresetName::DIdPlus, PresetName::DIotaPlus] {
        let p = preset(&w.h, name);
        let report = restrict_to_identity_component(
            &w.h,
            &p.datum,
            &w.r,
            &cand,
            ThetaTauIndexing::BothFirstGrade,
            &ts,
        );
        restriction_ok &= report.passed();
        if report
            .notes
            .iter()
            .any(|n| n.contains("symmetric on the testset"))
        {
            symmetric_notes += 1;
        }
    }
    line(
        "7 (restriction)",
        restriction_ok,
        "grade-e restriction equals the r-form braiding and passes the base hexagons",
    );
    assert!(restriction_ok);

    // the non-symmetry sub-criterion: c² ≠ id at some test pair.
    // The standard r-form of this supergroup algebra is triangular
    // (r21 ⋆ r = ε⊗ε), so c² = id on every pair of comodules; no witness
    // can exist. Asserted faithfully; see README and the decisions ledger.
    let found_nonsymmetry_witness = symmetric_notes == 0;
    line(
        "7 (non-symmetry)",
        found_nonsymmetry_witness,
        "c² ≠ id at some test pair (known limitation: this r-form is \
         triangular, c² = id everywhere, so the scan finds no witness)",
    );
    assert!(
        found_nonsymmetry_witness,
        "no non-symmetry witness exists for the triangular r-form; \
         recorded as a known limitation"
    );
}

#[test]
fn criterion_8_property_suites() {
    let w = world();

    // comodule axioms at construction: tensor products revalidate
    let reg = regular_comodule(&w.h);
    let ku = grouplike_comodule(&w.h, &u_vec(&w.h)).expect("u grouplike");
    let prod = tensor_comodules(&w.h, &reg, &ku);
    let revalidated = Comodule::new(&w.h, prod.coaction.clone(), prod.right_coaction.clone());
    let comodule_ok = revalidated.is_ok();

    // kernel/rank identities on a deterministic family
    let mut linalg_ok = true;
    for seed in 0..5i64 {
        let m = Matrix::from_fn(4, 5, |i, j| qi(((i as i64 + 2) * (j as i64 + 1) + seed) % 5 - 2));
        let basis = kernel_basis(&m);
        linalg_ok &= m.rank() + basis.len() == m.cols();
        for v in &basis {
            linalg_ok &= m.apply(v).iter().all(|x| x.is_zero());
        }
        let b: Vec<Scalar> = (0..4).map(|i| qi((i + seed) % 3)).collect();
        if let Some((x, _)) = solve_affine(&m, &b) {
            linalg_ok &= m.apply(&x) == b;
        }
    }

    // enumeration re-verification: returned maps carry verified flags and
    // grouplikes form a group
    let gs = w.h.enumerate_grouplikes().expect("grouplikes");
    let mut enum_ok = true;
    for a in &gs {
        enum_ok &= w.h.is_grouplike(a);
        for b in &gs {
            enum_ok &= gs.contains(&w.h.multiply(a, b));
        }
    }
    for m in enumerate_bigalois_isos(&w.h, &u_vec(&w.h)).expect("isos") {
        enum_ok &= m.is_algebra_map && m.is_left_comodule && m.is_right_comodule;
    }

    // verdict determinism under testset reordering
    let p = preset(&w.h, PresetName::DIotaMinus);
    let ts = build_testset(&w.h, TestsetKind::Default);
    let mut reversed = ts.clone();
    reversed.reverse();
    let v1 = braidability_report_with_testset(&w.h, &w.r, &p, &ts);
    let v2 = braidability_report_with_testset(&w.h, &w.r, &p, &reversed);
    let determinism_ok = v1.verdict == v2.verdict
        && v1.exploratory.len() == v2.exploratory.len()
        && v1
            .exploratory
            .iter()
            .zip(&v2.exploratory)
            .all(|(a, b)| a.hexagons_pass == b.hexagons_pass);

    let ok = comodule_ok && linalg_ok && enum_ok && determinism_ok;
    line(
        "8",
        ok,
        "construction-time comodule axioms, kernel/rank identities, enumeration re-verification, verdict determinism",
    );
    assert!(ok);
}

#[test]
fn criterion_9_exploratory_character_candidate() {
    let w = world();
    let p = preset(&w.h, PresetName::DIotaMinus);
    let ts = build_testset(&w.h, TestsetKind::Default);
    let regular = regular_comodule(&w.h);

    // the χ-candidate passes conditions a-f by direct arithmetic...
    let chi = parity_character(2);
    let cand = BraidingCandidate::from_functionals(
        "character candidate (θ = τ = χ, t ≡ 1)",
        &w.h,
        0,
        2,
        &chi,
        &chi,
        CandidateClass::Character,
    );
    let conditions = check_c2_conditions(&w.h, &p.datum, &w.r, &cand, &regular);

    // ...and the pipeline runs it through the hexagon oracle to completion
    let verdict = braidability_report_with_testset(&w.h, &w.r, &p, &ts);
    let expl = verdict
        .exploratory
        .iter()
        .find(|e| e.candidate.contains("character"));
    let ok = conditions.passed()
        && expl.is_some_and(|e| {
            e.flag.contains("beyond")
                && (e.hexagons_pass || e.first_hexagon_violation.is_some())
        });
    let outcome = expl
        .map(|e| {
            format!(
                "conditions a-f pass; hexagons {}{}",
                if e.hexagons_pass { "pass" } else { "fail" },
                e.first_hexagon_violation
                    .as_deref()
                    .map(|v| format!(" ({v})"))
                    .unwrap_or_default()
            )
        })
        .unwrap_or_default();
    line("9", ok, &format!("χ-candidate pipeline completes: {outcome}"));
    assert!(ok);

    // a braiding component of the candidate exists for every pair
    for x in &ts {
        for y in &ts {
            let c = graded_braiding_component(
                &w.h,
                &p.datum,
                &w.r,
                &cand,
                ThetaTauIndexing::BothFirstGrade,
                x,
                y,
            )
            .expect("instantiable");
            assert_eq!(c.matrix.rows(), c.target.dim());
        }
    }
}

#[test]
fn acceptance_suite_exercises_morphism_invariants() {
    // supporting sweep for criterion 8: associator components over the
    // default testset are comodule morphisms for every instantiable preset
    let w = world();
    let ts = build_testset(&w.h, TestsetKind::Minimal);
    for name in [
        PresetName::DIdPlus,
        PresetName::DIdMinus,
        PresetName::DIotaPlus,
        PresetName::DIotaMinus,
    ] {
        let p = preset(&w.h, name);
        let report = verify_associator_morphisms(&w.h, &p.datum, &ts);
        assert!(report.passed(), "{name:?}: {report}");
    }
    // and the r-form braiding components on the base category are natural
    let reg = regular_comodule(&w.h);
    let ku = grouplike_comodule(&w.h, &u_vec(&w.h)).expect("grouplike");
    let c = rform_braiding(&w.h, &w.r, &reg, &ku);
    assert_eq!(c.rows(), 8);
}
