//! End-to-end checks of the parser, printers, and command suites.

use catcheck::bridge;
use catcheck::classical;
use catcheck::fixtures;
use catcheck_cli::{commands, Workspace, WsError};

const BUDGET: u64 = 1_000_000;

fn fixture_ws() -> Workspace {
    let mut ws = Workspace::new();
    commands::load_fixtures(&mut ws).unwrap();
    ws
}

#[test]
fn shipped_fixture_file_validates() {
    let mut ws = Workspace::new();
    ws.load_file(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/galois.cat"))
        .unwrap();
    let report = commands::cmd_validate(&ws, &[]);
    assert!(report.all_pass(), "{}", report.render_text());
    // the parsed entities agree with the programmatic fixtures
    assert_eq!(ws.arrows["galoisf"], fixtures::galois_cr());
    assert_eq!(ws.emonads["clo2f"], fixtures::clo2());
    assert_eq!(ws.adjunctions["galoisadjf"], fixtures::galois_adjunction());
    assert_eq!(ws.cmonads["clo2cf"], fixtures::clo2_classical());
    assert_eq!(ws.emorphisms["cloinclf"], fixtures::clo_two_up_inclusion());
    assert_eq!(ws.ecells["thetaf"], fixtures::clo_theta_cell());
    assert_eq!(ws.ucells["etacellf"], fixtures::galois_eta_cell());
}

#[test]
fn law_breaking_entities_become_report_errors() {
    // a syntactically fine category missing a composite: the validate
    // suite records the law failure instead of aborting the load
    let mut ws = Workspace::new();
    let failures = ws
        .load_str_lenient(
            "broken.cat",
            "category broken\nobject a\nmorphism a→a : a -> a\nidentity a = a→a\n",
        )
        .unwrap();
    assert_eq!(failures.len(), 1);
    assert_eq!(failures[0].0, "category.broken");
    let report = commands::cmd_validate(&ws, &failures);
    assert!(!report.all_pass());
    assert!(report
        .render_text()
        .contains("missing composite for a→a . a→a"));
}

#[test]
fn parse_error_carries_the_line() {
    let mut ws = Workspace::new();
    let err = ws
        .load_str("bad.cat", "category c\nobject a\nobjekt b\n")
        .unwrap_err();
    match err {
        WsError::Parse { line, .. } => assert_eq!(line, 3),
        other => panic!("expected parse error, got {other}"),
    }
}

#[test]
fn duplicate_definitions_are_errors() {
    let mut ws = Workspace::new();
    let err = ws
        .load_str(
            "dup.cat",
            "category c\nobject a\nobject a\n",
        )
        .unwrap_err();
    assert!(matches!(err, WsError::Parse { .. }));

    let mut ws = Workspace::new();
    let text = "category c\nobject a\nmorphism a→a : a -> a\nidentity a = a→a\ncompose a→a . a→a = a→a\n";
    ws.load_str("one.cat", text).unwrap();
    let err = ws.load_str("two.cat", text).unwrap_err();
    assert!(matches!(err, WsError::Duplicate { .. }));
}

#[test]
fn derive_output_reparses_to_the_derived_entity() {
    let ws = fixture_ws();

    // phi: monad block against the registered base category
    let text = commands::cmd_derive(&ws, "phi", "GaloisCR", None, BUDGET).unwrap();
    let mut ws2 = fixture_ws();
    ws2.load_str("derived.cat", &text).unwrap();
    assert_eq!(
        ws2.emonads["GaloisCR.phi"],
        bridge::phi_on_object(&fixtures::galois_cr()).unwrap()
    );

    // psi: prints the algebra category, the forgetful functor, and the arrow
    let text = commands::cmd_derive(&ws, "psi", "Clo2", None, BUDGET).unwrap();
    let mut ws2 = fixture_ws();
    ws2.load_str("derived.cat", &text).unwrap();
    let em = bridge::psi_on_object(&fixtures::clo2(), BUDGET).unwrap();
    assert_eq!(ws2.arrows["Clo2.psi"], em.arrow);

    // f, g, h, k
    let text = commands::cmd_derive(&ws, "f", "GaloisCR", None, BUDGET).unwrap();
    let mut ws2 = fixture_ws();
    ws2.load_str("derived.cat", &text).unwrap();
    assert_eq!(
        ws2.adjunctions["GaloisCR.f"],
        classical::f_on_object(&fixtures::galois_cr()).unwrap()
    );

    let text = commands::cmd_derive(&ws, "g", "GaloisAdj", None, BUDGET).unwrap();
    let mut ws2 = fixture_ws();
    ws2.load_str("derived.cat", &text).unwrap();
    assert_eq!(
        ws2.arrows["GaloisAdj.g"],
        classical::g_on_object(&fixtures::galois_adjunction()).unwrap()
    );

    let text = commands::cmd_derive(&ws, "h", "Clo2", None, BUDGET).unwrap();
    let mut ws2 = fixture_ws();
    ws2.load_str("derived.cat", &text).unwrap();
    assert_eq!(
        ws2.cmonads["Clo2.h"],
        classical::h_on_object(&fixtures::clo2()).unwrap()
    );

    let text = commands::cmd_derive(&ws, "k", "Clo2C", None, BUDGET).unwrap();
    let mut ws2 = fixture_ws();
    ws2.load_str("derived.cat", &text).unwrap();
    assert_eq!(
        ws2.emonads["Clo2C.k"],
        classical::k_on_object(&fixtures::clo2_classical()).unwrap()
    );
}

#[test]
fn derive_honors_the_explicit_name() {
    let ws = fixture_ws();
    let text = commands::cmd_derive(&ws, "phi", "GaloisCR", Some("rlmonad"), BUDGET).unwrap();
    assert!(text.starts_with("emonad rlmonad on Chain3"));
    let mut ws2 = fixture_ws();
    ws2.load_str("derived.cat", &text).unwrap();
    assert!(ws2.emonads.contains_key("rlmonad"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let ws = fixture_ws();
    let one = commands::cmd_validate(&ws, &[]).render_text();
    let two = commands::cmd_validate(&fixture_ws(), &[]).render_text();
    assert_eq!(one, two);

    let a = commands::cmd_adjunction(&ws, "GaloisCR", "Clo2", false, BUDGET)
        .unwrap()
        .render_sidecar();
    let b = commands::cmd_adjunction(&ws, "GaloisCR", "Clo2", false, BUDGET)
        .unwrap()
        .render_sidecar();
    assert_eq!(a, b);
}

#[test]
fn adjunction_suite_on_the_induced_monad_is_strict_clean() {
    // the pair (GaloisCR, Phi GaloisCR) under --strict
    let ws = fixture_ws();
    let report = commands::cmd_adjunction(&ws, "GaloisCR", "CloRL", true, BUDGET).unwrap();
    let text = report.render_text();
    assert!(report.all_pass(), "{text}");
    assert!(text.contains("triangular.left.GaloisCR"));
    assert!(text.contains("triangular.right.CloRL"));
    assert!(!text.contains("Fails"));
}

#[test]
fn adjunction_suite_reports_verdicts() {
    let ws = fixture_ws();
    let report = commands::cmd_adjunction(&ws, "GaloisCR", "Clo2", false, BUDGET).unwrap();
    let text = report.render_text();
    assert!(report.all_pass(), "{text}");
    assert!(text.contains("unit-2naturality.SkewCell: Fails at X=a"));
    assert!(text.contains("unit-2naturality.EtaCell: Holds"));

    let strict = commands::cmd_adjunction(&ws, "GaloisCR", "Clo2", true, BUDGET).unwrap();
    let text = strict.render_text();
    assert!(!text.contains("Fails"), "{text}");
    assert!(text.contains("unit-2naturality.EtaCell: Holds"));
}

#[test]
fn roundtrip_suite_covers_every_kind() {
    let ws = fixture_ws();
    for entity in [
        "GaloisCR", "UOne", "UIso2", "Clo2", "CloTwoUp", "MOne", "GaloisAdj", "Clo2C",
        "GaloisRL", "SkewIso2", "CloIncl", "EtaCell", "SkewCell", "CloTheta",
    ] {
        let report = commands::cmd_roundtrip(&ws, entity).unwrap();
        assert!(report.all_pass(), "{}", report.render_text());
    }
    let err = commands::cmd_roundtrip(&ws, "NoSuchThing").unwrap_err();
    assert!(matches!(err, WsError::Unknown { .. }));
}

#[test]
fn square_suite_passes_on_fixtures() {
    let ws = fixture_ws();
    let report = commands::cmd_square(&ws, None, BUDGET);
    assert!(report.all_pass(), "{}", report.render_text());
    // a group prefix narrows the run
    let galois = commands::cmd_square(&ws, Some("Galois"), BUDGET);
    assert!(galois.checks.len() < report.checks.len());
    assert!(galois.all_pass());
}

#[test]
fn umorphism_rho_inverse_is_derived_not_read() {
    // the skew Iso2 morphism parses from file with only rho given
    let text = "\
category iso2f
object a
object b
morphism a→a : a -> a
morphism a→b : a -> b
morphism b→a : b -> a
morphism b→b : b -> b
identity a = a→a
identity b = b→b
compose a→a . a→a = a→a
compose a→b . a→a = a→b
compose a→a . b→a = b→a
compose a→b . b→a = b→b
compose b→a . a→b = a→a
compose b→b . a→b = a→b
compose b→a . b→b = b→a
compose b→b . b→b = b→b
functor idiso2f : iso2f -> iso2f
on-object a => a
on-object b => b
on-morphism a→a => a→a
on-morphism a→b => a→b
on-morphism b→a => b→a
on-morphism b→b => b→b
functor constbf : iso2f -> iso2f
on-object a => b
on-object b => b
on-morphism a→a => b→b
on-morphism a→b => b→b
on-morphism b→a => b→b
on-morphism b→b => b→b
uarrow uiso2f : iso2f | iso2f
right idiso2f
left a => a
left b => b
unit a => a→a
unit b => b→b
umorphism skewf : uiso2f -> uiso2f
J idiso2f
V constbf
rho a => a→b
rho b => b→b
";
    let mut ws = Workspace::new();
    ws.load_str("skew.cat", text).unwrap();
    let parsed = &ws.umorphisms["skewf"];
    assert_eq!(parsed.rho_inv.at("a").unwrap(), "b→a");
    assert_eq!(*parsed, fixtures::iso2_skew_morphism());
}
