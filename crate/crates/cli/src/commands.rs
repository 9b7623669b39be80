//! The check suites behind each CLI subcommand.  Every suite walks its
//! entities in name order, so reports are byte-identical across runs.

use crate::printer;
use crate::report::{Report, Status};
use crate::workspace::{Workspace, WsError, WsResult};
use catcheck::bridge::{self, NaturalityVerdict};
use catcheck::classical;
use catcheck::emnd::{EMndMorphism, ExtensiveMonad};
use catcheck::fincat::FinCategory;
use catcheck::square;
use catcheck::uarr::UniversalArrow;
use catcheck::{fixtures, CheckError};

/// Registers the built-in fixture set.
pub fn load_fixtures(ws: &mut Workspace) -> WsResult<()> {
    ws.categories.insert("One".into(), fixtures::one());
    ws.categories.insert("Two".into(), fixtures::two());
    ws.categories.insert("Chain3".into(), fixtures::chain3());
    ws.categories.insert("Div6".into(), fixtures::div6());
    ws.categories.insert("Iso2".into(), fixtures::iso2());
    ws.categories.insert("Z2".into(), fixtures::z2());
    ws.functors
        .insert("InclTwoChain3".into(), fixtures::inclusion_two_chain3());
    ws.functors
        .insert("CloChain3".into(), fixtures::chain3_closure_functor());
    ws.arrows.insert("UOne".into(), fixtures::one_arrow());
    ws.arrows.insert("GaloisCR".into(), fixtures::galois_cr());
    ws.arrows.insert("UIso2".into(), fixtures::iso2_arrow());
    ws.arrows
        .insert("UZ2".into(), UniversalArrow::identity(&fixtures::z2())?);
    ws.arrows.insert("GaloisP".into(), fixtures::galois_preorder());
    ws.umorphisms
        .insert("GaloisRL".into(), fixtures::galois_rl_morphism());
    ws.umorphisms
        .insert("SkewIso2".into(), fixtures::iso2_skew_morphism());
    ws.umorphisms
        .insert("SkewGaloisP".into(), fixtures::galois_preorder_skew());
    ws.ucells.insert("EtaCell".into(), fixtures::galois_eta_cell());
    ws.ucells.insert("SkewCell".into(), fixtures::iso2_skew_cell());
    ws.ucells
        .insert("SkewPCell".into(), fixtures::galois_preorder_skew_cell());
    ws.emonads
        .insert("MOne".into(), ExtensiveMonad::identity(&fixtures::one())?);
    ws.emonads.insert("Clo2".into(), fixtures::clo2());
    ws.emonads.insert("CloTwoUp".into(), fixtures::clo_two_up());
    ws.emonads.insert("Div6Clo".into(), fixtures::div6_closure());
    ws.emonads
        .insert("CloRL".into(), bridge::phi_on_object(&fixtures::galois_cr())?);
    ws.emonads
        .insert("MIso2".into(), ExtensiveMonad::identity(&fixtures::iso2())?);
    ws.emonads
        .insert("MZ2".into(), ExtensiveMonad::identity(&fixtures::z2())?);
    ws.emorphisms
        .insert("CloIncl".into(), fixtures::clo_two_up_inclusion());
    ws.emorphisms
        .insert("CloShift".into(), fixtures::clo_q_morphism());
    ws.emorphisms
        .insert("CloEndo".into(), fixtures::closure_endocell(&fixtures::clo2())?);
    ws.ecells.insert("CloTheta".into(), fixtures::clo_theta_cell());
    ws.ecells.insert("CloUnit".into(), fixtures::clo_unit_cell());
    ws.cmonads.insert("Clo2C".into(), fixtures::clo2_classical());
    ws.adjunctions
        .insert("GaloisAdj".into(), fixtures::galois_adjunction());
    Ok(())
}

/// Re-validates every registered entity, one check per entity; entities
/// that already failed to load are reported as errors up front.
pub fn cmd_validate(ws: &Workspace, load_failures: &[(String, WsError)]) -> Report {
    let mut report = Report::new("validate");
    for (label, err) in load_failures {
        report.add(label.clone(), Status::Error, err.to_string());
    }
    for (name, cat) in &ws.categories {
        let rebuilt = FinCategory::validate(
            cat.objects().to_vec(),
            cat.morphisms().cloned().collect(),
            cat.objects()
                .iter()
                .map(|a| (a.clone(), cat.identity_of(a).unwrap()))
                .collect(),
            cat.morphisms()
                .flat_map(|g| {
                    cat.morphisms()
                        .filter(|f| f.tgt == g.src)
                        .map(|f| ((g.id.clone(), f.id.clone()), cat.comp(&g.id, &f.id).unwrap()))
                        .collect::<Vec<_>>()
                })
                .collect(),
        );
        report.add_result(format!("category.{name}"), rebuilt.map(|_| ()));
    }
    for (name, f) in &ws.functors {
        report.add_result(format!("functor.{name}"), f.revalidate());
    }
    for (name, t) in &ws.nats {
        report.add_result(format!("nat.{name}"), t.revalidate());
    }
    for (name, u) in &ws.arrows {
        let again =
            UniversalArrow::validate(u.right.clone(), u.left.clone(), u.unit.clone());
        report.add_result(
            format!("uarrow.{name}"),
            again.and_then(|v| {
                if v == *u {
                    Ok(())
                } else {
                    Err(CheckError::Internal("stored zeta differs".into()))
                }
            }),
        );
    }
    for (name, m) in &ws.umorphisms {
        let again = catcheck::uarr::UArrMorphism::validate(
            m.source.clone(),
            m.target.clone(),
            m.j.clone(),
            m.v.clone(),
            m.rho.clone(),
            m.rho_inv.clone(),
        );
        report.add_result(format!("umorphism.{name}"), again.map(|_| ()));
    }
    for (name, c) in &ws.ucells {
        let again = catcheck::uarr::UArrTwoCell::validate(
            c.source.clone(),
            c.target.clone(),
            c.alpha.clone(),
            c.beta.clone(),
        );
        report.add_result(format!("ucell.{name}"), again.map(|_| ()));
    }
    for (name, m) in &ws.emonads {
        let again = ExtensiveMonad::validate(
            m.base.clone(),
            m.s.clone(),
            m.unit.clone(),
            m.ext.clone(),
        );
        report.add_result(format!("emonad.{name}"), again.map(|_| ()));
    }
    for (name, (monad_name, alg)) in &ws.algebras {
        let result = match ws.emonads.get(monad_name) {
            Some(m) => alg.revalidate(m),
            None => Err(CheckError::Internal(format!(
                "algebra references unknown monad {monad_name}"
            ))),
        };
        report.add_result(format!("algebra.{name}"), result);
    }
    for (name, w) in &ws.emorphisms {
        let again = EMndMorphism::validate(
            w.source.clone(),
            w.target.clone(),
            w.p.clone(),
            w.ext.clone(),
        );
        report.add_result(format!("emorphism.{name}"), again.map(|_| ()));
    }
    for (name, t) in &ws.ecells {
        let again = catcheck::emnd::EMndTwoCell::validate(
            t.source.clone(),
            t.target.clone(),
            t.theta.clone(),
        );
        report.add_result(format!("ecell.{name}"), again.map(|_| ()));
    }
    for (name, cm) in &ws.cmonads {
        let again =
            classical::ClassicalMonad::validate(cm.s.clone(), cm.unit.clone(), cm.mult.clone());
        report.add_result(format!("cmonad.{name}"), again.map(|_| ()));
    }
    for (name, adj) in &ws.adjunctions {
        let again = classical::Adjunction::validate(
            adj.left.clone(),
            adj.right.clone(),
            adj.unit.clone(),
            adj.counit.clone(),
        );
        report.add_result(format!("adjunction.{name}"), again.map(|_| ()));
    }
    report
}

/// Derives an entity through one of the six functors and prints it in spec
/// format.
pub fn cmd_derive(
    ws: &Workspace,
    functor: &str,
    entity: &str,
    new_name: Option<&str>,
    budget: u64,
) -> WsResult<String> {
    let functor = functor.to_lowercase();
    let name = new_name
        .map(|s| s.to_string())
        .unwrap_or_else(|| format!("{entity}.{functor}"));
    match functor.as_str() {
        "phi" => {
            let u = ws.arrows.get(entity).ok_or_else(|| WsError::Unknown {
                kind: "uarrow",
                name: entity.into(),
            })?;
            printer::print_emonad(&name, &bridge::phi_on_object(u)?, ws)
        }
        "psi" => {
            let m = ws.emonads.get(entity).ok_or_else(|| WsError::Unknown {
                kind: "emonad",
                name: entity.into(),
            })?;
            let em = bridge::psi_on_object(m, budget)?;
            printer::print_uarrow(&name, &em.arrow, ws)
        }
        "f" => {
            let u = ws.arrows.get(entity).ok_or_else(|| WsError::Unknown {
                kind: "uarrow",
                name: entity.into(),
            })?;
            printer::print_adjunction(&name, &classical::f_on_object(u)?, ws)
        }
        "g" => {
            let a = ws.adjunctions.get(entity).ok_or_else(|| WsError::Unknown {
                kind: "adjunction",
                name: entity.into(),
            })?;
            printer::print_uarrow(&name, &classical::g_on_object(a)?, ws)
        }
        "h" => {
            let m = ws.emonads.get(entity).ok_or_else(|| WsError::Unknown {
                kind: "emonad",
                name: entity.into(),
            })?;
            printer::print_cmonad(&name, &classical::h_on_object(m)?, ws)
        }
        "k" => {
            let cm = ws.cmonads.get(entity).ok_or_else(|| WsError::Unknown {
                kind: "cmonad",
                name: entity.into(),
            })?;
            printer::print_emonad(&name, &classical::k_on_object(cm)?, ws)
        }
        other => Err(WsError::Unknown {
            kind: "derive functor",
            name: other.into(),
        }),
    }
}

/// Triangular identities, hom-bijection, and the 2-naturality verdicts.
pub fn cmd_adjunction(
    ws: &Workspace,
    arrow: &str,
    monad: &str,
    strict: bool,
    budget: u64,
) -> WsResult<Report> {
    let u = ws.arrows.get(arrow).ok_or_else(|| WsError::Unknown {
        kind: "uarrow",
        name: arrow.into(),
    })?;
    let m = ws.emonads.get(monad).ok_or_else(|| WsError::Unknown {
        kind: "emonad",
        name: monad.into(),
    })?;
    let mut report = Report::new("adjunction");
    report.add_result(
        format!("triangular.left.{arrow}"),
        bridge::triangular_left(u, budget),
    );
    report.add_result(
        format!("triangular.right.{monad}"),
        bridge::triangular_right(m, budget),
    );
    match bridge::hom_bijection(u, m, budget) {
        Ok(r) if r.bijection => report.add(
            format!("hom-bijection.{arrow}.{monad}"),
            Status::Pass,
            format!("|Hom| = {} on both sides", r.emnd_hom),
        ),
        Ok(r) => report.add(
            format!("hom-bijection.{arrow}.{monad}"),
            Status::Fail,
            r.detail,
        ),
        Err(e) => report.add(
            format!("hom-bijection.{arrow}.{monad}"),
            Status::Error,
            e.to_string(),
        ),
    }
    for (name, cell) in &ws.ucells {
        if strict && !(cell.source.is_strict() && cell.target.is_strict()) {
            continue;
        }
        match bridge::check_unit_2naturality(cell) {
            Ok(NaturalityVerdict::Holds) => {
                report.add(format!("unit-2naturality.{name}"), Status::Pass, "Holds")
            }
            Ok(NaturalityVerdict::Fails { witness }) => report.add(
                format!("unit-2naturality.{name}"),
                Status::Pass,
                format!("Fails at X={witness}"),
            ),
            Err(e) => report.add(
                format!("unit-2naturality.{name}"),
                Status::Error,
                e.to_string(),
            ),
        }
    }
    Ok(report)
}

fn eq_check<T: PartialEq>(report: &mut Report, id: String, lhs: WsResult<T>, rhs: WsResult<T>) {
    match (lhs, rhs) {
        (Ok(a), Ok(b)) if a == b => report.add(id, Status::Pass, ""),
        (Ok(_), Ok(_)) => report.add(id, Status::Fail, "round trip differs"),
        (Err(e), _) | (_, Err(e)) => report.add(id, Status::Error, e.to_string()),
    }
}

/// GF / FG / HK / KH identity checks for one named entity.
pub fn cmd_roundtrip(ws: &Workspace, entity: &str) -> WsResult<Report> {
    let mut report = Report::new("roundtrip");
    if let Some(u) = ws.arrows.get(entity) {
        eq_check(
            &mut report,
            format!("roundtrip.GF.{entity}"),
            classical::f_on_object(u)
                .and_then(|a| classical::g_on_object(&a))
                .map_err(WsError::from),
            Ok(u.clone()),
        );
        if let Ok(adj) = classical::f_on_object(u) {
            eq_check(
                &mut report,
                format!("roundtrip.FG.{entity}"),
                classical::g_on_object(&adj)
                    .and_then(|v| classical::f_on_object(&v))
                    .map_err(WsError::from),
                Ok(adj),
            );
        }
    } else if let Some(m) = ws.emonads.get(entity) {
        eq_check(
            &mut report,
            format!("roundtrip.KH.{entity}"),
            classical::h_on_object(m)
                .and_then(|cm| classical::k_on_object(&cm))
                .map_err(WsError::from),
            Ok(m.clone()),
        );
        if let Ok(cm) = classical::h_on_object(m) {
            eq_check(
                &mut report,
                format!("roundtrip.HK.{entity}"),
                classical::k_on_object(&cm)
                    .and_then(|v| classical::h_on_object(&v))
                    .map_err(WsError::from),
                Ok(cm),
            );
        }
    } else if let Some(adj) = ws.adjunctions.get(entity) {
        eq_check(
            &mut report,
            format!("roundtrip.FG.{entity}"),
            classical::g_on_object(adj)
                .and_then(|u| classical::f_on_object(&u))
                .map_err(WsError::from),
            Ok(adj.clone()),
        );
    } else if let Some(cm) = ws.cmonads.get(entity) {
        eq_check(
            &mut report,
            format!("roundtrip.HK.{entity}"),
            classical::k_on_object(cm)
                .and_then(|m| classical::h_on_object(&m))
                .map_err(WsError::from),
            Ok(cm.clone()),
        );
    } else if let Some(m) = ws.umorphisms.get(entity) {
        eq_check(
            &mut report,
            format!("roundtrip.GF.1cell.{entity}"),
            classical::f_on_morphism(m)
                .and_then(|am| classical::g_on_morphism(&am))
                .map_err(WsError::from),
            Ok(m.clone()),
        );
    } else if let Some(w) = ws.emorphisms.get(entity) {
        eq_check(
            &mut report,
            format!("roundtrip.KH.1cell.{entity}"),
            classical::h_on_morphism(w)
                .and_then(|mm| classical::k_on_morphism(&mm))
                .map_err(WsError::from),
            Ok(w.clone()),
        );
    } else if let Some(c) = ws.ucells.get(entity) {
        eq_check(
            &mut report,
            format!("roundtrip.GF.2cell.{entity}"),
            classical::f_on_two_cell(c)
                .and_then(|ac| classical::g_on_two_cell(&ac))
                .map_err(WsError::from),
            Ok(c.clone()),
        );
    } else if let Some(t) = ws.ecells.get(entity) {
        eq_check(
            &mut report,
            format!("roundtrip.KH.2cell.{entity}"),
            classical::h_on_two_cell(t)
                .and_then(|mc| classical::k_on_two_cell(&mc))
                .map_err(WsError::from),
            Ok(t.clone()),
        );
    } else {
        return Err(WsError::Unknown {
            kind: "entity",
            name: entity.into(),
        });
    }
    Ok(report)
}

/// The serial-commutation suite over every registered fixture, optionally
/// restricted to names starting with `group`.
pub fn cmd_square(ws: &Workspace, group: Option<&str>, budget: u64) -> Report {
    let mut report = Report::new("square");
    let keep = |name: &str| group.map(|g| name.starts_with(g)).unwrap_or(true);
    let push = |report: &mut Report, result: catcheck::Result<Vec<square::SquareCheck>>| {
        match result {
            Ok(checks) => {
                for c in checks {
                    report.add(
                        c.id,
                        if c.pass { Status::Pass } else { Status::Fail },
                        c.detail,
                    );
                }
            }
            Err(e) => report.add("square.error", Status::Error, e.to_string()),
        }
    };
    for (name, u) in ws.arrows.iter().filter(|(n, _)| keep(n)) {
        push(&mut report, square::check_arrow(name, u));
    }
    for (name, m) in ws.emonads.iter().filter(|(n, _)| keep(n)) {
        push(&mut report, square::check_monad(name, m, budget));
    }
    for (name, m) in ws.umorphisms.iter().filter(|(n, _)| keep(n)) {
        push(&mut report, square::check_arrow_one_cell(name, m));
    }
    for (name, w) in ws.emorphisms.iter().filter(|(n, _)| keep(n)) {
        push(&mut report, square::check_monad_one_cell(name, w, budget));
    }
    for (name, c) in ws.ucells.iter().filter(|(n, _)| keep(n)) {
        push(&mut report, square::check_arrow_two_cell(name, c));
    }
    for (name, t) in ws.ecells.iter().filter(|(n, _)| keep(n)) {
        push(&mut report, square::check_monad_two_cell(name, t, budget));
    }
    report
}
