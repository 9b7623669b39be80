//! Acceptance suite: one test per criterion, each printing a pass line.
//! Every comparison is exact (discrete equality); the order-theoretic
//! oracles (unique <=-witness, fixed-point scans) are computed here,
//! independently of the library's derivation paths.
//!
//! Run with `cargo test -p catcheck-cli --test acceptance -- --nocapture`
//! to see the per-criterion lines.

use catcheck::bridge::{self, NaturalityVerdict};
use catcheck::classical;
use catcheck::emnd::{enumerate_algebras, EMndMorphism, ExtensiveMonad};
use catcheck::fincat::{FinCategory, Functor, NatTrans};
use catcheck::fixtures;
use catcheck::uarr::{UArrMorphism, UniversalArrow};
use catcheck_cli::{commands, Workspace};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const BUDGET: u64 = 1_000_000;
const RANDOM_INSTANCES: usize = 24;

fn fixture_ws() -> Workspace {
    let mut ws = Workspace::new();
    commands::load_fixtures(&mut ws).unwrap();
    ws
}

fn fixture_arrows() -> Vec<(&'static str, UniversalArrow)> {
    vec![
        ("UOne", fixtures::one_arrow()),
        ("GaloisCR", fixtures::galois_cr()),
        ("UIso2", fixtures::iso2_arrow()),
        ("UZ2", UniversalArrow::identity(&fixtures::z2()).unwrap()),
        ("GaloisP", fixtures::galois_preorder()),
    ]
}

fn fixture_monads() -> Vec<(&'static str, ExtensiveMonad)> {
    vec![
        ("MOne", ExtensiveMonad::identity(&fixtures::one()).unwrap()),
        ("Clo2", fixtures::clo2()),
        ("CloTwoUp", fixtures::clo_two_up()),
        ("MIso2", ExtensiveMonad::identity(&fixtures::iso2()).unwrap()),
        ("MDiv6", ExtensiveMonad::identity(&fixtures::div6()).unwrap()),
        ("Div6Clo", fixtures::div6_closure()),
        ("MZ2", ExtensiveMonad::identity(&fixtures::z2()).unwrap()),
    ]
}

/// Criterion 1: category, functor, naturality, monad, algebra, and 1-cell
/// law suites pass on every shipped fixture and on randomized
/// poset-derived instances, with zero failures.
#[test]
fn acceptance_1_law_suites() {
    let mut checks = 0usize;

    // shipped categories revalidate from their raw tables
    for cat in [
        fixtures::one(),
        fixtures::two(),
        fixtures::chain3(),
        fixtures::div6(),
        fixtures::iso2(),
        fixtures::z2(),
    ] {
        FinCategory::validate(
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
        )
        .unwrap();
        Functor::identity(&cat).revalidate().unwrap();
        checks += 2;
    }

    // shipped functors, transformations, arrows, monads, algebras, 1-cells
    fixtures::inclusion_two_chain3().revalidate().unwrap();
    fixtures::chain3_closure_functor().revalidate().unwrap();
    fixtures::galois_eta_cell().alpha.revalidate().unwrap();
    checks += 3;
    for (_, u) in fixture_arrows() {
        UniversalArrow::validate(u.right.clone(), u.left.clone(), u.unit.clone()).unwrap();
        checks += 1;
    }
    for (_, m) in fixture_monads() {
        ExtensiveMonad::validate(m.base.clone(), m.s.clone(), m.unit.clone(), m.ext.clone())
            .unwrap();
        let ac = enumerate_algebras(&m, BUDGET).unwrap();
        for alg in ac.algebras.values() {
            alg.revalidate(&m).unwrap();
            checks += 1;
        }
        checks += 1;
    }
    for w in [
        fixtures::clo_two_up_inclusion(),
        fixtures::clo_q_morphism(),
        EMndMorphism::identity(&fixtures::clo2()).unwrap(),
    ] {
        EMndMorphism::validate(w.source.clone(), w.target.clone(), w.p.clone(), w.ext.clone())
            .unwrap();
        checks += 1;
    }

    // randomized poset instances: categories, identity and constant
    // functors, identity monads
    let mut rng = ChaCha8Rng::seed_from_u64(0xCA7);
    for _ in 0..RANDOM_INSTANCES {
        let p = fixtures::random_poset(&mut rng, 5);
        Functor::identity(&p).revalidate().unwrap();
        let bottom = p.objects()[0].clone();
        fixtures::poset_functor(&p, &p, |_| bottom.clone())
            .unwrap()
            .revalidate()
            .unwrap();
        ExtensiveMonad::identity(&p).unwrap();
        checks += 3;
    }

    // randomized chain closures: monad, naturality, algebra, 1-cell laws
    for _ in 0..RANDOM_INSTANCES {
        let m = fixtures::random_chain_closure(&mut rng, 6);
        let c_map = m.s.clone();
        let cf = fixtures::poset_functor(&m.base, &m.base, |a| c_map[a].clone()).unwrap();
        NatTrans::validate(Functor::identity(&m.base), cf, m.unit.clone()).unwrap();
        let ac = enumerate_algebras(&m, BUDGET).unwrap();
        for alg in ac.algebras.values() {
            alg.revalidate(&m).unwrap();
            checks += 1;
        }
        fixtures::closure_endocell(&m).unwrap();
        EMndMorphism::identity(&m).unwrap();
        checks += 4;
    }

    assert!(checks > 2 * RANDOM_INSTANCES);
    println!("ACCEPTANCE 1 law-suites: PASS ({checks} checks)");
}

/// Criterion 2: Phi(U) validates as an extension-form monad for every
/// fixture arrow, with the three laws re-asserted instance by instance.
#[test]
fn acceptance_2_phi_well_defined() {
    for (name, u) in fixture_arrows() {
        let m = bridge::phi_on_object(&u).unwrap();
        for a in m.base.objects() {
            // (eta A)^RLA = 1
            assert_eq!(
                m.ext_at(a, a, &m.unit[a]).unwrap(),
                &m.base.identity_of(&m.s[a]).unwrap(),
                "law a fails on {name}"
            );
        }
        for ((a, _b, h), hx) in &m.ext {
            // h^RLB . eta A = h
            assert_eq!(&m.base.comp(hx, &m.unit[a]).unwrap(), h, "law b fails on {name}");
        }
        for ((a, b, h), hx) in &m.ext {
            for c in m.base.objects() {
                for k in m.base.hom(b, &m.s[c]) {
                    let kx = m.ext_at(b, c, &k).unwrap();
                    let lhs = m.ext_at(a, c, &m.base.comp(kx, h).unwrap()).unwrap();
                    let rhs = m.base.comp(kx, hx).unwrap();
                    assert_eq!(lhs, &rhs, "law c fails on {name}");
                }
            }
        }
    }
    println!("ACCEPTANCE 2 phi-well-defined: PASS");
}

/// Criterion 3: Psi(M) validates as a universal arrow and the independent
/// witness count at every (A, algebra, v) is exactly one.
#[test]
fn acceptance_3_psi_unique_witnesses() {
    for (name, m) in fixture_monads() {
        let em = bridge::psi_on_object(&m, BUDGET).unwrap();
        let arrow = &em.arrow;
        let mut histogram_all_one = true;
        for a in arrow.base.objects() {
            for n_obj in arrow.upstairs.objects() {
                let rn = arrow.right.on_obj(n_obj).unwrap();
                let fa = arrow.left.apply(a).unwrap();
                for v in arrow.base.hom(a, rn) {
                    // independent recount of the universal witnesses
                    let count = arrow
                        .upstairs
                        .hom(fa, n_obj)
                        .iter()
                        .filter(|w| {
                            arrow
                                .base
                                .comp(arrow.right.on_mor(w).unwrap(), &arrow.unit[a])
                                .unwrap()
                                == v
                        })
                        .count();
                    if count != 1 {
                        histogram_all_one = false;
                    }
                }
            }
        }
        assert!(histogram_all_one, "witness histogram not identically 1 on {name}");
    }
    println!("ACCEPTANCE 3 psi-unique-witnesses: PASS");
}

/// Criterion 4: both triangular identities hold extensionally on every
/// fixture.
#[test]
fn acceptance_4_triangular_identities() {
    for (name, u) in fixture_arrows() {
        bridge::triangular_left(&u, BUDGET)
            .unwrap_or_else(|e| panic!("left triangular identity fails on {name}: {e}"));
    }
    for (name, m) in fixture_monads() {
        bridge::triangular_right(&m, BUDGET)
            .unwrap_or_else(|e| panic!("right triangular identity fails on {name}: {e}"));
    }
    println!("ACCEPTANCE 4 triangular-identities: PASS");
}

/// Criterion 5: on strict fixture pairs the enumerated hom-sets are
/// equinumerous and the unit-induced map is a verified bijection.
#[test]
fn acceptance_5_hom_bijection() {
    let pairs: Vec<(&str, UniversalArrow, &str, ExtensiveMonad)> = vec![
        (
            "UOne",
            fixtures::one_arrow(),
            "MOne",
            ExtensiveMonad::identity(&fixtures::one()).unwrap(),
        ),
        ("GaloisCR", fixtures::galois_cr(), "Clo2", fixtures::clo2()),
        (
            "GaloisCR",
            fixtures::galois_cr(),
            "Phi(GaloisCR)",
            bridge::phi_on_object(&fixtures::galois_cr()).unwrap(),
        ),
        (
            "UIso2",
            fixtures::iso2_arrow(),
            "MIso2",
            ExtensiveMonad::identity(&fixtures::iso2()).unwrap(),
        ),
        (
            "UZ2",
            UniversalArrow::identity(&fixtures::z2()).unwrap(),
            "MZ2",
            ExtensiveMonad::identity(&fixtures::z2()).unwrap(),
        ),
    ];
    for (uname, u, mname, m) in pairs {
        let report = bridge::hom_bijection(&u, &m, BUDGET).unwrap();
        assert_eq!(
            report.emnd_hom, report.uarr_hom,
            "hom sizes differ for ({uname}, {mname})"
        );
        assert!(
            report.bijection,
            "unit-induced map not a bijection for ({uname}, {mname}): {}",
            report.detail
        );
    }
    println!("ACCEPTANCE 5 hom-bijection: PASS");
}

/// Criterion 6: a shipped non-identity-rho fixture makes the 2-naturality
/// check fail with an explicit witness; under --strict the suite holds.
#[test]
fn acceptance_6_two_naturality_failure_witness() {
    let skew = fixtures::iso2_skew_cell();
    assert!(!skew.source.is_strict());
    match bridge::check_unit_2naturality(&skew).unwrap() {
        NaturalityVerdict::Fails { witness } => assert_eq!(witness, "a"),
        NaturalityVerdict::Holds => panic!("skew cell must fail 2-naturality"),
    }
    // a second witness over an ordered base with a duplicated top
    match bridge::check_unit_2naturality(&fixtures::galois_preorder_skew_cell()).unwrap() {
        NaturalityVerdict::Fails { witness } => assert_eq!(witness, "2"),
        NaturalityVerdict::Holds => panic!("preorder skew cell must fail 2-naturality"),
    }

    let ws = fixture_ws();
    let lax = commands::cmd_adjunction(&ws, "GaloisCR", "Clo2", false, BUDGET)
        .unwrap()
        .render_text();
    assert!(lax.contains("unit-2naturality.SkewCell: Fails at X=a"));
    let strict = commands::cmd_adjunction(&ws, "GaloisCR", "Clo2", true, BUDGET)
        .unwrap()
        .render_text();
    assert!(!strict.contains("Fails"));
    assert!(strict.contains("unit-2naturality.EtaCell: Holds"));
    println!("ACCEPTANCE 6 two-naturality-failure: PASS");
}

/// Criterion 7: GF, FG, HK, KH are extensional identities on all fixtures
/// at all three cell levels, including the zeta, counit, and mate
/// reconstructions and both extension/phi chains.
#[test]
fn acceptance_7_round_trips() {
    // 0-cells
    for (name, u) in fixture_arrows() {
        let adj = classical::f_on_object(&u).unwrap();
        let back = classical::g_on_object(&adj).unwrap();
        assert_eq!(back, u, "GF differs on {name}");
        assert_eq!(back.zeta, u.zeta, "zeta reconstruction differs on {name}");
        let fg = classical::f_on_object(&back).unwrap();
        assert_eq!(fg.counit, adj.counit, "counit reconstruction differs on {name}");
        assert_eq!(fg, adj, "FG differs on {name}");
    }
    let adj = fixtures::galois_adjunction();
    assert_eq!(
        classical::f_on_object(&classical::g_on_object(&adj).unwrap()).unwrap(),
        adj
    );
    for (name, m) in fixture_monads() {
        let cm = classical::h_on_object(&m).unwrap();
        let back = classical::k_on_object(&cm).unwrap();
        assert_eq!(back, m, "KH differs on {name}");
        assert_eq!(back.ext, m.ext, "extension chain differs on {name}");
        assert_eq!(
            classical::h_on_object(&back).unwrap(),
            cm,
            "HK differs on {name}"
        );
    }
    let cm = fixtures::clo2_classical();
    assert_eq!(
        classical::h_on_object(&classical::k_on_object(&cm).unwrap()).unwrap(),
        cm
    );

    // 1-cells, including the mate reconstruction FG(lambda) = lambda
    for m in [
        UArrMorphism::identity(&fixtures::galois_cr()).unwrap(),
        fixtures::galois_rl_morphism(),
        fixtures::iso2_skew_morphism(),
    ] {
        let am = classical::f_on_morphism(&m).unwrap();
        assert_eq!(classical::g_on_morphism(&am).unwrap(), m);
        let fg = classical::f_on_morphism(&classical::g_on_morphism(&am).unwrap()).unwrap();
        assert_eq!(fg.lambda, am.lambda, "mate reconstruction differs");
        assert_eq!(fg, am);
    }
    for w in [
        fixtures::clo_two_up_inclusion(),
        fixtures::clo_q_morphism(),
        EMndMorphism::identity(&fixtures::clo2()).unwrap(),
    ] {
        let mm = classical::h_on_morphism(&w).unwrap();
        let back = classical::k_on_morphism(&mm).unwrap();
        assert_eq!(back, w, "KH(ext) chain differs");
        let hk = classical::h_on_morphism(&back).unwrap();
        assert_eq!(hk.phi, mm.phi, "HK(phi) chain differs");
        assert_eq!(hk, mm);
    }

    // 2-cells
    for c in [fixtures::galois_eta_cell(), fixtures::iso2_skew_cell()] {
        let ac = classical::f_on_two_cell(&c).unwrap();
        assert_eq!(classical::g_on_two_cell(&ac).unwrap(), c);
    }
    let t = fixtures::clo_theta_cell();
    let mc = classical::h_on_two_cell(&t).unwrap();
    assert_eq!(classical::k_on_two_cell(&mc).unwrap(), t);

    println!("ACCEPTANCE 7 round-trips: PASS");
}

/// Criterion 8: the serial-commutation suite passes over every fixture.
#[test]
fn acceptance_8_square_commutes() {
    let ws = fixture_ws();
    let report = commands::cmd_square(&ws, None, BUDGET);
    assert!(report.all_pass(), "{}", report.render_text());
    let (pass, _, _) = report.counts();
    println!("ACCEPTANCE 8 square-commutation: PASS ({pass} comparisons)");
}

/// Criterion 9: on the poset fixtures every derived table equals the
/// order-theoretic oracle: extension operators, mu, phi, lambda, and zeta
/// are the unique <=-witness / fixed-point transports.
#[test]
fn acceptance_9_oracle_equivalence() {
    // Phi(GaloisCR): extension = the unique morphism c(A) <= c(B)
    let u = fixtures::galois_cr();
    let m = bridge::phi_on_object(&u).unwrap();
    for ((a, b, _h), hx) in &m.ext {
        let hom = m.base.hom(&m.s[a], &m.s[b]);
        assert_eq!(hom.len(), 1);
        assert_eq!(hx, &hom[0]);
    }

    // H(Clo2): mu A is the unique c(c A) <= c(A), phi of the inclusion
    // 1-cell is the unique witness as well
    let cm = classical::h_on_object(&fixtures::clo2()).unwrap();
    for a in cm.base.objects() {
        let sa = cm.s.on_obj(a).unwrap();
        let ssa = cm.s.on_obj(sa).unwrap();
        let hom = cm.base.hom(ssa, sa);
        assert_eq!(hom.len(), 1);
        assert_eq!(cm.mult.at(a).unwrap(), &hom[0]);
    }
    let mm = classical::h_on_morphism(&fixtures::clo_two_up_inclusion()).unwrap();
    for (a, comp) in &mm.phi.components {
        let tpa = mm.phi.source.on_obj(a).unwrap();
        let psa = mm.phi.target.on_obj(a).unwrap();
        let hom = mm.target.base.hom(tpa, psa);
        assert_eq!(hom.len(), 1);
        assert_eq!(comp, &hom[0]);
    }

    // F on the strict Galois 1-cell: lambda is the unique witness in Two
    let am = classical::f_on_morphism(&fixtures::galois_rl_morphism()).unwrap();
    for (a, comp) in &am.lambda.components {
        let lja = am.lambda.source.on_obj(a).unwrap();
        let vla = am.lambda.target.on_obj(a).unwrap();
        let hom = am.target.left.target.hom(lja, vla);
        assert_eq!(hom.len(), 1);
        assert_eq!(comp, &hom[0]);
    }

    // Psi(Clo2): zeta(v : a <= N) is the fixed-point transport c(a) <= N
    let em = bridge::psi_on_object(&fixtures::clo2(), BUDGET).unwrap();
    for ((a, n_obj, _v), w) in &em.arrow.zeta {
        let (_, _, q) = &em.algebras.triples[w];
        assert_eq!(q, &format!("{}→{}", em.algebras.monad.s[a], n_obj));
    }
    // and the algebra category is exactly the fixed-point chain
    assert_eq!(em.algebras.category.objects(), &["1", "2"]);

    // K(Clo2 classical): extension = mu . S h = unique <=-witness
    let k = classical::k_on_object(&fixtures::clo2_classical()).unwrap();
    for ((a, b, _h), hx) in &k.ext {
        let hom = k.base.hom(&k.s[a], &k.s[b]);
        assert_eq!(hom.len(), 1);
        assert_eq!(hx, &hom[0]);
    }

    // zeta of GaloisCR: the Galois transpose, unique in the thin upstairs
    for ((a, x, _v), w) in &u.zeta {
        let la = u.left.apply(a).unwrap();
        let hom = u.upstairs.hom(la, x);
        assert_eq!(hom.len(), 1);
        assert_eq!(w, &hom[0]);
    }

    println!("ACCEPTANCE 9 oracle-equivalence: PASS");
}
