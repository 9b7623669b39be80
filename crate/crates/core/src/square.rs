//! Serial commutation of the square formed by Phi/Psi (vertical), F/G and
//! H/K (horizontal): the right-hand adjunction is the conjugate
//! Phi_E = H Phi G and Psi_E = F Psi K, and every direction-consistent
//! composite must agree extensionally, at all three cell levels.

use crate::bridge;
use crate::classical::{self, Adjunction, ClassicalMonad};
use crate::emnd::{EMndMorphism, EMndTwoCell, ExtensiveMonad};
use crate::error::Result;
use crate::uarr::{UArrMorphism, UArrTwoCell, UniversalArrow};

/// One named comparison with its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareCheck {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

fn record(out: &mut Vec<SquareCheck>, id: String, pass: bool, what: &str) {
    out.push(SquareCheck {
        id,
        pass,
        detail: if pass {
            String::new()
        } else {
            format!("{what} composites differ")
        },
    });
}

/// Phi_E on a classical adjunction, by conjugation.
pub fn phi_e_on_object(a: &Adjunction) -> Result<ClassicalMonad> {
    classical::h_on_object(&bridge::phi_on_object(&classical::g_on_object(a)?)?)
}

/// Psi_E on a classical monad, by conjugation.
pub fn psi_e_on_object(cm: &ClassicalMonad, budget: u64) -> Result<Adjunction> {
    classical::f_on_object(&bridge::psi_on_object(&classical::k_on_object(cm)?, budget)?.arrow)
}

/// Runs every serial-commutation and round-trip comparison for one named
/// universal arrow.
pub fn check_arrow(name: &str, u: &UniversalArrow) -> Result<Vec<SquareCheck>> {
    let mut out = Vec::new();
    let adj = classical::f_on_object(u)?;
    let down_then_right = classical::h_on_object(&bridge::phi_on_object(u)?)?;
    let right_then_down = phi_e_on_object(&adj)?;
    record(
        &mut out,
        format!("square.HPhi=PhiEF.{name}"),
        down_then_right == right_then_down,
        "H Phi vs Phi_E F",
    );
    record(
        &mut out,
        format!("square.KPhiEF=Phi.{name}"),
        classical::k_on_object(&right_then_down)? == bridge::phi_on_object(u)?,
        "K Phi_E F vs Phi",
    );
    record(
        &mut out,
        format!("square.GF=Id.{name}"),
        classical::g_on_object(&adj)? == *u,
        "G F vs identity",
    );
    record(
        &mut out,
        format!("square.FG=Id.{name}"),
        classical::f_on_object(&classical::g_on_object(&adj)?)? == adj,
        "F G vs identity",
    );
    Ok(out)
}

/// Runs every comparison for one named extension-form monad.
pub fn check_monad(name: &str, m: &ExtensiveMonad, budget: u64) -> Result<Vec<SquareCheck>> {
    let mut out = Vec::new();
    let cm = classical::h_on_object(m)?;
    let down = classical::f_on_object(&bridge::psi_on_object(m, budget)?.arrow)?;
    let around = psi_e_on_object(&cm, budget)?;
    record(
        &mut out,
        format!("square.FPsi=PsiEH.{name}"),
        down == around,
        "F Psi vs Psi_E H",
    );
    record(
        &mut out,
        format!("square.GPsiE=PsiK.{name}"),
        classical::g_on_object(&around)?
            == bridge::psi_on_object(&classical::k_on_object(&cm)?, budget)?.arrow,
        "G Psi_E vs Psi K",
    );
    record(
        &mut out,
        format!("square.KH=Id.{name}"),
        classical::k_on_object(&cm)? == *m,
        "K H vs identity",
    );
    record(
        &mut out,
        format!("square.HK=Id.{name}"),
        classical::h_on_object(&classical::k_on_object(&cm)?)? == cm,
        "H K vs identity",
    );
    Ok(out)
}

/// Comparisons at the 1-cell level for a universal-arrow morphism.
pub fn check_arrow_one_cell(name: &str, m: &UArrMorphism) -> Result<Vec<SquareCheck>> {
    let mut out = Vec::new();
    let am = classical::f_on_morphism(m)?;
    let down = classical::h_on_morphism(&bridge::phi_on_morphism(m)?)?;
    let around = classical::h_on_morphism(&bridge::phi_on_morphism(&classical::g_on_morphism(&am)?)?)?;
    record(
        &mut out,
        format!("square.HPhi=PhiEF.1cell.{name}"),
        down == around,
        "1-cell H Phi vs Phi_E F",
    );
    record(
        &mut out,
        format!("square.KPhiEF=Phi.1cell.{name}"),
        classical::k_on_morphism(&around)? == bridge::phi_on_morphism(m)?,
        "1-cell K Phi_E F vs Phi",
    );
    record(
        &mut out,
        format!("square.GF=Id.1cell.{name}"),
        classical::g_on_morphism(&am)? == *m,
        "1-cell G F vs identity",
    );
    Ok(out)
}

/// Comparisons at the 1-cell level for a monad morphism.
pub fn check_monad_one_cell(name: &str, w: &EMndMorphism, budget: u64) -> Result<Vec<SquareCheck>> {
    let mut out = Vec::new();
    let mm = classical::h_on_morphism(w)?;
    let down = classical::f_on_morphism(&bridge::psi_on_morphism(w, budget)?)?;
    let around = classical::f_on_morphism(&bridge::psi_on_morphism(
        &classical::k_on_morphism(&mm)?,
        budget,
    )?)?;
    record(
        &mut out,
        format!("square.FPsi=PsiEH.1cell.{name}"),
        down == around,
        "1-cell F Psi vs Psi_E H",
    );
    record(
        &mut out,
        format!("square.KH=Id.1cell.{name}"),
        classical::k_on_morphism(&mm)? == *w,
        "1-cell K H vs identity",
    );
    Ok(out)
}

/// Comparisons at the 2-cell level for a universal-arrow 2-cell.
pub fn check_arrow_two_cell(name: &str, c: &UArrTwoCell) -> Result<Vec<SquareCheck>> {
    let mut out = Vec::new();
    let ac = classical::f_on_two_cell(c)?;
    let down = classical::h_on_two_cell(&bridge::phi_on_two_cell(c)?)?;
    let around = classical::h_on_two_cell(&bridge::phi_on_two_cell(&classical::g_on_two_cell(&ac)?)?)?;
    record(
        &mut out,
        format!("square.HPhi=PhiEF.2cell.{name}"),
        down == around,
        "2-cell H Phi vs Phi_E F",
    );
    record(
        &mut out,
        format!("square.GF=Id.2cell.{name}"),
        classical::g_on_two_cell(&ac)? == *c,
        "2-cell G F vs identity",
    );
    Ok(out)
}

/// Comparisons at the 2-cell level for a monad 2-cell.
pub fn check_monad_two_cell(name: &str, t: &EMndTwoCell, budget: u64) -> Result<Vec<SquareCheck>> {
    let mut out = Vec::new();
    let mc = classical::h_on_two_cell(t)?;
    let down = classical::f_on_two_cell(&bridge::psi_on_two_cell(t, budget)?)?;
    let around = classical::f_on_two_cell(&bridge::psi_on_two_cell(
        &classical::k_on_two_cell(&mc)?,
        budget,
    )?)?;
    record(
        &mut out,
        format!("square.FPsi=PsiEH.2cell.{name}"),
        down == around,
        "2-cell F Psi vs Psi_E H",
    );
    record(
        &mut out,
        format!("square.KH=Id.2cell.{name}"),
        classical::k_on_two_cell(&mc)? == *t,
        "2-cell K H vs identity",
    );
    Ok(out)
}
