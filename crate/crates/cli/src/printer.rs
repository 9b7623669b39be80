//! Spec-format serialization of entities.  Output is deterministic (sorted
//! tables) and re-parses to an extensionally equal entity when loaded into a
//! workspace that already holds the referenced categories.

use crate::workspace::{Workspace, WsError, WsResult};
use catcheck::classical::{Adjunction, ClassicalMonad};
use catcheck::emnd::ExtensiveMonad;
use catcheck::fincat::{Cat, Functor};
use catcheck::uarr::UniversalArrow;
use std::fmt::Write as _;

fn category_name(ws: &Workspace, cat: &Cat, role: &str) -> WsResult<String> {
    ws.category_name(cat)
        .map(|s| s.to_string())
        .ok_or_else(|| WsError::Unknown {
            kind: "category",
            name: format!("<unregistered {role} category>"),
        })
}

pub fn print_category(name: &str, cat: &Cat) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "category {name}");
    for o in cat.objects() {
        let _ = writeln!(out, "object {o}");
    }
    for m in cat.morphisms() {
        let _ = writeln!(out, "morphism {} : {} -> {}", m.id, m.src, m.tgt);
    }
    for o in cat.objects() {
        let _ = writeln!(out, "identity {o} = {}", cat.identity_of(o).unwrap());
    }
    for g in cat.morphisms() {
        for f in cat.morphisms() {
            if f.tgt == g.src {
                let _ = writeln!(
                    out,
                    "compose {} . {} = {}",
                    g.id,
                    f.id,
                    cat.comp(&g.id, &f.id).unwrap()
                );
            }
        }
    }
    out
}

pub fn print_functor(name: &str, f: &Functor, ws: &Workspace) -> WsResult<String> {
    let src = category_name(ws, &f.source, "source")?;
    let tgt = category_name(ws, &f.target, "target")?;
    let mut out = String::new();
    let _ = writeln!(out, "functor {name} : {src} -> {tgt}");
    for (a, b) in &f.object_map {
        let _ = writeln!(out, "on-object {a} => {b}");
    }
    for (m, n) in &f.morphism_map {
        let _ = writeln!(out, "on-morphism {m} => {n}");
    }
    Ok(out)
}

pub fn print_emonad(name: &str, m: &ExtensiveMonad, ws: &Workspace) -> WsResult<String> {
    let base = category_name(ws, &m.base, "base")?;
    let mut out = String::new();
    let _ = writeln!(out, "emonad {name} on {base}");
    for (a, b) in &m.s {
        let _ = writeln!(out, "S {a} => {b}");
    }
    for (a, e) in &m.unit {
        let _ = writeln!(out, "unit {a} => {e}");
    }
    for ((a, b, h), hx) in &m.ext {
        let _ = writeln!(out, "ext {a},{b},{h} => {hx}");
    }
    Ok(out)
}

/// Prints the arrow together with any support blocks it needs: the upstairs
/// category and the right functor, when they are not registered yet.
pub fn print_uarrow(name: &str, u: &UniversalArrow, ws: &Workspace) -> WsResult<String> {
    let base = category_name(ws, &u.base, "base")?;
    let mut out = String::new();
    let upstairs = match ws.category_name(&u.upstairs) {
        Some(n) => n.to_string(),
        None => {
            let fresh = format!("{name}.alg");
            out.push_str(&print_category(&fresh, &u.upstairs));
            fresh
        }
    };
    let right_name = match ws.functors.iter().find(|(_, f)| **f == u.right) {
        Some((n, _)) => n.clone(),
        None => {
            let fresh = format!("{name}.right");
            // the upstairs category may only exist in this printout, so
            // write the functor block by hand against both names
            let _ = writeln!(out, "functor {fresh} : {upstairs} -> {base}");
            for (a, b) in &u.right.object_map {
                let _ = writeln!(out, "on-object {a} => {b}");
            }
            for (m, n) in &u.right.morphism_map {
                let _ = writeln!(out, "on-morphism {m} => {n}");
            }
            fresh
        }
    };
    let _ = writeln!(out, "uarrow {name} : {base} | {upstairs}");
    let _ = writeln!(out, "right {right_name}");
    for (a, b) in &u.left.object_map {
        let _ = writeln!(out, "left {a} => {b}");
    }
    for (a, e) in &u.unit {
        let _ = writeln!(out, "unit {a} => {e}");
    }
    Ok(out)
}

pub fn print_cmonad(name: &str, cm: &ClassicalMonad, ws: &Workspace) -> WsResult<String> {
    let base = category_name(ws, &cm.base, "base")?;
    let mut out = String::new();
    let endo_name = match ws.functors.iter().find(|(_, f)| **f == cm.s) {
        Some((n, _)) => n.clone(),
        None => {
            let fresh = format!("{name}.endo");
            out.push_str(&print_functor(&fresh, &cm.s, ws)?);
            fresh
        }
    };
    let _ = writeln!(out, "cmonad {name} on {base}");
    let _ = writeln!(out, "endo {endo_name}");
    for (a, e) in &cm.unit.components {
        let _ = writeln!(out, "unit {a} => {e}");
    }
    for (a, e) in &cm.mult.components {
        let _ = writeln!(out, "mult {a} => {e}");
    }
    Ok(out)
}

pub fn print_adjunction(name: &str, adj: &Adjunction, ws: &Workspace) -> WsResult<String> {
    let base = category_name(ws, &adj.left.source, "base")?;
    let upstairs = category_name(ws, &adj.left.target, "upstairs")?;
    let mut out = String::new();
    let left_name = match ws.functors.iter().find(|(_, f)| **f == adj.left) {
        Some((n, _)) => n.clone(),
        None => {
            let fresh = format!("{name}.left");
            out.push_str(&print_functor(&fresh, &adj.left, ws)?);
            fresh
        }
    };
    let right_name = match ws.functors.iter().find(|(_, f)| **f == adj.right) {
        Some((n, _)) => n.clone(),
        None => {
            let fresh = format!("{name}.right");
            out.push_str(&print_functor(&fresh, &adj.right, ws)?);
            fresh
        }
    };
    let _ = writeln!(out, "adjunction {name} : {base} | {upstairs}");
    let _ = writeln!(out, "left {left_name}");
    let _ = writeln!(out, "right {right_name}");
    for (a, e) in &adj.unit.components {
        let _ = writeln!(out, "unit {a} => {e}");
    }
    for (x, e) in &adj.counit.components {
        let _ = writeln!(out, "counit {x} => {e}");
    }
    Ok(out)
}
