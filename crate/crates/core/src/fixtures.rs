//! Shipped fixtures and randomized poset generators.
//!
//! Poset categories encode the morphism (a, b) with the identifier "a→b",
//! so hom-sets are thin and every law reduces to an order check: the
//! independent oracle used throughout the test suites.  Iso2 (the indiscrete
//! two-object category) and Z2 (the two-element group) supply the non-poset
//! behaviours: non-identity isomorphisms and parallel morphism pairs.

use crate::emnd::{EMndMorphism, EMndTwoCell, ExtensiveMonad};
use crate::error::{CheckError, Result};
use crate::fincat::{Cat, FinCategory, Functor, MorId, Morphism, NatTrans, ObjId, ObjectFunction};
use crate::uarr::{UArrMorphism, UArrTwoCell, UniversalArrow};
use crate::classical::{Adjunction, ClassicalMonad};
use rand::Rng;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Builds the category of a finite poset: morphisms "a→b" for each a <= b.
/// `leq` must be reflexive, transitive, and antisymmetric on `elems`.
pub fn poset(elems: &[&str], leq: impl Fn(&str, &str) -> bool) -> Cat {
    let objects: Vec<ObjId> = elems.iter().map(|e| e.to_string()).collect();
    let mut morphisms = Vec::new();
    for a in elems {
        for b in elems {
            if leq(a, b) {
                morphisms.push(Morphism {
                    id: format!("{a}→{b}"),
                    src: a.to_string(),
                    tgt: b.to_string(),
                });
            }
        }
    }
    let identity = elems
        .iter()
        .map(|a| (a.to_string(), format!("{a}→{a}")))
        .collect();
    let mut compose = BTreeMap::new();
    for g in &morphisms {
        for f in &morphisms {
            if f.tgt == g.src {
                compose.insert((g.id.clone(), f.id.clone()), format!("{}→{}", f.src, g.tgt));
            }
        }
    }
    Arc::new(
        FinCategory::validate(objects, morphisms, identity, compose)
            .expect("poset fixture must validate"),
    )
}

/// The terminal category.
pub fn one() -> Cat {
    poset(&["*"], |_, _| true)
}

/// The 2-chain on {0, 2}, the full subcategory of Chain3 used by GaloisCR.
pub fn two() -> Cat {
    poset(&["0", "2"], |a, b| a <= b)
}

/// The 3-chain 0 <= 1 <= 2.
pub fn chain3() -> Cat {
    poset(&["0", "1", "2"], |a, b| a <= b)
}

/// Divisors of 6 under divisibility; 2 and 3 are incomparable.
pub fn div6() -> Cat {
    let divides = |a: &str, b: &str| {
        let a: u32 = a.parse().unwrap();
        let b: u32 = b.parse().unwrap();
        b.is_multiple_of(a)
    };
    poset(&["1", "2", "3", "6"], divides)
}

/// The indiscrete category on two objects: every hom-set is a singleton, so
/// a and b are isomorphic through non-identity morphisms.
pub fn iso2() -> Cat {
    let objects = vec!["a".to_string(), "b".to_string()];
    let mut morphisms = Vec::new();
    for s in ["a", "b"] {
        for t in ["a", "b"] {
            morphisms.push(Morphism {
                id: format!("{s}→{t}"),
                src: s.to_string(),
                tgt: t.to_string(),
            });
        }
    }
    let identity = objects
        .iter()
        .map(|a| (a.clone(), format!("{a}→{a}")))
        .collect();
    let mut compose = BTreeMap::new();
    for g in &morphisms {
        for f in &morphisms {
            if f.tgt == g.src {
                compose.insert((g.id.clone(), f.id.clone()), format!("{}→{}", f.src, g.tgt));
            }
        }
    }
    Arc::new(FinCategory::validate(objects, morphisms, identity, compose).unwrap())
}

/// The two-element group as a one-object category: e is the identity,
/// s . s = e.  Supplies parallel morphism pairs.
pub fn z2() -> Cat {
    let objects = vec!["m".to_string()];
    let morphisms = vec![
        Morphism {
            id: "e".into(),
            src: "m".into(),
            tgt: "m".into(),
        },
        Morphism {
            id: "s".into(),
            src: "m".into(),
            tgt: "m".into(),
        },
    ];
    let identity = [("m".to_string(), "e".to_string())].into_iter().collect();
    let compose = [
        (("e".to_string(), "e".to_string()), "e".to_string()),
        (("e".to_string(), "s".to_string()), "s".to_string()),
        (("s".to_string(), "e".to_string()), "s".to_string()),
        (("s".to_string(), "s".to_string()), "e".to_string()),
    ]
    .into_iter()
    .collect();
    Arc::new(FinCategory::validate(objects, morphisms, identity, compose).unwrap())
}

/// The preorder 0 <= 1 <= 2 ~ 2p: a chain with an isomorphic duplicate at
/// the top.  Thin but not skeletal, so 1-cells over it can carry
/// non-identity comparison isos.  The `poset` builder only needs
/// reflexivity and transitivity, so it applies unchanged.
pub fn chain3p() -> Cat {
    let rank = |a: &str| match a {
        "0" => 0,
        "1" => 1,
        _ => 2,
    };
    poset(&["0", "1", "2", "2p"], move |a, b| rank(a) <= rank(b))
}

/// The full subcategory of chain3p on {0, 2, 2p}.
pub fn twop() -> Cat {
    let rank = |a: &str| if a == "0" { 0 } else { 2 };
    poset(&["0", "2", "2p"], move |a, b| rank(a) <= rank(b))
}

/// The Galois-connection arrow over the duplicated chain: R includes
/// {0, 2, 2p} into chain3p and L rounds 1 up to 2.
pub fn galois_preorder() -> UniversalArrow {
    let base = chain3p();
    let upstairs = twop();
    let r = poset_functor(&upstairs, &base, |a| a.to_string()).unwrap();
    let l_map: BTreeMap<ObjId, ObjId> = [("0", "0"), ("1", "2"), ("2", "2"), ("2p", "2p")]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let left = ObjectFunction::validate(base.clone(), upstairs, l_map.clone()).unwrap();
    let unit = base
        .objects()
        .iter()
        .map(|a| (a.clone(), format!("{a}→{}", l_map[a])))
        .collect();
    UniversalArrow::validate(r, left, unit).unwrap()
}

/// A 1-cell on the preorder arrow whose comparison iso swaps the duplicated
/// top: J is the identity, V exchanges 2 and 2p, rho at 2 is the
/// non-identity iso 2 -> 2p.
pub fn galois_preorder_skew() -> UArrMorphism {
    let u = galois_preorder();
    let j = Functor::identity(&u.base);
    let swap = |a: &str| match a {
        "2" => "2p".to_string(),
        "2p" => "2".to_string(),
        other => other.to_string(),
    };
    let v = poset_functor(&u.upstairs, &u.upstairs, swap).unwrap();
    let jr = crate::fincat::compose_functors(&j, &u.right).unwrap();
    let rv = crate::fincat::compose_functors(&u.right, &v).unwrap();
    let comps: BTreeMap<ObjId, MorId> = u
        .upstairs
        .objects()
        .iter()
        .map(|x| {
            let src = jr.on_obj(x).unwrap();
            let tgt = rv.on_obj(x).unwrap();
            (x.clone(), format!("{src}→{tgt}"))
        })
        .collect();
    let inv: BTreeMap<ObjId, MorId> = u
        .upstairs
        .objects()
        .iter()
        .map(|x| {
            let src = rv.on_obj(x).unwrap();
            let tgt = jr.on_obj(x).unwrap();
            (x.clone(), format!("{src}→{tgt}"))
        })
        .collect();
    let rho = NatTrans::validate(jr.clone(), rv.clone(), comps).unwrap();
    let rho_inv = NatTrans::validate(rv, jr, inv).unwrap();
    UArrMorphism::validate(u.clone(), u, j, v, rho, rho_inv).unwrap()
}

/// The identity 2-cell on the preorder skew 1-cell, a second 2-naturality
/// failure witness with base objects that are ordered rather than
/// indiscrete.
pub fn galois_preorder_skew_cell() -> UArrTwoCell {
    UArrTwoCell::identity(&galois_preorder_skew()).unwrap()
}

/// The inclusion of the 2-chain {0, 2} into the 3-chain.
pub fn inclusion_two_chain3() -> Functor {
    let two = two();
    let chain = chain3();
    Functor::validate(
        two.clone(),
        chain,
        two.objects().iter().map(|a| (a.clone(), a.clone())).collect(),
        two.morphism_ids().map(|m| (m.clone(), m.clone())).collect(),
    )
    .unwrap()
}

/// The closure 0, 1 -> 1 and 2 -> 2 on Chain3 as an endofunctor.
pub fn chain3_closure_functor() -> Functor {
    let chain = chain3();
    poset_functor(&chain, &chain, |a| if a == "2" { "2" } else { "1" }.to_string()).unwrap()
}

/// Extends a monotone object map between posets to the (unique) functor.
pub fn poset_functor(source: &Cat, target: &Cat, f: impl Fn(&str) -> String) -> Result<Functor> {
    let object_map: BTreeMap<ObjId, ObjId> = source
        .objects()
        .iter()
        .map(|a| (a.clone(), f(a)))
        .collect();
    let mut morphism_map = BTreeMap::new();
    for m in source.morphisms() {
        let fa = &object_map[&m.src];
        let fb = &object_map[&m.tgt];
        let hom = target.hom(fa, fb);
        let image = hom.first().ok_or_else(|| CheckError::NotFunctorial {
            reason: format!("object map is not monotone at {}", m.id),
            witness: m.id.clone(),
        })?;
        morphism_map.insert(m.id.clone(), image.clone());
    }
    Functor::validate(source.clone(), target.clone(), object_map, morphism_map)
}

/// GaloisCR: the universal arrow of the Galois connection between Chain3 and
/// its subchain {0, 2}: R is the inclusion and L a = least element of
/// {0, 2} above a.
pub fn galois_cr() -> UniversalArrow {
    let chain = chain3();
    let two = two();
    let r = inclusion_two_chain3();
    let l_map: BTreeMap<ObjId, ObjId> = [("0", "0"), ("1", "2"), ("2", "2")]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let left = ObjectFunction::validate(chain.clone(), two, l_map.clone()).unwrap();
    let unit = chain
        .objects()
        .iter()
        .map(|a| (a.clone(), format!("{a}→{}", l_map[a])))
        .collect();
    UniversalArrow::validate(r, left, unit).unwrap()
}

/// The identity universal arrow on One.
pub fn one_arrow() -> UniversalArrow {
    UniversalArrow::identity(&one()).unwrap()
}

/// The identity universal arrow on Iso2.
pub fn iso2_arrow() -> UniversalArrow {
    UniversalArrow::identity(&iso2()).unwrap()
}

/// A 1-cell on the Iso2 arrow whose comparison iso is not the identity:
/// J = 1, V collapses everything onto b, rho at x is the unique x -> b.
pub fn iso2_skew_morphism() -> UArrMorphism {
    let u = iso2_arrow();
    let cat = u.base.clone();
    let j = Functor::identity(&cat);
    let v = Functor::validate(
        cat.clone(),
        cat.clone(),
        cat.objects().iter().map(|x| (x.clone(), "b".to_string())).collect(),
        cat.morphism_ids()
            .map(|m| (m.clone(), "b→b".to_string()))
            .collect(),
    )
    .unwrap();
    let jr = crate::fincat::compose_functors(&j, &u.right).unwrap();
    let rv = crate::fincat::compose_functors(&u.right, &v).unwrap();
    let rho = NatTrans::validate(
        jr.clone(),
        rv.clone(),
        cat.objects()
            .iter()
            .map(|x| (x.clone(), format!("{x}→b")))
            .collect(),
    )
    .unwrap();
    let rho_inv = NatTrans::validate(
        rv,
        jr,
        cat.objects()
            .iter()
            .map(|x| (x.clone(), format!("b→{x}")))
            .collect(),
    )
    .unwrap();
    UArrMorphism::validate(u.clone(), u, j, v, rho, rho_inv).unwrap()
}

/// The identity 2-cell on the skew 1-cell: the cylinder condition holds, yet
/// alpha R and R beta land on different objects: the documented
/// 2-naturality failure witness.
pub fn iso2_skew_cell() -> UArrTwoCell {
    UArrTwoCell::identity(&iso2_skew_morphism()).unwrap()
}

/// Builds the strict (identity-rho) 1-cell carried by a commuting functor
/// pair: requires J R = R' V on the nose.
pub fn strict_arrow_morphism(
    source: &UniversalArrow,
    target: &UniversalArrow,
    j: Functor,
    v: Functor,
) -> Result<UArrMorphism> {
    let jr = crate::fincat::compose_functors(&j, &source.right)?;
    let rv = crate::fincat::compose_functors(&target.right, &v)?;
    let comps: BTreeMap<ObjId, MorId> = source
        .upstairs
        .objects()
        .iter()
        .map(|x| Ok((x.clone(), target.base.identity_of(jr.on_obj(x)?)?)))
        .collect::<Result<_>>()?;
    let rho = NatTrans::validate(jr.clone(), rv.clone(), comps.clone())?;
    let rho_inv = NatTrans::validate(rv, jr, comps)?;
    UArrMorphism::validate(source.clone(), target.clone(), j, v, rho, rho_inv)
}

/// The strict (identity-rho) 1-cell on GaloisCR with J the induced closure
/// endofunctor and V the identity.
pub fn galois_rl_morphism() -> UArrMorphism {
    let u = galois_cr();
    let j = poset_functor(&u.base, &u.base, |a| if a == "0" { "0" } else { "2" }.to_string())
        .unwrap();
    let v = Functor::identity(&u.upstairs);
    strict_arrow_morphism(&u, &u, j, v).unwrap()
}

/// A non-identity strict 2-cell on GaloisCR: alpha is the unit pointing the
/// identity 1-cell into the closure 1-cell, beta is the identity.
pub fn galois_eta_cell() -> UArrTwoCell {
    let u = galois_cr();
    let id_cell = UArrMorphism::identity(&u).unwrap();
    let rl_cell = galois_rl_morphism();
    let alpha = NatTrans::validate(
        id_cell.j.clone(),
        rl_cell.j.clone(),
        u.unit.clone(),
    )
    .unwrap();
    let beta = NatTrans::identity(&id_cell.v).unwrap();
    UArrTwoCell::validate(id_cell, rl_cell, alpha, beta).unwrap()
}

/// Builds the closure monad of an inflationary, monotone, idempotent map on
/// a poset category: unit a = a→c(a), extension = the unique order witness.
pub fn closure_monad(cat: &Cat, c: &BTreeMap<ObjId, ObjId>) -> Result<ExtensiveMonad> {
    let unit = cat
        .objects()
        .iter()
        .map(|a| (a.clone(), format!("{a}→{}", c[a])))
        .collect();
    let mut ext = BTreeMap::new();
    for a in cat.objects() {
        for b in cat.objects() {
            let sb = &c[b];
            for h in cat.hom(a, sb) {
                ext.insert((a.clone(), b.clone(), h), format!("{}→{}", c[a], sb));
            }
        }
    }
    ExtensiveMonad::validate(cat.clone(), c.clone(), unit, ext)
}

/// Clo2: the closure 0, 1 -> 1 and 2 -> 2 on Chain3, in extension form.
pub fn clo2() -> ExtensiveMonad {
    let chain = chain3();
    let c = [("0", "1"), ("1", "1"), ("2", "2")]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    closure_monad(&chain, &c).unwrap()
}

/// The closure 0 -> 2 on the 2-chain {0, 2}.
pub fn clo_two_up() -> ExtensiveMonad {
    let two = two();
    let c = [("0", "2"), ("2", "2")]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    closure_monad(&two, &c).unwrap()
}

/// A closure on Div6 whose fixed points are {2, 6}: odd divisors round up.
pub fn div6_closure() -> ExtensiveMonad {
    let d = div6();
    let c = [("1", "2"), ("2", "2"), ("3", "6"), ("6", "6")]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    closure_monad(&d, &c).unwrap()
}

/// Builds the 1-cell determined by a functor between poset-based monads; the
/// extension entries are the unique order witnesses.
pub fn poset_one_cell(
    source: &ExtensiveMonad,
    target: &ExtensiveMonad,
    p: Functor,
) -> Result<EMndMorphism> {
    let d = &target.base;
    let mut ext = BTreeMap::new();
    for a in source.base.objects() {
        let psa = p.on_obj(&source.s[a])?.clone();
        for d_obj in d.objects() {
            for pm in d.hom(d_obj, &psa) {
                let td = &target.s[d_obj];
                let hom = d.hom(td, &psa);
                let w = hom.first().ok_or_else(|| CheckError::OneCellLaw {
                    law: "i".into(),
                    witness: format!("(A={a}, p={pm})"),
                    lhs: format!("no morphism {td} -> {psa}"),
                    rhs: String::new(),
                })?;
                ext.insert((a.clone(), pm), w.clone());
            }
        }
    }
    EMndMorphism::validate(source.clone(), target.clone(), p, ext)
}

/// The inclusion 1-cell from the {0, 2}-closure monad into Clo2.
pub fn clo_two_up_inclusion() -> EMndMorphism {
    poset_one_cell(&clo_two_up(), &clo2(), inclusion_two_chain3()).unwrap()
}

/// A parallel 1-cell to the inclusion: 0 -> 1, 2 -> 2.
pub fn clo_q_morphism() -> EMndMorphism {
    let p = poset_functor(&two(), &chain3(), |a| if a == "0" { "1" } else { "2" }.to_string())
        .unwrap();
    poset_one_cell(&clo_two_up(), &clo2(), p).unwrap()
}

/// The 2-cell from the inclusion 1-cell to its parallel shift.
pub fn clo_theta_cell() -> EMndTwoCell {
    let src = clo_two_up_inclusion();
    let tgt = clo_q_morphism();
    let theta = NatTrans::validate(
        src.p.clone(),
        tgt.p.clone(),
        [("0", "0→1"), ("2", "2→2")]
            .into_iter()
            .map(|(a, m)| (a.to_string(), m.to_string()))
            .collect(),
    )
    .unwrap();
    EMndTwoCell::validate(src, tgt, theta).unwrap()
}

/// The 2-cell on Clo2 whose components are the closure unit, pointing the
/// identity 1-cell into the closure endofunctor 1-cell.
pub fn clo_unit_cell() -> EMndTwoCell {
    let m = clo2();
    let src = EMndMorphism::identity(&m).unwrap();
    let tgt = closure_endocell(&m).unwrap();
    let theta = NatTrans::validate(src.p.clone(), tgt.p.clone(), m.unit.clone()).unwrap();
    EMndTwoCell::validate(src, tgt, theta).unwrap()
}

/// The Galois connection of GaloisCR, hand-built as a classical adjunction.
pub fn galois_adjunction() -> Adjunction {
    let chain = chain3();
    let two = two();
    let l = poset_functor(&chain, &two, |a| if a == "0" { "0" } else { "2" }.to_string()).unwrap();
    let r = inclusion_two_chain3();
    let rl = crate::fincat::compose_functors(&r, &l).unwrap();
    let lr = crate::fincat::compose_functors(&l, &r).unwrap();
    let unit = NatTrans::validate(
        Functor::identity(&chain),
        rl,
        chain
            .objects()
            .iter()
            .map(|a| {
                let la = if a == "0" { "0" } else { "2" };
                (a.clone(), format!("{a}→{la}"))
            })
            .collect(),
    )
    .unwrap();
    let counit = NatTrans::validate(
        lr,
        Functor::identity(&two),
        two.objects()
            .iter()
            .map(|x| (x.clone(), format!("{x}→{x}")))
            .collect(),
    )
    .unwrap();
    Adjunction::validate(l, r, unit, counit).unwrap()
}

/// Clo2 as a hand-built classical monad: the closure endofunctor with unit
/// a <= c(a) and multiplication the identity on closed points.
pub fn clo2_classical() -> ClassicalMonad {
    let chain = chain3();
    let s = chain3_closure_functor();
    let c = |a: &str| if a == "2" { "2" } else { "1" };
    let unit = NatTrans::validate(
        Functor::identity(&chain),
        s.clone(),
        chain
            .objects()
            .iter()
            .map(|a| (a.clone(), format!("{a}→{}", c(a))))
            .collect(),
    )
    .unwrap();
    let ss = crate::fincat::compose_functors(&s, &s).unwrap();
    let mult = NatTrans::validate(
        ss,
        s.clone(),
        chain
            .objects()
            .iter()
            .map(|a| (a.clone(), format!("{0}→{0}", c(a))))
            .collect(),
    )
    .unwrap();
    ClassicalMonad::validate(s, unit, mult).unwrap()
}

/// A random poset on at most `max_elems` elements: include x_i <= x_j with
/// probability 1/2 for i < j, then close transitively.
#[allow(clippy::needless_range_loop)] // adjacency-matrix indexing
pub fn random_poset(rng: &mut impl Rng, max_elems: usize) -> Cat {
    let n = rng.gen_range(1..=max_elems.max(1));
    let mut rel = vec![vec![false; n]; n];
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(0.5) {
                rel[i][j] = true;
            }
        }
    }
    // transitive closure; antisymmetry holds because edges only point up
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i][k] && rel[k][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let idx = |a: &str| names.iter().position(|x| x == a).unwrap();
    poset(&refs, |a, b| rel[idx(a)][idx(b)])
}

/// A random chain with a random closure operator: the fixed-point set is a
/// random subset containing the top, c(a) = least fixed point above a.
pub fn random_chain_closure(rng: &mut impl Rng, max_elems: usize) -> ExtensiveMonad {
    let n = rng.gen_range(1..=max_elems.clamp(1, 9));
    // single-digit suffixes keep lexicographic and numeric order aligned
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let cat = poset(&refs, |a, b| a <= b);
    let mut fixed: Vec<usize> = (0..n - 1).filter(|_| rng.gen_bool(0.5)).collect();
    fixed.push(n - 1);
    let c: BTreeMap<ObjId, ObjId> = (0..n)
        .map(|i| {
            let j = *fixed.iter().find(|&&f| f >= i).unwrap();
            (names[i].clone(), names[j].clone())
        })
        .collect();
    closure_monad(&cat, &c).unwrap()
}

/// The closure endofunctor of a poset closure monad, as a 1-cell from the
/// monad to itself.
pub fn closure_endocell(monad: &ExtensiveMonad) -> Result<EMndMorphism> {
    let cmap = monad.s.clone();
    let p = poset_functor(&monad.base, &monad.base, |a| cmap[a].clone())?;
    poset_one_cell(monad, monad, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn div6_has_incomparable_pair() {
        let d = div6();
        assert!(d.hom("2", "3").is_empty());
        assert!(d.hom("3", "2").is_empty());
        assert_eq!(d.morphism_ids().count(), 9);
    }

    #[test]
    fn z2_composes_like_the_group() {
        let z = z2();
        assert_eq!(z.comp("s", "s").unwrap(), "e");
        assert_eq!(z.comp("s", "e").unwrap(), "s");
    }

    #[test]
    fn random_posets_validate() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..25 {
            let p = random_poset(&mut rng, 5);
            assert!(!p.objects().is_empty());
        }
    }

    #[test]
    fn random_chain_closures_validate() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let m = random_chain_closure(&mut rng, 6);
            closure_endocell(&m).unwrap();
        }
    }

    #[test]
    fn skew_cell_is_a_valid_two_cell() {
        let c = iso2_skew_cell();
        assert!(!c.source.is_strict());
    }

    #[test]
    fn galois_eta_cell_is_strict() {
        let c = galois_eta_cell();
        assert!(c.source.is_strict() && c.target.is_strict());
    }
}
