//! Universal arrows and their 2-category: 0-cells carry a right functor, a
//! left object function, a unit, and the fully materialized universal
//! function zeta; 1-cells are functor pairs with an invertible comparison
//! transformation; 2-cells are transformation pairs bound by the cylinder
//! condition.
//!
//! zeta is computed once at validation time by exhaustive unique-witness
//! search and consulted by table lookup afterwards.

use crate::error::{CheckError, Result};
use crate::fincat::{
    compose_functors, vertical, whisker_left, whisker_right, Cat, Functor, MorId, NatTrans, ObjId,
    ObjectFunction,
};
use std::collections::BTreeMap;

/// A universal arrow from every object of the base category to the right
/// functor, with the associated universal function stored extensionally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalArrow {
    pub base: Cat,
    pub upstairs: Cat,
    /// R : upstairs -> base
    pub right: Functor,
    /// L on objects : base -> upstairs
    pub left: ObjectFunction,
    /// A -> (eta A : A -> R L A), a morphism of the base category
    pub unit: BTreeMap<ObjId, MorId>,
    /// (A, X, v : A -> R X) -> the unique w : L A -> X with R w . eta A = v
    pub zeta: BTreeMap<(ObjId, ObjId, MorId), MorId>,
}

/// Unique-witness search for one triangle: the sole w with R w . eta A = v.
pub fn compute_zeta(
    right: &Functor,
    left: &ObjectFunction,
    unit: &BTreeMap<ObjId, MorId>,
    a: &str,
    x_obj: &str,
    v: &str,
) -> Result<MorId> {
    let base = &right.target;
    let upstairs = &right.source;
    let eta_a = unit.get(a).ok_or_else(|| CheckError::NoWitness {
        a: a.to_string(),
        x: x_obj.to_string(),
        v: "<unit>".to_string(),
    })?;
    let la = left.apply(a)?;
    let mut witnesses = Vec::new();
    for w in upstairs.hom(la, x_obj) {
        if base.comp(right.on_mor(&w)?, eta_a)? == v {
            witnesses.push(w);
        }
    }
    match witnesses.len() {
        0 => Err(CheckError::NoWitness {
            a: a.to_string(),
            x: x_obj.to_string(),
            v: v.to_string(),
        }),
        1 => Ok(witnesses.pop().unwrap()),
        _ => Err(CheckError::AmbiguousWitness {
            a: a.to_string(),
            x: x_obj.to_string(),
            v: v.to_string(),
            candidates: witnesses,
        }),
    }
}

impl UniversalArrow {
    /// Validates the data of a universal arrow and materializes zeta for
    /// every (A, X, v).  Also checks the forced identity zeta(A, LA, eta A)
    /// and that each zeta(A, X, -) is a bijection onto Hom(LA, X).
    pub fn validate(
        right: Functor,
        left: ObjectFunction,
        unit: BTreeMap<ObjId, MorId>,
    ) -> Result<UniversalArrow> {
        let base = right.target.clone();
        let upstairs = right.source.clone();
        if left.source != base || left.target != upstairs {
            return Err(CheckError::ShapeMismatch(
                "left object function must run opposite the right functor".into(),
            ));
        }
        // unit typing: eta A : A -> R L A; a missing or untypable component
        // is a missing universal witness for the unit slot itself
        for a in base.objects() {
            let la = left.apply(a)?;
            let rla = right.on_obj(la)?;
            let eta = unit.get(a).ok_or_else(|| CheckError::NoWitness {
                a: a.clone(),
                x: la.clone(),
                v: "<unit>".to_string(),
            })?;
            let m = base.morphism(eta)?;
            if &m.src != a || &m.tgt != rla {
                return Err(CheckError::NoWitness {
                    a: a.clone(),
                    x: la.clone(),
                    v: "<unit>".to_string(),
                });
            }
        }

        let mut zeta = BTreeMap::new();
        for a in base.objects() {
            for x_obj in upstairs.objects() {
                let rx = right.on_obj(x_obj)?;
                for v in base.hom(a, rx) {
                    let w = compute_zeta(&right, &left, &unit, a, x_obj, &v)?;
                    zeta.insert((a.clone(), x_obj.clone(), v), w);
                }
            }
        }

        let arrow = UniversalArrow {
            base,
            upstairs,
            right,
            left,
            unit,
            zeta,
        };

        // uniqueness forces zeta(A, LA, eta A) = 1_{LA}
        for a in arrow.base.objects() {
            let la = arrow.left.apply(a)?;
            let got = arrow.zeta_at(a, la, &arrow.unit[a])?;
            let want = arrow.upstairs.identity_of(la)?;
            if got != &want {
                return Err(CheckError::Internal(format!(
                    "zeta({a}, {la}, eta) = {got}, expected the identity {want}"
                )));
            }
        }

        // bijectivity: the witnesses at (A, X) exhaust Hom(LA, X)
        for a in arrow.base.objects() {
            for x_obj in arrow.upstairs.objects() {
                let la = arrow.left.apply(a)?;
                let rx = arrow.right.on_obj(x_obj)?;
                let mut image: Vec<&MorId> = arrow
                    .base
                    .hom(a, rx)
                    .iter()
                    .map(|v| &arrow.zeta[&(a.clone(), x_obj.clone(), v.clone())])
                    .collect();
                image.sort();
                image.dedup();
                let hom = arrow.upstairs.hom(la, x_obj);
                if image.len() != hom.len() {
                    return Err(CheckError::NoWitness {
                        a: a.clone(),
                        x: x_obj.clone(),
                        v: format!("<bijection: {} of {} targets hit>", image.len(), hom.len()),
                    });
                }
            }
        }

        Ok(arrow)
    }

    pub fn zeta_at(&self, a: &str, x_obj: &str, v: &str) -> Result<&MorId> {
        self.zeta
            .get(&(a.to_string(), x_obj.to_string(), v.to_string()))
            .ok_or_else(|| CheckError::ShapeMismatch(format!(
                "no zeta entry at ({a}, {x_obj}, {v})"
            )))
    }

    /// The identity universal arrow on a category: R = L = 1, eta = 1.
    pub fn identity(cat: &Cat) -> Result<UniversalArrow> {
        let idf = Functor::identity(cat);
        let unit = cat
            .objects()
            .iter()
            .map(|a| Ok((a.clone(), cat.identity_of(a)?)))
            .collect::<Result<_>>()?;
        UniversalArrow::validate(idf.clone(), idf.object_part(), unit)
    }
}

/// A 1-cell (J, V, rho) between universal arrows; rho is a natural
/// isomorphism J R -> R' V and its inverse is stored explicitly so the
/// twisted extension operator stays total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UArrMorphism {
    pub source: UniversalArrow,
    pub target: UniversalArrow,
    pub j: Functor,
    pub v: Functor,
    pub rho: NatTrans,
    pub rho_inv: NatTrans,
}

impl UArrMorphism {
    pub fn validate(
        source: UniversalArrow,
        target: UniversalArrow,
        j: Functor,
        v: Functor,
        rho: NatTrans,
        rho_inv: NatTrans,
    ) -> Result<UArrMorphism> {
        if j.source != source.base || j.target != target.base {
            return Err(CheckError::ShapeMismatch("J must map base to base".into()));
        }
        if v.source != source.upstairs || v.target != target.upstairs {
            return Err(CheckError::ShapeMismatch(
                "V must map upstairs to upstairs".into(),
            ));
        }
        let jr = compose_functors(&j, &source.right)?;
        let rv = compose_functors(&target.right, &v)?;
        if rho.source != jr || rho.target != rv {
            return Err(CheckError::ShapeMismatch(
                "rho must run from J R to R' V".into(),
            ));
        }
        if rho_inv.source != rv || rho_inv.target != jr {
            return Err(CheckError::ShapeMismatch(
                "rho_inv must run from R' V to J R".into(),
            ));
        }
        rho.revalidate()?;
        rho_inv.revalidate()?;
        // componentwise two-sided inverse
        for x in source.upstairs.objects() {
            let d = &target.base;
            let fwd = rho.at(x)?;
            let bwd = rho_inv.at(x)?;
            let jrx = jr.on_obj(x)?;
            let rvx = rv.on_obj(x)?;
            if d.comp(bwd, fwd)? != d.identity_of(jrx)? {
                return Err(CheckError::NotInvertible {
                    object: x.clone(),
                    reason: format!("rho_inv . rho = {} at {x}", d.comp(bwd, fwd)?),
                });
            }
            if d.comp(fwd, bwd)? != d.identity_of(rvx)? {
                return Err(CheckError::NotInvertible {
                    object: x.clone(),
                    reason: format!("rho . rho_inv = {} at {x}", d.comp(fwd, bwd)?),
                });
            }
        }
        Ok(UArrMorphism {
            source,
            target,
            j,
            v,
            rho,
            rho_inv,
        })
    }

    /// Identity 1-cell: identity functors with the identity comparison.
    pub fn identity(u: &UniversalArrow) -> Result<UArrMorphism> {
        let j = Functor::identity(&u.base);
        let v = Functor::identity(&u.upstairs);
        let jr = compose_functors(&j, &u.right)?;
        let comps: BTreeMap<ObjId, MorId> = u
            .upstairs
            .objects()
            .iter()
            .map(|x| Ok((x.clone(), u.base.identity_of(jr.on_obj(x)?)?)))
            .collect::<Result<_>>()?;
        let rho = NatTrans::validate(jr.clone(), compose_functors(&u.right, &v)?, comps.clone())?;
        let rho_inv = NatTrans::validate(compose_functors(&u.right, &v)?, jr, comps)?;
        UArrMorphism::validate(u.clone(), u.clone(), j, v, rho, rho_inv)
    }

    /// True when every rho component is an identity, i.e. the right-functor
    /// square commutes on the nose.
    pub fn is_strict(&self) -> bool {
        self.rho.is_identity()
    }
}

/// Composite 1-cell m2 . m1 with comparison rho2 V1 o F rho1 and inverse
/// composed in the reverse order.
pub fn compose_one_cells(m2: &UArrMorphism, m1: &UArrMorphism) -> Result<UArrMorphism> {
    if m1.target != m2.source {
        return Err(CheckError::ShapeMismatch(
            "1-cell composition: target arrow differs from source arrow".into(),
        ));
    }
    let j = compose_functors(&m2.j, &m1.j)?;
    let v = compose_functors(&m2.v, &m1.v)?;
    let rho = vertical(&whisker_right(&m2.rho, &m1.v)?, &whisker_left(&m2.j, &m1.rho)?)?;
    let rho_inv = vertical(
        &whisker_left(&m2.j, &m1.rho_inv)?,
        &whisker_right(&m2.rho_inv, &m1.v)?,
    )?;
    UArrMorphism::validate(m1.source.clone(), m2.target.clone(), j, v, rho, rho_inv)
        .map_err(|e| CheckError::Internal(format!("composite 1-cell failed validation: {e}")))
}

/// A 2-cell (alpha, beta) subject to the cylinder condition
/// R' beta o rho = rho' o alpha R.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UArrTwoCell {
    pub source: UArrMorphism,
    pub target: UArrMorphism,
    pub alpha: NatTrans,
    pub beta: NatTrans,
}

impl UArrTwoCell {
    pub fn validate(
        source: UArrMorphism,
        target: UArrMorphism,
        alpha: NatTrans,
        beta: NatTrans,
    ) -> Result<UArrTwoCell> {
        if source.source != target.source || source.target != target.target {
            return Err(CheckError::ShapeMismatch(
                "2-cell between 1-cells with different endpoints".into(),
            ));
        }
        if alpha.source != source.j || alpha.target != target.j {
            return Err(CheckError::ShapeMismatch("alpha must run J -> K".into()));
        }
        if beta.source != source.v || beta.target != target.v {
            return Err(CheckError::ShapeMismatch("beta must run V -> W".into()));
        }
        alpha.revalidate()?;
        beta.revalidate()?;
        let d = &source.target.base;
        let r_dag = &source.target.right;
        let r = &source.source.right;
        for x in source.source.upstairs.objects() {
            let lhs = d.comp(r_dag.on_mor(beta.at(x)?)?, source.rho.at(x)?)?;
            let rhs = d.comp(target.rho.at(x)?, alpha.at(r.on_obj(x)?)?)?;
            if lhs != rhs {
                return Err(CheckError::CylinderViolation {
                    object: x.clone(),
                    lhs,
                    rhs,
                });
            }
        }
        Ok(UArrTwoCell {
            source,
            target,
            alpha,
            beta,
        })
    }

    pub fn identity(m: &UArrMorphism) -> Result<UArrTwoCell> {
        UArrTwoCell::validate(
            m.clone(),
            m.clone(),
            NatTrans::identity(&m.j)?,
            NatTrans::identity(&m.v)?,
        )
    }
}

/// Componentwise vertical composition; the cylinder condition is re-verified
/// on the result.
pub fn vertical_two_cells(c2: &UArrTwoCell, c1: &UArrTwoCell) -> Result<UArrTwoCell> {
    if c1.target != c2.source {
        return Err(CheckError::ShapeMismatch(
            "vertical composition of 2-cells: middle 1-cells differ".into(),
        ));
    }
    UArrTwoCell::validate(
        c1.source.clone(),
        c2.target.clone(),
        vertical(&c2.alpha, &c1.alpha)?,
        vertical(&c2.beta, &c1.beta)?,
    )
    .map_err(|e| CheckError::Internal(format!("vertical composite failed validation: {e}")))
}

/// Whiskering by a following 1-cell: (F alpha, G beta).
pub fn whisker_forward(m: &UArrMorphism, c: &UArrTwoCell) -> Result<UArrTwoCell> {
    if c.source.target != m.source {
        return Err(CheckError::ShapeMismatch(
            "forward whiskering: 1-cell does not start where the 2-cell ends".into(),
        ));
    }
    UArrTwoCell::validate(
        compose_one_cells(m, &c.source)?,
        compose_one_cells(m, &c.target)?,
        whisker_left(&m.j, &c.alpha)?,
        whisker_left(&m.v, &c.beta)?,
    )
    .map_err(|e| CheckError::Internal(format!("forward whiskering failed validation: {e}")))
}

/// Whiskering by a preceding 1-cell: (gamma J, delta V).
pub fn whisker_back(c: &UArrTwoCell, m: &UArrMorphism) -> Result<UArrTwoCell> {
    if m.target != c.source.source {
        return Err(CheckError::ShapeMismatch(
            "backward whiskering: 1-cell does not end where the 2-cell starts".into(),
        ));
    }
    UArrTwoCell::validate(
        compose_one_cells(&c.source, m)?,
        compose_one_cells(&c.target, m)?,
        whisker_right(&c.alpha, &m.j)?,
        whisker_right(&c.beta, &m.v)?,
    )
    .map_err(|e| CheckError::Internal(format!("backward whiskering failed validation: {e}")))
}

/// Horizontal composite (gamma K o F alpha, delta W o G beta); both
/// whiskering orders are computed and must agree.
pub fn horizontal_two_cells(c2: &UArrTwoCell, c1: &UArrTwoCell) -> Result<UArrTwoCell> {
    let one = vertical_two_cells(&whisker_back(c2, &c1.target)?, &whisker_forward(&c2.source, c1)?)?;
    let two = vertical_two_cells(&whisker_forward(&c2.target, c1)?, &whisker_back(c2, &c1.source)?)?;
    if one != two {
        return Err(CheckError::Internal(
            "horizontal composite disagrees between whiskering orders".into(),
        ));
    }
    Ok(one)
}
