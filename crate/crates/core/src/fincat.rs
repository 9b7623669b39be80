//! Finite categories with fully materialized composition tables, plus the
//! functors, natural transformations, and whiskering operations every other
//! module builds on.
//!
//! Objects and morphisms are identified by strings; equality is identifier
//! equality within one category value and structural table equality across
//! values.  All hom-set searches run in lexicographic identifier order so
//! witnesses and error messages are reproducible.

use crate::error::{CheckError, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

pub type ObjId = String;
pub type MorId = String;

/// A named arrow with explicit endpoints.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Morphism {
    pub id: MorId,
    pub src: ObjId,
    pub tgt: ObjId,
}

/// A finite category: object set, morphism set, identity table, and a total
/// composition table over every composable pair.  Values are immutable once
/// validated; share them through [`Cat`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<ObjId>,
    morphisms: BTreeMap<MorId, Morphism>,
    identity: BTreeMap<ObjId, MorId>,
    compose: BTreeMap<(MorId, MorId), MorId>,
}

/// Shared handle to a validated category.
pub type Cat = Arc<FinCategory>;

impl FinCategory {
    /// Validates a raw category description.  Checks totality and closure of
    /// the identity and composition tables, the unit laws, and associativity
    /// over every composable triple.
    pub fn validate(
        objects: Vec<ObjId>,
        morphisms: Vec<Morphism>,
        identity: BTreeMap<ObjId, MorId>,
        compose: BTreeMap<(MorId, MorId), MorId>,
    ) -> Result<FinCategory> {
        let mut objs = objects;
        objs.sort();
        objs.dedup();

        let mut mor_map = BTreeMap::new();
        for m in morphisms {
            if !objs.contains(&m.src) || !objs.contains(&m.tgt) {
                return Err(CheckError::MalformedCategory(format!(
                    "morphism {} has endpoint outside the object set",
                    m.id
                )));
            }
            if mor_map.insert(m.id.clone(), m).is_some() {
                return Err(CheckError::MalformedCategory(
                    "duplicate morphism identifier".into(),
                ));
            }
        }

        let cat = FinCategory {
            objects: objs,
            morphisms: mor_map,
            identity,
            compose,
        };

        // identity table: total, closed, correctly typed
        for a in &cat.objects {
            let id = cat.identity.get(a).ok_or_else(|| CheckError::BadIdentity {
                object: a.clone(),
                reason: "no identity assigned".into(),
            })?;
            let m = cat.morphisms.get(id).ok_or_else(|| CheckError::BadIdentity {
                object: a.clone(),
                reason: format!("identity {id} is not a morphism"),
            })?;
            if m.src != *a || m.tgt != *a {
                return Err(CheckError::BadIdentity {
                    object: a.clone(),
                    reason: format!("identity {id} is not an endomorphism of {a}"),
                });
            }
        }
        for a in cat.identity.keys() {
            if !cat.objects.contains(a) {
                return Err(CheckError::BadIdentity {
                    object: a.clone(),
                    reason: "identity assigned to unknown object".into(),
                });
            }
        }

        // composition table: total on composable pairs, closed, well-typed,
        // and free of entries for non-composable pairs
        for ((g, f), h) in &cat.compose {
            let (mg, mf) = match (cat.morphisms.get(g), cat.morphisms.get(f)) {
                (Some(mg), Some(mf)) => (mg, mf),
                _ => {
                    return Err(CheckError::MalformedCategory(format!(
                        "compose entry ({g}, {f}) references unknown morphisms"
                    )))
                }
            };
            if mf.tgt != mg.src {
                return Err(CheckError::MalformedCategory(format!(
                    "compose entry ({g}, {f}) is not composable"
                )));
            }
            let mh = cat.morphisms.get(h).ok_or_else(|| {
                CheckError::MalformedCategory(format!("composite {h} is not a morphism"))
            })?;
            if mh.src != mf.src || mh.tgt != mg.tgt {
                return Err(CheckError::MalformedCategory(format!(
                    "composite {h} of ({g}, {f}) has wrong endpoints"
                )));
            }
        }
        for g in cat.morphisms.values() {
            for f in cat.morphisms.values() {
                if f.tgt == g.src && !cat.compose.contains_key(&(g.id.clone(), f.id.clone())) {
                    return Err(CheckError::MissingComposite {
                        g: g.id.clone(),
                        f: f.id.clone(),
                    });
                }
            }
        }

        // unit laws
        for f in cat.morphisms.values() {
            let id_tgt = cat.identity[&f.tgt].clone();
            let id_src = cat.identity[&f.src].clone();
            let left = cat.compose[&(id_tgt, f.id.clone())].clone();
            if left != f.id {
                return Err(CheckError::BadIdentity {
                    object: f.tgt.clone(),
                    reason: format!("id.{} = {} but expected {}", f.id, left, f.id),
                });
            }
            let right = cat.compose[&(f.id.clone(), id_src)].clone();
            if right != f.id {
                return Err(CheckError::BadIdentity {
                    object: f.src.clone(),
                    reason: format!("{}.id = {} but expected {}", f.id, right, f.id),
                });
            }
        }

        // associativity over all composable triples
        for h in cat.morphisms.values() {
            for g in cat.morphisms.values() {
                if g.tgt != h.src {
                    continue;
                }
                for f in cat.morphisms.values() {
                    if f.tgt != g.src {
                        continue;
                    }
                    let gf = cat.compose[&(g.id.clone(), f.id.clone())].clone();
                    let hg = cat.compose[&(h.id.clone(), g.id.clone())].clone();
                    let left = cat.compose[&(hg.clone(), f.id.clone())].clone();
                    let right = cat.compose[&(h.id.clone(), gf)].clone();
                    if left != right {
                        return Err(CheckError::NonAssociative {
                            h: h.id.clone(),
                            g: g.id.clone(),
                            f: f.id.clone(),
                            left,
                            right,
                        });
                    }
                }
            }
        }

        Ok(cat)
    }

    pub fn objects(&self) -> &[ObjId] {
        &self.objects
    }

    pub fn morphism_ids(&self) -> impl Iterator<Item = &MorId> {
        self.morphisms.keys()
    }

    pub fn morphisms(&self) -> impl Iterator<Item = &Morphism> {
        self.morphisms.values()
    }

    pub fn has_object(&self, a: &str) -> bool {
        self.objects.iter().any(|o| o == a)
    }

    pub fn morphism(&self, id: &str) -> Result<&Morphism> {
        self.morphisms
            .get(id)
            .ok_or_else(|| CheckError::MalformedCategory(format!("unknown morphism {id}")))
    }

    pub fn src(&self, id: &str) -> Result<&ObjId> {
        Ok(&self.morphism(id)?.src)
    }

    pub fn tgt(&self, id: &str) -> Result<&ObjId> {
        Ok(&self.morphism(id)?.tgt)
    }

    pub fn identity_of(&self, a: &str) -> Result<MorId> {
        self.identity
            .get(a)
            .cloned()
            .ok_or_else(|| CheckError::MalformedCategory(format!("unknown object {a}")))
    }

    /// g . f, applying `f` first.
    pub fn comp(&self, g: &str, f: &str) -> Result<MorId> {
        let mg = self.morphism(g)?;
        let mf = self.morphism(f)?;
        if mf.tgt != mg.src {
            return Err(CheckError::ShapeMismatch(format!(
                "{g}: {}->{} cannot follow {f}: {}->{}",
                mg.src, mg.tgt, mf.src, mf.tgt
            )));
        }
        self.compose
            .get(&(g.to_string(), f.to_string()))
            .cloned()
            .ok_or_else(|| CheckError::MissingComposite {
                g: g.to_string(),
                f: f.to_string(),
            })
    }

    /// Composes a non-empty chain listed codomain-first: `chain(&[h, g, f])`
    /// is h.g.f.
    pub fn chain(&self, ids: &[&str]) -> Result<MorId> {
        let mut acc = ids
            .last()
            .ok_or_else(|| CheckError::ShapeMismatch("empty composition chain".into()))?
            .to_string();
        for g in ids.iter().rev().skip(1) {
            acc = self.comp(g, &acc)?;
        }
        Ok(acc)
    }

    /// Hom-set in lexicographic identifier order.
    pub fn hom(&self, a: &str, b: &str) -> Vec<MorId> {
        self.morphisms
            .values()
            .filter(|m| m.src == a && m.tgt == b)
            .map(|m| m.id.clone())
            .collect()
    }

    /// Searches for a two-sided inverse of `f`, in enumeration order.
    pub fn inverse_of(&self, f: &str) -> Result<MorId> {
        let m = self.morphism(f)?;
        let id_src = self.identity_of(&m.src)?;
        let id_tgt = self.identity_of(&m.tgt)?;
        for cand in self.hom(&m.tgt, &m.src) {
            if self.comp(&cand, f)? == id_src && self.comp(f, &cand)? == id_tgt {
                return Ok(cand);
            }
        }
        Err(CheckError::NotInvertible {
            object: m.src.clone(),
            reason: format!("{f} has no two-sided inverse"),
        })
    }
}

/// A function on objects only, the shape of the left part of a universal
/// arrow and of the underlying endofunction of an extension-form monad.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectFunction {
    pub source: Cat,
    pub target: Cat,
    pub object_map: BTreeMap<ObjId, ObjId>,
}

impl ObjectFunction {
    pub fn validate(source: Cat, target: Cat, object_map: BTreeMap<ObjId, ObjId>) -> Result<Self> {
        for a in source.objects() {
            let b = object_map.get(a).ok_or_else(|| {
                CheckError::MalformedCategory(format!("object function undefined at {a}"))
            })?;
            if !target.has_object(b) {
                return Err(CheckError::MalformedCategory(format!(
                    "object function sends {a} outside the target category"
                )));
            }
        }
        Ok(ObjectFunction {
            source,
            target,
            object_map,
        })
    }

    pub fn apply(&self, a: &str) -> Result<&ObjId> {
        self.object_map
            .get(a)
            .ok_or_else(|| CheckError::MalformedCategory(format!("object function undefined at {a}")))
    }
}

/// A functor between validated finite categories, stored as total object and
/// morphism tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    pub source: Cat,
    pub target: Cat,
    pub object_map: BTreeMap<ObjId, ObjId>,
    pub morphism_map: BTreeMap<MorId, MorId>,
}

impl Functor {
    /// Checks totality, endpoint preservation, identity preservation, and
    /// composition preservation over every composable pair.
    pub fn validate(
        source: Cat,
        target: Cat,
        object_map: BTreeMap<ObjId, ObjId>,
        morphism_map: BTreeMap<MorId, MorId>,
    ) -> Result<Functor> {
        let f = Functor {
            source,
            target,
            object_map,
            morphism_map,
        };
        f.revalidate()?;
        Ok(f)
    }

    /// Re-runs the functor laws on the stored tables.
    pub fn revalidate(&self) -> Result<()> {
        for a in self.source.objects() {
            let b = self.object_map.get(a).ok_or_else(|| CheckError::NotFunctorial {
                reason: "object map not total".into(),
                witness: a.clone(),
            })?;
            if !self.target.has_object(b) {
                return Err(CheckError::NotFunctorial {
                    reason: format!("object {a} mapped outside target"),
                    witness: a.clone(),
                });
            }
        }
        for m in self.source.morphisms() {
            let fm_id = self
                .morphism_map
                .get(&m.id)
                .ok_or_else(|| CheckError::NotFunctorial {
                    reason: "morphism map not total".into(),
                    witness: m.id.clone(),
                })?;
            let fm = self.target.morphism(fm_id)?;
            if fm.src != self.object_map[&m.src] || fm.tgt != self.object_map[&m.tgt] {
                return Err(CheckError::NotFunctorial {
                    reason: format!(
                        "image {fm_id} has endpoints {}->{}, expected {}->{}",
                        fm.src, fm.tgt, self.object_map[&m.src], self.object_map[&m.tgt]
                    ),
                    witness: m.id.clone(),
                });
            }
        }
        for a in self.source.objects() {
            let id_a = self.source.identity_of(a)?;
            let want = self.target.identity_of(&self.object_map[a])?;
            if self.morphism_map[&id_a] != want {
                return Err(CheckError::NotFunctorial {
                    reason: format!("identity of {a} not preserved"),
                    witness: id_a,
                });
            }
        }
        for g in self.source.morphisms() {
            for f in self.source.morphisms() {
                if f.tgt != g.src {
                    continue;
                }
                let gf = self.source.comp(&g.id, &f.id)?;
                let lhs = self.morphism_map[&gf].clone();
                let rhs = self
                    .target
                    .comp(&self.morphism_map[&g.id], &self.morphism_map[&f.id])?;
                if lhs != rhs {
                    return Err(CheckError::NotFunctorial {
                        reason: format!("composition not preserved: F({g}.{f}) = {lhs} but F{g}.F{f} = {rhs}", g = g.id, f = f.id),
                        witness: gf,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn identity(cat: &Cat) -> Functor {
        Functor {
            source: cat.clone(),
            target: cat.clone(),
            object_map: cat.objects().iter().map(|a| (a.clone(), a.clone())).collect(),
            morphism_map: cat.morphism_ids().map(|m| (m.clone(), m.clone())).collect(),
        }
    }

    pub fn on_obj(&self, a: &str) -> Result<&ObjId> {
        self.object_map
            .get(a)
            .ok_or_else(|| CheckError::ShapeMismatch(format!("functor undefined at object {a}")))
    }

    pub fn on_mor(&self, f: &str) -> Result<&MorId> {
        self.morphism_map
            .get(f)
            .ok_or_else(|| CheckError::ShapeMismatch(format!("functor undefined at morphism {f}")))
    }

    pub fn object_part(&self) -> ObjectFunction {
        ObjectFunction {
            source: self.source.clone(),
            target: self.target.clone(),
            object_map: self.object_map.clone(),
        }
    }
}

/// Composite functor g . f.  Laws are preserved by construction, so the
/// result is not re-checked here; `revalidate` exists for spot checks.
pub fn compose_functors(g: &Functor, f: &Functor) -> Result<Functor> {
    if f.target != g.source {
        return Err(CheckError::ShapeMismatch(
            "functor composition: inner target differs from outer source".into(),
        ));
    }
    let object_map = f
        .object_map
        .iter()
        .map(|(a, b)| Ok((a.clone(), g.on_obj(b)?.clone())))
        .collect::<Result<_>>()?;
    let morphism_map = f
        .morphism_map
        .iter()
        .map(|(m, n)| Ok((m.clone(), g.on_mor(n)?.clone())))
        .collect::<Result<_>>()?;
    Ok(Functor {
        source: f.source.clone(),
        target: g.target.clone(),
        object_map,
        morphism_map,
    })
}

/// A natural transformation stored componentwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTrans {
    pub source: Functor,
    pub target: Functor,
    pub components: BTreeMap<ObjId, MorId>,
}

impl NatTrans {
    /// Checks component typing and every naturality square.
    pub fn validate(source: Functor, target: Functor, components: BTreeMap<ObjId, MorId>) -> Result<NatTrans> {
        if source.source != target.source || source.target != target.target {
            return Err(CheckError::ShapeMismatch(
                "transformation between functors of different shape".into(),
            ));
        }
        let t = NatTrans {
            source,
            target,
            components,
        };
        t.revalidate()?;
        Ok(t)
    }

    pub fn revalidate(&self) -> Result<()> {
        let dom = &self.source.source;
        let cod = &self.source.target;
        for a in dom.objects() {
            let c = self.components.get(a).ok_or_else(|| CheckError::NotNatural {
                reason: "component table not total".into(),
                witness: a.clone(),
            })?;
            let m = cod.morphism(c)?;
            if &m.src != self.source.on_obj(a)? || &m.tgt != self.target.on_obj(a)? {
                return Err(CheckError::NotNatural {
                    reason: format!(
                        "component {c} has endpoints {}->{}, expected {}->{}",
                        m.src,
                        m.tgt,
                        self.source.on_obj(a)?,
                        self.target.on_obj(a)?
                    ),
                    witness: a.clone(),
                });
            }
        }
        for f in dom.morphisms() {
            let lhs = cod.comp(&self.components[&f.tgt], self.source.on_mor(&f.id)?)?;
            let rhs = cod.comp(self.target.on_mor(&f.id)?, &self.components[&f.src])?;
            if lhs != rhs {
                return Err(CheckError::NotNatural {
                    reason: format!("square at {} does not commute: {lhs} != {rhs}", f.id),
                    witness: f.id.clone(),
                });
            }
        }
        Ok(())
    }

    pub fn identity(f: &Functor) -> Result<NatTrans> {
        let components = f
            .source
            .objects()
            .iter()
            .map(|a| Ok((a.clone(), f.target.identity_of(f.on_obj(a)?)?)))
            .collect::<Result<_>>()?;
        Ok(NatTrans {
            source: f.clone(),
            target: f.clone(),
            components,
        })
    }

    pub fn at(&self, a: &str) -> Result<&MorId> {
        self.components
            .get(a)
            .ok_or_else(|| CheckError::ShapeMismatch(format!("no component at {a}")))
    }

    /// True when every component is an identity morphism.
    pub fn is_identity(&self) -> bool {
        self.components.iter().all(|(a, c)| {
            self.source
                .on_obj(a)
                .and_then(|b| self.source.target.identity_of(b))
                .map(|id| &id == c)
                .unwrap_or(false)
        })
    }
}

/// Vertical composite b . a of transformations a: F -> G, b: G -> H.
pub fn vertical(b: &NatTrans, a: &NatTrans) -> Result<NatTrans> {
    if a.target != b.source {
        return Err(CheckError::ShapeMismatch(
            "vertical composition: middle functors differ".into(),
        ));
    }
    let cod = &a.source.target;
    let components = a
        .components
        .iter()
        .map(|(obj, c)| Ok((obj.clone(), cod.comp(b.at(obj)?, c)?)))
        .collect::<Result<_>>()?;
    Ok(NatTrans {
        source: a.source.clone(),
        target: b.target.clone(),
        components,
    })
}

/// Whiskering h . a with the functor on the left: component at A is h(aA).
pub fn whisker_left(h: &Functor, a: &NatTrans) -> Result<NatTrans> {
    if a.source.target != h.source {
        return Err(CheckError::ShapeMismatch(
            "left whiskering: functor does not start where the cell lands".into(),
        ));
    }
    let components = a
        .components
        .iter()
        .map(|(obj, c)| Ok((obj.clone(), h.on_mor(c)?.clone())))
        .collect::<Result<_>>()?;
    Ok(NatTrans {
        source: compose_functors(h, &a.source)?,
        target: compose_functors(h, &a.target)?,
        components,
    })
}

/// Whiskering a . h with the functor on the right: component at Z is a(hZ).
pub fn whisker_right(a: &NatTrans, h: &Functor) -> Result<NatTrans> {
    if h.target != a.source.source {
        return Err(CheckError::ShapeMismatch(
            "right whiskering: functor does not land where the cell starts".into(),
        ));
    }
    let components = h
        .source
        .objects()
        .iter()
        .map(|z| Ok((z.clone(), a.at(h.on_obj(z)?)?.clone())))
        .collect::<Result<_>>()?;
    Ok(NatTrans {
        source: compose_functors(&a.source, h)?,
        target: compose_functors(&a.target, h)?,
        components,
    })
}

/// Horizontal composite of a: F -> G (downstairs) and c: H -> K (upstairs),
/// computed as (c . G-whisker) after (H-whisker . a).
pub fn horizontal(c: &NatTrans, a: &NatTrans) -> Result<NatTrans> {
    let first = whisker_left(&c.source, a)?;
    let second = whisker_right(c, &a.target)?;
    vertical(&second, &first)
}

/// The commuting square of the hom-category composition functor: both
/// whisker orders must agree for every pair of composable cells.
pub fn interchange_holds(c: &NatTrans, a: &NatTrans) -> Result<bool> {
    let one = vertical(&whisker_right(c, &a.target)?, &whisker_left(&c.source, a)?)?;
    let two = vertical(&whisker_left(&c.target, a)?, &whisker_right(c, &a.source)?)?;
    Ok(one == two)
}

/// Enumerates every functor between two finite categories, in lexicographic
/// order of the object and morphism tables, stopping when `budget` candidate
/// assignments have been examined.
pub fn enumerate_functors(source: &Cat, target: &Cat, budget: u64) -> Result<Vec<Functor>> {
    let objs = source.objects().to_vec();
    let mut out = Vec::new();
    let mut tried: u64 = 0;
    let mut stack: Vec<BTreeMap<ObjId, ObjId>> = vec![BTreeMap::new()];
    // depth-first over object assignments, morphism tables filled per leaf
    while let Some(partial) = stack.pop() {
        if partial.len() == objs.len() {
            tried += 1;
            if tried > budget {
                return Err(CheckError::SearchBudgetExceeded(format!(
                    "functor enumeration passed {budget} object assignments"
                )));
            }
            if let Some(fs) = functors_for_object_map(source, target, &partial, budget)? {
                out.extend(fs);
            }
            continue;
        }
        let next = &objs[partial.len()];
        // push in reverse so that lexicographically smaller images pop first
        for b in target.objects().iter().rev() {
            let mut m = partial.clone();
            m.insert(next.clone(), b.clone());
            stack.push(m);
        }
    }
    out.sort_by(|a, b| (&a.object_map, &a.morphism_map).cmp(&(&b.object_map, &b.morphism_map)));
    Ok(out)
}

fn functors_for_object_map(
    source: &Cat,
    target: &Cat,
    object_map: &BTreeMap<ObjId, ObjId>,
    budget: u64,
) -> Result<Option<Vec<Functor>>> {
    // candidate images per morphism; identities are forced
    let mors: Vec<&Morphism> = source.morphisms().collect();
    let mut choices: Vec<Vec<MorId>> = Vec::with_capacity(mors.len());
    for m in &mors {
        let id_src = source.identity_of(&m.src)?;
        if m.id == id_src && m.src == m.tgt {
            choices.push(vec![target.identity_of(&object_map[&m.src])?]);
        } else {
            let hom = target.hom(&object_map[&m.src], &object_map[&m.tgt]);
            if hom.is_empty() {
                return Ok(None);
            }
            choices.push(hom);
        }
    }
    let mut total: u64 = 1;
    for c in &choices {
        total = total.saturating_mul(c.len() as u64);
        if total > budget {
            return Err(CheckError::SearchBudgetExceeded(format!(
                "morphism-table enumeration passed {budget} candidates"
            )));
        }
    }
    let mut found = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let morphism_map: BTreeMap<MorId, MorId> = mors
            .iter()
            .enumerate()
            .map(|(pos, m)| (m.id.clone(), choices[pos][idx[pos]].clone()))
            .collect();
        let cand = Functor {
            source: source.clone(),
            target: target.clone(),
            object_map: object_map.clone(),
            morphism_map,
        };
        if cand.revalidate().is_ok() {
            found.push(cand);
        }
        // odometer
        let mut k = choices.len();
        loop {
            if k == 0 {
                return Ok(Some(found));
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Enumerates every natural transformation between two parallel functors.
pub fn enumerate_nat_trans(f: &Functor, g: &Functor, budget: u64) -> Result<Vec<NatTrans>> {
    if f.source != g.source || f.target != g.target {
        return Err(CheckError::ShapeMismatch(
            "transformation enumeration requires parallel functors".into(),
        ));
    }
    let objs = f.source.objects().to_vec();
    let mut choices = Vec::with_capacity(objs.len());
    let mut total: u64 = 1;
    for a in &objs {
        let hom = f.target.hom(f.on_obj(a)?, g.on_obj(a)?);
        total = total.saturating_mul(hom.len().max(1) as u64);
        if total > budget {
            return Err(CheckError::SearchBudgetExceeded(format!(
                "transformation enumeration passed {budget} candidates"
            )));
        }
        if hom.is_empty() {
            return Ok(Vec::new());
        }
        choices.push(hom);
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; objs.len()];
    loop {
        let components: BTreeMap<ObjId, MorId> = objs
            .iter()
            .enumerate()
            .map(|(pos, a)| (a.clone(), choices[pos][idx[pos]].clone()))
            .collect();
        if let Ok(t) = NatTrans::validate(f.clone(), g.clone(), components) {
            out.push(t);
        }
        let mut k = objs.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}
