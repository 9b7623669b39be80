//! Monads in extension form (Kleisli triples), their algebras, the category
//! of algebras with forgetful and free structure, and the 2-category of
//! extension-form monads: 1-cells carry a functor plus an extension table
//! over its image algebras, 2-cells are transformations whose components at
//! each SA are algebra morphisms.
//!
//! Algebra enumeration is brute force over extension tables with the unit
//! law applied as a per-entry filter; a budget guards the product of the
//! remaining choices.

use crate::error::{CheckError, Result};
use crate::fincat::{
    compose_functors, vertical, whisker_left, whisker_right, Cat, FinCategory, Functor, MorId,
    Morphism, NatTrans, ObjId, ObjectFunction,
};
use std::collections::BTreeMap;

/// Default cap on candidate extension tables per carrier during algebra
/// enumeration.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// A monad presented by an object function, a unit, and an extension
/// operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensiveMonad {
    pub base: Cat,
    /// S on objects
    pub s: BTreeMap<ObjId, ObjId>,
    /// A -> (unit A : A -> S A)
    pub unit: BTreeMap<ObjId, MorId>,
    /// (A, B, h : A -> S B) -> h^SB : S A -> S B
    pub ext: BTreeMap<(ObjId, ObjId, MorId), MorId>,
}

impl ExtensiveMonad {
    pub fn validate(
        base: Cat,
        s: BTreeMap<ObjId, ObjId>,
        unit: BTreeMap<ObjId, MorId>,
        ext: BTreeMap<(ObjId, ObjId, MorId), MorId>,
    ) -> Result<ExtensiveMonad> {
        // totality and typing of s and the unit
        for a in base.objects() {
            let sa = s.get(a).ok_or_else(|| {
                CheckError::MalformedCategory(format!("S undefined at object {a}"))
            })?;
            if !base.has_object(sa) {
                return Err(CheckError::MalformedCategory(format!(
                    "S sends {a} outside the category"
                )));
            }
            let eta = unit.get(a).ok_or_else(|| {
                CheckError::MalformedCategory(format!("unit undefined at object {a}"))
            })?;
            let m = base.morphism(eta)?;
            if &m.src != a || &m.tgt != sa {
                return Err(CheckError::MalformedCategory(format!(
                    "unit at {a} must be a morphism {a} -> {sa}, got {eta}"
                )));
            }
        }
        let monad = ExtensiveMonad {
            base,
            s,
            unit,
            ext,
        };
        // extension table: total and well-typed on (A, B, h : A -> SB)
        for a in monad.base.objects() {
            for b in monad.base.objects() {
                let sb = &monad.s[b];
                let sa = &monad.s[a];
                for h in monad.base.hom(a, sb) {
                    let key = (a.clone(), b.clone(), h.clone());
                    let hx = monad.ext.get(&key).ok_or_else(|| {
                        CheckError::MalformedCategory(format!(
                            "extension undefined at (A={a}, B={b}, h={h})"
                        ))
                    })?;
                    let m = monad.base.morphism(hx)?;
                    if &m.src != sa || &m.tgt != sb {
                        return Err(CheckError::MalformedCategory(format!(
                            "extension of {h} must be {sa} -> {sb}, got {hx}"
                        )));
                    }
                }
            }
        }
        for (a, b, h) in monad.ext.keys() {
            let m = monad.base.morphism(h)?;
            if &m.src != a || m.tgt != monad.s[b] {
                return Err(CheckError::MalformedCategory(format!(
                    "extension entry keyed (A={a}, B={b}, h={h}) is ill-typed"
                )));
            }
        }
        monad.check_laws()?;
        Ok(monad)
    }

    /// The three extension laws, each over every instance.
    fn check_laws(&self) -> Result<()> {
        // a) (eta A)^SA = 1_SA
        for a in self.base.objects() {
            let got = self.ext_at(a, a, &self.unit[a])?;
            let want = self.base.identity_of(&self.s[a])?;
            if got != &want {
                return Err(CheckError::LawA {
                    a: a.clone(),
                    got: got.clone(),
                    expected: want,
                });
            }
        }
        // b) h^SB . eta A = h
        for ((a, b, h), hx) in &self.ext {
            let got = self.base.comp(hx, &self.unit[a])?;
            if &got != h {
                return Err(CheckError::LawB {
                    a: a.clone(),
                    b: b.clone(),
                    h: h.clone(),
                    got,
                });
            }
        }
        // c) (k^SC . h)^SC = k^SC . h^SB
        for ((a, b, h), hx) in &self.ext {
            for c in self.base.objects() {
                let sc = &self.s[c];
                for k in self.base.hom(b, sc) {
                    let kx = self.ext_at(b, c, &k)?;
                    let kh = self.base.comp(kx, h)?;
                    let left = self.ext_at(a, c, &kh)?;
                    let right = self.base.comp(kx, hx)?;
                    if left != &right {
                        return Err(CheckError::LawC {
                            h: h.clone(),
                            k: k.clone(),
                            left: left.clone(),
                            right,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ext_at(&self, a: &str, b: &str, h: &str) -> Result<&MorId> {
        self.ext
            .get(&(a.to_string(), b.to_string(), h.to_string()))
            .ok_or_else(|| {
                CheckError::ShapeMismatch(format!("no extension entry at (A={a}, B={b}, h={h})"))
            })
    }

    pub fn s_of(&self, a: &str) -> Result<&ObjId> {
        self.s
            .get(a)
            .ok_or_else(|| CheckError::ShapeMismatch(format!("S undefined at {a}")))
    }

    /// The identity monad: S = 1, unit = 1, extension is the identity map.
    pub fn identity(cat: &Cat) -> Result<ExtensiveMonad> {
        let s = cat.objects().iter().map(|a| (a.clone(), a.clone())).collect();
        let unit = cat
            .objects()
            .iter()
            .map(|a| Ok((a.clone(), cat.identity_of(a)?)))
            .collect::<Result<_>>()?;
        let mut ext = BTreeMap::new();
        for a in cat.objects() {
            for b in cat.objects() {
                for h in cat.hom(a, b) {
                    ext.insert((a.clone(), b.clone(), h.clone()), h);
                }
            }
        }
        ExtensiveMonad::validate(cat.clone(), s, unit, ext)
    }
}

/// An algebra (N, (~)^N) for a monad: a carrier with an extension operator
/// on every morphism into it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Algebra {
    pub carrier: ObjId,
    /// a : A -> N  maps to  a^N : S A -> N, keyed by a
    pub ext: BTreeMap<MorId, MorId>,
}

impl Algebra {
    pub fn validate(monad: &ExtensiveMonad, carrier: ObjId, ext: BTreeMap<MorId, MorId>) -> Result<Algebra> {
        let alg = Algebra { carrier, ext };
        alg.revalidate(monad)?;
        Ok(alg)
    }

    pub fn revalidate(&self, monad: &ExtensiveMonad) -> Result<()> {
        let cat = &monad.base;
        if !cat.has_object(&self.carrier) {
            return Err(CheckError::MalformedCategory(format!(
                "algebra carrier {} is not an object",
                self.carrier
            )));
        }
        // typing and totality
        for a_obj in cat.objects() {
            for a in cat.hom(a_obj, &self.carrier) {
                let ax = self.ext.get(&a).ok_or_else(|| CheckError::AlgebraLaw {
                    law: "totality".into(),
                    carrier: self.carrier.clone(),
                    witness: a.clone(),
                    lhs: "<missing>".into(),
                    rhs: String::new(),
                })?;
                let m = cat.morphism(ax)?;
                if m.src != monad.s[a_obj] || m.tgt != self.carrier {
                    return Err(CheckError::AlgebraLaw {
                        law: "typing".into(),
                        carrier: self.carrier.clone(),
                        witness: a,
                        lhs: ax.clone(),
                        rhs: format!("{} -> {}", monad.s[a_obj], self.carrier),
                    });
                }
            }
        }
        // i) a^N . eta A = a
        for (a, ax) in &self.ext {
            let src = cat.src(a)?.clone();
            let got = cat.comp(ax, &monad.unit[&src])?;
            if &got != a {
                return Err(CheckError::AlgebraLaw {
                    law: "i".into(),
                    carrier: self.carrier.clone(),
                    witness: a.clone(),
                    lhs: got,
                    rhs: a.clone(),
                });
            }
        }
        // ii) (b^N . h)^N = b^N . h^SB
        for (b, bx) in &self.ext {
            let b_obj = cat.src(b)?.clone();
            for a_obj in cat.objects() {
                for h in cat.hom(a_obj, &monad.s[&b_obj]) {
                    let bh = cat.comp(bx, &h)?;
                    let left = self.ext.get(&bh).ok_or_else(|| CheckError::AlgebraLaw {
                        law: "ii".into(),
                        carrier: self.carrier.clone(),
                        witness: bh.clone(),
                        lhs: "<missing>".into(),
                        rhs: String::new(),
                    })?;
                    let right = cat.comp(bx, monad.ext_at(a_obj, &b_obj, &h)?)?;
                    if left != &right {
                        return Err(CheckError::AlgebraLaw {
                            law: "ii".into(),
                            carrier: self.carrier.clone(),
                            witness: format!("(b={b}, h={h})"),
                            lhs: left.clone(),
                            rhs: right,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The free algebra (SA, (~)^SA).
    pub fn free(monad: &ExtensiveMonad, a: &str) -> Result<Algebra> {
        let sa = monad.s_of(a)?.clone();
        let mut ext = BTreeMap::new();
        for z in monad.base.objects() {
            for m in monad.base.hom(z, &sa) {
                ext.insert(m.clone(), monad.ext_at(z, a, &m)?.clone());
            }
        }
        Ok(Algebra { carrier: sa, ext })
    }
}

/// Checks the algebra-morphism condition (q . a)^N = q . a^M for every a.
pub fn is_algebra_morphism(
    monad: &ExtensiveMonad,
    source: &Algebra,
    target: &Algebra,
    q: &str,
) -> Result<bool> {
    let cat = &monad.base;
    let m = cat.morphism(q)?;
    if m.src != source.carrier || m.tgt != target.carrier {
        return Err(CheckError::ShapeMismatch(format!(
            "{q} does not run between the carriers {} and {}",
            source.carrier, target.carrier
        )));
    }
    for (a, ax) in &source.ext {
        let qa = cat.comp(q, a)?;
        let left = match target.ext.get(&qa) {
            Some(x) => x,
            None => return Ok(false),
        };
        if left != &cat.comp(q, ax)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The category of all algebras of a monad, with the forgetful functor and
/// the free-algebra object function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraCategory {
    pub monad: ExtensiveMonad,
    pub category: Cat,
    /// object id in `category` -> the algebra it names
    pub algebras: BTreeMap<ObjId, Algebra>,
    /// morphism id in `category` -> (source object, target object, underlying q)
    pub triples: BTreeMap<MorId, (ObjId, ObjId, MorId)>,
    /// U^S : algebras -> base
    pub forgetful: Functor,
    /// F^S : base -> algebras, on objects
    pub free: ObjectFunction,
}

impl AlgebraCategory {
    pub fn object_of(&self, alg: &Algebra) -> Result<ObjId> {
        self.algebras
            .iter()
            .find(|(_, a)| *a == alg)
            .map(|(id, _)| id.clone())
            .ok_or_else(|| CheckError::MissingImageAlgebra {
                carrier: alg.carrier.clone(),
            })
    }

    pub fn morphism_of(&self, src: &str, tgt: &str, q: &str) -> Result<MorId> {
        self.triples
            .iter()
            .find(|(_, (s, t, u))| s == src && t == tgt && u == q)
            .map(|(id, _)| id.clone())
            .ok_or_else(|| {
                CheckError::Internal(format!(
                    "algebra morphism ({src} -> {tgt}, {q}) missing from enumerated category"
                ))
            })
    }
}

/// Enumerates every algebra of the monad, brute-forcing extension tables per
/// carrier with the unit law as a per-entry filter, then assembles the
/// category of algebras.
pub fn enumerate_algebras(monad: &ExtensiveMonad, budget: u64) -> Result<AlgebraCategory> {
    let cat = &monad.base;
    let mut algebras: Vec<Algebra> = Vec::new();
    for carrier in cat.objects() {
        // entries: every morphism a into the carrier, in lexicographic order
        let entries: Vec<Morphism> = cat
            .morphisms()
            .filter(|m| &m.tgt == carrier)
            .cloned()
            .collect();
        // candidates per entry, filtered by law i: a^N . eta = a
        let mut choices: Vec<Vec<MorId>> = Vec::with_capacity(entries.len());
        let mut total: u64 = 1;
        let mut feasible = true;
        for a in &entries {
            let cand: Vec<MorId> = cat
                .hom(&monad.s[&a.src], carrier)
                .into_iter()
                .filter(|x| {
                    cat.comp(x, &monad.unit[&a.src])
                        .map(|c| c == a.id)
                        .unwrap_or(false)
                })
                .collect();
            if cand.is_empty() {
                feasible = false;
                break;
            }
            total = total.saturating_mul(cand.len() as u64);
            if total > budget {
                return Err(CheckError::SearchBudgetExceeded(format!(
                    "algebra enumeration on carrier {carrier} passed {budget} candidate tables"
                )));
            }
            choices.push(cand);
        }
        if !feasible {
            continue;
        }
        let mut idx = vec![0usize; entries.len()];
        loop {
            let ext: BTreeMap<MorId, MorId> = entries
                .iter()
                .enumerate()
                .map(|(pos, a)| (a.id.clone(), choices[pos][idx[pos]].clone()))
                .collect();
            let cand = Algebra {
                carrier: carrier.clone(),
                ext,
            };
            if cand.revalidate(monad).is_ok() {
                algebras.push(cand);
            }
            let mut k = entries.len();
            let mut done = false;
            loop {
                if k == 0 {
                    done = true;
                    break;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
            }
            if done {
                break;
            }
        }
    }

    // object names: the carrier when unique, carrier#k otherwise
    let mut per_carrier: BTreeMap<ObjId, usize> = BTreeMap::new();
    for alg in &algebras {
        *per_carrier.entry(alg.carrier.clone()).or_insert(0) += 1;
    }
    let mut seen: BTreeMap<ObjId, usize> = BTreeMap::new();
    let mut named: BTreeMap<ObjId, Algebra> = BTreeMap::new();
    for alg in &algebras {
        let k = seen.entry(alg.carrier.clone()).or_insert(0);
        let name = if per_carrier[&alg.carrier] == 1 {
            alg.carrier.clone()
        } else {
            format!("{}#{}", alg.carrier, k)
        };
        *k += 1;
        named.insert(name, alg.clone());
    }

    // morphisms: every algebra morphism between every ordered pair
    let mut raw_triples: Vec<(ObjId, ObjId, MorId)> = Vec::new();
    for (src_name, src_alg) in &named {
        for (tgt_name, tgt_alg) in &named {
            for q in cat.hom(&src_alg.carrier, &tgt_alg.carrier) {
                if is_algebra_morphism(monad, src_alg, tgt_alg, &q)? {
                    raw_triples.push((src_name.clone(), tgt_name.clone(), q));
                }
            }
        }
    }
    let mut by_q: BTreeMap<MorId, usize> = BTreeMap::new();
    for (_, _, q) in &raw_triples {
        *by_q.entry(q.clone()).or_insert(0) += 1;
    }
    let mut triples: BTreeMap<MorId, (ObjId, ObjId, MorId)> = BTreeMap::new();
    let mut morphisms = Vec::new();
    for (s, t, q) in &raw_triples {
        let id = if by_q[q] == 1 {
            q.clone()
        } else {
            format!("{q}[{s}>{t}]")
        };
        morphisms.push(Morphism {
            id: id.clone(),
            src: s.clone(),
            tgt: t.clone(),
        });
        triples.insert(id, (s.clone(), t.clone(), q.clone()));
    }

    let mut identity = BTreeMap::new();
    for (name, alg) in &named {
        let id_q = cat.identity_of(&alg.carrier)?;
        let id = triples
            .iter()
            .find(|(_, (s, t, q))| s == name && t == name && q == &id_q)
            .map(|(id, _)| id.clone())
            .ok_or_else(|| {
                CheckError::Internal(format!("identity on algebra {name} is not a morphism"))
            })?;
        identity.insert(name.clone(), id);
    }

    let mut compose = BTreeMap::new();
    for (gid, (gs, gt, gq)) in &triples {
        for (fid, (fs, ft, fq)) in &triples {
            if ft != gs {
                continue;
            }
            let q = cat.comp(gq, fq)?;
            let hid = triples
                .iter()
                .find(|(_, (s, t, u))| s == fs && t == gt && u == &q)
                .map(|(id, _)| id.clone())
                .ok_or_else(|| {
                    CheckError::Internal(format!(
                        "composite of algebra morphisms {gid}.{fid} escapes the category"
                    ))
                })?;
            compose.insert((gid.clone(), fid.clone()), hid);
        }
    }

    let category = std::sync::Arc::new(
        FinCategory::validate(named.keys().cloned().collect(), morphisms, identity, compose)
            .map_err(|e| CheckError::Internal(format!("algebra category failed validation: {e}")))?,
    );

    let forgetful = Functor::validate(
        category.clone(),
        cat.clone(),
        named
            .iter()
            .map(|(n, alg)| (n.clone(), alg.carrier.clone()))
            .collect(),
        triples
            .iter()
            .map(|(id, (_, _, q))| (id.clone(), q.clone()))
            .collect(),
    )
    .map_err(|e| CheckError::Internal(format!("forgetful functor failed validation: {e}")))?;

    let mut free_map = BTreeMap::new();
    for a in cat.objects() {
        let alg = Algebra::free(monad, a)?;
        let name = named
            .iter()
            .find(|(_, x)| **x == alg)
            .map(|(n, _)| n.clone())
            .ok_or_else(|| {
                CheckError::Internal(format!("free algebra on {a} missing from enumeration"))
            })?;
        free_map.insert(a.clone(), name);
    }
    let free = ObjectFunction::validate(cat.clone(), category.clone(), free_map)?;

    Ok(AlgebraCategory {
        monad: monad.clone(),
        category,
        algebras: named,
        triples,
        forgetful,
        free,
    })
}

/// A 1-cell (P, (~)^PS) between extension-form monads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EMndMorphism {
    pub source: ExtensiveMonad,
    pub target: ExtensiveMonad,
    pub p: Functor,
    /// (A in the source base, p : D -> P S A) -> p^PSA : T D -> P S A
    pub ext: BTreeMap<(ObjId, MorId), MorId>,
}

impl EMndMorphism {
    pub fn validate(
        source: ExtensiveMonad,
        target: ExtensiveMonad,
        p: Functor,
        ext: BTreeMap<(ObjId, MorId), MorId>,
    ) -> Result<EMndMorphism> {
        if p.source != source.base || p.target != target.base {
            return Err(CheckError::ShapeMismatch(
                "1-cell functor must map base to base".into(),
            ));
        }
        let cell = EMndMorphism {
            source,
            target,
            p,
            ext,
        };
        cell.revalidate()?;
        Ok(cell)
    }

    fn revalidate(&self) -> Result<()> {
        let c = &self.source.base;
        let d = &self.target.base;
        // image algebras (PSA, (~)^PSA) with laws i and ii
        for a in c.objects() {
            let alg = self.image_algebra(a)?;
            alg.revalidate(&self.target).map_err(|e| {
                CheckError::OneCellLaw {
                    law: "i (image algebra)".into(),
                    witness: format!("A={a}"),
                    lhs: e.to_string(),
                    rhs: String::new(),
                }
            })?;
        }
        // P h^SB is an algebra morphism for every h : A -> S B
        for a in c.objects() {
            for b in c.objects() {
                let sb = &self.source.s[b];
                for h in c.hom(a, sb) {
                    let ph = self.p.on_mor(self.source.ext_at(a, b, &h)?)?;
                    for d_obj in d.objects() {
                        let psa = self.p.on_obj(&self.source.s[a])?;
                        for pm in d.hom(d_obj, psa) {
                            let left = self.ext_at(b, &d.comp(ph, &pm)?)?;
                            let right = d.comp(ph, self.ext_at(a, &pm)?)?;
                            if left != &right {
                                return Err(CheckError::OneCellLaw {
                                    law: "ii".into(),
                                    witness: format!("(h={h}, p={pm})"),
                                    lhs: left.clone(),
                                    rhs: right,
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The T-algebra (P S A, (~)^PSA) carved out of the extension table.
    pub fn image_algebra(&self, a: &str) -> Result<Algebra> {
        let d = &self.target.base;
        let psa = self.p.on_obj(self.source.s_of(a)?)?.clone();
        let mut ext = BTreeMap::new();
        for d_obj in d.objects() {
            for pm in d.hom(d_obj, &psa) {
                ext.insert(pm.clone(), self.ext_at(a, &pm)?.clone());
            }
        }
        Ok(Algebra { carrier: psa, ext })
    }

    pub fn ext_at(&self, a: &str, pm: &str) -> Result<&MorId> {
        self.ext
            .get(&(a.to_string(), pm.to_string()))
            .ok_or_else(|| {
                CheckError::ShapeMismatch(format!("no 1-cell extension entry at (A={a}, p={pm})"))
            })
    }

    /// The identity 1-cell (1, (~)^S) on a monad.
    pub fn identity(m: &ExtensiveMonad) -> Result<EMndMorphism> {
        let p = Functor::identity(&m.base);
        let mut ext = BTreeMap::new();
        for a in m.base.objects() {
            let sa = &m.s[a];
            for d_obj in m.base.objects() {
                for pm in m.base.hom(d_obj, sa) {
                    ext.insert((a.clone(), pm.clone()), m.ext_at(d_obj, a, &pm)?.clone());
                }
            }
        }
        EMndMorphism::validate(m.clone(), m.clone(), p, ext)
    }
}

/// Composite 1-cell w2 . w1 with the extension
/// w^WPSA = W (1_PSA)^PSA . [W eta^T PSA . w]^WTPSA.
pub fn compose_one_cells(w2: &EMndMorphism, w1: &EMndMorphism) -> Result<EMndMorphism> {
    if w1.target != w2.source {
        return Err(CheckError::ShapeMismatch(
            "1-cell composition: middle monads differ".into(),
        ));
    }
    let c = &w1.source.base;
    let d = &w1.target.base;
    let x = &w2.target.base;
    let p = compose_functors(&w2.p, &w1.p)?;
    let mut ext = BTreeMap::new();
    for a in c.objects() {
        let psa = w1.p.on_obj(&w1.source.s[a])?.clone();
        let one_psa = d.identity_of(&psa)?;
        let inner = w1.ext_at(a, &one_psa)?; // (1_PSA)^PSA : T PSA -> PSA
        let w_inner = w2.p.on_mor(inner)?.clone(); // W T PSA -> W PSA
        let eta_t = &w1.target.unit[&psa]; // PSA -> T PSA
        let w_eta = w2.p.on_mor(eta_t)?.clone(); // W PSA -> W T PSA
        let wpsa = w2.p.on_obj(&psa)?.clone();
        for x_obj in x.objects() {
            for w_m in x.hom(x_obj, &wpsa) {
                let lifted = x.comp(&w_eta, &w_m)?; // X -> W T PSA
                let extended = w2.ext_at(&psa, &lifted)?; // U X -> W T PSA
                let result = x.comp(&w_inner, extended)?;
                ext.insert((a.clone(), w_m), result);
            }
        }
    }
    EMndMorphism::validate(w1.source.clone(), w2.target.clone(), p, ext)
        .map_err(|e| CheckError::Internal(format!("composite 1-cell failed validation: {e}")))
}

/// A 2-cell: a natural transformation whose component at each S A is a
/// morphism of target-monad algebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EMndTwoCell {
    pub source: EMndMorphism,
    pub target: EMndMorphism,
    pub theta: NatTrans,
}

impl EMndTwoCell {
    pub fn validate(source: EMndMorphism, target: EMndMorphism, theta: NatTrans) -> Result<EMndTwoCell> {
        if source.source != target.source || source.target != target.target {
            return Err(CheckError::ShapeMismatch(
                "2-cell between 1-cells with different endpoints".into(),
            ));
        }
        if theta.source != source.p || theta.target != target.p {
            return Err(CheckError::ShapeMismatch("theta must run P -> Q".into()));
        }
        theta.revalidate()?;
        let monad = &source.target;
        for a in source.source.base.objects() {
            let sa = &source.source.s[a];
            let comp = theta.at(sa)?;
            let src_alg = source.image_algebra(a)?;
            let tgt_alg = target.image_algebra(a)?;
            if !is_algebra_morphism(monad, &src_alg, &tgt_alg, comp)? {
                return Err(CheckError::MorphismLaw {
                    q: comp.clone(),
                    witness: format!("theta at S{a}"),
                    lhs: "not an algebra morphism".into(),
                    rhs: String::new(),
                });
            }
        }
        Ok(EMndTwoCell {
            source,
            target,
            theta,
        })
    }

    pub fn identity(m: &EMndMorphism) -> Result<EMndTwoCell> {
        EMndTwoCell::validate(m.clone(), m.clone(), NatTrans::identity(&m.p)?)
    }
}

/// Vertical composite: ordinary composition of the transformations; each
/// component at S A recomposes to an algebra morphism.
pub fn vertical_two_cells(c2: &EMndTwoCell, c1: &EMndTwoCell) -> Result<EMndTwoCell> {
    if c1.target != c2.source {
        return Err(CheckError::ShapeMismatch(
            "vertical composition of 2-cells: middle 1-cells differ".into(),
        ));
    }
    EMndTwoCell::validate(
        c1.source.clone(),
        c2.target.clone(),
        vertical(&c2.theta, &c1.theta)?,
    )
    .map_err(|e| CheckError::Internal(format!("vertical composite failed validation: {e}")))
}

/// Pull-forward whiskering W theta.
pub fn whisker_forward(w: &EMndMorphism, c: &EMndTwoCell) -> Result<EMndTwoCell> {
    if c.source.target != w.source {
        return Err(CheckError::ShapeMismatch(
            "forward whiskering: 1-cell does not start where the 2-cell ends".into(),
        ));
    }
    EMndTwoCell::validate(
        compose_one_cells(w, &c.source)?,
        compose_one_cells(w, &c.target)?,
        whisker_left(&w.p, &c.theta)?,
    )
    .map_err(|e| CheckError::Internal(format!("forward whiskering failed validation: {e}")))
}

/// Pull-back whiskering xi Q.
pub fn whisker_back(c: &EMndTwoCell, w: &EMndMorphism) -> Result<EMndTwoCell> {
    if w.target != c.source.source {
        return Err(CheckError::ShapeMismatch(
            "backward whiskering: 1-cell does not end where the 2-cell starts".into(),
        ));
    }
    EMndTwoCell::validate(
        compose_one_cells(&c.source, w)?,
        compose_one_cells(&c.target, w)?,
        whisker_right(&c.theta, &w.p)?,
    )
    .map_err(|e| CheckError::Internal(format!("backward whiskering failed validation: {e}")))
}

/// Horizontal composite xi * theta = xi Q o W theta; the other evaluation
/// order K theta o xi P must agree.
pub fn horizontal_two_cells(c2: &EMndTwoCell, c1: &EMndTwoCell) -> Result<EMndTwoCell> {
    let one = vertical_two_cells(&whisker_back(c2, &c1.target)?, &whisker_forward(&c2.source, c1)?)?;
    let two = vertical_two_cells(&whisker_forward(&c2.target, c1)?, &whisker_back(c2, &c1.source)?)?;
    if one != two {
        return Err(CheckError::Internal(
            "horizontal composite disagrees between whiskering orders".into(),
        ));
    }
    Ok(one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn identity_monad_on_chain3_validates() {
        let m = ExtensiveMonad::identity(&fixtures::chain3()).unwrap();
        assert_eq!(m.ext.len(), 6); // one entry per (A, B, h), thin homs
    }

    #[test]
    fn clo2_validates_and_redirected_ext_is_rejected() {
        let m = fixtures::clo2();
        // redirect ext(0, 0, 0->1) at the identity entry of the wrong
        // object; in a thin category this is caught as an ill-typed cell
        let mut ext = m.ext.clone();
        ext.insert(("0".into(), "0".into(), "0→1".into()), "2→2".into());
        let err =
            ExtensiveMonad::validate(m.base.clone(), m.s.clone(), m.unit.clone(), ext).unwrap_err();
        assert!(matches!(err, CheckError::MalformedCategory(_)));
    }

    #[test]
    fn law_b_violation_shows_the_witness() {
        // the two-element group has a parallel pair, so a wrong but
        // well-typed extension entry exists: send s to the identity
        let z2 = fixtures::z2();
        let m = ExtensiveMonad::identity(&z2).unwrap();
        let mut ext = m.ext.clone();
        ext.insert(("m".into(), "m".into(), "s".into()), "e".into());
        let err =
            ExtensiveMonad::validate(m.base.clone(), m.s.clone(), m.unit.clone(), ext).unwrap_err();
        match err {
            CheckError::LawB { h, .. } => assert_eq!(h, "s"),
            other => panic!("expected LawB, got {other:?}"),
        }
    }

    #[test]
    fn law_a_violation_shows_the_witness() {
        let z2 = fixtures::z2();
        let m = ExtensiveMonad::identity(&z2).unwrap();
        let mut ext = m.ext.clone();
        ext.insert(("m".into(), "m".into(), "e".into()), "s".into());
        let err =
            ExtensiveMonad::validate(m.base.clone(), m.s.clone(), m.unit.clone(), ext).unwrap_err();
        match err {
            CheckError::LawA { a, got, .. } => {
                assert_eq!(a, "m");
                assert_eq!(got, "s");
            }
            other => panic!("expected LawA, got {other:?}"),
        }
    }

    #[test]
    fn zero_budget_trips_the_guard() {
        let err = enumerate_algebras(&fixtures::clo2(), 0).unwrap_err();
        assert!(matches!(err, CheckError::SearchBudgetExceeded(_)));
    }

    #[test]
    fn div6_closure_algebras_form_the_divisor_chain() {
        let m = fixtures::div6_closure();
        let ac = enumerate_algebras(&m, DEFAULT_BUDGET).unwrap();
        assert_eq!(ac.category.objects(), &["2", "6"]);
    }

    #[test]
    fn clo2_algebras_are_the_fixed_points() {
        let m = fixtures::clo2();
        let ac = enumerate_algebras(&m, DEFAULT_BUDGET).unwrap();
        let carriers: Vec<&str> = ac.algebras.values().map(|a| a.carrier.as_str()).collect();
        assert_eq!(carriers, vec!["1", "2"]);
        assert_eq!(ac.category.objects().len(), 2);
        assert_eq!(ac.category.morphism_ids().count(), 3); // the 2-chain 1 <= 2
        // free algebra on 0 has carrier c(0) = 1
        assert_eq!(ac.algebras[ac.free.apply("0").unwrap()].carrier, "1");
    }

    #[test]
    fn identity_monad_on_one_has_one_algebra() {
        let m = ExtensiveMonad::identity(&fixtures::one()).unwrap();
        let ac = enumerate_algebras(&m, DEFAULT_BUDGET).unwrap();
        assert_eq!(ac.category.objects().len(), 1);
        assert_eq!(ac.category.morphism_ids().count(), 1);
    }

    #[test]
    fn identity_one_cell_is_unit_for_composition() {
        let m = fixtures::clo2();
        let id = EMndMorphism::identity(&m).unwrap();
        let w = fixtures::clo_two_up_inclusion();
        assert_eq!(compose_one_cells(&id, &w).unwrap(), w);
        let id_src = EMndMorphism::identity(&w.source).unwrap();
        assert_eq!(compose_one_cells(&w, &id_src).unwrap(), w);
    }

    #[test]
    fn one_cell_composition_is_associative_on_fixtures() {
        let w = fixtures::clo_two_up_inclusion();
        let id1 = EMndMorphism::identity(&w.source).unwrap();
        let id2 = EMndMorphism::identity(&w.target).unwrap();
        let left = compose_one_cells(&compose_one_cells(&id2, &w).unwrap(), &id1).unwrap();
        let right = compose_one_cells(&id2, &compose_one_cells(&w, &id1).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn composite_ext_is_the_direct_transport_on_posets() {
        // both sides of the composition formula are the unique <=-witness
        let w = fixtures::clo_two_up_inclusion();
        let id2 = EMndMorphism::identity(&w.target).unwrap();
        let comp = compose_one_cells(&id2, &w).unwrap();
        for ((a, pm), x) in &comp.ext {
            let d = &comp.target.base;
            let psa = comp.p.on_obj(&comp.source.s[a]).unwrap();
            let td = comp.target.s[d.src(pm).unwrap()].clone();
            let expect = d.hom(&td, psa);
            assert_eq!(expect.len(), 1, "poset transport must be unique");
            assert_eq!(x, &expect[0]);
        }
    }

    #[test]
    fn two_cell_vertical_and_horizontal() {
        let cell = fixtures::clo_theta_cell();
        let idc = EMndTwoCell::identity(&cell.source).unwrap();
        let v = vertical_two_cells(&cell, &idc).unwrap();
        assert_eq!(v, cell);

        let id_w = EMndMorphism::identity(&cell.source.target).unwrap();
        let ic = EMndTwoCell::identity(&id_w).unwrap();
        let h = horizontal_two_cells(&ic, &cell).unwrap();
        // xi * theta = xi Q o W theta, here with xi an identity cell
        assert_eq!(h.theta.components, whisker_left(&id_w.p, &cell.theta).unwrap().components);
    }

    #[test]
    fn horizontal_composite_of_two_proper_cells() {
        // theta : inclusion -> shift over (CloTwoUp, Clo2), xi : identity
        // -> closure endofunctor over (Clo2, Clo2); both cells move
        let theta = fixtures::clo_theta_cell();
        let xi = fixtures::clo_unit_cell();
        let h = horizontal_two_cells(&xi, &theta).unwrap();
        // component at 0: xi(Q 0) . theta 0 = (1 -> 1) . (0 -> 1)
        assert_eq!(h.theta.at("0").unwrap(), "0→1");
        assert_eq!(h.theta.at("2").unwrap(), "2→2");
        assert_eq!(h.source, compose_one_cells(&xi.source, &theta.source).unwrap());
        assert_eq!(h.target, compose_one_cells(&xi.target, &theta.target).unwrap());
    }

    #[test]
    fn middle_four_exchange_on_closure_cells() {
        // inner chain: inclusion -> shift -> constant-2 over
        // (CloTwoUp, Clo2); outer chain: identity -> closure endofunctor
        // -> top shift over (Clo2, Clo2); every cell moves
        let theta = fixtures::clo_theta_cell();
        let const2 = fixtures::poset_one_cell(
            &theta.source.source,
            &theta.source.target,
            fixtures::poset_functor(&fixtures::two(), &fixtures::chain3(), |_| "2".to_string())
                .unwrap(),
        )
        .unwrap();
        let theta_p = {
            let comps = [("0", "1→2"), ("2", "2→2")]
                .into_iter()
                .map(|(a, m)| (a.to_string(), m.to_string()))
                .collect();
            let t = NatTrans::validate(theta.target.p.clone(), const2.p.clone(), comps).unwrap();
            EMndTwoCell::validate(theta.target.clone(), const2, t).unwrap()
        };

        let xi = fixtures::clo_unit_cell();
        let up = fixtures::poset_one_cell(
            &xi.source.source,
            &xi.source.target,
            fixtures::poset_functor(&fixtures::chain3(), &fixtures::chain3(), |a| {
                if a == "0" { "1" } else { "2" }.to_string()
            })
            .unwrap(),
        )
        .unwrap();
        let xi_p = {
            let comps = [("0", "1→1"), ("1", "1→2"), ("2", "2→2")]
                .into_iter()
                .map(|(a, m)| (a.to_string(), m.to_string()))
                .collect();
            let t = NatTrans::validate(xi.target.p.clone(), up.p.clone(), comps).unwrap();
            EMndTwoCell::validate(xi.target.clone(), up, t).unwrap()
        };

        let lhs = horizontal_two_cells(
            &vertical_two_cells(&xi_p, &xi).unwrap(),
            &vertical_two_cells(&theta_p, &theta).unwrap(),
        )
        .unwrap();
        let rhs = vertical_two_cells(
            &horizontal_two_cells(&xi_p, &theta_p).unwrap(),
            &horizontal_two_cells(&xi, &theta).unwrap(),
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn whiskering_by_identity_cells_changes_nothing() {
        let cell = fixtures::clo_theta_cell();
        let id_src = EMndMorphism::identity(&cell.source.source).unwrap();
        assert_eq!(whisker_back(&cell, &id_src).unwrap(), cell);
        let id_tgt = EMndMorphism::identity(&cell.source.target).unwrap();
        assert_eq!(whisker_forward(&id_tgt, &cell).unwrap(), cell);
    }
}
