//! The named registry of parsed entities and the line-oriented spec-file
//! grammar.  Directives are unordered: blocks are collected first, then
//! resolved kind by kind (categories, functors, transformations, 0-cells,
//! 1-cells, 2-cells), so forward references work.  Duplicate definitions
//! are errors.

use catcheck::classical::{Adjunction, ClassicalMonad};
use catcheck::emnd::{Algebra, EMndMorphism, EMndTwoCell, ExtensiveMonad};
use catcheck::error::CheckError;
use catcheck::fincat::{Cat, FinCategory, Functor, MorId, Morphism, NatTrans, ObjId, ObjectFunction};
use catcheck::uarr::{UArrMorphism, UArrTwoCell, UniversalArrow};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum WsError {
    #[error("parse error at {file}:{line}: {msg}")]
    Parse {
        file: String,
        line: usize,
        msg: String,
    },
    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },
    #[error("duplicate {kind} '{name}'")]
    Duplicate { kind: &'static str, name: String },
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type WsResult<T> = Result<T, WsError>;

/// Every named entity parsed so far; names are unique per kind and all
/// cross-references resolve at build time.
#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub categories: BTreeMap<String, Cat>,
    pub functors: BTreeMap<String, Functor>,
    pub nats: BTreeMap<String, NatTrans>,
    pub arrows: BTreeMap<String, UniversalArrow>,
    pub umorphisms: BTreeMap<String, UArrMorphism>,
    pub ucells: BTreeMap<String, UArrTwoCell>,
    pub emonads: BTreeMap<String, ExtensiveMonad>,
    pub algebras: BTreeMap<String, (String, Algebra)>,
    pub emorphisms: BTreeMap<String, EMndMorphism>,
    pub ecells: BTreeMap<String, EMndTwoCell>,
    pub cmonads: BTreeMap<String, ClassicalMonad>,
    pub adjunctions: BTreeMap<String, Adjunction>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum BlockKind {
    Category,
    Functor,
    Nat,
    UArrow,
    UMorphism,
    UCell,
    EMonad,
    Algebra,
    EMorphism,
    ECell,
    CMonad,
    Adjunction,
}

impl BlockKind {
    fn word(self) -> &'static str {
        match self {
            BlockKind::Category => "category",
            BlockKind::Functor => "functor",
            BlockKind::Nat => "nat",
            BlockKind::UArrow => "uarrow",
            BlockKind::UMorphism => "umorphism",
            BlockKind::UCell => "ucell",
            BlockKind::EMonad => "emonad",
            BlockKind::Algebra => "algebra",
            BlockKind::EMorphism => "emorphism",
            BlockKind::ECell => "ecell",
            BlockKind::CMonad => "cmonad",
            BlockKind::Adjunction => "adjunction",
        }
    }
}

const BUILD_ORDER: [BlockKind; 12] = [
    BlockKind::Category,
    BlockKind::Functor,
    BlockKind::Nat,
    BlockKind::UArrow,
    BlockKind::EMonad,
    BlockKind::CMonad,
    BlockKind::Adjunction,
    BlockKind::Algebra,
    BlockKind::UMorphism,
    BlockKind::EMorphism,
    BlockKind::UCell,
    BlockKind::ECell,
];

#[derive(Debug, Clone)]
struct Block {
    kind: BlockKind,
    name: String,
    header: Vec<String>,
    file: String,
    line: usize,
    directives: Vec<(usize, Vec<String>)>,
}

fn tokenize(line: &str) -> Vec<String> {
    let body = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    body.split_whitespace().map(|s| s.to_string()).collect()
}

fn split_blocks(file: &str, text: &str) -> WsResult<Vec<Block>> {
    let mut blocks: Vec<Block> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks = tokenize(raw);
        if toks.is_empty() {
            continue;
        }
        let kind = match toks[0].as_str() {
            "category" => Some(BlockKind::Category),
            "functor" => Some(BlockKind::Functor),
            "nat" => Some(BlockKind::Nat),
            "uarrow" => Some(BlockKind::UArrow),
            "umorphism" => Some(BlockKind::UMorphism),
            "ucell" => Some(BlockKind::UCell),
            "emonad" => Some(BlockKind::EMonad),
            "algebra" => Some(BlockKind::Algebra),
            "emorphism" => Some(BlockKind::EMorphism),
            "ecell" => Some(BlockKind::ECell),
            "cmonad" => Some(BlockKind::CMonad),
            "adjunction" => Some(BlockKind::Adjunction),
            _ => None,
        };
        if let Some(kind) = kind {
            if toks.len() < 2 {
                return Err(WsError::Parse {
                    file: file.into(),
                    line,
                    msg: format!("'{}' needs a name", toks[0]),
                });
            }
            blocks.push(Block {
                kind,
                name: toks[1].clone(),
                header: toks[2..].to_vec(),
                file: file.into(),
                line,
                directives: Vec::new(),
            });
        } else {
            match blocks.last_mut() {
                Some(b) => b.directives.push((line, toks)),
                None => {
                    return Err(WsError::Parse {
                        file: file.into(),
                        line,
                        msg: format!("directive '{}' outside any block", toks[0]),
                    })
                }
            }
        }
    }
    Ok(blocks)
}

impl Workspace {
    pub fn new() -> Workspace {
        Workspace::default()
    }

    pub fn load_file(&mut self, path: &str) -> WsResult<()> {
        let text = std::fs::read_to_string(path).map_err(|source| WsError::Io {
            path: path.to_string(),
            source,
        })?;
        self.load_str(path, &text)
    }

    /// Parses one spec text and registers everything in it; the first
    /// failing entity aborts the load.  Kinds are resolved in stratified
    /// order, so references may point forward in the file.
    pub fn load_str(&mut self, file: &str, text: &str) -> WsResult<()> {
        let blocks = split_blocks(file, text)?;
        for kind in BUILD_ORDER {
            for b in blocks.iter().filter(|b| b.kind == kind) {
                self.build_block(b)?;
            }
        }
        Ok(())
    }

    /// Like `load_str`, but collects per-entity validation failures instead
    /// of aborting on them, so a validation suite can report every broken
    /// entity.  Syntax errors and duplicates still abort.
    pub fn load_str_lenient(
        &mut self,
        file: &str,
        text: &str,
    ) -> WsResult<Vec<(String, WsError)>> {
        let blocks = split_blocks(file, text)?;
        let mut failures = Vec::new();
        for kind in BUILD_ORDER {
            for b in blocks.iter().filter(|b| b.kind == kind) {
                if let Err(e) = self.build_block(b) {
                    match e {
                        WsError::Parse { .. } | WsError::Duplicate { .. } | WsError::Io { .. } => {
                            return Err(e)
                        }
                        other => failures.push((format!("{}.{}", b.kind.word(), b.name), other)),
                    }
                }
            }
        }
        Ok(failures)
    }

    pub fn load_file_lenient(&mut self, path: &str) -> WsResult<Vec<(String, WsError)>> {
        let text = std::fs::read_to_string(path).map_err(|source| WsError::Io {
            path: path.to_string(),
            source,
        })?;
        self.load_str_lenient(path, &text)
    }

    fn err(&self, b: &Block, line: usize, msg: impl Into<String>) -> WsError {
        WsError::Parse {
            file: b.file.clone(),
            line,
            msg: msg.into(),
        }
    }

    fn category(&self, name: &str) -> WsResult<&Cat> {
        self.categories.get(name).ok_or_else(|| WsError::Unknown {
            kind: "category",
            name: name.into(),
        })
    }

    fn functor(&self, name: &str) -> WsResult<&Functor> {
        self.functors.get(name).ok_or_else(|| WsError::Unknown {
            kind: "functor",
            name: name.into(),
        })
    }

    /// The registered name of a category, looked up structurally.
    pub fn category_name(&self, cat: &Cat) -> Option<&str> {
        self.categories
            .iter()
            .find(|(_, c)| *c == cat)
            .map(|(n, _)| n.as_str())
    }

    fn build_block(&mut self, b: &Block) -> WsResult<()> {
        match b.kind {
            BlockKind::Category => self.build_category(b),
            BlockKind::Functor => self.build_functor(b),
            BlockKind::Nat => self.build_nat(b),
            BlockKind::UArrow => self.build_uarrow(b),
            BlockKind::UMorphism => self.build_umorphism(b),
            BlockKind::UCell => self.build_ucell(b),
            BlockKind::EMonad => self.build_emonad(b),
            BlockKind::Algebra => self.build_algebra(b),
            BlockKind::EMorphism => self.build_emorphism(b),
            BlockKind::ECell => self.build_ecell(b),
            BlockKind::CMonad => self.build_cmonad(b),
            BlockKind::Adjunction => self.build_adjunction(b),
        }
    }

    fn build_category(&mut self, b: &Block) -> WsResult<()> {
        if self.categories.contains_key(&b.name) {
            return Err(WsError::Duplicate {
                kind: "category",
                name: b.name.clone(),
            });
        }
        let mut objects: Vec<ObjId> = Vec::new();
        let mut morphisms: Vec<Morphism> = Vec::new();
        let mut identity: BTreeMap<ObjId, MorId> = BTreeMap::new();
        let mut compose: BTreeMap<(MorId, MorId), MorId> = BTreeMap::new();
        for (line, toks) in &b.directives {
            match toks[0].as_str() {
                // object <id>
                "object" if toks.len() == 2 => {
                    if objects.contains(&toks[1]) {
                        return Err(self.err(b, *line, format!("duplicate object {}", toks[1])));
                    }
                    objects.push(toks[1].clone());
                }
                // morphism <id> : <src> -> <tgt>
                "morphism" if toks.len() == 6 && toks[2] == ":" && toks[4] == "->" => {
                    if morphisms.iter().any(|m| m.id == toks[1]) {
                        return Err(self.err(b, *line, format!("duplicate morphism {}", toks[1])));
                    }
                    morphisms.push(Morphism {
                        id: toks[1].clone(),
                        src: toks[3].clone(),
                        tgt: toks[5].clone(),
                    });
                }
                // identity <obj> = <id>
                "identity" if toks.len() == 4 && toks[2] == "=" => {
                    if identity.insert(toks[1].clone(), toks[3].clone()).is_some() {
                        return Err(self.err(b, *line, format!("duplicate identity for {}", toks[1])));
                    }
                }
                // compose <g> . <f> = <h>
                "compose" if toks.len() == 6 && toks[2] == "." && toks[4] == "=" => {
                    let key = (toks[1].clone(), toks[3].clone());
                    if compose.insert(key, toks[5].clone()).is_some() {
                        return Err(self.err(
                            b,
                            *line,
                            format!("duplicate compose entry {} . {}", toks[1], toks[3]),
                        ));
                    }
                }
                other => {
                    return Err(self.err(b, *line, format!("bad category directive '{other}'")))
                }
            }
        }
        let cat = FinCategory::validate(objects, morphisms, identity, compose)?;
        self.categories.insert(b.name.clone(), Arc::new(cat));
        Ok(())
    }

    fn build_functor(&mut self, b: &Block) -> WsResult<()> {
        if self.functors.contains_key(&b.name) {
            return Err(WsError::Duplicate {
                kind: "functor",
                name: b.name.clone(),
            });
        }
        // header: : <C> -> <D>
        if b.header.len() != 4 || b.header[0] != ":" || b.header[2] != "->" {
            return Err(self.err(b, b.line, "expected 'functor <name> : <C> -> <D>'"));
        }
        let source = self.category(&b.header[1])?.clone();
        let target = self.category(&b.header[3])?.clone();
        let mut object_map = BTreeMap::new();
        let mut morphism_map = BTreeMap::new();
        for (line, toks) in &b.directives {
            match toks[0].as_str() {
                "on-object" if toks.len() == 4 && toks[2] == "=>" => {
                    if object_map.insert(toks[1].clone(), toks[3].clone()).is_some() {
                        return Err(self.err(b, *line, format!("duplicate on-object {}", toks[1])));
                    }
                }
                "on-morphism" if toks.len() == 4 && toks[2] == "=>" => {
                    if morphism_map.insert(toks[1].clone(), toks[3].clone()).is_some() {
                        return Err(self.err(b, *line, format!("duplicate on-morphism {}", toks[1])));
                    }
                }
                other => return Err(self.err(b, *line, format!("bad functor directive '{other}'"))),
            }
        }
        let f = Functor::validate(source, target, object_map, morphism_map)?;
        self.functors.insert(b.name.clone(), f);
        Ok(())
    }

    fn build_nat(&mut self, b: &Block) -> WsResult<()> {
        if self.nats.contains_key(&b.name) {
            return Err(WsError::Duplicate {
                kind: "nat",
                name: b.name.clone(),
            });
        }
        if b.header.len() != 4 || b.header[0] != ":" || b.header[2] != "=>" {
            return Err(self.err(b, b.line, "expected 'nat <name> : <F> => <G>'"));
        }
        let f = self.functor(&b.header[1])?.clone();
        let g = self.functor(&b.header[3])?.clone();
        self.ensure_only(b, &["at"])?;
        let components = self.component_lines(b, "at")?;
        let t = NatTrans::validate(f, g, components)?;
        self.nats.insert(b.name.clone(), t);
        Ok(())
    }

    fn component_lines(&self, b: &Block, keyword: &str) -> WsResult<BTreeMap<ObjId, MorId>> {
        let mut out = BTreeMap::new();
        for (line, toks) in &b.directives {
            if toks[0] == keyword {
                if toks.len() != 4 || toks[2] != "=>" {
                    return Err(self.err(b, *line, format!("expected '{keyword} <A> => <m>'")));
                }
                if out.insert(toks[1].clone(), toks[3].clone()).is_some() {
                    return Err(self.err(b, *line, format!("duplicate {keyword} at {}", toks[1])));
                }
            }
        }
        Ok(out)
    }

    fn ensure_only(&self, b: &Block, allowed: &[&str]) -> WsResult<()> {
        for (line, toks) in &b.directives {
            if !allowed.contains(&toks[0].as_str()) {
                return Err(self.err(b, *line, format!("bad directive '{}'", toks[0])));
            }
        }
        Ok(())
    }

    fn build_uarrow(&mut self, b: &Block) -> WsResult<()> {
        if self.arrows.contains_key(&b.name) {
            return Err(WsError::Duplicate {
                kind: "uarrow",
                name: b.name.clone(),
            });
        }
        if b.header.len() != 4 || b.header[0] != ":" || b.header[2] != "|" {
            return Err(self.err(b, b.line, "expected 'uarrow <name> : <C> | <X>'"));
        }
        let base = self.category(&b.header[1])?.clone();
        let upstairs = self.category(&b.header[3])?.clone();
        let mut right: Option<Functor> = None;
        let mut left_map = BTreeMap::new();
        let mut unit = BTreeMap::new();
        for (line, toks) in &b.directives {
            match toks[0].as_str() {
                "right" if toks.len() == 2 => {
                    if right.replace(self.functor(&toks[1])?.clone()).is_some() {
                        return Err(self.err(b, *line, "duplicate right functor"));
                    }
                }
                "left" if toks.len() == 4 && toks[2] == "=>" => {
                    if left_map.insert(toks[1].clone(), toks[3].clone()).is_some() {
                        return Err(self.err(b, *line, format!("duplicate left at {}", toks[1])));
                    }
                }
                "unit" if toks.len() == 4 && toks[2] == "=>" => {
                    if unit.insert(toks[1].clone(), toks[3].clone()).is_some() {
                        return Err(self.err(b, *line, format!("duplicate unit at {}", toks[1])));
                    }
                }
                other => return Err(self.err(b, *line, format!("bad uarrow directive '{other}'"))),
            }
        }
        let right = right.ok_or_else(|| self.err(b, b.line, "uarrow needs a right functor"))?;
        if right.source != upstairs || right.target != base {
            return Err(self.err(b, b.line, "right functor does not match the header"));
        }
        let left = ObjectFunction::validate(base, upstairs, left_map)?;
        let arrow = UniversalArrow::validate(right, left, unit)?;
        self.arrows.insert(b.name.clone(), arrow);
        Ok(())
    }

    fn build_umorphism(&mut self, b: &Block) -> WsResult<()> {
        if self.umorphisms.contains_key(&b.name) {
            return Err(WsError::Duplicate {
                kind: "umorphism",
                name: b.name.clone(),
            });
        }
        if b.header.len() != 4 || b.header[0] != ":" || b.header[2] != "->" {
            return Err(self.err(b, b.line, "expected 'umorphism <name> : <U1> -> <U2>'"));
        }
        let source = self
            .arrows
            .get(&b.header[1])
            .ok_or_else(|| WsError::Unknown {
                kind: "uarrow",
                name: b.header[1].clone(),
            })?
            .clone();
        let target = self
            .arrows
            .get(&b.header[3])
            .ok_or_else(|| WsError::Unknown {
                kind: "uarrow",
                name: b.header[3].clone(),
            })?
            .clone();
        let mut j: Option<Functor> = None;
        let mut v: Option<Functor> = None;
        let mut rho_map = BTreeMap::new();
        for (line, toks) in &b.directives {
            match toks[0].as_str() {
                "J" if toks.len() == 2 => {
                    j = Some(self.functor(&toks[1])?.clone());
                }
                "V" if toks.len() == 2 => {
                    v = Some(self.functor(&toks[1])?.clone());
                }
                "rho" if toks.len() == 4 && toks[2] == "=>" => {
                    if rho_map.insert(toks[1].clone(), toks[3].clone()).is_some() {
                        return Err(self.err(b, *line, format!("duplicate rho at {}", toks[1])));
                    }
                }
                other => {
                    return Err(self.err(b, *line, format!("bad umorphism directive '{other}'")))
                }
            }
        }
        let j = j.ok_or_else(|| self.err(b, b.line, "umorphism needs J"))?;
        let v = v.ok_or_else(|| self.err(b, b.line, "umorphism needs V"))?;
        let jr = catcheck::fincat::compose_functors(&j, &source.right)?;
        let rv = catcheck::fincat::compose_functors(&target.right, &v)?;
        let rho = NatTrans::validate(jr.clone(), rv.clone(), rho_map)?;
        // rho_inv is never read from file: invert componentwise
        let inv_map = rho
            .components
            .iter()
            .map(|(x, m)| Ok((x.clone(), target.base.inverse_of(m)?)))
            .collect::<Result<BTreeMap<_, _>, CheckError>>()?;
        let rho_inv = NatTrans::validate(rv, jr, inv_map)?;
        let cell = UArrMorphism::validate(source, target, j, v, rho, rho_inv)?;
        self.umorphisms.insert(b.name.clone(), cell);
        Ok(())
    }

    fn build_ucell(&mut self, b: &Block) -> WsResult<()> {
        if self.ucells.contains_key(&b.name) {
            return Err(WsError::Duplicate {
                kind: "ucell",
                name: b.name.clone(),
            });
        }
        if b.header.len() != 4 || b.header[0] != ":" || b.header[2] != "=>" {
            return Err(self.err(b, b.line, "expected 'ucell <name> : <m1> => <m2>'"));
        }
        let source = self
            .umorphisms
            .get(&b.header[1])
            .ok_or_else(|| WsError::Unknown {
                kind: "umorphism",
                name: b.header[1].clone(),
            })?
            .clone();
        let target = self
            .umorphisms
            .get(&b.header[3])
            .ok_or_else(|| WsError::Unknown {
                kind: "umorphism",
                name: b.header[3].clone(),
            })?
            .clone();
        let mut alpha_map = BTreeMap::new();
        let mut beta_map = BTreeMap::new();
        for (line, toks) in &b.directives {
            match toks[0].as_str() {
                "alpha" if toks.len() == 4 && toks[2] == "=>" => {
                    if alpha_map.insert(toks[1].clone(), toks[3].clone()).is_some() {
                        return Err(self.err(b, *line, format!("duplicate alpha at {}", toks[1])));
                    }
                }
                "beta" if toks.len() == 4 && toks[2] == "=>" => {
                    if beta_map.insert(toks[1].clone(), toks[3].clone()).is_some() {
                        return Err(self.err(b, *line, format!("duplicate beta at {}", toks[1])));
                    }
                }
                other => return Err(self.err(b, *line, format!("bad ucell directive '{other}'"))),
            }
        }
        let alpha = NatTrans::validate(source.j.clone(), target.j.clone(), alpha_map)?;
        let beta = NatTrans::validate(source.v.clone(), target.v.clone(), beta_map)?;
        let cell = UArrTwoCell::validate(source, target, alpha, beta)?;
        self.ucells.insert(b.name.clone(), cell);
        Ok(())
    }

    fn build_emonad(&mut self, b: &Block) -> WsResult<()> {
        if self.emonads.contains_key(&b.name) {
            return Err(WsError::Duplicate {
                kind: "emonad",
                name: b.name.clone(),
            });
        }
        if b.header.len() != 2 || b.header[0] != "on" {
            return Err(self.err(b, b.line, "expected 'emonad <name> on <C>'"));
        }
        let base = self.category(&b.header[1])?.clone();
        let mut s = BTreeMap::new();
        let mut unit = BTreeMap::new();
        let mut ext = BTreeMap::new();
        for (line, toks) in &b.directives {
            match toks[0].as_str() {
                "S" if toks.len() == 4 && toks[2] == "=>" => {
                    if s.insert(toks[1].clone(), toks[3].clone()).is_some() {
                        return Err(self.err(b, *line, format!("duplicate S at {}", toks[1])));
                    }
                }
                "unit" if toks.len() == 4 && toks[2] == "=>" => {
                    if unit.insert(toks[1].clone(), toks[3].clone()).is_some() {
                        return Err(self.err(b, *line, format!("duplicate unit at {}", toks[1])));
                    }
                }
                // ext <A>,<B>,<h> => <m>
                "ext" if toks.len() == 4 && toks[2] == "=>" => {
                    let parts: Vec<&str> = toks[1].split(',').collect();
                    if parts.len() != 3 {
                        return Err(self.err(b, *line, "expected 'ext <A>,<B>,<h> => <m>'"));
                    }
                    let key = (
                        parts[0].to_string(),
                        parts[1].to_string(),
                        parts[2].to_string(),
                    );
                    if ext.insert(key, toks[3].clone()).is_some() {
                        return Err(self.err(b, *line, format!("duplicate ext at {}", toks[1])));
                    }
                }
                other => return Err(self.err(b, *line, format!("bad emonad directive '{other}'"))),
            }
        }
        let monad = ExtensiveMonad::validate(base, s, unit, ext)?;
        self.emonads.insert(b.name.clone(), monad);
        Ok(())
    }

    fn build_algebra(&mut self, b: &Block) -> WsResult<()> {
        if self.algebras.contains_key(&b.name) {
            return Err(WsError::Duplicate {
                kind: "algebra",
                name: b.name.clone(),
            });
        }
        if b.header.len() != 4 || b.header[0] != ":" || b.header[2] != "carrier" {
            return Err(self.err(b, b.line, "expected 'algebra <name> : <monad> carrier <N>'"));
        }
        let monad = self
            .emonads
            .get(&b.header[1])
            .ok_or_else(|| WsError::Unknown {
                kind: "emonad",
                name: b.header[1].clone(),
            })?
            .clone();
        let carrier = b.header[3].clone();
        let mut ext = BTreeMap::new();
        for (line, toks) in &b.directives {
            match toks[0].as_str() {
                "ext" if toks.len() == 4 && toks[2] == "=>" => {
                    if ext.insert(toks[1].clone(), toks[3].clone()).is_some() {
                        return Err(self.err(b, *line, format!("duplicate ext at {}", toks[1])));
                    }
                }
                other => return Err(self.err(b, *line, format!("bad algebra directive '{other}'"))),
            }
        }
        let alg = Algebra::validate(&monad, carrier, ext)?;
        self.algebras
            .insert(b.name.clone(), (b.header[1].clone(), alg));
        Ok(())
    }

    fn build_emorphism(&mut self, b: &Block) -> WsResult<()> {
        if self.emorphisms.contains_key(&b.name) {
            return Err(WsError::Duplicate {
                kind: "emorphism",
                name: b.name.clone(),
            });
        }
        if b.header.len() != 4 || b.header[0] != ":" || b.header[2] != "->" {
            return Err(self.err(b, b.line, "expected 'emorphism <name> : <M1> -> <M2>'"));
        }
        let source = self
            .emonads
            .get(&b.header[1])
            .ok_or_else(|| WsError::Unknown {
                kind: "emonad",
                name: b.header[1].clone(),
            })?
            .clone();
        let target = self
            .emonads
            .get(&b.header[3])
            .ok_or_else(|| WsError::Unknown {
                kind: "emonad",
                name: b.header[3].clone(),
            })?
            .clone();
        let mut p: Option<Functor> = None;
        let mut ext = BTreeMap::new();
        for (line, toks) in &b.directives {
            match toks[0].as_str() {
                "P" if toks.len() == 2 => {
                    p = Some(self.functor(&toks[1])?.clone());
                }
                // ext <A>,<p> => <m>
                "ext" if toks.len() == 4 && toks[2] == "=>" => {
                    let parts: Vec<&str> = toks[1].split(',').collect();
                    if parts.len() != 2 {
                        return Err(self.err(b, *line, "expected 'ext <A>,<p> => <m>'"));
                    }
                    let key = (parts[0].to_string(), parts[1].to_string());
                    if ext.insert(key, toks[3].clone()).is_some() {
                        return Err(self.err(b, *line, format!("duplicate ext at {}", toks[1])));
                    }
                }
                other => {
                    return Err(self.err(b, *line, format!("bad emorphism directive '{other}'")))
                }
            }
        }
        let p = p.ok_or_else(|| self.err(b, b.line, "emorphism needs P"))?;
        let cell = EMndMorphism::validate(source, target, p, ext)?;
        self.emorphisms.insert(b.name.clone(), cell);
        Ok(())
    }

    fn build_ecell(&mut self, b: &Block) -> WsResult<()> {
        if self.ecells.contains_key(&b.name) {
            return Err(WsError::Duplicate {
                kind: "ecell",
                name: b.name.clone(),
            });
        }
        if b.header.len() != 4 || b.header[0] != ":" || b.header[2] != "=>" {
            return Err(self.err(b, b.line, "expected 'ecell <name> : <m1> => <m2>'"));
        }
        let source = self
            .emorphisms
            .get(&b.header[1])
            .ok_or_else(|| WsError::Unknown {
                kind: "emorphism",
                name: b.header[1].clone(),
            })?
            .clone();
        let target = self
            .emorphisms
            .get(&b.header[3])
            .ok_or_else(|| WsError::Unknown {
                kind: "emorphism",
                name: b.header[3].clone(),
            })?
            .clone();
        self.ensure_only(b, &["at"])?;
        let components = self.component_lines(b, "at")?;
        let theta = NatTrans::validate(source.p.clone(), target.p.clone(), components)?;
        let cell = EMndTwoCell::validate(source, target, theta)?;
        self.ecells.insert(b.name.clone(), cell);
        Ok(())
    }

    fn build_cmonad(&mut self, b: &Block) -> WsResult<()> {
        if self.cmonads.contains_key(&b.name) {
            return Err(WsError::Duplicate {
                kind: "cmonad",
                name: b.name.clone(),
            });
        }
        if b.header.len() != 2 || b.header[0] != "on" {
            return Err(self.err(b, b.line, "expected 'cmonad <name> on <C>'"));
        }
        let base = self.category(&b.header[1])?.clone();
        self.ensure_only(b, &["endo", "unit", "mult"])?;
        let mut endo: Option<Functor> = None;
        for (line, toks) in &b.directives {
            if toks[0] == "endo" {
                if toks.len() != 2 {
                    return Err(self.err(b, *line, "expected 'endo <functor>'"));
                }
                endo = Some(self.functor(&toks[1])?.clone());
            }
        }
        let s = endo.ok_or_else(|| self.err(b, b.line, "cmonad needs an endo functor"))?;
        let unit_map = self.component_lines(b, "unit")?;
        let mult_map = self.component_lines(b, "mult")?;
        let unit = NatTrans::validate(Functor::identity(&base), s.clone(), unit_map)?;
        let ss = catcheck::fincat::compose_functors(&s, &s)?;
        let mult = NatTrans::validate(ss, s.clone(), mult_map)?;
        let monad = ClassicalMonad::validate(s, unit, mult)?;
        self.cmonads.insert(b.name.clone(), monad);
        Ok(())
    }

    fn build_adjunction(&mut self, b: &Block) -> WsResult<()> {
        if self.adjunctions.contains_key(&b.name) {
            return Err(WsError::Duplicate {
                kind: "adjunction",
                name: b.name.clone(),
            });
        }
        if b.header.len() != 4 || b.header[0] != ":" || b.header[2] != "|" {
            return Err(self.err(b, b.line, "expected 'adjunction <name> : <C> | <X>'"));
        }
        let base = self.category(&b.header[1])?.clone();
        let upstairs = self.category(&b.header[3])?.clone();
        let mut left: Option<Functor> = None;
        let mut right: Option<Functor> = None;
        for (line, toks) in &b.directives {
            match toks[0].as_str() {
                "left" if toks.len() == 2 => left = Some(self.functor(&toks[1])?.clone()),
                "right" if toks.len() == 2 => right = Some(self.functor(&toks[1])?.clone()),
                "unit" | "counit" => {}
                other => {
                    return Err(self.err(b, *line, format!("bad adjunction directive '{other}'")))
                }
            }
        }
        let left = left.ok_or_else(|| self.err(b, b.line, "adjunction needs a left functor"))?;
        let right = right.ok_or_else(|| self.err(b, b.line, "adjunction needs a right functor"))?;
        let unit_map = self.component_lines(b, "unit")?;
        let counit_map = self.component_lines(b, "counit")?;
        let rl = catcheck::fincat::compose_functors(&right, &left)?;
        let lr = catcheck::fincat::compose_functors(&left, &right)?;
        let unit = NatTrans::validate(Functor::identity(&base), rl, unit_map)?;
        let counit = NatTrans::validate(lr, Functor::identity(&upstairs), counit_map)?;
        let adj = Adjunction::validate(left, right, unit, counit)?;
        self.adjunctions.insert(b.name.clone(), adj);
        Ok(())
    }
}
