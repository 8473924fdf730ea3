//! Object and morphism expression trees with deterministic evaluation.
//!
//! Unmarked isomorphisms in diagrams are `Coh` nodes, resolved by the
//! canonical-coherence synthesizer: both endpoints are normalized to
//! right-associated, unit-free words (⊠-applications and functor images are
//! opaque leaves) and the unique constraint-built isomorphism is evaluated.

use super::{FinMonoidalCategory, MonoidalFunctorData};
use crate::fincat::{MorId, ObjId, PairIndex};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound object generator `{0}`")]
    UnboundObj(String),
    #[error("unbound morphism generator `{0}`")]
    UnboundMor(String),
    #[error("unbound family `{0}`")]
    UnboundFamily(String),
    #[error("family `{name}` has no component at {indices:?}")]
    FamilyIndex { name: String, indices: Vec<ObjId> },
    #[error("no ⊠ functor bound in this context")]
    NoBox,
    #[error("no functor named `{0}` bound in this context")]
    NoFunctor(String),
    #[error("morphisms are not composable at a Comp node")]
    NotComposable,
    #[error("no canonical coherence isomorphism: words {src:?} and {tgt:?} differ")]
    NotCoherent { src: Vec<ObjId>, tgt: Vec<ObjId> },
    #[error("morphism {0} is not invertible")]
    NotInvertible(MorId),
}

/// Object expressions. ⊠ nodes and functor images are opaque for coherence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ObjExpr {
    Gen(String),
    Unit,
    Tensor(Box<ObjExpr>, Box<ObjExpr>),
    /// The opaque binary former ⊠.
    Box2(Box<ObjExpr>, Box<ObjExpr>),
    /// Image under a named functor slot; the inner expression is evaluated
    /// in that functor's source context.
    FApply(String, Box<ObjExpr>),
}

impl ObjExpr {
    pub fn gen(name: &str) -> Self {
        ObjExpr::Gen(name.to_string())
    }
    pub fn tensor(self, rhs: ObjExpr) -> Self {
        ObjExpr::Tensor(Box::new(self), Box::new(rhs))
    }
    pub fn boxed(self, rhs: ObjExpr) -> Self {
        ObjExpr::Box2(Box::new(self), Box::new(rhs))
    }
    pub fn fapply(self, functor: &str) -> Self {
        ObjExpr::FApply(functor.to_string(), Box::new(self))
    }

    /// Right-assoc tensor of a list; empty list is the unit.
    pub fn word(items: Vec<ObjExpr>) -> Self {
        let mut it = items.into_iter().rev();
        let Some(last) = it.next() else { return ObjExpr::Unit };
        it.fold(last, |acc, x| ObjExpr::Tensor(Box::new(x), Box::new(acc)))
    }
}

/// Morphism expressions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum MorExpr {
    Gen(String),
    Id(ObjExpr),
    /// `Comp(g, f)` is g ∘ f.
    Comp(Box<MorExpr>, Box<MorExpr>),
    Tensor(Box<MorExpr>, Box<MorExpr>),
    /// ⊠ applied to a pair of morphisms.
    Box2(Box<MorExpr>, Box<MorExpr>),
    /// φ₂ of ⊠ at `((x1,y1),(x2,y2))`: [x1·y1] ⊗ [x2·y2] → [(x1⊗x2)·(y1⊗y2)].
    BoxTensor { x1: ObjExpr, y1: ObjExpr, x2: ObjExpr, y2: ObjExpr, inv: bool },
    /// φ₀ of ⊠: U → [U·U].
    BoxUnit { inv: bool },
    /// Canonical coherence isomorphism between equal-normal-form objects.
    Coh { src: ObjExpr, tgt: ObjExpr },
    /// Component of a named natural-iso family at the given indices.
    Family { name: String, indices: Vec<ObjExpr>, inv: bool },
    /// Image of a source-context morphism under a named functor slot.
    FMor(String, Box<MorExpr>),
    /// φ₂ of a named functor at source objects (a, b): F(a)⊗F(b) → F(a⊗b).
    FTensor { f: String, a: ObjExpr, b: ObjExpr, inv: bool },
    /// φ₀ of a named functor: U' → F(U).
    FUnit { f: String, inv: bool },
    /// Inverse of an (evaluated) isomorphism.
    Inv(Box<MorExpr>),
}

impl MorExpr {
    pub fn gen(name: &str) -> Self {
        MorExpr::Gen(name.to_string())
    }
    pub fn id(o: ObjExpr) -> Self {
        MorExpr::Id(o)
    }
    pub fn comp(g: MorExpr, f: MorExpr) -> Self {
        MorExpr::Comp(Box::new(g), Box::new(f))
    }
    pub fn tensor(f: MorExpr, g: MorExpr) -> Self {
        MorExpr::Tensor(Box::new(f), Box::new(g))
    }
    pub fn boxed(f: MorExpr, g: MorExpr) -> Self {
        MorExpr::Box2(Box::new(f), Box::new(g))
    }
    pub fn coh(src: ObjExpr, tgt: ObjExpr) -> Self {
        MorExpr::Coh { src, tgt }
    }
    pub fn family(name: &str, indices: Vec<ObjExpr>) -> Self {
        MorExpr::Family { name: name.to_string(), indices, inv: false }
    }
    pub fn family_inv(name: &str, indices: Vec<ObjExpr>) -> Self {
        MorExpr::Family { name: name.to_string(), indices, inv: true }
    }
    pub fn inv(f: MorExpr) -> Self {
        MorExpr::Inv(Box::new(f))
    }
    pub fn fmor(functor: &str, f: MorExpr) -> Self {
        MorExpr::FMor(functor.to_string(), Box::new(f))
    }
    pub fn ftensor(functor: &str, a: ObjExpr, b: ObjExpr) -> Self {
        MorExpr::FTensor { f: functor.to_string(), a, b, inv: false }
    }
    pub fn ftensor_inv(functor: &str, a: ObjExpr, b: ObjExpr) -> Self {
        MorExpr::FTensor { f: functor.to_string(), a, b, inv: true }
    }

    /// Composite of steps listed first-to-last: `chain([f, g, h]) = h∘g∘f`.
    pub fn chain(steps: Vec<MorExpr>) -> Self {
        let mut it = steps.into_iter();
        let first = it.next().expect("chain of at least one step");
        it.fold(first, |acc, next| MorExpr::comp(next, acc))
    }
}

/// A natural-iso family given as a table over object index tuples. When
/// `index_ctx` names a functor slot, index expressions are evaluated in that
/// functor's source context (for families indexed by source objects).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub arity: usize,
    pub table: BTreeMap<Vec<ObjId>, MorId>,
    pub index_ctx: Option<String>,
}

impl Family {
    pub fn nullary(m: MorId) -> Self {
        let mut table = BTreeMap::new();
        table.insert(vec![], m);
        Family { arity: 0, table, index_ctx: None }
    }
}

/// Boundary signature of a named generator (for the static audit).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSig {
    pub src: ObjExpr,
    pub tgt: ObjExpr,
}

/// Boundary signature of a family; `#0`, `#1`, ... generators are the
/// index placeholders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySig {
    pub arity: usize,
    pub src: ObjExpr,
    pub tgt: ObjExpr,
}

/// Replaces placeholder generators `#i` by the given index expressions.
pub fn substitute(template: &ObjExpr, indices: &[ObjExpr]) -> ObjExpr {
    match template {
        ObjExpr::Gen(name) => {
            if let Some(stripped) = name.strip_prefix('#') {
                let i: usize = stripped.parse().expect("placeholder index");
                indices[i].clone()
            } else {
                template.clone()
            }
        }
        ObjExpr::Unit => ObjExpr::Unit,
        ObjExpr::Tensor(l, r) => {
            ObjExpr::Tensor(Box::new(substitute(l, indices)), Box::new(substitute(r, indices)))
        }
        ObjExpr::Box2(l, r) => {
            ObjExpr::Box2(Box::new(substitute(l, indices)), Box::new(substitute(r, indices)))
        }
        ObjExpr::FApply(f, x) => ObjExpr::FApply(f.clone(), Box::new(substitute(x, indices))),
    }
}

/// Functor binding: the data plus an evaluation context for its source.
#[derive(Clone)]
pub struct FunctorSlot<'a> {
    pub data: &'a MonoidalFunctorData,
    pub src_ctx: Box<DiagramCtx<'a>>,
}

/// Everything needed to evaluate expressions in a concrete carrier.
#[derive(Clone)]
pub struct DiagramCtx<'a> {
    pub cat: &'a FinMonoidalCategory,
    pub objs: BTreeMap<String, ObjId>,
    pub mors: BTreeMap<String, MorId>,
    /// Interprets ⊠ nodes; source must be `product_monoidal(cat, cat)`.
    pub box_fun: Option<&'a MonoidalFunctorData>,
    pub families: BTreeMap<String, Family>,
    pub functors: BTreeMap<String, FunctorSlot<'a>>,
}

impl<'a> DiagramCtx<'a> {
    pub fn new(cat: &'a FinMonoidalCategory) -> Self {
        DiagramCtx {
            cat,
            objs: BTreeMap::new(),
            mors: BTreeMap::new(),
            box_fun: None,
            families: BTreeMap::new(),
            functors: BTreeMap::new(),
        }
    }
    pub fn bind_obj(&mut self, name: &str, o: ObjId) {
        self.objs.insert(name.to_string(), o);
    }
    pub fn bind_mor(&mut self, name: &str, m: MorId) {
        self.mors.insert(name.to_string(), m);
    }
    pub fn bind_family(&mut self, name: &str, f: Family) {
        self.families.insert(name.to_string(), f);
    }
    pub fn bind_functor(&mut self, name: &str, slot: FunctorSlot<'a>) {
        self.functors.insert(name.to_string(), slot);
    }
    fn functor(&self, name: &str) -> Result<&FunctorSlot<'a>, EvalError> {
        self.functors.get(name).ok_or_else(|| EvalError::NoFunctor(name.to_string()))
    }

    fn box_pair_obj(&self) -> PairIndex {
        PairIndex::new(self.cat.num_objects(), self.cat.num_objects())
    }
    fn box_pair_mor(&self) -> PairIndex {
        PairIndex::new(self.cat.num_morphisms(), self.cat.num_morphisms())
    }
}

pub fn eval_obj_expr(e: &ObjExpr, ctx: &DiagramCtx) -> Result<ObjId, EvalError> {
    match e {
        ObjExpr::Gen(name) => {
            ctx.objs.get(name).copied().ok_or_else(|| EvalError::UnboundObj(name.clone()))
        }
        ObjExpr::Unit => Ok(ctx.cat.unit()),
        ObjExpr::Tensor(l, r) => {
            Ok(ctx.cat.tensor_obj(eval_obj_expr(l, ctx)?, eval_obj_expr(r, ctx)?))
        }
        ObjExpr::Box2(l, r) => {
            let b = ctx.box_fun.ok_or(EvalError::NoBox)?;
            let ix = ctx.box_pair_obj();
            Ok(b.on_obj(ix.index(eval_obj_expr(l, ctx)?, eval_obj_expr(r, ctx)?)))
        }
        ObjExpr::FApply(name, x) => {
            let f = ctx.functor(name)?;
            Ok(f.data.on_obj(eval_obj_expr(x, &f.src_ctx)?))
        }
    }
}

/// Evaluated object-expression shape: Unit nodes vanish under normalization,
/// opaque constructors collapse to leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Unit,
    Leaf(ObjId),
    Tensor(Box<Shape>, Box<Shape>),
}

impl Shape {
    /// Leaf for a concrete object; unit-valued objects become Unit nodes so
    /// canonical coherence may strip them.
    pub fn of(o: ObjId, c: &FinMonoidalCategory) -> Self {
        if o == c.unit() {
            Shape::Unit
        } else {
            Shape::Leaf(o)
        }
    }
    pub fn tensor(self, rhs: Shape) -> Self {
        Shape::Tensor(Box::new(self), Box::new(rhs))
    }
    pub fn object(&self, c: &FinMonoidalCategory) -> ObjId {
        match self {
            Shape::Unit => c.unit(),
            Shape::Leaf(o) => *o,
            Shape::Tensor(l, r) => c.tensor_obj(l.object(c), r.object(c)),
        }
    }
}

/// Canonical coherence between concrete shapes (same unit-free leaf word).
pub fn concrete_coherence(
    c: &FinMonoidalCategory,
    src: &Shape,
    tgt: &Shape,
) -> Result<MorId, EvalError> {
    let (ws, fs) = normalize(src, c);
    let (wt, ft) = normalize(tgt, c);
    if ws != wt {
        return Err(EvalError::NotCoherent { src: ws, tgt: wt });
    }
    let ft_inv = c.base().inverse(ft).ok_or(EvalError::NotInvertible(ft))?;
    c.base().compose(ft_inv, fs).map_err(|_| EvalError::NotComposable)
}

fn shape_of(e: &ObjExpr, ctx: &DiagramCtx) -> Result<Shape, EvalError> {
    Ok(match e {
        ObjExpr::Unit => Shape::Unit,
        ObjExpr::Tensor(l, r) => {
            Shape::Tensor(Box::new(shape_of(l, ctx)?), Box::new(shape_of(r, ctx)?))
        }
        ObjExpr::Gen(_) | ObjExpr::Box2(_, _) | ObjExpr::FApply(_, _) => {
            Shape::Leaf(eval_obj_expr(e, ctx)?)
        }
    })
}

fn word_obj(w: &[ObjId], c: &FinMonoidalCategory) -> ObjId {
    match w {
        [] => c.unit(),
        [x] => *x,
        [x, rest @ ..] => c.tensor_obj(*x, word_obj(rest, c)),
    }
}

/// Morphism `rassoc(v) ⊗ rassoc(w) → rassoc(v ++ w)` built from a, l, r.
fn merge_words(v: &[ObjId], w: &[ObjId], c: &FinMonoidalCategory) -> MorId {
    if v.is_empty() {
        return c.lunit(word_obj(w, c));
    }
    if w.is_empty() {
        return c.runit(word_obj(v, c));
    }
    if v.len() == 1 {
        return c.identity(c.tensor_obj(v[0], word_obj(w, c)));
    }
    let head = v[0];
    let tail = &v[1..];
    let step = c.assoc(head, word_obj(tail, c), word_obj(w, c));
    let rest = c.tensor_mor(c.identity(head), merge_words(tail, w, c));
    c.base().compose(rest, step).expect("merge composable")
}

/// Normal-form data: the unit-free leaf word and the evaluated morphism
/// `shape → rassoc(word)`.
fn normalize(s: &Shape, c: &FinMonoidalCategory) -> (Vec<ObjId>, MorId) {
    match s {
        Shape::Unit => (vec![], c.identity(c.unit())),
        Shape::Leaf(o) => (vec![*o], c.identity(*o)),
        Shape::Tensor(l, r) => {
            let (wl, fl) = normalize(l, c);
            let (wr, fr) = normalize(r, c);
            let merged = merge_words(&wl, &wr, c);
            let pre = c.tensor_mor(fl, fr);
            let m = c.base().compose(merged, pre).expect("normalize composable");
            let mut w = wl;
            w.extend(wr);
            (w, m)
        }
    }
}

/// The unique canonical coherence isomorphism between two object expressions
/// with equal normal form, evaluated in the carrier.
pub fn canonical_coherence_iso(
    src: &ObjExpr,
    tgt: &ObjExpr,
    ctx: &DiagramCtx,
) -> Result<MorId, EvalError> {
    let c = ctx.cat;
    let (ws, fs) = normalize(&shape_of(src, ctx)?, c);
    let (wt, ft) = normalize(&shape_of(tgt, ctx)?, c);
    if ws != wt {
        return Err(EvalError::NotCoherent { src: ws, tgt: wt });
    }
    let ft_inv = c.base().inverse(ft).ok_or(EvalError::NotInvertible(ft))?;
    c.base().compose(ft_inv, fs).map_err(|_| EvalError::NotComposable)
}

pub fn eval_morphism_expr(e: &MorExpr, ctx: &DiagramCtx) -> Result<MorId, EvalError> {
    let c = ctx.cat;
    match e {
        MorExpr::Gen(name) => {
            ctx.mors.get(name).copied().ok_or_else(|| EvalError::UnboundMor(name.clone()))
        }
        MorExpr::Id(o) => Ok(c.identity(eval_obj_expr(o, ctx)?)),
        MorExpr::Comp(g, f) => {
            let fm = eval_morphism_expr(f, ctx)?;
            let gm = eval_morphism_expr(g, ctx)?;
            c.base().compose(gm, fm).map_err(|_| EvalError::NotComposable)
        }
        MorExpr::Tensor(f, g) => {
            Ok(c.tensor_mor(eval_morphism_expr(f, ctx)?, eval_morphism_expr(g, ctx)?))
        }
        MorExpr::Box2(f, g) => {
            let b = ctx.box_fun.ok_or(EvalError::NoBox)?;
            let ix = ctx.box_pair_mor();
            Ok(b.on_mor(ix.index(eval_morphism_expr(f, ctx)?, eval_morphism_expr(g, ctx)?)))
        }
        MorExpr::BoxTensor { x1, y1, x2, y2, inv } => {
            let b = ctx.box_fun.ok_or(EvalError::NoBox)?;
            let ix = ctx.box_pair_obj();
            let p1 = ix.index(eval_obj_expr(x1, ctx)?, eval_obj_expr(y1, ctx)?);
            let p2 = ix.index(eval_obj_expr(x2, ctx)?, eval_obj_expr(y2, ctx)?);
            let m = b.phi2(p1, p2);
            if *inv {
                c.base().inverse(m).ok_or(EvalError::NotInvertible(m))
            } else {
                Ok(m)
            }
        }
        MorExpr::BoxUnit { inv } => {
            let b = ctx.box_fun.ok_or(EvalError::NoBox)?;
            let m = b.phi0();
            if *inv {
                c.base().inverse(m).ok_or(EvalError::NotInvertible(m))
            } else {
                Ok(m)
            }
        }
        MorExpr::Coh { src, tgt } => canonical_coherence_iso(src, tgt, ctx),
        MorExpr::Family { name, indices, inv } => {
            let fam =
                ctx.families.get(name).ok_or_else(|| EvalError::UnboundFamily(name.clone()))?;
            let ictx: &DiagramCtx = match &fam.index_ctx {
                None => ctx,
                Some(slot) => &ctx.functor(slot)?.src_ctx,
            };
            let idx = indices
                .iter()
                .map(|ix| eval_obj_expr(ix, ictx))
                .collect::<Result<Vec<_>, _>>()?;
            let m = fam
                .table
                .get(&idx)
                .copied()
                .ok_or_else(|| EvalError::FamilyIndex { name: name.clone(), indices: idx })?;
            if *inv {
                c.base().inverse(m).ok_or(EvalError::NotInvertible(m))
            } else {
                Ok(m)
            }
        }
        MorExpr::FMor(name, f) => {
            let slot = ctx.functor(name)?;
            let inner = eval_morphism_expr(f, &slot.src_ctx)?;
            Ok(slot.data.on_mor(inner))
        }
        MorExpr::FTensor { f: name, a, b, inv } => {
            let slot = ctx.functor(name)?;
            let oa = eval_obj_expr(a, &slot.src_ctx)?;
            let ob = eval_obj_expr(b, &slot.src_ctx)?;
            let m = slot.data.phi2(oa, ob);
            if *inv {
                c.base().inverse(m).ok_or(EvalError::NotInvertible(m))
            } else {
                Ok(m)
            }
        }
        MorExpr::FUnit { f: name, inv } => {
            let slot = ctx.functor(name)?;
            let m = slot.data.phi0();
            if *inv {
                c.base().inverse(m).ok_or(EvalError::NotInvertible(m))
            } else {
                Ok(m)
            }
        }
        MorExpr::Inv(f) => {
            let m = eval_morphism_expr(f, ctx)?;
            c.base().inverse(m).ok_or(EvalError::NotInvertible(m))
        }
    }
}

/// Static boundary inference for the diagram audit. Generators and families
/// are resolved through the supplied signature tables.
pub fn infer_boundaries(
    e: &MorExpr,
    gens: &BTreeMap<String, GenSig>,
    fams: &BTreeMap<String, FamilySig>,
) -> Result<(ObjExpr, ObjExpr), String> {
    match e {
        MorExpr::Gen(name) => gens
            .get(name)
            .map(|s| (s.src.clone(), s.tgt.clone()))
            .ok_or_else(|| format!("no signature for generator `{name}`")),
        MorExpr::Id(o) => Ok((o.clone(), o.clone())),
        MorExpr::Comp(g, f) => {
            let (fs, ft) = infer_boundaries(f, gens, fams)?;
            let (gs, gt) = infer_boundaries(g, gens, fams)?;
            if ft != gs {
                return Err(format!("composition boundary mismatch:\n  after  {ft:?}\n  expect {gs:?}"));
            }
            Ok((fs, gt))
        }
        MorExpr::Tensor(f, g) => {
            let (fs, ft) = infer_boundaries(f, gens, fams)?;
            let (gs, gt) = infer_boundaries(g, gens, fams)?;
            Ok((fs.tensor(gs), ft.tensor(gt)))
        }
        MorExpr::Box2(f, g) => {
            let (fs, ft) = infer_boundaries(f, gens, fams)?;
            let (gs, gt) = infer_boundaries(g, gens, fams)?;
            Ok((fs.boxed(gs), ft.boxed(gt)))
        }
        MorExpr::BoxTensor { x1, y1, x2, y2, inv } => {
            let src = x1.clone().boxed(y1.clone()).tensor(x2.clone().boxed(y2.clone()));
            let tgt = x1.clone().tensor(x2.clone()).boxed(y1.clone().tensor(y2.clone()));
            Ok(if *inv { (tgt, src) } else { (src, tgt) })
        }
        MorExpr::BoxUnit { inv } => {
            let src = ObjExpr::Unit;
            let tgt = ObjExpr::Unit.boxed(ObjExpr::Unit);
            Ok(if *inv { (tgt, src) } else { (src, tgt) })
        }
        MorExpr::Coh { src, tgt } => Ok((src.clone(), tgt.clone())),
        MorExpr::Family { name, indices, inv } => {
            let sig =
                fams.get(name).ok_or_else(|| format!("no signature for family `{name}`"))?;
            if sig.arity != indices.len() {
                return Err(format!("family `{name}` arity mismatch"));
            }
            let src = substitute(&sig.src, indices);
            let tgt = substitute(&sig.tgt, indices);
            Ok(if *inv { (tgt, src) } else { (src, tgt) })
        }
        MorExpr::FMor(name, f) => {
            let (fs, ft) = infer_boundaries(f, gens, fams)?;
            Ok((fs.fapply(name), ft.fapply(name)))
        }
        MorExpr::FTensor { f: name, a, b, inv } => {
            let src = a.clone().fapply(name).tensor(b.clone().fapply(name));
            let tgt = a.clone().tensor(b.clone()).fapply(name);
            Ok(if *inv { (tgt, src) } else { (src, tgt) })
        }
        MorExpr::FUnit { f: name, inv } => {
            let src = ObjExpr::Unit;
            let tgt = ObjExpr::Unit.fapply(name);
            Ok(if *inv { (tgt, src) } else { (src, tgt) })
        }
        MorExpr::Inv(f) => {
            let (fs, ft) = infer_boundaries(f, gens, fams)?;
            Ok((ft, fs))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::FiniteCommutativeMonoid;
    use crate::monoidal::{discrete_monoidal, pointed_cyclic, pointed_phase};

    #[test]
    fn coherence_associator_component() {
        let c = pointed_cyclic(3);
        let mut ctx = DiagramCtx::new(&c);
        ctx.bind_obj("x", 1);
        ctx.bind_obj("y", 2);
        ctx.bind_obj("z", 1);
        let x = ObjExpr::gen("x");
        let y = ObjExpr::gen("y");
        let z = ObjExpr::gen("z");
        let src = x.clone().tensor(y.clone()).tensor(z.clone());
        let tgt = x.clone().tensor(y.clone().tensor(z.clone()));
        let m = canonical_coherence_iso(&src, &tgt, &ctx).unwrap();
        assert_eq!(m, c.assoc(1, 2, 1));
    }

    #[test]
    fn coherence_identity_on_equal_exprs() {
        let c = discrete_monoidal(&FiniteCommutativeMonoid::cyclic(4));
        let mut ctx = DiagramCtx::new(&c);
        ctx.bind_obj("x", 3);
        let x = ObjExpr::gen("x");
        let m = canonical_coherence_iso(&x, &x, &ctx).unwrap();
        assert_eq!(m, c.identity(3));
    }

    #[test]
    fn coherence_rejects_unequal_words() {
        let c = discrete_monoidal(&FiniteCommutativeMonoid::cyclic(4));
        let mut ctx = DiagramCtx::new(&c);
        ctx.bind_obj("x", 1);
        ctx.bind_obj("y", 2);
        let x = ObjExpr::gen("x");
        let y = ObjExpr::gen("y");
        let r = canonical_coherence_iso(&x.clone().tensor(y.clone()), &y.tensor(x), &ctx);
        assert!(matches!(r, Err(EvalError::NotCoherent { .. })));
    }

    #[test]
    fn eval_unitor_composite() {
        // identity(x⊗U) composed with r_x evaluates to r_x
        let c = pointed_cyclic(3);
        let mut ctx = DiagramCtx::new(&c);
        ctx.bind_obj("x", 2);
        ctx.bind_mor("r_x", c.runit(2));
        let x = ObjExpr::gen("x");
        let e = MorExpr::comp(MorExpr::gen("r_x"), MorExpr::id(x.tensor(ObjExpr::Unit)));
        assert_eq!(eval_morphism_expr(&e, &ctx).unwrap(), c.runit(2));
    }

    #[test]
    fn eval_tensor_of_phases() {
        let c = pointed_cyclic(3);
        let mut ctx = DiagramCtx::new(&c);
        ctx.bind_mor("f", pointed_phase(3, 1, 1));
        ctx.bind_mor("g", pointed_phase(3, 2, 2));
        let e = MorExpr::tensor(MorExpr::gen("f"), MorExpr::gen("g"));
        assert_eq!(eval_morphism_expr(&e, &ctx).unwrap(), pointed_phase(3, 0, 0));
    }
}
