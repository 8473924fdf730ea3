//! The doubly degenerate calculus: monoidal categories equipped with a
//! composition functor ⊠, a monoid object, three indexed dual-pair blocks
//! and four structural isomorphisms, all checked against the machine-read
//! diagram library; the multiplication-to-braiding pipeline; functors,
//! transformations, modifications, perturbations; the comparison maps in
//! both directions; and the strictly-restricted sub-2-category.

pub mod diagrams;
pub mod functor;
pub mod instances;

use crate::fincat::{FinFunctor, MorId, ObjId, PairIndex};
use crate::monoidal::{
    concrete_coherence, eval_morphism_expr, product_monoidal, validate_dual_pair, BraidingData,
    DiagramCtx, EvalError, Family, FinMonoidalCategory, MonoidalError, MonoidalFunctorData, Shape,
};
use diagrams::Diagram;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DdError {
    #[error("monoidal error: {0}")]
    Monoidal(#[from] MonoidalError),
    #[error("evaluation error: {0}")]
    Eval(#[from] EvalError),
    #[error("category error: {0}")]
    Cat(#[from] crate::fincat::CatError),
    #[error("{role} has wrong boundary")]
    Boundary { role: &'static str },
    #[error("{role} is not invertible")]
    NotIso { role: &'static str },
    #[error("composition functor is not carried by the componentwise square")]
    BoxCarrier,
    #[error("monoid object law `{law}` fails")]
    MonoidObject { law: &'static str },
    #[error("family `{name}` has wrong dimension")]
    FamilyDimension { name: &'static str },
    #[error("family `{name}` component at {index:?} has wrong boundary")]
    FamilyBoundary { name: &'static str, index: Vec<ObjId> },
    #[error("family `{name}` component at {index:?} is not invertible")]
    FamilyNotIso { name: &'static str, index: Vec<ObjId> },
    #[error("family `{name}` naturality fails at morphisms {mors:?}")]
    FamilyNaturality { name: &'static str, mors: Vec<MorId> },
    #[error("diagram `{id}` fails at index tuple {tuple:?}")]
    Diagram { id: String, tuple: Vec<ObjId> },
    #[error("unsupported block shape: {0} (the verified multiplication assembly requires unit-carrier blocks)")]
    UnsupportedBlockShape(&'static str),
    #[error("multiplication law `{law}` fails at {index:?}")]
    Multiplication { law: &'static str, index: Vec<usize> },
    #[error("derived braiding invalid: {0}")]
    DerivedBraiding(Box<MonoidalError>),
    #[error("restricted membership fails: {0} is not canonical")]
    NotRestricted(&'static str),
    #[error("functor law `{law}` fails at {index:?}")]
    Functor { law: &'static str, index: Vec<usize> },
    #[error("transformation law `{law}` fails at {index:?}")]
    Transformation { law: &'static str, index: Vec<usize> },
}

/// A monoid object in the carrier with a chosen isomorphism to the unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidObjectData {
    pub carrier: ObjId,
    /// I⊗I → I
    pub mult: MorId,
    /// U → I
    pub unit_mor: MorId,
    /// I → U, an isomorphism of monoids
    pub iso_to_unit: MorId,
}

/// A dual pair together with its indexed natural-iso families. The primal
/// family arity is 3 for the associativity block and 1 for the unit blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedDualPairBlock {
    pub pair: crate::monoidal::DualPair,
    pub family: Vec<MorId>,
    pub dual_family: Vec<MorId>,
}

/// The complete doubly degenerate structure on a finite monoidal category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoublyDegenData {
    pub cat: FinMonoidalCategory,
    /// ⊠ as a monoidal functor from the componentwise square.
    pub box_fun: MonoidalFunctorData,
    pub monoid: MonoidObjectData,
    pub block_a: IndexedDualPairBlock,
    pub block_l: IndexedDualPairBlock,
    pub block_r: IndexedDualPairBlock,
    /// (U⊠A)⊗(A⊗(A⊠U)) → A⊗A
    pub pi: MorId,
    /// (U⊠L)⊗(A⊗(R·⊠U)) → U
    pub mu: MorId,
    /// L⊠U → L⊗A
    pub lam: MorId,
    /// U⊠R· → A⊗R·
    pub rho: MorId,
}

impl DoublyDegenData {
    pub fn boxed_obj(&self, x: ObjId, y: ObjId) -> ObjId {
        let ix = PairIndex::new(self.cat.num_objects(), self.cat.num_objects());
        self.box_fun.on_obj(ix.index(x, y))
    }
    pub fn boxed_mor(&self, f: MorId, gm: MorId) -> MorId {
        let ix = PairIndex::new(self.cat.num_morphisms(), self.cat.num_morphisms());
        self.box_fun.on_mor(ix.index(f, gm))
    }

    /// Evaluation context binding every named generator and family of the
    /// base diagram group.
    pub fn ctx(&self) -> DiagramCtx<'_> {
        let mut ctx = DiagramCtx::new(&self.cat);
        ctx.box_fun = Some(&self.box_fun);
        ctx.bind_obj("A", self.block_a.pair.x);
        ctx.bind_obj("Ad", self.block_a.pair.x_dual);
        ctx.bind_obj("L", self.block_l.pair.x);
        ctx.bind_obj("Ld", self.block_l.pair.x_dual);
        ctx.bind_obj("R", self.block_r.pair.x);
        ctx.bind_obj("Rd", self.block_r.pair.x_dual);
        ctx.bind_obj("I", self.monoid.carrier);
        ctx.bind_mor("pi", self.pi);
        ctx.bind_mor("mu", self.mu);
        ctx.bind_mor("lam", self.lam);
        ctx.bind_mor("rho", self.rho);
        ctx.bind_mor("epsA", self.block_a.pair.counit);
        ctx.bind_mor("etaA", self.block_a.pair.unit);
        ctx.bind_mor("epsL", self.block_l.pair.counit);
        ctx.bind_mor("etaL", self.block_l.pair.unit);
        ctx.bind_mor("epsR", self.block_r.pair.counit);
        ctx.bind_mor("etaR", self.block_r.pair.unit);
        ctx.bind_mor("imult", self.monoid.mult);
        ctx.bind_mor("iunit", self.monoid.unit_mor);
        ctx.bind_mor("iiso", self.monoid.iso_to_unit);
        let n = self.cat.num_objects();
        ctx.bind_family("fA", table3(&self.block_a.family, n));
        ctx.bind_family("fAd", table3(&self.block_a.dual_family, n));
        ctx.bind_family("fL", table1(&self.block_l.family));
        ctx.bind_family("fLd", table1(&self.block_l.dual_family));
        ctx.bind_family("fR", table1(&self.block_r.family));
        ctx.bind_family("fRd", table1(&self.block_r.dual_family));
        ctx
    }
}

pub(crate) fn table1(v: &[MorId]) -> Family {
    Family {
        arity: 1,
        table: v.iter().enumerate().map(|(i, &m)| (vec![i], m)).collect(),
        index_ctx: None,
    }
}

pub(crate) fn table2_src(v: &[MorId], n: usize, slot: &str) -> Family {
    Family {
        arity: 2,
        table: v.iter().enumerate().map(|(i, &m)| (vec![i / n, i % n], m)).collect(),
        index_ctx: Some(slot.to_string()),
    }
}

pub(crate) fn table1_src(v: &[MorId], slot: &str) -> Family {
    Family {
        arity: 1,
        table: v.iter().enumerate().map(|(i, &m)| (vec![i], m)).collect(),
        index_ctx: Some(slot.to_string()),
    }
}

pub(crate) fn table3(v: &[MorId], n: usize) -> Family {
    Family {
        arity: 3,
        table: v
            .iter()
            .enumerate()
            .map(|(i, &m)| (vec![i / (n * n), (i / n) % n, i % n], m))
            .collect(),
        index_ctx: None,
    }
}

/// Evaluates a diagram set for every index tuple over the carrier's objects.
pub fn check_diagrams(
    cat: &FinMonoidalCategory,
    ctx: &DiagramCtx,
    diagrams: &[Diagram],
) -> Result<(), DdError> {
    check_diagrams_ranged(cat.num_objects(), ctx, diagrams)
}

/// Like `check_diagrams` with an explicit index range (used when the free
/// indices range over a functor's source objects). Index bindings propagate
/// into every functor slot's source context.
pub fn check_diagrams_ranged(
    n: usize,
    ctx: &DiagramCtx,
    diagrams: &[Diagram],
) -> Result<(), DdError> {
    fn bind_everywhere(ctx: &mut DiagramCtx, name: &str, o: ObjId) {
        ctx.bind_obj(name, o);
        let slots: Vec<String> = ctx.functors.keys().cloned().collect();
        for s in slots {
            if let Some(slot) = ctx.functors.get_mut(&s) {
                bind_everywhere(&mut slot.src_ctx, name, o);
            }
        }
    }
    for d in diagrams {
        let arity = d.indices.len();
        let mut tuple = vec![0usize; arity];
        loop {
            let mut bound = ctx.clone();
            for (name, &o) in d.indices.iter().zip(tuple.iter()) {
                bind_everywhere(&mut bound, name, o);
            }
            let lhs = eval_morphism_expr(&d.lhs, &bound)?;
            let rhs = eval_morphism_expr(&d.rhs, &bound)?;
            if lhs != rhs {
                return Err(DdError::Diagram { id: d.id.clone(), tuple });
            }
            let mut i = 0;
            while i < arity {
                tuple[i] += 1;
                if tuple[i] < n {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
            if arity == 0 || i == arity {
                break;
            }
        }
    }
    Ok(())
}

/// Validates the complete doubly degenerate structure: carrier and ⊠ laws,
/// the monoid object, dual pairs with their families, and every diagram of
/// the base library (block compatibilities plus the three tricategory
/// axioms), for every index tuple.
pub fn validate_dd(data: &DoublyDegenData) -> Result<(), DdError> {
    let c = &data.cat;
    let base = c.base();

    data.box_fun.validate()?;
    if data.box_fun.source != product_monoidal(c, c) || data.box_fun.target != *c {
        return Err(DdError::BoxCarrier);
    }

    // monoid object
    let m = &data.monoid;
    let i_obj = m.carrier;
    if base.source(m.mult) != c.tensor_obj(i_obj, i_obj) || base.target(m.mult) != i_obj {
        return Err(DdError::Boundary { role: "monoid multiplication" });
    }
    if base.source(m.unit_mor) != c.unit() || base.target(m.unit_mor) != i_obj {
        return Err(DdError::Boundary { role: "monoid unit" });
    }
    if base.source(m.iso_to_unit) != i_obj || base.target(m.iso_to_unit) != c.unit() {
        return Err(DdError::Boundary { role: "monoid isomorphism" });
    }
    if !base.is_iso(m.iso_to_unit) {
        return Err(DdError::NotIso { role: "monoid isomorphism" });
    }
    {
        let lhs =
            base.compose(m.mult, c.tensor_mor(m.mult, base.identity(i_obj))).expect("composable");
        let rhs = base
            .compose(
                m.mult,
                base.compose(
                    c.tensor_mor(base.identity(i_obj), m.mult),
                    c.assoc(i_obj, i_obj, i_obj),
                )
                .expect("composable"),
            )
            .expect("composable");
        if lhs != rhs {
            return Err(DdError::MonoidObject { law: "associativity" });
        }
        let lu = base
            .compose(m.mult, c.tensor_mor(m.unit_mor, base.identity(i_obj)))
            .expect("composable");
        if lu != c.lunit(i_obj) {
            return Err(DdError::MonoidObject { law: "left unit" });
        }
        let ru = base
            .compose(m.mult, c.tensor_mor(base.identity(i_obj), m.unit_mor))
            .expect("composable");
        if ru != c.runit(i_obj) {
            return Err(DdError::MonoidObject { law: "right unit" });
        }
        let lhs = base.compose(m.iso_to_unit, m.mult).expect("composable");
        let rhs = base
            .compose(c.lunit(c.unit()), c.tensor_mor(m.iso_to_unit, m.iso_to_unit))
            .expect("composable");
        if lhs != rhs {
            return Err(DdError::MonoidObject { law: "isomorphism vs multiplication" });
        }
        if base.compose(m.iso_to_unit, m.unit_mor).expect("composable") != base.identity(c.unit()) {
            return Err(DdError::MonoidObject { law: "isomorphism vs unit" });
        }
    }

    for blk in [&data.block_a, &data.block_l, &data.block_r] {
        validate_dual_pair(&blk.pair, c)?;
        if !base.is_iso(blk.pair.counit) || !base.is_iso(blk.pair.unit) {
            return Err(DdError::NotIso { role: "dual pair counit/unit" });
        }
    }

    check_family3(data, "fA", &data.block_a.family, true)?;
    check_family3(data, "fAd", &data.block_a.dual_family, false)?;
    check_family1(data, "fL", &data.block_l.family, UnitSide::Left, false)?;
    check_family1(data, "fLd", &data.block_l.dual_family, UnitSide::Left, true)?;
    check_family1(data, "fR", &data.block_r.family, UnitSide::Right, false)?;
    check_family1(data, "fRd", &data.block_r.dual_family, UnitSide::Right, true)?;

    // π, μ, λ, ρ boundaries and invertibility
    let a = data.block_a.pair.x;
    let l = data.block_l.pair.x;
    let rd = data.block_r.pair.x_dual;
    let pi_src =
        c.tensor_obj(data.boxed_obj(c.unit(), a), c.tensor_obj(a, data.boxed_obj(a, c.unit())));
    if base.source(data.pi) != pi_src || base.target(data.pi) != c.tensor_obj(a, a) {
        return Err(DdError::Boundary { role: "pi" });
    }
    let mu_src =
        c.tensor_obj(data.boxed_obj(c.unit(), l), c.tensor_obj(a, data.boxed_obj(rd, c.unit())));
    if base.source(data.mu) != mu_src || base.target(data.mu) != c.unit() {
        return Err(DdError::Boundary { role: "mu" });
    }
    if base.source(data.lam) != data.boxed_obj(l, c.unit())
        || base.target(data.lam) != c.tensor_obj(l, a)
    {
        return Err(DdError::Boundary { role: "lambda" });
    }
    if base.source(data.rho) != data.boxed_obj(c.unit(), rd)
        || base.target(data.rho) != c.tensor_obj(a, rd)
    {
        return Err(DdError::Boundary { role: "rho" });
    }
    for (role, mor) in [("pi", data.pi), ("mu", data.mu), ("lambda", data.lam), ("rho", data.rho)]
    {
        if !base.is_iso(mor) {
            return Err(DdError::NotIso { role });
        }
    }

    check_diagrams(c, &data.ctx(), &diagrams::a1_diagrams())
}

fn check_family3(
    data: &DoublyDegenData,
    name: &'static str,
    table: &[MorId],
    primal: bool,
) -> Result<(), DdError> {
    let c = &data.cat;
    let base = c.base();
    let n = c.num_objects();
    if table.len() != n * n * n {
        return Err(DdError::FamilyDimension { name });
    }
    let carrier = if primal { data.block_a.pair.x } else { data.block_a.pair.x_dual };
    let src_of = |x: ObjId, y: ObjId, z: ObjId| {
        if primal {
            c.tensor_obj(carrier, data.boxed_obj(data.boxed_obj(x, y), z))
        } else {
            c.tensor_obj(carrier, data.boxed_obj(x, data.boxed_obj(y, z)))
        }
    };
    let tgt_of = |x: ObjId, y: ObjId, z: ObjId| {
        if primal {
            c.tensor_obj(data.boxed_obj(x, data.boxed_obj(y, z)), carrier)
        } else {
            c.tensor_obj(data.boxed_obj(data.boxed_obj(x, y), z), carrier)
        }
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mor = table[(x * n + y) * n + z];
                if base.source(mor) != src_of(x, y, z) || base.target(mor) != tgt_of(x, y, z) {
                    return Err(DdError::FamilyBoundary { name, index: vec![x, y, z] });
                }
                if !base.is_iso(mor) {
                    return Err(DdError::FamilyNotIso { name, index: vec![x, y, z] });
                }
            }
        }
    }
    let nm = c.num_morphisms();
    for f in 0..nm {
        for gm in 0..nm {
            for h in 0..nm {
                let (x, y, z) = (base.source(f), base.source(gm), base.source(h));
                let (x2, y2, z2) = (base.target(f), base.target(gm), base.target(h));
                let blk = |p: MorId, q: MorId, r: MorId| {
                    if primal {
                        data.boxed_mor(data.boxed_mor(p, q), r)
                    } else {
                        data.boxed_mor(p, data.boxed_mor(q, r))
                    }
                };
                let blk2 = |p: MorId, q: MorId, r: MorId| {
                    if primal {
                        data.boxed_mor(p, data.boxed_mor(q, r))
                    } else {
                        data.boxed_mor(data.boxed_mor(p, q), r)
                    }
                };
                let lhs = base
                    .compose(
                        table[(x2 * n + y2) * n + z2],
                        c.tensor_mor(base.identity(carrier), blk(f, gm, h)),
                    )
                    .expect("composable");
                let rhs = base
                    .compose(
                        c.tensor_mor(blk2(f, gm, h), base.identity(carrier)),
                        table[(x * n + y) * n + z],
                    )
                    .expect("composable");
                if lhs != rhs {
                    return Err(DdError::FamilyNaturality { name, mors: vec![f, gm, h] });
                }
            }
        }
    }
    Ok(())
}

enum UnitSide {
    Left,
    Right,
}

fn check_family1(
    data: &DoublyDegenData,
    name: &'static str,
    table: &[MorId],
    side: UnitSide,
    dual: bool,
) -> Result<(), DdError> {
    let c = &data.cat;
    let base = c.base();
    let n = c.num_objects();
    if table.len() != n {
        return Err(DdError::FamilyDimension { name });
    }
    let (blk_obj, blk_dual) = match side {
        UnitSide::Left => (data.block_l.pair.x, data.block_l.pair.x_dual),
        UnitSide::Right => (data.block_r.pair.x, data.block_r.pair.x_dual),
    };
    let carrier = if dual { blk_dual } else { blk_obj };
    let i_obj = data.monoid.carrier;
    let padded = |x: ObjId| match side {
        UnitSide::Left => data.boxed_obj(i_obj, x),
        UnitSide::Right => data.boxed_obj(x, i_obj),
    };
    let padded_mor = |f: MorId| match side {
        UnitSide::Left => data.boxed_mor(base.identity(i_obj), f),
        UnitSide::Right => data.boxed_mor(f, base.identity(i_obj)),
    };
    for x in 0..n {
        let mor = table[x];
        let (src, tgt) = if dual {
            (c.tensor_obj(carrier, x), c.tensor_obj(padded(x), carrier))
        } else {
            (c.tensor_obj(carrier, padded(x)), c.tensor_obj(x, carrier))
        };
        if base.source(mor) != src || base.target(mor) != tgt {
            return Err(DdError::FamilyBoundary { name, index: vec![x] });
        }
        if !base.is_iso(mor) {
            return Err(DdError::FamilyNotIso { name, index: vec![x] });
        }
    }
    for f in 0..c.num_morphisms() {
        let (x, x2) = (base.source(f), base.target(f));
        let (pre, post) = if dual {
            (
                c.tensor_mor(base.identity(carrier), f),
                c.tensor_mor(padded_mor(f), base.identity(carrier)),
            )
        } else {
            (
                c.tensor_mor(base.identity(carrier), padded_mor(f)),
                c.tensor_mor(f, base.identity(carrier)),
            )
        };
        let lhs = base.compose(table[x2], pre).expect("composable");
        let rhs = base.compose(post, table[x]).expect("composable");
        if lhs != rhs {
            return Err(DdError::FamilyNaturality { name, mors: vec![f] });
        }
    }
    Ok(())
}

/// A multiplication: a monoidal functor from the componentwise square with
/// invertible monoidal transformations to the identity on both unit slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiplication {
    pub functor: MonoidalFunctorData,
    /// ρ_X: φ(X, U) → X
    pub rho: Vec<MorId>,
    /// λ_X: φ(U, X) → X
    pub lam: Vec<MorId>,
}

impl Multiplication {
    pub fn carrier(&self) -> &FinMonoidalCategory {
        &self.functor.target
    }
    pub fn on_pair(&self, x: ObjId, y: ObjId) -> ObjId {
        let n = self.carrier().num_objects();
        self.functor.on_obj(PairIndex::new(n, n).index(x, y))
    }
    pub fn on_mor_pair(&self, f: MorId, gm: MorId) -> MorId {
        let n = self.carrier().num_morphisms();
        self.functor.on_mor(PairIndex::new(n, n).index(f, gm))
    }
    pub fn phi2(&self, p1: (ObjId, ObjId), p2: (ObjId, ObjId)) -> MorId {
        let n = self.carrier().num_objects();
        let ix = PairIndex::new(n, n);
        self.functor.phi2(ix.index(p1.0, p1.1), ix.index(p2.0, p2.1))
    }

    /// Monoidal-functor laws for φ plus the monoidal-transformation laws
    /// for ρ and λ, all exhaustive.
    pub fn validate(&self) -> Result<(), DdError> {
        self.functor.validate()?;
        let c = self.carrier().clone();
        let base = c.base();
        let n = c.num_objects();
        if self.rho.len() != n || self.lam.len() != n {
            return Err(DdError::Multiplication { law: "component dimension", index: vec![] });
        }
        for x in 0..n {
            let r = self.rho[x];
            if r >= base.num_morphisms()
                || base.source(r) != self.on_pair(x, c.unit())
                || base.target(r) != x
            {
                return Err(DdError::Multiplication { law: "rho boundary", index: vec![x] });
            }
            if !base.is_iso(r) {
                return Err(DdError::Multiplication { law: "rho invertible", index: vec![x] });
            }
            let l = self.lam[x];
            if l >= base.num_morphisms()
                || base.source(l) != self.on_pair(c.unit(), x)
                || base.target(l) != x
            {
                return Err(DdError::Multiplication { law: "lambda boundary", index: vec![x] });
            }
            if !base.is_iso(l) {
                return Err(DdError::Multiplication { law: "lambda invertible", index: vec![x] });
            }
        }
        for f in 0..c.num_morphisms() {
            let (x, x2) = (base.source(f), base.target(f));
            let lhs = base
                .compose(self.rho[x2], self.on_mor_pair(f, base.identity(c.unit())))
                .expect("composable");
            let rhs = base.compose(f, self.rho[x]).expect("composable");
            if lhs != rhs {
                return Err(DdError::Multiplication { law: "rho naturality", index: vec![f] });
            }
            let lhs = base
                .compose(self.lam[x2], self.on_mor_pair(base.identity(c.unit()), f))
                .expect("composable");
            let rhs = base.compose(f, self.lam[x]).expect("composable");
            if lhs != rhs {
                return Err(DdError::Multiplication { law: "lambda naturality", index: vec![f] });
            }
        }
        // monoidality: the unit-insertion functors contribute φ(1, l_U) and
        // φ(l_U, 1) to the source constraints.
        let lu = c.lunit(c.unit());
        for x in 0..n {
            for y in 0..n {
                let xy = c.tensor_obj(x, y);
                let src_phi2 = base
                    .compose(
                        self.on_mor_pair(base.identity(xy), lu),
                        self.phi2((x, c.unit()), (y, c.unit())),
                    )
                    .expect("composable");
                let lhs = base.compose(self.rho[xy], src_phi2).expect("composable");
                let rhs = c.tensor_mor(self.rho[x], self.rho[y]);
                if lhs != rhs {
                    return Err(DdError::Multiplication {
                        law: "rho tensor square",
                        index: vec![x, y],
                    });
                }
                let src_phi2 = base
                    .compose(
                        self.on_mor_pair(lu, base.identity(xy)),
                        self.phi2((c.unit(), x), (c.unit(), y)),
                    )
                    .expect("composable");
                let lhs = base.compose(self.lam[xy], src_phi2).expect("composable");
                let rhs = c.tensor_mor(self.lam[x], self.lam[y]);
                if lhs != rhs {
                    return Err(DdError::Multiplication {
                        law: "lambda tensor square",
                        index: vec![x, y],
                    });
                }
            }
        }
        let u = c.unit();
        if base.compose(self.rho[u], self.functor.phi0()).expect("composable") != base.identity(u)
        {
            return Err(DdError::Multiplication { law: "rho unit square", index: vec![] });
        }
        if base.compose(self.lam[u], self.functor.phi0()).expect("composable") != base.identity(u)
        {
            return Err(DdError::Multiplication { law: "lambda unit square", index: vec![] });
        }
        Ok(())
    }
}

/// Builds the multiplication φ(X,Y) = R ⊗ ((X⊠Y) ⊗ L·): the morphism part by
/// whiskering, the monoidal constraint from the ⊠ constraint, the L-block
/// unit and canonical coherence, and ρ, λ from the block families, ε_L and
/// the monoid isomorphism. The result is fully verified; failure is an
/// error, never silent.
///
/// Supported on structures whose block carriers are the unit object (every
/// shipped instance); other shapes are rejected explicitly.
pub fn build_multiplication(data: &DoublyDegenData) -> Result<Multiplication, DdError> {
    let c = &data.cat;
    let base = c.base();
    let u = c.unit();
    for o in [
        data.block_a.pair.x,
        data.block_a.pair.x_dual,
        data.block_l.pair.x,
        data.block_l.pair.x_dual,
        data.block_r.pair.x,
        data.block_r.pair.x_dual,
    ] {
        if o != u {
            return Err(DdError::UnsupportedBlockShape("non-unit dual-pair carrier"));
        }
    }
    let r_obj = data.block_r.pair.x;
    let ld_obj = data.block_l.pair.x_dual;
    let n = c.num_objects();
    let obj_ix = PairIndex::new(n, n);
    let phi_obj =
        |x: ObjId, y: ObjId| c.tensor_obj(r_obj, c.tensor_obj(data.boxed_obj(x, y), ld_obj));
    let obj_map: Vec<ObjId> = (0..obj_ix.len())
        .map(|o| {
            let (x, y) = obj_ix.unindex(o);
            phi_obj(x, y)
        })
        .collect();
    let nm = c.num_morphisms();
    let mor_ix = PairIndex::new(nm, nm);
    let mor_map: Vec<MorId> = (0..mor_ix.len())
        .map(|m| {
            let (f, gm) = mor_ix.unindex(m);
            c.tensor_mor(
                base.identity(r_obj),
                c.tensor_mor(data.boxed_mor(f, gm), base.identity(ld_obj)),
            )
        })
        .collect();
    let square = product_monoidal(c, c);
    let underlying = FinFunctor::new(square.base().clone(), base.clone(), obj_map, mor_map)?;

    let shape_phi = |x: ObjId, y: ObjId| {
        Shape::of(r_obj, c).tensor(Shape::Leaf(data.boxed_obj(x, y)).tensor(Shape::of(ld_obj, c)))
    };
    let mut tensor_constraint = Vec::with_capacity(obj_ix.len() * obj_ix.len());
    for p1 in 0..obj_ix.len() {
        let (x1, y1) = obj_ix.unindex(p1);
        for p2 in 0..obj_ix.len() {
            let (x2, y2) = obj_ix.unindex(p2);
            let z1 = data.boxed_obj(x1, y1);
            let z2 = data.boxed_obj(x2, y2);
            // unit-carrier padding is stripped by coherence, then the two ⊠
            // blocks merge through the ⊠ constraint
            let src = shape_phi(x1, y1).tensor(shape_phi(x2, y2));
            let together = Shape::of(r_obj, c)
                .tensor((Shape::Leaf(z1).tensor(Shape::Leaf(z2))).tensor(Shape::of(ld_obj, c)));
            let c1 = concrete_coherence(c, &src, &together)?;
            let merge = c.tensor_mor(
                base.identity(r_obj),
                c.tensor_mor(data.box_fun.phi2(p1, p2), base.identity(ld_obj)),
            );
            let total = base.compose(merge, c1).expect("composable");
            tensor_constraint.push(total);
        }
    }
    let unit_constraint = {
        let from = Shape::Leaf(data.boxed_obj(u, u));
        let to = Shape::of(r_obj, c)
            .tensor(Shape::Leaf(data.boxed_obj(u, u)).tensor(Shape::of(ld_obj, c)));
        let pad = concrete_coherence(c, &from, &to)?;
        base.compose(pad, data.box_fun.phi0()).expect("composable")
    };
    let functor = MonoidalFunctorData {
        source: square,
        target: c.clone(),
        underlying,
        tensor_constraint,
        unit_constraint,
    };

    let eps_l = data.block_l.pair.counit;
    let iso_inv =
        base.inverse(data.monoid.iso_to_unit).ok_or(DdError::NotIso { role: "monoid iso" })?;
    let l_obj = data.block_l.pair.x;
    let mut rho = Vec::with_capacity(n);
    let mut lam = Vec::with_capacity(n);
    for x in 0..n {
        // ρ_X: R((X⊠U)Ld) → R((X⊠I)Ld) ≅ (R(X⊠I))Ld → (X⊗R)Ld ≅ X(R⊗Ld)
        //      → X⊗U → X, using the R-family and ε_L.
        let xi_obj = data.boxed_obj(x, data.monoid.carrier);
        let step1 = c.tensor_mor(
            base.identity(r_obj),
            c.tensor_mor(data.boxed_mor(base.identity(x), iso_inv), base.identity(ld_obj)),
        );
        let s1 = Shape::Leaf(r_obj).tensor(Shape::Leaf(xi_obj).tensor(Shape::Leaf(ld_obj)));
        let s1b = (Shape::Leaf(r_obj).tensor(Shape::Leaf(xi_obj))).tensor(Shape::Leaf(ld_obj));
        let c1 = concrete_coherence(c, &s1, &s1b)?;
        let step2 = c.tensor_mor(data.block_r.family[x], base.identity(ld_obj));
        let s2 = (Shape::Leaf(x).tensor(Shape::Leaf(r_obj))).tensor(Shape::Leaf(ld_obj));
        let s3 = Shape::Leaf(x).tensor(Shape::Leaf(r_obj).tensor(Shape::Leaf(ld_obj)));
        let c2 = concrete_coherence(c, &s2, &s3)?;
        let step3 = c.tensor_mor(base.identity(x), eps_l);
        let total = base
            .compose(
                c.runit(x),
                base.compose(
                    step3,
                    base.compose(
                        c2,
                        base.compose(step2, base.compose(c1, step1).expect("composable"))
                            .expect("composable"),
                    )
                    .expect("composable"),
                )
                .expect("composable"),
            )
            .expect("composable");
        rho.push(total);

        // λ_X: mirrored through the L-family (object-wise valid: R = L = U).
        let ix_obj = data.boxed_obj(data.monoid.carrier, x);
        let step1 = c.tensor_mor(
            base.identity(r_obj),
            c.tensor_mor(data.boxed_mor(iso_inv, base.identity(x)), base.identity(ld_obj)),
        );
        let s1 = Shape::Leaf(r_obj).tensor(Shape::Leaf(ix_obj).tensor(Shape::Leaf(ld_obj)));
        let s1b = (Shape::Leaf(r_obj).tensor(Shape::Leaf(ix_obj))).tensor(Shape::Leaf(ld_obj));
        let c1 = concrete_coherence(c, &s1, &s1b)?;
        let step2 = c.tensor_mor(data.block_l.family[x], base.identity(ld_obj));
        let s2 = (Shape::Leaf(x).tensor(Shape::Leaf(l_obj))).tensor(Shape::Leaf(ld_obj));
        let s3 = Shape::Leaf(x).tensor(Shape::Leaf(l_obj).tensor(Shape::Leaf(ld_obj)));
        let c2 = concrete_coherence(c, &s2, &s3)?;
        let step3 = c.tensor_mor(base.identity(x), eps_l);
        let total = base
            .compose(
                c.runit(x),
                base.compose(
                    step3,
                    base.compose(
                        c2,
                        base.compose(step2, base.compose(c1, step1).expect("composable"))
                            .expect("composable"),
                    )
                    .expect("composable"),
                )
                .expect("composable"),
            )
            .expect("composable");
        lam.push(total);
    }
    let mult = Multiplication { functor, rho, lam };
    mult.validate()?;
    Ok(mult)
}

/// Derives the braiding from a multiplication by the six-step composite
/// (ρ⊗λ) ∘ φ₂⁻¹ ∘ φ(r⁻¹, l⁻¹) ∘ φ(l, r) ∘ φ₂ ∘ (λ⁻¹⊗ρ⁻¹), then validates
/// naturality and both hexagons exhaustively.
pub fn derive_braiding(
    c: &FinMonoidalCategory,
    mult: &Multiplication,
) -> Result<BraidingData, DdError> {
    let base = c.base();
    let u = c.unit();
    let n = c.num_objects();
    let mut components = Vec::with_capacity(n * n);
    for a in 0..n {
        for bb in 0..n {
            let lam_inv = base.inverse(mult.lam[a]).expect("lambda invertible");
            let rho_inv = base.inverse(mult.rho[bb]).expect("rho invertible");
            let step1 = c.tensor_mor(lam_inv, rho_inv);
            let step2 = mult.phi2((u, a), (bb, u));
            let step3 = mult.on_mor_pair(c.lunit(bb), c.runit(a));
            let step4 = mult.on_mor_pair(c.runit_inv(bb), c.lunit_inv(a));
            let step5 = base.inverse(mult.phi2((bb, u), (u, a))).expect("phi2 invertible");
            let step6 = c.tensor_mor(mult.rho[bb], mult.lam[a]);
            let total = base
                .compose(
                    step6,
                    base.compose(
                        step5,
                        base.compose(
                            step4,
                            base.compose(step3, base.compose(step2, step1).expect("composable"))
                                .expect("composable"),
                        )
                        .expect("composable"),
                    )
                    .expect("composable"),
                )
                .expect("composable");
            components.push(total);
        }
    }
    let braiding = BraidingData { components };
    crate::monoidal::validate_braiding(&braiding, c)
        .map_err(|e| DdError::DerivedBraiding(Box::new(e)))?;
    Ok(braiding)
}

/// The object-level comparison map: validates the data, builds the verified
/// multiplication, and derives the braiding.
pub fn functor_u(data: &DoublyDegenData) -> Result<(FinMonoidalCategory, BraidingData), DdError> {
    validate_dd(data)?;
    let mult = build_multiplication(data)?;
    let braiding = derive_braiding(&data.cat, &mult)?;
    Ok((data.cat.clone(), braiding))
}

/// Membership in the strictly-restricted sub-2-category: ⊠ equals ⊗
/// tablewise, the monoid object is the unit with identity data, every dual
/// pair is (U, U, l_U, l_U⁻¹), and every structural isomorphism equals the
/// canonically synthesized one.
pub fn validate_restricted(data: &DoublyDegenData) -> Result<(), DdError> {
    let c = &data.cat;
    let base = c.base();
    let u = c.unit();
    let n = c.num_objects();
    let obj_ix = PairIndex::new(n, n);
    for p in 0..obj_ix.len() {
        let (x, y) = obj_ix.unindex(p);
        if data.box_fun.on_obj(p) != c.tensor_obj(x, y) {
            return Err(DdError::NotRestricted("box object table"));
        }
    }
    let mor_ix = PairIndex::new(c.num_morphisms(), c.num_morphisms());
    for p in 0..mor_ix.len() {
        let (f, gm) = mor_ix.unindex(p);
        if data.box_fun.on_mor(p) != c.tensor_mor(f, gm) {
            return Err(DdError::NotRestricted("box morphism table"));
        }
    }
    let m = &data.monoid;
    if m.carrier != u
        || m.iso_to_unit != base.identity(u)
        || m.unit_mor != base.identity(u)
        || m.mult != c.lunit(u)
    {
        return Err(DdError::NotRestricted("monoid object"));
    }
    let canonical = crate::monoidal::unit_dual_pair(c);
    for blk in [&data.block_a, &data.block_l, &data.block_r] {
        if blk.pair != canonical {
            return Err(DdError::NotRestricted("dual pair"));
        }
    }
    // every structural iso must match the canonical reconstruction over the
    // braiding read off from the ⊠ constraint
    let braiding = instances::braiding_of_box_constraint(data)?;
    let reference = instances::from_braided(c, &braiding)?;
    if data.block_a.family != reference.block_a.family
        || data.block_a.dual_family != reference.block_a.dual_family
        || data.block_l.family != reference.block_l.family
        || data.block_l.dual_family != reference.block_l.dual_family
        || data.block_r.family != reference.block_r.family
        || data.block_r.dual_family != reference.block_r.dual_family
    {
        return Err(DdError::NotRestricted("block family"));
    }
    if data.pi != reference.pi
        || data.mu != reference.mu
        || data.lam != reference.lam
        || data.rho != reference.rho
    {
        return Err(DdError::NotRestricted("structural isomorphism"));
    }
    Ok(())
}

pub use functor::*;
pub use instances::*;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::FiniteCommutativeMonoid;
    use crate::monoidal::{
        check_symmetry, discrete_monoidal, identity_braiding, pointed_braiding, pointed_cyclic,
        pointed_phase,
    };

    #[test]
    fn discrete_z2_instance_validates() {
        let cat = discrete_monoidal(&FiniteCommutativeMonoid::cyclic(2));
        let b = identity_braiding(&cat).unwrap();
        let data = instances::from_braided(&cat, &b).unwrap();
        validate_dd(&data).unwrap();
    }

    #[test]
    fn pointed_z3_instance_validates() {
        let cat = pointed_cyclic(3);
        let data = instances::from_braided(&cat, &pointed_braiding(3)).unwrap();
        validate_dd(&data).unwrap();
    }

    #[test]
    fn pi_perturbation_rejected_by_second_axiom() {
        let cat = pointed_cyclic(3);
        let mut data = instances::from_braided(&cat, &pointed_braiding(3)).unwrap();
        // compose a non-identity unit phase onto π
        let twist = pointed_phase(3, 0, 1);
        data.pi = cat.base().compose(twist, data.pi).unwrap();
        match validate_dd(&data) {
            Err(DdError::Diagram { id, .. }) => assert_eq!(id, "dd.axiom2"),
            other => panic!("expected axiom-2 rejection, got {other:?}"),
        }
    }

    #[test]
    fn multiplication_pipeline_on_pointed_z3() {
        let cat = pointed_cyclic(3);
        let braiding = pointed_braiding(3);
        let data = instances::from_braided(&cat, &braiding).unwrap();
        validate_dd(&data).unwrap();
        let mult = build_multiplication(&data).unwrap();
        // φ(a, b) = a + b objectwise (unit blocks strip away)
        assert_eq!(mult.on_pair(1, 2), 0);
        let derived = derive_braiding(&cat, &mult).unwrap();
        assert_eq!(derived, braiding);
        assert!(!check_symmetry(&derived, &cat));
    }

    #[test]
    fn multiplication_pipeline_on_discrete() {
        let cat = discrete_monoidal(&FiniteCommutativeMonoid::cyclic(4));
        let braiding = identity_braiding(&cat).unwrap();
        let data = instances::from_braided(&cat, &braiding).unwrap();
        let mult = build_multiplication(&data).unwrap();
        let derived = derive_braiding(&cat, &mult).unwrap();
        assert_eq!(derived, braiding);
        assert!(check_symmetry(&derived, &cat));
    }

    #[test]
    fn restricted_membership_of_images() {
        let cat = pointed_cyclic(3);
        let data = instances::from_braided(&cat, &pointed_braiding(3)).unwrap();
        validate_restricted(&data).unwrap();
        // a non-identity monoid iso is rejected
        let mut bad = data.clone();
        bad.monoid.iso_to_unit = pointed_phase(3, 0, 1);
        assert!(matches!(validate_restricted(&bad), Err(DdError::NotRestricted(_))));
    }

    #[test]
    fn uf_roundtrip_is_identity() {
        for inst in instances::reference_instances().unwrap() {
            let (cat, braiding) = functor_u(&inst.data).unwrap();
            assert_eq!(cat, inst.cat, "{}", inst.name);
            assert_eq!(braiding, inst.braiding, "{}", inst.name);
            // F∘U rebuilds the same structure elementwise
            let rebuilt = instances::from_braided(&cat, &braiding).unwrap();
            assert_eq!(rebuilt, inst.data, "{}", inst.name);
        }
    }
}
