//! Finite monoidal categories, monoidal functors and transformations, dual
//! pairs, braidings, and the canonical-coherence machinery behind every
//! diagram check.

mod expr;

pub use expr::{
    canonical_coherence_iso, concrete_coherence, eval_morphism_expr, eval_obj_expr,
    infer_boundaries, substitute, DiagramCtx, EvalError, Family, FamilySig, FunctorSlot, GenSig,
    MorExpr, ObjExpr, Shape,
};

use crate::fincat::{product_category, FinCategory, FinFunctor, FinNatTransform, MorId, ObjId, PairIndex};
use crate::monoid::FiniteCommutativeMonoid;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidalError {
    #[error("category error: {0}")]
    Cat(#[from] crate::fincat::CatError),
    #[error("tensor table has wrong dimension")]
    TensorDimension,
    #[error("tensor of morphisms ({f},{g}) has wrong boundary")]
    TensorBoundary { f: MorId, g: MorId },
    #[error("tensor does not preserve identities at objects ({a},{b})")]
    TensorIdentity { a: ObjId, b: ObjId },
    #[error("tensor does not preserve composition at ({g},{f}),({g2},{f2})")]
    TensorFunctoriality { g: MorId, f: MorId, g2: MorId, f2: MorId },
    #[error("{name} component at {index:?} has wrong boundary")]
    ConstraintBoundary { name: &'static str, index: Vec<ObjId> },
    #[error("{name} component at {index:?} is not invertible")]
    ConstraintNotIso { name: &'static str, index: Vec<ObjId> },
    #[error("naturality of {name} fails at morphisms {mors:?}")]
    ConstraintNaturality { name: &'static str, mors: Vec<MorId> },
    #[error("pentagon fails at objects ({a},{b},{c},{d})")]
    Pentagon { a: ObjId, b: ObjId, c: ObjId, d: ObjId },
    #[error("triangle fails at objects ({a},{b})")]
    Triangle { a: ObjId, b: ObjId },
    #[error("monoidal functor constraint fails: {law} at {index:?}")]
    FunctorLaw { law: &'static str, index: Vec<usize> },
    #[error("monoidal transformation fails: {law} at {index:?}")]
    TransformationLaw { law: &'static str, index: Vec<usize> },
    #[error("dual pair: {side} morphism has wrong boundary")]
    DualPairBoundary { side: &'static str },
    #[error("dual pair: zigzag {which} fails (got morphism {got}, expected identity {expected})")]
    Zigzag { which: u8, got: MorId, expected: MorId },
    #[error("braiding component at ({a},{b}) has wrong boundary")]
    BraidingBoundary { a: ObjId, b: ObjId },
    #[error("braiding component at ({a},{b}) is not invertible")]
    BraidingNotIso { a: ObjId, b: ObjId },
    #[error("braiding naturality fails at morphisms ({f},{g})")]
    BraidingNaturality { f: MorId, g: MorId },
    #[error("hexagon {which} fails at objects ({a},{b},{c})")]
    Hexagon { which: u8, a: ObjId, b: ObjId, c: ObjId },
    #[error("morphism {mor} is not an endomorphism of the unit object")]
    NotUnitEndo { mor: MorId },
    #[error("evaluation error: {0}")]
    Eval(#[from] EvalError),
}

/// Unvalidated monoidal-category data on top of a raw category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawMonoidal {
    pub base: crate::fincat::RawCategory,
    pub tensor_obj: Vec<ObjId>,
    pub tensor_mor: Vec<MorId>,
    pub unit_obj: ObjId,
    /// `assoc[(a * n + b) * n + c]`: (a⊗b)⊗c → a⊗(b⊗c)
    pub assoc: Vec<MorId>,
    /// `lunit[a]`: U⊗a → a
    pub lunit: Vec<MorId>,
    /// `runit[a]`: a⊗U → a
    pub runit: Vec<MorId>,
}

/// A validated finite monoidal category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinMonoidalCategory {
    base: FinCategory,
    tensor_obj: Vec<ObjId>,
    tensor_mor: Vec<MorId>,
    unit_obj: ObjId,
    assoc: Vec<MorId>,
    lunit: Vec<MorId>,
    runit: Vec<MorId>,
}

impl FinMonoidalCategory {
    pub fn base(&self) -> &FinCategory {
        &self.base
    }
    pub fn unit(&self) -> ObjId {
        self.unit_obj
    }
    pub fn num_objects(&self) -> usize {
        self.base.num_objects()
    }
    pub fn num_morphisms(&self) -> usize {
        self.base.num_morphisms()
    }
    pub fn tensor_obj(&self, a: ObjId, b: ObjId) -> ObjId {
        self.tensor_obj[a * self.base.num_objects() + b]
    }
    pub fn tensor_mor(&self, f: MorId, g: MorId) -> MorId {
        self.tensor_mor[f * self.base.num_morphisms() + g]
    }
    pub fn assoc(&self, a: ObjId, b: ObjId, c: ObjId) -> MorId {
        let n = self.base.num_objects();
        self.assoc[(a * n + b) * n + c]
    }
    pub fn assoc_inv(&self, a: ObjId, b: ObjId, c: ObjId) -> MorId {
        self.base.inverse(self.assoc(a, b, c)).expect("associator is invertible")
    }
    pub fn lunit(&self, a: ObjId) -> MorId {
        self.lunit[a]
    }
    pub fn lunit_inv(&self, a: ObjId) -> MorId {
        self.base.inverse(self.lunit[a]).expect("left unitor is invertible")
    }
    pub fn runit(&self, a: ObjId) -> MorId {
        self.runit[a]
    }
    pub fn runit_inv(&self, a: ObjId) -> MorId {
        self.base.inverse(self.runit[a]).expect("right unitor is invertible")
    }
    pub fn compose(&self, g: MorId, f: MorId) -> Result<MorId, MonoidalError> {
        Ok(self.base.compose(g, f)?)
    }
    pub fn identity(&self, a: ObjId) -> MorId {
        self.base.identity(a)
    }

    pub fn raw(&self) -> RawMonoidal {
        RawMonoidal {
            base: self.base.raw(),
            tensor_obj: self.tensor_obj.clone(),
            tensor_mor: self.tensor_mor.clone(),
            unit_obj: self.unit_obj,
            assoc: self.assoc.clone(),
            lunit: self.lunit.clone(),
            runit: self.runit.clone(),
        }
    }

    /// Endomorphisms of the unit object.
    pub fn unit_endos(&self) -> Vec<MorId> {
        self.base.hom(self.unit_obj, self.unit_obj)
    }
}

/// Validates monoidal data exhaustively; the first failed axiom is reported
/// with its witnessing indices.
pub fn validate_monoidal(candidate: &RawMonoidal) -> Result<FinMonoidalCategory, MonoidalError> {
    let base = FinCategory::validate(&candidate.base)?;
    let n_obj = base.num_objects();
    let n_mor = base.num_morphisms();
    if candidate.tensor_obj.len() != n_obj * n_obj
        || candidate.tensor_mor.len() != n_mor * n_mor
        || candidate.assoc.len() != n_obj * n_obj * n_obj
        || candidate.lunit.len() != n_obj
        || candidate.runit.len() != n_obj
        || candidate.unit_obj >= n_obj
        || candidate.tensor_obj.iter().any(|&o| o >= n_obj)
        || candidate.tensor_mor.iter().any(|&m| m >= n_mor)
        || candidate.assoc.iter().any(|&m| m >= n_mor)
        || candidate.lunit.iter().any(|&m| m >= n_mor)
        || candidate.runit.iter().any(|&m| m >= n_mor)
    {
        return Err(MonoidalError::TensorDimension);
    }
    let c = FinMonoidalCategory {
        base,
        tensor_obj: candidate.tensor_obj.clone(),
        tensor_mor: candidate.tensor_mor.clone(),
        unit_obj: candidate.unit_obj,
        assoc: candidate.assoc.clone(),
        lunit: candidate.lunit.clone(),
        runit: candidate.runit.clone(),
    };
    let base = &c.base;

    // tensor boundaries and functoriality
    for f in 0..n_mor {
        for g in 0..n_mor {
            let fg = c.tensor_mor(f, g);
            if base.source(fg) != c.tensor_obj(base.source(f), base.source(g))
                || base.target(fg) != c.tensor_obj(base.target(f), base.target(g))
            {
                return Err(MonoidalError::TensorBoundary { f, g });
            }
        }
    }
    for a in 0..n_obj {
        for b in 0..n_obj {
            if c.tensor_mor(base.identity(a), base.identity(b)) != base.identity(c.tensor_obj(a, b))
            {
                return Err(MonoidalError::TensorIdentity { a, b });
            }
        }
    }
    for g in 0..n_mor {
        for f in 0..n_mor {
            let Ok(gf) = base.compose(g, f) else { continue };
            for g2 in 0..n_mor {
                for f2 in 0..n_mor {
                    let Ok(gf2) = base.compose(g2, f2) else { continue };
                    let lhs = c.tensor_mor(gf, gf2);
                    let rhs = base
                        .compose(c.tensor_mor(g, g2), c.tensor_mor(f, f2))
                        .map_err(|_| MonoidalError::TensorFunctoriality { g, f, g2, f2 })?;
                    if lhs != rhs {
                        return Err(MonoidalError::TensorFunctoriality { g, f, g2, f2 });
                    }
                }
            }
        }
    }

    // constraint boundaries + invertibility
    for a in 0..n_obj {
        for b in 0..n_obj {
            for z in 0..n_obj {
                let m = c.assoc(a, b, z);
                let src = c.tensor_obj(c.tensor_obj(a, b), z);
                let tgt = c.tensor_obj(a, c.tensor_obj(b, z));
                if base.source(m) != src || base.target(m) != tgt {
                    return Err(MonoidalError::ConstraintBoundary {
                        name: "associator",
                        index: vec![a, b, z],
                    });
                }
                if !base.is_iso(m) {
                    return Err(MonoidalError::ConstraintNotIso {
                        name: "associator",
                        index: vec![a, b, z],
                    });
                }
            }
        }
    }
    for a in 0..n_obj {
        let l = c.lunit(a);
        if base.source(l) != c.tensor_obj(c.unit_obj, a) || base.target(l) != a {
            return Err(MonoidalError::ConstraintBoundary { name: "left unitor", index: vec![a] });
        }
        if !base.is_iso(l) {
            return Err(MonoidalError::ConstraintNotIso { name: "left unitor", index: vec![a] });
        }
        let r = c.runit(a);
        if base.source(r) != c.tensor_obj(a, c.unit_obj) || base.target(r) != a {
            return Err(MonoidalError::ConstraintBoundary { name: "right unitor", index: vec![a] });
        }
        if !base.is_iso(r) {
            return Err(MonoidalError::ConstraintNotIso { name: "right unitor", index: vec![a] });
        }
    }

    // naturality
    for f in 0..n_mor {
        for g in 0..n_mor {
            for h in 0..n_mor {
                let (a, b, z) = (base.source(f), base.source(g), base.source(h));
                let (a2, b2, z2) = (base.target(f), base.target(g), base.target(h));
                let lhs = base
                    .compose(c.assoc(a2, b2, z2), c.tensor_mor(c.tensor_mor(f, g), h))
                    .expect("composable by construction");
                let rhs = base
                    .compose(c.tensor_mor(f, c.tensor_mor(g, h)), c.assoc(a, b, z))
                    .expect("composable by construction");
                if lhs != rhs {
                    return Err(MonoidalError::ConstraintNaturality {
                        name: "associator",
                        mors: vec![f, g, h],
                    });
                }
            }
        }
    }
    for f in 0..n_mor {
        let (a, b) = (base.source(f), base.target(f));
        let lhs = base
            .compose(c.lunit(b), c.tensor_mor(base.identity(c.unit_obj), f))
            .expect("composable");
        let rhs = base.compose(f, c.lunit(a)).expect("composable");
        if lhs != rhs {
            return Err(MonoidalError::ConstraintNaturality { name: "left unitor", mors: vec![f] });
        }
        let lhs = base
            .compose(c.runit(b), c.tensor_mor(f, base.identity(c.unit_obj)))
            .expect("composable");
        let rhs = base.compose(f, c.runit(a)).expect("composable");
        if lhs != rhs {
            return Err(MonoidalError::ConstraintNaturality { name: "right unitor", mors: vec![f] });
        }
    }

    // pentagon
    for a in 0..n_obj {
        for b in 0..n_obj {
            for x in 0..n_obj {
                for d in 0..n_obj {
                    let lhs = base
                        .compose(c.assoc(a, b, c.tensor_obj(x, d)), c.assoc(c.tensor_obj(a, b), x, d))
                        .expect("composable");
                    let rhs = base
                        .compose(
                            c.tensor_mor(base.identity(a), c.assoc(b, x, d)),
                            base.compose(
                                c.assoc(a, c.tensor_obj(b, x), d),
                                c.tensor_mor(c.assoc(a, b, x), base.identity(d)),
                            )
                            .expect("composable"),
                        )
                        .expect("composable");
                    if lhs != rhs {
                        return Err(MonoidalError::Pentagon { a, b, c: x, d });
                    }
                }
            }
        }
    }

    // triangle
    for a in 0..n_obj {
        for b in 0..n_obj {
            let lhs = base
                .compose(c.tensor_mor(base.identity(a), c.lunit(b)), c.assoc(a, c.unit_obj, b))
                .expect("composable");
            let rhs = c.tensor_mor(c.runit(a), base.identity(b));
            if lhs != rhs {
                return Err(MonoidalError::Triangle { a, b });
            }
        }
    }

    Ok(c)
}

/// Strict discrete monoidal category on a commutative monoid: objects are
/// elements, only identity morphisms, tensor is the monoid operation.
pub fn discrete_monoidal(m: &FiniteCommutativeMonoid) -> FinMonoidalCategory {
    let n = m.order();
    let base = FinCategory::discrete(n);
    let mut tensor_obj = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            tensor_obj[a * n + b] = m.op(a, b);
        }
    }
    let tensor_mor = tensor_obj.clone(); // morphisms coincide with objects
    let assoc = (0..n * n * n)
        .map(|i| {
            let a = i / (n * n);
            let b = (i / n) % n;
            let z = i % n;
            base.identity(m.op(m.op(a, b), z))
        })
        .collect();
    let lunit = (0..n).map(|a| base.identity(a)).collect();
    let runit = (0..n).map(|a| base.identity(a)).collect();
    validate_monoidal(&RawMonoidal {
        base: base.raw(),
        tensor_obj,
        tensor_mor,
        unit_obj: m.unit(),
        assoc,
        lunit,
        runit,
    })
    .expect("discrete monoidal structure is lawful")
}

/// Strict one-object monoidal category whose endomorphisms are the given
/// commutative monoid and whose tensor on morphisms is the same operation.
pub fn one_object_monoidal(m: &FiniteCommutativeMonoid) -> FinMonoidalCategory {
    let base = FinCategory::one_object(m);
    let n_mor = base.num_morphisms();
    let mut tensor_mor = vec![0; n_mor * n_mor];
    for f in 0..n_mor {
        for g in 0..n_mor {
            tensor_mor[f * n_mor + g] = m.op(f, g);
        }
    }
    validate_monoidal(&RawMonoidal {
        base: base.raw(),
        tensor_obj: vec![0],
        tensor_mor,
        unit_obj: 0,
        assoc: vec![base.identity(0)],
        lunit: vec![base.identity(0)],
        runit: vec![base.identity(0)],
    })
    .expect("one-object monoidal structure is lawful")
}

/// The Z/n-pointed category: objects Z/n, Hom(a,a) = Z/n phases, tensor adds
/// objects and phases, strict constraints. Morphism id of phase `s` at object
/// `a` is `a * n + s`.
pub fn pointed_cyclic(n: usize) -> FinMonoidalCategory {
    assert!(n > 0);
    let n_mor = n * n;
    let morphisms: Vec<(ObjId, ObjId)> = (0..n_mor).map(|i| (i / n, i / n)).collect();
    let identities: Vec<MorId> = (0..n).map(|a| a * n).collect();
    let mut composition = vec![None; n_mor * n_mor];
    for g in 0..n_mor {
        for f in 0..n_mor {
            if g / n == f / n {
                composition[g * n_mor + f] = Some((g / n) * n + (g % n + f % n) % n);
            }
        }
    }
    let base = FinCategory::validate(&crate::fincat::RawCategory {
        objects: n,
        morphisms,
        identities,
        composition,
    })
    .expect("pointed base category is lawful");
    let mut tensor_obj = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            tensor_obj[a * n + b] = (a + b) % n;
        }
    }
    let mut tensor_mor = vec![0; n_mor * n_mor];
    for f in 0..n_mor {
        for g in 0..n_mor {
            let obj = (f / n + g / n) % n;
            let phase = (f % n + g % n) % n;
            tensor_mor[f * n_mor + g] = obj * n + phase;
        }
    }
    let assoc = (0..n * n * n)
        .map(|i| {
            let a = i / (n * n);
            let b = (i / n) % n;
            let z = i % n;
            base.identity((a + b + z) % n)
        })
        .collect();
    let lunit = (0..n).map(|a| base.identity(a)).collect();
    let runit = (0..n).map(|a| base.identity(a)).collect();
    validate_monoidal(&RawMonoidal {
        base: base.raw(),
        tensor_obj,
        tensor_mor,
        unit_obj: 0,
        assoc,
        lunit,
        runit,
    })
    .expect("pointed monoidal structure is lawful")
}

/// Phase `s` at object `a` of `pointed_cyclic(n)`.
pub fn pointed_phase(n: usize, a: usize, s: usize) -> MorId {
    (a % n) * n + (s % n)
}

/// Braiding data: component table `c[a][b]: a⊗b → b⊗a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidingData {
    pub components: Vec<MorId>,
}

impl BraidingData {
    pub fn component(&self, c: &FinMonoidalCategory, a: ObjId, b: ObjId) -> MorId {
        self.components[a * c.num_objects() + b]
    }
}

/// Validates invertibility, naturality, and both hexagon axioms exhaustively.
pub fn validate_braiding(
    b: &BraidingData,
    c: &FinMonoidalCategory,
) -> Result<(), MonoidalError> {
    let n_obj = c.num_objects();
    let base = c.base();
    if b.components.len() != n_obj * n_obj {
        return Err(MonoidalError::TensorDimension);
    }
    for x in 0..n_obj {
        for y in 0..n_obj {
            let m = b.component(c, x, y);
            if m >= base.num_morphisms()
                || base.source(m) != c.tensor_obj(x, y)
                || base.target(m) != c.tensor_obj(y, x)
            {
                return Err(MonoidalError::BraidingBoundary { a: x, b: y });
            }
            if !base.is_iso(m) {
                return Err(MonoidalError::BraidingNotIso { a: x, b: y });
            }
        }
    }
    for f in 0..base.num_morphisms() {
        for g in 0..base.num_morphisms() {
            let (a, b1) = (base.source(f), base.source(g));
            let (a2, b2) = (base.target(f), base.target(g));
            let lhs = base.compose(b.component(c, a2, b2), c.tensor_mor(f, g)).expect("composable");
            let rhs = base.compose(c.tensor_mor(g, f), b.component(c, a, b1)).expect("composable");
            if lhs != rhs {
                return Err(MonoidalError::BraidingNaturality { f, g });
            }
        }
    }
    for x in 0..n_obj {
        for y in 0..n_obj {
            for z in 0..n_obj {
                // hexagon 1: (x⊗y)⊗z → y⊗(z⊗x)
                let lhs = base
                    .compose(
                        c.assoc(y, z, x),
                        base.compose(b.component(c, x, c.tensor_obj(y, z)), c.assoc(x, y, z))
                            .expect("composable"),
                    )
                    .expect("composable");
                let rhs = base
                    .compose(
                        c.tensor_mor(base.identity(y), b.component(c, x, z)),
                        base.compose(
                            c.assoc(y, x, z),
                            c.tensor_mor(b.component(c, x, y), base.identity(z)),
                        )
                        .expect("composable"),
                    )
                    .expect("composable");
                if lhs != rhs {
                    return Err(MonoidalError::Hexagon { which: 1, a: x, b: y, c: z });
                }
                // hexagon 2: x⊗(y⊗z) → (z⊗x)⊗y
                let lhs = base
                    .compose(
                        c.assoc_inv(z, x, y),
                        base.compose(b.component(c, c.tensor_obj(x, y), z), c.assoc_inv(x, y, z))
                            .expect("composable"),
                    )
                    .expect("composable");
                let rhs = base
                    .compose(
                        c.tensor_mor(b.component(c, x, z), base.identity(y)),
                        base.compose(
                            c.assoc_inv(x, z, y),
                            c.tensor_mor(base.identity(x), b.component(c, y, z)),
                        )
                        .expect("composable"),
                    )
                    .expect("composable");
                if lhs != rhs {
                    return Err(MonoidalError::Hexagon { which: 2, a: x, b: y, c: z });
                }
            }
        }
    }
    Ok(())
}

/// `c_{y,x} ∘ c_{x,y} = id` for all pairs.
pub fn check_symmetry(b: &BraidingData, c: &FinMonoidalCategory) -> bool {
    let n_obj = c.num_objects();
    (0..n_obj).all(|x| {
        (0..n_obj).all(|y| {
            c.base()
                .compose(b.component(c, y, x), b.component(c, x, y))
                .map(|m| c.base().is_identity(m))
                .unwrap_or(false)
        })
    })
}

/// Identity braiding: only valid where `x⊗y = y⊗x` objectwise.
pub fn identity_braiding(c: &FinMonoidalCategory) -> Option<BraidingData> {
    let n = c.num_objects();
    let mut components = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            if c.tensor_obj(x, y) != c.tensor_obj(y, x) {
                return None;
            }
            components.push(c.identity(c.tensor_obj(x, y)));
        }
    }
    Some(BraidingData { components })
}

/// The bilinear braiding `c_{a,b} = phase(a*b)` on `pointed_cyclic(n)`.
pub fn pointed_braiding(n: usize) -> BraidingData {
    let mut components = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            components.push(pointed_phase(n, (a + b) % n, (a * b) % n));
        }
    }
    BraidingData { components }
}

/// A dual pair `(x, x·, ε, η)` in a monoidal category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualPair {
    pub x: ObjId,
    pub x_dual: ObjId,
    /// ε: x ⊗ x· → U
    pub counit: MorId,
    /// η: U → x· ⊗ x
    pub unit: MorId,
}

/// Checks both zigzag identities, with the unmarked maps resolved to
/// canonical coherence isomorphisms.
pub fn validate_dual_pair(p: &DualPair, c: &FinMonoidalCategory) -> Result<(), MonoidalError> {
    let base = c.base();
    if p.counit >= base.num_morphisms()
        || base.source(p.counit) != c.tensor_obj(p.x, p.x_dual)
        || base.target(p.counit) != c.unit()
    {
        return Err(MonoidalError::DualPairBoundary { side: "counit" });
    }
    if p.unit >= base.num_morphisms()
        || base.source(p.unit) != c.unit()
        || base.target(p.unit) != c.tensor_obj(p.x_dual, p.x)
    {
        return Err(MonoidalError::DualPairBoundary { side: "unit" });
    }
    let mut ctx = DiagramCtx::new(c);
    ctx.bind_obj("X", p.x);
    ctx.bind_obj("Xd", p.x_dual);
    ctx.bind_mor("eps", p.counit);
    ctx.bind_mor("eta", p.unit);
    let x = ObjExpr::gen("X");
    let xd = ObjExpr::gen("Xd");
    // X ≅ X⊗U → X⊗(Xd⊗X) ≅ (X⊗Xd)⊗X → U⊗X ≅ X
    let zz1 = MorExpr::chain(vec![
        MorExpr::coh(x.clone(), x.clone().tensor(ObjExpr::Unit)),
        MorExpr::tensor(MorExpr::id(x.clone()), MorExpr::gen("eta")),
        MorExpr::coh(
            x.clone().tensor(xd.clone().tensor(x.clone())),
            x.clone().tensor(xd.clone()).tensor(x.clone()),
        ),
        MorExpr::tensor(MorExpr::gen("eps"), MorExpr::id(x.clone())),
        MorExpr::coh(ObjExpr::Unit.tensor(x.clone()), x.clone()),
    ]);
    let got = eval_morphism_expr(&zz1, &ctx)?;
    if got != base.identity(p.x) {
        return Err(MonoidalError::Zigzag { which: 1, got, expected: base.identity(p.x) });
    }
    // Xd ≅ U⊗Xd → (Xd⊗X)⊗Xd ≅ Xd⊗(X⊗Xd) → Xd⊗U ≅ Xd
    let zz2 = MorExpr::chain(vec![
        MorExpr::coh(xd.clone(), ObjExpr::Unit.tensor(xd.clone())),
        MorExpr::tensor(MorExpr::gen("eta"), MorExpr::id(xd.clone())),
        MorExpr::coh(
            xd.clone().tensor(x.clone()).tensor(xd.clone()),
            xd.clone().tensor(x.clone().tensor(xd.clone())),
        ),
        MorExpr::tensor(MorExpr::id(xd.clone()), MorExpr::gen("eps")),
        MorExpr::coh(xd.clone().tensor(ObjExpr::Unit), xd.clone()),
    ]);
    let got = eval_morphism_expr(&zz2, &ctx)?;
    if got != base.identity(p.x_dual) {
        return Err(MonoidalError::Zigzag { which: 2, got, expected: base.identity(p.x_dual) });
    }
    Ok(())
}

/// The canonical dual pair `(U, U, l_U, l_U⁻¹)`, valid in any monoidal category.
pub fn unit_dual_pair(c: &FinMonoidalCategory) -> DualPair {
    DualPair {
        x: c.unit(),
        x_dual: c.unit(),
        counit: c.lunit(c.unit()),
        unit: c.lunit_inv(c.unit()),
    }
}

/// The ⊙ product on End(U): `r_U ∘ (β ⊗ α) ∘ l_U⁻¹`.
pub fn unit_endo_product(
    beta: MorId,
    alpha: MorId,
    c: &FinMonoidalCategory,
) -> Result<MorId, MonoidalError> {
    let u = c.unit();
    let base = c.base();
    for m in [beta, alpha] {
        if m >= base.num_morphisms() || base.source(m) != u || base.target(m) != u {
            return Err(MonoidalError::NotUnitEndo { mor: m });
        }
    }
    let mid = c.tensor_mor(beta, alpha);
    let m = base.compose(c.runit(u), base.compose(mid, c.lunit_inv(u))?)?;
    Ok(m)
}

/// A monoidal functor: underlying functor plus tensor/unit constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalFunctorData {
    pub source: FinMonoidalCategory,
    pub target: FinMonoidalCategory,
    pub underlying: FinFunctor,
    /// φ₂ indexed by source object pairs: F(a) ⊗' F(b) → F(a⊗b)
    pub tensor_constraint: Vec<MorId>,
    /// φ₀: U' → F(U)
    pub unit_constraint: MorId,
}

impl MonoidalFunctorData {
    pub fn phi2(&self, a: ObjId, b: ObjId) -> MorId {
        self.tensor_constraint[a * self.source.num_objects() + b]
    }
    pub fn phi0(&self) -> MorId {
        self.unit_constraint
    }
    pub fn on_obj(&self, a: ObjId) -> ObjId {
        self.underlying.on_obj(a)
    }
    pub fn on_mor(&self, m: MorId) -> MorId {
        self.underlying.on_mor(m)
    }

    /// Checks constraint invertibility/naturality, the hexagon with
    /// associators, and the two unit axioms, all exhaustively.
    pub fn validate(&self) -> Result<(), MonoidalError> {
        let src = &self.source;
        let tgt = &self.target;
        if self.underlying.source != *src.base() || self.underlying.target != *tgt.base() {
            return Err(MonoidalError::FunctorLaw { law: "carrier mismatch", index: vec![] });
        }
        let n_obj = src.num_objects();
        if self.tensor_constraint.len() != n_obj * n_obj {
            return Err(MonoidalError::TensorDimension);
        }
        let tb = tgt.base();
        for a in 0..n_obj {
            for b in 0..n_obj {
                let m = self.phi2(a, b);
                if m >= tb.num_morphisms()
                    || tb.source(m) != tgt.tensor_obj(self.on_obj(a), self.on_obj(b))
                    || tb.target(m) != self.on_obj(src.tensor_obj(a, b))
                {
                    return Err(MonoidalError::ConstraintBoundary {
                        name: "functor tensor constraint",
                        index: vec![a, b],
                    });
                }
                if !tb.is_iso(m) {
                    return Err(MonoidalError::ConstraintNotIso {
                        name: "functor tensor constraint",
                        index: vec![a, b],
                    });
                }
            }
        }
        let m0 = self.unit_constraint;
        if m0 >= tb.num_morphisms()
            || tb.source(m0) != tgt.unit()
            || tb.target(m0) != self.on_obj(src.unit())
        {
            return Err(MonoidalError::ConstraintBoundary {
                name: "functor unit constraint",
                index: vec![],
            });
        }
        if !tb.is_iso(m0) {
            return Err(MonoidalError::ConstraintNotIso {
                name: "functor unit constraint",
                index: vec![],
            });
        }
        // naturality of φ₂
        for f in 0..src.num_morphisms() {
            for g in 0..src.num_morphisms() {
                let (a, b) = (src.base().source(f), src.base().source(g));
                let (a2, b2) = (src.base().target(f), src.base().target(g));
                let lhs = tb
                    .compose(self.on_mor(src.tensor_mor(f, g)), self.phi2(a, b))
                    .expect("composable");
                let rhs = tb
                    .compose(self.phi2(a2, b2), tgt.tensor_mor(self.on_mor(f), self.on_mor(g)))
                    .expect("composable");
                if lhs != rhs {
                    return Err(MonoidalError::FunctorLaw {
                        law: "tensor constraint naturality",
                        index: vec![f, g],
                    });
                }
            }
        }
        // hexagon with associators
        for a in 0..n_obj {
            for b in 0..n_obj {
                for z in 0..n_obj {
                    let (fa, fb, fz) = (self.on_obj(a), self.on_obj(b), self.on_obj(z));
                    let lhs = tb
                        .compose(
                            self.phi2(a, src.tensor_obj(b, z)),
                            tb.compose(
                                tgt.tensor_mor(tb.identity(fa), self.phi2(b, z)),
                                tgt.assoc(fa, fb, fz),
                            )
                            .expect("composable"),
                        )
                        .expect("composable");
                    let rhs = tb
                        .compose(
                            self.on_mor(src.assoc(a, b, z)),
                            tb.compose(
                                self.phi2(src.tensor_obj(a, b), z),
                                tgt.tensor_mor(self.phi2(a, b), tb.identity(fz)),
                            )
                            .expect("composable"),
                        )
                        .expect("composable");
                    if lhs != rhs {
                        return Err(MonoidalError::FunctorLaw {
                            law: "associativity hexagon",
                            index: vec![a, b, z],
                        });
                    }
                }
            }
        }
        // unit axioms
        for a in 0..n_obj {
            let fa = self.on_obj(a);
            let lhs = tb
                .compose(
                    self.on_mor(src.lunit(a)),
                    tb.compose(
                        self.phi2(src.unit(), a),
                        tgt.tensor_mor(self.unit_constraint, tb.identity(fa)),
                    )
                    .expect("composable"),
                )
                .expect("composable");
            if lhs != tgt.lunit(fa) {
                return Err(MonoidalError::FunctorLaw { law: "left unit axiom", index: vec![a] });
            }
            let rhs = tb
                .compose(
                    self.on_mor(src.runit(a)),
                    tb.compose(
                        self.phi2(a, src.unit()),
                        tgt.tensor_mor(tb.identity(fa), self.unit_constraint),
                    )
                    .expect("composable"),
                )
                .expect("composable");
            if rhs != tgt.runit(fa) {
                return Err(MonoidalError::FunctorLaw { law: "right unit axiom", index: vec![a] });
            }
        }
        Ok(())
    }

    /// Identity monoidal functor.
    pub fn identity(c: &FinMonoidalCategory) -> Self {
        let n = c.num_objects();
        let tensor_constraint =
            (0..n * n).map(|i| c.identity(c.tensor_obj(i / n, i % n))).collect();
        MonoidalFunctorData {
            source: c.clone(),
            target: c.clone(),
            underlying: FinFunctor::identity(c.base()),
            tensor_constraint,
            unit_constraint: c.identity(c.unit()),
        }
    }

    /// `self ∘ other` with the composite constraints
    /// φ₂ = F(ψ₂) ∘ φ₂(Ga, Gb) and φ₀ = F(ψ₀) ∘ φ₀.
    pub fn compose(&self, other: &MonoidalFunctorData) -> Result<MonoidalFunctorData, MonoidalError> {
        if other.target != self.source {
            return Err(MonoidalError::FunctorLaw { law: "composition mismatch", index: vec![] });
        }
        let underlying = self.underlying.compose(&other.underlying)?;
        let n = other.source.num_objects();
        let tb = self.target.base();
        let mut tensor_constraint = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let m = tb
                    .compose(self.on_mor(other.phi2(a, b)), self.phi2(other.on_obj(a), other.on_obj(b)))
                    .expect("composable");
                tensor_constraint.push(m);
            }
        }
        let unit_constraint =
            tb.compose(self.on_mor(other.unit_constraint), self.unit_constraint).expect("composable");
        Ok(MonoidalFunctorData {
            source: other.source.clone(),
            target: self.target.clone(),
            underlying,
            tensor_constraint,
            unit_constraint,
        })
    }
}

/// The tensor product as a monoidal functor `C×C → C`, with the interchange
/// constraint supplied by a braiding.
///
/// The underlying functor is on `product_category(base, base)` with the
/// `PairIndex` scheme; φ₂ at ((x1,y1),(x2,y2)) is the middle-four map
/// built from `c_{y1,x2}` and coherence.
pub fn tensor_as_monoidal_functor(
    c: &FinMonoidalCategory,
    braiding: &BraidingData,
) -> Result<MonoidalFunctorData, MonoidalError> {
    let square = product_monoidal(c, c);
    let obj_ix = PairIndex::new(c.num_objects(), c.num_objects());
    let mor_ix = PairIndex::new(c.num_morphisms(), c.num_morphisms());
    let obj_map: Vec<ObjId> = (0..obj_ix.len())
        .map(|o| {
            let (a, b) = obj_ix.unindex(o);
            c.tensor_obj(a, b)
        })
        .collect();
    let mor_map: Vec<MorId> = (0..mor_ix.len())
        .map(|m| {
            let (f, g) = mor_ix.unindex(m);
            c.tensor_mor(f, g)
        })
        .collect();
    let underlying = FinFunctor::new(square.base().clone(), c.base().clone(), obj_map, mor_map)?;
    let base = c.base();
    let n_pair = obj_ix.len();
    let mut tensor_constraint = Vec::with_capacity(n_pair * n_pair);
    for p1 in 0..n_pair {
        let (x1, y1) = obj_ix.unindex(p1);
        for p2 in 0..n_pair {
            let (x2, y2) = obj_ix.unindex(p2);
            // (x1⊗y1)⊗(x2⊗y2) → (x1⊗x2)⊗(y1⊗y2) via 1⊗(c⊗1) and coherence
            let mut ctx = DiagramCtx::new(c);
            ctx.bind_obj("x1", x1);
            ctx.bind_obj("y1", y1);
            ctx.bind_obj("x2", x2);
            ctx.bind_obj("y2", y2);
            ctx.bind_mor("swap", braiding.component(c, y1, x2));
            let [ex1, ey1, ex2, ey2] =
                [ObjExpr::gen("x1"), ObjExpr::gen("y1"), ObjExpr::gen("x2"), ObjExpr::gen("y2")];
            let e = MorExpr::chain(vec![
                MorExpr::coh(
                    ex1.clone().tensor(ey1.clone()).tensor(ex2.clone().tensor(ey2.clone())),
                    ex1.clone()
                        .tensor(ey1.clone().tensor(ex2.clone()).tensor(ey2.clone())),
                ),
                MorExpr::tensor(
                    MorExpr::id(ex1.clone()),
                    MorExpr::tensor(MorExpr::gen("swap"), MorExpr::id(ey2.clone())),
                ),
                MorExpr::coh(
                    ex1.clone()
                        .tensor(ex2.clone().tensor(ey1.clone()).tensor(ey2.clone())),
                    ex1.clone().tensor(ex2.clone()).tensor(ey1.clone().tensor(ey2.clone())),
                ),
            ]);
            tensor_constraint.push(eval_morphism_expr(&e, &ctx)?);
        }
    }
    let unit_constraint = c.lunit_inv(c.unit());
    let data = MonoidalFunctorData {
        source: square,
        target: c.clone(),
        underlying,
        tensor_constraint,
        unit_constraint,
    };
    data.validate()?;
    let _ = base;
    Ok(data)
}

/// Componentwise product of two monoidal functors, `F×G: C×C' → D×D'`.
pub fn product_monoidal_functor(
    f: &MonoidalFunctorData,
    g: &MonoidalFunctorData,
) -> Result<MonoidalFunctorData, MonoidalError> {
    let source = product_monoidal(&f.source, &g.source);
    let target = product_monoidal(&f.target, &g.target);
    let src_obj = PairIndex::new(f.source.num_objects(), g.source.num_objects());
    let tgt_obj = PairIndex::new(f.target.num_objects(), g.target.num_objects());
    let src_mor = PairIndex::new(f.source.num_morphisms(), g.source.num_morphisms());
    let tgt_mor = PairIndex::new(f.target.num_morphisms(), g.target.num_morphisms());
    let obj_map = (0..src_obj.len())
        .map(|o| {
            let (a, bb) = src_obj.unindex(o);
            tgt_obj.index(f.on_obj(a), g.on_obj(bb))
        })
        .collect();
    let mor_map = (0..src_mor.len())
        .map(|m| {
            let (a, bb) = src_mor.unindex(m);
            tgt_mor.index(f.on_mor(a), g.on_mor(bb))
        })
        .collect();
    let underlying = FinFunctor::new(source.base().clone(), target.base().clone(), obj_map, mor_map)?;
    let n = src_obj.len();
    let mut tensor_constraint = Vec::with_capacity(n * n);
    for p1 in 0..n {
        let (a1, b1) = src_obj.unindex(p1);
        for p2 in 0..n {
            let (a2, b2) = src_obj.unindex(p2);
            tensor_constraint.push(tgt_mor.index(f.phi2(a1, a2), g.phi2(b1, b2)));
        }
    }
    let unit_constraint = tgt_mor.index(f.phi0(), g.phi0());
    Ok(MonoidalFunctorData { source, target, underlying, tensor_constraint, unit_constraint })
}

/// Componentwise monoidal structure on the product category.
pub fn product_monoidal(c: &FinMonoidalCategory, d: &FinMonoidalCategory) -> FinMonoidalCategory {
    let base = product_category(c.base(), d.base());
    let obj_ix = PairIndex::new(c.num_objects(), d.num_objects());
    let mor_ix = PairIndex::new(c.num_morphisms(), d.num_morphisms());
    let n = obj_ix.len();
    let mut tensor_obj = vec![0; n * n];
    for o1 in 0..n {
        let (a1, b1) = obj_ix.unindex(o1);
        for o2 in 0..n {
            let (a2, b2) = obj_ix.unindex(o2);
            tensor_obj[o1 * n + o2] = obj_ix.index(c.tensor_obj(a1, a2), d.tensor_obj(b1, b2));
        }
    }
    let nm = mor_ix.len();
    let mut tensor_mor = vec![0; nm * nm];
    for m1 in 0..nm {
        let (f1, g1) = mor_ix.unindex(m1);
        for m2 in 0..nm {
            let (f2, g2) = mor_ix.unindex(m2);
            tensor_mor[m1 * nm + m2] = mor_ix.index(c.tensor_mor(f1, f2), d.tensor_mor(g1, g2));
        }
    }
    let assoc = (0..n * n * n)
        .map(|i| {
            let o1 = i / (n * n);
            let o2 = (i / n) % n;
            let o3 = i % n;
            let (a1, b1) = obj_ix.unindex(o1);
            let (a2, b2) = obj_ix.unindex(o2);
            let (a3, b3) = obj_ix.unindex(o3);
            mor_ix.index(c.assoc(a1, a2, a3), d.assoc(b1, b2, b3))
        })
        .collect();
    let lunit = (0..n)
        .map(|o| {
            let (a, b) = obj_ix.unindex(o);
            mor_ix.index(c.lunit(a), d.lunit(b))
        })
        .collect();
    let runit = (0..n)
        .map(|o| {
            let (a, b) = obj_ix.unindex(o);
            mor_ix.index(c.runit(a), d.runit(b))
        })
        .collect();
    validate_monoidal(&RawMonoidal {
        base: base.raw(),
        tensor_obj,
        tensor_mor,
        unit_obj: obj_ix.index(c.unit(), d.unit()),
        assoc,
        lunit,
        runit,
    })
    .expect("componentwise product of monoidal categories is lawful")
}

/// Braided-compatibility of a monoidal functor against braidings on its
/// carriers: F(c_{a,b}) ∘ φ₂(a,b) = φ₂(b,a) ∘ c'_{Fa,Fb} for all pairs.
pub fn check_braided_compatibility(
    f: &MonoidalFunctorData,
    c_src: &BraidingData,
    c_tgt: &BraidingData,
) -> Result<(), MonoidalError> {
    let src = &f.source;
    let tgt = &f.target;
    let base = tgt.base();
    for a in 0..src.num_objects() {
        for b in 0..src.num_objects() {
            let lhs = base
                .compose(f.on_mor(c_src.component(src, a, b)), f.phi2(a, b))
                .expect("composable");
            let rhs = base
                .compose(f.phi2(b, a), c_tgt.component(tgt, f.on_obj(a), f.on_obj(b)))
                .expect("composable");
            if lhs != rhs {
                return Err(MonoidalError::FunctorLaw {
                    law: "braided compatibility",
                    index: vec![a, b],
                });
            }
        }
    }
    Ok(())
}

/// Monoidality check for a natural transformation between monoidal functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalTransformationData {
    pub underlying: FinNatTransform,
}

impl MonoidalTransformationData {
    pub fn validate(
        &self,
        f: &MonoidalFunctorData,
        g: &MonoidalFunctorData,
    ) -> Result<(), MonoidalError> {
        if self.underlying.source != f.underlying || self.underlying.target != g.underlying {
            return Err(MonoidalError::TransformationLaw {
                law: "underlying functor mismatch",
                index: vec![],
            });
        }
        let src = &f.source;
        let tgt = &f.target;
        let tb = tgt.base();
        for a in 0..src.num_objects() {
            for b in 0..src.num_objects() {
                let ab = src.tensor_obj(a, b);
                let lhs = tb.compose(self.underlying.component(ab), f.phi2(a, b)).expect("composable");
                let rhs = tb
                    .compose(
                        g.phi2(a, b),
                        tgt.tensor_mor(self.underlying.component(a), self.underlying.component(b)),
                    )
                    .expect("composable");
                if lhs != rhs {
                    return Err(MonoidalError::TransformationLaw {
                        law: "tensor square",
                        index: vec![a, b],
                    });
                }
            }
        }
        let lhs = tb.compose(self.underlying.component(src.unit()), f.phi0()).expect("composable");
        if lhs != g.phi0() {
            return Err(MonoidalError::TransformationLaw { law: "unit square", index: vec![] });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3_pointed() -> FinMonoidalCategory {
        pointed_cyclic(3)
    }

    #[test]
    fn discrete_z2_validates() {
        let c = discrete_monoidal(&FiniteCommutativeMonoid::cyclic(2));
        assert!(validate_monoidal(&c.raw()).is_ok());
    }

    #[test]
    fn pointed_z3_validates() {
        let c = z3_pointed();
        assert!(validate_monoidal(&c.raw()).is_ok());
        assert_eq!(c.num_objects(), 3);
        assert_eq!(c.num_morphisms(), 9);
    }

    #[test]
    fn pentagon_violation_reported_with_witness() {
        let c = z3_pointed();
        let mut raw = c.raw();
        // set one associator component to a non-identity phase
        let n = 3;
        raw.assoc[(1 * n + 1) * n + 1] = pointed_phase(3, 0, 1);
        match validate_monoidal(&raw) {
            Err(MonoidalError::Pentagon { .. }) => {}
            other => panic!("expected pentagon violation, got {other:?}"),
        }
    }

    #[test]
    fn triangle_violation_reported() {
        let c = z3_pointed();
        let mut raw = c.raw();
        raw.lunit[1] = pointed_phase(3, 1, 2);
        let r = validate_monoidal(&raw);
        assert!(
            matches!(r, Err(MonoidalError::Triangle { .. }))
                || matches!(r, Err(MonoidalError::ConstraintNaturality { .. })),
            "got {r:?}"
        );
    }

    #[test]
    fn unit_dual_pair_accepted_everywhere() {
        for c in [
            discrete_monoidal(&FiniteCommutativeMonoid::cyclic(4)),
            one_object_monoidal(&FiniteCommutativeMonoid::cyclic(2)),
            z3_pointed(),
        ] {
            validate_dual_pair(&unit_dual_pair(&c), &c).unwrap();
        }
    }

    #[test]
    fn group_element_dual_pairs() {
        let c = discrete_monoidal(&FiniteCommutativeMonoid::cyclic(4));
        // (x, x⁻¹, id, id) validates; note 1 + 3 = 0 in Z/4.
        let p = DualPair { x: 1, x_dual: 3, counit: c.identity(0), unit: c.identity(0) };
        validate_dual_pair(&p, &c).unwrap();
        // (1, 2) is not a dual pair: ε would need source 1⊗2 = 3 ≠ 0 = U.
        let bad = DualPair { x: 1, x_dual: 2, counit: c.identity(0), unit: c.identity(0) };
        assert!(validate_dual_pair(&bad, &c).is_err());
    }

    #[test]
    fn pointed_dual_pair_phase_mismatch_rejected() {
        let c = z3_pointed();
        // (0, 0, ε with a nonzero phase, η identity) fails the first zigzag
        let p = DualPair {
            x: 0,
            x_dual: 0,
            counit: pointed_phase(3, 0, 1),
            unit: pointed_phase(3, 0, 0),
        };
        match validate_dual_pair(&p, &c) {
            Err(MonoidalError::Zigzag { which: 1, .. }) => {}
            other => panic!("expected zigzag 1 failure, got {other:?}"),
        }
    }

    #[test]
    fn identity_braiding_on_discrete_is_symmetric() {
        let c = discrete_monoidal(&FiniteCommutativeMonoid::cyclic(2));
        let b = identity_braiding(&c).unwrap();
        validate_braiding(&b, &c).unwrap();
        assert!(check_symmetry(&b, &c));
    }

    #[test]
    fn pointed_bilinear_braiding_not_symmetric() {
        let c = z3_pointed();
        let b = pointed_braiding(3);
        validate_braiding(&b, &c).unwrap();
        assert!(!check_symmetry(&b, &c));
        // c_{1,1}² = phase 2 ≠ 0
        let twice = c
            .base()
            .compose(b.component(&c, 1, 1), b.component(&c, 1, 1))
            .unwrap();
        assert_eq!(twice, pointed_phase(3, 2, 2));
    }

    #[test]
    fn pointed_additive_family_fails_hexagon() {
        let c = z3_pointed();
        let mut components = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                components.push(pointed_phase(3, (a + b) % 3, (a + b) % 3));
            }
        }
        let b = BraidingData { components };
        match validate_braiding(&b, &c) {
            Err(MonoidalError::Hexagon { .. }) => {}
            other => panic!("expected hexagon failure, got {other:?}"),
        }
    }

    #[test]
    fn braiding_unit_components_are_coherence() {
        // c_{U,x} and c_{x,U} must equal the canonical coherence isos
        for (c, b) in [
            (z3_pointed(), pointed_braiding(3)),
            (
                discrete_monoidal(&FiniteCommutativeMonoid::cyclic(3)),
                identity_braiding(&discrete_monoidal(&FiniteCommutativeMonoid::cyclic(3))).unwrap(),
            ),
        ] {
            validate_braiding(&b, &c).unwrap();
            let u = c.unit();
            for x in 0..c.num_objects() {
                let lu_ru = c.base().compose(c.lunit_inv(x), c.runit(x)).unwrap();
                assert_eq!(b.component(&c, x, u), lu_ru, "c_(x,U) at {x}");
                let ru_lu = c.base().compose(c.runit_inv(x), c.lunit(x)).unwrap();
                assert_eq!(b.component(&c, u, x), ru_lu, "c_(U,x) at {x}");
            }
        }
    }

    #[test]
    fn unit_endo_product_matches_composition() {
        for c in [z3_pointed(), one_object_monoidal(&FiniteCommutativeMonoid::cyclic(2))] {
            let endos = c.unit_endos();
            for &b in &endos {
                for &a in &endos {
                    let prod = unit_endo_product(b, a, &c).unwrap();
                    assert_eq!(prod, c.base().compose(b, a).unwrap());
                    assert_eq!(prod, c.base().compose(a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn unit_endo_product_examples() {
        let c = z3_pointed();
        let u = c.identity(c.unit());
        assert_eq!(unit_endo_product(u, u, &c).unwrap(), u);
        let p1 = pointed_phase(3, 0, 1);
        let p2 = pointed_phase(3, 0, 2);
        assert_eq!(unit_endo_product(p1, p2, &c).unwrap(), pointed_phase(3, 0, 0));
        let not_endo = pointed_phase(3, 1, 0);
        assert!(unit_endo_product(not_endo, u, &c).is_err());
    }

    #[test]
    fn tensor_functor_with_braiding_validates() {
        let c = z3_pointed();
        let f = tensor_as_monoidal_functor(&c, &pointed_braiding(3)).unwrap();
        f.validate().unwrap();
        // phase of φ₂ at ((a1,b1),(a2,b2)) is b1*a2
        let ix = PairIndex::new(3, 3);
        let m = f.phi2(ix.index(1, 2), ix.index(2, 1));
        assert_eq!(m, pointed_phase(3, 0, 2 * 2));
    }

    #[test]
    fn identity_monoidal_functor_validates() {
        for c in [discrete_monoidal(&FiniteCommutativeMonoid::cyclic(3)), z3_pointed()] {
            MonoidalFunctorData::identity(&c).validate().unwrap();
        }
    }

    #[test]
    fn coherence_routes_agree_on_all_bracketings() {
        // Mac Lane property on all bracketings of words of length ≤ 4 with a
        // unit letter allowed.
        let c = z3_pointed();
        let mut ctx = DiagramCtx::new(&c);
        ctx.bind_obj("g0", 0);
        ctx.bind_obj("g1", 1);
        ctx.bind_obj("g2", 2);
        let letters =
            vec![ObjExpr::Unit, ObjExpr::gen("g0"), ObjExpr::gen("g1"), ObjExpr::gen("g2")];
        for len in 1..=3usize {
            let mut words = vec![vec![]];
            for _ in 0..len {
                words = words
                    .into_iter()
                    .flat_map(|w: Vec<ObjExpr>| {
                        letters.iter().map(move |l| {
                            let mut w2 = w.clone();
                            w2.push(l.clone());
                            w2
                        })
                    })
                    .collect();
            }
            for w in words {
                let shapes = all_bracketings(&w);
                for s in &shapes {
                    for t in &shapes {
                        let m = canonical_coherence_iso(s, t, &ctx).unwrap();
                        // route via a third bracketing must agree
                        let via = &shapes[0];
                        let m1 = canonical_coherence_iso(s, via, &ctx).unwrap();
                        let m2 = canonical_coherence_iso(via, t, &ctx).unwrap();
                        assert_eq!(m, c.base().compose(m2, m1).unwrap());
                    }
                }
            }
        }
    }

    fn all_bracketings(w: &[ObjExpr]) -> Vec<ObjExpr> {
        if w.len() == 1 {
            return vec![w[0].clone()];
        }
        let mut out = Vec::new();
        for split in 1..w.len() {
            for l in all_bracketings(&w[..split]) {
                for r in all_bracketings(&w[split..]) {
                    out.push(l.clone().tensor(r));
                }
            }
        }
        out
    }
}
