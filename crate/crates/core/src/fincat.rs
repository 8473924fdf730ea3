//! Finite categories, functors, and natural transformations.
//!
//! Morphisms are globally indexed with explicit source/target; hom-sets are
//! derived views. Composition is a partial table over composable pairs, and
//! every law is checked exhaustively at construction.

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type ObjId = usize;
pub type MorId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatError {
    #[error("morphism {mor} references object out of range")]
    MorBoundary { mor: MorId },
    #[error("identity list has {got} entries, expected {expected}")]
    IdentityDimension { expected: usize, got: usize },
    #[error("identity of object {obj} has wrong boundary")]
    IdentityBoundary { obj: ObjId },
    #[error("composition of ({g},{f}) should be defined iff composable")]
    CompositionDomain { g: MorId, f: MorId },
    #[error("composite of ({g},{f}) has wrong boundary")]
    CompositionBoundary { g: MorId, f: MorId },
    #[error("identity law fails at morphism {mor}")]
    IdentityLaw { mor: MorId },
    #[error("associativity fails at ({h},{g},{f})")]
    Associativity { h: MorId, g: MorId, f: MorId },
    #[error("functor object map has wrong dimension")]
    FunctorObjDimension,
    #[error("functor morphism map has wrong dimension")]
    FunctorMorDimension,
    #[error("functor does not preserve boundaries at morphism {mor}")]
    FunctorBoundary { mor: MorId },
    #[error("functor does not preserve identity of object {obj}")]
    FunctorIdentity { obj: ObjId },
    #[error("functor does not preserve composition at ({g},{f})")]
    FunctorComposition { g: MorId, f: MorId },
    #[error("functors are not composable / parallel as required")]
    FunctorMismatch,
    #[error("natural transformation component at object {obj} has wrong boundary")]
    ComponentBoundary { obj: ObjId },
    #[error("naturality square fails at morphism {mor}")]
    Naturality { mor: MorId },
    #[error("morphisms {g} and {f} are not composable")]
    NotComposable { g: MorId, f: MorId },
}

/// Unvalidated category data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawCategory {
    pub objects: usize,
    /// (source, target) per morphism.
    pub morphisms: Vec<(ObjId, ObjId)>,
    /// Identity morphism per object.
    pub identities: Vec<MorId>,
    /// `composition[g * n_mor + f] = Some(g∘f)` when target(f) = source(g).
    pub composition: Vec<Option<MorId>>,
}

/// A validated finite category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: usize,
    morphisms: Vec<(ObjId, ObjId)>,
    identities: Vec<MorId>,
    composition: Vec<Option<MorId>>,
    /// Two-sided inverse per morphism, when it exists.
    inverses: Vec<Option<MorId>>,
}

impl FinCategory {
    pub fn validate(raw: &RawCategory) -> Result<Self, CatError> {
        let n_obj = raw.objects;
        let n_mor = raw.morphisms.len();
        for (m, &(s, t)) in raw.morphisms.iter().enumerate() {
            if s >= n_obj || t >= n_obj {
                return Err(CatError::MorBoundary { mor: m });
            }
        }
        if raw.identities.len() != n_obj {
            return Err(CatError::IdentityDimension { expected: n_obj, got: raw.identities.len() });
        }
        for (o, &i) in raw.identities.iter().enumerate() {
            if i >= n_mor || raw.morphisms[i] != (o, o) {
                return Err(CatError::IdentityBoundary { obj: o });
            }
        }
        if raw.composition.len() != n_mor * n_mor {
            return Err(CatError::CompositionDomain { g: 0, f: 0 });
        }
        let comp = |g: MorId, f: MorId| raw.composition[g * n_mor + f];
        for g in 0..n_mor {
            for f in 0..n_mor {
                let composable = raw.morphisms[f].1 == raw.morphisms[g].0;
                match comp(g, f) {
                    Some(c) => {
                        if !composable || c >= n_mor {
                            return Err(CatError::CompositionDomain { g, f });
                        }
                        if raw.morphisms[c] != (raw.morphisms[f].0, raw.morphisms[g].1) {
                            return Err(CatError::CompositionBoundary { g, f });
                        }
                    }
                    None => {
                        if composable {
                            return Err(CatError::CompositionDomain { g, f });
                        }
                    }
                }
            }
        }
        for m in 0..n_mor {
            let (s, t) = raw.morphisms[m];
            if comp(m, raw.identities[s]) != Some(m) || comp(raw.identities[t], m) != Some(m) {
                return Err(CatError::IdentityLaw { mor: m });
            }
        }
        for h in 0..n_mor {
            for g in 0..n_mor {
                if let Some(hg) = comp(h, g) {
                    for f in 0..n_mor {
                        if let Some(gf) = comp(g, f) {
                            if comp(hg, f) != comp(h, gf) {
                                return Err(CatError::Associativity { h, g, f });
                            }
                        }
                    }
                }
            }
        }
        let mut inverses = vec![None; n_mor];
        for m in 0..n_mor {
            let (s, t) = raw.morphisms[m];
            inverses[m] = (0..n_mor).find(|&n| {
                raw.morphisms[n] == (t, s)
                    && comp(n, m) == Some(raw.identities[s])
                    && comp(m, n) == Some(raw.identities[t])
            });
        }
        Ok(FinCategory {
            objects: n_obj,
            morphisms: raw.morphisms.clone(),
            identities: raw.identities.clone(),
            composition: raw.composition.clone(),
            inverses,
        })
    }

    pub fn raw(&self) -> RawCategory {
        RawCategory {
            objects: self.objects,
            morphisms: self.morphisms.clone(),
            identities: self.identities.clone(),
            composition: self.composition.clone(),
        }
    }

    pub fn num_objects(&self) -> usize {
        self.objects
    }
    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }
    pub fn source(&self, m: MorId) -> ObjId {
        self.morphisms[m].0
    }
    pub fn target(&self, m: MorId) -> ObjId {
        self.morphisms[m].1
    }
    pub fn identity(&self, o: ObjId) -> MorId {
        self.identities[o]
    }
    pub fn is_identity(&self, m: MorId) -> bool {
        self.identities[self.source(m)] == m
    }

    /// `g ∘ f`; errors when not composable.
    pub fn compose(&self, g: MorId, f: MorId) -> Result<MorId, CatError> {
        self.composition[g * self.morphisms.len() + f].ok_or(CatError::NotComposable { g, f })
    }

    pub fn inverse(&self, m: MorId) -> Option<MorId> {
        self.inverses[m]
    }

    pub fn is_iso(&self, m: MorId) -> bool {
        self.inverses[m].is_some()
    }

    pub fn hom(&self, a: ObjId, b: ObjId) -> Vec<MorId> {
        (0..self.morphisms.len()).filter(|&m| self.morphisms[m] == (a, b)).collect()
    }

    /// Composes a chain `[f1, f2, ..., fk]` as `fk ∘ ... ∘ f1`.
    pub fn compose_chain(&self, chain: &[MorId]) -> Result<MorId, CatError> {
        let mut it = chain.iter();
        let first = *it.next().expect("empty chain");
        it.try_fold(first, |acc, &next| self.compose(next, acc))
    }

    /// The discrete category with only identity morphisms.
    pub fn discrete(objects: usize) -> Self {
        let morphisms: Vec<(ObjId, ObjId)> = (0..objects).map(|o| (o, o)).collect();
        let identities: Vec<MorId> = (0..objects).collect();
        let mut composition = vec![None; objects * objects];
        for m in 0..objects {
            composition[m * objects + m] = Some(m);
        }
        FinCategory::validate(&RawCategory {
            objects,
            morphisms,
            identities,
            composition,
        })
        .expect("discrete category is lawful")
    }

    /// The one-object category whose endomorphisms are the given monoid
    /// (composition = monoid operation).
    pub fn one_object(monoid: &crate::monoid::FiniteCommutativeMonoid) -> Self {
        let n = monoid.order();
        let morphisms = vec![(0, 0); n];
        let identities = vec![monoid.unit()];
        let mut composition = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                composition[g * n + f] = Some(monoid.op(g, f));
            }
        }
        FinCategory::validate(&RawCategory { objects: 1, morphisms, identities, composition })
            .expect("one-object category from a monoid is lawful")
    }
}

/// Pairing helper for product categories: fixes the index scheme
/// `(a, b) -> a * dim_b + b` for both objects and morphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairIndex {
    pub left: usize,
    pub right: usize,
}

impl PairIndex {
    pub fn new(left: usize, right: usize) -> Self {
        PairIndex { left, right }
    }
    pub fn index(&self, a: usize, b: usize) -> usize {
        a * self.right + b
    }
    pub fn unindex(&self, i: usize) -> (usize, usize) {
        (i / self.right, i % self.right)
    }
    pub fn len(&self) -> usize {
        self.left * self.right
    }
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Componentwise product of two finite categories.
pub fn product_category(c: &FinCategory, d: &FinCategory) -> FinCategory {
    let obj_ix = PairIndex::new(c.num_objects(), d.num_objects());
    let mor_ix = PairIndex::new(c.num_morphisms(), d.num_morphisms());
    let mut morphisms = Vec::with_capacity(mor_ix.len());
    for fc in 0..c.num_morphisms() {
        for fd in 0..d.num_morphisms() {
            morphisms.push((
                obj_ix.index(c.source(fc), d.source(fd)),
                obj_ix.index(c.target(fc), d.target(fd)),
            ));
        }
    }
    let identities = (0..obj_ix.len())
        .map(|o| {
            let (a, b) = obj_ix.unindex(o);
            mor_ix.index(c.identity(a), d.identity(b))
        })
        .collect();
    let n_mor = mor_ix.len();
    let mut composition = vec![None; n_mor * n_mor];
    for g in 0..n_mor {
        let (gc, gd) = mor_ix.unindex(g);
        for f in 0..n_mor {
            let (fc, fd) = mor_ix.unindex(f);
            if let (Ok(cc), Ok(cd)) = (c.compose(gc, fc), d.compose(gd, fd)) {
                composition[g * n_mor + f] = Some(mor_ix.index(cc, cd));
            }
        }
    }
    FinCategory::validate(&RawCategory {
        objects: obj_ix.len(),
        morphisms,
        identities,
        composition,
    })
    .expect("product of lawful categories is lawful")
}

/// A validated functor between finite categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunctor {
    pub source: FinCategory,
    pub target: FinCategory,
    obj_map: Vec<ObjId>,
    mor_map: Vec<MorId>,
}

impl FinFunctor {
    pub fn new(
        source: FinCategory,
        target: FinCategory,
        obj_map: Vec<ObjId>,
        mor_map: Vec<MorId>,
    ) -> Result<Self, CatError> {
        if obj_map.len() != source.num_objects() || obj_map.iter().any(|&o| o >= target.num_objects())
        {
            return Err(CatError::FunctorObjDimension);
        }
        if mor_map.len() != source.num_morphisms()
            || mor_map.iter().any(|&m| m >= target.num_morphisms())
        {
            return Err(CatError::FunctorMorDimension);
        }
        for m in 0..source.num_morphisms() {
            let (s, t) = (source.source(m), source.target(m));
            if target.source(mor_map[m]) != obj_map[s] || target.target(mor_map[m]) != obj_map[t] {
                return Err(CatError::FunctorBoundary { mor: m });
            }
        }
        for o in 0..source.num_objects() {
            if mor_map[source.identity(o)] != target.identity(obj_map[o]) {
                return Err(CatError::FunctorIdentity { obj: o });
            }
        }
        for g in 0..source.num_morphisms() {
            for f in 0..source.num_morphisms() {
                if let Ok(gf) = source.compose(g, f) {
                    let rhs = target.compose(mor_map[g], mor_map[f])?;
                    if mor_map[gf] != rhs {
                        return Err(CatError::FunctorComposition { g, f });
                    }
                }
            }
        }
        Ok(FinFunctor { source, target, obj_map, mor_map })
    }

    pub fn identity(c: &FinCategory) -> Self {
        FinFunctor {
            source: c.clone(),
            target: c.clone(),
            obj_map: (0..c.num_objects()).collect(),
            mor_map: (0..c.num_morphisms()).collect(),
        }
    }

    pub fn on_obj(&self, o: ObjId) -> ObjId {
        self.obj_map[o]
    }
    pub fn on_mor(&self, m: MorId) -> MorId {
        self.mor_map[m]
    }
    pub fn obj_table(&self) -> &[ObjId] {
        &self.obj_map
    }
    pub fn mor_table(&self) -> &[MorId] {
        &self.mor_map
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FinFunctor) -> Result<FinFunctor, CatError> {
        if other.target != self.source {
            return Err(CatError::FunctorMismatch);
        }
        Ok(FinFunctor {
            source: other.source.clone(),
            target: self.target.clone(),
            obj_map: other.obj_map.iter().map(|&o| self.obj_map[o]).collect(),
            mor_map: other.mor_map.iter().map(|&m| self.mor_map[m]).collect(),
        })
    }
}

/// A validated natural transformation between parallel functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinNatTransform {
    pub source: FinFunctor,
    pub target: FinFunctor,
    components: Vec<MorId>,
}

impl FinNatTransform {
    pub fn new(
        source: FinFunctor,
        target: FinFunctor,
        components: Vec<MorId>,
    ) -> Result<Self, CatError> {
        if source.source != target.source || source.target != target.target {
            return Err(CatError::FunctorMismatch);
        }
        let cat = &source.target;
        let base = &source.source;
        if components.len() != base.num_objects() {
            return Err(CatError::FunctorObjDimension);
        }
        for o in 0..base.num_objects() {
            let c = components[o];
            if c >= cat.num_morphisms()
                || cat.source(c) != source.on_obj(o)
                || cat.target(c) != target.on_obj(o)
            {
                return Err(CatError::ComponentBoundary { obj: o });
            }
        }
        for m in 0..base.num_morphisms() {
            let (s, t) = (base.source(m), base.target(m));
            let lhs = cat.compose(components[t], source.on_mor(m))?;
            let rhs = cat.compose(target.on_mor(m), components[s])?;
            if lhs != rhs {
                return Err(CatError::Naturality { mor: m });
            }
        }
        Ok(FinNatTransform { source, target, components })
    }

    pub fn identity(f: &FinFunctor) -> Self {
        let components =
            (0..f.source.num_objects()).map(|o| f.target.identity(f.on_obj(o))).collect();
        FinNatTransform { source: f.clone(), target: f.clone(), components }
    }

    pub fn component(&self, o: ObjId) -> MorId {
        self.components[o]
    }

    /// Vertical composite `self ∘ other` (other: F ⇒ G, self: G ⇒ H).
    pub fn vcompose(&self, other: &FinNatTransform) -> Result<FinNatTransform, CatError> {
        if other.target != self.source {
            return Err(CatError::FunctorMismatch);
        }
        let cat = &self.source.target;
        let components = (0..self.source.source.num_objects())
            .map(|o| cat.compose(self.components[o], other.components[o]))
            .collect::<Result<_, _>>()?;
        FinNatTransform::new(other.source.clone(), self.target.clone(), components)
    }

    /// Horizontal composite: `self · other` where other: F ⇒ G (C → D) and
    /// self: H ⇒ K (D → E); yields H∘F ⇒ K∘G.
    pub fn hcompose(&self, other: &FinNatTransform) -> Result<FinNatTransform, CatError> {
        if other.source.target != self.source.source {
            return Err(CatError::FunctorMismatch);
        }
        let e = &self.source.target;
        let components = (0..other.source.source.num_objects())
            .map(|o| {
                e.compose(
                    self.target.on_mor(other.component(o)),
                    self.component(other.source.on_obj(o)),
                )
            })
            .collect::<Result<_, _>>()?;
        FinNatTransform::new(
            self.source.compose(&other.source)?,
            self.target.compose(&other.target)?,
            components,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::FiniteCommutativeMonoid;

    #[test]
    fn one_times_c_is_c_sized() {
        let one = FinCategory::discrete(1);
        let c = FinCategory::one_object(&FiniteCommutativeMonoid::cyclic(3));
        let p = product_category(&one, &c);
        assert_eq!(p.num_objects(), c.num_objects());
        assert_eq!(p.num_morphisms(), c.num_morphisms());
    }

    #[test]
    fn z2_squared_has_four_endos() {
        let c = FinCategory::one_object(&FiniteCommutativeMonoid::cyclic(2));
        let p = product_category(&c, &c);
        assert_eq!(p.num_objects(), 1);
        assert_eq!(p.num_morphisms(), 4);
    }

    #[test]
    fn product_counts_multiply() {
        let c = FinCategory::discrete(2);
        let d = FinCategory::discrete(3);
        let p = product_category(&c, &d);
        assert_eq!(p.num_objects(), 6);
        assert_eq!(p.num_morphisms(), c.num_morphisms() * d.num_morphisms());
    }

    #[test]
    fn identity_functor_laws() {
        let c = FinCategory::one_object(&FiniteCommutativeMonoid::cyclic(2));
        let f = FinFunctor::identity(&c);
        assert_eq!(f.compose(&f).unwrap(), f);
    }

    #[test]
    fn functor_composition_associative() {
        let m = FiniteCommutativeMonoid::cyclic(4);
        let c = FinCategory::one_object(&m);
        // doubling endo-functor on Z/4 (x -> 2x is a monoid hom)
        let f = FinFunctor::new(c.clone(), c.clone(), vec![0], vec![0, 2, 0, 2]).unwrap();
        let g = FinFunctor::identity(&c);
        let lhs = f.compose(&g).unwrap().compose(&f).unwrap();
        let rhs = f.compose(&g.compose(&f).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn horizontal_identity_is_identity() {
        let c = FinCategory::one_object(&FiniteCommutativeMonoid::cyclic(3));
        let idf = FinFunctor::identity(&c);
        let idt = FinNatTransform::identity(&idf);
        let h = idt.hcompose(&idt).unwrap();
        assert_eq!(h, FinNatTransform::identity(&idf.compose(&idf).unwrap()));
    }

    #[test]
    fn interchange_on_one_object_instances() {
        // Interchange of natural transformations, evaluated componentwise on
        // one-object carriers where transformations are monoid elements.
        let m = FiniteCommutativeMonoid::cyclic(3);
        let c = FinCategory::one_object(&m);
        let idf = FinFunctor::identity(&c);
        for a in 0..3 {
            for b in 0..3 {
                for x in 0..3 {
                    for y in 0..3 {
                        let al = FinNatTransform::new(idf.clone(), idf.clone(), vec![a]).unwrap();
                        let be = FinNatTransform::new(idf.clone(), idf.clone(), vec![b]).unwrap();
                        let ga = FinNatTransform::new(idf.clone(), idf.clone(), vec![x]).unwrap();
                        let de = FinNatTransform::new(idf.clone(), idf.clone(), vec![y]).unwrap();
                        // (β ∘v α) ∘h (δ ∘v γ) = (β ∘h δ) ∘v (α ∘h γ)
                        let lhs =
                            be.vcompose(&al).unwrap().hcompose(&de.vcompose(&ga).unwrap()).unwrap();
                        let rhs =
                            be.hcompose(&de).unwrap().vcompose(&al.hcompose(&ga).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}
