//! Construction of doubly degenerate structures from braided monoidal
//! categories (all extra structure by identities or canonical coherence),
//! and the shipped desk-scale instance set.

use super::{DdError, DoublyDegenData, IndexedDualPairBlock, MonoidObjectData};
use crate::fincat::PairIndex;
use crate::monoid::{enumerate_cmonoids, FiniteCommutativeMonoid};
use crate::monoidal::{
    concrete_coherence, discrete_monoidal, identity_braiding, one_object_monoidal, pointed_braiding,
    pointed_cyclic, tensor_as_monoidal_functor, unit_dual_pair, BraidingData, FinMonoidalCategory,
    Shape,
};

/// Builds the doubly degenerate structure on a braided monoidal category:
/// ⊠ is the tensor with the braiding interchange, the monoid object is the
/// unit, every dual pair is (U, U, l_U, l_U⁻¹), and all families and
/// structural isomorphisms are canonical coherence.
pub fn from_braided(
    c: &FinMonoidalCategory,
    braiding: &BraidingData,
) -> Result<DoublyDegenData, DdError> {
    let base = c.base();
    let u = c.unit();
    let box_fun = tensor_as_monoidal_functor(c, braiding)?;
    let n = c.num_objects();
    let boxed = |x: usize, y: usize| c.tensor_obj(x, y);

    let monoid = MonoidObjectData {
        carrier: u,
        mult: c.lunit(u),
        unit_mor: base.identity(u),
        iso_to_unit: base.identity(u),
    };

    // families by canonical coherence between the evaluated endpoints
    let coh = |src: Shape, tgt: Shape| -> Result<usize, DdError> {
        Ok(concrete_coherence(c, &src, &tgt)?)
    };
    let mut fa = Vec::with_capacity(n * n * n);
    let mut fad = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                // U⊗((x⊠y)⊠z) → (x⊠(y⊠z))⊗U via the base associator
                fa.push(assoc_family(c, x, y, z, false)?);
                fad.push(assoc_family(c, x, y, z, true)?);
            }
        }
    }
    let mut fl = Vec::with_capacity(n);
    let mut fld = Vec::with_capacity(n);
    let mut fr = Vec::with_capacity(n);
    let mut frd = Vec::with_capacity(n);
    for x in 0..n {
        let ox = || Shape::of(x, c);
        // L⊗(I⊠x) → x⊗L with all block objects U and ⊠ = ⊗
        fl.push(coh(Shape::Unit.tensor(Shape::Unit.tensor(ox())), ox().tensor(Shape::Unit))?);
        // Ld⊗x → (I⊠x)⊗Ld
        fld.push(coh(
            Shape::Unit.tensor(ox()),
            (Shape::Unit.tensor(ox())).tensor(Shape::Unit),
        )?);
        fr.push(coh(Shape::Unit.tensor(ox().tensor(Shape::Unit)), ox().tensor(Shape::Unit))?);
        frd.push(coh(
            Shape::Unit.tensor(ox()),
            (ox().tensor(Shape::Unit)).tensor(Shape::Unit),
        )?);
    }

    let pair = unit_dual_pair(c);
    let block_a = IndexedDualPairBlock { pair: pair.clone(), family: fa, dual_family: fad };
    let block_l = IndexedDualPairBlock { pair: pair.clone(), family: fl, dual_family: fld };
    let block_r = IndexedDualPairBlock { pair, family: fr, dual_family: frd };

    // π, μ, λ, ρ by coherence between their unit-shaped endpoints
    let uu = || Shape::Unit.tensor(Shape::Unit);
    let pi = coh(uu().tensor(Shape::Unit.tensor(uu())), uu())?;
    let mu = coh(uu().tensor(Shape::Unit.tensor(uu())), Shape::Unit)?;
    let lam = coh(uu(), uu())?;
    let rho = coh(uu(), uu())?;
    let _ = (u, boxed);

    Ok(DoublyDegenData {
        cat: c.clone(),
        box_fun,
        monoid,
        block_a,
        block_l,
        block_r,
        pi,
        mu,
        lam,
        rho,
    })
}

/// A-block family components when the blocks sit at the unit and ⊠ = ⊗:
/// built from the base associator with unit padding.
fn assoc_family(
    c: &FinMonoidalCategory,
    x: usize,
    y: usize,
    z: usize,
    dual: bool,
) -> Result<usize, DdError> {
    let base = c.base();
    let (from, to, middle) = if dual {
        (c.tensor_obj(x, c.tensor_obj(y, z)), c.tensor_obj(c.tensor_obj(x, y), z), c.assoc_inv(x, y, z))
    } else {
        (c.tensor_obj(c.tensor_obj(x, y), z), c.tensor_obj(x, c.tensor_obj(y, z)), c.assoc(x, y, z))
    };
    let strip = c.lunit(from);
    let pad = c.runit_inv(to);
    Ok(base
        .compose(pad, base.compose(middle, strip).expect("composable"))
        .expect("composable"))
}

/// The braiding encoded in a structure's ⊠ constraint, read off the
/// middle-four interchange at unit-padded pairs. Defined for structures
/// whose ⊠ agrees with ⊗ on carriers (the restricted class).
pub fn braiding_of_box_constraint(data: &DoublyDegenData) -> Result<BraidingData, DdError> {
    let c = &data.cat;
    let base = c.base();
    let u = c.unit();
    let n = c.num_objects();
    let obj_ix = PairIndex::new(n, n);
    let mut components = Vec::with_capacity(n * n);
    for a in 0..n {
        for bb in 0..n {
            let phi = data.box_fun.phi2(obj_ix.index(u, a), obj_ix.index(bb, u));
            let src = Shape::of(a, c).tensor(Shape::of(bb, c));
            let padded_src = (Shape::Unit.tensor(Shape::of(a, c)))
                .tensor(Shape::of(bb, c).tensor(Shape::Unit));
            let pad = concrete_coherence(c, &src, &padded_src)?;
            let padded_tgt = (Shape::Unit.tensor(Shape::of(bb, c)))
                .tensor(Shape::of(a, c).tensor(Shape::Unit));
            let tgt = Shape::of(bb, c).tensor(Shape::of(a, c));
            let strip = concrete_coherence(c, &padded_tgt, &tgt)?;
            let total =
                base.compose(strip, base.compose(phi, pad).expect("composable")).expect("composable");
            components.push(total);
        }
    }
    Ok(BraidingData { components })
}

/// A shipped instance: a braided carrier with its doubly degenerate image.
pub struct ShippedInstance {
    pub name: String,
    pub cat: FinMonoidalCategory,
    pub braiding: BraidingData,
    pub data: DoublyDegenData,
}

/// The shipped desk-scale instance set: discrete symmetric categories on the
/// commutative monoids of order ≤ 4, the one-object category with Z/2
/// endomorphisms, and the pointed Z/3 category with its bilinear braiding.
pub fn shipped_instances() -> Result<Vec<ShippedInstance>, DdError> {
    let mut out = Vec::new();
    for order in 1..=4 {
        for (k, m) in enumerate_cmonoids(order)
            .expect("order within cap")
            .into_iter()
            .enumerate()
        {
            let cat = discrete_monoidal(&m);
            let braiding = identity_braiding(&cat).expect("commutative carrier");
            let data = from_braided(&cat, &braiding)?;
            out.push(ShippedInstance {
                name: format!("discrete-{order}-{k}"),
                cat,
                braiding,
                data,
            });
        }
    }
    {
        let cat = one_object_monoidal(&FiniteCommutativeMonoid::cyclic(2));
        let braiding = identity_braiding(&cat).expect("one-object carrier");
        let data = from_braided(&cat, &braiding)?;
        out.push(ShippedInstance { name: "end-z2".into(), cat, braiding, data });
    }
    {
        let cat = pointed_cyclic(3);
        let braiding = pointed_braiding(3);
        let data = from_braided(&cat, &braiding)?;
        out.push(ShippedInstance { name: "pointed-z3".into(), cat, braiding, data });
    }
    Ok(out)
}

/// The three reference carriers named in the comparison criteria.
pub fn reference_instances() -> Result<Vec<ShippedInstance>, DdError> {
    let mut out = Vec::new();
    {
        let cat = discrete_monoidal(&FiniteCommutativeMonoid::cyclic(4));
        let braiding = identity_braiding(&cat).expect("commutative carrier");
        let data = from_braided(&cat, &braiding)?;
        out.push(ShippedInstance { name: "discrete-z4".into(), cat, braiding, data });
    }
    {
        let cat = one_object_monoidal(&FiniteCommutativeMonoid::cyclic(2));
        let braiding = identity_braiding(&cat).expect("one-object carrier");
        let data = from_braided(&cat, &braiding)?;
        out.push(ShippedInstance { name: "end-z2".into(), cat, braiding, data });
    }
    {
        let cat = pointed_cyclic(3);
        let braiding = pointed_braiding(3);
        let data = from_braided(&cat, &braiding)?;
        out.push(ShippedInstance { name: "pointed-z3".into(), cat, braiding, data });
    }
    Ok(out)
}
