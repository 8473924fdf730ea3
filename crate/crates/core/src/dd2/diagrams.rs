//! The machine-readable library of the doubly degenerate axiom diagrams:
//! block-compatibility axioms, the three tricategory axioms, the two functor
//! axioms, the three transformation axioms, the modification and perturbation
//! axioms. Each diagram is a pair of morphism expressions over named
//! generator slots; every unmarked arrow of the printed diagrams is resolved
//! here, once, into coherence, ⊠-constraints, family components, and
//! dual-pair cells.

use crate::monoidal::{infer_boundaries, FamilySig, GenSig, MorExpr, ObjExpr};
use std::collections::BTreeMap;

/// One diagram: an equation `lhs = rhs` between composites, evaluated for
/// every tuple of objects bound to the named index slots.
#[derive(Debug, Clone)]
pub struct Diagram {
    pub id: String,
    pub indices: Vec<String>,
    pub lhs: MorExpr,
    pub rhs: MorExpr,
}

/// Word-based composite builder: the current state is a list of ⊗-factors
/// (right-associated); each step rewrites a contiguous factor segment.
pub struct Path {
    word: Vec<ObjExpr>,
    expr: Option<MorExpr>,
}

fn rassoc(items: &[ObjExpr]) -> ObjExpr {
    ObjExpr::word(items.to_vec())
}

impl Path {
    pub fn new(word: Vec<ObjExpr>) -> Self {
        Path { word, expr: None }
    }

    pub fn word(&self) -> &[ObjExpr] {
        &self.word
    }

    /// Applies `step` (whose boundaries must be the right-associated segment
    /// `word[i..j]` and the right-associated `new`) inside the current word.
    pub fn apply(&mut self, i: usize, j: usize, step: MorExpr, new: Vec<ObjExpr>) {
        assert!(i <= j && j <= self.word.len(), "segment out of range");
        let pre = rassoc(&self.word[..i]);
        let post = rassoc(&self.word[j..]);
        let seg = rassoc(&self.word[i..j]);
        let mut new_word: Vec<ObjExpr> = self.word[..i].to_vec();
        new_word.extend(new.iter().cloned());
        new_word.extend(self.word[j..].iter().cloned());
        let new_seg = rassoc(&new);
        let c_in = MorExpr::coh(
            rassoc(&self.word),
            pre.clone().tensor(seg.tensor(post.clone())),
        );
        let mid = MorExpr::tensor(
            MorExpr::id(pre.clone()),
            MorExpr::tensor(step, MorExpr::id(post.clone())),
        );
        let c_out = MorExpr::coh(pre.tensor(new_seg.tensor(post)), rassoc(&new_word));
        let wrapped = MorExpr::chain(vec![c_in, mid, c_out]);
        self.expr = Some(match self.expr.take() {
            None => wrapped,
            Some(prev) => MorExpr::comp(wrapped, prev),
        });
        self.word = new_word;
    }

    /// Replaces factors `i..j` by their right-associated fusion (a no-op).
    pub fn fuse(&mut self, i: usize, j: usize) {
        let seg = rassoc(&self.word[i..j]);
        self.apply(i, j, MorExpr::id(seg.clone()), vec![seg]);
    }

    /// Finishes the path, asserting the expected final word.
    pub fn finish(self, expect: &[ObjExpr]) -> MorExpr {
        assert_eq!(self.word, expect, "path ends at an unexpected word");
        self.expr.expect("path with at least one step")
    }
}

// ---- shared expression shorthands ----

fn g(name: &str) -> ObjExpr {
    ObjExpr::gen(name)
}
fn u() -> ObjExpr {
    ObjExpr::Unit
}
fn b(l: ObjExpr, r: ObjExpr) -> ObjExpr {
    l.boxed(r)
}
fn t(l: ObjExpr, r: ObjExpr) -> ObjExpr {
    l.tensor(r)
}
fn mg(name: &str) -> MorExpr {
    MorExpr::gen(name)
}
fn mid(o: ObjExpr) -> MorExpr {
    MorExpr::id(o)
}
fn coh(src: ObjExpr, tgt: ObjExpr) -> MorExpr {
    MorExpr::coh(src, tgt)
}
fn boxm(f: MorExpr, gm: MorExpr) -> MorExpr {
    MorExpr::boxed(f, gm)
}
fn fam(name: &str, ix: Vec<ObjExpr>) -> MorExpr {
    MorExpr::family(name, ix)
}
fn inv(f: MorExpr) -> MorExpr {
    MorExpr::inv(f)
}
fn chain(steps: Vec<MorExpr>) -> MorExpr {
    MorExpr::chain(steps)
}

/// φ₂-merge of a list of ⊠-blocks, right-associated:
/// [a1·b1]⊗(...⊗[ak·bk]) → [(a1⊗...⊗ak)·(b1⊗...⊗bk)].
/// Returns the step and the merged slot pair.
fn box_merge(pairs: &[(ObjExpr, ObjExpr)]) -> (MorExpr, (ObjExpr, ObjExpr)) {
    assert!(!pairs.is_empty());
    if pairs.len() == 1 {
        let (a, bb) = pairs[0].clone();
        return (mid(b(a.clone(), bb.clone())), (a, bb));
    }
    let (a1, b1) = pairs[0].clone();
    let (rest, (ra, rb)) = box_merge(&pairs[1..]);
    let step = chain(vec![
        MorExpr::tensor(mid(b(a1.clone(), b1.clone())), rest),
        MorExpr::BoxTensor { x1: a1.clone(), y1: b1.clone(), x2: ra.clone(), y2: rb.clone(), inv: false },
    ]);
    (step, (t(a1, ra), t(b1, rb)))
}

/// Inverse of `box_merge`.
fn box_split(pairs: &[(ObjExpr, ObjExpr)]) -> (MorExpr, (ObjExpr, ObjExpr)) {
    let (m, merged) = box_merge(pairs);
    (inv(m), merged)
}

/// [a1·b1]⊗[a2·b2] → [a2·b2]⊗[a1·b1]; lawful when each slot pair contains
/// the unit, so the in-slot reorderings are coherence.
fn swap_blocks(a1: ObjExpr, b1: ObjExpr, a2: ObjExpr, b2: ObjExpr) -> MorExpr {
    chain(vec![
        MorExpr::BoxTensor { x1: a1.clone(), y1: b1.clone(), x2: a2.clone(), y2: b2.clone(), inv: false },
        boxm(
            coh(t(a1.clone(), a2.clone()), t(a2.clone(), a1.clone())),
            coh(t(b1.clone(), b2.clone()), t(b2.clone(), b1.clone())),
        ),
        MorExpr::BoxTensor { x1: a2, y1: b2, x2: a1, y2: b1, inv: true },
    ])
}

/// [a1·b1]⊗[a2·b2] → U via a merge, in-slot cancellations, and φ₀⁻¹.
fn box_pair_cancel(
    a1: ObjExpr,
    b1: ObjExpr,
    a2: ObjExpr,
    b2: ObjExpr,
    left: MorExpr,  // a1⊗a2 → U
    right: MorExpr, // b1⊗b2 → U
) -> MorExpr {
    let (m, _) = box_merge(&[(a1, b1), (a2, b2)]);
    chain(vec![m, boxm(left, right), MorExpr::BoxUnit { inv: true }])
}

/// U → [U·U]⊗...: φ₀ then an in-slot injection.
fn box_pair_insert(
    a1: ObjExpr,
    b1: ObjExpr,
    a2: ObjExpr,
    b2: ObjExpr,
    left: MorExpr,
    right: MorExpr,
) -> MorExpr {
    inv(box_pair_cancel(a1, b1, a2, b2, inv(left), inv(right)))
}

// cancellation cells built from the A-block dual pair
fn xi1() -> MorExpr {
    // [A·U]⊗[Ad·U] → U
    box_pair_cancel(g("A"), u(), g("Ad"), u(), mg("epsA"), coh(t(u(), u()), u()))
}
fn xi2_inv() -> MorExpr {
    // U → [U·A]⊗[U·Ad]
    box_pair_insert(u(), g("A"), u(), g("Ad"), coh(u(), t(u(), u())), inv(mg("epsA")))
}
fn xi3() -> MorExpr {
    // [U·Ad]⊗[U·A] → U
    box_pair_cancel(u(), g("Ad"), u(), g("A"), coh(t(u(), u()), u()), inv(mg("etaA")))
}

/// The π-mate θ: Ad ⊗ ([U·A] ⊗ A) → A ⊗ [Ad·U], built with a ξ-insertion,
/// a direct π, and an η-cancellation.
fn pi_mate_theta() -> MorExpr {
    let mut p = Path::new(vec![g("Ad"), b(u(), g("A")), g("A")]);
    // pad with [A·U]⊗[Ad·U]
    p.apply(3, 3, inv(xi1()), vec![b(g("A"), u()), b(g("Ad"), u())]);
    // π on ([U·A], A, [A·U])
    p.apply(1, 4, mg("pi"), vec![g("A"), g("A")]);
    // cancel Ad with the first A
    p.apply(0, 2, inv(mg("etaA")), vec![]);
    p.finish(&[g("A"), b(g("Ad"), u())])
}

/// The reverse bridge Ad ⊗ [U·Ad] → [A·U] ⊗ Ad ⊗ Ad (a π⁻¹-mate); the
/// printed axiom arrow is its inverse.
fn pi_bridge_rev() -> MorExpr {
    let mut p = Path::new(vec![g("Ad"), b(u(), g("Ad"))]);
    // append A·Ad twice
    p.apply(2, 2, inv(mg("epsA")), vec![g("A"), g("Ad")]);
    p.apply(3, 3, inv(mg("epsA")), vec![g("A"), g("Ad")]);
    // π⁻¹ on (A, A)
    p.apply(2, 4, inv(mg("pi")), vec![b(u(), g("A")), g("A"), b(g("A"), u())]);
    // cancel [U·Ad]⊗[U·A]
    p.apply(1, 3, xi3(), vec![]);
    // cancel Ad⊗A
    p.apply(0, 2, inv(mg("etaA")), vec![]);
    p.finish(&[b(g("A"), u()), g("Ad"), g("Ad")])
}

/// A ⊗-unit-word collapse inside a ⊠ slot: [w·x] → [U-collapsed ...]; just a
/// Box2 of coherences.
fn slot_coh(from_l: ObjExpr, to_l: ObjExpr, from_r: ObjExpr, to_r: ObjExpr) -> MorExpr {
    boxm(coh(from_l, to_l), coh(from_r, to_r))
}

// ============================ A.1 =====================================

/// Block-compatibility and unit diagrams for the six dual-pair sides, plus
/// the three tricategory axioms.
pub fn a1_diagrams() -> Vec<Diagram> {
    let mut out = Vec::new();
    let x1 = g("X1");
    let y1 = g("Y1");
    let z1 = g("Z1");
    let x2 = g("X2");
    let y2 = g("Y2");
    let z2 = g("Z2");

    // --- A block compat (6 indices) ---
    {
        let blk = |x: &ObjExpr, y: &ObjExpr, z: &ObjExpr| b(b(x.clone(), y.clone()), z.clone());
        let start = vec![g("A"), blk(&x1, &y1, &z1), blk(&x2, &y2, &z2)];
        // lhs: family twice, then merge
        let mut p = Path::new(start.clone());
        p.apply(0, 2, fam("fA", vec![x1.clone(), y1.clone(), z1.clone()]), vec![
            b(x1.clone(), b(y1.clone(), z1.clone())),
            g("A"),
        ]);
        p.apply(1, 3, fam("fA", vec![x2.clone(), y2.clone(), z2.clone()]), vec![
            b(x2.clone(), b(y2.clone(), z2.clone())),
            g("A"),
        ]);
        let (m, merged) = box_merge(&[
            (x1.clone(), b(y1.clone(), z1.clone())),
            (x2.clone(), b(y2.clone(), z2.clone())),
        ]);
        p.apply(0, 2, m, vec![b(merged.0, merged.1)]);
        // inner right slot: [Y1·Z1]⊗[Y2·Z2] → [(Y1Y2)·(Z1Z2)]
        let (im, imerged) = box_merge(&[(y1.clone(), z1.clone()), (y2.clone(), z2.clone())]);
        p.apply(
            0,
            1,
            boxm(mid(t(x1.clone(), x2.clone())), im),
            vec![b(t(x1.clone(), x2.clone()), b(imerged.0, imerged.1))],
        );
        let lhs_end = p.word().to_vec();
        let lhs = p.finish(&lhs_end);

        // rhs: merge first, then one family component at the product indices
        let mut q = Path::new(start);
        let (m1, _) = box_merge(&[
            (b(x1.clone(), y1.clone()), z1.clone()),
            (b(x2.clone(), y2.clone()), z2.clone()),
        ]);
        q.apply(1, 3, m1, vec![b(
            t(b(x1.clone(), y1.clone()), b(x2.clone(), y2.clone())),
            t(z1.clone(), z2.clone()),
        )]);
        let (im2, _) = box_merge(&[(x1.clone(), y1.clone()), (x2.clone(), y2.clone())]);
        q.apply(
            1,
            2,
            boxm(im2, mid(t(z1.clone(), z2.clone()))),
            vec![b(
                b(t(x1.clone(), x2.clone()), t(y1.clone(), y2.clone())),
                t(z1.clone(), z2.clone()),
            )],
        );
        q.apply(
            0,
            2,
            fam("fA", vec![
                t(x1.clone(), x2.clone()),
                t(y1.clone(), y2.clone()),
                t(z1.clone(), z2.clone()),
            ]),
            vec![
                b(
                    t(x1.clone(), x2.clone()),
                    b(t(y1.clone(), y2.clone()), t(z1.clone(), z2.clone())),
                ),
                g("A"),
            ],
        );
        let rhs = q.finish(&lhs_end);
        out.push(Diagram {
            id: "dd.block_a.compat".into(),
            indices: vec!["X1".into(), "Y1".into(), "Z1".into(), "X2".into(), "Y2".into(), "Z2".into()],
            lhs,
            rhs,
        });
    }

    // --- A block unit diagram ---
    {
        // A ≅ A⊗U → A⊗[(U·U)·U] → [U·(U·U)]⊗A   vs   A ≅ U⊗A → [U·(U·U)]⊗A
        let u3_left = chain(vec![
            MorExpr::BoxUnit { inv: false },
            boxm(MorExpr::BoxUnit { inv: false }, mid(u())),
        ]); // U → [(U·U)·U]
        let u3_right = chain(vec![
            MorExpr::BoxUnit { inv: false },
            boxm(mid(u()), MorExpr::BoxUnit { inv: false }),
        ]); // U → [U·(U·U)]
        let mut p = Path::new(vec![g("A")]);
        p.apply(1, 1, u3_left, vec![b(b(u(), u()), u())]);
        p.apply(0, 2, fam("fA", vec![u(), u(), u()]), vec![b(u(), b(u(), u())), g("A")]);
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);
        let mut q = Path::new(vec![g("A")]);
        q.apply(0, 0, u3_right, vec![b(u(), b(u(), u()))]);
        let rhs = q.finish(&endw);
        out.push(Diagram { id: "dd.block_a.unit".into(), indices: vec![], lhs, rhs });
    }

    // --- Ad block compat (mirror of A) ---
    {
        let blk = |x: &ObjExpr, y: &ObjExpr, z: &ObjExpr| b(x.clone(), b(y.clone(), z.clone()));
        let start = vec![g("Ad"), blk(&x1, &y1, &z1), blk(&x2, &y2, &z2)];
        let mut p = Path::new(start.clone());
        p.apply(0, 2, fam("fAd", vec![x1.clone(), y1.clone(), z1.clone()]), vec![
            b(b(x1.clone(), y1.clone()), z1.clone()),
            g("Ad"),
        ]);
        p.apply(1, 3, fam("fAd", vec![x2.clone(), y2.clone(), z2.clone()]), vec![
            b(b(x2.clone(), y2.clone()), z2.clone()),
            g("Ad"),
        ]);
        let (m, _) = box_merge(&[
            (b(x1.clone(), y1.clone()), z1.clone()),
            (b(x2.clone(), y2.clone()), z2.clone()),
        ]);
        p.apply(0, 2, m, vec![b(
            t(b(x1.clone(), y1.clone()), b(x2.clone(), y2.clone())),
            t(z1.clone(), z2.clone()),
        )]);
        let (im, _) = box_merge(&[(x1.clone(), y1.clone()), (x2.clone(), y2.clone())]);
        p.apply(
            0,
            1,
            boxm(im, mid(t(z1.clone(), z2.clone()))),
            vec![b(
                b(t(x1.clone(), x2.clone()), t(y1.clone(), y2.clone())),
                t(z1.clone(), z2.clone()),
            )],
        );
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);

        let mut q = Path::new(start);
        let (m1, _) = box_merge(&[
            (x1.clone(), b(y1.clone(), z1.clone())),
            (x2.clone(), b(y2.clone(), z2.clone())),
        ]);
        q.apply(1, 3, m1, vec![b(
            t(x1.clone(), x2.clone()),
            t(b(y1.clone(), z1.clone()), b(y2.clone(), z2.clone())),
        )]);
        let (im2, _) = box_merge(&[(y1.clone(), z1.clone()), (y2.clone(), z2.clone())]);
        q.apply(
            1,
            2,
            boxm(mid(t(x1.clone(), x2.clone())), im2),
            vec![b(
                t(x1.clone(), x2.clone()),
                b(t(y1.clone(), y2.clone()), t(z1.clone(), z2.clone())),
            )],
        );
        q.apply(
            0,
            2,
            fam("fAd", vec![
                t(x1.clone(), x2.clone()),
                t(y1.clone(), y2.clone()),
                t(z1.clone(), z2.clone()),
            ]),
            vec![
                b(
                    b(t(x1.clone(), x2.clone()), t(y1.clone(), y2.clone())),
                    t(z1.clone(), z2.clone()),
                ),
                g("Ad"),
            ],
        );
        let rhs = q.finish(&endw);
        out.push(Diagram {
            id: "dd.block_a_dual.compat".into(),
            indices: vec!["X1".into(), "Y1".into(), "Z1".into(), "X2".into(), "Y2".into(), "Z2".into()],
            lhs,
            rhs,
        });
    }

    // --- Ad unit diagram ---
    {
        let u3_left = chain(vec![
            MorExpr::BoxUnit { inv: false },
            boxm(MorExpr::BoxUnit { inv: false }, mid(u())),
        ]);
        let u3_right = chain(vec![
            MorExpr::BoxUnit { inv: false },
            boxm(mid(u()), MorExpr::BoxUnit { inv: false }),
        ]);
        let mut p = Path::new(vec![g("Ad")]);
        p.apply(1, 1, u3_right, vec![b(u(), b(u(), u()))]);
        p.apply(0, 2, fam("fAd", vec![u(), u(), u()]), vec![b(b(u(), u()), u()), g("Ad")]);
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);
        let mut q = Path::new(vec![g("Ad")]);
        q.apply(0, 0, u3_left, vec![b(b(u(), u()), u())]);
        let rhs = q.finish(&endw);
        out.push(Diagram { id: "dd.block_a_dual.unit".into(), indices: vec![], lhs, rhs });
    }

    // --- L and R blocks (compat with 2 indices + unit) ---
    out.extend(lr_block_diagrams("dd.block_l", "L", "fL", true, false));
    out.extend(lr_block_diagrams("dd.block_l_dual", "Ld", "fLd", true, true));
    out.extend(lr_block_diagrams("dd.block_r", "R", "fR", false, false));
    out.extend(lr_block_diagrams("dd.block_r_dual", "Rd", "fRd", false, true));

    // --- tricategory axiom 1 (π) ---
    out.push(a1_axiom1());
    // --- tricategory axiom 2 (λ, μ, π) ---
    out.push(a1_axiom2());
    // --- tricategory axiom 3 (ρ, μ, π) ---
    out.push(a1_axiom3());

    out
}

/// Compat/unit diagrams for the L/R blocks and their duals.
/// Primal families: fL[X]: L⊗[I·X] → X⊗L, fR[X]: R⊗[X·I] → X⊗R.
/// Dual families: fLd[X]: Ld⊗X → [I·X]⊗Ld, fRd[X]: Rd⊗X → [X·I]⊗Rd.
fn lr_block_diagrams(
    prefix: &str,
    obj: &str,
    famname: &str,
    left_unit: bool,
    dual: bool,
) -> Vec<Diagram> {
    let x1 = g("X1");
    let x2 = g("X2");
    let blk = |x: &ObjExpr| if left_unit { b(g("I"), x.clone()) } else { b(x.clone(), g("I")) };
    let mut out = Vec::new();

    if !dual {
        // compat: (O⊗blk(X1))⊗blk(X2) → (X1⊗X2)⊗O two ways
        let start = vec![g(obj), blk(&x1), blk(&x2)];
        let mut p = Path::new(start.clone());
        p.apply(0, 2, fam(famname, vec![x1.clone()]), vec![x1.clone(), g(obj)]);
        p.apply(1, 3, fam(famname, vec![x2.clone()]), vec![x2.clone(), g(obj)]);
        p.fuse(0, 2);
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);

        let mut q = Path::new(start);
        let (m, merged) = if left_unit {
            box_merge(&[(g("I"), x1.clone()), (g("I"), x2.clone())])
        } else {
            box_merge(&[(x1.clone(), g("I")), (x2.clone(), g("I"))])
        };
        q.apply(1, 3, m, vec![b(merged.0, merged.1)]);
        // multiply the I's
        let mstep = if left_unit {
            boxm(mg("imult"), mid(t(x1.clone(), x2.clone())))
        } else {
            boxm(mid(t(x1.clone(), x2.clone())), mg("imult"))
        };
        q.apply(1, 2, mstep, vec![blk(&t(x1.clone(), x2.clone()))]);
        q.apply(0, 2, fam(famname, vec![t(x1.clone(), x2.clone())]), vec![
            t(x1.clone(), x2.clone()),
            g(obj),
        ]);
        let rhs = q.finish(&endw);
        out.push(Diagram {
            id: format!("{prefix}.compat"),
            indices: vec!["X1".into(), "X2".into()],
            lhs,
            rhs,
        });

        // unit: fam[U] ∘ (1⊗(U→blk(U))) ∘ r⁻¹ = l⁻¹ : O → U⊗O
        let inj = if left_unit {
            chain(vec![MorExpr::BoxUnit { inv: false }, boxm(mg("iunit"), mid(u()))])
        } else {
            chain(vec![MorExpr::BoxUnit { inv: false }, boxm(mid(u()), mg("iunit"))])
        }; // U → blk(U)
        let mut p = Path::new(vec![g(obj)]);
        p.apply(1, 1, inj, vec![blk(&u())]);
        p.apply(0, 2, fam(famname, vec![u()]), vec![u(), g(obj)]);
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);
        let rhs = coh(g(obj), t(u(), g(obj)));
        out.push(Diagram { id: format!("{prefix}.unit"), indices: vec![], lhs, rhs });
    } else {
        // dual compat: (Od⊗X1)⊗X2 → blk(X1⊗X2)⊗Od two ways
        let start = vec![g(obj), x1.clone(), x2.clone()];
        let mut p = Path::new(start.clone());
        p.apply(0, 2, fam(famname, vec![x1.clone()]), vec![blk(&x1), g(obj)]);
        p.apply(1, 3, fam(famname, vec![x2.clone()]), vec![blk(&x2), g(obj)]);
        let (m, merged) = if left_unit {
            box_merge(&[(g("I"), x1.clone()), (g("I"), x2.clone())])
        } else {
            box_merge(&[(x1.clone(), g("I")), (x2.clone(), g("I"))])
        };
        p.apply(0, 2, m, vec![b(merged.0, merged.1)]);
        let mstep = if left_unit {
            boxm(mg("imult"), mid(t(x1.clone(), x2.clone())))
        } else {
            boxm(mid(t(x1.clone(), x2.clone())), mg("imult"))
        };
        p.apply(0, 1, mstep, vec![blk(&t(x1.clone(), x2.clone()))]);
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);

        let mut q = Path::new(start);
        q.apply(0, 3, fam(famname, vec![t(x1.clone(), x2.clone())]), vec![
            blk(&t(x1.clone(), x2.clone())),
            g(obj),
        ]);
        let rhs = q.finish(&endw);
        out.push(Diagram {
            id: format!("{prefix}.compat"),
            indices: vec!["X1".into(), "X2".into()],
            lhs,
            rhs,
        });

        // dual unit: fam[U] ∘ r⁻¹-style = (inj⊗1) ∘ l⁻¹-style
        let inj = if left_unit {
            chain(vec![MorExpr::BoxUnit { inv: false }, boxm(mg("iunit"), mid(u()))])
        } else {
            chain(vec![MorExpr::BoxUnit { inv: false }, boxm(mid(u()), mg("iunit"))])
        };
        let mut p = Path::new(vec![g(obj)]);
        p.apply(1, 1, coh(u(), u()), vec![u()]);
        p.apply(0, 2, fam(famname, vec![u()]), vec![blk(&u()), g(obj)]);
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);
        let mut q = Path::new(vec![g(obj)]);
        q.apply(0, 0, inj, vec![blk(&u())]);
        let rhs = q.finish(&endw);
        out.push(Diagram { id: format!("{prefix}.unit"), indices: vec![], lhs, rhs });
    }
    out
}

fn a1_axiom1() -> Diagram {
    let start = vec![
        b(u(), b(u(), g("A"))),
        b(u(), g("A")),
        g("A"),
        b(b(u(), g("A")), u()),
        b(g("A"), u()),
        b(b(g("A"), u()), u()),
    ];
    // π wrapped under [U·-]
    let pi_left_wrapped = {
        let (m, merged) = box_merge(&[
            (u(), b(u(), g("A"))),
            (u(), g("A")),
            (u(), b(g("A"), u())),
        ]);
        chain(vec![
            m,
            boxm(coh(merged.0, u()), mg("pi")),
            boxm(coh(u(), t(u(), u())), mid(t(g("A"), g("A")))),
            box_split(&[(u(), g("A")), (u(), g("A"))]).0,
        ])
    };
    // π wrapped under [-·U]
    let pi_right_wrapped = {
        let (m, merged) = box_merge(&[
            (b(u(), g("A")), u()),
            (g("A"), u()),
            (b(g("A"), u()), u()),
        ]);
        chain(vec![
            m,
            boxm(mg("pi"), coh(merged.1, u())),
            boxm(mid(t(g("A"), g("A"))), coh(u(), t(u(), u()))),
            box_split(&[(g("A"), u()), (g("A"), u())]).0,
        ])
    };

    let mut p = Path::new(start.clone());
    p.apply(2, 4, fam("fA", vec![u(), g("A"), u()]), vec![b(u(), b(g("A"), u())), g("A")]);
    p.apply(0, 3, pi_left_wrapped, vec![b(u(), g("A")), b(u(), g("A"))]);
    p.apply(1, 4, mg("pi"), vec![g("A"), g("A")]);
    p.apply(
        2,
        4,
        chain(vec![
            fam("fA", vec![g("A"), u(), u()]),
            MorExpr::tensor(boxm(mid(g("A")), MorExpr::BoxUnit { inv: true }), mid(g("A"))),
        ]),
        vec![b(g("A"), u()), g("A")],
    );
    p.apply(0, 3, mg("pi"), vec![g("A"), g("A")]);
    let endw = p.word().to_vec();
    let lhs = p.finish(&endw);

    let mut q = Path::new(start);
    q.apply(3, 6, pi_right_wrapped, vec![b(g("A"), u()), b(g("A"), u())]);
    q.apply(1, 4, mg("pi"), vec![g("A"), g("A")]);
    q.apply(0, 2, inv(fam("fA", vec![u(), u(), g("A")])), vec![g("A"), b(b(u(), u()), g("A"))]);
    q.apply(1, 2, boxm(MorExpr::BoxUnit { inv: true }, mid(g("A"))), vec![b(u(), g("A"))]);
    q.apply(1, 4, mg("pi"), vec![g("A"), g("A")]);
    let rhs = q.finish(&endw);
    Diagram { id: "dd.axiom1".into(), indices: vec![], lhs, rhs }
}

fn a1_axiom2() -> Diagram {
    let start = vec![
        g("A"),
        b(b(u(), g("L")), u()),
        b(g("A"), u()),
        b(b(g("Rd"), u()), u()),
    ];
    // top
    let mut p = Path::new(start.clone());
    p.apply(0, 2, fam("fA", vec![u(), g("L"), u()]), vec![b(u(), b(g("L"), u())), g("A")]);
    p.apply(0, 1, boxm(mid(u()), mg("lam")), vec![b(u(), t(g("L"), g("A")))]);
    p.apply(
        0,
        1,
        chain(vec![
            boxm(coh(u(), t(u(), u())), mid(t(g("L"), g("A")))),
            box_split(&[(u(), g("L")), (u(), g("A"))]).0,
        ]),
        vec![b(u(), g("L")), b(u(), g("A"))],
    );
    p.apply(1, 4, mg("pi"), vec![g("A"), g("A")]);
    p.apply(
        2,
        4,
        chain(vec![
            fam("fA", vec![g("Rd"), u(), u()]),
            MorExpr::tensor(boxm(mid(g("Rd")), MorExpr::BoxUnit { inv: true }), mid(g("A"))),
        ]),
        vec![b(g("Rd"), u()), g("A")],
    );
    p.apply(0, 3, mg("mu"), vec![]);
    let endw = p.word().to_vec();
    let lhs = p.finish(&endw);

    // left
    let mut q = Path::new(start);
    let (m, merged) = box_merge(&[
        (b(u(), g("L")), u()),
        (g("A"), u()),
        (b(g("Rd"), u()), u()),
    ]);
    q.apply(1, 4, m, vec![b(merged.0.clone(), merged.1.clone())]);
    q.apply(1, 2, boxm(mid(merged.0.clone()), coh(merged.1, u())), vec![b(merged.0.clone(), u())]);
    q.apply(1, 2, boxm(mg("mu"), mid(u())), vec![b(u(), u())]);
    q.apply(1, 2, MorExpr::BoxUnit { inv: true }, vec![]);
    let rhs = q.finish(&endw);
    Diagram { id: "dd.axiom2".into(), indices: vec![], lhs, rhs }
}

fn a1_axiom3() -> Diagram {
    let start = vec![
        b(u(), b(u(), g("L"))),
        b(u(), g("A")),
        b(u(), b(g("Rd"), u())),
        g("A"),
    ];
    let mut p = Path::new(start.clone());
    p.apply(2, 4, inv(fam("fA", vec![u(), g("Rd"), u()])), vec![g("A"), b(b(u(), g("Rd")), u())]);
    p.apply(3, 4, boxm(mg("rho"), mid(u())), vec![b(t(g("A"), g("Rd")), u())]);
    p.apply(
        3,
        4,
        chain(vec![
            boxm(mid(t(g("A"), g("Rd"))), coh(u(), t(u(), u()))),
            box_split(&[(g("A"), u()), (g("Rd"), u())]).0,
        ]),
        vec![b(g("A"), u()), b(g("Rd"), u())],
    );
    p.apply(1, 4, mg("pi"), vec![g("A"), g("A")]);
    p.apply(
        0,
        2,
        chain(vec![
            inv(fam("fA", vec![u(), u(), g("L")])),
            MorExpr::tensor(mid(g("A")), boxm(MorExpr::BoxUnit { inv: true }, mid(g("L")))),
        ]),
        vec![g("A"), b(u(), g("L"))],
    );
    p.apply(1, 4, mg("mu"), vec![]);
    let endw = p.word().to_vec();
    let lhs = p.finish(&endw);

    let mut q = Path::new(start);
    let (m, merged) = box_merge(&[
        (u(), b(u(), g("L"))),
        (u(), g("A")),
        (u(), b(g("Rd"), u())),
    ]);
    q.apply(0, 3, m, vec![b(merged.0.clone(), merged.1.clone())]);
    q.apply(0, 1, boxm(coh(merged.0, u()), mid(merged.1.clone())), vec![b(u(), merged.1.clone())]);
    q.apply(0, 1, boxm(mid(u()), mg("mu")), vec![b(u(), u())]);
    q.apply(0, 1, MorExpr::BoxUnit { inv: true }, vec![]);
    let rhs = q.finish(&endw);
    Diagram { id: "dd.axiom3".into(), indices: vec![], lhs, rhs }
}

/// Generator and family signatures of the A.1 context, for the audit.
pub fn a1_signatures() -> (BTreeMap<String, GenSig>, BTreeMap<String, FamilySig>) {
    let mut gens = BTreeMap::new();
    let mut fams = BTreeMap::new();
    let a = g("A");
    let ad = g("Ad");
    let l = g("L");
    let ld = g("Ld");
    let r = g("R");
    let rd = g("Rd");
    gens.insert("pi".into(), GenSig {
        src: t(b(u(), a.clone()), t(a.clone(), b(a.clone(), u()))),
        tgt: t(a.clone(), a.clone()),
    });
    gens.insert("mu".into(), GenSig {
        src: t(b(u(), l.clone()), t(a.clone(), b(rd.clone(), u()))),
        tgt: u(),
    });
    gens.insert("lam".into(), GenSig { src: b(l.clone(), u()), tgt: t(l.clone(), a.clone()) });
    gens.insert("rho".into(), GenSig { src: b(u(), rd.clone()), tgt: t(a.clone(), rd.clone()) });
    gens.insert("epsA".into(), GenSig { src: t(a.clone(), ad.clone()), tgt: u() });
    gens.insert("etaA".into(), GenSig { src: u(), tgt: t(ad.clone(), a.clone()) });
    gens.insert("epsL".into(), GenSig { src: t(l.clone(), ld.clone()), tgt: u() });
    gens.insert("etaL".into(), GenSig { src: u(), tgt: t(ld.clone(), l.clone()) });
    gens.insert("epsR".into(), GenSig { src: t(r.clone(), rd.clone()), tgt: u() });
    gens.insert("etaR".into(), GenSig { src: u(), tgt: t(rd.clone(), r.clone()) });
    gens.insert("imult".into(), GenSig { src: t(g("I"), g("I")), tgt: g("I") });
    gens.insert("iunit".into(), GenSig { src: u(), tgt: g("I") });
    gens.insert("iiso".into(), GenSig { src: g("I"), tgt: u() });
    let p0 = g("#0");
    let p1 = g("#1");
    let p2 = g("#2");
    fams.insert("fA".into(), FamilySig {
        arity: 3,
        src: t(a.clone(), b(b(p0.clone(), p1.clone()), p2.clone())),
        tgt: t(b(p0.clone(), b(p1.clone(), p2.clone())), a.clone()),
    });
    fams.insert("fAd".into(), FamilySig {
        arity: 3,
        src: t(ad.clone(), b(p0.clone(), b(p1.clone(), p2.clone()))),
        tgt: t(b(b(p0.clone(), p1.clone()), p2.clone()), ad.clone()),
    });
    fams.insert("fL".into(), FamilySig {
        arity: 1,
        src: t(l.clone(), b(g("I"), p0.clone())),
        tgt: t(p0.clone(), l.clone()),
    });
    fams.insert("fLd".into(), FamilySig {
        arity: 1,
        src: t(ld.clone(), p0.clone()),
        tgt: t(b(g("I"), p0.clone()), ld.clone()),
    });
    fams.insert("fR".into(), FamilySig {
        arity: 1,
        src: t(r.clone(), b(p0.clone(), g("I"))),
        tgt: t(p0.clone(), r.clone()),
    });
    fams.insert("fRd".into(), FamilySig {
        arity: 1,
        src: t(rd.clone(), p0.clone()),
        tgt: t(b(p0.clone(), g("I")), rd.clone()),
    });
    (gens, fams)
}

/// Boundary audit: infers both sides' boundaries and checks they agree.
pub fn audit_diagrams(
    diagrams: &[Diagram],
    gens: &BTreeMap<String, GenSig>,
    fams: &BTreeMap<String, FamilySig>,
) -> Result<(), String> {
    for d in diagrams {
        let (ls, lt) = infer_boundaries(&d.lhs, gens, fams)
            .map_err(|e| format!("{}: lhs: {e}", d.id))?;
        let (rs, rt) = infer_boundaries(&d.rhs, gens, fams)
            .map_err(|e| format!("{}: rhs: {e}", d.id))?;
        if ls != rs {
            return Err(format!("{}: source mismatch", d.id));
        }
        if lt != rt {
            return Err(format!("{}: target mismatch", d.id));
        }
    }
    Ok(())
}


// ============================ A.2 =====================================

fn f_obj(e: ObjExpr) -> ObjExpr {
    e.fapply("F")
}
fn fm(name: &str) -> MorExpr {
    MorExpr::fmor("F", mg(name))
}
fn f_tensor(a: ObjExpr, bb: ObjExpr) -> MorExpr {
    MorExpr::ftensor("F", a, bb)
}
fn f_unit_inv() -> MorExpr {
    MorExpr::FUnit { f: "F".into(), inv: true }
}

/// [F(a·b)]⊗χ → χ⊗[Fa·Fb], the inverse χ-family with the functor unit
/// folded in where a slot is the source unit.
fn chi_back(a: ObjExpr, bb: ObjExpr) -> MorExpr {
    inv(fam("fchi", vec![a, bb]))
}

/// The two functor axioms and the χ/ι block axioms.
pub fn a2_diagrams() -> Vec<Diagram> {
    let mut out = Vec::new();
    let chi = g("chi");
    let iota = g("iota");

    // --- χ block compat (4 indices, ranging over source objects) ---
    {
        let x1 = g("X1");
        let y1 = g("Y1");
        let x2 = g("X2");
        let y2 = g("Y2");
        let fblk = |x: &ObjExpr, y: &ObjExpr| b(f_obj(x.clone()), f_obj(y.clone()));
        let start = vec![chi.clone(), fblk(&x1, &y1), fblk(&x2, &y2)];
        let mut p = Path::new(start.clone());
        p.apply(0, 2, fam("fchi", vec![x1.clone(), y1.clone()]), vec![
            f_obj(b(x1.clone(), y1.clone())),
            chi.clone(),
        ]);
        p.apply(1, 3, fam("fchi", vec![x2.clone(), y2.clone()]), vec![
            f_obj(b(x2.clone(), y2.clone())),
            chi.clone(),
        ]);
        p.apply(
            0,
            2,
            chain(vec![
                f_tensor(b(x1.clone(), y1.clone()), b(x2.clone(), y2.clone())),
                MorExpr::fmor(
                    "F",
                    MorExpr::BoxTensor {
                        x1: x1.clone(),
                        y1: y1.clone(),
                        x2: x2.clone(),
                        y2: y2.clone(),
                        inv: false,
                    },
                ),
            ]),
            vec![f_obj(b(t(x1.clone(), x2.clone()), t(y1.clone(), y2.clone())))],
        );
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);

        let mut q = Path::new(start);
        let (m, _) = box_merge(&[
            (f_obj(x1.clone()), f_obj(y1.clone())),
            (f_obj(x2.clone()), f_obj(y2.clone())),
        ]);
        q.apply(
            1,
            3,
            chain(vec![
                m,
                boxm(
                    f_tensor(x1.clone(), x2.clone()),
                    f_tensor(y1.clone(), y2.clone()),
                ),
            ]),
            vec![b(
                f_obj(t(x1.clone(), x2.clone())),
                f_obj(t(y1.clone(), y2.clone())),
            )],
        );
        q.apply(
            0,
            2,
            fam("fchi", vec![t(x1.clone(), x2.clone()), t(y1.clone(), y2.clone())]),
            vec![f_obj(b(t(x1.clone(), x2.clone()), t(y1.clone(), y2.clone()))), chi.clone()],
        );
        let rhs = q.finish(&endw);
        out.push(Diagram {
            id: "ddf.block_chi.compat".into(),
            indices: vec!["X1".into(), "Y1".into(), "X2".into(), "Y2".into()],
            lhs,
            rhs,
        });
    }

    // --- χ block unit ---
    {
        let inj = chain(vec![
            MorExpr::BoxUnit { inv: false },
            boxm(MorExpr::FUnit { f: "F".into(), inv: false }, MorExpr::FUnit { f: "F".into(), inv: false }),
        ]); // U → [FU·FU]
        let mut p = Path::new(vec![chi.clone()]);
        p.apply(1, 1, inj, vec![b(f_obj(u()), f_obj(u()))]);
        p.apply(0, 2, fam("fchi", vec![u(), u()]), vec![f_obj(b(u(), u())), chi.clone()]);
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);
        let mut q = Path::new(vec![chi.clone()]);
        let inj2 = chain(vec![
            MorExpr::FUnit { f: "F".into(), inv: false },
            MorExpr::fmor("F", MorExpr::BoxUnit { inv: false }),
        ]); // U → FU → F[U·U]
        q.apply(0, 0, inj2, vec![f_obj(b(u(), u()))]);
        let rhs = q.finish(&endw);
        out.push(Diagram { id: "ddf.block_chi.unit".into(), indices: vec![], lhs, rhs });
    }

    // --- χ dual block compat + unit ---
    {
        let x1 = g("X1");
        let y1 = g("Y1");
        let x2 = g("X2");
        let y2 = g("Y2");
        let chid = g("chid");
        let start = vec![
            chid.clone(),
            f_obj(b(x1.clone(), y1.clone())),
            f_obj(b(x2.clone(), y2.clone())),
        ];
        let mut p = Path::new(start.clone());
        p.apply(0, 2, fam("fchid", vec![x1.clone(), y1.clone()]), vec![
            b(f_obj(x1.clone()), f_obj(y1.clone())),
            chid.clone(),
        ]);
        p.apply(1, 3, fam("fchid", vec![x2.clone(), y2.clone()]), vec![
            b(f_obj(x2.clone()), f_obj(y2.clone())),
            chid.clone(),
        ]);
        let (m, _) = box_merge(&[
            (f_obj(x1.clone()), f_obj(y1.clone())),
            (f_obj(x2.clone()), f_obj(y2.clone())),
        ]);
        p.apply(
            0,
            2,
            chain(vec![
                m,
                boxm(f_tensor(x1.clone(), x2.clone()), f_tensor(y1.clone(), y2.clone())),
            ]),
            vec![b(f_obj(t(x1.clone(), x2.clone())), f_obj(t(y1.clone(), y2.clone())))],
        );
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);

        let mut q = Path::new(start);
        q.apply(
            1,
            3,
            chain(vec![
                f_tensor(b(x1.clone(), y1.clone()), b(x2.clone(), y2.clone())),
                MorExpr::fmor(
                    "F",
                    MorExpr::BoxTensor {
                        x1: x1.clone(),
                        y1: y1.clone(),
                        x2: x2.clone(),
                        y2: y2.clone(),
                        inv: false,
                    },
                ),
            ]),
            vec![f_obj(b(t(x1.clone(), x2.clone()), t(y1.clone(), y2.clone())))],
        );
        q.apply(
            0,
            2,
            fam("fchid", vec![t(x1.clone(), x2.clone()), t(y1.clone(), y2.clone())]),
            vec![
                b(f_obj(t(x1.clone(), x2.clone())), f_obj(t(y1.clone(), y2.clone()))),
                chid.clone(),
            ],
        );
        let rhs = q.finish(&endw);
        out.push(Diagram {
            id: "ddf.block_chi_dual.compat".into(),
            indices: vec!["X1".into(), "Y1".into(), "X2".into(), "Y2".into()],
            lhs,
            rhs,
        });

        let mut p = Path::new(vec![chid.clone()]);
        let inj2 = chain(vec![
            MorExpr::FUnit { f: "F".into(), inv: false },
            MorExpr::fmor("F", MorExpr::BoxUnit { inv: false }),
        ]);
        p.apply(1, 1, inj2, vec![f_obj(b(u(), u()))]);
        p.apply(0, 2, fam("fchid", vec![u(), u()]), vec![b(f_obj(u()), f_obj(u())), chid.clone()]);
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);
        let mut q = Path::new(vec![chid.clone()]);
        let inj = chain(vec![
            MorExpr::BoxUnit { inv: false },
            boxm(
                MorExpr::FUnit { f: "F".into(), inv: false },
                MorExpr::FUnit { f: "F".into(), inv: false },
            ),
        ]);
        q.apply(0, 0, inj, vec![b(f_obj(u()), f_obj(u()))]);
        let rhs = q.finish(&endw);
        out.push(Diagram { id: "ddf.block_chi_dual.unit".into(), indices: vec![], lhs, rhs });
    }

    // --- ι block compat/unit (nullary family against the monoid objects) ---
    {
        let start = vec![iota.clone(), g("I"), g("I")];
        let mut p = Path::new(start.clone());
        p.apply(0, 2, fam("fiota", vec![]), vec![f_obj(g("I")), iota.clone()]);
        p.apply(1, 3, fam("fiota", vec![]), vec![f_obj(g("I")), iota.clone()]);
        p.apply(
            0,
            2,
            chain(vec![f_tensor(g("I"), g("I")), fm("imult")]),
            vec![f_obj(g("I"))],
        );
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);
        let mut q = Path::new(start);
        q.apply(1, 3, mg("imult"), vec![g("I")]);
        q.apply(0, 2, fam("fiota", vec![]), vec![f_obj(g("I")), iota.clone()]);
        let rhs = q.finish(&endw);
        out.push(Diagram { id: "ddf.block_iota.compat".into(), indices: vec![], lhs, rhs });

        let mut p = Path::new(vec![iota.clone()]);
        p.apply(1, 1, mg("iunit"), vec![g("I")]);
        p.apply(0, 2, fam("fiota", vec![]), vec![f_obj(g("I")), iota.clone()]);
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);
        let mut q = Path::new(vec![iota.clone()]);
        q.apply(
            0,
            0,
            chain(vec![MorExpr::FUnit { f: "F".into(), inv: false }, fm("iunit")]),
            vec![f_obj(g("I"))],
        );
        let rhs = q.finish(&endw);
        out.push(Diagram { id: "ddf.block_iota.unit".into(), indices: vec![], lhs, rhs });
    }
    {
        let iotad = g("iotad");
        let start = vec![iotad.clone(), f_obj(g("I")), f_obj(g("I"))];
        let mut p = Path::new(start.clone());
        p.apply(0, 2, fam("fiotad", vec![]), vec![g("I"), iotad.clone()]);
        p.apply(1, 3, fam("fiotad", vec![]), vec![g("I"), iotad.clone()]);
        p.apply(0, 2, mg("imult"), vec![g("I")]);
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);
        let mut q = Path::new(start);
        q.apply(
            1,
            3,
            chain(vec![f_tensor(g("I"), g("I")), fm("imult")]),
            vec![f_obj(g("I"))],
        );
        q.apply(0, 2, fam("fiotad", vec![]), vec![g("I"), iotad.clone()]);
        let rhs = q.finish(&endw);
        out.push(Diagram { id: "ddf.block_iota_dual.compat".into(), indices: vec![], lhs, rhs });

        let mut p = Path::new(vec![iotad.clone()]);
        p.apply(
            1,
            1,
            chain(vec![MorExpr::FUnit { f: "F".into(), inv: false }, fm("iunit")]),
            vec![f_obj(g("I"))],
        );
        p.apply(0, 2, fam("fiotad", vec![]), vec![g("I"), iotad.clone()]);
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);
        let mut q = Path::new(vec![iotad.clone()]);
        q.apply(0, 0, mg("iunit"), vec![g("I")]);
        let rhs = q.finish(&endw);
        out.push(Diagram { id: "ddf.block_iota_dual.unit".into(), indices: vec![], lhs, rhs });
    }

    out.push(a2_axiom1());
    out.push(a2_axiom2());
    out
}

fn a2_axiom1() -> Diagram {
    let chi = g("chi");
    let a = g("A");
    let start = vec![
        f_obj(b(u(), a.clone())),
        f_obj(a.clone()),
        f_obj(b(a.clone(), u())),
        chi.clone(),
        b(chi.clone(), u()),
        b(b(chi.clone(), u()), u()),
    ];
    // right path
    let mut p = Path::new(start.clone());
    p.apply(
        2,
        4,
        chain(vec![
            chi_back(a.clone(), u()),
            MorExpr::tensor(mid(chi.clone()), boxm(mid(f_obj(a.clone())), f_unit_inv())),
        ]),
        vec![chi.clone(), b(f_obj(a.clone()), u())],
    );
    {
        let (m, merged) =
            box_merge(&[(f_obj(a.clone()), u()), (chi.clone(), u()), (b(chi.clone(), u()), u())]);
        p.apply(
            3,
            6,
            chain(vec![m, boxm(mid(merged.0.clone()), coh(merged.1.clone(), u()))]),
            vec![b(merged.0.clone(), u())],
        );
    }
    p.apply(
        3,
        4,
        boxm(mg("omega"), mid(u())),
        vec![b(t(chi.clone(), t(b(u(), chi.clone()), a.clone())), u())],
    );
    {
        let (sp, merged) = box_split(&[(chi.clone(), u()), (b(u(), chi.clone()), u()), (a.clone(), u())]);
        p.apply(
            3,
            4,
            chain(vec![boxm(mid(merged.0.clone()), coh(u(), merged.1.clone())), sp]),
            vec![b(chi.clone(), u()), b(b(u(), chi.clone()), u()), b(a.clone(), u())],
        );
    }
    p.apply(1, 4, mg("omega"), vec![chi.clone(), b(u(), chi.clone()), a.clone()]);
    p.apply(
        0,
        2,
        chain(vec![
            chi_back(u(), a.clone()),
            MorExpr::tensor(mid(chi.clone()), boxm(f_unit_inv(), mid(f_obj(a.clone())))),
        ]),
        vec![chi.clone(), b(u(), f_obj(a.clone()))],
    );
    p.apply(3, 5, fam("fA", vec![u(), chi.clone(), u()]), vec![
        b(u(), b(chi.clone(), u())),
        a.clone(),
    ]);
    {
        let (m, _) = box_merge(&[
            (u(), f_obj(a.clone())),
            (u(), chi.clone()),
            (u(), b(chi.clone(), u())),
        ]);
        let (sp, _) = box_split(&[(u(), chi.clone()), (u(), b(u(), chi.clone())), (u(), a.clone())]);
        p.apply(
            1,
            4,
            chain(vec![m, boxm(mid(t(u(), t(u(), u()))), mg("omega")), sp]),
            vec![
                b(u(), chi.clone()),
                b(u(), b(u(), chi.clone())),
                b(u(), a.clone()),
            ],
        );
    }
    p.apply(3, 6, mg("pi"), vec![a.clone(), a.clone()]);
    p.apply(
        2,
        4,
        chain(vec![
            inv(fam("fA", vec![u(), u(), chi.clone()])),
            MorExpr::tensor(mid(a.clone()), boxm(MorExpr::BoxUnit { inv: true }, mid(chi.clone()))),
        ]),
        vec![a.clone(), b(u(), chi.clone())],
    );
    let endw = p.word().to_vec();
    let lhs = p.finish(&endw);

    // left path
    let mut q = Path::new(start);
    q.apply(
        0,
        3,
        chain(vec![
            MorExpr::tensor(
                mid(f_obj(b(u(), a.clone()))),
                f_tensor(a.clone(), b(a.clone(), u())),
            ),
            f_tensor(b(u(), a.clone()), t(a.clone(), b(a.clone(), u()))),
            fm("pi"),
            inv(f_tensor(a.clone(), a.clone())),
        ]),
        vec![f_obj(a.clone()), f_obj(a.clone())],
    );
    q.apply(1, 4, mg("omega"), vec![chi.clone(), b(u(), chi.clone()), a.clone()]);
    q.apply(
        3,
        5,
        chain(vec![
            fam("fA", vec![chi.clone(), u(), u()]),
            MorExpr::tensor(boxm(mid(chi.clone()), MorExpr::BoxUnit { inv: true }), mid(a.clone())),
        ]),
        vec![b(chi.clone(), u()), a.clone()],
    );
    q.apply(2, 4, swap_blocks(u(), chi.clone(), chi.clone(), u()), vec![
        b(chi.clone(), u()),
        b(u(), chi.clone()),
    ]);
    q.apply(0, 3, mg("omega"), vec![chi.clone(), b(u(), chi.clone()), a.clone()]);
    q.apply(3, 4, boxm(MorExpr::BoxUnit { inv: false }, mid(chi.clone())), vec![b(
        b(u(), u()),
        chi.clone(),
    )]);
    // align with the right path's endpoint
    q.apply(
        3,
        4,
        boxm(MorExpr::BoxUnit { inv: true }, mid(chi.clone())),
        vec![b(u(), chi.clone())],
    );
    let rhs = q.finish(&endw);
    Diagram { id: "ddf.axiom1".into(), indices: vec![], lhs, rhs }
}

fn a2_axiom2() -> Diagram {
    let chi = g("chi");
    let iota = g("iota");
    let a = g("A");
    let l = g("L");
    let rd = g("Rd");
    let start = vec![
        f_obj(b(u(), l.clone())),
        f_obj(a.clone()),
        f_obj(b(rd.clone(), u())),
        chi.clone(),
    ];
    let mut p = Path::new(start.clone());
    p.apply(
        2,
        4,
        chain(vec![
            chi_back(rd.clone(), u()),
            MorExpr::tensor(mid(chi.clone()), boxm(mid(f_obj(rd.clone())), f_unit_inv())),
        ]),
        vec![chi.clone(), b(f_obj(rd.clone()), u())],
    );
    p.apply(
        3,
        4,
        boxm(mg("delta"), mid(u())),
        vec![b(t(chi.clone(), t(b(u(), iota.clone()), rd.clone())), u())],
    );
    {
        let (sp, merged) =
            box_split(&[(chi.clone(), u()), (b(u(), iota.clone()), u()), (rd.clone(), u())]);
        p.apply(
            3,
            4,
            chain(vec![boxm(mid(merged.0.clone()), coh(u(), merged.1.clone())), sp]),
            vec![
                b(chi.clone(), u()),
                b(b(u(), iota.clone()), u()),
                b(rd.clone(), u()),
            ],
        );
    }
    p.apply(1, 4, mg("omega"), vec![chi.clone(), b(u(), chi.clone()), a.clone()]);
    p.apply(
        0,
        2,
        chain(vec![
            chi_back(u(), l.clone()),
            MorExpr::tensor(mid(chi.clone()), boxm(f_unit_inv(), mid(f_obj(l.clone())))),
        ]),
        vec![chi.clone(), b(u(), f_obj(l.clone()))],
    );
    p.apply(3, 5, fam("fA", vec![u(), iota.clone(), u()]), vec![
        b(u(), b(iota.clone(), u())),
        a.clone(),
    ]);
    {
        let (m, _) = box_merge(&[
            (u(), f_obj(l.clone())),
            (u(), chi.clone()),
            (u(), b(iota.clone(), u())),
        ]);
        p.apply(
            1,
            4,
            chain(vec![m, boxm(coh(t(u(), t(u(), u())), u()), mg("gamma"))]),
            vec![b(u(), l.clone())],
        );
    }
    p.apply(1, 4, mg("mu"), vec![]);
    let endw = p.word().to_vec();
    let lhs = p.finish(&endw);

    let mut q = Path::new(start);
    q.apply(
        0,
        3,
        chain(vec![
            MorExpr::tensor(
                mid(f_obj(b(u(), l.clone()))),
                f_tensor(a.clone(), b(rd.clone(), u())),
            ),
            f_tensor(b(u(), l.clone()), t(a.clone(), b(rd.clone(), u()))),
            fm("mu"),
        ]),
        vec![f_obj(u())],
    );
    q.apply(0, 1, f_unit_inv(), vec![]);
    let rhs = q.finish(&endw);
    Diagram { id: "ddf.axiom2".into(), indices: vec![], lhs, rhs }
}

/// Generator and family signatures of the functor (A.2) context.
pub fn a2_signatures() -> (BTreeMap<String, GenSig>, BTreeMap<String, FamilySig>) {
    let (mut gens, mut fams) = a1_signatures();
    let chi = g("chi");
    let chid = g("chid");
    let iota = g("iota");
    let iotad = g("iotad");
    gens.insert("omega".into(), GenSig {
        src: t(f_obj(g("A")), t(chi.clone(), b(chi.clone(), u()))),
        tgt: t(chi.clone(), t(b(u(), chi.clone()), g("A"))),
    });
    gens.insert("gamma".into(), GenSig {
        src: t(f_obj(g("L")), t(chi.clone(), b(iota.clone(), u()))),
        tgt: g("L"),
    });
    gens.insert("delta".into(), GenSig {
        src: f_obj(g("Rd")),
        tgt: t(chi.clone(), t(b(u(), iota.clone()), g("Rd"))),
    });
    gens.insert("epschi".into(), GenSig { src: t(chi.clone(), chid.clone()), tgt: u() });
    gens.insert("etachi".into(), GenSig { src: u(), tgt: t(chid.clone(), chi.clone()) });
    gens.insert("epsiota".into(), GenSig { src: t(iota.clone(), iotad.clone()), tgt: u() });
    gens.insert("etaiota".into(), GenSig { src: u(), tgt: t(iotad.clone(), iota.clone()) });
    let p0 = g("#0");
    let p1 = g("#1");
    fams.insert("fchi".into(), FamilySig {
        arity: 2,
        src: t(chi.clone(), b(f_obj(p0.clone()), f_obj(p1.clone()))),
        tgt: t(f_obj(b(p0.clone(), p1.clone())), chi.clone()),
    });
    fams.insert("fchid".into(), FamilySig {
        arity: 2,
        src: t(chid.clone(), f_obj(b(p0.clone(), p1.clone()))),
        tgt: t(b(f_obj(p0.clone()), f_obj(p1.clone())), chid.clone()),
    });
    fams.insert("fiota".into(), FamilySig {
        arity: 0,
        src: t(iota.clone(), g("I")),
        tgt: t(f_obj(g("I")), iota.clone()),
    });
    fams.insert("fiotad".into(), FamilySig {
        arity: 0,
        src: t(iotad.clone(), f_obj(g("I"))),
        tgt: t(g("I"), iotad.clone()),
    });
    (gens, fams)
}


// ============================ A.3 =====================================

fn g_obj(e: ObjExpr) -> ObjExpr {
    e.fapply("G")
}

/// Cancellation [U·R]⊗A⊗R· → U built from ρ⁻¹ and ε_R (a ρ-mate).
fn rho_mate(p: &mut Path, i: usize) {
    let (a, rd) = (g("A"), g("Rd"));
    p.apply(i + 1, i + 3, inv(mg("rho")), vec![b(u(), rd.clone())]);
    p.apply(
        i,
        i + 2,
        box_pair_cancel(u(), g("R"), u(), rd, coh(t(u(), u()), u()), mg("epsR")),
        vec![],
    );
    let _ = a;
}

/// χ⊗(U⊠ι) → F(R·)⊗R, the δ-mate built from η_R and δ⁻¹.
fn delta_mate(slot: &str) -> MorExpr {
    let chi = if slot == "F" { g("chiF") } else { g("chiG") };
    let iota = if slot == "F" { g("iotaF") } else { g("iotaG") };
    let delta = if slot == "F" { mg("deltaF") } else { mg("deltaG") };
    let fr = ObjExpr::fapply(g("Rd"), slot);
    let src = t(chi.clone(), b(u(), iota.clone()));
    chain(vec![
        coh(src.clone(), t(src.clone(), u())),
        MorExpr::tensor(mid(src.clone()), mg("etaR")),
        coh(
            t(src.clone(), t(g("Rd"), g("R"))),
            t(t(chi.clone(), t(b(u(), iota.clone()), g("Rd"))), g("R")),
        ),
        MorExpr::tensor(inv(delta), mid(g("R"))),
        coh(t(fr.clone(), g("R")), t(fr, g("R"))),
    ])
}

/// The three transformation axioms plus the distinguished-object block
/// axioms; `weak` adds the dual-side block axioms.
pub fn a3_diagrams(weak: bool) -> Vec<Diagram> {
    let mut out = Vec::new();
    let alpha = g("alpha");

    // --- α block compat (2 indices over source objects) ---
    {
        let x1 = g("X1");
        let x2 = g("X2");
        let fx = |x: &ObjExpr| b(u(), f_obj(x.clone()));
        let gx = |x: &ObjExpr| b(g_obj(x.clone()), u());
        let start = vec![alpha.clone(), fx(&x1), fx(&x2)];
        let mut p = Path::new(start.clone());
        p.apply(0, 2, fam("falpha", vec![x1.clone()]), vec![gx(&x1), alpha.clone()]);
        p.apply(1, 3, fam("falpha", vec![x2.clone()]), vec![gx(&x2), alpha.clone()]);
        {
            let (m, _) = box_merge(&[
                (g_obj(x1.clone()), u()),
                (g_obj(x2.clone()), u()),
            ]);
            p.apply(
                0,
                2,
                chain(vec![
                    m,
                    boxm(MorExpr::ftensor("G", x1.clone(), x2.clone()), coh(t(u(), u()), u())),
                ]),
                vec![b(g_obj(t(x1.clone(), x2.clone())), u())],
            );
        }
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);
        let mut q = Path::new(start);
        {
            let (m, _) = box_merge(&[
                (u(), f_obj(x1.clone())),
                (u(), f_obj(x2.clone())),
            ]);
            q.apply(
                1,
                3,
                chain(vec![
                    m,
                    boxm(coh(t(u(), u()), u()), MorExpr::ftensor("F", x1.clone(), x2.clone())),
                ]),
                vec![b(u(), f_obj(t(x1.clone(), x2.clone())))],
            );
        }
        q.apply(0, 2, fam("falpha", vec![t(x1.clone(), x2.clone())]), vec![
            gx(&t(x1.clone(), x2.clone())),
            alpha.clone(),
        ]);
        let rhs = q.finish(&endw);
        out.push(Diagram {
            id: "ddt.block_alpha.compat".into(),
            indices: vec!["X1".into(), "X2".into()],
            lhs,
            rhs,
        });

        // unit diagram
        let inj = chain(vec![
            MorExpr::BoxUnit { inv: false },
            boxm(mid(u()), MorExpr::FUnit { f: "F".into(), inv: false }),
        ]); // U → [U·FU]
        let mut p = Path::new(vec![alpha.clone()]);
        p.apply(1, 1, inj, vec![b(u(), f_obj(u()))]);
        p.apply(0, 2, fam("falpha", vec![u()]), vec![b(g_obj(u()), u()), alpha.clone()]);
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);
        let inj2 = chain(vec![
            MorExpr::BoxUnit { inv: false },
            boxm(MorExpr::FUnit { f: "G".into(), inv: false }, mid(u())),
        ]); // U → [GU·U]
        let mut q = Path::new(vec![alpha.clone()]);
        q.apply(0, 0, inj2, vec![b(g_obj(u()), u())]);
        let rhs = q.finish(&endw);
        out.push(Diagram { id: "ddt.block_alpha.unit".into(), indices: vec![], lhs, rhs });
    }

    if weak {
        let x1 = g("X1");
        let x2 = g("X2");
        let alphad = g("alphad");
        let fx = |x: &ObjExpr| b(u(), f_obj(x.clone()));
        let gx = |x: &ObjExpr| b(g_obj(x.clone()), u());
        let start = vec![alphad.clone(), gx(&x1), gx(&x2)];
        let mut p = Path::new(start.clone());
        p.apply(0, 2, fam("falphad", vec![x1.clone()]), vec![fx(&x1), alphad.clone()]);
        p.apply(1, 3, fam("falphad", vec![x2.clone()]), vec![fx(&x2), alphad.clone()]);
        {
            let (m, _) = box_merge(&[(u(), f_obj(x1.clone())), (u(), f_obj(x2.clone()))]);
            p.apply(
                0,
                2,
                chain(vec![
                    m,
                    boxm(coh(t(u(), u()), u()), MorExpr::ftensor("F", x1.clone(), x2.clone())),
                ]),
                vec![b(u(), f_obj(t(x1.clone(), x2.clone())))],
            );
        }
        let endw = p.word().to_vec();
        let lhs = p.finish(&endw);
        let mut q = Path::new(start);
        {
            let (m, _) = box_merge(&[(g_obj(x1.clone()), u()), (g_obj(x2.clone()), u())]);
            q.apply(
                1,
                3,
                chain(vec![
                    m,
                    boxm(MorExpr::ftensor("G", x1.clone(), x2.clone()), coh(t(u(), u()), u())),
                ]),
                vec![b(g_obj(t(x1.clone(), x2.clone())), u())],
            );
        }
        q.apply(0, 2, fam("falphad", vec![t(x1.clone(), x2.clone())]), vec![
            fx(&t(x1.clone(), x2.clone())),
            alphad.clone(),
        ]);
        let rhs = q.finish(&endw);
        out.push(Diagram {
            id: "ddt.block_alpha_dual.compat".into(),
            indices: vec!["X1".into(), "X2".into()],
            lhs,
            rhs,
        });
    }

    out.push(a3_axiom1());
    out.push(a3_axiom2());
    out.push(a3_axiom3());
    out
}

fn a3_axiom1() -> Diagram {
    let (a, ad, al) = (g("A"), g("Ad"), g("alpha"));
    let (chi_f, chi_g) = (g("chiF"), g("chiG"));
    let start = vec![
        b(g_obj(a.clone()), u()),
        b(chi_g.clone(), u()),
        ad.clone(),
        b(chi_g.clone(), u()),
        ad.clone(),
        b(u(), b(u(), al.clone())),
        b(u(), a.clone()),
        a.clone(),
        b(b(u(), al.clone()), u()),
        b(a.clone(), u()),
        b(b(al.clone(), u()), u()),
    ];
    // right path
    let mut p = Path::new(start.clone());
    p.apply(
        4,
        6,
        chain(vec![
            fam("fAd", vec![u(), u(), al.clone()]),
            MorExpr::tensor(boxm(MorExpr::BoxUnit { inv: true }, mid(al.clone())), mid(ad.clone())),
        ]),
        vec![b(u(), al.clone()), ad.clone()],
    );
    p.apply(3, 5, swap_blocks(chi_g.clone(), u(), u(), al.clone()), vec![
        b(u(), al.clone()),
        b(chi_g.clone(), u()),
    ]);
    p.apply(5, 8, pi_mate_theta(), vec![a.clone(), b(ad.clone(), u())]);
    p.apply(
        4,
        6,
        inv(chain(vec![
            fam("fA", vec![chi_g.clone(), u(), u()]),
            MorExpr::tensor(boxm(mid(chi_g.clone()), MorExpr::BoxUnit { inv: true }), mid(a.clone())),
        ])),
        vec![a.clone(), b(b(chi_g.clone(), u()), u())],
    );
    {
        let (m, merged) = box_merge(&[
            (b(chi_g.clone(), u()), u()),
            (ad.clone(), u()),
            (b(u(), al.clone()), u()),
            (a.clone(), u()),
            (b(al.clone(), u()), u()),
        ]);
        let (sp, smerged) =
            box_split(&[(al.clone(), u()), (b(u(), chi_f.clone()), u()), (a.clone(), u())]);
        p.apply(
            5,
            10,
            chain(vec![
                m,
                boxm(mg("Pi"), coh(merged.1.clone(), smerged.1.clone())),
                sp,
            ]),
            vec![
                b(al.clone(), u()),
                b(b(u(), chi_f.clone()), u()),
                b(a.clone(), u()),
            ],
        );
    }
    p.apply(1, 6, mg("Pi"), vec![al.clone(), b(u(), chi_f.clone()), a.clone()]);
    p.apply(0, 2, inv(fam("falpha", vec![g("A")])), vec![al.clone(), b(u(), f_obj(g("A")))]);
    p.apply(3, 5, fam("fA", vec![u(), chi_f.clone(), u()]), vec![
        b(u(), b(chi_f.clone(), u())),
        a.clone(),
    ]);
    {
        let (m, _) = box_merge(&[
            (u(), f_obj(g("A"))),
            (u(), chi_f.clone()),
            (u(), b(chi_f.clone(), u())),
        ]);
        let (sp, _) = box_split(&[
            (u(), chi_f.clone()),
            (u(), b(u(), chi_f.clone())),
            (u(), a.clone()),
        ]);
        p.apply(
            1,
            4,
            chain(vec![m, boxm(mid(t(u(), t(u(), u()))), mg("omegaF")), sp]),
            vec![
                b(u(), chi_f.clone()),
                b(u(), b(u(), chi_f.clone())),
                b(u(), a.clone()),
            ],
        );
    }
    p.apply(3, 6, mg("pi"), vec![a.clone(), a.clone()]);
    p.apply(
        2,
        4,
        chain(vec![
            inv(fam("fA", vec![u(), u(), chi_f.clone()])),
            MorExpr::tensor(mid(a.clone()), boxm(MorExpr::BoxUnit { inv: true }, mid(chi_f.clone()))),
        ]),
        vec![a.clone(), b(u(), chi_f.clone())],
    );
    let endw = p.word().to_vec();
    let lhs = p.finish(&endw);

    // left path
    let mut q = Path::new(start);
    q.apply(
        2,
        4,
        chain(vec![
            MorExpr::tensor(mid(ad.clone()), boxm(mid(chi_g.clone()), MorExpr::BoxUnit { inv: false })),
            fam("fAd", vec![chi_g.clone(), u(), u()]),
        ]),
        vec![b(b(chi_g.clone(), u()), u()), ad.clone()],
    );
    q.apply(7, 9, fam("fA", vec![u(), al.clone(), u()]), vec![
        b(u(), b(al.clone(), u())),
        a.clone(),
    ]);
    {
        let (m, merged) = box_merge(&[
            (g_obj(a.clone()), u()),
            (chi_g.clone(), u()),
            (b(chi_g.clone(), u()), u()),
        ]);
        let (sp, smerged) = box_split(&[
            (chi_g.clone(), u()),
            (b(u(), chi_g.clone()), u()),
            (a.clone(), u()),
        ]);
        q.apply(
            0,
            3,
            chain(vec![m, boxm(mg("omegaG"), coh(merged.1.clone(), smerged.1.clone())), sp]),
            vec![
                b(chi_g.clone(), u()),
                b(b(u(), chi_g.clone()), u()),
                b(a.clone(), u()),
            ],
        );
    }
    q.apply(2, 5, inv(pi_bridge_rev()), vec![ad.clone(), b(u(), ad.clone())]);
    q.apply(1, 3, inv(fam("fAd", vec![u(), chi_g.clone(), u()])), vec![
        ad.clone(),
        b(u(), b(chi_g.clone(), u())),
    ]);
    {
        let (m, merged) = box_merge(&[
            (u(), b(chi_g.clone(), u())),
            (u(), ad.clone()),
            (u(), b(u(), al.clone())),
            (u(), a.clone()),
            (u(), b(al.clone(), u())),
        ]);
        let (sp, smerged) =
            box_split(&[(u(), al.clone()), (u(), b(u(), chi_f.clone())), (u(), a.clone())]);
        q.apply(
            2,
            7,
            chain(vec![m, boxm(coh(merged.0.clone(), smerged.0.clone()), mg("Pi")), sp]),
            vec![
                b(u(), al.clone()),
                b(u(), b(u(), chi_f.clone())),
                b(u(), a.clone()),
            ],
        );
    }
    q.apply(4, 7, mg("pi"), vec![a.clone(), a.clone()]);
    q.apply(
        3,
        5,
        chain(vec![
            inv(fam("fA", vec![u(), u(), chi_f.clone()])),
            MorExpr::tensor(mid(a.clone()), boxm(MorExpr::BoxUnit { inv: true }, mid(chi_f.clone()))),
        ]),
        vec![a.clone(), b(u(), chi_f.clone())],
    );
    q.apply(
        5,
        7,
        chain(vec![
            fam("fA", vec![al.clone(), u(), u()]),
            MorExpr::tensor(boxm(mid(al.clone()), MorExpr::BoxUnit { inv: true }), mid(a.clone())),
        ]),
        vec![b(al.clone(), u()), a.clone()],
    );
    q.apply(4, 6, swap_blocks(u(), chi_f.clone(), al.clone(), u()), vec![
        b(al.clone(), u()),
        b(u(), chi_f.clone()),
    ]);
    q.apply(0, 5, mg("Pi"), vec![al.clone(), b(u(), chi_f.clone()), a.clone()]);
    let rhs = q.finish(&endw);
    Diagram { id: "ddt.axiom1".into(), indices: vec![], lhs, rhs }
}

fn a3_axiom2() -> Diagram {
    let (a, ad, al) = (g("A"), g("Ad"), g("alpha"));
    let (chi_f, chi_g) = (g("chiF"), g("chiG"));
    let (iota_f, iota_g) = (g("iotaF"), g("iotaG"));
    let (l, ld, rd) = (g("L"), g("Ld"), g("Rd"));
    let start = vec![
        b(g_obj(l.clone()), u()),
        b(chi_g.clone(), u()),
        ad.clone(),
        b(u(), al.clone()),
        a.clone(),
        b(al.clone(), u()),
        b(b(u(), iota_f.clone()), u()),
        b(rd.clone(), u()),
    ];
    // top
    let mut p = Path::new(start.clone());
    {
        let (m, merged) = box_merge(&[
            (al.clone(), u()),
            (b(u(), iota_f.clone()), u()),
            (rd.clone(), u()),
        ]);
        let (sp, smerged) = box_split(&[(b(iota_g.clone(), u()), u()), (ld.clone(), u())]);
        p.apply(
            5,
            8,
            chain(vec![m, boxm(mg("Mm"), coh(merged.1.clone(), smerged.1.clone())), sp]),
            vec![b(b(iota_g.clone(), u()), u()), b(ld.clone(), u())],
        );
    }
    p.apply(
        4,
        6,
        chain(vec![
            fam("fA", vec![iota_g.clone(), u(), u()]),
            MorExpr::tensor(boxm(mid(iota_g.clone()), MorExpr::BoxUnit { inv: true }), mid(a.clone())),
        ]),
        vec![b(iota_g.clone(), u()), a.clone()],
    );
    p.apply(3, 5, swap_blocks(u(), al.clone(), iota_g.clone(), u()), vec![
        b(iota_g.clone(), u()),
        b(u(), al.clone()),
    ]);
    p.apply(
        2,
        4,
        chain(vec![
            MorExpr::tensor(mid(ad.clone()), boxm(mid(iota_g.clone()), MorExpr::BoxUnit { inv: false })),
            fam("fAd", vec![iota_g.clone(), u(), u()]),
        ]),
        vec![b(b(iota_g.clone(), u()), u()), ad.clone()],
    );
    {
        let (m, merged) = box_merge(&[
            (g_obj(l.clone()), u()),
            (chi_g.clone(), u()),
            (b(iota_g.clone(), u()), u()),
        ]);
        p.apply(
            0,
            3,
            chain(vec![m, boxm(mg("gammaG"), coh(merged.1.clone(), u()))]),
            vec![b(l.clone(), u())],
        );
    }
    p.apply(0, 1, mg("lam"), vec![l.clone(), a.clone()]);
    p.apply(1, 3, mg("epsA"), vec![]);
    let endw = p.word().to_vec();
    let lhs = p.finish(&endw);

    // bottom
    let mut q = Path::new(start);
    q.apply(1, 6, mg("Pi"), vec![al.clone(), b(u(), chi_f.clone()), a.clone()]);
    q.apply(3, 5, fam("fA", vec![u(), iota_f.clone(), u()]), vec![
        b(u(), b(iota_f.clone(), u())),
        a.clone(),
    ]);
    q.apply(0, 2, inv(fam("falpha", vec![g("L")])), vec![al.clone(), b(u(), f_obj(g("L")))]);
    {
        let (m, _) = box_merge(&[
            (u(), f_obj(g("L"))),
            (u(), chi_f.clone()),
            (u(), b(iota_f.clone(), u())),
        ]);
        q.apply(
            1,
            4,
            chain(vec![m, boxm(coh(t(u(), t(u(), u())), u()), mg("gammaF"))]),
            vec![b(u(), l.clone())],
        );
    }
    q.apply(1, 4, mg("mu"), vec![]);
    {
        let xi_l = box_pair_cancel(l.clone(), u(), ld.clone(), u(), mg("epsL"), coh(t(u(), u()), u()));
        q.apply(1, 1, inv(xi_l), vec![b(l.clone(), u()), b(ld.clone(), u())]);
    }
    q.apply(1, 2, mg("lam"), vec![l.clone(), a.clone()]);
    q.apply(
        0,
        2,
        chain(vec![
            inv(fam("fL", vec![al.clone()])),
            MorExpr::tensor(mid(l.clone()), boxm(mg("iiso"), mid(al.clone()))),
        ]),
        vec![l.clone(), b(u(), al.clone())],
    );
    let rhs = q.finish(&endw);
    Diagram { id: "ddt.axiom2".into(), indices: vec![], lhs, rhs }
}

fn a3_axiom3() -> Diagram {
    let (a, ad, al) = (g("A"), g("Ad"), g("alpha"));
    let (chi_f, chi_g) = (g("chiF"), g("chiG"));
    let (iota_f, iota_g) = (g("iotaF"), g("iotaG"));
    let (l, ld, r, rd) = (g("L"), g("Ld"), g("R"), g("Rd"));
    let start = vec![
        b(chi_g.clone(), u()),
        ad.clone(),
        b(u(), al.clone()),
        b(u(), b(u(), iota_f.clone())),
        b(u(), rd.clone()),
        al.clone(),
    ];
    // top
    let mut p = Path::new(start.clone());
    p.apply(4, 5, mg("rho"), vec![a.clone(), rd.clone()]);
    p.apply(
        3,
        5,
        chain(vec![
            inv(fam("fA", vec![u(), u(), iota_f.clone()])),
            MorExpr::tensor(mid(a.clone()), boxm(MorExpr::BoxUnit { inv: true }, mid(iota_f.clone()))),
        ]),
        vec![a.clone(), b(u(), iota_f.clone())],
    );
    p.apply(
        5,
        7,
        chain(vec![
            fam("fRd", vec![al.clone()]),
            MorExpr::tensor(boxm(mid(al.clone()), mg("iiso")), mid(rd.clone())),
        ]),
        vec![b(al.clone(), u()), rd.clone()],
    );
    p.apply(4, 6, swap_blocks(u(), iota_f.clone(), al.clone(), u()), vec![
        b(al.clone(), u()),
        b(u(), iota_f.clone()),
    ]);
    p.apply(0, 5, mg("Pi"), vec![al.clone(), b(u(), chi_f.clone()), a.clone()]);
    p.apply(
        2,
        4,
        chain(vec![
            MorExpr::tensor(mid(a.clone()), boxm(MorExpr::BoxUnit { inv: false }, mid(iota_f.clone()))),
            fam("fA", vec![u(), u(), iota_f.clone()]),
        ]),
        vec![b(u(), b(u(), iota_f.clone())), a.clone()],
    );
    {
        let (m, _) = box_merge(&[(u(), chi_f.clone()), (u(), b(u(), iota_f.clone()))]);
        let (sp, _) = box_split(&[(u(), f_obj(g("Rd"))), (u(), r.clone())]);
        p.apply(
            1,
            3,
            chain(vec![m, boxm(coh(t(u(), u()), t(u(), u())), delta_mate("F")), sp]),
            vec![b(u(), f_obj(g("Rd"))), b(u(), r.clone())],
        );
    }
    rho_mate(&mut p, 2);
    p.apply(0, 2, fam("falpha", vec![g("Rd")]), vec![b(g_obj(g("Rd")), u()), al.clone()]);
    let endw = p.word().to_vec();
    let lhs = p.finish(&endw);

    // bottom
    let mut q = Path::new(start);
    {
        let (m, merged) = box_merge(&[
            (u(), al.clone()),
            (u(), b(u(), iota_f.clone())),
            (u(), rd.clone()),
        ]);
        let (sp, smerged) = box_split(&[(u(), b(iota_g.clone(), u())), (u(), ld.clone())]);
        q.apply(
            2,
            5,
            chain(vec![m, boxm(coh(merged.0.clone(), smerged.0.clone()), mg("Mm")), sp]),
            vec![b(u(), b(iota_g.clone(), u())), b(u(), ld.clone())],
        );
    }
    q.apply(1, 3, fam("fAd", vec![u(), iota_g.clone(), u()]), vec![
        b(b(u(), iota_g.clone()), u()),
        ad.clone(),
    ]);
    {
        let (m, _) = box_merge(&[(chi_g.clone(), u()), (b(u(), iota_g.clone()), u())]);
        let (sp, _) = box_split(&[(g_obj(g("Rd")), u()), (r.clone(), u())]);
        q.apply(
            0,
            2,
            chain(vec![m, boxm(delta_mate("G"), coh(t(u(), u()), t(u(), u()))), sp]),
            vec![b(g_obj(g("Rd")), u()), b(r.clone(), u())],
        );
    }
    // μ-mate: [R·U]⊗A·⊗[U·L·] → U
    q.apply(1, 1, inv(mg("mu")), vec![b(u(), l.clone()), a.clone(), b(rd.clone(), u())]);
    q.apply(
        3,
        5,
        box_pair_cancel(rd.clone(), u(), r.clone(), u(), inv(mg("etaR")), coh(t(u(), u()), u())),
        vec![],
    );
    q.apply(2, 4, mg("epsA"), vec![]);
    q.apply(
        1,
        3,
        box_pair_cancel(u(), l.clone(), u(), ld.clone(), coh(t(u(), u()), u()), mg("epsL")),
        vec![],
    );
    let rhs = q.finish(&endw);
    Diagram { id: "ddt.axiom3".into(), indices: vec![], lhs, rhs }
}

/// Signatures for the transformation (A.3) context.
pub fn a3_signatures() -> (BTreeMap<String, GenSig>, BTreeMap<String, FamilySig>) {
    let (mut gens, mut fams) = a1_signatures();
    let (a, ad, al, alphad) = (g("A"), g("Ad"), g("alpha"), g("alphad"));
    let (chi_f, chi_g) = (g("chiF"), g("chiG"));
    let (iota_f, iota_g) = (g("iotaF"), g("iotaG"));
    gens.insert("Pi".into(), GenSig {
        src: t(
            b(chi_g.clone(), u()),
            t(ad.clone(), t(b(u(), al.clone()), t(a.clone(), b(al.clone(), u())))),
        ),
        tgt: t(al.clone(), t(b(u(), chi_f.clone()), a.clone())),
    });
    gens.insert("Mm".into(), GenSig {
        src: t(al.clone(), t(b(u(), iota_f.clone()), g("Rd"))),
        tgt: t(b(iota_g.clone(), u()), g("Ld")),
    });
    for (name, chi, iota, slot) in [
        ("omegaF", &chi_f, &iota_f, "F"),
        ("omegaG", &chi_g, &iota_g, "G"),
    ] {
        gens.insert(name.into(), GenSig {
            src: t(ObjExpr::fapply(g("A"), slot), t(chi.clone(), b(chi.clone(), u()))),
            tgt: t(chi.clone(), t(b(u(), chi.clone()), g("A"))),
        });
        let gamma_name = if slot == "F" { "gammaF" } else { "gammaG" };
        gens.insert(gamma_name.into(), GenSig {
            src: t(ObjExpr::fapply(g("L"), slot), t(chi.clone(), b(iota.clone(), u()))),
            tgt: g("L"),
        });
        let delta_name = if slot == "F" { "deltaF" } else { "deltaG" };
        gens.insert(delta_name.into(), GenSig {
            src: ObjExpr::fapply(g("Rd"), slot),
            tgt: t(chi.clone(), t(b(u(), iota.clone()), g("Rd"))),
        });
    }
    gens.insert("epsalpha".into(), GenSig { src: t(al.clone(), alphad.clone()), tgt: u() });
    gens.insert("etaalpha".into(), GenSig { src: u(), tgt: t(alphad.clone(), al.clone()) });
    let p0 = g("#0");
    fams.insert("falpha".into(), FamilySig {
        arity: 1,
        src: t(al.clone(), b(u(), p0.clone().fapply("F"))),
        tgt: t(b(p0.clone().fapply("G"), u()), al.clone()),
    });
    fams.insert("falphad".into(), FamilySig {
        arity: 1,
        src: t(alphad.clone(), b(p0.clone().fapply("G"), u())),
        tgt: t(b(u(), p0.clone().fapply("F")), alphad.clone()),
    });
    (gens, fams)
}

// ============================ A.4 / A.5 ================================

/// The faithful second modification axiom (the ι/M diagram).
pub fn a4_diagrams() -> Vec<Diagram> {
    let (al, mobj) = (g("alpha"), g("mobj"));
    let (iota_f, iota_g) = (g("iotaF"), g("iotaG"));
    let (ld, rd) = (g("Ld"), g("Rd"));
    let start = vec![b(u(), mobj.clone()), al.clone(), b(u(), iota_f.clone()), rd.clone()];
    let mut p = Path::new(start.clone());
    p.apply(0, 2, mg("miso"), vec![g("beta"), b(mobj.clone(), u())]);
    p.apply(1, 3, swap_blocks(mobj.clone(), u(), u(), iota_f.clone()), vec![
        b(u(), iota_f.clone()),
        b(mobj.clone(), u()),
    ]);
    p.apply(
        2,
        4,
        chain(vec![
            MorExpr::tensor(boxm(mid(mobj.clone()), mg("iunit")), mid(rd.clone())),
            inv(fam("fRd", vec![mobj.clone()])),
        ]),
        vec![rd.clone(), mobj.clone()],
    );
    p.apply(0, 3, mg("MB"), vec![b(iota_g.clone(), u()), ld.clone()]);
    let endw = p.word().to_vec();
    let lhs = p.finish(&endw);

    let mut q = Path::new(start);
    q.apply(1, 4, mg("MA"), vec![b(iota_g.clone(), u()), ld.clone()]);
    q.apply(0, 2, swap_blocks(u(), mobj.clone(), iota_g.clone(), u()), vec![
        b(iota_g.clone(), u()),
        b(u(), mobj.clone()),
    ]);
    q.apply(
        1,
        3,
        chain(vec![
            MorExpr::tensor(boxm(mg("iunit"), mid(mobj.clone())), mid(ld.clone())),
            inv(fam("fLd", vec![mobj.clone()])),
        ]),
        vec![ld.clone(), mobj.clone()],
    );
    let rhs = q.finish(&endw);
    vec![Diagram { id: "ddm.axiom2".into(), indices: vec![], lhs, rhs }]
}

/// The single perturbation axiom: σ intertwines the two modification
/// isomorphisms.
pub fn a5_diagram() -> Diagram {
    let (al, mobj, nobj) = (g("alpha"), g("mobj"), g("nobj"));
    let lhs = chain(vec![
        mg("misoM"),
        MorExpr::tensor(mid(g("beta")), boxm(mg("sigma"), mid(u()))),
    ]);
    let rhs = chain(vec![
        MorExpr::tensor(boxm(mid(u()), mg("sigma")), mid(al.clone())),
        mg("misoN"),
    ]);
    let _ = (mobj, nobj);
    Diagram { id: "ddp.axiom".into(), indices: vec![], lhs, rhs }
}

/// Signatures for the modification/perturbation contexts.
pub fn a4_signatures() -> (BTreeMap<String, GenSig>, BTreeMap<String, FamilySig>) {
    let (mut gens, fams) = a3_signatures();
    let (al, be, mobj, nobj) = (g("alpha"), g("beta"), g("mobj"), g("nobj"));
    gens.insert("miso".into(), GenSig {
        src: t(b(u(), mobj.clone()), al.clone()),
        tgt: t(be.clone(), b(mobj.clone(), u())),
    });
    gens.insert("misoM".into(), GenSig {
        src: t(b(u(), mobj.clone()), al.clone()),
        tgt: t(be.clone(), b(mobj.clone(), u())),
    });
    gens.insert("misoN".into(), GenSig {
        src: t(b(u(), nobj.clone()), al.clone()),
        tgt: t(be.clone(), b(nobj.clone(), u())),
    });
    gens.insert("sigma".into(), GenSig { src: mobj.clone(), tgt: nobj.clone() });
    gens.insert("MA".into(), GenSig {
        src: t(al.clone(), t(b(u(), g("iotaF")), g("Rd"))),
        tgt: t(b(g("iotaG"), u()), g("Ld")),
    });
    gens.insert("MB".into(), GenSig {
        src: t(be.clone(), t(b(u(), g("iotaF")), g("Rd"))),
        tgt: t(b(g("iotaG"), u()), g("Ld")),
    });
    gens.insert("PiA".into(), GenSig {
        src: t(
            b(g("chiG"), u()),
            t(g("Ad"), t(b(u(), al.clone()), t(g("A"), b(al.clone(), u())))),
        ),
        tgt: t(al.clone(), t(b(u(), g("chiF")), g("A"))),
    });
    gens.insert("PiB".into(), GenSig {
        src: t(
            b(g("chiG"), u()),
            t(g("Ad"), t(b(u(), be.clone()), t(g("A"), b(be.clone(), u())))),
        ),
        tgt: t(be.clone(), t(b(u(), g("chiF")), g("A"))),
    });
    (gens, fams)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_library_boundaries_audit() {
        let (gens, fams) = a1_signatures();
        audit_diagrams(&a1_diagrams(), &gens, &fams).unwrap();
    }

    #[test]
    fn pi_mate_is_well_typed() {
        let (gens, fams) = a1_signatures();
        let theta = pi_mate_theta();
        let (src, tgt) = infer_boundaries(&theta, &gens, &fams).unwrap();
        assert_eq!(src, t(g("Ad"), t(b(u(), g("A")), g("A"))));
        assert_eq!(tgt, t(g("A"), b(g("Ad"), u())));
        let bridge = pi_bridge_rev();
        let (src, tgt) = infer_boundaries(&bridge, &gens, &fams).unwrap();
        assert_eq!(src, t(g("Ad"), b(u(), g("Ad"))));
        assert_eq!(tgt, t(b(g("A"), u()), t(g("Ad"), g("Ad"))));
    }
}

#[cfg(test)]
mod a2_tests {
    use super::*;

    #[test]
    fn a2_library_boundaries_audit() {
        let (gens, fams) = a2_signatures();
        audit_diagrams(&a2_diagrams(), &gens, &fams).unwrap();
    }
}

#[cfg(test)]
mod a3_tests {
    use super::*;

    #[test]
    fn a3_library_boundaries_audit() {
        let (gens, fams) = a3_signatures();
        audit_diagrams(&a3_diagrams(true), &gens, &fams).unwrap();
        audit_diagrams(&a3_diagrams(false), &gens, &fams).unwrap();
    }

    #[test]
    fn a4_a5_boundaries_audit() {
        let (gens, fams) = a4_signatures();
        audit_diagrams(&a4_diagrams(), &gens, &fams).unwrap();
        audit_diagrams(&[a5_diagram()], &gens, &fams).unwrap();
    }
}
