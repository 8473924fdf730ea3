//! Finite commutative monoids: validation, inverses, homomorphisms,
//! enumeration up to isomorphism, and the strict Eckmann-Hilton checker.
//!
//! Elements are dense indices `0..order`. The unit is an arbitrary index,
//! not necessarily 0. All laws are checked exhaustively at construction;
//! downstream modules assume validated carriers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Unvalidated monoid data, e.g. as decoded from a structure file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawMonoid {
    pub order: usize,
    /// Row-major operation table: `table[x * order + y] = x * y`.
    pub table: Vec<usize>,
    pub unit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("operation table has {got} entries, expected {expected} for order {order}")]
    TableDimension { order: usize, expected: usize, got: usize },
    #[error("table entry {value} at ({x},{y}) is out of range for order {order}")]
    EntryOutOfRange { x: usize, y: usize, value: usize, order: usize },
    #[error("unit index {unit} is out of range for order {order}")]
    UnitOutOfRange { unit: usize, order: usize },
    #[error("associativity fails at ({x},{y},{z}): ({x}*{y})*{z} != {x}*({y}*{z})")]
    Associativity { x: usize, y: usize, z: usize },
    #[error("commutativity fails at ({x},{y}): {x}*{y} != {y}*{x}")]
    Commutativity { x: usize, y: usize },
    #[error("unit law fails at {x}")]
    UnitLaw { x: usize },
    #[error("element {element} is not invertible (required for {role})")]
    NotInvertible { element: usize, role: &'static str },
    #[error("enumeration order {order} exceeds cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("hom map has {got} entries, expected {expected}")]
    HomDimension { expected: usize, got: usize },
    #[error("hom does not preserve the unit: map({src_unit}) = {got}, target unit is {tgt_unit}")]
    HomUnit { src_unit: usize, got: usize, tgt_unit: usize },
    #[error("hom fails at ({x},{y}): map(x*y) != map(x)*map(y)")]
    HomMultiplicative { x: usize, y: usize },
    #[error("shared unit {unit} fails for operation `{op}` at {x}")]
    TwoOpUnit { op: &'static str, unit: usize, x: usize },
    #[error("interchange fails at ({a},{b},{c},{d})")]
    Interchange { a: usize, b: usize, c: usize, d: usize },
    #[error("internal consistency violation: {0}")]
    Internal(&'static str),
}

/// A validated finite commutative monoid with precomputed inverses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteCommutativeMonoid {
    order: usize,
    table: Vec<usize>,
    unit: usize,
    inverses: Vec<Option<usize>>,
}

impl FiniteCommutativeMonoid {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    /// The inverse of `x`, if `x` is invertible.
    pub fn inverse(&self, x: usize) -> Option<usize> {
        self.inverses[x]
    }

    pub fn is_invertible(&self, x: usize) -> bool {
        self.inverses[x].is_some()
    }

    /// All invertible element indices, ascending.
    pub fn invertible_elements(&self) -> Vec<usize> {
        (0..self.order).filter(|&x| self.is_invertible(x)).collect()
    }

    /// `x^k` for signed `k`; negative powers require invertibility.
    pub fn pow(&self, x: usize, k: i64) -> usize {
        let (base, reps) = if k >= 0 {
            (x, k as u64)
        } else {
            let inv = self.inverse(x).expect("negative power of a non-invertible element");
            (inv, (-k) as u64)
        };
        let mut acc = self.unit;
        for _ in 0..reps {
            acc = self.op(acc, base);
        }
        acc
    }

    /// Product of a slice of elements (left fold from the unit).
    pub fn product(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.unit, |acc, &x| self.op(acc, x))
    }

    pub fn raw(&self) -> RawMonoid {
        RawMonoid { order: self.order, table: self.table.clone(), unit: self.unit }
    }

    /// Additive Z/n.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = (x + y) % n;
            }
        }
        validate_monoid(&RawMonoid { order: n, table, unit: 0 }).expect("Z/n is a monoid")
    }

    /// Lexicographically least operation table over all carrier permutations.
    /// Isomorphic monoids share a canonical form, and the unit is determined
    /// by the table, so the table alone suffices as the key.
    pub fn canonical_form(&self) -> Vec<usize> {
        let n = self.order;
        let mut best: Option<Vec<usize>> = None;
        let mut perm: Vec<usize> = (0..n).collect();
        permute_all(&mut perm, 0, &mut |p| {
            let mut t = vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    t[p[x] * n + p[y]] = p[self.op(x, y)];
                }
            }
            match &best {
                Some(b) if *b <= t => {}
                _ => best = Some(t),
            }
        });
        best.unwrap()
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.order == other.order && self.canonical_form() == other.canonical_form()
    }
}

fn permute_all(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Validates raw monoid data, reporting the first violated law with its witness.
pub fn validate_monoid(candidate: &RawMonoid) -> Result<FiniteCommutativeMonoid, MonoidError> {
    let n = candidate.order;
    if candidate.table.len() != n * n {
        return Err(MonoidError::TableDimension {
            order: n,
            expected: n * n,
            got: candidate.table.len(),
        });
    }
    if candidate.unit >= n {
        return Err(MonoidError::UnitOutOfRange { unit: candidate.unit, order: n });
    }
    for x in 0..n {
        for y in 0..n {
            let v = candidate.table[x * n + y];
            if v >= n {
                return Err(MonoidError::EntryOutOfRange { x, y, value: v, order: n });
            }
        }
    }
    let op = |x: usize, y: usize| candidate.table[x * n + y];
    for x in 0..n {
        if op(candidate.unit, x) != x || op(x, candidate.unit) != x {
            return Err(MonoidError::UnitLaw { x });
        }
    }
    for x in 0..n {
        for y in 0..n {
            if op(x, y) != op(y, x) {
                return Err(MonoidError::Commutativity { x, y });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op(op(x, y), z) != op(x, op(y, z)) {
                    return Err(MonoidError::Associativity { x, y, z });
                }
            }
        }
    }
    let mut inverses = vec![None; n];
    for x in 0..n {
        inverses[x] = (0..n).find(|&y| op(x, y) == candidate.unit);
    }
    Ok(FiniteCommutativeMonoid {
        order: n,
        table: candidate.table.clone(),
        unit: candidate.unit,
        inverses,
    })
}

pub const ENUMERATION_CAP: usize = 5;

/// All commutative monoids of the given order, up to isomorphism, in a
/// deterministic canonical order (sorted by canonical table).
///
/// Backtracking over the upper triangle of the table with the unit pinned to
/// index 0; every isomorphism class has such a representative.
pub fn enumerate_cmonoids(order: usize) -> Result<Vec<FiniteCommutativeMonoid>, MonoidError> {
    if order == 0 || order > ENUMERATION_CAP {
        return Err(MonoidError::OrderCap { order, cap: ENUMERATION_CAP });
    }
    let n = order;
    let mut table = vec![usize::MAX; n * n];
    for x in 0..n {
        table[x] = x; // 0 * x = x
        table[x * n] = x; // x * 0 = x
    }
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for x in 1..n {
        for y in x..n {
            cells.push((x, y));
        }
    }
    let mut found: Vec<(Vec<usize>, FiniteCommutativeMonoid)> = Vec::new();
    fill(&mut table, n, &cells, 0, &mut found);
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found.dedup_by(|a, b| a.0 == b.0);
    Ok(found.into_iter().map(|(_, m)| m).collect())
}

fn fill(
    table: &mut Vec<usize>,
    n: usize,
    cells: &[(usize, usize)],
    idx: usize,
    found: &mut Vec<(Vec<usize>, FiniteCommutativeMonoid)>,
) {
    if idx == cells.len() {
        let raw = RawMonoid { order: n, table: table.clone(), unit: 0 };
        if let Ok(m) = validate_monoid(&raw) {
            found.push((m.canonical_form(), m));
        }
        return;
    }
    let (x, y) = cells[idx];
    for v in 0..n {
        table[x * n + y] = v;
        table[y * n + x] = v;
        if associativity_consistent(table, n) {
            fill(table, n, cells, idx + 1, found);
        }
    }
    table[x * n + y] = usize::MAX;
    table[y * n + x] = usize::MAX;
}

/// Partial associativity check: only rejects when all involved cells are set.
fn associativity_consistent(table: &[usize], n: usize) -> bool {
    let get = |x: usize, y: usize| -> Option<usize> {
        let v = table[x * n + y];
        (v != usize::MAX).then_some(v)
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = get(x, y).and_then(|xy| get(xy, z));
                let rhs = get(y, z).and_then(|yz| get(x, yz));
                if let (Some(a), Some(b)) = (lhs, rhs) {
                    if a != b {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// A validated homomorphism of commutative monoids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidHom {
    pub source: FiniteCommutativeMonoid,
    pub target: FiniteCommutativeMonoid,
    map: Vec<usize>,
}

impl MonoidHom {
    pub fn new(
        source: FiniteCommutativeMonoid,
        target: FiniteCommutativeMonoid,
        map: Vec<usize>,
    ) -> Result<Self, MonoidError> {
        if map.len() != source.order() {
            return Err(MonoidError::HomDimension { expected: source.order(), got: map.len() });
        }
        if map[source.unit()] != target.unit() {
            return Err(MonoidError::HomUnit {
                src_unit: source.unit(),
                got: map[source.unit()],
                tgt_unit: target.unit(),
            });
        }
        for x in 0..source.order() {
            for y in 0..source.order() {
                if map[source.op(x, y)] != target.op(map[x], map[y]) {
                    return Err(MonoidError::HomMultiplicative { x, y });
                }
            }
        }
        Ok(MonoidHom { source, target, map })
    }

    pub fn identity(m: &FiniteCommutativeMonoid) -> Self {
        MonoidHom { source: m.clone(), target: m.clone(), map: (0..m.order()).collect() }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map_table(&self) -> &[usize] {
        &self.map
    }

    /// `self` after `other` (other: R -> S, self: S -> T).
    pub fn compose(&self, other: &MonoidHom) -> Result<MonoidHom, MonoidError> {
        if other.target != self.source {
            return Err(MonoidError::Internal("hom composition: source/target mismatch"));
        }
        let map = other.map.iter().map(|&x| self.map[x]).collect();
        Ok(MonoidHom { source: other.source.clone(), target: self.target.clone(), map })
    }

    /// All homomorphisms source -> target, in lexicographic map order.
    pub fn enumerate(
        source: &FiniteCommutativeMonoid,
        target: &FiniteCommutativeMonoid,
    ) -> Vec<MonoidHom> {
        let mut out = Vec::new();
        let mut map = vec![0usize; source.order()];
        enumerate_maps(source, target, &mut map, 0, &mut out);
        out
    }
}

fn enumerate_maps(
    source: &FiniteCommutativeMonoid,
    target: &FiniteCommutativeMonoid,
    map: &mut Vec<usize>,
    idx: usize,
    out: &mut Vec<MonoidHom>,
) {
    if idx == source.order() {
        if let Ok(h) = MonoidHom::new(source.clone(), target.clone(), map.clone()) {
            out.push(h);
        }
        return;
    }
    for v in 0..target.order() {
        map[idx] = v;
        enumerate_maps(source, target, map, idx + 1, out);
    }
}

/// A carrier with two binary operations sharing a unit, the Eckmann-Hilton
/// hypothesis package.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoOpSet {
    pub order: usize,
    /// Row-major table for the first operation.
    pub star: Vec<usize>,
    /// Row-major table for the second operation.
    pub circ: Vec<usize>,
    pub shared_unit: usize,
}

impl TwoOpSet {
    fn star_of(&self, x: usize, y: usize) -> usize {
        self.star[x * self.order + y]
    }
    fn circ_of(&self, x: usize, y: usize) -> usize {
        self.circ[x * self.order + y]
    }

    pub fn validate(&self) -> Result<(), MonoidError> {
        let n = self.order;
        if self.star.len() != n * n {
            return Err(MonoidError::TableDimension { order: n, expected: n * n, got: self.star.len() });
        }
        if self.circ.len() != n * n {
            return Err(MonoidError::TableDimension { order: n, expected: n * n, got: self.circ.len() });
        }
        if self.shared_unit >= n {
            return Err(MonoidError::UnitOutOfRange { unit: self.shared_unit, order: n });
        }
        for (name, t) in [("star", &self.star), ("circ", &self.circ)] {
            for x in 0..n {
                for y in 0..n {
                    let v = t[x * n + y];
                    if v >= n {
                        return Err(MonoidError::EntryOutOfRange { x, y, value: v, order: n });
                    }
                }
            }
            for x in 0..n {
                if t[self.shared_unit * n + x] != x || t[x * n + self.shared_unit] != x {
                    return Err(MonoidError::TwoOpUnit { op: name, unit: self.shared_unit, x });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if self.circ_of(self.star_of(a, b), self.star_of(c, d))
                            != self.star_of(self.circ_of(a, c), self.circ_of(b, d))
                        {
                            return Err(MonoidError::Interchange { a, b, c, d });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Checks the Eckmann-Hilton hypotheses, then confirms the conclusion:
/// the two operations coincide tablewise and are commutative. Returns the
/// common operation as a validated commutative monoid.
///
/// A valid input whose conclusion fails is mathematically impossible and is
/// reported as an internal-consistency error rather than silently accepted.
pub fn eckmann_hilton_check(s: &TwoOpSet) -> Result<FiniteCommutativeMonoid, MonoidError> {
    s.validate()?;
    let n = s.order;
    if s.star != s.circ {
        return Err(MonoidError::Internal("Eckmann-Hilton conclusion failed: star != circ"));
    }
    for x in 0..n {
        for y in 0..n {
            if s.star_of(x, y) != s.star_of(y, x) {
                return Err(MonoidError::Internal(
                    "Eckmann-Hilton conclusion failed: common operation not commutative",
                ));
            }
        }
    }
    validate_monoid(&RawMonoid { order: n, table: s.star.clone(), unit: s.shared_unit })
        .map_err(|_| MonoidError::Internal("Eckmann-Hilton conclusion failed: not a monoid"))
}

/// Enumerates every unital table pair of the given order and yields the valid
/// `TwoOpSet`s. Used as the exhaustive oracle for the Eckmann-Hilton checker.
pub fn enumerate_two_op_sets(order: usize) -> Vec<TwoOpSet> {
    let n = order;
    let mut out = Vec::new();
    for unit in 0..n {
        let stars = unital_tables(n, unit);
        for star in &stars {
            for circ in &stars {
                let s = TwoOpSet {
                    order: n,
                    star: star.clone(),
                    circ: circ.clone(),
                    shared_unit: unit,
                };
                if s.validate().is_ok() {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// All tables on `0..n` for which `unit` is a two-sided unit.
fn unital_tables(n: usize, unit: usize) -> Vec<Vec<usize>> {
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != unit && y != unit)
        .collect();
    let mut base = vec![0usize; n * n];
    for x in 0..n {
        base[unit * n + x] = x;
        base[x * n + unit] = x;
    }
    let mut out = Vec::new();
    let mut stack = vec![(base, 0usize)];
    while let Some((t, i)) = stack.pop() {
        if i == free.len() {
            out.push(t);
            continue;
        }
        let (x, y) = free[i];
        for v in 0..n {
            let mut t2 = t.clone();
            t2[x * n + y] = v;
            stack.push((t2, i + 1));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FiniteCommutativeMonoid {
        FiniteCommutativeMonoid::cyclic(2)
    }

    #[test]
    fn z2_is_valid() {
        let m = z2();
        assert_eq!(m.op(1, 1), 0);
        assert_eq!(m.invertible_elements(), vec![0, 1]);
    }

    #[test]
    fn unit_violation_is_reported() {
        // op(1,1)=1, op(0,1)=0 with unit=0: 0 fails as a unit at x=1.
        let raw = RawMonoid { order: 2, table: vec![0, 0, 0, 1], unit: 0 };
        assert_eq!(validate_monoid(&raw), Err(MonoidError::UnitLaw { x: 1 }));
    }

    #[test]
    fn multiplicative_01_has_single_invertible() {
        // ({0,1}, multiplication, unit = 1)
        let raw = RawMonoid { order: 2, table: vec![0, 0, 0, 1], unit: 1 };
        let m = validate_monoid(&raw).unwrap();
        assert_eq!(m.invertible_elements(), vec![1]);
    }

    #[test]
    fn z4_all_invertible() {
        let m = FiniteCommutativeMonoid::cyclic(4);
        assert_eq!(m.invertible_elements(), vec![0, 1, 2, 3]);
        assert_eq!(m.inverse(1), Some(3));
        assert_eq!(m.pow(1, -2), 2);
    }

    /// Brute-force oracle: every order-3 table, checked by a direct law
    /// evaluator, must agree with `validate_monoid`.
    #[test]
    fn order3_tables_accepted_iff_lawful() {
        let n = 3usize;
        let mut table = vec![0usize; 9];
        let mut idx = 0u64;
        let total = 3u64.pow(9);
        let mut accepted = 0usize;
        while idx < total {
            let mut k = idx;
            for c in table.iter_mut() {
                *c = (k % 3) as usize;
                k /= 3;
            }
            for unit in 0..n {
                let raw = RawMonoid { order: n, table: table.clone(), unit };
                let direct = direct_laws_hold(&raw);
                let validated = validate_monoid(&raw).is_ok();
                assert_eq!(direct, validated, "table {table:?} unit {unit}");
                if validated {
                    accepted += 1;
                }
            }
            idx += 1;
        }
        assert!(accepted > 0);
    }

    fn direct_laws_hold(raw: &RawMonoid) -> bool {
        let n = raw.order;
        let op = |x: usize, y: usize| raw.table[x * n + y];
        let unit_ok = (0..n).all(|x| op(raw.unit, x) == x && op(x, raw.unit) == x);
        let comm = (0..n).all(|x| (0..n).all(|y| op(x, y) == op(y, x)));
        let assoc = (0..n)
            .all(|x| (0..n).all(|y| (0..n).all(|z| op(op(x, y), z) == op(x, op(y, z)))));
        unit_ok && comm && assoc
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_cmonoids(1).unwrap().len(), 1);
        // Z/2 and the meet-semilattice.
        assert_eq!(enumerate_cmonoids(2).unwrap().len(), 2);
        // Frozen from the brute-force oracle below.
        assert_eq!(enumerate_cmonoids(3).unwrap().len(), 5);
        assert!(enumerate_cmonoids(6).is_err());
    }

    /// Independent oracle for the order-3 count: enumerate all 3^9 tables with
    /// every unit choice, validate directly, dedup by canonical form.
    #[test]
    fn order3_enumeration_matches_brute_force() {
        let n = 3usize;
        let mut canon: Vec<Vec<usize>> = Vec::new();
        let total = 3u64.pow(9);
        let mut idx = 0u64;
        let mut table = vec![0usize; 9];
        while idx < total {
            let mut k = idx;
            for c in table.iter_mut() {
                *c = (k % 3) as usize;
                k /= 3;
            }
            for unit in 0..n {
                if let Ok(m) = validate_monoid(&RawMonoid { order: n, table: table.clone(), unit }) {
                    let c = m.canonical_form();
                    if !canon.contains(&c) {
                        canon.push(c);
                    }
                }
            }
            idx += 1;
        }
        assert_eq!(canon.len(), enumerate_cmonoids(3).unwrap().len());
    }

    #[test]
    fn enumerated_monoids_revalidate() {
        for order in 1..=4 {
            for m in enumerate_cmonoids(order).unwrap() {
                assert!(validate_monoid(&m.raw()).is_ok());
            }
        }
    }

    #[test]
    fn invertibles_closed_under_product() {
        for order in 1..=4 {
            for m in enumerate_cmonoids(order).unwrap() {
                for &x in &m.invertible_elements() {
                    for &y in &m.invertible_elements() {
                        let xy = m.op(x, y);
                        assert_eq!(
                            m.inverse(xy),
                            Some(m.op(m.inverse(x).unwrap(), m.inverse(y).unwrap()))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hom_enumeration_z2_to_z2() {
        let m = z2();
        let homs = MonoidHom::enumerate(&m, &m);
        // identity and the zero map
        assert_eq!(homs.len(), 2);
    }

    #[test]
    fn eckmann_hilton_z2() {
        let m = z2();
        let s = TwoOpSet {
            order: 2,
            star: m.raw().table,
            circ: z2().raw().table,
            shared_unit: 0,
        };
        let out = eckmann_hilton_check(&s).unwrap();
        assert!(out.is_isomorphic(&z2()));
    }

    #[test]
    fn eckmann_hilton_exhaustive_small_orders() {
        for order in 1..=3 {
            for s in enumerate_two_op_sets(order) {
                eckmann_hilton_check(&s).expect("valid TwoOpSet must confirm");
            }
        }
    }
}
