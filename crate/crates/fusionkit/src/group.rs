//! Finite groups as dense Cayley tables.
//!
//! Elements are 0-based indices into an `order × order` multiplication table.
//! Construction checks the full group axioms (Latin square, two-sided
//! identity, associativity) and rejects bad tables with a witness, so every
//! `FiniteGroup` in the system is honest. All derived structure (series,
//! Sylow subgroups, the Fitting subgroup, Frobenius decompositions) is
//! computed by direct enumeration and cross-checkable by brute force.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a group element in its Cayley table.
pub type Elem = u16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("table must be {order}x{order}, got {got} entries")]
    BadShape { order: usize, got: usize },
    #[error("entry {value} at ({row},{col}) is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("row {row} is not a permutation (duplicate value {value})")]
    RowNotPermutation { row: usize, value: usize },
    #[error("column {col} is not a permutation (duplicate value {value})")]
    ColNotPermutation { col: usize, value: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("associativity fails at ({a},{b},{c}): ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: Elem, b: Elem, c: Elem },
    #[error("element set is not closed under multiplication: {a}*{b} = {c} falls outside")]
    NotClosed { a: Elem, b: Elem, c: Elem },
    #[error("element {elem} is out of range for order {order}")]
    ElemOutOfRange { elem: Elem, order: usize },
    #[error("action of {actor} is not a permutation of the normal factor")]
    ActionNotPermutation { actor: Elem },
    #[error("action of {actor} is not an automorphism: breaks at ({x},{y})")]
    ActionNotAutomorphism { actor: Elem, x: Elem, y: Elem },
    #[error("action is not a homomorphism: fails at pair ({a},{b})")]
    ActionNotHomomorphism { a: Elem, b: Elem },
    #[error("group order {order} exceeds cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("subgroups do not factor the group: |F|*|Gamma| = {product}, |G| = {order}")]
    NotAFactorization { product: usize, order: usize },
    #[error("subgroup intersection is not trivial: contains element {elem}")]
    IntersectionNotTrivial { elem: Elem },
    #[error("{0} is not a subgroup")]
    NotASubgroup(String),
}

/// A finite group given by its full multiplication table.
#[derive(Clone, Serialize, Deserialize)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major: `table[a * order + b]` is the product `a * b`.
    table: Vec<Elem>,
    identity: Elem,
    inverse: Vec<Elem>,
    name: Option<String>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}
impl Eq for FiniteGroup {}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FiniteGroup(order={}, name={:?})",
            self.order,
            self.name.as_deref().unwrap_or("")
        )
    }
}

impl FiniteGroup {
    /// Builds a group from a flat row-major table, checking all group axioms.
    pub fn new(order: usize, table: Vec<Elem>) -> Result<Self, GroupError> {
        if order == 0 || table.len() != order * order {
            return Err(GroupError::BadShape { order, got: table.len() });
        }
        for (i, &v) in table.iter().enumerate() {
            if (v as usize) >= order {
                return Err(GroupError::EntryOutOfRange {
                    row: i / order,
                    col: i % order,
                    value: v as usize,
                    order,
                });
            }
        }
        // Latin square: rows and columns are permutations.
        let mut seen = vec![false; order];
        for r in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for c in 0..order {
                let v = table[r * order + c] as usize;
                if seen[v] {
                    return Err(GroupError::RowNotPermutation { row: r, value: v });
                }
                seen[v] = true;
            }
        }
        for c in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for r in 0..order {
                let v = table[r * order + c] as usize;
                if seen[v] {
                    return Err(GroupError::ColNotPermutation { col: c, value: v });
                }
                seen[v] = true;
            }
        }
        let identity = (0..order)
            .find(|&e| {
                (0..order).all(|x| {
                    table[e * order + x] == x as Elem && table[x * order + e] == x as Elem
                })
            })
            .ok_or(GroupError::NoIdentity)? as Elem;
        for a in 0..order {
            for b in 0..order {
                let ab = table[a * order + b] as usize;
                for c in 0..order {
                    let bc = table[b * order + c] as usize;
                    if table[ab * order + c] != table[a * order + bc] {
                        return Err(GroupError::NotAssociative {
                            a: a as Elem,
                            b: b as Elem,
                            c: c as Elem,
                        });
                    }
                }
            }
        }
        let inverse = (0..order)
            .map(|a| (0..order).find(|&b| table[a * order + b] == identity).unwrap() as Elem)
            .collect();
        Ok(FiniteGroup { order, table, identity, inverse, name: None })
    }

    /// Builds a group from nested rows.
    pub fn from_rows(rows: &[Vec<Elem>]) -> Result<Self, GroupError> {
        let order = rows.len();
        let mut flat = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(GroupError::BadShape { order, got: row.len() * order });
            }
            flat.extend_from_slice(row);
        }
        Self::new(order, flat)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a as usize]
    }

    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        0..self.order as Elem
    }

    pub fn table_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.order).map(|r| self.table[r * self.order..(r + 1) * self.order].to_vec()).collect()
    }

    pub fn power(&self, g: Elem, k: usize) -> Elem {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn element_order(&self, g: Elem) -> usize {
        let mut acc = g;
        let mut n = 1;
        while acc != self.identity {
            acc = self.mul(acc, g);
            n += 1;
        }
        n
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        self.elements().fold(1usize, |acc, g| lcm(acc, self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order as Elem)
            .all(|a| (0..self.order as Elem).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&g| self.elements().all(|h| self.mul(g, h) == self.mul(h, g)))
            .collect()
    }

    pub fn centralizer(&self, g: Elem) -> Vec<Elem> {
        self.elements().filter(|&h| self.mul(h, g) == self.mul(g, h)).collect()
    }

    /// Conjugacy classes, identity class first, the rest ordered by smallest
    /// member. Each class is sorted.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Elem>> {
        let mut assigned = vec![false; self.order];
        let mut classes: Vec<Vec<Elem>> = Vec::new();
        let mut order: Vec<Elem> = (0..self.order as Elem).collect();
        // Identity first so the principal class leads.
        order.retain(|&g| g != self.identity);
        order.insert(0, self.identity);
        for g in order {
            if assigned[g as usize] {
                continue;
            }
            let mut class: Vec<Elem> =
                self.elements().map(|h| self.conj(h, g)).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
            class.sort_unstable();
            for &x in &class {
                assigned[x as usize] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Maps each element to the index of its conjugacy class in
    /// `conjugacy_classes()` order.
    pub fn class_map(&self, classes: &[Vec<Elem>]) -> Vec<usize> {
        let mut map = vec![usize::MAX; self.order];
        for (i, class) in classes.iter().enumerate() {
            for &g in class {
                map[g as usize] = i;
            }
        }
        map
    }

    /// Closure of `gens` under multiplication; sorted element list.
    pub fn subgroup_generated(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut member = vec![false; self.order];
        member[self.identity as usize] = true;
        let mut queue = vec![self.identity];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y as usize] {
                    member[y as usize] = true;
                    queue.push(y);
                }
            }
        }
        queue.sort_unstable();
        queue
    }

    /// Checks that a sorted element list is a subgroup.
    pub fn is_subgroup(&self, elems: &[Elem]) -> bool {
        if elems.is_empty() || !elems.contains(&self.identity) {
            return false;
        }
        elems.iter().all(|&a| {
            (a as usize) < self.order && elems.iter().all(|&b| elems.binary_search(&self.mul(a, b)).is_ok())
        })
    }

    pub fn is_normal(&self, elems: &[Elem]) -> bool {
        self.elements().all(|g| elems.iter().all(|&h| elems.binary_search(&self.conj(g, h)).is_ok()))
    }

    pub fn normalizer(&self, elems: &[Elem]) -> Vec<Elem> {
        self.elements()
            .filter(|&g| elems.iter().all(|&h| elems.binary_search(&self.conj(g, h)).is_ok()))
            .collect()
    }

    /// Subgroup generated by commutators `[a,b]` with `a in left`, `b in right`.
    pub fn commutator_subgroup(&self, left: &[Elem], right: &[Elem]) -> Vec<Elem> {
        let mut gens = std::collections::BTreeSet::new();
        for &a in left {
            for &b in right {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                gens.insert(c);
            }
        }
        let gens: Vec<Elem> = gens.into_iter().collect();
        self.subgroup_generated(&gens)
    }

    /// Re-indexes a (closed) element set as a standalone group.
    /// Returns the group and the map from new indices to parent elements.
    pub fn subgroup_as_group(&self, elems: &[Elem]) -> Result<(FiniteGroup, Vec<Elem>), GroupError> {
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &e in &sorted {
            if (e as usize) >= self.order {
                return Err(GroupError::ElemOutOfRange { elem: e, order: self.order });
            }
        }
        let mut pos = vec![usize::MAX; self.order];
        for (i, &e) in sorted.iter().enumerate() {
            pos[e as usize] = i;
        }
        let n = sorted.len();
        let mut table = vec![0 as Elem; n * n];
        for (i, &a) in sorted.iter().enumerate() {
            for (j, &b) in sorted.iter().enumerate() {
                let c = self.mul(a, b);
                if pos[c as usize] == usize::MAX {
                    return Err(GroupError::NotClosed { a, b, c });
                }
                table[i * n + j] = pos[c as usize] as Elem;
            }
        }
        let group = FiniteGroup::new(n, table)?;
        Ok((group, sorted))
    }

    /// All subgroups by breadth-first closure, sorted lexicographically by
    /// element list. Exhaustive; intended for orders up to about 60.
    pub fn all_subgroups(&self) -> Vec<Vec<Elem>> {
        let mut found: std::collections::BTreeSet<Vec<Elem>> = std::collections::BTreeSet::new();
        let trivial = vec![self.identity];
        found.insert(trivial.clone());
        let mut frontier = vec![trivial];
        while let Some(sub) = frontier.pop() {
            for g in self.elements() {
                if sub.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = sub.clone();
                gens.push(g);
                let bigger = self.subgroup_generated(&gens);
                if found.insert(bigger.clone()) {
                    frontier.push(bigger);
                }
            }
        }
        found.into_iter().collect()
    }

    /// Distinct cyclic subgroups of prime order `p`.
    pub fn cyclic_subgroups_of_order(&self, p: usize) -> Vec<Vec<Elem>> {
        let mut out: std::collections::BTreeSet<Vec<Elem>> = std::collections::BTreeSet::new();
        for g in self.elements() {
            if self.element_order(g) == p {
                out.insert(self.subgroup_generated(&[g]));
            }
        }
        out.into_iter().collect()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A subgroup bound to its parent group.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub parent: Arc<FiniteGroup>,
    /// Sorted element indices into the parent.
    pub elements: Vec<Elem>,
}

impl Subgroup {
    pub fn new(parent: Arc<FiniteGroup>, mut elements: Vec<Elem>) -> Result<Self, GroupError> {
        elements.sort_unstable();
        elements.dedup();
        if !parent.is_subgroup(&elements) {
            return Err(GroupError::NotASubgroup(format!("{elements:?}")));
        }
        Ok(Subgroup { parent, elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    /// Materializes the subgroup as a standalone group plus the element map.
    pub fn as_group(&self) -> (FiniteGroup, Vec<Elem>) {
        self.parent.subgroup_as_group(&self.elements).expect("validated at construction")
    }
}

/// Derived series, lower central series, and what they certify.
#[derive(Clone, Debug, Serialize)]
pub struct StructuralSeries {
    /// `G = D_0 ⊇ D_1 ⊇ …` with `D_{i+1} = [D_i, D_i]`, up to stabilization.
    pub derived: Vec<Vec<Elem>>,
    /// `G = L_1 ⊇ L_2 ⊇ …` with `L_{i+1} = [G, L_i]`, up to stabilization.
    pub lower_central: Vec<Vec<Elem>>,
    pub is_solvable: bool,
    pub is_nilpotent: bool,
    /// Defined when nilpotent: smallest `c` with `L_{c+1}` trivial.
    pub nilpotency_class: Option<usize>,
}

/// Computes both classical series by repeated commutator closures.
pub fn structural_series(g: &FiniteGroup) -> StructuralSeries {
    let all: Vec<Elem> = g.elements().collect();
    let mut derived = vec![all.clone()];
    loop {
        let last = derived.last().unwrap();
        let next = g.commutator_subgroup(last, last);
        if next.len() == last.len() {
            break;
        }
        derived.push(next);
    }
    let mut lower_central = vec![all.clone()];
    loop {
        let last = lower_central.last().unwrap();
        let next = g.commutator_subgroup(&all, last);
        if next.len() == last.len() {
            break;
        }
        lower_central.push(next);
    }
    let is_solvable = derived.last().unwrap().len() == 1;
    let is_nilpotent = lower_central.last().unwrap().len() == 1;
    let nilpotency_class = if is_nilpotent { Some(lower_central.len() - 1) } else { None };
    StructuralSeries { derived, lower_central, is_solvable, is_nilpotent, nilpotency_class }
}

/// One Sylow `p`-subgroup, grown through normalizers.
pub fn sylow_subgroup(g: &FiniteGroup, p: usize) -> Vec<Elem> {
    let mut target = 1usize;
    let mut n = g.order();
    while n % p == 0 {
        n /= p;
        target *= p;
    }
    let mut current = vec![g.identity()];
    while current.len() < target {
        let normalizer = g.normalizer(&current);
        // Some coset of the current subgroup inside its normalizer has order
        // p; extend by a representative.
        let mut extended = false;
        for &y in &normalizer {
            if current.binary_search(&y).is_ok() {
                continue;
            }
            // Order of y modulo `current`.
            let mut acc = y;
            let mut t = 1usize;
            while current.binary_search(&acc).is_err() {
                acc = g.mul(acc, y);
                t += 1;
            }
            if t % p == 0 {
                let z = g.power(y, t / p);
                let mut gens = current.clone();
                gens.push(z);
                current = g.subgroup_generated(&gens);
                extended = true;
                break;
            }
        }
        assert!(extended, "Sylow growth stalled below target order");
    }
    current
}

/// Largest normal `p`-subgroup: intersection of all Sylow `p`-subgroups.
pub fn p_core(g: &FiniteGroup, p: usize) -> Vec<Elem> {
    let sylow = sylow_subgroup(g, p);
    let mut member = vec![false; g.order()];
    for &x in &sylow {
        member[x as usize] = true;
    }
    let mut core = member.clone();
    for t in g.elements() {
        let mut conj = vec![false; g.order()];
        for &x in &sylow {
            conj[g.conj(t, x) as usize] = true;
        }
        for i in 0..g.order() {
            core[i] &= conj[i];
        }
    }
    (0..g.order()).filter(|&i| core[i]).map(|i| i as Elem).collect()
}

/// Fitting subgroup: join of the `p`-cores over primes dividing the order.
/// The result is checked to be normal and nilpotent before returning.
pub fn fitting_subgroup(g: &FiniteGroup) -> Vec<Elem> {
    let mut gens: Vec<Elem> = Vec::new();
    let mut n = g.order();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            gens.extend(p_core(g, p));
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        gens.extend(p_core(g, n));
    }
    let fit = g.subgroup_generated(&gens);
    assert!(g.is_normal(&fit), "Fitting subgroup must be normal");
    let (fit_group, _) = g.subgroup_as_group(&fit).expect("join of normal subgroups is closed");
    assert!(
        structural_series(&fit_group).is_nilpotent,
        "Fitting subgroup must be nilpotent"
    );
    fit
}

/// A Frobenius decomposition `G = K ⋊ H` with malnormal complement `H`.
#[derive(Clone, Debug)]
pub struct FrobeniusStructure {
    pub group: Arc<FiniteGroup>,
    /// The complement `H`, as passed in (sorted).
    pub complement: Vec<Elem>,
    /// The kernel: identity plus all elements avoiding every conjugate of
    /// `H \ {e}`. Always equals the Fitting subgroup here.
    pub kernel: Vec<Elem>,
}

#[derive(Clone, Debug)]
pub enum FrobeniusOutcome {
    Frobenius(FrobeniusStructure),
    /// Witness: `g` outside `H` with `H ∩ gHg⁻¹` nontrivial at `shared`.
    NotFrobenius { conjugator: Elem, shared: Elem },
}

/// Tests whether `H` is a Frobenius complement in `G` (i.e. `H ∩ gHg⁻¹ = 1`
/// for all `g ∉ H`) and if so extracts the kernel.
pub fn frobenius_structure(g: &Arc<FiniteGroup>, h: &Subgroup) -> FrobeniusOutcome {
    assert!(
        h.order() > 1 && h.order() < g.order(),
        "complement must be proper and nontrivial"
    );
    let he = &h.elements;
    for t in g.elements() {
        if he.binary_search(&t).is_ok() {
            continue;
        }
        for &x in he.iter() {
            if x == g.identity() {
                continue;
            }
            let y = g.conj(t, x);
            if y != g.identity() && he.binary_search(&y).is_ok() {
                return FrobeniusOutcome::NotFrobenius { conjugator: t, shared: y };
            }
        }
    }
    // Kernel: elements covered by no conjugate of H \ {e}, plus the identity.
    let mut covered = vec![false; g.order()];
    for t in g.elements() {
        for &x in he.iter() {
            if x != g.identity() {
                covered[g.conj(t, x) as usize] = true;
            }
        }
    }
    let kernel: Vec<Elem> =
        g.elements().filter(|&x| x == g.identity() || !covered[x as usize]).collect();
    assert_eq!(kernel.len() * h.order(), g.order(), "kernel size must be the complement index");
    assert!(g.is_subgroup(&kernel), "Frobenius kernel must be a subgroup");
    assert!(g.is_normal(&kernel), "Frobenius kernel must be normal");
    let fit = fitting_subgroup(g);
    assert_eq!(kernel, fit, "Frobenius kernel must equal the Fitting subgroup");
    let (kgroup, _) = g.subgroup_as_group(&kernel).unwrap();
    assert!(structural_series(&kgroup).is_nilpotent, "Frobenius kernel must be nilpotent");
    FrobeniusOutcome::Frobenius(FrobeniusStructure {
        group: Arc::clone(g),
        complement: he.clone(),
        kernel,
    })
}

/// Semidirect product `N ⋊ A`. `action[a]` is the permutation of `N` applied
/// by `a`; it must be a homomorphism `A → Aut(N)`. Pair `(x, a)` gets index
/// `x * |A| + a`, and `(x, a)(y, b) = (x · a(y), ab)`.
pub fn semidirect_product(
    n: &FiniteGroup,
    a: &FiniteGroup,
    action: &[Vec<Elem>],
) -> Result<FiniteGroup, GroupError> {
    assert_eq!(action.len(), a.order(), "one permutation per acting element");
    for (actor, perm) in action.iter().enumerate() {
        let actor = actor as Elem;
        if perm.len() != n.order() {
            return Err(GroupError::ActionNotPermutation { actor });
        }
        let mut seen = vec![false; n.order()];
        for &img in perm {
            if (img as usize) >= n.order() || seen[img as usize] {
                return Err(GroupError::ActionNotPermutation { actor });
            }
            seen[img as usize] = true;
        }
        for x in n.elements() {
            for y in n.elements() {
                let lhs = perm[n.mul(x, y) as usize];
                let rhs = n.mul(perm[x as usize], perm[y as usize]);
                if lhs != rhs {
                    return Err(GroupError::ActionNotAutomorphism { actor, x, y });
                }
            }
        }
    }
    for p in a.elements() {
        for q in a.elements() {
            let pq = a.mul(p, q);
            for x in n.elements() {
                let lhs = action[pq as usize][x as usize];
                let rhs = action[p as usize][action[q as usize][x as usize] as usize];
                if lhs != rhs {
                    return Err(GroupError::ActionNotHomomorphism { a: p, b: q });
                }
            }
        }
    }
    let order = n.order() * a.order();
    let idx = |x: Elem, p: Elem| x as usize * a.order() + p as usize;
    let mut table = vec![0 as Elem; order * order];
    for x in n.elements() {
        for p in a.elements() {
            for y in n.elements() {
                for q in a.elements() {
                    let nx = n.mul(x, action[p as usize][y as usize]);
                    let na = a.mul(p, q);
                    table[idx(x, p) * order + idx(y, q)] = idx(nx, na) as Elem;
                }
            }
        }
    }
    FiniteGroup::new(order, table)
}

/// Direct product with pair `(x, y)` at index `x * |B| + y`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let order = a.order() * b.order();
    let mut table = vec![0 as Elem; order * order];
    let idx = |x: Elem, y: Elem| x as usize * b.order() + y as usize;
    for x in a.elements() {
        for y in b.elements() {
            for z in a.elements() {
                for w in b.elements() {
                    table[idx(x, y) * order + idx(z, w)] = idx(a.mul(x, z), b.mul(y, w)) as Elem;
                }
            }
        }
    }
    FiniteGroup::new(order, table).expect("direct product of valid groups is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rejects_non_associative_table() {
        // Latin square with two-sided identity 0 that is not a group.
        let rows: Vec<Vec<Elem>> = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match FiniteGroup::from_rows(&rows) {
            Err(GroupError::NotAssociative { .. }) => {}
            other => panic!("expected associativity rejection, got {other:?}"),
        }
    }

    #[test]
    fn rejects_missing_identity() {
        // x * y = y - x mod 3: a Latin square where 0 is only a left identity.
        let rows: Vec<Vec<Elem>> =
            vec![vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]];
        match FiniteGroup::from_rows(&rows) {
            Err(GroupError::NoIdentity) => {}
            other => panic!("expected identity rejection, got {other:?}"),
        }
    }

    #[test]
    fn s3_basic_structure() {
        let g = fixtures::symmetric_group(3);
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.center(), vec![g.identity()]);
        let classes = g.conjugacy_classes();
        // Identity class first, the rest by smallest member: the class of the
        // first transposition (3 elements) precedes the 3-cycles.
        let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn subgroup_closure_in_s3() {
        let g = fixtures::symmetric_group(3);
        // A 3-cycle generates the alternating subgroup of order 3.
        let three_cycle = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let a3 = g.subgroup_generated(&[three_cycle]);
        assert_eq!(a3.len(), 3);
        assert!(g.is_normal(&a3));
        // A transposition together with the 3-cycle generates everything.
        let transposition = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let whole = g.subgroup_generated(&[three_cycle, transposition]);
        assert_eq!(whole.len(), 6);
    }

    #[test]
    fn series_oracle_values() {
        let s3 = fixtures::symmetric_group(3);
        let s = structural_series(&s3);
        assert!(s.is_solvable);
        assert!(!s.is_nilpotent);
        assert_eq!(s.derived.len(), 3); // S3 > A3 > 1
        assert_eq!(s.derived[1].len(), 3);

        let d4 = fixtures::dihedral_group(4);
        let s = structural_series(&d4);
        assert!(s.is_solvable);
        assert!(s.is_nilpotent);
        assert_eq!(s.nilpotency_class, Some(2));

        let z1 = fixtures::cyclic_group(1);
        let s = structural_series(&z1);
        assert_eq!(s.nilpotency_class, Some(0));

        let a5 = fixtures::alternating_group(5);
        let s = structural_series(&a5);
        assert!(!s.is_solvable);
        assert!(!s.is_nilpotent);
    }

    #[test]
    fn sylow_and_fitting_oracles() {
        let s4 = fixtures::symmetric_group(4);
        assert_eq!(sylow_subgroup(&s4, 2).len(), 8);
        assert_eq!(sylow_subgroup(&s4, 3).len(), 3);
        // Fitting(S4) is the Klein four-group of double transpositions.
        let fit = fitting_subgroup(&s4);
        assert_eq!(fit.len(), 4);
        for &x in &fit {
            assert!(x == s4.identity() || s4.element_order(x) == 2);
        }

        let s3 = fixtures::symmetric_group(3);
        assert_eq!(fitting_subgroup(&s3).len(), 3);

        let z12 = fixtures::cyclic_group(12);
        assert_eq!(fitting_subgroup(&z12).len(), 12);

        let heis = fixtures::heisenberg_group_27();
        assert_eq!(fitting_subgroup(&heis).len(), 27);
    }

    #[test]
    fn fitting_matches_exhaustive_search_on_small_groups() {
        for g in [
            fixtures::symmetric_group(3),
            fixtures::symmetric_group(4),
            fixtures::alternating_group(4),
            fixtures::dihedral_group(4),
            fixtures::dihedral_group(6),
            fixtures::quaternion_group(),
            fixtures::frobenius_group_56(),
        ] {
            let fit = fitting_subgroup(&g);
            let mut best: Vec<Elem> = vec![g.identity()];
            for sub in g.all_subgroups() {
                if !g.is_normal(&sub) {
                    continue;
                }
                let (sg, _) = g.subgroup_as_group(&sub).unwrap();
                if structural_series(&sg).is_nilpotent && sub.len() > best.len() {
                    best = sub;
                }
            }
            // The largest normal nilpotent subgroup is unique and equals Fit.
            assert_eq!(fit, best, "Fitting mismatch for {:?}", g.name());
            for sub in g.all_subgroups() {
                if !g.is_normal(&sub) {
                    continue;
                }
                let (sg, _) = g.subgroup_as_group(&sub).unwrap();
                if structural_series(&sg).is_nilpotent {
                    assert!(
                        sub.iter().all(|x| fit.binary_search(x).is_ok()),
                        "normal nilpotent subgroup escapes Fitting in {:?}",
                        g.name()
                    );
                }
            }
        }
    }

    #[test]
    fn frobenius_oracles() {
        let a4 = Arc::new(fixtures::alternating_group(4));
        let z3 = a4.cyclic_subgroups_of_order(3)[0].clone();
        let h = Subgroup::new(Arc::clone(&a4), z3).unwrap();
        match frobenius_structure(&a4, &h) {
            FrobeniusOutcome::Frobenius(fs) => {
                assert_eq!(fs.kernel.len(), 4);
                assert_eq!(fs.kernel, fitting_subgroup(&a4));
            }
            other => panic!("A4 over Z3 must be Frobenius, got {other:?}"),
        }

        let f56 = Arc::new(fixtures::frobenius_group_56());
        let z7 = f56.cyclic_subgroups_of_order(7)[0].clone();
        let h = Subgroup::new(Arc::clone(&f56), z7).unwrap();
        match frobenius_structure(&f56, &h) {
            FrobeniusOutcome::Frobenius(fs) => {
                assert_eq!(fs.kernel.len(), 8);
                assert_eq!(fs.kernel, fitting_subgroup(&f56));
            }
            other => panic!("order-56 group over Z7 must be Frobenius, got {other:?}"),
        }

        // The center of D4 is normal, so conjugates never avoid it.
        let d4 = Arc::new(fixtures::dihedral_group(4));
        let center = d4.center();
        let h = Subgroup::new(Arc::clone(&d4), center).unwrap();
        match frobenius_structure(&d4, &h) {
            FrobeniusOutcome::NotFrobenius { .. } => {}
            other => panic!("central subgroup cannot be a Frobenius complement, got {other:?}"),
        }
    }

    #[test]
    fn semidirect_rebuilds_s3() {
        let z3 = fixtures::cyclic_group(3);
        let z2 = fixtures::cyclic_group(2);
        // Inversion action of Z2 on Z3.
        let action = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let g = semidirect_product(&z3, &z2, &action).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let s = structural_series(&g);
        assert!(s.is_solvable && !s.is_nilpotent);
    }

    #[test]
    fn semidirect_rejects_bad_action() {
        let z3 = fixtures::cyclic_group(3);
        let z2 = fixtures::cyclic_group(2);
        // The nontrivial actor maps to a non-homomorphic permutation.
        let action = vec![vec![0, 1, 2], vec![1, 0, 2]];
        assert!(semidirect_product(&z3, &z2, &action).is_err());
    }

    #[test]
    fn all_subgroups_counts() {
        // Classical subgroup counts: S3 has 6, A4 has 10, D4 has 10, Q8 has 6.
        assert_eq!(fixtures::symmetric_group(3).all_subgroups().len(), 6);
        assert_eq!(fixtures::alternating_group(4).all_subgroups().len(), 10);
        assert_eq!(fixtures::dihedral_group(4).all_subgroups().len(), 10);
        assert_eq!(fixtures::quaternion_group().all_subgroups().len(), 6);
    }

    #[test]
    fn subgroup_as_group_roundtrip() {
        let s4 = fixtures::symmetric_group(4);
        let fit = fitting_subgroup(&s4);
        let (v4, map) = s4.subgroup_as_group(&fit).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        assert_eq!(v4.exponent(), 2);
        assert_eq!(map.len(), 4);
    }
}
