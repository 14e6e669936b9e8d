//! Cayley-table-backed finite groups and the structural queries the
//! spectra pipeline needs: center, centralizers, centralizer census,
//! commutativity degree, AC test, central quotients, solvability, and
//! maximal pairwise non-commuting sets.

mod descriptor;
mod families;

pub use descriptor::parse_descriptor;
pub use families::{build_group, direct_product, FamilyDescriptor};

use crate::ExactRational;
use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Orders beyond this are outside the tool's intended range.
pub const MAX_GROUP_ORDER: usize = 4096;

/// Exhaustive associativity checking up to this order, sampled above.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 256;

/// Default cap for the exponential non-commuting-set search.
pub const DEFAULT_NONCOMMUTING_CAP: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("{family} requires {constraint}")]
    ParamDomain { family: String, constraint: String },
    #[error("cannot parse descriptor: {0}")]
    Parse(String),
    #[error("group order {0} exceeds the supported maximum {MAX_GROUP_ORDER}")]
    TooLarge(usize),
    #[error("constructed table violates the {0} invariant")]
    Invalid(&'static str),
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("{0} is only defined for non-abelian groups")]
    AbelianInput(&'static str),
    #[error("group order {order} exceeds the search cap {cap}; raise the cap explicitly")]
    CapExceeded { order: usize, cap: usize },
}

/// Set of element indices of a host group, bitset-backed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: FixedBitSet,
}

impl ElementSet {
    pub fn empty(order: usize) -> Self {
        ElementSet {
            bits: FixedBitSet::with_capacity(order),
        }
    }

    pub fn full(order: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(order);
        bits.insert_range(..);
        ElementSet { bits }
    }

    pub fn insert(&mut self, idx: usize) {
        self.bits.insert(idx);
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.bits.contains(idx)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        self.bits.intersect_with(&other.bits);
    }

    /// Members in ascending index order; also the canonical form used to
    /// deduplicate and order centralizers deterministically.
    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Kinds recognized by the central-quotient fingerprint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum QuotientKind {
    Cyclic,
    ElemAbelianPSquared(u64),
    Dihedral(u64),
    Frobenius20,
    Other,
}

/// A finite group as a Cayley table over element indices 0..order.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    identity: usize,
    inverses: Vec<u16>,
    labels: Option<Vec<String>>,
    family: Option<FamilyDescriptor>,
}

impl FiniteGroup {
    /// Builds and validates a group from an explicit multiplication closure
    /// over abstract element values.
    pub(crate) fn from_elements<E, M, L>(
        elems: Vec<E>,
        mul: M,
        label: Option<L>,
        family: Option<FamilyDescriptor>,
    ) -> Result<FiniteGroup, GroupError>
    where
        E: Eq + std::hash::Hash + Clone,
        M: Fn(&E, &E) -> E,
        L: Fn(&E) -> String,
    {
        let order = elems.len();
        if order == 0 {
            return Err(GroupError::Invalid("non-empty"));
        }
        if order > MAX_GROUP_ORDER {
            return Err(GroupError::TooLarge(order));
        }
        let index: std::collections::HashMap<&E, usize> =
            elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        if index.len() != order {
            return Err(GroupError::Invalid("distinct elements"));
        }
        let mut table = vec![0u16; order * order];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let prod = mul(a, b);
                let &k = index
                    .get(&prod)
                    .ok_or(GroupError::Invalid("closure under multiplication"))?;
                table[i * order + j] = k as u16;
            }
        }
        let labels = label.map(|f| elems.iter().map(f).collect());
        FiniteGroup::from_table(table, order, labels, family)
    }

    pub(crate) fn from_table(
        table: Vec<u16>,
        order: usize,
        labels: Option<Vec<String>>,
        family: Option<FamilyDescriptor>,
    ) -> Result<FiniteGroup, GroupError> {
        assert_eq!(table.len(), order * order);
        // locate the identity
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| table[e * order + j] == j as u16))
            .ok_or(GroupError::Invalid("identity"))?;
        let mut inverses = vec![0u16; order];
        for i in 0..order {
            let inv = (0..order)
                .find(|&j| table[i * order + j] == identity as u16)
                .ok_or(GroupError::Invalid("inverse"))?;
            inverses[i] = inv as u16;
        }
        let g = FiniteGroup {
            order,
            table,
            identity,
            inverses,
            labels,
            family,
        };
        g.validate()?;
        Ok(g)
    }

    /// Latin-square, identity, inverse and associativity invariants.
    /// Associativity is exhaustive up to order 256, sampled (10·order²
    /// deterministic pseudorandom triples) above.
    fn validate(&self) -> Result<(), GroupError> {
        let n = self.order;
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let v = self.mul(i, j);
                if seen[v] {
                    return Err(GroupError::Invalid("Latin square (row)"));
                }
                seen[v] = true;
            }
        }
        for j in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..n {
                let v = self.mul(i, j);
                if seen[v] {
                    return Err(GroupError::Invalid("Latin square (column)"));
                }
                seen[v] = true;
            }
        }
        for j in 0..n {
            if self.mul(self.identity, j) != j || self.mul(j, self.identity) != j {
                return Err(GroupError::Invalid("identity"));
            }
        }
        for i in 0..n {
            if self.mul(i, self.inv(i)) != self.identity {
                return Err(GroupError::Invalid("inverse"));
            }
        }
        let assoc = |i: usize, j: usize, k: usize| {
            self.mul(self.mul(i, j), k) == self.mul(i, self.mul(j, k))
        };
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if !assoc(i, j, k) {
                            return Err(GroupError::Invalid("associativity"));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x636f_6d73 ^ n as u64);
            for _ in 0..10 * n * n {
                let (i, j, k) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if !assoc(i, j, k) {
                    return Err(GroupError::Invalid("associativity"));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverses[i] as usize
    }

    pub fn family(&self) -> Option<&FamilyDescriptor> {
        self.family.as_ref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("g{i}"),
        }
    }

    #[inline]
    pub fn commutes(&self, i: usize, j: usize) -> bool {
        self.mul(i, j) == self.mul(j, i)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i..self.order).all(|j| self.commutes(i, j)))
    }

    pub fn power(&self, x: usize, mut e: u64) -> usize {
        let mut acc = self.identity;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut cur = x;
        let mut ord = 1;
        while cur != self.identity {
            cur = self.mul(cur, x);
            ord += 1;
        }
        ord
    }

    /// Map element order -> number of elements of that order.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for x in 0..self.order {
            *hist.entry(self.element_order(x)).or_insert(0) += 1;
        }
        hist
    }

    /// Z(G): elements commuting with everything.
    pub fn center(&self) -> ElementSet {
        let mut set = ElementSet::empty(self.order);
        for x in 0..self.order {
            if (0..self.order).all(|y| self.commutes(x, y)) {
                set.insert(x);
            }
        }
        set
    }

    /// C_G(x): elements commuting with x.
    pub fn centralizer(&self, x: usize) -> Result<ElementSet, GroupError> {
        if x >= self.order {
            return Err(GroupError::IndexOutOfRange {
                index: x,
                order: self.order,
            });
        }
        let mut set = ElementSet::empty(self.order);
        for y in 0..self.order {
            if self.commutes(x, y) {
                set.insert(y);
            }
        }
        Ok(set)
    }

    /// Distinct centralizers over all elements, in a deterministic order
    /// (sorted by member list). The whole group appears as C_G(z) for
    /// central z, so the count is |Cent(G)|.
    pub fn centralizer_census(&self) -> (usize, Vec<ElementSet>) {
        let mut distinct: BTreeSet<Vec<usize>> = BTreeSet::new();
        for x in 0..self.order {
            distinct.insert(self.centralizer(x).unwrap().members());
        }
        let sets: Vec<ElementSet> = distinct
            .into_iter()
            .map(|members| {
                let mut s = ElementSet::empty(self.order);
                members.into_iter().for_each(|m| s.insert(m));
                s
            })
            .collect();
        (sets.len(), sets)
    }

    /// Pr(G) = |{(x,y) : xy = yx}| / |G|², reduced.
    pub fn commutativity_degree(&self) -> ExactRational {
        let mut commuting = 0u64;
        for i in 0..self.order {
            for j in 0..self.order {
                if self.commutes(i, j) {
                    commuting += 1;
                }
            }
        }
        ExactRational::new(commuting, (self.order * self.order) as u64)
    }

    /// True iff every centralizer of a non-central element is abelian.
    /// Only defined for non-abelian groups.
    pub fn is_ac_group(&self) -> Result<bool, GroupError> {
        if self.is_abelian() {
            return Err(GroupError::AbelianInput("is_ac_group"));
        }
        let center = self.center();
        for x in 0..self.order {
            if center.contains(x) {
                continue;
            }
            let cent = self.centralizer(x)?.members();
            for (a_pos, &a) in cent.iter().enumerate() {
                for &b in &cent[a_pos + 1..] {
                    if !self.commutes(a, b) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Closure of a generating set under multiplication and inverses.
    fn subgroup_closure(&self, seed: &ElementSet) -> ElementSet {
        let mut members = ElementSet::empty(self.order);
        members.insert(self.identity);
        let mut worklist: Vec<usize> = vec![self.identity];
        for x in seed.iter() {
            if !members.contains(x) {
                members.insert(x);
                worklist.push(x);
            }
        }
        let mut i = 0;
        while i < worklist.len() {
            let a = worklist[i];
            i += 1;
            for j in 0..worklist.len() {
                let b = worklist[j];
                for prod in [self.mul(a, b), self.mul(b, a)] {
                    if !members.contains(prod) {
                        members.insert(prod);
                        worklist.push(prod);
                    }
                }
            }
        }
        members
    }

    /// Derived subgroup [H, H] of the subgroup with the given members.
    fn derived_subgroup(&self, members: &ElementSet) -> ElementSet {
        let list = members.members();
        let mut seed = ElementSet::empty(self.order);
        for &x in &list {
            for &y in &list {
                let comm = self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y));
                seed.insert(comm);
            }
        }
        self.subgroup_closure(&seed)
    }

    /// True iff the derived series reaches the trivial subgroup.
    pub fn is_solvable(&self) -> bool {
        let mut current = ElementSet::full(self.order);
        loop {
            let next = self.derived_subgroup(&current);
            if next.len() == 1 {
                return true;
            }
            if next.len() == current.len() {
                return false;
            }
            current = next;
        }
    }

    /// Quotient by a normal subgroup given as an element set. Cosets are
    /// represented by their minimal element index.
    pub fn quotient_by_normal(&self, normal: &ElementSet) -> Result<FiniteGroup, GroupError> {
        // sanity: subgroup and normality
        let members = normal.members();
        if !members.contains(&self.identity) {
            return Err(GroupError::Invalid("normal subgroup contains identity"));
        }
        for &a in &members {
            for &b in &members {
                if !normal.contains(self.mul(a, b)) {
                    return Err(GroupError::Invalid("subgroup closure"));
                }
            }
            if !normal.contains(self.inv(a)) {
                return Err(GroupError::Invalid("subgroup inverses"));
            }
        }
        for g in 0..self.order {
            for &n in &members {
                if !normal.contains(self.mul(self.mul(g, n), self.inv(g))) {
                    return Err(GroupError::Invalid("normality"));
                }
            }
        }
        // coset representative = minimal member of the coset gN
        let mut rep = vec![usize::MAX; self.order];
        for g in 0..self.order {
            if rep[g] != usize::MAX {
                continue;
            }
            let coset: Vec<usize> = members.iter().map(|&n| self.mul(g, n)).collect();
            let min = *coset.iter().min().unwrap();
            for c in coset {
                rep[c] = min;
            }
        }
        let mut reps: Vec<usize> = rep
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        reps.sort_unstable();
        let index_of: BTreeMap<usize, usize> =
            reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let q_order = reps.len();
        let mut table = vec![0u16; q_order * q_order];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * q_order + j] = index_of[&rep[self.mul(a, b)]] as u16;
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| reps.iter().map(|&r| format!("[{}]", l[r])).collect());
        FiniteGroup::from_table(table, q_order, labels, None)
    }

    /// G/Z(G) as a concrete coset group.
    pub fn quotient_by_center(&self) -> FiniteGroup {
        let center = self.center();
        self.quotient_by_normal(&center)
            .expect("the center is always normal")
    }

    /// Recognizes small central quotients by fingerprint: order, abelianness,
    /// element-order histogram, and for dihedral the index-2 cyclic subgroup.
    pub fn recognize_small_quotient(&self) -> QuotientKind {
        let n = self.order;
        if n == 1 {
            return QuotientKind::Cyclic;
        }
        let hist = self.order_histogram();
        if self.is_abelian() {
            if hist.contains_key(&n) {
                return QuotientKind::Cyclic;
            }
            if let Some((p, 2)) = crate::gf::prime_power(n as u64) {
                if hist.get(&(p as usize)) == Some(&(n - 1)) {
                    return QuotientKind::ElemAbelianPSquared(p);
                }
            }
            return QuotientKind::Other;
        }
        if n == 20
            && self.center().len() == 1
            && hist == BTreeMap::from([(1, 1), (2, 5), (4, 10), (5, 4)])
        {
            return QuotientKind::Frobenius20;
        }
        if n.is_multiple_of(2) {
            let m = n / 2;
            if m >= 3 && hist.contains_key(&m) && hist == dihedral_order_histogram(m) {
                return QuotientKind::Dihedral(m as u64);
            }
        }
        QuotientKind::Other
    }

    /// Exact maximum size of a pairwise non-commuting subset, by
    /// branch-and-bound over non-central elements. Abelian groups give 1
    /// by convention.
    pub fn max_noncommuting_set_size(&self, cap: usize) -> Result<usize, GroupError> {
        if self.order > cap {
            return Err(GroupError::CapExceeded {
                order: self.order,
                cap,
            });
        }
        let center = self.center();
        let verts: Vec<usize> = (0..self.order).filter(|&x| !center.contains(x)).collect();
        if verts.is_empty() {
            return Ok(1);
        }
        // adjacency of the NON-commuting relation
        let k = verts.len();
        let mut adj = vec![FixedBitSet::with_capacity(k); k];
        for i in 0..k {
            for j in 0..k {
                if i != j && !self.commutes(verts[i], verts[j]) {
                    adj[i].insert(j);
                }
            }
        }
        // greedy lower bound
        let mut best = {
            let mut chosen = FixedBitSet::with_capacity(k);
            let mut count = 0usize;
            for (v, row) in adj.iter().enumerate() {
                if chosen.ones().all(|u| row.contains(u)) {
                    chosen.insert(v);
                    count += 1;
                }
            }
            count
        };
        // branch and bound with a greedy-coloring upper bound: vertices in
        // one color class are pairwise non-adjacent, so a clique takes at
        // most one per class
        fn expand(adj: &[FixedBitSet], size: usize, cands: &[usize], best: &mut usize) {
            if cands.is_empty() {
                *best = (*best).max(size);
                return;
            }
            let mut classes: Vec<Vec<usize>> = Vec::new();
            let mut colored: Vec<(usize, usize)> = Vec::with_capacity(cands.len());
            for &v in cands {
                let c = classes
                    .iter()
                    .position(|class| class.iter().all(|&u| !adj[v].contains(u)))
                    .unwrap_or_else(|| {
                        classes.push(Vec::new());
                        classes.len() - 1
                    });
                classes[c].push(v);
                colored.push((v, c + 1));
            }
            colored.sort_by_key(|&(_, c)| c);
            for i in (0..colored.len()).rev() {
                let (v, color) = colored[i];
                if size + color <= *best {
                    return;
                }
                let next: Vec<usize> = colored[..i]
                    .iter()
                    .map(|&(u, _)| u)
                    .filter(|&u| adj[v].contains(u))
                    .collect();
                expand(adj, size + 1, &next, best);
                *best = (*best).max(size + 1);
            }
        }
        let all: Vec<usize> = (0..k).collect();
        expand(&adj, 0, &all, &mut best);
        Ok(best.max(1))
    }
}

/// Element-order histogram of the dihedral group of order 2m, m >= 3,
/// computed from the divisor structure (no group build needed).
pub fn dihedral_order_histogram(m: usize) -> BTreeMap<usize, usize> {
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for d in 1..=m {
        if m.is_multiple_of(d) {
            *hist.entry(d).or_insert(0) += euler_phi(d);
        }
    }
    *hist.entry(2).or_insert(0) += m;
    hist
}

fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
}

/// Smallest prime dividing n (n >= 2).
pub fn smallest_prime_divisor(n: usize) -> usize {
    (2..=n).find(|d| n.is_multiple_of(*d)).expect("n >= 2")
}

/// Whether n is a power of the prime p.
pub fn is_p_group_order(n: usize, p: usize) -> bool {
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}
