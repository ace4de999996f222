//! Finite groups as validated multiplication tables.
//!
//! Every group carries its elements as canonical indices `0..order`, with
//! index 0 the identity. The ordering is breadth-first by word length over
//! the construction generators, ties broken lexicographically on the words,
//! so the same generator input always reproduces the same table.
//!
//! Permutations compose left to right: `(p * q)[i] = q[p[i]]`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::Hash;
use std::sync::Arc;

use crate::error::{Error, Result};

pub const DEFAULT_GROUP_SIZE_CAP: usize = 10_000;
pub const DEFAULT_TUPLE_BUDGET: u64 = 20_000_000;
/// Largest order accepted by [`is_isomorphic`].
pub const ISOMORPHISM_ORDER_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Closes `generators` under `mul` and returns the group together with
    /// the elements in canonical order.
    ///
    /// The table is filled from the right Cayley graph, so `mul` must be
    /// associative on the generated set.
    pub fn from_closure<T, F>(
        identity: T,
        generators: &[T],
        mul: F,
        cap: usize,
    ) -> Result<(FiniteGroup, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(identity, 0);
        // parent[j] = (i, k) with e_j = e_i * g_k
        let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            let mut row = Vec::with_capacity(generators.len());
            for (k, g) in generators.iter().enumerate() {
                let x = mul(&elements[head], g);
                let j = match index.get(&x) {
                    Some(&j) => j,
                    None => {
                        let j = elements.len();
                        if j >= cap {
                            return Err(Error::SizeLimit { cap });
                        }
                        index.insert(x.clone(), j);
                        elements.push(x);
                        parent.push((head, k));
                        j
                    }
                };
                row.push(j);
            }
            right.push(row);
            head += 1;
        }
        let n = elements.len();
        let generator_indices: Vec<usize> = generators.iter().map(|g| index[g]).collect();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            table[i * n] = i as u32;
            for j in 1..n {
                let (p, k) = parent[j];
                let ip = table[i * n + p] as usize;
                table[i * n + j] = right[ip][k] as u32;
            }
        }
        let mut inv = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                if table[i * n + j] == 0 {
                    inv[i] = j as u32;
                    break;
                }
            }
        }
        Ok((
            FiniteGroup {
                order: n,
                mul: table,
                inv,
                generators: generator_indices,
            },
            elements,
        ))
    }

    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<FiniteGroup> {
        Self::from_permutations_capped(degree, generators, DEFAULT_GROUP_SIZE_CAP)
    }

    pub fn from_permutations_capped(
        degree: usize,
        generators: &[Vec<usize>],
        cap: usize,
    ) -> Result<FiniteGroup> {
        if degree == 0 {
            return Err(Error::Invalid("permutation degree must be positive".into()));
        }
        for (index, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            if g.len() != degree {
                return Err(Error::NotAPermutation { index, degree });
            }
            for &x in g {
                if x >= degree || seen[x] {
                    return Err(Error::NotAPermutation { index, degree });
                }
                seen[x] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let (group, _) = Self::from_closure(
            identity,
            generators,
            |p, q| p.iter().map(|&i| q[i]).collect(),
            cap,
        )?;
        Ok(group)
    }

    /// The same abstract group, re-enumerated from a different generator
    /// list (given as element indices). Returns the new group and the map
    /// from new indices to old indices.
    pub fn regenerate(&self, generators: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        for &g in generators {
            self.check(g)?;
        }
        let (group, elements) =
            Self::from_closure(0usize, generators, |&a, &b| self.mul(a, b), usize::MAX)?;
        if group.order != self.order {
            return Err(Error::Invalid("generators do not generate the group".into()));
        }
        Ok((group, elements))
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup {
            order: 1,
            mul: vec![0],
            inv: vec![0],
            generators: Vec::new(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut base = a;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(
            self.mul(self.inv(a), self.inv(b)),
            self.mul(a, b),
        )
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    fn check(&self, a: usize) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::Invalid(format!(
                "element index {a} out of range for a group of order {}",
                self.order
            )))
        }
    }

    /// Exhaustive check of the group axioms and of generation.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::Invalid(format!("index 0 is not an identity for {a}")));
            }
            if self.mul(a, self.inv(a)) != 0 || self.mul(self.inv(a), a) != 0 {
                return Err(Error::Invalid(format!("bad inverse for {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::Invalid(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        if generated_members(self, &self.generators).len() != n {
            return Err(Error::Invalid("generators do not generate the table".into()));
        }
        Ok(())
    }

    /// Order statistics `(element order, count)` sorted by order.
    pub fn order_census(&self) -> Vec<(usize, usize)> {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for a in 0..self.order {
            *counts.entry(self.element_order(a)).or_default() += 1;
        }
        let mut v: Vec<_> = counts.into_iter().collect();
        v.sort_unstable();
        v
    }
}

/// Sorted members of the subgroup generated by `gens`.
fn generated_members(group: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    generated_from(group, &[0], gens)
}

/// Closure of `start` (assumed to contain the identity) under right
/// multiplication by `gens`.
fn generated_from(group: &FiniteGroup, start: &[usize], gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; group.order()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &s in start {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = group.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    (0..group.order()).filter(|&i| seen[i]).collect()
}

#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && same_group(&self.parent, &other.parent)
    }
}

impl Eq for Subgroup {}

/// Pointer or structural equality.
pub fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Subgroup {
    fn from_sorted(parent: &Arc<FiniteGroup>, members: Vec<usize>) -> Subgroup {
        let mut mask = vec![false; parent.order()];
        for &m in &members {
            mask[m] = true;
        }
        Subgroup {
            parent: parent.clone(),
            members,
            mask,
        }
    }

    /// Validates closure before accepting `members`.
    pub fn from_members(parent: &Arc<FiniteGroup>, members: &[usize]) -> Result<Subgroup> {
        let mut m: Vec<usize> = members.to_vec();
        m.sort_unstable();
        m.dedup();
        for &x in &m {
            parent.check(x)?;
        }
        let s = Self::from_sorted(parent, m);
        if !s.contains(0) {
            return Err(Error::Invalid("subgroup must contain the identity".into()));
        }
        for &a in &s.members {
            if !s.contains(parent.inv(a)) {
                return Err(Error::Invalid("subset is not closed under inverses".into()));
            }
            for &b in &s.members {
                if !s.contains(parent.mul(a, b)) {
                    return Err(Error::Invalid("subset is not closed under multiplication".into()));
                }
            }
        }
        Ok(s)
    }

    pub fn generated(parent: &Arc<FiniteGroup>, gens: &[usize]) -> Result<Subgroup> {
        for &g in gens {
            parent.check(g)?;
        }
        Ok(Self::from_sorted(parent, generated_members(parent, gens)))
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Subgroup {
        Self::from_sorted(parent, (0..parent.order()).collect())
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Subgroup {
        Self::from_sorted(parent, vec![0])
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent.order()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// Direct conjugation check against every element of the parent.
    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        g.elements()
            .all(|x| self.members.iter().all(|&a| self.contains(g.conjugate(x, a))))
    }

    /// Closed under conjugation by all of `other`'s members.
    pub fn is_normalized_by(&self, other: &Subgroup) -> bool {
        let g = &self.parent;
        other
            .members
            .iter()
            .all(|&x| self.members.iter().all(|&a| self.contains(g.conjugate(x, a))))
    }

    pub fn commutator_subgroup(&self) -> Subgroup {
        let g = &self.parent;
        let mut comms: Vec<usize> = Vec::new();
        let mut seen = vec![false; g.order()];
        for &a in &self.members {
            for &b in &self.members {
                let c = g.commutator(a, b);
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        Self::from_sorted(g, generated_members(g, &comms))
    }

    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().expect("series is never empty");
            if last.is_trivial() {
                break;
            }
            let next = last.commutator_subgroup();
            if next.order() == last.order() {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series()
            .last()
            .map(Subgroup::is_trivial)
            .unwrap_or(true)
    }

    /// The subgroup as a group in its own right, generated by its members in
    /// increasing order, and the embedding (new index -> parent index).
    pub fn to_group(&self) -> (FiniteGroup, Vec<usize>) {
        let gens: Vec<usize> = self.members.iter().copied().filter(|&m| m != 0).collect();
        let (group, elements) =
            FiniteGroup::from_closure(0usize, &gens, |&a, &b| self.parent.mul(a, b), usize::MAX)
                .expect("uncapped closure inside a finite group");
        (group, elements)
    }

    pub fn image(&self, hom: &GroupHom) -> Result<Subgroup> {
        if !same_group(&self.parent, &hom.source) {
            return Err(Error::GroupMismatch);
        }
        let imgs: Vec<usize> = self.members.iter().map(|&m| hom.images[m]).collect();
        let mut m = imgs;
        m.sort_unstable();
        m.dedup();
        Ok(Self::from_sorted(&hom.target, m))
    }
}

pub fn derived_series(group: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    Subgroup::whole(group).derived_series()
}

pub fn is_solvable(group: &Arc<FiniteGroup>) -> bool {
    Subgroup::whole(group).is_solvable()
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == vec![n]
}

/// If `n` is a power `l^k` of a prime (k >= 1), returns `(l, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let ps = prime_factors(n);
    if ps.len() != 1 {
        return None;
    }
    let l = ps[0];
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        m /= l;
        k += 1;
    }
    Some((l, k))
}

/// Splits an abelian subgroup into its Sylow subgroups, primes ascending.
pub fn sylow_decomposition(a: &Subgroup) -> Result<Vec<(u64, Subgroup)>> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let g = a.parent();
    let mut out = Vec::new();
    for l in prime_factors(a.order() as u64) {
        let members: Vec<usize> = a
            .members()
            .iter()
            .copied()
            .filter(|&x| prime_power(g.element_order(x) as u64).map_or(x == 0, |(q, _)| q == l))
            .collect();
        out.push((l, Subgroup::from_sorted(g, members)));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<usize>,
}

impl GroupHom {
    /// Checks the homomorphism property on the full multiplication table.
    pub fn new(
        source: &Arc<FiniteGroup>,
        target: &Arc<FiniteGroup>,
        images: Vec<usize>,
    ) -> Result<GroupHom> {
        if images.len() != source.order() {
            return Err(Error::Shape(format!(
                "{} images for a source of order {}",
                images.len(),
                source.order()
            )));
        }
        for &x in &images {
            target.check(x)?;
        }
        if images[0] != 0 {
            return Err(Error::NotAHomomorphism("identity not preserved".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                    return Err(Error::NotAHomomorphism(format!("fails at ({a},{b})")));
                }
            }
        }
        Ok(GroupHom {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn identity(group: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom {
            source: group.clone(),
            target: group.clone(),
            images: (0..group.order()).collect(),
        }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn kernel(&self) -> Subgroup {
        let members = self
            .source
            .elements()
            .filter(|&x| self.images[x] == 0)
            .collect();
        Subgroup::from_sorted(&self.source, members)
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &x in &self.images {
            hit[x] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if !same_group(&self.target, &other.source) {
            return Err(Error::GroupMismatch);
        }
        Ok(GroupHom {
            source: self.source.clone(),
            target: other.target.clone(),
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        })
    }
}

/// `G/N` with canonical coset ordering (breadth-first over the images of
/// the generators of `G`) and the projection.
pub fn quotient(group: &Arc<FiniteGroup>, normal: &Subgroup) -> Result<(Arc<FiniteGroup>, GroupHom)> {
    if !same_group(group, normal.parent()) {
        return Err(Error::GroupMismatch);
    }
    if !normal.is_normal() {
        return Err(Error::NotNormal);
    }
    let n = group.order();
    // smallest member of each coset gN
    let mut rep = vec![usize::MAX; n];
    for g in 0..n {
        if rep[g] != usize::MAX {
            continue;
        }
        let coset: Vec<usize> = normal.members().iter().map(|&m| group.mul(g, m)).collect();
        let r = *coset.iter().min().expect("nonempty coset");
        for c in coset {
            rep[c] = r;
        }
    }
    let gens: Vec<usize> = group.generators().iter().map(|&g| rep[g]).collect();
    let (q, elements) =
        FiniteGroup::from_closure(0usize, &gens, |&a, &b| rep[group.mul(a, b)], usize::MAX)?;
    let mut index = vec![usize::MAX; n];
    for (i, &r) in elements.iter().enumerate() {
        index[r] = i;
    }
    let images: Vec<usize> = (0..n).map(|g| index[rep[g]]).collect();
    let q = Arc::new(q);
    let hom = GroupHom {
        source: group.clone(),
        target: q.clone(),
        images,
    };
    Ok((q, hom))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinGenerators {
    pub count: usize,
    /// A generating tuple of minimal length.
    pub witness: Vec<usize>,
}

fn bitset(members: &[usize], n: usize) -> Vec<u64> {
    let mut b = vec![0u64; n.div_ceil(64)];
    for &m in members {
        b[m / 64] |= 1 << (m % 64);
    }
    b
}

pub fn min_generators(group: &FiniteGroup) -> Result<MinGenerators> {
    min_generators_budgeted(group, DEFAULT_TUPLE_BUDGET)
}

/// Level-wise search over subgroups generated by `k` elements: level `k+1`
/// extends each level-`k` subgroup by one element in canonical order, and
/// subgroups already reached are not extended twice.
pub fn min_generators_budgeted(group: &FiniteGroup, budget: u64) -> Result<MinGenerators> {
    let n = group.order();
    if n == 1 {
        return Ok(MinGenerators {
            count: 0,
            witness: Vec::new(),
        });
    }
    let mut visited: HashSet<Vec<u64>> = HashSet::new();
    // (members, witness tuple)
    let mut frontier: Vec<(Vec<usize>, Vec<usize>)> = vec![(vec![0], Vec::new())];
    visited.insert(bitset(&[0], n));
    let mut spent: u64 = 0;
    for k in 1..=n {
        let mut next = Vec::new();
        for (members, witness) in &frontier {
            let mut inside = vec![false; n];
            for &m in members {
                inside[m] = true;
            }
            for g in 1..n {
                if inside[g] {
                    continue;
                }
                spent += 1;
                if spent > budget {
                    return Err(Error::SearchBudget {
                        budget,
                        lower_bound: k,
                    });
                }
                let mut gens = witness.clone();
                gens.push(g);
                let closure = generated_from(group, members, &gens);
                if closure.len() == n {
                    return Ok(MinGenerators {
                        count: k,
                        witness: gens,
                    });
                }
                if visited.insert(bitset(&closure, n)) {
                    next.push((closure, gens));
                }
            }
        }
        frontier = next;
    }
    unreachable!("a group of order n is generated by n elements")
}

/// Brute-force isomorphism test over images of a minimal generating tuple.
/// Restricted to orders up to [`ISOMORPHISM_ORDER_LIMIT`].
pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool> {
    if a.order() != b.order() {
        return Ok(false);
    }
    if a.order() > ISOMORPHISM_ORDER_LIMIT {
        return Err(Error::Invalid(format!(
            "isomorphism testing is limited to order {ISOMORPHISM_ORDER_LIMIT}"
        )));
    }
    if a.order_census() != b.order_census() || a.is_abelian() != b.is_abelian() {
        return Ok(false);
    }
    let witness = min_generators(a)?.witness;
    let n = a.order();
    let candidates: Vec<Vec<usize>> = witness
        .iter()
        .map(|&w| {
            let o = a.element_order(w);
            (0..n).filter(|&y| b.element_order(y) == o).collect()
        })
        .collect();
    let mut choice = vec![0usize; witness.len()];
    loop {
        let imgs: Vec<usize> = choice
            .iter()
            .zip(&candidates)
            .map(|(&c, cs)| cs[c])
            .collect();
        if extends_to_isomorphism(a, b, &witness, &imgs) {
            return Ok(true);
        }
        // odometer
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(false);
            }
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn extends_to_isomorphism(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], imgs: &[usize]) -> bool {
    let n = a.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&g, &h) in gens.iter().zip(imgs) {
            let y = a.mul(x, g);
            let fy = b.mul(map[x], h);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return false;
            }
        }
    }
    let mut hit = vec![false; n];
    for &y in &map {
        if hit[y] {
            return false;
        }
        hit[y] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap())
    }

    fn a5() -> Arc<FiniteGroup> {
        Arc::new(
            FiniteGroup::from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]]).unwrap(),
        )
    }

    fn cyclic(n: usize) -> Arc<FiniteGroup> {
        let g: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Arc::new(FiniteGroup::from_permutations(n, &[g]).unwrap())
    }

    #[test]
    fn identity_permutation_gives_trivial_group() {
        let g = FiniteGroup::from_permutations(1, &[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.generators(), &[0]);
        g.validate().unwrap();
    }

    #[test]
    fn three_cycle_generates_cyclic_group() {
        let g = cyclic(3);
        assert_eq!(g.order(), 3);
        assert!(g.is_abelian());
        g.validate().unwrap();
    }

    #[test]
    fn s3_table_is_canonical_and_nonabelian() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        g.validate().unwrap();
        // words: e, a, b, ab, ba, bb (shortlex over [a, b])
        let a = g.generators()[0];
        let b = g.generators()[1];
        assert_eq!((a, b), (1, 2));
        assert_eq!(g.mul(a, b), 3);
        assert_eq!(g.mul(b, a), 4);
        assert_eq!(g.mul(b, b), 5);
        let again = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(*g, again);
    }

    #[test]
    fn rejects_non_bijection_and_respects_cap() {
        assert_eq!(
            FiniteGroup::from_permutations(3, &[vec![0, 0, 1]]),
            Err(Error::NotAPermutation { index: 0, degree: 3 })
        );
        assert_eq!(
            FiniteGroup::from_permutations(2, &[vec![0, 1, 2]]),
            Err(Error::NotAPermutation { index: 0, degree: 2 })
        );
        let r = FiniteGroup::from_permutations_capped(
            5,
            &[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]],
            50,
        );
        assert_eq!(r, Err(Error::SizeLimit { cap: 50 }));
    }

    #[test]
    fn derived_series_examples() {
        let c4 = cyclic(4);
        let orders: Vec<usize> = derived_series(&c4).iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![4, 1]);
        let orders: Vec<usize> = derived_series(&s3()).iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![6, 3, 1]);
        let orders: Vec<usize> = derived_series(&a5()).iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![60]);
        assert!(is_solvable(&cyclic(5)));
        assert!(is_solvable(&s3()));
        assert!(!is_solvable(&a5()));
        assert!(derived_series(&a5()).iter().all(Subgroup::is_normal));
    }

    #[test]
    fn min_generators_examples() {
        assert_eq!(min_generators(&cyclic(6)).unwrap().count, 1);
        let v4 = FiniteGroup::from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]]).unwrap();
        assert_eq!(min_generators(&v4).unwrap().count, 2);
        // quaternion group as a regular permutation group on 8 points
        let q8 = FiniteGroup::from_permutations(
            8,
            &[vec![1, 3, 5, 6, 2, 7, 0, 4], vec![2, 4, 3, 7, 6, 1, 5, 0]],
        )
        .unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(min_generators(&q8).unwrap().count, 2);
        assert_eq!(min_generators(&FiniteGroup::trivial()).unwrap().count, 0);
        let w = min_generators(&a5()).unwrap();
        assert_eq!(w.count, 2);
        assert_eq!(Subgroup::generated(&a5(), &w.witness).unwrap().order(), 60);
    }

    #[test]
    fn min_generators_budget_reports_lower_bound() {
        let v4 = FiniteGroup::from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]]).unwrap();
        assert_eq!(
            min_generators_budgeted(&v4, 3),
            Err(Error::SearchBudget { budget: 3, lower_bound: 2 })
        );
    }

    #[test]
    fn sylow_examples() {
        let c6 = cyclic(6);
        let parts = sylow_decomposition(&Subgroup::whole(&c6)).unwrap();
        let shape: Vec<(u64, usize)> = parts.iter().map(|(l, s)| (*l, s.order())).collect();
        assert_eq!(shape, vec![(2, 2), (3, 3)]);
        let c4 = cyclic(4);
        let parts = sylow_decomposition(&Subgroup::whole(&c4)).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!((parts[0].0, parts[0].1.order()), (2, 4));
        // C4 x C3 on 7 points
        let c12 = Arc::new(
            FiniteGroup::from_permutations(
                7,
                &[vec![1, 2, 3, 0, 4, 5, 6], vec![0, 1, 2, 3, 5, 6, 4]],
            )
            .unwrap(),
        );
        let parts = sylow_decomposition(&Subgroup::whole(&c12)).unwrap();
        let shape: Vec<(u64, usize)> = parts.iter().map(|(l, s)| (*l, s.order())).collect();
        assert_eq!(shape, vec![(2, 4), (3, 3)]);
        assert_eq!(sylow_decomposition(&Subgroup::whole(&s3())), Err(Error::NotAbelian));
    }

    #[test]
    fn quotient_examples() {
        let g = s3();
        let (q, hom) = quotient(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(q.order(), 1);
        assert!(hom.is_surjective());
        let (q, hom) = quotient(&g, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(q.order(), 6);
        assert!(is_isomorphic(&q, &g).unwrap());
        assert_eq!(hom.kernel().order(), 1);
        let n = Subgroup::generated(&g, &[g.generators()[1]]).unwrap();
        assert_eq!(n.order(), 3);
        let (q, hom) = quotient(&g, &n).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(hom.kernel(), n);
        GroupHom::new(hom.source(), hom.target(), hom.images().to_vec()).unwrap();
        let t = Subgroup::generated(&g, &[g.generators()[0]]).unwrap();
        assert_eq!(quotient(&g, &t).err(), Some(Error::NotNormal));
    }

    #[test]
    fn regenerate_preserves_group() {
        let g = s3();
        let gens: Vec<usize> = g.generators().iter().rev().copied().collect();
        let (h, map) = g.regenerate(&gens).unwrap();
        h.validate().unwrap();
        for a in h.elements() {
            for b in h.elements() {
                assert_eq!(map[h.mul(a, b)], g.mul(map[a], map[b]));
            }
        }
    }

    #[test]
    fn isomorphism_distinguishes_order_eight() {
        let c8 = cyclic(8);
        let q8 = FiniteGroup::from_permutations(
            8,
            &[vec![1, 3, 5, 6, 2, 7, 0, 4], vec![2, 4, 3, 7, 6, 1, 5, 0]],
        )
        .unwrap();
        let d8 = FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0], vec![3, 2, 1, 0]]).unwrap();
        assert!(!is_isomorphic(&c8, &q8).unwrap());
        assert!(!is_isomorphic(&q8, &d8).unwrap());
        assert!(is_isomorphic(&d8, &d8).unwrap());
        assert!(is_isomorphic(&a5(), &a5()).unwrap());
    }
}
