//! Finite-dimensional `F_l[H]`-modules and elementary abelian subgroups
//! viewed as such.
//!
//! Matrices act on column vectors and the action satisfies
//! `rho(mul(a, b)) = rho(a) * rho(b)`.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{prime_power, same_group, FiniteGroup, Subgroup};
use crate::linalg::{check_prime, kernel, FlMatrix, Subspace};

/// Default bound on `l^dim` for exhaustive spinning.
pub const DEFAULT_SPIN_CAP: u128 = 1 << 20;

#[derive(Clone, Debug)]
pub struct FlModule {
    l: u32,
    dim: usize,
    group: Arc<FiniteGroup>,
    action: Vec<FlMatrix>,
}

impl PartialEq for FlModule {
    fn eq(&self, other: &Self) -> bool {
        self.l == other.l
            && self.dim == other.dim
            && same_group(&self.group, &other.group)
            && self.action == other.action
    }
}

impl Eq for FlModule {}

impl FlModule {
    /// Extends one matrix per group generator to every element along the
    /// canonical words, then checks the homomorphism property on all pairs.
    pub fn from_generator_action(
        group: &Arc<FiniteGroup>,
        l: u32,
        generator_matrices: &[FlMatrix],
    ) -> Result<FlModule> {
        check_prime(l)?;
        let gens = group.generators();
        if generator_matrices.len() != gens.len() {
            return Err(Error::Shape(format!(
                "{} matrices for {} generators",
                generator_matrices.len(),
                gens.len()
            )));
        }
        let dim = match generator_matrices.first() {
            Some(m) => m.rows(),
            None => 0,
        };
        Self::from_generator_action_dim(group, l, dim, generator_matrices)
    }

    /// As [`FlModule::from_generator_action`], with the dimension stated
    /// explicitly (needed when the group has no generators).
    pub fn from_generator_action_dim(
        group: &Arc<FiniteGroup>,
        l: u32,
        dim: usize,
        generator_matrices: &[FlMatrix],
    ) -> Result<FlModule> {
        check_prime(l)?;
        let gens = group.generators();
        if generator_matrices.len() != gens.len() {
            return Err(Error::Shape(format!(
                "{} matrices for {} generators",
                generator_matrices.len(),
                gens.len()
            )));
        }
        for m in generator_matrices {
            if m.rows() != dim || m.cols() != dim || m.l() != l {
                return Err(Error::Shape(format!("generator matrices must be {dim}x{dim} over F_{l}")));
            }
            if !m.determinant_is_nonzero() {
                return Err(Error::Singular);
            }
        }
        let n = group.order();
        let mut action: Vec<Option<FlMatrix>> = vec![None; n];
        action[0] = Some(FlMatrix::identity(l, dim));
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (k, &g) in gens.iter().enumerate() {
                let y = group.mul(x, g);
                let candidate = action[x]
                    .as_ref()
                    .expect("visited")
                    .mul(&generator_matrices[k])?;
                match &action[y] {
                    None => {
                        action[y] = Some(candidate);
                        queue.push_back(y);
                    }
                    Some(existing) => {
                        if *existing != candidate {
                            return Err(Error::NotARepresentation(format!(
                                "two words for element {y} give different matrices"
                            )));
                        }
                    }
                }
            }
        }
        let action: Vec<FlMatrix> = action
            .into_iter()
            .map(|m| m.ok_or_else(|| Error::Invalid("generators do not reach every element".into())))
            .collect::<Result<_>>()?;
        let module = FlModule {
            l,
            dim,
            group: group.clone(),
            action,
        };
        module.validate()?;
        Ok(module)
    }

    pub fn trivial(group: &Arc<FiniteGroup>, l: u32, dim: usize) -> Result<FlModule> {
        let mats = vec![FlMatrix::identity(l, dim); group.generators().len()];
        Self::from_generator_action_dim(group, l, dim, &mats)
    }

    /// Exhaustive check of `rho(ab) = rho(a) rho(b)` and `rho(e) = I`.
    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        if self.action[0] != FlMatrix::identity(self.l, self.dim) {
            return Err(Error::NotARepresentation("identity does not act trivially".into()));
        }
        for a in g.elements() {
            for b in g.elements() {
                if self.action[g.mul(a, b)] != self.action[a].mul(&self.action[b])? {
                    return Err(Error::NotARepresentation(format!("relation fails at ({a},{b})")));
                }
            }
        }
        Ok(())
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn matrix(&self, h: usize) -> &FlMatrix {
        &self.action[h]
    }

    pub fn generator_matrices(&self) -> Vec<FlMatrix> {
        self.group
            .generators()
            .iter()
            .map(|&g| self.action[g].clone())
            .collect()
    }

    /// Number of elements `l^dim`, saturating.
    pub fn cardinality(&self) -> u128 {
        (self.l as u128).saturating_pow(self.dim as u32)
    }

    pub fn act(&self, h: usize, v: &[u32]) -> Vec<u32> {
        self.action[h].apply(v).expect("vector of module dimension")
    }

    pub fn is_trivial_action(&self) -> bool {
        let id = FlMatrix::identity(self.l, self.dim);
        self.action.iter().all(|m| *m == id)
    }

    /// `A^H`, as the intersection of `ker(rho(g) - I)` over the generators.
    pub fn fixed_subspace(&self) -> Subspace {
        let gens: Vec<usize> = self.group.generators().to_vec();
        self.fixed_subspace_of(&gens)
    }

    /// Vectors fixed by every listed element.
    pub fn fixed_subspace_of(&self, elements: &[usize]) -> Subspace {
        let d = self.dim;
        let id = FlMatrix::identity(self.l, d);
        let mut stacked = FlMatrix::zeros(self.l, elements.len() * d, d);
        for (k, &h) in elements.iter().enumerate() {
            let m = self.action[h].sub(&id).expect("square");
            for r in 0..d {
                for c in 0..d {
                    stacked.set(k * d + r, c, m.get(r, c));
                }
            }
        }
        kernel(&stacked)
    }

    pub fn is_stable(&self, s: &Subspace) -> bool {
        self.group.generators().iter().all(|&g| {
            s.basis_vectors()
                .iter()
                .all(|v| s.contains(&self.act(g, v)))
        })
    }

    /// Smallest `H`-stable subspace containing every vector in `seeds`.
    pub fn spin_all(&self, seeds: &[Vec<u32>]) -> Subspace {
        let mut span = Subspace::span(self.l, self.dim, &[]);
        let mut queue: VecDeque<Vec<u32>> = VecDeque::new();
        for v in seeds {
            if !span.contains(v) {
                span = span.sum(&Subspace::span(self.l, self.dim, std::slice::from_ref(v)));
                queue.push_back(v.clone());
            }
        }
        while let Some(v) = queue.pop_front() {
            for &g in self.group.generators() {
                let w = self.act(g, &v);
                if !span.contains(&w) {
                    span = span.sum(&Subspace::span(self.l, self.dim, std::slice::from_ref(&w)));
                    queue.push_back(w);
                }
            }
        }
        span
    }

    pub fn spin(&self, v: &[u32]) -> Subspace {
        self.spin_all(&[v.to_vec()])
    }

    fn check_spin_cap(&self, cap: u128) -> Result<()> {
        let size = self.cardinality();
        if size > cap {
            return Err(Error::SpinCap { size, cap });
        }
        Ok(())
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        self.is_irreducible_capped(DEFAULT_SPIN_CAP)
    }

    /// Spins every nonzero vector with leading coefficient 1.
    pub fn is_irreducible_capped(&self, cap: u128) -> Result<bool> {
        if self.dim == 0 {
            return Err(Error::ZeroModule);
        }
        self.check_spin_cap(cap)?;
        for v in normalized_vectors(self.l, self.dim) {
            if self.spin(&v).dim() < self.dim {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The action on a stable subspace, in its echelon basis.
    pub fn submodule(&self, s: &Subspace) -> Result<FlModule> {
        if !self.is_stable(s) {
            return Err(Error::Invalid("subspace is not H-stable".into()));
        }
        let basis = s.basis_vectors();
        let k = s.dim();
        let mats: Vec<FlMatrix> = self
            .group
            .generators()
            .iter()
            .map(|&g| {
                let mut m = FlMatrix::zeros(self.l, k, k);
                for (c, b) in basis.iter().enumerate() {
                    let coords = s.coordinates(&self.act(g, b)).expect("stable");
                    for (r, &x) in coords.iter().enumerate() {
                        m.set(r, c, x);
                    }
                }
                m
            })
            .collect();
        Self::from_generator_action_dim(&self.group, self.l, k, &mats)
    }

    /// The action on `V / S`, in the basis of standard vectors at the
    /// non-pivot columns of `S`. Returns the quotient module and those
    /// columns.
    pub fn quotient(&self, s: &Subspace) -> Result<(FlModule, Vec<usize>)> {
        if !self.is_stable(s) {
            return Err(Error::Invalid("subspace is not H-stable".into()));
        }
        let free = complement_columns(s);
        let k = free.len();
        let mats: Vec<FlMatrix> = self
            .group
            .generators()
            .iter()
            .map(|&g| {
                let mut m = FlMatrix::zeros(self.l, k, k);
                for (c, &j) in free.iter().enumerate() {
                    let mut e = vec![0u32; self.dim];
                    e[j] = 1;
                    let w = s.reduce(&self.act(g, &e));
                    for (r, &i) in free.iter().enumerate() {
                        m.set(r, c, w[i]);
                    }
                }
                m
            })
            .collect();
        Ok((Self::from_generator_action_dim(&self.group, self.l, k, &mats)?, free))
    }

    pub fn composition_series(&self) -> Result<Vec<CompositionFactor>> {
        self.composition_series_capped(DEFAULT_SPIN_CAP)
    }

    /// Chain `0 = V_0 < V_1 < ... < V_k = V` with irreducible quotients. At
    /// each step the next submodule is the spin of the lexicographically
    /// smallest nonzero vector of the current quotient among those whose
    /// spin has minimal dimension.
    pub fn composition_series_capped(&self, cap: u128) -> Result<Vec<CompositionFactor>> {
        self.check_spin_cap(cap)?;
        let mut out = Vec::new();
        let mut current = Subspace::zero(self.l, self.dim);
        while current.dim() < self.dim {
            let (quot, free) = self.quotient(&current)?;
            let mut best: Option<Subspace> = None;
            for v in nonzero_vectors(self.l, quot.dim()) {
                let s = quot.spin(&v);
                if best.as_ref().is_none_or(|b| s.dim() < b.dim()) {
                    let done = s.dim() == 1;
                    best = Some(s);
                    if done {
                        break;
                    }
                }
            }
            let minimal = best.expect("quotient is nonzero");
            let factor = quot.submodule(&minimal)?;
            // lift to V: free coordinates plus everything in `current`
            let mut lifted = current.basis_vectors();
            for b in minimal.basis_vectors() {
                let mut v = vec![0u32; self.dim];
                for (i, &j) in free.iter().enumerate() {
                    v[j] = b[i];
                }
                lifted.push(v);
            }
            current = Subspace::span(self.l, self.dim, &lifted);
            out.push(CompositionFactor {
                submodule: current.clone(),
                factor,
            });
        }
        Ok(out)
    }

    pub fn direct_sum(&self, other: &FlModule) -> Result<FlModule> {
        if !same_group(&self.group, &other.group) || self.l != other.l {
            return Err(Error::GroupMismatch);
        }
        let d = self.dim + other.dim;
        let mats: Vec<FlMatrix> = self
            .group
            .generators()
            .iter()
            .map(|&g| {
                let mut m = FlMatrix::zeros(self.l, d, d);
                for r in 0..self.dim {
                    for c in 0..self.dim {
                        m.set(r, c, self.action[g].get(r, c));
                    }
                }
                for r in 0..other.dim {
                    for c in 0..other.dim {
                        m.set(self.dim + r, self.dim + c, other.action[g].get(r, c));
                    }
                }
                m
            })
            .collect();
        Self::from_generator_action_dim(&self.group, self.l, d, &mats)
    }

    /// The module in new coordinates `w = P v`: `rho'(h) = P rho(h) P^-1`.
    pub fn change_basis(&self, p: &FlMatrix) -> Result<FlModule> {
        let pinv = p.inverse()?;
        let action = self
            .action
            .iter()
            .map(|m| p.mul(m)?.mul(&pinv))
            .collect::<Result<Vec<_>>>()?;
        Ok(FlModule {
            l: self.l,
            dim: self.dim,
            group: self.group.clone(),
            action,
        })
    }

    /// The same module over an isomorphic copy of the group, where
    /// `new_to_old[i]` is the element of the current group corresponding to
    /// element `i` of `group`.
    pub fn transport(&self, group: &Arc<FiniteGroup>, new_to_old: &[usize]) -> Result<FlModule> {
        if new_to_old.len() != self.group.order() || group.order() != self.group.order() {
            return Err(Error::GroupMismatch);
        }
        let action = new_to_old.iter().map(|&o| self.action[o].clone()).collect();
        let module = FlModule {
            l: self.l,
            dim: self.dim,
            group: group.clone(),
            action,
        };
        module.validate()?;
        Ok(module)
    }

    /// Basis of `Hom_H(self, target)` as `target.dim x self.dim` matrices.
    pub fn equivariant_homs(&self, target: &FlModule) -> Result<Vec<FlMatrix>> {
        if !same_group(&self.group, &target.group) || self.l != target.l {
            return Err(Error::GroupMismatch);
        }
        let (m, n) = (target.dim, self.dim);
        let unknowns = m * n;
        let gens = self.group.generators();
        // X rho_B(g) - rho_A(g) X = 0, X indexed row-major
        let mut sys = FlMatrix::zeros(self.l, gens.len() * unknowns, unknowns);
        let l = self.l;
        for (k, &g) in gens.iter().enumerate() {
            let b = &self.action[g];
            let a = &target.action[g];
            for i in 0..m {
                for j in 0..n {
                    let row = k * unknowns + i * n + j;
                    for t in 0..n {
                        let idx = i * n + t;
                        let v = sys.get(row, idx);
                        sys.set(row, idx, (v + b.get(t, j)) % l);
                    }
                    for t in 0..m {
                        let idx = t * n + j;
                        let v = sys.get(row, idx);
                        sys.set(row, idx, (v + l - a.get(i, t)) % l);
                    }
                }
            }
        }
        kernel(&sys)
            .basis_vectors()
            .into_iter()
            .map(|v| FlMatrix::with_shape(l, m, n, v))
            .collect()
    }

    pub fn is_equivariant(&self, target: &FlModule, u: &FlMatrix) -> bool {
        if !same_group(&self.group, &target.group) || u.rows() != target.dim || u.cols() != self.dim {
            return false;
        }
        self.group.generators().iter().all(|&g| {
            u.mul(&self.action[g]).ok() == target.action[g].mul(u).ok()
        })
    }
}

#[derive(Clone, Debug)]
pub struct CompositionFactor {
    /// `V_i` in the chain.
    pub submodule: Subspace,
    /// `V_i / V_{i-1}`.
    pub factor: FlModule,
}

fn complement_columns(s: &Subspace) -> Vec<usize> {
    let mut is_pivot = vec![false; s.ambient_dim()];
    for &p in s.pivots() {
        is_pivot[p] = true;
    }
    (0..s.ambient_dim()).filter(|&c| !is_pivot[c]).collect()
}

/// All of `F_l^dim` except zero, in lexicographic order.
pub fn nonzero_vectors(l: u32, dim: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = (l as u128).pow(dim as u32);
    (1..total).map(move |mut i| {
        let mut v = vec![0u32; dim];
        for x in v.iter_mut().rev() {
            *x = (i % l as u128) as u32;
            i /= l as u128;
        }
        v
    })
}

/// Nonzero vectors whose first nonzero coordinate is 1.
fn normalized_vectors(l: u32, dim: usize) -> impl Iterator<Item = Vec<u32>> {
    nonzero_vectors(l, dim).filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
}

/// An elementary abelian subgroup with a chosen basis, identifying it with
/// `F_l^d`. Element `Σ c_i b_i` has coordinates `c`.
#[derive(Clone, Debug)]
pub struct ElementaryAbelian {
    subgroup: Subgroup,
    l: u32,
    basis: Vec<usize>,
    /// element index of the parent -> coordinates (None outside the subgroup)
    coords: Vec<Option<Vec<u32>>>,
    /// base-l encoded coordinates -> element
    elements: Vec<usize>,
}

impl ElementaryAbelian {
    /// Chooses the basis greedily along canonical element order.
    pub fn new(subgroup: &Subgroup) -> Result<ElementaryAbelian> {
        let (l, _) = Self::exponent(subgroup)?;
        let g = subgroup.parent();
        let mut basis = Vec::new();
        let mut span = Subgroup::trivial(g);
        for &x in subgroup.members() {
            if !span.contains(x) {
                basis.push(x);
                span = Subgroup::generated(g, &basis)?;
            }
        }
        Self::with_basis(subgroup, l, &basis)
    }

    fn exponent(subgroup: &Subgroup) -> Result<(u32, u32)> {
        if !subgroup.is_abelian() {
            return Err(Error::NotAbelian);
        }
        if subgroup.is_trivial() {
            // any prime works for the zero space; callers that care pass one
            return Ok((2, 0));
        }
        let (l, k) = prime_power(subgroup.order() as u64).ok_or_else(|| {
            Error::NotElementaryAbelian(format!("order {} is not a prime power", subgroup.order()))
        })?;
        let g = subgroup.parent();
        if subgroup.members().iter().any(|&x| g.pow(x, l) != 0) {
            return Err(Error::NotElementaryAbelian(format!("exponent is not {l}")));
        }
        Ok((l as u32, k))
    }

    /// Uses the given basis, which must span `subgroup` freely.
    pub fn with_basis(subgroup: &Subgroup, l: u32, basis: &[usize]) -> Result<ElementaryAbelian> {
        if !subgroup.is_trivial() {
            let (el, _) = Self::exponent(subgroup)?;
            if el != l {
                return Err(Error::NotElementaryAbelian(format!("expected exponent {l}, found {el}")));
            }
        }
        check_prime(l)?;
        let g = subgroup.parent();
        let d = basis.len();
        let size = (l as usize).pow(d as u32);
        if size != subgroup.order() {
            return Err(Error::NotElementaryAbelian("basis size does not match the order".into()));
        }
        let mut coords = vec![None; g.order()];
        let mut elements = vec![0usize; size];
        for code in 0..size {
            let v = decode(code, l, d);
            let mut x = 0;
            for (i, &c) in v.iter().enumerate() {
                x = g.mul(x, g.pow(basis[i], c as u64));
            }
            if !subgroup.contains(x) || coords[x].is_some() {
                return Err(Error::NotElementaryAbelian("basis is not independent".into()));
            }
            coords[x] = Some(v);
            elements[code] = x;
        }
        Ok(ElementaryAbelian {
            subgroup: subgroup.clone(),
            l,
            basis: basis.to_vec(),
            coords,
            elements,
        })
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn to_vector(&self, x: usize) -> Option<&[u32]> {
        self.coords.get(x).and_then(|c| c.as_deref())
    }

    pub fn to_element(&self, v: &[u32]) -> usize {
        self.elements[encode(v, self.l)]
    }

    /// Subgroup spanned by a subspace of coordinates.
    pub fn subgroup_of(&self, s: &Subspace) -> Subgroup {
        let members: Vec<usize> = self
            .subgroup
            .members()
            .iter()
            .copied()
            .filter(|&x| s.contains(self.to_vector(x).expect("member")))
            .collect();
        Subgroup::from_members(self.subgroup.parent(), &members).expect("subspace gives a subgroup")
    }

    /// Matrix of `x ↦ g x g^-1` in this basis, for `g` normalizing the
    /// subgroup.
    pub fn conjugation_matrix(&self, g: usize) -> Result<FlMatrix> {
        let grp = self.subgroup.parent();
        let d = self.dim();
        let mut m = FlMatrix::zeros(self.l, d, d);
        for (c, &b) in self.basis.iter().enumerate() {
            let y = grp.conjugate(g, b);
            let v = self.to_vector(y).ok_or(Error::NotNormal)?;
            for (r, &x) in v.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        Ok(m)
    }

    /// The conjugation module for the full parent group.
    pub fn conjugation_module(&self) -> Result<FlModule> {
        let grp = self.subgroup.parent();
        let mats = grp
            .generators()
            .iter()
            .map(|&g| self.conjugation_matrix(g))
            .collect::<Result<Vec<_>>>()?;
        FlModule::from_generator_action_dim(grp, self.l, self.dim(), &mats)
    }
}

pub fn encode(v: &[u32], l: u32) -> usize {
    v.iter().fold(0usize, |acc, &x| acc * l as usize + x as usize)
}

pub fn decode(mut code: usize, l: u32, d: usize) -> Vec<u32> {
    let mut v = vec![0u32; d];
    for x in v.iter_mut().rev() {
        *x = (code % l as usize) as u32;
        code /= l as usize;
    }
    v
}

/// `A^l` for an abelian `l`-group `A`.
pub fn multiplication_by_l_submodule(a: &Subgroup) -> Result<Subgroup> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if a.is_trivial() {
        return Ok(a.clone());
    }
    let (l, _) = prime_power(a.order() as u64).ok_or_else(|| {
        Error::NotElementaryAbelian(format!("order {} mixes several primes", a.order()))
    })?;
    let g = a.parent();
    let mut powers: Vec<usize> = a.members().iter().map(|&x| g.pow(x, l)).collect();
    powers.sort_unstable();
    powers.dedup();
    Subgroup::from_members(g, &powers)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Arc<FiniteGroup> {
        let g: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Arc::new(FiniteGroup::from_permutations(n, &[g]).unwrap())
    }

    fn mat(l: u32, rows: &[Vec<i64>]) -> FlMatrix {
        FlMatrix::from_rows(l, rows).unwrap()
    }

    fn regular_c2_f2() -> FlModule {
        FlModule::from_generator_action(&cyclic(2), 2, &[mat(2, &[vec![0, 1], vec![1, 0]])]).unwrap()
    }

    fn c3_dim2_f2() -> FlModule {
        FlModule::from_generator_action(&cyclic(3), 2, &[mat(2, &[vec![0, 1], vec![1, 1]])]).unwrap()
    }

    fn sign_f3() -> FlModule {
        FlModule::from_generator_action(&cyclic(2), 3, &[mat(3, &[vec![-1]])]).unwrap()
    }

    #[test]
    fn generator_action_examples() {
        let h = cyclic(4);
        let m = FlModule::trivial(&h, 5, 3).unwrap();
        assert!(m.is_trivial_action());
        let s = sign_f3();
        assert_eq!(s.matrix(1).get(0, 0), 2);
        let m = c3_dim2_f2();
        assert_eq!(m.dim(), 2);
        let g = m.matrix(1);
        assert_eq!(g.mul(g).unwrap().mul(g).unwrap(), FlMatrix::identity(2, 2));
    }

    #[test]
    fn generator_action_errors() {
        // [[0,1],[1,1]] has order 3, not 2
        let r = FlModule::from_generator_action(&cyclic(2), 2, &[mat(2, &[vec![0, 1], vec![1, 1]])]);
        assert!(matches!(r, Err(Error::NotARepresentation(_))));
        let r = FlModule::from_generator_action(&cyclic(2), 2, &[mat(2, &[vec![1, 1], vec![1, 1]])]);
        assert_eq!(r.err(), Some(Error::Singular));
    }

    #[test]
    fn fixed_subspace_examples() {
        let t = FlModule::trivial(&cyclic(3), 2, 3).unwrap();
        assert_eq!(t.fixed_subspace().dim(), 3);
        assert_eq!(sign_f3().fixed_subspace().dim(), 0);
        let r = regular_c2_f2();
        let f = r.fixed_subspace();
        assert_eq!(f.dim(), 1);
        assert!(f.contains(&[1, 1]));
        assert!(r.is_stable(&f));
    }

    #[test]
    fn spin_examples() {
        let r = regular_c2_f2();
        assert_eq!(r.spin(&[0, 0]).dim(), 0);
        assert_eq!(r.spin(&[1, 0]).dim(), 2);
        let t = FlModule::trivial(&cyclic(2), 3, 2).unwrap();
        let s = t.spin(&[1, 2]);
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&[1, 2]));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(sign_f3().is_irreducible().unwrap());
        assert!(!regular_c2_f2().is_irreducible().unwrap());
        assert!(c3_dim2_f2().is_irreducible().unwrap());
        let z = FlModule::trivial(&cyclic(2), 2, 0).unwrap();
        assert_eq!(z.is_irreducible(), Err(Error::ZeroModule));
        let big = FlModule::trivial(&cyclic(2), 2, 21).unwrap();
        assert!(matches!(big.is_irreducible(), Err(Error::SpinCap { .. })));
    }

    #[test]
    fn composition_series_examples() {
        let c = c3_dim2_f2().composition_series().unwrap();
        assert_eq!(c.len(), 1);
        let t = FlModule::trivial(&cyclic(2), 2, 2).unwrap();
        let c = t.composition_series().unwrap();
        assert_eq!(c.iter().map(|f| f.factor.dim()).collect::<Vec<_>>(), vec![1, 1]);
        let c = regular_c2_f2().composition_series().unwrap();
        assert_eq!(c.iter().map(|f| f.factor.dim()).collect::<Vec<_>>(), vec![1, 1]);
        assert!(c[0].submodule.contains(&[1, 1]));
        assert_eq!(c[0].submodule.dim(), 1);
    }

    #[test]
    fn equivariant_homs_of_regular_rep() {
        let r = regular_c2_f2();
        // End of F_2[C_2] is F_2[C_2] itself, dimension 2
        assert_eq!(r.equivariant_homs(&r).unwrap().len(), 2);
        let t = FlModule::trivial(&cyclic(2), 2, 1).unwrap();
        let homs = r.equivariant_homs(&t).unwrap();
        assert_eq!(homs.len(), 1);
        assert!(homs.iter().all(|u| r.is_equivariant(&t, u)));
    }

    #[test]
    fn power_subgroup_examples() {
        // C4 x C2 on 6 points
        let g = Arc::new(
            FiniteGroup::from_permutations(6, &[vec![1, 2, 3, 0, 4, 5], vec![0, 1, 2, 3, 5, 4]])
                .unwrap(),
        );
        let squares = multiplication_by_l_submodule(&Subgroup::whole(&g)).unwrap();
        assert_eq!(squares.order(), 2);
        let v4 = Arc::new(
            FiniteGroup::from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]]).unwrap(),
        );
        assert!(multiplication_by_l_submodule(&Subgroup::whole(&v4)).unwrap().is_trivial());
        let c9 = cyclic(9);
        assert_eq!(multiplication_by_l_submodule(&Subgroup::whole(&c9)).unwrap().order(), 3);
        let c6 = cyclic(6);
        assert!(multiplication_by_l_submodule(&Subgroup::whole(&c6)).is_err());
    }

    #[test]
    fn elementary_abelian_coordinates() {
        let v4 = Arc::new(
            FiniteGroup::from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]]).unwrap(),
        );
        let e = ElementaryAbelian::new(&Subgroup::whole(&v4)).unwrap();
        assert_eq!(e.dim(), 2);
        for x in v4.elements() {
            assert_eq!(e.to_element(e.to_vector(x).unwrap()), x);
        }
        let m = e.conjugation_module().unwrap();
        assert!(m.is_trivial_action());
        assert!(ElementaryAbelian::new(&Subgroup::whole(&cyclic(4))).is_err());
    }
}
