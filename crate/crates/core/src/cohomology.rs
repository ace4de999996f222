//! Degree 1 and 2 cohomology of finite groups with normalized cochains,
//! extension classes, extensions built from cocycles, sections and
//! pushouts.
//!
//! A normalized 1-cochain is stored as a vector indexed by
//! `(g - 1) * d + i` for `g != e`; a normalized 2-cochain by
//! `((a - 1) * (n - 1) + (b - 1)) * d + i` for `a, b != e`.

use std::collections::VecDeque;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{min_generators, same_group, FiniteGroup, GroupHom, Subgroup, DEFAULT_GROUP_SIZE_CAP};
use crate::linalg::{add_mod, kernel, sub_mod, FlMatrix, Subspace};
use crate::module::{decode, encode, ElementaryAbelian, FlModule};

/// Default cap on `|A|^{n_H}` candidate sections.
pub const DEFAULT_SECTION_BUDGET: u128 = 1_000_000;

/// The transgression of the five-term sequence, evaluated on `u`, is
/// `TRANSGRESSION_SIGN` times the class `u ∘ γ`. With the pushout
/// convention `class(pushout(E, u)) = u ∘ γ` this makes
/// `trans(u) = -class(pushout(E, u))`.
pub const TRANSGRESSION_SIGN: i64 = -1;

/// BFS spanning tree of the right Cayley graph for a generator list.
struct CayleyTree {
    order: Vec<usize>,
    /// `parent[x] = (y, k)` with `x = y * gens[k]`; unused for the identity.
    parent: Vec<(usize, usize)>,
}

impl CayleyTree {
    fn new(group: &FiniteGroup, gens: &[usize]) -> CayleyTree {
        let n = group.order();
        let mut parent = vec![(usize::MAX, 0); n];
        parent[0] = (0, 0);
        let mut order = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (k, &g) in gens.iter().enumerate() {
                let y = group.mul(x, g);
                if parent[y].0 == usize::MAX {
                    parent[y] = (x, k);
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
        CayleyTree { order, parent }
    }
}

fn idx1(g: usize, d: usize) -> usize {
    (g - 1) * d
}

fn idx2(a: usize, b: usize, n: usize, d: usize) -> usize {
    ((a - 1) * (n - 1) + (b - 1)) * d
}

/// Value of a normalized 1-cochain at `g`.
pub fn value1(c: &[u32], g: usize, d: usize) -> Vec<u32> {
    if g == 0 {
        vec![0; d]
    } else {
        c[idx1(g, d)..idx1(g, d) + d].to_vec()
    }
}

/// Value of a normalized 2-cochain at `(a, b)`.
pub fn value2(f: &[u32], a: usize, b: usize, n: usize, d: usize) -> Vec<u32> {
    if a == 0 || b == 0 {
        vec![0; d]
    } else {
        let i = idx2(a, b, n, d);
        f[i..i + d].to_vec()
    }
}

fn vadd(x: &mut [u32], y: &[u32], l: u32) {
    for (a, &b) in x.iter_mut().zip(y) {
        *a = add_mod(*a, b, l);
    }
}

fn vsub(x: &mut [u32], y: &[u32], l: u32) {
    for (a, &b) in x.iter_mut().zip(y) {
        *a = sub_mod(*a, b, l);
    }
}

/// `δ` of a normalized 1-cochain: `(a, b) ↦ a·c(b) − c(ab) + c(a)`.
pub fn coboundary1(module: &FlModule, c: &[u32]) -> Vec<u32> {
    let g = module.group();
    let (n, d, l) = (g.order(), module.dim(), module.l());
    let mut out = vec![0u32; (n - 1) * (n - 1) * d];
    for a in 1..n {
        for b in 1..n {
            let mut v = module.act(a, &value1(c, b, d));
            vsub(&mut v, &value1(c, g.mul(a, b), d), l);
            vadd(&mut v, &value1(c, a, d), l);
            let i = idx2(a, b, n, d);
            out[i..i + d].copy_from_slice(&v);
        }
    }
    out
}

/// `δ` of `m ∈ A` as a 1-cochain: `g ↦ g·m − m`.
pub fn coboundary0(module: &FlModule, m: &[u32]) -> Vec<u32> {
    let (n, d, l) = (module.group().order(), module.dim(), module.l());
    let mut out = vec![0u32; (n - 1) * d];
    for g in 1..n {
        let mut v = module.act(g, m);
        vsub(&mut v, m, l);
        out[idx1(g, d)..idx1(g, d) + d].copy_from_slice(&v);
    }
    out
}

/// Checks `a·f(b,c) − f(ab,c) + f(a,bc) − f(a,b) = 0` on every triple.
pub fn is_two_cocycle(module: &FlModule, f: &[u32]) -> bool {
    let g = module.group();
    let (n, d, l) = (g.order(), module.dim(), module.l());
    if f.len() != (n - 1) * (n - 1) * d {
        return false;
    }
    for a in 1..n {
        for b in 1..n {
            let ab = g.mul(a, b);
            for c in 1..n {
                let mut v = module.act(a, &value2(f, b, c, n, d));
                vsub(&mut v, &value2(f, ab, c, n, d), l);
                vadd(&mut v, &value2(f, a, g.mul(b, c), n, d), l);
                vsub(&mut v, &value2(f, a, b, n, d), l);
                if v.iter().any(|&x| x != 0) {
                    return false;
                }
            }
        }
    }
    true
}

/// Checks `d(gh) = d(g) + g·d(h)` on every pair.
pub fn is_one_cocycle(module: &FlModule, c: &[u32]) -> bool {
    let g = module.group();
    let (n, d, l) = (g.order(), module.dim(), module.l());
    if c.len() != (n - 1) * d {
        return false;
    }
    for a in 1..n {
        for b in 1..n {
            let mut v = value1(c, a, d);
            vadd(&mut v, &module.act(a, &value1(c, b, d)), l);
            if v != value1(c, g.mul(a, b), d) {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug)]
pub struct CochainSpace {
    degree: usize,
    module: FlModule,
    cocycles: Subspace,
    coboundaries: Subspace,
    /// Cocycles reduced modulo coboundaries; a canonical complement.
    complement: Subspace,
}

impl CochainSpace {
    fn assemble(degree: usize, module: &FlModule, cocycles: Subspace, coboundaries: Subspace) -> CochainSpace {
        debug_assert!(coboundaries.is_subspace_of(&cocycles));
        let reduced: Vec<Vec<u32>> = cocycles
            .basis_vectors()
            .iter()
            .map(|z| coboundaries.reduce(z))
            .collect();
        let complement = Subspace::span(module.l(), cocycles.ambient_dim(), &reduced);
        CochainSpace {
            degree,
            module: module.clone(),
            cocycles,
            coboundaries,
            complement,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn module(&self) -> &FlModule {
        &self.module
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.module.group()
    }

    pub fn cocycles(&self) -> &Subspace {
        &self.cocycles
    }

    pub fn coboundaries(&self) -> &Subspace {
        &self.coboundaries
    }

    pub fn dim(&self) -> usize {
        self.complement.dim()
    }

    pub fn cochain_len(&self) -> usize {
        self.cocycles.ambient_dim()
    }

    /// Class of a cocycle, with the canonical representative obtained by
    /// reducing modulo the coboundary echelon basis.
    pub fn class_of(self: &Arc<Self>, cocycle: &[u32]) -> Result<CohomologyClass> {
        if cocycle.len() != self.cochain_len() {
            return Err(Error::Shape(format!(
                "cochain of length {} in a space of length {}",
                cocycle.len(),
                self.cochain_len()
            )));
        }
        if !self.cocycles.contains(cocycle) {
            return Err(Error::NotACocycle);
        }
        let representative = self.coboundaries.reduce(cocycle);
        let coordinates = self
            .complement
            .coordinates(&representative)
            .expect("reduced cocycles lie in the complement");
        Ok(CohomologyClass {
            space: self.clone(),
            coordinates,
            representative,
        })
    }

    pub fn class_from_coordinates(self: &Arc<Self>, coordinates: &[u32]) -> Result<CohomologyClass> {
        if coordinates.len() != self.dim() {
            return Err(Error::Shape(format!("{} coordinates for dimension {}", coordinates.len(), self.dim())));
        }
        let l = self.module.l();
        let coordinates: Vec<u32> = coordinates.iter().map(|&c| c % l).collect();
        let representative = self.complement.combination(&coordinates);
        Ok(CohomologyClass {
            space: self.clone(),
            coordinates,
            representative,
        })
    }

    pub fn zero_class(self: &Arc<Self>) -> CohomologyClass {
        self.class_from_coordinates(&vec![0; self.dim()]).expect("right length")
    }

    pub fn basis_classes(self: &Arc<Self>) -> Vec<CohomologyClass> {
        (0..self.dim())
            .map(|i| {
                let mut c = vec![0; self.dim()];
                c[i] = 1;
                self.class_from_coordinates(&c).expect("right length")
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct CohomologyClass {
    space: Arc<CochainSpace>,
    coordinates: Vec<u32>,
    representative: Vec<u32>,
}

impl PartialEq for CohomologyClass {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.space, &other.space) || self.space.module == other.space.module)
            && self.coordinates == other.coordinates
    }
}

impl Eq for CohomologyClass {}

impl CohomologyClass {
    pub fn space(&self) -> &Arc<CochainSpace> {
        &self.space
    }

    pub fn coordinates(&self) -> &[u32] {
        &self.coordinates
    }

    pub fn representative(&self) -> &[u32] {
        &self.representative
    }

    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(|&c| c == 0)
    }

    pub fn scaled(&self, c: i64) -> CohomologyClass {
        let l = self.space.module.l() as i64;
        let c = c.rem_euclid(l) as u32;
        let coords: Vec<u32> = self
            .coordinates
            .iter()
            .map(|&x| ((x as u64 * c as u64) % l as u64) as u32)
            .collect();
        self.space.class_from_coordinates(&coords).expect("same length")
    }
}

/// `dim A^H` computed as the kernel of `m ↦ (g·m − m)_g` over all elements.
pub fn h0(module: &FlModule) -> usize {
    let n = module.group().order();
    let d = module.dim();
    let mut cols = Vec::with_capacity(d);
    for i in 0..d {
        let mut e = vec![0u32; d];
        e[i] = 1;
        cols.push(coboundary0(module, &e));
    }
    // columns of δ^0 as rows of its transpose; kernel of δ^0 = d - rank
    let rank = Subspace::span(module.l(), (n.max(1) - 1) * d, &cols).dim();
    d - rank
}

/// Crossed homomorphisms modulo principal ones.
///
/// A crossed homomorphism is determined by its values on the generators;
/// the unknowns are those values and the constraints are the edges of the
/// Cayley graph, which is equivalent to the identity on all pairs.
pub fn h1(module: &FlModule) -> (usize, CochainSpace) {
    let space = h1_space(module);
    (space.dim(), space)
}

pub fn h1_space(module: &FlModule) -> CochainSpace {
    let g = module.group();
    let (n, d, l) = (g.order(), module.dim(), module.l());
    let gens = g.generators().to_vec();
    let params = gens.len() * d;
    let tree = CayleyTree::new(g, &gens);
    let gen_block = |k: usize| {
        let mut m = FlMatrix::zeros(l, d, params);
        for i in 0..d {
            m.set(i, k * d + i, 1);
        }
        m
    };
    let blocks: Vec<FlMatrix> = (0..gens.len()).map(gen_block).collect();
    // symbolic value of the crossed homomorphism at each element
    let mut sym = vec![FlMatrix::zeros(l, d, params); n];
    for &x in &tree.order[1..] {
        let (y, k) = tree.parent[x];
        sym[x] = sym[y].add(&module.matrix(y).mul(&blocks[k]).unwrap()).unwrap();
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for x in 0..n {
        for (k, &s) in gens.iter().enumerate() {
            let lhs = sym[g.mul(x, s)].clone();
            let rhs = sym[x].add(&module.matrix(x).mul(&blocks[k]).unwrap()).unwrap();
            let diff = lhs.sub(&rhs).unwrap();
            for r in 0..d {
                if diff.row(r).iter().any(|&v| v != 0) {
                    rows.push(diff.row(r).to_vec());
                }
            }
        }
    }
    let system = FlMatrix::from_vectors(l, params, &rows).unwrap();
    let solutions = kernel(&system);
    let len = (n - 1) * d;
    let cocycle_vectors: Vec<Vec<u32>> = solutions
        .basis_vectors()
        .iter()
        .map(|p| {
            let mut c = vec![0u32; len];
            for x in 1..n {
                let v = sym[x].apply(p).unwrap();
                c[idx1(x, d)..idx1(x, d) + d].copy_from_slice(&v);
            }
            c
        })
        .collect();
    let cocycles = Subspace::span(l, len, &cocycle_vectors);
    let boundaries: Vec<Vec<u32>> = (0..d)
        .map(|i| {
            let mut e = vec![0u32; d];
            e[i] = 1;
            coboundary0(module, &e)
        })
        .collect();
    let coboundaries = Subspace::span(l, len, &boundaries);
    CochainSpace::assemble(1, module, cocycles, coboundaries)
}

/// Normalized 2-cocycles modulo coboundaries.
///
/// The unknowns are the values `f(a, s)` for `s` a generator. Every other
/// value follows from the cocycle identity along the Cayley tree, and the
/// remaining constraints are the cocycle identity for `a` a generator,
/// which propagates to every `a`.
pub fn h2(module: &FlModule) -> (usize, CochainSpace) {
    let space = h2_space(module);
    (space.dim(), space)
}

pub fn h2_space(module: &FlModule) -> CochainSpace {
    let g = module.group();
    let (n, d, l) = (g.order(), module.dim(), module.l());
    let gens = g.generators().to_vec();
    let s = gens.len();
    let params = n.saturating_sub(1) * s * d;
    let tree = CayleyTree::new(g, &gens);
    let param = |a: usize, k: usize| {
        let mut m = FlMatrix::zeros(l, d, params);
        if a != 0 {
            for i in 0..d {
                m.set(i, ((a - 1) * s + k) * d + i, 1);
            }
        }
        m
    };
    let zero = FlMatrix::zeros(l, d, params);
    let mut sym = vec![zero.clone(); n * n];
    for a in 0..n {
        for &b in &tree.order[1..] {
            let (c, k) = tree.parent[b];
            let mut v = sym[a * n + c].add(&param(g.mul(a, c), k)).unwrap();
            v = v.sub(&module.matrix(a).mul(&param(c, k)).unwrap()).unwrap();
            sym[a * n + b] = v;
        }
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut push = |m: &FlMatrix| {
        for r in 0..d {
            if m.row(r).iter().any(|&v| v != 0) {
                rows.push(m.row(r).to_vec());
            }
        }
    };
    for a in 0..n {
        for (k, &sk) in gens.iter().enumerate() {
            push(&sym[a * n + sk].sub(&param(a, k)).unwrap());
        }
    }
    for &a in &gens {
        for b in 0..n {
            let ab = g.mul(a, b);
            for c in 0..n {
                let mut v = module.matrix(a).mul(&sym[b * n + c]).unwrap();
                v = v.sub(&sym[ab * n + c]).unwrap();
                v = v.add(&sym[a * n + g.mul(b, c)]).unwrap();
                v = v.sub(&sym[a * n + b]).unwrap();
                push(&v);
            }
        }
    }
    let system = FlMatrix::from_vectors(l, params, &rows).unwrap();
    let solutions = kernel(&system);
    let len = n.saturating_sub(1).pow(2) * d;
    let cocycle_vectors: Vec<Vec<u32>> = solutions
        .basis_vectors()
        .iter()
        .map(|p| {
            let mut f = vec![0u32; len];
            for a in 1..n {
                for b in 1..n {
                    let v = sym[a * n + b].apply(p).unwrap();
                    let i = idx2(a, b, n, d);
                    f[i..i + d].copy_from_slice(&v);
                }
            }
            f
        })
        .collect();
    let cocycles = Subspace::span(l, len, &cocycle_vectors);
    let boundaries: Vec<Vec<u32>> = (0..n.saturating_sub(1) * d)
        .map(|j| {
            let mut c = vec![0u32; (n - 1) * d];
            c[j] = 1;
            coboundary1(module, &c)
        })
        .collect();
    let coboundaries = Subspace::span(l, len, &boundaries);
    CochainSpace::assemble(2, module, cocycles, coboundaries)
}

/// `1 → A → G → H → 1` with `A` elementary abelian, identified with
/// `F_l^d` through a basis of kernel elements.
#[derive(Clone, Debug)]
pub struct ExtensionData {
    total: Arc<FiniteGroup>,
    kernel: ElementaryAbelian,
    projection: GroupHom,
    induced_module: FlModule,
    /// Smallest element of each fibre, indexed by the quotient element.
    section: Vec<usize>,
}

impl ExtensionData {
    /// Uses the greedy canonical basis of the kernel.
    pub fn new(projection: GroupHom, l: u32) -> Result<ExtensionData> {
        let kernel = projection.kernel();
        let basis = if kernel.is_trivial() {
            ElementaryAbelian::with_basis(&kernel, l, &[])?
        } else {
            let e = ElementaryAbelian::new(&kernel)?;
            if e.l() != l {
                return Err(Error::NotElementaryAbelian(format!("kernel has exponent {}, not {l}", e.l())));
            }
            e
        };
        Self::with_kernel(projection, basis)
    }

    pub fn with_kernel(projection: GroupHom, kernel: ElementaryAbelian) -> Result<ExtensionData> {
        if !projection.is_surjective() {
            return Err(Error::Invalid("projection is not surjective".into()));
        }
        if projection.kernel() != *kernel.subgroup() {
            return Err(Error::Invalid("kernel does not match the projection".into()));
        }
        let total = projection.source().clone();
        let quotient = projection.target().clone();
        let mut section = vec![usize::MAX; quotient.order()];
        for x in total.elements() {
            let h = projection.apply(x);
            if section[h] == usize::MAX {
                section[h] = x;
            }
        }
        let mats = quotient
            .generators()
            .iter()
            .map(|&h| kernel.conjugation_matrix(section[h]))
            .collect::<Result<Vec<_>>>()?;
        let induced_module = FlModule::from_generator_action_dim(&quotient, kernel.l(), kernel.dim(), &mats)?;
        Ok(ExtensionData {
            total,
            kernel,
            projection,
            induced_module,
            section,
        })
    }

    pub fn total(&self) -> &Arc<FiniteGroup> {
        &self.total
    }

    pub fn quotient(&self) -> &Arc<FiniteGroup> {
        self.projection.target()
    }

    pub fn kernel(&self) -> &Subgroup {
        self.kernel.subgroup()
    }

    pub fn kernel_basis(&self) -> &ElementaryAbelian {
        &self.kernel
    }

    pub fn projection(&self) -> &GroupHom {
        &self.projection
    }

    pub fn induced_module(&self) -> &FlModule {
        &self.induced_module
    }

    pub fn canonical_section(&self) -> &[usize] {
        &self.section
    }

    /// `f(a, b) = s(a) s(b) s(ab)^{-1}` for the canonical section `s`.
    pub fn cocycle(&self) -> Vec<u32> {
        let g = &self.total;
        let h = self.quotient();
        let (n, d) = (h.order(), self.kernel.dim());
        let mut f = vec![0u32; n.saturating_sub(1).pow(2) * d];
        for a in 1..n {
            for b in 1..n {
                let x = g.mul(g.mul(self.section[a], self.section[b]), g.inv(self.section[h.mul(a, b)]));
                let v = self.kernel.to_vector(x).expect("lies in the kernel");
                let i = idx2(a, b, n, d);
                f[i..i + d].copy_from_slice(v);
            }
        }
        f
    }
}

/// Class of `E` in a precomputed `H^2(H, A)`; the space must belong to the
/// induced module of `E`.
pub fn extension_class_in(e: &ExtensionData, space: &Arc<CochainSpace>) -> Result<CohomologyClass> {
    if space.degree() != 2 || *space.module() != e.induced_module {
        return Err(Error::GroupMismatch);
    }
    space.class_of(&e.cocycle())
}

pub fn extension_class(e: &ExtensionData) -> Result<CohomologyClass> {
    let space = Arc::new(h2_space(&e.induced_module));
    extension_class_in(e, &space)
}

/// The group on pairs `(m, h)` with
/// `(m, h)(m', h') = (m + h·m' + f(h, h'), hh')`.
pub fn build_extension(module: &FlModule, cocycle: &[u32]) -> Result<ExtensionData> {
    build_extension_capped(module, cocycle, DEFAULT_GROUP_SIZE_CAP)
}

pub fn build_extension_capped(module: &FlModule, cocycle: &[u32], cap: usize) -> Result<ExtensionData> {
    let h = module.group().clone();
    let (n, d, l) = (h.order(), module.dim(), module.l());
    if cocycle.len() != n.saturating_sub(1).pow(2) * d {
        return Err(Error::Shape("cochain length does not match the module".into()));
    }
    if !is_two_cocycle(module, cocycle) {
        return Err(Error::NotACocycle);
    }
    if (l as u128).saturating_pow(d as u32).saturating_mul(n as u128) > cap as u128 {
        return Err(Error::SizeLimit { cap });
    }
    let mul = |x: &(usize, usize), y: &(usize, usize)| {
        let mut m = decode(x.0, l, d);
        vadd(&mut m, &module.act(x.1, &decode(y.0, l, d)), l);
        vadd(&mut m, &value2(cocycle, x.1, y.1, n, d), l);
        (encode(&m, l), h.mul(x.1, y.1))
    };
    let mut gens: Vec<(usize, usize)> = (0..d)
        .map(|i| {
            let mut e = vec![0u32; d];
            e[i] = 1;
            (encode(&e, l), 0)
        })
        .collect();
    gens.extend(h.generators().iter().map(|&x| (0, x)));
    let (total, elements) = FiniteGroup::from_closure((0usize, 0usize), &gens, mul, cap)?;
    let total = Arc::new(total);
    let images: Vec<usize> = elements.iter().map(|e| e.1).collect();
    let projection = GroupHom::new(&total, &h, images)?;
    let kernel = projection.kernel();
    let basis: Vec<usize> = (0..d).map(|i| total.generators()[i]).collect();
    let kernel = ElementaryAbelian::with_basis(&kernel, l, &basis)?;
    ExtensionData::with_kernel(projection, kernel)
}

pub fn build_extension_from_class(class: &CohomologyClass) -> Result<ExtensionData> {
    build_extension(class.space().module(), class.representative())
}

pub fn semidirect(module: &FlModule) -> Result<ExtensionData> {
    let n = module.group().order();
    build_extension(module, &vec![0; n.saturating_sub(1).pow(2) * module.dim()])
}

/// All homomorphic sections `s: H → G` of the projection.
pub fn enumerate_sections(e: &ExtensionData) -> Result<Vec<GroupHom>> {
    enumerate_sections_budgeted(e, DEFAULT_SECTION_BUDGET)
}

/// Candidates are kernel translates of the canonical lifts of a minimal
/// generating tuple of `H`. A candidate is kept when every edge of the
/// Cayley graph for that tuple is respected, which makes it a
/// homomorphism; kept candidates are revalidated on the full table.
pub fn enumerate_sections_budgeted(e: &ExtensionData, budget: u128) -> Result<Vec<GroupHom>> {
    let h = e.quotient().clone();
    let g = e.total().clone();
    let witness = min_generators(&h)?.witness;
    let kernel: Vec<usize> = e.kernel().members().to_vec();
    let k = witness.len();
    let needed = (kernel.len() as u128).saturating_pow(k as u32);
    if needed > budget {
        return Err(Error::EnumerationBudget { needed, budget });
    }
    let tree = CayleyTree::new(&h, &witness);
    let lifts: Vec<usize> = witness.iter().map(|&x| e.section[x]).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; k];
    'outer: loop {
        let images: Vec<usize> = (0..k).map(|i| g.mul(kernel[choice[i]], lifts[i])).collect();
        let mut map = vec![0usize; h.order()];
        for &x in &tree.order[1..] {
            let (y, i) = tree.parent[x];
            map[x] = g.mul(map[y], images[i]);
        }
        let consistent = h
            .elements()
            .all(|x| witness.iter().enumerate().all(|(i, &w)| map[h.mul(x, w)] == g.mul(map[x], images[i])));
        if consistent {
            out.push(GroupHom::new(&h, &g, map)?);
        }
        // next tuple, last coordinate fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                break 'outer;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < kernel.len() {
                break;
            }
            choice[pos] = 0;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionCountReport {
    pub fixed_points: u128,
    pub sections: u128,
    pub h1_order: u128,
    pub kernel_order: u128,
    pub holds: bool,
}

/// `|A^H| · |S| = |H^1(H, A)| · |A|` for a split extension.
pub fn section_count_identity_check(e: &ExtensionData) -> Result<SectionCountReport> {
    let sections = enumerate_sections(e)?;
    section_count_identity_from(e, sections.len(), &h1_space(&e.induced_module))
}

pub fn section_count_identity_from(e: &ExtensionData, sections: usize, h1: &CochainSpace) -> Result<SectionCountReport> {
    if sections == 0 {
        return Err(Error::NonSplitExtension);
    }
    let m = &e.induced_module;
    let l = m.l() as u128;
    let fixed_points = l.pow(h0(m) as u32);
    let h1_order = l.pow(h1.dim() as u32);
    let kernel_order = e.kernel().order() as u128;
    let sections = sections as u128;
    Ok(SectionCountReport {
        fixed_points,
        sections,
        h1_order,
        kernel_order,
        holds: fixed_points * sections == h1_order * kernel_order,
    })
}

/// Pushes `E` (kernel `B`) along an equivariant `u: B → A`, realised as
/// `(A ⋊ G) / {(−u(b), b)}`.
pub fn pushout_extension(e: &ExtensionData, target: &FlModule, u: &FlMatrix) -> Result<ExtensionData> {
    let b_mod = &e.induced_module;
    if !same_group(target.group(), b_mod.group()) || target.l() != b_mod.l() {
        return Err(Error::GroupMismatch);
    }
    if u.rows() != target.dim() || u.cols() != b_mod.dim() {
        return Err(Error::Shape("u must be dim A x dim B".into()));
    }
    if !b_mod.is_equivariant(target, u) {
        return Err(Error::NotEquivariant);
    }
    let g = e.total().clone();
    let h = e.quotient().clone();
    let q = e.projection().clone();
    let (l, d) = (target.l(), target.dim());
    let section = e.section.clone();
    let basis = e.kernel_basis().clone();
    // (a, g) ↦ (a − q(g)·u(g^{-1} s(q(g))), s(q(g))), stored as (a, q(g))
    let normalize = |a: Vec<u32>, x: usize| -> (usize, usize) {
        let hx = q.apply(x);
        let b = g.mul(g.inv(x), section[hx]);
        let ub = u.apply(basis.to_vector(b).expect("kernel element")).unwrap();
        let mut a = a;
        vsub(&mut a, &target.act(hx, &ub), l);
        (encode(&a, l), hx)
    };
    let mul = |x: &(usize, usize), y: &(usize, usize)| {
        let mut a = decode(x.0, l, d);
        vadd(&mut a, &target.act(x.1, &decode(y.0, l, d)), l);
        normalize(a, g.mul(section[x.1], section[y.1]))
    };
    let mut gens: Vec<(usize, usize)> = (0..d)
        .map(|i| {
            let mut v = vec![0u32; d];
            v[i] = 1;
            (encode(&v, l), 0)
        })
        .collect();
    gens.extend(h.generators().iter().map(|&x| (0, x)));
    let (total, elements) = FiniteGroup::from_closure((0usize, 0usize), &gens, mul, DEFAULT_GROUP_SIZE_CAP)?;
    let total = Arc::new(total);
    let images: Vec<usize> = elements.iter().map(|x| x.1).collect();
    let projection = GroupHom::new(&total, &h, images)?;
    let kernel = projection.kernel();
    let kbasis: Vec<usize> = (0..d).map(|i| total.generators()[i]).collect();
    let kernel = ElementaryAbelian::with_basis(&kernel, l, &kbasis)?;
    ExtensionData::with_kernel(projection, kernel)
}

/// Class of `(a, b) ↦ u(γ(a, b))` in `target_space`.
pub fn cup_h0_h2(u: &FlMatrix, gamma: &CohomologyClass, target_space: &Arc<CochainSpace>) -> Result<CohomologyClass> {
    let source = gamma.space().module();
    let target = target_space.module();
    if target_space.degree() != 2 || gamma.space().degree() != 2 {
        return Err(Error::Shape("cup product pairs H^0 with H^2".into()));
    }
    if !same_group(source.group(), target.group()) || source.l() != target.l() {
        return Err(Error::GroupMismatch);
    }
    if u.rows() != target.dim() || u.cols() != source.dim() {
        return Err(Error::Shape("u must be dim A x dim B".into()));
    }
    if !source.is_equivariant(target, u) {
        return Err(Error::NotEquivariant);
    }
    let n = source.group().order();
    let (db, da) = (source.dim(), target.dim());
    let rep = gamma.representative();
    let mut out = vec![0u32; n.saturating_sub(1).pow(2) * da];
    for a in 1..n {
        for b in 1..n {
            let v = u.apply(&value2(rep, a, b, n, db)).unwrap();
            let i = idx2(a, b, n, da);
            out[i..i + da].copy_from_slice(&v);
        }
    }
    target_space.class_of(&out)
}

/// The transgression slot evaluated on `u`, with the sign pinned by
/// [`TRANSGRESSION_SIGN`].
pub fn transgression(u: &FlMatrix, gamma: &CohomologyClass, target_space: &Arc<CochainSpace>) -> Result<CohomologyClass> {
    Ok(cup_h0_h2(u, gamma, target_space)?.scaled(TRANSGRESSION_SIGN))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_isomorphic;

    fn cyclic(n: usize) -> Arc<FiniteGroup> {
        let g: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Arc::new(FiniteGroup::from_permutations(n, &[g]).unwrap())
    }

    fn v4() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]]).unwrap())
    }

    fn sign(l: u32) -> FlModule {
        FlModule::from_generator_action(&cyclic(2), l, &[FlMatrix::from_rows(l, &[vec![-1]]).unwrap()]).unwrap()
    }

    fn trivial(h: &Arc<FiniteGroup>, l: u32, d: usize) -> FlModule {
        FlModule::trivial(h, l, d).unwrap()
    }

    #[test]
    fn h1_examples() {
        assert_eq!(h1(&trivial(&cyclic(3), 2, 1)).0, 0);
        assert_eq!(h1(&trivial(&cyclic(2), 2, 1)).0, 1);
        assert_eq!(h1(&trivial(&cyclic(2), 2, 2)).0, 2);
        assert_eq!(h1(&sign(3)).0, 0);
        assert_eq!(h1(&trivial(&v4(), 2, 1)).0, 2);
    }

    #[test]
    fn h2_examples() {
        assert_eq!(h2(&trivial(&cyclic(3), 2, 1)).0, 0);
        assert_eq!(h2(&trivial(&cyclic(2), 2, 1)).0, 1);
        assert_eq!(h2(&trivial(&v4(), 2, 1)).0, 3);
        assert_eq!(h2(&trivial(&Arc::new(FiniteGroup::trivial()), 5, 2)).0, 0);
    }

    #[test]
    fn h0_matches_fixed_subspace() {
        for m in [sign(3), sign(2), trivial(&v4(), 3, 2)] {
            assert_eq!(h0(&m), m.fixed_subspace().dim());
        }
    }

    #[test]
    fn cyclic_four_is_a_nonsplit_extension() {
        let c4 = cyclic(4);
        let sq = Subgroup::from_members(&c4, &[0, 2]).unwrap();
        let (_, proj) = crate::group::quotient(&c4, &sq).unwrap();
        let e = ExtensionData::new(proj, 2).unwrap();
        let class = extension_class(&e).unwrap();
        assert!(!class.is_zero());
        assert!(enumerate_sections(&e).unwrap().is_empty());
        assert_eq!(section_count_identity_check(&e).err(), Some(Error::NonSplitExtension));
        let built = build_extension_from_class(&class).unwrap();
        assert_eq!(built.total().order(), 4);
        assert!(is_isomorphic(built.total(), &c4).unwrap());
    }

    #[test]
    fn semidirect_examples() {
        let e = semidirect(&trivial(&cyclic(2), 2, 1)).unwrap();
        assert_eq!(e.total().order(), 4);
        assert!(extension_class(&e).unwrap().is_zero());
        assert_eq!(enumerate_sections(&e).unwrap().len(), 2);
        let r = section_count_identity_check(&e).unwrap();
        assert_eq!((r.fixed_points, r.sections, r.h1_order, r.kernel_order), (2, 2, 2, 2));

        let e = semidirect(&sign(3)).unwrap();
        assert_eq!(e.total().order(), 6);
        assert!(!e.total().is_abelian());
        assert_eq!(enumerate_sections(&e).unwrap().len(), 3);
        let r = section_count_identity_check(&e).unwrap();
        assert_eq!((r.fixed_points, r.sections, r.h1_order, r.kernel_order), (1, 3, 1, 3));

        let zero = trivial(&cyclic(3), 2, 0);
        let e = semidirect(&zero).unwrap();
        assert_eq!(e.total().order(), 3);
        let r = section_count_identity_check(&e).unwrap();
        assert_eq!((r.fixed_points, r.sections, r.h1_order, r.kernel_order), (1, 1, 1, 1));
    }

    #[test]
    fn build_extension_rejects_non_cocycles() {
        let m = trivial(&cyclic(3), 2, 1);
        let mut f = vec![0u32; 4];
        f[0] = 1;
        assert_eq!(build_extension(&m, &f).err(), Some(Error::NotACocycle));
    }

    #[test]
    fn roundtrip_and_pushout() {
        let m = trivial(&cyclic(2), 2, 1);
        let space = Arc::new(h2_space(&m));
        let gamma = space.basis_classes().remove(0);
        let e = build_extension_from_class(&gamma).unwrap();
        assert_eq!(extension_class_in(&e, &space).unwrap(), gamma);

        let id = FlMatrix::identity(2, 1);
        let p = pushout_extension(&e, &m, &id).unwrap();
        let pc = extension_class_in(&p, &space).unwrap();
        assert_eq!(pc, gamma);
        assert_eq!(cup_h0_h2(&id, &gamma, &space).unwrap(), pc);
        let zero = FlMatrix::zeros(2, 1, 1);
        let p0 = pushout_extension(&e, &m, &zero).unwrap();
        assert!(extension_class_in(&p0, &space).unwrap().is_zero());
        assert!(cup_h0_h2(&zero, &gamma, &space).unwrap().is_zero());
        // over F_2 the sign is invisible; over F_3 it is not
        let t = transgression(&id, &gamma, &space).unwrap();
        assert_eq!(t, pc.scaled(-1));
    }

    #[test]
    fn pushout_rejects_non_equivariant_maps() {
        let m = FlModule::from_generator_action(
            &cyclic(2),
            2,
            &[FlMatrix::from_rows(2, &[vec![0, 1], vec![1, 0]]).unwrap()],
        )
        .unwrap();
        let e = semidirect(&m).unwrap();
        let t = trivial(&cyclic(2), 2, 1);
        let u = FlMatrix::from_rows(2, &[vec![1, 0]]).unwrap();
        assert_eq!(pushout_extension(&e, &t, &u).err(), Some(Error::NotEquivariant));
    }
}
