//! The property suite over the built-in catalog. Each criterion returns an
//! outcome with the number of cases checked and the first failures.

use std::sync::Arc;

use num_rational::Rational64;
use serde::Serialize;

use crate::catalog::{self, CatalogModule, ModuleOrigin, EXTENSION_ORDER_LIMIT};
use crate::cohomology::{
    cup_h0_h2, extension_class_in, h1_space, h2_space, pushout_extension, section_count_identity_from, semidirect,
    transgression, CochainSpace, TRANSGRESSION_SIGN,
};
use crate::devissage::verify_tower;
use crate::error::Result;
use crate::gos::{h1_affine_from_gos, swan, RamificationFiltration};
use crate::group::{is_solvable, min_generators, FiniteGroup};
use crate::linalg::FlMatrix;
use crate::module::FlModule;
use crate::oracle::naive_min_generators;
use crate::realizability::{
    generator_criterion_compare, h1_curve_dim, realizability_check_scoped, CurveSignature, Scope, TowerPlan,
};

/// Characteristics used on the signature grid.
pub const GRID_CHARACTERISTICS: [u64; 3] = [0, 5, 7];
pub const GRID_GENUS: std::ops::RangeInclusive<u64> = 0..=2;
pub const GRID_PUNCTURES: std::ops::RangeInclusive<u64> = 1..=3;
/// Groups compared against the naive generator search.
pub const ORACLE_ORDER_LIMIT: usize = 24;
/// Failures kept per criterion; the count covers all of them.
pub const REPORTED_FAILURES: usize = 20;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

struct Tally {
    checked: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally {
            checked: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < REPORTED_FAILURES {
            self.failures.push(msg);
        }
    }

    /// Runs a fallible case; an error is a failure.
    fn case(&mut self, label: impl Fn() -> String, f: impl FnOnce(&mut Tally) -> Result<()>) {
        if let Err(e) = f(self) {
            self.checked += 1;
            self.fail(format!("{}: {e}", label()));
        }
    }

    fn finish(self, id: u8, name: &'static str) -> CriterionOutcome {
        CriterionOutcome {
            id,
            name,
            passed: self.failed == 0 && self.checked > 0,
            checked: self.checked,
            failed: self.failed,
            failures: self.failures,
        }
    }
}

fn signatures(p: u64) -> impl Iterator<Item = CurveSignature> {
    GRID_GENUS.flat_map(move |g| GRID_PUNCTURES.map(move |r| CurveSignature { g, r, p }))
}

fn coprime(n: usize, p: u64) -> bool {
    p == 0 || !(n as u64).is_multiple_of(p)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `|A^H|·|S| = |H^1(H, A)|·|A|` on every split catalog extension.
pub fn section_count_identity() -> CriterionOutcome {
    let mut t = Tally::new();
    for ce in catalog::extensions() {
        t.case(
            || ce.name.clone(),
            |t| {
                let count = ce.section_count()?;
                if count == 0 {
                    return Ok(());
                }
                let r = section_count_identity_from(&ce.extension, count, ce.module().h1())?;
                t.check(r.holds, || format!("{}: {r:?}", ce.name));
                Ok(())
            },
        );
    }
    t.finish(1, "section-count identity")
}

/// For an irreducible `A` and `N ∈ {n_H, n_H+1, n_H+2}`:
/// `h1 < (N−1)·dim A + dim A^H` iff `n_{A⋊H} ≤ N`, and an excess is by one.
pub fn generator_criterion() -> CriterionOutcome {
    let mut t = Tally::new();
    for cm in catalog::modules() {
        let m = &cm.module;
        if m.cardinality().saturating_mul(m.group().order() as u128) > EXTENSION_ORDER_LIMIT {
            continue;
        }
        t.case(
            || cm.name.clone(),
            |t| {
                if !m.is_irreducible()? {
                    return Ok(());
                }
                let n_h = min_generators(m.group())?.count;
                let n_g = min_generators(semidirect(m)?.total())?.count;
                let h1 = cm.h1().dim();
                let fixed = cm.module.fixed_subspace().dim();
                for bound in n_h..=n_h + 2 {
                    let r = generator_criterion_compare(n_h, n_g, h1, m.dim(), fixed, bound);
                    t.check(r.agree && r.excess_is_one, || format!("{} N={bound}: {r:?}", cm.name));
                }
                Ok(())
            },
        );
    }
    t.finish(2, "generator criterion")
}

/// The class of an extension vanishes iff it has a section.
pub fn split_iff_zero_class() -> CriterionOutcome {
    let mut t = Tally::new();
    for ce in catalog::extensions() {
        t.case(
            || ce.name.clone(),
            |t| {
                let class = extension_class_in(&ce.extension, ce.module().h2())?;
                let count = ce.section_count()?;
                t.check(class.is_zero() == (count > 0), || {
                    format!("{}: class {:?}, {count} sections", ce.name, class.coordinates())
                });
                Ok(())
            },
        );
    }
    t.finish(3, "split iff zero class")
}

/// Targets for pushouts of an extension of `h` with kernel over `F_l`.
fn pushout_targets(source: &CatalogModule) -> Vec<(String, FlModule, Arc<CochainSpace>)> {
    let group = source.module.group();
    let l = source.module.l();
    let fits = |m: &FlModule| m.cardinality().saturating_mul(group.order() as u128) <= EXTENSION_ORDER_LIMIT;
    let mut out: Vec<(String, FlModule, Arc<CochainSpace>)> = catalog::modules()
        .iter()
        .filter(|m| m.module.l() == l && crate::group::same_group(m.module.group(), group) && fits(&m.module))
        .map(|m| (m.name.clone(), m.module.clone(), m.h2().clone()))
        .collect();
    if !out.iter().any(|(_, m, _)| m.dim() == 1 && m.is_trivial_action()) {
        let m = FlModule::trivial(group, l, 1).expect("trivial module");
        let space = Arc::new(h2_space(&m));
        out.push(("trivial".into(), m, space));
    }
    out
}

fn sample_maps(homs: &[FlMatrix], rows: usize, cols: usize, l: u32) -> Vec<(String, FlMatrix)> {
    let mut out = vec![("zero".to_string(), FlMatrix::zeros(l, rows, cols))];
    for (i, u) in homs.iter().enumerate() {
        out.push((format!("basis{i}"), u.clone()));
    }
    if homs.len() > 1 {
        let mut sum = FlMatrix::zeros(l, rows, cols);
        for u in homs {
            sum = sum.add(u).expect("same shape");
        }
        out.push(("sum".into(), sum));
    }
    out
}

/// `u_*[E] = u ∘ [E]` for the pushout along every sampled equivariant `u`,
/// and the transgression with the pinned sign cancels the pushout class.
pub fn pushout_shadow() -> CriterionOutcome {
    let mut t = Tally::new();
    for ce in catalog::extensions() {
        let source = ce.module();
        t.case(
            || ce.name.clone(),
            |t| {
                let gamma = extension_class_in(&ce.extension, source.h2())?;
                for (target_name, target, space) in pushout_targets(source) {
                    let homs = source.module.equivariant_homs(&target)?;
                    for (label, u) in sample_maps(&homs, target.dim(), source.module.dim(), target.l()) {
                        let what = || format!("{} -> {target_name} ({label})", ce.name);
                        let pushed = pushout_extension(&ce.extension, &target, &u)?;
                        let class = extension_class_in(&pushed, &space)?;
                        let cup = cup_h0_h2(&u, &gamma, &space)?;
                        t.check(cup == class, || format!("{}: cup {:?} vs pushout {:?}", what(), cup.coordinates(), class.coordinates()));
                        let trans = transgression(&u, &gamma, &space)?;
                        let l = target.l();
                        let cancels = trans
                            .coordinates()
                            .iter()
                            .zip(class.coordinates())
                            .all(|(a, b)| (a + b) % l == 0);
                        t.check(cancels, || format!("{}: sign {TRANSGRESSION_SIGN} does not cancel", what()));
                    }
                }
                Ok(())
            },
        );
    }
    t.finish(4, "pushout shadow")
}

/// The Euler characteristic route to `h^1(X, A)` agrees with the closed
/// formula on every prime-to-p signature, and tame filtrations have swan 0.
pub fn euler_characteristic_agreement() -> CriterionOutcome {
    let mut t = Tally::new();
    for cm in catalog::modules() {
        let m = &cm.module;
        t.check(swan(&RamificationFiltration::tame(m)) == Rational64::from_integer(0), || {
            format!("{}: tame swan is nonzero", cm.name)
        });
        for p in GRID_CHARACTERISTICS {
            if !coprime(m.group().order(), p) || m.l() as u64 == p {
                continue;
            }
            for sig in signatures(p) {
                let via_euler = h1_affine_from_gos(&sig, m);
                let closed = h1_curve_dim(&sig, m);
                t.check(via_euler == closed, || {
                    format!("{} at {sig:?}: {via_euler:?} vs {closed:?}", cm.name)
                });
            }
        }
    }
    t.finish(5, "euler characteristic agreement")
}

/// `h1 = h2 = 0` when `l` does not divide `|H|`.
pub fn coprime_vanishing() -> CriterionOutcome {
    let mut t = Tally::new();
    for cm in catalog::modules() {
        let n = cm.module.group().order() as u64;
        if gcd(n, cm.module.l() as u64) != 1 {
            continue;
        }
        let (h1, h2) = (cm.h1().dim(), cm.h2().dim());
        t.check(h1 == 0 && h2 == 0, || format!("{}: h1 = {h1}, h2 = {h2}", cm.name));
    }
    t.finish(6, "coprime vanishing")
}

/// The tower verdict matches `n_G ≤ 2g + r − 1` for every solvable
/// prime-to-p catalog group and signature, towers pass their own checks,
/// and only the trivial group is a quotient for the affine line.
pub fn tower_end_to_end() -> CriterionOutcome {
    let mut t = Tally::new();
    for cg in catalog::groups() {
        let g = &cg.group;
        let solvable = is_solvable(g);
        for p in GRID_CHARACTERISTICS {
            if !coprime(g.order(), p) {
                continue;
            }
            let scope = Scope {
                override_nonsolvable: true,
                ..Scope::default()
            };
            t.case(
                || format!("{} p={p}", cg.name),
                |t| {
                    let line = realizability_check_scoped(&CurveSignature::new(0, 1, p)?, g, scope)?;
                    t.check(line.realizable == g.is_trivial(), || {
                        format!("{} p={p}: affine line gives {}", cg.name, line.realizable)
                    });
                    if !solvable {
                        return Ok(());
                    }
                    let plan = TowerPlan::new(g, p)?;
                    let report = verify_tower(&plan.tower);
                    t.check(report.passed, || format!("{} p={p}: tower checks {:?}", cg.name, report.failures()));
                    let n_g = cg.min_generators();
                    for sig in signatures(p) {
                        let cert = plan.certificate(&sig)?;
                        let direct = n_g as u64 <= sig.bound();
                        t.check(cert.verdict == direct && cert.verdict_matches_decision, || {
                            format!("{} at {sig:?}: verdict {} but n_G = {n_g}", cg.name, cert.verdict)
                        });
                    }
                    Ok(())
                },
            );
        }
    }
    t.finish(7, "tower end to end")
}

/// Unitriangular factors give an invertible matrix for every size and `l`.
fn scrambled_basis(l: u32, d: usize) -> FlMatrix {
    let mut lower = FlMatrix::identity(l, d);
    let mut upper = FlMatrix::identity(l, d);
    for i in 0..d {
        for j in 0..i {
            lower.set(i, j, ((3 * i + 5 * j + 1) as u32) % l);
            upper.set(j, i, ((7 * i + 2 * j + 1) as u32) % l);
        }
    }
    lower.mul(&upper).expect("square")
}

/// A different generating list: reversed, with the inverse of the first
/// generator appended.
fn reordered(g: &FiniteGroup) -> Vec<usize> {
    let mut gens: Vec<usize> = g.generators().iter().rev().copied().collect();
    if let Some(&first) = g.generators().first() {
        gens.push(g.inv(first));
    }
    gens
}

/// `min_generators` matches the naive search up to order 24, and `h1`/`h2`
/// do not depend on the generating list of `H` or the basis of `A`.
pub fn oracle_equivalence() -> CriterionOutcome {
    let mut t = Tally::new();
    for cg in catalog::groups().iter().filter(|g| g.order() <= ORACLE_ORDER_LIMIT) {
        let naive = naive_min_generators(cg.degree, &cg.permutations);
        let fast = cg.min_generators();
        t.check(naive == fast, || format!("{}: naive {naive}, search {fast}", cg.name));
    }
    for cm in catalog::modules() {
        let m = &cm.module;
        t.case(
            || cm.name.clone(),
            |t| {
                let dims = (cm.h1().dim(), cm.h2().dim());
                let (regen, new_to_old) = m.group().regenerate(&reordered(m.group()))?;
                let moved = m.transport(&Arc::new(regen), &new_to_old)?;
                let moved_dims = (h1_space(&moved).dim(), h2_space(&moved).dim());
                t.check(moved_dims == dims, || format!("{}: regenerated {moved_dims:?} vs {dims:?}", cm.name));
                if m.dim() > 1 {
                    let rebased = m.change_basis(&scrambled_basis(m.l(), m.dim()))?;
                    let rebased_dims = (h1_space(&rebased).dim(), h2_space(&rebased).dim());
                    t.check(rebased_dims == dims, || format!("{}: rebased {rebased_dims:?} vs {dims:?}", cm.name));
                }
                Ok(())
            },
        );
    }
    t.finish(8, "oracle equivalence")
}

pub type Criterion = fn() -> CriterionOutcome;

pub const CRITERIA: [(u8, &str, Criterion); 8] = [
    (1, "section-count identity", section_count_identity),
    (2, "generator criterion", generator_criterion),
    (3, "split iff zero class", split_iff_zero_class),
    (4, "pushout shadow", pushout_shadow),
    (5, "euler characteristic agreement", euler_characteristic_agreement),
    (6, "coprime vanishing", coprime_vanishing),
    (7, "tower end to end", tower_end_to_end),
    (8, "oracle equivalence", oracle_equivalence),
];

pub fn run_all() -> Vec<CriterionOutcome> {
    CRITERIA.iter().map(|(_, _, f)| f()).collect()
}

/// Catalog sizes, for reports.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogCensus {
    pub groups: usize,
    pub modules: usize,
    pub layer_modules: usize,
    pub extensions: usize,
}

pub fn census() -> CatalogCensus {
    CatalogCensus {
        groups: catalog::groups().len(),
        modules: catalog::modules().len(),
        layer_modules: catalog::modules().iter().filter(|m| m.origin == ModuleOrigin::Layer).count(),
        extensions: catalog::extensions().len(),
    }
}
