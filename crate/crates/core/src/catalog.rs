//! Built-in groups, modules and extensions, loaded once from the shipped
//! data files and expanded with generated characters, trivial modules,
//! dévissage layers and extensions.

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::cohomology::{
    build_extension, enumerate_sections_budgeted, h1_space, h2_space, semidirect, CochainSpace, ExtensionData,
};
use crate::devissage::devissage_group;
use crate::group::{is_solvable, min_generators, FiniteGroup};
use crate::linalg::FlMatrix;
use crate::module::FlModule;

/// Coefficient primes used for generated modules.
pub const CATALOG_PRIMES: [u32; 3] = [2, 3, 5];
/// Characters are generated for groups up to this order.
pub const CHARACTER_ORDER_LIMIT: usize = 24;
/// Largest total group built for a catalog extension.
pub const EXTENSION_ORDER_LIMIT: u128 = 2000;
/// Largest `|A|^{n_H}` for a catalog extension, so sections can be listed.
pub const SECTION_CANDIDATE_LIMIT: u128 = 1_000_000;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupRecord {
    name: String,
    order: usize,
    degree: usize,
    generators: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleRecord {
    name: String,
    group: String,
    l: u32,
    generator_matrices: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug)]
pub struct CatalogGroup {
    pub name: String,
    pub degree: usize,
    /// Permutation generators as stored, 0-based images.
    pub permutations: Vec<Vec<usize>>,
    pub group: Arc<FiniteGroup>,
    n_gens: OnceLock<usize>,
}

impl CatalogGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn min_generators(&self) -> usize {
        *self
            .n_gens
            .get_or_init(|| min_generators(&self.group).expect("catalog groups are small").count)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleOrigin {
    Trivial,
    Character,
    Explicit,
    Layer,
}

#[derive(Debug)]
pub struct CatalogModule {
    pub name: String,
    /// The catalog group the module lives over; for layers, the group the
    /// tower was computed for.
    pub group_name: String,
    pub origin: ModuleOrigin,
    pub module: FlModule,
    h1: OnceLock<Arc<CochainSpace>>,
    h2: OnceLock<Arc<CochainSpace>>,
}

impl CatalogModule {
    fn new(name: String, group_name: &str, origin: ModuleOrigin, module: FlModule) -> CatalogModule {
        CatalogModule {
            name,
            group_name: group_name.to_string(),
            origin,
            module,
            h1: OnceLock::new(),
            h2: OnceLock::new(),
        }
    }

    pub fn h1(&self) -> &Arc<CochainSpace> {
        self.h1.get_or_init(|| Arc::new(h1_space(&self.module)))
    }

    pub fn h2(&self) -> &Arc<CochainSpace> {
        self.h2.get_or_init(|| Arc::new(h2_space(&self.module)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtensionKind {
    Semidirect,
    /// Built from a basis class of `H^2` or the sum of the basis classes.
    FromClass,
    TowerStep,
}

#[derive(Debug)]
pub struct CatalogExtension {
    pub name: String,
    pub kind: ExtensionKind,
    /// Index into [`modules`] of the induced module.
    pub module_index: usize,
    pub extension: ExtensionData,
    sections: OnceLock<crate::Result<usize>>,
}

impl CatalogExtension {
    fn new(name: String, kind: ExtensionKind, module_index: usize, extension: ExtensionData) -> CatalogExtension {
        CatalogExtension {
            name,
            kind,
            module_index,
            extension,
            sections: OnceLock::new(),
        }
    }

    pub fn module(&self) -> &'static CatalogModule {
        &modules()[self.module_index]
    }

    /// Number of homomorphic sections, enumerated once.
    pub fn section_count(&self) -> crate::Result<usize> {
        self.sections
            .get_or_init(|| enumerate_sections_budgeted(&self.extension, SECTION_CANDIDATE_LIMIT).map(|s| s.len()))
            .clone()
    }
}

static GROUPS: OnceLock<Vec<CatalogGroup>> = OnceLock::new();
static MODULES: OnceLock<Vec<CatalogModule>> = OnceLock::new();
static EXTENSIONS: OnceLock<Vec<CatalogExtension>> = OnceLock::new();

pub fn groups() -> &'static [CatalogGroup] {
    GROUPS.get_or_init(load_groups)
}

pub fn catalog_group(name: &str) -> Option<&'static CatalogGroup> {
    groups().iter().find(|g| g.name == name)
}

pub fn modules() -> &'static [CatalogModule] {
    MODULES.get_or_init(build_modules)
}

pub fn extensions() -> &'static [CatalogExtension] {
    EXTENSIONS.get_or_init(build_extensions)
}

fn load_groups() -> Vec<CatalogGroup> {
    let records: Vec<GroupRecord> =
        serde_json::from_str(include_str!("../data/groups.json")).expect("groups.json is well formed");
    records
        .into_iter()
        .map(|r| {
            let group = FiniteGroup::from_permutations(r.degree, &r.generators).expect("catalog group");
            assert_eq!(group.order(), r.order, "catalog order of {}", r.name);
            CatalogGroup {
                name: r.name,
                degree: r.degree,
                permutations: r.generators,
                group: Arc::new(group),
                n_gens: OnceLock::new(),
            }
        })
        .collect()
}

/// The explicit modules from the data file, checked against their group.
pub fn explicit_modules() -> Vec<(String, String, crate::Result<FlModule>)> {
    let records: Vec<ModuleRecord> =
        serde_json::from_str(include_str!("../data/modules.json")).expect("modules.json is well formed");
    records
        .into_iter()
        .map(|r| {
            let built = (|| {
                let g = catalog_group(&r.group)
                    .ok_or_else(|| crate::Error::Invalid(format!("unknown group {}", r.group)))?;
                let mats = r
                    .generator_matrices
                    .iter()
                    .map(|m| FlMatrix::from_rows(r.l, m))
                    .collect::<crate::Result<Vec<_>>>()?;
                FlModule::from_generator_action(&g.group, r.l, &mats)
            })();
            (r.name, r.group, built)
        })
        .collect()
}

/// One-dimensional modules with the generators acting by scalars, one per
/// distinct action on the whole group.
fn characters(g: &Arc<FiniteGroup>, l: u32) -> Vec<FlModule> {
    let k = g.generators().len();
    let units = (l - 1) as usize;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut choice = vec![0usize; k];
    loop {
        let mats: Vec<FlMatrix> = choice
            .iter()
            .map(|&c| FlMatrix::from_rows(l, &[vec![c as i64 + 1]]).unwrap())
            .collect();
        if choice.iter().any(|&c| c != 0) {
            if let Ok(m) = FlModule::from_generator_action(g, l, &mats) {
                let key: Vec<u32> = g.elements().map(|h| m.matrix(h).get(0, 0)).collect();
                if seen.insert(key) {
                    out.push(m);
                }
            }
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < units {
                break;
            }
            choice[pos] = 0;
        }
    }
}

fn build_modules() -> Vec<CatalogModule> {
    let mut out = Vec::new();
    for cg in groups() {
        for &l in &CATALOG_PRIMES {
            let m = FlModule::trivial(&cg.group, l, 1).unwrap();
            out.push(CatalogModule::new(format!("{}/F{l}-trivial", cg.name), &cg.name, ModuleOrigin::Trivial, m));
        }
    }
    for cg in groups().iter().filter(|g| g.order() <= CHARACTER_ORDER_LIMIT) {
        for &l in &CATALOG_PRIMES[1..] {
            for (i, m) in characters(&cg.group, l).into_iter().enumerate() {
                out.push(CatalogModule::new(format!("{}/F{l}-char{i}", cg.name), &cg.name, ModuleOrigin::Character, m));
            }
        }
    }
    for (name, group, built) in explicit_modules() {
        let m = built.unwrap_or_else(|e| panic!("explicit module {name}: {e}"));
        out.push(CatalogModule::new(name, &group, ModuleOrigin::Explicit, m));
    }
    for cg in groups() {
        if !is_solvable(&cg.group) {
            continue;
        }
        let tower = devissage_group(&cg.group, 0).expect("solvable catalog group");
        for (i, step) in tower.steps.iter().enumerate() {
            let e = step.extension().expect("tower layer");
            out.push(CatalogModule::new(
                format!("{}/layer{i}", cg.name),
                &cg.name,
                ModuleOrigin::Layer,
                e.induced_module().clone(),
            ));
        }
    }
    out
}

fn extension_fits(m: &FlModule, n_h: usize) -> bool {
    let size = m.cardinality();
    size.saturating_mul(m.group().order() as u128) <= EXTENSION_ORDER_LIMIT
        && size.saturating_pow(n_h as u32) <= SECTION_CANDIDATE_LIMIT
}

fn build_extensions() -> Vec<CatalogExtension> {
    let mods = modules();
    let mut out = Vec::new();
    for (index, cm) in mods.iter().enumerate() {
        if cm.origin == ModuleOrigin::Layer {
            continue;
        }
        let n_h = catalog_group(&cm.group_name).unwrap().min_generators();
        if !extension_fits(&cm.module, n_h) {
            continue;
        }
        out.push(CatalogExtension::new(
            format!("{} semidirect", cm.name),
            ExtensionKind::Semidirect,
            index,
            semidirect(&cm.module).expect("semidirect product"),
        ));
        let classes = cm.h2().basis_classes();
        let mut reps: Vec<(String, Vec<u32>)> = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("class{i}"), c.representative().to_vec()))
            .collect();
        if classes.len() > 1 {
            let mut sum = vec![0u32; cm.h2().cochain_len()];
            for c in &classes {
                crate::linalg::axpy(&mut sum, c.representative(), 1, cm.module.l());
            }
            reps.push(("class-sum".into(), sum));
        }
        for (label, rep) in reps {
            out.push(CatalogExtension::new(
                format!("{} {label}", cm.name),
                ExtensionKind::FromClass,
                index,
                build_extension(&cm.module, &rep).expect("extension from a cocycle"),
            ));
        }
    }
    let mut layer_index = 0;
    for cg in groups() {
        if !is_solvable(&cg.group) {
            continue;
        }
        let tower = devissage_group(&cg.group, 0).expect("solvable catalog group");
        for (i, step) in tower.steps.iter().enumerate() {
            let index = mods
                .iter()
                .enumerate()
                .filter(|(_, m)| m.origin == ModuleOrigin::Layer)
                .nth(layer_index)
                .map(|(j, _)| j)
                .unwrap();
            layer_index += 1;
            let e = step.extension().expect("tower layer");
            if (e.kernel().order() as u128).saturating_pow(min_generators(e.quotient()).unwrap().count as u32)
                > SECTION_CANDIDATE_LIMIT
            {
                continue;
            }
            out.push(CatalogExtension::new(format!("{} step{i}", cg.name), ExtensionKind::TowerStep, index, e));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_modules_are_representations() {
        let bad: Vec<String> = explicit_modules()
            .into_iter()
            .filter_map(|(name, _, r)| r.err().map(|e| format!("{name}: {e}")))
            .collect();
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn characters_of_small_groups() {
        let c4 = &catalog_group("C4").unwrap().group;
        assert_eq!(characters(c4, 5).len(), 3);
        assert_eq!(characters(c4, 3).len(), 1);
        let s3 = &catalog_group("S3").unwrap().group;
        assert_eq!(characters(s3, 3).len(), 1);
        assert_eq!(characters(s3, 5).len(), 1);
    }
}
