use std::collections::BTreeMap;

use covquot::catalog::{self, ModuleOrigin};
use covquot::cohomology::{h1_space, h2_space};
use covquot::group::{is_isomorphic, is_solvable};

// Number of isomorphism classes of groups of each order up to 24.
const GROUP_COUNTS: [usize; 24] = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15];

#[test]
fn census_of_small_groups() {
    let mut by_order: BTreeMap<usize, usize> = BTreeMap::new();
    for g in catalog::groups() {
        *by_order.entry(g.order()).or_default() += 1;
    }
    for (i, &count) in GROUP_COUNTS.iter().enumerate() {
        assert_eq!(by_order.get(&(i + 1)).copied().unwrap_or(0), count, "order {}", i + 1);
    }
    assert_eq!(by_order.get(&60), Some(&1));
    let a5 = catalog::catalog_group("A5").unwrap();
    assert!(!is_solvable(&a5.group));
    assert!(catalog::groups().iter().filter(|g| g.order() <= 24).all(|g| is_solvable(&g.group)));
}

#[test]
fn catalog_groups_are_pairwise_non_isomorphic() {
    let groups = catalog::groups();
    for (i, a) in groups.iter().enumerate() {
        for b in &groups[i + 1..] {
            if a.order() == b.order() {
                assert!(!is_isomorphic(&a.group, &b.group).unwrap(), "{} ≅ {}", a.name, b.name);
            }
        }
    }
}

#[test]
fn names_are_unique() {
    let mut names: Vec<&str> = catalog::groups().iter().map(|g| g.name.as_str()).collect();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), catalog::groups().len());
    let mut names: Vec<&str> = catalog::modules().iter().map(|m| m.name.as_str()).collect();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), catalog::modules().len());
}

fn explicit(name: &str) -> &'static catalog::CatalogModule {
    catalog::modules()
        .iter()
        .find(|m| m.origin == ModuleOrigin::Explicit && m.name == name)
        .unwrap_or_else(|| panic!("no module {name}"))
}

#[test]
fn explicit_irreducibles() {
    // the deleted permutation modules of A5 and D10 over F2, and the
    // irreducible pieces of F2[C3], F2[C5], F2[C7]
    for name in ["A5/F2^4", "D10/F2^4", "C3/F2^2", "C5/F2^4", "C7/F2^3", "S3/F2^2", "A4/F2^2"] {
        assert!(explicit(name).module.is_irreducible().unwrap(), "{name}");
    }
    assert!(!explicit("C2/F2-regular").module.is_irreducible().unwrap());
}

#[test]
fn explicit_cohomology_values() {
    // H^*(C2, F2[C2]) is concentrated in degree 0
    let m = &explicit("C2/F2-regular").module;
    assert_eq!((h1_space(m).dim(), h2_space(m).dim()), (0, 0));
    // the S3 permutation module over F3 is induced from the trivial module
    // of C2, so it has the cohomology of C2 with F3 coefficients
    let m = &explicit("S3/F3-permutation").module;
    assert_eq!((h1_space(m).dim(), h2_space(m).dim()), (0, 0));
    // the natural module of SL(2,3) over F3 has no fixed vectors
    let m = &explicit("SL(2,3)/F3^2").module;
    assert_eq!(m.fixed_subspace().dim(), 0);
}

#[test]
fn trivial_modules_cover_every_group_and_prime() {
    let count = catalog::modules().iter().filter(|m| m.origin == ModuleOrigin::Trivial).count();
    assert_eq!(count, catalog::groups().len() * catalog::CATALOG_PRIMES.len());
}

#[test]
fn extensions_respect_the_bounds() {
    for e in catalog::extensions() {
        let total = e.extension.total().order() as u128;
        assert!(total <= catalog::EXTENSION_ORDER_LIMIT || e.kind == catalog::ExtensionKind::TowerStep);
        assert_eq!(e.extension.induced_module(), &e.module().module, "{}", e.name);
    }
}
