//! The eight acceptance criteria over the built-in catalog, one line each.
//! Every comparison is exact (integers and field elements), so there are
//! no tolerances beyond the catalog bounds below.

use covquot::catalog::{EXTENSION_ORDER_LIMIT, SECTION_CANDIDATE_LIMIT};
use covquot::verify::{self, CriterionOutcome};

fn report(o: CriterionOutcome) {
    println!(
        "criterion {} {}: {} ({} checked, {} failed)",
        o.id,
        o.name,
        if o.passed { "PASS" } else { "FAIL" },
        o.checked,
        o.failed
    );
    for f in &o.failures {
        println!("    {f}");
    }
    assert!(o.passed, "criterion {} {} failed", o.id, o.name);
}

#[test]
fn catalog_bounds_are_pinned() {
    assert_eq!(SECTION_CANDIDATE_LIMIT, 1_000_000);
    assert_eq!(EXTENSION_ORDER_LIMIT, 2000);
    let c = verify::census();
    println!("catalog: {} groups, {} modules ({} layers), {} extensions", c.groups, c.modules, c.layer_modules, c.extensions);
    assert_eq!(c.groups, 75);
}

#[test]
fn criterion_1_section_count_identity() {
    report(verify::section_count_identity());
}

#[test]
fn criterion_2_generator_criterion() {
    report(verify::generator_criterion());
}

#[test]
fn criterion_3_split_iff_zero_class() {
    report(verify::split_iff_zero_class());
}

#[test]
fn criterion_4_pushout_shadow() {
    report(verify::pushout_shadow());
}

#[test]
fn criterion_5_euler_characteristic_agreement() {
    report(verify::euler_characteristic_agreement());
}

#[test]
fn criterion_6_coprime_vanishing() {
    report(verify::coprime_vanishing());
}

#[test]
fn criterion_7_tower_end_to_end() {
    report(verify::tower_end_to_end());
}

#[test]
fn criterion_8_oracle_equivalence() {
    report(verify::oracle_equivalence());
}
