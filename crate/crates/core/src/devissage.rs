//! Towers of elementary abelian, irreducible layers for solvable normal
//! subgroups.
//!
//! Layers are peeled from the bottom: each step quotients the current group
//! by a minimal normal elementary abelian piece of the image of `A`, so the
//! next piece is again normal in the next quotient.

use std::sync::Arc;

use serde::Serialize;

use crate::cohomology::ExtensionData;
use crate::error::{Error, Result};
use crate::group::{quotient, same_group, sylow_decomposition, FiniteGroup, GroupHom, Subgroup};
use crate::module::{multiplication_by_l_submodule, ElementaryAbelian, FlModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionTag {
    SylowSplit,
    PowerFiltration,
    IrreducibleRefinement,
    DerivedSeries,
}

/// One layer `1 → A_i → G_i → G_{i+1} → 1`. Fields are public so a tower can
/// be edited by hand; [`verify_tower`] re-checks everything.
#[derive(Clone, Debug)]
pub struct DevissageStep {
    pub ambient: Arc<FiniteGroup>,
    pub kernel_layer: Subgroup,
    pub prime: u32,
    pub quotient: Arc<FiniteGroup>,
    pub projection: GroupHom,
    /// Action of `quotient` on the layer, in the layer's canonical basis.
    pub layer_module: FlModule,
    pub reduction_tag: ReductionTag,
}

impl DevissageStep {
    pub fn layer_order(&self) -> usize {
        self.kernel_layer.order()
    }

    pub fn dim(&self) -> usize {
        self.layer_module.dim()
    }

    /// The layer as an extension of the step quotient.
    pub fn extension(&self) -> Result<ExtensionData> {
        ExtensionData::new(self.projection.clone(), self.prime)
    }
}

#[derive(Clone, Debug)]
pub struct DevissageTower {
    pub target: Arc<FiniteGroup>,
    /// The normal subgroup being resolved.
    pub kernel: Subgroup,
    /// Characteristic excluded from layer orders; 0 for none.
    pub p: u64,
    pub steps: Vec<DevissageStep>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StepSummary {
    pub layer_order: usize,
    pub prime: u32,
    pub dim: usize,
    pub quotient_order: usize,
    pub reduction_tag: ReductionTag,
}

impl DevissageTower {
    pub fn summary(&self) -> Vec<StepSummary> {
        self.steps
            .iter()
            .map(|s| StepSummary {
                layer_order: s.layer_order(),
                prime: s.prime,
                dim: s.dim(),
                quotient_order: s.quotient.order(),
                reduction_tag: s.reduction_tag,
            })
            .collect()
    }

    pub fn layer_orders(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.layer_order()).collect()
    }
}

/// Current quotient of the original group and the map onto it.
struct Peeler {
    current: Arc<FiniteGroup>,
    to_current: GroupHom,
    steps: Vec<DevissageStep>,
}

impl Peeler {
    fn new(g: &Arc<FiniteGroup>) -> Peeler {
        Peeler {
            current: g.clone(),
            to_current: GroupHom::identity(g),
            steps: Vec::new(),
        }
    }

    fn image(&self, a: &Subgroup) -> Result<Subgroup> {
        a.image(&self.to_current)
    }

    fn peel(&mut self, layer: &Subgroup, l: u32, tag: ReductionTag) -> Result<()> {
        if !layer.is_normal() {
            return Err(Error::NotNormal);
        }
        let basis = ElementaryAbelian::new(layer)?;
        let (q, proj) = quotient(&self.current, layer)?;
        let ext = ExtensionData::with_kernel(proj.clone(), basis)?;
        self.steps.push(DevissageStep {
            ambient: self.current.clone(),
            kernel_layer: layer.clone(),
            prime: l,
            quotient: q.clone(),
            projection: proj.clone(),
            layer_module: ext.induced_module().clone(),
            reduction_tag: tag,
        });
        self.to_current = self.to_current.then(&proj)?;
        self.current = q;
        Ok(())
    }

    /// Peels the image of `a`, which must be abelian in the current group,
    /// down to the trivial subgroup.
    fn peel_abelian(&mut self, a: &Subgroup, derived: bool) -> Result<()> {
        loop {
            let image = self.image(a)?;
            if image.is_trivial() {
                return Ok(());
            }
            if !image.is_abelian() {
                return Err(Error::NotAbelian);
            }
            let sylows = sylow_decomposition(&image)?;
            let (l, sylow) = sylows[0].clone();
            // bottom of the power filtration P ⊇ P^l ⊇ ...
            let mut bottom = sylow.clone();
            loop {
                let next = multiplication_by_l_submodule(&bottom)?;
                if next.is_trivial() {
                    break;
                }
                bottom = next;
            }
            if !bottom.is_normal() {
                return Err(Error::NotNormal);
            }
            let coords = ElementaryAbelian::new(&bottom)?;
            let series = coords.conjugation_module()?.composition_series()?;
            let minimal = coords.subgroup_of(&series[0].submodule);
            let tag = if series.len() > 1 {
                ReductionTag::IrreducibleRefinement
            } else if bottom != sylow {
                ReductionTag::PowerFiltration
            } else if sylows.len() > 1 {
                ReductionTag::SylowSplit
            } else if derived {
                ReductionTag::DerivedSeries
            } else {
                ReductionTag::IrreducibleRefinement
            };
            self.peel(&minimal, l as u32, tag)?;
        }
    }
}

fn check_scope(g: &Arc<FiniteGroup>, a: &Subgroup, p: u64) -> Result<()> {
    if !same_group(a.parent(), g) {
        return Err(Error::GroupMismatch);
    }
    if !a.is_normal() {
        return Err(Error::NotNormal);
    }
    if p != 0 && (a.order() as u64).is_multiple_of(p) {
        return Err(Error::DivisibleByCharacteristic { order: a.order(), p });
    }
    Ok(())
}

/// Layers for an abelian normal subgroup: primes in increasing order, each
/// Sylow part through its power filtration, each elementary piece through
/// a composition series for the conjugation action.
pub fn devissage_abelian(g: &Arc<FiniteGroup>, a: &Subgroup, p: u64) -> Result<Vec<DevissageStep>> {
    check_scope(g, a, p)?;
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let mut peeler = Peeler::new(g);
    peeler.peel_abelian(a, false)?;
    Ok(peeler.steps)
}

/// Layers for a solvable normal subgroup, following its derived series from
/// the bottom and refining each abelian image as in [`devissage_abelian`].
pub fn devissage_solvable(g: &Arc<FiniteGroup>, a: &Subgroup, p: u64) -> Result<DevissageTower> {
    check_scope(g, a, p)?;
    if !a.is_solvable() {
        return Err(Error::NotSolvable);
    }
    let series = a.derived_series();
    let derived = !a.is_abelian();
    let mut peeler = Peeler::new(g);
    for term in series.iter().rev() {
        peeler.peel_abelian(term, derived)?;
    }
    Ok(DevissageTower {
        target: g.clone(),
        kernel: a.clone(),
        p,
        steps: peeler.steps,
    })
}

/// Tower of the whole group.
pub fn devissage_group(g: &Arc<FiniteGroup>, p: u64) -> Result<DevissageTower> {
    devissage_solvable(g, &Subgroup::whole(g), p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub step: Option<usize>,
    pub check: &'static str,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerReport {
    pub entries: Vec<CheckEntry>,
    pub passed: bool,
}

impl TowerReport {
    pub fn failures(&self) -> Vec<&CheckEntry> {
        self.entries.iter().filter(|e| !e.passed).collect()
    }
}

/// Re-derives every invariant of a tower from its raw data.
pub fn verify_tower(t: &DevissageTower) -> TowerReport {
    let mut entries = Vec::new();
    let mut record = |step: Option<usize>, check: &'static str, passed: bool| {
        entries.push(CheckEntry { step, check, passed });
    };
    record(None, "kernel-normal", same_group(t.kernel.parent(), &t.target) && t.kernel.is_normal());
    let mut composite = Some(GroupHom::identity(&t.target));
    let mut expected_ambient = t.target.clone();
    for (i, s) in t.steps.iter().enumerate() {
        let at = Some(i);
        record(at, "chained", same_group(&s.ambient, &expected_ambient));
        let in_ambient = same_group(s.kernel_layer.parent(), &s.ambient);
        record(at, "layer-in-ambient", in_ambient);
        record(at, "normal", in_ambient && s.kernel_layer.is_normal());
        let coords = ElementaryAbelian::new(&s.kernel_layer);
        let elementary = matches!(&coords, Ok(c) if c.l() == s.prime && !s.kernel_layer.is_trivial());
        record(at, "elementary-abelian", elementary);
        record(at, "prime-to-p", t.p == 0 || s.prime as u64 != t.p);
        let projection_ok = same_group(s.projection.source(), &s.ambient)
            && same_group(s.projection.target(), &s.quotient)
            && s.projection.is_surjective()
            && s.projection.kernel() == s.kernel_layer;
        record(at, "projection", projection_ok);
        let module_ok = projection_ok
            && elementary
            && ExtensionData::new(s.projection.clone(), s.prime)
                .map(|e| *e.induced_module() == s.layer_module)
                .unwrap_or(false);
        record(at, "layer-module", module_ok);
        record(at, "irreducible", s.layer_module.is_irreducible().unwrap_or(false));
        // the layer must come from the kernel being resolved
        let inside = match &composite {
            Some(c) if same_group(c.target(), &s.ambient) && in_ambient => t
                .kernel
                .image(c)
                .map(|img| s.kernel_layer.is_subgroup_of(&img))
                .unwrap_or(false),
            _ => false,
        };
        record(at, "layer-inside-kernel", inside);
        composite = composite.filter(|_| projection_ok).and_then(|c| c.then(&s.projection).ok());
        expected_ambient = s.quotient.clone();
    }
    let product: u128 = t.steps.iter().map(|s| s.layer_order() as u128).product();
    record(None, "order-product", product == t.kernel.order() as u128);
    let exhausted = composite
        .as_ref()
        .map(|c| c.kernel() == t.kernel)
        .unwrap_or(false);
    record(None, "kernel-exhausted", exhausted);
    let passed = entries.iter().all(|e| e.passed);
    TowerReport { entries, passed }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Arc<FiniteGroup> {
        let g: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Arc::new(FiniteGroup::from_permutations(n, &[g]).unwrap())
    }

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap())
    }

    #[test]
    fn abelian_examples() {
        let c3 = cyclic(3);
        let steps = devissage_abelian(&c3, &Subgroup::whole(&c3), 0).unwrap();
        assert_eq!(steps.len(), 1);
        let c6 = cyclic(6);
        let steps = devissage_abelian(&c6, &Subgroup::whole(&c6), 0).unwrap();
        assert_eq!(steps.iter().map(|s| s.prime).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(steps[0].reduction_tag, ReductionTag::SylowSplit);
        let c4 = cyclic(4);
        let steps = devissage_abelian(&c4, &Subgroup::whole(&c4), 0).unwrap();
        assert_eq!(steps.len(), 2);
        assert_eq!(steps[0].reduction_tag, ReductionTag::PowerFiltration);
        assert!(devissage_abelian(&c6, &Subgroup::whole(&c6), 3).is_err());
    }

    #[test]
    fn solvable_examples() {
        let g = s3();
        let t = devissage_group(&g, 0).unwrap();
        assert_eq!(t.layer_orders(), vec![3, 2]);
        assert!(verify_tower(&t).passed);
        let v4 = Arc::new(FiniteGroup::from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]]).unwrap());
        let t = devissage_group(&v4, 0).unwrap();
        assert_eq!(t.steps.iter().map(|s| s.dim()).collect::<Vec<_>>(), vec![1, 1]);
        let triv = Arc::new(FiniteGroup::trivial());
        let t = devissage_group(&triv, 0).unwrap();
        assert!(t.steps.is_empty());
        assert!(verify_tower(&t).passed);
    }

    #[test]
    fn corrupted_tower_fails() {
        let g = s3();
        let mut t = devissage_group(&g, 0).unwrap();
        // an order-2 subgroup of S3 is not normal
        let two = Subgroup::generated(&g, &[1]).unwrap();
        t.steps[0].kernel_layer = two;
        let report = verify_tower(&t);
        assert!(!report.passed);
        assert!(report.failures().iter().any(|e| e.check == "normal"));
    }
}
