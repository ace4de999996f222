//! Realizability of finite groups as quotients of the fundamental group of
//! an affine curve, decided by generator counts and certified layer by
//! layer through a dévissage tower.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cohomology::{extension_class_in, h0, h1_space, h2_space, semidirect, ExtensionData};
use crate::devissage::{devissage_group, DevissageTower, ReductionTag};
use crate::error::{Error, Result};
use crate::group::{is_prime, is_solvable, min_generators_budgeted, FiniteGroup, DEFAULT_TUPLE_BUDGET};
use crate::module::FlModule;

/// A smooth projective curve of genus `g` with `r ≥ 1` points removed, over
/// an algebraically closed field of characteristic `p` (0 or prime).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSignature {
    pub g: u64,
    pub r: u64,
    pub p: u64,
}

impl CurveSignature {
    pub fn new(g: u64, r: u64, p: u64) -> Result<CurveSignature> {
        let sig = CurveSignature { g, r, p };
        sig.validate()?;
        Ok(sig)
    }

    pub fn validate(&self) -> Result<()> {
        if self.r == 0 {
            return Err(Error::Invalid("a signature needs r >= 1".into()));
        }
        if self.p != 0 && !is_prime(self.p) {
            return Err(Error::NotPrime(self.p));
        }
        Ok(())
    }

    /// `2g + r − 1`, the rank of the free group the quotients come from.
    pub fn bound(&self) -> u64 {
        2 * self.g + self.r - 1
    }

    /// `2g + r − 2 = −χ(X)`.
    pub fn neg_euler(&self) -> i64 {
        2 * self.g as i64 + self.r as i64 - 2
    }

    fn divides(&self, order: usize) -> bool {
        self.p != 0 && (order as u64).is_multiple_of(self.p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Justification {
    TrivialGroup,
    BoundCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizabilityDecision {
    pub realizable: bool,
    pub n_g: usize,
    pub bound: u64,
    pub justification: Justification,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

/// Options shared by the deciders.
#[derive(Clone, Copy, Debug)]
pub struct Scope {
    /// Accept non-solvable groups; the answer then rests on the
    /// transcendental theory rather than the algebraic proof.
    pub override_nonsolvable: bool,
    pub tuple_budget: u64,
}

impl Default for Scope {
    fn default() -> Self {
        Scope {
            override_nonsolvable: false,
            tuple_budget: DEFAULT_TUPLE_BUDGET,
        }
    }
}

const TRANSCENDENTAL_WARNING: &str =
    "non-solvable group: the decision relies on the transcendental description of the prime-to-p fundamental group";

pub fn realizability_check(sig: &CurveSignature, g: &FiniteGroup) -> Result<RealizabilityDecision> {
    realizability_check_scoped(sig, g, Scope::default())
}

/// `G` is a quotient of `π_1(X)` iff `n_G ≤ 2g + r − 1`.
pub fn realizability_check_scoped(sig: &CurveSignature, g: &FiniteGroup, scope: Scope) -> Result<RealizabilityDecision> {
    sig.validate()?;
    if sig.divides(g.order()) {
        return Err(Error::DivisibleByCharacteristic { order: g.order(), p: sig.p });
    }
    let arc = Arc::new(g.clone());
    let solvable = is_solvable(&arc);
    if !solvable && !scope.override_nonsolvable {
        return Err(Error::NotSolvable);
    }
    let warning = (!solvable).then(|| TRANSCENDENTAL_WARNING.to_string());
    if g.is_trivial() {
        return Ok(RealizabilityDecision {
            realizable: true,
            n_g: 0,
            bound: sig.bound(),
            justification: Justification::TrivialGroup,
            warning,
        });
    }
    let n_g = min_generators_budgeted(g, scope.tuple_budget)?.count;
    Ok(RealizabilityDecision {
        realizable: n_g as u64 <= sig.bound(),
        n_g,
        bound: sig.bound(),
        justification: Justification::BoundCheck,
        warning,
    })
}

fn check_module_scope(sig: &CurveSignature, m: &FlModule, tame: bool) -> Result<()> {
    sig.validate()?;
    if m.l() as u64 == sig.p {
        return Err(Error::CoefficientIsCharacteristic(sig.p));
    }
    if !tame && sig.divides(m.group().order()) {
        return Err(Error::DivisibleByCharacteristic { order: m.group().order(), p: sig.p });
    }
    Ok(())
}

/// `(2g + r − 2)·dim A + dim A^H`, possibly negative outside the range
/// where it is a dimension.
pub fn h1_curve_value(sig: &CurveSignature, m: &FlModule) -> i64 {
    sig.neg_euler() * m.dim() as i64 + m.fixed_subspace().dim() as i64
}

/// `dim H^1(X, A)` for the locally constant sheaf attached to `A`.
pub fn h1_curve_dim(sig: &CurveSignature, m: &FlModule) -> Result<u64> {
    check_module_scope(sig, m, false)?;
    nonnegative(h1_curve_value(sig, m))
}

fn nonnegative(v: i64) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::NegativeDimension(v))
}

/// The split embedding problem for an irreducible `A` has a surjective
/// solution iff `dim H^1(X, A) > dim H^1(H, A)`.
pub fn embedding_strongly_solvable(sig: &CurveSignature, m: &FlModule) -> Result<bool> {
    check_module_scope(sig, m, false)?;
    if !m.is_irreducible()? {
        return Err(Error::Reducible);
    }
    Ok(h1_curve_value(sig, m) > h1_space(m).dim() as i64)
}

/// `dim Hom_H(π_1^ab(Y), A)` from exactness of the five-term sequence.
pub fn hom_pi1ab_dim(sig: &CurveSignature, m: &FlModule) -> Result<u64> {
    check_module_scope(sig, m, false)?;
    let v = h1_curve_value(sig, m) - h1_space(m).dim() as i64 + h2_space(m).dim() as i64;
    nonnegative(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorCriterionReport {
    pub n_h: usize,
    pub n_g: usize,
    pub bound: usize,
    pub h1: usize,
    pub dim: usize,
    pub fixed_dim: usize,
    /// `h1 < (N − 1)·dim A + dim A^H`.
    pub cohomological_side: bool,
    /// `n_G ≤ N`.
    pub generator_side: bool,
    pub agree: bool,
    /// `n_G > N ≥ n_H` forces `n_G = n_H + 1`.
    pub excess_applies: bool,
    pub excess_is_one: bool,
}

/// Pure comparison once the four numbers are known.
pub fn generator_criterion_compare(n_h: usize, n_g: usize, h1: usize, dim: usize, fixed_dim: usize, bound: usize) -> GeneratorCriterionReport {
    let rhs = (bound as i64 - 1) * dim as i64 + fixed_dim as i64;
    let cohomological_side = (h1 as i64) < rhs;
    let generator_side = n_g <= bound;
    let excess_applies = n_g > bound && bound >= n_h;
    GeneratorCriterionReport {
        n_h,
        n_g,
        bound,
        h1,
        dim,
        fixed_dim,
        cohomological_side,
        generator_side,
        agree: cohomological_side == generator_side,
        excess_applies,
        excess_is_one: !excess_applies || n_g == n_h + 1,
    }
}

/// Both sides of the equivalence for `G = A ⋊ H`, computed independently.
pub fn generator_criterion_check(m: &FlModule, bound: usize, tuple_budget: u64) -> Result<GeneratorCriterionReport> {
    if m.dim() == 0 {
        return Err(Error::ZeroModule);
    }
    if !m.is_irreducible()? {
        return Err(Error::Reducible);
    }
    let n_h = min_generators_budgeted(m.group(), tuple_budget)?.count;
    if bound < n_h {
        return Err(Error::Invalid(format!("N = {bound} is below n_H = {n_h}")));
    }
    let e = semidirect(m)?;
    let n_g = min_generators_budgeted(e.total(), tuple_budget)?.count;
    let h1 = h1_space(m).dim();
    Ok(generator_criterion_compare(n_h, n_g, h1, m.dim(), h0(m), bound))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonsplitReport {
    pub n_g: usize,
    pub n_h: usize,
    pub holds: bool,
}

/// A non-split extension by an irreducible module needs no more
/// generators than its quotient.
pub fn nonsplit_generator_check(e: &ExtensionData, tuple_budget: u64) -> Result<NonsplitReport> {
    let space = Arc::new(h2_space(e.induced_module()));
    if extension_class_in(e, &space)?.is_zero() {
        return Err(Error::SplitExtension);
    }
    if !e.induced_module().is_irreducible()? {
        return Err(Error::Reducible);
    }
    let n_g = min_generators_budgeted(e.total(), tuple_budget)?.count;
    let n_h = min_generators_budgeted(e.quotient(), tuple_budget)?.count;
    Ok(NonsplitReport { n_g, n_h, holds: n_g == n_h })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepType {
    Split,
    NonSplit,
}

/// Signature-independent data of one tower step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepData {
    /// Position in the tower, counted from the bottom layer.
    pub tower_index: usize,
    pub prime: u32,
    pub layer_order: usize,
    pub reduction_tag: ReductionTag,
    pub step_type: StepType,
    pub dim: usize,
    pub fixed_dim: usize,
    pub h1: usize,
    pub h2: usize,
    pub class_coordinates: Vec<u32>,
    /// Generators of the step quotient `H` and of the step group `G`.
    pub n_h: usize,
    pub n_g: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    #[serde(flatten)]
    pub data: StepData,
    /// `(2g + r − 2)·dim A + dim A^H`.
    pub h1_curve: i64,
    /// `h1 < (N − 1)·dim A + dim A^H`, the cohomological side of the
    /// split criterion.
    pub cohomological_side: bool,
    pub generator_side: bool,
    pub h_realizable: bool,
    pub realizable: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerCertificate {
    pub signature: CurveSignature,
    pub order: usize,
    pub tower: Vec<crate::devissage::StepSummary>,
    /// From the top layer (trivial quotient) down to `G`.
    pub steps: Vec<StepRecord>,
    pub verdict: bool,
    pub n_g: usize,
    pub bound: u64,
    pub first_failing_step: Option<usize>,
    pub decision: RealizabilityDecision,
    pub verdict_matches_decision: bool,
}

/// The tower of a group with all per-step cohomology, reusable across
/// signatures.
#[derive(Clone, Debug)]
pub struct TowerPlan {
    pub group: Arc<FiniteGroup>,
    pub tower: DevissageTower,
    pub steps: Vec<StepData>,
    pub tuple_budget: u64,
}

impl TowerPlan {
    pub fn new(g: &Arc<FiniteGroup>, p: u64) -> Result<TowerPlan> {
        Self::with_budget(g, p, DEFAULT_TUPLE_BUDGET)
    }

    pub fn with_budget(g: &Arc<FiniteGroup>, p: u64, tuple_budget: u64) -> Result<TowerPlan> {
        if p != 0 && (g.order() as u64).is_multiple_of(p) {
            return Err(Error::DivisibleByCharacteristic { order: g.order(), p });
        }
        if !is_solvable(g) {
            return Err(Error::NotSolvable);
        }
        let tower = devissage_group(g, p)?;
        let mut steps = Vec::with_capacity(tower.steps.len());
        for (i, s) in tower.steps.iter().enumerate().rev() {
            let m = &s.layer_module;
            let e = ExtensionData::new(s.projection.clone(), s.prime)?;
            let h2 = Arc::new(h2_space(m));
            let class = extension_class_in(&e, &h2)?;
            steps.push(StepData {
                tower_index: i,
                prime: s.prime,
                layer_order: s.layer_order(),
                reduction_tag: s.reduction_tag,
                step_type: if class.is_zero() { StepType::Split } else { StepType::NonSplit },
                dim: m.dim(),
                fixed_dim: h0(m),
                h1: h1_space(m).dim(),
                h2: h2.dim(),
                class_coordinates: class.coordinates().to_vec(),
                n_h: min_generators_budgeted(&s.quotient, tuple_budget)?.count,
                n_g: min_generators_budgeted(&s.ambient, tuple_budget)?.count,
            });
        }
        Ok(TowerPlan {
            group: g.clone(),
            tower,
            steps,
            tuple_budget,
        })
    }

    /// Walks from the trivial quotient down to `G`. A non-split layer keeps
    /// the answer of its quotient; a split layer over a realizable quotient
    /// is realizable iff `dim H^1(X, A) > dim H^1(H, A)`.
    pub fn certificate(&self, sig: &CurveSignature) -> Result<TowerCertificate> {
        sig.validate()?;
        if sig.divides(self.group.order()) {
            return Err(Error::DivisibleByCharacteristic { order: self.group.order(), p: sig.p });
        }
        let bound = sig.bound() as i64;
        let mut realizable = true;
        let mut first_failing_step = None;
        let mut records = Vec::with_capacity(self.steps.len());
        for (k, d) in self.steps.iter().enumerate() {
            let h1_curve = sig.neg_euler() * d.dim as i64 + d.fixed_dim as i64;
            let h_realizable = realizable;
            let cohomological_side = (d.h1 as i64) < (bound - 1) * d.dim as i64 + d.fixed_dim as i64;
            realizable = match d.step_type {
                StepType::NonSplit => h_realizable,
                StepType::Split => h_realizable && h1_curve > d.h1 as i64,
            };
            if !realizable && first_failing_step.is_none() {
                first_failing_step = Some(k);
            }
            records.push(StepRecord {
                data: d.clone(),
                h1_curve,
                cohomological_side,
                generator_side: d.n_g as i64 <= bound,
                h_realizable,
                realizable,
            });
        }
        let decision = realizability_check_scoped(
            sig,
            &self.group,
            Scope {
                override_nonsolvable: false,
                tuple_budget: self.tuple_budget,
            },
        )?;
        Ok(TowerCertificate {
            signature: *sig,
            order: self.group.order(),
            tower: self.tower.summary(),
            steps: records,
            verdict: realizable,
            n_g: decision.n_g,
            bound: sig.bound(),
            first_failing_step,
            verdict_matches_decision: realizable == decision.realizable,
            decision,
        })
    }
}

pub fn plan_tower(sig: &CurveSignature, g: &Arc<FiniteGroup>) -> Result<TowerCertificate> {
    sig.validate()?;
    TowerPlan::new(g, sig.p)?.certificate(sig)
}

/// The split criterion when the user vouches that the sheaf attached to `A`
/// is tame, so the dimension formula holds without `H` being prime to `p`.
/// `group_bound` is the generator count of the total group; the answer is
/// positive only when it is within `2g + r − 1` and the dimension criterion
/// holds.
pub fn tame_embedding_check(
    sig: &CurveSignature,
    m: &FlModule,
    tame_asserted: bool,
    group_bound: usize,
) -> Result<bool> {
    if !tame_asserted {
        return Err(Error::TamenessNotAsserted);
    }
    check_module_scope(sig, m, true)?;
    if !m.is_irreducible()? {
        return Err(Error::Reducible);
    }
    Ok(group_bound as u64 <= sig.bound() && h1_curve_value(sig, m) > h1_space(m).dim() as i64)
}
