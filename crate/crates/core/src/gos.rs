//! Swan conductors and Euler characteristics of constructible sheaves on
//! curves, in exact rational arithmetic.

use std::sync::Arc;

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::cohomology::h0;
use crate::error::{Error, Result};
use crate::group::{same_group, FiniteGroup, Subgroup};
use crate::module::FlModule;
use crate::realizability::CurveSignature;

fn ratio_str<S: Serializer>(v: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ratios_str<S: Serializer>(v: &[Rational64], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// Ramification groups `G_0 ⊇ G_1 ⊇ … ⊇ G_m` at a point, with `G_i` trivial
/// beyond the chain, and the representation at the generic point.
#[derive(Clone, Debug)]
pub struct RamificationFiltration {
    group: Arc<FiniteGroup>,
    chain: Vec<Subgroup>,
    module: FlModule,
}

impl RamificationFiltration {
    pub fn new(group: &Arc<FiniteGroup>, chain: Vec<Subgroup>, module: FlModule) -> Result<RamificationFiltration> {
        if !same_group(module.group(), group) {
            return Err(Error::GroupMismatch);
        }
        match chain.first() {
            Some(first) if first.is_whole() => {}
            _ => return Err(Error::Invalid("the chain must start with the whole group".into())),
        }
        for w in chain.windows(2) {
            if !same_group(w[1].parent(), group) || !w[1].is_subgroup_of(&w[0]) {
                return Err(Error::Invalid("the chain must be decreasing".into()));
            }
        }
        if !same_group(chain[0].parent(), group) {
            return Err(Error::GroupMismatch);
        }
        Ok(RamificationFiltration {
            group: group.clone(),
            chain,
            module,
        })
    }

    /// `G_0 = G`, `G_1 = 1`.
    pub fn tame(module: &FlModule) -> RamificationFiltration {
        let g = module.group();
        RamificationFiltration {
            group: g.clone(),
            chain: vec![Subgroup::whole(g), Subgroup::trivial(g)],
            module: module.clone(),
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn chain(&self) -> &[Subgroup] {
        &self.chain
    }

    pub fn module(&self) -> &FlModule {
        &self.module
    }

    pub fn is_tame(&self) -> bool {
        self.chain.get(1).is_none_or(|g1| g1.is_trivial())
    }
}

/// `Σ_{i≥1} (|G_i| / |G_0|) · dim(F / F^{G_i})`.
pub fn swan(f: &RamificationFiltration) -> Rational64 {
    let g0 = f.chain[0].order() as i64;
    let dim = f.module.dim() as i64;
    f.chain[1..]
        .iter()
        .map(|gi| {
            let fixed = f.module.fixed_subspace_of(gi.members()).dim() as i64;
            Rational64::new(gi.order() as i64, g0) * Rational64::from_integer(dim - fixed)
        })
        .sum()
}

#[derive(Clone, Debug)]
pub struct PointData {
    pub filtration: RamificationFiltration,
    pub stalk_dim: usize,
}

impl PointData {
    pub fn new(filtration: RamificationFiltration, stalk_dim: usize) -> Result<PointData> {
        if stalk_dim > filtration.module.dim() {
            return Err(Error::Invalid(format!(
                "stalk dimension {stalk_dim} exceeds the generic dimension {}",
                filtration.module.dim()
            )));
        }
        Ok(PointData { filtration, stalk_dim })
    }
}

/// `α_x + dim F_η − dim F_x`.
pub fn conductor_exponent(x: &PointData) -> Rational64 {
    swan(&x.filtration) + Rational64::from_integer(x.filtration.module.dim() as i64 - x.stalk_dim as i64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub chi: i64,
    #[serde(serialize_with = "ratios_str")]
    pub swans: Vec<Rational64>,
    #[serde(serialize_with = "ratios_str")]
    pub epsilons: Vec<Rational64>,
    #[serde(serialize_with = "ratio_str")]
    pub total: Rational64,
    pub trace: String,
}

fn integral(total: Rational64, trace: &str) -> Result<i64> {
    if total.is_integer() {
        Ok(total.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{trace} = {total}")))
    }
}

fn join(v: &[Rational64]) -> String {
    if v.is_empty() {
        "0".into()
    } else {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" + ")
    }
}

/// `χ(X̄, F) = (2 − 2g)·dim F_η − Σ ε_x`.
pub fn euler_char_projective(genus: u64, dim_generic: usize, points: &[PointData]) -> Result<EulerReport> {
    let swans: Vec<Rational64> = points.iter().map(|x| swan(&x.filtration)).collect();
    let epsilons: Vec<Rational64> = points.iter().map(conductor_exponent).collect();
    let chi_curve = 2 - 2 * genus as i64;
    let total = Rational64::from_integer(chi_curve * dim_generic as i64) - epsilons.iter().sum::<Rational64>();
    let trace = format!("({chi_curve})*{dim_generic} - ({})", join(&epsilons));
    let chi = integral(total, &trace)?;
    Ok(EulerReport {
        chi,
        swans,
        epsilons,
        total,
        trace,
    })
}

/// `χ(X, F) = (2 − 2g − r)·dim F_η − Σ α_x`, for a sheaf whose ramification
/// lies among the removed points.
pub fn euler_char_affine(sig: &CurveSignature, dim_generic: usize, swans: &[Rational64]) -> Result<EulerReport> {
    sig.validate()?;
    if swans.len() as u64 > sig.r {
        return Err(Error::Invalid(format!(
            "{} ramified points but only {} punctures",
            swans.len(),
            sig.r
        )));
    }
    let chi_curve = 2 - 2 * sig.g as i64 - sig.r as i64;
    let total = Rational64::from_integer(chi_curve * dim_generic as i64) - swans.iter().sum::<Rational64>();
    let trace = format!("({chi_curve})*{dim_generic} - ({})", join(swans));
    let chi = integral(total, &trace)?;
    Ok(EulerReport {
        chi,
        swans: swans.to_vec(),
        epsilons: Vec::new(),
        total,
        trace,
    })
}

/// `h^1(X, A) = h^0 − χ(X, A)` with `h^2 = 0`, where each puncture carries a
/// tame filtration because `|H|` is prime to `p`.
pub fn h1_affine_from_gos(sig: &CurveSignature, m: &FlModule) -> Result<u64> {
    sig.validate()?;
    if m.l() as u64 == sig.p {
        return Err(Error::CoefficientIsCharacteristic(sig.p));
    }
    if sig.p != 0 && (m.group().order() as u64).is_multiple_of(sig.p) {
        return Err(Error::DivisibleByCharacteristic {
            order: m.group().order(),
            p: sig.p,
        });
    }
    let tame = RamificationFiltration::tame(m);
    let swans: Vec<Rational64> = (0..sig.r).map(|_| swan(&tame)).collect();
    let chi = euler_char_affine(sig, m.dim(), &swans)?.chi;
    let v = h0(m) as i64 - chi;
    u64::try_from(v).map_err(|_| Error::NegativeDimension(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FlMatrix;

    fn c2() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::from_permutations(2, &[vec![1, 0]]).unwrap())
    }

    fn sign3() -> FlModule {
        FlModule::from_generator_action(&c2(), 3, &[FlMatrix::from_rows(3, &[vec![-1]]).unwrap()]).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn swan_examples() {
        let m = sign3();
        assert_eq!(swan(&RamificationFiltration::tame(&m)), r(0, 1));
        let g = m.group().clone();
        let t = FlModule::trivial(&g, 3, 2).unwrap();
        let wild = vec![Subgroup::whole(&g), Subgroup::whole(&g)];
        assert_eq!(swan(&RamificationFiltration::new(&g, wild.clone(), t).unwrap()), r(0, 1));
        let f = RamificationFiltration::new(&g, wild, m).unwrap();
        assert_eq!(swan(&f), r(1, 1));
        assert_eq!(conductor_exponent(&PointData::new(f, 0).unwrap()), r(2, 1));
    }

    #[test]
    fn conductor_examples() {
        let one = Arc::new(FiniteGroup::trivial());
        let m = FlModule::trivial(&one, 2, 1).unwrap();
        let tame = RamificationFiltration::tame(&m);
        assert_eq!(conductor_exponent(&PointData::new(tame.clone(), 1).unwrap()), r(0, 1));
        assert_eq!(conductor_exponent(&PointData::new(tame.clone(), 0).unwrap()), r(1, 1));
        assert!(PointData::new(tame, 2).is_err());
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_char_projective(0, 1, &[]).unwrap().chi, 2);
        assert_eq!(euler_char_projective(1, 1, &[]).unwrap().chi, 0);
        let one = Arc::new(FiniteGroup::trivial());
        let m = FlModule::trivial(&one, 2, 1).unwrap();
        let x = PointData::new(RamificationFiltration::tame(&m), 0).unwrap();
        assert_eq!(euler_char_projective(0, 1, &[x]).unwrap().chi, 1);
        let s = |g, r| CurveSignature::new(g, r, 0).unwrap();
        assert_eq!(euler_char_affine(&s(0, 1), 1, &[]).unwrap().chi, 1);
        assert_eq!(euler_char_affine(&s(0, 2), 1, &[]).unwrap().chi, 0);
        assert_eq!(euler_char_affine(&s(1, 1), 2, &[r(1, 1)]).unwrap().chi, -3);
        assert!(matches!(
            euler_char_affine(&s(1, 1), 2, &[r(1, 2)]),
            Err(Error::NonIntegral(_))
        ));
    }

    #[test]
    fn h1_examples() {
        let one = Arc::new(FiniteGroup::trivial());
        let s = |g, r| CurveSignature::new(g, r, 0).unwrap();
        assert_eq!(h1_affine_from_gos(&s(0, 2), &FlModule::trivial(&one, 5, 1).unwrap()).unwrap(), 1);
        assert_eq!(h1_affine_from_gos(&s(0, 3), &sign3()).unwrap(), 1);
        assert_eq!(h1_affine_from_gos(&s(2, 1), &FlModule::trivial(&c2(), 3, 2).unwrap()).unwrap(), 8);
    }
}
