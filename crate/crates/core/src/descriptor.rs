//! JSON descriptors for groups, modules and ramification data.

use std::sync::Arc;

use serde::Deserialize;

use crate::catalog;
use crate::error::{Error, Result};
use crate::group::{same_group, FiniteGroup, Subgroup};
use crate::gos::{PointData, RamificationFiltration};
use crate::linalg::FlMatrix;
use crate::module::FlModule;

/// `{"degree": n, "generators": [[...], ...]}` with 0-based images, or
/// `{"catalog": "S3"}` for a built-in group.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDescriptor {
    pub degree: Option<usize>,
    pub generators: Option<Vec<Vec<usize>>>,
    pub catalog: Option<String>,
}

impl GroupDescriptor {
    pub fn build(&self, cap: usize) -> Result<Arc<FiniteGroup>> {
        match (&self.degree, &self.generators, &self.catalog) {
            (Some(degree), Some(gens), None) => Ok(Arc::new(FiniteGroup::from_permutations_capped(*degree, gens, cap)?)),
            (None, None, Some(name)) => catalog::catalog_group(name)
                .map(|g| g.group.clone())
                .ok_or_else(|| Error::Invalid(format!("no catalog group named {name:?}"))),
            _ => Err(Error::Invalid(
                "a group descriptor needs either degree and generators, or catalog".into(),
            )),
        }
    }
}

/// `{"l": prime, "dim": d, "generator_matrices": [[[...]]], "group": {...}}`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDescriptor {
    pub l: u32,
    pub dim: usize,
    pub generator_matrices: Vec<Vec<Vec<i64>>>,
    pub group: Option<GroupDescriptor>,
}

impl ModuleDescriptor {
    /// `ambient` supplies the group when the descriptor omits it, and must
    /// agree with it otherwise.
    pub fn build(&self, ambient: Option<&Arc<FiniteGroup>>, cap: usize) -> Result<FlModule> {
        let group = match (&self.group, ambient) {
            (Some(d), Some(a)) => {
                let g = d.build(cap)?;
                if !same_group(&g, a) {
                    return Err(Error::GroupMismatch);
                }
                a.clone()
            }
            (Some(d), None) => d.build(cap)?,
            (None, Some(a)) => a.clone(),
            (None, None) => return Err(Error::Invalid("module descriptor has no group".into())),
        };
        let mats = self
            .generator_matrices
            .iter()
            .map(|rows| {
                let m = FlMatrix::from_rows(self.l, rows)?;
                if m.rows() != self.dim || m.cols() != self.dim {
                    return Err(Error::Shape(format!("generator matrix is not {0}x{0}", self.dim)));
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        FlModule::from_generator_action_dim(&group, self.l, self.dim, &mats)
    }
}

/// `{"group": ..., "chain": [[indices], ...], "module": ..., "stalk_dim": n}`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RamificationDescriptor {
    pub group: GroupDescriptor,
    pub chain: Vec<Vec<usize>>,
    pub module: ModuleDescriptor,
    pub stalk_dim: usize,
}

impl RamificationDescriptor {
    pub fn build(&self, cap: usize) -> Result<PointData> {
        let group = self.group.build(cap)?;
        let module = self.module.build(Some(&group), cap)?;
        let chain = self
            .chain
            .iter()
            .map(|members| {
                if let Some(&bad) = members.iter().find(|&&x| x >= group.order()) {
                    return Err(Error::Invalid(format!("element index {bad} out of range")));
                }
                let mut sorted = members.clone();
                sorted.sort_unstable();
                sorted.dedup();
                Subgroup::from_members(&group, &sorted)
            })
            .collect::<Result<Vec<_>>>()?;
        PointData::new(RamificationFiltration::new(&group, chain, module)?, self.stalk_dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_group_descriptors() {
        let d: GroupDescriptor = serde_json::from_str(r#"{"degree": 3, "generators": [[1, 2, 0]]}"#).unwrap();
        assert_eq!(d.build(100).unwrap().order(), 3);
        let d: GroupDescriptor = serde_json::from_str(r#"{"catalog": "S3"}"#).unwrap();
        assert_eq!(d.build(100).unwrap().order(), 6);
        assert!(serde_json::from_str::<GroupDescriptor>(r#"{"degree": 3, "gens": []}"#).is_err());
        let d: GroupDescriptor = serde_json::from_str(r#"{"degree": 3}"#).unwrap();
        assert!(d.build(100).is_err());
    }

    #[test]
    fn parses_module_descriptors() {
        let d: ModuleDescriptor = serde_json::from_str(
            r#"{"l": 3, "dim": 1, "generator_matrices": [[[2]]], "group": {"degree": 2, "generators": [[1, 0]]}}"#,
        )
        .unwrap();
        let m = d.build(None, 100).unwrap();
        assert_eq!(m.fixed_subspace().dim(), 0);
        let bad: ModuleDescriptor = serde_json::from_str(
            r#"{"l": 2, "dim": 2, "generator_matrices": [[[0, 1], [1, 1]]], "group": {"degree": 2, "generators": [[1, 0]]}}"#,
        )
        .unwrap();
        assert!(matches!(bad.build(None, 100), Err(Error::NotARepresentation(_))));
    }
}
