//! JSON file formats for groups, decompositions and systems.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::cartesian::{CartesianDecomposition, CartesianSystem};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// `{"name": …, "degree": n, "generators": [[images], …]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn from_group(name: Option<&str>, g: &PermGroup) -> Self {
        GroupSpec {
            name: name.map(str::to_owned),
            degree: g.degree(),
            generators: g.generators().to_vec(),
        }
    }

    pub fn to_group(&self) -> Result<PermGroup> {
        PermGroup::new(self.degree, self.generators.clone())
    }
}

/// A group given inline or as a path to a group file.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Inline(GroupSpec),
    Path(PathBuf),
}

/// `{"group": …, "base_point": ω, "subgroups": [[generators], …]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SystemSpec {
    pub group: GroupRef,
    #[serde(default)]
    pub base_point: usize,
    pub subgroups: Vec<Vec<Permutation>>,
}

impl SystemSpec {
    pub fn from_system(k: &CartesianSystem) -> Self {
        SystemSpec {
            group: GroupRef::Inline(GroupSpec::from_group(None, &k.ambient)),
            base_point: k.base_point,
            subgroups: k
                .subgroups
                .iter()
                .map(|s| s.generators().to_vec())
                .collect(),
        }
    }

    /// Relative group paths are resolved against `dir`.
    pub fn to_system(&self, dir: &Path) -> Result<CartesianSystem> {
        let ambient = match &self.group {
            GroupRef::Inline(spec) => spec.to_group()?,
            GroupRef::Path(p) => read_group(&dir.join(p))?,
        };
        let subgroups = self
            .subgroups
            .iter()
            .map(|gens| PermGroup::new(ambient.degree(), gens.clone()))
            .collect::<Result<Vec<_>>>()?;
        CartesianSystem::new(ambient, self.base_point, subgroups)
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Json(format!("{}: {e}", path.display())))
}

pub fn read_group(path: &Path) -> Result<PermGroup> {
    read_json::<GroupSpec>(path)?.to_group()
}

pub fn read_decomposition(path: &Path) -> Result<CartesianDecomposition> {
    read_json(path)
}

pub fn read_system(path: &Path) -> Result<CartesianSystem> {
    let spec: SystemSpec = read_json(path)?;
    spec.to_system(path.parent().unwrap_or(Path::new(".")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_round_trip() {
        let text = r#"{"name": "V4", "degree": 4, "generators": [[1,0,3,2],[2,3,0,1]]}"#;
        let spec: GroupSpec = serde_json::from_str(text).unwrap();
        let g = spec.to_group().unwrap();
        assert_eq!(g.order(), 4);
        let back = serde_json::to_string(&GroupSpec::from_group(Some("V4"), &g)).unwrap();
        assert_eq!(serde_json::from_str::<GroupSpec>(&back).unwrap(), spec);
        assert!(
            serde_json::from_str::<GroupSpec>(r#"{"degree": 3, "generators": [[0,0,1]]}"#).is_err()
        );
    }

    #[test]
    fn system_with_inline_group() {
        let text = r#"{"group": {"degree": 4, "generators": [[1,0,3,2],[2,3,0,1]]},
                       "base_point": 0, "subgroups": [[[1,0,3,2]], [[2,3,0,1]]]}"#;
        let spec: SystemSpec = serde_json::from_str(text).unwrap();
        let k = spec.to_system(Path::new(".")).unwrap();
        assert_eq!(k.index(), 2);
        assert_eq!(k.ambient.order(), 4);
    }
}
