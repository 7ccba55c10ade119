//! JSON input and output of groups, modules and forms.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::finite_field::Field;
use crate::forms::BilinearForm;
use crate::group::{GroupSpec, PermGroup};
use crate::linalg::{Matrix, MatrixData};
use crate::repmod::Representation;

/// A group given by permutations or by a named family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupJson {
    Raw {
        degree: usize,
        generators: Vec<Vec<u32>>,
    },
    Family(FamilyJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyJson {
    Cyclic {
        n: u64,
    },
    /// Order 2n dihedral group, n odd.
    Dihedral {
        n: u64,
    },
    ExtendedDihedral {
        e: u32,
        n: u64,
    },
    Symmetric {
        n: usize,
    },
    Alternating {
        n: usize,
    },
    DirectProduct {
        factors: Vec<GroupJson>,
    },
}

impl GroupJson {
    pub fn to_spec(&self) -> GroupSpec {
        match self {
            GroupJson::Raw { degree, generators } => GroupSpec::RawPermutation {
                degree: *degree,
                generators: generators.clone(),
            },
            GroupJson::Family(f) => match f {
                FamilyJson::Cyclic { n } => GroupSpec::Cyclic(*n),
                FamilyJson::Dihedral { n } => GroupSpec::ExtendedDihedral { e: 1, n: *n },
                FamilyJson::ExtendedDihedral { e, n } => {
                    GroupSpec::ExtendedDihedral { e: *e, n: *n }
                }
                FamilyJson::Symmetric { n } => GroupSpec::Symmetric(*n),
                FamilyJson::Alternating { n } => GroupSpec::Alternating(*n),
                FamilyJson::DirectProduct { factors } => {
                    GroupSpec::DirectProduct(factors.iter().map(|g| g.to_spec()).collect())
                }
            },
        }
    }

    pub fn from_group(g: &PermGroup) -> GroupJson {
        GroupJson::Raw {
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.0.clone()).collect(),
        }
    }
}

/// Module file: `{"field": "GF(2^k)", "group": <group or path>, "images": [matrix, ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleJson {
    pub field: String,
    pub group: Value,
    pub images: Vec<MatrixData>,
}

/// Form file: `{"module": <module or path>, "gram": matrix}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FormJson {
    pub module: Value,
    pub gram: MatrixData,
}

fn read_json(path: &Path) -> Result<Value> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

/// Follows a string reference to a file (relative to `base`), or returns the inline value.
fn resolve(v: &Value, base: &Path) -> Result<(Value, PathBuf)> {
    match v {
        Value::String(s) => {
            let p = base.join(s);
            Ok((read_json(&p)?, base_dir(&p)))
        }
        other => Ok((other.clone(), base.to_path_buf())),
    }
}

pub fn group_from_value(v: &Value, base: &Path, cap: usize) -> Result<Arc<PermGroup>> {
    let (v, _) = resolve(v, base)?;
    let g: GroupJson =
        serde_json::from_value(v).map_err(|e| Error::Parse(format!("group: {e}")))?;
    Ok(Arc::new(PermGroup::build_capped(&g.to_spec(), cap)?))
}

pub fn load_group(path: &Path, cap: usize) -> Result<Arc<PermGroup>> {
    group_from_value(&read_json(path)?, &base_dir(path), cap)
}

pub fn module_from_value(v: &Value, base: &Path, cap: usize) -> Result<Representation> {
    let (v, base) = resolve(v, base)?;
    let m: ModuleJson =
        serde_json::from_value(v).map_err(|e| Error::Parse(format!("module: {e}")))?;
    let field = Field::parse(&m.field)?;
    let group = group_from_value(&m.group, &base, cap)?;
    let images = m
        .images
        .iter()
        .map(|d| Matrix::from_data(&field, d))
        .collect::<Result<Vec<_>>>()?;
    if images.is_empty() {
        return Err(Error::InvalidRepresentation("no images given".into()));
    }
    Representation::new(group, &field, images)
}

pub fn load_module(path: &Path, cap: usize) -> Result<Representation> {
    module_from_value(&read_json(path)?, &base_dir(path), cap)
}

/// Loads a form. The gram file holds either a bare matrix or a form object
/// (whose module is used when `module_path` is absent).
pub fn load_form(module_path: Option<&Path>, gram_path: &Path, cap: usize) -> Result<BilinearForm> {
    let gv = read_json(gram_path)?;
    let gbase = base_dir(gram_path);
    let (module, gram_data) = if gv.get("gram").is_some() {
        let f: FormJson =
            serde_json::from_value(gv).map_err(|e| Error::Parse(format!("form: {e}")))?;
        let module = match module_path {
            Some(p) => load_module(p, cap)?,
            None => module_from_value(&f.module, &gbase, cap)?,
        };
        (module, f.gram)
    } else {
        let d: MatrixData =
            serde_json::from_value(gv).map_err(|e| Error::Parse(format!("gram: {e}")))?;
        let p =
            module_path.ok_or_else(|| Error::Parse("a bare gram matrix needs --module".into()))?;
        (load_module(p, cap)?, d)
    };
    let gram = Matrix::from_data(module.field(), &gram_data)?;
    BilinearForm::new(module, gram)
}

pub fn module_to_json(m: &Representation) -> ModuleJson {
    ModuleJson {
        field: m.field().name(),
        group: serde_json::to_value(GroupJson::from_group(m.group())).expect("serializable"),
        images: m.images().iter().map(|x| x.to_data()).collect(),
    }
}

pub fn form_to_json(f: &BilinearForm) -> FormJson {
    FormJson {
        module: serde_json::to_value(module_to_json(f.module())).expect("serializable"),
        gram: f.gram().to_data(),
    }
}
