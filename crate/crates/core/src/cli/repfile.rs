//! Representation files (`*.rep`) and formula batches (`*.fml`).
//!
//! A representation file is TOML:
//!
//! ```toml
//! name = "r2"                   # optional, defaults to the file stem
//! note = "C2 acting on Z/3 by negation"   # optional
//!
//! [ring]
//! modulus = 3
//!
//! [module]
//! cyclic_orders = [3]           # each order divides the modulus
//!
//! [group]
//! identity = 0
//! cayley = [[0, 1], [1, 0]]     # row = left factor
//!
//! [action]
//! table = [[0, 1, 2], [0, 2, 1]]  # table[g][a] = a∘g
//! ```
//!
//! Module elements are numbered mixed-radix over `cyclic_orders` with the
//! last coordinate varying fastest.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::{FiniteGroup, FiniteModule, FiniteRing, Representation};
use crate::class_theory::{Catalog, FormulaSet};
use crate::error::{Error, Result};
use crate::formula::{batch_lines, parse, Formula};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub ring: RingSection,
    pub module: ModuleSection,
    pub group: GroupSection,
    pub action: ActionSection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSection {
    pub modulus: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSection {
    pub cyclic_orders: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSection {
    pub identity: usize,
    pub cayley: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSection {
    pub table: Vec<Vec<usize>>,
}

impl RepFile {
    pub fn from_representation(name: Option<&str>, note: Option<&str>, rep: &Representation) -> Self {
        RepFile {
            name: name.map(str::to_string),
            note: note.map(str::to_string),
            ring: RingSection {
                modulus: rep.modulus(),
            },
            module: ModuleSection {
                cyclic_orders: rep.module().cyclic_orders(),
            },
            group: GroupSection {
                identity: rep.group().identity(),
                cayley: rep.group().cayley_rows(),
            },
            action: ActionSection {
                table: rep.action_rows(),
            },
        }
    }

    /// Validate every table and build the representation.
    pub fn to_representation(&self) -> Result<Representation> {
        let ring = FiniteRing::new(self.ring.modulus)?;
        let module = FiniteModule::new(ring, self.module.cyclic_orders.clone())?;
        let group = FiniteGroup::from_cayley(self.group.cayley.clone(), self.group.identity)?;
        Representation::new(module, group, self.action.table.clone())
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("rep files serialize")
    }
}

fn input(path: &Path, message: impl Into<String>) -> Error {
    Error::Input {
        path: path.display().to_string(),
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| input(path, e.to_string()))
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

/// Parse and validate one representation file; the name falls back to the
/// file stem.
pub fn load_rep(path: &Path) -> Result<(String, Representation)> {
    let file: RepFile = toml::from_str(&read(path)?).map_err(|e| input(path, e.to_string()))?;
    let rep = file.to_representation().map_err(|e| input(path, e.to_string()))?;
    Ok((file.name.unwrap_or_else(|| stem(path)), rep))
}

pub fn save_rep(path: &Path, file: &RepFile) -> Result<()> {
    fs::write(path, file.to_toml()).map_err(|e| input(path, e.to_string()))
}

/// Formulas of a batch file as `(line number, source)`, each parsed over
/// `Z/modulus`. Parse errors name the line and the byte column.
pub fn load_formulas(path: &Path, modulus: u32) -> Result<Vec<(usize, Formula)>> {
    let text = read(path)?;
    batch_lines(&text)
        .map(|(line, src)| {
            parse(src, modulus)
                .map(|u| (line, u))
                .map_err(|e| input(path, format!("line {line}: {e}")))
        })
        .collect()
}

fn files_with_extension(dir: &Path, ext: &str) -> Result<Vec<PathBuf>> {
    let entries = fs::read_dir(dir).map_err(|e| input(dir, e.to_string()))?;
    let mut out = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| input(dir, e.to_string()))?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == ext) {
            out.push(path);
        }
    }
    out.sort();
    Ok(out)
}

/// Every `*.rep` in the directory, in file-name order.
pub fn load_catalog(dir: &Path) -> Result<Catalog> {
    let mut catalog = Catalog::new();
    for path in files_with_extension(dir, "rep")? {
        let (name, rep) = load_rep(&path)?;
        catalog.push(name, rep).map_err(|e| input(&path, e.to_string()))?;
    }
    Ok(catalog)
}

/// Every formula of every `*.fml` in the directory, named `file:line`.
pub fn load_pool(dir: &Path) -> Result<FormulaSet> {
    let mut pool = FormulaSet::new();
    for path in files_with_extension(dir, "fml")? {
        let text = read(&path)?;
        let file = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        for (line, src) in batch_lines(&text) {
            pool.push(format!("{file}:{line}"), src)
                .map_err(|e| input(&path, format!("line {line}: {e}")))?;
        }
    }
    Ok(pool)
}
