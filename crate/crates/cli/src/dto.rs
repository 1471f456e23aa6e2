//! JSON file formats. Every top-level document carries `"v": 1`; rationals are "p/q"
//! strings and integer-variable indices are 1-based.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use splitwidth_core::cutlib::Cut;
use splitwidth_core::exact_kernel::hrep::{HRep, VRep};
use splitwidth_core::exact_kernel::rational::{format_rat, parse_rat, to_integer, Int, Rat};
use splitwidth_core::lattice_free::SplitBody;
use splitwidth_core::polyhedron::Instance;

use crate::error::CliError;

pub const SCHEMA_VERSION: u64 = 1;

pub fn read_document<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| match e {
        CliError::Parse(m) => CliError::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn parse_document<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    let mut value: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let obj = value.as_object_mut().ok_or_else(|| CliError::Parse("top level must be an object".into()))?;
    match obj.remove("v") {
        Some(Value::Number(n)) if n.as_u64() == Some(SCHEMA_VERSION) => {}
        Some(other) => return Err(CliError::Parse(format!("unsupported schema version {other}"))),
        None => return Err(CliError::Parse("missing schema version \"v\"".into())),
    }
    serde_json::from_value(value).map_err(|e| CliError::Parse(e.to_string()))
}

/// Adds `"v": 1` in front of an object.
pub fn versioned(value: Value) -> Value {
    let mut out = Map::new();
    out.insert("v".into(), json!(SCHEMA_VERSION));
    if let Value::Object(m) = value {
        out.extend(m);
    }
    Value::Object(out)
}

pub fn rat(s: &str) -> Result<Rat, CliError> {
    parse_rat(s).map_err(|e| CliError::Parse(format!("bad rational {:?}", e.0)))
}

pub fn int(s: &str) -> Result<Int, CliError> {
    to_integer(&rat(s)?).ok_or_else(|| CliError::Parse(format!("{s:?} is not an integer")))
}

pub fn rats(v: &[String]) -> Result<Vec<Rat>, CliError> {
    v.iter().map(|s| rat(s)).collect()
}

pub fn strs(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

fn to_zero_based(iv: &[usize], dim: usize) -> Result<Vec<usize>, CliError> {
    iv.iter()
        .map(|&j| {
            if j == 0 || j > dim {
                Err(CliError::Semantic(format!("integer variable index {j} outside 1..={dim}")))
            } else {
                Ok(j - 1)
            }
        })
        .collect()
}

pub fn one_based(iv: &[usize]) -> Vec<usize> {
    iv.iter().map(|j| j + 1).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RowDto {
    pub a: Vec<String>,
    pub b: String,
}

/// An instance or polyhedron: V-form (`vertices`, `rays`) or H-form (`ineqs` as `a·x >= b`,
/// `eqs`).
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyDto {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integer_vars: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rays: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ineqs: Option<Vec<RowDto>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eqs: Option<Vec<RowDto>>,
}

fn check_len(what: &str, v: &[Rat], dim: usize) -> Result<(), CliError> {
    if v.len() != dim {
        return Err(CliError::Semantic(format!("{what} has {} entries, dim is {dim}", v.len())));
    }
    Ok(())
}

impl PolyDto {
    pub fn from_vrep(v: &VRep, integer_vars: Option<&[usize]>) -> Self {
        PolyDto {
            dim: v.dim,
            integer_vars: integer_vars.map(one_based),
            vertices: Some(v.vertices.iter().map(|x| strs(x)).collect()),
            rays: Some(v.rays.iter().map(|x| strs(x)).collect()),
            ..Default::default()
        }
    }

    pub fn from_hrep(h: &HRep, integer_vars: Option<&[usize]>) -> Self {
        let rows = |rs: &[splitwidth_core::exact_kernel::Row]| {
            rs.iter().map(|r| RowDto { a: strs(&r.a), b: format_rat(&r.b) }).collect()
        };
        PolyDto {
            dim: h.dim,
            integer_vars: integer_vars.map(one_based),
            ineqs: Some(rows(&h.ineqs)),
            eqs: Some(rows(&h.eqs)),
            ..Default::default()
        }
    }

    pub fn is_vrep(&self) -> bool {
        self.vertices.is_some()
    }

    pub fn vrep(&self) -> Result<VRep, CliError> {
        let mut vertices = Vec::new();
        for x in self.vertices.as_deref().unwrap_or(&[]) {
            let x = rats(x)?;
            check_len("vertex", &x, self.dim)?;
            vertices.push(x);
        }
        let mut rays = Vec::new();
        for x in self.rays.as_deref().unwrap_or(&[]) {
            let x = rats(x)?;
            check_len("ray", &x, self.dim)?;
            rays.push(x);
        }
        Ok(VRep::new(self.dim, vertices, rays))
    }

    pub fn hrep(&self) -> Result<HRep, CliError> {
        let mut h = HRep::new(self.dim);
        for r in self.ineqs.as_deref().unwrap_or(&[]) {
            let a = rats(&r.a)?;
            check_len("row", &a, self.dim)?;
            h.push_ge(a, rat(&r.b)?);
        }
        for r in self.eqs.as_deref().unwrap_or(&[]) {
            let a = rats(&r.a)?;
            check_len("row", &a, self.dim)?;
            h.push_eq(a, rat(&r.b)?);
        }
        Ok(h)
    }

    pub fn integer_vars(&self) -> Result<Vec<usize>, CliError> {
        to_zero_based(self.integer_vars.as_deref().unwrap_or(&[]), self.dim)
    }

    /// The instance, converting an H-form to its V-form.
    pub fn instance(&self) -> Result<Instance, CliError> {
        if self.vertices.is_some() && (self.ineqs.is_some() || self.eqs.is_some()) {
            return Err(CliError::Parse("give either vertices/rays or ineqs/eqs, not both".into()));
        }
        let vrep = if self.is_vrep() {
            self.vrep()?
        } else {
            splitwidth_core::exact_kernel::hrep_to_vrep(&self.hrep()?)?
        };
        let inst = Instance::new(vrep, self.integer_vars()?);
        let report = splitwidth_core::polyhedron::validate(&inst);
        if !report.is_valid() {
            return Err(CliError::Semantic(format!("invalid instance: {:?}", report.issues)));
        }
        Ok(inst)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacetDto {
    pub pi: Vec<String>,
    pub pi0: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BodyDto {
    pub dim: usize,
    pub integer_vars: Vec<usize>,
    pub facets: Vec<FacetDto>,
}

impl BodyDto {
    pub fn from_body(l: &SplitBody) -> Self {
        BodyDto {
            dim: l.dim,
            integer_vars: one_based(&l.integer_vars),
            facets: l
                .facets
                .iter()
                .map(|f| FacetDto { pi: f.pi.iter().map(|x| x.to_string()).collect(), pi0: f.pi0.to_string() })
                .collect(),
        }
    }

    pub fn body(&self) -> Result<SplitBody, CliError> {
        let iv = to_zero_based(&self.integer_vars, self.dim)?;
        let mut facets = Vec::new();
        for f in &self.facets {
            let pi = f.pi.iter().map(|s| int(s)).collect::<Result<Vec<_>, _>>()?;
            facets.push((pi, int(&f.pi0)?));
        }
        Ok(SplitBody::new(self.dim, iv, facets)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDto {
    #[serde(default)]
    pub label: Option<String>,
    pub bodies: Vec<BodyDto>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CutDto {
    pub delta: Vec<String>,
    pub delta0: String,
}

impl CutDto {
    pub fn from_cut(c: &Cut) -> Self {
        CutDto { delta: strs(&c.delta), delta0: format_rat(&c.delta0) }
    }

    pub fn cut(&self) -> Result<Cut, CliError> {
        Ok(Cut::new(rats(&self.delta)?, rat(&self.delta0)?)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CutsDto {
    pub cuts: Vec<CutDto>,
}
