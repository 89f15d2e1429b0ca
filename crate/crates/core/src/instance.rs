//! Instance files: the numerical type of a generated pair on a comb, as JSON.
//!
//! ```json
//! {
//!   "n": 2,
//!   "genera": [1, 1],
//!   "rank": 1,
//!   "degrees": [2, 1],
//!   "l": 3,
//!   "kernel_ranks": [1, 1]
//! }
//! ```
//!
//! Exactly one of `section_dims` (`l_i`) and `kernel_ranks` (`t_i = l - l_i`)
//! is given. `intersection_dims` (`k_i`, length `n - 1`) is optional and is
//! checked against the kernel ranks when present.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::curve::CombCurve;
use crate::error::{Error, Result};
use crate::numerics::{check_intersections, GeneratedPairData};

/// On-disk layout, before validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub n: i64,
    pub genera: Vec<i64>,
    pub rank: i64,
    pub degrees: Vec<i64>,
    pub l: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section_dims: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub intersection_dims: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel_ranks: Option<Vec<i64>>,
}

/// A validated instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub curve: CombCurve,
    pub pair: GeneratedPairData,
    pub intersection_dims: Option<Vec<i64>>,
}

impl Instance {
    pub fn new(curve: CombCurve, pair: GeneratedPairData) -> Result<Self> {
        if curve.n() != pair.n() {
            return Err(Error::mismatch("degrees", curve.n(), pair.n()));
        }
        Ok(Self {
            curve,
            pair,
            intersection_dims: None,
        })
    }

    pub fn with_intersections(mut self, intersection_dims: Vec<i64>) -> Result<Self> {
        check_intersections(&self.curve, &self.pair, &intersection_dims)?;
        self.intersection_dims = Some(intersection_dims);
        Ok(self)
    }

    /// File form using `kernel_ranks`.
    pub fn to_file(&self) -> InstanceFile {
        InstanceFile {
            n: self.curve.n() as i64,
            genera: self.curve.genera().iter().map(|&g| i64::from(g)).collect(),
            rank: self.pair.rank(),
            degrees: self.pair.degrees().to_vec(),
            l: self.pair.l(),
            section_dims: None,
            intersection_dims: self.intersection_dims.clone(),
            kernel_ranks: Some(self.pair.kernel_ranks()),
        }
    }
}

fn check_len(field: &str, values: &[i64], expected: usize) -> Result<()> {
    if values.len() != expected {
        return Err(Error::Validation {
            field: field.to_string(),
            message: format!("length {} does not match n = {expected}", values.len()),
        });
    }
    Ok(())
}

impl InstanceFile {
    pub fn validate(&self) -> Result<Instance> {
        if self.n < 2 {
            return Err(Error::validation(
                "n",
                format!("n >= 2 required, got {}", self.n),
            ));
        }
        let n = self.n as usize;
        check_len("genera", &self.genera, n)?;
        check_len("degrees", &self.degrees, n)?;
        if self.rank < 1 {
            return Err(Error::validation(
                "rank",
                format!("r >= 1 required, got {}", self.rank),
            ));
        }
        if self.l <= self.rank {
            return Err(Error::validation(
                "l",
                format!("l > r required, got l = {}, r = {}", self.l, self.rank),
            ));
        }
        let curve = CombCurve::from_signed(&self.genera)?;
        let pair = match (&self.section_dims, &self.kernel_ranks) {
            (Some(dims), None) => {
                check_len("section_dims", dims, n)?;
                GeneratedPairData::new(self.rank, self.degrees.clone(), self.l, dims.clone())?
            }
            (None, Some(t)) => {
                check_len("kernel_ranks", t, n)?;
                GeneratedPairData::from_kernel_ranks(self.rank, self.degrees.clone(), self.l, t)?
            }
            _ => {
                return Err(Error::validation(
                    "section_dims",
                    "exactly one of section_dims and kernel_ranks is required",
                ))
            }
        };
        let instance = Instance::new(curve, pair)?;
        match &self.intersection_dims {
            None => Ok(instance),
            Some(k) => {
                if k.len() != n - 1 {
                    return Err(Error::Validation {
                        field: "intersection_dims".into(),
                        message: format!("length {} does not match n - 1 = {}", k.len(), n - 1),
                    });
                }
                instance.with_intersections(k.clone())
            }
        }
    }
}

/// Parses instance text. Malformed JSON is a [`Error::Parse`]; well-formed
/// JSON with missing, mistyped or inconsistent fields is a validation error.
pub fn parse_instance_str(text: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| match e.classify() {
        serde_json::error::Category::Data => Error::Validation {
            field: "instance".into(),
            message: e.to_string(),
        },
        _ => Error::Parse(e.to_string()),
    })?;
    file.validate()
}

/// Reads and validates an instance file.
pub fn parse_instance(path: impl AsRef<Path>) -> Result<Instance> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_instance_str(&text)
}

/// Pretty-printed JSON for an instance.
pub fn emit_instance(instance: &Instance) -> String {
    serde_json::to_string_pretty(&instance.to_file()).expect("instance files always serialize")
}
