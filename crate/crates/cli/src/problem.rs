//! The problem-file format: one JSON document holding an instance, a
//! state, and named partitions. Complex entries are [re, im] pairs and
//! matrices are row-major nested arrays. Validation errors carry the JSON
//! path of the offending value.

use std::path::Path;

use indexmap::IndexMap;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use sea_core::spectral::ComplexMatrix;
use sea_core::{
    AtomWeights, BooleanElement, BooleanSea, DensityMatrix, EntropyOptions, FuzzyElement,
    FuzzySea, Partition, PointWeights, QuantumEffect, QuantumSea,
};

use crate::CliError;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProblemFileRaw {
    pub instance: String,
    pub size: usize,
    pub state: Value,
    pub partitions: IndexMap<String, Vec<Value>>,
    #[serde(default, skip_serializing_if = "ProblemOptions::is_empty")]
    pub options: ProblemOptions,
}

#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct ProblemOptions {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log_base: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

impl ProblemOptions {
    fn is_empty(&self) -> bool {
        self.log_base.is_none() && self.tolerance.is_none()
    }
}

pub enum ProblemData {
    Boolean {
        sea: BooleanSea,
        state: AtomWeights,
        partitions: IndexMap<String, Partition<BooleanElement>>,
    },
    Fuzzy {
        sea: FuzzySea,
        state: PointWeights,
        partitions: IndexMap<String, Partition<FuzzyElement>>,
    },
    Quantum {
        sea: QuantumSea,
        state: DensityMatrix,
        partitions: IndexMap<String, Partition<QuantumEffect>>,
    },
}

pub struct LoadedProblem {
    pub raw: ProblemFileRaw,
    pub options: EntropyOptions,
    pub data: ProblemData,
}

fn usage(path: &str, message: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("{path}: {message}"))
}

/// Reads and fully validates a problem file. `base_override` and
/// `tol_override` take precedence over the file's own options block.
pub fn load_problem(
    file: &Path,
    base_override: Option<f64>,
    tol_override: Option<f64>,
) -> Result<LoadedProblem, CliError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
    let raw: ProblemFileRaw = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;

    let log_base = base_override.or(raw.options.log_base).unwrap_or(2.0);
    if !log_base.is_finite() || log_base <= 1.0 {
        return Err(usage("options.log_base", "must exceed 1"));
    }
    let tolerance = tol_override.or(raw.options.tolerance);
    if let Some(tol) = tolerance {
        if !tol.is_finite() || tol <= 0.0 {
            return Err(usage("options.tolerance", "must be positive"));
        }
    }
    let options = EntropyOptions::new(log_base);

    let data = match raw.instance.as_str() {
        "boolean" => load_boolean(&raw)?,
        "fuzzy" => load_fuzzy(&raw)?,
        "quantum" => load_quantum(&raw, tolerance)?,
        other => {
            return Err(usage(
                "instance",
                format!("unknown instance '{other}' (expected boolean, fuzzy, or quantum)"),
            ))
        }
    };

    Ok(LoadedProblem { raw, options, data })
}

fn state_field<'a>(raw: &'a ProblemFileRaw, key: &str) -> Result<&'a Value, CliError> {
    raw.state
        .get(key)
        .ok_or_else(|| usage(&format!("state.{key}"), "missing for this instance"))
}

fn parse_weights(value: &Value, path: &str) -> Result<Vec<f64>, CliError> {
    serde_json::from_value(value.clone()).map_err(|e| usage(path, e))
}

fn load_boolean(raw: &ProblemFileRaw) -> Result<ProblemData, CliError> {
    let sea = BooleanSea::new(raw.size).map_err(|e| usage("size", e))?;
    let weights = parse_weights(state_field(raw, "atom_weights")?, "state.atom_weights")?;
    if weights.len() != raw.size {
        return Err(usage(
            "state.atom_weights",
            format!("expected {} entries, got {}", raw.size, weights.len()),
        ));
    }
    let state = AtomWeights::new(weights).map_err(|e| usage("state.atom_weights", e))?;

    let mut partitions = IndexMap::new();
    for (name, elements) in &raw.partitions {
        let mut parsed = Vec::with_capacity(elements.len());
        for (i, element) in elements.iter().enumerate() {
            let path = format!("partitions.{name}[{i}]");
            let indices: Vec<usize> =
                serde_json::from_value(element.clone()).map_err(|e| usage(&path, e))?;
            parsed.push(sea.element(&indices).map_err(|e| usage(&path, e))?);
        }
        let partition = Partition::new(&sea, parsed)
            .map_err(|e| usage(&format!("partitions.{name}"), e))?;
        partitions.insert(name.clone(), partition);
    }
    Ok(ProblemData::Boolean {
        sea,
        state,
        partitions,
    })
}

fn load_fuzzy(raw: &ProblemFileRaw) -> Result<ProblemData, CliError> {
    let sea = FuzzySea::new(raw.size).map_err(|e| usage("size", e))?;
    let weights = parse_weights(state_field(raw, "point_weights")?, "state.point_weights")?;
    if weights.len() != raw.size {
        return Err(usage(
            "state.point_weights",
            format!("expected {} entries, got {}", raw.size, weights.len()),
        ));
    }
    let state = PointWeights::new(weights).map_err(|e| usage("state.point_weights", e))?;

    let mut partitions = IndexMap::new();
    for (name, elements) in &raw.partitions {
        let mut parsed = Vec::with_capacity(elements.len());
        for (i, element) in elements.iter().enumerate() {
            let path = format!("partitions.{name}[{i}]");
            let memberships: Vec<f64> =
                serde_json::from_value(element.clone()).map_err(|e| usage(&path, e))?;
            parsed.push(sea.element(memberships).map_err(|e| usage(&path, e))?);
        }
        let partition = Partition::new(&sea, parsed)
            .map_err(|e| usage(&format!("partitions.{name}"), e))?;
        partitions.insert(name.clone(), partition);
    }
    Ok(ProblemData::Fuzzy {
        sea,
        state,
        partitions,
    })
}

fn parse_matrix(value: &Value, dim: usize, path: &str) -> Result<ComplexMatrix, CliError> {
    let rows: Vec<Vec<[f64; 2]>> =
        serde_json::from_value(value.clone()).map_err(|e| usage(path, e))?;
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(usage(path, format!("expected a {dim}x{dim} matrix")));
    }
    let complex_rows: Vec<Vec<Complex64>> = rows
        .iter()
        .map(|row| row.iter().map(|[re, im]| Complex64::new(*re, *im)).collect())
        .collect();
    ComplexMatrix::from_rows(&complex_rows).map_err(|e| usage(path, e))
}

fn load_quantum(raw: &ProblemFileRaw, tolerance: Option<f64>) -> Result<ProblemData, CliError> {
    let sea = match tolerance {
        Some(tol) => QuantumSea::with_tolerance(raw.size, tol),
        None => QuantumSea::new(raw.size),
    }
    .map_err(|e| usage("size", e))?;

    let density = parse_matrix(state_field(raw, "density")?, raw.size, "state.density")?;
    let state = DensityMatrix::new(density).map_err(|e| usage("state.density", e))?;

    let mut partitions = IndexMap::new();
    for (name, elements) in &raw.partitions {
        let mut parsed = Vec::with_capacity(elements.len());
        for (i, element) in elements.iter().enumerate() {
            let path = format!("partitions.{name}[{i}]");
            let matrix = parse_matrix(element, raw.size, &path)?;
            parsed.push(sea.effect(matrix).map_err(|e| usage(&path, e))?);
        }
        let partition = Partition::new(&sea, parsed)
            .map_err(|e| usage(&format!("partitions.{name}"), e))?;
        partitions.insert(name.clone(), partition);
    }
    Ok(ProblemData::Quantum {
        sea,
        state,
        partitions,
    })
}

pub fn boolean_element_to_value(element: &BooleanElement) -> Value {
    serde_json::json!(element.indices())
}

pub fn fuzzy_element_to_value(element: &FuzzyElement) -> Value {
    serde_json::json!(element.memberships())
}

pub fn quantum_element_to_value(element: &QuantumEffect) -> Value {
    let rows: Vec<Vec<[f64; 2]>> = element
        .matrix()
        .rows()
        .iter()
        .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
        .collect();
    serde_json::json!(rows)
}

/// Serializes a problem file with a trailing newline.
pub fn write_problem(path: &Path, raw: &ProblemFileRaw) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(raw)
        .map_err(|e| CliError::Numeric(format!("serializing problem file: {e}")))?;
    text.push('\n');
    std::fs::write(path, text)
        .map_err(|e| CliError::Numeric(format!("{}: {e}", path.display())))
}
