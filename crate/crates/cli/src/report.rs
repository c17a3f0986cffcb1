//! Machine-readable report files and the aligned human tables printed to
//! standard output.
//!
//! Reports are deterministic: the config hash covers only the semantic
//! request (never worker counts or output paths), and wall-clock timings
//! stay on stdout, so identical requests serialize byte-identically.

use std::path::Path;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use sea_verify::{AxiomsReport, CampaignReport, LogSumReport, ScenarioRecord};

use crate::CliError;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportFile {
    pub version: String,
    pub command: String,
    pub config_hash: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quantities: Option<IndexMap<String, f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<IndexMap<String, bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub campaign: Option<CampaignReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axioms: Option<AxiomsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub logsum: Option<LogSumReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scenarios: Option<Vec<ScenarioRecord>>,
}

impl ReportFile {
    pub fn new<T: Serialize>(command: &str, request: &T) -> Self {
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            config_hash: config_hash(command, request),
            quantities: None,
            verdicts: None,
            campaign: None,
            axioms: None,
            logsum: None,
            scenarios: None,
        }
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        let mut text = serde_json::to_string_pretty(self)
            .map_err(|e| CliError::Numeric(format!("serializing report: {e}")))?;
        text.push('\n');
        std::fs::write(path, text)
            .map_err(|e| CliError::Numeric(format!("{}: {e}", path.display())))
    }
}

/// SHA-256 of the command name plus its semantic request, hex-encoded.
pub fn config_hash<T: Serialize>(command: &str, request: &T) -> String {
    let payload =
        serde_json::to_string(&(command, request)).expect("request types always serialize");
    let digest = Sha256::digest(payload.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn print_quantities(quantities: &IndexMap<String, f64>) {
    let width = quantities.keys().map(|k| k.len()).max().unwrap_or(0);
    for (name, value) in quantities {
        println!("  {name:<width$}  {value:.15}");
    }
}

pub fn print_verdicts(verdicts: &IndexMap<String, bool>) {
    let width = verdicts.keys().map(|k| k.len()).max().unwrap_or(0);
    for (name, verdict) in verdicts {
        println!("  {name:<width$}  {}", if *verdict { "ok" } else { "VIOLATED" });
    }
}

pub fn print_law_table(laws: &[sea_verify::LawStats]) {
    let width = laws.iter().map(|l| l.law.len()).max().unwrap_or(3).max(3);
    println!(
        "  {:<width$}  {:>8}  {:>8}  {:>14}  {:>8}",
        "law", "passes", "failures", "worst residual", "at trial"
    );
    for law in laws {
        println!(
            "  {:<width$}  {:>8}  {:>8}  {:>14.3e}  {:>8}",
            law.law, law.passes, law.failures, law.worst_residual, law.worst_trial
        );
    }
}

pub fn print_scenario(record: &ScenarioRecord) {
    println!("scenario {}", record.id);
    let width = record.values.keys().map(|k| k.len()).max().unwrap_or(0);
    for (name, value) in &record.values {
        println!("  {name:<width$}  {value:.12e}");
    }
    print_verdicts(&record.verdicts);
}
