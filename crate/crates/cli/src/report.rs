use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::CliError;

pub const SCHEMA: &str = "kampen.report/1";

/// Everything a run prints. Only `timing` may differ between identical runs.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub command: String,
    pub input_digest: String,
    pub parameters: Value,
    pub results: Value,
    pub timing: Timing,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

/// What a subcommand hands back before the report is assembled.
pub struct Outcome {
    pub parameters: Value,
    pub results: Value,
    /// False for a negative verdict (exit status 1).
    pub positive: bool,
}

/// Reads input files and hashes them in the order they are loaded.
pub struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    pub fn new(command: &str) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(command.as_bytes());
        Self { hasher }
    }

    pub fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        })?;
        self.hasher.update([0u8]);
        self.hasher.update(text.as_bytes());
        Ok(text)
    }

    pub fn finish(mut self, parameters: &Value) -> String {
        self.hasher.update([0u8]);
        self.hasher.update(parameters.to_string().as_bytes());
        hex::encode(self.hasher.finalize())
    }
}

pub fn assemble(command: &str, inputs: Inputs, outcome: Outcome, started: Instant) -> (RunReport, bool) {
    let input_digest = inputs.finish(&outcome.parameters);
    let report = RunReport {
        schema: SCHEMA,
        command: command.to_owned(),
        input_digest,
        parameters: outcome.parameters,
        results: outcome.results,
        timing: Timing {
            elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
        },
    };
    (report, outcome.positive)
}
