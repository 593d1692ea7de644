use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::Context;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::Cli;

pub const MANIFEST_SCHEMA: &str = "qramsey.manifest/1";

/// Sidecar describing one run: enough to repeat it and to check that the
/// repeat produced the same bytes.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub schema: &'static str,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub argv: Vec<String>,
    pub params: Value,
    pub seed: Option<u64>,
    /// SHA-256 of every file read, keyed by path.
    pub inputs: BTreeMap<String, String>,
    /// SHA-256 of every file written, keyed by path.
    pub outputs: BTreeMap<String, String>,
    pub wall_time_seconds: f64,
}

fn digest(path: &Path) -> anyhow::Result<String> {
    let bytes = fs::read(path).with_context(|| format!("hashing {}", path.display()))?;
    Ok(hex::encode(Sha256::digest(&bytes)))
}

fn digests(paths: &[PathBuf]) -> anyhow::Result<BTreeMap<String, String>> {
    paths.iter().map(|p| Ok((p.display().to_string(), digest(p)?))).collect()
}

impl RunManifest {
    pub fn build(
        cli: &Cli,
        seed: Option<u64>,
        inputs: &[PathBuf],
        outputs: &[PathBuf],
        wall: Duration,
    ) -> anyhow::Result<Self> {
        let params = serde_json::to_value(cli)?;
        let command = params["command"]["command"].as_str().unwrap_or_default().to_string();
        Ok(RunManifest {
            schema: MANIFEST_SCHEMA,
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command,
            argv: std::env::args().collect(),
            params,
            seed,
            inputs: digests(inputs)?,
            outputs: digests(outputs)?,
            wall_time_seconds: wall.as_secs_f64(),
        })
    }
}
