use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::experiments::ExperimentConfig;

/// Provenance record written next to every set of artifacts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub config_hash: String,
    pub tool_version: String,
    pub timestamp: String,
    pub output_paths: Vec<PathBuf>,
    pub config: ExperimentConfig,
}

/// SHA-256 of the compact JSON encoding of the resolved configuration.
pub fn config_hash(config: &ExperimentConfig) -> String {
    let bytes = serde_json::to_vec(&config.resolved()).expect("config serializes");
    hex::encode(Sha256::digest(&bytes))
}

impl RunManifest {
    pub fn new(command: &str, config: &ExperimentConfig, output_paths: Vec<PathBuf>) -> Self {
        Self {
            command: command.to_string(),
            config_hash: config_hash(config),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            output_paths,
            config: config.resolved(),
        }
    }
}
