use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Candidate, Shard};
use crate::error::{Error, Result};

const FORMAT: u32 = 1;

/// Search state after a prefix of shards: the merged prefilter pool is
/// enough to finish, because pool merging is order independent.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub format: u32,
    pub config_hash: String,
    pub total_shards: usize,
    pub completed_shards: Vec<Shard>,
    pub candidates_evaluated: u64,
    pub max_magnitude_bits: u64,
    pub pool: Vec<Candidate>,
}

impl Checkpoint {
    pub fn new(config_hash: String, total_shards: usize) -> Self {
        Self {
            format: FORMAT,
            config_hash,
            total_shards,
            completed_shards: Vec::new(),
            candidates_evaluated: 0,
            max_magnitude_bits: 0f64.to_bits(),
            pool: Vec::new(),
        }
    }
}

/// Writes through a temporary file and a rename.
pub fn checkpoint_write(path: &Path, state: &Checkpoint) -> Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, serde_json::to_vec(state)?)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Loads a checkpoint, or `None` when the file does not exist.
///
/// A checkpoint written for a different configuration is rejected.
pub fn checkpoint_resume(path: &Path, config_hash: &str) -> Result<Option<Checkpoint>> {
    let bytes = match fs::read(path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let state: Checkpoint = serde_json::from_slice(&bytes)?;
    if state.format != FORMAT {
        return Err(Error::Checkpoint(format!(
            "unsupported format {} in {}",
            state.format,
            path.display()
        )));
    }
    if state.config_hash != config_hash {
        return Err(Error::Checkpoint(format!(
            "config hash mismatch: {} was written for {}, current config is {}",
            path.display(),
            state.config_hash,
            config_hash
        )));
    }
    Ok(Some(state))
}
