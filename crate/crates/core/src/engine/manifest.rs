//! Reproducibility manifests.
//!
//! A manifest is a TOML document. Keys, in order:
//!
//! | key | meaning |
//! |-----|---------|
//! | `version` | schema version, currently 1 |
//! | `tool_version` | version of the producing crate |
//! | `generator` | `mt19937`, `randu` or `minstd` |
//! | `base_seed` | seed supplied by the user |
//! | `conversion` | word-to-real conversion used by the model |
//! | `replications` | number of replications |
//! | `derived_seeds` | seed of each replication, index order |
//! | `draws_consumed` | 32-bit words drawn by each replication |
//! | `digest` | FNV-1a 64 of the outputs, hex |
//! | `[seed_mixing]` | seed derivation function and constants |
//! | `[model]` | `id`, `draws_per_replication` and `[model.params]` |
//!
//! The digest hashes each output rendered by [`crate::format_real`]
//! followed by a newline, in replication order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::seeds::SeedMixing;
use crate::error::{Error, Result};
use crate::rng::{GeneratorKind, RealConversion};
use crate::scalar::Real;
use crate::{fnv1a64, format_real};

pub const MANIFEST_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub id: String,
    pub draws_per_replication: u64,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReproducibilityManifest {
    pub version: u32,
    pub tool_version: String,
    pub generator: GeneratorKind,
    pub base_seed: u32,
    pub conversion: RealConversion,
    pub replications: u32,
    pub derived_seeds: Vec<u32>,
    pub draws_consumed: Vec<u64>,
    pub digest: String,
    pub seed_mixing: SeedMixing,
    pub model: ModelSpec,
}

impl ReproducibilityManifest {
    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Manifest(e.to_string()))
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let m: Self = toml::from_str(text).map_err(|e| Error::Manifest(e.to_string()))?;
        if m.version != MANIFEST_VERSION {
            return Err(Error::Manifest(format!(
                "unsupported manifest version {} (expected {MANIFEST_VERSION})",
                m.version
            )));
        }
        if m.derived_seeds.len() != m.replications as usize
            || m.draws_consumed.len() != m.replications as usize
        {
            return Err(Error::Manifest(
                "per-replication lists disagree with the replication count".into(),
            ));
        }
        Ok(m)
    }
}

pub fn digest_outputs<T: Real>(outputs: &[T]) -> u64 {
    let mut text = String::with_capacity(outputs.len() * 24);
    for v in outputs {
        text.push_str(&format_real(v.to_f64().unwrap_or(f64::NAN)));
        text.push('\n');
    }
    fnv1a64(text.as_bytes())
}

pub fn format_digest(digest: u64) -> String {
    format!("{digest:#018x}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ReproducibilityManifest {
        ReproducibilityManifest {
            version: MANIFEST_VERSION,
            tool_version: "0.1.0".into(),
            generator: GeneratorKind::Mt19937,
            base_seed: 5489,
            conversion: RealConversion::HalfOpen,
            replications: 2,
            derived_seeds: vec![1, 2],
            draws_consumed: vec![10, 10],
            digest: format_digest(digest_outputs(&[1.0, 2.0])),
            seed_mixing: SeedMixing::current(),
            model: ModelSpec {
                id: "constant".into(),
                draws_per_replication: 10,
                params: BTreeMap::from([("value".to_string(), 7.0)]),
            },
        }
    }

    #[test]
    fn toml_round_trip_keeps_version_first() {
        let m = sample();
        let text = m.to_toml().unwrap();
        assert!(text.starts_with("version = 1\n"), "{text}");
        assert_eq!(ReproducibilityManifest::from_toml(&text).unwrap(), m);
    }

    #[test]
    fn rejects_other_versions_and_ragged_lists() {
        let mut m = sample();
        m.version = 9;
        assert!(ReproducibilityManifest::from_toml(&m.to_toml().unwrap()).is_err());
        let mut m = sample();
        m.derived_seeds.pop();
        assert!(ReproducibilityManifest::from_toml(&m.to_toml().unwrap()).is_err());
    }

    #[test]
    fn digest_depends_on_order() {
        assert_ne!(digest_outputs(&[1.0, 2.0]), digest_outputs(&[2.0, 1.0]));
        assert_eq!(digest_outputs(&[1.0f32]), digest_outputs(&[1.0f64]));
    }
}
