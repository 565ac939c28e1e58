//! Per-replication seed derivation.
//!
//! Replication `i` of a run with base seed `s` is seeded with
//! `fmix32(fmix32(s) + i * 0x9E3779B9)` (wrapping arithmetic), where `fmix32`
//! is the MurmurHash3 finalizer. Both steps are bijections on 32-bit words,
//! so distinct indices always give distinct words. The word is then mapped
//! into the generator's admissible seed range.

use serde::{Deserialize, Serialize};

use crate::rng::GeneratorKind;

pub const INDEX_MULTIPLIER: u32 = 0x9e37_79b9;
pub const FMIX_C1: u32 = 0x85eb_ca6b;
pub const FMIX_C2: u32 = 0xc2b2_ae35;

/// Description of the mixing function, recorded in manifests.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedMixing {
    pub function: String,
    pub index_multiplier: String,
    pub fmix_c1: String,
    pub fmix_c2: String,
}

impl SeedMixing {
    pub fn current() -> Self {
        Self {
            function: "fmix32(fmix32(base) + index * index_multiplier)".into(),
            index_multiplier: format!("{INDEX_MULTIPLIER:#010x}"),
            fmix_c1: format!("{FMIX_C1:#010x}"),
            fmix_c2: format!("{FMIX_C2:#010x}"),
        }
    }
}

#[inline]
pub fn fmix32(mut h: u32) -> u32 {
    h ^= h >> 16;
    h = h.wrapping_mul(FMIX_C1);
    h ^= h >> 13;
    h = h.wrapping_mul(FMIX_C2);
    h ^= h >> 16;
    h
}

/// The raw 32-bit mixed word for replication `index`.
#[inline]
pub fn mix_seed(base_seed: u32, index: u32) -> u32 {
    fmix32(fmix32(base_seed).wrapping_add(index.wrapping_mul(INDEX_MULTIPLIER)))
}

/// Seed for replication `index`, valid for `kind`.
///
/// The twister takes the mixed word as is. RANDU maps it to the odd residue
/// `2 * (w mod 2^30) + 1`, MINSTD to `1 + w mod (2^31 - 2)`; these
/// reductions can collide, unlike the twister's identity map.
pub fn derive_seed(kind: GeneratorKind, base_seed: u32, index: u32) -> u32 {
    let w = mix_seed(base_seed, index);
    match kind {
        GeneratorKind::Mt19937 => w,
        GeneratorKind::Randu => ((w & 0x3fff_ffff) << 1) | 1,
        GeneratorKind::Minstd => 1 + w % 0x7fff_fffe,
    }
}
