//! Reproducible random streams.
//!
//! Every stochastic routine takes an [`RngSeed`]. A seed names one stream:
//! the ChaCha key is a hash of `(master, index)`, so replicate `i` of an
//! experiment gets the same numbers no matter which thread runs it or in
//! which order replicates are scheduled.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngSeed {
    pub master: u64,
    pub index: u64,
}

impl RngSeed {
    pub const fn new(master: u64) -> Self {
        Self { master, index: 0 }
    }

    /// Stream for replicate `index` under the same master seed.
    pub const fn replicate(self, index: u64) -> Self {
        Self {
            master: self.master,
            index,
        }
    }

    /// Independent child seed, e.g. for a sub-task of a replicate.
    pub fn derive(self, tag: u64) -> Self {
        Self {
            master: mix(mix(self.master, self.index), tag ^ 0xa076_1d64_78bd_642f),
            index: 0,
        }
    }

    /// Child seed keyed by an arbitrary sequence of words (e.g. a node set).
    pub fn derive_from_words(self, words: impl IntoIterator<Item = u64>) -> Self {
        let mut h = mix(self.master, self.index);
        for w in words {
            h = mix(h, w);
        }
        Self {
            master: h,
            index: 0,
        }
    }

    pub fn stream(self) -> ChaCha8Rng {
        let mut key = [0u8; 32];
        let mut state = mix(self.master, self.index);
        for chunk in key.chunks_exact_mut(8) {
            state = splitmix64(state);
            chunk.copy_from_slice(&state.to_le_bytes());
        }
        ChaCha8Rng::from_seed(key)
    }
}

impl Default for RngSeed {
    fn default() -> Self {
        Self::new(0)
    }
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn mix(a: u64, b: u64) -> u64 {
    splitmix64(splitmix64(a) ^ b.rotate_left(17))
}
