use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Derives an independent sub-seed from a master seed and a list of keys
/// (stream tags, instance indices). Results never depend on scheduling.
pub(crate) fn derive(master: u64, keys: &[u64]) -> u64 {
    keys.iter().fold(splitmix64(master), |acc, k| splitmix64(acc ^ splitmix64(*k)))
}

pub(crate) fn rng(master: u64, keys: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive(master, keys))
}
