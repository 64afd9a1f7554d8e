use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub(crate) type Rng = ChaCha8Rng;

/// Seeded generator for one logical stream. `stream` separates independent
/// uses of the same user seed so that they do not share draws.
pub(crate) fn seeded(seed: u64, stream: u64) -> Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
