//! Verification campaigns: reproducible, budgeted runs that check the
//! library's constructions on many instances and report one line each.
//!
//! Instance `i` of a campaign with seed `k` draws from ChaCha8 stream `i`
//! of seed `k`, so every line can be regenerated on its own.

mod campaigns;
mod report;
mod suites;

pub use campaigns::*;
pub use report::*;
pub use suites::*;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The random source for instance `id` of a campaign seeded with `seed`.
pub fn instance_rng(seed: u64, id: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id as u64);
    rng
}
