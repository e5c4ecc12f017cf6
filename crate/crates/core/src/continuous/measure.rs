use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::altgroup::{in_affine_fundamental_domain, MAX_TABLE_DIMENSION};
use crate::error::{Error, Result};

/// Monte Carlo estimate of the volume of the open affine fundamental domain:
/// the fraction of uniform torus samples that land in it.
pub fn fundamental_domain_volume(n: usize, samples: usize, seed: u64) -> Result<f64> {
    if n == 0 || n > MAX_TABLE_DIMENSION {
        return Err(Error::SizeLimit {
            what: "dimension",
            got: n,
            min: 1,
            max: MAX_TABLE_DIMENSION,
        });
    }
    if samples == 0 {
        return Err(Error::Precondition("need at least one sample".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = vec![0.0; n];
    let mut hits = 0usize;
    for _ in 0..samples {
        x.iter_mut().for_each(|xi| *xi = rng.random::<f64>());
        if in_affine_fundamental_domain(&x) {
            hits += 1;
        }
    }
    Ok(hits as f64 / samples as f64)
}
