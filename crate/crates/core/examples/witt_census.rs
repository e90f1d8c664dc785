//! Nilpotent-element subalgebras of `W_m` without invariant ideals.

use nilsum::filtgrade::{witt_census, CensusMode};
use nilsum::Fp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for p in [3, 5] {
        let r = witt_census(Fp::new(p)?, 1, CensusMode::Exhaustive { budget: 1_000_000 })?;
        println!(
            "p={p} m=1: {} subalgebras, {} qualifying, dims {:?}",
            r.subalgebras, r.qualifying, r.qualifying_dims
        );
    }
    let r = witt_census(
        Fp::new(3)?,
        2,
        CensusMode::Sample {
            samples: 500,
            seed: 1,
        },
    )?;
    println!(
        "p=3 m=2 sampled: {} nilpotent, {} qualifying, dims {:?}, all below {}: {}",
        r.nilpotent_element, r.qualifying, r.qualifying_dims, r.bound, r.all_below_bound
    );
    Ok(())
}
