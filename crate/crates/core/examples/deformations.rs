//! Filtered deformations as sums of graded cochains.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nilsum::deform::{
    check_maurer_cartan, conjugated_deformation, decompose_deformation, random_degree_raising_map,
    root_decomposition, weight_vanishing_check,
};
use nilsum::driver::suites::standard_graded_sum;
use nilsum::Fp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Fp::new(5)?;
    let gsum = standard_graded_sum(f)?;
    let g = gsum.graded();
    let mut rng = ChaCha8Rng::seed_from_u64(3);

    let deformed = conjugated_deformation(g, &random_degree_raising_map(g, &mut rng))?;
    let psis = decompose_deformation(&deformed, g)?;
    let weights: Vec<i64> = psis.iter().map(|(s, _)| *s).collect();
    let mc = check_maurer_cartan(g, &psis);
    println!(
        "pieces of weight {weights:?}, all residuals zero: {}",
        mc.all_zero
    );

    let t = gsum.torus()?;
    println!(
        "root spaces of e_0 ⊗ 1: {:?}",
        root_decomposition(g.algebra(), &t)?.dims()
    );
    for k in 1..5 {
        let r = weight_vanishing_check(g, &t, k)?;
        println!(
            "k={k}: {} elementary cochains, invariant dim {}",
            r.elementary_cochains, r.invariant_dim
        );
    }
    Ok(())
}
