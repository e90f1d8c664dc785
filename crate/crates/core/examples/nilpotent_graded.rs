//! Structural checks on nilpotent graded subalgebras of `W_1(1) ⊗ O_1 + ⟨∂⟩`.

use nilsum::driver::suites::{standard_graded_sum, standard_nilpotent};
use nilsum::filtgrade::{check_graded_nilpotent, check_nilpotent_structure, dimension_audit};
use nilsum::Fp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = standard_graded_sum(Fp::new(5)?)?;
    let n = standard_nilpotent(&g)?;
    println!("N has dim {}", n.dim());
    println!("{:#?}", check_graded_nilpotent(&g, &n)?);
    println!("{:#?}", check_nilpotent_structure(&g, &n)?);
    println!("{:#?}", dimension_audit(&g, &n));

    // adding the torus e_0 ⊗ 1 destroys nilpotency, and the witness shows why
    let bigger = g
        .algebra()
        .subalgebra_closure(&n.with_vectors(&[g.torus()?]));
    if let Some(w) = check_nilpotent_structure(&g, &bigger)?.nonnilpotency_witness {
        println!(
            "ad(e_0 ⊗ {})^p maps e_-1 ⊗ 1 to itself: {}",
            w.f, w.returns_to_start
        );
    }
    Ok(())
}
