//! Derived and lower central series, and the predicates built on them.

use nilsum::construct::{classical, module_example};
use nilsum::{Fp, LieAlgebra};

fn describe(name: &str, l: &LieAlgebra) -> nilsum::Result<()> {
    let whole = l.whole();
    println!("{name}");
    println!(
        "  derived series dims        {:?}",
        l.derived_series(&whole)?.dims()
    );
    println!(
        "  lower central series dims  {:?}",
        l.lower_central_series(&whole)?.dims()
    );
    println!(
        "  solvable {}  nilpotent {}",
        l.is_solvable(&whole)?,
        l.is_nilpotent(&whole)?
    );
    println!(
        "  center dim {}  one-dim ideals {}",
        l.center().dim(),
        l.one_dim_ideals(1 << 20)?.len()
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Fp::new(5)?;
    describe("sl2", &classical::sl2(f)?)?;
    describe("upper triangular 3x3", &classical::upper_triangular(f, 3)?)?;
    describe("heisenberg", &classical::heisenberg(f))?;
    // solvable, yet without a single one-dimensional ideal
    describe(
        "heisenberg-weyl on V",
        &module_example("heisenberg_weyl", f)?.semidirect()?,
    )?;
    Ok(())
}
