//! Builds the named algebras and checks the Jacobi identity on each.
//!
//! ```text
//! cargo run --example constructions
//! ```

use nilsum::construct::{classical, zassenhaus, zassenhaus_matches_witt, WittAlgebra};
use nilsum::driver::AlgebraSpec;
use nilsum::Fp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f5 = Fp::new(5)?;
    let f7 = Fp::new(7)?;

    let sl2 = classical::sl2(f7)?;
    println!(
        "sl2 over GF(7): dim {}, valid {}",
        sl2.dim(),
        sl2.validate_structure().is_valid()
    );

    let w = WittAlgebra::new(f5, 2, 1 << 16)?;
    println!("W_2 over GF(5): dim {}", w.algebra().dim());

    let z = zassenhaus(f5, 1)?;
    println!("Zassenhaus W_1(1): degrees {:?}", z.degrees());
    println!(
        "matches Der(O_1) after rescaling: {}",
        zassenhaus_matches_witt(f5)?
    );

    // the same algebras through the spec language
    for src in [
        "witt:p=3,m=2",
        "zassenhaus:p=5,n=2",
        "G:S=zassenhaus(p=5,n=1),m=1,D=span(d1)",
        "semidirect:heisenberg_weyl,p=5",
    ] {
        let built = AlgebraSpec::parse(src)?.build()?;
        let report = built.algebra.validate_structure();
        println!(
            "{src:<42} dim {:>3}  triples {:>5}  violations {}",
            built.algebra.dim(),
            report.triples_checked,
            report.violations.len()
        );
    }
    Ok(())
}
