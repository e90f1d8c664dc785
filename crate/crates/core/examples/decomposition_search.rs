//! Searching for `L = A + B` with `A` and `B` nilpotent subalgebras.

use nilsum::driver::{search_decomposition, AlgebraSpec, SearchBudget, SearchMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let runs = [
        ("sl2:p=7", SearchMode::Exhaustive),
        ("uppertriangular:n=3,p=7", SearchMode::Exhaustive),
        (
            "semidirect:heisenberg_weyl,p=5",
            SearchMode::Randomized {
                samples: 200,
                seed: 7,
            },
        ),
        ("semidirect:two_dim_nonabelian,p=3", SearchMode::Exhaustive),
        ("zassenhaus:p=5,n=1", SearchMode::Exhaustive),
    ];
    for (src, mode) in runs {
        let l = AlgebraSpec::parse(src)?.build()?.algebra;
        let r = search_decomposition(&l, mode, SearchBudget::default())?;
        print!(
            "{src:<36} {:?}  scanned {:>6}  nilpotent {:>4}",
            r.status, r.stats.subspaces_scanned, r.stats.nilpotent_count
        );
        match &r.witness {
            Some(w) => println!("  dims {} + {} via {}", w.dim_a, w.dim_b, w.source),
            None => println!(),
        }
    }
    Ok(())
}
