//! Weisfeiler filtrations, associated graded algebras and graded embeddings.

use nilsum::construct::{zassenhaus, GradedSum, WittAlgebra};
use nilsum::filtgrade::{associated_graded, gr_embed, weisfeiler_filtration};
use nilsum::{Fp, Subspace};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Fp::new(5)?;
    let w = WittAlgebra::new(f, 1, 1 << 16)?;
    let d = Subspace::span(f, w.algebra().dim(), &[w.partial(0)]);
    let g = GradedSum::new(&zassenhaus(f, 1)?, &w, &d)?;
    let l = g.algebra();

    let filt = weisfeiler_filtration(l, &g.graded().degree_at_least(0))?;
    println!("filtration dims {:?}", filt.dims());
    if let Some(choice) = filt.choice() {
        println!("L_-1 chosen by {}", choice.rule);
    }

    let gr = associated_graded(l, &filt)?;
    println!("gr dims      {:?}", gr.graded().component_dims());
    println!("grading dims {:?}", g.graded().component_dims());

    let b = g.tensor_block(-1)?.sum(&g.d_part())?;
    let b = l.subalgebra_closure(&b);
    let emb = gr_embed(l, &b, &filt)?;
    println!(
        "gr B for dim B = {}: injective {}, brackets preserved {}",
        b.dim(),
        emb.is_injective(),
        emb.preserves_brackets()
    );
    Ok(())
}
