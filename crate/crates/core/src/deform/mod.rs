//! Graded 2-cochain calculus for filtered deformations of a graded Lie
//! algebra: coboundaries, the `*` product, Maurer–Cartan residuals, and
//! toral weights.

mod calculus;
mod cochain;
mod torus;

pub use calculus::{
    check_maurer_cartan, coboundary1, coboundary2, conjugated_deformation, decompose_deformation,
    random_degree_raising_map, reassemble, star, MaurerCartanReport, WeightResidual,
};
pub use cochain::{pair_count, pair_index, Cochain1, Cochain2, Cochain3};
pub use torus::{
    cochain_torus_weights, elementary_torus_image, root_decomposition, torus_action,
    weight_vanishing_check, RootDecomposition, WeightVanishingReport,
};
