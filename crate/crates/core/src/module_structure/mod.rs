//! Structural algorithms for restricted W(1)-modules: spinning, lowest-weight
//! vectors, minimal submodules and socles, and composition series.
//!
//! Everything rests on two facts about restricted modules: ρ(e_{-1}) is
//! nilpotent and ρ(e_0) is diagonalisable over F_p. Hence every nonzero
//! submodule contains an e_0-weight vector killed by e_{-1}, and submodules
//! can be found by spinning such vectors.

mod minimal;
mod series;
mod spin;

pub use minimal::{
    is_indecomposable_via_socle, is_simple, lowest_weight_vectors, minimal_submodules,
    minimal_submodules_over, minimal_submodules_with_cap, socle, LowestWeightSpaces,
    DEFAULT_ENUMERATION_CAP,
};
pub use series::{
    composition_series, composition_series_with, grothendieck_vector, CompositionReport,
    CompositionSeries,
};
pub use spin::{graded_bplus_spin, graded_bplus_spin_dims, spin};
