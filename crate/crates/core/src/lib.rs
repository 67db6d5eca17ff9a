//! Exact computations with restricted representations of the Witt algebra
//! W(1) over F_p: constructing modules, decomposing them, and checking the
//! composition structure of A(1) ⊗ A(1).

pub mod error;
pub mod ff_linalg;
pub mod gmodules;
pub mod module_structure;
pub mod report;
pub mod tensor_pipeline;
pub mod witt_algebra;

pub use error::{Error, Result};
