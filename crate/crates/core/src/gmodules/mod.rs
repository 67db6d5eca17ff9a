//! Restricted W(1)-modules: the natural module, Verma modules, simples, the
//! adjoint module, tensor products, subquotients and weight decompositions.

mod constructors;
mod label;
mod module;
mod weights;

pub use constructors::{
    adjoint_module, direct_sum, monomial_name, natural_module, simple_module,
    tensor_product, tensor_square_natural, verma_module,
};
pub use label::SimpleLabel;
pub use module::{format_combination, is_module_isomorphism, GradedGModule, Subquotient};
pub use weights::{identify_simple, weight_decomposition, weight_dims, weight_of};
