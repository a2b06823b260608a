//! Smash products and the duality isomorphisms for partial actions.

mod bm;
mod cm;
mod endb;
mod lambda_rho;
mod smash;

pub use bm::{bm_decomposition, bm_phi_psi, bm_restricted, unital_globalization, BmDecomposition, BmIsomorphism, UnitalGlobalization};
pub use cm::{cohen_montgomery_group, CohenMontgomery, IdealFamily};
pub use endb::{endb_module, intertwiners, restrict_operator, EndBRealization};
pub use lambda_rho::{
    coregular_action, comodule_from_action, hit_action, lambda_operator, lambda_rho_iso, right_hit_operator, LambdaRho,
};
pub use smash::{double_smash, dual_action_on_smash, partial_smash, partial_smash_ambient, smash_product, PartialSmashData, SmashProductData};
