//! Globalizations: enveloping actions and enveloping coactions, with certificates.

mod action;
mod coaction;

pub use action::{
    check_admissible, enveloping_action, eval_at_unit, h_span, hom_model, phi_embed, verify_action_globalization,
    ActionGlobalization, EnvelopingActionResult,
};
pub use coaction::{
    comodule_generated, enveloping_coaction, psi_compatibility, verify_coaction_globalization, CoactionGlobalization,
    EnvelopingCoactionResult,
};
