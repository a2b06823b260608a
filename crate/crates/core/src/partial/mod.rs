//! Partial and global (co)actions, induced structures and the canonical pairing.

mod action;
mod coaction;
mod induced;
mod kind;
mod pairing;

pub use action::{verify_global_action, verify_partial_action, ActionData, GlobalActionData, PartialActionData};
pub use coaction::{
    contract_right, verify_global_coaction, verify_partial_coaction, CoactionData, GlobalCoactionData, PartialCoactionData,
};
pub use induced::{induced_partial_action, induced_partial_coaction, subspace_labels, unital_right_ideal};
pub use kind::{Global, Kind, Partial};
pub use pairing::{action_to_coaction, canonical_pairing, coaction_to_action, verify_pairing, PairingData};
