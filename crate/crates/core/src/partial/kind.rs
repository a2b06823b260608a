//! Marker types distinguishing partial from global (co)actions.

use crate::report::VerificationReport;

use super::action::{verify_global_action, verify_partial_action, ActionData};
use super::coaction::{verify_global_coaction, verify_partial_coaction, CoactionData};

mod sealed {
    pub trait Sealed {}
    impl Sealed for super::Partial {}
    impl Sealed for super::Global {}
}

pub trait Kind: sealed::Sealed + Clone + PartialEq + Eq + Sized {
    const ACTION_NAME: &'static str;
    const COACTION_NAME: &'static str;
    const CARRIER_UNITAL: bool;

    fn verify_action(a: &ActionData<Self>) -> VerificationReport;
    fn verify_coaction(c: &CoactionData<Self>) -> VerificationReport;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Partial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Global;

impl Kind for Partial {
    const ACTION_NAME: &'static str = "partial action";
    const COACTION_NAME: &'static str = "partial coaction";
    const CARRIER_UNITAL: bool = true;

    fn verify_action(a: &ActionData<Self>) -> VerificationReport {
        verify_partial_action(a)
    }

    fn verify_coaction(c: &CoactionData<Self>) -> VerificationReport {
        verify_partial_coaction(c)
    }
}

impl Kind for Global {
    const ACTION_NAME: &'static str = "global action";
    const COACTION_NAME: &'static str = "global coaction";
    const CARRIER_UNITAL: bool = false;

    fn verify_action(a: &ActionData<Self>) -> VerificationReport {
        verify_global_action(a)
    }

    fn verify_coaction(c: &CoactionData<Self>) -> VerificationReport {
        verify_global_coaction(c)
    }
}
