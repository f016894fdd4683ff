//! Actions of H_{2n²} on quantum polynomial algebras.

pub mod act;
pub mod classify;
pub mod enumerate;
pub mod spec;
pub mod symbolic;
pub mod verify;

pub use act::{closed_form_z_scalar, normal_word, Gen, LinearAction};
pub use classify::{classify_h8_quantum_plane, ClassificationReport, SwapOutcome, TorusOutcome, Verdict};
pub use enumerate::{enumerate_actions, enumerate_actions_with_q, EnumeratedAction};
pub use spec::{
    format_cycles, has_invertible_b, is_inner_faithful, parse_cycles, permutations, ActionSpec, BMatrix,
    InnerFaithfulness,
};
pub use verify::{
    annihilator_dimension, annihilator_group_check, annihilator_group_check_spec, check_action_compat, check_action_compat_with_q,
    check_closed_form_degree_two, verify_action, verify_module_algebra, AnnihilatorCheck, DEFAULT_DEGREE_BOUND,
};
