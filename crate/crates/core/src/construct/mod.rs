//! The pending-vertex/twin construction of BDH graphs and the
//! series/parallel construction of 2-connected SP graphs, with recognizers.

mod bdh;
mod minor;
mod sp;

pub use bdh::{bdh_check_forbidden, bdh_recognize, replay_bdh, BdhStep, DefiningSequence, ForbiddenCheck};
pub(crate) use bdh::{not_bdh, reroot};
pub use minor::{has_minor, MinorPattern, MAX_MINOR_VERTICES};
pub use sp::{
    replay_sp, sp_recognize, sp_recognize_mapped, sp_reduces_to_digon, SpConstruction, SpRecognition, SpStep,
};
