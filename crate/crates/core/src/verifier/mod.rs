//! Instance-level checks of the spider and pineapple arguments and of the
//! two deletion recurrences for `Y_G`.

mod pineapple;
mod recurrence;
mod report;
mod spider;

pub use pineapple::{verify_pineapple, PineappleAudit, PineappleReport};
pub use recurrence::{verify_deletion_slice, verify_leaf_clique_slice, SliceIdentity};
pub use report::{Outcome, Report};
pub use spider::{
    audit_phi, c522_domain, classify_alpha, extract_c0, phi, phi_detailed, phi_inverse,
    sweep_cases, verify_elimination, verify_spider, CaseSweep, CaseTag, Elimination,
    EliminationRow, LegProfile, PhiAudit, PhiCase, PhiImage, SpiderOptions, SpiderReport,
    TorsoComponent, BRUTE_FORCE_CHECK_VERTICES, DEFAULT_CAP,
};
