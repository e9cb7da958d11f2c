//! Target profiles, exact threshold searches and theorem-verification
//! harnesses.
//!
//! Statements that hold for every `n` (star maximality among trees, path
//! minimality for `H°(ℓ)`, cycle maximality for `K_q`, the endpoint-pinned
//! path bound, Hoffman-London) are checked in [`Mode::Hard`]. The
//! `K_{2,n-2}` statement is asymptotic, so its harness runs in
//! [`Mode::Report`] and only records what happens at the given `n`.

mod pool;
mod profile;
mod report;
mod thresholds;
mod verify;

pub use pool::{regular_bases, standard_pool, NamedTarget};
pub use profile::{profile, HProfile};
pub use report::{
    describe_h, EqualityClass, Hypothesis, Mode, PairWitness, ReportRow, Verdict,
    VerificationReport, Witness,
};
pub use thresholds::{
    check_lemma10, cycle_bound_threshold, cycle_bound_threshold_with_cutoff, default_cutoff,
    path_bound_threshold, path_bound_threshold_with_cutoff, CycleThreshold, Lemma10Report,
};
pub use verify::{
    search_tree_min_violation, verify_2conn_max, verify_2conn_max_on, verify_cycle_kq,
    verify_cycle_kq_on, verify_hoffman_london, verify_tree_max, verify_tree_min,
    HoffmanLondonReport, HoffmanLondonRow,
};
