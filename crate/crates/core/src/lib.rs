//! Exact graph-homomorphism counting and extremal verification at desk scale.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: source graphs ([`SimpleGraph`]), target graphs with loops
//!   ([`HGraph`]), graph6 and H-matrix formats, named constructions and
//!   canonical certificates.
//! - [`hom`]: exact counting of `hom(G, H)` by backtracking, forest dynamic
//!   programming, walk counting and closed forms.
//! - [`structure`]: 2-connectivity, ear decompositions, minimal
//!   2-connectivity.
//! - [`family`]: isomorph-free generation of trees and small graph families.
//! - [`extremal`]: target profiles, exact thresholds and the verification
//!   harnesses that produce [`extremal::VerificationReport`]s.

pub mod count;
pub mod error;
pub mod extremal;
pub mod family;
pub mod graph;
pub mod hom;
pub mod structure;

pub use count::ExactCount;
pub use error::{Error, Result};
pub use graph::{GraphCertificate, HGraph, SimpleGraph};
