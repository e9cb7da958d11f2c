//! Connectivity tests, ear decompositions and minimally 2-connected graphs.

mod attach;
mod connectivity;
mod ears;
mod minimal;

pub use attach::{find_attached_path, Attachment};
pub use connectivity::{articulation_points, bridges, is_2_connected, is_2_edge_connected};
pub use ears::{
    check_decomposition, ear_decomposition, open_ear_decomposition, Ear, EarDecomposition,
};
pub use minimal::{
    check_normal_form, has_chorded_cycle, is_minimally_2_connected, normal_form_ears,
    NormalFormEars, CHORD_ORACLE_LIMIT,
};
