//! Graph value types, text formats, named constructions and canonical forms.

mod canon;
mod construct;
mod graph6;
mod hgraph;
mod simple;

pub use canon::{
    canonical_form, certificate, h_canonical_form, h_certificate, GraphCertificate,
    MAX_CANON_VERTICES,
};
pub use construct::{
    complete, complete_bipartite, cycle, h_circ_ell, looped_complete, make_family, path, petersen,
    star, widom_rowlinson, Constructed, NamedFamily,
};
pub use graph6::{parse_graph6, serialize_graph6};
pub use hgraph::{parse_hgraph, HGraph, MAX_H_VERTICES};
pub use simple::SimpleGraph;
