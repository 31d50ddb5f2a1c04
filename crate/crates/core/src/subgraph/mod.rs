//! Subgraph counting and search.

mod cliques;
mod coloring;
mod embed;

pub use cliques::{
    book_size, clique_exists, cliques_through_edge, count_cliques, joint_size, joint_size_detailed, BookReport,
    CliqueCount, EdgeCount, JointReport,
};
pub use coloring::{is_proper_coloring, is_r_partite, is_r_partite_capped, Coloring, DEFAULT_COLORING_CAP};
pub use embed::{find_complete_multipartite, find_kr_plus, validate_embedding, Embedding, SearchOutcome, DEFAULT_BUDGET};
