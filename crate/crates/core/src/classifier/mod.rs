//! Black-white diagrams of parameter vectors and the scheme graph they form.

mod graph;
mod pattern;

pub use graph::{
    admissible_patterns, arrows_from, build_graph, emit, enumerate_nodes, enumerate_nodes_with, families_of, label_of,
    label_table, mirror_label, normalize_label, pattern_for_label, unlisted_patterns, GraphFormat, SchemeGraph,
    SchemeNode, UnlistedPattern, CROSS_ARROWS, DRAWN_ARROWS, DUAL_PAIRS, PRIME,
};
pub use pattern::{pattern_of, validate, Slot, ZeroPattern};
