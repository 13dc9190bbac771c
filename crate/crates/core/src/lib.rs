//! Strong connectability of strict digraphs.
//!
//! A strict digraph (an orientation of a simple graph) can be extended to a
//! strongly connected strict digraph on the same vertices exactly when it has
//! no complete dicut. This crate decides that question, produces checkable
//! certificates either way, builds extensions with bounded edge counts,
//! reports lower and upper bounds on the number of edges needed, and applies
//! the same criterion to balanced non-transitive dice.

mod bits;
pub mod bounds;
pub mod certify;
pub mod dice;
pub mod dicut;
pub mod error;
pub mod extend;
pub mod generators;
pub mod graph;
pub mod parse;
pub mod tournament;

pub use bounds::{bipartite_matching_lower_bound, bounds, BoundsReport, CyclicBound};
pub use certify::{certify, parse_certificate, verify_certificate, Certificate, Verdict};
pub use dice::{
    beats_digraph, is_balanced, realizes, search_balanced_realization, win_probability, DiceSet,
    EdgeConvention, Prob, WinMatrix,
};
pub use dicut::{
    brute_force_complete_dicut, dicut_deficiency, find_complete_dicut, verify_complete_dicut,
    Deficiency, DicutCertificate,
};
pub use error::{DiceError, Error, GraphError, ParseError};
pub use extend::{brute_force_min_extension, extend, extend_connected, ExtensionPlan, MinExtension};
pub use generators::{gen_bipartite_plus_isolated, gen_cycles, gen_tt_minus_path};
pub use graph::{is_strong, strong_components, weak_components, Condensation, StrictDigraph};
pub use parse::{parse_dice, parse_edge_list};
pub use tournament::{complete_to_tournament, hamiltonian_cycle_strong_tournament};
