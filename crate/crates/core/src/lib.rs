//! Exact domination parameters and common domination perfection for small
//! graphs.
//!
//! The crate computes `γ`, `i`, `α_c` and `α` exactly, decides whether
//! `γ(H) = α_c(H)` for every induced subgraph `H` (directly, through the
//! `γ(H) = 2` subgraphs, and by searching for ten forbidden induced
//! subgraphs), and checks the three against each other over every graph of
//! small order.
//!
//! ```
//! use domiperf::{parse_graph6, perfect_by_theorem, parameter_profile};
//!
//! let p6 = parse_graph6("EhCG").unwrap();
//! let profile = parameter_profile(&p6).unwrap();
//! assert_eq!((profile.gamma, profile.common_ind), (2, 3));
//! assert!(!perfect_by_theorem(&p6).perfect);
//! ```

pub mod classes;
pub mod enumeration;
pub mod formats;
pub mod graph;
pub mod invariants;
pub mod patterns;
pub mod perfection;

pub use classes::{ClassError, Construction, TreeClass};
pub use enumeration::{
    canonical_form, enumerate_graphs, CanonicalForm, ClassFilter, EnumerationError, VerificationReport,
};
pub use formats::{emit_dot, emit_graph6, parse_edge_list, parse_graph6, FormatError, GraphRecord};
pub use graph::{Distance, Graph, GraphError, VertexSet, MAX_ORDER};
pub use invariants::{parameter_profile, InvariantError, ParameterProfile};
pub use patterns::{Embedding, EmbeddingMode, Pattern, PatternName};
pub use perfection::{
    perfect_by_definition, perfect_by_gamma2, perfect_by_theorem, Method, PerfectionError, PerfectionVerdict,
    Witness,
};
