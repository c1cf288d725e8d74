//! Anti-Ramsey and Turán numbers of matchings in complete r-partite
//! r-uniform hypergraphs.
//!
//! The crate is organised around a small data model ([`hypergraph`]) and the
//! pieces built on top of it:
//!
//! - [`matching`]: exact maximum-matching search and the disjointness
//!   components that decide `ar(K, M_2)`.
//! - [`constructions`]: the Turán extremal hypergraph `K_{k-1,n_2,...,n_r}`,
//!   the extremal coloring `φ_r`, the complementary-prefix coloring used when
//!   `n_1 = 2`, and representing subhypergraphs.
//! - [`rainbow`]: exact rainbow-matching search and the cyclic slice
//!   decomposition along two equal-size parts.
//! - [`oracles`]: canonical forms under host automorphisms, exhaustive `ex`
//!   and `ar` oracles, and grid verification of the closed forms.
//! - [`cli`]: the command-line front end used by the `antiramsey` binary.
//!
//! ```
//! use antiramsey::prelude::*;
//!
//! let profile = PartProfile::new(&[5, 5]).unwrap();
//! let phi = build_phi_r(&profile, 3).unwrap();
//! assert_eq!(phi.q(), 6);
//! let best = max_rainbow_matching(&phi, &SearchBudget::default());
//! assert!(best.optimal);
//! assert_eq!(best.matching.len(), 2);
//! ```

pub mod budget;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod hypergraph;
pub mod matching;
pub mod oracles;
pub mod rainbow;
pub mod sampling;
mod search;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::budget::{SearchBudget, SearchOutcome};
    pub use crate::constructions::{
        build_phi_r, build_qclass_coloring, build_turan_extremal, representing_subhypergraph,
        QClassFamily, Selector,
    };
    pub use crate::error::{Error, Result};
    pub use crate::hypergraph::{
        Edge, EdgeColoring, EdgeId, Matching, PartProfile, SubHypergraph, Vertex,
    };
    pub use crate::matching::{
        disjointness_components, has_k_matching, max_matching, ComponentPartition, MatchingResult,
    };
    pub use crate::oracles::{
        ar_exact, ar_m2_closed, canonical_form, check_uniqueness_coloring, ex_exact, verify_grid,
        CanonicalLabel, OracleLimits, VerificationReport,
    };
    pub use crate::rainbow::{
        cyclic_slices, cyclic_slices_colored, find_rainbow_k, max_rainbow_matching, SliceView,
        Strategy,
    };
}
