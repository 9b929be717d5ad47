//! Free tree enumeration, graceful and semigraceful labelings, and cyclic
//! decompositions of complete multigraphs into spanning trees.
//!
//! A tree of odd order `2n+1` is *semigraceful* when its vertices can be
//! labeled bijectively with `1..=2n+1` so that the cyclic distances induced
//! on its edges form the multiset `{1,1,2,2,...,n,n}`. Each such labeling
//! embeds the tree into the doubled complete multigraph on `2n+1` vertices so
//! that the `2n+1` cyclic rotations of the embedding partition the edge
//! multiset exactly; doing this for every isomorphism class of trees at once
//! covers `K_{2n+1}` with multiplicity twice the number of tree classes.
//!
//! The crate provides:
//!
//! - [`trees`]: enumeration of all non-isomorphic free trees of a given
//!   order, with centroid-rooted canonical keys;
//! - [`labeling`]: cyclic distances, the graceful and semigraceful
//!   predicates, deterministic backtracking searches, and the shift taking a
//!   graceful labeling of an odd-order tree to a semigraceful one;
//! - [`decomposition`]: rotation and whole-family decomposition builders,
//!   exact pair-coverage verification, and certificates;
//! - [`feasibility`]: the edge-counting arithmetic giving minimal copy counts
//!   and edge multiplicities for family decompositions;
//! - [`document`]: deterministic text serialization for catalogs, labeling
//!   lists, and decomposition certificates.

pub mod decomposition;
pub mod document;
pub mod feasibility;
pub mod labeling;
pub mod trees;

pub use document::{CertificateDocument, CertificateKind, DocumentError};
pub use feasibility::{
    edge_count_check, minimal_family_multiplicity, FeasibilityError, FeasibilityReport,
};

pub use decomposition::{
    build_family_decomposition, build_rotation_decomposition, family_pipeline, reproduce_eggleton,
    rotate_labeling, search_family_bases, verify_cover, CoverageVerdict, DecompositionError,
    EggletonReproduction, EmbeddedTree, FamilyDecompositionCertificate, MultigraphSpec,
    PairCoverageTable, RotationDecomposition, TreeRecord, VerifiedFamily, ROTATION_CONVENTION,
};
pub use labeling::{
    cyclic_distance, find_graceful_labeling, find_semigraceful_labeling, graceful_to_semigraceful,
    induced_edge_labels, is_graceful_labeling, is_semigraceful_labeling, Convention,
    EdgeLabelMultiset, LabelingError, SearchOutcome, VertexLabeling, DEFAULT_SEARCH_BUDGET,
};
pub use trees::{
    enumerate_trees, enumerate_trees_with_max, tree_count, tree_count_fixture, trees_isomorphic,
    Tree, TreeError, TreeFamilyCatalog, DEFAULT_MAX_ORDER,
};
