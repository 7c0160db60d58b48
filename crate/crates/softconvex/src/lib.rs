//! Exact finite models of soft convex structures.
//!
//! A soft set on a universe `X` with parameter list `E` assigns a subset of
//! `X` to every parameter. This crate implements the full algebra of finite
//! soft sets, validates the convex-structure axioms on families of them,
//! computes hulls and pointwise hulls, builds the structures induced by hull
//! operators, convexly derived operators, and convex bases, decides the
//! structure-preserving properties of point maps, and ships an exhaustive
//! brute-force verifier that re-checks every law on small spaces.
//!
//! Everything is exact discrete mathematics: no tolerances, no sampling
//! error. Values are immutable after construction and every operation is a
//! pure function, so they can be shared freely across threads.
//!
//! The `examples/` directory of this crate has one runnable program per
//! capability; start with `soft_set_algebra` and `validate_structure`.

pub mod bases;
pub mod cli;
pub mod convexity;
pub mod document;
pub mod error;
pub mod family;
pub(crate) mod masks;
pub mod morphisms;
pub mod operators;
pub mod oracle;
pub mod report;
pub mod soft_set;
pub mod space;

pub use bases::{structure_from_cbase, validate_cbase, SoftConvexBase};
pub use convexity::{
    close_to_structure, family_slice, induced_from_crisp, single_set_from_crisp,
    validate_structure, CrispConvexStructure, SoftConvexStructure,
};
pub use document::{CrispDocument, Document, DocumentError, FunctionDecl, ABSOLUTE_NAME, NULL_NAME};
pub use error::{Error, Result};
pub use family::SoftFamily;
pub use morphisms::{
    check_scc_equivalence, check_scp_equivalence, is_sbp, is_scc, is_scp, is_sdp,
    EquivalenceReport, PropertyVerdict, SoftFunctionMap,
};
pub use operators::{
    hull_from_cderived, structure_from_cderived, structure_from_hull_operator,
    validate_cderived_operator, validate_hull_operator, OperatorTable,
};
pub use oracle::{
    all_point_functions, enumerate_soft_sets, enumerate_structures, find_counterexample,
    verify_morphisms, verify_suite, EnumerationBudget, FixturePayload, MorphismFixture,
    MorphismProperty, SuiteReport, SuiteSection, DEFAULT_SEED,
};
pub use report::{Axiom, CheckMode, ValidationReport, Witness, DEFAULT_SUBFAMILY_CAP};
pub use soft_set::SoftSet;
pub use space::Space;
