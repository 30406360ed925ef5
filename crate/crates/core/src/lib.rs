//! Exact Chern class calculator for totally real immersions and independent
//! mappings of closed manifolds into complex affine space.
//!
//! Manifolds are products of catalog blocks (`CPn`, `RP2`, spheres, tori).
//! For each product the crate computes `c(C (x) TM)` in a truncated
//! cohomology ring, inverts it, and turns the top nonzero Chern indices into
//! target-dimension bounds that are compared with the known existence rules.
//!
//! ```
//! use chern_bounds::{analyze, parse_manifold};
//!
//! let m = parse_manifold("CP2^2").unwrap();
//! let report = analyze(&m).unwrap();
//! assert_eq!(report.tri_min_n.value, 12);
//! assert!(report.tri_optimal);
//! ```

pub mod catalog;
pub mod cli;
pub mod engine;
pub mod parser;
pub mod report;
pub mod ring;
pub mod transversality;

pub use catalog::{
    block, complexified_tangent_chern, product_manifold, product_of_kinds, BlockKind,
    BuildingBlock, CatalogError, ManifoldProduct,
};
pub use engine::{
    analyze, indep_existence_bound, indep_nonexistence_bound, tri_existence_bound,
    tri_nonexistence_bound, BoundWithCitation, Family, ObstructionReport, Rule,
};
pub use parser::{parse_manifold, ExprError, ManifoldExpr, ParseError};
pub use ring::{Coefficient, Generator, GradedClass, Monomial, RingError, RingPresentation};
pub use transversality::{
    codim_sigma_indep, codim_sigma_tri, max_independent_count, min_target_tri,
    spanning_sections_bound,
};
