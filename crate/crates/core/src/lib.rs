//! Extremal simplicial complexes: Kruskal-Katona bounds on codimension-one
//! faces, vertex-decomposition certificates, and Cohen-Macaulay checks via
//! Reisner's criterion.
//!
//! ```
//! use extremal_core::{certify_vd, face, is_extremal, make_complex, validate_certificate, Strategy};
//!
//! let path = make_complex(&[face![1, 2], face![2, 3]]).unwrap();
//! assert!(is_extremal(&path).unwrap());
//! let report = certify_vd(&path, Strategy::Auto).unwrap();
//! assert!(validate_certificate(&path, report.tree().unwrap()).is_ok());
//! ```

pub mod complex;
pub mod decomposition;
pub mod error;
pub mod face;
pub mod format;
pub mod homology;
pub mod kruskal_katona;
mod linalg;

pub use complex::{make_complex, FVector, SimplicialComplex, MAX_VERTICES};
pub use decomposition::{
    certify_vd, extremal_split_vertex, find_shelling, is_shelling, validate_certificate, Branch,
    Cause, CertificateDefect, DecompositionTree, Obstruction, PathStep, Strategy, StrategyUsed,
    VdReport, Verdict, DEFAULT_FACET_LIMIT,
};
pub use error::{Error, Result};
pub use face::{Face, FaceFamily, Label};
pub use format::{parse_facet_list, render_facet_list, ParseError};
pub use homology::{
    boundary_matrix, reduced_betti, reisner_cm_check, reisner_cm_check_with_budget, BettiProfile,
    BoundaryMatrix, CmReport, Field, Violation, DEFAULT_FACE_BUDGET,
};
pub use kruskal_katona::{
    binomial, cascade_rep, colex_rank, colex_unrank, delta, extremality, find_witness,
    is_extremal, segment, segment_avoiding, shadow, split_by_vertex, squashed_cmp, CascadeRep,
    Extremality, VertexSplit, WitnessResult,
};
