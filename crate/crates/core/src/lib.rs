//! Exact computational algebra over prime fields.
//!
//! The crate computes, at finite scale and in exact arithmetic: Jacobson
//! radicals, Wedderburn block data and ring codimension, socles, tops,
//! Goldie and dual Goldie dimensions, endomorphism algebras of
//! finite-dimensional modules, projective covers and injective
//! envelopes, and locality of ring morphisms (a morphism is local when
//! preimages of units are units). On top of those it builds the lifted
//! morphisms out of endomorphism algebras (through injective envelopes,
//! projective covers, and free covers) and verifies the codimension
//! bounds they induce.

pub mod algebra;
pub mod bridges;
pub mod error;
pub mod fp;
pub mod locality;
pub mod module;
pub mod radical;

pub use algebra::{
    coords_from_index, direct_product, direct_product_many, enumerate_vectors, ideal_generated,
    matrix_extension, matrix_morphism_lift, quotient_by_ideal, trivial_extension,
    upper_triangular, Algebra, Element, Morphism, OwnerId, Quotient, Subspace,
};
pub use bridges::{
    biuniform_classify, bounds_report, copresentation_bridge, dual_bridge, free_cover_bridge,
    free_cover_bridge_of, ideal_pair, pair_bridge, presentation_bridge, spectral_bridge,
    unit_rank_correspondence, BiuniformCase, BoundsReport, Bridge, BridgeKind, IdealPair,
};
pub use error::{Error, Result};
pub use fp::{FpMatrix, FpPoly};
pub use locality::{
    calculus_checks, camps_dicks_check, classify_two_factor, is_local, product_decompose,
    support_profile, Budget, CalculusReport, CheckMethod, CodimCheck, FieldProduct,
    LocalityReport, ProductDecomposition, SupportProfile, TwoFactorCase, Verdict,
};
pub use module::{
    baer_cyclic_check, build_top_complement, direct_sum, dual_hom, dual_module, free_cover,
    injective_envelope, is_injective, module_from_presentation, primitive_idempotents,
    projective_cover, quotient_module, restrict_scalars, submodule_module, Cover, EndoAlgebra,
    Envelope, FdModule, FreeCover, ModuleHom, Position, Presentation, StructuralSeries,
};
pub use radical::{
    lift_idempotent, radical_bruteforce, radical_trace, wedderburn_decompose, RadicalMethod,
    RadicalReport, SemisimpleDecomposition, WedderburnBlock,
};
