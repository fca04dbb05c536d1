//! Spectral and group-theoretic analysis of braid representations.

pub mod burnside;
pub mod charpoly;
pub mod connectivity;
pub mod discrete;
pub mod elliptic;
pub mod fingerprint;
pub mod image;

pub use burnside::{adjoint_irreducible, adjoint_matrix, algebra_span, SpanReport, SpanVerdict};
pub use charpoly::{
    commutator_expected, format_factored, generic_char_poly, laurent_word_matrix, specialize_poly,
    specialize_symmetric, strip_unit_root,
};
pub use connectivity::{
    adjoint_decomposition, certificate, connectivity, strongly_connected_components,
    twist_decomposition, ConnectivityCertificate, Decomposition,
};
pub use discrete::{
    classify_discreteness, s_rule, scan_two_cos, DiscretenessVerdict, Regime, ScanEvidence,
    VertexType, SCAN_BOUND,
};
pub use elliptic::{
    cyclo_order, elliptic_at_root, elliptic_at_trace, elliptic_from_charpoly, generated_degree,
    EllipticVerdict, EllipticWitness,
};
pub use fingerprint::{fingerprint, fingerprint_from_generators, Fingerprint, TwistRatio};
pub use image::{projective_image_order, projective_normal, ImageOrder};
