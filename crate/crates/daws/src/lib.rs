//! Exact-arithmetic computations in the double affine Weyl semigroup
//! W = T x| W_aff over a simply-laced finite root system: lengths, Bruhat
//! comparisons, length difference sets, lower graphs and their corners,
//! cocover and cover enumeration, and finite Bruhat interval enumeration.
//!
//! Everything is integer arithmetic on simple-root / fundamental-weight
//! coordinates; no floating point and no rationals. The `oracle` module
//! carries independent brute-force implementations used to cross-validate
//! the closed-form paths.

pub mod affine;
pub mod bruhat;
pub mod double_affine;
pub mod error;
pub mod oracle;
pub mod root_system;
pub mod sampling;

pub use affine::{
    dominantize, length_product_identity_holds, qbg_edge, AffineRoot, AffineWeight,
    AffineWeylElement, QbgEdge, QbgEdgeKind,
};
pub use bruhat::{
    classify_cocovers_qbg, cocovers, cocovers_via_classification, cocovers_via_corners,
    corners, cover_diff_set, covers, gamma_contains, gamma_shape, hasse_edges, interval,
    is_cocover, is_corner, is_leq, length_diff_set, rotate180, Cocover, CocoverDescriptor,
    CoverDiffSet, LengthDiffSet, LowerEdgeKind, LowerGraph, UpperEdgeKind, DEFAULT_CAP,
};
pub use double_affine::{
    apply_reflection_left, assemble, decompose, length_split, Decomposition, DoubleAffineRoot,
    ExtendedElement, LengthBreakdown, SemigroupElement,
};
pub use error::{Error, Result};
pub use root_system::{Root, RootSystem, TypeLabel, Weight, WeylElement};

// Every value type is immutable after construction and shares only the
// root system behind an Arc, so all of them cross thread boundaries.
const _: () = {
    const fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<RootSystem>();
    assert_send_sync::<Root>();
    assert_send_sync::<Weight>();
    assert_send_sync::<WeylElement>();
    assert_send_sync::<AffineRoot>();
    assert_send_sync::<AffineWeight>();
    assert_send_sync::<AffineWeylElement>();
    assert_send_sync::<DoubleAffineRoot>();
    assert_send_sync::<ExtendedElement>();
    assert_send_sync::<SemigroupElement>();
};
