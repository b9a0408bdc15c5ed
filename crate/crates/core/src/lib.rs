//! Root data of types A, B, D, Steinberg bases, Chow-ring presentations of
//! split orthogonal groups, and the J-invariant of quadratic forms and
//! algebras with orthogonal involution at p = 2.

pub mod charmap;
pub mod chow;
pub mod classify;
pub mod cocenter;
pub mod error;
pub mod liealg;
pub mod matrix;
pub mod steinberg;
pub mod titsbounds;

pub use charmap::{charmap_image, Subspace};
pub use chow::{
    admissible_tuples, involution_signature, kac_signature, poincare_polynomial, GroupLabel, JTuple,
    KacSignature,
};
pub use classify::{
    classify_involution, classify_qform, classify_triple, ClassificationRow, InvolutionProfile,
    IsotropyStatus, Member, QFormProfile,
};
pub use cocenter::{cocenter, CocenterElement, CocenterGroup, LatticeChoice};
pub use error::{Error, Result};
pub use liealg::{Family, RootSystem, RootVec, WeightVec, WeylElement, DEFAULT_WEYL_CAP};
pub use steinberg::{steinberg_table, SteinbergEntry};
pub use titsbounds::{common_index, degree_one_bounds, BoundsResult, IndexProfile};
