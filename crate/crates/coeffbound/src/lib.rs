//! Bounds on coefficient sums of polynomials bounded by one on the complex
//! unit disk: the classical Landau and Newman bounds, their generalisations
//! to arbitrary periodic weight vectors with constructive extremal witnesses,
//! and the combined (generally non-sharp) upper bound, together with the
//! supporting Eneström–Kakeya root localisation and root diagnostics.

pub mod enestrom_kakeya;
pub mod experiments;
pub mod functional_bounds;
pub mod interpolation;
pub mod landau;
pub mod polykernel;
pub mod rootfind;
pub mod verify;

pub use polykernel::{ComplexScalar, Polynomial, RationalPoly};

use rootfind::RootReport;

/// Errors surfaced by the numerical kernels.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("non-invertible series: constant term is zero")]
    NonInvertibleSeries,

    #[error("aliasing: {samples} samples, but more than {required} are needed")]
    Aliasing { samples: usize, required: usize },

    #[error("EK hypothesis fails: {0}")]
    EkHypothesisFails(String),

    #[error("singular point: evaluation at an excluded annulus radius")]
    SingularPoint,

    #[error("off-circle input: |z| differs from 1 by more than 1e-12")]
    OffCircleInput,

    #[error("point is not a node of the root set")]
    NotANode,

    #[error("pole: evaluation at a node of the root set")]
    PoleAtNode,

    #[error("norm formula not certified: requires d >= 2n-1 (d = {d}, n = {n})")]
    NormNotCertified { d: usize, n: usize },

    #[error("incompatible weight vector: {0}")]
    IncompatibleWeightVector(String),

    #[error("all weights are zero: no extremal witness exists")]
    AllWeightsZero,

    #[error("root finding did not converge within the sweep limit")]
    NonConvergence(Box<RootReport>),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
