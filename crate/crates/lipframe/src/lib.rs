//! Numerical toolkit for Lipschitz frames, Bessel sequences, and multiplier
//! operators on metric spaces.
//!
//! The library works with sequences of Lipschitz maps `f_n` on a metric space
//! `(M, d)` whose aggregated p-power differences are squeezed between
//! multiples of the distance,
//!
//! ```text
//! a·d(x,y) <= (sum_n d_n(f_n(x), f_n(y))^p)^(1/p) <= b·d(x,y),
//! ```
//!
//! and with the multiplier operators
//!
//! ```text
//! M_{λ,f,τ}(x) = sum_n λ_n f_n(x) τ_n
//! ```
//!
//! assembled from a symbol sequence `λ`, analysis functionals `f_n`, and
//! synthesis vectors `τ_n`. Suprema over infinite pair sets are not
//! computable, so every estimator here reports one-sided values with the
//! sampling metadata attached, and every infinite series is truncated with a
//! certificate: a computed upper bound on the norm of the discarded tail.
//!
//! Module map:
//!
//! * [`metric`] — metric spaces, axiom validation, deterministic pair sampling.
//! * [`normed`] — finite-dimensional / finitely supported normed spaces.
//! * [`lipschitz`] — Lipschitz maps, difference quotients, rank-one operators.
//! * [`frames`] — functional sequences, frame-bound estimation, certified
//!   power sums, and the worked example frames (two-point, cyclic shift,
//!   log series).
//! * [`vectors`] — synthesis vector sequences, Riesz-sequence checks, dual
//!   Bessel bound estimation.
//! * [`symbol`] — symbol sequences with exact sup norms and tail suprema.
//! * [`multiplier`] — assembled multiplier operators with certified
//!   evaluation, norm/compactness/injectivity/continuity checks.
//! * [`report`] — machine-readable JSON reports with role-tagged numerics.
//! * [`config`] — declarative TOML configurations for the CLI.
//! * [`cli`] — the `verify-frame`, `apply`, `check-theorems`, and
//!   `validate-metric` commands used by the `lipframe` binary.
//!
//! The `examples/` directory contains one runnable program per capability;
//! start with `cargo run --example log_series_frame`.

pub mod cli;
pub mod config;
pub mod frames;
pub mod lipschitz;
pub mod metric;
pub mod multiplier;
pub mod normed;
pub mod report;
pub mod symbol;
pub mod vectors;

pub use frames::{
    cyclic_shift_frame, log_series_frame, two_point_frame, FrameBoundEstimate, FrameError,
    FunctionalSequence, PowerSum,
};
pub use lipschitz::{
    difference_quotient, estimate_lip_number, lip0_norm_estimate, rank_one, LipschitzError,
    LipschitzEstimate, LipschitzMap,
};
pub use metric::{
    make_euclidean_space, make_finite_space, make_interval_space, sample_pairs, MetricError,
    MetricSpace, PairSample, Point, PointedMetricSpace, SampleStrategy,
};
pub use multiplier::{
    DifferenceQuotientSample, MultiplierError, MultiplierOperator, TruncationCertificate,
};
pub use normed::NormedSpace;
pub use symbol::{SymbolClass, SymbolSequence};
pub use vectors::{DualFunctional, DualScope, VectorSequence};

/// Default cap on series truncation indices; exceeding it while chasing a
/// tolerance raises `ToleranceUnreachable`.
pub const DEFAULT_INDEX_CAP: usize = 1024;

/// Absolute tolerance for "vanishes at the basepoint" checks.
pub const POINTED_TOLERANCE: f64 = 1e-12;

/// Relative tolerance used when comparing estimates against declared bounds.
pub const DECLARED_BOUND_RTOL: f64 = 1e-9;
