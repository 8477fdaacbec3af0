//! Validated-numerics toolkit for certifying nonnegativity of the sine
//! polynomial family S_{n,β}(x) = Σ_{k=1}^{n−1} ((n²−k²)/((n²−1)k))^β sin(kx)
//! on [0, π].
//!
//! The crate provides rigorous interval arithmetic, the structural
//! decomposition S = H + K + T, certification primitives (monotone-difference
//! point chains, exact-rational Sturm positivity, the Fejér convexity
//! criterion), a per-lemma verification suite, and brute-force grid oracles.

pub mod brute;
pub mod certify;
pub mod decompose;
pub mod error;
pub mod expr;
pub mod interval;
pub mod lemmas;
pub mod pipeline;
pub mod sinepoly;
pub mod sturm;

pub use brute::{brute_min, sharpness, BruteScan, CellBound};
pub use error::{Error, Result};
pub use interval::{Interval, Precision, DEFAULT_PREC};
pub use certify::{
    check_certificate, dif_certify, fejer_check, verify_below, verify_monotone,
    xi_endpoint_reduce, DifCertificate, Direction, MonotoneFn, PowerDiffFn, Verdict, XiVerdict,
};
pub use decompose::{
    build, count_T_summands, h_family, split_point, x_star_ratio, Decomposition, HFunctionFamily,
    SplitPoint,
};
pub use expr::Expr;
pub use lemmas::{
    h_anchor, h_lower_bounds, h_target, verify_h_certificates, verify_lemma, LemmaReport,
    ReportStatus, H_TARGET_IDS, LEMMA_IDS,
};
pub use pipeline::{pipeline, PipelineTrace, RegionResult};
pub use sinepoly::{
    eval_S, eval_S_seq, eval_sine_poly, tau, BetaSpec, CoefficientSequence, SinePolyValue,
    TauForm, TauValue,
};
pub use sturm::{sturm_count, sturm_positive, RationalPolynomial};
