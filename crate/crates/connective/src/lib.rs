//! Connective constants of free products of rooted graphs.
//!
//! A self-avoiding walk (SAW) on a graph is a path from a distinguished root
//! vertex that never revisits a vertex. Writing `σ_n` for the number of
//! n-step SAWs, the *connective constant* is the exponential growth rate
//! `μ = lim σ_n^{1/n}`, and for the graphs handled here the counts obey a
//! pure exponential law `σ_n ~ A · μ^n` with an explicit amplitude `A`.
//!
//! This crate computes `μ` and `A` exactly-where-possible for *free products*
//! `G = G_1 * … * G_r` of finite rooted graphs (and of infinite graphs whose
//! SAW generating function is supplied as a rational function). The pipeline:
//!
//! 1. [`enumerate::factor_saw_counts`] counts SAWs on each factor by
//!    exhaustive backtracking, giving the factor generating function
//!    `M_i(z) = Σ_{n≥1} σ_n^{(i)} z^n` ([`genfun::genfun_from_counts`]).
//! 2. The product's generating function `M(z) = Σ σ_n z^n` satisfies
//!    `M = 1 / (1 − Σ_i M_i/(1+M_i))`; clearing denominators yields an
//!    integer *witness polynomial* `D(z)` with `D(0) = 1` whose least
//!    positive zero is `z_* = 1/μ` ([`genfun::build_d`]).
//! 3. [`roots::smallest_positive_root`] isolates `z_*` in an exact rational
//!    interval via Sturm sequences and bisection; side conditions (pole
//!    radii, positivity, the fixed-point equation, simplicity of the zero)
//!    are verified in exact interval arithmetic, and the dominance of `z_*`
//!    over all complex zeros is checked numerically.
//! 4. [`asymptotics::amplitude`] evaluates `A = −Ñ(z_*)/(z_*·D′(z_*))` with
//!    `Ñ = Π(Q_i + P_i)`, cross-checked against the ratio diagnostics of
//!    [`asymptotics::convergence_report`].
//! 5. [`enumerate::free_product_saw_counts`] independently brute-forces the
//!    product's word graph so every series coefficient can be verified
//!    against an implementation that shares no code with the algebra.
//!
//! All counting and certification arithmetic is exact (big integers and big
//! rationals); floating point appears only in the complex all-roots check
//! and in reporting. The polynomial and series cores are generic over the
//! coefficient type via `num-traits`; the concrete instantiations used by
//! the pipeline are exported as type aliases below.

pub mod asymptotics;
pub mod cli;
pub mod enumerate;
pub mod genfun;
pub mod graphs;
pub mod interval;
pub mod poly;
pub mod polyroots;
pub mod roots;
pub mod series;
pub mod sturm;

/// Exact arbitrary-precision integer used for all counts and coefficients.
pub type Int = num_bigint::BigInt;
/// Exact arbitrary-precision rational.
pub type Rat = num_rational::BigRational;
/// Polynomial with exact integer coefficients.
pub type IntPoly = poly::Polynomial<Int>;
/// Polynomial with exact rational coefficients.
pub type RatPoly = poly::Polynomial<Rat>;
/// Polynomial with double-precision coefficients (numeric diagnostics only).
pub type F64Poly = poly::Polynomial<f64>;
/// Truncated power series with exact rational coefficients.
pub type RatSeries = series::TruncatedSeries<Rat>;

pub use enumerate::{factor_saw_counts, free_product_saw_counts, product_neighbors, FreeWord, SawCounts};
pub use genfun::{build_d, build_n, expand_m, expand_m_star, genfun_from_counts, genfun_from_rational, FactorGenFun};
pub use graphs::{build_complete, build_cycle, build_ladder_segment, parse_graph, RootedGraph};
pub use roots::{connective_constant, smallest_positive_root, ConnectiveResult, RootInterval};
