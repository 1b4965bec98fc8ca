//! Exact symmetry detection for polynomially parametrized plane curves.
//!
//! Given a curve `(x(t), y(t))` with polynomial coordinates over the
//! rationals extended by square roots, this crate decides — exactly, with
//! no floating-point tolerance anywhere in the decision path — whether the
//! curve is centrally symmetric or mirror symmetric, and produces the
//! center or axis in closed form when it is.
//!
//! The pipeline: parse a two-line curve description ([`parse`]), classify
//! it as a point, a line, an improper parametrization, or a proper curve
//! ([`curve`]), then run the central and mirror detectors ([`central`],
//! [`mirror`]) which reduce symmetry to a triangular system of coefficient
//! equations over the exact field ([`field`]).  Every positive verdict is
//! re-verified against an independent polynomial-identity oracle
//! ([`detect`]).

pub mod central;
pub mod complex;
pub mod curve;
pub mod detect;
pub mod field;
pub mod fixtures;
pub mod gcd;
pub mod geom;
pub mod mirror;
pub mod parse;
pub mod poly;
pub mod report;

pub use central::CentralResult;
pub use complex::ComplexElement;
pub use curve::{ComplexCurve, CurveClass, Parametrization};
pub use detect::{detect_all, InternalError, SymmetryReport};
pub use field::{FieldElement, Rational};
pub use fixtures::{appendix_corpus, FixtureCurve, PlantedCurve, PlantedTruth};
pub use geom::{Line, Point};
pub use mirror::MirrorResult;
pub use parse::{parse_curve, ParseError};
pub use poly::{ComplexPoly, Poly, RealPoly};
pub use report::{canonical_curve_text, render_text, report_json, ReportJson};
