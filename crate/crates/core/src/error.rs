//! Error types.

use thiserror::Error;

/// Errors from parsing and validating link diagrams.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("no crossings")]
    NoCrossings,
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("not 4-valent: {0}")]
    NotFourValent(String),
    #[error("edge label {label} appears {count} times (expected 2)")]
    EdgeLabelCount { label: u64, count: usize },
    #[error("rotation system is not planar (V={v}, E={e}, F={f}; V-E+F must be 2)")]
    NonPlanar { v: usize, e: usize, f: usize },
    #[error("unsigned code realization limited to {limit} crossings, got {got}")]
    SearchTooLarge { limit: usize, got: usize },
    #[error("no planar realization of the unsigned code exists")]
    Unrealizable,
    #[error("dt codes describe knots only; multi-component input is not supported")]
    DtMultiComponent,
    #[error("invalid dt code: {0}")]
    DtInvalid(String),
}

/// Errors from diagram predicates whose preconditions fail.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PredicateError {
    #[error("diagram is split (disconnected); predicate undefined")]
    Disconnected,
    #[error("diagram is not prime; twist-reducedness requires a prime diagram")]
    NotPrime,
}

/// Errors from the augmented-link construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AugmentError {
    #[error("diagram is split (disconnected)")]
    Disconnected,
    #[error("diagram is not prime")]
    NotPrime,
    #[error("diagram is not twist-reduced")]
    NotTwistReduced,
    #[error("closed 2-braid or single twist region: construction hypotheses fail (need at least two twist regions)")]
    TooFewTwistRegions,
}

/// Errors from polyhedral decomposition and cusp assembly.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyhedraError {
    #[error("internal gluing error: boundary component is not a torus ({0})")]
    NonTorusBoundary(String),
    #[error("polyhedron structure invalid: {0}")]
    InvalidStructure(String),
}

/// Errors from normal-surface operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("curve references nonexistent face or edge: {0}")]
    BadReference(String),
    #[error("curve is not closed")]
    NotClosed,
    #[error("disk has no boundary segments on the cusp tori")]
    NoBoundarySegments,
    #[error("gluing data does not match: {0}")]
    GluingMismatch(String),
    #[error("arc is not progressive: {0}")]
    NotProgressive(String),
    #[error("arc is not simplicial: {0}")]
    NotSimplicial(String),
    #[error("slope is trivial; no length bound applies")]
    TrivialSlope,
}

/// Errors from slope bookkeeping and threshold checks.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SlopeError {
    #[error("trivial filling: the slope is the meridian")]
    TrivialSlope,
    #[error("crossing-circle cusps only accept their recovery slope 1/s")]
    NotRecoverySlope,
    #[error("no cusps to check")]
    EmptyFillingSet,
    #[error("missing bound for filled cusp {0}")]
    MissingBound(usize),
    #[error("filled subset must be proper and nonempty; use the full-filling check instead")]
    BadFillingSubset,
}
