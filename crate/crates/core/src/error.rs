use thiserror::Error;

use crate::configs::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid configuration: {}", format_violations(.0))]
    InvalidConfig(Vec<Violation>),
    #[error("lambda sums to {sum}, expected d = {d}")]
    DegreeMismatch { sum: i64, d: i64 },
    #[error("{name} = {value} is out of range ({expected})")]
    OutOfRange {
        name: &'static str,
        value: i64,
        expected: &'static str,
    },
    #[error("lambda1 = {lambda1} must be smaller than lambda0 = {lambda0}")]
    LambdaOrder { lambda0: i64, lambda1: i64 },
    #[error("cannot place {z} sporadic zeros on {capacity} admissible slots")]
    InfeasiblePlacement { z: i64, capacity: i64 },
    #[error("d = {d} does not exceed (s-1)^2 + 1 = {gate} for s = {s}")]
    BelowHypothesis { d: i64, s: i64, gate: i64 },
    #[error("ideal is not Borel-fixed: {0}")]
    NotBorel(String),
    #[error("generator {0} involves x3; curve gins are generated in x0, x1, x2")]
    NotCurveMode(String),
    #[error("ideal is not a saturated point gin: {0}")]
    NotStaircase(String),
    #[error("Hilbert function does not become linear by degree {cutoff}")]
    NotCurveLike { cutoff: i64 },
    #[error("{0} is not a minimal generator")]
    NotAGenerator(String),
    #[error("lifting {0} does not give a Borel-fixed ideal")]
    LiftBreaksBorel(String),
    #[error("infinitely many sporadic zeros (x2-saturation is not of finite colength)")]
    InfiniteSporadic,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
