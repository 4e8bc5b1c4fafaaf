//! Connected invariants of a generic hyperplane section's point gin and their
//! exhaustive enumeration.

use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::arith::Rational;
use crate::error::{Error, Result};

/// The sequence `λ0 > λ1 > ... > λ_{s-1} >= 1` with consecutive gaps of one
/// or two, read off the point gin `(x0^s, x0^{s-1} x1^{λ_{s-1}}, ..., x1^{λ0})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConnectedInvariants {
    lambda: Vec<i64>,
}

impl ConnectedInvariants {
    /// Validates and wraps `lambda`. `d` and `s` are checked against the
    /// sequence as well.
    pub fn new(lambda: Vec<i64>, d: i64, s: i64) -> Result<Self> {
        let violations = validate_config(&lambda, d, s);
        if violations.is_empty() {
            Ok(ConnectedInvariants { lambda })
        } else {
            Err(Error::InvalidConfig(violations))
        }
    }

    /// Wraps a sequence already known to be connected.
    fn from_valid(lambda: Vec<i64>) -> Self {
        debug_assert!(
            validate_config(&lambda, lambda.iter().sum(), lambda.len() as i64).is_empty()
        );
        ConnectedInvariants { lambda }
    }

    pub fn s(&self) -> i64 {
        self.lambda.len() as i64
    }

    pub fn d(&self) -> i64 {
        self.lambda.iter().sum()
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.lambda
    }
}

impl Deref for ConnectedInvariants {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.lambda
    }
}

impl fmt::Display for ConnectedInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lambda.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// One violated clause of the connected-invariant conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `s` is not positive or does not match the sequence length.
    PartCount { expected: i64, found: i64 },
    /// `λ_{s-1} < 1`.
    NonPositivePart { index: usize, value: i64 },
    /// `λ_i - λ_{i+1}` is not 1 or 2.
    Gap { index: usize, gap: i64 },
    /// `Σ λ_i != d`.
    DegreeSum { expected: i64, found: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::PartCount { expected, found } => {
                write!(f, "expected {expected} parts, found {found}")
            }
            Violation::NonPositivePart { index, value } => {
                write!(f, "lambda[{index}] = {value} is not positive")
            }
            Violation::Gap { index, gap } => write!(
                f,
                "gap {gap} between lambda[{index}] and lambda[{}] (must be 1 or 2)",
                index + 1
            ),
            Violation::DegreeSum { expected, found } => {
                write!(f, "sum of lambda is {found}, expected d = {expected}")
            }
        }
    }
}

/// Lists every violated clause; an empty list means the sequence is a
/// valid configuration for `(d, s)`.
pub fn validate_config(lambda: &[i64], d: i64, s: i64) -> Vec<Violation> {
    let mut out = Vec::new();
    if s < 1 || lambda.len() as i64 != s {
        out.push(Violation::PartCount {
            expected: s,
            found: lambda.len() as i64,
        });
    }
    for (index, &value) in lambda.iter().enumerate() {
        if value < 1 {
            out.push(Violation::NonPositivePart { index, value });
        }
    }
    for (index, w) in lambda.windows(2).enumerate() {
        let gap = w[0] - w[1];
        if !(1..=2).contains(&gap) {
            out.push(Violation::Gap { index, gap });
        }
    }
    let found: i64 = lambda.iter().sum();
    if found != d {
        out.push(Violation::DegreeSum { expected: d, found });
    }
    out
}

/// All connected invariants with `s` parts summing to `d`, in
/// lexicographically descending order.
///
/// A configuration is determined by its last part `λ_{s-1}` and the `s-1`
/// gaps in `{1, 2}`; for fixed gaps the last part is forced by the sum.
pub fn enumerate_configs(d: i64, s: i64) -> Vec<ConnectedInvariants> {
    if s < 1 || d < s * (s + 1) / 2 {
        return Vec::new();
    }
    let gaps = (s - 1) as u32;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << gaps) {
        // offsets[i] = λ_i - λ_{s-1}
        let mut offsets = vec![0i64; s as usize];
        for i in (0..gaps as usize).rev() {
            let gap = if mask >> i & 1 == 1 { 2 } else { 1 };
            offsets[i] = offsets[i + 1] + gap;
        }
        let rest = d - offsets.iter().sum::<i64>();
        if rest % s != 0 || rest / s < 1 {
            continue;
        }
        let last = rest / s;
        out.push(ConnectedInvariants::from_valid(
            offsets.into_iter().map(|o| o + last).collect(),
        ));
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Upper bounds `(d/s + s - 1, d/s + s - 2)` on `λ0` and `λ1` implied by
/// connectedness.
pub fn lambda_caps(d: i64, s: i64) -> (Rational, Rational) {
    let base = Rational::new(d, s);
    (&base + (s - 1), base + (s - 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(v: Vec<ConnectedInvariants>) -> Vec<Vec<i64>> {
        v.into_iter().map(ConnectedInvariants::into_vec).collect()
    }

    #[test]
    fn validate_examples() {
        assert!(validate_config(&[18, 16, 14, 12, 11], 71, 5).is_empty());
        assert_eq!(
            validate_config(&[18, 15, 14, 12, 11], 70, 5),
            vec![Violation::Gap { index: 0, gap: 3 }]
        );
        assert!(validate_config(&[5, 4, 3, 2, 1], 15, 5).is_empty());
    }

    #[test]
    fn validate_reports_every_clause() {
        let v = validate_config(&[3, 3, 0], 7, 2);
        assert!(v.contains(&Violation::PartCount {
            expected: 2,
            found: 3
        }));
        assert!(v.contains(&Violation::NonPositivePart { index: 2, value: 0 }));
        assert!(v.contains(&Violation::Gap { index: 0, gap: 0 }));
        assert!(v.contains(&Violation::Gap { index: 1, gap: 3 }));
        assert!(v.contains(&Violation::DegreeSum {
            expected: 7,
            found: 6
        }));
        assert!(ConnectedInvariants::new(vec![3, 3, 0], 7, 2).is_err());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            lists(enumerate_configs(71, 5)),
            vec![
                vec![18, 16, 14, 12, 11],
                vec![17, 16, 14, 13, 11],
                vec![17, 15, 14, 13, 12],
            ]
        );
        assert!(enumerate_configs(14, 5).is_empty());
        assert_eq!(lists(enumerate_configs(10, 4)), vec![vec![4, 3, 2, 1]]);
        assert_eq!(lists(enumerate_configs(1, 1)), vec![vec![1]]);
        assert!(enumerate_configs(5, 0).is_empty());
    }

    #[test]
    fn caps_examples() {
        assert_eq!(
            lambda_caps(71, 5),
            (Rational::new(91, 5), Rational::new(86, 5))
        );
        assert_eq!(lambda_caps(64, 4), (Rational::from(19), Rational::from(18)));
        assert_eq!(lambda_caps(5, 5), (Rational::from(5), Rational::from(4)));
    }
}
