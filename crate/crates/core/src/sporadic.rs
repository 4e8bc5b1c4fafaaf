//! Extremal placement of sporadic zeros.
//!
//! A generator `x0^a x1^b x2^c` of the curve gin with `c > 0` contributes one
//! sporadic zero in each degree `a+b, ..., a+b+c-1`. Only the two highest
//! columns matter for the extremal analysis: column 0 (above `x1^{λ0}`) starts
//! at degree `λ0`, column 1 (above `x0 x1^{λ1}`) starts at `λ1 + 1`.
//!
//! Once the surface has large degree the generic section cannot carry an
//! `r`-secant line with `r > d/2`, which caps the degrees the zeros can reach.
//! Three cases arise depending on the zero budget `z`:
//!
//! * (i)   `λ0 + z - 1 <= d/2`: a single run in column 0.
//! * (ii)  the run passes `d/2` but `λ0 + λ1 + z - 1 <= d`: column 0 is cut at
//!   `⌊d/2⌋` and the rest goes to column 1.
//! * (iii) otherwise both columns climb to `r = ⌈(λ0 + λ1 + z)/2⌉`, column 0
//!   ending at `r` and column 1 at `r - 1`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith::{range_sum, range_sum_poly, Rational};
use crate::bounds::gamma_simplified;
use crate::error::{Error, Result};

/// Where a profile's zeros were allowed to sit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Placement {
    /// One column from `λ0` upward with no degree cap.
    Unconstrained,
    CaseI,
    CaseII,
    CaseIII,
    /// Read off a monomial ideal rather than constructed.
    Observed,
}

impl Placement {
    pub fn label(self) -> &'static str {
        match self {
            Placement::Unconstrained => "unconstrained",
            Placement::CaseI => "i",
            Placement::CaseII => "ii",
            Placement::CaseIII => "iii",
            Placement::Observed => "observed",
        }
    }
}

impl std::fmt::Display for Placement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Multiset of sporadic zeros by degree: `α_t` for each `t` with `α_t > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SporadicProfile {
    counts: BTreeMap<i64, i64>,
    mode: Placement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProfileStats {
    /// `Σ α_t t`
    pub a: i64,
    /// `Σ α_t`
    pub z: i64,
    /// `Σ α_t (12t - 22)`
    pub w: i64,
}

impl SporadicProfile {
    pub fn empty(mode: Placement) -> Self {
        SporadicProfile {
            counts: BTreeMap::new(),
            mode,
        }
    }

    pub fn from_degrees<I: IntoIterator<Item = i64>>(degrees: I, mode: Placement) -> Self {
        let mut p = SporadicProfile::empty(mode);
        for t in degrees {
            p.add(t, 1);
        }
        p
    }

    pub fn add(&mut self, degree: i64, count: i64) {
        if count > 0 {
            *self.counts.entry(degree).or_insert(0) += count;
        }
    }

    pub fn counts(&self) -> &BTreeMap<i64, i64> {
        &self.counts
    }

    pub fn mode(&self) -> Placement {
        self.mode
    }

    pub fn total(&self) -> i64 {
        self.counts.values().sum()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.counts.keys().next_back().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn stats(&self) -> ProfileStats {
        profile_stats(self)
    }

    /// Degrees listed with multiplicity, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        self.counts
            .iter()
            .flat_map(|(&t, &n)| std::iter::repeat_n(t, n as usize))
            .collect()
    }
}

pub fn profile_stats(profile: &SporadicProfile) -> ProfileStats {
    let (a, z) = profile
        .counts
        .iter()
        .fold((0, 0), |(a, z), (&t, &n)| (a + n * t, z + n));
    ProfileStats {
        a,
        z,
        w: 12 * a - 22 * z,
    }
}

/// Chooses case (i), (ii) or (iii) by exact comparison against `d/2` and `d`.
pub fn select_case(
    lambda0: &Rational,
    lambda1: &Rational,
    d: &Rational,
    z: &Rational,
) -> Placement {
    let top0 = lambda0 + z - 1i64;
    if top0 <= d / 2i64 {
        Placement::CaseI
    } else if &top0 + lambda1 <= *d {
        Placement::CaseII
    } else {
        Placement::CaseIII
    }
}

/// The printed upper bound on `A` for the selected case.
///
/// Case (iii) sums column 0 up to `r` inclusive, as printed.
pub fn case_bound_a(lambda0: i64, lambda1: i64, d: i64, z: i64) -> Result<(Placement, i64)> {
    if lambda1 >= lambda0 {
        return Err(Error::LambdaOrder { lambda0, lambda1 });
    }
    if z < 0 {
        return Err(Error::OutOfRange {
            name: "z",
            value: z,
            expected: ">= 0",
        });
    }
    if z == 0 {
        return Ok((Placement::CaseI, 0));
    }
    let case = select_case(&lambda0.into(), &lambda1.into(), &d.into(), &z.into());
    let a = match case {
        Placement::CaseI => range_sum(lambda0, lambda0 + z - 1),
        Placement::CaseII => {
            let half = d.div_euclid(2);
            range_sum(lambda0, half) + range_sum(lambda1 + 1, z - half + lambda0 + lambda1 - 1)
        }
        _ => {
            let r = case_iii_top(lambda0, lambda1, z);
            range_sum(lambda0, r) + range_sum(lambda1 + 1, r - 1)
        }
    };
    Ok((case, a))
}

/// `r = ⌈(λ0 + λ1 + z)/2⌉`.
pub fn case_iii_top(lambda0: i64, lambda1: i64, z: i64) -> i64 {
    (lambda0 + lambda1 + z + 1).div_euclid(2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Slot {
    degree: i64,
    column: u8,
}

fn column(from: i64, to: i64, column: u8) -> impl Iterator<Item = Slot> {
    (from..=to).map(move |degree| Slot { degree, column })
}

/// Places exactly `z` zeros on the highest admissible slots.
///
/// In constrained mode the slot set is the one of the case selected by
/// [`select_case`]; when it has more than `z` slots the lowest-degree ones are
/// dropped, column 1 first on ties. In unconstrained mode the zeros run up
/// column 0 from `λ0` with no cap.
pub fn extremal_profile(
    lambda0: i64,
    lambda1: i64,
    d: i64,
    z: i64,
    constrained: bool,
) -> Result<SporadicProfile> {
    if z < 0 {
        return Err(Error::OutOfRange {
            name: "z",
            value: z,
            expected: ">= 0",
        });
    }
    if !constrained {
        return Ok(SporadicProfile::from_degrees(
            lambda0..lambda0 + z,
            Placement::Unconstrained,
        ));
    }
    if lambda1 >= lambda0 {
        return Err(Error::LambdaOrder { lambda0, lambda1 });
    }
    if z == 0 {
        return Ok(SporadicProfile::empty(Placement::CaseI));
    }
    let case = select_case(&lambda0.into(), &lambda1.into(), &d.into(), &z.into());
    let mut slots: Vec<Slot> = match case {
        Placement::CaseI => column(lambda0, lambda0 + z - 1, 0).collect(),
        Placement::CaseII => {
            let half = d.div_euclid(2);
            column(lambda0, half, 0)
                .chain(column(lambda1 + 1, z - half + lambda0 + lambda1 - 1, 1))
                .collect()
        }
        _ => {
            let r = case_iii_top(lambda0, lambda1, z);
            column(lambda0, r, 0)
                .chain(column(lambda1 + 1, r - 1, 1))
                .collect()
        }
    };
    let capacity = slots.len() as i64;
    if capacity < z {
        return Err(Error::InfeasiblePlacement { z, capacity });
    }
    // highest degree first; column 0 before column 1 at equal degree
    slots.sort_by(|a, b| b.degree.cmp(&a.degree).then(a.column.cmp(&b.column)));
    Ok(SporadicProfile::from_degrees(
        slots.into_iter().take(z as usize).map(|s| s.degree),
        case,
    ))
}

/// Case-(iii) bound with an unrounded top `r = (λ0 + λ1 + z)/2`, evaluated
/// with the arithmetic-series polynomial at rational endpoints.
pub fn case_iii_bound_poly(lambda0: &Rational, lambda1: &Rational, z: &Rational) -> Rational {
    let r = (lambda0 + lambda1 + z) / 2i64;
    range_sum_poly(lambda0, &r) + range_sum_poly(&(lambda1 + 1i64), &(&r - 1i64))
}

/// First estimate of `A` at the extremal invariants `λ0 = d/s + s - 1`,
/// `λ1 = d/s + s - 2` with the zero budget set to the simplified `γ` cap.
/// For `s = 4` this is `153/256 d² + 45/16 d + 1/4`, for `s = 5` it is
/// `9/20 d² + 7/2 d + 1/4`.
pub fn first_estimate_a(d: i64, s: i64) -> Result<Rational> {
    if !(4..=5).contains(&s) {
        return Err(Error::OutOfRange {
            name: "s",
            value: s,
            expected: "4 or 5",
        });
    }
    Ok(first_estimate_a_at(&d.into(), s))
}

/// [`first_estimate_a`] at a rational degree and any `s` in `4..=7`.
pub fn first_estimate_a_at(d: &Rational, s: i64) -> Rational {
    let lambda0 = d / s + (s - 1);
    let lambda1 = d / s + (s - 2);
    let z = gamma_simplified(d, s).expect("s in 4..=7");
    case_iii_bound_poly(&lambda0, &lambda1, &z)
}
