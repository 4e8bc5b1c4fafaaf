//! Closed-form bounds: the genus and χ sums of a configuration, the
//! Gruson–Peskine genus bound `G(d, s)`, the closed-form χ lower bound, caps on
//! the genus defect `γ` and on the number of sporadic zeros, the double point
//! formula, the Ellingsrud–Peskine degree thresholds and the plane-curve
//! threshold that switches on the secant-line constraints.

use serde::Serialize;

use crate::arith::{binom_general, binom_int, Rational};
use crate::error::{Error, Result};

/// `Σ_i [C(λ_i, 2) + (i - 1) λ_i]`; the genus of the section curve is
/// `1 + genus_sum - Z` where `Z` counts sporadic zeros.
///
/// Accepts any sequence, connected or not.
pub fn genus_sum(lambda: &[i64]) -> i64 {
    lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| l * (l - 1) / 2 + (i as i64 - 1) * l)
        .sum()
}

/// `G(d, s) = d²/(2s) + (s - 4) d / 2 + 1`.
pub fn gp_bound(d: i64, s: i64) -> Rational {
    Rational::new(d * d, 2 * s) + Rational::new((s - 4) * d, 2) + 1i64
}

/// `Σ_t [C(λ_t + t - 1, 3) - C(t - 1, 3)]` with generalized binomials, so the
/// `t = 0` term contributes `C(λ_0 - 1, 3) + 1`.
pub fn chi_sum(lambda: &[i64]) -> i64 {
    let total: Rational = lambda
        .iter()
        .enumerate()
        .map(|(t, &l)| {
            let t = t as i64;
            binom_int(l + t - 1, 3) - binom_int(t - 1, 3)
        })
        .sum();
    total.to_i64().expect("chi sum is an integer")
}

/// `s·C(d/s + (s-3)/2, 3) + 1 - C(s-1, 4)`.
pub fn chi_closed_form(d: i64, s: i64) -> Rational {
    let x = Rational::new(d, s) + Rational::new(s - 3, 2);
    binom_general(&x, 3) * s + 1i64 - binom_int(s - 1, 4)
}

/// The Ellingsrud–Peskine cap `d (s-1)² / (2s)` on `γ = G(d,s) - π`.
pub fn gamma_cap_ep(d: i64, s: i64) -> Rational {
    Rational::new(d * (s - 1) * (s - 1), 2 * s)
}

/// The cap on `γ` coming from `π >= (d² - 5d + 10)/10`:
/// `d²/(2s) + (s-4) d/2 - (d² - 5d)/10`.
pub fn gamma_cap_double_point(d: i64, s: i64) -> Rational {
    gp_bound(d, s) - 1i64 - Rational::new(d * d - 5 * d, 10)
}

/// Minimum of the two caps on `γ`.
pub fn gamma_cap(d: i64, s: i64) -> Rational {
    std::cmp::min(gamma_cap_ep(d, s), gamma_cap_double_point(d, s))
}

/// The per-`s` polynomial forms the `γ` cap takes on the high-degree range:
/// `9d/8`, `d`, `d(90-d)/60`, `d(70-d)/35` for `s = 4..=7`.
pub fn gamma_simplified(d: &Rational, s: i64) -> Option<Rational> {
    match s {
        4 => Some(d * 9i64 / 8i64),
        5 => Some(d.clone()),
        6 => Some(d * (Rational::from(90) - d) / 60i64),
        7 => Some(d * (Rational::from(70) - d) / 35i64),
        _ => None,
    }
}

/// How the lower bound on the sectional genus is rounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum GenusFloor {
    /// `⌈(d² - 5d + 10)/10⌉`.
    #[default]
    Rounded,
    /// `⌈(d² - 5d + 12)/10⌉`: `K² < 6χ` with `6χ - K²` a positive integer
    /// gives `10(π - 1) >= d² - 5d + 2`. Only used for `d > 5`.
    Strict,
}

/// Lower bound on the double-point genus floor before taking the ceiling.
pub fn pi_lower_bound(d: i64, floor: GenusFloor) -> Rational {
    match floor {
        GenusFloor::Strict if d > 5 => Rational::new(d * d - 5 * d + 12, 10),
        _ => Rational::new(d * d - 5 * d + 10, 10),
    }
}

/// `⌈max((d² - 5d + 10)/10, G(d,s) - γ_cap)⌉`.
pub fn pi_floor(d: i64, s: i64) -> i64 {
    pi_floor_with(d, s, GenusFloor::Rounded)
}

pub fn pi_floor_with(d: i64, s: i64, floor: GenusFloor) -> i64 {
    let double_point = pi_lower_bound(d, floor);
    let from_gamma = gp_bound(d, s) - gamma_cap(d, s);
    std::cmp::max(double_point, from_gamma).ceil_i64()
}

/// `1 + genus_sum(λ) - pi_floor(d, s)`. Negative values mark the
/// configuration as impossible for a surface not of general type.
pub fn sporadic_cap(lambda: &[i64]) -> i64 {
    sporadic_cap_with(lambda, GenusFloor::Rounded)
}

pub fn sporadic_cap_with(lambda: &[i64], floor: GenusFloor) -> i64 {
    let d: i64 = lambda.iter().sum();
    let s = lambda.len() as i64;
    1 + genus_sum(lambda) - pi_floor_with(d, s, floor)
}

/// Solves the double point formula
/// `d² - 5d - 10(π - 1) + 2(6χ - K²) = 0` for `K²`.
pub fn double_point_k2(d: i64, pi: i64, chi: i64) -> Rational {
    Rational::from(6 * chi) + Rational::new(d * d - 5 * d - 10 * (pi - 1), 2)
}

/// Left side of the double point formula; zero for every smooth surface.
pub fn double_point_residual(d: i64, pi: i64, chi: i64, k2: &Rational) -> Rational {
    Rational::from(d * d - 5 * d - 10 * (pi - 1)) + (Rational::from(6 * chi) - k2) * 2i64
}

/// `⌊5(σ+1)(σ-2)/(σ-4)⌋` for `σ ∈ {5, 6, 7}`.
pub fn ep_degree_threshold(sigma: i64) -> Result<i64> {
    if !(5..=7).contains(&sigma) {
        return Err(Error::OutOfRange {
            name: "sigma",
            value: sigma,
            expected: "5, 6 or 7",
        });
    }
    Ok(Rational::new(5 * (sigma + 1) * (sigma - 2), sigma - 4).floor_i64())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "d", rename_all = "snake_case")]
pub enum DegreeBound {
    Max(i64),
    Unbounded,
}

impl DegreeBound {
    pub fn max(self) -> Option<i64> {
        match self {
            DegreeBound::Max(d) => Some(d),
            DegreeBound::Unbounded => None,
        }
    }
}

impl std::fmt::Display for DegreeBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DegreeBound::Max(d) => write!(f, "{d}"),
            DegreeBound::Unbounded => f.write_str("unbounded"),
        }
    }
}

/// Lower bound `(d/2 - 1)(d/2 - 2)/2` on the arithmetic genus of a plane
/// curve of degree at least `d/2`.
pub fn plane_curve_genus_floor(d: i64) -> Rational {
    let half = Rational::new(d, 2);
    (&half - 1i64) * (&half - 2i64) / 2i64
}

const LEMMA6_SCAN_TOP: i64 = 200;

/// Largest `d` with `G(d, s) >= (d/2 - 1)(d/2 - 2)/2`, found by a descending
/// scan from 200. If the inequality still holds at the top of the scan the
/// bound is reported as unbounded.
pub fn lemma6_max_degree(s: i64) -> Result<DegreeBound> {
    if !(4..=7).contains(&s) {
        return Err(Error::OutOfRange {
            name: "s",
            value: s,
            expected: "4..=7",
        });
    }
    let holds = |d: i64| gp_bound(d, s) >= plane_curve_genus_floor(d);
    if holds(LEMMA6_SCAN_TOP) {
        return Ok(DegreeBound::Unbounded);
    }
    let d = (1..LEMMA6_SCAN_TOP).rev().find(|&d| holds(d)).unwrap_or(0);
    Ok(DegreeBound::Max(d))
}
