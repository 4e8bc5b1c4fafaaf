//! Feasibility verdicts for configurations, descending degree scans, and the
//! final degree bound.
//!
//! For a smooth surface not of general type `2K² <= 18`, while the double
//! point formula together with the χ and genus expressions in terms of the
//! connected invariants gives
//!
//! ```text
//! 2K² >= d² - 5d - 10·Sg + 12·χΣ - Σ α_t (12t - 22)
//! ```
//!
//! where `Sg` is [`genus_sum`] and `χΣ` is [`chi_sum`]. A configuration is
//! excluded when even the largest admissible `Σ α_t (12t - 22)` leaves the
//! right side above 18.

use std::sync::OnceLock;

use serde::Serialize;

use crate::arith::{binom_general, binom_int, range_sum, range_sum_poly, Rational};
use crate::bounds::{
    chi_sum, ep_degree_threshold, gamma_simplified, genus_sum, lemma6_max_degree,
    sporadic_cap_with, DegreeBound, GenusFloor,
};
use crate::configs::{enumerate_configs, validate_config, ConnectedInvariants, Violation};
use crate::error::{Error, Result};
use crate::sporadic::{
    case_bound_a, extremal_profile, first_estimate_a_at, Placement, SporadicProfile,
};

/// `2·9`, from `K² <= 9` for surfaces not of general type of degree > 5.
pub const TWICE_K2_MAX: i64 = 18;

/// Degree bound for surfaces on a cubic hypersurface (Koelblen).
pub const CUBIC_HYPERSURFACE_BOUND: i64 = 8;

/// Which value of `Σ α_t (12t - 22)` a verdict compares against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum WMode {
    /// Exactly `z` zeros on the highest admissible slots.
    #[default]
    Greedy,
    /// `12·A - 22·z` with `A` the printed case formula.
    CaseFormula,
}

/// When the secant-line constraints on zero placement apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Activation {
    /// `d` above the plane-curve threshold for this `s`
    /// (25, 50, 42, 42 for `s = 4..=7`).
    #[default]
    PerS,
    /// `d > 50` for every `s`.
    Uniform50,
}

/// How the zero budget is derived for `s = 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum S4Cap {
    /// `1 + Sg - ⌈G(d,4) - 9d/8⌉`, the same as for every other `s`.
    #[default]
    Derived,
    /// `1 + Sg - d²/8 + 9d/8`: the printed `s = 4` cap, which omits the `+1`
    /// of `G(d,4)` and so allows one more zero.
    PrintedConstant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Default)]
pub struct CertifierOptions {
    pub genus_floor: GenusFloor,
    pub w_mode: WMode,
    pub activation: Activation,
    pub s4_cap: S4Cap,
}

impl CertifierOptions {
    /// The defaults used for the final table: strict genus floor, greedy `W`,
    /// per-`s` activation, derived `s = 4` cap.
    pub fn certified() -> Self {
        CertifierOptions {
            genus_floor: GenusFloor::Strict,
            ..Default::default()
        }
    }

    pub fn with_w_mode(mut self, w_mode: WMode) -> Self {
        self.w_mode = w_mode;
        self
    }

    pub fn with_genus_floor(mut self, genus_floor: GenusFloor) -> Self {
        self.genus_floor = genus_floor;
        self
    }

    pub fn with_activation(mut self, activation: Activation) -> Self {
        self.activation = activation;
        self
    }

    pub fn with_s4_cap(mut self, s4_cap: S4Cap) -> Self {
        self.s4_cap = s4_cap;
        self
    }
}

/// Largest degree for which the placement constraints are NOT in force.
pub fn constraint_threshold(s: i64, activation: Activation) -> i64 {
    match activation {
        Activation::Uniform50 => 50,
        Activation::PerS if (4..=7).contains(&s) => per_s_thresholds()[(s - 4) as usize],
        Activation::PerS => 50,
    }
}

/// Thresholds for `s = 4..=7`, computed once: every verdict needs one and
/// each takes a descending scan.
fn per_s_thresholds() -> &'static [i64; 4] {
    static CACHE: OnceLock<[i64; 4]> = OnceLock::new();
    CACHE.get_or_init(|| {
        let plane = |s| match lemma6_max_degree(s) {
            Ok(DegreeBound::Max(d)) => d,
            _ => 50,
        };
        [lemma6_s4_subbranch_bound(), plane(5), plane(6), plane(7)]
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigVerdict {
    pub d: i64,
    pub s: i64,
    pub config: ConnectedInvariants,
    pub z_cap: i64,
    pub constrained: bool,
    pub case_tag: Placement,
    pub profile: SporadicProfile,
    /// `A` of the greedy profile.
    pub greedy_a: i64,
    /// `A` from the printed case formula (the naive column sum when
    /// unconstrained).
    pub case_formula_a: i64,
    pub w_greedy: i64,
    pub w_case_formula: i64,
    /// `d² - 5d - 10·Sg + 12·χΣ`
    pub base: i64,
    /// The `W` used for the verdict, per [`WMode`].
    pub w_max: i64,
    /// `base - w_max - 18`
    pub margin: i64,
    pub feasible: bool,
    pub k2_bound_twice: i64,
    /// The Ellingsrud–Peskine `γ` cap is applied below `2s²` without its
    /// usual hypothesis.
    pub ep_unguarded: bool,
}

/// Checks one configuration against the master inequality with the
/// certified options.
pub fn eq4_check(d: i64, s: i64, lambda: &[i64]) -> Result<ConfigVerdict> {
    eq4_check_with(d, s, lambda, &CertifierOptions::certified())
}

pub fn eq4_check_with(
    d: i64,
    s: i64,
    lambda: &[i64],
    opts: &CertifierOptions,
) -> Result<ConfigVerdict> {
    let sum: i64 = lambda.iter().sum();
    if sum != d {
        return Err(Error::DegreeMismatch { sum, d });
    }
    if s < 2 {
        return Err(Error::OutOfRange {
            name: "s",
            value: s,
            expected: ">= 2",
        });
    }
    let violations: Vec<Violation> = validate_config(lambda, d, s);
    if !violations.is_empty() {
        return Err(Error::InvalidConfig(violations));
    }
    let config = ConnectedInvariants::new(lambda.to_vec(), d, s)?;
    let sg = genus_sum(lambda);
    let base = d * d - 5 * d - 10 * sg + 12 * chi_sum(lambda);
    let mut z_cap = sporadic_cap_with(lambda, opts.genus_floor);
    if s == 4 && opts.s4_cap == S4Cap::PrintedConstant {
        z_cap += 1;
    }
    let constrained = d > constraint_threshold(s, opts.activation);
    let ep_unguarded = d < 2 * s * s;

    if z_cap < 0 {
        return Ok(ConfigVerdict {
            d,
            s,
            config,
            z_cap,
            constrained,
            case_tag: Placement::CaseI,
            profile: SporadicProfile::empty(Placement::CaseI),
            greedy_a: 0,
            case_formula_a: 0,
            w_greedy: 0,
            w_case_formula: 0,
            base,
            w_max: 0,
            margin: base - TWICE_K2_MAX,
            feasible: false,
            k2_bound_twice: TWICE_K2_MAX,
            ep_unguarded,
        });
    }

    let (l0, l1) = (lambda[0], lambda[1]);
    let profile = extremal_profile(l0, l1, d, z_cap, constrained)?;
    let stats = profile.stats();
    let (case_tag, case_formula_a) = if constrained {
        case_bound_a(l0, l1, d, z_cap)?
    } else {
        (Placement::Unconstrained, range_sum(l0, l0 + z_cap - 1))
    };
    let w_case_formula = 12 * case_formula_a - 22 * z_cap;
    let w_max = match opts.w_mode {
        WMode::Greedy => stats.w,
        WMode::CaseFormula => w_case_formula,
    };
    let margin = base - w_max - TWICE_K2_MAX;
    Ok(ConfigVerdict {
        d,
        s,
        config,
        z_cap,
        constrained,
        case_tag,
        greedy_a: stats.a,
        case_formula_a,
        w_greedy: stats.w,
        w_case_formula,
        profile,
        base,
        w_max,
        margin,
        feasible: margin <= 0,
        k2_bound_twice: TWICE_K2_MAX,
        ep_unguarded,
    })
}

/// Right side of the aggregate inequality after substituting the genus and χ
/// bounds, with `Σ α_t (12t - 22)` replaced by `12·a - 22·z`:
///
/// `d² - 5d - 10(d²/(2s) + (s-4)d/2) + 12 s C(d/s + (s-3)/2, 3)
///  + 12(1 - C(s-1, 4)) - (12a - 22z)`.
pub fn eq7_expression(d: &Rational, s: i64, a: &Rational, z: &Rational) -> Rational {
    let genus = d * d / (2 * s) + d * (s - 4) / 2i64;
    let chi = binom_general(&(d / s + Rational::new(s - 3, 2)), 3) * (12 * s);
    let constant = (Rational::one() - binom_int(s - 1, 4)) * 12i64;
    d * d - d * 5i64 - genus * 10i64 + chi + constant - (a * 12i64 - z * 22i64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Eq7Verdict {
    pub d: i64,
    pub s: i64,
    pub a_estimate: Rational,
    pub gamma: Rational,
    pub value: Rational,
    pub feasible: bool,
}

/// Evaluates the aggregate inequality at the first estimate of `A` and the
/// simplified `γ` cap as the zero count.
pub fn eq7_check(d: i64, s: i64) -> Result<Eq7Verdict> {
    if !(4..=7).contains(&s) {
        return Err(Error::OutOfRange {
            name: "s",
            value: s,
            expected: "4..=7",
        });
    }
    let gate = (s - 1) * (s - 1) + 1;
    if d <= gate {
        return Err(Error::BelowHypothesis { d, s, gate });
    }
    let dr = Rational::from(d);
    let a = first_estimate_a_at(&dr, s);
    let gamma = gamma_simplified(&dr, s).expect("s in 4..=7");
    let value = eq7_expression(&dr, s, &a, &gamma);
    let feasible = value <= TWICE_K2_MAX;
    Ok(Eq7Verdict {
        d,
        s,
        a_estimate: a,
        gamma,
        value,
        feasible,
    })
}

/// Coefficients `(c3, c2, c1, c0)` of the cubic through `f(0..=3)`, checked
/// against `f` at two further points.
fn cubic_through(f: impl Fn(&Rational) -> Rational) -> [Rational; 4] {
    let v: Vec<Rational> = (0..4).map(|x| f(&Rational::from(x))).collect();
    let d1 = &v[1] - &v[0];
    let d2 = &v[2] - &v[1] * 2i64 + &v[0];
    let d3 = &v[3] - &v[2] * 3i64 + &v[1] * 3i64 - &v[0];
    let c3 = &d3 / 6i64;
    let c2 = &d2 / 2i64 - &d3 / 2i64;
    let c1 = &d1 - &d2 / 2i64 + &d3 / 3i64;
    let coeffs = [c3, c2, c1, v[0].clone()];
    for x in [17i64, 101] {
        let x = Rational::from(x);
        assert_eq!(cubic_eval(&coeffs, &x), f(&x), "expression is not a cubic");
    }
    coeffs
}

pub fn cubic_eval(coeffs: &[Rational; 4], d: &Rational) -> Rational {
    coeffs.iter().fold(Rational::zero(), |acc, c| acc * d + c)
}

/// The aggregate inequality minus 18 as a cubic in `d`, for `s = 4, 5`.
pub fn eq7_cubic_coeffs(s: i64) -> Result<[Rational; 4]> {
    if !(4..=5).contains(&s) {
        return Err(Error::OutOfRange {
            name: "s",
            value: s,
            expected: "4 or 5",
        });
    }
    Ok(cubic_through(|d| {
        let a = first_estimate_a_at(d, s);
        let z = gamma_simplified(d, s).expect("s in 4..=7");
        eq7_expression(d, s, &a, &z) - TWICE_K2_MAX
    }))
}

const CUBIC_SCAN_TOP: i64 = 200;

/// Largest integer `d <= 200` with `cubic(d) <= 0`.
pub fn cubic_max_admissible(coeffs: &[Rational; 4]) -> Option<i64> {
    (0..=CUBIC_SCAN_TOP)
        .rev()
        .find(|&d| cubic_eval(coeffs, &d.into()) <= 0i64)
}

/// The degree cut-off from the aggregate inequality, next to the published
/// value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Eq7Bracket {
    pub s: i64,
    pub coeffs: [Rational; 4],
    pub computed_bound: i64,
    pub value_at_bound: Rational,
    pub value_above_bound: Rational,
    pub printed_bound: i64,
    pub agrees: bool,
}

pub fn eq7_bracket(s: i64) -> Result<Eq7Bracket> {
    let coeffs = eq7_cubic_coeffs(s)?;
    let computed_bound = cubic_max_admissible(&coeffs).expect("cubic has a nonpositive value");
    let printed_bound = if s == 4 { 67 } else { 71 };
    Ok(Eq7Bracket {
        s,
        value_at_bound: cubic_eval(&coeffs, &computed_bound.into()),
        value_above_bound: cubic_eval(&coeffs, &(computed_bound + 1).into()),
        coeffs,
        computed_bound,
        printed_bound,
        agrees: computed_bound == printed_bound,
    })
}

/// The printed bound `A <= 5/32 d² + 13/8 d - 3` of the `s = 4` plane-curve
/// sub-argument.
pub fn lemma6_s4_printed_a(d: &Rational) -> Rational {
    d * d * Rational::new(5, 32) + d * Rational::new(13, 8) - 3i64
}

/// The naive column sum from `λ0 = d/4 + 3` with `3d/4` zeros; evaluates to
/// `15/32 d² + 15/8 d`, which is not the printed quadratic.
pub fn lemma6_s4_naive_a(d: &Rational) -> Rational {
    let lambda0 = d / 4i64 + 3i64;
    let z = d * 3i64 / 4i64;
    let top = &lambda0 + &z - 1i64;
    range_sum_poly(&lambda0, &top)
}

/// The `s = 4` sub-branch cubic (printed `A`, `3d/4` zeros) minus 18.
pub fn lemma6_s4_cubic_coeffs() -> [Rational; 4] {
    cubic_through(|d| {
        eq7_expression(d, 4, &lemma6_s4_printed_a(d), &(d * 3i64 / 4i64)) - TWICE_K2_MAX
    })
}

/// Largest degree admitted by the `s = 4` sub-branch cubic.
pub fn lemma6_s4_subbranch_bound() -> i64 {
    cubic_max_admissible(&lemma6_s4_cubic_coeffs()).expect("cubic has a nonpositive value")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeVerdicts {
    pub d: i64,
    pub verdicts: Vec<ConfigVerdict>,
}

impl DegreeVerdicts {
    pub fn any_feasible(&self) -> bool {
        self.verdicts.iter().any(|v| v.feasible)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub s: i64,
    pub d_max: i64,
    pub d_min: i64,
    pub constraint_threshold: i64,
    pub options: CertifierOptions,
    /// Scanned degrees, descending; the last entry is the first feasible one
    /// if any was found.
    pub degrees: Vec<DegreeVerdicts>,
    pub max_feasible_d: Option<i64>,
}

/// `(d_max, d_min)` used when a scan is requested without explicit limits.
///
/// `d_max` encodes the earlier reductions (67 for `s = 4`, 73 for `s = 5`
/// where the cubic admits 73 although 71 is printed, 90 for `s = 6, 7`);
/// `d_min` is the first degree at which the placement constraints hold.
pub fn default_scan_range(s: i64, activation: Activation) -> (i64, i64) {
    let d_max = match s {
        4 => 67,
        5 => 73,
        _ => 90,
    };
    (d_max, constraint_threshold(s, activation) + 1)
}

pub fn scan_degrees(s: i64, d_max: i64, d_min: i64) -> Result<ScanReport> {
    scan_degrees_with(s, d_max, d_min, &CertifierOptions::certified())
}

/// Descending scan over `d_max..=d_min`, stopping at the first degree with a
/// feasible configuration.
pub fn scan_degrees_with(
    s: i64,
    d_max: i64,
    d_min: i64,
    opts: &CertifierOptions,
) -> Result<ScanReport> {
    if !(4..=7).contains(&s) {
        return Err(Error::OutOfRange {
            name: "s",
            value: s,
            expected: "4..=7",
        });
    }
    let mut degrees = Vec::new();
    let mut max_feasible_d = None;
    for d in (d_min.max(1)..=d_max).rev() {
        let verdicts = enumerate_configs(d, s)
            .iter()
            .map(|c| eq4_check_with(d, s, c, opts))
            .collect::<Result<Vec<_>>>()?;
        let entry = DegreeVerdicts { d, verdicts };
        let stop = entry.any_feasible();
        degrees.push(entry);
        if stop {
            max_feasible_d = Some(d);
            break;
        }
    }
    Ok(ScanReport {
        s,
        d_max,
        d_min,
        constraint_threshold: constraint_threshold(s, opts.activation),
        options: *opts,
        degrees,
        max_feasible_d,
    })
}

/// Scan with the default range for `s`.
pub fn scan_default(s: i64, opts: &CertifierOptions) -> Result<ScanReport> {
    let (d_max, d_min) = default_scan_range(s, opts.activation);
    scan_degrees_with(s, d_max, d_min, opts)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Branch {
    pub label: String,
    pub bound: i64,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub bound: i64,
    pub branches: Vec<Branch>,
}

pub fn theorem_bound() -> TheoremReport {
    theorem_bound_with(&CertifierOptions::certified())
}

/// Maximum over the branches `s = 3` (cubic hypersurface), `s = 4..=7`
/// (degree scans) and `s >= 8` (Ellingsrud–Peskine with `σ = 7`).
pub fn theorem_bound_with(opts: &CertifierOptions) -> TheoremReport {
    let mut branches = vec![Branch {
        label: "s=3".into(),
        bound: CUBIC_HYPERSURFACE_BOUND,
        source: "surfaces on a cubic hypersurface".into(),
    }];
    for s in 4..=7 {
        let report = scan_default(s, opts).expect("s in range");
        let (d_max, d_min) = default_scan_range(s, opts.activation);
        branches.push(Branch {
            label: format!("s={s}"),
            // a scan that finds nothing feasible still only certifies the
            // bottom of its interval
            bound: report.max_feasible_d.unwrap_or(d_min - 1),
            source: format!("Eq(4) scan over d in [{d_min}, {d_max}]"),
        });
    }
    branches.push(Branch {
        label: "s>=8".into(),
        bound: ep_degree_threshold(7).expect("sigma = 7 is valid"),
        source: "Prop 2 with sigma = 7".into(),
    });
    let bound = branches.iter().map(|b| b.bound).max().unwrap_or(0);
    TheoremReport { bound, branches }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub s: i64,
    pub printed: i64,
    pub greedy: Option<i64>,
    pub case_formula: Option<i64>,
    /// Greedy scan with the printed `s = 4` cap; `None` for other `s`.
    pub printed_s4_cap: Option<i64>,
    pub deviation: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinalTable {
    pub rows: Vec<TableRow>,
    pub theorem: TheoremReport,
    pub theorem_case_formula: TheoremReport,
    pub notes: Vec<String>,
}

/// Value printed for each `s` in the final table.
pub fn printed_table_bound(s: i64) -> Option<i64> {
    match s {
        4 => Some(65),
        5 => Some(66),
        6 => Some(44),
        7 => Some(43),
        _ => None,
    }
}

/// Per-`s` bounds under the certified options, the case-formula `W`
/// variant, and (for `s = 4`) the printed zero cap.
pub fn final_table() -> FinalTable {
    let greedy = CertifierOptions::certified();
    let case_formula = greedy.with_w_mode(WMode::CaseFormula);
    let s4_printed = greedy.with_s4_cap(S4Cap::PrintedConstant);
    let run = |s, o: &CertifierOptions| scan_default(s, o).expect("s in range").max_feasible_d;

    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for s in 4..=7 {
        let printed = printed_table_bound(s).expect("s in 4..=7");
        let g = run(s, &greedy);
        let c = run(s, &case_formula);
        let p4 = (s == 4).then(|| run(s, &s4_printed)).flatten();
        let deviation = g.map(|g| g - printed);
        if deviation != Some(0) {
            notes.push(format!(
                "s={s}: scan gives {} (printed {printed}); case-formula W gives {}{}",
                fmt_opt(g),
                fmt_opt(c),
                if s == 4 {
                    format!("; printed s=4 zero cap gives {}", fmt_opt(p4))
                } else {
                    String::new()
                }
            ));
        }
        rows.push(TableRow {
            s,
            printed,
            greedy: g,
            case_formula: c,
            printed_s4_cap: p4,
            deviation,
        });
    }
    FinalTable {
        rows,
        theorem: theorem_bound_with(&greedy),
        theorem_case_formula: theorem_bound_with(&case_formula),
        notes,
    }
}

fn fmt_opt(v: Option<i64>) -> String {
    v.map_or_else(|| "none".to_string(), |d| d.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn worked_verdict_d71() {
        let v = eq4_check(71, 5, &[18, 16, 14, 12, 11]).unwrap();
        assert_eq!(v.base, 28382);
        assert_eq!(v.z_cap, 69);
        assert_eq!(v.case_tag, Placement::CaseIII);
        assert_eq!(v.w_greedy, 27258);
        assert_eq!(v.margin, 1106);
        assert!(!v.feasible);
        // the literal case (iii) formula also counts the dropped degree-17 slot
        assert_eq!(v.case_formula_a, 2398 + 17);
    }

    #[test]
    fn low_degree_verdict_with_rounded_floor() {
        let opts = CertifierOptions::certified().with_genus_floor(GenusFloor::Rounded);
        let v = eq4_check_with(20, 4, &[8, 6, 4, 2], &opts).unwrap();
        assert_eq!(v.base, 640);
        assert_eq!(v.z_cap, 20);
        assert!(!v.constrained);
        assert_eq!(v.w_greedy, 3760);
        assert!(v.feasible);
        assert!(v.ep_unguarded);
    }

    #[test]
    fn negative_cap_is_infeasible() {
        // a compact configuration whose genus sum is below the genus floor
        let v = eq4_check(86, 6, &[17, 16, 15, 14, 13, 11]).unwrap();
        assert_eq!(v.z_cap, -3);
        assert!(!v.feasible);
        assert!(v.profile.is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            eq4_check(70, 5, &[18, 16, 14, 12, 11]),
            Err(Error::DegreeMismatch { sum: 71, d: 70 })
        );
        assert!(matches!(
            eq4_check(70, 5, &[18, 15, 14, 12, 11]),
            Err(Error::InvalidConfig(_))
        ));
        assert!(eq4_check(3, 1, &[3]).is_err());
    }

    #[test]
    fn eq7_examples() {
        assert!(eq7_check(67, 4).unwrap().feasible);
        assert!(!eq7_check(68, 4).unwrap().feasible);
        assert!(eq7_check(71, 5).unwrap().feasible);
        assert_eq!(eq7_check(68, 4).unwrap().value - TWICE_K2_MAX, r(2101, 4));
        assert!(matches!(
            eq7_check(10, 4),
            Err(Error::BelowHypothesis { .. })
        ));
        assert!(eq7_check(80, 8).is_err());
    }

    #[test]
    fn eq7_cubics() {
        assert_eq!(
            eq7_cubic_coeffs(4).unwrap(),
            [r(1, 8), r(-523, 64), r(-29, 2), r(-6, 1)]
        );
        assert_eq!(
            eq7_cubic_coeffs(5).unwrap(),
            [r(2, 25), r(-27, 5), r(-32, 1), r(-21, 1)]
        );
        for s in [4, 5] {
            let c = eq7_cubic_coeffs(s).unwrap();
            for d in 40..=90 {
                let v = eq7_check(d, s).unwrap();
                assert_eq!(cubic_eval(&c, &d.into()), v.value - TWICE_K2_MAX);
            }
        }
    }

    #[test]
    fn lemma6_sub_branch() {
        assert_eq!(
            lemma6_s4_cubic_coeffs(),
            [r(1, 8), r(-23, 8), r(-17, 2), r(33, 1)]
        );
        assert_eq!(lemma6_s4_subbranch_bound(), 25);
        let d = Rational::from(64);
        assert_eq!(lemma6_s4_naive_a(&d), &d * &d * r(15, 32) + &d * r(15, 8));
        assert_ne!(lemma6_s4_naive_a(&d), lemma6_s4_printed_a(&d));
    }

    #[test]
    fn thresholds() {
        assert_eq!(constraint_threshold(4, Activation::PerS), 25);
        assert_eq!(constraint_threshold(5, Activation::PerS), 50);
        assert_eq!(constraint_threshold(6, Activation::PerS), 42);
        assert_eq!(constraint_threshold(7, Activation::PerS), 42);
        assert_eq!(constraint_threshold(6, Activation::Uniform50), 50);
        assert_eq!(default_scan_range(7, Activation::PerS), (90, 43));
        assert_eq!(default_scan_range(5, Activation::PerS), (73, 51));
    }

    #[test]
    fn scan_reports_interval_and_stops() {
        let rep = scan_degrees(5, 71, 51).unwrap();
        assert_eq!(rep.max_feasible_d, Some(66));
        assert_eq!(rep.degrees.first().unwrap().d, 71);
        assert_eq!(rep.degrees.last().unwrap().d, 66);
        assert_eq!((rep.d_max, rep.d_min), (71, 51));

        let rep = scan_degrees(5, 90, 80).unwrap();
        assert_eq!(rep.max_feasible_d, None);
        assert_eq!(rep.degrees.len(), 11);
    }

    #[test]
    fn rounded_floor_loses_s5() {
        // with the non-strict floor [18,16,14,12,10] at d = 70 has base = W exactly
        let opts = CertifierOptions::certified().with_genus_floor(GenusFloor::Rounded);
        let v = eq4_check_with(70, 5, &[18, 16, 14, 12, 10], &opts).unwrap();
        assert_eq!((v.z_cap, v.base, v.w_greedy), (70, 27440, 27440));
        assert!(v.feasible);
        let v = eq4_check(70, 5, &[18, 16, 14, 12, 10]).unwrap();
        assert_eq!(v.z_cap, 69);
        assert!(!v.feasible);
    }
}
