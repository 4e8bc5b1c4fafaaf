//! Borel-fixed monomial ideals in `k[x0, x1, x2, x3]` as an executable model of
//! generic initial ideals of space curves.
//!
//! Everything here is brute force on purpose: the genus read off the Hilbert
//! function is compared against the closed genus formula in terms of the
//! connected invariants and the sporadic zeros.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::bounds::genus_sum;
use crate::error::{Error, Result};
use crate::sporadic::{Placement, SporadicProfile};

pub const NVARS: usize = 4;

/// Exponent vector of `x0^a x1^b x2^c x3^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub fn new(a: u32, b: u32, c: u32, e: u32) -> Self {
        Monomial([a, b, c, e])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(x, y)| x <= y)
    }

    pub fn times(&self, var: usize) -> Monomial {
        let mut e = self.0;
        e[var] += 1;
        Monomial(e)
    }

    /// `self · x_i / x_j`, if `x_j` divides `self`.
    pub fn borel_move(&self, i: usize, j: usize) -> Option<Monomial> {
        if self.0[j] == 0 {
            return None;
        }
        let mut e = self.0;
        e[j] -= 1;
        e[i] += 1;
        Some(Monomial(e))
    }

    fn exp(&self, var: usize) -> i64 {
        i64::from(self.0[var])
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (var, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{var}")),
                _ => parts.push(format!("x{var}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A monomial ideal stored by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding redundant generators.
    pub fn new<I: IntoIterator<Item = Monomial>>(gens: I) -> Self {
        let unique: BTreeSet<Monomial> = gens.into_iter().collect();
        let mut generators: Vec<Monomial> = unique
            .iter()
            .filter(|m| !unique.iter().any(|g| g != *m && g.divides(m)))
            .copied()
            .collect();
        generators.sort_by(|a, b| b.cmp(a));
        MonomialIdeal { generators }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn max_degree(&self) -> u32 {
        self.generators
            .iter()
            .map(Monomial::degree)
            .max()
            .unwrap_or(0)
    }

    /// Curve gins are generated by monomials in `x0, x1, x2` only.
    pub fn is_curve_mode(&self) -> bool {
        self.generators.iter().all(|g| g.0[3] == 0)
    }

    fn require_curve_mode(&self) -> Result<()> {
        match self.generators.iter().find(|g| g.0[3] != 0) {
            Some(g) => Err(Error::NotCurveMode(g.to_string())),
            None => Ok(()),
        }
    }

    fn require_borel(&self) -> Result<()> {
        match self.borel_violation() {
            Some(msg) => Err(Error::NotBorel(msg)),
            None => Ok(()),
        }
    }

    fn borel_violation(&self) -> Option<String> {
        for g in &self.generators {
            for j in 1..NVARS {
                for i in 0..j {
                    if let Some(m) = g.borel_move(i, j) {
                        if !self.contains(&m) {
                            return Some(format!("{g} is in the ideal but {m} is not"));
                        }
                    }
                }
            }
        }
        None
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(Monomial::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl FromStr for MonomialIdeal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_ideal(s)
    }
}

/// Parses comma-separated monomials such as `"x0^2, x0*x1, x1^3, x0*x2^3"`.
/// Whitespace is ignored and `*` between factors is optional.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let end = text.len();
    let err = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: msg.to_string(),
    };
    let mut gens = Vec::new();
    let mut i = 0;
    loop {
        let start = chars.get(i).map_or(end, |c| c.0);
        let mut exps = [0u32; NVARS];
        let mut factors = 0;
        while i < chars.len() && chars[i].1 != ',' {
            let (pos, c) = chars[i];
            if factors > 0 && c == '*' {
                i += 1;
                if i >= chars.len() || chars[i].1 != 'x' {
                    return Err(err(pos, "expected a variable after '*'"));
                }
                continue;
            }
            if c != 'x' {
                return Err(err(pos, &format!("unexpected character {c:?}")));
            }
            i += 1;
            let (vpos, var) = read_number(&chars, &mut i)
                .ok_or_else(|| err(chars.get(i).map_or(end, |c| c.0), "expected variable index"))?;
            if var >= NVARS as u64 {
                return Err(err(vpos, &format!("unknown variable x{var}")));
            }
            let mut e = 1u64;
            if i < chars.len() && chars[i].1 == '^' {
                let hat = chars[i].0;
                i += 1;
                if i < chars.len() && chars[i].1 == '-' {
                    return Err(err(chars[i].0, "exponents must be positive"));
                }
                let (_, v) =
                    read_number(&chars, &mut i).ok_or_else(|| err(hat, "expected exponent"))?;
                if v == 0 {
                    return Err(err(hat, "exponents must be positive"));
                }
                e = v;
            }
            let slot = &mut exps[var as usize];
            *slot = u32::try_from(u64::from(*slot) + e)
                .map_err(|_| err(start, "exponent too large"))?;
            factors += 1;
        }
        if factors == 0 {
            return Err(err(start, "empty monomial"));
        }
        gens.push(Monomial(exps));
        if i >= chars.len() {
            break;
        }
        i += 1; // ','
    }
    Ok(MonomialIdeal::new(gens))
}

fn read_number(chars: &[(usize, char)], i: &mut usize) -> Option<(usize, u64)> {
    let start = *i;
    let mut v: u64 = 0;
    while *i < chars.len() && chars[*i].1.is_ascii_digit() {
        v = v
            .checked_mul(10)?
            .checked_add(u64::from(chars[*i].1.to_digit(10)?))?;
        *i += 1;
    }
    (*i > start).then(|| (chars[start].0, v))
}

/// True iff `m · x_i / x_j` lies in the ideal for every generator `m`, every
/// `x_j` dividing `m` and every `i < j`.
pub fn is_borel_fixed(ideal: &MonomialIdeal) -> bool {
    ideal.borel_violation().is_none()
}

/// For a column `x0^a x1^b`, the smallest `c` with `x0^a x1^b x2^c` in the ideal.
fn column_entry(ideal: &MonomialIdeal, a: i64, b: i64) -> Option<i64> {
    ideal
        .generators
        .iter()
        .filter(|g| g.exp(0) <= a && g.exp(1) <= b)
        .map(|g| g.exp(2))
        .min()
}

/// Monomials `x0^a x1^b x2^c` outside the ideal with a higher power of `x2` in
/// the same column inside it, counted by total degree.
pub fn sporadic_zeros(ideal: &MonomialIdeal) -> Result<SporadicProfile> {
    ideal.require_curve_mode()?;
    ideal.require_borel()?;
    let a_max = ideal.generators.iter().map(|g| g.exp(0)).max().unwrap_or(0);
    let b_max = ideal.generators.iter().map(|g| g.exp(1)).max().unwrap_or(0);
    let mut profile = SporadicProfile::empty(Placement::Observed);
    for a in 0..=a_max {
        for b in 0..=b_max {
            let Some(c) = column_entry(ideal, a, b) else {
                continue;
            };
            if c == 0 {
                continue;
            }
            // Columns beyond the generator exponents repeat the boundary one.
            // Borel-fixedness puts x0^(a+c) x1^b in the ideal, so this cannot
            // fire after the check above; it guards the counting loop anyway.
            if a == a_max || b == b_max {
                return Err(Error::InfiniteSporadic);
            }
            for t in a + b..a + b + c {
                profile.add(t, 1);
            }
        }
    }
    Ok(profile)
}

/// Restriction to `x3 = 0` followed by saturation with respect to `x2`: every
/// generator `x0^a x1^b x2^c` becomes `x0^a x1^b`.
pub fn saturate_restrict(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    ideal.require_curve_mode()?;
    Ok(MonomialIdeal::new(
        ideal
            .generators
            .iter()
            .map(|g| Monomial::new(g.0[0], g.0[1], 0, 0)),
    ))
}

/// `s` and `λ0 > ... > λ_{s-1}` of a point gin `(x0^s, x0^{s-1} x1^{λ_{s-1}}, ..., x1^{λ0})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointInvariants {
    pub s: i64,
    pub lambda: Vec<i64>,
    pub d: i64,
}

/// Reads the invariants of a saturated point gin. Connectedness of the gaps is
/// not required.
pub fn connected_invariants_of(ideal: &MonomialIdeal) -> Result<PointInvariants> {
    if let Some(g) = ideal.generators.iter().find(|g| g.0[2] != 0 || g.0[3] != 0) {
        return Err(Error::NotStaircase(format!(
            "generator {g} involves x2 or x3"
        )));
    }
    let s = ideal
        .generators
        .iter()
        .filter(|g| g.0[1] == 0)
        .map(|g| g.exp(0))
        .min()
        .ok_or_else(|| Error::NotStaircase("no pure power of x0".into()))?;
    let mut lambda = Vec::with_capacity(s as usize);
    for i in 0..s {
        let l = ideal
            .generators
            .iter()
            .filter(|g| g.exp(0) <= i)
            .map(|g| g.exp(1))
            .min()
            .ok_or_else(|| Error::NotStaircase("no pure power of x1".into()))?;
        lambda.push(l);
    }
    if let Some(w) = lambda.windows(2).find(|w| w[1] >= w[0]) {
        return Err(Error::NotStaircase(format!(
            "lambda not strictly decreasing ({} then {})",
            w[0], w[1]
        )));
    }
    let d = lambda.iter().sum();
    Ok(PointInvariants { s, lambda, d })
}

/// Number of monomials of degree `t` in `x0..x3` outside the ideal.
pub fn hilbert_function(ideal: &MonomialIdeal, t: u32) -> i64 {
    let mut count = 0;
    for a in 0..=t {
        for b in 0..=t - a {
            for c in 0..=t - a - b {
                let m = Monomial::new(a, b, c, t - a - b - c);
                if !ideal.contains(&m) {
                    count += 1;
                }
            }
        }
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HilbertGenus {
    pub d: i64,
    pub pi: i64,
    /// Degree at which `H(t) = d·t + 1 - π` was read off.
    pub t: i64,
}

/// Degree and arithmetic genus from the Hilbert polynomial `d·t + 1 - π`,
/// declared stable once three consecutive first differences agree at the
/// cutoff `max generator degree + 4`.
pub fn hilbert_genus(ideal: &MonomialIdeal) -> Result<HilbertGenus> {
    ideal.require_curve_mode()?;
    let cutoff = ideal.max_degree() + 4;
    let h: Vec<i64> = (0..=cutoff).map(|t| hilbert_function(ideal, t)).collect();
    let diff = |t: u32| h[t as usize] - h[t as usize - 1];
    let d = diff(cutoff);
    let stable = diff(cutoff - 1) == d && diff(cutoff - 2) == d;
    if !stable || d <= 0 {
        return Err(Error::NotCurveLike {
            cutoff: i64::from(cutoff),
        });
    }
    let t = i64::from(cutoff);
    Ok(HilbertGenus {
        d,
        pi: 1 + d * t - h[cutoff as usize],
        t,
    })
}

/// Removes the minimal generator `m` and adds `m·x0, m·x1, m·x2`, so that
/// exactly one monomial (of degree `deg m`) leaves the ideal.
pub fn lift(ideal: &MonomialIdeal, m: &Monomial) -> Result<MonomialIdeal> {
    ideal.require_curve_mode()?;
    ideal.require_borel()?;
    if !ideal.generators.contains(m) {
        return Err(Error::NotAGenerator(m.to_string()));
    }
    let lifted = MonomialIdeal::new(
        ideal
            .generators
            .iter()
            .filter(|g| *g != m)
            .copied()
            .chain((0..3).map(|v| m.times(v))),
    );
    if !is_borel_fixed(&lifted) {
        return Err(Error::LiftBreaksBorel(m.to_string()));
    }
    Ok(lifted)
}

/// Generators whose lift keeps the ideal Borel-fixed.
pub fn liftable_generators(ideal: &MonomialIdeal) -> Vec<Monomial> {
    ideal
        .generators
        .iter()
        .filter(|m| lift(ideal, m).is_ok())
        .copied()
        .collect()
}

/// `(x0^s, x0^{s-1} x1^{λ_{s-1}}, ..., x1^{λ0})`.
pub fn staircase_ideal(lambda: &[i64]) -> MonomialIdeal {
    let s = lambda.len() as u32;
    MonomialIdeal::new(
        lambda
            .iter()
            .enumerate()
            .map(|(i, &l)| Monomial::new(i as u32, l as u32, 0, 0))
            .chain(std::iter::once(Monomial::new(s, 0, 0, 0))),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Eq3Report {
    pub hilbert: HilbertGenus,
    pub invariants: PointInvariants,
    pub sporadic_total: i64,
    /// `1 + genus_sum(λ) - Σ α_t`
    pub formula_pi: i64,
    pub holds: bool,
}

/// Compares the Hilbert-function genus with `1 + genus_sum(λ) - Σ α_t`.
pub fn eq3_crosscheck(ideal: &MonomialIdeal) -> Result<Eq3Report> {
    let hilbert = hilbert_genus(ideal)?;
    let invariants = connected_invariants_of(&saturate_restrict(ideal)?)?;
    let sporadic_total = sporadic_zeros(ideal)?.total();
    let formula_pi = 1 + genus_sum(&invariants.lambda) - sporadic_total;
    Ok(Eq3Report {
        holds: hilbert.pi == formula_pi && hilbert.d == invariants.d,
        hilbert,
        invariants,
        sporadic_total,
        formula_pi,
    })
}

/// A staircase ideal with a recorded sequence of lifts applied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftedSample {
    pub lambda: Vec<i64>,
    pub ideal: MonomialIdeal,
    /// Degree of each lifted generator, in lift order.
    pub lift_degrees: Vec<i64>,
}

/// Random strictly decreasing `λ` with at most `max_s` parts and
/// `λ0 <= max_lambda0`, then up to `max_lifts` lifts of randomly chosen
/// liftable generators.
pub fn random_lifted_ideal<R: Rng>(
    rng: &mut R,
    max_s: usize,
    max_lambda0: i64,
    max_lifts: usize,
) -> LiftedSample {
    let s = rng.gen_range(1..=max_s.min(max_lambda0 as usize));
    let pool: Vec<i64> = (1..=max_lambda0).collect();
    let mut lambda: Vec<i64> = pool.choose_multiple(rng, s).copied().collect();
    lambda.sort_by(|a, b| b.cmp(a));
    let mut ideal = staircase_ideal(&lambda);
    let mut lift_degrees = Vec::new();
    for _ in 0..rng.gen_range(0..=max_lifts) {
        let candidates = liftable_generators(&ideal);
        let Some(m) = candidates.choose(rng) else {
            break;
        };
        ideal = lift(&ideal, m).expect("candidate is liftable");
        lift_degrees.push(i64::from(m.degree()));
    }
    LiftedSample {
        lambda,
        ideal,
        lift_degrees,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleFailure {
    pub trial: usize,
    pub ideal: MonomialIdeal,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub seed: u64,
    pub trials: usize,
    pub total_lifts: usize,
    pub failures: Vec<OracleFailure>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks one sample: the genus formula, the recorded lift degrees, Borel
/// fixedness and an unchanged saturation.
pub fn check_sample(sample: &LiftedSample) -> std::result::Result<(), String> {
    if !is_borel_fixed(&sample.ideal) {
        return Err("lifted ideal is not Borel-fixed".into());
    }
    let sat = saturate_restrict(&sample.ideal).map_err(|e| e.to_string())?;
    if sat != staircase_ideal(&sample.lambda) {
        return Err(format!("saturation changed to {sat}"));
    }
    let profile = sporadic_zeros(&sample.ideal).map_err(|e| e.to_string())?;
    let mut expected = sample.lift_degrees.clone();
    expected.sort();
    if profile.degrees() != expected {
        return Err(format!(
            "sporadic degrees {:?} differ from lift degrees {:?}",
            profile.degrees(),
            expected
        ));
    }
    let report = eq3_crosscheck(&sample.ideal).map_err(|e| e.to_string())?;
    if !report.holds {
        return Err(format!(
            "Hilbert genus {} (degree {}) but formula gives {} (degree {})",
            report.hilbert.pi, report.hilbert.d, report.formula_pi, report.invariants.d
        ));
    }
    Ok(())
}

/// Runs `trials` random samples (s <= 4, λ0 <= 12, up to 10 lifts) from a
/// ChaCha8 stream seeded with `seed`.
pub fn run_oracle(trials: usize, seed: u64) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut total_lifts = 0;
    for trial in 0..trials {
        let sample = random_lifted_ideal(&mut rng, 4, 12, 10);
        total_lifts += sample.lift_degrees.len();
        if let Err(reason) = check_sample(&sample) {
            failures.push(OracleFailure {
                trial,
                ideal: sample.ideal,
                reason,
            });
        }
    }
    OracleReport {
        seed,
        trials,
        total_lifts,
        failures,
    }
}
