//! One function per subcommand, each building a [`Report`].

use p4bound::bounds::{
    chi_sum, ep_degree_threshold, gamma_cap, gamma_cap_double_point, gamma_cap_ep,
    gamma_simplified, genus_sum, gp_bound, lemma6_max_degree, pi_floor_with, GenusFloor,
};
use p4bound::certifier::{
    default_scan_range, eq4_check_with, eq7_bracket, eq7_check, final_table,
    lemma6_s4_subbranch_bound, scan_degrees_with, CertifierOptions, ConfigVerdict,
};
use p4bound::gin::{
    eq3_crosscheck, hilbert_genus, run_oracle, saturate_restrict, sporadic_zeros, MonomialIdeal,
};
use p4bound::{enumerate_configs, Error, Rational, Result};
use serde_json::json;

use crate::report::{Report, Table};

pub struct Outcome {
    pub report: Report,
    pub exit: u8,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, exit: 0 }
    }
}

const EQ4: &str =
    "Eq(4): d^2 - 5d - 10*genus_sum + 12*chi_sum - sum_t alpha_t(12t - 22) <= 2K^2 <= 18";
const EQ3: &str = "Eq(3): zero budget z = 1 + genus_sum - pi_floor";

fn opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |d| d.to_string())
}

fn join(lambda: &[i64]) -> String {
    lambda
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn check_range(name: &'static str, value: i64, lo: i64, expected: &'static str) -> Result<()> {
    if value < lo {
        return Err(Error::OutOfRange {
            name,
            value,
            expected,
        });
    }
    Ok(())
}

fn verdict_table(title: &str) -> Table {
    Table::new(
        title,
        &[
            "d", "lambda", "z", "case", "base", "W", "margin", "feasible",
        ],
    )
}

fn push_verdict(t: &mut Table, v: &ConfigVerdict) {
    t.push([
        v.d.to_string(),
        join(&v.config),
        v.z_cap.to_string(),
        v.case_tag.to_string(),
        v.base.to_string(),
        v.w_max.to_string(),
        v.margin.to_string(),
        v.feasible.to_string(),
    ]);
}

pub fn table() -> Result<Outcome> {
    let ft = final_table();
    let opts = CertifierOptions::certified();
    let ranges: Vec<_> = (4..=7)
        .map(|s| {
            let (d_max, d_min) = default_scan_range(s, opts.activation);
            json!({ "s": s, "d_min": d_min, "d_max": d_max })
        })
        .collect();

    let mut rows = Table::new(
        "per-s bounds",
        &[
            "s",
            "published",
            "scan",
            "case-formula W",
            "published s=4 cap",
            "deviation",
        ],
    );
    for r in &ft.rows {
        rows.push([
            r.s.to_string(),
            r.printed.to_string(),
            opt(r.greedy),
            opt(r.case_formula),
            opt(r.printed_s4_cap),
            opt(r.deviation),
        ]);
    }
    let mut branches = Table::new("theorem branches", &["branch", "bound", "source"]);
    for b in &ft.theorem.branches {
        branches.push([b.label.clone(), b.bound.to_string(), b.source.clone()]);
    }
    let mut report = Report::new("table", json!({ "final_table": ft, "scan_ranges": ranges }))
        .headline(format!(
            "theorem bound: {} (case-formula W: {})",
            ft.theorem.bound, ft.theorem_case_formula.bound
        ))
        .table(rows)
        .table(branches)
        .source(EQ4)
        .source(EQ3)
        .source("theorem bound: maximum over the s=3, s=4..7 and s>=8 branches");
    for n in &ft.notes {
        report = report.note(n.clone());
    }
    Ok(report.into())
}

pub fn scan(
    s: i64,
    dmax: Option<i64>,
    dmin: Option<i64>,
    opts: &CertifierOptions,
) -> Result<Outcome> {
    let (def_max, def_min) = default_scan_range(s, opts.activation);
    let (d_max, d_min) = (dmax.unwrap_or(def_max), dmin.unwrap_or(def_min));
    let rep = scan_degrees_with(s, d_max, d_min, opts)?;
    let mut t = verdict_table("verdicts");
    for dv in &rep.degrees {
        for v in &dv.verdicts {
            push_verdict(&mut t, v);
        }
    }
    let outcome = match rep.max_feasible_d {
        Some(d) => format!("max feasible d = {d}"),
        None => "no feasible degree in range".to_string(),
    };
    let mut report = Report::new("scan", &rep)
        .param("s", s)
        .param("dmax", d_max)
        .param("dmin", d_min)
        .param("options", opts)
        .headline(format!(
            "s={s}: scanned d in [{d_min}, {d_max}] (constraints apply above d={}); {outcome}",
            rep.constraint_threshold
        ))
        .table(t)
        .source(EQ4)
        .source(EQ3)
        .source("default d_max: Eq(7) cubic for s=4,5; 90 for s=6,7");
    if s == 5 && dmax.is_none() {
        report = report.note("the s=5 cubic admits d <= 73; 71 is the published value");
    }
    Ok(report.into())
}

pub fn configs(d: i64, s: i64) -> Result<Outcome> {
    check_range("s", s, 1, ">= 1")?;
    let list = enumerate_configs(d, s);
    let rows: Vec<_> = list
        .iter()
        .map(|c| json!({ "lambda": c, "genus_sum": genus_sum(c), "chi_sum": chi_sum(c) }))
        .collect();
    let mut t = Table::new("configurations", &["lambda", "genus_sum", "chi_sum"]);
    for c in &list {
        t.push([join(c), genus_sum(c).to_string(), chi_sum(c).to_string()]);
    }
    Ok(
        Report::new("configs", json!({ "count": list.len(), "configs": rows }))
            .param("d", d)
            .param("s", s)
            .headline(format!("{} configurations with d={d}, s={s}", list.len()))
            .table(t)
            .into(),
    )
}

pub fn check(d: i64, s: i64, lambda: &[i64], opts: &CertifierOptions) -> Result<Outcome> {
    let v = eq4_check_with(d, s, lambda, opts)?;
    let mut t = verdict_table("verdict");
    push_verdict(&mut t, &v);
    let mut profile = Table::new("extremal zero profile", &["degree", "zeros"]);
    for (deg, n) in v.profile.counts() {
        profile.push([deg, n]);
    }
    let word = if v.feasible { "FEASIBLE" } else { "INFEASIBLE" };
    let mut report = Report::new("check", &v)
        .param("d", d)
        .param("s", s)
        .param("lambda", lambda)
        .param("options", opts)
        .headline(format!(
            "{word} margin={} z={} case={}",
            v.margin, v.z_cap, v.case_tag
        ))
        .table(t)
        .table(profile)
        .note(format!(
            "greedy W = {}, case-formula W = {}",
            v.w_greedy, v.w_case_formula
        ))
        .source(EQ4)
        .source(EQ3);
    if v.ep_unguarded {
        report = report.note(format!(
            "d={d} < 2s^2={}: outside the range covered by the hypersurface reduction",
            2 * s * s
        ));
    }
    Ok(report.into())
}

pub fn eq7(s: i64, d: Option<i64>) -> Result<Outcome> {
    if let Some(d) = d {
        let v = eq7_check(d, s)?;
        let mut t = Table::new("first estimate", &["quantity", "value"]);
        t.push(["A".to_string(), v.a_estimate.to_string()]);
        t.push(["gamma".to_string(), v.gamma.to_string()]);
        t.push(["value".to_string(), v.value.to_string()]);
        t.push(["feasible".to_string(), v.feasible.to_string()]);
        return Ok(Report::new("eq7", &v)
            .param("s", s)
            .param("d", d)
            .headline(format!(
                "d={d} s={s}: value={} feasible={}",
                v.value, v.feasible
            ))
            .table(t)
            .source("Eq(7): Eq(4) at the first estimate of A with z = gamma")
            .into());
    }
    let b = eq7_bracket(s)?;
    let mut t = Table::new("cubic", &["coefficient", "value"]);
    for (name, c) in ["cubic", "quadratic", "linear", "constant"]
        .iter()
        .zip(&b.coeffs)
    {
        t.push([name.to_string(), c.to_string()]);
    }
    let next = b.computed_bound + 1;
    let mut report = Report::new("eq7", json!({ "bracket": &b, "next_degree": next }))
        .param("s", s)
        .headline(format!(
            "s={s}: largest admissible d = {} (published {}); f({}) = {}, f({}) = {}",
            b.computed_bound,
            b.printed_bound,
            b.computed_bound,
            b.value_at_bound,
            next,
            b.value_above_bound
        ))
        .table(t)
        .source("Eq(7): cubic obtained by substituting the first estimate into Eq(4)");
    if !b.agrees {
        report = report.note(format!(
            "computed bound {} differs from the published {}",
            b.computed_bound, b.printed_bound
        ));
    }
    Ok(report.into())
}

pub fn gamma(s: i64, d: i64) -> Result<Outcome> {
    check_range("s", s, 2, ">= 2")?;
    check_range("d", d, 1, ">= 1")?;
    let cap = gamma_cap(d, s);
    let simplified = gamma_simplified(&Rational::from(d), s);
    let ep = gamma_cap_ep(d, s);
    let dp = gamma_cap_double_point(d, s);
    let g = gp_bound(d, s);
    let floor = pi_floor_with(d, s, GenusFloor::Strict);
    let mut t = Table::new("genus defect", &["quantity", "value"]);
    t.push(["gamma_cap", &cap.to_string()]);
    t.push(["gamma_ep", &ep.to_string()]);
    t.push(["gamma_double_point", &dp.to_string()]);
    t.push([
        "gamma_simplified",
        &simplified.as_ref().map_or("-".into(), Rational::to_string),
    ]);
    t.push(["gp_bound", &g.to_string()]);
    t.push(["pi_floor", &floor.to_string()]);
    let result = json!({
        "gamma_cap": cap,
        "gamma_ep": ep,
        "gamma_double_point": dp,
        "gamma_simplified": simplified,
        "gp_bound": g,
        "pi_floor": floor,
    });
    Ok(Report::new("gamma", result)
        .param("s", s)
        .param("d", d)
        .headline(format!("gamma_cap(d={d}, s={s}) = {cap}"))
        .table(t)
        .source("gamma_cap = min(d(s-1)^2/(2s), G - 1 - (d^2 - 5d)/10)")
        .into())
}

pub fn lemma6(s: i64) -> Result<Outcome> {
    let bound = lemma6_max_degree(s)?;
    let sub = (s == 4).then(lemma6_s4_subbranch_bound);
    let mut t = Table::new(
        "plane-curve threshold",
        &["s", "max degree", "s=4 sub-branch"],
    );
    t.push([s.to_string(), bound.to_string(), opt(sub)]);
    let mut report = Report::new(
        "lemma6",
        json!({ "s": s, "max_degree": bound, "sub_branch_bound": sub }),
    )
    .param("s", s)
    .headline(format!(
        "s={s}: plane curve of degree > d/2 possible only for d <= {bound}"
    ))
    .table(t)
    .source("G(d,s) >= (d/2 - 1)(d/2 - 2)/2");
    if let Some(sub) = sub {
        report = report.note(format!("s=4 sub-branch cubic gives d <= {sub}"));
    }
    Ok(report.into())
}

pub fn ep(sigma: i64) -> Result<Outcome> {
    let threshold = ep_degree_threshold(sigma)?;
    let mut t = Table::new("threshold", &["sigma", "threshold"]);
    t.push([sigma, threshold]);
    Ok(Report::new("ep", json!({ "sigma": sigma, "threshold": threshold }))
        .param("sigma", sigma)
        .headline(format!("sigma={sigma}: surfaces of degree > {threshold} lie on a hypersurface of degree < sigma"))
        .table(t)
        .source("Prop 2: floor(5(sigma+1)(sigma-2)/(sigma-4))")
        .into())
}

pub fn gin_sporadic(ideal: &MonomialIdeal) -> Result<Outcome> {
    let profile = sporadic_zeros(ideal)?;
    let saturation = saturate_restrict(ideal)?;
    let hilbert = hilbert_genus(ideal).ok();
    let eq3 = eq3_crosscheck(ideal).ok();
    let mut t = Table::new("sporadic zeros", &["degree", "zeros"]);
    for (deg, n) in profile.counts() {
        t.push([deg, n]);
    }
    let headline = match &hilbert {
        Some(h) => format!(
            "{ideal}: {} sporadic zeros; d={} pi={}",
            profile.total(),
            h.d,
            h.pi
        ),
        None => format!("{ideal}: {} sporadic zeros", profile.total()),
    };
    let mut report = Report::new(
        "gin sporadic",
        json!({
            "ideal": ideal.to_string(),
            "generators": ideal.generators(),
            "borel_fixed": true,
            "sporadic": profile,
            "sporadic_total": profile.total(),
            "saturation": saturation.to_string(),
            "hilbert": hilbert,
            "eq3": eq3,
        }),
    )
    .param("ideal", ideal.to_string())
    .headline(headline)
    .table(t)
    .note(format!("saturation: {saturation}"))
    .source("Eq(3): pi = 1 + genus_sum(lambda) - sum_t alpha_t");
    match &eq3 {
        Some(r) => {
            report = report.note(format!(
                "genus formula {} (Hilbert {}, formula {})",
                if r.holds { "holds" } else { "FAILS" },
                r.hilbert.pi,
                r.formula_pi
            ))
        }
        None => report = report.note("genus formula not applicable (saturation is not a staircase or Hilbert polynomial not linear)"),
    }
    Ok(report.into())
}

pub fn gin_oracle(trials: usize, seed: u64) -> Result<Outcome> {
    let rep = run_oracle(trials, seed);
    let mut summary = Table::new("oracle", &["trials", "seed", "lifts", "failures"]);
    summary.push([
        trials.to_string(),
        seed.to_string(),
        rep.total_lifts.to_string(),
        rep.failures.len().to_string(),
    ]);
    let mut failures = Table::new("failures", &["trial", "ideal", "reason"]);
    for f in &rep.failures {
        failures.push([f.trial.to_string(), f.ideal.to_string(), f.reason.clone()]);
    }
    let passed = rep.passed();
    let mut payload = serde_json::to_value(&rep).expect("oracle report serializes");
    payload["failure_count"] = json!(rep.failures.len());
    let mut report = Report::new("gin oracle", payload)
        .param("trials", trials)
        .param("seed", seed)
        .headline(format!(
            "{}: {} trials, {} lifts, {} failures",
            if passed { "PASS" } else { "FAIL" },
            trials,
            rep.total_lifts,
            rep.failures.len()
        ))
        .table(summary)
        .source("Eq(3) checked against the Hilbert polynomial of each lifted staircase ideal");
    if !passed {
        report = report.table(failures);
    }
    Ok(Outcome {
        report,
        exit: if passed { 0 } else { 1 },
    })
}
